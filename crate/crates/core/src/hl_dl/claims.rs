//! Exhaustive checks of the four translation lemmas over bounded universes.
//!
//! Each check enumerates every instance up to the given bounds and reports
//! how many it examined and how many failed, with the first failure spelled
//! out. The printed length bullet of the second lemma (`Φ(u) < n` implies
//! `u!_n` is shorter than `u`) does not hold: padding adds blocks and so
//! lengthens the string. It is checked as printed and reported separately,
//! next to the direction the construction actually satisfies.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{alternating, bang, from_tuple, normalize, subseq_embed, to_tuple, weight, BinaryString01, PosTuple};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    pub name: &'static str,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl ClaimReport {
    fn new(name: &'static str) -> Self {
        ClaimReport { name, checked: 0, failures: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Bounds for [`run_all`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClaimBounds {
    /// Longest string enumerated.
    pub max_len: usize,
    /// Largest target weight `n`.
    pub max_n: usize,
    /// Widest tuple in the tuple-side check.
    pub max_width: usize,
    /// Largest tuple entry in the tuple-side check.
    pub max_entry: u64,
}

impl Default for ClaimBounds {
    fn default() -> Self {
        ClaimBounds { max_len: 8, max_n: 6, max_width: 4, max_entry: 4 }
    }
}

/// Block tuples of equal weight compare exactly when the strings do, and
/// `from_tuple` is a bijection onto each weight class.
pub fn claim1(bounds: &ClaimBounds) -> ClaimReport {
    let mut r = ClaimReport::new("claim1-order-isomorphism");
    for n in 1..=bounds.max_width {
        let tuples = PosTuple::all(n, bounds.max_entry);
        for t in &tuples {
            let w = from_tuple(t);
            r.record(weight(&w) == n && &to_tuple(&w) == t, || format!("round trip fails at {t}"));
        }
        // surjectivity: every weight-n string with blocks <= max_entry is hit
        let image = BinaryString01::all_up_to(n * bounds.max_entry as usize)
            .into_iter()
            .filter(|w| weight(w) == n && to_tuple(w).entries().iter().all(|&k| k <= bounds.max_entry))
            .count();
        r.record(image == tuples.len(), || format!("weight {n}: {image} strings for {} tuples", tuples.len()));
        for a in &tuples {
            for b in &tuples {
                let (v, w) = (from_tuple(a), from_tuple(b));
                r.record(subseq_embed(&v, &w) == a.leq(b), || format!("{a} vs {b}"));
            }
        }
    }
    let strings = BinaryString01::all_up_to(bounds.max_len);
    for v in &strings {
        for w in strings.iter().filter(|w| weight(w) == weight(v)) {
            r.record(subseq_embed(v, w) == to_tuple(v).leq(&to_tuple(w)), || format!("{v} vs {w}"));
        }
    }
    r
}

/// `Φ(u!_n) = n`, `Φ(u) = n ⇒ u!_n = u`, and `G_n(F(u)) = F_n(u!_n)`, plus
/// the length behaviour the construction satisfies: padding lengthens by
/// `n − Φ(u)`, truncation shortens.
pub fn claim2(bounds: &ClaimBounds) -> ClaimReport {
    let mut r = ClaimReport::new("claim2-normalization");
    for u in BinaryString01::all_up_to(bounds.max_len) {
        let wu = weight(&u);
        for n in 1..=bounds.max_n {
            let b = bang(&u, n).expect("n >= 1");
            r.record(weight(&b) == n, || format!("weight of {u}!_{n} = {b}"));
            if wu == n {
                r.record(b == u, || format!("{u}!_{n} = {b} differs"));
            }
            let normalized = normalize(&to_tuple(&u), n).expect("n >= 1");
            r.record(normalized == to_tuple(&b), || format!("G_{n}(F({u})) differs from F({b})"));
            let ok = match wu.cmp(&n) {
                core::cmp::Ordering::Less => b.len() == u.len() + (n - wu),
                core::cmp::Ordering::Greater => b.len() < u.len(),
                core::cmp::Ordering::Equal => b.len() == u.len(),
            };
            r.record(ok, || format!("length of {u}!_{n} = {b}"));
        }
    }
    r
}

/// The printed length bullet `Φ(u) < n ⇒ |u!_n| < |u|`, checked literally.
///
/// Every instance with `Φ(u) < n` fails; the first failure in enumeration
/// order is `u = 0, n = 2`.
pub fn claim2_printed_length_bullet(
    bounds: &ClaimBounds,
) -> (ClaimReport, Vec<(BinaryString01, usize, BinaryString01)>) {
    let mut r = ClaimReport::new("claim2-printed-length-bullet");
    let mut witnesses = Vec::new();
    for u in BinaryString01::all_up_to(bounds.max_len) {
        for n in (weight(&u) + 1)..=bounds.max_n {
            let b = bang(&u, n).expect("n >= 1");
            let ok = b.len() < u.len();
            r.record(ok, || format!("u = {u}, n = {n}: u!_n = {b} has length {} > {}", b.len(), u.len()));
            if !ok {
                witnesses.push((u.clone(), n, b));
            }
        }
    }
    (r, witnesses)
}

/// `2·|v| ≤ Φ(w) ⇒ v ⊑ w`, also checking the intermediate word
/// `u = 0101…01` of length `2|v|`: `v ⊑ u ⊑ w`.
pub fn claim3(bounds: &ClaimBounds) -> ClaimReport {
    let mut r = ClaimReport::new("claim3-heavy-strings");
    let strings = BinaryString01::all_up_to(bounds.max_len);
    for v in &strings {
        let u = alternating(v.len());
        for w in strings.iter().filter(|w| 2 * v.len() <= weight(w)) {
            r.record(subseq_embed(v, &u) && subseq_embed(&u, w) && subseq_embed(v, w), || format!("{v} vs {w}"));
        }
    }
    r
}

/// `Φ(v) ≤ Φ(w) ≤ n ∧ v!_n ⊑ w!_n ⇒ v ⊑ w`.
pub fn claim4(bounds: &ClaimBounds) -> ClaimReport {
    let mut r = ClaimReport::new("claim4-normalized-reflection");
    let strings = BinaryString01::all_up_to(bounds.max_len);
    for n in 1..=bounds.max_n {
        let banged: Vec<_> = strings.iter().map(|s| bang(s, n).expect("n >= 1")).collect();
        for (i, v) in strings.iter().enumerate() {
            for (j, w) in strings.iter().enumerate() {
                if weight(v) <= weight(w) && weight(w) <= n && subseq_embed(&banged[i], &banged[j]) {
                    r.record(subseq_embed(v, w), || format!("v = {v}, w = {w}, n = {n}"));
                }
            }
        }
    }
    r
}

/// Runs all claim checks. The printed length bullet is returned separately
/// because it is expected to fail.
pub fn run_all(bounds: &ClaimBounds) -> (Vec<ClaimReport>, ClaimReport) {
    let reports = alloc::vec![claim1(bounds), claim2(bounds), claim3(bounds), claim4(bounds)];
    (reports, claim2_printed_length_bullet(bounds).0)
}
