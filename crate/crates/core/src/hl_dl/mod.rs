//! Binary strings starting with `0` versus tuples of positive integers.
//!
//! A string is cut into maximal constant blocks; its weight is the number of
//! blocks and its block tuple lists their lengths. For fixed weight `n` this
//! is an order isomorphism between the subsequence order `⊑` and the
//! componentwise order on `ℕ₊ⁿ`, which lets good pairs be transported between
//! Higman's lemma for two letters and Dickson's lemma.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::orders::{find_good_pair_by, higman_by};
use crate::{Error, Result};

pub mod claims;

/// A nonempty string over `{0, 1}` whose first letter is `0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryString01(Vec<u8>);

impl BinaryString01 {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if letters.first() != Some(&0) {
            return Err(Error::Domain("binary string must be nonempty and start with 0"));
        }
        if letters.iter().any(|&b| b > 1) {
            return Err(Error::Domain("binary string letters are 0 and 1"));
        }
        Ok(BinaryString01(letters))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let letters = text
            .trim()
            .bytes()
            .map(|c| match c {
                b'0' => Ok(0),
                b'1' => Ok(1),
                _ => Err(Error::Domain("binary string letters are 0 and 1")),
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::new(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Every string of length `1..=max_len`, shortest first, then
    /// lexicographically.
    pub fn all_up_to(max_len: usize) -> Vec<BinaryString01> {
        let mut out = Vec::new();
        for len in 1..=max_len {
            for bits in 0u64..(1 << (len - 1)) {
                let letters = (0..len).map(|i| if i == 0 { 0 } else { ((bits >> (len - 1 - i)) & 1) as u8 }).collect();
                out.push(BinaryString01(letters));
            }
        }
        out
    }
}

impl fmt::Display for BinaryString01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect();
        f.write_str(&s)
    }
}

/// A nonempty tuple of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PosTuple(Vec<u64>);

impl PosTuple {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain("tuple must be nonempty"));
        }
        if entries.contains(&0) {
            return Err(Error::Domain("tuple entries must be positive"));
        }
        Ok(PosTuple(entries))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }

    /// Componentwise `≤`; tuples of different width are incomparable.
    pub fn leq(&self, other: &PosTuple) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Every width-`n` tuple with entries in `1..=max_entry`, lexicographic.
    pub fn all(n: usize, max_entry: u64) -> Vec<PosTuple> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u64>| {
                    (1..=max_entry).map(move |k| {
                        let mut t = prefix.clone();
                        t.push(k);
                        t
                    })
                })
                .collect();
        }
        out.into_iter().map(PosTuple).collect()
    }
}

impl fmt::Display for PosTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}

pub fn last_letter(w: &BinaryString01) -> u8 {
    *w.0.last().expect("nonempty")
}

/// Number of maximal constant blocks.
pub fn weight(w: &BinaryString01) -> usize {
    1 + w.0.windows(2).filter(|p| p[0] != p[1]).count()
}

/// Block lengths, left to right.
pub fn to_tuple(w: &BinaryString01) -> PosTuple {
    let mut blocks = vec![1u64];
    for p in w.0.windows(2) {
        if p[0] == p[1] {
            *blocks.last_mut().expect("nonempty") += 1;
        } else {
            blocks.push(1);
        }
    }
    PosTuple(blocks)
}

/// The string with alternating blocks, starting at `0`, of the given lengths.
pub fn from_tuple(t: &PosTuple) -> BinaryString01 {
    let mut letters = Vec::new();
    for (i, &k) in t.0.iter().enumerate() {
        letters.extend(core::iter::repeat_n((i % 2) as u8, k as usize));
    }
    BinaryString01(letters)
}

/// Pad with `1`s or truncate to width exactly `n`.
pub fn normalize(t: &PosTuple, n: usize) -> Result<PosTuple> {
    if n == 0 {
        return Err(Error::Domain("normalized width must be positive"));
    }
    let mut e = t.0.clone();
    e.resize(n, 1);
    Ok(PosTuple(e))
}

/// `u!_n`: the weight-`n` string whose blocks are `u`'s first `n` blocks,
/// padded with length-1 blocks.
pub fn bang(u: &BinaryString01, n: usize) -> Result<BinaryString01> {
    Ok(from_tuple(&normalize(&to_tuple(u), n)?))
}

/// Letter-exact subsequence test `v ⊑ w`.
pub fn subseq_embed(v: &BinaryString01, w: &BinaryString01) -> bool {
    higman_by(&v.0, &w.0, |a, b| a == b)
}

/// `0101…01` of length `2n`.
pub fn alternating(n: usize) -> BinaryString01 {
    BinaryString01((0..2 * n).map(|i| (i % 2) as u8).collect())
}

/// The brute-force good-pair scanner for `⊑`.
pub fn scan_hl(xs: &[BinaryString01]) -> Option<(usize, usize)> {
    find_good_pair_by(xs, subseq_embed)
}

/// The brute-force good-pair scanner for the product order.
pub fn scan_dl(ts: &[PosTuple]) -> Option<(usize, usize)> {
    find_good_pair_by(ts, PosTuple::leq)
}

/// A good pair for `⊑`, obtained from a Dickson oracle.
///
/// With `n = 2·|xs[0]|`, each string becomes the `(n+1)`-tuple
/// `F_n(x!_n) ++ (Φ(x))`. For the oracle's pair `k < l`: if
/// `n < Φ(xs[l])`, the alternating-word argument gives `xs[0] ⊑ xs[l]`;
/// otherwise the weight bound gives `xs[k] ⊑ xs[l]`.
pub fn good_pair_via_dl(
    xs: &[BinaryString01],
    mut dl_oracle: impl FnMut(&[PosTuple]) -> Option<(usize, usize)>,
) -> Result<(usize, usize)> {
    let first = xs.first().ok_or(Error::Domain("sequence must be nonempty"))?;
    let n = 2 * first.len();
    let tuples: Vec<PosTuple> = xs
        .iter()
        .map(|x| {
            let mut e = to_tuple(&bang(x, n)?).0;
            e.push(weight(x) as u64);
            Ok(PosTuple(e))
        })
        .collect::<Result<_>>()?;
    let (k, l) = dl_oracle(&tuples).ok_or(Error::SearchExhausted)?;
    if !(k < l && l < xs.len() && tuples[k].leq(&tuples[l])) {
        return Err(Error::OracleRejected);
    }
    let pair = if n < weight(&xs[l]) { (0, l) } else { (k, l) };
    debug_assert!(subseq_embed(&xs[pair.0], &xs[pair.1]));
    Ok(pair)
}

/// A good pair for the product order on width-`n` tuples, obtained from a
/// Higman oracle on the corresponding weight-`n` strings.
pub fn good_pair_via_hl(
    ts: &[PosTuple],
    mut hl_oracle: impl FnMut(&[BinaryString01]) -> Option<(usize, usize)>,
) -> Result<(usize, usize)> {
    let n = ts.first().ok_or(Error::Domain("sequence must be nonempty"))?.width();
    if ts.iter().any(|t| t.width() != n) {
        return Err(Error::Domain("all tuples must have the same width"));
    }
    let strings: Vec<BinaryString01> = ts.iter().map(from_tuple).collect();
    let (k, l) = hl_oracle(&strings).ok_or(Error::SearchExhausted)?;
    if !(k < l && l < ts.len() && subseq_embed(&strings[k], &strings[l])) {
        return Err(Error::OracleRejected);
    }
    let (a, b) = (to_tuple(&strings[k]), to_tuple(&strings[l]));
    debug_assert!(a.leq(&b));
    Ok((k, l))
}
