//! Ordinals below ε₀ in hereditary Cantor normal form.
//!
//! Fundamental sequences use the standard assignment on the last summand
//! `ω^e·c` of `α = β + ω^e·c`:
//!
//! - `e = 0`: `α[i] = β + (c − 1)`
//! - `e = γ + 1`: `α[i] = β + ω^e·(c − 1) + ω^γ·i`
//! - `e` limit: `α[i] = β + ω^e·(c − 1) + ω^{e[i]}`
//!
//! Under this assignment `G_α(n)` is `α` with `ω` replaced by `n`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::budget::Meter;
use crate::{Budget, Error, Result};

/// `Σ ω^{eᵢ}·cᵢ` with strictly decreasing exponents and positive coefficients.
/// The empty sum is `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfOrdinal {
    terms: Vec<(CnfOrdinal, BigUint)>,
}

impl CnfOrdinal {
    pub fn zero() -> Self {
        CnfOrdinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::finite(1u32)
    }

    pub fn finite(n: impl Into<BigUint>) -> Self {
        let n = n.into();
        if n.is_zero() {
            Self::zero()
        } else {
            CnfOrdinal { terms: vec![(Self::zero(), n)] }
        }
    }

    pub fn omega() -> Self {
        Self::omega_pow(Self::one())
    }

    /// `ω^e`.
    pub fn omega_pow(e: CnfOrdinal) -> Self {
        CnfOrdinal { terms: vec![(e, BigUint::one())] }
    }

    /// `ω^e·c`.
    pub fn monomial(e: CnfOrdinal, c: impl Into<BigUint>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            CnfOrdinal { terms: vec![(e, c)] }
        }
    }

    /// Builds from summands, checking the normal-form invariants.
    pub fn from_terms(terms: Vec<(CnfOrdinal, BigUint)>) -> Result<Self> {
        if terms.iter().any(|(_, c)| c.is_zero()) {
            return Err(Error::Domain("coefficients must be positive"));
        }
        if terms.windows(2).any(|w| w[0].0 <= w[1].0) {
            return Err(Error::Domain("exponents must strictly decrease"));
        }
        Ok(CnfOrdinal { terms })
    }

    pub fn terms(&self) -> &[(CnfOrdinal, BigUint)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `α = β + 1` for some `β`.
    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|(e, _)| e.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    pub fn as_finite(&self) -> Option<BigUint> {
        match self.terms.as_slice() {
            [] => Some(BigUint::zero()),
            [(e, c)] if e.is_zero() => Some(c.clone()),
            _ => None,
        }
    }

    /// `α + 1`.
    pub fn succ(&self) -> Self {
        let mut terms = self.terms.clone();
        match terms.last_mut() {
            Some((e, c)) if e.is_zero() => *c += 1u32,
            _ => terms.push((Self::zero(), BigUint::one())),
        }
        CnfOrdinal { terms }
    }

    fn pred_of_successor(&self) -> Self {
        debug_assert!(self.is_successor());
        let mut terms = self.terms.clone();
        let (_, c) = terms.last_mut().expect("successor");
        *c -= 1u32;
        if c.is_zero() {
            terms.pop();
        }
        CnfOrdinal { terms }
    }

    /// Number of nodes in the hereditary representation.
    pub fn size(&self) -> usize {
        1 + self.terms.iter().map(|(e, _)| e.size()).sum::<usize>()
    }
}

impl Ord for CnfOrdinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for ((ea, ca), (eb, cb)) in self.terms.iter().zip(&other.terms) {
            match ea.cmp(eb).then_with(|| ca.cmp(cb)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for CnfOrdinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical text: `0`, or summands joined by `+`, each `n`, `w`, `w*c`,
/// `w^(e)` or `w^(e)*c`.
impl fmt::Display for CnfOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if e.is_zero() {
                write!(f, "{c}")?;
                continue;
            }
            if e.as_finite().is_some_and(|n| n.is_one()) {
                f.write_str("w")?;
            } else {
                write!(f, "w^({e})")?;
            }
            if !c.is_one() {
                write!(f, "*{c}")?;
            }
        }
        Ok(())
    }
}

pub fn compare(a: &CnfOrdinal, b: &CnfOrdinal) -> Ordering {
    a.cmp(b)
}

/// Hessenberg sum: merge summands by exponent, adding coefficients.
pub fn natural_sum(a: &CnfOrdinal, b: &CnfOrdinal) -> CnfOrdinal {
    let mut terms = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() && j < b.terms.len() {
        let ((ea, ca), (eb, cb)) = (&a.terms[i], &b.terms[j]);
        match ea.cmp(eb) {
            Ordering::Greater => {
                terms.push((ea.clone(), ca.clone()));
                i += 1;
            }
            Ordering::Less => {
                terms.push((eb.clone(), cb.clone()));
                j += 1;
            }
            Ordering::Equal => {
                terms.push((ea.clone(), ca + cb));
                i += 1;
                j += 1;
            }
        }
    }
    terms.extend_from_slice(&a.terms[i..]);
    terms.extend_from_slice(&b.terms[j..]);
    CnfOrdinal { terms }
}

/// Largest coefficient anywhere in the hereditary representation; `0` for `0`.
pub fn max_coefficient(a: &CnfOrdinal) -> BigUint {
    a.terms.iter().map(|(e, c)| core::cmp::max(c.clone(), max_coefficient(e))).max().unwrap_or_default()
}

/// `α[i]` under the standard assignment.
pub fn fundamental_seq(a: &CnfOrdinal, i: &BigUint) -> Result<CnfOrdinal> {
    let (e, c) = a.terms.last().ok_or(Error::Domain("zero has no fundamental sequence"))?;
    let mut terms = a.terms[..a.terms.len() - 1].to_vec();
    if c > &BigUint::one() {
        terms.push((e.clone(), c - 1u32));
    }
    if e.is_zero() {
        // successor: drop the last unit
    } else if e.is_successor() {
        if !i.is_zero() {
            terms.push((e.pred_of_successor(), i.clone()));
        }
    } else {
        terms.push((fundamental_seq(e, i)?, BigUint::one()));
    }
    Ok(CnfOrdinal { terms })
}

/// `G_α(n)`: `G_0 = 0`, `G_{α+1} = G_α + 1`, `G_λ(n) = G_{λ[n]}(n)`.
///
/// Runs of unfolding steps with a fixed outcome are taken at once:
/// `G_{β+γ} = G_β + G_γ` for a normal-form split, `G_{ω^e·c} = c·G_{ω^e}`,
/// and `G_{ω^{γ+m}}(n) = n^m·G_{ω^γ}(n)`. Each remaining limit step costs one
/// unit of the step budget.
pub fn slow_growing(a: &CnfOrdinal, n: &BigUint, budget: &Budget) -> Result<BigUint> {
    let mut meter = Meter::new(budget);
    slow_growing_metered(a, n, budget, &mut meter)
}

fn slow_growing_metered(a: &CnfOrdinal, n: &BigUint, budget: &Budget, meter: &mut Meter) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for (e, c) in &a.terms {
        total += c * power_value(e, n, budget, meter)?;
        budget.check(&total)?;
    }
    Ok(total)
}

/// `G_{ω^e}(n)`.
fn power_value(e: &CnfOrdinal, n: &BigUint, budget: &Budget, meter: &mut Meter) -> Result<BigUint> {
    let mut e = e.clone();
    let mut factor = BigUint::one();
    loop {
        meter.tick()?;
        if e.is_zero() {
            return Ok(factor);
        }
        if e.is_successor() {
            // ω^{γ+m}[n] unfolds m times to ω^γ·n^m
            let (_, m) = e.terms.last().expect("successor");
            factor *= budget.pow(n, m)?;
            budget.check(&factor)?;
            e.terms.pop();
        } else {
            e = fundamental_seq(&e, n)?;
        }
        if factor.is_zero() {
            return Ok(factor);
        }
    }
}

/// Rewrites `α` so every coefficient is below `base` while `G_α(base)` is
/// unchanged. On such forms `G_·(base)` is strictly monotone.
pub fn normalize_at_base(a: &CnfOrdinal, base: &BigUint) -> Result<CnfOrdinal> {
    if base < &BigUint::from(2u32) {
        return Err(Error::Domain("base must be at least 2"));
    }
    let mut pending: Vec<(CnfOrdinal, BigUint)> =
        a.terms.iter().map(|(e, c)| Ok((normalize_at_base(e, base)?, c.clone()))).collect::<Result<_>>()?;
    loop {
        pending.sort_by(|x, y| y.0.cmp(&x.0));
        let mut merged: Vec<(CnfOrdinal, BigUint)> = Vec::with_capacity(pending.len());
        for (e, c) in pending.drain(..) {
            match merged.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => merged.push((e, c)),
            }
        }
        let Some(pos) = merged.iter().position(|(_, c)| c >= base) else {
            return Ok(CnfOrdinal { terms: merged });
        };
        let (e, c) = merged.remove(pos);
        let (carry, rest) = (&c / base, &c % base);
        if !rest.is_zero() {
            merged.push((e.clone(), rest));
        }
        // ω^e·base has the value of ω^{e+1}
        merged.push((normalize_at_base(&e.succ(), base)?, carry));
        pending = merged;
    }
}

/// Compares `G_a(base)` with `G_b(base)` without expanding either value.
pub fn compare_at_base(a: &CnfOrdinal, b: &CnfOrdinal, base: &BigUint) -> Result<Ordering> {
    Ok(normalize_at_base(a, base)?.cmp(&normalize_at_base(b, base)?))
}

/// `ω_0 = 1`, `ω_{k+1} = ω^{ω_k}`.
pub fn omega_tower(k: usize) -> CnfOrdinal {
    (0..k).fold(CnfOrdinal::one(), |acc, _| CnfOrdinal::omega_pow(acc))
}

/// Height and top entry of a tower of twos.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TowerSpec {
    pub k: u32,
    pub l: u64,
}

/// `2_0(l) = l`, `2_{k+1}(l) = 2^{2_k(l)}`.
pub fn two_tower(spec: TowerSpec, budget: &Budget) -> Result<BigUint> {
    two_tower_over(spec.k, BigUint::from(spec.l), budget)
}

/// [`two_tower`] with an arbitrary-precision top entry.
pub fn two_tower_over(k: u32, top: BigUint, budget: &Budget) -> Result<BigUint> {
    let mut v = top;
    for _ in 0..k {
        let e = v.to_u64().filter(|&e| e < budget.max_bits).ok_or(Error::BudgetExceeded)?;
        v = BigUint::one() << e;
    }
    budget.check(&v)?;
    Ok(v)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DescentVerdict {
    /// Some `|αᵢ|` exceeds `2_K(i)`.
    HypothesisFailed { index: usize },
    /// The least `j < M` with `α_j ≤ α_{j+1}`.
    Witness { j: usize },
    /// The hypothesis holds and the sequence strictly descends throughout.
    BadSequence { len: usize },
}

/// Checks the bounded-coefficient descent assertion on `α_0…α_M`.
pub fn descent_check(k: u32, alphas: &[CnfOrdinal], budget: &Budget) -> Result<DescentVerdict> {
    for (i, a) in alphas.iter().enumerate() {
        let bound = two_tower(TowerSpec { k, l: i as u64 }, budget)?;
        if max_coefficient(a) > bound {
            return Ok(DescentVerdict::HypothesisFailed { index: i });
        }
    }
    Ok(match alphas.windows(2).position(|w| w[0] <= w[1]) {
        Some(j) => DescentVerdict::Witness { j },
        None => DescentVerdict::BadSequence { len: alphas.len() },
    })
}

/// `α_0 = start`, `α_{i+1} = α_i[i]`, up to and including the first `0`.
pub fn canonical_descent(start: &CnfOrdinal, max_steps: usize) -> Result<Vec<CnfOrdinal>> {
    let mut seq = vec![start.clone()];
    while !seq.last().expect("nonempty").is_zero() {
        if seq.len() > max_steps {
            return Err(Error::BudgetExceeded);
        }
        let i = BigUint::from(seq.len() - 1);
        let next = fundamental_seq(seq.last().expect("nonempty"), &i)?;
        seq.push(next);
    }
    Ok(seq)
}
