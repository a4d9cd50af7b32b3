//! Exponential terms `0 | x^a + b` and the slow well-ordering check.
//!
//! A term is read two ways: as a number at an integer base `k`, and as an
//! ordinal below ε₀ by putting `x = ω` and reading `+` as the natural sum.
//! Terms are not normalized, so distinct terms can share a value.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::ordinals::{compare_at_base, natural_sum, two_tower, CnfOrdinal, TowerSpec};
use crate::search::{find_chain, SearchOutcome};
use crate::{Budget, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExpTerm {
    Zero,
    /// `x^exponent + rest`
    Node(Box<ExpTerm>, Box<ExpTerm>),
}

impl ExpTerm {
    pub fn node(exponent: ExpTerm, rest: ExpTerm) -> Self {
        ExpTerm::Node(Box::new(exponent), Box::new(rest))
    }

    /// `x^0 + 0`, the term with value 1 at every base.
    pub fn one() -> Self {
        ExpTerm::node(ExpTerm::Zero, ExpTerm::Zero)
    }

    pub fn size(&self) -> usize {
        match self {
            ExpTerm::Zero => 1,
            ExpTerm::Node(c, b) => 1 + c.size() + b.size(),
        }
    }
}

/// `0` or `x^(c)+(b)`.
impl fmt::Display for ExpTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpTerm::Zero => f.write_str("0"),
            ExpTerm::Node(c, b) => write!(f, "x^({c})+({b})"),
        }
    }
}

/// `a(k)`: `0(k) = 0`, `(x^c + b)(k) = k^{c(k)} + b(k)`.
pub fn eval_at(a: &ExpTerm, k: &BigUint, budget: &Budget) -> Result<BigUint> {
    match a {
        ExpTerm::Zero => Ok(BigUint::zero()),
        ExpTerm::Node(c, b) => {
            let head = budget.pow(k, &eval_at(c, k, budget)?)?;
            let v = head + eval_at(b, k, budget)?;
            budget.check(&v)?;
            Ok(v)
        }
    }
}

/// `a(ω)`.
pub fn to_ordinal(a: &ExpTerm) -> CnfOrdinal {
    match a {
        ExpTerm::Zero => CnfOrdinal::zero(),
        ExpTerm::Node(c, b) => natural_sum(&CnfOrdinal::omega_pow(to_ordinal(c)), &to_ordinal(b)),
    }
}

/// Compares `a(base)` with `b(base)`.
///
/// Bases below 2 are evaluated directly; larger bases go through the
/// hereditary base-`base` normal form of `a(ω)` and `b(ω)`, so the numbers
/// themselves are never built.
pub fn compare_at(a: &ExpTerm, b: &ExpTerm, base: &BigUint, budget: &Budget) -> Result<Ordering> {
    if base < &BigUint::from(2u32) {
        return Ok(eval_at(a, base, budget)?.cmp(&eval_at(b, base, budget)?));
    }
    compare_at_base(&to_ordinal(a), &to_ordinal(b), base)
}

/// Every term whose value at base 2 is at most `bound_at_2`, ordered by that
/// value; terms of equal value are ordered by the value of their exponent,
/// then by the positions of exponent and rest in this same listing.
pub fn enumerate_exp(bound_at_2: u64) -> Vec<ExpTerm> {
    enumerate_exp_capped(bound_at_2, usize::MAX).expect("uncapped")
}

/// [`enumerate_exp`], failing once more than `cap` terms would be produced.
pub fn enumerate_exp_capped(bound_at_2: u64, cap: usize) -> Result<Vec<ExpTerm>> {
    let bound = usize::try_from(bound_at_2).map_err(|_| Error::BudgetExceeded)?;
    let mut by_value: Vec<Vec<ExpTerm>> = vec![vec![ExpTerm::Zero]];
    let mut total = 1usize;
    for v in 1..=bound {
        let mut layer = Vec::new();
        let mut cv = 0usize;
        while cv < usize::BITS as usize && (1usize << cv) <= v {
            let rest = v - (1 << cv);
            for c in &by_value[cv] {
                for b in &by_value[rest] {
                    layer.push(ExpTerm::node(c.clone(), b.clone()));
                }
            }
            total += by_value[cv].len() * by_value[rest].len();
            if total > cap {
                return Err(Error::BudgetExceeded);
            }
            cv += 1;
        }
        by_value.push(layer);
    }
    Ok(by_value.into_iter().flatten().collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SwoVerdict {
    /// `a_index(2) > 2_K(index)`.
    HypothesisFailed { index: usize },
    /// The least `j < M` with `a_j(N) ≤ a_{j+1}(N)`, `N = 2_K(M)`.
    Witness { j: usize },
    /// The hypothesis holds and the values at `N` strictly decrease.
    Descending { len: usize },
}

/// Checks the slow well-ordering assertion on `a_0…a_M`.
pub fn swo_check(k: u32, terms: &[ExpTerm], budget: &Budget) -> Result<SwoVerdict> {
    let m = terms.len().checked_sub(1).ok_or(Error::Domain("sequence must be nonempty"))?;
    let two = BigUint::from(2u32);
    for (i, a) in terms.iter().enumerate() {
        let bound = two_tower(TowerSpec { k, l: i as u64 }, budget)?;
        if eval_at(a, &two, budget)? > bound {
            return Ok(SwoVerdict::HypothesisFailed { index: i });
        }
    }
    let base = two_tower(TowerSpec { k, l: m as u64 }, budget)?;
    for j in 0..m {
        if compare_at(&terms[j], &terms[j + 1], &base, budget)? != Ordering::Greater {
            return Ok(SwoVerdict::Witness { j });
        }
    }
    Ok(SwoVerdict::Descending { len: terms.len() })
}

/// Finds the least `M ≤ max_m` such that every `a_0…a_M` with
/// `a_i(2) ≤ 2_K(i)` has some `j < M` with `a_j(N) ≤ a_{j+1}(N)`.
///
/// For each `M` it looks for a counterexample, a sequence strictly
/// decreasing at base `N = 2_K(M)`, by depth-first search over the per-index
/// universes. `budget.max_steps` caps universe sizes.
pub fn swo_search_min_m(k: u32, max_m: usize, budget: &Budget) -> Result<SearchOutcome<Vec<ExpTerm>>> {
    let cap = usize::try_from(budget.max_steps).unwrap_or(usize::MAX);
    let mut universes: Vec<Vec<ExpTerm>> = Vec::new();
    let mut last = None;
    for m in 0..=max_m {
        while universes.len() <= m {
            let i = universes.len() as u64;
            let bound = two_tower(TowerSpec { k, l: i }, budget)?.to_u64().ok_or(Error::BudgetExceeded)?;
            universes.push(enumerate_exp_capped(bound, cap)?);
        }
        let base = two_tower(TowerSpec { k, l: m as u64 }, budget)?;
        let chain =
            find_chain(&universes[..=m], |cur, next| Ok(compare_at(next, cur, &base, budget)? == Ordering::Less))?;
        match chain {
            None => return Ok(SearchOutcome::Found(m)),
            Some(idx) => last = Some(idx.iter().enumerate().map(|(i, &t)| universes[i][t].clone()).collect()),
        }
    }
    Ok(SearchOutcome::Exhausted { last_counterexample: last })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinals::{max_coefficient, slow_growing};
    use alloc::string::ToString;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }
    fn x_pow(c: ExpTerm) -> ExpTerm {
        ExpTerm::node(c, ExpTerm::Zero)
    }

    #[test]
    fn eval_examples() {
        let b = Budget::default();
        assert_eq!(eval_at(&ExpTerm::Zero, &big(9), &b).unwrap(), big(0));
        assert_eq!(eval_at(&ExpTerm::one(), &big(2), &b).unwrap(), big(1));
        assert_eq!(eval_at(&x_pow(ExpTerm::one()), &big(3), &b).unwrap(), big(3));
        let tall = x_pow(x_pow(x_pow(x_pow(ExpTerm::one()))));
        assert_eq!(eval_at(&tall, &big(9), &Budget::new(64, 100)), Err(Error::BudgetExceeded));
    }

    #[test]
    fn ordinal_examples() {
        assert_eq!(to_ordinal(&ExpTerm::Zero), CnfOrdinal::zero());
        assert_eq!(to_ordinal(&ExpTerm::one()), CnfOrdinal::one());
        let t = ExpTerm::node(ExpTerm::one(), ExpTerm::one());
        assert_eq!(to_ordinal(&t).to_string(), "w+1");
        // natural sum puts the bigger summand first
        let t = ExpTerm::node(ExpTerm::Zero, x_pow(ExpTerm::one()));
        assert_eq!(to_ordinal(&t).to_string(), "w+1");
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_exp(0), vec![ExpTerm::Zero]);
        assert_eq!(enumerate_exp(1), vec![ExpTerm::Zero, ExpTerm::one()]);
        let two = enumerate_exp(2);
        assert_eq!(two[2..], [ExpTerm::node(ExpTerm::Zero, ExpTerm::one()), x_pow(ExpTerm::one())]);
        assert!(enumerate_exp_capped(16, 10).is_err());
    }

    /// Every term with at most `n` nodes, by structural recursion.
    fn by_size(n: usize) -> Vec<ExpTerm> {
        let mut sized: Vec<Vec<ExpTerm>> = vec![Vec::new(), vec![ExpTerm::Zero]];
        for s in 2..=n {
            let mut layer = Vec::new();
            for cs in 1..s - 1 {
                for c in &sized[cs] {
                    for b in &sized[s - 1 - cs] {
                        layer.push(ExpTerm::node(c.clone(), b.clone()));
                    }
                }
            }
            sized.push(layer);
        }
        sized.into_iter().flatten().collect()
    }

    #[test]
    fn enumeration_agrees_with_structural_filter() {
        let b = Budget::default();
        // a term of value v at base 2 has at most 2v + 1 nodes
        let mut structural: Vec<ExpTerm> =
            by_size(11).into_iter().filter(|t| eval_at(t, &big(2), &b).unwrap() <= big(5)).collect();
        let mut listed = enumerate_exp(5);
        structural.sort();
        listed.sort();
        assert_eq!(structural, listed);
    }

    #[test]
    fn bridge_and_bounds_on_small_terms() {
        let b = Budget::default();
        for e in by_size(9) {
            let v2 = eval_at(&e, &big(2), &b).unwrap();
            assert!(max_coefficient(&to_ordinal(&e)) <= v2);
            for k in 1..5u64 {
                let v = eval_at(&e, &big(k), &b).unwrap();
                assert_eq!(slow_growing(&to_ordinal(&e), &big(k), &b).unwrap(), v);
                assert!(v <= eval_at(&e, &big(k + 1), &b).unwrap());
            }
        }
    }

    #[test]
    fn compare_at_matches_exact_values() {
        let b = Budget::default();
        let u = enumerate_exp(6);
        for base in 1..5u64 {
            for s in &u {
                for t in &u {
                    let exact = eval_at(s, &big(base), &b).unwrap().cmp(&eval_at(t, &big(base), &b).unwrap());
                    assert_eq!(compare_at(s, t, &big(base), &b).unwrap(), exact);
                }
            }
        }
    }

    #[test]
    fn swo_check_examples() {
        let b = Budget::default();
        assert_eq!(swo_check(1, &[ExpTerm::Zero, ExpTerm::Zero], &b).unwrap(), SwoVerdict::Witness { j: 0 });
        assert_eq!(swo_check(1, &[ExpTerm::one(), ExpTerm::Zero], &b).unwrap(), SwoVerdict::Descending { len: 2 });
        assert_eq!(swo_check(1, &[ExpTerm::Zero], &b).unwrap(), SwoVerdict::Descending { len: 1 });
        // 2_1(0) = 1 < 2
        let two = x_pow(ExpTerm::one());
        assert_eq!(swo_check(1, &[two], &b).unwrap(), SwoVerdict::HypothesisFailed { index: 0 });
        assert!(swo_check(1, &[], &b).is_err());
    }

    #[test]
    fn swo_search_small_k() {
        let b = Budget::default();
        assert_eq!(swo_search_min_m(0, 4, &b).unwrap(), SearchOutcome::Found(1));
        assert!(matches!(swo_search_min_m(1, 0, &b).unwrap(), SearchOutcome::Exhausted { .. }));
    }
}
