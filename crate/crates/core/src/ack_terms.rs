//! Ackermannian terms `1 | (a+b) | A(a,b)`, their values, the relation
//! `≤_k`, and bounded checks of the `W(f)` and `W(t,f)` assertions.
//!
//! The base `k` of `A_a(k, b)` is not stored in a term; it is supplied at
//! evaluation time, so base change never alters structure.
//!
//! Two recurrence profiles are provided. [`Profile::Literal`] is
//!
//! ```text
//! A_1(k,b)     = b^k
//! A_{a+1}(k,1)   = A_a(k,a)^k
//! A_{a+1}(k,b+1) = A_a(k, A_{a+1}(k,b))^k
//! ```
//!
//! under which `A_a(k,b) = 1` for every `a ≥ 2`. [`Profile::Repaired`] uses
//! `A_1(k,b) = (b+1)^k` and is otherwise identical; it grows strictly.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::budget::Meter;
use crate::ordinals::two_tower_over;
use crate::search::{find_chain, SearchOutcome};
use crate::{Budget, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AckTerm {
    One,
    Plus(Box<AckTerm>, Box<AckTerm>),
    /// `A_index(k, arg)`.
    App(Box<AckTerm>, Box<AckTerm>),
}

impl AckTerm {
    pub fn plus(a: AckTerm, b: AckTerm) -> Self {
        AckTerm::Plus(Box::new(a), Box::new(b))
    }

    pub fn app(index: AckTerm, arg: AckTerm) -> Self {
        AckTerm::App(Box::new(index), Box::new(arg))
    }

    pub fn size(&self) -> usize {
        match self {
            AckTerm::One => 1,
            AckTerm::Plus(a, b) | AckTerm::App(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn leaves(&self) -> usize {
        self.size().div_ceil(2)
    }

    pub fn children(&self) -> Option<(&AckTerm, &AckTerm)> {
        match self {
            AckTerm::One => None,
            AckTerm::Plus(a, b) | AckTerm::App(a, b) => Some((a, b)),
        }
    }
}

impl fmt::Display for AckTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AckTerm::One => f.write_str("1"),
            AckTerm::Plus(a, b) => write!(f, "({a}+{b})"),
            AckTerm::App(a, b) => write!(f, "A({a},{b})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Profile {
    Literal,
    #[default]
    Repaired,
}

/// Evaluation state: fixed base and profile, an optional value ceiling and a
/// step meter.
///
/// The ceiling is honoured only under the repaired profile, where the value
/// of a term dominates every intermediate result computed for it; crossing
/// the ceiling then answers "above" without finishing the computation.
struct Evaluator<'a> {
    k: BigUint,
    profile: Profile,
    ceiling: Option<&'a BigUint>,
    budget: &'a Budget,
    meter: Meter,
}

impl<'a> Evaluator<'a> {
    fn new(k: u64, profile: Profile, ceiling: Option<&'a BigUint>, budget: &'a Budget) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("base k must be positive"));
        }
        let ceiling = ceiling.filter(|_| profile == Profile::Repaired);
        Ok(Evaluator { k: BigUint::from(k), profile, ceiling, budget, meter: Meter::new(budget) })
    }

    fn above(&self, v: &BigUint) -> bool {
        self.ceiling.is_some_and(|c| v > c)
    }

    /// `base^k`, or `None` once it provably passes the ceiling.
    fn pow_k(&self, base: &BigUint) -> Result<Option<BigUint>> {
        if let Some(c) = self.ceiling {
            if base > c {
                return Ok(None);
            }
            let lower = (base.bits().max(1) - 1).saturating_mul(self.k.to_u64().unwrap_or(u64::MAX));
            if lower >= c.bits() && !base.is_one() {
                return Ok(None);
            }
        }
        let v = self.budget.pow(base, &self.k)?;
        Ok(if self.above(&v) { None } else { Some(v) })
    }

    fn base_case(&self, b: &BigUint) -> Result<Option<BigUint>> {
        match self.profile {
            Profile::Literal => self.pow_k(b),
            Profile::Repaired => self.pow_k(&(b + 1u32)),
        }
    }

    /// `A_a(k, b)`, unwinding the recurrence on an explicit stack.
    fn ack(&mut self, a: &BigUint, b: &BigUint) -> Result<Option<BigUint>> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::Domain("A_a(k,b) needs a, b >= 1"));
        }
        if self.above(a) || self.above(b) {
            return Ok(None);
        }
        let to_count =
            |x: &BigUint, budget: &Budget| x.to_u64().filter(|&n| n <= budget.max_steps).ok_or(Error::BudgetExceeded);
        // (level, iterations still to run at that level)
        let mut frames: Vec<(u64, u64)> = Vec::new();
        let mut call = Some((to_count(a, self.budget)?, b.clone()));
        let mut ret: Option<BigUint> = None;
        loop {
            if let Some((level, arg)) = call.take() {
                self.meter.tick()?;
                if level == 1 {
                    match self.base_case(&arg)? {
                        Some(v) => ret = Some(v),
                        None => return Ok(None),
                    }
                } else {
                    frames.push((level, to_count(&(arg - 1u32), self.budget)?));
                    call = Some((level - 1, BigUint::from(level - 1)));
                }
                continue;
            }
            let r = ret.take().expect("a call always returns");
            let Some((level, left)) = frames.pop() else {
                return Ok(Some(r));
            };
            let Some(v) = self.pow_k(&r)? else {
                return Ok(None);
            };
            if left == 0 {
                ret = Some(v);
            } else {
                frames.push((level, left - 1));
                call = Some((level - 1, v));
            }
        }
    }

    fn value(&mut self, t: &AckTerm) -> Result<Option<BigUint>> {
        self.meter.tick()?;
        match t {
            AckTerm::One => Ok(Some(BigUint::one())),
            AckTerm::Plus(a, b) => {
                let (Some(x), Some(y)) = (self.value(a)?, self.value(b)?) else {
                    return Ok(None);
                };
                let v = x + y;
                self.budget.check(&v)?;
                Ok(if self.above(&v) { None } else { Some(v) })
            }
            AckTerm::App(a, b) => {
                let (Some(x), Some(y)) = (self.value(a)?, self.value(b)?) else {
                    return Ok(None);
                };
                self.ack(&x, &y)
            }
        }
    }
}

/// `A_a(k, b)` under `profile`.
pub fn ack_eval(profile: Profile, a: &BigUint, k: u64, b: &BigUint, budget: &Budget) -> Result<BigUint> {
    let mut ev = Evaluator::new(k, profile, None, budget)?;
    Ok(ev.ack(a, b)?.expect("no ceiling"))
}

/// `A_ω(k, b) = A_b(k, b)`.
pub fn ack_omega(profile: Profile, k: u64, b: &BigUint, budget: &Budget) -> Result<BigUint> {
    ack_eval(profile, b, k, b, budget)
}

/// `A_ω(k) = A_ω(k, k)`.
pub fn ack_omega_diag(profile: Profile, k: u64, budget: &Budget) -> Result<BigUint> {
    ack_omega(profile, k, &BigUint::from(k), budget)
}

/// `t^ℕ` at base `k`.
pub fn term_value(t: &AckTerm, k: u64, profile: Profile, budget: &Budget) -> Result<BigUint> {
    let mut ev = Evaluator::new(k, profile, None, budget)?;
    Ok(ev.value(t)?.expect("no ceiling"))
}

/// Whether `t^ℕ ≤ ceiling` at base `k`. Under the repaired profile this stops
/// as soon as the ceiling is passed, so it answers for terms whose value is
/// far beyond the bit budget.
pub fn value_at_most(t: &AckTerm, k: u64, profile: Profile, ceiling: &BigUint, budget: &Budget) -> Result<bool> {
    let mut ev = Evaluator::new(k, profile, Some(ceiling), budget)?;
    Ok(ev.value(t)?.is_some_and(|v| &v <= ceiling))
}

/// A term read in `T_k` for a definite base.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasedTerm {
    pub term: AckTerm,
    pub k: u64,
}

impl BasedTerm {
    pub fn value(&self, profile: Profile, budget: &Budget) -> Result<BigUint> {
        term_value(&self.term, self.k, profile, budget)
    }
}

/// `t[k := h]`.
pub fn base_change(t: &BasedTerm, h: u64) -> BasedTerm {
    BasedTerm { term: t.term.clone(), k: h }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LeqMode {
    /// Exactly the three printed rules; holds iff the left side is `1`.
    Literal,
    /// The printed rules plus congruence for `+` and `A`.
    #[default]
    Embedding,
}

/// Post-order arena of a term.
struct Flat {
    /// `None` for `1`, else (is_app, left, right).
    nodes: Vec<Option<(bool, usize, usize)>>,
}

impl Flat {
    fn new(t: &AckTerm) -> Self {
        fn go(t: &AckTerm, out: &mut Vec<Option<(bool, usize, usize)>>) -> usize {
            let node = match t {
                AckTerm::One => None,
                AckTerm::Plus(a, b) => Some((false, go(a, out), go(b, out))),
                AckTerm::App(a, b) => Some((true, go(a, out), go(b, out))),
            };
            out.push(node);
            out.len() - 1
        }
        let mut nodes = Vec::new();
        go(t, &mut nodes);
        Flat { nodes }
    }
}

/// `s ≤_k t`. The relation does not depend on `k`.
///
/// Decided by a table over all pairs of subterms, children first, so each
/// pair is settled once.
pub fn leq_k(mode: LeqMode, s: &AckTerm, t: &AckTerm) -> bool {
    let (fs, ft) = (Flat::new(s), Flat::new(t));
    let w = ft.nodes.len();
    let mut r = vec![false; fs.nodes.len() * w];
    for (u, su) in fs.nodes.iter().enumerate() {
        for (v, tv) in ft.nodes.iter().enumerate() {
            let mut hit = su.is_none();
            if let Some((_, x, y)) = *tv {
                hit = hit || r[u * w + x] || r[u * w + y];
            }
            if let (LeqMode::Embedding, Some((c1, a, b)), Some((c2, x, y))) = (mode, *su, *tv) {
                hit = hit || (c1 == c2 && r[a * w + x] && r[b * w + y]);
            }
            r[u * w + v] = hit;
        }
    }
    r[r.len() - 1]
}

/// Every term with at most `max_nodes` nodes: by size, `+` before `A`, then
/// by left size and the order of both parts.
pub fn enumerate_ack(max_nodes: usize) -> Vec<AckTerm> {
    enumerate_ack_capped(max_nodes, usize::MAX).expect("uncapped")
}

/// [`enumerate_ack`], failing once more than `cap` terms would be produced.
pub fn enumerate_ack_capped(max_nodes: usize, cap: usize) -> Result<Vec<AckTerm>> {
    let mut sized: Vec<Vec<AckTerm>> = vec![Vec::new()];
    let mut total = 0usize;
    for n in 1..=max_nodes {
        let mut layer = Vec::new();
        if n == 1 {
            layer.push(AckTerm::One);
        }
        for app in [false, true] {
            for ls in 1..n.saturating_sub(1) {
                let rs = n - 1 - ls;
                total = total.saturating_add(sized[ls].len() * sized[rs].len());
                if total > cap {
                    return Err(Error::BudgetExceeded);
                }
                for a in &sized[ls] {
                    for b in &sized[rs] {
                        layer.push(if app {
                            AckTerm::app(a.clone(), b.clone())
                        } else {
                            AckTerm::plus(a.clone(), b.clone())
                        });
                    }
                }
            }
        }
        total += usize::from(n == 1);
        sized.push(layer);
    }
    Ok(sized.into_iter().flatten().collect())
}

/// How `A^K_ω(i+2, 0)` is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtrWiring {
    /// Iterate `x ↦ A_ω(x)` starting from `x = i + 2`.
    Diagonal,
    /// Iterate `b ↦ A_ω(i+2, b)` starting from `b = 0`; the first step is
    /// outside the domain of `A`, so only `K = 0` evaluates.
    ArgumentSlot,
}

/// The bound `f(K, i)` of a `W` assertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WBound {
    /// `2_{d-1}((i+2)^K)`.
    Sigma { d: u32 },
    /// `A^K_ω(i+2, 0)`.
    Atr(AtrWiring),
}

impl WBound {
    pub fn eval(&self, k_param: u32, i: u64, profile: Profile, budget: &Budget) -> Result<BigUint> {
        let base = i.checked_add(2).ok_or(Error::BudgetExceeded)?;
        match *self {
            WBound::Sigma { d } => {
                let d = d.checked_sub(1).ok_or(Error::Domain("d must be at least 1"))?;
                let top = budget.pow(&BigUint::from(base), &BigUint::from(k_param))?;
                two_tower_over(d, top, budget)
            }
            WBound::Atr(AtrWiring::Diagonal) => {
                let mut x = base;
                for _ in 0..k_param {
                    x = ack_omega_diag(profile, x, budget)?.to_u64().ok_or(Error::BudgetExceeded)?;
                }
                Ok(BigUint::from(x))
            }
            WBound::Atr(AtrWiring::ArgumentSlot) => {
                if k_param == 0 {
                    Ok(BigUint::zero())
                } else {
                    Err(Error::Domain("A_omega(k, 0) is undefined"))
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WVerdict {
    /// `a_index^ℕ > f(K, index)` at base `index + 2`.
    HypothesisFailed { index: usize },
    /// The least `j < M` with `a_j ≤ a_{j+1}`.
    Witness { j: usize },
    /// The hypothesis holds and no adjacent pair is related.
    Bad { len: usize },
}

/// Checks `W(f)` on the sequence `a_0…a_M`.
pub fn w_check(
    bound: WBound,
    k_param: u32,
    terms: &[AckTerm],
    mode: LeqMode,
    profile: Profile,
    budget: &Budget,
) -> Result<WVerdict> {
    if terms.is_empty() {
        return Err(Error::Domain("sequence must be nonempty"));
    }
    for (i, a) in terms.iter().enumerate() {
        let f = bound.eval(k_param, i as u64, profile, budget)?;
        if !value_at_most(a, i as u64 + 2, profile, &f, budget)? {
            return Ok(WVerdict::HypothesisFailed { index: i });
        }
    }
    Ok(match terms.windows(2).position(|w| leq_k(mode, &w[0], &w[1])) {
        Some(j) => WVerdict::Witness { j },
        None => WVerdict::Bad { len: terms.len() },
    })
}

/// The terms admissible at position `i`: at most `node_cap` nodes and value
/// at most `f(K, i)` at base `i + 2`.
///
/// Without an explicit cap the repaired profile uses `2·f − 1`, which loses
/// nothing: at bases `≥ 2` a term's value is at least its number of leaves.
/// The literal profile has infinitely many terms of value 1 and needs a cap.
pub fn w_universe(
    bound: WBound,
    k_param: u32,
    i: u64,
    profile: Profile,
    node_cap: Option<usize>,
    budget: &Budget,
) -> Result<Vec<AckTerm>> {
    let f = bound.eval(k_param, i, profile, budget)?;
    let cap = match (node_cap, profile) {
        (Some(c), _) => c,
        (None, Profile::Repaired) => {
            let f = f.to_usize().ok_or(Error::BudgetExceeded)?;
            (2 * f).saturating_sub(1)
        }
        (None, Profile::Literal) => return Err(Error::Domain("the literal profile needs a node cap")),
    };
    let limit = usize::try_from(budget.max_steps).unwrap_or(usize::MAX);
    let mut out = Vec::new();
    for t in enumerate_ack_capped(cap, limit)? {
        if value_at_most(&t, i + 2, profile, &f, budget)? {
            out.push(t);
        }
    }
    Ok(out)
}

/// Least `M ≤ max_m` such that every admissible `a_0…a_M` has a witness.
pub fn w_search_min_m(
    bound: WBound,
    k_param: u32,
    max_m: usize,
    mode: LeqMode,
    profile: Profile,
    node_cap: Option<usize>,
    budget: &Budget,
) -> Result<SearchOutcome<Vec<AckTerm>>> {
    let mut universes = Vec::new();
    let mut last = None;
    for m in 0..=max_m {
        universes.push(w_universe(bound, k_param, m as u64, profile, node_cap, budget)?);
        match find_chain(&universes, |a, b| Ok(!leq_k(mode, a, b)))? {
            None => return Ok(SearchOutcome::Found(m)),
            Some(idx) => last = Some(idx.iter().enumerate().map(|(i, &t)| universes[i][t].clone()).collect()),
        }
    }
    Ok(SearchOutcome::Exhausted { last_counterexample: last })
}

/// A selection `(i, n) ↦ t_i(n)` with `t_i(n)^ℕ = n`.
pub trait Selection {
    fn select(&self, i: u64, n: &BigUint, budget: &Budget) -> Result<AckTerm>;
}

/// `1 + 1 + … + 1`, nested to the left.
#[derive(Debug, Clone, Copy, Default)]
pub struct DefaultSelection;

impl Selection for DefaultSelection {
    fn select(&self, i: u64, n: &BigUint, budget: &Budget) -> Result<AckTerm> {
        let n = n.to_u64().filter(|&n| n <= budget.max_steps).ok_or(Error::BudgetExceeded)?;
        default_selection(i, n)
    }
}

pub fn default_selection(i: u64, n: u64) -> Result<AckTerm> {
    if i == 0 || n == 0 {
        return Err(Error::Domain("selection needs i, n >= 1"));
    }
    Ok((1..n).fold(AckTerm::One, |acc, _| AckTerm::plus(acc, AckTerm::One)))
}

/// Checks `t_i(n)^ℕ = n` at base `i` on every sample.
pub fn check_selection(sel: &impl Selection, samples: &[(u64, u64)], profile: Profile, budget: &Budget) -> Result<()> {
    for &(i, n) in samples {
        let n = BigUint::from(n);
        if term_value(&sel.select(i, &n, budget)?, i, profile, budget)? != n {
            return Err(Error::Domain("selection value differs from its argument"));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WtVerdict {
    /// `a_index = 0` or `a_index > f(K, index)`.
    HypothesisFailed {
        index: usize,
    },
    /// The least `j`, then least `i < j`, with
    /// `t_{i+2}(a_i) ≤ t_{j+2}(a_j)`.
    Witness {
        i: usize,
        j: usize,
    },
    Bad {
        len: usize,
    },
}

/// Checks `W(t, f)` on the numbers `a_0…a_M`.
pub fn wt_check(
    sel: &impl Selection,
    bound: WBound,
    k_param: u32,
    values: &[BigUint],
    mode: LeqMode,
    profile: Profile,
    budget: &Budget,
) -> Result<WtVerdict> {
    if values.is_empty() {
        return Err(Error::Domain("sequence must be nonempty"));
    }
    let mut terms = Vec::with_capacity(values.len());
    for (i, a) in values.iter().enumerate() {
        if a.is_zero() || a > &bound.eval(k_param, i as u64, profile, budget)? {
            return Ok(WtVerdict::HypothesisFailed { index: i });
        }
        terms.push(sel.select(i as u64 + 2, a, budget)?);
    }
    for j in 1..terms.len() {
        if let Some(i) = (0..j).find(|&i| leq_k(mode, &terms[i], &terms[j])) {
            return Ok(WtVerdict::Witness { i, j });
        }
    }
    Ok(WtVerdict::Bad { len: terms.len() })
}
