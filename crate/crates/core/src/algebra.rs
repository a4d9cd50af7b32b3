//! Ordered algebras as graded-tree term algebras.
//!
//! A signature names a generator set `C` and operation symbols `M`, each with
//! its own quasi-order. Trees over the combined label space `C ∪ M` whose
//! node degrees match the symbols' arities are the free terms; an
//! [`Interpretation`] evaluates them into some carrier.
//!
//! Label layout: generators are `0..|C|`, operation `μ` is `|C| + μ`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::orders::{disjoint_union, higman_by, FiniteQo};
use crate::trees::{embeds, is_graded, Tree};
use crate::{Error, Result};

/// How argument lists are compared when transporting `⊴` to values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Compat {
    /// Only equal-arity operations are compared, argument by argument.
    SameArity,
    /// Mixed arities are allowed; argument lists are compared with `≤*`.
    Subsequence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    Generator(usize),
    Op(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSignature {
    generators: FiniteQo,
    opsyms: FiniteQo,
    arity: Vec<usize>,
    labels: FiniteQo,
}

impl AlgebraSignature {
    pub fn new(generators: FiniteQo, opsyms: FiniteQo, arity: Vec<usize>) -> Result<Self> {
        if arity.len() != opsyms.len() {
            return Err(Error::Domain("one arity per operation symbol"));
        }
        if arity.contains(&0) {
            return Err(Error::Domain("operation arities must be positive"));
        }
        let labels = disjoint_union(&generators, &opsyms);
        Ok(AlgebraSignature { generators, opsyms, arity, labels })
    }

    pub fn generators(&self) -> &FiniteQo {
        &self.generators
    }

    pub fn opsyms(&self) -> &FiniteQo {
        &self.opsyms
    }

    pub fn arity(&self, op: usize) -> usize {
        self.arity[op]
    }

    /// The order on `C ∪ M` used for tree embedding.
    pub fn label_order(&self) -> &FiniteQo {
        &self.labels
    }

    pub fn op_label(&self, op: usize) -> usize {
        self.generators.len() + op
    }

    pub fn symbol(&self, label: usize) -> Result<Symbol> {
        let g = self.generators.len();
        if label < g {
            Ok(Symbol::Generator(label))
        } else if label < g + self.opsyms.len() {
            Ok(Symbol::Op(label - g))
        } else {
            Err(Error::UnknownElement(label))
        }
    }

    /// `λ ⊴ μ`.
    pub fn op_leq(&self, lambda: usize, mu: usize) -> bool {
        self.opsyms.leq(lambda, mu)
    }

    /// True iff `⊴` only relates operations of equal arity.
    pub fn is_arity_respecting(&self) -> bool {
        self.opsyms.pairs().all(|(a, b)| self.arity[a] == self.arity[b])
    }
}

/// `0` on generators, the arity on operation symbols.
pub fn grade(sig: &AlgebraSignature, label: usize) -> Result<usize> {
    Ok(match sig.symbol(label)? {
        Symbol::Generator(_) => 0,
        Symbol::Op(op) => sig.arity(op),
    })
}

pub fn is_graded_term(sig: &AlgebraSignature, t: &Tree) -> Result<bool> {
    is_graded(t, |l| grade(sig, l).ok())
}

/// A carrier with generator values, operations and an order.
pub trait Interpretation {
    type Value: Clone;

    fn generator(&self, c: usize) -> Self::Value;

    fn apply(&self, op: usize, args: &[Self::Value]) -> Result<Self::Value>;

    fn leq(&self, a: &Self::Value, b: &Self::Value) -> bool;
}

/// One operation application `op(args…)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpApp<V> {
    pub op: usize,
    pub args: Vec<V>,
}

/// A left and right application compared by the compatibility check.
pub type OpPair<V> = (OpApp<V>, OpApp<V>);

impl<V> OpApp<V> {
    pub fn new(op: usize, args: Vec<V>) -> Self {
        OpApp { op, args }
    }
}

/// `φ(c[]) = c`, `φ(μ[t₁…t_r]) = μ(φ(t₁)…φ(t_r))`.
pub fn phi_eval<I: Interpretation>(sig: &AlgebraSignature, interp: &I, t: &Tree) -> Result<I::Value> {
    if !is_graded_term(sig, t)? {
        return Err(Error::NotGraded);
    }
    phi_unchecked(sig, interp, t)
}

fn phi_unchecked<I: Interpretation>(sig: &AlgebraSignature, interp: &I, t: &Tree) -> Result<I::Value> {
    match sig.symbol(t.label)? {
        Symbol::Generator(c) => Ok(interp.generator(c)),
        Symbol::Op(op) => {
            let args = t.children.iter().map(|c| phi_unchecked(sig, interp, c)).collect::<Result<Vec<_>>>()?;
            interp.apply(op, &args)
        }
    }
}

fn check_arity<V>(sig: &AlgebraSignature, app: &OpApp<V>) -> Result<()> {
    if app.op >= sig.opsyms().len() {
        return Err(Error::UnknownElement(app.op));
    }
    let expected = sig.arity(app.op);
    if expected != app.args.len() {
        return Err(Error::ArityMismatch { op: app.op, expected, found: app.args.len() });
    }
    Ok(())
}

/// Index of the first sample with an argument not below its value.
pub fn find_divisibility_violation<I: Interpretation>(
    interp: &I,
    sig: &AlgebraSignature,
    samples: &[OpApp<I::Value>],
) -> Result<Option<usize>> {
    for (i, app) in samples.iter().enumerate() {
        check_arity(sig, app)?;
        let value = interp.apply(app.op, &app.args)?;
        if !app.args.iter().all(|a| interp.leq(a, &value)) {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// `a_i ≤ μ(a₁…a_r)` for every sample.
pub fn check_divisibility<I: Interpretation>(
    interp: &I,
    sig: &AlgebraSignature,
    samples: &[OpApp<I::Value>],
) -> Result<bool> {
    Ok(find_divisibility_violation(interp, sig, samples)?.is_none())
}

fn args_below<T>(mode: Compat, xs: &[T], ys: &[T], mut leq: impl FnMut(&T, &T) -> bool) -> bool {
    match mode {
        Compat::SameArity => xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| leq(x, y)),
        Compat::Subsequence => higman_by(xs, ys, leq),
    }
}

/// Index of the first sample pair where `λ ⊴ μ` and the arguments are below
/// but the values are not.
pub fn find_compatibility_violation<I: Interpretation>(
    interp: &I,
    sig: &AlgebraSignature,
    samples: &[OpPair<I::Value>],
    mode: Compat,
) -> Result<Option<usize>> {
    for (i, (lhs, rhs)) in samples.iter().enumerate() {
        check_arity(sig, lhs)?;
        check_arity(sig, rhs)?;
        if !sig.op_leq(lhs.op, rhs.op) {
            continue;
        }
        if !args_below(mode, &lhs.args, &rhs.args, |a, b| interp.leq(a, b)) {
            continue;
        }
        let (l, r) = (interp.apply(lhs.op, &lhs.args)?, interp.apply(rhs.op, &rhs.args)?);
        if !interp.leq(&l, &r) {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

pub fn check_compatibility<I: Interpretation>(
    interp: &I,
    sig: &AlgebraSignature,
    samples: &[OpPair<I::Value>],
    mode: Compat,
) -> Result<bool> {
    Ok(find_compatibility_violation(interp, sig, samples, mode)?.is_none())
}

/// The least quasi-order on `universe` that extends the generator order on
/// leaves, is a divisibility order, and is compatible with `⊴`.
///
/// Computed by applying the closure rules until nothing changes. The result
/// uses universe positions as element identifiers.
pub fn min_divisibility_order(sig: &AlgebraSignature, universe: &[Tree], mode: Compat) -> Result<FiniteQo> {
    let n = universe.len();
    let mut index: BTreeMap<&Tree, usize> = BTreeMap::new();
    for (i, t) in universe.iter().enumerate() {
        if !is_graded_term(sig, t)? {
            return Err(Error::NotGraded);
        }
        index.insert(t, i);
    }
    let kids: Vec<Vec<usize>> = universe
        .iter()
        .map(|t| t.children.iter().map(|c| index.get(c).copied().ok_or(Error::NotSubtermClosed)).collect())
        .collect::<Result<_>>()?;
    let symbols: Vec<Symbol> = universe.iter().map(|t| sig.symbol(t.label)).collect::<Result<_>>()?;

    let mut rel = vec![false; n * n];
    for a in 0..n {
        rel[a * n + a] = true;
        for b in 0..n {
            if let (Symbol::Generator(c), Symbol::Generator(d)) = (symbols[a], symbols[b]) {
                if sig.generators().leq(c, d) {
                    rel[a * n + b] = true;
                }
            }
        }
    }
    loop {
        let mut changed = false;
        let mut set = |rel: &mut Vec<bool>, a: usize, b: usize| {
            if !rel[a * n + b] {
                rel[a * n + b] = true;
                changed = true;
            }
        };
        // divisibility
        for (s, ks) in kids.iter().enumerate() {
            for &c in ks {
                set(&mut rel, c, s);
            }
        }
        // compatibility
        for t in 0..n {
            let Symbol::Op(lambda) = symbols[t] else { continue };
            for s in 0..n {
                let Symbol::Op(mu) = symbols[s] else { continue };
                if rel[t * n + s] || !sig.op_leq(lambda, mu) {
                    continue;
                }
                if args_below(mode, &kids[t], &kids[s], |&x, &y| rel[x * n + y]) {
                    set(&mut rel, t, s);
                }
            }
        }
        // transitivity
        for k in 0..n {
            for a in 0..n {
                if rel[a * n + k] {
                    for b in 0..n {
                        if rel[k * n + b] {
                            set(&mut rel, a, b);
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    FiniteQo::from_fn(n, |a, b| rel[a * n + b])
}

/// The free interpretation: terms evaluate to themselves, ordered by `⪯`.
#[derive(Debug, Clone, Copy)]
pub struct FreeInterpretation<'a> {
    pub sig: &'a AlgebraSignature,
}

impl Interpretation for FreeInterpretation<'_> {
    type Value = Tree;

    fn generator(&self, c: usize) -> Tree {
        Tree::leaf(c)
    }

    fn apply(&self, op: usize, args: &[Tree]) -> Result<Tree> {
        check_arity(self.sig, &OpApp { op, args: args.to_vec() })?;
        Ok(Tree::node(self.sig.op_label(op), args.to_vec()))
    }

    fn leq(&self, a: &Tree, b: &Tree) -> bool {
        embeds(self.sig.label_order(), a, b).unwrap_or(false)
    }
}

/// Natural numbers under `≤`; every operation is addition.
#[derive(Debug, Clone)]
pub struct SumInterpretation {
    pub generator_values: Vec<u64>,
}

impl Interpretation for SumInterpretation {
    type Value = u64;

    fn generator(&self, c: usize) -> u64 {
        self.generator_values[c]
    }

    fn apply(&self, _op: usize, args: &[u64]) -> Result<u64> {
        args.iter().try_fold(0u64, |acc, &x| acc.checked_add(x)).ok_or(Error::BudgetExceeded)
    }

    fn leq(&self, a: &u64, b: &u64) -> bool {
        a <= b
    }
}

/// The operation `⊕_{r,q}`: build `q[t₁…t_r]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct TreeOp {
    pub arity: usize,
    pub label: usize,
}

/// Trees over a quasi-order `Q` viewed as an ordered algebra.
///
/// With `max_arity = Some(n)` the operations are `⊕_{r,q}` for `1 ≤ r ≤ n`
/// and `⊴` compares only equal arities. With `None` every arity is allowed
/// and `⊴` compares labels only.
#[derive(Debug, Clone)]
pub struct TreeAlgebra {
    base: FiniteQo,
    max_arity: Option<usize>,
}

pub fn make_tree_algebra(q: &FiniteQo, max_arity: Option<usize>) -> TreeAlgebra {
    TreeAlgebra { base: q.clone(), max_arity }
}

impl TreeAlgebra {
    pub fn base(&self) -> &FiniteQo {
        &self.base
    }

    pub fn max_arity(&self) -> Option<usize> {
        self.max_arity
    }

    pub fn op_leq(&self, a: TreeOp, b: TreeOp) -> bool {
        self.base.leq(a.label, b.label) && (self.max_arity.is_none() || a.arity == b.arity)
    }

    pub fn apply(&self, op: TreeOp, args: Vec<Tree>) -> Result<Tree> {
        if op.arity == 0 || self.max_arity.is_some_and(|n| op.arity > n) {
            return Err(Error::Domain("arity outside the algebra"));
        }
        if args.len() != op.arity {
            return Err(Error::ArityMismatch { op: op.label, expected: op.arity, found: args.len() });
        }
        self.base.ensure(op.label)?;
        Ok(Tree::node(op.label, args))
    }

    /// Operation symbols `⊕_{r,q}` for `1 ≤ r ≤ arity_cap`, ordered by
    /// arity and then label.
    pub fn ops(&self, arity_cap: usize) -> Vec<TreeOp> {
        let cap = self.max_arity.map_or(arity_cap, |n| n.min(arity_cap));
        (1..=cap).flat_map(|arity| (0..self.base.len()).map(move |label| TreeOp { arity, label })).collect()
    }

    /// A finite signature for the operations up to `arity_cap`, with the
    /// leaves `q[]` as generators.
    pub fn signature(&self, arity_cap: usize) -> AlgebraSignature {
        let ops = self.ops(arity_cap);
        let opsyms =
            FiniteQo::from_fn(ops.len(), |a, b| self.op_leq(ops[a], ops[b])).expect("operation order is a quasi-order");
        AlgebraSignature::new(self.base.clone(), opsyms, ops.iter().map(|o| o.arity).collect())
            .expect("tree algebra arities are positive")
    }

    /// The algebra acting on trees over `Q`, for a signature made by [`Self::signature`].
    pub fn interpretation(&self, arity_cap: usize) -> TreeInterpretation<'_> {
        TreeInterpretation { algebra: self, ops: self.ops(arity_cap) }
    }
}

#[derive(Debug, Clone)]
pub struct TreeInterpretation<'a> {
    algebra: &'a TreeAlgebra,
    ops: Vec<TreeOp>,
}

impl Interpretation for TreeInterpretation<'_> {
    type Value = Tree;

    fn generator(&self, c: usize) -> Tree {
        Tree::leaf(c)
    }

    fn apply(&self, op: usize, args: &[Tree]) -> Result<Tree> {
        let op = *self.ops.get(op).ok_or(Error::UnknownElement(op))?;
        self.algebra.apply(op, args.to_vec())
    }

    fn leq(&self, a: &Tree, b: &Tree) -> bool {
        embeds(&self.algebra.base, a, b).unwrap_or(false)
    }
}
