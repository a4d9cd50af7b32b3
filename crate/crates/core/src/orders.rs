//! Explicit finite quasi-orders and Higman's subsequence order.
//!
//! Elements are dense identifiers `0..len`. The relation is stored
//! extensionally as a boolean matrix and validated on construction.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::{Error, Result};

/// A reflexive, transitive relation on `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQo {
    len: usize,
    leq: Vec<bool>,
}

impl FiniteQo {
    /// Builds a quasi-order from the full list of related pairs.
    ///
    /// The pairs must already form a reflexive and transitive relation.
    pub fn new(len: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut qo = FiniteQo { len, leq: vec![false; len * len] };
        for (a, b) in pairs {
            qo.ensure(a)?;
            qo.ensure(b)?;
            qo.leq[a * len + b] = true;
        }
        qo.validate()?;
        Ok(qo)
    }

    /// The reflexive-transitive closure of `pairs`.
    pub fn generated_by(len: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut leq = vec![false; len * len];
        for a in 0..len {
            leq[a * len + a] = true;
        }
        for (a, b) in pairs {
            if a >= len {
                return Err(Error::UnknownElement(a));
            }
            if b >= len {
                return Err(Error::UnknownElement(b));
            }
            leq[a * len + b] = true;
        }
        // Warshall
        for k in 0..len {
            for a in 0..len {
                if leq[a * len + k] {
                    for b in 0..len {
                        if leq[k * len + b] {
                            leq[a * len + b] = true;
                        }
                    }
                }
            }
        }
        Ok(FiniteQo { len, leq })
    }

    /// Builds the relation `{(a, b) | rel(a, b)}` on `0..len` and validates it.
    pub fn from_fn(len: usize, rel: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut leq = vec![false; len * len];
        for a in 0..len {
            for b in 0..len {
                leq[a * len + b] = rel(a, b);
            }
        }
        let qo = FiniteQo { len, leq };
        qo.validate()?;
        Ok(qo)
    }

    pub fn empty() -> Self {
        FiniteQo { len: 0, leq: Vec::new() }
    }

    /// The equality order on `len` elements.
    pub fn antichain(len: usize) -> Self {
        Self::from_fn(len, |a, b| a == b).expect("equality is a quasi-order")
    }

    /// The chain `0 < 1 < … < len-1`.
    pub fn chain(len: usize) -> Self {
        Self::from_fn(len, |a, b| a <= b).expect("chain is a quasi-order")
    }

    fn validate(&self) -> Result<()> {
        let n = self.len;
        for a in 0..n {
            if !self.leq[a * n + a] {
                return Err(Error::NotReflexive(a));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !self.leq[a * n + b] {
                    continue;
                }
                for c in 0..n {
                    if self.leq[b * n + c] && !self.leq[a * n + c] {
                        return Err(Error::NotTransitive(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, a: usize) -> bool {
        a < self.len
    }

    pub fn ensure(&self, a: usize) -> Result<()> {
        if a < self.len {
            Ok(())
        } else {
            Err(Error::UnknownElement(a))
        }
    }

    /// `a ≤ b`. Panics on identifiers outside the order.
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        assert!(a < self.len && b < self.len, "element out of range");
        self.leq[a * self.len + b]
    }

    /// `a ≤ b ∨ b ≤ a`.
    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// `a ≤ b ∧ b ≤ a`.
    pub fn equivalent(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) && self.leq(b, a)
    }

    /// All related pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len;
        (0..n * n).filter(move |&i| self.leq[i]).map(move |i| (i / n, i % n))
    }

    pub fn pair_count(&self) -> usize {
        self.leq.iter().filter(|&&x| x).count()
    }

    fn ensure_all(&self, xs: &[usize]) -> Result<()> {
        xs.iter().try_for_each(|&x| self.ensure(x))
    }
}

/// Higman's `s ≤* t` for an arbitrary element test, by greedy leftmost matching.
///
/// Each `s[k]` is matched to the first unused position of `t` that dominates it.
pub fn higman_by<A, B>(s: &[A], t: &[B], mut leq: impl FnMut(&A, &B) -> bool) -> bool {
    if s.len() > t.len() {
        return false;
    }
    let mut rest = t.iter();
    s.iter().all(|x| rest.by_ref().any(|y| leq(x, y)))
}

/// `s ≤* t` in the subsequence order over `order`.
pub fn seq_embed(order: &FiniteQo, s: &[usize], t: &[usize]) -> Result<bool> {
    order.ensure_all(s)?;
    order.ensure_all(t)?;
    Ok(higman_by(s, t, |&a, &b| order.leq(a, b)))
}

/// The componentwise product. Pair `(p, q)` gets identifier `p * |Q| + q`.
pub fn product(p: &FiniteQo, q: &FiniteQo) -> FiniteQo {
    let m = q.len();
    FiniteQo::from_fn(p.len() * m, |a, b| p.leq(a / m, b / m) && q.leq(a % m, b % m))
        .expect("product of quasi-orders is a quasi-order")
}

/// The tagged union. Elements of `p` keep their identifiers, elements of `q`
/// are shifted by `|P|`; elements from different sides are incomparable.
pub fn disjoint_union(p: &FiniteQo, q: &FiniteQo) -> FiniteQo {
    let n = p.len();
    FiniteQo::from_fn(n + q.len(), |a, b| match (a < n, b < n) {
        (true, true) => p.leq(a, b),
        (false, false) => q.leq(a - n, b - n),
        _ => false,
    })
    .expect("union of quasi-orders is a quasi-order")
}

/// Upward closure `{q | ∃b ∈ B. b ≤ q}`, sorted ascending.
pub fn closure(order: &FiniteQo, b: &[usize]) -> Result<Vec<usize>> {
    order.ensure_all(b)?;
    Ok((0..order.len()).filter(|&q| b.iter().any(|&x| order.leq(x, q))).collect())
}

/// True iff every two entries at distinct indices are incomparable.
pub fn is_antichain(order: &FiniteQo, xs: &[usize]) -> Result<bool> {
    order.ensure_all(xs)?;
    for (i, &a) in xs.iter().enumerate() {
        for &b in &xs[i + 1..] {
            if order.comparable(a, b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A linear extension of the quotient by mutual `≤`.
///
/// Each class is represented by its least identifier; among the classes that
/// are currently minimal, the one with the least representative goes first.
pub fn linear_extension(order: &FiniteQo) -> Vec<usize> {
    let n = order.len();
    let reps: Vec<usize> = (0..n).filter(|&a| (0..a).all(|b| !order.equivalent(a, b))).collect();
    let strictly_below = |a: usize, b: usize| order.leq(a, b) && !order.leq(b, a);
    let mut indegree: Vec<usize> =
        reps.iter().map(|&b| reps.iter().filter(|&&a| strictly_below(a, b)).count()).collect();
    let mut ready: BinaryHeap<Reverse<usize>> = (0..reps.len()).filter(|&i| indegree[i] == 0).map(Reverse).collect();
    let mut out = Vec::with_capacity(reps.len());
    while let Some(Reverse(i)) = ready.pop() {
        out.push(reps[i]);
        for j in 0..reps.len() {
            if strictly_below(reps[i], reps[j]) {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    ready.push(Reverse(j));
                }
            }
        }
    }
    out
}

/// A total map between two finite quasi-orders.
#[derive(Debug, Clone)]
pub struct OrderMap {
    domain: FiniteQo,
    codomain: FiniteQo,
    table: Vec<usize>,
}

impl OrderMap {
    pub fn new(domain: FiniteQo, codomain: FiniteQo, table: Vec<usize>) -> Result<Self> {
        if table.len() != domain.len() {
            return Err(Error::BadMap(table.len().min(domain.len())));
        }
        for (a, &img) in table.iter().enumerate() {
            if !codomain.contains(img) {
                return Err(Error::BadMap(a));
            }
        }
        Ok(OrderMap { domain, codomain, table })
    }

    pub fn domain(&self) -> &FiniteQo {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteQo {
        &self.codomain
    }

    pub fn apply(&self, a: usize) -> usize {
        self.table[a]
    }

    pub fn is_surjective(&self) -> bool {
        (0..self.codomain.len()).all(|q| self.table.contains(&q))
    }

    /// `a ≤ b ⇒ m(a) ≤ m(b)` for all domain pairs.
    pub fn is_order_preserving(&self) -> bool {
        self.domain.pairs().all(|(a, b)| self.codomain.leq(self.table[a], self.table[b]))
    }

    /// `m(a) ≤ m(b) ⇒ a ≤ b` for all domain pairs.
    pub fn is_order_reflecting(&self) -> bool {
        let n = self.domain.len();
        (0..n).all(|a| (0..n).all(|b| !self.codomain.leq(self.table[a], self.table[b]) || self.domain.leq(a, b)))
    }
}

pub fn check_order_preserving(m: &OrderMap) -> bool {
    m.is_order_preserving()
}

pub fn check_order_reflecting(m: &OrderMap) -> bool {
    m.is_order_reflecting()
}

/// The good pair `i < j` with `x_i ≤ x_j` minimising `j`, then `i`.
pub fn find_good_pair_by<T>(xs: &[T], mut leq: impl FnMut(&T, &T) -> bool) -> Option<(usize, usize)> {
    (1..xs.len()).find_map(|j| (0..j).find(|&i| leq(&xs[i], &xs[j])).map(|i| (i, j)))
}

pub fn find_good_pair(order: &FiniteQo, xs: &[usize]) -> Result<Option<(usize, usize)>> {
    order.ensure_all(xs)?;
    Ok(find_good_pair_by(xs, |&a, &b| order.leq(a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every increasing index tuple, tried one by one.
    fn embed_oracle(order: &FiniteQo, s: &[usize], t: &[usize]) -> bool {
        fn go(order: &FiniteQo, s: &[usize], t: &[usize], from: usize) -> bool {
            match s.split_first() {
                None => true,
                Some((&x, rest)) => (from..t.len()).any(|i| order.leq(x, t[i]) && go(order, rest, t, i + 1)),
            }
        }
        go(order, s, t, 0)
    }

    fn sequences(alphabet: usize, max_len: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        let mut layer = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for s in &layer {
                for a in 0..alphabet {
                    let mut t = s.clone();
                    t.push(a);
                    next.push(t);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    #[test]
    fn seq_embed_examples() {
        let nat = FiniteQo::chain(6);
        assert!(seq_embed(&nat, &[], &[5, 3]).unwrap());
        assert!(seq_embed(&nat, &[2, 1], &[1, 2, 0, 1]).unwrap());
        assert!(embed_oracle(&nat, &[2, 1], &[1, 2, 0, 1]));
        assert!(!seq_embed(&nat, &[1, 1, 1], &[1, 1]).unwrap());
        assert_eq!(seq_embed(&nat, &[9], &[1]), Err(Error::UnknownElement(9)));
    }

    #[test]
    fn seq_embed_matches_oracle_on_four_element_order() {
        // 0 < 2, 1 < 2, 3 isolated; 0 and 1 incomparable
        let q = FiniteQo::generated_by(4, [(0, 2), (1, 2)]).unwrap();
        let seqs = sequences(4, 4);
        for s in &seqs {
            for t in &seqs {
                assert_eq!(seq_embed(&q, s, t).unwrap(), embed_oracle(&q, s, t), "{s:?} {t:?}");
            }
        }
    }

    #[test]
    fn construction_rejects_non_quasi_orders() {
        assert_eq!(FiniteQo::new(2, [(0, 0)]), Err(Error::NotReflexive(1)));
        assert_eq!(FiniteQo::new(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]), Err(Error::NotTransitive(0, 1, 2)));
        assert_eq!(FiniteQo::new(1, [(0, 3)]), Err(Error::UnknownElement(3)));
    }

    #[test]
    fn product_examples() {
        let one = FiniteQo::chain(1);
        assert_eq!(product(&one, &one).len(), 1);
        let eq2 = FiniteQo::antichain(2);
        let p = product(&eq2, &eq2);
        assert_eq!(p.len(), 4);
        assert_eq!(p.pair_count(), 4);
        let c2 = FiniteQo::chain(2);
        let diamond = product(&c2, &c2);
        let brute = (0..16).filter(|i| {
            let (a, b) = (i / 4, i % 4);
            c2.leq(a / 2, b / 2) && c2.leq(a % 2, b % 2)
        });
        assert_eq!(diamond.pair_count(), brute.count());
        assert_eq!(diamond.pair_count(), 9);
    }

    #[test]
    fn union_examples() {
        let c1 = FiniteQo::chain(1);
        let u = disjoint_union(&c1, &c1);
        assert!(is_antichain(&u, &[0, 1]).unwrap());
        let c2 = FiniteQo::chain(2);
        assert_eq!(disjoint_union(&c2, &FiniteQo::empty()), c2);
        assert_eq!(disjoint_union(&c2, &c2).pair_count(), 6);
    }

    #[test]
    fn closure_examples() {
        let c3 = FiniteQo::chain(3);
        assert!(closure(&c3, &[]).unwrap().is_empty());
        assert_eq!(closure(&c3, &[1]).unwrap(), vec![1, 2]);
    }

    #[test]
    fn antichain_examples() {
        let q = FiniteQo::chain(2);
        assert!(is_antichain(&q, &[1]).unwrap());
        assert!(!is_antichain(&q, &[0, 0]).unwrap());
    }

    #[test]
    fn linear_extension_examples() {
        assert_eq!(linear_extension(&FiniteQo::chain(3)), vec![0, 1, 2]);
        assert_eq!(linear_extension(&FiniteQo::antichain(2)), vec![0, 1]);
        // divisibility on {1, 2, 3} as identifiers 0, 1, 2
        let div = FiniteQo::from_fn(3, |a, b| (b + 1) % (a + 1) == 0).unwrap();
        let ext = linear_extension(&div);
        assert_eq!(ext, vec![0, 1, 2]);
        // equivalent elements collapse to the least identifier
        let q = FiniteQo::from_fn(3, |a, b| a == b || (a < 2 && b < 2) || b == 2).unwrap();
        assert_eq!(linear_extension(&q), vec![0, 2]);
    }

    #[test]
    fn order_map_examples() {
        let c2 = FiniteQo::chain(2);
        let id = OrderMap::new(c2.clone(), c2.clone(), vec![0, 1]).unwrap();
        assert!(check_order_preserving(&id) && check_order_reflecting(&id));
        let point = FiniteQo::chain(1);
        let constant = OrderMap::new(c2.clone(), point, vec![0, 0]).unwrap();
        assert!(check_order_preserving(&constant));
        let onto = OrderMap::new(FiniteQo::antichain(2), c2.clone(), vec![0, 1]).unwrap();
        assert!(check_order_preserving(&onto));
        assert!(!check_order_reflecting(&onto));
        assert!(OrderMap::new(c2.clone(), c2, vec![0, 2]).is_err());
    }

    #[test]
    fn good_pair_examples() {
        let q = FiniteQo::antichain(2);
        assert_eq!(find_good_pair(&q, &[0]).unwrap(), None);
        assert_eq!(find_good_pair(&q, &[0, 0]).unwrap(), Some((0, 1)));
        assert_eq!(find_good_pair(&q, &[0, 1, 0]).unwrap(), Some((0, 2)));
        assert_eq!(find_good_pair(&q, &[0, 1]).unwrap(), None);
    }
}
