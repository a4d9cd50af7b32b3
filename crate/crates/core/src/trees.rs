//! Finite ordered labelled trees and Kruskal's embedding `⪯`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::orders::FiniteQo;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    pub label: usize,
    pub children: Vec<Tree>,
}

/// Upper bound on branching degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DegreeBound(pub usize);

impl Tree {
    pub fn leaf(label: usize) -> Self {
        Tree { label, children: Vec::new() }
    }

    pub fn node(label: usize, children: Vec<Tree>) -> Self {
        Tree { label, children }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Tree::size).sum::<usize>()
    }

    /// Maximum child count over all nodes.
    pub fn degree(&self) -> usize {
        self.children.iter().map(Tree::degree).fold(self.children.len(), usize::max)
    }

    /// Pre-order walk over all subtrees, `self` first.
    pub fn subtrees(&self) -> Vec<&Tree> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            out.push(t);
            stack.extend(t.children.iter().rev());
        }
        out
    }

    pub fn labels(&self) -> impl Iterator<Item = usize> + '_ {
        self.subtrees().into_iter().map(|t| t.label)
    }
}

/// `label` for a leaf, `label[child,…]` otherwise.
impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        f.write_str("[")?;
        for (i, c) in self.children.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

pub fn degree(t: &Tree) -> usize {
    t.degree()
}

/// Post-order arena of `(label, subtree size)`. The last child of node `u`
/// is `u - 1`, and each child's previous sibling sits just below its
/// subtree, so children are walked right to left without an index.
struct Flat(Vec<(usize, usize)>);

impl Flat {
    /// Flattens `t`, rejecting labels outside `order`.
    fn new(t: &Tree, order: &FiniteQo) -> Result<Self> {
        fn go(t: &Tree, order: &FiniteQo, out: &mut Vec<(usize, usize)>) -> Result<usize> {
            order.ensure(t.label)?;
            let mut n = 1;
            for c in &t.children {
                n += go(c, order, out)?;
            }
            out.push((t.label, n));
            Ok(n)
        }
        let mut out = Vec::with_capacity(16);
        go(t, order, &mut out)?;
        Ok(Flat(out))
    }

    fn len(&self) -> usize {
        self.0.len()
    }

    fn label(&self, u: usize) -> usize {
        self.0[u].0
    }

    fn size(&self, u: usize) -> usize {
        self.0[u].1
    }

    /// Children of `u`, last first.
    fn kids_rev(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let first = u + 1 - self.0[u].1;
        let mut end = u;
        core::iter::from_fn(move || {
            (end > first).then(|| {
                let c = end - 1;
                end = c + 1 - self.0[c].1;
                c
            })
        })
    }
}

/// Kruskal embedding `t ⪯ s` over the label order.
///
/// Fills a table over all node pairs of the two trees, bottom-up, so every
/// subtree pair is decided once. The leaf clause is the childless case of
/// the label-and-children clause.
pub fn embeds(order: &FiniteQo, t: &Tree, s: &Tree) -> Result<bool> {
    let (ft, fs) = (Flat::new(t, order)?, Flat::new(s, order)?);
    if ft.len() > fs.len() {
        // distinct nodes of t land on distinct nodes of s
        return Ok(false);
    }
    let w = fs.len();
    let mut table = vec![false; ft.len() * w];
    for u in 0..ft.len() {
        for v in 0..w {
            if ft.size(u) > fs.size(v) {
                continue;
            }
            let row = &table[u * w..];
            let hit = fs.kids_rev(v).any(|c| row[c])
                || (order.leq(ft.label(u), fs.label(v)) && {
                    // greedy from the right on both child lists
                    let mut rest = fs.kids_rev(v);
                    ft.kids_rev(u).all(|a| rest.any(|b| table[a * w + b]))
                });
            table[u * w + v] = hit;
        }
    }
    Ok(table[ft.len() * w - 1])
}

/// Every tree with at most `max_nodes` nodes over the labels of `labels`,
/// optionally with degree at most `bound`.
///
/// Output is grouped by node count; within a size, roots vary slowest and
/// child forests follow [`forests`] order.
pub fn enumerate_trees(labels: &FiniteQo, max_nodes: usize, bound: Option<DegreeBound>) -> Vec<Tree> {
    let mut by_size: Vec<Vec<Tree>> = vec![Vec::new()];
    for n in 1..=max_nodes {
        let mut layer = Vec::new();
        for label in 0..labels.len() {
            for kids in forests(&by_size, n - 1, bound) {
                layer.push(Tree::node(label, kids));
            }
        }
        by_size.push(layer);
    }
    by_size.into_iter().flatten().collect()
}

/// Ordered forests of total size `n` whose trees come from `by_size` and
/// whose length respects `bound`.
fn forests(by_size: &[Vec<Tree>], n: usize, bound: Option<DegreeBound>) -> Vec<Vec<Tree>> {
    fn go(by_size: &[Vec<Tree>], left: usize, cap: usize, prefix: &mut Vec<Tree>, out: &mut Vec<Vec<Tree>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        if prefix.len() == cap {
            return;
        }
        for first in 1..=left {
            for t in &by_size[first] {
                prefix.push(t.clone());
                go(by_size, left - first, cap, prefix, out);
                prefix.pop();
            }
        }
    }
    let cap = bound.map_or(usize::MAX, |b| b.0);
    let mut out = Vec::new();
    go(by_size, n, cap, &mut Vec::new(), &mut out);
    out
}

/// True iff at every node the child count equals the grade of its label.
pub fn is_graded(t: &Tree, grade: impl Fn(usize) -> Option<usize>) -> Result<bool> {
    let mut ok = true;
    for s in t.subtrees() {
        let g = grade(s.label).ok_or(Error::MissingGrade(s.label))?;
        ok &= g == s.children.len();
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(l: usize) -> Tree {
        Tree::leaf(l)
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degree(&leaf(0)), 0);
        assert_eq!(degree(&Tree::node(0, vec![leaf(1), leaf(2)])), 2);
        let t = Tree::node(0, vec![Tree::node(1, vec![leaf(2), leaf(3), leaf(4)])]);
        assert_eq!(degree(&t), 3);
    }

    #[test]
    fn embeds_examples() {
        let c2 = FiniteQo::chain(2);
        assert!(embeds(&c2, &leaf(0), &leaf(1)).unwrap());
        assert!(!embeds(&c2, &leaf(1), &leaf(0)).unwrap());
        let t = Tree::node(1, vec![leaf(0)]);
        assert!(embeds(&c2, &t, &Tree::node(0, vec![t.clone()])).unwrap());
        assert_eq!(embeds(&c2, &leaf(7), &leaf(0)), Err(Error::UnknownElement(7)));
    }

    #[test]
    fn inner_node_never_embeds_into_leaf() {
        let q = FiniteQo::chain(1);
        assert!(!embeds(&q, &Tree::node(0, vec![leaf(0)]), &leaf(0)).unwrap());
    }

    #[test]
    fn leaf_embeds_below_any_dominating_label() {
        let c2 = FiniteQo::chain(2);
        let s = Tree::node(0, vec![Tree::node(0, vec![leaf(0)])]);
        assert!(!embeds(&c2, &leaf(1), &s).unwrap());
        assert!(embeds(&c2, &leaf(0), &s).unwrap());
    }

    #[test]
    fn enumeration_counts() {
        let one = FiniteQo::chain(1);
        assert_eq!(enumerate_trees(&one, 1, None), vec![leaf(0)]);
        assert_eq!(enumerate_trees(&one, 3, None).len(), 4);
        assert_eq!(enumerate_trees(&FiniteQo::chain(2), 2, None).len(), 6);
        // ordered unlabelled trees with n nodes: Catalan(n - 1)
        let counts: Vec<usize> =
            (1..=7).map(|n| enumerate_trees(&one, n, None).iter().filter(|t| t.size() == n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132]);
        // unary-binary trees (Motzkin numbers)
        let motzkin: Vec<usize> = (1..=7)
            .map(|n| enumerate_trees(&one, n, Some(DegreeBound(2))).iter().filter(|t| t.size() == n).count())
            .collect();
        assert_eq!(motzkin, vec![1, 1, 2, 4, 9, 21, 51]);
    }

    #[test]
    fn graded_examples() {
        // c = 0 with grade 0, mu = 1 with grade 2
        let grade = |l: usize| match l {
            0 => Some(0),
            1 => Some(2),
            _ => None,
        };
        assert!(is_graded(&leaf(0), grade).unwrap());
        assert!(is_graded(&Tree::node(1, vec![leaf(0), leaf(0)]), grade).unwrap());
        assert!(!is_graded(&Tree::node(1, vec![leaf(0)]), grade).unwrap());
        assert_eq!(is_graded(&leaf(5), grade), Err(Error::MissingGrade(5)));
    }

    #[test]
    fn display_is_canonical() {
        let t = Tree::node(0, vec![leaf(1), Tree::node(1, vec![leaf(2)])]);
        assert_eq!(alloc::format!("{t}"), "0[1[],1[2[]]]");
    }
}
