use std::cmp::Ordering;

use num_bigint::BigUint;
use proptest::prelude::*;
use wqo_core::exp_terms::{compare_at, eval_at, ExpTerm};
use wqo_core::orders::{higman_by, seq_embed, FiniteQo};
use wqo_core::ordinals::{compare, fundamental_seq, natural_sum, CnfOrdinal};
use wqo_core::trees::{embeds, Tree};
use wqo_core::Budget;

/// `s ≤* t` by trying every increasing index map.
fn higman_brute(s: &[usize], t: &[usize], leq: &impl Fn(usize, usize) -> bool) -> bool {
    match s.split_first() {
        None => true,
        Some((&x, rest)) => (0..t.len()).any(|j| leq(x, t[j]) && higman_brute(rest, &t[j + 1..], leq)),
    }
}

fn arb_order() -> impl Strategy<Value = FiniteQo> {
    prop::collection::vec((0usize..4, 0usize..4), 0..6)
        .prop_map(|pairs| FiniteQo::generated_by(4, pairs).expect("ids below 4"))
}

fn arb_tree() -> impl Strategy<Value = Tree> {
    (0usize..2).prop_map(Tree::leaf).prop_recursive(3, 12, 3, |inner| {
        ((0usize..2), prop::collection::vec(inner, 0..3)).prop_map(|(l, kids)| Tree::node(l, kids))
    })
}

fn arb_ordinal() -> impl Strategy<Value = CnfOrdinal> {
    (0u64..4).prop_map(CnfOrdinal::finite).prop_recursive(3, 12, 3, |inner| {
        prop::collection::vec((inner, 1u64..3), 1..3).prop_map(|mut terms| {
            terms.sort_by(|a, b| b.0.cmp(&a.0));
            terms.dedup_by(|a, b| a.0 == b.0);
            CnfOrdinal::from_terms(terms.into_iter().map(|(e, c)| (e, BigUint::from(c))).collect()).unwrap()
        })
    })
}

fn arb_exp() -> impl Strategy<Value = ExpTerm> {
    Just(ExpTerm::Zero).prop_recursive(3, 8, 2, |inner| (inner.clone(), inner).prop_map(|(c, b)| ExpTerm::node(c, b)))
}

proptest! {
    #[test]
    fn greedy_higman_matches_brute_force(
        order in arb_order(),
        s in prop::collection::vec(0usize..4, 0..5),
        t in prop::collection::vec(0usize..4, 0..7),
    ) {
        let leq = |a, b| order.leq(a, b);
        prop_assert_eq!(seq_embed(&order, &s, &t).unwrap(), higman_brute(&s, &t, &leq));
        prop_assert_eq!(higman_by(&s, &t, |&a, &b| leq(a, b)), higman_brute(&s, &t, &leq));
    }

    #[test]
    fn tree_embedding_is_a_quasi_order(a in arb_tree(), b in arb_tree(), c in arb_tree()) {
        let q = FiniteQo::chain(2);
        prop_assert!(embeds(&q, &a, &a).unwrap());
        if embeds(&q, &a, &b).unwrap() && embeds(&q, &b, &c).unwrap() {
            prop_assert!(embeds(&q, &a, &c).unwrap());
        }
        if embeds(&q, &a, &b).unwrap() {
            prop_assert!(a.size() <= b.size());
        }
        // grafting under a new root keeps the embedding
        prop_assert!(embeds(&q, &a, &Tree::node(0, vec![b.clone(), a.clone()])).unwrap());
    }

    #[test]
    fn natural_sum_laws(a in arb_ordinal(), b in arb_ordinal(), c in arb_ordinal()) {
        prop_assert_eq!(natural_sum(&a, &b), natural_sum(&b, &a));
        prop_assert_eq!(natural_sum(&natural_sum(&a, &b), &c), natural_sum(&a, &natural_sum(&b, &c)));
        if compare(&a, &b) == Ordering::Less {
            prop_assert_eq!(compare(&natural_sum(&a, &c), &natural_sum(&b, &c)), Ordering::Less);
        }
        prop_assert_eq!(natural_sum(&a, &CnfOrdinal::zero()), a);
    }

    #[test]
    fn fundamental_sequences_descend(a in arb_ordinal(), i in 0u64..5) {
        prop_assume!(!a.is_zero());
        let i = BigUint::from(i);
        let next = fundamental_seq(&a, &i).unwrap();
        prop_assert!(next < a);
        if a.is_limit() {
            prop_assert!(next <= fundamental_seq(&a, &(i + 1u32)).unwrap());
        }
    }

    #[test]
    fn symbolic_compare_matches_exact_values(a in arb_exp(), b in arb_exp(), base in 2u32..6) {
        let budget = Budget::default();
        let k = BigUint::from(base);
        let exact = eval_at(&a, &k, &budget).unwrap().cmp(&eval_at(&b, &k, &budget).unwrap());
        prop_assert_eq!(compare_at(&a, &b, &k, &budget).unwrap(), exact);
    }
}
