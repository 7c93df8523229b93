mod common;

use common::strategies::{digraph, symmetric};
use common::{naive_strong_ordering, naive_strongly_chordal};
use proptest::prelude::*;
use strongchordal::matrix::{is_totally_balanced, ZeroOneMatrix};
use strongchordal::recognition::{
    brute_force_strongly_chordal, eliminate_symmetric, is_peak, is_simple_vertex_digraph, leading_ordering_digraph,
    search_strong_ordering, simple_ordering_digraph, strong_order_symmetric, verify_strong_ordering, SearchOutcome,
};
use strongchordal::{Certificate, Digraph, FamilySpec};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn accepted_orderings_verify(g in symmetric(1, 9)) {
        if let Certificate::StrongOrdering(ord) = strong_order_symmetric(&g).unwrap() {
            prop_assert!(verify_strong_ordering(&g, &ord).is_none());
        }
    }

    #[test]
    fn symmetric_agrees_with_oracle_at_six_and_seven(g in symmetric(6, 7)) {
        let accepted = strong_order_symmetric(&g).unwrap().accepts();
        prop_assert_eq!(accepted, brute_force_strongly_chordal(&g, 9).unwrap().is_some());
        prop_assert_eq!(accepted, naive_strongly_chordal(&g));
    }

    #[test]
    fn acceptance_is_hereditary(g in symmetric(2, 10), drop in proptest::collection::vec(any::<bool>(), 10)) {
        if !strong_order_symmetric(&g).unwrap().accepts() {
            return Ok(());
        }
        let keep: Vec<usize> = (0..g.order()).filter(|&v| !drop[v]).collect();
        prop_assert!(strong_order_symmetric(&g.induced_ordered(&keep)).unwrap().accepts());
    }

    #[test]
    fn elimination_poset_is_a_partial_order(g in symmetric(1, 9)) {
        let run = eliminate_symmetric(&g).unwrap();
        prop_assert!(run.poset.is_irreflexive());
        prop_assert!(run.poset.is_antisymmetric());
        prop_assert!(run.poset.is_transitive());
    }

    #[test]
    fn irreflexive_last_vertex_is_not_a_peak(d in digraph(1, 6)) {
        let d = d.without_loops();
        for ord in [
            brute_force_strongly_chordal(&d, 9).unwrap().map(|o| o.into_vec()),
            naive_strong_ordering(&d),
            match search_strong_ordering(&d, usize::MAX) {
                SearchOutcome::Found(o) => Some(o.into_vec()),
                _ => None,
            },
        ]
        .into_iter()
        .flatten()
        {
            prop_assert!(!is_peak(&d, *ord.last().unwrap()));
        }
    }

    #[test]
    fn reflexive_strongly_chordal_digraphs_have_simple_orderings(d in digraph(1, 7)) {
        let d = d.with_loops(&(0..d.order()).collect::<Vec<_>>());
        if naive_strongly_chordal(&d) {
            prop_assert!(simple_ordering_digraph(&d).is_some());
        }
    }

    #[test]
    fn strongly_chordal_digraphs_have_leading_orderings(d in digraph(1, 7)) {
        if naive_strongly_chordal(&d) {
            prop_assert!(leading_ordering_digraph(&d).is_some());
        }
    }

    #[test]
    fn simple_ordering_implies_totally_balanced(d in digraph(1, 7)) {
        if simple_ordering_digraph(&d).is_some() {
            prop_assert!(is_totally_balanced(&ZeroOneMatrix::of_digraph(&d)));
        }
    }
}

#[test]
fn directed_triangle_is_strongly_chordal_without_a_simple_vertex() {
    let c3 = Digraph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
    assert!(naive_strongly_chordal(&c3));
    assert!((0..3).all(|v| !is_simple_vertex_digraph(&c3, v)));
    assert!(simple_ordering_digraph(&c3).is_none());
    assert!(leading_ordering_digraph(&c3).is_some());
}

#[test]
fn leading_ordering_does_not_imply_strongly_chordal() {
    let t1 = FamilySpec::t(1).generate().unwrap();
    assert_eq!(leading_ordering_digraph(&t1).unwrap().as_slice(), &[4, 0, 1, 2, 3]);
    assert!(!naive_strongly_chordal(&t1));
}
