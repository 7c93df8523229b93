mod common;

use common::strategies::symmetric;
use common::{naive_strongly_chordal, random_sym, sym_bits, sym_from_mask};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use strongchordal::families::is_member_of_family;
use strongchordal::obstructions::{find_obstruction_sym, find_obstruction_tournament, ObstructionSearch, DEFAULT_BUDGET};
use strongchordal::recognition::is_strongly_chordal_symmetric;
use strongchordal::tournaments::is_strongly_chordal_tournament;
use strongchordal::{Digraph, FamilyId, FamilySpec};

/// The obstruction is present in `host` and its induced copy belongs to the named family.
fn round_trips(host: &Digraph, r: &ObstructionSearch) -> bool {
    match r {
        ObstructionSearch::Found { spec, embedding } => {
            let sub = host.induced_ordered(embedding);
            sub == spec.generate().unwrap() && is_member_of_family(&sub, spec.id()).is_some()
        }
        _ => false,
    }
}

fn check_symmetric(g: &Digraph) {
    let r = find_obstruction_sym(g, DEFAULT_BUDGET).unwrap();
    if is_strongly_chordal_symmetric(g).unwrap() {
        assert_eq!(r, ObstructionSearch::Absent);
    } else {
        assert!(round_trips(g, &r), "{g:?} gave {r:?}");
    }
}

#[test]
fn every_rejected_symmetric_digraph_to_six_has_an_obstruction() {
    for n in 1..=6 {
        for mask in 0..1u64 << sym_bits(n) {
            check_symmetric(&sym_from_mask(n, mask));
        }
    }
}

#[test]
fn sampled_rejections_at_eight_and_ten_have_obstructions() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..400 {
        check_symmetric(&random_sym(&mut rng, if i % 2 == 0 { 8 } else { 10 }));
    }
}

#[test]
fn small_members_are_minimal() {
    let mut specs: Vec<FamilySpec> = Vec::new();
    for n in 1..=8 {
        for id in [FamilyId::F1, FamilyId::F2, FamilyId::F9] {
            specs.extend(FamilySpec::members(id, n));
        }
    }
    for id in FamilyId::TOURNAMENT {
        for n in 3..=6 {
            specs.extend(FamilySpec::members(id, n));
        }
    }
    assert!(specs.len() > 100);
    for spec in specs {
        let d = spec.generate().unwrap();
        assert!(!naive_strongly_chordal(&d), "{spec:?}");
        for v in 0..d.order() {
            let rest: Vec<usize> = (0..d.order()).filter(|&u| u != v).collect();
            assert!(naive_strongly_chordal(&d.induced_ordered(&rest)), "{spec:?} minus {v}");
        }
    }
}

#[test]
fn rejected_tournaments_at_seven_have_obstructions() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut found = 0;
    for _ in 0..300 {
        let mask = rand::Rng::gen_range(&mut rng, 0..1u64 << 21);
        let loops = rand::Rng::gen_range(&mut rng, 0..1u64 << 7);
        let t = common::tournament_from_mask(7, mask, loops & rand::Rng::gen_range(&mut rng, 0..128));
        let r = find_obstruction_tournament(&t).unwrap();
        if is_strongly_chordal_tournament(&t).unwrap() {
            assert_eq!(r, ObstructionSearch::Absent);
        } else {
            assert!(round_trips(&t, &r), "{t:?} gave {r:?}");
            found += 1;
        }
    }
    assert!(found > 100);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn obstructions_survive_relabelling(g in symmetric(4, 9), seed in any::<u64>()) {
        if is_strongly_chordal_symmetric(&g).unwrap() {
            return Ok(());
        }
        let mut pi: Vec<usize> = (0..g.order()).collect();
        rand::seq::SliceRandom::shuffle(pi.as_mut_slice(), &mut ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&pi);
        let (a, b) = (find_obstruction_sym(&g, DEFAULT_BUDGET).unwrap(), find_obstruction_sym(&h, DEFAULT_BUDGET).unwrap());
        prop_assert!(round_trips(&g, &a) && round_trips(&h, &b));
    }
}
