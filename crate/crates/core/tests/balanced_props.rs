mod common;

use common::{naive_strongly_chordal, random_balanced};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strongchordal::balanced::{
    find_fence, gamma_within_one_block, is_strongly_chordal_balanced, level_partition, strongly_chordal_balanced,
};
use strongchordal::recognition::brute_force_strongly_chordal;
use strongchordal::{Digraph, VertexOrdering};

#[test]
fn agrees_with_oracle_to_eight() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1500 {
        let n = rng.gen_range(1..=8);
        let d = random_balanced(&mut rng, n);
        let cert = strongly_chordal_balanced(&d).unwrap();
        assert_eq!(cert.accepts(), brute_force_strongly_chordal(&d, 9).unwrap().is_some(), "{d:?}");
        assert!(cert.verify(&d), "{d:?}: {cert:?}");
    }
}

#[test]
fn gammas_of_level_sorted_orderings_stay_in_one_block() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut seen_gamma = 0;
    for _ in 0..2000 {
        let n = rng.gen_range(2..=12);
        let d = random_balanced(&mut rng, n);
        let p = level_partition(&d).unwrap();
        let mut key: Vec<(usize, usize, u32, usize)> =
            (0..n).map(|v| (p.component[v], p.level[v], rng.gen(), v)).collect();
        key.sort_unstable();
        let ord = VertexOrdering::new(key.into_iter().map(|k| k.3).collect()).unwrap();
        seen_gamma += usize::from(d.gamma_witness(&ord).is_some());
        assert!(gamma_within_one_block(&d, &p, &ord), "{d:?} {ord:?}");
    }
    assert!(seen_gamma > 100);
}

fn fence_is_sound(d: &Digraph) {
    if let Some(w) = find_fence(d) {
        let mut verts = w.vertices.clone();
        verts.pop();
        assert!(verts.len() >= 6 && verts.len() % 2 == 0);
        assert!(!naive_strongly_chordal(&d.induced_ordered(&verts)), "{d:?} {w:?}");
    }
}

#[test]
fn fences_are_rejected_induced_subgraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut found = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(6..=10);
        let d = random_balanced(&mut rng, n);
        fence_is_sound(&d);
        let fence = find_fence(&d);
        found += usize::from(fence.is_some());
        assert_eq!(fence.is_none(), is_strongly_chordal_balanced(&d).unwrap());
    }
    assert!(found > 50);
}

#[test]
fn fences_in_unbalanced_digraphs_are_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..500 {
        let n = rng.gen_range(6..=9);
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        pairs.shuffle(&mut rng);
        let arcs: Vec<(usize, usize)> = pairs
            .into_iter()
            .take(rng.gen_range(n..2 * n))
            .map(|(u, v)| if rng.gen() { (u, v) } else { (v, u) })
            .collect();
        fence_is_sound(&Digraph::build(n, &arcs).unwrap());
    }
}
