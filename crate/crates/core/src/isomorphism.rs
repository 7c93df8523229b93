//! Backtracking isomorphism for small digraphs, pruned by loops and degrees.

use crate::digraph::Digraph;

fn profile(d: &Digraph, v: usize) -> (bool, usize, usize) {
    let lp = usize::from(d.has_loop(v));
    (
        d.has_loop(v),
        d.out_row(v).count_ones(..) - lp,
        (0..d.order()).filter(|&u| d.has_arc(u, v)).count() - lp,
    )
}

/// A bijection `map` with `a.has_arc(u, v) == b.has_arc(map[u], map[v])`.
pub fn find_isomorphism(a: &Digraph, b: &Digraph) -> Option<Vec<usize>> {
    let n = a.order();
    if n != b.order() || a.arc_count() != b.arc_count() {
        return None;
    }
    let pa: Vec<_> = (0..n).map(|v| profile(a, v)).collect();
    let pb: Vec<_> = (0..n).map(|v| profile(b, v)).collect();
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    // Map the most constrained vertices first: rarest profile, then highest degree.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| {
        let rarity = pa.iter().filter(|&&p| p == pa[v]).count();
        (rarity, std::cmp::Reverse(pa[v].1 + pa[v].2), v)
    });
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn go(
        a: &Digraph,
        b: &Digraph,
        pa: &[(bool, usize, usize)],
        pb: &[(bool, usize, usize)],
        order: &[usize],
        depth: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let u = order[depth];
        for x in 0..b.order() {
            if used[x] || pa[u] != pb[x] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&w| {
                a.has_arc(u, w) == b.has_arc(x, map[w]) && a.has_arc(w, u) == b.has_arc(map[w], x)
            });
            if !consistent {
                continue;
            }
            map[u] = x;
            used[x] = true;
            if go(a, b, pa, pb, order, depth + 1, map, used) {
                return true;
            }
            used[x] = false;
        }
        map[u] = usize::MAX;
        false
    }
    go(a, b, &pa, &pb, &order, 0, &mut map, &mut used).then_some(map)
}

pub fn is_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    find_isomorphism(a, b).is_some()
}
