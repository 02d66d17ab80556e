use super::FiniteLattice;

/// Per-element signature preserved by order isomorphisms.
fn signatures<T>(l: &FiniteLattice<T>) -> Vec<(usize, usize, usize, usize, usize)> {
    let n = l.len();
    let heights = l.heights();
    (0..n)
        .map(|a| {
            let below = (0..n).filter(|&b| l.leq(b, a)).count();
            let above = (0..n).filter(|&b| l.leq(a, b)).count();
            let up = l.cover_pairs().iter().filter(|&&(_, d)| d == a).count();
            let down = l.cover_pairs().iter().filter(|&&(u, _)| u == a).count();
            (heights[a], below, above, up, down)
        })
        .collect()
}

/// An order isomorphism from `a` onto `b`, as `map[i]` = image of element `i`.
pub fn find_isomorphism<T, U>(a: &FiniteLattice<T>, b: &FiniteLattice<U>) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() || a.cover_pairs().len() != b.cover_pairs().len() {
        return None;
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }
    // visit elements bottom-up so comparabilities are checked early
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (sig_a[x].1, x));
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| sig_b[y] == sig_a[x]).collect())
        .collect();

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &order, &candidates, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend<T, U>(
    a: &FiniteLattice<T>,
    b: &FiniteLattice<U>,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    for &y in &candidates[x] {
        if used[y] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&p| {
            let q = map[p];
            a.leq(p, x) == b.leq(q, y) && a.leq(x, p) == b.leq(y, q)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend(a, b, order, candidates, depth + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}

pub fn order_isomorphic<T, U>(a: &FiniteLattice<T>, b: &FiniteLattice<U>) -> bool {
    find_isomorphism(a, b).is_some()
}
