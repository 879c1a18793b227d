//! Finite poset helpers: down-set / up-set enumeration and rank counts.
//!
//! Elements are identified by their position `0..n` in a fixed linear
//! extension; `leq(a, b)` is the partial order. All enumerators return
//! subsets in a deterministic order.

use std::collections::BTreeSet;

/// Asserts that identity order is a linear extension of `leq`: a < b in the
/// poset implies a comes earlier. All callers index posets this way.
fn assert_linear_extension(n: usize, leq: &dyn Fn(usize, usize) -> bool) {
    for a in 0..n {
        for b in 0..a {
            debug_assert!(
                !leq(a, b) || leq(b, a),
                "index order must refine the partial order"
            );
        }
    }
}

/// Enumerates every down-set (order ideal) of the poset on `0..n`.
///
/// A subset S is a down-set when b in S and a <= b imply a in S. The result
/// is ordered by (size, lexicographic members) and always contains the empty
/// set and the full set.
pub fn down_sets(n: usize, leq: &dyn Fn(usize, usize) -> bool) -> Vec<BTreeSet<usize>> {
    assert_linear_extension(n, leq);
    let mut acc: Vec<BTreeSet<usize>> = Vec::new();
    let mut chosen = vec![false; n];
    dfs(0, n, leq, &mut chosen, &mut acc);
    acc.sort_by_key(sort_key);
    acc
}

fn dfs(
    pos: usize,
    n: usize,
    leq: &dyn Fn(usize, usize) -> bool,
    chosen: &mut Vec<bool>,
    acc: &mut Vec<BTreeSet<usize>>,
) {
    if pos == n {
        acc.push(
            chosen
                .iter()
                .enumerate()
                .filter_map(|(i, &c)| c.then_some(i))
                .collect(),
        );
        return;
    }
    // Exclude pos.
    chosen[pos] = false;
    dfs(pos + 1, n, leq, chosen, acc);
    // Include pos, legal only when everything below it is already in.
    let closed = (0..pos).all(|j| !(leq(j, pos) && !chosen[j]) || j == pos);
    if closed {
        chosen[pos] = true;
        dfs(pos + 1, n, leq, chosen, acc);
        chosen[pos] = false;
    }
}

/// Enumerates every up-set (order filter): complements of down-sets.
pub fn up_sets(n: usize, leq: &dyn Fn(usize, usize) -> bool) -> Vec<BTreeSet<usize>> {
    let mut acc: Vec<BTreeSet<usize>> = down_sets(n, leq)
        .into_iter()
        .map(|d| (0..n).filter(|i| !d.contains(i)).collect())
        .collect();
    acc.sort_by_key(sort_key);
    acc
}

/// Down-sets of the sub-poset induced on `elems` (global indices, listed in a
/// linear extension of the induced order). Members of the result are global.
pub fn down_sets_of(elems: &[usize], leq: &dyn Fn(usize, usize) -> bool) -> Vec<BTreeSet<usize>> {
    let local = |a: usize, b: usize| leq(elems[a], elems[b]);
    down_sets(elems.len(), &local)
        .into_iter()
        .map(|s| s.into_iter().map(|i| elems[i]).collect())
        .collect()
}

/// Number of down-sets of the sub-poset on `elems` with each size `0..=n`.
pub fn down_set_size_counts(elems: &[usize], leq: &dyn Fn(usize, usize) -> bool) -> Vec<u64> {
    let mut counts = vec![0u64; elems.len() + 1];
    for s in down_sets_of(elems, leq) {
        counts[s.len()] += 1;
    }
    counts
}

fn sort_key(s: &BTreeSet<usize>) -> (usize, Vec<usize>) {
    (s.len(), s.iter().copied().collect())
}
