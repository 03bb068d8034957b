use std::collections::HashMap;

use crate::error::Error;

use super::{LabeledForest, PlaneForest};

pub const MAX_FOREST_NODES: usize = 8;
pub const MAX_PLANE_NODES: usize = 12;

/// Every labeled forest on `{1..n}` (or only the trees), each exactly once.
///
/// Parent functions are generated directly, node by node, pruning as soon as
/// a cycle closes; complete functions whose components are not rooted at
/// their largest label are dropped. Output is in lexicographic order of the
/// parent list with "root" ordered before every label.
pub fn enumerate_labeled_forests(
    n: usize,
    trees_only: bool,
) -> Result<impl Iterator<Item = LabeledForest>, Error> {
    if n == 0 || n > MAX_FOREST_NODES {
        return Err(Error::NodeCountOutOfRange {
            n,
            min: 1,
            max: MAX_FOREST_NODES,
        });
    }
    let mut out = Vec::new();
    let mut parents = vec![None; n];
    extend_parents(n, 0, trees_only, &mut parents, &mut out);
    Ok(out
        .into_iter()
        .map(|p| LabeledForest::from_parents(&p).expect("canonical parent list")))
}

fn extend_parents(
    n: usize,
    idx: usize,
    trees_only: bool,
    parents: &mut Vec<Option<usize>>,
    out: &mut Vec<Vec<Option<usize>>>,
) {
    if idx == n {
        if is_canonical(parents) {
            out.push(parents.clone());
        }
        return;
    }
    let v = idx + 1;
    // the largest label is always a root; in a tree it is the only one
    let root_allowed = v == n || !trees_only;
    if root_allowed {
        parents[idx] = None;
        extend_parents(n, idx + 1, trees_only, parents, out);
    }
    if v == n {
        return;
    }
    for p in 1..=n {
        if p == v || closes_cycle(parents, idx, v, p) {
            continue;
        }
        parents[idx] = Some(p);
        extend_parents(n, idx + 1, trees_only, parents, out);
    }
    parents[idx] = None;
}

/// Would setting `parent(v) = p` close a cycle among nodes assigned so far?
fn closes_cycle(parents: &[Option<usize>], assigned: usize, v: usize, p: usize) -> bool {
    let mut cur = p;
    loop {
        if cur == v {
            return true;
        }
        if cur > assigned {
            return false;
        }
        match parents[cur - 1] {
            Some(next) => cur = next,
            None => return false,
        }
    }
}

fn is_canonical(parents: &[Option<usize>]) -> bool {
    (1..=parents.len()).all(|v| {
        let mut cur = v;
        while let Some(p) = parents[cur - 1] {
            cur = p;
        }
        cur >= v
    })
}

/// Every plane forest on `n` nodes, as degree sequences. There are
/// `Cat(n)` of them.
pub fn enumerate_plane_forests(n: usize) -> Result<impl Iterator<Item = PlaneForest>, Error> {
    if n == 0 || n > MAX_PLANE_NODES {
        return Err(Error::NodeCountOutOfRange {
            n,
            min: 1,
            max: MAX_PLANE_NODES,
        });
    }
    let mut memo = HashMap::new();
    let seqs = forest_sequences(n, &mut memo);
    Ok(seqs
        .into_iter()
        .map(|s| PlaneForest::from_degree_sequence(&s).expect("generated sequence is valid")))
}

/// Plane trees on `n` nodes.
pub fn enumerate_plane_trees(n: usize) -> Result<impl Iterator<Item = PlaneForest>, Error> {
    Ok(enumerate_plane_forests(n)?.filter(PlaneForest::is_tree))
}

/// A forest is a first tree followed by a forest; a tree on `a` nodes is a
/// root whose subtrees form a forest on `a - 1` nodes.
fn forest_sequences(n: usize, memo: &mut HashMap<usize, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    if let Some(v) = memo.get(&n) {
        return v.clone();
    }
    let mut out = Vec::new();
    for first in 1..=n {
        let subtrees = forest_sequences(first - 1, memo);
        let rest = forest_sequences(n - first, memo);
        for sub in &subtrees {
            let root_degree = count_components(sub);
            for tail in &rest {
                let mut seq = Vec::with_capacity(n);
                seq.push(root_degree);
                seq.extend_from_slice(sub);
                seq.extend_from_slice(tail);
                out.push(seq);
            }
        }
    }
    memo.insert(n, out.clone());
    out
}

fn count_components(seq: &[usize]) -> usize {
    let mut open: isize = 0;
    let mut count = 0;
    for &d in seq {
        if open == 0 {
            open = 1;
            count += 1;
        }
        open += d as isize - 1;
    }
    count
}

pub fn catalan(n: u64) -> u128 {
    crate::exact::binomial(2 * n, n) / (n as u128 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_counts() {
        assert_eq!(enumerate_labeled_forests(4, true).unwrap().count(), 16);
        assert_eq!(enumerate_labeled_forests(3, false).unwrap().count(), 7);
        assert_eq!(enumerate_labeled_forests(2, true).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_forests(1, false).unwrap().count(), 1);
        assert!(enumerate_labeled_forests(0, false).is_err());
        assert!(enumerate_labeled_forests(9, false).is_err());
    }

    #[test]
    fn plane_counts() {
        assert_eq!(enumerate_plane_forests(3).unwrap().count(), 5);
        assert_eq!(enumerate_plane_forests(1).unwrap().count(), 1);
        assert_eq!(enumerate_plane_trees(4).unwrap().count(), 5);
        for n in 1..=9 {
            assert_eq!(
                enumerate_plane_forests(n).unwrap().count() as u128,
                catalan(n as u64)
            );
        }
        assert!(enumerate_plane_forests(13).is_err());
    }

    #[test]
    fn plane_forests_are_distinct() {
        let all: Vec<_> = enumerate_plane_forests(6).unwrap().collect();
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
    }
}
