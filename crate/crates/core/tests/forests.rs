use std::collections::{HashMap, HashSet};

use proptest::prelude::*;

use tutte_polytope::exact::rat;
use tutte_polytope::forest::{
    catalan, enumerate_labeled_forests, enumerate_plane_forests, nfs, LabeledForest, PlaneForest,
};
use tutte_polytope::graph::{enumerate_graphs, LabeledGraph};
use tutte_polytope::verify::labeled_forest_count;

#[test]
fn search_image_is_every_forest() {
    for n in 1..=6 {
        let image: HashSet<LabeledForest> = enumerate_graphs(n, false)
            .unwrap()
            .map(|g| nfs(&g))
            .collect();
        let all: HashSet<LabeledForest> = enumerate_labeled_forests(n, false).unwrap().collect();
        assert_eq!(image, all, "n = {n}");
        assert_eq!(all.len() as u128, labeled_forest_count(n));
    }
}

#[test]
fn fiber_sizes_are_powers_of_two() {
    let n = 5;
    let mut fibers: HashMap<LabeledForest, usize> = HashMap::new();
    for g in enumerate_graphs(n, false).unwrap() {
        *fibers.entry(nfs(&g)).or_default() += 1;
    }
    for (f, size) in fibers {
        assert_eq!(size, 1 << f.cane_edges().len(), "{f}");
        assert_eq!(f.cane_edges().len() as u32, f.alpha());
    }
}

#[test]
fn trees_weighted_by_cane_paths_count_connected_graphs() {
    // Σ_T 2^{α(T)} over labeled trees = number of connected graphs
    let connected = [1u64, 1, 4, 38, 728, 26704];
    for (idx, &expected) in connected.iter().enumerate() {
        let n = idx + 1;
        let sum: u64 = enumerate_labeled_forests(n, true)
            .unwrap()
            .map(|t| 1u64 << t.alpha())
            .sum();
        assert_eq!(sum, expected, "n = {n}");
    }
}

#[test]
fn two_exponent_rules_agree() {
    for n in 1..=7 {
        for f in enumerate_labeled_forests(n, false).unwrap() {
            let top_down = f.coordinate_exponents();
            for v in 1..=n {
                assert_eq!(top_down[v - 1], f.cane_paths_from(v), "{f} node {v}");
            }
        }
    }
}

#[test]
fn shapes_partition_labeled_forests() {
    for n in 1..=7 {
        let mut per_shape: HashMap<PlaneForest, u64> = HashMap::new();
        for f in enumerate_labeled_forests(n, false).unwrap() {
            let shape = f.shape();
            assert_eq!(shape.alpha(), f.alpha());
            *per_shape.entry(shape).or_default() += 1;
        }
        let shapes: Vec<PlaneForest> = enumerate_plane_forests(n).unwrap().collect();
        assert_eq!(shapes.len() as u128, catalan(n as u64));
        for s in shapes {
            let count = per_shape.get(&s).copied().unwrap_or(0);
            assert_eq!(rat(count as i64, 1), s.labeling_count(), "{s}");
        }
    }
}

#[test]
fn degree_formula_for_cane_paths() {
    for n in 1..=10 {
        for f in enumerate_plane_forests(n).unwrap() {
            assert_eq!(f.alpha() as i64, f.alpha_from_degrees(), "{f}");
            assert_eq!(f.representative().shape(), f);
        }
    }
}

#[test]
fn text_round_trips() {
    for f in enumerate_labeled_forests(5, false).unwrap() {
        assert_eq!(f.to_string().parse::<LabeledForest>().unwrap(), f);
        assert_eq!(
            f.shape().to_string().parse::<PlaneForest>().unwrap(),
            f.shape()
        );
    }
    // 1 rooted under 2 but the component's maximum is 2 so this is fine;
    // a component rooted below its maximum is rejected
    assert!("2,0".parse::<LabeledForest>().is_ok());
    assert!("0,1".parse::<LabeledForest>().is_err());
}

fn graph_on(n: usize) -> impl Strategy<Value = LabeledGraph> {
    let pairs = n * (n - 1) / 2;
    prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
        let mask = bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .fold(0u128, |acc, (i, _)| acc | 1 << i);
        LabeledGraph::new(n, mask).unwrap()
    })
}

proptest! {
    #[test]
    fn search_forest_sits_between_graph_and_cane_closure(g in (2usize..=9).prop_flat_map(graph_on)) {
        let f = nfs(&g);
        let forest = f.to_graph();
        prop_assert_eq!(forest.bits() & !g.bits(), 0);
        prop_assert_eq!(f.component_count(), g.component_count());
        let mut closure = forest;
        for (i, j) in f.cane_edges() {
            closure = closure.with_edge(i, j);
        }
        prop_assert_eq!(g.bits() & !closure.bits(), 0);
        prop_assert_eq!(nfs(&closure), f.clone());
        prop_assert_eq!(nfs(&f.to_graph()), f);
    }
}
