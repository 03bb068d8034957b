use tutte_polytope::exact::{rat, tutte_to_cluster, BivariatePolynomial, Rational};
use tutte_polytope::forest::enumerate_labeled_forests;
use tutte_polytope::polytope::Family;
use tutte_polytope::volume::{
    connected_gf, determinant_total, graph_total, inversion_enumerator,
    lattice_and_partition_counts, piece_closed_total, simplex_closed_total, z_bruteforce,
    ConnectedMode, VolumeReport,
};

/// Tutte polynomial of a multigraph by deletion and contraction, with `x` in
/// the first slot and `y` in the second.
fn tutte_dc(nodes: usize, edges: &[(usize, usize)]) -> BivariatePolynomial {
    let Some((&(a, b), rest)) = edges.split_last() else {
        return BivariatePolynomial::one();
    };
    if a == b {
        return &BivariatePolynomial::t() * &tutte_dc(nodes, rest);
    }
    let contracted: Vec<(usize, usize)> = rest
        .iter()
        .map(|&(u, v)| {
            let r = |w: usize| if w == b { a } else { w };
            (r(u), r(v))
        })
        .collect();
    if !connected(nodes, rest, a, b) {
        return &BivariatePolynomial::q() * &tutte_dc(nodes, &contracted);
    }
    &tutte_dc(nodes, rest) + &tutte_dc(nodes, &contracted)
}

fn connected(nodes: usize, edges: &[(usize, usize)], from: usize, to: usize) -> bool {
    let mut seen = vec![false; nodes];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(u) = stack.pop() {
        for &(x, y) in edges {
            for (p, w) in [(x, y), (y, x)] {
                if p == u && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    seen[to]
}

fn complete_edges(nodes: usize) -> Vec<(usize, usize)> {
    (0..nodes)
        .flat_map(|i| (i + 1..nodes).map(move |j| (i, j)))
        .collect()
}

const CONNECTED_GRAPHS: [i64; 7] = [1, 1, 4, 38, 728, 26704, 1866256];

#[test]
fn deletion_contraction_oracle_on_k4() {
    // x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3
    let mut expected = BivariatePolynomial::zero();
    for (a, b, c) in [
        (3, 0, 1),
        (2, 0, 3),
        (1, 0, 2),
        (1, 1, 4),
        (0, 1, 2),
        (0, 2, 3),
        (0, 3, 1),
    ] {
        expected.add_term(a, b, rat(c, 1));
    }
    assert_eq!(tutte_dc(4, &complete_edges(4)), expected);
}

#[test]
fn simplex_volumes_sum_to_the_cluster_polynomial() {
    for n in 1..=5 {
        let nodes = n + 1;
        let z = z_bruteforce(nodes).unwrap();
        let from_tutte = tutte_to_cluster(&tutte_dc(nodes, &complete_edges(nodes)), nodes).unwrap();
        assert_eq!(z, from_tutte, "n = {n}");
        assert_eq!(
            simplex_closed_total(Family::Tutte, n).unwrap(),
            z,
            "n = {n}"
        );
        assert_eq!(piece_closed_total(Family::Tutte, n).unwrap(), z, "n = {n}");
    }
}

#[test]
fn cayley_volumes_count_connected_graphs() {
    let one = rat(1, 1);
    for (n, &count) in CONNECTED_GRAPHS.iter().enumerate().take(6).skip(1) {
        let expected = rat(count, 1);
        let by_alpha: i64 = enumerate_labeled_forests(n + 1, true)
            .unwrap()
            .map(|t| 1i64 << t.alpha())
            .sum();
        assert_eq!(rat(by_alpha, 1), expected);
        assert_eq!(
            simplex_closed_total(Family::Cayley, n).unwrap(),
            BivariatePolynomial::constant(expected.clone())
        );
        assert_eq!(
            piece_closed_total(Family::Cayley, n).unwrap(),
            BivariatePolynomial::constant(expected.clone())
        );
        if n <= 4 {
            assert_eq!(
                determinant_total(Family::Cayley, n, &one, &one).unwrap(),
                expected
            );
        }
    }
}

#[test]
fn gayley_volumes_count_all_graphs() {
    for n in 1..=5 {
        let edges = ((n + 1) * n / 2) as u32;
        let expected = BivariatePolynomial::constant(Rational::from(1i64 << edges));
        assert_eq!(simplex_closed_total(Family::Gayley, n).unwrap(), expected);
        assert_eq!(graph_total(Family::Gayley, n).unwrap(), expected);
    }
}

#[test]
fn t_cayley_volume_is_the_connected_edge_polynomial() {
    for (n, &count) in CONNECTED_GRAPHS.iter().enumerate().take(6).skip(1) {
        let f = connected_gf(n + 1, ConnectedMode::BruteForce).unwrap();
        assert_eq!(simplex_closed_total(Family::TCayley, n).unwrap(), f);
        assert_eq!(f.eval(&rat(0, 1), &rat(1, 1)), rat(count, 1));
    }
}

#[test]
fn determinant_totals_match_for_every_family() {
    for (q, t) in [(rat(1, 2), rat(1, 1)), (rat(1, 3), rat(2, 1))] {
        for family in Family::ALL {
            for n in 1..=4 {
                let report = VolumeReport::compute(family, n, &q, &t, false).unwrap();
                assert!(report.consistent(), "{family} n = {n}");
                let (qp, tp) = family.polynomial_parameters(&q, &t);
                assert_eq!(
                    report.by_determinant.unwrap(),
                    report.by_graph_sum.eval(&qp, &tp)
                );
            }
        }
    }
}

#[test]
fn recursion_matches_brute_force() {
    for n in 1..=7 {
        assert_eq!(
            connected_gf(n, ConnectedMode::Recursion).unwrap(),
            connected_gf(n, ConnectedMode::BruteForce).unwrap(),
            "n = {n}"
        );
    }
    // far beyond the sweep the recursion still counts connected graphs
    let f10 = connected_gf(10, ConnectedMode::Recursion).unwrap();
    assert_eq!(f10.eval(&rat(0, 1), &rat(1, 1)), rat(34496488594816, 1));
}

#[test]
fn inversions_give_the_connected_edge_polynomial() {
    for n in 1..=7 {
        let inv = inversion_enumerator(n).unwrap();
        let trees = if n == 1 {
            1
        } else {
            (n as i64).pow(n as u32 - 2)
        };
        assert_eq!(inv.eval(&rat(0, 1), &rat(1, 1)), rat(trees, 1));
        let factorial: i64 = (1..n as i64).product();
        assert_eq!(inv.eval(&rat(0, 1), &rat(0, 1)), rat(factorial, 1));
        // t^{n-1} I_n(1 + t)
        let shifted = inv.translate(&rat(0, 1), &rat(1, 1)).shift(0, n as u32 - 1);
        assert_eq!(
            shifted,
            connected_gf(n, ConnectedMode::BruteForce).unwrap(),
            "n = {n}"
        );
    }
}

fn cayley_lattice_points(n: usize) -> u64 {
    fn walk(depth: usize, n: usize, previous: u64) -> u64 {
        if depth == n {
            return 1;
        }
        (1..=2 * previous).map(|x| walk(depth + 1, n, x)).sum()
    }
    walk(0, n, 1)
}

#[test]
fn lattice_points_equal_partitions() {
    let known = [2u64, 6, 26];
    for n in 1..=10 {
        let (lattice, partitions) = lattice_and_partition_counts(n).unwrap();
        assert_eq!(lattice, partitions, "n = {n}");
        if n <= 7 {
            assert_eq!(lattice, cayley_lattice_points(n).into(), "n = {n}");
        }
        if n <= known.len() {
            assert_eq!(lattice, known[n - 1].into(), "n = {n}");
        }
    }
    assert!(lattice_and_partition_counts(0).is_err());
}
