use rayon::prelude::*;

use crate::error::Error;
use crate::exact::{binomial, BivariatePolynomial, Rational};
use crate::forest::enumerate_labeled_forests;
use crate::graph::{component_count_with, enumerate_graphs, pair_count, pair_table, shard_ranges};

pub const MAX_SWEEP_NODES: usize = 7;
pub const MAX_RECURSION_NODES: usize = 30;

fn check_sweep(n: usize) -> Result<(), Error> {
    if n == 0 || n > MAX_SWEEP_NODES {
        return Err(Error::NodeCountOutOfRange {
            n,
            min: 1,
            max: MAX_SWEEP_NODES,
        });
    }
    Ok(())
}

/// `Z_{K_n}(q, t) = Σ_H q^{k(H) - 1} t^{e(H)}` over all spanning subgraphs,
/// swept in parallel shards of the edge-bitset range.
pub fn z_bruteforce(n: usize) -> Result<BivariatePolynomial, Error> {
    check_sweep(n)?;
    let table = pair_table(n);
    let edges = pair_count(n);
    let counts = shard_ranges(n, 64)
        .into_par_iter()
        .map(|range| {
            let mut counts = vec![vec![0u64; edges + 1]; n];
            for bits in range {
                let k = component_count_with(n, bits, &table);
                counts[k - 1][bits.count_ones() as usize] += 1;
            }
            counts
        })
        .reduce(
            || vec![vec![0u64; edges + 1]; n],
            |mut a, b| {
                for (ra, rb) in a.iter_mut().zip(b) {
                    for (x, y) in ra.iter_mut().zip(rb) {
                        *x += y;
                    }
                }
                a
            },
        );
    let mut z = BivariatePolynomial::zero();
    for (k, row) in counts.iter().enumerate() {
        for (e, &c) in row.iter().enumerate() {
            if c > 0 {
                z.add_term(k as u32, e as u32, Rational::from_integer(c));
            }
        }
    }
    Ok(z)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConnectedMode {
    BruteForce,
    Recursion,
}

/// `F_n(t) = Σ t^{|E(G)|}` over connected labeled graphs on `n` nodes, as a
/// polynomial in `t` alone.
pub fn connected_gf(n: usize, mode: ConnectedMode) -> Result<BivariatePolynomial, Error> {
    match mode {
        ConnectedMode::BruteForce => {
            check_sweep(n)?;
            let mut counts = vec![0u64; pair_count(n) + 1];
            for g in enumerate_graphs(n, true)? {
                counts[g.edge_count()] += 1;
            }
            let mut p = BivariatePolynomial::zero();
            for (e, c) in counts.into_iter().enumerate() {
                p.add_term(0, e as u32, Rational::from_integer(c));
            }
            Ok(p)
        }
        ConnectedMode::Recursion => {
            if n == 0 || n > MAX_RECURSION_NODES {
                return Err(Error::NodeCountOutOfRange {
                    n,
                    min: 1,
                    max: MAX_RECURSION_NODES,
                });
            }
            let r = recursion_r(n - 1);
            let m = n - 1;
            Ok((0..=m)
                .map(|j| {
                    let c = Rational::from_integer(binomial(m as u64, j as u64));
                    let e = binomial(j as u64 + 1, 2) as u32;
                    (&BivariatePolynomial::one_plus_t_pow(e) * &r[m - j]).scale(&c)
                })
                .sum())
        }
    }
}

/// `r_0, .., r_m` with `r_0 = 1` and
/// `r_k = -Σ_{j=1}^k C(k, j) (1+t)^{C(j, 2)} r_{k-j}`.
pub fn recursion_r(m: usize) -> Vec<BivariatePolynomial> {
    let mut r = vec![BivariatePolynomial::one()];
    for k in 1..=m {
        let s: BivariatePolynomial = (1..=k)
            .map(|j| {
                let c = Rational::from_integer(binomial(k as u64, j as u64));
                let e = binomial(j as u64, 2) as u32;
                (&BivariatePolynomial::one_plus_t_pow(e) * &r[k - j]).scale(&c)
            })
            .sum();
        r.push(-&s);
    }
    r
}

/// Labeled trees on `n` nodes counted by inversions, the variable `y`
/// stored in the `t` slot. With the tree rooted at 1, an inversion is an
/// ancestor carrying a larger label than a descendant.
pub fn inversion_enumerator(n: usize) -> Result<BivariatePolynomial, Error> {
    check_sweep(n)?;
    let mut p = BivariatePolynomial::zero();
    // Trees come rooted at n; relabeling v -> n + 1 - v roots them at 1 and
    // turns "ancestor larger" into "ancestor smaller".
    for tree in enumerate_labeled_forests(n, true)? {
        let mut inversions = 0u32;
        for d in 1..=n {
            let mut a = tree.parent(d);
            while let Some(anc) = a {
                if anc < d {
                    inversions += 1;
                }
                a = tree.parent(anc);
            }
        }
        p.add_term(0, inversions, Rational::one());
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn poly(s: &[(u32, u32, i64)]) -> BivariatePolynomial {
        let mut p = BivariatePolynomial::zero();
        for &(a, b, c) in s {
            p.add_term(a, b, rat(c, 1));
        }
        p
    }

    #[test]
    fn small_z() {
        assert_eq!(z_bruteforce(2).unwrap(), poly(&[(1, 0, 1), (0, 1, 1)]));
        assert_eq!(
            z_bruteforce(3).unwrap(),
            poly(&[(2, 0, 1), (1, 1, 3), (0, 2, 3), (0, 3, 1)])
        );
        for n in 1..=5 {
            let total = z_bruteforce(n).unwrap().eval(&rat(1, 1), &rat(1, 1));
            assert_eq!(total, Rational::from_integer(1u64 << pair_count(n)));
        }
        assert!(z_bruteforce(8).is_err());
    }

    #[test]
    fn connected_small() {
        let f4 = poly(&[(0, 3, 16), (0, 4, 15), (0, 5, 6), (0, 6, 1)]);
        assert_eq!(connected_gf(4, ConnectedMode::BruteForce).unwrap(), f4);
        assert_eq!(connected_gf(4, ConnectedMode::Recursion).unwrap(), f4);
        assert_eq!(
            connected_gf(2, ConnectedMode::Recursion).unwrap(),
            poly(&[(0, 1, 1)])
        );
        assert_eq!(
            connected_gf(1, ConnectedMode::Recursion).unwrap(),
            poly(&[(0, 0, 1)])
        );
        assert_eq!(recursion_r(1)[1], poly(&[(0, 0, -1)]));
    }

    #[test]
    fn inversions_small() {
        assert_eq!(inversion_enumerator(2).unwrap(), poly(&[(0, 0, 1)]));
        assert_eq!(
            inversion_enumerator(3).unwrap(),
            poly(&[(0, 0, 2), (0, 1, 1)])
        );
    }
}
