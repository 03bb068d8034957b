//! Conversions between the random-cluster sum `Z_G(q, t)` of a connected graph
//! and its Tutte polynomial `T_G(x, y)`.
//!
//! Both directions work in the shifted basis `u = x - 1`, `w = y - 1`, where
//! the substitution is monomial-to-monomial. Division by a power of `w` is
//! a degree offset, and any term whose offset degree goes negative means the
//! input was not of the expected form.

use super::{BivariatePolynomial, Rational};
use crate::error::Error;

/// `T_G(x, y) = (y-1)^{1-nodes} Z_G((x-1)(y-1), y-1)` for a connected graph
/// on `nodes` nodes. The result uses the `q` slot for `x` and `t` for `y`.
pub fn poly_substitute_tutte(
    z: &BivariatePolynomial,
    nodes: usize,
) -> Result<BivariatePolynomial, Error> {
    if nodes == 0 {
        return Err(Error::NotClusterPolynomial {
            nodes,
            detail: "graph must have at least one node".into(),
        });
    }
    let offset = (nodes - 1) as i64;
    let mut shifted = BivariatePolynomial::zero();
    for (a, b, c) in z.terms() {
        let w_deg = (a + b) as i64 - offset;
        if w_deg < 0 {
            return Err(Error::NotClusterPolynomial {
                nodes,
                detail: format!("term q^{a} t^{b} leaves (y-1)^{w_deg}"),
            });
        }
        shifted.add_term(a, w_deg as u32, c.clone());
    }
    let minus_one = Rational::from(-1);
    Ok(shifted.translate(&minus_one, &minus_one))
}

/// Inverse direction: `t^{nodes-1} T_G(1 + q/t, 1 + t)`, which equals
/// `Z_G(q, t)` for connected `G`.
pub fn tutte_to_cluster(
    tutte: &BivariatePolynomial,
    nodes: usize,
) -> Result<BivariatePolynomial, Error> {
    if nodes == 0 {
        return Err(Error::NotClusterPolynomial {
            nodes,
            detail: "graph must have at least one node".into(),
        });
    }
    let offset = (nodes - 1) as i64;
    let one = Rational::one();
    let shifted = tutte.translate(&one, &one);
    let mut z = BivariatePolynomial::zero();
    for (a, c, coeff) in shifted.terms() {
        let t_deg = c as i64 - a as i64 + offset;
        if t_deg < 0 {
            return Err(Error::NotClusterPolynomial {
                nodes,
                detail: format!("term (x-1)^{a} (y-1)^{c} leaves t^{t_deg}"),
            });
        }
        z.add_term(a, t_deg as u32, coeff.clone());
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn poly(terms: &[(u32, u32, i64)]) -> BivariatePolynomial {
        let mut p = BivariatePolynomial::zero();
        for &(a, b, c) in terms {
            p.add_term(a, b, rat(c, 1));
        }
        p
    }

    #[test]
    fn k3_and_k2() {
        let z3 = poly(&[(2, 0, 1), (1, 1, 3), (0, 2, 3), (0, 3, 1)]);
        // x^2 + x + y
        let t3 = poly(&[(2, 0, 1), (1, 0, 1), (0, 1, 1)]);
        assert_eq!(poly_substitute_tutte(&z3, 3).unwrap(), t3);
        assert_eq!(tutte_to_cluster(&t3, 3).unwrap(), z3);

        let z2 = poly(&[(1, 0, 1), (0, 1, 1)]);
        assert_eq!(poly_substitute_tutte(&z2, 2).unwrap(), poly(&[(1, 0, 1)]));
    }

    #[test]
    fn rejects_non_cluster_input() {
        // a constant is not Z of a connected graph on 3 nodes
        assert!(matches!(
            poly_substitute_tutte(&BivariatePolynomial::one(), 3),
            Err(Error::NotClusterPolynomial { .. })
        ));
        assert!(poly_substitute_tutte(&BivariatePolynomial::one(), 0).is_err());
        // the single-node graph has Z = 1 and T = 1
        assert_eq!(
            poly_substitute_tutte(&BivariatePolynomial::one(), 1).unwrap(),
            BivariatePolynomial::one()
        );
    }
}
