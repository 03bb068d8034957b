use proptest::prelude::*;

use tutte_polytope::exact::{
    poly_substitute_tutte, rat, tutte_to_cluster, BivariatePolynomial, Rational, RationalMatrix,
};
use tutte_polytope::volume::z_bruteforce;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| rat(n, d))
}

fn polynomial() -> impl Strategy<Value = BivariatePolynomial> {
    prop::collection::vec((0u32..4, 0u32..4, rational()), 0..6).prop_map(|terms| {
        let mut p = BivariatePolynomial::zero();
        for (a, b, c) in terms {
            p.add_term(a, b, c);
        }
        p
    })
}

fn square(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(rational(), n), n)
}

proptest! {
    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if let Some(inv) = a.recip() {
            prop_assert_eq!(&a * &inv, Rational::one());
        }
    }

    #[test]
    fn rational_text_round_trip(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn polynomial_ring_laws(p in polynomial(), q in polynomial(), r in polynomial()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_map(p in polynomial(), q in polynomial(), x in rational(), y in rational()) {
        prop_assert_eq!((&p * &q).eval(&x, &y), &p.eval(&x, &y) * &q.eval(&x, &y));
        prop_assert_eq!((&p + &q).eval(&x, &y), &p.eval(&x, &y) + &q.eval(&x, &y));
        let shifted = p.translate(&x, &y);
        prop_assert_eq!(shifted.eval(&Rational::zero(), &Rational::zero()), p.eval(&x, &y));
    }

    #[test]
    fn polynomial_json_round_trip(p in polynomial()) {
        prop_assert_eq!(BivariatePolynomial::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn determinant_is_alternating(m in square(4), i in 0usize..4, j in 0usize..4) {
        prop_assume!(i != j);
        let a = RationalMatrix::new(m.clone()).unwrap();
        let mut swapped = m;
        swapped.swap(i, j);
        let b = RationalMatrix::new(swapped).unwrap();
        prop_assert_eq!(b.determinant().unwrap(), -a.determinant().unwrap());
    }

    #[test]
    fn determinant_is_multilinear(m in square(3), row in prop::collection::vec(rational(), 3), c in rational()) {
        // replace row 0 by m[0] + c·row
        let base = RationalMatrix::new(m.clone()).unwrap().determinant().unwrap();
        let mut other = m.clone();
        other[0] = row.clone();
        let other_det = RationalMatrix::new(other).unwrap().determinant().unwrap();
        let mut mixed = m;
        mixed[0] = mixed[0].iter().zip(&row).map(|(a, b)| a + &(&c * b)).collect();
        let mixed_det = RationalMatrix::new(mixed).unwrap().determinant().unwrap();
        prop_assert_eq!(mixed_det, &base + &(&c * &other_det));
    }

    #[test]
    fn determinant_is_multiplicative(a in square(3), b in square(3)) {
        let ma = RationalMatrix::new(a.clone()).unwrap();
        let mb = RationalMatrix::new(b.clone()).unwrap();
        let product: Vec<Vec<Rational>> = (0..3)
            .map(|i| (0..3).map(|j| (0..3).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
            .collect();
        let mp = RationalMatrix::new(product).unwrap();
        prop_assert_eq!(
            mp.determinant().unwrap(),
            &ma.determinant().unwrap() * &mb.determinant().unwrap()
        );
    }

    #[test]
    fn solve_gives_a_solution(m in square(3), rhs in prop::collection::vec(rational(), 3)) {
        let a = RationalMatrix::new(m.clone()).unwrap();
        match a.solve(&rhs).unwrap() {
            Some(x) => {
                for (row, b) in m.iter().zip(&rhs) {
                    let lhs: Rational = row.iter().zip(&x).map(|(u, v)| u * v).sum();
                    prop_assert_eq!(&lhs, b);
                }
            }
            None => prop_assert!(a.determinant().unwrap().is_zero()),
        }
    }
}

#[test]
fn tutte_conversion_round_trips_on_complete_graphs() {
    for nodes in 1..=6 {
        let z = z_bruteforce(nodes).unwrap();
        let tutte = poly_substitute_tutte(&z, nodes).unwrap();
        assert_eq!(tutte_to_cluster(&tutte, nodes).unwrap(), z, "K_{nodes}");
        // T(1, 1) counts spanning trees, nodes^{nodes-2}
        let trees = if nodes == 1 {
            1
        } else {
            (nodes as i64).pow(nodes as u32 - 2)
        };
        assert_eq!(tutte.eval(&rat(1, 1), &rat(1, 1)), rat(trees, 1));
    }
}

#[test]
fn tutte_of_triangle() {
    // T_{K_3} = x^2 + x + y
    let t = poly_substitute_tutte(&z_bruteforce(3).unwrap(), 3).unwrap();
    let mut expected = BivariatePolynomial::zero();
    expected.add_term(2, 0, rat(1, 1));
    expected.add_term(1, 0, rat(1, 1));
    expected.add_term(0, 1, rat(1, 1));
    assert_eq!(t, expected);
    assert_eq!(t.named("x", "y").to_string(), "x + y + x^2");
}
