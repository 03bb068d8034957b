use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::Rational;
use crate::polytope::{AffineForm, Point};

/// Denominator of every sampled coordinate step.
pub const SAMPLE_DENOMINATOR: i64 = 1009;

/// 64-bit linear congruential generator; every sample stream is a pure
/// function of its seed.
#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Self {
            state: seed ^ 0x9e37_79b9_7f4a_7c15,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.state
    }

    /// Uniform in `0..=bound`, from the high bits.
    pub fn below_or_equal(&mut self, bound: u64) -> u64 {
        ((self.next_u64() >> 32) * (bound + 1)) >> 32
    }
}

/// Axis-aligned bounding box of a point set.
pub fn bounding_box(points: &[Point]) -> Vec<(Rational, Rational)> {
    let dim = points.first().map_or(0, Vec::len);
    (0..dim)
        .map(|i| {
            let lo = points
                .iter()
                .map(|p| &p[i])
                .min()
                .expect("nonempty")
                .clone();
            let hi = points
                .iter()
                .map(|p| &p[i])
                .max()
                .expect("nonempty")
                .clone();
            (lo, hi)
        })
        .collect()
}

/// A point of the box whose coordinates are `lo + (hi - lo) k / 1009`.
pub fn sample_in_box(rng: &mut Lcg, bbox: &[(Rational, Rational)]) -> Point {
    let d = Rational::from(SAMPLE_DENOMINATOR);
    bbox.iter()
        .map(|(lo, hi)| {
            let k = Rational::from(rng.below_or_equal(SAMPLE_DENOMINATOR as u64) as i64);
            lo + &(&(hi - lo) * &(&k / &d))
        })
        .collect()
}

/// An affine form with denominators cleared by a positive factor, so that
/// only its sign at a point is meaningful.
#[derive(Clone, Debug)]
pub struct SignForm {
    constant: BigInt,
    coefficients: Vec<BigInt>,
    small: Option<(i128, Vec<i128>)>,
}

/// A point `X / D` with integer numerators and a common denominator `D > 0`.
#[derive(Clone, Debug)]
pub struct ScaledPoint {
    denominator: BigInt,
    numerators: Vec<BigInt>,
    small: Option<(i128, Vec<i128>)>,
}

fn lcm_of<'a>(values: impl Iterator<Item = &'a BigInt>) -> BigInt {
    values.fold(BigInt::one(), |acc, d| acc.lcm(d))
}

fn to_small(v: &BigInt) -> Option<i128> {
    // leave headroom for a product and a short sum
    v.to_i128().filter(|x| x.unsigned_abs() < 1 << 60)
}

impl SignForm {
    pub fn new(form: &AffineForm) -> Self {
        let scale = lcm_of(
            std::iter::once(form.constant_term())
                .chain(form.coefficients())
                .map(Rational::denom),
        );
        let clear = |r: &Rational| r.numer() * (&scale / r.denom());
        let constant = clear(form.constant_term());
        let coefficients: Vec<BigInt> = form.coefficients().iter().map(clear).collect();
        let small = to_small(&constant).zip(
            coefficients
                .iter()
                .map(to_small)
                .collect::<Option<Vec<_>>>(),
        );
        Self {
            constant,
            coefficients,
            small,
        }
    }

    pub fn sign_at(&self, x: &ScaledPoint) -> Ordering {
        if let (Some((c, a)), Some((d, xs))) = (&self.small, &x.small) {
            let mut acc = Some(c * d);
            for (ai, xi) in a.iter().zip(xs) {
                acc = acc.and_then(|s| ai.checked_mul(*xi).and_then(|p| s.checked_add(p)));
            }
            if let Some(v) = acc {
                return v.cmp(&0);
            }
        }
        let mut acc = &self.constant * &x.denominator;
        for (a, xi) in self.coefficients.iter().zip(&x.numerators) {
            if !a.is_zero() {
                acc += a * xi;
            }
        }
        if acc.is_positive() {
            Ordering::Greater
        } else if acc.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl ScaledPoint {
    pub fn new(x: &[Rational]) -> Self {
        let denominator = lcm_of(x.iter().map(Rational::denom));
        let numerators: Vec<BigInt> = x
            .iter()
            .map(|r| r.numer() * (&denominator / r.denom()))
            .collect();
        let small =
            to_small(&denominator).zip(numerators.iter().map(to_small).collect::<Option<Vec<_>>>());
        Self {
            denominator,
            numerators,
            small,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn deterministic_and_in_range() {
        let mut a = Lcg::new(7);
        let mut b = Lcg::new(7);
        for _ in 0..100 {
            let x = a.below_or_equal(10);
            assert_eq!(x, b.below_or_equal(10));
            assert!(x <= 10);
        }
        let bbox = bounding_box(&[vec![rat(0, 1), rat(1, 1)], vec![rat(2, 1), rat(3, 2)]]);
        assert_eq!(bbox[1], (rat(1, 1), rat(3, 2)));
        let p = sample_in_box(&mut a, &bbox);
        assert!(p[0] >= rat(0, 1) && p[0] <= rat(2, 1));
    }

    #[test]
    fn sign_forms_match_exact_evaluation() {
        let form = AffineForm::new(rat(-7, 6), vec![rat(1, 4), rat(-2, 3)]);
        let sign = SignForm::new(&form);
        let mut rng = Lcg::new(11);
        let bbox = vec![(rat(-3, 1), rat(5, 2)), (rat(-2, 1), rat(1, 7))];
        for _ in 0..200 {
            let p = sample_in_box(&mut rng, &bbox);
            let exact = form.eval(&p).unwrap().signum();
            assert_eq!(sign.sign_at(&ScaledPoint::new(&p)), exact);
        }
        let on = vec![rat(14, 3), rat(0, 1)];
        assert_eq!(sign.sign_at(&ScaledPoint::new(&on)), Ordering::Equal);
    }
}
