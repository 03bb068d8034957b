use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::Error;
use crate::exact::Rational;

/// `constant + Σ coefficients[i] · x_i`, read as one side of `form(x) ≥ 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineForm {
    constant: Rational,
    coefficients: Vec<Rational>,
}

impl AffineForm {
    pub fn new(constant: Rational, coefficients: Vec<Rational>) -> Self {
        Self {
            constant,
            coefficients,
        }
    }

    pub fn zero(dimension: usize) -> Self {
        Self::constant(dimension, Rational::zero())
    }

    pub fn constant(dimension: usize, c: Rational) -> Self {
        Self::new(c, vec![Rational::zero(); dimension])
    }

    /// The coordinate `x_{index + 1}`.
    pub fn variable(dimension: usize, index: usize) -> Self {
        let mut form = Self::zero(dimension);
        form.coefficients[index] = Rational::one();
        form
    }

    pub fn dimension(&self) -> usize {
        self.coefficients.len()
    }

    pub fn constant_term(&self) -> &Rational {
        &self.constant
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn is_constant(&self) -> bool {
        self.coefficients.iter().all(Rational::is_zero)
    }

    pub fn eval(&self, x: &[Rational]) -> Result<Rational, Error> {
        if x.len() != self.coefficients.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coefficients.len(),
                got: x.len(),
            });
        }
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: &[Rational]) -> Rational {
        let mut acc = self.constant.clone();
        for (a, v) in self.coefficients.iter().zip(x) {
            if !a.is_zero() {
                acc += &(a * v);
            }
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            constant: &self.constant * c,
            coefficients: self.coefficients.iter().map(|a| a * c).collect(),
        }
    }

    /// Re-embed into `dimension` coordinates, the existing ones starting at
    /// `offset`.
    pub fn embed(&self, dimension: usize, offset: usize) -> Self {
        let mut coefficients = vec![Rational::zero(); dimension];
        for (i, a) in self.coefficients.iter().enumerate() {
            coefficients[offset + i] = a.clone();
        }
        Self {
            constant: self.constant.clone(),
            coefficients,
        }
    }
}

impl Add for &AffineForm {
    type Output = AffineForm;

    fn add(self, rhs: &AffineForm) -> AffineForm {
        assert_eq!(
            self.dimension(),
            rhs.dimension(),
            "affine forms of different dimension"
        );
        AffineForm {
            constant: &self.constant + &rhs.constant,
            coefficients: self
                .coefficients
                .iter()
                .zip(&rhs.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &AffineForm {
    type Output = AffineForm;

    fn sub(self, rhs: &AffineForm) -> AffineForm {
        self + &(-rhs)
    }
}

impl Neg for &AffineForm {
    type Output = AffineForm;

    fn neg(self) -> AffineForm {
        self.scale(&Rational::from(-1))
    }
}

impl fmt::Display for AffineForm {
    /// The text-file row: `b a_1 .. a_n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.constant)?;
        for a in &self.coefficients {
            write!(f, " {a}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineForm({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn arithmetic_and_eval() {
        let x = AffineForm::variable(2, 0);
        let y = AffineForm::variable(2, 1);
        let form = &(&x.scale(&rat(2, 1)) - &y) + &AffineForm::constant(2, rat(1, 2));
        assert_eq!(form.eval(&[rat(1, 1), rat(3, 1)]).unwrap(), rat(-1, 2));
        assert!(form.eval(&[rat(1, 1)]).is_err());
        assert_eq!(form.to_string(), "1/2 2 -1");
        assert!(AffineForm::constant(3, rat(1, 1)).is_constant());
        assert_eq!(form.embed(4, 1).coefficients()[2], rat(-1, 1));
    }
}
