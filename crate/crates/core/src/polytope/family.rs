use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exact::Rational;

use super::{AffineForm, HRep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Cayley,
    Gayley,
    TCayley,
    TGayley,
    Tutte,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Cayley,
        Family::Gayley,
        Family::TCayley,
        Family::TGayley,
        Family::Tutte,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cayley => "cayley",
            Family::Gayley => "gayley",
            Family::TCayley => "tcayley",
            Family::TGayley => "tgayley",
            Family::Tutte => "tutte",
        }
    }

    /// Cayley-type families are triangulated by trees, the others by forests.
    pub fn uses_trees(self) -> bool {
        matches!(self, Family::Cayley | Family::TCayley)
    }

    /// The `(q, t)` actually used to build simplices and pieces, after the
    /// family has fixed whatever it fixes. Tree families are built from the
    /// forest coordinates at `q = 1`, where a tree has a single root.
    pub fn construction_parameters(self, q: &Rational, t: &Rational) -> (Rational, Rational) {
        let one = Rational::one();
        match self {
            Family::Cayley | Family::Gayley => (one.clone(), one),
            Family::TCayley | Family::TGayley => (one, t.clone()),
            Family::Tutte => (q.clone(), t.clone()),
        }
    }

    /// The parameters at which this family is a specialization of the Tutte
    /// polynomial side: `q = 0` for Cayley families, `q = 1` for Gayley ones.
    pub fn polynomial_parameters(self, q: &Rational, t: &Rational) -> (Rational, Rational) {
        let one = Rational::one();
        match self {
            Family::Cayley => (Rational::zero(), one),
            Family::Gayley => (one.clone(), one),
            Family::TCayley => (Rational::zero(), t.clone()),
            Family::TGayley => (one, t.clone()),
            Family::Tutte => (q.clone(), t.clone()),
        }
    }

    pub fn check_parameters(self, n: usize, q: &Rational, t: &Rational) -> Result<(), Error> {
        if n == 0 {
            return Err(Error::ParameterDomain("n must be at least 1".into()));
        }
        if matches!(self, Family::TCayley | Family::TGayley | Family::Tutte) && !t.is_positive() {
            return Err(Error::ParameterDomain(format!("t = {t} must be positive")));
        }
        if self == Family::Tutte && (!q.is_positive() || q > &Rational::one()) {
            return Err(Error::ParameterDomain(format!(
                "q = {q} must lie in (0, 1]"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Format(format!("unknown family {s:?}")))
    }
}

/// `x_pos` as an affine form in `n` coordinates, with `x_0 = 1`.
pub(crate) fn position_form(n: usize, pos: usize) -> AffineForm {
    if pos == 0 {
        AffineForm::constant(n, Rational::one())
    } else {
        AffineForm::variable(n, pos - 1)
    }
}

/// The defining inequalities of the family in `R^n`.
pub fn build_hrep(family: Family, n: usize, q: &Rational, t: &Rational) -> Result<HRep, Error> {
    family.check_parameters(n, q, t)?;
    let one = Rational::one();
    let t = match family {
        Family::Cayley | Family::Gayley => one.clone(),
        _ => t.clone(),
    };
    let growth = &one + &t;
    let x = |i: usize| position_form(n, i);
    let mut rows = Vec::new();
    match family {
        Family::Tutte => {
            // q(1+t) x_{i-1} - t(1-q)(1 - x_{j-1}) - q x_i ≥ 0
            let qg = q * &growth;
            let tp = &t * &(&one - q);
            for i in 1..=n {
                for j in 1..=i {
                    let slack = &AffineForm::constant(n, one.clone()) - &x(j - 1);
                    let row = &(&x(i - 1).scale(&qg) - &slack.scale(&tp)) - &x(i).scale(q);
                    rows.push(row);
                }
            }
            rows.push(&x(n) - &AffineForm::constant(n, &one - q));
        }
        Family::Cayley | Family::TCayley | Family::Gayley | Family::TGayley => {
            let lower = if matches!(family, Family::Cayley | Family::TCayley) {
                one.clone()
            } else {
                Rational::zero()
            };
            for i in 1..=n {
                rows.push(&x(i) - &AffineForm::constant(n, lower.clone()));
                rows.push(&x(i - 1).scale(&growth) - &x(i));
            }
        }
    }
    HRep::new(n, rows)
}
