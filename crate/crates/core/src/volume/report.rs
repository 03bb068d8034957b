use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::Error;
use crate::exact::{BivariatePolynomial, Rational};
use crate::forest::{
    enumerate_labeled_forests, enumerate_plane_forests, enumerate_plane_trees, LabeledForest,
    PlaneForest,
};
use crate::polytope::{simplex_s, Family};

use super::{closed_form_piece_volume, closed_form_simplex_volume, z_bruteforce};

/// The labeled forests (trees for Cayley families) on `n + 1` nodes indexing
/// the simplices of the family's triangulation.
pub fn simplex_index(family: Family, n: usize) -> Result<Vec<LabeledForest>, Error> {
    Ok(enumerate_labeled_forests(n + 1, family.uses_trees())?.collect())
}

/// The plane forests (trees for Cayley families) on `n + 1` nodes indexing
/// the pieces of the family's subdivision.
pub fn piece_index(family: Family, n: usize) -> Result<Vec<PlaneForest>, Error> {
    Ok(if family.uses_trees() {
        enumerate_plane_trees(n + 1)?.collect()
    } else {
        enumerate_plane_forests(n + 1)?.collect()
    })
}

/// Restricts a `(q, t)` polynomial to what the family fixes: `q = 0` for
/// Cayley families, `q = 1` for Gayley ones, and `t = 1` for the two
/// unparametrized families.
pub fn specialize(family: Family, p: &BivariatePolynomial) -> BivariatePolynomial {
    let one = Rational::one();
    match family {
        Family::Cayley => p.q_free_part().eval_t(&one),
        Family::Gayley => p.eval_q(&one).eval_t(&one),
        Family::TCayley => p.q_free_part(),
        Family::TGayley => p.eval_q(&one),
        Family::Tutte => p.clone(),
    }
}

/// `n! · vol` summed over the triangulation, in closed form.
pub fn simplex_closed_total(family: Family, n: usize) -> Result<BivariatePolynomial, Error> {
    let sum: BivariatePolynomial = simplex_index(family, n)?
        .iter()
        .map(closed_form_simplex_volume)
        .sum();
    Ok(specialize(family, &sum))
}

/// `n! · vol` summed over the subdivision, in closed form.
pub fn piece_closed_total(family: Family, n: usize) -> Result<BivariatePolynomial, Error> {
    let sum: BivariatePolynomial = piece_index(family, n)?
        .iter()
        .map(closed_form_piece_volume)
        .sum();
    Ok(specialize(family, &sum))
}

/// `Z_{K_{n+1}}` specialized to the family.
pub fn graph_total(family: Family, n: usize) -> Result<BivariatePolynomial, Error> {
    Ok(specialize(family, &z_bruteforce(n + 1)?))
}

/// `n! · vol` summed over the triangulation, each simplex by determinant.
pub fn determinant_total(
    family: Family,
    n: usize,
    q: &Rational,
    t: &Rational,
) -> Result<Rational, Error> {
    family.check_parameters(n, q, t)?;
    let (qc, tc) = family.construction_parameters(q, t);
    let forests = simplex_index(family, n)?;
    let volumes = forests
        .par_iter()
        .map(|f| simplex_s(f, &qc, &tc).map(|s| s.normalized_volume()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(volumes.into_iter().sum())
}

/// `n!`-normalized volume of one family computed three ways.
#[derive(Clone, Debug, PartialEq)]
pub struct VolumeReport {
    pub family: Family,
    pub n: usize,
    /// `(q, t)` for a numeric report; `None` when only polynomials are kept.
    pub parameters: Option<(Rational, Rational)>,
    pub by_determinant: Option<Rational>,
    pub by_closed_form: BivariatePolynomial,
    pub by_piece_closed_form: BivariatePolynomial,
    pub by_graph_sum: BivariatePolynomial,
}

impl VolumeReport {
    pub fn compute(
        family: Family,
        n: usize,
        q: &Rational,
        t: &Rational,
        symbolic: bool,
    ) -> Result<Self, Error> {
        family.check_parameters(n, q, t)?;
        let by_closed_form = simplex_closed_total(family, n)?;
        let by_piece_closed_form = piece_closed_total(family, n)?;
        let by_graph_sum = graph_total(family, n)?;
        let (parameters, by_determinant) = if symbolic {
            (None, None)
        } else {
            let (qp, tp) = family.polynomial_parameters(q, t);
            (Some((qp, tp)), Some(determinant_total(family, n, q, t)?))
        };
        Ok(Self {
            family,
            n,
            parameters,
            by_determinant,
            by_closed_form,
            by_piece_closed_form,
            by_graph_sum,
        })
    }

    /// Whether every computed quantity agrees.
    pub fn consistent(&self) -> bool {
        if self.by_closed_form != self.by_graph_sum
            || self.by_piece_closed_form != self.by_graph_sum
        {
            return false;
        }
        match (&self.parameters, &self.by_determinant) {
            (Some((q, t)), Some(d)) => &self.by_graph_sum.eval(q, t) == d,
            _ => true,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "family": self.family.name(),
            "n": self.n,
            "by_closed_form": self.by_closed_form.to_json(),
            "by_piece_closed_form": self.by_piece_closed_form.to_json(),
            "by_graph_sum": self.by_graph_sum.to_json(),
            "consistent": self.consistent(),
        });
        if let (Some((q, t)), Some(d)) = (&self.parameters, &self.by_determinant) {
            v["q"] = json!(q.to_string());
            v["t"] = json!(t.to_string());
            v["by_determinant"] = json!(d.to_string());
            v["value"] = json!(self.by_graph_sum.eval(q, t).to_string());
        }
        v
    }
}
