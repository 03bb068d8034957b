use crate::exact::{BivariatePolynomial, Rational};
use crate::forest::{LabeledForest, PlaneForest};
use crate::polytope::Simplex;

/// Volume of a simplex, `|det(v_i - v_0)| / n!`.
pub fn simplex_volume(s: &Simplex) -> Rational {
    let n = s.dimension() as u64;
    let factorial = Rational::from_integer(crate::exact::factorial(n));
    &s.normalized_volume() / &factorial
}

/// `n! · vol S_F(q, t) = q^{k-1} t^{|E|} (1+t)^{α}`.
pub fn closed_form_simplex_volume(f: &LabeledForest) -> BivariatePolynomial {
    let k = f.component_count() as u32;
    let e = f.edge_count() as u32;
    BivariatePolynomial::one_plus_t_pow(f.alpha()).shift(k - 1, e)
}

/// `n! · vol D_F(q, t)`: the number of labelings of the shape times
/// `q^{m-1} t^{Σ d_i} (1+t)^{C(n+2-m, 2) - Σ i d_i}`.
pub fn closed_form_piece_volume(f: &PlaneForest) -> BivariatePolynomial {
    let m = f.component_count() as u32;
    let exponent = u32::try_from(f.alpha_from_degrees()).expect("exponent is nonnegative");
    BivariatePolynomial::one_plus_t_pow(exponent)
        .shift(m - 1, f.edge_count() as u32)
        .scale(&f.labeling_count())
}
