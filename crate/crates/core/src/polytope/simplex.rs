use crate::error::Error;
use crate::exact::{Rational, RationalMatrix};
use crate::forest::{LabeledForest, NodeCoordinate, NodeKind};

use super::family::position_form;
use super::hrep::Point;
use super::{AffineForm, HRep};

/// A full-dimensional simplex given by its `dimension + 1` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplex {
    dimension: usize,
    vertices: Vec<Point>,
    signed_volume: Rational,
}

impl Simplex {
    pub fn from_vertices(vertices: Vec<Point>) -> Result<Self, Error> {
        let Some(first) = vertices.first() else {
            return Err(Error::DegenerateSimplex);
        };
        let dimension = first.len();
        if let Some(bad) = vertices.iter().find(|v| v.len() != dimension) {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                got: bad.len(),
            });
        }
        if vertices.len() != dimension + 1 {
            return Err(Error::DegenerateSimplex);
        }
        let signed_volume = if dimension == 0 {
            Rational::one()
        } else {
            edge_matrix(&vertices).determinant()?
        };
        if signed_volume.is_zero() {
            return Err(Error::DegenerateSimplex);
        }
        Ok(Self {
            dimension,
            vertices,
            signed_volume,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// `dimension! · volume`, i.e. `|det(v_i - v_0)|`.
    pub fn normalized_volume(&self) -> Rational {
        self.signed_volume.abs()
    }

    /// Barycentric coordinates as affine forms, one per vertex. The simplex
    /// is exactly where all of them are nonnegative, so this doubles as its
    /// facet description.
    pub fn barycentric_forms(&self) -> Vec<AffineForm> {
        let d = self.dimension;
        if d == 0 {
            return vec![AffineForm::constant(0, Rational::one())];
        }
        // columns v_i - v_0, so rows of the inverse give μ_i(x - v_0)
        let inverse = edge_matrix(&self.vertices)
            .transpose()
            .inverse()
            .expect("square")
            .expect("nondegenerate");
        let base = &self.vertices[0];
        let mut forms = Vec::with_capacity(d + 1);
        let mut lambda0 = AffineForm::constant(d, Rational::one());
        for row in inverse.rows() {
            let constant: Rational = row.iter().zip(base).map(|(a, b)| -(a * b)).sum();
            let mu = AffineForm::new(constant, row.clone());
            lambda0 = &lambda0 - &mu;
            forms.push(mu);
        }
        forms.insert(0, lambda0);
        forms
    }

    pub fn facet_hrep(&self) -> HRep {
        HRep::new(self.dimension, self.barycentric_forms()).expect("forms share the dimension")
    }
}

fn edge_matrix(vertices: &[Point]) -> RationalMatrix {
    let base = &vertices[0];
    RationalMatrix::new(
        vertices[1..]
            .iter()
            .map(|v| v.iter().zip(base).map(|(a, b)| a - b).collect())
            .collect(),
    )
    .expect("rows share a length")
}

/// The coordinate `c(v, F; q, t)` of one node, in `n` variables.
pub(crate) fn coordinate_form(
    n: usize,
    node: &NodeCoordinate,
    q: &Rational,
    t: &Rational,
) -> AffineForm {
    let one = Rational::one();
    let x_root = position_form(n, node.root_position);
    // x_l - 1 + q
    let shifted_root = &x_root - &AffineForm::constant(n, &one - q);
    match node.kind {
        NodeKind::Root => shifted_root.scale(t),
        NodeKind::NonRoot => {
            let x = position_form(n, node.position);
            let slack = &AffineForm::constant(n, one.clone()) - &x_root;
            let top = &x.scale(q) - &slack.scale(&(&one - q));
            let scale = (&one + t).pow(node.cane_exponent).recip().expect("t > 0");
            &top.scale(&scale) - &shifted_root
        }
    }
}

/// `0 ≤ c(1) ≤ c(2) ≤ .. ≤ c(n+1) = qt` for a forest on `n + 1` nodes.
pub fn chain_hrep(f: &LabeledForest, q: &Rational, t: &Rational) -> HRep {
    let n = f.node_count() - 1;
    let coords: Vec<AffineForm> = f
        .coordinates()
        .iter()
        .map(|c| coordinate_form(n, c, q, t))
        .collect();
    let mut rows = Vec::with_capacity(n + 1);
    rows.push(coords[0].clone());
    for k in 1..coords.len() {
        rows.push(&coords[k] - &coords[k - 1]);
    }
    HRep::new(n, rows).expect("forms share the dimension")
}

/// The simplex `S_F(q, t)`, from its closed-form vertices. Vertex `v_p`
/// puts the first `p - 1` links of the chain at equality with 0 and the
/// rest at equality with `qt`.
pub fn simplex_s(f: &LabeledForest, q: &Rational, t: &Rational) -> Result<Simplex, Error> {
    let big_n = f.node_count();
    let n = big_n - 1;
    let one = Rational::one();
    let low = &one - q;
    let growth = &one + t;
    let coords = f.coordinates();
    let vertices = (1..=big_n)
        .map(|p| {
            let mut x = vec![Rational::zero(); n];
            for c in &coords {
                if c.position == 0 {
                    continue;
                }
                let r = f.root_of(c.label);
                let value = match c.kind {
                    NodeKind::Root if p <= r => one.clone(),
                    NodeKind::Root => low.clone(),
                    NodeKind::NonRoot if p <= c.label => growth.pow(c.cane_exponent + 1),
                    NodeKind::NonRoot if p <= r => growth.pow(c.cane_exponent),
                    NodeKind::NonRoot => low.clone(),
                };
                x[c.position - 1] = value;
            }
            x
        })
        .collect();
    Simplex::from_vertices(vertices)
}

/// For a tree, the chain `1 ≤ x_{(1)}/(1+t)^{j_1} ≤ .. ≤ x_{(n)}/(1+t)^{j_n} ≤ 1 + t`
/// written directly over positions, with exponents counted as cane paths.
pub fn tree_chain_hrep(tree: &LabeledForest, t: &Rational) -> Result<HRep, Error> {
    if !tree.is_tree() {
        return Err(Error::InvalidForest("expected a tree".into()));
    }
    let n = tree.node_count() - 1;
    let growth = &Rational::one() + t;
    let scaled: Vec<AffineForm> = (1..=n)
        .map(|v| {
            let scale = growth.pow(tree.cane_paths_from(v)).recip().expect("t > 0");
            position_form(n, tree.position(v)).scale(&scale)
        })
        .collect();
    let mut rows = Vec::with_capacity(n + 1);
    let mut previous = AffineForm::constant(n, Rational::one());
    for form in scaled {
        rows.push(&form - &previous);
        previous = form;
    }
    rows.push(&AffineForm::constant(n, growth) - &previous);
    HRep::new(n, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn star_at_3() -> LabeledForest {
        LabeledForest::from_parents(&[Some(3), Some(3), None]).unwrap()
    }

    #[test]
    fn star_simplex_vertices() {
        let t = rat(2, 1);
        let s = simplex_s(&star_at_3(), &rat(1, 1), &t).unwrap();
        let mut v = s.vertices().to_vec();
        v.sort();
        assert_eq!(
            v,
            vec![
                vec![rat(1, 1), rat(3, 1)],
                vec![rat(3, 1), rat(3, 1)],
                vec![rat(3, 1), rat(9, 1)]
            ]
        );
        // t^2 (1+t) at t = 2
        assert_eq!(s.normalized_volume(), rat(12, 1));
    }

    #[test]
    fn vertices_solve_the_chain() {
        let q = rat(1, 3);
        let t = rat(2, 1);
        let f = LabeledForest::from_parents(&[Some(4), None, Some(4), None]).unwrap();
        let s = simplex_s(&f, &q, &t).unwrap();
        let chain = chain_hrep(&f, &q, &t);
        for (p, v) in s.vertices().iter().enumerate() {
            assert!(chain.contains(v).unwrap());
            let tight = chain.tight_rows(v).unwrap();
            let expected: Vec<usize> = (0..=chain.len() - 1).filter(|&k| k != p).collect();
            assert_eq!(tight, expected);
        }
    }

    #[test]
    fn barycentric_forms_describe_the_simplex() {
        let s = simplex_s(&star_at_3(), &rat(1, 1), &rat(1, 1)).unwrap();
        let h = s.facet_hrep();
        let mut a = h.vertices();
        let mut b = s.vertices().to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        assert!(h.contains(&[rat(3, 2), rat(2, 1)]).unwrap());
        assert!(!h.contains(&[rat(1, 1), rat(1, 1)]).unwrap());
    }

    #[test]
    fn tree_chain_agrees_with_forest_chain() {
        let tree = LabeledForest::from_parents(&[Some(4), Some(1), Some(4), None]).unwrap();
        let t = rat(1, 2);
        let a = tree_chain_hrep(&tree, &t).unwrap().vertices();
        let b = chain_hrep(&tree, &rat(1, 1), &t).vertices();
        assert_eq!(a, b);
    }

    #[test]
    fn degenerate_vertices_rejected() {
        let v = vec![
            vec![rat(0, 1), rat(0, 1)],
            vec![rat(1, 1), rat(1, 1)],
            vec![rat(2, 1), rat(2, 1)],
        ];
        assert_eq!(Simplex::from_vertices(v), Err(Error::DegenerateSimplex));
    }
}
