use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::error::Error;
use crate::exact::{affine_rank, Rational};
use crate::polytope::{build_hrep, AffineForm, Family, HRep, Point};

use super::tutte_vertices;

/// Up to 128 vertices, so that a face fits in one bitset.
pub const MAX_LATTICE_VERTICES: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    pub dimension: usize,
    pub vertex_count: usize,
    /// Contact sets of the facets, as vertex bitsets.
    pub facets: Vec<u128>,
    /// Proper nonempty faces grouped by dimension `0 .. dimension - 1`.
    pub faces: Vec<Vec<u128>>,
}

impl FaceLattice {
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn face_indices(&self, dim: usize) -> Vec<Vec<usize>> {
        self.faces[dim].iter().map(|&m| bits(m)).collect()
    }
}

fn bits(mut m: u128) -> Vec<usize> {
    let mut out = Vec::new();
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

fn rank_of(points: &[Point], mask: u128) -> usize {
    let refs: Vec<&[Rational]> = bits(mask)
        .into_iter()
        .map(|i| points[i].as_slice())
        .collect();
    affine_rank(&refs).expect("nonempty face")
}

fn check_valid(points: &[Point], hrep: &HRep) -> Result<(), Error> {
    for (index, p) in points.iter().enumerate() {
        for (row, f) in hrep.inequalities().iter().enumerate() {
            if f.eval(p)?.is_negative() {
                return Err(Error::InconsistentHRep { index, row });
            }
        }
    }
    Ok(())
}

/// Faces of the convex hull of `points`, read off the inequalities: facets
/// are the contact sets of affine rank `n - 1`, and every other face is an
/// intersection of facets.
pub fn face_lattice(points: &[Point], hrep: &HRep) -> Result<FaceLattice, Error> {
    let n = hrep.dimension();
    if points.len() > MAX_LATTICE_VERTICES {
        return Err(Error::Format(format!(
            "at most {MAX_LATTICE_VERTICES} vertices supported, got {}",
            points.len()
        )));
    }
    check_valid(points, hrep)?;
    let all = if points.len() == 128 {
        u128::MAX
    } else {
        (1u128 << points.len()) - 1
    };
    let mut facets = BTreeSet::new();
    for f in hrep.inequalities().iter().filter(|f| !f.is_constant()) {
        let mut mask = 0u128;
        for (i, p) in points.iter().enumerate() {
            if f.eval_unchecked(p).is_zero() {
                mask |= 1 << i;
            }
        }
        if mask != 0 && mask != all && rank_of(points, mask) + 1 == n {
            facets.insert(mask);
        }
    }
    let facets: Vec<u128> = facets.into_iter().collect();
    let mut seen: BTreeSet<u128> = facets.iter().copied().collect();
    let mut frontier: Vec<u128> = facets.clone();
    while let Some(face) = frontier.pop() {
        for &facet in &facets {
            let meet = face & facet;
            if meet != 0 && seen.insert(meet) {
                frontier.push(meet);
            }
        }
    }
    let mut faces = vec![Vec::new(); n];
    for face in seen {
        faces[rank_of(points, face)].push(face);
    }
    Ok(FaceLattice {
        dimension: n,
        vertex_count: points.len(),
        facets,
        faces,
    })
}

/// For each point, the sum of the inequalities tight at it, provided those
/// have full rank: it vanishes at the point and is positive at every other
/// point, which certifies the point is not a convex combination of them.
pub fn extremality_certificates(
    points: &[Point],
    hrep: &HRep,
) -> Result<Vec<Option<AffineForm>>, Error> {
    check_valid(points, hrep)?;
    let n = hrep.dimension();
    Ok(points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let tight: Vec<&AffineForm> = hrep
                .inequalities()
                .iter()
                .filter(|f| !f.is_constant() && f.eval_unchecked(p).is_zero())
                .collect();
            let normals = crate::exact::RationalMatrix::new(
                tight.iter().map(|f| f.coefficients().to_vec()).collect(),
            )
            .ok()?;
            if tight.is_empty() || normals.rank() < n {
                return None;
            }
            let sum = tight
                .iter()
                .skip(1)
                .fold(tight[0].clone(), |acc, f| &acc + f);
            let separates = points
                .iter()
                .enumerate()
                .all(|(j, w)| j == i || sum.eval_unchecked(w).is_positive());
            separates.then_some(sum)
        })
        .collect())
}

/// f-vector of the Tutte polytope `T_n(q, t)`, `0 < q < 1`.
pub fn tutte_f_vector(n: usize, q: &Rational, t: &Rational) -> Result<Vec<usize>, Error> {
    let vertices = tutte_vertices(n, q, t)?;
    let hrep = build_hrep(Family::Tutte, n, q, t)?;
    Ok(face_lattice(&vertices.points, &hrep)?.f_vector())
}

pub fn f_vector_json(n: usize, q: &Rational, t: &Rational, f: &[usize]) -> Value {
    json!({ "n": n, "q": q.to_string(), "t": t.to_string(), "f": f })
}

/// `Σ (-1)^i f_i = 1 + (-1)^{n-1}`.
pub fn euler_holds(f: &[usize]) -> bool {
    let n = f.len();
    let alt: i64 = f
        .iter()
        .enumerate()
        .map(|(i, &v)| if i % 2 == 0 { v as i64 } else { -(v as i64) })
        .sum();
    alt == 1 + if n % 2 == 1 { 1 } else { -1 }
}

/// Predicted edge count `3(n-1) 2^{n-2} + 1`.
pub fn predicted_edges(n: usize) -> Rational {
    let power = Rational::from(2).pow(n as u32) / Rational::from(4);
    &(&power * &Rational::from(3 * (n as i64 - 1))) + &Rational::one()
}

/// Predicted 2-face count `2^{n-5} (9n^2 - 29n + 38) - 1`.
pub fn predicted_two_faces(n: usize) -> Rational {
    let n_i = n as i64;
    let power = Rational::from(2).pow(n as u32) / Rational::from(32);
    &(&power * &Rational::from(9 * n_i * n_i - 29 * n_i + 38)) - &Rational::one()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureRow {
    pub n: usize,
    pub q: Rational,
    pub t: Rational,
    pub f: Vec<usize>,
    pub edges_match: bool,
    /// For `n = 2` the only 2-face is the polygon itself.
    pub two_faces_match: bool,
}

/// Computes f-vectors for `n = 2 .. n_max` at each sample and compares
/// `f_1`, `f_2` against the predicted counts.
pub fn conjecture_check(
    n_max: usize,
    samples: &[(Rational, Rational)],
) -> Result<Vec<ConjectureRow>, Error> {
    let mut rows = Vec::new();
    for n in 2..=n_max {
        for (q, t) in samples {
            let f = tutte_f_vector(n, q, t)?;
            let f2 = if n == 2 { 1 } else { f[2] };
            rows.push(ConjectureRow {
                n,
                q: q.clone(),
                t: t.clone(),
                edges_match: Rational::from(f[1] as i64) == predicted_edges(n),
                two_faces_match: Rational::from(f2 as i64) == predicted_two_faces(n),
                f,
            });
        }
    }
    Ok(rows)
}
