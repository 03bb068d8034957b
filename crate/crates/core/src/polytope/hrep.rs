use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::Error;
use crate::exact::{affine_rank, Rational, RationalMatrix};

use super::AffineForm;

/// Intersection of closed half-spaces `form(x) ≥ 0` in `R^dimension`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    dimension: usize,
    inequalities: Vec<AffineForm>,
}

pub type Point = Vec<Rational>;

impl HRep {
    pub fn new(dimension: usize, inequalities: Vec<AffineForm>) -> Result<Self, Error> {
        if let Some(bad) = inequalities.iter().find(|f| f.dimension() != dimension) {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                got: bad.dimension(),
            });
        }
        Ok(Self {
            dimension,
            inequalities,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn inequalities(&self) -> &[AffineForm] {
        &self.inequalities
    }

    pub fn len(&self) -> usize {
        self.inequalities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inequalities.is_empty()
    }

    fn check_point(&self, x: &[Rational]) -> Result<(), Error> {
        if x.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: x.len(),
            });
        }
        Ok(())
    }

    /// Closed membership.
    pub fn contains(&self, x: &[Rational]) -> Result<bool, Error> {
        self.check_point(x)?;
        Ok(self
            .inequalities
            .iter()
            .all(|f| !f.eval_unchecked(x).is_negative()))
    }

    /// Every inequality strict. Rows that are constant in `x` are skipped, so
    /// a full-dimensional region has a nonempty strict interior.
    pub fn contains_strictly(&self, x: &[Rational]) -> Result<bool, Error> {
        self.check_point(x)?;
        Ok(self
            .inequalities
            .iter()
            .filter(|f| !f.is_constant())
            .all(|f| f.eval_unchecked(x).is_positive()))
    }

    /// Indices of the inequalities holding with equality at `x`.
    pub fn tight_rows(&self, x: &[Rational]) -> Result<Vec<usize>, Error> {
        self.check_point(x)?;
        Ok(self
            .inequalities
            .iter()
            .enumerate()
            .filter(|(_, f)| !f.is_constant() && f.eval_unchecked(x).is_zero())
            .map(|(i, _)| i)
            .collect())
    }

    /// Cartesian product; coordinates of `other` follow those of `self`.
    pub fn product(&self, other: &HRep) -> HRep {
        let dim = self.dimension + other.dimension;
        let mut rows: Vec<AffineForm> = self.inequalities.iter().map(|f| f.embed(dim, 0)).collect();
        rows.extend(
            other
                .inequalities
                .iter()
                .map(|f| f.embed(dim, self.dimension)),
        );
        HRep {
            dimension: dim,
            inequalities: rows,
        }
    }

    /// `{(x_0, x) : 0 ≤ x_0 ≤ 1, x ∈ x_0 P}`.
    pub fn cone(&self) -> HRep {
        let dim = self.dimension + 1;
        let mut rows: Vec<AffineForm> = self
            .inequalities
            .iter()
            .map(|f| {
                let mut coefficients = Vec::with_capacity(dim);
                coefficients.push(f.constant_term().clone());
                coefficients.extend(f.coefficients().iter().cloned());
                AffineForm::new(Rational::zero(), coefficients)
            })
            .collect();
        rows.push(AffineForm::variable(dim, 0));
        rows.push(&AffineForm::constant(dim, Rational::one()) - &AffineForm::variable(dim, 0));
        HRep {
            dimension: dim,
            inequalities: rows,
        }
    }

    /// Convex hull of the apex `(1-q, .., 1-q)` and `{1} × P`. A row
    /// `b + a·y ≥ 0` of `P` becomes
    /// `b (x_0 - 1 + q) + a·(q x - (1-q)(1 - x_0) 𝟙) ≥ 0`, together with
    /// `1 - q ≤ x_0 ≤ 1`. At `q = 1` this is [`Self::cone`] row for row.
    pub fn cone_q(&self, q: &Rational) -> HRep {
        let dim = self.dimension + 1;
        let one = Rational::one();
        let p = &one - q;
        let mut rows: Vec<AffineForm> = self
            .inequalities
            .iter()
            .map(|f| {
                let b = f.constant_term();
                let a_sum: Rational = f.coefficients().iter().sum();
                // b x_0 + b(q - 1) + q a·x - (1-q) a_sum + (1-q) a_sum x_0
                let constant = &(b * &(q - &one)) - &(&p * &a_sum);
                let mut coefficients = Vec::with_capacity(dim);
                coefficients.push(b + &(&p * &a_sum));
                coefficients.extend(f.coefficients().iter().map(|a| q * a));
                AffineForm::new(constant, coefficients)
            })
            .collect();
        rows.push(&AffineForm::variable(dim, 0) - &AffineForm::constant(dim, p.clone()));
        rows.push(&AffineForm::constant(dim, one) - &AffineForm::variable(dim, 0));
        HRep {
            dimension: dim,
            inequalities: rows,
        }
    }

    /// Drops rows with no variable part after checking that they hold.
    pub fn without_constant_rows(&self) -> Result<HRep, Error> {
        let mut rows = Vec::with_capacity(self.inequalities.len());
        for f in &self.inequalities {
            if f.is_constant() {
                if f.constant_term().is_negative() {
                    return Err(Error::InfeasibleRow(f.to_string()));
                }
            } else {
                rows.push(f.clone());
            }
        }
        Ok(HRep {
            dimension: self.dimension,
            inequalities: rows,
        })
    }

    /// Vertices by brute force: every choice of `dimension` rows whose
    /// equality system has a unique solution lying in the region. Only meant
    /// for the small polytopes built here; output is sorted.
    pub fn vertices(&self) -> Vec<Point> {
        let d = self.dimension;
        let rows: Vec<&AffineForm> = self
            .inequalities
            .iter()
            .filter(|f| !f.is_constant())
            .collect();
        let mut out = BTreeSet::new();
        if d == 0 {
            if self.contains(&[]).unwrap_or(false) {
                out.insert(Vec::new());
            }
            return out.into_iter().collect();
        }
        let mut pick: Vec<usize> = (0..d).collect();
        if rows.len() < d {
            return Vec::new();
        }
        loop {
            let matrix = RationalMatrix::new(
                pick.iter()
                    .map(|&r| rows[r].coefficients().to_vec())
                    .collect(),
            )
            .expect("rows share a dimension");
            let rhs: Vec<Rational> = pick.iter().map(|&r| -rows[r].constant_term()).collect();
            if let Ok(Some(x)) = matrix.solve(&rhs) {
                if self.contains(&x).unwrap_or(false) {
                    out.insert(x);
                }
            }
            if !next_combination(&mut pick, rows.len()) {
                break;
            }
        }
        out.into_iter().collect()
    }

    /// `dimension! · volume`, exactly, by a pulling triangulation of the
    /// vertex set along the face structure cut out by the inequalities.
    pub fn normalized_volume(&self) -> Rational {
        let vertices = self.vertices();
        normalized_volume_of(&vertices, &self.inequalities, self.dimension)
    }

    /// Text form: `n m`, then one `b a_1 .. a_n` line per inequality.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.dimension, self.inequalities.len());
        for f in &self.inequalities {
            out.push_str(&f.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, Error> {
        let (dimension, rows) = parse_table(text, 1)?;
        let inequalities = rows
            .into_iter()
            .map(|mut r| {
                let constant = r.remove(0);
                AffineForm::new(constant, r)
            })
            .collect();
        HRep::new(dimension, inequalities)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .inequalities
            .iter()
            .map(|f| {
                let mut row = vec![Value::String(f.constant_term().to_string())];
                row.extend(
                    f.coefficients()
                        .iter()
                        .map(|a| Value::String(a.to_string())),
                );
                Value::Array(row)
            })
            .collect();
        json!({ "dimension": self.dimension, "inequalities": rows })
    }

    pub fn from_json(value: &Value) -> Result<Self, Error> {
        let bad = || Error::Format("expected {\"dimension\", \"inequalities\"}".into());
        let dimension = value
            .get("dimension")
            .and_then(Value::as_u64)
            .ok_or_else(bad)? as usize;
        let rows = value
            .get("inequalities")
            .and_then(Value::as_array)
            .ok_or_else(bad)?;
        let mut inequalities = Vec::with_capacity(rows.len());
        for row in rows {
            let entries = row.as_array().ok_or_else(bad)?;
            let mut values = entries
                .iter()
                .map(|e| e.as_str().ok_or_else(bad).and_then(Rational::from_str))
                .collect::<Result<Vec<_>, _>>()?;
            if values.is_empty() {
                return Err(bad());
            }
            let constant = values.remove(0);
            inequalities.push(AffineForm::new(constant, values));
        }
        HRep::new(dimension, inequalities)
    }
}

impl fmt::Display for HRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Advances `pick` to the next `k`-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    let Some(i) = (0..k).rev().find(|&i| pick[i] < n - k + i) else {
        return false;
    };
    pick[i] += 1;
    for j in i + 1..k {
        pick[j] = pick[j - 1] + 1;
    }
    true
}

/// `d! · volume` of the convex hull of `vertices`, given inequalities valid
/// on it whose equality sets include every facet.
pub fn normalized_volume_of(vertices: &[Point], rows: &[AffineForm], d: usize) -> Rational {
    let refs: Vec<&[Rational]> = vertices.iter().map(Vec::as_slice).collect();
    if affine_rank(&refs) != Some(d) {
        return Rational::zero();
    }
    if d == 0 {
        return Rational::one();
    }
    let contacts: Vec<BTreeSet<usize>> = rows
        .iter()
        .filter(|f| !f.is_constant())
        .map(|f| {
            (0..vertices.len())
                .filter(|&i| f.eval_unchecked(&vertices[i]).is_zero())
                .collect()
        })
        .collect();
    let all: Vec<usize> = (0..vertices.len()).collect();
    let mut total = Rational::zero();
    for simplex in pulling_triangulation(vertices, &contacts, &all, d) {
        let base = &vertices[simplex[0]];
        let matrix = RationalMatrix::new(
            simplex[1..]
                .iter()
                .map(|&i| vertices[i].iter().zip(base).map(|(a, b)| a - b).collect())
                .collect(),
        )
        .expect("square");
        total += &matrix.determinant().expect("square").abs();
    }
    total
}

/// Simplices (as vertex indices) triangulating the face spanned by `face`,
/// of affine dimension `k`: cone from its first vertex over the facets
/// that miss it.
pub(crate) fn pulling_triangulation(
    vertices: &[Point],
    contacts: &[BTreeSet<usize>],
    face: &[usize],
    k: usize,
) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![face[0]]];
    }
    let apex = face[0];
    let mut facets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for contact in contacts {
        let sub: Vec<usize> = face
            .iter()
            .copied()
            .filter(|i| contact.contains(i))
            .collect();
        if sub.len() == face.len() || sub.len() < k || sub.contains(&apex) {
            continue;
        }
        let refs: Vec<&[Rational]> = sub.iter().map(|&i| vertices[i].as_slice()).collect();
        if affine_rank(&refs) == Some(k - 1) {
            facets.insert(sub);
        }
    }
    let mut out = Vec::new();
    for facet in facets {
        for mut simplex in pulling_triangulation(vertices, contacts, &facet, k - 1) {
            simplex.insert(0, apex);
            out.push(simplex);
        }
    }
    out
}

/// Parses `n m` followed by `m` rows of `n + extra` rationals.
fn parse_table(text: &str, extra: usize) -> Result<(usize, Vec<Vec<Rational>>), Error> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Format("missing header line".into()))?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| Error::Format(format!("bad header {header:?}")))?;
    let [n, m] = nums[..] else {
        return Err(Error::Format(format!("bad header {header:?}")));
    };
    let mut rows = Vec::with_capacity(m);
    for line in lines {
        let row = line
            .split_whitespace()
            .map(Rational::from_str)
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n + extra {
            return Err(Error::DimensionMismatch {
                expected: n + extra,
                got: row.len(),
            });
        }
        rows.push(row);
    }
    if rows.len() != m {
        return Err(Error::Format(format!(
            "expected {m} rows, found {}",
            rows.len()
        )));
    }
    Ok((n, rows))
}

/// Text form of a point list: `n k`, then one vertex per line.
pub fn vrep_to_text(dimension: usize, points: &[Point]) -> String {
    let mut out = format!("{} {}\n", dimension, points.len());
    for p in points {
        let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    out
}

pub fn vrep_from_text(text: &str) -> Result<(usize, Vec<Point>), Error> {
    parse_table(text, 0)
}

pub fn points_to_json(points: &[Point]) -> Value {
    Value::Array(
        points
            .iter()
            .map(|p| Value::Array(p.iter().map(|c| Value::String(c.to_string())).collect()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn segment(lo: i64, hi: i64) -> HRep {
        HRep::new(
            1,
            vec![
                AffineForm::new(rat(-lo, 1), vec![rat(1, 1)]),
                AffineForm::new(rat(hi, 1), vec![rat(-1, 1)]),
            ],
        )
        .unwrap()
    }

    fn pts(rows: &[&[i64]]) -> Vec<Point> {
        rows.iter()
            .map(|r| r.iter().map(|&v| rat(v, 1)).collect())
            .collect()
    }

    #[test]
    fn membership() {
        let s = segment(1, 2);
        assert!(s.contains(&[rat(3, 2)]).unwrap());
        assert!(!s.contains(&[rat(5, 2)]).unwrap());
        assert!(s.contains(&[rat(2, 1)]).unwrap());
        assert!(!s.contains_strictly(&[rat(2, 1)]).unwrap());
        assert!(s.contains(&[rat(1, 1), rat(1, 1)]).is_err());
    }

    #[test]
    fn cone_over_segment() {
        let c = segment(1, 2).cone();
        assert_eq!(c.vertices(), pts(&[&[0, 0], &[1, 1], &[1, 2]]));
        assert_eq!(segment(1, 2).cone_q(&rat(1, 1)), c);
        // 2!·area of the triangle is 1; 1!·length of the base is 1
        assert_eq!(c.normalized_volume(), rat(1, 1));
    }

    #[test]
    fn cone_q_apex() {
        let c = segment(1, 2).cone_q(&rat(1, 3));
        let v = c.vertices();
        assert_eq!(
            v,
            vec![
                vec![rat(2, 3), rat(2, 3)],
                vec![rat(1, 1), rat(1, 1)],
                vec![rat(1, 1), rat(2, 1)]
            ]
        );
    }

    #[test]
    fn product_and_cone_volume() {
        let rect = segment(0, 2).product(&segment(1, 4));
        assert_eq!(rect.vertices().len(), 4);
        // 2!·area = 2·6
        assert_eq!(rect.normalized_volume(), rat(12, 1));
        // vol(cone P) = vol(P)/(n+1), so 3!·vol(cone) = 2!·vol(P)
        assert_eq!(rect.cone().normalized_volume(), rat(12, 1));
        let cube = rect.product(&segment(0, 1));
        assert_eq!(cube.normalized_volume(), rat(36, 1));
        assert_eq!(cube.cone().normalized_volume(), rat(36, 1));
    }

    #[test]
    fn text_and_json_round_trip() {
        let c = segment(1, 2).cone_q(&rat(1, 2));
        let text = c.to_text();
        assert!(text.starts_with("2 4\n"));
        assert_eq!(HRep::from_text(&text).unwrap(), c);
        assert_eq!(HRep::from_json(&c.to_json()).unwrap(), c);
        assert!(HRep::from_text("2 1\n1 2\n").is_err());
        let p = pts(&[&[0, 1], &[2, 3]]);
        assert_eq!(vrep_from_text(&vrep_to_text(2, &p)).unwrap(), (2, p));
    }

    #[test]
    fn combinations() {
        let mut pick = vec![0, 1];
        let mut count = 1;
        while next_combination(&mut pick, 4) {
            count += 1;
        }
        assert_eq!(count, 6);
    }
}
