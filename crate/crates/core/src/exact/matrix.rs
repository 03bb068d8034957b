use super::Rational;
use crate::error::Error;

/// Dense matrix over the rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: Vec<Vec<Rational>>,
    cols: usize,
}

impl RationalMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: bad.len(),
            });
        }
        Ok(Self { rows, cols })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self, Error> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from(v)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self { rows, cols: n }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    /// Exact determinant by Gaussian elimination over the rationals.
    pub fn determinant(&self) -> Result<Rational, Error> {
        let n = self.rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if self.cols != n {
            return Err(Error::NotSquare {
                rows: n,
                cols: self.cols,
            });
        }
        let mut a = self.rows.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(Rational::zero());
            };
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det *= &p;
            let pivot_row = a[col].clone();
            for row in a.iter_mut().skip(col + 1) {
                if row[col].is_zero() {
                    continue;
                }
                let factor = &row[col] / &p;
                for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &(&factor * y);
                }
            }
        }
        Ok(det)
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        row_echelon(self.rows.clone(), self.cols).0
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.cols)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        Self {
            rows,
            cols: self.rows.len(),
        }
    }

    /// Inverse of a square matrix; `None` when singular.
    pub fn inverse(&self) -> Result<Option<Self>, Error> {
        let n = self.rows.len();
        if self.cols != n {
            return Err(Error::NotSquare {
                rows: n,
                cols: self.cols,
            });
        }
        let augmented: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..n).map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                }));
                r
            })
            .collect();
        let (rank, reduced) = row_echelon(augmented, n);
        if rank < n {
            return Ok(None);
        }
        let rows = reduced.into_iter().map(|r| r[n..].to_vec()).collect();
        Ok(Some(Self { rows, cols: n }))
    }

    /// Solves `self * x = rhs` for square nonsingular `self`; `None` when singular.
    pub fn solve(&self, rhs: &[Rational]) -> Result<Option<Vec<Rational>>, Error> {
        let n = self.rows.len();
        if self.cols != n {
            return Err(Error::NotSquare {
                rows: n,
                cols: self.cols,
            });
        }
        if rhs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: rhs.len(),
            });
        }
        let augmented: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .zip(rhs)
            .map(|(row, b)| {
                let mut r = row.clone();
                r.push(b.clone());
                r
            })
            .collect();
        let (rank, reduced) = row_echelon(augmented, n);
        if rank < n {
            return Ok(None);
        }
        Ok(Some(
            reduced.into_iter().map(|mut r| r.pop().unwrap()).collect(),
        ))
    }
}

/// Reduced row echelon form on the first `pivot_cols` columns. Returns the
/// rank together with the reduced rows.
fn row_echelon(mut a: Vec<Vec<Rational>>, pivot_cols: usize) -> (usize, Vec<Vec<Rational>>) {
    let nrows = a.len();
    let width = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..pivot_cols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot, rank);
        let inv = a[rank][col].recip().expect("pivot is nonzero");
        for x in &mut a[rank][col..width] {
            *x *= &inv;
        }
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row[col..width].iter_mut().zip(&pivot_row[col..width]) {
                *x -= &(&factor * y);
            }
        }
        rank += 1;
    }
    (rank, a)
}

/// Dimension of the affine hull of a point set (`-1` encoded as `None` for
/// the empty set).
pub fn affine_rank(points: &[&[Rational]]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    if rest.is_empty() {
        return Some(0);
    }
    let diffs: Vec<Vec<Rational>> = rest
        .iter()
        .map(|p| p.iter().zip(first.iter()).map(|(a, b)| a - b).collect())
        .collect();
    let cols = first.len();
    Some(row_echelon(diffs, cols).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn determinant_examples() {
        assert_eq!(
            RationalMatrix::identity(3).determinant().unwrap(),
            rat(1, 1)
        );
        let m = RationalMatrix::from_i64(&[&[2, 0], &[2, 4]]).unwrap();
        assert_eq!(m.determinant().unwrap(), rat(8, 1));
        // vertices (1,2), (2,2), (2,4): differences from the first
        let d = RationalMatrix::from_i64(&[&[1, 0], &[1, 2]]).unwrap();
        assert_eq!(d.determinant().unwrap().abs(), rat(2, 1));
    }

    #[test]
    fn determinant_errors() {
        let m = RationalMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6]]).unwrap();
        assert_eq!(m.determinant(), Err(Error::NotSquare { rows: 2, cols: 3 }));
        assert_eq!(
            RationalMatrix::new(vec![]).unwrap().determinant(),
            Err(Error::EmptyMatrix)
        );
        assert!(RationalMatrix::from_i64(&[&[1, 2], &[3]]).is_err());
    }

    #[test]
    fn singular_and_rank() {
        let m = RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(m.determinant().unwrap(), rat(0, 1));
        assert_eq!(m.rank(), 1);
        assert_eq!(m.solve(&[rat(1, 1), rat(2, 1)]).unwrap(), None);
    }

    #[test]
    fn solve_small_system() {
        let m = RationalMatrix::from_i64(&[&[2, 1], &[1, 3]]).unwrap();
        let x = m.solve(&[rat(3, 1), rat(5, 1)]).unwrap().unwrap();
        assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let m = RationalMatrix::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]).unwrap();
        let inv = m.inverse().unwrap().unwrap();
        let n = 3;
        for i in 0..n {
            for j in 0..n {
                let v: Rational = (0..n).map(|k| m.get(i, k) * inv.get(k, j)).sum();
                assert_eq!(v, if i == j { rat(1, 1) } else { rat(0, 1) });
            }
        }
        let singular = RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(singular.inverse().unwrap(), None);
        assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn affine_rank_of_points() {
        let a = [rat(0, 1), rat(0, 1)];
        let b = [rat(1, 1), rat(1, 1)];
        let c = [rat(2, 1), rat(2, 1)];
        let d = [rat(0, 1), rat(1, 1)];
        assert_eq!(affine_rank(&[&a, &b, &c]), Some(1));
        assert_eq!(affine_rank(&[&a, &b, &d]), Some(2));
        assert_eq!(affine_rank(&[&a]), Some(0));
        assert_eq!(affine_rank(&[]), None);
    }
}
