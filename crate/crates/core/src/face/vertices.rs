use serde_json::Value;

use crate::error::Error;
use crate::exact::Rational;
use crate::polytope::{points_to_json, Point};

/// Which construction produced a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexSource {
    /// `x_i ∈ {1, (1+t) x_{i-1}}` coordinatewise.
    BinaryChoice,
    /// A binary-choice point with its trailing run of 1s lowered to `1 - q`.
    TrailingReplaced,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexProvenance {
    pub source: VertexSource,
    /// The set `S` of coordinates with `x_i = (1+t) x_{i-1}`.
    pub subset: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    pub dimension: usize,
    pub points: Vec<Point>,
    pub provenance: Vec<VertexProvenance>,
}

impl VertexSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn to_json(&self) -> Value {
        points_to_json(&self.points)
    }
}

/// Subsets of `{1..n}` from `{1..n}` down to `∅`, reading `i ∈ S` off bit
/// `n - i` of a counter running downward.
fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1u32 << n)
        .rev()
        .map(move |mask| (1..=n).filter(|&i| mask >> (n - i) & 1 == 1).collect())
}

fn binary_choice(n: usize, subset: &[usize], growth: &Rational) -> Point {
    let mut x = Vec::with_capacity(n);
    let mut previous = Rational::one();
    for i in 1..=n {
        let value = if subset.contains(&i) {
            &previous * growth
        } else {
            Rational::one()
        };
        x.push(value.clone());
        previous = value;
    }
    x
}

/// The `2^n` points `x_i ∈ {1, (1+t) x_{i-1}}` of the t-Cayley polytope.
pub fn cayley_vertices(n: usize, t: &Rational) -> Result<VertexSet, Error> {
    if !t.is_positive() {
        return Err(Error::ParameterDomain(format!("t = {t} must be positive")));
    }
    let growth = &Rational::one() + t;
    let (points, provenance) = subsets(n)
        .map(|s| {
            let p = binary_choice(n, &s, &growth);
            (
                p,
                VertexProvenance {
                    source: VertexSource::BinaryChoice,
                    subset: s,
                },
            )
        })
        .unzip();
    Ok(VertexSet {
        dimension: n,
        points,
        provenance,
    })
}

/// The `2^n` vertices of the Tutte polytope for `0 < q < 1`: the t-Cayley
/// points with the maximal trailing run of 1s replaced by `1 - q`.
pub fn tutte_vertices(n: usize, q: &Rational, t: &Rational) -> Result<VertexSet, Error> {
    if !q.is_positive() || q >= &Rational::one() {
        return Err(Error::ParameterDomain(format!(
            "q = {q} must lie in (0, 1)"
        )));
    }
    let mut set = cayley_vertices(n, t)?;
    let low = &Rational::one() - q;
    for (point, prov) in set.points.iter_mut().zip(&mut set.provenance) {
        for x in point.iter_mut().rev() {
            if !x.is_one() {
                break;
            }
            *x = low.clone();
            prov.source = VertexSource::TrailingReplaced;
        }
    }
    Ok(set)
}
