use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::Error;
use crate::exact::{binomial, BivariatePolynomial, Rational};
use crate::forest::{catalan, enumerate_labeled_forests, nfs, LabeledForest};
use crate::graph::{pair_count, pair_index, shard_ranges, GraphStream};
use crate::polytope::{
    build_hrep, piece_d, piece_d_combinator, simplex_s, tree_chain_hrep, AffineForm, Family, HRep,
    Point,
};
use crate::volume::{
    closed_form_piece_volume, closed_form_simplex_volume, connected_gf, determinant_total,
    graph_total, piece_index, simplex_closed_total, simplex_index, z_bruteforce, ConnectedMode,
};

use super::sampler::{bounding_box, sample_in_box, Lcg, ScaledPoint, SignForm};
use super::{Check, Report};

pub const DEFAULT_SAMPLES: usize = 1000;
/// Candidates drawn per accepted sample before giving up.
const MAX_DRAWS_PER_SAMPLE: usize = 200;
const BATCH: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleSettings {
    pub points: usize,
    pub seed: u64,
}

impl Default for SampleSettings {
    fn default() -> Self {
        Self {
            points: DEFAULT_SAMPLES,
            seed: 1,
        }
    }
}

/// Labeled forests on `nodes` nodes, by the size of the component of node 1.
pub fn labeled_forest_count(nodes: usize) -> u128 {
    let mut f = vec![1u128];
    for m in 1..=nodes {
        let total = (1..=m)
            .map(|k| {
                let trees = if k == 1 {
                    1
                } else {
                    (k as u128).pow(k as u32 - 2)
                };
                binomial(m as u64 - 1, k as u64 - 1) * trees * f[m - k]
            })
            .sum();
        f.push(total);
    }
    f[nodes]
}

/// Outcome of drawing generic interior points and locating them among cells.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SampleOutcome {
    pub accepted: usize,
    pub discarded: usize,
    /// Accepted points lying in a number of cells other than one.
    pub failures: Vec<(Point, Vec<usize>)>,
}

enum Candidate {
    Outside,
    NonGeneric,
    Located(Vec<usize>),
}

fn locate(hrep: &HRep, cells: &[Vec<SignForm>], x: &Point) -> Candidate {
    if !hrep.contains_strictly(x).unwrap_or(false) {
        return Candidate::Outside;
    }
    let x = ScaledPoint::new(x);
    let mut inside = Vec::new();
    for (idx, forms) in cells.iter().enumerate() {
        let mut all_positive = true;
        for f in forms {
            match f.sign_at(&x) {
                Ordering::Equal => return Candidate::NonGeneric,
                Ordering::Less => all_positive = false,
                Ordering::Greater => {}
            }
        }
        if all_positive {
            inside.push(idx);
        }
    }
    Candidate::Located(inside)
}

/// Draws seeded rational points in the bounding box of `vertices`, keeps
/// those strictly inside `hrep` and off every cell hyperplane, and records
/// which cells contain each kept point.
pub fn sample_cells(
    hrep: &HRep,
    vertices: &[Point],
    cells: &[Vec<AffineForm>],
    settings: SampleSettings,
) -> SampleOutcome {
    let bbox = bounding_box(vertices);
    let cells: Vec<Vec<SignForm>> = cells
        .iter()
        .map(|forms| {
            forms
                .iter()
                .filter(|f| !f.is_constant())
                .map(SignForm::new)
                .collect()
        })
        .collect();
    let mut rng = Lcg::new(settings.seed);
    let mut outcome = SampleOutcome::default();
    let mut draws = 0;
    while outcome.accepted < settings.points && draws < settings.points * MAX_DRAWS_PER_SAMPLE {
        let batch: Vec<Point> = (0..BATCH).map(|_| sample_in_box(&mut rng, &bbox)).collect();
        draws += BATCH;
        let located: Vec<Candidate> = batch.par_iter().map(|x| locate(hrep, &cells, x)).collect();
        for (x, c) in batch.into_iter().zip(located) {
            if outcome.accepted == settings.points {
                break;
            }
            match c {
                Candidate::Outside => {}
                Candidate::NonGeneric => outcome.discarded += 1,
                Candidate::Located(inside) => {
                    outcome.accepted += 1;
                    if inside.len() != 1 {
                        outcome.failures.push((x, inside));
                    }
                }
            }
        }
    }
    outcome
}

fn point_json(p: &Point) -> Value {
    Value::Array(p.iter().map(|c| json!(c.to_string())).collect())
}

fn sampling_check(outcome: &SampleOutcome, settings: SampleSettings, labels: &[String]) -> Check {
    let witness = outcome.failures.first().map(|(p, cells)| {
        json!({
            "point": point_json(p),
            "cells": cells.iter().map(|&c| labels[c].clone()).collect::<Vec<_>>(),
        })
    });
    Check::new(
        "sampled_points_in_exactly_one_cell",
        outcome.accepted == settings.points && outcome.failures.is_empty(),
        json!({
            "accepted": outcome.accepted,
            "discarded_non_generic": outcome.discarded,
            "failures": outcome.failures.len(),
            "witness": witness,
        }),
    )
}

fn containment_check<'a>(
    name: &str,
    hrep: &HRep,
    cells: impl Iterator<Item = (String, &'a [Point])>,
) -> Check {
    let mut witness = None;
    for (label, vertices) in cells {
        if let Some(v) = vertices.iter().find(|v| !hrep.contains(v).unwrap_or(false)) {
            witness = Some(json!({ "cell": label, "vertex": point_json(v) }));
            break;
        }
    }
    Check::new(name, witness.is_none(), json!({ "witness": witness }))
}

fn expected_total(family: Family, n: usize, q: &Rational, t: &Rational) -> Result<Rational, Error> {
    let (qp, tp) = family.polynomial_parameters(q, t);
    Ok(graph_total(family, n)?.eval(&qp, &tp))
}

fn new_report(theorem: &str, family: Family, n: usize, q: &Rational, t: &Rational) -> Report {
    let mut report = Report::new(theorem, Some(family), n);
    report.parameters = Some(family.polynomial_parameters(q, t));
    report
}

/// The simplices `S_F` triangulate the family's polytope.
pub fn verify_triangulation(
    family: Family,
    n: usize,
    q: &Rational,
    t: &Rational,
    settings: SampleSettings,
) -> Result<Report, Error> {
    family.check_parameters(n, q, t)?;
    let (qc, tc) = family.construction_parameters(q, t);
    let mut report = new_report("triangulation", family, n, q, t);
    report.seed = Some(settings.seed);
    let forests = simplex_index(family, n)?;
    let expected_count = if family.uses_trees() {
        ((n + 1) as u128).pow(n as u32 - 1)
    } else {
        labeled_forest_count(n + 1)
    };
    report.push(Check::equal(
        "simplex_count",
        &(forests.len() as u128),
        &expected_count,
    ));

    let simplices = forests
        .par_iter()
        .map(|f| simplex_s(f, &qc, &tc))
        .collect::<Result<Vec<_>, _>>()?;
    let hrep = build_hrep(family, n, q, t)?;
    let labels: Vec<String> = forests.iter().map(ToString::to_string).collect();
    report.push(containment_check(
        "simplex_vertices_in_polytope",
        &hrep,
        labels
            .iter()
            .cloned()
            .zip(simplices.iter().map(|s| s.vertices())),
    ));

    let expected = expected_total(family, n, q, t)?;
    let by_det: Rational = simplices.iter().map(|s| s.normalized_volume()).sum();
    report.push(Check::equal("determinant_volume_sum", &by_det, &expected));
    let (qp, tp) = family.polynomial_parameters(q, t);
    let by_closed = simplex_closed_total(family, n)?.eval(&qp, &tp);
    report.push(Check::equal(
        "closed_form_volume_sum",
        &by_closed,
        &expected,
    ));

    let vertices = hrep.vertices();
    let cells: Vec<Vec<AffineForm>> = simplices.iter().map(|s| s.barycentric_forms()).collect();
    let outcome = sample_cells(&hrep, &vertices, &cells, settings);
    report.push(sampling_check(&outcome, settings, &labels));
    Ok(report)
}

/// The pieces `D_F` subdivide the family's polytope.
pub fn verify_subdivision(
    family: Family,
    n: usize,
    q: &Rational,
    t: &Rational,
    settings: SampleSettings,
) -> Result<Report, Error> {
    family.check_parameters(n, q, t)?;
    let (qc, tc) = family.construction_parameters(q, t);
    let mut report = new_report("subdivision", family, n, q, t);
    report.seed = Some(settings.seed);
    let shapes = piece_index(family, n)?;
    let expected_count = if family.uses_trees() {
        catalan(n as u64)
    } else {
        catalan(n as u64 + 1)
    };
    report.push(Check::equal(
        "piece_count",
        &(shapes.len() as u128),
        &expected_count,
    ));

    let pieces = shapes
        .par_iter()
        .map(|f| piece_d(f, &qc, &tc))
        .collect::<Result<Vec<_>, _>>()?;
    let piece_vertices: Vec<Vec<Point>> = pieces.par_iter().map(HRep::vertices).collect();
    let labels: Vec<String> = shapes.iter().map(ToString::to_string).collect();

    let mismatch = shapes
        .par_iter()
        .zip(&piece_vertices)
        .find_map_first(|(f, v)| {
            let other = piece_d_combinator(f, &qc, &tc).ok()?.vertices();
            (&other != v).then(|| f.to_string())
        });
    report.push(Check::new(
        "direct_and_combinator_pieces_agree",
        mismatch.is_none(),
        json!({ "witness": mismatch }),
    ));

    let hrep = build_hrep(family, n, q, t)?;
    report.push(containment_check(
        "piece_vertices_in_polytope",
        &hrep,
        labels
            .iter()
            .cloned()
            .zip(piece_vertices.iter().map(Vec::as_slice)),
    ));

    let expected = expected_total(family, n, q, t)?;
    let by_geometry: Rational = pieces
        .par_iter()
        .zip(&piece_vertices)
        .map(|(p, v)| crate::polytope::normalized_volume_of(v, p.inequalities(), n))
        .collect::<Vec<_>>()
        .into_iter()
        .sum();
    report.push(Check::equal(
        "geometric_volume_sum",
        &by_geometry,
        &expected,
    ));
    let (qp, tp) = family.polynomial_parameters(q, t);
    let closed: BivariatePolynomial = shapes.iter().map(closed_form_piece_volume).sum();
    let by_closed = crate::volume::specialize(family, &closed).eval(&qp, &tp);
    report.push(Check::equal(
        "closed_form_volume_sum",
        &by_closed,
        &expected,
    ));

    let cells: Vec<Vec<AffineForm>> = pieces.iter().map(|p| p.inequalities().to_vec()).collect();
    let vertices = hrep.vertices();
    let outcome = sample_cells(&hrep, &vertices, &cells, settings);
    report.push(sampling_check(&outcome, settings, &labels));
    Ok(report)
}

/// Each simplex lies in the piece of its shape, and each piece holds as
/// many simplices as its labeling count predicts.
pub fn verify_refinement(
    family: Family,
    n: usize,
    q: &Rational,
    t: &Rational,
) -> Result<Report, Error> {
    family.check_parameters(n, q, t)?;
    let (qc, tc) = family.construction_parameters(q, t);
    let mut report = new_report("refinement", family, n, q, t);
    let shapes = piece_index(family, n)?;
    let pieces: HashMap<_, _> = shapes
        .par_iter()
        .map(|f| piece_d(f, &qc, &tc).map(|p| (f.clone(), p)))
        .collect::<Result<_, _>>()?;
    let forests = simplex_index(family, n)?;
    let mut multiplicity: BTreeMap<_, u64> = BTreeMap::new();
    let mut witness = None;
    for f in &forests {
        let shape = f.shape();
        *multiplicity.entry(shape.clone()).or_default() += 1;
        if witness.is_some() {
            continue;
        }
        let s = simplex_s(f, &qc, &tc)?;
        let piece = &pieces[&shape];
        if let Some(v) = s
            .vertices()
            .iter()
            .find(|v| !piece.contains(v).unwrap_or(false))
        {
            witness = Some(
                json!({ "forest": f.to_string(), "shape": shape.to_string(), "vertex": point_json(v) }),
            );
        }
    }
    report.push(Check::new(
        "simplex_inside_its_piece",
        witness.is_none(),
        json!({ "witness": witness }),
    ));
    let bad_count = shapes.iter().find(|s| {
        Rational::from(multiplicity.get(*s).copied().unwrap_or(0) as i64) != s.labeling_count()
    });
    report.push(Check::new(
        "labelings_per_shape",
        bad_count.is_none(),
        json!({ "witness": bad_count.map(ToString::to_string) }),
    ));
    let total: u64 = multiplicity.values().sum();
    report.push(Check::equal(
        "shapes_partition_forests",
        &total,
        &(forests.len() as u64),
    ));
    Ok(report)
}

/// Orthoscheme `O(2, 4, .., 2^n)`: the prefixes `(2, .., 2^k, 0, .., 0)`.
fn orthoscheme_vertices(n: usize) -> Vec<Point> {
    let mut out: Vec<Point> = (0..=n)
        .map(|k| {
            (1..=n)
                .map(|i| {
                    if i <= k {
                        Rational::from(2).pow(i as u32)
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    out.sort();
    out
}

/// The `(q, t)` constructions collapse onto the dedicated families.
pub fn verify_specializations(n: usize, t: &Rational) -> Result<Report, Error> {
    let one = Rational::one();
    let mut report = Report::new("specializations", None, n);
    report.parameters = Some((one.clone(), t.clone()));
    let tutte_11 = build_hrep(Family::Tutte, n, &one, &one)?.vertices();
    let gayley = build_hrep(Family::Gayley, n, &one, &one)?.vertices();
    report.push(Check::new(
        "tutte_1_1_is_gayley",
        tutte_11 == gayley,
        json!({ "tutte": tutte_11.len(), "gayley": gayley.len() }),
    ));
    report.push(Check::new(
        "gayley_is_orthoscheme",
        gayley == orthoscheme_vertices(n),
        json!({ "vertices": gayley.len() }),
    ));
    let tutte_1t = build_hrep(Family::Tutte, n, &one, t)?.vertices();
    let tgayley = build_hrep(Family::TGayley, n, &one, t)?.vertices();
    report.push(Check::new(
        "tutte_1_t_is_tgayley",
        tutte_1t == tgayley,
        json!({ "tutte": tutte_1t.len(), "tgayley": tgayley.len() }),
    ));

    let mut shift_witness = None;
    for tree in enumerate_labeled_forests(n + 1, true)? {
        let mut a = simplex_s(&tree, &one, t)?.vertices().to_vec();
        a.sort();
        if a != tree_chain_hrep(&tree, t)?.vertices() {
            shift_witness = Some(tree.to_string());
            break;
        }
    }
    report.push(Check::new(
        "tree_chain_matches_forest_coordinates",
        shift_witness.is_none(),
        json!({ "witness": shift_witness }),
    ));

    let z = z_bruteforce(n + 1)?;
    let connected = connected_gf(n + 1, ConnectedMode::BruteForce)?;
    report.push(Check::equal(
        "z_constant_in_q_is_connected_gf",
        &z.q_free_part(),
        &connected,
    ));
    let pairs = binomial(n as u64 + 1, 2) as u32;
    report.push(Check::equal(
        "z_at_q_1",
        &z.eval_q(&one),
        &BivariatePolynomial::one_plus_t_pow(pairs),
    ));
    report.push(Check::equal(
        "z_at_1_1",
        &z.eval(&one, &one),
        &Rational::from(2).pow(pairs),
    ));
    report.push(Check::equal(
        "tutte_closed_forms_at_q_0_are_tcayley",
        &simplex_closed_total(Family::Tutte, n)?.q_free_part(),
        &simplex_closed_total(Family::TCayley, n)?,
    ));
    report.push(Check::equal(
        "tutte_volume_at_q_1_is_tgayley",
        &determinant_total(Family::Tutte, n, &one, t)?,
        &determinant_total(Family::TGayley, n, &one, t)?,
    ));
    Ok(report)
}

/// The graphs searched into `F` are exactly `F` plus any set of its cane
/// edges, checked by sweeping every graph on `nodes` nodes.
pub fn verify_fiber_lemma(nodes: usize) -> Result<Report, Error> {
    let mut report = Report::new("fiber_lemma", None, nodes - 1);
    let ranges = shard_ranges(nodes, 64);
    let fibers: HashMap<LabeledForest, Vec<u128>> = ranges
        .into_par_iter()
        .map(
            |range| -> Result<HashMap<LabeledForest, Vec<u128>>, Error> {
                let mut local: HashMap<LabeledForest, Vec<u128>> = HashMap::new();
                for g in GraphStream::range(nodes, range, false)? {
                    local.entry(nfs(&g)).or_default().push(g.bits());
                }
                Ok(local)
            },
        )
        .try_reduce(HashMap::new, |mut a, b| {
            for (k, mut v) in b {
                a.entry(k).or_default().append(&mut v);
            }
            Ok(a)
        })?;
    let forests: Vec<LabeledForest> = enumerate_labeled_forests(nodes, false)?.collect();
    report.push(Check::equal(
        "every_fiber_is_a_forest",
        &fibers.len(),
        &forests.len(),
    ));

    let mut set_witness = None;
    let mut weight_witness = None;
    for f in &forests {
        let tree_bits = f.to_graph().bits();
        let cane: Vec<u128> = f
            .cane_edges()
            .into_iter()
            .map(|(i, j)| 1u128 << pair_index(nodes, i, j))
            .collect();
        let mut expected: Vec<u128> = (0..1u32 << cane.len())
            .map(|mask| {
                (0..cane.len())
                    .filter(|&b| mask >> b & 1 == 1)
                    .fold(tree_bits, |acc, b| acc | cane[b])
            })
            .collect();
        expected.sort_unstable();
        let mut got = fibers.get(f).cloned().unwrap_or_default();
        got.sort_unstable();
        if set_witness.is_none() && got != expected {
            set_witness = Some(
                json!({ "forest": f.to_string(), "fiber": got.len(), "expected": expected.len() }),
            );
        }
        let k = f.component_count() as u32;
        let weighted: BivariatePolynomial = got
            .iter()
            .map(|&bits| BivariatePolynomial::monomial(k - 1, bits.count_ones(), Rational::one()))
            .sum();
        if weight_witness.is_none() && weighted != closed_form_simplex_volume(f) {
            weight_witness =
                Some(json!({ "forest": f.to_string(), "fiber_sum": weighted.to_string() }));
        }
    }
    report.push(Check::new(
        "fiber_is_forest_plus_cane_edges",
        set_witness.is_none(),
        json!({ "witness": set_witness }),
    ));
    report.push(Check::new(
        "weighted_fiber_matches_closed_form",
        weight_witness.is_none(),
        json!({ "witness": weight_witness }),
    ));
    let covered: usize = fibers.values().map(Vec::len).sum();
    report.push(Check::equal(
        "fibers_cover_all_graphs",
        &(covered as u128),
        &(1u128 << pair_count(nodes)),
    ));
    Ok(report)
}

/// Every check for `n = 1 .. n_max`: triangulation, subdivision and
/// refinement for each family at `(q, t)`, the specializations, and the
/// fiber lemma on `n + 1` nodes.
pub fn verify_all(
    n_max: usize,
    q: &Rational,
    t: &Rational,
    settings: SampleSettings,
) -> Result<Vec<Report>, Error> {
    let mut reports = Vec::new();
    for n in 1..=n_max {
        for family in Family::ALL {
            reports.push(verify_triangulation(family, n, q, t, settings)?);
            reports.push(verify_subdivision(family, n, q, t, settings)?);
            reports.push(verify_refinement(family, n, q, t)?);
        }
        reports.push(verify_specializations(n, t)?);
        reports.push(verify_fiber_lemma(n + 1)?);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn forest_counts() {
        let expected = [1u128, 1, 2, 7, 38, 291, 2932, 36961, 561948];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(labeled_forest_count(n), e);
        }
    }

    #[test]
    fn small_reports_pass() {
        let settings = SampleSettings {
            points: 50,
            seed: 3,
        };
        let q = rat(1, 2);
        let t = rat(1, 1);
        for family in Family::ALL {
            let r = verify_triangulation(family, 2, &q, &t, settings).unwrap();
            assert!(r.passed(), "{}", r.to_json());
            let r = verify_subdivision(family, 2, &q, &t, settings).unwrap();
            assert!(r.passed(), "{}", r.to_json());
            let r = verify_refinement(family, 2, &q, &t).unwrap();
            assert!(r.passed(), "{}", r.to_json());
        }
        assert!(verify_specializations(2, &rat(2, 1)).unwrap().passed());
        assert!(verify_fiber_lemma(4).unwrap().passed());
    }

    #[test]
    fn orthoscheme_prefixes() {
        assert_eq!(
            orthoscheme_vertices(2),
            vec![
                vec![rat(0, 1), rat(0, 1)],
                vec![rat(2, 1), rat(0, 1)],
                vec![rat(2, 1), rat(4, 1)]
            ]
        );
    }
}
