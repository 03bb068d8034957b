use tutte_polytope::exact::rat;
use tutte_polytope::polytope::{build_hrep, simplex_s, AffineForm, Family};
use tutte_polytope::verify::{
    sample_cells, verify_fiber_lemma, verify_specializations, verify_subdivision,
    verify_triangulation, SampleSettings,
};
use tutte_polytope::volume::simplex_index;

fn cells(n: usize) -> (tutte_polytope::polytope::HRep, Vec<Vec<AffineForm>>) {
    let q = rat(1, 2);
    let t = rat(1, 1);
    let hrep = build_hrep(Family::Tutte, n, &q, &t).unwrap();
    let cells = simplex_index(Family::Tutte, n)
        .unwrap()
        .iter()
        .map(|f| simplex_s(f, &q, &t).unwrap().barycentric_forms())
        .collect();
    (hrep, cells)
}

#[test]
fn sampling_is_deterministic_under_a_seed() {
    let settings = SampleSettings {
        points: 200,
        seed: 17,
    };
    let q = rat(1, 2);
    let t = rat(1, 1);
    let a = verify_triangulation(Family::Tutte, 3, &q, &t, settings).unwrap();
    let b = verify_triangulation(Family::Tutte, 3, &q, &t, settings).unwrap();
    assert!(a.passed());
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.to_json()["seed"], 17);
}

#[test]
fn dropped_cell_leaves_uncovered_points() {
    let (hrep, mut cells) = cells(3);
    cells.remove(0);
    let vertices = hrep.vertices();
    let outcome = sample_cells(
        &hrep,
        &vertices,
        &cells,
        SampleSettings {
            points: 400,
            seed: 1,
        },
    );
    assert_eq!(outcome.accepted, 400);
    assert!(!outcome.failures.is_empty());
    for (point, inside) in &outcome.failures {
        assert!(inside.is_empty());
        assert!(hrep.contains_strictly(point).unwrap());
    }
}

#[test]
fn duplicated_cell_is_double_counted() {
    let (hrep, mut cells) = cells(2);
    cells.push(cells[0].clone());
    let last = cells.len() - 1;
    let vertices = hrep.vertices();
    let outcome = sample_cells(
        &hrep,
        &vertices,
        &cells,
        SampleSettings {
            points: 300,
            seed: 5,
        },
    );
    assert!(!outcome.failures.is_empty());
    assert!(outcome
        .failures
        .iter()
        .all(|(_, inside)| inside == &vec![0, last]));
}

#[test]
fn subdivision_and_specializations_pass() {
    let settings = SampleSettings {
        points: 100,
        seed: 2,
    };
    for family in Family::ALL {
        let r = verify_subdivision(family, 3, &rat(1, 3), &rat(2, 1), settings).unwrap();
        assert!(r.passed(), "{}", r.to_json());
    }
    for n in 1..=4 {
        let r = verify_specializations(n, &rat(3, 2)).unwrap();
        assert!(r.passed(), "{}", r.to_json());
    }
}

#[test]
fn fiber_lemma_on_five_nodes() {
    let r = verify_fiber_lemma(5).unwrap();
    assert!(r.passed(), "{}", r.to_json());
    assert_eq!(r.checks.len(), 4);
}

#[test]
fn out_of_domain_parameters_are_errors() {
    let settings = SampleSettings::default();
    assert!(verify_triangulation(Family::Tutte, 2, &rat(2, 1), &rat(1, 1), settings).is_err());
    assert!(verify_subdivision(Family::TGayley, 2, &rat(1, 2), &rat(0, 1), settings).is_err());
}
