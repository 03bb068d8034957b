use crate::error::Error;
use crate::exact::Rational;
use crate::forest::{NodeCoordinate, NodeKind, PlaneForest};

use super::family::position_form;
use super::simplex::coordinate_form;
use super::{AffineForm, HRep};

/// Node coordinates of a plane forest, by depth-first index.
fn plane_coordinates(f: &PlaneForest) -> Vec<NodeCoordinate> {
    let big_n = f.node_count();
    let positions = f.search_positions();
    let exps = f.cane_exponents();
    let parents = f.dfs_parents();
    let mut root = 0;
    let mut root_of = vec![0; big_n];
    for (v, p) in parents.iter().enumerate() {
        if p.is_none() {
            root = v;
        }
        root_of[v] = root;
    }
    (0..big_n)
        .map(|v| NodeCoordinate {
            label: big_n - positions[v],
            kind: if parents[v].is_none() {
                NodeKind::Root
            } else {
                NodeKind::NonRoot
            },
            position: positions[v],
            cane_exponent: exps[v],
            root_position: positions[root_of[v]],
        })
        .collect()
}

/// The piece `D_F(q, t)` written out directly: below each node its
/// children's coordinates increase left to right and stay under the
/// coordinate of the component root; the roots' coordinates decrease left
/// to right from `c(w_1) = qt` down to 0.
pub fn piece_d(f: &PlaneForest, q: &Rational, t: &Rational) -> Result<HRep, Error> {
    let n = f.node_count() - 1;
    let nodes = plane_coordinates(f);
    let c: Vec<AffineForm> = nodes.iter().map(|v| coordinate_form(n, v, q, t)).collect();
    let children = f.dfs_children();
    let mut rows = Vec::new();
    for (v, kids) in children.iter().enumerate() {
        let Some(&first) = kids.first() else {
            continue;
        };
        let w = nodes
            .iter()
            .position(|u| u.position == nodes[v].root_position)
            .expect("root is a node");
        rows.push(c[first].clone());
        for pair in kids.windows(2) {
            rows.push(&c[pair[1]] - &c[pair[0]]);
        }
        rows.push(&c[w] - &c[*kids.last().expect("nonempty")]);
    }
    let roots: Vec<usize> = (0..nodes.len())
        .filter(|&v| nodes[v].kind == NodeKind::Root)
        .collect();
    rows.push(c[*roots.last().expect("a forest has a root")].clone());
    for pair in roots.windows(2) {
        rows.push(&c[pair[0]] - &c[pair[1]]);
    }
    HRep::new(n, rows)?.without_constant_rows()
}

/// `D_T(t)` for a plane tree on `a` nodes, in `a - 1` coordinates: for each
/// node, `1 ≤ x_{v_1}/(1+t)^{j_1} ≤ .. ≤ x_{v_k}/(1+t)^{j_k} ≤ 1 + t` over its
/// children left to right.
pub fn piece_d_tree(tree: &PlaneForest, t: &Rational) -> Result<HRep, Error> {
    if !tree.is_tree() {
        return Err(Error::InvalidForest("expected a plane tree".into()));
    }
    let n = tree.node_count() - 1;
    let growth = &Rational::one() + t;
    let positions = tree.search_positions();
    let exps = tree.cane_exponents();
    let mut rows = Vec::new();
    for kids in tree.dfs_children() {
        if kids.is_empty() {
            continue;
        }
        let mut previous = AffineForm::constant(n, Rational::one());
        for &c in &kids {
            let scale = growth.pow(exps[c]).recip().expect("t > 0");
            let form = position_form(n, positions[c]).scale(&scale);
            rows.push(&form - &previous);
            previous = form;
        }
        rows.push(&AffineForm::constant(n, growth.clone()) - &previous);
    }
    HRep::new(n, rows)
}

/// `D_{T_1}(t) × cone_q(D_{T_2}(t) × cone_q(.. × cone_q(D_{T_m}(t))))`.
pub fn piece_d_combinator(f: &PlaneForest, q: &Rational, t: &Rational) -> Result<HRep, Error> {
    let components = f.components();
    let (last, rest) = components.split_last().expect("a forest has a component");
    let mut acc = piece_d_tree(last, t)?;
    for tree in rest.iter().rev() {
        acc = piece_d_tree(tree, t)?.product(&acc.cone_q(q));
    }
    Ok(acc)
}
