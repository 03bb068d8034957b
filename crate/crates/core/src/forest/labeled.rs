use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::graph::LabeledGraph;

use super::PlaneForest;

/// A labeled forest on `{1..n}` in canonical form: every component is rooted
/// at its largest label, children are kept in increasing label order, and
/// components are ordered by decreasing maximal label.
///
/// Alongside the tree structure the forest records the neighbors-first
/// search order, which is what positions coordinates in the polytopes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledForest {
    node_count: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    roots: Vec<usize>,
    visit_order: Vec<usize>,
    position: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Root,
    NonRoot,
}

/// Where a node's coordinate lives: its search position `i`, the number `j`
/// of cane paths starting at it, and the position `l` of its component root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NodeCoordinate {
    pub label: usize,
    pub kind: NodeKind,
    pub position: usize,
    pub cane_exponent: u32,
    pub root_position: usize,
}

/// Neighbors-first search. Each component is searched from its largest
/// label, components in decreasing order of that label. The active node
/// visits its unvisited neighbors in decreasing label order; the next
/// active node is the most recently visited node that has not yet been
/// active, which is the smallest just-visited neighbor when there is one.
pub fn nfs(g: &LabeledGraph) -> LabeledForest {
    let n = g.node_count();
    let adj = g.adjacency();
    let mut visited: u16 = 0;
    let mut parent = vec![None; n];
    let mut roots = Vec::new();
    let mut order = Vec::with_capacity(n);
    let mut pending: Vec<usize> = Vec::with_capacity(n);
    for start in (1..=n).rev() {
        if visited >> (start - 1) & 1 == 1 {
            continue;
        }
        roots.push(start);
        visited |= 1 << (start - 1);
        order.push(start);
        pending.push(start);
        while let Some(active) = pending.pop() {
            let fresh = adj[active - 1] & !visited;
            for v in (1..=n).rev().filter(|v| fresh >> (v - 1) & 1 == 1) {
                visited |= 1 << (v - 1);
                parent[v - 1] = Some(active);
                order.push(v);
                pending.push(v);
            }
        }
    }
    LabeledForest::assemble(n, parent, roots, order)
}

impl LabeledForest {
    fn assemble(
        node_count: usize,
        parent: Vec<Option<usize>>,
        roots: Vec<usize>,
        visit_order: Vec<usize>,
    ) -> Self {
        let mut children = vec![Vec::new(); node_count];
        for (idx, p) in parent.iter().enumerate() {
            if let Some(p) = p {
                children[p - 1].push(idx + 1);
            }
        }
        let mut position = vec![0; node_count];
        for (pos, &v) in visit_order.iter().enumerate() {
            position[v - 1] = pos;
        }
        Self {
            node_count,
            parent,
            children,
            roots,
            visit_order,
            position,
        }
    }

    /// Builds a forest from a parent list (`None` for roots). The list must
    /// already be canonically rooted: each root is the largest label of its
    /// component.
    pub fn from_parents(parents: &[Option<usize>]) -> Result<Self, Error> {
        let n = parents.len();
        if n == 0 || n > crate::graph::MAX_NODES {
            return Err(Error::NodeCountOutOfRange {
                n,
                min: 1,
                max: crate::graph::MAX_NODES,
            });
        }
        let mut edges = Vec::new();
        for (idx, p) in parents.iter().enumerate() {
            if let Some(p) = *p {
                if p == 0 || p > n || p == idx + 1 {
                    return Err(Error::InvalidForest(format!(
                        "node {} has parent {p}",
                        idx + 1
                    )));
                }
                edges.push((idx + 1, p));
            }
        }
        // every chain of parents must reach a root within n steps
        let mut root_of = vec![0; n];
        for v in 1..=n {
            let mut cur = v;
            let mut steps = 0;
            while let Some(p) = parents[cur - 1] {
                cur = p;
                steps += 1;
                if steps > n {
                    return Err(Error::InvalidForest(format!("cycle through node {v}")));
                }
            }
            root_of[v - 1] = cur;
        }
        for v in 1..=n {
            if v > root_of[v - 1] {
                return Err(Error::InvalidForest(format!(
                    "node {v} lies below root {}; components must be rooted at their largest label",
                    root_of[v - 1]
                )));
            }
        }
        let g = LabeledGraph::from_edges(n, &edges)?;
        let forest = nfs(&g);
        debug_assert_eq!(forest.parent, parents);
        Ok(forest)
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v - 1]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    /// Children of `v` in increasing label order (left to right).
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v - 1]
    }

    /// Component roots, largest maximal label first.
    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn component_count(&self) -> usize {
        self.roots.len()
    }

    pub fn edge_count(&self) -> usize {
        self.node_count - self.roots.len()
    }

    pub fn is_tree(&self) -> bool {
        self.roots.len() == 1
    }

    /// Labels in neighbors-first search order; position 0 holds label `n`.
    pub fn visit_order(&self) -> &[usize] {
        &self.visit_order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v - 1]
    }

    pub fn root_of(&self, v: usize) -> usize {
        let mut cur = v;
        while let Some(p) = self.parent[cur - 1] {
            cur = p;
        }
        cur
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(idx, p)| p.map(|p| (idx + 1, p)))
    }

    pub fn to_graph(&self) -> LabeledGraph {
        let edges: Vec<_> = self.edges().collect();
        LabeledGraph::from_edges(self.node_count, &edges).expect("forest edges are valid")
    }

    /// Number of cane paths starting at `v`: walk up through every ancestor
    /// and count its children lying to the right of the child we came from.
    pub fn cane_paths_from(&self, v: usize) -> u32 {
        let mut count = 0;
        let mut cur = v;
        while let Some(a) = self.parent[cur - 1] {
            count += self.children[a - 1].iter().filter(|&&c| c > cur).count() as u32;
            cur = a;
        }
        count
    }

    /// Total number of cane paths.
    pub fn alpha(&self) -> u32 {
        (1..=self.node_count).map(|v| self.cane_paths_from(v)).sum()
    }

    /// Non-tree pairs joined by a cane path, as `(smaller, larger)` labels.
    pub fn cane_edges(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for v in 1..=self.node_count {
            let mut cur = v;
            while let Some(a) = self.parent[cur - 1] {
                for &c in self.children[a - 1].iter().filter(|&&c| c > cur) {
                    out.insert((v.min(c), v.max(c)));
                }
                cur = a;
            }
        }
        out
    }

    /// Exponents assigned top-down: a root gets 0 and the children of a node
    /// with exponent `j`, taken right to left, get `j, j+1, ..`. Agrees with
    /// [`Self::cane_paths_from`] on every node.
    pub fn coordinate_exponents(&self) -> Vec<u32> {
        let mut exps = vec![0u32; self.node_count];
        for &v in &self.visit_order {
            let base = exps[v - 1];
            let kids = &self.children[v - 1];
            for (offset, &c) in kids.iter().rev().enumerate() {
                exps[c - 1] = base + offset as u32;
            }
        }
        exps
    }

    /// Coordinates of all nodes, indexed by `label - 1`.
    pub fn coordinates(&self) -> Vec<NodeCoordinate> {
        let exps = self.coordinate_exponents();
        (1..=self.node_count)
            .map(|v| {
                let root = self.root_of(v);
                NodeCoordinate {
                    label: v,
                    kind: if root == v {
                        NodeKind::Root
                    } else {
                        NodeKind::NonRoot
                    },
                    position: self.position(v),
                    cane_exponent: exps[v - 1],
                    root_position: self.position(root),
                }
            })
            .collect()
    }

    /// Depth-first (preorder) traversal: components in search order, children
    /// left to right. This is the order degree sequences are read in, and it
    /// differs from [`Self::visit_order`] in general.
    pub fn depth_first_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.node_count);
        for &r in &self.roots {
            let mut stack = vec![r];
            while let Some(v) = stack.pop() {
                out.push(v);
                stack.extend(self.children[v - 1].iter().rev());
            }
        }
        out
    }

    /// Forget the labels.
    pub fn shape(&self) -> PlaneForest {
        let degrees: Vec<usize> = self
            .depth_first_order()
            .iter()
            .map(|&v| self.children[v - 1].len())
            .collect();
        PlaneForest::from_degree_sequence(&degrees)
            .expect("a forest yields a valid degree sequence")
    }
}

impl fmt::Display for LabeledForest {
    /// Parent list `p_1,..,p_n` with `0` for roots.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parent
            .iter()
            .map(|p| p.map_or(0, |p| p).to_string())
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for LabeledForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledForest({self})")
    }
}

impl FromStr for LabeledForest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parents = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map(|p| (p != 0).then_some(p))
                    .map_err(|_| Error::InvalidForest(format!("bad parent list {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        LabeledForest::from_parents(&parents)
    }
}
