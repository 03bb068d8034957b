use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Error;
use crate::exact::Rational;

use super::LabeledForest;

/// Unlabeled plane forest, identified by its degree sequence in depth-first
/// order with component-terminating zeros kept.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneForest {
    degree_sequence: Vec<usize>,
    component_sizes: Vec<usize>,
}

impl PlaneForest {
    /// Validates that `degrees` splits into tree degree sequences: within a
    /// component the running count of open slots reaches zero exactly at its
    /// last node.
    pub fn from_degree_sequence(degrees: &[usize]) -> Result<Self, Error> {
        if degrees.is_empty() {
            return Err(Error::InvalidDegreeSequence(degrees.to_vec()));
        }
        let mut sizes = Vec::new();
        let mut open: isize = 0;
        let mut size = 0;
        for &d in degrees {
            if open == 0 {
                open = 1;
                size = 0;
            }
            open += d as isize - 1;
            size += 1;
            if open == 0 {
                sizes.push(size);
            }
        }
        if open != 0 {
            return Err(Error::InvalidDegreeSequence(degrees.to_vec()));
        }
        Ok(Self {
            degree_sequence: degrees.to_vec(),
            component_sizes: sizes,
        })
    }

    pub fn node_count(&self) -> usize {
        self.degree_sequence.len()
    }

    pub fn degree_sequence(&self) -> &[usize] {
        &self.degree_sequence
    }

    /// Sizes `a_1, .., a_m` of the components, left to right.
    pub fn component_sizes(&self) -> &[usize] {
        &self.component_sizes
    }

    pub fn component_count(&self) -> usize {
        self.component_sizes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.degree_sequence.iter().sum()
    }

    pub fn is_tree(&self) -> bool {
        self.component_sizes.len() == 1
    }

    /// Degree sequence with the zero closing each component removed.
    pub fn reduced_degree_sequence(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.node_count() - self.component_count());
        let mut start = 0;
        for &a in &self.component_sizes {
            out.extend_from_slice(&self.degree_sequence[start..start + a - 1]);
            start += a;
        }
        out
    }

    /// Components as plane forests of their own.
    pub fn components(&self) -> Vec<PlaneForest> {
        let mut start = 0;
        self.component_sizes
            .iter()
            .map(|&a| {
                let part = &self.degree_sequence[start..start + a];
                start += a;
                PlaneForest::from_degree_sequence(part).expect("component of a valid forest")
            })
            .collect()
    }

    /// Parent (by depth-first index) of every node; `None` for roots.
    pub fn dfs_parents(&self) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.node_count()];
        // stack of (node, remaining child slots)
        let mut open: Vec<(usize, usize)> = Vec::new();
        for (idx, &d) in self.degree_sequence.iter().enumerate() {
            if let Some(top) = open.last_mut() {
                parent[idx] = Some(top.0);
                top.1 -= 1;
                if top.1 == 0 {
                    open.pop();
                }
            }
            if d > 0 {
                open.push((idx, d));
            }
        }
        parent
    }

    /// Children of every node by depth-first index, left to right.
    pub fn dfs_children(&self) -> Vec<Vec<usize>> {
        let mut children = vec![Vec::new(); self.node_count()];
        for (idx, p) in self.dfs_parents().into_iter().enumerate() {
            if let Some(p) = p {
                children[p].push(idx);
            }
        }
        children
    }

    /// Neighbors-first search position of every node (by depth-first
    /// index). Components are searched left to right; an active node's
    /// children are visited right to left, and the next active node is the
    /// most recently visited unexpanded node.
    pub fn search_positions(&self) -> Vec<usize> {
        let n = self.node_count();
        let children = self.dfs_children();
        let mut pos = vec![0; n];
        let mut next = 0;
        let mut root = 0;
        for &a in &self.component_sizes {
            pos[root] = next;
            next += 1;
            let mut pending = vec![root];
            while let Some(active) = pending.pop() {
                for &c in children[active].iter().rev() {
                    pos[c] = next;
                    next += 1;
                    pending.push(c);
                }
            }
            root += a;
        }
        pos
    }

    /// Cane-path counts by depth-first index.
    pub fn cane_exponents(&self) -> Vec<u32> {
        let children = self.dfs_children();
        let mut exps = vec![0u32; self.node_count()];
        // depth-first order lists parents before children
        for v in 0..self.node_count() {
            let k = children[v].len();
            for (idx, &c) in children[v].iter().enumerate() {
                exps[c] = exps[v] + (k - 1 - idx) as u32;
            }
        }
        exps
    }

    /// Total number of cane paths, counted structurally.
    pub fn alpha(&self) -> u32 {
        self.cane_exponents().iter().sum()
    }

    /// `C(n + 1 - m, 2) - Σ i d_i` over the reduced degree sequence, where
    /// `n` is the node count and `m` the number of components.
    pub fn alpha_from_degrees(&self) -> i64 {
        let n = self.node_count() as i64;
        let m = self.component_count() as i64;
        let base = (n + 1 - m) * (n - m) / 2;
        let weighted: i64 = self
            .reduced_degree_sequence()
            .iter()
            .enumerate()
            .map(|(i, &d)| (i as i64 + 1) * d as i64)
            .sum();
        base - weighted
    }

    /// A labeled forest with this shape: the node searched at position `p`
    /// gets label `n - p`.
    pub fn representative(&self) -> LabeledForest {
        let n = self.node_count();
        let pos = self.search_positions();
        let label = |v: usize| n - pos[v];
        let mut parents = vec![None; n];
        for (v, p) in self.dfs_parents().into_iter().enumerate() {
            parents[label(v) - 1] = p.map(label);
        }
        LabeledForest::from_parents(&parents).expect("representative labeling is canonical")
    }

    /// Number of labeled forests with this shape,
    /// `(n-1)! / (Π d_i! · Π_{j≥2} (a_j + .. + a_m))` over the reduced
    /// degree sequence.
    pub fn labeling_count(&self) -> Rational {
        let n = self.node_count();
        let mut numer = factorial(n.saturating_sub(1));
        let mut denom = BigUint::one();
        for d in self.reduced_degree_sequence() {
            denom *= factorial(d);
        }
        let sizes = &self.component_sizes;
        for j in 1..sizes.len() {
            denom *= BigUint::from(sizes[j..].iter().sum::<usize>());
        }
        if n == 0 {
            numer = BigUint::one();
        }
        Rational::new(
            num_bigint::BigInt::from(numer),
            num_bigint::BigInt::from(denom),
        )
        .expect("positive denominator")
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

impl fmt::Display for PlaneForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degree_sequence.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for PlaneForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneForest({self})")
    }
}

impl std::str::FromStr for PlaneForest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let degrees = s
            .split(',')
            .map(|d| d.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::Format(format!("bad degree sequence {s:?}")))?;
        PlaneForest::from_degree_sequence(&degrees)
    }
}
