//! Labeled simple graphs on `{1..n}` stored as a bitset over node pairs, and
//! deterministic, shardable enumeration of all of them.
//!
//! Pair `(i, j)` with `i < j` maps to bit `pair_index(n, i, j)` in
//! lexicographic order: `(1,2), (1,3), .., (1,n), (2,3), ..`. Every module
//! that converts pairs to bits goes through this one function.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::Error;

pub const MAX_NODES: usize = 12;

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Bit index of the unordered pair `{i, j}` (1-based labels, `i != j`).
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(1 <= i && j <= n && i != j);
    (i - 1) * (2 * n - i) / 2 + (j - i - 1)
}

/// All pairs in bit order.
pub fn pair_table(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(pair_count(n));
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((i, j));
        }
    }
    out
}

fn check_node_count(n: usize, min: usize, max: usize) -> Result<(), Error> {
    if n < min || n > max {
        return Err(Error::NodeCountOutOfRange { n, min, max });
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph {
    n: usize,
    edges: u128,
}

impl LabeledGraph {
    pub fn new(n: usize, edges: u128) -> Result<Self, Error> {
        check_node_count(n, 1, MAX_NODES)?;
        if edges >> pair_count(n) != 0 {
            return Err(Error::ParseGraph(format!(
                "edge bitset {edges:#x} has bits beyond the {} pairs of {n} nodes",
                pair_count(n)
            )));
        }
        Ok(Self { n, edges })
    }

    pub fn empty(n: usize) -> Result<Self, Error> {
        Self::new(n, 0)
    }

    pub fn complete(n: usize) -> Result<Self, Error> {
        check_node_count(n, 1, MAX_NODES)?;
        Self::new(n, (1u128 << pair_count(n)) - 1)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        check_node_count(n, 1, MAX_NODES)?;
        let mut bits = 0u128;
        for &(i, j) in edges {
            if i == j || i == 0 || j == 0 || i > n || j > n {
                return Err(Error::ParseGraph(format!("bad edge {i}-{j} on {n} nodes")));
            }
            bits |= 1u128 << pair_index(n, i, j);
        }
        Self::new(n, bits)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u128 {
        self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.count_ones() as usize
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.edges >> pair_index(self.n, i, j) & 1 == 1
    }

    /// Edges in bit order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        pair_table(self.n)
            .into_iter()
            .enumerate()
            .filter(|(b, _)| self.edges >> b & 1 == 1)
            .map(|(_, p)| p)
    }

    /// Neighbor masks; bit `v - 1` of entry `u - 1` is set iff `u ~ v`.
    pub fn adjacency(&self) -> Vec<u16> {
        let mut adj = vec![0u16; self.n];
        for (i, j) in self.edges() {
            adj[i - 1] |= 1 << (j - 1);
            adj[j - 1] |= 1 << (i - 1);
        }
        adj
    }

    /// Number of connected components, isolated nodes included.
    pub fn component_count(&self) -> usize {
        let table = pair_table(self.n);
        component_count_with(self.n, self.edges, &table)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn with_edge(&self, i: usize, j: usize) -> Self {
        Self {
            n: self.n,
            edges: self.edges | 1u128 << pair_index(self.n, i, j),
        }
    }
}

/// Union-find component count over the set bits of `edges`, using a
/// precomputed pair table for hot loops.
pub fn component_count_with(n: usize, edges: u128, table: &[(usize, usize)]) -> usize {
    let mut parent: [u8; MAX_NODES] = [0; MAX_NODES];
    for (v, p) in parent.iter_mut().enumerate().take(n) {
        *p = v as u8;
    }
    fn find(parent: &mut [u8; MAX_NODES], mut v: u8) -> u8 {
        while parent[v as usize] != v {
            let gp = parent[parent[v as usize] as usize];
            parent[v as usize] = gp;
            v = gp;
        }
        v
    }
    let mut components = n;
    let mut bits = edges;
    while bits != 0 {
        let b = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (i, j) = table[b];
        let ri = find(&mut parent, (i - 1) as u8);
        let rj = find(&mut parent, (j - 1) as u8);
        if ri != rj {
            parent[ri as usize] = rj;
            components -= 1;
        }
    }
    components
}

impl fmt::Display for LabeledGraph {
    /// `"n:i-j,i-j,..."` with edges in sorted order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        let parts: Vec<String> = self.edges().map(|(i, j)| format!("{i}-{j}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LabeledGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::ParseGraph(s.to_string());
        let (n, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let mut edges = Vec::new();
        for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (i, j) = part.split_once('-').ok_or_else(bad)?;
            let i: usize = i.trim().parse().map_err(|_| bad())?;
            let j: usize = j.trim().parse().map_err(|_| bad())?;
            edges.push((i, j));
        }
        LabeledGraph::from_edges(n, &edges)
    }
}

/// Total number of labeled graphs on `n` nodes, `2^{C(n,2)}`.
pub fn graph_count(n: usize) -> u128 {
    1u128 << pair_count(n)
}

/// Deterministic stream over a contiguous range of edge bitsets. A stream is
/// a pure function of `(n, range)`, so disjoint ranges can be handed to
/// separate workers.
#[derive(Clone, Debug)]
pub struct GraphStream {
    n: usize,
    cursor: u128,
    end: u128,
    connected_only: bool,
    table: Vec<(usize, usize)>,
}

impl GraphStream {
    pub fn range(n: usize, range: Range<u128>, connected_only: bool) -> Result<Self, Error> {
        check_node_count(n, 1, MAX_NODES)?;
        let end = range.end.min(graph_count(n));
        Ok(Self {
            n,
            cursor: range.start,
            end,
            connected_only,
            table: pair_table(n),
        })
    }

    /// Position of the next bitset this stream would examine.
    pub fn cursor(&self) -> u128 {
        self.cursor
    }
}

impl Iterator for GraphStream {
    type Item = LabeledGraph;

    fn next(&mut self) -> Option<LabeledGraph> {
        while self.cursor < self.end {
            let bits = self.cursor;
            self.cursor += 1;
            if self.connected_only && component_count_with(self.n, bits, &self.table) != 1 {
                continue;
            }
            return Some(LabeledGraph {
                n: self.n,
                edges: bits,
            });
        }
        None
    }
}

/// Every labeled graph on `n` nodes in increasing bitset order.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<GraphStream, Error> {
    GraphStream::range(n, 0..graph_count(n.min(MAX_NODES)), connected_only)
}

/// Splits the full bitset range for `n` nodes into at most `shards`
/// contiguous pieces aligned on high bits.
pub fn shard_ranges(n: usize, shards: usize) -> Vec<Range<u128>> {
    let total = graph_count(n);
    let mut high_bits = 0;
    while (1u128 << high_bits) < shards as u128 && high_bits < pair_count(n) {
        high_bits += 1;
    }
    let width = total >> high_bits;
    (0..1u128 << high_bits)
        .map(|k| k * width..(k + 1) * width)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_order_is_lexicographic() {
        let n = 5;
        for (b, (i, j)) in pair_table(n).into_iter().enumerate() {
            assert_eq!(pair_index(n, i, j), b);
            assert_eq!(pair_index(n, j, i), b);
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(3, true).unwrap().count(), 4);
        assert_eq!(enumerate_graphs(4, true).unwrap().count(), 38);
        assert_eq!(enumerate_graphs(1, true).unwrap().count(), 1);
        assert!(enumerate_graphs(0, false).is_err());
        assert!(enumerate_graphs(13, false).is_err());
    }

    #[test]
    fn stream_is_increasing_and_restartable() {
        let all: Vec<_> = enumerate_graphs(4, false).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0].bits() < w[1].bits()));
        let mut s = GraphStream::range(4, 0..64, false).unwrap();
        let head: Vec<_> = s.by_ref().take(10).collect();
        let resumed = GraphStream::range(4, s.cursor()..64, false).unwrap();
        let joined: Vec<_> = head.into_iter().chain(resumed).collect();
        assert_eq!(joined, all);
    }

    #[test]
    fn shards_partition_the_range() {
        for shards in [1, 3, 8, 100] {
            let ranges = shard_ranges(4, shards);
            let total: usize = ranges
                .iter()
                .map(|r| GraphStream::range(4, r.clone(), false).unwrap().count())
                .sum();
            assert_eq!(total, 64);
            assert_eq!(ranges.first().unwrap().start, 0);
            assert!(ranges.windows(2).all(|w| w[0].end == w[1].start));
        }
    }

    #[test]
    fn components() {
        assert_eq!(LabeledGraph::empty(5).unwrap().component_count(), 5);
        assert_eq!(LabeledGraph::complete(3).unwrap().component_count(), 1);
        let g = LabeledGraph::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(g.component_count(), 2);
    }

    #[test]
    fn text_form() {
        let g: LabeledGraph = "3:1-2,1-3,2-3".parse().unwrap();
        assert_eq!(g, LabeledGraph::complete(3).unwrap());
        assert_eq!(g.to_string(), "3:1-2,1-3,2-3");
        let h: LabeledGraph = "4:3-2".parse().unwrap();
        assert_eq!(h.to_string(), "4:2-3");
        assert_eq!("2:".parse::<LabeledGraph>().unwrap().edge_count(), 0);
        assert!("3:1-1".parse::<LabeledGraph>().is_err());
        assert!("3:1-4".parse::<LabeledGraph>().is_err());
        assert!("x".parse::<LabeledGraph>().is_err());
    }
}
