//! Undirected graphs with stable vertex ids.
//!
//! Vertex ids are never reused for the lifetime of a graph and of every graph
//! derived from it (components, induced subgraphs, rewrites): fresh vertices
//! are always numbered above every id the lineage has seen. This is what lets
//! a packing computed on a reduced graph be lifted back onto the original.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An unordered vertex pair stored with the smaller id first.
pub type Edge = (VertexId, VertexId);

pub fn edge(u: VertexId, w: VertexId) -> Edge {
    if u <= w {
        (u, w)
    } else {
        (w, u)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Simple,
    /// Parallel edges and loops allowed. Only used for construction inputs.
    Multi,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("vertex {0} already exists")]
    DuplicateVertex(VertexId),
    #[error("loop at vertex {0} is not allowed in simple mode")]
    Loop(VertexId),
    #[error("parallel edge {0}-{1} is not allowed in simple mode")]
    ParallelEdge(VertexId, VertexId),
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(VertexId, VertexId),
}

/// Adjacency lists are kept sorted; a loop at `v` appears twice in the list of
/// `v`, so `degree` counts it twice.
#[derive(Debug, Clone)]
pub struct Graph {
    mode: Mode,
    adj: BTreeMap<VertexId, Vec<VertexId>>,
    edge_count: usize,
    next_id: u32,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.mode == other.mode && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new(mode: Mode) -> Self {
        Graph {
            mode,
            adj: BTreeMap::new(),
            edge_count: 0,
            next_id: 1,
        }
    }

    /// Graph with vertices `1..=n` and no edges.
    pub fn with_vertices(mode: Mode, n: usize) -> Self {
        let mut g = Graph::new(mode);
        for _ in 0..n {
            g.add_vertex();
        }
        g
    }

    /// Builds a simple graph on `1..=n` from 1-based index pairs.
    /// Panics on invalid input; intended for fixed constructions.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Self {
        let mut g = Graph::with_vertices(Mode::Simple, n);
        for &(u, w) in edges {
            g.add_edge(VertexId(u), VertexId(w))
                .expect("invalid edge in fixed construction");
        }
        g
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_simple_mode(&self) -> bool {
        self.mode == Mode::Simple
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Smallest id that has never been handed out in this graph's lineage.
    pub fn next_id(&self) -> u32 {
        self.next_id
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.adj.keys().copied().collect()
    }

    pub fn min_vertex(&self) -> Option<VertexId> {
        self.adj.keys().next().copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj.get(&v).map_or(0, Vec::len)
    }

    /// Sorted neighbour list, with repetitions for parallel edges and loops.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        self.adj.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn has_edge(&self, u: VertexId, w: VertexId) -> bool {
        self.adj
            .get(&u)
            .is_some_and(|ns| ns.binary_search(&w).is_ok())
    }

    /// Number of parallel copies of `uw` (loops counted once per loop).
    pub fn multiplicity(&self, u: VertexId, w: VertexId) -> usize {
        let n = self
            .neighbors(u)
            .iter()
            .filter(|&&x| x == w)
            .count();
        if u == w {
            n / 2
        } else {
            n
        }
    }

    /// All edges in lexicographic order, smaller endpoint first, repeated
    /// according to multiplicity.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (&u, ns) in &self.adj {
            let mut i = 0;
            while i < ns.len() {
                let w = ns[i];
                if w == u {
                    // two entries per loop
                    out.push((u, u));
                    i += 2;
                    continue;
                }
                if u < w {
                    out.push((u, w));
                }
                i += 1;
            }
        }
        out
    }

    pub fn degree_sum(&self) -> usize {
        self.adj.values().map(Vec::len).sum()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.values().map(Vec::len).min().unwrap_or(0)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let v = VertexId(self.next_id);
        self.next_id += 1;
        self.adj.insert(v, Vec::new());
        v
    }

    /// Inserts a vertex with a caller-chosen id.
    pub fn insert_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        if self.adj.contains_key(&v) {
            return Err(GraphError::DuplicateVertex(v));
        }
        self.adj.insert(v, Vec::new());
        self.next_id = self.next_id.max(v.0 + 1);
        Ok(())
    }

    /// Raises the fresh-id watermark; used to keep lineages id-disjoint.
    pub fn reserve_ids(&mut self, next_id: u32) {
        self.next_id = self.next_id.max(next_id);
    }

    pub fn add_edge(&mut self, u: VertexId, w: VertexId) -> Result<(), GraphError> {
        if !self.contains(u) {
            return Err(GraphError::UnknownVertex(u));
        }
        if !self.contains(w) {
            return Err(GraphError::UnknownVertex(w));
        }
        if self.mode == Mode::Simple {
            if u == w {
                return Err(GraphError::Loop(u));
            }
            if self.has_edge(u, w) {
                let (a, b) = edge(u, w);
                return Err(GraphError::ParallelEdge(a, b));
            }
        }
        insert_sorted(self.adj.get_mut(&u).unwrap(), w);
        insert_sorted(self.adj.get_mut(&w).unwrap(), u);
        self.edge_count += 1;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: VertexId, w: VertexId) -> Result<(), GraphError> {
        if !self.has_edge(u, w) {
            let (a, b) = edge(u, w);
            return Err(GraphError::MissingEdge(a, b));
        }
        remove_one(self.adj.get_mut(&u).unwrap(), w);
        remove_one(self.adj.get_mut(&w).unwrap(), u);
        self.edge_count -= 1;
        Ok(())
    }

    /// Removes `v` and every incident edge.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        let ns = self.adj.remove(&v).ok_or(GraphError::UnknownVertex(v))?;
        let mut removed = 0;
        let mut loops = 0;
        for w in ns {
            if w == v {
                loops += 1;
                continue;
            }
            remove_one(self.adj.get_mut(&w).unwrap(), v);
            removed += 1;
        }
        self.edge_count -= removed + loops / 2;
        Ok(())
    }

    pub fn remove_vertices<'a>(
        &mut self,
        vs: impl IntoIterator<Item = &'a VertexId>,
    ) -> Result<(), GraphError> {
        for &v in vs {
            self.remove_vertex(v)?;
        }
        Ok(())
    }

    /// Subgraph induced by `keep`; ids and the fresh-id watermark are preserved.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Graph {
        let mut g = Graph {
            mode: self.mode,
            adj: BTreeMap::new(),
            edge_count: 0,
            next_id: self.next_id,
        };
        let mut degree_sum = 0;
        let mut loops = 0;
        for &v in keep {
            if let Some(ns) = self.adj.get(&v) {
                let kept: Vec<VertexId> = ns.iter().copied().filter(|w| keep.contains(w)).collect();
                degree_sum += kept.len();
                loops += kept.iter().filter(|&&w| w == v).count();
                g.adj.insert(v, kept);
            }
        }
        // each loop contributes two entries to one list, each other edge one
        // entry to each of two lists
        g.edge_count = (degree_sum - loops) / 2 + loops / 2;
        g
    }

    pub fn without(&self, drop: &BTreeSet<VertexId>) -> Graph {
        let keep: BTreeSet<VertexId> = self.vertices().filter(|v| !drop.contains(v)).collect();
        self.induced(&keep)
    }

    /// Vertex set of the component containing `start`.
    pub fn component_of(&self, start: VertexId) -> BTreeSet<VertexId> {
        let mut seen = BTreeSet::new();
        if !self.contains(start) {
            return seen;
        }
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Vertex sets of the connected components, ordered by minimum id.
    pub fn component_sets(&self) -> Vec<BTreeSet<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let comp = self.component_of(v);
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    /// Connected components as graphs, ordered by minimum id.
    pub fn components(&self) -> Vec<Graph> {
        self.component_sets()
            .iter()
            .map(|c| self.induced(c))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        match self.min_vertex() {
            None => true,
            Some(v) => self.component_of(v).len() == self.vertex_count(),
        }
    }

    /// Copy of the graph with ids mapped through `map` (which must be
    /// injective on the vertex set).
    pub fn relabeled(&self, map: &BTreeMap<VertexId, VertexId>) -> Graph {
        let mut g = Graph::new(self.mode);
        for v in self.vertices() {
            g.insert_vertex(map[&v]).expect("relabeling must be injective");
        }
        for (u, w) in self.edges() {
            g.add_edge(map[&u], map[&w]).expect("relabeled edge");
        }
        g
    }

    /// Disjoint union; panics if the vertex sets overlap.
    pub fn union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        for v in other.vertices() {
            g.insert_vertex(v).expect("union of overlapping graphs");
        }
        for (u, w) in other.edges() {
            g.add_edge(u, w).expect("union edge");
        }
        g.reserve_ids(other.next_id);
        g
    }
}

fn insert_sorted(list: &mut Vec<VertexId>, v: VertexId) {
    let pos = list.partition_point(|&x| x <= v);
    list.insert(pos, v);
}

fn remove_one(list: &mut Vec<VertexId>, v: VertexId) {
    if let Ok(pos) = list.binary_search(&v) {
        list.remove(pos);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn simple_mode_rejects_loops_and_parallel_edges() {
        let mut g = Graph::with_vertices(Mode::Simple, 2);
        assert_eq!(g.add_edge(v(1), v(1)), Err(GraphError::Loop(v(1))));
        g.add_edge(v(1), v(2)).unwrap();
        assert_eq!(
            g.add_edge(v(2), v(1)),
            Err(GraphError::ParallelEdge(v(1), v(2)))
        );
        assert_eq!(g.add_edge(v(1), v(3)), Err(GraphError::UnknownVertex(v(3))));
    }

    #[test]
    fn multi_mode_degrees_count_loops_twice() {
        let mut g = Graph::with_vertices(Mode::Multi, 2);
        g.add_edge(v(1), v(1)).unwrap();
        g.add_edge(v(1), v(2)).unwrap();
        g.add_edge(v(1), v(2)).unwrap();
        assert_eq!(g.degree(v(1)), 4);
        assert_eq!(g.degree_sum(), 2 * g.edge_count());
        assert_eq!(g.edges(), vec![(v(1), v(1)), (v(1), v(2)), (v(1), v(2))]);
        assert_eq!(g.multiplicity(v(1), v(2)), 2);
        assert_eq!(g.multiplicity(v(1), v(1)), 1);
        let h = g.induced(&[v(1)].into_iter().collect());
        assert_eq!(h.edge_count(), 1);
        g.remove_vertex(v(1)).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn fresh_ids_are_never_reused() {
        let mut g = Graph::with_vertices(Mode::Simple, 3);
        g.remove_vertex(v(3)).unwrap();
        assert_eq!(g.add_vertex(), v(4));
        let c = g.induced(&[v(1)].into_iter().collect());
        assert_eq!(c.next_id(), 5);
    }

    #[test]
    fn components_split_and_preserve_ids() {
        let g = Graph::from_edges(7, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (6, 7), (4, 7)]);
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertex_count(), 3);
        assert_eq!(comps[1].vertex_count(), 4);
        assert!(comps[1].has_edge(v(4), v(7)));
        assert!(Graph::new(Mode::Simple).components().is_empty());
        let k4 = Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(k4.components().len(), 1);
    }
}
