//! Threads, blocks and leaves.
//!
//! A path-thread is a maximal path whose interior vertices all have degree two
//! in the host graph. A cycle-thread is a cycle in which every vertex but one
//! (its anchor) has degree two. A leaf is a degree-one vertex or an end-block
//! with at least two edges; its stem is the path-thread leaving the leaf's
//! boundary vertex.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::class::ClassSpec;
use crate::graph::{edge, Edge, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThreadKind {
    Path,
    Cycle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thread {
    pub kind: ThreadKind,
    /// Path kind: endpoints first and last. Cycle kind: anchor first, the
    /// closing edge back to the anchor is implicit.
    pub vertices: Vec<VertexId>,
}

impl Thread {
    pub fn edge_count(&self) -> usize {
        match self.kind {
            ThreadKind::Path => self.vertices.len() - 1,
            ThreadKind::Cycle => self.vertices.len(),
        }
    }

    pub fn is_cycle(&self) -> bool {
        self.kind == ThreadKind::Cycle
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    /// Far endpoint; the anchor itself for cycle kind.
    pub fn end(&self) -> VertexId {
        match self.kind {
            ThreadKind::Path => *self.vertices.last().unwrap(),
            ThreadKind::Cycle => self.vertices[0],
        }
    }

    /// Vertices other than the endpoints (or the anchor).
    pub fn interior(&self) -> &[VertexId] {
        match self.kind {
            ThreadKind::Path => &self.vertices[1..self.vertices.len() - 1],
            ThreadKind::Cycle => &self.vertices[1..],
        }
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .vertices
            .windows(2)
            .map(|w| edge(w[0], w[1]))
            .collect();
        if self.kind == ThreadKind::Cycle {
            out.push(edge(*self.vertices.last().unwrap(), self.vertices[0]));
        }
        out
    }

    /// Same thread walked from the other end.
    pub fn reversed(&self) -> Thread {
        let mut vertices = self.vertices.clone();
        match self.kind {
            ThreadKind::Path => vertices.reverse(),
            ThreadKind::Cycle => vertices[1..].reverse(),
        }
        Thread {
            kind: self.kind,
            vertices,
        }
    }
}

/// Walks from `from` through `first`, continuing across degree-2 vertices until
/// reaching a vertex of another degree or returning to `from`. The returned
/// sequence starts at `from` and ends at the stopping vertex.
pub fn walk(g: &Graph, from: VertexId, first: VertexId) -> Vec<VertexId> {
    let mut seq = vec![from, first];
    let mut prev = from;
    let mut cur = first;
    while cur != from && g.degree(cur) == 2 {
        let ns = g.neighbors(cur);
        let next = if ns[0] == prev { ns[1] } else { ns[0] };
        seq.push(next);
        prev = cur;
        cur = next;
    }
    seq
}

fn thread_from_walk(seq: Vec<VertexId>) -> Thread {
    if seq.len() > 2 && seq[0] == *seq.last().unwrap() {
        let mut vertices = seq;
        vertices.pop();
        Thread {
            kind: ThreadKind::Cycle,
            vertices,
        }
    } else {
        Thread {
            kind: ThreadKind::Path,
            vertices: seq,
        }
    }
}

/// Threads starting at `a` (a vertex of degree other than two), one per
/// incident edge-end, cycle-threads reported once. Ordered by first neighbour.
pub fn threads_at(g: &Graph, a: VertexId) -> Vec<Thread> {
    let mut out: Vec<Thread> = Vec::new();
    let mut used_last: BTreeSet<VertexId> = BTreeSet::new();
    for &n in g.neighbors(a) {
        if used_last.contains(&n) {
            continue;
        }
        let t = thread_from_walk(walk(g, a, n));
        if t.is_cycle() {
            used_last.insert(*t.vertices.last().unwrap());
        }
        used_last.insert(n);
        out.push(t);
    }
    out
}

/// Every thread of a simple graph. Path-threads are oriented from the smaller
/// endpoint; components that are bare cycles become one cycle-thread anchored
/// at their minimum id.
pub fn find_threads(g: &Graph) -> Vec<Thread> {
    let mut seen_starts: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut out = Vec::new();
    let mut covered: BTreeSet<VertexId> = BTreeSet::new();
    for x in g.vertices() {
        if g.degree(x) == 2 {
            continue;
        }
        for &n in g.neighbors(x) {
            if !seen_starts.insert((x, n)) {
                continue;
            }
            let seq = walk(g, x, n);
            let len = seq.len();
            seen_starts.insert((seq[len - 1], seq[len - 2]));
            covered.extend(seq.iter().copied());
            out.push(thread_from_walk(seq));
        }
    }
    for v in g.vertices() {
        if covered.contains(&v) || g.degree(v) != 2 {
            continue;
        }
        // a bare cycle component: anchor at its minimum id, which is `v`
        let seq = walk(g, v, g.neighbors(v)[0]);
        covered.extend(seq.iter().copied());
        out.push(thread_from_walk(seq));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: BTreeSet<VertexId>,
    pub edges: Vec<Edge>,
    /// Exactly one vertex of the block touches the rest of the graph.
    pub is_end: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub articulation: BTreeSet<VertexId>,
}

impl BlockDecomposition {
    pub fn end_blocks(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter().filter(|b| b.is_end)
    }
}

/// Biconnected components of a simple graph (iterative Hopcroft–Tarjan).
/// Isolated vertices form single-vertex blocks.
pub fn find_blocks(g: &Graph) -> BlockDecomposition {
    let index: BTreeMap<VertexId, usize> = g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    let verts: Vec<VertexId> = g.vertices().collect();
    let n = verts.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut blocks: Vec<(BTreeSet<VertexId>, Vec<Edge>)> = Vec::new();
    let mut articulation = BTreeSet::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        if g.degree(verts[root]) == 0 {
            blocks.push(([verts[root]].into_iter().collect(), Vec::new()));
            continue;
        }
        let mut root_children = 0;
        // (vertex, parent, next neighbour position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
            let ns = g.neighbors(verts[v]);
            if *pos < ns.len() {
                let w = index[&ns[*pos]];
                *pos += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push(edge(verts[v], verts[w]));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push(edge(verts[v], verts[w]));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[v]);
                if low[v] >= disc[parent] {
                    if parent != root {
                        articulation.insert(verts[parent]);
                    }
                    let target = edge(verts[parent], verts[v]);
                    let mut bedges = Vec::new();
                    let mut bverts = BTreeSet::new();
                    while let Some(e) = edge_stack.pop() {
                        bverts.insert(e.0);
                        bverts.insert(e.1);
                        bedges.push(e);
                        if e == target {
                            break;
                        }
                    }
                    bedges.sort();
                    blocks.push((bverts, bedges));
                }
            }
        }
        if root_children >= 2 {
            articulation.insert(verts[root]);
        }
    }

    let blocks = blocks
        .into_iter()
        .map(|(vertices, edges)| {
            let cuts = vertices.iter().filter(|v| articulation.contains(v)).count();
            Block {
                is_end: cuts == 1,
                vertices,
                edges,
            }
        })
        .collect();
    BlockDecomposition {
        blocks,
        articulation,
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("no unique stem leaves boundary vertex {0}; the graph is outside the declared class")]
    StemNotFound(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Leaf {
    pub vertices: BTreeSet<VertexId>,
    /// The single vertex of the leaf adjacent to the rest of the graph.
    pub boundary: VertexId,
    /// Path-thread from the boundary vertex to the rest of the graph.
    pub stem: Option<Thread>,
}

impl Leaf {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_five_leaf(&self) -> bool {
        self.vertices.len() == 5
    }

    pub fn is_triangle(&self) -> bool {
        self.vertices.len() == 3
    }

    /// The leaf together with its stem, minus the stem's far endpoint.
    pub fn closure(&self) -> BTreeSet<VertexId> {
        let mut out = self.vertices.clone();
        if let Some(stem) = &self.stem {
            out.extend(stem.vertices[..stem.vertices.len() - 1].iter().copied());
        }
        out
    }
}

/// Leaves of a connected graph with their stems.
///
/// A stem is attached when the boundary vertex has exactly one edge leaving
/// the leaf. For the subcubic class that is guaranteed, and its absence is
/// reported as [`StructureError::StemNotFound`].
pub fn find_leaves(g: &Graph, spec: &ClassSpec) -> Result<Vec<Leaf>, StructureError> {
    let mut out = Vec::new();
    for v in g.vertices() {
        if g.degree(v) == 1 {
            let n = g.neighbors(v)[0];
            out.push(Leaf {
                vertices: [v].into_iter().collect(),
                boundary: v,
                stem: Some(thread_from_walk(walk(g, v, n))),
            });
        }
    }
    let decomposition = find_blocks(g);
    for block in decomposition.end_blocks() {
        if block.edges.len() < 2 {
            continue;
        }
        let q = *block
            .vertices
            .iter()
            .find(|v| decomposition.articulation.contains(v))
            .expect("end-block has one articulation vertex");
        let outside: Vec<VertexId> = g
            .neighbors(q)
            .iter()
            .copied()
            .filter(|w| !block.vertices.contains(w))
            .collect();
        let stem = if outside.len() == 1 {
            Some(thread_from_walk(walk(g, q, outside[0])))
        } else if spec.forbid_five_vertex_components {
            return Err(StructureError::StemNotFound(q));
        } else {
            None
        };
        out.push(Leaf {
            vertices: block.vertices.clone(),
            boundary: q,
            stem,
        });
    }
    out.sort_by_key(|l| l.boundary);
    Ok(out)
}
