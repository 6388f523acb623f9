//! Small named graphs, all on vertices `1..=n`.

use crate::graph::{Graph, Mode, VertexId};

pub fn path(n: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (1..n as u32).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    let mut edges: Vec<(u32, u32)> = (1..n as u32).map(|i| (i, i + 1)).collect();
    edges.push((n as u32, 1));
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            edges.push((i, j));
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 1..=a as u32 {
        for j in 1..=b as u32 {
            edges.push((i, a as u32 + j));
        }
    }
    Graph::from_edges(a + b, &edges)
}

pub fn star(leaves: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (2..=leaves as u32 + 1).map(|i| (1, i)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5u32 {
        edges.push((i + 1, (i + 1) % 5 + 1));
        edges.push((i + 1, i + 6));
        edges.push((i + 6, (i + 2) % 5 + 6));
    }
    Graph::from_edges(10, &edges)
}

/// Two branch vertices `1` and `2` joined by internally disjoint paths with
/// the given edge counts. At most one length may be 1.
pub fn theta(lengths: [usize; 3]) -> Graph {
    let mut g = Graph::with_vertices(Mode::Simple, 2);
    for len in lengths {
        attach_path(&mut g, VertexId(1), VertexId(2), len);
    }
    g
}

/// Adds a path of `len` edges from `from` to `to` through fresh vertices.
/// Returns the interior vertices in order from `from`.
pub fn attach_path(g: &mut Graph, from: VertexId, to: VertexId, len: usize) -> Vec<VertexId> {
    assert!(len >= 1);
    let mut prev = from;
    let mut interior = Vec::new();
    for _ in 1..len {
        let v = g.add_vertex();
        g.add_edge(prev, v).expect("fresh vertex");
        interior.push(v);
        prev = v;
    }
    g.add_edge(prev, to).expect("path edge");
    interior
}

/// Adds a fresh cycle on `len` vertices and returns its vertices in order.
pub fn attach_cycle(g: &mut Graph, len: usize) -> Vec<VertexId> {
    assert!(len >= 3);
    let vs: Vec<VertexId> = (0..len).map(|_| g.add_vertex()).collect();
    for i in 0..len {
        g.add_edge(vs[i], vs[(i + 1) % len]).expect("cycle edge");
    }
    vs
}

/// Multigraph that is a single vertex with `loops` loops.
pub fn bouquet(loops: usize) -> Graph {
    let mut g = Graph::with_vertices(Mode::Multi, 1);
    for _ in 0..loops {
        g.add_edge(VertexId(1), VertexId(1)).unwrap();
    }
    g
}

pub fn to_multi(g: &Graph) -> Graph {
    let mut h = Graph::with_vertices(Mode::Multi, 0);
    for v in g.vertices() {
        h.insert_vertex(v).unwrap();
    }
    for (u, w) in g.edges() {
        h.add_edge(u, w).unwrap();
    }
    h
}
