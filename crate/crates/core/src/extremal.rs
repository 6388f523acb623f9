//! Graphs on which the packing lower bounds are attained.

use thiserror::Error;

use crate::graph::{Graph, GraphError, Mode, VertexId};
use crate::named;
use crate::packing::Ratio;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("s must be at least 2, got {0}")]
    BadDegreeBound(usize),
    #[error("k must be at least 1")]
    ZeroK,
    #[error("vertex {0} has degree {1}; every base degree must be at least 3")]
    DegreeBelowThree(VertexId, usize),
    #[error("subdividing a loop with k = 1 leaves a parallel edge")]
    LoopNeedsTwo,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A tree whose internal vertices all have degree `s`: the star `K_{1,s}`,
/// then `expansions` times `s-1` new leaves hung on the minimum-id leaf.
pub fn gen_ts_tree(s: usize, expansions: usize) -> Result<Graph, ExtremalError> {
    if s < 2 {
        return Err(ExtremalError::BadDegreeBound(s));
    }
    let mut t = named::star(s);
    for _ in 0..expansions {
        let leaf = t
            .vertices()
            .find(|&v| t.degree(v) == 1)
            .expect("a tree with an edge has leaves");
        for _ in 0..s - 1 {
            let w = t.add_vertex();
            t.add_edge(leaf, w)?;
        }
    }
    Ok(t)
}

/// `gen_ts_tree(s, expansions)` with every edge between internal vertices
/// subdivided by `k` vertices and every leaf edge by `k-1`, together with its
/// packing number `(v - k)/(sk - k + 1)`.
pub fn gen_tsk(s: usize, k: usize, expansions: usize) -> Result<(Graph, Ratio), ExtremalError> {
    if k == 0 {
        return Err(ExtremalError::ZeroK);
    }
    let t = gen_ts_tree(s, expansions)?;
    let mut g = Graph::new(Mode::Simple);
    for v in t.vertices() {
        g.insert_vertex(v)?;
    }
    for (u, w) in t.edges() {
        let dangling = t.degree(u) == 1 || t.degree(w) == 1;
        let len = if dangling { k } else { k + 1 };
        named::attach_path(&mut g, u, w, len);
    }
    let v = g.vertex_count() as u64;
    let (s, k) = (s as u64, k as u64);
    Ok((g, Ratio::new(v - k, s * k - k + 1)))
}

/// Subdivides every edge of the multigraph `h` with `k` new vertices, giving
/// a simple graph whose packing number is `v(h)`.
pub fn gen_subdivision(h: &Graph, k: usize) -> Result<(Graph, usize), ExtremalError> {
    if k == 0 {
        return Err(ExtremalError::ZeroK);
    }
    if let Some(v) = h.vertices().find(|&v| h.degree(v) < 3) {
        return Err(ExtremalError::DegreeBelowThree(v, h.degree(v)));
    }
    let mut g = Graph::new(Mode::Simple);
    for v in h.vertices() {
        g.insert_vertex(v)?;
    }
    for (u, w) in h.edges() {
        if u == w && k < 2 {
            return Err(ExtremalError::LoopNeedsTwo);
        }
        named::attach_path(&mut g, u, w, k + 1);
    }
    Ok((g, h.vertex_count()))
}

/// A vertex joined to one vertex on each of three disjoint 5-cycles.
pub fn gen_y() -> Graph {
    let mut g = Graph::with_vertices(Mode::Simple, 1);
    for _ in 0..3 {
        let c = named::attach_cycle(&mut g, 5);
        g.add_edge(VertexId(1), c[0]).expect("fresh cycle");
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::{is_member, ClassSpec};
    use crate::structure::{find_leaves, find_threads};

    #[test]
    fn ts_trees() {
        let t = gen_ts_tree(3, 0).unwrap();
        assert_eq!(t, named::star(3));
        let t = gen_ts_tree(3, 1).unwrap();
        assert_eq!(t.vertex_count(), 6);
        assert_eq!(t.vertices().filter(|&v| t.degree(v) == 3).count(), 2);
        assert_eq!(gen_ts_tree(4, 0).unwrap(), named::star(4));
        assert!(gen_ts_tree(1, 0).is_err());
    }

    #[test]
    fn tsk_sizes_and_expected_values() {
        for (s, k, e, v, opt) in [(3, 2, 0, 7, 1), (3, 2, 1, 12, 2), (3, 3, 0, 10, 1)] {
            let (g, r) = gen_tsk(s, k, e).unwrap();
            assert_eq!(g.vertex_count(), v);
            assert!(r.is_integer());
            assert_eq!(r.ceil(), opt);
            assert!(g.is_connected() && g.edge_count() + 1 == v);
        }
    }

    #[test]
    fn subdivisions() {
        let (g, opt) = gen_subdivision(&named::to_multi(&named::complete(4)), 2).unwrap();
        assert_eq!((g.vertex_count(), opt), (16, 4));
        assert!(find_threads(&g).iter().all(|t| t.edge_count() == 3));
        let (g, opt) = gen_subdivision(&named::complete(5), 2).unwrap();
        assert_eq!((g.vertex_count(), opt), (25, 5));
        let (g, opt) = gen_subdivision(&named::bouquet(2), 2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), opt), (5, 6, 1));
        assert!(matches!(
            gen_subdivision(&named::cycle(4), 2),
            Err(ExtremalError::DegreeBelowThree(..))
        ));
        assert_eq!(gen_subdivision(&named::bouquet(2), 1), Err(ExtremalError::LoopNeedsTwo));
    }

    #[test]
    fn y_graph() {
        let g = gen_y();
        assert_eq!((g.vertex_count(), g.edge_count()), (16, 18));
        let spec = ClassSpec::subcubic_no_five();
        assert!(is_member(&g, &spec));
        let leaves = find_leaves(&g, &spec).unwrap();
        assert_eq!(leaves.len(), 3);
        assert!(leaves
            .iter()
            .all(|l| l.is_five_leaf() && l.stem.as_ref().is_some_and(|s| s.edge_count() == 1)));
    }
}
