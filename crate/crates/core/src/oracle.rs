//! Exact maximum packings on small graphs.
//!
//! Candidates are reduced to vertex sets (any connected `k+1`-set carries a
//! `k`-edge tree), then a memoized search over bitmasks of available vertices
//! branches on the lowest available vertex: leave it uncovered, or cover it
//! with a candidate whose minimum vertex it is.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use thiserror::Error;

use crate::graph::{edge, Edge, Graph, VertexId};
use crate::packing::{Packing, Tree};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vertices: usize,
    /// Cap on distinct candidate vertex sets.
    pub max_candidates: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: 20,
            max_candidates: 512,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {vertices} vertices, oracle limit is {limit}")]
    TooLarge { vertices: usize, limit: usize },
    #[error("{count} candidate subgraphs exceed the oracle limit of {limit}")]
    TooManyCandidates { count: usize, limit: usize },
    #[error("tree size k must be at least 1")]
    ZeroK,
    #[error("the oracle requires a simple graph")]
    NotSimple,
}

fn check_input(g: &Graph, k: usize, limits: &OracleLimits) -> Result<(), OracleError> {
    if k == 0 {
        return Err(OracleError::ZeroK);
    }
    if !g.is_simple_mode() {
        return Err(OracleError::NotSimple);
    }
    let limit = limits.max_vertices.min(64);
    if g.vertex_count() > limit {
        return Err(OracleError::TooLarge {
            vertices: g.vertex_count(),
            limit,
        });
    }
    Ok(())
}

/// All `k`-edge subtrees of `g`, each once, sorted. With `paths_only`, only
/// path-shaped trees.
pub fn enumerate_ktrees(
    g: &Graph,
    k: usize,
    paths_only: bool,
    limits: &OracleLimits,
) -> Result<Vec<Tree>, OracleError> {
    check_input(g, k, limits)?;
    Ok(if paths_only { all_paths(g, k) } else { all_trees(g, k) })
}

fn all_trees(g: &Graph, k: usize) -> Vec<Tree> {
    let mut level: HashSet<Vec<Edge>> = g.edges().into_iter().map(|e| vec![e]).collect();
    for _ in 1..k {
        let mut next: HashSet<Vec<Edge>> = HashSet::new();
        for tree in &level {
            let vs: BTreeSet<VertexId> = tree.iter().flat_map(|&(u, w)| [u, w]).collect();
            for &u in &vs {
                for &w in g.neighbors(u) {
                    if vs.contains(&w) {
                        continue;
                    }
                    let mut grown = tree.clone();
                    grown.push(edge(u, w));
                    grown.sort();
                    next.insert(grown);
                }
            }
        }
        level = next;
    }
    let mut out: Vec<Tree> = level.into_iter().map(Tree::new).collect();
    out.sort();
    out
}

fn all_paths(g: &Graph, k: usize) -> Vec<Tree> {
    fn extend(g: &Graph, k: usize, seq: &mut Vec<VertexId>, out: &mut Vec<Tree>) {
        let last = *seq.last().expect("non-empty");
        if seq.len() == k + 1 {
            if seq[0] < last {
                out.push(Tree::path(seq));
            }
            return;
        }
        for &w in g.neighbors(last) {
            if !seq.contains(&w) {
                seq.push(w);
                extend(g, k, seq, out);
                seq.pop();
            }
        }
    }
    let mut out = Vec::new();
    for v in g.vertices() {
        extend(g, k, &mut vec![v], &mut out);
    }
    out.sort();
    out.dedup();
    out
}

/// Maximum number of disjoint `k`-edge trees, with a witness.
pub fn oracle_tau(g: &Graph, k: usize, limits: &OracleLimits) -> Result<(usize, Packing), OracleError> {
    solve(g, k, false, limits)
}

/// Maximum number of disjoint `k`-edge paths, with a witness.
pub fn oracle_lambda_k(
    g: &Graph,
    k: usize,
    limits: &OracleLimits,
) -> Result<(usize, Packing), OracleError> {
    solve(g, k, true, limits)
}

fn solve(
    g: &Graph,
    k: usize,
    paths_only: bool,
    limits: &OracleLimits,
) -> Result<(usize, Packing), OracleError> {
    check_input(g, k, limits)?;
    let verts: Vec<VertexId> = g.vertices().collect();
    let index: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    // one witness tree per vertex set
    let mut by_mask: BTreeMap<u64, Tree> = BTreeMap::new();
    let trees = if paths_only { all_paths(g, k) } else { connected_set_trees(g, k) };
    for tree in trees {
        let mask = tree.vertices().iter().fold(0u64, |m, v| m | 1 << index[v]);
        by_mask.entry(mask).or_insert(tree);
        if by_mask.len() > limits.max_candidates {
            return Err(OracleError::TooManyCandidates {
                count: by_mask.len(),
                limit: limits.max_candidates,
            });
        }
    }
    let mut by_min: Vec<Vec<u64>> = vec![Vec::new(); verts.len()];
    for &mask in by_mask.keys() {
        by_min[mask.trailing_zeros() as usize].push(mask);
    }

    let mut search = Search {
        by_min: &by_min,
        per_tree: k + 1,
        memo: HashMap::new(),
    };
    let all = if verts.len() == 64 { u64::MAX } else { (1u64 << verts.len()) - 1 };
    let best = search.best(all);

    let mut packing = Packing::new(k);
    let mut avail = all;
    while avail != 0 {
        let here = search.best(avail);
        if here == 0 {
            break;
        }
        let low = avail.trailing_zeros() as usize;
        let skip = avail & !(1 << low);
        if search.best(skip) == here {
            avail = skip;
            continue;
        }
        let chosen = by_min[low]
            .iter()
            .copied()
            .find(|&c| c & avail == c && 1 + search.best(avail & !c) == here)
            .expect("memo is consistent");
        packing.push(by_mask[&chosen].clone());
        avail &= !chosen;
    }
    debug_assert_eq!(packing.size(), best);
    Ok((best, packing))
}

/// One spanning tree for each connected `(k+1)`-vertex set.
fn connected_set_trees(g: &Graph, k: usize) -> Vec<Tree> {
    // grow vertex sets, recording the edge that attached each new vertex
    let mut level: HashMap<BTreeSet<VertexId>, Vec<Edge>> =
        g.vertices().map(|v| ([v].into_iter().collect(), Vec::new())).collect();
    for _ in 0..k {
        let mut next: HashMap<BTreeSet<VertexId>, Vec<Edge>> = HashMap::new();
        for (vs, edges) in &level {
            for &u in vs {
                for &w in g.neighbors(u) {
                    if vs.contains(&w) {
                        continue;
                    }
                    let mut grown = vs.clone();
                    grown.insert(w);
                    next.entry(grown).or_insert_with(|| {
                        let mut e = edges.clone();
                        e.push(edge(u, w));
                        e
                    });
                }
            }
        }
        level = next;
    }
    let mut out: Vec<Tree> = level.into_values().map(Tree::new).collect();
    out.sort();
    out
}

struct Search<'a> {
    by_min: &'a [Vec<u64>],
    per_tree: usize,
    memo: HashMap<u64, usize>,
}

impl Search<'_> {
    fn best(&mut self, avail: u64) -> usize {
        if (avail.count_ones() as usize) < self.per_tree {
            return 0;
        }
        if let Some(&b) = self.memo.get(&avail) {
            return b;
        }
        let ceiling = avail.count_ones() as usize / self.per_tree;
        let low = avail.trailing_zeros() as usize;
        let mut best = self.best(avail & !(1 << low));
        for i in 0..self.by_min[low].len() {
            if best == ceiling {
                break;
            }
            let c = self.by_min[low][i];
            if c & avail == c {
                best = best.max(1 + self.best(avail & !c));
            }
        }
        self.memo.insert(avail, best);
        best
    }
}
