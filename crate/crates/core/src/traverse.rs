//! Packings read off a single traversal: a Hamiltonian path cut into
//! consecutive `k+1`-vertex pieces gives `floor(v/(k+1))` disjoint paths.

use std::collections::BTreeSet;

use crate::graph::{Graph, VertexId};
use crate::packing::{Packing, Tree};

/// Cuts `seq` into consecutive `k`-edge paths, dropping the remainder.
pub fn pack_sequence(seq: &[VertexId], k: usize) -> Packing {
    let mut p = Packing::new(k);
    for chunk in seq.chunks_exact(k + 1) {
        p.push(Tree::path(chunk));
    }
    p
}

/// Vertex order of a connected graph with maximum degree 2 (a path or a
/// cycle), starting at an end or at the minimum id.
pub fn linear_order(g: &Graph) -> Option<Vec<VertexId>> {
    let start = g
        .vertices()
        .find(|&v| g.degree(v) <= 1)
        .or_else(|| g.min_vertex())?;
    if g.max_degree() > 2 {
        return None;
    }
    let mut seq = vec![start];
    let mut prev: Option<VertexId> = None;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| Some(w) != prev && w != start);
        match next {
            Some(w) if !seq.contains(&w) => {
                seq.push(w);
                prev = Some(cur);
                cur = w;
            }
            _ => break,
        }
    }
    (seq.len() == g.vertex_count()).then_some(seq)
}

/// Depth-first search for a Hamiltonian path, giving up after `budget`
/// extension steps. Degree-1 vertices, then low degrees, are tried as starts.
pub fn hamiltonian_path(g: &Graph, budget: usize) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(Vec::new());
    }
    if !g.is_connected() {
        return None;
    }
    if let Some(seq) = linear_order(g) {
        return Some(seq);
    }
    let ones = g.vertices().filter(|&v| g.degree(v) == 1).count();
    if ones > 2 {
        return None;
    }
    let mut starts: Vec<VertexId> = g.vertices().collect();
    starts.sort_by_key(|&v| (g.degree(v), v));
    if ones > 0 {
        starts.retain(|&v| g.degree(v) == 1);
    }
    let mut steps = 0usize;
    for s in starts {
        let mut seq = vec![s];
        let mut on: BTreeSet<VertexId> = [s].into_iter().collect();
        if extend(g, &mut seq, &mut on, &mut steps, budget) {
            return Some(seq);
        }
        if steps >= budget {
            return None;
        }
    }
    None
}

fn extend(
    g: &Graph,
    seq: &mut Vec<VertexId>,
    on: &mut BTreeSet<VertexId>,
    steps: &mut usize,
    budget: usize,
) -> bool {
    if seq.len() == g.vertex_count() {
        return true;
    }
    let last = *seq.last().unwrap();
    // fewest onward options first
    let mut next: Vec<VertexId> = g
        .neighbors(last)
        .iter()
        .copied()
        .filter(|w| !on.contains(w))
        .collect();
    next.sort_by_key(|&w| {
        let free = g.neighbors(w).iter().filter(|x| !on.contains(x)).count();
        (free, w)
    });
    next.dedup();
    for w in next {
        *steps += 1;
        if *steps >= budget {
            return false;
        }
        seq.push(w);
        on.insert(w);
        if extend(g, seq, on, steps, budget) {
            return true;
        }
        seq.pop();
        on.remove(&w);
    }
    false
}
