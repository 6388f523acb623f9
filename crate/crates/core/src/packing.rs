//! Packings of vertex-disjoint k-edge trees, their verification, and the
//! certificates stating which lower bound a packing meets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::graph::{edge, Edge, Graph, VertexId};

/// Non-negative rational kept in unreduced form, so `16/4` prints as `16/4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        Ratio { num, den }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// `value >= self`, compared exactly.
    pub fn is_met_by(&self, value: u64) -> bool {
        value as u128 * self.den as u128 >= self.num as u128
    }

    pub fn ceil(&self) -> u64 {
        self.num.div_ceil(self.den)
    }

    pub fn is_integer(&self) -> bool {
        self.num.is_multiple_of(self.den)
    }

    /// Same value, compared by cross multiplication.
    pub fn same_value(&self, other: &Ratio) -> bool {
        self.num as u128 * other.den as u128 == other.num as u128 * self.den as u128
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// One packed tree, stored as its sorted edge list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    edges: Vec<Edge>,
}

impl Tree {
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut edges: Vec<Edge> = edges.into_iter().map(|(u, w)| edge(u, w)).collect();
        edges.sort();
        Tree { edges }
    }

    /// Tree of the path visiting `vs` in order.
    pub fn path(vs: &[VertexId]) -> Self {
        Tree::new(vs.windows(2).map(|w| (w[0], w[1])))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> BTreeSet<VertexId> {
        self.edges.iter().flat_map(|&(u, w)| [u, w]).collect()
    }

    pub fn contains_edge(&self, u: VertexId, w: VertexId) -> bool {
        self.edges.binary_search(&edge(u, w)).is_ok()
    }

    /// Vertex sequence when the tree is a path, with the smaller end first.
    pub fn as_path(&self) -> Option<Vec<VertexId>> {
        let mut deg: BTreeMap<VertexId, usize> = BTreeMap::new();
        for &(u, w) in &self.edges {
            *deg.entry(u).or_default() += 1;
            *deg.entry(w).or_default() += 1;
        }
        if deg.values().any(|&d| d > 2) || self.edges.is_empty() {
            return None;
        }
        let start = *deg.iter().find(|(_, &d)| d == 1)?.0;
        let mut seq = vec![start];
        let mut prev: Option<VertexId> = None;
        let mut cur = start;
        loop {
            let next = self.edges.iter().find_map(|&(u, w)| {
                let other = if u == cur { w } else if w == cur { u } else { return None };
                (Some(other) != prev).then_some(other)
            });
            match next {
                Some(n) if seq.len() <= self.edges.len() => {
                    seq.push(n);
                    prev = Some(cur);
                    cur = n;
                }
                _ => break,
            }
        }
        (seq.len() == self.edges.len() + 1).then_some(seq)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    /// Edge count shared by every tree.
    pub k: usize,
    pub trees: Vec<Tree>,
}

impl Packing {
    pub fn new(k: usize) -> Self {
        Packing {
            k,
            trees: Vec::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.trees.len()
    }

    pub fn push(&mut self, tree: Tree) {
        self.trees.push(tree);
    }

    pub fn extend(&mut self, other: Packing) {
        debug_assert_eq!(self.k, other.k);
        self.trees.extend(other.trees);
    }

    pub fn covered(&self) -> BTreeSet<VertexId> {
        self.trees.iter().flat_map(Tree::vertices).collect()
    }

    /// Trees in a canonical order, for comparisons and output.
    pub fn sorted(mut self) -> Self {
        self.trees.sort();
        self
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PackingError {
    #[error("vertex {0} is shared by two trees")]
    SharedVertex(VertexId),
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(VertexId, VertexId),
    #[error("component {0} is not a tree")]
    NotATree(usize),
    #[error("component {index} has {found} edges, expected {expected}")]
    WrongEdgeCount {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
}

/// Checks vertex-disjointness, tree shape, edge count and edge membership.
pub fn verify_packing(g: &Graph, p: &Packing) -> Result<(), PackingError> {
    let mut used: BTreeSet<VertexId> = BTreeSet::new();
    for (index, tree) in p.trees.iter().enumerate() {
        if tree.edge_count() != p.k {
            return Err(PackingError::WrongEdgeCount {
                index,
                expected: p.k,
                found: tree.edge_count(),
            });
        }
        for &(u, w) in tree.edges() {
            if u == w || !g.has_edge(u, w) {
                return Err(PackingError::MissingEdge(u, w));
            }
        }
        let vs = tree.vertices();
        // connected with |E| = |V| - 1 and no repeated edge
        let distinct: BTreeSet<&Edge> = tree.edges().iter().collect();
        if vs.len() != tree.edge_count() + 1
            || distinct.len() != tree.edge_count()
            || !edges_connected(tree.edges(), &vs)
        {
            return Err(PackingError::NotATree(index));
        }
        for v in vs {
            if !used.insert(v) {
                return Err(PackingError::SharedVertex(v));
            }
        }
    }
    Ok(())
}

fn edges_connected(edges: &[Edge], vs: &BTreeSet<VertexId>) -> bool {
    let Some(&start) = vs.iter().next() else {
        return true;
    };
    let mut seen: BTreeSet<VertexId> = [start].into_iter().collect();
    let mut changed = true;
    while changed {
        changed = false;
        for &(u, w) in edges {
            if seen.contains(&u) != seen.contains(&w) {
                seen.insert(u);
                seen.insert(w);
                changed = true;
            }
        }
    }
    seen.len() == vs.len()
}

/// Which guaranteed lower bound a packing is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// 2-edge paths in subcubic graphs without 5-vertex components: `v/4`.
    PathsSubcubic,
    /// 2-edge paths with degrees in `[2, s]`, `s >= 4`: `v/(s+1)`.
    PathsBoundedDegree { s: usize },
    /// k-edge trees with degrees in `[1, s]`: `(v - k)/(sk - k + 1)`,
    /// summed over components with more than `k` vertices.
    Trees { s: usize, k: usize },
}

impl BoundKind {
    pub fn for_paths(s: usize) -> Self {
        if s == 3 {
            BoundKind::PathsSubcubic
        } else {
            BoundKind::PathsBoundedDegree { s }
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            BoundKind::PathsSubcubic => "paths-subcubic",
            BoundKind::PathsBoundedDegree { .. } => "paths-bounded-degree",
            BoundKind::Trees { .. } => "trees",
        }
    }

    pub fn s(&self) -> usize {
        match *self {
            BoundKind::PathsSubcubic => 3,
            BoundKind::PathsBoundedDegree { s } | BoundKind::Trees { s, .. } => s,
        }
    }

    pub fn k(&self) -> usize {
        match *self {
            BoundKind::Trees { k, .. } => k,
            _ => 2,
        }
    }

    /// The required packing size for `g`, as an exact rational.
    pub fn required(&self, g: &Graph) -> Ratio {
        let v = g.vertex_count() as u64;
        match *self {
            BoundKind::PathsSubcubic => Ratio::new(v, 4),
            BoundKind::PathsBoundedDegree { s } => Ratio::new(v, s as u64 + 1),
            BoundKind::Trees { s, k } => {
                let (s, k) = (s as u64, k as u64);
                let excess: u64 = g
                    .component_sets()
                    .iter()
                    .map(|c| c.len() as u64)
                    .filter(|&n| n > k)
                    .map(|n| n - k)
                    .sum();
                Ratio::new(excess, s * k - k + 1)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub bound: BoundKind,
    pub vertex_count: usize,
    pub required: Ratio,
    pub achieved: usize,
    pub satisfied: bool,
}

impl Certificate {
    pub fn new(bound: BoundKind, g: &Graph, achieved: usize) -> Self {
        let required = bound.required(g);
        Certificate {
            bound,
            vertex_count: g.vertex_count(),
            satisfied: required.is_met_by(achieved as u64),
            required,
            achieved,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem={}", self.bound.tag())?;
        writeln!(f, "s={}", self.bound.s())?;
        writeln!(f, "k={}", self.bound.k())?;
        writeln!(f, "v={}", self.vertex_count)?;
        writeln!(f, "bound={}", self.required)?;
        writeln!(f, "achieved={}", self.achieved)?;
        write!(f, "satisfied={}", self.satisfied)
    }
}

/// Verifies `p` against `g` and evaluates the bound.
pub fn certify(g: &Graph, p: &Packing, bound: BoundKind) -> Result<Certificate, PackingError> {
    if p.k != bound.k() {
        return Err(PackingError::WrongEdgeCount {
            index: 0,
            expected: bound.k(),
            found: p.k,
        });
    }
    verify_packing(g, p)?;
    Ok(Certificate::new(bound, g, p.size()))
}

/// One tree per line as consecutive id pairs: `1 2 2 3` is the path 1-2-3.
/// `ids` maps graph vertices to the ids written; identity when `None`.
pub fn write_packing(p: &Packing, ids: Option<&BTreeMap<VertexId, u32>>) -> String {
    let mut out = String::new();
    for tree in &p.trees {
        let fields: Vec<String> = ordered_edges(tree)
            .iter()
            .flat_map(|&(u, w)| [u, w])
            .map(|v| ids.map_or(v.0, |m| m[&v]).to_string())
            .collect();
        out.push_str(&fields.join(" "));
        out.push('\n');
    }
    out
}

/// Path trees are written in walk order, others in sorted edge order.
fn ordered_edges(tree: &Tree) -> Vec<Edge> {
    match tree.as_path() {
        Some(seq) => seq.windows(2).map(|w| (w[0], w[1])).collect(),
        None => tree.edges().to_vec(),
    }
}

pub fn parse_packing(text: &str, k: usize) -> Result<Packing, PackingError> {
    let mut p = Packing::new(k);
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let raw = raw.trim();
        if raw.is_empty() || raw.starts_with('c') {
            continue;
        }
        let ids: Result<Vec<u32>, _> = raw.split_ascii_whitespace().map(str::parse).collect();
        let ids = ids.map_err(|_| PackingError::Malformed {
            line,
            msg: "expected vertex ids".into(),
        })?;
        if ids.len() % 2 != 0 {
            return Err(PackingError::Malformed {
                line,
                msg: "odd number of ids".into(),
            });
        }
        p.push(Tree::new(
            ids.chunks(2).map(|c| (VertexId(c[0]), VertexId(c[1]))),
        ));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn ratio_comparisons_are_exact() {
        let r = Ratio::new(6, 5);
        assert!(!r.is_met_by(1));
        assert!(r.is_met_by(2));
        assert_eq!(r.ceil(), 2);
        assert!(Ratio::new(16, 4).is_met_by(4));
        assert_eq!(Ratio::new(16, 4).to_string(), "16/4");
    }

    #[test]
    fn verify_rejects_overlap_and_bad_edges() {
        let g = named::cycle(6);
        let mut p = Packing::new(2);
        p.push(Tree::path(&[v(1), v(2), v(3)]));
        p.push(Tree::path(&[v(3), v(4), v(5)]));
        assert_eq!(verify_packing(&g, &p), Err(PackingError::SharedVertex(v(3))));
        let mut q = Packing::new(2);
        q.push(Tree::path(&[v(1), v(3), v(4)]));
        assert_eq!(verify_packing(&g, &q), Err(PackingError::MissingEdge(v(1), v(3))));
        let mut r = Packing::new(2);
        r.push(Tree::path(&[v(1), v(2)]));
        assert!(matches!(verify_packing(&g, &r), Err(PackingError::WrongEdgeCount { .. })));
    }

    #[test]
    fn certificate_for_six_cycle_with_one_path() {
        let g = named::cycle(6);
        let mut p = Packing::new(2);
        p.push(Tree::path(&[v(1), v(2), v(3)]));
        let c = certify(&g, &p, BoundKind::PathsBoundedDegree { s: 4 }).unwrap();
        assert!(!c.satisfied);
        assert_eq!(c.required, Ratio::new(6, 5));
        assert!(c.to_string().contains("satisfied=false"));
    }

    #[test]
    fn packing_file_roundtrip() {
        let text = "1 2 2 3\n4 5 5 6\n";
        let p = parse_packing(text, 2).unwrap();
        assert_eq!(p.size(), 2);
        assert_eq!(write_packing(&p, None), text);
        assert!(parse_packing("1 2 3\n", 2).is_err());
    }

    #[test]
    fn tree_bound_sums_over_large_components() {
        let g = named::path(7).union(&named::path(2).relabeled(
            &[(v(1), v(8)), (v(2), v(9))].into_iter().collect(),
        ));
        let b = BoundKind::Trees { s: 3, k: 2 }.required(&g);
        assert_eq!(b, Ratio::new(5, 5));
    }
}
