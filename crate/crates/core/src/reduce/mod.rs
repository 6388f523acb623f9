//! Packing-preserving graph reductions.
//!
//! Each reduction deletes a local piece of the graph, possibly adding a new
//! vertex or edge, and records enough to turn a 2-path packing of the reduced
//! graph into one of the original with a guaranteed number of extra paths.

mod minimal;
mod rules;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::class::{ClassReport, ClassSpec};
use crate::graph::{edge, Edge, Graph, VertexId};
use crate::oracle::{oracle_lambda_k, OracleError, OracleLimits};
use crate::packing::{Packing, PackingError, Tree};
use crate::traverse::{linear_order, pack_sequence};

pub use minimal::{minimality_witness, minimalize};
pub use rules::{
    candidates, reduce_double_five_leaf, reduce_five_leaf, reduce_leaf_detach, reduce_star,
    reduce_thread_contract, reduce_thread_removal, Candidate, ReduceConfig,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ReductionKind {
    ThreadRemoval,
    ThreadContract,
    LeafDetach,
    FiveLeaf,
    Star,
    DoubleFiveLeaf,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 6] = [
        ReductionKind::ThreadRemoval,
        ReductionKind::ThreadContract,
        ReductionKind::LeafDetach,
        ReductionKind::FiveLeaf,
        ReductionKind::Star,
        ReductionKind::DoubleFiveLeaf,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            ReductionKind::ThreadRemoval => "R1-thread-removal",
            ReductionKind::ThreadContract => "R2-thread-contract",
            ReductionKind::LeafDetach => "R3-leaf-detach",
            ReductionKind::FiveLeaf => "R4-five-leaf",
            ReductionKind::Star => "R5-star",
            ReductionKind::DoubleFiveLeaf => "R6-double-five-leaf",
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// How a reduced-graph path that touches an added vertex or edge is mapped
/// back into the original graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rewrite {
    /// The path with this center and these two ends becomes `to`.
    Whole {
        center: VertexId,
        ends: [VertexId; 2],
        to: [VertexId; 3],
    },
    /// A path centered at `center` with end `drop` gets `sub` as that end.
    Endpoint {
        center: VertexId,
        drop: VertexId,
        sub: VertexId,
    },
}

impl Rewrite {
    pub fn whole(path: [VertexId; 3], to: [VertexId; 3]) -> Self {
        let mut ends = [path[0], path[2]];
        ends.sort();
        Rewrite::Whole {
            center: path[1],
            ends,
            to,
        }
    }

    fn apply(&self, center: VertexId, ends: [VertexId; 2]) -> Option<[VertexId; 3]> {
        match *self {
            Rewrite::Whole {
                center: c,
                ends: e,
                to,
            } => (c == center && e == ends).then_some(to),
            Rewrite::Endpoint {
                center: c,
                drop,
                sub,
            } => {
                if c != center {
                    return None;
                }
                if ends[0] == drop {
                    Some([sub, center, ends[1]])
                } else if ends[1] == drop {
                    Some([ends[0], center, sub])
                } else {
                    None
                }
            }
        }
    }
}

/// One applied reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub kind: ReductionKind,
    /// Case within the reduction, e.g. `a2.1`; `-` when there is only one.
    pub case: &'static str,
    pub removed: BTreeSet<VertexId>,
    pub added_vertices: Vec<VertexId>,
    pub added_edges: Vec<Edge>,
    /// Named vertices of the construction, for traces and tests.
    pub anchors: Vec<(&'static str, VertexId)>,
    /// Extra paths the lift adds on top of the reduced packing.
    pub gain: usize,
    pub rewrites: Vec<Rewrite>,
    /// Original graph induced on the removed vertices and everything within
    /// distance two of them.
    pub local: Graph,
    /// Packing of the removed part fixed when the reduction was applied.
    pub stored: Option<Packing>,
    pub pre_vertices: usize,
    pub post_vertices: usize,
}

impl ReductionStep {
    /// Replays the rewrite on `g`, which must be the step's original graph or
    /// a graph containing it as a component.
    pub fn apply_to(&self, g: &mut Graph) -> Result<(), crate::graph::GraphError> {
        g.remove_vertices(self.removed.iter())?;
        for &v in &self.added_vertices {
            g.insert_vertex(v)?;
        }
        for &(u, w) in &self.added_edges {
            g.add_edge(u, w)?;
        }
        Ok(())
    }

    pub fn anchor(&self, name: &str) -> Option<VertexId> {
        self.anchors.iter().find(|(n, _)| *n == name).map(|&(_, v)| v)
    }
}

fn id_list<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let added = self
            .added_vertices
            .iter()
            .map(ToString::to_string)
            .chain(self.added_edges.iter().map(|(u, w)| format!("{u}-{w}")));
        write!(
            f,
            "{} {} removed=[{}] added=[{}] gain={}",
            self.kind,
            self.case,
            id_list(&self.removed),
            id_list(added),
            self.gain
        )
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReduceError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("reduced graph is out of class: {0}")]
    ReducedOutOfClass(ClassReport),
    #[error("input graph is out of class: {0}")]
    NotInClass(ClassReport),
    #[error("edge {0}-{1} could still be deleted after minimalization")]
    NotMinimal(VertexId, VertexId),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiftError {
    #[error("reduced packing is not a 2-path packing")]
    WrongK,
    #[error("reduced packing uses removed vertex {0}")]
    ForeignVertex(VertexId),
    #[error("no rewrite covers the path {0:?}")]
    Unliftable(Vec<VertexId>),
    #[error("rewritten path {0:?} is not in the original graph")]
    BadRewrite(Vec<VertexId>),
    #[error("lift produced {achieved} paths, at least {required} required")]
    Shortfall { achieved: usize, required: usize },
    #[error("lifted packing is invalid: {0}")]
    Invalid(PackingError),
}

fn center_and_ends(tree: &Tree) -> Option<(VertexId, [VertexId; 2])> {
    let seq = tree.as_path()?;
    if seq.len() != 3 {
        return None;
    }
    let mut ends = [seq[0], seq[2]];
    ends.sort();
    Some((seq[1], ends))
}

/// Turns a packing of the reduced graph into one of the original graph.
///
/// Paths avoiding the added vertices and edges are kept. The others are
/// mapped by the step's rewrites. The removed vertices, together with any
/// vertices a rewrite let go, are then packed directly.
pub fn lift_packing(step: &ReductionStep, reduced: &Packing) -> Result<Packing, LiftError> {
    if reduced.k != 2 {
        return Err(LiftError::WrongK);
    }
    let added_v: BTreeSet<VertexId> = step.added_vertices.iter().copied().collect();
    let added_e: BTreeSet<Edge> = step.added_edges.iter().map(|&(u, w)| edge(u, w)).collect();
    let mut out = Packing::new(2);
    let mut freed: BTreeSet<VertexId> = BTreeSet::new();
    for tree in &reduced.trees {
        let vs = tree.vertices();
        if let Some(&v) = vs.iter().find(|v| step.removed.contains(v)) {
            return Err(LiftError::ForeignVertex(v));
        }
        let touches = vs.iter().any(|v| added_v.contains(v))
            || tree.edges().iter().any(|e| added_e.contains(e));
        if !touches {
            out.push(tree.clone());
            continue;
        }
        let (center, ends) =
            center_and_ends(tree).ok_or_else(|| LiftError::Unliftable(vs.iter().copied().collect()))?;
        let to = step
            .rewrites
            .iter()
            .find(|r| matches!(r, Rewrite::Whole { .. }) && r.apply(center, ends).is_some())
            .or_else(|| step.rewrites.iter().find(|r| r.apply(center, ends).is_some()))
            .and_then(|r| r.apply(center, ends))
            .ok_or_else(|| LiftError::Unliftable(vec![ends[0], center, ends[1]]))?;
        if !(step.local.has_edge(to[0], to[1]) && step.local.has_edge(to[1], to[2])) {
            return Err(LiftError::BadRewrite(to.to_vec()));
        }
        let new = Tree::path(&to);
        let keep = new.vertices();
        freed.extend(vs.difference(&keep).filter(|v| !added_v.contains(v)));
        out.push(new);
    }
    let used = out.covered();
    let region: BTreeSet<VertexId> = step
        .removed
        .iter()
        .chain(freed.iter())
        .copied()
        .filter(|v| !used.contains(v) && step.local.contains(*v))
        .collect();
    let local_packing = match &step.stored {
        Some(stored) if stored.covered().is_subset(&region) => stored.clone(),
        _ => pack_region(&step.local.induced(&region)),
    };
    out.extend(local_packing);
    let required = reduced.size() + step.gain;
    if out.size() < required {
        return Err(LiftError::Shortfall {
            achieved: out.size(),
            required,
        });
    }
    Ok(out)
}

/// Best-effort 2-path packing of a small region: consecutive triples on
/// paths and cycles, the exact oracle otherwise.
pub fn pack_region(g: &Graph) -> Packing {
    let mut p = Packing::new(2);
    for comp in g.components() {
        if comp.vertex_count() < 3 {
            continue;
        }
        if let Some(seq) = linear_order(&comp) {
            p.extend(pack_sequence(&seq, 2));
            continue;
        }
        let limits = OracleLimits {
            max_vertices: 24,
            max_candidates: 4096,
        };
        if let Ok((_, w)) = oracle_lambda_k(&comp, 2, &limits) {
            p.extend(w);
        } else if let Some(seq) = crate::traverse::hamiltonian_path(&comp, 100_000) {
            p.extend(pack_sequence(&seq, 2));
        }
    }
    p
}

/// `size(reduced) >= v(post)/d` implies `size(lifted) >= v(pre)/d`, with `d`
/// the bound's denominator.
pub fn bound_transported(step: &ReductionStep, reduced: usize, lifted: usize, denominator: usize) -> bool {
    reduced * denominator < step.post_vertices || lifted * denominator >= step.pre_vertices
}

/// What happened to the graph, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    Minimalize { deleted: Vec<Edge> },
    Reduce(Box<ReductionStep>),
    /// A component packed directly; `method` names the packer.
    Base {
        vertices: BTreeSet<VertexId>,
        method: &'static str,
        paths: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReductionTrace {
    pub events: Vec<TraceEvent>,
}

impl ReductionTrace {
    pub fn steps(&self) -> impl Iterator<Item = &ReductionStep> {
        self.events.iter().filter_map(|e| match e {
            TraceEvent::Reduce(s) => Some(s.as_ref()),
            _ => None,
        })
    }

    /// Applies edge deletions and reductions to `initial`. The result is the
    /// disjoint union of the components that were packed directly.
    pub fn replay(&self, initial: &Graph) -> Result<Graph, crate::graph::GraphError> {
        let mut g = initial.clone();
        for event in &self.events {
            match event {
                TraceEvent::Minimalize { deleted } => {
                    for &(u, w) in deleted {
                        g.remove_edge(u, w)?;
                    }
                }
                TraceEvent::Reduce(step) => step.apply_to(&mut g)?,
                TraceEvent::Base { .. } => {}
            }
        }
        Ok(g)
    }

    /// Vertices of the directly packed components.
    pub fn base_vertices(&self) -> BTreeSet<VertexId> {
        self.events
            .iter()
            .filter_map(|e| match e {
                TraceEvent::Base { vertices, .. } => Some(vertices.iter().copied()),
                _ => None,
            })
            .flatten()
            .collect()
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for event in &self.events {
            match event {
                TraceEvent::Minimalize { deleted } => {
                    let es = deleted.iter().map(|(u, w)| format!("{u}-{w}"));
                    writeln!(f, "minimalize deleted=[{}]", id_list(es))?;
                }
                TraceEvent::Reduce(step) => writeln!(f, "{step}")?,
                TraceEvent::Base {
                    vertices,
                    method,
                    paths,
                } => writeln!(f, "base {method} vertices=[{}] paths={paths}", id_list(vertices))?,
            }
        }
        Ok(())
    }
}

/// The class the reductions preserve for maximum degree `s`.
pub fn class_for(s: usize) -> ClassSpec {
    ClassSpec::for_paths(s)
}
