//! 2-path packings meeting `v/4` (subcubic, no 5-vertex components) and
//! `v/(s+1)` (degrees in `[2, s]`, `s >= 4`).
//!
//! Each component is minimalized, then packed directly when it is traversable,
//! small, or a subdivided multigraph; otherwise it is reduced, the reduced
//! graph is packed recursively, and the packing is lifted back.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::class::{class_membership, ClassReport, ClassSpec};
use crate::graph::{Graph, VertexId};
use crate::oracle::{oracle_lambda_k, OracleError, OracleLimits};
use crate::packing::{BoundKind, Certificate, Packing, Tree};
use crate::reduce::{
    candidates, lift_packing, minimalize, ReduceConfig, ReduceError, ReductionTrace, TraceEvent,
};
use crate::structure::{find_threads, Thread, ThreadKind};
use crate::traverse::{hamiltonian_path, pack_sequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaConfig {
    /// Components with at most this many vertices are solved exactly.
    pub exact_threshold: usize,
    /// Components with at most this many vertices of degree 3 or more are
    /// tried for a Hamiltonian path first.
    pub traversable_branch_limit: usize,
    pub traversal_budget: usize,
}

impl Default for LambdaConfig {
    fn default() -> Self {
        LambdaConfig {
            exact_threshold: 12,
            traversable_branch_limit: 6,
            traversal_budget: 50_000,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LambdaError {
    #[error("maximum degree s must be at least 3, got {0}")]
    BadDegreeBound(usize),
    #[error("packers need a simple graph")]
    NotSimple,
    #[error("graph is out of class ({spec}): {report}")]
    OutOfClass { spec: ClassSpec, report: ClassReport },
    #[error("no reduction, base case or fallback applies to a component with {0} vertices")]
    Irreducible(usize),
    #[error(transparent)]
    Base(#[from] BaseError),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BaseError {
    #[error("shape not recognized as traversable")]
    ShapeNotRecognized,
    #[error("graph with {0} vertices exceeds the exact threshold {1}")]
    TooLarge(usize, usize),
    #[error("thread {0:?} does not have {1} edges")]
    WrongThreadLength(Vec<VertexId>, usize),
    #[error("component has no vertex of degree 3 or more")]
    NoBranchVertex,
    #[error("graph is not connected")]
    NotConnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaResult {
    pub packing: Packing,
    pub certificate: Certificate,
    pub trace: ReductionTrace,
}

pub fn pack_lambda(g: &Graph, s: usize) -> Result<LambdaResult, LambdaError> {
    pack_lambda_with(g, s, &LambdaConfig::default())
}

pub fn pack_lambda_with(g: &Graph, s: usize, cfg: &LambdaConfig) -> Result<LambdaResult, LambdaError> {
    if s < 3 {
        return Err(LambdaError::BadDegreeBound(s));
    }
    if !g.is_simple_mode() {
        return Err(LambdaError::NotSimple);
    }
    let spec = ClassSpec::for_paths(s);
    let report = class_membership(g, &spec);
    if !report.is_member() {
        return Err(LambdaError::OutOfClass { spec, report });
    }
    let mut driver = Driver {
        spec,
        cfg: *cfg,
        rcfg: ReduceConfig {
            s,
            exact_threshold: cfg.exact_threshold,
            traversal_budget: cfg.traversal_budget,
        },
        trace: ReductionTrace::default(),
        next_id: g.next_id(),
    };
    let mut packing = Packing::new(2);
    for comp in g.components() {
        packing.extend(driver.solve(comp)?);
    }
    let certificate = Certificate::new(BoundKind::for_paths(s), g, packing.size());
    Ok(LambdaResult {
        packing,
        certificate,
        trace: driver.trace,
    })
}

struct Driver {
    spec: ClassSpec,
    cfg: LambdaConfig,
    rcfg: ReduceConfig,
    trace: ReductionTrace,
    /// Fresh ids are drawn globally so that reduced components never collide.
    next_id: u32,
}

impl Driver {
    fn base(&mut self, g: &Graph, method: &'static str, p: Packing) -> Packing {
        self.trace.events.push(TraceEvent::Base {
            vertices: g.vertex_set(),
            method,
            paths: p.size(),
        });
        p
    }

    fn solve(&mut self, g: Graph) -> Result<Packing, LambdaError> {
        let (f, deleted) = minimalize(&g, &self.spec)?;
        if !deleted.is_empty() {
            self.trace.events.push(TraceEvent::Minimalize { deleted });
        }
        if !f.is_connected() {
            let mut p = Packing::new(2);
            for comp in f.components() {
                p.extend(self.solve(comp)?);
            }
            return Ok(p);
        }
        let mut g = f;
        g.reserve_ids(self.next_id);

        let branch = g.vertices().filter(|&v| g.degree(v) >= 3).count();
        if branch <= self.cfg.traversable_branch_limit {
            if let Ok(p) = pack_traversable(&g, self.cfg.traversal_budget) {
                return Ok(self.base(&g, "traversable", p));
            }
        }
        if g.vertex_count() <= self.cfg.exact_threshold {
            let p = pack_small_exact(&g, self.cfg.exact_threshold)?;
            return Ok(self.base(&g, "exact", p));
        }
        if let Ok(p) = pack_subdivided(&g, 2) {
            return Ok(self.base(&g, "subdivided", p));
        }
        for cand in candidates(&g, &self.rcfg) {
            let Ok((post, step)) = cand.apply(&g, &self.rcfg) else {
                continue;
            };
            self.next_id = self.next_id.max(post.next_id());
            let mark = self.trace.events.len();
            self.trace.events.push(TraceEvent::Reduce(Box::new(step.clone())));
            let mut reduced = Packing::new(2);
            let mut failed = false;
            for comp in post.components() {
                match self.solve(comp) {
                    Ok(p) => reduced.extend(p),
                    Err(_) => {
                        failed = true;
                        break;
                    }
                }
            }
            if !failed {
                if let Ok(p) = lift_packing(&step, &reduced) {
                    return Ok(p);
                }
            }
            // this reduction did not pan out; try the next one
            self.trace.events.truncate(mark);
        }
        let limits = OracleLimits::default();
        if g.vertex_count() <= limits.max_vertices {
            let (_, p) = oracle_lambda_k(&g, 2, &limits)?;
            return Ok(self.base(&g, "exact-fallback", p));
        }
        if let Some(seq) = hamiltonian_path(&g, self.cfg.traversal_budget * 20) {
            return Ok(self.base(&g, "traversable-fallback", pack_sequence(&seq, 2)));
        }
        Err(LambdaError::Irreducible(g.vertex_count()))
    }
}

/// `floor(v/3)` paths along a Hamiltonian path, when one is found within the
/// step budget.
pub fn pack_traversable(g: &Graph, budget: usize) -> Result<Packing, BaseError> {
    let seq = hamiltonian_path(g, budget).ok_or(BaseError::ShapeNotRecognized)?;
    Ok(pack_sequence(&seq, 2))
}

/// Maximum 2-path packing of a graph with at most `threshold` vertices.
pub fn pack_small_exact(g: &Graph, threshold: usize) -> Result<Packing, LambdaError> {
    if g.vertex_count() > threshold {
        return Err(BaseError::TooLarge(g.vertex_count(), threshold).into());
    }
    let limits = OracleLimits {
        max_vertices: threshold.max(1),
        ..OracleLimits::default()
    };
    Ok(oracle_lambda_k(g, 2, &limits)?.1)
}

/// Packs `v(H)` disjoint `k`-edge paths into a connected graph obtained from
/// a multigraph `H` with minimum degree 3 by subdividing every edge with `k`
/// vertices.
///
/// `H` is read back from the threads. A search tree of `H` plus one further
/// edge, oriented towards the tree's root and out along the extra edge, gives
/// every branch vertex its own outgoing thread; each branch vertex takes the
/// first `k` edges of that thread.
pub fn pack_subdivided(g: &Graph, k: usize) -> Result<Packing, BaseError> {
    if !g.is_connected() {
        return Err(BaseError::NotConnected);
    }
    let branch: BTreeSet<VertexId> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    let Some(&root) = branch.iter().next() else {
        return Err(BaseError::NoBranchVertex);
    };
    if g.vertices().any(|v| g.degree(v) < 2) {
        return Err(BaseError::WrongThreadLength(Vec::new(), k + 1));
    }
    let threads = find_threads(g);
    for t in &threads {
        if t.edge_count() != k + 1 {
            return Err(BaseError::WrongThreadLength(t.vertices.clone(), k + 1));
        }
    }
    // incidence lists of H: (thread index, other end)
    let mut incident: BTreeMap<VertexId, Vec<(usize, VertexId)>> = BTreeMap::new();
    for (i, t) in threads.iter().enumerate() {
        incident.entry(t.start()).or_default().push((i, t.end()));
        if t.start() != t.end() {
            incident.entry(t.end()).or_default().push((i, t.start()));
        }
    }

    let mut in_tree: BTreeSet<usize> = BTreeSet::new();
    let mut seen: BTreeSet<VertexId> = [root].into_iter().collect();
    let mut queue: VecDeque<VertexId> = [root].into_iter().collect();
    while let Some(v) = queue.pop_front() {
        for &(i, w) in &incident[&v] {
            if seen.insert(w) {
                in_tree.insert(i);
                queue.push_back(w);
            }
        }
    }
    let extra = (0..threads.len())
        .filter(|i| !in_tree.contains(i))
        .min_by_key(|&i| {
            let t = &threads[i];
            let (a, b) = (t.start().min(t.end()), t.start().max(t.end()));
            (a, b, t.vertices.clone())
        })
        .expect("minimum degree 3 leaves edges outside any spanning tree");
    let x = threads[extra].start().min(threads[extra].end());

    // out-edge of each vertex: towards x along the tree, and x along `extra`
    let mut out: BTreeMap<VertexId, usize> = [(x, extra)].into_iter().collect();
    let mut queue: VecDeque<VertexId> = [x].into_iter().collect();
    while let Some(v) = queue.pop_front() {
        for &(i, w) in &incident[&v] {
            if in_tree.contains(&i) && !out.contains_key(&w) {
                out.insert(w, i);
                queue.push_back(w);
            }
        }
    }
    let distinct: BTreeSet<usize> = out.values().copied().collect();
    assert!(
        out.len() == branch.len() && distinct.len() == out.len(),
        "out-edge map must be a bijection onto tree edges plus the extra edge"
    );

    let mut p = Packing::new(k);
    for (&z, &i) in &out {
        let t = oriented_from(&threads[i], z);
        p.push(Tree::path(&t.vertices[..=k]));
    }
    Ok(p)
}

fn oriented_from(t: &Thread, z: VertexId) -> Thread {
    if t.start() == z || t.kind == ThreadKind::Cycle {
        t.clone()
    } else {
        t.reversed()
    }
}
