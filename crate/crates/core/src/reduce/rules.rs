use std::collections::{BTreeMap, BTreeSet};

use crate::class::class_membership;
use crate::graph::{edge, Edge, Graph, VertexId};
use crate::oracle::{oracle_lambda_k, OracleLimits};
use crate::packing::Packing;
use crate::structure::{find_leaves, find_threads, threads_at, Thread, ThreadKind};
use crate::traverse::{hamiltonian_path, pack_sequence};

use super::{class_for, ReduceError, ReductionKind, ReductionStep, Rewrite};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReduceConfig {
    /// Maximum degree of the class.
    pub s: usize,
    /// Largest side the exact oracle may certify.
    pub exact_threshold: usize,
    /// Step budget for Hamiltonian path searches.
    pub traversal_budget: usize,
}

impl ReduceConfig {
    pub fn new(s: usize) -> Self {
        ReduceConfig {
            s,
            exact_threshold: 12,
            traversal_budget: 50_000,
        }
    }
}

fn violated(msg: impl Into<String>) -> ReduceError {
    ReduceError::PreconditionViolated(msg.into())
}

struct Draft {
    kind: ReductionKind,
    case: &'static str,
    removed: BTreeSet<VertexId>,
    added_vertices: Vec<VertexId>,
    added_edges: Vec<Edge>,
    anchors: Vec<(&'static str, VertexId)>,
    gain: usize,
    rewrites: Vec<Rewrite>,
    stored: Option<Packing>,
}

impl Draft {
    fn new(kind: ReductionKind, case: &'static str) -> Self {
        Draft {
            kind,
            case,
            removed: BTreeSet::new(),
            added_vertices: Vec::new(),
            added_edges: Vec::new(),
            anchors: Vec::new(),
            gain: 0,
            rewrites: Vec::new(),
            stored: None,
        }
    }

    fn finish(self, g: &Graph, cfg: &ReduceConfig) -> Result<(Graph, ReductionStep), ReduceError> {
        let mut near = self.removed.clone();
        for _ in 0..2 {
            let ring: Vec<VertexId> = near
                .iter()
                .flat_map(|&v| g.neighbors(v).iter().copied())
                .collect();
            near.extend(ring);
        }
        near.extend(self.anchors.iter().map(|&(_, v)| v).filter(|&v| g.contains(v)));
        let step = ReductionStep {
            kind: self.kind,
            case: self.case,
            removed: self.removed,
            added_vertices: self.added_vertices,
            added_edges: self.added_edges.into_iter().map(|(u, w)| edge(u, w)).collect(),
            anchors: self.anchors,
            gain: self.gain,
            rewrites: self.rewrites,
            local: g.induced(&near),
            stored: self.stored,
            pre_vertices: g.vertex_count(),
            post_vertices: 0,
        };
        let mut post = g.clone();
        step.apply_to(&mut post)
            .map_err(|e| violated(format!("rewrite does not apply: {e}")))?;
        let report = class_membership(&post, &class_for(cfg.s));
        if !report.is_member() {
            return Err(ReduceError::ReducedOutOfClass(report));
        }
        let step = ReductionStep {
            post_vertices: post.vertex_count(),
            ..step
        };
        Ok((post, step))
    }
}

fn check_thread(g: &Graph, t: &Thread) -> Result<(), ReduceError> {
    let ok_interior = t.interior().iter().all(|&v| g.contains(v) && g.degree(v) == 2);
    let ok_edges = t.edges().iter().all(|&(u, w)| g.has_edge(u, w));
    if ok_interior && ok_edges && g.contains(t.start()) {
        Ok(())
    } else {
        Err(violated("not a thread of the graph"))
    }
}

/// Deletes the interior of a long thread.
pub fn reduce_thread_removal(
    g: &Graph,
    thread: &Thread,
    cfg: &ReduceConfig,
) -> Result<(Graph, ReductionStep), ReduceError> {
    check_thread(g, thread)?;
    let inner = thread.interior();
    let m = inner.len();
    let case = if cfg.s >= 4 {
        if thread.edge_count() < 4 {
            return Err(violated("thread needs at least 4 edges"));
        }
        "a1"
    } else {
        if m < 3 || m % 3 == 2 {
            return Err(violated("thread interior must have 3k or 3k+1 vertices"));
        }
        "a2"
    };
    let mut d = Draft::new(ReductionKind::ThreadRemoval, case);
    d.removed = inner.iter().copied().collect();
    d.anchors = vec![("x", thread.start()), ("y", thread.end())];
    d.gain = m / 3;
    d.stored = Some(pack_sequence(inner, 2));
    d.finish(g, cfg)
}

/// Replaces the interior of a path-thread with `3k+2` inner vertices by a
/// single new vertex `z`.
pub fn reduce_thread_contract(
    g: &Graph,
    thread: &Thread,
    cfg: &ReduceConfig,
) -> Result<(Graph, ReductionStep), ReduceError> {
    check_thread(g, thread)?;
    if cfg.s != 3 {
        return Err(violated("thread contraction is for maximum degree 3"));
    }
    if thread.kind != ThreadKind::Path || thread.start() == thread.end() {
        return Err(violated("thread contraction needs a path-thread with distinct ends"));
    }
    let inner = thread.interior();
    let m = inner.len();
    if m < 5 || m % 3 != 2 {
        return Err(violated("thread interior must have 3k+2 vertices, k >= 1"));
    }
    let (x, y) = (thread.start(), thread.end());
    let z = VertexId(g.next_id());
    let (s1, t1, s2) = (inner[0], inner[1], inner[m - 1]);
    let mut d = Draft::new(ReductionKind::ThreadContract, "-");
    d.removed = inner.iter().copied().collect();
    d.added_vertices = vec![z];
    d.added_edges = vec![(x, z), (z, y)];
    d.anchors = vec![("x", x), ("y", y), ("z", z), ("s", s1), ("t", t1), ("s'", s2)];
    d.gain = (m - 2) / 3;
    d.rewrites = vec![
        Rewrite::whole([x, z, y], [x, s1, t1]),
        Rewrite::Endpoint {
            center: x,
            drop: z,
            sub: s1,
        },
        Rewrite::Endpoint {
            center: y,
            drop: z,
            sub: s2,
        },
    ];
    d.finish(g, cfg)
}

/// A packing of `g` with `floor(v/3)` paths, if one can be found.
fn full_packing(g: &Graph, cfg: &ReduceConfig) -> Result<Option<Packing>, ReduceError> {
    let target = g.vertex_count() / 3;
    if let Some(seq) = hamiltonian_path(g, cfg.traversal_budget) {
        return Ok(Some(pack_sequence(&seq, 2)));
    }
    if g.vertex_count() <= cfg.exact_threshold {
        let (best, w) = oracle_lambda_k(g, 2, &OracleLimits::default())?;
        return Ok((best == target).then_some(w));
    }
    Ok(None)
}

/// Cuts the bridge `a-b` and deletes the side `A` containing `a`.
pub fn reduce_leaf_detach(
    g: &Graph,
    bridge: (VertexId, VertexId),
    cfg: &ReduceConfig,
) -> Result<(Graph, ReductionStep), ReduceError> {
    let (a, b) = bridge;
    if !g.has_edge(a, b) {
        return Err(violated("bridge edge is not in the graph"));
    }
    let mut cut = g.clone();
    cut.remove_edge(a, b).expect("edge present");
    let side = cut.component_of(a);
    if side.contains(&b) {
        return Err(violated("edge is not a bridge"));
    }
    let n = side.len();
    if n < 3 {
        return Err(violated("detached side needs at least 3 vertices"));
    }
    if cfg.s == 3 && n == 5 {
        return Err(violated("a 5-vertex side cannot be detached when s = 3"));
    }
    let packing = full_packing(&g.induced(&side), cfg)?
        .ok_or_else(|| violated("cannot certify floor(v/3) paths on the detached side"))?;
    let mut d = Draft::new(ReductionKind::LeafDetach, "-");
    d.removed = side;
    d.anchors = vec![("a", a), ("b", b)];
    d.gain = n / 3;
    d.stored = Some(packing);
    d.finish(g, cfg)
}

/// Threads at `v`, excluding the one that starts along `skip`.
fn other_threads(g: &Graph, v: VertexId, skip: VertexId) -> Vec<Thread> {
    threads_at(g, v)
        .into_iter()
        .filter(|t| t.vertices[1] != skip && !(t.is_cycle() && *t.vertices.last().unwrap() == skip))
        .collect()
}

/// Vertex set of the side of `a` once edge `a-b` is cut, when it is a
/// separate side.
fn side_of(g: &Graph, a: VertexId, b: VertexId) -> Option<BTreeSet<VertexId>> {
    let mut cut = g.clone();
    cut.remove_edge(a, b).ok()?;
    let side = cut.component_of(a);
    (!side.contains(&b)).then_some(side)
}

/// Removes a 5-leaf hanging by the single edge `a-b` together with the start
/// of the two threads leaving `b`, reconnecting them by a new edge.
pub fn reduce_five_leaf(
    g: &Graph,
    stem: (VertexId, VertexId),
    cfg: &ReduceConfig,
) -> Result<(Graph, ReductionStep), ReduceError> {
    let (a, b) = stem;
    if cfg.s != 3 {
        return Err(violated("five-leaf reduction is for maximum degree 3"));
    }
    if !g.has_edge(a, b) || g.degree(a) != 3 || g.degree(b) != 3 {
        return Err(violated("stem must be an edge between two degree-3 vertices"));
    }
    let leaf = side_of(g, a, b).ok_or_else(|| violated("stem is not a bridge"))?;
    if leaf.len() != 5 {
        return Err(violated("leaf side must have 5 vertices"));
    }
    let mut closure = leaf.clone();
    closure.insert(b);
    let limits = OracleLimits::default();
    if oracle_lambda_k(&g.induced(&closure), 2, &limits)?.0 != 2 {
        return Err(violated("leaf with its stem must hold two paths"));
    }
    let mut ts = other_threads(g, b, a);
    if ts.len() != 2 || ts.iter().any(|t| t.is_cycle() || !(2..=3).contains(&t.edge_count())) {
        return Err(violated("b needs two path-threads of 2 or 3 edges"));
    }
    if ts[0].edge_count() == 2 && ts[1].edge_count() == 3 {
        ts.swap(0, 1);
    }
    let (t1, t2) = (&ts[0], &ts[1]);
    let (x1, x2) = (t1.end(), t2.end());
    let (z1, z2) = (t1.vertices[1], t2.vertices[1]);
    let mut d = Draft::new(ReductionKind::FiveLeaf, "a1.1");
    d.anchors = vec![("a", a), ("b", b), ("x1", x1), ("x2", x2), ("z1", z1), ("z2", z2)];
    d.gain = 2;
    let mut removed = closure;
    match (t1.edge_count(), t2.edge_count(), x1 == x2) {
        (2, 2, false) => {
            removed.extend([z1, z2]);
        }
        (2, 2, true) => {
            d.case = "a1.2";
            d.added_edges = vec![(z1, z2)];
            let x = x1;
            d.rewrites = vec![
                Rewrite::whole([x, z1, z2], [z1, x, z2]),
                Rewrite::whole([x, z2, z1], [z1, x, z2]),
            ];
        }
        (3, 2, false) => {
            d.case = "a2.1";
            let y1 = t1.vertices[2];
            d.anchors.push(("y1", y1));
            removed.extend([z1, z2]);
            d.added_edges = vec![(y1, x2)];
            d.rewrites = vec![
                Rewrite::Endpoint {
                    center: y1,
                    drop: x2,
                    sub: z1,
                },
                Rewrite::Endpoint {
                    center: x2,
                    drop: y1,
                    sub: z2,
                },
            ];
        }
        (3, 2, true) => {
            d.case = "a2.2";
            let y1 = t1.vertices[2];
            let x = x1;
            d.anchors.push(("y1", y1));
            removed.insert(z1);
            d.added_edges = vec![(y1, z2)];
            d.rewrites = vec![
                Rewrite::whole([x, y1, z2], [y1, x, z2]),
                Rewrite::whole([x, z2, y1], [y1, x, z2]),
            ];
        }
        _ => {
            d.case = "a3";
            let (y1, y2) = (t1.vertices[2], t2.vertices[2]);
            d.anchors.extend([("y1", y1), ("y2", y2)]);
            removed.extend([z1, z2]);
            d.added_edges = vec![(y1, y2)];
            d.rewrites = vec![
                Rewrite::Endpoint {
                    center: y1,
                    drop: y2,
                    sub: z1,
                },
                Rewrite::Endpoint {
                    center: y2,
                    drop: y1,
                    sub: z2,
                },
            ];
        }
    }
    d.removed = removed;
    d.finish(g, cfg)
}

struct StarThread {
    z: VertexId,
    y: Option<VertexId>,
    x: VertexId,
}

/// Reduces the star of short threads around `a`.
pub fn reduce_star(
    g: &Graph,
    a: VertexId,
    cfg: &ReduceConfig,
) -> Result<(Graph, ReductionStep), ReduceError> {
    let deg = g.degree(a);
    if deg < 3 || deg > cfg.s {
        return Err(violated("star center needs degree in [3, s]"));
    }
    let mut s_a: BTreeSet<VertexId> = [a].into_iter().collect();
    let mut two: Vec<StarThread> = Vec::new();
    let mut three: Vec<StarThread> = Vec::new();
    let mut triangles = 0;
    for t in threads_at(g, a) {
        match (t.kind, t.edge_count()) {
            (ThreadKind::Cycle, 3) => triangles += 1,
            (ThreadKind::Path, 2) => two.push(StarThread {
                z: t.vertices[1],
                y: None,
                x: t.end(),
            }),
            (ThreadKind::Path, 3) => three.push(StarThread {
                z: t.vertices[1],
                y: Some(t.vertices[2]),
                x: t.end(),
            }),
            _ => return Err(violated("every thread at the center must be a triangle or have 2 or 3 edges")),
        }
        s_a.extend(t.interior().iter().copied());
    }
    if two.is_empty() && three.is_empty() {
        return Err(violated("all threads at the center are triangles"));
    }
    if three.len() % 2 == 1 && two.is_empty() {
        return Err(violated("an odd number of 3-edge threads needs a 2-edge thread"));
    }
    let _ = triangles;

    let x3: BTreeSet<VertexId> = three.iter().map(|t| t.x).collect();
    let mut t_count: BTreeMap<VertexId, usize> = BTreeMap::new();
    for t in &two {
        *t_count.entry(t.x).or_default() += 1;
    }
    // x' in X2 \ X3 whose only other edge starts the thread L_x
    let mut tails: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for (&x, &tx) in &t_count {
        if x3.contains(&x) || tx < 2 || g.degree(x) != tx + 1 {
            continue;
        }
        let zs: BTreeSet<VertexId> = two.iter().filter(|t| t.x == x).map(|t| t.z).collect();
        let rest: Vec<Thread> = threads_at(g, x)
            .into_iter()
            .filter(|t| !zs.contains(&t.vertices[1]))
            .collect();
        let [l] = rest.as_slice() else {
            return Err(violated("expected one further thread at a shared endpoint"));
        };
        if l.is_cycle() || l.edge_count() > 3 {
            return Err(violated("the further thread at a shared endpoint must have at most 3 edges"));
        }
        tails.insert(x, l.vertices[..l.vertices.len() - 1].to_vec());
    }

    let mut d = Draft::new(ReductionKind::Star, "a1");
    d.anchors.push(("a", a));
    let mut keep: BTreeSet<VertexId> = BTreeSet::new();
    let paired: &[StarThread];
    let mut skip_tail: Option<VertexId> = None;
    if three.len().is_multiple_of(2) {
        paired = &three;
        keep.extend(three.iter().filter_map(|t| t.y));
    } else {
        let (r, j) = (&three[0], &two[0]);
        let yr = r.y.expect("3-edge thread");
        paired = &three[1..];
        keep.extend(paired.iter().filter_map(|t| t.y));
        keep.insert(j.z);
        skip_tail = Some(j.x);
        d.anchors.extend([("x_r", r.x), ("y_r", yr), ("z_r", r.z), ("x_j", j.x), ("z_j", j.z)]);
        if r.x != j.x {
            d.case = "a2.1";
            d.added_edges.push((r.x, j.z));
            d.rewrites.push(Rewrite::whole([r.x, j.z, j.x], [r.x, yr, r.z]));
            d.rewrites.push(Rewrite::Endpoint {
                center: r.x,
                drop: j.z,
                sub: yr,
            });
        } else {
            d.case = "a2.2";
            keep.insert(yr);
            d.added_edges.push((yr, j.z));
            d.rewrites.push(Rewrite::whole([r.x, yr, j.z], [yr, r.x, j.z]));
            d.rewrites.push(Rewrite::whole([r.x, j.z, yr], [yr, r.x, j.z]));
        }
    }
    for pair in paired.chunks(2) {
        let (p, q) = (&pair[0], &pair[1]);
        let (yp, yq) = (p.y.unwrap(), q.y.unwrap());
        d.added_edges.push((yp, yq));
        d.rewrites.push(Rewrite::Endpoint {
            center: yp,
            drop: yq,
            sub: p.z,
        });
        d.rewrites.push(Rewrite::Endpoint {
            center: yq,
            drop: yp,
            sub: q.z,
        });
    }
    let mut removed: BTreeSet<VertexId> = s_a.difference(&keep).copied().collect();
    for (x, tail) in &tails {
        if Some(*x) == skip_tail {
            continue;
        }
        d.anchors.push(("x'", *x));
        removed.extend(tail.iter().copied());
    }
    // one path per used tail plus one is not always there: a shared endpoint
    // whose further thread has one edge leaves a 4-cycle with a pendant vertex
    let gain = worst_case_region(g, &removed, &d.added_edges, &d.rewrites)
        .ok_or_else(|| violated("star region too large to certify"))?;
    if gain == 0 || gain * (cfg.s + 1) < removed.len() {
        return Err(violated("star region holds too few paths for its vertices"));
    }
    d.removed = removed;
    d.gain = gain;
    d.finish(g, cfg)
}

/// Fewest paths the removed region still holds once the rewrites fired by a
/// lift have taken their substitute vertices, at most one per added edge.
fn worst_case_region(
    g: &Graph,
    removed: &BTreeSet<VertexId>,
    added: &[Edge],
    rewrites: &[Rewrite],
) -> Option<usize> {
    let added: Vec<Edge> = added.iter().map(|&(u, w)| edge(u, w)).collect();
    let mut options: Vec<Vec<BTreeSet<VertexId>>> = vec![vec![BTreeSet::new()]; added.len()];
    for r in rewrites {
        let (touched, takes): (Vec<Edge>, BTreeSet<VertexId>) = match *r {
            Rewrite::Endpoint { center, drop, sub } => (vec![edge(center, drop)], [sub].into_iter().collect()),
            Rewrite::Whole { center, ends, to } => (
                ends.iter().map(|&e| edge(center, e)).collect(),
                to.iter().copied().filter(|v| removed.contains(v)).collect(),
            ),
        };
        if let Some(i) = added.iter().position(|e| touched.contains(e)) {
            options[i].push(takes);
        }
    }
    let limits = OracleLimits {
        max_vertices: 32,
        max_candidates: 4096,
    };
    let mut worst: Option<usize> = None;
    let mut choice = vec![0usize; options.len()];
    loop {
        let mut region = removed.clone();
        for (i, &c) in choice.iter().enumerate() {
            for v in &options[i][c] {
                region.remove(v);
            }
        }
        let best = oracle_lambda_k(&g.induced(&region), 2, &limits).ok()?.0;
        worst = Some(worst.map_or(best, |w| w.min(best)));
        // next combination
        let mut i = 0;
        while i < choice.len() {
            choice[i] += 1;
            if choice[i] < options[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            return worst;
        }
    }
}

/// The 5-leaf hanging from `x` by its only outside edge `x-a`, if any.
fn five_leaf_at(g: &Graph, x: VertexId, a: VertexId) -> Option<BTreeSet<VertexId>> {
    if g.degree(x) != 3 {
        return None;
    }
    side_of(g, x, a).filter(|s| s.len() == 5)
}

/// At a degree-3 vertex `a` with two 1-edge stems into 5-leaves, removes both
/// leaves except their boundary vertices and joins those by a new edge.
pub fn reduce_double_five_leaf(
    g: &Graph,
    a: VertexId,
    cfg: &ReduceConfig,
) -> Result<(Graph, ReductionStep), ReduceError> {
    if cfg.s != 3 {
        return Err(violated("double five-leaf reduction is for maximum degree 3"));
    }
    if g.degree(a) != 3 {
        return Err(violated("center must have degree 3"));
    }
    let leaves: Vec<(VertexId, BTreeSet<VertexId>)> = g
        .neighbors(a)
        .iter()
        .filter_map(|&x| five_leaf_at(g, x, a).map(|l| (x, l)))
        .collect();
    if leaves.len() < 2 {
        return Err(violated("center needs two 1-edge stems into 5-leaves"));
    }
    let (x1, l1) = &leaves[0];
    let (x2, l2) = &leaves[1];
    let pick = |x: VertexId| {
        *g.neighbors(x)
            .iter()
            .find(|&&n| n != a)
            .expect("boundary vertex has leaf neighbours")
    };
    let (n1, n2) = (pick(*x1), pick(*x2));
    let mut d = Draft::new(ReductionKind::DoubleFiveLeaf, "-");
    d.removed = l1.union(l2).copied().filter(|v| v != x1 && v != x2).collect();
    d.added_edges = vec![(*x1, *x2)];
    d.anchors = vec![("a", a), ("x1", *x1), ("x2", *x2), ("n1", n1), ("n2", n2)];
    d.gain = 2;
    d.rewrites = vec![
        Rewrite::Endpoint {
            center: *x1,
            drop: *x2,
            sub: n1,
        },
        Rewrite::Endpoint {
            center: *x2,
            drop: *x1,
            sub: n2,
        },
    ];
    d.finish(g, cfg)
}

/// A place where a reduction might apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Candidate {
    ThreadRemoval(Thread),
    ThreadContract(Thread),
    LeafDetach(VertexId, VertexId),
    DoubleFiveLeaf(VertexId),
    FiveLeaf(VertexId, VertexId),
    Star(VertexId),
}

impl Candidate {
    pub fn kind(&self) -> ReductionKind {
        match self {
            Candidate::ThreadRemoval(_) => ReductionKind::ThreadRemoval,
            Candidate::ThreadContract(_) => ReductionKind::ThreadContract,
            Candidate::LeafDetach(..) => ReductionKind::LeafDetach,
            Candidate::DoubleFiveLeaf(_) => ReductionKind::DoubleFiveLeaf,
            Candidate::FiveLeaf(..) => ReductionKind::FiveLeaf,
            Candidate::Star(_) => ReductionKind::Star,
        }
    }

    pub fn apply(&self, g: &Graph, cfg: &ReduceConfig) -> Result<(Graph, ReductionStep), ReduceError> {
        match self {
            Candidate::ThreadRemoval(t) => reduce_thread_removal(g, t, cfg),
            Candidate::ThreadContract(t) => reduce_thread_contract(g, t, cfg),
            Candidate::LeafDetach(a, b) => reduce_leaf_detach(g, (*a, *b), cfg),
            Candidate::DoubleFiveLeaf(a) => reduce_double_five_leaf(g, *a, cfg),
            Candidate::FiveLeaf(a, b) => reduce_five_leaf(g, (*a, *b), cfg),
            Candidate::Star(a) => reduce_star(g, *a, cfg),
        }
    }
}

/// Places to try, in priority order: thread removal, thread contraction,
/// leaf detachment, double five-leaf, five-leaf, star; anchors ascending.
/// Only cheap structural filters are applied here.
pub fn candidates(g: &Graph, cfg: &ReduceConfig) -> Vec<Candidate> {
    let mut threads = find_threads(g);
    threads.sort_by(|p, q| (p.start(), &p.vertices).cmp(&(q.start(), &q.vertices)));
    let mut out = Vec::new();
    for t in &threads {
        let m = t.interior().len();
        let fits = if cfg.s >= 4 {
            t.edge_count() >= 4
        } else {
            m >= 3 && m % 3 != 2
        };
        if fits && g.degree(t.start()) != 2 {
            out.push(Candidate::ThreadRemoval(t.clone()));
        }
    }
    if cfg.s == 3 {
        for t in &threads {
            let m = t.interior().len();
            if t.kind == ThreadKind::Path && t.start() != t.end() && m >= 5 && m % 3 == 2 {
                out.push(Candidate::ThreadContract(t.clone()));
            }
        }
    }
    let leaves = find_leaves(g, &class_for(cfg.s)).unwrap_or_default();
    for leaf in &leaves {
        if let Some(stem) = &leaf.stem {
            let n = stem.vertices.len();
            if n >= 2 && leaf.vertex_count() + n - 2 >= 3 {
                out.push(Candidate::LeafDetach(stem.vertices[n - 2], stem.end()));
            }
        }
    }
    if cfg.s == 3 {
        for a in g.vertices().filter(|&a| g.degree(a) == 3) {
            out.push(Candidate::DoubleFiveLeaf(a));
        }
        for leaf in leaves.iter().filter(|l| l.is_five_leaf()) {
            if let Some(stem) = leaf.stem.as_ref().filter(|s| s.edge_count() == 1) {
                out.push(Candidate::FiveLeaf(stem.start(), stem.end()));
            }
        }
    }
    for a in g.vertices().filter(|&a| (3..=cfg.s).contains(&g.degree(a))) {
        out.push(Candidate::Star(a));
    }
    out
}
