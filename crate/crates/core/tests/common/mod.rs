#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use petgraph::graph::UnGraph;
use rand::seq::SliceRandom;
use rand::Rng;

use treepack::graph::{Graph, Mode, VertexId};
use treepack::named;

/// Random simple graph with the given degree sequence by stub pairing,
/// restarting on loops or repeated pairs. Gives up after `tries` restarts.
pub fn from_degrees<R: Rng>(rng: &mut R, degrees: &[usize], tries: usize) -> Option<Graph> {
    let n = degrees.len();
    if degrees.iter().sum::<usize>() % 2 == 1 {
        return None;
    }
    'attempt: for _ in 0..tries {
        let mut stubs: Vec<usize> = degrees
            .iter()
            .enumerate()
            .flat_map(|(i, &d)| std::iter::repeat_n(i, d))
            .collect();
        stubs.shuffle(rng);
        let mut g = Graph::with_vertices(Mode::Simple, n);
        while let Some(u) = stubs.pop() {
            // pick a partner that keeps the graph simple
            let options: Vec<usize> = (0..stubs.len())
                .filter(|&j| {
                    let w = stubs[j];
                    w != u && !g.has_edge(VertexId(u as u32 + 1), VertexId(w as u32 + 1))
                })
                .collect();
            let Some(&j) = options.choose(rng) else {
                continue 'attempt;
            };
            let w = stubs.swap_remove(j);
            g.add_edge(VertexId(u as u32 + 1), VertexId(w as u32 + 1)).unwrap();
        }
        return Some(g);
    }
    None
}

/// Random connected graph on `n` vertices with degrees in `[lo, hi]`; each
/// vertex independently gets degree `lo` with probability `p_low`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, lo: usize, hi: usize, p_low: f64) -> Graph {
    loop {
        let mut degrees: Vec<usize> = (0..n)
            .map(|_| if rng.gen_bool(p_low) { lo } else { rng.gen_range(lo..=hi) })
            .collect();
        if degrees.iter().sum::<usize>() % 2 == 1 {
            let i = rng.gen_range(0..n);
            degrees[i] = if degrees[i] < hi { degrees[i] + 1 } else { degrees[i] - 1 };
        }
        if degrees.iter().any(|&d| d < lo || d > hi) {
            continue;
        }
        if let Some(g) = from_degrees(rng, &degrees, 50) {
            if g.is_connected() {
                return g;
            }
        }
    }
}

/// Random 5-vertex graph with one marked vertex of degree 2 (returned
/// first) and all degrees in {2, 3}.
pub fn five_vertex_side<R: Rng>(rng: &mut R) -> Graph {
    let shapes: [&[(u32, u32)]; 5] = [
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)],
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (2, 4)],
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (2, 5)],
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (2, 4), (3, 5)],
        &[(1, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
    ];
    Graph::from_edges(5, shapes.choose(rng).unwrap())
}

/// Copies `side` into `g` with fresh ids and returns the image of vertex 1.
pub fn graft(g: &mut Graph, side: &Graph) -> VertexId {
    let map: BTreeMap<VertexId, VertexId> = side.vertices().map(|v| (v, g.add_vertex())).collect();
    for (u, w) in side.edges() {
        g.add_edge(map[&u], map[&w]).unwrap();
    }
    map[&VertexId(1)]
}

/// Graphs built to contain 5-leaves: a small random core in which some
/// degree-2 vertices get a 5-vertex side hung on them, or a centre vertex
/// with two hung sides and a triangle.
pub fn five_leaf_graph<R: Rng>(rng: &mut R) -> Graph {
    if rng.gen_bool(0.35) {
        let mut g = Graph::with_vertices(Mode::Simple, 1);
        for _ in 0..2 {
            let side = five_vertex_side(rng);
            let x = graft(&mut g, &side);
            g.add_edge(VertexId(1), x).unwrap();
        }
        let t = named::attach_cycle(&mut g, 3);
        g.add_edge(VertexId(1), t[0]).unwrap();
        return relabel(rng, &g);
    }
    loop {
        let n = rng.gen_range(3..=5);
        let mut g = if n == 3 || rng.gen_bool(0.3) {
            named::cycle(n)
        } else {
            random_connected(rng, n, 2, 3, 0.6)
        };
        let low: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) == 2).collect();
        if low.is_empty() {
            continue;
        }
        let hubs = rng.gen_range(1..=low.len().min(2));
        for &b in low.choose_multiple(rng, hubs) {
            // optionally a thread between the hub and the side
            let side = five_vertex_side(rng);
            let x = graft(&mut g, &side);
            if rng.gen_bool(0.7) {
                g.add_edge(b, x).unwrap();
            } else {
                named::attach_path(&mut g, b, x, 2);
            }
        }
        if g.vertex_count() <= 16 {
            return relabel(rng, &g);
        }
    }
}

/// The same graph with ids `1..=n` assigned in random order.
pub fn relabel<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut ids: Vec<u32> = (1..=g.vertex_count() as u32).collect();
    ids.shuffle(rng);
    let map: BTreeMap<VertexId, VertexId> = g.vertices().zip(ids.into_iter().map(VertexId)).collect();
    let mut h = Graph::with_vertices(Mode::Simple, g.vertex_count());
    for (u, w) in g.edges() {
        h.add_edge(map[&u], map[&w]).unwrap();
    }
    h
}

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let index: BTreeMap<VertexId, u32> = g.vertices().zip(0..).collect();
    UnGraph::from_edges(g.edges().iter().map(|(u, w)| (index[u], index[w])))
}

/// Degree of each vertex with the sorted degrees of its neighbours.
type Invariant = Vec<(usize, Vec<usize>)>;

/// Keeps one representative per isomorphism class.
#[derive(Default)]
pub struct IsoPool {
    buckets: HashMap<Invariant, Vec<UnGraph<(), ()>>>,
    pub graphs: Vec<Graph>,
}

impl IsoPool {
    fn invariant(g: &Graph) -> Invariant {
        let mut inv: Vec<(usize, Vec<usize>)> = g
            .vertices()
            .map(|v| {
                let mut ns: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
                ns.sort();
                (g.degree(v), ns)
            })
            .collect();
        inv.sort();
        inv
    }

    /// Adds `g` unless an isomorphic graph is already present.
    pub fn insert(&mut self, g: Graph) -> bool {
        let pg = to_petgraph(&g);
        let bucket = self.buckets.entry(Self::invariant(&g)).or_default();
        if bucket.iter().any(|h| petgraph::algo::is_isomorphic(h, &pg)) {
            return false;
        }
        bucket.push(pg);
        self.graphs.push(g);
        true
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }
}

/// Every connected graph on `n` vertices with degrees in {2, 3}, one per
/// isomorphism class. Graphs of maximum degree 3 are grown one edge at a
/// time from the empty graph, deduplicating every level; each graph with `m`
/// edges has a predecessor with `m - 1`, so no class is missed.
pub fn all_subcubic(n: usize) -> Vec<Graph> {
    let mut level = IsoPool::default();
    level.insert(Graph::with_vertices(Mode::Simple, n));
    let mut out = Vec::new();
    while level.len() > 0 {
        let mut next = IsoPool::default();
        for g in &level.graphs {
            if g.min_degree() >= 2 && g.is_connected() {
                out.push(g.clone());
            }
            let open: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) < 3).collect();
            for (i, &u) in open.iter().enumerate() {
                for &w in &open[i + 1..] {
                    if !g.has_edge(u, w) {
                        let mut h = g.clone();
                        h.add_edge(u, w).unwrap();
                        next.insert(h);
                    }
                }
            }
        }
        level = next;
    }
    out
}

/// Non-isomorphic connected graphs with degrees in {2, 3} and between `lo`
/// and `hi` vertices, sampled until `target` are found or `attempts` run out.
pub fn subcubic_corpus<R: Rng>(rng: &mut R, lo: usize, hi: usize, target: usize, attempts: usize) -> Vec<Graph> {
    let mut pool = IsoPool::default();
    for _ in 0..attempts {
        if pool.len() >= target {
            break;
        }
        let n = rng.gen_range(lo..=hi);
        let p_low = rng.gen_range(0.0..1.0);
        pool.insert(random_connected(rng, n, 2, 3, p_low));
    }
    pool.graphs
}

/// Random connected graph with maximum degree `s`: a random tree, each new
/// vertex hung on an earlier one with spare degree, plus up to `extra`
/// random edges.
pub fn random_sparse<R: Rng>(rng: &mut R, n: usize, s: usize, extra: usize) -> Graph {
    let mut g = Graph::with_vertices(Mode::Simple, 1);
    for _ in 1..n {
        let open: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) < s).collect();
        let &u = open.choose(rng).expect("a tree with maximum degree s >= 2 has a leaf");
        let w = g.add_vertex();
        g.add_edge(u, w).unwrap();
    }
    for _ in 0..extra {
        let open: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) < s).collect();
        if let (Some(&u), Some(&w)) = (open.choose(rng), open.choose(rng)) {
            if u != w && !g.has_edge(u, w) {
                g.add_edge(u, w).unwrap();
            }
        }
    }
    g
}
