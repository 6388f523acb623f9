//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines always reach stdout.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use treepack::class::{is_member, ClassSpec};
use treepack::extremal::{gen_subdivision, gen_tsk, gen_y};
use treepack::graph::{Graph, Mode, VertexId};
use treepack::ktree::pack_ktrees;
use treepack::lambda::pack_lambda;
use treepack::named;
use treepack::oracle::{oracle_lambda_k, oracle_tau, OracleLimits};
use treepack::packing::{verify_packing, Packing};
use treepack::reduce::{
    bound_transported, candidates, lift_packing, minimalize, minimality_witness, ReduceConfig,
    ReductionKind,
};

struct Outcome {
    failures: Vec<String>,
    detail: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            failures: Vec::new(),
            detail: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn run(id: u32, title: &str, limit: Duration, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut out = body();
    let elapsed = start.elapsed();
    out.check(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"));
    let pass = out.failures.is_empty();
    println!(
        "{} criterion {id} ({title}): {} [{elapsed:.2?} < {limit:?}]",
        if pass { "PASS" } else { "FAIL" },
        out.detail
    );
    for f in out.failures.iter().take(10) {
        println!("    {f}");
    }
    pass
}

fn limits() -> OracleLimits {
    OracleLimits::default()
}

/// Two vertices, each with a loop, joined by one edge.
fn dumbbell() -> Graph {
    let mut h = Graph::with_vertices(Mode::Multi, 2);
    for (u, w) in [(1, 1), (2, 2), (1, 2)] {
        h.add_edge(VertexId(u), VertexId(w)).unwrap();
    }
    h
}

/// Path on four vertices with loops at both ends and a doubled middle edge.
fn looped_path() -> Graph {
    let mut h = Graph::with_vertices(Mode::Multi, 4);
    for (u, w) in [(1, 1), (1, 2), (2, 3), (2, 3), (3, 4), (4, 4)] {
        h.add_edge(VertexId(u), VertexId(w)).unwrap();
    }
    h
}

fn criterion_1() -> Outcome {
    let mut out = Outcome::new();
    let bases = [
        ("K4", named::to_multi(&named::complete(4))),
        ("K33", named::to_multi(&named::complete_bipartite(3, 3))),
        ("Petersen", named::to_multi(&named::petersen())),
        ("dumbbell", dumbbell()),
        ("looped-path", looped_path()),
    ];
    let mut oracle_checked = 0;
    for (name, h) in bases {
        let (g, expected) = gen_subdivision(&h, 2).unwrap();
        let got = pack_lambda(&g, 3).map(|r| r.packing.size());
        out.check(got == Ok(expected), || format!("{name}: packer {got:?}, expected {expected}"));
        if g.vertex_count() <= 18 {
            oracle_checked += 1;
            let best = oracle_lambda_k(&g, 2, &limits()).map(|r| r.0);
            out.check(best == Ok(expected), || format!("{name}: oracle {best:?}, expected {expected}"));
        }
    }
    out.detail = format!("5 subdivided cubic multigraphs exact, oracle on {oracle_checked}");
    out
}

fn criterion_2() -> Outcome {
    let mut out = Outcome::new();
    for s in [4usize, 5] {
        let (g, expected) = gen_subdivision(&named::complete(s + 1), 2).unwrap();
        let got = pack_lambda(&g, s).map(|r| r.packing.size());
        out.check(got == Ok(expected) && g.vertex_count() == expected * (s + 1), || {
            format!("K{}: packer {got:?}, expected {expected}", s + 1)
        });
    }
    out.detail = "K5 and K6 subdivided exact".into();
    out
}

fn criterion_3() -> Outcome {
    let mut out = Outcome::new();
    let y = gen_y();
    let r = pack_lambda(&y, 3).unwrap();
    out.check(r.certificate.achieved >= 4 && r.certificate.satisfied, || {
        format!("packer achieved {}", r.certificate.achieved)
    });
    let best = oracle_tau(&y, 2, &limits()).map(|r| r.0);
    out.check(best == Ok(4), || format!("oracle {best:?}"));
    out.detail = format!("achieved {}, oracle {:?}", r.certificate.achieved, best);
    out
}

fn criterion_4(corpus: &[Graph]) -> Outcome {
    let mut out = Outcome::new();
    for g in corpus {
        let v = g.vertex_count();
        match pack_lambda(g, 3) {
            Ok(r) => {
                let best = oracle_lambda_k(g, 2, &limits()).unwrap().0;
                let n = r.packing.size();
                out.check(verify_packing(g, &r.packing).is_ok(), || format!("invalid on {:?}", g.edges()));
                out.check(n >= v.div_ceil(4) && n <= best, || {
                    format!("size {n}, ceil(v/4) {}, oracle {best} on {:?}", v.div_ceil(4), g.edges())
                });
            }
            Err(e) => out.failures.push(format!("{e} on {:?}", g.edges())),
        }
    }
    let sizes: BTreeSet<usize> = corpus.iter().map(Graph::vertex_count).collect();
    out.detail = format!("all {} non-isomorphic graphs, v in {sizes:?}", corpus.len());
    out
}

fn criterion_5() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut counts = Vec::new();
    for s in [4usize, 5, 6] {
        let mut done = 0;
        for _ in 0..200 {
            let n = rng.gen_range(10..=60);
            let p_low = rng.gen_range(0.0..0.9);
            let g = common::random_connected(&mut rng, n, 2, s, p_low);
            match pack_lambda(&g, s) {
                Ok(r) => {
                    out.check(r.certificate.satisfied, || format!("s={s}: {} on {:?}", r.certificate, g.edges()));
                    out.check(verify_packing(&g, &r.packing).is_ok(), || format!("s={s}: invalid packing"));
                    done += 1;
                }
                Err(e) => out.failures.push(format!("s={s}, v={n}: {e}")),
            }
        }
        counts.push(done);
    }
    out.detail = format!("{counts:?} graphs for s = 4, 5, 6");
    out
}

fn criterion_6() -> Outcome {
    let mut out = Outcome::new();
    let mut exact = 0;
    for s in [3usize, 4] {
        for k in [2usize, 3] {
            for e in 0..=2 {
                let (g, formula) = gen_tsk(s, k, e).unwrap();
                let (p, cert) = pack_ktrees(&g, k, s).unwrap();
                out.check(formula.is_met_by(p.size() as u64) && cert.satisfied, || {
                    format!("({s},{k},{e}): {} < {formula}", p.size())
                });
                out.check(verify_packing(&g, &p).is_ok(), || format!("({s},{k},{e}): invalid packing"));
                if g.vertex_count() <= 13 {
                    exact += 1;
                    let best = oracle_tau(&g, k, &limits()).unwrap().0 as u64;
                    out.check(formula.is_integer() && best == formula.ceil(), || {
                        format!("({s},{k},{e}): oracle {best}, formula {formula}")
                    });
                }
            }
        }
    }
    out.detail = format!("12 extremal trees, oracle equality on {exact}");
    out
}

fn criterion_7() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut counts: BTreeMap<ReductionKind, usize> = ReductionKind::ALL.iter().map(|&k| (k, 0)).collect();
    let mut seen: BTreeSet<(Vec<(VertexId, VertexId)>, String)> = BTreeSet::new();
    let target = 60;
    for round in 0..40_000 {
        if counts.values().all(|&c| c >= target) {
            break;
        }
        let n = rng.gen_range(6..=14);
        let p_low = rng.gen_range(0.3..1.0);
        let (g, s) = match round % 4 {
            0 | 1 => (common::random_connected(&mut rng, n, 2, 3, p_low), 3),
            2 => (common::five_leaf_graph(&mut rng), 3),
            _ => (common::random_connected(&mut rng, n, 2, 4, p_low), 4),
        };
        if g.vertex_count() > 14 || !is_member(&g, &ClassSpec::for_paths(s)) {
            continue;
        }
        let cfg = ReduceConfig::new(s);
        let denominator = if s == 3 { 4 } else { s + 1 };
        for cand in candidates(&g, &cfg) {
            if counts[&cand.kind()] >= target {
                continue;
            }
            let Ok((post, step)) = cand.apply(&g, &cfg) else {
                continue;
            };
            if !seen.insert((g.edges(), format!("{cand:?}"))) {
                continue;
            }
            *counts.get_mut(&cand.kind()).unwrap() += 1;
            let (best, witness) = oracle_lambda_k(&post, 2, &limits()).unwrap();
            match lift_packing(&step, &witness) {
                Ok(lifted) => {
                    out.check(verify_packing(&g, &lifted).is_ok(), || format!("{step}: invalid lift"));
                    out.check(lifted.size() >= best + step.gain, || {
                        format!("{step}: lifted {} < {best} + {}", lifted.size(), step.gain)
                    });
                    out.check(bound_transported(&step, best, lifted.size(), denominator), || {
                        format!("{step}: bound not transported")
                    });
                }
                Err(e) => out.failures.push(format!("{step}: {e} on {:?}", g.edges())),
            }
            let trivial = lift_packing(&step, &Packing::new(2));
            out.check(trivial.as_ref().is_ok_and(|p| p.size() >= step.gain), || {
                format!("{step}: empty lift {trivial:?}")
            });
        }
    }
    for (kind, &c) in &counts {
        out.check(c >= 50, || format!("{kind}: only {c} eligible instances"));
    }
    let summary: Vec<String> = counts.iter().map(|(k, c)| format!("{}={c}", k.tag())).collect();
    out.detail = format!("instances {}", summary.join(" "));
    out
}

fn criterion_8(corpus: &[Graph]) -> Outcome {
    let mut out = Outcome::new();
    let spec = ClassSpec::subcubic_no_five();
    for g in corpus {
        match minimalize(g, &spec) {
            Ok((f, _)) => out.check(minimality_witness(&f).is_none(), || format!("edge left on {:?}", g.edges())),
            Err(e) => out.failures.push(format!("{e} on {:?}", g.edges())),
        }
    }
    out.detail = format!("{} minimalized graphs", corpus.len());
    out
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut ok = true;
    ok &= run(1, "subdivided cubic tightness", secs(5), criterion_1);
    ok &= run(2, "subdivided complete-graph tightness", secs(5), criterion_2);
    ok &= run(3, "Y graph", secs(10), criterion_3);
    let mut corpus = Vec::new();
    ok &= run(4, "subcubic corpus", secs(300), || {
        corpus = (6..=9).flat_map(common::all_subcubic).collect();
        criterion_4(&corpus)
    });
    ok &= run(5, "random bounded-degree graphs", secs(120), criterion_5);
    ok &= run(6, "extremal tree formula", secs(120), criterion_6);
    ok &= run(7, "reduction lift round-trips", secs(300), criterion_7);
    ok &= run(8, "minimality characterization", secs(60), || criterion_8(&corpus));
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
