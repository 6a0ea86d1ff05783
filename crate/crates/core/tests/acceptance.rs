//! One PASS/FAIL line per acceptance criterion.

use std::io::Write;
use std::time::{Duration, Instant};

use pon_core::bench::run_bench;
use pon_core::embed::{classify, embed_block};
use pon_core::generators::{
    gen_composite, gen_random_2connected, gen_tightness, CompositeMode, GenParams,
};
use pon_core::graph::path_indegrees;
use pon_core::oracle::{bound_chain, decide_pon, exact_pon, DEFAULT_BUDGET};
use pon_core::orient::{
    orient_block, orient_bridgeless, orient_treefree, run_fan, FanVariant, Oriented, PathTemplate,
};
use pon_core::{Graph, OrientError, Orientation};

/// Largest allowed time(10n) / time(n).
const BENCH_RATIO: f64 = 15.0;
const TIGHTNESS_LIMIT: Duration = Duration::from_secs(300);

type Outcome = Result<String, String>;

#[derive(Default)]
struct Tally {
    runs: usize,
    failures: Vec<String>,
    invariant_violations: usize,
}

impl Tally {
    fn record(&mut self, what: &str, r: Result<(Orientation, u32), OrientError>) {
        self.runs += 1;
        match r {
            Ok((o, bound)) => {
                if !o.is_proper() || o.max_indegree() > bound {
                    self.failures.push(format!(
                        "{what}: proper {} max {}",
                        o.is_proper(),
                        o.max_indegree()
                    ));
                }
            }
            Err(e) => {
                if matches!(e, OrientError::InvariantViolation(_)) {
                    self.invariant_violations += 1;
                }
                self.failures.push(format!("{what}: {e}"));
            }
        }
    }

    fn outcome(&self) -> Outcome {
        match self.failures.first() {
            None => Ok(format!("{} instances", self.runs)),
            Some(f) => Err(format!(
                "{} of {} failed, first {f}",
                self.failures.len(),
                self.runs
            )),
        }
    }
}

/// Brute-force clique number; only for small graphs.
fn clique_number(g: &Graph) -> u32 {
    let n = g.vertex_count();
    assert!(n <= 20);
    let mut adj = vec![0u32; n];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s & (1 << v) == 0 || s & !(1 << v) & !adj[v] == 0))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0)
}

/// Checks the oracle result against an independent clique and degree bound.
fn oracle_run(g: &Graph, chain_failures: &mut Vec<String>) -> u32 {
    let r = exact_pon(g, DEFAULT_BUDGET).expect("within budget");
    let lo = clique_number(g).saturating_sub(1);
    let hi = g.max_degree() as u32;
    if !(lo <= r.pon && r.pon <= hi) || bound_chain(g) != (lo, hi) {
        chain_failures.push(format!(
            "n={} m={} pon={}",
            g.vertex_count(),
            g.edge_count(),
            r.pon
        ));
    }
    if !r.witness.is_proper() || r.witness.max_indegree() != r.pon {
        chain_failures.push(format!("bad witness n={}", g.vertex_count()));
    }
    r.pon
}

fn random_block(i: usize) -> Graph {
    let n = 4 + (i * 37) % 497;
    let bias = if i % 2 == 0 { 0.0 } else { 0.7 };
    gen_random_2connected(&GenParams::new(i as u64, n).with_fan_bias(bias))
}

fn orient_with_block(g: &Graph) -> Result<(Orientation, u32), OrientError> {
    let emb = embed_block(g).map_err(|e| OrientError::ClassMismatch(e.to_string()))?;
    orient_block(g, &emb).map(|o| (o, 3))
}

fn within_four(r: Result<Oriented, OrientError>) -> Result<(Orientation, u32), OrientError> {
    r.map(|o| (o.orientation, 4))
}

fn tightness(chain: &mut Vec<String>) -> Outcome {
    let g = gen_tightness();
    let start = Instant::now();
    let pon = oracle_run(&g, chain);
    let two = decide_pon(&g, 2, DEFAULT_BUDGET)
        .expect("within budget")
        .feasible;
    let took = start.elapsed();
    let detail = format!(
        "pon {pon}, feasible at 2: {two}, {:.1}s",
        took.as_secs_f64()
    );
    if pon == 3 && !two && took < TIGHTNESS_LIMIT {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn oracle_cross_check(chain: &mut Vec<String>) -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    let mut seed = 0u64;
    let mut instances: Vec<Graph> = (4..=18).map(Graph::cycle).collect();
    while instances.len() < 200 {
        let n = 4 + (seed % 11) as usize;
        let g = gen_random_2connected(&GenParams::new(seed, n).with_fan_bias(0.5));
        if g.edge_count() <= 18 {
            instances.push(g);
        }
        seed += 1;
    }
    for g in &instances {
        assert!(classify(g).is_triangle_free);
        let exact = oracle_run(g, chain);
        let ours = orient_with_block(g).map(|(o, _)| o.max_indegree());
        checked += 1;
        match ours {
            Ok(m) if exact <= m && exact <= 3 => {}
            other => bad.push(format!("m={} exact {exact} ours {other:?}", g.edge_count())),
        }
    }
    match bad.first() {
        None => Ok(format!("{checked} instances")),
        Some(b) => Err(format!("{} violations, first {b}", bad.len())),
    }
}

fn templates() -> Outcome {
    let mut cases = 0;
    for t in PathTemplate::ALL {
        for len in 1..=50 {
            let Some(seq) = t.sequence(len) else {
                if t.admits(len) {
                    return Err(format!("{t:?} admits {len} but has no sequence"));
                }
                continue;
            };
            cases += 1;
            let arcs = t.arcs(len).map_err(|e| format!("{t:?} len {len}: {e}"))?;
            let got = path_indegrees(&arcs);
            let ends = t.endpoint_contribution();
            if seq.len() != len + 1
                || got != seq
                || seq.windows(2).any(|w| w[0] == w[1])
                || (seq[0], seq[len]) != ends
                || seq.iter().sum::<u32>() as usize != len
            {
                return Err(format!("{t:?} len {len}: {seq:?}"));
            }
        }
    }
    Ok(format!("{cases} template lengths"))
}

const GOLDEN: &[(FanVariant, usize, &str)] = &[
    (FanVariant::Normal, 0, "4>0 4>5 6>5 1>6"),
    (FanVariant::Normal, 1, "4>0 4>5 1>5 6>5 6>7 8>7 1>8"),
    (
        FanVariant::Normal,
        2,
        "4>0 4>5 1>5 6>5 6>7 1>7 8>7 8>9 10>9 1>10",
    ),
    (
        FanVariant::Normal,
        3,
        "4>0 4>5 1>5 6>5 6>7 1>7 8>7 8>9 1>9 10>9 10>11 12>11 1>12",
    ),
    (FanVariant::Added, 0, "4>0 5>4 5>6 1>6"),
    (FanVariant::Added, 1, "4>0 4>5 1>5 6>5 7>6 7>8 1>8"),
    (
        FanVariant::Added,
        2,
        "4>0 4>5 1>5 6>5 6>7 1>7 8>7 9>8 9>10 1>10",
    ),
    (
        FanVariant::Added,
        3,
        "4>0 4>5 1>5 6>5 6>7 1>7 8>7 8>9 1>9 10>9 11>10 11>12 1>12",
    ),
];

fn fans() -> Outcome {
    let fail = |what: String| Err(what);
    for k in 0..=8 {
        let r = run_fan(k, FanVariant::Normal, None).map_err(|e| e.to_string())?;
        let c = r.c[0];
        if (r.after[r.partner], r.after[r.hub], r.after[c]) != (3, 2, 1) {
            return fail(format!("normal k={k}: {:?}", r.after));
        }
        for k2 in [None, Some(0), Some(2)] {
            let r = run_fan(k, FanVariant::Added, k2).map_err(|e| e.to_string())?;
            let c = r.c[0];
            let want_c = if k2.is_some() { 3 } else { 2 };
            if r.after[r.partner] != 3 || r.after[r.hub] != r.before[r.hub] || r.after[c] != want_c
            {
                return fail(format!("added k={k} follow-on {k2:?}: {:?}", r.after));
            }
            // without a follow-on, c still ties the hub until it reaches 3
            if k2.is_some() && r.fan_arcs.iter().any(|&(t, h)| r.after[t] == r.after[h]) {
                return fail(format!("added k={k}: improper"));
            }
        }
    }
    for &(variant, k, want) in GOLDEN {
        let got = run_fan(k, variant, None)
            .map_err(|e| e.to_string())?
            .pattern();
        if got != want {
            return fail(format!("{variant:?} k={k}: {got}"));
        }
    }
    Ok("k 0..=8, both variants, golden patterns stable".into())
}

fn bench() -> Outcome {
    let sizes = [1_000, 10_000, 100_000, 1_000_000];
    let rows = run_bench(&sizes, 5).map_err(|e| e.to_string())?;
    let ms: Vec<f64> = rows.iter().map(|r| r.mean.as_secs_f64() * 1e3).collect();
    let ratios: Vec<f64> = ms.windows(2).map(|w| w[1] / w[0]).collect();
    let detail = format!(
        "mean ms {:?}, ratios {:?}",
        ms.iter()
            .map(|x| (x * 100.0).round() / 100.0)
            .collect::<Vec<_>>(),
        ratios
            .iter()
            .map(|x| (x * 10.0).round() / 10.0)
            .collect::<Vec<_>>()
    );
    if ratios.iter().all(|&r| r <= BENCH_RATIO) {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn sanity(chain: &[String]) -> Outcome {
    let mut chain = chain.to_vec();
    let k2 = Graph::new(2, [(0, 1)]).unwrap();
    let got = (
        oracle_run(&Graph::cycle(5), &mut chain),
        oracle_run(&k2, &mut chain),
        oracle_run(&Graph::cycle(4), &mut chain),
    );
    let detail = format!("C5, K2, C4 = {got:?}");
    match chain.first() {
        Some(c) if got == (2, 1, 2) => Err(format!("{detail}; bound chain broken: {c}")),
        _ if got == (2, 1, 2) => Ok(format!("{detail}; bound chain held on every oracle run")),
        _ => Err(detail),
    }
}

#[test]
fn acceptance() {
    let mut chain = Vec::new();
    let mut results: Vec<(&str, Outcome)> = Vec::new();

    results.push(("1 tightness", tightness(&mut chain)));

    let mut blocks = Tally::default();
    for i in 0..1000 {
        let g = random_block(i);
        blocks.record(&format!("instance {i}"), orient_with_block(&g));
    }
    results.push(("2 random 2-connected", blocks.outcome()));

    results.push(("3 oracle cross-check", oracle_cross_check(&mut chain)));

    let mut composites = Tally::default();
    for i in 0..500 {
        let blocks_n = 1 + i % 9;
        let p = GenParams::new(i as u64, 8 + 20 * blocks_n)
            .with_blocks(blocks_n)
            .with_fan_bias(if i % 2 == 0 { 0.0 } else { 0.6 });
        let g = gen_composite(&p, CompositeMode::Bridgeless);
        composites.record(
            &format!("bridgeless {i}"),
            within_four(orient_bridgeless(&g)),
        );
        let g = gen_composite(&p, CompositeMode::Treefree);
        composites.record(&format!("treefree {i}"), within_four(orient_treefree(&g)));
    }
    results.push(("4 composites", composites.outcome()));

    results.push(("5 templates", templates()));
    results.push(("6 fans", fans()));

    let violations = blocks.invariant_violations + composites.invariant_violations;
    let loop_check = format!(
        "{} runs, {violations} invariant violations",
        blocks.runs + composites.runs
    );
    results.push((
        "7 loop invariants",
        if violations == 0 {
            Ok(loop_check)
        } else {
            Err(loop_check)
        },
    ));

    results.push(("8 linear time", bench()));
    results.push(("9 oracle sanity", sanity(&chain)));

    // straight to stderr so the lines show even when output is captured
    let mut err = std::io::stderr().lock();
    err.write_all(b"\n").unwrap();
    for (name, r) in &results {
        let line = match r {
            Ok(d) => format!("PASS {name}: {d}\n"),
            Err(d) => format!("FAIL {name}: {d}\n"),
        };
        err.write_all(line.as_bytes()).unwrap();
    }
    drop(err);
    let failed: Vec<_> = results
        .iter()
        .filter(|(_, r)| r.is_err())
        .map(|(n, _)| *n)
        .collect();
    assert!(failed.is_empty(), "failed: {failed:?}");
}
