use std::fs;
use std::path::Path;
use std::time::Instant;

use anyhow::{anyhow, Context};

use pon_core::embed::{classify, decompose_blocks, embed_blocks};
use pon_core::generators::{
    gen_composite, gen_fan, gen_random_2connected, gen_tightness, CompositeMode, GenParams,
};
use pon_core::oracle::{decide_pon, exact_pon};
use pon_core::orient::{orient_auto, orient_in_mode, Mode};
use pon_core::{Graph, OracleError, OrientError, Orientation};

use crate::report::{BenchReportRow, ClassFlags, ExactReport, RunReport, VerifyReport};
use crate::GenKind;

pub const EXIT_IMPROPER: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CLASS: u8 = 3;
pub const EXIT_INVARIANT: u8 = 4;
pub const EXIT_BUDGET: u8 = 5;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    fn new(code: u8, error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code,
            error: error.into(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(|e| Failure::new(EXIT_INPUT, e))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::parse(&read(path)?)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(|e| Failure::new(EXIT_INPUT, e))
}

/// Writes to `out`, or to stdout when there is no path.
fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text)
            .with_context(|| format!("writing {}", p.display()))
            .map_err(|e| Failure::new(EXIT_INPUT, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_json(value: &impl serde::Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

fn orient_failure(e: OrientError) -> Failure {
    let code = match e {
        OrientError::ClassMismatch(_) => EXIT_CLASS,
        _ => EXIT_INVARIANT,
    };
    Failure::new(code, e)
}

pub fn orient(
    graph: &Path,
    mode: &str,
    fallback: bool,
    out: Option<&Path>,
    json: bool,
) -> CmdResult {
    let g = read_graph(graph)?;
    let start = Instant::now();
    let result = if mode == "auto" {
        orient_auto(&g, fallback)
    } else {
        let m: Mode = mode
            .parse()
            .map_err(|e: String| Failure::new(EXIT_INPUT, anyhow!(e)))?;
        match orient_in_mode(&g, m) {
            Err(OrientError::ClassMismatch(_)) if fallback => {
                orient_in_mode(&g, Mode::FallbackDelta)
            }
            r => r,
        }
    };
    let oriented = result.map_err(orient_failure)?;
    let millis = start.elapsed().as_secs_f64() * 1e3;
    let text = oriented.orientation.to_text();

    // verify what is written, independently of the orienter
    let check = Orientation::parse(&g, &text).map_err(|e| Failure::new(EXIT_INVARIANT, e))?;
    let bound = oriented.mode.bound(&g);
    if !check.is_proper() || check.max_indegree() > bound {
        return Err(Failure::new(
            EXIT_INVARIANT,
            anyhow!(
                "output failed verification: proper {}, max in-degree {} (bound {bound})",
                check.is_proper(),
                check.max_indegree()
            ),
        ));
    }
    let report = RunReport {
        n: g.vertex_count(),
        m: g.edge_count(),
        class: classify(&g).into(),
        mode: oriented.mode.to_string(),
        max_indegree: check.max_indegree(),
        proper: check.is_proper(),
        millis,
    };
    if json {
        if out.is_some() {
            emit(out, &text)?;
        }
        print_json(&report);
    } else {
        emit(out, &text)?;
        eprintln!(
            "mode {} max_indegree {} proper {}",
            report.mode, report.max_indegree, report.proper
        );
    }
    Ok(0)
}

pub fn verify(graph: &Path, orientation: &Path, json: bool) -> CmdResult {
    let g = read_graph(graph)?;
    let o = Orientation::parse(&g, &read(orientation)?)
        .with_context(|| format!("parsing {}", orientation.display()))
        .map_err(|e| Failure::new(EXIT_INPUT, e))?;
    let report = VerifyReport::of(&o);
    if json {
        print_json(&report);
    } else {
        println!("proper {}", if report.proper { "yes" } else { "no" });
        println!("max_indegree {}", report.max_indegree);
        for (t, h) in &report.violations {
            println!("violation {t} {h}");
        }
    }
    Ok(if report.proper { 0 } else { EXIT_IMPROPER })
}

pub fn exact(
    graph: &Path,
    k: Option<u32>,
    budget: usize,
    out: Option<&Path>,
    json: bool,
) -> CmdResult {
    let g = read_graph(graph)?;
    let budget_failure = |e: OracleError| Failure::new(EXIT_BUDGET, e);
    let (report, witness) = match k {
        Some(k) => {
            let d = decide_pon(&g, k, budget).map_err(budget_failure)?;
            (
                ExactReport {
                    k: Some(k),
                    pon: None,
                    feasible: Some(d.feasible),
                    explored: d.explored,
                },
                d.witness,
            )
        }
        None => {
            let r = exact_pon(&g, budget).map_err(budget_failure)?;
            (
                ExactReport {
                    k: None,
                    pon: Some(r.pon),
                    feasible: None,
                    explored: r.explored,
                },
                Some(r.witness),
            )
        }
    };
    if let (Some(path), Some(w)) = (out, &witness) {
        emit(Some(path), &w.to_text())?;
    }
    if json {
        print_json(&report);
    } else if let Some(f) = report.feasible {
        println!("{}", if f { "yes" } else { "no" });
    } else if let Some(p) = report.pon {
        println!("{p}");
    }
    Ok(0)
}

pub struct GenRequest {
    pub kind: GenKind,
    pub k: usize,
    pub nested: Option<usize>,
    pub n: usize,
    pub seed: u64,
    pub fan_bias: f64,
    pub blocks: usize,
    pub mode: String,
}

fn generate(req: &GenRequest) -> anyhow::Result<Graph> {
    let params = || -> anyhow::Result<GenParams> {
        if req.n < 4 {
            return Err(anyhow!("--n must be at least 4"));
        }
        if !(0.0..=1.0).contains(&req.fan_bias) {
            return Err(anyhow!("--fan-bias must lie in [0, 1]"));
        }
        Ok(GenParams::new(req.seed, req.n).with_fan_bias(req.fan_bias))
    };
    Ok(match req.kind {
        GenKind::Tightness => gen_tightness(),
        GenKind::Fan => gen_fan(req.k, req.nested).graph,
        GenKind::Random2c => gen_random_2connected(&params()?),
        GenKind::Composite => {
            if req.blocks == 0 {
                return Err(anyhow!("--blocks must be at least 1"));
            }
            let mode = match req.mode.as_str() {
                "bridgeless" => CompositeMode::Bridgeless,
                "treefree" => CompositeMode::Treefree,
                other => return Err(anyhow!("unknown composite mode {other:?}")),
            };
            gen_composite(&params()?.with_blocks(req.blocks), mode)
        }
    })
}

pub fn gen(req: &GenRequest, out: Option<&Path>, json: bool) -> CmdResult {
    let g = generate(req).map_err(|e| Failure::new(EXIT_INPUT, e))?;
    let flags = ClassFlags::from(classify(&g));
    emit(out, &g.to_text())?;
    if json && out.is_some() {
        print_json(&flags);
    } else {
        eprint!("{}", flags.lines());
    }
    Ok(0)
}

pub fn recognize(graph: &Path, json: bool) -> CmdResult {
    let g = read_graph(graph)?;
    let dec = decompose_blocks(&g);
    let flags = ClassFlags::from(classify(&g));
    let embeddings = embed_blocks(&g, &dec).ok();
    if json {
        /// Outer cycle, then faces.
        type BlockFaces = (Vec<usize>, Vec<Vec<usize>>);
        #[derive(serde::Serialize)]
        struct Recognized {
            class: ClassFlags,
            blocks: Option<Vec<BlockFaces>>,
        }
        let blocks = embeddings.map(|embs| {
            embs.iter()
                .flatten()
                .map(|e| {
                    let faces = e
                        .faces
                        .iter()
                        .map(|f| (0..f.len()).map(|i| f.vertex(i)).collect())
                        .collect();
                    (e.outer_cycle.clone(), faces)
                })
                .collect()
        });
        print_json(&Recognized {
            class: flags,
            blocks,
        });
        return Ok(0);
    }
    print!("{}", flags.lines());
    match embeddings {
        Some(embs) => {
            for (i, e) in embs.iter().enumerate() {
                if let Some(e) = e {
                    println!("block {i}");
                    print!("{}", e.to_text());
                }
            }
        }
        None => println!("not outerplanar"),
    }
    Ok(0)
}

/// Comma-separated sizes; an empty string is an empty list.
pub fn parse_sizes(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .with_context(|| format!("bad size {s:?}"))
                .map_err(|e| Failure::new(EXIT_INPUT, e))
        })
        .collect()
}

pub fn bench(sizes: &[usize], seeds: usize, json: bool) -> CmdResult {
    let rows = pon_core::bench::run_bench(sizes, seeds).map_err(orient_failure)?;
    let rows: Vec<BenchReportRow> = rows
        .into_iter()
        .map(|r| BenchReportRow {
            n: r.n,
            edges: r.edges,
            runs: r.runs,
            mean_ms: r.mean.as_secs_f64() * 1e3,
        })
        .collect();
    if json {
        print_json(&rows);
    } else {
        println!(
            "{:>10} {:>10} {:>6} {:>12}",
            "n", "edges", "runs", "mean_ms"
        );
        for r in &rows {
            println!(
                "{:>10} {:>10} {:>6} {:>12.3}",
                r.n, r.edges, r.runs, r.mean_ms
            );
        }
    }
    Ok(0)
}
