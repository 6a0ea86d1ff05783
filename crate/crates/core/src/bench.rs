//! Wall-clock timing of the 2-connected orienter on random instances.

use std::time::{Duration, Instant};

use crate::error::OrientError;
use crate::generators::{gen_random_2connected, GenParams};
use crate::orient::orient_2connected;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    /// Mean edge count of the timed instances.
    pub edges: usize,
    pub runs: usize,
    /// Mean time of one orientation, instance generation excluded.
    pub mean: Duration,
}

/// Instances timed per round for size `n`: small sizes get more so that each
/// round spends comparable time on every size.
fn instances_per_round(n: usize) -> usize {
    (100_000 / n.max(1)).clamp(1, 100)
}

/// Times `seeds` rounds over all sizes. Sizes are vertex budgets. Rounds
/// visit every size in turn so that drift in machine load spreads evenly.
pub fn run_bench(sizes: &[usize], seeds: usize) -> Result<Vec<BenchRow>, OrientError> {
    let mut total = vec![Duration::ZERO; sizes.len()];
    let mut edges = vec![0usize; sizes.len()];
    let mut runs = vec![0usize; sizes.len()];
    for round in 0..seeds.max(1) {
        for (i, &n) in sizes.iter().enumerate() {
            let k = instances_per_round(n);
            for j in 0..k {
                let seed = (round * k + j) as u64;
                let g = gen_random_2connected(&GenParams::new(seed, n.max(4)));
                edges[i] += g.edge_count();
                let start = Instant::now();
                let out = orient_2connected(&g)?;
                total[i] += start.elapsed();
                runs[i] += 1;
                debug_assert!(out.orientation.is_proper());
            }
        }
    }
    Ok(sizes
        .iter()
        .enumerate()
        .map(|(i, &n)| BenchRow {
            n,
            edges: edges[i] / runs[i].max(1),
            runs: runs[i],
            mean: total[i] / runs[i].max(1) as u32,
        })
        .collect())
}
