//! Deterministic instance generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    pub seed: u64,
    /// Vertex budget; the output has at most this many vertices.
    pub n_target: usize,
    /// Probability that an attachment is a fan (quadrilaterals around a hub
    /// closed by a pentagon) rather than a single path.
    pub fan_bias: f64,
    /// Longest attached path, in edges (at least 3).
    pub max_path: usize,
    /// Number of blocks for composite graphs.
    pub blocks: usize,
    /// Chance that a composite block hangs off a bridge instead of sharing
    /// a cut vertex (tree-free mode only).
    pub bridge_prob: f64,
}

impl GenParams {
    pub fn new(seed: u64, n_target: usize) -> Self {
        GenParams {
            seed,
            n_target,
            fan_bias: 0.0,
            max_path: 8,
            blocks: 1,
            bridge_prob: 0.5,
        }
    }

    pub fn with_fan_bias(mut self, q: f64) -> Self {
        self.fan_bias = q;
        self
    }

    pub fn with_blocks(mut self, blocks: usize) -> Self {
        self.blocks = blocks;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompositeMode {
    Bridgeless,
    Treefree,
}

/// Five-cycle `0..5` with a path of four edges on each cycle edge.
pub fn gen_tightness() -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    for i in 0..5 {
        let x = 5 + 3 * i;
        edges.extend([(i, x), (x, x + 1), (x + 1, x + 2), (x + 2, (i + 1) % 5)]);
    }
    Graph::new(20, edges).expect("tightness graph is simple")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanInstance {
    pub graph: Graph,
    /// The base 4-cycle edge the fan hangs from, `(partner, hub)`.
    pub base_edge: (Vertex, Vertex),
    pub hub: Vertex,
    /// The pentagon vertex next to the hub, per nesting level.
    pub c: Vec<Vertex>,
}

/// A 4-cycle `0,1,2,3` with `k` quadrilaterals fanned around hub `1` from
/// edge `{0,1}`, closed by a pentagon; `nested` adds a second fan on the
/// new hub edge.
pub fn gen_fan(k: usize, nested: Option<usize>) -> FanInstance {
    let mut b = FanBuilder::new();
    let mut c = Vec::new();
    let mut partner = 0;
    for kk in std::iter::once(k).chain(nested) {
        partner = b.fan(partner, 1, kk, true);
        c.push(partner);
    }
    FanInstance {
        graph: b.finish(),
        base_edge: (0, 1),
        hub: 1,
        c,
    }
}

/// Like [`gen_fan`] but the quadrilateral chain is left open.
pub fn gen_quad_chain(k: usize) -> FanInstance {
    let mut b = FanBuilder::new();
    b.fan(0, 1, k, false);
    FanInstance {
        graph: b.finish(),
        base_edge: (0, 1),
        hub: 1,
        c: Vec::new(),
    }
}

struct FanBuilder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl FanBuilder {
    fn new() -> Self {
        FanBuilder {
            n: 4,
            edges: vec![(0, 1), (1, 2), (2, 3), (3, 0)],
        }
    }

    fn fresh(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    /// Returns the last vertex attached next to the hub.
    fn fan(&mut self, mut w: Vertex, hub: Vertex, k: usize, close: bool) -> Vertex {
        for _ in 0..k {
            let (s, t) = (self.fresh(), self.fresh());
            self.edges.extend([(w, s), (s, t), (t, hub)]);
            w = t;
        }
        if close {
            let (p1, p2, c) = (self.fresh(), self.fresh(), self.fresh());
            self.edges.extend([(w, p1), (p1, p2), (p2, c), (c, hub)]);
            w = c;
        }
        w
    }

    fn finish(self) -> Graph {
        Graph::new(self.n, self.edges).expect("fan graph is simple")
    }
}

/// Random triangle-free 2-connected outerplanar graph grown by attaching
/// paths to outer edges.
pub fn gen_random_2connected(p: &GenParams) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let (n, edges) = grow_block(&mut rng, p);
    Graph::new(n, edges).expect("generated graph is simple")
}

fn path_len(rng: &mut ChaCha8Rng, min: usize, max: usize) -> usize {
    let mut len = min;
    while len < max && rng.gen_bool(0.5) {
        len += 1;
    }
    len
}

fn grow_block(rng: &mut ChaCha8Rng, p: &GenParams) -> (usize, Vec<(Vertex, Vertex)>) {
    let max_path = p.max_path.max(3);
    let budget = p.n_target.max(4);
    let n0 = path_len(rng, 4, max_path.max(4)).min(budget);
    let mut edges: Vec<(Vertex, Vertex)> = (0..n0).map(|i| (i, (i + 1) % n0)).collect();
    let mut outer = edges.clone();
    let mut n = n0;
    while budget - n >= 2 {
        let i = rng.gen_range(0..outer.len());
        let (u, v) = outer.swap_remove(i);
        if p.fan_bias > 0.0 && rng.gen_bool(p.fan_bias.clamp(0.0, 1.0)) {
            let (partner, hub) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
            let mut w = partner;
            let mut levels = 0;
            loop {
                let k = rng.gen_range(0..=3usize);
                let need = 2 * k + 3;
                if budget - n < need {
                    break;
                }
                for _ in 0..k {
                    let (s, t) = (n, n + 1);
                    n += 2;
                    edges.extend([(w, s), (s, t), (t, hub)]);
                    outer.extend([(w, s), (s, t)]);
                    w = t;
                }
                let (p1, p2, c) = (n, n + 1, n + 2);
                n += 3;
                edges.extend([(w, p1), (p1, p2), (p2, c), (c, hub)]);
                outer.extend([(w, p1), (p1, p2), (p2, c)]);
                w = c;
                levels += 1;
                if !rng.gen_bool(0.3) {
                    break;
                }
            }
            // the last hub edge stays on the outer face
            if levels == 0 {
                outer.push((u, v));
            } else {
                outer.push((w, hub));
            }
            continue;
        }
        let len = path_len(rng, 3, max_path).min(budget - n + 1);
        let mut prev = u;
        for _ in 0..len - 1 {
            edges.push((prev, n));
            outer.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, v));
        outer.push((prev, v));
    }
    (n, edges)
}

/// Blocks from [`gen_random_2connected`] glued at cut vertices, or in
/// tree-free mode sometimes joined by a bridge.
pub fn gen_composite(p: &GenParams, mode: CompositeMode) -> Graph {
    if p.blocks <= 1 {
        return gen_random_2connected(p);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let per_block = (p.n_target / p.blocks).max(4);
    let mut n = 0usize;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for i in 0..p.blocks {
        let sub = GenParams {
            seed: rng.gen(),
            n_target: rng.gen_range(4..=2 * per_block),
            blocks: 1,
            ..p.clone()
        };
        let (bn, bedges) = grow_block(&mut ChaCha8Rng::seed_from_u64(sub.seed), &sub);
        if i == 0 {
            n = bn;
            edges = bedges;
            continue;
        }
        let anchor = rng.gen_range(0..n);
        let inner = rng.gen_range(0..bn);
        let bridge = mode == CompositeMode::Treefree && rng.gen_bool(p.bridge_prob);
        let mut map = vec![0; bn];
        for (j, slot) in map.iter_mut().enumerate() {
            *slot = if !bridge && j == inner {
                anchor
            } else {
                n + j - usize::from(!bridge && j > inner)
            };
        }
        n += if bridge { bn } else { bn - 1 };
        edges.extend(bedges.iter().map(|&(u, v)| (map[u], map[v])));
        if bridge {
            edges.push((anchor, map[inner]));
        }
    }
    Graph::new(n, edges).expect("composite graph is simple")
}
