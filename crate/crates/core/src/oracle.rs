//! Exact proper orientation number of small graphs by branch and bound.

use crate::embed::is_triangle_free;
use crate::error::OracleError;
use crate::graph::{Graph, Orientation, Vertex};

pub const DEFAULT_BUDGET: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub pon: u32,
    pub witness: Orientation,
    /// Search nodes visited over all values of k tried.
    pub explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub feasible: bool,
    pub witness: Option<Orientation>,
    pub explored: u64,
}

/// `(omega - 1, max degree)`, with omega read off an edge and triangle scan
/// (so it saturates at 3).
pub fn bound_chain(g: &Graph) -> (u32, u32) {
    let omega: u32 = if g.vertex_count() == 0 {
        0
    } else if g.edge_count() == 0 {
        1
    } else if is_triangle_free(g) {
        2
    } else {
        3
    };
    (omega.saturating_sub(1), g.max_degree() as u32)
}

pub fn exact_pon(g: &Graph, budget: usize) -> Result<ExactResult, OracleError> {
    check_budget(g, budget)?;
    let (lo, hi) = bound_chain(g);
    let mut explored = 0;
    for k in lo..=hi {
        let d = Search::new(g, k).run();
        explored += d.explored;
        if let Some(witness) = d.witness {
            return Ok(ExactResult {
                pon: k,
                witness,
                explored,
            });
        }
    }
    unreachable!("a proper orientation with in-degree at most the maximum degree always exists")
}

/// Whether some proper orientation has every in-degree at most `k`.
pub fn decide_pon(g: &Graph, k: u32, budget: usize) -> Result<Decision, OracleError> {
    check_budget(g, budget)?;
    Ok(Search::new(g, k).run())
}

fn check_budget(g: &Graph, budget: usize) -> Result<(), OracleError> {
    if g.edge_count() > budget {
        return Err(OracleError::BudgetExceeded {
            edges: g.edge_count(),
            budget,
        });
    }
    Ok(())
}

struct Search<'g> {
    g: &'g Graph,
    k: u32,
    /// Edge ids, vertices of high degree first.
    order: Vec<usize>,
    /// `true` points edge `(u, v)` (with `u < v`) into `u`.
    bits: Vec<bool>,
    indeg: Vec<u32>,
    remaining: Vec<usize>,
    nodes: u64,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, k: u32) -> Self {
        let n = g.vertex_count();
        let mut by_degree: Vec<Vertex> = (0..n).collect();
        by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut rank = vec![0; n];
        for (i, &v) in by_degree.iter().enumerate() {
            rank[v] = i;
        }
        let mut order: Vec<usize> = (0..g.edge_count()).collect();
        order.sort_by_key(|&e| {
            let (u, v) = g.edge(e);
            (rank[u].min(rank[v]), rank[u].max(rank[v]))
        });
        Search {
            g,
            k,
            order,
            bits: vec![false; g.edge_count()],
            indeg: vec![0; n],
            remaining: (0..n).map(|v| g.degree(v)).collect(),
            nodes: 0,
        }
    }

    fn run(mut self) -> Decision {
        let feasible = self.rec(0);
        let witness = feasible.then(|| {
            let heads: Vec<Vertex> = (0..self.g.edge_count())
                .map(|e| {
                    let (u, v) = self.g.edge(e);
                    if self.bits[e] {
                        u
                    } else {
                        v
                    }
                })
                .collect();
            Orientation::from_heads(self.g, &heads).expect("one head per edge")
        });
        Decision {
            feasible,
            witness,
            explored: self.nodes,
        }
    }

    /// A finished vertex must differ from every finished neighbour.
    fn complete_ok(&self, v: Vertex) -> bool {
        self.g
            .neighbors(v)
            .all(|(w, _)| self.remaining[w] > 0 || self.indeg[w] != self.indeg[v])
    }

    fn rec(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let e = self.order[i];
        let (u, v) = self.g.edge(e);
        for into_u in [false, true] {
            self.nodes += 1;
            let head = if into_u { u } else { v };
            if self.indeg[head] == self.k {
                continue;
            }
            self.indeg[head] += 1;
            self.remaining[u] -= 1;
            self.remaining[v] -= 1;
            self.bits[e] = into_u;
            let ok = (self.remaining[u] > 0 || self.complete_ok(u))
                && (self.remaining[v] > 0 || self.complete_ok(v));
            if ok && self.rec(i + 1) {
                return true;
            }
            self.indeg[head] -= 1;
            self.remaining[u] += 1;
            self.remaining[v] += 1;
        }
        false
    }
}
