use serde::Serialize;

use pon_core::embed::GraphClass;
use pon_core::Orientation;

#[derive(Debug, Serialize)]
pub struct ClassFlags {
    pub connected: bool,
    pub outerplanar: bool,
    pub two_connected: bool,
    pub bridgeless: bool,
    pub tree_free: bool,
    pub triangle_free: bool,
}

impl From<GraphClass> for ClassFlags {
    fn from(c: GraphClass) -> Self {
        ClassFlags {
            connected: c.is_connected,
            outerplanar: c.is_outerplanar,
            two_connected: c.is_2connected,
            bridgeless: c.is_bridgeless,
            tree_free: c.is_tree_free,
            triangle_free: c.is_triangle_free,
        }
    }
}

impl ClassFlags {
    pub fn lines(&self) -> String {
        format!(
            "connected {}\nouterplanar {}\n2connected {}\nbridgeless {}\ntreefree {}\ntrianglefree {}\n",
            self.connected,
            self.outerplanar,
            self.two_connected,
            self.bridgeless,
            self.tree_free,
            self.triangle_free
        )
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub n: usize,
    pub m: usize,
    pub class: ClassFlags,
    pub mode: String,
    pub max_indegree: u32,
    /// Recomputed from the written orientation.
    pub proper: bool,
    pub millis: f64,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub proper: bool,
    pub max_indegree: u32,
    pub violations: Vec<(usize, usize)>,
}

impl VerifyReport {
    pub fn of(o: &Orientation) -> Self {
        VerifyReport {
            proper: o.is_proper(),
            max_indegree: o.max_indegree(),
            violations: o.violations(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ExactReport {
    pub k: Option<u32>,
    /// The optimum, when no `k` was asked for.
    pub pon: Option<u32>,
    /// Answer to "is there a proper orientation with in-degree at most k".
    pub feasible: Option<bool>,
    pub explored: u64,
}

#[derive(Debug, Serialize)]
pub struct BenchReportRow {
    pub n: usize,
    pub edges: usize,
    pub runs: usize,
    pub mean_ms: f64,
}
