//! Undirected graphs, orientations, and the properness verifier.
//!
//! Vertex ids are dense `0..n`. Edge ids index into [`Graph::edges`], and
//! every orientation stores one arc per edge id.

use std::collections::{BinaryHeap, HashMap};
use std::fmt::Write as _;

use crate::error::{GraphError, RealizeError};

pub type Vertex = usize;
pub type EdgeId = usize;

/// Simple undirected graph: no loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    // ids are stored as u32 to halve the footprint on large inputs
    edges: Vec<(u32, u32)>,
    /// Neighbors of `v` are `adj[start[v]..start[v + 1]]`.
    start: Vec<u32>,
    adj: Vec<(u32, u32)>,
}

impl Graph {
    /// Builds a graph; edges are stored with the smaller endpoint first, in
    /// the order given.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        Self::build(n, edges, true)
    }

    /// As [`Graph::new`] for edge lists known to be simple: parallel edges
    /// are not looked for.
    pub(crate) fn new_unchecked(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Self {
        Self::build(n, edges, false).expect("valid edge list")
    }

    fn build(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
        check_parallel: bool,
    ) -> Result<Self, GraphError> {
        assert!(n < u32::MAX as usize, "graph too large");
        let mut list: Vec<(u32, u32)> = Vec::new();
        let mut start = vec![0u32; n + 1];
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            list.push((u.min(v) as u32, u.max(v) as u32));
            start[u + 1] += 1;
            start[v + 1] += 1;
        }
        assert!(2 * list.len() < u32::MAX as usize, "graph too large");
        for v in 0..n {
            start[v + 1] += start[v];
        }
        let mut fill = start.clone();
        let mut adj = vec![(0u32, 0u32); 2 * list.len()];
        for (id, &(u, v)) in list.iter().enumerate() {
            adj[fill[u as usize] as usize] = (v, id as u32);
            fill[u as usize] += 1;
            adj[fill[v as usize] as usize] = (u, id as u32);
            fill[v as usize] += 1;
        }
        // reuse `fill` as a last-seen stamp
        fill.iter_mut().for_each(|x| *x = u32::MAX);
        for u in (0..n).take_while(|_| check_parallel) {
            for &(w, _) in &adj[start[u] as usize..start[u + 1] as usize] {
                if fill[w as usize] == u as u32 {
                    let w = w as usize;
                    return Err(GraphError::ParallelEdge(u.min(w), u.max(w)));
                }
                fill[w as usize] = u as u32;
            }
        }
        Ok(Graph {
            n,
            edges: list,
            start,
            adj,
        })
    }

    pub fn cycle(n: usize) -> Self {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of every edge, smaller first, by edge id.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (Vertex, Vertex)> + Clone + '_ {
        self.edges.iter().map(|&(u, v)| (u as Vertex, v as Vertex))
    }

    pub fn edge(&self, e: EdgeId) -> (Vertex, Vertex) {
        let (u, v) = self.edges[e];
        (u as Vertex, v as Vertex)
    }

    /// Neighbors of `v` paired with the connecting edge id.
    pub fn neighbors(
        &self,
        v: Vertex,
    ) -> impl ExactSizeIterator<Item = (Vertex, EdgeId)> + Clone + '_ {
        self.adj[self.start[v] as usize..self.start[v + 1] as usize]
            .iter()
            .map(|&(w, e)| (w as Vertex, e as EdgeId))
    }

    /// The `i`-th neighbor of `v` in edge-id order.
    pub fn neighbor(&self, v: Vertex, i: usize) -> Option<(Vertex, EdgeId)> {
        let (s, t) = (self.start[v] as usize, self.start[v + 1] as usize);
        (i < t - s).then(|| {
            let (w, e) = self.adj[s + i];
            (w as Vertex, e as EdgeId)
        })
    }

    pub fn degree(&self, v: Vertex) -> usize {
        (self.start[v + 1] - self.start[v]) as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let (s, t) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        let t = t as u32;
        self.adj[self.start[s] as usize..self.start[s + 1] as usize]
            .iter()
            .find(|&&(w, _)| w == t)
            .map(|&(_, e)| e as EdgeId)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Induced-by-edges subgraph with vertices relabelled `0..k` in order of
    /// first appearance. Returns the subgraph and the local-to-global map.
    pub fn edge_subgraph(&self, edge_ids: &[EdgeId]) -> (Graph, Vec<Vertex>) {
        let mut local: HashMap<Vertex, Vertex> = HashMap::with_capacity(edge_ids.len());
        let mut globals = Vec::new();
        let mut edges = Vec::with_capacity(edge_ids.len());
        for &e in edge_ids {
            let (u, v) = self.edge(e);
            let mut id = |w: Vertex| {
                *local.entry(w).or_insert_with(|| {
                    globals.push(w);
                    globals.len() - 1
                })
            };
            let (lu, lv) = (id(u), id(v));
            edges.push((lu, lv));
        }
        let g = Graph::new(globals.len(), edges).expect("subgraph of a simple graph");
        (g, globals)
    }

    /// Parses the `p <n> <m>` / `e <u> <v>` text format.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let tag = parts.next().unwrap_or_default();
            let nums: Result<Vec<usize>, _> = parts.map(str::parse::<usize>).collect();
            let nums = nums.map_err(|e| GraphError::Parse {
                line: line_no,
                msg: e.to_string(),
            })?;
            match (tag, nums.as_slice()) {
                ("p", &[n, m]) if header.is_none() => header = Some((n, m)),
                ("p", _) => {
                    return Err(GraphError::Parse {
                        line: line_no,
                        msg: "bad or repeated header".into(),
                    })
                }
                ("e", &[u, v]) => {
                    if header.is_none() {
                        return Err(GraphError::Parse {
                            line: line_no,
                            msg: "edge before header".into(),
                        });
                    }
                    edges.push((u, v));
                }
                _ => {
                    return Err(GraphError::Parse {
                        line: line_no,
                        msg: format!("unrecognised line `{line}`"),
                    })
                }
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse {
            line: 0,
            msg: "missing `p` header".into(),
        })?;
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: 0,
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(16 * (self.edges.len() + 1));
        let _ = writeln!(out, "p {} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "e {u} {v}");
        }
        out
    }
}

/// A complete orientation: one arc `(tail, head)` per edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    arcs: Vec<(Vertex, Vertex)>,
    indegree: Vec<u32>,
}

impl Orientation {
    /// `heads[e]` names the head of edge `e`; it must be an endpoint.
    pub fn from_heads(g: &Graph, heads: &[Vertex]) -> Result<Self, GraphError> {
        if heads.len() != g.edge_count() {
            return Err(GraphError::Coverage {
                covered: heads.len(),
                expected: g.edge_count(),
            });
        }
        let mut arcs = Vec::with_capacity(heads.len());
        for (e, &h) in heads.iter().enumerate() {
            let (u, v) = g.edge(e);
            if h == v {
                arcs.push((u, v));
            } else if h == u {
                arcs.push((v, u));
            } else {
                return Err(GraphError::UnknownEdge(u, h));
            }
        }
        Ok(Self::from_arcs(g.vertex_count(), arcs))
    }

    fn from_arcs(n: usize, arcs: Vec<(Vertex, Vertex)>) -> Self {
        let mut indegree = vec![0u32; n];
        for &(_, h) in &arcs {
            indegree[h] += 1;
        }
        Orientation { arcs, indegree }
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn indegrees(&self) -> &[u32] {
        &self.indegree
    }

    pub fn indegree(&self, v: Vertex) -> u32 {
        self.indegree[v]
    }

    pub fn max_indegree(&self) -> u32 {
        self.indegree.iter().copied().max().unwrap_or(0)
    }

    /// Arcs whose endpoints share an in-degree.
    pub fn violations(&self) -> Vec<(Vertex, Vertex)> {
        self.arcs
            .iter()
            .copied()
            .filter(|&(t, h)| self.indegree[t] == self.indegree[h])
            .collect()
    }

    pub fn is_proper(&self) -> bool {
        self.arcs
            .iter()
            .all(|&(t, h)| self.indegree[t] != self.indegree[h])
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, d) in self.indegree.iter().enumerate() {
            let _ = writeln!(out, "d {v} {d}");
        }
        for &(t, h) in &self.arcs {
            let _ = writeln!(out, "a {t} {h}");
        }
        out
    }

    /// Reads `a <tail> <head>` lines against `g`. `d` lines are accepted but
    /// ignored; in-degrees are always recomputed from the arcs.
    pub fn parse(g: &Graph, text: &str) -> Result<Self, GraphError> {
        let mut heads = vec![usize::MAX; g.edge_count()];
        let mut seen = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |msg: String| GraphError::Parse { line: idx + 1, msg };
            let mut parts = line.split_whitespace();
            let tag = parts.next().unwrap_or_default();
            let nums: Vec<usize> = parts
                .map(|p| p.parse::<usize>().map_err(|e| parse_err(e.to_string())))
                .collect::<Result<_, _>>()?;
            match (tag, nums.as_slice()) {
                ("d", &[_, _]) => {}
                ("a", &[t, h]) => {
                    let e = g.edge_id(t, h).ok_or(GraphError::UnknownEdge(t, h))?;
                    if heads[e] != usize::MAX {
                        return Err(GraphError::Coverage {
                            covered: seen + 1,
                            expected: g.edge_count(),
                        });
                    }
                    heads[e] = h;
                    seen += 1;
                }
                _ => return Err(parse_err(format!("unrecognised line `{line}`"))),
            }
        }
        if seen != g.edge_count() {
            return Err(GraphError::Coverage {
                covered: seen,
                expected: g.edge_count(),
            });
        }
        Orientation::from_heads(g, &heads)
    }
}

pub fn max_indegree(o: &Orientation) -> u32 {
    o.max_indegree()
}

pub fn is_proper(o: &Orientation) -> bool {
    o.is_proper()
}

const UNSET: Vertex = usize::MAX;

/// Orientation of a subset of the edges, with an undo log so local searches
/// can try assignments and roll them back.
#[derive(Debug, Clone)]
pub struct PartialOrientation<'g> {
    g: &'g Graph,
    head: Vec<Vertex>,
    indegree: Vec<u32>,
    directed: usize,
    log: Vec<EdgeId>,
}

impl<'g> PartialOrientation<'g> {
    pub fn new(g: &'g Graph) -> Self {
        PartialOrientation {
            g,
            head: vec![UNSET; g.edge_count()],
            indegree: vec![0; g.vertex_count()],
            directed: 0,
            log: Vec::new(),
        }
    }

    pub fn indegree(&self, v: Vertex) -> u32 {
        self.indegree[v]
    }

    pub fn indegrees(&self) -> &[u32] {
        &self.indegree
    }

    pub fn is_directed(&self, e: EdgeId) -> bool {
        self.head[e] != UNSET
    }

    /// `(tail, head)` of a directed edge.
    pub fn arc(&self, e: EdgeId) -> Option<(Vertex, Vertex)> {
        let h = self.head[e];
        if h == UNSET {
            return None;
        }
        let (u, v) = self.g.edge(e);
        Some(if h == v { (u, v) } else { (v, u) })
    }

    pub fn directed_count(&self) -> usize {
        self.directed
    }

    /// Directs `e` into `head`. Panics if `e` is already directed or `head`
    /// is not an endpoint; both indicate a bug in the caller.
    pub fn direct(&mut self, e: EdgeId, head: Vertex) {
        let (u, v) = self.g.edge(e);
        assert!(head == u || head == v, "vertex {head} is not on edge {e}");
        assert_eq!(self.head[e], UNSET, "edge {e} directed twice");
        self.head[e] = head;
        self.indegree[head] += 1;
        self.directed += 1;
        self.log.push(e);
    }

    /// Temporary in-degree adjustment used to model arcs that are known to
    /// arrive later. Not recorded in the undo log.
    pub fn bump(&mut self, v: Vertex, delta: i32) {
        self.indegree[v] = self.indegree[v]
            .checked_add_signed(delta)
            .expect("in-degree underflow");
    }

    pub fn snapshot(&self) -> usize {
        self.log.len()
    }

    pub fn rollback(&mut self, snapshot: usize) {
        while self.log.len() > snapshot {
            let e = self.log.pop().expect("non-empty log");
            let h = self.head[e];
            self.indegree[h] -= 1;
            self.head[e] = UNSET;
            self.directed -= 1;
        }
    }

    /// Forgets the undo history; arcs directed so far become permanent.
    pub fn commit(&mut self) {
        self.log.clear();
    }

    /// Head of every edge, once all are directed.
    pub fn heads(&self) -> Option<&[Vertex]> {
        (self.directed == self.head.len()).then_some(&self.head[..])
    }

    pub fn into_orientation(self) -> Option<Orientation> {
        if self.directed != self.head.len() {
            return None;
        }
        let n = self.indegree.len();
        let arcs = self
            .g
            .edges()
            .zip(&self.head)
            .map(|((u, v), &h)| if h == v { (u, v) } else { (v, u) })
            .collect();
        Some(Orientation::from_arcs(n, arcs))
    }
}

/// Reference proper orientation with maximum in-degree at most the maximum
/// degree: repeatedly take a vertex of maximum remaining degree and point all
/// of its remaining edges at it.
pub fn delta_orientation(g: &Graph) -> Orientation {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut heads = vec![0; g.edge_count()];
    let mut heap: BinaryHeap<(usize, std::cmp::Reverse<Vertex>)> =
        (0..n).map(|v| (deg[v], std::cmp::Reverse(v))).collect();
    while let Some((d, std::cmp::Reverse(v))) = heap.pop() {
        if removed[v] || d != deg[v] {
            continue;
        }
        removed[v] = true;
        for (w, e) in g.neighbors(v) {
            if !removed[w] {
                heads[e] = v;
                deg[w] -= 1;
                heap.push((deg[w], std::cmp::Reverse(w)));
            }
        }
    }
    Orientation::from_heads(g, &heads).expect("every head is an endpoint")
}

/// Turns an in-degree sequence along a path `v_1 .. v_n` into arcs.
///
/// Entry `i` of the result is `true` when edge `v_i v_{i+1}` points toward
/// `v_{i+1}`. Endpoint entries count only the path's own arcs; an open
/// endpoint is unconstrained. Among several realizations the
/// lexicographically smallest arc vector (false < true) is returned.
pub fn realize_path(
    indegrees: &[u32],
    endpoints_open: (bool, bool),
) -> Result<Vec<bool>, RealizeError> {
    let n = indegrees.len();
    if n < 2 {
        return Err(RealizeError::TooShort);
    }
    let edges = n - 1;
    if !endpoints_open.0 && !endpoints_open.1 {
        let sum: usize = indegrees.iter().map(|&d| d as usize).sum();
        if sum != edges {
            return Err(RealizeError::SumMismatch { sum, edges });
        }
    }
    let propagate = |first: Option<bool>| -> Result<Vec<bool>, RealizeError> {
        let mut bits = Vec::with_capacity(edges);
        let mut received = 0u32;
        for i in 0..edges {
            let bit = match (i, first) {
                (0, Some(b)) => b,
                _ => match indegrees[i].checked_sub(received) {
                    Some(1) => false,
                    Some(0) => true,
                    _ => return Err(RealizeError::Contradiction(i)),
                },
            };
            bits.push(bit);
            received = u32::from(bit);
        }
        if !endpoints_open.1 && received != indegrees[n - 1] {
            return Err(RealizeError::Contradiction(n - 1));
        }
        Ok(bits)
    };
    if endpoints_open.0 {
        propagate(Some(false)).or_else(|_| propagate(Some(true)))
    } else {
        propagate(None)
    }
}

/// In-degrees contributed by a path orientation (inverse of `realize_path`).
pub fn path_indegrees(bits: &[bool]) -> Vec<u32> {
    let mut deg = vec![0u32; bits.len() + 1];
    for (i, &b) in bits.iter().enumerate() {
        if b {
            deg[i + 1] += 1;
        } else {
            deg[i] += 1;
        }
    }
    deg
}
