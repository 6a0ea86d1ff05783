//! Face attachment order and fan detection.

use std::collections::VecDeque;

use crate::embed::{DualTree, Faces};
use crate::graph::{EdgeId, Graph, Vertex};

/// One attachment: the face glued onto `shared_edge`, read from `from`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanStep {
    pub face: usize,
    pub shared_edge: EdgeId,
    pub from: Vertex,
}

#[derive(Debug, Clone)]
pub struct ConstructionPlan {
    pub faces: Faces,
    pub root_face: usize,
    /// Breadth-first over the dual tree from the root.
    pub steps: Vec<PlanStep>,
    /// Edge id to the face attached to it, `NO_FACE` if none. Empty when the
    /// block is small next to the host graph; `child_sparse` is used then.
    pub child_face: Vec<usize>,
    /// `(edge, face)` pairs sorted by edge.
    pub child_sparse: Vec<(EdgeId, usize)>,
    /// Face to its index in `steps`.
    pub step_of: Vec<Option<usize>>,
}

pub const NO_FACE: usize = usize::MAX;

impl ConstructionPlan {
    /// The face attached to `e`, if any.
    pub fn child_of(&self, e: EdgeId) -> Option<usize> {
        if self.child_face.is_empty() {
            return self
                .child_sparse
                .binary_search_by_key(&e, |&(x, _)| x)
                .ok()
                .map(|i| self.child_sparse[i].1);
        }
        match self.child_face.get(e) {
            Some(&f) if f != NO_FACE => Some(f),
            _ => None,
        }
    }

    /// Vertices and edges of step `i`'s path.
    pub fn step_path(&self, i: usize) -> (Vec<Vertex>, Vec<EdgeId>) {
        let s = &self.steps[i];
        self.faces.get(s.face).path_from(s.shared_edge, s.from)
    }

    /// Index of the step whose path attaches to `e`; an edge of an
    /// outerplanar block carries at most one.
    pub fn activity(&self, e: EdgeId) -> Option<usize> {
        self.child_of(e).and_then(|f| self.step_of[f])
    }
}

/// Face adjacent to the most other faces, lowest id on ties.
pub fn default_root(dual: &DualTree) -> usize {
    (0..dual.node_count)
        .max_by_key(|&f| (dual.degree(f), std::cmp::Reverse(f)))
        .unwrap_or(0)
}

/// Builds the attachment order for one block from its faces (as embedded,
/// with the vertex and edge ids of `g`) and their dual tree.
pub fn build_plan(g: &Graph, faces: Faces, dual: &DualTree, root: usize) -> ConstructionPlan {
    let mut steps = Vec::with_capacity(faces.len().saturating_sub(1));
    let dense = 2 * faces.total_len() >= g.edge_count();
    let mut child_face = if dense {
        vec![NO_FACE; g.edge_count()]
    } else {
        Vec::new()
    };
    let mut child_sparse = Vec::new();
    let mut step_of = vec![None; faces.len()];
    let mut seen = vec![false; faces.len()];
    let mut queue = VecDeque::new();
    let mut next: Vec<(usize, (Vertex, Vertex))> = Vec::new();
    if !faces.is_empty() {
        seen[root] = true;
        queue.push_back(root);
    }
    while let Some(f) = queue.pop_front() {
        next.clear();
        next.extend(dual.neighbors(f).iter().copied().filter(|&(h, _)| !seen[h]));
        next.sort_unstable();
        for &(h, (u, v)) in &next {
            seen[h] = true;
            let e = g.edge_id(u, v).expect("chord exists");
            if dense {
                child_face[e] = h;
            } else {
                child_sparse.push((e, h));
            }
            step_of[h] = Some(steps.len());
            steps.push(PlanStep {
                face: h,
                shared_edge: e,
                from: u,
            });
            queue.push_back(h);
        }
    }
    child_sparse.sort_unstable();
    ConstructionPlan {
        faces,
        root_face: root,
        steps,
        child_face,
        child_sparse,
        step_of,
    }
}

/// `k` quadrilaterals around `hub` closed by a pentagon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanDescriptor {
    pub hub: Vertex,
    pub base_edge: EdgeId,
    pub k: usize,
    pub quad_faces: Vec<usize>,
    pub closing_face: usize,
    /// Pentagon vertex adjacent to the hub.
    pub c: Vertex,
    pub follow_on: Option<Box<FanDescriptor>>,
}

impl FanDescriptor {
    /// Number of fans in the nested chain, this one included.
    pub fn depth(&self) -> usize {
        1 + self.follow_on.as_ref().map_or(0, |f| f.depth())
    }
}

/// Looks for a fan attached to `edge` with hub `hub`, considering only faces
/// for which `pending` returns true.
pub fn detect_fan(
    g: &Graph,
    plan: &ConstructionPlan,
    edge: EdgeId,
    hub: Vertex,
    pending: impl Fn(usize) -> bool,
) -> Option<FanDescriptor> {
    let mut chain: Vec<FanDescriptor> = Vec::new();
    let mut base = edge;
    while let Some(fan) = single_fan(g, plan, base, hub, &pending) {
        base = g.edge_id(hub, fan.c).expect("hub edge exists");
        chain.push(fan);
    }
    let mut nested: Option<Box<FanDescriptor>> = None;
    while let Some(mut fan) = chain.pop() {
        fan.follow_on = nested;
        nested = Some(Box::new(fan));
    }
    nested.map(|b| *b)
}

fn single_fan(
    g: &Graph,
    plan: &ConstructionPlan,
    edge: EdgeId,
    hub: Vertex,
    pending: &impl Fn(usize) -> bool,
) -> Option<FanDescriptor> {
    let mut quads = Vec::new();
    let mut e = edge;
    loop {
        let f = plan.child_of(e)?;
        if !pending(f) {
            return None;
        }
        let (u, v) = g.edge(e);
        let other = if u == hub { v } else { u };
        let (path, _) = plan.faces.get(f).path_from(e, other);
        match path.len() {
            4 => {
                quads.push(f);
                e = g.edge_id(hub, path[2]).expect("hub edge exists");
            }
            5 => {
                return Some(FanDescriptor {
                    hub,
                    base_edge: edge,
                    k: quads.len(),
                    quad_faces: quads,
                    closing_face: f,
                    c: path[3],
                    follow_on: None,
                });
            }
            _ => return None,
        }
    }
}
