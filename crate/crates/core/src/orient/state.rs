//! The incremental orienter for one 2-connected block.
//!
//! Faces are attached in breadth-first order over the dual tree. Each step
//! orients the path of one face (and sometimes a whole fan ahead of it) and
//! then checks, around the vertices it touched, that the partial orientation
//! is proper, respects the in-degree cap, and has no active 1-2 edge whose
//! in-degree-2 end is a trouble maker.

use std::cell::Cell;
use std::collections::HashMap;

use crate::error::OrientError;
use crate::graph::{EdgeId, Graph, PartialOrientation, Vertex};
use crate::orient::plan::{detect_fan, ConstructionPlan, FanDescriptor};
use crate::orient::templates::PathTemplate;

const SEARCH_BUDGET: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FanVariant {
    /// Leaves `{hub, c}` as a 1-2 edge.
    Normal,
    /// Points both pentagon edges at `c` so a following fan can lift it to 3.
    Added,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrienterStats {
    pub a1: usize,
    pub a2: usize,
    pub a3: usize,
    pub a4: usize,
    pub fans: usize,
    pub procedure1: usize,
    pub procedure2: usize,
    pub searches: usize,
    /// Template choices rejected by the local check before one fitted.
    pub retries: usize,
    pub steps_checked: usize,
}

/// Edge to orient in a local search; `true` sends it into `to`.
#[derive(Debug, Clone, Copy)]
struct SearchEdge {
    e: EdgeId,
    from: Vertex,
    to: Vertex,
}

#[derive(Debug, Default)]
struct SearchProblem {
    edges: Vec<SearchEdge>,
    /// Required in-degree (pending arcs included) once a vertex is complete.
    fixed: Vec<(Vertex, u32)>,
    /// Arcs known to arrive after this search.
    pending: Vec<(Vertex, i32)>,
    /// Edges allowed to stay a tied or troubled 1-2 edge for now.
    exempt: Vec<EdgeId>,
    /// Per-vertex cap overriding the block cap.
    caps: Vec<(Vertex, u32)>,
}

pub struct OrienterState<'g> {
    g: &'g Graph,
    plan: ConstructionPlan,
    partial: PartialOrientation<'g>,
    processed: Vec<bool>,
    cursor: usize,
    seed: Option<Vertex>,
    touched: Vec<Vertex>,
    scratch: Cell<Vec<Vertex>>,
    pub stats: OrienterStats,
}

impl<'g> OrienterState<'g> {
    /// `partial` may already hold arcs outside this block; `seed` is the one
    /// block vertex they touch, allowed to reach in-degree 4.
    pub fn new(
        g: &'g Graph,
        plan: ConstructionPlan,
        partial: PartialOrientation<'g>,
        seed: Option<Vertex>,
    ) -> Self {
        let faces = plan.faces.len();
        OrienterState {
            g,
            plan,
            partial,
            processed: vec![false; faces],
            cursor: 0,
            seed,
            touched: Vec::new(),
            scratch: Cell::new(Vec::new()),
            stats: OrienterStats::default(),
        }
    }

    pub fn plan(&self) -> &ConstructionPlan {
        &self.plan
    }

    pub fn partial(&self) -> &PartialOrientation<'g> {
        &self.partial
    }

    pub fn into_partial(self) -> PartialOrientation<'g> {
        self.partial
    }

    pub fn indegree(&self, v: Vertex) -> u32 {
        self.partial.indegree(v)
    }

    fn d(&self, v: Vertex) -> u32 {
        self.partial.indegree(v)
    }

    fn cap(&self, v: Vertex) -> u32 {
        if Some(v) == self.seed {
            4
        } else {
            3
        }
    }

    pub fn is_processed(&self, face: usize) -> bool {
        self.processed[face]
    }

    /// A face will still be attached to `e`.
    pub fn is_active(&self, e: EdgeId) -> bool {
        self.plan.child_of(e).is_some_and(|f| !self.processed[f])
    }

    fn directed_neighbors(&self, v: Vertex) -> impl Iterator<Item = (Vertex, EdgeId)> + '_ {
        self.g
            .neighbors(v)
            .filter(|&(_, e)| self.partial.is_directed(e))
    }

    /// In-degree 2 with a neighbour of in-degree 3.
    pub fn is_trouble_maker(&self, v: Vertex) -> bool {
        self.d(v) == 2 && self.directed_neighbors(v).any(|(w, _)| self.d(w) == 3)
    }

    fn other(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (x, y) = self.g.edge(e);
        if x == v {
            y
        } else {
            x
        }
    }

    fn edge(&self, u: Vertex, v: Vertex) -> Result<EdgeId, OrientError> {
        self.g
            .edge_id(u, v)
            .ok_or_else(|| violation(format!("missing edge {u}-{v}")))
    }

    pub fn fan_on(&self, e: EdgeId, hub: Vertex) -> Option<FanDescriptor> {
        detect_fan(self.g, &self.plan, e, hub, |f| !self.processed[f])
    }

    fn direct(&mut self, e: EdgeId, head: Vertex) {
        let (u, v) = self.g.edge(e);
        self.partial.direct(e, head);
        self.touched.push(u);
        self.touched.push(v);
    }

    fn orient_path(&mut self, path: &[Vertex], edges: &[EdgeId], bits: &[bool]) {
        for (i, (&e, &b)) in edges.iter().zip(bits).enumerate() {
            let head = if b { path[i + 1] } else { path[i] };
            self.direct(e, head);
        }
    }

    /// Orients the face on `shared` by `template`, with `from` as `v_1`.
    pub fn attach_path(
        &mut self,
        face: usize,
        shared: EdgeId,
        from: Vertex,
        template: PathTemplate,
    ) -> Result<(), OrientError> {
        let (path, edges) = self.plan.faces.get(face).path_from(shared, from);
        let bits = template.arcs(edges.len())?;
        self.orient_path(&path, &edges, &bits);
        self.processed[face] = true;
        Ok(())
    }

    // ---- checks ------------------------------------------------------------

    /// Cap, properness and the 1-2 edge condition around `vertices`.
    fn check_around(&self, vertices: &[Vertex], exempt: &[EdgeId]) -> Result<(), String> {
        let mut around = self.scratch.take();
        around.clear();
        around.extend_from_slice(vertices);
        for &v in vertices {
            if self.d(v) == 3 {
                around.extend(
                    self.directed_neighbors(v)
                        .filter(|&(w, _)| self.d(w) == 2)
                        .map(|(w, _)| w),
                );
            }
        }
        around.sort_unstable();
        around.dedup();
        let result = self.check_sorted(&around, exempt);
        self.scratch.set(around);
        result
    }

    fn check_sorted(&self, around: &[Vertex], exempt: &[EdgeId]) -> Result<(), String> {
        for &v in around {
            let dv = self.d(v);
            if dv > self.cap(v) {
                return Err(format!("vertex {v} has in-degree {dv}"));
            }
            for (w, e) in self.directed_neighbors(v) {
                if exempt.contains(&e) {
                    continue;
                }
                let dw = self.d(w);
                if dv == dw {
                    return Err(format!("edge {v}-{w} has equal in-degrees {dv}"));
                }
                let two = match (dv, dw) {
                    (2, 1) => v,
                    (1, 2) => w,
                    _ => continue,
                };
                if self.is_active(e) && self.is_trouble_maker(two) {
                    return Err(format!("active 1-2 edge {v}-{w} on a 1-2-3 path"));
                }
            }
        }
        Ok(())
    }

    /// Verifies everything touched since the last commit and makes it final.
    fn finish_step(&mut self) -> Result<(), OrientError> {
        let mut touched = std::mem::take(&mut self.touched);
        let checked = self.check_around(&touched, &[]);
        touched.clear();
        self.touched = touched;
        checked.map_err(violation)?;
        self.partial.commit();
        self.stats.steps_checked += 1;
        Ok(())
    }

    // ---- local search ------------------------------------------------------

    fn search(&mut self, prob: &SearchProblem) -> Result<(), OrientError> {
        self.stats.searches += 1;
        for &(v, delta) in &prob.pending {
            self.partial.bump(v, delta);
        }
        let mut remaining: HashMap<Vertex, usize> = HashMap::new();
        for se in &prob.edges {
            *remaining.entry(se.from).or_default() += 1;
            *remaining.entry(se.to).or_default() += 1;
        }
        let mut changed: Vec<Vertex> = remaining.keys().copied().collect();
        changed.extend(prob.pending.iter().map(|&(v, _)| v));
        changed.sort_unstable();
        changed.dedup();
        let snap = self.partial.snapshot();
        let mut nodes = 0usize;
        let found = self.search_rec(prob, 0, &mut remaining, &changed, &mut nodes);
        for &(v, delta) in &prob.pending {
            self.partial.bump(v, -delta);
        }
        if found {
            self.touched.extend(changed);
            Ok(())
        } else {
            self.partial.rollback(snap);
            Err(violation(format!(
                "local search over {} edges found no orientation ({nodes} nodes)",
                prob.edges.len()
            )))
        }
    }

    fn search_rec(
        &mut self,
        prob: &SearchProblem,
        i: usize,
        remaining: &mut HashMap<Vertex, usize>,
        changed: &[Vertex],
        nodes: &mut usize,
    ) -> bool {
        if i == prob.edges.len() {
            return self.check_around(changed, &prob.exempt).is_ok();
        }
        let se = prob.edges[i];
        for into_to in [false, true] {
            *nodes += 1;
            if *nodes > SEARCH_BUDGET {
                return false;
            }
            let head = if into_to { se.to } else { se.from };
            let snap = self.partial.snapshot();
            self.partial.direct(se.e, head);
            *remaining.get_mut(&se.from).expect("counted") -= 1;
            *remaining.get_mut(&se.to).expect("counted") -= 1;
            let ok = self.search_cap_ok(prob, head)
                && [se.from, se.to]
                    .iter()
                    .all(|&v| remaining[&v] > 0 || self.search_complete_ok(prob, v, remaining));
            if ok && self.search_rec(prob, i + 1, remaining, changed, nodes) {
                return true;
            }
            *remaining.get_mut(&se.from).expect("counted") += 1;
            *remaining.get_mut(&se.to).expect("counted") += 1;
            self.partial.rollback(snap);
        }
        false
    }

    fn search_cap(&self, prob: &SearchProblem, v: Vertex) -> u32 {
        prob.caps
            .iter()
            .find(|&&(w, _)| w == v)
            .map_or(self.cap(v), |&(_, c)| c)
    }

    fn search_cap_ok(&self, prob: &SearchProblem, v: Vertex) -> bool {
        let d = self.d(v);
        if d > self.search_cap(prob, v) {
            return false;
        }
        prob.fixed.iter().all(|&(w, target)| w != v || d <= target)
    }

    fn search_complete_ok(
        &self,
        prob: &SearchProblem,
        v: Vertex,
        remaining: &HashMap<Vertex, usize>,
    ) -> bool {
        let d = self.d(v);
        if prob.fixed.iter().any(|&(w, target)| w == v && d != target) {
            return false;
        }
        self.directed_neighbors(v).all(|(w, e)| {
            prob.exempt.contains(&e) || remaining.get(&w).is_some_and(|&r| r > 0) || self.d(w) != d
        })
    }

    // ---- the main loop -----------------------------------------------------

    /// Orients the root face, then every remaining face.
    pub fn run(&mut self) -> Result<(), OrientError> {
        self.orient_root()?;
        self.finish_step()?;
        while self.cursor < self.plan.steps.len() {
            let step = self.cursor;
            self.cursor += 1;
            let face = self.plan.steps[step].face;
            if self.processed[face] {
                continue;
            }
            let e = self.plan.steps[step].shared_edge;
            self.dispatch(face, e)?;
            self.finish_step()?;
        }
        Ok(())
    }

    fn orient_root(&mut self) -> Result<(), OrientError> {
        let root = self.plan.root_face;
        let face = self.plan.faces.get(root);
        let k = face.len();
        let start = match self.seed {
            Some(v) => face
                .vertices
                .iter()
                .position(|&w| w as Vertex == v)
                .ok_or_else(|| violation(format!("seed {v} is not on the root face")))?,
            None => 0,
        };
        let mut path: Vec<Vertex> = (0..=k).map(|i| face.vertex((start + i) % k)).collect();
        let mut edges: Vec<EdgeId> = (0..k).map(|i| face.edge((start + i) % k)).collect();
        self.processed[root] = true;
        let Some(v) = self.seed else {
            let bits = PathTemplate::Base.arcs(k)?;
            self.orient_path(&path, &edges, &bits);
            return Ok(());
        };
        let dv = self.d(v);
        let clash = self.directed_neighbors(v).any(|(w, _)| self.d(w) == dv);
        let template = if dv == 2 || clash {
            PathTemplate::In1
        } else {
            PathTemplate::ConnectFan
        };
        let bits = template.arcs(k)?;
        for _ in 0..2 {
            let snap = self.partial.snapshot();
            let before = self.touched.len();
            self.orient_path(&path, &edges, &bits);
            if self.check_around(&self.touched[before..], &[]).is_ok() {
                return Ok(());
            }
            self.touched.truncate(before);
            self.partial.rollback(snap);
            self.stats.retries += 1;
            path.reverse();
            edges.reverse();
        }
        let prob = SearchProblem {
            edges: (0..k)
                .map(|i| SearchEdge {
                    e: edges[i],
                    from: path[i],
                    to: path[i + 1],
                })
                .collect(),
            ..SearchProblem::default()
        };
        self.search(&prob)
    }

    fn dispatch(&mut self, face: usize, e: EdgeId) -> Result<(), OrientError> {
        let (u, v) = self.g.edge(e);
        let (a, b) = match self.d(u).cmp(&self.d(v)) {
            std::cmp::Ordering::Less => (u, v),
            std::cmp::Ordering::Greater => (v, u),
            std::cmp::Ordering::Equal => {
                return Err(violation(format!("shared edge {u}-{v} is tied")));
            }
        };
        let len = self.plan.faces.get(face).len() - 1;
        if self.is_trouble_maker(b) {
            self.stats.a3 += 1;
            self.case_a3(face, e, a, b, len)
        } else if self.is_trouble_maker(a) {
            self.stats.a4 += 1;
            self.case_a4(face, e, a, b, len)
        } else if len != 4 {
            self.stats.a1 += 1;
            self.case_a1(face, e, a, b, len)
        } else {
            self.stats.a2 += 1;
            self.case_a2(face, e, a, b)
        }
    }

    /// Tries `(template, v_1)` choices in order, keeping the first that passes
    /// the local check.
    fn attach_first_valid(
        &mut self,
        face: usize,
        e: EdgeId,
        choices: &[(PathTemplate, Vertex)],
    ) -> Result<(), OrientError> {
        for &(t, from) in choices {
            let snap = self.partial.snapshot();
            let before = self.touched.len();
            self.attach_path(face, e, from, t)?;
            if self.check_around(&self.touched[before..], &[]).is_ok() {
                return Ok(());
            }
            self.touched.truncate(before);
            self.partial.rollback(snap);
            self.processed[face] = false;
            self.stats.retries += 1;
        }
        Err(violation(format!(
            "no admissible orientation for the path on edge {e}"
        )))
    }

    fn case_a1(
        &mut self,
        face: usize,
        e: EdgeId,
        a: Vertex,
        b: Vertex,
        len: usize,
    ) -> Result<(), OrientError> {
        let fits = |s: &Self, v1: Vertex, vn: Vertex| {
            s.d(v1) != 1 && s.d(vn) != 2 && !(len == 3 && s.d(vn) == 3)
        };
        let mut choices = Vec::with_capacity(2);
        for (v1, vn) in [(a, b), (b, a)] {
            if fits(self, v1, vn) {
                choices.push((PathTemplate::Base, v1));
            }
        }
        for v1 in [a, b] {
            if !choices.contains(&(PathTemplate::Base, v1)) {
                choices.push((PathTemplate::Base, v1));
            }
        }
        self.attach_first_valid(face, e, &choices)
    }

    fn case_a2(&mut self, face: usize, e: EdgeId, a: Vertex, b: Vertex) -> Result<(), OrientError> {
        if self.d(a) == 1 && self.d(b) == 2 {
            return self.attach_first_valid(face, e, &[(PathTemplate::RaiseEnd, a)]);
        }
        let mut choices = Vec::with_capacity(4);
        for (t, bad) in [(PathTemplate::Base, 1), (PathTemplate::BaseAlt, 2)] {
            for (v1, vn) in [(a, b), (b, a)] {
                if self.d(v1) != bad && self.d(vn) != bad {
                    choices.push((t, v1));
                }
            }
        }
        self.attach_first_valid(face, e, &choices)
    }

    fn case_a3(
        &mut self,
        face: usize,
        e: EdgeId,
        a: Vertex,
        b: Vertex,
        len: usize,
    ) -> Result<(), OrientError> {
        if self.d(a) == 1 {
            return Err(violation(format!(
                "trouble maker {b} on active edge with in-degree-1 end {a}"
            )));
        }
        let (path, edges) = self.plan.faces.get(face).path_from(e, a);
        let e_prime = edges[edges.len() - 1];
        if self.fan_on(e_prime, b).is_some() {
            // the in-degree-2 vertex of the path sits next to b
            let t = if len == 4 {
                PathTemplate::BaseAlt
            } else {
                PathTemplate::Base
            };
            self.attach_path(face, e, a, t)?;
        } else {
            self.attach_path(face, e, b, PathTemplate::Base)?;
        }
        debug_assert_eq!(path[path.len() - 1], b);
        self.procedure_1(e_prime, b)
    }

    fn case_a4(
        &mut self,
        face: usize,
        e: EdgeId,
        a: Vertex,
        b: Vertex,
        len: usize,
    ) -> Result<(), OrientError> {
        if self.d(b) < 3 {
            return Err(violation(format!(
                "trouble maker {a} paired with in-degree {} at {b}",
                self.d(b)
            )));
        }
        let (_, edges) = self.plan.faces.get(face).path_from(e, a);
        let e_prime = edges[0];
        if self.fan_on(e_prime, a).is_some() {
            self.attach_path(face, e, a, PathTemplate::ConnectFan23)?;
            self.procedure_1(e_prime, a)
        } else if len == 3 {
            self.procedure_2(face, e, e_prime, a, b)
        } else {
            self.attach_path(face, e, a, PathTemplate::ConnectFan23a)?;
            self.procedure_1(e_prime, a)
        }
    }

    /// Orients whatever hangs off `e` at trouble maker `x`, following the
    /// chain of new 1-2 edges at `x` until one is inactive.
    pub fn procedure_1(&mut self, e: EdgeId, x: Vertex) -> Result<(), OrientError> {
        let mut e = e;
        let mut rounds = 0usize;
        while self.is_active(e) {
            rounds += 1;
            if rounds > self.plan.faces.len() {
                return Err(violation("procedure 1 does not terminate".into()));
            }
            self.stats.procedure1 += 1;
            if let Some(fan) = self.fan_on(e, x) {
                let variant = if fan.follow_on.is_some() {
                    FanVariant::Added
                } else {
                    FanVariant::Normal
                };
                self.orient_fan(&fan, variant)?;
                e = self.edge(x, fan.c)?;
            } else {
                let face = self.plan.child_of(e).expect("active edge has a face");
                let (path, edges) = self.plan.faces.get(face).path_from(e, x);
                let c = path[1];
                let next = edges[0];
                if self.fan_on(next, x).is_some() {
                    if edges.len() < 4 {
                        return Err(violation("fan connector shorter than 4".into()));
                    }
                    self.attach_path(face, e, x, PathTemplate::ConnectFan)?;
                } else {
                    self.attach_path(face, e, x, PathTemplate::Base)?;
                }
                debug_assert_eq!(self.g.edge_id(x, c), Some(next));
                e = next;
            }
        }
        Ok(())
    }

    fn procedure_2(
        &mut self,
        face: usize,
        e: EdgeId,
        e_prime: EdgeId,
        a: Vertex,
        b: Vertex,
    ) -> Result<(), OrientError> {
        self.stats.procedure2 += 1;
        let (path, edges) = self.plan.faces.get(face).path_from(e, a);
        let (v2, v3) = (path[1], path[2]);
        let e2 = edges[1];
        let fan = self.fan_on(e2, v3).or_else(|| self.fan_on(e2, v2));
        let Some(fan) = fan else {
            self.attach_path(face, e, a, PathTemplate::Base)?;
            self.procedure_1(e_prime, a)?;
            let hub = if self.d(v3) == 2 { v3 } else { v2 };
            return self.procedure_1(e2, hub);
        };
        let mut prob = SearchProblem {
            fixed: vec![(a, self.d(a)), (b, self.d(b))],
            ..SearchProblem::default()
        };
        for i in 0..3 {
            prob.edges.push(SearchEdge {
                e: edges[i],
                from: path[i],
                to: path[i + 1],
            });
        }
        let next_face = if fan.k == 0 {
            fan.closing_face
        } else {
            fan.quad_faces[0]
        };
        let partner = self.other(e2, fan.hub);
        let (fp, fe) = self.plan.faces.get(next_face).path_from(e2, partner);
        for i in 0..fe.len() {
            prob.edges.push(SearchEdge {
                e: fe[i],
                from: fp[i],
                to: fp[i + 1],
            });
        }
        self.processed[face] = true;
        self.processed[next_face] = true;
        self.search(&prob)
    }

    /// Orients all faces of `fan`. The base partner ends at in-degree 3 and
    /// the hub keeps its in-degree; `c` ends at 1 (normal) or is left one
    /// short of 3 for the following fan (added).
    pub fn orient_fan(
        &mut self,
        fan: &FanDescriptor,
        variant: FanVariant,
    ) -> Result<(), OrientError> {
        self.stats.fans += 1;
        let hub = fan.hub;
        let partner = self.other(fan.base_edge, hub);
        let mut prob = SearchProblem {
            fixed: vec![(hub, self.d(hub)), (partner, 3)],
            ..SearchProblem::default()
        };
        let mut base = fan.base_edge;
        let mut w = partner;
        for &f in fan
            .quad_faces
            .iter()
            .chain(std::iter::once(&fan.closing_face))
        {
            let (p, pe) = self.plan.faces.get(f).path_from(base, w);
            for i in 0..pe.len() {
                prob.edges.push(SearchEdge {
                    e: pe[i],
                    from: p[i],
                    to: p[i + 1],
                });
            }
            w = p[p.len() - 2];
            base = self.edge(hub, w)?;
            self.processed[f] = true;
        }
        debug_assert_eq!(w, fan.c);
        match variant {
            FanVariant::Normal => {
                prob.fixed.push((fan.c, 1));
                prob.exempt.push(base);
            }
            FanVariant::Added => {
                prob.fixed.push((fan.c, 3));
                prob.pending.push((fan.c, 1));
            }
        }
        self.search(&prob)
    }
}

fn violation(msg: String) -> OrientError {
    OrientError::InvariantViolation(msg)
}
