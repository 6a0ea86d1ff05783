//! A fan in isolation: the 4-cycle of [`gen_fan`] oriented so that the hub
//! has in-degree 2 and the partner is one arc short of 2, then the fan
//! oriented on its own.
//!
//! Inside the main loop the partner already carries the in-degree-2 end of
//! the path just attached when a fan is oriented. A 4-cycle cannot give the
//! hub and the partner in-degree 2 at once, so that arc is modelled by a
//! pending +1 at the partner, included in every in-degree reported here.

use crate::embed::{dual_tree, embed_block};
use crate::error::OrientError;
use crate::generators::gen_fan;
use crate::graph::{Graph, PartialOrientation, Vertex};
use crate::orient::plan::build_plan;
use crate::orient::state::{FanVariant, OrienterState};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanRun {
    pub graph: Graph,
    pub partner: Vertex,
    pub hub: Vertex,
    /// Pentagon vertex next to the hub, per fan oriented.
    pub c: Vec<Vertex>,
    /// In-degrees before the fan, pending arc included.
    pub before: Vec<u32>,
    /// In-degrees after, pending arc included.
    pub after: Vec<u32>,
    /// `(tail, head)` of every edge outside the 4-cycle, by edge id.
    pub fan_arcs: Vec<(Vertex, Vertex)>,
}

impl FanRun {
    /// Fan arcs as `t>h` tokens separated by spaces.
    pub fn pattern(&self) -> String {
        self.fan_arcs
            .iter()
            .map(|(t, h)| format!("{t}>{h}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Orients a `k`-fan with `variant`, then, if `follow_on` is given, the
/// `k'`-fan added on the hub edge it leaves behind (normal variant).
pub fn run_fan(
    k: usize,
    variant: FanVariant,
    follow_on: Option<usize>,
) -> Result<FanRun, OrientError> {
    let inst = gen_fan(k, follow_on);
    let g = &inst.graph;
    let (partner, hub) = inst.base_edge;
    let emb = embed_block(g).map_err(|e| OrientError::InvariantViolation(e.to_string()))?;
    let dual = dual_tree(&emb);
    let square = emb
        .faces
        .iter()
        .position(|f| f.len() == 4 && f.contains_vertex(2) && f.contains_vertex(3))
        .expect("gen_fan has the 4-cycle as a face");
    let plan = build_plan(g, emb.faces, &dual, square);

    let mut partial = PartialOrientation::new(g);
    let e = |u, v| g.edge_id(u, v).expect("4-cycle edge");
    // in-degrees 1, 2, 1, 0 around 0, 1, 2, 3
    partial.direct(e(0, 1), 1);
    partial.direct(e(1, 2), 1);
    partial.direct(e(2, 3), 2);
    partial.direct(e(3, 0), 0);
    partial.bump(partner, 1);
    partial.commit();
    let before = partial.indegrees().to_vec();

    let mut st = OrienterState::new(g, plan, partial, None);
    let base = e(partner, hub);
    let fan = st
        .fan_on(base, hub)
        .ok_or_else(|| OrientError::InvariantViolation("no fan on the base edge".into()))?;
    st.orient_fan(&fan, variant)?;
    let mut c = vec![fan.c];
    if follow_on.is_some() {
        let next = g.edge_id(hub, fan.c).expect("hub edge");
        let second = st
            .fan_on(next, hub)
            .ok_or_else(|| OrientError::InvariantViolation("no follow-on fan".into()))?;
        st.orient_fan(&second, FanVariant::Normal)?;
        c.push(second.c);
    }
    let partial = st.into_partial();
    let fan_arcs = (4..g.edge_count())
        .map(|e| {
            partial
                .arc(e)
                .ok_or_else(|| OrientError::InvariantViolation(format!("edge {e} undirected")))
        })
        .collect::<Result<_, _>>()?;
    Ok(FanRun {
        graph: g.clone(),
        partner,
        hub,
        c,
        before,
        after: partial.indegrees().to_vec(),
        fan_arcs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_fan_normal() {
        let r = run_fan(0, FanVariant::Normal, None).unwrap();
        assert_eq!(r.before[r.hub], 2);
        assert_eq!(r.after[r.partner], 3);
        assert_eq!(r.after[r.hub], 2);
        assert_eq!(r.after[r.c[0]], 1);
        assert_eq!(r.fan_arcs.len(), 4);
    }

    #[test]
    fn added_then_follow_on() {
        let r = run_fan(1, FanVariant::Added, Some(0)).unwrap();
        assert_eq!(r.after[r.c[0]], 3);
        assert_eq!(r.after[r.hub], 2);
    }
}
