//! Whole-graph entry points: one block, bridgeless graphs glued at cut
//! vertices, and tree-free graphs with bridges between blocks.

use std::fmt;

use crate::embed::{
    class_flags, classify_with, decompose_blocks, dual_tree, embed_block, embed_blocks, DualTree,
    Embedding, Faces, GraphClass,
};
use crate::error::OrientError;
use crate::graph::{delta_orientation, EdgeId, Graph, Orientation, PartialOrientation, Vertex};
use crate::orient::plan::{build_plan, default_root};
use crate::orient::state::{OrienterState, OrienterStats};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    TwoConnected,
    Bridgeless,
    Treefree,
    FallbackDelta,
}

impl Mode {
    /// Largest in-degree the mode promises.
    pub fn bound(self, g: &Graph) -> u32 {
        match self {
            Mode::TwoConnected => 3,
            Mode::Bridgeless | Mode::Treefree => 4,
            Mode::FallbackDelta => g.max_degree() as u32,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::TwoConnected => "2connected",
            Mode::Bridgeless => "bridgeless",
            Mode::Treefree => "treefree",
            Mode::FallbackDelta => "fallback-delta",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "2connected" => Ok(Mode::TwoConnected),
            "bridgeless" => Ok(Mode::Bridgeless),
            "treefree" => Ok(Mode::Treefree),
            "fallback-delta" | "delta" => Ok(Mode::FallbackDelta),
            _ => Err(format!("unknown mode {s:?}")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Oriented {
    pub orientation: Orientation,
    pub mode: Mode,
    pub stats: OrienterStats,
}

/// Orients a triangle-free 2-connected outerplanar block given its
/// embedding.
pub fn orient_block(g: &Graph, emb: &Embedding) -> Result<Orientation, OrientError> {
    orient_block_rooted(g, emb, None).map(|(o, _)| o)
}

/// As [`orient_block`], with an explicit root face and the run statistics.
pub fn orient_block_rooted(
    g: &Graph,
    emb: &Embedding,
    root: Option<usize>,
) -> Result<(Orientation, OrienterStats), OrientError> {
    let dual = dual_tree(emb);
    let root = root.unwrap_or_else(|| default_root(&dual));
    let Localized {
        graph,
        emb,
        old_vertex,
        old_edge,
    } = Localized::new(g, emb, &dual, root);
    let dual = dual_tree(&emb);
    let plan = build_plan(&graph, emb.faces, &dual, 0);
    let mut st = OrienterState::new(&graph, plan, PartialOrientation::new(&graph), None);
    st.run()?;
    let stats = st.stats.clone();
    let partial = st.into_partial();
    let local_heads = partial.heads().ok_or_else(undirected)?;
    let mut heads = vec![0; g.edge_count()];
    for (e, &h) in local_heads.iter().enumerate() {
        heads[old_edge[e]] = old_vertex[h];
    }
    let o = Orientation::from_heads(g, &heads)
        .map_err(|e| OrientError::InvariantViolation(e.to_string()))?;
    let o = verify(o, 3)?;
    Ok((o, stats))
}

/// A copy of one block with faces, vertices and edges numbered in the order
/// the construction reaches them, so the main loop walks memory mostly
/// forwards. The root face becomes face 0.
struct Localized {
    graph: Graph,
    emb: Embedding,
    old_vertex: Vec<Vertex>,
    old_edge: Vec<EdgeId>,
}

impl Localized {
    fn new(g: &Graph, emb: &Embedding, dual: &DualTree, root: usize) -> Self {
        let faces = emb.faces.len();
        let mut order = Vec::with_capacity(faces);
        let mut new_face = vec![usize::MAX; faces];
        let mut next: Vec<(usize, (Vertex, Vertex))> = Vec::new();
        new_face[root] = 0;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let f = order[head];
            head += 1;
            next.clear();
            next.extend(
                dual.neighbors(f)
                    .iter()
                    .copied()
                    .filter(|&(h, _)| new_face[h] == usize::MAX),
            );
            next.sort_unstable();
            for &(h, _) in &next {
                new_face[h] = order.len();
                order.push(h);
            }
        }

        const UNSEEN: u32 = u32::MAX;
        let mut new_vertex = vec![UNSEEN; g.vertex_count()];
        let mut new_edge = vec![UNSEEN; g.edge_count()];
        let mut old_vertex = Vec::with_capacity(emb.outer_cycle.len());
        let mut old_edge = Vec::with_capacity(emb.outer_cycle.len() + emb.chords.len());
        let mut faces = Faces::with_capacity(order.len(), 2 * g.edge_count());
        for &f in &order {
            let face = emb.faces.get(f);
            for (&v, &e) in face.vertices.iter().zip(face.edges) {
                let (v, e) = (v as usize, e as usize);
                if new_vertex[v] == UNSEEN {
                    new_vertex[v] = old_vertex.len() as u32;
                    old_vertex.push(v);
                }
                if new_edge[e] == UNSEEN {
                    new_edge[e] = old_edge.len() as u32;
                    old_edge.push(e);
                }
            }
            faces.push(
                face.vertices
                    .iter()
                    .map(|&v| new_vertex[v as usize] as Vertex),
                face.edges.iter().map(|&e| new_edge[e as usize] as EdgeId),
            );
        }
        let graph = Graph::new_unchecked(
            old_vertex.len(),
            old_edge.iter().map(|&e| {
                let (u, v) = g.edge(e);
                (new_vertex[u] as Vertex, new_vertex[v] as Vertex)
            }),
        );
        let emb = Embedding {
            outer_cycle: emb
                .outer_cycle
                .iter()
                .map(|&v| new_vertex[v] as Vertex)
                .collect(),
            faces,
            chords: emb
                .chords
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (new_vertex[u] as Vertex, new_vertex[v] as Vertex);
                    (a.min(b), a.max(b))
                })
                .collect(),
            chord_faces: emb
                .chord_faces
                .iter()
                .map(|&(f, h)| {
                    let (a, b) = (new_face[f], new_face[h]);
                    (a.min(b), a.max(b))
                })
                .collect(),
        };
        Localized {
            graph,
            emb,
            old_vertex,
            old_edge,
        }
    }
}

fn undirected() -> OrientError {
    OrientError::InvariantViolation("some edges were never directed".into())
}

fn finish(partial: PartialOrientation, bound: u32) -> Result<Orientation, OrientError> {
    verify(partial.into_orientation().ok_or_else(undirected)?, bound)
}

/// Properness and the in-degree bound, checked on the final output.
fn verify(o: Orientation, bound: u32) -> Result<Orientation, OrientError> {
    if let Some((u, v)) = o.violations().first() {
        return Err(OrientError::InvariantViolation(format!(
            "output has equal in-degrees on {u}-{v}"
        )));
    }
    if o.max_indegree() > bound {
        return Err(OrientError::InvariantViolation(format!(
            "output reaches in-degree {} above {bound}",
            o.max_indegree()
        )));
    }
    Ok(o)
}

fn require(class: &GraphClass, mode: Mode) -> Result<(), OrientError> {
    let mut missing = Vec::new();
    if !class.is_outerplanar {
        missing.push("outerplanar");
    }
    if !class.is_triangle_free {
        missing.push("triangle-free");
    }
    match mode {
        Mode::TwoConnected if !class.is_2connected => missing.push("2-connected"),
        Mode::Bridgeless if !class.is_bridgeless => missing.push("bridgeless"),
        Mode::Bridgeless if !class.is_tree_free => missing.push("blocks of 3 or more vertices"),
        Mode::Treefree if !class.is_tree_free => missing.push("tree-free"),
        _ => {}
    }
    if missing.is_empty() {
        Ok(())
    } else {
        Err(OrientError::ClassMismatch(format!(
            "not {}",
            missing.join(", ")
        )))
    }
}

pub fn orient_2connected(g: &Graph) -> Result<Oriented, OrientError> {
    orient_in_mode(g, Mode::TwoConnected)
}

pub fn orient_bridgeless(g: &Graph) -> Result<Oriented, OrientError> {
    orient_in_mode(g, Mode::Bridgeless)
}

pub fn orient_treefree(g: &Graph) -> Result<Oriented, OrientError> {
    orient_in_mode(g, Mode::Treefree)
}

/// Runs one driver after checking its class precondition.
pub fn orient_in_mode(g: &Graph, mode: Mode) -> Result<Oriented, OrientError> {
    if mode == Mode::FallbackDelta {
        return Ok(Oriented {
            orientation: delta_orientation(g),
            mode,
            stats: OrienterStats::default(),
        });
    }
    if mode == Mode::TwoConnected && g.vertex_count() >= 3 {
        // an embedding has a Hamiltonian outer cycle, so it certifies
        // 2-connectivity on its own
        if let Ok(emb) = embed_block(g) {
            if emb.faces.iter().any(|f| f.len() == 3) {
                return Err(OrientError::ClassMismatch("not triangle-free".into()));
            }
            let (orientation, stats) = orient_block_rooted(g, &emb, None)?;
            return Ok(Oriented {
                orientation,
                mode,
                stats,
            });
        }
    }
    let dec = decompose_blocks(g);
    let embeddings = embed_blocks(g, &dec);
    let class = class_flags(g, &dec, embeddings.as_deref().ok());
    require(&class, mode)?;
    let embeddings = embeddings?;
    if mode == Mode::TwoConnected {
        let emb = embeddings[0]
            .as_ref()
            .expect("a 2-connected graph is one cycle block");
        let (orientation, stats) = orient_block_rooted(g, emb, None)?;
        return Ok(Oriented {
            orientation,
            mode,
            stats,
        });
    }
    let mut partial = PartialOrientation::new(g);
    let mut stats = OrienterStats::default();
    for visit in &dec.order {
        let Some(emb) = &embeddings[visit.block] else {
            let e = dec.blocks[visit.block].edges[0];
            let (u, v) = g.edge(e);
            let head = match visit.parent_cut {
                Some(p) if p == u => v,
                Some(_) => u,
                None => v,
            };
            partial.direct(e, head);
            partial.commit();
            continue;
        };
        let dual = dual_tree(emb);
        let root = match visit.parent_cut {
            Some(v) => lowest_face_with(emb, v)?,
            None => default_root(&dual),
        };
        let plan = build_plan(g, emb.faces.clone(), &dual, root);
        let mut st = OrienterState::new(g, plan, partial, visit.parent_cut);
        st.run()?;
        add_stats(&mut stats, &st.stats);
        partial = st.into_partial();
    }
    let orientation = finish(partial, 4)?;
    Ok(Oriented {
        orientation,
        mode,
        stats,
    })
}

fn lowest_face_with(emb: &Embedding, v: Vertex) -> Result<usize, OrientError> {
    emb.faces
        .iter()
        .position(|f| f.contains_vertex(v))
        .ok_or_else(|| OrientError::InvariantViolation(format!("cut vertex {v} is on no face")))
}

fn add_stats(total: &mut OrienterStats, s: &OrienterStats) {
    total.a1 += s.a1;
    total.a2 += s.a2;
    total.a3 += s.a3;
    total.a4 += s.a4;
    total.fans += s.fans;
    total.procedure1 += s.procedure1;
    total.procedure2 += s.procedure2;
    total.searches += s.searches;
    total.retries += s.retries;
    total.steps_checked += s.steps_checked;
}

/// Strongest applicable driver: 2-connected, then bridgeless, then
/// tree-free. With `fallback`, out-of-class inputs get the reference
/// orientation instead of an error.
pub fn orient_auto(g: &Graph, fallback: bool) -> Result<Oriented, OrientError> {
    let dec = decompose_blocks(g);
    let class = classify_with(g, &dec);
    let mode = [Mode::TwoConnected, Mode::Bridgeless, Mode::Treefree]
        .into_iter()
        .find(|&m| require(&class, m).is_ok());
    match mode {
        Some(m) => orient_in_mode(g, m),
        None if fallback => orient_in_mode(g, Mode::FallbackDelta),
        None => Err(require(&class, Mode::Treefree).unwrap_err()),
    }
}
