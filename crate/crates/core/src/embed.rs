//! Outerplanar structure: outer cycles and inner faces of 2-connected
//! blocks, the weak dual tree, and the block / cut-vertex / bridge
//! decomposition.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::EmbedError;
use crate::graph::{EdgeId, Graph, Vertex};

/// Inner faces stored back to back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Faces {
    start: Vec<usize>,
    vertices: Vec<u32>,
    edges: Vec<u32>,
}

/// One inner face; `edges[i]` joins `vertices[i]` and `vertices[i + 1]`
/// (cyclically). Ids are stored as u32.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Face<'a> {
    pub vertices: &'a [u32],
    pub edges: &'a [u32],
}

impl Default for Faces {
    fn default() -> Self {
        Faces::with_capacity(0, 0)
    }
}

impl Faces {
    pub fn with_capacity(faces: usize, slots: usize) -> Self {
        let mut start = Vec::with_capacity(faces + 1);
        start.push(0);
        Faces {
            start,
            vertices: Vec::with_capacity(slots),
            edges: Vec::with_capacity(slots),
        }
    }

    /// Appends a face given its vertices and the edges between them.
    pub fn push(
        &mut self,
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = EdgeId>,
    ) {
        self.vertices.extend(vertices.into_iter().map(|v| v as u32));
        self.edges.extend(edges.into_iter().map(|e| e as u32));
        debug_assert_eq!(self.vertices.len(), self.edges.len());
        self.start.push(self.vertices.len());
    }

    pub fn len(&self) -> usize {
        self.start.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sum of the face lengths.
    pub fn total_len(&self) -> usize {
        self.vertices.len()
    }

    pub fn get(&self, f: usize) -> Face<'_> {
        let r = self.start[f]..self.start[f + 1];
        Face {
            vertices: &self.vertices[r.clone()],
            edges: &self.edges[r],
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Face<'_>> + '_ {
        (0..self.len()).map(|f| self.get(f))
    }

    /// Renames vertices through `vmap` and edges through `emap`.
    pub fn relabel(&self, vmap: &[Vertex], emap: &[EdgeId]) -> Faces {
        Faces {
            start: self.start.clone(),
            vertices: self
                .vertices
                .iter()
                .map(|&v| vmap[v as usize] as u32)
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&e| emap[e as usize] as u32)
                .collect(),
        }
    }
}

impl<'a> Face<'a> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> Vertex {
        self.vertices[i] as Vertex
    }

    pub fn edge(&self, i: usize) -> EdgeId {
        self.edges[i] as EdgeId
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.iter().any(|&w| w as Vertex == v)
    }

    /// The face boundary minus `edge`, read from endpoint `from` to the other
    /// endpoint of `edge`.
    pub fn path_from(&self, edge: EdgeId, from: Vertex) -> (Vec<Vertex>, Vec<EdgeId>) {
        let k = self.len();
        let i = self
            .edges
            .iter()
            .position(|&e| e as EdgeId == edge)
            .expect("edge lies on face");
        let mut verts = Vec::with_capacity(k);
        let mut edges = Vec::with_capacity(k - 1);
        // forward from vertices[i + 1] around to vertices[i]
        for j in 1..=k {
            verts.push(self.vertex((i + j) % k));
        }
        for j in 1..k {
            edges.push(self.edge((i + j) % k));
        }
        if verts[0] != from {
            debug_assert_eq!(verts[k - 1], from);
            verts.reverse();
            edges.reverse();
        }
        (verts, edges)
    }
}

/// Outerplanar embedding of one 2-connected block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    /// Hamiltonian cycle bounding the outer face, starting at vertex 0 of the
    /// block.
    pub outer_cycle: Vec<Vertex>,
    /// Bounded faces, each listed in outer-cycle order, with edge ids of the
    /// embedded graph.
    pub faces: Faces,
    pub chords: Vec<(Vertex, Vertex)>,
    /// For each chord, the two inner faces it separates (lower id first).
    pub chord_faces: Vec<(usize, usize)>,
}

impl Embedding {
    /// Diagnostic text: a `c` line with the outer cycle, then one
    /// `f v1 .. vk` line per inner face.
    pub fn to_text(&self) -> String {
        let mut out = String::from("c");
        for v in &self.outer_cycle {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
        for face in self.faces.iter() {
            out.push('f');
            for v in face.vertices {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        out
    }

    /// Renames vertices through `vmap` and edges through `emap` (local block
    /// ids to graph ids).
    pub fn relabel(&self, vmap: &[Vertex], emap: &[EdgeId]) -> Embedding {
        Embedding {
            outer_cycle: self.outer_cycle.iter().map(|&v| vmap[v]).collect(),
            faces: self.faces.relabel(vmap, emap),
            chords: self
                .chords
                .iter()
                .map(|&(u, v)| (vmap[u].min(vmap[v]), vmap[u].max(vmap[v])))
                .collect(),
            chord_faces: self.chord_faces.clone(),
        }
    }
}

const EXPANDED: u32 = 1 << 31;

/// Computes the outer cycle, chords and inner faces of a 2-connected block by
/// repeatedly eliminating a degree-2 vertex.
pub fn embed_block(block: &Graph) -> Result<Embedding, EmbedError> {
    let n = block.vertex_count();
    if n < 3 || block.edge_count() < n {
        return Err(EmbedError::NotBlock);
    }
    assert!(
        n < EXPANDED as usize,
        "block too large for 31-bit vertex ids"
    );
    // Flat neighbor lists of 32-bit ids. A removal frees a slot at both ends
    // before any virtual edge is added, so no list outgrows its original
    // degree. The top bit marks an expanded edge: it already stands for a
    // piece of the outer boundary and cannot absorb a second one.
    let mut off: Vec<u32> = Vec::with_capacity(n + 1);
    let mut slots: Vec<u32> = Vec::with_capacity(2 * block.edge_count());
    let mut cnt = vec![0u32; n];
    for v in 0..n {
        off.push(slots.len() as u32);
        slots.extend(block.neighbors(v).map(|(w, _)| w as u32));
        cnt[v] = block.degree(v) as u32;
    }
    let find = |slots: &[u32], cnt: &[u32], a: usize, w: u32| {
        let o = off[a] as usize;
        slots[o..o + cnt[a] as usize]
            .iter()
            .position(|&x| x & !EXPANDED == w)
            .map(|i| o + i)
    };
    let mut work: Vec<u32> = (0..n as u32)
        .rev()
        .filter(|&v| cnt[v as usize] == 2)
        .collect();
    let mut alive = vec![true; n];
    let mut alive_count = n;
    let mut removals: Vec<[u32; 3]> = Vec::with_capacity(n);

    while alive_count > 3 {
        let v = work.pop().ok_or(EmbedError::NotOuterplanar)?;
        let vi = v as usize;
        if !alive[vi] || cnt[vi] != 2 {
            continue;
        }
        let o = off[vi] as usize;
        let (a, b) = (slots[o] & !EXPANDED, slots[o + 1] & !EXPANDED);
        for x in [a as usize, b as usize] {
            let i = find(&slots, &cnt, x, v).expect("symmetric");
            cnt[x] -= 1;
            slots[i] = slots[off[x] as usize + cnt[x] as usize];
        }
        cnt[vi] = 0;
        alive[vi] = false;
        alive_count -= 1;
        let (ai, bi) = (a as usize, b as usize);
        match find(&slots, &cnt, ai, b) {
            Some(i) => {
                if slots[i] & EXPANDED != 0 {
                    return Err(EmbedError::NotOuterplanar);
                }
                slots[i] |= EXPANDED;
                let j = find(&slots, &cnt, bi, a).expect("symmetric");
                slots[j] |= EXPANDED;
            }
            None => {
                slots[off[ai] as usize + cnt[ai] as usize] = b | EXPANDED;
                cnt[ai] += 1;
                slots[off[bi] as usize + cnt[bi] as usize] = a | EXPANDED;
                cnt[bi] += 1;
            }
        }
        for w in [a, b] {
            if cnt[w as usize] == 2 {
                work.push(w);
            }
        }
        removals.push([v, a, b]);
    }

    let rest: Vec<Vertex> = (0..n).filter(|&v| alive[v]).collect();
    let [x, y, z] = rest[..] else {
        return Err(EmbedError::NotOuterplanar);
    };
    if rest.iter().any(|&v| cnt[v] != 2) {
        return Err(EmbedError::NotOuterplanar);
    }

    drop(slots);
    let mut next = vec![u32::MAX; n];
    for (s, t) in [(x, y), (y, z), (z, x)] {
        next[s] = t as u32;
    }
    for &[v, a, b] in removals.iter().rev() {
        let (s, t) = if next[a as usize] == b {
            (a, b)
        } else if next[b as usize] == a {
            (b, a)
        } else {
            return Err(EmbedError::NotOuterplanar);
        };
        next[s as usize] = v;
        next[v as usize] = t;
    }
    drop(removals);

    let mut cycle = Vec::with_capacity(n);
    let mut cur = 0;
    loop {
        cycle.push(cur);
        cur = next[cur] as usize;
        if cur == 0 || cycle.len() > n {
            break;
        }
    }
    if cycle.len() != n {
        return Err(EmbedError::NotOuterplanar);
    }
    // fixed direction: the smaller neighbor of vertex 0 comes second
    if cycle[1] > cycle[n - 1] {
        cycle[1..].reverse();
    }
    drop(next);
    let mut pos = vec![0u32; n];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i as u32;
    }
    // chords as position pairs (i < j) with their edge, ordered by i
    // ascending then j descending, then checked for crossings; the other
    // edges must be exactly the cycle
    let mut cycle_edge = vec![usize::MAX; n];
    let mut raw: Vec<(usize, usize, EdgeId)> = Vec::with_capacity(block.edge_count() - n);
    for (e, (u, v)) in block.edges().enumerate() {
        let (i, j) = (pos[u].min(pos[v]) as usize, pos[u].max(pos[v]) as usize);
        if j - i == 1 {
            cycle_edge[i] = e;
        } else if i == 0 && j == n - 1 {
            cycle_edge[j] = e;
        } else {
            raw.push((i, j, e));
        }
    }
    if cycle_edge.contains(&usize::MAX) {
        return Err(EmbedError::NotOuterplanar);
    }
    let by_j = bucket(&raw, n, |&(_, j, _)| n - 1 - j);
    let chord_pos = bucket(&by_j, n, |&(i, _, _)| i);
    let mut open: Vec<(usize, usize)> = Vec::new();
    for &(i, j, _) in &chord_pos {
        while open.last().is_some_and(|&(_, tj)| tj <= i) {
            open.pop();
        }
        if open.last().is_some_and(|&(_, tj)| j > tj) {
            return Err(EmbedError::NotOuterplanar);
        }
        open.push((i, j));
    }

    // Split the cycle along chords, innermost first. A stack entry is
    // (position, chord to the entry below or NONE, edge to the entry
    // below); the face that later pops a chord entry lies on the chord's
    // other side.
    let ends = bucket(&(0..chord_pos.len()).collect::<Vec<_>>(), n, |&c| {
        chord_pos[c].1
    });
    const NONE: usize = usize::MAX;
    let mut chord_faces = vec![(0, 0); chord_pos.len()];
    let mut faces = Faces::with_capacity(chord_pos.len() + 1, n + 2 * chord_pos.len());
    let mut stack: Vec<(usize, usize, EdgeId)> = Vec::with_capacity(n);
    let mut popped: Vec<(usize, EdgeId)> = Vec::new();
    let mut k = 0;
    for p in 0..n {
        stack.push((p, NONE, if p == 0 { NONE } else { cycle_edge[p - 1] }));
        // chords ending at p, larger start (inner) first
        let lo = k;
        while k < ends.len() && chord_pos[ends[k]].1 == p {
            k += 1;
        }
        for &c in ends[lo..k].iter().rev() {
            let (i, _, ce) = chord_pos[c];
            let f = faces.len();
            popped.clear();
            while stack.last().expect("chord start is on the stack").0 != i {
                let (q, tag, e) = stack.pop().expect("non-empty");
                if tag != NONE {
                    chord_faces[tag].1 = f;
                }
                popped.push((q, e));
            }
            faces.push(
                std::iter::once(cycle[i]).chain(popped.iter().rev().map(|&(q, _)| cycle[q])),
                popped
                    .iter()
                    .rev()
                    .map(|&(_, e)| e)
                    .chain(std::iter::once(ce)),
            );
            chord_faces[c].0 = f;
            stack.push((p, c, ce));
        }
    }
    let f = faces.len();
    for &(_, tag, _) in &stack {
        if tag != NONE {
            chord_faces[tag].1 = f;
        }
    }
    faces.push(
        stack.iter().map(|&(q, _, _)| cycle[q]),
        stack[1..]
            .iter()
            .map(|&(_, _, e)| e)
            .chain(std::iter::once(cycle_edge[n - 1])),
    );

    let chords = chord_pos
        .iter()
        .map(|&(i, j, _)| (cycle[i].min(cycle[j]), cycle[i].max(cycle[j])))
        .collect();
    Ok(Embedding {
        outer_cycle: cycle,
        faces,
        chords,
        chord_faces,
    })
}

/// Stable counting sort of `items` by a key below `keys`.
fn bucket<T: Copy>(items: &[T], keys: usize, key: impl Fn(&T) -> usize) -> Vec<T> {
    let mut start = vec![0usize; keys + 1];
    for x in items {
        start[key(x) + 1] += 1;
    }
    for i in 0..keys {
        start[i + 1] += start[i];
    }
    let Some(&first) = items.first() else {
        return Vec::new();
    };
    let mut out = vec![first; items.len()];
    for x in items {
        let slot = &mut start[key(x)];
        out[*slot] = *x;
        *slot += 1;
    }
    out
}

/// Weak dual of an outerplanar embedding: one node per inner face, one edge
/// per chord.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualTree {
    pub node_count: usize,
    /// `(face, face, shared graph edge)`.
    pub edges: Vec<(usize, usize, (Vertex, Vertex))>,
    start: Vec<usize>,
    adj: Vec<(usize, (Vertex, Vertex))>,
}

impl DualTree {
    pub fn neighbors(&self, face: usize) -> &[(usize, (Vertex, Vertex))] {
        &self.adj[self.start[face]..self.start[face + 1]]
    }

    pub fn degree(&self, face: usize) -> usize {
        self.start[face + 1] - self.start[face]
    }
}

pub fn dual_tree(e: &Embedding) -> DualTree {
    let faces = e.faces.len();
    let mut start = vec![0usize; faces + 1];
    for &(f, h) in &e.chord_faces {
        start[f + 1] += 1;
        start[h + 1] += 1;
    }
    for i in 0..faces {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut adj = vec![(0, (0, 0)); start[faces]];
    let mut edges = Vec::with_capacity(e.chords.len());
    for (&c, &(f, h)) in e.chords.iter().zip(&e.chord_faces) {
        edges.push((f, h, c));
        adj[fill[f]] = (h, c);
        fill[f] += 1;
        adj[fill[h]] = (f, c);
        fill[h] += 1;
    }
    DualTree {
        node_count: faces,
        edges,
        start,
        adj,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub edges: Vec<EdgeId>,
    /// In order of first appearance along `edges`.
    pub vertices: Vec<Vertex>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }
}

/// One step of the breadth-first walk over the block tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockVisit {
    pub block: usize,
    /// Cut vertex shared with the already visited part; `None` for a root.
    pub parent_cut: Option<Vertex>,
    pub parent_block: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Blocks in discovery order; a bridge is a block with one edge.
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<Vertex>,
    pub bridges: Vec<EdgeId>,
    /// Blocks containing `v` are `block_ids[block_start[v]..block_start[v + 1]]`.
    block_start: Vec<usize>,
    block_ids: Vec<usize>,
    /// Breadth-first order over every component's block tree.
    pub order: Vec<BlockVisit>,
    /// One root block per connected component with at least one edge.
    pub roots: Vec<usize>,
}

impl BlockDecomposition {
    /// Blocks containing `v`, ascending.
    pub fn blocks_of(&self, v: Vertex) -> &[usize] {
        &self.block_ids[self.block_start[v]..self.block_start[v + 1]]
    }

    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.blocks_of(v).len() > 1
    }

    /// Edges of the bipartite block tree as `(block, cut vertex)` pairs.
    pub fn tree_edges(&self) -> Vec<(usize, Vertex)> {
        let mut out = Vec::new();
        for &c in &self.cut_vertices {
            for &b in self.blocks_of(c) {
                out.push((b, c));
            }
        }
        out
    }
}

/// Biconnected components by an iterative lowpoint search, then a
/// breadth-first walk of the block tree. Each component is rooted at its
/// lowest-id block with at least three vertices (or its lowest-id block if it
/// has none). Children hanging off a cut vertex are visited cycle blocks
/// first, then bridges, each group in ascending id.
pub fn decompose_blocks(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut blocks: Vec<Block> = Vec::new();
    // (vertex, parent edge, next neighbor index)
    let mut frames: Vec<(Vertex, EdgeId, usize)> = Vec::new();
    let mut mark = vec![usize::MAX; n];

    for s in 0..n {
        if disc[s] != usize::MAX {
            continue;
        }
        disc[s] = timer;
        low[s] = timer;
        timer += 1;
        frames.push((s, usize::MAX, 0));
        while let Some(top) = frames.last_mut() {
            let (v, pe, idx) = *top;
            if let Some((w, e)) = g.neighbor(v, idx) {
                top.2 += 1;
                if e == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    frames.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(p, _, _)) = frames.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut edges = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            edges.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        edges.reverse();
                        blocks.push(make_block(g, edges, &mut mark));
                    }
                }
            }
        }
    }

    let mut block_start = vec![0usize; n + 1];
    for b in &blocks {
        for &v in &b.vertices {
            block_start[v + 1] += 1;
        }
    }
    for v in 0..n {
        block_start[v + 1] += block_start[v];
    }
    let mut fill = block_start.clone();
    let mut block_ids = vec![0; block_start[n]];
    for (i, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            block_ids[fill[v]] = i;
            fill[v] += 1;
        }
    }
    let blocks_of = |v: Vertex| &block_ids[block_start[v]..block_start[v + 1]];
    let cut_vertices: Vec<Vertex> = (0..n).filter(|&v| blocks_of(v).len() > 1).collect();
    let bridges = blocks
        .iter()
        .filter(|b| b.is_bridge())
        .map(|b| b.edges[0])
        .collect();

    // breadth-first over the block tree of each component
    let mut seen = vec![false; blocks.len()];
    let mut cut_done = vec![false; n];
    let mut order = Vec::with_capacity(blocks.len());
    let mut roots = Vec::new();
    let mut comp_of_block = vec![usize::MAX; blocks.len()];
    // group blocks by component to pick roots
    let mut comp = 0;
    for start in 0..blocks.len() {
        if comp_of_block[start] != usize::MAX {
            continue;
        }
        let mut queue = VecDeque::from([start]);
        comp_of_block[start] = comp;
        let mut members = vec![start];
        while let Some(b) = queue.pop_front() {
            for &v in &blocks[b].vertices {
                for &nb in blocks_of(v) {
                    if comp_of_block[nb] == usize::MAX {
                        comp_of_block[nb] = comp;
                        members.push(nb);
                        queue.push_back(nb);
                    }
                }
            }
        }
        let root = members
            .iter()
            .copied()
            .filter(|&b| !blocks[b].is_bridge())
            .min()
            .unwrap_or_else(|| *members.iter().min().expect("non-empty"));
        roots.push(root);
        comp += 1;
    }
    for &root in &roots {
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        order.push(BlockVisit {
            block: root,
            parent_cut: None,
            parent_block: None,
        });
        while let Some(b) = queue.pop_front() {
            let mut cuts: Vec<Vertex> = blocks[b]
                .vertices
                .iter()
                .copied()
                .filter(|&v| blocks_of(v).len() > 1 && !cut_done[v])
                .collect();
            cuts.sort_unstable();
            for c in cuts {
                cut_done[c] = true;
                let mut children: Vec<usize> =
                    blocks_of(c).iter().copied().filter(|&x| !seen[x]).collect();
                children.sort_unstable_by_key(|&x| (blocks[x].is_bridge(), x));
                for child in children {
                    seen[child] = true;
                    order.push(BlockVisit {
                        block: child,
                        parent_cut: Some(c),
                        parent_block: Some(b),
                    });
                    queue.push_back(child);
                }
            }
        }
    }

    BlockDecomposition {
        blocks,
        cut_vertices,
        bridges,
        block_start,
        block_ids,
        order,
        roots,
    }
}

/// `mark[v]` remembers the last block that listed `v`.
fn make_block(g: &Graph, edges: Vec<EdgeId>, mark: &mut [usize]) -> Block {
    let id = edges[0];
    let mut vertices = Vec::new();
    for &e in &edges {
        let (u, v) = g.edge(e);
        for w in [u, v] {
            if mark[w] != id {
                mark[w] = id;
                vertices.push(w);
            }
        }
    }
    Block { edges, vertices }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GraphClass {
    pub is_connected: bool,
    pub is_outerplanar: bool,
    pub is_2connected: bool,
    pub is_bridgeless: bool,
    pub is_tree_free: bool,
    pub is_triangle_free: bool,
}

pub fn is_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for (w, _) in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Exact triangle test: for every edge, look for a common neighbor.
pub fn is_triangle_free(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut mark = vec![usize::MAX; n];
    for (e, (u, v)) in g.edges().enumerate() {
        let (s, t) = if g.degree(u) <= g.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        for (w, _) in g.neighbors(s) {
            mark[w] = e;
        }
        if g.neighbors(t).any(|(w, _)| mark[w] == e) {
            return false;
        }
    }
    true
}

pub fn classify(g: &Graph) -> GraphClass {
    let dec = decompose_blocks(g);
    classify_with(g, &dec)
}

pub fn classify_with(g: &Graph, dec: &BlockDecomposition) -> GraphClass {
    class_flags(g, dec, embed_blocks(g, dec).ok().as_deref())
}

/// Embeds every non-bridge block, in block order (`None` for bridges).
pub fn embed_blocks(
    g: &Graph,
    dec: &BlockDecomposition,
) -> Result<Vec<Option<Embedding>>, EmbedError> {
    dec.blocks
        .iter()
        .map(|b| {
            if b.is_bridge() {
                return Ok(None);
            }
            if b.edges.len() == g.edge_count() {
                return embed_block(g).map(Some);
            }
            let (sub, map) = g.edge_subgraph(&b.edges);
            embed_block(&sub).map(|e| Some(e.relabel(&map, &b.edges)))
        })
        .collect()
}

/// Class flags given the block decomposition and whether every block is
/// outerplanar.
/// Class flags from a decomposition and, when every block embedded, the
/// embeddings. In an outerplanar graph every triangle bounds an inner face,
/// so the faces settle triangle-freeness.
pub fn class_flags(
    g: &Graph,
    dec: &BlockDecomposition,
    embeddings: Option<&[Option<Embedding>]>,
) -> GraphClass {
    let n = g.vertex_count();
    let isolated = (0..n).any(|v| dec.blocks_of(v).is_empty());
    let is_connected = n <= 1 || (dec.roots.len() == 1 && !isolated);
    let mut in_cycle_block = vec![false; n];
    for b in dec.blocks.iter().filter(|b| !b.is_bridge()) {
        for &v in &b.vertices {
            in_cycle_block[v] = true;
        }
    }
    let is_triangle_free = match embeddings {
        Some(embs) => embs
            .iter()
            .flatten()
            .all(|e| e.faces.iter().all(|f| f.len() > 3)),
        None => is_triangle_free(g),
    };
    GraphClass {
        is_connected,
        is_outerplanar: embeddings.is_some(),
        is_2connected: is_connected
            && n >= 3
            && dec.blocks.len() == 1
            && !dec.blocks[0].is_bridge(),
        is_bridgeless: dec.bridges.is_empty(),
        is_tree_free: in_cycle_block.iter().all(|&x| x),
        is_triangle_free,
    }
}
