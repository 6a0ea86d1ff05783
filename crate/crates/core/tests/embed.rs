use pon_core::embed::{
    classify, decompose_blocks, dual_tree, embed_block, is_connected, is_triangle_free, Embedding,
};
use pon_core::generators::{
    gen_composite, gen_fan, gen_quad_chain, gen_random_2connected, gen_tightness, CompositeMode,
    GenParams,
};
use pon_core::orient::{build_plan, detect_fan};
use pon_core::Graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check_faces(g: &Graph, emb: &Embedding) {
    let (n, m) = (g.vertex_count(), g.edge_count());
    assert_eq!(emb.faces.len(), m - n + 1);
    let total: usize = emb.faces.iter().map(|f| f.len()).sum();
    assert_eq!(total, 2 * m - n);
    let mut uses = vec![0usize; m];
    for f in emb.faces.iter() {
        let k = f.len();
        for i in 0..k {
            let (u, v) = (f.vertex(i), f.vertex((i + 1) % k));
            assert_eq!(g.edge_id(u, v), Some(f.edge(i)), "face edge {u}-{v}");
            uses[f.edge(i)] += 1;
            // chordless
            for j in i + 2..k {
                if i == 0 && j == k - 1 {
                    continue;
                }
                assert!(
                    !g.has_edge(u, f.vertex(j)),
                    "face has chord {u}-{}",
                    f.vertex(j)
                );
            }
        }
    }
    let outer: std::collections::HashSet<_> = (0..n)
        .map(|i| {
            let (u, v) = (emb.outer_cycle[i], emb.outer_cycle[(i + 1) % n]);
            g.edge_id(u, v).expect("outer cycle edge")
        })
        .collect();
    assert_eq!(outer.len(), n);
    for (e, &c) in uses.iter().enumerate() {
        assert_eq!(c, if outer.contains(&e) { 1 } else { 2 }, "edge {e}");
    }
}

/// Adds up to `chords` random chords inside faces, keeping the graph
/// outerplanar; short chords make triangles.
fn with_chords(g: &Graph, seed: u64, chords: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let emb = embed_block(g).unwrap();
    let mut edges: Vec<_> = g.edges().collect();
    let mut faces: Vec<Vec<usize>> = emb
        .faces
        .iter()
        .map(|f| (0..f.len()).map(|i| f.vertex(i)).collect())
        .collect();
    for _ in 0..chords {
        let idx = rng.gen_range(0..faces.len());
        let f = faces[idx].clone();
        if f.len() < 4 {
            continue;
        }
        let i = rng.gen_range(0..f.len());
        let j = (i + rng.gen_range(2..f.len() - 1)) % f.len();
        edges.push((f[i], f[j]));
        let (lo, hi) = (i.min(j), i.max(j));
        faces[idx] = f[lo..=hi].to_vec();
        faces.push(f[hi..].iter().chain(&f[..=lo]).copied().collect());
    }
    Graph::new(g.vertex_count(), edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn faces_of_random_blocks(seed in any::<u64>(), n in 4usize..120, q in 0.0f64..0.6) {
        let g = gen_random_2connected(&GenParams::new(seed, n).with_fan_bias(q));
        let emb = embed_block(&g).unwrap();
        check_faces(&g, &emb);
        prop_assert!(emb.faces.iter().all(|f| f.len() >= 4));
    }

    #[test]
    fn faces_with_chords(seed in any::<u64>(), n in 4usize..80, chords in 0usize..10) {
        let g = with_chords(&gen_random_2connected(&GenParams::new(seed, n)), seed, chords);
        let emb = embed_block(&g).unwrap();
        check_faces(&g, &emb);
    }

    #[test]
    fn triangle_free_iff_no_three_face(seed in any::<u64>(), n in 4usize..60, chords in 0usize..6) {
        let g = with_chords(&gen_random_2connected(&GenParams::new(seed, n)), seed ^ 1, chords);
        let emb = embed_block(&g).unwrap();
        let no_three = emb.faces.iter().all(|f| f.len() > 3);
        prop_assert_eq!(no_three, is_triangle_free(&g));
        prop_assert_eq!(classify(&g).is_triangle_free, is_triangle_free(&g));
    }

    #[test]
    fn bridges_are_exactly_the_disconnecting_edges(seed in any::<u64>(), blocks in 1usize..6) {
        let p = GenParams::new(seed, 8 * blocks).with_blocks(blocks);
        let g = gen_composite(&p, CompositeMode::Treefree);
        let dec = decompose_blocks(&g);
        for e in 0..g.edge_count() {
            let rest = Graph::new(
                g.vertex_count(),
                g.edges().enumerate().filter(|&(i, _)| i != e).map(|(_, x)| x),
            )
            .unwrap();
            prop_assert_eq!(dec.bridges.contains(&e), !is_connected(&rest), "edge {}", e);
        }
    }
}

#[test]
fn k4_k23_and_a_prism_are_rejected() {
    let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert!(embed_block(&k4).is_err());
    let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
    assert!(embed_block(&k23).is_err());
    // K2,3 subdivided
    let sub = Graph::new(
        7,
        [
            (0, 2),
            (2, 5),
            (5, 1),
            (0, 3),
            (3, 1),
            (0, 4),
            (4, 6),
            (6, 1),
        ],
    )
    .unwrap();
    assert!(embed_block(&sub).is_err());
    assert!(!classify(&sub).is_outerplanar);
}

#[test]
fn tightness_dual_is_a_star() {
    let g = gen_tightness();
    let emb = embed_block(&g).unwrap();
    let d = dual_tree(&emb);
    assert_eq!(d.node_count, 6);
    let center = (0..6)
        .find(|&f| d.degree(f) == 5)
        .expect("a face meets all others");
    assert!((0..6).filter(|&f| f != center).all(|f| d.degree(f) == 1));
    assert!(emb.faces.iter().all(|f| f.len() == 5));
}

#[test]
fn fan_dual_is_a_path() {
    let g = gen_fan(3, None).graph;
    let emb = embed_block(&g).unwrap();
    let d = dual_tree(&emb);
    assert_eq!(d.node_count, 5);
    let mut degrees: Vec<_> = (0..5).map(|f| d.degree(f)).collect();
    degrees.sort();
    assert_eq!(degrees, vec![1, 1, 2, 2, 2]);
    let lengths: Vec<_> = emb.faces.iter().map(|f| f.len()).collect();
    assert_eq!(lengths.iter().filter(|&&l| l == 4).count(), 4);
    assert_eq!(lengths.iter().filter(|&&l| l == 5).count(), 1);
}

fn face_with(emb: &Embedding, vs: &[usize]) -> usize {
    emb.faces
        .iter()
        .position(|f| vs.iter().all(|&v| f.contains_vertex(v)))
        .unwrap()
}

#[test]
fn tightness_plan_from_the_center() {
    let g = gen_tightness();
    let emb = embed_block(&g).unwrap();
    let d = dual_tree(&emb);
    let center = face_with(&emb, &[0, 1, 2, 3, 4]);
    let plan = build_plan(&g, emb.faces.clone(), &d, center);
    assert_eq!(plan.root_face, center);
    assert_eq!(plan.steps.len(), 5);
    let mut shared: Vec<_> = plan.steps.iter().map(|s| s.shared_edge).collect();
    shared.sort();
    shared.dedup();
    assert_eq!(shared.len(), 5);
    for i in 0..5 {
        let (path, edges) = plan.step_path(i);
        assert_eq!(edges.len(), 4);
        assert!(path[0] < 5 && path[4] < 5);
    }
    // every central edge is active before its step
    for s in &plan.steps {
        assert!(plan.activity(s.shared_edge).is_some());
    }
}

#[test]
fn fan_plan_from_the_base() {
    for k in 0..5 {
        let g = gen_fan(k, None).graph;
        let emb = embed_block(&g).unwrap();
        let d = dual_tree(&emb);
        let base = face_with(&emb, &[0, 1, 2, 3]);
        let plan = build_plan(&g, emb.faces.clone(), &d, base);
        let lens: Vec<_> = (0..plan.steps.len())
            .map(|i| plan.step_path(i).1.len())
            .collect();
        let mut want = vec![3; k];
        want.push(4);
        assert_eq!(lens, want, "k={k}");
    }
}

#[test]
fn detect_fan_examples() {
    let plan_at_base = |g: &Graph| {
        let emb = embed_block(g).unwrap();
        let d = dual_tree(&emb);
        let base = face_with(&emb, &[0, 1, 2, 3]);
        build_plan(g, emb.faces.clone(), &d, base)
    };

    let g = gen_fan(3, None).graph;
    let plan = plan_at_base(&g);
    let base = g.edge_id(0, 1).unwrap();
    let fan = detect_fan(&g, &plan, base, 1, |_| true).unwrap();
    assert_eq!(fan.k, 3);
    assert_eq!(fan.quad_faces.len(), 3);
    assert!(fan.follow_on.is_none());

    let g = gen_fan(0, None).graph;
    let plan = plan_at_base(&g);
    let fan = detect_fan(&g, &plan, g.edge_id(0, 1).unwrap(), 1, |_| true).unwrap();
    assert_eq!(fan.k, 0);

    let g = gen_quad_chain(3).graph;
    let plan = plan_at_base(&g);
    assert!(detect_fan(&g, &plan, g.edge_id(0, 1).unwrap(), 1, |_| true).is_none());

    let inst = gen_fan(2, Some(1));
    let plan = plan_at_base(&inst.graph);
    let fan = detect_fan(
        &inst.graph,
        &plan,
        inst.graph.edge_id(0, 1).unwrap(),
        1,
        |_| true,
    )
    .unwrap();
    assert_eq!(fan.k, 2);
    assert_eq!(fan.c, inst.c[0]);
    assert_eq!(fan.follow_on.as_ref().map(|f| f.k), Some(1));
    assert_eq!(fan.depth(), 2);
}

#[test]
fn composites_classify_as_advertised() {
    for seed in 0..40 {
        let p = GenParams::new(seed, 60).with_blocks(4);
        let c = classify(&gen_composite(&p, CompositeMode::Bridgeless));
        assert!(c.is_connected && c.is_outerplanar && c.is_bridgeless && c.is_triangle_free);
        let c = classify(&gen_composite(&p, CompositeMode::Treefree));
        assert!(c.is_connected && c.is_outerplanar && c.is_tree_free && c.is_triangle_free);
    }
}

#[test]
fn bridge_blocks() {
    let g = Graph::new(
        8,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (3, 4),
        ],
    )
    .unwrap();
    let c = classify(&g);
    assert!(!c.is_bridgeless && c.is_tree_free);
    let dec = decompose_blocks(&g);
    assert_eq!(dec.blocks.len(), 3);
    assert_eq!(dec.bridges, vec![g.edge_id(3, 4).unwrap()]);
}
