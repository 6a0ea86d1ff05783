use pon_core::embed::classify;
use pon_core::generators::{gen_composite, gen_random_2connected, CompositeMode, GenParams};
use pon_core::graph::{delta_orientation, path_indegrees, realize_path};
use pon_core::oracle::{bound_chain, decide_pon, exact_pon, DEFAULT_BUDGET};
use pon_core::orient::{orient_2connected, orient_bridgeless, orient_treefree};
use pon_core::{Graph, Orientation};
use proptest::prelude::*;

fn simple_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=max_m).prop_map(move |pairs| {
            let mut seen = std::collections::HashSet::new();
            let edges: Vec<_> = pairs
                .into_iter()
                .filter(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
                .collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn realize_inverts_path_indegrees(bits in proptest::collection::vec(any::<bool>(), 1..40)) {
        let seq = path_indegrees(&bits);
        prop_assert_eq!(realize_path(&seq, (false, false)).unwrap(), bits.clone());
        // an open end still reproduces the rest of the sequence
        let open = realize_path(&seq, (true, false)).unwrap();
        prop_assert_eq!(&path_indegrees(&open)[1..], &seq[1..]);
    }

    #[test]
    fn graph_text_round_trip(g in simple_graph(12, 30)) {
        prop_assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn delta_orientation_is_proper(g in simple_graph(15, 40)) {
        let o = delta_orientation(&g);
        prop_assert!(o.is_proper());
        prop_assert!(o.max_indegree() as usize <= g.max_degree());
        let back = Orientation::parse(&g, &o.to_text()).unwrap();
        prop_assert_eq!(back, o);
    }

    #[test]
    fn oracle_bound_chain(g in simple_graph(8, 12)) {
        let r = exact_pon(&g, DEFAULT_BUDGET).unwrap();
        let (lo, hi) = bound_chain(&g);
        prop_assert!(lo <= r.pon && r.pon <= hi);
        prop_assert!(r.witness.is_proper());
        prop_assert_eq!(r.witness.max_indegree(), r.pon);
        prop_assert!(decide_pon(&g, r.pon, DEFAULT_BUDGET).unwrap().feasible);
        if r.pon > 0 {
            prop_assert!(!decide_pon(&g, r.pon - 1, DEFAULT_BUDGET).unwrap().feasible);
        }
    }

    #[test]
    fn generator_outputs_in_class(seed in any::<u64>(), n in 4usize..200, q in 0.0f64..1.0) {
        let p = GenParams::new(seed, n).with_fan_bias(q);
        let g = gen_random_2connected(&p);
        prop_assert!(g.vertex_count() <= n);
        let c = classify(&g);
        prop_assert!(c.is_outerplanar && c.is_2connected && c.is_triangle_free);
        prop_assert_eq!(gen_random_2connected(&p), g);
    }

    #[test]
    fn two_connected_output(seed in any::<u64>(), n in 4usize..300, q in 0.0f64..1.0) {
        let g = gen_random_2connected(&GenParams::new(seed, n).with_fan_bias(q));
        let out = orient_2connected(&g).unwrap();
        prop_assert!(out.orientation.is_proper());
        prop_assert!(out.orientation.max_indegree() <= 3);
        prop_assert_eq!(out.orientation.arcs().len(), g.edge_count());
    }

    #[test]
    fn small_outputs_dominate_the_optimum(seed in any::<u64>(), n in 4usize..14) {
        let g = gen_random_2connected(&GenParams::new(seed, n).with_fan_bias(0.5));
        prop_assume!(g.edge_count() <= 18);
        let exact = exact_pon(&g, DEFAULT_BUDGET).unwrap().pon;
        let ours = orient_2connected(&g).unwrap().orientation.max_indegree();
        prop_assert!(exact <= ours && ours <= 3);
    }

    #[test]
    fn composite_outputs(seed in any::<u64>(), blocks in 1usize..8, q in 0.0f64..0.8) {
        let p = GenParams::new(seed, 12 * blocks).with_blocks(blocks).with_fan_bias(q);
        let g = gen_composite(&p, CompositeMode::Bridgeless);
        let o = orient_bridgeless(&g).unwrap().orientation;
        prop_assert!(o.is_proper() && o.max_indegree() <= 4);
        let g = gen_composite(&p, CompositeMode::Treefree);
        let o = orient_treefree(&g).unwrap().orientation;
        prop_assert!(o.is_proper() && o.max_indegree() <= 4);
    }
}
