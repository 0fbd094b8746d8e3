use bkroute::generator::{draw_graph, RngStream};
use bkroute::oracle::brute_force_within;
use bkroute::solver::solve_traced;
use bkroute::{
    bk_accelerated, bk_classic, brute_force_distance, build_cost_matrix, extract_route,
    oracle_distances, ExtWeight, Graph, Method,
};
use proptest::prelude::*;

/// Random graph on 2..=max_n nodes, arbitrary density, weights 1..=100.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>(), 0.0f64..=1.0).prop_map(|(n, seed, density)| {
        let pairs = n * (n - 1);
        let m = ((pairs as f64) * density).round() as usize;
        draw_graph(n, m, 100, &mut RngStream::new(seed))
    })
}

/// Same, but weights may be zero.
fn graph_with_zero_weights(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>(), 0.0f64..=1.0).prop_map(|(n, seed, density)| {
        let pairs = n * (n - 1);
        let m = ((pairs as f64) * density).round() as usize;
        let g = draw_graph(n, m, 3, &mut RngStream::new(seed));
        let arcs = g
            .arcs()
            .iter()
            .map(|a| bkroute::Arc::new(a.from, a.to, a.weight - 1));
        Graph::new(n, arcs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn solvers_agree_with_each_other_and_the_oracle(g in graph(40)) {
        let a = build_cost_matrix(&g).unwrap();
        let c = bk_classic(&a).unwrap();
        let s = bk_accelerated(&a).unwrap();
        prop_assert!(c.converged && s.converged);
        prop_assert_eq!(&c.distances, &s.distances);
        prop_assert_eq!(&c.distances, &oracle_distances(&g));
    }

    #[test]
    fn brute_force_agrees_on_small_graphs(g in graph(8)) {
        let a = build_cost_matrix(&g).unwrap();
        let d = bk_classic(&a).unwrap().distances;
        prop_assert_eq!(d.get(1), brute_force_distance(&g).unwrap());
    }

    #[test]
    fn zero_weights_are_handled(g in graph_with_zero_weights(8)) {
        let a = build_cost_matrix(&g).unwrap();
        let c = bk_classic(&a).unwrap();
        let s = bk_accelerated(&a).unwrap();
        prop_assert_eq!(&c.distances, &s.distances);
        prop_assert_eq!(c.distances.get(1), brute_force_distance(&g).unwrap());
        if c.distances.get(1).is_finite() {
            let route = extract_route(&a, &c.distances).unwrap();
            prop_assert_eq!(route.nodes.last(), Some(&g.node_count()));
        }
    }

    #[test]
    fn dominance_and_bounds(g in graph(40)) {
        let n = g.node_count();
        let a = build_cost_matrix(&g).unwrap();
        let c = bk_classic(&a).unwrap();
        let s = bk_accelerated(&a).unwrap();
        prop_assert!(s.sweeps <= c.sweeps);
        prop_assert!(s.relaxations <= c.relaxations);
        prop_assert!(c.sweeps <= n);
        prop_assert!(c.sweeps >= 1);
        prop_assert!(c.relaxations > 0);
        prop_assert_eq!(c.relaxations, (c.sweeps * n * (n - 1)) as u64);
        prop_assert_eq!(s.relaxations, (s.sweeps * n * (n - 1)) as u64);
    }

    #[test]
    fn estimates_descend_and_stay_above_truth(g in graph(20)) {
        let a = build_cost_matrix(&g).unwrap();
        let truth = oracle_distances(&g);
        for method in Method::ALL {
            let (res, trace) = solve_traced(&a, method).unwrap();
            prop_assert_eq!(trace.len(), res.sweeps + 1);
            for pair in trace.windows(2) {
                for i in 0..g.node_count() {
                    prop_assert!(pair[1].as_slice()[i] <= pair[0].as_slice()[i]);
                }
            }
            for v in &trace {
                prop_assert_eq!(v.get(g.node_count()), ExtWeight::ZERO);
                for i in 0..g.node_count() {
                    prop_assert!(v.as_slice()[i] >= truth.as_slice()[i]);
                }
            }
            // the last sweep confirms
            prop_assert_eq!(&trace[trace.len() - 1], &trace[trace.len() - 2]);
        }
    }

    #[test]
    fn gauss_seidel_is_never_behind_jacobi(g in graph(20)) {
        let a = build_cost_matrix(&g).unwrap();
        let (_, jacobi) = solve_traced(&a, Method::Classic).unwrap();
        let (_, seidel) = solve_traced(&a, Method::Accelerated).unwrap();
        let last = seidel.last().unwrap().clone();
        for (k, j) in jacobi.iter().enumerate() {
            let s = seidel.get(k).unwrap_or(&last);
            for (sv, jv) in s.as_slice().iter().zip(j.as_slice()) {
                prop_assert!(sv <= jv);
            }
        }
    }

    #[test]
    fn jacobi_sweep_k_covers_routes_of_k_arcs(g in graph(6)) {
        let a = build_cost_matrix(&g).unwrap();
        let (_, trace) = solve_traced(&a, Method::Classic).unwrap();
        for (k, v) in trace.iter().enumerate() {
            prop_assert_eq!(v.get(1), brute_force_within(&g, k).unwrap());
        }
    }

    #[test]
    fn routes_are_consistent(g in graph(30)) {
        let a = build_cost_matrix(&g).unwrap();
        let d = bk_accelerated(&a).unwrap().distances;
        match extract_route(&a, &d) {
            Ok(route) => {
                prop_assert_eq!(route.nodes[0], 1);
                prop_assert_eq!(*route.nodes.last().unwrap(), g.node_count());
                prop_assert!(route.nodes.len() <= g.node_count());
                let mut sum = 0;
                for hop in route.nodes.windows(2) {
                    let arc = g.arcs().iter().find(|arc| arc.from == hop[0] && arc.to == hop[1]);
                    prop_assert!(arc.is_some());
                    sum += arc.unwrap().weight;
                }
                prop_assert_eq!(sum, route.cost);
                prop_assert_eq!(ExtWeight::Finite(route.cost), d.get(1));
            }
            Err(bkroute::Error::NoRoute { .. }) => prop_assert!(!d.get(1).is_finite()),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }
}
