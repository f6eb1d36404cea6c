mod common;

use std::f64::consts::PI;

use common::{arb_kuramoto_hypergraph, ten_node};
use hyperfibre::dynamics::{
    extract_sync_clusters, integrate, order_parameter, rhs, CouplingParams, CouplingStructure,
    KuramotoParams,
};
use hyperfibre::hypergraph::degrees;
use hyperfibre::Hypergraph;
use proptest::prelude::*;

/// Right-hand side by scanning every hyperedge for every node.
fn brute_force_rhs(h: &Hypergraph, theta: &[f64], p: &KuramotoParams) -> Vec<f64> {
    let c = &p.coupling;
    (0..h.node_count())
        .map(|i| {
            let mut v = p.omega[i];
            for e in h.edges() {
                if !e.contains(&i) {
                    continue;
                }
                let others: Vec<usize> = e.iter().copied().filter(|&u| u != i).collect();
                match others.as_slice() {
                    [j] => v += c.sigma2 * (theta[*j] - theta[i] - c.alpha2).sin(),
                    [j, k] => {
                        v += c.sigma3 * (theta[*j] + theta[*k] - 2.0 * theta[i] - c.alpha3).sin()
                    }
                    _ => unreachable!(),
                }
            }
            v
        })
        .collect()
}

#[test]
fn rhs_matches_brute_force_on_example() {
    let h = ten_node();
    let c = CouplingStructure::compile(&h).unwrap();
    let mut p =
        KuramotoParams::identical(10, CouplingParams::new(0.3, 0.9, 0.4, 1.1), 0.0, 0.0, 1.0);
    p.omega = (0..10).map(|i| 0.05 * i as f64 - 0.2).collect();
    for shift in 0..5 {
        let theta: Vec<f64> = (0..10)
            .map(|i| ((i * 7 + shift * 3) % 11) as f64 * 0.61)
            .collect();
        let fast = rhs(&c, &theta, &p);
        let slow = brute_force_rhs(&h, &theta, &p);
        for i in 0..10 {
            assert!(
                (fast[i] - slow[i]).abs() < 1e-12,
                "node {i}: {} vs {}",
                fast[i],
                slow[i]
            );
        }
    }
}

fn two_node_error(dt: f64, reference: &[f64]) -> f64 {
    let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
    let mut p =
        KuramotoParams::identical(2, CouplingParams::new(1.0, 0.0, 0.5, 0.0), 0.0, 0.0, 4.0)
            .with_dt(dt);
    p.omega = vec![0.3, -0.4];
    p.theta0 = vec![0.0, 2.0];
    let t = integrate(&h, &p).unwrap();
    t.last_row()
        .iter()
        .zip(reference)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

#[test]
fn integrator_is_high_order() {
    let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
    let base = 0.4;
    let mut p =
        KuramotoParams::identical(2, CouplingParams::new(1.0, 0.0, 0.5, 0.0), 0.0, 0.0, 4.0)
            .with_dt(base / 64.0);
    p.omega = vec![0.3, -0.4];
    p.theta0 = vec![0.0, 2.0];
    let reference = integrate(&h, &p).unwrap().last_row().to_vec();
    let coarse = two_node_error(base, &reference);
    let fine = two_node_error(base / 2.0, &reference);
    assert!(fine > 0.0);
    assert!(coarse / fine >= 16.0, "error ratio {}", coarse / fine);
}

#[test]
fn different_degrees_split_after_one_step() {
    // node 0 has two partners, nodes 1 and 2 one each
    let h = Hypergraph::new(3, vec![vec![0, 1], vec![0, 2]]).unwrap();
    let p = KuramotoParams::identical(3, CouplingParams::new(0.5, 0.0, 0.3, 0.0), 0.0, 1.0, 0.1);
    let t = integrate(&h, &p).unwrap();
    assert_ne!(t.phase(1, 0), t.phase(1, 1));
    assert_eq!(t.phase(1, 1), t.phase(1, 2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn shifting_all_phases_shifts_the_trajectory(
        h in arb_kuramoto_hypergraph(10, 12),
        shift in -3.0f64..3.0,
        a2 in 0.0f64..1.5,
        a3 in 0.0f64..1.5,
    ) {
        let n = h.node_count();
        let mut p = KuramotoParams::identical(n, CouplingParams::new(0.4, 0.7, a2, a3), 0.0, 0.0, 5.0);
        p.theta0 = (0..n).map(|i| (i as f64 * 1.3).sin()).collect();
        p.omega = (0..n).map(|i| 0.1 * (i % 3) as f64).collect();
        let a = integrate(&h, &p).unwrap();
        let mut q = p.clone();
        q.theta0.iter_mut().for_each(|x| *x += shift);
        let b = integrate(&h, &q).unwrap();
        for k in 0..a.len() {
            for i in 0..n {
                prop_assert!((b.phase(k, i) - a.phase(k, i) - shift).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn order_parameter_is_rotation_invariant(
        phases in prop::collection::vec(-10.0f64..10.0, 1..20),
        shift in -10.0f64..10.0,
    ) {
        let r = order_parameter(phases.iter().copied());
        let s = order_parameter(phases.iter().map(|x| x + shift));
        prop_assert!((0.0..=1.0).contains(&r));
        prop_assert!((r - s).abs() < 1e-12);
    }
}

#[test]
fn extraction_is_deterministic_and_degree_grouped() {
    let h = ten_node();
    let p = KuramotoParams::identical(
        10,
        CouplingParams::uniform_alpha(0.2, 0.6, PI / 6.0),
        0.0,
        1.0,
        50.0,
    );
    let t = integrate(&h, &p).unwrap();
    let d = degrees(&h);
    let a = extract_sync_clusters(&t, &d, 1e-6, 10, 7).unwrap();
    let b = extract_sync_clusters(&t, &d, 1e-6, 10, 7).unwrap();
    assert_eq!(a, b);
    for c in a.classes() {
        assert!(c.iter().all(|&v| d.sequence(v) == d.sequence(c[0])));
    }
}
