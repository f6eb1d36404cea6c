#![allow(dead_code)]

use std::collections::HashMap;

use hyperfibre::hypergraph::{connectivity, parse_hypergraph, Format};
use hyperfibre::{hypergraph_fibres, Hypergraph, Partition};
use proptest::prelude::*;
use rand::Rng;

/// The 10-node example: one triple per side, a chain of pairs in between.
pub const TEN_NODE: &str = "1 2 0\n7 8 9\n0 6\n3 4\n3 5\n4 5\n6 3\n8 9\n6 7\n";

pub fn ten_node() -> Hypergraph {
    parse_hypergraph(TEN_NODE, Format::HyperedgeList).unwrap()
}

/// Current class plus the sorted (edge order, other members' classes) inputs.
type NodeKey = (usize, Vec<(usize, Vec<usize>)>);

/// Coarsest balanced node partition by brute-force fixpoint iteration on the
/// hyperedge list: start from one class and split by the multiset of
/// (order, sorted co-member classes) seen by each node until nothing changes.
pub fn naive_fibres(h: &Hypergraph) -> Partition {
    let n = h.node_count();
    let mut class = vec![0usize; n];
    loop {
        let mut seen: Vec<Vec<(usize, Vec<usize>)>> = vec![Vec::new(); n];
        for e in h.edges() {
            for pos in 0..e.len() {
                let mut co = Vec::new();
                for (q, &v) in e.iter().enumerate() {
                    if q != pos {
                        co.push(class[v]);
                    }
                }
                co.sort();
                seen[e[pos]].push((e.len(), co));
            }
        }
        let mut ids: HashMap<NodeKey, usize> = HashMap::new();
        let mut next = vec![0usize; n];
        for v in 0..n {
            seen[v].sort();
            let key = (class[v], std::mem::take(&mut seen[v]));
            let fresh = ids.len();
            next[v] = *ids.entry(key).or_insert(fresh);
        }
        let before = Partition::from_keys(&class);
        let after = Partition::from_keys(&next);
        if before == after {
            return after;
        }
        class = next;
    }
}

/// Random multiset hypergraph: up to `max_nodes` nodes, up to `max_edges`
/// hyperedges of order 1..=4 (members may repeat).
pub fn arb_hypergraph(max_nodes: usize, max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_nodes).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(0..n, 1..=4), 0..=max_edges)
            .prop_map(move |edges| Hypergraph::new(n, edges).unwrap())
    })
}

/// Random hypergraph with orders 2 and 3 only and distinct members.
pub fn arb_kuramoto_hypergraph(
    max_nodes: usize,
    max_edges: usize,
) -> impl Strategy<Value = Hypergraph> {
    (3..=max_nodes).prop_flat_map(move |n| {
        prop::collection::vec(
            prop::sample::subsequence((0..n).collect::<Vec<_>>(), 2..=3),
            1..=max_edges,
        )
        .prop_map(move |edges| Hypergraph::new(n, edges).unwrap())
    })
}

/// Deterministic counterpart of [`arb_hypergraph`] for seeded loops.
pub fn seeded_hypergraph(seed: u64, max_nodes: usize, max_edges: usize) -> Hypergraph {
    let mut rng = hyperfibre::rng::seeded(seed);
    let n = rng.random_range(1..=max_nodes);
    let m = rng.random_range(0..=max_edges);
    let edges = (0..m)
        .map(|_| {
            let k = rng.random_range(1..=4);
            (0..k).map(|_| rng.random_range(0..n)).collect()
        })
        .collect();
    Hypergraph::new(n, edges).unwrap()
}

/// Classes as sorted label lists, sorted, for order-free comparison.
pub fn labelled(h: &Hypergraph, p: &Partition) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = p
        .classes()
        .iter()
        .map(|c| {
            let mut v: Vec<String> = c.iter().map(|&i| h.label(i)).collect();
            v.sort();
            v
        })
        .collect();
    out.sort();
    out
}

pub fn classes_of(spec: &[&[&str]]) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = spec
        .iter()
        .map(|c| {
            let mut v: Vec<String> = c.iter().map(|s| s.to_string()).collect();
            v.sort();
            v
        })
        .collect();
    out.sort();
    out
}

/// Smallest surviving edge count over every subset of removable groups.
pub fn exhaustive_optimum(h: &Hypergraph, groups: &[Vec<usize>]) -> usize {
    let target = hypergraph_fibres(h).node_partition;
    let mut best = h.edge_count();
    for mask in 0u32..(1 << groups.len()) {
        let mut alive = vec![true; h.edge_count()];
        for (g, members) in groups.iter().enumerate() {
            if mask & (1 << g) != 0 {
                for &e in members {
                    alive[e] = false;
                }
            }
        }
        let kept = h.retain_edges(|e| alive[e]);
        if kept.edge_count() < best
            && connectivity(&kept).is_connected
            && hypergraph_fibres(&kept).node_partition == target
        {
            best = kept.edge_count();
        }
    }
    best
}

/// Circulant hypergraph on `Z_n`: each random pattern `{0, a}` or
/// `{0, a, b}` is placed at every rotation, optionally with a hub joined to
/// every ring node. Few colour groups, many removable ones.
pub fn circulant(seed: u64) -> Hypergraph {
    let mut rng = hyperfibre::rng::seeded(seed);
    let n = rng.random_range(5..10);
    let hub = rng.random_bool(0.4);
    let mut edges = Vec::new();
    for _ in 0..rng.random_range(1..5) {
        let a = rng.random_range(1..n);
        let pattern = if rng.random_bool(0.5) {
            vec![0, a]
        } else {
            let b = (a + rng.random_range(1..n - 1)) % n;
            if b == 0 {
                vec![0, a]
            } else {
                vec![0, a, b]
            }
        };
        for i in 0..n {
            edges.push(pattern.iter().map(|x| (x + i) % n).collect());
        }
    }
    if hub {
        edges.extend((0..n).map(|i| vec![i, n]));
    }
    Hypergraph::new(n + usize::from(hub), edges).unwrap()
}
