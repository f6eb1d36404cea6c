use std::collections::BTreeMap;

use crate::hypergraph::Hypergraph;
use crate::partition::Partition;

/// For one node: how many times it occurs in a hyperedge of a given order
/// whose other members fall in a given multiset of classes.
///
/// Keys are `(order, sorted co-member classes)`; the node itself is removed
/// once per occurrence.
pub type NodeSignature = BTreeMap<(usize, Vec<usize>), usize>;

/// Two same-class nodes whose signatures differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Imbalance {
    pub first: usize,
    pub second: usize,
    pub first_signature: NodeSignature,
    pub second_signature: NodeSignature,
}

/// Signatures of every node with respect to `p`.
pub fn node_signatures(h: &Hypergraph, p: &Partition) -> Vec<NodeSignature> {
    let mut sigs = vec![NodeSignature::new(); h.node_count()];
    for e in h.edges() {
        for pos in 0..e.len() {
            let mut co: Vec<usize> = e
                .iter()
                .enumerate()
                .filter(|&(q, _)| q != pos)
                .map(|(_, &v)| p.class_of(v))
                .collect();
            co.sort_unstable();
            *sigs[e[pos]].entry((e.len(), co)).or_default() += 1;
        }
    }
    sigs
}

pub fn node_signature(h: &Hypergraph, p: &Partition, node: usize) -> NodeSignature {
    node_signatures(h, p).swap_remove(node)
}

/// Balance check by direct counting on the hypergraph, independent of the
/// incidence-graph refinement. On failure the witness pairs the first member
/// of the offending class with the first member that disagrees with it.
pub fn check_balance(h: &Hypergraph, p: &Partition) -> Result<(), Imbalance> {
    assert_eq!(
        p.element_count(),
        h.node_count(),
        "partition must cover the nodes"
    );
    let sigs = node_signatures(h, p);
    for class in p.classes() {
        let first = class[0];
        if let Some(&other) = class[1..].iter().find(|&&v| sigs[v] != sigs[first]) {
            return Err(Imbalance {
                first,
                second: other,
                first_signature: sigs[first].clone(),
                second_signature: sigs[other].clone(),
            });
        }
    }
    Ok(())
}

pub fn is_balanced(h: &Hypergraph, p: &Partition) -> bool {
    check_balance(h, p).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibration::hypergraph_fibres;
    use crate::hypergraph::{parse_hypergraph, Format};

    fn ten_node() -> Hypergraph {
        parse_hypergraph(
            "1 2 0\n7 8 9\n0 6\n3 4\n3 5\n4 5\n6 3\n8 9\n6 7\n",
            Format::HyperedgeList,
        )
        .unwrap()
    }

    #[test]
    fn fibres_are_balanced() {
        let h = ten_node();
        assert!(is_balanced(&h, &hypergraph_fibres(&h).node_partition));
        assert!(is_balanced(&h, &Partition::discrete(h.node_count())));
    }

    #[test]
    fn merged_classes_are_unbalanced_with_witness() {
        let h = ten_node();
        let f = hypergraph_fibres(&h).node_partition;
        let n0 = h.node_by_label("0").unwrap();
        let n1 = h.node_by_label("1").unwrap();
        let n6 = h.node_by_label("6").unwrap();
        let merged = f.merge(f.class_of(n1), f.class_of(n0));
        let w = check_balance(&h, &merged).unwrap_err();
        let pair = [w.first, w.second];
        assert!(pair.contains(&n0) && pair.contains(&n1));
        // node 0 has a pairwise edge into node 6's class, node 1 does not
        let key = (2, vec![merged.class_of(n6)]);
        let sig0 = if w.first == n0 {
            &w.first_signature
        } else {
            &w.second_signature
        };
        let sig1 = if w.first == n1 {
            &w.first_signature
        } else {
            &w.second_signature
        };
        assert_eq!(sig0.get(&key), Some(&1));
        assert_eq!(sig1.get(&key), None);
    }

    #[test]
    fn repeated_member_signature() {
        let h = Hypergraph::new(2, vec![vec![0, 0, 1]]).unwrap();
        let p = Partition::discrete(2);
        let s0 = node_signature(&h, &p, 0);
        assert_eq!(s0.get(&(3, vec![0, 1])), Some(&2));
        let s1 = node_signature(&h, &p, 1);
        assert_eq!(s1.get(&(3, vec![0, 0])), Some(&1));
    }
}
