use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::partition::Partition;

use super::check_balance;

/// Incidence structure of the hypergraph with every class collapsed to one vertex.
///
/// `edge_to_node[c][a]` is how many incidences a hyperedge of class `c` has
/// with nodes of class `a`; `node_to_edge[a][c]` is how many incidences a
/// node of class `a` has with hyperedges of class `c`. Both are read from the
/// lowest-index representative of each class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientIncidence {
    pub node_partition: Partition,
    pub hyperedge_partition: Partition,
    pub edge_to_node: Vec<Vec<usize>>,
    pub node_to_edge: Vec<Vec<usize>>,
}

/// Builds the quotient. Hyperedges are grouped by the multiset of their
/// members' classes. With `check` set, an unbalanced partition is rejected.
pub fn quotient(h: &Hypergraph, p: &Partition, check: bool) -> Result<QuotientIncidence> {
    if p.element_count() != h.node_count() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} elements, hypergraph has {} nodes",
            p.element_count(),
            h.node_count()
        )));
    }
    if check {
        if let Err(w) = check_balance(h, p) {
            return Err(Error::UnbalancedPartition {
                first: w.first,
                second: w.second,
            });
        }
    }
    let member_classes: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|e| {
            let mut c: Vec<usize> = e.iter().map(|&v| p.class_of(v)).collect();
            c.sort_unstable();
            c
        })
        .collect();
    let ep = Partition::from_keys(&member_classes);
    let (nc, ec) = (p.class_count(), ep.class_count());

    let mut edge_to_node = vec![vec![0usize; nc]; ec];
    for (c, row) in edge_to_node.iter_mut().enumerate() {
        for &v in h.edge(ep.class(c)[0]) {
            row[p.class_of(v)] += 1;
        }
    }
    let mut per_node = vec![vec![0usize; ec]; h.node_count()];
    for (e, members) in h.edges().iter().enumerate() {
        for &v in members {
            per_node[v][ep.class_of(e)] += 1;
        }
    }
    let node_to_edge = (0..nc).map(|a| per_node[p.class(a)[0]].clone()).collect();
    Ok(QuotientIncidence {
        node_partition: p.clone(),
        hyperedge_partition: ep,
        edge_to_node,
        node_to_edge,
    })
}

impl QuotientIncidence {
    pub fn node_class_count(&self) -> usize {
        self.node_partition.class_count()
    }

    pub fn hyperedge_class_count(&self) -> usize {
        self.hyperedge_partition.class_count()
    }

    /// Each quotient hyperedge as a sorted multiset of node classes.
    pub fn hyperedge_classes(&self) -> Vec<Vec<usize>> {
        self.edge_to_node
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .flat_map(|(a, &m)| std::iter::repeat_n(a, m))
                    .collect()
            })
            .collect()
    }

    /// Checks that every member of every class, not just the representative,
    /// has the tabulated counts in both directions.
    pub fn lifts_to(&self, h: &Hypergraph) -> bool {
        let p = &self.node_partition;
        let ep = &self.hyperedge_partition;
        let mut per_node = vec![vec![0usize; ep.class_count()]; h.node_count()];
        for (e, members) in h.edges().iter().enumerate() {
            let mut row = vec![0usize; p.class_count()];
            for &v in members {
                row[p.class_of(v)] += 1;
                per_node[v][ep.class_of(e)] += 1;
            }
            if row != self.edge_to_node[ep.class_of(e)] {
                return false;
            }
        }
        (0..h.node_count()).all(|v| per_node[v] == self.node_to_edge[p.class_of(v)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibration::hypergraph_fibres;
    use crate::hypergraph::{incidence, parse_hypergraph, Format};

    #[test]
    fn single_pair_collapses() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let q = quotient(&h, &Partition::single(2), true).unwrap();
        assert_eq!(q.node_class_count(), 1);
        assert_eq!(q.hyperedge_class_count(), 1);
        assert_eq!(q.edge_to_node, vec![vec![2]]);
        assert_eq!(q.node_to_edge, vec![vec![1]]);
        assert_eq!(q.hyperedge_classes(), vec![vec![0, 0]]);
    }

    #[test]
    fn discrete_quotient_is_the_incidence_graph() {
        let h = parse_hypergraph("a b c\nc d\nd d e\n", Format::HyperedgeList).unwrap();
        let q = quotient(&h, &Partition::discrete(h.node_count()), true).unwrap();
        let b = incidence(&h);
        assert_eq!(q.hyperedge_class_count(), h.edge_count());
        for &(v, e, m) in b.incidences() {
            assert_eq!(q.edge_to_node[e][v], m);
            assert_eq!(q.node_to_edge[v][e], m);
        }
        let total: usize = q.edge_to_node.iter().flatten().sum();
        assert_eq!(total, b.total_weight());
    }

    #[test]
    fn ten_node_quotient_matches_direct_counts() {
        let h = parse_hypergraph(
            "1 2 0\n7 8 9\n0 6\n3 4\n3 5\n4 5\n6 3\n8 9\n6 7\n",
            Format::HyperedgeList,
        )
        .unwrap();
        let f = hypergraph_fibres(&h);
        let q = quotient(&h, &f.node_partition, true).unwrap();
        assert_eq!(q.node_class_count(), 7);
        assert_eq!(q.hyperedge_class_count(), 8);
        assert_eq!(q.hyperedge_partition, f.hyperedge_partition);
        assert!(q.lifts_to(&h));
        // direct count for node class of "6": three pair edges, none of them triples
        let c6 = f.node_partition.class_of(h.node_by_label("6").unwrap());
        assert_eq!(q.node_to_edge[c6].iter().sum::<usize>(), 3);
    }

    #[test]
    fn unbalanced_partition_rejected() {
        let h = parse_hypergraph("a b\nb c\n", Format::HyperedgeList).unwrap();
        let p = Partition::single(3);
        assert!(matches!(
            quotient(&h, &p, true),
            Err(Error::UnbalancedPartition { .. })
        ));
        let q = quotient(&h, &p, false).unwrap();
        assert!(!q.lifts_to(&h));
    }
}
