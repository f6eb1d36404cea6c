use std::collections::HashSet;

use super::Hypergraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectionMode {
    /// Deduplicated pair set, self-pairs dropped.
    Simple,
    /// Every pair of every clique expansion kept, including self-pairs.
    Multi,
}

/// Clique expansion to a rank-≤2 hypergraph. Pairs are emitted hyperedge by
/// hyperedge in member order; labels are preserved.
pub fn project(h: &Hypergraph, mode: ProjectionMode) -> Hypergraph {
    let mut pairs = Vec::new();
    let mut seen = HashSet::new();
    for e in h.edges() {
        for p in 0..e.len() {
            for q in p + 1..e.len() {
                let pair = vec![e[p], e[q]];
                match mode {
                    ProjectionMode::Multi => pairs.push(pair),
                    ProjectionMode::Simple => {
                        if e[p] != e[q] && seen.insert(pair.clone()) {
                            pairs.push(pair);
                        }
                    }
                }
            }
        }
    }
    h.with_edges(pairs)
        .expect("pairs of valid members are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{degrees, parse_hypergraph, Format};

    fn ten_node() -> Hypergraph {
        parse_hypergraph(
            "1 2 0\n7 8 9\n0 6\n3 4\n3 5\n4 5\n6 3\n8 9\n6 7\n",
            Format::HyperedgeList,
        )
        .unwrap()
    }

    #[test]
    fn ten_node_projections() {
        let h = ten_node();
        let simple = project(&h, ProjectionMode::Simple);
        let multi = project(&h, ProjectionMode::Multi);
        assert_eq!(simple.edge_count(), 12);
        assert_eq!(multi.edge_count(), 13);
        let n8 = h.node_by_label("8").unwrap();
        let n9 = h.node_by_label("9").unwrap();
        let pair = vec![n8.min(n9), n8.max(n9)];
        assert_eq!(multi.edges().iter().filter(|e| **e == pair).count(), 2);
        assert_eq!(simple.edges().iter().filter(|e| **e == pair).count(), 1);
    }

    #[test]
    fn simple_projection_of_simple_graph_is_identity() {
        let g = Hypergraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(project(&g, ProjectionMode::Simple), g);
    }

    #[test]
    fn self_pairs() {
        let h = Hypergraph::new(2, vec![vec![0, 0, 1]]).unwrap();
        assert_eq!(
            project(&h, ProjectionMode::Multi).edges(),
            &[vec![0, 0], vec![0, 1], vec![0, 1]]
        );
        assert_eq!(project(&h, ProjectionMode::Simple).edges(), &[vec![0, 1]]);
    }

    #[test]
    fn multi_projection_degree_identity() {
        let h = ten_node();
        let d = degrees(&h);
        let dp = degrees(&project(&h, ProjectionMode::Multi));
        for i in 0..h.node_count() {
            let expected: usize = (1..=d.max_order()).map(|m| d.k(i, m) * (m - 1)).sum();
            assert_eq!(dp.k(i, 2), expected);
        }
    }
}
