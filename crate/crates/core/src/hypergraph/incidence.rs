use super::Hypergraph;
use crate::error::{Error, Result};

/// Which side of the incidence graph a vertex sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Layer {
    Node,
    Hyperedge,
}

/// Two-layer incidence multigraph of a hypergraph.
///
/// Vertices `0..left_count` are hypergraph nodes, vertices
/// `left_count..left_count + right_count` are hyperedges. Each incidence
/// carries the number of times the node occurs in the hyperedge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceBipartite {
    left_count: usize,
    right_count: usize,
    /// `(node, hyperedge, multiplicity)`, sorted by hyperedge then node.
    incidences: Vec<(usize, usize, usize)>,
}

pub fn incidence(h: &Hypergraph) -> IncidenceBipartite {
    let mut incidences = Vec::new();
    for (e, members) in h.edges().iter().enumerate() {
        // members are sorted, so runs of equal nodes are contiguous
        let mut i = 0;
        while i < members.len() {
            let mut j = i;
            while j < members.len() && members[j] == members[i] {
                j += 1;
            }
            incidences.push((members[i], e, j - i));
            i = j;
        }
    }
    IncidenceBipartite {
        left_count: h.node_count(),
        right_count: h.edge_count(),
        incidences,
    }
}

impl IncidenceBipartite {
    /// Builds an incidence graph from explicit triples, rejecting empty hyperedges.
    pub fn from_incidences(
        left_count: usize,
        right_count: usize,
        incidences: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self> {
        let mut inc: Vec<(usize, usize, usize)> =
            incidences.into_iter().filter(|t| t.2 > 0).collect();
        let mut weight = vec![0usize; right_count];
        for &(v, e, m) in &inc {
            if v >= left_count || e >= right_count {
                return Err(Error::InvalidParameter(format!(
                    "incidence ({v}, {e}) out of range"
                )));
            }
            weight[e] += m;
        }
        if let Some(index) = weight.iter().position(|&w| w == 0) {
            return Err(Error::EmptyHyperedge { index });
        }
        inc.sort_by_key(|&(v, e, _)| (e, v));
        // merge repeated (node, edge) pairs
        let mut merged: Vec<(usize, usize, usize)> = Vec::with_capacity(inc.len());
        for t in inc {
            match merged.last_mut() {
                Some(last) if last.0 == t.0 && last.1 == t.1 => last.2 += t.2,
                _ => merged.push(t),
            }
        }
        Ok(IncidenceBipartite {
            left_count,
            right_count,
            incidences: merged,
        })
    }

    pub fn left_count(&self) -> usize {
        self.left_count
    }

    pub fn right_count(&self) -> usize {
        self.right_count
    }

    pub fn vertex_count(&self) -> usize {
        self.left_count + self.right_count
    }

    pub fn layer(&self, vertex: usize) -> Layer {
        if vertex < self.left_count {
            Layer::Node
        } else {
            Layer::Hyperedge
        }
    }

    pub fn incidences(&self) -> &[(usize, usize, usize)] {
        &self.incidences
    }

    pub fn multiplicity(&self, node: usize, edge: usize) -> usize {
        self.incidences
            .iter()
            .find(|&&(v, e, _)| v == node && e == edge)
            .map_or(0, |t| t.2)
    }

    pub fn total_weight(&self) -> usize {
        self.incidences.iter().map(|t| t.2).sum()
    }

    /// Undirected weighted adjacency over all vertices: each incidence is an
    /// arc in both directions carrying its multiplicity.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(v, e, m) in &self.incidences {
            let ev = self.left_count + e;
            adj[v].push((ev, m));
            adj[ev].push((v, m));
        }
        adj
    }

    /// Initial two-colour seeding: node layer 0, hyperedge layer 1.
    pub fn layer_colors(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .map(|v| match self.layer(v) {
                Layer::Node => 0,
                Layer::Hyperedge => 1,
            })
            .collect()
    }

    /// Rebuilds the hypergraph (without labels).
    pub fn to_hypergraph(&self) -> Hypergraph {
        let mut edges = vec![Vec::new(); self.right_count];
        for &(v, e, m) in &self.incidences {
            edges[e].extend(std::iter::repeat_n(v, m));
        }
        Hypergraph::new(self.left_count, edges).expect("incidence invariants hold")
    }
}
