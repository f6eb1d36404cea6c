use std::collections::HashMap;

use crate::partition::Partition;

/// Outcome of colour refinement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refinement {
    pub partition: Partition,
    /// Signature passes executed, including the final one that detected stability.
    pub rounds: usize,
}

/// Coarsest refinement of `init_colors` in which every two vertices of the
/// same class see identical multisets of neighbour classes.
///
/// `adjacency[v]` lists `(neighbour, multiplicity)`; an arc of multiplicity
/// `m` counts as `m` neighbours. Each round groups vertices by their current
/// class together with the sorted `(neighbour class, weighted count)` list and
/// stops once the number of classes no longer grows.
pub fn refine(adjacency: &[Vec<(usize, usize)>], init_colors: &[usize]) -> Refinement {
    assert_eq!(
        adjacency.len(),
        init_colors.len(),
        "one initial colour per vertex"
    );
    let mut part = Partition::from_keys(init_colors);
    let mut rounds = 0;
    let mut scratch: HashMap<usize, usize> = HashMap::new();
    loop {
        rounds += 1;
        let signatures: Vec<(usize, Vec<(usize, usize)>)> = adjacency
            .iter()
            .enumerate()
            .map(|(v, nbrs)| {
                scratch.clear();
                for &(u, m) in nbrs {
                    *scratch.entry(part.class_of(u)).or_default() += m;
                }
                let mut sig: Vec<(usize, usize)> = scratch.iter().map(|(&c, &n)| (c, n)).collect();
                sig.sort_unstable();
                (part.class_of(v), sig)
            })
            .collect();
        let next = Partition::from_keys(&signatures);
        if next.class_count() == part.class_count() {
            return Refinement {
                partition: part,
                rounds,
            };
        }
        part = next;
    }
}
