use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::fibration::{hypergraph_fibres, node_signatures};
use crate::hypergraph::{connectivity, Hypergraph};
use crate::partition::Partition;

use super::{sparsify, EditConfig, EditReport};

/// Adds hyperedges until the fibres of `h` equal `target`.
///
/// Each round recomputes the fibres, then
/// * splits every computed fibre that straddles target classes: the nodes of
///   its smallest piece (ties: lowest node) each get a pair with the lowest
///   node of the smallest target class disjoint from the fibre;
/// * merges every target class spread over several fibres: each member
///   receives the hyperedges it lacks relative to the component-wise maximum
///   signature of the class, built from the lowest-id members of the
///   required classes.
///
/// After the fibres match, added hyperedges are sparsified with every
/// original hyperedge protected. Without a match after `cfg.max_iter`
/// rounds, the state closest to `target` (fewest disagreeing node pairs) is
/// returned with `converged = false`.
pub fn retarget(h: &Hypergraph, target: &Partition, cfg: &EditConfig) -> Result<EditReport> {
    cfg.validate()?;
    if target.element_count() != h.node_count() {
        return Err(Error::InvalidPartition(format!(
            "target covers {} nodes, hypergraph has {}",
            target.element_count(),
            h.node_count()
        )));
    }
    let mut added: Vec<Vec<usize>> = Vec::new();
    let mut best: Option<(usize, usize)> = None; // (distance, added.len())
    let mut rounds = 0;
    let mut converged = false;

    loop {
        let cur = h.extended(&added)?;
        let p = hypergraph_fibres(&cur).node_partition;
        if p == *target {
            converged = true;
            break;
        }
        let d = p.pair_distance(target);
        if best.is_none_or(|(bd, _)| d < bd) {
            best = Some((d, added.len()));
        }
        if rounds == cfg.max_iter {
            break;
        }
        rounds += 1;
        let mut existing = cur.edge_set();
        let before = added.len();
        split_step(&p, target, &mut existing, &mut added);
        let cur = h.extended(&added)?;
        merge_step(&cur, &p, target, &mut existing, &mut added);
        if added.len() == before {
            break;
        }
    }

    if !converged {
        let (_, len) = best.expect("at least one state visited");
        added.truncate(len);
        return Ok(EditReport {
            hypergraph: h.extended(&added)?,
            added,
            removed: Vec::new(),
            converged: false,
            iterations: rounds,
        });
    }

    let mut result = h.extended(&added)?;
    if !added.is_empty() && connectivity(&result).is_connected {
        let mut protected = cfg.protected.clone();
        protected.extend(0..h.edge_count());
        let sparse = sparsify(
            &result,
            &EditConfig {
                protected,
                ..cfg.clone()
            },
        )?;
        result = sparse.hypergraph;
        added = result.edges()[h.edge_count()..].to_vec();
    }
    Ok(EditReport {
        hypergraph: result,
        added,
        removed: Vec::new(),
        converged: true,
        iterations: rounds,
    })
}

fn push_new(
    e: Vec<usize>,
    existing: &mut HashSet<Vec<usize>>,
    added: &mut Vec<Vec<usize>>,
) -> bool {
    if existing.insert(e.clone()) {
        added.push(e);
        true
    } else {
        false
    }
}

fn split_step(
    p: &Partition,
    target: &Partition,
    existing: &mut HashSet<Vec<usize>>,
    added: &mut Vec<Vec<usize>>,
) {
    for fibre in p.classes() {
        let mut pieces: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &v in fibre {
            pieces.entry(target.class_of(v)).or_default().push(v);
        }
        if pieces.len() < 2 {
            continue;
        }
        let (&piece_class, piece) = pieces
            .iter()
            .min_by_key(|(_, m)| (m.len(), m[0]))
            .expect("two or more pieces");
        let anchor_class = target
            .classes()
            .iter()
            .enumerate()
            .filter(|(c, _)| !pieces.contains_key(c))
            .min_by_key(|(_, m)| (m.len(), m[0]))
            .or_else(|| {
                target
                    .classes()
                    .iter()
                    .enumerate()
                    .filter(|&(c, _)| c != piece_class)
                    .min_by_key(|(_, m)| (m.len(), m[0]))
            });
        let Some((_, members)) = anchor_class else {
            continue;
        };
        let anchor = members[0];
        for &v in piece {
            if v != anchor {
                let mut e = vec![v, anchor];
                e.sort_unstable();
                push_new(e, existing, added);
            }
        }
    }
}

fn merge_step(
    cur: &Hypergraph,
    p: &Partition,
    target: &Partition,
    existing: &mut HashSet<Vec<usize>>,
    added: &mut Vec<Vec<usize>>,
) {
    let sigs = node_signatures(cur, target);
    for class in target.classes() {
        if class.iter().all(|&v| p.same_class(v, class[0])) {
            continue;
        }
        let mut max_sig: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for &v in class {
            for (key, &count) in &sigs[v] {
                let slot = max_sig.entry(key).or_default();
                *slot = (*slot).max(count);
            }
        }
        for &v in class {
            for (&key, &want) in &max_sig {
                let have = sigs[v].get(key).copied().unwrap_or(0);
                for _ in have..want {
                    if let Some(e) = realize(v, &key.1, target, existing) {
                        push_new(e, existing, added);
                    }
                }
            }
        }
    }
}

/// A hyperedge holding `v` plus one member of each class in `co_classes`,
/// preferring low node ids and skipping hyperedges already present.
fn realize(
    v: usize,
    co_classes: &[usize],
    target: &Partition,
    existing: &HashSet<Vec<usize>>,
) -> Option<Vec<usize>> {
    let pools: Vec<Vec<usize>> = co_classes
        .iter()
        .map(|&c| {
            target
                .class(c)
                .iter()
                .copied()
                .filter(|&u| u != v)
                .collect()
        })
        .collect();
    if pools.iter().any(|pool| pool.is_empty()) {
        return None;
    }
    // Walk shifts of the pools in lockstep: shift 0 gives the lowest members,
    // with repeated classes drawing distinct members where possible.
    let widest = pools.iter().map(Vec::len).max().unwrap_or(1);
    for shift in 0..widest {
        let mut used: HashSet<usize> = HashSet::new();
        let mut e = vec![v];
        for pool in &pools {
            let pick = (0..pool.len())
                .map(|k| pool[(shift + k) % pool.len()])
                .find(|u| !used.contains(u))
                .unwrap_or(pool[shift % pool.len()]);
            used.insert(pick);
            e.push(pick);
        }
        e.sort_unstable();
        if !existing.contains(&e) {
            return Some(e);
        }
    }
    None
}
