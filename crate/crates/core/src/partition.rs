//! Canonical set partitions.
//!
//! Class ids are always contiguous `0..h` and numbered by the first element
//! that belongs to each class, so two partitions with the same blocks compare
//! equal regardless of how they were produced.

use std::collections::HashMap;
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

/// Summary counts in the style of a dataset table row.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FibreStats {
    pub class_count: usize,
    pub avg_class_size: f64,
    pub nontrivial_count: usize,
}

impl Partition {
    /// Builds a partition from arbitrary per-element keys; equal keys share a class.
    pub fn from_keys<K: Eq + Hash>(keys: &[K]) -> Self {
        let mut ids: HashMap<&K, usize> = HashMap::with_capacity(keys.len());
        let mut class_of = Vec::with_capacity(keys.len());
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (i, k) in keys.iter().enumerate() {
            let next = ids.len();
            let id = *ids.entry(k).or_insert(next);
            if id == classes.len() {
                classes.push(Vec::new());
            }
            classes[id].push(i);
            class_of.push(id);
        }
        Partition { class_of, classes }
    }

    /// Builds a partition from explicit blocks. Blocks must be non-empty,
    /// disjoint, and cover `0..element_count`.
    pub fn from_classes(element_count: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut label = vec![usize::MAX; element_count];
        for (c, members) in classes.iter().enumerate() {
            if members.is_empty() {
                return Err(Error::InvalidPartition(format!("class {c} is empty")));
            }
            for &m in members {
                if m >= element_count {
                    return Err(Error::InvalidPartition(format!(
                        "element {m} out of range (element count {element_count})"
                    )));
                }
                if label[m] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "element {m} appears in more than one class"
                    )));
                }
                label[m] = c;
            }
        }
        if let Some(missing) = label.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidPartition(format!(
                "element {missing} is not covered"
            )));
        }
        Ok(Self::from_keys(&label))
    }

    /// Every element in its own class.
    pub fn discrete(element_count: usize) -> Self {
        Partition {
            class_of: (0..element_count).collect(),
            classes: (0..element_count).map(|i| vec![i]).collect(),
        }
    }

    /// All elements in one class.
    pub fn single(element_count: usize) -> Self {
        Self::from_keys(&vec![0u8; element_count])
    }

    pub fn element_count(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Per-element class ids.
    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &[usize] {
        &self.classes[id]
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// Returns the partition obtained by fusing classes `a` and `b`.
    pub fn merge(&self, a: usize, b: usize) -> Partition {
        let keys: Vec<usize> = self
            .class_of
            .iter()
            .map(|&c| if c == b { a } else { c })
            .collect();
        Partition::from_keys(&keys)
    }

    /// True when every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.element_count() != coarser.element_count() {
            return false;
        }
        self.classes.iter().all(|members| {
            let c = coarser.class_of(members[0]);
            members.iter().all(|&m| coarser.class_of(m) == c)
        })
    }

    /// Number of unordered element pairs on which the two partitions disagree
    /// (grouped together in one, apart in the other).
    pub fn pair_distance(&self, other: &Partition) -> usize {
        assert_eq!(self.element_count(), other.element_count());
        let pairs = |s: usize| s * s.saturating_sub(1) / 2;
        let a: usize = self.classes.iter().map(|c| pairs(c.len())).sum();
        let b: usize = other.classes.iter().map(|c| pairs(c.len())).sum();
        let mut joint: HashMap<(usize, usize), usize> = HashMap::new();
        for i in 0..self.element_count() {
            *joint
                .entry((self.class_of[i], other.class_of[i]))
                .or_default() += 1;
        }
        let both: usize = joint.values().map(|&s| pairs(s)).sum();
        a + b - 2 * both
    }

    pub fn stats(&self) -> FibreStats {
        let class_count = self.class_count();
        FibreStats {
            class_count,
            avg_class_size: if class_count == 0 {
                0.0
            } else {
                self.element_count() as f64 / class_count as f64
            },
            nontrivial_count: self.classes.iter().filter(|c| c.len() >= 2).count(),
        }
    }
}
