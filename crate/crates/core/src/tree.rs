//! The levelled tree `G_Γ` of semimodules of colength `1..c`.
//!
//! Level `ℓ` holds every semimodule with `#(Γ \ Δ) = ℓ`, generated from level
//! `ℓ-1` by deleting minimal generators and deduplicated by canonical key.
//! The deletion graph is not a tree, so each node's unique parent is fixed by
//! Frobenius adjunction `Δ ↦ Δ ∪ {γ_Δ}` instead of by the deletion that
//! happened to produce it first.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::semimodule::GammaSemimodule;

/// The tree of semimodules, levels sorted by canonical key.
#[derive(Debug, Clone)]
pub struct SemimoduleTree {
    semigroup: Arc<NumericalSemigroup>,
    levels: Vec<Vec<GammaSemimodule>>,
    parents: Vec<Vec<usize>>,
}

/// Serialization wrapper for the tree.
#[derive(Serialize)]
pub struct TreeDocument<'a> {
    pub schema_version: u32,
    pub generators: &'a [u64],
    pub conductor: u64,
    pub levels: &'a [Vec<GammaSemimodule>],
    pub parents: &'a [Vec<usize>],
}

/// Build the tree down to colength `c` (the conductor), where the level
/// classes stabilize.
pub fn build_tree(semigroup: &Arc<NumericalSemigroup>) -> Result<SemimoduleTree> {
    build_tree_to_depth(semigroup, semigroup.conductor() as usize)
}

/// Build the tree down to an explicit colength. Depths beyond the conductor
/// are only needed to observe stabilization; they require a table bound a
/// little past the effective bound.
pub fn build_tree_to_depth(
    semigroup: &Arc<NumericalSemigroup>,
    depth: usize,
) -> Result<SemimoduleTree> {
    if semigroup.is_full() || depth == 0 {
        return Err(Error::DegenerateSemigroup);
    }
    let root = GammaSemimodule::maximal_ideal(semigroup);
    let mut levels: Vec<Vec<GammaSemimodule>> = vec![vec![root]];
    let mut parents: Vec<Vec<usize>> = vec![Vec::new()];
    for k in 1..depth {
        let mut next: BTreeMap<Vec<u64>, GammaSemimodule> = BTreeMap::new();
        for node in &levels[k - 1] {
            let count = node.minimal_generators()?.len();
            for i in 0..count {
                let child = node.delete_generator(i)?;
                next.entry(child.canonical_key()).or_insert(child);
            }
        }
        let (level, parent_row) = {
            let prev_index: BTreeMap<&[u64], usize> = levels[k - 1]
                .iter()
                .enumerate()
                .map(|(i, d)| (d.gap_set(), i))
                .collect();
            let mut level = Vec::with_capacity(next.len());
            let mut parent_row = Vec::with_capacity(next.len());
            for (_, child) in next {
                let parent = child.adjoin_frobenius()?;
                let idx = *prev_index
                    .get(parent.gap_set())
                    .expect("parent of every node lies in the previous level");
                level.push(child);
                parent_row.push(idx);
            }
            (level, parent_row)
        };
        levels.push(level);
        parents.push(parent_row);
    }
    Ok(SemimoduleTree {
        semigroup: Arc::clone(semigroup),
        levels,
        parents,
    })
}

impl SemimoduleTree {
    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    /// Number of levels built (the conductor, unless overridden).
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// The semimodules of colength `ell` (1-based), sorted by canonical key.
    pub fn level(&self, ell: usize) -> &[GammaSemimodule] {
        &self.levels[ell - 1]
    }

    pub fn levels(&self) -> &[Vec<GammaSemimodule>] {
        &self.levels
    }

    /// Index (within level `ell - 1`) of the Frobenius parent of node `i` in
    /// level `ell`; `None` for the root level.
    pub fn parent_index(&self, ell: usize, i: usize) -> Option<usize> {
        if ell <= 1 {
            None
        } else {
            Some(self.parents[ell - 1][i])
        }
    }

    pub fn parent_of(&self, ell: usize, i: usize) -> Option<&GammaSemimodule> {
        self.parent_index(ell, i)
            .map(|p| &self.levels[ell - 2][p])
    }

    /// The level sizes `χ_1, ..., χ_depth` (Euler numbers of the punctual
    /// Hilbert schemes).
    pub fn euler_numbers(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Locate a node by canonical key.
    pub fn find(&self, ell: usize, key: &[u64]) -> Option<usize> {
        self.level(ell)
            .binary_search_by(|d| d.gap_set().cmp(key))
            .ok()
    }

    pub fn document(&self) -> TreeDocument<'_> {
        TreeDocument {
            schema_version: 1,
            generators: self.semigroup.generators(),
            conductor: self.semigroup.conductor(),
            levels: &self.levels,
            parents: &self.parents,
        }
    }

    /// Graphviz rendering: one node per semimodule labelled by its minimal
    /// generators, one edge per Frobenius parent link, levels pinned to the
    /// same rank. Output is deterministic.
    pub fn export_dot(&self) -> Result<String> {
        self.export_dot_annotated(|_, _| None)
    }

    /// Like [`export_dot`](Self::export_dot) with an extra label line per
    /// node, keyed by (level, index).
    pub fn export_dot_annotated(
        &self,
        annotate: impl Fn(usize, usize) -> Option<String>,
    ) -> Result<String> {
        let mut dot = String::new();
        writeln!(dot, "digraph semimodule_tree {{").unwrap();
        writeln!(dot, "  rankdir=TB;").unwrap();
        writeln!(dot, "  node [shape=box, fontname=\"monospace\"];").unwrap();
        for (k, level) in self.levels.iter().enumerate() {
            for (i, node) in level.iter().enumerate() {
                let mut label = node.label()?;
                if let Some(extra) = annotate(k + 1, i) {
                    label = format!("{label}\\n{extra}");
                }
                writeln!(dot, "  n{}_{} [label=\"{}\"];", k + 1, i, label).unwrap();
            }
        }
        for (k, level) in self.levels.iter().enumerate() {
            let names: Vec<String> = (0..level.len()).map(|i| format!("n{}_{}", k + 1, i)).collect();
            writeln!(dot, "  {{ rank=same; {}; }}", names.join("; ")).unwrap();
        }
        for ell in 2..=self.depth() {
            for i in 0..self.level(ell).len() {
                let p = self.parents[ell - 1][i];
                writeln!(dot, "  n{}_{} -> n{}_{};", ell - 1, p, ell, i).unwrap();
            }
        }
        writeln!(dot, "}}").unwrap();
        Ok(dot)
    }
}
