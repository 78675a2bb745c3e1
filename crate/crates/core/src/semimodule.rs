//! Γ-semimodules represented by their finite gap sets.
//!
//! A semimodule `Δ ⊆ Γ` satisfies `Δ + Γ ⊆ Δ`; the canonical representation
//! here is the finite complement `Γ \ Δ`, ascending. Everything else (the
//! colength, the Frobenius element, the minimal generators and the syzygies)
//! is derived from the gap set and the ambient membership table.

use std::cmp::Ordering;
use std::sync::{Arc, OnceLock};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A `Γ`-subsemimodule `Δ`, canonically represented by `Γ \ Δ`.
#[derive(Debug, Clone)]
pub struct GammaSemimodule {
    semigroup: Arc<NumericalSemigroup>,
    gap_set: Vec<u64>,
    min_gens: OnceLock<Vec<u64>>,
}

/// The syzygy semimodule `Syz(Δ)`: elements of `Δ` reachable from two
/// distinct minimal generators.
///
/// `elements` is truncated at the ambient table bound. `min_gens` lists every
/// minimal generator up to `min(Syz) + c - 1` capped at the bound; when the
/// cap bites, `complete` is false and generators above the bound may be
/// missing. Generators below the Frobenius element of `Δ` are always present,
/// which is all the class recursion consumes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygySet {
    pub elements: Vec<u64>,
    pub min_gens: Vec<u64>,
    pub complete: bool,
}

impl GammaSemimodule {
    /// The full module `Δ = Γ` (colength 0).
    pub fn full(semigroup: &Arc<NumericalSemigroup>) -> Self {
        let min_gens = OnceLock::new();
        min_gens.set(vec![0]).expect("fresh cell");
        GammaSemimodule {
            semigroup: Arc::clone(semigroup),
            gap_set: Vec::new(),
            min_gens,
        }
    }

    /// The maximal ideal `Δ_1 = Γ \ {0}`, the root of the semimodule tree.
    pub fn maximal_ideal(semigroup: &Arc<NumericalSemigroup>) -> Self {
        let min_gens = OnceLock::new();
        min_gens
            .set(semigroup.generators().to_vec())
            .expect("fresh cell");
        GammaSemimodule {
            semigroup: Arc::clone(semigroup),
            gap_set: vec![0],
            min_gens,
        }
    }

    /// Build a semimodule from an explicit gap set, validating the semimodule
    /// axioms.
    pub fn from_gap_set(semigroup: &Arc<NumericalSemigroup>, mut gaps: Vec<u64>) -> Result<Self> {
        gaps.sort_unstable();
        gaps.dedup();
        if let Some(&top) = gaps.last() {
            if top > semigroup.bound() {
                return Err(Error::OutOfBound {
                    n: top,
                    bound: semigroup.bound(),
                });
            }
            if gaps[0] != 0 {
                return Err(Error::InvalidGapSet {
                    detail: "a proper semimodule must miss 0".into(),
                });
            }
        }
        for &x in &gaps {
            if !semigroup.member(x) {
                return Err(Error::InvalidGapSet {
                    detail: format!("{x} is not an element of the semigroup"),
                });
            }
            for &g in semigroup.generators() {
                if x >= g && semigroup.member(x - g) && gaps.binary_search(&(x - g)).is_err() {
                    return Err(Error::InvalidGapSet {
                        detail: format!("{x} is missing but {x} - {g} is not"),
                    });
                }
            }
        }
        Ok(GammaSemimodule {
            semigroup: Arc::clone(semigroup),
            gap_set: gaps,
            min_gens: OnceLock::new(),
        })
    }

    /// Build the semimodule `∪ (γ + Γ)` over the given generators.
    pub fn generated_by(semigroup: &Arc<NumericalSemigroup>, gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidGapSet {
                detail: "a semimodule needs at least one generator".into(),
            });
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        for &g in &gens {
            if !semigroup.contains(g)? {
                return Err(Error::InvalidGapSet {
                    detail: format!("generator {g} is not an element of the semigroup"),
                });
            }
        }
        // Gaps live below min(gens) + c: anything above has n - gens[0] ∈ Γ.
        let scan_end = gens[0] + semigroup.conductor();
        if scan_end > semigroup.bound() + 1 {
            return Err(Error::BoundTooSmall {
                required: scan_end.saturating_sub(1),
                bound: semigroup.bound(),
            });
        }
        let covered = |n: u64| {
            gens.iter()
                .any(|&g| n >= g && semigroup.member(n - g))
        };
        let gap_set: Vec<u64> = (0..scan_end)
            .filter(|&n| semigroup.member(n) && !covered(n))
            .collect();
        Ok(GammaSemimodule {
            semigroup: Arc::clone(semigroup),
            gap_set,
            min_gens: OnceLock::new(),
        })
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    /// The gap set `Γ \ Δ`, ascending. Doubles as the canonical key.
    pub fn gap_set(&self) -> &[u64] {
        &self.gap_set
    }

    /// Owned copy of the gap set; two semimodules over the same semigroup are
    /// equal iff their keys are equal.
    pub fn canonical_key(&self) -> Vec<u64> {
        self.gap_set.clone()
    }

    /// The colength `ℓ = #(Γ \ Δ)`.
    pub fn ell(&self) -> usize {
        self.gap_set.len()
    }

    /// Membership in `Δ`.
    pub fn contains(&self, n: u64) -> Result<bool> {
        Ok(self.semigroup.contains(n)? && self.gap_set.binary_search(&n).is_err())
    }

    fn member(&self, n: u64) -> bool {
        self.semigroup.member(n) && self.gap_set.binary_search(&n).is_err()
    }

    /// The smallest element of `Δ`. On a certified table this always exists;
    /// a truncated table may not reach it, which is a bound error.
    pub fn min_element(&self) -> Result<u64> {
        (0..=self.semigroup.bound())
            .find(|&n| self.member(n))
            .ok_or(Error::BoundTooSmall {
                required: self.semigroup.bound() + 1,
                bound: self.semigroup.bound(),
            })
    }

    /// The Frobenius element `γ_Δ = max(Γ \ Δ)`.
    pub fn frobenius_element(&self) -> Result<u64> {
        self.gap_set.last().copied().ok_or(Error::FullModule)
    }

    /// The minimal generators `γ_1 < ... < γ_m` with `Δ = ∪ (γ_i + Γ)`.
    ///
    /// Cached after the first call. Every generator lies within
    /// `[min(Δ), min(Δ) + c - 1]`; if the table cannot certify that window the
    /// call fails with [`Error::BoundTooSmall`].
    pub fn minimal_generators(&self) -> Result<&[u64]> {
        if let Some(cached) = self.min_gens.get() {
            return Ok(cached);
        }
        let first = self.min_element()?;
        let window_end = first + self.semigroup.conductor().saturating_sub(1);
        if window_end > self.semigroup.bound() {
            return Err(Error::BoundTooSmall {
                required: window_end,
                bound: self.semigroup.bound(),
            });
        }
        let mut gens: Vec<u64> = Vec::new();
        for a in first..=window_end {
            if !self.member(a) {
                continue;
            }
            // a is a generator iff no earlier generator reaches it within Γ.
            if gens.iter().all(|&g| !self.semigroup.member(a - g)) {
                gens.push(a);
            }
        }
        Ok(self.min_gens.get_or_init(|| gens))
    }

    /// The syzygy semimodule of `Δ` (all elements with at least two distinct
    /// minimal-generator decompositions, up to the table bound).
    pub fn syzygy(&self) -> Result<SyzygySet> {
        let gens = self.minimal_generators()?.to_vec();
        let bound = self.semigroup.bound();
        let mut elements = Vec::new();
        if gens.len() >= 2 {
            for a in gens[0]..=bound {
                if !self.member(a) {
                    continue;
                }
                let decompositions = gens
                    .iter()
                    .filter(|&&g| a >= g && self.semigroup.member(a - g))
                    .take(2)
                    .count();
                if decompositions >= 2 {
                    elements.push(a);
                }
            }
        }
        let (min_gens, complete) = match elements.first() {
            None => (Vec::new(), true),
            Some(&first) => {
                let window_end = first + self.semigroup.conductor().saturating_sub(1);
                let complete = window_end <= bound;
                let mut syz_gens: Vec<u64> = Vec::new();
                for &sigma in elements.iter().take_while(|&&s| s <= window_end.min(bound)) {
                    if syz_gens.iter().all(|&g| !self.semigroup.member(sigma - g)) {
                        syz_gens.push(sigma);
                    }
                }
                (syz_gens, complete)
            }
        };
        Ok(SyzygySet {
            elements,
            min_gens,
            complete,
        })
    }

    /// Remove the `index`-th minimal generator (0-based, ascending), giving a
    /// semimodule of colength `ℓ + 1`.
    pub fn delete_generator(&self, index: usize) -> Result<Self> {
        let gens = self.minimal_generators()?;
        if index >= gens.len() {
            return Err(Error::IndexOutOfRange {
                index,
                len: gens.len(),
            });
        }
        let removed = gens[index];
        let mut gap_set = self.gap_set.clone();
        let pos = gap_set.binary_search(&removed).expect_err("generator is in Δ");
        gap_set.insert(pos, removed);
        Ok(GammaSemimodule {
            semigroup: Arc::clone(&self.semigroup),
            gap_set,
            min_gens: OnceLock::new(),
        })
    }

    /// Adjoin the Frobenius element: `m(Δ) = Δ ∪ {γ_Δ}`, colength `ℓ - 1`.
    pub fn adjoin_frobenius(&self) -> Result<Self> {
        if self.gap_set.is_empty() {
            return Err(Error::FullModule);
        }
        let mut gap_set = self.gap_set.clone();
        gap_set.pop();
        Ok(GammaSemimodule {
            semigroup: Arc::clone(&self.semigroup),
            gap_set,
            min_gens: OnceLock::new(),
        })
    }

    /// Label `(γ_1,...,γ_m)` used in trees and DOT output.
    pub fn label(&self) -> Result<String> {
        let gens = self.minimal_generators()?;
        let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        Ok(format!("({})", parts.join(",")))
    }
}

impl PartialEq for GammaSemimodule {
    fn eq(&self, other: &Self) -> bool {
        self.semigroup.generators() == other.semigroup.generators()
            && self.gap_set == other.gap_set
    }
}

impl Eq for GammaSemimodule {}

impl PartialOrd for GammaSemimodule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GammaSemimodule {
    fn cmp(&self, other: &Self) -> Ordering {
        self.semigroup
            .generators()
            .cmp(other.semigroup.generators())
            .then_with(|| self.gap_set.cmp(&other.gap_set))
    }
}

impl std::hash::Hash for GammaSemimodule {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.gap_set.hash(state);
    }
}

impl Serialize for GammaSemimodule {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let gens = self
            .minimal_generators()
            .map_err(serde::ser::Error::custom)?;
        let mut s = serializer.serialize_struct("GammaSemimodule", 3)?;
        s.serialize_field("min_gens", gens)?;
        s.serialize_field("gaps", &self.gap_set)?;
        s.serialize_field("ell", &self.ell())?;
        s.end()
    }
}
