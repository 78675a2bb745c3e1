//! Definition-level reference implementations.
//!
//! These deliberately avoid the windowed scans of the fast paths: minimal
//! generators are tested against every smaller element, syzygies against the
//! raw two-decomposition condition, and semimodule sets are enumerated by
//! recursive search over downward-closed gap sets. They certify the fast
//! algorithms and back the CLI `--oracle-verify` flag.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::semimodule::GammaSemimodule;
use crate::tree::SemimoduleTree;

/// Enumerate the canonical keys (gap sets) of every `Γ`-semimodule of
/// colength `ell`, searching over subsets of `Γ ∩ [0, bound]` that are closed
/// under generator subtraction within `Γ`.
///
/// Complete whenever `bound` is at least the effective bound of the
/// semigroup.
pub fn enumerate_semimodules(
    semigroup: &Arc<NumericalSemigroup>,
    ell: usize,
    bound: u64,
) -> Result<BTreeSet<Vec<u64>>> {
    if bound > semigroup.bound() {
        return Err(Error::OutOfBound {
            n: bound,
            bound: semigroup.bound(),
        });
    }
    let mut out = BTreeSet::new();
    if ell == 0 {
        out.insert(Vec::new());
        return Ok(out);
    }
    let candidates: Vec<u64> = (0..=bound).filter(|&n| semigroup.member(n)).collect();

    fn recurse(
        semigroup: &NumericalSemigroup,
        candidates: &[u64],
        from: usize,
        current: &mut Vec<u64>,
        ell: usize,
        out: &mut BTreeSet<Vec<u64>>,
    ) {
        if current.len() == ell {
            out.insert(current.clone());
            return;
        }
        let needed = ell - current.len();
        for i in from..candidates.len() {
            if candidates.len() - i < needed {
                break;
            }
            let x = candidates[i];
            // Gap sets grow in ascending order, so closure under generator
            // subtraction can be checked against the finalized prefix.
            let closed = semigroup.generators().iter().all(|&g| {
                x < g || !semigroup.member(x - g) || current.binary_search(&(x - g)).is_ok()
            });
            if closed {
                current.push(x);
                recurse(semigroup, candidates, i + 1, current, ell, out);
                current.pop();
            }
        }
    }

    // Every nonempty gap set contains 0; seed it and extend.
    let mut current = vec![0];
    recurse(semigroup, &candidates, 1, &mut current, ell, &mut out);
    Ok(out)
}

/// Minimal generators straight from the definition: `x ∈ Δ` is a generator
/// iff `x ∉ ∪_{y ∈ Δ, y < x} (y + Γ)`. Scans every element up to the table
/// bound; elements past `min(Δ) + c - 1` never qualify.
pub fn brute_min_generators(module: &GammaSemimodule) -> Result<Vec<u64>> {
    let sg = module.semigroup();
    let elements: Vec<u64> = (0..=sg.bound())
        .filter(|&n| module.contains(n).unwrap_or(false))
        .collect();
    let mut gens = Vec::new();
    for (i, &x) in elements.iter().enumerate() {
        let covered = elements[..i].iter().any(|&y| sg.member(x - y));
        if !covered {
            gens.push(x);
        }
    }
    Ok(gens)
}

/// Syzygy elements straight from the definition: all `σ ∈ Δ` with `σ ≤ bound`
/// admitting decompositions through two distinct minimal generators.
pub fn brute_syzygy_elements(module: &GammaSemimodule, bound: u64) -> Result<Vec<u64>> {
    let sg = module.semigroup();
    if bound > sg.bound() {
        return Err(Error::OutOfBound {
            n: bound,
            bound: sg.bound(),
        });
    }
    let gens = brute_min_generators(module)?;
    let mut elements = Vec::new();
    for sigma in 0..=bound {
        if !module.contains(sigma)? {
            continue;
        }
        let decompositions = gens
            .iter()
            .filter(|&&g| sigma >= g && sg.member(sigma - g))
            .count();
        if decompositions >= 2 {
            elements.push(sigma);
        }
    }
    Ok(elements)
}

/// Check a built tree level by level against the oracle: set equality of
/// canonical keys per level, and agreement of the fast minimal-generator and
/// syzygy paths with brute force on every node.
pub fn verify_tree(tree: &SemimoduleTree) -> Result<()> {
    let sg = tree.semigroup();
    if !sg.certified() {
        return Err(Error::BoundTooSmall {
            required: sg.effective_bound(),
            bound: sg.bound(),
        });
    }
    for ell in 1..=tree.depth() {
        let level = tree.level(ell);
        let keys: BTreeSet<Vec<u64>> = level.iter().map(|d| d.canonical_key()).collect();
        let expected = enumerate_semimodules(sg, ell, sg.bound())?;
        if keys != expected {
            return Err(Error::OracleMismatch {
                detail: format!(
                    "level {ell}: tree has {} semimodules, oracle enumerates {}",
                    keys.len(),
                    expected.len()
                ),
            });
        }
        for module in level {
            let fast = module.minimal_generators()?;
            let brute = brute_min_generators(module)?;
            if fast != brute {
                return Err(Error::OracleMismatch {
                    detail: format!(
                        "minimal generators of {:?} disagree: {fast:?} vs {brute:?}",
                        module.gap_set()
                    ),
                });
            }
            let fast_syz = module.syzygy()?;
            let brute_syz = brute_syzygy_elements(module, sg.bound())?;
            if fast_syz.elements != brute_syz {
                return Err(Error::OracleMismatch {
                    detail: format!(
                        "syzygy elements of {:?} disagree: {:?} vs {brute_syz:?}",
                        module.gap_set(),
                        fast_syz.elements
                    ),
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(gens).unwrap())
    }

    #[test]
    fn enumerates_level_two_of_3_4() {
        let s = sg(&[3, 4]);
        let keys = enumerate_semimodules(&s, 2, s.bound()).unwrap();
        let expected: BTreeSet<Vec<u64>> = [vec![0, 3], vec![0, 4]].into_iter().collect();
        assert_eq!(keys, expected);
    }

    #[test]
    fn level_one_is_the_maximal_ideal() {
        for s in [sg(&[2, 3]), sg(&[3, 4]), sg(&[4, 5, 6]), sg(&[4, 7])] {
            let keys = enumerate_semimodules(&s, 1, s.bound()).unwrap();
            assert_eq!(keys.len(), 1);
            assert_eq!(keys.first().unwrap(), &vec![0]);
        }
    }

    #[test]
    fn level_five_of_4_5_6_has_six_members() {
        let s = sg(&[4, 5, 6]);
        assert_eq!(enumerate_semimodules(&s, 5, s.bound()).unwrap().len(), 6);
    }

    #[test]
    fn enumeration_is_stable_under_larger_bounds() {
        let s = Arc::new(
            NumericalSemigroup::from_generators_with_bound(&[3, 4], 40).unwrap(),
        );
        for ell in 1..=s.conductor() as usize {
            let at_effective = enumerate_semimodules(&s, ell, s.effective_bound()).unwrap();
            let at_table = enumerate_semimodules(&s, ell, s.bound()).unwrap();
            assert_eq!(at_effective, at_table, "level {ell}");
        }
    }

    #[test]
    fn brute_generator_examples() {
        let s456 = sg(&[4, 5, 6]);
        let d1 = GammaSemimodule::maximal_ideal(&s456);
        assert_eq!(brute_min_generators(&d1).unwrap(), vec![4, 5, 6]);

        let s34 = sg(&[3, 4]);
        assert_eq!(
            brute_min_generators(&GammaSemimodule::full(&s34)).unwrap(),
            vec![0]
        );
        let d = GammaSemimodule::generated_by(&s34, &[6, 11]).unwrap();
        assert_eq!(brute_min_generators(&d).unwrap(), vec![6, 11]);
    }

    #[test]
    fn trees_match_the_oracle_across_the_small_conductor_family() {
        // Semigroups of conductor <= 12, including three-generator and
        // non-monomial members; verify_tree re-checks every level against the
        // enumeration and every node against brute force.
        let family: [&[u64]; 9] = [
            &[2, 3],
            &[2, 5],
            &[2, 7],
            &[3, 4],
            &[3, 5],
            &[3, 7],
            &[4, 5, 6],
            &[4, 5, 7],
            &[4, 6, 7],
        ];
        for gens in family {
            let s = sg(gens);
            assert!(s.conductor() <= 12, "{gens:?} left the family");
            let tree = crate::tree::build_tree(&s).unwrap();
            verify_tree(&tree).unwrap_or_else(|e| panic!("{gens:?}: {e}"));
        }
    }

    #[test]
    fn trees_match_the_oracle_on_deeper_two_generated_cases() {
        for gens in [&[4u64, 7], &[5, 7]] {
            let s = sg(gens);
            let tree = crate::tree::build_tree(&s).unwrap();
            verify_tree(&tree).unwrap_or_else(|e| panic!("{gens:?}: {e}"));
        }
    }

    #[test]
    fn brute_syzygy_examples() {
        let s47 = sg(&[4, 7]);
        let d = GammaSemimodule::generated_by(&s47, &[8, 11]).unwrap();
        let elements = brute_syzygy_elements(&d, s47.bound()).unwrap();
        assert_eq!(&elements[..3], &[15, 19, 22]);

        let principal = GammaSemimodule::generated_by(&s47, &[4]).unwrap();
        assert!(brute_syzygy_elements(&principal, s47.bound())
            .unwrap()
            .is_empty());
    }
}
