//! Motivic Hilbert zeta functions of unibranch curve singularities.
//!
//! Everything is driven by the valuation semigroup `Γ` of the germ: the
//! punctual Hilbert schemes stratify by `Γ`-semimodules, the semimodules of
//! colength `1..c` form a tree under Frobenius adjunction, and propagating
//! `𝕃`-powers along the tree edges yields the coefficients of the zeta
//! function, which stabilize at the conductor `c`.
//!
//! - [`semigroup`]: `Γ` itself: membership table, conductor, gaps, the
//!   monomial classification and the effective bound.
//! - [`semimodule`]: `Γ`-semimodules with minimal generators, syzygies,
//!   generator deletion and Frobenius adjunction.
//! - [`tree`]: level-by-level construction of the semimodule tree.
//! - [`motive`]: `ℤ[𝕃]` arithmetic, class propagation, the zeta function and
//!   its JSON/LaTeX renderings.
//! - [`oracle`]: definition-level brute-force checks for all of the above.
//!
//! ```
//! use std::sync::Arc;
//! use hilbert_zeta::{zeta, NumericalSemigroup};
//!
//! # fn main() -> hilbert_zeta::Result<()> {
//! let semigroup = Arc::new(NumericalSemigroup::from_generators(&[4, 5, 6])?);
//! let z = zeta(&semigroup)?;
//! assert_eq!(z.tail().to_string(), "1 + L + 2L^2 + 3L^3 + 2L^4");
//! # Ok(())
//! # }
//! ```

pub mod error;
pub mod motive;
pub mod oracle;
pub mod semigroup;
pub mod semimodule;
pub mod tree;

pub use error::{Error, Result};
pub use motive::{
    class_exponent, compute_classes, latex_document, zeta, Applicability, HilbertZeta,
    LPolynomial, MotivicClassTable, ZetaDocument,
};
pub use semigroup::{MonomialForm, NumericalSemigroup};
pub use semimodule::{GammaSemimodule, SyzygySet};
pub use tree::{build_tree, build_tree_to_depth, SemimoduleTree, TreeDocument};

#[cfg(test)]
mod tests {
    // Everything is immutable after construction and shareable across threads.
    #[test]
    fn core_types_are_send_and_sync() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<crate::NumericalSemigroup>();
        assert_send_sync::<crate::GammaSemimodule>();
        assert_send_sync::<crate::SemimoduleTree>();
        assert_send_sync::<crate::MotivicClassTable>();
        assert_send_sync::<crate::HilbertZeta>();
    }
}
