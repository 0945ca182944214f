//! Exact arithmetic for the first Weyl algebra `A_1 = K<x, y> / (xy - yx - 1)` over
//! the rationals and its hom-associative deformations `A_1^k`.
//!
//! * [`poly`] holds normal-ordered polynomials and the associative product.
//! * [`algebra`] adds the twisting map `alpha_k` and the star product.
//! * [`morphism`] builds and audits morphisms `A_1^k -> A_1^l` and derivations.
//! * [`series`] realizes the formal deformation in an indeterminate `t`.
//! * [`verifier`] runs seeded, bounded suites over all of the above.
//! * [`expr`] parses and prints the expression language used by the `homweyl` CLI.
//!
//! ```
//! use homweyl::{AlgebraCtx, Scalar, WeylPoly};
//!
//! let ctx = AlgebraCtx::new(Scalar::from_int(1));
//! let xy = ctx.star_mul(&WeylPoly::x(), &WeylPoly::y());
//! assert_eq!(xy.to_string(), "y x + x + 1");
//! assert_eq!(ctx.star_commutator(&WeylPoly::x(), &WeylPoly::y()), WeylPoly::one());
//! ```

pub mod algebra;
pub mod error;
pub mod expr;
pub mod morphism;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod verdict;
pub mod verifier;

pub use algebra::{associator, commutator, AlgebraCtx};
pub use error::{Error, Result};
pub use morphism::{DerivationSpec, GenMorphism};
pub use poly::{Degree, Monomial, WeylPoly};
pub use scalar::Scalar;
pub use series::TruncatedSeries;
pub use verdict::Witness;

// Chapters of the guide in book/ are compiled as doc-tests so their snippets
// cannot drift from the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/weyl-algebra.md")]
    mod weyl_algebra {}
    #[doc = include_str!("../../../book/src/twisting-and-star.md")]
    mod twisting_and_star {}
    #[doc = include_str!("../../../book/src/structure.md")]
    mod structure {}
    #[doc = include_str!("../../../book/src/derivations.md")]
    mod derivations {}
    #[doc = include_str!("../../../book/src/morphisms.md")]
    mod morphisms {}
    #[doc = include_str!("../../../book/src/deformation.md")]
    mod deformation {}
    #[doc = include_str!("../../../book/src/expressions.md")]
    mod expressions {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
