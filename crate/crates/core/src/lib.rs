//! Graded Artinian algebras attached to the Apéry set of a numerical
//! semigroup, and exact decision procedures for their Weak and Strong
//! Lefschetz properties.

pub mod algebra;
pub mod error;
pub mod inverse;
pub mod lefschetz;
pub mod linalg;
pub mod poly;
pub mod polymatrix;
pub mod seed;
pub mod semigroup;
pub mod sweep;

pub use algebra::{
    build_algebra, build_gamma_algebra, GradedAlgebra, IdealDescription, LinearForm,
    MonomialAlgebra,
};
pub use error::{Error, Result};
pub use inverse::{DualAlgebraView, HessianMatrix};
pub use lefschetz::{LefschetzReport, Method, Property, Verdict};
pub use linalg::{EchelonBasis, RatMatrix};
pub use poly::{Monomial, SparsePoly, Q};
pub use polymatrix::{GenericRank, PolyMatrix, RankMethod};
pub use semigroup::{AperyTable, FrameData, NumericalSemigroup, Representation};
pub use sweep::SweepConfig;
