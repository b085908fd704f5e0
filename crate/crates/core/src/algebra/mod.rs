//! Graded Artinian algebras: the Apéry-set algebra, the box algebra `G`,
//! their linear models and defining ideals.

pub mod graded;
pub mod ideal;
pub mod monomial;

pub use graded::{Coefficient, GorensteinCheck, GradedAlgebra, LinearForm, MultiplicationMatrix};
pub use ideal::{
    brute_force_relations, ci_tilde_ideal, codim3_defining_ideal, ideal_span, quotient_by_ideal,
    relation_span, same_defining_ideal, IdealDescription,
};
pub use monomial::{
    build_algebra, build_gamma_algebra, BasisLabel, MonomialAlgebra, MonomialSubspace,
};
