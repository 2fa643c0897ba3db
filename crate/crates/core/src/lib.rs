//! Exact Frobenius algebras over ℚ, the bicategory of algebras and left-free
//! bimodules, the ambidextrous adjunction a Frobenius form induces, and the
//! 2D TQFT it determines.

pub mod adjunction;
pub mod algebra;
pub mod catalog;
pub mod em;
pub mod error;
pub mod exact;
pub mod frobenius;
pub mod random;
pub mod report;
pub mod tqft;

pub use adjunction::{
    build_ambijunction, check_triangles, compose_adjunctions, frobenius_from_ambijunction, identity_adjunction,
    mate, mate_inv, monad_from_adjunction, self_adjunction_from_ambijunction, Adjunction, Ambijunction,
};
pub use algebra::{Algebra, AlgebraFile};
pub use em::{OneCell, TwoCell};
pub use error::{Error, ParseRationalError, Result, WordError};
pub use exact::{LinearMap, Rational};
pub use frobenius::{build_frobenius, check_frobenius, FrobeniusStructure};
pub use report::{Check, Report};
pub use tqft::{evaluate_word, parse_word, surface_invariant, DiagramWord};
