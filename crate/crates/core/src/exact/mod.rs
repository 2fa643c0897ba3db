//! Exact scalars and dense tensor-legged matrices.

mod linear_map;
mod rational;

pub use linear_map::{compose, kron, legs_match, normalized_legs, EntryWitness, LinearMap};
pub use rational::Rational;
