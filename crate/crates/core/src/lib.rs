//! A finite multiplicative-hyperring computation engine.
//!
//! Hyperrings are explicit tables: an abelian-group addition table and a
//! set-valued multiplication table over a carrier `{0,…,n−1}`. On top of
//! the validated tables the crate provides the hyperideal calculus
//! (enumeration, radical, colon, products), classification of hyperideals
//! into the absorbing prime/primary hierarchy with counterexample
//! witnesses, structural constructions (templates, products, quotients,
//! hypermatrices, the fundamental quotient), and an exhaustive theorem
//! harness over a built-in catalog of rings.

pub mod classify;
pub mod construct;
pub mod gamma;
pub mod harness;
pub mod hom;
pub mod ideal;
pub mod ring;
pub mod set;

pub use ideal::Hyperideal;
pub use ring::{FiniteHyperring, RawHyperring, Ring, RingError};
pub use set::ElemSet;
