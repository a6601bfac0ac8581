//! Sets with two associative operations ("duplexes").
//!
//! The crate provides four concrete duplexes together with their normal forms
//! and the canonical homomorphisms between them:
//!
//! * [`Permutation`] with block concatenation `♯` and anti-diagonal
//!   concatenation `♮`, free on the permutations that are indecomposable for
//!   both operations ([`permutation::duplex_factorize`]);
//! * [`DecoratedTree`] / [`DuplexExpr`], the free duplex on a set of
//!   generators built from planar rooted trees ([`planar::PlanarTree`]);
//! * [`BinaryTree`] with the over/under operations;
//! * [`CubeVertex`], sign vectors with concatenation.
//!
//! [`laws`] audits the identities of the four varieties by exhaustive search
//! and [`series`] checks the counting identities with exact truncated power
//! series.
//!
//! Heavy enumerations run on rayon when the `parallel` feature is enabled
//! (the default); see [`Strategy`].

pub mod binary;
pub mod config;
pub mod cube;
pub mod decorated;
mod error;
pub mod laws;
pub mod morphisms;
pub mod ops;
pub mod permutation;
pub mod planar;
pub mod series;

pub use binary::BinaryTree;
pub use config::{Config, Strategy};
pub use cube::{CubeVertex, Sign};
pub use decorated::{Alphabet, DecoratedTree, DuplexExpr, Symbol};
pub use error::{Error, Result};
pub use ops::{DuplexOp, DuplexOps};
pub use permutation::{IndecKind, Permutation};
pub use planar::PlanarTree;
