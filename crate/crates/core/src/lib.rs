//! Extremal functions of forbidden 0-1 matrix patterns.
//!
//! The crate computes weight extremal values (the most ones an `m x n`
//! matrix can hold while avoiding a set of patterns) and column extremal
//! values (the most columns an `m`-row matrix can have with at least `k`
//! ones per column) exactly at small sizes, builds the constructions that
//! give lower bounds, and turns matrices into bar s-visibility hypergraphs to
//! check the linear upper bound for the `T_{r,s}` family.
//!
//! ```
//! use matex::matrix::{contains, Matrix01};
//! use matex::patterns::{generate_t, TrsParams};
//!
//! let t10 = generate_t(TrsParams::new(1, 0));
//! let diamond = &t10.patterns()[0];
//! assert!(contains(&Matrix01::ones(3, 3), diamond));
//! assert!(!contains(&Matrix01::identity(4), diamond));
//! ```

pub mod comb;
pub mod constructions;
mod containment;
pub mod error;
pub mod matrix;
pub mod oracle;
pub mod patterns;
pub mod render;
pub mod search;
pub mod verify;
pub mod visibility;

pub use error::{Error, Result};
pub use matrix::{Matrix01, PatternSet};
