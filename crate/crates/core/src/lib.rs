//! Rational Dyck positroids in exact arithmetic.
//!
//! A rational Dyck path of type `(m, d)` determines a totally nonnegative
//! `d x (d+m)` integer matrix and hence a positroid on `[d+m]`. This crate
//! builds that positroid and converts it among its representations: bases,
//! Grassmann necklaces, decorated permutations, Le-diagrams, plabic graphs
//! and two inequality descriptions of its matroid polytope. Every conversion
//! has an independent route it can be checked against; see [`verify`].

pub mod convert;
pub mod counting;
pub mod error;
pub mod lediagram;
pub mod linalg;
pub mod matrix;
pub mod necklace;
pub mod path;
pub mod permutation;
pub mod plabic;
pub mod polytope;
pub mod positroid;
pub mod registry;
pub mod routes;
pub mod subset;
pub mod verify;

pub use error::{Error, Result};
pub use path::{enumerate_paths, DyckPath, Step};
pub use subset::Subset;
