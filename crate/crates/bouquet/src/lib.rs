//! # bouquet
//!
//! An exact-arithmetic toolkit for the combinatorics of toric contact
//! geometry: good moment cones and their `GL(n+1,Z)`-equivalence, topological
//! invariants read off cone data, joins of contact manifolds and the counting
//! of Sasaki bouquets, moduli dimensions of weighted homogeneous hypersurface
//! links, polygon-space cohomology fed through the Gysin sequence, and
//! floating-point verification of a small catalog of explicit contact
//! structures.
//!
//! All lattice and polyhedral computations use arbitrary-precision integers
//! and rationals; floating point appears only in [`contact`], which checks
//! tensor identities numerically at explicit chart points.
//!
//! The `bouquet` binary exposes every operation as a subcommand; see the
//! [`cli`] module or run `bouquet --help`. A narrative guide with runnable
//! examples lives in `book/` and is kept honest by being compiled as part of
//! `cargo test --doc`.

pub mod census;
pub mod cli;
pub mod cone;
pub mod contact;
pub mod equiv;
pub mod join;
pub mod lattice;
pub mod links;
pub mod polygon;
pub mod rational;

// Every Rust snippet in the book is compiled and run as a doctest so the
// guide cannot drift from the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/lattices.md")]
    mod lattices {}
    #[doc = include_str!("../../../book/src/cones.md")]
    mod cones {}
    #[doc = include_str!("../../../book/src/equivalence.md")]
    mod equivalence {}
    #[doc = include_str!("../../../book/src/joins.md")]
    mod joins {}
    #[doc = include_str!("../../../book/src/links.md")]
    mod links {}
    #[doc = include_str!("../../../book/src/polygon_spaces.md")]
    mod polygon_spaces {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/census.md")]
    mod census {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
