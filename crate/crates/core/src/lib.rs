//! Exact primary covering numbers of finite groups.
//!
//! A *primary covering* of a finite group `G` is a family of proper
//! subgroups whose union contains every element of prime-power order.
//! The crate computes the minimum size `σ₀(G)` of such a family, together
//! with the ordinary covering number `σ(G)`, in three complementary ways:
//!
//! * [`combinat`] and [`families`] work symbolically with the maximal
//!   subgroups of `Sₙ` (set stabilizers, block stabilizers, catalogued
//!   primitive groups) using exact big-integer arithmetic.
//! * [`permgroup`] enumerates small permutation groups concretely, including
//!   their full subgroup lattice up to conjugacy.
//! * [`cover`] solves the resulting minimum set-cover instances exactly by
//!   branch-and-bound with certified lower bounds.
//!
//! [`verify`] ties the three together into reproducible checks, and
//! [`cli`] exposes them on the command line.

pub mod cli;
pub mod combinat;
pub mod cover;
pub mod error;
pub mod families;
pub mod permgroup;
pub mod verify;

pub use error::{Error, Result};
