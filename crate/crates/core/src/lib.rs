//! Computational toolkit for flag-transitive point-primitive quasi-symmetric
//! 2-designs with block intersection numbers 0 and y.
//!
//! The crate is organised bottom-up:
//!
//! * [`params`] and [`sieve`]: parameter tuples, admissibility checks and the
//!   exhaustive sieve at a fixed number of points.
//! * [`reduction`]: bounds eliminating the twisted wreath, simple diagonal
//!   and product action types of primitive groups.
//! * [`alt`]: case analysis for almost simple groups with alternating socle.
//! * [`sporadic`]: screening of sporadic almost simple groups against their
//!   maximal subgroups.
//! * [`perm`] and [`design`]: a permutation-group engine and the
//!   construction and verification of designs as orbits of base blocks.

pub mod alt;
pub mod arith;
pub mod data;
pub mod design;
pub mod error;
pub mod literature;
pub mod params;
pub mod perm;
pub mod reduction;
pub mod report;
pub mod sieve;
pub mod sporadic;


pub use error::{Error, Result};
pub use params::{check_admissible, gcd_ratio, Candidate, CheckReport, DesignParams, QsProfile, Status};
pub use design::{base_block_search, intersection_numbers, pair_coverage, verify_flag_transitive, Design, IntersectionProfile};
pub use perm::{parse_generators, ActionOrbit, Group, Permutation};
pub use report::EliminationReport;
pub use sieve::{enumerate_for_v, Constraint, SearchBox};
