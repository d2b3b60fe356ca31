//! Exact-arithmetic tooling for Thron-type continued fractions and the
//! increasing-tree families they enumerate.
//!
//! The crate expands S-, J- and T-type continued fractions to truncated
//! series over sparse integer polynomials, exhaustively enumerates
//! increasing binary trees, restricted ternary trees and their
//! interval-labeled generalization together with their crossing/nesting
//! statistics, implements the bijections onto labeled Motzkin and Schroder
//! paths (and onto permutations), and cross-verifies every identity tying
//! these together: generating-polynomial fraction coefficients, contraction
//! and transformation formulas, production-matrix routes, derivative
//! operators, vincular-pattern symmetries, and a reverse-engineering sweep
//! over quasi-affine coefficient tuples with OEIS lookups.
//!
//! Start with the runnable examples (`cargo run --example expand_fractions`
//! and friends); `verify::verify_all` runs the whole identity suite.

pub mod biject;
pub mod cfrac;
pub mod cli;
pub mod grammar;
pub mod oeis;
pub mod paths;
pub mod perm;
pub mod riordan;
pub mod symbolic;
pub mod treepoly;
pub mod trees;
pub mod util;
pub mod verify;
