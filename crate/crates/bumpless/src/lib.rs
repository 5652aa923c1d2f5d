//! Exact-arithmetic combinatorics of bumpless pipe dreams.
//!
//! The crate computes β-double Grothendieck polynomials and double Schubert
//! polynomials in several independent ways (divided differences, bumpless pipe
//! dreams, the transition recursion, ordinary pipe dreams, and flagged
//! set-valued tableaux for vexillary permutations), together with the
//! bijections that connect alternating sign matrices, square ice, corner sums,
//! bumpless pipe dreams and tableaux.
//!
//! Conventions used everywhere:
//!
//! - permutations are 1-indexed in one-line notation;
//! - grid cells are `(row, col)` with `(1, 1)` in the north-west corner;
//! - the product of permutations is `(u·v)(k) = u(v(k))`.

pub mod asm;
pub mod bpd;
pub mod error;
pub mod hecke;
pub mod opd;
pub mod perm;
pub mod poly;
pub mod transition;
pub mod vex;

pub use error::{Error, Result};

/// A grid cell `(row, col)`, 1-indexed.
pub type Cell = (usize, usize);

/// Largest `n` accepted by single-permutation polynomial computations.
pub const DEFAULT_POLY_LIMIT: usize = 8;

/// Largest `n` accepted by exhaustive enumerations.
pub const DEFAULT_ENUM_LIMIT: usize = 6;
