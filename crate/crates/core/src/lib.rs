//! Exact decision procedures for operator Farkas-type theorems in the
//! Kantorovich space `Y = Q^m`.
//!
//! Every procedure is constructive in both directions: it returns either a
//! multiplier certificate or a counterexample witness, and every returned
//! object has a `verify` method that re-checks it with exact rational
//! arithmetic and zero tolerance.
//!
//! | module | decides |
//! |---|---|
//! | [`lattice`] | the space `Q^m`, bands, orthomorphisms, truth values, mixing |
//! | [`lp`] | exact two-phase simplex, Farkas multipliers, conic membership |
//! | [`farkas`] | homogeneous/inhomogeneous/matrix dominance, reconstruction, factorization |
//! | [`interval`] | weak interval solutions and the support-map inclusion |
//! | [`complex`] | complex multipliers with certified modulus bounds |
//! | [`oracle`] | LP-free cross-checks by extreme-ray enumeration and sampling |
//!
//! All functions are pure. Per-stratum work can be spread over threads with
//! the `_with(.., Exec::Parallel)` variants; results are merged in stratum
//! order, so output does not depend on scheduling.

pub mod complex;
pub mod error;
pub mod farkas;
pub mod interval;
pub mod lattice;
pub mod linalg;
pub mod lp;
pub mod oracle;
pub mod sample;
pub mod strata;

pub use error::{Error, Result};
pub use strata::Exec;
