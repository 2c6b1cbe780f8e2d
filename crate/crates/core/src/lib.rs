//! Does a random hyperbolic triangle satisfy the *strong* triangle inequality
//! a + b > c + h, where h is the altitude to c?  This crate computes the
//! probability of that event — angles drawn uniformly from (0, π)³ conditioned
//! on α + β + γ < π — with certified error bounds, plus the supporting
//! machinery:
//!
//! * [`hyptrig`] — hyperbolic triangle solver; the ground-truth oracle.
//! * [`criterion`] — the angle-only sign criterion f(α, β, γ), its zero curve
//!   z_γ, the curve endpoints i_γ and e_γ, and the thresholds Γ and B.
//! * [`integrate`] — certified bracketing of the failure volume and the
//!   probability; a fast Gauss–Legendre estimate of the same integrals.
//! * [`montecarlo`] — seeded rejection-sampling estimate, an independent check.
//! * [`raster`] — strength-field frames of the (α, β) square as binary PGM.
//! * [`verify`] — the runnable identity/property suite.

// Guards and verification predicates are written as `!(x > bound)` on
// purpose: a NaN must land in the rejecting branch, which the positive
// rewrites clippy suggests would silently wave through.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::manual_range_contains)]

use std::path::PathBuf;

pub mod criterion;
pub mod hyptrig;
pub mod integrate;
pub mod montecarlo;
pub mod raster;
pub mod verify;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid angles ({alpha}, {beta}, {gamma}): {reason}")]
    InvalidAngles {
        alpha: f64,
        beta: f64,
        gamma: f64,
        reason: &'static str,
    },
    #[error("{what} = {value} outside {domain}")]
    OutsideDomain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },
    #[error("writing {path}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Caps the worker-thread count for the parallel operations. `0` keeps the
/// default (one worker per core). Must be called before any parallel work
/// runs; once the pool exists the call has no effect.
#[cfg(feature = "parallel")]
pub fn configure_threads(threads: usize) {
    if threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
}

/// Sequential build: thread caps are meaningless, accept and ignore them.
#[cfg(not(feature = "parallel"))]
pub fn configure_threads(_threads: usize) {}

/// Maps `f` over `0..n` and collects results in index order, so the output is
/// bitwise identical no matter how many threads execute the map.
#[cfg(feature = "parallel")]
pub(crate) fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..n).map(f).collect()
}
