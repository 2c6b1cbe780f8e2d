//! Hyperbolic triangle solver (curvature −1). Angles go in, the four lengths
//! and the strong-triangle-inequality strength a + b − c − h come out.
//!
//! Sides come from the dual law of cosines, cosh a = (cos β cos γ + cos α) /
//! (sin β sin γ) and cyclic variants; the altitude to c from sinh h =
//! sinh b · sin α.

use crate::{Error, Result};
use std::f64::consts::PI;

/// Angles (α, β, γ) of a hyperbolic triangle, in radians.
///
/// Constructible only when all three are positive and α + β + γ < π, both
/// strict with zero tolerance; boundary triples (Euclidean limit) are
/// rejected.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AngleTriple {
    alpha: f64,
    beta: f64,
    gamma: f64,
}

impl AngleTriple {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        let invalid = |reason| {
            Err(Error::InvalidAngles {
                alpha,
                beta,
                gamma,
                reason,
            })
        };
        if !(alpha.is_finite() && beta.is_finite() && gamma.is_finite()) {
            return invalid("angles must be finite");
        }
        if !(alpha > 0.0 && beta > 0.0 && gamma > 0.0) {
            return invalid("angles must be positive");
        }
        if !(alpha + beta + gamma < PI) {
            return invalid("angle sum must be below pi");
        }
        Ok(Self { alpha, beta, gamma })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// Side lengths, the altitude h to side c, and the signed strength a+b−c−h.
#[derive(Clone, Copy, Debug)]
pub struct TriangleSolution {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub h: f64,
    pub strength: f64,
}

// Feasible triples keep every cosh argument ≥ 1; rounding near the angle-sum
// boundary can push one marginally below, so arguments within 1e-12 of 1 snap
// back to the boundary instead of producing NaN.
fn acosh_guarded(x: f64) -> f64 {
    if x < 1.0 && x >= 1.0 - 1e-12 {
        0.0
    } else {
        x.acosh()
    }
}

pub fn solve_triangle(angles: AngleTriple) -> TriangleSolution {
    let (sa, ca) = angles.alpha.sin_cos();
    let (sb, cb) = angles.beta.sin_cos();
    let (sg, cg) = angles.gamma.sin_cos();
    let cha = (cb * cg + ca) / (sb * sg);
    let chb = (ca * cg + cb) / (sa * sg);
    let chc = (ca * cb + cg) / (sa * sb);
    let a = acosh_guarded(cha);
    let b = acosh_guarded(chb);
    let c = acosh_guarded(chc);
    let shb = (chb * chb - 1.0).max(0.0).sqrt();
    let h = (shb * sa).asinh();
    let strength = (a + b) - (c + h);
    TriangleSolution {
        a,
        b,
        c,
        h,
        strength,
    }
}

/// Strong triangle inequality a + b > c + h; an exact zero counts as failure.
pub fn sti_holds(angles: AngleTriple) -> bool {
    solve_triangle(angles).strength > 0.0
}

/// (a + b − c) / h. Exceeds 1 exactly when the strong inequality holds, and
/// converges to the Euclidean ratio (sin α + sin β − sin γ)/(sin α sin β) as
/// the angle sum approaches π.
pub fn euclidean_strength_ratio(angles: AngleTriple) -> f64 {
    let s = solve_triangle(angles);
    (s.a + s.b - s.c) / s.h
}
