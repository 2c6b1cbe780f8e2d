//! Angle-only sign criterion for the strong triangle inequality.
//!
//! On F = { 0 < α, β;  max(α, β) < γ < π/2;  α + β + γ < π } the sign of
//!
//! f(α,β,γ) = cos²β + ((cos β cos γ + cos α)/sin γ)²
//!            − ((cos α cos β + cos γ)/(cos γ + 1 − sin γ) − 1)²
//!
//! matches the sign of the strength a+b−c−h, so failure regions can be mapped
//! without solving triangles. f is quadratic in cos β; its admissible root
//! gives the zero curve z_γ(α), which starts at i_γ = lim_{α→0+} z_γ(α) and —
//! once γ passes B — meets the diagonal α + β = π − γ at α = e_γ.
//!
//! Two thresholds bound the interesting range of γ: below Γ (root of
//! −1 − cos γ + sin γ + sin(γ/2) sin γ) the inequality always holds, and
//! B = arctan(24/7) is where the zero curve first touches the diagonal.

use crate::{Error, Result};
use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

/// Coefficients of qa·cos²β + qb·cos β + qc = 0, the quadratic satisfied by
/// cos β on the zero set of f at fixed (α, γ).
#[derive(Clone, Copy, Debug)]
pub struct QuadCoeffs {
    pub qa: f64,
    pub qb: f64,
    pub qc: f64,
}

/// The two γ thresholds, computed once at first use.
#[derive(Clone, Copy, Debug)]
pub struct RegionConstants {
    /// Γ: below this γ the strong inequality never fails.
    pub gamma_crit: f64,
    /// B = arctan(24/7): regime boundary where the zero curve reaches the
    /// diagonal.
    pub bb_bound: f64,
}

/// −1 − cos γ + sin γ + sin(γ/2)·sin γ; Γ is its unique root in [1.1, 1.2].
pub fn gamma_crit_residual(gamma: f64) -> f64 {
    -1.0 - gamma.cos() + gamma.sin() + (0.5 * gamma).sin() * gamma.sin()
}

pub fn constants() -> &'static RegionConstants {
    static CONSTANTS: OnceLock<RegionConstants> = OnceLock::new();
    CONSTANTS.get_or_init(|| {
        let (mut lo, mut hi) = (1.1_f64, 1.2_f64);
        assert!(
            gamma_crit_residual(lo) < 0.0 && gamma_crit_residual(hi) > 0.0,
            "bisection bracket for gamma_crit lost its sign change"
        );
        loop {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if gamma_crit_residual(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        RegionConstants {
            gamma_crit: 0.5 * (lo + hi),
            bb_bound: (24.0_f64 / 7.0).atan(),
        }
    })
}

pub fn gamma_crit() -> f64 {
    constants().gamma_crit
}

pub fn bb_bound() -> f64 {
    constants().bb_bound
}

fn check_f_domain(alpha: f64, beta: f64, gamma: f64) -> Result<()> {
    if alpha > 0.0
        && beta > 0.0
        && gamma > alpha.max(beta)
        && gamma < FRAC_PI_2
        && alpha + beta + gamma < PI
    {
        Ok(())
    } else {
        Err(Error::OutsideDomain {
            what: "(alpha, beta, gamma)",
            value: gamma,
            domain: "F: 0 < alpha, beta < gamma < pi/2 and alpha+beta+gamma < pi",
        })
    }
}

/// The sign criterion itself. Only valid on F; the sign says nothing outside.
pub fn f_value(alpha: f64, beta: f64, gamma: f64) -> Result<f64> {
    check_f_domain(alpha, beta, gamma)?;
    let (sg, cg) = gamma.sin_cos();
    let ca = alpha.cos();
    let cb = beta.cos();
    let t1 = (cb * cg + ca) / sg;
    let t2 = (ca * cb + cg) / (cg + 1.0 - sg) - 1.0;
    Ok(cb * cb + t1 * t1 - t2 * t2)
}

/// Coefficients of the quadratic in cos β equivalent to f(α, β, γ) = 0.
pub fn quad_coeffs(alpha: f64, gamma: f64) -> Result<QuadCoeffs> {
    if !(alpha > 0.0 && alpha < gamma && gamma < FRAC_PI_2) {
        return Err(Error::OutsideDomain {
            what: "(alpha, gamma)",
            value: alpha,
            domain: "0 < alpha < gamma < pi/2",
        });
    }
    let (sg, cg) = gamma.sin_cos();
    let ca = alpha.cos();
    let denom = cg + 1.0 - sg;
    let qa = 1.0 / (sg * sg) - (ca / denom) * (ca / denom);
    let qb = ca * (cg + 1.0) / (sg * sg);
    let qc = (ca / sg) * (ca / sg) - ((1.0 - sg) / denom) * ((1.0 - sg) / denom);
    Ok(QuadCoeffs { qa, qb, qc })
}

/// β on the zero curve of f at fixed γ, via the minus-branch root of the
/// quadratic in cos β, with three guards: a vanished discriminant falls back
/// to the vertex −qb/(2·qa), a root escaping [−1, 1] yields 0, and the result
/// is capped by the diagonal at π − α − γ.
pub fn z_of_alpha(gamma: f64, alpha: f64) -> Result<f64> {
    if !(gamma > constants().gamma_crit && gamma < FRAC_PI_2) {
        return Err(Error::OutsideDomain {
            what: "gamma",
            value: gamma,
            domain: "(gamma_crit, pi/2)",
        });
    }
    let QuadCoeffs { qa, qb, qc } = quad_coeffs(alpha, gamma)?;
    if qa == 0.0 {
        // degenerate linear case: the lone root cos β = −qc/qb is negative
        // (qb, qc > 0), never an admissible β below γ
        return Ok(0.0);
    }
    let d = qb * qb - 4.0 * qa * qc;
    let sol = if d >= 0.0 {
        (-qb - d.sqrt()) / (2.0 * qa)
    } else {
        -qb / (2.0 * qa)
    };
    if !(-1.0..=1.0).contains(&sol) {
        return Ok(0.0);
    }
    Ok(sol.acos().min(PI - alpha - gamma))
}

/// i_γ = lim_{α→0+} z_γ(α), in closed form. Needs γ ≥ Γ (the arccos argument
/// leaves [−1, 1] below Γ, where the zero curve does not exist).
pub fn i_of_gamma(gamma: f64) -> Result<f64> {
    if !(gamma >= constants().gamma_crit && gamma < FRAC_PI_2) {
        return Err(Error::OutsideDomain {
            what: "gamma",
            value: gamma,
            domain: "[gamma_crit, pi/2)",
        });
    }
    let (sg, cg) = gamma.sin_cos();
    let arg = ((sg - 1.0) * (sg - 1.0) + cg) / (2.0 * sg - cg - 1.0);
    Ok(arg.clamp(-1.0, 1.0).acos())
}

/// e_γ = 2 arctan(1/2 − √(tan(γ/2) − 3/4)), the α where the zero curve meets
/// the diagonal. For tan(γ/2) < 3/4 the square root argument is negative and
/// the solution collapses to 2 arctan(1/2).
pub fn e_of_gamma(gamma: f64) -> Result<f64> {
    if !(gamma > 0.0 && gamma < FRAC_PI_2) {
        return Err(Error::OutsideDomain {
            what: "gamma",
            value: gamma,
            domain: "(0, pi/2)",
        });
    }
    let d = (0.5 * gamma).tan() - 0.75;
    let sol = if d < 0.0 { 0.5 } else { 0.5 - d.sqrt() };
    Ok(2.0 * sol.atan())
}
