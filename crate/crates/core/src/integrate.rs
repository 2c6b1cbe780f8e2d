//! The failure volume vol(S̄) = ∫_Γ^{π/2} μ(N_γ) dγ and the probability
//! P = 7/8 − (6/π³)·vol(S̄), computed two ways: certified lower/upper bounds
//! from bracketing Riemann sums of monotone integrands, and a fast nested
//! Gauss–Legendre estimate of the same integrals.
//!
//! Per-slice enclosures of μ(N_γ) come from left/right sums of the decreasing
//! curve z_γ. Across slices, μ(N_γ) itself is *not* monotone — it peaks near
//! γ ≈ 1.41 and falls back to π²/8 — so the outer bracket integrates the
//! success area W(γ) = (π−γ)²/2 − μ(N_γ) instead. W is monotone decreasing:
//! raising γ to γ′ only shrinks the slice (the diagonal α+β < π−γ′ moves in),
//! and every surviving success point stays a success, either because
//! max(α,β) ≥ γ′ still forces the inequality or because f, strictly
//! decreasing in γ, was already ≥ 0 at γ and the point sits in F at both
//! angles — max(α,β) < γ keeps the whole γ-segment inside F, while
//! max(α,β) ∈ [γ, γ′) hands the point to the first case. The triangle-area
//! part (π−γ)²/2 integrates in closed form, so vol = ∫A − ∫W inherits a
//! certified enclosure from the left/right sums of W.

use crate::criterion;
use crate::{map_range, Error, Result};
use std::f64::consts::{FRAC_PI_2, PI};

/// A certified enclosure: the true value lies in [lo, hi], modulo the
/// documented rounding slack.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundInterval {
    pub lo: f64,
    pub hi: f64,
}

impl BoundInterval {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    RiemannCertified,
    Quadrature,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::RiemannCertified => "riemann-certified",
            Method::Quadrature => "quadrature",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ProbabilityResult {
    pub estimate: f64,
    pub bounds: Option<BoundInterval>,
    pub method: Method,
    pub outer_resolution: usize,
    pub inner_resolution: usize,
}

// Sums of correctly-rounded terms can still drift by a few ulps; every
// accumulated bound gets this relative slack in the safe direction so the
// bracket stays valid under the stated rounding model.
const REL_SLACK: f64 = 1e-13;

fn pad_down(x: f64) -> f64 {
    x - x.abs() * REL_SLACK
}

fn pad_up(x: f64) -> f64 {
    x + x.abs() * REL_SLACK
}

/// Area (π−γ)²/2 of the whole admissible (α, β) slice at fixed γ — the
/// trivial upper bound for μ(N_γ).
fn slice_area(gamma: f64) -> f64 {
    0.5 * (PI - gamma) * (PI - gamma)
}

// Brackets ∫₀^{upper} z_γ(α) dα for the decreasing curve z: the right Riemann
// sum bounds below, the left above. Endpoint values are supplied in closed
// form so z is only evaluated at interior nodes.
fn z_integral_bracket(
    gamma: f64,
    upper: f64,
    z_at_zero: f64,
    z_at_upper: f64,
    n: usize,
) -> Result<(f64, f64)> {
    let h = upper / n as f64;
    let mut interior = 0.0;
    for k in 1..n {
        let alpha = upper * k as f64 / n as f64;
        interior += criterion::z_of_alpha(gamma, alpha)?;
    }
    Ok(((interior + z_at_upper) * h, (interior + z_at_zero) * h))
}

/// Certified enclosure of μ(N_γ), the area of the failure region of the
/// (α, β) slice at fixed γ. Below B this is the area under z on (0, i_γ);
/// from B on, the region under z on (0, e_γ) is doubled and corrected by the
/// diagonal cut: 2∫₀^{e_γ} z dα − e_γ² + (π−γ−2e_γ)²/2.
pub fn mu_n(gamma: f64, inner_resolution: usize) -> Result<BoundInterval> {
    let cs = criterion::constants();
    if !(gamma > cs.gamma_crit && gamma < FRAC_PI_2) {
        return Err(Error::OutsideDomain {
            what: "gamma",
            value: gamma,
            domain: "(gamma_crit, pi/2)",
        });
    }
    assert!(inner_resolution >= 2, "inner_resolution must be at least 2");
    let i = criterion::i_of_gamma(gamma)?;
    let (raw_lo, raw_hi) = if gamma < cs.bb_bound {
        z_integral_bracket(gamma, i, i, 0.0, inner_resolution)?
    } else {
        let e = criterion::e_of_gamma(gamma)?;
        let z_at_e = criterion::z_of_alpha(gamma, e)?;
        let (int_lo, int_hi) = z_integral_bracket(gamma, e, i, z_at_e, inner_resolution)?;
        let w = PI - gamma;
        let base = 0.5 * (w - 2.0 * e) * (w - 2.0 * e) - e * e;
        (2.0 * int_lo + base, 2.0 * int_hi + base)
    };
    Ok(BoundInterval {
        lo: pad_down(raw_lo).max(0.0),
        hi: pad_up(raw_hi).min(slice_area(gamma)),
    })
}

fn grid_node(start: f64, span: f64, n: usize, j: usize) -> f64 {
    start + span * j as f64 / n as f64
}

// One regime of the outer integral, over [start, end] with `outer` uniform
// subintervals. `mu_lo_at_start` / `mu_hi_at_end` replace the μ enclosure at
// an endpoint where μ itself is not evaluable (Γ and π/2): only that one side
// of the enclosure is ever read there.
fn bracket_regime(
    start: f64,
    end: f64,
    outer: usize,
    inner: usize,
    mu_lo_at_start: Option<f64>,
    mu_hi_at_end: Option<f64>,
) -> BoundInterval {
    let span = end - start;
    let h = span / outer as f64;
    let enclosures: Vec<BoundInterval> = map_range(outer + 1, |j| {
        if j == 0 {
            if let Some(lo) = mu_lo_at_start {
                return BoundInterval { lo, hi: f64::NAN };
            }
        }
        if j == outer {
            if let Some(hi) = mu_hi_at_end {
                return BoundInterval { lo: f64::NAN, hi };
            }
        }
        let gamma = grid_node(start, span, outer, j);
        mu_n(gamma, inner).expect("interior grid node lies inside (gamma_crit, pi/2)")
    });

    // success area W(γ) = slice_area − μ decreases in γ: left sum of the
    // upper W values over-covers ∫W, right sum of the lower values
    // under-covers it
    let mut w_hi_sum = 0.0;
    let mut w_lo_sum = 0.0;
    for j in 0..outer {
        let g_left = grid_node(start, span, outer, j);
        let g_right = grid_node(start, span, outer, j + 1);
        w_hi_sum += slice_area(g_left) - enclosures[j].lo;
        w_lo_sum += (slice_area(g_right) - enclosures[j + 1].hi).max(0.0);
    }
    let area_integral = ((PI - start).powi(3) - (PI - end).powi(3)) / 6.0;
    BoundInterval {
        lo: pad_down(area_integral - pad_up(h * w_hi_sum)).max(0.0),
        hi: pad_up(area_integral - pad_down(h * w_lo_sum)),
    }
}

/// Certified enclosure of vol(S̄) = ∫_Γ^{π/2} μ(N_γ) dγ. The outer grid is
/// uniform on [Γ, B] and on [B, π/2] separately (`outer_resolution`
/// subintervals each), so the regime switch falls exactly on a node; μ slots
/// at Γ and π/2 use the analytic values μ = 0 and μ ≤ (π−γ)²/2.
pub fn vol_failure_region(outer_resolution: usize, inner_resolution: usize) -> BoundInterval {
    assert!(
        outer_resolution >= 2 && inner_resolution >= 2,
        "resolutions must be at least 2"
    );
    let cs = criterion::constants();
    let r1 = bracket_regime(
        cs.gamma_crit,
        cs.bb_bound,
        outer_resolution,
        inner_resolution,
        Some(0.0),
        None,
    );
    let r2 = bracket_regime(
        cs.bb_bound,
        FRAC_PI_2,
        outer_resolution,
        inner_resolution,
        None,
        Some(slice_area(FRAC_PI_2)),
    );
    BoundInterval {
        lo: r1.lo + r2.lo,
        hi: r1.hi + r2.hi,
    }
}

/// Certified probability bounds: P = 7/8 − (6/π³)·vol(S̄), so the volume's
/// upper bound gives the probability's lower bound and vice versa. The
/// estimate is the interval midpoint.
pub fn probability(outer_resolution: usize, inner_resolution: usize) -> ProbabilityResult {
    let vol = vol_failure_region(outer_resolution, inner_resolution);
    let k = 6.0 / (PI * PI * PI);
    let bounds = BoundInterval {
        lo: 0.875 - k * vol.hi,
        hi: 0.875 - k * vol.lo,
    };
    ProbabilityResult {
        estimate: bounds.midpoint(),
        bounds: Some(bounds),
        method: Method::RiemannCertified,
        outer_resolution,
        inner_resolution,
    }
}

// Gauss–Legendre nodes and weights on [−1, 1]: Newton refinement of the
// Chebyshev initial guesses against the Legendre recurrence.
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for k in 0..n {
        let mut x = (PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for m in 2..=n {
                let pm = ((2 * m - 1) as f64 * x * p1 - (m - 1) as f64 * p0) / m as f64;
                p0 = p1;
                p1 = pm;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[k] = x;
        weights[k] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn gl_integrate(nodes: &[f64], weights: &[f64], a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
    let center = 0.5 * (a + b);
    let radius = 0.5 * (b - a);
    let mut sum = 0.0;
    for (x, w) in nodes.iter().zip(weights) {
        sum += w * f(center + radius * x);
    }
    radius * sum
}

/// Fast uncertified estimate: the same nested integrals evaluated with
/// `nodes`-point Gauss–Legendre rules, inner and outer.
pub fn probability_quadrature(nodes: usize) -> ProbabilityResult {
    assert!(nodes >= 4, "quadrature needs at least 4 nodes");
    let (xs, ws) = gauss_legendre(nodes);
    let cs = criterion::constants();
    let z = |gamma: f64, alpha: f64| {
        criterion::z_of_alpha(gamma, alpha).expect("quadrature nodes are interior")
    };
    let int1 = gl_integrate(&xs, &ws, cs.gamma_crit, cs.bb_bound, |gamma| {
        let i = criterion::i_of_gamma(gamma).expect("gamma above gamma_crit");
        gl_integrate(&xs, &ws, 0.0, i, |alpha| z(gamma, alpha))
    });
    let int2 = gl_integrate(&xs, &ws, cs.bb_bound, FRAC_PI_2, |gamma| {
        let e = criterion::e_of_gamma(gamma).expect("gamma below pi/2");
        let w = PI - gamma;
        0.5 * (w - 2.0 * e) * (w - 2.0 * e) - e * e
            + 2.0 * gl_integrate(&xs, &ws, 0.0, e, |alpha| z(gamma, alpha))
    });
    let k = 6.0 / (PI * PI * PI);
    ProbabilityResult {
        estimate: 0.875 - k * (int1 + int2),
        bounds: None,
        method: Method::Quadrature,
        outer_resolution: nodes,
        inner_resolution: nodes,
    }
}
