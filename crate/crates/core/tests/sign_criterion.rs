use std::f64::consts::{FRAC_PI_2, PI};
use sti_core::criterion;
use sti_core::hyptrig::{self, AngleTriple};

fn assert_rel(actual: f64, expected: f64, tol: f64) {
    let scale = expected.abs().max(1e-300);
    assert!(
        (actual - expected).abs() / scale < tol,
        "expected {expected}, got {actual} (rel err {:.3e})",
        (actual - expected).abs() / scale
    );
}

#[test]
fn gamma_crit_is_the_bracketed_root() {
    let g = criterion::gamma_crit();
    assert!(g > 1.14 && g < 1.16);
    assert!(criterion::gamma_crit_residual(g).abs() < 1e-14);
    // the residual still changes sign across the computed root
    assert!(criterion::gamma_crit_residual(g - 1e-6) < 0.0);
    assert!(criterion::gamma_crit_residual(g + 1e-6) > 0.0);
    // 50-digit recomputation: 1.1496525950311108...
    assert_rel(g, 1.1496525950311107, 1e-13);
}

#[test]
fn bb_bound_is_the_pythagorean_angle() {
    let b = criterion::bb_bound();
    assert_eq!(b, (24.0_f64 / 7.0).atan());
    assert!(b > 1.28 && b < 1.30);
    assert!(b > criterion::gamma_crit());
    // tan B = 24/7 comes from the (7, 24, 25) triple, so the sine and cosine
    // are exact decimals
    assert!((b.cos() - 0.28).abs() <= 1e-15);
    assert!((b.sin() - 0.96).abs() <= 1e-15);
}

#[test]
fn curve_limit_at_the_origin() {
    let g_crit = criterion::gamma_crit();
    // at Γ the intercept degenerates to zero...
    assert!(criterion::i_of_gamma(g_crit).unwrap() < 1e-5);
    // ...and grows toward π/2 with γ
    let i12 = criterion::i_of_gamma(1.2).unwrap();
    assert_rel(i12, 0.750370708014547, 1e-13);
    assert!((criterion::i_of_gamma(FRAC_PI_2 - 1e-9).unwrap() - FRAC_PI_2).abs() < 1e-6);
    // at B the closed form collapses to cos i = 11/25
    let i_b = criterion::i_of_gamma(criterion::bb_bound()).unwrap();
    assert_rel(i_b, (0.44_f64).acos(), 1e-13);
    // the α → 0 limit of the curve reproduces the intercept
    assert!((i12 - criterion::z_of_alpha(1.2, 1e-12).unwrap()).abs() < 1e-8);
    assert!(criterion::i_of_gamma(1.1).is_err());
    assert!(criterion::i_of_gamma(FRAC_PI_2).is_err());
}

#[test]
fn diagonal_touch_point() {
    let b = criterion::bb_bound();
    let e_b = criterion::e_of_gamma(b).unwrap();
    // at B the touch point sits exactly on the diagonal: e = (π − B)/2
    assert!((e_b - (PI - b) / 2.0).abs() <= 1e-12);
    // below B the discriminant is negative and the defining equation is
    // solved by tan(e/2) = 1/2 identically
    assert_eq!(criterion::e_of_gamma(1.2).unwrap(), 2.0 * 0.5_f64.atan());
    assert_eq!(criterion::e_of_gamma(0.3).unwrap(), e_b);
    // above B the touch point detaches from the diagonal
    let e145 = criterion::e_of_gamma(1.45).unwrap();
    assert_rel(e145, 0.2610704065979487, 1e-13);
    assert!(e145 < (PI - 1.45) / 2.0);
    assert!(2.0 * e145 + 1.45 < PI);
    assert!(criterion::e_of_gamma(0.0).is_err());
    assert!(criterion::e_of_gamma(FRAC_PI_2).is_err());
}

#[test]
fn zero_curve_reference_points() {
    // interior points cross-checked against a 50-digit root solve
    let z03 = criterion::z_of_alpha(1.2, 0.3).unwrap();
    let z05 = criterion::z_of_alpha(1.2, 0.5).unwrap();
    assert_rel(z03, 0.7138577487052226, 1e-13);
    assert_rel(z05, 0.6252190420263659, 1e-13);
    assert!(z03 > z05);
}

#[test]
fn zero_curve_guards() {
    // past the curve's reach the acos argument leaves [-1, 1] and the root
    // is pinned to zero
    assert_eq!(criterion::z_of_alpha(1.2, 0.76).unwrap(), 0.0);
    assert_eq!(criterion::z_of_alpha(1.2, 0.9).unwrap(), 0.0);
    assert_eq!(criterion::z_of_alpha(1.2, 1.1).unwrap(), 0.0);
    // in the middle stretch above B the raw root would leave the feasible
    // triangle, so the diagonal cap binds
    assert_eq!(criterion::z_of_alpha(1.45, 0.8).unwrap(), PI - 0.8 - 1.45);
}

#[test]
fn zero_curve_round_trip() {
    let z1 = criterion::z_of_alpha(1.2, 0.3).unwrap();
    let z2 = criterion::z_of_alpha(1.2, z1).unwrap();
    assert!((z2 - 0.3).abs() < 1e-9);
}

#[test]
fn zero_curve_domain_gates() {
    assert!(criterion::z_of_alpha(1.0, 0.5).is_err()); // γ below Γ
    assert!(criterion::z_of_alpha(1.6, 0.5).is_err()); // γ past π/2
    assert!(criterion::z_of_alpha(1.2, 1.2).is_err()); // α not below γ
    assert!(criterion::z_of_alpha(1.2, 0.0).is_err());
}

#[test]
fn f_reference_values() {
    assert_rel(
        criterion::f_value(0.1, 0.1, 1.4).unwrap(),
        -25.563371659417935,
        1e-13,
    );
    assert_rel(
        criterion::f_value(0.5, 0.5, 1.0).unwrap(),
        2.584697821812112,
        1e-13,
    );
}

#[test]
fn f_is_symmetric_in_the_base_angles() {
    for (a, b, g) in [
        (0.2, 0.7, 1.3),
        (0.4, 0.1, 1.2),
        (0.33, 0.21, 1.5),
        (0.9, 1.0, 1.21),
    ] {
        let fab = criterion::f_value(a, b, g).unwrap();
        let fba = criterion::f_value(b, a, g).unwrap();
        assert_rel(fab, fba, 1e-12);
    }
}

#[test]
fn f_sign_matches_the_solved_triangle() {
    for (a, b, g) in [
        (0.1, 0.1, 1.4),
        (0.5, 0.5, 1.0),
        (0.2, 0.6, 1.3),
        (0.7, 0.3, 1.45),
    ] {
        let f = criterion::f_value(a, b, g).unwrap();
        let strength = hyptrig::solve_triangle(AngleTriple::new(a, b, g).unwrap()).strength;
        assert_eq!(f > 0.0, strength > 0.0, "sign mismatch at ({a}, {b}, {g})");
    }
}

#[test]
fn f_domain_gates() {
    assert!(criterion::f_value(0.5, 0.5, 1.6).is_err()); // γ past π/2
    assert!(criterion::f_value(1.0, 0.5, 0.9).is_err()); // α not below γ
    assert!(criterion::f_value(0.5, 0.5, 0.5).is_err()); // γ not the strict max
    assert!(criterion::f_value(-0.1, 0.5, 1.2).is_err());
    assert!(criterion::f_value(0.0, 0.5, 1.2).is_err());
}

#[test]
fn quadratic_coefficients_vanish_on_the_curve() {
    let q = criterion::quad_coeffs(0.2, 1.2).unwrap();
    assert!(q.qb > 0.0 && q.qc > 0.0);
    let z = criterion::z_of_alpha(1.2, 0.2).unwrap();
    let cz = z.cos();
    assert!((q.qa * cz * cz + q.qb * cz + q.qc).abs() < 1e-10);
    // f itself vanishes there too
    assert!(criterion::f_value(0.2, z, 1.2).unwrap().abs() < 1e-9);
}

#[test]
fn quadratic_coefficients_signs_on_a_grid() {
    let g_crit = criterion::gamma_crit();
    for gi in 1..20 {
        let gamma = g_crit + (FRAC_PI_2 - g_crit - 1e-6) * gi as f64 / 20.0;
        for ai in 1..20 {
            let alpha = gamma * ai as f64 / 20.0;
            let q = criterion::quad_coeffs(alpha, gamma).unwrap();
            assert!(q.qb > 0.0, "qb ≤ 0 at ({alpha}, {gamma})");
            assert!(q.qc > 0.0, "qc ≤ 0 at ({alpha}, {gamma})");
        }
    }
}

#[test]
fn quadratic_coefficients_domain_gates() {
    assert!(criterion::quad_coeffs(1.2, 0.2).is_err());
    assert!(criterion::quad_coeffs(0.0, 1.2).is_err());
    assert!(criterion::quad_coeffs(0.5, 1.6).is_err());
}
