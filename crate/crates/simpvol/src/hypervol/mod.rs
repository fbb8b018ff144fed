//! Hyperbolic volume numerics: the Lobachevsky function, Catalan's
//! constant, ideal and regular truncated tetrahedron volumes, and the
//! volume-based lower bounds on relative simplicial volume.
//!
//! All values are f64 with absolute accuracy around 1e-12; quoted
//! comparisons in tests use looser tolerances matching the precision
//! of the published decimal values they anchor to.

pub mod quadrature;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::{Error, Result};

/// Zeta values at even integers: ζ(2k) for k = 1..=6 in closed form,
/// direct summation beyond (the tail there is below 1e-14 by n = 40).
fn zeta_even(k: usize) -> f64 {
    match k {
        1 => PI * PI / 6.0,
        2 => PI.powi(4) / 90.0,
        3 => PI.powi(6) / 945.0,
        4 => PI.powi(8) / 9450.0,
        5 => PI.powi(10) / 93555.0,
        6 => 691.0 * PI.powi(12) / 638_512_875.0,
        _ => (1..=40).map(|n| (n as f64).powi(-(2 * k as i32))).sum(),
    }
}

/// The Lobachevsky function L(θ) = −∫₀^θ log|2 sin u| du.
///
/// Range-reduces to [0, π/2] using oddness and π-periodicity, then
/// sums L(θ) = θ − θ log(2θ) + Σ_k ζ(2k)/(k(2k+1)) · θ (θ/π)^{2k}.
/// The ratio θ/π ≤ 1/2 there, so 30 terms give ~1e-15 accuracy.
pub fn lobachevsky(theta: f64) -> f64 {
    let mut t = theta.rem_euclid(PI);
    let mut sign = 1.0;
    if t > PI / 2.0 {
        t = PI - t;
        sign = -1.0;
    }
    if t == 0.0 {
        return 0.0;
    }
    let mut sum = t - t * (2.0 * t).ln();
    let r2 = (t / PI) * (t / PI);
    let mut pow = 1.0;
    for k in 1..=30 {
        pow *= r2;
        let kf = k as f64;
        sum += zeta_even(k) / (kf * (2.0 * kf + 1.0)) * t * pow;
    }
    sign * sum
}

/// Catalan's constant G = Σ (−1)^n / (2n+1)², computed with the
/// Cohen–Rodriguez Villegas–Zagier acceleration for alternating
/// series; 35 terms give error below (3+√8)^{-35} ≈ 1e-26.
pub fn catalan() -> f64 {
    let n = 35usize;
    let mut d = (3.0 + 8.0_f64.sqrt()).powi(n as i32);
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    for k in 0..n {
        c = b - c;
        let a = 1.0 / ((2 * k + 1) as f64).powi(2);
        s += c * a;
        let kf = k as f64;
        b *= (kf + n as f64) * (kf - n as f64) / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

/// Shared constants of the hyperbolic bounds.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct HypConstants {
    /// Catalan's constant.
    pub g: f64,
    /// Volume of the regular ideal hyperbolic 3-simplex, 3L(π/3).
    pub v3: f64,
    /// Area of the ideal hyperbolic triangle.
    pub v2: f64,
    /// Coefficient (v₃ − G) / (2(3v₃ − 2G)) of the refined bound.
    pub c_f: f64,
}

/// Compute the constants from scratch.
pub fn constants() -> HypConstants {
    let g = catalan();
    let v3 = 3.0 * lobachevsky(PI / 3.0);
    HypConstants {
        g,
        v3,
        v2: PI,
        c_f: (v3 - g) / (2.0 * (3.0 * v3 - 2.0 * g)),
    }
}

/// Volume of the ideal hyperbolic tetrahedron with dihedral angles
/// α, β, γ: L(α) + L(β) + L(γ).
pub fn ideal_tetrahedron_volume(alpha: f64, beta: f64, gamma: f64) -> Result<f64> {
    if alpha <= 0.0 || beta <= 0.0 || gamma <= 0.0 {
        return Err(Error::Precondition(
            "dihedral angles must be positive".to_string(),
        ));
    }
    if (alpha + beta + gamma - PI).abs() > 1e-9 {
        return Err(Error::Precondition(format!(
            "dihedral angles must sum to pi, got {}",
            alpha + beta + gamma
        )));
    }
    Ok(lobachevsky(alpha) + lobachevsky(beta) + lobachevsky(gamma))
}

/// A point of the ideal boundary sphere: a complex number or infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IdealPoint {
    Finite(Complex64),
    Infinity,
}

impl IdealPoint {
    pub fn finite(re: f64, im: f64) -> Self {
        IdealPoint::Finite(Complex64::new(re, im))
    }
}

impl From<Complex64> for IdealPoint {
    fn from(z: Complex64) -> Self {
        IdealPoint::Finite(z)
    }
}

/// Cross-ratio (z0 − z2)(z1 − z3) / ((z0 − z3)(z1 − z2)), with limits
/// taken when one of the points is infinity.
fn cross_ratio(z: [IdealPoint; 4]) -> Complex64 {
    use IdealPoint::*;
    let one = Complex64::new(1.0, 0.0);
    // differences z_i - z_j appearing in numerator and denominator;
    // an infinite point cancels between the two factors containing it
    let d = |a: IdealPoint, b: IdealPoint| match (a, b) {
        (Finite(x), Finite(y)) => x - y,
        _ => one,
    };
    // each infinite point occurs once in the numerator and once in the
    // denominator, so replacing its two factors by 1 takes the limit
    d(z[0], z[2]) * d(z[1], z[3]) / (d(z[0], z[3]) * d(z[1], z[2]))
}

/// Volume of the ideal tetrahedron spanned by four distinct ideal
/// points; zero exactly when the points lie on a common circle.
pub fn ideal_volume_from_vertices(z: [IdealPoint; 4]) -> Result<f64> {
    for i in 0..4 {
        for j in (i + 1)..4 {
            if z[i] == z[j] {
                return Err(Error::Precondition(format!(
                    "ideal vertices {i} and {j} coincide"
                )));
            }
        }
    }
    let mut w = cross_ratio(z);
    if w.im.abs() < 1e-14 {
        return Ok(0.0);
    }
    if w.im < 0.0 {
        // mirror image has the same volume
        w = w.conj();
    }
    let a1 = w.arg();
    let a2 = (Complex64::new(1.0, 0.0) / (Complex64::new(1.0, 0.0) - w)).arg();
    let a3 = (Complex64::new(1.0, 0.0) - Complex64::new(1.0, 0.0) / w).arg();
    Ok(lobachevsky(a1) + lobachevsky(a2) + lobachevsky(a3))
}

/// Volume of the regular truncated tetrahedron with dihedral angle
/// π/(3g): 8L(π/4) − 3∫₀^{π/3g} arccosh(cos t / (2 cos t − 1)) dt.
pub fn regular_truncated_volume(g: usize) -> Result<f64> {
    if g < 2 {
        return Err(Error::Precondition(
            "truncated tetrahedron requires genus at least 2".to_string(),
        ));
    }
    let upper = PI / (3.0 * g as f64);
    let integral = quadrature::integrate(
        |t| {
            // at t = 0 the ratio is exactly 1; clamp against rounding
            let x = (t.cos() / (2.0 * t.cos() - 1.0)).max(1.0);
            x.acosh()
        },
        0.0,
        upper,
        1e-12,
    );
    Ok(8.0 * lobachevsky(PI / 4.0) - 3.0 * integral)
}

/// Lower bound ‖M, ∂M‖ > vol(M) / v₃ for hyperbolic M.
pub fn jungreis_bound(vol: f64) -> Result<f64> {
    if vol <= 0.0 {
        return Err(Error::Precondition("volume must be positive".to_string()));
    }
    Ok(vol / constants().v3)
}

/// Refined hyperbolic lower bound for manifolds with geodesic
/// boundary: vol/v₃ when (7/4)·bnorm ≤ vol/v₃, otherwise
/// vol/v₃ + C_F (7·bnorm − 4·vol/v₃).
pub fn refined_hyperbolic_bound(vol: f64, bnorm: f64) -> Result<f64> {
    if vol <= 0.0 {
        return Err(Error::Precondition("volume must be positive".to_string()));
    }
    if bnorm < 0.0 {
        return Err(Error::Precondition(
            "boundary norm must be nonnegative".to_string(),
        ));
    }
    let c = constants();
    let j = vol / c.v3;
    if 1.75 * bnorm <= j {
        Ok(j)
    } else {
        Ok(j + c.c_f * (7.0 * bnorm - 4.0 * j))
    }
}

/// Volume caps for ideal tetrahedra with obtuse dihedral angles:
/// (two obtuse angles → v₃/2, one obtuse angle → G).
pub fn obtuse_volume_caps() -> (f64, f64) {
    let c = constants();
    (c.v3 / 2.0, c.g)
}

/// One row of the small-manifold bound table.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub g: usize,
    /// Boundary norm 4(g − 1) of the genus-g boundary surface.
    pub boundary_norm: f64,
    /// Minimal hyperbolic volume g · vol(Δ_g).
    pub min_vol: f64,
    /// vol / v₃.
    pub jungreis: f64,
    /// Aspherical-manifold bound (5/4) · boundary norm = 5(g − 1).
    pub aspherical: f64,
    /// Refined hyperbolic bound.
    pub refined: f64,
    pub best: f64,
    pub best_source: String,
    /// (1 − 1/g)(v₃ + 4G) > vol(Δ_g)?
    pub cmp1: bool,
    /// 7(1 − 1/g) v₃ > vol(Δ_g)?
    pub cmp2: bool,
}

/// Bound table for the smallest hyperbolic 3-manifolds with geodesic
/// genus-g boundary, g = 2..=gmax.
pub fn small_manifold_table(gmax: usize) -> Result<Vec<TableRow>> {
    if gmax < 2 {
        return Err(Error::Precondition(
            "table requires max genus at least 2".to_string(),
        ));
    }
    let c = constants();
    let mut rows = Vec::new();
    for g in 2..=gmax {
        let gf = g as f64;
        let delta = regular_truncated_volume(g)?;
        let min_vol = gf * delta;
        let boundary_norm = 4.0 * (gf - 1.0);
        let jungreis = jungreis_bound(min_vol)?;
        let aspherical = 5.0 * (gf - 1.0);
        let refined = refined_hyperbolic_bound(min_vol, boundary_norm)?;
        let (best, best_source) = [
            (jungreis, "jungreis"),
            (aspherical, "aspherical"),
            (refined, "refined"),
        ]
        .into_iter()
        .max_by(|a, b| a.0.total_cmp(&b.0))
        .map(|(v, s)| (v, s.to_string()))
        .expect("nonempty candidate list");
        rows.push(TableRow {
            g,
            boundary_norm,
            min_vol,
            jungreis,
            aspherical,
            refined,
            best,
            best_source,
            cmp1: (1.0 - 1.0 / gf) * (c.v3 + 4.0 * c.g) > delta,
            cmp2: 7.0 * (1.0 - 1.0 / gf) * c.v3 > delta,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lobachevsky_anchors() {
        assert!((3.0 * lobachevsky(PI / 3.0) - 1.014942).abs() < 1e-6);
        assert!((lobachevsky(PI / 4.0) - 0.457983).abs() < 1e-6);
        assert!(lobachevsky(0.0).abs() < 1e-15);
        assert!(lobachevsky(PI / 2.0).abs() < 1e-11);
        assert!(lobachevsky(PI).abs() < 1e-11);
    }

    #[test]
    fn lobachevsky_symmetries() {
        for i in 0..50 {
            let t = -4.0 + 8.0 * (i as f64) / 49.0;
            assert!((lobachevsky(-t) + lobachevsky(t)).abs() < 1e-11);
            assert!((lobachevsky(t + PI) - lobachevsky(t)).abs() < 1e-11);
            // duplication: L(2t) = 2L(t) + 2L(t + pi/2)
            let lhs = lobachevsky(2.0 * t);
            let rhs = 2.0 * lobachevsky(t) + 2.0 * lobachevsky(t + PI / 2.0);
            assert!((lhs - rhs).abs() < 1e-10, "t = {t}");
        }
    }

    #[test]
    fn catalan_value() {
        let g = catalan();
        assert!((g - 0.915965594177219).abs() < 1e-12);
        assert!(g > 0.9 && g < constants().v3);
        assert!((2.0 * lobachevsky(PI / 4.0) - g).abs() < 1e-10);
    }

    #[test]
    fn constants_in_range() {
        let c = constants();
        assert!((c.v3 - 1.014942).abs() < 1e-6);
        assert!((c.g - 0.915965).abs() < 1e-6);
        assert!(c.c_f > 0.0407 && c.c_f < 0.0409);
        assert_eq!(c.v2, PI);
    }

    #[test]
    fn ideal_volume_anchors() {
        let v = ideal_tetrahedron_volume(PI / 3.0, PI / 3.0, PI / 3.0).unwrap();
        assert!((v - 1.014942).abs() < 1e-6);
        let v = ideal_tetrahedron_volume(PI / 2.0, PI / 4.0, PI / 4.0).unwrap();
        assert!((v - 0.915965).abs() < 1e-6);
        let e = 1e-4;
        let v = ideal_tetrahedron_volume(PI - 2.0 * e, e, e).unwrap();
        assert!(v < 0.01);
    }

    #[test]
    fn ideal_volume_rejects_bad_angles() {
        assert!(ideal_tetrahedron_volume(PI / 2.0, PI / 2.0, PI / 2.0).is_err());
        assert!(ideal_tetrahedron_volume(-0.1, PI / 2.0, PI / 2.0 + 0.1).is_err());
    }

    #[test]
    fn volume_from_vertices() {
        use IdealPoint::*;
        let regular = [
            IdealPoint::finite(0.0, 0.0),
            IdealPoint::finite(1.0, 0.0),
            Infinity,
            IdealPoint::finite(0.5, 3.0_f64.sqrt() / 2.0),
        ];
        let v = ideal_volume_from_vertices(regular).unwrap();
        assert!((v - 1.014942).abs() < 1e-6);

        let degenerate = [
            IdealPoint::finite(0.0, 0.0),
            IdealPoint::finite(1.0, 0.0),
            Infinity,
            IdealPoint::finite(0.5, 0.0),
        ];
        assert_eq!(ideal_volume_from_vertices(degenerate).unwrap(), 0.0);

        let right = [
            IdealPoint::finite(0.0, 0.0),
            IdealPoint::finite(1.0, 0.0),
            Infinity,
            IdealPoint::finite(0.0, 1.0),
        ];
        let v = ideal_volume_from_vertices(right).unwrap();
        assert!((v - 0.915965).abs() < 1e-6);

        let coincident = [
            IdealPoint::finite(0.0, 0.0),
            IdealPoint::finite(0.0, 0.0),
            Infinity,
            IdealPoint::finite(0.0, 1.0),
        ];
        assert!(ideal_volume_from_vertices(coincident).is_err());
    }

    #[test]
    fn truncated_volume_anchors() {
        assert!((regular_truncated_volume(2).unwrap() - 3.2261).abs() < 5e-4);
        assert!((regular_truncated_volume(3).unwrap() - 3.4763).abs() < 5e-4);
        assert!((regular_truncated_volume(4).unwrap() - 3.5595).abs() < 5e-4);
        assert!(regular_truncated_volume(1).is_err());
    }

    #[test]
    fn truncated_volume_monotone_and_capped() {
        let cap = 8.0 * lobachevsky(PI / 4.0); // 4G
        let mut prev = regular_truncated_volume(2).unwrap();
        for g in 3..=60 {
            let v = regular_truncated_volume(g).unwrap();
            assert!(v > prev, "genus {g}");
            assert!(v < cap, "genus {g}");
            prev = v;
        }
    }

    #[test]
    fn bound_evaluators() {
        let c = constants();
        assert!((jungreis_bound(c.v3).unwrap() - 1.0).abs() < 1e-12);
        assert!(jungreis_bound(0.0).is_err());
        // large volume: plain volume ratio
        let b = refined_hyperbolic_bound(100.0, 4.0).unwrap();
        assert!((b - 100.0 / c.v3).abs() < 1e-12);
        // refined bound never falls below the volume ratio
        for (vol, bnorm) in [(6.45, 4.0), (10.43, 8.0), (2.0, 3.0)] {
            let j = jungreis_bound(vol).unwrap();
            let f = refined_hyperbolic_bound(vol, bnorm).unwrap();
            assert!(f >= j - 1e-12);
        }
    }

    #[test]
    fn caps() {
        let (two, one) = obtuse_volume_caps();
        assert!((two - 0.507471).abs() < 1e-6);
        assert!((one - 0.915965).abs() < 1e-6);
        assert!(one > two);
    }

    #[test]
    fn table_smoke() {
        let rows = small_manifold_table(5).unwrap();
        assert_eq!(rows.len(), 4);
        let r2 = &rows[0];
        assert_eq!(r2.g, 2);
        assert!((r2.boundary_norm - 4.0).abs() < 1e-12);
        assert!((r2.min_vol - 6.452).abs() < 1e-3);
        assert_eq!(r2.best_source, "refined");
        let r5 = &rows[3];
        assert_eq!(r5.best_source, "aspherical");
        assert!((r5.best - 20.0).abs() < 1e-12);
        assert!(r5.cmp1 && r5.cmp2);
    }
}
