//! Rotationally invariant solutions of the Jacobi ODE
//! u″ − 2 tan(2z) u′ + σ u = 0 (σ = 3 on the equatorial sphere, 6 on the
//! shrinker) and the named combinations the doubling construction uses.

use crate::error::{Error, Result};
use crate::specfun;
use std::f64::consts::FRAC_PI_4;
use std::sync::Arc;

/// Where a radial solution came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    OdeIntegrated,
}

/// Evaluation side at the derivative jump z = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Auto,
    Plus,
    Minus,
}

type Eval = dyn Fn(f64, Side) -> (f64, f64) + Send + Sync;

/// A rotationally invariant function of z ∈ (−π/4, π/4) with value and
/// derivative evaluation and an optional derivative jump at z = 0.
#[derive(Clone)]
pub struct RadialSolution {
    pub provenance: Provenance,
    /// ∂₊u(0) − ∂₋u(0) when the solution has a corner at the torus.
    pub jump: Option<f64>,
    /// Endpoints where evaluation is rejected (singular solution).
    pub singular_left: bool,
    pub singular_right: bool,
    eval: Arc<Eval>,
}

impl std::fmt::Debug for RadialSolution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RadialSolution")
            .field("provenance", &self.provenance)
            .field("jump", &self.jump)
            .finish()
    }
}

const Z_GUARD: f64 = 1e-9;

impl RadialSolution {
    pub fn from_fn<F>(f: F, provenance: Provenance) -> Self
    where
        F: Fn(f64, Side) -> (f64, f64) + Send + Sync + 'static,
    {
        RadialSolution {
            provenance,
            jump: None,
            singular_left: false,
            singular_right: false,
            eval: Arc::new(f),
        }
    }

    pub fn with_jump(mut self, jump: f64) -> Self {
        self.jump = Some(jump);
        self
    }

    pub fn singular_at(mut self, left: bool, right: bool) -> Self {
        self.singular_left = left;
        self.singular_right = right;
        self
    }

    /// Value and derivative; `Side` resolves the branch at z = 0.
    pub fn eval_side(&self, z: f64, side: Side) -> Result<(f64, f64)> {
        if (self.singular_left && z <= -FRAC_PI_4 + Z_GUARD)
            || (self.singular_right && z >= FRAC_PI_4 - Z_GUARD)
        {
            return Err(Error::Singular(format!(
                "radial solution singular near z = {z}"
            )));
        }
        if !(-FRAC_PI_4 - 1e-12..=FRAC_PI_4 + 1e-12).contains(&z) {
            return Err(Error::Domain(format!("z = {z} outside [-π/4, π/4]")));
        }
        Ok((self.eval)(z, side))
    }

    pub fn value(&self, z: f64) -> Result<f64> {
        Ok(self.eval_side(z, Side::Auto)?.0)
    }

    pub fn derivative(&self, z: f64) -> Result<f64> {
        Ok(self.eval_side(z, Side::Auto)?.1)
    }
}

/// Γ²(1/4)/(4√π), the normalization of the hypergeometric solutions.
pub fn phi_c_prefactor() -> f64 {
    let g = specfun::gamma_fn(0.25).expect("gamma(1/4)");
    g * g / (4.0 * std::f64::consts::PI.sqrt())
}

fn phi_c_raw(z: f64) -> (f64, f64) {
    let w = 0.5 * (1.0 - (2.0 * z).sin());
    let (v, dv) = specfun::hyp2f1_with_deriv(-0.5, 1.5, 1.0, w).expect("phi_C argument");
    let pref = phi_c_prefactor();
    (pref * v, -pref * dv * (2.0 * z).cos())
}

/// φ_C: the Jacobi-field solution smooth at z = π/4 and log-singular at
/// z = −π/4, normalized so φ_C(0) = 1, φ_C′(0) = F0.
pub fn phi_c() -> RadialSolution {
    RadialSolution::from_fn(|z, _| phi_c_raw(z), Provenance::ClosedForm).singular_at(true, false)
}

/// φ_{C⊥}(z) = φ_C(−z).
pub fn phi_cperp() -> RadialSolution {
    RadialSolution::from_fn(
        |z, _| {
            let (v, d) = phi_c_raw(-z);
            (v, -d)
        },
        Provenance::ClosedForm,
    )
    .singular_at(false, true)
}

/// The RLD profile φ̂: φ_C for z ≥ 0, φ_{C⊥} for z ≤ 0 (derivative jump 2F0).
pub fn phi_hat() -> RadialSolution {
    let f0 = specfun::f0();
    RadialSolution::from_fn(
        move |z, side| {
            let plus = match side {
                Side::Plus => true,
                Side::Minus => false,
                Side::Auto => z >= 0.0,
            };
            if plus {
                phi_c_raw(z)
            } else {
                let (v, d) = phi_c_raw(-z);
                (v, -d)
            }
        },
        Provenance::ClosedForm,
    )
    .singular_at(true, true)
    .with_jump(2.0 * f0)
}

/// φ[a] = (a/2)(φ_C + φ_{C⊥}): value a and flat at the torus.
pub fn underline_phi(a: f64) -> RadialSolution {
    RadialSolution::from_fn(
        move |z, _| {
            let (v1, d1) = phi_c_raw(z);
            let (v2, d2) = phi_c_raw(-z);
            (0.5 * a * (v1 + v2), 0.5 * a * (d1 - d2))
        },
        Provenance::ClosedForm,
    )
    .singular_at(true, true)
}

/// j[b]: zero at the torus with derivative jump ∂₊ = −∂₋ = m·b, expressed as
/// ±(m b / 2F0)(φ_C − φ_{C⊥}) on the two sides.
pub fn underline_j(b: f64, m: usize) -> RadialSolution {
    let f0 = specfun::f0();
    let c = m as f64 * b / (2.0 * f0);
    RadialSolution::from_fn(
        move |z, side| {
            let plus = match side {
                Side::Plus => true,
                Side::Minus => false,
                Side::Auto => z >= 0.0,
            };
            let (v1, d1) = phi_c_raw(z);
            let (v2, d2) = phi_c_raw(-z);
            let (v, d) = (c * (v1 - v2), c * (d1 + d2));
            if plus {
                (v, d)
            } else {
                (-v, -d)
            }
        },
        Provenance::ClosedForm,
    )
    .singular_at(true, true)
    .with_jump(2.0 * m as f64 * b)
}

/// The RLD constant φ₁ = m²/(π F0).
pub fn phi1_constant(m: usize) -> f64 {
    (m as f64).powi(2) / (std::f64::consts::PI * specfun::f0())
}

/// The averaged LD solution φ = φ₁ φ̂.
pub fn phi_avg(m: usize) -> Result<RadialSolution> {
    if m < 2 {
        return Err(Error::Domain(format!("phi_avg requires m >= 2, got {m}")));
    }
    let a = phi1_constant(m);
    let hat = phi_hat();
    let jump = 2.0 * a * specfun::f0();
    Ok(RadialSolution::from_fn(
        move |z, side| {
            let (v, d) = (hat.eval)(z, side);
            (a * v, a * d)
        },
        Provenance::ClosedForm,
    )
    .singular_at(true, true)
    .with_jump(jump))
}

/// Residual of the rotationally invariant Jacobi ODE at z, differentiating
/// the solution's reported derivative by central finite differences so the
/// check stays independent of the closed form's own ODE.
pub fn radial_ode_residual(u: &RadialSolution, z: f64, zero_order: f64) -> Result<f64> {
    if z.abs() >= FRAC_PI_4 - 1e-6 {
        return Err(Error::Domain(format!(
            "residual evaluation rejected at z = {z} (too close to ±π/4)"
        )));
    }
    let side = if z >= 0.0 { Side::Plus } else { Side::Minus };
    let h = 1e-4_f64.min(0.1 * (FRAC_PI_4 - z.abs())).max(1e-6);
    // keep the stencil on one side of the jump
    let h = if z != 0.0 { h.min(0.45 * z.abs()).max(1e-7) } else { h };
    let dp = |t: f64| u.eval_side(t, side).map(|p| p.1);
    let upp = (-dp(z + 2.0 * h)? + 8.0 * dp(z + h)? - 8.0 * dp(z - h)? + dp(z - 2.0 * h)?)
        / (12.0 * h);
    let (v, d) = u.eval_side(z, side)?;
    Ok(upp - 2.0 * (2.0 * z).tan() * d + zero_order * v)
}

/// Wronskian combination cos(2z)·(φ_C φ'_{C⊥} − φ_{C⊥} φ'_C); Abel's identity
/// makes it the constant −2 F0.
pub fn scaled_wronskian(z: f64) -> f64 {
    let (v1, d1) = phi_c_raw(z);
    let (v2, d2) = {
        let (v, d) = phi_c_raw(-z);
        (v, -d)
    };
    (2.0 * z).cos() * (v1 * d2 - v2 * d1)
}

/// Per-mode potential a²/(1+sin 2z) + b²/(1−sin 2z) for chart frequencies
/// (a, b), infinite at the degenerate ends when the frequency is nonzero.
pub fn mode_potential(a: f64, b: f64, z: f64) -> f64 {
    let s = (2.0 * z).sin();
    let mut v = 0.0;
    if a != 0.0 {
        v += a * a / (1.0 + s);
    }
    if b != 0.0 {
        v += b * b / (1.0 - s);
    }
    v
}

/// The per-mode radial operator u ↦ u″ − 2tan(2z)u′ + σu − V_{a,b} u applied
/// to sampled (u, u′, u″).
pub fn mode_apply(u: f64, du: f64, d2u: f64, a: f64, b: f64, z: f64, zero_order: f64) -> f64 {
    d2u - 2.0 * (2.0 * z).tan() * du + (zero_order - mode_potential(a, b, z)) * u
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::f0;

    #[test]
    fn phi_c_normalization() {
        let u = phi_c();
        let (v, d) = u.eval_side(0.0, Side::Auto).unwrap();
        assert!((v - 1.0).abs() < 1e-12, "phi_C(0) = {v}");
        assert!((d - f0()).abs() < 1e-10, "phi_C'(0) = {d} vs F0 = {}", f0());
        let up = phi_cperp();
        let (v2, d2) = up.eval_side(0.0, Side::Auto).unwrap();
        assert!((v2 - 1.0).abs() < 1e-12);
        assert!((d2 + f0()).abs() < 1e-10);
    }

    #[test]
    fn phi_c_monotone_increasing() {
        let u = phi_c();
        let mut prev = f64::MIN;
        for i in 0..=60 {
            let z = -FRAC_PI_4 + 0.02 + (2.0 * FRAC_PI_4 - 0.02) * i as f64 / 60.0;
            let v = u.value(z.min(FRAC_PI_4 - 1e-6)).unwrap();
            assert!(v > prev, "not increasing at z = {z}");
            prev = v;
        }
    }

    #[test]
    fn radial_residuals_small_on_grid() {
        let solutions = [phi_c(), phi_cperp(), underline_phi(1.0), underline_j(1.0, 7)];
        for u in &solutions {
            for i in 0..200 {
                let z = -0.72 + 1.44 * i as f64 / 199.0;
                if z.abs() < 1e-3 {
                    continue;
                }
                let r = radial_ode_residual(u, z, 3.0).unwrap();
                assert!(r.abs() < 1e-8, "residual {r} at z = {z}");
            }
        }
    }

    #[test]
    fn residual_examples() {
        // u ≡ 0 → 0 handled trivially; u = cos z is not a solution
        let c = RadialSolution::from_fn(|z, _| (z.cos(), -z.sin()), Provenance::ClosedForm);
        let z = 0.3;
        let r = radial_ode_residual(&c, z, 3.0).unwrap();
        let expected = -z.cos() - 2.0 * (2.0 * z).tan() * (-z.sin()) + 3.0 * z.cos();
        assert!((r - expected).abs() < 1e-8);
        assert!(r.abs() > 0.1);
        assert!(radial_ode_residual(&phi_c(), FRAC_PI_4 - 1e-9, 3.0).is_err());
    }

    #[test]
    fn rk_shooting_oracle_matches_phi_c() {
        // integrate the ODE from (1, F0) at z = 0 outward and compare
        let f = |z: f64, y: [f64; 2]| -> [f64; 2] {
            [y[1], 2.0 * (2.0 * z).tan() * y[1] - 3.0 * y[0]]
        };
        let shoot = |z_target: f64| -> f64 {
            let n = 200_000;
            let h = z_target / n as f64;
            let mut y = [1.0, f0()];
            let mut z = 0.0;
            for _ in 0..n {
                let k1 = f(z, y);
                let y2 = [y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]];
                let k2 = f(z + 0.5 * h, y2);
                let y3 = [y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]];
                let k3 = f(z + 0.5 * h, y3);
                let y4 = [y[0] + h * k3[0], y[1] + h * k3[1]];
                let k4 = f(z + h, y4);
                y = [
                    y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
                    y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
                ];
                z += h;
            }
            y[0]
        };
        let u = phi_c();
        for &z in &[0.7, -0.7] {
            let v = u.value(z).unwrap();
            let o = shoot(z);
            assert!((v - o).abs() < 1e-7, "z = {z}: {v} vs {o}");
        }
    }

    #[test]
    fn underline_initial_data() {
        let p = underline_phi(1.0);
        let (v, d) = p.eval_side(0.0, Side::Plus).unwrap();
        assert!((v - 1.0).abs() < 1e-12 && d.abs() < 1e-10);
        let m = 5usize;
        let j = underline_j(1.0, m);
        let (v, dplus) = j.eval_side(0.0, Side::Plus).unwrap();
        let (_, dminus) = j.eval_side(0.0, Side::Minus).unwrap();
        assert!(v.abs() < 1e-12);
        assert!((dplus - m as f64).abs() < 1e-9);
        assert!((dminus + m as f64).abs() < 1e-9);
        assert!((j.jump.unwrap() - 2.0 * m as f64).abs() < 1e-9);
    }

    #[test]
    fn flat_profiles_decay_like_m_squared() {
        // sup over |z| ≤ 3/m of |φ[1] − 1| and |j[1] − m|z|| fit slope ≈ −2
        let ms = [8usize, 16, 32];
        let mut sup_phi = Vec::new();
        let mut sup_j = Vec::new();
        for &m in &ms {
            let p = underline_phi(1.0);
            let j = underline_j(1.0, m);
            let mut sp: f64 = 0.0;
            let mut sj: f64 = 0.0;
            for i in 0..200 {
                let z = -3.0 / m as f64 + 6.0 / m as f64 * i as f64 / 199.0;
                sp = sp.max((p.value(z).unwrap() - 1.0).abs());
                sj = sj.max((j.value(z).unwrap() - m as f64 * z.abs()).abs());
            }
            sup_phi.push(sp);
            sup_j.push(sj);
        }
        let xs: Vec<f64> = ms.iter().map(|&m| m as f64).collect();
        let s1 = crate::util::fit_loglog_slope(&xs, &sup_phi);
        let s2 = crate::util::fit_loglog_slope(&xs, &sup_j);
        assert!((s1 + 2.0).abs() < 0.3, "phi slope {s1}");
        assert!((s2 + 2.0).abs() < 0.3, "j slope {s2}");
    }

    #[test]
    fn phi_avg_two_representations() {
        let m = 9usize;
        let phi = phi_avg(m).unwrap();
        let phi1 = phi1_constant(m);
        assert!((phi.value(1e-12).unwrap() - phi1).abs() < 1e-9 * phi1);
        // φ = φ[φ₁] + j[m/π] pointwise
        let a = underline_phi(phi1);
        let j = underline_j(m as f64 / std::f64::consts::PI, m);
        for &z in &[0.2, -0.2, 0.5, -0.37, 0.05] {
            let lhs = phi.value(z).unwrap();
            let rhs = a.value(z).unwrap() + j.value(z).unwrap();
            assert!((lhs - rhs).abs() < 1e-9 * lhs.abs().max(1.0), "z = {z}");
        }
        // flux identity 2 φ₁ F0 Area(T₀) = m² Area(S²)
        let lhs = 2.0 * phi1 * f0() * 2.0 * std::f64::consts::PI.powi(2);
        let rhs = (m as f64).powi(2) * 4.0 * std::f64::consts::PI;
        assert!((lhs - rhs).abs() < 1e-12 * rhs);
    }

    #[test]
    fn wronskian_is_constant() {
        let target = -2.0 * f0();
        for i in 0..50 {
            let z = -0.75 + 1.5 * i as f64 / 49.0;
            let w = scaled_wronskian(z);
            assert!((w - target).abs() < 1e-8, "z = {z}: {w} vs {target}");
        }
    }

    #[test]
    fn mode_potential_limits() {
        // (0,0) reduces to the plain ODE
        assert_eq!(mode_potential(0.0, 0.0, 0.3), 0.0);
        // potential blows up at z → −π/4 for a ≠ 0
        assert!(mode_potential(1.0, 0.0, -FRAC_PI_4 + 1e-8) > 1e7);
        // coordinate function x₃ = sin(z+π/4) cos(√2 x) is a Jacobi field:
        // frequency a = √2, mode profile sin(z+π/4)
        for &z in &[0.0, 0.3, -0.5] {
            let c = (z + FRAC_PI_4).sin();
            let dc = (z + FRAC_PI_4).cos();
            let d2c = -c;
            let r = mode_apply(c, dc, d2c, crate::geom::SQRT2, 0.0, z, 3.0);
            assert!(r.abs() < 1e-12, "z = {z}: {r}");
        }
    }
}
