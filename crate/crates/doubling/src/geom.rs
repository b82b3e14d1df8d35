//! Geometry of the equatorial three-sphere in the four-sphere: the torus
//! chart, its metric, deck periods, the discrete symmetry groups, the square
//! lattice on the Clifford torus, smooth cutoffs, and the weighted-norm
//! surrogate used by all diagnostics.

use crate::error::{Error, Result};
use serde::Serialize;
use std::f64::consts::{FRAC_PI_4, PI};

pub const SQRT2: f64 = std::f64::consts::SQRT_2;
/// The chart is z ∈ [-π/4, π/4]; the ends are the degenerate circles.
pub const Z_MAX: f64 = FRAC_PI_4;

/// Point in the torus chart (x, y, z).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChartPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl ChartPoint {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        ChartPoint { x, y, z }
    }
}

/// Point of the four-sphere as a unit 5-vector.
pub type Ambient = [f64; 5];

pub fn dot5(a: &Ambient, b: &Ambient) -> f64 {
    a.iter().zip(b).map(|(u, v)| u * v).sum()
}

pub fn norm5(a: &Ambient) -> f64 {
    dot5(a, a).sqrt()
}

/// The chart map onto the equatorial three-sphere (x₅ = 0).
pub fn theta_eq(p: ChartPoint) -> Ambient {
    let cz = (p.z + FRAC_PI_4).cos();
    let sz = (p.z + FRAC_PI_4).sin();
    [
        cz * (SQRT2 * p.y).cos(),
        cz * (SQRT2 * p.y).sin(),
        sz * (SQRT2 * p.x).cos(),
        sz * (SQRT2 * p.x).sin(),
        0.0,
    ]
}

/// Jacobian ∂Θ/∂(x, y, z), rows indexed by chart direction.
pub fn theta_d1(p: ChartPoint) -> [[f64; 5]; 3] {
    let cz = (p.z + FRAC_PI_4).cos();
    let sz = (p.z + FRAC_PI_4).sin();
    let (cy, sy) = ((SQRT2 * p.y).cos(), (SQRT2 * p.y).sin());
    let (cx, sx) = ((SQRT2 * p.x).cos(), (SQRT2 * p.x).sin());
    [
        [0.0, 0.0, -SQRT2 * sz * sx, SQRT2 * sz * cx, 0.0],
        [-SQRT2 * cz * sy, SQRT2 * cz * cy, 0.0, 0.0, 0.0],
        [-sz * cy, -sz * sy, cz * cx, cz * sx, 0.0],
    ]
}

/// Second partials ∂²Θ/∂i∂j as a symmetric 3×3 of 5-vectors.
pub fn theta_d2(p: ChartPoint) -> [[[f64; 5]; 3]; 3] {
    let cz = (p.z + FRAC_PI_4).cos();
    let sz = (p.z + FRAC_PI_4).sin();
    let (cy, sy) = ((SQRT2 * p.y).cos(), (SQRT2 * p.y).sin());
    let (cx, sx) = ((SQRT2 * p.x).cos(), (SQRT2 * p.x).sin());
    let mut d2 = [[[0.0; 5]; 3]; 3];
    // xx
    d2[0][0] = [0.0, 0.0, -2.0 * sz * cx, -2.0 * sz * sx, 0.0];
    // yy
    d2[1][1] = [-2.0 * cz * cy, -2.0 * cz * sy, 0.0, 0.0, 0.0];
    // zz
    d2[2][2] = [-cz * cy, -cz * sy, -sz * cx, -sz * sx, 0.0];
    // xz
    d2[0][2] = [0.0, 0.0, -SQRT2 * cz * sx, SQRT2 * cz * cx, 0.0];
    d2[2][0] = d2[0][2];
    // yz
    d2[1][2] = [SQRT2 * sz * sy, -SQRT2 * sz * cy, 0.0, 0.0, 0.0];
    d2[2][1] = d2[1][2];
    d2
}

/// Diagonal metric coefficients (g_xx, g_yy, g_zz) = (1+sin2z, 1−sin2z, 1).
///
/// Degenerate (a zero coefficient) at z = ±π/4; returned, not rejected.
pub fn metric_coeffs(z: f64) -> (f64, f64, f64) {
    let s = (2.0 * z).sin();
    (1.0 + s, 1.0 - s, 1.0)
}

/// Chart coordinates of an ambient point on the equatorial sphere with
/// angles reduced to the principal range.
pub fn chart_of_ambient(q: &Ambient) -> ChartPoint {
    let r1 = q[0].hypot(q[1]);
    let r2 = q[2].hypot(q[3]);
    let z = r2.atan2(r1) - FRAC_PI_4;
    let x = if r2 > 1e-14 { q[3].atan2(q[2]) / SQRT2 } else { 0.0 };
    let y = if r1 > 1e-14 { q[1].atan2(q[0]) / SQRT2 } else { 0.0 };
    ChartPoint::new(x, y, z)
}

/// Geodesic distance on the unit sphere (any dimension, via the ambient dot).
pub fn geodesic_distance(p: &Ambient, q: &Ambient) -> f64 {
    dot5(p, q).clamp(-1.0, 1.0).acos()
}

/// Numerically determined chart periods (P_x, P_y): smallest positive shifts
/// with Θ(x + P, y, z) = Θ(x, y, z). Both equal √2·π; the printed deck
/// period 2π is not a period of the displayed chart map.
pub fn deck_periods() -> (f64, f64) {
    let probe = ChartPoint::new(0.37, -0.21, 0.11);
    let base = theta_eq(probe);
    let gap = |shift_x: f64, shift_y: f64| -> f64 {
        let q = theta_eq(ChartPoint::new(probe.x + shift_x, probe.y + shift_y, probe.z));
        (0..5).map(|i| (q[i] - base[i]).powi(2)).sum::<f64>().sqrt()
    };
    let find = |dir: usize| -> f64 {
        // coarse scan for the first zero of the displacement, then bisect on
        // the derivative-free golden refinement of the local minimum
        let mut best = (f64::MAX, 0.0);
        let mut t = 0.5;
        while t < 8.0 {
            let g = if dir == 0 { gap(t, 0.0) } else { gap(0.0, t) };
            if g < best.0 {
                best = (g, t);
            }
            t += 1e-3;
        }
        // golden-section refine around the scan minimum
        let (mut a, mut b) = (best.1 - 2e-3, best.1 + 2e-3);
        for _ in 0..200 {
            let m1 = a + (b - a) * 0.381_966;
            let m2 = b - (b - a) * 0.381_966;
            let g1 = if dir == 0 { gap(m1, 0.0) } else { gap(0.0, m1) };
            let g2 = if dir == 0 { gap(m2, 0.0) } else { gap(0.0, m2) };
            if g1 < g2 {
                b = m2;
            } else {
                a = m1;
            }
        }
        0.5 * (a + b)
    };
    (find(0), find(1))
}

// ---------------------------------------------------------------------------
// Symmetries

/// One isometry of the ambient sphere as an orthogonal 5×5 matrix.
#[derive(Debug, Clone, Serialize)]
pub struct SymmetryElement {
    pub matrix: [[f64; 5]; 5],
    pub label: String,
}

fn identity5() -> [[f64; 5]; 5] {
    let mut m = [[0.0; 5]; 5];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    m
}

fn mat_apply(m: &[[f64; 5]; 5], v: &Ambient) -> Ambient {
    let mut out = [0.0; 5];
    for i in 0..5 {
        for j in 0..5 {
            out[i] += m[i][j] * v[j];
        }
    }
    out
}

fn mat_mul(a: &[[f64; 5]; 5], b: &[[f64; 5]; 5]) -> [[f64; 5]; 5] {
    let mut out = [[0.0; 5]; 5];
    for i in 0..5 {
        for j in 0..5 {
            let mut s = 0.0;
            for k in 0..5 {
                s += a[i][k] * b[k][j];
            }
            out[i][j] = s;
        }
    }
    out
}

/// Reflection of the (x₃, x₄) plane about the line at angle c.
fn refl_x(c: f64) -> [[f64; 5]; 5] {
    let mut m = identity5();
    m[2][2] = (2.0 * c).cos();
    m[2][3] = (2.0 * c).sin();
    m[3][2] = (2.0 * c).sin();
    m[3][3] = -(2.0 * c).cos();
    m
}

/// Reflection of the (x₁, x₂) plane about the line at angle c.
fn refl_y(c: f64) -> [[f64; 5]; 5] {
    let mut m = identity5();
    m[0][0] = (2.0 * c).cos();
    m[0][1] = (2.0 * c).sin();
    m[1][0] = (2.0 * c).sin();
    m[1][1] = -(2.0 * c).cos();
    m
}

fn involution_s() -> [[f64; 5]; 5] {
    let mut m = [[0.0; 5]; 5];
    m[0][2] = 1.0;
    m[1][3] = 1.0;
    m[2][0] = 1.0;
    m[3][1] = 1.0;
    m[4][4] = 1.0;
    m
}

fn refl_z5() -> [[f64; 5]; 5] {
    let mut m = identity5();
    m[4][4] = -1.0;
    m
}

/// Generators of the symmetry group fixing the meridian family of the m×m
/// lattice: the four reflections, the pair involution, and (for the ambient
/// four-sphere group) the equator reflection.
pub fn symmetry_generators(m: usize, include_equator_reflection: bool) -> Vec<SymmetryElement> {
    let c = PI / m as f64;
    let mut gens = vec![
        SymmetryElement { matrix: refl_x(0.0), label: "X_0".into() },
        SymmetryElement { matrix: refl_x(c), label: "X_pi_over_m".into() },
        SymmetryElement { matrix: refl_y(0.0), label: "Y_0".into() },
        SymmetryElement { matrix: refl_y(c), label: "Y_pi_over_m".into() },
        SymmetryElement { matrix: involution_s(), label: "S".into() },
    ];
    if include_equator_reflection {
        gens.push(SymmetryElement { matrix: refl_z5(), label: "Z".into() });
    }
    gens
}

/// Full group generated by [`symmetry_generators`], by closure.
pub fn symmetry_group(m: usize, include_equator_reflection: bool) -> Vec<[[f64; 5]; 5]> {
    let gens: Vec<_> = symmetry_generators(m, include_equator_reflection)
        .into_iter()
        .map(|g| g.matrix)
        .collect();
    let key = |mat: &[[f64; 5]; 5]| -> Vec<i64> {
        mat.iter()
            .flatten()
            .map(|v| (v * 1e9).round() as i64)
            .collect()
    };
    let mut seen = std::collections::HashSet::new();
    let mut out = vec![identity5()];
    seen.insert(key(&out[0]));
    let mut frontier = out.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for g in &gens {
                let h = mat_mul(g, f);
                if seen.insert(key(&h)) {
                    next.push(h);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

pub fn apply_symmetry(g: &[[f64; 5]; 5], q: &Ambient) -> Ambient {
    mat_apply(g, q)
}

// ---------------------------------------------------------------------------
// Lattice

/// The m×m lattice on the Clifford torus.
#[derive(Debug, Clone, Serialize)]
pub struct Lattice {
    pub m: usize,
    /// Ambient positions Θ(P i/m, P j/m, 0), P the numeric chart period.
    pub points: Vec<Ambient>,
    /// Chart coordinates of the same points (pure chart translations of the
    /// base point, so frames built from the chart are equivariant).
    pub chart_points: Vec<ChartPoint>,
    /// Chart period actually used (√2 π).
    pub period: f64,
}

impl Lattice {
    /// The base point p₀ = Θ(0,0,0).
    pub fn base_point(&self) -> Ambient {
        self.points[0]
    }

    /// Geodesic distance from a chart point to the nearest lattice point.
    ///
    /// Uses cos d = cos(z+π/4)·(√2/2)·cos(ξ_y − β) + sin(z+π/4)·(√2/2)·cos(ξ_x − α)
    /// with both cosines maximized at the nearest lattice angles (the
    /// coefficients are nonnegative on the chart).
    pub fn dist(&self, p: ChartPoint) -> f64 {
        let step = 2.0 * PI / self.m as f64;
        let xi_x = SQRT2 * p.x;
        let xi_y = SQRT2 * p.y;
        let wrap = |a: f64| -> f64 {
            let r = a.rem_euclid(step);
            r.min(step - r)
        };
        let cz = (p.z + FRAC_PI_4).cos();
        let sz = (p.z + FRAC_PI_4).sin();
        let c = std::f64::consts::FRAC_1_SQRT_2
            * (cz * wrap(xi_y).cos() + sz * wrap(xi_x).cos());
        c.clamp(-1.0, 1.0).acos()
    }

    /// Minimum pairwise geodesic separation.
    pub fn min_separation(&self) -> f64 {
        let mut best = f64::MAX;
        for i in 0..self.points.len() {
            for j in (i + 1)..self.points.len() {
                best = best.min(geodesic_distance(&self.points[i], &self.points[j]));
            }
        }
        best
    }
}

/// Build the lattice: the orbit of p₀ under the lattice rotations, realized
/// as the m² points with torus angles (2πi/m, 2πj/m).
pub fn lattice_points(m: usize) -> Result<Lattice> {
    if m < 2 {
        return Err(Error::Domain(format!("lattice requires m >= 2, got {m}")));
    }
    let period = SQRT2 * PI;
    let mut points = Vec::with_capacity(m * m);
    let mut chart_points = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            let x = period * i as f64 / m as f64;
            let y = period * j as f64 / m as f64;
            let cp = ChartPoint::new(x, y, 0.0);
            chart_points.push(cp);
            points.push(theta_eq(cp));
        }
    }
    Ok(Lattice { m, points, chart_points, period })
}

/// Geodesic distance to the Clifford torus: |z| in the chart.
pub fn dist_t0(p: ChartPoint) -> f64 {
    p.z.abs()
}

// ---------------------------------------------------------------------------
// Distance fields with chart derivatives

/// Distance to a fixed ambient point with chart gradient and Hessian,
/// for closed-form evaluation of radial bump fields.
pub fn dist_with_derivs(p: ChartPoint, center: &Ambient) -> (f64, [f64; 3], [[f64; 3]; 3]) {
    let q = theta_eq(p);
    let d1 = theta_d1(p);
    let d2 = theta_d2(p);
    let c = dot5(&q, center).clamp(-1.0, 1.0);
    let dc: [f64; 3] = std::array::from_fn(|i| dot5(&d1[i], center));
    let mut d2c = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            d2c[i][j] = dot5(&d2[i][j], center);
        }
    }
    let s2 = (1.0 - c * c).max(1e-300);
    let s = s2.sqrt();
    let d = c.acos();
    let grad: [f64; 3] = std::array::from_fn(|i| -dc[i] / s);
    let mut hess = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            hess[i][j] = -(d2c[i][j] * s2 + c * dc[i] * dc[j]) / (s2 * s);
        }
    }
    (d, grad, hess)
}

// ---------------------------------------------------------------------------
// Cutoffs

fn bump_half(s: f64) -> f64 {
    if s > 0.0 {
        (-1.0 / s).exp()
    } else {
        0.0
    }
}

fn bump_half_d1(s: f64) -> f64 {
    if s > 0.0 {
        (-1.0 / s).exp() / (s * s)
    } else {
        0.0
    }
}

fn bump_half_d2(s: f64) -> f64 {
    if s > 0.0 {
        (-1.0 / s).exp() * (1.0 - 2.0 * s) / s.powi(4)
    } else {
        0.0
    }
}

/// The fixed transition profile Ψ: 0 on (-∞,-1], 1 on [1,∞), smooth and
/// non-decreasing, with Ψ − 1/2 odd.
pub fn psi_profile(t: f64) -> f64 {
    if t <= -1.0 {
        0.0
    } else if t >= 1.0 {
        1.0
    } else {
        let p = bump_half(t + 1.0);
        let q = bump_half(1.0 - t);
        p / (p + q)
    }
}

pub fn psi_profile_d1(t: f64) -> f64 {
    if !(-1.0..1.0).contains(&t) {
        return 0.0;
    }
    let p = bump_half(t + 1.0);
    let q = bump_half(1.0 - t);
    let dp = bump_half_d1(t + 1.0);
    let dq = -bump_half_d1(1.0 - t);
    (dp * q - p * dq) / (p + q).powi(2)
}

pub fn psi_profile_d2(t: f64) -> f64 {
    if !(-1.0..1.0).contains(&t) {
        return 0.0;
    }
    let p = bump_half(t + 1.0);
    let q = bump_half(1.0 - t);
    let dp = bump_half_d1(t + 1.0);
    let dq = -bump_half_d1(1.0 - t);
    let d2p = bump_half_d2(t + 1.0);
    let d2q = bump_half_d2(1.0 - t);
    let s = p + q;
    let ds = dp + dq;
    let d2s = d2p + d2q;
    // (p/s)'' = p''/s - 2 p' s'/s² - p s''/s² + 2 p s'²/s³
    d2p / s - 2.0 * dp * ds / (s * s) - p * d2s / (s * s) + 2.0 * p * ds * ds / (s * s * s)
}

/// ψ_cut[a, b] = Ψ ∘ L_{a,b} with L affine, L(a) = −3, L(b) = 3.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Cutoff {
    pub a: f64,
    pub b: f64,
}

impl Cutoff {
    pub fn new(a: f64, b: f64) -> Self {
        assert!(a != b, "cutoff endpoints must differ");
        Cutoff { a, b }
    }

    fn affine(&self) -> (f64, f64) {
        // L(t) = -3 + 6 (t - a)/(b - a)
        let slope = 6.0 / (self.b - self.a);
        (slope, -3.0 - slope * self.a)
    }

    pub fn eval(&self, t: f64) -> f64 {
        let (s, o) = self.affine();
        psi_profile(s * t + o)
    }

    pub fn d1(&self, t: f64) -> f64 {
        let (s, o) = self.affine();
        s * psi_profile_d1(s * t + o)
    }

    pub fn d2(&self, t: f64) -> f64 {
        let (s, o) = self.affine();
        s * s * psi_profile_d2(s * t + o)
    }
}

/// Two-sided blend Ψ[a,b;d](f0, f1) = f0 ψ_cut[b,a](d) + f1 ψ_cut[a,b](d).
pub fn blend(a: f64, b: f64, d: f64, f0: f64, f1: f64) -> f64 {
    let cut = Cutoff::new(a, b);
    let w1 = cut.eval(d);
    f0 * (1.0 - w1) + f1 * w1
}

// ---------------------------------------------------------------------------
// Weighted norms

/// Which weight family multiplies the r^γ̂ factor.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct WeightedNormSpec {
    /// k ∈ {0, 2}: highest scaled derivative order measured.
    pub k: u8,
    /// Hölder exponent carried in reports (the seminorm itself is not
    /// separately estimated; see module docs).
    pub beta: f64,
    /// Power of r = min(d_L, δ) in the weight.
    pub gamma_hat: f64,
    /// Exponential decay rate γ' of the band weight.
    pub gamma_prime: f64,
    pub m: usize,
    pub delta_s: f64,
}

impl WeightedNormSpec {
    /// f_{k,γ'} of the weight definition, evaluated from d_T0 = |z|.
    pub fn band_weight(&self, z_abs: f64) -> f64 {
        let m = self.m as f64;
        let zt = m * z_abs;
        let floor = if self.k == 0 {
            (-m * self.gamma_prime * self.delta_s).exp()
        } else {
            m.powf(4.0 + self.beta) * (-m * self.gamma_prime * self.delta_s).exp()
        };
        (-self.gamma_prime * zt).exp().max(floor)
    }

    /// Full weight r^γ̂ f_{k,γ'} at a chart point.
    pub fn weight(&self, p: ChartPoint, lattice: &Lattice) -> f64 {
        let delta = 1.0 / (9.0 * self.m as f64);
        let r = lattice.dist(p).min(delta);
        r.powf(self.gamma_hat) * self.band_weight(p.z.abs())
    }
}

/// Structured chart samples of a scalar field on a product grid.
#[derive(Debug, Clone)]
pub struct FieldSamples {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub zs: Vec<f64>,
    /// Row-major values, index ((i·ny)+j)·nz + k.
    pub values: Vec<f64>,
}

impl FieldSamples {
    pub fn value(&self, i: usize, j: usize, k: usize) -> f64 {
        self.values[(i * self.ys.len() + j) * self.zs.len() + k]
    }
}

/// Discrete surrogate of the weighted Hölder norm: the supremum over interior
/// samples of |u|/f plus (for k = 2) the locally rescaled first and second
/// finite-difference magnitudes divided by f. The β-seminorm is not
/// separately estimated.
pub fn weighted_norm(
    samples: &FieldSamples,
    spec: &WeightedNormSpec,
    lattice: &Lattice,
) -> Result<f64> {
    let (nx, ny, nz) = (samples.xs.len(), samples.ys.len(), samples.zs.len());
    if nx < 3 || ny < 3 || nz < 3 {
        return Err(Error::Sampling(format!(
            "weighted_norm needs at least 3 samples per axis, got {nx}×{ny}×{nz}"
        )));
    }
    let delta = 1.0 / (9.0 * spec.m as f64);
    let mut sup: f64 = 0.0;
    for i in 0..nx {
        for j in 0..ny {
            for k in 0..nz {
                let p = ChartPoint::new(samples.xs[i], samples.ys[j], samples.zs[k]);
                let f = spec.weight(p, lattice);
                let u = samples.value(i, j, k);
                let mut local = u.abs();
                if spec.k >= 2 && i > 0 && i + 1 < nx && j > 0 && j + 1 < ny && k > 0 && k + 1 < nz
                {
                    let r = lattice.dist(p).min(delta);
                    let (a, b, _) = metric_coeffs(p.z);
                    let hx = 0.5 * (samples.xs[i + 1] - samples.xs[i - 1]);
                    let hy = 0.5 * (samples.ys[j + 1] - samples.ys[j - 1]);
                    let hz = 0.5 * (samples.zs[k + 1] - samples.zs[k - 1]);
                    let dx = (samples.value(i + 1, j, k) - samples.value(i - 1, j, k)) / (2.0 * hx);
                    let dy = (samples.value(i, j + 1, k) - samples.value(i, j - 1, k)) / (2.0 * hy);
                    let dz = (samples.value(i, j, k + 1) - samples.value(i, j, k - 1)) / (2.0 * hz);
                    let grad =
                        (dx * dx / a.max(1e-12) + dy * dy / b.max(1e-12) + dz * dz).sqrt();
                    let dxx = (samples.value(i + 1, j, k) - 2.0 * u + samples.value(i - 1, j, k))
                        / (hx * hx);
                    let dyy = (samples.value(i, j + 1, k) - 2.0 * u + samples.value(i, j - 1, k))
                        / (hy * hy);
                    let dzz = (samples.value(i, j, k + 1) - 2.0 * u + samples.value(i, j, k - 1))
                        / (hz * hz);
                    let hess = (dxx / a.max(1e-12)).hypot(dyy / b.max(1e-12)).hypot(dzz);
                    local += r * grad + r * r * hess;
                }
                sup = sup.max(local / f);
            }
        }
    }
    Ok(sup)
}

// ---------------------------------------------------------------------------
// Frames and geodesics on the equatorial sphere

/// Orthonormal tangent frame of the equatorial sphere at p (three 5-vectors
/// with zero fifth component), plus the ambient normal e₅.
pub fn tangent_frame(p: &Ambient) -> [[f64; 5]; 3] {
    // Gram-Schmidt the coordinate directions against p.
    let mut frame = [[0.0; 5]; 3];
    let mut count = 0;
    let mut cands: Vec<Ambient> = Vec::new();
    for i in 0..4 {
        let mut e = [0.0; 5];
        e[i] = 1.0;
        cands.push(e);
    }
    for e in cands {
        if count == 3 {
            break;
        }
        let mut v = e;
        let c = dot5(&v, p);
        for t in v.iter_mut().zip(p) {
            *t.0 -= c * t.1;
        }
        for fprev in frame.iter().take(count) {
            let c = dot5(&v, fprev);
            for t in v.iter_mut().zip(fprev) {
                *t.0 -= c * t.1;
            }
        }
        let n = norm5(&v);
        if n > 1e-8 {
            for t in v.iter_mut() {
                *t /= n;
            }
            frame[count] = v;
            count += 1;
        }
    }
    assert_eq!(count, 3, "degenerate frame");
    frame
}

/// Orthonormal chart frame (e_x, e_y, e_z) at a chart point: equivariant
/// under the chart translations that generate the lattice.
pub fn chart_frame(p: ChartPoint) -> [[f64; 5]; 3] {
    let d1 = theta_d1(p);
    let (a, b, _) = metric_coeffs(p.z);
    let mut frame = [[0.0; 5]; 3];
    for i in 0..5 {
        frame[0][i] = d1[0][i] / a.sqrt();
        frame[1][i] = d1[1][i] / b.sqrt();
        frame[2][i] = d1[2][i];
    }
    frame
}

/// Geodesic exponential on the equatorial sphere: p ↦ cos|v| p + sin|v| v̂.
pub fn sphere_exp(p: &Ambient, dir: &Ambient, t: f64) -> Ambient {
    let mut out = [0.0; 5];
    for i in 0..5 {
        out[i] = t.cos() * p[i] + t.sin() * dir[i];
    }
    out
}
