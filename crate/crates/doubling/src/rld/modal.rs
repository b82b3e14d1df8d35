//! Symmetric modal fields: torus-Fourier cosine modes in the chart angles ×
//! radial coefficient samples on a multi-domain Chebyshev grid. Houses every
//! solver unknown of the linear theory and the LD construction.

use super::grid::RadialGrid;
use super::radial::mode_potential;
use crate::geom::{ChartPoint, SQRT2};
use crate::quad::gauss_legendre;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::sync::{Arc, OnceLock};

/// Cosine frequency pair: mode (k, l) is cos(k·u)·cos(l·v) in the cell
/// angles u = √2 m x, v = √2 m y (symmetric under the lattice reflections by
/// construction; the pair involution sends (k, l, z) ↦ (l, k, −z)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModeIndex {
    pub k: usize,
    pub l: usize,
}

/// Chart x-frequency of index k.
pub fn chart_frequency(m: usize, k: usize) -> f64 {
    SQRT2 * m as f64 * k as f64
}

/// Scalar field stored as modal coefficients on a radial grid.
#[derive(Clone)]
pub struct ModalField {
    pub m: usize,
    pub kmax: usize,
    pub grid: Arc<RadialGrid>,
    /// coeffs[mode_id][node], mode_id = k (kmax+1) + l, nodes concatenated
    /// across subdomains.
    pub coeffs: Vec<Vec<f64>>,
    d1_cache: OnceLock<Arc<Vec<Vec<f64>>>>,
    d2_cache: OnceLock<Arc<Vec<Vec<f64>>>>,
}

impl std::fmt::Debug for ModalField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ModalField")
            .field("m", &self.m)
            .field("kmax", &self.kmax)
            .field("nodes", &self.grid.total_nodes())
            .finish()
    }
}

/// First and second chart partials of a field at a point.
#[derive(Debug, Clone, Copy, Default)]
pub struct FieldJet {
    pub v: f64,
    pub dx: f64,
    pub dy: f64,
    pub dz: f64,
    pub dxx: f64,
    pub dyy: f64,
    pub dzz: f64,
    pub dxy: f64,
    pub dxz: f64,
    pub dyz: f64,
}

impl std::ops::AddAssign for FieldJet {
    fn add_assign(&mut self, o: Self) {
        self.v += o.v;
        self.dx += o.dx;
        self.dy += o.dy;
        self.dz += o.dz;
        self.dxx += o.dxx;
        self.dyy += o.dyy;
        self.dzz += o.dzz;
        self.dxy += o.dxy;
        self.dxz += o.dxz;
        self.dyz += o.dyz;
    }
}

impl FieldJet {
    pub fn scaled(mut self, c: f64) -> Self {
        self.v *= c;
        self.dx *= c;
        self.dy *= c;
        self.dz *= c;
        self.dxx *= c;
        self.dyy *= c;
        self.dzz *= c;
        self.dxy *= c;
        self.dxz *= c;
        self.dyz *= c;
        self
    }
}

impl ModalField {
    pub fn zeros(m: usize, kmax: usize, grid: Arc<RadialGrid>) -> Self {
        let n = grid.total_nodes();
        ModalField {
            m,
            kmax,
            grid,
            coeffs: vec![vec![0.0; n]; (kmax + 1) * (kmax + 1)],
            d1_cache: OnceLock::new(),
            d2_cache: OnceLock::new(),
        }
    }

    pub fn mode_id(&self, k: usize, l: usize) -> usize {
        k * (self.kmax + 1) + l
    }

    pub fn modes(&self) -> impl Iterator<Item = ModeIndex> + '_ {
        (0..=self.kmax).flat_map(move |k| (0..=self.kmax).map(move |l| ModeIndex { k, l }))
    }

    fn nodal_derivatives(&self, order: u8) -> Arc<Vec<Vec<f64>>> {
        let cache = if order == 1 { &self.d1_cache } else { &self.d2_cache };
        cache
            .get_or_init(|| {
                let offs = self.grid.offsets();
                let out: Vec<Vec<f64>> = self
                    .coeffs
                    .par_iter()
                    .map(|c| {
                        let mut dv = vec![0.0; c.len()];
                        for (di, d) in self.grid.domains.iter().enumerate() {
                            let o = offs[di];
                            let n = d.len();
                            let mat = if order == 1 { &d.d1 } else { &d.d2 };
                            for i in 0..n {
                                let mut s = 0.0;
                                for j in 0..n {
                                    s += mat[(i, j)] * c[o + j];
                                }
                                dv[o + i] = s;
                            }
                        }
                        dv
                    })
                    .collect();
                Arc::new(out)
            })
            .clone()
    }

    fn invalidate_caches(&mut self) {
        self.d1_cache = OnceLock::new();
        self.d2_cache = OnceLock::new();
    }

    pub fn axpy(&mut self, alpha: f64, other: &ModalField) {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        for (c, o) in self.coeffs.iter_mut().zip(&other.coeffs) {
            for (a, b) in c.iter_mut().zip(o) {
                *a += alpha * b;
            }
        }
        self.invalidate_caches();
    }

    pub fn scale(&mut self, alpha: f64) {
        for c in self.coeffs.iter_mut() {
            for a in c.iter_mut() {
                *a *= alpha;
            }
        }
        self.invalidate_caches();
    }

    /// Cell angles of a chart point.
    pub fn angles(&self, p: ChartPoint) -> (f64, f64) {
        (SQRT2 * self.m as f64 * p.x, SQRT2 * self.m as f64 * p.y)
    }

    pub fn eval(&self, p: ChartPoint) -> f64 {
        let (u, v) = self.angles(p);
        let mut s = 0.0;
        for k in 0..=self.kmax {
            for l in 0..=self.kmax {
                let c = self.grid.interpolate(&self.coeffs[self.mode_id(k, l)], p.z);
                s += c * (k as f64 * u).cos() * (l as f64 * v).cos();
            }
        }
        s
    }

    /// Value with first and second chart partials.
    pub fn eval_jet(&self, p: ChartPoint) -> FieldJet {
        let (u, v) = self.angles(p);
        let d1 = self.nodal_derivatives(1);
        let d2 = self.nodal_derivatives(2);
        let mf = SQRT2 * self.m as f64;
        let mut jet = FieldJet::default();
        for k in 0..=self.kmax {
            let (ck, sk) = ((k as f64 * u).cos(), (k as f64 * u).sin());
            let ak = k as f64 * mf;
            for l in 0..=self.kmax {
                let id = self.mode_id(k, l);
                let c0 = self.grid.interpolate(&self.coeffs[id], p.z);
                let c1 = self.grid.interpolate(&d1[id], p.z);
                let c2 = self.grid.interpolate(&d2[id], p.z);
                let (cl, sl) = ((l as f64 * v).cos(), (l as f64 * v).sin());
                let bl = l as f64 * mf;
                jet.v += c0 * ck * cl;
                jet.dx += -c0 * ak * sk * cl;
                jet.dy += -c0 * bl * ck * sl;
                jet.dz += c1 * ck * cl;
                jet.dxx += -c0 * ak * ak * ck * cl;
                jet.dyy += -c0 * bl * bl * ck * cl;
                jet.dzz += c2 * ck * cl;
                jet.dxy += c0 * ak * bl * sk * sl;
                jet.dxz += -c1 * ak * sk * cl;
                jet.dyz += -c1 * bl * ck * sl;
            }
        }
        jet
    }

    /// Tensor evaluation of the jet on a product grid of z-values and cell
    /// angles; index (iz·nu + iu)·nv + iv.
    pub fn eval_grid_jet(&self, zs: &[f64], us: &[f64], vs: &[f64]) -> Vec<FieldJet> {
        let d1 = self.nodal_derivatives(1);
        let d2 = self.nodal_derivatives(2);
        let kk = self.kmax + 1;
        let mf = SQRT2 * self.m as f64;
        let cos_u: Vec<Vec<f64>> = us
            .iter()
            .map(|&u| (0..kk).map(|k| (k as f64 * u).cos()).collect())
            .collect();
        let sin_u: Vec<Vec<f64>> = us
            .iter()
            .map(|&u| (0..kk).map(|k| (k as f64 * u).sin()).collect())
            .collect();
        let cos_v: Vec<Vec<f64>> = vs
            .iter()
            .map(|&v| (0..kk).map(|l| (l as f64 * v).cos()).collect())
            .collect();
        let sin_v: Vec<Vec<f64>> = vs
            .iter()
            .map(|&v| (0..kk).map(|l| (l as f64 * v).sin()).collect())
            .collect();
        let blocks: Vec<Vec<FieldJet>> = zs
            .par_iter()
            .map(|&z| {
                // per-z interpolated coefficient tables (value, z', z'')
                let mut a0 = vec![0.0; kk * kk];
                let mut a1 = vec![0.0; kk * kk];
                let mut a2 = vec![0.0; kk * kk];
                for k in 0..kk {
                    for l in 0..kk {
                        let id = k * kk + l;
                        a0[id] = self.grid.interpolate(&self.coeffs[id], z);
                        a1[id] = self.grid.interpolate(&d1[id], z);
                        a2[id] = self.grid.interpolate(&d2[id], z);
                    }
                }
                let mut out = vec![FieldJet::default(); us.len() * vs.len()];
                // contract over l per v, then over k per u
                for (iv, _) in vs.iter().enumerate() {
                    let cv = &cos_v[iv];
                    let sv = &sin_v[iv];
                    // b*[k] are the per-k partial sums over l
                    let mut b0c = vec![0.0; kk];
                    let mut b0s = vec![0.0; kk];
                    let mut b1c = vec![0.0; kk];
                    let mut b1s = vec![0.0; kk];
                    let mut b2c = vec![0.0; kk];
                    for k in 0..kk {
                        let row0 = &a0[k * kk..(k + 1) * kk];
                        let row1 = &a1[k * kk..(k + 1) * kk];
                        let row2 = &a2[k * kk..(k + 1) * kk];
                        let (mut s0c, mut s0s, mut s1c, mut s1s, mut s2c) =
                            (0.0, 0.0, 0.0, 0.0, 0.0);
                        for l in 0..kk {
                            let bl = l as f64 * mf;
                            s0c += row0[l] * cv[l];
                            s0s += row0[l] * bl * sv[l];
                            s1c += row1[l] * cv[l];
                            s1s += row1[l] * bl * sv[l];
                            s2c += row2[l] * cv[l];
                        }
                        b0c[k] = s0c;
                        b0s[k] = s0s;
                        b1c[k] = s1c;
                        b1s[k] = s1s;
                        b2c[k] = s2c;
                    }
                    // second v-derivative table
                    let mut b0cyy = vec![0.0; kk];
                    for k in 0..kk {
                        let row0 = &a0[k * kk..(k + 1) * kk];
                        let mut s = 0.0;
                        for l in 0..kk {
                            let bl = l as f64 * mf;
                            s += -row0[l] * bl * bl * cv[l];
                        }
                        b0cyy[k] = s;
                    }
                    for (iu, _) in us.iter().enumerate() {
                        let cu = &cos_u[iu];
                        let su = &sin_u[iu];
                        let mut jet = FieldJet::default();
                        for k in 0..kk {
                            let ak = k as f64 * mf;
                            jet.v += b0c[k] * cu[k];
                            jet.dx += -b0c[k] * ak * su[k];
                            jet.dy += -b0s[k] * cu[k];
                            jet.dz += b1c[k] * cu[k];
                            jet.dxx += -b0c[k] * ak * ak * cu[k];
                            jet.dyy += b0cyy[k] * cu[k];
                            jet.dzz += b2c[k] * cu[k];
                            jet.dxy += b0s[k] * ak * su[k];
                            jet.dxz += -b1c[k] * ak * su[k];
                            jet.dyz += -b1s[k] * cu[k];
                        }
                        out[iu * vs.len() + iv] = jet;
                    }
                }
                out
            })
            .collect();
        blocks.into_iter().flatten().collect()
    }

    /// Sup of the per-mode radial operator residual |L_kl c − rhs| over
    /// interior nodes, with zero-order term σ.
    pub fn operator_residual(&self, rhs: &ModalField, zero_order: f64) -> f64 {
        let d1 = self.nodal_derivatives(1);
        let d2 = self.nodal_derivatives(2);
        let offs = self.grid.offsets();
        let mut sup: f64 = 0.0;
        for k in 0..=self.kmax {
            for l in 0..=self.kmax {
                let id = self.mode_id(k, l);
                let a = chart_frequency(self.m, k);
                let b = chart_frequency(self.m, l);
                for (di, d) in self.grid.domains.iter().enumerate() {
                    let o = offs[di];
                    for i in 1..d.len() - 1 {
                        let z = d.nodes[i];
                        let val = self.coeffs[id][o + i];
                        let lv = d2[id][o + i] - 2.0 * (2.0 * z).tan() * d1[id][o + i]
                            + (zero_order - mode_potential(a, b, z)) * val;
                        sup = sup.max((lv - rhs.coeffs[id][o + i]).abs());
                    }
                }
            }
        }
        sup
    }

    /// Residual of the pair-involution symmetry c_{kl}(z) = c_{lk}(−z).
    pub fn s_symmetry_residual(&self) -> f64 {
        let mut sup: f64 = 0.0;
        for k in 0..=self.kmax {
            for l in 0..=self.kmax {
                let ida = self.mode_id(k, l);
                let idb = self.mode_id(l, k);
                for i in 0..17 {
                    let z = -0.75 + 1.5 * i as f64 / 16.0;
                    let va = self.grid.interpolate(&self.coeffs[ida], z);
                    let vb = self.grid.interpolate(&self.coeffs[idb], -z);
                    sup = sup.max((va - vb).abs());
                }
            }
        }
        sup
    }

    /// Rotationally invariant part: the (0,0) coefficient at z.
    pub fn avg_at(&self, z: f64) -> f64 {
        self.grid.interpolate(&self.coeffs[0], z)
    }

    /// Add a rotationally invariant profile g(z) to the (0,0) coefficients.
    pub fn add_avg_profile(&mut self, g: impl Fn(f64) -> f64) {
        let offs = self.grid.offsets();
        let grid = self.grid.clone();
        for (di, d) in grid.domains.iter().enumerate() {
            for (i, &z) in d.nodes.iter().enumerate() {
                self.coeffs[0][offs[di] + i] += g(z);
            }
        }
        self.invalidate_caches();
    }
}

/// Angular quadrature spec for modal projections: [0, s] resolves the bump
/// around the lattice point, [s, π] the rest.
#[derive(Debug, Clone, Copy)]
pub struct AngularQuad {
    pub split: f64,
    pub n_inner: usize,
    pub n_outer: usize,
}

impl Default for AngularQuad {
    fn default() -> Self {
        AngularQuad { split: 0.8, n_inner: 72, n_outer: 40 }
    }
}

impl AngularQuad {
    pub fn nodes(&self) -> (Vec<f64>, Vec<f64>) {
        let mut xs = Vec::new();
        let mut ws = Vec::new();
        for (a, b, n) in [(0.0, self.split, self.n_inner), (self.split, PI, self.n_outer)] {
            let (gx, gw) = gauss_legendre(n);
            for (x, w) in gx.iter().zip(&gw) {
                xs.push(0.5 * (a + b) + 0.5 * (b - a) * x);
                ws.push(0.5 * (b - a) * w);
            }
        }
        (xs, ws)
    }
}

/// Project a closure onto the symmetric cosine basis at the radial nodes
/// selected by `z_pred` (other nodes get zero coefficients). The closure is
/// evaluated at chart points of the cell around the base lattice point.
pub fn project_modal<F>(
    f: &F,
    m: usize,
    kmax: usize,
    grid: Arc<RadialGrid>,
    z_pred: impl Fn(f64) -> bool + Sync,
    quad: AngularQuad,
) -> ModalField
where
    F: Fn(ChartPoint) -> f64 + Sync,
{
    let (us, ws) = quad.nodes();
    let kk = kmax + 1;
    let mf = SQRT2 * m as f64;
    // cos tables with quadrature weights folded in
    let cosw: Vec<Vec<f64>> = (0..kk)
        .map(|k| {
            us.iter()
                .zip(&ws)
                .map(|(&u, &w)| (k as f64 * u).cos() * w)
                .collect()
        })
        .collect();
    let offs = grid.offsets();
    let mut tasks: Vec<(usize, f64)> = Vec::with_capacity(grid.total_nodes());
    for (di, d) in grid.domains.iter().enumerate() {
        for (i, &z) in d.nodes.iter().enumerate() {
            tasks.push((offs[di] + i, z));
        }
    }
    let results: Vec<(usize, Vec<f64>)> = tasks
        .par_iter()
        .filter(|(_, z)| z_pred(*z))
        .map(|&(node, z)| {
            let nu = us.len();
            // sample f on the tensor angular grid
            let mut vals = vec![0.0; nu * nu];
            for (iu, &u) in us.iter().enumerate() {
                for (iv, &v) in us.iter().enumerate() {
                    let p = ChartPoint::new(u / mf, v / mf, z);
                    vals[iu * nu + iv] = f(p);
                }
            }
            // separable cosine projection
            let mut t = vec![0.0; kk * nu]; // t[k][iv]
            for k in 0..kk {
                for iv in 0..nu {
                    let mut s = 0.0;
                    for iu in 0..nu {
                        s += cosw[k][iu] * vals[iu * nu + iv];
                    }
                    t[k * nu + iv] = s;
                }
            }
            let mut c = vec![0.0; kk * kk];
            for k in 0..kk {
                for l in 0..kk {
                    let mut s = 0.0;
                    for iv in 0..nu {
                        s += cosw[l][iv] * t[k * nu + iv];
                    }
                    let ek = if k == 0 { 1.0 } else { 2.0 };
                    let el = if l == 0 { 1.0 } else { 2.0 };
                    c[k * kk + l] = s * ek * el / (PI * PI);
                }
            }
            (node, c)
        })
        .collect();
    let mut out = ModalField::zeros(m, kmax, grid);
    for (node, c) in results {
        for k in 0..kk {
            for l in 0..kk {
                out.coeffs[k * kk + l][node] = c[k * kk + l];
            }
        }
    }
    out
}

/// Project a source supported on the geodesic annulus d ∈ [d_lo, d_hi]
/// around each lattice point, by polar quadrature in the chart plane with
/// per-ray bracketing of the ring (uniform trapezoid in the angle, Gauss
/// nodes across the ring). Handles the sharp exponential-cutoff shells the
/// tensor projector cannot resolve.
#[allow(clippy::too_many_arguments)]
pub fn project_annular<F>(
    f: &F,
    d_lo: f64,
    d_hi: f64,
    m: usize,
    kmax: usize,
    grid: Arc<RadialGrid>,
    n_theta: usize,
    n_rho: usize,
) -> ModalField
where
    F: Fn(ChartPoint) -> f64 + Sync,
{
    let mf = SQRT2 * m as f64;
    let kk = kmax + 1;
    let offs = grid.offsets();
    let mut tasks: Vec<(usize, f64)> = Vec::new();
    for (di, d) in grid.domains.iter().enumerate() {
        for (i, &z) in d.nodes.iter().enumerate() {
            if z.abs() < d_hi {
                tasks.push((offs[di] + i, z));
            }
        }
    }
    let (gx, gw) = gauss_legendre(n_rho);
    let p0 = crate::geom::theta_eq(ChartPoint::new(0.0, 0.0, 0.0));
    let lattice_dist = move |p: ChartPoint| -> f64 {
        // distance to the base lattice point only (the ring is local)
        let q = crate::geom::theta_eq(p);
        crate::geom::geodesic_distance(&q, &p0)
    };
    let results: Vec<(usize, Vec<f64>)> = tasks
        .par_iter()
        .map(|&(node, z)| {
            let mut c = vec![0.0; kk * kk];
            let dth = 2.0 * PI / n_theta as f64;
            for it in 0..n_theta {
                let th = dth * it as f64;
                let (ct, st) = (th.cos(), th.sin());
                // chart point at polar radius ρ (cell angles u = ρ cosθ …)
                let at = |rho: f64| ChartPoint::new(rho * ct / mf, rho * st / mf, z);
                let dist_at = |rho: f64| lattice_dist(at(rho));
                // bracket the ring along the ray
                let solve = |target: f64| -> Option<f64> {
                    if dist_at(0.0) >= target {
                        return Some(0.0);
                    }
                    let mut hi = 4.0 * mf * d_hi;
                    if dist_at(hi) < target {
                        hi = PI * 0.999; // cell sanity cap
                        if dist_at(hi) < target {
                            return None;
                        }
                    }
                    let mut lo = 0.0;
                    for _ in 0..80 {
                        let mid = 0.5 * (lo + hi);
                        if dist_at(mid) < target {
                            lo = mid;
                        } else {
                            hi = mid;
                        }
                    }
                    Some(0.5 * (lo + hi))
                };
                let (rho_lo, rho_hi) = match (solve(d_lo), solve(d_hi)) {
                    (Some(a), Some(b)) if b > a + 1e-15 => (a, b),
                    _ => continue,
                };
                let mid = 0.5 * (rho_lo + rho_hi);
                let half = 0.5 * (rho_hi - rho_lo);
                for (xg, wg) in gx.iter().zip(&gw) {
                    let rho = mid + half * xg;
                    let w = half * wg * dth * rho;
                    let p = at(rho);
                    let val = f(p) * w;
                    if val == 0.0 {
                        continue;
                    }
                    let (u, v) = (rho * ct, rho * st);
                    for k in 0..kk {
                        let cu = (k as f64 * u).cos();
                        for l in 0..kk {
                            c[k * kk + l] += val * cu * (l as f64 * v).cos();
                        }
                    }
                }
            }
            for k in 0..kk {
                for l in 0..kk {
                    let ek = if k == 0 { 1.0 } else { 2.0 };
                    let el = if l == 0 { 1.0 } else { 2.0 };
                    c[k * kk + l] *= ek * el / (4.0 * PI * PI);
                }
            }
            (node, c)
        })
        .collect();
    let mut out = ModalField::zeros(m, kmax, grid);
    for (node, c) in results {
        for (id, v) in c.into_iter().enumerate() {
            out.coeffs[id][node] = v;
        }
    }
    out
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::rld::grid::RadialGrid;

    fn test_grid(m: usize) -> Arc<RadialGrid> {
        Arc::new(RadialGrid::standard(m, 20))
    }

    #[test]
    fn projection_reconstructs_modal_function() {
        let m = 6usize;
        let grid = test_grid(m);
        let mf = SQRT2 * m as f64;
        let f = |p: ChartPoint| {
            (0.7 + p.z) * (mf * p.x).cos() + 0.3 * (2.0 * mf * p.y).cos() * p.z.cos()
                + 1.1 * p.z.sin()
        };
        let field = project_modal(&f, m, 4, grid, |_| true, AngularQuad::default());
        for &(x, y, z) in &[(0.05, 0.02, 0.3), (0.1, -0.07, -0.5), (0.0, 0.0, 0.1)] {
            let p = ChartPoint::new(x, y, z);
            let got = field.eval(p);
            let want = f(p);
            assert!((got - want).abs() < 1e-10, "{got} vs {want}");
        }
    }

    #[test]
    fn jet_matches_finite_differences() {
        let m = 5usize;
        let grid = test_grid(m);
        let mf = SQRT2 * m as f64;
        let f =
            |p: ChartPoint| (0.4 + p.z.sin()) * (mf * p.x).cos() * (mf * p.y).cos() + p.z * p.z;
        let field = project_modal(&f, m, 3, grid, |_| true, AngularQuad::default());
        let p = ChartPoint::new(0.043, -0.027, 0.21);
        let jet = field.eval_jet(p);
        let h = 1e-4;
        let ex = |dx: f64, dy: f64, dz: f64| field.eval(ChartPoint::new(p.x + dx, p.y + dy, p.z + dz));
        assert!((jet.v - f(p)).abs() < 1e-10);
        assert!((jet.dx - (ex(h, 0.0, 0.0) - ex(-h, 0.0, 0.0)) / (2.0 * h)).abs() < 1e-5);
        assert!((jet.dz - (ex(0.0, 0.0, h) - ex(0.0, 0.0, -h)) / (2.0 * h)).abs() < 1e-6);
        assert!(
            (jet.dxx - (ex(h, 0.0, 0.0) - 2.0 * jet.v + ex(-h, 0.0, 0.0)) / (h * h)).abs() < 1e-3
        );
        assert!(
            (jet.dxy
                - (ex(h, h, 0.0) - ex(h, -h, 0.0) - ex(-h, h, 0.0) + ex(-h, -h, 0.0))
                    / (4.0 * h * h))
                .abs()
                < 1e-3
        );
        // grid evaluation agrees with pointwise evaluation
        let (u, v) = field.angles(p);
        let jets = field.eval_grid_jet(&[p.z], &[u], &[v]);
        assert!((jets[0].v - jet.v).abs() < 1e-12);
        assert!((jets[0].dzz - jet.dzz).abs() < 1e-8);
        assert!((jets[0].dxy - jet.dxy).abs() < 1e-9);
    }
}
