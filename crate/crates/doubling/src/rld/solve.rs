//! The symmetry-reduced linear solvers: per-mode collocation systems for the
//! slab, the solid torus, and the whole equatorial sphere, plus the kernel
//! triviality check.

use super::grid::RadialGrid;
use super::modal::{chart_frequency, ModalField};
use super::radial::{self, mode_potential};
use crate::error::{Error, Result};
use crate::geom;
use crate::quad;
use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::FRAC_PI_4;
use std::sync::Arc;

/// Rows imposed at an end of the radial interval.
#[derive(Debug, Clone, Copy)]
pub enum EndRows {
    Dirichlet(f64),
    /// u' = 0: the regularity row at a degenerate axis.
    NeumannZero,
    /// u = 0 and u' = 0 at this end (zero Cauchy data; the other end carries
    /// no row).
    Terminal,
    None,
}

impl EndRows {
    fn count(&self) -> usize {
        match self {
            EndRows::Dirichlet(_) | EndRows::NeumannZero => 1,
            EndRows::Terminal => 2,
            EndRows::None => 0,
        }
    }
}

/// Solve one per-mode radial BVP on a multi-domain grid.
///
/// Operator: u″ − 2tan(2z)u′ + (σ − V_{a,b}(z)) u = rhs.
pub fn solve_mode_bvp(
    grid: &RadialGrid,
    a_freq: f64,
    b_freq: f64,
    zero_order: f64,
    rhs: &[f64],
    left: EndRows,
    right: EndRows,
) -> Result<Vec<f64>> {
    let lu = factor_mode_bvp(grid, a_freq, b_freq, zero_order, left, right)?;
    solve_factored(grid, &lu, rhs, left, right)
}

pub struct ModeFactorization {
    lu: nalgebra::LU<f64, nalgebra::Dyn, nalgebra::Dyn>,
    row_scale: Vec<f64>,
}

/// Assemble and factor the collocation matrix for one mode.
pub fn factor_mode_bvp(
    grid: &RadialGrid,
    a_freq: f64,
    b_freq: f64,
    zero_order: f64,
    left: EndRows,
    right: EndRows,
) -> Result<ModeFactorization> {
    let n = grid.total_nodes();
    let offs = grid.offsets();
    let nd = grid.domains.len();
    if left.count() + right.count() != 2 {
        return Err(Error::Domain("mode BVP needs exactly two end rows".into()));
    }
    let mut a = DMatrix::<f64>::zeros(n, n);
    let mut row = 0usize;
    let push_operator_rows = |a: &mut DMatrix<f64>, row: &mut usize| {
        for (di, d) in grid.domains.iter().enumerate() {
            let o = offs[di];
            for i in 1..d.len() - 1 {
                let z = d.nodes[i];
                let t = -2.0 * (2.0 * z).tan();
                for j in 0..d.len() {
                    a[(*row, o + j)] = d.d2[(i, j)] + t * d.d1[(i, j)];
                }
                a[(*row, o + i)] += zero_order - mode_potential(a_freq, b_freq, z);
                *row += 1;
            }
        }
    };
    // end rows first (their right-hand sides are positional)
    let put_end = |a: &mut DMatrix<f64>, row: &mut usize, end: EndRows, at_left: bool| {
        let (di, node) = if at_left { (0, 0) } else { (nd - 1, grid.domains[nd - 1].len() - 1) };
        let o = offs[di];
        let d = &grid.domains[di];
        match end {
            EndRows::Dirichlet(_) => {
                a[(*row, o + node)] = 1.0;
                *row += 1;
            }
            EndRows::NeumannZero => {
                for j in 0..d.len() {
                    a[(*row, o + j)] = d.d1[(node, j)];
                }
                *row += 1;
            }
            EndRows::Terminal => {
                a[(*row, o + node)] = 1.0;
                *row += 1;
                for j in 0..d.len() {
                    a[(*row, o + j)] = d.d1[(node, j)];
                }
                *row += 1;
            }
            EndRows::None => {}
        }
    };
    put_end(&mut a, &mut row, left, true);
    put_end(&mut a, &mut row, right, false);
    push_operator_rows(&mut a, &mut row);
    // interface continuity of value and derivative
    for di in 0..nd - 1 {
        let dl = &grid.domains[di];
        let dr = &grid.domains[di + 1];
        let ol = offs[di];
        let or = offs[di + 1];
        let il = dl.len() - 1;
        a[(row, ol + il)] = 1.0;
        a[(row, or)] = -1.0;
        row += 1;
        for j in 0..dl.len() {
            a[(row, ol + j)] = dl.d1[(il, j)];
        }
        for j in 0..dr.len() {
            a[(row, or + j)] -= dr.d1[(0, j)];
        }
        row += 1;
    }
    debug_assert_eq!(row, n);
    // row equilibration for the huge near-axis potentials
    let mut row_scale = vec![1.0; n];
    for i in 0..n {
        let mx = (0..n).map(|j| a[(i, j)].abs()).fold(0.0f64, f64::max);
        if mx > 0.0 {
            row_scale[i] = 1.0 / mx;
            for j in 0..n {
                a[(i, j)] *= row_scale[i];
            }
        }
    }
    Ok(ModeFactorization { lu: a.lu(), row_scale })
}

/// Solve with a cached factorization.
pub fn solve_factored(
    grid: &RadialGrid,
    fac: &ModeFactorization,
    rhs: &[f64],
    left: EndRows,
    right: EndRows,
) -> Result<Vec<f64>> {
    let n = grid.total_nodes();
    let offs = grid.offsets();
    let mut b = DVector::<f64>::zeros(n);
    let mut row = 0usize;
    let put_end_rhs = |b: &mut DVector<f64>, row: &mut usize, end: EndRows| match end {
        EndRows::Dirichlet(v) => {
            b[*row] = v;
            *row += 1;
        }
        EndRows::NeumannZero => {
            *row += 1;
        }
        EndRows::Terminal => {
            *row += 2;
        }
        EndRows::None => {}
    };
    put_end_rhs(&mut b, &mut row, left);
    put_end_rhs(&mut b, &mut row, right);
    for (di, d) in grid.domains.iter().enumerate() {
        let o = offs[di];
        for i in 1..d.len() - 1 {
            b[row] = rhs[o + i];
            row += 1;
        }
    }
    // interface rows have zero rhs
    for i in 0..n {
        b[i] *= fac.row_scale[i];
    }
    let x = fac
        .lu
        .solve(&b)
        .ok_or_else(|| Error::NonConvergence("singular mode collocation matrix".into()))?;
    Ok(x.as_slice().to_vec())
}

/// End rows for the degenerate chart ends: a nonzero angular index vanishes
/// at its axis like r^{index}; index 0 takes the vanishing-flux row.
fn axis_rows(angular_index: usize) -> EndRows {
    if angular_index == 0 {
        EndRows::NeumannZero
    } else {
        EndRows::Dirichlet(0.0)
    }
}

/// Solve diagnostics shared by the three solvers.
#[derive(Debug, Clone, Serialize)]
pub struct SolveReport {
    pub interior_residual: f64,
    pub boundary_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_constant: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu_bar: Option<f64>,
    pub kmax: usize,
    pub grid_nodes: usize,
    pub gamma_prime: f64,
    pub delta_s: f64,
}

/// Grid for the slab Ω[2/m, 2/m + δ_s].
pub fn slab_grid(m: usize, delta_s: f64, n: usize) -> Arc<RadialGrid> {
    let z0 = 2.0 / m as f64;
    Arc::new(RadialGrid::from_breaks(&[z0, z0 + delta_s], n))
}

/// Slab solver (data in the scaled-metric convention: the equation solved is
/// L v = m² E for L the unscaled Jacobi operator).
///
/// Boundary rows: oscillatory modes take v = f_kl on the inner torus and
/// v = 0 on the outer; the average mode takes zero Cauchy data at the outer
/// torus and reports B = v_avg(inner).
pub fn slab_solve(
    m: usize,
    f_modes: &[f64],
    e: &ModalField,
    gamma_prime: f64,
    delta_s: f64,
) -> Result<(ModalField, f64, SolveReport)> {
    let grid = e.grid.clone();
    let kmax = e.kmax;
    let m2 = (m as f64).powi(2);
    let kk = kmax + 1;
    let sols: Vec<Result<Vec<f64>>> = (0..kk * kk)
        .into_par_iter()
        .map(|id| {
            let (k, l) = (id / kk, id % kk);
            let a = chart_frequency(m, k);
            let b = chart_frequency(m, l);
            let rhs: Vec<f64> = e.coeffs[id].iter().map(|v| v * m2).collect();
            if id == 0 {
                solve_mode_bvp(&grid, a, b, 3.0, &rhs, EndRows::None, EndRows::Terminal)
            } else {
                solve_mode_bvp(
                    &grid,
                    a,
                    b,
                    3.0,
                    &rhs,
                    EndRows::Dirichlet(f_modes[id]),
                    EndRows::Dirichlet(0.0),
                )
            }
        })
        .collect();
    let mut v = ModalField::zeros(m, kmax, grid.clone());
    for (id, s) in sols.into_iter().enumerate() {
        v.coeffs[id] = s?;
    }
    let b_constant = v.coeffs[0][0];
    // residuals in the scaled convention
    let mut e_scaled = e.clone();
    e_scaled.scale(m2);
    let interior = v.operator_residual(&e_scaled, 3.0) / m2;
    let n_last = grid.total_nodes() - 1;
    let mut boundary: f64 = 0.0;
    for id in 0..kk * kk {
        boundary = boundary.max(v.coeffs[id][n_last].abs());
        if id != 0 {
            boundary = boundary.max((v.coeffs[id][0] - f_modes[id]).abs());
        }
    }
    let report = SolveReport {
        interior_residual: interior,
        boundary_residual: boundary,
        b_constant: Some(b_constant),
        mu_bar: None,
        kmax,
        grid_nodes: grid.total_nodes(),
        gamma_prime,
        delta_s,
    };
    Ok((v, b_constant, report))
}

/// Grid for the solid torus component z ∈ [l/m, π/4].
pub fn solid_torus_grid(m: usize, l: usize, n: usize) -> Arc<RadialGrid> {
    let z0 = l as f64 / m as f64;
    let mid = 0.5 * (z0 + FRAC_PI_4);
    Arc::new(RadialGrid::from_breaks(&[z0, mid, FRAC_PI_4], n))
}

/// Solid-torus solver on the positive component around the axis circle at
/// z = π/4 (the negative component is its involution image).
///
/// Equation L v = E; oscillatory modes take v = f_kl at the inner torus and
/// the axis regularity row; the average mode takes value and flux zero at the
/// axis and reports B = v_avg(l/m).
pub fn solid_torus_solve(
    m: usize,
    l: usize,
    f_modes: &[f64],
    e: &ModalField,
    gamma_prime: f64,
) -> Result<(ModalField, f64, SolveReport)> {
    if l != 2 && l != 4 {
        return Err(Error::Domain(format!("solid torus expects l in {{2,4}}, got {l}")));
    }
    let grid = e.grid.clone();
    let kmax = e.kmax;
    let kk = kmax + 1;
    let sols: Vec<Result<Vec<f64>>> = (0..kk * kk)
        .into_par_iter()
        .map(|id| {
            let (k, li) = (id / kk, id % kk);
            let a = chart_frequency(m, k);
            let b = chart_frequency(m, li);
            let rhs = &e.coeffs[id];
            if id == 0 {
                solve_mode_bvp(&grid, a, b, 3.0, rhs, EndRows::None, EndRows::Terminal)
            } else {
                // the y-circle collapses at z = π/4; angular index there is m·l
                solve_mode_bvp(
                    &grid,
                    a,
                    b,
                    3.0,
                    rhs,
                    EndRows::Dirichlet(f_modes[id]),
                    axis_rows(li),
                )
            }
        })
        .collect();
    let mut v = ModalField::zeros(m, kmax, grid.clone());
    for (id, s) in sols.into_iter().enumerate() {
        v.coeffs[id] = s?;
    }
    let b_constant = v.coeffs[0][0];
    let interior = v.operator_residual(e, 3.0);
    let n_last = grid.total_nodes() - 1;
    let mut boundary: f64 = v.coeffs[0][n_last].abs();
    for id in 1..kk * kk {
        boundary = boundary.max((v.coeffs[id][0] - f_modes[id]).abs());
        if id % kk != 0 {
            boundary = boundary.max(v.coeffs[id][n_last].abs());
        }
    }
    let report = SolveReport {
        interior_residual: interior,
        boundary_residual: boundary,
        b_constant: Some(b_constant),
        mu_bar: None,
        kmax,
        grid_nodes: grid.total_nodes(),
        gamma_prime,
        delta_s: 0.0,
    };
    Ok((v, b_constant, report))
}

/// Global solve L v = E on the whole chart with regularity rows at both
/// degenerate ends; runs per mode in parallel. σ = 3 for the equatorial
/// sphere, 6 for the shrinker.
pub fn global_mode_solve(e: &ModalField, zero_order: f64) -> Result<ModalField> {
    let grid = e.grid.clone();
    let kk = e.kmax + 1;
    let m = e.m;
    let sols: Vec<Result<Vec<f64>>> = (0..kk * kk)
        .into_par_iter()
        .map(|id| {
            let (k, l) = (id / kk, id % kk);
            solve_mode_bvp(
                &grid,
                chart_frequency(m, k),
                chart_frequency(m, l),
                zero_order,
                &e.coeffs[id],
                axis_rows(k),
                axis_rows(l),
            )
        })
        .collect();
    let mut v = ModalField::zeros(m, e.kmax, grid);
    for (id, s) in sols.into_iter().enumerate() {
        v.coeffs[id] = s?;
    }
    Ok(v)
}

/// Global solver with the averaged-part diagnostics of the linear theory:
/// returns (v, μ̄, report) where v_avg = μ̄ φ_C on the torus at distance 4/m.
pub fn global_solve(e: &ModalField) -> Result<(ModalField, f64, SolveReport)> {
    let v = global_mode_solve(e, 3.0)?;
    let phic = radial::phi_c();
    let zstar = 0.5 * (4.0 / e.m as f64 + FRAC_PI_4);
    let mu_bar = v.avg_at(zstar) / phic.value(zstar)?;
    let interior = v.operator_residual(e, 3.0);
    let report = SolveReport {
        interior_residual: interior,
        boundary_residual: 0.0,
        b_constant: None,
        mu_bar: Some(mu_bar),
        kmax: e.kmax,
        grid_nodes: e.grid.total_nodes(),
        gamma_prime: 0.0,
        delta_s: 0.0,
    };
    Ok((v, mu_bar, report))
}

/// Variation-of-parameters formula for the averaged part of the global
/// solution (the independent oracle for `global_solve`): E_avg must be even
/// and supported in |z| ≤ z_supp.
pub fn global_avg_vop(e_avg: &dyn Fn(f64) -> f64, z_supp: f64, z: f64) -> f64 {
    let phi_c = radial::phi_c();
    let phi_cp = radial::phi_cperp();
    let f0 = crate::specfun::f0();
    // cos(2t)·W = −2F0 exactly
    let over_w = |t: f64| -(2.0 * t).cos() / (2.0 * f0);
    let ig_cp = |t: f64| phi_cp.value(t).unwrap() * e_avg(t) * over_w(t);
    let ig_c = |t: f64| phi_c.value(t).unwrap() * e_avg(t) * over_w(t);
    let n = 80;
    let int_0_to = |z1: f64, f: &dyn Fn(f64) -> f64| -> f64 {
        let zc = z1.clamp(-z_supp, z_supp);
        quad::integrate_gl(f, 0.0, zc, n)
    };
    let i1 = int_0_to(z, &ig_cp);
    let i2 = int_0_to(FRAC_PI_4, &ig_c);
    // ∫_{π/4}^{z} = −∫_{z}^{π/4}, nonzero only over the support
    let i3 = if z < z_supp {
        -quad::integrate_gl(&ig_c, z.max(-z_supp), z_supp, n)
    } else {
        0.0
    };
    -phi_c.value(z).unwrap() * (i1 + i2) + phi_cp.value(z).unwrap() * i3
}

/// Sup-norm of the symmetrized ambient coordinate functions: zero exactly
/// when the symmetric kernel of the Jacobi operator is trivial (m ≥ 2).
pub fn kernel_check(m: usize) -> f64 {
    let group = geom::symmetry_group(m.max(1), false);
    let size = group.len() as f64;
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        // the symmetrization of x_i is the linear function with coefficient
        // vector (1/|G|) Σ_g gᵀ e_i
        let mut vbar = [0.0f64; 5];
        for g in &group {
            for (j, vb) in vbar.iter_mut().enumerate() {
                *vb += g[i][j] / size;
            }
        }
        let norm = vbar.iter().map(|a| a * a).sum::<f64>().sqrt();
        worst = worst.max(norm);
    }
    worst
}

/// Symmetrization of x₁ + x₃ (nonzero in the excluded case m = 1).
pub fn kernel_check_sum_probe(m: usize) -> f64 {
    let group = geom::symmetry_group(m.max(1), false);
    let size = group.len() as f64;
    let mut vbar = [0.0f64; 5];
    for g in &group {
        for (j, vb) in vbar.iter_mut().enumerate() {
            *vb += (g[0][j] + g[2][j]) / size;
        }
    }
    vbar.iter().map(|a| a * a).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rld::modal::{project_modal, AngularQuad};
    use crate::specfun::f0;

    #[test]
    fn kernel_trivial_for_m_ge_2() {
        for m in [2usize, 3, 5] {
            let r = kernel_check(m);
            assert!(r <= 1e-10, "m = {m}: {r}");
        }
        // excluded case m = 1: x₁ + x₃ survives symmetrization
        assert!(kernel_check_sum_probe(1) > 0.5);
    }

    fn smooth_band_rhs(m: usize) -> impl Fn(crate::geom::ChartPoint) -> f64 {
        let zb = 3.0 / m as f64;
        move |p: crate::geom::ChartPoint| {
            let cut = (1.0 - (p.z / zb).powi(2)).max(0.0).powi(3);
            let mf = crate::geom::SQRT2 * m as f64;
            cut * (1.0 + 0.5 * (mf * p.x).cos() + 0.25 * (mf * p.x).cos() * (2.0 * mf * p.y).cos())
        }
    }

    #[test]
    fn global_solve_matches_vop_average() {
        let m = 8usize;
        let grid = Arc::new(RadialGrid::standard(m, 36));
        let zb = 3.0 / m as f64;
        let f = smooth_band_rhs(m);
        let e = project_modal(&f, m, 4, grid, |z| z.abs() <= zb + 1e-12, AngularQuad::default());
        let (v, mu_bar, report) = global_solve(&e).unwrap();
        assert!(report.interior_residual < 1e-8, "residual {}", report.interior_residual);
        // averaged part against the variation-of-parameters oracle
        let e_avg = |z: f64| {
            if z.abs() <= zb {
                (1.0 - (z / zb).powi(2)).max(0.0).powi(3)
            } else {
                0.0
            }
        };
        for &z in &[0.05, 0.21, -0.33, 0.6] {
            let got = v.avg_at(z);
            let want = global_avg_vop(&e_avg, zb, z);
            assert!(
                (got - want).abs() < 1e-8 * want.abs().max(1.0),
                "z = {z}: {got} vs {want}"
            );
        }
        // μ̄ defined by v_avg = μ̄ φ_C beyond the support
        let phic = radial::phi_c();
        for &z in &[0.5, 0.7] {
            let ratio = v.avg_at(z) / phic.value(z).unwrap();
            assert!((ratio - mu_bar).abs() < 1e-8 * mu_bar.abs().max(1e-6));
        }
        // E = 0 → v = 0, μ̄ = 0
        let zero = ModalField::zeros(m, 4, e.grid.clone());
        let (v0, mb0, _) = global_solve(&zero).unwrap();
        assert!(v0.coeffs.iter().flatten().all(|&x| x.abs() < 1e-14));
        assert!(mb0.abs() < 1e-14);
    }

    #[test]
    fn global_solve_linearity() {
        let m = 6usize;
        let grid = Arc::new(RadialGrid::standard(m, 24));
        let zb = 3.0 / m as f64;
        let f1 = smooth_band_rhs(m);
        let mf = crate::geom::SQRT2 * m as f64;
        let f2 = move |p: crate::geom::ChartPoint| {
            let cut = (1.0 - (p.z / zb).powi(2)).max(0.0).powi(4);
            cut * ((mf * p.y).cos() - 0.3)
        };
        let e1 = project_modal(&f1, m, 3, grid.clone(), |z| z.abs() <= zb, AngularQuad::default());
        let e2 = project_modal(&f2, m, 3, grid.clone(), |z| z.abs() <= zb, AngularQuad::default());
        let (v1, m1, _) = global_solve(&e1).unwrap();
        let (v2, m2, _) = global_solve(&e2).unwrap();
        let mut combo = e1.clone();
        combo.scale(1.75);
        combo.axpy(-0.6, &e2);
        let (vc, mc, _) = global_solve(&combo).unwrap();
        let scale: f64 = vc.coeffs.iter().flatten().map(|v| v.abs()).fold(0.0, f64::max);
        for id in 0..vc.coeffs.len() {
            for i in 0..vc.coeffs[id].len() {
                let want = 1.75 * v1.coeffs[id][i] - 0.6 * v2.coeffs[id][i];
                assert!(
                    (vc.coeffs[id][i] - want).abs() <= 1e-10 * scale.max(1.0),
                    "mode {id} node {i}"
                );
            }
        }
        assert!((mc - (1.75 * m1 - 0.6 * m2)).abs() < 1e-10 * mc.abs().max(1.0));
    }

    #[test]
    fn slab_solve_cases() {
        let m = 12usize;
        let delta_s = 0.05;
        let kmax = 3;
        let grid = slab_grid(m, delta_s, 32);
        let kk = kmax + 1;
        // (0,0) data → (0,0)
        let zero = ModalField::zeros(m, kmax, grid.clone());
        let fz = vec![0.0; kk * kk];
        let (v, b, rep) = slab_solve(m, &fz, &zero, 0.5, delta_s).unwrap();
        assert!(v.coeffs.iter().flatten().all(|&x| x.abs() < 1e-13));
        assert!(b.abs() < 1e-13 && rep.interior_residual < 1e-12);
        // constant boundary data → (0,0) by the averaging convention
        let mut fconst = vec![0.0; kk * kk];
        fconst[0] = 2.5; // pure average ignored by the solver
        let (v, b, _) = slab_solve(m, &fconst, &zero, 0.5, delta_s).unwrap();
        assert!(v.coeffs.iter().flatten().all(|&x| x.abs() < 1e-13));
        assert!(b.abs() < 1e-13);
        // random smooth E, f = 0: residuals small
        let z0 = 2.0 / m as f64;
        let fr = move |p: crate::geom::ChartPoint| {
            let t = (p.z - z0) / delta_s;
            let mf = crate::geom::SQRT2 * m as f64;
            (t * (1.0 - t)).max(0.0) * (1.0 + 0.4 * (mf * p.x).cos() - 0.2 * (mf * p.y).cos())
        };
        let e = project_modal(&fr, m, kmax, grid.clone(), |_| true, AngularQuad::default());
        let (v, _b, rep) = slab_solve(m, &fz, &e, 0.5, delta_s).unwrap();
        assert!(rep.interior_residual < 1e-8, "{}", rep.interior_residual);
        assert!(rep.boundary_residual < 1e-9, "{}", rep.boundary_residual);
        // v solves the scaled equation: avg mode Cauchy data at the outer end
        let n_last = grid.total_nodes() - 1;
        assert!(v.coeffs[0][n_last].abs() < 1e-12);
    }

    #[test]
    fn solid_torus_cases() {
        let m = 10usize;
        let kmax = 3;
        let kk = kmax + 1;
        for l in [2usize, 4] {
            let grid = solid_torus_grid(m, l, 36);
            let zero = ModalField::zeros(m, kmax, grid.clone());
            let fz = vec![0.0; kk * kk];
            let (v, b, _) = solid_torus_solve(m, l, &fz, &zero, 0.5).unwrap();
            assert!(v.coeffs.iter().flatten().all(|&x| x.abs() < 1e-13));
            assert!(b.abs() < 1e-13);
            // f = φ_C on the inner torus, E = 0: the average convention
            // removes it entirely; the oscillatory modes see nothing.
            let mut fc = vec![0.0; kk * kk];
            fc[0] = radial::phi_c().value(l as f64 / m as f64).unwrap();
            let (v, b, _) = solid_torus_solve(m, l, &fc, &zero, 0.5).unwrap();
            assert!(v.coeffs.iter().flatten().all(|&x| x.abs() < 1e-13));
            assert!(b.abs() < 1e-13);
            // random smooth E
            let z0 = l as f64 / m as f64;
            let fr = move |p: crate::geom::ChartPoint| {
                let t = ((p.z - z0) / (FRAC_PI_4 - z0)).clamp(0.0, 1.0);
                let mf = crate::geom::SQRT2 * m as f64;
                t * (1.0 - t).powi(2) * (1.0 + 0.3 * (mf * p.x).cos())
            };
            let e = project_modal(&fr, m, kmax, grid.clone(), |_| true, AngularQuad::default());
            let (v, _b, rep) = solid_torus_solve(m, l, &fz, &e, 0.5).unwrap();
            assert!(rep.interior_residual < 1e-8, "{}", rep.interior_residual);
            assert!(rep.boundary_residual < 1e-9);
            // uniqueness probe: the average mode solved by RK shooting from
            // the axis matches the collocation solution
            let e_avg: Vec<f64> = e.coeffs[0].clone();
            let g = grid.clone();
            let rhs = move |z: f64| g.interpolate(&e_avg, z);
            let shoot = |z_target: f64| -> f64 {
                let n = 40_000;
                let h = (z_target - FRAC_PI_4) / n as f64;
                let (mut u, mut du, mut z) = (0.0f64, 0.0f64, FRAC_PI_4);
                let f = |z: f64, u: f64, du: f64| -> (f64, f64) {
                    (du, rhs(z) + 2.0 * (2.0 * z).tan() * du - 3.0 * u)
                };
                for _ in 0..n {
                    let (k1, l1) = f(z, u, du);
                    let (k2, l2) = f(z + 0.5 * h, u + 0.5 * h * k1, du + 0.5 * h * l1);
                    let (k3, l3) = f(z + 0.5 * h, u + 0.5 * h * k2, du + 0.5 * h * l2);
                    let (k4, l4) = f(z + h, u + h * k3, du + h * l3);
                    u += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
                    du += h / 6.0 * (l1 + 2.0 * l2 + 2.0 * l3 + l4);
                    z += h;
                }
                u
            };
            for &zt in &[z0 + 0.1, 0.6] {
                let got = v.avg_at(zt);
                let want = shoot(zt);
                assert!((got - want).abs() < 1e-7 * want.abs().max(1.0), "{got} vs {want}");
            }
        }
    }

    #[test]
    fn collocation_convergence_under_refinement() {
        // refining the grid changes the solution at fitted order ≥ 3
        let m = 8usize;
        let zb = 3.0 / m as f64;
        let f = smooth_band_rhs(m);
        let mut sols = Vec::new();
        let ns = [10usize, 20, 40];
        for &n in &ns {
            let grid = Arc::new(RadialGrid::standard(m, n));
            let e = project_modal(&f, m, 2, grid, |z| z.abs() <= zb, AngularQuad::default());
            let (v, _, _) = global_solve(&e).unwrap();
            sols.push(v);
        }
        let probe = [0.11, -0.27, 0.05, 0.44];
        let diff = |a: &ModalField, b: &ModalField| -> f64 {
            probe
                .iter()
                .map(|&z| (a.avg_at(z) - b.avg_at(z)).abs())
                .fold(0.0f64, f64::max)
        };
        let d1 = diff(&sols[0], &sols[2]);
        let d2 = diff(&sols[1], &sols[2]);
        // error at n=10 should drop by ≥ 2³ when doubling to n=20
        assert!(d1 > 8.0 * d2 || d2 < 1e-12, "d1 = {d1}, d2 = {d2}");
        // flux-constant sanity: the scaled Wronskian equals −2F0
        assert!((radial::scaled_wronskian(0.3) + 2.0 * f0()).abs() < 1e-9);
    }
}
