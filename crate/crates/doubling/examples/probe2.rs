use doubling::geom::{self, ChartPoint, Cutoff};
use doubling::quad;
use std::f64::consts::PI;

fn main() {
    let m = 8usize;
    let delta = 1.0 / (9.0 * m as f64);
    let lat = geom::lattice_points(m).unwrap();
    let w1 = Cutoff::new(2.0 * delta, delta);
    let green = |d: f64| -(2.0 * d).cos() / d.sin();
    let green_d1 = |d: f64| (2.0 * (2.0 * d).sin() * d.sin() + (2.0 * d).cos() * d.cos()) / d.sin().powi(2);
    let commut = |d: f64| -> f64 {
        let a = w1.d1(d); let b = w1.d2(d);
        if a == 0.0 && b == 0.0 { return 0.0; }
        green(d) * (b + 2.0 / d.tan() * a) + 2.0 * a * green_d1(d)
    };
    let e1 = |p: ChartPoint| -> f64 {
        let d = lat.dist(p);
        if d <= 1e-12 || d >= 2.0 * delta { 0.0 } else { -commut(d) }
    };
    // exact mass: ∫ E1 dV = 4π m² − 3 m² ∫ ψ G dV(ball)
    let psi_g_int = quad::integrate_gl(|r| w1.eval(r) * green(r) * r.sin().powi(2), 1e-12, 2.0*delta, 200);
    let exact_mass = 4.0 * PI * (m as f64).powi(2) - 3.0 * (m as f64).powi(2) * 4.0 * PI * psi_g_int;
    // projected mass via the cell tensor quadrature (same rule as project_modal)
    let mf = geom::SQRT2 * m as f64;
    let mass_tensor = |n_in: usize, n_out: usize, split: f64| -> f64 {
        // ∫ dz cos2z ∬ dx dy E1 * m² / cell → use z-GL and angular GL
        let mut total = 0.0;
        let (zx, zw) = quad::gauss_legendre(120);
        for (z0, w_z) in zx.iter().zip(&zw) {
            let z = 2.0 * delta * z0; // z in [-2δ, 2δ]
            let wz = 2.0 * delta * w_z;
            // angular average over quarter cell [0,π]² (even) then × cellarea×m²=2π²
            let mut xs = vec![]; let mut ws = vec![];
            for (a, b, n) in [(0.0, split, n_in), (split, PI, n_out)] {
                let (gx, gw) = quad::gauss_legendre(n);
                for (x, w) in gx.iter().zip(&gw) { xs.push(0.5*(a+b)+0.5*(b-a)*x); ws.push(0.5*(b-a)*w); }
            }
            let mut s = 0.0;
            for (u, wu) in xs.iter().zip(&ws) {
                for (v, wv) in xs.iter().zip(&ws) {
                    s += wu * wv * e1(ChartPoint::new(u / mf, v / mf, z));
                }
            }
            total += wz * (2.0*z).cos() * s / (PI * PI) * 2.0 * PI * PI;
        }
        total
    };
    println!("exact mass  = {:.8}", exact_mass);
    println!("tensor mass (72,40,0.8) = {:.8}", mass_tensor(72, 40, 0.8));
    println!("tensor mass (160,40,0.8) = {:.8}", mass_tensor(160, 40, 0.8));
    // polar mass for one annulus: m² × ∫∫ E1 over ball via polar in exact geodesic coords
    let polar = quad::integrate_gl(|r: f64| -commut(r) * 4.0 * PI * r.sin().powi(2), 1e-12, 2.0*delta, 300) * (m as f64).powi(2);
    println!("polar mass  = {:.8}", polar);
}

#[allow(dead_code)]
fn extra() {}
