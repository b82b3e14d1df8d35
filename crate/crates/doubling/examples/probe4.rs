use doubling::geom::{self, ChartPoint, Cutoff};
use doubling::quad;
use std::f64::consts::PI;

fn main() {
    for m in [8usize, 16] {
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
        let psi_g_int = quad::integrate_gl(|r| w1.eval(r) * green(r) * r.sin().powi(2), 1e-12, 2.0 * delta, 400);
        let exact = 4.0 * PI * (m as f64).powi(2) - 3.0 * (m as f64).powi(2) * 4.0 * PI * psi_g_int;
        let mf = geom::SQRT2 * m as f64;
        for (n_in, n_out, split) in [(72, 40, 0.8), (128, 40, 0.35), (192, 40, 0.35), (256, 48, 0.35), (384, 48, 0.35)] {
            let mut xs = vec![]; let mut ws = vec![];
            for (a, b, n) in [(0.0, split, n_in), (split, PI, n_out)] {
                let (gx, gw) = quad::gauss_legendre(n);
                for (x, w) in gx.iter().zip(&gw) { xs.push(0.5 * (a + b) + 0.5 * (b - a) * x); ws.push(0.5 * (b - a) * w); }
            }
            let (zx, zw) = quad::gauss_legendre(160);
            let mut total = 0.0;
            for (z0, w_z) in zx.iter().zip(&zw) {
                let z = 2.0 * delta * z0;
                let wz = 2.0 * delta * w_z;
                let mut s = 0.0;
                for (u, wu) in xs.iter().zip(&ws) {
                    for (v, wv) in xs.iter().zip(&ws) {
                        s += wu * wv * e1(ChartPoint::new(u / mf, v / mf, z));
                    }
                }
                total += wz * (2.0 * z).cos() * s * 2.0;
            }
            println!("m={m} n_in={n_in:3} split={split}: rel err = {:+.3e}", (total - exact) / exact);
        }
    }
}
