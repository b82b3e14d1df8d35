use doubling::geom::{self, ChartPoint, Cutoff};

fn main() {
    let m = 8usize;
    let delta = 1.0 / (9.0 * m as f64);
    let lat = geom::lattice_points(m).unwrap();
    let w1 = Cutoff::new(2.0 * delta, delta);
    let green = |d: f64| -(2.0 * d).cos() / d.sin();
    let green_d1 = |d: f64| (2.0 * (2.0 * d).sin() * d.sin() + (2.0 * d).cos() * d.cos()) / d.sin().powi(2);
    let seed = |p: ChartPoint| -> f64 {
        let d = lat.dist(p);
        if d >= 2.0 * delta { 0.0 } else { w1.eval(d) * green(d) }
    };
    let commut = |d: f64| -> f64 {
        let a = w1.d1(d);
        let b = w1.d2(d);
        green(d) * (b + 2.0 / d.tan() * a) + 2.0 * a * green_d1(d)
    };
    // pointwise FD Laplacian of the seed vs the commutator
    for &(x, y, z) in &[(1.4, 0.2, 0.3), (1.2, 0.8, -0.4), (0.2, 0.1, 1.45)] {
        let q = ChartPoint::new(x * delta, y * delta, z * delta);
        let d = lat.dist(q);
        let h = 1e-5;
        let sq = seed(q);
        let fdd = |f: &dyn Fn(ChartPoint) -> f64, dx: f64, dy: f64, dz: f64| {
            (f(ChartPoint::new(q.x + dx, q.y + dy, q.z + dz))
                - 2.0 * sq
                + f(ChartPoint::new(q.x - dx, q.y - dy, q.z - dz)))
        };
        let sxx = fdd(&seed, h, 0.0, 0.0) / (h * h);
        let syy = fdd(&seed, 0.0, h, 0.0) / (h * h);
        let szz = fdd(&seed, 0.0, 0.0, h) / (h * h);
        let sz = (seed(ChartPoint::new(q.x, q.y, q.z + h)) - seed(ChartPoint::new(q.x, q.y, q.z - h))) / (2.0 * h);
        let (a, b, _) = geom::metric_coeffs(q.z);
        let lap = sxx / a + syy / b + szz - 2.0 * (2.0 * q.z).tan() * sz;
        let lseed = lap + 3.0 * sq;
        println!("d/δ = {:.3}: L(seed)_fd = {:+.6e}   commut = {:+.6e}   ratio {:.6}", d / delta, lseed, commut(d), lseed / commut(d));
    }
}
