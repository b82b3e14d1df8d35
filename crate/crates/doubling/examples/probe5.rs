use doubling::geom::Cutoff;
use doubling::quad;

fn main() {
    let m = 8usize;
    let delta = 1.0 / (9.0 * m as f64);
    let w1 = Cutoff::new(2.0 * delta, delta);
    let green = |d: f64| -(2.0 * d).cos() / d.sin();
    let green_d1 = |d: f64| (2.0 * (2.0 * d).sin() * d.sin() + (2.0 * d).cos() * d.cos()) / d.sin().powi(2);
    let commut = |d: f64| -> f64 {
        let a = w1.d1(d); let b = w1.d2(d);
        green(d) * (b + 2.0 / d.tan() * a) + 2.0 * a * green_d1(d)
    };
    let r1 = 4.0 * delta / 3.0;
    let r2 = 5.0 * delta / 3.0;
    let f = |r: f64| commut(r) * r.sin().powi(2);
    let i_psig = quad::integrate_gl(|r| w1.eval(r) * green(r) * r.sin().powi(2), r1, r2, 200);
    let exact = -r1.sin().powi(2) * green_d1(r1) + 3.0 * i_psig;
    println!("exact shell integral = {exact:.12}");
    for n in [50usize, 100, 200, 400] {
        let gl = quad::integrate_gl(f, r1, r2, n);
        // uniform midpoint
        let h = (r2 - r1) / n as f64;
        let mid: f64 = (0..n).map(|i| f(r1 + (i as f64 + 0.5) * h) * h).sum();
        println!("n={n:4}  GL rel {:+.2e}   midpoint rel {:+.2e}", (gl - exact) / exact, (mid - exact) / exact);
    }
    let ts = quad::integrate_tanh_sinh(f, r1, r2, 1e-15);
    println!("tanh-sinh rel {:+.2e}", (ts - exact) / exact);
}
