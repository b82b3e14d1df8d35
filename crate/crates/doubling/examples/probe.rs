use doubling::geom::{self, ChartPoint};
use doubling::ld::{self, ConstantChoices, LdConfig};

fn main() {
    let m = 8usize;
    let config = LdConfig { kmax: 24, n_nodes: 32, ..Default::default() };
    let sol = ld::build_phi(m, config, ConstantChoices::default()).unwrap();
    println!("identity residual: {:.3e}", sol.identity_residual);
    println!("rhat measured {:.8} tol {:.2e}", sol.rhat_measured, sol.rhat_tolerance);
    println!("rhat predicted {:.8}", sol.rhat_predicted);
    let p0 = ChartPoint::new(0.0, 0.0, 0.0);
    println!("phi_prime(p) = {:.6}", sol.phi_prime.eval(p0));
    println!("phi2(p) = {:.6}", sol.phi2.eval(p0));
    // mode-coefficient profile of phi_prime at z=0
    let kk = config.kmax + 1;
    for k in [0usize, 1, 2, 4, 8, 12, 16, 20, 24] {
        let c = sol.phi_prime.grid.interpolate(&sol.phi_prime.coeffs[k * kk + k], 0.0);
        let c0 = sol.phi_prime.grid.interpolate(&sol.phi_prime.coeffs[k * kk], 0.0);
        println!("  k={k:2}  c(k,k)={c:+.4e}  c(k,0)={c0:+.4e}");
    }
    // avg comparison
    let phi1 = doubling::rld::radial::phi1_constant(m);
    let hat = doubling::rld::radial::phi_hat();
    for z in [0.1, 0.3] {
        println!("avg({z}) = {:.8} vs {:.8}", sol.phi2.avg_at(z), phi1 * hat.value(z).unwrap());
    }
    // W commutator probe
    let ob = ld::ObstructionBasis::new(m, ConstantChoices::default()).unwrap();
    let delta = 1.0 / (9.0 * m as f64);
    let q = ChartPoint::new(1.45 * delta, 0.0, 0.12 * delta);
    for h in [1e-5, 1e-6, 3e-7] {
        let vq = ob.v(q);
        let vzz = (ob.v(ChartPoint::new(q.x, q.y, q.z + h)) - 2.0 * vq + ob.v(ChartPoint::new(q.x, q.y, q.z - h))) / (h * h);
        let vxx = (ob.v(ChartPoint::new(q.x + h, q.y, q.z)) - 2.0 * vq + ob.v(ChartPoint::new(q.x - h, q.y, q.z))) / (h * h);
        let vyy = (ob.v(ChartPoint::new(q.x, q.y + h, q.z)) - 2.0 * vq + ob.v(ChartPoint::new(q.x, q.y - h, q.z))) / (h * h);
        let vz = (ob.v(ChartPoint::new(q.x, q.y, q.z + h)) - ob.v(ChartPoint::new(q.x, q.y, q.z - h))) / (2.0 * h);
        let (a, b, _) = geom::metric_coeffs(q.z);
        let lap = vxx / a + vyy / b + vzz - 2.0 * (2.0 * q.z).tan() * vz;
        println!("h={h:.0e}: LV_fd = {:.4}", lap + 3.0 * vq);
    }
    println!("W = {:.4}", ob.w(q));
    let d = geom::lattice_points(m).unwrap().dist(q);
    println!("d = {:.6}, delta = {delta:.6}, d/delta = {:.4}", d, d / delta);
}
