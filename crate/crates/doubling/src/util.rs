//! Small shared numerics: finite-difference stencils, log–log regression,
//! an embedded Runge–Kutta step, and Richardson extrapolation.

/// Fourth-order central first derivative.
pub fn fd_first<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h)
}

/// Fourth-order central second derivative.
pub fn fd_second<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2.0 * h))
        / (12.0 * h * h)
}

/// Least-squares slope of log(y) against log(x).
///
/// Used for all decay-exponent fits; returns the fitted exponent p in
/// y ≈ C x^p. Nonpositive y entries are skipped.
pub fn fit_loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let pts: Vec<(f64, f64)> = xs
        .iter()
        .zip(ys)
        .filter(|(x, y)| **x > 0.0 && **y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    let n = pts.len() as f64;
    if pts.len() < 2 {
        return f64::NAN;
    }
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// Richardson extrapolation of F(h) = F(0) + c h^p + o(h^p) from two samples.
pub fn richardson(f_h: f64, f_2h: f64, p: f64) -> f64 {
    let q = 2f64.powf(p);
    (q * f_h - f_2h) / (q - 1.0)
}

/// One adaptive RK4/RK5 (Dormand–Prince style via step doubling) integration
/// of y' = f(t, y) from t0 to t1. Scalar state is all the crate needs.
pub fn rk_integrate<F: Fn(f64, f64) -> f64>(f: &F, t0: f64, y0: f64, t1: f64, tol: f64) -> f64 {
    let mut t = t0;
    let mut y = y0;
    let mut h = (t1 - t0) / 64.0;
    if h == 0.0 {
        return y0;
    }
    let dir = (t1 - t0).signum();
    h = h.abs().max(1e-12) * dir;
    let rk4 = |t: f64, y: f64, h: f64| -> f64 {
        let k1 = f(t, y);
        let k2 = f(t + 0.5 * h, y + 0.5 * h * k1);
        let k3 = f(t + 0.5 * h, y + 0.5 * h * k2);
        let k4 = f(t + h, y + h * k3);
        y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    };
    let mut guard = 0;
    while (t1 - t) * dir > 1e-15 {
        guard += 1;
        if guard > 2_000_000 {
            return f64::NAN;
        }
        if (t + h - t1) * dir > 0.0 {
            h = t1 - t;
        }
        let big = rk4(t, y, h);
        let half = rk4(t, y, 0.5 * h);
        let small = rk4(t + 0.5 * h, half, 0.5 * h);
        let err = (small - big).abs();
        let scale = tol * y.abs().max(1.0);
        if err <= scale || h.abs() < 1e-13 {
            y = small + (small - big) / 15.0;
            t += h;
            if err > 0.0 {
                h *= (scale / err).powf(0.2).clamp(0.3, 4.0);
            } else {
                h *= 2.0;
            }
        } else {
            h *= (scale / err).powf(0.25).max(0.1);
        }
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stencils() {
        let f = |x: f64| (2.0 * x).sin();
        let d1 = fd_first(f, 0.3, 1e-3);
        assert!((d1 - 2.0 * (0.6f64).cos()).abs() < 1e-10);
        let d2 = fd_second(f, 0.3, 1e-3);
        assert!((d2 + 4.0 * (0.6f64).sin()).abs() < 1e-8);
    }

    #[test]
    fn slope_fit_recovers_exponent() {
        let xs = [8.0, 16.0, 32.0, 64.0];
        let ys: Vec<f64> = xs.iter().map(|x| 3.5 * (*x as f64).powf(-2.0)).collect();
        assert!((fit_loglog_slope(&xs, &ys) + 2.0).abs() < 1e-12);
    }

    #[test]
    fn rk_exponential() {
        let y = rk_integrate(&|_, y| y, 0.0, 1.0, 1.0, 1e-12);
        assert!((y - std::f64::consts::E).abs() < 1e-9);
    }
}
