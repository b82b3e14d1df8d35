//! Quadrature kernels: Gauss–Legendre panels and tanh–sinh for endpoint
//! singularities. Weights are computed once per node count and cached by the
//! callers that need to reuse them.

use std::f64::consts::PI;

/// Gauss–Legendre nodes and weights on [-1, 1].
///
/// Newton iteration on the Legendre polynomial, good to machine precision
/// for n up to several thousand.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-based initial guess.
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_and_deriv(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_and_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Integrate `f` over [a, b] with an `n`-point Gauss–Legendre rule.
pub fn integrate_gl<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    let (xs, ws) = gauss_legendre(n);
    let c = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut sum = 0.0;
    for (x, w) in xs.iter().zip(&ws) {
        sum += w * f(mid + c * x);
    }
    sum * c
}

/// Integrate with a cached rule (nodes/weights on [-1,1]) over [a, b].
pub fn integrate_gl_cached<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rule: &(Vec<f64>, Vec<f64>)) -> f64 {
    let c = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut sum = 0.0;
    for (x, w) in rule.0.iter().zip(&rule.1) {
        sum += w * f(mid + c * x);
    }
    sum * c
}

/// Tanh–sinh (double exponential) quadrature on (a, b) for integrands given
/// as `f(x, da, db)` where `da = x - a` and `db = b - x` are computed without
/// cancellation. Endpoint singularities like `da^{-3/4}` stay accurate.
pub fn integrate_tanh_sinh_sing<F: Fn(f64, f64, f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    let c = 0.5 * (b - a);
    // node at parameter t: y = (pi/2) sinh t, s = tanh y;
    // distance to the near endpoint: c * (1 - |s|) = c * 2 / (exp(2|y|) + 1)
    let eval = |t: f64| -> f64 {
        let y = 0.5 * PI * t.sinh();
        let w = 0.5 * PI * t.cosh() / y.cosh().powi(2);
        if !w.is_finite() || w < 1e-300 {
            return 0.0;
        }
        let d_near = c * 2.0 / ((2.0 * y.abs()).exp() + 1.0);
        if d_near <= 0.0 {
            return 0.0;
        }
        let (x, da, db) = if t >= 0.0 {
            (b - d_near, 2.0 * c - d_near, d_near)
        } else {
            (a + d_near, d_near, 2.0 * c - d_near)
        };
        let v = f(x, da, db);
        if v.is_finite() {
            c * w * v
        } else {
            0.0
        }
    };
    let tmax = 6.5;
    let mut h = 1.0;
    let mut sum = eval(0.0);
    let mut k = 1.0;
    while k * h <= tmax {
        sum += eval(k * h) + eval(-k * h);
        k += 1.0;
    }
    let mut total = sum * h;
    let mut prev;
    for _ in 0..10 {
        prev = total;
        h *= 0.5;
        let mut t = h;
        let mut add = 0.0;
        while t <= tmax {
            add += eval(t) + eval(-t);
            t += 2.0 * h;
        }
        sum += add;
        total = sum * h;
        if (total - prev).abs() <= tol * total.abs().max(1.0) {
            break;
        }
    }
    total
}

/// Tanh–sinh quadrature for plain integrands `f(x)`.
pub fn integrate_tanh_sinh<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    integrate_tanh_sinh_sing(|x, _, _| f(x), a, b, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_integrates_polynomials_exactly() {
        // degree 2n-1 exact
        let v = integrate_gl(|x| x.powi(7) - 3.0 * x.powi(4) + x, -1.0, 2.0, 6);
        let exact = |x: f64| x.powi(8) / 8.0 - 3.0 * x.powi(5) / 5.0 + x * x / 2.0;
        assert!((v - (exact(2.0) - exact(-1.0))).abs() < 1e-12);
    }

    #[test]
    fn tanh_sinh_handles_inverse_sqrt_endpoint() {
        // ∫_0^1 1/sqrt(1-x) dx = 2
        let v = integrate_tanh_sinh_sing(|_, _, db| 1.0 / db.sqrt(), 0.0, 1.0, 1e-14);
        assert!((v - 2.0).abs() < 1e-12, "{v}");
    }

    #[test]
    fn tanh_sinh_smooth() {
        let v = integrate_tanh_sinh(|x| x.sin(), 0.0, PI, 1e-14);
        assert!((v - 2.0).abs() < 1e-13);
    }
}
