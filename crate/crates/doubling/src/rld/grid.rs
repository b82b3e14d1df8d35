//! Multi-domain Chebyshev collocation in the radial coordinate z. The
//! default grid splits [−π/4, π/4] at {−z_b, 0, z_b} so the band sources near
//! the Clifford torus and the derivative jumps at z = 0 are resolved by
//! end-clustered nodes.

use nalgebra::DMatrix;
use std::f64::consts::FRAC_PI_4;

/// One Chebyshev–Lobatto subdomain with differentiation matrices.
#[derive(Debug, Clone)]
pub struct Domain {
    pub a: f64,
    pub b: f64,
    /// Ascending nodes, a = z_0 < … < z_N = b.
    pub nodes: Vec<f64>,
    pub d1: DMatrix<f64>,
    pub d2: DMatrix<f64>,
    bary: Vec<f64>,
}

impl Domain {
    pub fn new(a: f64, b: f64, n: usize) -> Self {
        assert!(n >= 4 && b > a);
        let nodes: Vec<f64> = (0..=n)
            .map(|j| 0.5 * (a + b) - 0.5 * (b - a) * (j as f64 * std::f64::consts::PI / n as f64).cos())
            .collect();
        // generic barycentric weights, normalized for stability
        let mut bary = vec![0.0; n + 1];
        for j in 0..=n {
            let mut w = 1.0f64;
            for i in 0..=n {
                if i != j {
                    w *= nodes[j] - nodes[i];
                }
            }
            bary[j] = 1.0 / w;
        }
        let maxw = bary.iter().cloned().fold(0.0f64, |m, v| m.max(v.abs()));
        for w in bary.iter_mut() {
            *w /= maxw;
        }
        let mut d1 = DMatrix::zeros(n + 1, n + 1);
        for i in 0..=n {
            let mut diag = 0.0;
            for j in 0..=n {
                if i != j {
                    let v = (bary[j] / bary[i]) / (nodes[i] - nodes[j]);
                    d1[(i, j)] = v;
                    diag -= v;
                }
            }
            d1[(i, i)] = diag;
        }
        let mut d2 = &d1 * &d1;
        // negative-sum trick: constants must differentiate to zero exactly
        for i in 0..=n {
            let mut diag = 0.0;
            for j in 0..=n {
                if i != j {
                    diag -= d2[(i, j)];
                }
            }
            d2[(i, i)] = diag;
        }
        Domain { a, b, nodes, d1, d2, bary }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, z: f64) -> bool {
        z >= self.a - 1e-14 && z <= self.b + 1e-14
    }

    /// Barycentric interpolation of nodal values at z.
    pub fn interpolate(&self, values: &[f64], z: f64) -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for (j, (&x, &w)) in self.nodes.iter().zip(&self.bary).enumerate() {
            let dz = z - x;
            if dz.abs() < 1e-14 {
                return values[j];
            }
            let c = w / dz;
            num += c * values[j];
            den += c;
        }
        num / den
    }

    /// Nodal derivative vector D1·v.
    pub fn derivative_values(&self, values: &[f64]) -> Vec<f64> {
        let n = self.len();
        let mut out = vec![0.0; n];
        for i in 0..n {
            let mut s = 0.0;
            for j in 0..n {
                s += self.d1[(i, j)] * values[j];
            }
            out[i] = s;
        }
        out
    }
}

/// A partition of an interval into Chebyshev subdomains.
#[derive(Debug, Clone)]
pub struct RadialGrid {
    pub domains: Vec<Domain>,
}

impl RadialGrid {
    /// Grid on custom breakpoints with n nodes per subdomain.
    pub fn from_breaks(breaks: &[f64], n: usize) -> Self {
        assert!(breaks.len() >= 2);
        let domains = breaks
            .windows(2)
            .map(|w| Domain::new(w[0], w[1], n))
            .collect();
        RadialGrid { domains }
    }

    /// The standard global grid for lattice parameter m: splits at ±3δ
    /// (δ = 1/(9m), resolving the annulus commutators around the lattice),
    /// at ±3/m (the band sources), and at 0 (the derivative jumps).
    pub fn standard(m: usize, n_per_domain: usize) -> Self {
        let zb = (3.0 / m as f64).min(0.9 * FRAC_PI_4);
        let za = 1.0 / (3.0 * m as f64);
        Self::from_breaks(
            &[-FRAC_PI_4, -zb, -za, 0.0, za, zb, FRAC_PI_4],
            n_per_domain,
        )
    }

    pub fn total_nodes(&self) -> usize {
        self.domains.iter().map(|d| d.len()).sum()
    }

    /// Flattened node list (with duplicated interface nodes).
    pub fn all_nodes(&self) -> Vec<f64> {
        self.domains.iter().flat_map(|d| d.nodes.iter().cloned()).collect()
    }

    /// Index of the subdomain containing z (ties resolved leftward).
    pub fn domain_of(&self, z: f64) -> usize {
        for (i, d) in self.domains.iter().enumerate() {
            if d.contains(z) {
                return i;
            }
        }
        if z < self.domains[0].a {
            0
        } else {
            self.domains.len() - 1
        }
    }

    /// Interpolate a concatenated nodal vector at z.
    pub fn interpolate(&self, values: &[f64], z: f64) -> f64 {
        let di = self.domain_of(z);
        let off: usize = self.domains[..di].iter().map(|d| d.len()).sum();
        self.domains[di].interpolate(&values[off..off + self.domains[di].len()], z)
    }

    /// Offsets of each subdomain in the concatenated vector.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = 0;
        let mut out = Vec::with_capacity(self.domains.len());
        for d in &self.domains {
            out.push(off);
            off += d.len();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn differentiation_is_spectral() {
        let d = Domain::new(-0.3, 0.9, 24);
        let vals: Vec<f64> = d.nodes.iter().map(|&z| (3.0 * z).sin()).collect();
        let der = d.derivative_values(&vals);
        for (i, &z) in d.nodes.iter().enumerate() {
            assert!((der[i] - 3.0 * (3.0 * z).cos()).abs() < 1e-10);
        }
        // second derivative through d2
        let n = d.len();
        for i in 0..n {
            let mut s = 0.0;
            for j in 0..n {
                s += d.d2[(i, j)] * vals[j];
            }
            assert!((s + 9.0 * (3.0 * d.nodes[i]).sin()).abs() < 1e-7);
        }
    }

    #[test]
    fn interpolation_matches_function() {
        let d = Domain::new(0.0, 1.0, 20);
        let vals: Vec<f64> = d.nodes.iter().map(|&z| (2.0 * z).exp()).collect();
        for &z in &[0.05, 0.33, 0.71, 0.99] {
            assert!((d.interpolate(&vals, z) - (2.0 * z).exp()).abs() < 1e-12);
        }
    }

    #[test]
    fn grid_lookup() {
        let g = RadialGrid::standard(8, 12);
        assert_eq!(g.domains.len(), 6);
        assert_eq!(g.domain_of(-0.7), 0);
        assert_eq!(g.domain_of(0.1), 4);
        let vals: Vec<f64> = g.all_nodes().iter().map(|&z| z * z).collect();
        assert!((g.interpolate(&vals, 0.4) - 0.16).abs() < 1e-12);
    }
}
