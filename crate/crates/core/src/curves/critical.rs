//! Critical points of the focal polynomial `p(z) = ∏ (z - Fᵢ)`.
//!
//! `|p|²` is the lemniscate's distance product, so its gradient vanishes
//! exactly at the roots of `p'` (and at the foci, which never lie on a curve
//! of positive radius).

use num_complex::Complex64;

use crate::geometry::Point;

const MAX_ITERATIONS: usize = 500;

pub(super) fn critical_points(foci: &[Point]) -> Vec<Point> {
    match foci.len() {
        0 | 1 => Vec::new(),
        2 => vec![foci[0].midpoint(foci[1])],
        _ => {
            let derivative = derivative(&focal_polynomial(foci));
            let mut roots: Vec<Point> = roots(&derivative)
                .into_iter()
                .map(|z| Point::new(z.re, z.im))
                .collect();
            roots.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
            roots
        }
    }
}

/// Coefficients, lowest degree first.
fn focal_polynomial(foci: &[Point]) -> Vec<Complex64> {
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for f in foci {
        let root = Complex64::new(f.x, f.y);
        let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * root;
        }
        coeffs = next;
    }
    coeffs
}

fn derivative(coeffs: &[Complex64]) -> Vec<Complex64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * k as f64)
        .collect()
}

fn eval(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

/// Durand–Kerner iteration followed by a Newton polish on each root.
fn roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let degree = coeffs.len() - 1;
    if degree == 0 {
        return Vec::new();
    }
    let lead = coeffs[degree];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    if degree == 1 {
        return vec![-monic[0]];
    }
    let bound = 1.0 + monic[..degree].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..degree).map(|k| seed.powu(k as u32) * bound).collect();
    for _ in 0..MAX_ITERATIONS {
        let mut max_step: f64 = 0.0;
        for i in 0..degree {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..degree {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            let step = eval(&monic, z[i]) / denom;
            z[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step <= 1e-15 * bound {
            break;
        }
    }
    let d = derivative(&monic);
    for root in z.iter_mut() {
        for _ in 0..3 {
            let dp = eval(&d, *root);
            if dp.norm() == 0.0 {
                break;
            }
            *root -= eval(&monic, *root) / dp;
        }
    }
    z
}
