//! Aberth–Ehrlich simultaneous root iteration and zero-free disk
//! certification. Every theorem hypothesis of the bound catalog reduces to
//! "no zeros in |z| < K", which this module checks from the computed roots.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::poly::Polynomial;
use crate::Result;

const MAX_ITERATIONS: usize = 200;
const CONVERGENCE_TOL: f64 = 1e-14;
const NEWTON_POLISH_STEPS: usize = 5;

/// Certification tolerance on root modulus. Boundary roots (|z| = K) satisfy
/// "no zeros in the open disk |z| < K".
pub const CERT_ABS_TOL: f64 = 1e-9;

/// Evidence that a polynomial has no zeros in the open disk |z| < K.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ZeroFreeCertificate {
    pub k: f64,
    pub min_root_modulus: f64,
    /// `min_root_modulus - k`; negative means a root inside the disk.
    pub margin: f64,
    pub holds: bool,
    pub roots: Vec<Complex64>,
}

/// All zeros of `p`, with multiplicity, in unspecified order.
///
/// Aberth–Ehrlich iteration from perturbed circular initial guesses, followed
/// by a few Newton polish steps per root. Clustered roots stand in for
/// multiple roots; no deflation.
pub fn find_roots(p: &Polynomial) -> Result<Vec<Complex64>> {
    let n = p.degree();
    if n == 0 {
        return Err(Error::InvalidPolynomial(
            "cannot find roots of a constant".into(),
        ));
    }
    let coeffs = p.coefficients();
    let deriv = p.derivative();

    // Initial guesses on a circle of radius (|a_0/a_n|)^{1/n}, distinct angles.
    let a0 = coeffs[0].norm();
    let an = coeffs[n].norm();
    let radius = if a0 > 0.0 {
        (a0 / an).powf(1.0 / n as f64).max(1e-3)
    } else {
        // a_0 = 0 puts a root at the origin; still spread the guesses out.
        0.5
    };
    let mut z: Vec<Complex64> = (0..n)
        .map(|i| {
            let theta = 2.0 * std::f64::consts::PI * (i as f64) / (n as f64) + 0.4;
            radius * Complex64::new(theta.cos(), theta.sin())
        })
        .collect();

    let mut converged = false;
    for _ in 0..MAX_ITERATIONS {
        let mut max_correction = 0.0f64;
        for i in 0..n {
            let zi = z[i];
            let pv = p.evaluate(zi);
            let dv = deriv.evaluate(zi);
            if pv == Complex64::new(0.0, 0.0) {
                continue;
            }
            let newton = if dv == Complex64::new(0.0, 0.0) {
                // Flat derivative: nudge off the stationary point.
                Complex64::new(1e-8, 1e-8)
            } else {
                pv / dv
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for (j, &zj) in z.iter().enumerate() {
                if j != i {
                    let diff = zi - zj;
                    if diff.norm() > 1e-300 {
                        repulsion += Complex64::new(1.0, 0.0) / diff;
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let correction = if denom.norm() > 1e-300 {
                newton / denom
            } else {
                newton
            };
            z[i] = zi - correction;
            let rel = correction.norm() / (1.0 + z[i].norm());
            max_correction = max_correction.max(rel);
        }
        if max_correction <= CONVERGENCE_TOL {
            converged = true;
            break;
        }
    }

    // Newton polish; multiple roots stay as clusters.
    for zi in z.iter_mut() {
        for _ in 0..NEWTON_POLISH_STEPS {
            let pv = p.evaluate(*zi);
            let dv = deriv.evaluate(*zi);
            if dv.norm() < 1e-300 || pv.norm() < 1e-300 {
                break;
            }
            let step = pv / dv;
            if step.norm() > 0.5 * (1.0 + zi.norm()) {
                break; // polish diverging, keep the Aberth iterate
            }
            let candidate = *zi - step;
            if p.evaluate(candidate).norm() <= pv.norm() {
                *zi = candidate;
            } else {
                break;
            }
        }
    }

    refine_multiple_roots(p, &mut z);

    let scale = p.coefficient_scale();
    let residual_ok = z.iter().all(|&zi| {
        let bound = 1e-8 * scale * zi.norm().max(1.0).powi(n as i32);
        p.evaluate(zi).norm() <= bound
    });
    if !converged && !residual_ok {
        return Err(Error::NumericFailure {
            message: format!(
                "root iteration did not converge within {MAX_ITERATIONS} iterations"
            ),
            best: z,
        });
    }
    Ok(z)
}

/// An m-fold root comes out of the simultaneous iteration as a ring of m
/// iterates with radius ~ eps^(1/m) around the true root, which is far too
/// coarse for disk certification. The true root is a simple root of the
/// (m-1)-th derivative, so each tight cluster is polished there and the
/// refined center replaces the whole cluster, but only after verifying that
/// p and its first m-1 derivatives actually vanish at the center (nearby
/// distinct roots fail that check and are left alone).
fn refine_multiple_roots(p: &Polynomial, z: &mut [Complex64]) {
    let n = z.len();
    if n < 2 {
        return;
    }
    // Derivative chain p, p', p'', ...
    let mut chain = vec![p.clone()];
    while chain.last().unwrap().degree() >= 1 {
        let d = chain.last().unwrap().derivative();
        chain.push(d);
    }
    let eval_scale = |q: &Polynomial, c: Complex64| -> f64 {
        let zmax = c.norm().max(1.0);
        let mut pow = 1.0;
        q.coefficients()
            .iter()
            .map(|a| {
                let s = a.norm() * pow;
                pow *= zmax;
                s
            })
            .sum()
    };

    let mut used = vec![false; n];
    for i in 0..n {
        if used[i] {
            continue;
        }
        let cluster: Vec<usize> = (0..n)
            .filter(|&j| !used[j] && (z[j] - z[i]).norm() <= 0.05 * (1.0 + z[i].norm()))
            .collect();
        let m = cluster.len();
        if m < 2 || m > p.degree() {
            used[i] = true;
            continue;
        }
        let centroid = cluster.iter().map(|&j| z[j]).sum::<Complex64>() / m as f64;
        // Newton on p^{(m-1)}, where the m-fold root is simple.
        let target = &chain[m - 1];
        let slope = &chain[m];
        let mut c = centroid;
        let mut converged = false;
        for _ in 0..60 {
            let fv = target.evaluate(c);
            let dv = slope.evaluate(c);
            if dv.norm() < 1e-300 {
                break;
            }
            let step = fv / dv;
            c -= step;
            if step.norm() <= 1e-15 * (1.0 + c.norm()) {
                converged = true;
                break;
            }
            if (c - centroid).norm() > 0.2 * (1.0 + centroid.norm()) {
                break; // left the cluster neighborhood
            }
        }
        let verified = converged
            && (0..m).all(|j| {
                chain[j].evaluate(c).norm() <= 1e-8 * eval_scale(&chain[j], c)
            });
        for &j in &cluster {
            if verified {
                z[j] = c;
            }
            used[j] = true;
        }
    }
}

/// Certify that `p` has no zeros in the open disk |z| < K.
pub fn certify_zero_free(p: &Polynomial, k: f64) -> Result<ZeroFreeCertificate> {
    if !(k > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "disk radius must be > 0, got {k}"
        )));
    }
    let roots = find_roots(p)?;
    let min_root_modulus = roots
        .iter()
        .map(|z| z.norm())
        .fold(f64::INFINITY, f64::min);
    let margin = min_root_modulus - k;
    Ok(ZeroFreeCertificate {
        k,
        min_root_modulus,
        margin,
        holds: margin >= -CERT_ABS_TOL,
        roots,
    })
}
