//! Extrema of |p(z)| on circles |z| = r.
//!
//! Dense uniform sampling of |p|^2 (a trigonometric polynomial of degree n in
//! the angle, so N >= 64 n oversamples far beyond Nyquist) followed by
//! golden-section refinement of the best brackets. The square stays smooth at
//! zeros; the root is taken at the end.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::poly::Polynomial;
use crate::Result;

const MIN_SAMPLES: usize = 4096;
const SAMPLES_PER_DEGREE: usize = 64;
const REFINE_BRACKETS: usize = 8;
const BRACKET_WIDTH_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremumKind {
    Maximum,
    Minimum,
}

/// A computed extremum of |p| on the circle |z| = radius.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CircleExtremum {
    pub radius: f64,
    pub kind: ExtremumKind,
    pub value: f64,
    /// An attaining angle in [0, 2pi).
    pub angle: f64,
    /// Bracket width at refinement termination.
    pub residual: f64,
}

/// `M(p, r) = max_{|z|=r} |p(z)|`.
pub fn max_modulus(p: &Polynomial, r: f64) -> Result<CircleExtremum> {
    extremum(p, r, ExtremumKind::Maximum)
}

/// `min_{|z|=r} |p(z)|`; zero iff a root lies on the circle.
pub fn min_modulus(p: &Polynomial, r: f64) -> Result<CircleExtremum> {
    extremum(p, r, ExtremumKind::Minimum)
}

fn modulus_sq(p: &Polynomial, r: f64, theta: f64) -> f64 {
    p.evaluate(r * Complex64::new(theta.cos(), theta.sin())).norm_sqr()
}

fn extremum(p: &Polynomial, r: f64, kind: ExtremumKind) -> Result<CircleExtremum> {
    if !(r > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "circle radius must be > 0, got {r}"
        )));
    }
    let n = p.degree();
    let samples = MIN_SAMPLES.max(SAMPLES_PER_DEGREE * n);
    let step = TAU / samples as f64;
    let values: Vec<f64> = (0..samples).map(|k| modulus_sq(p, r, k as f64 * step)).collect();

    let better = |a: f64, b: f64| match kind {
        ExtremumKind::Maximum => a > b,
        ExtremumKind::Minimum => a < b,
    };

    // Local extrema of the sampled sequence (cyclic neighbors).
    let mut candidates: Vec<usize> = (0..samples)
        .filter(|&k| {
            let prev = values[(k + samples - 1) % samples];
            let next = values[(k + 1) % samples];
            !better(prev, values[k]) && !better(next, values[k])
        })
        .collect();
    candidates.sort_by(|&a, &b| {
        if better(values[a], values[b]) {
            std::cmp::Ordering::Less
        } else if better(values[b], values[a]) {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    });
    candidates.truncate(REFINE_BRACKETS);
    if candidates.is_empty() {
        // Constant |p| on the circle (single-term polynomials).
        candidates.push(0);
    }

    let mut best_value = f64::NEG_INFINITY;
    let mut best_theta = 0.0;
    let mut best_residual = 0.0;
    for k in candidates {
        let lo = (k as f64 - 1.0) * step;
        let hi = (k as f64 + 1.0) * step;
        let (theta, value, width) = golden_section(
            |t| {
                let v = modulus_sq(p, r, t);
                match kind {
                    ExtremumKind::Maximum => v,
                    ExtremumKind::Minimum => -v,
                }
            },
            lo,
            hi,
        );
        if value > best_value {
            best_value = value;
            best_theta = theta;
            best_residual = width;
        }
    }

    let value_sq = match kind {
        ExtremumKind::Maximum => best_value,
        ExtremumKind::Minimum => -best_value,
    };
    Ok(CircleExtremum {
        radius: r,
        kind,
        value: value_sq.max(0.0).sqrt(),
        angle: best_theta.rem_euclid(TAU),
        residual: best_residual,
    })
}

/// Golden-section maximization of `f` on `[a, b]`; returns (x, f(x), final width).
fn golden_section(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > BRACKET_WIDTH_TOL {
        if f1 > f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    let mid = 0.5 * (a + b);
    let fm = f(mid);
    if f1 >= f2 && f1 >= fm {
        (x1, f1, b - a)
    } else if f2 >= f1 && f2 >= fm {
        (x2, f2, b - a)
    } else {
        (mid, fm, b - a)
    }
}

/// Brute-force uniform sampling of |p| on the circle: a certified lower bound
/// for the maximum and upper bound for the minimum. Independent of the
/// refinement path above.
pub fn grid_oracle(p: &Polynomial, r: f64, kind: ExtremumKind, samples: usize) -> Result<f64> {
    if samples < 16 {
        return Err(Error::InvalidParameter(format!(
            "grid oracle needs at least 16 samples, got {samples}"
        )));
    }
    if !(r > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "circle radius must be > 0, got {r}"
        )));
    }
    let step = TAU / samples as f64;
    let it = (0..samples).map(|k| {
        p.evaluate(r * Complex64::new((k as f64 * step).cos(), (k as f64 * step).sin()))
            .norm()
    });
    Ok(match kind {
        ExtremumKind::Maximum => it.fold(f64::NEG_INFINITY, f64::max),
        ExtremumKind::Minimum => it.fold(f64::INFINITY, f64::min),
    })
}
