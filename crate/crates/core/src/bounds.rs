//! Lower bounds for `M(p, r)`: the Varga, Rivlin and Govil two-radius
//! inequalities, their lacunary sharpenings, and the Qazi two-radius bounds.
//! Each bound checks its own hypotheses (zero-free disk, lacunary structure,
//! parameter ranges) and reports inapplicability with reasons instead of
//! raising errors.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::extrema::{max_modulus, min_modulus};
use crate::poly::{Polynomial, DEFAULT_LACUNARY_REL_TOL};
use crate::roots::{certify_zero_free, find_roots, CERT_ABS_TOL};
use crate::Result;

/// Which numerator the lacunary sharpening uses: the theorem statement's
/// `(1+r)^{n/mu}` or the `(1+r^mu)^{n/mu}` that its proof actually yields.
/// They coincide for mu = 1 and differ otherwise; the proof form is the
/// conservative default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Statement,
    Proof,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundId {
    Varga,
    Rivlin,
    GovilTwoRadius,
    Thm21Statement,
    Thm21Proof,
    Thm22,
    Thm23,
    Cor24,
    Cor25,
    Cor26,
    QaziSimple,
    QaziIntegral,
}

impl BoundId {
    pub const ALL: [BoundId; 12] = [
        BoundId::Varga,
        BoundId::Rivlin,
        BoundId::GovilTwoRadius,
        BoundId::Thm21Statement,
        BoundId::Thm21Proof,
        BoundId::Thm22,
        BoundId::Thm23,
        BoundId::Cor24,
        BoundId::Cor25,
        BoundId::Cor26,
        BoundId::QaziSimple,
        BoundId::QaziIntegral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::Varga => "varga",
            BoundId::Rivlin => "rivlin",
            BoundId::GovilTwoRadius => "govil_two_radius",
            BoundId::Thm21Statement => "thm21_statement",
            BoundId::Thm21Proof => "thm21_proof",
            BoundId::Thm22 => "thm22",
            BoundId::Thm23 => "thm23",
            BoundId::Cor24 => "cor24",
            BoundId::Cor25 => "cor25",
            BoundId::Cor26 => "cor26",
            BoundId::QaziSimple => "qazi_simple",
            BoundId::QaziIntegral => "qazi_integral",
        }
    }
}

/// Inputs a bound evaluation actually used, for reproducibility.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct BoundParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<f64>,
    #[serde(rename = "R", skip_serializing_if = "Option::is_none")]
    pub big_r: Option<f64>,
    #[serde(rename = "K", skip_serializing_if = "Option::is_none")]
    pub k: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<f64>,
    /// `m`: the minimum-modulus reference value.
    #[serde(rename = "m", skip_serializing_if = "Option::is_none")]
    pub min_ref: Option<f64>,
    /// The maximum-modulus reference value the bound multiplies.
    #[serde(rename = "M_ref", skip_serializing_if = "Option::is_none")]
    pub max_ref: Option<f64>,
    /// Value of the Qazi exponent integral, when one was computed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integral: Option<f64>,
}

/// One bound's value (a lower bound for `M(p, r)`) plus its applicability
/// verdict. `value` is absent whenever the hypotheses fail.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundResult {
    #[serde(rename = "id")]
    pub bound_id: BoundId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    pub applicable: bool,
    pub reasons: Vec<String>,
    pub params: BoundParams,
}

impl BoundResult {
    fn inapplicable(bound_id: BoundId, reasons: Vec<String>, params: BoundParams) -> Self {
        BoundResult {
            bound_id,
            value: None,
            applicable: false,
            reasons,
            params,
        }
    }

    fn applicable(bound_id: BoundId, value: f64, params: BoundParams) -> Self {
        BoundResult {
            bound_id,
            value: Some(value),
            applicable: true,
            reasons: Vec::new(),
            params,
        }
    }
}

/// Every bound evaluated at once, with the best applicable value and the gap
/// against the measured maximum.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundSummary {
    pub bounds: Vec<BoundResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub best: Option<BoundId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measured: Option<crate::extrema::CircleExtremum>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap: Option<f64>,
}

fn zero_free_reasons(p: &Polynomial, k: f64) -> Result<Vec<String>> {
    let cert = certify_zero_free(p, k)?;
    if cert.holds {
        Ok(Vec::new())
    } else if (k - 1.0).abs() < 1e-15 {
        Ok(vec![format!(
            "zero inside unit disk (min root modulus {:.6})",
            cert.min_root_modulus
        )])
    } else {
        Ok(vec![format!(
            "zero inside |z| < {k} (min root modulus {:.6})",
            cert.min_root_modulus
        )])
    }
}

/// `M(p, r) >= r^n M(p, 1)` for every polynomial, 0 < r <= 1.
pub fn varga_bound(p: &Polynomial, r: f64) -> Result<BoundResult> {
    let mut params = BoundParams {
        r: Some(r),
        ..Default::default()
    };
    if !(r > 0.0 && r <= 1.0) {
        return Ok(BoundResult::inapplicable(
            BoundId::Varga,
            vec![format!("requires 0 < r <= 1, got r = {r}")],
            params,
        ));
    }
    let norm = max_modulus(p, 1.0)?.value;
    params.max_ref = Some(norm);
    let value = r.powi(p.degree() as i32) * norm;
    Ok(BoundResult::applicable(BoundId::Varga, value, params))
}

/// `M(p, r) >= ((r+1)/2)^n M(p, 1)` for p zero-free in the unit disk.
pub fn rivlin_bound(p: &Polynomial, r: f64) -> Result<BoundResult> {
    let mut params = BoundParams {
        r: Some(r),
        ..Default::default()
    };
    let mut reasons = Vec::new();
    if !(r > 0.0 && r <= 1.0) {
        reasons.push(format!("requires 0 < r <= 1, got r = {r}"));
    }
    reasons.extend(zero_free_reasons(p, 1.0)?);
    if !reasons.is_empty() {
        return Ok(BoundResult::inapplicable(BoundId::Rivlin, reasons, params));
    }
    let norm = max_modulus(p, 1.0)?.value;
    params.max_ref = Some(norm);
    let value = ((r + 1.0) / 2.0).powi(p.degree() as i32) * norm;
    Ok(BoundResult::applicable(BoundId::Rivlin, value, params))
}

/// `M(p, r) >= ((1+r)/(1+rho))^n M(p, rho)` for p zero-free in the unit disk,
/// 0 < r <= rho <= 1.
pub fn govil_two_radius_bound(p: &Polynomial, r: f64, rho: f64) -> Result<BoundResult> {
    let mut params = BoundParams {
        r: Some(r),
        big_r: Some(rho),
        ..Default::default()
    };
    let mut reasons = Vec::new();
    if !(r > 0.0 && r <= rho && rho <= 1.0) {
        reasons.push(format!("requires 0 < r <= R <= 1, got r = {r}, R = {rho}"));
    }
    reasons.extend(zero_free_reasons(p, 1.0)?);
    if !reasons.is_empty() {
        return Ok(BoundResult::inapplicable(
            BoundId::GovilTwoRadius,
            reasons,
            params,
        ));
    }
    let m_rho = max_modulus(p, rho)?.value;
    params.max_ref = Some(m_rho);
    let value = ((1.0 + r) / (1.0 + rho)).powi(p.degree() as i32) * m_rho;
    Ok(BoundResult::applicable(BoundId::GovilTwoRadius, value, params))
}

/// Lacunary sharpening on the unit disk:
/// `M(p, r) >= N / ((1+r^mu)^{n/mu} + mu 2^{n/mu} - mu (1+r)^{n/mu})
///             * [M(p, 1) + n min_{|z|=1}|p| ln(2/(1+r))]`
/// with numerator `N = (1+r)^{n/mu}` (statement) or `(1+r^mu)^{n/mu}` (proof).
pub fn thm21_bound(p: &Polynomial, r: f64, variant: Variant) -> Result<BoundResult> {
    let id = match variant {
        Variant::Statement => BoundId::Thm21Statement,
        Variant::Proof => BoundId::Thm21Proof,
    };
    let mut params = BoundParams {
        r: Some(r),
        ..Default::default()
    };
    let mut reasons = Vec::new();
    if !(r > 0.0 && r < 1.0) {
        reasons.push(format!("requires 0 < r < 1, got r = {r}"));
    }
    match p.lacunary_profile(DEFAULT_LACUNARY_REL_TOL) {
        Ok(profile) => {
            params.mu = Some(profile.mu);
            params.ratio = Some(profile.ratio);
        }
        Err(e) => reasons.push(format!("lacunary form unavailable: {e}")),
    }
    reasons.extend(zero_free_reasons(p, 1.0)?);
    if !reasons.is_empty() {
        return Ok(BoundResult::inapplicable(id, reasons, params));
    }

    let n = p.degree() as f64;
    let mu = params.mu.unwrap() as f64;
    let exponent = n / mu;
    let norm = max_modulus(p, 1.0)?.value;
    let min1 = min_modulus(p, 1.0)?.value;
    params.max_ref = Some(norm);
    params.min_ref = Some(min1);

    let proof_term = (1.0 + r.powf(mu)).powf(exponent);
    let statement_term = (1.0 + r).powf(exponent);
    let numerator = match variant {
        Variant::Statement => statement_term,
        Variant::Proof => proof_term,
    };
    let denominator = proof_term + mu * 2.0f64.powf(exponent) - mu * statement_term;
    let bracket = norm + n * min1 * (2.0 / (1.0 + r)).ln();
    let value = numerator / denominator * bracket;
    Ok(BoundResult::applicable(id, value, params))
}

/// Lacunary sharpening on the disk |z| < K: the K = 1 case is `thm21_bound`
/// and the general case follows by applying it to `p(Kz)` at radius `r/K`,
/// which is exactly how the value is computed here.
pub fn thm22_bound(p: &Polynomial, r: f64, k: f64, variant: Variant) -> Result<BoundResult> {
    let mut params = BoundParams {
        r: Some(r),
        k: Some(k),
        ..Default::default()
    };
    if !(k > 0.0) {
        return Ok(BoundResult::inapplicable(
            BoundId::Thm22,
            vec![format!("requires K > 0, got K = {k}")],
            params,
        ));
    }
    if !(r > 0.0 && r < k) {
        return Ok(BoundResult::inapplicable(
            BoundId::Thm22,
            vec![format!("requires 0 < r < K, got r = {r}, K = {k}")],
            params,
        ));
    }
    let scaled = p.scale_argument(k)?;
    let inner = thm21_bound(&scaled, r / k, variant)?;
    params.mu = inner.params.mu;
    params.ratio = inner.params.ratio;
    params.min_ref = inner.params.min_ref;
    params.max_ref = inner.params.max_ref;
    if !inner.applicable {
        let reasons = inner
            .reasons
            .into_iter()
            .map(|s| s.replace("unit disk", &format!("|z| < {k}")))
            .collect();
        return Ok(BoundResult::inapplicable(BoundId::Thm22, reasons, params));
    }
    Ok(BoundResult {
        bound_id: BoundId::Thm22,
        value: inner.value,
        applicable: true,
        reasons: Vec::new(),
        params,
    })
}

/// Two-radius sharpening with zero-free disk |z| < K, K >= 1:
/// `M(p, r) >= (1+r)^n / ((1+r)^n + (R+K)^n - (r+K)^n)
///             * [M(p, R) + n m ln((R+K)/(r+K))]`, `m = min_{|z|=K}|p|`.
pub fn thm23_bound(p: &Polynomial, r: f64, big_r: f64, k: f64) -> Result<BoundResult> {
    let mut params = BoundParams {
        r: Some(r),
        big_r: Some(big_r),
        k: Some(k),
        ..Default::default()
    };
    let mut reasons = Vec::new();
    if !(k >= 1.0) {
        reasons.push(format!("requires K >= 1, got K = {k}"));
    }
    if !(r > 0.0 && r < big_r && big_r <= 1.0) {
        reasons.push(format!(
            "requires 0 < r < R <= 1, got r = {r}, R = {big_r}"
        ));
    }
    if reasons.is_empty() {
        reasons.extend(zero_free_reasons(p, k)?);
    }
    if !reasons.is_empty() {
        return Ok(BoundResult::inapplicable(BoundId::Thm23, reasons, params));
    }

    let n = p.degree() as i32;
    let m_big_r = max_modulus(p, big_r)?.value;
    let m_k = min_modulus(p, k)?.value;
    params.max_ref = Some(m_big_r);
    params.min_ref = Some(m_k);
    let front = (1.0 + r).powi(n)
        / ((1.0 + r).powi(n) + (big_r + k).powi(n) - (r + k).powi(n));
    let bracket = m_big_r + n as f64 * m_k * ((big_r + k) / (r + k)).ln();
    Ok(BoundResult::applicable(BoundId::Thm23, front * bracket, params))
}

/// K = 1 case of `thm23_bound`:
/// `M(p, r) >= ((1+r)/(1+R))^n [M(p, R) + n m ln((1+R)/(1+r))]`.
pub fn cor24_bound(p: &Polynomial, r: f64, big_r: f64) -> Result<BoundResult> {
    let inner = thm23_bound(p, r, big_r, 1.0)?;
    Ok(BoundResult {
        bound_id: BoundId::Cor24,
        params: BoundParams {
            k: None,
            ..inner.params
        },
        ..inner
    })
}

/// R = 1 case of `thm23_bound`:
/// `M(p, r) >= (1+r)^n / ((1+r)^n + (1+K)^n - (r+K)^n)
///             * [M(p, 1) + n min_{|z|=K}|p| ln((1+K)/(r+K))]`.
pub fn cor25_bound(p: &Polynomial, r: f64, k: f64) -> Result<BoundResult> {
    let mut params = BoundParams {
        r: Some(r),
        k: Some(k),
        ..Default::default()
    };
    let mut reasons = Vec::new();
    if !(k >= 1.0) {
        reasons.push(format!("requires K >= 1, got K = {k}"));
    }
    if !(r > 0.0 && r < 1.0) {
        reasons.push(format!("requires 0 < r < 1, got r = {r}"));
    }
    if reasons.is_empty() {
        reasons.extend(zero_free_reasons(p, k)?);
    }
    if !reasons.is_empty() {
        return Ok(BoundResult::inapplicable(BoundId::Cor25, reasons, params));
    }
    let n = p.degree() as i32;
    let norm = max_modulus(p, 1.0)?.value;
    let m_k = min_modulus(p, k)?.value;
    params.max_ref = Some(norm);
    params.min_ref = Some(m_k);
    let front =
        (1.0 + r).powi(n) / ((1.0 + r).powi(n) + (1.0 + k).powi(n) - (r + k).powi(n));
    let bracket = norm + n as f64 * m_k * ((1.0 + k) / (r + k)).ln();
    Ok(BoundResult::applicable(BoundId::Cor25, front * bracket, params))
}

/// K = R = 1 case, the sharpened Rivlin inequality:
/// `M(p, r) >= ((1+r)/2)^n [M(p, 1) + n min_{|z|=1}|p| ln(2/(1+r))]`.
pub fn cor26_bound(p: &Polynomial, r: f64) -> Result<BoundResult> {
    let inner = cor25_bound(p, r, 1.0)?;
    Ok(BoundResult {
        bound_id: BoundId::Cor26,
        params: BoundParams {
            k: None,
            ..inner.params
        },
        ..inner
    })
}

fn qazi_common(
    id: BoundId,
    p: &Polynomial,
    r: f64,
    big_r: f64,
) -> Result<std::result::Result<(BoundParams, f64), BoundResult>> {
    let mut params = BoundParams {
        r: Some(r),
        big_r: Some(big_r),
        ..Default::default()
    };
    let mut reasons = Vec::new();
    if !(r > 0.0 && r <= big_r && big_r <= 1.0) {
        reasons.push(format!(
            "requires 0 < r <= R <= 1, got r = {r}, R = {big_r}"
        ));
    }
    match p.lacunary_profile(DEFAULT_LACUNARY_REL_TOL) {
        Ok(profile) => {
            params.mu = Some(profile.mu);
            params.ratio = Some(profile.ratio);
        }
        Err(e) => reasons.push(format!("lacunary form unavailable: {e}")),
    }
    reasons.extend(zero_free_reasons(p, 1.0)?);
    if !reasons.is_empty() {
        return Ok(Err(BoundResult::inapplicable(id, reasons, params)));
    }
    let m_big_r = max_modulus(p, big_r)?.value;
    params.max_ref = Some(m_big_r);
    Ok(Ok((params, m_big_r)))
}

/// `M(p, r) >= ((1+r^mu)/(1+R^mu))^{n/mu} M(p, R)` for lacunary p zero-free
/// in the unit disk.
pub fn qazi_simple_bound(p: &Polynomial, r: f64, big_r: f64) -> Result<BoundResult> {
    let (params, m_big_r) = match qazi_common(BoundId::QaziSimple, p, r, big_r)? {
        Ok(x) => x,
        Err(res) => return Ok(res),
    };
    let n = p.degree() as f64;
    let mu = params.mu.unwrap() as f64;
    let factor = ((1.0 + r.powf(mu)) / (1.0 + big_r.powf(mu))).powf(n / mu);
    Ok(BoundResult::applicable(
        BoundId::QaziSimple,
        factor * m_big_r,
        params,
    ))
}

/// The integrand of the Qazi exponent integral.
fn qazi_integrand(n: f64, mu: f64, ratio: f64) -> impl Fn(f64) -> f64 {
    let c = mu / n * ratio;
    move |t: f64| {
        let tm = t.powf(mu);
        (tm + c * t.powf(mu - 1.0)) / (t * tm + c * (tm + t) + 1.0)
    }
}

/// The integral refinement of `qazi_simple_bound`:
/// `M(p, r) >= exp(-n Int_r^R (t^mu + (mu/n)|a_mu/a_0| t^{mu-1})
///                 / (t^{mu+1} + (mu/n)|a_mu/a_0|(t^mu + t) + 1) dt) M(p, R)`.
pub fn qazi_integral_bound(p: &Polynomial, r: f64, big_r: f64) -> Result<BoundResult> {
    let (mut params, m_big_r) = match qazi_common(BoundId::QaziIntegral, p, r, big_r)? {
        Ok(x) => x,
        Err(res) => return Ok(res),
    };
    let n = p.degree() as f64;
    let mu = params.mu.unwrap() as f64;
    let ratio = params.ratio.unwrap();
    let integral = adaptive_simpson(&qazi_integrand(n, mu, ratio), r, big_r, 1e-12, 40)?;
    params.integral = Some(integral);
    Ok(BoundResult::applicable(
        BoundId::QaziIntegral,
        (-n * integral).exp() * m_big_r,
        params,
    ))
}

/// `max_{|z|=1} |p'(z)| <= n/(1+K) [M(p, 1) - min_{|z|=K}|p|]` for p
/// zero-free in |z| < K, K >= 1. Returns the right-hand side.
pub fn derivative_upper_bound(p: &Polynomial, k: f64) -> Result<f64> {
    if !(k >= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "requires K >= 1, got K = {k}"
        )));
    }
    let cert = certify_zero_free(p, k)?;
    if !cert.holds {
        return Err(Error::InvalidParameter(format!(
            "polynomial has a zero in |z| < {k} (min root modulus {:.6})",
            cert.min_root_modulus
        )));
    }
    let n = p.degree() as f64;
    let norm = max_modulus(p, 1.0)?.value;
    let m_k = min_modulus(p, k)?.value;
    Ok(n / (1.0 + k) * (norm - m_k))
}

/// Evaluate the whole catalog (proof variant for the lacunary sharpenings,
/// plus the statement variant reported alongside), pick the best applicable
/// value and compare it against the measured maximum.
///
/// `big_r` defaults to 1 and `k` to the largest disk certified zero-free by
/// the computed roots.
pub fn best_lower_bound(
    p: &Polynomial,
    r: f64,
    big_r: Option<f64>,
    k: Option<f64>,
) -> Result<BoundSummary> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "requires 0 < r < 1, got r = {r}"
        )));
    }
    let roots = find_roots(p)?;
    let min_root_modulus = roots.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
    let big_r = big_r.unwrap_or(1.0);
    // Snap the derived K to the boundary when a root sits on |z| = K.
    let k = k.unwrap_or_else(|| min_root_modulus.max(CERT_ABS_TOL));

    let bounds = vec![
        varga_bound(p, r)?,
        rivlin_bound(p, r)?,
        govil_two_radius_bound(p, r, big_r)?,
        thm21_bound(p, r, Variant::Statement)?,
        thm21_bound(p, r, Variant::Proof)?,
        thm22_bound(p, r, k, Variant::Proof)?,
        thm23_bound(p, r, big_r, k)?,
        cor24_bound(p, r, big_r)?,
        cor25_bound(p, r, k)?,
        cor26_bound(p, r)?,
        qazi_simple_bound(p, r, big_r)?,
        qazi_integral_bound(p, r, big_r)?,
    ];

    // The statement variant of Theorem 2.1/2.2 is reported but never elected
    // best: it is the unproved form.
    let best = bounds
        .iter()
        .filter(|b| b.applicable && b.bound_id != BoundId::Thm21Statement)
        .max_by(|a, b| a.value.unwrap().partial_cmp(&b.value.unwrap()).unwrap())
        .map(|b| b.bound_id);

    let measured = max_modulus(p, r)?;
    let gap = best.map(|id| {
        let best_value = bounds
            .iter()
            .find(|b| b.bound_id == id)
            .and_then(|b| b.value)
            .unwrap();
        measured.value - best_value
    });
    Ok(BoundSummary {
        bounds,
        best,
        measured: Some(measured),
        gap,
    })
}

/// Adaptive Simpson quadrature with interval bisection.
pub fn adaptive_simpson(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    max_depth: u32,
) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
        h / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> Result<f64> {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fa, flm, fm, m - a);
        let right = simpson(fm, frm, fb, b - m);
        let delta = left + right - whole;
        if delta.abs() <= 15.0 * tol {
            return Ok(left + right + delta / 15.0);
        }
        if depth == 0 {
            return Err(Error::numeric(format!(
                "adaptive Simpson did not converge on [{a}, {b}]"
            )));
        }
        Ok(recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)?
            + recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)?)
    }
    let fa = f(a);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson(fa, fm, fb, b - a);
    recurse(f, a, b, fa, fm, fb, whole, tol, max_depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extrema::{grid_oracle, ExtremumKind};
    use num_complex::Complex64;

    fn z3_plus_64() -> Polynomial {
        Polynomial::from_reals(&[64.0, 0.0, 0.0, 1.0]).unwrap()
    }

    fn binomial_power(n: usize) -> Polynomial {
        let mut coeffs = vec![1.0f64];
        for k in 1..=n {
            let prev = *coeffs.last().unwrap();
            coeffs.push(prev * (n - k + 1) as f64 / k as f64);
        }
        Polynomial::from_reals(&coeffs).unwrap()
    }

    fn monomial(alpha: Complex64, n: usize) -> Polynomial {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
        coeffs.push(alpha);
        Polynomial::new(coeffs).unwrap()
    }

    #[test]
    fn varga_examples() {
        let p = monomial(Complex64::new(0.0, 1.5), 4);
        for r in [0.2, 0.7, 1.0] {
            let b = varga_bound(&p, r).unwrap();
            let measured = max_modulus(&p, r).unwrap().value;
            assert!((b.value.unwrap() - measured).abs() < 1e-12 * measured.max(1.0));
        }
        let b = varga_bound(&z3_plus_64(), 0.1).unwrap();
        assert!((b.value.unwrap() - 0.065).abs() < 1e-10);
        let b = varga_bound(&z3_plus_64(), 1.0).unwrap();
        assert!((b.value.unwrap() - 65.0).abs() < 1e-8);
        assert!(!varga_bound(&z3_plus_64(), 1.5).unwrap().applicable);
    }

    #[test]
    fn rivlin_examples() {
        // factor from the two-radius comparison at R = 1
        let b = rivlin_bound(&z3_plus_64(), 0.1).unwrap();
        let want_factor = 0.166375;
        assert!((b.value.unwrap() / b.params.max_ref.unwrap() - want_factor).abs() < 1e-12);
        // (1+z)^n equality family
        for n in [2usize, 4] {
            let p = binomial_power(n);
            let b = rivlin_bound(&p, 0.5).unwrap();
            let measured = max_modulus(&p, 0.5).unwrap().value;
            assert!((b.value.unwrap() - measured).abs() < 1e-10 * measured);
        }
        // zero inside the unit disk makes it inapplicable
        let q = Polynomial::from_reals(&[0.25, 0.0, 1.0]).unwrap();
        let b = rivlin_bound(&q, 0.5).unwrap();
        assert!(!b.applicable);
        assert!(b.value.is_none());
        assert!(b.reasons[0].contains("zero inside unit disk"));
    }

    #[test]
    fn govil_paper_factor() {
        let b = govil_two_radius_bound(&z3_plus_64(), 0.1, 0.5).unwrap();
        let factor = b.value.unwrap() / b.params.max_ref.unwrap();
        assert!((factor - 0.3943704).abs() < 5e-8);
        // r = rho is the identity
        let b = govil_two_radius_bound(&z3_plus_64(), 0.5, 0.5).unwrap();
        let m = max_modulus(&z3_plus_64(), 0.5).unwrap().value;
        assert!((b.value.unwrap() - m).abs() < 1e-10 * m);
        // equality family (1+z)^n / (1+rho)^n has the same factor behavior
        let p = binomial_power(3);
        let b = govil_two_radius_bound(&p, 0.2, 0.8).unwrap();
        let measured = max_modulus(&p, 0.2).unwrap().value;
        assert!((b.value.unwrap() - measured).abs() < 1e-10 * measured);
    }

    #[test]
    fn thm21_variants() {
        // mu = 1: both variants coincide and attain equality on (1+z)^n
        for n in [2usize, 5] {
            let p = binomial_power(n);
            let s = thm21_bound(&p, 0.4, Variant::Statement).unwrap();
            let pr = thm21_bound(&p, 0.4, Variant::Proof).unwrap();
            let measured = max_modulus(&p, 0.4).unwrap().value;
            assert!((s.value.unwrap() - pr.value.unwrap()).abs() < 1e-12 * measured);
            assert!((pr.value.unwrap() - measured).abs() < 1e-10 * measured);
        }
        // z^3 + 64 (mu = 3): proof variant stays below the measured maximum
        let p = z3_plus_64();
        let pr = thm21_bound(&p, 0.5, Variant::Proof).unwrap();
        let measured = max_modulus(&p, 0.5).unwrap().value;
        assert!(pr.applicable);
        assert!(pr.value.unwrap() <= measured * (1.0 + 1e-9));
        // the statement variant is evaluated but not trusted
        let st = thm21_bound(&p, 0.5, Variant::Statement).unwrap();
        assert!(st.applicable);
        assert!(st.value.unwrap() >= pr.value.unwrap());
    }

    #[test]
    fn thm22_reduces_to_thm21_at_k1() {
        let p = z3_plus_64();
        for r in [0.1, 0.5, 0.9] {
            let a = thm22_bound(&p, r, 1.0, Variant::Proof).unwrap();
            let b = thm21_bound(&p, r, Variant::Proof).unwrap();
            let x = a.value.unwrap();
            let y = b.value.unwrap();
            assert!((x - y).abs() <= 1e-12 * y.abs().max(1.0));
        }
        // K = 2, r = 1: value stays below M(p, 1) = 65
        let b = thm22_bound(&p, 1.0, 2.0, Variant::Proof).unwrap();
        assert!(b.applicable);
        assert!((b.params.max_ref.unwrap() - 72.0).abs() < 1e-6);
        assert!((b.params.min_ref.unwrap() - 56.0).abs() < 1e-6);
        assert!(b.value.unwrap() <= 65.0 * (1.0 + 1e-9));
    }

    #[test]
    fn thm23_and_corollaries_paper_numbers() {
        let p = z3_plus_64();
        let t = thm23_bound(&p, 0.1, 0.5, 1.0).unwrap();
        let c = cor24_bound(&p, 0.1, 0.5).unwrap();
        assert!((t.value.unwrap() - c.value.unwrap()).abs() < 1e-12 * t.value.unwrap());
        // value = 0.3943704 M(p, 0.5) + 23.117715
        let factor = 0.39437037037037;
        let m_r = t.params.max_ref.unwrap();
        let additive = t.value.unwrap() - factor * m_r;
        assert!((additive - 23.117715).abs() < 1e-4);

        let c26 = cor26_bound(&p, 0.1).unwrap();
        let riv = rivlin_bound(&p, 0.1).unwrap();
        let additive = c26.value.unwrap() - riv.value.unwrap();
        assert!((additive - 18.79891).abs() < 1e-4);

        // cor25 at K = 1 equals cor26
        let c25 = cor25_bound(&p, 0.1, 1.0).unwrap();
        assert!((c25.value.unwrap() - c26.value.unwrap()).abs() < 1e-12 * c26.value.unwrap());

        // cor25 at K = 2 stays below the measured maximum
        let c25 = cor25_bound(&p, 0.1, 2.0).unwrap();
        assert!((c25.params.min_ref.unwrap() - 56.0).abs() < 1e-6);
        let measured = max_modulus(&p, 0.1).unwrap().value;
        assert!(c25.value.unwrap() <= measured * (1.0 + 1e-9));
    }

    #[test]
    fn cor24_with_boundary_zero_reduces_to_govil() {
        let p = binomial_power(3); // zero at -1, so m = 0
        let c = cor24_bound(&p, 0.2, 0.7).unwrap();
        let g = govil_two_radius_bound(&p, 0.2, 0.7).unwrap();
        assert!((c.value.unwrap() - g.value.unwrap()).abs() < 1e-8 * g.value.unwrap());
    }

    #[test]
    fn qazi_bounds() {
        let p = z3_plus_64();
        let simple = qazi_simple_bound(&p, 0.1, 0.5).unwrap();
        let factor = simple.value.unwrap() / simple.params.max_ref.unwrap();
        assert!((factor - (1.001 / 1.125)).abs() < 1e-12);
        // r = R identity
        let s = qazi_simple_bound(&p, 0.5, 0.5).unwrap();
        assert!((s.value.unwrap() - s.params.max_ref.unwrap()).abs() < 1e-12);
        let i = qazi_integral_bound(&p, 0.5, 0.5).unwrap();
        assert!((i.value.unwrap() - i.params.max_ref.unwrap()).abs() < 1e-12);
        assert_eq!(i.params.integral, Some(0.0));
        // refinement claim
        let integral = qazi_integral_bound(&p, 0.1, 0.5).unwrap();
        assert!(integral.value.unwrap() >= simple.value.unwrap() * (1.0 - 1e-12));
        // mu = 1 simple factor matches the two-radius factor
        let q = binomial_power(4);
        let s = qazi_simple_bound(&q, 0.2, 0.8).unwrap();
        let g = govil_two_radius_bound(&q, 0.2, 0.8).unwrap();
        assert!((s.value.unwrap() - g.value.unwrap()).abs() < 1e-10 * g.value.unwrap());
    }

    #[test]
    fn qazi_integral_against_fine_grid_simpson() {
        // Independent oracle: fixed-panel composite Simpson at 10^5 panels.
        let p = z3_plus_64();
        let b = qazi_integral_bound(&p, 0.1, 0.5).unwrap();
        let (n, mu, ratio) = (3.0, 3.0, 1.0 / 64.0);
        let f = qazi_integrand(n, mu, ratio);
        let panels = 100_000usize;
        let h = (0.5 - 0.1) / panels as f64;
        let mut sum = f(0.1) + f(0.5);
        for i in 1..panels {
            let x = 0.1 + i as f64 * h;
            sum += if i % 2 == 1 { 4.0 * f(x) } else { 2.0 * f(x) };
        }
        let oracle = sum * h / 3.0;
        assert!((b.params.integral.unwrap() - oracle).abs() < 1e-11);
    }

    #[test]
    fn derivative_upper_bound_examples() {
        // (1+z)^n, K = 1: bound equals n 2^{n-1} = max |p'| on |z| = 1
        for n in [2usize, 3, 5] {
            let p = binomial_power(n);
            let bound = derivative_upper_bound(&p, 1.0).unwrap();
            let want = n as f64 * 2.0f64.powi(n as i32 - 1);
            assert!((bound - want).abs() < 1e-8 * want);
            let actual = max_modulus(&p.derivative(), 1.0).unwrap().value;
            assert!(bound >= actual - 1e-8 * want);
        }
        // z^3 + 64, K = 1: (3/2)(65 - 63) = 3, equality with max |3 z^2|
        let bound = derivative_upper_bound(&z3_plus_64(), 1.0).unwrap();
        assert!((bound - 3.0).abs() < 1e-7);
        assert!(derivative_upper_bound(&z3_plus_64(), 0.5).is_err());
        let q = Polynomial::from_reals(&[0.25, 0.0, 1.0]).unwrap();
        assert!(derivative_upper_bound(&q, 1.0).is_err());
    }

    #[test]
    fn best_lower_bound_summary() {
        // alpha z^n: only varga applies, gap ~ 0
        let p = monomial(Complex64::new(0.8, -0.6), 3);
        let s = best_lower_bound(&p, 0.3, None, None).unwrap();
        assert_eq!(s.best, Some(BoundId::Varga));
        let applicable: Vec<_> = s.bounds.iter().filter(|b| b.applicable).collect();
        assert_eq!(applicable.len(), 1);
        assert!(s.gap.unwrap().abs() < 1e-10);

        // (1+z)^n: several bounds tie at (1+r)^n, gap ~ 0
        let p = binomial_power(4);
        let s = best_lower_bound(&p, 0.5, None, None).unwrap();
        assert!(s.gap.unwrap().abs() < 1e-8 * s.measured.as_ref().unwrap().value);

        // z^3 + 64: best value stays below the oracle maximum
        let p = z3_plus_64();
        let s = best_lower_bound(&p, 0.1, Some(0.5), None).unwrap();
        let oracle = grid_oracle(&p, 0.1, ExtremumKind::Maximum, 1 << 16).unwrap();
        for b in s.bounds.iter().filter(|b| b.applicable) {
            if b.bound_id == BoundId::Thm21Statement {
                continue;
            }
            assert!(
                b.value.unwrap() <= oracle * (1.0 + 1e-8),
                "{:?} = {} exceeds {}",
                b.bound_id,
                b.value.unwrap(),
                oracle
            );
        }
        assert!(s.gap.unwrap() >= -1e-9 * oracle);
    }

    #[test]
    fn adaptive_simpson_known_integrals() {
        let v = adaptive_simpson(&|t: f64| t * t, 0.0, 1.0, 1e-12, 40).unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-12);
        let v = adaptive_simpson(&|t: f64| 1.0 / (1.0 + t), 0.0, 1.0, 1e-12, 40).unwrap();
        assert!((v - 2.0f64.ln()).abs() < 1e-12);
        let v = adaptive_simpson(&|t: f64| t.exp(), -1.0, 2.0, 1e-12, 40).unwrap();
        assert!((v - (2.0f64.exp() - (-1.0f64).exp())).abs() < 1e-11);
    }
}
