//! Zero-count bounds for `|z| <= δ`.
//!
//! Every bound has the shape `log(M / |a_0|) / log(1/δ)` for some
//! coefficient functional `M` that dominates `|(1 - z) p(z)|` on the unit
//! circle. B and D are written in their printed `1 + log(·)/log 2` form.

use alloc::vec::Vec;
use core::f64::consts::LN_2;

use thiserror::Error;

use crate::hypothesis::{
    check_arg_condition, check_enestrom_kakeya, check_real_increasing, full_report, validate, TheoremId, Witness,
};
use crate::poly::Polynomial;

/// The radius at which B, C and D are stated.
pub const HALF_DISK: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum BoundError {
    #[error("the function vanishes at the centre of the disk")]
    ZeroAtCenter,
    #[error("delta = {0} is outside the open interval (0, 1)")]
    BadDelta(f64),
    #[error("outer radius must be positive, got {0}")]
    BadRadius(f64),
    #[error("bound M = {m} is below the centre value {f0}")]
    BoundBelowCenterValue { m: f64, f0: f64 },
    #[error("hypothesis of {0} is not satisfied")]
    HypothesisNotSatisfied(TheoremId),
    #[error("{0} is stated only for delta = 1/2")]
    HalfDiskOnly(TheoremId),
    #[error("{0} does not give a zero count")]
    NotACountingBound(TheoremId),
    #[error("no counting theorem applies")]
    NoHypothesisApplies,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub theorem: TheoremId,
    pub witness: Option<Witness>,
    pub delta: f64,
    /// The `M` in `log(M / |a_0|)`.
    pub m_value: f64,
    pub raw_bound: f64,
    /// `min(floor(raw_bound), n)`.
    pub integer_bound: usize,
    /// True when the degree, not the floor, determined `integer_bound`.
    pub clamped: bool,
}

/// Zero count bound for an analytic `F` with `|F| <= m` on `|z| <= r` and
/// `|F(0)| = f0_abs`, on the disk `|z| <= delta * r`.
pub fn titchmarsh_bound(m: f64, f0_abs: f64, delta: f64, r: f64) -> Result<f64, BoundError> {
    if !(f0_abs > 0.0) {
        return Err(BoundError::ZeroAtCenter);
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(BoundError::BadDelta(delta));
    }
    if !(r > 0.0) {
        return Err(BoundError::BadRadius(r));
    }
    if !(m >= f0_abs) {
        return Err(BoundError::BoundBelowCenterValue { m, f0: f0_abs });
    }
    Ok(libm::log(m / f0_abs) / -libm::log(delta))
}

/// `M_1 = |α_0| - α_0 + |α_n| - α_n + |t| - t + 2 α_λ + 2 Σ |β_j|`.
///
/// # Panics
/// If `lambda > degree(p)`.
pub fn m1(p: &Polynomial, lambda: usize, t: f64) -> f64 {
    let c = p.coeffs();
    let n = p.degree();
    assert!(lambda <= n, "peak index {lambda} exceeds degree {n}");
    let (a0, an) = (c[0].re, c[n].re);
    (a0.abs() - a0) + (an.abs() - an) + (t.abs() - t) + 2.0 * c[lambda].re + 2.0 * p.imag_abs_sum()
}

/// `M_2 = M_1 + |s| + s`.
///
/// # Panics
/// If `lambda > degree(p)`.
pub fn m2(p: &Polynomial, lambda: usize, t: f64, s: f64) -> f64 {
    let c = p.coeffs();
    let n = p.degree();
    assert!(lambda <= n, "peak index {lambda} exceeds degree {n}");
    let (a0, an) = (c[0].re, c[n].re);
    let beta_sum: f64 = c.iter().map(|a| a.im.abs()).sum();
    (a0.abs() - a0) + (an.abs() - an) + (t.abs() - t) + (s.abs() + s) + 2.0 * c[lambda].re + 2.0 * beta_sum
}

/// `|a_n| (cos α + sin α + 1) + 2 sin α Σ_{j<n} |a_j|`.
pub fn m_arg_cone(p: &Polynomial, alpha: f64) -> f64 {
    let c = p.coeffs();
    let n = p.degree();
    let (sin, cos) = (libm::sin(alpha), libm::cos(alpha));
    let lower: f64 = c[..n].iter().map(|a| a.norm()).sum();
    c[n].norm() * (cos + sin + 1.0) + 2.0 * sin * lower
}

fn report(
    p: &Polynomial,
    theorem: TheoremId,
    witness: Option<Witness>,
    delta: f64,
    m_value: f64,
    raw_bound: f64,
) -> BoundReport {
    let floor = if raw_bound > 0.0 { libm::floor(raw_bound) } else { 0.0 };
    let n = p.degree();
    let (integer_bound, clamped) = if floor >= n as f64 { (n, floor > n as f64) } else { (floor as usize, false) };
    BoundReport { theorem, witness, delta, m_value, raw_bound, integer_bound, clamped }
}

fn a0_abs(p: &Polynomial) -> Result<f64, BoundError> {
    let v = p.constant_term().norm();
    if v > 0.0 {
        Ok(v)
    } else {
        Err(BoundError::ZeroAtCenter)
    }
}

/// `1 + log(a_n / a_0) / log 2` on `|z| <= 1/2`.
pub fn bound_thm_b(p: &Polynomial) -> Result<BoundReport, BoundError> {
    if !check_enestrom_kakeya(p) {
        return Err(BoundError::HypothesisNotSatisfied(TheoremId::ThmB));
    }
    let a0 = p.constant_term().re;
    let an = p.leading().re;
    let raw = 1.0 + libm::log(an / a0) / LN_2;
    Ok(report(p, TheoremId::ThmB, Some(Witness::plain(TheoremId::ThmB)), HALF_DISK, 2.0 * an, raw))
}

fn bound_arg_cone(
    p: &Polynomial,
    theorem: TheoremId,
    alpha: f64,
    beta: f64,
    delta: f64,
) -> Result<BoundReport, BoundError> {
    if !check_arg_condition(p, alpha, beta) {
        return Err(BoundError::HypothesisNotSatisfied(theorem));
    }
    let m = m_arg_cone(p, alpha);
    let raw = titchmarsh_bound(m, a0_abs(p)?, delta, 1.0)?;
    Ok(report(p, theorem, Some(Witness::arg_cone(theorem, alpha, beta)), delta, m, raw))
}

/// Arg-cone bound on `|z| <= 1/2`.
pub fn bound_thm_c(p: &Polynomial, alpha: f64, beta: f64) -> Result<BoundReport, BoundError> {
    bound_arg_cone(p, TheoremId::ThmC, alpha, beta, HALF_DISK)
}

/// Arg-cone bound on `|z| <= δ`.
pub fn bound_thm_e(p: &Polynomial, alpha: f64, beta: f64, delta: f64) -> Result<BoundReport, BoundError> {
    bound_arg_cone(p, TheoremId::ThmE, alpha, beta, delta)
}

fn real_increasing_sum(p: &Polynomial, theorem: TheoremId) -> Result<f64, BoundError> {
    if !check_real_increasing(p) {
        return Err(BoundError::HypothesisNotSatisfied(theorem));
    }
    Ok(p.leading().re + p.imag_abs_sum())
}

/// `1 + log((α_n + Σ|β_j|) / |a_0|) / log 2` on `|z| <= 1/2`.
pub fn bound_thm_d(p: &Polynomial) -> Result<BoundReport, BoundError> {
    let sum = real_increasing_sum(p, TheoremId::ThmD)?;
    let raw = 1.0 + libm::log(sum / a0_abs(p)?) / LN_2;
    Ok(report(p, TheoremId::ThmD, Some(Witness::plain(TheoremId::ThmD)), HALF_DISK, 2.0 * sum, raw))
}

/// `log(2 (α_n + Σ|β_j|) / |a_0|) / log(1/δ)`.
pub fn bound_thm_f(p: &Polynomial, delta: f64) -> Result<BoundReport, BoundError> {
    let m = 2.0 * real_increasing_sum(p, TheoremId::ThmF)?;
    let raw = titchmarsh_bound(m, a0_abs(p)?, delta, 1.0)?;
    Ok(report(p, TheoremId::ThmF, Some(Witness::plain(TheoremId::ThmF)), delta, m, raw))
}

/// Unimodal-chain bound with `s = 0`, using `M_1`.
pub fn bound_thm1(p: &Polynomial, lambda: usize, t: f64, delta: f64) -> Result<BoundReport, BoundError> {
    bound_chain(p, &Witness::chain(TheoremId::Thm1, lambda, t, 0.0), delta)
}

/// Unimodal-chain bound using `M_2`. Accepts any chain-family witness.
pub fn bound_thm2(p: &Polynomial, w: &Witness, delta: f64) -> Result<BoundReport, BoundError> {
    bound_chain(p, w, delta)
}

fn bound_chain(p: &Polynomial, w: &Witness, delta: f64) -> Result<BoundReport, BoundError> {
    if !w.theorem.is_chain() || !validate(p, w) {
        return Err(BoundError::HypothesisNotSatisfied(w.theorem));
    }
    // validate() guarantees the chain parameters are present
    let (lambda, t, s) = (w.lambda.unwrap_or(0), w.t.unwrap_or(0.0), w.s.unwrap_or(0.0));
    let m = if w.theorem == TheoremId::Thm2 { m2(p, lambda, t, s) } else { m1(p, lambda, t) };
    let raw = titchmarsh_bound(m, a0_abs(p)?, delta, 1.0)?;
    Ok(report(p, w.theorem, Some(*w), delta, m, raw))
}

/// Bound certified by a witness from `full_report`.
pub fn bound_for_witness(p: &Polynomial, w: &Witness, delta: f64) -> Result<BoundReport, BoundError> {
    if w.theorem.is_half_disk_only() && delta != HALF_DISK {
        return Err(BoundError::HalfDiskOnly(w.theorem));
    }
    let cone = || match (w.alpha, w.beta) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(BoundError::HypothesisNotSatisfied(w.theorem)),
    };
    match w.theorem {
        TheoremId::EkA | TheoremId::Lemma => Err(BoundError::NotACountingBound(w.theorem)),
        TheoremId::ThmB => bound_thm_b(p),
        TheoremId::ThmC => cone().and_then(|(a, b)| bound_thm_c(p, a, b)),
        TheoremId::ThmE => cone().and_then(|(a, b)| bound_thm_e(p, a, b, delta)),
        TheoremId::ThmD => bound_thm_d(p),
        TheoremId::ThmF => bound_thm_f(p, delta),
        TheoremId::Thm1 | TheoremId::Thm2 | TheoremId::Cor1 | TheoremId::Cor2 | TheoremId::Cor3 => {
            bound_chain(p, w, delta)
        }
    }
}

/// Ties on the bound go to the witness that needs less slack.
fn better(a: &BoundReport, b: &BoundReport) -> bool {
    let slack = |r: &BoundReport| r.witness.map_or(0.0, |w| w.t.unwrap_or(0.0).abs() + w.s.unwrap_or(0.0).abs());
    (a.integer_bound, a.raw_bound, a.theorem) < (b.integer_bound, b.raw_bound, b.theorem)
        || ((a.integer_bound, a.raw_bound, a.theorem) == (b.integer_bound, b.raw_bound, b.theorem)
            && slack(a) < slack(b))
}

/// The tightest bound per applicable counting theorem, in `TheoremId` order.
///
/// B, C and D only appear when `delta` is exactly 1/2.
pub fn all_bounds(p: &Polynomial, delta: f64) -> Result<Vec<BoundReport>, BoundError> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(BoundError::BadDelta(delta));
    }
    a0_abs(p)?;
    let hyp = full_report(p);
    let mut out: Vec<BoundReport> = Vec::new();
    for w in &hyp.witnesses {
        if matches!(w.theorem, TheoremId::EkA | TheoremId::Lemma) {
            continue;
        }
        if w.theorem.is_half_disk_only() && delta != HALF_DISK {
            continue;
        }
        let r = bound_for_witness(p, w, delta)?;
        match out.iter_mut().find(|x| x.theorem == r.theorem) {
            Some(slot) if better(&r, slot) => *slot = r,
            Some(_) => {}
            None => out.push(r),
        }
    }
    out.sort_by_key(|r| r.theorem);
    Ok(out)
}

/// Tightest bound for one theorem, minimised over its witnesses.
pub fn best_for_theorem(p: &Polynomial, theorem: TheoremId, delta: f64) -> Result<BoundReport, BoundError> {
    if matches!(theorem, TheoremId::EkA | TheoremId::Lemma) {
        return Err(BoundError::NotACountingBound(theorem));
    }
    if theorem.is_half_disk_only() && delta != HALF_DISK {
        return Err(BoundError::HalfDiskOnly(theorem));
    }
    all_bounds(p, delta)?.into_iter().find(|r| r.theorem == theorem).ok_or(BoundError::HypothesisNotSatisfied(theorem))
}

/// Smallest integer bound over every applicable theorem; ties go to the
/// smaller raw bound, then to the earlier theorem.
pub fn best_bound(p: &Polynomial, delta: f64) -> Result<BoundReport, BoundError> {
    all_bounds(p, delta)?
        .into_iter()
        .reduce(|best, r| if better(&r, &best) { r } else { best })
        .ok_or(BoundError::NoHypothesisApplies)
}
