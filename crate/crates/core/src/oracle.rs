//! Exact zero counts in a closed disk, by two independent routes.
//!
//! The root route runs Aberth–Ehrlich simultaneous iteration and counts the
//! approximations inside the disk. The winding route integrates `p'/p`
//! around the circle with the trapezoidal rule. [`count_in_disk`] runs both
//! and refuses to answer when they disagree.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, TAU};

use thiserror::Error;

use crate::poly::{Complex, Polynomial};

pub const MAX_ITERATIONS: usize = 500;
/// Step-size stopping threshold, relative to `1 + max |z_k|`.
pub const STEP_TOLERANCE: f64 = 1e-12;
/// Largest relative backward error accepted for a converged root.
pub const RESIDUAL_TOLERANCE: f64 = 1e-10;
/// A root stops moving once `|p(z)|` is within this many unit roundoffs of
/// `Σ |a_j| |z|^j`; past that point the Horner value is rounding noise.
const NOISE_ULPS: f64 = 4.0;
const INITIAL_ANGLE: f64 = 0.4;
const MIN_INITIAL_RADIUS: f64 = 1e-6;

pub const WINDING_MIN_SAMPLES: usize = 256;
pub const WINDING_MAX_SAMPLES: usize = 1 << 20;
/// Contour samples with `|p| < CONTOUR_GUARD * max |p|` mean a zero sits on
/// the circle for practical purposes.
pub const CONTOUR_GUARD: f64 = 1e-13;
const WINDING_ACCEPT: f64 = 0.1;

/// Largest argument change of `p` allowed between neighbouring samples.
pub const MAX_PHASE_STEP: f64 = FRAC_PI_2;

/// Multiplicative widening of the radius for the closed-disk convention.
pub const CLOSED_DISK_GUARD: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum OracleError {
    #[error("root iteration did not converge in {0} iterations")]
    NotConverged(usize),
    #[error("a zero lies on or next to the contour |z| = {0}")]
    ContourNearZero(f64),
    #[error("winding quadrature did not settle with {0} samples")]
    QuadratureNotConverged(usize),
    #[error("root count {roots} disagrees with winding count {winding} at radius {radius}")]
    OracleDisagreement { roots: usize, winding: usize, radius: f64 },
    #[error("radius must be positive and finite, got {0}")]
    BadRadius(f64),
    #[error("constant polynomial has no roots to approximate")]
    ConstantPolynomial,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex>,
    /// `|p(z)| / Σ |a_j| |z|^j` for each root.
    pub residuals: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

impl RootSet {
    pub fn max_modulus(&self) -> f64 {
        self.roots.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Roots with `|z| <= radius * (1 + CLOSED_DISK_GUARD)`.
    pub fn count_within(&self, radius: f64) -> usize {
        let r = radius * (1.0 + CLOSED_DISK_GUARD);
        self.roots.iter().filter(|z| z.norm() <= r).count()
    }

    /// `min_k ||z_k| - radius|`, or infinity when there are no roots.
    pub fn boundary_margin(&self, radius: f64) -> f64 {
        self.roots.iter().map(|z| (z.norm() - radius).abs()).fold(f64::INFINITY, f64::min)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    Roots,
    Winding,
    CrossChecked,
}

impl CountMethod {
    pub fn label(self) -> &'static str {
        match self {
            CountMethod::Roots => "ROOTS",
            CountMethod::Winding => "WINDING",
            CountMethod::CrossChecked => "CROSS_CHECKED",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskCountResult {
    pub count: usize,
    pub method: CountMethod,
    pub boundary_margin: f64,
    pub radius: f64,
}

fn relative_residual(p: &Polynomial, z: Complex) -> f64 {
    let v = p.eval(z).norm();
    if v == 0.0 {
        return 0.0;
    }
    v / p.abs_eval(z.norm())
}

/// All roots by Aberth–Ehrlich iteration.
///
/// Exact zero roots (leading `a_0 = a_1 = ... = 0`) are split off first and
/// reported as `0`. The remaining factor starts from equispaced points on
/// the circle of radius `max(|a_0/a_n|^(1/n), 1e-6)`, rotated by 0.4 rad.
/// A root is frozen once its correction is below the step tolerance or its
/// value is at the rounding-noise floor; `converged` requires every root to
/// freeze within the iteration budget with a residual under
/// [`RESIDUAL_TOLERANCE`].
pub fn aberth_roots(p: &Polynomial) -> Result<RootSet, OracleError> {
    if p.degree() == 0 {
        return Err(OracleError::ConstantPolynomial);
    }
    let zeros = p.coeffs().iter().take_while(|a| a.re == 0.0 && a.im == 0.0).count();
    let mut roots: Vec<Complex> = alloc::vec![Complex::new(0.0, 0.0); zeros];
    let mut residuals: Vec<f64> = alloc::vec![0.0; zeros];
    if zeros == p.degree() {
        return Ok(RootSet { roots, residuals, iterations: 0, converged: true });
    }
    // leading coefficient is nonzero, so the reduced polynomial is valid
    let q = Polynomial::new(p.coeffs()[zeros..].to_vec()).map_err(|_| OracleError::ConstantPolynomial)?;
    let n = q.degree();

    let ratio = (q.constant_term() / q.leading()).norm();
    let r0 = f64::max(libm::pow(ratio, 1.0 / n as f64), MIN_INITIAL_RADIUS);
    let mut z: Vec<Complex> =
        (0..n).map(|k| Complex::from_polar(r0, TAU * k as f64 / n as f64 + INITIAL_ANGLE)).collect();
    let mut frozen = alloc::vec![false; n];
    let mut steps = alloc::vec![Complex::new(0.0, 0.0); n];

    let mut iterations = 0;
    while iterations < MAX_ITERATIONS && frozen.iter().any(|f| !f) {
        iterations += 1;
        for k in 0..n {
            steps[k] = Complex::new(0.0, 0.0);
            if frozen[k] {
                continue;
            }
            let (v, dv) = q.eval_with_derivative(z[k]);
            if v.norm() <= NOISE_ULPS * f64::EPSILON * q.abs_eval(z[k].norm()) {
                frozen[k] = true;
                continue;
            }
            let repulsion: Complex = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let denom = dv / v - repulsion;
            steps[k] = if denom.norm() > 0.0 && denom.re.is_finite() && denom.im.is_finite() {
                denom.inv()
            } else {
                // stationary point of the Aberth correction; nudge off it
                Complex::from_polar(1e-3 * (1.0 + z[k].norm()), INITIAL_ANGLE * (k + 1) as f64)
            };
        }
        let scale = 1.0 + z.iter().map(|x| x.norm()).fold(0.0, f64::max);
        for k in 0..n {
            if frozen[k] {
                continue;
            }
            z[k] -= steps[k];
            if steps[k].norm() <= STEP_TOLERANCE * scale {
                frozen[k] = true;
            }
        }
    }

    let res: Vec<f64> = z.iter().map(|&r| relative_residual(&q, r)).collect();
    let converged = frozen.iter().all(|&f| f) && res.iter().all(|&r| r <= RESIDUAL_TOLERANCE);
    roots.extend(z);
    residuals.extend(res);
    Ok(RootSet { roots, residuals, iterations, converged })
}

/// Number of zeros inside `|z| < radius` by the argument principle.
///
/// The trapezoidal sum `(1/N) Σ z_k p'(z_k) / p(z_k)` over `N` equispaced
/// points is refined by doubling `N` from 256 until two successive levels
/// round to the same integer and both lie within 0.1 of it. A level only
/// counts if it also resolves the phase of `p`: neighbouring samples differ
/// in argument by at most π/2, and the unwrapped phase gives the same
/// integer. Without that, a zero just off the contour aliases into a stable
/// but wrong sum.
pub fn winding_count(p: &Polynomial, radius: f64) -> Result<usize, OracleError> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(OracleError::BadRadius(radius));
    }
    let sample = |theta: f64| -> (Complex, Complex) {
        let z = Complex::from_polar(radius, theta);
        let (v, dv) = p.eval_with_derivative(z);
        (v, z * dv / v)
    };

    let mut n = WINDING_MIN_SAMPLES;
    let mut sum = Complex::new(0.0, 0.0);
    let mut values: Vec<Complex> = Vec::with_capacity(n);
    for k in 0..n {
        let (v, f) = sample(TAU * k as f64 / n as f64);
        sum += f;
        values.push(v);
    }
    let mut previous: Option<i64> = None;
    loop {
        let max_abs = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
        let min_abs = values.iter().map(|v| v.norm()).fold(f64::INFINITY, f64::min);
        if !(min_abs >= CONTOUR_GUARD * max_abs) || !sum.re.is_finite() {
            return Err(OracleError::ContourNearZero(radius));
        }
        let value = sum.re / n as f64;
        let rounded = libm::round(value);
        let (phase, max_step) = phase_change(&values);
        let settled = (value - rounded).abs() <= WINDING_ACCEPT
            && max_step <= MAX_PHASE_STEP
            && libm::round(phase / TAU) == rounded;
        let current = settled.then_some(rounded as i64);
        if let (Some(a), Some(b)) = (previous, current) {
            if a == b {
                return Ok(usize::try_from(b).unwrap_or(0));
            }
        }
        previous = current;
        if n >= WINDING_MAX_SAMPLES {
            return Err(OracleError::QuadratureNotConverged(n));
        }
        // interleave the midpoints of the current grid
        let mut refined = Vec::with_capacity(2 * n);
        for (k, &v) in values.iter().enumerate() {
            let (m, f) = sample(TAU * (2 * k + 1) as f64 / (2 * n) as f64);
            sum += f;
            refined.push(v);
            refined.push(m);
        }
        values = refined;
        n *= 2;
    }
}

/// Total unwrapped argument change around the closed sample loop, and the
/// largest single step.
fn phase_change(values: &[Complex]) -> (f64, f64) {
    let mut total = 0.0;
    let mut max_step: f64 = 0.0;
    for (k, &v) in values.iter().enumerate() {
        let next = values[(k + 1) % values.len()];
        let step = (next / v).arg();
        total += step;
        max_step = max_step.max(step.abs());
    }
    (total, max_step)
}

/// Cross-checked count of zeros in the closed disk `|z| <= delta`.
pub fn count_in_disk(p: &Polynomial, delta: f64) -> Result<DiskCountResult, OracleError> {
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(OracleError::BadRadius(delta));
    }
    if p.degree() == 0 {
        return Ok(DiskCountResult {
            count: 0,
            method: CountMethod::CrossChecked,
            boundary_margin: f64::INFINITY,
            radius: delta,
        });
    }
    let roots = aberth_roots(p)?;
    count_with_roots(p, &roots, delta)
}

/// As [`count_in_disk`], reusing a root set computed once for `p`.
///
/// When exactly one route succeeds its answer is returned with that route's
/// method tag; when both fail, the root-route error is returned.
pub fn count_with_roots(p: &Polynomial, roots: &RootSet, delta: f64) -> Result<DiskCountResult, OracleError> {
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(OracleError::BadRadius(delta));
    }
    let boundary_margin = roots.boundary_margin(delta);
    let by_roots = roots.converged.then(|| roots.count_within(delta));
    let by_winding = winding_count(p, delta * (1.0 + CLOSED_DISK_GUARD));
    let (count, method) = match (by_roots, by_winding) {
        (Some(a), Ok(b)) if a == b => (a, CountMethod::CrossChecked),
        (Some(a), Ok(b)) => {
            return Err(OracleError::OracleDisagreement { roots: a, winding: b, radius: delta });
        }
        (Some(a), Err(_)) => (a, CountMethod::Roots),
        (None, Ok(b)) => (b, CountMethod::Winding),
        (None, Err(_)) => return Err(OracleError::NotConverged(roots.iterations)),
    };
    Ok(DiskCountResult { count, method, boundary_margin, radius: delta })
}
