//! Seeded generators of polynomials that satisfy a chosen hypothesis.
//!
//! Instance `i` of a family is drawn from its own xoshiro256++ stream,
//! seeded through SplitMix64 (`Xoshiro256PlusPlus::seed_from_u64`) with
//! `seed ^ (i * 0x9E37_79B9_7F4A_7C15)` (wrapping multiply). Uniform reals
//! are `(next_u64 >> 11) * 2^-53` in `[0, 1)`. Every recipe builds its
//! hypothesis directly; nothing is rejection-sampled, so instance `i` is a
//! pure function of `(spec, i)`.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, TAU};

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use thiserror::Error;

use crate::hypothesis::{check_enestrom_kakeya, check_real_increasing, find_arg_params, find_t2_witnesses, TheoremId};
use crate::poly::{Complex, Polynomial};

const STREAM_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;
/// Probability that a monotone step is exactly zero, so that the `<=`
/// links of each chain are exercised with equality.
const TIE_PROBABILITY: f64 = 0.125;
/// Minimum relative growth between consecutive moduli in the arg-cone family;
/// keeps `|a_j| <= |a_{j+1}|` intact after the polar-to-Cartesian rounding.
const MODULUS_GAP: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("infeasible family spec: {0}")]
    InfeasibleSpec(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilySpec {
    pub theorem: TheoremId,
    pub degree: usize,
    pub seed: u64,
    /// Cap on coefficient magnitudes.
    pub scale: f64,
    /// Peak index for chain families; drawn per instance when absent.
    pub lambda: Option<usize>,
    pub count: usize,
}

impl FamilySpec {
    pub fn new(theorem: TheoremId, degree: usize, seed: u64, count: usize) -> Self {
        Self { theorem, degree, seed, scale: 10.0, lambda: None, count }
    }

    pub fn with_lambda(self, lambda: usize) -> Self {
        Self { lambda: Some(lambda), ..self }
    }

    pub fn with_scale(self, scale: f64) -> Self {
        Self { scale, ..self }
    }

    fn validate(&self) -> Result<(), FamilyError> {
        if self.degree < 1 {
            return Err(FamilyError::InfeasibleSpec("degree must be at least 1"));
        }
        if self.count < 1 {
            return Err(FamilyError::InfeasibleSpec("count must be at least 1"));
        }
        if !(self.scale > 0.0 && self.scale.is_finite()) {
            return Err(FamilyError::InfeasibleSpec("scale must be positive and finite"));
        }
        if !is_generated(self.theorem) {
            return Err(FamilyError::InfeasibleSpec("no generator for this theorem"));
        }
        match self.lambda {
            Some(_) if self.theorem != TheoremId::Thm2 => {
                Err(FamilyError::InfeasibleSpec("lambda only applies to the THM_2 family"))
            }
            Some(l) if l > self.degree => Err(FamilyError::InfeasibleSpec("lambda exceeds degree")),
            _ => Ok(()),
        }
    }
}

/// Theorems with a generator.
pub fn is_generated(theorem: TheoremId) -> bool {
    matches!(
        theorem,
        TheoremId::EkA
            | TheoremId::ThmB
            | TheoremId::ThmC
            | TheoremId::ThmE
            | TheoremId::ThmD
            | TheoremId::ThmF
            | TheoremId::Thm2
    )
}

/// The hypothesis a family member is guaranteed to satisfy.
pub fn satisfies_family(theorem: TheoremId, p: &Polynomial) -> bool {
    match theorem {
        TheoremId::EkA | TheoremId::ThmB => check_enestrom_kakeya(p),
        TheoremId::ThmC | TheoremId::ThmE => find_arg_params(p).is_some(),
        TheoremId::ThmD | TheoremId::ThmF => check_real_increasing(p),
        TheoremId::Thm2 => !find_t2_witnesses(p).is_empty(),
        _ => false,
    }
}

struct Stream(Xoshiro256PlusPlus);

impl Stream {
    fn new(seed: u64, index: u64) -> Self {
        Self(Xoshiro256PlusPlus::seed_from_u64(seed ^ index.wrapping_mul(STREAM_STRIDE)))
    }

    /// Uniform in `[0, 1)`.
    fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`.
    fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    /// Uniform in `0..=max`.
    fn index(&mut self, max: usize) -> usize {
        let k = (self.unit() * (max + 1) as f64) as usize;
        k.min(max)
    }

    fn nonzero(&mut self, lo: f64, hi: f64) -> f64 {
        loop {
            let x = self.range(lo, hi);
            if x != 0.0 {
                return x;
            }
        }
    }
}

fn lower_start(scale: f64) -> f64 {
    if scale > 0.1 {
        0.1
    } else {
        0.1 * scale
    }
}

/// Positive nondecreasing sequence in `(lower, scale]`, with exact ties.
fn nondecreasing(rng: &mut Stream, len: usize, scale: f64) -> Vec<f64> {
    let first = rng.range(lower_start(scale), scale);
    let step = (scale - first) / len.max(1) as f64;
    let mut out = Vec::with_capacity(len);
    let mut x = first;
    out.push(x);
    for _ in 1..len {
        if rng.unit() >= TIE_PROBABILITY {
            x += step * rng.unit();
        }
        out.push(x);
    }
    out
}

fn build(coeffs: Vec<Complex>) -> Polynomial {
    Polynomial::new(coeffs).expect("generators keep coefficients finite with nonzero leading term")
}

fn enestrom_kakeya(rng: &mut Stream, spec: &FamilySpec) -> Polynomial {
    let a = nondecreasing(rng, spec.degree + 1, spec.scale);
    build(a.into_iter().map(|x| Complex::new(x, 0.0)).collect())
}

fn arg_cone(rng: &mut Stream, spec: &FamilySpec) -> Polynomial {
    let n = spec.degree;
    let beta = rng.range(0.0, TAU);
    let alpha = FRAC_PI_2 * (1.0 - MODULUS_GAP) * rng.unit();
    let first = rng.range(lower_start(spec.scale), spec.scale);
    let step = (spec.scale - first) / n as f64;
    let mut m = first;
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        if j > 0 {
            m = m * (1.0 + MODULUS_GAP) + step * rng.unit();
        }
        let theta = beta + alpha * (2.0 * rng.unit() - 1.0);
        coeffs.push(Complex::from_polar(m, theta));
    }
    build(coeffs)
}

fn real_increasing(rng: &mut Stream, spec: &FamilySpec) -> Polynomial {
    let re = nondecreasing(rng, spec.degree + 1, spec.scale);
    let coeffs = re.into_iter().map(|x| Complex::new(x, rng.range(-spec.scale, spec.scale))).collect();
    build(coeffs)
}

/// Real parts unimodal on the chain interior with the peak at `λ`; the
/// endpoints outside the chain are free and `(t, s)` absorb them.
fn unimodal_chain(rng: &mut Stream, spec: &FamilySpec) -> Polynomial {
    let n = spec.degree;
    let scale = spec.scale;
    let lambda = spec.lambda.unwrap_or_else(|| rng.index(n));
    let mut re = alloc::vec![0.0; n + 1];

    let draw = |rng: &mut Stream, len: usize| -> Vec<f64> {
        let mut v: Vec<f64> = (0..len).map(|_| rng.range(-scale, scale)).collect();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    };
    if lambda == 0 {
        // a_0 >= a_1 >= ... >= a_{n-1}; a_n free
        let v = draw(rng, n);
        re[..n].copy_from_slice(&v);
        re[n] = rng.range(-scale, scale);
    } else if lambda == n {
        // a_1 <= ... <= a_n; a_0 free
        let mut v = draw(rng, n);
        v.reverse();
        re[1..].copy_from_slice(&v);
        re[0] = rng.range(-scale, scale);
    } else {
        let v = draw(rng, n - 1);
        re[lambda] = v[0];
        // random split of the rest into the rising and falling sides
        let mut rest: Vec<f64> = v[1..].to_vec();
        for i in (1..rest.len()).rev() {
            let j = rng.index(i);
            rest.swap(i, j);
        }
        let (left, right) = rest.split_at_mut(lambda - 1);
        left.sort_by(f64::total_cmp);
        right.sort_by(|a, b| b.total_cmp(a));
        re[1..lambda].copy_from_slice(left);
        re[lambda + 1..n].copy_from_slice(right);
        re[0] = rng.range(-scale, scale);
        re[n] = rng.range(-scale, scale);
    }
    let mut coeffs: Vec<Complex> = re.iter().map(|&x| Complex::new(x, rng.range(-scale, scale))).collect();
    for j in [0, n] {
        if coeffs[j] == Complex::new(0.0, 0.0) {
            coeffs[j].im = rng.nonzero(-scale, scale);
        }
    }
    build(coeffs)
}

/// Instance `index` of the family, independent of every other instance.
pub fn instance(spec: &FamilySpec, index: usize) -> Result<Polynomial, FamilyError> {
    spec.validate()?;
    let mut rng = Stream::new(spec.seed, index as u64);
    let p = match spec.theorem {
        TheoremId::EkA | TheoremId::ThmB => enestrom_kakeya(&mut rng, spec),
        TheoremId::ThmC | TheoremId::ThmE => arg_cone(&mut rng, spec),
        TheoremId::ThmD | TheoremId::ThmF => real_increasing(&mut rng, spec),
        TheoremId::Thm2 => unimodal_chain(&mut rng, spec),
        _ => return Err(FamilyError::InfeasibleSpec("no generator for this theorem")),
    };
    Ok(p)
}

/// `spec.count` polynomials, each satisfying the family hypothesis.
pub fn sample(spec: &FamilySpec) -> Result<Vec<Polynomial>, FamilyError> {
    spec.validate()?;
    (0..spec.count).map(|i| instance(spec, i)).collect()
}
