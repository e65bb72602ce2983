//! Hypothesis checkers and witness searches for the counting theorems.
//!
//! All inequality comparisons are exact. Where a checker has a slack
//! parameter (`t`, `s`), the link is tested in subtracted form
//! (`t <= α_{n-1} - α_n`, `α_0 - α_1 <= s`) so that a witness computed from
//! the same difference always re-validates bit-for-bit.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI, TAU};
use core::fmt;
use core::str::FromStr;

use crate::poly::{Complex, Polynomial};

/// Label of a theorem (or the lemma) whose hypothesis can be checked.
///
/// Declaration order is the tie-break order used by `best_bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// Eneström–Kakeya location: all zeros in the closed unit disk.
    EkA,
    ThmB,
    ThmC,
    ThmD,
    ThmE,
    ThmF,
    Thm1,
    Thm2,
    Cor1,
    Cor2,
    Cor3,
    Lemma,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::EkA,
        TheoremId::ThmB,
        TheoremId::ThmC,
        TheoremId::ThmD,
        TheoremId::ThmE,
        TheoremId::ThmF,
        TheoremId::Thm1,
        TheoremId::Thm2,
        TheoremId::Cor1,
        TheoremId::Cor2,
        TheoremId::Cor3,
        TheoremId::Lemma,
    ];

    pub fn label(self) -> &'static str {
        match self {
            TheoremId::EkA => "EK_A",
            TheoremId::ThmB => "THM_B",
            TheoremId::ThmC => "THM_C",
            TheoremId::ThmD => "THM_D",
            TheoremId::ThmE => "THM_E",
            TheoremId::ThmF => "THM_F",
            TheoremId::Thm1 => "THM_1",
            TheoremId::Thm2 => "THM_2",
            TheoremId::Cor1 => "COR_1",
            TheoremId::Cor2 => "COR_2",
            TheoremId::Cor3 => "COR_3",
            TheoremId::Lemma => "LEMMA",
        }
    }

    /// Theorems in the unimodal-chain family (parameters λ, t, s).
    pub fn is_chain(self) -> bool {
        matches!(self, TheoremId::Thm1 | TheoremId::Thm2 | TheoremId::Cor1 | TheoremId::Cor2 | TheoremId::Cor3)
    }

    /// Theorems that the source states only for the disk of radius 1/2.
    pub fn is_half_disk_only(self) -> bool {
        matches!(self, TheoremId::ThmB | TheoremId::ThmC | TheoremId::ThmD)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownTheorem;

impl fmt::Display for UnknownTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown theorem label")
    }
}

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    /// Accepts the canonical labels (`THM_2`) and the short forms (`T2`, `B`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let upper = s.trim().to_ascii_uppercase();
        let id = match upper.as_str() {
            "EK_A" | "A" | "EK" => TheoremId::EkA,
            "THM_B" | "B" => TheoremId::ThmB,
            "THM_C" | "C" => TheoremId::ThmC,
            "THM_D" | "D" => TheoremId::ThmD,
            "THM_E" | "E" => TheoremId::ThmE,
            "THM_F" | "F" => TheoremId::ThmF,
            "THM_1" | "T1" => TheoremId::Thm1,
            "THM_2" | "T2" => TheoremId::Thm2,
            "COR_1" | "C1" => TheoremId::Cor1,
            "COR_2" | "C2" => TheoremId::Cor2,
            "COR_3" | "C3" => TheoremId::Cor3,
            "LEMMA" => TheoremId::Lemma,
            _ => return Err(UnknownTheorem),
        };
        Ok(id)
    }
}

/// Parameters certifying that a theorem's hypothesis holds for a polynomial.
///
/// Chain theorems fill `lambda`, `t` and `s`; arg-cone theorems fill `alpha`
/// and `beta`; the rest carry no parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub theorem: TheoremId,
    pub lambda: Option<usize>,
    pub t: Option<f64>,
    pub s: Option<f64>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
}

impl Witness {
    pub fn plain(theorem: TheoremId) -> Self {
        Self { theorem, lambda: None, t: None, s: None, alpha: None, beta: None }
    }

    pub fn chain(theorem: TheoremId, lambda: usize, t: f64, s: f64) -> Self {
        Self { lambda: Some(lambda), t: Some(t), s: Some(s), ..Self::plain(theorem) }
    }

    pub fn arg_cone(theorem: TheoremId, alpha: f64, beta: f64) -> Self {
        Self { alpha: Some(alpha), beta: Some(beta), ..Self::plain(theorem) }
    }

    /// Same parameters under a different theorem label.
    pub fn relabel(self, theorem: TheoremId) -> Self {
        Self { theorem, ..self }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct HypothesisReport {
    pub witnesses: Vec<Witness>,
    pub rejections: Vec<(TheoremId, String)>,
}

impl HypothesisReport {
    pub fn witnesses_for(&self, theorem: TheoremId) -> impl Iterator<Item = &Witness> + '_ {
        self.witnesses.iter().filter(move |w| w.theorem == theorem)
    }

    pub fn satisfies(&self, theorem: TheoremId) -> bool {
        self.witnesses.iter().any(|w| w.theorem == theorem)
    }

    pub fn rejection(&self, theorem: TheoremId) -> Option<&str> {
        self.rejections.iter().find(|(id, _)| *id == theorem).map(|(_, r)| r.as_str())
    }
}

fn is_zero(c: Complex) -> bool {
    c.re == 0.0 && c.im == 0.0
}

/// Reduces an angle into `(-π, π]`.
fn wrap_angle(x: f64) -> f64 {
    if x > -PI && x <= PI {
        return x;
    }
    let mut r = libm::fmod(x, TAU);
    if r <= -PI {
        r += TAU;
    } else if r > PI {
        r -= TAU;
    }
    r
}

/// Shortest-arc distance between two angles, in `[0, π]`.
pub fn angular_distance(a: f64, b: f64) -> f64 {
    let d = (wrap_angle(a) - wrap_angle(b)).abs();
    if d > PI {
        TAU - d
    } else {
        d
    }
}

fn moduli_nondecreasing_from_positive(p: &Polynomial) -> bool {
    let mut prev = 0.0;
    for (j, a) in p.coeffs().iter().enumerate() {
        let m = a.norm();
        if j == 0 && m <= 0.0 {
            return false;
        }
        if m < prev {
            return false;
        }
        prev = m;
    }
    true
}

/// `0 < a_0 <= a_1 <= ... <= a_n` with every coefficient real.
pub fn check_enestrom_kakeya(p: &Polynomial) -> bool {
    let c = p.coeffs();
    c.iter().all(|a| a.im == 0.0) && c[0].re > 0.0 && c.windows(2).all(|w| w[0].re <= w[1].re)
}

/// Arg-cone hypothesis: every `a_j` nonzero with `|arg a_j - β| <= α <= π/2`,
/// and `0 < |a_0| <= |a_1| <= ... <= |a_n|`.
pub fn check_arg_condition(p: &Polynomial, alpha: f64, beta: f64) -> bool {
    if !(0.0..=FRAC_PI_2).contains(&alpha) || !beta.is_finite() {
        return false;
    }
    if p.coeffs().iter().any(|&a| is_zero(a)) {
        return false;
    }
    moduli_nondecreasing_from_positive(p) && p.coeffs().iter().all(|a| angular_distance(a.arg(), beta) <= alpha)
}

/// Smallest cone `(α, β)` containing every coefficient argument, if the
/// moduli are nondecreasing and the cone half-width is at most π/2.
///
/// The minimal arc is the complement of the largest gap between sorted
/// arguments. α is then recomputed as the largest angular distance to β so
/// that `check_arg_condition(p, α, β)` accepts the result exactly.
pub fn find_arg_params(p: &Polynomial) -> Option<(f64, f64)> {
    if p.coeffs().iter().any(|&a| is_zero(a)) || !moduli_nondecreasing_from_positive(p) {
        return None;
    }
    let mut args: Vec<f64> = p.coeffs().iter().map(|a| a.arg()).collect();
    args.sort_by(f64::total_cmp);
    let last = args.len() - 1;

    // The wrap-around gap is tried first so ties prefer a non-wrapping arc.
    let mut best_gap = args[0] + TAU - args[last];
    let mut arc_start = args[0];
    let mut arc_len = args[last] - args[0];
    for i in 0..last {
        let gap = args[i + 1] - args[i];
        if gap > best_gap {
            best_gap = gap;
            arc_start = args[i + 1];
            arc_len = TAU - gap;
        }
    }
    let beta = wrap_angle(arc_start + 0.5 * arc_len);
    let alpha = args.iter().map(|&a| angular_distance(a, beta)).fold(0.0, f64::max);
    (alpha <= FRAC_PI_2).then_some((alpha, beta))
}

/// `0 < α_0 <= α_1 <= ... <= α_n` on the real parts.
pub fn check_real_increasing(p: &Polynomial) -> bool {
    let c = p.coeffs();
    c[0].re > 0.0 && c.windows(2).all(|w| w[0].re <= w[1].re)
}

/// The unimodal chain
/// `t + α_n <= α_{n-1} <= ... <= α_λ >= ... >= α_1 >= α_0 - s`.
///
/// At `λ = 0` the chain is `t + α_n <= α_{n-1} <= ... <= α_0` and `s` must be
/// zero; at `λ = n` it is `α_0 - s <= α_1 <= ... <= α_n` and `t` must be zero.
/// A constant polynomial satisfies the empty chain at `λ = 0` with `t = s = 0`.
pub fn check_t2_chain(p: &Polynomial, lambda: usize, t: f64, s: f64) -> bool {
    let n = p.degree();
    if is_zero(p.constant_term()) || lambda > n || !t.is_finite() || !s.is_finite() {
        return false;
    }
    let a: Vec<f64> = p.real_parts().collect();
    if n == 0 {
        return t == 0.0 && s == 0.0;
    }
    if lambda == 0 {
        // a_{n-1} <= ... <= a_0
        return s == 0.0 && t <= a[n - 1] - a[n] && (1..n).all(|j| a[j] <= a[j - 1]);
    }
    if lambda == n {
        // a_1 <= ... <= a_n
        return t == 0.0 && a[0] - a[1] <= s && (2..=n).all(|j| a[j - 1] <= a[j]);
    }
    t <= a[n - 1] - a[n] && a[0] - a[1] <= s && interior_unimodal(&a, lambda)
}

/// `α_1 <= ... <= α_λ >= ... >= α_{n-1}` for `1 <= λ <= n-1`.
fn interior_unimodal(a: &[f64], lambda: usize) -> bool {
    let n = a.len() - 1;
    (2..=lambda).all(|j| a[j - 1] <= a[j]) && (lambda..n - 1).all(|j| a[j] >= a[j + 1])
}

/// All `λ` for which the chain can hold, each with the `(t, s)` that
/// minimises `M_2`: the largest admissible non-positive `t` (or 0) and the
/// smallest admissible non-negative `s` (or 0).
pub fn find_t2_witnesses(p: &Polynomial) -> Vec<Witness> {
    let n = p.degree();
    if is_zero(p.constant_term()) {
        return Vec::new();
    }
    if n == 0 {
        return alloc::vec![Witness::chain(TheoremId::Thm2, 0, 0.0, 0.0)];
    }
    let a: Vec<f64> = p.real_parts().collect();
    let t_opt = f64::min(0.0, a[n - 1] - a[n]);
    let s_opt = f64::max(0.0, a[0] - a[1]);

    let mut out = Vec::new();
    for lambda in 0..=n {
        let (admissible, t, s) = if lambda == 0 {
            ((1..n).all(|j| a[j] <= a[j - 1]), t_opt, 0.0)
        } else if lambda == n {
            ((2..=n).all(|j| a[j - 1] <= a[j]), 0.0, s_opt)
        } else {
            (interior_unimodal(&a, lambda), t_opt, s_opt)
        };
        if admissible {
            out.push(Witness::chain(TheoremId::Thm2, lambda, t, s));
        }
    }
    out
}

/// Re-validates a witness against the checker for its theorem.
pub fn validate(p: &Polynomial, w: &Witness) -> bool {
    let n = p.degree();
    let chain = |lambda_ok: &dyn Fn(usize) -> bool, need_t0: bool| match (w.lambda, w.t, w.s) {
        (Some(l), Some(t), Some(s)) => {
            lambda_ok(l)
                && (!need_t0 || t == 0.0)
                && (w.theorem == TheoremId::Thm2 || s == 0.0)
                && check_t2_chain(p, l, t, s)
        }
        _ => false,
    };
    match w.theorem {
        TheoremId::EkA | TheoremId::ThmB => check_enestrom_kakeya(p),
        TheoremId::ThmC | TheoremId::ThmE => match (w.alpha, w.beta) {
            (Some(alpha), Some(beta)) => check_arg_condition(p, alpha, beta),
            _ => false,
        },
        TheoremId::ThmD | TheoremId::ThmF => check_real_increasing(p),
        TheoremId::Thm2 | TheoremId::Thm1 => chain(&|_| true, false),
        TheoremId::Cor1 => chain(&|_| true, true),
        TheoremId::Cor2 => chain(&|l| l == 0, true),
        TheoremId::Cor3 => chain(&|l| l == n, true),
        TheoremId::Lemma => !is_zero(p.constant_term()),
    }
}

/// Runs every checker; each theorem lands in exactly one of the two lists.
pub fn full_report(p: &Polynomial) -> HypothesisReport {
    let mut report = HypothesisReport::default();
    let n = p.degree();
    let a0_zero = is_zero(p.constant_term());
    let mut reject = |id: TheoremId, reason: String| report.rejections.push((id, reason));
    let mut accepted: Vec<Witness> = Vec::new();

    // Eneström–Kakeya family (A and B share a hypothesis).
    let ek_reason = || -> String {
        let c = p.coeffs();
        if c[0].im != 0.0 || c[0].re <= 0.0 {
            String::from("a_0 not positive real")
        } else if let Some(j) = c.iter().position(|a| a.im != 0.0) {
            format!("a_{j} is not real")
        } else {
            let j = c.windows(2).position(|w| w[0].re > w[1].re).unwrap_or(0);
            format!("a_{} > a_{}", j, j + 1)
        }
    };
    for id in [TheoremId::EkA, TheoremId::ThmB] {
        if check_enestrom_kakeya(p) {
            accepted.push(Witness::plain(id));
        } else {
            reject(id, ek_reason());
        }
    }

    // Arg-cone family.
    let cone = find_arg_params(p);
    for id in [TheoremId::ThmC, TheoremId::ThmE] {
        match cone {
            Some((alpha, beta)) => accepted.push(Witness::arg_cone(id, alpha, beta)),
            None => {
                let reason = if p.coeffs().iter().any(|&a| is_zero(a)) {
                    String::from("a zero coefficient has no argument")
                } else if !moduli_nondecreasing_from_positive(p) {
                    String::from("coefficient moduli are not nondecreasing")
                } else {
                    String::from("coefficient arguments do not fit in a cone of half-width pi/2")
                };
                reject(id, reason);
            }
        }
    }

    // Increasing real parts.
    for id in [TheoremId::ThmD, TheoremId::ThmF] {
        if check_real_increasing(p) {
            accepted.push(Witness::plain(id));
        } else if p.coeffs()[0].re <= 0.0 {
            reject(id, String::from("Re(a_0) is not positive"));
        } else {
            reject(id, String::from("real parts are not nondecreasing"));
        }
    }

    // Unimodal chain family.
    let t2 = find_t2_witnesses(p);
    let chain_reason = |what: &str| -> String {
        if a0_zero {
            String::from("a_0 = 0")
        } else {
            String::from(what)
        }
    };
    let t1: Vec<Witness> = t2.iter().filter(|w| w.s == Some(0.0)).map(|w| w.relabel(TheoremId::Thm1)).collect();
    if t1.is_empty() {
        reject(TheoremId::Thm1, chain_reason("no peak index admits the chain with s = 0"));
    }
    accepted.extend(t1);
    if t2.is_empty() {
        reject(TheoremId::Thm2, chain_reason("real parts are not unimodal for any peak index"));
    }
    accepted.extend(t2.iter().copied());

    let cor1: Vec<Witness> =
        t2.iter().filter(|w| w.s == Some(0.0) && w.t == Some(0.0)).map(|w| w.relabel(TheoremId::Cor1)).collect();
    if cor1.is_empty() {
        reject(TheoremId::Cor1, chain_reason("no peak index admits the chain with t = s = 0"));
    }
    accepted.extend(cor1);

    let cor2 = t2.iter().find(|w| w.lambda == Some(0) && w.t == Some(0.0)).map(|w| w.relabel(TheoremId::Cor2));
    match cor2 {
        Some(w) => accepted.push(w),
        None => reject(TheoremId::Cor2, chain_reason("real parts are not nonincreasing")),
    }
    let cor3 = t2.iter().find(|w| w.lambda == Some(n) && w.s == Some(0.0)).map(|w| w.relabel(TheoremId::Cor3));
    match cor3 {
        Some(w) => accepted.push(w),
        None => reject(TheoremId::Cor3, chain_reason("real parts are not nondecreasing")),
    }

    if a0_zero {
        reject(TheoremId::Lemma, String::from("a_0 = 0, so (1 - z) p(z) vanishes at the centre"));
    } else {
        accepted.push(Witness::plain(TheoremId::Lemma));
    }

    report.witnesses = accepted;
    report
}
