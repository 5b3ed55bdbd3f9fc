//! The Hurwitz zeta function `ζ(s, q) = Σ_{n≥0} (n+q)^{-s}` and Bernoulli
//! machinery.
//!
//! Evaluation uses Euler-Maclaurin analytic continuation: a direct sum of the
//! first `N` terms, the integral term `(N+q)^{1-s}/(s-1)`, the half term
//! `(N+q)^{-s}/2`, and `J` Bernoulli correction terms
//!
//! ```text
//! Σ_{j=1}^{J}  B_{2j}/(2j)! · (s)_{2j-1} · (N+q)^{-s-2j+1},
//! ```
//!
//! with `(s)_k` the rising factorial. The shift `N` is chosen adaptively so
//! that the rigorous remainder bound
//!
//! ```text
//! |R_J| ≤ |B_{2J}|/(2J)! · |(s)_{2J}| · e^{|Im s|·θ_N} · (N+Re q)^{1-Re s-2J} / (Re s + 2J - 1),
//! θ_N = atan(|Im q| / (N + Re q)),
//! ```
//!
//! (integral comparison of the periodic-Bernoulli remainder) drops below the
//! configured tolerance. Valid for any complex `s ≠ 1` and complex `q` with
//! `Re(q) > 0`; powers are principal-branch, well defined because
//! `Re(n+q) > 0` throughout.
//!
//! The stated tolerance controls the Euler-Maclaurin truncation error; the
//! binary64 roundoff floor is additionally proportional to the largest
//! intermediate magnitude, which grows like `(N+Re q)^{-Re s}` for
//! `Re s < 0`. For `Re s < 0` the evaluator therefore ignores the configured
//! shift floor and instead minimizes `N` (starting at 1), choosing whichever
//! Bernoulli order up to the table limit certifies the bound first — where
//! "certifies" means reaching `max(tolerance, roundoff floor at N)`, since
//! certifying truncation far below the cancellation roundoff of a larger
//! shift only loses accuracy. The resulting `(N, J)` choice and cancellation
//! scale are exposed through [`evaluation_plan`] so callers can decide
//! whether an absolute tolerance is meaningful at their arguments.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use crate::combin::{binomial, factorial};
use crate::error::{Result, ZetaError};
use crate::summation::KahanSum;
use crate::Rational;

/// Largest Bernoulli index served by [`bernoulli`].
pub const MAX_BERNOULLI_INDEX: u32 = 64;

/// Largest degree served by [`bernoulli_poly`].
pub const MAX_BERNOULLI_POLY_DEGREE: u32 = 32;

/// Evaluation requests with `|s - 1|` at or below this radius fail loudly
/// rather than return huge values near the pole.
pub const POLE_EXCLUSION_RADIUS: f64 = 1e-9;

/// Tuning knobs for the Euler-Maclaurin evaluation.
#[derive(Clone, Debug)]
pub struct HurwitzConfig {
    /// Target absolute tolerance for the certified truncation error.
    pub tolerance: f64,
    /// Number of Bernoulli correction terms `J` used when `Re s ≥ 0`. For
    /// `Re s < 0` the order is chosen per-evaluation (up to the table limit)
    /// to minimize the shift, hence the cancellation scale.
    pub bernoulli_terms: u32,
    /// Floor for the adaptive shift `N` when `Re s ≥ 0`.
    pub shift_floor: u32,
}

impl Default for HurwitzConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-12,
            bernoulli_terms: 15,
            shift_floor: 10,
        }
    }
}

impl HurwitzConfig {
    pub fn with_tolerance(tolerance: f64) -> Self {
        Self {
            tolerance,
            ..Self::default()
        }
    }
}

fn bernoulli_table() -> &'static Vec<Rational> {
    static TABLE: OnceLock<Vec<Rational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = MAX_BERNOULLI_INDEX as usize;
        let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
        b.push(Rational::one());
        for k in 1..=n as u64 {
            // Σ_{i=0}^{k} C(k+1, i) B_i = 0  ⇒  B_k = -(Σ_{i<k} C(k+1,i) B_i)/(k+1)
            let mut acc = Rational::zero();
            for (i, bi) in b.iter().enumerate() {
                let c = BigInt::from(binomial(k + 1, i as u64));
                acc += Rational::from_integer(c) * bi;
            }
            b.push(-acc / Rational::from_integer(BigInt::from(k + 1)));
        }
        b
    })
}

/// `B_{2j}/(2j)!` as f64, for `j = 0..=MAX_BERNOULLI_INDEX/2`.
fn euler_maclaurin_coeffs() -> &'static Vec<f64> {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let b = bernoulli_table();
        (0..=MAX_BERNOULLI_INDEX as usize / 2)
            .map(|j| {
                let fact = Rational::from_integer(BigInt::from(factorial(2 * j as u64)));
                (&b[2 * j] / fact)
                    .to_f64()
                    .expect("coefficient fits in f64")
            })
            .collect()
    })
}

/// Exact Bernoulli number `B_k` (convention `B₁ = -1/2`), `k ≤ 64`.
pub fn bernoulli(k: u32) -> Result<Rational> {
    if k > MAX_BERNOULLI_INDEX {
        return Err(ZetaError::OutOfRange(format!(
            "Bernoulli index {k} exceeds table limit {MAX_BERNOULLI_INDEX}"
        )));
    }
    Ok(bernoulli_table()[k as usize].clone())
}

/// Bernoulli polynomial `B_k(x) = Σ_{i=0}^{k} C(k,i) B_i x^{k-i}`, `k ≤ 32`.
pub fn bernoulli_poly(k: u32, x: Complex64) -> Result<Complex64> {
    if k > MAX_BERNOULLI_POLY_DEGREE {
        return Err(ZetaError::OutOfRange(format!(
            "Bernoulli polynomial degree {k} exceeds limit {MAX_BERNOULLI_POLY_DEGREE}"
        )));
    }
    if !x.is_finite() {
        return Err(ZetaError::Domain("x must be finite".to_owned()));
    }
    let b = bernoulli_table();
    // Horner over descending powers; coefficient of x^{k-i} is C(k,i)·B_i.
    let mut acc = Complex64::zero();
    for i in 0..=k as u64 {
        let coeff = Rational::from_integer(BigInt::from(binomial(k as u64, i))) * &b[i as usize];
        acc = acc * x + coeff.to_f64().expect("coefficient fits in f64");
    }
    if !acc.is_finite() {
        return Err(ZetaError::Convergence(format!(
            "B_{k}(x) overflowed at x = {x}"
        )));
    }
    Ok(acc)
}

/// Remainder bound after `terms` correction terms at shift `n`; rigorous for
/// `Re s + 2·terms > 1`.
fn remainder_bound(s: Complex64, q: Complex64, n: u64, terms: u32) -> f64 {
    let sigma = s.re;
    let two_j = 2 * terms as i32;
    let zre = n as f64 + q.re;
    let theta = (q.im.abs() / zre).atan();
    let mut rising = 1.0f64;
    for i in 0..two_j {
        rising *= (s + i as f64).norm();
    }
    let coeff = euler_maclaurin_coeffs()[terms as usize].abs();
    coeff * rising * (s.im.abs() * theta).exp() * zre.powf(1.0 - sigma - two_j as f64)
        / (sigma + two_j as f64 - 1.0)
}

/// The smallest certified bound at shift `n` over all admissible Bernoulli
/// orders, with its argmin.
fn best_terms_at_shift(s: Complex64, q: Complex64, n: u64, min_terms: u32) -> (u32, f64) {
    let sigma = s.re;
    let zre = n as f64 + q.re;
    let theta = (q.im.abs() / zre).atan();
    let arg_factor = (s.im.abs() * theta).exp();
    let coeffs = euler_maclaurin_coeffs();
    let mut rising = 1.0f64;
    let mut best = (min_terms, f64::INFINITY);
    for j in 1..=MAX_BERNOULLI_INDEX / 2 {
        rising *= (s + (2 * j - 2) as f64).norm();
        rising *= (s + (2 * j - 1) as f64).norm();
        if j < min_terms {
            continue;
        }
        let bound =
            coeffs[j as usize].abs() * rising * arg_factor * zre.powf(1.0 - sigma - 2.0 * j as f64)
                / (sigma + 2.0 * j as f64 - 1.0);
        if bound < best.1 {
            best = (j, bound);
        }
    }
    best
}

/// The shift `N`, Bernoulli order `J`, and cancellation scale the evaluator
/// will use at `(s, q)`.
#[derive(Clone, Copy, Debug)]
pub struct EvalPlan {
    /// Number of directly summed leading terms.
    pub shift: u64,
    /// Number of Bernoulli correction terms.
    pub terms: u32,
    /// Magnitude of the largest intermediate (≥ 1). Binary64 roundoff on the
    /// returned value is proportional to this; an absolute tolerance below
    /// `magnitude × 1e-13` is not representable.
    pub magnitude: f64,
}

fn validate(s: Complex64, q: Complex64, cfg: &HurwitzConfig) -> Result<()> {
    if !s.is_finite() || !q.is_finite() {
        return Err(ZetaError::Domain("s and q must be finite".to_owned()));
    }
    if !cfg.tolerance.is_finite() || cfg.tolerance <= 0.0 {
        return Err(ZetaError::InvalidArgument(
            "tolerance must be positive and finite".to_owned(),
        ));
    }
    if q.re <= 0.0 {
        return Err(ZetaError::Domain(format!(
            "hurwitz_zeta requires Re(q) > 0, got Re(q) = {}",
            q.re
        )));
    }
    if (s - Complex64::one()).norm() <= POLE_EXCLUSION_RADIUS {
        return Err(ZetaError::Pole(format!(
            "s = {s} is within {POLE_EXCLUSION_RADIUS} of the pole at s = 1"
        )));
    }
    Ok(())
}

/// Choose the shift and Bernoulli order for `(s, q)` and report the
/// cancellation scale, without evaluating.
pub fn evaluation_plan(s: Complex64, q: Complex64, cfg: &HurwitzConfig) -> Result<EvalPlan> {
    validate(s, q, cfg)?;
    let sigma = s.re;
    // The remainder integral needs Re s + 2J ≥ 2.
    let needed = if sigma < 2.0 {
        ((2.0 - sigma) / 2.0).ceil() as u32
    } else {
        1
    };
    if 2 * needed > MAX_BERNOULLI_INDEX {
        return Err(ZetaError::Convergence(format!(
            "Re(s) = {sigma} requires more than {} Bernoulli correction terms",
            MAX_BERNOULLI_INDEX / 2
        )));
    }
    const MAX_SHIFT: u64 = 10_000_000;
    let (shift, terms) = if sigma >= 0.0 {
        // Fixed order, shift grown from the configured floor and the
        // asymptotic onset 2π(N + Re q) ≳ |s| + 2J.
        let terms = cfg.bernoulli_terms.clamp(needed, MAX_BERNOULLI_INDEX / 2);
        let mut n = (((s.norm() + 2.0 * terms as f64) / std::f64::consts::TAU) - q.re)
            .ceil()
            .max(1.0) as u64;
        n = n.max(cfg.shift_floor as u64).max(s.im.abs().ceil() as u64);
        loop {
            if remainder_bound(s, q, n, terms) <= cfg.tolerance {
                break (n, terms);
            }
            n = n.saturating_mul(2);
            if n > MAX_SHIFT {
                return Err(ZetaError::Convergence(format!(
                    "tolerance {} not certified within shift budget at s = {s}, q = {q}",
                    cfg.tolerance
                )));
            }
        }
    } else {
        // Negative Re s: every extra shift term inflates the cancellation
        // scale by (N + Re q)^{-Re s}, so minimize N and spend Bernoulli
        // terms instead. Certifying truncation far below the binary64
        // roundoff floor at a larger shift only loses accuracy, so the
        // acceptance threshold is max(tolerance, roundoff floor at N).
        let arg_factor = (s.im.abs() * (q.im.abs() / q.re).atan().abs()).exp();
        let mut n = 1u64;
        loop {
            let (terms, bound) = best_terms_at_shift(s, q, n, needed);
            let floor = (n as f64 + q.re).powf(-sigma) * arg_factor * ROUNDOFF_PER_MAGNITUDE;
            if bound <= cfg.tolerance.max(floor) {
                break (n, terms);
            }
            n = n.saturating_mul(2);
            if n > MAX_SHIFT {
                return Err(ZetaError::Convergence(format!(
                    "tolerance {} not certified within shift budget at s = {s}, q = {q}",
                    cfg.tolerance
                )));
            }
        }
    };
    let arg_factor = (s.im.abs() * (q.im.abs() / q.re).atan().abs()).exp();
    let magnitude = q
        .norm()
        .powf(-sigma)
        .max((shift as f64 + q.re).powf(-sigma))
        .max(1.0)
        * arg_factor;
    Ok(EvalPlan {
        shift,
        terms,
        magnitude,
    })
}

/// Binary64 roundoff per unit of intermediate magnitude (a few dozen
/// operations at machine epsilon).
const ROUNDOFF_PER_MAGNITUDE: f64 = 1e-14;

/// Hurwitz zeta `ζ(s, q)` for complex `s ≠ 1` and complex `q`, `Re(q) > 0`.
pub fn hurwitz_zeta(s: Complex64, q: Complex64, cfg: &HurwitzConfig) -> Result<Complex64> {
    let plan = evaluation_plan(s, q, cfg)?;
    let n = plan.shift;
    let terms = plan.terms;

    // Direct sum of the N leading terms.
    let mut sum = KahanSum::new();
    for k in 0..n {
        sum.add((q + k as f64).powc(-s));
    }
    // Integral and half terms at the shift point z = N + q.
    let z = q + n as f64;
    let z_pow = z.powc(-s);
    sum.add(z * z_pow / (s - 1.0)); // z^{1-s}/(s-1)
    sum.add(z_pow * 0.5);
    // Bernoulli corrections.
    let coeffs = euler_maclaurin_coeffs();
    let z_inv = z.finv();
    let z_inv2 = z_inv * z_inv;
    let mut rising = s; // (s)_1
    let mut tail_pow = z_pow * z_inv; // z^{-s-1}
    for j in 1..=terms {
        sum.add(tail_pow * rising * coeffs[j as usize]);
        rising *= (s + (2 * j - 1) as f64) * (s + (2 * j) as f64);
        tail_pow *= z_inv2;
    }

    let value = sum.value();
    if !value.is_finite() {
        return Err(ZetaError::Convergence(format!(
            "evaluation overflowed at s = {s}, q = {q}"
        )));
    }
    Ok(value)
}

/// Riemann zeta `ζ(s) = ζ(s, 1)`.
pub fn riemann_zeta(s: Complex64, cfg: &HurwitzConfig) -> Result<Complex64> {
    hurwitz_zeta(s, Complex64::one(), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rat(num: i64, den: i64) -> Rational {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0).unwrap(), rat(1, 1));
        assert_eq!(bernoulli(1).unwrap(), rat(-1, 2));
        assert_eq!(bernoulli(2).unwrap(), rat(1, 6));
        assert_eq!(bernoulli(3).unwrap(), rat(0, 1));
        assert_eq!(bernoulli(4).unwrap(), rat(-1, 30));
        assert_eq!(bernoulli(12).unwrap(), rat(-691, 2730));
        assert!(bernoulli(65).is_err());
    }

    #[test]
    fn bernoulli_poly_values() {
        let one = bernoulli_poly(0, c(3.7, -2.0)).unwrap();
        assert!((one - c(1.0, 0.0)).norm() < 1e-15);
        // B₁(x) = x - 1/2 vanishes at the symmetry point.
        let b1 = bernoulli_poly(1, c(0.5, 0.0)).unwrap();
        assert!(b1.norm() < 1e-15);
        // B₂(0) = 1/6.
        let b2 = bernoulli_poly(2, c(0.0, 0.0)).unwrap();
        assert!((b2 - c(1.0 / 6.0, 0.0)).norm() < 1e-15);
        assert!(bernoulli_poly(33, c(0.0, 0.0)).is_err());
    }

    #[test]
    fn zeta_two() {
        let cfg = HurwitzConfig::default();
        let v = riemann_zeta(c(2.0, 0.0), &cfg).unwrap();
        assert!((v.re - 1.6449340668482264).abs() < 1e-12, "got {v}");
        assert!(v.im.abs() < 1e-14);
    }

    #[test]
    fn zeta_four_and_zero() {
        let cfg = HurwitzConfig::default();
        let v4 = riemann_zeta(c(4.0, 0.0), &cfg).unwrap();
        assert!((v4.re - 1.0823232337111382).abs() < 1e-12);
        let v0 = riemann_zeta(c(0.0, 0.0), &cfg).unwrap();
        assert!((v0.re + 0.5).abs() < 1e-12);
    }

    #[test]
    fn zeta_negative_one_is_minus_twelfth() {
        let cfg = HurwitzConfig::default();
        let v = hurwitz_zeta(c(-1.0, 0.0), c(1.0, 0.0), &cfg).unwrap();
        assert!((v.re + 1.0 / 12.0).abs() < 1e-13, "got {v}");
    }

    #[test]
    fn zeta_at_half_shift() {
        // ζ(3, 1/2) = (2³ - 1) ζ(3)
        let cfg = HurwitzConfig::default();
        let v = hurwitz_zeta(c(3.0, 0.0), c(0.5, 0.0), &cfg).unwrap();
        assert!((v.re - 8.41439832211716).abs() < 1e-10, "got {v}");
    }

    #[test]
    fn complex_arguments_recurrence() {
        let cfg = HurwitzConfig::default();
        let s = c(2.5, 3.0);
        let q = c(0.8, 0.4);
        let lhs = hurwitz_zeta(s, q, &cfg).unwrap();
        let rhs = hurwitz_zeta(s, q + 1.0, &cfg).unwrap() + q.powc(-s);
        assert!((lhs - rhs).norm() < 1e-11, "lhs {lhs} rhs {rhs}");
    }

    #[test]
    fn domain_and_pole_errors() {
        let cfg = HurwitzConfig::default();
        assert!(matches!(
            hurwitz_zeta(c(2.0, 0.0), c(0.0, 3.0), &cfg),
            Err(ZetaError::Domain(_))
        ));
        assert!(matches!(
            hurwitz_zeta(c(1.0 + 1e-12, 0.0), c(1.0, 0.0), &cfg),
            Err(ZetaError::Pole(_))
        ));
    }

    #[test]
    fn near_pole_residue() {
        let cfg = HurwitzConfig::default();
        for q in [c(1.0, 0.0), c(1.0 / 3.0, 0.0), c(2.5, 0.0)] {
            let s = c(1.0 + 1e-7, 0.0);
            let v = hurwitz_zeta(s, q, &cfg).unwrap();
            let scaled = (s - 1.0) * v;
            assert!((scaled - c(1.0, 0.0)).norm() < 1e-6, "q = {q}: {scaled}");
        }
    }
}
