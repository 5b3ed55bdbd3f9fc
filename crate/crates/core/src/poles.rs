//! Exact pole divisor of the deformed modified Soulé zeta function.
//!
//! With `-D(s; w) = -ζ^HI(s+1; 2; w; X)` the logarithmic derivative of
//! `ζ^disc_X(s; w)` up to an additive constant, the binomial presentation
//! shows that the only singularities of `-D` are simple poles at the integers
//! `s = j`, `0 ≤ j ≤ n(p)·w`, with exact rational residues
//!
//! ```text
//! order_at(j) = Σ_{p : n(p)w ≥ j}  -C(n(p)w, j) (-1)^{n(p)w-j} μ(Γ_p^w),
//! ```
//!
//! which are the orders of vanishing (positive) or pole orders (negative) of
//! `ζ^disc_X` itself:
//!
//! ```text
//! ζ^disc_X(s; w) = e^{h(s;w)} ∏_j (s-j)^{order_at(j)}.
//! ```
//!
//! The entire prefactor `h` is not determined by the series and is not
//! represented here: this module reports singular data only, and
//! [`residue_numeric`] cross-checks each exact exponent against a Richardson
//! extrapolation of `(s-j)·(-D(s; w))`.
//!
//! Since `μ(Γ_p^w)` is rational but not integral in general, non-integer
//! exponents can occur; [`rationality_report`] surfaces that obstruction
//! point by point.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::abelian::{F1Scheme, SchemePoint};
use crate::combin::binomial;
use crate::error::{Result, ZetaError};
use crate::zeta::modified_soule_series;
use crate::Rational;

/// One candidate pole location of `ζ^disc_X(s; w)` with its exact exponent.
#[derive(Clone, Debug, PartialEq)]
pub struct PoleDatum {
    /// Integer location `s = j`.
    pub location: u32,
    /// Order of `ζ^disc_X` at `s = j`: the residue of its log-derivative.
    /// Negative means a pole of that (possibly fractional) order.
    pub exponent: Rational,
    /// Per-point contribution; zero whenever `j > n(p)·w`. Sums to `exponent`.
    pub contributions: Vec<(String, Rational)>,
    /// True when the contributions cancel exactly across points.
    pub cancelled: bool,
}

fn require_positive_w(w: u32) -> Result<()> {
    if w == 0 {
        return Err(ZetaError::InvalidArgument(
            "pole analysis requires w ≥ 1".to_owned(),
        ));
    }
    Ok(())
}

/// Candidate pole locations `{0, 1, …, max_p n(p)·w}`; empty for the empty
/// scheme.
pub fn pole_candidates(scheme: &F1Scheme, w: u32) -> Result<Vec<u32>> {
    require_positive_w(w)?;
    let max = scheme
        .points()
        .iter()
        .map(|p| p.units.rank() as u64 * w as u64)
        .max();
    match max {
        None => Ok(Vec::new()),
        Some(m) => {
            if m > u32::MAX as u64 {
                return Err(ZetaError::Resource(format!(
                    "candidate range 0..={m} is too large"
                )));
            }
            Ok((0..=m as u32).collect())
        }
    }
}

fn point_contribution(point: &SchemePoint, j: u32, w: u32) -> Result<Rational> {
    let nw = point.units.rank() as u64 * w as u64;
    if (j as u64) > nw {
        return Ok(Rational::zero());
    }
    let mu = point.units.torsion().mu_power(w)?;
    let binom = Rational::from_integer(BigInt::from(binomial(nw, j as u64)));
    let sign = if (nw - j as u64).is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    };
    Ok(-(binom * sign * mu))
}

/// Exact order of `ζ^disc_X(s; w)` at `s = j` (equivalently, the residue of
/// the log-derivative `-D(s; w)` there).
pub fn order_at(j: u32, w: u32, scheme: &F1Scheme) -> Result<Rational> {
    require_positive_w(w)?;
    let mut total = Rational::zero();
    for point in scheme.points() {
        total += point_contribution(point, j, w)?;
    }
    Ok(total)
}

/// Numerical residue of `-D(s; w)` at `s = j` by Richardson extrapolation of
/// `(s-j)·(-D)` at `s = j + ε` and `s = j + ε/2`; requires `ε ∈ [1e-7, 1e-2]`.
pub fn residue_numeric(j: u32, w: u32, scheme: &F1Scheme, epsilon: f64) -> Result<Complex64> {
    require_positive_w(w)?;
    if !(1e-7..=1e-2).contains(&epsilon) {
        return Err(ZetaError::InvalidArgument(format!(
            "epsilon must lie in [1e-7, 1e-2], got {epsilon}"
        )));
    }
    let w_c = Complex64::new(w as f64, 0.0);
    let scaled = |eps: f64| -> Result<Complex64> {
        let s = Complex64::new(j as f64 + eps, 0.0);
        Ok(-modified_soule_series(s, w_c, scheme)? * eps)
    };
    let coarse = scaled(epsilon)?;
    let fine = scaled(epsilon / 2.0)?;
    // First-order Richardson: the regular part contributes O(ε) to each.
    Ok(fine * 2.0 - coarse)
}

/// The full pole divisor: one [`PoleDatum`] per candidate location, with
/// exact exponents and per-point contributions. Exactly-cancelling locations
/// are kept and flagged rather than dropped.
pub fn pole_divisor(scheme: &F1Scheme, w: u32) -> Result<Vec<PoleDatum>> {
    let mut out = Vec::new();
    for j in pole_candidates(scheme, w)? {
        let contributions: Vec<(String, Rational)> = scheme
            .points()
            .iter()
            .map(|p| Ok((p.name.clone(), point_contribution(p, j, w)?)))
            .collect::<Result<_>>()?;
        let exponent: Rational = contributions.iter().map(|(_, c)| c.clone()).sum();
        let cancelled = exponent.is_zero();
        out.push(PoleDatum {
            location: j,
            exponent,
            contributions,
            cancelled,
        });
    }
    Ok(out)
}

/// Per-point μ-invariant with its integrality flag.
#[derive(Clone, Debug, PartialEq)]
pub struct PointRationality {
    pub point: String,
    pub mu: Rational,
    /// False when μ is a non-integer rational — the local obstruction to
    /// rationality of `ζ^disc_X`.
    pub integral: bool,
}

/// μ(Γ_p) for every point, flagging non-integral values.
pub fn rationality_report(scheme: &F1Scheme) -> Vec<PointRationality> {
    scheme
        .points()
        .iter()
        .map(|p| {
            let mu = p.units.torsion().mu();
            let integral = mu.is_integer();
            PointRationality {
                point: p.name.clone(),
                mu,
                integral,
            }
        })
        .collect()
}

/// Whether every exponent of the `w = 1` pole divisor is an integer.
pub fn rationality_unobstructed(scheme: &F1Scheme) -> Result<bool> {
    Ok(pole_divisor(scheme, 1)?
        .iter()
        .all(|d| d.exponent.is_integer()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{FgAbelianGroup, FiniteAbelianGroup};

    fn rat(num: i64, den: i64) -> Rational {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn group(moduli: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::from_moduli(moduli).unwrap()
    }

    fn gm() -> F1Scheme {
        F1Scheme::new(vec![SchemePoint::new("p0", FgAbelianGroup::free(1))]).unwrap()
    }

    fn cyclic_scheme(n: u64) -> F1Scheme {
        F1Scheme::new(vec![SchemePoint::new(
            "p0",
            FgAbelianGroup::finite(group(&[n])),
        )])
        .unwrap()
    }

    #[test]
    fn candidate_examples() {
        assert_eq!(pole_candidates(&gm(), 1).unwrap(), vec![0, 1]);
        assert_eq!(pole_candidates(&cyclic_scheme(2), 1).unwrap(), vec![0]);
        let rank2 = F1Scheme::new(vec![SchemePoint::new("p0", FgAbelianGroup::free(2))]).unwrap();
        assert_eq!(pole_candidates(&rank2, 2).unwrap(), vec![0, 1, 2, 3, 4]);
        assert!(pole_candidates(&F1Scheme::empty(), 3).unwrap().is_empty());
        assert!(pole_candidates(&gm(), 0).is_err());
    }

    #[test]
    fn order_examples() {
        assert_eq!(order_at(0, 1, &gm()).unwrap(), rat(1, 1));
        assert_eq!(order_at(1, 1, &gm()).unwrap(), rat(-1, 1));
        assert_eq!(order_at(0, 1, &cyclic_scheme(2)).unwrap(), rat(-3, 2));
        assert_eq!(order_at(0, 1, &cyclic_scheme(3)).unwrap(), rat(-5, 3));
        // Beyond every n(p)·w the order is zero.
        assert_eq!(order_at(7, 1, &gm()).unwrap(), rat(0, 1));
    }

    #[test]
    fn divisor_trivial_cases() {
        assert!(pole_divisor(&F1Scheme::empty(), 2).unwrap().is_empty());
        let divisor = pole_divisor(&gm(), 1).unwrap();
        assert_eq!(divisor.len(), 2);
        assert_eq!(
            (divisor[0].location, divisor[0].exponent.clone()),
            (0, rat(1, 1))
        );
        assert_eq!(
            (divisor[1].location, divisor[1].exponent.clone()),
            (1, rat(-1, 1))
        );
    }

    #[test]
    fn divisor_union_example() {
        let union = F1Scheme::new(vec![
            SchemePoint::new("gm", FgAbelianGroup::free(1)),
            SchemePoint::new("z2", FgAbelianGroup::finite(group(&[2]))),
        ])
        .unwrap();
        let divisor = pole_divisor(&union, 1).unwrap();
        assert_eq!(divisor.len(), 2);
        assert_eq!(divisor[0].exponent, rat(-1, 2));
        assert_eq!(divisor[1].exponent, rat(-1, 1));
        assert_eq!(divisor[0].contributions.len(), 2);
        for d in &divisor {
            let sum: Rational = d.contributions.iter().map(|(_, c)| c.clone()).sum();
            assert_eq!(sum, d.exponent);
            assert!(!d.cancelled);
        }
    }

    #[test]
    fn exact_cancellation_is_flagged() {
        // G_m contributes +1 at j = 0, a trivial rank-0 point contributes -1.
        let x = F1Scheme::new(vec![
            SchemePoint::new("gm", FgAbelianGroup::free(1)),
            SchemePoint::new("pt", FgAbelianGroup::free(0)),
        ])
        .unwrap();
        let divisor = pole_divisor(&x, 1).unwrap();
        assert!(divisor[0].exponent.is_zero());
        assert!(divisor[0].cancelled);
        assert_eq!(divisor[1].exponent, rat(-1, 1));
    }

    #[test]
    fn binomial_sum_rule() {
        // Σ_j order_at(j) = -(1-1)^n μ(Γ) = 0 for a single point with n ≥ 1.
        for rank in 1..=3u32 {
            for torsion in [group(&[]), group(&[2]), group(&[3])] {
                let x = F1Scheme::new(vec![SchemePoint::new(
                    "p0",
                    FgAbelianGroup::new(rank, torsion.clone()),
                )])
                .unwrap();
                let total: Rational = pole_candidates(&x, 1)
                    .unwrap()
                    .into_iter()
                    .map(|j| order_at(j, 1, &x).unwrap())
                    .sum();
                assert!(total.is_zero(), "rank {rank}, torsion {torsion:?}");
            }
        }
    }

    #[test]
    fn residue_numeric_matches_exact_for_gm() {
        let gm = gm();
        let r0 = residue_numeric(0, 1, &gm, 1e-5).unwrap();
        assert!((r0.re - 1.0).abs() < 1e-4, "got {r0}");
        let r1 = residue_numeric(1, 1, &gm, 1e-5).unwrap();
        assert!((r1.re + 1.0).abs() < 1e-4, "got {r1}");
        assert!(residue_numeric(0, 1, &gm, 1e-8).is_err());
        assert!(residue_numeric(0, 0, &gm, 1e-5).is_err());
    }

    #[test]
    fn rationality_examples() {
        let x = F1Scheme::new(vec![
            SchemePoint::new("free", FgAbelianGroup::free(2)),
            SchemePoint::new("z2", FgAbelianGroup::finite(group(&[2]))),
            SchemePoint::new("z4", FgAbelianGroup::finite(group(&[4]))),
        ])
        .unwrap();
        let report = rationality_report(&x);
        assert_eq!(report[0].mu, rat(1, 1));
        assert!(report[0].integral);
        assert_eq!(report[1].mu, rat(3, 2));
        assert!(!report[1].integral);
        assert_eq!(report[2].mu, rat(2, 1));
        assert!(report[2].integral);

        assert!(rationality_unobstructed(&gm()).unwrap());
        assert!(!rationality_unobstructed(&cyclic_scheme(2)).unwrap());
    }
}
