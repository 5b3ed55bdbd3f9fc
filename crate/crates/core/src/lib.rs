//! Zeta functions of Hurwitz-Igusa type for F₁-schemes.
//!
//! An F₁-scheme is modelled here by what its zeta theory actually consumes: a
//! finite list of points, each carrying a finitely generated abelian unit
//! group `Z^n × Γ`. The library evaluates the deformed multivariable zeta
//! function of Hurwitz-Igusa type
//!
//! ```text
//! ζ^HI(s₁,…,s_r; a₁,…,a_r; w; X)
//!   = Σ_{p∈X} Σ_{m₁,…,m_r ≥ 1} |Hom(O×_{X,p}, Z/m₁⋯m_rZ)|^w ∏ᵢ (mᵢ-1+aᵢ)^{-sᵢ}
//! ```
//!
//! through its explicit Hurwitz-zeta presentation (valid for `w ∈ ℕ`, or for
//! all complex `w` when every `aᵢ = 1`), and extracts the exact rational
//! pole-divisor data of the deformed modified Soulé zeta function whose
//! logarithmic derivative is `-ζ^HI(s+1; 2; w; X)` up to a constant.
//!
//! Everything that is exact stays exact: Hom counts, group exponents, the
//! μ-invariant `μ(A) = Σ_{a∈A} 1/|a|`, binomial coefficients and pole
//! exponents are arbitrary-precision rationals. Floating point enters only in
//! the numerical Hurwitz-zeta layer and the series oracles, each of which
//! reports or honours an explicit tolerance.
//!
//! Module map:
//!
//! * [`abelian`] — invariant factors, Hom counting, μ-invariant (with a
//!   brute-force oracle), point counting `#X(F_{1^m})`.
//! * [`hurwitz`] — Bernoulli numbers/polynomials and the Hurwitz zeta function
//!   `ζ(s, q)` by Euler-Maclaurin continuation with a certified remainder.
//! * [`zeta`] — the closed-form evaluator for `ζ^HI`, the Igusa
//!   specialization, the modified Soulé series, and two independent oracles
//!   (truncated defining series with rigorous tail bound; truncated Euler
//!   product).
//! * [`poles`] — exact pole locations, orders and residues, plus numerical
//!   residue extraction for cross-validation.
//! * [`verify`] — runnable check suites mirroring the library's invariants,
//!   used by the CLI `verify` command.
//!
//! # Example
//!
//! The disjoint union of the multiplicative group scheme (unit group `Z`)
//! and the point with unit group `Z/2`:
//!
//! ```
//! use f1zeta::abelian::{F1Scheme, FgAbelianGroup, FiniteAbelianGroup, SchemePoint};
//! use f1zeta::{poles, zeta, Complex64};
//!
//! let mu2 = FiniteAbelianGroup::from_moduli(&[2])?;
//! assert_eq!(mu2.mu().to_string(), "3/2"); // the rationality obstruction
//!
//! let scheme = F1Scheme::new(vec![
//!     SchemePoint::new("gm", FgAbelianGroup::free(1)),
//!     SchemePoint::new("mu2", FgAbelianGroup::finite(mu2)),
//! ])?;
//!
//! // Deformed Igusa zeta at s = 4, w = 1: ζ(3) + (17/16)·ζ(4).
//! let value = zeta::igusa(
//!     &[Complex64::new(4.0, 0.0)],
//!     Complex64::new(1.0, 0.0),
//!     1e-12,
//!     &scheme,
//! )?;
//! assert!((value.re - 2.3520253389776782).abs() < 1e-10);
//!
//! // Exact pole divisor of the modified Soulé zeta function at w = 1:
//! // order -1/2 at s = 0 (the +1 from gm cancels against -3/2 from mu2)
//! // and -1 at s = 1.
//! let divisor = poles::pole_divisor(&scheme, 1)?;
//! assert_eq!(divisor[0].exponent.to_string(), "-1/2");
//! assert_eq!(divisor[1].exponent.to_string(), "-1");
//! # Ok::<(), f1zeta::ZetaError>(())
//! ```

#![forbid(unsafe_code)]

pub mod abelian;
pub mod hurwitz;
pub mod poles;
pub mod verify;
pub mod zeta;

mod combin;
mod error;
mod summation;

pub use error::{Result, ZetaError};

/// Exact rational number (arbitrary precision, always reduced, denominator > 0).
pub type Rational = num_rational::BigRational;

pub use num_complex::Complex64;
