//! The deformed multivariable zeta functions of Hurwitz-Igusa type and their
//! oracles.
//!
//! For a finitely generated abelian group `A = Z^n × Γ` with `l` the exponent
//! of `Γ` and `G(m) = |Hom(Γ, Z/mZ)|`, the defining series
//!
//! ```text
//! ζ^HI(s; a; w; A) = Σ_{m₁,…,m_r ≥ 1} |Hom(A, Z/m₁⋯m_rZ)|^w ∏ᵢ (mᵢ-1+aᵢ)^{-sᵢ}
//! ```
//!
//! admits an explicit Hurwitz-zeta presentation obtained by expanding
//! `mᵢ^{nw} = ((mᵢ-1+aᵢ) + (1-aᵢ))^{nw}` binomially and regrouping each
//! residue class `mᵢ ≡ kᵢ (mod l)` into a Hurwitz zeta:
//!
//! * binomial branch, for `w ∈ ℕ`:
//!   `Σ_{j∈{0..nw}^r} ∏ᵢ C(nw,jᵢ)(1-aᵢ)^{nw-jᵢ} · Σ_{k∈{1..l}^r} G(k₁⋯k_r)^w
//!    ∏ᵢ l^{-(sᵢ-jᵢ)} ζ(sᵢ-jᵢ, (kᵢ-1+aᵢ)/l)`
//! * rank-shift branch, for `a₁ = ⋯ = a_r = 1` and any complex `w`:
//!   `Σ_{k∈{1..l}^r} G(k₁⋯k_r)^w ∏ᵢ l^{-(sᵢ-nw)} ζ(sᵢ-nw, kᵢ/l)`,
//!   with `G^w = exp(w·log G)` through the principal (real) logarithm.
//!
//! When both branches apply the binomial branch is used; the two agree
//! because `(1-aᵢ)^{nw-jᵢ}` kills every term except `jᵢ = nw` when `aᵢ = 1`.
//!
//! Two independent oracles cross-validate the presentation: the truncated
//! defining series with a rigorous tail bound ([`direct_series`]), and the
//! truncated multivariable Euler product over primes ([`euler_product`],
//! finite groups only — the shifted series has no Euler product).

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::abelian::{F1Scheme, FgAbelianGroup, FiniteAbelianGroup};
use crate::combin::binomial;
use crate::error::{Result, ZetaError};
use crate::hurwitz::{hurwitz_zeta, HurwitzConfig, POLE_EXCLUSION_RADIUS};
use crate::summation::KahanSum;

/// Default tolerance handed to the Hurwitz-zeta layer.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Absolute tolerance for the numeric admissibility tests "w is a
/// nonnegative integer" and "aᵢ = 1".
pub const ADMISSIBILITY_TOLERANCE: f64 = 1e-12;

/// Evaluation parameters `(s-vector, a-vector, w, tolerance)` for `ζ^HI`.
///
/// Construction enforces `r ≥ 1`, matching vector lengths, finiteness,
/// `Re(aᵢ) > 0` and a positive tolerance. Branch admissibility (`w ∈ ℕ` or
/// all `aᵢ = 1`) is a property of the closed-form evaluators, not of the
/// parameters: the defining-series oracle accepts general `(a, w)`.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalParams {
    s: Vec<Complex64>,
    a: Vec<Complex64>,
    w: Complex64,
    tolerance: f64,
}

impl EvalParams {
    pub fn new(s: Vec<Complex64>, a: Vec<Complex64>, w: Complex64, tolerance: f64) -> Result<Self> {
        if s.is_empty() {
            return Err(ZetaError::InvalidArgument(
                "at least one variable s₁ is required".to_owned(),
            ));
        }
        if s.len() != a.len() {
            return Err(ZetaError::InvalidArgument(format!(
                "s has {} entries but a has {}",
                s.len(),
                a.len()
            )));
        }
        if s.iter().any(|z| !z.is_finite()) || a.iter().any(|z| !z.is_finite()) || !w.is_finite() {
            return Err(ZetaError::InvalidArgument(
                "s, a and w must be finite".to_owned(),
            ));
        }
        if let Some(bad) = a.iter().find(|z| z.re <= 0.0) {
            return Err(ZetaError::Domain(format!(
                "every aᵢ must satisfy Re(aᵢ) > 0, got {bad}"
            )));
        }
        if !tolerance.is_finite() || tolerance <= 0.0 {
            return Err(ZetaError::InvalidArgument(
                "tolerance must be positive and finite".to_owned(),
            ));
        }
        Ok(Self { s, a, w, tolerance })
    }

    /// Parameters with every `aᵢ = 1` (the Igusa specialization).
    pub fn with_unit_a(s: &[Complex64], w: Complex64, tolerance: f64) -> Result<Self> {
        Self::new(s.to_vec(), vec![Complex64::one(); s.len()], w, tolerance)
    }

    pub fn s(&self) -> &[Complex64] {
        &self.s
    }

    pub fn a(&self) -> &[Complex64] {
        &self.a
    }

    pub fn w(&self) -> Complex64 {
        self.w
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Number of variables `r`.
    pub fn r(&self) -> usize {
        self.s.len()
    }

    /// `Some(w)` when `w` is a nonnegative integer within the admissibility
    /// tolerance.
    pub fn integer_w(&self) -> Option<u32> {
        if self.w.im.abs() > ADMISSIBILITY_TOLERANCE {
            return None;
        }
        let rounded = self.w.re.round();
        if (self.w.re - rounded).abs() > ADMISSIBILITY_TOLERANCE || rounded < 0.0 {
            return None;
        }
        Some(rounded as u32)
    }

    /// Whether every `aᵢ` equals 1 within the admissibility tolerance.
    pub fn has_unit_a(&self) -> bool {
        self.a
            .iter()
            .all(|ai| (ai - Complex64::one()).norm() <= ADMISSIBILITY_TOLERANCE)
    }
}

/// Which form of the explicit presentation to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Presentation {
    /// Binomial branch when `w ∈ ℕ`, else rank-shift branch when all `aᵢ = 1`.
    Auto,
    /// The `w ∈ ℕ` binomial expansion in `(1-aᵢ)`.
    Binomial,
    /// The `aᵢ = 1` rank shift `sᵢ ↦ sᵢ - nw`, valid for complex `w`.
    RankShift,
}

/// Truncated-series result with a certified tail bound.
#[derive(Clone, Copy, Debug)]
pub struct SeriesResult {
    pub value: Complex64,
    /// Rigorous upper bound for the modulus of the omitted tail.
    pub tail_bound: f64,
    pub terms_used: u64,
}

/// Visit every multi-index in `{lo..=hi}^dims` in odometer order.
fn for_each_multi_index(dims: usize, lo: u64, hi: u64, mut visit: impl FnMut(&[u64])) {
    let mut idx = vec![lo; dims];
    if dims == 0 {
        visit(&idx);
        return;
    }
    if lo > hi {
        return;
    }
    loop {
        visit(&idx);
        let mut d = 0;
        loop {
            idx[d] += 1;
            if idx[d] <= hi {
                break;
            }
            idx[d] = lo;
            d += 1;
            if d == dims {
                return;
            }
        }
    }
}

/// Hom counts of the torsion part over one period, indexed by `1..=l`.
fn torsion_hom_table(torsion: &FiniteAbelianGroup) -> Vec<u128> {
    let l = torsion.exponent();
    (1..=l)
        .map(|k| torsion.hom_count(k).expect("k ≥ 1"))
        .collect()
}

fn mul_mod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 * b as u128) % modulus as u128) as u64
}

/// `l^{-e}` for positive integer `l` and complex `e`, principal branch.
fn integer_power(l: u64, exponent: Complex64) -> Complex64 {
    (-(exponent) * (l as f64).ln()).exp()
}

/// `ζ^HI(s; a; w; A)` for one group via the explicit presentation
/// (automatic branch selection).
pub fn hurwitz_igusa_group(params: &EvalParams, group: &FgAbelianGroup) -> Result<Complex64> {
    hurwitz_igusa_group_with(params, group, Presentation::Auto)
}

/// `ζ^HI(s; a; w; A)` with an explicit branch choice (used by the
/// branch-agreement checks).
pub fn hurwitz_igusa_group_with(
    params: &EvalParams,
    group: &FgAbelianGroup,
    presentation: Presentation,
) -> Result<Complex64> {
    match presentation {
        Presentation::Auto => {
            if params.integer_w().is_some() {
                binomial_branch(params, group)
            } else if params.has_unit_a() {
                rank_shift_branch(params, group)
            } else {
                Err(ZetaError::Branch(format!(
                    "w = {} is not a nonnegative integer and a ≠ (1,…,1); \
                     no closed-form presentation applies (the defining series \
                     oracle covers this regime)",
                    params.w
                )))
            }
        }
        Presentation::Binomial => binomial_branch(params, group),
        Presentation::RankShift => rank_shift_branch(params, group),
    }
}

fn binomial_branch(params: &EvalParams, group: &FgAbelianGroup) -> Result<Complex64> {
    let w_int = params.integer_w().ok_or_else(|| {
        ZetaError::Branch(format!(
            "binomial presentation requires w ∈ ℕ, got w = {}",
            params.w
        ))
    })?;
    let r = params.r();
    let rank = group.rank() as u64;
    let nw = rank * w_int as u64;
    if nw > u32::MAX as u64 {
        return Err(ZetaError::Resource(format!("rank·w = {nw} is too large")));
    }
    let torsion = group.torsion();
    let l = torsion.exponent();

    // Pole hyperplanes: every sᵢ - jᵢ hits a Hurwitz zeta at its argument,
    // so each must stay away from 1.
    for (i, &si) in params.s.iter().enumerate() {
        for j in 0..=nw {
            if (si - j as f64 - Complex64::one()).norm() <= POLE_EXCLUSION_RADIUS {
                return Err(ZetaError::Pole(format!(
                    "s{} - {j} = {} is within {POLE_EXCLUSION_RADIUS} of 1",
                    i + 1,
                    si - j as f64
                )));
            }
        }
    }

    let cfg = HurwitzConfig::with_tolerance(params.tolerance);
    // Per-coordinate inner sums over the binomial index:
    // Y[i][k-1] = Σ_j C(nw,j)(1-aᵢ)^{nw-j} l^{-(sᵢ-j)} ζ(sᵢ-j, (k-1+aᵢ)/l).
    let l_f = l as f64;
    let mut y = vec![vec![Complex64::zero(); l as usize]; r];
    for (column, (&si, &ai)) in y.iter_mut().zip(params.s.iter().zip(&params.a)) {
        let one_minus_a = Complex64::one() - ai;
        for k in 1..=l {
            let q = (ai + (k - 1) as f64) / l_f;
            let mut acc = KahanSum::new();
            for j in 0..=nw {
                let coeff = binomial_f64(nw, j) * complex_int_pow(one_minus_a, nw - j);
                if coeff.is_zero() {
                    continue;
                }
                let shifted = si - j as f64;
                let zeta = hurwitz_zeta(shifted, q, &cfg)?;
                acc.add(coeff * integer_power(l, shifted) * zeta);
            }
            column[(k - 1) as usize] = acc.value();
        }
    }

    // Hom-count powers over one period, G(k)^w as f64 (w ∈ ℕ here).
    let homs = torsion_hom_table(torsion);
    let g_pow: Vec<f64> = homs
        .iter()
        .map(|&g| (g as f64).powi(w_int as i32))
        .collect();

    let mut total = KahanSum::new();
    for_each_multi_index(r, 1, l, |k| {
        let rep = torsion.periodic_rep(k.iter().fold(1u64, |acc, &ki| mul_mod(acc, ki, l)));
        let mut term = Complex64::new(g_pow[(rep - 1) as usize], 0.0);
        for (column, &ki) in y.iter().zip(k) {
            term *= column[(ki - 1) as usize];
        }
        total.add(term);
    });
    finite_or_convergence(total.value(), params)
}

fn rank_shift_branch(params: &EvalParams, group: &FgAbelianGroup) -> Result<Complex64> {
    if !params.has_unit_a() {
        return Err(ZetaError::Branch(format!(
            "rank-shift presentation requires a = (1,…,1), got a = {:?}",
            params.a
        )));
    }
    let r = params.r();
    let torsion = group.torsion();
    let l = torsion.exponent();
    let shift = params.w * group.rank() as f64;

    for (i, &si) in params.s.iter().enumerate() {
        if (si - shift - Complex64::one()).norm() <= POLE_EXCLUSION_RADIUS {
            return Err(ZetaError::Pole(format!(
                "s{} - n·w = {} is within {POLE_EXCLUSION_RADIUS} of 1",
                i + 1,
                si - shift
            )));
        }
    }

    let cfg = HurwitzConfig::with_tolerance(params.tolerance);
    let l_f = l as f64;
    let mut y = vec![vec![Complex64::zero(); l as usize]; r];
    for (column, &si) in y.iter_mut().zip(&params.s) {
        let shifted = si - shift;
        let scale = integer_power(l, shifted);
        for k in 1..=l {
            let q = Complex64::new(k as f64 / l_f, 0.0);
            column[(k - 1) as usize] = scale * hurwitz_zeta(shifted, q, &cfg)?;
        }
    }

    // G(k)^w = exp(w·log G) with the principal real logarithm of G ≥ 1.
    let homs = torsion_hom_table(torsion);
    let g_pow: Vec<Complex64> = homs
        .iter()
        .map(|&g| (params.w * (g as f64).ln()).exp())
        .collect();

    let mut total = KahanSum::new();
    for_each_multi_index(r, 1, l, |k| {
        let rep = torsion.periodic_rep(k.iter().fold(1u64, |acc, &ki| mul_mod(acc, ki, l)));
        let mut term = g_pow[(rep - 1) as usize];
        for (column, &ki) in y.iter().zip(k) {
            term *= column[(ki - 1) as usize];
        }
        total.add(term);
    });
    finite_or_convergence(total.value(), params)
}

fn binomial_f64(n: u64, k: u64) -> Complex64 {
    use num_traits::ToPrimitive;
    Complex64::new(binomial(n, k).to_f64().unwrap_or(f64::INFINITY), 0.0)
}

fn complex_int_pow(base: Complex64, exp: u64) -> Complex64 {
    if exp == 0 {
        return Complex64::one();
    }
    let mut acc = Complex64::one();
    let mut base = base;
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= base;
        }
        base *= base;
        exp >>= 1;
    }
    acc
}

fn finite_or_convergence(value: Complex64, params: &EvalParams) -> Result<Complex64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(ZetaError::Convergence(format!(
            "presentation overflowed at s = {:?}, a = {:?}, w = {}",
            params.s, params.a, params.w
        )))
    }
}

/// `ζ^HI(s; a; w; X) = Σ_{p∈X} ζ^HI(s; a; w; O×_{X,p})`.
///
/// Errors are propagated with the offending point named.
pub fn hurwitz_igusa(params: &EvalParams, scheme: &F1Scheme) -> Result<Complex64> {
    let mut total = KahanSum::new();
    for point in scheme.points() {
        let v = hurwitz_igusa_group(params, &point.units).map_err(|e| e.at_point(&point.name))?;
        total.add(v);
    }
    Ok(total.value())
}

/// The deformed Igusa zeta `ζ^I(s; w; X) = ζ^HI(s; 1,…,1; w; X)`
/// (meromorphic in `s₁,…,s_r` and `w` jointly).
pub fn igusa(
    s: &[Complex64],
    w: Complex64,
    tolerance: f64,
    scheme: &F1Scheme,
) -> Result<Complex64> {
    let params = EvalParams::with_unit_a(s, w, tolerance)?;
    hurwitz_igusa(&params, scheme)
}

/// The deformed modified Soulé series
/// `D(s; w) = Σ_{p∈X} Σ_{m≥1} |Hom(O×_{X,p}, Z/mZ)|^w (m+1)^{-s-1}
///          = ζ^HI(s+1; 2; w; X)`.
///
/// The logarithmic derivative of the modified Soulé zeta function is
/// `-D(s; w)` up to an additive constant, so poles and residues of the
/// analytic continuation of `-D` carry its singular data.
pub fn modified_soule_series(s: Complex64, w: Complex64, scheme: &F1Scheme) -> Result<Complex64> {
    let params = EvalParams::new(
        vec![s + 1.0],
        vec![Complex64::new(2.0, 0.0)],
        w,
        DEFAULT_TOLERANCE,
    )?;
    hurwitz_igusa(&params, scheme)
}

/// Truncated defining series of `ζ^HI(s; a; w; A)` over `{1..M}^r`, with a
/// rigorous tail bound — the independent oracle for the closed form.
///
/// Requires `Re(w) ≥ 0` and the convergence margin
/// `Re(sᵢ) ≥ rank·Re(w) + 1.5`; `(a, w)` are otherwise unrestricted
/// (`|Hom|^w = exp(w·log|Hom|)`, principal logarithm).
///
/// The tail bound combines `|Hom(A, Z/mZ)| ≤ |Γ|·m^rank`, `|z^{-s}| ≤
/// (Re z)^{-Re s} e^{|Im s|·arg-bound}` and integral comparison in each
/// coordinate, union-bounded over the r coordinate tails.
pub fn direct_series(
    params: &EvalParams,
    group: &FgAbelianGroup,
    truncation: u64,
) -> Result<SeriesResult> {
    let m_max = truncation;
    if m_max == 0 {
        return Err(ZetaError::InvalidArgument(
            "truncation must be ≥ 1".to_owned(),
        ));
    }
    let r = params.r();
    let rank = group.rank() as f64;
    let rho = params.w.re;
    if rho < 0.0 {
        return Err(ZetaError::Domain(format!(
            "direct series requires Re(w) ≥ 0, got {rho}"
        )));
    }
    for (i, &si) in params.s.iter().enumerate() {
        if si.re < rank * rho + 1.5 {
            return Err(ZetaError::Domain(format!(
                "convergence margin violated: Re(s{}) = {} < rank·Re(w) + 1.5 = {}",
                i + 1,
                si.re,
                rank * rho + 1.5
            )));
        }
    }

    let torsion = group.torsion();
    let l = torsion.exponent();
    let ln_g: Vec<f64> = torsion_hom_table(torsion)
        .iter()
        .map(|&g| (g as f64).ln())
        .collect();

    // Per-coordinate power tables (mᵢ - 1 + aᵢ)^{-sᵢ} and ln m.
    let mut powers: Vec<Vec<Complex64>> = Vec::with_capacity(r);
    for i in 0..r {
        let si = params.s[i];
        let ai = params.a[i];
        powers.push(
            (1..=m_max)
                .map(|m| (ai + (m - 1) as f64).powc(-si))
                .collect(),
        );
    }
    let ln_m: Vec<f64> = (1..=m_max).map(|m| (m as f64).ln()).collect();

    let mut sum = KahanSum::new();
    let mut terms_used = 0u64;
    for_each_multi_index(r, 1, m_max, |m| {
        let mut ln_free = 0.0;
        let mut prod_mod = 1u64;
        let mut term = Complex64::one();
        for (i, &mi) in m.iter().enumerate() {
            ln_free += ln_m[(mi - 1) as usize];
            prod_mod = mul_mod(prod_mod, mi, l);
            term *= powers[i][(mi - 1) as usize];
        }
        let rep = torsion.periodic_rep(prod_mod);
        let ln_hom = rank * ln_free + ln_g[(rep - 1) as usize];
        sum.add(term * (params.w * ln_hom).exp());
        terms_used += 1;
    });

    // Certified tail: with c = Re aᵢ, σᵢ = Re sᵢ, α = rank·Re w,
    //   tᵢ(m) = m^α (m-1+c)^{-σᵢ} e^{|Im sᵢ|·φᵢ},  φᵢ = atan(|Im aᵢ|/c),
    //   Σ_{m>M} tᵢ(m) ≤ κ^α (M-1+c)^{α-σᵢ+1}/(σᵢ-α-1) e^{|Im sᵢ|φᵢ},
    //   κ = max(1, (M+1)/(M+c)),
    // and the omitted region ∪ᵢ{mᵢ > M} is union-bounded with the full
    // one-dimensional sums Sᵢ on the other coordinates.
    let alpha = rank * rho;
    let order_pow = (torsion.order() as f64).powf(rho);
    let mut coord_tail = vec![0.0f64; r];
    let mut coord_full = vec![0.0f64; r];
    for i in 0..r {
        let sigma = params.s[i].re;
        let c = params.a[i].re;
        let phi = (params.a[i].im.abs() / c).atan();
        let arg_factor = (params.s[i].im.abs() * phi).exp();
        let kappa: f64 = ((m_max as f64 + 1.0) / (m_max as f64 + c)).max(1.0);
        let tail = kappa.powf(alpha) * (m_max as f64 - 1.0 + c).powf(alpha - sigma + 1.0)
            / (sigma - alpha - 1.0)
            * arg_factor;
        let mut partial = 0.0f64;
        for m in 1..=m_max {
            partial += (m as f64).powf(alpha) * ((m - 1) as f64 + c).powf(-sigma);
        }
        coord_tail[i] = tail;
        coord_full[i] = partial * arg_factor + tail;
    }
    let mut tail_bound = 0.0f64;
    for (i, &tail) in coord_tail.iter().enumerate() {
        let mut cross = tail;
        for (i2, &full) in coord_full.iter().enumerate() {
            if i2 != i {
                cross *= full;
            }
        }
        tail_bound += cross;
    }
    tail_bound *= order_pow;

    let value = sum.value();
    if !value.is_finite() || !tail_bound.is_finite() {
        return Err(ZetaError::Convergence(
            "direct series overflowed".to_owned(),
        ));
    }
    Ok(SeriesResult {
        value,
        tail_bound,
        terms_used,
    })
}

/// Truncated multivariable Euler product for a *finite* group Γ:
///
/// ```text
/// ∏_{p ≤ P} Σ_{0 ≤ kᵢ ≤ K} |Hom(Γ, Z/p^{k₁+⋯+k_r}Z)|^w p^{-(k₁s₁+⋯+k_rs_r)}
/// ```
///
/// Requires `Re(sᵢ) ≥ 1.5`. For primes not dividing the exponent the local
/// factor collapses to a product of truncated geometric series.
pub fn euler_product(
    s: &[Complex64],
    w: Complex64,
    torsion: &FiniteAbelianGroup,
    prime_bound: u64,
    power_bound: u32,
) -> Result<Complex64> {
    if s.is_empty() {
        return Err(ZetaError::InvalidArgument(
            "at least one variable s₁ is required".to_owned(),
        ));
    }
    if prime_bound < 2 {
        return Err(ZetaError::InvalidArgument(
            "prime bound must be ≥ 2".to_owned(),
        ));
    }
    if power_bound == 0 {
        return Err(ZetaError::InvalidArgument(
            "power bound must be ≥ 1".to_owned(),
        ));
    }
    for (i, &si) in s.iter().enumerate() {
        if si.re < 1.5 {
            return Err(ZetaError::Domain(format!(
                "Euler product requires Re(s{}) ≥ 1.5, got {}",
                i + 1,
                si.re
            )));
        }
    }

    let r = s.len();
    let k_max = power_bound as u64;
    let l = torsion.exponent();
    let mut product = Complex64::one();
    for p in primes_up_to(prime_bound) {
        let local = if !l.is_multiple_of(p) {
            // Hom counts are 1 on all powers of p: the box sum factorizes
            // exactly into truncated geometric series.
            let mut factor = Complex64::one();
            for &si in s {
                let x = (-si * (p as f64).ln()).exp();
                let x_top = (-si * ((k_max + 1) as f64) * (p as f64).ln()).exp();
                factor *= (Complex64::one() - x_top) / (Complex64::one() - x);
            }
            factor
        } else {
            // log |Hom(Γ, Z/p^eZ)| = Σ_j min(e, v_p(n_j)) · log p.
            let ln_p = (p as f64).ln();
            let valuations: Vec<u64> = torsion
                .moduli()
                .iter()
                .map(|&n| p_adic_valuation(n, p))
                .collect();
            let max_e = r as u64 * k_max;
            let hom_pow: Vec<Complex64> = (0..=max_e)
                .map(|e| {
                    let ln_hom: f64 =
                        valuations.iter().map(|&v| v.min(e) as f64).sum::<f64>() * ln_p;
                    (w * ln_hom).exp()
                })
                .collect();
            let coord_pow: Vec<Vec<Complex64>> = s
                .iter()
                .map(|&si| {
                    (0..=k_max)
                        .map(|k| (-si * (k as f64) * ln_p).exp())
                        .collect()
                })
                .collect();
            let mut factor = KahanSum::new();
            for_each_multi_index(r, 0, k_max, |k| {
                let e: u64 = k.iter().sum();
                let mut term = hom_pow[e as usize];
                for (i, &ki) in k.iter().enumerate() {
                    term *= coord_pow[i][ki as usize];
                }
                factor.add(term);
            });
            factor.value()
        };
        product *= local;
    }
    if !product.is_finite() {
        return Err(ZetaError::Convergence(
            "Euler product overflowed".to_owned(),
        ));
    }
    Ok(product)
}

fn p_adic_valuation(mut n: u64, p: u64) -> u64 {
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

fn primes_up_to(bound: u64) -> Vec<u64> {
    let n = bound as usize;
    let mut is_prime = vec![true; n + 1];
    is_prime[0] = false;
    if n >= 1 {
        is_prime[1] = false;
    }
    let mut p = 2usize;
    while p * p <= n {
        if is_prime[p] {
            let mut q = p * p;
            while q <= n {
                is_prime[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    is_prime
        .iter()
        .enumerate()
        .filter_map(|(i, &ok)| if ok { Some(i as u64) } else { None })
        .collect()
}
