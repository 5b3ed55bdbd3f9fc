//! Runnable verification suites.
//!
//! Each suite re-checks the library's mathematical invariants at desk scale:
//! exact identities exactly, numerical identities at their documented
//! tolerances. The CLI `verify` command runs these and exits nonzero on any
//! failure; the suites deliberately overlap with the crate's test suite so
//! the same checks can be run against an installed binary.

use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use crate::abelian::{F1Scheme, FgAbelianGroup, FiniteAbelianGroup, SchemePoint};
use crate::error::{Result, ZetaError};
use crate::hurwitz::{bernoulli_poly, hurwitz_zeta, riemann_zeta, HurwitzConfig};
use crate::poles;
use crate::zeta::{
    direct_series, euler_product, hurwitz_igusa, hurwitz_igusa_group, hurwitz_igusa_group_with,
    igusa, modified_soule_series, EvalParams, Presentation, SeriesResult, DEFAULT_TOLERANCE,
};
use crate::Rational;

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Options for [`run_suite`].
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Prime bound for the Euler-product checks.
    pub prime_bound: u64,
    /// An extra scheme to include in the pole checks (w = 1).
    pub extra_scheme: Option<(String, F1Scheme)>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            prime_bound: 100_000,
            extra_scheme: None,
        }
    }
}

/// Suites accepted by [`run_suite`].
pub const SUITES: &[&str] = &["abelian", "hurwitz", "assembly", "euler", "poles", "all"];

/// Run one suite (or `all`). Unknown names are an error.
pub fn run_suite(name: &str, options: &VerifyOptions) -> Result<Vec<Check>> {
    match name {
        "abelian" => Ok(abelian_suite()),
        "hurwitz" => Ok(hurwitz_suite()),
        "assembly" => Ok(assembly_suite()),
        "euler" => Ok(euler_suite(options.prime_bound)),
        "poles" => Ok(poles_suite(options)),
        "all" => {
            let mut checks = abelian_suite();
            checks.extend(hurwitz_suite());
            checks.extend(assembly_suite());
            checks.extend(euler_suite(options.prime_bound));
            checks.extend(poles_suite(options));
            Ok(checks)
        }
        other => Err(ZetaError::InvalidArgument(format!(
            "unknown suite `{other}`; available: {}",
            SUITES.join(", ")
        ))),
    }
}

/// Built-in schemes used across the verification and acceptance suites.
pub mod corpus {
    use super::*;

    fn torsion(moduli: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::from_moduli(moduli).expect("corpus moduli are valid")
    }

    /// The multiplicative group scheme: one point with unit group Z.
    pub fn gm() -> F1Scheme {
        F1Scheme::new(vec![SchemePoint::new("p0", FgAbelianGroup::free(1))]).unwrap()
    }

    /// One point with unit group Z/n (the group scheme of n-th roots of unity).
    pub fn roots_of_unity(n: u64) -> F1Scheme {
        F1Scheme::new(vec![SchemePoint::new(
            "p0",
            FgAbelianGroup::finite(torsion(&[n])),
        )])
        .unwrap()
    }

    /// Disjoint union of [`gm`] and [`roots_of_unity`]`(2)`.
    pub fn gm_with_mu2() -> F1Scheme {
        F1Scheme::new(vec![
            SchemePoint::new("gm", FgAbelianGroup::free(1)),
            SchemePoint::new("mu2", FgAbelianGroup::finite(torsion(&[2]))),
        ])
        .unwrap()
    }

    /// One point with unit group Z² × Z/2.
    pub fn rank2_with_mu2() -> F1Scheme {
        F1Scheme::new(vec![SchemePoint::new(
            "p0",
            FgAbelianGroup::new(2, torsion(&[2])),
        )])
        .unwrap()
    }

    /// Named corpus, in a fixed order.
    pub fn schemes() -> Vec<(&'static str, F1Scheme)> {
        vec![
            ("gm", gm()),
            ("mu2", roots_of_unity(2)),
            ("mu3", roots_of_unity(3)),
            ("gm+mu2", gm_with_mu2()),
            ("rank2xmu2", rank2_with_mu2()),
        ]
    }

    /// The groups exercised by the presentation-vs-series matrix.
    pub fn matrix_groups() -> Vec<(&'static str, FgAbelianGroup)> {
        vec![
            ("trivial", FgAbelianGroup::free(0)),
            ("Z", FgAbelianGroup::free(1)),
            ("Z/2", FgAbelianGroup::finite(torsion(&[2]))),
            ("ZxZ/2", FgAbelianGroup::new(1, torsion(&[2]))),
            ("Z2xZ/2xZ/4", FgAbelianGroup::new(2, torsion(&[2, 4]))),
        ]
    }
}

/// Deterministic generator for the sampled numerical checks.
struct SplitMix64(u64);

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        Self(seed)
    }

    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

/// All invariant-factor chains (canonical finite abelian groups) with order
/// at most `max_order`, including the trivial group.
pub fn invariant_factor_chains(max_order: u128) -> Vec<Vec<u64>> {
    fn extend(chain: &mut Vec<u64>, order: u128, max_order: u128, out: &mut Vec<Vec<u64>>) {
        out.push(chain.clone());
        let base = chain.last().copied().unwrap_or(1);
        let mut k = if base == 1 { 2 } else { 1 };
        while let Some(next) = base.checked_mul(k) {
            let new_order = order.saturating_mul(next as u128);
            if new_order > max_order {
                break;
            }
            chain.push(next);
            extend(chain, new_order, max_order, out);
            chain.pop();
            k += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_order, &mut out);
    out
}

/// Sample the hurwitz recurrence domain: `|s| ≤ 20`, `|s-1| > 0.1`,
/// `Re(q) ∈ (0, 5]`, restricted to inputs whose evaluation-plan cancellation
/// scale keeps an absolute 1e-10 check representable in binary64.
pub fn sample_recurrence_inputs(count: usize, seed: u64) -> Vec<(Complex64, Complex64)> {
    let cfg = HurwitzConfig::default();
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let s = Complex64::new(rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0));
        if s.norm() > 20.0 || (s - Complex64::one()).norm() <= 0.1 {
            continue;
        }
        let q = Complex64::new(5.0 * (1.0 - rng.next_f64()), rng.uniform(-1.0, 1.0));
        if q.re <= 0.0 {
            continue;
        }
        let feasible = crate::hurwitz::evaluation_plan(s, q, &cfg)
            .and_then(|p| Ok((p, crate::hurwitz::evaluation_plan(s, q + 1.0, &cfg)?)))
            .map(|(p1, p2)| p1.magnitude <= 300.0 && p2.magnitude <= 300.0)
            .unwrap_or(false);
        if !feasible {
            continue;
        }
        out.push((s, q));
    }
    out
}

fn check(suite: &'static str, name: &'static str, passed: bool, detail: String) -> Check {
    Check {
        suite,
        name,
        passed,
        detail,
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn torsion(moduli: &[u64]) -> FiniteAbelianGroup {
    FiniteAbelianGroup::from_moduli(moduli).expect("valid moduli")
}

// ---------------------------------------------------------------------------
// abelian
// ---------------------------------------------------------------------------

fn abelian_suite() -> Vec<Check> {
    let mut out = Vec::new();
    let groups: Vec<FiniteAbelianGroup> = [
        &[][..],
        &[2],
        &[3],
        &[4],
        &[2, 2],
        &[2, 4],
        &[6],
        &[2, 12],
        &[6, 10],
    ]
    .iter()
    .map(|m| torsion(m))
    .collect();

    // Hom counts are periodic with period the exponent.
    {
        let mut cases = 0usize;
        let mut ok = true;
        for g in &groups {
            let l = g.exponent();
            for m in 1..=3 * l {
                cases += 1;
                ok &= g.hom_count(m).unwrap() == g.hom_count(g.periodic_rep(m)).unwrap();
            }
        }
        out.push(check(
            "abelian",
            "hom-periodicity",
            ok,
            format!("{cases} cases"),
        ));
    }

    // Multiplicativity of Hom counts over coprime orders.
    {
        let fg: Vec<FgAbelianGroup> = vec![
            FgAbelianGroup::free(0),
            FgAbelianGroup::free(2),
            FgAbelianGroup::finite(torsion(&[2, 4])),
            FgAbelianGroup::new(1, torsion(&[6])),
        ];
        let pairs = [
            (1u64, 5u64),
            (2, 3),
            (3, 4),
            (4, 9),
            (5, 8),
            (7, 12),
            (8, 9),
        ];
        let mut ok = true;
        let mut cases = 0usize;
        for a in &fg {
            for &(m1, m2) in &pairs {
                cases += 1;
                let lhs = a.hom_count(m1 * m2).unwrap();
                let rhs = a.hom_count(m1).unwrap() * a.hom_count(m2).unwrap();
                ok &= lhs == rhs;
            }
        }
        out.push(check(
            "abelian",
            "hom-multiplicativity",
            ok,
            format!("{cases} cases"),
        ));
    }

    // μ formula against element enumeration, every group of order ≤ 512.
    {
        let chains = invariant_factor_chains(512);
        let mut ok = true;
        for moduli in &chains {
            let g = torsion(moduli);
            ok &= g.mu() == g.mu_bruteforce().unwrap();
        }
        out.push(check(
            "abelian",
            "mu-oracle-equivalence",
            ok,
            format!("{} groups of order ≤ 512", chains.len()),
        ));
    }

    // μ is multiplicative over coprime direct sums.
    {
        let pairs = [
            (&[2u64][..], &[3u64][..]),
            (&[4], &[9]),
            (&[2, 2], &[27]),
            (&[8], &[3, 9]),
            (&[5], &[4, 8]),
        ];
        let mut ok = true;
        for (m1, m2) in pairs {
            let g1 = torsion(m1);
            let g2 = torsion(m2);
            let sum = g1.direct_sum(&g2).unwrap();
            ok &= sum.mu() == g1.mu() * g2.mu();
        }
        out.push(check(
            "abelian",
            "mu-coprime-product",
            ok,
            "5 pairs".to_owned(),
        ));
    }

    // Hom counts are unchanged by canonicalization.
    {
        let raws: [&[u64]; 6] = [
            &[4, 6],
            &[2, 2, 2],
            &[12, 18],
            &[1, 6],
            &[10, 15],
            &[9, 12, 30],
        ];
        let mut ok = true;
        let mut cases = 0usize;
        for raw in raws {
            let normalized = torsion(raw);
            let raw_lcm = raw
                .iter()
                .fold(1u64, |acc, &m| num_integer::lcm(acc, m.max(1)));
            for m in 1..=raw_lcm {
                cases += 1;
                let direct: u128 = raw
                    .iter()
                    .map(|&n| num_integer::gcd(m, n) as u128)
                    .product();
                ok &= direct == normalized.hom_count(m).unwrap();
            }
        }
        out.push(check(
            "abelian",
            "normalization-neutrality",
            ok,
            format!("{cases} cases"),
        ));
    }

    // μ(Γ^w) computed by the power formula equals brute force on Γ^w.
    {
        let mut ok = true;
        let mut cases = 0usize;
        for moduli in [&[2u64][..], &[3], &[4], &[2, 2], &[6], &[2, 4]] {
            let g = torsion(moduli);
            for w in 1..=4u32 {
                if g.order().pow(w) <= 512 {
                    cases += 1;
                    ok &= g.mu_power(w).unwrap() == g.power(w).unwrap().mu_bruteforce().unwrap();
                }
            }
        }
        out.push(check(
            "abelian",
            "mu-power-oracle",
            ok,
            format!("{cases} cases"),
        ));
    }

    out
}

// ---------------------------------------------------------------------------
// hurwitz
// ---------------------------------------------------------------------------

fn hurwitz_suite() -> Vec<Check> {
    let cfg = HurwitzConfig::default();
    let mut out = Vec::new();

    // ζ(s, q) = ζ(s, q+1) + q^{-s} on 100 sampled inputs.
    {
        let samples = sample_recurrence_inputs(100, 0xF12E_7A00);
        let mut max_delta = 0.0f64;
        let mut ok = true;
        for &(s, q) in &samples {
            let lhs = hurwitz_zeta(s, q, &cfg);
            let rhs = hurwitz_zeta(s, q + 1.0, &cfg);
            match (lhs, rhs) {
                (Ok(l), Ok(r)) => {
                    let delta = (l - r - q.powc(-s)).norm();
                    max_delta = max_delta.max(delta);
                    ok &= delta <= 10.0 * cfg.tolerance;
                }
                _ => ok = false,
            }
        }
        out.push(check(
            "hurwitz",
            "recurrence",
            ok,
            format!("100 samples, max |Δ| = {max_delta:.2e}"),
        ));
    }

    // Multiplication identity ζ(s, a) = l^{-s} Σ_k ζ(s, (k-1+a)/l).
    {
        let s_grid = [
            c(-3.5, 0.0),
            c(-1.2, 0.0),
            c(0.6, 0.0),
            c(2.2, 0.0),
            c(3.0, 4.0),
            c(5.0, -2.0),
            c(8.0, 0.0),
        ];
        let a_grid = [c(1.0, 0.0), c(2.0, 0.0), c(0.3, 0.7)];
        let mut max_delta = 0.0f64;
        let mut ok = true;
        for l in 1..=6u64 {
            for &a in &a_grid {
                for &s in &s_grid {
                    let direct = hurwitz_zeta(s, a, &cfg).unwrap();
                    let mut split = Complex64::zero();
                    for k in 1..=l {
                        let q = (a + (k - 1) as f64) / l as f64;
                        split += hurwitz_zeta(s, q, &cfg).unwrap();
                    }
                    split *= (-s * (l as f64).ln()).exp();
                    let delta = (direct - split).norm();
                    max_delta = max_delta.max(delta);
                    ok &= delta <= 1e-9;
                }
            }
        }
        out.push(check(
            "hurwitz",
            "multiplication-identity",
            ok,
            format!("l ≤ 6, max |Δ| = {max_delta:.2e}"),
        ));
    }

    // ζ(-n, q) = -B_{n+1}(q)/(n+1).
    {
        let mut max_delta = 0.0f64;
        let mut ok = true;
        for n in 0..=8u32 {
            for q in [c(1.0, 0.0), c(0.5, 0.0), c(1.5, 0.0), c(0.25, 0.0)] {
                let lhs = hurwitz_zeta(c(-(n as f64), 0.0), q, &cfg).unwrap();
                let rhs = -bernoulli_poly(n + 1, q).unwrap() / (n as f64 + 1.0);
                let delta = (lhs - rhs).norm();
                max_delta = max_delta.max(delta);
                ok &= delta <= 1e-10;
            }
        }
        out.push(check(
            "hurwitz",
            "negative-integers",
            ok,
            format!("n ≤ 8, max |Δ| = {max_delta:.2e}"),
        ));
    }

    // Simple pole at s = 1 with residue 1.
    {
        let s = c(1.0 + 1e-7, 0.0);
        let mut max_delta = 0.0f64;
        let mut ok = true;
        for q in [c(1.0, 0.0), c(1.0 / 3.0, 0.0), c(2.5, 0.0)] {
            let v = hurwitz_zeta(s, q, &cfg).unwrap();
            let delta = ((s - 1.0) * v - Complex64::one()).norm();
            max_delta = max_delta.max(delta);
            ok &= delta <= 1e-6;
        }
        out.push(check(
            "hurwitz",
            "pole-residue",
            ok,
            format!("max |(s-1)ζ - 1| = {max_delta:.2e}"),
        ));
    }

    out
}

// ---------------------------------------------------------------------------
// assembly
// ---------------------------------------------------------------------------

/// Double the truncation until the certified tail bound is at or below
/// `target` (or the truncation cap is hit; the last result is returned
/// regardless and carries its honest bound).
pub fn direct_series_with_target(
    params: &EvalParams,
    group: &FgAbelianGroup,
    target: f64,
    start: u64,
    cap: u64,
) -> Result<SeriesResult> {
    let mut truncation = start.max(2);
    loop {
        let result = direct_series(params, group, truncation)?;
        if result.tail_bound <= target || truncation >= cap {
            return Ok(result);
        }
        truncation = (truncation * 2).min(cap);
    }
}

/// The (A, r, w, a) presentation-vs-series case matrix. `s` is placed six
/// units to the right of the rank shift so desk-scale truncations certify
/// tails below 1e-8.
fn matrix_cases() -> Vec<(&'static str, FgAbelianGroup, usize, u32, Complex64)> {
    let mut cases = Vec::new();
    for (name, group) in corpus::matrix_groups() {
        for r in [1usize, 2] {
            for w in [1u32, 2] {
                for a in [c(1.0, 0.0), c(2.0, 0.0), c(1.3, 0.0), c(0.7, 0.2)] {
                    cases.push((name, group.clone(), r, w, a));
                }
            }
        }
    }
    cases
}

fn matrix_params(group: &FgAbelianGroup, r: usize, w: u32, a: Complex64) -> EvalParams {
    let nw = (group.rank() * w) as f64;
    let s: Vec<Complex64> = (0..r)
        .map(|i| c(nw + 6.0 + 0.5 * i as f64, 0.25 * i as f64))
        .collect();
    EvalParams::new(s, vec![a; r], c(w as f64, 0.0), DEFAULT_TOLERANCE).expect("valid params")
}

fn assembly_suite() -> Vec<Check> {
    let mut out = Vec::new();

    // Closed form vs truncated defining series with certified tail.
    {
        let mut ok = true;
        let mut max_excess = f64::NEG_INFINITY;
        let mut cases = 0usize;
        for (name, group, r, w, a) in matrix_cases() {
            cases += 1;
            let params = matrix_params(&group, r, w, a);
            let closed = hurwitz_igusa_group(&params, &group).unwrap();
            let start = if r == 1 { 4096 } else { 256 };
            let series = direct_series_with_target(&params, &group, 1e-8, start, 1 << 20).unwrap();
            let delta = (closed - series.value).norm();
            let excess = delta - series.tail_bound;
            max_excess = max_excess.max(excess);
            if series.tail_bound > 1e-8 || excess > 1e-8 {
                ok = false;
                out.push(check(
                    "assembly",
                    "oracle-agreement",
                    false,
                    format!(
                        "{name} r={r} w={w} a={a}: |Δ| = {delta:.2e}, tail = {:.2e}",
                        series.tail_bound
                    ),
                ));
            }
        }
        if ok {
            out.push(check(
                "assembly",
                "oracle-agreement",
                true,
                format!("{cases} cases, max(|Δ| - tail) = {max_excess:.2e}"),
            ));
        }
    }

    // Binomial and rank-shift branches agree where both apply.
    {
        let mut ok = true;
        let mut max_delta = 0.0f64;
        let mut cases = 0usize;
        for (_, group) in corpus::matrix_groups() {
            for r in [1usize, 2] {
                for w in [0u32, 1, 2, 3] {
                    cases += 1;
                    let params = matrix_params(&group, r, w, c(1.0, 0.0));
                    let b =
                        hurwitz_igusa_group_with(&params, &group, Presentation::Binomial).unwrap();
                    let shift =
                        hurwitz_igusa_group_with(&params, &group, Presentation::RankShift).unwrap();
                    let delta = (b - shift).norm();
                    max_delta = max_delta.max(delta);
                    ok &= delta <= 1e-10;
                }
            }
        }
        out.push(check(
            "assembly",
            "branch-agreement",
            ok,
            format!("{cases} cases, max |Δ| = {max_delta:.2e}"),
        ));
    }

    // Specialization (a = 1): the Igusa entry point is the same evaluation.
    {
        let mut ok = true;
        let mut max_delta = 0.0f64;
        for (_, scheme) in corpus::schemes() {
            for w in [c(1.0, 0.0), c(2.0, 0.0), c(0.4, -0.8)] {
                let max_rank = scheme
                    .points()
                    .iter()
                    .map(|p| p.units.rank())
                    .max()
                    .unwrap_or(0) as f64;
                let s = [c(max_rank * 2.0 + 7.0, 0.0), c(max_rank * 2.0 + 8.0, 0.5)];
                let via_igusa = igusa(&s, w, DEFAULT_TOLERANCE, &scheme).unwrap();
                let params = EvalParams::with_unit_a(&s, w, DEFAULT_TOLERANCE).unwrap();
                let direct = hurwitz_igusa(&params, &scheme).unwrap();
                let delta = (via_igusa - direct).norm();
                max_delta = max_delta.max(delta);
                ok &= delta <= 1e-12;
            }
        }
        out.push(check(
            "assembly",
            "igusa-specialization",
            ok,
            format!("max |Δ| = {max_delta:.2e}"),
        ));
    }

    // Specialization (r = 1, a = 2): the modified Soulé series.
    {
        let mut ok = true;
        let mut max_delta = 0.0f64;
        for (_, scheme) in corpus::schemes() {
            for s in [c(6.5, 0.0), c(7.25, 1.0)] {
                let soule = modified_soule_series(s, c(1.0, 0.0), &scheme).unwrap();
                let params = EvalParams::new(
                    vec![s + 1.0],
                    vec![c(2.0, 0.0)],
                    c(1.0, 0.0),
                    DEFAULT_TOLERANCE,
                )
                .unwrap();
                let direct = hurwitz_igusa(&params, &scheme).unwrap();
                let delta = (soule - direct).norm();
                max_delta = max_delta.max(delta);
                ok &= delta <= 1e-12;
            }
        }
        out.push(check(
            "assembly",
            "soule-specialization",
            ok,
            format!("max |Δ| = {max_delta:.2e}"),
        ));
    }

    // Rank-0 trivial group: the closed form factorizes into Hurwitz zetas.
    {
        let cfg = HurwitzConfig::default();
        let trivial = FgAbelianGroup::free(0);
        let mut ok = true;
        let mut max_delta = 0.0f64;
        for (s, a) in [
            (vec![c(2.0, 0.0)], vec![c(2.0, 0.0)]),
            (
                vec![c(3.0, 1.0), c(2.5, 0.0)],
                vec![c(1.0, 0.0), c(0.7, 0.2)],
            ),
            (
                vec![c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)],
                vec![c(1.5, 0.0), c(1.0, 0.0), c(2.0, 1.0)],
            ),
        ] {
            let params =
                EvalParams::new(s.clone(), a.clone(), c(1.0, 0.0), DEFAULT_TOLERANCE).unwrap();
            let closed = hurwitz_igusa_group(&params, &trivial).unwrap();
            let mut product = Complex64::one();
            for (si, ai) in s.iter().zip(&a) {
                product *= hurwitz_zeta(*si, *ai, &cfg).unwrap();
            }
            let delta = (closed - product).norm();
            max_delta = max_delta.max(delta);
            ok &= delta <= 1e-10;
        }
        out.push(check(
            "assembly",
            "trivial-factorization",
            ok,
            format!("max |Δ| = {max_delta:.2e}"),
        ));
    }

    out
}

// ---------------------------------------------------------------------------
// euler
// ---------------------------------------------------------------------------

fn euler_suite(prime_bound: u64) -> Vec<Check> {
    let mut out = Vec::new();

    // Euler product vs defining series for finite groups.
    {
        let groups = [torsion(&[]), torsion(&[2]), torsion(&[6]), torsion(&[2, 4])];
        let mut ok = true;
        let mut max_delta = 0.0f64;
        let mut cases = 0usize;
        for g in &groups {
            let fg = FgAbelianGroup::finite(g.clone());
            for w in [1u32, 2] {
                for r in [1usize, 2] {
                    cases += 1;
                    let s: Vec<Complex64> = if r == 1 {
                        vec![c(2.5, 0.0)]
                    } else {
                        vec![c(3.5, 0.0), c(4.5, 0.0)]
                    };
                    let product = euler_product(&s, c(w as f64, 0.0), g, prime_bound, 60).unwrap();
                    let params =
                        EvalParams::with_unit_a(&s, c(w as f64, 0.0), DEFAULT_TOLERANCE).unwrap();
                    let start = if r == 1 { 1 << 16 } else { 1 << 10 };
                    let series =
                        direct_series_with_target(&params, &fg, 1e-7, start, 1 << 18).unwrap();
                    let delta = (product - series.value).norm();
                    max_delta = max_delta.max(delta);
                    ok &= delta <= 1e-6;
                }
            }
        }
        out.push(check(
            "euler",
            "product-vs-series",
            ok,
            format!("{cases} cases, max |Δ| = {max_delta:.2e}"),
        ));
    }

    // Closed-form spot values for the Z/2 local factor.
    {
        let cfg = HurwitzConfig::default();
        let zeta2 = riemann_zeta(c(2.0, 0.0), &cfg).unwrap();
        let zeta3 = riemann_zeta(c(3.0, 0.0), &cfg).unwrap();
        let mu2 = corpus::roots_of_unity(2);
        let v1 = igusa(&[c(2.0, 0.0)], c(1.0, 0.0), DEFAULT_TOLERANCE, &mu2).unwrap();
        let d1 = (v1 - zeta2 * 1.25).norm();
        let v2 = igusa(&[c(3.0, 0.0)], c(2.0, 0.0), DEFAULT_TOLERANCE, &mu2).unwrap();
        let d2 = (v2 - zeta3 * (11.0 / 8.0)).norm();
        let g2 = torsion(&[2]);
        let p1 = euler_product(&[c(2.0, 0.0)], c(1.0, 0.0), &g2, prime_bound, 60).unwrap();
        let p2 = euler_product(&[c(3.0, 0.0)], c(2.0, 0.0), &g2, prime_bound, 60).unwrap();
        let d3 = (p1 - zeta2 * 1.25).norm();
        let d4 = (p2 - zeta3 * (11.0 / 8.0)).norm();
        let ok = d1 <= 1e-9 && d2 <= 1e-9 && d3 <= 1e-4 && d4 <= 1e-3;
        out.push(check(
            "euler",
            "closed-form-spots",
            ok,
            format!("(5/4)ζ(2): |Δ| = {d1:.2e} (product {d3:.2e}); (11/8)ζ(3): |Δ| = {d2:.2e} (product {d4:.2e})"),
        ));
    }

    out
}

// ---------------------------------------------------------------------------
// poles
// ---------------------------------------------------------------------------

fn poles_suite(options: &VerifyOptions) -> Vec<Check> {
    let mut out = Vec::new();

    // Exact orders vs Richardson-extrapolated residues of -D(s; w).
    {
        let mut targets: Vec<(String, F1Scheme, u32)> = vec![
            ("gm".into(), corpus::gm(), 1),
            ("mu2".into(), corpus::roots_of_unity(2), 1),
            ("mu3".into(), corpus::roots_of_unity(3), 1),
            ("rank2xmu2".into(), corpus::rank2_with_mu2(), 2),
            ("gm+mu2".into(), corpus::gm_with_mu2(), 1),
        ];
        if let Some((name, scheme)) = &options.extra_scheme {
            targets.push((name.clone(), scheme.clone(), 1));
        }
        let mut ok = true;
        let mut max_delta = 0.0f64;
        let mut cases = 0usize;
        for (name, scheme, w) in &targets {
            for j in poles::pole_candidates(scheme, *w).unwrap() {
                cases += 1;
                let exact = poles::order_at(j, *w, scheme).unwrap();
                let numeric = poles::residue_numeric(j, *w, scheme, 1e-5).unwrap();
                let delta = (numeric - c(exact.to_f64().unwrap(), 0.0)).norm();
                max_delta = max_delta.max(delta);
                if delta > 1e-3 {
                    ok = false;
                    out.push(check(
                        "poles",
                        "exact-vs-numeric",
                        false,
                        format!("{name} j={j} w={w}: |Δ| = {delta:.2e}"),
                    ));
                }
            }
        }
        if ok {
            out.push(check(
                "poles",
                "exact-vs-numeric",
                true,
                format!("{cases} locations, max |Δ| = {max_delta:.2e}"),
            ));
        }
    }

    // Exact binomial sum rule Σ_j order_at(j) = 0 for single points, w = 1.
    {
        let mut ok = true;
        for rank in 1..=3u32 {
            for moduli in [&[][..], &[2u64][..], &[3]] {
                let scheme = F1Scheme::new(vec![SchemePoint::new(
                    "p0",
                    FgAbelianGroup::new(rank, torsion(moduli)),
                )])
                .unwrap();
                let total: Rational = poles::pole_candidates(&scheme, 1)
                    .unwrap()
                    .into_iter()
                    .map(|j| poles::order_at(j, 1, &scheme).unwrap())
                    .sum();
                ok &= total.is_zero();
            }
        }
        out.push(check("poles", "exponent-sum-rule", ok, "n ≤ 3".to_owned()));
    }

    // Divisor additivity over disjoint unions; contributions sum to exponents.
    {
        let union = corpus::gm_with_mu2();
        let divisor = poles::pole_divisor(&union, 1).unwrap();
        let mut ok = true;
        for datum in &divisor {
            let sum: Rational = datum.contributions.iter().map(|(_, r)| r.clone()).sum();
            ok &= sum == datum.exponent;
            let parts = poles::order_at(datum.location, 1, &corpus::gm()).unwrap()
                + poles::order_at(datum.location, 1, &corpus::roots_of_unity(2)).unwrap();
            ok &= parts == datum.exponent;
        }
        out.push(check(
            "poles",
            "divisor-additivity",
            ok,
            format!("{} locations", divisor.len()),
        ));
    }

    // Trivial torsion at w = 1 reproduces the integer binomial exponents.
    {
        let mut ok = true;
        for rank in 1..=3u32 {
            let scheme =
                F1Scheme::new(vec![SchemePoint::new("p0", FgAbelianGroup::free(rank))]).unwrap();
            for j in 0..=rank {
                let expected = {
                    let b = crate::combin::binomial(rank as u64, j as u64)
                        .to_f64()
                        .unwrap();
                    let sign = if (rank - j) % 2 == 0 { 1.0 } else { -1.0 };
                    -b * sign
                };
                let got = poles::order_at(j, 1, &scheme).unwrap();
                ok &= got.to_f64().unwrap() == expected;
            }
        }
        out.push(check(
            "poles",
            "integer-soule-shape",
            ok,
            "n ≤ 3".to_owned(),
        ));
    }

    // Non-integral μ is exactly the rationality obstruction.
    {
        let report = poles::rationality_report(
            &F1Scheme::new(vec![
                SchemePoint::new("z2", FgAbelianGroup::finite(torsion(&[2]))),
                SchemePoint::new("z4", FgAbelianGroup::finite(torsion(&[4]))),
            ])
            .unwrap(),
        );
        let ok = !report[0].integral
            && report[1].integral
            && poles::rationality_unobstructed(&corpus::gm()).unwrap()
            && !poles::rationality_unobstructed(&corpus::roots_of_unity(2)).unwrap();
        out.push(check(
            "poles",
            "rationality-obstruction",
            ok,
            "μ flags".to_owned(),
        ));
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_enumeration_counts() {
        let chains = invariant_factor_chains(16);
        // Groups of order ≤ 16: 1 + 1 + 1 + 2 + 1 + 1 + 1 + 3 + 2 + 1 + 1
        //  + 2 + 1 + 1 + 1 + 5 (orders 1..=16) = 25.
        assert_eq!(chains.len(), 25);
        assert!(chains.contains(&vec![]));
        assert!(chains.contains(&vec![2, 2, 2]));
        assert!(chains.contains(&vec![16]));
        assert!(!chains.contains(&vec![2, 3]));
    }

    #[test]
    fn sampler_is_deterministic_and_in_domain() {
        let a = sample_recurrence_inputs(50, 7);
        let b = sample_recurrence_inputs(50, 7);
        assert_eq!(a, b);
        for (s, q) in a {
            assert!(s.norm() <= 20.0);
            assert!((s - Complex64::one()).norm() > 0.1);
            assert!(q.re > 0.0 && q.re <= 5.0);
        }
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("nope", &VerifyOptions::default()).is_err());
    }

    #[test]
    fn abelian_suite_passes() {
        assert!(abelian_suite().iter().all(|c| c.passed));
    }

    #[test]
    fn poles_suite_passes() {
        assert!(poles_suite(&VerifyOptions::default())
            .iter()
            .all(|c| c.passed));
    }
}
