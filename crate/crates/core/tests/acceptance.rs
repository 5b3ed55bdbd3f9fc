//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`). Exact checks
//! are asserted as rationals; numerical checks at their pinned tolerances.

use std::time::Instant;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use f1zeta::abelian::{F1Scheme, FgAbelianGroup, FiniteAbelianGroup, SchemePoint};
use f1zeta::hurwitz::{bernoulli_poly, hurwitz_zeta, HurwitzConfig};
use f1zeta::poles;
use f1zeta::verify::{
    corpus, direct_series_with_target, invariant_factor_chains, sample_recurrence_inputs,
};
use f1zeta::zeta::{
    euler_product, hurwitz_igusa, hurwitz_igusa_group, hurwitz_igusa_group_with, igusa,
    modified_soule_series, EvalParams, Presentation, DEFAULT_TOLERANCE,
};
use f1zeta::Rational;

// Frozen reference values, re-derived by the in-test summation oracle below
// before use.
const ZETA2: f64 = 1.6449340668482264;
const ZETA3: f64 = 1.2020569031595943;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn torsion(moduli: &[u64]) -> FiniteAbelianGroup {
    FiniteAbelianGroup::from_moduli(moduli).unwrap()
}

/// Independent oracle for ζ(s) at real s > 1: direct summation plus a
/// midpoint-rule tail, accurate to ~s·(N+1/2)^{-s-1} ≪ 1e-12 at N = 10⁵.
fn riemann_zeta_summation_oracle(s: f64, terms: u64) -> f64 {
    let mut sum = 0.0f64;
    for m in (1..=terms).rev() {
        sum += (m as f64).powf(-s);
    }
    sum + (terms as f64 + 0.5).powf(1.0 - s) / (s - 1.0)
}

fn report(criterion: u32, label: &str, passed: bool, elapsed_s: f64, detail: &str) {
    println!(
        "{} criterion {criterion} ({label}): {detail} [{elapsed_s:.2}s]",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {criterion} failed: {detail}");
}

/// Criterion 1: μ formula vs element enumeration, exact rational equality,
/// every group of order ≤ 512; frozen spot values; runtime < 10 s.
#[test]
fn criterion_1_mu_oracle_equivalence() {
    let start = Instant::now();
    let chains = invariant_factor_chains(512);
    let mut all_equal = true;
    for moduli in &chains {
        let g = torsion(moduli);
        all_equal &= g.mu() == g.mu_bruteforce().unwrap();
    }
    let spot = torsion(&[2]).mu() == rat(3, 2)
        && torsion(&[2]).mu_bruteforce().unwrap() == rat(3, 2)
        && torsion(&[3]).mu() == rat(5, 3)
        && torsion(&[4]).mu() == rat(2, 1)
        && torsion(&[2, 2]).mu() == rat(5, 2);
    let elapsed = start.elapsed().as_secs_f64();
    report(
        1,
        "mu oracle equivalence",
        all_equal && spot && elapsed < 10.0,
        elapsed,
        &format!("{} groups of order ≤ 512, spot values exact", chains.len()),
    );
}

/// Criterion 2: the Hurwitz suite — recurrence to 1e-10 on 100 samples,
/// multiplication identity to 1e-9, ζ(-n, q) to 1e-10, pole residue to 1e-6;
/// runtime < 5 s.
#[test]
fn criterion_2_hurwitz_suite() {
    let start = Instant::now();
    let cfg = HurwitzConfig::default();
    let mut ok = true;
    let mut worst = 0.0f64;

    for (s, q) in sample_recurrence_inputs(100, 0xF12E_7A00) {
        let delta = (hurwitz_zeta(s, q, &cfg).unwrap()
            - hurwitz_zeta(s, q + 1.0, &cfg).unwrap()
            - q.powc(-s))
        .norm();
        worst = worst.max(delta);
        ok &= delta <= 1e-10;
    }

    let mut worst_mult = 0.0f64;
    for l in 1..=6u64 {
        for a in [c(1.0, 0.0), c(2.0, 0.0), c(0.3, 0.7)] {
            for s in [
                c(-3.5, 0.0),
                c(-1.2, 0.0),
                c(0.6, 0.0),
                c(2.2, 0.0),
                c(3.0, 4.0),
                c(5.0, -2.0),
                c(8.0, 0.0),
            ] {
                let direct = hurwitz_zeta(s, a, &cfg).unwrap();
                let mut split = Complex64::zero();
                for k in 1..=l {
                    split += hurwitz_zeta(s, (a + (k - 1) as f64) / l as f64, &cfg).unwrap();
                }
                split *= (-s * (l as f64).ln()).exp();
                let delta = (direct - split).norm();
                worst_mult = worst_mult.max(delta);
                ok &= delta <= 1e-9;
            }
        }
    }

    let mut worst_neg = 0.0f64;
    for n in 0..=8u32 {
        for q in [c(1.0, 0.0), c(0.5, 0.0), c(1.5, 0.0), c(0.25, 0.0)] {
            let lhs = hurwitz_zeta(c(-(n as f64), 0.0), q, &cfg).unwrap();
            let rhs = -bernoulli_poly(n + 1, q).unwrap() / (n as f64 + 1.0);
            let delta = (lhs - rhs).norm();
            worst_neg = worst_neg.max(delta);
            ok &= delta <= 1e-10;
        }
    }

    let s = c(1.0 + 1e-7, 0.0);
    for q in [c(1.0, 0.0), c(1.0 / 3.0, 0.0), c(2.5, 0.0)] {
        let v = hurwitz_zeta(s, q, &cfg).unwrap();
        ok &= ((s - 1.0) * v - c(1.0, 0.0)).norm() <= 1e-6;
    }

    let elapsed = start.elapsed().as_secs_f64();
    report(
        2,
        "hurwitz suite",
        ok && elapsed < 5.0,
        elapsed,
        &format!(
            "recurrence max {worst:.1e}, multiplication max {worst_mult:.1e}, ζ(-n,q) max {worst_neg:.1e}"
        ),
    );
}

fn matrix_groups() -> Vec<(&'static str, FgAbelianGroup)> {
    vec![
        ("trivial", FgAbelianGroup::free(0)),
        ("Z", FgAbelianGroup::free(1)),
        ("Z/2", FgAbelianGroup::finite(torsion(&[2]))),
        ("ZxZ/2", FgAbelianGroup::new(1, torsion(&[2]))),
        ("Z2xZ/2xZ/4", FgAbelianGroup::new(2, torsion(&[2, 4]))),
    ]
}

fn matrix_params(group: &FgAbelianGroup, r: usize, w: u32, a: Complex64) -> EvalParams {
    // Re(sᵢ) ≥ rank·w + 2 with a margin of six so truncated tails certify.
    let nw = (group.rank() * w) as f64;
    let s: Vec<Complex64> = (0..r)
        .map(|i| c(nw + 6.0 + 0.5 * i as f64, 0.25 * i as f64))
        .collect();
    EvalParams::new(s, vec![a; r], c(w as f64, 0.0), DEFAULT_TOLERANCE).unwrap()
}

/// Criterion 3: closed-form presentation vs the defining series across the
/// case matrix, within the certified tail bound (≤ 1e-8) + 1e-8; < 60 s.
#[test]
fn criterion_3_presentation_vs_definition() {
    let start = Instant::now();
    let mut ok = true;
    let mut cases = 0usize;
    let mut worst = f64::NEG_INFINITY;
    for (name, group) in matrix_groups() {
        for r in [1usize, 2] {
            for w in [1u32, 2] {
                for a in [c(1.0, 0.0), c(2.0, 0.0), c(1.3, 0.0), c(0.7, 0.2)] {
                    cases += 1;
                    let params = matrix_params(&group, r, w, a);
                    let closed = hurwitz_igusa_group(&params, &group).unwrap();
                    let init = if r == 1 { 4096 } else { 256 };
                    let series =
                        direct_series_with_target(&params, &group, 1e-8, init, 1 << 20).unwrap();
                    assert!(
                        series.tail_bound <= 1e-8,
                        "{name} r={r} w={w} a={a}: tail {} not certified",
                        series.tail_bound
                    );
                    let delta = (closed - series.value).norm();
                    worst = worst.max(delta - series.tail_bound);
                    ok &= delta <= series.tail_bound + 1e-8;
                }
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    report(
        3,
        "presentation vs definition",
        ok && elapsed < 60.0,
        elapsed,
        &format!("{cases} cases, max(|Δ| - tail) = {worst:.1e}"),
    );
}

/// Criterion 4: branch agreement at a = 1 for w ∈ {0,1,2,3}, to 1e-10.
#[test]
fn criterion_4_branch_agreement() {
    let start = Instant::now();
    let mut ok = true;
    let mut worst = 0.0f64;
    let mut cases = 0usize;
    for (_, group) in matrix_groups() {
        for r in [1usize, 2] {
            for w in [0u32, 1, 2, 3] {
                cases += 1;
                let params = matrix_params(&group, r, w, c(1.0, 0.0));
                let binomial =
                    hurwitz_igusa_group_with(&params, &group, Presentation::Binomial).unwrap();
                let shifted =
                    hurwitz_igusa_group_with(&params, &group, Presentation::RankShift).unwrap();
                let delta = (binomial - shifted).norm();
                worst = worst.max(delta);
                ok &= delta <= 1e-10;
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    report(
        4,
        "branch agreement",
        ok,
        elapsed,
        &format!("{cases} cases, max |Δ| = {worst:.1e}"),
    );
}

/// Criterion 5: truncated Euler product vs defining series to 1e-6 for finite
/// groups; closed-form spot checks (5/4)ζ(2) and (11/8)ζ(3) to 1e-9.
#[test]
fn criterion_5_euler_product() {
    let start = Instant::now();
    let mut ok = true;
    let mut worst = 0.0f64;
    let mut cases = 0usize;
    for moduli in [&[][..], &[2u64][..], &[6], &[2, 4]] {
        let gamma = torsion(moduli);
        let group = FgAbelianGroup::finite(gamma.clone());
        for w in [1u32, 2] {
            for r in [1usize, 2] {
                cases += 1;
                let s: Vec<Complex64> = if r == 1 {
                    vec![c(2.5, 0.0)]
                } else {
                    vec![c(3.5, 0.0), c(4.5, 0.0)]
                };
                let product = euler_product(&s, c(w as f64, 0.0), &gamma, 100_000, 60).unwrap();
                let params =
                    EvalParams::with_unit_a(&s, c(w as f64, 0.0), DEFAULT_TOLERANCE).unwrap();
                let init = if r == 1 { 1 << 16 } else { 1 << 10 };
                let series =
                    direct_series_with_target(&params, &group, 1e-7, init, 1 << 18).unwrap();
                let delta = (product - series.value).norm();
                worst = worst.max(delta);
                ok &= delta <= 1e-6;
            }
        }
    }

    // Frozen spot values; re-derive ζ(2), ζ(3) with the summation oracle.
    assert!((riemann_zeta_summation_oracle(2.0, 100_000) - ZETA2).abs() < 5e-12);
    assert!((riemann_zeta_summation_oracle(3.0, 100_000) - ZETA3).abs() < 5e-12);
    let mu2 = corpus::roots_of_unity(2);
    let spot1 = igusa(&[c(2.0, 0.0)], c(1.0, 0.0), DEFAULT_TOLERANCE, &mu2).unwrap();
    let d1 = (spot1 - c(1.25 * ZETA2, 0.0)).norm();
    ok &= d1 <= 1e-9;
    let spot2 = igusa(&[c(3.0, 0.0)], c(2.0, 0.0), DEFAULT_TOLERANCE, &mu2).unwrap();
    let d2 = (spot2 - c(11.0 / 8.0 * ZETA3, 0.0)).norm();
    ok &= d2 <= 1e-9;

    let elapsed = start.elapsed().as_secs_f64();
    report(
        5,
        "euler product",
        ok,
        elapsed,
        &format!(
            "{cases} product-vs-series cases (max |Δ| = {worst:.1e}); spots {d1:.1e}, {d2:.1e}"
        ),
    );
}

/// Criterion 6: numeric residues of -D(s; w) match the exact exponents to
/// 1e-3 on the corpus; exact exponent sum rule for single points; < 30 s.
#[test]
fn criterion_6_residues() {
    let start = Instant::now();
    let mut ok = true;
    let mut worst = 0.0f64;

    let mut check_scheme = |scheme: &F1Scheme, w: u32, expected: &[(u32, Rational)]| {
        for (j, want) in expected {
            let exact = poles::order_at(*j, w, scheme).unwrap();
            assert_eq!(&exact, want, "exact order at j={j} (w={w})");
            let numeric = poles::residue_numeric(*j, w, scheme, 1e-5).unwrap();
            let delta = (numeric - c(exact.to_f64().unwrap(), 0.0)).norm();
            worst = worst.max(delta);
            ok &= delta <= 1e-3;
        }
    };

    check_scheme(&corpus::gm(), 1, &[(0, rat(1, 1)), (1, rat(-1, 1))]);
    check_scheme(&corpus::roots_of_unity(2), 1, &[(0, rat(-3, 2))]);
    check_scheme(&corpus::roots_of_unity(3), 1, &[(0, rat(-5, 3))]);
    // Rank-2 point with torsion Z/2 at w = 2: exponents -C(4,j)(-1)^{4-j}·μ((Z/2)²)
    // with μ((Z/2)²) = 5/2 — all five candidate locations.
    check_scheme(
        &corpus::rank2_with_mu2(),
        2,
        &[
            (0, rat(-5, 2)),
            (1, rat(10, 1)),
            (2, rat(-15, 1)),
            (3, rat(10, 1)),
            (4, rat(-5, 2)),
        ],
    );
    check_scheme(
        &corpus::gm_with_mu2(),
        1,
        &[(0, rat(-1, 2)), (1, rat(-1, 1))],
    );

    // Exact sum rule Σ_j order_at(j) = 0, single point, n ∈ {1,2,3}, w = 1.
    for rank in 1..=3u32 {
        for moduli in [&[][..], &[2u64][..], &[4]] {
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
            assert!(total.is_zero(), "sum rule at rank {rank}, {moduli:?}");
        }
    }

    let elapsed = start.elapsed().as_secs_f64();
    report(
        6,
        "residues",
        ok && elapsed < 30.0,
        elapsed,
        &format!("max |numeric - exact| = {worst:.1e}; sum rules exact"),
    );
}

/// Criterion 7: specializations (a = 1 and the r = 1, a = 2 Soulé case) to
/// 1e-12; point counts match hand tables exactly for m ≤ 20.
#[test]
fn criterion_7_specializations_and_counts() {
    let start = Instant::now();
    let mut ok = true;
    let mut worst = 0.0f64;

    for (_, scheme) in corpus::schemes() {
        let max_rank = scheme
            .points()
            .iter()
            .map(|p| p.units.rank())
            .max()
            .unwrap_or(0) as f64;
        for w in [c(1.0, 0.0), c(2.0, 0.0), c(0.3, -0.7)] {
            let s = [c(2.0 * max_rank + 7.0, 0.0), c(2.0 * max_rank + 8.0, 0.5)];
            let left = igusa(&s, w, DEFAULT_TOLERANCE, &scheme).unwrap();
            let params = EvalParams::with_unit_a(&s, w, DEFAULT_TOLERANCE).unwrap();
            let right = hurwitz_igusa(&params, &scheme).unwrap();
            let delta = (left - right).norm();
            worst = worst.max(delta);
            ok &= delta <= 1e-12;
        }
        for s in [c(2.0 * max_rank + 6.5, 0.0), c(2.0 * max_rank + 7.25, 1.0)] {
            let left = modified_soule_series(s, c(1.0, 0.0), &scheme).unwrap();
            let params = EvalParams::new(
                vec![s + 1.0],
                vec![c(2.0, 0.0)],
                c(1.0, 0.0),
                DEFAULT_TOLERANCE,
            )
            .unwrap();
            let right = hurwitz_igusa(&params, &scheme).unwrap();
            let delta = (left - right).norm();
            worst = worst.max(delta);
            ok &= delta <= 1e-12;
        }
    }

    // Hand-computed #X(F_{1^m}) tables, m = 1..=20.
    let tables: Vec<(&str, F1Scheme, [u64; 20])> = vec![
        (
            "gm",
            corpus::gm(),
            [
                1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20,
            ],
        ),
        (
            "mu2",
            corpus::roots_of_unity(2),
            [1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2],
        ),
        (
            "mu3",
            corpus::roots_of_unity(3),
            [1, 1, 3, 1, 1, 3, 1, 1, 3, 1, 1, 3, 1, 1, 3, 1, 1, 3, 1, 1],
        ),
        (
            "gm+mu2",
            corpus::gm_with_mu2(),
            [
                2, 4, 4, 6, 6, 8, 8, 10, 10, 12, 12, 14, 14, 16, 16, 18, 18, 20, 20, 22,
            ],
        ),
        (
            "rank2xmu2",
            corpus::rank2_with_mu2(),
            [
                1, 8, 9, 32, 25, 72, 49, 128, 81, 200, 121, 288, 169, 392, 225, 512, 289, 648, 361,
                800,
            ],
        ),
    ];
    for (name, scheme, expected) in &tables {
        for (idx, want) in expected.iter().enumerate() {
            let m = idx as u64 + 1;
            let got = scheme.count_points(m).unwrap();
            assert_eq!(
                got,
                num_bigint::BigUint::from(*want),
                "count for {name} at m = {m}"
            );
        }
    }

    let elapsed = start.elapsed().as_secs_f64();
    report(
        7,
        "specializations and point counts",
        ok,
        elapsed,
        &format!("identities max |Δ| = {worst:.1e}; 100 table entries exact"),
    );
}
