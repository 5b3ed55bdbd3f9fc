//! Cross-check of the Hurwitz zeta evaluation against reference values
//! computed independently with a 30-digit multiprecision implementation
//! (mpmath 1.3.0) and frozen here. Inputs are exact binary64 values, so the
//! reference computation saw bit-identical arguments.

use f1zeta::hurwitz::{evaluation_plan, hurwitz_zeta, HurwitzConfig};
use f1zeta::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn matches_multiprecision_references() {
    let cases: &[(Complex64, Complex64, Complex64)] = &[
        // zeta(2)
        (c(2.0, 0.0), c(1.0, 0.0), c(1.6449340668482264, 0.0)),
        // small real q
        (c(3.5, 0.0), c(0.25, 0.0), c(128.54695896428436, 0.0)),
        // complex s and q
        (
            c(2.5, 3.0),
            c(0.8, 0.4),
            c(3.212145465642042, -4.080306658773552),
        ),
        // negative non-integer s
        (c(-2.5, 0.0), c(4.0, 0.0), c(-22.236794588834425, 0.0)),
        // critical strip
        (c(0.5, 0.0), c(1.0, 0.0), c(-1.4603545088095868, 0.0)),
        // near the first nontrivial zero: heavy cancellation
        (
            c(0.5, 14.134725),
            c(1.0, 0.0),
            c(1.767429841384904e-8, -1.1102028930923116e-7),
        ),
        // complex s, real q
        (
            c(6.0, -2.0),
            c(2.5, 0.0),
            c(-0.0016672229219542405, 0.004268685421994199),
        ),
        // negative s, small q
        (c(-0.5, 0.0), c(0.3, 0.0), c(0.09335881508491532, 0.0)),
        // large q (domain edge)
        (c(3.0, 0.0), c(99.5, 0.0), c(5.101390133234966e-5, 0.0)),
        // deeper negative s
        (c(-7.5, 0.0), c(1.25, 0.0), c(0.0032199386828273844, 0.0)),
        // complex q with negative imaginary part
        (
            c(1.75, -0.5),
            c(0.6, -0.8),
            c(0.33677863113959716, 2.677581557423573),
        ),
        // larger s
        (
            c(12.0, 5.0),
            c(1.0, 1.0),
            c(0.12731942512338193, 0.7827452475702343),
        ),
    ];

    let cfg = HurwitzConfig::default();
    let mut worst = 0.0f64;
    for &(s, q, expected) in cases {
        let got = hurwitz_zeta(s, q, &cfg).unwrap();
        let delta = (got - expected).norm();
        // Certified truncation plus the binary64 roundoff floor at this
        // argument's cancellation scale.
        let allowed = 5e-12 + evaluation_plan(s, q, &cfg).unwrap().magnitude * 2e-15;
        worst = worst.max(delta / allowed);
        assert!(
            delta <= allowed,
            "s = {s}, q = {q}: got {got}, reference {expected}, |Δ| = {delta:e} > {allowed:e}"
        );
    }
    println!("12 multiprecision references matched, worst |Δ|/allowed = {worst:.3}");
}
