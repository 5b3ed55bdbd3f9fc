//! Compensated (Kahan) summation for long fixed-order float accumulations.

use num_complex::Complex64;

/// Kahan-compensated accumulator for `Complex64`, applied componentwise.
///
/// Summation order is whatever the caller feeds in; the compensation only
/// shrinks roundoff, it never changes the (deterministic) order of operations.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct KahanSum {
    sum: Complex64,
    comp: Complex64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, term: Complex64) {
        let y = term - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> Complex64 {
        self.sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensates_small_terms() {
        let mut k = KahanSum::new();
        k.add(Complex64::new(1.0, 0.0));
        for _ in 0..10_000_000 {
            k.add(Complex64::new(1e-16, 1e-16));
        }
        let v = k.value();
        assert!((v.re - (1.0 + 1e-9)).abs() < 1e-12);
        assert!((v.im - 1e-9).abs() < 1e-12);
    }
}
