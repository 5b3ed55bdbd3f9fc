//! Exact arithmetic on finitely generated abelian groups.
//!
//! A finite abelian group is stored in canonical invariant-factor form
//! `n₁ | n₂ | ⋯ | n_k` (the Smith normal form of the diagonal relation matrix
//! of any presentation `∏ Z/m_jZ`). Everything downstream only ever needs
//! three decomposition-invariant quantities, all computed here exactly:
//!
//! * Hom counts into cyclic groups, `|Hom(Γ, Z/mZ)| = ∏_j gcd(m, n_j)`,
//! * the exponent `l = lcm(n₁,…,n_k)`, the period of `m ↦ |Hom(Γ, Z/mZ)|`,
//! * the μ-invariant
//!
//! ```text
//! μ(A) = Σ_{a∈A} 1/|a| = (1/l) Σ_{t=1}^{l} |Hom(A, Z/tZ)|,
//! ```
//!
//! a rational number that is not integral in general — the local obstruction
//! to rationality of the modified Soulé zeta function.
//!
//! No floating point is used anywhere in this module.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Result, ZetaError};
use crate::Rational;

/// Default element cap for [`FiniteAbelianGroup::mu_bruteforce`].
pub const DEFAULT_BRUTEFORCE_CAP: u128 = 1_000_000;

/// A finite abelian group in canonical invariant-factor form.
///
/// The empty moduli list is the trivial group (order 1, exponent 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    moduli: Vec<u64>,
}

impl FiniteAbelianGroup {
    /// The trivial group.
    pub fn trivial() -> Self {
        Self { moduli: Vec::new() }
    }

    /// Canonicalize an arbitrary product decomposition `∏ Z/m_jZ`.
    ///
    /// Factors equal to 1 vanish; the remaining moduli are reduced to the
    /// invariant-factor chain by the Smith reduction on the diagonal relation
    /// matrix (pairwise `(a, b) → (gcd, lcm)` until the chain divides).
    /// Hom counts, exponent and μ are unchanged by this normalization.
    pub fn from_moduli(moduli: &[u64]) -> Result<Self> {
        if let Some(&bad) = moduli.iter().find(|&&m| m == 0) {
            return Err(ZetaError::InvalidModulus(bad));
        }
        let mut v: Vec<u64> = moduli.iter().copied().filter(|&m| m != 1).collect();
        loop {
            let mut changed = false;
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    if !v[j].is_multiple_of(v[i]) {
                        let g = v[i].gcd(&v[j]);
                        let l = (v[i] / g).checked_mul(v[j]).ok_or_else(|| {
                            ZetaError::Resource(format!("lcm({}, {}) exceeds 64 bits", v[i], v[j]))
                        })?;
                        v[i] = g;
                        v[j] = l;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        v.sort_unstable();
        v.retain(|&m| m != 1);
        // Guarantee once and for all that the order fits in u128; every Hom
        // count divides the order, so they can never overflow afterwards.
        v.iter().try_fold(1u128, |acc, &m| {
            acc.checked_mul(m as u128)
                .ok_or_else(|| ZetaError::Resource("group order exceeds 128 bits".to_owned()))
        })?;
        Ok(Self { moduli: v })
    }

    /// The invariant factors, ascending, each dividing the next.
    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn is_trivial(&self) -> bool {
        self.moduli.is_empty()
    }

    /// Group order, the product of the invariant factors.
    pub fn order(&self) -> u128 {
        self.moduli.iter().map(|&m| m as u128).product()
    }

    /// Group exponent `l = lcm{ord(g)}`; 1 for the trivial group.
    ///
    /// In invariant-factor form this is the largest modulus.
    pub fn exponent(&self) -> u64 {
        self.moduli.last().copied().unwrap_or(1)
    }

    /// `|Hom(Γ, Z/mZ)| = ∏_j gcd(m, n_j)`, exact.
    pub fn hom_count(&self, m: u64) -> Result<u128> {
        if m == 0 {
            return Err(ZetaError::InvalidArgument(
                "hom_count requires m ≥ 1".to_owned(),
            ));
        }
        // Cannot overflow: every gcd divides its modulus, so the product
        // divides the order, which fits in u128 by construction.
        Ok(self.moduli.iter().map(|&n| m.gcd(&n) as u128).product())
    }

    /// The representative of `m` in `1..=l` with the same Hom count
    /// (`m ↦ |Hom(Γ, Z/mZ)|` is periodic with period the exponent `l`).
    pub fn periodic_rep(&self, m: u64) -> u64 {
        let l = self.exponent();
        let r = m % l;
        if r == 0 {
            l
        } else {
            r
        }
    }

    /// The μ-invariant `μ(Γ) = (1/l) Σ_{t=1}^{l} |Hom(Γ, Z/tZ)|`, exact.
    pub fn mu(&self) -> Rational {
        self.mu_power(1).expect("w = 1 is always valid")
    }

    /// `μ(Γ^w) = (1/l) Σ_{t=1}^{l} |Hom(Γ, Z/tZ)|^w` for `w ≥ 1`, exact.
    ///
    /// Equals the μ-invariant of the w-fold direct power of Γ, without
    /// enumerating it.
    pub fn mu_power(&self, w: u32) -> Result<Rational> {
        if w == 0 {
            return Err(ZetaError::InvalidArgument(
                "mu_power requires w ≥ 1".to_owned(),
            ));
        }
        let l = self.exponent();
        let mut sum = BigUint::zero();
        for t in 1..=l {
            let hom = self.hom_count(t).expect("t ≥ 1");
            sum += BigUint::from(hom).pow(w);
        }
        Ok(Rational::new(BigInt::from(sum), BigInt::from(l)))
    }

    /// Brute-force μ: enumerate every element of `∏ Z/n_jZ`, sum `1/order`.
    ///
    /// Independent oracle for [`FiniteAbelianGroup::mu`]; capped at
    /// [`DEFAULT_BRUTEFORCE_CAP`] elements.
    pub fn mu_bruteforce(&self) -> Result<Rational> {
        self.mu_bruteforce_capped(DEFAULT_BRUTEFORCE_CAP)
    }

    /// Brute-force μ with an explicit element cap.
    pub fn mu_bruteforce_capped(&self, cap: u128) -> Result<Rational> {
        let order = self.order();
        if order > cap {
            return Err(ZetaError::Resource(format!(
                "group order {order} exceeds enumeration cap {cap}"
            )));
        }
        // Count elements by order; the element (x_j) has order
        // lcm_j (n_j / gcd(x_j, n_j)), which always divides the exponent.
        let mut by_order: BTreeMap<u64, u64> = BTreeMap::new();
        let mut tuple = vec![0u64; self.moduli.len()];
        loop {
            let ord = tuple
                .iter()
                .zip(&self.moduli)
                .fold(1u64, |acc, (&x, &n)| acc.lcm(&(n / x.gcd(&n))));
            *by_order.entry(ord).or_insert(0) += 1;
            // odometer over ∏ Z/n_j
            let mut d = 0;
            loop {
                if d == tuple.len() {
                    let mut mu = Rational::zero();
                    for (ord, count) in by_order {
                        mu += Rational::new(BigInt::from(count), BigInt::from(ord));
                    }
                    return Ok(mu);
                }
                tuple[d] += 1;
                if tuple[d] < self.moduli[d] {
                    break;
                }
                tuple[d] = 0;
                d += 1;
            }
        }
    }

    /// Direct sum `Γ ⊕ Δ`, renormalized to invariant factors.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let mut moduli = self.moduli.clone();
        moduli.extend_from_slice(&other.moduli);
        Self::from_moduli(&moduli)
    }

    /// The w-fold direct power `Γ^w`.
    pub fn power(&self, w: u32) -> Result<Self> {
        let mut moduli = Vec::with_capacity(self.moduli.len() * w as usize);
        for _ in 0..w {
            moduli.extend_from_slice(&self.moduli);
        }
        Self::from_moduli(&moduli)
    }
}

/// A finitely generated abelian group `Z^rank × torsion`.
///
/// Models the unit group `O×_{X,p}` of a point of a Noetherian F₁-scheme.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAbelianGroup {
    rank: u32,
    torsion: FiniteAbelianGroup,
}

impl FgAbelianGroup {
    pub fn new(rank: u32, torsion: FiniteAbelianGroup) -> Self {
        Self { rank, torsion }
    }

    /// Free abelian group `Z^rank`.
    pub fn free(rank: u32) -> Self {
        Self::new(rank, FiniteAbelianGroup::trivial())
    }

    /// Finite group (rank 0).
    pub fn finite(torsion: FiniteAbelianGroup) -> Self {
        Self::new(0, torsion)
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn torsion(&self) -> &FiniteAbelianGroup {
        &self.torsion
    }

    /// `|Hom(Z^n × Γ, Z/mZ)| = m^n · |Hom(Γ, Z/mZ)|`, exact.
    pub fn hom_count(&self, m: u64) -> Result<BigUint> {
        let torsion_part = self.torsion.hom_count(m)?;
        Ok(BigUint::from(m).pow(self.rank) * BigUint::from(torsion_part))
    }
}

/// One point of an F₁-scheme: a name and the unit group at the point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemePoint {
    pub name: String,
    pub units: FgAbelianGroup,
}

impl SchemePoint {
    pub fn new(name: impl Into<String>, units: FgAbelianGroup) -> Self {
        Self {
            name: name.into(),
            units,
        }
    }
}

/// A Noetherian F₁-scheme: finitely many named points with unit groups.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct F1Scheme {
    points: Vec<SchemePoint>,
}

impl F1Scheme {
    /// The empty scheme.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Build a scheme; point names must be unique.
    pub fn new(points: Vec<SchemePoint>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for p in &points {
            if !seen.insert(p.name.as_str()) {
                return Err(ZetaError::InvalidArgument(format!(
                    "duplicate point name `{}`",
                    p.name
                )));
            }
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[SchemePoint] {
        &self.points
    }

    /// `#X(F_{1^m}) = Σ_{p∈X} |Hom(O×_{X,p}, Z/mZ)|`, exact.
    pub fn count_points(&self, m: u64) -> Result<BigUint> {
        let mut total = BigUint::zero();
        for p in &self.points {
            total += p.units.hom_count(m).map_err(|e| e.at_point(&p.name))?;
        }
        Ok(total)
    }
}

/// Convenience: an exact rational as `f64` (used only by reporting layers).
pub fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}
