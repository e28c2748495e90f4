//! Complete elliptic integral of the first kind,
//! `K(k) = ∫₀^{π/2} dθ / √(1 − k² sin²θ)` (modulus convention, not `m = k²`).

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

const AGM_MAX_ITER: usize = 64;

/// Modulus `k` with `0 ≤ k < 1`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct EllipticModulus(f64);

impl EllipticModulus {
    pub fn new(k: f64) -> Result<Self> {
        if !k.is_finite() || k < 0.0 {
            return Err(Error::Domain(format!("modulus k = {k} must satisfy 0 <= k < 1")));
        }
        if k >= 1.0 {
            return Err(Error::Domain(format!("K(k) diverges for k = {k} >= 1")));
        }
        Ok(EllipticModulus(k))
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// `k' = √(1 − k²)`, computed as `√((1−k)(1+k))`.
    pub fn complement(self) -> f64 {
        ((1.0 - self.0) * (1.0 + self.0)).sqrt()
    }
}

fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..AGM_MAX_ITER {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a {
            break;
        }
        let next = (0.5 * (a + b), (a * b).sqrt());
        a = next.0;
        b = next.1;
    }
    0.5 * (a + b)
}

/// `K(k) = π / (2·AGM(1, √(1−k²)))`.
pub fn elliptic_k_agm(k: f64) -> Result<f64> {
    let k = EllipticModulus::new(k)?;
    Ok(FRAC_PI_2 / agm(1.0, k.complement()))
}

/// `K` as a function of the complementary modulus `k' ∈ (0, 1]`.
///
/// Near `k = 1` this avoids the cancellation in `1 − k²`.
pub fn elliptic_k_from_complement(k_prime: f64) -> Result<f64> {
    if !(k_prime > 0.0 && k_prime <= 1.0) {
        return Err(Error::Domain(format!(
            "complementary modulus k' = {k_prime} must satisfy 0 < k' <= 1"
        )));
    }
    Ok(FRAC_PI_2 / agm(1.0, k_prime))
}

/// `(π/2) · Σ_{n<terms} C(2n,n)² (k/4)^{2n}`.
pub fn elliptic_k_series(k: f64, terms: usize) -> Result<f64> {
    let k = EllipticModulus::new(k)?.get();
    if terms == 0 {
        return Err(Error::Domain("series needs at least one term".into()));
    }
    let k2 = k * k;
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 1..terms {
        let ratio = (2 * n - 1) as f64 / (2 * n) as f64;
        term *= ratio * ratio * k2;
        sum += term;
    }
    Ok(FRAC_PI_2 * sum)
}

/// Bound on `K(k) − elliptic_k_series(k, terms)`: the successive-term ratio
/// never exceeds `k²`, so the remainder is at most `(π/2)·t_N / (1 − k²)`.
pub fn elliptic_series_tail(k: f64, terms: usize) -> Result<f64> {
    let k = EllipticModulus::new(k)?.get();
    let k2 = k * k;
    let mut term = 1.0;
    for n in 1..=terms {
        let ratio = (2 * n - 1) as f64 / (2 * n) as f64;
        term *= ratio * ratio * k2;
    }
    Ok(FRAC_PI_2 * term / (1.0 - k2))
}
