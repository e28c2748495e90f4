//! Closed forms for the Hadamard-walk return probability and the
//! elliptic-integral generating function
//!
//! `Σ p_n(0) z^n = (1 + z²)/π · K(z²) + 1/2`.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::DyadicRational;
use crate::special::{central_binomial, elliptic_k_agm, legendre_p0};

/// Neumaier's compensated summation.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// `p_{2n}(0) = ½[P_{n−1}(0)² + P_n(0)²]` for `n ≥ 1`, and `p_0(0) = 1`.
pub fn p0_prop1(n: u64) -> DyadicRational {
    if n == 0 {
        return DyadicRational::one();
    }
    let a = legendre_p0(n - 1);
    let b = legendre_p0(n);
    let v = (&a * &a + &b * &b) / BigRational::from_integer(BigInt::from(2));
    DyadicRational::from_rational(&v).expect("squares of P_n(0) are dyadic")
}

/// `p_{4m}(0) = p_{4m+2}(0) = C(2m, m)² / 2^{4m+1}` for `m ≥ 1`.
pub fn p0_closed(m: u64) -> Result<DyadicRational> {
    if m == 0 {
        return Err(Error::OutOfHypothesis(
            "pairing closed form needs m >= 1 (times 0 and 2 differ)".into(),
        ));
    }
    let c = central_binomial(m);
    Ok(DyadicRational::new(&c * &c, 4 * m + 1))
}

/// `p_t(0)` for every `t ≤ max_time`, via the Legendre form with
/// `P_{2j}(0)²` built incrementally.
pub fn return_probabilities_prop1(max_time: u64) -> Vec<DyadicRational> {
    let half = max_time / 2;
    // legendre_sq[n] = P_n(0)²
    let mut legendre_sq = Vec::with_capacity(half as usize + 1);
    let mut central = BigInt::one();
    for n in 0..=half {
        if n % 2 == 1 {
            legendre_sq.push(DyadicRational::zero());
            continue;
        }
        let j = n / 2;
        if j > 0 {
            central = central * (2 * (2 * j - 1)) / j;
        }
        legendre_sq.push(DyadicRational::new(&central * &central, 4 * j));
    }
    let half_of = DyadicRational::inverse_power_of_two(1);
    (0..=max_time)
        .map(|t| match (t % 2, t / 2) {
            (1, _) => DyadicRational::zero(),
            (_, 0) => DyadicRational::one(),
            (_, n) => &half_of * &(&legendre_sq[n as usize - 1] + &legendre_sq[n as usize]),
        })
        .collect()
}

fn check_z(z: f64) -> Result<()> {
    if !(0.0..1.0).contains(&z) {
        return Err(Error::Domain(format!("z = {z} must satisfy 0 <= z < 1")));
    }
    Ok(())
}

/// `Σ_{n=0}^{N} p_n(0) z^n`, exact coefficients rounded only when multiplied by `z^n`.
pub fn gf_partial_sum(z: f64, truncation: u64) -> Result<f64> {
    check_z(z)?;
    let mut sum = CompensatedSum::default();
    for (n, p) in return_probabilities_prop1(truncation).iter().enumerate() {
        if !p.is_zero() {
            sum.add(p.to_f64() * z.powi(n as i32));
        }
    }
    Ok(sum.value())
}

/// `(1 + z²)/π · K(z²) + 1/2`.
pub fn gf_theorem(z: f64) -> Result<f64> {
    check_z(z)?;
    Ok((1.0 + z * z) / PI * elliptic_k_agm(z * z)? + 0.5)
}

/// Upper bound on `Σ_{n>N} p_n(0) z^n`.
///
/// Uses `p_{4m}(0) = p_{4m+2}(0) ≤ 1/(2πm)` (from `C(2m,m)² ≤ 16^m/(πm)`) and
/// `p_n(0) ≤ 1` when `N < 4`.
pub fn tail_bound(z: f64, truncation: u64) -> f64 {
    let m = (truncation / 4) as f64;
    z.powi(truncation as i32 + 1) / ((1.0 - z) * (PI * m).max(1.0))
}

/// Smallest `N ≥ 4` whose tail bound is at most `target`.
pub fn truncation_for(z: f64, target: f64) -> Result<u64> {
    check_z(z)?;
    if target.is_nan() || target <= 0.0 {
        return Err(Error::Domain(format!("target {target} must be positive")));
    }
    let mut n = 4;
    while tail_bound(z, n) > target {
        n += 1;
    }
    Ok(n)
}

/// One comparison of the truncated series with the closed form.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GfPoint {
    pub z: f64,
    pub lhs_partial: f64,
    pub rhs_closed: f64,
    pub truncation: u64,
    pub tail_bound: f64,
    pub abs_diff: f64,
}

impl GfPoint {
    /// `|lhs − rhs| ≤ tail_bound + 1e-10`.
    pub fn within_bound(&self) -> bool {
        self.abs_diff <= self.tail_bound + 1e-10
    }
}

/// Evaluates both sides at `z`; without an explicit truncation, picks the
/// smallest one with tail bound `≤ 1e-12`.
pub fn gf_point(z: f64, truncation: Option<u64>) -> Result<GfPoint> {
    let truncation = match truncation {
        Some(n) => n,
        None => truncation_for(z, 1e-12)?,
    };
    let lhs_partial = gf_partial_sum(z, truncation)?;
    let rhs_closed = gf_theorem(z)?;
    Ok(GfPoint {
        z,
        lhs_partial,
        rhs_closed,
        truncation,
        tail_bound: tail_bound(z, truncation),
        abs_diff: (lhs_partial - rhs_closed).abs(),
    })
}
