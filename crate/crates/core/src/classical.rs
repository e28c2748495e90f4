//! Classical simple random walks: exact 1D/2D return probabilities, their
//! generating functions, and the 3D return probability through the lattice
//! Green function at the origin.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::DyadicRational;
use crate::quadrature::{integrate, Estimate};
use crate::special::{central_binomial, elliptic_k_agm, elliptic_k_from_complement};

fn check_dim(dim: u32) -> Result<()> {
    match dim {
        1 | 2 => Ok(()),
        _ => Err(Error::Domain(format!(
            "dimension {dim} not supported; use the watson operations for d = 3"
        ))),
    }
}

fn check_z(z: f64) -> Result<()> {
    if !(0.0..1.0).contains(&z) {
        return Err(Error::Domain(format!("z = {z} must satisfy 0 <= z < 1")));
    }
    Ok(())
}

/// Return probability of the simple random walk on `ℤ^dim` at time `n`:
/// `C(2j, j)/4^j` in 1D and its square in 2D for `n = 2j`, zero for odd `n`.
pub fn rw_return_prob(dim: u32, n: u64) -> Result<DyadicRational> {
    check_dim(dim)?;
    if n % 2 == 1 {
        return Ok(DyadicRational::zero());
    }
    let j = n / 2;
    let c = central_binomial(j);
    Ok(match dim {
        1 => DyadicRational::new(c, 2 * j),
        _ => DyadicRational::new(&c * &c, 4 * j),
    })
}

/// `Σ p_n z^n`: `1/√(1−z²)` in 1D, `(2/π)K(z)` in 2D.
pub fn rw_gf(dim: u32, z: f64) -> Result<f64> {
    check_dim(dim)?;
    check_z(z)?;
    match dim {
        1 => Ok(1.0 / ((1.0 - z) * (1.0 + z)).sqrt()),
        _ => Ok(2.0 / PI * elliptic_k_agm(z)?),
    }
}

/// `Σ_{n≤N} p_n z^n` with exact coefficients rounded at the last step.
pub fn rw_gf_partial(dim: u32, z: f64, truncation: u64) -> Result<f64> {
    check_dim(dim)?;
    check_z(z)?;
    let mut sum = crate::genfun::CompensatedSum::default();
    let mut central = BigInt::one();
    for j in 0..=truncation / 2 {
        if j > 0 {
            // C(2j, j) = C(2j−2, j−1) · 2(2j−1) / j
            central = central * (2 * (2 * j - 1)) / j;
        }
        let p = match dim {
            1 => DyadicRational::new(central.clone(), 2 * j),
            _ => DyadicRational::new(&central * &central, 4 * j),
        };
        sum.add(p.to_f64() * z.powi(2 * j as i32));
    }
    Ok(sum.value())
}

/// Upper bound on the generating-function tail `Σ_{n>N} p_n z^n`,
/// from `C(2j, j)/4^j ≤ 1/√(πj)`.
pub fn rw_tail_bound(dim: u32, z: f64, truncation: u64) -> Result<f64> {
    check_dim(dim)?;
    check_z(z)?;
    let j0 = (truncation / 2 + 1) as f64;
    let coeff = match dim {
        1 => 1.0 / (PI * j0).sqrt(),
        _ => 1.0 / (PI * j0),
    };
    Ok(z.powi(truncation as i32 + 1) / (1.0 - z) * coeff.min(1.0))
}

/// Modulus `2√3 + √6 − 2√2 − 3` in Watson's closed form.
pub fn watson_modulus() -> f64 {
    2.0 * 3f64.sqrt() + 6f64.sqrt() - 2.0 * 2f64.sqrt() - 3.0
}

/// Prefactor `3(18 + 12√2 − 10√3 − 7√6)`.
pub fn watson_prefactor() -> f64 {
    3.0 * (18.0 + 12.0 * 2f64.sqrt() - 10.0 * 3f64.sqrt() - 7.0 * 6f64.sqrt())
}

/// `G = 3(18+12√2−10√3−7√6) · K(k₀)² · (2/π)²`.
pub fn watson_g_closed() -> f64 {
    let k = elliptic_k_agm(watson_modulus()).expect("k0 is about 0.085");
    watson_prefactor() * k * k * (2.0 / PI).powi(2)
}

/// `K(2/(3 − cos θ))`, with the complementary modulus computed from
/// `1 − cos θ = 2 sin²(θ/2)` so the `θ → 0` end keeps full precision.
fn k_of_theta(theta: f64) -> f64 {
    let one_minus_cos = 2.0 * (0.5 * theta).sin().powi(2);
    let three_minus_cos = 2.0 + one_minus_cos;
    let k_prime = (one_minus_cos * (4.0 + one_minus_cos)).sqrt() / three_minus_cos;
    elliptic_k_from_complement(k_prime).expect("0 < k' <= 1 for 0 < theta <= pi")
}

const SPLIT: f64 = 1e-2;
const T_MAX: f64 = 60.0;
const MAX_SEGMENTS: usize = 2000;

/// `∫₀^π f(θ) dθ` for an integrand with a logarithmic singularity at `θ = 0`:
/// `[SPLIT, π]` directly and `[0, SPLIT]` through `θ = e^{−t}`.
fn integrate_log_singular<F: Fn(f64) -> f64>(f: F, rel_tol: f64) -> Result<Estimate> {
    let regular = integrate(&f, SPLIT, PI, 0.0, rel_tol, MAX_SEGMENTS)?;
    let singular = integrate(
        |t: f64| {
            let theta = (-t).exp();
            f(theta) * theta
        },
        -SPLIT.ln(),
        T_MAX,
        0.0,
        rel_tol,
        MAX_SEGMENTS,
    )?;
    // K(k) ≤ ln(4/k') + 1 with k' ≥ θ/2 near 0, so the dropped piece is below (T + 3)·e^{−T}.
    let dropped = (T_MAX + 3.0) * (-T_MAX).exp();
    Ok(Estimate {
        value: regular.value + singular.value,
        error: regular.error + singular.error + dropped,
    })
}

fn check_tol(rel_tol: f64) -> Result<()> {
    if rel_tol.is_nan() || rel_tol < 1e-10 {
        return Err(Error::Domain(format!("rel_tol = {rel_tol} must be >= 1e-10")));
    }
    Ok(())
}

/// The lattice Green function of the 3D simple random walk at the origin,
///
/// `G = (3/π²) ∫_{−π}^{π} K(2/(3 − cos θ)) / (3 − cos θ) dθ`,
///
/// obtained by doing two of the three Fourier integrals in closed form.
pub fn watson_g_quadrature(rel_tol: f64) -> Result<Estimate> {
    check_tol(rel_tol)?;
    let half = integrate_log_singular(
        |theta| k_of_theta(theta) / (3.0 - theta.cos()),
        rel_tol,
    )
    .map_err(|e| scale_convergence(e, 6.0 / (PI * PI)))?;
    let s = 6.0 / (PI * PI);
    Ok(Estimate {
        value: s * half.value,
        error: s * half.error,
    })
}

/// `(1/π²) ∫_{−π}^{π} K(2/(3 − cos θ)) dθ` taken literally, without the
/// `3/(3 − cos θ)` weight. Evaluates to about 1.34426, not `G`.
pub fn watson_integral_unweighted(rel_tol: f64) -> Result<Estimate> {
    check_tol(rel_tol)?;
    let half = integrate_log_singular(k_of_theta, rel_tol)
        .map_err(|e| scale_convergence(e, 2.0 / (PI * PI)))?;
    let s = 2.0 / (PI * PI);
    Ok(Estimate {
        value: s * half.value,
        error: s * half.error,
    })
}

fn scale_convergence(e: Error, s: f64) -> Error {
    match e {
        Error::Convergence {
            estimate,
            error_estimate,
        } => Error::Convergence {
            estimate: s * estimate,
            error_estimate: s * error_estimate,
        },
        other => other,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WatsonResult {
    pub g_quadrature: f64,
    pub g_closed: f64,
    /// `1 − 1/G` from the closed form.
    pub f_return: f64,
    pub quadrature_error_estimate: f64,
}

impl WatsonResult {
    pub fn agrees(&self) -> bool {
        (self.g_quadrature - self.g_closed).abs() <= self.quadrature_error_estimate.max(1e-6)
    }
}

/// Return probability `F = 1 − 1/G` of the 3D simple random walk.
pub fn watson_return_prob(rel_tol: f64) -> Result<WatsonResult> {
    let q = watson_g_quadrature(rel_tol)?;
    let g_closed = watson_g_closed();
    Ok(WatsonResult {
        g_quadrature: q.value,
        g_closed,
        f_return: 1.0 - 1.0 / g_closed,
        quadrature_error_estimate: q.error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn d(s: &str) -> DyadicRational {
        s.parse().unwrap()
    }

    #[test]
    fn return_prob_examples() {
        assert_eq!(rw_return_prob(1, 2).unwrap(), d("1/2"));
        assert_eq!(rw_return_prob(2, 2).unwrap(), d("1/4"));
        assert_eq!(rw_return_prob(2, 4).unwrap(), d("9/64"));
        assert_eq!(rw_return_prob(1, 0).unwrap(), d("1"));
        assert_eq!(rw_return_prob(1, 7).unwrap(), d("0"));
        assert!(rw_return_prob(3, 2).is_err());
    }

    #[test]
    fn two_dimensional_is_square_of_one_dimensional() {
        for n in 0..=100 {
            let one = rw_return_prob(1, 2 * n).unwrap();
            assert_eq!(rw_return_prob(2, 2 * n).unwrap(), &one * &one);
        }
    }

    #[test]
    fn gf_examples() {
        assert_eq!(rw_gf(1, 0.0).unwrap(), 1.0);
        assert_eq!(rw_gf(2, 0.0).unwrap(), 1.0);
        assert!(rw_gf(1, 1.0).is_err());
        assert!(rw_gf(2, -0.5).is_err());
    }

    #[test]
    fn gf_partial_sums_converge_within_tail() {
        for dim in [1, 2] {
            for z in [0.3, 0.5, 0.6] {
                let n = 120;
                let partial = rw_gf_partial(dim, z, n).unwrap();
                let tail = rw_tail_bound(dim, z, n).unwrap();
                let closed = rw_gf(dim, z).unwrap();
                assert!(closed - partial >= -1e-12);
                assert!((closed - partial).abs() <= tail + 1e-10, "dim {dim} z {z}");
            }
        }
    }

    #[test]
    fn watson_surds() {
        let k0 = watson_modulus();
        assert!(k0 > 0.0 && k0 < 1.0);
        assert!((k0 - 0.085_164_233_174_742_59).abs() < 1e-15);
        assert!(watson_prefactor() > 0.0);
    }

    #[test]
    fn watson_closed_form_value() {
        // mpmath at 30 digits: 1.51638605915197801815601215968
        assert!((watson_g_closed() - 1.516_386_059_151_978).abs() < 1e-13);
    }

    #[test]
    fn integrand_at_pi_is_k_half() {
        let v = k_of_theta(PI);
        assert!((v - elliptic_k_agm(0.5).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn quadrature_matches_closed_form() {
        let r = watson_return_prob(1e-10).unwrap();
        assert!(r.agrees());
        assert!((r.g_quadrature - r.g_closed).abs() < 1e-8, "{r:?}");
        assert!(r.f_return > 0.0 && r.f_return < 1.0);
    }

    #[test]
    fn unweighted_integral_is_not_g() {
        let v = watson_integral_unweighted(1e-10).unwrap().value;
        // mpmath: 1.344257372761832
        assert!((v - 1.344_257_372_761_832).abs() < 1e-8, "{v}");
    }

    #[test]
    fn tolerance_guard() {
        assert!(watson_g_quadrature(1e-12).is_err());
    }

    #[test]
    fn monte_carlo_return_frequency() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        let trials = 200_000;
        let hits = (0..trials)
            .filter(|_| (0..10).map(|_| if rng.gen::<bool>() { 1i32 } else { -1 }).sum::<i32>() == 0)
            .count();
        let p = 63.0 / 256.0;
        let se = (p * (1.0 - p) / trials as f64).sqrt();
        let freq = hits as f64 / trials as f64;
        assert!((freq - p).abs() < 3.0 * se, "{freq} vs {p}");
        assert_eq!(rw_return_prob(1, 10).unwrap(), d("63/256"));
    }
}
