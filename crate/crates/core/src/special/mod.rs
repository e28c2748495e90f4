//! Special-function kernel: binomials, Legendre and Jacobi values at zero,
//! terminating Gauss hypergeometric sums, and the complete elliptic
//! integral of the first kind.

mod elliptic;
mod hypergeometric;
mod polynomial;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

pub use elliptic::{
    elliptic_k_agm, elliptic_k_from_complement, elliptic_k_series, elliptic_series_tail,
    EllipticModulus,
};
pub use hypergeometric::{hyp2f1_terminating, pochhammer};
pub use polynomial::{jacobi, jacobi_p0, legendre_p0};

/// Exact reduced rational with positive denominator.
pub type ExactRational = BigRational;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(2n, n)`.
pub fn central_binomial(n: u64) -> BigInt {
    binomial(2 * n, n)
}

pub(crate) fn rational(n: i64, d: i64) -> ExactRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
