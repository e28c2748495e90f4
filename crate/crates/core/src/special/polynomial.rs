use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{binomial, central_binomial, hyp2f1_terminating, rational, ExactRational};

/// `P_n(0)` in the standard convention: zero for odd `n`,
/// `(−1)^m C(2m, m) / 4^m` for `n = 2m`.
pub fn legendre_p0(n: u64) -> ExactRational {
    if n % 2 == 1 {
        return BigRational::zero();
    }
    let m = n / 2;
    let v = BigRational::new(central_binomial(m), BigInt::one() << (2 * m));
    if m % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Jacobi polynomial `P^{(α,β)}_n(x)` through its terminating hypergeometric form
///
/// `P^{(α,β)}_n(x) = C(n+α, n) · ₂F₁(−n, n+α+β+1; α+1; (1−x)/2)`,
///
/// with the gamma-function prefactor written as a binomial since `α` is an integer.
pub fn jacobi(alpha: u64, beta: u64, n: u64, x: &ExactRational) -> ExactRational {
    let prefactor = BigRational::from_integer(binomial(n + alpha, n));
    let b = BigRational::from_integer(BigInt::from(n + alpha + beta + 1));
    let c = BigRational::from_integer(BigInt::from(alpha + 1));
    let z = (BigRational::one() - x) / BigRational::from_integer(BigInt::from(2));
    let f = hyp2f1_terminating(-(n as i64), &b, &c, &z)
        .expect("c = alpha + 1 is a positive integer");
    prefactor * f
}

/// `P^{(α,0)}_n(0)`.
pub fn jacobi_p0(alpha: u64, n: u64) -> ExactRational {
    jacobi(alpha, 0, n, &rational(0, 1))
}
