use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ExactRational;
use crate::error::{Error, Result};

/// Rising factorial `(x)_j`.
pub fn pochhammer(x: &ExactRational, j: u64) -> ExactRational {
    (0..j).fold(BigRational::one(), |acc, i| acc * (x + BigRational::from_integer(BigInt::from(i))))
}

/// `₂F₁(a, b; c; z)` for `a = −m ≤ 0`, summed exactly:
/// `Σ_{j=0}^{m} (a)_j (b)_j / ((c)_j j!) z^j`.
///
/// Rejects `c ∈ {a, a+1, …, 0}`, where the series is not defined.
pub fn hyp2f1_terminating(
    a: i64,
    b: &ExactRational,
    c: &ExactRational,
    z: &ExactRational,
) -> Result<ExactRational> {
    if a > 0 {
        return Err(Error::Domain(format!("a = {a} must be a nonpositive integer")));
    }
    if c.is_integer() && !c.is_positive_integer() && c.to_integer() >= BigInt::from(a) {
        return Err(Error::Domain(format!("c = {c} is a nonpositive integer >= a = {a}")));
    }
    let m = a.unsigned_abs();
    // Horner in unreduced integer form: F = 1 + r_0(1 + r_1(1 + …)),
    // r_j = (a+j)(b+j)z / ((c+j)(j+1)); one gcd at the end.
    let (bn, bd) = (b.numer(), b.denom());
    let (cn, cd) = (c.numer(), c.denom());
    let (zn, zd) = (z.numer(), z.denom());
    let mut acc_num = BigInt::one();
    let mut acc_den = BigInt::one();
    for j in (0..m).rev() {
        let jb = BigInt::from(j);
        let num = (BigInt::from(a) + &jb) * (bn + &jb * bd) * zn * cd;
        let den = (cn + &jb * cd) * (&jb + 1u32) * bd * zd;
        acc_num = &acc_den * &den + num * acc_num;
        acc_den *= den;
    }
    Ok(BigRational::new(acc_num, acc_den))
}

trait PositiveInteger {
    fn is_positive_integer(&self) -> bool;
}

impl PositiveInteger for BigRational {
    fn is_positive_integer(&self) -> bool {
        self.is_integer() && self.to_integer() > BigInt::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{binomial, jacobi_p0, rational};
    use proptest::prelude::*;

    #[test]
    fn a_zero_is_one() {
        let v = hyp2f1_terminating(0, &rational(7, 3), &rational(-5, 2), &rational(9, 4)).unwrap();
        assert_eq!(v, rational(1, 1));
    }

    #[test]
    fn forbidden_c_rejected() {
        let one = rational(1, 1);
        assert!(hyp2f1_terminating(-3, &one, &rational(-2, 1), &one).is_err());
        assert!(hyp2f1_terminating(-3, &one, &rational(0, 1), &one).is_err());
        assert!(hyp2f1_terminating(-3, &one, &rational(-3, 1), &one).is_err());
        assert!(hyp2f1_terminating(-3, &one, &rational(-4, 1), &one).is_ok());
        assert!(hyp2f1_terminating(2, &one, &one, &one).is_err());
    }

    #[test]
    fn known_small_value() {
        // ₂F₁(−2, 1; 1; z) = (1 − z)²
        let z = rational(1, 3);
        let v = hyp2f1_terminating(-2, &rational(1, 1), &rational(1, 1), &z).unwrap();
        assert_eq!(v, rational(4, 9));
    }

    #[test]
    fn alternating_binomial_sum_is_a_terminating_2f1() {
        for n in 1..=50u64 {
            let direct: BigRational = (1..=n)
                .map(|g| {
                    let sign = if g % 2 == 1 { 1 } else { -1 };
                    BigRational::new(BigInt::from(sign) * binomial(n - 1, g - 1).pow(2), BigInt::from(g))
                })
                .sum();
            let k = -(n as i64 - 1);
            let f = hyp2f1_terminating(k, &rational(k, 1), &rational(2, 1), &rational(-1, 1)).unwrap();
            assert_eq!(direct, f, "n = {n}");
            let pow2 = BigRational::from_integer(BigInt::one() << (n - 1));
            let g = hyp2f1_terminating(k, &rational(n as i64 + 1, 1), &rational(2, 1), &rational(1, 2)).unwrap();
            assert_eq!(f, &pow2 * g);
            let j = &pow2 / BigRational::from_integer(BigInt::from(n)) * jacobi_p0(1, n - 1);
            assert_eq!(f, j);
        }
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-12i64..=12, 1i64..=7).prop_map(|(n, d)| rational(n, d))
    }

    proptest! {
        #[test]
        fn pfaff_transformation(m in 0i64..9, b in small_rational(), c in small_rational(), z in small_rational()) {
            prop_assume!(z != rational(1, 1));
            let a = -m;
            let lhs = hyp2f1_terminating(a, &b, &c, &z);
            prop_assume!(lhs.is_ok());
            let w = &z / (&z - rational(1, 1));
            let rhs = hyp2f1_terminating(a, &(&c - &b), &c, &w).unwrap();
            let factor = num_traits::pow(rational(1, 1) - &z, m as usize);
            prop_assert_eq!(lhs.unwrap(), factor * rhs);
        }
    }
}
