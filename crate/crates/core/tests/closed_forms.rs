use hadamard_walk::genfun::{gf_point, p0_closed, p0_prop1, return_probabilities_prop1};
use hadamard_walk::path::return_probability_xi;
use hadamard_walk::special::{binomial, central_binomial, hyp2f1_terminating, jacobi_p0, legendre_p0, ExactRational};
use hadamard_walk::walk::return_probabilities_direct;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

#[test]
fn four_routes_agree_up_to_100() {
    let direct = return_probabilities_direct(200);
    let prop1 = return_probabilities_prop1(200);
    for n in 1..=100u64 {
        let d = &direct[2 * n as usize];
        assert_eq!(d, &return_probability_xi(n).unwrap(), "xi n = {n}");
        assert_eq!(d, &p0_prop1(n), "prop1 n = {n}");
        assert_eq!(d, &prop1[2 * n as usize]);
        if n >= 2 {
            assert_eq!(d, &p0_closed(n / 2).unwrap(), "closed n = {n}");
        }
    }
}

#[test]
fn jacobi_recurrence_up_to_200() {
    for n in 0..=200 {
        assert_eq!(jacobi_p0(0, n) - jacobi_p0(0, n + 1), jacobi_p0(1, n), "n = {n}");
    }
}

#[test]
fn unsigned_alternating_sum_is_legendre() {
    for n in 1..=50u64 {
        let lhs: BigInt = (1..=n)
            .map(|g| {
                let v = binomial(n - 1, g - 1).pow(2);
                if g % 2 == 1 { v } else { -v }
            })
            .sum();
        let rhs = BigRational::from_integer(BigInt::one() << (n - 1)) * jacobi_p0(0, n - 1);
        assert_eq!(BigRational::from_integer(lhs), rhs, "n = {n}");
    }
}

#[test]
fn legendre_magnitude_is_central_binomial_ratio() {
    for m in 0..=100u64 {
        let expected = BigRational::new(central_binomial(m), BigInt::one() << (2 * m));
        assert_eq!(legendre_p0(2 * m).abs(), expected);
    }
}

#[test]
fn generating_function_identity() {
    for z in [0.1, 0.3, 0.5, 0.7] {
        let p = gf_point(z, None).unwrap();
        assert!(p.tail_bound <= 1e-12);
        assert!(p.within_bound(), "{p:?}");
    }
}

#[test]
fn hypergeometric_at_minus_one_matches_direct_sum() {
    let r = |n: i64| ExactRational::from_integer(BigInt::from(n));
    let v = hyp2f1_terminating(-3, &r(-3), &r(2), &r(-1)).unwrap();
    // 1 − 9/2 + 9/3 − 1/4
    assert_eq!(v, BigRational::new(BigInt::from(-3), BigInt::from(4)));
}
