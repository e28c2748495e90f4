use hadamard_walk::exact::{amplitude_prob, GaussianInteger, ScaledAmplitude};
use hadamard_walk::walk::{self, distribution, evolve_float, step, CoinMatrix, QubitState, WaveFunction};
use hadamard_walk::DyadicRational;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

#[test]
fn normalization_symmetry_and_parity_up_to_200() {
    let coin = CoinMatrix::hadamard();
    let mut psi = WaveFunction::origin(&QubitState::phi_star()).unwrap();
    for n in 0..=200u64 {
        if n > 0 {
            psi = step(&psi, &coin).unwrap();
        }
        let dist = distribution(&psi);
        assert_eq!(dist.total(), DyadicRational::one(), "n = {n}");
        for (&x, p) in &dist.probs {
            assert_eq!((x - n as i64).rem_euclid(2), 0, "support parity at n = {n}");
            assert_eq!(p, &dist.get(-x), "symmetry at n = {n}, x = {x}");
        }
        // positions of the wrong parity are absent, i.e. zero
        assert!(dist.get(n as i64 + 1).is_zero());
        assert!(psi.amplitude(n as i64 - 1).is_none());
    }
}

#[test]
fn odd_time_return_is_zero() {
    let table = walk::return_probabilities_direct(201);
    for n in 0..=100 {
        assert!(table[2 * n + 1].is_zero());
    }
}

#[test]
fn float_engine_matches_exact_engine() {
    let phi = QubitState::phi_star();
    let coin = CoinMatrix::hadamard();
    for n in [0u64, 1, 2, 7, 30, 60] {
        let exact = distribution(&walk::evolve(&phi, &coin, n).unwrap());
        let float = evolve_float(phi.to_complex(), &coin.to_float(), n).distribution();
        assert_eq!(exact.probs.len(), float.probs.len());
        for (x, p) in &exact.probs {
            assert!((p.to_f64() - float.probs[x]).abs() <= 1e-12, "n {n} x {x}");
        }
    }
}

#[test]
fn general_float_coin_conserves_probability() {
    use num_complex::Complex64;
    let t = 0.4f64;
    let coin = hadamard_walk::FloatCoin::new(
        Complex64::new(t.cos(), 0.0),
        Complex64::new(0.0, t.sin()),
        Complex64::new(0.0, t.sin()),
        Complex64::new(t.cos(), 0.0),
    )
    .unwrap();
    let psi = evolve_float(QubitState::phi_star().to_complex(), &coin, 150);
    let total: f64 = psi.distribution().probs.values().sum();
    assert!((total - 1.0).abs() < 1e-12);
}

fn dyadic() -> impl Strategy<Value = DyadicRational> {
    (any::<i64>(), 0u64..80).prop_map(|(n, k)| DyadicRational::new(BigInt::from(n), k))
}

fn gaussian() -> impl Strategy<Value = GaussianInteger> {
    (-1000i64..1000, -1000i64..1000).prop_map(|(a, b)| GaussianInteger::new(a, b))
}

proptest! {
    #[test]
    fn dyadic_ring_laws(a in dyadic(), b in dyadic(), c in dyadic()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        let again = DyadicRational::new(a.numerator().clone(), a.denom_exp());
        prop_assert_eq!(&again, &a);
        prop_assert_eq!(&a - &a, DyadicRational::zero());
    }

    #[test]
    fn dyadic_string_round_trip(a in dyadic()) {
        let back: DyadicRational = a.to_string().parse().unwrap();
        prop_assert_eq!(&back, &a);
        let frac: DyadicRational = a.fraction_string().parse().unwrap();
        prop_assert_eq!(frac, a);
    }

    #[test]
    fn gaussian_ring_laws(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).norm_sq(), a.norm_sq() * b.norm_sq());
        prop_assert!(a.norm_sq() >= BigInt::zero());
    }

    #[test]
    fn amplitude_prob_rescale_invariant(g in gaussian(), s in 0u64..40, k in 0u64..10) {
        let a = ScaledAmplitude::new(g, s);
        let r = a.rescaled(k);
        prop_assert_eq!(amplitude_prob(&a), amplitude_prob(&r));
        prop_assert_eq!(&a, &r);
        prop_assert_eq!(amplitude_prob(&a.normalized()), amplitude_prob(&a));
    }
}
