//! Exact arithmetic for Hadamard-walk amplitudes and probabilities.
//!
//! Every amplitude produced by a walk whose coin entries lie in
//! `{0, ±1, ±i}·(1/√2)^s` is a Gaussian integer times a power of `1/√2`,
//! so every probability is a dyadic rational. Nothing here ever rounds.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// `x · 2^e` without overflowing the intermediate power.
pub(crate) fn ldexp(mut x: f64, mut e: i64) -> f64 {
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
    }
    x * 2f64.powi(e as i32)
}

/// Splits an integer of any size into `(mantissa, exp)` with `n ≈ mantissa · 2^exp`.
fn bigint_to_scaled_f64(n: &BigInt) -> (f64, i64) {
    let bits = n.bits();
    let shift = bits.saturating_sub(64);
    let top = (n.abs() >> shift).to_u64().unwrap_or(u64::MAX) as f64;
    let signed = if n.is_negative() { -top } else { top };
    (signed, shift as i64)
}

/// A rational number `numerator / 2^denom_exp`.
///
/// Always stored in canonical form: the numerator is odd unless
/// `denom_exp == 0`, and zero is `0 / 2^0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    numerator: BigInt,
    denom_exp: u64,
}

impl DyadicRational {
    pub fn new(numerator: BigInt, denom_exp: u64) -> Self {
        Self::canonical(numerator, denom_exp)
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::canonical(n.into(), 0)
    }

    /// `1 / 2^k`.
    pub fn inverse_power_of_two(k: u64) -> Self {
        Self::canonical(BigInt::one(), k)
    }

    fn canonical(mut numerator: BigInt, mut denom_exp: u64) -> Self {
        match numerator.trailing_zeros() {
            None => denom_exp = 0,
            Some(tz) => {
                let shift = tz.min(denom_exp);
                if shift > 0 {
                    numerator >>= shift;
                    denom_exp -= shift;
                }
            }
        }
        DyadicRational {
            numerator,
            denom_exp,
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn denom_exp(&self) -> u64 {
        self.denom_exp
    }

    pub fn denominator(&self) -> BigInt {
        BigInt::one() << self.denom_exp
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        let (mantissa, shift) = bigint_to_scaled_f64(&self.numerator);
        ldexp(mantissa, shift - self.denom_exp as i64)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.numerator.clone(), self.denominator())
    }

    /// Converts a rational whose reduced denominator is a power of two.
    pub fn from_rational(r: &BigRational) -> Option<Self> {
        let den = r.denom();
        let tz = den.trailing_zeros().unwrap_or(0);
        if den != &(BigInt::one() << tz) {
            return None;
        }
        Some(Self::canonical(r.numer().clone(), tz))
    }

    /// `"9/128"`-style fraction with the denominator written out.
    pub fn fraction_string(&self) -> String {
        if self.denom_exp == 0 {
            self.numerator.to_string()
        } else {
            format!("{}/{}", self.numerator, self.denominator())
        }
    }

    /// The full terminating decimal expansion (dyadic rationals always terminate).
    pub fn decimal_string(&self) -> String {
        let k = self.denom_exp as usize;
        if k == 0 {
            return self.numerator.to_string();
        }
        // n / 2^k = n·5^k / 10^k
        let scaled = self.numerator.abs() * num_traits::pow(BigInt::from(5), k);
        let digits = scaled.to_string();
        let (int_part, frac_part) = if digits.len() > k {
            let (a, b) = digits.split_at(digits.len() - k);
            (a.to_string(), b.to_string())
        } else {
            ("0".to_string(), format!("{}{}", "0".repeat(k - digits.len()), digits))
        };
        let sign = if self.numerator.is_negative() { "-" } else { "" };
        format!("{sign}{int_part}.{frac_part}")
    }
}

impl Default for DyadicRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl Zero for DyadicRational {
    fn zero() -> Self {
        DyadicRational {
            numerator: BigInt::zero(),
            denom_exp: 0,
        }
    }

    fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl One for DyadicRational {
    fn one() -> Self {
        DyadicRational {
            numerator: BigInt::one(),
            denom_exp: 0,
        }
    }
}

/// Serialized as `"numerator/2^denom_exp"`, e.g. `"9/2^7"`.
impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.numerator, self.denom_exp)
    }
}

impl FromStr for DyadicRational {
    type Err = Error;

    /// Accepts `"n/2^k"`, `"n/d"` with `d` a power of two, or a plain integer.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<BigInt>().map(Self::from_integer).map_err(|_| bad()),
            Some((num, den)) => {
                let numerator: BigInt = num.trim().parse().map_err(|_| bad())?;
                let den = den.trim();
                if let Some(exp) = den.strip_prefix("2^") {
                    let k: u64 = exp.parse().map_err(|_| bad())?;
                    return Ok(Self::canonical(numerator, k));
                }
                let d: BigInt = den.parse().map_err(|_| bad())?;
                if d.sign() != Sign::Plus {
                    return Err(bad());
                }
                Self::from_rational(&BigRational::new(numerator, d)).ok_or_else(bad)
            }
        }
    }
}

impl Serialize for DyadicRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DyadicRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = &self.numerator << other.denom_exp;
        let rhs = &other.numerator << self.denom_exp;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a DyadicRational> for &'a DyadicRational {
    type Output = DyadicRational;

    fn add(self, rhs: &DyadicRational) -> DyadicRational {
        let k = self.denom_exp.max(rhs.denom_exp);
        let lhs = &self.numerator << (k - self.denom_exp);
        let rhs = &rhs.numerator << (k - rhs.denom_exp);
        DyadicRational::canonical(lhs + rhs, k)
    }
}

impl<'a> Sub<&'a DyadicRational> for &'a DyadicRational {
    type Output = DyadicRational;

    fn sub(self, rhs: &DyadicRational) -> DyadicRational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a DyadicRational> for &'a DyadicRational {
    type Output = DyadicRational;

    fn mul(self, rhs: &DyadicRational) -> DyadicRational {
        DyadicRational::canonical(
            &self.numerator * &rhs.numerator,
            self.denom_exp + rhs.denom_exp,
        )
    }
}

impl Neg for &DyadicRational {
    type Output = DyadicRational;

    fn neg(self) -> DyadicRational {
        DyadicRational {
            numerator: -&self.numerator,
            denom_exp: self.denom_exp,
        }
    }
}

impl Neg for DyadicRational {
    type Output = DyadicRational;

    fn neg(self) -> DyadicRational {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(DyadicRational, Add, add);
forward_owned_binop!(DyadicRational, Sub, sub);
forward_owned_binop!(DyadicRational, Mul, mul);

impl Sum for DyadicRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a DyadicRational> for DyadicRational {
    fn sum<I: Iterator<Item = &'a DyadicRational>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

/// Element of `ℤ[i]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussianInteger {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInteger {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInteger {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianInteger {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `re² + im²`.
    pub fn norm_sq(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        GaussianInteger {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    fn shl(&self, bits: u64) -> Self {
        GaussianInteger {
            re: &self.re << bits,
            im: &self.im << bits,
        }
    }

    /// `self · 2^shift` as a complex double.
    fn to_scaled_complex(&self, shift: i64) -> Complex64 {
        let (re, sre) = bigint_to_scaled_f64(&self.re);
        let (im, sim) = bigint_to_scaled_f64(&self.im);
        Complex64::new(ldexp(re, sre + shift), ldexp(im, sim + shift))
    }
}

impl<'a> Add<&'a GaussianInteger> for &'a GaussianInteger {
    type Output = GaussianInteger;

    fn add(self, rhs: &GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussianInteger> for &'a GaussianInteger {
    type Output = GaussianInteger;

    fn sub(self, rhs: &GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a GaussianInteger> for &'a GaussianInteger {
    type Output = GaussianInteger;

    fn mul(self, rhs: &GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianInteger {
    type Output = GaussianInteger;

    fn neg(self) -> GaussianInteger {
        GaussianInteger {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for GaussianInteger {
    type Output = GaussianInteger;

    fn neg(self) -> GaussianInteger {
        GaussianInteger {
            re: -self.re,
            im: -self.im,
        }
    }
}

forward_owned_binop!(GaussianInteger, Add, add);
forward_owned_binop!(GaussianInteger, Sub, sub);
forward_owned_binop!(GaussianInteger, Mul, mul);

/// Exact product of two Gaussian integers.
pub fn gaussian_mul(a: &GaussianInteger, b: &GaussianInteger) -> GaussianInteger {
    a * b
}

/// A unit of `ℤ[i]` or zero: the possible numerators of an exact coin entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnitEntry {
    Zero,
    One,
    I,
    MinusOne,
    MinusI,
}

impl UnitEntry {
    pub fn from_gaussian(g: &GaussianInteger) -> Option<Self> {
        let re = g.re.to_i64()?;
        let im = g.im.to_i64()?;
        Some(match (re, im) {
            (0, 0) => UnitEntry::Zero,
            (1, 0) => UnitEntry::One,
            (0, 1) => UnitEntry::I,
            (-1, 0) => UnitEntry::MinusOne,
            (0, -1) => UnitEntry::MinusI,
            _ => return None,
        })
    }

    pub fn to_gaussian(self) -> GaussianInteger {
        match self {
            UnitEntry::Zero => GaussianInteger::new(0, 0),
            UnitEntry::One => GaussianInteger::new(1, 0),
            UnitEntry::I => GaussianInteger::new(0, 1),
            UnitEntry::MinusOne => GaussianInteger::new(-1, 0),
            UnitEntry::MinusI => GaussianInteger::new(0, -1),
        }
    }

    pub fn to_complex(self) -> Complex64 {
        match self {
            UnitEntry::Zero => Complex64::new(0.0, 0.0),
            UnitEntry::One => Complex64::new(1.0, 0.0),
            UnitEntry::I => Complex64::new(0.0, 1.0),
            UnitEntry::MinusOne => Complex64::new(-1.0, 0.0),
            UnitEntry::MinusI => Complex64::new(0.0, -1.0),
        }
    }

    pub fn is_zero(self) -> bool {
        self == UnitEntry::Zero
    }

    /// Multiplies `g` by this entry using only negations and swaps.
    pub fn apply(self, g: &GaussianInteger) -> GaussianInteger {
        match self {
            UnitEntry::Zero => GaussianInteger::zero(),
            UnitEntry::One => g.clone(),
            UnitEntry::MinusOne => -g,
            UnitEntry::I => GaussianInteger {
                re: -&g.im,
                im: g.re.clone(),
            },
            UnitEntry::MinusI => GaussianInteger {
                re: g.im.clone(),
                im: -&g.re,
            },
        }
    }
}

/// `core · (1/√2)^scale_exp`.
#[derive(Clone, Debug, Default)]
pub struct ScaledAmplitude {
    pub core: GaussianInteger,
    pub scale_exp: u64,
}

impl ScaledAmplitude {
    pub fn new(core: GaussianInteger, scale_exp: u64) -> Self {
        ScaledAmplitude { core, scale_exp }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.core.is_zero()
    }

    /// `|value|²` as an exact dyadic rational.
    pub fn prob(&self) -> DyadicRational {
        DyadicRational::new(self.core.norm_sq(), self.scale_exp)
    }

    /// Same value with the core multiplied by `2^k` (scale exponent grows by `2k`).
    pub fn rescaled(&self, k: u64) -> Self {
        ScaledAmplitude {
            core: self.core.shl(k),
            scale_exp: self.scale_exp + 2 * k,
        }
    }

    /// Strips factors of two from the core while the scale allows it.
    pub fn normalized(&self) -> Self {
        if self.core.is_zero() {
            return ScaledAmplitude::zero();
        }
        let tz = |x: &BigInt| x.trailing_zeros().unwrap_or(u64::MAX);
        let k = tz(&self.core.re)
            .min(tz(&self.core.im))
            .min(self.scale_exp / 2);
        ScaledAmplitude {
            core: GaussianInteger {
                re: &self.core.re >> k,
                im: &self.core.im >> k,
            },
            scale_exp: self.scale_exp - 2 * k,
        }
    }

    /// The core this value would have at scale exponent `target`, if representable.
    ///
    /// Only same-parity targets at or above the current exponent work; `√2`
    /// is not in `ℤ[i]`.
    pub fn core_at(&self, target: u64) -> Option<GaussianInteger> {
        if self.core.is_zero() {
            return Some(GaussianInteger::zero());
        }
        if target < self.scale_exp || !(target - self.scale_exp).is_multiple_of(2) {
            return None;
        }
        Some(self.core.shl((target - self.scale_exp) / 2))
    }

    pub fn to_complex(&self) -> Complex64 {
        // (1/√2)^s = 2^{-s/2}; the odd half is applied in floating point.
        let half = (self.scale_exp / 2) as i64;
        let z = self.core.to_scaled_complex(-half);
        if self.scale_exp % 2 == 1 {
            z * std::f64::consts::FRAC_1_SQRT_2
        } else {
            z
        }
    }
}

impl PartialEq for ScaledAmplitude {
    fn eq(&self, other: &Self) -> bool {
        let a = self.normalized();
        let b = other.normalized();
        a.scale_exp == b.scale_exp && a.core == b.core
    }
}

impl Eq for ScaledAmplitude {}

impl<'a> Mul<&'a ScaledAmplitude> for &'a ScaledAmplitude {
    type Output = ScaledAmplitude;

    fn mul(self, rhs: &ScaledAmplitude) -> ScaledAmplitude {
        ScaledAmplitude {
            core: &self.core * &rhs.core,
            scale_exp: self.scale_exp + rhs.scale_exp,
        }
    }
}

/// `|a|²` for a scaled amplitude.
pub fn amplitude_prob(a: &ScaledAmplitude) -> DyadicRational {
    a.prob()
}

/// Exact sum of two dyadic rationals.
pub fn dyadic_add(a: &DyadicRational, b: &DyadicRational) -> DyadicRational {
    a + b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> DyadicRational {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(dyadic_add(&d("1/2"), &d("1/8")), d("5/8"));
        assert_eq!(dyadic_add(&DyadicRational::zero(), &d("9/128")), d("9/128"));
        assert_eq!(dyadic_add(&d("9/128"), &d("25/512")), d("61/512"));
    }

    #[test]
    fn canonical_form() {
        let x = DyadicRational::new(BigInt::from(12), 5);
        assert_eq!(x.numerator(), &BigInt::from(3));
        assert_eq!(x.denom_exp(), 3);
        let z = DyadicRational::new(BigInt::zero(), 9);
        assert_eq!(z.denom_exp(), 0);
        assert_eq!(DyadicRational::new(BigInt::from(8), 0).numerator(), &BigInt::from(8));
    }

    #[test]
    fn string_forms() {
        let x = d("9/128");
        assert_eq!(x.to_string(), "9/2^7");
        assert_eq!(x.fraction_string(), "9/128");
        assert_eq!(x.decimal_string(), "0.0703125");
        assert_eq!(d("9/2^7"), x);
        assert_eq!(d("-3/4").decimal_string(), "-0.75");
        assert_eq!(d("5/2").decimal_string(), "2.5");
        assert_eq!(d("1").to_string(), "1/2^0");
        assert!("1/3".parse::<DyadicRational>().is_err());
        assert!("x/2^3".parse::<DyadicRational>().is_err());
    }

    #[test]
    fn serde_uses_exact_string() {
        let x = d("1225/32768");
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, "\"1225/2^15\"");
        let back: DyadicRational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn to_f64_handles_huge_exponents() {
        assert_eq!(d("1225/32768").to_f64(), 1225.0 / 32768.0);
        let tiny = DyadicRational::inverse_power_of_two(1100);
        assert!(tiny.to_f64() == 0.0 || tiny.to_f64() < 1e-300);
        let big = DyadicRational::new(BigInt::one() << 3000u32, 2999);
        assert_eq!(big.to_f64(), 2.0);
        let odd = DyadicRational::new((BigInt::one() << 2000u32) + 1, 2001);
        assert!((odd.to_f64() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn ordering() {
        assert!(d("1/8") < d("9/64"));
        assert!(d("-1/2") < DyadicRational::zero());
        assert_eq!(d("4/8").cmp(&d("1/2")), Ordering::Equal);
    }

    #[test]
    fn gaussian_examples() {
        let i = GaussianInteger::i();
        assert_eq!(gaussian_mul(&i, &i), GaussianInteger::new(-1, 0));
        let x = GaussianInteger::new(7, -3);
        assert_eq!(gaussian_mul(&GaussianInteger::one(), &x), x);
        assert_eq!(
            gaussian_mul(&GaussianInteger::new(1, 1), &GaussianInteger::new(1, -1)),
            GaussianInteger::new(2, 0)
        );
    }

    #[test]
    fn unit_entries_match_multiplication() {
        let g = GaussianInteger::new(5, -2);
        for u in [
            UnitEntry::Zero,
            UnitEntry::One,
            UnitEntry::I,
            UnitEntry::MinusOne,
            UnitEntry::MinusI,
        ] {
            assert_eq!(u.apply(&g), &u.to_gaussian() * &g);
            assert_eq!(UnitEntry::from_gaussian(&u.to_gaussian()), Some(u));
        }
        assert_eq!(UnitEntry::from_gaussian(&GaussianInteger::new(1, 1)), None);
    }

    #[test]
    fn amplitude_prob_examples() {
        let a = ScaledAmplitude::new(GaussianInteger::new(1, 1), 2);
        assert_eq!(amplitude_prob(&a), d("1/2"));
        let z = ScaledAmplitude::new(GaussianInteger::zero(), 13);
        assert_eq!(amplitude_prob(&z), DyadicRational::zero());
        let b = ScaledAmplitude::new(GaussianInteger::new(3, -1), 7);
        assert_eq!(amplitude_prob(&b), d("5/64"));
    }

    #[test]
    fn amplitude_equality_normalizes() {
        let a = ScaledAmplitude::new(GaussianInteger::new(1, 1), 1);
        assert_eq!(a, a.rescaled(3));
        assert_ne!(a, ScaledAmplitude::new(GaussianInteger::new(1, 1), 2));
        assert_eq!(a.core_at(2), None);
        assert_eq!(a.core_at(5), Some(GaussianInteger::new(4, 4)));
        let c = a.to_complex();
        assert!((c.re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-16);
    }
}
