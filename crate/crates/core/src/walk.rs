//! State-vector evolution of the discrete-time quantum walk on the integers.
//!
//! A coin `U = [[a, b], [c, d]]` is split into its top row `P` (moves the
//! walker left) and bottom row `Q` (moves it right), and one step maps
//! `ψ'(x) = P ψ(x+1) + Q ψ(x−1)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{DyadicRational, GaussianInteger, ScaledAmplitude, UnitEntry};

const UNITARY_TOL: f64 = 1e-12;

/// Coin whose entries are `{0, ±1, ±i} · (1/√2)^scale_exp`.
///
/// Unitarity forces every nonzero entry to share the exponent, which is
/// 0 (a monomial coin) or 1 (Hadamard-like).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactCoin {
    pub a: UnitEntry,
    pub b: UnitEntry,
    pub c: UnitEntry,
    pub d: UnitEntry,
    pub scale_exp: u64,
}

impl ExactCoin {
    pub fn new(a: UnitEntry, b: UnitEntry, c: UnitEntry, d: UnitEntry, scale_exp: u64) -> Result<Self> {
        let coin = ExactCoin {
            a,
            b,
            c,
            d,
            scale_exp,
        };
        coin.check_unitary()?;
        Ok(coin)
    }

    pub fn hadamard() -> Self {
        ExactCoin {
            a: UnitEntry::One,
            b: UnitEntry::One,
            c: UnitEntry::One,
            d: UnitEntry::MinusOne,
            scale_exp: 1,
        }
    }

    fn check_unitary(&self) -> Result<()> {
        let sq = |u: UnitEntry| if u.is_zero() { 0 } else { 1 };
        let target = 1u64 << self.scale_exp;
        if sq(self.a) + sq(self.c) != target {
            return Err(Error::NotUnitary("|a|^2 + |c|^2 != 1".into()));
        }
        if sq(self.b) + sq(self.d) != target {
            return Err(Error::NotUnitary("|b|^2 + |d|^2 != 1".into()));
        }
        let cross = &(&self.a.to_gaussian() * &self.b.to_gaussian().conj())
            + &(&self.c.to_gaussian() * &self.d.to_gaussian().conj());
        if !cross.is_zero() {
            return Err(Error::NotUnitary("a*conj(b) + c*conj(d) != 0".into()));
        }
        Ok(())
    }

    pub fn to_float(&self) -> FloatCoin {
        let s = std::f64::consts::FRAC_1_SQRT_2.powi(self.scale_exp as i32);
        FloatCoin {
            a: self.a.to_complex() * s,
            b: self.b.to_complex() * s,
            c: self.c.to_complex() * s,
            d: self.d.to_complex() * s,
        }
    }
}

/// General unitary coin in double precision.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FloatCoin {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl FloatCoin {
    /// Validates unitarity to within `1e-12`, naming the first violated condition.
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let col1 = a.norm_sqr() + c.norm_sqr();
        if (col1 - 1.0).abs() > UNITARY_TOL {
            return Err(Error::NotUnitary(format!("|a|^2 + |c|^2 = {col1}, expected 1")));
        }
        let col2 = b.norm_sqr() + d.norm_sqr();
        if (col2 - 1.0).abs() > UNITARY_TOL {
            return Err(Error::NotUnitary(format!("|b|^2 + |d|^2 = {col2}, expected 1")));
        }
        let cross = a * b.conj() + c * d.conj();
        if cross.norm() > UNITARY_TOL {
            return Err(Error::NotUnitary(format!(
                "a*conj(b) + c*conj(d) = {cross}, expected 0"
            )));
        }
        Ok(FloatCoin { a, b, c, d })
    }

    pub fn hadamard() -> Self {
        ExactCoin::hadamard().to_float()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CoinMatrix {
    Exact(ExactCoin),
    Float(FloatCoin),
}

impl CoinMatrix {
    pub fn hadamard() -> Self {
        CoinMatrix::Exact(ExactCoin::hadamard())
    }

    pub fn to_float(&self) -> FloatCoin {
        match self {
            CoinMatrix::Exact(c) => c.to_float(),
            CoinMatrix::Float(c) => *c,
        }
    }
}

/// Chirality state: components along `|L⟩` and `|R⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct QubitState {
    pub left: ScaledAmplitude,
    pub right: ScaledAmplitude,
}

impl QubitState {
    /// Requires `|left|² + |right|² = 1` exactly.
    pub fn new(left: ScaledAmplitude, right: ScaledAmplitude) -> Result<Self> {
        let norm = left.prob() + right.prob();
        if norm != DyadicRational::one() {
            return Err(Error::Domain(format!("initial qubit has squared norm {norm}, expected 1")));
        }
        Ok(QubitState { left, right })
    }

    /// `φ* = (1/√2, i/√2)`, the initial state with a symmetric distribution.
    pub fn phi_star() -> Self {
        QubitState {
            left: ScaledAmplitude::new(GaussianInteger::one(), 1),
            right: ScaledAmplitude::new(GaussianInteger::i(), 1),
        }
    }

    pub fn to_complex(&self) -> [Complex64; 2] {
        [self.left.to_complex(), self.right.to_complex()]
    }
}

/// Exact wavefunction at time `n`, stored densely over the positions
/// `−n, −n+2, …, n`; amplitude `k` sits at `x = −n + 2k` and every
/// amplitude carries the common factor `(1/√2)^scale_exp`.
#[derive(Clone, Debug, PartialEq)]
pub struct WaveFunction {
    time: u64,
    scale_exp: u64,
    amps: Vec<[GaussianInteger; 2]>,
}

impl WaveFunction {
    /// Point mass at the origin.
    pub fn origin(initial: &QubitState) -> Result<Self> {
        let scale_exp = initial.left.scale_exp.max(initial.right.scale_exp);
        let (Some(left), Some(right)) = (
            initial.left.core_at(scale_exp),
            initial.right.core_at(scale_exp),
        ) else {
            return Err(Error::Usage(
                "initial amplitudes differ by an odd power of 1/sqrt(2) and cannot share a scale".into(),
            ));
        };
        Ok(WaveFunction {
            time: 0,
            scale_exp,
            amps: vec![[left, right]],
        })
    }

    pub fn zero(time: u64) -> Self {
        WaveFunction {
            time,
            scale_exp: 0,
            amps: vec![[GaussianInteger::zero(), GaussianInteger::zero()]; time as usize + 1],
        }
    }

    pub fn time(&self) -> u64 {
        self.time
    }

    pub fn scale_exp(&self) -> u64 {
        self.scale_exp
    }

    fn position(&self, k: usize) -> i64 {
        -(self.time as i64) + 2 * k as i64
    }

    /// `(gL, gR)` at position `x`, or `None` outside the parity support.
    pub fn amplitude(&self, x: i64) -> Option<&[GaussianInteger; 2]> {
        let offset = x + self.time as i64;
        if offset < 0 || offset % 2 != 0 {
            return None;
        }
        self.amps.get((offset / 2) as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &[GaussianInteger; 2])> + '_ {
        self.amps.iter().enumerate().map(|(k, g)| (self.position(k), g))
    }

    pub fn is_zero(&self) -> bool {
        self.amps.iter().all(|[l, r]| l.is_zero() && r.is_zero())
    }
}

/// One step of the walk.
///
/// Exact states only accept exact coins; use [`evolve_float`] for general coins.
pub fn step(psi: &WaveFunction, coin: &CoinMatrix) -> Result<WaveFunction> {
    let coin = match coin {
        CoinMatrix::Exact(c) => c,
        CoinMatrix::Float(_) => {
            return Err(Error::Usage(
                "exact wavefunction cannot be stepped with a floating-point coin".into(),
            ))
        }
    };
    let n = psi.amps.len();
    let mut amps = Vec::with_capacity(n + 1);
    for k in 0..=n {
        // P ψ(x+1): old index k, lands in the left component.
        let left = match psi.amps.get(k) {
            Some([l, r]) => &coin.a.apply(l) + &coin.b.apply(r),
            None => GaussianInteger::zero(),
        };
        // Q ψ(x−1): old index k−1, lands in the right component.
        let right = match k.checked_sub(1).and_then(|j| psi.amps.get(j)) {
            Some([l, r]) => &coin.c.apply(l) + &coin.d.apply(r),
            None => GaussianInteger::zero(),
        };
        amps.push([left, right]);
    }
    Ok(WaveFunction {
        time: psi.time + 1,
        scale_exp: psi.scale_exp + coin.scale_exp,
        amps,
    })
}

/// `n` steps from the point mass at the origin.
pub fn evolve(initial: &QubitState, coin: &CoinMatrix, n: u64) -> Result<WaveFunction> {
    let mut psi = WaveFunction::origin(initial)?;
    for _ in 0..n {
        psi = step(&psi, coin)?;
    }
    Ok(psi)
}

/// Exact position distribution `P(X_n = x)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Distribution {
    pub time: u64,
    pub probs: BTreeMap<i64, DyadicRational>,
}

impl Distribution {
    pub fn get(&self, x: i64) -> DyadicRational {
        self.probs.get(&x).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> DyadicRational {
        self.probs.values().sum()
    }

    pub fn table(&self) -> DistributionTable {
        DistributionTable {
            time: self.time,
            rows: self
                .probs
                .iter()
                .map(|(&position, p)| DistributionRow {
                    position,
                    probability_exact: Some(p.clone()),
                    probability_float: p.to_f64(),
                })
                .collect(),
        }
    }
}

pub fn distribution(psi: &WaveFunction) -> Distribution {
    let probs = psi
        .iter()
        .map(|(x, [l, r])| (x, DyadicRational::new(l.norm_sq() + r.norm_sq(), psi.scale_exp)))
        .collect();
    Distribution {
        time: psi.time,
        probs,
    }
}

/// `p_n(0)` for the Hadamard walk started from `φ*`.
pub fn return_probability_direct(n: u64) -> DyadicRational {
    if n % 2 == 1 {
        return DyadicRational::zero();
    }
    let psi = evolve(&QubitState::phi_star(), &CoinMatrix::hadamard(), n)
        .expect("phi* and the Hadamard coin are compatible");
    distribution(&psi).get(0)
}

/// `p_t(0)` for every `t` in `0..=max_time` from a single evolution.
pub fn return_probabilities_direct(max_time: u64) -> Vec<DyadicRational> {
    let coin = CoinMatrix::hadamard();
    let mut psi = WaveFunction::origin(&QubitState::phi_star()).expect("phi* has a shared scale");
    let mut out = Vec::with_capacity(max_time as usize + 1);
    for t in 0..=max_time {
        if t > 0 {
            psi = step(&psi, &coin).expect("exact coin");
        }
        let p = match psi.amplitude(0) {
            Some([l, r]) => DyadicRational::new(l.norm_sq() + r.norm_sq(), psi.scale_exp),
            None => DyadicRational::zero(),
        };
        out.push(p);
    }
    out
}

/// Floating-point wavefunction for arbitrary unitary coins, same layout as [`WaveFunction`].
#[derive(Clone, Debug, PartialEq)]
pub struct FloatWaveFunction {
    pub time: u64,
    pub amps: Vec<[Complex64; 2]>,
}

impl FloatWaveFunction {
    pub fn origin(initial: [Complex64; 2]) -> Self {
        FloatWaveFunction {
            time: 0,
            amps: vec![initial],
        }
    }

    pub fn step(&self, coin: &FloatCoin) -> Self {
        let n = self.amps.len();
        let zero = Complex64::zero();
        let mut amps = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let left = self
                .amps
                .get(k)
                .map_or(zero, |[l, r]| coin.a * l + coin.b * r);
            let right = k
                .checked_sub(1)
                .and_then(|j| self.amps.get(j))
                .map_or(zero, |[l, r]| coin.c * l + coin.d * r);
            amps.push([left, right]);
        }
        FloatWaveFunction {
            time: self.time + 1,
            amps,
        }
    }

    pub fn distribution(&self) -> FloatDistribution {
        FloatDistribution {
            time: self.time,
            probs: self
                .amps
                .iter()
                .enumerate()
                .map(|(k, [l, r])| (-(self.time as i64) + 2 * k as i64, l.norm_sqr() + r.norm_sqr()))
                .collect(),
        }
    }
}

pub fn evolve_float(initial: [Complex64; 2], coin: &FloatCoin, n: u64) -> FloatWaveFunction {
    let mut psi = FloatWaveFunction::origin(initial);
    for _ in 0..n {
        psi = psi.step(coin);
    }
    psi
}

#[derive(Clone, Debug, PartialEq)]
pub struct FloatDistribution {
    pub time: u64,
    pub probs: BTreeMap<i64, f64>,
}

impl FloatDistribution {
    pub fn table(&self) -> DistributionTable {
        DistributionTable {
            time: self.time,
            rows: self
                .probs
                .iter()
                .map(|(&position, &p)| DistributionRow {
                    position,
                    probability_exact: None,
                    probability_float: p,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistributionRow {
    pub position: i64,
    pub probability_exact: Option<DyadicRational>,
    pub probability_float: f64,
}

/// Serializable view of a distribution (CSV or JSON).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistributionTable {
    pub time: u64,
    pub rows: Vec<DistributionRow>,
}

impl DistributionTable {
    /// `position,probability_exact,probability_float` with a header line;
    /// the exact column is empty for floating-point distributions.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("position,probability_exact,probability_float\n");
        for row in &self.rows {
            let exact = row
                .probability_exact
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_default();
            writeln!(out, "{},{},{:e}", row.position, exact, row.probability_float).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("distribution table serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> DyadicRational {
        s.parse().unwrap()
    }

    #[test]
    fn one_step_from_phi_star() {
        let psi0 = WaveFunction::origin(&QubitState::phi_star()).unwrap();
        let psi1 = step(&psi0, &CoinMatrix::hadamard()).unwrap();
        assert_eq!(psi1.scale_exp(), 2);
        // (1/2)(1+i)|L> at x=-1, (1/2)(1-i)|R> at x=+1
        assert_eq!(
            psi1.amplitude(-1).unwrap(),
            &[GaussianInteger::new(1, 1), GaussianInteger::zero()]
        );
        assert_eq!(
            psi1.amplitude(1).unwrap(),
            &[GaussianInteger::zero(), GaussianInteger::new(1, -1)]
        );
        let dist = distribution(&psi1);
        assert_eq!(dist.get(-1), d("1/2"));
        assert_eq!(dist.get(1), d("1/2"));
    }

    #[test]
    fn zero_state_stays_zero() {
        let z = WaveFunction::zero(3);
        let next = step(&z, &CoinMatrix::hadamard()).unwrap();
        assert!(next.is_zero());
        assert_eq!(next.time(), 4);
    }

    #[test]
    fn float_coin_rejected_for_exact_state() {
        let psi = WaveFunction::origin(&QubitState::phi_star()).unwrap();
        let coin = CoinMatrix::Float(FloatCoin::hadamard());
        assert!(matches!(step(&psi, &coin), Err(Error::Usage(_))));
    }

    #[test]
    fn evolve_examples() {
        let phi = QubitState::phi_star();
        let h = CoinMatrix::hadamard();
        let psi0 = evolve(&phi, &h, 0).unwrap();
        assert_eq!(distribution(&psi0).probs, BTreeMap::from([(0, DyadicRational::one())]));
        assert_eq!(distribution(&evolve(&phi, &h, 4).unwrap()).get(0), d("1/8"));
        assert_eq!(distribution(&evolve(&phi, &h, 8).unwrap()).get(0), d("9/128"));
    }

    #[test]
    fn two_step_distribution() {
        let psi = evolve(&QubitState::phi_star(), &CoinMatrix::hadamard(), 2).unwrap();
        let dist = distribution(&psi);
        assert_eq!(
            dist.probs,
            BTreeMap::from([(-2, d("1/4")), (0, d("1/2")), (2, d("1/4"))])
        );
        assert_eq!(dist.total(), DyadicRational::one());
    }

    #[test]
    fn direct_return_probability_examples() {
        assert_eq!(return_probability_direct(0), DyadicRational::one());
        assert_eq!(return_probability_direct(2), d("1/2"));
        assert_eq!(return_probability_direct(7), DyadicRational::zero());
        assert_eq!(return_probability_direct(16), d("1225/32768"));
        let all = return_probabilities_direct(18);
        assert_eq!(all[18], d("1225/32768"));
        assert_eq!(all[12], d("25/512"));
    }

    #[test]
    fn exact_coin_validation() {
        use UnitEntry::*;
        assert!(ExactCoin::new(One, Zero, Zero, I, 0).is_ok());
        assert!(ExactCoin::new(One, One, One, One, 1).is_err());
        assert!(ExactCoin::new(One, One, One, MinusOne, 0).is_err());
        assert!(ExactCoin::new(One, I, I, One, 1).is_ok());
    }

    #[test]
    fn float_coin_validation_names_condition() {
        let c = |re: f64| Complex64::new(re, 0.0);
        let err = FloatCoin::new(c(1.0), c(0.0), c(0.5), c(1.0)).unwrap_err();
        assert!(err.to_string().contains("|a|^2 + |c|^2"));
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let err = FloatCoin::new(c(s), c(s), c(s), c(s)).unwrap_err();
        assert!(err.to_string().contains("conj"));
        assert!(FloatCoin::new(c(s), c(s), c(s), c(-s)).is_ok());
    }

    #[test]
    fn incommensurate_initial_scales_rejected() {
        let left = ScaledAmplitude::new(GaussianInteger::new(1, 1), 2);
        let right = ScaledAmplitude::new(GaussianInteger::one(), 1);
        let q = QubitState::new(left, right).unwrap();
        assert!(matches!(WaveFunction::origin(&q), Err(Error::Usage(_))));
    }

    #[test]
    fn asymmetric_initial_state_is_normalized() {
        let q = QubitState::new(ScaledAmplitude::new(GaussianInteger::one(), 0), ScaledAmplitude::zero()).unwrap();
        let dist = distribution(&evolve(&q, &CoinMatrix::hadamard(), 25).unwrap());
        assert_eq!(dist.total(), DyadicRational::one());
        assert_ne!(dist.get(-23), dist.get(23));
    }

    #[test]
    fn csv_and_json_carry_exact_strings() {
        let dist = distribution(&evolve(&QubitState::phi_star(), &CoinMatrix::hadamard(), 2).unwrap());
        let csv = dist.table().to_csv();
        assert_eq!(
            csv,
            "position,probability_exact,probability_float\n-2,1/2^2,2.5e-1\n0,1/2^1,5e-1\n2,1/2^2,2.5e-1\n"
        );
        let json = dist.table().to_json();
        let back: DistributionTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, dist.table());
    }
}
