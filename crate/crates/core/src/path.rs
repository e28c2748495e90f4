//! Path-counting calculus for the walk.
//!
//! `Ξ_n(l, m)` is the sum of all ordered products of `l` copies of `P` and
//! `m` copies of `Q`. With the extra matrices `R = [[c, d], [0, 0]]` and
//! `S = [[0, 0], [a, b]]`, the set `{P, Q, R, S}` is closed under
//! multiplication up to a coin entry, so every `Ξ_n(l, m)` is a linear
//! combination `p·P + q·Q + r·R + s·S`. For a unitary coin the four
//! matrices are orthonormal under `⟨A|B⟩ = tr(A*B)` and the coefficients
//! are unique.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{DyadicRational, GaussianInteger, ScaledAmplitude, UnitEntry};
use crate::special::binomial;
use crate::walk::{CoinMatrix, ExactCoin, FloatCoin, QubitState};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    P = 0,
    Q = 1,
    R = 2,
    S = 3,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::P, Basis::Q, Basis::R, Basis::S];
}

/// Which coin entry scales a basis product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoinSymbol {
    A,
    B,
    C,
    D,
}

/// `PRODUCTS[x][y] = (e, z)` means `x · y = e · z`.
pub const PRODUCTS: [[(CoinSymbol, Basis); 4]; 4] = {
    use Basis::*;
    use CoinSymbol::*;
    [
        [(A, P), (B, R), (A, R), (B, P)],
        [(C, S), (D, Q), (C, Q), (D, S)],
        [(C, P), (D, R), (C, R), (D, P)],
        [(A, S), (B, Q), (A, Q), (B, S)],
    ]
};

impl ExactCoin {
    fn entry(&self, sym: CoinSymbol) -> UnitEntry {
        match sym {
            CoinSymbol::A => self.a,
            CoinSymbol::B => self.b,
            CoinSymbol::C => self.c,
            CoinSymbol::D => self.d,
        }
    }

    /// Rows of a basis matrix as unit entries (scale `scale_exp`).
    fn basis_rows(&self, basis: Basis) -> [[UnitEntry; 2]; 2] {
        let z = UnitEntry::Zero;
        match basis {
            Basis::P => [[self.a, self.b], [z, z]],
            Basis::Q => [[z, z], [self.c, self.d]],
            Basis::R => [[self.c, self.d], [z, z]],
            Basis::S => [[z, z], [self.a, self.b]],
        }
    }
}

impl FloatCoin {
    fn entry(&self, sym: CoinSymbol) -> Complex64 {
        match sym {
            CoinSymbol::A => self.a,
            CoinSymbol::B => self.b,
            CoinSymbol::C => self.c,
            CoinSymbol::D => self.d,
        }
    }

    pub fn basis_matrix(&self, basis: Basis) -> [[Complex64; 2]; 2] {
        let z = Complex64::zero();
        match basis {
            Basis::P => [[self.a, self.b], [z, z]],
            Basis::Q => [[z, z], [self.c, self.d]],
            Basis::R => [[self.c, self.d], [z, z]],
            Basis::S => [[z, z], [self.a, self.b]],
        }
    }
}

/// A path with `left` steps to the left and `right` steps to the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StepPair {
    pub left: u64,
    pub right: u64,
}

impl StepPair {
    pub fn new(left: u64, right: u64) -> Self {
        StepPair { left, right }
    }

    pub fn time(&self) -> u64 {
        self.left + self.right
    }

    pub fn endpoint(&self) -> i64 {
        self.right as i64 - self.left as i64
    }
}

/// 2×2 matrix over `ℤ[i]` with a common factor `(1/√2)^scale_exp`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix {
    pub entries: [[GaussianInteger; 2]; 2],
    pub scale_exp: u64,
}

impl ExactMatrix {
    pub fn basis(coin: &ExactCoin, basis: Basis) -> Self {
        let rows = coin.basis_rows(basis);
        ExactMatrix {
            entries: rows.map(|row| row.map(UnitEntry::to_gaussian)),
            scale_exp: coin.scale_exp,
        }
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        let e = |i: usize, j: usize| {
            &(&self.entries[i][0] * &rhs.entries[0][j]) + &(&self.entries[i][1] * &rhs.entries[1][j])
        };
        ExactMatrix {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
            scale_exp: self.scale_exp + rhs.scale_exp,
        }
    }

    /// Sum of two matrices at the same scale.
    pub fn add(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.scale_exp != rhs.scale_exp {
            return Err(Error::Usage("matrix scales differ".into()));
        }
        let e = |i: usize, j: usize| &self.entries[i][j] + &rhs.entries[i][j];
        Ok(ExactMatrix {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
            scale_exp: self.scale_exp,
        })
    }

    /// `M·v` for a qubit, as two amplitudes.
    pub fn apply(&self, qubit: &QubitState) -> Result<[ScaledAmplitude; 2]> {
        let scale = qubit.left.scale_exp.max(qubit.right.scale_exp);
        let (Some(l), Some(r)) = (qubit.left.core_at(scale), qubit.right.core_at(scale)) else {
            return Err(Error::Usage("qubit components cannot share a scale".into()));
        };
        let row = |i: usize| &(&self.entries[i][0] * &l) + &(&self.entries[i][1] * &r);
        Ok([
            ScaledAmplitude::new(row(0), self.scale_exp + scale),
            ScaledAmplitude::new(row(1), self.scale_exp + scale),
        ])
    }
}

/// Exact coefficients `(p, q, r, s)`, each `GaussianInteger · (1/√2)^scale_exp`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactPqrs {
    pub coeffs: [GaussianInteger; 4],
    pub scale_exp: u64,
}

impl ExactPqrs {
    pub fn zero(scale_exp: u64) -> Self {
        ExactPqrs {
            coeffs: Default::default(),
            scale_exp,
        }
    }

    pub fn unit(basis: Basis) -> Self {
        let mut v = Self::zero(0);
        v.coeffs[basis as usize] = GaussianInteger::one();
        v
    }

    pub fn coeff(&self, basis: Basis) -> ScaledAmplitude {
        ScaledAmplitude::new(self.coeffs[basis as usize].clone(), self.scale_exp)
    }

    /// Decomposes a matrix through the trace inner product `tr(B*·M)`.
    pub fn from_matrix(m: &ExactMatrix, coin: &ExactCoin) -> Self {
        let coeffs = Basis::ALL.map(|b| {
            let rows = coin.basis_rows(b);
            let mut acc = GaussianInteger::zero();
            for (row, entries) in rows.iter().zip(&m.entries) {
                for (&u, entry) in row.iter().zip(entries) {
                    let conj = match u {
                        UnitEntry::I => UnitEntry::MinusI,
                        UnitEntry::MinusI => UnitEntry::I,
                        u => u,
                    };
                    acc = &acc + &conj.apply(entry);
                }
            }
            acc
        });
        ExactPqrs {
            coeffs,
            scale_exp: m.scale_exp + coin.scale_exp,
        }
    }

    pub fn to_matrix(&self, coin: &ExactCoin) -> ExactMatrix {
        let mut entries: [[GaussianInteger; 2]; 2] = Default::default();
        for b in Basis::ALL {
            let rows = coin.basis_rows(b);
            for i in 0..2 {
                for j in 0..2 {
                    entries[i][j] = &entries[i][j] + &rows[i][j].apply(&self.coeffs[b as usize]);
                }
            }
        }
        ExactMatrix {
            entries,
            scale_exp: self.scale_exp + coin.scale_exp,
        }
    }

    pub fn to_float(&self) -> FloatPqrs {
        FloatPqrs {
            coeffs: Basis::ALL.map(|b| self.coeff(b).to_complex()),
        }
    }

    fn add(&self, rhs: &ExactPqrs) -> ExactPqrs {
        debug_assert_eq!(self.scale_exp, rhs.scale_exp);
        let mut coeffs = self.coeffs.clone();
        for (c, r) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c = &*c + r;
        }
        ExactPqrs {
            coeffs,
            scale_exp: self.scale_exp,
        }
    }

    /// `||Ξ·φ||²` for this operator applied to a qubit.
    pub fn probability(&self, coin: &ExactCoin, qubit: &QubitState) -> Result<DyadicRational> {
        let [l, r] = self.to_matrix(coin).apply(qubit)?;
        Ok(l.prob() + r.prob())
    }
}

/// Complex-double coefficients `(p, q, r, s)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FloatPqrs {
    pub coeffs: [Complex64; 4],
}

impl FloatPqrs {
    pub fn unit(basis: Basis) -> Self {
        let mut coeffs = [Complex64::zero(); 4];
        coeffs[basis as usize] = Complex64::new(1.0, 0.0);
        FloatPqrs { coeffs }
    }

    pub fn coeff(&self, basis: Basis) -> Complex64 {
        self.coeffs[basis as usize]
    }

    pub fn from_matrix(m: &[[Complex64; 2]; 2], coin: &FloatCoin) -> Self {
        FloatPqrs {
            coeffs: Basis::ALL.map(|b| {
                let bm = coin.basis_matrix(b);
                (0..2)
                    .flat_map(|i| (0..2).map(move |j| (i, j)))
                    .map(|(i, j)| bm[i][j].conj() * m[i][j])
                    .sum()
            }),
        }
    }

    pub fn to_matrix(&self, coin: &FloatCoin) -> [[Complex64; 2]; 2] {
        let mut out = [[Complex64::zero(); 2]; 2];
        for b in Basis::ALL {
            let bm = coin.basis_matrix(b);
            for i in 0..2 {
                for j in 0..2 {
                    out[i][j] += self.coeffs[b as usize] * bm[i][j];
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum PqrsVector {
    Exact(ExactPqrs),
    Float(FloatPqrs),
}

pub fn compose_exact(left: &ExactPqrs, right: &ExactPqrs, coin: &ExactCoin) -> ExactPqrs {
    let mut out = ExactPqrs::zero(left.scale_exp + right.scale_exp + coin.scale_exp);
    for x in Basis::ALL {
        let lx = &left.coeffs[x as usize];
        if lx.is_zero() {
            continue;
        }
        for y in Basis::ALL {
            let ry = &right.coeffs[y as usize];
            if ry.is_zero() {
                continue;
            }
            let (sym, z) = PRODUCTS[x as usize][y as usize];
            let term = coin.entry(sym).apply(&(lx * ry));
            out.coeffs[z as usize] = &out.coeffs[z as usize] + &term;
        }
    }
    out
}

pub fn compose_float(left: &FloatPqrs, right: &FloatPqrs, coin: &FloatCoin) -> FloatPqrs {
    let mut coeffs = [Complex64::zero(); 4];
    for x in Basis::ALL {
        for y in Basis::ALL {
            let (sym, z) = PRODUCTS[x as usize][y as usize];
            coeffs[z as usize] += left.coeffs[x as usize] * right.coeffs[y as usize] * coin.entry(sym);
        }
    }
    FloatPqrs { coeffs }
}

/// Coefficients of the matrix product `left · right` via the structure constants.
pub fn pqrs_compose(left: &PqrsVector, right: &PqrsVector, coin: &CoinMatrix) -> Result<PqrsVector> {
    match (left, right, coin) {
        (PqrsVector::Exact(l), PqrsVector::Exact(r), CoinMatrix::Exact(c)) => {
            Ok(PqrsVector::Exact(compose_exact(l, r, c)))
        }
        (PqrsVector::Float(l), PqrsVector::Float(r), c) => {
            Ok(PqrsVector::Float(compose_float(l, r, &c.to_float())))
        }
        _ => Err(Error::Usage(
            "composition needs both vectors (and the coin) in the same representation".into(),
        )),
    }
}

/// Memo table of `Ξ(i, j)` for `0 ≤ i ≤ max_left`, `0 ≤ j ≤ max_right`.
pub struct XiTable<T> {
    max_right: u64,
    entries: Vec<Option<T>>,
}

impl<T> XiTable<T> {
    fn build(
        max_left: u64,
        max_right: u64,
        p: T,
        q: T,
        combine: impl Fn(Option<&T>, Option<&T>) -> T,
    ) -> Self {
        let width = max_right as usize + 1;
        let mut entries: Vec<Option<T>> = Vec::with_capacity((max_left as usize + 1) * width);
        entries.resize_with((max_left as usize + 1) * width, || None);
        let idx = |l: u64, m: u64| l as usize * width + m as usize;
        let (mut p, mut q) = (Some(p), Some(q));
        for l in 0..=max_left {
            for m in 0..=max_right {
                let value = match (l, m) {
                    (0, 0) => continue,
                    (1, 0) => p.take().expect("visited once"),
                    (0, 1) => q.take().expect("visited once"),
                    _ => {
                        let from_left = l.checked_sub(1).and_then(|l1| entries[idx(l1, m)].as_ref());
                        let from_right = m.checked_sub(1).and_then(|m1| entries[idx(l, m1)].as_ref());
                        combine(from_left, from_right)
                    }
                };
                entries[idx(l, m)] = Some(value);
            }
        }
        XiTable { max_right, entries }
    }

    /// `Ξ(l, m)`, or `None` for `(0, 0)` and out-of-range pairs.
    pub fn get(&self, steps: StepPair) -> Option<&T> {
        if steps.right > self.max_right {
            return None;
        }
        let i = steps.left as usize * (self.max_right as usize + 1) + steps.right as usize;
        self.entries.get(i).and_then(Option::as_ref)
    }
}

impl XiTable<ExactPqrs> {
    /// Fills the table with `Ξ(l, m) = P·Ξ(l−1, m) + Q·Ξ(l, m−1)`.
    pub fn exact(max_left: u64, max_right: u64, coin: &ExactCoin) -> Self {
        let p = ExactPqrs::unit(Basis::P);
        let q = ExactPqrs::unit(Basis::Q);
        let (pp, qq) = (p.clone(), q.clone());
        XiTable::build(max_left, max_right, p, q, move |from_left, from_right| {
            let a = from_left.map(|x| compose_exact(&pp, x, coin));
            let b = from_right.map(|x| compose_exact(&qq, x, coin));
            match (a, b) {
                (Some(a), Some(b)) => a.add(&b),
                (Some(v), None) | (None, Some(v)) => v,
                (None, None) => unreachable!("every (l, m) != (0, 0) has a predecessor"),
            }
        })
    }
}

impl XiTable<FloatPqrs> {
    pub fn float(max_left: u64, max_right: u64, coin: &FloatCoin) -> Self {
        let p = FloatPqrs::unit(Basis::P);
        let q = FloatPqrs::unit(Basis::Q);
        XiTable::build(max_left, max_right, p, q, move |from_left, from_right| {
            let mut coeffs = [Complex64::zero(); 4];
            if let Some(x) = from_left {
                let v = compose_float(&p, x, coin);
                coeffs.iter_mut().zip(v.coeffs).for_each(|(c, v)| *c += v);
            }
            if let Some(x) = from_right {
                let v = compose_float(&q, x, coin);
                coeffs.iter_mut().zip(v.coeffs).for_each(|(c, v)| *c += v);
            }
            FloatPqrs { coeffs }
        })
    }
}

fn require_paths(steps: StepPair) -> Result<()> {
    if steps.time() == 0 {
        return Err(Error::Usage("Xi(0, 0) has no paths".into()));
    }
    Ok(())
}

pub fn xi_dp_exact(steps: StepPair, coin: &ExactCoin) -> Result<ExactPqrs> {
    require_paths(steps)?;
    let table = XiTable::exact(steps.left, steps.right, coin);
    Ok(table.get(steps).cloned().expect("table covers its corner"))
}

pub fn xi_dp_float(steps: StepPair, coin: &FloatCoin) -> Result<FloatPqrs> {
    require_paths(steps)?;
    let table = XiTable::float(steps.left, steps.right, coin);
    Ok(*table.get(steps).expect("table covers its corner"))
}

/// `Ξ_n(l, m)` by dynamic programming over path prefixes.
pub fn xi_dp(steps: StepPair, coin: &CoinMatrix) -> Result<PqrsVector> {
    match coin {
        CoinMatrix::Exact(c) => xi_dp_exact(steps, c).map(PqrsVector::Exact),
        CoinMatrix::Float(c) => xi_dp_float(steps, c).map(PqrsVector::Float),
    }
}

fn signed(negative: bool, v: BigInt) -> BigInt {
    if negative {
        -v
    } else {
        v
    }
}

/// Closed-form Hadamard coefficients of `Ξ_n(l, m)` for `min(l, m) ≥ 1`.
///
/// Each coefficient is `(1/√2)^{n−1}` times an alternating sum of binomial
/// products; an empty sum is zero. The result shares the scale convention
/// of [`xi_dp_exact`] with [`ExactCoin::hadamard`].
pub fn xi_lemma(steps: StepPair) -> Result<ExactPqrs> {
    let (l, m) = (steps.left, steps.right);
    if l.min(m) < 1 {
        return Err(Error::OutOfHypothesis(format!(
            "closed form needs min(l, m) >= 1, got ({l}, {m}); use the DP instead"
        )));
    }
    // (−1)^{m−γ}
    let odd = |gamma: u64| (m + gamma) % 2 == 1;
    let p: BigInt = (1..=(l - 1).min(m))
        .map(|g| signed(odd(g), binomial(l - 1, g) * binomial(m - 1, g - 1)))
        .sum();
    let q: BigInt = (1..=l.min(m - 1))
        .map(|g| signed(!odd(g), binomial(l - 1, g - 1) * binomial(m - 1, g)))
        .sum();
    let r: BigInt = (1..=l.min(m))
        .map(|g| signed(odd(g), binomial(l - 1, g - 1) * binomial(m - 1, g - 1)))
        .sum();
    let g = |v: BigInt| GaussianInteger::new(v, 0);
    Ok(ExactPqrs {
        coeffs: [g(p), g(q), g(r.clone()), g(r)],
        scale_exp: l + m - 1,
    })
}

/// `p_{2n}(0) = ||Ξ_{2n}(n, n) φ*||²` from the closed-form coefficients.
pub fn return_probability_xi(n: u64) -> Result<DyadicRational> {
    let xi = xi_lemma(StepPair::new(n, n))?;
    xi.probability(&ExactCoin::hadamard(), &QubitState::phi_star())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hadamard() -> ExactCoin {
        ExactCoin::hadamard()
    }

    fn ints(v: [i64; 4], scale_exp: u64) -> ExactPqrs {
        ExactPqrs {
            coeffs: v.map(|x| GaussianInteger::new(x, 0)),
            scale_exp,
        }
    }

    #[test]
    fn p_times_q_is_b_r() {
        let c = CoinMatrix::hadamard();
        let out = pqrs_compose(
            &PqrsVector::Exact(ExactPqrs::unit(Basis::P)),
            &PqrsVector::Exact(ExactPqrs::unit(Basis::Q)),
            &c,
        )
        .unwrap();
        // b = 1/√2
        assert_eq!(out, PqrsVector::Exact(ints([0, 0, 1, 0], 1)));
    }

    #[test]
    fn identity_is_neutral() {
        let coin = hadamard();
        let id = ExactMatrix {
            entries: [
                [GaussianInteger::one(), GaussianInteger::zero()],
                [GaussianInteger::zero(), GaussianInteger::one()],
            ],
            scale_exp: 0,
        };
        let id_pqrs = ExactPqrs::from_matrix(&id, &coin);
        assert_eq!(id_pqrs, ints([1, -1, 1, 1], 1));
        let x = ints([3, -2, 5, 7], 4);
        let left = compose_exact(&id_pqrs, &x, &coin);
        let right = compose_exact(&x, &id_pqrs, &coin);
        for v in [left, right] {
            for b in Basis::ALL {
                assert_eq!(v.coeff(b), x.coeff(b));
            }
        }
    }

    #[test]
    fn mismatched_representations_rejected() {
        let e = PqrsVector::Exact(ExactPqrs::unit(Basis::P));
        let f = PqrsVector::Float(FloatPqrs::unit(Basis::Q));
        assert!(pqrs_compose(&e, &f, &CoinMatrix::hadamard()).is_err());
        let coin = CoinMatrix::Float(FloatCoin::hadamard());
        assert!(pqrs_compose(&e, &e, &coin).is_err());
    }

    #[test]
    fn qp_plus_pq_matches_matrix_product() {
        let coin = hadamard();
        let p = ExactMatrix::basis(&coin, Basis::P);
        let q = ExactMatrix::basis(&coin, Basis::Q);
        let literal = q.mul(&p).add(&p.mul(&q)).unwrap();
        let xi = xi_dp_exact(StepPair::new(1, 1), &coin).unwrap();
        assert_eq!(xi.to_matrix(&coin), literal);
        // r = s = 1/√2, p = q = 0
        assert_eq!(xi, ints([0, 0, 1, 1], 1));
    }

    #[test]
    fn xi_2_2_symbolic_form() {
        // bcd P + abc Q + b(ad+bc) R + c(ad+bc) S on a generic unitary coin
        let (t, ph) = (0.7_f64, 0.3_f64);
        let e = |x: f64| Complex64::from_polar(1.0, x);
        let coin = FloatCoin::new(
            e(ph) * t.cos(),
            e(1.1) * t.sin(),
            e(-0.4) * t.sin(),
            -e(1.1 - 0.4 - ph) * t.cos(),
        )
        .unwrap();
        let (a, b, c, d) = (coin.a, coin.b, coin.c, coin.d);
        let xi = xi_dp_float(StepPair::new(2, 2), &coin).unwrap();
        let expected = [b * c * d, a * b * c, b * (a * d + b * c), c * (a * d + b * c)];
        for (got, want) in xi.coeffs.iter().zip(expected) {
            assert!((got - want).norm() < 1e-14, "{got} vs {want}");
        }
        // Hadamard specialization: bcd = -1/(2√2), abc = 1/(2√2), ad + bc = 0.
        assert_eq!(xi_dp_exact(StepPair::new(2, 2), &hadamard()).unwrap(), ints([-1, 1, 0, 0], 3));
    }

    #[test]
    fn all_left_paths() {
        // P³ = a² P
        assert_eq!(xi_dp_exact(StepPair::new(3, 0), &hadamard()).unwrap(), ints([1, 0, 0, 0], 2));
        assert_eq!(xi_dp_exact(StepPair::new(0, 3), &hadamard()).unwrap(), ints([0, 1, 0, 0], 2));
        assert!(xi_dp_exact(StepPair::new(0, 0), &hadamard()).is_err());
    }

    #[test]
    fn lemma_examples() {
        assert_eq!(xi_lemma(StepPair::new(1, 1)).unwrap(), xi_dp_exact(StepPair::new(1, 1), &hadamard()).unwrap());
        assert_eq!(xi_lemma(StepPair::new(2, 2)).unwrap(), ints([-1, 1, 0, 0], 3));
        assert_eq!(xi_lemma(StepPair::new(5, 5)).unwrap(), xi_dp_exact(StepPair::new(5, 5), &hadamard()).unwrap());
        assert!(matches!(xi_lemma(StepPair::new(4, 0)), Err(Error::OutOfHypothesis(_))));
    }

    #[test]
    fn return_probability_xi_examples() {
        let d = |s: &str| s.parse::<DyadicRational>().unwrap();
        assert_eq!(return_probability_xi(1).unwrap(), d("1/2"));
        assert_eq!(return_probability_xi(6).unwrap(), d("25/512"));
        assert_eq!(return_probability_xi(9).unwrap(), d("1225/32768"));
        assert!(return_probability_xi(0).is_err());
    }

    #[test]
    fn step_pair_geometry() {
        let s = StepPair::new(3, 5);
        assert_eq!(s.time(), 8);
        assert_eq!(s.endpoint(), 2);
    }
}
