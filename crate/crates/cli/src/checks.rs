//! Named cross-checks behind `hqw verify`.
//!
//! Each check compares independent routes to the same quantity; sizes are
//! parameters so the fast and full scopes (and the acceptance tests) share
//! one implementation.

use std::fmt::Write as _;

use clap::ValueEnum;
use hadamard_walk::classical::{watson_g_closed, watson_return_prob};
use hadamard_walk::genfun::{gf_point, p0_closed, p0_prop1, return_probabilities_prop1};
use hadamard_walk::path::{
    compose_exact, compose_float, return_probability_xi, xi_lemma, Basis, ExactMatrix, ExactPqrs, FloatPqrs,
    StepPair, XiTable,
};
use hadamard_walk::special::{
    binomial, elliptic_k_agm, elliptic_k_series, elliptic_series_tail, hyp2f1_terminating, jacobi_p0, ExactRational,
};
use hadamard_walk::walk::{
    distribution, return_probabilities_direct, step, CoinMatrix, ExactCoin, FloatCoin, QubitState, WaveFunction,
};
use hadamard_walk::DyadicRational;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::classical_gf;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Fast,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            expected: expected.into(),
            actual: actual.into(),
            tolerance: None,
        }
    }

    pub fn tol(mut self, t: impl Into<String>) -> Self {
        self.tolerance = Some(t.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub scope: Scope,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_plain(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            write!(s, "{status}  {:<28} expected {}  actual {}", c.name, c.expected, c.actual).unwrap();
            if let Some(t) = &c.tolerance {
                write!(s, "  tol {t}").unwrap();
            }
            s.push('\n');
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        writeln!(s, "{} checks, {} failed", self.checks.len(), failed).unwrap();
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("name,status,expected,actual,tolerance\n");
        for c in &self.checks {
            let status = if c.passed() { "pass" } else { "fail" };
            writeln!(
                s,
                "{},{},{},{},{}",
                c.name,
                status,
                c.expected,
                c.actual,
                c.tolerance.as_deref().unwrap_or("")
            )
            .unwrap();
        }
        s
    }
}

/// The published return probabilities `p_n(0)` for even `n ≤ 18`.
pub const VALUE_TABLE: [(u64, &str); 10] = [
    (0, "1"),
    (2, "1/2"),
    (4, "1/8"),
    (6, "1/8"),
    (8, "9/128"),
    (10, "9/128"),
    (12, "25/512"),
    (14, "25/512"),
    (16, "1225/32768"),
    (18, "1225/32768"),
];

pub fn value_table() -> Vec<Check> {
    VALUE_TABLE
        .iter()
        .map(|&(n, expected)| {
            let want: DyadicRational = expected.parse().expect("table entries are dyadic");
            let report = crate::run_return_prob(n, crate::Method::All).expect("all methods cover even n");
            let actual: Vec<String> = report.values.iter().map(|v| v.fraction.clone()).collect();
            let pass = report.agree && report.values.iter().all(|v| v.exact == want);
            Check::new(format!("value table n={n}"), pass, expected, actual.join(" ")).tol("exact")
        })
        .collect()
}

/// Direct evolution, path-sum closed form, Legendre form and pairing form
/// agree on `p_{2n}(0)` for `n ≤ n_max`.
pub fn four_oracles(n_max: u64) -> Check {
    let direct = return_probabilities_direct(2 * n_max);
    let prop1_table = return_probabilities_prop1(2 * n_max);
    let mut mismatch = None;
    for n in 0..=n_max {
        let d = &direct[2 * n as usize];
        let mut routes = vec![("prop1", p0_prop1(n)), ("prop1 table", prop1_table[2 * n as usize].clone())];
        if n >= 1 {
            routes.push(("xi", return_probability_xi(n).expect("n >= 1")));
        }
        if n >= 2 {
            routes.push(("closed", p0_closed(n / 2).expect("n >= 2")));
        }
        if let Some((name, v)) = routes.into_iter().find(|(_, v)| v != d) {
            mismatch = Some(format!("2n={} direct {} vs {name} {}", 2 * n, d, v));
            break;
        }
    }
    let name = format!("four oracles n<={n_max}");
    match mismatch {
        None => Check::new(name, true, "all equal", format!("{} values equal", n_max + 1)),
        Some(m) => Check::new(name, false, "all equal", m),
    }
    .tol("exact")
}

/// Exact normalization and `x ↔ −x` symmetry of the `φ*` distribution.
pub fn normalization_symmetry(n_max: u64) -> [Check; 2] {
    let coin = CoinMatrix::hadamard();
    let mut psi = WaveFunction::origin(&QubitState::phi_star()).expect("phi* has a shared scale");
    let mut norm_fail = None;
    let mut sym_fail = None;
    for t in 0..=n_max {
        if t > 0 {
            psi = step(&psi, &coin).expect("exact coin");
        }
        let dist = distribution(&psi);
        if norm_fail.is_none() && dist.total() != DyadicRational::one() {
            norm_fail = Some(format!("n={t}: total {}", dist.total()));
        }
        if sym_fail.is_none() {
            if let Some((x, _)) = dist.probs.iter().find(|(x, p)| dist.get(-**x) != **p) {
                sym_fail = Some(format!("n={t}: p({x}) != p({})", -x));
            }
        }
    }
    [
        Check::new(
            format!("normalization n<={n_max}"),
            norm_fail.is_none(),
            "1",
            norm_fail.unwrap_or_else(|| "1 at every time".into()),
        )
        .tol("exact"),
        Check::new(
            format!("phi* symmetry n<={n_max}"),
            sym_fail.is_none(),
            "p(x) = p(-x)",
            sym_fail.unwrap_or_else(|| "symmetric at every time".into()),
        )
        .tol("exact"),
    ]
}

/// `p_{2n+1}(0) = 0` for `n ≤ n_max`.
pub fn odd_times_vanish(n_max: u64) -> Check {
    let direct = return_probabilities_direct(2 * n_max + 1);
    let bad = (0..=n_max).find(|n| !direct[2 * *n as usize + 1].is_zero());
    Check::new(
        format!("odd time zero n<={n_max}"),
        bad.is_none(),
        "0",
        bad.map_or_else(|| "0 at every odd time".into(), |n| format!("p_{}(0) = {}", 2 * n + 1, direct[2 * n as usize + 1])),
    )
    .tol("exact")
}

/// Closed-form path-sum coefficients equal the DP for `1 ≤ l, m ≤ k`.
pub fn lemma_vs_dp(k: u64) -> Check {
    let h = ExactCoin::hadamard();
    let table = XiTable::exact(k, k, &h);
    let mut bad = None;
    'outer: for l in 1..=k {
        for m in 1..=k {
            let steps = StepPair::new(l, m);
            let dp = table.get(steps).expect("inside table");
            let lemma = xi_lemma(steps).expect("l, m >= 1");
            if &lemma != dp || dp.coeffs[Basis::R as usize] != dp.coeffs[Basis::S as usize] {
                bad = Some((l, m));
                break 'outer;
            }
        }
    }
    Check::new(
        format!("lemma = dp l,m<={k}"),
        bad.is_none(),
        "equal, r = s",
        bad.map_or_else(|| format!("{} pairs equal", k * k), |(l, m)| format!("differs at ({l}, {m})")),
    )
    .tol("exact")
}

/// Off-diagonal coin used to exercise the multiplication table with all
/// four entries distinct.
pub fn generic_coin() -> FloatCoin {
    let e = |x: f64| Complex64::from_polar(1.0, x);
    let t = 1.1f64;
    FloatCoin::new(e(0.2) * t.cos(), e(-0.9) * t.sin(), e(0.5) * t.sin(), -e(-0.6) * t.cos())
        .expect("unitary by construction")
}

fn matmul(x: &[[Complex64; 2]; 2], y: &[[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
    let e = |i: usize, j: usize| x[i][0] * y[0][j] + x[i][1] * y[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// Multiplication table against literal 2×2 products, exactly for the
/// Hadamard coin and to `1e-14` for a generic coin.
pub fn structure_constants() -> Check {
    let h = ExactCoin::hadamard();
    let coin = generic_coin();
    let mut bad = Vec::new();
    let mut worst = 0.0f64;
    for x in Basis::ALL {
        for y in Basis::ALL {
            let literal = ExactMatrix::basis(&h, x).mul(&ExactMatrix::basis(&h, y));
            let composed = compose_exact(&ExactPqrs::unit(x), &ExactPqrs::unit(y), &h).to_matrix(&h);
            let literal_f = matmul(&coin.basis_matrix(x), &coin.basis_matrix(y));
            let composed_f = compose_float(&FloatPqrs::unit(x), &FloatPqrs::unit(y), &coin).to_matrix(&coin);
            let err = (0..4)
                .map(|k| (literal_f[k / 2][k % 2] - composed_f[k / 2][k % 2]).norm())
                .fold(0.0, f64::max);
            worst = worst.max(err);
            if literal != composed || err > 1e-14 {
                bad.push(format!("{x:?}{y:?}"));
            }
        }
    }
    Check::new(
        "structure constants 16 pairs",
        bad.is_empty(),
        "table = literal product",
        if bad.is_empty() {
            format!("16 pairs match, float error {worst:.1e}")
        } else {
            format!("mismatch at {}", bad.join(" "))
        },
    )
    .tol("exact (Hadamard), 1e-14 (generic coin)")
}

/// `P_n^{(0,0)}(0) − P_{n+1}^{(0,0)}(0) = P_n^{(1,0)}(0)` for `n ≤ n_max`.
pub fn jacobi_recurrence(n_max: u64) -> Check {
    let bad = (0..=n_max).find(|&n| jacobi_p0(0, n) - jacobi_p0(0, n + 1) != jacobi_p0(1, n));
    Check::new(
        format!("jacobi recurrence n<={n_max}"),
        bad.is_none(),
        "P_n - P_(n+1) = P_n^(1,0)",
        bad.map_or_else(|| "holds".into(), |n| format!("fails at n={n}")),
    )
    .tol("exact")
}

fn int(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Alternating binomial sum, its two terminating ₂F₁ forms and the Jacobi
/// form agree for `n ≤ n_max`.
pub fn hypergeometric_chain(n_max: u64) -> Check {
    let mut bad = None;
    for n in 1..=n_max {
        let direct: BigRational = (1..=n)
            .map(|g| {
                let v = BigRational::new(binomial(n - 1, g - 1).pow(2), BigInt::from(g));
                if g % 2 == 1 {
                    v
                } else {
                    -v
                }
            })
            .sum();
        let k = -(n as i64 - 1);
        let f = hyp2f1_terminating(k, &int(k), &int(2), &int(-1)).expect("c = 2");
        let pow2 = BigRational::from_integer(BigInt::one() << (n - 1));
        let g = hyp2f1_terminating(k, &int(n as i64 + 1), &int(2), &BigRational::new(1.into(), 2.into())).expect("c = 2");
        let j = &pow2 / int(n as i64) * jacobi_p0(1, n - 1);
        if direct != f || f != &pow2 * g || f != j {
            bad = Some(n);
            break;
        }
    }
    Check::new(
        format!("hypergeometric chain n<={n_max}"),
        bad.is_none(),
        "sum = 2F1(z=-1) = 2^(n-1) 2F1(z=1/2) = Jacobi form",
        bad.map_or_else(|| "all equal".into(), |n| format!("fails at n={n}")),
    )
    .tol("exact")
}

/// `₂F₁(−m, b; c; z) = (1−z)^m ₂F₁(−m, c−b; c; z/(z−1))`; `None` when the
/// instance is not admissible (`z = 1` or `c` a blocking non-positive integer).
pub fn pfaff_holds(m: u64, b: &ExactRational, c: &ExactRational, z: &ExactRational) -> Option<bool> {
    if z.is_one() {
        return None;
    }
    let a = -(m as i64);
    let lhs = hyp2f1_terminating(a, b, c, z).ok()?;
    let w = z / (z - BigRational::one());
    let rhs = hyp2f1_terminating(a, &(c - b), c, &w).ok()?;
    let factor = num_traits::pow(BigRational::one() - z, m as usize);
    Some(lhs == factor * rhs)
}

/// Pfaff transformation on `count` admissible instances from a fixed grid.
pub fn pfaff_grid(count: usize) -> Check {
    let r = |i: u64, p: u64, q: u64| BigRational::new(BigInt::from((i * p % 25) as i64 - 12), BigInt::from((i * q % 7 + 1) as i64));
    let mut tested = 0;
    let mut bad = None;
    let mut i = 0u64;
    while tested < count {
        i += 1;
        let (b, c, z) = (r(i, 7, 3), r(i + 5, 11, 5), r(i + 3, 13, 2));
        match pfaff_holds(i % 9, &b, &c, &z) {
            None => continue,
            Some(true) => tested += 1,
            Some(false) => {
                bad = Some(format!("m={} b={b} c={c} z={z}", i % 9));
                break;
            }
        }
    }
    Check::new(
        format!("pfaff {count} instances"),
        bad.is_none(),
        "lhs = (1-z)^m rhs",
        bad.unwrap_or_else(|| format!("{count} instances equal")),
    )
    .tol("exact")
}

/// Truncated series against `(1+z²)/π·K(z²) + 1/2`.
pub fn theorem2(z: f64) -> Check {
    let p = gf_point(z, None).expect("z in [0, 1)");
    Check::new(
        format!("theorem2 z={z}"),
        p.within_bound() && p.tail_bound <= 1e-12,
        format!("{:.15}", p.rhs_closed),
        format!("{:.15} (N={}, abs_diff {:.2e})", p.lhs_partial, p.truncation, p.abs_diff),
    )
    .tol(format!("tail bound {:.2e} + 1e-10", p.tail_bound))
}

/// 2D return-probability series against `(2/π)K(z)`.
pub fn polya(z: f64) -> Check {
    let g = classical_gf(2, z, None).expect("z in [0, 1)");
    Check::new(
        format!("polya 2d z={z}"),
        g.within_bound(),
        format!("{:.15}", g.closed),
        format!("{:.15} (N={}, abs_diff {:.2e})", g.partial, g.truncation, g.abs_diff),
    )
    .tol(format!("tail bound {:.2e} + 1e-10", g.tail_bound))
}

/// AGM against the Maclaurin series with its remainder bound.
pub fn elliptic_agm_vs_series(k: f64) -> Check {
    let agm = elliptic_k_agm(k).expect("k < 1");
    let terms = 60;
    let series = elliptic_k_series(k, terms).expect("k < 1");
    let tail = elliptic_series_tail(k, terms).expect("k < 1");
    let diff = agm - series;
    Check::new(
        format!("elliptic agm vs series k={k}"),
        (-1e-15..=tail + 1e-15).contains(&diff),
        format!("{agm:.17}"),
        format!("{series:.17}"),
    )
    .tol(format!("0 <= agm - series <= {tail:.2e}"))
}

/// First `digits` decimals of a positive `v`, dropped rather than rounded
/// (the customary quotation `1.51638…` of `G = 1.5163860…`).
pub fn truncated(v: f64, digits: usize) -> String {
    let s = format!("{v:.*}", digits + 3);
    s[..s.len() - 3].to_string()
}

/// Quadrature and closed form for Watson's constant, and the 3D return
/// probability at five decimals.
pub fn watson() -> [Check; 3] {
    let w = watson_return_prob(1e-10).expect("quadrature converges");
    let diff = (w.g_quadrature - w.g_closed).abs();
    [
        Check::new(
            "watson G",
            diff <= 1e-6,
            format!("{:.15} (closed form)", w.g_closed),
            format!("{:.15} (quadrature)", w.g_quadrature),
        )
        .tol("1e-6"),
        Check::new(
            "watson G 5 decimals",
            truncated(w.g_closed, 5) == "1.51638" && truncated(w.g_quadrature, 5) == "1.51638",
            "1.51638",
            format!("{} / {}", truncated(w.g_closed, 5), truncated(w.g_quadrature, 5)),
        )
        .tol("truncated"),
        Check::new(
            "watson F 5 decimals",
            truncated(w.f_return, 5) == "0.34053",
            "0.34053",
            format!("{:.10}", 1.0 - 1.0 / watson_g_closed()),
        )
        .tol("truncated"),
    ]
}

type Job = Box<dyn FnOnce() -> Vec<Check> + Send>;

fn job<F: FnOnce() -> Vec<Check> + Send + 'static>(f: F) -> Job {
    Box::new(f)
}

/// Runs every check on its own thread; the report keeps submission order.
pub fn run_verify(scope: Scope) -> VerifyReport {
    let (n, sym, lemma, jac, hyp) = match scope {
        Scope::Fast => (30, 60, 10, 50, 20),
        Scope::Full => (100, 200, 30, 200, 50),
    };
    let mut jobs: Vec<Job> = vec![
        job(value_table),
        job(move || vec![four_oracles(n)]),
        job(move || normalization_symmetry(sym).to_vec()),
        job(move || vec![odd_times_vanish(n)]),
        job(move || vec![lemma_vs_dp(lemma)]),
        job(|| vec![structure_constants()]),
        job(move || vec![jacobi_recurrence(jac)]),
        job(move || vec![hypergeometric_chain(hyp)]),
        job(|| vec![pfaff_grid(100)]),
    ];
    for z in [0.1, 0.3, 0.5, 0.7] {
        jobs.push(job(move || vec![theorem2(z)]));
    }
    for z in [0.3, 0.6] {
        jobs.push(job(move || vec![polya(z)]));
    }
    jobs.push(job(|| vec![elliptic_agm_vs_series(0.5)]));
    jobs.push(job(|| watson().to_vec()));

    let checks = std::thread::scope(|s| {
        let handles: Vec<_> = jobs.into_iter().map(|j| s.spawn(j)).collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("checks do not panic"))
            .collect()
    });
    VerifyReport { scope, checks }
}
