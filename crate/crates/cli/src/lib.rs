//! Command implementations behind the `hqw` binary.
//!
//! Every command renders into a [`Output`] (text plus exit code) so the
//! binary stays a thin shell and tests can drive commands in-process.

pub mod checks;

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hadamard_walk::classical::{rw_gf, rw_gf_partial, rw_return_prob, rw_tail_bound, watson_return_prob};
use hadamard_walk::genfun::{gf_point, p0_closed, p0_prop1, GfPoint};
use hadamard_walk::path::{xi_dp_exact, xi_lemma, Basis, ExactPqrs, StepPair};
use hadamard_walk::special::{elliptic_k_agm, elliptic_k_series, elliptic_series_tail};
use hadamard_walk::walk::{
    distribution, evolve, evolve_float, return_probability_direct, CoinMatrix, DistributionTable, ExactCoin,
    FloatCoin, QubitState,
};
use hadamard_walk::{path::return_probability_xi, DyadicRational, Error};
use num_complex::Complex64;
use serde::Serialize;

pub use checks::{run_verify, Check, Scope, Status, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hqw", version, about = "Exact return probabilities of the 1D Hadamard quantum walk")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,

    /// Decimal digits shown for floating-point values in plain output.
    #[arg(long, default_value_t = 15, global = true)]
    pub precision: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Position distribution at time n.
    Simulate(SimulateArgs),
    /// Exact return probability p_n(0).
    ReturnProb(ReturnProbArgs),
    /// P/Q/R/S coefficients of the path sum Xi(l, m).
    Xi(XiArgs),
    /// Complete elliptic integral of the first kind K(k).
    Ellipk(EllipkArgs),
    /// Compare the return-probability series with its elliptic closed form.
    Genfun(GenfunArgs),
    /// Simple random walk on Z or Z^2.
    Classical(ClassicalArgs),
    /// Watson's constant for the cubic lattice and the 3D return probability.
    Watson(WatsonArgs),
    /// Run the cross-check suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoinChoice {
    Hadamard,
    Custom,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum, default_value_t = CoinChoice::Hadamard)]
    pub coin: CoinChoice,
    /// Custom coin entries as `re` or `re,im`; U = [[a, b], [c, d]].
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Direct,
    Xi,
    Prop1,
    Closed,
    All,
}

#[derive(Args, Debug)]
pub struct ReturnProbArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum, default_value_t = Method::All)]
    pub method: Method,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum XiMethod {
    Dp,
    Lemma,
}

#[derive(Args, Debug)]
pub struct XiArgs {
    #[arg(long)]
    pub l: u64,
    #[arg(long)]
    pub m: u64,
    #[arg(long, value_enum, default_value_t = XiMethod::Dp)]
    pub method: XiMethod,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EllipkMethod {
    Agm,
    Series,
}

#[derive(Args, Debug)]
pub struct EllipkArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub k: f64,
    #[arg(long, value_enum, default_value_t = EllipkMethod::Agm)]
    pub method: EllipkMethod,
    #[arg(long, default_value_t = 40)]
    pub terms: usize,
}

#[derive(Args, Debug)]
pub struct GenfunArgs {
    #[arg(long, allow_hyphen_values = true, required_unless_present = "sweep")]
    pub z: Option<f64>,
    /// Largest power kept in the partial sum; chosen automatically if absent.
    #[arg(long)]
    pub truncate: Option<u64>,
    /// Emit a CSV of (z, lhs, rhs) over a grid instead of a single point.
    #[arg(long, conflicts_with = "z")]
    pub sweep: bool,
    #[arg(long, default_value_t = 0.0)]
    pub from: f64,
    #[arg(long, default_value_t = 0.9)]
    pub to: f64,
    #[arg(long, default_value_t = 10)]
    pub steps: u32,
}

#[derive(Args, Debug)]
pub struct ClassicalArgs {
    #[arg(long)]
    pub dim: u32,
    #[arg(long, required_unless_present = "gf", conflicts_with = "gf")]
    pub time: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    pub gf: Option<f64>,
    #[arg(long)]
    pub truncate: Option<u64>,
}

#[derive(Args, Debug)]
pub struct WatsonArgs {
    /// Relative tolerance of the adaptive quadrature.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum, default_value_t = Scope::Fast)]
    pub scope: Scope,
}

/// Rendered command result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: EXIT_OK }
    }

    fn checked(text: String, pass: bool) -> Self {
        Output {
            text,
            code: if pass { EXIT_OK } else { EXIT_CHECK_FAILED },
        }
    }

    fn error(err: &Error) -> Self {
        Output {
            text: format!("error: {err}\n"),
            code: EXIT_USAGE,
        }
    }
}

pub fn run(cli: &Cli) -> Output {
    let fmt = Fmt {
        format: cli.format,
        precision: cli.precision,
    };
    let result = match &cli.command {
        Command::Simulate(a) => cmd_simulate(a, fmt),
        Command::ReturnProb(a) => cmd_return_prob(a, fmt),
        Command::Xi(a) => cmd_xi(a, fmt),
        Command::Ellipk(a) => cmd_ellipk(a, fmt),
        Command::Genfun(a) => cmd_genfun(a, fmt),
        Command::Classical(a) => cmd_classical(a, fmt),
        Command::Watson(a) => cmd_watson(a, fmt),
        Command::Verify(a) => Ok(cmd_verify(a, fmt)),
    };
    result.unwrap_or_else(|e| Output::error(&e))
}

#[derive(Clone, Copy)]
struct Fmt {
    format: Format,
    precision: usize,
}

impl Fmt {
    fn float(&self, v: f64) -> String {
        format!("{v:.*}", self.precision)
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

// ---------------------------------------------------------------- simulate

fn parse_complex(name: &str, s: Option<&String>) -> Result<Complex64, Error> {
    let s = s.ok_or_else(|| Error::Usage(format!("--coin custom needs --{name}")))?;
    let bad = || Error::Usage(format!("--{name} {s:?}: expected `re` or `re,im`"));
    let mut parts = s.split(',').map(|p| p.trim().parse::<f64>());
    let re = parts.next().ok_or_else(bad)?.map_err(|_| bad())?;
    let im = match parts.next() {
        Some(v) => v.map_err(|_| bad())?,
        None => 0.0,
    };
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(Complex64::new(re, im))
}

/// Distribution at time `n` for the Hadamard coin (exact) or a custom
/// unitary coin (floating point), both started from `φ*`.
pub fn run_simulate(n: u64, coin: Option<FloatCoin>) -> Result<DistributionTable, Error> {
    match coin {
        None => {
            let psi = evolve(&QubitState::phi_star(), &CoinMatrix::hadamard(), n)?;
            Ok(distribution(&psi).table())
        }
        Some(coin) => {
            let [l, r] = QubitState::phi_star().to_complex();
            Ok(evolve_float([l, r], &coin, n).distribution().table())
        }
    }
}

fn cmd_simulate(args: &SimulateArgs, fmt: Fmt) -> Result<Output, Error> {
    let coin = match args.coin {
        CoinChoice::Hadamard => {
            if args.a.is_some() || args.b.is_some() || args.c.is_some() || args.d.is_some() {
                return Err(Error::Usage("coin entries need --coin custom".into()));
            }
            None
        }
        CoinChoice::Custom => Some(FloatCoin::new(
            parse_complex("a", args.a.as_ref())?,
            parse_complex("b", args.b.as_ref())?,
            parse_complex("c", args.c.as_ref())?,
            parse_complex("d", args.d.as_ref())?,
        )?),
    };
    let table = run_simulate(args.n, coin)?;
    let text = match fmt.format {
        Format::Json => {
            let mut s = table.to_json();
            s.push('\n');
            s
        }
        Format::Csv => table.to_csv(),
        Format::Plain => {
            let mut s = format!("# time {}\n", table.time);
            for row in &table.rows {
                let exact = row
                    .probability_exact
                    .as_ref()
                    .map(DyadicRational::fraction_string)
                    .unwrap_or_else(|| "-".into());
                writeln!(s, "{:>6}  {:>24}  {}", row.position, exact, fmt.float(row.probability_float)).unwrap();
            }
            s
        }
    };
    Ok(Output::ok(text))
}

// ------------------------------------------------------------- return-prob

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MethodValue {
    pub method: Method,
    pub exact: DyadicRational,
    pub fraction: String,
    pub float: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReturnProbReport {
    pub n: u64,
    pub values: Vec<MethodValue>,
    /// Methods skipped by `all` because `n` is outside their hypotheses.
    pub skipped: Vec<String>,
    pub agree: bool,
}

/// `p_n(0)` by a single method.
pub fn return_prob_by(method: Method, n: u64) -> Result<DyadicRational, Error> {
    // every route vanishes at odd times
    if n % 2 == 1 && method != Method::Direct {
        return Ok(DyadicRational::default());
    }
    match method {
        Method::Direct => Ok(return_probability_direct(n)),
        Method::Xi => {
            if n == 0 {
                return Err(Error::OutOfHypothesis("the path-sum formula needs n >= 2".into()));
            }
            return_probability_xi(n / 2)
        }
        Method::Prop1 => Ok(p0_prop1(n / 2)),
        Method::Closed => {
            if n < 4 {
                return Err(Error::OutOfHypothesis(format!(
                    "closed form holds for n = 4m or 4m + 2 with m >= 1, got n = {n}"
                )));
            }
            p0_closed(n / 4)
        }
        Method::All => Err(Error::Usage("`all` is not a single method".into())),
    }
}

pub fn run_return_prob(n: u64, method: Method) -> Result<ReturnProbReport, Error> {
    let methods: &[Method] = match method {
        Method::All => &[Method::Direct, Method::Xi, Method::Prop1, Method::Closed],
        _ => std::slice::from_ref(&method),
    };
    let mut values = Vec::new();
    let mut skipped = Vec::new();
    for &m in methods {
        match return_prob_by(m, n) {
            Ok(exact) => values.push(MethodValue {
                method: m,
                fraction: exact.fraction_string(),
                float: exact.to_f64(),
                exact,
            }),
            Err(e @ Error::OutOfHypothesis(_)) if method == Method::All => skipped.push(format!("{m:?}: {e}")),
            Err(e) => return Err(e),
        }
    }
    let agree = values.windows(2).all(|w| w[0].exact == w[1].exact);
    Ok(ReturnProbReport {
        n,
        values,
        skipped,
        agree,
    })
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Direct => "direct",
        Method::Xi => "xi",
        Method::Prop1 => "prop1",
        Method::Closed => "closed",
        Method::All => "all",
    }
}

fn cmd_return_prob(args: &ReturnProbArgs, fmt: Fmt) -> Result<Output, Error> {
    let report = run_return_prob(args.n, args.method)?;
    let text = match fmt.format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut s = String::from("n,method,exact,fraction,float\n");
            for v in &report.values {
                writeln!(s, "{},{},{},{},{:e}", report.n, method_name(v.method), v.exact, v.fraction, v.float).unwrap();
            }
            s
        }
        Format::Plain => {
            let mut s = String::new();
            for v in &report.values {
                writeln!(
                    s,
                    "p_{}(0) [{:<6}] = {} = {}",
                    report.n,
                    method_name(v.method),
                    v.fraction,
                    fmt.float(v.float)
                )
                .unwrap();
            }
            for note in &report.skipped {
                writeln!(s, "# skipped {note}").unwrap();
            }
            if !report.agree {
                s.push_str("# METHODS DISAGREE\n");
            }
            s
        }
    };
    Ok(Output::checked(text, report.agree))
}

// ---------------------------------------------------------------------- xi

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct XiCoefficient {
    pub basis: String,
    /// Gaussian-integer core, real and imaginary parts.
    pub re: String,
    pub im: String,
    pub float_re: f64,
    pub float_im: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct XiReport {
    pub l: u64,
    pub m: u64,
    pub method: XiMethod,
    /// Every coefficient is `core · (1/√2)^sqrt2_exponent`.
    pub sqrt2_exponent: u64,
    pub coefficients: Vec<XiCoefficient>,
}

pub fn run_xi(l: u64, m: u64, method: XiMethod) -> Result<XiReport, Error> {
    let steps = StepPair::new(l, m);
    let v: ExactPqrs = match method {
        XiMethod::Dp => xi_dp_exact(steps, &ExactCoin::hadamard())?,
        XiMethod::Lemma => xi_lemma(steps)?,
    };
    let coefficients = Basis::ALL
        .iter()
        .map(|&b| {
            let core = &v.coeffs[b as usize];
            let z = v.coeff(b).to_complex();
            XiCoefficient {
                basis: format!("{b:?}"),
                re: core.re.to_string(),
                im: core.im.to_string(),
                float_re: z.re,
                float_im: z.im,
            }
        })
        .collect();
    Ok(XiReport {
        l,
        m,
        method,
        sqrt2_exponent: v.scale_exp,
        coefficients,
    })
}

fn cmd_xi(args: &XiArgs, fmt: Fmt) -> Result<Output, Error> {
    let r = run_xi(args.l, args.m, args.method)?;
    let text = match fmt.format {
        Format::Json => to_json(&r),
        Format::Csv => {
            let mut s = String::from("basis,re,im,sqrt2_exponent,float_re,float_im\n");
            for c in &r.coefficients {
                writeln!(s, "{},{},{},{},{:e},{:e}", c.basis, c.re, c.im, r.sqrt2_exponent, c.float_re, c.float_im)
                    .unwrap();
            }
            s
        }
        Format::Plain => {
            let mut s = format!("# Xi({}, {}) = pP + qQ + rR + sS, scale (1/sqrt2)^{}\n", r.l, r.m, r.sqrt2_exponent);
            for c in &r.coefficients {
                writeln!(
                    s,
                    "{}  ({}) + ({})i  ~  {} + {}i",
                    c.basis,
                    c.re,
                    c.im,
                    fmt.float(c.float_re),
                    fmt.float(c.float_im)
                )
                .unwrap();
            }
            s
        }
    };
    Ok(Output::ok(text))
}

// ------------------------------------------------------------------ ellipk

/// `v` rounded to `digits` significant digits in positional notation.
pub fn significant(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let magnitude = v.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    format!("{v:.decimals$}")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EllipkReport {
    pub k: f64,
    pub method: EllipkMethod,
    pub value: f64,
    /// Only for the series: number of terms and a bound on the remainder.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail_bound: Option<f64>,
}

fn cmd_ellipk(args: &EllipkArgs, fmt: Fmt) -> Result<Output, Error> {
    let r = match args.method {
        EllipkMethod::Agm => EllipkReport {
            k: args.k,
            method: args.method,
            value: elliptic_k_agm(args.k)?,
            terms: None,
            tail_bound: None,
        },
        EllipkMethod::Series => EllipkReport {
            k: args.k,
            method: args.method,
            value: elliptic_k_series(args.k, args.terms)?,
            terms: Some(args.terms),
            tail_bound: Some(elliptic_series_tail(args.k, args.terms)?),
        },
    };
    let text = match fmt.format {
        Format::Json => to_json(&r),
        Format::Csv => format!(
            "k,method,value,tail_bound\n{},{:?},{},{}\n",
            r.k,
            r.method,
            significant(r.value, 17),
            r.tail_bound.map(|t| format!("{t:e}")).unwrap_or_default()
        )
        .to_lowercase(),
        Format::Plain => {
            let mut s = format!("K({}) = {}\n", r.k, significant(r.value, 17));
            if let (Some(n), Some(t)) = (r.terms, r.tail_bound) {
                writeln!(s, "# {n} terms, remainder <= {t:e}").unwrap();
            }
            s
        }
    };
    Ok(Output::ok(text))
}

// ------------------------------------------------------------------ genfun

fn check_unit_interval(name: &str, z: f64) -> Result<(), Error> {
    if !(0.0..1.0).contains(&z) {
        return Err(Error::Domain(format!("{name} = {z} must satisfy 0 <= {name} < 1")));
    }
    Ok(())
}

fn cmd_genfun(args: &GenfunArgs, fmt: Fmt) -> Result<Output, Error> {
    if args.sweep {
        check_unit_interval("--from", args.from)?;
        check_unit_interval("--to", args.to)?;
        if args.steps == 0 || args.to < args.from {
            return Err(Error::Usage("sweep needs --steps >= 1 and --from <= --to".into()));
        }
        let mut points = Vec::with_capacity(args.steps as usize + 1);
        for i in 0..=args.steps {
            let z = args.from + (args.to - args.from) * f64::from(i) / f64::from(args.steps);
            points.push(gf_point(z, args.truncate)?);
        }
        let pass = points.iter().all(GfPoint::within_bound);
        let text = match fmt.format {
            Format::Json => to_json(&points),
            _ => {
                let mut s = String::from("z,lhs,rhs,tail_bound\n");
                for p in &points {
                    writeln!(s, "{},{:e},{:e},{:e}", p.z, p.lhs_partial, p.rhs_closed, p.tail_bound).unwrap();
                }
                s
            }
        };
        return Ok(Output::checked(text, pass));
    }
    let z = args.z.expect("clap requires --z without --sweep");
    let p = gf_point(z, args.truncate)?;
    let text = match fmt.format {
        Format::Json => to_json(&p),
        Format::Csv => format!(
            "z,lhs_partial,rhs_closed,truncation,tail_bound,abs_diff\n{},{:e},{:e},{},{:e},{:e}\n",
            p.z, p.lhs_partial, p.rhs_closed, p.truncation, p.tail_bound, p.abs_diff
        ),
        Format::Plain => format!(
            "z           = {}\nlhs_partial = {}\nrhs_closed  = {}\ntruncation  = {}\ntail_bound  = {:e}\nabs_diff    = {:e}\n",
            p.z,
            fmt.float(p.lhs_partial),
            fmt.float(p.rhs_closed),
            p.truncation,
            p.tail_bound,
            p.abs_diff
        ),
    };
    Ok(Output::checked(text, p.within_bound()))
}

// --------------------------------------------------------------- classical

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassicalGf {
    pub dim: u32,
    pub z: f64,
    pub partial: f64,
    pub closed: f64,
    pub truncation: u64,
    pub tail_bound: f64,
    pub abs_diff: f64,
}

impl ClassicalGf {
    pub fn within_bound(&self) -> bool {
        self.abs_diff <= self.tail_bound + 1e-10
    }
}

/// Series against closed form for the classical walk; without an explicit
/// truncation, the smallest even one with tail bound `≤ 1e-12`.
pub fn classical_gf(dim: u32, z: f64, truncation: Option<u64>) -> Result<ClassicalGf, Error> {
    let closed = rw_gf(dim, z)?;
    let truncation = match truncation {
        Some(t) => t,
        None => {
            let mut t = 0;
            while rw_tail_bound(dim, z, t)? > 1e-12 {
                t += 2;
            }
            t
        }
    };
    let partial = rw_gf_partial(dim, z, truncation)?;
    Ok(ClassicalGf {
        dim,
        z,
        partial,
        closed,
        truncation,
        tail_bound: rw_tail_bound(dim, z, truncation)?,
        abs_diff: (partial - closed).abs(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
struct ClassicalPoint {
    dim: u32,
    time: u64,
    exact: DyadicRational,
    fraction: String,
    float: f64,
}

fn cmd_classical(args: &ClassicalArgs, fmt: Fmt) -> Result<Output, Error> {
    if let Some(z) = args.gf {
        let g = classical_gf(args.dim, z, args.truncate)?;
        let text = match fmt.format {
            Format::Json => to_json(&g),
            Format::Csv => format!(
                "dim,z,partial,closed,truncation,tail_bound,abs_diff\n{},{},{:e},{:e},{},{:e},{:e}\n",
                g.dim, g.z, g.partial, g.closed, g.truncation, g.tail_bound, g.abs_diff
            ),
            Format::Plain => format!(
                "partial ({} terms) = {}\nclosed form        = {}\ntail bound         = {:e}\nabs diff           = {:e}\n",
                g.truncation,
                fmt.float(g.partial),
                fmt.float(g.closed),
                g.tail_bound,
                g.abs_diff
            ),
        };
        return Ok(Output::checked(text, g.within_bound()));
    }
    let time = args.time.expect("clap requires --time without --gf");
    let exact = rw_return_prob(args.dim, time)?;
    let p = ClassicalPoint {
        dim: args.dim,
        time,
        fraction: exact.fraction_string(),
        float: exact.to_f64(),
        exact,
    };
    let text = match fmt.format {
        Format::Json => to_json(&p),
        Format::Csv => format!("dim,time,exact,fraction,float\n{},{},{},{},{:e}\n", p.dim, p.time, p.exact, p.fraction, p.float),
        Format::Plain => format!("p_{}(0) [{}D] = {} = {}\n", p.time, p.dim, p.fraction, fmt.float(p.float)),
    };
    Ok(Output::ok(text))
}

// ------------------------------------------------------------------ watson

fn cmd_watson(args: &WatsonArgs, fmt: Fmt) -> Result<Output, Error> {
    let w = watson_return_prob(args.tol)?;
    let text = match fmt.format {
        Format::Json => to_json(&w),
        Format::Csv => format!(
            "g_quadrature,g_closed,f_return,quadrature_error_estimate\n{:e},{:e},{:e},{:e}\n",
            w.g_quadrature, w.g_closed, w.f_return, w.quadrature_error_estimate
        ),
        Format::Plain => format!(
            "G (quadrature)  = {}  (error estimate {:e})\nG (closed form) = {}\nF = 1 - 1/G     = {}\n",
            fmt.float(w.g_quadrature),
            w.quadrature_error_estimate,
            fmt.float(w.g_closed),
            fmt.float(w.f_return)
        ),
    };
    Ok(Output::checked(text, w.agrees()))
}

// ------------------------------------------------------------------ verify

fn cmd_verify(args: &VerifyArgs, fmt: Fmt) -> Output {
    let report = run_verify(args.scope);
    let text = match fmt.format {
        Format::Json => to_json(&report),
        Format::Csv => report.to_csv(),
        Format::Plain => report.to_plain(),
    };
    Output::checked(text, report.passed())
}
