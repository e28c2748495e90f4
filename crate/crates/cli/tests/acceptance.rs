//! One line per acceptance criterion, with its tolerance and time limit.
//! Runs as a plain binary so the lines show up without `--nocapture`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hadamard_walk::special::ExactRational;
use hadamard_walk_cli::checks::{
    four_oracles, hypergeometric_chain, jacobi_recurrence, lemma_vs_dp, normalization_symmetry, odd_times_vanish,
    pfaff_holds, polya, structure_constants, theorem2, watson, Check, VALUE_TABLE,
};
use hadamard_walk_cli::{run_return_prob, Method};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Criterion {
    id: u32,
    title: &'static str,
    tolerance: &'static str,
    limit: Option<Duration>,
    run: fn() -> Vec<Check>,
}

fn value_table() -> Vec<Check> {
    VALUE_TABLE
        .iter()
        .map(|&(n, expected)| {
            let report = run_return_prob(n, Method::All).unwrap();
            let want = expected.parse().unwrap();
            let pass = report.agree && report.values.iter().all(|v| v.exact == want);
            let got = report.values.iter().map(|v| v.fraction.as_str()).collect::<Vec<_>>().join(" ");
            check(&format!("p_{n}(0)"), pass, &got)
        })
        .collect()
}

fn check(name: &str, pass: bool, detail: &str) -> Check {
    Check::new(name, pass, "", detail)
}

fn random_pfaff() -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x05ee_d2f1);
    let r = |rng: &mut ChaCha8Rng| {
        ExactRational::new(BigInt::from(rng.gen_range(-12i64..=12)), BigInt::from(rng.gen_range(1i64..=7)))
    };
    let mut tested = 0;
    let mut failures = Vec::new();
    while tested < 100 {
        let m = rng.gen_range(0u64..9);
        let (b, c, z) = (r(&mut rng), r(&mut rng), r(&mut rng));
        match pfaff_holds(m, &b, &c, &z) {
            None => continue,
            Some(ok) => {
                tested += 1;
                if !ok {
                    failures.push(format!("m={m} b={b} c={c} z={z}"));
                }
            }
        }
    }
    vec![check(
        "pfaff 100 random instances",
        failures.is_empty(),
        &if failures.is_empty() { "all equal".to_string() } else { failures.join("; ") },
    )]
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "exact value table p_0..p_18, every method",
        tolerance: "exact dyadic equality",
        limit: Some(Duration::from_secs(1)),
        run: value_table,
    },
    Criterion {
        id: 2,
        title: "four routes agree on p_2n(0), n <= 100",
        tolerance: "exact dyadic equality",
        limit: Some(Duration::from_secs(30)),
        run: || vec![four_oracles(100)],
    },
    Criterion {
        id: 3,
        title: "generating function vs elliptic closed form, z = 0.1 0.3 0.5 0.7",
        tolerance: "tail bound (<= 1e-12) + 1e-10",
        limit: Some(Duration::from_secs(10)),
        run: || [0.1, 0.3, 0.5, 0.7].into_iter().map(theorem2).collect(),
    },
    Criterion {
        id: 4,
        title: "2D random walk series vs (2/pi) K(z), z = 0.3 0.6",
        tolerance: "tail bound + 1e-10",
        limit: None,
        run: || [0.3, 0.6].into_iter().map(polya).collect(),
    },
    Criterion {
        id: 5,
        title: "Watson G by quadrature and closed form; G = 1.51638..., F = 0.34053...",
        tolerance: "|G_quad - G_closed| <= 1e-6; 5 decimals",
        limit: Some(Duration::from_secs(5)),
        run: || watson().to_vec(),
    },
    Criterion {
        id: 6,
        title: "identity suite: Jacobi n<=200, 2F1 chain n<=50, Pfaff x100, products 16 pairs, closed form = DP l,m<=30",
        tolerance: "exact",
        limit: None,
        run: || {
            let mut v = vec![jacobi_recurrence(200), hypergeometric_chain(50)];
            v.extend(random_pfaff());
            v.push(structure_constants());
            v.push(lemma_vs_dp(30));
            v
        },
    },
    Criterion {
        id: 7,
        title: "normalization and symmetry n<=200; p_2n+1(0) = 0 for n<=100",
        tolerance: "exact",
        limit: None,
        run: || {
            let mut v = normalization_symmetry(200).to_vec();
            v.push(odd_times_vanish(100));
            v
        },
    },
];

fn main() -> ExitCode {
    let mut all_pass = true;
    for c in CRITERIA {
        let start = Instant::now();
        let checks = (c.run)();
        let elapsed = start.elapsed();
        let in_time = c.limit.is_none_or(|l| elapsed < l);
        let failed: Vec<&Check> = checks.iter().filter(|k| !k.passed()).collect();
        let pass = failed.is_empty() && in_time;
        all_pass &= pass;
        let limit = c.limit.map_or_else(|| "none".to_string(), |l| format!("{}s", l.as_secs()));
        println!(
            "{} criterion {}: {} [tol {}; {:.3}s, limit {}]",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            c.tolerance,
            elapsed.as_secs_f64(),
            limit
        );
        for k in failed {
            println!("       {}: expected {} actual {}", k.name, k.expected, k.actual);
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
