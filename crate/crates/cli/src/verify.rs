//! Verification suites behind `dunkl verify`.
//!
//! Each suite enumerates independent exact checks, fans them out over the `mu`
//! samples and collects failures in a deterministic order.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use dunkl::algebra::{factorial, int, lemma1_sum, lemma2_check, lemma3_check, pow2, rat, sign};
use dunkl::hermite::{c_matrix, d_matrix, generalized_hermite, hermite, to_hermite, to_poly};
use dunkl::intertwiner::{
    corollary_residual, intertwining_residual, v_mu_boson, v_mu_hermite, v_mu_monomial,
};
use dunkl::ops::{a_squared, b_op, derivative, dunkl, gauged_hamiltonian, number_op, projector};
use dunkl::quadrature::{compare_realizations, DEFAULT_GRID};
use dunkl::{MuParam, Poly};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

/// Highest degree the quadrature comparison is run at; its tolerances are pinned there.
pub const QUADRATURE_DEGREE_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Lemmas,
    Basis,
    Intertwine,
    Oscillator,
    Quadrature,
    All,
}

impl Suite {
    const PARTS: [Suite; 5] = [
        Suite::Lemmas,
        Suite::Basis,
        Suite::Intertwine,
        Suite::Oscillator,
        Suite::Quadrature,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Lemmas => "lemmas",
            Suite::Basis => "basis",
            Suite::Intertwine => "intertwine",
            Suite::Oscillator => "oscillator",
            Suite::Quadrature => "quadrature",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::PARTS
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.as_str() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub case_id: String,
    pub inputs: Value,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub suite: Suite,
    pub max_degree: usize,
    pub mu_samples: Vec<String>,
    pub cases_run: usize,
    pub failures: Vec<Failure>,
    pub wall_time: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Running tally for one group of cases.
#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn check(
        &mut self,
        ok: bool,
        case_id: impl FnOnce() -> String,
        detail: impl FnOnce() -> (Value, String, String),
    ) {
        self.cases += 1;
        if !ok {
            let (inputs, expected, actual) = detail();
            self.failures.push(Failure {
                case_id: case_id(),
                inputs,
                expected,
                actual,
            });
        }
    }

    fn check_eq(&mut self, case_id: String, inputs: Value, expected: &Poly, actual: &Poly) {
        self.check(
            expected == actual,
            || case_id,
            || (inputs, expected.to_string(), actual.to_string()),
        );
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }
}

/// Runs `per_mu` for every sample in parallel and concatenates the tallies in sample order.
fn over_mus(mus: &[MuParam], per_mu: impl Fn(&MuParam) -> Tally + Sync + Send) -> Tally {
    mus.par_iter()
        .map(per_mu)
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge)
}

fn lemmas(max_degree: usize, mus: &[MuParam]) -> Tally {
    let mut tally = Tally::default();
    for m in 0..=max_degree {
        for k in 0..=max_degree {
            let got = lemma1_sum(m, k);
            let want = if m == k { factorial(m) } else { int(0) };
            tally.check(
                got == want,
                || format!("lemma1/m={m}/k={k}"),
                || (json!({"m": m, "k": k}), want.to_string(), got.to_string()),
            );
        }
    }
    for n in 0..=max_degree {
        for l in 0..=n {
            for eps in 0..2 {
                tally.check(
                    lemma3_check(n, l, eps),
                    || format!("lemma3/n={n}/l={l}/eps={eps}"),
                    || {
                        (
                            json!({"n": n, "l": l, "eps": eps}),
                            "true".into(),
                            "false".into(),
                        )
                    },
                );
            }
        }
    }
    tally.merge(over_mus(mus, |mu| {
        let mut tally = Tally::default();
        for n in 0..=max_degree {
            for k in 0..=n {
                for eps in 0..2 {
                    tally.check(
                        lemma2_check(n, k, eps, mu),
                        || format!("lemma2/mu={mu}/n={n}/k={k}/eps={eps}"),
                        || {
                            let inputs = json!({"mu": mu.to_string(), "n": n, "k": k, "eps": eps});
                            (inputs, "true".into(), "false".into())
                        },
                    );
                }
            }
        }
        tally
    }))
}

fn basis(max_degree: usize) -> Tally {
    let mut tally = Tally::default();
    let size = max_degree / 2 + 1;
    for eps in 0..2 {
        let product = c_matrix(size, eps).product(&d_matrix(size, eps));
        for (i, row) in product.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let want = int((i == j) as i64);
                tally.check(
                    *v == want,
                    || format!("cd-identity/eps={eps}/{i},{j}"),
                    || {
                        (
                            json!({"eps": eps, "row": i, "col": j}),
                            want.to_string(),
                            v.to_string(),
                        )
                    },
                );
            }
        }
    }
    for n in 0..=max_degree {
        let h = hermite(n);
        if n > 0 {
            let want = hermite(n - 1).scale(&int(2 * n as i64));
            tally.check_eq(
                format!("appell/n={n}"),
                json!({"n": n}),
                &want,
                &derivative(&h),
            );
        }
        let lead = h.leading_coeff().cloned().unwrap_or_default();
        tally.check(
            lead == pow2(n),
            || format!("leading/n={n}"),
            || (json!({"n": n}), pow2(n).to_string(), lead.to_string()),
        );
        tally.check_eq(
            format!("parity/n={n}"),
            json!({"n": n}),
            &h.scale(&sign(n)),
            &h.reflect(),
        );
        let x = Poly::x_pow(n);
        tally.check_eq(
            format!("round-trip/x^{n}"),
            json!({"n": n}),
            &x,
            &to_poly(&to_hermite(&x)),
        );
        tally.check_eq(
            format!("genhermite-mu0/n={n}"),
            json!({"n": n}),
            &h,
            &generalized_hermite(&MuParam::zero(), n),
        );
    }
    tally
}

fn basis_elements(max_degree: usize) -> Vec<(String, Poly)> {
    (0..=max_degree)
        .flat_map(|d| {
            [
                (format!("x^{d}"), Poly::x_pow(d)),
                (format!("H_{d}"), hermite(d)),
            ]
        })
        .collect()
}

fn intertwine(max_degree: usize, mus: &[MuParam]) -> Tally {
    let elements = basis_elements(max_degree);
    let zero = MuParam::zero();
    let mut tally = Tally::default();
    for (name, p) in &elements {
        let inputs = json!({"mu": "0", "p": name});
        tally.check_eq(
            format!("mu0/dunkl/{name}"),
            inputs.clone(),
            &derivative(p),
            &dunkl(&zero, p),
        );
        tally.check_eq(
            format!("mu0/identity/{name}"),
            inputs,
            p,
            &v_mu_monomial(&zero, p),
        );
    }
    tally.merge(over_mus(mus, |mu| {
        let mut tally = Tally::default();
        for (name, p) in &elements {
            let inputs = json!({"mu": mu.to_string(), "p": name});
            let reference = v_mu_monomial(mu, p);
            tally.check_eq(
                format!("hermite/mu={mu}/{name}"),
                inputs.clone(),
                &reference,
                &v_mu_hermite(mu, p),
            );
            tally.check_eq(
                format!("boson/mu={mu}/{name}"),
                inputs.clone(),
                &reference,
                &v_mu_boson(mu, p),
            );
            tally.check_eq(
                format!("intertwining/mu={mu}/{name}"),
                inputs,
                &Poly::zero(),
                &intertwining_residual(mu, p),
            );
        }
        for n in 0..=max_degree {
            tally.check_eq(
                format!("corollary/mu={mu}/n={n}"),
                json!({"mu": mu.to_string(), "n": n}),
                &Poly::zero(),
                &corollary_residual(mu, n),
            );
        }
        tally
    }))
}

fn oscillator(max_degree: usize, mus: &[MuParam]) -> Tally {
    let mut tally = Tally::default();
    for m in 0..=max_degree {
        let h = hermite(m);
        let inputs = json!({"m": m});
        tally.check_eq(
            format!("number-op/m={m}"),
            inputs.clone(),
            &h.scale(&int(m as i64)),
            &number_op(&h),
        );
        let (n, eps) = (m / 2, m % 2);
        let lowered = if n == 0 {
            Poly::zero()
        } else {
            hermite(m - 2).scale(&int(4 * n as i64))
        };
        tally.check_eq(
            format!("b-lowering/m={m}"),
            inputs.clone(),
            &lowered,
            &b_op(&h),
        );
        let annihilated = (0..=n).fold(h.clone(), |acc, _| b_op(&acc));
        tally.check_eq(
            format!("b-annihilates/m={m}"),
            json!({"m": m, "power": n + 1, "eps": eps}),
            &Poly::zero(),
            &annihilated,
        );
        if m >= 2 {
            let b = b_op(&h);
            let shifted = &(&number_op(&b) + &projector(&b)) + &b;
            tally.check_eq(
                format!("shifted-inverse/m={m}"),
                inputs,
                &a_squared(&h),
                &shifted,
            );
        }
    }
    tally.merge(over_mus(mus, |mu| {
        let mut tally = Tally::default();
        for m in 0..=max_degree {
            let h = generalized_hermite(mu, m);
            let energy = int(m as i64) + mu.value() + rat(1, 2);
            tally.check_eq(
                format!("spectrum/mu={mu}/m={m}"),
                json!({"mu": mu.to_string(), "m": m}),
                &h.scale(&energy),
                &gauged_hamiltonian(mu, &h),
            );
        }
        tally
    }))
}

fn quadrature(max_degree: usize, mus: &[MuParam]) -> Tally {
    let cap = max_degree.min(QUADRATURE_DEGREE_CAP);
    let positive: Vec<MuParam> = mus
        .iter()
        .filter(|mu| mu.value() > &int(0))
        .cloned()
        .collect();
    over_mus(&positive, |mu| {
        let mut tally = Tally::default();
        let inputs = json!({"mu": mu.to_string(), "degree_cap": cap});
        match compare_realizations(mu, cap, &DEFAULT_GRID) {
            Ok(report) => tally.check(
                report.within_tolerance(),
                || format!("integral/mu={mu}"),
                || {
                    let worst = serde_json::to_string(&report.worst_case).unwrap_or_default();
                    (inputs, format!("<= {:e}", report.tolerance), worst)
                },
            ),
            Err(e) => tally.check(
                false,
                || format!("integral/mu={mu}"),
                || (inputs, "a quadrature rule".into(), e.to_string()),
            ),
        }
        tally
    })
}

pub fn run_suite(suite: Suite, max_degree: usize, mus: &[MuParam]) -> VerifyReport {
    let start = Instant::now();
    let parts: Vec<Suite> = match suite {
        Suite::All => Suite::PARTS.to_vec(),
        one => vec![one],
    };
    let tally = parts
        .into_iter()
        .map(|part| match part {
            Suite::Lemmas => lemmas(max_degree, mus),
            Suite::Basis => basis(max_degree),
            Suite::Intertwine => intertwine(max_degree, mus),
            Suite::Oscillator => oscillator(max_degree, mus),
            Suite::Quadrature => quadrature(max_degree, mus),
            Suite::All => unreachable!(),
        })
        .fold(Tally::default(), Tally::merge);
    VerifyReport {
        schema_version: SCHEMA_VERSION,
        suite,
        max_degree,
        mu_samples: mus.iter().map(ToString::to_string).collect(),
        cases_run: tally.cases,
        failures: tally.failures,
        wall_time: start.elapsed().as_secs_f64(),
    }
}
