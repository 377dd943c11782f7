use std::fmt::Write as _;

use dunkl::algebra::parse_rational;
use dunkl::hermite::{generalized_hermite, hermite};
use dunkl::intertwiner::{certification_mus, v_mu_apply};
use dunkl::ops::{OperatorName, OperatorTag};
use dunkl::quadrature::{
    build_rule, compare_realizations, required_nodes, v_mu_exact_at, v_mu_integral, DEFAULT_GRID,
};
use dunkl::{MuParam, Poly, Realization};
use num::ToPrimitive;
use serde_json::json;

use crate::verify::{run_suite, Suite, SCHEMA_VERSION};
use crate::{Output, EXIT_FAILURE};

fn coeff_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn to_json_line(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}

fn parse_mu(text: &str) -> Result<MuParam, Output> {
    text.parse::<MuParam>().map_err(Output::usage)
}

fn parse_poly(text: &str) -> Result<Poly, Output> {
    text.parse::<Poly>().map_err(Output::usage)
}

/// Accepts decimals and `p/q`.
fn parse_float(text: &str) -> Result<f64, Output> {
    if let Ok(v) = text.trim().parse::<f64>() {
        return Ok(v);
    }
    parse_rational(text)
        .ok()
        .and_then(|r| r.to_f64())
        .ok_or_else(|| Output::usage(format!("not a number: {text:?}")))
}

pub fn parse_mu_list(text: &str) -> Result<Vec<MuParam>, Output> {
    text.split(',').map(parse_mu).collect()
}

/// `hermite --n N [--mu MU] [--json]`
pub fn cmd_hermite(n: usize, mu: Option<&str>, as_json: bool) -> Output {
    let (poly, mu) = match mu {
        None => (hermite(n), None),
        Some(text) => match parse_mu(text) {
            Ok(mu) => (generalized_hermite(&mu, n), Some(mu)),
            Err(out) => return out,
        },
    };
    if as_json {
        Output::ok(to_json_line(&json!({
            "schema_version": SCHEMA_VERSION,
            "n": n,
            "mu": mu.map(|m| m.to_string()),
            "coefficients": coeff_strings(&poly),
        })))
    } else {
        Output::ok(format!("{poly}\n"))
    }
}

/// `intertwine --mu MU --method M --poly P [--json] [--x0 X --nodes K]`
pub fn cmd_intertwine(
    mu: &str,
    method: &str,
    poly: &str,
    as_json: bool,
    x0: Option<&str>,
    nodes: Option<usize>,
) -> Output {
    let run = || -> Result<Output, Output> {
        let mu = parse_mu(mu)?;
        let method: Realization = method.parse().map_err(Output::usage)?;
        let p = parse_poly(poly)?;
        if method == Realization::Integral {
            let x0 = parse_float(x0.ok_or_else(|| Output::usage("--method integral needs --x0"))?)?;
            return Ok(integral_point(&mu, &p, x0, nodes, as_json));
        }
        let image = v_mu_apply(&mu, &p, method).map_err(Output::usage)?;
        Ok(if as_json {
            Output::ok(to_json_line(&json!({
                "schema_version": SCHEMA_VERSION,
                "mu": mu.to_string(),
                "method": method.as_str(),
                "input": coeff_strings(&p),
                "output": coeff_strings(&image),
            })))
        } else {
            Output::ok(format!("{image}\n"))
        })
    };
    run().unwrap_or_else(|e| e)
}

fn integral_point(mu: &MuParam, p: &Poly, x0: f64, nodes: Option<usize>, as_json: bool) -> Output {
    let needed = required_nodes(p.degree().unwrap_or(0));
    let nodes = nodes.unwrap_or(needed);
    let mut stderr = String::new();
    if nodes < needed {
        let _ = writeln!(
            stderr,
            "warning: {nodes} nodes cannot integrate degree {} exactly (need {needed})",
            p.degree().unwrap_or(0)
        );
    }
    let rule = match build_rule(mu.to_f64(), nodes) {
        Ok(rule) => rule,
        Err(e) => return Output::usage(e),
    };
    let value = v_mu_integral(&rule, p, x0);
    let exact = v_mu_exact_at(mu, p, x0);
    let stdout = if as_json {
        to_json_line(&json!({
            "schema_version": SCHEMA_VERSION,
            "mu": mu.to_string(),
            "method": "integral",
            "input": coeff_strings(p),
            "x0": x0,
            "nodes": nodes,
            "value": value,
            "exact": exact,
        }))
    } else {
        format!("{value:.16e}\n")
    };
    Output {
        stdout,
        stderr,
        code: 0,
    }
}

/// `apply --op NAME [--mu MU] --poly P [--json]`
pub fn cmd_apply(op: &str, mu: Option<&str>, poly: &str, as_json: bool) -> Output {
    let run = || -> Result<Output, Output> {
        let name: OperatorName = op.parse().map_err(Output::usage)?;
        let mu = mu.map(parse_mu).transpose()?;
        let tag = OperatorTag::new(name, mu).map_err(Output::usage)?;
        let p = parse_poly(poly)?;
        let image = tag.apply(&p);
        Ok(if as_json {
            Output::ok(to_json_line(&json!({
                "schema_version": SCHEMA_VERSION,
                "op": name.as_str(),
                "mu": tag.mu().map(ToString::to_string),
                "input": coeff_strings(&p),
                "output": coeff_strings(&image),
            })))
        } else {
            Output::ok(format!("{image}\n"))
        })
    };
    run().unwrap_or_else(|e| e)
}

/// `verify --suite S --max-degree D [--mu-samples LIST]`
pub fn cmd_verify(suite: &str, max_degree: usize, mu_samples: Option<&str>) -> Output {
    let suite: Suite = match suite.parse() {
        Ok(s) => s,
        Err(e) => return Output::usage(e),
    };
    let mus = match mu_samples {
        Some(text) => match parse_mu_list(text) {
            Ok(m) => m,
            Err(out) => return out,
        },
        None => certification_mus(max_degree),
    };
    let report = run_suite(suite, max_degree, &mus);
    let mut stdout = serde_json::to_string_pretty(&report).expect("report serializes");
    stdout.push('\n');
    Output {
        stdout,
        stderr: String::new(),
        code: if report.passed() { 0 } else { EXIT_FAILURE },
    }
}

/// `quadrature --mu MU --nodes K [--emit-rule]`
///
/// Prints `node,weight` lines with 17 significant digits; `--emit-rule` prints the
/// whole rule as a JSON object instead.
pub fn cmd_quadrature(mu: &str, nodes: usize, emit_rule: bool) -> Output {
    let mu = match parse_float(mu) {
        Ok(v) => v,
        Err(out) => return out,
    };
    let rule = match build_rule(mu, nodes) {
        Ok(rule) => rule,
        Err(e) => return Output::usage(e),
    };
    if emit_rule {
        return Output::ok(to_json_line(&json!({
            "schema_version": SCHEMA_VERSION,
            "mu": rule.mu(),
            "nodes": rule.nodes(),
            "weights": rule.weights(),
        })));
    }
    let mut out = String::new();
    for (t, w) in rule.nodes().iter().zip(rule.weights()) {
        let _ = writeln!(out, "{t:.16e},{w:.16e}");
    }
    Output::ok(out)
}

/// `compare --mu MU --max-degree D [--grid LIST]`
pub fn cmd_compare(mu: &str, max_degree: usize, grid: Option<&str>) -> Output {
    let run = || -> Result<Output, Output> {
        let mu = parse_mu(mu)?;
        let grid = match grid {
            Some(text) => text
                .split(',')
                .map(parse_float)
                .collect::<Result<Vec<_>, _>>()?,
            None => DEFAULT_GRID.to_vec(),
        };
        let report = compare_realizations(&mu, max_degree, &grid).map_err(Output::usage)?;
        let mut value = serde_json::to_value(&report).expect("report serializes");
        value["schema_version"] = json!(SCHEMA_VERSION);
        Ok(Output {
            stdout: to_json_line(&value),
            stderr: String::new(),
            code: if report.within_tolerance() {
                0
            } else {
                EXIT_FAILURE
            },
        })
    };
    run().unwrap_or_else(|e| e)
}
