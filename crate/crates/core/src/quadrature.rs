//! Floating-point evaluation of `V_mu` through its integral representation
//!
//! ```text
//! (V_mu f)(x) = c_mu * int_{-1}^{1} f(x t) (1-t)^{mu-1} (1+t)^mu dt,
//! ```
//!
//! using a Gauss-Jacobi rule with `(alpha, beta) = (mu - 1, mu)`. The rule is built
//! with the Golub-Welsch method and its weights are rescaled to unit mass, which
//! accounts for `c_mu` without evaluating any Gamma function (`V_mu 1 = 1`).

use nalgebra::{DMatrix, SymmetricEigen};
use num::traits::ToPrimitive;
use serde::Serialize;

use crate::algebra::{MuParam, Rational};
use crate::hermite::hermite;
use crate::intertwiner::v_mu_monomial;
use crate::poly::Poly;
use crate::Error;

const EIGEN_EPS: f64 = 1e-15;
const EIGEN_MAX_ITER: usize = 10_000;

/// Relative tolerance for comparing the integral against the exact realization
/// (degree at most 20): `1e-11` for `mu >= 1/2`, `1e-10` below, where the
/// `(1-t)^{mu-1}` endpoint singularity degrades the recurrence.
pub fn tolerance_for(mu: f64) -> f64 {
    if mu >= 0.5 {
        1e-11
    } else {
        1e-10
    }
}

/// Gauss-Jacobi nodes and unit-mass weights for `(1-t)^{mu-1} (1+t)^mu`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadRule {
    mu: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadRule {
    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `sum_i w_i f(t_i)`.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&t, &w)| w * f(t))
            .sum()
    }

    /// Largest polynomial degree this rule integrates exactly.
    pub fn exact_degree(&self) -> usize {
        2 * self.len() - 1
    }
}

/// Three-term recurrence of the monic Jacobi polynomials: diagonal and off-diagonal
/// of the Jacobi matrix.
fn jacobi_recurrence(alpha: f64, beta: f64, n: usize) -> (Vec<f64>, Vec<f64>) {
    let ab = alpha + beta;
    let diag = (0..n)
        .map(|k| {
            if k == 0 {
                (beta - alpha) / (ab + 2.0)
            } else {
                let s = 2.0 * k as f64 + ab;
                (beta * beta - alpha * alpha) / (s * (s + 2.0))
            }
        })
        .collect();
    let off = (1..n)
        .map(|k| {
            let kf = k as f64;
            let s = 2.0 * kf + ab;
            let num = 4.0 * kf * (kf + alpha) * (kf + beta) * (kf + ab);
            let den = s * s * (s + 1.0) * (s - 1.0);
            (num / den).sqrt()
        })
        .collect();
    (diag, off)
}

pub fn build_rule(mu: f64, n_nodes: usize) -> Result<QuadRule, Error> {
    if !(mu.is_finite() && mu > 0.0) {
        return Err(Error::QuadratureDomain(mu));
    }
    if n_nodes == 0 {
        return Err(Error::NoNodes);
    }
    let (diag, off) = jacobi_recurrence(mu - 1.0, mu, n_nodes);
    let mut jacobi = DMatrix::<f64>::zeros(n_nodes, n_nodes);
    for (i, &d) in diag.iter().enumerate() {
        jacobi[(i, i)] = d;
    }
    for (i, &b) in off.iter().enumerate() {
        jacobi[(i, i + 1)] = b;
        jacobi[(i + 1, i)] = b;
    }
    let eigen = SymmetricEigen::try_new(jacobi, EIGEN_EPS, EIGEN_MAX_ITER)
        .ok_or(Error::EigenNonConvergence(n_nodes))?;

    let mut pairs: Vec<(f64, f64)> = eigen
        .eigenvalues
        .iter()
        .enumerate()
        .map(|(i, &t)| {
            let v0 = eigen.eigenvectors[(0, i)];
            (t, v0 * v0)
        })
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mass: f64 = pairs.iter().map(|p| p.1).sum();

    Ok(QuadRule {
        mu,
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1 / mass).collect(),
    })
}

/// Nodes needed to integrate `f(x t)` exactly for a polynomial `f` of degree `deg`.
pub fn required_nodes(deg: usize) -> usize {
    (deg + 2) / 2
}

/// Quadrature value of `(V_mu p)(x0)`.
pub fn v_mu_integral(rule: &QuadRule, p: &Poly, x0: f64) -> f64 {
    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN))
        .collect();
    rule.integrate(|t| {
        let y = x0 * t;
        coeffs.iter().rev().fold(0.0, |acc, &c| acc * y + c)
    })
}

/// Exact `(V_mu p)(x0)` rounded to `f64`, with `x0` taken as the exact binary value.
pub fn v_mu_exact_at(mu: &MuParam, p: &Poly, x0: f64) -> f64 {
    let x = Rational::from_float(x0).expect("finite grid point");
    v_mu_monomial(mu, p)
        .evaluate(&x)
        .to_f64()
        .unwrap_or(f64::NAN)
}

/// `|integral - exact| / (1 + |exact|)`.
pub fn relative_error(integral: f64, exact: f64) -> f64 {
    (integral - exact).abs() / (1.0 + exact.abs())
}

/// The default comparison grid `{-1, -1/2, 0, 1/2, 1}`.
pub const DEFAULT_GRID: [f64; 5] = [-1.0, -0.5, 0.0, 0.5, 1.0];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisFamily {
    Monomial,
    Hermite,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WorstCase {
    pub basis: BasisFamily,
    pub degree: usize,
    pub x0: f64,
    pub integral: f64,
    pub exact: f64,
    pub relative_error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegreeError {
    pub degree: usize,
    pub monomial: f64,
    pub hermite: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub mu: String,
    pub mu_float: f64,
    pub nodes: usize,
    pub degree_cap: usize,
    pub grid: Vec<f64>,
    pub tolerance: f64,
    pub worst_relative_error: f64,
    pub worst_case: Option<WorstCase>,
    pub per_degree: Vec<DegreeError>,
}

impl ComparisonReport {
    pub fn within_tolerance(&self) -> bool {
        self.worst_relative_error <= self.tolerance
    }
}

/// Compares the quadrature realization against the exact monomial realization on
/// `x^d` and `H_d` for every `d <= degree_cap` and every grid point.
pub fn compare_realizations(
    mu: &MuParam,
    degree_cap: usize,
    grid: &[f64],
) -> Result<ComparisonReport, Error> {
    let mu_float = mu.to_f64();
    // one spare node beyond the exactness threshold
    let nodes = required_nodes(degree_cap) + 1;
    let rule = build_rule(mu_float, nodes)?;

    let mut worst: Option<WorstCase> = None;
    let mut per_degree = Vec::with_capacity(degree_cap + 1);
    for degree in 0..=degree_cap {
        let mut row = DegreeError {
            degree,
            monomial: 0.0,
            hermite: 0.0,
        };
        for (basis, p) in [
            (BasisFamily::Monomial, Poly::x_pow(degree)),
            (BasisFamily::Hermite, hermite(degree)),
        ] {
            for &x0 in grid {
                let integral = v_mu_integral(&rule, &p, x0);
                let exact = v_mu_exact_at(mu, &p, x0);
                let err = relative_error(integral, exact);
                let slot = match basis {
                    BasisFamily::Monomial => &mut row.monomial,
                    BasisFamily::Hermite => &mut row.hermite,
                };
                *slot = slot.max(err);
                if worst.as_ref().is_none_or(|w| err > w.relative_error) {
                    worst = Some(WorstCase {
                        basis,
                        degree,
                        x0,
                        integral,
                        exact,
                        relative_error: err,
                    });
                }
            }
        }
        per_degree.push(row);
    }

    Ok(ComparisonReport {
        mu: mu.to_string(),
        mu_float,
        nodes,
        degree_cap,
        grid: grid.to_vec(),
        tolerance: tolerance_for(mu_float),
        worst_relative_error: worst.as_ref().map_or(0.0, |w| w.relative_error),
        worst_case: worst,
        per_degree,
    })
}
