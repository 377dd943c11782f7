//! The Dunkl intertwining operator `V_mu`, satisfying `D_mu V_mu = V_mu d/dx`.
//!
//! Three exact realizations are provided, and they agree coefficient for coefficient:
//!
//! * [`v_mu_monomial`]: diagonal on monomials,
//!   `V x^{2n+eps} = (1/2)_{n+eps} / (mu+1/2)_{n+eps} x^{2n+eps}`.
//! * [`v_mu_hermite`]: banded on Hermite polynomials,
//!   `V H_{2n+eps} = r_{n,eps} sum_l (-4)^l C(n,l) (mu)_l H_{2(n-l)+eps}`,
//!   with `r_{n,eps} = (1/2)_{n+eps} / (mu+1/2)_{n+eps}`.
//! * [`v_mu_boson`]: the series `1F0(mu; ; -b)` in the lowering operator `b`,
//!   applied after the diagonal factor `r_{n,eps}` on each `H_{2n+eps}` component.
//!
//! A fourth, floating-point realization through the integral representation lives in
//! [`crate::quadrature`].

use std::fmt;
use std::str::FromStr;

use num::traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{binomial, factorial, half_ratio, int, pochhammer, rat, MuParam, Rational};
use crate::hermite::{generalized_hermite, hermite, to_hermite, to_poly, HermiteVector};
use crate::ops::{b_op_hermite, dunkl};
use crate::poly::Poly;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Realization {
    Monomial,
    Hermite,
    Boson,
    Integral,
}

impl Realization {
    /// The realizations computed exactly over the rationals.
    pub const EXACT: [Realization; 3] = [
        Realization::Monomial,
        Realization::Hermite,
        Realization::Boson,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Realization::Monomial => "monomial",
            Realization::Hermite => "hermite",
            Realization::Boson => "boson",
            Realization::Integral => "integral",
        }
    }
}

impl fmt::Display for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Realization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "monomial" => Ok(Realization::Monomial),
            "hermite" => Ok(Realization::Hermite),
            "boson" => Ok(Realization::Boson),
            "integral" => Ok(Realization::Integral),
            other => Err(Error::Parse(format!("unknown realization {other:?}"))),
        }
    }
}

/// Multiplier of `x^j` (equivalently of the leading part of `H_j`) under `V_mu`.
pub fn monomial_multiplier(mu: &MuParam, j: usize) -> Rational {
    half_ratio(mu, j / 2 + j % 2)
}

pub fn v_mu_monomial(mu: &MuParam, p: &Poly) -> Poly {
    Poly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if c.is_zero() {
                    Rational::zero()
                } else {
                    c * monomial_multiplier(mu, j)
                }
            })
            .collect(),
    )
}

/// Image of a single `H_m` under `V_mu`, as Hermite coefficients.
pub fn v_mu_on_hermite_basis(mu: &MuParam, m: usize) -> HermiteVector {
    let (n, eps) = (m / 2, m % 2);
    let prefactor = half_ratio(mu, n + eps);
    let mut coeffs = vec![Rational::zero(); m + 1];
    let mut mu_poch = Rational::one();
    for l in 0..=n {
        if l > 0 {
            mu_poch *= mu.value() + int(l as i64 - 1);
        }
        let four_pow = Rational::from_integer(num::BigInt::one() << (2 * l));
        let term = &prefactor * four_pow * Rational::from_integer(binomial(n, l)) * &mu_poch;
        coeffs[2 * (n - l) + eps] = if l % 2 == 0 { term } else { -term };
    }
    HermiteVector::new(coeffs)
}

pub fn v_mu_hermite(mu: &MuParam, p: &Poly) -> Poly {
    let h = to_hermite(p);
    let mut out = HermiteVector::default();
    for (m, c) in h.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&v_mu_on_hermite_basis(mu, m).scale(c));
        }
    }
    to_poly(&out)
}

/// Scales the `H_{2n+eps}` component by `(1/2)_{n+eps} / (mu+1/2)_{n+eps}`.
pub fn hermite_prefactor(mu: &MuParam, h: &HermiteVector) -> HermiteVector {
    HermiteVector::new(
        h.coeffs()
            .iter()
            .enumerate()
            .map(|(m, c)| c * monomial_multiplier(mu, m))
            .collect(),
    )
}

/// `sum_l (mu)_l (-b)^l / l!` on Hermite coefficients, truncated where `b^l` vanishes.
pub fn boson_series(mu: &MuParam, h: &HermiteVector) -> HermiteVector {
    let terms = h.degree().map_or(0, |d| d / 2);
    let mut acc = h.clone();
    let mut power = h.clone();
    for l in 1..=terms {
        power = b_op_hermite(&power);
        if power.is_zero() {
            break;
        }
        let coeff = pochhammer(mu.value(), l) / factorial(l);
        let coeff = if l % 2 == 0 { coeff } else { -coeff };
        acc = acc.add(&power.scale(&coeff));
    }
    acc
}

pub fn v_mu_boson(mu: &MuParam, p: &Poly) -> Poly {
    let h = to_hermite(p);
    to_poly(&boson_series(mu, &hermite_prefactor(mu, &h)))
}

/// Dispatches to one of the exact realizations; `Integral` is rejected.
pub fn v_mu_apply(mu: &MuParam, p: &Poly, method: Realization) -> Result<Poly, Error> {
    match method {
        Realization::Monomial => Ok(v_mu_monomial(mu, p)),
        Realization::Hermite => Ok(v_mu_hermite(mu, p)),
        Realization::Boson => Ok(v_mu_boson(mu, p)),
        Realization::Integral => Err(Error::InexactRealization),
    }
}

/// `D_mu V_mu p - V_mu p'`; identically zero.
pub fn intertwining_residual(mu: &MuParam, p: &Poly) -> Poly {
    &dunkl(mu, &v_mu_monomial(mu, p)) - &v_mu_monomial(mu, &p.derivative())
}

/// `V_mu H_n - H^mu_n`; identically zero.
pub fn corollary_residual(mu: &MuParam, n: usize) -> Poly {
    &v_mu_monomial(mu, &hermite(n)) - &generalized_hermite(mu, n)
}

/// Base sample of deformation parameters used to certify identities in `mu`.
pub const BASE_MU_SAMPLES: [(i64, i64); 14] = [
    (1, 7),
    (1, 3),
    (1, 2),
    (1, 1),
    (3, 2),
    (2, 1),
    (19, 4),
    (7, 1),
    (23, 2),
    (31, 3),
    (41, 5),
    (101, 7),
    (13, 1),
    (17, 1),
];

/// Number of distinct `mu` values needed to certify a degree-`d` identity:
/// every entry of `V_mu` restricted to degree `d` is a ratio of polynomials
/// in `mu` of degree at most `floor(d/2) + 1`.
pub fn certification_count(max_degree: usize) -> usize {
    max_degree / 2 + 2
}

/// At least [`certification_count`] distinct positive admissible `mu` values,
/// starting with [`BASE_MU_SAMPLES`] and extended by `(j+1)^2/(j+2)`.
pub fn certification_mus(max_degree: usize) -> Vec<MuParam> {
    let needed = certification_count(max_degree).max(BASE_MU_SAMPLES.len());
    let mut out: Vec<MuParam> = BASE_MU_SAMPLES
        .iter()
        .map(|&(p, q)| MuParam::ratio(p, q).expect("positive sample"))
        .collect();
    let mut j = 1i64;
    while out.len() < needed {
        let candidate = MuParam::new(rat((j + 1) * (j + 1), j + 2)).expect("positive sample");
        if !out.contains(&candidate) {
            out.push(candidate);
        }
        j += 1;
    }
    out
}
