//! Hermite, Laguerre and generalized Hermite polynomials, and the change of
//! basis between monomials and Hermite polynomials.
//!
//! Within a fixed parity `eps`, the explicit expansion
//!
//! ```text
//! H_{2n+eps}(x) = sum_{k<=n} C[n][k] x^{2k+eps},
//! C[n][k] = (-1)^{n-k} 2^{2k+eps} (2n+eps)! / ((2k+eps)! (n-k)!)
//! ```
//!
//! is inverted by
//!
//! ```text
//! x^{2k+eps} = sum_{l<=k} D[k][l] H_{2l+eps}(x),
//! D[k][l] = (2k+eps)! / (2^{2k+eps} (2l+eps)! (k-l)!)
//! ```
//!
//! Both matrices are lower triangular and `C D = I`.

use std::sync::{OnceLock, RwLock};

use num::traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{factorial, int, pochhammer, pow2, rat, sign, MuParam, Rational};
use crate::poly::Poly;
use crate::Error;

/// Coefficients in the Hermite basis: `sum_m coeffs[m] H_m(x)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HermiteVector {
    coeffs: Vec<Rational>,
}

impl HermiteVector {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        HermiteVector { coeffs }
    }

    /// The single basis element `H_m`.
    pub fn basis(m: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); m + 1];
        coeffs[m] = Rational::one();
        HermiteVector { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> Rational {
        self.coeffs.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rational) -> HermiteVector {
        HermiteVector::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &HermiteVector) -> HermiteVector {
        let len = self.coeffs.len().max(other.coeffs.len());
        HermiteVector::new((0..len).map(|m| self.coeff(m) + other.coeff(m)).collect())
    }
}

/// Which of the two change-of-basis matrices a [`BasisMatrix`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MatrixKind {
    /// Hermite polynomials in terms of monomials.
    C,
    /// Monomials in terms of Hermite polynomials.
    D,
}

/// Lower-triangular block of `C` or `D` for one parity, indices `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMatrix {
    pub kind: MatrixKind,
    pub eps: usize,
    pub size: usize,
    entries: Vec<Vec<Rational>>,
}

impl BasisMatrix {
    /// Entry `(row, col)`; zero above the diagonal.
    pub fn get(&self, row: usize, col: usize) -> Rational {
        if col > row {
            return Rational::zero();
        }
        self.entries[row][col].clone()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// Exact matrix product of two blocks of equal size.
    pub fn product(&self, other: &BasisMatrix) -> Vec<Vec<Rational>> {
        assert_eq!(self.size, other.size);
        (0..self.size)
            .map(|i| {
                (0..self.size)
                    .map(|j| {
                        (0..self.size)
                            .map(|k| self.get(i, k) * other.get(k, j))
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }
}

fn c_entry(n: usize, k: usize, eps: usize) -> Rational {
    sign(n - k) * pow2(2 * k + eps) * factorial(2 * n + eps)
        / (factorial(2 * k + eps) * factorial(n - k))
}

fn d_entry(k: usize, l: usize, eps: usize) -> Rational {
    factorial(2 * k + eps) / (pow2(2 * k + eps) * factorial(2 * l + eps) * factorial(k - l))
}

pub fn c_matrix(size: usize, eps: usize) -> BasisMatrix {
    assert!(eps <= 1, "parity must be 0 or 1");
    BasisMatrix {
        kind: MatrixKind::C,
        eps,
        size,
        entries: (0..size)
            .map(|n| (0..=n).map(|k| c_entry(n, k, eps)).collect())
            .collect(),
    }
}

pub fn d_matrix(size: usize, eps: usize) -> BasisMatrix {
    assert!(eps <= 1, "parity must be 0 or 1");
    BasisMatrix {
        kind: MatrixKind::D,
        eps,
        size,
        entries: (0..size)
            .map(|k| (0..=k).map(|l| d_entry(k, l, eps)).collect())
            .collect(),
    }
}

fn build_hermite(n: usize) -> Poly {
    let (half, eps) = (n / 2, n % 2);
    let mut coeffs = vec![Rational::zero(); n + 1];
    for k in 0..=half {
        coeffs[2 * k + eps] = c_entry(half, k, eps);
    }
    Poly::new(coeffs)
}

fn hermite_cache() -> &'static RwLock<Vec<Poly>> {
    static CACHE: OnceLock<RwLock<Vec<Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(Vec::new()))
}

/// Physicists' Hermite polynomial `H_n`, leading coefficient `2^n`.
pub fn hermite(n: usize) -> Poly {
    if let Some(p) = hermite_cache()
        .read()
        .expect("hermite cache poisoned")
        .get(n)
    {
        return p.clone();
    }
    let mut cache = hermite_cache().write().expect("hermite cache poisoned");
    while cache.len() <= n {
        let next = build_hermite(cache.len());
        cache.push(next);
    }
    cache[n].clone()
}

/// `L_n^alpha(y)` as a polynomial in `y`, from its terminating `1F1` expansion.
///
/// Rejects `alpha` in `{-1, ..., -n}`, where `(alpha+1)_k` vanishes.
pub fn laguerre(n: usize, alpha: &Rational) -> Result<Poly, Error> {
    let a1 = alpha + Rational::one();
    if pochhammer(&a1, n).is_zero() {
        return Err(Error::LaguerrePole(alpha.to_string()));
    }
    let lead = pochhammer(&a1, n) / factorial(n);
    let neg_n = -int(n as i64);
    Ok(Poly::new(
        (0..=n)
            .map(|k| &lead * pochhammer(&neg_n, k) / (pochhammer(&a1, k) * factorial(k)))
            .collect(),
    ))
}

/// `p(x^2)`.
fn compose_with_square(p: &Poly) -> Poly {
    let mut coeffs = vec![Rational::zero(); 2 * p.coeffs().len()];
    for (i, c) in p.coeffs().iter().enumerate() {
        coeffs[2 * i] = c.clone();
    }
    Poly::new(coeffs)
}

/// Generalized Hermite polynomial
/// `H^mu_{2m+eps}(x) = (-1)^m (2m+eps)! / (mu+1/2)_{m+eps} x^eps L_m^{mu-1/2+eps}(x^2)`.
///
/// Equals [`hermite`] at `mu = 0`.
pub fn generalized_hermite(mu: &MuParam, n: usize) -> Poly {
    let (m, eps) = (n / 2, n % 2);
    let alpha = mu.value() - rat(1, 2) + int(eps as i64);
    let lag = laguerre(m, &alpha).expect("admissible mu keeps (mu+1/2+eps)_k nonzero");
    let prefactor = sign(m) * factorial(n) / pochhammer(&(mu.value() + rat(1, 2)), m + eps);
    let mut p = compose_with_square(&lag).scale(&prefactor);
    if eps == 1 {
        p = p.mul_x();
    }
    p
}

/// Expands `p` in the Hermite basis using the closed-form `D` entries.
pub fn to_hermite(p: &Poly) -> HermiteVector {
    let Some(deg) = p.degree() else {
        return HermiteVector::default();
    };
    let facts: Vec<Rational> = (0..=deg).map(factorial).collect();
    let mut out = vec![Rational::zero(); deg + 1];
    for (j, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (k, eps) = (j / 2, j % 2);
        // c * (2k+eps)! / 2^{2k+eps}, shared by every l
        let base = c * &facts[j] / pow2(j);
        for l in 0..=k {
            out[2 * l + eps] += &base / (&facts[2 * l + eps] * &facts[k - l]);
        }
    }
    HermiteVector::new(out)
}

/// Sums `coeffs[m] H_m(x)` back into the monomial basis.
pub fn to_poly(h: &HermiteVector) -> Poly {
    let Some(deg) = h.degree() else {
        return Poly::zero();
    };
    let mut out = vec![Rational::zero(); deg + 1];
    for (m, c) in h.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let hm = hermite(m);
        for (i, hc) in hm.coeffs().iter().enumerate() {
            if !hc.is_zero() {
                out[i] += c * hc;
            }
        }
    }
    Poly::new(out)
}
