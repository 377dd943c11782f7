//! Exact rational scalars, Pochhammer symbols and terminating hypergeometric sums.
//!
//! Everything here is exact over `BigRational`; no floating point and no Gamma
//! function is involved anywhere in this module.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::Error;

/// Arbitrary-precision exact rational, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds `num/den` as an exact rational.
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, `"p"` or a plain decimal such as `"-0.25"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !whole_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{whole_digits}{frac}");
        let mut numer = BigInt::from_str(&digits).map_err(|_| bad())?;
        if negative {
            numer = -numer;
        }
        let denom = num::pow(BigInt::from(10u32), frac.len());
        return Ok(Rational::new(numer, denom));
    }
    BigInt::from_str(s)
        .map(Rational::from_integer)
        .map_err(|_| bad())
}

/// Rising factorial `a (a+1) ... (a+n-1)`, equal to 1 for `n = 0`.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    // a = p/q, so (a)_n = prod_k (p + k q) / q^n; reduce once at the end.
    let (p, q) = (a.numer(), a.denom());
    let mut numer = BigInt::one();
    let mut factor = p.clone();
    for _ in 0..n {
        if factor.is_zero() {
            return Rational::zero();
        }
        numer *= &factor;
        factor += q;
    }
    Rational::new(numer, num::pow(q.clone(), n))
}

/// `n!` as an exact integer.
pub fn factorial_int(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `n!` as an exact rational.
pub fn factorial(n: usize) -> Rational {
    Rational::from_integer(factorial_int(n))
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `2^e` as a rational.
pub fn pow2(e: usize) -> Rational {
    Rational::from_integer(BigInt::one() << e)
}

/// `(-1)^e` as a rational.
pub fn sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Deformation parameter of the Dunkl operator.
///
/// Any rational is admitted except the half-integers `-1/2, -3/2, ...`, at which
/// `(mu + 1/2)_k` vanishes and the intertwiner is undefined.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MuParam(Rational);

impl MuParam {
    pub fn new(value: Rational) -> Result<Self, Error> {
        let shifted = &value + rat(1, 2);
        if shifted.is_integer() && !shifted.is_positive() {
            return Err(Error::PoleParameter(value.to_string()));
        }
        Ok(MuParam(value))
    }

    /// Shorthand for `MuParam::new(rat(num, den))`.
    pub fn ratio(num: i64, den: i64) -> Result<Self, Error> {
        Self::new(rat(num, den))
    }

    pub fn zero() -> Self {
        MuParam(Rational::zero())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Nearest `f64`, used only at the boundary with the quadrature code.
    pub fn to_f64(&self) -> f64 {
        num::ToPrimitive::to_f64(&self.0).unwrap_or(f64::NAN)
    }
}

impl fmt::Display for MuParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for MuParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MuParam::new(parse_rational(s)?)
    }
}

/// `sum_{n=0}^{m} (-m)_n (-n)_k / n!`, term by term.
///
/// The closed form is `m! * delta(m, k)`.
pub fn lemma1_sum(m: usize, k: usize) -> Rational {
    let neg_m = -int(m as i64);
    (0..=m)
        .map(|n| {
            let neg_n = -int(n as i64);
            pochhammer(&neg_m, n) * pochhammer(&neg_n, k) / factorial(n)
        })
        .sum()
}

/// Terminating `2F1(a, b; c; 1)` with `a = -N`, summed term by term.
///
/// Fails if `a` is not a non-positive integer, or if `c` is one of
/// `0, -1, ..., -(N-1)` so that a denominator vanishes before the series stops.
pub fn gauss_2f1_terminating(a: &Rational, b: &Rational, c: &Rational) -> Result<Rational, Error> {
    if !a.is_integer() || a.is_positive() {
        return Err(Error::NotTerminating(a.to_string()));
    }
    let terms = num::ToPrimitive::to_usize(&(-a).to_integer())
        .ok_or_else(|| Error::NotTerminating(a.to_string()))?;
    if c.is_integer() && !c.is_positive() {
        let pole = num::ToPrimitive::to_usize(&(-c).to_integer()).unwrap_or(usize::MAX);
        if pole < terms {
            return Err(Error::SeriesPole(c.to_string()));
        }
    }

    // Each term is the previous one times (a+s)(b+s) / ((c+s)(s+1)). Keep the term
    // and the partial sum over a shared unreduced denominator and reduce once.
    let (a_int, (bn, bd), (cn, cd)) = (
        a.to_integer(),
        (b.numer(), b.denom()),
        (c.numer(), c.denom()),
    );
    let mut term_num = BigInt::one();
    let mut denom = BigInt::one();
    let mut sum_num = BigInt::one();
    for s in 0..terms {
        let s_int = BigInt::from(s);
        let step_num = (&a_int + &s_int) * (bn + &s_int * bd) * cd;
        let step_den = (cn + &s_int * cd) * bd * (s_int + 1);
        term_num *= step_num;
        sum_num = sum_num * &step_den + &term_num;
        denom *= step_den;
    }
    Ok(Rational::new(sum_num, denom))
}

/// `(1/2)_{j} / (mu + 1/2)_{j}`, the multiplier of `x^{2n+eps}` under the intertwiner when `j = n + eps`.
pub fn half_ratio(mu: &MuParam, j: usize) -> Rational {
    let half = rat(1, 2);
    pochhammer(&half, j) / pochhammer(&(mu.value() + &half), j)
}

/// Exact check of the Gauss-sum identity
/// `(1/2)_{k+eps}/(mu+1/2)_{k+eps} = (1/2)_{n+eps}/(mu+1/2)_{n+eps} * 2F1(k-n, mu; -n-eps+1/2; 1)`.
pub fn lemma2_check(n: usize, k: usize, eps: usize, mu: &MuParam) -> bool {
    debug_assert!(k <= n && eps <= 1);
    let lhs = half_ratio(mu, k + eps);
    let a = int(k as i64) - int(n as i64);
    let c = rat(1, 2) - int((n + eps) as i64);
    // c is a half-integer, never a pole.
    let series = gauss_2f1_terminating(&a, mu.value(), &c).expect("half-integer lower parameter");
    let rhs = half_ratio(mu, n + eps) * series;
    lhs == rhs
}

/// Exact check of `(2n-2l+eps)! (-n-eps+1/2)_l = (-1)^l (2n+eps)! (n-l)! / (2^{2l} n!)`.
pub fn lemma3_check(n: usize, l: usize, eps: usize) -> bool {
    debug_assert!(l <= n && eps <= 1);
    let lhs = factorial(2 * n - 2 * l + eps) * pochhammer(&(rat(1, 2) - int((n + eps) as i64)), l);
    let rhs = sign(l) * factorial(2 * n + eps) * factorial(n - l) / (pow2(2 * l) * factorial(n));
    lhs == rhs
}
