//! Operators acting on polynomials: derivative, reflection, the Dunkl operator,
//! the gauged oscillator operators and the two-step lowering operator `b`.
//!
//! All operators are conjugated by the Gaussian `e^{-x^2/2}`, so they act on the
//! polynomial factor of oscillator wave functions and stay inside `Q[x]`.

use std::fmt;
use std::str::FromStr;

use num::traits::Zero;
use serde::Serialize;

use crate::algebra::{int, rat, MuParam, Rational};
use crate::hermite::{to_hermite, to_poly, HermiteVector};
use crate::poly::Poly;
use crate::Error;

pub fn derivative(p: &Poly) -> Poly {
    p.derivative()
}

pub fn mul_x(p: &Poly) -> Poly {
    p.mul_x()
}

pub fn reflection(p: &Poly) -> Poly {
    p.reflect()
}

/// `D_mu p = p' + mu (p(x) - p(-x)) / x`.
pub fn dunkl(mu: &MuParam, p: &Poly) -> Poly {
    let difference = p - &p.reflect();
    let quotient = difference
        .divide_by_x()
        .expect("p - Rp is odd and has no constant term");
    &p.derivative() + &quotient.scale(mu.value())
}

/// `P = (1 - R)/2`, projection onto the odd part.
pub fn projector(p: &Poly) -> Poly {
    p.parity_split().odd
}

/// Gauged number operator `(-p'' + 2x p') / 2`; `H_n` has eigenvalue `n`.
pub fn number_op(p: &Poly) -> Poly {
    let d1 = p.derivative();
    let d2 = d1.derivative();
    (&d1.mul_x().scale(&int(2)) - &d2).scale(&rat(1, 2))
}

/// Square of the gauged annihilation operator, `p'' / 2`.
pub fn a_squared(p: &Poly) -> Poly {
    p.derivative().derivative().scale(&rat(1, 2))
}

/// Eigenvalue of `N + P + 1` on `H_m`: `m + [m odd] + 1`, never zero.
pub fn shifted_number_eigenvalue(m: usize) -> Rational {
    int((m + m % 2 + 1) as i64)
}

/// `b = (N + P + 1)^{-1} a^2`.
///
/// Applies `a^2` in the monomial basis, then inverts `N + P + 1` spectrally in
/// the Hermite basis, where it is diagonal.
pub fn b_op(p: &Poly) -> Poly {
    let lowered = to_hermite(&a_squared(p));
    let coeffs = lowered
        .coeffs()
        .iter()
        .enumerate()
        .map(|(m, c)| c / shifted_number_eigenvalue(m))
        .collect();
    to_poly(&HermiteVector::new(coeffs))
}

/// [`b_op`] acting directly on Hermite coefficients.
///
/// Uses `a^2 H_m = 2 m (m-1) H_{m-2}`, so `b H_{2n+eps} = 4n H_{2n+eps-2}`.
pub fn b_op_hermite(h: &HermiteVector) -> HermiteVector {
    let coeffs = (2..h.coeffs().len())
        .map(|m| {
            let c = &h.coeffs()[m];
            if c.is_zero() {
                return Rational::zero();
            }
            c * int((2 * m * (m - 1)) as i64) / shifted_number_eigenvalue(m - 2)
        })
        .collect();
    HermiteVector::new(coeffs)
}

/// Dunkl oscillator Hamiltonian `(-D_mu^2 + x^2)/2`, conjugated by the Gaussian:
/// `(-(D_mu - x)^2 q + x^2 q) / 2`.
pub fn gauged_hamiltonian(mu: &MuParam, q: &Poly) -> Poly {
    let shifted = |p: &Poly| &dunkl(mu, p) - &p.mul_x();
    let twice = shifted(&shifted(q));
    let x2q = q.mul_x().mul_x();
    (&x2q - &twice).scale(&rat(1, 2))
}

/// Names of the operators exposed through [`OperatorTag`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OperatorName {
    Derivative,
    MulX,
    Reflection,
    Projector,
    Dunkl,
    NumberOp,
    ASquared,
    BOp,
    GaugedHamiltonian,
}

impl OperatorName {
    pub const ALL: [OperatorName; 9] = [
        OperatorName::Derivative,
        OperatorName::MulX,
        OperatorName::Reflection,
        OperatorName::Projector,
        OperatorName::Dunkl,
        OperatorName::NumberOp,
        OperatorName::ASquared,
        OperatorName::BOp,
        OperatorName::GaugedHamiltonian,
    ];

    pub fn needs_mu(self) -> bool {
        matches!(self, OperatorName::Dunkl | OperatorName::GaugedHamiltonian)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            OperatorName::Derivative => "derivative",
            OperatorName::MulX => "mul-x",
            OperatorName::Reflection => "reflection",
            OperatorName::Projector => "projector",
            OperatorName::Dunkl => "dunkl",
            OperatorName::NumberOp => "number-op",
            OperatorName::ASquared => "a-squared",
            OperatorName::BOp => "b-op",
            OperatorName::GaugedHamiltonian => "gauged-hamiltonian",
        }
    }
}

impl fmt::Display for OperatorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OperatorName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        OperatorName::ALL
            .into_iter()
            .find(|op| op.as_str() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown operator {s:?}")))
    }
}

/// An operator together with its deformation parameter, when it has one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorTag {
    name: OperatorName,
    mu: Option<MuParam>,
}

impl OperatorTag {
    /// `mu` must be present exactly when the operator depends on it.
    pub fn new(name: OperatorName, mu: Option<MuParam>) -> Result<Self, Error> {
        match (name.needs_mu(), mu.is_some()) {
            (true, false) => Err(Error::MissingMu(name.to_string())),
            (false, true) => Err(Error::UnexpectedMu(name.to_string())),
            _ => Ok(OperatorTag { name, mu }),
        }
    }

    pub fn name(&self) -> OperatorName {
        self.name
    }

    pub fn mu(&self) -> Option<&MuParam> {
        self.mu.as_ref()
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        let mu = || self.mu.as_ref().expect("checked at construction");
        match self.name {
            OperatorName::Derivative => derivative(p),
            OperatorName::MulX => mul_x(p),
            OperatorName::Reflection => reflection(p),
            OperatorName::Projector => projector(p),
            OperatorName::Dunkl => dunkl(mu(), p),
            OperatorName::NumberOp => number_op(p),
            OperatorName::ASquared => a_squared(p),
            OperatorName::BOp => b_op(p),
            OperatorName::GaugedHamiltonian => gauged_hamiltonian(mu(), p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::{generalized_hermite, hermite};
    use proptest::prelude::*;

    fn mus() -> Vec<MuParam> {
        [(0, 1), (1, 7), (1, 2), (3, 2), (19, 4), (-1, 3), (-7, 4)]
            .iter()
            .map(|&(p, q)| MuParam::ratio(p, q).unwrap())
            .collect()
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(derivative(&Poly::x_pow(3)), Poly::monomial(2, int(3)));
        assert_eq!(derivative(&Poly::from_ints(&[7])), Poly::zero());
        assert_eq!(derivative(&hermite(2)), hermite(1).scale(&int(4)));
    }

    #[test]
    fn dunkl_examples() {
        for mu in mus() {
            let two_mu = int(2) * mu.value();
            assert_eq!(
                dunkl(&mu, &Poly::x_pow(1)),
                Poly::constant(&two_mu + int(1))
            );
            assert_eq!(dunkl(&mu, &Poly::x_pow(2)), Poly::monomial(1, int(2)));
            // termwise oracle: D x^m = (m + 2 mu [m odd]) x^{m-1}
            for m in 1..=20usize {
                let factor = int(m as i64) + if m % 2 == 1 { two_mu.clone() } else { int(0) };
                assert_eq!(dunkl(&mu, &Poly::x_pow(m)), Poly::monomial(m - 1, factor));
            }
            assert_eq!(dunkl(&mu, &Poly::from_ints(&[5])), Poly::zero());
        }
    }

    #[test]
    fn projector_examples() {
        assert_eq!(projector(&Poly::from_ints(&[0, 0, 1, 1])), Poly::x_pow(3));
        assert_eq!(projector(&Poly::from_ints(&[1, 0, 3])), Poly::zero());
        let p = Poly::from_ints(&[1, 2, 3, 4]);
        let half_diff = (&p - &p.reflect()).scale(&rat(1, 2));
        assert_eq!(projector(&p), half_diff);
    }

    #[test]
    fn number_op_examples() {
        assert_eq!(number_op(&hermite(0)), Poly::zero());
        assert_eq!(number_op(&hermite(1)), hermite(1));
        assert_eq!(number_op(&hermite(4)), hermite(4).scale(&int(4)));
        for n in 0..=40 {
            assert_eq!(number_op(&hermite(n)), hermite(n).scale(&int(n as i64)));
        }
    }

    #[test]
    fn a_squared_examples() {
        assert_eq!(a_squared(&Poly::x_pow(2)), Poly::from_ints(&[1]));
        assert_eq!(a_squared(&hermite(2)), Poly::from_ints(&[4]));
        assert_eq!(a_squared(&Poly::from_ints(&[3, 9])), Poly::zero());
    }

    #[test]
    fn b_op_examples() {
        assert_eq!(b_op(&hermite(2)), Poly::from_ints(&[4]));
        assert_eq!(b_op(&hermite(3)), Poly::from_ints(&[0, 8]));
        assert_eq!(b_op(&hermite(0)), Poly::zero());
        assert_eq!(b_op(&hermite(1)), Poly::zero());
    }

    #[test]
    fn b_op_lowers_by_two() {
        for n in 0..=20 {
            for eps in 0..2 {
                let h = hermite(2 * n + eps);
                let expected = if n == 0 {
                    Poly::zero()
                } else {
                    hermite(2 * (n - 1) + eps).scale(&int(4 * n as i64))
                };
                assert_eq!(b_op(&h), expected);
                assert_eq!(to_poly(&b_op_hermite(&to_hermite(&h))), expected);
                let mut power = h;
                for _ in 0..=n {
                    power = b_op(&power);
                }
                assert!(power.is_zero());
            }
        }
    }

    #[test]
    fn shifted_number_operator_inverts_b() {
        // (N + P + 1) b = a^2 on span{H_2, ..., H_d}
        let shifted = |p: &Poly| &(&number_op(p) + &projector(p)) + p;
        for m in 2..=40 {
            let h = hermite(m);
            assert_eq!(shifted(&b_op(&h)), a_squared(&h), "m = {m}");
        }
        for m in 0..=40 {
            let h = hermite(m);
            assert_eq!(shifted(&h), h.scale(&shifted_number_eigenvalue(m)));
            assert!(!shifted_number_eigenvalue(m).is_zero());
        }
    }

    #[test]
    fn hamiltonian_examples() {
        for mu in mus() {
            let ground = mu.value() + rat(1, 2);
            assert_eq!(
                gauged_hamiltonian(&mu, &Poly::from_ints(&[1])),
                Poly::constant(ground)
            );
        }
        assert_eq!(
            gauged_hamiltonian(&MuParam::zero(), &hermite(2)),
            hermite(2).scale(&rat(5, 2))
        );
        let mu = MuParam::ratio(3, 2).unwrap();
        let h3 = generalized_hermite(&mu, 3);
        assert_eq!(gauged_hamiltonian(&mu, &h3), h3.scale(&int(5)));
    }

    #[test]
    fn hamiltonian_spectrum() {
        for mu in mus() {
            for n in 0..=31 {
                let h = generalized_hermite(&mu, n);
                let energy = int(n as i64) + mu.value() + rat(1, 2);
                assert_eq!(gauged_hamiltonian(&mu, &h), h.scale(&energy));
            }
        }
    }

    #[test]
    fn operator_tags() {
        let mu = MuParam::ratio(1, 3).unwrap();
        assert!(OperatorTag::new(OperatorName::Dunkl, None).is_err());
        assert!(OperatorTag::new(OperatorName::BOp, Some(mu.clone())).is_err());
        let tag = OperatorTag::new(OperatorName::Dunkl, Some(mu.clone())).unwrap();
        assert_eq!(tag.apply(&Poly::x_pow(1)), Poly::constant(rat(5, 3)));
        for name in OperatorName::ALL {
            assert_eq!(name.as_str().parse::<OperatorName>().unwrap(), name);
        }
        assert_eq!("b_op".parse::<OperatorName>().unwrap(), OperatorName::BOp);
        assert!("curl".parse::<OperatorName>().is_err());
    }

    fn poly_strategy() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..=25)
            .prop_map(|cs| Poly::new(cs.into_iter().map(|(p, q)| rat(p, q)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn operators_are_linear(
            p in poly_strategy(),
            q in poly_strategy(),
            a in -6i64..6,
            b in -6i64..6,
            mu_idx in 0usize..7,
        ) {
            let mu = mus()[mu_idx].clone();
            let (a, b) = (int(a), int(b));
            let combo = &p.scale(&a) + &q.scale(&b);
            for name in OperatorName::ALL {
                let tag = OperatorTag::new(name, name.needs_mu().then(|| mu.clone())).unwrap();
                let lhs = tag.apply(&combo);
                let rhs = &tag.apply(&p).scale(&a) + &tag.apply(&q).scale(&b);
                prop_assert_eq!(lhs, rhs, "{}", name);
            }
        }

        #[test]
        fn dunkl_structure(p in poly_strategy(), mu_idx in 0usize..7) {
            let mu = mus()[mu_idx].clone();
            prop_assert_eq!(dunkl(&MuParam::zero(), &p), derivative(&p));
            let split = p.parity_split();
            prop_assert!(projector(&dunkl(&mu, &split.even)).eq(&dunkl(&mu, &split.even)));
            prop_assert!(projector(&dunkl(&mu, &split.odd)).is_zero());
            prop_assert_eq!(projector(&projector(&p)), projector(&p));
        }
    }
}
