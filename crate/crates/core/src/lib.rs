//! Exact one-dimensional Dunkl calculus.
//!
//! The Dunkl operator `D_mu = d/dx + (mu/x)(1 - R)`, with `R f(x) = f(-x)`, deforms the
//! ordinary derivative. This crate provides, over exact rationals:
//!
//! * polynomial algebra with reflection and parity splitting ([`poly`]),
//! * Pochhammer symbols and terminating hypergeometric sums ([`algebra`]),
//! * classical and generalized Hermite polynomials and the monomial/Hermite
//!   change of basis ([`hermite`]),
//! * the gauged oscillator operators, including the lowering operator
//!   `b = (N + P + 1)^{-1} a^2` ([`ops`]),
//! * the intertwining operator `V_mu` with `D_mu V_mu = V_mu d/dx`, in three exact
//!   realizations ([`intertwiner`]),
//!
//! and a floating-point Gauss-Jacobi evaluation of its integral representation
//! ([`quadrature`]).

pub mod algebra;
pub mod hermite;
pub mod intertwiner;
pub mod ops;
pub mod poly;
pub mod quadrature;

pub use algebra::{MuParam, Rational};
pub use hermite::HermiteVector;
pub use intertwiner::Realization;
pub use poly::{ParityVector, Poly};
pub use quadrature::QuadRule;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("mu = {0} is a pole of 1/(mu + 1/2)_k")]
    PoleParameter(String),
    #[error("cannot divide by x: constant term {0} is nonzero")]
    NonPolynomialDivision(String),
    #[error("upper parameter {0} is not a non-positive integer; series does not terminate")]
    NotTerminating(String),
    #[error("lower parameter {0} hits a pole before the series terminates")]
    SeriesPole(String),
    #[error("Laguerre parameter alpha = {0} makes (alpha + 1)_k vanish")]
    LaguerrePole(String),
    #[error("the integral realization is floating point; use the quadrature module")]
    InexactRealization,
    #[error("operator {0} requires mu")]
    MissingMu(String),
    #[error("operator {0} does not take mu")]
    UnexpectedMu(String),
    #[error("the integral representation needs mu > 0, got {0}")]
    QuadratureDomain(f64),
    #[error("a quadrature rule needs at least one node")]
    NoNodes,
    #[error("eigen-solver did not converge for {0} nodes")]
    EigenNonConvergence(usize),
    #[error("parse error: {0}")]
    Parse(String),
}
