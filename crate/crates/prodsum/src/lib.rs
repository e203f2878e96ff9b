//! Exact-arithmetic toolkit for the Diophantine equations `xyz(x+y+z) = a`
//! and `wxyz(w+x+y+z) = a`.
//!
//! Everything here is exact: arbitrary-precision rationals, multivariate
//! polynomials over ℚ in the parameters `a`, `s`, `t`, and reduced rational
//! functions built from them. On top of that kernel sit long-form Weierstrass
//! curves with the full chord-tangent group law, birational maps between
//! genus-1 quartics and cubics, and Nagell-Lutz/Mazur torsion certificates.
//!
//! The [`families`] module generates the classical parametric solution
//! families (Euler's three-variable form, Elkies's form, and a four-variable
//! extension) indexed by multiples `nP` of a base point, and [`search`]
//! brute-forces small positive rational solutions at bounded height,
//! including a bundled reference table for `a < 100`.
//!
//! With the default `parallel` feature the search sweeps distinct values of
//! `a` on a rayon pool; disabling it falls back to the same sequential code
//! path with identical output.

pub mod curve;
pub mod exact;
pub mod families;
pub mod field;
pub mod search;

use std::fmt;

/// Errors shared across the exact kernel, curve operations, family
/// generators, and the search engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by a zero rational, polynomial, or rational function.
    DivisionByZero,
    /// Exact polynomial division was requested but the divisor does not
    /// divide the dividend.
    InexactDivision,
    /// The input has no square root in its ring (ℚ or ℚ[a,s,t]).
    NotASquare,
    /// A square root of a negative rational was requested.
    NegativeInput,
    /// gcd(0, 0) and similar arguments without a defined result.
    Undefined,
    /// A denominator vanished at the evaluation point.
    PoleAtPoint(String),
    /// Evaluation required a variable that was not bound.
    UnboundVariable(char),
    /// Text in the canonical grammar failed to parse.
    Parse(String),
    /// The Weierstrass discriminant vanishes.
    SingularCurve,
    /// The quartic model is singular (repeated root) or has e = 0.
    SingularQuartic,
    /// A point handed to a curve operation does not lie on the curve.
    OffCurveInput,
    /// The point is exceptional for the birational map in use.
    ExceptionalPoint(String),
    /// A symbolic scalar multiple exceeded the configured cap.
    SymbolicDepthExceeded { n: i64, cap: u32 },
    /// recover_C hit a vanishing denominator such as B - 4A = 0.
    DegenerateDenominator(String),
    /// A table row failed to parse as `a,x,y,z` exact rationals.
    MalformedRow { line: usize, reason: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::InexactDivision => write!(f, "inexact polynomial division"),
            Error::NotASquare => write!(f, "not a square"),
            Error::NegativeInput => write!(f, "square root of a negative rational"),
            Error::Undefined => write!(f, "undefined result (zero arguments)"),
            Error::PoleAtPoint(what) => write!(f, "pole at evaluation point: {what}"),
            Error::UnboundVariable(v) => write!(f, "variable '{v}' is not bound"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::SingularCurve => write!(f, "curve has zero discriminant"),
            Error::SingularQuartic => write!(f, "quartic model is singular"),
            Error::OffCurveInput => write!(f, "point does not satisfy the curve equation"),
            Error::ExceptionalPoint(what) => write!(f, "exceptional point for the map: {what}"),
            Error::SymbolicDepthExceeded { n, cap } => {
                write!(f, "scalar multiple {n} exceeds the symbolic cap {cap}")
            }
            Error::DegenerateDenominator(what) => write!(f, "degenerate denominator: {what}"),
            Error::MalformedRow { line, reason } => {
                write!(f, "malformed table row at line {line}: {reason}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

pub use exact::{ExactRational, MultiPolynomial, RationalFunction, Var};
pub use field::ExactField;
