//! Exact arithmetic kernel: big rationals, multivariate polynomials over ℚ
//! in {a, s, t}, reduced rational functions, and exact square roots.

pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod rational;

pub use parse::{parse_poly, parse_ratfunc};
pub use poly::{Assignment, Monomial, MultiPolynomial, Var};
pub use ratfunc::RationalFunction;
pub use rational::{height, is_integer, parse_rational, rat, rat_sqrt, ratio, ExactRational};
