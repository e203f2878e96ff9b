//! Parametric solution families of `xyz(x+y+z) = a` and
//! `wxyz(w+x+y+z) = a`.
//!
//! Each scheme fixes a solution form expressing the tuple through unknowns
//! (A, B, C); substituting the form into the equation leaves a polynomial
//! constraint on (A, B, C). Points on an associated elliptic curve supply
//! (A, B) pairs for which C can be recovered exactly, and distinct multiples
//! nP of a base point give distinct family members.

pub mod constraint;
pub mod schemes;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::exact::{parse_ratfunc, Assignment, ExactRational, RationalFunction, Var};
use crate::field::ExactField;
use crate::{Error, Result};

pub use constraint::{ansatz_constraint, recover_c, ConstraintPolynomial};
pub use schemes::{
    elkies_family, elkies_family_capped, euler_family, euler_family_capped, fourvar_family,
    fourvar_family_capped, DEFAULT_SYMBOLIC_CAP,
};

/// The three solution forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    Euler3,
    Elkies3,
    FourVar,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::Euler3 => "euler",
            Scheme::Elkies3 => "elkies",
            Scheme::FourVar => "fourvar",
        }
    }

    /// Names of the solution components.
    pub fn component_names(self) -> &'static [&'static str] {
        match self {
            Scheme::Euler3 | Scheme::Elkies3 => &["x", "y", "z"],
            Scheme::FourVar => &["w", "x", "y", "z"],
        }
    }

    /// Parameters that occur in the generated tuples.
    pub fn variables(self) -> &'static [&'static str] {
        match self {
            Scheme::Euler3 => &["a", "s", "t"],
            Scheme::Elkies3 => &["a", "s"],
            Scheme::FourVar => &["a", "t"],
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "euler" => Ok(Scheme::Euler3),
            "elkies" => Ok(Scheme::Elkies3),
            "fourvar" => Ok(Scheme::FourVar),
            other => Err(Error::Parse(format!("unknown scheme '{other}'"))),
        }
    }
}

/// One multiplicative block of a solution form:
/// `coeff · a^a s^s t^t · A^big_a B^big_b C^big_c` with integer exponents.
#[derive(Debug, Clone)]
pub(crate) struct ComponentTerm {
    pub coeff: ExactRational,
    pub a: i64,
    pub s: i64,
    pub t: i64,
    pub big_a: i64,
    pub big_b: i64,
    pub big_c: i64,
}

impl ComponentTerm {
    pub fn unit() -> Self {
        ComponentTerm {
            coeff: num_traits::One::one(),
            a: 0,
            s: 0,
            t: 0,
            big_a: 0,
            big_b: 0,
            big_c: 0,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        ComponentTerm {
            coeff: &self.coeff * &other.coeff,
            a: self.a + other.a,
            s: self.s + other.s,
            t: self.t + other.t,
            big_a: self.big_a + other.big_a,
            big_b: self.big_b + other.big_b,
            big_c: self.big_c + other.big_c,
        }
    }

    /// Evaluate the block at concrete (A, B, C).
    pub fn apply(
        &self,
        a: &RationalFunction,
        b: &RationalFunction,
        c: &RationalFunction,
    ) -> Result<RationalFunction> {
        let mut out = RationalFunction::constant(self.coeff.clone());
        for (var, exp) in [(Var::A, self.a), (Var::S, self.s), (Var::T, self.t)] {
            if exp != 0 {
                out = &out * &RationalFunction::variable(var).pow_i(exp)?;
            }
        }
        for (value, exp) in [(a, self.big_a), (b, self.big_b), (c, self.big_c)] {
            if exp != 0 {
                out = &out * &value.pow_i(exp)?;
            }
        }
        Ok(out)
    }
}

/// Exponent/coefficient scheme defining a solution form.
#[derive(Debug, Clone, PartialEq)]
pub struct AnsatzConfig {
    pub scheme: Scheme,
    /// The cᵢ, one per component.
    pub coefficients: Vec<ExactRational>,
    /// The sᵢ (all zero for the four-variable form).
    pub s_exponents: Vec<i64>,
    /// The tᵢ.
    pub t_exponents: Vec<i64>,
}

impl AnsatzConfig {
    pub fn default_for(scheme: Scheme) -> Self {
        use crate::exact::{rat, ratio};
        match scheme {
            Scheme::Euler3 => AnsatzConfig {
                scheme,
                coefficients: vec![rat(6), ratio(3, 2), ratio(2, 3)],
                s_exponents: vec![1, 5, -3],
                t_exponents: vec![3, -1, -1],
            },
            Scheme::Elkies3 => AnsatzConfig {
                scheme,
                coefficients: vec![ratio(1, 2), rat(2), ratio(1, 2)],
                s_exponents: vec![-3, -3, 1],
                t_exponents: vec![0, 0, 0],
            },
            Scheme::FourVar => AnsatzConfig {
                scheme,
                coefficients: vec![rat(1), rat(1), rat(1), rat(1)],
                s_exponents: vec![0, 0, 0, 0],
                t_exponents: vec![1, 1, 1, 1],
            },
        }
    }

    /// The multiplicative blocks of each component, in component order.
    ///
    /// euler3:  x = c1·a·s^s1 t^t1·A²/(BC), y = c2·s^s2 t^t2·B²/(AC),
    ///          z = c3·s^s3 t^t3·C/B
    /// elkies3: x = c1·s^s1·A²/C, y = c2·a·s^s2·B²/(AC), z = c3·s^s3·C/B
    /// fourvar: w = c1·a·t^t1/(ABC), x = c2·t^t2·B/A, y = c3·t^t3·A/C,
    ///          z = c4·t^t4·C/B
    pub(crate) fn component_terms(&self) -> Vec<ComponentTerm> {
        let c = &self.coefficients;
        let s = &self.s_exponents;
        let t = &self.t_exponents;
        let make = |i: usize, a: i64, big: [i64; 3]| ComponentTerm {
            coeff: c[i].clone(),
            a,
            s: s[i],
            t: t[i],
            big_a: big[0],
            big_b: big[1],
            big_c: big[2],
        };
        match self.scheme {
            Scheme::Euler3 => vec![
                make(0, 1, [2, -1, -1]),
                make(1, 0, [-1, 2, -1]),
                make(2, 0, [0, -1, 1]),
            ],
            Scheme::Elkies3 => vec![
                make(0, 0, [2, 0, -1]),
                make(1, 1, [-1, 2, -1]),
                make(2, 0, [0, -1, 1]),
            ],
            Scheme::FourVar => vec![
                make(0, 1, [-1, -1, -1]),
                make(1, 0, [-1, 1, 0]),
                make(2, 0, [1, 0, -1]),
                make(3, 0, [0, -1, 1]),
            ],
        }
    }

    /// Assemble the solution tuple from concrete (A, B, C).
    pub(crate) fn assemble(
        &self,
        a: &RationalFunction,
        b: &RationalFunction,
        c: &RationalFunction,
    ) -> Result<Vec<RationalFunction>> {
        self.component_terms()
            .iter()
            .map(|term| term.apply(a, b, c))
            .collect()
    }
}

/// The recovered (A, B, C) behind a solution tuple; B is absent for the
/// four-variable form, where it is specialized to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct IntermediateTuple {
    pub a: RationalFunction,
    pub b: Option<RationalFunction>,
    pub c: RationalFunction,
}

/// A generated member of a solution family.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionTuple {
    pub scheme: Scheme,
    pub n: u32,
    pub components: Vec<RationalFunction>,
    pub intermediates: Option<IntermediateTuple>,
}

impl SolutionTuple {
    /// `{scheme, n, variables, components, verified}`.
    pub fn to_json(&self) -> Value {
        json!({
            "scheme": self.scheme.name(),
            "n": self.n,
            "variables": self.scheme.variables(),
            "components": self
                .components
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>(),
            "verified": verify_solution_identity(self),
        })
    }

    /// Re-parse a tuple serialized by [`SolutionTuple::to_json`].
    pub fn from_json(text: &str) -> Result<SolutionTuple> {
        let doc: Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad JSON: {e}")))?;
        let scheme: Scheme = doc["scheme"]
            .as_str()
            .ok_or_else(|| Error::Parse("missing scheme".into()))?
            .parse()?;
        let n = doc["n"]
            .as_u64()
            .ok_or_else(|| Error::Parse("missing n".into()))? as u32;
        let raw = doc["components"]
            .as_array()
            .ok_or_else(|| Error::Parse("missing components".into()))?;
        let components = raw
            .iter()
            .map(|c| {
                c.as_str()
                    .ok_or_else(|| Error::Parse("component is not a string".into()))
                    .and_then(parse_ratfunc)
            })
            .collect::<Result<Vec<_>>>()?;
        if components.len() != scheme.component_names().len() {
            return Err(Error::Parse(format!(
                "expected {} components, found {}",
                scheme.component_names().len(),
                components.len()
            )));
        }
        Ok(SolutionTuple {
            scheme,
            n,
            components,
            intermediates: None,
        })
    }

    /// The tuple with every component negated (the other square-root branch).
    pub fn negated(&self) -> SolutionTuple {
        SolutionTuple {
            scheme: self.scheme,
            n: self.n,
            components: self.components.iter().map(|c| -c).collect(),
            intermediates: None,
        }
    }
}

/// product(components) · sum(components) == a, identically.
pub fn verify_solution_identity(tuple: &SolutionTuple) -> bool {
    verify_components_identity(&tuple.components)
}

pub fn verify_components_identity(components: &[RationalFunction]) -> bool {
    let product = components
        .iter()
        .fold(RationalFunction::one(), |acc, c| &acc * c);
    let sum = components
        .iter()
        .fold(RationalFunction::zero(), |acc, c| &acc + c);
    &product * &sum == RationalFunction::variable(Var::A)
}

/// A candidate (p, q, r), each a rational function of a.
#[derive(Debug, Clone, PartialEq)]
pub struct ParametrizationGuess {
    pub p: RationalFunction,
    pub q: RationalFunction,
    pub r: RationalFunction,
}

/// Check that (A, V) = (s⁴+p, s⁶+qs⁴+rs²) satisfies
/// V² = A³ + 4aA² - 32s⁴aA + 64s⁸a identically.
pub fn verify_elkies_parametrization(guess: &ParametrizationGuess) -> bool {
    let s = RationalFunction::variable(Var::S);
    let a = RationalFunction::variable(Var::A);
    let s2 = s.pow_i(2).unwrap();
    let s4 = s.pow_i(4).unwrap();
    let s6 = s.pow_i(6).unwrap();
    let s8 = s.pow_i(8).unwrap();
    let big_a = &s4 + &guess.p;
    let v = &(&s6 + &(&guess.q * &s4)) + &(&guess.r * &s2);
    let rhs = &(&(&big_a.pow_i(3).unwrap()
        + &(&(&RationalFunction::from_integer(4) * &a) * &big_a.square()))
        - &(&(&(&RationalFunction::from_integer(32) * &s4) * &a) * &big_a))
        + &(&(&RationalFunction::from_integer(64) * &s8) * &a);
    v.square() == rhs
}

/// Evaluate every component at a point, naming the vanishing factor on a
/// pole. The defining equation is re-checked numerically on success.
pub fn specialize(tuple: &SolutionTuple, at: &Assignment) -> Result<Vec<ExactRational>> {
    let names = tuple.scheme.component_names();
    let mut values = Vec::with_capacity(tuple.components.len());
    for (component, name) in tuple.components.iter().zip(names) {
        match component.eval(at) {
            Ok(v) => values.push(v),
            Err(Error::PoleAtPoint(_)) => {
                return Err(Error::PoleAtPoint(pole_detail(tuple, name, at)));
            }
            Err(e) => return Err(e),
        }
    }
    let product: ExactRational = values.iter().product();
    let sum: ExactRational = values.iter().sum();
    let a_value = at
        .get(Var::A)
        .cloned()
        .ok_or(Error::UnboundVariable('a'))?;
    debug_assert_eq!(&product * &sum, a_value);
    if &product * &sum != a_value {
        return Err(Error::Undefined);
    }
    Ok(values)
}

/// Describe which intermediate factor vanished at the point, if known.
fn pole_detail(tuple: &SolutionTuple, component: &str, at: &Assignment) -> String {
    if let Some(inter) = &tuple.intermediates {
        let factors = [
            ("A", Some(&inter.a)),
            ("B", inter.b.as_ref()),
            ("C", Some(&inter.c)),
        ];
        for (label, value) in factors {
            let Some(value) = value else { continue };
            if let Ok(v) = value.eval(at) {
                if num_traits::Zero::is_zero(&v) {
                    return format!(
                        "component {component}: factor {label} = {value} vanishes at the point"
                    );
                }
            }
        }
    }
    format!("component {component}: denominator vanishes at the point")
}

/// Parse `k=v,...` numeric bindings (variables a, s, t).
pub fn parse_bindings(text: &str) -> Result<Assignment> {
    let mut at = Assignment::default();
    for piece in text.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let (key, value) = piece
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("binding '{piece}' is not k=v")))?;
        let key = key.trim();
        let var = match key {
            "a" => Var::A,
            "s" => Var::S,
            "t" => Var::T,
            other => return Err(Error::Parse(format!("unknown variable '{other}'"))),
        };
        at.set(var, crate::exact::parse_rational(value)?);
    }
    Ok(at)
}
