//! Constraint polynomials in the unknowns A, B, C with coefficients in
//! ℚ[a, s, t], derived by substituting a solution form into the target
//! equation and clearing denominators.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{AnsatzConfig, ComponentTerm};
use crate::exact::{ExactRational, Monomial, MultiPolynomial, RationalFunction};
use crate::field::ExactField;
use crate::{Error, Result};

/// Exponents of (A, B, C); the derived array order is lex with A > B > C.
type UnknownKey = [u32; 3];

/// Polynomial in A, B, C over ℚ[a, s, t].
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ConstraintPolynomial {
    terms: BTreeMap<UnknownKey, MultiPolynomial>,
}

impl ConstraintPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term([0, 0, 0], MultiPolynomial::one())
    }

    pub fn term(key: UnknownKey, coeff: MultiPolynomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(key, coeff);
        }
        ConstraintPolynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, key: UnknownKey, coeff: MultiPolynomial) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        ConstraintPolynomial {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                let key = [k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2]];
                out.insert(key, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        ConstraintPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, p)| (*k, p.scale(c)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
        }
    }

    /// Divide out the common polynomial and rational content and make the
    /// leading coefficient positive.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut gcd: Option<MultiPolynomial> = None;
        for c in self.terms.values() {
            gcd = Some(match gcd {
                None => c.primitive_normal(),
                Some(g) if g.is_one() => g,
                Some(g) => MultiPolynomial::gcd(&g, c).expect("nonzero"),
            });
        }
        let gcd = gcd.unwrap();
        let mut out = ConstraintPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k, c.div_exact(&gcd).expect("content divides")))
                .collect(),
        };
        // Strip the remaining rational content.
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for poly in out.terms.values() {
            for (_, c) in poly.terms() {
                num_gcd = num_gcd.gcd(c.numer());
                den_lcm = den_lcm.lcm(c.denom());
            }
        }
        let mut content = ExactRational::new(num_gcd, den_lcm);
        let leading = out.terms.iter().next_back().unwrap().1;
        if leading.leading_coefficient().is_negative() {
            content = -content;
        }
        let inv = ExactRational::one() / content;
        for poly in out.terms.values_mut() {
            *poly = poly.scale(&inv);
        }
        out
    }

    /// Coefficients as a quadratic in C: `[C⁰, C¹, C²]`, each free of C.
    /// `None` when the degree in C exceeds 2.
    pub fn c_quadratic(&self) -> Option<[ConstraintPolynomial; 3]> {
        let mut out = [Self::zero(), Self::zero(), Self::zero()];
        for (k, c) in &self.terms {
            let deg_c = k[2] as usize;
            if deg_c > 2 {
                return None;
            }
            out[deg_c].insert([k[0], k[1], 0], c.clone());
        }
        Some(out)
    }

    /// Replace the unknown B by another constraint polynomial.
    pub fn substitute_b(&self, value: &Self) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            let base = Self::term([k[0], 0, k[2]], c.clone());
            out = out.add(&base.mul(&value.pow(k[1])));
        }
        out
    }

    /// Coefficient vector in A when B and C are absent (index = power of A).
    pub fn univariate_in_a(&self) -> Option<Vec<MultiPolynomial>> {
        let deg = self.terms.keys().map(|k| k[0]).max().unwrap_or(0) as usize;
        let mut out = vec![MultiPolynomial::zero(); deg + 1];
        for (k, c) in &self.terms {
            if k[1] != 0 || k[2] != 0 {
                return None;
            }
            out[k[0] as usize] = &out[k[0] as usize] + c;
        }
        Some(out)
    }

    /// Evaluate at concrete rational-function values of (A, B, C).
    pub fn substitute(
        &self,
        a: &RationalFunction,
        b: &RationalFunction,
        c: &RationalFunction,
    ) -> RationalFunction {
        let mut total = RationalFunction::zero();
        for (k, coeff) in &self.terms {
            let mut term = RationalFunction::from_poly(coeff.clone());
            term = &term * &a.pow_i(k[0] as i64).expect("nonnegative power");
            term = &term * &b.pow_i(k[1] as i64).expect("nonnegative power");
            term = &term * &c.pow_i(k[2] as i64).expect("nonnegative power");
            total = &total + &term;
        }
        total
    }
}

impl fmt::Display for ConstraintPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ['A', 'B', 'C'];
        for (idx, (k, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                write!(f, "+")?;
            }
            write!(f, "({})", c)?;
            for (i, name) in names.iter().enumerate() {
                match k[i] {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    e => write!(f, "*{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// Substitute the solution form into the target equation, clear denominators
/// and content, and return the residual constraint whose vanishing makes the
/// equation hold with value `a`.
pub fn ansatz_constraint(config: &AnsatzConfig) -> ConstraintPolynomial {
    let components = config.component_terms();
    let product = components
        .iter()
        .fold(ComponentTerm::unit(), |acc, c| acc.mul(c));
    let mut expr: Vec<ComponentTerm> = components.iter().map(|c| product.mul(c)).collect();
    expr.push(ComponentTerm {
        coeff: -ExactRational::one(),
        a: 1,
        s: 0,
        t: 0,
        big_a: 0,
        big_b: 0,
        big_c: 0,
    });

    // Clear every negative exponent across the parameter monomial and the
    // unknowns so the result is an honest polynomial.
    let mut mins = [0i64; 6];
    for term in &expr {
        let exps = [term.a, term.s, term.t, term.big_a, term.big_b, term.big_c];
        for (m, e) in mins.iter_mut().zip(exps) {
            *m = (*m).min(e);
        }
    }

    let mut out = ConstraintPolynomial::zero();
    for term in &expr {
        let mono = Monomial {
            a: (term.a - mins[0]) as u32,
            s: (term.s - mins[1]) as u32,
            t: (term.t - mins[2]) as u32,
        };
        let key = [
            (term.big_a - mins[3]) as u32,
            (term.big_b - mins[4]) as u32,
            (term.big_c - mins[5]) as u32,
        ];
        out.insert(key, MultiPolynomial::term(mono, term.coeff.clone()));
    }
    out.normalized()
}

/// Solve the constraint for C at given values of A and B.
///
/// When the constraint is linear in C², this is the exact square root of
/// -γ/α; otherwise the quadratic formula applies with an exact square root
/// of the discriminant. The square-root branch is fixed by the canonical
/// positive-leading-coefficient convention of [`RationalFunction::sqrt`],
/// and the quadratic case takes the `-β + w` branch, which is the branch
/// that reproduces the classical four-variable closed form.
pub fn recover_c(
    config: &AnsatzConfig,
    a: &RationalFunction,
    b: &RationalFunction,
) -> Result<RationalFunction> {
    let constraint = ansatz_constraint(config);
    let [gamma, beta, alpha] = constraint
        .c_quadratic()
        .expect("solution-form constraints are quadratic in C");
    let c_dummy = RationalFunction::zero();
    let alpha = alpha.substitute(a, b, &c_dummy);
    let beta = beta.substitute(a, b, &c_dummy);
    let gamma = gamma.substitute(a, b, &c_dummy);
    if alpha.is_zero() {
        return Err(Error::DegenerateDenominator(
            "the C^2 coefficient vanishes at (A, B)".into(),
        ));
    }
    if beta.is_zero() {
        let c_squared = &(-&gamma) / &alpha;
        return c_squared.sqrt();
    }
    let four = RationalFunction::from_integer(4);
    let disc = &beta.square() - &(&(&four * &alpha) * &gamma);
    let w = disc.sqrt()?;
    let two_alpha = &RationalFunction::from_integer(2) * &alpha;
    Ok(&(&(-&beta) + &w) / &two_alpha)
}
