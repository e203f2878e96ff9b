//! Multivariate polynomials over ℚ in the three parameters `a`, `s`, `t`.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vector under the fixed
//! monomial order (lexicographic with a > s > t), with no stored zero
//! coefficients, so structural equality is canonical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{rat_sqrt, ExactRational};
use crate::{Error, Result};

/// One of the three polynomial variables, ordered a > s > t.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A,
    S,
    T,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::A, Var::S, Var::T];

    pub fn symbol(self) -> char {
        match self {
            Var::A => 'a',
            Var::S => 's',
            Var::T => 't',
        }
    }

    pub fn from_symbol(c: char) -> Option<Var> {
        match c {
            'a' => Some(Var::A),
            's' => Some(Var::S),
            't' => Some(Var::T),
            _ => None,
        }
    }
}

/// Exponent vector (e_a, e_s, e_t). The derived `Ord` is exactly the fixed
/// lexicographic monomial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub a: u32,
    pub s: u32,
    pub t: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, s: 0, t: 0 };

    pub fn var(v: Var, exp: u32) -> Monomial {
        let mut m = Monomial::ONE;
        *m.get_mut(v) = exp;
        m
    }

    pub fn get(&self, v: Var) -> u32 {
        match v {
            Var::A => self.a,
            Var::S => self.s,
            Var::T => self.t,
        }
    }

    fn get_mut(&mut self, v: Var) -> &mut u32 {
        match v {
            Var::A => &mut self.a,
            Var::S => &mut self.s,
            Var::T => &mut self.t,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            a: self.a + other.a,
            s: self.s + other.s,
            t: self.t + other.t,
        }
    }

    /// Componentwise division; `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if self.a >= other.a && self.s >= other.s && self.t >= other.t {
            Some(Monomial {
                a: self.a - other.a,
                s: self.s - other.s,
                t: self.t - other.t,
            })
        } else {
            None
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            a: self.a.min(other.a),
            s: self.s.min(other.s),
            t: self.t.min(other.t),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }
}

/// Sparse multivariate polynomial over ℚ in {a, s, t}.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPolynomial {
    terms: BTreeMap<Monomial, ExactRational>,
}

impl MultiPolynomial {
    pub fn zero() -> Self {
        MultiPolynomial::default()
    }

    pub fn one() -> Self {
        MultiPolynomial::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::ONE, c);
        }
        MultiPolynomial { terms }
    }

    pub fn from_integer(n: i64) -> Self {
        MultiPolynomial::constant(ExactRational::from_integer(BigInt::from(n)))
    }

    pub fn variable(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), ExactRational::one())
    }

    /// Single term `c * a^e_a s^e_s t^e_t`.
    pub fn term(m: Monomial, c: ExactRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPolynomial { terms }
    }

    /// `c * v^exp`.
    pub fn var_power(v: Var, exp: u32) -> Self {
        Self::term(Monomial::var(v, exp), ExactRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map_or(false, |c| c.is_one())
    }

    /// The constant value when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<ExactRational> {
        if self.is_zero() {
            Some(ExactRational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactRational)> {
        self.terms.iter()
    }

    /// Leading (monomial, coefficient) under the fixed order.
    pub fn leading_term(&self) -> Option<(&Monomial, &ExactRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> ExactRational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(ExactRational::zero)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.get(v)).max().unwrap_or(0)
    }

    /// Total degree of the leading monomial; 0 for constants.
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.a + m.s + m.t)
            .max()
            .unwrap_or(0)
    }

    /// Variables that actually occur, highest first.
    pub fn vars_present(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.terms.keys().any(|m| m.get(v) > 0))
            .collect()
    }

    fn insert_term(&mut self, m: Monomial, c: ExactRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (*m, v * c))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(mm, v)| (mm.mul(m), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division: returns `q` with `q * rhs == self`.
    pub fn div_exact(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (lm, lc) = rhs.leading_term().map(|(m, c)| (*m, c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quo = Self::zero();
        while let Some((rm, rc)) = rem.leading_term().map(|(m, c)| (*m, c.clone())) {
            let qm = rm.checked_div(&lm).ok_or(Error::InexactDivision)?;
            let qc = rc / &lc;
            rem = &rem - &rhs.mul_term(&qm, &qc);
            quo.insert_term(qm, qc);
        }
        Ok(quo)
    }

    /// Rational content: positive scalar `c` with `self = c * primitive`,
    /// where `primitive` has coprime integer coefficients. Zero for the zero
    /// polynomial.
    fn rational_content(&self) -> ExactRational {
        if self.is_zero() {
            return ExactRational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        ExactRational::new(num_gcd, den_lcm)
    }

    /// Integer-primitive associate with positive leading coefficient, plus
    /// the signed scalar `c` such that `self = c * result`.
    pub fn primitive_with_scale(&self) -> (Self, ExactRational) {
        if self.is_zero() {
            return (Self::zero(), ExactRational::zero());
        }
        let mut content = self.rational_content();
        if self.leading_coefficient().is_negative() {
            content = -content;
        }
        let inv = ExactRational::one() / &content;
        (self.scale(&inv), content)
    }

    /// Integer-primitive associate with positive leading coefficient.
    pub fn primitive_normal(&self) -> Self {
        self.primitive_with_scale().0
    }

    /// Coefficients of `self` viewed as a univariate in `v`, index = power.
    /// The coefficient polynomials do not involve `v`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPolynomial> {
        let deg = self.degree_in(v) as usize;
        let mut out = vec![MultiPolynomial::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.get(v) as usize;
            let mut rest = *m;
            *rest.get_mut(v) = 0;
            out[e].insert_term(rest, c.clone());
        }
        out
    }

    /// Rebuild from univariate coefficients in `v`.
    pub fn from_coefficients_in(v: Var, coeffs: &[MultiPolynomial]) -> Self {
        let mut out = Self::zero();
        for (e, c) in coeffs.iter().enumerate() {
            out = &out + &c.mul_term(&Monomial::var(v, e as u32), &ExactRational::one());
        }
        out
    }

    /// gcd of all monomials: the largest monomial dividing every term.
    fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => *m,
            None => return Monomial::ONE,
        };
        it.fold(first, |acc, m| acc.gcd(m))
    }

    fn div_monomial(&self, m: &Monomial) -> Self {
        MultiPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| (mm.checked_div(m).expect("monomial content divides"), c.clone()))
                .collect(),
        }
    }

    /// Polynomial gcd, normalized integer-primitive with positive leading
    /// coefficient. Errors with `Undefined` when both inputs are zero.
    pub fn gcd(p: &Self, q: &Self) -> Result<Self> {
        match (p.is_zero(), q.is_zero()) {
            (true, true) => Err(Error::Undefined),
            (true, false) => Ok(q.primitive_normal()),
            (false, true) => Ok(p.primitive_normal()),
            (false, false) => Ok(gcd_nonzero(&p.primitive_normal(), &q.primitive_normal())),
        }
    }

    /// Exact square root with positive leading coefficient, or `NotASquare`.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let vars = self.vars_present();
        let Some(&v) = vars.first() else {
            let c = self.as_constant().unwrap();
            let r = rat_sqrt(&c).map_err(|_| Error::NotASquare)?;
            return Ok(Self::constant(r));
        };
        let coeffs = self.coefficients_in(v);
        let deg = coeffs.len() - 1;
        if deg % 2 != 0 {
            return Err(Error::NotASquare);
        }
        let half = deg / 2;
        // Undetermined coefficients from the top: r = sum d_k v^k with
        // d_half = sqrt(lead), then each next d_k from one exact division.
        let mut d = vec![MultiPolynomial::zero(); half + 1];
        d[half] = coeffs[deg].sqrt()?;
        let two_lead = d[half].scale(&ExactRational::from_integer(BigInt::from(2)));
        for k in (0..half).rev() {
            let i = k + half;
            let mut known = coeffs[i].clone();
            let mut j = k + 1;
            while j <= i - j {
                let j2 = i - j;
                if j2 >= half {
                    j += 1;
                    continue;
                }
                let prod = &d[j] * &d[j2];
                known = if j == j2 {
                    &known - &prod
                } else {
                    &known - &prod.scale(&ExactRational::from_integer(BigInt::from(2)))
                };
                j += 1;
            }
            d[k] = known
                .div_exact(&two_lead)
                .map_err(|_| Error::NotASquare)?;
        }
        let root = Self::from_coefficients_in(v, &d);
        if &(&root * &root) == self {
            Ok(root)
        } else {
            Err(Error::NotASquare)
        }
    }

    /// Evaluate at a (possibly partial) assignment. Every variable that
    /// actually occurs must be bound.
    pub fn eval(&self, at: &Assignment) -> Result<ExactRational> {
        let mut total = ExactRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for v in Var::ALL {
                let e = m.get(v);
                if e == 0 {
                    continue;
                }
                let val = at.get(v).ok_or(Error::UnboundVariable(v.symbol()))?;
                term *= pow_rational(val, e);
            }
            total += term;
        }
        Ok(total)
    }
}

fn pow_rational(base: &ExactRational, exp: u32) -> ExactRational {
    let mut acc = ExactRational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// gcd of two nonzero integer-primitive polynomials.
fn gcd_nonzero(p: &MultiPolynomial, q: &MultiPolynomial) -> MultiPolynomial {
    if p == q {
        return p.clone();
    }
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    let mg = mp.gcd(&mq);
    let p = p.div_monomial(&mp);
    let q = q.div_monomial(&mq);

    // With monomial content stripped, shared exponent lattices can be
    // compressed away: if every exponent of v in both polynomials is a
    // multiple of k, the gcd lives in the subring generated by v^k.
    let strides = exponent_strides(&p, &q);
    let p = p.compress_exponents(&strides);
    let q = q.compress_exponents(&strides);

    let core = gcd_compressed(&p, &q);
    core.expand_exponents(&strides)
        .mul_term(&mg, &ExactRational::one())
        .primitive_normal()
}

/// gcd after monomial stripping and lattice compression; tries the heuristic
/// evaluation gcd first and falls back to the subresultant PRS.
fn gcd_compressed(p: &MultiPolynomial, q: &MultiPolynomial) -> MultiPolynomial {
    let mut vars = p.vars_present();
    for v in q.vars_present() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    if vars.is_empty() {
        // Both constants after stripping monomials: primitive ⇒ gcd 1.
        return MultiPolynomial::one();
    }
    if let Some(g) = heuristic_gcd(p, q) {
        return g;
    }
    // Main variable of smallest degree keeps the remainder sequence short.
    let v = *vars
        .iter()
        .min_by_key(|&&v| p.degree_in(v).max(q.degree_in(v)))
        .unwrap();
    let (cp, pp) = content_and_primitive(p, v);
    let (cq, pq) = content_and_primitive(q, v);
    let content_gcd = gcd_nonzero(&cp, &cq);
    let prs = subresultant_prs_gcd(pp, pq, v);
    &content_gcd * &prs
}

/// Per-variable exponent gcds across both polynomials (0 where absent).
fn exponent_strides(p: &MultiPolynomial, q: &MultiPolynomial) -> [u32; 3] {
    let mut strides = [0u32; 3];
    for poly in [p, q] {
        for (m, _) in poly.terms() {
            for (i, v) in Var::ALL.into_iter().enumerate() {
                strides[i] = strides[i].gcd(&m.get(v));
            }
        }
    }
    strides
}

impl MultiPolynomial {
    fn map_exponents(&self, f: impl Fn(Var, u32) -> u32) -> Self {
        MultiPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut out = Monomial::ONE;
                    for v in Var::ALL {
                        *out.get_mut(v) = f(v, m.get(v));
                    }
                    (out, c.clone())
                })
                .collect(),
        }
    }

    fn compress_exponents(&self, strides: &[u32; 3]) -> Self {
        if strides.iter().all(|&s| s <= 1) {
            return self.clone();
        }
        self.map_exponents(|v, e| {
            let s = strides[v as usize];
            if s > 1 {
                e / s
            } else {
                e
            }
        })
    }

    fn expand_exponents(&self, strides: &[u32; 3]) -> Self {
        if strides.iter().all(|&s| s <= 1) {
            return self.clone();
        }
        self.map_exponents(|v, e| {
            let s = strides[v as usize];
            if s > 1 {
                e * s
            } else {
                e
            }
        })
    }

    /// Largest coefficient magnitude (inputs are integer polynomials here).
    fn max_coefficient_abs(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.numer().abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Substitute an integer for one variable.
    fn eval_var_int(&self, v: Var, value: &BigInt) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.get(v);
            let mut rest = *m;
            *rest.get_mut(v) = 0;
            let scaled = c * ExactRational::from_integer(value.pow(e));
            out.insert_term(rest, scaled);
        }
        out
    }
}

/// Heuristic evaluation gcd (GCDHEU): evaluate one variable at a large
/// integer, recurse, and lift the result back xi-adically. Sound because
/// every candidate is verified by exact division; `None` falls back to the
/// remainder-sequence path.
fn heuristic_gcd(p: &MultiPolynomial, q: &MultiPolynomial) -> Option<MultiPolynomial> {
    let vars = {
        let mut vars = p.vars_present();
        for v in q.vars_present() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        vars
    };
    let Some(&v) = vars.first() else {
        let a = p.as_constant().unwrap();
        let b = q.as_constant().unwrap();
        let g = a.numer().gcd(b.numer());
        return Some(MultiPolynomial::constant(ExactRational::from_integer(g)));
    };

    let height = p.max_coefficient_abs().min(q.max_coefficient_abs());
    let mut xi: BigInt = BigInt::from(2) * height + BigInt::from(29);
    for _ in 0..6 {
        let pe = p.eval_var_int(v, &xi);
        let qe = q.eval_var_int(v, &xi);
        if pe.is_zero() || qe.is_zero() {
            xi = &xi * BigInt::from(2) + BigInt::one();
            continue;
        }
        if let Some(ge) = heuristic_gcd(&pe, &qe) {
            if let Some(candidate) = lift_xi_adic(&ge, v, &xi) {
                let candidate = candidate.primitive_normal();
                if p.div_exact(&candidate).is_ok() && q.div_exact(&candidate).is_ok() {
                    return Some(candidate);
                }
            }
        }
        // Growth factor keeps successive points unrelated.
        xi = &xi * BigInt::from(73794) / BigInt::from(27011) + BigInt::one();
    }
    None
}

/// Reconstruct a polynomial in `v` from its value at `xi` using balanced
/// xi-adic digits.
fn lift_xi_adic(value: &MultiPolynomial, v: Var, xi: &BigInt) -> Option<MultiPolynomial> {
    let mut rest = value.clone();
    let mut out = MultiPolynomial::zero();
    let half = xi / BigInt::from(2);
    let mut power = 0u32;
    while !rest.is_zero() {
        if power > 10_000 {
            return None;
        }
        // Balanced remainder of every coefficient modulo xi.
        let mut digit = MultiPolynomial::zero();
        for (m, c) in rest.terms() {
            debug_assert!(c.denom().is_one());
            let mut r = c.numer().mod_floor(xi);
            if r > half {
                r -= xi;
            }
            if !r.is_zero() {
                digit.insert_term(*m, ExactRational::from_integer(r));
            }
        }
        out = &out + &digit.mul_term(&Monomial::var(v, power), &ExactRational::one());
        rest = &rest - &digit;
        // Every coefficient of rest is now divisible by xi.
        let inv = ExactRational::new(BigInt::one(), xi.clone());
        rest = rest.scale(&inv);
        if rest.terms.values().any(|c| !c.denom().is_one()) {
            return None;
        }
        power += 1;
    }
    Some(out)
}

/// Content (gcd of the `v`-coefficients) and primitive part w.r.t. `v`.
fn content_and_primitive(p: &MultiPolynomial, v: Var) -> (MultiPolynomial, MultiPolynomial) {
    let coeffs = p.coefficients_in(v);
    let mut content: Option<MultiPolynomial> = None;
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        content = Some(match content {
            None => c.primitive_normal(),
            Some(g) => {
                if g.is_one() {
                    g
                } else {
                    gcd_nonzero(&g, &c.primitive_normal())
                }
            }
        });
    }
    let content = content.expect("nonzero polynomial has nonzero coefficients");
    if content.is_one() {
        return (content, p.primitive_normal());
    }
    let pp = p.div_exact(&content).expect("content divides").primitive_normal();
    (content, pp)
}

/// Subresultant pseudo-remainder sequence (Brown/Traub). Each remainder is
/// divided by the known factor g·h^δ, which keeps coefficient growth
/// polynomial without content computations inside the loop.
fn subresultant_prs_gcd(
    mut r0: MultiPolynomial,
    mut r1: MultiPolynomial,
    v: Var,
) -> MultiPolynomial {
    if r0.degree_in(v) < r1.degree_in(v) {
        std::mem::swap(&mut r0, &mut r1);
    }
    let mut g = MultiPolynomial::one();
    let mut h = MultiPolynomial::one();
    loop {
        if r1.degree_in(v) == 0 {
            // Nonzero, primitive w.r.t. v, constant in v ⇒ coprime parts.
            return MultiPolynomial::one();
        }
        let delta = r0.degree_in(v) - r1.degree_in(v);
        let rem = pseudo_remainder(&r0, &r1, v, delta);
        if rem.is_zero() {
            return content_and_primitive(&r1, v).1;
        }
        let divisor = &g * &h.pow(delta);
        let next = rem
            .div_exact(&divisor)
            .expect("subresultant division is exact");
        r0 = r1;
        r1 = next;
        g = r0.coefficients_in(v)[r0.degree_in(v) as usize].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant h update is exact"),
        };
    }
}

/// Textbook pseudo-remainder: `lc(g)^(delta+1) * f mod g` in the variable
/// `v`, where `delta = deg_v f - deg_v g` (requires `deg_v g >= 1`).
fn pseudo_remainder(
    f: &MultiPolynomial,
    g: &MultiPolynomial,
    v: Var,
    delta: u32,
) -> MultiPolynomial {
    let dg = g.degree_in(v);
    let lg = g.coefficients_in(v)[dg as usize].clone();
    let mut r = f.clone();
    let mut scaled = 0u32;
    while !r.is_zero() {
        let dr = r.degree_in(v);
        if dr < dg {
            break;
        }
        let lr = r.coefficients_in(v)[dr as usize].clone();
        // r <- lg*r - lr * v^(dr-dg) * g : cancels the leading v-term.
        let shifted = g.mul_term(&Monomial::var(v, dr - dg), &ExactRational::one());
        r = &(&lg * &r) - &(&lr * &shifted);
        scaled += 1;
    }
    // A step can drop the degree by more than one; pad the multiplier so the
    // result is exactly lc^(delta+1)·f mod g as the subresultant PRS expects.
    for _ in scaled..=delta {
        r = &r * &lg;
    }
    r
}

impl Add for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn add(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn sub(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn mul(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        let mut out = MultiPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.insert_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn neg(self) -> MultiPolynomial {
        MultiPolynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let abs = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                parts.push(abs.to_string());
            }
            for v in Var::ALL {
                let e = m.get(v);
                if e == 1 {
                    parts.push(v.symbol().to_string());
                } else if e > 1 {
                    parts.push(format!("{}^{}", v.symbol(), e));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// A (possibly partial) binding of the variables a, s, t.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Assignment {
    pub a: Option<ExactRational>,
    pub s: Option<ExactRational>,
    pub t: Option<ExactRational>,
}

impl Assignment {
    pub fn full(a: ExactRational, s: ExactRational, t: ExactRational) -> Self {
        Assignment {
            a: Some(a),
            s: Some(s),
            t: Some(t),
        }
    }

    pub fn get(&self, v: Var) -> Option<&ExactRational> {
        match v {
            Var::A => self.a.as_ref(),
            Var::S => self.s.as_ref(),
            Var::T => self.t.as_ref(),
        }
    }

    pub fn set(&mut self, v: Var, value: ExactRational) {
        match v {
            Var::A => self.a = Some(value),
            Var::S => self.s = Some(value),
            Var::T => self.t = Some(value),
        }
    }
}
