//! Reduced rational functions over ℚ(a, s, t).
//!
//! The canonical form is unique: gcd(num, den) = 1 and the denominator is
//! integer-primitive with positive leading coefficient (so a polynomial has
//! denominator exactly 1). Structural equality is therefore value equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{Assignment, MultiPolynomial, Var};
use super::rational::ExactRational;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: MultiPolynomial,
    den: MultiPolynomial,
}

impl RationalFunction {
    /// Build `num/den` in canonical form. `den` must be nonzero.
    pub fn new(num: MultiPolynomial, den: MultiPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: MultiPolynomial, den: MultiPolynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RationalFunction {
                num,
                den: MultiPolynomial::one(),
            };
        }
        if den.is_one() {
            return RationalFunction { num, den };
        }
        let g = MultiPolynomial::gcd(&num, &den).expect("nonzero inputs");
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        let (den, scale) = den.primitive_with_scale();
        let inv = ExactRational::one() / scale;
        RationalFunction {
            num: num.scale(&inv),
            den,
        }
    }

    pub fn from_poly(p: MultiPolynomial) -> Self {
        RationalFunction {
            num: p,
            den: MultiPolynomial::one(),
        }
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::from_poly(MultiPolynomial::constant(c))
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_poly(MultiPolynomial::from_integer(n))
    }

    pub fn variable(v: Var) -> Self {
        Self::from_poly(MultiPolynomial::variable(v))
    }

    pub fn numerator(&self) -> &MultiPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The underlying polynomial when the denominator is 1.
    pub fn as_poly(&self) -> Option<&MultiPolynomial> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn pow_i(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            return self.recip()?.pow_i(-exp);
        }
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// Exact square root, or `NotASquare`.
    pub fn sqrt(&self) -> Result<Self> {
        let num = self.num.sqrt()?;
        let den = self.den.sqrt()?;
        Ok(Self::reduced(num, den))
    }

    /// Evaluate at a point; every occurring variable must be bound and the
    /// denominator must not vanish there.
    pub fn eval(&self, at: &Assignment) -> Result<ExactRational> {
        let den = self.den.eval(at)?;
        if den.is_zero() {
            return Err(Error::PoleAtPoint(format!(
                "denominator {} vanishes",
                self.den
            )));
        }
        let num = self.num.eval(at)?;
        Ok(num / den)
    }
}

impl From<MultiPolynomial> for RationalFunction {
    fn from(p: MultiPolynomial) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        // Cross-reduce by the denominator gcd before multiplying out.
        let g = if self.den.is_one() || rhs.den.is_one() {
            MultiPolynomial::one()
        } else {
            MultiPolynomial::gcd(&self.den, &rhs.den).expect("nonzero dens")
        };
        let lb = self.den.div_exact(&g).expect("gcd divides");
        let rb = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &rb) + &(&rhs.num * &lb);
        let den = &(&self.den * &rb);
        RationalFunction::reduced(num, den.clone())
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        let g1 = MultiPolynomial::gcd(&self.num, &rhs.den).expect("nonzero");
        let g2 = MultiPolynomial::gcd(&rhs.num, &self.den).expect("nonzero");
        let num = &self.num.div_exact(&g1).unwrap() * &rhs.num.div_exact(&g2).unwrap();
        let den = &self.den.div_exact(&g2).unwrap() * &rhs.den.div_exact(&g1).unwrap();
        RationalFunction::reduced(num, den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.recip().expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(MultiPolynomial::zero())
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(MultiPolynomial::one())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::{parse_poly, parse_ratfunc};
    use crate::exact::rational::{rat, ratio};

    fn rf(text: &str) -> RationalFunction {
        parse_ratfunc(text).unwrap()
    }

    #[test]
    fn product_with_reciprocal_is_one() {
        let f = rf("(a*t^4-2*s^4)/(4*a*t^4+s^4)");
        let g = rf("(4*a*t^4+s^4)/(a*t^4-2*s^4)");
        assert_eq!(&f * &g, RationalFunction::one());
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(
            RationalFunction::new(MultiPolynomial::one(), MultiPolynomial::zero()),
            Err(Error::DivisionByZero)
        );
        assert!(RationalFunction::zero().recip().is_err());
    }

    #[test]
    fn canonical_form_is_unique() {
        // Same value assembled along two different routes.
        let lhs = &rf("(s^4-4*a)/(s^4+12*a)") * &rf("(2*s^4-8*a)/(s^4-4*a)");
        let rhs = rf("(2*s^4-8*a)/(s^4+12*a)");
        assert_eq!(lhs, rhs);
        // Scaling numerator and denominator together normalizes away.
        let f = RationalFunction::new(
            parse_poly("6*a-3*s^4").unwrap(),
            parse_poly("9*s^4+9*a").unwrap(),
        )
        .unwrap();
        let g = RationalFunction::new(
            parse_poly("2*a-s^4").unwrap(),
            parse_poly("3*s^4+3*a").unwrap(),
        )
        .unwrap();
        assert_eq!(f, g);
        assert!(f.denominator().leading_coefficient() > rat(0));
    }

    #[test]
    fn polynomial_values_have_denominator_one() {
        let f = rf("(s^8-16*a^2)/(s^4+4*a)");
        assert_eq!(f, rf("s^4-4*a"));
        assert!(f.as_poly().is_some());
    }

    #[test]
    fn eval_examples() {
        let f = rf("(a*t^4-2*s^4)/(4*a*t^4+s^4)");
        let at = Assignment::full(rat(1), rat(1), rat(1));
        assert_eq!(f.eval(&at).unwrap(), ratio(-1, 5));
        assert_eq!(
            RationalFunction::one().eval(&Assignment::default()).unwrap(),
            rat(1)
        );
        let g = rf("1/(a*t^4-2*s^4)");
        let at2 = Assignment::full(rat(2), rat(1), rat(1));
        assert!(matches!(g.eval(&at2), Err(Error::PoleAtPoint(_))));
    }

    #[test]
    fn sqrt_of_square_function() {
        let f = rf("(2*a^2*t^8+10*a*s^4*t^4-s^8)/(4*a*t^4+s^4)");
        let sq = &f * &f;
        assert_eq!(sq.sqrt().unwrap(), f);
        assert_eq!(rf("(s^4+1)/(s^4+2)").sqrt(), Err(Error::NotASquare));
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "(2*a^2*t^8+10*a*s^4*t^4-s^8)/(4*a*s^3*t^5+s^7*t)",
            "s^4-4*a",
            "0",
            "-7/2",
        ] {
            let f = rf(text);
            assert_eq!(rf(&f.to_string()), f);
        }
    }
}
