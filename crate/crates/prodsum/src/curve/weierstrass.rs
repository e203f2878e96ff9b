//! Long-form Weierstrass curves `Y² + a1·XY + a3·Y = X³ + a2·X² + a4·X + a6`
//! over an exact field, with the full chord-tangent group law.
//!
//! The long form is required here: the curves this crate works with have
//! nonzero a1 and a3. Points are affine plus an explicit point at infinity;
//! inversion is cheap over exact fields and keeps every formula auditable.

use std::fmt;


use crate::field::ExactField;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum CurvePoint<F> {
    Infinity,
    Affine { x: F, y: F },
}

impl<F: ExactField> CurvePoint<F> {
    pub fn affine(x: F, y: F) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn coordinates(&self) -> Option<(&F, &F)> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, y } => Some((x, y)),
        }
    }
}

impl<F: fmt::Display> fmt::Display for CurvePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "Infinity"),
            CurvePoint::Affine { x, y } => write!(f, "({}, {})", x, y),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeierstrassCurve<F> {
    pub a1: F,
    pub a3: F,
    pub a2: F,
    pub a4: F,
    pub a6: F,
}

impl<F: ExactField> WeierstrassCurve<F> {
    /// Construct a curve, rejecting zero discriminant.
    pub fn new(a1: F, a3: F, a2: F, a4: F, a6: F) -> Result<Self> {
        let curve = WeierstrassCurve { a1, a3, a2, a4, a6 };
        if curve.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(curve)
    }

    /// Short form `y² = x³ + a4·x + a6`.
    pub fn short(a4: F, a6: F) -> Result<Self> {
        Self::new(F::zero(), F::zero(), F::zero(), a4, a6)
    }

    /// Standard quantities b2, b4, b6, b8.
    pub fn b_invariants(&self) -> (F, F, F, F) {
        let two = F::from_integer(2);
        let four = F::from_integer(4);
        let b2 = self.a1.square() + four.clone() * self.a2.clone();
        let b4 = two.clone() * self.a4.clone() + self.a1.clone() * self.a3.clone();
        let b6 = self.a3.square() + four.clone() * self.a6.clone();
        let b8 = self.a1.square() * self.a6.clone() + four * self.a2.clone() * self.a6.clone()
            - self.a1.clone() * self.a3.clone() * self.a4.clone()
            + self.a2.clone() * self.a3.square()
            - self.a4.square();
        (b2, b4, b6, b8)
    }

    pub fn discriminant(&self) -> F {
        let (b2, b4, b6, b8) = self.b_invariants();
        let nine = F::from_integer(9);
        -(b2.square() * b8.clone()) - F::from_integer(8) * b4.clone() * b4.square()
            - F::from_integer(27) * b6.square()
            + nine * b2 * b4 * b6
    }

    /// True iff the point is Infinity or satisfies the equation exactly.
    pub fn contains(&self, pt: &CurvePoint<F>) -> bool {
        match pt {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                let lhs = y.square()
                    + self.a1.clone() * x.clone() * y.clone()
                    + self.a3.clone() * y.clone();
                let rhs = x.clone() * x.square()
                    + self.a2.clone() * x.square()
                    + self.a4.clone() * x.clone()
                    + self.a6.clone();
                lhs == rhs
            }
        }
    }

    /// -(X, Y) = (X, -Y - a1·X - a3).
    pub fn negate(&self, pt: &CurvePoint<F>) -> CurvePoint<F> {
        match pt {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: x.clone(),
                y: -(y.clone()) - self.a1.clone() * x.clone() - self.a3.clone(),
            },
        }
    }

    /// Chord-tangent sum. Errors with `OffCurveInput` when either point does
    /// not satisfy the equation.
    pub fn add(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> Result<CurvePoint<F>> {
        if !self.contains(p) || !self.contains(q) {
            return Err(Error::OffCurveInput);
        }
        Ok(self.add_unchecked(p, q))
    }

    pub fn double(&self, p: &CurvePoint<F>) -> Result<CurvePoint<F>> {
        self.add(p, p)
    }

    fn add_unchecked(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> CurvePoint<F> {
        let (x1, y1) = match p {
            CurvePoint::Infinity => return q.clone(),
            CurvePoint::Affine { x, y } => (x, y),
        };
        let (x2, y2) = match q {
            CurvePoint::Infinity => return p.clone(),
            CurvePoint::Affine { x, y } => (x, y),
        };

        let (lambda, nu) = if x1 == x2 {
            // Same x: either inverse points (vertical line) or a tangent.
            let minus_y1 =
                -(y1.clone()) - self.a1.clone() * x1.clone() - self.a3.clone();
            if *y2 == minus_y1 {
                return CurvePoint::Infinity;
            }
            let denom = y1.clone() - minus_y1;
            let num = F::from_integer(3) * x1.square()
                + F::from_integer(2) * self.a2.clone() * x1.clone()
                + self.a4.clone()
                - self.a1.clone() * y1.clone();
            let lambda = num / denom;
            let nu = y1.clone() - lambda.clone() * x1.clone();
            (lambda, nu)
        } else {
            let lambda = (y2.clone() - y1.clone()) / (x2.clone() - x1.clone());
            let nu = y1.clone() - lambda.clone() * x1.clone();
            (lambda, nu)
        };

        let x3 = lambda.square() + self.a1.clone() * lambda.clone()
            - self.a2.clone()
            - x1.clone()
            - x2.clone();
        let y3 = -((lambda + self.a1.clone()) * x3.clone()) - nu - self.a3.clone();
        CurvePoint::Affine { x: x3, y: y3 }
    }

    /// `n`-fold sum of `p`. `0·P = Infinity`, `(-n)·P = -(n·P)`.
    ///
    /// `cap`, when given, bounds |n|; exceeding it yields
    /// `SymbolicDepthExceeded`. Symbolic callers use a small cap because
    /// coefficient growth is severe; over ℚ pass `None`.
    pub fn scalar_mul(
        &self,
        n: i64,
        p: &CurvePoint<F>,
        cap: Option<u32>,
    ) -> Result<CurvePoint<F>> {
        if let Some(cap) = cap {
            if n.unsigned_abs() > u64::from(cap) {
                return Err(Error::SymbolicDepthExceeded { n, cap });
            }
        }
        if !self.contains(p) {
            return Err(Error::OffCurveInput);
        }
        let base = if n < 0 { self.negate(p) } else { p.clone() };
        let mut acc = CurvePoint::Infinity;
        for _ in 0..n.unsigned_abs() {
            acc = self.add_unchecked(&acc, &base);
        }
        Ok(acc)
    }
}

impl<F: ExactField> fmt::Display for WeierstrassCurve<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Y^2 + ({})*X*Y + ({})*Y = X^3 + ({})*X^2 + ({})*X + ({})",
            self.a1, self.a3, self.a2, self.a4, self.a6
        )
    }
}

/// Evaluate a function-field curve at a numeric point. Fails on a pole of a
/// coefficient or when the specialized discriminant vanishes.
pub fn specialize_curve(
    curve: &WeierstrassCurve<crate::exact::RationalFunction>,
    at: &crate::exact::Assignment,
) -> Result<WeierstrassCurve<crate::exact::ExactRational>> {
    WeierstrassCurve::new(
        curve.a1.eval(at)?,
        curve.a3.eval(at)?,
        curve.a2.eval(at)?,
        curve.a4.eval(at)?,
        curve.a6.eval(at)?,
    )
}

/// Evaluate a function-field point at a numeric point.
pub fn specialize_point(
    pt: &CurvePoint<crate::exact::RationalFunction>,
    at: &crate::exact::Assignment,
) -> Result<CurvePoint<crate::exact::ExactRational>> {
    Ok(match pt {
        CurvePoint::Infinity => CurvePoint::Infinity,
        CurvePoint::Affine { x, y } => CurvePoint::Affine {
            x: x.eval(at)?,
            y: y.eval(at)?,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_ratfunc, rat, RationalFunction};
    use num_traits::Zero;

    fn rf(text: &str) -> RationalFunction {
        parse_ratfunc(text).unwrap()
    }

    /// The curve V² = A³ + 4aA² - 32s⁴aA + 64s⁸a over ℚ(a,s).
    fn elkies_curve() -> WeierstrassCurve<RationalFunction> {
        WeierstrassCurve::new(
            RationalFunction::zero(),
            RationalFunction::zero(),
            rf("4*a"),
            rf("-32*s^4*a"),
            rf("64*s^8*a"),
        )
        .unwrap()
    }

    fn elkies_base() -> CurvePoint<RationalFunction> {
        CurvePoint::affine(rf("s^4-4*a"), rf("s^6+12*a*s^2"))
    }

    #[test]
    fn base_point_is_on_elkies_curve() {
        assert!(elkies_curve().contains(&elkies_base()));
    }

    #[test]
    fn perturbed_point_is_rejected() {
        // Specialize at a = 1, s = 1: V² = A³ + 4A² - 32A + 64.
        let curve = WeierstrassCurve::new(rat(0), rat(0), rat(4), rat(-32), rat(64)).unwrap();
        assert!(curve.contains(&CurvePoint::affine(rat(-3), rat(13))));
        assert!(!curve.contains(&CurvePoint::affine(rat(-3), rat(12))));
    }

    #[test]
    fn identity_and_inverse() {
        let curve = elkies_curve();
        let p = elkies_base();
        assert_eq!(
            curve.add(&p, &CurvePoint::Infinity).unwrap(),
            p.clone()
        );
        let neg = curve.negate(&p);
        assert!(curve.contains(&neg));
        assert_eq!(curve.add(&p, &neg).unwrap(), CurvePoint::Infinity);
    }

    #[test]
    fn doubling_matches_known_x_coordinate() {
        let curve = elkies_curve();
        let two_p = curve.double(&elkies_base()).unwrap();
        let expected_x =
            rf("1/4*(s^16-464*s^12*a+1632*s^8*a^2+768*a^3*s^4+256*a^4)/(s^4*(s^4+12*a)^2)");
        match two_p {
            CurvePoint::Affine { x, .. } => assert_eq!(x, expected_x),
            CurvePoint::Infinity => panic!("2P should be affine"),
        }
    }

    #[test]
    fn scalar_multiples() {
        let curve = elkies_curve();
        let p = elkies_base();
        assert_eq!(curve.scalar_mul(1, &p, Some(4)).unwrap(), p.clone());
        assert_eq!(
            curve.scalar_mul(0, &p, Some(4)).unwrap(),
            CurvePoint::Infinity
        );
        let minus_two = curve.scalar_mul(-2, &p, Some(4)).unwrap();
        let two = curve.scalar_mul(2, &p, Some(4)).unwrap();
        assert_eq!(minus_two, curve.negate(&two));
        assert_eq!(
            curve.scalar_mul(5, &p, Some(4)),
            Err(Error::SymbolicDepthExceeded { n: 5, cap: 4 })
        );
    }

    #[test]
    fn off_curve_inputs_are_rejected() {
        let curve = elkies_curve();
        let bogus = CurvePoint::affine(rf("1"), rf("1"));
        assert_eq!(
            curve.add(&bogus, &CurvePoint::Infinity),
            Err(Error::OffCurveInput)
        );
    }

    #[test]
    fn singular_curve_is_rejected() {
        // y² = x³ has zero discriminant.
        assert_eq!(
            WeierstrassCurve::short(rat(0), rat(0)),
            Err(Error::SingularCurve)
        );
    }
}
