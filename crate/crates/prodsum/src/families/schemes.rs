//! The three family generators, each indexed by the multiple n of its base
//! point.
//!
//! Pipelines:
//! - euler:   nP on the curve attached to the quartic
//!            V² = -16at⁴U⁴ + 4at⁴U³ - 4s⁴U + s⁴, U = A/B, C by square root.
//! - elkies:  nP directly on V² = A³ + 4aA² - 32s⁴aA + 64s⁸a, with
//!            B = 4s⁴ - A and C = V/s².
//! - fourvar: nP on the curve attached to
//!            v² = 4t⁵A⁴ - 4t¹⁰A³ + 4at⁵A² - 4at¹⁰A + t¹⁰, B = 1, C from the
//!            quadratic formula.
//!
//! In every case the base point is the image of the quartic branch point
//! (0, -e), and `family(n)` uses nP; the classical three-variable closed
//! forms appear at n = 2 (euler) and n = 1 (elkies).

use num_traits::{One, Zero};

use super::constraint::recover_c;
use super::{AnsatzConfig, IntermediateTuple, Scheme, SolutionTuple};
use crate::curve::{quartic_to_weierstrass, CurvePoint, QuarticModel, WeierstrassCurve};
use crate::exact::{parse_ratfunc, RationalFunction, Var};
use crate::{Error, Result};

/// Default cap on |n| for symbolic scalar multiples: coefficient growth is
/// severe over ℚ(a,s,t), and n = 4 already produces very large polynomials.
pub const DEFAULT_SYMBOLIC_CAP: u32 = 4;

fn rf(text: &str) -> RationalFunction {
    parse_ratfunc(text).expect("static formula parses")
}

/// The quartic behind the euler scheme (e = s²).
pub fn euler_quartic() -> QuarticModel<RationalFunction> {
    QuarticModel::new(
        rf("-16*a*t^4"),
        rf("4*a*t^4"),
        RationalFunction::zero(),
        rf("-4*s^4"),
        rf("s^2"),
    )
    .expect("nonsingular")
}

/// The quartic behind the four-variable scheme (e = t⁵).
pub fn fourvar_quartic() -> QuarticModel<RationalFunction> {
    QuarticModel::new(
        rf("4*t^5"),
        rf("-4*t^10"),
        rf("4*t^5*a"),
        rf("-4*t^10*a"),
        rf("t^5"),
    )
    .expect("nonsingular")
}

/// The elkies curve V² = A³ + 4aA² - 32s⁴aA + 64s⁸a with its base point
/// P = (s⁴ - 4a, s⁶ + 12as²).
pub fn elkies_curve_and_base() -> (WeierstrassCurve<RationalFunction>, CurvePoint<RationalFunction>)
{
    let curve = WeierstrassCurve::new(
        RationalFunction::zero(),
        RationalFunction::zero(),
        rf("4*a"),
        rf("-32*s^4*a"),
        rf("64*s^8*a"),
    )
    .expect("nonsingular");
    let base = CurvePoint::affine(rf("s^4-4*a"), rf("s^6+12*a*s^2"));
    (curve, base)
}

pub fn euler_family(n: i64) -> Result<SolutionTuple> {
    euler_family_capped(n, DEFAULT_SYMBOLIC_CAP)
}

pub fn euler_family_capped(n: i64, cap: u32) -> Result<SolutionTuple> {
    let config = AnsatzConfig::default_for(Scheme::Euler3);
    let (curve, maps) = quartic_to_weierstrass(&euler_quartic())?;
    let base = maps.branch_point();
    let np = curve.scalar_mul(n, &base, Some(cap))?;
    let image = maps.inverse(&np)?;
    let big_a = RationalFunction::from_poly(image.u.numerator().clone());
    let big_b = RationalFunction::from_poly(image.u.denominator().clone());
    if big_a.is_zero() {
        return Err(Error::ExceptionalPoint(format!(
            "{n}P maps to the quartic anchor u = 0, where the solution form degenerates"
        )));
    }
    let big_c = recover_c(&config, &big_a, &big_b)?;
    finish(&config, Scheme::Euler3, n, big_a, Some(big_b), big_c)
}

pub fn elkies_family(n: i64) -> Result<SolutionTuple> {
    elkies_family_capped(n, DEFAULT_SYMBOLIC_CAP)
}

pub fn elkies_family_capped(n: i64, cap: u32) -> Result<SolutionTuple> {
    let config = AnsatzConfig::default_for(Scheme::Elkies3);
    let (curve, base) = elkies_curve_and_base();
    let np = curve.scalar_mul(n, &base, Some(cap))?;
    let Some((x, y)) = np.coordinates() else {
        return Err(Error::ExceptionalPoint(format!("{n}P is the point at infinity")));
    };
    let big_a = x.clone();
    let big_b = &rf("4*s^4") - &big_a;
    // Eq-(2) shortcut: with B = 4s⁴ - A the constraint gives C² = V²/s⁴,
    // so C = V/s² with the sign the group law hands us.
    let big_c = y / &rf("s^2");
    if big_a.is_zero() || big_b.is_zero() || big_c.is_zero() {
        return Err(Error::ExceptionalPoint(format!(
            "{n}P degenerates the solution form (a factor vanishes)"
        )));
    }
    finish(&config, Scheme::Elkies3, n, big_a, Some(big_b), big_c)
}

pub fn fourvar_family(n: i64) -> Result<SolutionTuple> {
    fourvar_family_capped(n, DEFAULT_SYMBOLIC_CAP)
}

pub fn fourvar_family_capped(n: i64, cap: u32) -> Result<SolutionTuple> {
    let config = AnsatzConfig::default_for(Scheme::FourVar);
    let (curve, maps) = quartic_to_weierstrass(&fourvar_quartic())?;
    let base = maps.branch_point();
    let np = curve.scalar_mul(n, &base, Some(cap))?;
    let image = maps.inverse(&np)?;
    let big_a = image.u;
    let big_b = RationalFunction::one();
    if big_a.is_zero() {
        return Err(Error::ExceptionalPoint(format!(
            "{n}P maps to the quartic anchor u = 0, where the solution form degenerates"
        )));
    }
    let big_c = recover_c(&config, &big_a, &big_b)?;
    if big_c.is_zero() {
        return Err(Error::ExceptionalPoint(format!(
            "{n}P degenerates the solution form (C = 0)"
        )));
    }
    finish(&config, Scheme::FourVar, n, big_a, None, big_c)
}

fn finish(
    config: &AnsatzConfig,
    scheme: Scheme,
    n: i64,
    big_a: RationalFunction,
    big_b: Option<RationalFunction>,
    big_c: RationalFunction,
) -> Result<SolutionTuple> {
    let b_for_assembly = big_b.clone().unwrap_or_else(RationalFunction::one);
    let components = config.assemble(&big_a, &b_for_assembly, &big_c)?;
    let tuple = SolutionTuple {
        scheme,
        n: n.unsigned_abs() as u32,
        components,
        intermediates: Some(IntermediateTuple {
            a: big_a,
            b: big_b,
            c: big_c,
        }),
    };
    debug_assert!(super::verify_solution_identity(&tuple));
    Ok(tuple)
}

/// The free variable a as a rational function; handy in tests.
pub fn variable_a() -> RationalFunction {
    RationalFunction::variable(Var::A)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Assignment};
    use crate::families::{specialize, verify_solution_identity};

    #[test]
    fn euler_n2_matches_the_classical_solution() {
        let tuple = euler_family(2).unwrap();
        let expected = [
            rf("6*a*s*t^3*(a*t^4-2*s^4)^2/((4*a*t^4+s^4)*(2*a^2*t^8+10*a*s^4*t^4-s^8))"),
            rf("3/2*s^5*(4*a*t^4+s^4)^2/(t*(a*t^4-2*s^4)*(2*a^2*t^8+10*a*s^4*t^4-s^8))"),
            rf("2/3*(2*a^2*t^8+10*a*s^4*t^4-s^8)/(s^3*t*(4*a*t^4+s^4))"),
        ];
        assert_eq!(tuple.components, expected);
        let inter = tuple.intermediates.as_ref().unwrap();
        assert_eq!(inter.a, rf("a*t^4-2*s^4"));
        assert_eq!(inter.b.as_ref().unwrap(), &rf("4*a*t^4+s^4"));
        assert_eq!(inter.c, rf("2*a^2*t^8+10*a*s^4*t^4-s^8"));
    }

    #[test]
    fn elkies_n1_matches_the_classical_solution() {
        let tuple = elkies_family(1).unwrap();
        let expected = [
            rf("1/2*(s^4-4*a)^2/(s^3*(s^4+12*a))"),
            rf("2*a*(3*s^4+4*a)^2/(s^3*(s^4-4*a)*(s^4+12*a))"),
            rf("1/2*s*(s^4+12*a)/(3*s^4+4*a)"),
        ];
        assert_eq!(tuple.components, expected);
    }

    #[test]
    fn identities_hold_for_small_multiples() {
        for n in [2, 3] {
            assert!(verify_solution_identity(&euler_family(n).unwrap()));
        }
        for n in [1, 2, 3] {
            assert!(verify_solution_identity(&elkies_family(n).unwrap()));
        }
        for n in [2, 3] {
            assert!(verify_solution_identity(&fourvar_family(n).unwrap()));
        }
    }

    #[test]
    fn euler_n1_is_degenerate() {
        assert!(matches!(
            euler_family(1),
            Err(Error::ExceptionalPoint(_))
        ));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            euler_family(9),
            Err(Error::SymbolicDepthExceeded { n: 9, cap: 4 })
        ));
    }

    #[test]
    fn specialization_examples() {
        let tuple = euler_family(2).unwrap();
        let at = Assignment::full(rat(1), rat(1), rat(1));
        let values = specialize(&tuple, &at).unwrap();
        assert_eq!(
            values,
            vec![
                crate::exact::ratio(6, 55),
                crate::exact::ratio(-75, 22),
                crate::exact::ratio(22, 15)
            ]
        );

        let elkies = elkies_family(1).unwrap();
        let at = Assignment {
            a: Some(rat(1)),
            s: Some(rat(1)),
            t: None,
        };
        let values = specialize(&elkies, &at).unwrap();
        assert_eq!(
            values,
            vec![
                crate::exact::ratio(9, 26),
                crate::exact::ratio(-98, 39),
                crate::exact::ratio(13, 14)
            ]
        );
    }

    #[test]
    fn pole_is_reported_with_its_factor() {
        let tuple = euler_family(2).unwrap();
        let at = Assignment::full(rat(2), rat(1), rat(1));
        match specialize(&tuple, &at) {
            Err(Error::PoleAtPoint(msg)) => {
                assert!(msg.contains("A ="), "message should name the factor: {msg}");
            }
            other => panic!("expected a pole, got {other:?}"),
        }
    }

    #[test]
    fn fourvar_n2_intermediates() {
        let tuple = fourvar_family(2).unwrap();
        let inter = tuple.intermediates.as_ref().unwrap();
        assert_eq!(
            inter.a,
            rf("-t^5*(-2*a^2+2*t^5*a^3+t^5)/(t^10*a^4-2*t^5*a^3-t^5+a^2)")
        );
        assert_eq!(
            inter.c,
            rf("(t^10+a-2*t^5*a^2+t^10*a^3)/(t^10*a^2-1)")
        );
    }
}
