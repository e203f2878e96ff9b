//! Integral short models over ℚ and torsion certificates.
//!
//! A long-form curve over ℚ is carried to `y² = x³ + Ax + B` with integer
//! A, B by the standard b-invariant substitution followed by a (u², u³)
//! scaling. Torsion points on an integral model have integer coordinates
//! (Nagell-Lutz), and rational torsion subgroups have order at most 12 and
//! never 11 (Mazur), so the multiples nP for n = 1..12 decide whether P has
//! finite order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::weierstrass::{CurvePoint, WeierstrassCurve};
use crate::exact::{is_integer, ExactRational};
use crate::field::ExactField;
use crate::{Error, Result};

/// The affine change of coordinates onto the short integral model:
/// `x' = u²(x + b2/12)`, `y' = u³(y + (a1·x + a3)/2)`.
#[derive(Debug, Clone)]
pub struct PointMap {
    scale: ExactRational,
    b2: ExactRational,
    a1: ExactRational,
    a3: ExactRational,
}

impl PointMap {
    pub fn apply(&self, pt: &CurvePoint<ExactRational>) -> CurvePoint<ExactRational> {
        match pt {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => {
                let twelve = ExactRational::from_integer(12.into());
                let two = ExactRational::from_integer(2.into());
                let u2 = self.scale.square();
                let u3 = u2.clone() * self.scale.clone();
                let x2 = u2 * (x + &(self.b2.clone() / twelve));
                let y2 = u3 * (y + &((self.a1.clone() * x + self.a3.clone()) / two));
                CurvePoint::Affine { x: x2, y: y2 }
            }
        }
    }
}

/// Smallest power of `p` dividing `n`, with the cofactor.
fn split_prime(mut n: BigInt, p: u32) -> (u32, BigInt) {
    let p = BigInt::from(p);
    let mut v = 0;
    while (&n % &p).is_zero() && !n.is_zero() {
        n /= &p;
        v += 1;
    }
    (v, n)
}

/// A positive integer `u` with `u⁴·A` and `u⁶·B` integral: powers of 2 and 3
/// are taken minimal, any remaining denominator prime goes in wholesale.
fn scaling_factor(a: &ExactRational, b: &ExactRational) -> BigInt {
    let mut da = a.denom().abs();
    let mut db = b.denom().abs();
    let mut u = BigInt::one();
    for p in [2u32, 3u32] {
        let (va, ra) = split_prime(da.clone(), p);
        let (vb, rb) = split_prime(db.clone(), p);
        da = ra;
        db = rb;
        let need = (va.div_ceil(4)).max(vb.div_ceil(6));
        u *= BigInt::from(p).pow(need);
    }
    u * da.lcm(&db)
}

/// Convert a rational long-form curve to `y² = x³ + Ax + B` with integer
/// A and B, returning the induced point map.
pub fn to_short_integral_form(
    curve: &WeierstrassCurve<ExactRational>,
) -> (WeierstrassCurve<ExactRational>, PointMap) {
    let (b2, b4, b6, _) = curve.b_invariants();
    let c4 = b2.square() - ExactRational::from_integer(24.into()) * b4.clone();
    let c6 = -(b2.clone() * b2.square()) + ExactRational::from_integer(36.into()) * b2.clone() * b4
        - ExactRational::from_integer(216.into()) * b6;
    let a = -(c4 / ExactRational::from_integer(48.into()));
    let b = -(c6 / ExactRational::from_integer(864.into()));
    let u = ExactRational::from_integer(scaling_factor(&a, &b));
    let u4 = u.square().square();
    let u6 = u4.clone() * u.square();
    let short = WeierstrassCurve::short(u4 * a, u6 * b)
        .expect("nonsingular input stays nonsingular");
    let map = PointMap {
        scale: u,
        b2,
        a1: curve.a1.clone(),
        a3: curve.a3.clone(),
    };
    (short, map)
}

/// One multiple nP on the integral model.
#[derive(Debug, Clone)]
pub struct WitnessRow {
    pub n: u32,
    pub point: CurvePoint<ExactRational>,
    pub integral: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TorsionOutcome {
    /// Certified infinite order, either by a non-integral multiple
    /// (Nagell-Lutz) or because no nP vanished for the admissible orders.
    NonTorsion { via_integrality: bool },
    /// nP = Infinity was observed; `order` is the least such n.
    Torsion { order: u32 },
}

#[derive(Debug, Clone)]
pub struct TorsionCertificate {
    pub short_curve: WeierstrassCurve<ExactRational>,
    pub mapped_point: CurvePoint<ExactRational>,
    pub witness: Vec<WitnessRow>,
    pub outcome: TorsionOutcome,
}

impl TorsionCertificate {
    pub fn is_non_torsion(&self) -> bool {
        matches!(self.outcome, TorsionOutcome::NonTorsion { .. })
    }

    pub fn to_json(&self) -> Value {
        let witness: Vec<Value> = self
            .witness
            .iter()
            .map(|row| match &row.point {
                CurvePoint::Infinity => json!({
                    "n": row.n,
                    "x": Value::Null,
                    "y": Value::Null,
                    "integral": "yes",
                }),
                CurvePoint::Affine { x, y } => json!({
                    "n": row.n,
                    "x": x.to_string(),
                    "y": y.to_string(),
                    "integral": if row.integral { "yes" } else { "no" },
                }),
            })
            .collect();
        let verdict = match &self.outcome {
            TorsionOutcome::NonTorsion { via_integrality } => json!({
                "conclusion": "non-torsion",
                "reason": if *via_integrality {
                    "some multiple has a non-integer coordinate"
                } else {
                    "no multiple vanishes for any admissible torsion order"
                },
            }),
            TorsionOutcome::Torsion { order } => json!({
                "conclusion": "torsion",
                "order": order,
            }),
        };
        json!({
            "curve": {
                "a4": self.short_curve.a4.to_string(),
                "a6": self.short_curve.a6.to_string(),
            },
            "point": match &self.mapped_point {
                CurvePoint::Infinity => Value::String("Infinity".into()),
                CurvePoint::Affine { x, y } => json!([x.to_string(), y.to_string()]),
            },
            "verdict": verdict,
            "witness": witness,
        })
    }
}

fn point_is_integral(pt: &CurvePoint<ExactRational>) -> bool {
    match pt {
        CurvePoint::Infinity => true,
        CurvePoint::Affine { x, y } => is_integer(x) && is_integer(y),
    }
}

/// Decide whether `p` has finite order by examining nP for n = 1..12 on the
/// integral short model.
pub fn non_torsion_certificate(
    curve: &WeierstrassCurve<ExactRational>,
    p: &CurvePoint<ExactRational>,
) -> Result<TorsionCertificate> {
    if !curve.contains(p) {
        return Err(Error::OffCurveInput);
    }
    let (short, map) = to_short_integral_form(curve);
    let mapped = map.apply(p);
    debug_assert!(short.contains(&mapped));

    if mapped.is_infinity() {
        return Ok(TorsionCertificate {
            short_curve: short,
            mapped_point: mapped.clone(),
            witness: vec![WitnessRow {
                n: 1,
                point: mapped,
                integral: true,
            }],
            outcome: TorsionOutcome::Torsion { order: 1 },
        });
    }

    let mut witness = Vec::with_capacity(12);
    let mut acc = CurvePoint::Infinity;
    let mut first_vanishing = None;
    let mut saw_non_integral = false;
    for n in 1..=12u32 {
        acc = short.add(&acc, &mapped)?;
        let integral = point_is_integral(&acc);
        saw_non_integral |= !integral;
        if acc.is_infinity() && first_vanishing.is_none() {
            first_vanishing = Some(n);
        }
        witness.push(WitnessRow {
            n,
            point: acc.clone(),
            integral,
        });
    }

    let outcome = match first_vanishing {
        Some(order) => TorsionOutcome::Torsion { order },
        None => TorsionOutcome::NonTorsion {
            via_integrality: saw_non_integral,
        },
    };
    Ok(TorsionCertificate {
        short_curve: short,
        mapped_point: mapped,
        witness,
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn already_short_integral_curve_is_fixed() {
        let curve = WeierstrassCurve::short(rat(0), rat(1)).unwrap();
        let (short, map) = to_short_integral_form(&curve);
        assert_eq!(short, curve);
        let p = CurvePoint::affine(rat(2), rat(3));
        assert_eq!(map.apply(&p), p);
    }

    #[test]
    fn elkies_specialization_is_already_short() {
        // a = 1, s = 1: V² = A³ + 4A² - 32A + 64 carries (-3, 13).
        let curve = WeierstrassCurve::new(rat(0), rat(0), rat(4), rat(-32), rat(64)).unwrap();
        let p = CurvePoint::affine(rat(-3), rat(13));
        assert!(curve.contains(&p));
        let (short, map) = to_short_integral_form(&curve);
        assert!(is_integer(&short.a4) && is_integer(&short.a6));
        let q = map.apply(&p);
        assert!(short.contains(&q));
    }

    #[test]
    fn euler_specialization_carries_its_point() {
        // a = s = t = 1: Y² - 4YX + 8Y = X³ - 4X² + 64X - 256 with P = (4, 8).
        let curve = WeierstrassCurve::new(rat(-4), rat(8), rat(-4), rat(64), rat(-256)).unwrap();
        let p = CurvePoint::affine(rat(4), rat(8));
        assert!(curve.contains(&p));
        let (short, map) = to_short_integral_form(&curve);
        assert!(is_integer(&short.a4) && is_integer(&short.a6));
        // b2 = 0 here, so the map is just the completing-the-square shift.
        assert_eq!(short, WeierstrassCurve::short(rat(48), rat(-240)).unwrap());
        let q = map.apply(&p);
        assert_eq!(q, CurvePoint::affine(rat(4), rat(4)));
        assert!(short.contains(&q));
    }

    #[test]
    fn non_torsion_points_are_certified() {
        let curve = WeierstrassCurve::new(rat(0), rat(0), rat(4), rat(-32), rat(64)).unwrap();
        let p = CurvePoint::affine(rat(-3), rat(13));
        let cert = non_torsion_certificate(&curve, &p).unwrap();
        assert!(cert.is_non_torsion());
        assert_eq!(cert.witness.len(), 12);

        let euler = WeierstrassCurve::new(rat(-4), rat(8), rat(-4), rat(64), rat(-256)).unwrap();
        let cert = non_torsion_certificate(&euler, &CurvePoint::affine(rat(4), rat(8))).unwrap();
        assert!(cert.is_non_torsion());
    }

    #[test]
    fn infinity_has_order_one() {
        let curve = WeierstrassCurve::short(rat(0), rat(1)).unwrap();
        let cert = non_torsion_certificate(&curve, &CurvePoint::Infinity).unwrap();
        assert_eq!(cert.outcome, TorsionOutcome::Torsion { order: 1 });
    }

    #[test]
    fn known_torsion_points_are_recognized() {
        // (2, 3) on y² = x³ + 1 has order 6; (0, 1) has order 3.
        let curve = WeierstrassCurve::short(rat(0), rat(1)).unwrap();
        let cert =
            non_torsion_certificate(&curve, &CurvePoint::affine(rat(2), rat(3))).unwrap();
        assert_eq!(cert.outcome, TorsionOutcome::Torsion { order: 6 });
        let cert =
            non_torsion_certificate(&curve, &CurvePoint::affine(rat(0), rat(1))).unwrap();
        assert_eq!(cert.outcome, TorsionOutcome::Torsion { order: 3 });
    }

    #[test]
    fn certificate_serializes_to_json() {
        let curve = WeierstrassCurve::new(rat(0), rat(0), rat(4), rat(-32), rat(64)).unwrap();
        let p = CurvePoint::affine(rat(-3), rat(13));
        let cert = non_torsion_certificate(&curve, &p).unwrap();
        let doc = cert.to_json();
        assert_eq!(doc["verdict"]["conclusion"], "non-torsion");
        assert_eq!(doc["witness"].as_array().unwrap().len(), 12);
        assert!(doc["witness"][0]["x"].is_string());
    }

    #[test]
    fn off_curve_point_is_rejected() {
        let curve = WeierstrassCurve::short(rat(0), rat(1)).unwrap();
        let bad = CurvePoint::affine(rat(5), rat(5));
        assert_eq!(
            non_torsion_certificate(&curve, &bad).err(),
            Some(Error::OffCurveInput)
        );
    }
}
