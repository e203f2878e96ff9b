//! Genus-1 quartic models `v² = q4·u⁴ + q3·u³ + q2·u² + q1·u + e²` and the
//! classical birational equivalence with a long Weierstrass cubic, anchored
//! at the rational points (0, ±e).
//!
//! With d = q2 - q1²/(4e²) the maps are
//!
//! ```text
//! forward:  X = (2e(v + e) + q1·u)/u²,   Y = 2e(X + d)/u
//! inverse:  u = 2e(X + d)/Y,             v = (X·u² - q1·u)/(2e) - e
//! ```
//!
//! and the image curve is
//!
//! ```text
//! Y² + (q1/e)·XY + 2e·q3·Y = X³ + d·X² - 4e²·q4·X - 4e²·q4·d
//! ```
//!
//! The branch point (0, e) goes to infinity; (0, -e) goes to the affine
//! point returned by [`BirationalMaps::branch_point`].

use num_traits::Zero;

use super::weierstrass::{CurvePoint, WeierstrassCurve};
use crate::field::ExactField;
use crate::{Error, Result};

/// Quartic with square constant term `q0 = e²` (the root `e` is stored).
#[derive(Debug, Clone, PartialEq)]
pub struct QuarticModel<F> {
    pub q4: F,
    pub q3: F,
    pub q2: F,
    pub q1: F,
    pub e: F,
}

/// A point `(u, v)` with `v² = q(u)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuarticPoint<F> {
    pub u: F,
    pub v: F,
}

impl<F: ExactField> QuarticModel<F> {
    /// Requires `e != 0` and a squarefree right-hand side.
    pub fn new(q4: F, q3: F, q2: F, q1: F, e: F) -> Result<Self> {
        if e.is_zero() {
            return Err(Error::SingularQuartic);
        }
        let model = QuarticModel { q4, q3, q2, q1, e };
        if !model.is_squarefree() {
            return Err(Error::SingularQuartic);
        }
        Ok(model)
    }

    pub fn q0(&self) -> F {
        self.e.square()
    }

    /// The right-hand side q(u).
    pub fn value_at(&self, u: &F) -> F {
        let u2 = u.square();
        let u3 = u2.clone() * u.clone();
        let u4 = u2.square();
        self.q4.clone() * u4
            + self.q3.clone() * u3
            + self.q2.clone() * u2
            + self.q1.clone() * u.clone()
            + self.q0()
    }

    pub fn contains(&self, pt: &QuarticPoint<F>) -> bool {
        pt.v.square() == self.value_at(&pt.u)
    }

    fn coefficients(&self) -> Vec<F> {
        let cs = vec![
            self.q0(),
            self.q1.clone(),
            self.q2.clone(),
            self.q3.clone(),
            self.q4.clone(),
        ];
        let mut cs = cs;
        while cs.len() > 1 && cs.last().map_or(false, Zero::is_zero) {
            cs.pop();
        }
        cs
    }

    /// gcd(q, q') must be constant; a repeated root makes the model singular.
    fn is_squarefree(&self) -> bool {
        let q = self.coefficients();
        if q.len() < 4 {
            return false;
        }
        let dq: Vec<F> = q
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| F::from_integer(i as i64) * c.clone())
            .collect();
        univariate_gcd_degree(&q, &dq) == 0
    }
}

/// Degree of gcd of two univariate polynomials over an exact field
/// (coefficient vectors, lowest power first).
fn univariate_gcd_degree<F: ExactField>(p: &[F], q: &[F]) -> usize {
    fn trim<F: ExactField>(mut v: Vec<F>) -> Vec<F> {
        while v.len() > 1 && v.last().map_or(false, Zero::is_zero) {
            v.pop();
        }
        v
    }
    let mut r0 = trim(p.to_vec());
    let mut r1 = trim(q.to_vec());
    if r0.len() < r1.len() {
        std::mem::swap(&mut r0, &mut r1);
    }
    loop {
        if r1.len() == 1 && r1[0].is_zero() {
            return r0.len() - 1;
        }
        // r0 mod r1 with monic normalization.
        let lead = r1.last().unwrap().clone();
        let monic: Vec<F> = r1.iter().map(|c| c.clone() / lead.clone()).collect();
        let mut rem = r0.clone();
        while rem.len() >= monic.len() && !(rem.len() == 1 && rem[0].is_zero()) {
            let shift = rem.len() - monic.len();
            let factor = rem.last().unwrap().clone();
            for (i, m) in monic.iter().enumerate() {
                let idx = shift + i;
                rem[idx] = rem[idx].clone() - factor.clone() * m.clone();
            }
            rem = trim(rem);
            if rem.iter().all(Zero::is_zero) {
                rem = vec![F::zero()];
                break;
            }
        }
        r0 = r1;
        r1 = trim(rem);
    }
}

/// The mutually inverse maps produced by [`quartic_to_weierstrass`].
#[derive(Debug, Clone)]
pub struct BirationalMaps<F> {
    quartic: QuarticModel<F>,
    /// d = q2 - q1²/(4e²), which is also the curve coefficient a2.
    d: F,
}

/// Transform a quartic with square constant term into a long Weierstrass
/// curve together with the birational maps between them.
pub fn quartic_to_weierstrass<F: ExactField>(
    quartic: &QuarticModel<F>,
) -> Result<(WeierstrassCurve<F>, BirationalMaps<F>)> {
    let e = quartic.e.clone();
    let two_e = F::from_integer(2) * e.clone();
    let four_e2 = F::from_integer(4) * e.square();
    let d = quartic.q2.clone() - quartic.q1.square() / four_e2.clone();
    let a1 = quartic.q1.clone() / e.clone();
    let a3 = two_e * quartic.q3.clone();
    let a4 = -(four_e2.clone() * quartic.q4.clone());
    let a6 = a4.clone() * d.clone();
    let curve = WeierstrassCurve::new(a1, a3, d.clone(), a4, a6)?;
    let maps = BirationalMaps {
        quartic: quartic.clone(),
        d,
    };
    Ok((curve, maps))
}

impl<F: ExactField> BirationalMaps<F> {
    pub fn quartic(&self) -> &QuarticModel<F> {
        &self.quartic
    }

    /// (u, v) -> (X, Y); the anchor points with u = 0 are exceptional.
    pub fn forward(&self, pt: &QuarticPoint<F>) -> Result<CurvePoint<F>> {
        if pt.u.is_zero() {
            return Err(Error::ExceptionalPoint("u = 0 anchors the map".into()));
        }
        let e = &self.quartic.e;
        let two_e = F::from_integer(2) * e.clone();
        let u2 = pt.u.square();
        let x = (two_e.clone() * (pt.v.clone() + e.clone())
            + self.quartic.q1.clone() * pt.u.clone())
            / u2;
        let y = two_e * (x.clone() + self.d.clone()) / pt.u.clone();
        Ok(CurvePoint::Affine { x, y })
    }

    /// (X, Y) -> (u, v); Infinity and points with Y = 0 are exceptional.
    pub fn inverse(&self, pt: &CurvePoint<F>) -> Result<QuarticPoint<F>> {
        let (x, y) = pt
            .coordinates()
            .ok_or_else(|| Error::ExceptionalPoint("point at infinity".into()))?;
        if y.is_zero() {
            return Err(Error::ExceptionalPoint("Y = 0 on the curve".into()));
        }
        let e = &self.quartic.e;
        let two_e = F::from_integer(2) * e.clone();
        let u = two_e.clone() * (x.clone() + self.d.clone()) / y.clone();
        let v = (x.clone() * u.square() - self.quartic.q1.clone() * u.clone()) / two_e
            - e.clone();
        Ok(QuarticPoint { u, v })
    }

    /// Image of the second branch point (0, -e): the affine curve point that
    /// the inverse map sends back to u = 0.
    pub fn branch_point(&self) -> CurvePoint<F> {
        let e = &self.quartic.e;
        let two_e = F::from_integer(2) * e.clone();
        let c1 = self.quartic.q1.clone() / two_e.clone();
        let c2 = (self.quartic.q2.clone() - c1.square()) / two_e.clone();
        let c3 = (self.quartic.q3.clone() - F::from_integer(2) * c1 * c2) / two_e;
        let four_e2 = F::from_integer(4) * e.square();
        CurvePoint::Affine {
            x: -self.d.clone(),
            y: -(four_e2 * c3),
        }
    }
}
