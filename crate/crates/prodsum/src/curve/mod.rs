//! Weierstrass curves, the chord-tangent group law, quartic models with
//! birational quartic↔cubic maps, and torsion certificates over ℚ.

pub mod quartic;
pub mod torsion;
pub mod weierstrass;

pub use quartic::{quartic_to_weierstrass, BirationalMaps, QuarticModel, QuarticPoint};
pub use torsion::{
    non_torsion_certificate, to_short_integral_form, PointMap, TorsionCertificate,
    TorsionOutcome, WitnessRow,
};
pub use weierstrass::{specialize_curve, specialize_point, CurvePoint, WeierstrassCurve};
