//! A small field abstraction so curve and quartic code runs both over ℚ
//! (`ExactRational`) and over ℚ(a,s,t) (`RationalFunction`).

use std::fmt::Display;
use std::ops::{Div, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{ExactRational, RationalFunction};

/// Exact field elements: clonable immutable values with total arithmetic
/// except division by zero. Callers guard zero denominators themselves.
pub trait ExactField:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + Display
{
    fn from_integer(n: i64) -> Self;

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

impl ExactField for ExactRational {
    fn from_integer(n: i64) -> Self {
        ExactRational::from_integer(BigInt::from(n))
    }
}

impl ExactField for RationalFunction {
    fn from_integer(n: i64) -> Self {
        RationalFunction::from_integer(n)
    }
}
