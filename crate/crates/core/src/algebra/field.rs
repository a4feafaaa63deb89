use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact field arithmetic. Elements build their own zero and one because
/// number-field elements carry their field with them.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    /// Multiplicative inverse of a nonzero element.
    fn recip(&self) -> Self {
        self.one_like() / self.clone()
    }
}

/// A field with an involution, used for hermitian forms.
pub trait Involutive: Field {
    fn conj(&self) -> Self;
}

impl Field for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }

    fn one_like(&self) -> Self {
        BigRational::one()
    }

    fn vanishes(&self) -> bool {
        self.is_zero()
    }

    fn recip(&self) -> Self {
        num_traits::Inv::inv(self.clone())
    }
}

impl Involutive for BigRational {
    fn conj(&self) -> Self {
        self.clone()
    }
}
