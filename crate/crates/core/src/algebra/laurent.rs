use std::fmt;

use num_bigint::BigInt;

use super::poly::RatPoly;

/// A Laurent polynomial up to units of Q[t, t^-1]: stored as an
/// integer-primitive polynomial with positive leading coefficient and
/// nonzero constant term, or zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    poly: RatPoly,
    shift: usize,
}

impl LaurentPoly {
    pub fn normalize(p: &RatPoly) -> Self {
        if p.is_zero() {
            return LaurentPoly { poly: RatPoly::zero(), shift: 0 };
        }
        let shift = p.low_order();
        LaurentPoly { poly: p.strip_t().normalized_integer(), shift }
    }

    pub fn zero() -> Self {
        LaurentPoly { poly: RatPoly::zero(), shift: 0 }
    }

    pub fn one() -> Self {
        LaurentPoly { poly: RatPoly::one(), shift: 0 }
    }

    pub fn poly(&self) -> &RatPoly {
        &self.poly
    }

    /// Power of t divided out during normalization.
    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.poly.is_one()
    }

    /// Degree of the normalized polynomial (span of the Laurent polynomial).
    pub fn degree(&self) -> Option<usize> {
        self.poly.degree()
    }

    pub fn int_coeffs(&self) -> Vec<BigInt> {
        self.poly.primitive_integer()
    }

    /// Equality up to units.
    pub fn equivalent(a: &RatPoly, b: &RatPoly) -> bool {
        Self::normalize(a).poly == Self::normalize(b).poly
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_removes_units() {
        let p = RatPoly::from_ints(&[0, 0, -2, 2, -2]);
        let l = LaurentPoly::normalize(&p);
        assert_eq!(l.poly(), &RatPoly::from_ints(&[1, -1, 1]));
        assert_eq!(l.shift(), 2);
        assert!(LaurentPoly::equivalent(&p, &RatPoly::from_ints(&[1, -1, 1])));
        assert!(LaurentPoly::normalize(&RatPoly::zero()).is_zero());
        assert!(LaurentPoly::normalize(&RatPoly::from_ints(&[0, -3])).is_unit());
    }
}
