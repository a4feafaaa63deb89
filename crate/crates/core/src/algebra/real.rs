use std::cmp::Ordering;
use std::fmt;

use astro_float::BigFloat;
use num_rational::BigRational;
use num_traits::Signed;

use super::bigcomplex::{bf_cmp, bf_exponent, bf_fixed, bf_from_rational, bf_to_f64, RM};

/// Relative tolerance below which an approximate value is not ordered
/// against another value.
pub const BOUNDARY_TOLERANCE_BITS: i32 = 64;

/// A real number, exact when rational and otherwise a high-precision value.
#[derive(Clone)]
pub enum Real {
    Exact(BigRational),
    Approx(BigFloat),
}

impl Real {
    pub fn int(k: i64) -> Self {
        Real::Exact(BigRational::from_integer(k.into()))
    }

    fn as_float(&self, p: usize) -> BigFloat {
        match self {
            Real::Exact(q) => bf_from_rational(q, p),
            Real::Approx(x) => x.clone(),
        }
    }

    fn precision(&self) -> usize {
        match self {
            Real::Exact(_) => 256,
            Real::Approx(x) => x.precision().unwrap_or(256).max(128),
        }
    }

    /// Ordering, or `None` when an approximate operand lies within 2^-64
    /// (relative) of the other one.
    pub fn try_cmp(&self, other: &Real) -> Option<Ordering> {
        if let (Real::Exact(a), Real::Exact(b)) = (self, other) {
            return Some(a.cmp(b));
        }
        let p = self.precision().max(other.precision());
        let a = self.as_float(p);
        let b = other.as_float(p);
        let d = a.sub(&b, p, RM);
        let scale = bf_exponent(&a.abs()).unwrap_or(0).max(bf_exponent(&b.abs()).unwrap_or(0)).max(0);
        match bf_exponent(&d) {
            None => None,
            Some(e) if e <= scale - BOUNDARY_TOLERANCE_BITS => None,
            Some(_) => Some(bf_cmp(&a, &b)),
        }
    }

    pub fn cmp_rational(&self, x: &BigRational) -> Option<Ordering> {
        self.try_cmp(&Real::Exact(x.clone()))
    }

    /// Equal when exact and identical, or approximately equal within tolerance.
    pub fn close_to(&self, other: &Real) -> bool {
        self.try_cmp(other).map_or(true, |o| o == Ordering::Equal)
    }

    /// `k + s·self` for s = ±1.
    pub fn affine(&self, k: i64, s: i64) -> Real {
        match self {
            Real::Exact(q) => Real::Exact(BigRational::from_integer(k.into()) + q * BigRational::from_integer(s.into())),
            Real::Approx(x) => {
                let p = x.precision().unwrap_or(256);
                let y = if s < 0 { x.neg() } else { x.clone() };
                Real::Approx(y.add(&BigFloat::from_i64(k, p), p, RM))
            }
        }
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, Real::Exact(q) if q.is_integer())
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Real::Exact(_))
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Real::Exact(q) => q.is_positive(),
            Real::Approx(x) => x.is_positive() && !x.is_zero(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Exact(q) => super::rational_to_f64(q),
            Real::Approx(x) => bf_to_f64(x),
        }
    }

    /// `p/q` for exact values, a fixed-point decimal otherwise.
    pub fn render(&self, digits: usize) -> String {
        match self {
            Real::Exact(q) => q.to_string(),
            Real::Approx(x) => bf_fixed(x, digits),
        }
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(20))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_and_approx_ordering() {
        let a = Real::Exact(BigRational::new(5.into(), 6.into()));
        let b = Real::Approx(bf_from_rational(&BigRational::new(5.into(), 6.into()), 256));
        assert_eq!(a.try_cmp(&b), None);
        assert!(a.close_to(&b));
        let c = Real::Approx(BigFloat::from_f64(0.5, 256));
        assert_eq!(c.try_cmp(&a), Some(Ordering::Less));
        assert_eq!(a.affine(2, -1).render(0), "7/6");
        assert_eq!(c.affine(1, 1).render(3), "1.500");
    }
}
