use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bigcomplex::BigComplex;
use super::field::{Field, Involutive};
use super::poly::RatPoly;
use crate::error::{Error, Result};

/// Q[t]/(f) for an irreducible f, with the involution t -> 1/t when f is
/// self-reciprocal.
#[derive(Debug, PartialEq, Eq)]
pub struct NumberField {
    modulus: RatPoly,
    /// (1/t)^j mod f for j < deg f.
    inv_powers: Vec<RatPoly>,
    self_reciprocal: bool,
}

impl NumberField {
    pub fn new(f: &RatPoly) -> Result<Arc<Self>> {
        if f.degree().unwrap_or(0) == 0 {
            return Err(Error::Domain("number field modulus must have positive degree".into()));
        }
        let modulus = f.monic();
        let (g, s, _) = RatPoly::xgcd(&RatPoly::t(), &modulus);
        if !g.is_one() {
            return Err(Error::Domain("t is not invertible modulo the field polynomial".into()));
        }
        let inv_t = s.rem(&modulus);
        let mut inv_powers = vec![RatPoly::one()];
        for _ in 1..modulus.degree().unwrap_or(0) {
            let next = (inv_powers.last().expect("nonempty") * &inv_t).rem(&modulus);
            inv_powers.push(next);
        }
        Ok(Arc::new(NumberField {
            inv_powers,
            self_reciprocal: f.is_self_reciprocal(),
            modulus,
        }))
    }

    pub fn modulus(&self) -> &RatPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    pub fn has_involution(&self) -> bool {
        self.self_reciprocal
    }

    pub fn elem(self: &Arc<Self>, p: &RatPoly) -> Nf {
        Nf { field: Arc::clone(self), v: p.rem(&self.modulus) }
    }

    pub fn rational(self: &Arc<Self>, c: BigRational) -> Nf {
        self.elem(&RatPoly::constant(c))
    }

    /// The class of t.
    pub fn gen(self: &Arc<Self>) -> Nf {
        self.elem(&RatPoly::t())
    }

    pub fn zero(self: &Arc<Self>) -> Nf {
        Nf { field: Arc::clone(self), v: RatPoly::zero() }
    }

    pub fn one(self: &Arc<Self>) -> Nf {
        self.rational(BigRational::one())
    }
}

/// Element of a [`NumberField`].
#[derive(Clone)]
pub struct Nf {
    field: Arc<NumberField>,
    v: RatPoly,
}

impl Nf {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn repr(&self) -> &RatPoly {
        &self.v
    }

    pub fn inv(&self) -> Nf {
        let (g, s, _) = RatPoly::xgcd(&self.v, &self.field.modulus);
        assert!(g.is_one(), "inverse of zero in a number field");
        Nf { field: Arc::clone(&self.field), v: s.rem(&self.field.modulus) }
    }

    /// Value at an embedding t -> z.
    pub fn eval(&self, z: &BigComplex) -> BigComplex {
        let mut acc = BigComplex::zero(z.precision());
        for c in self.v.coeffs().iter().rev() {
            acc = acc.mul(z).add(&BigComplex::from_rational(c, z.precision()));
        }
        acc
    }

    /// Upper bound for |value| at any embedding on the unit circle.
    pub fn l1_norm(&self) -> f64 {
        self.v.coeffs().iter().map(|c| super::rational_to_f64(c).abs()).sum()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.v.is_constant().then(|| self.v.coeff(0))
    }
}

impl PartialEq for Nf {
    fn eq(&self, o: &Self) -> bool {
        self.v == o.v
    }
}

impl fmt::Debug for Nf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.v)
    }
}

impl Add for Nf {
    type Output = Nf;

    fn add(self, o: Nf) -> Nf {
        Nf { v: &self.v + &o.v, field: self.field }
    }
}

impl Sub for Nf {
    type Output = Nf;

    fn sub(self, o: Nf) -> Nf {
        Nf { v: &self.v - &o.v, field: self.field }
    }
}

impl Mul for Nf {
    type Output = Nf;

    fn mul(self, o: Nf) -> Nf {
        if self.v.is_zero() || o.v.is_zero() {
            return Nf { v: RatPoly::zero(), field: self.field };
        }
        let v = (&self.v * &o.v).rem(&self.field.modulus);
        Nf { v, field: self.field }
    }
}

impl Div for Nf {
    type Output = Nf;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Nf) -> Nf {
        self * o.inv()
    }
}

impl Neg for Nf {
    type Output = Nf;

    fn neg(self) -> Nf {
        Nf { v: -&self.v, field: self.field }
    }
}

impl Field for Nf {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }

    fn one_like(&self) -> Self {
        self.field.one()
    }

    fn vanishes(&self) -> bool {
        self.v.is_zero()
    }

    fn recip(&self) -> Self {
        self.inv()
    }
}

impl Involutive for Nf {
    /// t -> 1/t. Only meaningful when the modulus is self-reciprocal.
    fn conj(&self) -> Self {
        debug_assert!(self.field.self_reciprocal, "involution needs a self-reciprocal modulus");
        let mut acc = RatPoly::zero();
        for (c, p) in self.v.coeffs().iter().zip(&self.field.inv_powers) {
            if !c.is_zero() {
                acc = &acc + &p.scale(c);
            }
        }
        Nf { field: Arc::clone(&self.field), v: acc }
    }
}

impl Nf {
    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    pub fn from_rational(field: &Arc<NumberField>, c: i64) -> Nf {
        field.rational(BigRational::from_integer(c.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_in_sixth_roots() {
        let k = NumberField::new(&RatPoly::from_ints(&[1, -1, 1])).unwrap();
        let l = k.gen();
        // l^2 = l - 1, l^3 = -1
        assert_eq!(l.clone() * l.clone(), l.clone() - k.one());
        assert_eq!(l.clone() * l.clone() * l.clone(), -k.one());
        assert_eq!(l.clone() * l.inv(), k.one());
        // conj(l) = 1/l = 1 - l
        assert_eq!(l.conj(), k.one() - l.clone());
        let w = l.clone() - l.conj();
        assert_eq!(w.conj(), -w.clone());
        assert!((l.clone() + l.conj()).is_real());
    }
}
