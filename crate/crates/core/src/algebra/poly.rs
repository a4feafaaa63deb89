use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::RatMatrix;

/// Univariate polynomial over the rationals, coefficients lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `t - c`
    pub fn linear_root(c: BigRational) -> Self {
        Self::new(vec![-c, BigRational::one()])
    }

    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        self.scale(&(BigRational::one() / lc))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &RatMatrix) -> RatMatrix {
        let n = m.rows();
        let mut acc = RatMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * m;
            for i in 0..n {
                acc[(i, i)] = &acc[(i, i)] + c;
            }
        }
        acc
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Division with remainder. Panics when `d` is zero.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] = &r[i + j] - &c * dc;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &RatPoly) -> RatPoly {
        self.div_rem(d).1
    }

    /// Exact quotient; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &RatPoly) -> Option<RatPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &RatPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Extended gcd: returns (g, s, u) with s·a + u·b = g, g monic.
    pub fn xgcd(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut u0, mut u1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let u = &u0 - &(&q * &u1);
            u0 = std::mem::replace(&mut u1, u);
        }
        if r0.is_zero() {
            return (r0, s0, u0);
        }
        let inv = BigRational::one() / r0.leading();
        (r0.scale(&inv), s0.scale(&inv), u0.scale(&inv))
    }

    /// `t^deg · p(1/t)`.
    pub fn reversed(&self) -> RatPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// Order of vanishing at t = 0.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Drops the factor `t^k`, k = low_order.
    pub fn strip_t(&self) -> RatPoly {
        Self::new(self.coeffs[self.low_order().min(self.coeffs.len())..].to_vec())
    }

    /// `f(t) = ± t^deg f(1/t)` with nonzero constant term.
    pub fn is_self_reciprocal(&self) -> bool {
        if self.is_zero() || self.coeffs[0].is_zero() {
            return false;
        }
        let r = self.reversed();
        r == *self || r == -self
    }

    /// Integer-primitive representative with positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if ints.last().map_or(false, |c| c.is_negative()) {
            g = -g;
        }
        ints.into_iter().map(|c| c / &g).collect()
    }

    pub fn normalized_integer(&self) -> RatPoly {
        Self::from_bigints(&self.primitive_integer())
    }

    /// Composition `self(g(t))`.
    pub fn compose(&self, g: &RatPoly) -> RatPoly {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }
}

impl Ord for RatPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for RatPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;

    fn add(self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;

    fn sub(self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;

    fn mul(self, o: &RatPoly) -> RatPoly {
        if self.is_zero() || o.is_zero() {
            return RatPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = &c[i + j] + a * b;
            }
        }
        RatPoly::new(c)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;

    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, o: RatPoly) -> RatPoly {
                (&self).$m(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for RatPoly {
    type Output = RatPoly;

    fn neg(self) -> RatPoly {
        -&self
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{}", a)?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{}", i)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[1, -4, 10, -16, 19, -16, 10, -4, 1]);
        let b = p(&[1, -1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.is_zero());
        assert_eq!(q, p(&[1, -3, 6, -7, 6, -3, 1]));
    }

    #[test]
    fn gcd_and_xgcd() {
        let a = &p(&[-1, 1]) * &p(&[1, -1, 1]);
        let b = &p(&[1, 1]) * &p(&[1, -1, 1]);
        assert_eq!(RatPoly::gcd(&a, &b), p(&[1, -1, 1]));
        let (g, s, u) = RatPoly::xgcd(&a, &b);
        assert_eq!(&(&s * &a) + &(&u * &b), g);
        assert!(RatPoly::gcd(&RatPoly::zero(), &RatPoly::zero()).is_zero());
    }

    #[test]
    fn self_reciprocal_and_primitive() {
        assert!(p(&[1, -1, 1]).is_self_reciprocal());
        assert!(p(&[-1, 0, 1]).is_self_reciprocal());
        assert!(!p(&[-2, 1]).is_self_reciprocal());
        let q = RatPoly::new(vec![
            BigRational::new((-1).into(), 2.into()),
            BigRational::new(1.into(), 3.into()),
        ]);
        assert_eq!(q.primitive_integer(), vec![BigInt::from(-3), BigInt::from(2)]);
        assert_eq!(p(&[2, -4]).primitive_integer(), vec![BigInt::from(-1), BigInt::from(2)]);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -1, 1]).to_string(), "t^2 - t + 1");
        assert_eq!(p(&[-3, 0, 2]).to_string(), "2t^2 - 3");
        assert_eq!(RatPoly::zero().to_string(), "0");
    }

    #[test]
    fn strip_and_compose() {
        assert_eq!(p(&[0, 0, 1, 2]).strip_t(), p(&[1, 2]));
        assert_eq!(p(&[1, 0, 1]).compose(&p(&[1, 1])), p(&[2, 2, 1]));
    }
}
