use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;

pub const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache allocation"));
}

pub(crate) fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

pub fn bf_zero(p: usize) -> BigFloat {
    BigFloat::from_word(0, p)
}

pub fn bf_from_f64(x: f64, p: usize) -> BigFloat {
    BigFloat::from_f64(x, p)
}

pub fn bf_from_bigint(n: &BigInt, p: usize) -> BigFloat {
    let (sign, digits) = n.to_u64_digits();
    let mut acc = bf_zero(p);
    for (i, d) in digits.iter().enumerate() {
        let mut t = BigFloat::from_word(*d as _, p);
        if t.is_zero() {
            continue;
        }
        if let Some(e) = t.exponent() {
            t.set_exponent(e + 64 * i as i32);
        }
        acc = acc.add(&t, p, RM);
    }
    if sign == num_bigint::Sign::Minus {
        acc = acc.neg();
    }
    acc
}

pub fn bf_from_rational(q: &BigRational, p: usize) -> BigFloat {
    let n = bf_from_bigint(q.numer(), p + 8);
    let d = bf_from_bigint(q.denom(), p + 8);
    n.div(&d, p, RM)
}

/// Nearest f64 (truncated mantissa); 0 for zero, saturates to ±inf.
pub fn bf_to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    match x.as_raw_parts() {
        Some((m, _, s, e, _)) => {
            let top = *m.last().unwrap_or(&0) as f64;
            let v = top * 2f64.powi(e - 64);
            if s == Sign::Neg {
                -v
            } else {
                v
            }
        }
        None => f64::NAN,
    }
}

/// Binary exponent e with 2^(e-1) <= |x| < 2^e; `None` for zero.
pub fn bf_exponent(x: &BigFloat) -> Option<i32> {
    if x.is_zero() {
        None
    } else {
        x.exponent()
    }
}

/// 2^e at precision p.
pub fn bf_pow2(e: i32, p: usize) -> BigFloat {
    let mut one = BigFloat::from_word(1, p);
    one.set_exponent(e + 1);
    one
}

pub fn bf_cmp(a: &BigFloat, b: &BigFloat) -> Ordering {
    match a.cmp(b) {
        Some(x) if x < 0 => Ordering::Less,
        Some(x) if x > 0 => Ordering::Greater,
        _ => Ordering::Equal,
    }
}

pub fn bf_pi(p: usize) -> BigFloat {
    with_consts(|cc| cc.pi(p, RM))
}

/// Fixed-point decimal with `digits` fractional digits, rounded half away from zero.
pub fn bf_fixed(x: &BigFloat, digits: usize) -> String {
    let p = x.precision().unwrap_or(64).max(64 + 4 * digits);
    let neg = x.is_negative();
    let mut a = x.abs();
    let mut half = BigFloat::from_word(5, p);
    for _ in 0..=digits {
        half = half.div(&BigFloat::from_word(10, p), p, RM);
    }
    a = a.add(&half, p, RM);
    let ip = a.int();
    let mut frac = a.sub(&ip, p, RM);
    let int_digits = bigint_of_int(&ip);
    let mut s = String::new();
    if neg && !(int_digits == BigInt::from(0) && frac_is_zero_to(&frac, digits, p)) {
        s.push('-');
    }
    s.push_str(&int_digits.to_string());
    if digits > 0 {
        s.push('.');
        let ten = BigFloat::from_word(10, p);
        for _ in 0..digits {
            frac = frac.mul(&ten, p, RM);
            let d = frac.int();
            let dv = bf_to_f64(&d) as u8;
            s.push((b'0' + dv.min(9)) as char);
            frac = frac.sub(&d, p, RM);
        }
    }
    s
}

fn frac_is_zero_to(frac: &BigFloat, digits: usize, p: usize) -> bool {
    let mut f = frac.clone();
    let ten = BigFloat::from_word(10, p);
    for _ in 0..digits {
        f = f.mul(&ten, p, RM);
    }
    bf_cmp(&f.int(), &bf_zero(p)) == Ordering::Equal
}

fn bigint_of_int(x: &BigFloat) -> BigInt {
    if x.is_zero() {
        return BigInt::from(0);
    }
    let e = x.exponent().unwrap_or(0);
    if e <= 53 {
        return BigInt::from(bf_to_f64(x) as i64);
    }
    let (m, _, _, _, _) = x.as_raw_parts().expect("finite value");
    let mut acc = BigInt::from(0);
    for w in m.iter().rev() {
        acc = (acc << 64) + BigInt::from(*w as u64);
    }
    let shift = 64 * m.len() as i64 - e as i64;
    if shift > 0 {
        acc >> shift as usize
    } else {
        acc << (-shift) as usize
    }
}

/// Complex number with explicit working precision in bits.
#[derive(Clone)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
    prec: usize,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat, prec: usize) -> Self {
        BigComplex { re, im, prec }
    }

    pub fn zero(prec: usize) -> Self {
        Self::new(bf_zero(prec), bf_zero(prec), prec)
    }

    pub fn one(prec: usize) -> Self {
        Self::new(BigFloat::from_word(1, prec), bf_zero(prec), prec)
    }

    pub fn from_f64(re: f64, im: f64, prec: usize) -> Self {
        Self::new(bf_from_f64(re, prec), bf_from_f64(im, prec), prec)
    }

    pub fn from_real(re: BigFloat, prec: usize) -> Self {
        Self::new(re, bf_zero(prec), prec)
    }

    pub fn from_rational(q: &BigRational, prec: usize) -> Self {
        Self::new(bf_from_rational(q, prec), bf_zero(prec), prec)
    }

    /// e^{2πi·q}.
    pub fn exp_two_pi_i(q: &BigRational, prec: usize) -> Self {
        let p = prec + 32;
        let two_pi = bf_pi(p).mul(&BigFloat::from_word(2, p), p, RM);
        let theta = two_pi.mul(&bf_from_rational(q, p), p, RM);
        let (c, s) = with_consts(|cc| (theta.cos(p, RM, cc), theta.sin(p, RM, cc)));
        Self::new(c, s, prec)
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn with_precision(&self, prec: usize) -> Self {
        Self::new(self.re.clone(), self.im.clone(), prec)
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec;
        Self::new(self.re.add(&o.re, p, RM), self.im.add(&o.im, p, RM), p)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.prec;
        Self::new(self.re.sub(&o.re, p, RM), self.im.sub(&o.im, p, RM), p)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec;
        let re = self.re.mul(&o.re, p, RM).sub(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.re.mul(&o.im, p, RM).add(&self.im.mul(&o.re, p, RM), p, RM);
        Self::new(re, im, p)
    }

    pub fn scale(&self, x: &BigFloat) -> Self {
        let p = self.prec;
        Self::new(self.re.mul(x, p, RM), self.im.mul(x, p, RM), p)
    }

    pub fn abs2(&self) -> BigFloat {
        let p = self.prec;
        self.re.mul(&self.re, p, RM).add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    pub fn abs(&self) -> BigFloat {
        self.abs2().sqrt(self.prec, RM)
    }

    pub fn recip(&self) -> Self {
        let p = self.prec;
        let d = self.abs2();
        Self::new(self.re.div(&d, p, RM), self.im.neg().div(&d, p, RM), p)
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.recip())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.re.neg(), self.im.neg(), self.prec)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), self.im.neg(), self.prec)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn re_f64(&self) -> f64 {
        bf_to_f64(&self.re)
    }

    pub fn im_f64(&self) -> f64 {
        bf_to_f64(&self.im)
    }

    /// Argument in (−π, π].
    pub fn arg(&self) -> BigFloat {
        let p = self.prec + 16;
        let pi = bf_pi(p);
        let zero = bf_zero(p);
        if self.re.is_zero() {
            let half = pi.div(&BigFloat::from_word(2, p), p, RM);
            return match bf_cmp(&self.im, &zero) {
                Ordering::Less => half.neg(),
                Ordering::Greater => half,
                Ordering::Equal => zero,
            };
        }
        let t = with_consts(|cc| self.im.div(&self.re, p, RM).atan(p, RM, cc));
        if self.re.is_positive() {
            t
        } else if self.im.is_negative() {
            t.sub(&pi, p, RM)
        } else {
            t.add(&pi, p, RM)
        }
    }

    /// arg/2π normalized to [0, 1).
    pub fn turn(&self) -> BigFloat {
        let p = self.prec + 16;
        let two_pi = bf_pi(p).mul(&BigFloat::from_word(2, p), p, RM);
        let t = self.arg().div(&two_pi, p, RM);
        if t.is_negative() {
            t.add(&BigFloat::from_word(1, p), p, RM)
        } else {
            t
        }
    }

    /// ln|z|.
    pub fn ln_abs(&self) -> BigFloat {
        let p = self.prec + 16;
        with_consts(|cc| self.abs().ln(p, RM, cc))
    }

    /// |self − o| <= tol.
    pub fn approx_eq(&self, o: &Self, tol: &BigFloat) -> bool {
        bf_cmp(&self.sub(o).abs(), tol) != Ordering::Greater
    }

    /// Decimal rendering with `digits` fractional digits per part.
    pub fn to_decimal(&self, digits: usize) -> String {
        let re = bf_fixed(&self.re, digits);
        let im = bf_fixed(&self.im, digits);
        match im.strip_prefix('-') {
            Some(rest) => format!("{} - {}i", re, rest),
            None => format!("{} + {}i", re, im),
        }
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(20))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_conversion_roundtrip() {
        let q = BigRational::new(BigInt::from(-7), BigInt::from(3));
        let x = bf_from_rational(&q, 128);
        assert!((bf_to_f64(&x) + 7.0 / 3.0).abs() < 1e-15);
        let big = BigInt::from(3u8).pow(100u32);
        let b = bf_from_bigint(&big, 256);
        assert_eq!(bigint_of_int(&b), big);
    }

    #[test]
    fn sixth_root_turn() {
        let z = BigComplex::exp_two_pi_i(&BigRational::new(5.into(), 6.into()), 256);
        let t = z.turn();
        let expect = bf_from_rational(&BigRational::new(5.into(), 6.into()), 256);
        let d = t.sub(&expect, 256, RM).abs();
        assert!(bf_exponent(&d).map_or(true, |e| e < -240));
        assert_eq!(bf_fixed(&z.re, 5), "0.50000");
        assert_eq!(bf_fixed(&z.im, 5), "-0.86603");
    }

    #[test]
    fn field_ops() {
        let a = BigComplex::from_f64(1.0, 2.0, 128);
        let b = BigComplex::from_f64(-3.0, 0.5, 128);
        let c = a.mul(&b).div(&b);
        assert!(c.approx_eq(&a, &bf_pow2(-100, 128)));
        assert_eq!(a.to_decimal(2), "1.00 + 2.00i");
        assert_eq!(b.conj().to_decimal(1), "-3.0 - 0.5i");
    }
}
