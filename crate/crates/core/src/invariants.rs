//! Tristram–Levine signatures, higher Alexander polynomials and the rational
//! Nakanishi index, each by two routes.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::bigcomplex::{bf_cmp, bf_pow2, RM};
use crate::algebra::hermitian::{hermitian_diagonal, hermitian_inertia, numeric_inertia};
use crate::algebra::polymat::{determinantal_divisor, invariant_factors, seifert_pencil, PolyMatrix};
use crate::algebra::roots::PRECISION_CEILING;
use crate::algebra::{BigComplex, Involutive, LaurentPoly, Matrix, NumberField, RatMatrix, RatPoly, Real};
use crate::classify::HNumbers;
use crate::error::{Error, Result};
use crate::jordan::{cyclotomic, EigenKey, JordanData};
use crate::seifert::SeifertMatrix;

/// Largest degree [Q(ζ):Q] handled by exact cyclotomic arithmetic.
pub const EXACT_CYCLOTOMIC_DEGREE: usize = 24;

/// Above this degree a form certified nonsingular takes the numeric route.
pub const EXACT_NONSINGULAR_DEGREE: usize = 8;

/// A point ζ = e^{2πi·turn} of the unit circle.
#[derive(Clone, Debug)]
pub struct Zeta {
    pub turn: Real,
}

impl Zeta {
    /// e^{2πi·a/b}, reduced to a turn in [0, 1).
    pub fn root_of_unity(a: i64, b: i64) -> Result<Self> {
        if b == 0 {
            return Err(Error::Domain("zero denominator in a root of unity".into()));
        }
        let q = BigRational::new(a.into(), b.into());
        Ok(Zeta { turn: Real::Exact(&q - q.floor()) })
    }

    pub fn from_turn(turn: Real) -> Self {
        let turn = match turn {
            Real::Exact(q) => Real::Exact(&q - q.floor()),
            other => other,
        };
        Zeta { turn }
    }

    pub fn conj(&self) -> Self {
        Zeta::from_turn(self.turn.affine(1, -1))
    }

    fn is_one(&self) -> bool {
        match &self.turn {
            Real::Exact(q) => q.is_zero(),
            Real::Approx(_) => {
                self.turn.try_cmp(&Real::int(0)).map_or(true, |o| o == Ordering::Equal)
                    || self.turn.try_cmp(&Real::int(1)).map_or(true, |o| o == Ordering::Equal)
            }
        }
    }

    fn value(&self, prec: usize) -> BigComplex {
        match &self.turn {
            Real::Exact(q) => BigComplex::exp_two_pi_i(q, prec),
            Real::Approx(x) => {
                let two_pi = crate::algebra::bigcomplex::bf_pi(prec).mul(&astro_float::BigFloat::from_word(2, prec), prec, RM);
                let a = x.mul(&two_pi, prec, RM);
                crate::algebra::bigcomplex::with_consts(|cc| {
                    BigComplex::new(a.cos(prec, RM, cc), a.sin(prec, RM, cc), prec)
                })
            }
        }
    }
}

impl fmt::Display for Zeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp(2πi·{})", self.turn.render(20))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureSample {
    pub sigma: i64,
    /// Nullity including the dim S₀ correction.
    pub nullity: usize,
    /// Nullity of the nondegenerate part alone, when known.
    pub nullity_ndeg: Option<usize>,
    /// Computed exactly rather than with certified numerics.
    pub exact: bool,
}

fn cyclotomic_degree(b: &BigInt) -> Option<usize> {
    let b = b.to_u64()?;
    if b > 4 * EXACT_CYCLOTOMIC_DEGREE as u64 * EXACT_CYCLOTOMIC_DEGREE as u64 {
        return None;
    }
    let d = cyclotomic(b).degree()?;
    (d <= EXACT_CYCLOTOMIC_DEGREE).then_some(d)
}

/// σ and nullity of M_S(ζ) = (1−ζ)S + (1−ζ̄)Sᵀ.
pub fn tristram_levine_direct(s: &SeifertMatrix, zeta: &Zeta, precision: usize) -> Result<SignatureSample> {
    if zeta.is_one() {
        return Err(Error::Domain("the Tristram–Levine form is undefined at ζ = 1".into()));
    }
    let m = s.matrix();
    if m.rows() == 0 {
        return Ok(SignatureSample { sigma: 0, nullity: 0, nullity_ndeg: None, exact: true });
    }
    if let Real::Exact(q) = &zeta.turn {
        if let Some(d) = cyclotomic_degree(q.denom()) {
            if d <= EXACT_NONSINGULAR_DEGREE || !nonsingular_at(m, q.denom()) {
                return direct_exact(s, q, precision);
            }
            return direct_numeric_nonsingular(s, zeta, precision);
        }
    }
    let mut p = precision;
    loop {
        match direct_numeric(s, zeta, p) {
            Err(Error::Indeterminate { .. }) if p * 2 <= PRECISION_CEILING => p *= 2,
            other => return other,
        }
    }
}

/// det(Sᵀ − tS), interpolated from its values at t = 0, …, n.
pub fn pencil_determinant(m: &RatMatrix) -> RatPoly {
    let n = m.rows();
    let st = m.transpose();
    let mut acc = RatPoly::zero();
    for k in 0..=n {
        let tk = BigRational::from_integer(BigInt::from(k));
        let y = (&st - &m.scale(&tk)).det().expect("square");
        if y.is_zero() {
            continue;
        }
        let mut basis = RatPoly::constant(y);
        for j in (0..=n).filter(|&j| j != k) {
            let inv = BigRational::from_integer(BigInt::from(k as i64 - j as i64)).recip();
            let lin = RatPoly::new(vec![-BigRational::from_integer(BigInt::from(j)) * &inv, inv]);
            basis = &basis * &lin;
        }
        acc = &acc + &basis;
    }
    acc
}

/// Whether M_S(ζ) is nonsingular for ζ a primitive b-th root of unity:
/// M_S(ζ) = (1−ζ̄)(Sᵀ − ζS), and ζ is a root of det(Sᵀ − tS) iff Φ_b divides it.
fn nonsingular_at(m: &RatMatrix, b: &BigInt) -> bool {
    let p = pencil_determinant(m);
    let Some(b) = b.to_u64() else { return false };
    !p.is_zero() && !cyclotomic(b).divides(&p)
}

/// Numeric signature of a form known to be nonsingular; a zero pivot means
/// the precision was too low.
fn direct_numeric_nonsingular(s: &SeifertMatrix, zeta: &Zeta, precision: usize) -> Result<SignatureSample> {
    let mut p = precision;
    loop {
        match direct_numeric(s, zeta, p) {
            Ok(r) if r.nullity == 0 => return Ok(r),
            Ok(_) | Err(Error::Indeterminate { .. }) if p * 2 <= PRECISION_CEILING => p *= 2,
            Ok(_) => {
                return Err(Error::Indeterminate { precision: p, what: "pivot of a nonsingular form".into() })
            }
            other => return other,
        }
    }
}

fn direct_numeric(s: &SeifertMatrix, zeta: &Zeta, p: usize) -> Result<SignatureSample> {
    let m = s.matrix();
    let n = m.rows();
    let z = zeta.value(p + 32);
    let one = BigComplex::one(p + 32);
    let a = one.sub(&z);
    let ac = a.conj();
    let rows: Vec<Vec<BigComplex>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x = BigComplex::from_rational(&m[(i, j)], p + 32);
                    let y = BigComplex::from_rational(&m[(j, i)], p + 32);
                    a.mul(&x).add(&ac.mul(&y))
                })
                .collect()
        })
        .collect();
    let inertia = numeric_inertia(&rows, p)?;
    Ok(SignatureSample { sigma: inertia.signature(), nullity: inertia.zero, nullity_ndeg: None, exact: false })
}

fn direct_exact(s: &SeifertMatrix, q: &BigRational, precision: usize) -> Result<SignatureSample> {
    let m = s.matrix();
    let b = q.denom().to_u64().expect("small denominator");
    let a = q.numer().to_u64().expect("turn in [0, 1)");
    if b <= 2 {
        // ζ = −1: M = 2(S + Sᵀ)
        let form = m + &m.transpose();
        let inertia = hermitian_inertia(&form, None, |x: &BigRational| Ok(if x.is_positive() { 1 } else { -1 }))?;
        return Ok(SignatureSample { sigma: inertia.signature(), nullity: inertia.zero, nullity_ndeg: None, exact: true });
    }
    let field = NumberField::new(&cyclotomic(b))?;
    let t = field.gen();
    let mut zeta = field.one();
    for _ in 0..a {
        zeta = zeta * t.clone();
    }
    let c = field.one() - zeta;
    let cc = c.conj();
    let n = m.rows();
    let data = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| c.clone() * field.rational(m[(i, j)].clone()) + cc.clone() * field.rational(m[(j, i)].clone()))
        .collect();
    let form = Matrix::from_vec(n, n, data);
    let skew = t.clone() - t.inv();
    let (pivots, zero) = hermitian_diagonal(&form, Some(&skew))?;
    let mut sigma = 0i64;
    let mut p = precision;
    let mut root = BigComplex::exp_two_pi_i(&BigRational::new(1.into(), BigInt::from(b)), p + 32);
    for d in &pivots {
        loop {
            let v = d.eval(&root).re;
            let bound = bf_pow2(16 - p as i32, p).mul(
                &astro_float::BigFloat::from_f64(d.l1_norm().max(1.0) * (b as f64), p),
                p,
                RM,
            );
            if bf_cmp(&v.abs(), &bound) == Ordering::Greater {
                sigma += if v.is_positive() { 1 } else { -1 };
                break;
            }
            if p * 2 > PRECISION_CEILING {
                return Err(Error::Indeterminate { precision: p, what: "sign of a cyclotomic pivot".into() });
            }
            p *= 2;
            root = BigComplex::exp_two_pi_i(&BigRational::new(1.into(), BigInt::from(b)), p + 32);
        }
    }
    Ok(SignatureSample { sigma, nullity: zero, nullity_ndeg: None, exact: true })
}

/// Turn of an on-circle class in [0, 1).
fn class_turn(hn: &HNumbers, key: &EigenKey) -> Result<Real> {
    hn.classes
        .get(key)
        .map(|c| c.turn.clone())
        .ok_or_else(|| Error::Consistency(format!("no eigenvalue data for {}", key)))
}

/// σ(ζ) and n(ζ) read off the H-number table.
pub fn tristram_levine_from_h(hn: &HNumbers, zeta: &Zeta) -> Result<SignatureSample> {
    if zeta.is_one() {
        return Err(Error::Domain("the Tristram–Levine form is undefined at ζ = 1".into()));
    }
    let conj = zeta.conj();
    let mut sigma = 0i64;
    let mut nullity_ndeg = 0usize;
    for ((key, k, u), &c) in &hn.p {
        let c = c as i64;
        let uc = u.value() * c;
        if key.is_one() {
            if k % 2 == 1 {
                sigma -= uc;
            }
            continue;
        }
        let turn = class_turn(hn, key)?;
        let order = turn.try_cmp(&zeta.turn).ok_or_else(|| Error::Indeterminate {
            precision: hn.classes[key].precision,
            what: format!("whether {} equals ζ", key),
        })?;
        match (k % 2, order) {
            (1, Ordering::Less) => sigma -= uc,
            (1, Ordering::Greater) => sigma += uc,
            (0, Ordering::Equal) => sigma += uc,
            _ => {}
        }
        if turn.try_cmp(&conj.turn) == Some(Ordering::Equal) {
            nullity_ndeg += c as usize;
        }
    }
    Ok(SignatureSample {
        sigma,
        nullity: nullity_ndeg + hn.s0_dim,
        nullity_ndeg: Some(nullity_ndeg),
        exact: true,
    })
}

/// Multiplicity of a root, with +∞ for the zero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(usize),
    Infinite,
}

impl Order {
    pub fn of(p: &RatPoly, f: &RatPoly) -> Order {
        if p.is_zero() {
            return Order::Infinite;
        }
        let mut q = p.clone();
        let mut k = 0;
        while let Some(r) = q.div_exact(f) {
            q = r;
            k += 1;
        }
        Order::Finite(k)
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Order::Finite(k) => Some(k),
            Order::Infinite => None,
        }
    }
}

impl Add<usize> for Order {
    type Output = Order;

    fn add(self, rhs: usize) -> Order {
        match self {
            Order::Finite(k) => Order::Finite(k + rhs),
            Order::Infinite => Order::Infinite,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{}", k),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

/// Δ₀, Δ₁, … up to the first unit, with m₀ the index of the first nonzero entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderTower {
    pub polys: Vec<LaurentPoly>,
    pub m0: usize,
    /// Monic invariant factors of S − tSᵀ over Q[t].
    pub invariant_factors: Vec<RatPoly>,
    pub size: usize,
}

impl AlexanderTower {
    /// Δ_n for any n ≥ 0 (units past the stored range).
    pub fn delta(&self, n: usize) -> RatPoly {
        if n >= self.size {
            return RatPoly::one();
        }
        determinantal_divisor(&self.invariant_factors, self.size - n)
    }

    /// Order of the irreducible factor f in Δ_n.
    pub fn order(&self, n: usize, f: &RatPoly) -> Order {
        Order::of(&self.delta(n), f)
    }

    /// First nonzero Alexander polynomial Δ_{m₀}.
    pub fn first_nonzero(&self) -> &LaurentPoly {
        &self.polys[self.m0]
    }
}

pub fn alexander_tower(s: &SeifertMatrix) -> AlexanderTower {
    tower_of_pencil(&seifert_pencil(s.matrix()))
}

/// Tower of h − tI, i.e. of the nondegenerate part alone.
pub fn monodromy_tower(h: &RatMatrix) -> AlexanderTower {
    let n = h.rows();
    let pencil = Matrix::from_vec(
        n,
        n,
        (0..n * n)
            .map(|k| {
                let c = RatPoly::constant(h[(k / n, k % n)].clone());
                if k / n == k % n {
                    &c - &RatPoly::t()
                } else {
                    c
                }
            })
            .collect(),
    );
    tower_of_pencil(&pencil)
}

/// Δ₀, Δ₁, … of a square matrix over Q[t].
pub fn tower_of_pencil(pencil: &PolyMatrix) -> AlexanderTower {
    let size = pencil.rows();
    let factors = invariant_factors(pencil);
    let m0 = size - factors.len();
    let mut polys = Vec::new();
    for n in 0..=size {
        let d = if size - n > factors.len() { RatPoly::zero() } else { determinantal_divisor(&factors, size - n) };
        let l = LaurentPoly::normalize(&d);
        let unit = l.is_unit();
        polys.push(l);
        if unit {
            break;
        }
    }
    AlexanderTower { polys, m0, invariant_factors: factors, size }
}

/// I(n) = multiplicity of μ in Δ_n(h − tI), for n = 0, 1, … until it vanishes.
pub fn alexander_multiplicities_from_jordan(jordan: &JordanData, mu: &EigenKey) -> Vec<usize> {
    let Some(part) = jordan.partition_of(mu) else {
        return vec![0];
    };
    (0..=part.blocks()).map(|n| part.i_of(n)).collect()
}

/// n_Q = min{k : Δ_k ≡ 1}.
pub fn nakanishi_from_tower(tower: &AlexanderTower) -> usize {
    tower.polys.len() - 1
}

/// dim S₀ + max_λ r(λ) with the witnessing eigenvalue.
pub fn nakanishi_from_jordan(jordan: &JordanData, s0_dim: usize) -> (usize, Option<EigenKey>) {
    let best = jordan
        .factors
        .iter()
        .filter_map(|f| f.roots.first().map(|r| (f.partition.blocks(), r.key.clone())))
        .max_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
    match best {
        Some((r, key)) => (s0_dim + r, Some(key)),
        None => (s0_dim, None),
    }
}

/// Order of μ in every nonzero Δ_{n+m₀} against I(n).
pub fn tower_matches_jordan(tower: &AlexanderTower, jordan: &JordanData) -> Vec<String> {
    let mut out = Vec::new();
    for fj in &jordan.factors {
        let Some(root) = fj.roots.first() else { continue };
        let seq = alexander_multiplicities_from_jordan(jordan, &root.key);
        for n in 0..seq.len() + 1 {
            let expect = seq.get(n).copied().unwrap_or(0);
            let got = tower.order(n + tower.m0, &fj.factor);
            if got != Order::Finite(expect) {
                out.push(format!("ord of {} in Δ_{} is {} but I({}) = {}", fj.factor, n + tower.m0, got, n, expect));
            }
        }
    }
    for n in 0..tower.m0 {
        if !tower.delta(n).is_zero() {
            out.push(format!("Δ_{} should vanish below m₀ = {}", n, tower.m0));
        }
    }
    out
}
