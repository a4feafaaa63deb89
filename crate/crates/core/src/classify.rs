//! Signs of unit-circle Jordan blocks, the H-number table and its transforms.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::bigcomplex::{bf_cmp, bf_from_f64, bf_pow2, bf_to_f64, RM};
use crate::algebra::hermitian::{hermitian_diagonal, hermitian_inertia};
use crate::algebra::roots::{CircleStatus, PRECISION_CEILING};
use crate::algebra::{BigComplex, Field, Involutive, Matrix, Nf, NumberField, RatMatrix};
use crate::error::{Error, Result};
use crate::jordan::{jordan_of_matrix, EigenInfo, EigenKey, JordanData};
use crate::seifert::VariationStructure;

/// The sign u ∈ {+1, −1} of a unit-circle block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Signature of the hermitian form induced on U^(k)/U^(k−1) at λ.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivariantSignature {
    pub key: EigenKey,
    pub k: usize,
    /// dim U^(k) = dim ker (h − λ)^k.
    pub kernel_dim: usize,
    /// dim U^(k)/U^(k−1), the number of blocks of size ≥ k.
    pub quotient_dim: usize,
    /// Signature of the i-normalized form. Only blocks of size exactly k
    /// contribute, larger blocks lie in its radical.
    pub signature: i64,
    /// Smallest |pivot| of the diagonalized form at λ; `None` when exact over Q.
    pub margin: Option<f64>,
    /// The two signs are forced to occur equally often (λ = 1 with k even,
    /// λ = −1 with k odd); no form is evaluated.
    pub forced: bool,
}

impl EquivariantSignature {
    /// p^k(+1) − p^k(−1).
    pub fn u_count(&self) -> i64 {
        if self.forced {
            0
        } else if self.key.is_one() {
            if (self.k + 1) / 2 % 2 == 0 {
                self.signature
            } else {
                -self.signature
            }
        } else {
            -self.signature
        }
    }
}

/// Numbers p^k_λ(u) and q^k_λ with s0_dim.
#[derive(Clone, Debug, Default)]
pub struct HNumbers {
    pub s0_dim: usize,
    /// (λ on the circle, k, u) ↦ p^k_λ(u); zero entries are omitted.
    pub p: BTreeMap<(EigenKey, usize, Sign), usize>,
    /// (λ with |λ| < 1, k) ↦ q^k_λ; zero entries are omitted.
    pub q: BTreeMap<(EigenKey, usize), usize>,
    pub classes: BTreeMap<EigenKey, EigenInfo>,
}

impl PartialEq for HNumbers {
    fn eq(&self, other: &Self) -> bool {
        self.s0_dim == other.s0_dim && self.p == other.p && self.q == other.q
    }
}

impl HNumbers {
    pub fn p(&self, key: &EigenKey, k: usize, u: Sign) -> usize {
        self.p.get(&(key.clone(), k, u)).copied().unwrap_or(0)
    }

    pub fn q(&self, key: &EigenKey, k: usize) -> usize {
        self.q.get(&(key.clone(), k)).copied().unwrap_or(0)
    }

    /// Σ k·p + 2·Σ k·q, the dimension of the nondegenerate part.
    pub fn dim(&self) -> usize {
        let p: usize = self.p.iter().map(|((_, k, _), c)| k * c).sum();
        let q: usize = self.q.iter().map(|((_, k), c)| k * c).sum();
        p + 2 * q
    }

    /// Number of blocks (of any size and sign) at an on-circle class.
    pub fn blocks_at(&self, key: &EigenKey) -> usize {
        self.p.iter().filter(|((l, _, _), _)| l == key).map(|(_, c)| c).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty() && self.q.is_empty() && self.s0_dim == 0
    }

    /// Violations of the conjugation symmetry p^k_λ(u) = p^k_λ̄((−1)^(k+s)·u),
    /// s = 1 iff λ = 1, and q^k_λ = q^k_λ̄.
    pub fn symmetry_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for ((key, k, u), c) in &self.p {
            let Some(info) = self.classes.get(key) else { continue };
            let s = usize::from(key.is_one());
            let v = if (k + s) % 2 == 0 { *u } else { u.flip() };
            let other = self.p(&info.conj, *k, v);
            if other != *c {
                out.push(format!("p^{}_{}({}) = {} but the conjugate class has {}", k, key, u, c, other));
            }
        }
        for ((key, k), c) in &self.q {
            let Some(info) = self.classes.get(key) else { continue };
            if self.q(&info.conj, *k) != *c {
                out.push(format!("q^{}_{} differs from its conjugate", k, key));
            }
        }
        out
    }
}

fn to_field(m: &RatMatrix, k: &Arc<NumberField>) -> Matrix<Nf> {
    m.map(|x| k.rational(x.clone()))
}

fn gram<T: Field>(left: &[Vec<T>], form: &Matrix<T>, right: &[Vec<T>], zero: &T) -> Matrix<T> {
    let mut data = Vec::with_capacity(left.len() * right.len());
    let images: Vec<Vec<T>> = right.iter().map(|y| form.mul_vec(y)).collect();
    for x in left {
        for y in &images {
            let mut acc = zero.clone();
            for (a, b) in x.iter().zip(y) {
                acc = acc + a.clone() * b.clone();
            }
            data.push(acc);
        }
    }
    Matrix::from_vec(left.len(), right.len(), data)
}

/// h, b and S restricted to the primary component ker f(h)^e. The kernel
/// basis B is the identity on its free rows (the last nonzero coordinate of
/// each vector), so h_W is read off from h·B.
fn primary_restriction(v: &VariationStructure, f: &crate::algebra::RatPoly, e: usize) -> (RatMatrix, RatMatrix, RatMatrix) {
    let n = v.dim();
    let basis = f.eval_matrix(&v.h).pow(e, &BigRational::one()).kernel();
    if basis.len() == n {
        return (v.h.clone(), v.b.clone(), v.s.clone());
    }
    let free: Vec<usize> = basis.iter().map(|x| x.iter().rposition(|c| !c.is_zero()).unwrap_or(0)).collect();
    let bm = RatMatrix::from_columns(&basis, n);
    let hb = &v.h * &bm;
    let cols: Vec<usize> = (0..basis.len()).collect();
    let h_w = hb.submatrix(&free, &cols);
    let bt = bm.transpose();
    (h_w, &(&bt * &v.b) * &bm, &(&bt * &v.s) * &bm)
}

fn rational_sign(x: &BigRational) -> Result<i8> {
    Ok(if x.is_positive() { 1 } else { -1 })
}

/// Sign of a self-conjugate field element at an on-circle root, with a
/// rigorous bound from the root's inclusion radius.
fn sign_at(x: &Nf, root: &EigenInfo) -> Result<(i8, f64)> {
    let p = root.value.precision();
    let v = x.eval(&root.value).re;
    let deg = x.field().degree().max(1) as f64;
    let l1 = x.l1_norm().max(1.0);
    let bound = root
        .radius
        .mul(&bf_from_f64(4.0 * deg * l1, p), p, RM)
        .add(&bf_pow2(16 - p as i32, p).mul(&bf_from_f64(l1 * deg, p), p, RM), p, RM);
    if bf_cmp(&v.abs(), &bound) != std::cmp::Ordering::Greater {
        return Err(Error::Indeterminate {
            precision: root.precision,
            what: format!("sign of a pivot at {}", root.key),
        });
    }
    Ok((if v.is_positive() { 1 } else { -1 }, bf_to_f64(&v.abs())))
}

/// sig(i·G₁) at a simple eigenvalue: G₁ is the 1×1 form xᵀ b x̄ on an
/// eigenvector x, computed in floating point at the root's precision with a
/// margin of 2^(−prec/2) relative to the data.
fn simple_root_signature(h: &RatMatrix, b: &RatMatrix, root: &EigenInfo) -> Result<(i64, f64)> {
    let n = h.rows();
    let p = root.value.precision();
    let mut a: Vec<Vec<BigComplex>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x = BigComplex::from_rational(&h[(i, j)], p);
                    if i == j {
                        x.sub(&root.value)
                    } else {
                        x
                    }
                })
                .collect()
        })
        .collect();
    // complete pivoting for n − 1 steps; the remaining column is free
    let mut col: Vec<usize> = (0..n).collect();
    for step in 0..n.saturating_sub(1) {
        let mut best = (step, step, bf_from_f64(-1.0, p));
        for i in step..n {
            for j in step..n {
                let v = a[i][j].abs();
                if bf_cmp(&v, &best.2) == std::cmp::Ordering::Greater {
                    best = (i, j, v);
                }
            }
        }
        a.swap(step, best.0);
        for row in a.iter_mut() {
            row.swap(step, best.1);
        }
        col.swap(step, best.1);
        let inv = a[step][step].recip();
        for i in step + 1..n {
            let f = a[i][step].mul(&inv);
            if f.is_zero() {
                continue;
            }
            for j in step..n {
                let v = a[i][j].sub(&f.mul(&a[step][j]));
                a[i][j] = v;
            }
        }
    }
    let mut y = vec![BigComplex::zero(p); n];
    if n > 0 {
        y[n - 1] = BigComplex::one(p);
    }
    for i in (0..n.saturating_sub(1)).rev() {
        let mut acc = BigComplex::zero(p);
        for j in i + 1..n {
            acc = acc.add(&a[i][j].mul(&y[j]));
        }
        y[i] = acc.neg().div(&a[i][i]);
    }
    let mut x = vec![BigComplex::zero(p); n];
    for (k, &c) in col.iter().enumerate() {
        x[c] = y[k].clone();
    }
    let mut scale = bf_from_f64(0.0, p);
    for c in &x {
        let v = c.abs();
        if bf_cmp(&v, &scale) == std::cmp::Ordering::Greater {
            scale = v;
        }
    }
    let s_inv = BigComplex::from_real(scale, p).recip();
    let x: Vec<BigComplex> = x.iter().map(|c| c.mul(&s_inv)).collect();
    let mut g = BigComplex::zero(p);
    let mut norm = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            if b[(i, j)].is_zero() {
                continue;
            }
            norm += crate::algebra::rational_to_f64(&b[(i, j)]).abs();
            g = g.add(&x[i].mul(&x[j].conj()).mul(&BigComplex::from_rational(&b[(i, j)], p)));
        }
    }
    // Re(i·g) = −Im(g)
    let w = g.im.neg();
    let bound = bf_pow2(-(p as i32) / 2, p).mul(&bf_from_f64(10.0 * norm.max(1.0) * n as f64, p), p, RM);
    if bf_cmp(&w.abs(), &bound) != std::cmp::Ordering::Greater {
        return Err(Error::Indeterminate { precision: p, what: format!("equivariant form at {}", root.key) });
    }
    Ok((if w.is_positive() { 1 } else { -1 }, bf_to_f64(&w.abs())))
}

/// Equivariant signatures of every on-circle class, escalating precision when a
/// pivot sign cannot be certified.
pub fn equivariant_signatures(
    v: &VariationStructure,
    jordan: &JordanData,
    precision: usize,
) -> Result<Vec<EquivariantSignature>> {
    let mut p = precision.max(jordan.precision());
    let mut refined;
    let mut data = jordan;
    loop {
        match signatures_at(v, data) {
            Err(Error::Indeterminate { .. }) if p * 2 <= PRECISION_CEILING => {
                p *= 2;
                refined = jordan_of_matrix(&v.h, p)?;
                data = &refined;
            }
            other => return other,
        }
    }
}

fn signatures_at(v: &VariationStructure, jordan: &JordanData) -> Result<Vec<EquivariantSignature>> {
    let mut out = Vec::new();
    for fj in &jordan.factors {
        let on: Vec<&EigenInfo> = fj.roots.iter().filter(|r| r.status == CircleStatus::On).collect();
        if on.is_empty() {
            continue;
        }
        let part = &fj.partition;
        let entry = |key: &EigenKey, k: usize, signature: i64, margin: Option<f64>, forced: bool| EquivariantSignature {
            key: key.clone(),
            k,
            kernel_dim: part.dimker.get(k).copied().unwrap_or(0),
            quotient_dim: part.dimker.get(k).copied().unwrap_or(0) - part.dimker[k - 1],
            signature,
            margin,
            forced,
        };
        let (h, b, seif) = primary_restriction(v, &fj.factor, part.max_size());
        let n = h.rows();
        if fj.factor.degree() == Some(1) {
            let key = &on[0].key;
            let one_root = key.is_one();
            let lam = if one_root { BigRational::one() } else { -BigRational::one() };
            let nm = &h - &RatMatrix::identity(n).scale(&lam);
            let mut prev = RatMatrix::identity(n);
            for k in 1..=part.max_size() {
                let cur = &prev * &nm;
                if part.s(k) > 0 {
                    let forced = (one_root && k % 2 == 0) || (!one_root && k % 2 == 1);
                    if forced {
                        out.push(entry(key, k, 0, None, true));
                    } else {
                        let ker = cur.kernel();
                        let zero = BigRational::zero();
                        let form = if one_root {
                            let q = gram(&ker, &(&seif * &prev), &ker, &zero);
                            let half = BigRational::new(1.into(), 2.into());
                            (&q + &q.transpose()).scale(&half)
                        } else {
                            // λ^(1−k) = −1 for even k; then i^k = (−1)^(k/2)
                            let sign = if (k / 2) % 2 == 0 { -1 } else { 1 };
                            gram(&ker, &(&b * &prev), &ker, &zero).scale(&BigRational::from_integer(sign.into()))
                        };
                        let inertia = hermitian_inertia(&form, None, rational_sign)?;
                        out.push(entry(key, k, inertia.signature(), None, false));
                    }
                }
                prev = cur;
            }
            continue;
        }
        if fj.multiplicity == 1 {
            for root in &on {
                let (sig, margin) = simple_root_signature(&h, &b, root)?;
                out.push(entry(&root.key, 1, sig, Some(margin), false));
            }
            continue;
        }
        let field = NumberField::new(&fj.factor)?;
        let t = field.gen();
        let t_inv = t.inv();
        let omega = t.clone() - t_inv.clone();
        let zero = field.zero();
        let hk = to_field(&h, &field);
        let bk = to_field(&b, &field);
        let nm = &hk - &Matrix::identity_like(n, &zero).scale(&t);
        let mut prev = Matrix::identity_like(n, &zero);
        let mut t_pow = field.one();
        for k in 1..=part.max_size() {
            let cur = &prev * &nm;
            if part.s(k) > 0 {
                let ker = cur.kernel();
                let images: Vec<Vec<Nf>> = ker
                    .iter()
                    .map(|y| prev.mul_vec(y).into_iter().map(|e| (t_pow.clone() * e).conj()).collect())
                    .collect();
                let g = gram(&ker, &bk, &images, &zero);
                let form = if k % 2 == 0 {
                    let s = if (k / 2) % 2 == 0 { 1 } else { -1 };
                    g.scale(&field.rational(BigRational::from_integer(s.into())))
                } else {
                    g.scale(&omega)
                };
                let (pivots, _) = hermitian_diagonal(&form, Some(&omega))?;
                for root in &on {
                    let mut sig = 0i64;
                    let mut margin = f64::INFINITY;
                    for d in &pivots {
                        let (s, m) = sign_at(d, root)?;
                        sig += s as i64;
                        margin = margin.min(m);
                    }
                    if k % 2 == 1 {
                        let im_sign = if root.value.im.is_positive() { 1 } else { -1 };
                        let i_sign = if (k - 1) / 2 % 2 == 0 { 1 } else { -1 };
                        sig *= im_sign * i_sign;
                    }
                    out.push(entry(&root.key, k, sig, Some(margin), false));
                }
            }
            t_pow = t_pow * t_inv.clone();
            prev = cur;
        }
    }
    Ok(out)
}

/// Assemble the H-number table from Jordan data and equivariant signatures.
pub fn h_numbers(s0_dim: usize, jordan: &JordanData, eqsig: &[EquivariantSignature]) -> Result<HNumbers> {
    let mut hn = HNumbers { s0_dim, ..HNumbers::default() };
    for fj in &jordan.factors {
        for root in &fj.roots {
            hn.classes.insert(root.key.clone(), root.clone());
            match root.status {
                CircleStatus::Inside => {
                    for (&k, &c) in &fj.partition.sizes {
                        hn.q.insert((root.key.clone(), k), c);
                    }
                }
                CircleStatus::On => {
                    for (&k, &c) in &fj.partition.sizes {
                        let sig = eqsig.iter().find(|e| e.key == root.key && e.k == k).ok_or_else(|| {
                            Error::Consistency(format!("no equivariant signature for {} at k = {}", root.key, k))
                        })?;
                        let d = sig.u_count();
                        let c = c as i64;
                        if (c + d) % 2 != 0 || d.abs() > c {
                            return Err(Error::Consistency(format!(
                                "sign count {} incompatible with {} blocks of size {} at {}",
                                d, c, k, root.key
                            )));
                        }
                        for (u, n) in [(Sign::Plus, (c + d) / 2), (Sign::Minus, (c - d) / 2)] {
                            if n > 0 {
                                hn.p.insert((root.key.clone(), k, u), n as usize);
                            }
                        }
                    }
                }
                CircleStatus::Outside => {}
                CircleStatus::Undecided => {
                    return Err(Error::Indeterminate {
                        precision: root.precision,
                        what: format!("unit-circle placement of {}", root.key),
                    })
                }
            }
        }
    }
    if hn.dim() != jordan.dim {
        return Err(Error::Consistency(format!(
            "H-numbers account for dimension {} instead of {}",
            hn.dim(),
            jordan.dim
        )));
    }
    Ok(hn)
}

/// Full classification of a variation structure.
pub fn classify(v: &VariationStructure, s0_dim: usize, precision: usize) -> Result<HNumbers> {
    let jordan = jordan_of_matrix(&v.h, precision)?;
    let eqsig = equivariant_signatures(v, &jordan, precision)?;
    h_numbers(s0_dim, &jordan, &eqsig)
}

/// H-numbers of the mirror link: u ↦ −u on the circle.
pub fn transform_mirror(hn: &HNumbers) -> HNumbers {
    let mut out = hn.clone();
    out.p = hn.p.iter().map(|((l, k, u), c)| ((l.clone(), *k, u.flip()), *c)).collect();
    out
}

/// H-numbers of the reversed link, which are the same.
pub fn transform_reverse(hn: &HNumbers) -> HNumbers {
    hn.clone()
}

pub fn connected_sum(a: &HNumbers, b: &HNumbers) -> HNumbers {
    let mut out = a.clone();
    out.s0_dim += b.s0_dim;
    for (key, c) in &b.p {
        *out.p.entry(key.clone()).or_insert(0) += c;
    }
    for (key, c) in &b.q {
        *out.q.entry(key.clone()).or_insert(0) += c;
    }
    for (key, info) in &b.classes {
        out.classes.entry(key.clone()).or_insert_with(|| info.clone());
    }
    out
}

/// A violated necessary condition for the link to be algebraic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    OffCircle { key: EigenKey, k: usize },
    NotRootOfUnity { key: EigenKey },
    LargeBlock { key: EigenKey, k: usize },
    LargeBlockAtOne { k: usize },
    NegativeSizeTwo { key: EigenKey },
    NegativeAtOne,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::OffCircle { key, k } => write!(f, "q^{}_{} != 0", k, key),
            Obstruction::NotRootOfUnity { key } => write!(f, "eigenvalue {} is not a root of unity", key),
            Obstruction::LargeBlock { key, k } => write!(f, "k > 2 for lambda != 1: block of size {} at {}", k, key),
            Obstruction::LargeBlockAtOne { k } => write!(f, "k > 1 for lambda = 1: block of size {}", k),
            Obstruction::NegativeSizeTwo { key } => write!(f, "p^2_{}(-1) != 0", key),
            Obstruction::NegativeAtOne => write!(f, "p^1_1(-1) != 0"),
        }
    }
}

/// Every violated necessary condition for algebraicity. An empty list is not a
/// proof that the link is algebraic.
pub fn algebraicity_obstructions(hn: &HNumbers) -> Vec<Obstruction> {
    let mut out = Vec::new();
    for (key, k) in hn.q.keys() {
        out.push(Obstruction::OffCircle { key: key.clone(), k: *k });
    }
    let mut seen = std::collections::BTreeSet::new();
    for (key, k, u) in hn.p.keys() {
        let unity = hn.classes.get(key).map_or(true, |c| c.unity_order.is_some());
        if !unity && seen.insert(key.clone()) {
            out.push(Obstruction::NotRootOfUnity { key: key.clone() });
        }
        if key.is_one() {
            if *k > 1 {
                out.push(Obstruction::LargeBlockAtOne { k: *k });
            } else if *u == Sign::Minus {
                out.push(Obstruction::NegativeAtOne);
            }
        } else if *k > 2 {
            out.push(Obstruction::LargeBlock { key: key.clone(), k: *k });
        } else if *k == 2 && *u == Sign::Minus {
            out.push(Obstruction::NegativeSizeTwo { key: key.clone() });
        }
    }
    out.dedup();
    out
}
