use std::cmp::Ordering;

use astro_float::BigFloat;

use super::bigcomplex::{bf_cmp, bf_pow2, bf_zero, BigComplex, RM};
use super::field::Involutive;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Inertia of a hermitian form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }
}

/// Exact inertia by congruence diagonalization over a field with involution.
///
/// `sign` decides the sign of a nonzero self-conjugate element. `skew` must be
/// a nonzero element with conj(skew) = −skew whenever the involution is not
/// trivial; it is used when every remaining diagonal entry vanishes.
pub fn hermitian_inertia<T, F>(m: &Matrix<T>, skew: Option<&T>, mut sign: F) -> Result<Inertia>
where
    T: Involutive,
    F: FnMut(&T) -> Result<i8>,
{
    let (pivots, zero) = hermitian_diagonal(m, skew)?;
    let mut out = Inertia { zero, ..Inertia::default() };
    for d in &pivots {
        match sign(d)? {
            s if s > 0 => out.positive += 1,
            s if s < 0 => out.negative += 1,
            _ => return Err(Error::Consistency("nonzero pivot reported as zero".into())),
        }
    }
    Ok(out)
}

/// Nonzero diagonal entries of a congruence-diagonalized hermitian matrix and
/// the dimension of its radical.
pub fn hermitian_diagonal<T: Involutive>(m: &Matrix<T>, skew: Option<&T>) -> Result<(Vec<T>, usize)> {
    let n = m.rows();
    if !m.is_square() {
        return Err(Error::Dimension("hermitian form must be square".into()));
    }
    for i in 0..n {
        for j in i..n {
            if m[(j, i)] != m[(i, j)].conj() {
                return Err(Error::Consistency(format!("form is not hermitian at ({}, {})", i, j)));
            }
        }
    }
    let mut a = m.clone();
    let mut active: Vec<usize> = (0..n).collect();
    let mut pivots = Vec::new();
    while !active.is_empty() {
        let mut pivot = active.iter().copied().find(|&i| !a[(i, i)].vanishes());
        if pivot.is_none() {
            let pair = active
                .iter()
                .flat_map(|&i| active.iter().map(move |&l| (i, l)))
                .find(|&(i, l)| i != l && !a[(i, l)].vanishes());
            let Some((i, l)) = pair else {
                break;
            };
            let x = a[(i, l)].clone();
            let mut c = x.one_like();
            if (x.clone() + x.conj()).vanishes() {
                c = skew
                    .cloned()
                    .ok_or_else(|| Error::Consistency("skew-hermitian pair without a skew unit".into()))?;
            }
            add_multiple(&mut a, i, l, &c, n);
            pivot = Some(i);
        }
        let p = pivot.expect("pivot chosen");
        let d = a[(p, p)].clone();
        let d_inv = d.recip();
        active.retain(|&i| i != p);
        // Schur complement on the active block: a_jl ← a_jl − a_jp·d⁻¹·a_pl
        let scaled: Vec<T> = active.iter().map(|&l| d_inv.clone() * a[(p, l)].clone()).collect();
        for (x, &j) in active.iter().enumerate() {
            if a[(j, p)].vanishes() {
                continue;
            }
            let ajp = a[(j, p)].clone();
            for (y, &l) in active.iter().enumerate().skip(x) {
                if scaled[y].vanishes() {
                    continue;
                }
                let v = a[(j, l)].clone() - ajp.clone() * scaled[y].clone();
                if l != j {
                    a[(l, j)] = v.conj();
                }
                a[(j, l)] = v;
            }
        }
        for &j in &active {
            a[(j, p)] = d.zero_like();
            a[(p, j)] = d.zero_like();
        }
        pivots.push(d);
    }
    Ok((pivots, active.len()))
}

/// x_i ← x_i + c·x_l as a congruence: row_i += c·row_l, col_i += conj(c)·col_l.
fn add_multiple<T: Involutive>(a: &mut Matrix<T>, i: usize, l: usize, c: &T, n: usize) {
    for j in 0..n {
        let v = a[(i, j)].clone() + c.clone() * a[(l, j)].clone();
        a[(i, j)] = v;
    }
    let cc = c.conj();
    for j in 0..n {
        let v = a[(j, i)].clone() + a[(j, l)].clone() * cc.clone();
        a[(j, i)] = v;
    }
}

/// Inertia of a numerically given hermitian matrix. Entries below
/// 2^(−prec/2)·scale count as zero; pivots must clear ten times that, otherwise
/// the result is indeterminate at this precision.
pub fn numeric_inertia(m: &[Vec<BigComplex>], prec: usize) -> Result<Inertia> {
    let n = m.len();
    let mut a: Vec<Vec<BigComplex>> = m.to_vec();
    let lp = prec;
    let mut scale = bf_zero(lp);
    for row in &a {
        for x in row {
            let v = x.abs();
            if bf_cmp(&v, &scale) == Ordering::Greater {
                scale = v;
            }
        }
    }
    if scale.is_zero() {
        return Ok(Inertia { zero: n, ..Inertia::default() });
    }
    let tol = scale.mul(&bf_pow2(-(prec as i32) / 2, lp), lp, RM);
    let margin = tol.mul(&BigFloat::from_word(10, lp), lp, RM);
    let indeterminate = || Error::Indeterminate {
        precision: prec,
        what: "hermitian pivot too close to zero".into(),
    };
    let mut active: Vec<usize> = (0..n).collect();
    let mut out = Inertia::default();
    while !active.is_empty() {
        let (mut best, mut best_v) = (active[0], bf_zero(lp));
        for &i in &active {
            let v = a[i][i].re.abs();
            if bf_cmp(&v, &best_v) == Ordering::Greater {
                best = i;
                best_v = v;
            }
        }
        if bf_cmp(&best_v, &margin) != Ordering::Greater {
            if bf_cmp(&best_v, &tol) == Ordering::Greater {
                return Err(indeterminate());
            }
            let mut off = (0, 0, bf_zero(lp));
            for &i in &active {
                for &l in &active {
                    if i != l {
                        let v = a[i][l].abs();
                        if bf_cmp(&v, &off.2) == Ordering::Greater {
                            off = (i, l, v);
                        }
                    }
                }
            }
            if bf_cmp(&off.2, &tol) != Ordering::Greater {
                break;
            }
            if bf_cmp(&off.2, &margin) != Ordering::Greater {
                return Err(indeterminate());
            }
            let (i, l) = (off.0, off.1);
            let x = &a[l][i];
            let c = if bf_cmp(&x.re.abs(), &x.im.abs()) != Ordering::Less {
                BigComplex::one(prec)
            } else {
                BigComplex::from_f64(0.0, 1.0, prec)
            };
            numeric_add_multiple(&mut a, i, l, &c);
            best = i;
        }
        let d = a[best][best].re.clone();
        if bf_cmp(&d.abs(), &margin) != Ordering::Greater {
            return Err(indeterminate());
        }
        if d.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        active.retain(|&i| i != best);
        let dc = BigComplex::from_real(d, prec);
        for &j in &active {
            let f = a[j][best].div(&dc).neg();
            numeric_add_multiple(&mut a, j, best, &f);
        }
    }
    out.zero = active.len();
    Ok(out)
}

fn numeric_add_multiple(a: &mut [Vec<BigComplex>], i: usize, l: usize, c: &BigComplex) {
    let n = a.len();
    for j in 0..n {
        let v = a[i][j].add(&c.mul(&a[l][j]));
        a[i][j] = v;
    }
    let cc = c.conj();
    for j in 0..n {
        let v = a[j][i].add(&a[j][l].mul(&cc));
        a[j][i] = v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix::RatMatrix;
    use crate::algebra::numfield::NumberField;
    use crate::algebra::poly::RatPoly;
    use num_rational::BigRational;
    use num_traits::Signed;

    fn rsign(x: &BigRational) -> Result<i8> {
        Ok(if x.is_positive() { 1 } else { -1 })
    }

    #[test]
    fn rational_forms() {
        let m = RatMatrix::from_ints(&[[-2, -1], [-1, -2]]);
        let i = hermitian_inertia(&m, None, rsign).unwrap();
        assert_eq!((i.positive, i.negative, i.zero), (0, 2, 0));
        let h = RatMatrix::from_ints(&[[0, 1, 0], [1, 0, 0], [0, 0, 0]]);
        let i = hermitian_inertia(&h, None, rsign).unwrap();
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 1));
        assert!(hermitian_inertia(&RatMatrix::from_ints(&[[0, 1], [2, 0]]), None, rsign).is_err());
    }

    #[test]
    fn purely_imaginary_off_diagonal() {
        // [[0, ω], [−ω, 0]] with ω = t − 1/t in Q(e^{iπ/3}); eigenvalues ±|ω|
        let k = NumberField::new(&RatPoly::from_ints(&[1, -1, 1])).unwrap();
        let t = k.gen();
        let w = t.clone() - t.conj();
        let m = Matrix::from_vec(2, 2, vec![k.zero(), w.clone(), -w.clone(), k.zero()]);
        let lambda = BigComplex::exp_two_pi_i(&BigRational::new(1.into(), 6.into()), 128);
        let i = hermitian_inertia(&m, Some(&w), |x| {
            let v = x.eval(&lambda).re_f64();
            Ok(if v > 0.0 { 1 } else { -1 })
        })
        .unwrap();
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 0));
    }

    #[test]
    fn numeric_matches_exact() {
        let p = 128;
        let c = |re: f64, im: f64| BigComplex::from_f64(re, im, p);
        let m = vec![
            vec![c(0.0, 0.0), c(0.0, 1.0), c(1.0, 0.0)],
            vec![c(0.0, -1.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        ];
        let i = numeric_inertia(&m, p).unwrap();
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 1));
    }
}
