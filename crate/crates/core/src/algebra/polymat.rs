use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::{Matrix, RatMatrix};
use super::poly::RatPoly;

pub type PolyMatrix = Matrix<RatPoly>;

/// `S − t·Sᵀ`.
pub fn seifert_pencil(s: &RatMatrix) -> PolyMatrix {
    let st = s.transpose();
    let n = s.rows();
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            data.push(RatPoly::new(vec![s[(i, j)].clone(), -st[(i, j)].clone()]));
        }
    }
    Matrix::from_vec(n, n, data)
}

fn min_degree_entry(a: &PolyMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            if let Some(d) = a[(i, j)].degree() {
                if best.map_or(true, |b| d < b.2) {
                    best = Some((i, j, d));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn row_axpy(a: &mut PolyMatrix, dst: usize, src: usize, q: &RatPoly, from: usize) {
    for j in from..a.cols() {
        let v = &a[(dst, j)] - &(q * &a[(src, j)]);
        a[(dst, j)] = v;
    }
}

fn col_axpy(a: &mut PolyMatrix, dst: usize, src: usize, q: &RatPoly, from: usize) {
    for i in from..a.rows() {
        let v = &a[(i, dst)] - &(q * &a[(i, src)]);
        a[(i, dst)] = v;
    }
}

/// Divides rows `from + 1..` by the rational content of their entries in
/// columns `from..`, the only nonzero ones; keeps coefficients small.
fn normalize_rows(a: &mut PolyMatrix, from: usize) {
    for i in from + 1..a.rows() {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for j in from..a.cols() {
            for c in a[(i, j)].coeffs() {
                num = num.gcd(c.numer());
                den = den.lcm(c.denom());
            }
        }
        if num.is_zero() || (num.is_one() && den.is_one()) {
            continue;
        }
        let unit = BigRational::new(den, num);
        for j in from..a.cols() {
            let v = a[(i, j)].scale(&unit);
            a[(i, j)] = v;
        }
    }
}

/// Monic invariant factors e₁ | e₂ | … of a matrix over Q[t], one per unit of
/// rank (Smith normal form diagonal).
pub fn invariant_factors(m: &PolyMatrix) -> Vec<RatPoly> {
    let mut a = m.clone();
    let (r, c) = (a.rows(), a.cols());
    let mut diag = Vec::new();
    for k in 0..r.min(c) {
        let Some((pi, pj)) = min_degree_entry(&a, k) else {
            break;
        };
        a.swap_rows(k, pi);
        a.swap_cols(k, pj);
        loop {
            let mut clean = true;
            for i in k + 1..r {
                if !a[(i, k)].is_zero() {
                    let (q, rem) = a[(i, k)].div_rem(&a[(k, k)]);
                    row_axpy(&mut a, i, k, &q, k);
                    clean &= rem.is_zero();
                }
            }
            for j in k + 1..c {
                if !a[(k, j)].is_zero() {
                    let (q, rem) = a[(k, j)].div_rem(&a[(k, k)]);
                    col_axpy(&mut a, j, k, &q, k);
                    clean &= rem.is_zero();
                }
            }
            normalize_rows(&mut a, k);
            if !clean {
                // a remainder of lower degree than the pivot is now in row/column k
                let mut best = (k, k, a[(k, k)].degree().unwrap_or(usize::MAX));
                for i in k + 1..r {
                    if let Some(d) = a[(i, k)].degree() {
                        if d < best.2 {
                            best = (i, k, d);
                        }
                    }
                }
                for j in k + 1..c {
                    if let Some(d) = a[(k, j)].degree() {
                        if d < best.2 {
                            best = (k, j, d);
                        }
                    }
                }
                a.swap_rows(k, best.0);
                a.swap_cols(k, best.1);
                continue;
            }
            let bad = (k + 1..r).find(|&i| (k + 1..c).any(|j| !a[(i, j)].rem(&a[(k, k)]).is_zero()));
            match bad {
                Some(i) => {
                    let minus_one = RatPoly::from_ints(&[-1]);
                    row_axpy(&mut a, k, i, &minus_one, k);
                }
                None => break,
            }
        }
        diag.push(a[(k, k)].monic());
    }
    diag
}

/// Monic gcd of the k×k minors: e₁⋯e_k, or zero when k exceeds the rank.
pub fn determinantal_divisor(factors: &[RatPoly], k: usize) -> RatPoly {
    if k > factors.len() {
        return RatPoly::zero();
    }
    factors[..k].iter().fold(RatPoly::one(), |acc, f| &acc * f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn diagonal_gcd_fix() {
        // diag(t−1, t+1) has invariant factors 1, t²−1
        let m = Matrix::from_vec(2, 2, vec![p(&[-1, 1]), RatPoly::zero(), RatPoly::zero(), p(&[1, 1])]);
        assert_eq!(invariant_factors(&m), vec![p(&[1]), p(&[-1, 0, 1])]);
    }

    #[test]
    fn trefoil_pencil() {
        let s = RatMatrix::from_ints(&[[-1, 0], [-1, -1]]);
        let f = invariant_factors(&seifert_pencil(&s));
        assert_eq!(f, vec![p(&[1]), p(&[1, -1, 1])]);
    }

    #[test]
    fn rank_deficient() {
        let s = RatMatrix::from_ints(&[[0, 0], [0, 1]]);
        let f = invariant_factors(&seifert_pencil(&s));
        assert_eq!(f, vec![p(&[-1, 1])]);
        assert!(determinantal_divisor(&f, 2).is_zero());
    }
}
