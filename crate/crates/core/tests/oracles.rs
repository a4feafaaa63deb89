//! Independent slow routes for the exact algebra.

mod common;

use common::*;
use hvs_core::algebra::polymat::{determinantal_divisor, invariant_factors, seifert_pencil};
use hvs_core::algebra::roots::{roots_certified, CircleStatus};
use hvs_core::algebra::{Matrix, RatPoly};
use hvs_core::jordan::cyclotomic;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

#[test]
fn charpoly_by_cofactors() {
    for m in random_matrices(30, 1..=5, 4, 1) {
        let n = m.rows();
        let t_minus_a = Matrix::from_vec(
            n,
            n,
            (0..n * n)
                .map(|k| {
                    let c = RatPoly::constant(-m[(k / n, k % n)].clone());
                    if k / n == k % n {
                        &c + &RatPoly::t()
                    } else {
                        c
                    }
                })
                .collect(),
        );
        assert_eq!(m.charpoly().unwrap(), cofactor_det(&t_minus_a), "{:?}", m);
    }
}

#[test]
fn smith_by_minor_gcds() {
    for m in random_matrices(25, 1..=4, 2, 2) {
        let pencil = seifert_pencil(&m);
        let n = m.rows();
        let factors = invariant_factors(&pencil);
        for k in 1..=n {
            let mut g = RatPoly::zero();
            for rows in subsets(n, k) {
                for cols in subsets(n, k) {
                    g = RatPoly::gcd(&g, &cofactor_det(&pencil.submatrix(&rows, &cols)));
                }
            }
            let expect = if g.is_zero() { g } else { g.monic() };
            assert_eq!(determinantal_divisor(&factors, k), expect, "k = {} for {:?}", k, m);
        }
    }
}

/// Durand–Kerner iteration in double precision.
fn durand_kerner(p: &RatPoly) -> Vec<Complex64> {
    let lead = p.leading().to_f64().unwrap();
    let c: Vec<f64> = p.coeffs().iter().map(|x| x.to_f64().unwrap() / lead).collect();
    let n = c.len() - 1;
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    let mut z: Vec<Complex64> = (0..n).map(|k| Complex64::from_polar(0.9, 0.4 + k as f64 * 6.283 / n as f64)).collect();
    for _ in 0..2000 {
        for i in 0..n {
            let denom = (0..n).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            let step = eval(z[i]) / denom;
            z[i] -= step;
        }
    }
    z
}

#[test]
fn root_placement_against_double_precision() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
    for _ in 0..40 {
        let deg = rng.gen_range(1..=5);
        let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-5..=5)).collect();
        c[deg] = rng.gen_range(1..=3);
        let base = RatPoly::from_ints(&c);
        if base.coeff(0) == num_rational::BigRational::from_integer(0.into()) {
            continue;
        }
        let p = &base * &cyclotomic(rng.gen_range(1..=12));
        // squarefree part, so the double-precision iteration converges
        let sq = hvs_core::algebra::squarefree_factor_q(&p).unwrap().into_iter().fold(RatPoly::one(), |a, (f, _)| &a * &f);
        let certified = roots_certified(&sq, 128).unwrap();
        let dk = durand_kerner(&sq);
        let count = |s: CircleStatus| certified.iter().filter(|r| r.status == s).count();
        let on = dk.iter().filter(|z| (z.norm() - 1.0).abs() < 1e-7).count();
        let inside = dk.iter().filter(|z| z.norm() < 1.0 - 1e-7).count();
        assert_eq!(count(CircleStatus::Undecided), 0);
        assert_eq!((count(CircleStatus::On), count(CircleStatus::Inside)), (on, inside), "{}", sq);
        for r in &certified {
            let z = Complex64::new(r.value.re_f64(), r.value.im_f64());
            assert!(dk.iter().any(|w| (w - z).norm() < 1e-6), "{:?} not found for {}", z, sq);
        }
    }
}

/// True when some proper subset of the roots gives a rational factor: the
/// product lead·∏(t − r) over the subset has integral coefficients.
fn splits_numerically(f: &RatPoly) -> bool {
    let roots = durand_kerner(f);
    let d = roots.len();
    let lead = f.leading().to_f64().unwrap().abs();
    for mask in 1u32..(1 << d) - 1 {
        if mask.count_ones() as usize > d / 2 {
            continue;
        }
        let mut prod = vec![Complex64::new(lead, 0.0)];
        for (i, r) in roots.iter().enumerate() {
            if mask & (1 << i) != 0 {
                let mut next = vec![Complex64::new(0.0, 0.0); prod.len() + 1];
                for (k, c) in prod.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * r;
                }
                prod = next;
            }
        }
        if prod.iter().all(|c| c.im.abs() < 1e-6 && (c.re - c.re.round()).abs() < 1e-6) {
            return true;
        }
    }
    false
}

#[test]
fn factorization_of_random_products() {
    assert!(splits_numerically(&RatPoly::from_ints(&[18, 301, 244, 301, 18])));
    assert!(!splits_numerically(&RatPoly::from_ints(&[18, 13, 18])));
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
    for _ in 0..60 {
        let pieces: Vec<RatPoly> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let deg = rng.gen_range(1..=3);
                let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-9..=9)).collect();
                c[deg] = rng.gen_range(1..=20);
                c[0] = rng.gen_range(1..=20);
                RatPoly::from_ints(&c)
            })
            .collect();
        let p = pieces.iter().fold(RatPoly::one(), |a, f| &a * f);
        let fac = hvs_core::algebra::squarefree_factor_q(&p).unwrap();
        let count: usize = fac.iter().map(|(_, m)| m).sum();
        assert!(count >= pieces.len(), "{} split into {:?}", p, fac);
        for (f, _) in &fac {
            assert!(!splits_numerically(f), "{} is reducible", f);
        }
    }
}
