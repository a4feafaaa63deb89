use std::cmp::Ordering;

use astro_float::BigFloat;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::bigcomplex::{bf_cmp, bf_exponent, bf_from_rational, bf_pow2, bf_zero, BigComplex, RM};
use super::factor::squarefree_factor_q;
use super::poly::RatPoly;
use super::rational_to_f64;
use crate::error::{Error, Result};

/// Highest precision tried before giving up on a certification.
pub const PRECISION_CEILING: usize = 8192;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CircleStatus {
    On,
    Inside,
    Outside,
    Undecided,
}

/// A root together with a disk known to contain exactly that root.
#[derive(Clone, Debug)]
pub struct CertifiedRoot {
    pub value: BigComplex,
    pub radius: BigFloat,
    pub multiplicity: usize,
    pub status: CircleStatus,
    /// Irreducible factor the root belongs to.
    pub factor: RatPoly,
    /// Position among the roots of `factor`, ordered by argument in [0, 2π) then modulus.
    pub index: usize,
    pub is_real: bool,
}

/// All complex roots of `p` with unit-circle placement. Roots whose placement
/// could not be certified at this precision are marked `Undecided`.
pub fn roots_certified(p: &RatPoly, precision: usize) -> Result<Vec<CertifiedRoot>> {
    let mut out = Vec::new();
    for (f, m) in squarefree_factor_q(p)? {
        for mut r in isolate_irreducible(&f, precision) {
            r.multiplicity = m;
            out.push(r);
        }
    }
    Ok(out)
}

/// Roots of an irreducible factor, doubling the precision until every
/// placement is certified. Returns the roots and the precision used.
pub fn isolate_escalating(f: &RatPoly, precision: usize) -> Result<(Vec<CertifiedRoot>, usize)> {
    let mut p = precision.max(64);
    loop {
        let roots = isolate_irreducible(f, p);
        if roots.iter().all(|r| r.status != CircleStatus::Undecided) {
            return Ok((roots, p));
        }
        if p >= PRECISION_CEILING {
            return Err(Error::Indeterminate {
                precision: p,
                what: format!("unit-circle placement of the roots of {}", f),
            });
        }
        p *= 2;
    }
}

/// Isolates the (simple) roots of an irreducible polynomial.
pub fn isolate_irreducible(f: &RatPoly, precision: usize) -> Vec<CertifiedRoot> {
    let d = f.degree().unwrap_or(0);
    if d == 0 {
        return Vec::new();
    }
    if d == 1 {
        let r = -f.coeff(0) / f.coeff(1);
        let a = r.abs();
        let one = BigRational::from_integer(1.into());
        let status = match a.cmp(&one) {
            Ordering::Equal => CircleStatus::On,
            Ordering::Less => CircleStatus::Inside,
            Ordering::Greater => CircleStatus::Outside,
        };
        return vec![CertifiedRoot {
            value: BigComplex::from_rational(&r, precision),
            radius: bf_zero(precision),
            multiplicity: 1,
            status,
            factor: f.clone(),
            index: 0,
            is_real: true,
        }];
    }
    let wp = precision + 64;
    let coeffs: Vec<BigFloat> = f.coeffs().iter().map(|c| bf_from_rational(c, wp)).collect();
    let abs_coeffs: Vec<BigFloat> = coeffs.iter().map(|c| c.abs()).collect();
    let seeds = aberth_f64(&f.coeffs().iter().map(rational_to_f64).collect::<Vec<_>>());
    let zs = aberth_refine(&coeffs, seeds.iter().map(|z| BigComplex::from_f64(z.re, z.im, wp)).collect(), wp);

    let lp = 96;
    let dd = BigFloat::from_word(d as _, lp);
    let unit_err = bf_pow2(-(wp as i32) + 8, lp);
    let mut radii = Vec::with_capacity(d);
    for z in &zs {
        let (fz, dfz) = horner(&coeffs, z);
        let absz = z.abs();
        let mut bound = bf_zero(lp);
        for c in abs_coeffs.iter().rev() {
            bound = bound.mul(&absz, lp, RM).add(c, lp, RM);
        }
        let err = bound.mul(&unit_err, lp, RM).mul(&BigFloat::from_word((d + 1) as _, lp), lp, RM);
        let num = fz.abs().add(&err, lp, RM);
        let den = dfz.abs();
        let r = if den.is_zero() {
            BigFloat::from_word(1, lp)
        } else {
            num.div(&den, lp, RM).mul(&dd, lp, RM).mul(&BigFloat::from_word(2, lp), lp, RM)
        };
        radii.push(r);
    }

    let disjoint = |a: &BigComplex, ra: &BigFloat, b: &BigComplex, rb: &BigFloat| {
        bf_cmp(&a.sub(b).abs(), &ra.add(rb, lp, RM)) == Ordering::Greater
    };
    let mut separated = true;
    'outer: for i in 0..d {
        for j in i + 1..d {
            if !disjoint(&zs[i], &radii[i], &zs[j], &radii[j]) {
                separated = false;
                break 'outer;
            }
        }
    }

    let self_rec = f.is_self_reciprocal();
    let one = BigFloat::from_word(1, lp);
    let mut roots = Vec::with_capacity(d);
    for i in 0..d {
        let z = &zs[i];
        let r = &radii[i];
        let mut value = z.with_precision(precision);
        let mut is_real = false;
        let status = if !separated {
            CircleStatus::Undecided
        } else {
            // the conjugate root lies in the mirrored disk; if that meets only
            // this disk the root is real
            if bf_cmp(&z.im.abs(), r) != Ordering::Greater {
                let zc = z.conj();
                if (0..d).filter(|&j| j != i).all(|j| disjoint(&zc, r, &zs[j], &radii[j])) {
                    is_real = true;
                    value = BigComplex::from_real(z.re.clone(), precision);
                }
            }
            let absz = z.abs();
            if self_rec {
                if bf_cmp(&absz, r) != Ordering::Greater {
                    CircleStatus::Undecided
                } else {
                    let w = z.conj().recip();
                    let rho = r.div(&absz.mul(&absz.sub(r, lp, RM), lp, RM), lp, RM);
                    if disjoint(&w, &rho, z, r) {
                        off_circle(&absz, &one)
                    } else if (0..d).filter(|&j| j != i).all(|j| disjoint(&w, &rho, &zs[j], &radii[j])) {
                        CircleStatus::On
                    } else {
                        CircleStatus::Undecided
                    }
                }
            } else {
                let gap = absz.sub(&one, lp, RM).abs();
                if bf_cmp(&gap, r) == Ordering::Greater {
                    off_circle(&absz, &one)
                } else {
                    CircleStatus::Undecided
                }
            }
        };
        roots.push(CertifiedRoot {
            value,
            radius: r.clone(),
            multiplicity: 1,
            status,
            factor: f.clone(),
            index: 0,
            is_real,
        });
    }
    sort_by_argument(&mut roots);
    for (k, r) in roots.iter_mut().enumerate() {
        r.index = k;
    }
    roots
}

fn off_circle(absz: &BigFloat, one: &BigFloat) -> CircleStatus {
    if bf_cmp(absz, one) == Ordering::Less {
        CircleStatus::Inside
    } else {
        CircleStatus::Outside
    }
}

fn sort_by_argument(roots: &mut [CertifiedRoot]) {
    let keys: Vec<(BigFloat, BigFloat)> = roots
        .iter()
        .map(|r| {
            let turn = if r.is_real {
                let p = r.value.precision();
                if r.value.re.is_negative() {
                    BigFloat::from_word(1, p).div(&BigFloat::from_word(2, p), p, RM)
                } else {
                    bf_zero(p)
                }
            } else {
                r.value.turn()
            };
            (turn, r.value.abs())
        })
        .collect();
    let mut idx: Vec<usize> = (0..roots.len()).collect();
    idx.sort_by(|&a, &b| bf_cmp(&keys[a].0, &keys[b].0).then_with(|| bf_cmp(&keys[a].1, &keys[b].1)));
    let sorted: Vec<CertifiedRoot> = idx.iter().map(|&i| roots[i].clone()).collect();
    roots.clone_from_slice(&sorted);
}

fn horner(coeffs: &[BigFloat], z: &BigComplex) -> (BigComplex, BigComplex) {
    let p = z.precision();
    let mut f = BigComplex::zero(p);
    let mut df = BigComplex::zero(p);
    for c in coeffs.iter().rev() {
        df = df.mul(z).add(&f);
        f = f.mul(z).add(&BigComplex::from_real(c.clone(), p));
    }
    (f, df)
}

fn horner_f64(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut f = Complex64::zero();
    let mut df = Complex64::zero();
    for &a in c.iter().rev() {
        df = df * z + f;
        f = f * z + a;
    }
    (f, df)
}

/// Double-precision Aberth–Ehrlich iteration, used only to seed refinement.
fn aberth_f64(c: &[f64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    let lead = c[d];
    let a: Vec<f64> = c.iter().map(|x| x / lead).collect();
    let mut r0 = a[0].abs().powf(1.0 / d as f64);
    if !r0.is_finite() || r0 < 1e-3 {
        r0 = 1.0;
    }
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(r0, 2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.4))
        .collect();
    for _ in 0..500 {
        let mut worst: f64 = 0.0;
        for k in 0..d {
            let (f, df) = horner_f64(&a, z[k]);
            if df.norm() == 0.0 {
                z[k] += Complex64::new(1e-8, 1e-8);
                worst = 1.0;
                continue;
            }
            let w = f / df;
            let s: Complex64 = (0..d).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let corr = w / (Complex64::new(1.0, 0.0) - w * s);
            if corr.is_finite() {
                z[k] -= corr;
                worst = worst.max(corr.norm() / z[k].norm().max(1.0));
            }
        }
        if worst < 1e-15 {
            break;
        }
    }
    z
}

fn aberth_refine(coeffs: &[BigFloat], mut z: Vec<BigComplex>, wp: usize) -> Vec<BigComplex> {
    let d = z.len();
    let one = BigComplex::one(wp);
    for _ in 0..(100 + wp / 8) {
        let mut converged = true;
        for k in 0..d {
            let (f, df) = horner(coeffs, &z[k]);
            if df.is_zero() {
                converged = false;
                z[k] = z[k].add(&BigComplex::from_f64(1e-10, 1e-10, wp));
                continue;
            }
            let w = f.div(&df);
            let mut s = BigComplex::zero(wp);
            for j in 0..d {
                if j != k {
                    let diff = z[k].sub(&z[j]);
                    if !diff.is_zero() {
                        s = s.add(&diff.recip());
                    }
                }
            }
            let corr = w.div(&one.sub(&w.mul(&s)));
            z[k] = z[k].sub(&corr);
            let scale = bf_exponent(&z[k].abs()).unwrap_or(0).max(1);
            if let Some(e) = bf_exponent(&corr.abs()) {
                if e > scale - (wp as i32 - 24) {
                    converged = false;
                }
            }
        }
        if converged {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn sixth_roots_on_circle() {
        let roots = roots_certified(&p(&[1, -1, 1]), 256).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.status == CircleStatus::On));
        // ordered by argument: e^{iπ/3} first
        assert!(roots[0].value.im_f64() > 0.0);
        assert!((roots[0].value.re_f64() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn linear_outside() {
        let roots = roots_certified(&p(&[-2, 1]), 128).unwrap();
        assert_eq!(roots[0].status, CircleStatus::Outside);
        assert!(roots[0].is_real);
    }

    #[test]
    fn reciprocal_real_pair() {
        let roots = roots_certified(&p(&[1, -4, 1]), 256).unwrap();
        assert_eq!(roots[0].status, CircleStatus::Inside);
        assert_eq!(roots[1].status, CircleStatus::Outside);
        assert!(roots.iter().all(|r| r.is_real));
    }

    #[test]
    fn multiplicities() {
        let f = &p(&[1, -1, 1]).pow(4) * &p(&[1, 1]);
        let roots = roots_certified(&f, 128).unwrap();
        assert_eq!(roots.iter().map(|r| r.multiplicity).sum::<usize>(), 9);
    }
}
