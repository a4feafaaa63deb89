use algebraics::polynomial::Polynomial;
use num_bigint::BigInt;
use num_traits::One;

use super::poly::RatPoly;
use crate::error::{Error, Result};

/// Irreducible factorization over Q. Factors are integer-primitive with
/// positive leading coefficient, sorted by degree then coefficients; their
/// product with multiplicity equals `p` up to a rational unit.
pub fn squarefree_factor_q(p: &RatPoly) -> Result<Vec<(RatPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::Domain("factorization of the zero polynomial".into()));
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let ints: Vec<BigInt> = p.primitive_integer();
    let d = ints.len() - 1;
    let a = ints[d].clone();
    // the factorizer misses splittings of some non-monic inputs, so factor the
    // monic a^{d-1}·f(x/a) and substitute x = a·t back
    let mut scale = BigInt::one();
    let mut monic = vec![BigInt::one(); d + 1];
    for i in (0..d).rev() {
        monic[i] = &ints[i] * &scale;
        scale *= &a;
    }
    let poly: Polynomial<BigInt> = monic.into();
    let factors = poly.factor();
    let mut out: Vec<(RatPoly, usize)> = factors
        .polynomial_factors
        .into_iter()
        .map(|f| {
            let mut pow = BigInt::one();
            let c: Vec<BigInt> = f
                .polynomial
                .into_coefficients()
                .into_iter()
                .map(|c| {
                    let v = c * &pow;
                    pow *= &a;
                    v
                })
                .collect();
            (RatPoly::from_bigints(&c).normalized_integer(), f.power)
        })
        .collect();
    out.sort();
    let product = out.iter().fold(RatPoly::one(), |acc, (f, m)| &acc * &f.pow(*m));
    if product.monic() != p.monic() {
        return Err(Error::Consistency(format!("factorization of {} does not multiply back", p)));
    }
    Ok(out)
}
