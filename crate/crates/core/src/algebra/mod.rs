pub mod bigcomplex;
pub mod factor;
pub mod field;
pub mod hermitian;
pub mod laurent;
pub mod matrix;
pub mod numfield;
pub mod poly;
pub mod polymat;
pub mod real;
pub mod roots;

pub use bigcomplex::BigComplex;
pub use factor::squarefree_factor_q;
pub use field::{Field, Involutive};
pub use laurent::LaurentPoly;
pub use matrix::{Matrix, RatMatrix};
pub use numfield::{Nf, NumberField};
pub use poly::RatPoly;
pub use real::Real;

use num_rational::BigRational;
use num_traits::ToPrimitive;

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}
