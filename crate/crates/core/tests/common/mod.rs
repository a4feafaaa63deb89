#![allow(dead_code)]

use hvs_core::algebra::{Matrix, RatMatrix, RatPoly};
use hvs_core::classify::{classify, HNumbers};
use hvs_core::jordan::EigenKey;
use hvs_core::seifert::{build_hvs, split_degenerate, SeifertMatrix};

pub const TREFOIL: [[i64; 2]; 2] = [[-1, 0], [-1, -1]];
pub const FIGURE_EIGHT: [[i64; 2]; 2] = [[1, 1], [0, -1]];
pub const EIGHT_TWENTY: [[i64; 4]; 4] = [[-1, -1, -1, -1], [0, 0, -1, -1], [0, -1, 0, -1], [0, 0, -1, 0]];

pub const TEN_99: [[i64; 8]; 8] = [
    [-1, -1, 0, 0, 0, 0, -1, 0],
    [0, -1, 0, 0, 0, 0, 0, 0],
    [-1, -1, -1, 0, 0, 0, -1, 0],
    [-1, 0, -1, 1, 0, 1, 0, 0],
    [-1, -1, -1, 1, 1, 1, -1, 1],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, -1, 0, 0, 0, 0, -1, 0],
    [-1, -1, -1, 1, 0, 1, -1, 1],
];

pub const TWELVE_N106: [[i64; 8]; 8] = [
    [-1, 0, 0, 0, 0, 0, 0, 0],
    [-1, -1, 0, 0, 0, 0, 0, 0],
    [-1, -1, -1, -1, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 1, 0],
    [-1, -1, 0, -1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 1, 0, 1, 1],
];

/// Tabulated matrices of the next three knots describe the mirror images of
/// the knots whose H-numbers are quoted; `chiral` applies −Sᵀ.
pub const TWELVE_N508_TABLE: [[i64; 8]; 8] = [
    [-1, 0, 0, 0, 0, 0, 0, 0],
    [-1, -1, 0, 0, 0, 0, 0, 0],
    [-1, -1, 1, -1, 1, 0, -1, 0],
    [0, 0, 0, -1, 0, 0, -1, 0],
    [0, 0, 0, -1, 1, 0, -1, 0],
    [-1, -1, 0, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, 0],
    [0, 0, 0, 1, 0, -1, 1, -1],
];

pub const TWELVE_N604_TABLE: [[i64; 8]; 8] = [
    [-1, 0, -1, -1, -1, -1, 0, -1],
    [0, 1, 0, 0, 0, 0, 1, 0],
    [0, 1, 0, -1, 0, -1, 1, -1],
    [0, 0, -1, 0, -1, -1, 0, -1],
    [0, 1, -1, -1, 0, -1, 1, -1],
    [0, 1, 0, -1, 0, 0, 1, -1],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, -1, 0, -1, -1, 0, 0],
];

pub const TWELVE_N666_TABLE: [[i64; 10]; 10] = [
    [1, 0, 0, 0, 0, 0, -1, 0, 0, 0],
    [0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, -1, 0, 0, 0, 0, 0, 0, 0],
    [1, -1, -1, 0, 0, 0, -1, 1, 0, 0],
    [1, -1, -1, 1, 0, 0, -1, 1, 1, 0],
    [1, -1, -1, 1, 1, 0, -1, 1, 1, 1],
    [0, -1, -1, 0, 0, 0, -1, 0, 0, 0],
    [1, 0, -1, 0, 0, 0, -1, 1, 0, 0],
    [1, -1, -1, 1, 0, 0, -1, 1, 0, 0],
    [1, -1, -1, 1, 1, 0, -1, 1, 1, 0],
];

pub const H1: [[i64; 8]; 8] = [
    [0, 0, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, 0],
    [2, 1, 2, -1, 0, -1, 1, 0],
    [0, 1, 0, 0, 0, 0, 1, -1],
    [-1, -1, -1, 1, 1, 1, -1, 1],
    [1, 0, 1, -1, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0, 0, 1, -1],
    [0, 0, 0, 0, -1, 0, 0, 0],
];

pub const H2: [[i64; 8]; 8] = [
    [0, -1, 0, 0, 0, 0, 0, 0],
    [1, 1, -1, 0, -1, -1, -1, -1],
    [1, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, -1, 1, -1, -1, -1, -1],
    [0, 0, 0, 0, 0, 0, 0, -1],
    [-1, -1, 0, -1, 1, 1, 1, 1],
    [0, 0, 0, 0, -1, 0, 0, 0],
    [1, 1, 0, 1, 0, -1, 0, 0],
];

pub fn seifert<R: AsRef<[i64]>>(rows: &[R]) -> SeifertMatrix {
    SeifertMatrix::from_ints(rows)
}

pub fn chiral<R: AsRef<[i64]>>(rows: &[R]) -> SeifertMatrix {
    seifert(rows).mirror()
}

pub fn mat<R: AsRef<[i64]>>(rows: &[R]) -> RatMatrix {
    RatMatrix::from_ints(rows)
}

/// Deterministic random integer matrices.
pub fn random_matrices(count: usize, sizes: std::ops::RangeInclusive<usize>, range: i64, seed: u64) -> Vec<RatMatrix> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(sizes.clone());
            let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-range..=range)).collect()).collect();
            RatMatrix::from_ints(&rows)
        })
        .collect()
}

pub fn h_numbers(s: &SeifertMatrix) -> HNumbers {
    let split = split_degenerate(s);
    let v = build_hvs(&split);
    classify(&v, split.s0_dim, 256).expect("classification")
}

/// e^{iπ/3} (index 0) and e^{−iπ/3} (index 1).
pub fn mu(index: usize) -> EigenKey {
    EigenKey { factor: vec![1.into(), (-1).into(), 1.into()], index }
}

pub fn one() -> EigenKey {
    EigenKey { factor: vec![(-1).into(), 1.into()], index: 0 }
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &Matrix<RatPoly>) -> RatPoly {
    let n = m.rows();
    if n == 0 {
        return RatPoly::one();
    }
    let mut acc = RatPoly::zero();
    for j in 0..n {
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let term = &m[(0, j)] * &cofactor_det(&m.submatrix(&rows, &cols));
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}
