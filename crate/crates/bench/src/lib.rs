//! Inputs shared by the benchmarks in `benches/`.

use hvs_core::SeifertMatrix;

const TEN_99: [[i64; 8]; 8] = [
    [-1, -1, 0, 0, 0, 0, -1, 0],
    [0, -1, 0, 0, 0, 0, 0, 0],
    [-1, -1, -1, 0, 0, 0, -1, 0],
    [-1, 0, -1, 1, 0, 1, 0, 0],
    [-1, -1, -1, 1, 1, 1, -1, 1],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, -1, 0, 0, 0, 0, -1, 0],
    [-1, -1, -1, 1, 0, 1, -1, 1],
];

/// Named Seifert matrices of increasing size.
pub fn fixtures() -> Vec<(&'static str, SeifertMatrix)> {
    vec![
        ("trefoil", SeifertMatrix::from_ints(&[[-1, 0], [-1, -1]])),
        ("8_20", SeifertMatrix::from_ints(&[[-1, -1, -1, -1], [0, 0, -1, -1], [0, -1, 0, -1], [0, 0, -1, 0]])),
        ("T(3,4)", SeifertMatrix::torus(3, 4).expect("valid parameters")),
        ("10_99", SeifertMatrix::from_ints(&TEN_99)),
        ("T(3,5)", SeifertMatrix::torus(3, 5).expect("valid parameters")),
    ]
}
