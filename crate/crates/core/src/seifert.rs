//! Seifert matrices, their split into zero and nondegenerate parts, and the
//! variation structure of the nondegenerate part.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Field, RatMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    s: RatMatrix,
    pub name: Option<String>,
}

impl SeifertMatrix {
    pub fn new(s: RatMatrix) -> Result<Self> {
        if !s.is_square() {
            return Err(Error::Dimension(format!("Seifert matrix is {}x{}", s.rows(), s.cols())));
        }
        Ok(SeifertMatrix { s, name: None })
    }

    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        Self::new(RatMatrix::from_ints(rows)).expect("square integer matrix")
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.s
    }

    pub fn dim(&self) -> usize {
        self.s.rows()
    }

    /// Seifert matrix of the mirror image, −Sᵀ.
    pub fn mirror(&self) -> Self {
        SeifertMatrix { s: -&self.s.transpose(), name: self.name.as_ref().map(|n| format!("{}*", n)) }
    }

    /// Seifert matrix of the reversed link, Sᵀ.
    pub fn reverse(&self) -> Self {
        SeifertMatrix { s: self.s.transpose(), name: self.name.as_ref().map(|n| format!("-{}", n)) }
    }

    /// Block sum, a Seifert matrix of the connected sum.
    pub fn connected_sum(&self, other: &Self) -> Self {
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{}#{}", a, b)),
            _ => None,
        };
        SeifertMatrix { s: self.s.block_sum(&other.s), name }
    }

    /// det(S − Sᵀ) is ±1 exactly for knots among genuine Seifert matrices.
    pub fn looks_like_knot(&self) -> bool {
        let d = (&self.s - &self.s.transpose()).det().expect("square");
        d.abs().is_one()
    }

    /// Seifert matrix of the torus link T(p, q), −(A_p ⊗ A_q) with A_n the
    /// (n−1)×(n−1) lower bidiagonal matrix with 1 on the diagonal and −1 below.
    pub fn torus(p: usize, q: usize) -> Result<Self> {
        if p < 2 || q < 2 {
            return Err(Error::Domain(format!("torus link T({}, {}) needs p, q ≥ 2", p, q)));
        }
        let a = |i: usize, j: usize| -> i64 {
            if i == j {
                1
            } else if i == j + 1 {
                -1
            } else {
                0
            }
        };
        let (m, k) = (p - 1, q - 1);
        let rows: Vec<Vec<i64>> = (0..m * k)
            .map(|r| (0..m * k).map(|c| -a(r / k, c / k) * a(r % k, c % k)).collect())
            .collect();
        Ok(Self::from_ints(&rows).named(format!("T({},{})", p, q)))
    }
}

/// One step of the reduction, applied to the current nondegenerate candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// M ← P·M·Pᵀ.
    Congruence(RatMatrix),
    /// The first `k` rows and columns of M are zero; move them to the zero block.
    SplitZero(usize),
    /// M has the shape [[A,0,0],[ξ,0,0],[0,1,0]]; replace it by A.
    Destabilize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertSplit {
    pub s0_dim: usize,
    pub s_ndeg: RatMatrix,
    pub moves: Vec<Move>,
}

impl SeifertSplit {
    /// Applies the recorded moves to `s`, returning diag(0, S_ndeg).
    pub fn replay(&self, s: &RatMatrix) -> Result<RatMatrix> {
        let mut zeros = 0;
        let mut m = s.clone();
        for mv in &self.moves {
            match mv {
                Move::Congruence(p) => {
                    if p.rows() != m.rows() {
                        return Err(Error::Consistency("congruence of the wrong size".into()));
                    }
                    m = &(p * &m) * &p.transpose();
                }
                Move::SplitZero(k) => {
                    let k = *k;
                    let n = m.rows();
                    if k > n || (0..n).any(|i| (0..k).any(|j| !m[(i, j)].is_zero() || !m[(j, i)].is_zero())) {
                        return Err(Error::Consistency("split block is not zero".into()));
                    }
                    let rest: Vec<usize> = (k..n).collect();
                    m = m.submatrix(&rest, &rest);
                    zeros += k;
                }
                Move::Destabilize => {
                    if !is_destabilizable(&m) {
                        return Err(Error::Consistency("matrix not in destabilization form".into()));
                    }
                    m = m.leading(m.rows() - 2);
                }
            }
        }
        Ok(RatMatrix::zeros(zeros, zeros).block_sum(&m))
    }
}

fn is_destabilizable(m: &RatMatrix) -> bool {
    let n = m.rows();
    if n < 2 {
        return false;
    }
    let (a, b) = (n - 2, n - 1);
    (0..n).all(|i| m[(i, b)].is_zero())
        && (0..n).all(|i| if i == b { m[(i, a)].is_one() } else { m[(i, a)].is_zero() })
        && (0..a).all(|j| m[(b, j)].is_zero())
}

/// Splits S into a zero block and a nondegenerate block by congruences and
/// destabilizations, recording every move.
pub fn split_degenerate(s: &SeifertMatrix) -> SeifertSplit {
    let mut m = s.matrix().clone();
    let mut moves = Vec::new();
    let mut s0_dim = 0;
    loop {
        let n = m.rows();
        if n == 0 {
            break;
        }
        let common = common_kernel(&m);
        if !common.is_empty() {
            let p = complete_basis(&common, n);
            m = &(&p * &m) * &p.transpose();
            moves.push(Move::Congruence(p));
            let k = common.len();
            moves.push(Move::SplitZero(k));
            let rest: Vec<usize> = (k..n).collect();
            m = m.submatrix(&rest, &rest);
            s0_dim += k;
            continue;
        }
        let kernel = m.kernel();
        let Some(v) = kernel.first() else {
            break;
        };
        let c = destabilizing_congruence(&m, v);
        m = &(&c * &m) * &c.transpose();
        debug_assert!(is_destabilizable(&m));
        moves.push(Move::Congruence(c));
        moves.push(Move::Destabilize);
        m = m.leading(n - 2);
    }
    SeifertSplit { s0_dim, s_ndeg: m, moves }
}

fn common_kernel(m: &RatMatrix) -> Vec<Vec<BigRational>> {
    let n = m.rows();
    let mut rows = m.to_rows();
    rows.extend(m.transpose().to_rows());
    RatMatrix::from_rows(rows).expect("rectangular").kernel().into_iter().filter(|v| v.len() == n).collect()
}

/// Rows: the given independent vectors, then the first unit vectors that keep
/// the rows independent.
fn complete_basis(vs: &[Vec<BigRational>], n: usize) -> RatMatrix {
    let mut rows: Vec<Vec<BigRational>> = vs.to_vec();
    let mut cand = RatMatrix::from_rows(rows.clone()).expect("rectangular");
    for j in 0..n {
        if rows.len() == n {
            break;
        }
        let mut e = vec![BigRational::zero(); n];
        e[j] = BigRational::one();
        let mut trial = cand.to_rows();
        trial.push(e.clone());
        let t = RatMatrix::from_rows(trial).expect("rectangular");
        if t.rank() == rows.len() + 1 {
            rows.push(e);
            cand = t;
        }
    }
    RatMatrix::from_rows(rows).expect("square")
}

/// Congruence C with C·M·Cᵀ = [[A,0,0],[ξ,0,0],[0,1,0]] for M·v = 0, v ∉ ker Mᵀ.
fn destabilizing_congruence(m: &RatMatrix, v: &[BigRational]) -> RatMatrix {
    let n = m.rows();
    let i0 = v.iter().position(|x| !x.is_zero()).expect("nonzero kernel vector");
    // P: unit rows e_j (j ≠ i0) followed by vᵀ; the last column of P M Pᵀ vanishes
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    for j in (0..n).filter(|&j| j != i0) {
        let mut e = vec![BigRational::zero(); n];
        e[j] = BigRational::one();
        rows.push(e);
    }
    rows.push(v.to_vec());
    let p = RatMatrix::from_rows(rows).expect("square");
    let m1 = &(&p * m) * &p.transpose();
    // last row r' = (r'_0, …, r'_{n-2}, 0) is nonzero; map it to e_{n-2}
    let last = n - 1;
    let j0 = (0..last).find(|&j| !m1[(last, j)].is_zero()).expect("common kernel already removed");
    let mut r = RatMatrix::identity(n);
    for i in 0..last {
        r[(i, j0)] = m1[(last, i)].clone();
    }
    let q = r.inverse().expect("pivot entry is nonzero");
    let mut swap = RatMatrix::identity(n);
    swap.swap_rows(j0, last - 1);
    let q = &swap * &q;
    let m2 = &(&q * &m1) * &q.transpose();
    // clear column n-2 above the corner using the last basis vector
    let mut t = RatMatrix::identity(n);
    for i in 0..last {
        let c = m2[(i, last - 1)].clone();
        if !c.is_zero() {
            t[(i, last)] = -c;
        }
    }
    &(&t * &q) * &p
}

/// The variation structure (U; b, h, V) with ε = −1 of a nondegenerate
/// Seifert matrix: V = (Sᵀ)⁻¹, h = V·S, b = S − Sᵀ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariationStructure {
    pub s: RatMatrix,
    pub b: RatMatrix,
    pub h: RatMatrix,
    pub v: RatMatrix,
}

impl VariationStructure {
    pub const EPSILON: i8 = -1;

    pub fn dim(&self) -> usize {
        self.h.rows()
    }

    /// Rebuilds the structure from a monodromy and a variation matrix,
    /// checking that h = V·(V⁻¹)ᵀ.
    pub fn from_monodromy(h: &RatMatrix, v: &RatMatrix) -> Result<Self> {
        if !h.is_square() || !v.is_square() || h.rows() != v.rows() {
            return Err(Error::Dimension("monodromy and variation must be square of equal size".into()));
        }
        let vinv = v.inverse().ok_or_else(|| Error::Domain("variation matrix is singular".into()))?;
        let s = vinv.transpose();
        let hvs = VariationStructure { b: &s - &s.transpose(), h: v * &s, v: v.clone(), s };
        if hvs.h != *h {
            return Err(Error::Consistency("monodromy differs from (Sᵀ)⁻¹S for S = (V⁻¹)ᵀ".into()));
        }
        Ok(hvs)
    }

    /// Checks V·b = h − I, b·V = (hᵀ)⁻¹ − I, hᵀ·b·h = b and det h ≠ 0.
    pub fn verify(&self) -> Result<()> {
        let n = self.dim();
        let id = RatMatrix::identity(n);
        if &self.v * &self.b != &self.h - &id {
            return Err(Error::Consistency("V·b ≠ h − I".into()));
        }
        let hinv_t = self.h.transpose().inverse().ok_or_else(|| Error::Consistency("monodromy is singular".into()))?;
        if &self.b * &self.v != &hinv_t - &id {
            return Err(Error::Consistency("b·V ≠ (hᵀ)⁻¹ − I".into()));
        }
        if &(&self.h.transpose() * &self.b) * &self.h != self.b {
            return Err(Error::Consistency("h is not b-orthogonal".into()));
        }
        if self.h.det()?.vanishes() {
            return Err(Error::Consistency("det h = 0".into()));
        }
        Ok(())
    }
}

pub fn build_hvs(split: &SeifertSplit) -> VariationStructure {
    let s = split.s_ndeg.clone();
    let v = s.transpose().inverse().expect("nondegenerate part is invertible");
    VariationStructure { b: &s - &s.transpose(), h: &v * &s, v, s }
}
