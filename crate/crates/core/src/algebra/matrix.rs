use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::Field;
use super::poly::RatPoly;
use crate::error::{Error, Result};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RatMatrix = Matrix<BigRational>;

impl<T: Clone> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != c) {
            return Err(Error::Dimension(format!(
                "row {} has {} entries, expected {}",
                i,
                row.len(),
                c
            )));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn filled(rows: usize, cols: usize, v: T) -> Self {
        Matrix { rows, cols, data: vec![v; rows * cols] }
    }

    pub fn empty() -> Self {
        Matrix { rows: 0, cols: 0, data: Vec::new() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix { rows: rows.len(), cols: cols.len(), data }
    }

    /// Leading principal block of size k.
    pub fn leading(&self, k: usize) -> Self {
        let idx: Vec<usize> = (0..k).collect();
        self.submatrix(&idx, &idx)
    }

    pub fn from_columns(cols: &[Vec<T>], rows: usize) -> Self {
        let mut data = Vec::with_capacity(rows * cols.len());
        for i in 0..rows {
            for c in cols {
                data.push(c[i].clone());
            }
        }
        Matrix { rows, cols: cols.len(), data }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Field> Matrix<T> {
    pub fn zeros_like(rows: usize, cols: usize, proto: &T) -> Self {
        Self::filled(rows, cols, proto.zero_like())
    }

    pub fn identity_like(n: usize, proto: &T) -> Self {
        let mut m = Self::zeros_like(n, n, proto);
        for i in 0..n {
            m[(i, i)] = proto.one_like();
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::vanishes)
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc: Option<T> = None;
                for (a, b) in self.row(i).iter().zip(v) {
                    let p = a.clone() * b.clone();
                    acc = Some(match acc {
                        None => p,
                        Some(s) => s + p,
                    });
                }
                acc.expect("matrix-vector product with zero columns")
            })
            .collect()
    }

    /// Block diagonal sum; `proto` supplies the zero for off-diagonal blocks.
    pub fn block_diag(&self, other: &Self, proto: &T) -> Self {
        let n = self.rows + other.rows;
        let m = self.cols + other.cols;
        let mut out = Self::zeros_like(n, m, proto);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    pub fn pow(&self, k: usize, proto: &T) -> Self {
        let mut acc = Self::identity_like(self.rows, proto);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Fraction-free forward elimination (Bareiss). Returns the echelon
    /// form, the pivot columns and the number of row swaps.
    pub fn echelon(&self) -> (Self, Vec<usize>, usize) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut prev_inv: Option<T> = None;
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[(i, c)].vanishes()) else {
                continue;
            };
            if p != r {
                a.swap_rows(p, r);
                swaps += 1;
            }
            let piv = a[(r, c)].clone();
            for i in r + 1..self.rows {
                let lead = a[(i, c)].clone();
                for j in c + 1..self.cols {
                    let v = piv.clone() * a[(i, j)].clone() - lead.clone() * a[(r, j)].clone();
                    a[(i, j)] = match &prev_inv {
                        Some(d) => v * d.clone(),
                        None => v,
                    };
                }
                a[(i, c)] = piv.zero_like();
            }
            prev_inv = Some(piv.recip());
            pivots.push(c);
            r += 1;
        }
        (a, pivots, swaps)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Basis of the right kernel, one vector per free column in increasing
    /// order, normalized so the free coordinate is 1 (reduced-echelon basis).
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let Some(proto) = self.data.first() else {
            return Vec::new();
        };
        let (a, pivots, _) = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        let pivot_inv: Vec<T> = pivots.iter().enumerate().map(|(r, &pc)| a[(r, pc)].recip()).collect();
        for &f in &free {
            let mut x = vec![proto.zero_like(); self.cols];
            x[f] = proto.one_like();
            for (r, &pc) in pivots.iter().enumerate().rev() {
                let mut s = proto.zero_like();
                for j in pc + 1..self.cols {
                    if !x[j].vanishes() && !a[(r, j)].vanishes() {
                        s = s + a[(r, j)].clone() * x[j].clone();
                    }
                }
                x[pc] = -(s * pivot_inv[r].clone());
            }
            basis.push(x);
        }
        basis
    }

    /// Bareiss determinant. `one` is returned for the empty matrix.
    pub fn determinant(&self, one: &T) -> Result<T> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.rows == 0 {
            return Ok(one.one_like());
        }
        let (a, pivots, swaps) = self.echelon();
        if pivots.len() < self.rows {
            return Ok(one.zero_like());
        }
        let d = a[(self.rows - 1, self.cols - 1)].clone();
        Ok(if swaps % 2 == 1 { -d } else { d })
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let Some(proto) = self.data.first() else {
            return Some(self.clone());
        };
        let mut a = self.clone();
        let mut inv = Self::identity_like(n, proto);
        for c in 0..n {
            let p = (c..n).find(|&i| !a[(i, c)].vanishes())?;
            a.swap_rows(p, c);
            inv.swap_rows(p, c);
            let d = a[(c, c)].recip();
            for j in 0..n {
                a[(c, j)] = a[(c, j)].clone() * d.clone();
                inv[(c, j)] = inv[(c, j)].clone() * d.clone();
            }
            for i in 0..n {
                if i == c || a[(i, c)].vanishes() {
                    continue;
                }
                let f = a[(i, c)].clone();
                for j in 0..n {
                    a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(c, j)].clone();
                    inv[(i, j)] = inv[(i, j)].clone() - f.clone() * inv[(c, j)].clone();
                }
            }
        }
        Some(inv)
    }
}

fn first_elem<'a, T>(a: &'a Matrix<T>, b: &'a Matrix<T>) -> Option<&'a T> {
    a.data.first().or_else(|| b.data.first())
}

impl<T: Field> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, o.rows, "matrix product dimension mismatch");
        let mut data = Vec::with_capacity(self.rows * o.cols);
        if self.rows * o.cols > 0 {
            let proto = first_elem(self, o).expect("product of empty factors with nonempty result");
            for i in 0..self.rows {
                for j in 0..o.cols {
                    let mut acc = proto.zero_like();
                    for k in 0..self.cols {
                        let a = &self[(i, k)];
                        if !a.vanishes() {
                            acc = acc + a.clone() * o[(k, j)].clone();
                        }
                    }
                    data.push(acc);
                }
            }
        }
        Matrix { rows: self.rows, cols: o.cols, data }
    }
}

impl<T: Field> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, o: &Matrix<T>) -> Matrix<T> {
        assert!(self.rows == o.rows && self.cols == o.cols, "matrix sum dimension mismatch");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl<T: Field> Sub for &Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, o: &Matrix<T>) -> Matrix<T> {
        assert!(self.rows == o.rows && self.cols == o.cols, "matrix difference dimension mismatch");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl<T: Field> Neg for &Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        self.map(|a| -a.clone())
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, BigRational::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::identity_like(n, &BigRational::zero())
    }

    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        Self::from_rows(rows).expect("ragged integer matrix")
    }

    pub fn det(&self) -> Result<BigRational> {
        self.determinant(&BigRational::one())
    }

    pub fn block_sum(&self, other: &Self) -> Self {
        self.block_diag(other, &BigRational::zero())
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    /// det(tI − m), by the division-free Berkowitz recursion.
    pub fn charpoly(&self) -> Result<RatPoly> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "characteristic polynomial of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(RatPoly::one());
        }
        // coefficients highest degree first
        let mut v = vec![BigRational::one(), -self[(0, 0)].clone()];
        for r in 1..n {
            let sub = self.leading(r);
            let row: Vec<BigRational> = (0..r).map(|j| self[(r, j)].clone()).collect();
            let mut vec: Vec<BigRational> = (0..r).map(|i| self[(i, r)].clone()).collect();
            let mut col = vec![BigRational::one(), -self[(r, r)].clone()];
            for _ in 0..r {
                let dot = row.iter().zip(&vec).fold(BigRational::zero(), |s, (a, b)| s + a * b);
                col.push(-dot);
                vec = sub.mul_vec(&vec);
            }
            let mut nv = vec![BigRational::zero(); r + 2];
            for (i, slot) in nv.iter_mut().enumerate() {
                for (j, vj) in v.iter().enumerate().take(i + 1) {
                    *slot = &*slot + &col[i - j] * vj;
                }
            }
            v = nv;
        }
        v.reverse();
        Ok(RatPoly::new(v))
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| &self.data[i * self.cols..(i + 1) * self.cols])).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn kernel_examples() {
        assert!(RatMatrix::identity(3).kernel().is_empty());
        assert_eq!(RatMatrix::zeros(2, 2).kernel().len(), 2);
        let k = RatMatrix::from_ints(&[[0, 1], [0, 0]]).kernel();
        assert_eq!(k, vec![vec![q(1), q(0)]]);
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(RatMatrix::from_ints(&[[5]]).charpoly().unwrap(), RatPoly::from_ints(&[-5, 1]));
        let h = RatMatrix::from_ints(&[[0, -1], [1, 1]]);
        assert_eq!(h.charpoly().unwrap(), RatPoly::from_ints(&[1, -1, 1]));
        assert!(RatMatrix::zeros(2, 3).charpoly().is_err());
    }

    #[test]
    fn det_and_inverse() {
        let m = RatMatrix::from_ints(&[[0, 2, 1], [1, 1, 0], [3, 0, 1]]);
        assert_eq!(m.det().unwrap(), q(-5));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, RatMatrix::identity(3));
        assert!(RatMatrix::from_ints(&[[1, 2], [2, 4]]).inverse().is_none());
        assert_eq!(RatMatrix::empty().det().unwrap(), q(1));
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(RatMatrix::from_rows(vec![vec![q(1)], vec![q(1), q(2)]]).is_err());
    }
}
