//! Dense exact vectors and matrices over [`Rational`].

use std::fmt;
use std::ops::{Index, IndexMut};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{LinkageError, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RVector(pub Vec<Rational>);

impl RVector {
    pub fn zeros(n: usize) -> Self {
        RVector(vec![Rational::ZERO; n])
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(it: I) -> Self {
        RVector(it.into_iter().map(Rational::from_int).collect())
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Rational::ONE;
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    /// Standard dot product.
    pub fn dot(&self, other: &RVector) -> Result<Rational> {
        if self.len() != other.len() {
            return Err(LinkageError::Dimension(format!(
                "dot of lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| *a * *b).sum())
    }

    pub fn add(&self, other: &RVector) -> RVector {
        debug_assert_eq!(self.len(), other.len());
        RVector(self.0.iter().zip(&other.0).map(|(a, b)| *a + *b).collect())
    }

    pub fn sub(&self, other: &RVector) -> RVector {
        debug_assert_eq!(self.len(), other.len());
        RVector(self.0.iter().zip(&other.0).map(|(a, b)| *a - *b).collect())
    }

    pub fn scale(&self, c: Rational) -> RVector {
        RVector(self.0.iter().map(|a| *a * c).collect())
    }

    pub fn neg(&self) -> RVector {
        RVector(self.0.iter().map(|a| -*a).collect())
    }
}

impl Index<usize> for RVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Debug for RVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Row-major dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RMatrix {
            rows,
            cols,
            entries: vec![Rational::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinkageError::Dimension("ragged rows".into()));
        }
        Ok(RMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer rows; panics on ragged input (intended for literals).
    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| Rational::from_int(x)).collect())
            .collect();
        Self::from_rows(rows).expect("ragged integer matrix literal")
    }

    /// `scale · rows`, the shape tables use for inverse matrices.
    pub fn scaled_int_rows<R: AsRef<[i64]>>(scale: Rational, rows: &[R]) -> Self {
        let m = Self::from_int_rows(rows);
        m.scale(scale)
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

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn scale(&self, c: Rational) -> RMatrix {
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| *x * c).collect(),
        }
    }

    pub fn transpose(&self) -> RMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul(&self, other: &RMatrix) -> Result<RMatrix> {
        if self.cols != other.rows {
            return Err(LinkageError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &RVector) -> Result<RVector> {
        if self.cols != v.len() {
            return Err(LinkageError::Dimension(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(RVector(
            (0..self.rows)
                .map(|i| self.row(i).iter().zip(v.iter()).map(|(a, b)| *a * *b).sum())
                .collect(),
        ))
    }

    /// Least common multiple of all entry denominators: the `k` in `(1/k)·M`
    /// with `M` integral.
    pub fn common_denominator(&self) -> i64 {
        self.entries.iter().fold(1i64, |acc, x| acc.lcm(&x.denom()))
    }

    /// Exact determinant by rational Gaussian elimination.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(LinkageError::Dimension(format!(
                "determinant of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::ONE;
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Ok(Rational::ZERO);
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let pivot = a[(col, col)];
            det = det * pivot;
            for r in col + 1..n {
                let f = a[(r, col)] / pivot;
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = a[(col, c)];
                    a[(r, c)] = a[(r, c)] - f * v;
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse by Gauss–Jordan elimination; any nonzero pivot is used.
    pub fn inverse(&self) -> Result<RMatrix> {
        if !self.is_square() {
            return Err(LinkageError::Dimension(format!(
                "inverse of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(LinkageError::Singular)?;
            a.swap_rows(p, col);
            inv.swap_rows(p, col);
            let pr = a[(col, col)].recip().expect("nonzero pivot");
            for c in 0..n {
                a[(col, c)] = a[(col, c)] * pr;
                inv[(col, c)] = inv[(col, c)] * pr;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[(r, col)];
                if f.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let (x, y) = (a[(col, c)], inv[(col, c)]);
                    a[(r, c)] = a[(r, c)] - f * x;
                    inv[(r, c)] = inv[(r, c)] - f * y;
                }
            }
        }
        Ok(inv)
    }

    /// `vᵀ · M · v`.
    pub fn quad_form(&self, v: &RVector) -> Result<Rational> {
        if !self.is_square() || self.rows != v.len() {
            return Err(LinkageError::Dimension(format!(
                "quadratic form of {}x{} matrix on vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut acc = Rational::ZERO;
        for i in 0..self.rows {
            if v[i].is_zero() {
                continue;
            }
            for j in 0..self.cols {
                if v[j].is_zero() {
                    continue;
                }
                acc = acc + v[i] * self[(i, j)] * v[j];
            }
        }
        Ok(acc)
    }

    /// Rank by row reduction.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, rank);
            let pivot = a[(rank, col)];
            for r in rank + 1..self.rows {
                let f = a[(r, col)] / pivot;
                if f.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let v = a[(rank, c)];
                    a[(r, c)] = a[(r, c)] - f * v;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Leading principal minors `det(M[..k, ..k])` for `k = 1..=n`.
    pub fn leading_minors(&self) -> Result<Vec<Rational>> {
        if !self.is_square() {
            return Err(LinkageError::Dimension(
                "leading minors of non-square matrix".into(),
            ));
        }
        (1..=self.rows)
            .map(|k| self.principal(&(0..k).collect::<Vec<_>>()).det())
            .collect()
    }

    /// Submatrix on the given row/column indices.
    pub fn principal(&self, idx: &[usize]) -> RMatrix {
        let mut m = Self::zeros(idx.len(), idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m[(a, b)] = self[(i, j)];
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl Index<(usize, usize)> for RMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
