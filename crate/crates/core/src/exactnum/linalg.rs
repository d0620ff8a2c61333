//! Dense exact matrices with fraction-free (Bareiss) rank and solve.

use std::fmt;

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Row-major dense matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DenseMat<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> DenseMat<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMat {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.set(k, k, S::one());
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(DenseMat { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Self::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    /// Matrix whose `k`-th column is `columns[k]`.
    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (k, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::ShapeMismatch("column length".into()));
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, k, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn conj_transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).conj());
            }
        }
        t
    }

    pub fn matmul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += &a.mul_ref(b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &a.mul_ref(x);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        Ok(DenseMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        Ok(DenseMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        })
    }

    pub fn scale(&self, s: &S) -> Self {
        DenseMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul_ref(s)).collect(),
        }
    }

    fn same_shape(&self, o: &Self) -> Result<()> {
        if self.rows == o.rows && self.cols == o.cols {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )))
        }
    }

    /// Kronecker product; row `(i, k)` of the result is `i * o.rows + k`.
    pub fn kron(&self, o: &Self) -> Self {
        let mut out = Self::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if !b.is_zero() {
                            out.set(i * o.rows + k, j * o.cols + l, a.mul_ref(b));
                        }
                    }
                }
            }
        }
        out
    }

    /// Forward Bareiss elimination restricted to the first `pivot_cols`
    /// columns. Returns the reduced matrix and the pivot positions.
    fn bareiss(&self, pivot_cols: usize) -> (Self, Vec<(usize, usize)>) {
        let mut m = self.clone();
        let cols = m.cols;
        let mut prev = S::one();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..pivot_cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.data.swap(p * cols + j, r * cols + j);
                }
            }
            let piv = m.get(r, col).clone();
            let prev_inv = prev.inv().expect("previous pivot is nonzero");
            for i in r + 1..m.rows {
                let lead = m.get(i, col).clone();
                if lead.is_zero() {
                    // Already eliminated; leaving the row unscaled keeps it
                    // a nonzero multiple of the Bareiss row.
                    continue;
                }
                for j in col + 1..cols {
                    let v = piv.mul_ref(m.get(i, j)) - lead.mul_ref(m.get(r, j));
                    m.set(i, j, v.mul_ref(&prev_inv));
                }
                m.set(i, col, S::zero());
            }
            prev = piv;
            pivots.push((r, col));
            r += 1;
        }
        (m, pivots)
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        self.bareiss(self.cols).1.len()
    }

    /// Solves `self · x = b`. `Ok(None)` means the system is inconsistent;
    /// otherwise a solution with free variables set to zero is returned.
    pub fn solve(&self, b: &[S]) -> Result<Option<Vec<S>>> {
        let rhs = DenseMat::from_columns(b.len(), &[b.to_vec()])?;
        Ok(self.solve_many(&rhs)?.map(|x| x.column(0)))
    }

    /// Solves `self · X = B` column by column in one elimination.
    pub fn solve_many(&self, rhs: &Self) -> Result<Option<Self>> {
        if rhs.rows != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "right-hand side has {} rows, matrix has {}",
                rhs.rows, self.rows
            )));
        }
        let n = self.cols;
        let mut aug = Self::zeros(self.rows, n + rhs.cols);
        for i in 0..self.rows {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                aug.set(i, n + j, rhs.get(i, j).clone());
            }
        }
        let (m, pivots) = aug.bareiss(n);
        let rank = pivots.len();
        for i in rank..m.rows {
            if (n..m.cols).any(|j| !m.get(i, j).is_zero()) {
                return Ok(None);
            }
        }
        let mut x = Self::zeros(n, rhs.cols);
        for &(r, pc) in pivots.iter().rev() {
            let inv = m.get(r, pc).inv().expect("pivot is nonzero");
            for k in 0..rhs.cols {
                let mut acc = m.get(r, n + k).clone();
                for &(_, other) in pivots.iter().filter(|&&(_, c)| c > pc) {
                    let a = m.get(r, other);
                    if !a.is_zero() {
                        acc -= &a.mul_ref(x.get(other, k));
                    }
                }
                x.set(pc, k, acc.mul_ref(&inv));
            }
        }
        Ok(Some(x))
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = m.get(r, col).inv().expect("pivot is nonzero");
            for j in col..cols {
                let v = m.get(r, j).mul_ref(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, col).is_zero() {
                    continue;
                }
                let f = m.get(i, col).clone();
                for j in col..cols {
                    let v = m.get(i, j).clone() - f.mul_ref(m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, pivots)
    }

    /// Canonical basis of the row space: the nonzero rows of the RREF.
    pub fn row_space_basis(&self) -> Vec<Vec<S>> {
        let (m, pivots) = self.rref();
        (0..pivots.len()).map(|i| m.row(i).to_vec()).collect()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> DenseMat<T> {
        DenseMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Entries as canonical strings, row-major.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(Scalar::to_canonical).collect())
            .collect()
    }
}

impl<S: Scalar> fmt::Debug for DenseMat<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMat {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(Scalar::to_canonical).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
