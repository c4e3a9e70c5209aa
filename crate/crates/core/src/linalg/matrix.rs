use std::fmt;

use crate::scalars::Cyclo;

use super::sparse::SparseVec;
use super::subspace::{left_kernel, Subspace};
use super::LinalgError;

/// A dense row-major matrix over ℚ(ζ_N).
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    order: u32,
    data: Vec<Cyclo>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, order: u32) -> Self {
        Matrix {
            rows,
            cols,
            order,
            data: vec![Cyclo::zero(order); rows * cols],
        }
    }

    pub fn identity(n: usize, order: u32) -> Self {
        let mut m = Matrix::zeros(n, n, order);
        for i in 0..n {
            m.data[i * n + i] = Cyclo::one(order);
        }
        m
    }

    pub fn scalar(n: usize, c: &Cyclo) -> Self {
        let mut m = Matrix::zeros(n, n, c.order());
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    /// Entries are promoted to `order`.
    pub fn from_rows(order: u32, rows: Vec<Vec<Cyclo>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(LinalgError::Ragged);
            }
            for x in row {
                data.push(x.embed(order).map_err(LinalgError::Scalar)?);
            }
        }
        Ok(Matrix { rows: r, cols: c, order, data })
    }

    pub fn from_ints(order: u32, rows: &[&[i64]]) -> Self {
        let v = rows
            .iter()
            .map(|r| r.iter().map(|&x| Cyclo::from_int(order, x)).collect())
            .collect();
        Matrix::from_rows(order, v).expect("rectangular literal")
    }

    /// The matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, order: u32, columns: &[SparseVec]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len(), order);
        for (j, col) in columns.iter().enumerate() {
            for (i, c) in col.iter() {
                m.data[i * m.cols + j] = c.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclo {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: Cyclo) {
        self.data[i * self.cols + j] = c;
    }

    pub fn row(&self, i: usize) -> SparseVec {
        SparseVec::from_dense(&self.data[i * self.cols..(i + 1) * self.cols])
    }

    pub fn column(&self, j: usize) -> SparseVec {
        SparseVec::from_sorted((0..self.rows).map(|i| (i, self.get(i, j).clone())).collect())
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Cyclo::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let order = self.order.max(other.order);
        let mut out = Matrix::zeros(self.rows, other.cols, order);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::Shape {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order.max(other.order),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, c: &Cyclo) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order.max(c.order()),
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// `self += c · other` for same-shape matrices.
    pub fn add_scaled(&mut self, c: &Cyclo, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows, self.order);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Kronecker product with the ordering `(i, k) ↦ i·other.rows + k`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(r, c, self.order.max(other.order));
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * other.rows + k) * c + j * other.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Cyclo {
        let mut t = Cyclo::zero(self.order);
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// `Some(c)` when the matrix equals `c · Id`.
    pub fn scalar_value(&self) -> Option<Cyclo> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 { Cyclo::zero(self.order) } else { self.get(0, 0).clone() };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                let ok = if i == j { *x == c } else { x.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Row-major entries as one sparse vector of length `rows·cols`.
    pub fn vectorize(&self) -> SparseVec {
        SparseVec::from_dense(&self.data)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = vec![Cyclo::zero(self.order); self.rows];
        for (j, x) in v.iter() {
            for (i, slot) in out.iter_mut().enumerate() {
                let a = self.get(i, *j);
                if !a.is_zero() {
                    *slot += &(a * x);
                }
            }
        }
        SparseVec::from_dense(&out)
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows, self.order);
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("square");
        }
        acc
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over Q(E({}))", self.rows, self.cols, self.order)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form, rank and pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, usize, Vec<usize>) {
    let s = Subspace::span(m.cols, m.order, (0..m.rows).map(|i| m.row(i)));
    let mut out = Matrix::zeros(m.rows, m.cols, m.order);
    for (i, r) in s.basis().iter().enumerate() {
        for (j, c) in r.iter() {
            out.set(i, *j, c.clone());
        }
    }
    (out, s.dim(), s.pivots().to_vec())
}

/// `{v : m·v = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    left_kernel(&m.columns(), m.order)
}

/// `{v : f·v ∈ w}`, as the kernel of the quotient projection composed with `f`.
pub fn preimage(f: &Matrix, w: &Subspace) -> Result<Subspace, LinalgError> {
    if f.rows != w.ambient() {
        return Err(LinalgError::AmbientMismatch(f.rows, w.ambient()));
    }
    Ok(preimage_of_columns(&f.columns(), w))
}

/// Preimage for a linear map given by the images of the domain basis.
pub fn preimage_of_columns(columns: &[SparseVec], w: &Subspace) -> Subspace {
    let p = w.projector();
    let projected: Vec<SparseVec> = columns.iter().map(|c| p.project(c)).collect();
    left_kernel(&projected, w.order())
}
