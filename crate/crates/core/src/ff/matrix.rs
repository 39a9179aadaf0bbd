use std::fmt;

use serde::{Deserialize, Serialize};

use super::{FieldElement, FiniteField};
use crate::error::{Error, Result};

/// Dense row-major matrix over a single owner field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FiniteField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Serialized matrix: rows of entries, each entry a coefficient sequence
/// (low degree first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EncodedMatrix(pub Vec<Vec<Vec<u32>>>);

impl Matrix {
    pub fn zero(field: &FiniteField, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &FiniteField, n: usize) -> Self {
        Self::scalar(field, n, 1)
    }

    pub fn scalar(field: &FiniteField, n: usize, value: u32) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = value;
        }
        m
    }

    pub fn diagonal(field: &FiniteField, diag: &[u32]) -> Self {
        let n = diag.len();
        let mut m = Self::zero(field, n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    pub fn from_fn(field: &FiniteField, rows: usize, cols: usize, f: impl Fn(usize, usize) -> u32) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from raw element values (integers `< q`).
    pub fn from_raw_rows(field: &FiniteField, rows: &[Vec<u32>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let q = field.order();
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for &v in row {
                if u64::from(v) >= q {
                    return Err(Error::InvalidElement(format!("{v} >= field order {q}")));
                }
                data.push(v);
            }
        }
        Ok(Matrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data,
        })
    }

    /// Builds a matrix over the prime subfield from signed integers.
    pub fn from_ints(field: &FiniteField, rows: &[&[i64]]) -> Result<Self> {
        let raw: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_int(v)).collect())
            .collect();
        Self::from_raw_rows(field, &raw)
    }

    /// Builds a matrix from owned elements; every element must share one field.
    pub fn from_elements(rows: &[Vec<FieldElement>]) -> Result<Self> {
        let first = rows
            .iter()
            .flat_map(|r| r.iter())
            .next()
            .ok_or_else(|| Error::DimensionMismatch("empty matrix".into()))?;
        let field = first.field().clone();
        let mut raw = Vec::with_capacity(rows.len());
        for row in rows {
            let mut out = Vec::with_capacity(row.len());
            for e in row {
                field.check_same(e.field())?;
                out.push(e.raw());
            }
            raw.push(out);
        }
        Self::from_raw_rows(&field, &raw)
    }

    pub fn decode(field: &FiniteField, enc: &EncodedMatrix) -> Result<Self> {
        let raw = enc
            .0
            .iter()
            .map(|row| row.iter().map(|e| field.from_coeffs(e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_raw_rows(field, &raw)
    }

    pub fn encode(&self) -> EncodedMatrix {
        EncodedMatrix(
            (0..self.rows)
                .map(|r| self.row(r).iter().map(|&v| self.field.coeffs(v)).collect())
                .collect(),
        )
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
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

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.field.element(self.at(r, c))
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.at(r, c)).collect()
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.field.check_same(&rhs.field)?;
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self.mul_unchecked(rhs))
    }

    pub(crate) fn mul_unchecked(&self, rhs: &Matrix) -> Matrix {
        let f = &self.field;
        let mut out = Matrix::zero(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.at(i, l);
                if a == 0 {
                    continue;
                }
                let rrow = rhs.row(l);
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, &b) in orow.iter_mut().zip(rrow) {
                    if b != 0 {
                        *o = f.add(*o, f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    fn zip_with(&self, rhs: &Matrix, op: impl Fn(u32, u32) -> u32) -> Result<Matrix> {
        self.field.check_same(&rhs.field)?;
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch("elementwise shape".into()));
        }
        let mut out = self.clone();
        for (o, &b) in out.data.iter_mut().zip(&rhs.data) {
            *o = op(*o, b);
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| self.field.sub(a, b))
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = self.field.mul(*v, s);
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |r, c| self.at(c, r))
    }

    /// Determinant by elimination; square matrices only.
    pub fn det(&self) -> Result<u32> {
        self.require_square()?;
        let f = &self.field;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = 1u32;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return Ok(0);
            };
            if piv != col {
                for c in 0..n {
                    a.swap(piv * n + c, col * n + c);
                }
                det = f.neg(det);
            }
            let pv = a[col * n + col];
            det = f.mul(det, pv);
            let inv = f.inv(pv).expect("nonzero pivot");
            for r in col + 1..n {
                let factor = f.mul(a[r * n + col], inv);
                if factor == 0 {
                    continue;
                }
                for c in col..n {
                    let v = f.mul(factor, a[col * n + c]);
                    a[r * n + c] = f.sub(a[r * n + c], v);
                }
            }
        }
        Ok(det)
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Matrix> {
        self.require_square()?;
        let f = &self.field;
        let n = self.rows;
        let w = 2 * n;
        let mut a = vec![0u32; n * w];
        for r in 0..n {
            a[r * w..r * w + n].copy_from_slice(self.row(r));
            a[r * w + n + r] = 1;
        }
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r * w + col] != 0).ok_or(Error::Singular)?;
            if piv != col {
                for c in 0..w {
                    a.swap(piv * w + c, col * w + c);
                }
            }
            let inv = f.inv(a[col * w + col]).expect("nonzero pivot");
            for c in 0..w {
                a[col * w + c] = f.mul(a[col * w + c], inv);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * w + col];
                if factor == 0 {
                    continue;
                }
                for c in 0..w {
                    let v = f.mul(factor, a[col * w + c]);
                    a[r * w + c] = f.sub(a[r * w + c], v);
                }
            }
        }
        Ok(Matrix::from_fn(f, n, n, |r, c| a[r * w + n + c]))
    }

    pub fn pow(&self, mut e: u64) -> Result<Matrix> {
        self.require_square()?;
        let mut base = self.clone();
        let mut acc = Matrix::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// The scalar `λ` if this matrix equals `λ·I`.
    pub fn scalar_value(&self) -> Option<u32> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let lambda = self.data.first().copied().unwrap_or(0);
        let ok = (0..n).all(|r| (0..n).all(|c| self.at(r, c) == if r == c { lambda } else { 0 }));
        ok.then_some(lambda)
    }

    pub fn is_identity(&self) -> bool {
        self.scalar_value() == Some(1)
    }

    /// Entries rescaled so the first nonzero entry is 1: one key per line of
    /// scalar multiples.
    pub fn projective_key(&self) -> Vec<u32> {
        match self.data.iter().find(|&&v| v != 0) {
            None => self.data.clone(),
            Some(&lead) => {
                let inv = self.field.inv(lead).expect("nonzero");
                self.data.iter().map(|&v| self.field.mul(v, inv)).collect()
            }
        }
    }

    /// Block matrix `[m_0 | m_1 | ...]`.
    pub fn hstack(ms: &[&Matrix]) -> Result<Matrix> {
        let first = ms.first().ok_or_else(|| Error::DimensionMismatch("empty stack".into()))?;
        let rows = first.rows;
        let mut cols = 0;
        for m in ms {
            first.field.check_same(&m.field)?;
            if m.rows != rows {
                return Err(Error::DimensionMismatch(format!("hstack rows {} vs {}", m.rows, rows)));
            }
            cols += m.cols;
        }
        let mut out = Matrix::zero(&first.field, rows, cols);
        let mut off = 0;
        for m in ms {
            for r in 0..rows {
                out.data[r * cols + off..r * cols + off + m.cols].copy_from_slice(m.row(r));
            }
            off += m.cols;
        }
        Ok(out)
    }

    /// Block matrix with the inputs stacked vertically.
    pub fn vstack(ms: &[&Matrix]) -> Result<Matrix> {
        let first = ms.first().ok_or_else(|| Error::DimensionMismatch("empty stack".into()))?;
        let cols = first.cols;
        let mut data = Vec::new();
        let mut rows = 0;
        for m in ms {
            first.field.check_same(&m.field)?;
            if m.cols != cols {
                return Err(Error::DimensionMismatch(format!("vstack cols {} vs {}", m.cols, cols)));
            }
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Ok(Matrix {
            field: first.field.clone(),
            rows,
            cols,
            data,
        })
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!("{}x{} is not square", self.rows, self.cols)))
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.field)?;
        let rows: Vec<&[u32]> = (0..self.rows).map(|r| self.row(r)).collect();
        write!(f, "{rows:?}")
    }
}
