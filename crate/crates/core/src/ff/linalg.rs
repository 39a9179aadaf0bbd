use super::{FiniteField, Matrix};
use crate::error::{Error, Result};

/// Row-reduces `a` (row-major, `cols` wide) in place and returns the rank.
pub(crate) fn eliminate(f: &FiniteField, a: &mut [u32], rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if piv != rank {
            for c in col..cols {
                a.swap(piv * cols + c, rank * cols + c);
            }
        }
        let inv = f.inv(a[rank * cols + col]).expect("nonzero pivot");
        for c in col..cols {
            a[rank * cols + c] = f.mul(a[rank * cols + c], inv);
        }
        for r in rank + 1..rows {
            let factor = a[r * cols + col];
            if factor == 0 {
                continue;
            }
            for c in col..cols {
                let v = a[rank * cols + c];
                if v != 0 {
                    a[r * cols + c] = f.sub(a[r * cols + c], f.mul(factor, v));
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank(m: &Matrix) -> usize {
    let mut data = m.data().to_vec();
    eliminate(m.field(), &mut data, m.rows(), m.cols())
}

/// Dimension of the right kernel `{v : m v = 0}`.
pub fn kernel_dim(m: &Matrix) -> usize {
    m.cols() - rank(m)
}

/// Dimension of the sum of the column spaces.
pub fn column_space_union(ms: &[Matrix]) -> Result<usize> {
    if ms.is_empty() {
        return Ok(0);
    }
    let refs: Vec<&Matrix> = ms.iter().collect();
    Ok(rank(&Matrix::hstack(&refs)?))
}

impl Matrix {
    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn kernel_dim(&self) -> usize {
        kernel_dim(self)
    }
}

/// Incrementally grown subspace of `F^dim` kept in reduced echelon form.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: FiniteField,
    dim: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: &FiniteField, dim: usize) -> Self {
        EchelonBasis {
            field: field.clone(),
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    fn reduce(&self, v: &mut [u32]) {
        let f = &self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(row) {
                if y != 0 {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(format!("vector of length {} in {}-space", v.len(), self.dim)));
        }
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|&x| x != 0) else {
            return Ok(false);
        };
        let f = &self.field;
        let inv = f.inv(w[p]).expect("nonzero");
        for x in &mut w {
            *x = f.mul(*x, inv);
        }
        for row in &mut self.rows {
            let c = row[p];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&w) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        self.rows.push(w);
        self.pivots.push(p);
        Ok(true)
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }
}
