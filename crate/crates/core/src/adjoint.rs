//! The adjoint representation of `SL_n` on `sl_n`, fixed spaces, and class
//! dimensions of explicit elements.
//!
//! Basis order: the off-diagonal `E_ij` in row-major order, then the simple
//! coroots `H_i = E_ii - E_{i+1,i+1}`.

use std::collections::HashMap;
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::{FiniteField, Matrix};

/// Cached `Ad` matrices beyond this count are computed but not stored.
const CACHE_LIMIT: usize = 1 << 16;

/// `sl_n` over a finite field with a memoised adjoint action.
#[derive(Debug)]
pub struct AdjointRep {
    field: FiniteField,
    n: usize,
    cache: RwLock<HashMap<Vec<u32>, Matrix>>,
}

impl Clone for AdjointRep {
    fn clone(&self) -> Self {
        AdjointRep::new(&self.field, self.n)
    }
}

/// Class dimension of an element, exact and via the Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDim {
    /// `n² - dim C_{M_n}(g)`, the dimension of the `GL_n`-class (equal to the `SL_n`-class).
    pub exact: usize,
    /// `rank(Ad(g) - I)` on `sl_n`.
    pub lie_algebra: usize,
}

impl ClassDim {
    /// The two computations disagree, which only happens for non-smooth
    /// centralizers in bad characteristic.
    pub fn differs(&self) -> bool {
        self.exact != self.lie_algebra
    }
}

impl AdjointRep {
    pub fn new(field: &FiniteField, n: usize) -> Self {
        AdjointRep {
            field: field.clone(),
            n,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `n² - 1`.
    pub fn dim(&self) -> usize {
        self.n * self.n - 1
    }

    /// The basis matrices in coordinate order.
    pub fn basis(&self) -> Vec<Matrix> {
        let n = self.n;
        let mut b = Vec::with_capacity(self.dim());
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let mut e = Matrix::zero(&self.field, n, n);
                    e.set(i, j, 1);
                    b.push(e);
                }
            }
        }
        let minus_one = self.field.neg(1);
        for i in 0..n - 1 {
            let mut h = Matrix::zero(&self.field, n, n);
            h.set(i, i, 1);
            h.set(i + 1, i + 1, minus_one);
            b.push(h);
        }
        b
    }

    /// Coordinates of a traceless matrix in the fixed basis.
    pub fn coords(&self, x: &Matrix) -> Result<Vec<u32>> {
        self.check(x)?;
        let f = &self.field;
        let n = self.n;
        let mut trace = 0;
        for i in 0..n {
            trace = f.add(trace, x.at(i, i));
        }
        if trace != 0 {
            return Err(Error::InvalidElement("matrix is not traceless".into()));
        }
        Ok(self.coords_unchecked(x.data()))
    }

    /// Coordinates of the traceless part; the last diagonal entry is implied.
    fn coords_unchecked(&self, x: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let n = self.n;
        let mut v = Vec::with_capacity(self.dim());
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    v.push(x[i * n + j]);
                }
            }
        }
        // X = Σ h_i H_i gives X_ii = h_i - h_{i-1}
        let mut h = 0;
        for i in 0..n - 1 {
            h = f.add(h, x[i * n + i]);
            v.push(h);
        }
        v
    }

    /// The traceless matrix with the given coordinates.
    pub fn from_coords(&self, v: &[u32]) -> Result<Matrix> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for a {}-dimensional algebra",
                v.len(),
                self.dim()
            )));
        }
        let f = &self.field;
        let n = self.n;
        let mut m = Matrix::zero(f, n, n);
        let mut it = v.iter();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    m.set(i, j, *it.next().expect("length checked"));
                }
            }
        }
        let h: Vec<u32> = it.copied().collect();
        for i in 0..n {
            let above = if i < n - 1 { h[i] } else { 0 };
            let below = if i > 0 { h[i - 1] } else { 0 };
            m.set(i, i, f.sub(above, below));
        }
        Ok(m)
    }

    fn check(&self, g: &Matrix) -> Result<()> {
        self.field.check_same(g.field())?;
        if g.rows() != self.n || g.cols() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "expected {0}x{0}, got {1}x{2}",
                self.n,
                g.rows(),
                g.cols()
            )));
        }
        Ok(())
    }

    /// Matrix of `X ↦ g X g⁻¹` on `sl_n`; column `c` holds the image of basis element `c`.
    pub fn ad_matrix(&self, g: &Matrix) -> Result<Matrix> {
        self.check(g)?;
        let key = g.projective_key();
        if let Some(m) = self.cache.read().expect("cache lock").get(&key) {
            return Ok(m.clone());
        }
        let ginv = g.inverse()?;
        let m = self.ad_uncached(g, &ginv);
        let mut cache = self.cache.write().expect("cache lock");
        if cache.len() < CACHE_LIMIT {
            cache.insert(key, m.clone());
        }
        Ok(m)
    }

    fn ad_uncached(&self, g: &Matrix, ginv: &Matrix) -> Matrix {
        let f = &self.field;
        let n = self.n;
        let d = self.dim();
        let mut out = Matrix::zero(f, d, d);
        let mut image = vec![0u32; n * n];
        let mut col = 0;
        // g E_ij g⁻¹ = g[:, i] ⊗ g⁻¹[j, :]
        let outer = |image: &mut [u32], i: usize, j: usize, s: u32| {
            for r in 0..n {
                let a = f.mul(s, g.at(r, i));
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    image[r * n + c] = f.add(image[r * n + c], f.mul(a, ginv.at(j, c)));
                }
            }
        };
        let minus_one = f.neg(1);
        let mut pairs: Vec<Vec<(usize, usize, u32)>> = Vec::with_capacity(d);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    pairs.push(vec![(i, j, 1)]);
                }
            }
        }
        for i in 0..n - 1 {
            pairs.push(vec![(i, i, 1), (i + 1, i + 1, minus_one)]);
        }
        for terms in pairs {
            image.iter_mut().for_each(|x| *x = 0);
            for (i, j, s) in terms {
                outer(&mut image, i, j, s);
            }
            for (r, v) in self.coords_unchecked(&image).into_iter().enumerate() {
                out.set(r, col, v);
            }
            col += 1;
        }
        out
    }

    /// `dim sl_n^g = kernel_dim(Ad(g) - I)`.
    pub fn fixed_space_dim(&self, g: &Matrix) -> Result<usize> {
        Ok(self.dim() - self.lie_class_dim(g)?)
    }

    /// `rank(Ad(g) - I)`.
    pub fn lie_class_dim(&self, g: &Matrix) -> Result<usize> {
        let ad = self.ad_matrix(g)?;
        Ok(ad.sub(&Matrix::identity(&self.field, self.dim()))?.rank())
    }

    /// Both class-dimension computations for `g`.
    pub fn class_dim(&self, g: &Matrix) -> Result<ClassDim> {
        Ok(ClassDim {
            exact: exact_class_dim(g)?,
            lie_algebra: self.lie_class_dim(g)?,
        })
    }
}

/// `n² - dim{X ∈ M_n : gX = Xg}`. The `GL_n`-centralizer is the open subset of
/// invertible elements of the commutant, so this is the class dimension in
/// every characteristic.
pub fn exact_class_dim(g: &Matrix) -> Result<usize> {
    if !g.is_square() {
        return Err(Error::DimensionMismatch("class dimension of a non-square matrix".into()));
    }
    if g.det()? == 0 {
        return Err(Error::Singular);
    }
    let f = g.field();
    let n = g.rows();
    let nn = n * n;
    let mut l = Matrix::zero(f, nn, nn);
    // (gX - Xg)_{ab} = Σ_c g_ac X_cb - X_ac g_cb
    for a in 0..n {
        for b in 0..n {
            let row = a * n + b;
            for c in 0..n {
                let x = l.at(row, c * n + b);
                l.set(row, c * n + b, f.add(x, g.at(a, c)));
                let y = l.at(row, a * n + c);
                l.set(row, a * n + c, f.sub(y, g.at(c, b)));
            }
        }
    }
    Ok(l.rank())
}
