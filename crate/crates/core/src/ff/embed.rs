use super::{FiniteField, Matrix};
use crate::error::{Error, Result};

/// Largest target field searched exhaustively for a root of the source modulus.
const SEARCH_LIMIT: u64 = 1 << 24;

/// A field homomorphism `F_{p^k} -> F_{p^{km}}`, fixed by the image of the
/// polynomial generator `x` (a root of the source modulus in the target).
#[derive(Clone, Debug)]
pub struct FieldEmbedding {
    source: FiniteField,
    target: FiniteField,
    /// powers[i] = image of x^i
    powers: Vec<u32>,
}

impl FieldEmbedding {
    pub fn new(source: &FiniteField, target: &FiniteField) -> Result<Self> {
        let err = || Error::NoEmbedding {
            from: source.order(),
            to: target.order(),
        };
        if source.characteristic() != target.characteristic() || target.degree() % source.degree() != 0 {
            return Err(err());
        }
        let modulus = source.modulus();
        let eval = |theta: u32| {
            modulus
                .iter()
                .rev()
                .fold(0u32, |acc, &c| target.add(target.mul(acc, theta), c as u32))
        };
        let theta = if source.degree() == 1 {
            0
        } else {
            if target.order() > SEARCH_LIMIT {
                return Err(err());
            }
            target.elements().find(|&t| eval(t) == 0).ok_or_else(err)?
        };
        let mut powers = Vec::with_capacity(source.degree() as usize);
        let mut acc = 1u32;
        for _ in 0..source.degree() {
            powers.push(acc);
            acc = target.mul(acc, theta);
        }
        Ok(FieldEmbedding {
            source: source.clone(),
            target: target.clone(),
            powers,
        })
    }

    pub fn source(&self) -> &FiniteField {
        &self.source
    }

    pub fn target(&self) -> &FiniteField {
        &self.target
    }

    pub fn map(&self, a: u32) -> u32 {
        let t = &self.target;
        self.source
            .coeffs(a)
            .iter()
            .zip(&self.powers)
            .fold(0, |acc, (&c, &pw)| t.add(acc, t.mul(c, pw)))
    }

    pub fn map_matrix(&self, m: &Matrix) -> Result<Matrix> {
        self.source.check_same(m.field())?;
        Ok(Matrix::from_fn(&self.target, m.rows(), m.cols(), |r, c| self.map(m.at(r, c))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::rank;

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        for (p, k, m) in [(2u64, 2u32, 2u32), (3, 1, 2), (2, 3, 2), (3, 2, 2), (5, 1, 3)] {
            let small = FiniteField::new(p, k).unwrap();
            let big = FiniteField::new(p, k * m).unwrap();
            let e = FieldEmbedding::new(&small, &big).unwrap();
            for a in small.elements() {
                for b in small.elements() {
                    assert_eq!(e.map(small.add(a, b)), big.add(e.map(a), e.map(b)));
                    assert_eq!(e.map(small.mul(a, b)), big.mul(e.map(a), e.map(b)));
                }
            }
            let images: std::collections::HashSet<u32> = small.elements().map(|a| e.map(a)).collect();
            assert_eq!(images.len() as u64, small.order());
        }
    }

    #[test]
    fn rank_is_extension_invariant() {
        let small = FiniteField::new(3, 1).unwrap();
        let big = FiniteField::new(3, 3).unwrap();
        let e = FieldEmbedding::new(&small, &big).unwrap();
        let m = Matrix::from_ints(&small, &[&[1, 2, 0], &[2, 1, 0], &[0, 1, 1]]).unwrap();
        assert_eq!(rank(&m), rank(&e.map_matrix(&m).unwrap()));
    }

    #[test]
    fn incompatible_degrees() {
        let a = FiniteField::new(2, 2).unwrap();
        let b = FiniteField::new(2, 3).unwrap();
        assert!(FieldEmbedding::new(&a, &b).is_err());
    }
}
