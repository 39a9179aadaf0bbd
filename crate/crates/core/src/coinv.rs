//! Coinvariants of a generated subgroup on `sl_n`.
//!
//! `D_H(g)` is spanned by the images of `I - Ad(c_i)` over the generators
//! alone; `coinv_dim = dim sl_n - dim D_H(g)`.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::adjoint::AdjointRep;
use crate::error::{Error, Result};
use crate::ff::{EchelonBasis, EncodedMatrix, Matrix};
use crate::matgrp::GroupTuple;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoinvariantResult {
    pub span_dim: usize,
    pub coinv_dim: usize,
    /// Reduced echelon basis of `D_H(g)`, as traceless matrices.
    pub basis_witness: Vec<EncodedMatrix>,
}

fn check_gens(gens: &[Matrix]) -> Result<AdjointRep> {
    let first = gens
        .first()
        .ok_or_else(|| Error::MalformedTuple("no generators".into()))?;
    if !first.is_square() {
        return Err(Error::DimensionMismatch("generators must be square".into()));
    }
    Ok(AdjointRep::new(first.field(), first.rows()))
}

fn span_result(rep: &AdjointRep, span: &EchelonBasis) -> Result<CoinvariantResult> {
    let basis_witness = span
        .basis()
        .iter()
        .map(|v| rep.from_coords(v).map(|m| m.encode()))
        .collect::<Result<Vec<_>>>()?;
    Ok(CoinvariantResult {
        span_dim: span.len(),
        coinv_dim: rep.dim() - span.len(),
        basis_witness,
    })
}

fn insert_image(rep: &AdjointRep, span: &mut EchelonBasis, g: &Matrix) -> Result<()> {
    let ad = rep.ad_matrix(g)?;
    let d = rep.dim();
    let m = Matrix::identity(rep.field(), d).sub(&ad)?;
    for c in 0..d {
        if span.is_full() {
            break;
        }
        span.insert(&m.column(c))?;
    }
    Ok(())
}

/// Coinvariants of the subgroup generated by `gens`, which need not satisfy
/// any product relation.
pub fn coinvariant_dim_of(gens: &[Matrix]) -> Result<CoinvariantResult> {
    let rep = check_gens(gens)?;
    coinvariants_with(&rep, gens)
}

/// As [`coinvariant_dim_of`] with a caller-supplied adjoint cache.
pub fn coinvariants_with(rep: &AdjointRep, gens: &[Matrix]) -> Result<CoinvariantResult> {
    let mut span = EchelonBasis::new(rep.field(), rep.dim());
    for g in gens {
        insert_image(rep, &mut span, g)?;
    }
    span_result(rep, &span)
}

pub fn coinvariant_dim(tuple: &GroupTuple) -> Result<CoinvariantResult> {
    coinvariant_dim_of(tuple.generators())
}

/// Brute-force oracle: the span of `I - Ad(w)` over every distinct element
/// `w` reachable by a word of length at most `word_length` in the generators
/// and their inverses. Fails once more than `cap` elements are visited.
pub fn coinvariant_dim_via_words(gens: &[Matrix], word_length: usize, cap: usize) -> Result<CoinvariantResult> {
    let rep = check_gens(gens)?;
    if word_length == 0 {
        return Err(Error::InvalidElement("word length must be at least 1".into()));
    }
    let mut letters = gens.to_vec();
    for g in gens {
        letters.push(g.inverse()?);
    }
    let id = Matrix::identity(rep.field(), rep.n());
    let mut seen: HashSet<Vec<u32>> = HashSet::from([id.projective_key()]);
    let mut queue = VecDeque::from([(id, 0usize)]);
    let mut span = EchelonBasis::new(rep.field(), rep.dim());
    while let Some((w, len)) = queue.pop_front() {
        if len == word_length {
            continue;
        }
        for l in &letters {
            let next = w.mul(l)?;
            if seen.insert(next.projective_key()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
                insert_image(&rep, &mut span, &next)?;
                queue.push_back((next, len + 1));
            }
        }
    }
    span_result(&rep, &span)
}
