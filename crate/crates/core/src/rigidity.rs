//! Cocycle spaces of triangle-group representations, the tangent map of the
//! product map, and the rigidity verdict for a generator tuple.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::adjoint::{AdjointRep, ClassDim};
use crate::coinv::coinvariants_with;
use crate::error::{Error, Result};
use crate::ff::{EncodedMatrix, FieldSpec, Matrix};
use crate::matgrp::{is_absolutely_irreducible, GroupTuple};

/// `Z¹`, `B¹` and `H¹` of the triangle group with coefficients in `sl_n`,
/// plus the same spaces with `Y_i` restricted to the tangent space of the
/// class of `c_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleSpaces {
    pub z1_dim: usize,
    pub b1_dim: usize,
    pub h1_dim: usize,
    /// Cocycles with `Y_i ∈ im(I - Ad(c_i))`: the tangent space of the
    /// product-one locus inside the product of conjugacy classes.
    pub z1_class_dim: usize,
    pub h1_class_dim: usize,
    /// Rows: power relators for each generator, then the product relator.
    /// Columns: `(Y_1, …, Y_n)` in adjoint coordinates.
    #[serde(skip)]
    pub relator_matrix: Option<Matrix>,
}

/// Prefix products `c'_i = c_1 ⋯ c_{i-1}`.
fn prefixes(gens: &[Matrix]) -> Vec<Matrix> {
    let mut acc = Matrix::identity(gens[0].field(), gens[0].rows());
    let mut out = Vec::with_capacity(gens.len());
    for g in gens {
        out.push(acc.clone());
        acc = acc.mul_unchecked(g);
    }
    out
}

/// `Σ_{j<a} A^j`.
fn geometric_sum(a: &Matrix, terms: u64) -> Matrix {
    let d = a.rows();
    let mut sum = Matrix::zero(a.field(), d, d);
    let mut pw = Matrix::identity(a.field(), d);
    for _ in 0..terms {
        sum = sum.add(&pw).expect("same shape");
        pw = pw.mul_unchecked(a);
    }
    sum
}

/// Copies `block` into `out` with its top-left corner at `(r, c)`.
fn block_row(out: &mut Matrix, r: usize, c: usize, block: &Matrix) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            out.set(r + i, c + j, block.at(i, j));
        }
    }
}

pub fn cocycle_spaces(tuple: &GroupTuple) -> Result<CocycleSpaces> {
    let rep = AdjointRep::new(tuple.field(), tuple.n());
    cocycle_spaces_with(&rep, tuple)
}

fn cocycle_spaces_with(rep: &AdjointRep, tuple: &GroupTuple) -> Result<CocycleSpaces> {
    let gens = tuple.generators();
    let m = gens.len();
    let d = rep.dim();
    let f = rep.field();
    let ads = gens.iter().map(|g| rep.ad_matrix(g)).collect::<Result<Vec<_>>>()?;
    let pre = prefixes(gens)
        .iter()
        .map(|c| rep.ad_matrix(c))
        .collect::<Result<Vec<_>>>()?;
    let mut rel = Matrix::zero(f, (m + 1) * d, m * d);
    for (i, (ad, &a)) in ads.iter().zip(tuple.declared_orders()).enumerate() {
        block_row(&mut rel, i * d, i * d, &geometric_sum(ad, a));
        block_row(&mut rel, m * d, i * d, &pre[i]);
    }
    let z1_dim = rel.kernel_dim();

    let id = Matrix::identity(f, d);
    let coboundary: Vec<Matrix> = ads.iter().map(|a| id.sub(a)).collect::<Result<_>>()?;
    let refs: Vec<&Matrix> = coboundary.iter().collect();
    let b1_dim = Matrix::vstack(&refs)?.rank();

    // Y_i = (I - Ad(c_i)) X_i: the product relator becomes the tangent map,
    // whose kernel modulo ker(I - Ad(c_i)) is the class-restricted Z¹.
    let tangent = tangent_blocks(rep, gens)?;
    let trefs: Vec<&Matrix> = tangent.iter().collect();
    let t = Matrix::hstack(&trefs)?;
    let source_dim: usize = coboundary.iter().map(Matrix::rank).sum();
    let z1_class_dim = source_dim - t.rank();

    Ok(CocycleSpaces {
        z1_dim,
        b1_dim,
        h1_dim: z1_dim - b1_dim,
        z1_class_dim,
        h1_class_dim: z1_class_dim - b1_dim,
        relator_matrix: Some(rel),
    })
}

/// `(I - Ad(c'_i c_i c'_i⁻¹)) Ad(c'_i) = Ad(c'_i) (I - Ad(c_i))` for each `i`.
fn tangent_blocks(rep: &AdjointRep, gens: &[Matrix]) -> Result<Vec<Matrix>> {
    let d = rep.dim();
    let id = Matrix::identity(rep.field(), d);
    prefixes(gens)
        .iter()
        .zip(gens)
        .map(|(p, g)| {
            let conj = p.mul(g)?.mul(&p.inverse()?)?;
            id.sub(&rep.ad_matrix(&conj)?)?.mul(&rep.ad_matrix(p)?)
        })
        .collect()
}

/// Rank of `(Y_1, …, Y_n) ↦ Σ (I - Ad(c'_i c_i c'_i⁻¹)) Ad(c'_i) Y_i`, the
/// differential of the product map along the class tangent directions.
pub fn tangent_product_rank(tuple: &GroupTuple) -> Result<usize> {
    let rep = AdjointRep::new(tuple.field(), tuple.n());
    tangent_rank_with(&rep, tuple.generators())
}

/// As [`tangent_product_rank`] for a bare generator list.
pub fn tangent_rank_of(gens: &[Matrix]) -> Result<usize> {
    let first = gens
        .first()
        .ok_or_else(|| Error::MalformedTuple("no generators".into()))?;
    let rep = AdjointRep::new(first.field(), first.rows());
    tangent_rank_with(&rep, gens)
}

fn tangent_rank_with(rep: &AdjointRep, gens: &[Matrix]) -> Result<usize> {
    let blocks = tangent_blocks(rep, gens)?;
    let refs: Vec<&Matrix> = blocks.iter().collect();
    Ok(Matrix::hstack(&refs)?.rank())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Irreducibility {
    Verified,
    Asserted,
    Failed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Rigid,
    NotRigidDimExcess,
    HypothesisFailed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Rigid => "RIGID",
            Verdict::NotRigidDimExcess => "NOT_RIGID_DIM_EXCESS",
            Verdict::HypothesisFailed => "HYPOTHESIS_FAILED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityReport {
    pub field: FieldSpec,
    pub n: usize,
    pub declared_orders: Vec<u64>,
    pub projective_orders: Vec<u64>,
    /// Exact class dimensions; these decide the verdict.
    pub class_dims: Vec<usize>,
    /// `rank(Ad(c_i) - I)` for comparison.
    pub lie_class_dims: Vec<usize>,
    pub sum_class_dims: usize,
    pub two_dim_g: usize,
    /// Scalar `λ` with `c_1 ⋯ c_n = λ I`; as an extra central generator it
    /// contributes class dimension 0.
    pub central_correction: u32,
    pub span_dim: usize,
    pub coinv_dim: usize,
    pub irreducible: Irreducibility,
    pub df_rank: usize,
    pub cocycles: CocycleSpaces,
    pub verdict: Verdict,
    pub flags: Vec<String>,
    pub generators: Vec<EncodedMatrix>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RigidityOptions {
    /// Skip the Burnside test and record irreducibility as asserted.
    pub assert_irreducible: bool,
}

pub fn rigidity_verdict(tuple: &GroupTuple) -> Result<RigidityReport> {
    rigidity_verdict_with(tuple, RigidityOptions::default())
}

/// Builds the report. When the hypotheses hold and the class dimensions sum
/// to less than `2 dim G` the tuple contradicts the dimension inequality, and
/// this returns [`Error::TheoremViolation`].
pub fn rigidity_verdict_with(tuple: &GroupTuple, opts: RigidityOptions) -> Result<RigidityReport> {
    let report = rigidity_report(tuple, opts)?;
    let hypotheses = report.coinv_dim == 0 && report.irreducible != Irreducibility::Failed;
    if hypotheses && report.sum_class_dims < report.two_dim_g {
        return Err(Error::TheoremViolation(format!(
            "coinvariants vanish and the tuple is irreducible, yet class dimensions {:?} sum to {} < {}",
            report.class_dims, report.sum_class_dims, report.two_dim_g
        )));
    }
    Ok(report)
}

/// The report without the inequality check; `verdict` is computed as if the
/// inequality held.
pub fn rigidity_report(tuple: &GroupTuple, opts: RigidityOptions) -> Result<RigidityReport> {
    let field = tuple.field();
    let n = tuple.n();
    let p = field.characteristic();
    let rep = AdjointRep::new(field, n);
    let gens = tuple.generators();
    let dims = gens.iter().map(|g| rep.class_dim(g)).collect::<Result<Vec<ClassDim>>>()?;
    let coinv = coinvariants_with(&rep, gens)?;
    let irreducible = if opts.assert_irreducible {
        Irreducibility::Asserted
    } else if is_absolutely_irreducible(gens)? {
        Irreducibility::Verified
    } else {
        Irreducibility::Failed
    };
    let df_rank = tangent_rank_with(&rep, gens)?;
    let cocycles = cocycle_spaces_with(&rep, tuple)?;

    let mut flags = Vec::new();
    for (i, cd) in dims.iter().enumerate() {
        if cd.differs() {
            flags.push(format!(
                "lie_algebra_class_dim_differs:{i}:exact={}:lie_algebra={}",
                cd.exact, cd.lie_algebra
            ));
        }
    }
    if p <= n as u64 {
        flags.push(format!("smoothness_assumed:small_characteristic:p={p}:n={n}"));
    }
    for (i, &e) in tuple.projective_orders().iter().enumerate() {
        if e % p == 0 {
            flags.push(format!("smoothness_assumed:non_semisimple_generator:{i}"));
        }
    }
    if df_rank != coinv.span_dim {
        flags.push(format!("tangent_rank_mismatch:df_rank={df_rank}:span_dim={}", coinv.span_dim));
    }
    flags.extend(tuple.warnings().iter().map(|w| format!("warning:{w}")));

    let class_dims: Vec<usize> = dims.iter().map(|c| c.exact).collect();
    let sum_class_dims = class_dims.iter().sum();
    let two_dim_g = 2 * rep.dim();
    let verdict = if coinv.coinv_dim > 0 || irreducible == Irreducibility::Failed {
        Verdict::HypothesisFailed
    } else if sum_class_dims == two_dim_g {
        Verdict::Rigid
    } else {
        Verdict::NotRigidDimExcess
    };
    Ok(RigidityReport {
        field: FieldSpec {
            p,
            k: field.degree(),
        },
        n,
        declared_orders: tuple.declared_orders().to_vec(),
        projective_orders: tuple.projective_orders().to_vec(),
        class_dims,
        lie_class_dims: dims.iter().map(|c| c.lie_algebra).collect(),
        sum_class_dims,
        two_dim_g,
        central_correction: tuple.product_scalar(),
        span_dim: coinv.span_dim,
        coinv_dim: coinv.coinv_dim,
        irreducible,
        df_rank,
        cocycles,
        verdict,
        flags,
        generators: gens.iter().map(Matrix::encode).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::FiniteField;
    use crate::matgrp::special_linear_group;
    use proptest::prelude::*;

    fn f(p: u64, k: u32) -> FiniteField {
        FiniteField::new(p, k).unwrap()
    }

    /// A (2,3,7) triple in SL_2(7) with product I, found by direct search.
    pub(crate) fn hurwitz_triple() -> GroupTuple {
        let f7 = f(7, 1);
        let g = special_linear_group(&f7, 2, false, 1000).unwrap();
        for a in 0..g.len() {
            if g.order(a) != 4 {
                continue;
            }
            for b in 0..g.len() {
                if g.order(b) != 3 && g.order(b) != 6 {
                    continue;
                }
                let c = g.inv(g.mul(a, b));
                if g.order(c) != 7 && g.order(c) != 14 {
                    continue;
                }
                let gens = vec![g.element(a).clone(), g.element(b).clone(), g.element(c).clone()];
                let t = GroupTuple::new(gens, vec![2, 3, 7]).unwrap();
                if is_absolutely_irreducible(t.generators()).unwrap() {
                    return t;
                }
            }
        }
        unreachable!("PSL_2(7) is a Hurwitz group")
    }

    #[test]
    fn trivial_tuples() {
        for (p, n) in [(5u64, 2usize), (3, 3)] {
            let fp = f(p, 1);
            let id = Matrix::identity(&fp, n);
            let d = n * n - 1;
            let t = GroupTuple::new(vec![id.clone(); 3], vec![p; 3]).unwrap();
            let c = cocycle_spaces(&t).unwrap();
            assert_eq!((c.z1_dim, c.b1_dim, c.h1_dim), (2 * d, 0, 2 * d));
            assert_eq!(tangent_product_rank(&t).unwrap(), 0);
            let coprime = if p == 5 { 3 } else { 2 };
            let t = GroupTuple::new(vec![id; 3], vec![coprime; 3]).unwrap();
            assert_eq!(cocycle_spaces(&t).unwrap().z1_dim, 0);
        }
    }

    #[test]
    fn inverse_pair_telescopes() {
        let f7 = f(7, 1);
        let c = Matrix::from_ints(&f7, &[&[2, 1], &[3, 2]]).unwrap();
        let t = GroupTuple::new(vec![c.clone(), c.inverse().unwrap()], vec![8, 8]).unwrap();
        let rep = AdjointRep::new(&f7, 2);
        assert_eq!(tangent_product_rank(&t).unwrap(), rep.lie_class_dim(&c).unwrap());
    }

    #[test]
    fn hurwitz_triple_report() {
        let t = hurwitz_triple();
        let r = rigidity_verdict(&t).unwrap();
        assert_eq!(r.class_dims, vec![2, 2, 2]);
        assert_eq!(r.coinv_dim, 0);
        assert_eq!(r.irreducible, Irreducibility::Verified);
        assert_eq!(r.verdict, Verdict::Rigid);
        assert_eq!(r.df_rank, 3);
        assert_eq!(r.cocycles.b1_dim, 3);
        // the order-7 generator is unipotent in characteristic 7, so its power
        // relator is (Ad - I)^6 = 0 and leaves that coordinate unconstrained
        assert_eq!(r.cocycles.z1_dim, 4);
        assert_eq!(r.cocycles.h1_dim, 1);
        assert_eq!(r.cocycles.h1_class_dim, 0);
        assert!(r.flags.iter().any(|s| s == "smoothness_assumed:non_semisimple_generator:2"));
    }

    #[test]
    fn commuting_diagonal_triple_fails_hypotheses() {
        let f7 = f(7, 1);
        let a = Matrix::diagonal(&f7, &[3, 5]);
        let b = Matrix::diagonal(&f7, &[2, 4]);
        let c = a.mul(&b).unwrap().inverse().unwrap();
        let t = GroupTuple::new(vec![a, b, c], vec![6, 3, 6]).unwrap();
        let r = rigidity_verdict(&t).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesisFailed);
        assert_eq!(r.irreducible, Irreducibility::Failed);
        assert!(r.coinv_dim >= 1);
    }

    #[test]
    fn identity_padded_pair_fails_hypotheses() {
        let f7 = f(7, 1);
        let c = Matrix::from_ints(&f7, &[&[0, 1], &[-1, 1]]).unwrap();
        let id = Matrix::identity(&f7, 2);
        let t = GroupTuple::new(vec![c.clone(), c.inverse().unwrap(), id], vec![6, 6, 1]).unwrap();
        assert_eq!(rigidity_verdict(&t).unwrap().verdict, Verdict::HypothesisFailed);
    }

    #[test]
    fn asserted_irreducibility_is_recorded() {
        let r = rigidity_verdict_with(&hurwitz_triple(), RigidityOptions { assert_irreducible: true }).unwrap();
        assert_eq!(r.irreducible, Irreducibility::Asserted);
        assert_eq!(r.verdict, Verdict::Rigid);
    }

    #[test]
    fn report_round_trips() {
        let r = rigidity_verdict(&hurwitz_triple()).unwrap();
        let back: RigidityReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        let mut expect = r.clone();
        expect.cocycles.relator_matrix = None;
        assert_eq!(back, expect);
    }

    fn sl2_table(which: usize) -> &'static crate::matgrp::FiniteGroupTable {
        use std::sync::OnceLock;
        static T: OnceLock<Vec<crate::matgrp::FiniteGroupTable>> = OnceLock::new();
        &T.get_or_init(|| {
            [(5u64, 1u32), (2, 2), (3, 2)]
                .iter()
                .map(|&(p, k)| special_linear_group(&f(p, k), 2, false, 10_000).unwrap())
                .collect()
        })[which]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn tangent_identity_and_conjugation_invariance(which in 0usize..3, a in 0usize..1000, b in 0usize..1000, h in 0usize..1000) {
            let g = sl2_table(which);
            let (x, y) = (g.element(a % g.len()).clone(), g.element(b % g.len()).clone());
            let z = x.mul(&y).unwrap().inverse().unwrap();
            let orders = [x.clone(), y.clone(), z.clone()].iter().map(|m| crate::matgrp::projective_order(m).unwrap()).collect();
            let t = GroupTuple::new(vec![x, y, z], orders).unwrap();
            let r = rigidity_report(&t, RigidityOptions::default()).unwrap();
            prop_assert_eq!(r.df_rank, r.span_dim);
            prop_assert!(r.cocycles.z1_dim >= r.cocycles.b1_dim);
            let hm = g.element(h % g.len());
            let tc = t.conjugate(hm).unwrap();
            let mut rc = rigidity_report(&tc, RigidityOptions::default()).unwrap();
            rc.generators = r.generators.clone();
            rc.cocycles.relator_matrix = None;
            let mut r0 = r.clone();
            r0.cocycles.relator_matrix = None;
            prop_assert_eq!(rc, r0);
        }
    }
}
