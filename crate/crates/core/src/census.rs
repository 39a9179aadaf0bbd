//! Exhaustive enumeration of homomorphisms from triangle groups
//! `T(a_1, …, a_n)` into small finite matrix groups, counted per tuple of
//! conjugacy classes.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::adjoint::AdjointRep;
use crate::error::{Error, Result};
use crate::ff::{prime_factors, EncodedMatrix, FieldSpec, FiniteField, Matrix};
use crate::matgrp::{special_linear_group, FiniteGroupTable, GroupTuple};
use crate::rigidity::{rigidity_verdict, RigidityReport};
use crate::rootdata::{RootSystem, RootType};

/// Default bound on the number of group elements.
pub const DEFAULT_GROUP_CAP: usize = 200_000;

/// Number of second-coordinate candidates per parallel work item.
const BLOCK: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    /// Element order followed by a letter, e.g. `7B`.
    pub label: String,
    pub order: u64,
    pub size: usize,
    /// Exact class dimension of the `SL_n` representative.
    pub class_dim: usize,
    pub representative: EncodedMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTupleCount {
    /// Indices into [`CensusResult::classes`].
    pub classes: Vec<usize>,
    pub labels: Vec<String>,
    pub hom_count: u64,
    pub epi_count: u64,
    pub class_dim_sum: usize,
    /// The least solution with first coordinate the class representative,
    /// lifted to `SL_n` with product exactly `I`: a surjective one when any
    /// exists.
    pub witness: Vec<EncodedMatrix>,
    pub witness_is_epi: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rigidity: Option<RigidityReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusResult {
    pub group_id: String,
    pub field: FieldSpec,
    pub n: usize,
    pub projective: bool,
    pub group_order: usize,
    pub signature: Vec<u64>,
    pub classes: Vec<ClassInfo>,
    /// Sorted by class indices.
    pub per_class_counts: Vec<ClassTupleCount>,
    pub total_hom: u64,
    pub total_epi: u64,
}

/// `SL_{rank+1}(q)` or `PSL_{rank+1}(q)`.
pub fn linear_group(rank: usize, q: u64, projective: bool, cap: usize) -> Result<FiniteGroupTable> {
    let primes = prime_factors(q);
    let &[p] = primes.as_slice() else {
        return Err(Error::NotPrime(q));
    };
    let (mut k, mut r) = (0u32, q);
    while r > 1 {
        r /= p;
        k += 1;
    }
    let field = FiniteField::new(p, k)?;
    special_linear_group(&field, rank + 1, projective, cap)
}

/// Group for a root-system letter; only type A has a matrix model.
pub fn group_for_type(letter: char, rank: usize, q: u64, projective: bool, cap: usize) -> Result<FiniteGroupTable> {
    match RootType::from_letter(letter) {
        Some(RootType::A) if rank >= 1 => linear_group(rank, q, projective, cap),
        Some(RootType::A) => Err(Error::InvalidRootSystem { letter, rank }),
        Some(_) => Err(Error::Unsupported(format!("no matrix model for type {letter}"))),
        None => Err(Error::InvalidRootSystem { letter, rank }),
    }
}

fn class_label(order: u64, nth: usize) -> String {
    let mut letters = Vec::new();
    let mut i = nth;
    loop {
        letters.push(b'A' + (i % 26) as u8);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    letters.reverse();
    format!("{order}{}", String::from_utf8(letters).expect("ascii"))
}

#[derive(Debug, Clone, Default)]
struct Acc {
    hom: u64,
    epi: u64,
    first_hom: Option<Vec<usize>>,
    first_epi: Option<Vec<usize>>,
}

impl Acc {
    fn merge(&mut self, o: Acc) {
        self.hom += o.hom;
        self.epi += o.epi;
        for (mine, theirs) in [(&mut self.first_hom, o.first_hom), (&mut self.first_epi, o.first_epi)] {
            if let Some(t) = theirs {
                if mine.as_ref().is_none_or(|m| t < *m) {
                    *mine = Some(t);
                }
            }
        }
    }
}

type Tally = BTreeMap<Vec<usize>, Acc>;

fn merge_tallies(mut a: Tally, b: Tally) -> Tally {
    for (k, v) in b {
        a.entry(k).or_default().merge(v);
    }
    a
}

struct Search<'a> {
    group: &'a FiniteGroupTable,
    signature: &'a [u64],
    class_of: &'a [u32],
    candidates: &'a [Vec<usize>],
}

impl Search<'_> {
    /// Extends `prefix` (whose product is `acc`) through all free coordinates.
    fn extend(&self, prefix: &mut Vec<usize>, acc: usize, tally: &mut Tally) {
        let g = self.group;
        let n = self.signature.len();
        if prefix.len() == n - 1 {
            let last = g.inv(acc);
            if self.signature[n - 1] % g.order(last) != 0 {
                return;
            }
            prefix.push(last);
            let key: Vec<usize> = prefix.iter().map(|&x| self.class_of[x] as usize).collect();
            let epi = g.generates(prefix);
            let e = tally.entry(key).or_default();
            e.hom += 1;
            if e.first_hom.is_none() {
                e.first_hom = Some(prefix.clone());
            }
            if epi {
                e.epi += 1;
                if e.first_epi.is_none() {
                    e.first_epi = Some(prefix.clone());
                }
            }
            prefix.pop();
            return;
        }
        for &x in &self.candidates[prefix.len()] {
            prefix.push(x);
            self.extend(prefix, g.mul(acc, x), tally);
            prefix.pop();
        }
    }
}

/// Counts `Hom(T(a_1, …, a_n), G)` and its surjective part per class tuple.
///
/// The first coordinate runs over class representatives and counts are
/// weighted by class size; the last coordinate is determined by the product
/// relation. Results do not depend on `workers`.
pub fn census(group: &FiniteGroupTable, signature: &[u64], workers: usize) -> Result<CensusResult> {
    census_capped(group, signature, workers, u64::MAX)
}

/// As [`census`], refusing when the number of enumerated tuples would exceed `work_cap`.
pub fn census_capped(group: &FiniteGroupTable, signature: &[u64], workers: usize, work_cap: u64) -> Result<CensusResult> {
    if signature.len() < 3 {
        return Err(Error::MalformedTuple(format!(
            "signature needs at least 3 entries, got {}",
            signature.len()
        )));
    }
    if signature.contains(&0) {
        return Err(Error::InvalidOrder);
    }
    let workers = workers.max(1);
    let cc = group.conjugacy_classes();
    let candidates: Vec<Vec<usize>> = signature
        .iter()
        .map(|&a| (0..group.len()).filter(|&x| a % group.order(x) == 0).collect())
        .collect();
    let reps: Vec<usize> = cc
        .classes
        .iter()
        .map(|c| c.representative)
        .filter(|&r| signature[0] % group.order(r) == 0)
        .collect();
    let estimate = candidates[1..signature.len() - 1]
        .iter()
        .fold(reps.len() as u128, |acc, c| acc.saturating_mul(c.len() as u128));
    if estimate > u128::from(work_cap) {
        return Err(Error::WorkCapExceeded { estimate, cap: work_cap });
    }
    let items: Vec<(usize, &[usize])> = reps
        .iter()
        .flat_map(|&r| candidates[1].chunks(BLOCK).map(move |c| (r, c)))
        .collect();
    let search = Search {
        group,
        signature,
        class_of: &cc.class_of,
        candidates: &candidates,
    };
    let run = || {
        items
            .par_iter()
            .map(|&(r, block)| {
                let mut tally = Tally::new();
                let mut prefix = vec![r];
                for &x in block {
                    prefix.push(x);
                    search.extend(&mut prefix, group.mul(r, x), &mut tally);
                    prefix.pop();
                }
                tally
            })
            .reduce(Tally::new, merge_tallies)
    };
    let tally = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?
        .install(run);

    let rep = AdjointRep::new(group.field(), group.degree());
    let mut per_order = BTreeMap::<u64, usize>::new();
    let classes = cc
        .classes
        .iter()
        .map(|c| {
            let nth = per_order.entry(c.order).or_default();
            let label = class_label(c.order, *nth);
            *nth += 1;
            let m = group.element(c.representative);
            Ok(ClassInfo {
                label,
                order: c.order,
                size: c.size,
                class_dim: rep.class_dim(m)?.exact,
                representative: m.encode(),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut per_class_counts = Vec::with_capacity(tally.len());
    for (key, acc) in tally {
        let weight = classes[key[0]].size as u64;
        let (tuple, is_epi) = match (acc.first_epi, acc.first_hom) {
            (Some(t), _) => (t, true),
            (None, Some(t)) => (t, false),
            (None, None) => unreachable!("tally entries hold a solution"),
        };
        per_class_counts.push(ClassTupleCount {
            labels: key.iter().map(|&c| classes[c].label.clone()).collect(),
            class_dim_sum: key.iter().map(|&c| classes[c].class_dim).sum(),
            classes: key,
            hom_count: acc.hom * weight,
            epi_count: acc.epi * weight,
            witness: lift(group, &tuple).iter().map(Matrix::encode).collect(),
            witness_is_epi: is_epi,
            rigidity: None,
        });
    }
    let total_hom = per_class_counts.iter().map(|c| c.hom_count).sum();
    let total_epi = per_class_counts.iter().map(|c| c.epi_count).sum();
    Ok(CensusResult {
        group_id: group.description(),
        field: group.field().into(),
        n: group.degree(),
        projective: group.is_projective(),
        group_order: group.len(),
        signature: signature.to_vec(),
        classes,
        per_class_counts,
        total_hom,
        total_epi,
    })
}

/// Stored representatives for all but the last coordinate; the last is the
/// inverse of their product, so the lifted product is exactly `I`.
fn lift(group: &FiniteGroupTable, tuple: &[usize]) -> Vec<Matrix> {
    let (init, _) = tuple.split_at(tuple.len() - 1);
    let mut mats: Vec<Matrix> = init.iter().map(|&x| group.element(x).clone()).collect();
    let prod = mats.iter().skip(1).fold(mats[0].clone(), |a, m| a.mul(m).expect("same field"));
    mats.push(prod.inverse().expect("group elements are invertible"));
    mats
}

/// Keeps class tuples whose class dimensions sum to `2 dim G` and attaches
/// the rigidity report of each witness.
pub fn rigid_class_tuples(result: &CensusResult, rs: &RootSystem) -> Result<CensusResult> {
    if rs.root_type() != RootType::A || rs.rank() + 1 != result.n {
        return Err(Error::Unsupported(format!(
            "census over {}x{} matrices does not model {}",
            result.n,
            result.n,
            rs.name()
        )));
    }
    let field = FiniteField::new(result.field.p, result.field.k)?;
    let two_dim_g = 2 * rs.dim();
    let mut kept = Vec::new();
    for entry in &result.per_class_counts {
        if entry.class_dim_sum != two_dim_g {
            continue;
        }
        let gens = entry
            .witness
            .iter()
            .map(|e| Matrix::decode(&field, e))
            .collect::<Result<Vec<_>>>()?;
        let tuple = GroupTuple::new(gens, result.signature.clone())?;
        let mut e = entry.clone();
        e.rigidity = Some(rigidity_verdict(&tuple)?);
        kept.push(e);
    }
    let mut out = result.clone();
    out.total_hom = kept.iter().map(|c| c.hom_count).sum();
    out.total_epi = kept.iter().map(|c| c.epi_count).sum();
    out.per_class_counts = kept;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgrp::is_absolutely_irreducible;
    use crate::rigidity::Verdict;

    fn psl2(q: u64) -> FiniteGroupTable {
        linear_group(1, q, true, DEFAULT_GROUP_CAP).unwrap()
    }

    #[test]
    fn labels() {
        assert_eq!(class_label(7, 0), "7A");
        assert_eq!(class_label(7, 1), "7B");
        assert_eq!(class_label(2, 26), "2AA");
    }

    #[test]
    fn group_selection() {
        assert_eq!(linear_group(1, 9, true, 1000).unwrap().len(), 360);
        assert_eq!(linear_group(1, 6, true, 1000).unwrap_err(), Error::NotPrime(6));
        assert!(matches!(group_for_type('B', 2, 7, true, 1000), Err(Error::Unsupported(_))));
    }

    #[test]
    fn hurwitz_psl2_7() {
        let g = psl2(7);
        let r = census(&g, &[2, 3, 7], 2).unwrap();
        assert_eq!(r.group_id, "PSL(2,7)");
        assert!(r.total_epi > 0);
        assert_eq!(r.total_epi % 168, 0);
        for c in &r.per_class_counts {
            assert!(c.hom_count >= c.epi_count);
            assert_eq!(c.hom_count % r.classes[c.classes[0]].size as u64, 0);
            if c.epi_count > 0 {
                assert_eq!(c.epi_count % 168, 0);
                let f7 = FiniteField::new(7, 1).unwrap();
                let gens: Vec<Matrix> = c.witness.iter().map(|e| Matrix::decode(&f7, e).unwrap()).collect();
                assert!(is_absolutely_irreducible(&gens).unwrap());
            }
        }
        assert_eq!(r, census(&g, &[2, 3, 7], 1).unwrap());
    }

    #[test]
    fn hom_counts_match_direct_enumeration() {
        let g = psl2(5);
        let sig = [2u64, 3, 5];
        let r = census(&g, &sig, 3).unwrap();
        let mut direct = 0u64;
        for x in 0..g.len() {
            if sig[0] % g.order(x) != 0 {
                continue;
            }
            for y in 0..g.len() {
                if sig[1] % g.order(y) == 0 && sig[2] % g.order(g.inv(g.mul(x, y))) == 0 {
                    direct += 1;
                }
            }
        }
        assert_eq!(r.total_hom, direct);
        assert!(r.total_epi > 0);
    }

    #[test]
    fn longer_signature() {
        let g = psl2(5);
        let r = census(&g, &[2, 2, 2, 3], 2).unwrap();
        let mut direct = 0u64;
        for x in 0..g.len() {
            for y in 0..g.len() {
                for z in 0..g.len() {
                    let ok = |e: usize, a: u64| a % g.order(e) == 0;
                    if ok(x, 2) && ok(y, 2) && ok(z, 2) && ok(g.inv(g.mul(g.mul(x, y), z)), 3) {
                        direct += 1;
                    }
                }
            }
        }
        assert_eq!(r.total_hom, direct);
    }

    #[test]
    fn psl2_4_is_a_quotient_of_the_icosahedral_group() {
        assert!(census(&psl2(4), &[2, 3, 5], 2).unwrap().total_epi > 0);
    }

    #[test]
    fn bad_signatures() {
        let g = psl2(5);
        assert!(matches!(census(&g, &[2, 3], 1), Err(Error::MalformedTuple(_))));
        assert_eq!(census(&g, &[2, 0, 3], 1).unwrap_err(), Error::InvalidOrder);
    }

    #[test]
    fn rigid_filter_psl2_7() {
        let g = psl2(7);
        let r = census(&g, &[2, 3, 7], 2).unwrap();
        let rs = RootSystem::parse('A', 1).unwrap();
        let kept = rigid_class_tuples(&r, &rs).unwrap();
        // every tuple of non-identity classes survives
        let nontrivial: Vec<_> = r
            .per_class_counts
            .iter()
            .filter(|c| c.classes.iter().all(|&i| r.classes[i].order > 1))
            .map(|c| c.classes.clone())
            .collect();
        let survivors: Vec<_> = kept.per_class_counts.iter().map(|c| c.classes.clone()).collect();
        assert_eq!(survivors, nontrivial);
        for c in &kept.per_class_counts {
            let rep = c.rigidity.as_ref().unwrap();
            assert_eq!(rep.class_dims, vec![2, 2, 2]);
            if c.witness_is_epi {
                assert_eq!(rep.verdict, Verdict::Rigid);
            }
        }
        assert!(matches!(
            rigid_class_tuples(&r, &RootSystem::parse('A', 2).unwrap()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn identity_class_tuples_are_filtered() {
        let g = psl2(5);
        let r = census(&g, &[1, 5, 5], 1).unwrap();
        assert!(r.total_hom > 0);
        let kept = rigid_class_tuples(&r, &RootSystem::parse('A', 1).unwrap()).unwrap();
        assert!(kept.per_class_counts.is_empty());
    }

    #[test]
    fn work_cap_refusal() {
        let g = psl2(5);
        assert!(matches!(
            census_capped(&g, &[2, 3, 5], 1, 10),
            Err(Error::WorkCapExceeded { cap: 10, .. })
        ));
        assert!(census_capped(&g, &[2, 3, 5], 1, 1000).is_ok());
    }

    #[test]
    fn round_trip() {
        let r = census(&psl2(5), &[2, 3, 5], 1).unwrap();
        let back: CensusResult = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
