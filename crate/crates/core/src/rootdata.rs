//! Root-system combinatorics: Cartan data, positive roots, and the maximal
//! dimension `j_d` of a conjugacy class of order-`d` elements.
//!
//! `j_d` is evaluated on semisimple elements of the adjoint group. A torus
//! element of the adjoint group is determined by the values `α_i(t) = ζ^{a_i}`
//! on the simple roots, with `ζ` a primitive `d`-th root of unity; it has
//! order exactly `d` iff `gcd(a_1, …, a_r, d) = 1`, and its class dimension is
//! `dim G − rank − #{roots α : α(t) = 1}`.
//!
//! Two routes compute the maximum. [`j_value_scan`] walks all of `(Z/d)^rank`.
//! [`j_value`] enumerates Kac coordinates of the fundamental alcove (one
//! point per conjugacy class) to find the value, then finds the
//! lexicographically least maximizing exponent tuple with a pruned
//! depth-first walk of the same lexicographic order.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on enumeration steps for `j_d` searches.
pub const DEFAULT_WORK_CAP: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl RootType {
    pub fn letter(self) -> char {
        match self {
            RootType::A => 'A',
            RootType::B => 'B',
            RootType::C => 'C',
            RootType::D => 'D',
            RootType::E => 'E',
            RootType::F => 'F',
            RootType::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => RootType::A,
            'B' => RootType::B,
            'C' => RootType::C,
            'D' => RootType::D,
            'E' => RootType::E,
            'F' => RootType::F,
            'G' => RootType::G,
            _ => return None,
        })
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for RootType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => RootType::from_letter(c),
            _ => None,
        }
        .ok_or(Error::InvalidRootSystem { letter: '?', rank: 0 })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystem {
    root_type: RootType,
    rank: usize,
    /// `cartan[i][j] = <α_j, α_i^∨> = 2(α_i, α_j)/(α_i, α_i)`.
    cartan: Vec<Vec<i64>>,
    /// Coefficient vectors over the simple roots, sorted by height then lexicographically.
    positive_roots: Vec<Vec<u32>>,
}

impl RootSystem {
    pub fn build(root_type: RootType, rank: usize) -> Result<Self> {
        let form = inner_product_matrix(root_type, rank)?;
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * form[i][j] / form[i][i]).collect())
            .collect();
        let positive_roots = positive_roots(&cartan);
        Ok(RootSystem {
            root_type,
            rank,
            cartan,
            positive_roots,
        })
    }

    pub fn parse(letter: char, rank: usize) -> Result<Self> {
        let t = RootType::from_letter(letter).ok_or(Error::InvalidRootSystem { letter, rank })?;
        Self::build(t, rank)
    }

    pub fn root_type(&self) -> RootType {
        self.root_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<u32>] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> std::ops::Range<usize> {
        0..self.rank
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Dimension of the algebraic group: rank plus the number of roots.
    pub fn dim(&self) -> usize {
        self.rank + 2 * self.positive_roots.len()
    }

    pub fn highest_root(&self) -> &[u32] {
        self.positive_roots.last().expect("nonempty root system")
    }

    pub fn coxeter_number(&self) -> usize {
        2 * self.positive_roots.len() / self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.root_type, self.rank)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Gram matrix of the simple roots (Bourbaki numbering), scaled to integers.
fn inner_product_matrix(t: RootType, r: usize) -> Result<Vec<Vec<i64>>> {
    let valid = match t {
        RootType::A => r >= 1,
        RootType::B | RootType::C => r >= 2,
        RootType::D => r >= 3,
        RootType::E => (6..=8).contains(&r),
        RootType::F => r == 4,
        RootType::G => r == 2,
    };
    if !valid {
        return Err(Error::InvalidRootSystem { letter: t.letter(), rank: r });
    }
    let mut b = vec![vec![0i64; r]; r];
    let link = |b: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        b[i][j] = v;
        b[j][i] = v;
    };
    match t {
        RootType::A | RootType::B | RootType::C | RootType::D => {
            for i in 0..r {
                b[i][i] = 2;
            }
            let chain = if t == RootType::D { r - 2 } else { r - 1 };
            for i in 0..chain {
                link(&mut b, i, i + 1, -1);
            }
            match t {
                RootType::B => b[r - 1][r - 1] = 1,
                RootType::C => {
                    b[r - 1][r - 1] = 4;
                    link(&mut b, r - 2, r - 1, -2);
                }
                RootType::D => link(&mut b, r - 3, r - 1, -1),
                _ => {}
            }
        }
        RootType::E => {
            for i in 0..r {
                b[i][i] = 2;
            }
            // 1-3-4-5-6-7-8 with 2 attached to 4
            link(&mut b, 0, 2, -1);
            link(&mut b, 1, 3, -1);
            for i in 2..r - 1 {
                link(&mut b, i, i + 1, -1);
            }
        }
        RootType::F => {
            b = vec![
                vec![4, -2, 0, 0],
                vec![-2, 4, -2, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ];
        }
        RootType::G => {
            b = vec![vec![2, -3], vec![-3, 6]];
        }
    }
    Ok(b)
}

/// Generates positive roots height by height using root strings:
/// for a root β and simple root α_i, β + α_i is a root iff
/// `r - <β, α_i^∨> > 0`, where `r` is the largest k with β − kα_i a root.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<u32>> {
    let rank = cartan.len();
    let mut all: Vec<Vec<u32>> = Vec::new();
    let mut known: HashSet<Vec<u32>> = HashSet::new();
    let mut level: Vec<Vec<u32>> = (0..rank)
        .map(|i| {
            let mut v = vec![0u32; rank];
            v[i] = 1;
            v
        })
        .collect();
    while !level.is_empty() {
        level.sort();
        for root in &level {
            known.insert(root.clone());
        }
        let mut next: Vec<Vec<u32>> = Vec::new();
        for beta in &level {
            for i in 0..rank {
                let mut r = 0i64;
                let mut down = beta.clone();
                while down[i] > 0 {
                    down[i] -= 1;
                    if !known.contains(&down) {
                        break;
                    }
                    r += 1;
                }
                let pairing: i64 = (0..rank).map(|j| i64::from(beta[j]) * cartan[i][j]).sum();
                if r - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut level);
        level = next;
    }
    all
}

/// Exact integer determinant of the Cartan matrix (Bareiss elimination).
pub fn cartan_det(rs: &RootSystem) -> i64 {
    let n = rs.rank;
    let mut a: Vec<Vec<i128>> = rs
        .cartan
        .iter()
        .map(|r| r.iter().map(|&v| i128::from(v)).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(s) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// `j_d` together with the lexicographically least maximizing exponent tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JValue {
    pub d: u64,
    pub j: usize,
    pub witness: Vec<u64>,
}

/// Outcome of the exhaustive scan over `(Z/d)^rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanResult {
    pub j: usize,
    pub witness: Vec<u64>,
    pub maximizers: u64,
}

fn killed_roots(rs: &RootSystem, a: &[u64], d: u64) -> usize {
    rs.positive_roots
        .iter()
        .filter(|root| {
            root.iter()
                .zip(a)
                .map(|(&c, &x)| u64::from(c) * x)
                .sum::<u64>()
                % d
                == 0
        })
        .count()
}

/// Class dimension of the adjoint torus element with simple-root exponents `a`.
pub fn torus_class_dim(rs: &RootSystem, a: &[u64], d: u64) -> usize {
    rs.dim() - rs.rank - 2 * killed_roots(rs, a, d)
}

fn gcd_with(a: &[u64], d: u64) -> u64 {
    a.iter().fold(d, |g, &x| g.gcd(&x))
}

fn check_work(estimate: u128, cap: u64) -> Result<()> {
    if estimate > u128::from(cap) {
        Err(Error::WorkCapExceeded { estimate, cap })
    } else {
        Ok(())
    }
}

/// `j_d` by brute force over every exponent tuple of exact order `d`.
pub fn j_value_scan(rs: &RootSystem, d: u64, cap: u64) -> Result<ScanResult> {
    if d < 1 {
        return Err(Error::InvalidOrder);
    }
    let r = rs.rank;
    check_work(u128::from(d).pow(r as u32) * rs.num_positive_roots() as u128, cap)?;
    let mut a = vec![0u64; r];
    let mut best: Option<ScanResult> = None;
    loop {
        if gcd_with(&a, d) == 1 {
            let v = torus_class_dim(rs, &a, d);
            match &mut best {
                Some(b) if v < b.j => {}
                Some(b) if v == b.j => b.maximizers += 1,
                _ => {
                    best = Some(ScanResult {
                        j: v,
                        witness: a.clone(),
                        maximizers: 1,
                    })
                }
            }
        }
        // odometer, last coordinate fastest (lexicographic order)
        let mut i = r;
        loop {
            if i == 0 {
                return Ok(best.expect("d >= 1 admits the tuple with a_r = 1"));
            }
            i -= 1;
            a[i] += 1;
            if a[i] < d {
                break;
            }
            a[i] = 0;
        }
    }
}

/// Maximum class dimension over Kac coordinates `(s_0; s_1..s_r)` with
/// `s_0 + Σ m_i s_i = d` and `gcd(s) = 1`.
pub fn j_value_kac(rs: &RootSystem, d: u64, cap: u64) -> Result<usize> {
    if d < 1 {
        return Err(Error::InvalidOrder);
    }
    let marks: Vec<u64> = rs.highest_root().iter().map(|&m| u64::from(m)).collect();
    let mut s = vec![0u64; rs.rank];
    let mut best = 0usize;
    let mut work = 0u64;
    kac_walk(rs, &marks, d, 0, 0, &mut s, &mut best, &mut work, cap)?;
    Ok(best)
}

#[allow(clippy::too_many_arguments)]
fn kac_walk(
    rs: &RootSystem,
    marks: &[u64],
    d: u64,
    i: usize,
    used: u64,
    s: &mut Vec<u64>,
    best: &mut usize,
    work: &mut u64,
    cap: u64,
) -> Result<()> {
    if i == s.len() {
        *work += rs.num_positive_roots() as u64;
        check_work(u128::from(*work), cap)?;
        let s0 = d - used;
        if s.iter().fold(s0, |g, &x| g.gcd(&x)) == 1 {
            *best = (*best).max(torus_class_dim(rs, s, d));
        }
        return Ok(());
    }
    let mut v = 0u64;
    while used + marks[i] * v <= d {
        s[i] = v;
        kac_walk(rs, marks, d, i + 1, used + marks[i] * v, s, best, work, cap)?;
        v += 1;
    }
    s[i] = 0;
    Ok(())
}

/// `j_d` with its lexicographically least witness.
pub fn j_value(rs: &RootSystem, d: u64) -> Result<JValue> {
    j_value_capped(rs, d, DEFAULT_WORK_CAP)
}

pub fn j_value_capped(rs: &RootSystem, d: u64, cap: u64) -> Result<JValue> {
    let target = j_value_kac(rs, d, cap)?;
    let r = rs.rank;
    // roots grouped by the last simple root in their support
    let mut completes_at: Vec<Vec<&[u32]>> = vec![Vec::new(); r];
    for root in &rs.positive_roots {
        let last = root.iter().rposition(|&c| c > 0).expect("nonzero root");
        completes_at[last].push(root);
    }
    let ceiling = rs.dim() - r;
    let mut a = vec![0u64; r];
    let mut work = 0u64;
    let found = witness_walk(&completes_at, d, ceiling, target, 0, 0, &mut a, &mut work, cap)?;
    if !found {
        return Err(Error::TheoremViolation(format!(
            "no exponent tuple attains the alcove maximum {target} for {} at d = {d}",
            rs.name()
        )));
    }
    Ok(JValue { d, j: target, witness: a })
}

#[allow(clippy::too_many_arguments)]
fn witness_walk(
    completes_at: &[Vec<&[u32]>],
    d: u64,
    ceiling: usize,
    target: usize,
    i: usize,
    killed: usize,
    a: &mut Vec<u64>,
    work: &mut u64,
    cap: u64,
) -> Result<bool> {
    if i == a.len() {
        return Ok(gcd_with(a, d) == 1 && ceiling - 2 * killed == target);
    }
    for v in 0..d {
        a[i] = v;
        *work += 1 + completes_at[i].len() as u64;
        check_work(u128::from(*work), cap)?;
        let newly = completes_at[i]
            .iter()
            .filter(|root| {
                root.iter()
                    .zip(a.iter())
                    .map(|(&c, &x)| u64::from(c) * x)
                    .sum::<u64>()
                    % d
                    == 0
            })
            .count();
        let k = killed + newly;
        if 2 * k <= ceiling && ceiling - 2 * k >= target && witness_walk(completes_at, d, ceiling, target, i + 1, k, a, work, cap)? {
            return Ok(true);
        }
    }
    a[i] = 0;
    Ok(false)
}

/// `j_d` for a range of orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDimTable {
    pub root_system: RootSystem,
    pub entries: BTreeMap<u64, JValue>,
}

impl ClassDimTable {
    pub fn build(rs: &RootSystem, d_max: u64, cap: u64) -> Result<Self> {
        let entries = (1..=d_max)
            .map(|d| j_value_capped(rs, d, cap).map(|v| (d, v)))
            .collect::<Result<_>>()?;
        Ok(ClassDimTable {
            root_system: rs.clone(),
            entries,
        })
    }

    pub fn j(&self, d: u64) -> Option<usize> {
        self.entries.get(&d).map(|v| v.j)
    }
}

/// Least `d` with `j_d = dim G − rank` (a regular element of order `d`).
pub fn plateau_order(rs: &RootSystem, cap: u64) -> Result<u64> {
    let top = rs.dim() - rs.rank;
    // the principal element of order h is regular, so the search ends by h
    for d in 1..=rs.coxeter_number() as u64 {
        if j_value_kac(rs, d, cap)? == top {
            return Ok(d);
        }
    }
    Err(Error::TheoremViolation(format!("no regular element up to the Coxeter number of {}", rs.name())))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidTuples {
    pub root_system: String,
    pub n: usize,
    pub a_max: u64,
    pub two_dim_g: usize,
    pub tuples: Vec<Vec<u64>>,
    pub plateau_order: u64,
}

/// Non-decreasing `(a_1..a_n)`, `2 <= a_i <= a_max`, with `Σ j_{a_i} = 2 dim G`.
pub fn rigid_tuples(rs: &RootSystem, n: usize, a_max: u64, cap: u64) -> Result<RigidTuples> {
    if n < 3 {
        return Err(Error::Unsupported(format!("tuple length {n} < 3")));
    }
    if a_max < 2 {
        return Err(Error::Unsupported(format!("a_max {a_max} < 2")));
    }
    let js: Vec<usize> = (2..=a_max)
        .map(|d| j_value_kac(rs, d, cap))
        .collect::<Result<_>>()?;
    let target = 2 * rs.dim();
    let max_j = js.iter().copied().max().unwrap_or(0);
    let mut tuples = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut work = 0u64;
    collect_tuples(&js, n, target, max_j, 0, 0, &mut cur, &mut tuples, &mut work, cap)?;
    Ok(RigidTuples {
        root_system: rs.name(),
        n,
        a_max,
        two_dim_g: target,
        tuples,
        plateau_order: plateau_order(rs, cap)?,
    })
}

#[allow(clippy::too_many_arguments)]
fn collect_tuples(
    js: &[usize],
    n: usize,
    target: usize,
    max_j: usize,
    start: usize,
    sum: usize,
    cur: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
    work: &mut u64,
    cap: u64,
) -> Result<()> {
    *work += 1;
    check_work(u128::from(*work), cap)?;
    let left = n - cur.len();
    if left == 0 {
        if sum == target {
            out.push(cur.clone());
        }
        return Ok(());
    }
    if sum > target || sum + left * max_j < target {
        return Ok(());
    }
    for idx in start..js.len() {
        cur.push(idx as u64 + 2);
        collect_tuples(js, n, target, max_j, idx, sum + js[idx], cur, out, work, cap)?;
        cur.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: u64 = DEFAULT_WORK_CAP;

    fn rs(t: RootType, r: usize) -> RootSystem {
        RootSystem::build(t, r).unwrap()
    }

    #[test]
    fn positive_root_counts_match_classical_formulas() {
        for n in 1..=8 {
            assert_eq!(rs(RootType::A, n).num_positive_roots(), n * (n + 1) / 2);
        }
        for n in 2..=8 {
            assert_eq!(rs(RootType::B, n).num_positive_roots(), n * n);
            assert_eq!(rs(RootType::C, n).num_positive_roots(), n * n);
        }
        for n in 3..=8 {
            assert_eq!(rs(RootType::D, n).num_positive_roots(), n * (n - 1));
        }
        assert_eq!(rs(RootType::E, 6).num_positive_roots(), 36);
        assert_eq!(rs(RootType::E, 7).num_positive_roots(), 63);
        assert_eq!(rs(RootType::E, 8).num_positive_roots(), 120);
        assert_eq!(rs(RootType::F, 4).num_positive_roots(), 24);
        assert_eq!(rs(RootType::G, 2).num_positive_roots(), 6);
        assert_eq!(rs(RootType::E, 8).dim(), 248);
        assert_eq!(rs(RootType::A, 1).dim(), 3);
        assert_eq!(rs(RootType::A, 2).dim(), 8);
    }

    #[test]
    fn cartan_shape() {
        for (t, r) in [(RootType::B, 3), (RootType::C, 4), (RootType::F, 4), (RootType::G, 2), (RootType::E, 7)] {
            let s = rs(t, r);
            for i in 0..r {
                assert_eq!(s.cartan()[i][i], 2);
                for j in 0..r {
                    if i != j {
                        assert!(s.cartan()[i][j] <= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs(RootType::E, 8).highest_root(), &[2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(rs(RootType::G, 2).highest_root(), &[3, 2]);
        assert_eq!(rs(RootType::F, 4).highest_root(), &[2, 3, 4, 2]);
        assert_eq!(rs(RootType::B, 3).highest_root(), &[1, 2, 2]);
        assert_eq!(rs(RootType::C, 3).highest_root(), &[2, 2, 1]);
        assert_eq!(rs(RootType::E, 8).coxeter_number(), 30);
    }

    #[test]
    fn invalid_rank_rejected() {
        for (t, r) in [(RootType::E, 5), (RootType::F, 3), (RootType::G, 3), (RootType::B, 1), (RootType::D, 2), (RootType::A, 0)] {
            assert!(matches!(RootSystem::build(t, r), Err(Error::InvalidRootSystem { .. })));
        }
        assert!(RootSystem::parse('Z', 2).is_err());
    }

    #[test]
    fn cartan_determinants() {
        assert_eq!(cartan_det(&rs(RootType::A, 1)), 2);
        assert_eq!(cartan_det(&rs(RootType::A, 2)), 3);
        assert_eq!(cartan_det(&rs(RootType::E, 8)), 1);
        assert_eq!(cartan_det(&rs(RootType::E, 7)), 2);
        assert_eq!(cartan_det(&rs(RootType::E, 6)), 3);
        assert_eq!(cartan_det(&rs(RootType::D, 5)), 4);
        assert_eq!(cartan_det(&rs(RootType::B, 4)), 2);
        assert_eq!(cartan_det(&rs(RootType::C, 4)), 2);
        assert_eq!(cartan_det(&rs(RootType::F, 4)), 1);
        assert_eq!(cartan_det(&rs(RootType::G, 2)), 1);
        assert_eq!(cartan_det(&rs(RootType::A, 6)), 7);
    }

    #[test]
    fn j_examples() {
        let a1 = rs(RootType::A, 1);
        assert_eq!(j_value(&a1, 1).unwrap().j, 0);
        for d in 2..=12 {
            assert_eq!(j_value(&a1, d).unwrap().j, 2);
        }
        let a2 = rs(RootType::A, 2);
        assert_eq!(j_value(&a2, 2).unwrap().j, 4);
        let j3 = j_value(&a2, 3).unwrap();
        assert_eq!(j3.j, 6);
        assert_eq!(torus_class_dim(&a2, &[1, 1], 3), 6);
        assert_eq!(j_value(&a2, 0).unwrap_err(), Error::InvalidOrder);
    }

    #[test]
    fn alcove_route_agrees_with_full_scan() {
        let systems = [
            rs(RootType::A, 1),
            rs(RootType::A, 2),
            rs(RootType::A, 3),
            rs(RootType::B, 2),
            rs(RootType::C, 3),
            rs(RootType::G, 2),
            rs(RootType::D, 4),
        ];
        for s in &systems {
            for d in 1..=9u64 {
                if (d as u128).pow(s.rank() as u32) > 20_000 {
                    continue;
                }
                let scan = j_value_scan(s, d, CAP).unwrap();
                let fast = j_value(s, d).unwrap();
                assert_eq!(scan.j, fast.j, "{} d={d}", s.name());
                assert_eq!(scan.witness, fast.witness, "{} d={d}", s.name());
            }
        }
    }

    #[test]
    fn maximizers_come_in_unit_orbits() {
        for s in [rs(RootType::A, 2), rs(RootType::B, 2), rs(RootType::G, 2), rs(RootType::A, 3)] {
            for d in 2..=8u64 {
                let scan = j_value_scan(&s, d, CAP).unwrap();
                let phi = (1..=d).filter(|&u| u.gcd(&d) == 1).count() as u64;
                assert!(scan.maximizers >= phi, "{} d={d}", s.name());
                let j = scan.j;
                for u in (1..d).filter(|&u| u.gcd(&d) == 1) {
                    let scaled: Vec<u64> = scan.witness.iter().map(|&x| x * u % d).collect();
                    assert_eq!(torus_class_dim(&s, &scaled, d), j);
                }
            }
        }
    }

    #[test]
    fn bounds_and_plateau() {
        for s in [rs(RootType::A, 3), rs(RootType::B, 3), rs(RootType::G, 2), rs(RootType::F, 4)] {
            let top = s.dim() - s.rank();
            let dstar = plateau_order(&s, CAP).unwrap();
            for d in 1..=20u64 {
                let j = j_value(&s, d).unwrap();
                assert!(j.j <= top);
                assert_eq!(j.j == top, killed_roots(&s, &j.witness, d) == 0);
                if d < dstar {
                    assert!(j.j < top);
                }
            }
            let w = j_value(&s, dstar).unwrap().witness;
            for m in 2..=4 {
                let d = dstar * m;
                let lifted: Vec<u64> = w.iter().map(|&x| x * m).collect();
                // the order-dstar witness still kills no root as an element of order dividing d
                assert_eq!(killed_roots(&s, &lifted, d), 0);
                assert_eq!(j_value(&s, d).unwrap().j, top);
            }
        }
    }

    #[test]
    fn large_types_are_tractable() {
        let e8 = rs(RootType::E, 8);
        let j2 = j_value(&e8, 2).unwrap();
        // the involution with centralizer D8 has class dim 248 - 120
        assert_eq!(j2.j, 128);
        assert_eq!(plateau_order(&e8, CAP).unwrap(), 30);
        assert_eq!(j_value(&e8, 30).unwrap().j, 240);
    }

    #[test]
    fn rigid_tuple_enumeration() {
        let a1 = rs(RootType::A, 1);
        let t = rigid_tuples(&a1, 3, 7, CAP).unwrap();
        // multisets of size 3 from {2..7}: C(8, 3)
        assert_eq!(t.tuples.len(), 56);
        assert_eq!(t.plateau_order, 2);
        for a_max in 2..=10u64 {
            let m = a_max - 1;
            assert_eq!(rigid_tuples(&a1, 3, a_max, CAP).unwrap().tuples.len() as u64, (m + 2) * (m + 1) * m / 6);
        }
        let a2 = rs(RootType::A, 2);
        let t = rigid_tuples(&a2, 3, 3, CAP).unwrap();
        assert!(!t.tuples.contains(&vec![3, 3, 3]));
        assert_eq!(t.tuples, vec![vec![2, 3, 3]]);
        assert_eq!(t.plateau_order, 3);
        assert!(rigid_tuples(&a2, 2, 3, CAP).is_err());
    }

    #[test]
    fn work_cap_is_enforced() {
        let e8 = rs(RootType::E, 8);
        assert!(matches!(j_value_scan(&e8, 29, CAP), Err(Error::WorkCapExceeded { .. })));
        assert!(matches!(j_value_capped(&e8, 7, 10), Err(Error::WorkCapExceeded { .. })));
    }
}
