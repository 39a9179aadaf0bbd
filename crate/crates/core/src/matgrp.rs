//! Explicit matrix groups over finite fields: generator tuples, projective
//! orders, breadth-first group closure, and the Burnside irreducibility test.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::{EchelonBasis, FieldEmbedding, FiniteField, Matrix};

/// Input schema version understood by [`TupleDocument`].
pub const SCHEMA_VERSION: u32 = 1;

/// Groups up to this size get a precomputed multiplication table.
const CAYLEY_LIMIT: usize = 2048;

/// Least `e >= 1` with `m^e` scalar.
pub fn projective_order(m: &Matrix) -> Result<u64> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("projective order of a non-square matrix".into()));
    }
    if m.det()? == 0 {
        return Err(Error::Singular);
    }
    let n = m.rows() as u32;
    // element orders in GL_n(q) are below q^n
    let bound = m.field().order().saturating_pow(n);
    let mut x = m.clone();
    let mut e = 1u64;
    while x.scalar_value().is_none() {
        x = x.mul_unchecked(m);
        e += 1;
        if e > bound {
            return Err(Error::TheoremViolation(format!("no scalar power of {m:?} below {bound}")));
        }
    }
    Ok(e)
}

/// `|SL_n(q)| = q^{n(n-1)/2} Π_{i=2}^{n} (q^i - 1)`.
pub fn sl_order(q: u64, n: u32) -> u128 {
    let q = u128::from(q);
    let mut ord = q.pow(n * (n - 1) / 2);
    for i in 2..=n {
        ord *= q.pow(i) - 1;
    }
    ord
}

/// `|PSL_n(q)| = |SL_n(q)| / gcd(n, q - 1)`.
pub fn psl_order(q: u64, n: u32) -> u128 {
    sl_order(q, n) / u128::from(num_integer::gcd(u64::from(n), q - 1))
}

/// Transvections `I + E_{i,i+1}`, `I + E_{i+1,i}`, plus `diag(ω, ω^{-1}, 1, …)`
/// for a primitive `ω` when the field is not prime. These generate `SL_n(q)`.
pub fn sl_generators(field: &FiniteField, n: usize) -> Vec<Matrix> {
    let mut gens = Vec::new();
    if n == 1 {
        return vec![Matrix::identity(field, 1)];
    }
    for i in 0..n - 1 {
        let mut up = Matrix::identity(field, n);
        up.set(i, i + 1, 1);
        let mut down = Matrix::identity(field, n);
        down.set(i + 1, i, 1);
        gens.push(up);
        gens.push(down);
    }
    if field.degree() > 1 {
        let w = field.primitive_element();
        let mut t = Matrix::identity(field, n);
        t.set(0, 0, w);
        t.set(1, 1, field.inv(w).expect("primitive element is nonzero"));
        gens.push(t);
    }
    gens
}

/// An `n`-tuple of `SL_n(q)` matrices with declared orders, whose product is
/// central. Projective order of generator `i` divides `declared_orders[i]`.
#[derive(Debug, Clone)]
pub struct GroupTuple {
    field: FiniteField,
    n: usize,
    generators: Vec<Matrix>,
    declared_orders: Vec<u64>,
    projective_orders: Vec<u64>,
    product_scalar: u32,
    warnings: Vec<String>,
}

impl GroupTuple {
    pub fn new(generators: Vec<Matrix>, declared_orders: Vec<u64>) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::MalformedTuple("no generators".into()))?;
        let field = first.field().clone();
        let n = first.rows();
        if generators.len() != declared_orders.len() {
            return Err(Error::MalformedTuple(format!(
                "{} generators but {} declared orders",
                generators.len(),
                declared_orders.len()
            )));
        }
        for (i, g) in generators.iter().enumerate() {
            field.check_same(g.field())?;
            if g.rows() != n || g.cols() != n {
                return Err(Error::MalformedTuple(format!("generator {i} is {}x{}, expected {n}x{n}", g.rows(), g.cols())));
            }
            if g.det()? != 1 {
                return Err(Error::NotSpecialLinear { index: i });
            }
        }
        if declared_orders.contains(&0) {
            return Err(Error::InvalidOrder);
        }
        let product = generators
            .iter()
            .skip(1)
            .fold(first.clone(), |acc, g| acc.mul_unchecked(g));
        let product_scalar = product.scalar_value().ok_or(Error::ProductNotCentral)?;
        let mut warnings = Vec::new();
        let mut projective_orders = Vec::with_capacity(generators.len());
        for (i, (g, &declared)) in generators.iter().zip(&declared_orders).enumerate() {
            let actual = projective_order(g)?;
            if declared % actual != 0 {
                return Err(Error::OrderMismatch { index: i, actual, declared });
            }
            if actual != declared {
                warnings.push(format!(
                    "generator {i} has projective order {actual}, a proper divisor of the declared {declared}"
                ));
            }
            projective_orders.push(actual);
        }
        Ok(GroupTuple {
            field,
            n,
            generators,
            declared_orders,
            projective_orders,
            product_scalar,
            warnings,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// Matrix size.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn declared_orders(&self) -> &[u64] {
        &self.declared_orders
    }

    pub fn projective_orders(&self) -> &[u64] {
        &self.projective_orders
    }

    /// The scalar `λ` with `c_1 ⋯ c_n = λ I`.
    pub fn product_scalar(&self) -> u32 {
        self.product_scalar
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Simultaneous conjugation `c_i ↦ h c_i h^{-1}`.
    pub fn conjugate(&self, h: &Matrix) -> Result<GroupTuple> {
        let hinv = h.inverse()?;
        let gens = self
            .generators
            .iter()
            .map(|g| h.mul(g)?.mul(&hinv))
            .collect::<Result<Vec<_>>>()?;
        GroupTuple::new(gens, self.declared_orders.clone())
    }

    pub fn embed(&self, e: &FieldEmbedding) -> Result<GroupTuple> {
        let gens = self
            .generators
            .iter()
            .map(|g| e.map_matrix(g))
            .collect::<Result<Vec<_>>>()?;
        GroupTuple::new(gens, self.declared_orders.clone())
    }

    pub fn from_document(doc: &TupleDocument) -> Result<Self> {
        if doc.schema != SCHEMA_VERSION {
            return Err(Error::Schema(format!("unsupported schema version {}", doc.schema)));
        }
        let field = FiniteField::new(doc.p, doc.k)?;
        let mut gens = Vec::with_capacity(doc.generators.len());
        for (i, g) in doc.generators.iter().enumerate() {
            if g.len() != doc.n || g.iter().any(|row| row.len() != doc.n) {
                return Err(Error::Schema(format!("generator {i} is not {0}x{0}", doc.n)));
            }
            let rows = g
                .iter()
                .map(|row| row.iter().map(|e| e.to_raw(&field)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            gens.push(Matrix::from_raw_rows(&field, &rows)?);
        }
        GroupTuple::new(gens, doc.orders.clone())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: TupleDocument = serde_json::from_str(s).map_err(|e| Error::Schema(e.to_string()))?;
        Self::from_document(&doc)
    }

    pub fn to_document(&self) -> TupleDocument {
        TupleDocument {
            schema: SCHEMA_VERSION,
            p: self.field.characteristic(),
            k: self.field.degree(),
            n: self.n,
            generators: self
                .generators
                .iter()
                .map(|g| {
                    g.encode()
                        .0
                        .into_iter()
                        .map(|row| row.into_iter().map(Entry::Coeffs).collect())
                        .collect()
                })
                .collect(),
            orders: self.declared_orders.clone(),
        }
    }
}

/// JSON form of a generator tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TupleDocument {
    #[serde(default = "default_schema")]
    pub schema: u32,
    pub p: u64,
    pub k: u32,
    pub n: usize,
    pub generators: Vec<Vec<Vec<Entry>>>,
    pub orders: Vec<u64>,
}

fn default_schema() -> u32 {
    SCHEMA_VERSION
}

/// A matrix entry: a coefficient sequence (low degree first), or a bare
/// integer read in the prime subfield.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Coeffs(Vec<u32>),
    Int(i64),
}

impl Entry {
    fn to_raw(&self, field: &FiniteField) -> Result<u32> {
        match self {
            Entry::Coeffs(c) => field.from_coeffs(c).map_err(|e| Error::Schema(e.to_string())),
            Entry::Int(v) => Ok(field.from_int(*v)),
        }
    }
}

/// A finite matrix group held as an explicit element list, optionally modulo scalars.
///
/// Elements are stored as the actual matrices reached by multiplying
/// generators, so when the generators lie in `SL_n` every stored element is an
/// `SL_n` lift of its projective class.
#[derive(Debug, Clone)]
pub struct FiniteGroupTable {
    field: FiniteField,
    n: usize,
    projective: bool,
    elements: Vec<Matrix>,
    index: HashMap<Vec<u32>, u32>,
    generators: Vec<usize>,
    orders: Vec<u64>,
    inverses: Vec<u32>,
    cayley: Option<Vec<u32>>,
}

/// Breadth-first closure of `gens` under multiplication.
pub fn group_closure(gens: &[Matrix], cap: usize, projective: bool) -> Result<FiniteGroupTable> {
    let first = gens
        .first()
        .ok_or_else(|| Error::MalformedTuple("closure of an empty generating set".into()))?;
    let field = first.field().clone();
    let n = first.rows();
    for g in gens {
        field.check_same(g.field())?;
        if g.rows() != n || g.cols() != n {
            return Err(Error::DimensionMismatch("generators of different sizes".into()));
        }
        if g.det()? == 0 {
            return Err(Error::Singular);
        }
    }
    let key = |m: &Matrix| if projective { m.projective_key() } else { m.data().to_vec() };
    let mut elements = vec![Matrix::identity(&field, n)];
    let mut index = HashMap::new();
    index.insert(key(&elements[0]), 0u32);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let prod = elements[i].mul_unchecked(g);
            let k = key(&prod);
            if !index.contains_key(&k) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                index.insert(k, elements.len() as u32);
                queue.push_back(elements.len());
                elements.push(prod);
            }
        }
    }
    let generators = gens.iter().map(|g| index[&key(g)] as usize).collect();
    let mut table = FiniteGroupTable {
        field,
        n,
        projective,
        elements,
        index,
        generators,
        orders: Vec::new(),
        inverses: Vec::new(),
        cayley: None,
    };
    table.finish();
    Ok(table)
}

/// `SL_n(q)`, or `PSL_n(q)` when `projective`, from [`sl_generators`].
pub fn special_linear_group(field: &FiniteField, n: usize, projective: bool, cap: usize) -> Result<FiniteGroupTable> {
    group_closure(&sl_generators(field, n), cap, projective)
}

impl FiniteGroupTable {
    fn key(&self, m: &Matrix) -> Vec<u32> {
        if self.projective {
            m.projective_key()
        } else {
            m.data().to_vec()
        }
    }

    fn finish(&mut self) {
        let len = self.elements.len();
        if len <= CAYLEY_LIMIT {
            let mut table = Vec::with_capacity(len * len);
            for a in &self.elements {
                for b in &self.elements {
                    table.push(self.index[&self.key(&a.mul_unchecked(b))]);
                }
            }
            self.cayley = Some(table);
        }
        self.inverses = self
            .elements
            .iter()
            .map(|m| self.index[&self.key(&m.inverse().expect("group elements are invertible"))])
            .collect();
        self.orders = (0..len)
            .map(|i| {
                let mut x = i;
                let mut e = 1u64;
                while x != 0 {
                    x = self.mul(x, i);
                    e += 1;
                }
                e
            })
            .collect();
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn is_projective(&self) -> bool {
        self.projective
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Stored representative matrix of element `i`; element 0 is the identity.
    pub fn element(&self, i: usize) -> &Matrix {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.index.get(&self.key(m)).map(|&i| i as usize)
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.cayley {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.key(&self.elements[a].mul_unchecked(&self.elements[b]))] as usize,
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// Element order in the group (projective order when projective).
    pub fn order(&self, a: usize) -> u64 {
        self.orders[a]
    }

    /// Conjugacy classes, each with its least-index representative, ordered by
    /// representative.
    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        let len = self.len();
        let mut class_of = vec![u32::MAX; len];
        let mut classes = Vec::new();
        for start in 0..len {
            if class_of[start] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            class_of[start] = id;
            let mut members = vec![start];
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for &s in &self.generators {
                    let y = self.mul(self.mul(s, x), self.inv(s));
                    if class_of[y] == u32::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
            }
            classes.push(ConjugacyClass {
                representative: start,
                size: members.len(),
                order: self.order(start),
            });
        }
        ConjugacyClasses { classes, class_of }
    }

    /// Size of the subgroup generated by the given elements.
    pub fn subgroup_order(&self, gens: &[usize]) -> usize {
        self.closure_size(gens, usize::MAX)
    }

    /// Whether the given elements generate the whole group. Stops as soon as
    /// the closure exceeds half the group (Lagrange).
    pub fn generates(&self, gens: &[usize]) -> bool {
        let half = self.len() / 2;
        self.closure_size(gens, half) > half
    }

    fn closure_size(&self, gens: &[usize], stop_above: usize) -> usize {
        let mut seen = vec![false; self.len()];
        seen[0] = true;
        let mut members = vec![0usize];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                    if members.len() > stop_above {
                        return members.len();
                    }
                }
            }
        }
        members.len()
    }

    pub fn description(&self) -> String {
        format!(
            "{}SL({},{})",
            if self.projective { "P" } else { "" },
            self.n,
            self.field.order()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub size: usize,
    pub order: u64,
}

#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    pub classes: Vec<ConjugacyClass>,
    pub class_of: Vec<u32>,
}

/// Burnside criterion: the generators act absolutely irreducibly iff the
/// matrix algebra they span is all of `M_n`. The span is grown from
/// `{I} ∪ gens` under left multiplication by generators until stable.
pub fn is_absolutely_irreducible(gens: &[Matrix]) -> Result<bool> {
    let Some(first) = gens.first() else {
        return Ok(false);
    };
    let field = first.field();
    let n = first.rows();
    for g in gens {
        field.check_same(g.field())?;
        if g.rows() != n || g.cols() != n {
            return Err(Error::DimensionMismatch("generators of different sizes".into()));
        }
    }
    let mut span = EchelonBasis::new(field, n * n);
    let mut pending = Vec::new();
    for m in std::iter::once(Matrix::identity(field, n)).chain(gens.iter().cloned()) {
        if span.insert(m.data())? {
            pending.push(m);
        }
    }
    while let Some(a) = pending.pop() {
        if span.is_full() {
            break;
        }
        for g in gens {
            let b = g.mul_unchecked(&a);
            if span.insert(b.data())? {
                pending.push(b);
            }
        }
    }
    Ok(span.is_full())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64, k: u32) -> FiniteField {
        FiniteField::new(p, k).unwrap()
    }

    #[test]
    fn projective_order_examples() {
        let f7 = f(7, 1);
        assert_eq!(projective_order(&Matrix::identity(&f7, 2)).unwrap(), 1);
        let j = Matrix::from_ints(&f7, &[&[0, 1], &[-1, 0]]).unwrap();
        assert_eq!(projective_order(&j).unwrap(), 2);
        let f13 = f(13, 1);
        let g = f13.primitive_element();
        let d = Matrix::diagonal(&f13, &[g, f13.inv(g).unwrap()]);
        assert_eq!(projective_order(&d).unwrap(), 6);
        let sing = Matrix::from_ints(&f7, &[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(projective_order(&sing).unwrap_err(), Error::Singular);
    }

    #[test]
    fn closure_sizes() {
        let f5 = f(5, 1);
        let trivial = group_closure(&[Matrix::identity(&f5, 2)], 10, false).unwrap();
        assert_eq!(trivial.len(), 1);
        let gens = sl_generators(&f5, 2);
        assert_eq!(gens.len(), 2);
        assert_eq!(group_closure(&gens, 1000, false).unwrap().len(), 120);
        assert_eq!(group_closure(&gens, 1000, true).unwrap().len(), 60);
        let f7 = f(7, 1);
        assert_eq!(special_linear_group(&f7, 2, false, 1000).unwrap().len(), 336);
        assert!(matches!(special_linear_group(&f7, 2, false, 100), Err(Error::CapExceeded { cap: 100 })));
        assert_eq!(special_linear_group(&f(2, 2), 2, false, 1000).unwrap().len(), 60);
        assert_eq!(special_linear_group(&f(3, 1), 3, false, 10_000).unwrap().len() as u128, sl_order(3, 3));
    }

    #[test]
    fn order_formulas() {
        assert_eq!(sl_order(5, 2), 120);
        assert_eq!(psl_order(7, 2), 168);
        assert_eq!(psl_order(4, 3), 20160);
        assert_eq!(psl_order(8, 2), 504);
    }

    #[test]
    fn classes_of_psl2_7() {
        let g = special_linear_group(&f(7, 1), 2, true, 1000).unwrap();
        let cc = g.conjugacy_classes();
        let mut sizes: Vec<(u64, usize)> = cc.classes.iter().map(|c| (c.order, c.size)).collect();
        sizes.sort();
        assert_eq!(sizes, vec![(1, 1), (2, 21), (3, 56), (4, 42), (7, 24), (7, 24)]);
        assert_eq!(cc.classes[0].representative, 0);
        let total: usize = cc.classes.iter().map(|c| c.size).sum();
        assert_eq!(total, 168);
    }

    #[test]
    fn generation_test() {
        let g = special_linear_group(&f(5, 1), 2, true, 1000).unwrap();
        let gens = g.generator_indices().to_vec();
        assert!(g.generates(&gens));
        assert!(!g.generates(&gens[..1]));
        assert_eq!(g.subgroup_order(&gens[..1]), 5);
    }

    #[test]
    fn irreducibility_examples() {
        let f7 = f(7, 1);
        let d = Matrix::diagonal(&f7, &[1, 2]);
        assert!(!is_absolutely_irreducible(&[d]).unwrap());
        assert!(is_absolutely_irreducible(&sl_generators(&f(5, 1), 2)).unwrap());
        assert!(is_absolutely_irreducible(&[Matrix::scalar(&f7, 1, 3)]).unwrap());
        let u = Matrix::from_ints(&f7, &[&[1, 1], &[0, 1]]).unwrap();
        assert!(!is_absolutely_irreducible(&[u]).unwrap());
    }

    #[test]
    fn irreducibility_is_conjugation_and_scalar_invariant() {
        let f5 = f(5, 1);
        let gens = sl_generators(&f5, 2);
        let h = Matrix::from_ints(&f5, &[&[2, 1], &[1, 1]]).unwrap();
        let hinv = h.inverse().unwrap();
        let conj: Vec<Matrix> = gens.iter().map(|g| h.mul(g).unwrap().mul(&hinv).unwrap()).collect();
        assert!(is_absolutely_irreducible(&conj).unwrap());
        let scaled: Vec<Matrix> = gens.iter().map(|g| g.scale(3)).collect();
        assert!(is_absolutely_irreducible(&scaled).unwrap());
        let d = vec![Matrix::diagonal(&f5, &[2, 3])];
        let dconj: Vec<Matrix> = d.iter().map(|g| h.mul(g).unwrap().mul(&hinv).unwrap().scale(4)).collect();
        assert!(!is_absolutely_irreducible(&dconj).unwrap());
    }

    #[test]
    fn tuple_validation() {
        let f7 = f(7, 1);
        let j = Matrix::from_ints(&f7, &[&[0, 1], &[-1, 0]]).unwrap();
        let jinv = j.inverse().unwrap();
        let t = GroupTuple::new(vec![j.clone(), jinv.clone()], vec![2, 4]).unwrap();
        assert_eq!(t.projective_orders(), &[2, 2]);
        assert_eq!(t.warnings().len(), 1);
        assert_eq!(
            GroupTuple::new(vec![j.clone(), jinv.clone()], vec![3, 2]).unwrap_err(),
            Error::OrderMismatch { index: 0, actual: 2, declared: 3 }
        );
        let u = Matrix::from_ints(&f7, &[&[1, 1], &[0, 1]]).unwrap();
        assert_eq!(GroupTuple::new(vec![j.clone(), u], vec![2, 7]).unwrap_err(), Error::ProductNotCentral);
        let d = Matrix::diagonal(&f7, &[2, 2]);
        assert_eq!(GroupTuple::new(vec![d], vec![1]).unwrap_err(), Error::NotSpecialLinear { index: 0 });
        // j * j = -I is central
        let t = GroupTuple::new(vec![j.clone(), j], vec![2, 2]).unwrap();
        assert_eq!(t.product_scalar(), 6);
    }

    #[test]
    fn document_round_trip() {
        let json = r#"{"schema":1,"p":7,"k":1,"n":2,
            "generators":[[[0,1],[6,0]], [[[0],[6]],[[1],[0]]]],
            "orders":[2,2]}"#;
        let t = GroupTuple::from_json(json).unwrap();
        assert_eq!(t.len(), 2);
        let doc = t.to_document();
        let text = serde_json::to_string(&doc).unwrap();
        let back: TupleDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        let t2 = GroupTuple::from_document(&back).unwrap();
        assert_eq!(t2.generators(), t.generators());
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(GroupTuple::from_json("{}"), Err(Error::Schema(_))));
        let bad_version = r#"{"schema":2,"p":7,"k":1,"n":1,"generators":[[[1]]],"orders":[1]}"#;
        assert!(matches!(GroupTuple::from_json(bad_version), Err(Error::Schema(_))));
        let bad_shape = r#"{"p":7,"k":1,"n":2,"generators":[[[1]]],"orders":[1]}"#;
        assert!(matches!(GroupTuple::from_json(bad_shape), Err(Error::Schema(_))));
        let bad_coeff = r#"{"p":7,"k":1,"n":1,"generators":[[[[9]]]],"orders":[1]}"#;
        assert!(matches!(GroupTuple::from_json(bad_coeff), Err(Error::Schema(_))));
    }

    #[test]
    fn projective_order_is_a_class_function() {
        let g = special_linear_group(&f(7, 1), 2, false, 1000).unwrap();
        let h = g.element(17).clone();
        let hinv = h.inverse().unwrap();
        for i in (0..g.len()).step_by(11) {
            let x = g.element(i);
            let y = h.mul(x).unwrap().mul(&hinv).unwrap();
            assert_eq!(projective_order(x).unwrap(), projective_order(&y).unwrap());
        }
    }
}
