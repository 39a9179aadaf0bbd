//! Exact arithmetic in finite fields `F_q`, `q = p^k`, and linear algebra over them.
//!
//! A [`FiniteField`] is a cheap, shareable handle. Elements are stored inside
//! matrices as raw `u32` values: the integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! of the coefficient vector in the polynomial basis `1, x, ..., x^{k-1}`.
//! [`FieldElement`] pairs a raw value with its owning field for the public API.

mod embed;
mod linalg;
mod matrix;
pub(crate) mod poly;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use embed::FieldEmbedding;
pub use linalg::{column_space_union, kernel_dim, rank, EchelonBasis};
pub use matrix::{EncodedMatrix, Matrix};

/// Fields with at most this many elements use log/antilog tables.
pub const TABLE_LIMIT: u64 = 1 << 16;

#[derive(Clone)]
pub struct FiniteField(Arc<Inner>);

struct Inner {
    p: u64,
    k: u32,
    q: u64,
    /// Monic modulus, low degree first, length k+1.
    modulus: Vec<u64>,
    arith: Arith,
    primitive: u32,
}

enum Arith {
    Prime,
    Table { exp: Vec<u32>, log: Vec<u32> },
    Poly,
}

impl FiniteField {
    /// Builds `F_{p^k}` with the least monic irreducible modulus, where
    /// candidates are ordered by the integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
    /// of their lower coefficients. For `k = 1` the modulus is `x`.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= u64::from(u32::MAX))
            .ok_or(Error::FieldTooLarge { p, k })?;
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            least_irreducible(p, k)?
        };
        let arith = if k == 1 { Arith::Prime } else { Arith::Poly };
        let mut inner = Inner {
            p,
            k,
            q,
            modulus,
            arith,
            primitive: 0,
        };
        inner.primitive = find_primitive(&inner);
        if k > 1 && q <= TABLE_LIMIT {
            let n = (q - 1) as usize;
            let mut exp = vec![0u32; 2 * n];
            let mut log = vec![0u32; q as usize];
            let mut x = 1u32;
            for i in 0..n {
                exp[i] = x;
                exp[i + n] = x;
                log[x as usize] = i as u32;
                x = inner.mul_poly(x, inner.primitive);
            }
            inner.arith = Arith::Table { exp, log };
        }
        Ok(FiniteField(Arc::new(inner)))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Modulus coefficients, low degree first (length `k + 1`, monic).
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        self.0.primitive
    }

    pub fn same_field(&self, other: &FiniteField) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }

    pub fn check_same(&self, other: &FiniteField) -> Result<()> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> u32 {
        v.rem_euclid(self.0.p as i64) as u32
    }

    pub fn element(&self, raw: u32) -> FieldElement {
        FieldElement {
            field: self.clone(),
            raw: raw % self.0.q as u32,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.0.q as u32
    }

    pub fn coeffs(&self, a: u32) -> Vec<u32> {
        let p = self.0.p;
        let mut v = Vec::with_capacity(self.0.k as usize);
        let mut x = u64::from(a);
        for _ in 0..self.0.k {
            v.push((x % p) as u32);
            x /= p;
        }
        v
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<u32> {
        if coeffs.len() > self.0.k as usize {
            return Err(Error::InvalidElement(format!(
                "{} coefficients for a degree-{} field",
                coeffs.len(),
                self.0.k
            )));
        }
        let mut x = 0u64;
        for &c in coeffs.iter().rev() {
            if u64::from(c) >= self.0.p {
                return Err(Error::InvalidElement(format!(
                    "coefficient {c} out of range for characteristic {}",
                    self.0.p
                )));
            }
            x = x * self.0.p + u64::from(c);
        }
        Ok(x as u32)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = &self.0;
        if s.k == 1 {
            let r = u64::from(a) + u64::from(b);
            (if r >= s.p { r - s.p } else { r }) as u32
        } else if s.p == 2 {
            a ^ b
        } else {
            s.digitwise(a, b, |x, y| {
                let r = x + y;
                if r >= s.p {
                    r - s.p
                } else {
                    r
                }
            })
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let s = &self.0;
        if a == 0 || s.p == 2 {
            a
        } else if s.k == 1 {
            (s.p - u64::from(a)) as u32
        } else {
            s.digitwise(a, 0, |x, _| if x == 0 { 0 } else { s.p - x })
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let s = &self.0;
        match &s.arith {
            Arith::Prime => ((u64::from(a) * u64::from(b)) % s.p) as u32,
            Arith::Table { exp, log } => {
                if a == 0 || b == 0 {
                    0
                } else {
                    exp[(log[a as usize] + log[b as usize]) as usize]
                }
            }
            Arith::Poly => s.mul_poly(a, b),
        }
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let s = &self.0;
        Some(match &s.arith {
            Arith::Table { exp, log } => {
                let n = (s.q - 1) as u32;
                exp[((n - log[a as usize]) % n) as usize]
            }
            _ => self.pow(a, s.q - 2),
        })
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: u32) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let mut ord = self.0.q - 1;
        for r in prime_factors(self.0.q - 1) {
            while ord % r == 0 && self.pow(a, ord / r) == 1 {
                ord /= r;
            }
        }
        Some(ord)
    }

    /// A primitive `d`-th root of unity, if `d` divides `q - 1`.
    pub fn root_of_unity(&self, d: u64) -> Option<u32> {
        if d == 0 || (self.0.q - 1) % d != 0 {
            return None;
        }
        Some(self.pow(self.0.primitive, (self.0.q - 1) / d))
    }
}

impl Inner {
    fn digitwise(&self, a: u32, b: u32, f: impl Fn(u64, u64) -> u64) -> u32 {
        let (mut x, mut y) = (u64::from(a), u64::from(b));
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.k {
            out += f(x % self.p, y % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        out as u32
    }

    fn mul_poly(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return ((u64::from(a) * u64::from(b)) % self.p) as u32;
        }
        let pa = poly::decode(u64::from(a), self.p, self.k);
        let pb = poly::decode(u64::from(b), self.p, self.k);
        let prod = poly::mul(&pa, &pb, self.p);
        let r = poly::rem(&prod, &self.modulus, self.p);
        poly::encode(&r, self.p) as u32
    }

    fn pow_poly(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_poly(acc, base);
            }
            base = self.mul_poly(base, base);
            e >>= 1;
        }
        acc
    }
}

fn find_primitive(inner: &Inner) -> u32 {
    let n = inner.q - 1;
    if n == 1 {
        return 1;
    }
    let factors = prime_factors(n);
    (1..inner.q as u32)
        .find(|&g| factors.iter().all(|&r| inner.pow_poly(g, n / r) != 1))
        .expect("multiplicative group of a finite field is cyclic")
}

fn least_irreducible(p: u64, k: u32) -> Result<Vec<u64>> {
    let count = p.pow(k);
    for m in 0..count {
        let mut f = poly::decode(m, p, k);
        f.resize(k as usize, 0);
        f.push(1);
        if poly::is_irreducible(&f, p) {
            return Ok(f);
        }
    }
    Err(Error::NoIrreducible { p, k })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other)
    }
}

impl Eq for FiniteField {}

impl Hash for FiniteField {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)?;
        if self.0.k > 1 {
            write!(f, "[mod {:?}]", self.0.modulus)?;
        }
        Ok(())
    }
}

/// A field element together with its owning field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: FiniteField,
    raw: u32,
}

impl FieldElement {
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn raw(&self) -> u32 {
        self.raw
    }

    pub fn is_zero(&self) -> bool {
        self.raw == 0
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.raw)
    }

    fn with(&self, raw: u32) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            raw,
        }
    }

    pub fn add(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.field.check_same(&rhs.field)?;
        Ok(self.with(self.field.add(self.raw, rhs.raw)))
    }

    pub fn sub(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.field.check_same(&rhs.field)?;
        Ok(self.with(self.field.sub(self.raw, rhs.raw)))
    }

    pub fn mul(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.field.check_same(&rhs.field)?;
        Ok(self.with(self.field.mul(self.raw, rhs.raw)))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.field.neg(self.raw))
    }

    pub fn inv(&self) -> Option<FieldElement> {
        self.field.inv(self.raw).map(|r| self.with(r))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.with(self.field.pow(self.raw, e))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs())
    }
}

/// Wire form of a field. The modulus is implied: it is the deterministic choice of [`FiniteField::new`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub k: u32,
}

impl From<&FiniteField> for FieldSpec {
    fn from(f: &FiniteField) -> Self {
        FieldSpec {
            p: f.characteristic(),
            k: f.degree(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_field_uses_plain_modular_arithmetic() {
        let f = FiniteField::new(7, 1).unwrap();
        assert_eq!(f.order(), 7);
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.add(4, 5), 2);
        assert_eq!(f.inv(3), Some(5));
    }

    /// Exhaustive irreducibility check by root/factor search, independent of
    /// the Rabin test used by the constructor.
    fn brute_irreducible(f: &[u64], p: u64) -> bool {
        let k = f.len() - 1;
        for d in 1..=k / 2 {
            for m in 0..p.pow(d as u32) {
                let mut g = poly::decode(m, p, d as u32);
                g.resize(d, 0);
                g.push(1);
                if poly::rem(f, &g, p).iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn least_modulus_matches_exhaustive_scan() {
        // F_8: scan the 8 monic cubics in order; x^3+x+1 is the first irreducible.
        let mut first = None;
        for m in 0..8u64 {
            let mut f = poly::decode(m, 2, 3);
            f.resize(3, 0);
            f.push(1);
            if brute_irreducible(&f, 2) {
                first = Some(f);
                break;
            }
        }
        assert_eq!(first.unwrap(), vec![1, 1, 0, 1]);
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
    }

    #[test]
    fn rabin_test_agrees_with_factor_search() {
        for (p, k) in [(2u64, 4u32), (3, 3), (5, 2), (2, 5)] {
            for m in 0..p.pow(k) {
                let mut f = poly::decode(m, p, k);
                f.resize(k as usize, 0);
                f.push(1);
                assert_eq!(poly::is_irreducible(&f, p), brute_irreducible(&f, p), "{f:?} mod {p}");
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FiniteField::new(6, 1).unwrap_err(), Error::NotPrime(6));
        assert_eq!(FiniteField::new(5, 0).unwrap_err(), Error::ZeroDegree);
        assert!(matches!(FiniteField::new(65537, 3), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn serialization_is_low_degree_first() {
        let f8 = FiniteField::new(2, 3).unwrap();
        let x2_plus_1 = f8.from_coeffs(&[1, 0, 1]).unwrap();
        assert_eq!(x2_plus_1, 5);
        assert_eq!(f8.coeffs(x2_plus_1), vec![1, 0, 1]);
        assert!(f8.from_coeffs(&[2]).is_err());
        assert!(f8.from_coeffs(&[1, 0, 0, 1]).is_err());
    }

    #[test]
    fn cross_field_operations_fail() {
        let a = FiniteField::new(5, 1).unwrap().element(2);
        let b = FiniteField::new(7, 1).unwrap().element(2);
        assert_eq!(a.add(&b).unwrap_err(), Error::FieldMismatch);
        assert_eq!(a.mul(&a).unwrap().raw(), 4);
    }

    #[test]
    fn table_and_polynomial_paths_agree() {
        let f = FiniteField::new(3, 4).unwrap();
        for a in (0..81).step_by(7) {
            for b in 0..81 {
                assert_eq!(f.mul(a, b), f.0.mul_poly(a, b));
            }
        }
    }

    #[test]
    fn large_extension_uses_polynomial_arithmetic() {
        // 3^11 > 2^16
        let f = FiniteField::new(3, 11).unwrap();
        assert!(matches!(f.0.arith, Arith::Poly));
        let g = f.primitive_element();
        assert_eq!(f.mult_order(g), Some(f.order() - 1));
        let a = 12345u32;
        assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
    }

    #[test]
    fn roots_of_unity() {
        let f = FiniteField::new(2, 4).unwrap();
        let z = f.root_of_unity(5).unwrap();
        assert_eq!(f.mult_order(z), Some(5));
        assert!(f.root_of_unity(7).is_none());
    }

    fn field_strategy() -> impl Strategy<Value = FiniteField> {
        prop::sample::select(vec![(2u64, 1u32), (2, 3), (3, 2), (5, 1), (7, 2), (13, 1), (2, 8), (5, 3)])
            .prop_map(|(p, k)| FiniteField::new(p, k).unwrap())
    }

    proptest! {
        #[test]
        fn field_axioms(f in field_strategy(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
            let q = f.order() as u32;
            let (a, b, c) = (a % q, b % q, c % q);
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, f.neg(a)), 0);
            prop_assert_eq!(f.sub(f.add(a, b), b), a);
            if a != 0 {
                prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            let p = f.characteristic();
            prop_assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
        }
    }
}
