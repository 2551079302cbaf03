use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::linear::Linear;
use crate::validate::Validate;
use crate::{Error, Result};

/// A finite unital ring given by its full addition and multiplication
/// tables over the element indices `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingTable {
    order: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    one: usize,
    label: String,
}

fn flatten(what: &'static str, n: usize, rows: Vec<Vec<usize>>) -> Result<Vec<usize>> {
    if rows.len() != n {
        return Err(Error::Dimension {
            what,
            expected: n,
            found: rows.len(),
        });
    }
    let mut flat = Vec::with_capacity(n * n);
    for row in rows {
        if row.len() != n {
            return Err(Error::Dimension {
                what,
                expected: n,
                found: row.len(),
            });
        }
        flat.extend(row);
    }
    Ok(flat)
}

pub(crate) fn negation_table(n: usize, add: &[usize], zero: usize) -> Vec<usize> {
    (0..n)
        .map(|a| (0..n).find(|&b| add[a * n + b] == zero).unwrap_or(zero))
        .collect()
}

impl RingTable {
    /// Builds a ring from square tables, checking dimensions only.
    /// Use [`RingTable::new`] or [`crate::validate`] for the ring axioms.
    pub fn from_tables(
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
        label: impl Into<String>,
    ) -> Result<Self> {
        let n = add.len();
        if n == 0 {
            return Err(Error::Argument("a ring needs at least one element".into()));
        }
        let add = flatten("addition table", n, add)?;
        let mul = flatten("multiplication table", n, mul)?;
        for (what, x) in [("zero", zero), ("one", one)] {
            if x >= n {
                return Err(Error::Argument(format!("{what} index {x} outside 0..{n}")));
            }
        }
        let neg = negation_table(n, &add, zero);
        Ok(RingTable {
            order: n,
            add,
            mul,
            neg,
            zero,
            one,
            label: label.into(),
        })
    }

    /// Builds a ring and rejects it unless every ring axiom holds.
    pub fn new(
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
        label: impl Into<String>,
    ) -> Result<Self> {
        let ring = Self::from_tables(add, mul, zero, one, label)?;
        let report = ring.validate();
        if report.is_empty() {
            Ok(ring)
        } else {
            Err(Error::Invalid { what: "ring", report })
        }
    }

    pub(crate) fn cyclic(n: usize) -> Self {
        let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let mul = (0..n * n).map(|i| (i / n) * (i % n) % n).collect();
        let neg = (0..n).map(|a| (n - a) % n).collect();
        RingTable {
            order: n,
            add,
            mul,
            neg,
            zero: 0,
            one: 1 % n,
            label: format!("Z_{n}"),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    /// The element `n·1`.
    pub fn from_int(&self, n: i64) -> usize {
        let k = n.unsigned_abs() as usize % self.characteristic();
        let mut acc = self.zero;
        for _ in 0..k {
            acc = self.add(acc, self.one);
        }
        if n < 0 {
            self.neg(acc)
        } else {
            acc
        }
    }

    /// Additive order of the identity.
    pub fn characteristic(&self) -> usize {
        crate::linear::additive_order(self, self.one)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&e| self.mul(e, e) == e).collect()
    }

    pub(crate) fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub(crate) fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

impl Linear for RingTable {
    fn size(&self) -> usize {
        self.order
    }
    fn zero(&self) -> usize {
        self.zero
    }
    fn plus(&self, a: usize, b: usize) -> usize {
        self.add(a, b)
    }
    fn scalars(&self) -> usize {
        self.order
    }
    fn scale(&self, s: usize, x: usize) -> usize {
        self.mul(s, x)
    }
}

/// The base ring of a module: a finite table ring, or the integers.
///
/// The integer ring never enumerates elements; its ideals are `nZ` with
/// `n ≥ 0`.
#[derive(Clone, Debug)]
pub enum BaseRing {
    Finite(Arc<RingTable>),
    Integers,
}

impl PartialEq for BaseRing {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (BaseRing::Finite(a), BaseRing::Finite(b)) => Arc::ptr_eq(a, b) || a == b,
            (BaseRing::Integers, BaseRing::Integers) => true,
            _ => false,
        }
    }
}

impl Eq for BaseRing {}

impl BaseRing {
    pub fn finite(ring: RingTable) -> Self {
        BaseRing::Finite(Arc::new(ring))
    }

    pub fn table(&self) -> Option<&Arc<RingTable>> {
        match self {
            BaseRing::Finite(r) => Some(r),
            BaseRing::Integers => None,
        }
    }

    pub(crate) fn require_finite(&self) -> Result<&Arc<RingTable>> {
        self.table().ok_or(Error::NotFinite)
    }

    pub fn is_integers(&self) -> bool {
        matches!(self, BaseRing::Integers)
    }

    pub fn label(&self) -> &str {
        match self {
            BaseRing::Finite(r) => r.label(),
            BaseRing::Integers => "Z",
        }
    }

    /// Size of the scalar index set used for module actions: the ring order,
    /// or 1 for the integers (whose action is derived from addition).
    pub(crate) fn scalar_count(&self) -> usize {
        match self {
            BaseRing::Finite(r) => r.order(),
            BaseRing::Integers => 1,
        }
    }
}

/// `Z_n` as a table ring.
pub fn make_cyclic_ring(n: usize) -> Result<BaseRing> {
    if n == 0 {
        return Err(Error::Argument("Z_0 is not a finite ring".into()));
    }
    Ok(BaseRing::finite(RingTable::cyclic(n)))
}

/// Componentwise product ring, elements `(a, b)` indexed `a·|r2| + b`.
pub fn make_product_ring(r1: &BaseRing, r2: &BaseRing) -> Result<BaseRing> {
    let (a, b) = (r1.require_finite()?, r2.require_finite()?);
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let split = |i: usize| (i / nb, i % nb);
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (x1, x2) = split(x);
        for y in 0..n {
            let (y1, y2) = split(y);
            add.push(a.add(x1, y1) * nb + b.add(x2, y2));
            mul.push(a.mul(x1, y1) * nb + b.mul(x2, y2));
        }
    }
    let zero = a.zero() * nb + b.zero();
    let neg = negation_table(n, &add, zero);
    Ok(BaseRing::finite(RingTable {
        order: n,
        add,
        mul,
        neg,
        zero,
        one: a.one() * nb + b.one(),
        label: format!("{}×{}", a.label(), b.label()),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::validate;

    #[test]
    fn zero_ring_has_one_element() {
        let r = make_cyclic_ring(1).unwrap();
        let t = r.table().unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.zero(), t.one());
        assert!(validate(t.as_ref()).is_empty());
    }

    #[test]
    fn z4_multiplication() {
        let r = make_cyclic_ring(4).unwrap();
        let t = r.table().unwrap();
        assert_eq!(t.mul(2, 2), 0);
        assert_eq!(t.label(), "Z_4");
        assert!(validate(t.as_ref()).is_empty());
    }

    #[test]
    fn z0_rejected() {
        assert!(matches!(make_cyclic_ring(0), Err(Error::Argument(_))));
    }

    #[test]
    fn products() {
        let z2 = make_cyclic_ring(2).unwrap();
        let z3 = make_cyclic_ring(3).unwrap();
        let p = make_product_ring(&z2, &z3).unwrap();
        assert_eq!(p.table().unwrap().order(), 6);
        assert!(validate(p.table().unwrap().as_ref()).is_empty());

        let klein = make_product_ring(&z2, &z2).unwrap();
        let t = klein.table().unwrap();
        // idempotents of Z_2 × Z_2 are all four elements; three are nonzero
        let nontrivial = t.idempotents().into_iter().filter(|&e| e != t.zero()).count();
        assert_eq!(nontrivial, 3);

        assert!(matches!(
            make_product_ring(&z2, &BaseRing::Integers),
            Err(Error::NotFinite)
        ));
    }

    #[test]
    fn integer_images() {
        let t = RingTable::cyclic(6);
        assert_eq!(t.from_int(8), 2);
        assert_eq!(t.from_int(-1), 5);
        assert_eq!(t.characteristic(), 6);
    }
}
