use alloc::vec::Vec;
use core::fmt;

use crate::ideal::LeftIdeal;
use crate::module::FinModule;
use crate::ring::{BaseRing, RingTable};

/// Axioms checked by [`validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    ElementRange,
    AddAssociative,
    AddCommutative,
    AddIdentity,
    AddInverse,
    MulAssociative,
    LeftIdentity,
    RightIdentity,
    LeftDistributive,
    RightDistributive,
    ActionAdditive,
    ActionDistributive,
    ActionAssociative,
    ActionUnital,
    ContainsZero,
    ClosedUnderAddition,
    ClosedUnderAction,
    MapAdditive,
    MapLinear,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::ElementRange => "element index in range",
            Axiom::AddAssociative => "(a+b)+c = a+(b+c)",
            Axiom::AddCommutative => "a+b = b+a",
            Axiom::AddIdentity => "a+0 = a",
            Axiom::AddInverse => "a has an additive inverse",
            Axiom::MulAssociative => "(ab)c = a(bc)",
            Axiom::LeftIdentity => "1·a = a",
            Axiom::RightIdentity => "a·1 = a",
            Axiom::LeftDistributive => "a(b+c) = ab+ac",
            Axiom::RightDistributive => "(a+b)c = ac+bc",
            Axiom::ActionAdditive => "r(m+n) = rm+rn",
            Axiom::ActionDistributive => "(r+s)m = rm+sm",
            Axiom::ActionAssociative => "(rs)m = r(sm)",
            Axiom::ActionUnital => "1·m = m",
            Axiom::ContainsZero => "contains zero",
            Axiom::ClosedUnderAddition => "closed under addition",
            Axiom::ClosedUnderAction => "closed under the ring action",
            Axiom::MapAdditive => "f(a+b) = f(a)+f(b)",
            Axiom::MapLinear => "f(r·a) = r·f(a)",
        }
    }
}

/// One violated axiom together with the element indices exhibiting it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

/// Every violated axiom of a structure, each with its first witness in
/// index order. Empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures(&self) -> &[AxiomFailure] {
        &self.failures
    }

    pub fn cites(&self, axiom: Axiom) -> bool {
        self.failures.iter().any(|f| f.axiom == axiom)
    }

    pub(crate) fn push(&mut self, axiom: Axiom, witness: &[usize]) {
        self.failures.push(AxiomFailure {
            axiom,
            witness: witness.to_vec(),
        });
    }

    pub(crate) fn extend(&mut self, other: ValidationReport) {
        self.failures.extend(other.failures);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return f.write_str("no violations");
        }
        for (i, fail) in self.failures.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{} fails at {:?}", fail.axiom.name(), fail.witness)?;
        }
        Ok(())
    }
}

pub trait Validate {
    fn validate(&self) -> ValidationReport;
}

/// Full-scan axiom check of a ring, module, submodule or map.
pub fn validate<T: Validate + ?Sized>(structure: &T) -> ValidationReport {
    structure.validate()
}

impl<T: Validate + ?Sized> Validate for alloc::sync::Arc<T> {
    fn validate(&self) -> ValidationReport {
        (**self).validate()
    }
}

/// First witness of a failing predicate over `0..n` triples.
fn find3(n: usize, mut bad: impl FnMut(usize, usize, usize) -> bool) -> Option<[usize; 3]> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if bad(a, b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

fn group_axioms(report: &mut ValidationReport, n: usize, add: impl Fn(usize, usize) -> usize, zero: usize) {
    if let Some(w) = find3(n, |a, b, c| add(add(a, b), c) != add(a, add(b, c))) {
        report.push(Axiom::AddAssociative, &w);
    }
    'comm: for a in 0..n {
        for b in 0..a {
            if add(a, b) != add(b, a) {
                report.push(Axiom::AddCommutative, &[a, b]);
                break 'comm;
            }
        }
    }
    if let Some(a) = (0..n).find(|&a| add(a, zero) != a || add(zero, a) != a) {
        report.push(Axiom::AddIdentity, &[a]);
    }
    if let Some(a) = (0..n).find(|&a| !(0..n).any(|b| add(a, b) == zero)) {
        report.push(Axiom::AddInverse, &[a]);
    }
}

impl Validate for RingTable {
    fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.order();
        let range = |t: &[usize]| t.iter().position(|&x| x >= n);
        if let Some(i) = range(self.add_table()).or_else(|| range(self.mul_table())) {
            report.push(Axiom::ElementRange, &[i / n, i % n]);
            return report;
        }
        group_axioms(&mut report, n, |a, b| self.add(a, b), self.zero());
        let mul = |a, b| self.mul(a, b);
        if let Some(w) = find3(n, |a, b, c| mul(mul(a, b), c) != mul(a, mul(b, c))) {
            report.push(Axiom::MulAssociative, &w);
        }
        let one = self.one();
        if let Some(a) = (0..n).find(|&a| mul(one, a) != a) {
            report.push(Axiom::LeftIdentity, &[one, a]);
        }
        if let Some(a) = (0..n).find(|&a| mul(a, one) != a) {
            report.push(Axiom::RightIdentity, &[a, one]);
        }
        if let Some(w) = find3(n, |a, b, c| mul(a, self.add(b, c)) != self.add(mul(a, b), mul(a, c))) {
            report.push(Axiom::LeftDistributive, &w);
        }
        if let Some(w) = find3(n, |a, b, c| mul(self.add(a, b), c) != self.add(mul(a, c), mul(b, c))) {
            report.push(Axiom::RightDistributive, &w);
        }
        report
    }
}

impl Validate for FinModule {
    fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.order();
        if let Some(i) = self.add_table().iter().position(|&x| x >= n) {
            report.push(Axiom::ElementRange, &[i / n, i % n]);
            return report;
        }
        if let Some(i) = self.action_table().iter().position(|&x| x >= n) {
            report.push(Axiom::ElementRange, &[i / n, i % n]);
            return report;
        }
        group_axioms(&mut report, n, |a, b| self.add(a, b), self.zero());
        let BaseRing::Finite(r) = self.ring() else {
            return report;
        };
        let k = r.order();
        'add: for s in 0..k {
            for a in 0..n {
                for b in 0..n {
                    if self.act(s, self.add(a, b)) != self.add(self.act(s, a), self.act(s, b)) {
                        report.push(Axiom::ActionAdditive, &[s, a, b]);
                        break 'add;
                    }
                }
            }
        }
        'dist: for s in 0..k {
            for t in 0..k {
                for a in 0..n {
                    if self.act(r.add(s, t), a) != self.add(self.act(s, a), self.act(t, a)) {
                        report.push(Axiom::ActionDistributive, &[s, t, a]);
                        break 'dist;
                    }
                }
            }
        }
        'assoc: for s in 0..k {
            for t in 0..k {
                for a in 0..n {
                    if self.act(r.mul(s, t), a) != self.act(s, self.act(t, a)) {
                        report.push(Axiom::ActionAssociative, &[s, t, a]);
                        break 'assoc;
                    }
                }
            }
        }
        if let Some(a) = (0..n).find(|&a| self.act(r.one(), a) != a) {
            report.push(Axiom::ActionUnital, &[r.one(), a]);
        }
        report
    }
}

impl Validate for LeftIdeal {
    fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let LeftIdeal::Finite { ring, elements } = self else {
            return report;
        };
        let n = ring.order();
        if let Some(&x) = elements.iter().find(|&&x| x >= n) {
            report.push(Axiom::ElementRange, &[x]);
            return report;
        }
        if !self.contains(ring.zero()) {
            report.push(Axiom::ContainsZero, &[ring.zero()]);
        }
        'add: for &a in elements {
            for &b in elements {
                if !self.contains(ring.add(a, b)) {
                    report.push(Axiom::ClosedUnderAddition, &[a, b]);
                    break 'add;
                }
            }
        }
        'mul: for r in 0..n {
            for &a in elements {
                if !self.contains(ring.mul(r, a)) {
                    report.push(Axiom::ClosedUnderAction, &[r, a]);
                    break 'mul;
                }
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn z4_tables() -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let add = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        let mul = (0..4).map(|a| (0..4).map(|b| (a * b) % 4).collect()).collect();
        (add, mul)
    }

    #[test]
    fn valid_z4_has_empty_report() {
        let (add, mul) = z4_tables();
        let r = RingTable::from_tables(add, mul, 0, 1, "Z_4").unwrap();
        assert!(validate(&r).is_empty());
    }

    #[test]
    fn corrupted_identity_is_cited() {
        let (add, mut mul) = z4_tables();
        mul[1][1] = 0;
        let r = RingTable::from_tables(add.clone(), mul.clone(), 0, 1, "bad").unwrap();
        let report = validate(&r);
        assert!(report.cites(Axiom::LeftIdentity));
        let fail = report
            .failures()
            .iter()
            .find(|f| f.axiom == Axiom::LeftIdentity)
            .unwrap();
        assert_eq!(fail.witness, vec![1, 1]);
        assert!(matches!(
            RingTable::new(add, mul, 0, 1, "bad"),
            Err(crate::Error::Invalid { .. })
        ));
    }

    #[test]
    fn dimension_mismatch_is_separate() {
        let (add, mut mul) = z4_tables();
        mul[2].pop();
        let err = RingTable::from_tables(add, mul, 0, 1, "bad").unwrap_err();
        assert!(matches!(err, crate::Error::Dimension { .. }));
    }

    #[test]
    fn module_with_broken_action() {
        let z4 = crate::make_cyclic_ring(4).unwrap();
        let add: Vec<Vec<usize>> = (0..2).map(|a| (0..2).map(|b| (a + b) % 2).collect()).collect();
        // r·m = m for every r breaks (r+s)m = rm+sm
        let action = vec![vec![0, 1]; 4];
        let m = FinModule::from_tables(z4, add, 0, Some(action), "bad").unwrap();
        let report = validate(&m);
        assert!(report.cites(Axiom::ActionDistributive));
    }

    #[test]
    fn display_lists_failures() {
        let mut r = ValidationReport::default();
        assert_eq!(alloc::format!("{r}"), "no violations");
        r.push(Axiom::AddIdentity, &[3]);
        assert_eq!(alloc::format!("{r}"), "a+0 = a fails at [3]");
    }
}
