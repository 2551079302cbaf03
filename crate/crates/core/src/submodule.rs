use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::hom::ModHom;
use crate::linear::{self, Linear};
use crate::module::FinModule;
use crate::ring::BaseRing;
use crate::validate::{Validate, ValidationReport};
use crate::{Caps, Error, Result};

/// A submodule of a finite module, with its induced module structure.
///
/// Element `i` of [`Submodule::module`] is `elements()[i]` of the parent.
#[derive(Clone, Debug)]
pub struct Submodule {
    parent: Arc<FinModule>,
    elements: Vec<usize>,
    induced: Arc<FinModule>,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && (Arc::ptr_eq(&self.parent, &other.parent) || self.parent == other.parent)
    }
}

impl Eq for Submodule {}

impl Submodule {
    /// Submodule from an element set; rejects sets that are not submodules.
    pub fn new(parent: &Arc<FinModule>, elements: Vec<usize>) -> Result<Self> {
        let report = check_subset(parent, &elements);
        if !report.is_empty() {
            return Err(Error::Invalid {
                what: "submodule",
                report,
            });
        }
        let mut elements = elements;
        elements.sort_unstable();
        elements.dedup();
        Ok(Self::from_sorted(parent, elements))
    }

    pub(crate) fn from_sorted(parent: &Arc<FinModule>, elements: Vec<usize>) -> Self {
        let induced = Arc::new(induce(parent, &elements));
        Submodule {
            parent: parent.clone(),
            elements,
            induced,
        }
    }

    /// The submodule generated by `gens`.
    pub fn generated(parent: &Arc<FinModule>, gens: &[usize]) -> Result<Self> {
        if let Some(&g) = gens.iter().find(|&&g| g >= parent.order()) {
            return Err(Error::Argument(format!(
                "element {g} outside module of order {}",
                parent.order()
            )));
        }
        Ok(Self::from_sorted(parent, linear::span(parent.as_ref(), gens)))
    }

    pub fn whole(parent: &Arc<FinModule>) -> Self {
        Self::from_sorted(parent, (0..parent.order()).collect())
    }

    pub fn zero(parent: &Arc<FinModule>) -> Self {
        Self::from_sorted(parent, alloc::vec![parent.zero()])
    }

    pub fn parent(&self) -> &Arc<FinModule> {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// The induced module structure.
    pub fn module(&self) -> &Arc<FinModule> {
        &self.induced
    }

    /// Position of a parent element inside [`Submodule::module`].
    pub fn local_index(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    pub fn is_subset_of(&self, other: &Submodule) -> bool {
        crate::ideal::is_sorted_subset(&self.elements, &other.elements)
    }

    /// The inclusion map into the parent.
    pub fn inclusion(&self) -> ModHom {
        ModHom::from_table_unchecked(self.induced.clone(), self.parent.clone(), self.elements.clone())
    }

    /// `self` viewed as a submodule of `outer`'s induced module, where both
    /// share a parent and `self ⊆ outer`.
    pub fn restrict_to(&self, outer: &Submodule) -> Result<Submodule> {
        if !self.is_subset_of(outer) {
            return Err(Error::Argument("not contained in the outer submodule".into()));
        }
        let local = self
            .elements
            .iter()
            .map(|&x| outer.local_index(x).expect("subset checked"))
            .collect();
        Ok(Submodule::from_sorted(outer.module(), local))
    }

    /// Some complement `C` with `self ∩ C = 0` and `self + C = parent`,
    /// taking the first one in [`submodules`] order.
    pub fn complement(&self, caps: &Caps) -> Result<Option<Submodule>> {
        let n = self.parent.order();
        for c in submodules(&self.parent, caps)? {
            if c.len() * self.len() != n {
                continue;
            }
            if self.meets_trivially(&c) {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }

    /// `self ∩ other = 0` (with orders multiplying to the parent order this
    /// also means the sum is everything).
    pub fn meets_trivially(&self, other: &Submodule) -> bool {
        let zero = self.parent.zero();
        self.elements
            .iter()
            .all(|&x| x == zero || other.elements.binary_search(&x).is_err())
    }

    /// `self + other` as a submodule of the common parent.
    pub fn sum(&self, other: &Submodule) -> Submodule {
        let elements = linear::sum_of(self.parent.as_ref(), &self.elements, &other.elements);
        Submodule::from_sorted(&self.parent, elements)
    }

    pub fn describe(&self) -> String {
        let names: Vec<String> = self.elements.iter().map(|&x| self.parent.element_name(x)).collect();
        format!("{{{}}}", names.join(","))
    }
}

pub(crate) fn check_subset(parent: &FinModule, elements: &[usize]) -> ValidationReport {
    use crate::validate::Axiom;
    let mut report = ValidationReport::default();
    let n = parent.order();
    if let Some(&x) = elements.iter().find(|&&x| x >= n) {
        report.push(Axiom::ElementRange, &[x]);
        return report;
    }
    let mut inside = alloc::vec![false; n];
    for &x in elements {
        inside[x] = true;
    }
    if !inside[parent.zero()] {
        report.push(Axiom::ContainsZero, &[parent.zero()]);
    }
    'add: for &a in elements {
        for &b in elements {
            if !inside[parent.add(a, b)] {
                report.push(Axiom::ClosedUnderAddition, &[a, b]);
                break 'add;
            }
        }
    }
    if let BaseRing::Finite(r) = parent.ring() {
        'act: for s in 0..r.order() {
            for &a in elements {
                if !inside[parent.act(s, a)] {
                    report.push(Axiom::ClosedUnderAction, &[s, a]);
                    break 'act;
                }
            }
        }
    } else if let Some(&a) = elements.iter().find(|&&a| !inside[parent.neg(a)]) {
        report.push(Axiom::ClosedUnderAction, &[a]);
    }
    report
}

fn induce(parent: &FinModule, elements: &[usize]) -> FinModule {
    let local = |x: usize| elements.binary_search(&x).unwrap_or(0);
    let k = elements.len();
    let add: Vec<Vec<usize>> = elements
        .iter()
        .map(|&a| elements.iter().map(|&b| local(parent.add(a, b))).collect())
        .collect();
    let action = parent.ring().table().map(|r| {
        (0..r.order())
            .map(|s| elements.iter().map(|&a| local(parent.act(s, a))).collect())
            .collect()
    });
    let label = if k == parent.order() {
        String::from(parent.label())
    } else if k == 1 {
        String::from("0")
    } else {
        let names: Vec<String> = elements.iter().map(|&x| parent.element_name(x)).collect();
        format!("⟨{}⟩≤{}", names.join(","), parent.label())
    };
    let mut m = FinModule::from_tables(parent.ring().clone(), add, local(parent.zero()), action, label)
        .expect("induced tables are square");
    m.set_names(elements.iter().map(|&x| parent.element_name(x)).collect());
    m
}

/// Every submodule of `module`, each once, sorted by size and then by
/// element list.
pub fn submodules(module: &Arc<FinModule>, caps: &Caps) -> Result<Vec<Submodule>> {
    Caps::check("module order", module.order(), caps.module_order)?;
    Ok(linear::submodule_lattice(module.as_ref())
        .into_iter()
        .map(|e| Submodule::from_sorted(module, e))
        .collect())
}

impl Validate for Submodule {
    fn validate(&self) -> ValidationReport {
        let mut report = check_subset(&self.parent, &self.elements);
        report.extend(self.induced.validate());
        report
    }
}

impl Linear for Submodule {
    fn size(&self) -> usize {
        self.induced.size()
    }
    fn zero(&self) -> usize {
        self.induced.zero()
    }
    fn plus(&self, a: usize, b: usize) -> usize {
        self.induced.plus(a, b)
    }
    fn scalars(&self) -> usize {
        self.induced.scalars()
    }
    fn scale(&self, s: usize, x: usize) -> usize {
        self.induced.scale(s, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::direct_sum;

    fn z(n: usize) -> Arc<FinModule> {
        Arc::new(FinModule::cyclic_group(n).unwrap())
    }

    #[test]
    fn subgroups_of_z4() {
        let subs = submodules(&z(4), &Caps::default()).unwrap();
        let sets: Vec<&[usize]> = subs.iter().map(|s| s.elements()).collect();
        assert_eq!(sets, alloc::vec![&[0][..], &[0, 2][..], &[0, 1, 2, 3][..]]);
    }

    #[test]
    fn subgroups_of_klein() {
        let k = direct_sum(&BaseRing::Integers, &[z(2), z(2)], &Caps::default()).unwrap();
        assert_eq!(submodules(&k.module, &Caps::default()).unwrap().len(), 5);
    }

    #[test]
    fn zero_module_has_one_submodule() {
        let zero = Arc::new(FinModule::zero_module(&BaseRing::Integers));
        assert_eq!(submodules(&zero, &Caps::default()).unwrap().len(), 1);
    }

    #[test]
    fn capacity_guard() {
        let big = z(65);
        assert!(submodules(&big, &Caps::default()).unwrap_err().is_capacity());
    }

    #[test]
    fn induced_modules_validate() {
        let k = direct_sum(&BaseRing::Integers, &[z(2), z(4)], &Caps::default()).unwrap();
        for s in submodules(&k.module, &Caps::default()).unwrap() {
            assert!(s.validate().is_empty(), "{}", s.describe());
            assert!(crate::validate(&s.inclusion()).is_empty());
        }
    }

    #[test]
    fn rejects_non_submodule() {
        let err = Submodule::new(&z(4), alloc::vec![0, 1]).unwrap_err();
        assert!(matches!(err, Error::Invalid { .. }));
    }

    #[test]
    fn complements() {
        let k = direct_sum(&BaseRing::Integers, &[z(2), z(2)], &Caps::default()).unwrap();
        let first = Submodule::new(&k.module, alloc::vec![0, 2]).unwrap();
        let c = first.complement(&Caps::default()).unwrap().unwrap();
        assert_eq!(c.elements(), &[0, 1]);
        let z4 = z(4);
        let two = Submodule::generated(&z4, &[2]).unwrap();
        assert!(two.complement(&Caps::default()).unwrap().is_none());
    }
}
