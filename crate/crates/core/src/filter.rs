//! The annihilator filter of a module.
//!
//! For a module `M`, the filter is generated by the left ideals containing
//! some `ann(m)`. It is stored through its base: the closure of all element
//! annihilators under pairwise intersection. A left ideal belongs to the
//! filter exactly when it contains a base element.

use alloc::vec::Vec;

use crate::ideal::{left_ideals, LeftIdeal};
use crate::module::FinModule;
use crate::ring::BaseRing;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnnFilter {
    /// Intersection-closed annihilator base, sorted by size then elements.
    Finite { base: Vec<LeftIdeal> },
    /// `nZ` is in the filter iff `n ≥ 1` and `n` divides `exponent`.
    Integers { exponent: u64 },
}

impl AnnFilter {
    pub fn base(&self) -> Option<&[LeftIdeal]> {
        match self {
            AnnFilter::Finite { base } => Some(base),
            AnnFilter::Integers { .. } => None,
        }
    }

    pub fn exponent(&self) -> Option<u64> {
        match self {
            AnnFilter::Integers { exponent } => Some(*exponent),
            AnnFilter::Finite { .. } => None,
        }
    }

    /// The smallest ideal of the filter (the annihilator of the module).
    pub fn minimum(&self) -> LeftIdeal {
        match self {
            AnnFilter::Finite { base } => base[0].clone(),
            AnnFilter::Integers { exponent } => LeftIdeal::Integers { gen: *exponent },
        }
    }
}

/// The left ideals containing the annihilator of some element.
pub fn omega(module: &FinModule) -> Result<Vec<LeftIdeal>> {
    let anns: Vec<LeftIdeal> = (0..module.order()).map(|m| module.annihilator(m)).collect();
    Ok(left_ideals(module.ring())?
        .into_iter()
        .filter(|l| anns.iter().any(|a| l.contains_ideal(a)))
        .collect())
}

/// The filter generated by [`omega`].
///
/// Over the integers the filter is described by the exponent of the module
/// (1 for the zero module); the zero ideal is never a member since every
/// element of a finite module has finite order.
pub fn filter_closure(module: &FinModule) -> AnnFilter {
    match module.ring() {
        BaseRing::Integers => AnnFilter::Integers {
            exponent: module.exponent(),
        },
        BaseRing::Finite(_) => {
            let mut base: Vec<LeftIdeal> = Vec::new();
            for m in 0..module.order() {
                let ann = module.annihilator(m);
                if !base.contains(&ann) {
                    base.push(ann);
                }
            }
            // fixpoint of pairwise intersections
            let mut i = 0;
            while i < base.len() {
                let mut j = 0;
                while j <= i {
                    let meet = base[i].intersect(&base[j]).expect("same ring");
                    if !base.contains(&meet) {
                        base.push(meet);
                    }
                    j += 1;
                }
                i += 1;
            }
            base.sort_by(|a, b| {
                let (ea, eb) = (a.elements().unwrap_or(&[]), b.elements().unwrap_or(&[]));
                ea.len().cmp(&eb.len()).then_with(|| ea.cmp(eb))
            });
            AnnFilter::Finite { base }
        }
    }
}

/// Membership of a left ideal in the filter.
pub fn filter_contains(filter: &AnnFilter, ideal: &LeftIdeal) -> bool {
    match (filter, ideal) {
        (AnnFilter::Integers { exponent }, LeftIdeal::Integers { gen }) => *gen >= 1 && exponent % gen == 0,
        (AnnFilter::Finite { base }, LeftIdeal::Finite { .. }) => base.iter().any(|b| ideal.contains_ideal(b)),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::direct_sum;
    use crate::ring::make_cyclic_ring;
    use crate::Caps;
    use alloc::sync::Arc;
    use alloc::vec;

    fn elems(v: &[LeftIdeal]) -> Vec<Vec<usize>> {
        v.iter().map(|l| l.elements().unwrap().to_vec()).collect()
    }

    #[test]
    fn omega_of_zero_module() {
        let z4 = make_cyclic_ring(4).unwrap();
        let zero = FinModule::zero_module(&z4);
        assert_eq!(elems(&omega(&zero).unwrap()), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn omega_of_z2_over_z4() {
        let z4 = make_cyclic_ring(4).unwrap();
        let m = FinModule::cyclic(&z4, 2).unwrap();
        assert_eq!(elems(&omega(&m).unwrap()), vec![vec![0, 2], vec![0, 1, 2, 3]]);
        let f = filter_closure(&m);
        assert_eq!(elems(f.base().unwrap()), vec![vec![0, 2], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn omega_of_regular_module_contains_ring() {
        let z6 = make_cyclic_ring(6).unwrap();
        let m = FinModule::regular(&z6).unwrap();
        let om = omega(&m).unwrap();
        assert!(om.iter().any(LeftIdeal::is_whole));
    }

    #[test]
    fn integer_exponents() {
        let z2 = Arc::new(FinModule::cyclic_group(2).unwrap());
        let z3 = Arc::new(FinModule::cyclic_group(3).unwrap());
        assert_eq!(filter_closure(&z2).exponent(), Some(2));
        let s = direct_sum(&BaseRing::Integers, &[z2.clone(), z3], &Caps::default()).unwrap();
        assert_eq!(filter_closure(&s.module).exponent(), Some(6));
        let zero = FinModule::zero_module(&BaseRing::Integers);
        assert_eq!(filter_closure(&zero).exponent(), Some(1));
    }

    #[test]
    fn integer_membership() {
        let z2 = FinModule::cyclic_group(2).unwrap();
        let f = filter_closure(&z2);
        assert!(!filter_contains(&f, &LeftIdeal::integers(4)));
        assert!(filter_contains(&f, &LeftIdeal::integers(2)));
        assert!(filter_contains(&f, &LeftIdeal::integers(1)));
        assert!(!filter_contains(&f, &LeftIdeal::integers(0)));
    }

    #[test]
    fn whole_ring_always_member() {
        let z8 = make_cyclic_ring(8).unwrap();
        let m = FinModule::cyclic(&z8, 4).unwrap();
        assert!(filter_contains(&filter_closure(&m), &LeftIdeal::whole(&z8)));
    }
}
