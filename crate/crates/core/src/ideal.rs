use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::linear::{self, Linear};
use crate::ring::{BaseRing, RingTable};
use crate::{Error, Result};

/// A left ideal of a base ring.
///
/// Over a finite ring the ideal is its sorted element set; over the integers
/// it is `gen·Z` with `gen ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeftIdeal {
    Finite { ring: Arc<RingTable>, elements: Vec<usize> },
    Integers { gen: u64 },
}

impl LeftIdeal {
    /// Ideal from an element set over a finite ring; closure is not checked
    /// here (see [`crate::validate`]).
    pub fn from_elements(ring: &Arc<RingTable>, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if let Some(&x) = elements.iter().find(|&&x| x >= ring.order()) {
            return Err(Error::Argument(format!(
                "element {x} outside ring of order {}",
                ring.order()
            )));
        }
        Ok(LeftIdeal::Finite {
            ring: ring.clone(),
            elements,
        })
    }

    pub fn integers(gen: u64) -> Self {
        LeftIdeal::Integers { gen }
    }

    pub fn whole(ring: &BaseRing) -> Self {
        match ring {
            BaseRing::Finite(r) => LeftIdeal::Finite {
                ring: r.clone(),
                elements: (0..r.order()).collect(),
            },
            BaseRing::Integers => LeftIdeal::Integers { gen: 1 },
        }
    }

    pub fn zero(ring: &BaseRing) -> Self {
        match ring {
            BaseRing::Finite(r) => LeftIdeal::Finite {
                ring: r.clone(),
                elements: vec![r.zero()],
            },
            BaseRing::Integers => LeftIdeal::Integers { gen: 0 },
        }
    }

    pub fn ring(&self) -> BaseRing {
        match self {
            LeftIdeal::Finite { ring, .. } => BaseRing::Finite(ring.clone()),
            LeftIdeal::Integers { .. } => BaseRing::Integers,
        }
    }

    /// Element set over a finite ring.
    pub fn elements(&self) -> Option<&[usize]> {
        match self {
            LeftIdeal::Finite { elements, .. } => Some(elements),
            LeftIdeal::Integers { .. } => None,
        }
    }

    /// Generator over the integers.
    pub fn gen(&self) -> Option<u64> {
        match self {
            LeftIdeal::Integers { gen } => Some(*gen),
            LeftIdeal::Finite { .. } => None,
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        match self {
            LeftIdeal::Finite { elements, .. } => elements.binary_search(&x).is_ok(),
            LeftIdeal::Integers { gen } => match *gen {
                0 => x == 0,
                g => (x as u64).is_multiple_of(g),
            },
        }
    }

    pub(crate) fn position(&self, x: usize) -> Option<usize> {
        self.elements().and_then(|e| e.binary_search(&x).ok())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            LeftIdeal::Finite { ring, elements } => elements == &[ring.zero()],
            LeftIdeal::Integers { gen } => *gen == 0,
        }
    }

    pub fn is_whole(&self) -> bool {
        match self {
            LeftIdeal::Finite { ring, elements } => elements.len() == ring.order(),
            LeftIdeal::Integers { gen } => *gen == 1,
        }
    }

    /// `self ⊇ other`. Ideals over different rings are never comparable.
    pub fn contains_ideal(&self, other: &LeftIdeal) -> bool {
        match (self, other) {
            (LeftIdeal::Finite { ring: r, elements: a }, LeftIdeal::Finite { ring: s, elements: b }) => {
                (Arc::ptr_eq(r, s) || r == s) && is_sorted_subset(b, a)
            }
            (LeftIdeal::Integers { gen: n }, LeftIdeal::Integers { gen: m }) => match *n {
                0 => *m == 0,
                n => m % n == 0,
            },
            _ => false,
        }
    }

    pub fn intersect(&self, other: &LeftIdeal) -> Result<LeftIdeal> {
        match (self, other) {
            (LeftIdeal::Finite { ring: r, elements: a }, LeftIdeal::Finite { ring: s, elements: b }) => {
                if !(Arc::ptr_eq(r, s) || r == s) {
                    return Err(Error::RingMismatch);
                }
                let elements = a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect();
                Ok(LeftIdeal::Finite {
                    ring: r.clone(),
                    elements,
                })
            }
            (LeftIdeal::Integers { gen: n }, LeftIdeal::Integers { gen: m }) => {
                let gen = if *n == 0 || *m == 0 {
                    0
                } else {
                    crate::arith::lcm(*n, *m)
                };
                Ok(LeftIdeal::Integers { gen })
            }
            _ => Err(Error::RingMismatch),
        }
    }

    /// Number of elements; `None` for ideals of the integers.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> Option<usize> {
        self.elements().map(<[usize]>::len)
    }

    /// Short human-readable description.
    pub fn describe(&self) -> String {
        match self {
            LeftIdeal::Integers { gen } => format!("{gen}Z"),
            LeftIdeal::Finite { ring, elements } => {
                if elements.len() == ring.order() {
                    String::from(ring.label())
                } else {
                    let parts: Vec<String> = elements.iter().map(|e| format!("{e}")).collect();
                    format!("{{{}}}", parts.join(","))
                }
            }
        }
    }

    /// Greedy generating set (see [`crate::hom_set`]).
    pub fn generators(&self) -> Vec<usize> {
        match self {
            LeftIdeal::Finite { ring, elements } => linear::greedy_generators(ring.as_ref(), elements),
            LeftIdeal::Integers { gen } => {
                if *gen == 0 {
                    vec![]
                } else {
                    vec![*gen as usize]
                }
            }
        }
    }
}

pub(crate) fn is_sorted_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// All left ideals of a finite ring, each once, sorted by size and then
/// lexicographically by element list.
pub fn left_ideals(ring: &BaseRing) -> Result<Vec<LeftIdeal>> {
    let r = ring.require_finite()?;
    Ok(linear::submodule_lattice(r.as_ref())
        .into_iter()
        .map(|elements| LeftIdeal::Finite {
            ring: r.clone(),
            elements,
        })
        .collect())
}

/// `R·x`. Over a finite ring `x` is an element index; over the integers it
/// is any integer and the generator is `|x|`.
pub fn principal_ideal(ring: &BaseRing, x: i64) -> Result<LeftIdeal> {
    match ring {
        BaseRing::Integers => Ok(LeftIdeal::Integers { gen: x.unsigned_abs() }),
        BaseRing::Finite(r) => {
            let idx = usize::try_from(x)
                .ok()
                .filter(|&i| i < r.order())
                .ok_or_else(|| Error::Argument(format!("{x} is not an element of {}", r.label())))?;
            Ok(LeftIdeal::Finite {
                ring: r.clone(),
                elements: r.cyclic(idx),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_cyclic_ring, make_product_ring};

    fn elems(i: &LeftIdeal) -> Vec<usize> {
        i.elements().unwrap().to_vec()
    }

    #[test]
    fn ideals_of_z4() {
        let z4 = make_cyclic_ring(4).unwrap();
        let ideals = left_ideals(&z4).unwrap();
        let sets: Vec<Vec<usize>> = ideals.iter().map(elems).collect();
        assert_eq!(sets, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn ideals_of_z6() {
        let z6 = make_cyclic_ring(6).unwrap();
        let sets: Vec<Vec<usize>> = left_ideals(&z6).unwrap().iter().map(elems).collect();
        assert_eq!(sets, vec![vec![0], vec![0, 3], vec![0, 2, 4], vec![0, 1, 2, 3, 4, 5]]);
    }

    #[test]
    fn zero_ring_has_single_ideal() {
        let z1 = make_cyclic_ring(1).unwrap();
        let ideals = left_ideals(&z1).unwrap();
        assert_eq!(ideals.len(), 1);
        assert!(ideals[0].is_zero() && ideals[0].is_whole());
    }

    #[test]
    fn integers_have_no_ideal_list() {
        assert!(matches!(left_ideals(&BaseRing::Integers), Err(Error::NotFinite)));
    }

    #[test]
    fn principal_ideals() {
        let z4 = make_cyclic_ring(4).unwrap();
        assert_eq!(elems(&principal_ideal(&z4, 2).unwrap()), vec![0, 2]);
        let z6 = make_cyclic_ring(6).unwrap();
        assert_eq!(elems(&principal_ideal(&z6, 4).unwrap()), vec![0, 2, 4]);
        assert_eq!(
            principal_ideal(&BaseRing::Integers, -3).unwrap(),
            LeftIdeal::integers(3)
        );
        assert!(principal_ideal(&z4, 7).is_err());
    }

    #[test]
    fn lattice_is_closed_under_intersection() {
        let z2 = make_cyclic_ring(2).unwrap();
        let z4 = make_cyclic_ring(4).unwrap();
        for ring in [
            make_cyclic_ring(12).unwrap(),
            make_product_ring(&z2, &z4).unwrap(),
            make_product_ring(&z2, &z2).unwrap(),
        ] {
            let ideals = left_ideals(&ring).unwrap();
            for a in &ideals {
                for b in &ideals {
                    let c = a.intersect(b).unwrap();
                    assert!(ideals.contains(&c));
                }
            }
        }
    }

    #[test]
    fn integer_ideal_order() {
        let two = LeftIdeal::integers(2);
        let four = LeftIdeal::integers(4);
        assert!(two.contains_ideal(&four));
        assert!(!four.contains_ideal(&two));
        assert!(four.contains_ideal(&LeftIdeal::integers(0)));
        assert!(!LeftIdeal::integers(0).contains_ideal(&four));
        assert_eq!(two.intersect(&LeftIdeal::integers(3)).unwrap(), LeftIdeal::integers(6));
        assert_eq!(two.intersect(&LeftIdeal::integers(0)).unwrap(), LeftIdeal::integers(0));
    }
}
