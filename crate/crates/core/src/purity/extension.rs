use crate::hom::IdealHom;
use crate::ideal::LeftIdeal;

/// An element `m` with `l·m = f(l)` for every `l` of the ideal, i.e. the
/// extension `r ↦ r·m` of `f` to the whole ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtensionWitness {
    pub element: usize,
}

impl ExtensionWitness {
    /// Full scan of the defining equation.
    pub fn verify(&self, f: &IdealHom) -> bool {
        let m = f.codomain();
        if self.element >= m.order() {
            return false;
        }
        match f.domain() {
            LeftIdeal::Integers { gen } => m.act_int(*gen as i64, self.element) == f.values()[0],
            LeftIdeal::Finite { elements, .. } => elements
                .iter()
                .zip(f.values())
                .all(|(&l, &v)| m.act(l, self.element) == v),
        }
    }
}

/// The smallest-index element extending `f` to the ring, if any.
pub fn extends_to_ring(f: &IdealHom) -> Option<ExtensionWitness> {
    let m = f.codomain();
    (0..m.order())
        .map(|element| ExtensionWitness { element })
        .find(|w| w.verify(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::principal_ideal;
    use crate::module::{direct_sum, FinModule};
    use crate::ring::make_cyclic_ring;
    use crate::submodule::Submodule;
    use crate::{hom_set, Caps};
    use alloc::sync::Arc;
    use alloc::vec;

    #[test]
    fn zero_map_extends_by_zero() {
        let z4 = make_cyclic_ring(4).unwrap();
        let m = Arc::new(FinModule::regular(&z4).unwrap());
        for l in crate::left_ideals(&z4).unwrap() {
            let zero = &hom_set(&l, &m, &Caps::default()).unwrap()[0];
            assert!(zero.is_zero());
            assert_eq!(extends_to_ring(zero), Some(ExtensionWitness { element: 0 }));
        }
    }

    #[test]
    fn two_z_into_z2_does_not_extend() {
        let z2 = Arc::new(FinModule::cyclic_group(2).unwrap());
        let f = IdealHom::integer(2, z2, 1).unwrap();
        assert_eq!(extends_to_ring(&f), None);
    }

    #[test]
    fn regular_witness_obstruction() {
        let z4 = make_cyclic_ring(4).unwrap();
        let reg = Arc::new(FinModule::regular(&z4).unwrap());
        let l = principal_ideal(&z4, 2).unwrap();
        let two = Submodule::generated(&reg, &[2]).unwrap();
        let ds = direct_sum(&z4, &[two.module().clone(), reg], &Caps::default()).unwrap();
        let target = ds.module.element_by_name("(2,0)").unwrap();
        let f = IdealHom::new(l, ds.module.clone(), vec![ds.module.zero(), target]).unwrap();
        assert_eq!(extends_to_ring(&f), None);
    }

    #[test]
    fn integer_extension_finds_smallest() {
        let z4 = Arc::new(FinModule::cyclic_group(4).unwrap());
        let f = IdealHom::integer(2, z4, 2).unwrap();
        assert_eq!(extends_to_ring(&f), Some(ExtensionWitness { element: 1 }));
    }
}
