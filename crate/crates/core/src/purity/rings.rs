use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::Decision;
use crate::ideal::{left_ideals, principal_ideal, LeftIdeal};
use crate::module::FinModule;
use crate::ring::BaseRing;
use crate::submodule::Submodule;
use crate::{Caps, Error, Result};

fn is_summand(regular: &Arc<FinModule>, ideal: &LeftIdeal, caps: &Caps) -> Result<bool> {
    let elements = ideal.elements().ok_or(Error::NotFinite)?.to_vec();
    let sub = Submodule::new(regular, elements)?;
    Ok(sub.complement(caps)?.is_some())
}

/// Regularity: every principal left ideal `Rx` is a direct summand of the
/// regular module. Fails with the ideal of the smallest such `x` that is not.
pub fn is_regular_ring(ring: &BaseRing, caps: &Caps) -> Result<Decision<LeftIdeal>> {
    let r = ring.require_finite()?;
    let regular = Arc::new(FinModule::regular(ring)?);
    let mut seen: Vec<LeftIdeal> = Vec::new();
    for x in 0..r.order() {
        let ideal = principal_ideal(ring, x as i64)?;
        if seen.contains(&ideal) {
            continue;
        }
        if !is_summand(&regular, &ideal, caps)? {
            return Ok(Decision::Fails(ideal));
        }
        seen.push(ideal);
    }
    Ok(Decision::Holds)
}

/// Semisimplicity: every left ideal is a direct summand.
///
/// A finite ring is noetherian, so this must agree with
/// [`is_regular_ring`]; a disagreement is reported as an invariant error.
pub fn is_semisimple_ring(ring: &BaseRing, caps: &Caps) -> Result<bool> {
    let regular = Arc::new(FinModule::regular(ring)?);
    let mut semisimple = true;
    for ideal in left_ideals(ring)? {
        if !is_summand(&regular, &ideal, caps)? {
            semisimple = false;
            break;
        }
    }
    let regular_ring = is_regular_ring(ring, caps)?.holds();
    if semisimple != regular_ring {
        return Err(Error::Invariant(format!(
            "{}: semisimple = {semisimple} but regular = {regular_ring}",
            ring.label()
        )));
    }
    Ok(semisimple)
}

/// Commutative ring in which every ideal is principal. The integers
/// qualify, as do `Z_n` and finite products of such rings.
pub fn is_commutative_pir(ring: &BaseRing) -> bool {
    let BaseRing::Finite(r) = ring else {
        return true;
    };
    if !r.is_commutative() {
        return false;
    }
    let Ok(ideals) = left_ideals(ring) else {
        return false;
    };
    let principal: Vec<LeftIdeal> = (0..r.order())
        .filter_map(|x| principal_ideal(ring, x as i64).ok())
        .collect();
    ideals.iter().all(|i| principal.contains(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_cyclic_ring, make_product_ring, RingTable};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn cyclic_rings() {
        let z6 = make_cyclic_ring(6).unwrap();
        assert!(is_regular_ring(&z6, &caps()).unwrap().holds());
        assert!(is_semisimple_ring(&z6, &caps()).unwrap());

        let z4 = make_cyclic_ring(4).unwrap();
        let flag = is_regular_ring(&z4, &caps()).unwrap();
        assert_eq!(flag.witness().unwrap().elements(), Some(&[0usize, 2][..]));
        assert!(!is_semisimple_ring(&z4, &caps()).unwrap());
    }

    #[test]
    fn zero_ring_is_regular() {
        let z1 = make_cyclic_ring(1).unwrap();
        assert!(is_regular_ring(&z1, &caps()).unwrap().holds());
        assert!(is_semisimple_ring(&z1, &caps()).unwrap());
    }

    #[test]
    fn product_of_fields_is_semisimple() {
        let z2 = make_cyclic_ring(2).unwrap();
        let r = make_product_ring(&z2, &z2).unwrap();
        assert!(is_semisimple_ring(&r, &caps()).unwrap());
        assert!(is_commutative_pir(&r));
    }

    #[test]
    fn integers_are_not_finite() {
        assert!(matches!(
            is_regular_ring(&BaseRing::Integers, &caps()),
            Err(Error::NotFinite)
        ));
        assert!(is_commutative_pir(&BaseRing::Integers));
    }

    #[test]
    fn non_principal_ring() {
        // F_2[x, y]/(x, y)^2: the maximal ideal {0, x, y, x+y} needs two generators
        // basis 1, x, y encoded as bits 0, 1, 2 (x² = y² = xy = 0)
        let add8: Vec<Vec<usize>> = (0..8).map(|a| (0..8).map(|b| a ^ b).collect()).collect();
        let mul8: Vec<Vec<usize>> = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (a0, b0) = (a & 1, b & 1);
                        let mut out = a0 & b0;
                        if a0 == 1 {
                            out ^= b & 6;
                        }
                        if b0 == 1 {
                            out ^= a & 6;
                        }
                        out
                    })
                    .collect()
            })
            .collect();
        let r = RingTable::new(add8, mul8, 0, 1, "F_2[x,y]/(x,y)^2").unwrap();
        let ring = BaseRing::finite(r);
        assert!(!is_commutative_pir(&ring));
        assert!(is_commutative_pir(&make_cyclic_ring(8).unwrap()));
    }
}
