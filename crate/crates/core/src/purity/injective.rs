use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::{extends_to_ring, Decision, FailingMap, Flag, OracleOutcome};
use crate::hom::{self, hom_set};
use crate::ideal::{left_ideals, LeftIdeal};
use crate::linear::{self, MapScratch};
use crate::module::{direct_sum, FinModule};
use crate::ring::BaseRing;
use crate::submodule::{submodules, Submodule};
use crate::{Caps, Result};

/// Baer test: every map from every left ideal into `a` extends to the ring.
///
/// Over the integers a map `nZ → A`, `n ↦ a` extends exactly when
/// `a ∈ nA`. For a nonzero finite group some prime `p` dividing the
/// exponent has `pA ≠ A`, so scanning `0` and the divisors of the exponent
/// finds a failure whenever one exists; only the zero group passes.
pub fn is_injective_baer(a: &Arc<FinModule>, caps: &Caps) -> Result<Flag> {
    let ideals = match a.ring() {
        BaseRing::Finite(_) => left_ideals(a.ring())?,
        BaseRing::Integers => super::integer_quantifier_gens(a.exponent())
            .into_iter()
            .map(LeftIdeal::integers)
            .collect(),
    };
    for l in &ideals {
        for f in hom_set(l, a, caps)? {
            if extends_to_ring(&f).is_none() {
                return Ok(Decision::Fails(FailingMap::new(f)));
            }
        }
    }
    Ok(Decision::Holds)
}

/// Absolute purity, decided by the Baer test.
///
/// A finite module is algebraically compact, so it is a direct summand of
/// any module it is pure in, its injective envelope included. Absolutely
/// pure therefore means injective here. [`bounded_fp_oracle`] checks the
/// defining property directly at small rank.
pub fn is_absolutely_pure(a: &Arc<FinModule>, caps: &Caps) -> Result<Flag> {
    is_injective_baer(a, caps)
}

/// A map from a finitely generated submodule of `R^k` into the module with
/// no extension to `R^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpWitness {
    pub rank: usize,
    /// The submodule `K ≤ R^k`; its parent is the free module.
    pub submodule: Submodule,
    pub generators: Vec<usize>,
    pub images: Vec<usize>,
}

/// Coordinates of an element of `R^k` built by [`direct_sum`] of regular
/// modules (lexicographic, first coordinate most significant).
fn coordinates(ring_order: usize, rank: usize, mut x: usize) -> Vec<usize> {
    let mut c = vec![0; rank];
    for slot in c.iter_mut().rev() {
        *slot = x % ring_order;
        x /= ring_order;
    }
    c
}

/// Whether some `t ∈ A^k` has `Σ_i g_i·t_i = image` for every generator.
fn extends_to_free(a: &FinModule, coords: &[Vec<usize>], images: &[usize], rank: usize) -> bool {
    let candidates = vec![(0..a.order()).collect::<Vec<_>>(); rank];
    let found = linear::for_each_assignment(&candidates, |t| {
        let ok = coords.iter().zip(images).all(|(g, &img)| {
            let v = g
                .iter()
                .zip(t)
                .fold(a.zero(), |acc, (&r, &ti)| a.add(acc, a.act(r, ti)));
            v == img
        });
        if ok {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    rank == 0 || found.is_some()
}

/// Searches submodules `K ≤ R^k` (`1 ≤ k ≤ max_rank`, greedy generating
/// set of at most `max_gens` elements) and maps `K → a` for one that does
/// not extend to `R^k`. A witness refutes absolute purity; finding none is
/// inconclusive.
///
/// Ranks, submodules (lattice order) and generator images (lexicographic)
/// are scanned in order and the first witness is returned.
pub fn bounded_fp_oracle(
    a: &Arc<FinModule>,
    max_rank: usize,
    max_gens: usize,
    caps: &Caps,
) -> Result<OracleOutcome<FpWitness>> {
    let ring = a.ring().require_finite()?.clone();
    let base = BaseRing::Finite(ring.clone());
    let regular = Arc::new(FinModule::regular(&base)?);
    let mut checked = 0;
    for rank in 1..=max_rank {
        let free = direct_sum(&base, &vec![regular.clone(); rank], caps)?.module;
        for k in submodules(&free, caps)? {
            let gens = linear::greedy_generators(free.as_ref(), k.elements());
            if gens.len() > max_gens {
                continue;
            }
            let coords: Vec<Vec<usize>> = gens.iter().map(|&g| coordinates(ring.order(), rank, g)).collect();
            let mut failure = None;
            hom::maps_from_generators(&free, &gens, a, |images, _| {
                checked += 1;
                if extends_to_free(a, &coords, images, rank) {
                    ControlFlow::Continue(())
                } else {
                    failure = Some(images.to_vec());
                    ControlFlow::Break(())
                }
            });
            if let Some(images) = failure {
                return Ok(OracleOutcome::Witness(FpWitness {
                    rank,
                    submodule: k,
                    generators: gens,
                    images,
                }));
            }
        }
    }
    Ok(OracleOutcome::NotFound {
        checked,
        reduced: false,
    })
}

/// Independent check of an [`FpWitness`]: the generator images define a
/// linear map on the submodule and no map from the free module restricts
/// to it.
pub fn recheck_fp_witness(a: &Arc<FinModule>, w: &FpWitness) -> bool {
    let Some(ring) = a.ring().table() else {
        return false;
    };
    let free = w.submodule.parent();
    if free.ring() != a.ring() || free.order() != ring.order().pow(w.rank as u32) {
        return false;
    }
    if w.generators.len() != w.images.len() || !w.generators.iter().all(|&g| w.submodule.contains(g)) {
        return false;
    }
    if linear::span(free.as_ref(), &w.generators) != w.submodule.elements() {
        return false;
    }
    let mut scratch = MapScratch::new(free.order());
    if !linear::extend_map(free.as_ref(), &w.generators, a.as_ref(), &w.images, &mut scratch) {
        return false;
    }
    let coords: Vec<Vec<usize>> = w
        .generators
        .iter()
        .map(|&g| coordinates(ring.order(), w.rank, g))
        .collect();
    !extends_to_free(a, &coords, &w.images, w.rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_cyclic_ring, make_product_ring};
    use crate::Error;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn zero_module_is_injective() {
        let zero = Arc::new(FinModule::zero_module(&BaseRing::Integers));
        assert!(is_injective_baer(&zero, &caps()).unwrap().holds());
        let z4 = make_cyclic_ring(4).unwrap();
        let zero = Arc::new(FinModule::zero_module(&z4));
        assert!(is_absolutely_pure(&zero, &caps()).unwrap().holds());
    }

    #[test]
    fn z2_over_integers_is_not_injective() {
        let z2 = Arc::new(FinModule::cyclic_group(2).unwrap());
        let flag = is_injective_baer(&z2, &caps()).unwrap();
        let w = flag.witness().unwrap();
        assert_eq!(w.describe(), "2Z → Z_2, 2 ↦ 1");
        assert!(w.recheck());
    }

    #[test]
    fn z4_is_self_injective() {
        let z4 = make_cyclic_ring(4).unwrap();
        let m = Arc::new(FinModule::regular(&z4).unwrap());
        assert!(is_injective_baer(&m, &caps()).unwrap().holds());
        let out = bounded_fp_oracle(&m, 2, 2, &caps()).unwrap();
        assert!(matches!(out, OracleOutcome::NotFound { .. }));
    }

    #[test]
    fn z6_modules_are_absolutely_pure() {
        let z6 = make_cyclic_ring(6).unwrap();
        for n in [1, 2, 3, 6] {
            let m = Arc::new(FinModule::cyclic(&z6, n).unwrap());
            assert!(is_absolutely_pure(&m, &caps()).unwrap().holds(), "Z_6/{n}");
        }
    }

    #[test]
    fn z2_over_z4_fp_witness() {
        let z4 = make_cyclic_ring(4).unwrap();
        let m = Arc::new(FinModule::cyclic(&z4, 2).unwrap());
        let out = bounded_fp_oracle(&m, 1, 1, &caps()).unwrap();
        let w = out.witness().unwrap();
        assert_eq!(w.rank, 1);
        assert_eq!(w.submodule.elements(), &[0, 2]);
        assert_eq!(w.generators, vec![2]);
        assert_eq!(m.element_name(w.images[0]), "[1]");
        assert!(recheck_fp_witness(&m, w));
    }

    #[test]
    fn oracle_needs_a_finite_ring() {
        let z2 = Arc::new(FinModule::cyclic_group(2).unwrap());
        assert!(matches!(bounded_fp_oracle(&z2, 1, 1, &caps()), Err(Error::NotFinite)));
    }

    #[test]
    fn product_of_fields_is_injective() {
        let f = make_product_ring(&make_cyclic_ring(2).unwrap(), &make_cyclic_ring(2).unwrap()).unwrap();
        let m = Arc::new(FinModule::regular(&f).unwrap());
        assert!(is_injective_baer(&m, &caps()).unwrap().holds());
    }
}
