use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::{extends_to_ring, Decision, FailingMap, Flag, PurityVerdict, PurityWitness};
use crate::filter::{filter_closure, filter_contains, AnnFilter};
use crate::hom::{self, hom_set, kernel, IdealHom};
use crate::ideal::{left_ideals, LeftIdeal};
use crate::linear;
use crate::module::FinModule;
use crate::ring::BaseRing;
use crate::submodule::{submodules, Submodule};
use crate::{Caps, Error, Result};

/// Ideal generators over the integers that can carry a map with kernel in
/// the filter of a module of the given exponent: `0` and the divisors of the
/// exponent.
///
/// A map `nZ → A` with `n ↦ a` has kernel `n·ord(a)·Z`, which lies in the
/// filter only if `n·ord(a)` divides the exponent; in particular `n` does.
pub fn integer_quantifier_gens(exponent: u64) -> Vec<u64> {
    let mut gens = alloc::vec![0];
    gens.extend(crate::arith::divisors(exponent));
    gens
}

fn quantifier_ideals(ring: &BaseRing, filter: &AnnFilter) -> Result<Vec<LeftIdeal>> {
    match (ring, filter) {
        (BaseRing::Finite(_), _) => left_ideals(ring),
        (BaseRing::Integers, AnnFilter::Integers { exponent }) => Ok(integer_quantifier_gens(*exponent)
            .into_iter()
            .map(LeftIdeal::integers)
            .collect()),
        (BaseRing::Integers, AnnFilter::Finite { .. }) => Err(Error::RingMismatch),
    }
}

/// First map `L → target` (ideals in order, maps in [`hom_set`] order) with
/// kernel in `filter` for which `fails` holds.
fn first_failure(
    target: &Arc<FinModule>,
    filter: &AnnFilter,
    ideals: &[LeftIdeal],
    caps: &Caps,
    mut fails: impl FnMut(&IdealHom) -> Result<bool>,
) -> Result<Option<FailingMap>> {
    for l in ideals {
        for f in hom_set(l, target, caps)? {
            if filter_contains(filter, &kernel(&f)) && fails(&f)? {
                return Ok(Some(FailingMap::new(f)));
            }
        }
    }
    Ok(None)
}

fn relative_purity(a: &Submodule, filter: &AnnFilter, caps: &Caps) -> Result<PurityVerdict> {
    let ideals = quantifier_ideals(a.module().ring(), filter)?;
    let inclusion = a.inclusion();
    let failure = first_failure(a.module(), filter, &ideals, caps, |f| {
        if extends_to_ring(f).is_some() {
            return Ok(false);
        }
        Ok(extends_to_ring(&f.compose(&inclusion)?).is_some())
    })?;
    Ok(match failure {
        None => PurityVerdict::holds_with(PurityWitness::None),
        Some(w) => PurityVerdict::fails_with(PurityWitness::FailingMap(w)),
    })
}

/// Self purity of `a` in its parent: every map from a (finitely generated)
/// left ideal into `a` with kernel in the annihilator filter of `a` that
/// extends to the ring inside the parent already extends inside `a`.
///
/// A failing verdict carries the first offending map, taken into `a`.
pub fn is_self_pure(a: &Submodule, caps: &Caps) -> Result<PurityVerdict> {
    relative_purity(a, &filter_closure(a.module()), caps)
}

/// Like [`is_self_pure`] with the kernel condition taken from the filter of
/// `m` instead of `a`.
pub fn is_m_pure(a: &Submodule, m: &FinModule, caps: &Caps) -> Result<PurityVerdict> {
    if m.ring() != a.parent().ring() {
        return Err(Error::RingMismatch);
    }
    relative_purity(a, &filter_closure(m), caps)
}

fn extension_criterion(a: &Arc<FinModule>, ideals: &[LeftIdeal], caps: &Caps) -> Result<Flag> {
    let filter = filter_closure(a);
    let failure = first_failure(a, &filter, ideals, caps, |f| Ok(extends_to_ring(f).is_none()))?;
    Ok(Decision::from_failure(failure))
}

/// Absolute self purity: every map from a finitely generated left ideal into
/// `a` with kernel in the annihilator filter of `a` extends to the ring.
pub fn is_absolutely_self_pure(a: &Arc<FinModule>, caps: &Caps) -> Result<Flag> {
    let ideals = quantifier_ideals(a.ring(), &filter_closure(a))?;
    extension_criterion(a, &ideals, caps)
}

/// Quasi-injectivity through the ideal criterion: every map from any left
/// ideal into `a` with kernel in the annihilator filter extends to the ring.
///
/// Every ideal of a finite ring is finitely generated and every ideal of
/// the integers is principal, so this quantifies over the same ideals as
/// [`is_absolutely_self_pure`].
pub fn is_quasi_injective(a: &Arc<FinModule>, caps: &Caps) -> Result<Flag> {
    let ideals = match a.ring() {
        BaseRing::Finite(_) => left_ideals(a.ring())?,
        // nZ with n ∤ exp(a) admits no map whose kernel is in the filter
        BaseRing::Integers => integer_quantifier_gens(a.exponent())
            .into_iter()
            .map(LeftIdeal::integers)
            .collect(),
    };
    extension_criterion(a, &ideals, caps)
}

/// A map from a submodule that no endomorphism extends, given by its
/// generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmoduleMapFailure {
    pub submodule: Submodule,
    pub generators: Vec<usize>,
    pub images: Vec<usize>,
}

/// Quasi-injectivity from the definition: every homomorphism from a
/// submodule of `a` into `a` is the restriction of an endomorphism.
pub fn is_quasi_injective_by_endomorphisms(a: &Arc<FinModule>, caps: &Caps) -> Result<Decision<SubmoduleMapFailure>> {
    let all: Vec<usize> = (0..a.order()).collect();
    let module_gens = linear::greedy_generators(a.as_ref(), &all);
    Caps::check("module generator count", module_gens.len(), caps.generators)?;
    let endos = hom::endomorphisms(a);
    for sub in submodules(a, caps)? {
        let gens = linear::greedy_generators(a.as_ref(), sub.elements());
        let restrictions: BTreeSet<Vec<usize>> = endos.iter().map(|e| gens.iter().map(|&g| e[g]).collect()).collect();
        let mut failure = None;
        hom::maps_from_generators(a, &gens, a, |images, _| {
            if restrictions.contains(images) {
                ControlFlow::Continue(())
            } else {
                failure = Some(images.to_vec());
                ControlFlow::Break(())
            }
        });
        if let Some(images) = failure {
            return Ok(Decision::Fails(SubmoduleMapFailure {
                submodule: sub,
                generators: gens,
                images,
            }));
        }
    }
    Ok(Decision::Holds)
}

#[cfg(test)]
pub(crate) fn absolutely_self_pure_over_gens(a: &Arc<FinModule>, gens: &[u64], caps: &Caps) -> Result<Flag> {
    let ideals: Vec<LeftIdeal> = gens.iter().map(|&g| LeftIdeal::integers(g)).collect();
    extension_criterion(a, &ideals, caps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::direct_sum;
    use crate::ring::make_cyclic_ring;

    fn z(n: usize) -> Arc<FinModule> {
        Arc::new(FinModule::cyclic_group(n).unwrap())
    }

    fn caps() -> Caps {
        Caps::default()
    }

    fn regular_witness() -> Arc<FinModule> {
        let z4 = make_cyclic_ring(4).unwrap();
        let reg = Arc::new(FinModule::regular(&z4).unwrap());
        let two = Submodule::generated(&reg, &[2]).unwrap();
        direct_sum(&z4, &[two.module().clone(), reg], &caps()).unwrap().module
    }

    #[test]
    fn reflexive_self_purity() {
        let b = z(4);
        let whole = Submodule::whole(&b);
        assert!(is_self_pure(&whole, &caps()).unwrap().holds);
    }

    #[test]
    fn zero_submodule_is_self_pure() {
        let b = z(6);
        assert!(is_self_pure(&Submodule::zero(&b), &caps()).unwrap().holds);
    }

    #[test]
    fn two_z4_is_self_pure_in_z4() {
        let b = z(4);
        let a = Submodule::generated(&b, &[2]).unwrap();
        assert!(is_self_pure(&a, &caps()).unwrap().holds);
    }

    #[test]
    fn two_z4_is_not_z4_pure() {
        let b = z(4);
        let a = Submodule::generated(&b, &[2]).unwrap();
        let v = is_m_pure(&a, &b, &caps()).unwrap();
        assert!(!v.holds);
        let PurityWitness::FailingMap(w) = v.witness else {
            panic!()
        };
        assert_eq!(w.ideal, LeftIdeal::integers(2));
        // 2 ↦ 2, i.e. the local element named "2"
        assert_eq!(a.module().element_name(w.map.values()[0]), "2");
        assert_eq!(kernel(&w.map), LeftIdeal::integers(4));
        assert!(w.recheck());
    }

    #[test]
    fn zero_filter_module_makes_everything_pure() {
        let b = z(4);
        let a = Submodule::generated(&b, &[2]).unwrap();
        let zero = FinModule::zero_module(&BaseRing::Integers);
        assert!(is_m_pure(&a, &zero, &caps()).unwrap().holds);
    }

    #[test]
    fn z2_and_z4_are_quasi_injective() {
        for n in [2, 4] {
            assert!(is_absolutely_self_pure(&z(n), &caps()).unwrap().holds());
            assert!(is_quasi_injective(&z(n), &caps()).unwrap().holds());
            assert!(is_quasi_injective_by_endomorphisms(&z(n), &caps()).unwrap().holds());
        }
    }

    #[test]
    fn zero_module_is_absolutely_self_pure() {
        let zero = Arc::new(FinModule::zero_module(&BaseRing::Integers));
        assert!(is_absolutely_self_pure(&zero, &caps()).unwrap().holds());
    }

    #[test]
    fn regular_witness_fails() {
        let m = regular_witness();
        let flag = is_absolutely_self_pure(&m, &caps()).unwrap();
        let w = flag.witness().unwrap();
        assert_eq!(w.ideal.elements().unwrap(), &[0, 2]);
        assert_eq!(m.element_name(w.map.image(2).unwrap()), "(2,0)");
        assert!(kernel(&w.map).is_zero());
        assert!(w.recheck());
        assert!(!is_quasi_injective(&m, &caps()).unwrap().holds());
        assert!(!is_quasi_injective_by_endomorphisms(&m, &caps()).unwrap().holds());
    }

    #[test]
    fn klein_plus_z4_not_quasi_injective() {
        let s = direct_sum(&BaseRing::Integers, &[z(2), z(4)], &caps()).unwrap().module;
        assert!(!is_absolutely_self_pure(&s, &caps()).unwrap().holds());
        assert!(!is_quasi_injective_by_endomorphisms(&s, &caps()).unwrap().holds());
        let k = direct_sum(&BaseRing::Integers, &[z(2), z(2)], &caps()).unwrap().module;
        assert!(is_absolutely_self_pure(&k, &caps()).unwrap().holds());
    }

    #[test]
    fn divisor_bound_matches_wide_sweep() {
        let mut modules: Vec<Arc<FinModule>> = (1..=12).map(z).collect();
        for (a, b) in [(2, 2), (2, 4), (2, 6), (3, 3), (2, 8), (4, 4)] {
            modules.push(direct_sum(&BaseRing::Integers, &[z(a), z(b)], &caps()).unwrap().module);
        }
        for m in modules {
            let e = m.exponent();
            let sweep: Vec<u64> = (0..=4 * e).collect();
            let wide = absolutely_self_pure_over_gens(&m, &sweep, &caps()).unwrap();
            let narrow = is_absolutely_self_pure(&m, &caps()).unwrap();
            assert_eq!(wide.holds(), narrow.holds(), "{}", m.label());
        }
    }

    #[test]
    fn self_purity_witness_is_not_extendable_in_submodule() {
        let s = direct_sum(&BaseRing::Integers, &[z(2), z(4)], &caps()).unwrap().module;
        for a in submodules(&s, &caps()).unwrap() {
            let v = is_self_pure(&a, &caps()).unwrap();
            if let PurityWitness::FailingMap(w) = &v.witness {
                assert!(!v.holds);
                assert!(w.recheck());
                let pushed = w.map.compose(&a.inclusion()).unwrap();
                assert!(extends_to_ring(&pushed).is_some());
            }
        }
    }
}
