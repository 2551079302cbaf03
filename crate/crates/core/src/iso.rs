use alloc::sync::Arc;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::hom::ModHom;
use crate::linear::{self, Additive, MapScratch};
use crate::module::FinModule;
use crate::ring::RingTable;

/// Element profile preserved by every module isomorphism.
fn module_profile(m: &FinModule, x: usize) -> (usize, Vec<usize>) {
    let ann = match m.annihilator(x).elements() {
        Some(e) => e.to_vec(),
        None => Vec::new(),
    };
    (m.additive_order(x), ann)
}

fn profile_multiset<P: Ord + Clone>(profiles: &[P]) -> Vec<P> {
    let mut v = profiles.to_vec();
    v.sort();
    v
}

/// A witness isomorphism `M → N`, if one exists.
///
/// Backtracks over images of the greedy generators of `M`, restricted to
/// elements of `N` with the same additive order and annihilator.
pub fn is_module_iso(m: &Arc<FinModule>, n: &Arc<FinModule>) -> Option<ModHom> {
    if m.ring() != n.ring() || m.order() != n.order() {
        return None;
    }
    let pm: Vec<_> = (0..m.order()).map(|x| module_profile(m, x)).collect();
    let pn: Vec<_> = (0..n.order()).map(|x| module_profile(n, x)).collect();
    if profile_multiset(&pm) != profile_multiset(&pn) {
        return None;
    }
    let all: Vec<usize> = (0..m.order()).collect();
    let gens = linear::greedy_generators(m.as_ref(), &all);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..n.order()).filter(|&y| pn[y] == pm[g]).collect())
        .collect();
    let mut scratch = MapScratch::new(m.order());
    linear::for_each_assignment(&candidates, |images| {
        if linear::extend_map(m.as_ref(), &gens, n.as_ref(), images, &mut scratch) {
            let h = ModHom::from_table_unchecked(m.clone(), n.clone(), scratch.table.clone());
            if h.is_bijective() {
                return ControlFlow::Break(h);
            }
        }
        ControlFlow::Continue(())
    })
}

fn ring_profile(r: &RingTable, x: usize) -> (usize, bool, bool, bool, usize) {
    let sq = r.mul(x, x);
    let mut idx = 1;
    let mut pow = x;
    while pow != r.zero() && idx <= r.order() {
        pow = r.mul(pow, x);
        idx += 1;
    }
    (linear::additive_order(r, x), sq == x, sq == r.zero(), x == r.one(), idx)
}

/// A witness ring isomorphism (as an element bijection), if one exists.
pub fn is_ring_iso(a: &RingTable, b: &RingTable) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let pa: Vec<_> = (0..a.order()).map(|x| ring_profile(a, x)).collect();
    let pb: Vec<_> = (0..b.order()).map(|x| ring_profile(b, x)).collect();
    if profile_multiset(&pa) != profile_multiset(&pb) {
        return None;
    }
    let all: Vec<usize> = (0..a.order()).collect();
    let add_a = Additive(a);
    let add_b = Additive(b);
    let gens = linear::greedy_generators(&add_a, &all);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..b.order()).filter(|&y| pb[y] == pa[g]).collect())
        .collect();
    let mut scratch = MapScratch::new(a.order());
    linear::for_each_assignment(&candidates, |images| {
        if !linear::extend_map(&add_a, &gens, &add_b, images, &mut scratch) {
            return ControlFlow::Continue(());
        }
        let f = &scratch.table;
        let mut seen = alloc::vec![false; b.order()];
        if f.iter().any(|&y| core::mem::replace(&mut seen[y], true)) {
            return ControlFlow::Continue(());
        }
        if f[a.one()] != b.one() {
            return ControlFlow::Continue(());
        }
        let multiplicative = (0..a.order()).all(|x| (0..a.order()).all(|y| f[a.mul(x, y)] == b.mul(f[x], f[y])));
        if multiplicative {
            ControlFlow::Break(f.clone())
        } else {
            ControlFlow::Continue(())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::direct_sum;
    use crate::ring::{make_cyclic_ring, make_product_ring, BaseRing};
    use crate::submodule::Submodule;
    use crate::Caps;

    fn z(n: usize) -> Arc<FinModule> {
        Arc::new(FinModule::cyclic_group(n).unwrap())
    }

    #[test]
    fn reflexive() {
        let m = z(6);
        let h = is_module_iso(&m, &m).unwrap();
        assert!(h.is_identity());
    }

    #[test]
    fn z4_is_not_klein() {
        let k = direct_sum(&BaseRing::Integers, &[z(2), z(2)], &Caps::default()).unwrap();
        assert!(is_module_iso(&z(4), &k.module).is_none());
    }

    #[test]
    fn two_z4_is_z2() {
        let z4 = z(4);
        let two = Submodule::generated(&z4, &[2]).unwrap();
        let h = is_module_iso(two.module(), &z(2)).unwrap();
        // the local element 1 is the parent element 2
        assert_eq!(two.module().element_name(1), "2");
        assert_eq!(h.apply(1), 1);
    }

    #[test]
    fn z6_is_z2_times_z3() {
        let z6 = make_cyclic_ring(6).unwrap();
        let p = make_product_ring(&make_cyclic_ring(2).unwrap(), &make_cyclic_ring(3).unwrap()).unwrap();
        let f = is_ring_iso(z6.table().unwrap(), p.table().unwrap()).unwrap();
        assert_eq!(f[1], p.table().unwrap().one());
        let z4 = make_cyclic_ring(4).unwrap();
        let klein = make_product_ring(&make_cyclic_ring(2).unwrap(), &make_cyclic_ring(2).unwrap()).unwrap();
        assert!(is_ring_iso(z4.table().unwrap(), klein.table().unwrap()).is_none());
    }

    #[test]
    fn symmetric_on_small_groups() {
        let k = direct_sum(&BaseRing::Integers, &[z(2), z(3)], &Caps::default()).unwrap();
        let mods = [z(6), k.module.clone(), z(4), z(2)];
        for a in &mods {
            for b in &mods {
                assert_eq!(is_module_iso(a, b).is_some(), is_module_iso(b, a).is_some());
            }
        }
        assert!(is_module_iso(&z(6), &k.module).is_some());
    }
}
