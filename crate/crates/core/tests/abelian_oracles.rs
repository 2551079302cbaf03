//! Finite abelian groups checked against closed-form descriptions that do
//! not go through ideal maps at all.

use std::sync::Arc;

use proptest::prelude::*;
use selfpure_core::filter::{filter_closure, filter_contains};
use selfpure_core::purity::{
    classify, is_absolutely_self_pure, is_pure, is_quasi_injective, is_self_pure, PurityWitness,
};
use selfpure_core::{direct_sum, BaseRing, Caps, FinModule, LeftIdeal, Submodule};

fn group(orders: &[usize]) -> Arc<FinModule> {
    let parts: Vec<Arc<FinModule>> = orders
        .iter()
        .map(|&n| Arc::new(FinModule::cyclic_group(n).unwrap()))
        .collect();
    direct_sum(&BaseRing::Integers, &parts, &Caps::default())
        .unwrap()
        .module
}

fn valuation(mut n: usize, p: usize) -> u32 {
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// A finite abelian group is quasi-injective iff each primary component is
/// a direct sum of copies of one cyclic group.
fn homogeneous_components(orders: &[usize]) -> bool {
    (2..=64).filter(|p| (2..*p).all(|d| p % d != 0)).all(|p| {
        let mut exps = orders.iter().map(|&n| valuation(n, p)).filter(|&v| v > 0);
        match exps.next() {
            None => true,
            Some(first) => exps.all(|v| v == first),
        }
    })
}

fn multiples(g: &FinModule, n: usize, of: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = of.iter().map(|&x| g.act_int(n as i64, x)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `H ≤ G` is pure iff `nH = H ∩ nG` for every `n`; dividing the exponent
/// of `G` suffices.
fn pure_by_multiples(h: &Submodule) -> bool {
    let g = h.parent();
    let all: Vec<usize> = (0..g.order()).collect();
    let e = g.exponent() as usize;
    (1..=e).filter(|n| e.is_multiple_of(*n)).all(|n| {
        let nh = multiples(g, n, h.elements());
        let ng = multiples(g, n, &all);
        let meet: Vec<usize> = ng.into_iter().filter(|x| h.contains(*x)).collect();
        nh == meet
    })
}

fn shapes() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 1..=16usize {
        out.push(vec![a]);
        for b in 2..=8usize {
            if a * b <= 24 && a >= 2 {
                out.push(vec![a, b]);
            }
        }
    }
    out.push(vec![2, 2, 2]);
    out.push(vec![2, 2, 4]);
    out.push(vec![3, 3, 2]);
    out
}

#[test]
fn quasi_injective_iff_homogeneous_primary_parts() {
    let caps = Caps::default();
    for orders in shapes() {
        let g = group(&orders);
        let qi = is_quasi_injective(&g, &caps).unwrap().holds();
        assert_eq!(qi, homogeneous_components(&orders), "{orders:?}");
        // noetherian ring: the two notions coincide
        assert_eq!(is_absolutely_self_pure(&g, &caps).unwrap().holds(), qi, "{orders:?}");
    }
}

#[test]
fn only_the_zero_group_is_injective() {
    let caps = Caps::default();
    for orders in shapes() {
        let g = group(&orders);
        let rec = classify(&g, &caps).unwrap();
        let zero = g.order() == 1;
        assert_eq!(rec.injective.holds(), zero, "{orders:?}");
        assert_eq!(rec.absolutely_pure.holds(), zero, "{orders:?}");
        if let Some(w) = rec.injective.witness() {
            assert!(w.recheck());
        }
    }
}

#[test]
fn integer_filter_is_divisors_of_exponent() {
    for orders in shapes() {
        let g = group(&orders);
        let lcm = orders.iter().fold(1u64, |l, &n| num_lcm(l, n as u64));
        let f = filter_closure(&g);
        assert_eq!(f.exponent(), Some(lcm));
        for n in 0..=2 * lcm {
            let member = n >= 1 && lcm % n == 0;
            assert_eq!(filter_contains(&f, &LeftIdeal::integers(n)), member, "{orders:?} {n}Z");
        }
    }
}

fn num_lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

fn shape_and_gens() -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    prop::sample::select(shapes()).prop_flat_map(|orders| {
        let order: usize = orders.iter().product();
        (Just(orders), prop::collection::vec(0..order, 0..3))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn purity_matches_multiples((orders, gens) in shape_and_gens()) {
        let caps = Caps::default();
        let g = group(&orders);
        let h = Submodule::generated(&g, &gens).unwrap();
        let verdict = is_pure(&h, &caps).unwrap();
        prop_assert_eq!(verdict.holds, pure_by_multiples(&h));
        if verdict.holds {
            // bounded groups: pure subgroups are summands
            prop_assert!(matches!(verdict.witness, PurityWitness::Complement(_)), "{:?}", verdict.witness);
        } else {
            prop_assert!(matches!(verdict.witness, PurityWitness::Equation(_)), "{:?}", verdict.witness);
        }
    }

    #[test]
    fn pure_implies_self_pure((orders, gens) in shape_and_gens()) {
        let caps = Caps::default();
        let g = group(&orders);
        let h = Submodule::generated(&g, &gens).unwrap();
        if is_pure(&h, &caps).unwrap().holds {
            prop_assert!(is_self_pure(&h, &caps).unwrap().holds);
        }
    }
}
