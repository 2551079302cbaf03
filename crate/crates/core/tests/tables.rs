//! Table validation and ring constructions against hand-built tables.

use proptest::prelude::*;
use selfpure_core::{
    is_ring_iso, left_ideals, make_cyclic_ring, make_product_ring, validate, Axiom, BaseRing, FinModule, RingTable,
};

fn zn_tables(n: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let add = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let mul = (0..n).map(|a| (0..n).map(|b| a * b % n).collect()).collect();
    (add, mul)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn table(r: &BaseRing) -> &RingTable {
    r.table().expect("finite ring")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn corrupting_one_product_is_detected(n in 2usize..9, a in 0usize..9, b in 0usize..9, shift in 1usize..9) {
        let (a, b) = (a % n, b % n);
        let (add, mut mul) = zn_tables(n);
        prop_assert!(RingTable::new(add.clone(), mul.clone(), 0, 1, "Z_n").is_ok());
        let shift = 1 + shift % (n - 1);
        mul[a][b] = (mul[a][b] + shift) % n;
        let ring = RingTable::from_tables(add, mul, 0, 1, "bad").unwrap();
        prop_assert!(!validate(&ring).is_empty());
    }

    #[test]
    fn corrupting_one_action_entry_is_detected(n in 2usize..7, r in 0usize..7, m in 0usize..7, shift in 1usize..7) {
        let ring = make_cyclic_ring(n).unwrap();
        let (r, m) = (r % n, m % n);
        let (add, mul) = zn_tables(n);
        prop_assert!(FinModule::new(ring.clone(), add.clone(), 0, Some(mul.clone()), "R").is_ok());
        let mut action = mul;
        action[r][m] = (action[r][m] + 1 + shift % (n - 1)) % n;
        let module = FinModule::from_tables(ring, add, 0, Some(action), "bad").unwrap();
        prop_assert!(!validate(&module).is_empty());
    }

    #[test]
    fn cyclic_rings_have_one_ideal_per_divisor(n in 1usize..25) {
        let ring = make_cyclic_ring(n).unwrap();
        let ideals = left_ideals(&ring).unwrap();
        prop_assert_eq!(ideals.len(), (1..=n).filter(|d| n % d == 0).count());
    }

    #[test]
    fn products_of_coprime_cyclics_are_cyclic(a in 1usize..7, b in 1usize..7) {
        let ra = make_cyclic_ring(a).unwrap();
        let rb = make_cyclic_ring(b).unwrap();
        let prod = make_product_ring(&ra, &rb).unwrap();
        let cyc = make_cyclic_ring(a * b).unwrap();
        prop_assert!(validate(table(&prod)).is_empty());
        prop_assert_eq!(is_ring_iso(table(&prod), table(&cyc)).is_some(), gcd(a, b) == 1);
    }
}

#[test]
fn unit_failure_names_the_axiom() {
    let ring = make_cyclic_ring(4).unwrap();
    let add = vec![vec![0, 1], vec![1, 0]];
    let action = vec![vec![0, 0], vec![0, 0], vec![0, 0], vec![0, 1]];
    let m = FinModule::from_tables(ring, add, 0, Some(action), "M").unwrap();
    let report = validate(&m);
    assert!(report.cites(Axiom::ActionUnital));
    assert!(FinModule::new(make_cyclic_ring(4).unwrap(), vec![vec![0, 1], vec![1, 0]], 0, None, "M").is_err());
}

#[test]
fn wrong_shapes_are_rejected() {
    assert!(RingTable::from_tables(vec![vec![0, 1], vec![1]], vec![vec![0, 0], vec![0, 1]], 0, 1, "x").is_err());
    assert!(RingTable::from_tables(vec![], vec![], 0, 0, "x").is_err());
    assert!(FinModule::from_tables(BaseRing::Integers, vec![vec![0]], 0, Some(vec![vec![0]]), "x").is_err());
}
