//! Deterministic catalogues of small rings and modules.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{exponent_partitions, prime_factors};
use crate::iso::{is_module_iso, is_ring_iso};
use crate::linear;
use crate::module::{direct_sum, FinModule};
use crate::ring::{make_cyclic_ring, make_product_ring, BaseRing};
use crate::submodule::{submodules, Submodule};
use crate::{Caps, Error, Result};

/// A ring named by construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RingSpec {
    Integers,
    Cyclic(usize),
    Product(usize, usize),
}

impl RingSpec {
    pub fn build(&self) -> Result<BaseRing> {
        match *self {
            RingSpec::Integers => Ok(BaseRing::Integers),
            RingSpec::Cyclic(n) => make_cyclic_ring(n),
            RingSpec::Product(a, b) => make_product_ring(&make_cyclic_ring(a)?, &make_cyclic_ring(b)?),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            RingSpec::Integers => String::from("Z"),
            RingSpec::Cyclic(n) => format!("Z_{n}"),
            RingSpec::Product(a, b) => format!("Z_{a}×Z_{b}"),
        }
    }

    pub fn order(&self) -> Option<usize> {
        match *self {
            RingSpec::Integers => None,
            RingSpec::Cyclic(n) => Some(n),
            RingSpec::Product(a, b) => Some(a * b),
        }
    }
}

/// What a harness run or a zoo listing covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZooScope {
    pub rings: Vec<RingSpec>,
    pub module_order_cap: usize,
    pub free_rank_cap: usize,
    pub chain_depth: usize,
    /// Largest number of copies in direct-sum checks.
    pub copies: usize,
    /// Ring pairs `(a, b)` for the product decomposition check over `Z_a × Z_b`.
    pub products: Vec<(usize, usize)>,
    /// Largest parent order in the purity oracle cross-check.
    pub oracle_order_cap: usize,
    /// When set, [`seeded_supplement`] adds randomly constructed modules.
    pub seed: Option<u64>,
    pub caps: Caps,
}

impl Default for ZooScope {
    fn default() -> Self {
        ZooScope {
            rings: vec![
                RingSpec::Integers,
                RingSpec::Cyclic(2),
                RingSpec::Cyclic(4),
                RingSpec::Cyclic(6),
                RingSpec::Cyclic(8),
                RingSpec::Product(2, 2),
            ],
            module_order_cap: 16,
            free_rank_cap: 2,
            chain_depth: 3,
            copies: 3,
            products: vec![(2, 3), (4, 2)],
            oracle_order_cap: 12,
            seed: None,
            caps: Caps::default(),
        }
    }
}

impl ZooScope {
    pub fn check(&self) -> Result<()> {
        let positive = [
            ("module order cap", self.module_order_cap),
            ("free rank cap", self.free_rank_cap),
            ("chain depth", self.chain_depth),
            ("copies", self.copies),
        ];
        if let Some((what, _)) = positive.iter().find(|(_, v)| *v == 0) {
            return Err(Error::Argument(format!("{what} must be positive")));
        }
        Caps::check("module order cap", self.module_order_cap, self.caps.module_order)?;
        for spec in &self.rings {
            if let Some(n) = spec.order() {
                Caps::check("ring order", n, self.caps.ring_order)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub spec: RingSpec,
    pub ring: BaseRing,
    /// Index of an earlier, isomorphic entry.
    pub isomorphic_to: Option<usize>,
}

/// `Z_1 … Z_max`, then `Z_a × Z_b` for `2 ≤ a ≤ b`, `ab ≤ max`, then the
/// integers. Isomorphic rings are kept, with the earlier match noted.
pub fn ring_catalog(max_order: usize, caps: &Caps) -> Result<Vec<CatalogEntry>> {
    Caps::check("ring order", max_order, caps.ring_order)?;
    let mut specs: Vec<RingSpec> = (1..=max_order).map(RingSpec::Cyclic).collect();
    for a in 2..=max_order {
        for b in a..=max_order / a {
            specs.push(RingSpec::Product(a, b));
        }
    }
    let mut out: Vec<CatalogEntry> = Vec::with_capacity(specs.len() + 1);
    for spec in specs {
        let ring = spec.build()?;
        let table = ring.table().expect("finite spec");
        let isomorphic_to = out.iter().position(|e| {
            let other = e.ring.table().expect("finite spec");
            other.order() == table.order() && is_ring_iso(other, table).is_some()
        });
        out.push(CatalogEntry {
            spec,
            ring,
            isomorphic_to,
        });
    }
    out.push(CatalogEntry {
        spec: RingSpec::Integers,
        ring: BaseRing::Integers,
        isomorphic_to: None,
    });
    Ok(out)
}

/// Invariant factors `d_1 | d_2 | …` (ascending) of every abelian group of
/// order `n`, cyclic group first.
fn invariant_factor_lists(n: usize) -> Vec<Vec<usize>> {
    let mut lists: Vec<Vec<usize>> = vec![Vec::new()];
    for (p, k) in prime_factors(n as u64) {
        let mut next = Vec::new();
        for list in &lists {
            for part in exponent_partitions(k) {
                // part is descending; align largest powers with largest factors
                let len = list.len().max(part.len());
                let mut merged = vec![1usize; len];
                for (i, &d) in list.iter().rev().enumerate() {
                    merged[len - 1 - i] *= d;
                }
                for (i, &e) in part.iter().enumerate() {
                    merged[len - 1 - i] *= (p as usize).pow(e);
                }
                next.push(merged);
            }
        }
        lists = next;
    }
    lists
}

fn integer_zoo(cap: usize, caps: &Caps) -> Result<Vec<Arc<FinModule>>> {
    let mut out = vec![Arc::new(FinModule::zero_module(&BaseRing::Integers))];
    for n in 2..=cap {
        for factors in invariant_factor_lists(n) {
            let module = if factors.len() == 1 {
                FinModule::cyclic_group(n)?
            } else {
                let parts: Vec<Arc<FinModule>> = factors
                    .iter()
                    .map(|&d| FinModule::cyclic_group(d).map(Arc::new))
                    .collect::<Result<_>>()?;
                let sum = direct_sum(&BaseRing::Integers, &parts, caps)?.module;
                Arc::try_unwrap(sum).unwrap_or_else(|m| (*m).clone())
            };
            out.push(Arc::new(module));
        }
    }
    Ok(out)
}

fn generator_label(parent: &FinModule, sub: &Submodule) -> String {
    let gens = linear::greedy_generators(parent, sub.elements());
    let names: Vec<String> = gens.iter().map(|&g| parent.element_name(g)).collect();
    format!("⟨{}⟩", names.join(","))
}

/// Adds `m` unless it is isomorphic to a module already present.
fn push_new(out: &mut Vec<Arc<FinModule>>, m: Arc<FinModule>) -> bool {
    if out
        .iter()
        .any(|x| x.order() == m.order() && is_module_iso(x, &m).is_some())
    {
        return false;
    }
    out.push(m);
    true
}

fn finite_zoo(ring: &BaseRing, cap: usize, free_rank_cap: usize, caps: &Caps) -> Result<Vec<Arc<FinModule>>> {
    let r = ring.require_finite()?;
    let mut out = vec![Arc::new(FinModule::zero_module(ring))];
    let regular = Arc::new(FinModule::regular(ring)?);
    for k in 1..=free_rank_cap {
        let Some(order) = r.order().checked_pow(k as u32) else {
            break;
        };
        if order > caps.module_order || order > caps.direct_sum_order {
            break;
        }
        let free = if k == 1 {
            regular.clone()
        } else {
            direct_sum(ring, &vec![regular.clone(); k], caps)?.module
        };
        let free_label = if k == 1 {
            String::from(free.label())
        } else {
            format!("({})", free.label())
        };
        for sub in submodules(&free, caps)? {
            let label = generator_label(&free, &sub);
            if sub.len() <= cap {
                let s = (**sub.module()).clone().with_label(format!("{label}≤{free_label}"));
                push_new(&mut out, Arc::new(s));
            }
            if free.order() / sub.len() <= cap {
                let (q, _) = free.quotient(&sub)?;
                let q = if sub.len() == 1 {
                    q.with_label(free.label())
                } else {
                    q.with_label(format!("{free_label}/{label}"))
                };
                push_new(&mut out, Arc::new(q));
            }
        }
    }
    // closure under binary direct sums
    let mut i = 0;
    while i < out.len() {
        for j in 0..=i {
            let (a, b) = (out[j].clone(), out[i].clone());
            if a.is_zero() || b.is_zero() || a.order() * b.order() > cap {
                continue;
            }
            let sum = direct_sum(ring, &[a, b], caps)?.module;
            push_new(&mut out, sum);
        }
        i += 1;
    }
    Ok(out)
}

/// Modules over `ring` of order at most `cap`, pairwise non-isomorphic,
/// sorted by order (stable within an order).
///
/// Over the integers these are all abelian groups of order `≤ cap`, one
/// per invariant-factor decomposition. Over a finite ring they are the
/// submodules and quotients of `R^k` for `k ≤ free_rank_cap`, closed under
/// direct sums within the cap.
pub fn module_zoo(ring: &BaseRing, cap: usize, free_rank_cap: usize, caps: &Caps) -> Result<Vec<Arc<FinModule>>> {
    Caps::check("module order cap", cap, caps.module_order)?;
    let mut out = match ring {
        BaseRing::Integers => integer_zoo(cap, caps)?,
        BaseRing::Finite(_) => finite_zoo(ring, cap, free_rank_cap, caps)?,
    };
    out.sort_by_key(|m| m.order());
    Ok(out)
}

/// Up to `count` extra modules from random quotients of direct sums of zoo
/// members, kept when within `cap` and new up to isomorphism. The result
/// depends only on the inputs and `seed`.
pub fn seeded_supplement(
    zoo: &[Arc<FinModule>],
    cap: usize,
    count: usize,
    seed: u64,
    caps: &Caps,
) -> Result<Vec<Arc<FinModule>>> {
    let Some(ring) = zoo.first().map(|m| m.ring().clone()) else {
        return Ok(Vec::new());
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut known: Vec<Arc<FinModule>> = zoo.to_vec();
    let mut out = Vec::new();
    for _ in 0..count.saturating_mul(8) {
        if out.len() == count {
            break;
        }
        let a = &zoo[rng.next_u64() as usize % zoo.len()];
        let b = &zoo[rng.next_u64() as usize % zoo.len()];
        if a.order().saturating_mul(b.order()) > caps.direct_sum_order.min(caps.module_order) {
            continue;
        }
        let sum = direct_sum(&ring, &[a.clone(), b.clone()], caps)?.module;
        let x = rng.next_u64() as usize % sum.order();
        let sub = Submodule::generated(&sum, &[x])?;
        if sum.order() / sub.len() > cap {
            continue;
        }
        let label = format!("({})/⟨{}⟩", sum.label(), sum.element_name(x));
        let q = Arc::new(sum.quotient(&sub)?.0.with_label(label));
        if push_new(&mut known, q.clone()) {
            out.push(q);
        }
    }
    Ok(out)
}

/// Strictly ascending chains `A_1 ⊂ … ⊂ A_j` of submodules of `b` with
/// `1 ≤ j ≤ depth`, depth first in lattice order.
pub fn chains(b: &Arc<FinModule>, depth: usize, caps: &Caps) -> Result<Vec<Vec<Submodule>>> {
    let subs = submodules(b, caps)?;
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn walk(subs: &[Submodule], depth: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<Submodule>>) {
        out.push(stack.iter().map(|&i| subs[i].clone()).collect());
        if stack.len() == depth {
            return;
        }
        let top = &subs[*stack.last().expect("nonempty chain")];
        for (j, s) in subs.iter().enumerate() {
            if s.len() > top.len() && top.is_subset_of(s) {
                stack.push(j);
                walk(subs, depth, stack, out);
                stack.pop();
            }
        }
    }
    if depth == 0 {
        return Ok(out);
    }
    for i in 0..subs.len() {
        stack.push(i);
        walk(&subs, depth, &mut stack, &mut out);
        stack.pop();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    fn labels(zoo: &[Arc<FinModule>]) -> Vec<&str> {
        zoo.iter().map(|m| m.label()).collect()
    }

    #[test]
    fn catalog_small() {
        let cat = ring_catalog(4, &caps()).unwrap();
        let specs: Vec<RingSpec> = cat.iter().map(|e| e.spec).collect();
        assert_eq!(
            specs,
            vec![
                RingSpec::Cyclic(1),
                RingSpec::Cyclic(2),
                RingSpec::Cyclic(3),
                RingSpec::Cyclic(4),
                RingSpec::Product(2, 2),
                RingSpec::Integers
            ]
        );
        assert!(cat.iter().all(|e| e.isomorphic_to.is_none()));
        let one = ring_catalog(1, &caps()).unwrap();
        assert_eq!(one.len(), 2);
    }

    #[test]
    fn catalog_notes_crt() {
        let cat = ring_catalog(6, &caps()).unwrap();
        let z6 = cat.iter().position(|e| e.spec == RingSpec::Cyclic(6)).unwrap();
        let prod = cat.iter().find(|e| e.spec == RingSpec::Product(2, 3)).unwrap();
        assert_eq!(prod.isomorphic_to, Some(z6));
    }

    #[test]
    fn invariant_factors() {
        assert_eq!(invariant_factor_lists(8), vec![vec![8], vec![2, 4], vec![2, 2, 2]]);
        assert_eq!(invariant_factor_lists(12), vec![vec![12], vec![2, 6]]);
        assert_eq!(invariant_factor_lists(1), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn integer_zoo_up_to_eight() {
        let zoo = module_zoo(&BaseRing::Integers, 8, 1, &caps()).unwrap();
        assert_eq!(
            labels(&zoo),
            vec![
                "0",
                "Z_2",
                "Z_3",
                "Z_4",
                "Z_2 ⊕ Z_2",
                "Z_5",
                "Z_6",
                "Z_7",
                "Z_8",
                "Z_2 ⊕ Z_4",
                "Z_2 ⊕ Z_2 ⊕ Z_2"
            ]
        );
    }

    #[test]
    fn zoo_counts_to_sixteen() {
        for (spec, count) in [
            (RingSpec::Cyclic(2), 5),
            (RingSpec::Cyclic(4), 9),
            (RingSpec::Cyclic(6), 9),
            (RingSpec::Cyclic(8), 11),
            (RingSpec::Product(2, 2), 15),
        ] {
            let zoo = module_zoo(&spec.build().unwrap(), 16, 2, &caps()).unwrap();
            assert_eq!(zoo.len(), count, "{}", spec.label());
        }
    }

    #[test]
    fn z4_small_zoo() {
        let z4 = make_cyclic_ring(4).unwrap();
        let zoo = module_zoo(&z4, 4, 1, &caps()).unwrap();
        // Z_4/⟨2⟩ is isomorphic to ⟨2⟩ and is not listed again
        assert_eq!(labels(&zoo), vec!["0", "⟨2⟩≤Z_4", "Z_4", "(⟨2⟩≤Z_4) ⊕ (⟨2⟩≤Z_4)"]);
        assert_eq!(module_zoo(&z4, 1, 2, &caps()).unwrap().len(), 1);
    }

    #[test]
    fn chains_in_z4() {
        let b = Arc::new(FinModule::cyclic_group(4).unwrap());
        let all = chains(&b, 3, &caps()).unwrap();
        let sizes: Vec<Vec<usize>> = all.iter().map(|c| c.iter().map(Submodule::len).collect()).collect();
        assert!(sizes.contains(&vec![1, 2, 4]));
        assert_eq!(chains(&b, 1, &caps()).unwrap().len(), 3);
        let zero = Arc::new(FinModule::zero_module(&BaseRing::Integers));
        assert_eq!(chains(&zero, 3, &caps()).unwrap().len(), 1);
    }

    #[test]
    fn supplement_is_reproducible_and_new() {
        let z4 = make_cyclic_ring(4).unwrap();
        let zoo = module_zoo(&z4, 4, 1, &caps()).unwrap();
        let a = seeded_supplement(&zoo, 8, 3, 7, &caps()).unwrap();
        let b = seeded_supplement(&zoo, 8, 3, 7, &caps()).unwrap();
        assert_eq!(labels(&a), labels(&b));
        for m in &a {
            assert!(zoo.iter().all(|z| is_module_iso(z, m).is_none()));
        }
    }
}
