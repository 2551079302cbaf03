//! Exhaustive checks of the structural theorems on a finite scope.
//!
//! Every statement checked here is a theorem, so a violation always means
//! an implementation bug. Each violation carries a witness string that can
//! be replayed with the purity primitives.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::filter::{filter_closure, filter_contains};
use crate::hom::{kernel, IdealHom};
use crate::ideal::LeftIdeal;
use crate::module::{direct_sum, product_module, FinModule};
use crate::purity::{
    bounded_equational_purity, extends_to_ring, is_absolutely_pure, is_absolutely_self_pure, is_injective_baer,
    is_m_pure, is_quasi_injective, is_quasi_injective_by_endomorphisms, is_regular_ring, is_self_pure,
    is_semisimple_ring, recheck_equation_witness, Decision, FailingMap, OracleOutcome,
};
use crate::ring::BaseRing;
use crate::submodule::{submodules, Submodule};
use crate::zoo::{chains, module_zoo, seeded_supplement, RingSpec, ZooScope};
use crate::{Caps, Error, Result};

/// Order-preserving parallel map. The harness hands independent instances
/// to it and aggregates in input order, so reports do not depend on the
/// executor.
pub trait Executor: Sync {
    fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync,
    {
        items.iter().map(f).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    Transitivity,
    Restriction,
    SummandClosure,
    DirectSum,
    Noetherian,
    Regular,
    Semisimple,
    ProductDecomposition,
    Hierarchy,
    MPurity,
    PurityOracle,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::Transitivity,
        TheoremId::Restriction,
        TheoremId::SummandClosure,
        TheoremId::DirectSum,
        TheoremId::Noetherian,
        TheoremId::Regular,
        TheoremId::Semisimple,
        TheoremId::ProductDecomposition,
        TheoremId::Hierarchy,
        TheoremId::MPurity,
        TheoremId::PurityOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Transitivity => "transitivity",
            TheoremId::Restriction => "restriction",
            TheoremId::SummandClosure => "summand-closure",
            TheoremId::DirectSum => "direct-sum",
            TheoremId::Noetherian => "noetherian",
            TheoremId::Regular => "regular",
            TheoremId::Semisimple => "semisimple",
            TheoremId::ProductDecomposition => "product-decomposition",
            TheoremId::Hierarchy => "hierarchy",
            TheoremId::MPurity => "m-purity",
            TheoremId::PurityOracle => "purity-oracle",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name() == name)
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::Transitivity => "A ≤sp B and B ≤sp C imply A ≤sp C",
            TheoremId::Restriction => "A ≤ B ≤ C and A ≤sp C imply A ≤sp B",
            TheoremId::SummandClosure => "direct summands of absolutely self pure modules are absolutely self pure",
            TheoremId::DirectSum => "A is absolutely self pure iff every finite direct sum of copies of A is",
            TheoremId::Noetherian => "over a left noetherian ring absolutely self pure modules are quasi-injective",
            TheoremId::Regular => "R is regular iff every left R-module is absolutely self pure",
            TheoremId::Semisimple => "R is semisimple iff every left R-module is quasi-injective",
            TheoremId::ProductDecomposition => {
                "over R1 × R2 the flags of A × B are the conjunction of the componentwise flags"
            }
            TheoremId::Hierarchy => {
                "injective ⟹ quasi-injective ⟹ absolutely self pure, absolutely pure ⟹ absolutely self pure"
            }
            TheoremId::MPurity => "A is A-pure in B exactly when A is self pure in B",
            TheoremId::PurityOracle => {
                "a submodule is a direct summand iff no bounded linear system refutes its purity"
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub instance: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub id: TheoremId,
    pub instances: usize,
    pub violations: Vec<Violation>,
    /// Parts of the statement not checked, with the reason.
    pub skipped: Vec<String>,
    /// Informational findings, such as the witness modules constructed.
    pub notes: Vec<String>,
}

impl TheoremReport {
    fn new(id: TheoremId) -> Self {
        TheoremReport {
            id,
            instances: 0,
            violations: Vec::new(),
            skipped: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn violation(&mut self, instance: impl Into<String>, witness: impl Into<String>) {
        self.violations.push(Violation {
            instance: instance.into(),
            witness: witness.into(),
        });
    }

    fn absorb(&mut self, t: Tally) {
        self.instances += t.instances;
        self.violations.extend(t.violations);
        self.skipped.extend(t.skipped);
    }
}

#[derive(Default)]
struct Tally {
    instances: usize,
    violations: Vec<Violation>,
    skipped: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, instance: &str, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.violations.push(Violation {
                instance: instance.to_string(),
                witness: witness(),
            });
        }
    }
}

fn flag_text<W>(flag: &Decision<W>, describe: impl Fn(&W) -> String) -> String {
    match flag {
        Decision::Holds => String::from("holds"),
        Decision::Fails(w) => format!("fails at {}", describe(w)),
    }
}

fn map_text(flag: &Decision<FailingMap>) -> String {
    flag_text(flag, FailingMap::describe)
}

fn instance_label(spec: RingSpec, m: &FinModule) -> String {
    format!("{} over {}", m.label(), spec.label())
}

const DIRECT_SUM_CAP: &str = "direct sum above the direct-sum order cap";

/// A module of the scope, with the ring spec it came from.
struct Instance {
    spec: RingSpec,
    module: Arc<FinModule>,
}

/// Per-module results, aggregated later in instance order.
struct Facts {
    tallies: BTreeMap<TheoremId, Tally>,
    asp: bool,
    qi: bool,
}

/// Self purity of `subs[i]` in `subs[j]`, cached.
struct PairTable<'a> {
    subs: &'a [Submodule],
    caps: &'a Caps,
    cache: BTreeMap<(usize, usize), bool>,
}

impl PairTable<'_> {
    fn self_pure(&mut self, i: usize, j: usize) -> Result<bool> {
        if let Some(&v) = self.cache.get(&(i, j)) {
            return Ok(v);
        }
        let inner = self.subs[i].restrict_to(&self.subs[j])?;
        let v = is_self_pure(&inner, self.caps)?.holds;
        self.cache.insert((i, j), v);
        Ok(v)
    }
}

fn complement_in<'a>(sub: &Submodule, subs: &'a [Submodule]) -> Option<&'a Submodule> {
    let n = sub.parent().order();
    subs.iter().find(|c| c.len() * sub.len() == n && sub.meets_trivially(c))
}

fn examine(inst: &Instance, scope: &ZooScope, wanted: &BTreeSet<TheoremId>) -> Result<Facts> {
    let caps = &scope.caps;
    let m = &inst.module;
    let label = instance_label(inst.spec, m);
    let mut tallies: BTreeMap<TheoremId, Tally> = BTreeMap::new();
    let want = |t| wanted.contains(&t);

    let asp = is_absolutely_self_pure(m, caps)?;
    let qi = is_quasi_injective(m, caps)?;

    if want(TheoremId::Hierarchy) {
        let inj = is_injective_baer(m, caps)?;
        let ap = is_absolutely_pure(m, caps)?;
        let t = tallies.entry(TheoremId::Hierarchy).or_default();
        let implies = |a: &Decision<FailingMap>, b: &Decision<FailingMap>| !a.holds() || b.holds();
        t.check(implies(&inj, &qi), &label, || {
            format!("injective, quasi-injective {}", map_text(&qi))
        });
        t.check(implies(&qi, &asp), &label, || {
            format!("quasi-injective, absolutely self pure {}", map_text(&asp))
        });
        t.check(implies(&ap, &asp), &label, || {
            format!("absolutely pure, absolutely self pure {}", map_text(&asp))
        });
        t.check(implies(&inj, &ap), &label, || {
            format!("injective, absolutely pure {}", map_text(&ap))
        });
        for flag in [&inj, &ap, &qi, &asp] {
            if let Some(w) = flag.witness() {
                t.check(w.recheck(), &label, || {
                    format!("witness {} does not re-fail", w.describe())
                });
            }
        }
    }

    if want(TheoremId::Noetherian) {
        let by_endos = is_quasi_injective_by_endomorphisms(m, caps)?;
        let t = tallies.entry(TheoremId::Noetherian).or_default();
        t.check(asp.holds() == qi.holds(), &label, || {
            format!(
                "absolutely self pure {}, quasi-injective {}",
                map_text(&asp),
                map_text(&qi)
            )
        });
        t.check(by_endos.holds() == qi.holds(), &label, || {
            let endo = flag_text(&by_endos, |w| {
                format!(
                    "{} with generators {:?} ↦ {:?}",
                    w.submodule.describe(),
                    w.generators,
                    w.images
                )
            });
            format!("ideal criterion {}, endomorphism criterion {endo}", map_text(&qi))
        });
    }

    let needs_lattice = [
        TheoremId::Transitivity,
        TheoremId::Restriction,
        TheoremId::MPurity,
        TheoremId::SummandClosure,
        TheoremId::PurityOracle,
    ]
    .into_iter()
    .any(want);
    if needs_lattice {
        let subs = submodules(m, caps)?;
        let index: BTreeMap<Vec<usize>, usize> = subs
            .iter()
            .enumerate()
            .map(|(i, s)| (s.elements().to_vec(), i))
            .collect();
        let mut table = PairTable {
            subs: &subs,
            caps,
            cache: BTreeMap::new(),
        };

        if want(TheoremId::Transitivity) || want(TheoremId::Restriction) {
            let mut triples = BTreeSet::new();
            for chain in chains(m, scope.chain_depth, caps)? {
                let ids: Vec<usize> = chain.iter().map(|s| index[s.elements()]).collect();
                for p in 0..ids.len() {
                    for q in p..ids.len() {
                        for r in q..ids.len() {
                            triples.insert((ids[p], ids[q], ids[r]));
                        }
                    }
                }
            }
            let name = |i: usize| subs[i].describe();
            for &(a, b, c) in &triples {
                let chain = || format!("{label}: {} ≤ {} ≤ {}", name(a), name(b), name(c));
                if want(TheoremId::Transitivity) {
                    let (ab, bc, ac) = (table.self_pure(a, b)?, table.self_pure(b, c)?, table.self_pure(a, c)?);
                    let t = tallies.entry(TheoremId::Transitivity).or_default();
                    t.check(!(ab && bc) || ac, &chain(), || {
                        String::from("A ≤sp B, B ≤sp C, A not ≤sp C")
                    });
                }
                if want(TheoremId::Restriction) {
                    let (ac, ab) = (table.self_pure(a, c)?, table.self_pure(a, b)?);
                    let t = tallies.entry(TheoremId::Restriction).or_default();
                    t.check(!ac || ab, &chain(), || String::from("A ≤sp C, A not ≤sp B"));
                }
            }
        }

        let top = subs.len() - 1;
        if want(TheoremId::MPurity) {
            for (i, a) in subs.iter().enumerate() {
                let sp = table.self_pure(i, top)?;
                let mp = is_m_pure(a, a.module(), caps)?.holds;
                let t = tallies.entry(TheoremId::MPurity).or_default();
                t.check(sp == mp, &format!("{label}: {}", a.describe()), || {
                    format!("self pure {sp}, A-pure {mp}")
                });
            }
        }

        if want(TheoremId::SummandClosure) && asp.holds() {
            for a in &subs {
                if complement_in(a, &subs).is_none() {
                    continue;
                }
                let flag = is_absolutely_self_pure(a.module(), caps)?;
                let t = tallies.entry(TheoremId::SummandClosure).or_default();
                t.check(flag.holds(), &format!("{label}: summand {}", a.describe()), || {
                    map_text(&flag)
                });
            }
        }

        let oracle_ring = matches!(inst.spec, RingSpec::Integers | RingSpec::Cyclic(4));
        if want(TheoremId::PurityOracle) && oracle_ring && m.order() <= scope.oracle_order_cap {
            for a in &subs {
                let summand = complement_in(a, &subs).is_some();
                let outcome = bounded_equational_purity(a, 3, 3, caps)?;
                let instance = format!("{label}: {}", a.describe());
                let t = tallies.entry(TheoremId::PurityOracle).or_default();
                match (&outcome, summand) {
                    (OracleOutcome::NotFound { .. }, true) => t.check(true, &instance, String::new),
                    (OracleOutcome::Witness(w), false) => t.check(recheck_equation_witness(a, w), &instance, || {
                        format!("equation witness {} does not re-validate", w.describe(a.parent()))
                    }),
                    (OracleOutcome::Witness(w), true) => t.check(false, &instance, || {
                        format!("direct summand, yet {} is unsolvable in A", w.describe(a.parent()))
                    }),
                    (OracleOutcome::NotFound { .. }, false) => t.check(false, &instance, || {
                        String::from("no complement and no equation witness")
                    }),
                }
            }
        }
    }

    if want(TheoremId::DirectSum) {
        let t = tallies.entry(TheoremId::DirectSum).or_default();
        for k in 2..=scope.copies {
            let order = m.order().checked_pow(k as u32);
            if order.is_none_or(|o| o > caps.direct_sum_order) {
                t.skipped.push(String::from(DIRECT_SUM_CAP));
                continue;
            }
            let sum = direct_sum(m.ring(), &vec![m.clone(); k], caps)?.module;
            let flag = is_absolutely_self_pure(&sum, caps)?;
            t.check(flag.holds() == asp.holds(), &format!("{label}, {k} copies"), || {
                format!("A: {}, A^{k}: {}", map_text(&asp), map_text(&flag))
            });
        }
    }

    Ok(Facts {
        tallies,
        asp: asp.holds(),
        qi: qi.holds(),
    })
}

/// The module `L ⊕ R` built from a principal left ideal `L` that is not a
/// direct summand, with the map `l ↦ (l, 0)` that refutes absolute self
/// purity.
#[derive(Clone, Debug)]
pub struct RegularWitness {
    pub ideal: LeftIdeal,
    pub module: Arc<FinModule>,
    pub map: IdealHom,
    /// `ker f ⊇ ann((0,1))`, which puts the kernel in the filter.
    pub kernel_contains_annihilator: bool,
    pub kernel_in_filter: bool,
    /// Whether `f` extends to the ring; it must not.
    pub extends: bool,
}

impl RegularWitness {
    /// Builds the witness for `ideal`, a left ideal of the finite `ring`.
    pub fn build(ring: &BaseRing, ideal: &LeftIdeal, caps: &Caps) -> Result<Self> {
        let regular = Arc::new(FinModule::regular(ring)?);
        let elements = ideal.elements().ok_or(Error::NotFinite)?.to_vec();
        let sub = Submodule::new(&regular, elements.clone())?;
        let l_module = Arc::new((**sub.module()).clone().with_label(ideal.describe()));
        let ds = direct_sum(ring, &[l_module, regular], caps)?;
        let module = ds.module.clone();
        let values = elements
            .iter()
            .map(|&l| ds.injections[0].apply(sub.local_index(l).expect("element of the ideal")))
            .collect();
        let map = IdealHom::new(ideal.clone(), module.clone(), values)?;
        let one = ring.require_finite()?.one();
        let ann = module.annihilator(ds.injections[1].apply(one));
        let ker = kernel(&map);
        Ok(RegularWitness {
            ideal: ideal.clone(),
            kernel_contains_annihilator: ker.contains_ideal(&ann),
            kernel_in_filter: filter_contains(&filter_closure(&module), &ker),
            extends: extends_to_ring(&map).is_some(),
            module,
            map,
        })
    }

    pub fn refutes(&self) -> bool {
        self.kernel_contains_annihilator && self.kernel_in_filter && !self.extends
    }
}

fn finite_specs(scope: &ZooScope) -> impl Iterator<Item = RingSpec> + '_ {
    scope.rings.iter().copied().filter(|s| *s != RingSpec::Integers)
}

fn ring_checks(
    scope: &ZooScope,
    wanted: &BTreeSet<TheoremId>,
    instances: &[Instance],
    facts: &[Facts],
    reports: &mut BTreeMap<TheoremId, TheoremReport>,
) -> Result<()> {
    let caps = &scope.caps;
    let of_ring = |spec: RingSpec| instances.iter().zip(facts).filter(move |(i, _)| i.spec == spec);
    if scope.rings.contains(&RingSpec::Integers) {
        for id in [TheoremId::Regular, TheoremId::Semisimple] {
            if let Some(r) = reports.get_mut(&id) {
                r.skipped.push(String::from(
                    "Z: neither regular nor semisimple, and the witness L ⊕ R is infinite",
                ));
            }
        }
    }
    for spec in finite_specs(scope) {
        let ring = spec.build()?;
        let regular = is_regular_ring(&ring, caps)?;
        if wanted.contains(&TheoremId::Regular) {
            let report = reports.get_mut(&TheoremId::Regular).expect("wanted");
            match regular.witness() {
                None => {
                    for (inst, f) in of_ring(spec) {
                        report.instances += 1;
                        if !f.asp {
                            report.violation(
                                instance_label(spec, &inst.module),
                                "regular ring, module not absolutely self pure",
                            );
                        }
                    }
                    report.notes.push(format!("{}: regular", spec.label()));
                }
                Some(ideal) => {
                    let w = RegularWitness::build(&ring, ideal, caps)?;
                    let asp = is_absolutely_self_pure(&w.module, caps)?;
                    report.instances += 1;
                    let instance = format!("{} over {}", w.module.label(), spec.label());
                    if !w.refutes() || asp.holds() {
                        report.violation(
                            instance,
                            format!("{} does not refute absolute self purity", w.map.describe()),
                        );
                    } else {
                        report.notes.push(format!(
                            "{}: not regular, {} is not absolutely self pure: {}",
                            spec.label(),
                            w.module.label(),
                            w.map.describe()
                        ));
                    }
                }
            }
        }
        if wanted.contains(&TheoremId::Semisimple) {
            let report = reports.get_mut(&TheoremId::Semisimple).expect("wanted");
            let semisimple = match is_semisimple_ring(&ring, caps) {
                Ok(s) => s,
                Err(Error::Invariant(msg)) => {
                    report.violation(spec.label(), msg);
                    continue;
                }
                Err(e) => return Err(e),
            };
            if semisimple {
                for (inst, f) in of_ring(spec) {
                    report.instances += 1;
                    if !f.qi {
                        report.violation(
                            instance_label(spec, &inst.module),
                            "semisimple ring, module not quasi-injective",
                        );
                    }
                }
                report.notes.push(format!("{}: semisimple", spec.label()));
            } else {
                report.instances += 1;
                let mut found: Option<String> = of_ring(spec)
                    .find(|(_, f)| !f.qi)
                    .map(|(i, _)| String::from(i.module.label()));
                if found.is_none() {
                    if let Some(ideal) = regular.witness() {
                        let w = RegularWitness::build(&ring, ideal, caps)?;
                        if !is_quasi_injective(&w.module, caps)?.holds() {
                            found = Some(String::from(w.module.label()));
                        }
                    }
                }
                match found {
                    Some(name) => report.notes.push(format!(
                        "{}: not semisimple, {name} is not quasi-injective",
                        spec.label()
                    )),
                    None => report.violation(
                        spec.label(),
                        "not semisimple, yet every module checked is quasi-injective",
                    ),
                }
            }
        }
    }
    Ok(())
}

fn product_checks<E: Executor>(scope: &ZooScope, exec: &E, report: &mut TheoremReport) -> Result<()> {
    let caps = &scope.caps;
    for &(a, b) in &scope.products {
        let (ra, rb) = (RingSpec::Cyclic(a).build()?, RingSpec::Cyclic(b).build()?);
        let ring = RingSpec::Product(a, b).build()?;
        let za = module_zoo(&ra, scope.module_order_cap, scope.free_rank_cap, caps)?;
        let zb = module_zoo(&rb, scope.module_order_cap, scope.free_rank_cap, caps)?;
        let flags = |m: &Arc<FinModule>| -> Result<[bool; 4]> {
            Ok([
                is_injective_baer(m, caps)?.holds(),
                is_absolutely_pure(m, caps)?.holds(),
                is_quasi_injective(m, caps)?.holds(),
                is_absolutely_self_pure(m, caps)?.holds(),
            ])
        };
        let fa: Vec<[bool; 4]> = exec.map(&za, flags).into_iter().collect::<Result<_>>()?;
        let fb: Vec<[bool; 4]> = exec.map(&zb, flags).into_iter().collect::<Result<_>>()?;
        let pairs: Vec<(usize, usize)> = (0..za.len())
            .flat_map(|i| (0..zb.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| za[i].order() * zb[j].order() <= scope.module_order_cap)
            .collect();
        let results = exec.map(&pairs, |&(i, j)| -> Result<Option<Violation>> {
            let m = Arc::new(product_module(&ring, &za[i], &zb[j])?);
            let got = flags(&m)?;
            let want: Vec<bool> = fa[i].iter().zip(&fb[j]).map(|(x, y)| *x && *y).collect();
            Ok((got[..] != want[..]).then(|| Violation {
                instance: instance_label(RingSpec::Product(a, b), &m),
                witness: format!("flags {got:?}, componentwise {want:?}"),
            }))
        });
        for r in results {
            report.instances += 1;
            report.violations.extend(r?);
        }
    }
    Ok(())
}

/// Modules of the scope in ring order, each zoo sorted by order.
fn scope_instances(scope: &ZooScope) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for &spec in &scope.rings {
        let ring = spec.build()?;
        let mut zoo = module_zoo(&ring, scope.module_order_cap, scope.free_rank_cap, &scope.caps)?;
        if let Some(seed) = scope.seed {
            let extra = seeded_supplement(&zoo, scope.module_order_cap, 4, seed, &scope.caps)?;
            zoo.extend(extra);
        }
        out.extend(zoo.into_iter().map(|module| Instance { spec, module }));
    }
    Ok(out)
}

/// Runs the requested checks over `scope`. Reports come back in the order
/// of [`TheoremId::ALL`] and are identical for every executor.
pub fn verify<E: Executor>(scope: &ZooScope, exec: &E, ids: &[TheoremId]) -> Result<Vec<TheoremReport>> {
    scope.check()?;
    let wanted: BTreeSet<TheoremId> = ids.iter().copied().collect();
    let instances = scope_instances(scope)?;
    let facts: Vec<Facts> = exec
        .map(&instances, |inst| examine(inst, scope, &wanted))
        .into_iter()
        .collect::<Result<_>>()?;

    let mut reports: BTreeMap<TheoremId, TheoremReport> =
        wanted.iter().map(|&id| (id, TheoremReport::new(id))).collect();
    for f in &facts {
        for (id, tally) in &f.tallies {
            let t = Tally {
                instances: tally.instances,
                violations: tally.violations.clone(),
                skipped: tally.skipped.clone(),
            };
            reports.get_mut(id).expect("wanted").absorb(t);
        }
    }
    ring_checks(scope, &wanted, &instances, &facts, &mut reports)?;
    if let Some(r) = reports.get_mut(&TheoremId::ProductDecomposition) {
        product_checks(scope, exec, r)?;
    }
    if let Some(r) = reports.get_mut(&TheoremId::Noetherian) {
        r.skipped.push(String::from(
            "the converse needs a non-noetherian ring and is not checked",
        ));
    }
    if let Some(r) = reports.get_mut(&TheoremId::DirectSum) {
        let over = r.skipped.len();
        r.skipped.clear();
        if over > 0 {
            r.skipped
                .push(format!("{over} module and copy-count pairs: {DIRECT_SUM_CAP}"));
        }
        r.skipped.push(String::from("infinite index sets are out of scope"));
    }
    Ok(TheoremId::ALL.iter().filter_map(|id| reports.remove(id)).collect())
}

/// Every check over `scope`.
pub fn verify_theorems<E: Executor>(scope: &ZooScope, exec: &E) -> Result<Vec<TheoremReport>> {
    verify(scope, exec, &TheoremId::ALL)
}

fn single<E: Executor>(scope: &ZooScope, exec: &E, id: TheoremId) -> Result<TheoremReport> {
    Ok(verify(scope, exec, &[id])?.remove(0))
}

pub fn check_transitivity<E: Executor>(scope: &ZooScope, exec: &E) -> Result<TheoremReport> {
    single(scope, exec, TheoremId::Transitivity)
}

pub fn check_restriction<E: Executor>(scope: &ZooScope, exec: &E) -> Result<TheoremReport> {
    single(scope, exec, TheoremId::Restriction)
}

pub fn check_summand_closure<E: Executor>(scope: &ZooScope, exec: &E) -> Result<TheoremReport> {
    single(scope, exec, TheoremId::SummandClosure)
}

pub fn check_direct_sum<E: Executor>(scope: &ZooScope, exec: &E) -> Result<TheoremReport> {
    single(scope, exec, TheoremId::DirectSum)
}

pub fn check_noetherian_equivalence<E: Executor>(scope: &ZooScope, exec: &E) -> Result<TheoremReport> {
    single(scope, exec, TheoremId::Noetherian)
}

pub fn check_regular_equivalence<E: Executor>(scope: &ZooScope, exec: &E) -> Result<TheoremReport> {
    single(scope, exec, TheoremId::Regular)
}

pub fn check_semisimple<E: Executor>(scope: &ZooScope, exec: &E) -> Result<TheoremReport> {
    single(scope, exec, TheoremId::Semisimple)
}

pub fn check_product_decomposition<E: Executor>(scope: &ZooScope, exec: &E) -> Result<TheoremReport> {
    single(scope, exec, TheoremId::ProductDecomposition)
}
