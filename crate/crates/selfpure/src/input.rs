//! The JSON input document and its resolution into core structures.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use selfpure_core::zoo::{RingSpec, ZooScope};
use selfpure_core::{
    direct_sum, make_cyclic_ring, make_product_ring, product_module, validate, BaseRing, Caps, FinModule, RingTable,
    Submodule,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default)]
    pub rings: BTreeMap<String, RingExpr>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleExpr>,
    #[serde(default)]
    pub tasks: Vec<Task>,
    #[serde(default)]
    pub scope: Option<ScopeConfig>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum RingExpr {
    Integers,
    Cyclic(usize),
    Product([String; 2]),
    Table(RingTableExpr),
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RingTableExpr {
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

/// An element given by index or by its printed name, e.g. `"(2,0)"`.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum ElementRef {
    Index(usize),
    Name(String),
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct ModuleExpr {
    #[serde(default)]
    pub ring: Option<String>,
    #[serde(flatten)]
    pub kind: ModuleKind,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleKind {
    /// `R / R(n·1)`; over the integers `Z_n`.
    Cyclic(usize),
    /// Direct sum of cyclic modules.
    CyclicGroups(Vec<usize>),
    /// `R^k`; `k = 0` is the zero module.
    Free(usize),
    DirectSum(Vec<String>),
    /// `A × B` over the product of their rings.
    Product([String; 2]),
    Submodule {
        of: String,
        generators: Vec<ElementRef>,
    },
    Quotient {
        of: String,
        by: Vec<ElementRef>,
    },
    Table(ModuleTableExpr),
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleTableExpr {
    pub add: Vec<Vec<usize>>,
    pub zero: usize,
    #[serde(default)]
    pub action: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    SelfPure,
    MPure,
    Pure,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::SelfPure => "self-pure",
            Property::MPure => "m-pure",
            Property::Pure => "pure",
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum Task {
    Classify(String),
    Check {
        property: Property,
        submodule: String,
        #[serde(default)]
        module: Option<String>,
    },
    VerifyTheorems(#[serde(default)] ScopeConfig),
}

#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ScopeConfig {
    #[serde(default)]
    pub rings: Option<Vec<String>>,
    #[serde(default)]
    pub module_order_cap: Option<usize>,
    #[serde(default)]
    pub free_rank_cap: Option<usize>,
    #[serde(default)]
    pub chain_depth: Option<usize>,
    #[serde(default)]
    pub copies: Option<usize>,
    #[serde(default)]
    pub products: Option<Vec<[usize; 2]>>,
    #[serde(default)]
    pub oracle_order_cap: Option<usize>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub theorems: Option<Vec<String>>,
}

impl ScopeConfig {
    /// Applies the set fields on top of `base`.
    pub fn apply(&self, mut base: ZooScope) -> Result<ZooScope, String> {
        if let Some(rings) = &self.rings {
            base.rings = rings.iter().map(|r| parse_ring_spec(r)).collect::<Result<_, _>>()?;
        }
        let set = |slot: &mut usize, v: Option<usize>| {
            if let Some(v) = v {
                *slot = v;
            }
        };
        set(&mut base.module_order_cap, self.module_order_cap);
        set(&mut base.free_rank_cap, self.free_rank_cap);
        set(&mut base.chain_depth, self.chain_depth);
        set(&mut base.copies, self.copies);
        set(&mut base.oracle_order_cap, self.oracle_order_cap);
        if let Some(p) = &self.products {
            base.products = p.iter().map(|[a, b]| (*a, *b)).collect();
        }
        if self.seed.is_some() {
            base.seed = self.seed;
        }
        Ok(base)
    }
}

/// `Z` / `integers`, `Z_n`, or `Z_a×Z_b` (also `Z_axZ_b`).
pub fn parse_ring_spec(s: &str) -> Result<RingSpec, String> {
    let s = s.trim();
    if s == "Z" || s.eq_ignore_ascii_case("integers") {
        return Ok(RingSpec::Integers);
    }
    let cyclic = |t: &str| -> Option<usize> { t.trim().strip_prefix("Z_")?.parse().ok().filter(|&n| n > 0) };
    if let Some((a, b)) = s.split_once('×').or_else(|| s.split_once('x')) {
        if let (Some(a), Some(b)) = (cyclic(a), cyclic(b)) {
            return Ok(RingSpec::Product(a, b));
        }
    }
    cyclic(s)
        .map(RingSpec::Cyclic)
        .ok_or_else(|| format!("unrecognised ring `{s}` (expected Z, Z_n or Z_a×Z_b)"))
}

/// Outcome of checking one named structure of the document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureCheck {
    pub name: String,
    pub kind: &'static str,
    /// Violated axioms, each as `axiom fails at [witness]`.
    pub failures: Vec<String>,
    /// Construction error (unknown name, dimension mismatch, ...).
    pub error: Option<String>,
    /// The construction error was a capacity overflow.
    pub capacity: bool,
}

impl StructureCheck {
    pub fn valid(&self) -> bool {
        self.failures.is_empty() && self.error.is_none()
    }
}

/// Every ring, module and submodule of a document, built and validated.
#[derive(Default)]
pub struct Workspace {
    rings: BTreeMap<String, BaseRing>,
    modules: BTreeMap<String, Arc<FinModule>>,
    submodules: BTreeMap<String, Submodule>,
    pub checks: Vec<StructureCheck>,
}

enum Failure {
    Error(String),
    Capacity(String),
    Axioms(Vec<String>),
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Error(s)
    }
}

impl From<selfpure_core::Error> for Failure {
    fn from(e: selfpure_core::Error) -> Self {
        if e.is_capacity() {
            Failure::Capacity(e.to_string())
        } else {
            Failure::Error(e.to_string())
        }
    }
}

fn axiom_lines(report: &selfpure_core::ValidationReport) -> Vec<String> {
    report
        .failures()
        .iter()
        .map(|f| format!("{} fails at {:?}", f.axiom.name(), f.witness))
        .collect()
}

struct Loader<'a> {
    doc: &'a InputDocument,
    caps: &'a Caps,
    ws: Workspace,
    failed: BTreeSet<String>,
    active: BTreeSet<String>,
}

impl Loader<'_> {
    fn record(&mut self, name: &str, kind: &'static str, failure: Option<Failure>) {
        let (failures, error, capacity) = match failure {
            None => (Vec::new(), None, false),
            Some(Failure::Axioms(a)) => (a, None, false),
            Some(Failure::Error(e)) => (Vec::new(), Some(e), false),
            Some(Failure::Capacity(e)) => (Vec::new(), Some(e), true),
        };
        if !failures.is_empty() || error.is_some() {
            self.failed.insert(name.to_string());
        }
        self.ws.checks.push(StructureCheck {
            name: name.to_string(),
            kind,
            failures,
            error,
            capacity,
        });
    }

    fn ring(&mut self, name: &str) -> Result<BaseRing, Failure> {
        if let Some(r) = self.ws.rings.get(name) {
            return Ok(r.clone());
        }
        let Some(expr) = self.doc.rings.get(name) else {
            return parse_ring_spec(name)
                .and_then(|s| s.build().map_err(|e| e.to_string()))
                .map_err(Failure::Error);
        };
        if self.failed.contains(name) {
            return Err(Failure::Error(format!("ring `{name}` is invalid")));
        }
        if !self.active.insert(name.to_string()) {
            return Err(Failure::Error(format!("ring `{name}` is defined in terms of itself")));
        }
        let built = self.build_ring(name, expr);
        self.active.remove(name);
        match built {
            Ok(r) => {
                self.ws.rings.insert(name.to_string(), r.clone());
                self.record(name, "ring", None);
                Ok(r)
            }
            Err(f) => {
                self.record(name, "ring", Some(f));
                Err(Failure::Error(format!("ring `{name}` is invalid")))
            }
        }
    }

    fn build_ring(&mut self, name: &str, expr: &RingExpr) -> Result<BaseRing, Failure> {
        Ok(match expr {
            RingExpr::Integers => BaseRing::Integers,
            RingExpr::Cyclic(n) => {
                Caps::check("ring order", *n, self.caps.ring_order)?;
                make_cyclic_ring(*n)?
            }
            RingExpr::Product([a, b]) => {
                let (a, b) = (self.ring(a)?, self.ring(b)?);
                let ring = make_product_ring(&a, &b)?;
                Caps::check(
                    "ring order",
                    ring.table().map_or(0, |t| t.order()),
                    self.caps.ring_order,
                )?;
                ring
            }
            RingExpr::Table(t) => {
                Caps::check("ring order", t.add.len(), self.caps.ring_order)?;
                let table = RingTable::from_tables(t.add.clone(), t.mul.clone(), t.zero, t.one, name)?;
                let report = validate(&table);
                if !report.is_empty() {
                    return Err(Failure::Axioms(axiom_lines(&report)));
                }
                BaseRing::finite(table)
            }
        })
    }

    fn module(&mut self, name: &str) -> Result<Arc<FinModule>, Failure> {
        if let Some(m) = self.ws.modules.get(name) {
            return Ok(m.clone());
        }
        let Some(expr) = self.doc.modules.get(name) else {
            return Err(Failure::Error(format!("unknown module `{name}`")));
        };
        if self.failed.contains(name) {
            return Err(Failure::Error(format!("module `{name}` is invalid")));
        }
        if !self.active.insert(name.to_string()) {
            return Err(Failure::Error(format!("module `{name}` is defined in terms of itself")));
        }
        let built = self.build_module(name, expr);
        self.active.remove(name);
        let kind = if matches!(expr.kind, ModuleKind::Submodule { .. }) {
            "submodule"
        } else {
            "module"
        };
        match built {
            Ok(m) => {
                self.ws.modules.insert(name.to_string(), m.clone());
                self.record(name, kind, None);
                Ok(m)
            }
            Err(f) => {
                self.record(name, kind, Some(f));
                Err(Failure::Error(format!("module `{name}` is invalid")))
            }
        }
    }

    /// The module's declared ring; abelian groups need not declare one.
    fn explicit_ring(&mut self, expr: &ModuleExpr) -> Result<BaseRing, Failure> {
        match &expr.ring {
            Some(r) => self.ring(r),
            None => Ok(BaseRing::Integers),
        }
    }

    fn check_ring(&mut self, expr: &ModuleExpr, actual: &BaseRing) -> Result<(), Failure> {
        if let Some(r) = &expr.ring {
            if self.ring(r)? != *actual {
                return Err(Failure::Error(format!("ring `{r}` does not match the constituents")));
            }
        }
        Ok(())
    }

    fn elements(&self, m: &FinModule, refs: &[ElementRef]) -> Result<Vec<usize>, Failure> {
        refs.iter()
            .map(|r| match r {
                ElementRef::Index(i) if *i < m.order() => Ok(*i),
                ElementRef::Index(i) => Err(Failure::Error(format!("element {i} outside {}", m.label()))),
                ElementRef::Name(n) => m
                    .element_by_name(n)
                    .or_else(|| n.parse().ok().filter(|&i: &usize| i < m.order()))
                    .ok_or_else(|| Failure::Error(format!("no element `{n}` in {}", m.label()))),
            })
            .collect()
    }

    fn build_module(&mut self, name: &str, expr: &ModuleExpr) -> Result<Arc<FinModule>, Failure> {
        let caps = self.caps;
        let module = match &expr.kind {
            ModuleKind::Cyclic(n) => {
                let ring = self.explicit_ring(expr)?;
                FinModule::cyclic(&ring, *n)?.with_label(name)
            }
            ModuleKind::CyclicGroups(ns) => {
                let ring = self.explicit_ring(expr)?;
                let parts = ns
                    .iter()
                    .map(|&n| FinModule::cyclic(&ring, n).map(Arc::new))
                    .collect::<Result<Vec<_>, _>>()?;
                (*direct_sum(&ring, &parts, caps)?.module).clone().with_label(name)
            }
            ModuleKind::Free(k) => {
                let ring = self.explicit_ring(expr)?;
                let regular = Arc::new(FinModule::regular(&ring)?);
                (*direct_sum(&ring, &vec![regular; *k], caps)?.module)
                    .clone()
                    .with_label(name)
            }
            ModuleKind::DirectSum(names) => {
                let parts = names.iter().map(|n| self.module(n)).collect::<Result<Vec<_>, _>>()?;
                let ring = match (parts.first(), &expr.ring) {
                    (Some(p), _) => p.ring().clone(),
                    (None, Some(r)) => self.ring(r)?,
                    (None, None) => return Err(Failure::Error(String::from("empty direct sum needs `ring`"))),
                };
                self.check_ring(expr, &ring)?;
                (*direct_sum(&ring, &parts, caps)?.module).clone().with_label(name)
            }
            ModuleKind::Product([a, b]) => {
                let (a, b) = (self.module(a)?, self.module(b)?);
                let ring = match &expr.ring {
                    Some(r) => self.ring(r)?,
                    None => make_product_ring(a.ring(), b.ring())?,
                };
                product_module(&ring, &a, &b)?.with_label(name)
            }
            ModuleKind::Submodule { of, generators } => {
                let parent = self.module(of)?;
                self.check_ring(expr, parent.ring())?;
                let gens = self.elements(&parent, generators)?;
                let sub = Submodule::generated(&parent, &gens)?;
                let module = (**sub.module()).clone().with_label(name);
                self.ws.submodules.insert(name.to_string(), sub);
                module
            }
            ModuleKind::Quotient { of, by } => {
                let parent = self.module(of)?;
                self.check_ring(expr, parent.ring())?;
                let gens = self.elements(&parent, by)?;
                let sub = Submodule::generated(&parent, &gens)?;
                parent.quotient(&sub)?.0.with_label(name)
            }
            ModuleKind::Table(t) => {
                let ring = self.explicit_ring(expr)?;
                let m = FinModule::from_tables(ring, t.add.clone(), t.zero, t.action.clone(), name)?;
                let report = validate(&m);
                if !report.is_empty() {
                    return Err(Failure::Axioms(axiom_lines(&report)));
                }
                m
            }
        };
        Caps::check("module order", module.order(), caps.module_order)?;
        Ok(Arc::new(module))
    }
}

impl Workspace {
    /// Builds and validates every structure of `doc`, rings first. Invalid
    /// structures are recorded in `checks` and left out.
    pub fn load(doc: &InputDocument, caps: &Caps) -> Workspace {
        let mut loader = Loader {
            doc,
            caps,
            ws: Workspace::default(),
            failed: BTreeSet::new(),
            active: BTreeSet::new(),
        };
        for name in doc.rings.keys() {
            let _ = loader.ring(name);
        }
        for name in doc.modules.keys() {
            let _ = loader.module(name);
        }
        let mut ws = loader.ws;
        ws.checks.sort_by_key(|c| (c.kind != "ring", c.name.clone()));
        ws
    }

    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(StructureCheck::valid)
    }

    pub fn module(&self, name: &str) -> Result<&Arc<FinModule>, String> {
        self.modules.get(name).ok_or_else(|| format!("unknown module `{name}`"))
    }

    pub fn submodule(&self, name: &str) -> Result<&Submodule, String> {
        self.submodules
            .get(name)
            .ok_or_else(|| format!("`{name}` is not defined as a submodule"))
    }
}
