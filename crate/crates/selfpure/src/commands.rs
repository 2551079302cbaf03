//! Command implementations producing report bodies.

use std::sync::Arc;
use std::time::Instant;

use selfpure_core::filter::{filter_closure, filter_contains};
use selfpure_core::harness::{verify, Executor, TheoremId};
use selfpure_core::purity::{
    classify as classify_module, extends_to_ring, is_m_pure, is_pure, is_self_pure, recheck_equation_witness,
    FailingMap, Flag, PurityVerdict, PurityWitness,
};
use selfpure_core::zoo::{module_zoo, ring_catalog, RingSpec, ZooScope};
use selfpure_core::{kernel, Caps, FinModule, Submodule};

use crate::input::{Property, StructureCheck, Workspace};
use crate::report::{
    Check, Classification, FailingMapJson, FlagJson, RingEntry, Rings, ScopeEcho, StructureJson, TheoremJson, Theorems,
    Validation, ViolationJson, WitnessJson, Zoo, ZooEntry,
};

/// Failures mapped onto the exit-code contract.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unusable input: bad JSON, unknown names, invalid structures (exit 2).
    #[error("{0}")]
    Input(String),
    /// A capacity limit was hit (exit 3).
    #[error("{0}")]
    Capacity(String),
    /// Anything else, including broken internal invariants (exit 1).
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Capacity(_) => 3,
            CliError::Failure(_) => 1,
        }
    }
}

impl From<selfpure_core::Error> for CliError {
    fn from(e: selfpure_core::Error) -> Self {
        use selfpure_core::Error as E;
        match e {
            E::Capacity { .. } => CliError::Capacity(e.to_string()),
            E::Invariant(_) => CliError::Failure(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

fn failing_map_json(w: &FailingMap, rechecked: bool) -> FailingMapJson {
    FailingMapJson {
        ideal: w.ideal.describe(),
        map: w.describe(),
        kernel: kernel(&w.map).describe(),
        rechecked,
    }
}

fn flag_json(flag: &Flag) -> FlagJson {
    FlagJson {
        holds: flag.holds(),
        witness: flag.witness().map(|w| failing_map_json(w, w.recheck())),
    }
}

pub fn classify(ws: &Workspace, name: &str, caps: &Caps) -> Result<Classification, CliError> {
    let m = ws.module(name).map_err(CliError::Input)?;
    let rec = classify_module(m, caps)?;
    Ok(Classification {
        module: rec.label.clone(),
        ring: m.ring().label().to_string(),
        order: m.order(),
        injective: flag_json(&rec.injective),
        absolutely_pure: flag_json(&rec.absolutely_pure),
        quasi_injective: flag_json(&rec.quasi_injective),
        absolutely_self_pure: flag_json(&rec.absolutely_self_pure),
        notes: rec.notes,
    })
}

fn witness_json(
    sub: &Submodule,
    filter_module: &FinModule,
    v: &PurityVerdict,
    caps: &Caps,
) -> Result<WitnessJson, CliError> {
    let parent = sub.parent();
    let (kind, detail, rechecked) = match &v.witness {
        PurityWitness::None => ("none", String::new(), true),
        PurityWitness::Complement(c) => (
            "complement",
            c.describe(),
            c.len() * sub.len() == parent.order() && c.meets_trivially(sub),
        ),
        PurityWitness::FailingMap(w) => {
            let into_parent = w.map.compose(&sub.inclusion())?;
            let ok = w.recheck()
                && extends_to_ring(&into_parent).is_some()
                && filter_contains(&filter_closure(filter_module), &kernel(&w.map));
            ("failing-map", w.describe(), ok)
        }
        PurityWitness::Equation(w) => {
            let sol: Vec<String> = w.solution.iter().map(|&x| parent.element_name(x)).collect();
            (
                "equation",
                format!(
                    "{} (solvable in {} by ({}))",
                    w.describe(parent),
                    parent.label(),
                    sol.join(", ")
                ),
                recheck_equation_witness(sub, w),
            )
        }
        PurityWitness::NoComplement => (
            "no-complement",
            String::from("no complement exists"),
            sub.complement(caps)?.is_none(),
        ),
    };
    Ok(WitnessJson {
        kind: kind.to_string(),
        detail,
        rechecked,
    })
}

pub fn check(
    ws: &Workspace,
    property: Property,
    submodule: &str,
    module: Option<&str>,
    caps: &Caps,
) -> Result<Check, CliError> {
    let sub = ws.submodule(submodule).map_err(CliError::Input)?;
    let filter_module: Arc<FinModule> = match (property, module) {
        (Property::MPure, Some(m)) => ws.module(m).map_err(CliError::Input)?.clone(),
        (Property::MPure, None) => return Err(CliError::Input(String::from("m-pure needs --module"))),
        (_, Some(_)) => return Err(CliError::Input("--module only applies to m-pure".to_string())),
        (_, None) => sub.module().clone(),
    };
    let verdict = match property {
        Property::SelfPure => is_self_pure(sub, caps)?,
        Property::MPure => is_m_pure(sub, &filter_module, caps)?,
        Property::Pure => is_pure(sub, caps)?,
    };
    Ok(Check {
        property: property.name().to_string(),
        submodule: submodule.to_string(),
        parent: sub.parent().label().to_string(),
        filter_module: module.map(str::to_string),
        holds: verdict.holds,
        witness: witness_json(sub, &filter_module, &verdict, caps)?,
    })
}

pub fn scope_echo(scope: &ZooScope) -> ScopeEcho {
    ScopeEcho {
        rings: scope.rings.iter().map(RingSpec::label).collect(),
        module_order_cap: scope.module_order_cap,
        free_rank_cap: scope.free_rank_cap,
        chain_depth: scope.chain_depth,
        copies: scope.copies,
        products: scope.products.iter().map(|&(a, b)| [a, b]).collect(),
        oracle_order_cap: scope.oracle_order_cap,
        seed: scope.seed,
    }
}

pub fn parse_theorems(names: &[String]) -> Result<Vec<TheoremId>, CliError> {
    names
        .iter()
        .map(|n| {
            TheoremId::from_name(n).ok_or_else(|| {
                let known: Vec<&str> = TheoremId::ALL.iter().map(|t| t.name()).collect();
                CliError::Input(format!("unknown theorem `{n}` (known: {})", known.join(", ")))
            })
        })
        .collect()
}

/// Runs each requested check separately so that each gets its own timing.
pub fn verify_theorems<E: Executor>(scope: &ZooScope, ids: &[TheoremId], exec: &E) -> Result<Theorems, CliError> {
    let mut reports = Vec::new();
    for &id in TheoremId::ALL.iter().filter(|t| ids.contains(t)) {
        let start = Instant::now();
        let r = verify(scope, exec, &[id])?.remove(0);
        reports.push(TheoremJson {
            id: id.name().to_string(),
            statement: id.statement().to_string(),
            passed: r.passed(),
            instances: r.instances,
            violations: r
                .violations
                .into_iter()
                .map(|v| ViolationJson {
                    instance: v.instance,
                    witness: v.witness,
                })
                .collect(),
            skipped: r.skipped,
            notes: r.notes,
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }
    Ok(Theorems {
        passed: reports.iter().all(|r| r.passed),
        scope: scope_echo(scope),
        reports,
    })
}

pub fn zoo_list(spec: RingSpec, scope: &ZooScope) -> Result<Zoo, CliError> {
    let ring = spec.build()?;
    let zoo = module_zoo(&ring, scope.module_order_cap, scope.free_rank_cap, &scope.caps)?;
    Ok(Zoo {
        ring: spec.label(),
        module_order_cap: scope.module_order_cap,
        free_rank_cap: scope.free_rank_cap,
        modules: zoo
            .iter()
            .enumerate()
            .map(|(index, m)| ZooEntry {
                index,
                label: m.label().to_string(),
                order: m.order(),
                exponent: m.exponent(),
            })
            .collect(),
    })
}

pub fn zoo_rings(max_order: usize, caps: &Caps) -> Result<Rings, CliError> {
    let cat = ring_catalog(max_order, caps)?;
    let rings = cat
        .iter()
        .map(|e| RingEntry {
            label: e.spec.label(),
            order: e.spec.order(),
            commutative: e.ring.table().is_none_or(|t| t.is_commutative()),
            isomorphic_to: e.isomorphic_to.map(|i| cat[i].spec.label()),
        })
        .collect();
    Ok(Rings { max_order, rings })
}

pub fn validation(ws: &Workspace) -> Validation {
    let structures = ws
        .checks
        .iter()
        .map(|c: &StructureCheck| StructureJson {
            name: c.name.clone(),
            kind: c.kind.to_string(),
            valid: c.valid(),
            failures: c.failures.clone(),
            error: c.error.clone(),
        })
        .collect();
    Validation {
        valid: ws.is_valid(),
        structures,
    }
}
