//! Serializable reports and their text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub config: ConfigEcho,
    pub elapsed_ms: u64,
    pub body: Body,
}

/// Settings that shaped the result. The worker count is left out on
/// purpose: it never changes a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub input: Option<String>,
    pub max_ring_order: usize,
    pub max_module_order: usize,
    pub max_generators: usize,
    pub max_direct_sum_order: usize,
    pub module_order_cap: usize,
    pub free_rank_cap: usize,
    pub copies: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
#[allow(clippy::large_enum_variant)]
pub enum Body {
    Classification(Classification),
    Check(Check),
    Theorems(Theorems),
    Zoo(Zoo),
    Rings(Rings),
    Validation(Validation),
    Run(Run),
    Error(ErrorBody),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailingMapJson {
    pub ideal: String,
    pub map: String,
    pub kernel: String,
    pub rechecked: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagJson {
    pub holds: bool,
    pub witness: Option<FailingMapJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub module: String,
    pub ring: String,
    pub order: usize,
    pub injective: FlagJson,
    pub absolutely_pure: FlagJson,
    pub quasi_injective: FlagJson,
    pub absolutely_self_pure: FlagJson,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    /// `none`, `complement`, `failing-map`, `equation` or `no-complement`.
    pub kind: String,
    pub detail: String,
    pub rechecked: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub property: String,
    pub submodule: String,
    pub parent: String,
    pub filter_module: Option<String>,
    pub holds: bool,
    pub witness: WitnessJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationJson {
    pub instance: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremJson {
    pub id: String,
    pub statement: String,
    pub passed: bool,
    pub instances: usize,
    pub violations: Vec<ViolationJson>,
    pub skipped: Vec<String>,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScopeEcho {
    pub rings: Vec<String>,
    pub module_order_cap: usize,
    pub free_rank_cap: usize,
    pub chain_depth: usize,
    pub copies: usize,
    pub products: Vec<[usize; 2]>,
    pub oracle_order_cap: usize,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorems {
    pub passed: bool,
    pub scope: ScopeEcho,
    pub reports: Vec<TheoremJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZooEntry {
    pub index: usize,
    pub label: String,
    pub order: usize,
    pub exponent: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Zoo {
    pub ring: String,
    pub module_order_cap: usize,
    pub free_rank_cap: usize,
    pub modules: Vec<ZooEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingEntry {
    pub label: String,
    pub order: Option<usize>,
    pub commutative: bool,
    pub isomorphic_to: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rings {
    pub max_order: usize,
    pub rings: Vec<RingEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureJson {
    pub name: String,
    pub kind: String,
    pub valid: bool,
    pub failures: Vec<String>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validation {
    pub valid: bool,
    pub structures: Vec<StructureJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Run {
    pub results: Vec<Body>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub message: String,
    pub exit_code: u8,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        render(&self.body, &mut out);
        out
    }
}

/// Left-aligned columns, two spaces apart.
fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            line.push_str(cell);
            if c + 1 < row.len() {
                line.extend(std::iter::repeat_n(' ', widths[c] - cell.chars().count() + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn yes(b: bool) -> String {
    String::from(if b { "yes" } else { "no" })
}

fn render(body: &Body, out: &mut String) {
    match body {
        Body::Classification(c) => {
            let _ = writeln!(out, "{} over {} (order {})", c.module, c.ring, c.order);
            let mut rows = vec![vec!["property".into(), "holds".into(), "witness".into()]];
            for (name, f) in [
                ("injective", &c.injective),
                ("absolutely pure", &c.absolutely_pure),
                ("quasi-injective", &c.quasi_injective),
                ("absolutely self pure", &c.absolutely_self_pure),
            ] {
                let w = f
                    .witness
                    .as_ref()
                    .map(|w| format!("{} (kernel {})", w.map, w.kernel))
                    .unwrap_or_default();
                rows.push(vec![name.into(), yes(f.holds), w]);
            }
            out.push_str(&table(&rows));
            for n in &c.notes {
                let _ = writeln!(out, "note: {n}");
            }
        }
        Body::Check(c) => {
            let filter = c
                .filter_module
                .as_ref()
                .map(|m| format!(" relative to {m}"))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "{}: {} ≤ {}{filter}: {}",
                c.property,
                c.submodule,
                c.parent,
                if c.holds { "holds" } else { "fails" }
            );
            if c.witness.kind != "none" {
                let _ = writeln!(out, "witness ({}): {}", c.witness.kind, c.witness.detail);
            }
        }
        Body::Theorems(t) => {
            let mut rows = vec![vec![
                "theorem".into(),
                "instances".into(),
                "violations".into(),
                "result".into(),
                "ms".into(),
            ]];
            for r in &t.reports {
                rows.push(vec![
                    r.id.clone(),
                    r.instances.to_string(),
                    r.violations.len().to_string(),
                    String::from(if r.passed { "pass" } else { "FAIL" }),
                    r.elapsed_ms.to_string(),
                ]);
            }
            out.push_str(&table(&rows));
            for r in &t.reports {
                for n in &r.notes {
                    let _ = writeln!(out, "{}: {n}", r.id);
                }
                for s in &r.skipped {
                    let _ = writeln!(out, "{}: skipped: {s}", r.id);
                }
                for v in &r.violations {
                    let _ = writeln!(out, "{}: VIOLATION in {}: {}", r.id, v.instance, v.witness);
                }
            }
            if !t.passed {
                out.push_str("every checked statement is a theorem, so a violation indicates an implementation bug\n");
            }
        }
        Body::Zoo(z) => {
            let _ = writeln!(out, "modules over {} of order ≤ {}", z.ring, z.module_order_cap);
            let mut rows = vec![vec!["#".into(), "order".into(), "exponent".into(), "module".into()]];
            for m in &z.modules {
                rows.push(vec![
                    m.index.to_string(),
                    m.order.to_string(),
                    m.exponent.to_string(),
                    m.label.clone(),
                ]);
            }
            out.push_str(&table(&rows));
        }
        Body::Rings(r) => {
            let mut rows = vec![vec![
                "ring".into(),
                "order".into(),
                "commutative".into(),
                "isomorphic to".into(),
            ]];
            for e in &r.rings {
                rows.push(vec![
                    e.label.clone(),
                    e.order.map_or_else(|| String::from("∞"), |o| o.to_string()),
                    yes(e.commutative),
                    e.isomorphic_to.clone().unwrap_or_default(),
                ]);
            }
            out.push_str(&table(&rows));
        }
        Body::Validation(v) => {
            let mut rows = vec![vec!["structure".into(), "kind".into(), "valid".into()]];
            for s in &v.structures {
                rows.push(vec![s.name.clone(), s.kind.clone(), yes(s.valid)]);
            }
            out.push_str(&table(&rows));
            for s in &v.structures {
                if let Some(e) = &s.error {
                    let _ = writeln!(out, "{}: {e}", s.name);
                }
                for f in &s.failures {
                    let _ = writeln!(out, "{}: {f}", s.name);
                }
            }
        }
        Body::Run(r) => {
            for (i, b) in r.results.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                render(b, out);
            }
        }
        Body::Error(e) => {
            let _ = writeln!(out, "error: {}", e.message);
        }
    }
}
