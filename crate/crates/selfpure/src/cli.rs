//! Argument parsing and command dispatch.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use selfpure_core::harness::TheoremId;
use selfpure_core::zoo::ZooScope;
use selfpure_core::Caps;

use crate::commands::{self, CliError};
use crate::exec::RayonExecutor;
use crate::input::{parse_ring_spec, InputDocument, Property, ScopeConfig, Task, Workspace};
use crate::report::{Body, ConfigEcho, ErrorBody, Report, Run};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "selfpure",
    version,
    about = "Decide purity-type properties of finite modules"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// JSON input document.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest module order in zoo-based commands.
    #[arg(long, global = true)]
    pub module_order_cap: Option<usize>,
    /// Largest free rank `k` whose submodules and quotients seed a zoo.
    #[arg(long, global = true)]
    pub free_rank_cap: Option<usize>,
    /// Largest number of copies in direct-sum checks.
    #[arg(long, global = true)]
    pub copies: Option<usize>,
    /// Worker threads; reports do not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, default_value_t = Caps::default().ring_order)]
    pub max_ring_order: usize,
    #[arg(long, global = true, default_value_t = Caps::default().module_order)]
    pub max_module_order: usize,
    #[arg(long, global = true, default_value_t = Caps::default().generators)]
    pub max_generators: usize,
    #[arg(long, global = true, default_value_t = Caps::default().direct_sum_order)]
    pub max_direct_sum_order: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Injective, absolutely pure, quasi-injective and absolutely self pure flags of a module.
    Classify { module: String },
    /// Self purity, M-purity or purity of a named submodule in its parent.
    Check {
        #[arg(value_enum)]
        property: Property,
        submodule: String,
        /// Module whose annihilator filter is used (m-pure only).
        #[arg(long)]
        module: Option<String>,
    },
    /// Exhaustively check the structural theorems on a zoo scope.
    VerifyTheorems {
        /// Only run these checks (repeatable).
        #[arg(long = "theorem")]
        theorems: Vec<String>,
        /// Comma-separated rings, e.g. `Z,Z_4,Z_2×Z_2`.
        #[arg(long, value_delimiter = ',')]
        rings: Vec<String>,
        #[arg(long)]
        chain_depth: Option<usize>,
        #[arg(long)]
        oracle_order_cap: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Inspect the ring and module catalogues.
    Zoo {
        #[command(subcommand)]
        what: ZooCommand,
    },
    /// Validate every structure of the input document.
    Validate,
    /// Run the tasks listed in the input document.
    Run,
}

#[derive(Debug, Subcommand)]
pub enum ZooCommand {
    /// Modules over one ring, up to isomorphism.
    List {
        #[arg(long, default_value = "Z")]
        ring: String,
    },
    /// Small rings, with isomorphisms noted.
    Rings {
        #[arg(long, default_value_t = 8)]
        max_order: usize,
    },
}

impl GlobalArgs {
    fn caps(&self) -> Caps {
        Caps {
            ring_order: self.max_ring_order,
            module_order: self.max_module_order,
            generators: self.max_generators,
            direct_sum_order: self.max_direct_sum_order,
        }
    }

    /// Default scope, then the document's `scope`, then flags.
    fn scope(&self, doc: Option<&ScopeConfig>) -> Result<ZooScope, CliError> {
        let mut scope = ZooScope {
            caps: self.caps(),
            ..ZooScope::default()
        };
        if let Some(cfg) = doc {
            scope = cfg.apply(scope).map_err(CliError::Input)?;
        }
        let flags = ScopeConfig {
            module_order_cap: self.module_order_cap,
            free_rank_cap: self.free_rank_cap,
            copies: self.copies,
            ..ScopeConfig::default()
        };
        flags.apply(scope).map_err(CliError::Input)
    }
}

fn load_document(path: &PathBuf) -> Result<InputDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

struct Session {
    doc: Option<InputDocument>,
    ws: Option<Workspace>,
}

impl Session {
    fn workspace(&self) -> Result<&Workspace, CliError> {
        self.ws
            .as_ref()
            .ok_or_else(|| CliError::Input(String::from("this command needs --input")))
    }
}

fn executor(global: &GlobalArgs) -> Result<RayonExecutor, CliError> {
    let jobs = global
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    RayonExecutor::new(jobs).map_err(|e| CliError::Failure(e.to_string()))
}

fn theorems_body(global: &GlobalArgs, scope: ZooScope, names: &[String]) -> Result<(Body, u8), CliError> {
    let ids = if names.is_empty() {
        TheoremId::ALL.to_vec()
    } else {
        commands::parse_theorems(names)?
    };
    let t = commands::verify_theorems(&scope, &ids, &executor(global)?)?;
    let code = if t.passed { 0 } else { 1 };
    Ok((Body::Theorems(t), code))
}

fn run_task(global: &GlobalArgs, session: &Session, task: &Task) -> Result<(Body, u8), CliError> {
    let caps = global.caps();
    let ws = session.workspace()?;
    match task {
        Task::Classify(name) => Ok((Body::Classification(commands::classify(ws, name, &caps)?), 0)),
        Task::Check {
            property,
            submodule,
            module,
        } => Ok((
            Body::Check(commands::check(ws, *property, submodule, module.as_deref(), &caps)?),
            0,
        )),
        Task::VerifyTheorems(cfg) => {
            let scope = cfg.apply(global.scope(None)?).map_err(CliError::Input)?;
            theorems_body(global, scope, cfg.theorems.as_deref().unwrap_or(&[]))
        }
    }
}

fn dispatch(cli: &Cli, session: &Session) -> Result<(Body, u8), CliError> {
    let global = &cli.global;
    let caps = global.caps();
    match &cli.command {
        Command::Classify { module } => Ok((
            Body::Classification(commands::classify(session.workspace()?, module, &caps)?),
            0,
        )),
        Command::Check {
            property,
            submodule,
            module,
        } => Ok((
            Body::Check(commands::check(
                session.workspace()?,
                *property,
                submodule,
                module.as_deref(),
                &caps,
            )?),
            0,
        )),
        Command::VerifyTheorems {
            theorems,
            rings,
            chain_depth,
            oracle_order_cap,
            seed,
        } => {
            let doc_scope = session.doc.as_ref().and_then(|d| d.scope.as_ref());
            let mut scope = global.scope(doc_scope)?;
            let extra = ScopeConfig {
                rings: (!rings.is_empty()).then(|| rings.clone()),
                chain_depth: *chain_depth,
                oracle_order_cap: *oracle_order_cap,
                seed: *seed,
                ..ScopeConfig::default()
            };
            scope = extra.apply(scope).map_err(CliError::Input)?;
            let names: Vec<String> = if theorems.is_empty() {
                doc_scope.and_then(|s| s.theorems.clone()).unwrap_or_default()
            } else {
                theorems.clone()
            };
            theorems_body(global, scope, &names)
        }
        Command::Zoo { what } => match what {
            ZooCommand::List { ring } => {
                let spec = parse_ring_spec(ring).map_err(CliError::Input)?;
                Ok((Body::Zoo(commands::zoo_list(spec, &global.scope(None)?)?), 0))
            }
            ZooCommand::Rings { max_order } => Ok((Body::Rings(commands::zoo_rings(*max_order, &caps)?), 0)),
        },
        Command::Validate => {
            let v = commands::validation(session.workspace()?);
            let code = if v.valid {
                0
            } else {
                validation_code(session.workspace()?)
            };
            Ok((Body::Validation(v), code))
        }
        Command::Run => {
            let doc = session
                .doc
                .as_ref()
                .ok_or_else(|| CliError::Input(String::from("run needs --input")))?;
            let mut results = Vec::new();
            let mut code = 0;
            for task in &doc.tasks {
                let (body, c) = run_task(global, session, task).unwrap_or_else(|e| error_body(&e));
                if code == 0 {
                    code = c;
                }
                results.push(body);
            }
            Ok((Body::Run(Run { results }), code))
        }
    }
}

fn validation_code(ws: &Workspace) -> u8 {
    let invalid: Vec<_> = ws.checks.iter().filter(|c| !c.valid()).collect();
    if !invalid.is_empty() && invalid.iter().all(|c| c.capacity) {
        3
    } else {
        2
    }
}

fn error_body(e: &CliError) -> (Body, u8) {
    let code = e.exit_code();
    (
        Body::Error(ErrorBody {
            message: e.to_string(),
            exit_code: code,
        }),
        code,
    )
}

/// Runs one command and returns its report with the process exit code.
///
/// The input document is loaded and every structure in it validated
/// before anything else runs; an invalid document stops the command with
/// the validation report.
pub fn execute(cli: &Cli) -> (Report, u8) {
    let start = Instant::now();
    let global = &cli.global;
    let mut session = Session { doc: None, ws: None };
    let loaded: Result<(), CliError> = (|| {
        if let Some(path) = &global.input {
            let doc = load_document(path)?;
            session.ws = Some(Workspace::load(&doc, &global.caps()));
            session.doc = Some(doc);
        }
        Ok(())
    })();
    let (body, code) = match loaded {
        Err(e) => error_body(&e),
        Ok(()) => match &session.ws {
            Some(ws) if !ws.is_valid() && !matches!(cli.command, Command::Validate) => {
                (Body::Validation(commands::validation(ws)), validation_code(ws))
            }
            _ => dispatch(cli, &session).unwrap_or_else(|e| error_body(&e)),
        },
    };
    let scope = global
        .scope(session.doc.as_ref().and_then(|d| d.scope.as_ref()))
        .unwrap_or_default();
    let config = ConfigEcho {
        input: global.input.as_ref().map(|p| p.display().to_string()),
        max_ring_order: global.max_ring_order,
        max_module_order: global.max_module_order,
        max_generators: global.max_generators,
        max_direct_sum_order: global.max_direct_sum_order,
        module_order_cap: scope.module_order_cap,
        free_rank_cap: scope.free_rank_cap,
        copies: scope.copies,
    };
    let report = Report {
        tool: String::from("selfpure"),
        version: String::from(env!("CARGO_PKG_VERSION")),
        command: command_name(&cli.command).to_string(),
        config,
        elapsed_ms: start.elapsed().as_millis() as u64,
        body,
    };
    (report, code)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classify { .. } => "classify",
        Command::Check { .. } => "check",
        Command::VerifyTheorems { .. } => "verify-theorems",
        Command::Zoo {
            what: ZooCommand::List { .. },
        } => "zoo list",
        Command::Zoo {
            what: ZooCommand::Rings { .. },
        } => "zoo rings",
        Command::Validate => "validate",
        Command::Run => "run",
    }
}

/// Renders the report in the requested format.
pub fn render(cli: &Cli, report: &Report) -> String {
    match cli.global.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    }
}
