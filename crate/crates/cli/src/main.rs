use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use domchrom::audit::{audit, AuditOptions, AUDIT_VERTEX_CAP};
use domchrom::formulas::Param;
use domchrom::invariants::{chromatic_number, domination_number, total_domination_number};
use domchrom::io::{self, Format};
use domchrom::perturbation::{
    dom_bondage, dom_stability, SweepOptions, BONDAGE_EDGE_CAP, STABILITY_VERTEX_CAP,
};
use domchrom::{dom_chromatic, dom_chromatic_oracle, Budget, Error, FamilySpec, Graph};

#[derive(Parser)]
#[command(
    name = "domchrom",
    version,
    about = "Dominated colorings: generate, solve, audit, perturb"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Dimacs,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Edgelist => Format::EdgeList,
            FormatArg::Dimacs => Format::Dimacs,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum InvariantArg {
    Chi,
    Gamma,
    GammaT,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParamArg {
    Domchrom,
    Stability,
    Bondage,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Vertex,
    Edge,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family instance as a graph file.
    Gen {
        spec: String,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
    },
    /// Solve a graph given as a file, a family spec, or `-` for stdin.
    Solve {
        input: String,
        /// Dominated chromatic number with a certificate (the default).
        #[arg(long, conflicts_with = "invariant")]
        domchrom: bool,
        #[arg(long, value_enum)]
        invariant: Option<InvariantArg>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
        /// Wall-clock budget in milliseconds.
        #[arg(long)]
        budget: Option<u64>,
        /// Cross-check against the partition oracle up to this many vertices.
        #[arg(long)]
        oracle_cap: Option<usize>,
    },
    /// Compare predictions with the solver over a family range.
    Audit {
        #[arg(long)]
        family: String,
        #[arg(long, value_enum, default_value = "domchrom")]
        param: ParamArg,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<String>,
        /// Per-instance budget in milliseconds.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 9)]
        oracle_cap: usize,
        #[arg(long, default_value_t = AUDIT_VERTEX_CAP)]
        vertex_cap: usize,
    },
    /// Dom-stability (vertex) or dom-bondage (edge) by exhaustive sweep.
    Perturb {
        input: String,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = STABILITY_VERTEX_CAP)]
        max_vertices: usize,
        #[arg(long, default_value_t = BONDAGE_EDGE_CAP)]
        max_edges: usize,
    },
}

enum Failure {
    /// Audit found a disagreement outside the errata list.
    Disagreement,
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(match e {
            Error::BudgetExceeded(ms) => format!("budget exceeded ({ms} ms)"),
            Error::UnknownFamily(f) => format!("unknown family `{f}`"),
            Error::Parse { line, reason } => format!("malformed graph file, line {line}: {reason}"),
            e => e.to_string(),
        })
    }
}

fn read_graph(input: &str, format: Format) -> Result<Graph, Failure> {
    if input == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("cannot read stdin: {e}")))?;
        return Ok(io::parse(&text, format)?);
    }
    if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input)
            .map_err(|e| Failure::Input(format!("cannot read `{input}`: {e}")))?;
        return Ok(io::parse(&text, format)?);
    }
    let spec: FamilySpec = input.parse()?;
    Ok(spec.generate()?)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Gen { spec, format } => {
            let spec: FamilySpec = spec.parse()?;
            Ok(io::write(&spec.generate()?, format.into()))
        }
        Command::Solve {
            input,
            domchrom: _,
            invariant,
            format,
            budget,
            oracle_cap,
        } => {
            let g = read_graph(&input, format.into())?;
            let budget = Budget::from_option(budget);
            let out = match invariant {
                None => {
                    let sol = dom_chromatic(&g, &budget)?;
                    if let Some(cap) = oracle_cap.filter(|&cap| g.vertex_count() <= cap) {
                        let oracle = dom_chromatic_oracle(&g, cap)?;
                        if oracle != sol.k {
                            return Err(Failure::Input(format!(
                                "solver gives {} but the oracle gives {oracle}",
                                sol.k
                            )));
                        }
                    }
                    to_json(&sol.coloring.certificate())
                }
                Some(inv) => {
                    let (name, r) = match inv {
                        InvariantArg::Chi => ("chi", chromatic_number(&g, &budget)?),
                        InvariantArg::Gamma => ("gamma", domination_number(&g, &budget)?),
                        InvariantArg::GammaT => ("gamma-t", total_domination_number(&g, &budget)?),
                    };
                    to_json(&json!({ "invariant": name, "value": r.value, "witness": r.witness }))
                }
            };
            Ok(out + "\n")
        }
        Command::Audit {
            family,
            param,
            out,
            budget,
            oracle_cap,
            vertex_cap,
        } => {
            let opts = AuditOptions {
                param: match param {
                    ParamArg::Domchrom => Param::DomChromatic,
                    ParamArg::Stability => Param::Stability,
                    ParamArg::Bondage => Param::Bondage,
                },
                budget_ms: budget,
                vertex_cap,
                oracle_cap,
            };
            let report = audit(&family, &opts)?;
            let text = to_json(&report) + "\n";
            let printed = match out {
                Some(path) => {
                    std::fs::write(&path, &text)
                        .map_err(|e| Failure::Input(format!("cannot write `{path}`: {e}")))?;
                    String::new()
                }
                None => text,
            };
            if report.has_disagreement() {
                print!("{printed}");
                return Err(Failure::Disagreement);
            }
            Ok(printed)
        }
        Command::Perturb {
            input,
            mode,
            format,
            budget,
            max_vertices,
            max_edges,
        } => {
            let g = read_graph(&input, format.into())?;
            let opts = SweepOptions {
                budget: Budget::from_option(budget),
                max_vertices,
                max_edges,
            };
            let out = match mode {
                ModeArg::Vertex => {
                    to_json(&json!({ "mode": "vertex", "result": dom_stability(&g, &opts)? }))
                }
                ModeArg::Edge => {
                    to_json(&json!({ "mode": "edge", "result": dom_bondage(&g, &opts)? }))
                }
            };
            Ok(out + "\n")
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Disagreement) => {
            eprintln!("audit: disagreement outside the known errata");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
