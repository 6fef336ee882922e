use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use copwin::game::{GameConfig, TeleportCapture, DEFAULT_STATE_BUDGET};
use copwin::graph6::emit_graph6;
use copwin::strategy::{build_theorem1_plan, simulate, verify_key_inequality, Outcome, RobberPolicy};
use copwin::Graph;
use copwin_cli::commands::{solve_record, trap_record};
use copwin_cli::report::Record;
use copwin_cli::scan::{scan_chvatal, scan_graphs, Check, ScanOptions};
use copwin_cli::source::{enumeration, family_graphs, read_graph6_file, Item};
use copwin_cli::{exit, Status};

#[derive(Parser)]
#[command(name = "copwin", version, about = "Exact Cops and Robbers solver and theorem scanner")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// graph6 file, one graph per line (`-` for stdin)
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Named graph, e.g. `petersen`, `cycle:5`, `incidence:3`, `connected:5`
    #[arg(long, global = true)]
    family: Option<String>,
    /// Largest order for the built-in enumeration
    #[arg(long, global = true)]
    nmax: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = VariantArg::Standard)]
    variant: VariantArg,
    /// Teleport game: only adjacency to a cop is deadly, not sharing its vertex
    #[arg(long, global = true)]
    open_capture: bool,
    /// The robber must move every round
    #[arg(long, global = true)]
    no_pass_robber: bool,
    /// Stop cop-number searches at this many cops
    #[arg(long, global = true)]
    max_k: Option<usize>,
    /// Cap on estimated game states per solve
    #[arg(long, global = true, default_value_t = DEFAULT_STATE_BUDGET)]
    budget: u64,
    /// Trap parameter (default sqrt(n))
    #[arg(long, global = true)]
    alpha: Option<f64>,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// One JSON object per line instead of key=value text
    #[arg(long, global = true)]
    json: bool,
    /// Solve disconnected graphs component by component
    #[arg(long, global = true)]
    allow_disconnected: bool,
    /// Add wall-clock times to scan records
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Standard,
    Teleport,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    Optimal,
    Greedy,
}

#[derive(Subcommand)]
enum Command {
    /// Cop number of each input graph
    Solve,
    /// Run a theorem or conjecture check over a corpus
    Scan {
        /// theorem1, lemma4, lemma5, conj_sqrt_n, conj_teleport, preceq_equiv or chvatal
        #[arg(long)]
        check: Check,
        /// Hypergraph samples for the `chvatal` check
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Print graph6 lines for a named family
    Gen {
        /// `petersen`, `hoffman_singleton`, `cycle:N`, `path:N`, `complete:N`,
        /// `polarity:Q`, `incidence:Q` or `connected:N`
        family: String,
    },
    /// Trap thresholds of every vertex
    Trap,
    /// Check the floor-square-root inequality used by the shrinking argument
    Ineq {
        #[arg(long, default_value_t = 1_000_000)]
        m_max: u64,
    },
    /// Play the constructive strategy against a robber and print the trace
    Simulate {
        #[arg(long, value_enum, default_value_t = PolicyArg::Optimal)]
        policy: PolicyArg,
        /// Round cap (default 4n)
        #[arg(long)]
        max_rounds: Option<usize>,
    },
}

struct Out {
    w: BufWriter<io::Stdout>,
    json: bool,
}

impl Out {
    fn record(&mut self, r: &Record) {
        // a closed pipe is not worth a panic
        let _ = writeln!(self.w, "{}", r.render(self.json));
    }

    fn line(&mut self, s: &str) {
        let _ = writeln!(self.w, "{s}");
    }
}

fn usage(msg: impl std::fmt::Display) -> i32 {
    eprintln!("copwin: {msg}");
    exit::USAGE
}

fn game_config(c: &Common) -> GameConfig {
    let mut cfg = match c.variant {
        VariantArg::Standard => GameConfig::standard(1),
        VariantArg::Teleport => GameConfig::teleport(1),
    }
    .with_budget(c.budget);
    if c.open_capture {
        cfg.teleport_capture = TeleportCapture::Open;
    }
    cfg.robber_may_pass = !c.no_pass_robber;
    cfg.allow_disconnected = c.allow_disconnected;
    cfg.max_cops = c.max_k;
    cfg
}

/// Graphs from `--input` or `--family`, else the enumeration up to `--nmax`.
fn load(c: &Common, default_nmax: Option<usize>) -> Result<Vec<Item>, i32> {
    match (&c.input, &c.family, c.nmax.or(default_nmax)) {
        (Some(path), None, _) => read_graph6_file(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display()))),
        (None, Some(spec), _) => family_graphs(spec)
            .map(|gs| {
                gs.into_iter()
                    .enumerate()
                    .map(|(i, g)| Item { index: i + 1, graph: Ok(g) })
                    .collect()
            })
            .map_err(usage),
        (None, None, Some(nmax)) => enumeration(nmax).map_err(usage),
        (Some(_), Some(_), _) => Err(usage("--input and --family are exclusive")),
        (None, None, None) => Err(usage("no graphs given (use --input, --family or --nmax)")),
    }
}

fn run(cli: Cli) -> i32 {
    let c = &cli.common;
    let mut out = Out {
        w: BufWriter::new(io::stdout()),
        json: c.json,
    };
    let mut status = Status::default();
    match cli.command {
        Command::Solve => {
            let items = match load(c, None) {
                Ok(items) => items,
                Err(code) => return code,
            };
            let cfg = game_config(c);
            for item in items {
                let r = match item.graph {
                    Ok(g) => solve_record(&g, &cfg),
                    Err(e) => Record::new()
                        .with("item", item.index)
                        .with("status", "error")
                        .with("error", e.to_string()),
                };
                match r.get("status").map(ToString::to_string).as_deref() {
                    Some("unresolved") => status.resource = true,
                    Some("error") => status.input_error = true,
                    _ => {}
                }
                out.record(&r);
            }
        }
        Command::Scan { check, samples } => {
            let opts = ScanOptions {
                budget: c.budget,
                seed: c.seed,
                teleport_capture: if c.open_capture {
                    TeleportCapture::Open
                } else {
                    TeleportCapture::Closed
                },
                timing: c.timing,
            };
            let mut header = Record::new()
                .with("scan", check.name())
                .with("budget", c.budget)
                .with("seed", c.seed);
            if check == Check::ConjTeleport {
                header.push("capture", if c.open_capture { "open" } else { "closed" });
            }
            let output = if check == Check::Chvatal {
                header.push("samples", samples);
                out.record(&header);
                scan_chvatal(samples, &opts)
            } else {
                if c.input.is_none() && c.family.is_none() {
                    let nmax = c.nmax.unwrap_or(check.max_nmax().min(6));
                    if nmax > check.max_nmax() {
                        return usage(format!(
                            "--nmax {nmax} is above {} for the {check} check",
                            check.max_nmax()
                        ));
                    }
                    header.push("source", "enumeration");
                    header.push("nmax", nmax);
                } else {
                    header.push("source", if c.input.is_some() { "input" } else { "family" });
                }
                let items = match load(c, Some(check.max_nmax().min(6))) {
                    Ok(items) => items,
                    Err(code) => return code,
                };
                out.record(&header);
                scan_graphs(check, &items, &opts)
            };
            for r in &output.records {
                out.record(r);
            }
            out.record(&output.summary.to_record(check));
            let s = &output.summary;
            status.violation = s.fail > 0;
            status.input_error = s.errors > 0;
            status.resource = s.unresolved > 0;
        }
        Command::Gen { family } => match family_graphs(&family) {
            Ok(graphs) => {
                for g in graphs {
                    out.line(&emit_graph6(&g));
                }
            }
            Err(e) => return usage(e),
        },
        Command::Trap => {
            let items = match load(c, None) {
                Ok(items) => items,
                Err(code) => return code,
            };
            for item in items {
                let r = item.graph.and_then(|g| trap_record(&g, c.alpha));
                match r {
                    Ok(r) => out.record(&r),
                    Err(e) => {
                        status.input_error = true;
                        out.record(&Record::new().with("item", item.index).with("error", e.to_string()));
                    }
                }
            }
        }
        Command::Ineq { m_max } => {
            if m_max < 4 {
                return usage("--m-max must be at least 4");
            }
            let bad = verify_key_inequality(m_max);
            out.record(
                &Record::new()
                    .with("ineq", "key")
                    .with("m_max", m_max)
                    .with("violations", bad.len()),
            );
            for m in &bad {
                out.record(&Record::new().with("violation", *m));
            }
            status.violation = !bad.is_empty();
        }
        Command::Simulate { policy, max_rounds } => {
            let items = match load(c, None) {
                Ok(items) => items,
                Err(code) => return code,
            };
            let Some(item) = items.into_iter().next() else {
                return usage("no graph in input");
            };
            let g: Graph = match item.graph {
                Ok(g) => g,
                Err(e) => return usage(e),
            };
            let policy = match policy {
                PolicyArg::Optimal => RobberPolicy::Optimal,
                PolicyArg::Greedy => RobberPolicy::GreedyDistance,
            };
            let trace = match build_theorem1_plan(&g).and_then(|plan| simulate(&g, &plan, policy, max_rounds)) {
                Ok(t) => t,
                Err(e @ copwin::Error::BudgetExceeded { .. }) => {
                    eprintln!("copwin: {e}");
                    return exit::RESOURCE;
                }
                Err(e) => return usage(e),
            };
            if c.json {
                for r in &trace.rounds {
                    out.record(
                        &Record::new()
                            .with("round", r.index)
                            .with("cops", &r.cops[..])
                            .with("robber", r.robber),
                    );
                }
                let end = match trace.outcome {
                    Outcome::Captured { round } => Record::new().with("outcome", "captured").with("round", round),
                    Outcome::Survived { rounds } => Record::new().with("outcome", "survived").with("rounds", rounds),
                };
                out.record(&end.with("cap", trace.round_cap));
            } else {
                let _ = write!(out.w, "{trace}");
            }
            status.violation = !trace.captured();
        }
    }
    let _ = out.w.flush();
    status.code()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run(cli) as u8)
}
