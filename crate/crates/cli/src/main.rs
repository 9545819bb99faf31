//! `twtie`: generators, exact oracles, certificate verification and
//! parameter reports from the command line.
//!
//! Exit codes: 0 success, 1 validation failure, 2 input error, 3 budget.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use twtie_core::certificates::grid_bramble;
use twtie_core::decomp::{bd_to_td, chordal_completion, exact_branchwidth, exact_treewidth, normalize_td, td_to_bd};
use twtie_core::families::{expand_range, generate};
use twtie_core::io::{emit_gr, emit_td, parse_gr, parse_td, verify};
use twtie_core::linkage::{bramble_from_linked_set, linkedness, well_linked_number};
use twtie_core::minors::{glm_from_grid, hadwiger_number};
use twtie_core::rational::parse_fraction;
use twtie_core::report::parameter_report;
use twtie_core::separators::{min_separator, sep_number, SeparatorCert};
use twtie_core::{Budget, Certificate, Error, FamilySpec, Graph};

#[derive(Parser)]
#[command(name = "twtie", version, about = "Exact treewidth-family parameters and their certificates")]
struct Cli {
    /// Seed for random families, overriding any `seed=` in the spec.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Budget overrides, e.g. `tw=16,had=12`, or one number for every limit.
    #[arg(long, global = true)]
    budget: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family member as a PACE .gr file.
    Gen { spec: String },
    /// Exact treewidth.
    Tw {
        graph: String,
        /// Write the optimal tree decomposition here as a .td file.
        #[arg(long)]
        td: Option<String>,
    },
    /// Exact branchwidth.
    Bw {
        graph: String,
        /// Write the optimal branch decomposition here as a certificate.
        #[arg(long)]
        witness: Option<String>,
    },
    /// Linkedness, with a bramble built from the witness set.
    Link {
        graph: String,
        #[arg(long)]
        witness: Option<String>,
    },
    /// Largest well-linked set.
    Wl { graph: String },
    /// Separation number `sep_c` (or `sep*_c` with `--starred`).
    Sep {
        graph: String,
        #[arg(long, default_value = "1/2")]
        c: String,
        #[arg(long)]
        starred: bool,
        /// Write a separator for the hardest set here as a certificate.
        #[arg(long)]
        witness: Option<String>,
    },
    /// Hadwiger number.
    Had {
        graph: String,
        #[arg(long)]
        witness: Option<String>,
    },
    /// Convert between decompositions.
    Convert {
        #[arg(value_enum)]
        mode: ConvertMode,
        graph: String,
        /// A .td file, or a bd certificate for `bd2td`.
        input: String,
    },
    /// Check a certificate against a graph.
    Verify { cert: String, graph: String },
    /// All in-budget parameters and the inequality battery.
    Report { graph: String },
    /// Reports over a family range such as `gnp:6,1/2,seed=0..9`.
    Sweep { spec: String },
    /// Emit a built-in certificate with its graph.
    Cert {
        #[arg(value_enum)]
        kind: CertKind,
        k: usize,
        /// Write the host graph here as a .gr file.
        #[arg(long)]
        graph_out: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvertMode {
    Td2bd,
    Bd2td,
    Normalize,
    Chordal,
}

#[derive(Clone, Copy, ValueEnum)]
enum CertKind {
    GridBramble,
    Glm,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Invalid(_) => 1,
            Error::Input(_) | Error::Parse { .. } => 2,
            Error::Budget { .. } => 3,
        };
        Failure { code, msg: e.to_string() }
    }
}

type Outcome = Result<(), Failure>;

fn read_source(path: &str) -> Result<String, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        fs::read_to_string(path)
    };
    text.map_err(|e| Failure { code: 2, msg: format!("{path}: {e}") })
}

fn read_graph(path: &str) -> Result<Graph, Failure> {
    Ok(parse_gr(&read_source(path)?)?)
}

fn write_file(path: &str, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure { code: 2, msg: format!("{path}: {e}") })
}

struct Ctx {
    format: Format,
    seed: Option<u64>,
    limits: Budget,
}

impl Ctx {
    /// Prints `text` or `value` depending on the output format.
    fn emit(&self, text: impl FnOnce() -> String, value: impl FnOnce() -> serde_json::Value) {
        let out = match self.format {
            Format::Text => text(),
            Format::Json => serde_json::to_string_pretty(&value()).expect("json"),
        };
        let mut stdout = io::stdout().lock();
        let _ = writeln!(stdout, "{}", out.trim_end());
    }

    fn spec(&self, text: &str) -> Result<FamilySpec, Failure> {
        let spec: FamilySpec = text.parse()?;
        Ok(match self.seed {
            Some(s) => spec.with_seed(s),
            None => spec,
        })
    }
}

fn run(cli: Cli) -> Outcome {
    let mut limits = Budget::from_env()?;
    if let Some(b) = &cli.budget {
        limits.apply(b)?;
    }
    let ctx = Ctx { format: cli.format, seed: cli.seed, limits };
    let lim = &ctx.limits;
    match cli.command {
        Command::Gen { spec } => {
            let g = generate(&ctx.spec(&spec)?)?;
            print!("{}", emit_gr(&g));
        }
        Command::Tw { graph, td } => {
            let g = read_graph(&graph)?;
            let (w, dec) = exact_treewidth(&g, lim)?;
            if let Some(path) = td {
                write_file(&path, &emit_td(&dec, g.n()))?;
            }
            ctx.emit(|| format!("tw = {w}"), || json!({ "tw": w }));
        }
        Command::Bw { graph, witness } => {
            let g = read_graph(&graph)?;
            let (w, bd) = exact_branchwidth(&g, lim)?;
            if let (Some(path), Some(bd)) = (witness, bd) {
                write_file(&path, &Certificate::Bd(bd).to_json())?;
            }
            ctx.emit(|| format!("bw = {w}"), || json!({ "bw": w }));
        }
        Command::Link { graph, witness } => {
            let g = read_graph(&graph)?;
            let (k, s) = linkedness(&g, lim)?;
            if let Some(path) = witness {
                let b = bramble_from_linked_set(&g, &s, k, lim)?;
                write_file(&path, &Certificate::Bramble(b).to_json())?;
            }
            ctx.emit(|| format!("link = {k}\nset = {s}"), || json!({ "link": k, "set": s }));
        }
        Command::Wl { graph } => {
            let g = read_graph(&graph)?;
            let (k, s) = well_linked_number(&g, lim)?;
            ctx.emit(|| format!("wl = {k}\nset = {s}"), || json!({ "wl": k, "set": s }));
        }
        Command::Sep { graph, c, starred, witness } => {
            let g = read_graph(&graph)?;
            let c = parse_fraction(&c)?;
            let sep = sep_number(&g, &c, starred, lim)?;
            let name = if starred { "sep*" } else { "sep" };
            if let (Some(path), Some(s)) = (witness, &sep.hardest) {
                let x = min_separator(&g, s, &c, starred, g.n())?.expect("X = V separates");
                let cert = SeparatorCert { x, s: s.clone(), c: c.clone(), variant: starred };
                write_file(&path, &Certificate::Separator(cert).to_json())?;
            }
            let hardest = sep.hardest.as_ref().map(ToString::to_string).unwrap_or_else(|| "none".into());
            ctx.emit(
                || format!("{name}_{c} = {}\nhardest = {hardest}", sep.value),
                || json!({ "c": c.to_string(), "starred": starred, "value": sep.value, "hardest": sep.hardest }),
            );
        }
        Command::Had { graph, witness } => {
            let g = read_graph(&graph)?;
            let (t, m) = hadwiger_number(&g, lim)?;
            if let Some(path) = witness {
                write_file(&path, &Certificate::Model(m).to_json())?;
            }
            ctx.emit(|| format!("had = {t}"), || json!({ "had": t }));
        }
        Command::Convert { mode, graph, input } => {
            let g = read_graph(&graph)?;
            let text = read_source(&input)?;
            let out = match mode {
                ConvertMode::Td2bd => Certificate::Bd(td_to_bd(&g, &parse_td(&text)?)?).to_json() + "\n",
                ConvertMode::Bd2td => match Certificate::from_json(&text)? {
                    Certificate::Bd(bd) => emit_td(&bd_to_td(&g, &bd)?, g.n()),
                    other => return Err(Error::Input(format!("expected a bd certificate, got {}", other.kind())).into()),
                },
                ConvertMode::Normalize => emit_td(&normalize_td(&g, &parse_td(&text)?)?, g.n()),
                ConvertMode::Chordal => emit_gr(&chordal_completion(&g, &parse_td(&text)?)?),
            };
            print!("{out}");
        }
        Command::Verify { cert, graph } => {
            let c = Certificate::from_json(&read_source(&cert)?)?;
            let g = read_graph(&graph)?;
            let v = verify(&c, &g)?;
            ctx.emit(|| v.to_string(), || json!({ "kind": v.kind, "valid": true, "measure": v.measure, "value": v.value }));
        }
        Command::Report { graph } => {
            let g = read_graph(&graph)?;
            let rep = parameter_report(&graph, &g, lim);
            ctx.emit(|| rep.to_string(), || serde_json::to_value(&rep).expect("json"));
            if !rep.all_hold() {
                return Err(Failure { code: 1, msg: format!("{} inequalities violated", rep.violations().count()) });
            }
        }
        Command::Sweep { spec } => {
            let specs: Vec<FamilySpec> = expand_range(&spec)?
                .into_iter()
                .map(|s| match ctx.seed {
                    Some(seed) => s.with_seed(seed),
                    None => s,
                })
                .collect();
            let graphs = specs.iter().map(generate).collect::<Result<Vec<_>, _>>()?;
            let reports: Vec<_> = specs
                .par_iter()
                .zip(graphs.par_iter())
                .map(|(s, g)| parameter_report(&s.to_string(), g, lim))
                .collect();
            let bad = reports.iter().filter(|r| !r.all_hold()).count();
            ctx.emit(
                || {
                    let mut out = String::new();
                    for r in &reports {
                        let state = if r.all_hold() { "ok" } else { "VIOLATED" };
                        let tw = r.values.get("tw").map(ToString::to_string).unwrap_or_default();
                        out += &format!("{}: tw = {tw}, {} verdicts, {state}\n", r.graph, r.verdicts.len());
                    }
                    out + &format!("{} graphs, {bad} with violations", reports.len())
                },
                || serde_json::to_value(&reports).expect("json"),
            );
            if bad > 0 {
                return Err(Failure { code: 1, msg: format!("{bad} graphs violate an inequality") });
            }
        }
        Command::Cert { kind, k, graph_out } => {
            let (g, cert) = match kind {
                CertKind::GridBramble => {
                    let (g, b) = grid_bramble(k)?;
                    (g, Certificate::Bramble(b))
                }
                CertKind::Glm => {
                    let (g, c) = glm_from_grid(k)?;
                    (g, Certificate::Glm(c))
                }
            };
            if let Some(path) = graph_out {
                write_file(&path, &emit_gr(&g))?;
            }
            println!("{}", cert.to_json());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("twtie: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
