//! `dpcolor`: DP-coloring (correspondence coloring) from the command line.
//!
//! Subcommands: `analyze` (degeneracy, short cycles, gadget occurrences),
//! `color` (exact, greedy, or constructive planar coloring), `chromatic`
//! (exact DP-chromatic number with certificate), `verify` (re-check a
//! coloring), and `gen` (family generators). Every subcommand can write a
//! JSON run report; certificates depend only on inputs and the `--seed`
//! flag, so scripted runs are reproducible byte for byte.

mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;

use dpcolor::{
    color_planar_c4free, dp_chromatic, greedy_degenerate_color, solve_transversal, verify_coloring,
    Coloring, Family, Graph, ListAssignment, MatchingAssignment, SearchGuard, SolverError,
};

use report::{Outcome, RunReport};

#[derive(Parser)]
#[command(
    name = "dpcolor",
    version,
    about = "DP-coloring toolkit: structural analysis, exact and constructive coloring, DP-chromatic certificates"
)]
struct Cli {
    /// Write a JSON run report (schema version 1) to this path.
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural analysis: degeneracy with ordering, C_3..C_6 presence
    /// with witnesses, and gadget occurrences.
    Analyze {
        /// Graph in edge-list format ("n m" header, then "u v" lines).
        graph: PathBuf,
        /// Also count every gadget occurrence, not just the first.
        #[arg(long)]
        all: bool,
    },
    /// DP-color a graph and write the coloring as JSON.
    #[command(group(ArgGroup::new("list_source").required(true).args(["lists", "t"])))]
    #[command(group(ArgGroup::new("matching_source").required(true).args(["matchings", "random"])))]
    Color {
        /// Graph in edge-list format.
        graph: PathBuf,
        /// Per-vertex color lists as JSON (object: vertex id -> color array).
        #[arg(long, value_name = "PATH")]
        lists: Option<PathBuf>,
        /// Give every vertex the list {1..N} instead of --lists.
        #[arg(long, value_name = "N")]
        t: Option<usize>,
        /// Per-edge matchings as JSON (array of {u, v, pairs}).
        #[arg(long, value_name = "PATH")]
        matchings: Option<PathBuf>,
        /// Draw a random maximum matching per edge from --seed.
        #[arg(long)]
        random: bool,
        /// Seed for all randomness.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Coloring strategy. `auto` picks c4free when the graph has no
        /// 4-cycle and lists have 4+ colors, then greedy when lists beat the
        /// degeneracy, and exact search otherwise.
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Where to write the coloring JSON.
        #[arg(short, long, default_value = "coloring.json", value_name = "PATH")]
        output: PathBuf,
    },
    /// Exact DP-chromatic number of a small graph, with certificate.
    Chromatic {
        /// Graph in edge-list format.
        graph: PathBuf,
        /// Largest list size to try.
        #[arg(long = "max-t", default_value_t = 4)]
        max_t: usize,
        /// Guard: largest accepted cycle rank |E| - |V| + components.
        #[arg(long, default_value_t = 4)]
        max_free_edges: usize,
        /// Where to write the certificate JSON.
        #[arg(short, long, default_value = "chromatic.json", value_name = "PATH")]
        output: PathBuf,
    },
    /// Re-check a coloring against an instance and list every violation.
    Verify {
        /// Graph in edge-list format.
        graph: PathBuf,
        /// Per-vertex color lists as JSON.
        #[arg(long, value_name = "PATH")]
        lists: PathBuf,
        /// Per-edge matchings as JSON.
        #[arg(long, value_name = "PATH")]
        matchings: PathBuf,
        /// Coloring as JSON (object: vertex id -> color).
        #[arg(long, value_name = "PATH")]
        coloring: PathBuf,
    },
    /// Generate a named family member as an edge-list file.
    Gen {
        /// Family: cycle, complete, path, star, dodecahedral,
        /// dodecahedral-line.
        #[arg(long)]
        family: String,
        /// Family parameter (vertex count); ignored by the dodecahedral
        /// families.
        #[arg(short, default_value_t = 0)]
        n: usize,
        /// Where to write the edge-list file.
        #[arg(short, long, value_name = "PATH")]
        output: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Exact,
    Greedy,
    C4free,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Method::Auto => "auto",
            Method::Exact => "exact",
            Method::Greedy => "greedy",
            Method::C4free => "c4free",
        };
        f.write_str(name)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let mut report = describe(&cli.command);
    run(&cli.command, &mut report);
    report.wall_time_ms = started.elapsed().as_secs_f64() * 1e3;
    if let Some(path) = &cli.report {
        if let Err(e) = report.write(path) {
            eprintln!("error: cannot write report to {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(report.outcome.exit_code() as u8)
}

fn describe(command: &Command) -> RunReport {
    match command {
        Command::Analyze { graph, all } => RunReport::new(
            "analyze",
            json!({ "graph": graph.display().to_string(), "all": all }),
        ),
        Command::Color {
            graph,
            lists,
            t,
            matchings,
            random,
            seed,
            method,
            output,
        } => RunReport::new(
            "color",
            json!({
                "graph": graph.display().to_string(),
                "lists": lists.as_ref().map(|p| p.display().to_string()),
                "t": t,
                "matchings": matchings.as_ref().map(|p| p.display().to_string()),
                "random": random,
                "seed": seed,
                "method": method.to_string(),
                "output": output.display().to_string(),
            }),
        ),
        Command::Chromatic {
            graph,
            max_t,
            max_free_edges,
            output,
        } => RunReport::new(
            "chromatic",
            json!({
                "graph": graph.display().to_string(),
                "max_t": max_t,
                "max_free_edges": max_free_edges,
                "output": output.display().to_string(),
            }),
        ),
        Command::Verify {
            graph,
            lists,
            matchings,
            coloring,
        } => RunReport::new(
            "verify",
            json!({
                "graph": graph.display().to_string(),
                "lists": lists.display().to_string(),
                "matchings": matchings.display().to_string(),
                "coloring": coloring.display().to_string(),
            }),
        ),
        Command::Gen { family, n, output } => RunReport::new(
            "gen",
            json!({
                "family": family,
                "n": n,
                "output": output.display().to_string(),
            }),
        ),
    }
}

fn run(command: &Command, report: &mut RunReport) {
    match command {
        Command::Analyze { graph, all } => cmd_analyze(report, graph, *all),
        Command::Color {
            graph,
            lists,
            t,
            matchings,
            random: _,
            seed,
            method,
            output,
        } => cmd_color(
            report,
            graph,
            lists.as_deref(),
            *t,
            matchings.as_deref(),
            *seed,
            *method,
            output,
        ),
        Command::Chromatic {
            graph,
            max_t,
            max_free_edges,
            output,
        } => cmd_chromatic(report, graph, *max_t, *max_free_edges, output),
        Command::Verify {
            graph,
            lists,
            matchings,
            coloring,
        } => cmd_verify(report, graph, lists, matchings, coloring),
        Command::Gen { family, n, output } => cmd_gen(report, family, *n, output),
    }
}

fn input_error(report: &mut RunReport, message: impl fmt::Display) {
    let message = message.to_string();
    eprintln!("error: {message}");
    report.outcome = Outcome::Error;
    report.message = Some(message);
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Graph::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_json(path: &Path, value: &impl serde::Serialize) -> Result<(), String> {
    let mut text =
        serde_json::to_string_pretty(value).map_err(|e| format!("serialization failed: {e}"))?;
    text.push('\n');
    std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn cmd_analyze(report: &mut RunReport, graph_path: &Path, all: bool) {
    let g = match load_graph(graph_path) {
        Ok(g) => g,
        Err(e) => return input_error(report, e),
    };
    println!("vertices: {}", g.vertex_count());
    println!("edges: {}", g.edge_count());
    let degeneracy = g.degeneracy();
    let ordering: Vec<String> = degeneracy.ordering.iter().map(|v| v.to_string()).collect();
    println!(
        "degeneracy: {} (peel order: {})",
        degeneracy.degeneracy,
        ordering.join(" ")
    );
    let mut cycles = serde_json::Map::new();
    for k in 3..=6usize {
        let witness = g.find_cycle(k);
        match &witness {
            Some(w) => {
                let path: Vec<String> = w.vertices.iter().map(|v| v.to_string()).collect();
                println!("C{k}: yes ({})", path.join("-"));
            }
            None => println!("C{k}: no"),
        }
        cycles.insert(k.to_string(), json!(witness.map(|w| w.vertices)));
    }
    let first = g.find_f53();
    match &first {
        Some(w) => println!("F_5^3: found {:?}", w.vertices),
        None => println!("F_5^3: none"),
    }
    let count = if all {
        let count = g.find_f53_all().len();
        println!("F_5^3 occurrences: {count}");
        Some(count)
    } else {
        None
    };
    let certificate = json!({
        "vertex_count": g.vertex_count(),
        "edge_count": g.edge_count(),
        "degeneracy": degeneracy,
        "cycles": cycles,
        "f53_first": first.map(|w| w.vertices),
        "f53_count": count,
    });
    report.resolve(Outcome::Ok, Some(certificate));
}

#[allow(clippy::too_many_arguments)]
fn cmd_color(
    report: &mut RunReport,
    graph_path: &Path,
    lists_path: Option<&Path>,
    t: Option<usize>,
    matchings_path: Option<&Path>,
    seed: u64,
    method: Method,
    output: &Path,
) {
    let g = match load_graph(graph_path) {
        Ok(g) => g,
        Err(e) => return input_error(report, e),
    };
    let lists = match lists_path {
        Some(path) => match load_json::<ListAssignment>(path) {
            Ok(l) => l,
            Err(e) => return input_error(report, e),
        },
        None => ListAssignment::full(&g, t.expect("clap guarantees --t without --lists")),
    };
    if let Err(e) = lists.validate_for(&g) {
        return input_error(report, e);
    }
    let matchings = match matchings_path {
        Some(path) => match load_json::<MatchingAssignment>(path) {
            Ok(m) => m,
            Err(e) => return input_error(report, e),
        },
        None => MatchingAssignment::random(&g, &lists, seed),
    };
    if let Err(e) = matchings.validate_for(&g, &lists) {
        return input_error(report, e);
    }
    let chosen = match method {
        Method::Auto => {
            if lists.min_list_size() >= 4 && g.find_cycle(4).is_none() {
                Method::C4free
            } else if lists.min_list_size() > g.degeneracy().degeneracy {
                Method::Greedy
            } else {
                Method::Exact
            }
        }
        other => other,
    };
    println!("method: {chosen}");
    let result = match chosen {
        Method::Exact => solve_transversal(&g, &lists, &matchings),
        Method::Greedy => greedy_degenerate_color(&g, &lists, &matchings).map(Some),
        Method::C4free => color_planar_c4free(&g, &lists, &matchings).map(Some),
        Method::Auto => unreachable!("auto resolved above"),
    };
    match result {
        Ok(Some(coloring)) => {
            let violations = verify_coloring(&g, &lists, &matchings, &coloring);
            if !violations.is_empty() {
                return input_error(
                    report,
                    format!("internal: produced coloring fails verification: {violations:?}"),
                );
            }
            if let Err(e) = write_json(output, &coloring) {
                return input_error(report, e);
            }
            println!("ok: verified coloring written to {}", output.display());
            let certificate = json!({
                "method": chosen.to_string(),
                "coloring": coloring,
            });
            report.resolve(Outcome::Ok, Some(certificate));
        }
        Ok(None) => {
            println!("unsat: complete search found no transversal");
            let certificate = json!({
                "method": chosen.to_string(),
                "result": "no transversal exists",
            });
            report.resolve(Outcome::Unsat, Some(certificate));
        }
        Err(SolverError::Stuck(remainder)) => {
            println!(
                "stuck: reduction halted with {} vertices remaining (not a planar C4-free input, or a counterexample)",
                remainder.graph.vertex_count()
            );
            let certificate = json!({
                "method": chosen.to_string(),
                "remainder": remainder,
            });
            report.resolve(Outcome::Stuck, Some(certificate));
        }
        Err(e) => input_error(report, e),
    }
}

fn cmd_chromatic(
    report: &mut RunReport,
    graph_path: &Path,
    max_t: usize,
    max_free_edges: usize,
    output: &Path,
) {
    let g = match load_graph(graph_path) {
        Ok(g) => g,
        Err(e) => return input_error(report, e),
    };
    let guard = SearchGuard {
        max_free_edges,
        ..SearchGuard::default()
    };
    let certificate = match dp_chromatic(&g, max_t, &guard) {
        Ok(c) => c,
        Err(e) => return input_error(report, e),
    };
    #[derive(serde::Serialize)]
    struct VersionedCertificate<'a> {
        schema_version: &'static str,
        #[serde(flatten)]
        certificate: &'a dpcolor::ChromaticCertificate,
    }
    let versioned = VersionedCertificate {
        schema_version: "1",
        certificate: &certificate,
    };
    if let Err(e) = write_json(output, &versioned) {
        return input_error(report, e);
    }
    let payload = serde_json::to_value(&certificate).expect("certificate serializes");
    match certificate.value {
        Some(value) => {
            println!(
                "chi_DP = {value} (certificate written to {})",
                output.display()
            );
            report.resolve(Outcome::Ok, Some(payload));
        }
        None => {
            println!(
                "chi_DP > {max_t}: every level up to {max_t} has a failing assignment (see {})",
                output.display()
            );
            report.resolve(Outcome::Unsat, Some(payload));
        }
    }
}

fn cmd_verify(
    report: &mut RunReport,
    graph_path: &Path,
    lists_path: &Path,
    matchings_path: &Path,
    coloring_path: &Path,
) {
    let g = match load_graph(graph_path) {
        Ok(g) => g,
        Err(e) => return input_error(report, e),
    };
    let lists = match load_json::<ListAssignment>(lists_path) {
        Ok(l) => l,
        Err(e) => return input_error(report, e),
    };
    let matchings = match load_json::<MatchingAssignment>(matchings_path) {
        Ok(m) => m,
        Err(e) => return input_error(report, e),
    };
    if let Err(e) = lists
        .validate_for(&g)
        .and_then(|_| matchings.validate_for(&g, &lists))
    {
        return input_error(report, e);
    }
    let raw: BTreeMap<String, i32> = match load_json(coloring_path) {
        Ok(c) => c,
        Err(e) => return input_error(report, e),
    };
    let mut pairs = Vec::with_capacity(raw.len());
    for (key, color) in raw {
        match key.parse::<usize>() {
            Ok(v) if v < g.vertex_count() => pairs.push((v, color)),
            _ => {
                return input_error(
                    report,
                    format!(
                        "{}: vertex key `{key}` is not a vertex of the graph",
                        coloring_path.display()
                    ),
                )
            }
        }
    }
    let coloring = Coloring::from_pairs(g.vertex_count(), pairs).expect("keys checked");
    let violations = verify_coloring(&g, &lists, &matchings, &coloring);
    let certificate = json!({ "violations": violations });
    if violations.is_empty() {
        println!("ok: coloring is a valid DP-coloring");
        report.resolve(Outcome::Ok, Some(certificate));
    } else {
        for v in &violations {
            println!("violation: {v}");
        }
        println!("{} violation(s)", violations.len());
        report.resolve(Outcome::Unsat, Some(certificate));
    }
}

fn cmd_gen(report: &mut RunReport, family: &str, n: usize, output: &Path) {
    let family: Family = match family.parse() {
        Ok(f) => f,
        Err(e) => return input_error(report, e),
    };
    let g = match Graph::generate(family, n) {
        Ok(g) => g,
        Err(e) => return input_error(report, e),
    };
    if let Err(e) = std::fs::write(output, g.to_edge_list_text()) {
        return input_error(report, format!("cannot write {}: {e}", output.display()));
    }
    println!(
        "wrote {family}: {} vertices, {} edges -> {}",
        g.vertex_count(),
        g.edge_count(),
        output.display()
    );
    let certificate = json!({
        "family": family.to_string(),
        "vertex_count": g.vertex_count(),
        "edge_count": g.edge_count(),
        "path": output.display().to_string(),
    });
    report.resolve(Outcome::Ok, Some(certificate));
}
