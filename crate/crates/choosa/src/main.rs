use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use choosa::choosability::{
    choice_number, gamma_mu_choice_number, is_k_choosable, is_k_gamma_mu_choosable,
    ChoosabilityError, ChoosabilityVerdict, EnumLimits, GammaMuMode, GeneralPalette,
    DEFAULT_ENUMERATION_CAP,
};
use choosa::graph::{
    gen_complete, gen_complete_bipartite, gen_cycle, gen_outerplanar, gen_random_tree,
    parse_dimacs, write_dimacs, Graph,
};
use choosa::lists::{parse_lists, write_lists, Color, ListAssignment, ListKind};
use choosa::report::{ReportFormat, RunReport};
use choosa::solve::{chromatic_number, exists_list_coloring, SolveOptions, VertexOrder};
use choosa::verify::{run as run_verify, Scope};

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "choosa", version, about = "List coloring and choosability toolkit")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "text")]
    format: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CapArgs {
    /// Enumeration cap (default 10^8, or the CHOOSA_CAP environment variable).
    #[arg(long)]
    cap: Option<u128>,
    /// Run enumerations beyond the cap.
    #[arg(long)]
    force: bool,
}

impl CapArgs {
    fn limits(&self) -> EnumLimits {
        let env_cap = std::env::var("CHOOSA_CAP")
            .ok()
            .and_then(|v| v.parse::<u128>().ok());
        EnumLimits {
            cap: self.cap.or(env_cap).unwrap_or(DEFAULT_ENUMERATION_CAP),
            force: self.force,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    General,
    Interval,
}

#[derive(Subcommand)]
enum Command {
    /// Find a proper list coloring of a graph.
    Solve {
        graph: PathBuf,
        lists: PathBuf,
        /// Vertex order for the search.
        #[arg(long, value_parser = ["given", "mcf"], default_value = "given")]
        order: String,
    },
    /// Chromatic number with a witness coloring.
    Chromatic { graph: PathBuf },
    /// Decide k-choosability (general lists) or k-(gamma,mu)-choosability (interval lists).
    Choosable {
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::General)]
        mode: ModeArg,
        /// Color budget for canonical general-list enumeration (default n*k).
        #[arg(long)]
        palette_budget: Option<Color>,
        /// Use the literal k-subsets-of-{1..n} palette.
        #[arg(long)]
        paper_palette: bool,
        /// Interval offset bound (default k*(n-1)).
        #[arg(long)]
        offset_bound: Option<Color>,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Least k for which the graph is k-choosable.
    ChoiceNumber {
        graph: PathBuf,
        #[arg(long)]
        k_max: Option<usize>,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Least k for which the graph is k-(gamma,mu)-choosable.
    GmChoiceNumber {
        graph: PathBuf,
        #[arg(long, value_parser = ["enumerate", "fast"], default_value = "enumerate")]
        mode: String,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Emit a generated graph in DIMACS format.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Run the theorem verification sweeps.
    VerifyTheorems {
        #[arg(long, default_value = "all")]
        scope: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        cap: CapArgs,
    },
}

#[derive(Subcommand)]
enum Family {
    CompleteBipartite { a: usize, b: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Tree {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Outerplanar {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Delete a random subset of chords instead of keeping the full triangulation.
        #[arg(long)]
        submaximal: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Some(format) = ReportFormat::parse(&cli.format) else {
        eprintln!("error: unknown format '{}'", cli.format);
        return ExitCode::from(EXIT_INPUT);
    };
    match run(cli.command, format) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn load_graph(path: &PathBuf) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_dimacs(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_lists(path: &PathBuf, n: usize) -> Result<ListAssignment, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_lists(&text, n).map_err(|e| format!("{}: {e}", path.display()))
}

fn graph_digest(report: &mut RunReport, g: &Graph) {
    report.set("graph.n", g.n());
    report.set("graph.m", g.edge_count());
}

fn coloring_line(f: &choosa::lists::Coloring) -> String {
    f.0.iter()
        .enumerate()
        .map(|(v, c)| format!("{v}:{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn emit(report: &mut RunReport, start: Instant, format: ReportFormat) {
    report.set_elapsed(start.elapsed());
    print!("{}", report.render(format));
}

fn cap_exit(report: &mut RunReport, start: Instant, format: ReportFormat, e: &ChoosabilityError) -> u8 {
    report.set("error", e);
    report.payload(format!("CAP EXCEEDED: {e}"));
    emit(report, start, format);
    EXIT_CAP
}

fn verdict_exit(
    report: &mut RunReport,
    start: Instant,
    format: ReportFormat,
    v: &ChoosabilityVerdict,
) -> u8 {
    report.set("checked", v.checked);
    report.set(
        "mode",
        match v.mode {
            ListKind::General => "general",
            ListKind::Interval => "interval",
        },
    );
    if v.choosable {
        report.set("answer", "YES");
        report.payload("YES");
        emit(report, start, format);
        EXIT_YES
    } else {
        report.set("answer", "NO");
        report.payload("NO");
        for line in write_lists(v.witness.as_ref().unwrap()).lines() {
            report.payload(line);
        }
        emit(report, start, format);
        EXIT_NO
    }
}

fn run(command: Command, format: ReportFormat) -> Result<u8, String> {
    let start = Instant::now();
    match command {
        Command::Solve { graph, lists, order } => {
            let g = load_graph(&graph)?;
            let l = load_lists(&lists, g.n())?;
            let mut report = RunReport::new("solve");
            graph_digest(&mut report, &g);
            report.set(
                "lists.kind",
                if l.kind() == ListKind::Interval { "interval" } else { "general" },
            );
            let opts = SolveOptions {
                vertex_order: if order == "mcf" {
                    VertexOrder::MostConstrainedFirst
                } else {
                    VertexOrder::Given
                },
            };
            match exists_list_coloring(&g, &l, opts) {
                Some(f) => {
                    report.set("answer", "COLORABLE");
                    report.payload(coloring_line(&f));
                    emit(&mut report, start, format);
                    Ok(EXIT_YES)
                }
                None => {
                    report.set("answer", "UNCOLORABLE");
                    report.payload("UNCOLORABLE");
                    emit(&mut report, start, format);
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Chromatic { graph } => {
            let g = load_graph(&graph)?;
            let mut report = RunReport::new("chromatic");
            graph_digest(&mut report, &g);
            let (k, f) = chromatic_number(&g);
            report.set("chromatic_number", k);
            report.payload(format!("chromatic number {k}"));
            report.payload(coloring_line(&f));
            emit(&mut report, start, format);
            Ok(EXIT_YES)
        }
        Command::Choosable {
            graph,
            k,
            mode,
            palette_budget,
            paper_palette,
            offset_bound,
            cap,
        } => {
            if k < 1 {
                return Err("k must be at least 1".into());
            }
            let g = load_graph(&graph)?;
            let mut report = RunReport::new("choosable");
            graph_digest(&mut report, &g);
            report.set("k", k);
            let limits = cap.limits();
            let result = match mode {
                ModeArg::General => {
                    let palette = if paper_palette {
                        GeneralPalette::Paper
                    } else {
                        GeneralPalette::Canonical {
                            color_budget: palette_budget,
                        }
                    };
                    is_k_choosable(&g, k, palette, limits)
                }
                ModeArg::Interval => is_k_gamma_mu_choosable(&g, k, offset_bound, limits),
            };
            match result {
                Ok(v) => Ok(verdict_exit(&mut report, start, format, &v)),
                Err(e) => Ok(cap_exit(&mut report, start, format, &e)),
            }
        }
        Command::ChoiceNumber { graph, k_max, cap } => {
            let g = load_graph(&graph)?;
            let mut report = RunReport::new("choice-number");
            graph_digest(&mut report, &g);
            match choice_number(&g, k_max, cap.limits()) {
                Ok(k) => {
                    report.set("choice_number", k);
                    report.payload(format!("choice number {k}"));
                    emit(&mut report, start, format);
                    Ok(EXIT_YES)
                }
                Err(e @ ChoosabilityError::CapExceeded { .. }) => {
                    Ok(cap_exit(&mut report, start, format, &e))
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::GmChoiceNumber { graph, mode, cap } => {
            let g = load_graph(&graph)?;
            let mut report = RunReport::new("gm-choice-number");
            graph_digest(&mut report, &g);
            report.set("mode", &mode);
            let gm_mode = if mode == "fast" {
                GammaMuMode::Fast
            } else {
                GammaMuMode::Enumerate
            };
            match gamma_mu_choice_number(&g, gm_mode, cap.limits()) {
                Ok(k) => {
                    report.set("gm_choice_number", k);
                    report.payload(format!("gm choice number {k}"));
                    emit(&mut report, start, format);
                    Ok(EXIT_YES)
                }
                Err(e @ ChoosabilityError::CapExceeded { .. }) => {
                    Ok(cap_exit(&mut report, start, format, &e))
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Generate { family } => {
            let g = match family {
                Family::CompleteBipartite { a, b } => {
                    if a < 1 || b < 1 {
                        return Err("both sides must be nonempty".into());
                    }
                    gen_complete_bipartite(a, b)
                }
                Family::Cycle { n } => {
                    if n < 3 {
                        return Err("cycle needs n >= 3".into());
                    }
                    gen_cycle(n)
                }
                Family::Complete { n } => gen_complete(n),
                Family::Tree { n, seed } => {
                    if n < 1 {
                        return Err("tree needs n >= 1".into());
                    }
                    gen_random_tree(n, seed)
                }
                Family::Outerplanar { n, seed, submaximal } => {
                    if n < 3 {
                        return Err("outerplanar generator needs n >= 3".into());
                    }
                    gen_outerplanar(n, seed, !submaximal)
                }
            };
            print!("{}", write_dimacs(&g));
            Ok(EXIT_YES)
        }
        Command::VerifyTheorems { scope, seed, cap } => {
            let scope = Scope::parse(&scope).ok_or_else(|| format!("unknown scope '{scope}'"))?;
            let mut report = RunReport::new("verify-theorems");
            report.set("seed", seed);
            let results = run_verify(scope, seed, cap.limits());
            let mut all_pass = true;
            for r in &results {
                all_pass &= r.passed;
                report.payload(format!(
                    "[{}] {} ({})",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.detail
                ));
            }
            report.set("checks", results.len());
            report.set("passed", results.iter().filter(|r| r.passed).count());
            emit(&mut report, start, format);
            Ok(if all_pass { EXIT_YES } else { EXIT_NO })
        }
    }
}
