//! Command-line front end.
//!
//! Exit status: 0 for success or a positive verdict, 1 for a negative
//! verdict, 2 for usage and input-format errors.

use std::ffi::OsString;
use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};

use crate::catalog;
use crate::certify::{
    verify_certificate, Certificate, CertificateDocument, Certifier, DEFAULT_CEILING,
};
use crate::coloring::chromatic_number;
use crate::criticality::{criticality_report_exact, is_k_vertex_critical};
use crate::detectors::{freeness_witness, ForbiddenFamily};
use crate::expansion::{count_table, enumerate_k_critical, CriticalGraph};
use crate::graph::Graph;
use crate::graph6;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "critgraph",
    version,
    about = "Vertex-critical (gem, co-gem)-free graphs and certifying k-colorability"
)]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Human-readable detail, on lines starting with '#'.
    #[arg(long, short, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GraphInput {
    /// graph6 string; read newline-delimited graphs from --input or stdin if absent.
    graph: Option<String>,
    /// File of newline-delimited graph6 strings.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Test freeness of forbidden induced subgraphs.
    Freecheck {
        /// Comma-separated: gem, co-gem, p4, c5, p3+<l>p1.
        #[arg(long, value_delimiter = ',', required = true)]
        forbid: Vec<String>,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Chromatic number and an optimal coloring.
    Chi {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Test k-vertex-criticality.
    Critical {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        input: GraphInput,
    },
    /// List all k-vertex-critical (gem, co-gem)-free graphs.
    Enumerate {
        #[arg(long)]
        k: usize,
        /// Print "K<k>" and bag-size profiles instead of graph6.
        #[arg(long)]
        profiles: bool,
    },
    /// Number of k-vertex-critical (gem, co-gem)-free graphs for k = 1..=max-k.
    Table {
        #[arg(long = "max-k")]
        max_k: usize,
    },
    /// Certify k-colorability; prints one certificate document per graph.
    Certify {
        #[arg(long)]
        k: usize,
        /// Refuse k at or above this level.
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: usize,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Check certificate documents (one per line) against graphs.
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        cert: PathBuf,
        #[command(flatten)]
        input: GraphInput,
    },
    /// graph6 of the special base graph G_id (all ten if omitted).
    Catalog {
        #[arg(long)]
        id: Option<usize>,
    },
}

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };

    if let Some(t) = cli.threads {
        // The global pool can be configured once per process; later calls keep
        // the first setting.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }

    match execute(&cli, stdin, out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_NEGATIVE,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn read_graphs(input: &GraphInput, stdin: &mut dyn BufRead) -> anyhow::Result<Vec<Graph>> {
    if let Some(s) = &input.graph {
        if input.input.is_some() {
            bail!("give either a graph6 argument or --input, not both");
        }
        return graph6::decode(s)
            .map(|g| vec![g])
            .map_err(|e| anyhow!("{s:?}: {e}"));
    }
    let graphs = match &input.input {
        Some(path) => {
            let file =
                fs::File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
            graph6::read_all(std::io::BufReader::new(file))
        }
        None => graph6::read_all(stdin),
    };
    let graphs = graphs.map_err(|(line, e)| anyhow!("line {line}: {e}"))?;
    if graphs.is_empty() {
        bail!("no graphs on input");
    }
    Ok(graphs)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn execute(cli: &Cli, stdin: &mut dyn BufRead, out: &mut dyn Write) -> anyhow::Result<bool> {
    let verbose = cli.verbose;
    match &cli.command {
        Command::Freecheck { forbid, input } => {
            let families = forbid
                .iter()
                .map(|f| f.parse::<ForbiddenFamily>())
                .collect::<Result<Vec<_>, _>>()?;
            let graphs = read_graphs(input, stdin)?;
            let mut all_free = true;
            for g in &graphs {
                for fam in &families {
                    match freeness_witness(g, fam) {
                        None => writeln!(out, "{fam}: free")?,
                        Some((name, w)) => {
                            all_free = false;
                            writeln!(out, "{name}: {}", join(w.iter()))?;
                        }
                    }
                }
            }
            Ok(all_free)
        }
        Command::Chi { input } => {
            for g in &read_graphs(input, stdin)? {
                let (chi, c) = chromatic_number(g);
                writeln!(out, "{chi} {}", join(c.colors()))?;
            }
            Ok(true)
        }
        Command::Critical { k, input } => {
            let mut all = true;
            for g in &read_graphs(input, stdin)? {
                let report = if verbose {
                    criticality_report_exact(g, *k)
                } else {
                    is_k_vertex_critical(g, *k)
                };
                writeln!(out, "{}", report.verdict)?;
                if verbose {
                    writeln!(out, "# chi={} k={}", report.chi, report.k)?;
                    writeln!(out, "# chi(G-v)={}", join(&report.per_vertex))?;
                }
                all &= report.verdict;
            }
            Ok(all)
        }
        Command::Enumerate { k, profiles } => {
            if *k == 0 {
                bail!("--k must be at least 1");
            }
            for c in enumerate_k_critical(*k) {
                if *profiles {
                    writeln!(out, "{c}")?;
                } else {
                    let s = graph6::encode(&c.graph())?;
                    if verbose {
                        writeln!(out, "# {c}")?;
                    }
                    writeln!(out, "{s}")?;
                }
            }
            Ok(true)
        }
        Command::Table { max_k } => {
            if *max_k == 0 {
                bail!("--max-k must be at least 1");
            }
            for (i, count) in count_table(*max_k).into_iter().enumerate() {
                if verbose {
                    writeln!(out, "# k={}", i + 1)?;
                }
                writeln!(out, "{count}")?;
            }
            Ok(true)
        }
        Command::Certify { k, ceiling, input } => {
            let certifier = Certifier::with_ceiling(*ceiling);
            let mut all_yes = true;
            for g in &read_graphs(input, stdin)? {
                let cert = certifier.certify(g, *k)?;
                all_yes &= matches!(cert, Certificate::Yes { .. });
                writeln!(out, "{}", cert.to_json(*k))?;
            }
            Ok(all_yes)
        }
        Command::Verify { k, cert, input } => {
            let text = fs::read_to_string(cert)
                .with_context(|| format!("cannot read {}", cert.display()))?;
            let docs = text
                .lines()
                .filter(|l| !l.trim().is_empty())
                .map(CertificateDocument::parse)
                .collect::<Result<Vec<_>, _>>()?;
            let graphs = read_graphs(input, stdin)?;
            if docs.len() != graphs.len() {
                bail!(
                    "{} certificate(s) for {} graph(s)",
                    docs.len(),
                    graphs.len()
                );
            }
            let mut all = true;
            for (doc, g) in docs.iter().zip(&graphs) {
                let accepted = doc.k == *k
                    && doc
                        .to_certificate(g.order())
                        .map(|c| verify_certificate(g, *k, &c))
                        .unwrap_or(false);
                writeln!(out, "{}", if accepted { "accept" } else { "reject" })?;
                all &= accepted;
            }
            Ok(all)
        }
        Command::Catalog { id } => {
            let entries = match id {
                Some(i) => vec![catalog::base_graph(*i)?],
                None => catalog::all(),
            };
            for e in entries {
                if verbose {
                    writeln!(out, "# G{}", e.id)?;
                }
                writeln!(out, "{}", graph6::encode(&e.graph)?)?;
            }
            Ok(true)
        }
    }
}

/// Marker line used by `enumerate --profiles` for the complete graph.
pub fn complete_marker(k: usize) -> String {
    CriticalGraph::Complete(k).to_string()
}
