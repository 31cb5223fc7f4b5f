//! Argument parsing and dispatch.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tutte_toughness::generators::{GeneratorKind, GeneratorSpec, NamedBase};
use tutte_toughness::two_factor::DEFAULT_GUARD;

use crate::commands::{self, CorpusItem, DotOverlays, Options};
use crate::error::CliError;
use crate::format::{parse_instance, write_graph6, write_instance, Instance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "tt", version, about = "Toughness, 2-factors and barriers of small planar graphs")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Seed for generated corpora and instances.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest vertex count for generated corpora.
    #[arg(long, global = true, default_value_t = 14)]
    pub max_n: usize,
    /// Largest n for which exhaustive barrier and Hamiltonicity searches run.
    #[arg(long, global = true, default_value_t = DEFAULT_GUARD)]
    pub guard_exhaustive: usize,
    /// Worker threads for batch commands (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Toughness, dist-condition, 2-factor and Hamiltonicity of one instance.
    Info { file: PathBuf },
    /// Check "3/2-tough and dist-condition implies a 2-factor" on a corpus.
    Validate {
        /// Instance files; a generated corpus is used when none are given.
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 7)]
        min_n: usize,
    },
    /// Biased barrier, auxiliary multigraph, matchings, c3 bound and cutset.
    Ledger { file: PathBuf },
    /// Graphviz rendering with optional overlays.
    ExportDot {
        file: PathBuf,
        /// Colour the biased barrier and cluster its components.
        #[arg(long)]
        barrier: bool,
        /// Draw a 2-factor in bold.
        #[arg(long)]
        two_factor: bool,
    },
    /// Generate one triangulation.
    Generate {
        #[arg(long, value_enum, default_value_t = Kind::Apollonian)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Diagonal flips for `random-flip`.
        #[arg(long, default_value_t = 0)]
        flips: usize,
        #[arg(long, value_enum)]
        base: Option<Base>,
        /// Emit graph6 instead of the edge-list format.
        #[arg(long)]
        graph6: bool,
    },
    /// Generate and annotate a corpus; prints the manifest.
    Corpus {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 7)]
        min_n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Apollonian,
    Stellation,
    RandomFlip,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Base {
    Tetrahedron,
    Octahedron,
    Icosahedron,
}

/// An error together with whatever was produced before it (the report of
/// a validation run that found counterexamples, say).
#[derive(Debug)]
pub struct Failure {
    pub output: String,
    pub error: CliError,
}

impl From<CliError> for Failure {
    fn from(error: CliError) -> Self {
        Failure {
            output: String::new(),
            error,
        }
    }
}

fn read(path: &PathBuf) -> Result<Instance, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_instance(&text)
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn no_dot(cmd: &str) -> CliError {
    CliError::Usage(format!("--format dot is only available for export-dot, not {cmd}"))
}

pub fn run(cli: &Cli) -> Result<String, Failure> {
    let g = &cli.global;
    let opts = Options {
        guard: g.guard_exhaustive,
        jobs: g.jobs,
    };
    match &cli.command {
        Command::Info { file } => {
            let info = commands::cmd_info(&read(file)?, opts)?;
            match g.format {
                Format::Json => Ok(json(&info)),
                Format::Table => Ok(commands::info_table(&info)),
                Format::Dot => Err(no_dot("info").into()),
            }
        }
        Command::Validate { files, count, min_n } => {
            let items = if files.is_empty() {
                commands::default_corpus(*count, *min_n, g.max_n, g.seed)?
            } else {
                files
                    .iter()
                    .map(|f| {
                        let inst = read(f)?;
                        Ok(CorpusItem {
                            id: f.display().to_string(),
                            graph: inst.graph,
                            embedding: inst.embedding,
                            generator: None,
                        })
                    })
                    .collect::<Result<_, CliError>>()?
            };
            let report = commands::validate(items, opts)?;
            let output = match g.format {
                Format::Json => json(&report),
                Format::Table => commands::validation_table(&report),
                Format::Dot => return Err(no_dot("validate").into()),
            };
            if report.counterexamples.is_empty() {
                Ok(output)
            } else {
                Err(Failure {
                    output,
                    error: CliError::Counterexample(report.counterexamples.len()),
                })
            }
        }
        Command::Ledger { file } => {
            let outcome = commands::cmd_ledger(&read(file)?, opts)?;
            match g.format {
                Format::Json => Ok(json(&outcome)),
                Format::Table => Ok(commands::ledger_table(&outcome)),
                Format::Dot => Err(no_dot("ledger").into()),
            }
        }
        Command::ExportDot {
            file,
            barrier,
            two_factor,
        } => {
            let overlays = DotOverlays {
                barrier: *barrier,
                two_factor: *two_factor,
            };
            Ok(commands::cmd_export_dot(&read(file)?, overlays, opts)?)
        }
        Command::Generate {
            kind,
            n,
            flips,
            base,
            graph6,
        } => {
            let spec = GeneratorSpec {
                kind: match kind {
                    Kind::Apollonian => GeneratorKind::Apollonian,
                    Kind::Stellation => GeneratorKind::Stellation,
                    Kind::RandomFlip => GeneratorKind::RandomFlip { flips: *flips },
                },
                n: *n,
                seed: g.seed,
                base: base.map(|b| match b {
                    Base::Tetrahedron => NamedBase::Tetrahedron,
                    Base::Octahedron => NamedBase::Octahedron,
                    Base::Icosahedron => NamedBase::Icosahedron,
                }),
            };
            let (graph, emb) = spec.generate().map_err(CliError::from)?;
            if *graph6 {
                return Ok(format!("{}\n", write_graph6(&graph)));
            }
            let mut inst = Instance::new(graph).with_embedding(emb);
            inst.meta.insert(
                "generator".into(),
                serde_json::to_string(&spec).expect("spec serializes"),
            );
            Ok(write_instance(&inst))
        }
        Command::Corpus { count, min_n } => {
            let items = commands::default_corpus(*count, *min_n, g.max_n, g.seed)?;
            let entries = commands::annotate_corpus(items, opts)?;
            let m = commands::manifest(&entries);
            match g.format {
                Format::Json => Ok(json(&m)),
                Format::Table => {
                    let rows: Vec<Vec<String>> = m
                        .iter()
                        .map(|e| {
                            vec![
                                e.id.clone(),
                                e.n.to_string(),
                                e.toughness.clone(),
                                e.dist_condition.to_string(),
                                e.two_factor.to_string(),
                                e.hamiltonian.map_or("-".into(), |h| h.to_string()),
                                e.graph6.clone(),
                            ]
                        })
                        .collect();
                    Ok(commands::table(
                        &["id", "n", "tau", "dist", "2-factor", "hamiltonian", "graph6"],
                        &rows,
                    ))
                }
                Format::Dot => Err(no_dot("corpus").into()),
            }
        }
    }
}
