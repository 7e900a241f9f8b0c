//! Command-line surface: run the Carter subgroup engine, the
//! induced-conjugacy check, the theorem and lemma verifiers, the almost
//! simple catalog, or a whole corpus directory.

use carter_cli::{catalog, corpus, format, report};

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use carter_core::Limits;

use corpus::Command as RunCommand;
use report::Format;

#[derive(Parser)]
#[command(
    name = "carter-cli",
    about = "Carter subgroups, conjugacy checks and structural lemma verifiers for finite permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Args)]
struct CommonOpts {
    /// Group file (`degree N` + cycle generators, or `cayley N` +
    /// table); standard input when omitted or `-`.
    input: Option<PathBuf>,
    /// Largest group order enumerated exhaustively.
    #[arg(long, default_value_t = 400)]
    limit_subgroups: u64,
    /// Largest degree for element-action realizations of factors.
    #[arg(long, default_value_t = 2500)]
    limit_degree: u64,
    /// Largest group order for the pruned Carter search.
    #[arg(long, default_value_t = 2000)]
    limit_pruned: u64,
    /// Largest group order for overgroup enumeration.
    #[arg(long, default_value_t = 400)]
    limit_overgroups: u64,
    /// Output format.
    #[arg(long, default_value = "text", value_parser = parse_format)]
    format: Format,
}

impl CommonOpts {
    fn limits(&self) -> Limits {
        Limits {
            exhaustive_subgroups: self.limit_subgroups,
            pruned_carter: self.limit_pruned,
            induced_degree: self.limit_degree,
            overgroups: self.limit_overgroups,
        }
    }
}

fn parse_format(s: &str) -> Result<Format, String> {
    Format::parse(s).ok_or_else(|| format!("unknown format {s:?}; use text or structured"))
}

#[derive(Subcommand)]
enum Commands {
    /// Enumerate Carter subgroup classes.
    Carter(CommonOpts),
    /// Check the induced-conjugacy condition over the composition
    /// factors.
    Star(CommonOpts),
    /// Check that conjugate-or-absent Carter subgroups follow from the
    /// induced-conjugacy condition.
    Theorem(CommonOpts),
    /// Verify that Carter images stay Carter in every quotient.
    Lemma1(CommonOpts),
    /// Verify the wreath-embedding claims over a nonabelian minimal
    /// normal subgroup.
    Lemma3(CommonOpts),
    /// Verify the central-element properties of a Carter subgroup.
    Lemma5(CommonOpts),
    /// Query the almost simple classification table.
    Catalog {
        /// Socle family, e.g. alternating, A1, Bl, 2B2, E6, Al.
        #[arg(long)]
        family: String,
        /// Rank parameter l.
        #[arg(long)]
        l: Option<u64>,
        /// Field characteristic r.
        #[arg(long)]
        r: Option<u64>,
        /// Field power t (the field has r^t elements).
        #[arg(long)]
        t: Option<u64>,
        /// Whether A = G, when known.
        #[arg(long)]
        a_equals_g: Option<bool>,
        /// Whether A over its inner-diagonal part is a 2-group, when
        /// known.
        #[arg(long)]
        two_group_quotient: Option<bool>,
        /// Whether the inner-diagonal part of A has index at most 2 in
        /// Ghat, when known.
        #[arg(long)]
        ghat_index_le_2: Option<bool>,
        /// Whether A consists of inner-diagonal automorphisms, when
        /// known.
        #[arg(long)]
        inside_ghat: Option<bool>,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: Format,
    },
    /// Run one verifier over every group file in a directory.
    Corpus {
        directory: PathBuf,
        /// One of carter, star, theorem, lemma1, lemma3, lemma5.
        #[arg(long, default_value = "theorem", value_parser = parse_run_command)]
        command: RunCommand,
        #[arg(long, default_value_t = 400)]
        limit_subgroups: u64,
        #[arg(long, default_value_t = 2500)]
        limit_degree: u64,
        #[arg(long, default_value_t = 2000)]
        limit_pruned: u64,
        #[arg(long, default_value_t = 400)]
        limit_overgroups: u64,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: Format,
    },
}

fn parse_run_command(s: &str) -> Result<RunCommand, String> {
    RunCommand::parse(s).ok_or_else(|| format!("unknown command {s:?}"))
}

fn read_input(path: &Option<PathBuf>) -> Result<(String, String), String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            let id = p
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "input".to_string());
            Ok((id, text))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(("stdin".to_string(), text))
        }
    }
}

fn run_single(opts: &CommonOpts, command: RunCommand) -> Result<bool, String> {
    let (fallback_id, text) = read_input(&opts.input)?;
    let file = format::parse_group_file(&text, &fallback_id).map_err(|e| e.to_string())?;
    let g = file.group().map_err(|e| e.to_string())?;
    let (output, violation) =
        corpus::run_one(&g, &file.id, command, &opts.limits(), opts.format)?;
    print!("{output}");
    Ok(violation)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Result<bool, String> = match &cli.command {
        Commands::Carter(opts) => run_single(opts, RunCommand::Carter),
        Commands::Star(opts) => run_single(opts, RunCommand::Star),
        Commands::Theorem(opts) => run_single(opts, RunCommand::Theorem),
        Commands::Lemma1(opts) => run_single(opts, RunCommand::Lemma1),
        Commands::Lemma3(opts) => run_single(opts, RunCommand::Lemma3),
        Commands::Lemma5(opts) => run_single(opts, RunCommand::Lemma5),
        Commands::Catalog {
            family,
            l,
            r,
            t,
            a_equals_g,
            two_group_quotient,
            ghat_index_le_2,
            inside_ghat,
            format,
        } => (|| {
            let fam = catalog::Family::parse(family)
                .ok_or_else(|| catalog::UnknownFamily(family.clone()).to_string())?;
            let params = catalog::Params {
                l: *l,
                r: *r,
                t: *t,
            };
            let ext = catalog::ExtensionDescriptor {
                a_equals_g: *a_equals_g,
                quotient_by_ghat_two_group: *two_group_quotient,
                ghat_index_le_2: *ghat_index_le_2,
                inside_ghat: *inside_ghat,
            };
            let lookup = catalog::catalog_lookup(fam, &params, &ext).map_err(|e| e.to_string())?;
            print!("{}", report::render_catalog(&lookup, *format));
            Ok(false)
        })(),
        Commands::Corpus {
            directory,
            command,
            limit_subgroups,
            limit_degree,
            limit_pruned,
            limit_overgroups,
            format,
        } => (|| {
            let limits = Limits {
                exhaustive_subgroups: *limit_subgroups,
                pruned_carter: *limit_pruned,
                induced_degree: *limit_degree,
                overgroups: *limit_overgroups,
            };
            let mut files = Vec::new();
            let entries = std::fs::read_dir(directory)
                .map_err(|e| format!("{}: {e}", directory.display()))?;
            for entry in entries {
                let entry = entry.map_err(|e| e.to_string())?;
                let path = entry.path();
                if path.is_file() {
                    let id = path
                        .file_stem()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_else(|| path.display().to_string());
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                    files.push((id, text));
                }
            }
            let summary = corpus::run_corpus(&files, *command, &limits, *format);
            print!("{}", corpus::render_summary(&summary));
            Ok(summary.violations > 0)
        })(),
    };
    match outcome {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
