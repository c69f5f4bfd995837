//! Command-line front end.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check ran and
//! failed (a violated inequality, a failed structure check, a failed
//! oracle), 2 when the inputs themselves are unusable (parse errors,
//! invalid parameters, broken meshes, inconsistent decompositions).

use clap::{Args, Parser, Subcommand, ValueEnum};
use cmc_bounds::config::{load_config, ParamsPatch, CONFIG_ENV};
use cmc_bounds::estimates::{bounds_report, check_surface, validate_structure};
use cmc_bounds::hyperbolic::BoundaryCurve;
use cmc_bounds::mesh::{analyze_mesh, load_mesh};
use cmc_bounds::oracles::run_suite;
use cmc_bounds::Error;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "cmc-bounds",
    version,
    about = "Geometric bounds for surfaces of constant mean curvature and bounded index",
    after_help = format!(
        "Configuration is resolved in three layers: built-in defaults, then the \
         TOML file given by --config (or the {CONFIG_ENV} environment variable), \
         then command-line flags."
    )
)]
struct Cli {
    /// TOML configuration file; defaults to the file named by CMC_BOUNDS_CONFIG.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

/// Geometric parameter overrides, applied over the configuration file.
#[derive(Args, Debug, Default)]
struct ParamFlags {
    /// Stability index ceiling I (a surface of index at most I is assumed).
    #[arg(long = "I", value_name = "N")]
    index_bound: Option<u64>,

    /// Injectivity radius floor of the ambient space.
    #[arg(long = "r0", value_name = "R")]
    r0: Option<f64>,

    /// Ceiling on the absolute ambient sectional curvature.
    #[arg(long = "K0", value_name = "K")]
    k0: Option<f64>,

    /// Ceiling on the surface's constant mean curvature.
    #[arg(long = "H0", value_name = "H")]
    h0: Option<f64>,

    /// Ceiling on the norm of the ambient curvature tensor.
    #[arg(long = "Cs", value_name = "C")]
    cs: Option<f64>,

    /// Ceiling on the norm of the traceless second fundamental form, used
    /// by the curvature-concentration bounds.
    #[arg(long = "A1", value_name = "A")]
    a1: Option<f64>,

    /// Positive floor on the ambient scalar curvature; enables the
    /// compact-case area, diameter, and genus ceilings.
    #[arg(long = "c", value_name = "S")]
    c: Option<f64>,
}

#[derive(Args, Debug)]
struct OutputFlags {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the constants and bounds implied by a parameter set.
    Bounds {
        #[command(flatten)]
        params: ParamFlags,

        /// Genus at which to evaluate the genus-dependent bounds.
        #[arg(long = "g", value_name = "G", default_value_t = 0)]
        genus: u64,

        #[command(flatten)]
        output: OutputFlags,
    },

    /// Measure a triangulated surface (OFF or OBJ) and check it against
    /// the bounds for the given parameters.
    MeshCheck {
        /// Mesh file, .off or .obj.
        mesh: PathBuf,

        #[command(flatten)]
        params: ParamFlags,

        #[command(flatten)]
        output: OutputFlags,
    },

    /// Validate a decomposition document describing how index concentrates
    /// on a surface.
    StructureCheck {
        /// TOML document with a [structure] section; falls back to the
        /// structure section of the configuration file.
        document: Option<PathBuf>,

        #[command(flatten)]
        params: ParamFlags,

        #[command(flatten)]
        output: OutputFlags,
    },

    /// Run the numeric cross-checks that validate the closed forms
    /// (quadrature, ODE integration, finite differences).
    Verify {
        /// CSV of arclength,curvature samples for an extra boundary curve
        /// to push through the collar cross-checks.
        #[arg(long, value_name = "PATH")]
        curve: Option<PathBuf>,

        #[command(flatten)]
        output: OutputFlags,
    },
}

impl ParamFlags {
    fn patch(&self) -> ParamsPatch {
        ParamsPatch {
            index_bound: self.index_bound,
            r0: self.r0,
            k0: self.k0,
            h0: self.h0,
            cs: self.cs,
            a1: self.a1,
            c: self.c,
        }
    }
}

fn emit(output: &OutputFlags, text: &str) -> Result<(), Error> {
    match &output.out {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            Error::Io(std::io::Error::new(
                e.kind(),
                format!("cannot write {}: {e}", path.display()),
            ))
        }),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            // A closed pipe downstream (`... | head`) is not our failure.
            match writeln!(stdout, "{text}") {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                other => other.map_err(Error::Io),
            }
        }
    }
}

/// What the run concluded: checks passed, or some check failed.
enum Outcome {
    Passed,
    Failed,
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let document = load_config(cli.config.as_deref())?;
    match cli.command {
        Command::Bounds {
            params,
            genus,
            output,
        } => {
            let params = document.resolve_params(&params.patch())?;
            let report = bounds_report(&params, genus, None)?;
            let text = match output.format {
                Format::Table => report.render_table(),
                Format::Json => report.to_json()?,
            };
            emit(&output, &text)?;
            Ok(if report.violated() {
                Outcome::Failed
            } else {
                Outcome::Passed
            })
        }
        Command::MeshCheck {
            mesh,
            params,
            output,
        } => {
            let flag_patch = params.patch();
            let mut params = document.resolve_params(&flag_patch)?;
            let loaded = load_mesh(&mesh)?;
            let analysis = analyze_mesh(&loaded.surface)?;
            // An index bound or curvature ceiling the user never stated
            // defaults to what the mesh itself exhibits, so a bare
            // `mesh-check surface.off` checks the surface against its own
            // measurements instead of refusing to run.
            let file_patch = document.params.clone().unwrap_or_default();
            if flag_patch.index_bound.is_none() && file_patch.index_bound.is_none() {
                params.index_bound = analysis.summary.index;
            }
            if flag_patch.h0.is_none()
                && file_patch.h0.is_none()
                && analysis.summary.mean_curvature > params.h0
            {
                params.h0 = analysis.summary.mean_curvature;
            }
            let report = check_surface(&analysis.summary, &params)?;
            let text = match output.format {
                Format::Table => {
                    let mut t = String::new();
                    for w in &loaded.warnings {
                        t.push_str(&format!("warning: {w}\n"));
                    }
                    t.push_str(&analysis.render_table());
                    t.push('\n');
                    t.push_str(&report.render_table());
                    t
                }
                Format::Json => serde_json::to_string_pretty(&serde_json::json!({
                    "warnings": loaded.warnings,
                    "analysis": analysis,
                    "bounds": report,
                }))
                .map_err(|e| Error::Parse(e.to_string()))?,
            };
            emit(&output, &text)?;
            Ok(if report.violated() {
                Outcome::Failed
            } else {
                Outcome::Passed
            })
        }
        Command::StructureCheck {
            document: doc_path,
            params,
            output,
        } => {
            let params = document.resolve_params(&params.patch())?;
            let structure = match &doc_path {
                Some(path) => cmc_bounds::config::ConfigDocument::from_path(path)?
                    .structure
                    .ok_or_else(|| {
                        Error::Parse(format!("{} has no [structure] section", path.display()))
                    })?,
                None => document.structure.clone().ok_or_else(|| {
                    Error::Params(
                        "no structure document: pass a file or put a [structure] \
                         section in the configuration"
                            .into(),
                    )
                })?,
            };
            let report = validate_structure(&structure, &params)?;
            let text = match output.format {
                Format::Table => report.render_table(),
                Format::Json => report.to_json()?,
            };
            emit(&output, &text)?;
            Ok(if report.passed {
                Outcome::Passed
            } else {
                Outcome::Failed
            })
        }
        Command::Verify { curve, output } => {
            let extra = curve
                .as_deref()
                .map(BoundaryCurve::read_csv_path)
                .transpose()?;
            let suite = run_suite(extra.as_ref())?;
            let text = match output.format {
                Format::Table => {
                    let mut t = String::new();
                    for case in &suite.cases {
                        t.push_str(&format!(
                            "{} {:<55} closed {: >17.10e}  oracle {: >17.10e}  err {:.3e}\n",
                            if case.passed { "pass" } else { "FAIL" },
                            case.case,
                            case.closed_form,
                            case.oracle,
                            case.abs_error,
                        ));
                    }
                    t.push_str(&format!(
                        "{} of {} cross-checks passed\n",
                        suite.cases.iter().filter(|c| c.passed).count(),
                        suite.cases.len()
                    ));
                    t
                }
                Format::Json => serde_json::to_string_pretty(&suite)
                    .map_err(|e| Error::Parse(e.to_string()))?,
            };
            emit(&output, &text)?;
            Ok(if suite.passed {
                Outcome::Passed
            } else {
                Outcome::Failed
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Passed) => ExitCode::from(0),
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
