//! `darboux` — figure data, spectra, potentials, and the verification suite
//! for complex one-dimensional potentials with real spectra.

mod commands;
mod output;
mod parse;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use darboux::Complex64;

use commands::{
    cmd_figures, cmd_potential_bb, cmd_potential_harmonic, cmd_spectrum_expwell,
    cmd_spectrum_harmonic, BBPotentialArgs, ExpSpectrumArgs, FigureId, HarmonicPotentialArgs,
    HarmonicSpectrumArgs,
};
use parse::{parse_complex, parse_grid, GridSpec};

#[derive(Parser)]
#[command(
    name = "darboux",
    version,
    about = "Complex 1-D potentials with real spectra: figure data, spectra tables, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the data behind the three partner-potential figures as CSV.
    Figures {
        #[arg(value_enum)]
        which: FigureId,
        /// Output directory for the figN.csv file.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Print (and optionally save) analytic and numerical spectra.
    Spectrum {
        #[command(subcommand)]
        family: SpectrumFamily,
    },
    /// Sample a partner potential to CSV.
    Potential {
        #[command(subcommand)]
        family: PotentialFamily,
    },
    /// Run the verification suite; exit status 0 iff every check passes.
    Verify {
        /// Only run checks whose name starts with this prefix
        /// (specfun, darboux, harmonic, bb, exp, numerics).
        #[arg(long)]
        suite: Option<String>,
        /// Write the JSON report here (defaults to stdout summary only).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, hide = true)]
        inject_corruption: bool,
    },
}

#[derive(Subcommand)]
enum SpectrumFamily {
    /// Deformed-oscillator family: levels {eps, 1/2, 3/2, ...}.
    Harmonic {
        #[arg(long, allow_negative_numbers = true)]
        epsilon: f64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        beta: Complex64,
        #[arg(long, default_value_t = 5)]
        levels: usize,
        /// Also diagonalize the discretized partner on this grid
        /// (defaults to -10:10:801 when --numeric is set).
        #[arg(long, value_parser = parse_grid, allow_hyphen_values = true)]
        grid: Option<GridSpec>,
        /// Compute the numerical spectrum alongside the analytic one.
        #[arg(long)]
        numeric: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Periodic exponential well: exact (perforated) or semiclassical levels.
    Expwell {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 4)]
        levels: usize,
        /// Emit the semiclassical ladder instead of the exact spectrum.
        #[arg(long)]
        semiclassical: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum PotentialFamily {
    /// Deformed-oscillator partner on a real grid.
    Harmonic {
        #[arg(long, allow_negative_numbers = true)]
        epsilon: f64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        beta: Complex64,
        #[arg(long, value_parser = parse_grid, allow_hyphen_values = true, default_value = "-5:5:1001")]
        grid: GridSpec,
        #[arg(long, default_value = "potential_harmonic.csv")]
        out: PathBuf,
    },
    /// -(ix)^N/2 partner along its anti-Stokes contour.
    Bb {
        #[arg(long = "bigN")]
        big_n: f64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "1")]
        alpha: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "0")]
        beta: Complex64,
        /// Arclength half-extent of the contour.
        #[arg(long, default_value_t = 6.0)]
        scale: f64,
        /// Number of contour samples (odd).
        #[arg(long, default_value_t = 201)]
        count: usize,
        #[arg(long, default_value = "potential_bb.csv")]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Figures { which, out } => {
            let path = cmd_figures(which, &out)?;
            println!("wrote {}", path.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum { family } => {
            let (output, out, format) = match family {
                SpectrumFamily::Harmonic {
                    epsilon,
                    beta,
                    levels,
                    grid,
                    numeric,
                    out,
                    format,
                } => (
                    cmd_spectrum_harmonic(&HarmonicSpectrumArgs {
                        epsilon,
                        beta,
                        levels,
                        grid,
                        numeric,
                    })?,
                    out,
                    format,
                ),
                SpectrumFamily::Expwell {
                    m,
                    levels,
                    semiclassical,
                    out,
                    format,
                } => (
                    cmd_spectrum_expwell(&ExpSpectrumArgs {
                        m,
                        levels,
                        semiclassical,
                    })?,
                    out,
                    format,
                ),
            };
            output.print_table();
            if let Some(path) = out {
                match format {
                    Format::Csv => output.write_csv(&path)?,
                    Format::Json => output.write_json(&path)?,
                }
                println!("wrote {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Potential { family } => {
            match family {
                PotentialFamily::Harmonic {
                    epsilon,
                    beta,
                    grid,
                    out,
                } => {
                    cmd_potential_harmonic(
                        &HarmonicPotentialArgs {
                            epsilon,
                            beta,
                            grid,
                        },
                        &out,
                    )?;
                    println!("wrote {}", out.display());
                }
                PotentialFamily::Bb {
                    big_n,
                    alpha,
                    beta,
                    scale,
                    count,
                    out,
                } => {
                    cmd_potential_bb(
                        &BBPotentialArgs {
                            big_n,
                            alpha,
                            beta,
                            scale,
                            count,
                        },
                        &out,
                    )?;
                    println!("wrote {}", out.display());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            out,
            inject_corruption,
        } => {
            let seed_tol = match std::env::var("DARBOUX_SEED_TOL") {
                Ok(v) => v
                    .parse::<f64>()
                    .map_err(|e| format!("DARBOUX_SEED_TOL must be a float: {e}"))?,
                Err(_) => 1e-7,
            };
            if !(seed_tol > 0.0) {
                return Err("DARBOUX_SEED_TOL must be positive".into());
            }
            let report = verify::run(&verify::VerifyOptions {
                suite,
                inject_corruption,
                seed_tol,
            });
            for check in &report.checks {
                let status = if check.pass { "pass" } else { "FAIL" };
                println!(
                    "{status}  {:<44} measured {:>12.4e}  {} {:.4e}",
                    check.name, check.measured, check.op, check.bound
                );
            }
            println!(
                "verify: {}/{} checks passed",
                report.total - report.failed,
                report.total
            );
            if let Some(path) = out {
                output::write_json(&path, &report).map_err(|e| e.to_string())?;
                println!("wrote {}", path.display());
            }
            Ok(if report.failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}
