//! Command-line front end.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use crate::frft::{
    apply_frft, apply_frft_fast, apply_frft_to_grid, build_frft_kernel, reduce_order, FrftMethod,
};
use crate::grid::UniformGrid;
use crate::io::{read_signal_file, write_file_atomically, write_signal, write_tomogram};
use crate::oscillator::{propagate, OscillatorConfig, PropagationTime};
use crate::test_signals::{generate_test_signal, TestSignal};
use crate::tomography::{
    default_mu_grid, default_x_grid, rank_one_deviation, reconstruct_correlation,
    reconstruct_signal, tomogram, tomogram_via_frft_with, TomographyParams,
};
use crate::verify::{run_suite, Suite, Tolerances};
use crate::wigner::wigner_map;

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;
pub const EXIT_VERIFY: u8 = 4;

/// Grid given on the command line as `start:step:count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec(pub UniformGrid);

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, step, count] = parts[..] else {
            return Err(format!("expected start:step:count, got `{s}`"));
        };
        let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}"));
        let count = count
            .trim()
            .parse::<usize>()
            .map_err(|e| format!("`{count}`: {e}"))?;
        UniformGrid::new(num(start)?, num(step)?, count)
            .map(GridSpec)
            .map_err(|e| e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "fractomo",
    version,
    about = "FrFT, oscillator propagation and symplectic tomography"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write one of the bundled test signals.
    Generate {
        #[arg(long)]
        kind: TestSignal,
        #[arg(long, default_value = "-8:0.015625:1024")]
        grid: GridSpec,
        #[arg(long)]
        out: PathBuf,
    },
    /// Fractional Fourier transform of order `a`.
    Frft {
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Output grid; defaults to the input grid.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<GridSpec>,
        /// Chirp-z evaluation instead of direct quadrature.
        #[arg(long)]
        fast: bool,
    },
    /// Dump the FrFT kernel matrix as `row,col,re,im`.
    Kernel {
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true, default_value = "-4:0.03125:256")]
        grid: GridSpec,
        #[arg(long)]
        out: PathBuf,
    },
    /// Oscillator evolution over time `t`.
    Propagate {
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
    },
    /// Symplectic tomogram w(X; mu, nu).
    Tomogram {
        #[arg(long, allow_hyphen_values = true)]
        mu: f64,
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Grid of X values.
        #[arg(long, allow_hyphen_values = true, default_value = "-20:0.05:801")]
        grid: GridSpec,
        /// Evaluate through the FrFT instead of the direct integral.
        #[arg(long)]
        via_frft: bool,
    },
    /// Synthesize the tomograms of the input signal and recover the signal
    /// from them, up to a global phase.
    Reconstruct {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Signal grid for the reconstruction; defaults to the input grid.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<GridSpec>,
        /// Grid of mu values.
        #[arg(long, allow_hyphen_values = true)]
        mu_grid: Option<GridSpec>,
        /// Normalized X grid (X divided by hypot(mu, nu)).
        #[arg(long, allow_hyphen_values = true)]
        x_grid: Option<GridSpec>,
        /// Also write the correlation matrix as `row,col,re,im`.
        #[arg(long)]
        correlation: Option<PathBuf>,
    },
    /// Wigner map sampled on the input grid and a frequency grid.
    Wigner {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Angular-frequency grid.
        #[arg(long, allow_hyphen_values = true, default_value = "-32:0.0625:1024")]
        grid: GridSpec,
        /// Also write a PGM heatmap.
        #[arg(long)]
        pgm: Option<PathBuf>,
    },
    /// Run the invariant suite and write a CSV report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Report path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long = "tol-override")]
        tol_override: Vec<String>,
    },
}

pub fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Io(_) | Error::Parse { .. } | Error::InvalidConfig(_) | Error::InvalidGrid(_) => {
            EXIT_USAGE
        }
        _ => EXIT_DOMAIN,
    }
}

/// Parses the process arguments, applies `FRACTOMO_THREADS` and runs.
pub fn main_entry() -> ExitCode {
    let config = RunConfig::parse();
    if let Some(n) = std::env::var("FRACTOMO_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
        {
            log::warn!("could not size thread pool: {e}");
        }
    }
    match run(&config) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed");
            ExitCode::from(EXIT_VERIFY)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// Runs one command. Returns `Ok(false)` when a verification suite fails.
pub fn run(config: &RunConfig) -> Result<bool> {
    match &config.command {
        Command::Generate { kind, grid, out } => {
            let s = generate_test_signal(*kind, grid.0)?;
            save(out, |f| write_signal(f, &s))?;
        }
        Command::Frft {
            a,
            input,
            out,
            grid,
            fast,
        } => {
            let s = read_signal_file(input)?;
            let order = reduce_order(*a)?;
            let method = if *fast {
                FrftMethod::ChirpZ
            } else {
                FrftMethod::Quadrature
            };
            let result = match grid {
                Some(g) => apply_frft_to_grid(&s, order, g.0, method)?,
                None if *fast => apply_frft_fast(&s, order)?,
                None => apply_frft(&s, order)?,
            };
            save(out, |f| write_signal(f, &result))?;
        }
        Command::Kernel { a, grid, out } => {
            let k = build_frft_kernel(reduce_order(*a)?, grid.0)?;
            save(out, |f| k.write_dump(f))?;
        }
        Command::Propagate {
            t,
            input,
            out,
            mass,
            omega,
            hbar,
        } => {
            let cfg = OscillatorConfig::new(*mass, *omega, *hbar)?;
            let s = read_signal_file(input)?;
            let result = propagate(&cfg, &s, PropagationTime::new(*t))?;
            save(out, |f| write_signal(f, &result))?;
        }
        Command::Tomogram {
            mu,
            nu,
            input,
            out,
            grid,
            via_frft,
        } => {
            let s = read_signal_file(input)?;
            let p = TomographyParams::new(*mu, *nu)?;
            let w = if *via_frft {
                tomogram_via_frft_with(&s, p, grid.0, FrftMethod::ChirpZ)?
            } else {
                tomogram(&s, p, grid.0)?
            };
            save(out, |f| write_tomogram(f, &w))?;
        }
        Command::Reconstruct {
            input,
            out,
            grid,
            mu_grid,
            x_grid,
            correlation,
        } => {
            let s = read_signal_file(input)?;
            let grid = grid.map_or(*s.grid(), |g| g.0);
            let provider = |xg: &UniformGrid, mu: f64, nu: f64| {
                tomogram_via_frft_with(&s, TomographyParams::new(mu, nu)?, *xg, FrftMethod::ChirpZ)
            };
            let corr = reconstruct_correlation(
                provider,
                grid,
                mu_grid.map_or_else(default_mu_grid, |g| g.0),
                x_grid.map_or_else(default_x_grid, |g| g.0),
            )?;
            log::info!(
                "hermiticity defect {:e}, rank-one deviation {:e}",
                corr.hermiticity_defect(),
                rank_one_deviation(&corr)
            );
            let rec = reconstruct_signal(&corr)?;
            if let Some(path) = correlation {
                save(path, |f| corr.write_dump(f))?;
            }
            save(out, |f| write_signal(f, &rec))?;
        }
        Command::Wigner {
            input,
            out,
            grid,
            pgm,
        } => {
            let s = read_signal_file(input)?;
            let wm = wigner_map(&s, grid.0);
            save(out, |f| wm.write_grid_text(f))?;
            if let Some(path) = pgm {
                save(path, |f| wm.write_pgm(f))?;
            }
        }
        Command::Verify {
            suite,
            out,
            tol_override,
        } => {
            let mut tol = Tolerances::default();
            for spec in tol_override {
                tol.set_override(spec)?;
            }
            let report = run_suite(*suite, &tol)?;
            match out {
                Some(path) => save(path, |f| report.write_csv(f))?,
                None => report.write_csv(std::io::stdout().lock())?,
            }
            return Ok(report.all_passed());
        }
    }
    Ok(true)
}

fn save(path: &Path, body: impl FnOnce(&mut fs::File) -> std::io::Result<()>) -> Result<()> {
    write_file_atomically(path, |f| body(f).map_err(Error::from))
}
