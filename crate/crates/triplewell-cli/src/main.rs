//! `triplewell` — data-series front end for the exactly-solvable
//! triple-well models: potentials, eigenstates, packet expansions, time
//! evolution, and the verification suite. All outputs are plain CSV/JSON;
//! plotting is left to external tools.

mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use triplewell::dynamics::{
    evolve_propagator, evolve_spectral, expand, initial_packet, well_probabilities,
};
use triplewell::grid::trapezoid_c;
use triplewell::verify::{acceptance_checks, format_line, invariant_checks};
use triplewell::{Error, Model, TimePoint};

use config::RunConfig;

const EXIT_CONFIG: u8 = 2;
const EXIT_NUMERIC: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(
    name = "triplewell",
    about = "Exactly-solvable triple-well quantum models: potentials, eigenbasis, exact propagator, tunneling dynamics",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// JSON run configuration; built-in defaults when omitted.
    #[arg(long, global = true)]
    config: Option<String>,
    /// Output directory (overrides the config's `outputs`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print the resolved configuration and exit.
    #[arg(long, global = true)]
    dry_run: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the potential curve (potential.csv) and its extrema (extrema.json).
    Potential,
    /// Emit eigenfunction samples (states.csv) and the spectrum (energies.json).
    States,
    /// Expand the configured packet over the eigenbasis (coefficients.json).
    Expand,
    /// Evolve the configured packet at the configured times
    /// (evolution.csv, wells.csv).
    Evolve {
        /// Evolution path to emit.
        #[arg(long, value_enum, default_value_t = Method::Spectral)]
        method: Method,
    },
    /// Run the full verification suite and write verify.json;
    /// exit code 0 only if every check passes.
    Verify,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Propagator,
    Spectral,
    Both,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match config::load(cli.config.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    if cli.dry_run {
        println!(
            "{}",
            serde_json::to_string_pretty(&cfg).expect("config serializes")
        );
        return ExitCode::SUCCESS;
    }
    let out_dir = cli
        .out
        .clone()
        .or_else(|| cfg.outputs.clone().map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));
    if let Err(e) = std::fs::create_dir_all(&out_dir) {
        eprintln!("error: cannot create output directory {out_dir:?}: {e}");
        return ExitCode::FAILURE;
    }
    let result = match cli.command {
        Command::Potential => cmd_potential(&cfg, &out_dir),
        Command::States => cmd_states(&cfg, &out_dir),
        Command::Expand => cmd_expand(&cfg, &out_dir),
        Command::Evolve { method } => cmd_evolve(&cfg, &out_dir, method),
        Command::Verify => cmd_verify(&out_dir),
    };
    match result {
        Ok(code) => code,
        Err(CmdError::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_CONFIG)
        }
        Err(CmdError::Numeric(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_NUMERIC)
        }
        Err(CmdError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

enum CmdError {
    Config(String),
    Numeric(Error),
    Io(String),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParams(_) | Error::Grid(_) => CmdError::Config(e.to_string()),
            Error::Io(m) => CmdError::Io(m),
            other => CmdError::Numeric(other),
        }
    }
}

fn build_model(cfg: &RunConfig) -> Result<Model, CmdError> {
    Model::new(cfg.model_params()).map_err(|e| CmdError::Config(format!("model: {e}")))
}

fn cmd_potential(cfg: &RunConfig, out: &PathBuf) -> Result<ExitCode, CmdError> {
    let model = build_model(cfg)?;
    let grid = cfg.grid_spec().map_err(|e| CmdError::Config(e.to_string()))?;
    let xs = grid.samples();
    let u = model.potential_grid(&xs)?;
    let part = model.well_partition(8.0_f64.min(grid.xi_max.abs()), 4001)?;
    output::write_potential_csv(out, &xs, &u).map_err(CmdError::Io)?;
    output::write_extrema_json(out, &part).map_err(CmdError::Io)?;
    println!(
        "potential.csv ({} rows), extrema.json (minima at {:.6}, {:.6}, {:.6})",
        xs.len(),
        part.minima[0],
        part.minima[1],
        part.minima[2]
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_states(cfg: &RunConfig, out: &PathBuf) -> Result<ExitCode, CmdError> {
    let model = build_model(cfg)?;
    let grid = cfg.grid_spec().map_err(|e| CmdError::Config(e.to_string()))?;
    let xs = grid.samples();
    let table = model.state_table(cfg.n_max, &xs)?;
    output::write_states_csv(out, &xs, &table.values).map_err(CmdError::Io)?;
    output::write_energies_json(out, &table.energies).map_err(CmdError::Io)?;
    println!(
        "states.csv ({} states x {} points), energies.json",
        table.values.len(),
        xs.len()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_expand(cfg: &RunConfig, out: &PathBuf) -> Result<ExitCode, CmdError> {
    let model = build_model(cfg)?;
    let grid = cfg.grid_spec().map_err(|e| CmdError::Config(e.to_string()))?;
    let spec = cfg.packet_spec(&model).map_err(CmdError::Config)?;
    let packet = initial_packet(&spec, &grid)?;
    let coeffs = expand(&model, &packet, cfg.n_max)?;
    let energies: Vec<f64> = (0..=cfg.n_max).map(|i| model.eigenvalue(i)).collect();
    output::write_coefficients_json(out, &coeffs.c, &energies).map_err(CmdError::Io)?;
    // first nine states in the published table layout
    println!("state number  {}", (1..=9).map(|n| format!("{n:>8}")).collect::<String>());
    println!(
        "c             {}",
        coeffs
            .c
            .iter()
            .take(9)
            .map(|c| format!("{c:>8.3}"))
            .collect::<String>()
    );
    println!("sum c^2 (all {} states) = {:.6}", coeffs.c.len(), coeffs.sum_sq());
    Ok(ExitCode::SUCCESS)
}

fn cmd_evolve(cfg: &RunConfig, out: &PathBuf, method: Method) -> Result<ExitCode, CmdError> {
    let model = build_model(cfg)?;
    let grid = cfg.grid_spec().map_err(|e| CmdError::Config(e.to_string()))?;
    let spec = cfg.packet_spec(&model).map_err(CmdError::Config)?;
    let times = cfg.times().map_err(CmdError::Config)?;
    let packet = initial_packet(&spec, &grid)?;
    let part = model.well_partition(8.0, 4001)?;
    let coeffs = expand(&model, &packet, cfg.n_max)?;
    // for the cross-path comparison both routes must act on the same
    // representable state: the packet's projection onto the basis
    let projected = if method == Method::Both {
        let mut p = evolve_spectral(&model, &coeffs, 0.0, &grid)?;
        p.time = 0.0;
        Some(p)
    } else {
        None
    };

    let mut evolution_rows = Vec::new();
    let mut wells_rows = Vec::new();
    let mut max_discrepancy = 0.0f64;
    for &raw_t in &times {
        // step around the kernel caustics; the shifted time is what gets
        // reported in the output rows
        let mut t = raw_t;
        if t > 0.0 {
            let frac = t % std::f64::consts::PI;
            if frac < 1e-2 || std::f64::consts::PI - frac < 1e-2 {
                t += 1e-2;
                eprintln!("warning: time {raw_t} is caustic-adjacent; shifted to {t}");
            }
        }
        let spectral = evolve_spectral(&model, &coeffs, t, &grid)?;
        let state = match method {
            Method::Spectral => spectral,
            Method::Propagator => evolve_propagator(&model, &packet, &TimePoint::new(t)?)?,
            Method::Both => {
                let input = projected.as_ref().expect("built for both-mode");
                let prop = evolve_propagator(&model, input, &TimePoint::new(t)?)?;
                let sup = spectral
                    .amps
                    .iter()
                    .zip(&prop.amps)
                    .map(|(a, b)| (a - b).norm())
                    .fold(0.0f64, f64::max);
                max_discrepancy = max_discrepancy.max(sup);
                spectral
            }
        };
        let (pl, pc, pr) = well_probabilities(&state, &part);
        let overlap: Vec<triplewell::C64> = packet
            .amps
            .iter()
            .zip(&state.amps)
            .map(|(a, b)| a.conj() * b)
            .collect();
        let autocorr = trapezoid_c(&overlap, grid.h()).norm_sqr();
        wells_rows.push((t, pl, pc, pr, autocorr));
        for (i, amp) in state.amps.iter().enumerate() {
            evolution_rows.push((t, grid.at(i), amp.re, amp.im, amp.norm()));
        }
    }
    output::write_evolution_csv(out, &evolution_rows).map_err(CmdError::Io)?;
    output::write_wells_csv(out, &wells_rows).map_err(CmdError::Io)?;
    if method == Method::Both {
        println!("max propagator/spectral discrepancy over all times: {max_discrepancy:.3e}");
    }
    println!(
        "evolution.csv ({} rows), wells.csv ({} rows)",
        evolution_rows.len(),
        wells_rows.len()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(out: &PathBuf) -> Result<ExitCode, CmdError> {
    let mut checks = acceptance_checks()?;
    checks.extend(invariant_checks()?);
    for c in &checks {
        println!("{}", format_line(c));
    }
    output::write_verify_json(out, &checks).map_err(CmdError::Io)?;
    let all_pass = checks.iter().all(|c| c.passed);
    if all_pass {
        println!("all checks passed");
        Ok(ExitCode::SUCCESS)
    } else {
        let failed: Vec<&str> = checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        eprintln!("failed checks: {failed:?}");
        Ok(ExitCode::from(EXIT_VERIFY))
    }
}
