//! `thetamix`: charge-mass mixing calculations from the command line.
//!
//! Native units are Gaussian CGS; `--si` accepts SI on input where offered
//! and SI columns are printed alongside Gaussian ones. `--json` switches
//! stdout to a single JSON document. Exit codes: 0 success, 1 runtime or
//! physics error (message on stderr), 2 usage error.
//!
//! The pinned constants can be replaced by setting THETAMIX_CONSTANTS to the
//! path of a JSON file carrying any subset of the seven fundamental values.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use thetamix_core::constants::{DerivedConstants, PhysicalConstants, PINNED_CONSTANTS};
use thetamix_core::geosphere::{self, CelestialBody, EARTH_OBSERVED_DIPOLE_G_CM3};
use thetamix_core::mixing::{
    boost_exact, boost_invariant, boost_linear, ChargeEnergyPair, ChargeMassPair,
};
use thetamix_core::nbody::{self, CsvSink};
use thetamix_core::potential::{
    coupling_primed, coupling_unprimed, potential_energy, radial_force, ParticleSpecies,
};
use thetamix_core::units::{from_si, to_si_as, Quantity};

const CONSTANTS_ENV: &str = "THETAMIX_CONSTANTS";

#[derive(Parser)]
#[command(
    name = "thetamix",
    version,
    about = "Charge-mass mixing: derived constants, boosts, the corrected pair law, Earth estimators, N-body runs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the pinned fundamental constants and the derived scales
    Constants(ConstantsArgs),
    /// Apply the exact (E, Q) boost, or the linearized (m, e) mixing
    Boost(BoostArgs),
    /// Two-body coupling, potential energy and radial force
    Potential(PotentialArgs),
    /// Fit theta to a measured surface radial field
    EarthFit(EarthFitArgs),
    /// Magnetic moment of the rotating body under the fitted coupling
    Dipole(DipoleArgs),
    /// Integrate an N-body system, writing snapshots to CSV
    Simulate(SimulateArgs),
    /// Sweep a target quantity over a uniform theta grid, as CSV
    Sweep(SweepArgs),
}

#[derive(Args)]
struct ConstantsArgs {
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BoostArgs {
    /// Energy E in erg (exact mode)
    #[arg(long = "E", allow_hyphen_values = true)]
    energy_erg: Option<f64>,
    /// Charge Q in statC (exact mode)
    #[arg(long = "Q", allow_hyphen_values = true)]
    charge_statc: Option<f64>,
    /// Mixing parameter theta
    #[arg(long, allow_hyphen_values = true)]
    theta: f64,
    /// Use the linearized (m, e) mixing instead of the exact boost
    #[arg(long)]
    linear: bool,
    /// Mass m in g (linear mode)
    #[arg(long = "m", allow_hyphen_values = true)]
    mass_g: Option<f64>,
    /// Charge e in statC (linear mode)
    #[arg(long = "e", allow_hyphen_values = true)]
    charge_linear_statc: Option<f64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PotentialArgs {
    #[arg(long, allow_hyphen_values = true)]
    m1: f64,
    #[arg(long, allow_hyphen_values = true)]
    e1: f64,
    #[arg(long, allow_hyphen_values = true)]
    m2: f64,
    #[arg(long, allow_hyphen_values = true)]
    e2: f64,
    /// Separation r (cm, or m with --si)
    #[arg(long, allow_hyphen_values = true)]
    r: f64,
    #[arg(long, allow_hyphen_values = true)]
    theta: f64,
    /// Use the primed (observable-variable) coupling instead of the
    /// unprimed form with the sigma cross term
    #[arg(long)]
    primed: bool,
    /// Read m1/m2 in kg, e1/e2 in C, r in m; print SI columns
    #[arg(long)]
    si: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EarthFitArgs {
    /// Target surface radial field in V/m, signed (downward is negative)
    #[arg(long = "field-v-per-m", allow_hyphen_values = true)]
    field_v_per_m: f64,
    /// Body JSON file; defaults to the pinned Earth
    #[arg(long)]
    body: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DipoleArgs {
    #[arg(long, allow_hyphen_values = true)]
    theta: f64,
    /// Body JSON file; defaults to the pinned Earth
    #[arg(long)]
    body: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SimulateArgs {
    /// Simulation config JSON file
    #[arg(long)]
    config: PathBuf,
    /// Output CSV path; a manifest JSON is written next to it
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long = "theta-min", allow_hyphen_values = true)]
    theta_min: f64,
    #[arg(long = "theta-max", allow_hyphen_values = true)]
    theta_max: f64,
    /// Number of grid points (at least 2)
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum)]
    target: SweepTarget,
    /// Body JSON file; defaults to the pinned Earth
    #[arg(long)]
    body: Option<PathBuf>,
    /// Output CSV path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, ValueEnum)]
enum SweepTarget {
    Sigma,
    SurfaceField,
    Dipole,
}

impl SweepTarget {
    fn column(&self) -> &'static str {
        match self {
            SweepTarget::Sigma => "sigma_statC_per_g",
            SweepTarget::SurfaceField => "surface_field_statV_per_cm",
            SweepTarget::Dipole => "dipole_G_cm3",
        }
    }
}

/// Errors that should exit with the usage code.
struct UsageError(String);

enum CliError {
    Usage(String),
    Runtime(String),
}

impl From<thetamix_core::Error> for CliError {
    fn from(err: thetamix_core::Error) -> Self {
        CliError::Runtime(err.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Runtime(format!("io error: {err}"))
    }
}

impl From<UsageError> for CliError {
    fn from(err: UsageError) -> Self {
        CliError::Usage(err.0)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let pc = load_constants()?;
    let dc = DerivedConstants::derive(&pc)?;
    match cli.command {
        Command::Constants(args) => cmd_constants(&args, &pc, &dc),
        Command::Boost(args) => cmd_boost(&args, &pc, &dc),
        Command::Potential(args) => cmd_potential(&args, &pc, &dc),
        Command::EarthFit(args) => cmd_earth_fit(&args, &pc, &dc),
        Command::Dipole(args) => cmd_dipole(&args, &pc, &dc),
        Command::Simulate(args) => cmd_simulate(&args, &pc, &dc),
        Command::Sweep(args) => cmd_sweep(&args, &pc, &dc),
    }
}

fn load_constants() -> Result<PhysicalConstants, CliError> {
    match std::env::var_os(CONSTANTS_ENV) {
        Some(path) => {
            let text = fs::read_to_string(&path).map_err(|err| {
                CliError::Runtime(format!(
                    "cannot read {CONSTANTS_ENV} file {}: {err}",
                    Path::new(&path).display()
                ))
            })?;
            Ok(PhysicalConstants::with_overrides(&text)?)
        }
        None => Ok(PhysicalConstants::pinned()),
    }
}

fn load_body(path: &Option<PathBuf>) -> Result<CelestialBody, CliError> {
    match path {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|err| {
                CliError::Runtime(format!("cannot read body file {}: {err}", path.display()))
            })?;
            Ok(CelestialBody::from_json(&text)?)
        }
        None => Ok(CelestialBody::earth()),
    }
}

// ---------------------------------------------------------------- constants

fn cmd_constants(
    args: &ConstantsArgs,
    pc: &PhysicalConstants,
    dc: &DerivedConstants,
) -> Result<(), CliError> {
    let fundamental: Vec<(&str, f64, &str, f64, &str, &str)> = PINNED_CONSTANTS
        .iter()
        .map(|entry| {
            let (value, (si_value, si_unit)) = match entry.symbol {
                "hbar" => (pc.hbar.value(), to_si_pair("action", &pc.hbar)),
                "c" => (pc.c.value(), to_si_pair("speed", &pc.c)),
                "q" => (pc.q.value(), to_si_pair("charge", &pc.q)),
                "k" => (
                    pc.k_newton.value(),
                    to_si_pair("gravitational constant", &pc.k_newton),
                ),
                "L_p" => (
                    pc.planck_length.value(),
                    to_si_pair("length", &pc.planck_length),
                ),
                "alpha" => (pc.alpha, (pc.alpha, "1")),
                _ => (pc.sin2_theta_w, (pc.sin2_theta_w, "1")),
            };
            (
                entry.symbol,
                value,
                entry.gaussian_unit,
                si_value,
                si_unit,
                entry.source,
            )
        })
        .collect();

    let derived: Vec<(&str, f64, &str, f64, &str, &str)> = vec![
        (
            "ell",
            dc.ell.value(),
            "cm",
            to_si_pair("length", &dc.ell).0,
            "m",
            "L_p sqrt((10/(3 alpha))(1 + 2 sin^2 theta_W))",
        ),
        (
            "kappa",
            dc.kappa.value(),
            "(statC/g)^2",
            to_si_pair("charge per mass, squared", &dc.kappa).0,
            "(C/kg)^2",
            "q^2 ell^2 c^2 / hbar^2",
        ),
        (
            "sqrt_kappa",
            dc.sqrt_kappa.value(),
            "statC/g",
            to_si_pair("charge per mass", &dc.sqrt_kappa).0,
            "C/kg",
            "q ell c / hbar",
        ),
        (
            "sigma_per_theta",
            dc.sigma_per_theta.value(),
            "statC/g",
            to_si_pair("charge per mass", &dc.sigma_per_theta).0,
            "C/kg",
            "sqrt_kappa - k/sqrt_kappa",
        ),
    ];

    if args.json {
        let table = |rows: &[(&str, f64, &str, f64, &str, &str)]| -> serde_json::Value {
            rows.iter()
                .map(|(symbol, value, unit, si_value, si_unit, source)| {
                    (
                        symbol.to_string(),
                        json!({
                            "value": value,
                            "unit": unit,
                            "value_si": si_value,
                            "unit_si": si_unit,
                            "source": source,
                        }),
                    )
                })
                .collect::<serde_json::Map<_, _>>()
                .into()
        };
        let doc = json!({
            "fundamental": table(&fundamental),
            "derived": table(&derived),
            "fingerprint": pc.fingerprint(),
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
    } else {
        println!("fundamental constants (fingerprint {})", pc.fingerprint());
        print_table(&fundamental);
        println!();
        println!("derived constants");
        print_table(&derived);
    }
    Ok(())
}

fn to_si_pair(kind: &str, q: &Quantity) -> (f64, &'static str) {
    to_si_as(kind, q).expect("table kinds cover the constants")
}

#[allow(clippy::print_literal)]
fn print_table(rows: &[(&str, f64, &str, f64, &str, &str)]) {
    println!(
        "  {:<16} {:>24} {:<13} {:>24} {:<11} {}",
        "symbol", "value (Gaussian)", "unit", "value (SI)", "unit", "source"
    );
    for (symbol, value, unit, si_value, si_unit, source) in rows {
        println!(
            "  {:<16} {:>24} {:<13} {:>24} {:<11} {}",
            symbol,
            format!("{value:.10e}"),
            unit,
            format!("{si_value:.10e}"),
            si_unit,
            source
        );
    }
}

// -------------------------------------------------------------------- boost

fn cmd_boost(
    args: &BoostArgs,
    pc: &PhysicalConstants,
    dc: &DerivedConstants,
) -> Result<(), CliError> {
    if args.linear {
        let (mass, charge) = match (args.mass_g, args.charge_linear_statc) {
            (Some(m), Some(e)) => (m, e),
            _ => {
                return Err(
                    UsageError("--linear requires --m <g> and --e <statC>".to_string()).into(),
                )
            }
        };
        let state = ChargeMassPair::new(Quantity::grams(mass)?, Quantity::statcoulombs(charge)?)?;
        let (mixed, deltas) = boost_linear(&state, args.theta, dc)?;
        if args.json {
            let doc = json!({
                "mode": "linear",
                "theta": args.theta,
                "input": {"m_g": mass, "e_statC": charge},
                "output": {"m_g": mixed.mass.value(), "e_statC": mixed.charge.value()},
                "deltas": {"delta_m_g": deltas.delta_m.value(), "delta_e_statC": deltas.delta_e.value()},
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        } else {
            println!("linear mixing at theta = {:.10e}", args.theta);
            println!(
                "  m' = {:.10e} g      (delta_m = {:.10e} g)",
                mixed.mass.value(),
                deltas.delta_m.value()
            );
            println!(
                "  e' = {:.10e} statC  (delta_e = {:.10e} statC)",
                mixed.charge.value(),
                deltas.delta_e.value()
            );
        }
        return Ok(());
    }

    let (energy, charge) = match (args.energy_erg, args.charge_statc) {
        (Some(e), Some(q)) => (e, q),
        _ => {
            return Err(
                UsageError("exact boost requires --E <erg> and --Q <statC>".to_string()).into(),
            )
        }
    };
    let state = ChargeEnergyPair::new(Quantity::ergs(energy)?, Quantity::statcoulombs(charge)?)?;
    let boosted = boost_exact(&state, args.theta, dc, pc)?;
    let invariant_before = boost_invariant(&state, dc, pc)?;
    let invariant_after = boost_invariant(&boosted, dc, pc)?;
    if args.json {
        let doc = json!({
            "mode": "exact",
            "theta": args.theta,
            "input": {"E_erg": energy, "Q_statC": charge},
            "output": {"E_erg": boosted.energy.value(), "Q_statC": boosted.charge.value()},
            "invariant_erg2": {"before": invariant_before.value(), "after": invariant_after.value()},
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
    } else {
        println!("exact boost at theta = {:.10e}", args.theta);
        println!("  E' = {:.10e} erg", boosted.energy.value());
        println!("  Q' = {:.10e} statC", boosted.charge.value());
        println!(
            "  invariant E^2 - (hbar c/(ell q))^2 Q^2: {:.10e} -> {:.10e} erg^2",
            invariant_before.value(),
            invariant_after.value()
        );
    }
    Ok(())
}

// ---------------------------------------------------------------- potential

fn cmd_potential(
    args: &PotentialArgs,
    pc: &PhysicalConstants,
    dc: &DerivedConstants,
) -> Result<(), CliError> {
    let (m1, e1, m2, e2, r_cm) = if args.si {
        (
            from_si("mass", args.m1)?.value(),
            from_si("charge", args.e1)?.value(),
            from_si("mass", args.m2)?.value(),
            from_si("charge", args.e2)?.value(),
            from_si("length", args.r)?.value(),
        )
    } else {
        (args.m1, args.e1, args.m2, args.e2, args.r)
    };
    let p1 = ParticleSpecies::new("p1", Quantity::grams(m1)?, Quantity::statcoulombs(e1)?)?;
    let p2 = ParticleSpecies::new("p2", Quantity::grams(m2)?, Quantity::statcoulombs(e2)?)?;
    let coupling = if args.primed {
        coupling_primed(&p1, &p2, args.theta, dc, pc)?
    } else {
        let sigma = dc.sigma(args.theta)?;
        coupling_unprimed(&p1, &p2, &sigma, pc)?
    };
    let r = Quantity::centimeters(r_cm)?;
    let energy = potential_energy(&coupling, &r)?;
    let force = radial_force(&coupling, &r)?;
    let form = if args.primed { "primed" } else { "unprimed" };

    if args.json {
        let mut doc = json!({
            "form": form,
            "theta": args.theta,
            "inputs": {"m1_g": m1, "e1_statC": e1, "m2_g": m2, "e2_statC": e2, "r_cm": r_cm},
            "coupling_erg_cm": coupling.strength().value(),
            "potential_erg": energy.value(),
            "force_dyn": force.value(),
            "attractive": coupling.is_attractive(),
        });
        if args.si {
            doc["potential_J"] = json!(to_si_pair("energy", &energy).0);
            doc["force_N"] = json!(to_si_pair("force", &force).0);
            doc["coupling_J_m"] = json!(to_si_pair("energy x length", &coupling.strength()).0);
        }
        println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
    } else {
        println!("{form} coupling at theta = {:.10e}", args.theta);
        println!(
            "  A = {:.10e} erg cm ({})",
            coupling.strength().value(),
            if coupling.is_attractive() {
                "attractive"
            } else {
                "repulsive"
            }
        );
        println!("  V(r) = {:.10e} erg", energy.value());
        println!("  F(r) = {:.10e} dyn (positive outward)", force.value());
        if args.si {
            println!("  V(r) = {:.10e} J", to_si_pair("energy", &energy).0);
            println!("  F(r) = {:.10e} N", to_si_pair("force", &force).0);
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- earth-fit

fn cmd_earth_fit(
    args: &EarthFitArgs,
    pc: &PhysicalConstants,
    dc: &DerivedConstants,
) -> Result<(), CliError> {
    let body = load_body(&args.body)?;
    let target = from_si("electric field", args.field_v_per_m)?;
    let fit = geosphere::fit_theta_from_field(&body, &target, dc, pc)?;
    let field_check_si = to_si_pair("electric field", &fit.field_check).0;
    if args.json {
        let doc = json!({
            "body": body.label,
            "target_field_v_per_m": args.field_v_per_m,
            "theta": fit.theta,
            "sigma_statC_per_g": fit.sigma.value(),
            "q_eff_statC": fit.q_eff.value(),
            "q_eff_C": to_si_pair("charge", &fit.q_eff).0,
            "field_check_statV_per_cm": fit.field_check.value(),
            "field_check_v_per_m": field_check_si,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
    } else {
        println!(
            "fit of theta to a {:.10e} V/m surface radial field on {}",
            args.field_v_per_m, body.label
        );
        println!("  theta    = {:.10e}", fit.theta);
        println!("  sigma    = {:.10e} statC/g", fit.sigma.value());
        println!("  Q_eff    = {:.10e} statC", fit.q_eff.value());
        println!(
            "  check    = {:.10e} statV/cm = {:.10e} V/m (round trip)",
            fit.field_check.value(),
            field_check_si
        );
    }
    Ok(())
}

// ------------------------------------------------------------------- dipole

fn cmd_dipole(
    args: &DipoleArgs,
    pc: &PhysicalConstants,
    dc: &DerivedConstants,
) -> Result<(), CliError> {
    let body = load_body(&args.body)?;
    let sigma = dc.sigma(args.theta)?;
    let mu = geosphere::magnetic_dipole(&body, &sigma, pc)?;
    let ratio = mu.value().abs() / EARTH_OBSERVED_DIPOLE_G_CM3;
    if args.json {
        let doc = json!({
            "body": body.label,
            "theta": args.theta,
            "sigma_statC_per_g": sigma.value(),
            "dipole_G_cm3": mu.value(),
            "dipole_A_m2": to_si_pair("magnetic moment", &mu).0,
            "observed_dipole_G_cm3": EARTH_OBSERVED_DIPOLE_G_CM3,
            "ratio_to_observed": ratio,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
    } else {
        println!(
            "rotating uniformly charged sphere model for {} at theta = {:.10e}",
            body.label, args.theta
        );
        println!("  sigma  = {:.10e} statC/g", sigma.value());
        println!(
            "  mu     = {:.10e} G cm^3 = {:.10e} A m^2",
            mu.value(),
            to_si_pair("magnetic moment", &mu).0
        );
        println!(
            "  ratio to observed {:.1e} G cm^3: {:.10e} (computed comparison only)",
            EARTH_OBSERVED_DIPOLE_G_CM3, ratio
        );
    }
    Ok(())
}

// ----------------------------------------------------------------- simulate

fn cmd_simulate(
    args: &SimulateArgs,
    pc: &PhysicalConstants,
    dc: &DerivedConstants,
) -> Result<(), CliError> {
    let started = Instant::now();
    let text = fs::read_to_string(&args.config).map_err(|err| {
        CliError::Runtime(format!(
            "cannot read config {}: {err}",
            args.config.display()
        ))
    })?;
    let (state, cfg) = nbody::parse_config(&text)?;
    let file = fs::File::create(&args.out)?;
    let mut sink = CsvSink::new(std::io::BufWriter::new(file));
    let result = nbody::simulate(&state, &cfg, dc, pc, &mut sink);
    // the manifest records the run even when it aborts partway
    write_manifest(
        &args.out,
        "simulate",
        json!({
            "config": args.config.display().to_string(),
            "out": args.out.display().to_string(),
        }),
        vec![args.out.display().to_string()],
        pc,
        started,
    )?;
    result?;
    Ok(())
}

// -------------------------------------------------------------------- sweep

fn cmd_sweep(
    args: &SweepArgs,
    pc: &PhysicalConstants,
    dc: &DerivedConstants,
) -> Result<(), CliError> {
    if args.n < 2 {
        return Err(UsageError(format!("--n must be at least 2, got {}", args.n)).into());
    }
    let range_ok =
        args.theta_min.is_finite() && args.theta_max.is_finite() && args.theta_min < args.theta_max;
    if !range_ok {
        return Err(UsageError(format!(
            "--theta-min must be strictly below --theta-max, got [{}, {}]",
            args.theta_min, args.theta_max
        ))
        .into());
    }
    let started = Instant::now();
    let body = load_body(&args.body)?;
    let mut csv = String::new();
    csv.push_str(&format!("theta,{}\n", args.target.column()));
    for i in 0..args.n {
        let fraction = i as f64 / (args.n - 1) as f64;
        let theta = args.theta_min + (args.theta_max - args.theta_min) * fraction;
        let sigma = dc.sigma(theta)?;
        let value = match args.target {
            SweepTarget::Sigma => sigma.value(),
            SweepTarget::SurfaceField => geosphere::surface_field(&body, &sigma)?.value(),
            SweepTarget::Dipole => geosphere::magnetic_dipole(&body, &sigma, pc)?.value(),
        };
        csv.push_str(&format!("{theta:.16e},{value:.16e}\n"));
    }
    match &args.out {
        Some(path) => {
            fs::write(path, csv)?;
            write_manifest(
                path,
                "sweep",
                json!({
                    "theta_min": args.theta_min,
                    "theta_max": args.theta_max,
                    "n": args.n,
                    "target": args.target.column(),
                    "body": body.label,
                }),
                vec![path.display().to_string()],
                pc,
                started,
            )?;
        }
        None => print!("{csv}"),
    }
    Ok(())
}

// ----------------------------------------------------------------- manifest

/// Every run that writes files leaves exactly one manifest JSON next to them.
/// The manifest is run metadata (it includes wall time); the data files
/// themselves are the byte-reproducible outputs.
fn write_manifest(
    data_path: &Path,
    command: &str,
    inputs: serde_json::Value,
    outputs: Vec<String>,
    pc: &PhysicalConstants,
    started: Instant,
) -> Result<(), CliError> {
    let manifest_path = manifest_path_for(data_path);
    let doc = json!({
        "command": command,
        "inputs": inputs,
        "constants_fingerprint": pc.fingerprint(),
        "outputs": outputs,
        "wall_time_s": started.elapsed().as_secs_f64(),
    });
    let mut file = fs::File::create(&manifest_path)?;
    writeln!(
        file,
        "{}",
        serde_json::to_string_pretty(&doc).expect("json")
    )?;
    Ok(())
}

fn manifest_path_for(data_path: &Path) -> PathBuf {
    let mut name = data_path.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    data_path.with_file_name(name)
}
