//! Deterministic N-body dynamics under the corrected pair law.
//!
//! Forces come from the unprimed coupling A_ij = e_i e_j - k m_i m_j
//! + sigma (e_i m_j + m_i e_j) applied pairwise, with acceleration
//!
//! ```text
//! a_i = sum_{j != i} (A_ij / m_i) rhat_ij / (|r_ij|^2 + eps^2)
//! ```
//!
//! where rhat_ij points from j to i (A > 0 pushes apart) and eps is an
//! optional softening length. The softened pair potential is the exact
//! antiderivative of that force, (A/eps) (pi/2 - atan(r/eps)), reducing to
//! A/r at eps = 0, so the energy diagnostic stays consistent with the force.
//!
//! The integrator is kick-drift-kick leapfrog (symplectic, time-reversible,
//! one force evaluation per step). Determinism is a hard contract: state is
//! raw CGS doubles validated once at ingestion, pair terms accumulate in
//! fixed index order (i < j), and identical inputs produce bitwise-identical
//! output.

use crate::constants::{DerivedConstants, PhysicalConstants};
use crate::error::{Error, Result};
use crate::vec3::Vec3;
use serde::Deserialize;
use std::f64::consts::FRAC_PI_2;
use std::io::Write;

/// One simulated particle: intrinsic species values plus phase-space state,
/// all in raw CGS units.
#[derive(Debug, Clone, PartialEq)]
pub struct Particle {
    pub label: String,
    pub mass_g: f64,
    pub charge_statc: f64,
    pub pos_cm: Vec3,
    pub vel_cm_s: Vec3,
}

/// Full system state. Particle order is fixed for the life of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemState {
    pub time_s: f64,
    pub particles: Vec<Particle>,
}

impl SystemState {
    /// Validate and adopt a particle list: finite values, strictly positive
    /// masses (they divide the pair force), CSV-safe labels, and pairwise
    /// distinct positions.
    pub fn new(particles: Vec<Particle>) -> Result<Self> {
        if particles.is_empty() {
            return Err(Error::InvalidConfig("no particles".to_string()));
        }
        for (i, p) in particles.iter().enumerate() {
            if !(p.mass_g.is_finite() && p.mass_g > 0.0) {
                return Err(Error::InvalidConfig(format!(
                    "particle {i} ({}): mass must be finite and positive, got {}",
                    p.label, p.mass_g
                )));
            }
            if !p.charge_statc.is_finite() || !p.pos_cm.is_finite() || !p.vel_cm_s.is_finite() {
                return Err(Error::InvalidConfig(format!(
                    "particle {i} ({}): non-finite state",
                    p.label
                )));
            }
            if p.label.contains([',', '"', '\n', '\r']) {
                return Err(Error::InvalidConfig(format!(
                    "particle {i}: label {:?} is not CSV-safe",
                    p.label
                )));
            }
        }
        for i in 0..particles.len() {
            for j in (i + 1)..particles.len() {
                if particles[i].pos_cm == particles[j].pos_cm {
                    return Err(Error::InvalidConfig(format!(
                        "particles {i} and {j} share a position"
                    )));
                }
            }
        }
        Ok(SystemState {
            time_s: 0.0,
            particles,
        })
    }
}

/// Integration parameters. `steps = 0` is allowed and emits only the initial
/// snapshot.
#[derive(Debug, Clone, Copy)]
pub struct IntegratorConfig {
    pub dt_s: f64,
    pub steps: u64,
    pub output_every: u64,
    pub theta: f64,
    pub softening_cm: f64,
}

impl IntegratorConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.dt_s.is_finite() && self.dt_s > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "dt must be finite and positive, got {}",
                self.dt_s
            )));
        }
        if self.output_every == 0 {
            return Err(Error::InvalidConfig(
                "output_every must be a positive integer".to_string(),
            ));
        }
        if !(self.softening_cm.is_finite() && self.softening_cm >= 0.0) {
            return Err(Error::InvalidConfig(format!(
                "softening must be finite and non-negative, got {}",
                self.softening_cm
            )));
        }
        if !self.theta.is_finite() {
            return Err(Error::InvalidConfig("theta must be finite".to_string()));
        }
        Ok(())
    }
}

/// Simulation input file:
/// {"dt_s", "steps", "output_every", "theta", "softening_cm", "particles":
///  [{"label", "m_g", "e_statC", "pos_cm": [x,y,z], "vel_cm_s": [x,y,z]}]}
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    dt_s: f64,
    steps: u64,
    #[serde(default = "one")]
    output_every: u64,
    #[serde(default)]
    theta: f64,
    #[serde(default)]
    softening_cm: f64,
    particles: Vec<ParticleFile>,
}

fn one() -> u64 {
    1
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParticleFile {
    label: String,
    m_g: f64,
    #[serde(rename = "e_statC")]
    e_statc: f64,
    pos_cm: [f64; 3],
    vel_cm_s: [f64; 3],
}

/// Parse a config file into the validated (state, config) pair.
pub fn parse_config(json: &str) -> Result<(SystemState, IntegratorConfig)> {
    let f: ConfigFile = serde_json::from_str(json)?;
    let cfg = IntegratorConfig {
        dt_s: f.dt_s,
        steps: f.steps,
        output_every: f.output_every,
        theta: f.theta,
        softening_cm: f.softening_cm,
    };
    cfg.validate()?;
    let particles = f
        .particles
        .into_iter()
        .map(|p| Particle {
            label: p.label,
            mass_g: p.m_g,
            charge_statc: p.e_statc,
            pos_cm: Vec3(p.pos_cm),
            vel_cm_s: Vec3(p.vel_cm_s),
        })
        .collect();
    Ok((SystemState::new(particles)?, cfg))
}

/// The raw-double coupling parameters captured once per run.
#[derive(Debug, Clone, Copy)]
struct ForceLaw {
    sigma_statc_per_g: f64,
    k_newton: f64,
    softening_cm: f64,
}

impl ForceLaw {
    fn from_config(
        cfg: &IntegratorConfig,
        dc: &DerivedConstants,
        pc: &PhysicalConstants,
    ) -> Result<Self> {
        Ok(ForceLaw {
            sigma_statc_per_g: dc.sigma(cfg.theta)?.value(),
            k_newton: pc.k_newton.value(),
            softening_cm: cfg.softening_cm,
        })
    }

    /// Mirrors `potential::coupling_unprimed` term by term on raw doubles.
    fn coupling(&self, a: &Particle, b: &Particle) -> f64 {
        a.charge_statc * b.charge_statc - self.k_newton * a.mass_g * b.mass_g
            + self.sigma_statc_per_g * (a.charge_statc * b.mass_g + a.mass_g * b.charge_statc)
    }

    fn accelerations(&self, particles: &[Particle]) -> Result<Vec<Vec3>> {
        let n = particles.len();
        let mut acc = vec![Vec3::ZERO; n];
        let eps2 = self.softening_cm * self.softening_cm;
        for i in 0..n {
            for j in (i + 1)..n {
                let delta = particles[i].pos_cm - particles[j].pos_cm;
                let r2 = delta.norm_squared();
                if r2 == 0.0 {
                    if eps2 == 0.0 {
                        return Err(Error::CoincidentParticles { i, j });
                    }
                    // softened coincidence: direction undefined, net term zero
                    continue;
                }
                let r = r2.sqrt();
                let a_ij = self.coupling(&particles[i], &particles[j]);
                // (A / m) * delta / (r * (r^2 + eps^2)) = (A/m) rhat / (r^2 + eps^2)
                let shared = a_ij / (r * (r2 + eps2));
                acc[i] += delta * (shared / particles[i].mass_g);
                acc[j] += delta * (-shared / particles[j].mass_g);
            }
        }
        for (i, a) in acc.iter().enumerate() {
            if !a.is_finite() {
                return Err(Error::InvalidConfig(format!(
                    "non-finite acceleration on particle {i}"
                )));
            }
        }
        Ok(acc)
    }

    /// Pair potential consistent with the force: the exact antiderivative of
    /// A/(r^2 + eps^2) vanishing at infinity.
    fn pair_potential(&self, a_ij: f64, r: f64) -> f64 {
        let eps = self.softening_cm;
        if eps == 0.0 {
            a_ij / r
        } else {
            a_ij / eps * (FRAC_PI_2 - (r / eps).atan())
        }
    }

    fn energy(&self, particles: &[Particle]) -> EnergyReport {
        let mut kinetic = 0.0;
        for p in particles {
            kinetic += 0.5 * p.mass_g * p.vel_cm_s.norm_squared();
        }
        let mut potential = 0.0;
        for i in 0..particles.len() {
            for j in (i + 1)..particles.len() {
                let r = (particles[i].pos_cm - particles[j].pos_cm).norm();
                let a_ij = self.coupling(&particles[i], &particles[j]);
                potential += self.pair_potential(a_ij, r);
            }
        }
        EnergyReport {
            kinetic_erg: kinetic,
            potential_erg: potential,
            total_erg: kinetic + potential,
        }
    }

    /// One kick-drift-kick step.
    fn step(&self, state: &mut SystemState, dt: f64) -> Result<()> {
        let half = 0.5 * dt;
        let acc = self.accelerations(&state.particles)?;
        for (p, a) in state.particles.iter_mut().zip(&acc) {
            p.vel_cm_s += *a * half;
        }
        for p in state.particles.iter_mut() {
            p.pos_cm += p.vel_cm_s * dt;
        }
        let acc = self.accelerations(&state.particles)?;
        for (p, a) in state.particles.iter_mut().zip(&acc) {
            p.vel_cm_s += *a * half;
        }
        state.time_s += dt;
        Ok(())
    }
}

/// System energy decomposition at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyReport {
    pub kinetic_erg: f64,
    pub potential_erg: f64,
    pub total_erg: f64,
}

/// Pairwise accelerations of every particle (cm/s^2), in fixed index order.
pub fn pairwise_accel(
    state: &SystemState,
    cfg: &IntegratorConfig,
    dc: &DerivedConstants,
    pc: &PhysicalConstants,
) -> Result<Vec<Vec3>> {
    ForceLaw::from_config(cfg, dc, pc)?.accelerations(&state.particles)
}

/// One leapfrog step of the full system; the input state is not modified.
pub fn step_leapfrog(
    state: &SystemState,
    cfg: &IntegratorConfig,
    dc: &DerivedConstants,
    pc: &PhysicalConstants,
) -> Result<SystemState> {
    cfg.validate()?;
    let law = ForceLaw::from_config(cfg, dc, pc)?;
    let mut next = state.clone();
    law.step(&mut next, cfg.dt_s)?;
    Ok(next)
}

/// Kinetic, potential and total energy of the state under the configured law.
pub fn total_energy(
    state: &SystemState,
    cfg: &IntegratorConfig,
    dc: &DerivedConstants,
    pc: &PhysicalConstants,
) -> Result<EnergyReport> {
    Ok(ForceLaw::from_config(cfg, dc, pc)?.energy(&state.particles))
}

/// Closed-form circular-orbit reference for a bound pair.
#[derive(Debug, Clone, Copy)]
pub struct KeplerReference {
    pub period_s: f64,
    pub relative_speed_cm_s: f64,
}

/// Relative speed v = sqrt(|A|/(mu r)) with mu = m1 m2/(m1 + m2), and period
/// T = 2 pi r / v, for a circular orbit under the coupling A < 0.
pub fn kepler_reference(
    m1_g: f64,
    e1_statc: f64,
    m2_g: f64,
    e2_statc: f64,
    sigma_statc_per_g: f64,
    r_cm: f64,
    pc: &PhysicalConstants,
) -> Result<KeplerReference> {
    let separation_ok = r_cm > 0.0;
    if !separation_ok {
        return Err(Error::NonPositiveSeparation);
    }
    let masses_ok = m1_g > 0.0 && m2_g > 0.0;
    if !masses_ok {
        return Err(Error::InvalidConfig(
            "kepler reference requires positive masses".to_string(),
        ));
    }
    let a = e1_statc * e2_statc - pc.k_newton.value() * m1_g * m2_g
        + sigma_statc_per_g * (e1_statc * m2_g + m1_g * e2_statc);
    if a >= 0.0 {
        return Err(Error::UnboundPair(a));
    }
    let reduced_mass = m1_g * m2_g / (m1_g + m2_g);
    let speed = (a.abs() / (reduced_mass * r_cm)).sqrt();
    Ok(KeplerReference {
        period_s: 2.0 * std::f64::consts::PI * r_cm / speed,
        relative_speed_cm_s: speed,
    })
}

/// Receiver of simulation snapshots.
pub trait SimulationSink {
    fn snapshot(&mut self, step: u64, state: &SystemState, energy: &EnergyReport) -> Result<()>;

    /// Called once if the run aborts, so a partial output can carry an
    /// explicit failure marker.
    fn error_trailer(&mut self, _message: &str) -> Result<()> {
        Ok(())
    }

    fn finish(&mut self) -> Result<()> {
        Ok(())
    }
}

/// Discards everything.
pub struct NullSink;

impl SimulationSink for NullSink {
    fn snapshot(&mut self, _: u64, _: &SystemState, _: &EnergyReport) -> Result<()> {
        Ok(())
    }
}

/// Collects snapshots in memory, for tests and analysis.
#[derive(Default)]
pub struct MemorySink {
    pub snapshots: Vec<(u64, SystemState, EnergyReport)>,
}

impl SimulationSink for MemorySink {
    fn snapshot(&mut self, step: u64, state: &SystemState, energy: &EnergyReport) -> Result<()> {
        self.snapshots.push((step, state.clone(), *energy));
        Ok(())
    }
}

/// The exact output header, one row per particle per snapshot.
pub const CSV_HEADER: &str =
    "step,t_s,particle,x_cm,y_cm,z_cm,vx_cm_s,vy_cm_s,vz_cm_s,ke_erg,pe_erg,etot_erg";

/// CSV writer. Numbers are printed with 17 significant digits so the file
/// round-trips to the exact doubles; the energy columns carry the system
/// totals of the snapshot. On failure the partial file ends with a
/// `# error:` trailer line.
pub struct CsvSink<W: Write> {
    writer: W,
    header_written: bool,
}

impl<W: Write> CsvSink<W> {
    pub fn new(writer: W) -> Self {
        CsvSink {
            writer,
            header_written: false,
        }
    }

    pub fn into_inner(self) -> W {
        self.writer
    }
}

impl<W: Write> SimulationSink for CsvSink<W> {
    fn snapshot(&mut self, step: u64, state: &SystemState, energy: &EnergyReport) -> Result<()> {
        if !self.header_written {
            writeln!(self.writer, "{CSV_HEADER}")?;
            self.header_written = true;
        }
        for p in &state.particles {
            writeln!(
                self.writer,
                "{step},{:.16e},{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
                state.time_s,
                p.label,
                p.pos_cm.x(),
                p.pos_cm.y(),
                p.pos_cm.z(),
                p.vel_cm_s.x(),
                p.vel_cm_s.y(),
                p.vel_cm_s.z(),
                energy.kinetic_erg,
                energy.potential_erg,
                energy.total_erg,
            )?;
        }
        Ok(())
    }

    fn error_trailer(&mut self, message: &str) -> Result<()> {
        writeln!(self.writer, "# error: {message}")?;
        self.writer.flush()?;
        Ok(())
    }

    fn finish(&mut self) -> Result<()> {
        self.writer.flush()?;
        Ok(())
    }
}

/// Run `cfg.steps` leapfrog steps from `initial`, emitting the initial
/// snapshot and then one every `output_every` steps. Identical inputs
/// produce bitwise-identical snapshots.
pub fn simulate(
    initial: &SystemState,
    cfg: &IntegratorConfig,
    dc: &DerivedConstants,
    pc: &PhysicalConstants,
    sink: &mut dyn SimulationSink,
) -> Result<SystemState> {
    cfg.validate()?;
    let law = ForceLaw::from_config(cfg, dc, pc)?;
    let mut state = initial.clone();
    state.time_s = initial.time_s;
    sink.snapshot(0, &state, &law.energy(&state.particles))?;
    for step in 1..=cfg.steps {
        if let Err(err) = law.step(&mut state, cfg.dt_s) {
            sink.error_trailer(&err.to_string())?;
            return Err(err);
        }
        if step % cfg.output_every == 0 {
            sink.snapshot(step, &state, &law.energy(&state.particles))?;
        }
    }
    sink.finish()?;
    Ok(state)
}

/// Build the two-body circular fixture used throughout the tests: bodies on
/// the x axis around their barycenter, velocities set for a circular orbit
/// of separation `r_cm` under the full coupling.
pub fn circular_two_body(
    m1_g: f64,
    e1_statc: f64,
    m2_g: f64,
    e2_statc: f64,
    sigma_statc_per_g: f64,
    r_cm: f64,
    pc: &PhysicalConstants,
) -> Result<(SystemState, KeplerReference)> {
    let reference = kepler_reference(m1_g, e1_statc, m2_g, e2_statc, sigma_statc_per_g, r_cm, pc)?;
    let total = m1_g + m2_g;
    let f1 = m2_g / total;
    let f2 = m1_g / total;
    let v = reference.relative_speed_cm_s;
    let state = SystemState::new(vec![
        Particle {
            label: "body1".to_string(),
            mass_g: m1_g,
            charge_statc: e1_statc,
            pos_cm: Vec3::new(f1 * r_cm, 0.0, 0.0),
            vel_cm_s: Vec3::new(0.0, f1 * v, 0.0),
        },
        Particle {
            label: "body2".to_string(),
            mass_g: m2_g,
            charge_statc: e2_statc,
            pos_cm: Vec3::new(-f2 * r_cm, 0.0, 0.0),
            vel_cm_s: Vec3::new(0.0, -f2 * v, 0.0),
        },
    ])?;
    Ok((state, reference))
}
