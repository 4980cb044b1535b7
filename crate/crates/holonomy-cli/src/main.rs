//! `holonomy`: classification, density certificates, orbit and ball
//! enumeration, and parallel transport for flat-torus holonomy groups.
//!
//! Exit codes: 0 success (certificates all hold), 1 some certificate
//! fails, 2 input or I/O failure, 3 certificates pass on numeric
//! evidence only.

mod angle;
mod files;
mod out;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use holonomy_core::classify::{
    check_abc, check_prop_cond1, check_thm_main3, check_thm_main4, check_thm_main5,
    classify_config, gens_from_config, BallLimits, Certificate, GenConfig, Verdict,
};
use holonomy_core::exact::AngleSpec;
use holonomy_core::groups::{Rot3, SU2, U2Mat};
use holonomy_core::orbit::{
    covering_radius_points, covering_radius_profile, group_ball, orbit, probe_elements,
    Confinement, GroupElement,
};
use holonomy_core::transport::{transport, NPCWord};

use angle::parse_angle;
use files::{load_connection, load_gens, parse_point3, parse_vector, vector_json, LoadedGens};
use out::{atomic_write, csv_rows};

const EXIT_HOLDS: u8 = 0;
const EXIT_FAILS: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_NUMERIC: u8 = 3;

#[derive(Parser)]
#[command(name = "holonomy", version, about = "Holonomy groups of flat-torus connections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Name the subgroup of SO(3) generated by a configured rotation pair.
    Classify(ClassifyArgs),
    /// Enumerate a sphere orbit; write a points CSV and a JSON report.
    Orbit(OrbitArgs),
    /// Check a density hypothesis block and print its certificates.
    Certify(CertifyArgs),
    /// Transport a fiber vector along a polygonal loop word.
    Transport(TransportArgs),
    /// Enumerate a group ball; report size, saturation, covering radius.
    Ball(BallArgs),
}

/// Angles of a generator pair in normal form.
#[derive(Args)]
struct ConfigArgs {
    /// First rotation angle (forms: pi*p/q, sqrt:d*pi*p/q, decimal).
    #[arg(long, value_parser = parse_angle)]
    theta1: AngleSpec,
    /// Second rotation angle.
    #[arg(long, value_parser = parse_angle)]
    theta2: AngleSpec,
    /// Axis tilt, in (0, pi/2].
    #[arg(long, value_parser = parse_angle)]
    phi: AngleSpec,
    /// Meridian angle of the tilted axis.
    #[arg(long, value_parser = parse_angle)]
    gamma: Option<AngleSpec>,
}

impl ConfigArgs {
    fn to_config(&self) -> Result<GenConfig, String> {
        build_config(
            self.theta1.clone(),
            self.theta2.clone(),
            self.phi.clone(),
            self.gamma.clone(),
        )
    }
}

fn build_config(
    theta1: AngleSpec,
    theta2: AngleSpec,
    phi: AngleSpec,
    gamma: Option<AngleSpec>,
) -> Result<GenConfig, String> {
    let mut cfg = GenConfig::new(theta1, theta2, phi);
    if let Some(g) = gamma {
        cfg = cfg.with_gamma(g);
    }
    cfg.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}

/// Enumeration budget shared by ball- and orbit-walking commands.
#[derive(Args)]
struct LimitArgs {
    /// Deduplication tolerance.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Element or point budget.
    #[arg(long, default_value_t = 100_000)]
    max_size: usize,
    /// Word-length budget.
    #[arg(long, default_value_t = 40)]
    max_depth: u32,
}

impl LimitArgs {
    fn to_limits(&self) -> Result<BallLimits, String> {
        if !(self.tol > 0.0) {
            return Err(format!("--tol must be positive, got {}", self.tol));
        }
        if self.max_size == 0 {
            return Err("--max-size must be positive".into());
        }
        if self.max_depth == 0 {
            return Err("--max-depth must be positive".into());
        }
        Ok(BallLimits {
            tol: self.tol,
            max_size: self.max_size,
            max_depth: self.max_depth,
        })
    }
}

/// Generators from a file or from config angles, exclusively.
#[derive(Args)]
struct SourceArgs {
    /// Generator file {"kind": so3|so4|su2|u2, "matrices": [...]}.
    #[arg(long)]
    gens: Option<PathBuf>,
    #[arg(long, value_parser = parse_angle)]
    theta1: Option<AngleSpec>,
    #[arg(long, value_parser = parse_angle)]
    theta2: Option<AngleSpec>,
    #[arg(long, value_parser = parse_angle)]
    phi: Option<AngleSpec>,
    #[arg(long, value_parser = parse_angle)]
    gamma: Option<AngleSpec>,
}

enum Source {
    Config(GenConfig),
    File(LoadedGens),
}

impl SourceArgs {
    fn load(&self, tol: f64) -> Result<Source, String> {
        let has_angles = self.theta1.is_some()
            || self.theta2.is_some()
            || self.phi.is_some()
            || self.gamma.is_some();
        if let Some(path) = &self.gens {
            if has_angles {
                return Err("give either --gens or config angles, not both".into());
            }
            return Ok(Source::File(load_gens(path, tol)?));
        }
        match (&self.theta1, &self.theta2, &self.phi) {
            (Some(t1), Some(t2), Some(p)) => Ok(Source::Config(build_config(
                t1.clone(),
                t2.clone(),
                p.clone(),
                self.gamma.clone(),
            )?)),
            _ => Err("provide --gens FILE, or all of --theta1, --theta2, --phi".into()),
        }
    }

    fn so3_gens(&self, tol: f64) -> Result<Vec<Rot3>, String> {
        match self.load(tol)? {
            Source::Config(cfg) => {
                let (c1, c2) = gens_from_config(&cfg);
                Ok(vec![c1, c2])
            }
            Source::File(LoadedGens::So3(v)) if !v.is_empty() => Ok(v),
            Source::File(LoadedGens::So3(_)) => Err("generator file holds no matrices".into()),
            Source::File(other) => Err(format!(
                "this command acts on the sphere; expected so3 generators, got kind {}",
                other.kind()
            )),
        }
    }
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    config: ConfigArgs,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Args)]
struct OrbitArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Base point as x,y,z (normalized before use).
    #[arg(long, default_value = "0,0,1", value_parser = parse_point3)]
    omega: [f64; 3],
    #[command(flatten)]
    limits: LimitArgs,
    /// Orbit points CSV path (columns x,y,z).
    #[arg(long, default_value = "orbit_points.csv")]
    points: PathBuf,
    /// Orbit report JSON path.
    #[arg(long, default_value = "orbit_report.json")]
    report: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Selector {
    /// Conditions (A), (B), (C) on an SO(3) pair.
    Abc,
    /// Angle-pattern sufficient condition on a configured pair.
    Cond1,
    /// Density of a plus/minus configured pair in SO(4).
    Main3,
    /// Density of an SU(2) pair.
    Main4,
    /// Density of a U(2) pair.
    Main5,
}

#[derive(Args)]
struct CertifyArgs {
    /// Hypothesis block to check.
    #[arg(long, value_enum)]
    selector: Selector,
    /// Generator file: so3 pair for abc, su2 pair for main4, u2 pair for main5.
    #[arg(long)]
    gens: Option<PathBuf>,
    #[arg(long, value_parser = parse_angle)]
    theta1: Option<AngleSpec>,
    #[arg(long, value_parser = parse_angle)]
    theta2: Option<AngleSpec>,
    #[arg(long, value_parser = parse_angle)]
    phi: Option<AngleSpec>,
    #[arg(long, value_parser = parse_angle)]
    gamma: Option<AngleSpec>,
    /// Plus-sector angles (main3).
    #[arg(long, value_parser = parse_angle)]
    theta1_plus: Option<AngleSpec>,
    #[arg(long, value_parser = parse_angle)]
    theta2_plus: Option<AngleSpec>,
    #[arg(long, value_parser = parse_angle)]
    phi_plus: Option<AngleSpec>,
    #[arg(long, value_parser = parse_angle)]
    gamma_plus: Option<AngleSpec>,
    /// Minus-sector angles (main3).
    #[arg(long, value_parser = parse_angle)]
    theta1_minus: Option<AngleSpec>,
    #[arg(long, value_parser = parse_angle)]
    theta2_minus: Option<AngleSpec>,
    #[arg(long, value_parser = parse_angle)]
    phi_minus: Option<AngleSpec>,
    #[arg(long, value_parser = parse_angle)]
    gamma_minus: Option<AngleSpec>,
    /// Matrix validation tolerance for --gens.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Args)]
struct TransportArgs {
    /// Connection coefficients JSON file.
    #[arg(long)]
    connection: PathBuf,
    /// Loop word axis:winding(,axis:winding)*; empty for the constant curve.
    #[arg(long, default_value = "")]
    word: String,
    /// Fiber vector: [x1,x2,x3,x4] or [[re,im],[re,im]], per the fiber.
    #[arg(long)]
    vector: String,
}

#[derive(Args)]
struct BallArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    limits: LimitArgs,
    /// Probe count for the covering-radius measurement.
    #[arg(long, default_value_t = 4096)]
    probes: usize,
    /// Probe sampling seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Include per-depth covering radii.
    #[arg(long)]
    snapshots: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(command: Command) -> Result<u8, String> {
    check_thread_cap()?;
    match command {
        Command::Classify(a) => cmd_classify(a),
        Command::Orbit(a) => cmd_orbit(a),
        Command::Certify(a) => cmd_certify(a),
        Command::Transport(a) => cmd_transport(a),
        Command::Ball(a) => cmd_ball(a),
    }
}

/// Enumeration runs on one thread; the cap is validated and any value
/// of it leaves results unchanged.
fn check_thread_cap() -> Result<(), String> {
    match std::env::var("HOLONOMY_THREADS") {
        Err(_) => Ok(()),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(()),
            _ => Err(format!("HOLONOMY_THREADS must be a positive integer, got {v:?}")),
        },
    }
}

fn cmd_classify(a: ClassifyArgs) -> Result<u8, String> {
    let cfg = a.config.to_config()?;
    let limits = a.limits.to_limits()?;
    let classification = classify_config(&cfg, &limits);
    println!("{}", serde_json::to_string(&classification).unwrap());
    Ok(EXIT_HOLDS)
}

#[derive(Serialize)]
struct OrbitOut<'a> {
    size: usize,
    saturated: bool,
    depth: u32,
    growth: &'a [usize],
    covering_radius: f64,
    cr_by_depth: &'a [f64],
    confinement: &'a Confinement,
}

fn cmd_orbit(a: OrbitArgs) -> Result<u8, String> {
    let limits = a.limits.to_limits()?;
    let gens = a.source.so3_gens(limits.tol)?;
    let report = orbit(&gens, a.omega, limits.max_depth, limits.max_size, limits.tol);

    let csv = csv_rows(report.points.iter().map(|p| p.as_slice()));
    atomic_write(&a.points, csv.as_bytes())?;

    let summary = OrbitOut {
        size: report.points.len(),
        saturated: report.saturated,
        depth: report.depth,
        growth: &report.growth,
        covering_radius: report.covering_radius,
        cr_by_depth: &report.cr_by_depth,
        confinement: &report.confinement,
    };
    let mut text = serde_json::to_string(&summary).unwrap();
    text.push('\n');
    atomic_write(&a.report, text.as_bytes())?;
    Ok(EXIT_HOLDS)
}

impl CertifyArgs {
    fn base_config(&self) -> Result<GenConfig, String> {
        match (&self.theta1, &self.theta2, &self.phi) {
            (Some(t1), Some(t2), Some(p)) => {
                build_config(t1.clone(), t2.clone(), p.clone(), self.gamma.clone())
            }
            _ => Err("this selector needs --theta1, --theta2, --phi".into()),
        }
    }

    fn plus_config(&self) -> Result<GenConfig, String> {
        match (&self.theta1_plus, &self.theta2_plus, &self.phi_plus) {
            (Some(t1), Some(t2), Some(p)) => {
                build_config(t1.clone(), t2.clone(), p.clone(), self.gamma_plus.clone())
            }
            _ => Err("main3 needs --theta1-plus, --theta2-plus, --phi-plus".into()),
        }
    }

    fn minus_config(&self) -> Result<GenConfig, String> {
        match (&self.theta1_minus, &self.theta2_minus, &self.phi_minus) {
            (Some(t1), Some(t2), Some(p)) => {
                build_config(t1.clone(), t2.clone(), p.clone(), self.gamma_minus.clone())
            }
            _ => Err("main3 needs --theta1-minus, --theta2-minus, --phi-minus".into()),
        }
    }

    fn so3_pair(&self) -> Result<(Rot3, Rot3), String> {
        if let Some(path) = &self.gens {
            match load_gens(path, self.tol)? {
                LoadedGens::So3(v) => pair(&v, "so3"),
                other => Err(format!("abc expects so3 generators, got kind {}", other.kind())),
            }
        } else {
            let cfg = self.base_config()?;
            Ok(gens_from_config(&cfg))
        }
    }

    fn su2_pair(&self) -> Result<(SU2, SU2), String> {
        let path = self.gens.as_ref().ok_or("main4 needs --gens with an su2 pair")?;
        match load_gens(path, self.tol)? {
            LoadedGens::Su2(v) => pair(&v, "su2"),
            other => Err(format!("main4 expects su2 generators, got kind {}", other.kind())),
        }
    }

    fn u2_pair(&self) -> Result<(U2Mat, U2Mat), String> {
        let path = self.gens.as_ref().ok_or("main5 needs --gens with a u2 pair")?;
        match load_gens(path, self.tol)? {
            LoadedGens::U2(v) => pair(&v, "u2"),
            other => Err(format!("main5 expects u2 generators, got kind {}", other.kind())),
        }
    }
}

fn pair<T: Clone>(v: &[T], kind: &str) -> Result<(T, T), String> {
    match v {
        [a, b] => Ok((a.clone(), b.clone())),
        _ => Err(format!("expected exactly 2 {kind} matrices, got {}", v.len())),
    }
}

fn cmd_certify(a: CertifyArgs) -> Result<u8, String> {
    let certs: Vec<Certificate> = match a.selector {
        Selector::Abc => {
            let (c1, c2) = a.so3_pair()?;
            check_abc(&c1, &c2)
        }
        Selector::Cond1 => vec![check_prop_cond1(&a.base_config()?)],
        Selector::Main3 => vec![check_thm_main3(&a.plus_config()?, &a.minus_config()?)],
        Selector::Main4 => {
            let (b1, b2) = a.su2_pair()?;
            vec![check_thm_main4(&b1, &b2)]
        }
        Selector::Main5 => {
            let (b1, b2) = a.u2_pair()?;
            vec![check_thm_main5(&b1, &b2)]
        }
    };
    println!("{}", serde_json::to_string(&certs).unwrap());
    Ok(exit_for(&certs))
}

fn exit_for(certs: &[Certificate]) -> u8 {
    let mut numeric = false;
    for c in certs {
        match c.verdict {
            Verdict::Fails => return EXIT_FAILS,
            Verdict::NumericOnly => numeric = true,
            Verdict::Holds => {}
        }
    }
    if numeric {
        EXIT_NUMERIC
    } else {
        EXIT_HOLDS
    }
}

fn cmd_transport(a: TransportArgs) -> Result<u8, String> {
    let conn = load_connection(&a.connection)?;
    let word = NPCWord::parse(&a.word).map_err(|e| e.to_string())?;
    let v = parse_vector(&a.vector, &conn)?;
    let moved = transport(&conn, &word, &v).map_err(|e| e.to_string())?;
    println!("{}", vector_json(&moved));
    Ok(EXIT_HOLDS)
}

#[derive(Serialize)]
struct BallOut {
    size: usize,
    saturated: bool,
    depth: u32,
    covering_radius: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    cr_by_depth: Option<Vec<f64>>,
}

fn ball_out<G: GroupElement>(
    gens: &[G],
    limits: &BallLimits,
    probes: usize,
    seed: u64,
    snapshots: bool,
) -> BallOut {
    let ball = group_ball(gens, limits.tol, limits.max_size, limits.max_depth);
    let probe_set: Vec<G> = probe_elements(probes, seed);
    BallOut {
        size: ball.len(),
        saturated: ball.saturated,
        depth: ball.depth,
        covering_radius: covering_radius_points(&ball.elements, &probe_set),
        cr_by_depth: snapshots.then(|| covering_radius_profile(&ball, &probe_set)),
    }
}

fn cmd_ball(a: BallArgs) -> Result<u8, String> {
    let limits = a.limits.to_limits()?;
    let output = match a.source.load(limits.tol)? {
        Source::Config(cfg) => {
            let (c1, c2) = gens_from_config(&cfg);
            ball_out(&[c1, c2], &limits, a.probes, a.seed, a.snapshots)
        }
        Source::File(LoadedGens::So3(v)) => ball_out(&v, &limits, a.probes, a.seed, a.snapshots),
        Source::File(LoadedGens::So4(v)) => ball_out(&v, &limits, a.probes, a.seed, a.snapshots),
        Source::File(LoadedGens::Su2(v)) => ball_out(&v, &limits, a.probes, a.seed, a.snapshots),
        Source::File(LoadedGens::U2(v)) => ball_out(&v, &limits, a.probes, a.seed, a.snapshots),
    };
    println!("{}", serde_json::to_string(&output).unwrap());
    Ok(EXIT_HOLDS)
}
