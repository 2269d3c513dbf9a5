//! Command-line front end for `fusion_forge`.

pub mod output;
pub mod parse;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use fusion_forge::braid_algebra::{braiding_eigenvalues, conformal_weight, wenzl_rep, BraidParams};
use fusion_forge::df_oracle::{df_verify, kappa_range, DFParams, DfTransportOptions};
use fusion_forge::kz_engine::{build_system, connection, kz_verify, ConnectionResult, TransportOptions};
use fusion_forge::tensor_fusion::{
    fusion_matrix, level1_ring, perron_frobenius_check, quantum_dim, Level1Label, VerlindeTable,
};
use fusion_forge::weyl_lattice::{alcove, casimir, is_minimal, Weight};
use fusion_forge::C64;
use rayon::prelude::*;

use output::Format;
use parse::{parse_kappa, parse_rank, parse_tol};
use report::*;

/// Environment variable bounding the worker threads of `kz-verify`.
pub const THREADS_ENV: &str = "FUSION_FORGE_THREADS";

#[derive(Debug, Parser)]
#[command(name = "fusion-forge", version, about = "Fusion rules, braid matrices and KZ connection coefficients for LSpin(2n)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Override a threshold, e.g. `--tol residual=1e-6`. Repeatable.
    #[arg(long, global = true, value_parser = parse_tol)]
    pub tol: Vec<(String, f64)>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the level-ℓ alcove with Casimirs, conformal weights and quantum dimensions.
    Alcove(RankLevel),
    /// Fusion matrix of a generator, or the level-1 ring table.
    Fuse(FuseArgs),
    /// Braid parameters and Wenzl relation residuals.
    Braid(RankLevel),
    /// KZ transport against the closed-form braiding coefficients.
    KzVerify(KzArgs),
    /// Dotsenko–Fateev transport against the connection identity.
    DfVerify(DfArgs),
}

#[derive(Debug, Args)]
pub struct RankLevel {
    #[arg(long, value_parser = parse_rank)]
    pub n: usize,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub level: u32,
}

#[derive(Debug, Args)]
pub struct FuseArgs {
    #[arg(long, value_parser = parse_rank)]
    pub n: usize,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..), required_unless_present = "ring")]
    pub level: Option<u32>,
    /// `box`, `spin+`, `spin-`, `0` or coordinates like `1/2,1/2,1/2`.
    #[arg(long, default_value = "box")]
    pub gen: String,
    /// Print the level-1 ring multiplication table instead.
    #[arg(long)]
    pub ring: bool,
}

#[derive(Debug, Args)]
pub struct KzArgs {
    #[arg(long, value_parser = parse_rank)]
    pub n: usize,
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..), required_unless_present = "kappa")]
    pub level: Option<u32>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: Option<u32>,
    /// Complex κ, e.g. `-6+4i`; replaces the physical value.
    #[arg(long, value_parser = parse_kappa, allow_hyphen_values = true)]
    pub kappa: Option<C64>,
    #[arg(long, value_enum, default_value_t = Form::Corrected)]
    pub identity: Form,
    #[arg(long, value_enum, default_value_t = Rho::ProofPhased)]
    pub rho: Rho,
}

#[derive(Debug, Args)]
pub struct DfArgs {
    #[arg(long, value_parser = parse_rank, default_value = "3")]
    pub n: usize,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..), default_value = "1")]
    pub k: u32,
    #[arg(long, value_parser = parse_kappa, allow_hyphen_values = true, default_value = "-6+4i")]
    pub kappa: C64,
    #[arg(long, value_enum, default_value_t = Form::Corrected)]
    pub identity: Form,
    #[arg(long, value_enum, default_value_t = Rho::ProofPhased)]
    pub rho: Rho,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments; exit code 2.
    Usage(String),
    /// A computation failed; exit code 1.
    Compute(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Compute(m) => f.write_str(m),
        }
    }
}

impl From<fusion_forge::Error> for CliError {
    fn from(e: fusion_forge::Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn tolerances(defaults: &[(&str, f64)], overrides: &[(String, f64)]) -> Result<Tolerances> {
    let mut t: Tolerances = defaults.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    for (name, v) in overrides {
        match t.get_mut(name) {
            Some(slot) => *slot = *v,
            None => {
                let known: Vec<&str> = defaults.iter().map(|(k, _)| *k).collect();
                return Err(CliError::Usage(format!("unknown tolerance {name:?}; this command accepts {known:?}")));
            }
        }
    }
    Ok(t)
}

fn thread_pool() -> Result<rayon::ThreadPool> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => v.parse::<usize>().map_err(|_| CliError::Usage(format!("{THREADS_ENV} must be a count, got {v:?}")))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| CliError::Compute(e.to_string()))
}

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Alcove(a) => {
            tolerances(&[], &cli.tol)?;
            cmd_alcove(a.n, a.level).map(Report::Alcove)
        }
        Command::Fuse(a) if a.ring => {
            tolerances(&[], &cli.tol)?;
            cmd_ring(a.n).map(Report::Ring)
        }
        Command::Fuse(a) => {
            let tol = tolerances(&[("pf_eigen", 1e-9), ("pf_power", 1e-6)], &cli.tol)?;
            let gen = parse::parse_generator(&a.gen, a.n).map_err(CliError::Usage)?;
            cmd_fuse(a.n, a.level.unwrap_or(1), &gen, tol).map(Report::Fuse)
        }
        Command::Braid(a) => {
            let tol = tolerances(&[("braid", 1e-12), ("cubic", 1e-12), ("jones", 1e-12)], &cli.tol)?;
            cmd_braid(a.n, a.level, tol).map(Report::Braid)
        }
        Command::KzVerify(a) => {
            let tol = tolerances(&[("residual", 1e-5), ("lambda_min", 1e-6), ("spread", 1e-3)], &cli.tol)?;
            cmd_kz(a, tol).map(Report::Kz)
        }
        Command::DfVerify(a) => {
            let tol = tolerances(&[("resid", 1e-5)], &cli.tol)?;
            cmd_df(a, tol).map(Report::Df)
        }
    }
}

fn q_string(x: fusion_forge::Q) -> String {
    if *x.denom() == 1 {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn cmd_alcove(n: usize, level: u32) -> Result<AlcoveReport> {
    let alc = alcove(n, level)?;
    let rows = alc
        .weights()
        .iter()
        .map(|w| {
            Ok(AlcoveRow {
                weight: w.clone(),
                label: w.to_string(),
                parity: if w.is_single_valued() { "single" } else { "double" }.into(),
                casimir: q_string(casimir(w)?),
                conformal_weight: q_string(conformal_weight(w, n, level)?),
                qdim: quantum_dim(w, n, level)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AlcoveReport { n, level, kappa: alc.kappa(), rows })
}

pub fn cmd_fuse(n: usize, level: u32, gen: &Weight, tol: Tolerances) -> Result<FuseReport> {
    let alc = alcove(n, level)?;
    if !alc.contains(gen) {
        return Err(CliError::Usage(format!("generator {gen} is not in the level-{level} alcove")));
    }
    let matrix = if is_minimal(gen) {
        fusion_matrix(gen, &alc)?.entries
    } else {
        VerlindeTable::new(&alc)?.matrix(gen)?
    };
    let pf = perron_frobenius_check(n, level)?;
    let pf_passed = pf.passed(tol["pf_eigen"], tol["pf_power"]);
    let perron_frobenius = PfSummary {
        block: pf.block,
        strongly_connected: pf.strongly_connected,
        all_positive: pf.all_positive,
        eigenvalue: pf.eigenvalue,
        eigen_residual: pf.eigen_residual,
        power_eigenvalue: pf.power_eigenvalue,
        power_gap: pf.power_gap,
        power_vector_gap: pf.power_vector_gap,
        passed: pf_passed,
    };
    Ok(FuseReport {
        n,
        level,
        alcove: alc.weights().to_vec(),
        generator: gen.clone(),
        matrix,
        perron_frobenius,
        tolerances: tol,
        passed: pf_passed,
    })
}

fn label(l: Level1Label) -> String {
    match l {
        Level1Label::Zero => "0",
        Level1Label::V => "v",
        Level1Label::SPlus => "s+",
        Level1Label::SMinus => "s-",
    }
    .into()
}

pub fn cmd_ring(n: usize) -> Result<RingReport> {
    let ring = level1_ring(n)?;
    Ok(RingReport {
        n,
        labels: ring.labels.iter().map(|&l| label(l)).collect(),
        weights: ring.labels.iter().map(|l| l.weight(n)).collect(),
        table: ring.table.iter().map(|row| row.iter().map(|&l| label(l)).collect()).collect(),
        group: if n % 2 == 1 { "Z4" } else { "Z2xZ2" }.into(),
        passed: ring.is_expected_group(),
    })
}

pub fn cmd_braid(n: usize, level: u32, tol: Tolerances) -> Result<BraidReport> {
    let p = BraidParams::new(n, level)?;
    let (bs, ba, b0) = braiding_eigenvalues(&p)?;
    let rep = wenzl_rep(&p)?;
    let res = rep.residuals(&p);
    let passed = res.braid < tol["braid"] && res.cubic < tol["cubic"] && res.jones < tol["jones"];
    Ok(BraidReport {
        n,
        level,
        kappa: p.kappa,
        q: p.q,
        r: p.r,
        z: rep.z,
        tau: rep.tau,
        eigenvalues: [bs, ba, b0],
        braid_residual: res.braid,
        cubic_residual: res.cubic,
        jones_residual: res.jones,
        tolerances: tol,
        passed,
    })
}

fn kz_row(r: ConnectionResult, tol: &Tolerances) -> KzRow {
    let nonzero = r.min_abs_lambda() > tol["lambda_min"];
    let spread_ok = r.spread.is_none_or(|s| s < tol["spread"]);
    let passed = r.max_residual() < tol["residual"] && nonzero && spread_ok;
    KzRow {
        n: r.n,
        k: r.k,
        level: r.level,
        kappa: r.kappa,
        lambdas: r.lambdas,
        closed_form: r.closed_form,
        rel_residual: r.rel_residual,
        ratio_residual: r.ratio_residual,
        resonant: r.resonant,
        spread: r.spread,
        condition: r.condition,
        nonzero,
        warnings: r.path_meta.warnings,
        passed,
    }
}

/// Rows for `k = 1..ℓ−1` at the physical κ (resonant levels go through the
/// deformation), or a single row at an explicit complex κ.
pub fn cmd_kz(a: &KzArgs, tol: Tolerances) -> Result<KzReport> {
    let opts = TransportOptions::default();
    let (form, variant) = (a.identity.into(), a.rho.into());
    let mut rows = if let Some(kappa) = a.kappa {
        let sys = build_system(a.n, a.k.unwrap_or(1), kappa)?;
        vec![kz_row(connection(&sys, form, variant, &opts)?, &tol)]
    } else {
        let level = a.level.expect("clap requires --level without --kappa");
        let ks: Vec<u32> = match a.k {
            Some(k) if k < level => vec![k],
            Some(k) => return Err(CliError::Usage(format!("k = {k} needs level > k, got {level}"))),
            None => (1..level).collect(),
        };
        let pool = thread_pool()?;
        let results: Vec<_> = pool.install(|| {
            ks.par_iter().map(|&k| kz_verify(a.n, k, level, form, variant, &opts)).collect()
        });
        results
            .into_iter()
            .map(|r| r.map(|r| kz_row(r, &tol)).map_err(CliError::from))
            .collect::<Result<Vec<_>>>()?
    };
    rows.sort_by_key(|r| (r.n, r.k, r.level));
    let passed = rows.iter().all(|r| r.passed);
    Ok(KzReport { identity_form: a.identity, rho_inf2: a.rho, tolerances: tol, rows, passed })
}

pub fn cmd_df(a: &DfArgs, tol: Tolerances) -> Result<DfReport> {
    let p = DFParams::fitting(a.n, a.k, a.kappa)?;
    let v = df_verify(&p, a.identity.into(), a.rho.into(), &DfTransportOptions::default())?;
    Ok(DfReport {
        n: a.n,
        k: a.k,
        kappa: a.kappa,
        params: DfParamsOut { a: p.a, b: p.b, c: p.c, g: p.g },
        in_range: kappa_range(a.n, a.k, a.kappa),
        rhos: RhosOut { zero: v.rhos.zero, infinity: v.rhos.infinity },
        connection: v.connection,
        predicted: v.predicted,
        odetransport: v.ode_transport,
        resid: v.resid,
        condition: v.condition,
        identity_form: a.identity,
        rho_inf2: a.rho,
        passed: v.resid < tol["resid"],
        tolerances: tol,
    })
}
