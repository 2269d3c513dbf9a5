//! Machine-readable command outputs. Every report deserializes from its own
//! JSON; complex numbers are `[re, im]` pairs and weights are doubled
//! orthogonal coordinates.

use std::collections::BTreeMap;

use clap::ValueEnum;
use fusion_forge::df_oracle::{IdentityForm, RhoInf2};
use fusion_forge::weyl_lattice::Weight;
use fusion_forge::C64;
use serde::{Deserialize, Serialize};

pub type Tolerances = BTreeMap<String, f64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Form {
    Printed,
    Corrected,
}

impl From<Form> for IdentityForm {
    fn from(f: Form) -> Self {
        match f {
            Form::Printed => IdentityForm::Printed,
            Form::Corrected => IdentityForm::Corrected,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Rho {
    Statement,
    Proof,
    ProofPhased,
}

impl From<Rho> for RhoInf2 {
    fn from(r: Rho) -> Self {
        match r {
            Rho::Statement => RhoInf2::Statement,
            Rho::Proof => RhoInf2::Proof,
            Rho::ProofPhased => RhoInf2::ProofPhased,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlcoveRow {
    pub weight: Weight,
    pub label: String,
    /// `single` for integral coordinates, `double` for half-integral ones.
    pub parity: String,
    pub casimir: String,
    pub conformal_weight: String,
    pub qdim: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlcoveReport {
    pub n: usize,
    pub level: u32,
    pub kappa: u32,
    pub rows: Vec<AlcoveRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PfSummary {
    pub block: Vec<Weight>,
    pub strongly_connected: bool,
    pub all_positive: bool,
    pub eigenvalue: f64,
    pub eigen_residual: f64,
    pub power_eigenvalue: f64,
    pub power_gap: f64,
    pub power_vector_gap: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FuseReport {
    pub n: usize,
    pub level: u32,
    pub alcove: Vec<Weight>,
    pub generator: Weight,
    /// `matrix[ν][μ]` is the multiplicity of `ν` in `generator ⊠ μ`.
    pub matrix: Vec<Vec<u32>>,
    pub perron_frobenius: PfSummary,
    pub tolerances: Tolerances,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RingReport {
    pub n: usize,
    pub labels: Vec<String>,
    pub weights: Vec<Weight>,
    pub table: Vec<Vec<String>>,
    pub group: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BraidReport {
    pub n: usize,
    pub level: u32,
    pub kappa: f64,
    #[serde(with = "fusion_forge::serde_c64")]
    pub q: C64,
    #[serde(with = "fusion_forge::serde_c64")]
    pub r: C64,
    #[serde(with = "fusion_forge::serde_c64")]
    pub z: C64,
    #[serde(with = "fusion_forge::serde_c64")]
    pub tau: C64,
    /// Braiding eigenvalues on the symmetric, antisymmetric and trivial summands.
    #[serde(with = "fusion_forge::serde_c64::array3")]
    pub eigenvalues: [C64; 3],
    pub braid_residual: f64,
    pub cubic_residual: f64,
    pub jones_residual: f64,
    pub tolerances: Tolerances,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KzRow {
    pub n: usize,
    pub k: u32,
    pub level: Option<u32>,
    #[serde(with = "fusion_forge::serde_c64")]
    pub kappa: C64,
    #[serde(with = "fusion_forge::serde_c64::array3")]
    pub lambdas: [C64; 3],
    #[serde(with = "fusion_forge::serde_c64::array3")]
    pub closed_form: [C64; 3],
    pub rel_residual: [f64; 3],
    pub ratio_residual: [f64; 2],
    pub resonant: bool,
    pub spread: Option<f64>,
    pub condition: f64,
    pub nonzero: bool,
    pub warnings: Vec<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KzReport {
    pub identity_form: Form,
    pub rho_inf2: Rho,
    pub tolerances: Tolerances,
    pub rows: Vec<KzRow>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DfParamsOut {
    #[serde(with = "fusion_forge::serde_c64")]
    pub a: C64,
    #[serde(with = "fusion_forge::serde_c64")]
    pub b: C64,
    #[serde(with = "fusion_forge::serde_c64")]
    pub c: C64,
    #[serde(with = "fusion_forge::serde_c64")]
    pub g: C64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RhosOut {
    #[serde(with = "fusion_forge::serde_c64::array3")]
    pub zero: [C64; 3],
    #[serde(with = "fusion_forge::serde_c64::array3")]
    pub infinity: [C64; 3],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DfReport {
    pub n: usize,
    pub k: u32,
    #[serde(with = "fusion_forge::serde_c64")]
    pub kappa: C64,
    pub params: DfParamsOut,
    pub in_range: bool,
    pub rhos: RhosOut,
    #[serde(with = "fusion_forge::serde_c64::array3")]
    pub connection: [C64; 3],
    #[serde(with = "fusion_forge::serde_c64::array3")]
    pub predicted: [C64; 3],
    #[serde(with = "fusion_forge::serde_c64::array3")]
    pub odetransport: [C64; 3],
    pub resid: f64,
    pub condition: f64,
    pub identity_form: Form,
    pub rho_inf2: Rho,
    pub tolerances: Tolerances,
    pub passed: bool,
}

/// Any command output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Report {
    Alcove(AlcoveReport),
    Fuse(FuseReport),
    Ring(RingReport),
    Braid(BraidReport),
    Kz(KzReport),
    Df(DfReport),
}

impl Report {
    /// Whether every threshold in the run was met.
    pub fn passed(&self) -> bool {
        match self {
            Report::Alcove(_) => true,
            Report::Fuse(r) => r.passed,
            Report::Ring(r) => r.passed,
            Report::Braid(r) => r.passed,
            Report::Kz(r) => r.passed,
            Report::Df(r) => r.passed,
        }
    }
}
