//! The reduced Knizhnik–Zamolodchikov system for `V_{kθ₁}, V_□, V_□, V_{kθ₁}`:
//! exact residue matrices, Frobenius bases at 0 and ∞, numerical continuation
//! along the negative axis and the closed-form connection coefficients.

mod closed_form;
mod local;
mod monodromy;
mod reduce;
mod resonant;
mod system;
mod transport;

use serde::Serialize;

pub use closed_form::closed_form_lambdas;
pub use local::{frobenius_basis, LocalBasis, Point};
pub use monodromy::{monodromy, MonodromyReport};
pub use reduce::{
    fd_weights, reduce_value, reduced_zero_basis, reduction_factor, sample_f0, scalar_reduce, PathSamples,
    ScalarReduction,
};
pub use resonant::{holomorphy_residual, is_resonant, resonant_lambdas, richardson, ResonantResult, ETAS, MAX_SPREAD};
pub use system::{build_system, char_poly, exterior_square_residues, kz_rhs, poly_from_roots, xx, yy, KZSystem, QMat, M3, V3};
pub use transport::{round_trip_error, transport, transport_back, PathMeta, TransportOptions, Transported, CONDITION_WARN};

use crate::df_oracle::{IdentityForm, RhoInf2};
use crate::{Result, C64};

/// Transported and closed-form connection coefficients of `R(f₀)` on
/// `R(g_{(k+1)θ₁}), R(g_{kθ₁+θ₂}), R(g_{(k−1)θ₁})`.
#[derive(Clone, Debug, Serialize)]
pub struct ConnectionResult {
    pub n: usize,
    pub k: u32,
    pub level: Option<u32>,
    #[serde(with = "crate::serde_c64")]
    pub kappa: C64,
    #[serde(with = "crate::serde_c64::array3")]
    pub lambdas: [C64; 3],
    #[serde(with = "crate::serde_c64::array3")]
    pub closed_form: [C64; 3],
    pub rel_residual: [f64; 3],
    /// Relative error of `λ₂/λ₁` and `λ₃/λ₁`.
    pub ratio_residual: [f64; 2],
    pub resonant: bool,
    pub spread: Option<f64>,
    pub condition: f64,
    pub identity_form: IdentityForm,
    pub rho_inf2: RhoInf2,
    pub path_meta: PathMeta,
}

impl ConnectionResult {
    pub fn max_residual(&self) -> f64 {
        self.rel_residual.iter().chain(&self.ratio_residual).cloned().fold(0.0, f64::max)
    }

    pub fn min_abs_lambda(&self) -> f64 {
        self.lambdas.iter().map(|x| x.norm()).fold(f64::INFINITY, f64::min)
    }
}

fn residuals(lambdas: &[C64; 3], cf: &[C64; 3]) -> ([f64; 3], [f64; 2]) {
    let rel = [0, 1, 2].map(|j| (lambdas[j] - cf[j]).norm() / cf[j].norm());
    let ratio = [1, 2].map(|j| {
        let (a, b) = (lambdas[j] / lambdas[0], cf[j] / cf[0]);
        (a - b).norm() / b.norm()
    });
    (rel, ratio)
}

/// Compares transport with the closed form at the system's κ.
pub fn connection(sys: &KZSystem, form: IdentityForm, variant: RhoInf2, opts: &TransportOptions) -> Result<ConnectionResult> {
    let t = transport(sys, opts)?;
    let lambdas = t.lambdas();
    let closed_form = closed_form_lambdas(sys.n, sys.k, sys.kappa, form, variant)?;
    let (rel_residual, ratio_residual) = residuals(&lambdas, &closed_form);
    Ok(ConnectionResult {
        n: sys.n,
        k: sys.k,
        level: None,
        kappa: sys.kappa,
        lambdas,
        closed_form,
        rel_residual,
        ratio_residual,
        resonant: false,
        spread: None,
        condition: t.meta.condition,
        identity_form: form,
        rho_inf2: variant,
        path_meta: t.meta,
    })
}

/// Physical-level run, routed through the κ-deformation at resonant levels.
pub fn kz_verify(n: usize, k: u32, level: u32, form: IdentityForm, variant: RhoInf2, opts: &TransportOptions) -> Result<ConnectionResult> {
    let sys = KZSystem::physical(n, k, level)?;
    if !is_resonant(level, k) {
        let mut r = connection(&sys, form, variant, opts)?;
        r.level = Some(level);
        return Ok(r);
    }
    let res = resonant_lambdas(n, k, level, form, variant, opts)?;
    let (rel_residual, ratio_residual) = residuals(&res.lambdas, &res.closed_form);
    Ok(ConnectionResult {
        n,
        k,
        level: Some(level),
        kappa: sys.kappa,
        lambdas: res.lambdas,
        closed_form: res.closed_form,
        rel_residual,
        ratio_residual,
        resonant: true,
        spread: Some(res.spread),
        condition: res.condition,
        identity_form: form,
        rho_inf2: variant,
        path_meta: PathMeta { delta: opts.delta, delta_inf: opts.delta_inf, order: opts.order, ..Default::default() },
    })
}
