use serde::Serialize;

use super::closed_form::closed_form_lambdas;
use super::system::{build_system, KZSystem};
use super::transport::{transport, TransportOptions};
use crate::df_oracle::{IdentityForm, RhoInf2};
use crate::{Error, Result, C64};

/// Imaginary offsets used for the deformation `κ(1 + iη)`.
pub const ETAS: [f64; 3] = [1e-2, 5e-3, 2.5e-3];
/// Largest accepted extrapolation spread.
pub const MAX_SPREAD: f64 = 1e-3;

/// Exponents collide at 0 when `ℓ = 2` and at ∞ when `ℓ = 2k`.
pub fn is_resonant(level: u32, k: u32) -> bool {
    level == 2 || level == 2 * k
}

#[derive(Clone, Debug, Serialize)]
pub struct ResonantResult {
    #[serde(with = "crate::serde_c64::array3")]
    pub lambdas: [C64; 3],
    #[serde(with = "crate::serde_c64::array3")]
    pub closed_form: [C64; 3],
    pub spread: f64,
    pub closed_form_spread: f64,
    pub etas: [f64; 3],
    pub condition: f64,
}

/// Quadratic Richardson extrapolation to `η = 0` from `η, η/2, η/4`, with the
/// relative gap to the linear extrapolant as error bar.
pub fn richardson(samples: &[[C64; 3]; 3]) -> ([C64; 3], f64) {
    let mut out = [C64::new(0.0, 0.0); 3];
    let mut spread: f64 = 0.0;
    for j in 0..3 {
        let (f1, f2, f4) = (samples[0][j], samples[1][j], samples[2][j]);
        let r1 = 2.0 * f2 - f1;
        let r1b = 2.0 * f4 - f2;
        let r2 = (4.0 * r1b - r1) / 3.0;
        out[j] = r2;
        spread = spread.max((r2 - r1b).norm() / r2.norm());
    }
    (out, spread)
}

fn deformed(sys: &KZSystem, eta: f64) -> Result<KZSystem> {
    build_system(sys.n, sys.k, sys.kappa * C64::new(1.0, eta))
}

/// Connection coefficients at a resonant physical level, through `κ(1 + iη) → κ`.
pub fn resonant_lambdas(
    n: usize,
    k: u32,
    level: u32,
    form: IdentityForm,
    variant: RhoInf2,
    opts: &TransportOptions,
) -> Result<ResonantResult> {
    if !is_resonant(level, k) {
        return Err(Error::NotResonant { level, k });
    }
    let sys = KZSystem::physical(n, k, level)?;
    let mut lam = [[C64::new(0.0, 0.0); 3]; 3];
    let mut cf = [[C64::new(0.0, 0.0); 3]; 3];
    let mut condition: f64 = 0.0;
    for (i, &eta) in ETAS.iter().enumerate() {
        let s = deformed(&sys, eta)?;
        let t = transport(&s, opts)?;
        condition = condition.max(t.meta.condition);
        lam[i] = t.lambdas();
        cf[i] = closed_form_lambdas(n, k, s.kappa, form, variant)?;
    }
    let (lambdas, spread) = richardson(&lam);
    let (closed_form, closed_form_spread) = richardson(&cf);
    if spread > MAX_SPREAD {
        return Err(Error::ResonanceTooStrong(spread));
    }
    Ok(ResonantResult { lambdas, closed_form, spread, closed_form_spread, etas: ETAS, condition })
}

/// Least-squares quadratic through the transported coefficients at
/// `κ + i jη`, `j = −2..2`; returns the largest relative misfit.
pub fn holomorphy_residual(sys: &KZSystem, eta: f64, opts: &TransportOptions) -> Result<f64> {
    let js = [-2.0, -1.0, 0.0, 1.0, 2.0];
    let mut vals = Vec::new();
    for &j in &js {
        let s = build_system(sys.n, sys.k, sys.kappa + C64::new(0.0, j * eta))?;
        vals.push(transport(&s, opts)?.lambdas());
    }
    let mut worst: f64 = 0.0;
    for c in 0..3 {
        // orthogonal polynomials on the symmetric 5-point grid: 1, x, x² − 2
        let y: Vec<C64> = vals.iter().map(|v| v[c]).collect();
        let p0: C64 = y.iter().sum::<C64>() / 5.0;
        let p1: C64 = js.iter().zip(&y).map(|(x, v)| v * x).sum::<C64>() / 10.0;
        let p2: C64 = js.iter().zip(&y).map(|(x, v)| v * (x * x - 2.0)).sum::<C64>() / 14.0;
        let scale = y[2].norm();
        for (x, v) in js.iter().zip(&y) {
            let fit = p0 + p1 * *x + p2 * (x * x - 2.0);
            worst = worst.max((fit - v).norm() / scale);
        }
    }
    Ok(worst)
}
