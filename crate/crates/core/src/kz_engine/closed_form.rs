use std::f64::consts::PI;

use crate::df_oracle::{predicted_transport, rho_coefficients, DFParams, IdentityForm, RhoInf2};
use crate::{Error, Result, C64};

/// `λ_j = e^{−iπk/κ} ρ_{0,1}⁻¹ ρ_{∞,j} coef_j`, expressed on the engine's
/// ∞-basis (`arg(1/z) = −π`, leading coefficient one).
pub fn closed_form_lambdas(n: usize, k: u32, kappa: C64, form: IdentityForm, variant: RhoInf2) -> Result<[C64; 3]> {
    if n < 3 {
        return Err(Error::RankTooSmall(n));
    }
    let p = DFParams::fitting(n, k, kappa)?;
    let rho01 = rho_coefficients(&p, variant)?.zero[0];
    if rho01.norm() < 1e-300 {
        return Err(Error::Pole("ρ01 vanishes".into()));
    }
    let phase = (-C64::i() * PI * k as f64 / kappa).exp();
    let t = predicted_transport(&p, form, variant)?;
    Ok(t.map(|x| phase * x / rho01))
}
