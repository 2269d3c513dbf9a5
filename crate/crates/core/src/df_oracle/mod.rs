//! Closed-form side of the Dotsenko–Fateev theory, with independent numerical
//! oracles (two-dimensional quadrature and ODE transport).

mod coefficients;
mod gamma;
mod identity;
mod quadrature;
mod rho;
mod selberg;
mod transport;

use std::f64::consts::PI;

use serde::Serialize;

pub use coefficients::{df_coefficients, df_coefficients_kz, kappa_range, DFCoefficients, DFParams};
pub use gamma::{beta, complex_gamma, reciprocal_gamma};
pub use identity::{connection_identity, IdentityForm};
pub use quadrature::{quadrature_oracle_j2, QuadratureResult};
pub use rho::{rho_coefficients, RhoInf2, Rhos};
pub use selberg::selberg_j2;
pub use transport::{df_local_series, df_transport, DfTransport, DfTransportOptions};

pub(crate) use transport::condition_number;

use crate::{Result, C64};

/// What the connection identity predicts for the coefficients returned by
/// [`df_transport`]: `coef_j · ρ_{∞,j} · e^{iπ e_j}`, the last factor moving
/// from `(−1/z)^{e_j}` to the `arg(1/z) = −π` branch.
pub fn predicted_transport(p: &DFParams, form: IdentityForm, variant: RhoInf2) -> Result<[C64; 3]> {
    let coef = connection_identity(p, form)?;
    let rhos = rho_coefficients(p, variant)?;
    let e = p.exponents_infinity();
    Ok([0, 1, 2].map(|j| coef[j] * rhos.infinity[j] * (C64::i() * PI * e[j]).exp()))
}

pub fn relative_residuals(got: &[C64; 3], want: &[C64; 3]) -> [f64; 3] {
    [0, 1, 2].map(|j| (got[j] - want[j]).norm() / want[j].norm())
}

/// One DF verification run.
#[derive(Clone, Debug, Serialize)]
pub struct DfVerification {
    pub params: DFParams,
    pub rhos: Rhos,
    #[serde(with = "crate::serde_c64::array3")]
    pub connection: [C64; 3],
    #[serde(with = "crate::serde_c64::array3")]
    pub predicted: [C64; 3],
    #[serde(rename = "odetransport", with = "crate::serde_c64::array3")]
    pub ode_transport: [C64; 3],
    pub resid: f64,
    pub identity_form: IdentityForm,
    pub rho_inf2: RhoInf2,
    pub condition: f64,
}

pub fn df_verify(
    p: &DFParams,
    form: IdentityForm,
    variant: RhoInf2,
    opts: &DfTransportOptions,
) -> Result<DfVerification> {
    let t = df_transport(p, opts)?;
    let predicted = predicted_transport(p, form, variant)?;
    let resid = relative_residuals(&t.coefficients, &predicted).into_iter().fold(0.0, f64::max);
    Ok(DfVerification {
        params: *p,
        rhos: rho_coefficients(p, variant)?,
        connection: connection_identity(p, form)?,
        predicted,
        ode_transport: t.coefficients,
        resid,
        identity_form: form,
        rho_inf2: variant,
        condition: t.condition,
    })
}
