use std::f64::consts::PI;

use serde::Serialize;

use super::gamma::beta;
use super::selberg::selberg_j2;
use super::DFParams;
use crate::{Result, C64};

/// Which expression is used for `ρ_{∞,2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RhoInf2 {
    /// `B(a+1,b+1) B(−(1+a+b+c), c+1)`.
    Statement,
    /// `B(a+1,b+1) B(−(1+a+b+c+g), c+1)`.
    Proof,
    /// `−e^{iπ(a+c+g)} B(a+1,b+1) B(−(1+a+b+c+g), c+1)`.
    ProofPhased,
}

impl RhoInf2 {
    pub const ALL: [RhoInf2; 3] = [RhoInf2::Statement, RhoInf2::Proof, RhoInf2::ProofPhased];
}

/// Leading coefficients of the contour-integral solutions at 0 and ∞.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Rhos {
    #[serde(with = "crate::serde_c64::array3")]
    pub zero: [C64; 3],
    #[serde(with = "crate::serde_c64::array3")]
    pub infinity: [C64; 3],
}

pub fn rho_coefficients(p: &DFParams, variant: RhoInf2) -> Result<Rhos> {
    let (a, b, c, g) = (p.a, p.b, p.c, p.g);
    let one = C64::new(1.0, 0.0);
    let pre = 0.5 * (one + (C64::i() * PI * g).exp());
    let m = -(2.0 + a + b + c + g);
    let r01 = pre * selberg_j2(m, b, g)?;
    let r02 = beta(a + one, c + one)? * beta(-(one + a + b + c), b + one)?;
    let r03 = pre * selberg_j2(a, c, g)?;
    let ri1 = pre * selberg_j2(a, b, g)?;
    let ri2 = match variant {
        RhoInf2::Statement => beta(a + one, b + one)? * beta(-(one + a + b + c), c + one)?,
        RhoInf2::Proof => beta(a + one, b + one)? * beta(-(one + a + b + c + g), c + one)?,
        RhoInf2::ProofPhased => {
            -(C64::i() * PI * (a + c + g)).exp() * beta(a + one, b + one)? * beta(-(one + a + b + c + g), c + one)?
        }
    };
    let ri3 = pre * selberg_j2(m, c, g)?;
    Ok(Rhos { zero: [r01, r02, r03], infinity: [ri1, ri2, ri3] })
}
