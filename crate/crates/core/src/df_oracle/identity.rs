use std::f64::consts::PI;

use serde::Serialize;

use super::DFParams;
use crate::{Error, Result, C64};

/// Which expression is used for the third connection coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IdentityForm {
    /// `s(c)s(c+g/2) / s(a+b+g/2)²`.
    Printed,
    /// `s(c)s(c+g/2) / (s(a+b+g/2) s(a+b))`.
    Corrected,
}

fn s(x: C64) -> C64 {
    (x * PI).sin()
}

fn nonzero(x: C64, name: &str) -> Result<C64> {
    if x.norm() < 1e-14 {
        return Err(Error::Pole(format!("{name} vanishes")));
    }
    Ok(x)
}

/// Coefficients of `I_{0,1}` on `I_{∞,1}, I_{∞,2}, I_{∞,3}`.
pub fn connection_identity(p: &DFParams, form: IdentityForm) -> Result<[C64; 3]> {
    let (a, b, c, g) = (p.a, p.b, p.c, p.g);
    let sab = nonzero(s(a + b), "s(a+b)")?;
    let sabg = nonzero(s(a + b + g), "s(a+b+g)")?;
    let sabh = nonzero(s(a + b + g / 2.0), "s(a+b+g/2)")?;
    let c1 = s(a) * s(a + g / 2.0) / (sabh * sabg);
    let c2 = 2.0 * (-C64::i() * PI * (a + c + g / 2.0)).exp() * (g * PI / 2.0).cos() * s(a) * s(c) / (sab * sabg);
    let c3 = match form {
        IdentityForm::Printed => s(c) * s(c + g / 2.0) / (sabh * sabh),
        IdentityForm::Corrected => s(c) * s(c + g / 2.0) / (sabh * sab),
    };
    Ok([c1, c2, c3])
}
