use super::gamma::{complex_gamma, reciprocal_gamma};
use crate::{Error, Result, C64};

fn gamma_named(z: C64, name: &str) -> Result<C64> {
    complex_gamma(z).map_err(|_| Error::Pole(format!("Γ({name}) at {z}")))
}

/// `J₂(α,β;γ) = ∏_{j=1,2} Γ(jγ/2+1)Γ(α+(j−1)γ/2+1)Γ(β+(j−1)γ/2+1) / (Γ(γ/2+1)Γ(α+β+jγ/2+2))`.
pub fn selberg_j2(alpha: C64, beta: C64, gamma: C64) -> Result<C64> {
    let h = gamma / 2.0;
    let mut out = C64::new(1.0, 0.0);
    for j in 1..=2 {
        let jf = j as f64;
        let ga = gamma_named(alpha + h * (jf - 1.0) + 1.0, "α+(j−1)γ/2+1")?;
        let gb = gamma_named(beta + h * (jf - 1.0) + 1.0, "β+(j−1)γ/2+1")?;
        // grouped so that swapping α and β is bitwise exact
        out *= gamma_named(h * jf + 1.0, "jγ/2+1")?
            * (ga * gb)
            * reciprocal_gamma(h + 1.0)
            * reciprocal_gamma(alpha + beta + h * jf + 2.0);
    }
    Ok(out)
}
