use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector, Matrix3, Vector3};
use serde::Serialize;

use super::{df_coefficients, rho_coefficients, DFCoefficients, DFParams, RhoInf2};
use crate::fuchsian::{check_nonresonant, companion, transport_segment, FrobeniusSeries, Tolerances};
use crate::{Error, Result, C64};

#[derive(Clone, Copy, Debug)]
pub struct DfTransportOptions {
    /// Seed point is `z = −delta`.
    pub delta: f64,
    /// Matching point is `z = −1/delta_inf`.
    pub delta_inf: f64,
    pub order: usize,
    pub tol: Tolerances,
}

impl Default for DfTransportOptions {
    fn default() -> Self {
        DfTransportOptions { delta: 0.3, delta_inf: 0.3, order: 48, tol: Tolerances::default() }
    }
}

/// `I_{0,1}` continued along the negative axis and expanded on the
/// leading-coefficient-one solutions at ∞ (branch `arg(1/z) = −π`).
#[derive(Clone, Debug, Serialize)]
pub struct DfTransport {
    #[serde(with = "crate::serde_c64::array3")]
    pub coefficients: [C64; 3],
    #[serde(with = "crate::serde_c64::array3")]
    pub exponents_zero: [C64; 3],
    #[serde(with = "crate::serde_c64::array3")]
    pub exponents_infinity: [C64; 3],
    pub condition: f64,
    pub steps: usize,
}

/// θ-form coefficients `(p₂, p₁, p₀)_m` of the equation at 0 (in `z`) or ∞ (in `1/z`).
fn theta_series(co: &DFCoefficients, at_infinity: bool, order: usize) -> Vec<DMatrix<C64>> {
    let zero = C64::new(0.0, 0.0);
    (0..=order)
        .map(|m| {
            let mf = m as f64;
            let d = if m == 0 { 1.0 } else { 0.0 };
            let (p, q, r) = if at_infinity {
                (co.k2 * d + co.k1, co.l2 * d + co.l1 * (mf + 1.0) + co.l3, co.m1 * (mf + 1.0) + co.m2)
            } else {
                let geo = if m >= 1 { 1.0 } else { 0.0 };
                let ramp = if m >= 2 { mf - 1.0 } else { 0.0 };
                (co.k2 * d - co.k1 * geo, co.l2 * d + co.l1 * ramp - co.l3 * geo, co.m1 * ramp - co.m2 * geo)
            };
            let (p2, p1, p0) = if at_infinity {
                (3.0 * d - p, q - p + 2.0 * d, -r)
            } else {
                (p - 3.0 * d, q - p + 2.0 * d, r)
            };
            if m == 0 {
                companion(p2, p1, p0)
            } else {
                let mut a = companion(p2, p1, p0);
                a[(0, 1)] = zero;
                a[(1, 2)] = zero;
                a
            }
        })
        .collect()
}

fn leading(s: C64) -> DVector<C64> {
    DVector::from_vec(vec![C64::new(1.0, 0.0), s, s * s])
}

/// Local solutions `x^s(1 + …)` of the DF equation, in the form `(f, θf, θ²f)`.
pub fn df_local_series(p: &DFParams, at_infinity: bool, order: usize) -> Result<Vec<FrobeniusSeries>> {
    let co = df_coefficients(p);
    let a = theta_series(&co, at_infinity, order);
    let (exps, point) = if at_infinity {
        (p.exponents_infinity(), "infinity")
    } else {
        (p.exponents_zero(), "zero")
    };
    check_nonresonant(&exps, point, 1e-9)?;
    exps.iter().map(|&s| FrobeniusSeries::new(&a, s, leading(s), order)).collect()
}

pub(crate) fn condition_number(m: &Matrix3<C64>) -> f64 {
    let sv = m.svd(false, false).singular_values;
    let max = sv.iter().cloned().fold(0.0, f64::max);
    let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    max / min
}

/// Continues `ρ_{0,1}·(1 + O(z))` from `−δ` to `−1/δ'` and solves for its
/// coefficients on the ∞ basis.
pub fn df_transport(p: &DFParams, opts: &DfTransportOptions) -> Result<DfTransport> {
    let co = df_coefficients(p);
    let rho01 = rho_coefficients(p, RhoInf2::ProofPhased)?.zero[0];
    let zero_basis = df_local_series(p, false, opts.order)?;
    let inf_basis = df_local_series(p, true, opts.order)?;

    let z0 = C64::new(-opts.delta, 0.0);
    let y = zero_basis[0].eval(z0, C64::new(opts.delta.ln(), PI)) * rho01;
    let seed = [y[0], y[1] / z0, (y[2] - y[1]) / (z0 * z0)];

    let z1 = C64::new(-1.0 / opts.delta_inf, 0.0);
    let rhs = |z: C64, f: &[C64]| -> Vec<C64> {
        let (pp, qq, ss) = co.pqs(z);
        vec![f[1], f[2], -(pp * f[2] + qq * f[1] + ss * f[0])]
    };
    let sol = transport_segment(rhs, z0, z1, &seed, opts.tol, &[])?;
    let f = &sol.y_end;
    let target = Vector3::new(f[0], z1 * f[1], z1 * z1 * f[2] + z1 * f[1]);

    let w = 1.0 / z1;
    let log_w = C64::new(w.norm().ln(), -PI);
    let mut m = Matrix3::<C64>::zeros();
    for (j, g) in inf_basis.iter().enumerate() {
        let v = g.eval(w, log_w);
        m[(0, j)] = v[0];
        m[(1, j)] = -v[1];
        m[(2, j)] = v[2];
    }
    let condition = condition_number(&m);
    let c = m.lu().solve(&target).ok_or(Error::Singular("matching matrix at infinity"))?;
    Ok(DfTransport {
        coefficients: [c[0], c[1], c[2]],
        exponents_zero: p.exponents_zero(),
        exponents_infinity: p.exponents_infinity(),
        condition,
        steps: sol.stats.accepted,
    })
}
