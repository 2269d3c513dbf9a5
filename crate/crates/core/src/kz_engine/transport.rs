use std::f64::consts::PI;

use serde::Serialize;

use super::local::{frobenius_basis, LocalBasis, Point};
use super::system::{KZSystem, M3};
use crate::df_oracle::condition_number;
use crate::fuchsian::{transport_polygon, Stats, Tolerances};
use crate::{Error, Result, C64};

/// Matching matrices above this condition number raise a warning.
pub const CONDITION_WARN: f64 = 1e8;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct TransportOptions {
    pub delta: f64,
    pub delta_inf: f64,
    pub order: usize,
    pub rtol: f64,
    pub atol: f64,
}

impl Default for TransportOptions {
    fn default() -> Self {
        TransportOptions { delta: 0.3, delta_inf: 0.3, order: 48, rtol: 1e-11, atol: 1e-14 }
    }
}

impl TransportOptions {
    pub fn tolerances(&self) -> Tolerances {
        Tolerances { rtol: self.rtol, atol: self.atol }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PathMeta {
    pub delta: f64,
    pub delta_inf: f64,
    pub order: usize,
    pub radius_zero: f64,
    pub radius_infinity: f64,
    pub steps: usize,
    pub rejected: usize,
    pub evaluations: usize,
    pub min_step: f64,
    pub condition: f64,
    pub warnings: Vec<String>,
}

/// The transported 0-basis expressed on the ∞-basis: column `j` holds the
/// coefficients of the `j`-th solution at 0. Column 2 is `f₀`.
#[derive(Clone, Debug)]
pub struct Transported {
    pub matrix: M3,
    pub meta: PathMeta,
}

impl Transported {
    pub fn lambdas(&self) -> [C64; 3] {
        [self.matrix[(0, 2)], self.matrix[(1, 2)], self.matrix[(2, 2)]]
    }
}

pub(crate) fn log_branch(x: C64, arg: f64) -> C64 {
    C64::new(x.norm().ln(), arg)
}

/// Continues every column of `start` along the polygon.
pub(crate) fn continue_columns(sys: &KZSystem, vertices: &[C64], start: &M3, tol: Tolerances) -> Result<(M3, Stats)> {
    let y0: Vec<C64> = start.iter().cloned().collect();
    let rhs = |z: C64, y: &[C64]| -> Vec<C64> {
        let a = sys.coefficient(z);
        let m = M3::from_column_slice(y);
        (a * m).iter().cloned().collect()
    };
    let (y, stats) = transport_polygon(rhs, vertices, &y0, tol)?;
    Ok((M3::from_column_slice(&y), stats))
}

fn meta_for(opts: &TransportOptions, b0: &LocalBasis, binf: &LocalBasis, stats: &Stats, condition: f64) -> PathMeta {
    let mut warnings = Vec::new();
    if opts.delta > b0.radius {
        warnings.push(format!("δ = {} exceeds validated radius {:.3} at 0", opts.delta, b0.radius));
    }
    if opts.delta_inf > binf.radius {
        warnings.push(format!("δ′ = {} exceeds validated radius {:.3} at ∞", opts.delta_inf, binf.radius));
    }
    if condition > CONDITION_WARN {
        warnings.push(format!("matching condition number {condition:.3e}"));
    }
    PathMeta {
        delta: opts.delta,
        delta_inf: opts.delta_inf,
        order: opts.order,
        radius_zero: b0.radius,
        radius_infinity: binf.radius,
        steps: stats.accepted,
        rejected: stats.rejected,
        evaluations: stats.evaluations,
        min_step: stats.min_step,
        condition,
        warnings,
    }
}

/// Continues the 0-basis from `z = −δ` to `z = −1/δ′` along the negative axis
/// (`arg z = π`) and matches against the ∞-basis (`arg w = −π`).
pub fn transport(sys: &KZSystem, opts: &TransportOptions) -> Result<Transported> {
    let b0 = frobenius_basis(sys, Point::Zero, opts.order)?;
    let binf = frobenius_basis(sys, Point::Infinity, opts.order)?;
    let z0 = C64::new(-opts.delta, 0.0);
    let z1 = C64::new(-1.0 / opts.delta_inf, 0.0);
    let start = b0.eval(z0, log_branch(z0, PI));
    let (end, stats) = continue_columns(sys, &[z0, z1], &start, opts.tolerances())?;
    let w = 1.0 / z1;
    let g = binf.eval(w, log_branch(w, -PI));
    let condition = condition_number(&g);
    let matrix = g.lu().solve(&end).ok_or(Error::Singular("matching matrix at infinity"))?;
    Ok(Transported { matrix, meta: meta_for(opts, &b0, &binf, &stats, condition) })
}

/// The inverse path: the ∞-basis continued back to `−δ` and expanded on the 0-basis.
pub fn transport_back(sys: &KZSystem, opts: &TransportOptions) -> Result<Transported> {
    let b0 = frobenius_basis(sys, Point::Zero, opts.order)?;
    let binf = frobenius_basis(sys, Point::Infinity, opts.order)?;
    let z0 = C64::new(-opts.delta, 0.0);
    let z1 = C64::new(-1.0 / opts.delta_inf, 0.0);
    let w = 1.0 / z1;
    let start = binf.eval(w, log_branch(w, -PI));
    let (end, stats) = continue_columns(sys, &[z1, z0], &start, opts.tolerances())?;
    let z = b0.eval(z0, log_branch(z0, PI));
    let condition = condition_number(&z);
    let matrix = z.lu().solve(&end).ok_or(Error::Singular("matching matrix at zero"))?;
    Ok(Transported { matrix, meta: meta_for(opts, &b0, &binf, &stats, condition) })
}

/// `‖T_back · T − I‖` (max entry).
pub fn round_trip_error(sys: &KZSystem, opts: &TransportOptions) -> Result<f64> {
    let fwd = transport(sys, opts)?;
    let back = transport_back(sys, opts)?;
    let p = back.matrix * fwd.matrix - M3::identity();
    Ok(p.iter().map(|x| x.norm()).fold(0.0, f64::max))
}
