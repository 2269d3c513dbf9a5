use std::f64::consts::PI;

use serde::Serialize;

use super::local::{frobenius_basis, Point};
use super::system::{KZSystem, M3, V3};
use super::transport::{log_branch, TransportOptions};
use crate::df_oracle::{df_coefficients, DFParams};
use crate::fuchsian::transport_segment;
use crate::{Result, C64};

/// Half-width of the central difference stencils.
const HALF: usize = 5;

/// Values of `f₀` on the uniform grid `z = −t`.
#[derive(Clone, Debug)]
pub struct PathSamples {
    pub h: f64,
    pub t: Vec<f64>,
    pub f: Vec<V3>,
}

/// Continues `f₀` from `−δ` and records it at `t_start + i h`, `i = 0..count`.
pub fn sample_f0(sys: &KZSystem, t_start: f64, h: f64, count: usize, opts: &TransportOptions) -> Result<PathSamples> {
    let b0 = frobenius_basis(sys, Point::Zero, opts.order)?;
    let z0 = C64::new(-opts.delta, 0.0);
    let seed = b0.series[2].eval(z0, log_branch(z0, PI));
    let t: Vec<f64> = (0..count).map(|i| t_start + i as f64 * h).collect();
    let t_end = *t.last().unwrap();
    let span = t_end - opts.delta;
    let stops: Vec<f64> = t.iter().map(|&ti| (ti - opts.delta) / span).collect();
    let rhs = |z: C64, y: &[C64]| -> Vec<C64> {
        let v = sys.coefficient(z) * V3::new(y[0], y[1], y[2]);
        vec![v[0], v[1], v[2]]
    };
    let y0 = [seed[0], seed[1], seed[2]];
    let (inner, last) = if (stops[stops.len() - 1] - 1.0).abs() < 1e-15 {
        (&stops[..stops.len() - 1], true)
    } else {
        (&stops[..], false)
    };
    let sol = transport_segment(rhs, z0, C64::new(-t_end, 0.0), &y0, opts.tolerances(), inner)?;
    let mut f: Vec<V3> = sol.stops.iter().map(|y| V3::new(y[0], y[1], y[2])).collect();
    if last {
        f.push(V3::new(sol.y_end[0], sol.y_end[1], sol.y_end[2]));
    }
    Ok(PathSamples { h, t, f })
}

/// `(z−1)^{−k/κ}` on the negative axis, `arg(z−1) = π`.
pub fn reduction_factor(sys: &KZSystem, t: f64) -> C64 {
    let log = C64::new((1.0 + t).ln(), PI);
    (-(sys.k as f64) / sys.kappa * log).exp()
}

/// `R(f) = (f, e₀)(z−1)^{−k/κ}` at `z = −t`.
pub fn reduce_value(sys: &KZSystem, t: f64, f: &V3) -> C64 {
    f[2] * reduction_factor(sys, t)
}

/// Finite-difference weights at 0 for the given nodes, derivatives `0..=m`.
pub fn fd_weights(nodes: &[f64], m: usize) -> Vec<Vec<f64>> {
    let n = nodes.len();
    let mut c = vec![vec![0.0; m + 1]; n];
    let mut c1 = 1.0;
    let mut c4 = nodes[0];
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = nodes[i];
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c
}

#[derive(Clone, Debug, Serialize)]
pub struct ScalarReduction {
    #[serde(with = "crate::serde_c64::vec")]
    pub w: Vec<C64>,
    /// Relative DF residual at each interior grid point.
    pub residual: Vec<f64>,
    pub max_residual: f64,
    /// Relative error of `(u, v)` rebuilt from `w`, per interior point.
    pub reconstruction: Vec<f64>,
    pub max_reconstruction: f64,
    pub mid_reconstruction: f64,
}

/// Reduces samples of a solution to `w = R(f)`, checks the DF equation on `w`
/// with central differences and rebuilds `u, v` from `w`.
pub fn scalar_reduce(sys: &KZSystem, s: &PathSamples) -> Result<ScalarReduction> {
    let p = DFParams::fitting(sys.n, sys.k, sys.kappa)?;
    let co = df_coefficients(&p);
    let nodes: Vec<f64> = (-(HALF as i64)..=HALF as i64).map(|j| j as f64).collect();
    let wts = fd_weights(&nodes, 3);
    let g: Vec<V3> = s.f.iter().zip(&s.t).map(|(f, &t)| f * reduction_factor(sys, t)).collect();
    let w: Vec<C64> = g.iter().map(|x| x[2]).collect();
    let (nf, kf, kappa) = (sys.n as f64, sys.k as f64, sys.kappa);
    let mut residual = Vec::new();
    let mut reconstruction = Vec::new();
    for i in HALF..w.len().saturating_sub(HALF) {
        let mut d = [C64::new(0.0, 0.0); 4];
        for (o, row) in wts.iter().enumerate() {
            let v = w[i + o - HALF];
            for (m, dm) in d.iter_mut().enumerate() {
                *dm += v * row[m];
            }
        }
        // d/dz = −d/dt on z = −t
        let w0 = d[0];
        let w1 = -d[1] / s.h;
        let w2 = d[2] / (s.h * s.h);
        let w3 = -d[3] / (s.h * s.h * s.h);
        let z = C64::new(-s.t[i], 0.0);
        let (pp, qq, ss) = co.pqs(z);
        let terms = [w3, pp * w2, qq * w1, ss * w0];
        let scale: f64 = terms.iter().map(|x| x.norm()).sum();
        residual.push(terms.iter().sum::<C64>().norm() / scale);

        let z1 = z - 1.0;
        let v = kf * w0 + kappa * z1 * w1;
        let u = kf * (nf - 1.0) / z * (2.0 - (nf - kf + 2.0) / nf * z) * w0
            + kappa * z1 / z * (2.0 * (nf - 1.0) + (kappa - nf + 2.0 * kf + 1.0) * z) * w1
            + kappa * kappa * z1 * z1 * w2;
        let err = ((u - g[i][0]).norm_sqr() + (v - g[i][1]).norm_sqr()).sqrt() / g[i].norm();
        reconstruction.push(err);
    }
    let max_residual = residual.iter().cloned().fold(0.0, f64::max);
    let max_reconstruction = reconstruction.iter().cloned().fold(0.0, f64::max);
    let mid_reconstruction = reconstruction.get(reconstruction.len() / 2).cloned().unwrap_or(f64::NAN);
    Ok(ScalarReduction { w, residual, max_residual, reconstruction, max_reconstruction, mid_reconstruction })
}

/// `R` applied to the leading behaviour of the 0-basis at `z = −t`.
pub fn reduced_zero_basis(sys: &KZSystem, t: f64, order: usize) -> Result<[C64; 3]> {
    let b0 = frobenius_basis(sys, Point::Zero, order)?;
    let z = C64::new(-t, 0.0);
    let m: M3 = b0.eval(z, log_branch(z, PI));
    let r = reduction_factor(sys, t);
    Ok([m[(2, 0)] * r, m[(2, 1)] * r, m[(2, 2)] * r])
}
