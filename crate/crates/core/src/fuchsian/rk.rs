//! Dormand–Prince 5(4) with dense output, for complex states along a real
//! parameter.

use crate::{Error, Result, C64};

#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    pub rtol: f64,
    pub atol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { rtol: 1e-11, atol: 1e-14 }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Stats {
    pub accepted: usize,
    pub rejected: usize,
    pub evaluations: usize,
    pub min_step: f64,
}

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;
const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

/// One accepted step with its continuous extension.
#[derive(Clone, Debug)]
struct DenseStep {
    t0: f64,
    h: f64,
    r: [Vec<C64>; 5],
}

impl DenseStep {
    fn eval(&self, t: f64) -> Vec<C64> {
        let th = (t - self.t0) / self.h;
        let th1 = 1.0 - th;
        (0..self.r[0].len())
            .map(|i| {
                self.r[0][i]
                    + (self.r[1][i] + (self.r[2][i] + (self.r[3][i] + self.r[4][i] * th1) * th) * th1) * th
            })
            .collect()
    }
}

/// Accepted steps of an integration, evaluable anywhere in the covered range.
#[derive(Clone, Debug)]
pub struct DenseSolution {
    steps: Vec<DenseStep>,
    pub t_end: f64,
    pub y_end: Vec<C64>,
    pub stops: Vec<Vec<C64>>,
    pub stats: Stats,
}

impl DenseSolution {
    pub fn eval(&self, t: f64) -> Vec<C64> {
        let forward = self.steps.first().map(|s| s.h > 0.0).unwrap_or(true);
        let k = self.steps.partition_point(|s| if forward { s.t0 + s.h < t } else { s.t0 + s.h > t });
        let k = k.min(self.steps.len() - 1);
        self.steps[k].eval(t)
    }
}

fn axpy(y: &[C64], h: f64, terms: &[(f64, &Vec<C64>)]) -> Vec<C64> {
    let mut out = y.to_vec();
    for (c, k) in terms {
        let f = h * c;
        for (o, ki) in out.iter_mut().zip(k.iter()) {
            *o += ki * f;
        }
    }
    out
}

/// Integrates `y' = f(t, y)` from `t0` to `t1`. The integrator lands exactly on
/// every value in `stops` (which must lie between `t0` and `t1`, ordered).
pub fn integrate<F>(f: F, t0: f64, t1: f64, y0: &[C64], tol: Tolerances, stops: &[f64]) -> Result<DenseSolution>
where
    F: Fn(f64, &[C64]) -> Vec<C64>,
{
    let dir = (t1 - t0).signum();
    let span = (t1 - t0).abs();
    let mut t = t0;
    let mut y = y0.to_vec();
    let mut stats = Stats { min_step: f64::INFINITY, ..Default::default() };
    let mut k1 = f(t, &y);
    stats.evaluations += 1;
    let mut h = dir * initial_step(&y, &k1, tol, span);
    let mut steps = Vec::new();
    let mut stop_vals = Vec::with_capacity(stops.len());
    let mut next_stop = 0;
    let mut targets: Vec<f64> = stops.to_vec();
    targets.push(t1);

    while (t1 - t) * dir > 0.0 {
        let target = targets[next_stop.min(targets.len() - 1)];
        let mut hit = false;
        if (t + h - target) * dir >= 0.0 {
            h = target - t;
            hit = true;
        }
        if h.abs() < 1e-14 * span.max(1.0) {
            return Err(Error::Integration { t, reason: "step size underflow" });
        }
        let k2 = f(t + C2 * h, &axpy(&y, h, &[(A21, &k1)]));
        let k3 = f(t + C3 * h, &axpy(&y, h, &[(A31, &k1), (A32, &k2)]));
        let k4 = f(t + C4 * h, &axpy(&y, h, &[(A41, &k1), (A42, &k2), (A43, &k3)]));
        let k5 = f(t + C5 * h, &axpy(&y, h, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]));
        let k6 = f(t + h, &axpy(&y, h, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]));
        let y_new = axpy(&y, h, &[(B1, &k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)]);
        let k7 = f(t + h, &y_new);
        stats.evaluations += 6;

        let mut err = 0.0;
        for i in 0..y.len() {
            let e = h
                * (k1[i] * E1 + k3[i] * E3 + k4[i] * E4 + k5[i] * E5 + k6[i] * E6 + k7[i] * E7);
            let sc = tol.atol + tol.rtol * y[i].norm().max(y_new[i].norm());
            err += (e.norm() / sc).powi(2);
        }
        let err = (err / y.len() as f64).sqrt();
        if !err.is_finite() {
            return Err(Error::Integration { t, reason: "non-finite error estimate" });
        }

        if err <= 1.0 {
            let r1: Vec<C64> = y_new.iter().zip(&y).map(|(a, b)| a - b).collect();
            let r2: Vec<C64> = (0..y.len()).map(|i| k1[i] * h - r1[i]).collect();
            let r3: Vec<C64> = (0..y.len()).map(|i| r1[i] - k7[i] * h - r2[i]).collect();
            let r4: Vec<C64> = (0..y.len())
                .map(|i| (k1[i] * D1 + k3[i] * D3 + k4[i] * D4 + k5[i] * D5 + k6[i] * D6 + k7[i] * D7) * h)
                .collect();
            steps.push(DenseStep { t0: t, h, r: [y.clone(), r1, r2, r3, r4] });
            stats.accepted += 1;
            stats.min_step = stats.min_step.min(h.abs());
            t = if hit { target } else { t + h };
            y = y_new;
            k1 = k7;
            if hit && next_stop < stops.len() {
                stop_vals.push(y.clone());
                next_stop += 1;
            }
        } else {
            stats.rejected += 1;
        }
        let fac = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
        h *= fac;
    }
    Ok(DenseSolution { steps, t_end: t, y_end: y, stops: stop_vals, stats })
}

fn initial_step(y: &[C64], f: &[C64], tol: Tolerances, span: f64) -> f64 {
    let d0 = y.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let d1 = f.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let h = if d0 < 1e-10 || d1 < 1e-10 { 1e-4 } else { 0.01 * d0 / d1 };
    (h * tol.rtol.powf(0.2) * 10.0).min(span).max(1e-8 * span)
}
