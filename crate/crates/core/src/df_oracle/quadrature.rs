use std::f64::consts::PI;

use serde::Serialize;

use crate::{Error, Result, C64};

const T_MAX: f64 = 6.0;
const MAX_LEVEL: u32 = 8;

/// Tanh–sinh node on `[0, 1]`: `(x, 1 − x, weight / h)`.
#[derive(Clone, Copy, Debug)]
struct Node {
    x: f64,
    xc: f64,
    w: f64,
}

fn nodes(h: f64) -> Vec<Node> {
    let m = (T_MAX / h).ceil() as i64;
    (-m..=m)
        .filter_map(|j| {
            let t = j as f64 * h;
            let u = 0.5 * PI * t.sinh();
            let x = 1.0 / (1.0 + (-2.0 * u).exp());
            let xc = 1.0 / (1.0 + (2.0 * u).exp());
            let ch = u.cosh();
            let w = 0.25 * PI * t.cosh() / (ch * ch);
            (x > 0.0 && xc > 0.0 && w > 0.0 && w.is_finite()).then_some(Node { x, xc, w })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct QuadratureResult {
    #[serde(with = "crate::serde_c64")]
    pub value: C64,
    pub error_estimate: f64,
    pub level: u32,
}

fn powc(x: f64, e: C64) -> C64 {
    (e * x.ln()).exp()
}

/// `∫₀¹∫₀¹ t₁^α(1−t₁)^β t₂^α(1−t₂)^β |t₁−t₂|^γ` by two-dimensional tanh–sinh
/// on the triangle `t₂ < t₁` with `t₂ = t₁ s`.
pub fn quadrature_oracle_j2(alpha: C64, beta: C64, gamma: C64) -> Result<QuadratureResult> {
    let in_range = alpha.re > -1.0
        && beta.re > -1.0
        && gamma.re > -1.0
        && (2.0 * alpha + gamma).re > -2.0
        && (2.0 * beta + gamma).re > -2.0;
    if !in_range {
        return Err(Error::InvalidParameter("integral does not converge absolutely".into()));
    }
    let e_t1 = 2.0 * alpha + gamma + 1.0;
    let eval = |h: f64| -> C64 {
        let nd = nodes(h);
        let fixed: Vec<C64> = nd.iter().map(|q| powc(q.x, alpha) * powc(q.xc, gamma) * q.w).collect();
        let mut acc = C64::new(0.0, 0.0);
        for p in &nd {
            let outer = powc(p.x, e_t1) * powc(p.xc, beta);
            let mut inner = C64::new(0.0, 0.0);
            for (q, f) in nd.iter().zip(&fixed) {
                let one_minus = p.xc + p.x * q.xc;
                inner += powc(one_minus, beta) * f;
            }
            acc += outer * inner * p.w;
        }
        acc * (2.0 * h * h)
    };
    let mut prev = eval(0.5);
    for level in 2..=MAX_LEVEL {
        let h = 0.5f64.powi(level as i32);
        let cur = eval(h);
        let err = (cur - prev).norm();
        if err < 1e-12 * cur.norm() {
            return Ok(QuadratureResult { value: cur, error_estimate: err, level });
        }
        prev = cur;
        if level == MAX_LEVEL {
            if err < 1e-8 * cur.norm() {
                return Ok(QuadratureResult { value: cur, error_estimate: err, level });
            }
            return Err(Error::Quadrature { estimate: err });
        }
    }
    unreachable!()
}
