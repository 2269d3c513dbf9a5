use std::f64::consts::PI;

use serde::Serialize;

use super::system::{KZSystem, M3};
use super::transport::continue_columns;
use crate::fuchsian::Tolerances;
use crate::{Result, C64, Q};

#[derive(Clone, Debug, Serialize)]
pub struct MonodromyReport {
    #[serde(with = "crate::serde_c64")]
    pub base: C64,
    /// Max distance between computed and predicted eigenvalues, per loop.
    pub eigen_residual_zero: f64,
    pub eigen_residual_one: f64,
    pub eigen_residual_infinity: f64,
    /// `‖T_∞ T₁ T₀ − I‖`, `T_∞` taken clockwise.
    pub product_residual: f64,
    #[serde(skip)]
    pub t0: M3,
    #[serde(skip)]
    pub t1: M3,
    #[serde(skip)]
    pub tinf: M3,
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn eigenvalues(m: &M3) -> [C64; 3] {
    let t = m.schur().unpack().1;
    [t[(0, 0)], t[(1, 1)], t[(2, 2)]]
}

/// Greedy matching distance between two 3-element multisets.
fn match_distance(got: [C64; 3], want: [C64; 3]) -> f64 {
    let mut used = [false; 3];
    let mut worst: f64 = 0.0;
    for w in want {
        let (j, d) = (0..3)
            .filter(|&j| !used[j])
            .map(|j| (j, (got[j] - w).norm()))
            .fold((usize::MAX, f64::INFINITY), |a, b| if b.1 < a.1 { b } else { a });
        used[j] = true;
        worst = worst.max(d);
    }
    worst
}

fn predicted(spec: [Q; 3], shift: Q, kappa: C64) -> [C64; 3] {
    spec.map(|e| {
        let x = e - shift;
        let s = C64::new(*x.numer() as f64 / *x.denom() as f64, 0.0) / kappa;
        (2.0 * PI * C64::i() * s).exp()
    })
}

/// Monodromy matrices of the fundamental solution normalized to the identity
/// at `b = ½ + ½i`, around 0 and 1 counterclockwise and around ∞ along a large
/// clockwise loop.
pub fn monodromy(sys: &KZSystem, tol: Tolerances) -> Result<MonodromyReport> {
    let b = c(0.5, 0.5);
    let id = M3::identity();
    let loop0 = [b, c(-0.5, 0.5), c(-0.5, -0.5), c(0.5, -0.5), b];
    let loop1 = [b, c(0.5, -0.5), c(1.5, -0.5), c(1.5, 0.5), b];
    let loopinf = [b, c(0.5, 2.0), c(3.0, 2.0), c(3.0, -2.0), c(-2.0, -2.0), c(-2.0, 2.0), c(0.5, 2.0), b];
    let (t0, _) = continue_columns(sys, &loop0, &id, tol)?;
    let (t1, _) = continue_columns(sys, &loop1, &id, tol)?;
    let (tinf, _) = continue_columns(sys, &loopinf, &id, tol)?;
    let zero = Q::from(0);
    let e0 = predicted(sys.spectrum12(), Q::from(sys.delta0), sys.kappa);
    let e1 = predicted(sys.spectrum23(), zero, sys.kappa);
    let einf = predicted(sys.spectrum23(), zero, sys.kappa);
    let prod = tinf * t1 * t0 - id;
    Ok(MonodromyReport {
        base: b,
        eigen_residual_zero: match_distance(eigenvalues(&t0), e0),
        eigen_residual_one: match_distance(eigenvalues(&t1), e1),
        eigen_residual_infinity: match_distance(eigenvalues(&tinf), einf),
        product_residual: prod.iter().map(|x| x.norm()).fold(0.0, f64::max),
        t0,
        t1,
        tinf,
    })
}
