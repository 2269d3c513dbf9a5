use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use super::system::{KZSystem, M3};
use crate::fuchsian::{check_nonresonant, FrobeniusSeries};
use crate::{Result, C64, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Point {
    Zero,
    Infinity,
}

/// Three Frobenius solutions at 0 (variable `z`) or ∞ (variable `w = 1/z`).
#[derive(Clone, Debug, Serialize)]
pub struct LocalBasis {
    pub point: Point,
    /// Exponents of the vector solutions in the local variable.
    #[serde(with = "crate::serde_c64::vec")]
    pub exponents: Vec<C64>,
    /// Exponents of the scalar reductions `R(·)` in the local variable.
    #[serde(with = "crate::serde_c64::vec")]
    pub reduced_exponents: Vec<C64>,
    #[serde(skip)]
    pub series: Vec<FrobeniusSeries>,
    pub radius: f64,
}

impl LocalBasis {
    /// Values of the three solutions at the local coordinate `x`, as columns.
    pub fn eval(&self, x: C64, log_x: C64) -> M3 {
        let mut m = M3::zeros();
        for (j, s) in self.series.iter().enumerate() {
            let v = s.eval(x, log_x);
            for i in 0..3 {
                m[(i, j)] = v[i];
            }
        }
        m
    }
}

fn dm(m: &M3) -> DMatrix<C64> {
    DMatrix::from_fn(3, 3, |i, j| m[(i, j)])
}

fn qf(x: Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// Frobenius bases. At 0 the solutions are ordered by the eigenvalues
/// `(1, −1, 1−2n)` of `Ω₁₂`, so the last one is `f₀`; at ∞ by the eigenvalues
/// `(k, −1, −2(n−1)−k)` of `Ω₁₃`, i.e. `g_{(k+1)θ₁}, g_{kθ₁+θ₂}, g_{(k−1)θ₁}`.
pub fn frobenius_basis(sys: &KZSystem, point: Point, order: usize) -> Result<LocalBasis> {
    let kappa = sys.kappa;
    let tail = dm(&(-sys.omega23_c() / kappa));
    let shift = C64::new(sys.k as f64, 0.0) / kappa;
    let (a0, leads, exps, reduced): (M3, Vec<[f64; 3]>, Vec<C64>, Vec<C64>) = match point {
        Point::Zero => {
            let a0 = sys.residue0() / kappa;
            let d = sys.spectrum12();
            let exps: Vec<C64> = d.iter().map(|&e| C64::new(qf(e - Q::from(sys.delta0)), 0.0) / kappa).collect();
            let leads = vec![[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
            (a0, leads, exps.clone(), exps)
        }
        Point::Infinity => {
            let a0 = sys.omega13_c() / kappa;
            let spec = sys.spectrum23();
            let leads = spec.iter().map(|&l| sys.omega13_eigenvector(l).map(qf)).collect();
            let exps: Vec<C64> = spec.iter().map(|&l| C64::new(qf(l), 0.0) / kappa).collect();
            let reduced = exps.iter().map(|&s| s + shift).collect();
            (a0, leads, exps, reduced)
        }
    };
    let name = match point {
        Point::Zero => "zero",
        Point::Infinity => "infinity",
    };
    check_nonresonant(&exps, name, 1e-9)?;
    let a = vec![dm(&a0), tail];
    let series = exps
        .iter()
        .zip(&leads)
        .map(|(&s, v)| {
            let lead = DVector::from_iterator(3, v.iter().map(|&x| C64::new(x, 0.0)));
            FrobeniusSeries::new(&a, s, lead, order)
        })
        .collect::<Result<Vec<_>>>()?;
    let radius = series.iter().map(|s| s.validated_radius()).fold(0.5, f64::min);
    Ok(LocalBasis { point, exponents: exps, reduced_exponents: reduced, series, radius })
}
