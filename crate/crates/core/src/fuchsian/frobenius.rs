use nalgebra::{DMatrix, DVector};

use crate::{Error, Result, C64};

/// Tail threshold for the validated radius.
pub const TAIL_TOL: f64 = 1e-16;

/// A convergent solution `x^s Σ_j y_j x^j` of `θY = A(x)Y` with `A(x) = Σ_m A_m x^m`.
#[derive(Clone, Debug)]
pub struct FrobeniusSeries {
    pub exponent: C64,
    pub coeffs: Vec<DVector<C64>>,
}

impl FrobeniusSeries {
    /// Solves `(s + j − A₀) y_j = Σ_{m≥1} A_m y_{j−m}` up to `order` (inclusive).
    /// Terms past the end of `a` repeat its last entry; a single-entry `a` means `A(x) = A₀`.
    pub fn new(a: &[DMatrix<C64>], exponent: C64, leading: DVector<C64>, order: usize) -> Result<Self> {
        let dim = leading.len();
        let a_at = |m: usize| -> &DMatrix<C64> { &a[m.min(a.len() - 1)] };
        let lead_res = (a_at(0) * &leading - &leading * exponent).norm();
        if lead_res > 1e-9 * (1.0 + leading.norm() * (1.0 + exponent.norm())) {
            return Err(Error::InvalidParameter("leading vector is not an eigenvector of the residue".into()));
        }
        let mut coeffs = vec![leading];
        for j in 1..=order {
            let mut rhs = DVector::<C64>::zeros(dim);
            for m in 1..=j {
                if m >= a.len() && a.len() == 1 {
                    break;
                }
                rhs += a_at(m) * &coeffs[j - m];
            }
            let shift = exponent + C64::new(j as f64, 0.0);
            let lhs = DMatrix::<C64>::identity(dim, dim) * shift - a_at(0);
            let y = lhs.lu().solve(&rhs).ok_or(Error::Resonant { point: "series recurrence" })?;
            coeffs.push(y);
        }
        Ok(FrobeniusSeries { exponent, coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Largest `r ≤ 0.5` with `|y_M| r^M < TAIL_TOL · |y_0|`.
    pub fn validated_radius(&self) -> f64 {
        let m = self.order();
        let tail = self.coeffs[m].norm() / self.coeffs[0].norm();
        if tail == 0.0 || m == 0 {
            return 0.5;
        }
        (TAIL_TOL / tail).powf(1.0 / m as f64).min(0.5)
    }

    /// Value at `x`, with `log_x` fixing the branch of `x^s`.
    pub fn eval(&self, x: C64, log_x: C64) -> DVector<C64> {
        self.eval_theta(x, log_x, 0)
    }

    /// `θ^p Y` at `x`, `θ = x d/dx`.
    pub fn eval_theta(&self, x: C64, log_x: C64, p: u32) -> DVector<C64> {
        let dim = self.coeffs[0].len();
        let mut acc = DVector::<C64>::zeros(dim);
        let mut xp = C64::new(1.0, 0.0);
        for (j, y) in self.coeffs.iter().enumerate() {
            let w = (self.exponent + j as f64).powu(p) * xp;
            acc += y * w;
            xp *= x;
        }
        acc * (self.exponent * log_x).exp()
    }
}

/// Errors if two exponents differ by a nonzero integer (within `tol`).
pub fn check_nonresonant(exponents: &[C64], point: &'static str, tol: f64) -> Result<()> {
    for i in 0..exponents.len() {
        for j in 0..exponents.len() {
            if i == j {
                continue;
            }
            let d = exponents[i] - exponents[j];
            let r = d.re.round();
            if r >= 1.0 && (d - C64::new(r, 0.0)).norm() < tol {
                return Err(Error::Resonant { point });
            }
        }
    }
    Ok(())
}

/// The companion form of `θ³f + p₂θ²f + p₁θf + p₀f = 0` acting on `(f, θf, θ²f)`.
pub fn companion(p2: C64, p1: C64, p0: C64) -> DMatrix<C64> {
    let o = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    DMatrix::from_row_slice(3, 3, &[o, one, o, o, o, one, -p0, -p1, -p2])
}
