//! Local series and numerical continuation for linear Fuchsian systems.

pub mod frobenius;
pub mod rk;

pub use frobenius::{check_nonresonant, companion, FrobeniusSeries};
pub use rk::{integrate, DenseSolution, Stats, Tolerances};

use crate::{Result, C64};

/// Continues `dy/dz = f(z, y)` along the straight segment `z0 → z1`,
/// returning values at `z0 + s(z1 − z0)` for each `s` in `stops` and at `z1`.
pub fn transport_segment<F>(
    f: F,
    z0: C64,
    z1: C64,
    y0: &[C64],
    tol: Tolerances,
    stops: &[f64],
) -> Result<DenseSolution>
where
    F: Fn(C64, &[C64]) -> Vec<C64>,
{
    let dz = z1 - z0;
    integrate(
        |s, y| {
            let mut d = f(z0 + dz * s, y);
            for v in d.iter_mut() {
                *v *= dz;
            }
            d
        },
        0.0,
        1.0,
        y0,
        tol,
        stops,
    )
}

/// Continues along a polygonal path, returning the endpoint value and total stats.
pub fn transport_polygon<F>(f: F, vertices: &[C64], y0: &[C64], tol: Tolerances) -> Result<(Vec<C64>, Stats)>
where
    F: Fn(C64, &[C64]) -> Vec<C64>,
{
    let mut y = y0.to_vec();
    let mut stats = Stats { min_step: f64::INFINITY, ..Default::default() };
    for w in vertices.windows(2) {
        let sol = transport_segment(&f, w[0], w[1], &y, tol, &[])?;
        stats.accepted += sol.stats.accepted;
        stats.rejected += sol.stats.rejected;
        stats.evaluations += sol.stats.evaluations;
        stats.min_step = stats.min_step.min(sol.stats.min_step);
        y = sol.y_end;
    }
    Ok((y, stats))
}
