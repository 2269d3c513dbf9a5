use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::weyl_lattice::{positive_roots, rho, weyl_group, weyl_orbit, AlcoveIndex, Weight};
use crate::{Error, Result, C64, Q};

/// `χ_ν(S_μ)` for every ν in the alcove, `S_μ = exp(2πi(μ+ρ)/κ)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharacterVector {
    pub mu: Weight,
    #[serde(with = "crate::serde_c64::vec")]
    pub values: Vec<C64>,
}

/// `A_x(exp 2πi t) = Σ_w det(w) e^{2πi⟨wx,t⟩}`, x in doubled coordinates,
/// t in ordinary coordinates.
pub fn alternating_sum(x: &Weight, t: &[f64]) -> C64 {
    let n = x.rank();
    let xs = x.coords();
    let group = weyl_group(n);
    let mut acc = C64::new(0.0, 0.0);
    for w in group.iter() {
        let mut phase = 0.0;
        for i in 0..n {
            phase += w.signs[i] as f64 * xs[i] * t[w.perm[i]];
        }
        acc += C64::from_polar(w.det() as f64, 2.0 * PI * phase);
    }
    acc
}

/// Character of a minimal module: the sum of `e^{2πi⟨ν,t⟩}` over its Weyl orbit.
pub fn minimal_character(lambda: &Weight, t: &[f64]) -> C64 {
    weyl_orbit(lambda)
        .iter()
        .map(|nu| {
            let p: f64 = nu.coords().iter().zip(t).map(|(a, b)| a * b).sum();
            C64::from_polar(1.0, 2.0 * PI * p)
        })
        .sum()
}

fn evaluation_point(mu: &Weight, kappa: f64) -> Vec<f64> {
    mu.add(&rho(mu.rank())).coords().iter().map(|c| c / kappa).collect()
}

/// Weyl character quotients `A_{ν+ρ}/A_ρ` at `S_μ`.
pub fn character_vector(mu: &Weight, alcove: &AlcoveIndex) -> Result<CharacterVector> {
    if !alcove.contains(mu) {
        return Err(Error::NotAdmissible(mu.coords2().to_vec(), alcove.level()));
    }
    let n = alcove.n();
    let t = evaluation_point(mu, alcove.kappa() as f64);
    let r = rho(n);
    let denom = alternating_sum(&r, &t);
    if denom.norm() < 1e-12 {
        return Err(Error::VanishingDenominator(mu.coords2().to_vec()));
    }
    let values = alcove
        .weights()
        .iter()
        .map(|nu| alternating_sum(&nu.add(&r), &t) / denom)
        .collect();
    Ok(CharacterVector { mu: mu.clone(), values })
}

/// `∏_{α>0} sin(π⟨λ+ρ,α⟩/κ) / sin(π⟨ρ,α⟩/κ)`.
pub fn quantum_dim(lambda: &Weight, n: usize, level: u32) -> Result<f64> {
    if lambda.rank() != n {
        return Err(Error::RankMismatch(lambda.rank(), n));
    }
    if !lambda.is_admissible(level) {
        return Err(Error::NotAdmissible(lambda.coords2().to_vec(), level));
    }
    let kappa = (level + 2 * (n as u32 - 1)) as f64;
    let r = rho(n);
    let shifted = lambda.add(&r);
    let mut d = 1.0;
    for alpha in positive_roots(n) {
        let num: f64 = pair(&shifted, &alpha);
        let den: f64 = pair(&r, &alpha);
        d *= (PI * num / kappa).sin() / (PI * den / kappa).sin();
    }
    Ok(d)
}

fn pair(a: &Weight, b: &Weight) -> f64 {
    a.coords2().iter().zip(b.coords2()).map(|(x, y)| (x * y) as f64).sum::<f64>() / 4.0
}

/// `1 + sin((2n−1)π/κ)/sin(π/κ)`.
pub fn vector_qdim_closed(n: usize, level: u32) -> f64 {
    let kappa = (level + 2 * (n as u32 - 1)) as f64;
    1.0 + ((2 * n - 1) as f64 * PI / kappa).sin() / (PI / kappa).sin()
}

/// Weyl dimension formula, exact.
pub fn weyl_dimension(lambda: &Weight) -> Result<u64> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coords2().to_vec()));
    }
    let n = lambda.rank();
    let r = rho(n);
    let shifted = lambda.add(&r);
    let mut d = Q::from(1);
    for alpha in positive_roots(n) {
        let num: i64 = shifted.coords2().iter().zip(alpha.coords2()).map(|(x, y)| x * y).sum();
        let den: i64 = r.coords2().iter().zip(alpha.coords2()).map(|(x, y)| x * y).sum();
        d *= Q::new(num, den);
    }
    Ok(d.to_integer() as u64)
}
