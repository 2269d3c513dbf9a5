//! Braiding eigenvalues of `H_□ ⊠ H_□` and the three-strand Wenzl matrices.

use std::f64::consts::PI;

use nalgebra::Matrix3;
use serde::Serialize;

use crate::weyl_lattice::{casimir, Weight};
use crate::{Error, Result, C64, Q};

pub type M3 = Matrix3<C64>;

/// Tolerance for the algebraic relations checked at construction.
pub const RELATION_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug)]
pub struct BraidParams {
    pub n: usize,
    pub level: u32,
    pub kappa: f64,
    pub q: C64,
    pub r: C64,
}

impl BraidParams {
    pub fn new(n: usize, level: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::RankTooSmall(n));
        }
        if level < 1 {
            return Err(Error::LevelTooSmall(level));
        }
        let kappa = (level + 2 * (n as u32 - 1)) as f64;
        let q = C64::from_polar(1.0, -PI / kappa);
        let r = q.powi(2 * n as i32 - 1);
        Ok(BraidParams { n, level, kappa, q, r })
    }

    /// `z = 1 + (r−r⁻¹)/(q−q⁻¹)`.
    pub fn z(&self) -> C64 {
        let one = C64::new(1.0, 0.0);
        one + (self.r - self.r.inv()) / (self.q - self.q.inv())
    }
}

/// `Δ_λ = C_λ / 2κ`.
pub fn conformal_weight(lambda: &Weight, n: usize, level: u32) -> Result<Q> {
    if !lambda.is_admissible(level) {
        return Err(Error::NotAdmissible(lambda.coords2().to_vec(), level));
    }
    let kappa = (level + 2 * (n as u32 - 1)) as i64;
    Ok(casimir(lambda)? / Q::from(2 * kappa))
}

/// `(β_sym, β_alt, β_0) = (q, −q⁻¹, r⁻¹)`.
pub fn braiding_eigenvalues(p: &BraidParams) -> Result<(C64, C64, C64)> {
    if p.level < 2 {
        return Err(Error::DecompositionUnavailable(p.level));
    }
    Ok((p.q, -p.q.inv(), p.r.inv()))
}

/// `ε·e^{−iπβ}` with `β = (C₄−C₂−C₃)/2κ`.
pub fn abelian_phase(c2: Q, c3: Q, c4: Q, sign: i8, kappa: f64) -> C64 {
    let beta = c4 - c2 - c3;
    let beta = *beta.numer() as f64 / *beta.denom() as f64 / (2.0 * kappa);
    C64::from_polar(sign as f64, -PI * beta)
}

/// The Wenzl matrices in the basis `c₂, g₁c₂, c₁c₂`.
#[derive(Clone, Debug)]
pub struct WenzlRep {
    pub g1: M3,
    pub g2: M3,
    pub c1: M3,
    pub c2: M3,
    pub z: C64,
    pub tau: C64,
}

#[derive(Clone, Debug, Serialize)]
pub struct WenzlResiduals {
    pub braid: f64,
    pub cubic: f64,
    pub jones: f64,
    pub ccc: f64,
    pub idempotent: f64,
    pub spectral: f64,
    pub quadratic: f64,
}

impl WenzlRep {
    pub fn e1(&self) -> M3 {
        self.c1 / self.z
    }

    pub fn e2(&self) -> M3 {
        self.c2 / self.z
    }

    pub fn residuals(&self, p: &BraidParams) -> WenzlResiduals {
        let id = M3::identity();
        let (q, r) = (p.q, p.r);
        let d = q - q.inv();
        let (g1, g2) = (self.g1, self.g2);
        let (e1, e2) = (self.e1(), self.e2());
        let braid = (g1 * g2 * g1 - g2 * g1 * g2).norm();
        let cubic_of = |g: &M3| ((g - id * r.inv()) * (g + id * q.inv()) * (g - id * q)).norm();
        let cubic = cubic_of(&g1).max(cubic_of(&g2));
        let jones = (e1 * e2 * e1 - e1 * self.tau).norm();
        let ccc = (self.c1 * self.c2 * self.c1 - self.c1).norm();
        let idempotent = (e1 * e1 - e1).norm().max((e2 * e2 - e2).norm());
        let denom = (r.inv() - q) * (r.inv() + q.inv());
        let proj = |g: &M3| (g - id * q) * (g + id * q.inv()) / denom;
        let spectral = (proj(&g1) - e1).norm().max((proj(&g2) - e2).norm());
        let quad = |g: &M3, e: &M3| (g * g - (id + g * d - e * (self.z * r.inv() * d))).norm();
        let quadratic = quad(&g1, &e1).max(quad(&g2, &e2));
        WenzlResiduals { braid, cubic, jones, ccc, idempotent, spectral, quadratic }
    }
}

/// Builds the Wenzl representation and verifies its defining relations.
pub fn wenzl_rep(p: &BraidParams) -> Result<WenzlRep> {
    let (q, r) = (p.q, p.r);
    let d = q - q.inv();
    if d.norm() < 1e-14 {
        return Err(Error::InvalidParameter("q − q⁻¹ vanishes".into()));
    }
    let o = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let ri = r.inv();
    let z = p.z();
    let g1 = M3::new(o, one, o, one, d, o, o, -ri * d, ri);
    let g2 = M3::new(ri, o, -d, o, o, one, o, one, d);
    let c1 = M3::new(o, o, o, o, o, o, one, ri, z);
    let c2 = M3::new(z, r, one, o, o, o, o, o, o);
    let rep = WenzlRep { g1, g2, c1, c2, z, tau: (z * z).inv() };
    let res = rep.residuals(p);
    let checks = [
        ("g1 g2 g1 = g2 g1 g2", res.braid),
        ("(g - r^-1)(g + q^-1)(g - q) = 0", res.cubic),
        ("e1 e2 e1 = tau e1", res.jones),
        ("c1 c2 c1 = c1", res.ccc),
        ("e^2 = e", res.idempotent),
        ("spectral projection", res.spectral),
        ("quadratic relation", res.quadratic),
    ];
    for (relation, residual) in checks {
        if residual.is_nan() || residual > RELATION_TOL {
            return Err(Error::RelationViolated { relation, residual });
        }
    }
    Ok(rep)
}

/// `d(H_□) = z`, real for physical κ.
pub fn qdim_from_jones(p: &BraidParams) -> Result<f64> {
    if p.level < 2 {
        return Err(Error::DecompositionUnavailable(p.level));
    }
    Ok(p.z().re)
}

/// `σ_j` for the summands of `V_□ ⊗ V_□`: symmetric `+1`, alternating `−1`, trivial `+1`.
pub fn symmetry_sign(j: &Weight) -> i8 {
    if *j == Weight::sym_plus_theta2(j.rank(), 1) { -1 } else { 1 }
}
