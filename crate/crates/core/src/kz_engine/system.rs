use nalgebra::{Matrix3, Vector3};
use serde::Serialize;

use crate::{Error, Result, C64, Q};

pub type QMat = [[Q; 3]; 3];
pub type M3 = Matrix3<C64>;
pub type V3 = Vector3<C64>;

fn q(x: i64) -> Q {
    Q::from(x)
}

fn qmul(a: &QMat, b: &QMat) -> QMat {
    let mut out = [[q(0); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

/// `det(xI − M)` as `[c₀, c₁, c₂]` with `x³ + c₂x² + c₁x + c₀`.
pub fn char_poly(m: &QMat) -> [Q; 3] {
    let tr = m[0][0] + m[1][1] + m[2][2];
    let minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] + m[1][1] * m[2][2]
        - m[1][2] * m[2][1];
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    [-det, minors, -tr]
}

/// `[c₀, c₁, c₂]` of `∏(x − r_i)`.
pub fn poly_from_roots(r: [Q; 3]) -> [Q; 3] {
    [-(r[0] * r[1] * r[2]), r[0] * r[1] + r[0] * r[2] + r[1] * r[2], -(r[0] + r[1] + r[2])]
}

fn to_c64(m: &QMat) -> M3 {
    M3::from_fn(|i, j| {
        let x = m[i][j];
        C64::new(*x.numer() as f64 / *x.denom() as f64, 0.0)
    })
}

/// The reduced KZ system `df/dz = κ⁻¹((Ω₁₂−δ₀)/z + Ω₂₃/(z−1)) f` on the
/// three-dimensional space of invariants for `V_{kθ₁} ⊗ V_□ ⊗ V_□ ⊗ V_{kθ₁}`.
#[derive(Clone, Debug, Serialize)]
pub struct KZSystem {
    pub n: usize,
    pub k: u32,
    #[serde(with = "crate::serde_c64")]
    pub kappa: C64,
    #[serde(skip)]
    pub omega12: QMat,
    #[serde(skip)]
    pub omega23: QMat,
    #[serde(skip)]
    pub omega13: QMat,
    pub delta0: i64,
}

/// `x x̃ = ((n−1)/n)(k² + 2k(n−1) + n(n−2))`.
pub fn xx(n: usize, k: u32) -> Q {
    let (n, k) = (n as i64, k as i64);
    Q::new(n - 1, n) * q(k * k + 2 * k * (n - 1) + n * (n - 2))
}

/// `y ỹ = (k/n)(k + 2(n−1))`.
pub fn yy(n: usize, k: u32) -> Q {
    let (n, k) = (n as i64, k as i64);
    Q::new(k, n) * q(k + 2 * (n - 1))
}

/// `Ω₁₂, Ω₂₃` on the invariants of `V_{θ₁+θ₂} ⊗ V_{θ₁+θ₂} ⊗ V_□ ⊗ V_□`, with
/// `x x̃ = (n+1)(n−2)²/n`, `y ỹ = 4(n−1)/n` and `x̃ = ỹ = 1`. The reduced scalar
/// equation is not of Dotsenko–Fateev type, so no connection data is attached.
pub fn exterior_square_residues(n: usize) -> Result<(QMat, QMat)> {
    if n < 3 {
        return Err(Error::RankTooSmall(n));
    }
    let ni = n as i64;
    let (z, one) = (q(0), q(1));
    let x = Q::new((ni + 1) * (ni - 2) * (ni - 2), ni);
    let y = Q::new(4 * (ni - 1), ni);
    let omega12 = [[one, z, z], [z, -one, z], [z, z, q(1 - 2 * ni)]];
    let omega23 = [[q(-ni), x, z], [one, q(1 - ni), y], [z, one, z]];
    Ok((omega12, omega23))
}

pub fn build_system(n: usize, k: u32, kappa: C64) -> Result<KZSystem> {
    if n < 3 {
        return Err(Error::RankTooSmall(n));
    }
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if kappa.norm() == 0.0 {
        return Err(Error::InvalidParameter("κ = 0".into()));
    }
    let ni = n as i64;
    let z = q(0);
    let one = q(1);
    let omega12 = [[one, z, z], [z, -one, z], [z, z, q(1 - 2 * ni)]];
    let omega23 = [[q(-ni), xx(n, k), z], [one, q(1 - ni), yy(n, k)], [z, one, z]];
    let f = [[one, z, z], [z, -one, z], [z, z, one]];
    let omega13 = qmul(&qmul(&f, &omega23), &f);
    let sys = KZSystem { n, k, kappa, omega12, omega23, omega13, delta0: 1 - 2 * ni };
    sys.verify()?;
    Ok(sys)
}

impl KZSystem {
    /// Physical value `κ = ℓ + 2(n−1)`.
    pub fn physical(n: usize, k: u32, level: u32) -> Result<Self> {
        build_system(n, k, C64::new((level as usize + 2 * (n - 1)) as f64, 0.0))
    }

    pub fn with_kappa(&self, kappa: C64) -> Result<Self> {
        build_system(self.n, self.k, kappa)
    }

    /// Spectra of `Ω₂₃` and `Ω₁₃`.
    pub fn spectrum23(&self) -> [Q; 3] {
        let (n, k) = (self.n as i64, self.k as i64);
        [q(k), q(-1), q(-2 * (n - 1) - k)]
    }

    pub fn spectrum12(&self) -> [Q; 3] {
        [q(1), q(-1), q(1 - 2 * self.n as i64)]
    }

    /// Exact checks of the spectra, the trace identity and the F-conjugation.
    pub fn verify(&self) -> Result<()> {
        let fail = |relation: &'static str| Err(Error::RelationViolated { relation, residual: f64::NAN });
        if char_poly(&self.omega12) != poly_from_roots(self.spectrum12()) {
            return fail("spectrum of Ω12");
        }
        if char_poly(&self.omega23) != poly_from_roots(self.spectrum23()) {
            return fail("spectrum of Ω23");
        }
        if char_poly(&self.omega13) != poly_from_roots(self.spectrum23()) {
            return fail("spectrum of Ω13");
        }
        for i in 0..3 {
            for j in 0..3 {
                let s = self.omega12[i][j] + self.omega23[i][j] + self.omega13[i][j];
                let want = if i == j { q(self.delta0) } else { q(0) };
                if s != want {
                    return fail("Ω12 + Ω23 + Ω13 = (1−2n)·Id");
                }
                let sign = if (i == 1) != (j == 1) { -1 } else { 1 };
                if self.omega13[i][j] != self.omega23[i][j] * q(sign) {
                    return fail("Ω13 = F Ω23 F⁻¹");
                }
            }
        }
        let mut e0 = [q(0); 3];
        for (i, row) in self.omega12.iter().enumerate() {
            e0[i] = row[2] - if i == 2 { q(self.delta0) } else { q(0) };
        }
        if e0.iter().any(|x| *x != q(0)) {
            return fail("(Ω12 − δ0) e0 = 0");
        }
        Ok(())
    }

    pub fn omega12_c(&self) -> M3 {
        to_c64(&self.omega12)
    }

    pub fn omega23_c(&self) -> M3 {
        to_c64(&self.omega23)
    }

    pub fn omega13_c(&self) -> M3 {
        to_c64(&self.omega13)
    }

    /// Residue at 0, `Ω₁₂ − δ₀`.
    pub fn residue0(&self) -> M3 {
        self.omega12_c() - M3::identity() * C64::new(self.delta0 as f64, 0.0)
    }

    /// Eigenvector of `Ω₁₃` for eigenvalue `λ`, third component 1.
    pub fn omega13_eigenvector(&self, lambda: Q) -> [Q; 3] {
        [lambda * lambda + q(self.n as i64 - 1) * lambda - yy(self.n, self.k), -lambda, q(1)]
    }

    /// `κ⁻¹((Ω₁₂−δ₀)/z + Ω₂₃/(z−1))`.
    pub fn coefficient(&self, z: C64) -> M3 {
        (self.residue0() / z + self.omega23_c() / (z - 1.0)) / self.kappa
    }
}

/// Right-hand side of the reduced KZ equation.
pub fn kz_rhs(sys: &KZSystem, z: C64, f: &V3) -> Result<V3> {
    if z.norm() < 1e-300 || (z - 1.0).norm() < 1e-300 {
        return Err(Error::Pole(format!("KZ coefficient at z = {z}")));
    }
    Ok(sys.coefficient(z) * f)
}
