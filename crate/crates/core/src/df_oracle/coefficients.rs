use serde::Serialize;

use crate::{Error, Result, C64};

/// Parameters `(a, b, c, g)` of the Dotsenko–Fateev equation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DFParams {
    #[serde(with = "crate::serde_c64")]
    pub a: C64,
    #[serde(with = "crate::serde_c64")]
    pub b: C64,
    #[serde(with = "crate::serde_c64")]
    pub c: C64,
    #[serde(with = "crate::serde_c64")]
    pub g: C64,
}

impl DFParams {
    pub fn new(a: C64, b: C64, c: C64, g: C64) -> Self {
        DFParams { a, b, c, g }
    }

    /// The parameters attached to the reduced KZ system with data `(n, k, κ)`.
    pub fn fitting(n: usize, k: u32, kappa: C64) -> Result<Self> {
        if kappa.norm() == 0.0 {
            return Err(Error::InvalidParameter("κ = 0".into()));
        }
        let (n, k) = (n as f64, k as f64);
        Ok(DFParams {
            a: (2.0 * (n - 1.0) + k) / kappa,
            b: -(kappa + 1.0) / kappa,
            c: -k / kappa,
            g: -2.0 * (n - 2.0) / kappa,
        })
    }

    /// The absolute-convergence range of the contour integrals.
    pub fn good_range(&self) -> bool {
        let (a, b, c, g) = (self.a.re, self.b.re, self.c.re, self.g.re);
        a > -1.0
            && b > -1.0
            && c > -1.0
            && g > -1.0
            && 2.0 * a + g > -2.0
            && 2.0 * b + g > -2.0
            && 2.0 * c + g > -2.0
            && a + b + c + g < -1.0
            && 2.0 * (a + b + c) + g < -2.0
    }

    /// Exponents at 0: `0, 1+a+c, 2(1+a+c+g/2)`.
    pub fn exponents_zero(&self) -> [C64; 3] {
        let (a, c, g) = (self.a, self.c, self.g);
        [C64::new(0.0, 0.0), 1.0 + a + c, 2.0 * (1.0 + a + c + g / 2.0)]
    }

    /// Exponents at ∞ in the variable `1/z`.
    pub fn exponents_infinity(&self) -> [C64; 3] {
        let (a, b, c, g) = (self.a, self.b, self.c, self.g);
        [-2.0 * c, -(1.0 + a + b + 2.0 * c + g), -2.0 * (1.0 + a + b + c + g / 2.0)]
    }
}

/// `Re κ < 0` and `|κ + m/2|² > m²/4` with `m = 2(n−1)+k`.
pub fn kappa_range(n: usize, k: u32, kappa: C64) -> bool {
    let m = 2.0 * (n as f64 - 1.0) + k as f64;
    kappa.re < 0.0 && (kappa + m / 2.0).norm_sqr() > m * m / 4.0
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DFCoefficients {
    #[serde(with = "crate::serde_c64")]
    pub k1: C64,
    #[serde(with = "crate::serde_c64")]
    pub k2: C64,
    #[serde(with = "crate::serde_c64")]
    pub l1: C64,
    #[serde(with = "crate::serde_c64")]
    pub l2: C64,
    #[serde(with = "crate::serde_c64")]
    pub l3: C64,
    #[serde(with = "crate::serde_c64")]
    pub m1: C64,
    #[serde(with = "crate::serde_c64")]
    pub m2: C64,
}

impl DFCoefficients {
    pub fn as_array(&self) -> [C64; 7] {
        [self.k1, self.k2, self.l1, self.l2, self.l3, self.m1, self.m2]
    }

    /// `(P, Q, S)` in `f''' + P f'' + Q f' + S f = 0`.
    pub fn pqs(&self, z: C64) -> (C64, C64, C64) {
        let z1 = z - 1.0;
        let d = z * z * z1 * z1;
        let p = (self.k1 * z + self.k2 * z1) / (z * z1);
        let q = (self.l1 * z * z + self.l2 * z1 * z1 + self.l3 * z * z1) / d;
        let s = (self.m1 * z + self.m2 * z1) / d;
        (p, q, s)
    }
}

pub fn df_coefficients(p: &DFParams) -> DFCoefficients {
    let (a, b, c, g) = (p.a, p.b, p.c, p.g);
    let one = C64::new(1.0, 0.0);
    let s_bc = 2.0 * b + 2.0 * c + g + one;
    let s_ac = 2.0 * a + 2.0 * c + g + one;
    let s_all = 2.0 * a + 2.0 * b + 2.0 * c + g + 2.0;
    DFCoefficients {
        k1: -(g + 3.0 * b + 3.0 * c),
        k2: -(g + 3.0 * a + 3.0 * c),
        l1: (b + c) * s_bc,
        l2: (a + c) * s_ac,
        l3: (b + c) * s_ac + (a + c) * s_bc + (c - one) * (a + b + c) + (3.0 * c + g) * (a + b + c + g + one),
        m1: -c * s_bc * s_all,
        m2: -c * s_ac * s_all,
    }
}

/// The coefficients obtained by eliminating `u, v` from the reduced KZ system,
/// written directly in terms of `(n, k, κ)`.
pub fn df_coefficients_kz(n: usize, k: u32, kappa: C64) -> DFCoefficients {
    let (n, k) = (n as f64, k as f64);
    let kp = kappa;
    let k2 = kp * kp;
    let k3 = k2 * kp;
    DFCoefficients {
        k1: (2.0 * n + 3.0 * (k + kp) - 1.0) / kp,
        k2: -2.0 * (2.0 * n - 1.0) / kp,
        l1: (1.0 + k + kp) * (kp + 2.0 * (n + k - 1.0)) / k2,
        l2: 2.0 * (n - 1.0) * (2.0 * n + kp) / k2,
        l3: -2.0 * (2.0 * n * n + 4.0 * k * n + 3.0 * n * kp - 2.0 * (n + k + kp)) / k2,
        m1: -2.0 * k * (n - 1.0) * (kp + 2.0 * (n + k - 1.0)) / k3,
        m2: 2.0 * k * (n - 1.0) * (2.0 * n + kp) / k3,
    }
}
