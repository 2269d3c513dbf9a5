use std::f64::consts::PI;

use crate::{Error, Result, C64};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn near_pole(z: C64) -> bool {
    z.re < 0.5 && (z - C64::new(z.re.round(), 0.0)).norm() < 1e-13
}

fn lanczos(z: C64) -> C64 {
    let z = z - 1.0;
    let mut x = C64::new(LANCZOS[0], 0.0);
    for (i, p) in LANCZOS.iter().enumerate().skip(1) {
        x += *p / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    ((2.0 * PI).sqrt() * x) * ((z + 0.5) * t.ln() - t).exp()
}

/// Γ(z) on the complex plane.
pub fn complex_gamma(z: C64) -> Result<C64> {
    if near_pole(z) {
        return Err(Error::Pole(format!("Γ({z})")));
    }
    if z.re < 0.5 {
        Ok(PI / ((PI * z).sin() * lanczos(1.0 - z)))
    } else {
        Ok(lanczos(z))
    }
}

/// 1/Γ(z), an entire function.
pub fn reciprocal_gamma(z: C64) -> C64 {
    if z.re < 0.5 {
        (PI * z).sin() * lanczos(1.0 - z) / PI
    } else {
        1.0 / lanczos(z)
    }
}

/// Euler Beta `Γ(x)Γ(y)/Γ(x+y)`.
pub fn beta(x: C64, y: C64) -> Result<C64> {
    Ok(complex_gamma(x)? * complex_gamma(y)? * reciprocal_gamma(x + y))
}
