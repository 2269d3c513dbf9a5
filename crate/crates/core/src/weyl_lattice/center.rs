use serde::{Deserialize, Serialize};

use super::Weight;
use crate::{Error, Result};

/// An element of Z(Spin(2n)), named by its fundamental coweight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CenterElement {
    Identity,
    V,
    SPlus,
    SMinus,
}

impl CenterElement {
    pub const ALL: [CenterElement; 4] =
        [CenterElement::Identity, CenterElement::V, CenterElement::SPlus, CenterElement::SMinus];

    /// Group law: ℤ₂×ℤ₂ for n even, ℤ₄ generated by `z_{s±}` for n odd.
    pub fn mul(self, other: CenterElement, n: usize) -> CenterElement {
        use CenterElement::*;
        match (self, other) {
            (Identity, x) | (x, Identity) => x,
            (V, V) => Identity,
            (V, SPlus) | (SPlus, V) => SMinus,
            (V, SMinus) | (SMinus, V) => SPlus,
            (SPlus, SPlus) | (SMinus, SMinus) => {
                if n.is_multiple_of(2) { Identity } else { V }
            }
            (SPlus, SMinus) | (SMinus, SPlus) => {
                if n.is_multiple_of(2) { V } else { Identity }
            }
        }
    }

    pub fn inverse(self, n: usize) -> CenterElement {
        if n % 2 == 1 {
            match self {
                CenterElement::SPlus => CenterElement::SMinus,
                CenterElement::SMinus => CenterElement::SPlus,
                x => x,
            }
        } else {
            self
        }
    }

    pub fn order(self, n: usize) -> usize {
        match self {
            CenterElement::Identity => 1,
            CenterElement::V => 2,
            _ => {
                if n.is_multiple_of(2) { 2 } else { 4 }
            }
        }
    }

    /// The image of the zero weight at level 1.
    pub fn weight(self, n: usize) -> Weight {
        match self {
            CenterElement::Identity => Weight::zero(n),
            CenterElement::V => Weight::vector(n),
            CenterElement::SPlus => Weight::spin_plus(n),
            CenterElement::SMinus => Weight::spin_minus(n),
        }
    }
}

/// Action of the center on the level-ℓ alcove through the affine maps
/// `A₁`, `A_{n−1}`, `A_n`. In doubled coordinates `ℓ/2` becomes `ℓ`.
pub fn center_act(z: CenterElement, lambda: &Weight, level: u32) -> Result<Weight> {
    if !lambda.is_admissible(level) {
        return Err(Error::NotAdmissible(lambda.coords2().to_vec(), level));
    }
    let c = lambda.coords2();
    let n = c.len();
    let l = level as i64;
    let out = match z {
        CenterElement::Identity => c.to_vec(),
        CenterElement::V => {
            let mut o = c.to_vec();
            o[0] = 2 * l - c[0];
            o[n - 1] = -c[n - 1];
            o
        }
        CenterElement::SMinus => {
            // A_{n−1}
            let mut o = vec![0; n];
            o[0] = if n.is_multiple_of(2) { l + c[n - 1] } else { l - c[n - 1] };
            for j in 1..n - 1 {
                o[j] = l - c[n - 1 - j];
            }
            o[n - 1] = -l + c[0];
            o
        }
        CenterElement::SPlus => {
            // A_n
            let mut o: Vec<i64> = (0..n).map(|j| l - c[n - 1 - j]).collect();
            if n % 2 == 1 {
                o[0] = l + c[n - 1];
            }
            o
        }
    };
    Ok(Weight::raw(out))
}
