use serde::Serialize;

use super::fusion_matrix;
use crate::weyl_lattice::{alcove, CenterElement, Weight};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Level1Label {
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "v")]
    V,
    #[serde(rename = "s+")]
    SPlus,
    #[serde(rename = "s-")]
    SMinus,
}

impl Level1Label {
    pub const ALL: [Level1Label; 4] = [Level1Label::Zero, Level1Label::V, Level1Label::SPlus, Level1Label::SMinus];

    pub fn weight(self, n: usize) -> Weight {
        self.center().weight(n)
    }

    pub fn center(self) -> CenterElement {
        match self {
            Level1Label::Zero => CenterElement::Identity,
            Level1Label::V => CenterElement::V,
            Level1Label::SPlus => CenterElement::SPlus,
            Level1Label::SMinus => CenterElement::SMinus,
        }
    }

    fn from_weight(w: &Weight, n: usize) -> Option<Level1Label> {
        Level1Label::ALL.into_iter().find(|l| &l.weight(n) == w)
    }
}

/// Multiplication table of the level-1 fusion ring, `table[i][j] = L_i · L_j`.
#[derive(Clone, Debug, Serialize)]
pub struct Level1Ring {
    pub n: usize,
    pub labels: [Level1Label; 4],
    pub table: [[Level1Label; 4]; 4],
}

impl Level1Ring {
    pub fn product(&self, a: Level1Label, b: Level1Label) -> Level1Label {
        let i = self.labels.iter().position(|&l| l == a).unwrap();
        let j = self.labels.iter().position(|&l| l == b).unwrap();
        self.table[i][j]
    }

    /// Order of `a` under the ring multiplication.
    pub fn order(&self, a: Level1Label) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != Level1Label::Zero {
            x = self.product(x, a);
            k += 1;
            if k > 4 {
                break;
            }
        }
        k
    }

    /// ℤ₄ for n odd, ℤ₂×ℤ₂ for n even, as abstract groups.
    pub fn is_expected_group(&self) -> bool {
        let orders: Vec<usize> = self.labels.iter().map(|&l| self.order(l)).collect();
        let max = *orders.iter().max().unwrap();
        let closed = self.labels.iter().all(|&a| self.labels.iter().all(|&b| self.product(a, b) == self.product(b, a)));
        closed && if self.n % 2 == 1 { max == 4 } else { max == 2 }
    }
}

/// Reads the level-1 products off the truncated fusion matrices.
pub fn level1_ring(n: usize) -> Result<Level1Ring> {
    let alc = alcove(n, 1)?;
    let labels = Level1Label::ALL;
    let mut table = [[Level1Label::Zero; 4]; 4];
    for (i, a) in labels.iter().enumerate() {
        let na = fusion_matrix(&a.weight(n), &alc)?;
        for (j, b) in labels.iter().enumerate() {
            let col = na.column(alc.index_of(&b.weight(n)).unwrap());
            let hits: Vec<usize> = (0..col.len()).filter(|&k| col[k] != 0).collect();
            if hits.len() != 1 || col[hits[0]] != 1 {
                return Err(Error::InvalidParameter(format!("level-1 product {a:?}·{b:?} is not a single sector")));
            }
            table[i][j] = Level1Label::from_weight(&alc.weights()[hits[0]], n)
                .ok_or_else(|| Error::InvalidParameter("unexpected level-1 weight".into()))?;
        }
    }
    Ok(Level1Ring { n, labels, table })
}
