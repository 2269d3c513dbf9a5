use std::collections::HashMap;

use serde::{Serialize, Serializer};

use super::Weight;
use crate::{Error, Result};

/// The dominant weights with `⟨λ,θ⟩ ≤ ℓ`, sorted lexicographically on
/// doubled coordinates.
#[derive(Clone, Debug)]
pub struct AlcoveIndex {
    n: usize,
    level: u32,
    weights: Vec<Weight>,
    position: HashMap<Weight, usize>,
}

impl Serialize for AlcoveIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.weights.serialize(s)
    }
}

impl AlcoveIndex {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.position.get(w).copied()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.position.contains_key(w)
    }

    /// `κ = ℓ + 2(n−1)`.
    pub fn kappa(&self) -> u32 {
        self.level + 2 * (self.n as u32 - 1)
    }

    /// Indices of the single-valued (integral) weights.
    pub fn single_valued(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.weights[i].is_single_valued()).collect()
    }
}

/// Enumerates the level-ℓ alcove of D_n.
pub fn alcove(n: usize, level: u32) -> Result<AlcoveIndex> {
    if n < 3 {
        return Err(Error::RankTooSmall(n));
    }
    if level < 1 {
        return Err(Error::LevelTooSmall(level));
    }
    let l2 = 2 * level as i64;
    let mut weights = Vec::new();
    for parity in [0, 1] {
        let mut c = vec![0i64; n];
        fill(&mut c, 0, l2, parity, l2, &mut weights);
    }
    weights.sort();
    let position = weights.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    Ok(AlcoveIndex { n, level, weights, position })
}

// c[0] ≥ … ≥ c[n−2] ≥ |c[n−1]|, c[0]+c[1] ≤ 2ℓ, common parity.
fn fill(c: &mut Vec<i64>, i: usize, upper: i64, parity: i64, l2: i64, out: &mut Vec<Weight>) {
    let n = c.len();
    if i == n - 1 {
        let bound = upper;
        let mut v = -bound;
        while v <= bound {
            if v.rem_euclid(2) == parity {
                c[i] = v;
                out.push(Weight::raw(c.clone()));
            }
            v += 1;
        }
        return;
    }
    let mut v = parity;
    while v <= upper {
        let ok = if i == 1 { c[0] + v <= l2 } else { true };
        if ok {
            c[i] = v;
            fill(c, i + 1, v, parity, l2, out);
        }
        v += 2;
    }
}
