//! Tensor products with minimal modules and their level-ℓ truncations.

mod characters;
mod pf;
mod ring;
mod verlinde;

pub use characters::{
    alternating_sum, character_vector, minimal_character, quantum_dim, vector_qdim_closed, weyl_dimension,
    CharacterVector,
};
pub use pf::{perron_frobenius_check, PerronFrobeniusReport};
pub use ring::{level1_ring, Level1Label, Level1Ring};
pub use verlinde::{verlinde_matrix, verlinde_product, VerlindeTable};

use serde::Serialize;

use crate::weyl_lattice::{is_minimal, weyl_orbit, AlcoveIndex, Weight};
use crate::{Error, Result};

/// `N_λ` on an alcove, stored as `entries[ν][μ] = N_{λμ}^ν`.
#[derive(Clone, Debug, Serialize)]
pub struct FusionMatrix {
    pub n: usize,
    pub level: u32,
    pub alcove: Vec<Weight>,
    pub generator: Weight,
    #[serde(rename = "matrix")]
    pub entries: Vec<Vec<u32>>,
}

impl FusionMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Column `μ`: the decomposition of `H_λ ⊠ H_μ`.
    pub fn column(&self, mu: usize) -> Vec<u32> {
        self.entries.iter().map(|row| row[mu]).collect()
    }

    pub fn mul(&self, other: &FusionMatrix) -> Vec<Vec<u64>> {
        let d = self.dim();
        let mut out = vec![vec![0u64; d]; d];
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i][k] as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    out[i][j] += a * other.entries[k][j] as u64;
                }
            }
        }
        out
    }
}

/// `V_μ ⊗ V_λ = ⊕ V_{μ+ν}` over weights ν of the minimal module `V_λ` with
/// `μ+ν` dominant.
pub fn tensor_with_minimal(mu: &Weight, lambda_min: &Weight) -> Result<Vec<Weight>> {
    if mu.rank() != lambda_min.rank() {
        return Err(Error::RankMismatch(mu.rank(), lambda_min.rank()));
    }
    if !is_minimal(lambda_min) || !lambda_min.is_dominant() {
        return Err(Error::NotMinimal(lambda_min.coords2().to_vec()));
    }
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.coords2().to_vec()));
    }
    let mut out: Vec<Weight> = weyl_orbit(lambda_min)
        .iter()
        .map(|nu| mu.add(nu))
        .filter(Weight::is_dominant)
        .collect();
    out.sort();
    Ok(out)
}

/// Truncated tensor rule: summands with `⟨ν,θ⟩ > ℓ` are dropped.
pub fn fusion_matrix(lambda_min: &Weight, alcove: &AlcoveIndex) -> Result<FusionMatrix> {
    if !is_minimal(lambda_min) || !lambda_min.is_dominant() {
        return Err(Error::NotMinimal(lambda_min.coords2().to_vec()));
    }
    if !lambda_min.is_admissible(alcove.level()) {
        return Err(Error::NotAdmissible(lambda_min.coords2().to_vec(), alcove.level()));
    }
    let d = alcove.len();
    let mut entries = vec![vec![0u32; d]; d];
    for (j, mu) in alcove.weights().iter().enumerate() {
        for nu in tensor_with_minimal(mu, lambda_min)? {
            if let Some(i) = alcove.index_of(&nu) {
                entries[i][j] += 1;
            }
        }
    }
    Ok(FusionMatrix {
        n: alcove.n(),
        level: alcove.level(),
        alcove: alcove.weights().to_vec(),
        generator: lambda_min.clone(),
        entries,
    })
}

/// The dominant minimal weights of rank n: 0, θ₁, s₊, s₋.
pub fn minimal_dominant_weights(n: usize) -> Vec<Weight> {
    vec![Weight::zero(n), Weight::vector(n), Weight::spin_plus(n), Weight::spin_minus(n)]
}
