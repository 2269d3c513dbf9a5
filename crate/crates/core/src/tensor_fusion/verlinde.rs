use nalgebra::DMatrix;

use super::character_vector;
use crate::weyl_lattice::{AlcoveIndex, Weight};
use crate::{Error, Result, C64};

const INTEGRALITY_TOL: f64 = 1e-6;

/// Character table `P[ν][δ] = χ_ν(S_δ)` with its inverse, for diagonalized
/// fusion products.
#[derive(Clone, Debug)]
pub struct VerlindeTable {
    alcove: AlcoveIndex,
    p: DMatrix<C64>,
    p_inv: DMatrix<C64>,
}

impl VerlindeTable {
    pub fn new(alcove: &AlcoveIndex) -> Result<Self> {
        let d = alcove.len();
        let mut p = DMatrix::<C64>::zeros(d, d);
        for (j, delta) in alcove.weights().iter().enumerate() {
            let cv = character_vector(delta, alcove)?;
            for i in 0..d {
                p[(i, j)] = cv.values[i];
            }
        }
        let p_inv = p.clone().try_inverse().ok_or(Error::Singular("character table"))?;
        Ok(VerlindeTable { alcove: alcove.clone(), p, p_inv })
    }

    pub fn alcove(&self) -> &AlcoveIndex {
        &self.alcove
    }

    fn index(&self, w: &Weight) -> Result<usize> {
        self.alcove
            .index_of(w)
            .ok_or_else(|| Error::NotAdmissible(w.coords2().to_vec(), self.alcove.level()))
    }

    /// `N_λ` before rounding. The characters are left eigenvectors, so this is
    /// the transpose of `P·diag(χ_λ(S_δ))·P⁻¹`.
    pub fn raw_matrix(&self, lambda: &Weight) -> Result<DMatrix<C64>> {
        let l = self.index(lambda)?;
        let d = self.alcove.len();
        let mut pd = self.p.clone();
        for j in 0..d {
            let e = self.p[(l, j)];
            for i in 0..d {
                pd[(i, j)] *= e;
            }
        }
        Ok((pd * &self.p_inv).transpose())
    }

    /// The integer matrix `N_λ`, failing on any entry that is not within
    /// 1e−6 of a non-negative integer.
    pub fn matrix(&self, lambda: &Weight) -> Result<Vec<Vec<u32>>> {
        let m = self.raw_matrix(lambda)?;
        let d = self.alcove.len();
        let mut out = vec![vec![0u32; d]; d];
        for i in 0..d {
            for j in 0..d {
                out[i][j] = to_count(m[(i, j)], i * d + j)?;
            }
        }
        Ok(out)
    }

    /// Decomposition of `H_λ ⊠ H_μ` over the alcove.
    pub fn product(&self, lambda: &Weight, mu: &Weight) -> Result<Vec<u32>> {
        let m = self.raw_matrix(lambda)?;
        let j = self.index(mu)?;
        (0..self.alcove.len()).map(|i| to_count(m[(i, j)], i)).collect()
    }
}

fn to_count(z: C64, index: usize) -> Result<u32> {
    let r = z.re.round();
    if (z - C64::new(r, 0.0)).norm() > INTEGRALITY_TOL || r < 0.0 {
        return Err(Error::DiagonalizationInconsistency { index, value: z.re });
    }
    Ok(r as u32)
}

/// `N_λ` obtained by diagonalization.
pub fn verlinde_matrix(lambda: &Weight, alcove: &AlcoveIndex) -> Result<Vec<Vec<u32>>> {
    VerlindeTable::new(alcove)?.matrix(lambda)
}

/// `H_λ ⊠ H_μ` as an integer vector over the alcove.
pub fn verlinde_product(lambda: &Weight, mu: &Weight, alcove: &AlcoveIndex) -> Result<Vec<u32>> {
    VerlindeTable::new(alcove)?.product(lambda, mu)
}
