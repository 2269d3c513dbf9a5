use num_traits::{One, Signed, Zero};

use super::{inner4, Weight};
use crate::{Error, Result, Q};

/// A normalized ±1 two-cocycle on the lattice spanned by `basis`.
#[derive(Clone, Debug)]
pub struct LatticeCocycle {
    basis: Vec<Weight>,
    gram2: Vec<Vec<i64>>,
    // rows of the left inverse used to read off basis coefficients
    solver: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

/// Builds the cocycle from an ordered lattice basis. Pairwise inner products
/// must be integers.
pub fn build_cocycle(basis: &[Weight]) -> Result<LatticeCocycle> {
    let m = basis.len();
    if m == 0 {
        return Err(Error::DependentBasis);
    }
    let n = basis[0].rank();
    if let Some(b) = basis.iter().find(|b| b.rank() != n) {
        return Err(Error::RankMismatch(n, b.rank()));
    }
    let mut gram2 = vec![vec![0; m]; m];
    for i in 0..m {
        for j in 0..m {
            let g4 = inner4(&basis[i], &basis[j]);
            if g4 % 4 != 0 {
                return Err(Error::NonIntegralGram(i, j));
            }
            gram2[i][j] = g4 / 2;
        }
    }
    let (solver, pivots) = left_inverse(basis)?;
    Ok(LatticeCocycle { basis: basis.to_vec(), gram2, solver, pivots })
}

// Row-reduces [B | I] where B is n×m with basis vectors as columns; returns
// the reduced identity block and pivot rows.
fn left_inverse(basis: &[Weight]) -> Result<(Vec<Vec<Q>>, Vec<usize>)> {
    let m = basis.len();
    let n = basis[0].rank();
    let mut a: Vec<Vec<Q>> = (0..n)
        .map(|r| {
            let mut row: Vec<Q> = basis.iter().map(|b| Q::from(b.coords2()[r])).collect();
            row.extend((0..n).map(|c| if c == r { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m {
        let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) else {
            return Err(Error::DependentBasis);
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[row].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
        pivots.push(row);
        row += 1;
    }
    Ok((a, pivots))
}

impl LatticeCocycle {
    pub fn basis(&self) -> &[Weight] {
        &self.basis
    }

    pub fn gram2(&self) -> &[Vec<i64>] {
        &self.gram2
    }

    /// Integer coefficients of `v` in the basis.
    pub fn coefficients(&self, v: &Weight) -> Result<Vec<i64>> {
        let m = self.basis.len();
        let n = v.rank();
        let apply = |row: &Vec<Q>| -> Q {
            (0..n).map(|c| row[m + c] * Q::from(v.coords2()[c])).sum()
        };
        let mut coeffs = Vec::with_capacity(m);
        for &p in &self.pivots {
            let q = apply(&self.solver[p]);
            if !q.is_integer() {
                return Err(Error::NotInLattice(v.coords2().to_vec()));
            }
            coeffs.push(q.to_integer());
        }
        let recon = coeffs
            .iter()
            .zip(&self.basis)
            .fold(Weight::raw(vec![0; n]), |acc, (&k, b)| acc.add(&b.scale(k)));
        if &recon != v {
            return Err(Error::NotInLattice(v.coords2().to_vec()));
        }
        Ok(coeffs)
    }

    // ∏_{i>j} (−1)^{m_i k_j ⟨b_i,b_j⟩}
    fn bilinear(&self, m: &[i64], k: &[i64]) -> i8 {
        let mut e = 0i64;
        for i in 0..m.len() {
            for j in 0..i {
                e += m[i] * k[j] * self.gram2[i][j] / 2;
            }
        }
        if e.rem_euclid(2) == 0 { 1 } else { -1 }
    }

    fn correction(&self, m: &[i64]) -> i8 {
        match m.iter().find(|&&x| x != 0) {
            Some(x) if x.is_positive() => self.bilinear(m, m),
            _ => 1,
        }
    }

    /// `ε(λ,μ) ∈ {±1}`.
    pub fn eps(&self, lambda: &Weight, mu: &Weight) -> Result<i8> {
        let m = self.coefficients(lambda)?;
        let k = self.coefficients(mu)?;
        let s: Vec<i64> = m.iter().zip(&k).map(|(a, b)| a + b).collect();
        Ok(self.bilinear(&m, &k) * self.correction(&m) * self.correction(&k) * self.correction(&s))
    }
}
