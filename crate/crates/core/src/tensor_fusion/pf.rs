use petgraph::algo::kosaraju_scc;
use petgraph::graph::DiGraph;
use serde::Serialize;

use super::{fusion_matrix, quantum_dim};
use crate::weyl_lattice::{alcove, Weight};
use crate::Result;

#[derive(Clone, Debug, Serialize)]
pub struct PerronFrobeniusReport {
    pub n: usize,
    pub level: u32,
    pub block: Vec<Weight>,
    pub strongly_connected: bool,
    pub qdims: Vec<f64>,
    pub all_positive: bool,
    pub eigenvalue: f64,
    pub eigen_residual: f64,
    pub power_eigenvalue: f64,
    pub power_gap: f64,
    pub power_vector_gap: f64,
}

impl PerronFrobeniusReport {
    pub fn passed(&self, eigen_tol: f64, power_tol: f64) -> bool {
        self.strongly_connected
            && self.all_positive
            && self.eigen_residual < eigen_tol
            && self.power_gap < power_tol
            && self.power_vector_gap < power_tol
    }
}

/// Checks that the quantum dimensions are the Perron–Frobenius eigenvector of
/// `N_□` restricted to single-valued weights.
pub fn perron_frobenius_check(n: usize, level: u32) -> Result<PerronFrobeniusReport> {
    let alc = alcove(n, level)?;
    let nbox = fusion_matrix(&Weight::vector(n), &alc)?;
    let idx = alc.single_valued();
    let m = idx.len();
    let block: Vec<Vec<f64>> =
        idx.iter().map(|&i| idx.iter().map(|&j| nbox.entries[i][j] as f64).collect()).collect();

    let mut graph = DiGraph::<(), ()>::new();
    let nodes: Vec<_> = (0..m).map(|_| graph.add_node(())).collect();
    for i in 0..m {
        for j in 0..m {
            if block[i][j] > 0.0 {
                graph.add_edge(nodes[i], nodes[j], ());
            }
        }
    }
    let strongly_connected = kosaraju_scc(&graph).len() == 1;

    let weights: Vec<Weight> = idx.iter().map(|&i| alc.weights()[i].clone()).collect();
    let qdims = weights.iter().map(|w| quantum_dim(w, n, level)).collect::<Result<Vec<_>>>()?;
    let all_positive = qdims.iter().all(|&d| d > 0.0);
    let eigenvalue = quantum_dim(&Weight::vector(n), n, level)?;
    let apply = |v: &[f64]| -> Vec<f64> {
        (0..m).map(|i| (0..m).map(|j| block[i][j] * v[j]).sum()).collect()
    };
    let nv = apply(&qdims);
    let eigen_residual = nv
        .iter()
        .zip(&qdims)
        .map(|(a, d)| (a - eigenvalue * d).abs())
        .fold(0.0, f64::max);

    // power iteration on N+I, which is primitive whenever N is irreducible
    let mut v = vec![1.0; m];
    let mut lambda = 0.0;
    for _ in 0..20_000 {
        let mut w = apply(&v);
        for (wi, vi) in w.iter_mut().zip(&v) {
            *wi += vi;
        }
        let norm = w.iter().cloned().fold(0.0, f64::max);
        for x in w.iter_mut() {
            *x /= norm;
        }
        let delta = w.iter().zip(&v).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        v = w;
        lambda = norm - 1.0;
        if delta < 1e-14 {
            break;
        }
    }
    let vmax = qdims.iter().cloned().fold(0.0, f64::max);
    let power_vector_gap = v
        .iter()
        .zip(&qdims)
        .map(|(a, d)| (a - d / vmax).abs())
        .fold(0.0, f64::max);
    Ok(PerronFrobeniusReport {
        n,
        level,
        block: weights,
        strongly_connected,
        qdims,
        all_positive,
        eigenvalue,
        eigen_residual,
        power_eigenvalue: lambda,
        power_gap: (lambda - eigenvalue).abs(),
        power_vector_gap,
    })
}
