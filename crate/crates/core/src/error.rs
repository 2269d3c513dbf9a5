use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("rank must be at least 3, got {0}")]
    RankTooSmall(usize),
    #[error("level must be at least 1, got {0}")]
    LevelTooSmall(u32),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("weight {0:?} is not admissible at level {1}")]
    NotAdmissible(Vec<i64>, u32),
    #[error("weight {0:?} is not minimal")]
    NotMinimal(Vec<i64>),
    #[error("mixed parity in doubled coordinates {0:?}")]
    MixedParity(Vec<i64>),
    #[error("lattice basis is not independent")]
    DependentBasis,
    #[error("vector {0:?} is not in the lattice spanned by the basis")]
    NotInLattice(Vec<i64>),
    #[error("inner product of basis vectors {0} and {1} is not integral")]
    NonIntegralGram(usize, usize),
    #[error("vanishing Weyl denominator at {0:?}")]
    VanishingDenominator(Vec<i64>),
    #[error("singular matrix: {0}")]
    Singular(&'static str),
    #[error("diagonalization inconsistency: entry {value} at index {index} is not a non-negative integer")]
    DiagonalizationInconsistency { index: usize, value: f64 },
    #[error("decomposition unavailable: level {0} < 2")]
    DecompositionUnavailable(u32),
    #[error("relation {relation} violated: residual {residual:e}")]
    RelationViolated { relation: &'static str, residual: f64 },
    #[error("pole of {0}")]
    Pole(String),
    #[error("resonant exponents at {point}: use the deformed-kappa path")]
    Resonant { point: &'static str },
    #[error("not resonant (level {level}, k {k}): use the direct path")]
    NotResonant { level: u32, k: u32 },
    #[error("resonance too strong: extrapolation spread {0:e}")]
    ResonanceTooStrong(f64),
    #[error("integration failed at t = {t}: {reason}")]
    Integration { t: f64, reason: &'static str },
    #[error("quadrature did not converge: estimate {estimate:e}")]
    Quadrature { estimate: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
