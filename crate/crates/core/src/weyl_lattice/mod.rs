//! Type D_n root and weight lattice.
//!
//! Weights are stored in doubled orthogonal coordinates `c_i = 2λ_i`, so the
//! spin weights `½(±1,…,±1)` stay integral and every inner product is an exact
//! rational with denominator dividing 4.

mod alcove;
mod center;
mod cocycle;
mod extension;

pub use alcove::{alcove, AlcoveIndex};
pub use center::{center_act, CenterElement};
pub use cocycle::{build_cocycle, LatticeCocycle};
pub use extension::{extension_property, subgroup_closure};

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::{Error, Result, Q};

/// A D_n weight in doubled orthogonal coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    coords2: Vec<i64>,
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords2)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coords2
            .iter()
            .map(|&c| if c % 2 == 0 { format!("{}", c / 2) } else { format!("{}/2", c) })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Weight {
    /// Builds a weight from doubled coordinates. All entries must share a parity.
    pub fn new(coords2: Vec<i64>) -> Result<Self> {
        if coords2.len() < 3 {
            return Err(Error::RankTooSmall(coords2.len()));
        }
        let p = coords2[0].rem_euclid(2);
        if coords2.iter().any(|c| c.rem_euclid(2) != p) {
            return Err(Error::MixedParity(coords2));
        }
        Ok(Weight { coords2 })
    }

    /// Unchecked constructor for internal arithmetic.
    pub(crate) fn raw(coords2: Vec<i64>) -> Self {
        Weight { coords2 }
    }

    pub fn zero(n: usize) -> Self {
        Weight { coords2: vec![0; n] }
    }

    /// `k·θ_i` (1-based `i`).
    pub fn theta(n: usize, i: usize, k: i64) -> Self {
        let mut c = vec![0; n];
        c[i - 1] = 2 * k;
        Weight { coords2: c }
    }

    /// Highest weight of the vector representation, `θ₁`.
    pub fn vector(n: usize) -> Self {
        Self::theta(n, 1, 1)
    }

    /// `s₊ = ½(1,…,1)`.
    pub fn spin_plus(n: usize) -> Self {
        Weight { coords2: vec![1; n] }
    }

    /// `s₋ = ½(1,…,1,−1)`.
    pub fn spin_minus(n: usize) -> Self {
        let mut c = vec![1; n];
        c[n - 1] = -1;
        Weight { coords2: c }
    }

    /// `k θ₁ + θ₂`.
    pub fn sym_plus_theta2(n: usize, k: i64) -> Self {
        let mut c = vec![0; n];
        c[0] = 2 * k;
        c[1] = 2;
        Weight { coords2: c }
    }

    pub fn rank(&self) -> usize {
        self.coords2.len()
    }

    pub fn coords2(&self) -> &[i64] {
        &self.coords2
    }

    /// Ordinary coordinates as floats.
    pub fn coords(&self) -> Vec<f64> {
        self.coords2.iter().map(|&c| c as f64 / 2.0).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coords2.iter().all(|&c| c == 0)
    }

    /// True for weights of single-valued SO(2n)-modules (integral coordinates).
    pub fn is_single_valued(&self) -> bool {
        self.coords2.iter().all(|c| c % 2 == 0)
    }

    pub fn is_dominant(&self) -> bool {
        let c = &self.coords2;
        let n = c.len();
        c.windows(2).take(n - 2).all(|w| w[0] >= w[1]) && c[n - 2] >= c[n - 1].abs()
    }

    /// `⟨λ,θ⟩` doubled, with `θ = θ₁+θ₂` the highest root.
    pub fn theta_pairing2(&self) -> i64 {
        self.coords2[0] + self.coords2[1]
    }

    pub fn is_admissible(&self, level: u32) -> bool {
        self.is_dominant() && self.theta_pairing2() <= 2 * level as i64
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::raw(self.coords2.iter().zip(&other.coords2).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight::raw(self.coords2.iter().zip(&other.coords2).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight::raw(self.coords2.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight::raw(self.coords2.iter().map(|a| k * a).collect())
    }

    /// Conjugate weight `−w₀λ`: identity for n even, flips the last sign for n odd.
    pub fn conjugate(&self) -> Weight {
        let mut c = self.coords2.clone();
        let n = c.len();
        if n % 2 == 1 {
            c[n - 1] = -c[n - 1];
        }
        Weight::raw(c)
    }
}

/// Exact inner product `Σ λ_i μ_i`.
pub fn inner(a: &Weight, b: &Weight) -> Result<Q> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch(a.rank(), b.rank()));
    }
    Ok(Q::new(inner4(a, b), 4))
}

/// Four times the inner product, as an integer.
pub(crate) fn inner4(a: &Weight, b: &Weight) -> i64 {
    a.coords2.iter().zip(&b.coords2).map(|(x, y)| x * y).sum()
}

/// `ρ = Σ (n−j) θ_j`.
pub fn rho(n: usize) -> Weight {
    Weight::raw((0..n).map(|j| 2 * (n - 1 - j) as i64).collect())
}

/// Positive roots `θ_i ± θ_j`, `i < j`, in doubled coordinates.
pub fn positive_roots(n: usize) -> Vec<Weight> {
    let mut out = Vec::with_capacity(n * (n - 1));
    for i in 0..n {
        for j in i + 1..n {
            for s in [-1, 1] {
                let mut c = vec![0; n];
                c[i] = 2;
                c[j] = 2 * s;
                out.push(Weight::raw(c));
            }
        }
    }
    out
}

/// All roots `±θ_i ± θ_j`.
pub fn roots(n: usize) -> Vec<Weight> {
    positive_roots(n)
        .into_iter()
        .flat_map(|r| [r.neg(), r])
        .collect()
}

/// `⟨λ, λ+2ρ⟩` for dominant λ.
pub fn casimir(lambda: &Weight) -> Result<Q> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coords2.clone()));
    }
    let shifted = lambda.add(&rho(lambda.rank()).scale(2));
    inner(lambda, &shifted)
}

/// `|⟨λ,α⟩| ≤ 1` for every root α.
pub fn is_minimal(lambda: &Weight) -> bool {
    let c = &lambda.coords2;
    let n = c.len();
    (0..n).all(|i| (i + 1..n).all(|j| (c[i] + c[j]).abs() <= 2 && (c[i] - c[j]).abs() <= 2))
}

/// A signed permutation with an even number of sign changes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement { perm: (0..n).collect(), signs: vec![1; n] }
    }

    /// `(wλ)_{perm[i]} = signs[i]·λ_i`.
    pub fn act(&self, lambda: &Weight) -> Weight {
        let mut out = vec![0; lambda.rank()];
        for (i, &c) in lambda.coords2.iter().enumerate() {
            out[self.perm[i]] = self.signs[i] as i64 * c;
        }
        Weight::raw(out)
    }

    /// Determinant of the signed permutation matrix.
    pub fn det(&self) -> i8 {
        let n = self.perm.len();
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.perm[i] > self.perm[j] {
                    inversions += 1;
                }
            }
        }
        let s: i8 = self.signs.iter().product();
        if inversions % 2 == 0 { s } else { -s }
    }
}

type GroupCache = Mutex<Vec<Option<Arc<Vec<WeylElement>>>>>;

/// The full Weyl group of D_n, `2^{n−1}·n!` elements. Memoized per rank.
pub fn weyl_group(n: usize) -> Arc<Vec<WeylElement>> {
    static CACHE: OnceLock<GroupCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    let mut guard = cache.lock().unwrap();
    if guard.len() <= n {
        guard.resize(n + 1, None);
    }
    if let Some(g) = &guard[n] {
        return g.clone();
    }
    let mut elems = Vec::new();
    for perm in (0..n).permutations(n) {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() % 2 != 0 {
                continue;
            }
            let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            elems.push(WeylElement { perm: perm.clone(), signs });
        }
    }
    let g = Arc::new(elems);
    guard[n] = Some(g.clone());
    g
}

/// The W-orbit of λ.
pub fn weyl_orbit(lambda: &Weight) -> BTreeSet<Weight> {
    let n = lambda.rank();
    let mut abs: Vec<i64> = lambda.coords2.iter().map(|c| c.abs()).collect();
    abs.sort_unstable();
    let has_zero = abs.contains(&0);
    let neg = lambda.coords2.iter().filter(|&&c| c < 0).count();
    let mut out = BTreeSet::new();
    for perm in abs.iter().copied().permutations(n).unique() {
        for mask in 0u32..(1 << n) {
            let flips = mask.count_ones() as usize;
            // sign flips on zero entries are invisible, so parity only binds without zeros
            if !has_zero && !(flips + neg).is_multiple_of(2) {
                continue;
            }
            let c: Vec<i64> = perm
                .iter()
                .enumerate()
                .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
                .collect();
            out.insert(Weight::raw(c));
        }
    }
    out
}

/// Dominant representative of the W-orbit of λ.
pub fn dominant_representative(lambda: &Weight) -> Weight {
    let mut c: Vec<i64> = lambda.coords2.iter().map(|x| x.abs()).collect();
    c.sort_unstable_by(|a, b| b.cmp(a));
    let neg = lambda.coords2.iter().filter(|&&x| x < 0).count();
    let n = c.len();
    if neg % 2 == 1 && c[n - 1] != 0 {
        c[n - 1] = -c[n - 1];
    }
    Weight::raw(c)
}
