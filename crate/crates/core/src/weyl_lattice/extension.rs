use std::collections::BTreeSet;

use super::{inner4, CenterElement};

/// The subgroup of Z(Spin(2n)) generated by `gens`.
pub fn subgroup_closure(n: usize, gens: &[CenterElement]) -> BTreeSet<CenterElement> {
    let mut set: BTreeSet<CenterElement> = [CenterElement::Identity].into();
    loop {
        let mut grown = set.clone();
        for &a in &set {
            for &g in gens {
                grown.insert(a.mul(g, n));
            }
        }
        if grown.len() == set.len() {
            return set;
        }
        set = grown;
    }
}

// k⟨λ,λ⟩ ∈ 2ℤ for the minimal weight λ of a generator of order k.
fn cyclic_criterion(n: usize, g: CenterElement) -> bool {
    let k = g.order(n) as i64;
    let w = g.weight(n);
    (k * inner4(&w, &w)) % 8 == 0
}

/// Whether the lattice `Q + {weights of H}` admits a skew form extending
/// `(−1)^{⟨α,μ⟩}` from the root lattice.
pub fn extension_property(n: usize, subgroup: &[CenterElement]) -> bool {
    let h = subgroup_closure(n, subgroup);
    if h.len() == 1 {
        return true;
    }
    if let Some(&g) = h.iter().find(|g| g.order(n) == h.len()) {
        return cyclic_criterion(n, g);
    }
    // Klein four-group: holds iff it holds on every cyclic subgroup.
    h.iter().filter(|&&g| g != CenterElement::Identity).all(|&g| cyclic_criterion(n, g))
}
