use std::f64::consts::PI;

use fusion_forge::braid_algebra::*;
use fusion_forge::tensor_fusion::quantum_dim;
use fusion_forge::weyl_lattice::{casimir, Weight};
use fusion_forge::{Error, C64, Q};
use nalgebra::Matrix3;
use proptest::prelude::*;

fn cis(x: f64) -> C64 {
    C64::from_polar(1.0, x)
}

#[test]
fn level_two_rank_three_values() {
    let p = BraidParams::new(3, 2).unwrap();
    assert_eq!(p.kappa, 6.0);
    let (bs, ba, b0) = braiding_eigenvalues(&p).unwrap();
    assert!((bs - cis(-PI / 6.0)).norm() < 1e-15);
    assert!((ba + cis(PI / 6.0)).norm() < 1e-15);
    assert!((b0 - cis(5.0 * PI / 6.0)).norm() < 1e-15);
    let rep = wenzl_rep(&p).unwrap();
    assert!((rep.z - 2.0).norm() < 1e-14);
    assert!((rep.tau - 0.25).norm() < 1e-14);
    assert!((qdim_from_jones(&p).unwrap() - 2.0).abs() < 1e-14);
}

#[test]
fn level_one_has_no_decomposition() {
    let p = BraidParams::new(3, 1).unwrap();
    assert_eq!(braiding_eigenvalues(&p), Err(Error::DecompositionUnavailable(1)));
    assert_eq!(qdim_from_jones(&p), Err(Error::DecompositionUnavailable(1)));
    assert!(matches!(BraidParams::new(2, 3), Err(Error::RankTooSmall(2))));
}

#[test]
fn eigenvalues_distinct_on_unit_circle() {
    for n in 3..=8 {
        for level in 2..=8 {
            let p = BraidParams::new(n, level).unwrap();
            let (a, b, c) = braiding_eigenvalues(&p).unwrap();
            for x in [a, b, c] {
                assert!((x.norm() - 1.0).abs() < 1e-14);
            }
            assert!((a - b).norm() > 1e-6 && (b - c).norm() > 1e-6 && (a - c).norm() > 1e-6, "n={n} level={level}");
        }
    }
}

#[test]
fn conformal_weights() {
    for n in 3..=6 {
        for level in 1..=4 {
            let kappa = (level + 2 * (n as u32 - 1)) as i64;
            let d = conformal_weight(&Weight::vector(n), n, level).unwrap();
            assert_eq!(d, Q::new(2 * n as i64 - 1, 2 * kappa));
            assert_eq!(conformal_weight(&Weight::zero(n), n, level).unwrap(), Q::from(0));
        }
    }
    assert_eq!(conformal_weight(&Weight::theta(3, 1, 2), 3, 2).unwrap(), Q::from(1));
    assert!(conformal_weight(&Weight::theta(3, 1, 3), 3, 2).is_err());
}

#[test]
fn abelian_phase_examples() {
    let c = Q::from(7);
    for s in [1i8, -1] {
        let ph = abelian_phase(c, Q::from(3), Q::from(10), s, 9.0);
        assert!((ph - C64::new(s as f64, 0.0)).norm() < 1e-15);
    }
    // sym channel at n=3, ℓ=2
    let cb = casimir(&Weight::vector(3)).unwrap();
    let csym = casimir(&Weight::theta(3, 1, 2)).unwrap();
    let ph = abelian_phase(cb, cb, csym, 1, 6.0);
    assert!((ph - cis(-PI / 6.0)).norm() < 1e-15);
}

#[test]
fn epsilon_j_matches_abelian_phase() {
    // ε_j = σ_j e^{iπ(2Δ_□ − Δ_j)} against ε·e^{−iπβ}, β = (C_j − 2C_□)/2κ.
    for n in 3..=6 {
        for level in 2..=5 {
            let kappa = (level + 2 * (n as u32 - 1)) as f64;
            let cb = casimir(&Weight::vector(n)).unwrap();
            let db = conformal_weight(&Weight::vector(n), n, level).unwrap();
            for j in [Weight::theta(n, 1, 2), Weight::sym_plus_theta2(n, 1), Weight::zero(n)] {
                let dj = conformal_weight(&j, n, level).unwrap();
                let e = Q::from(2) * db - dj;
                let e = *e.numer() as f64 / *e.denom() as f64;
                let sigma = symmetry_sign(&j);
                let want = cis(PI * e) * sigma as f64;
                let got = abelian_phase(cb, cb, casimir(&j).unwrap(), sigma, kappa);
                assert!((got - want).norm() < 1e-13);
            }
        }
    }
    assert_eq!(symmetry_sign(&Weight::sym_plus_theta2(4, 1)), -1);
    assert_eq!(symmetry_sign(&Weight::theta(4, 1, 2)), 1);
    assert_eq!(symmetry_sign(&Weight::zero(4)), 1);
}

#[test]
fn wenzl_relations_hold() {
    for n in 3..=6 {
        for level in 2..=6 {
            let p = BraidParams::new(n, level).unwrap();
            let rep = wenzl_rep(&p).unwrap();
            let r = rep.residuals(&p);
            assert!(r.braid < 1e-12 && r.cubic < 1e-12 && r.jones < 1e-12, "{r:?}");
            assert!(r.ccc < 1e-13, "{r:?}");
            assert!(r.spectral < 1e-12 && r.quadratic < 1e-12, "{r:?}");
            assert!((rep.tau * rep.z * rep.z - 1.0).norm() < 1e-13);
            assert!((rep.tau - 1.0 / (rep.z * rep.z)).norm() < 1e-12);
        }
    }
}

// Roots of the characteristic polynomial compared as multisets.
fn spectrum(m: &Matrix3<C64>) -> Vec<C64> {
    let mut e: Vec<C64> = (*m).schur().unpack().1.diagonal().iter().copied().collect();
    e.sort_by(|a, b| a.arg().partial_cmp(&b.arg()).unwrap());
    e
}

#[test]
fn generators_are_conjugate() {
    for n in 3..=5 {
        for level in 2..=5 {
            let p = BraidParams::new(n, level).unwrap();
            let rep = wenzl_rep(&p).unwrap();
            let (s1, s2) = (spectrum(&rep.g1), spectrum(&rep.g2));
            for (a, b) in s1.iter().zip(&s2) {
                assert!((a - b).norm() < 1e-10);
            }
            let (bs, ba, b0) = braiding_eigenvalues(&p).unwrap();
            let mut want = vec![bs, ba, b0];
            want.sort_by(|a, b| a.arg().partial_cmp(&b.arg()).unwrap());
            for (a, b) in s1.iter().zip(&want) {
                assert!((a - b).norm() < 1e-10);
            }
        }
    }
}

#[test]
fn jones_dimension_equals_character_dimension() {
    for n in 3..=8 {
        for level in 2..=6 {
            let p = BraidParams::new(n, level).unwrap();
            let d = quantum_dim(&Weight::vector(n), n, level).unwrap();
            assert!((qdim_from_jones(&p).unwrap() - d).abs() < 1e-12);
        }
    }
}

#[test]
fn jones_dimension_large_kappa_trend() {
    // Fix ℓ and take κ ∈ {50, 500} through n; then take κ → ∞ at fixed n via ℓ.
    for n in [3usize, 5] {
        let small = BraidParams::new(n, 50 - 2 * (n as u32 - 1)).unwrap();
        let large = BraidParams::new(n, 500 - 2 * (n as u32 - 1)).unwrap();
        let (ds, dl) = (qdim_from_jones(&small).unwrap(), qdim_from_jones(&large).unwrap());
        let two_n = 2.0 * n as f64;
        assert!(ds < dl && dl < two_n);
        assert!(two_n - dl < 1e-2);
    }
}

proptest! {
    #[test]
    fn abelian_phase_has_unit_modulus(c2 in -50i64..50, c3 in -50i64..50, c4 in -50i64..50, den in 1i64..8, kappa in 1.0f64..40.0, s in prop::bool::ANY) {
        let ph = abelian_phase(Q::new(c2, den), Q::new(c3, den), Q::new(c4, den), if s { 1 } else { -1 }, kappa);
        prop_assert!((ph.norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn braid_relation_for_generic_q(n in 3usize..=8, level in 2u32..=30) {
        let p = BraidParams::new(n, level).unwrap();
        let rep = wenzl_rep(&p).unwrap();
        let r = rep.residuals(&p);
        prop_assert!(r.braid < 1e-12 && r.cubic < 1e-12 && r.jones < 1e-12);
    }
}
