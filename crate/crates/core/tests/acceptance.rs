use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fusion_forge::braid_algebra::{wenzl_rep, BraidParams};
use fusion_forge::df_oracle::{
    df_transport, kappa_range, predicted_transport, quadrature_oracle_j2, relative_residuals, selberg_j2, DFParams,
    DfTransportOptions, IdentityForm, RhoInf2,
};
use fusion_forge::kz_engine::{build_system, is_resonant, kz_verify, monodromy, KZSystem, TransportOptions};
use fusion_forge::tensor_fusion::{
    character_vector, fusion_matrix, level1_ring, minimal_character, minimal_dominant_weights, perron_frobenius_check,
    quantum_dim, vector_qdim_closed, Level1Label, VerlindeTable,
};
use fusion_forge::fuchsian::Tolerances;
use fusion_forge::weyl_lattice::{alcove, build_cocycle, center_act, inner, rho, CenterElement, Weight};
use fusion_forge::C64;

type Outcome = Result<String, String>;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn c1_vector_dimension() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 3..=8 {
        for level in 1..=6u32 {
            let kappa = (level + 2 * (n as u32 - 1)) as f64;
            let t: Vec<f64> = rho(n).coords().iter().map(|x| x / kappa).collect();
            let chi = minimal_character(&Weight::vector(n), &t);
            let e = (chi - vector_qdim_closed(n, level)).norm();
            worst = worst.max(e);
            ensure(e < 1e-12, || format!("n={n} ℓ={level}: {e:.3e}"))?;
        }
    }
    Ok(format!("max error {worst:.2e}"))
}

fn c2_sine_product() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 3..=4 {
        for level in 1..=4 {
            let alc = alcove(n, level).map_err(err)?;
            let phi0 = character_vector(&Weight::zero(n), &alc).map_err(err)?;
            for (i, lam) in alc.weights().iter().enumerate() {
                let d = quantum_dim(lam, n, level).map_err(err)?;
                let e = (phi0.values[i] - d).norm() / d.abs();
                worst = worst.max(e);
                ensure(e < 1e-10, || format!("n={n} ℓ={level} {:?}: {e:.3e}", lam.coords2()))?;
            }
        }
    }
    Ok(format!("max relative error {worst:.2e}"))
}

fn c3_level_one_ring() -> Outcome {
    use Level1Label::*;
    for n in 3..=8 {
        let ring = level1_ring(n).map_err(err)?;
        let even = n % 2 == 0;
        let (same, cross) = if even { (Zero, V) } else { (V, Zero) };
        let table = [
            (V, V, Zero),
            (V, SPlus, SMinus),
            (V, SMinus, SPlus),
            (SPlus, SPlus, same),
            (SMinus, SMinus, same),
            (SPlus, SMinus, cross),
        ];
        for x in Level1Label::ALL {
            ensure(ring.product(Zero, x) == x, || format!("n={n}: 0·{x:?}"))?;
        }
        for (a, b, want) in table {
            ensure(ring.product(a, b) == want, || format!("n={n}: {a:?}·{b:?} = {:?}", ring.product(a, b)))?;
            ensure(ring.product(b, a) == want, || format!("n={n}: {b:?}·{a:?} not commutative"))?;
        }
        let max_order = Level1Label::ALL.iter().map(|&a| ring.order(a)).max().unwrap();
        let want_order = if even { 2 } else { 4 };
        ensure(max_order == want_order && ring.is_expected_group(), || format!("n={n}: exponent {max_order}"))?;
    }
    Ok("ℤ₄ for odd n, ℤ₂×ℤ₂ for even n, n = 3..8".into())
}

fn c4_symmetric_powers() -> Outcome {
    let n = 3;
    for level in 2..=3u32 {
        let alc = alcove(n, level).map_err(err)?;
        let nb = fusion_matrix(&Weight::vector(n), &alc).map_err(err)?;
        for k in 1..=level as i64 {
            let col = nb.column(alc.index_of(&Weight::theta(n, 1, k)).unwrap());
            let mut want = vec![0u32; alc.len()];
            want[alc.index_of(&Weight::theta(n, 1, k - 1)).unwrap()] += 1;
            if k < level as i64 {
                want[alc.index_of(&Weight::sym_plus_theta2(n, k)).unwrap()] += 1;
                want[alc.index_of(&Weight::theta(n, 1, k + 1)).unwrap()] += 1;
            }
            ensure(col == want, || format!("ℓ={level} k={k}: {col:?} vs {want:?}"))?;
        }
    }
    Ok("n=3, ℓ ∈ {2,3}".into())
}

fn c5_eigenvectors() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for n in 3..=4 {
        for level in 1..=4 {
            let alc = alcove(n, level).map_err(err)?;
            let gens: Vec<Weight> =
                minimal_dominant_weights(n).into_iter().filter(|l| l.is_admissible(level)).collect();
            let mats = gens.iter().map(|l| fusion_matrix(l, &alc)).collect::<Result<Vec<_>, _>>().map_err(err)?;
            for mu in alc.weights() {
                let phi = character_vector(mu, &alc).map_err(err)?;
                for (lam, nl) in gens.iter().zip(&mats) {
                    let e = phi.values[alc.index_of(lam).unwrap()];
                    for i in 0..alc.len() {
                        let row: C64 = (0..alc.len()).map(|j| phi.values[j] * nl.entries[j][i] as f64).sum();
                        worst = worst.max((row - e * phi.values[i]).norm());
                    }
                    count += 1;
                    ensure(worst < 1e-9, || format!("n={n} ℓ={level} λ={:?} μ={:?}: {worst:.3e}", lam.coords2(), mu.coords2()))?;
                }
            }
        }
    }
    Ok(format!("{count} (λ, μ) pairs, max residual {worst:.2e}"))
}

fn c6_perron_frobenius() -> Outcome {
    let mut notes = Vec::new();
    for level in 2..=5 {
        let r = perron_frobenius_check(3, level).map_err(err)?;
        ensure(r.passed(1e-9, 1e-6), || format!("ℓ={level}: {r:?}"))?;
        notes.push(format!("ℓ={level} d={:.6}", r.eigenvalue));
    }
    Ok(notes.join(", "))
}

fn c7_verlinde_products() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut triples = 0usize;
    for level in 1..=3 {
        let alc = alcove(3, level).map_err(err)?;
        let table = VerlindeTable::new(&alc).map_err(err)?;
        let d = alc.len();
        let mut mats = Vec::with_capacity(d);
        for lam in alc.weights() {
            let raw = table.raw_matrix(lam).map_err(err)?;
            for x in raw.iter() {
                worst = worst.max((x.re - x.re.round()).abs()).max(x.im.abs());
            }
            mats.push(table.matrix(lam).map_err(err)?);
        }
        ensure(worst < 1e-6, || format!("ℓ={level}: integrality {worst:.3e}"))?;
        // N_λ e_μ = Σ_ν N_{λμ}^ν e_ν
        let prod = |l: usize, v: &[u64]| -> Vec<u64> {
            (0..d).map(|i| (0..d).map(|j| mats[l][i][j] as u64 * v[j]).sum()).collect()
        };
        let unit = |i: usize| -> Vec<u64> { (0..d).map(|j| (i == j) as u64).collect() };
        for a in 0..d {
            for b in 0..d {
                let ab = prod(a, &unit(b));
                ensure(ab == prod(b, &unit(a)), || format!("ℓ={level}: {a}·{b} not commutative"))?;
                for cc in 0..d {
                    // (a·b)·c = a·(b·c), with (a·b)·c = Σ_ν (ab)_ν N_ν e_c
                    let mut left = vec![0u64; d];
                    for (nu, &m) in ab.iter().enumerate() {
                        if m > 0 {
                            for (i, x) in prod(nu, &unit(cc)).into_iter().enumerate() {
                                left[i] += m * x;
                            }
                        }
                    }
                    let right = prod(a, &prod(b, &unit(cc)));
                    ensure(left == right, || format!("ℓ={level}: ({a}·{b})·{cc} ≠ {a}·({b}·{cc})"))?;
                    triples += 1;
                }
            }
        }
    }
    Ok(format!("{triples} triples, max distance to integers {worst:.2e}"))
}

fn c8_wenzl() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 3..=6 {
        for level in 2..=6 {
            let p = BraidParams::new(n, level).map_err(err)?;
            let rep = wenzl_rep(&p).map_err(err)?;
            let r = rep.residuals(&p);
            let tau_err = (rep.tau - 1.0 / (rep.z * rep.z)).norm();
            let m = r.braid.max(r.cubic).max(r.jones).max(tau_err);
            worst = worst.max(m);
            ensure(m < 1e-12, || format!("n={n} ℓ={level}: {r:?}, τ error {tau_err:.3e}"))?;
        }
    }
    let p = BraidParams::new(3, 2).map_err(err)?;
    let tau = wenzl_rep(&p).map_err(err)?.tau;
    ensure((tau - 0.25).norm() < 1e-12, || format!("n=3 ℓ=2: τ = {tau}"))?;
    Ok(format!("max residual {worst:.2e}, τ(3,2) = {:.15}", tau.re))
}

fn c9_selberg() -> Outcome {
    let grid = [(-0.3, -0.2, 0.4), (0.5, 0.2, 0.7), (-0.5, 0.3, 0.2), (0.1, -0.6, 0.9), (1.2, 0.4, 0.5)];
    let mut worst: f64 = 0.0;
    for (a, b, g) in grid {
        let (a, b, g) = (c(a, 0.0), c(b, 0.0), c(g, 0.0));
        let q = quadrature_oracle_j2(a, b, g).map_err(err)?.value;
        let j = selberg_j2(a, b, g).map_err(err)?;
        let e = (q - j).norm() / j.norm();
        worst = worst.max(e);
        ensure(e < 1e-6, || format!("({a},{b},{g}): {q} vs {j}"))?;
    }
    Ok(format!("max relative error {worst:.2e}"))
}

const DRAWS: [(usize, u32, f64, f64); 5] =
    [(3, 1, -6.0, 4.0), (3, 1, -9.0, 2.5), (3, 2, -7.5, 5.0), (4, 1, -10.0, 3.0), (4, 2, -8.0, 7.0)];

fn c10_df_identity() -> Outcome {
    let opts = DfTransportOptions::default();
    let forms = [IdentityForm::Printed, IdentityForm::Corrected];
    let mut best = vec![0.0f64; forms.len() * RhoInf2::ALL.len()];
    for (n, k, re, im) in DRAWS {
        let kappa = c(re, im);
        ensure(kappa_range(n, k, kappa), || format!("κ={kappa} outside the convergent range"))?;
        let p = DFParams::fitting(n, k, kappa).map_err(err)?;
        let t = df_transport(&p, &opts).map_err(err)?;
        for (fi, &form) in forms.iter().enumerate() {
            for (vi, &v) in RhoInf2::ALL.iter().enumerate() {
                let pred = predicted_transport(&p, form, v).map_err(err)?;
                let r = relative_residuals(&t.coefficients, &pred).into_iter().fold(0.0, f64::max);
                let slot = &mut best[fi * RhoInf2::ALL.len() + vi];
                *slot = slot.max(r);
            }
        }
    }
    let mut accepted = Vec::new();
    for (fi, form) in forms.iter().enumerate() {
        for (vi, v) in RhoInf2::ALL.iter().enumerate() {
            let r = best[fi * RhoInf2::ALL.len() + vi];
            println!("    identity {form:?}, ρ∞2 {v:?}: max residual {r:.3e}");
            if r < 1e-5 {
                accepted.push(format!("{form:?}+{v:?}"));
            }
        }
    }
    let chosen = best[RhoInf2::ALL.len() + RhoInf2::ALL.iter().position(|&v| v == RhoInf2::ProofPhased).unwrap()];
    ensure(chosen < 1e-5, || format!("Corrected+ProofPhased residual {chosen:.3e}"))?;
    Ok(format!("selected {}, residual {chosen:.2e}", accepted.join(", ")))
}

fn c11_kz_braiding() -> Outcome {
    let opts = TransportOptions::default();
    let (form, variant) = (IdentityForm::Corrected, RhoInf2::ProofPhased);
    let mut worst: f64 = 0.0;
    for k in 1..=4 {
        let r = kz_verify(3, k, 5, form, variant, &opts).map_err(err)?;
        worst = worst.max(r.max_residual());
        ensure(r.max_residual() < 1e-5, || format!("ℓ=5 k={k}: {:?} {:?}", r.rel_residual, r.ratio_residual))?;
        ensure(r.min_abs_lambda() > 1e-6, || format!("ℓ=5 k={k}: |λ| = {:.3e}", r.min_abs_lambda()))?;
    }
    let mut spreads = Vec::new();
    for (n, k, level) in [(3usize, 1u32, 2u32), (3, 2, 4), (3, 3, 6), (4, 1, 2)] {
        ensure(is_resonant(level, k), || format!("({n},{k},{level}) not resonant"))?;
        let r = kz_verify(n, k, level, form, variant, &opts).map_err(err)?;
        let spread = r.spread.unwrap_or(f64::INFINITY);
        ensure(spread < 1e-3, || format!("n={n} k={k} ℓ={level}: spread {spread:.3e}"))?;
        ensure(r.max_residual() < 1e-5, || format!("n={n} k={k} ℓ={level}: {:?}", r.rel_residual))?;
        worst = worst.max(r.max_residual());
        spreads.push(format!("{spread:.1e}"));
    }
    Ok(format!("max residual {worst:.2e}, resonant spreads [{}]", spreads.join(", ")))
}

fn c12_monodromy() -> Outcome {
    let tol = Tolerances { rtol: 1e-12, atol: 1e-15 };
    let mut systems = vec![
        build_system(3, 1, c(-6.0, 4.0)).map_err(err)?,
        build_system(4, 2, c(-8.0, 7.0)).map_err(err)?,
    ];
    for k in 1..=4 {
        systems.push(KZSystem::physical(3, k, 5).map_err(err)?);
    }
    let (mut eig, mut prod): (f64, f64) = (0.0, 0.0);
    for sys in &systems {
        let m = monodromy(sys, tol).map_err(err)?;
        let e = m.eigen_residual_zero.max(m.eigen_residual_one).max(m.eigen_residual_infinity);
        eig = eig.max(e);
        prod = prod.max(m.product_residual);
        ensure(e < 1e-8 && m.product_residual < 1e-7, || format!("n={} k={} κ={}: {m:?}", sys.n, sys.k, sys.kappa))?;
    }
    Ok(format!("eigenvalues {eig:.2e}, product {prod:.2e}"))
}

fn c13_structure() -> Outcome {
    for n in 3..=8 {
        for k in 1..=6 {
            build_system(n, k, c(7.0, 1.0)).map_err(err)?.verify().map_err(err)?;
        }
    }
    let basis = [Weight::new(vec![2, -2, 0]), Weight::new(vec![0, 2, -2]), Weight::new(vec![0, 2, 2])]
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let cc = build_cocycle(&basis).map_err(err)?;
    let mut box_points = Vec::new();
    for m0 in -1..=1i64 {
        for m1 in -1..=1i64 {
            for m2 in -1..=1i64 {
                box_points.push(basis[0].scale(m0).add(&basis[1].scale(m1)).add(&basis[2].scale(m2)));
            }
        }
    }
    let z = Weight::zero(3);
    for l in &box_points {
        let trivial = [cc.eps(l, &z), cc.eps(&z, l), cc.eps(l, &l.neg())];
        ensure(trivial.iter().all(|e| *e == Ok(1)), || format!("normalization at {:?}", l.coords2()))?;
        for m in &box_points {
            let ip = inner(l, m).map_err(err)?.to_integer();
            let sign = if ip.rem_euclid(2) == 0 { 1 } else { -1 };
            ensure(cc.eps(l, m).map_err(err)? * cc.eps(m, l).map_err(err)? == sign, || "commutator".into())?;
            for r in &box_points {
                let lhs = cc.eps(l, m).map_err(err)? * cc.eps(&l.add(m), r).map_err(err)?;
                let rhs = cc.eps(m, r).map_err(err)? * cc.eps(l, &m.add(r)).map_err(err)?;
                ensure(lhs == rhs, || format!("cocycle at {:?} {:?} {:?}", l.coords2(), m.coords2(), r.coords2()))?;
            }
        }
    }
    for n in 3..=5 {
        for level in 1..=3 {
            let alc = alcove(n, level).map_err(err)?;
            for lam in alc.weights() {
                for a in CenterElement::ALL {
                    for b in CenterElement::ALL {
                        let ab = center_act(a, &center_act(b, lam, level).map_err(err)?, level).map_err(err)?;
                        ensure(ab == center_act(a.mul(b, n), lam, level).map_err(err)?, || {
                            format!("group law n={n} ℓ={level} {a:?} {b:?}")
                        })?;
                    }
                }
            }
        }
        let alc = alcove(n, 1).map_err(err)?;
        let orbit: BTreeSet<Weight> =
            CenterElement::ALL.iter().map(|&g| center_act(g, &Weight::zero(n), 1)).collect::<Result<_, _>>().map_err(err)?;
        ensure(orbit.len() == 4 && orbit == alc.weights().iter().cloned().collect(), || {
            format!("level 1 action not free and transitive for n={n}")
        })?;
    }
    Ok(format!("Ω identities n ≤ 8, {} cocycle triples, center n ∈ {{3,4,5}}", box_points.len().pow(3)))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, u64); 13] = [
        ("quantum dimension of the vector module", c1_vector_dimension, 1),
        ("sine product vs alternating sums", c2_sine_product, 10),
        ("level-1 fusion ring", c3_level_one_ring, 1),
        ("symmetric-power fusion", c4_symmetric_powers, 1),
        ("Verlinde eigenvector property", c5_eigenvectors, 30),
        ("Perron–Frobenius", c6_perron_frobenius, 5),
        ("diagonalized products", c7_verlinde_products, 60),
        ("Wenzl algebra", c8_wenzl, 1),
        ("Selberg quadrature oracle", c9_selberg, 60),
        ("DF connection identity", c10_df_identity, 60),
        ("KZ braiding coefficients", c11_kz_braiding, 120),
        ("exponents and monodromy", c12_monodromy, 30),
        ("structural invariants", c13_structure, 10),
    ];
    let mut failures = 0;
    let total = Instant::now();
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(*budget);
        let (tag, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the {budget} s budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if tag == "FAIL" {
            failures += 1;
        }
        println!("{tag} criterion {:>2} {name}: {detail} [{:.3} s]", i + 1, elapsed.as_secs_f64());
    }
    println!("{} of 13 criteria passed in {:.2} s", 13 - failures, total.elapsed().as_secs_f64());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
