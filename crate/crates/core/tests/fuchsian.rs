use std::f64::consts::PI;

use fusion_forge::fuchsian::*;
use fusion_forge::kz_engine::fd_weights;
use fusion_forge::{Error, C64};
use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn scalar(x: C64) -> DMatrix<C64> {
    DMatrix::from_element(1, 1, x)
}

#[test]
fn dense_output_matches_exact_solution() {
    // y' = i·y, y(0) = 1
    let sol = integrate(|_, y| vec![y[0] * c(0.0, 1.0)], 0.0, 3.0, &[c(1.0, 0.0)], Tolerances::default(), &[])
        .unwrap();
    assert!((sol.y_end[0] - C64::from_polar(1.0, 3.0)).norm() < 1e-10);
    for k in 0..=60 {
        let t = 3.0 * k as f64 / 60.0;
        let y = sol.eval(t)[0];
        assert!((y - C64::from_polar(1.0, t)).norm() < 1e-9, "t={t}");
    }
    assert!(sol.stats.accepted > 0);
    assert_eq!(sol.stats.evaluations, 1 + 6 * (sol.stats.accepted + sol.stats.rejected));
}

#[test]
fn stops_are_hit_exactly() {
    let stops = [0.25, 0.5, 1.125, 2.0];
    let sol = integrate(|t, _| vec![c(2.0 * t, 0.0)], 0.0, 2.5, &[c(0.0, 0.0)], Tolerances::default(), &stops)
        .unwrap();
    assert_eq!(sol.stops.len(), stops.len());
    for (s, y) in stops.iter().zip(&sol.stops) {
        assert!((y[0].re - s * s).abs() < 1e-12);
    }
    assert_eq!(sol.t_end, 2.5);
}

#[test]
fn backward_integration() {
    let sol = integrate(|_, y| vec![-y[0]], 2.0, 0.0, &[c(1.0, 0.0)], Tolerances::default(), &[1.0]).unwrap();
    assert!((sol.y_end[0].re - 2f64.exp()).abs() < 1e-9 * 2f64.exp());
    assert!((sol.stops[0][0].re - 1f64.exp()).abs() < 1e-9 * 1f64.exp());
    assert!((sol.eval(0.5)[0].re - 1.5f64.exp()).abs() < 1e-8);
}

#[test]
fn blow_up_is_reported() {
    let r = integrate(|_, y| vec![y[0] * y[0]], 0.0, 2.0, &[c(1.0, 0.0)], Tolerances::default(), &[]);
    assert!(matches!(r, Err(Error::Integration { .. })));
}

#[test]
fn loop_around_regular_singularity_gives_monodromy() {
    // y' = s·y/z, y = z^s; one counter-clockwise turn multiplies by e^{2πis}.
    let s = c(0.3, 0.2);
    let square = [c(1.0, 0.0), c(1.0, 1.0), c(-1.0, 1.0), c(-1.0, -1.0), c(1.0, -1.0), c(1.0, 0.0)];
    let (y, stats) = transport_polygon(|z, y| vec![s * y[0] / z], &square, &[c(1.0, 0.0)], Tolerances::default())
        .unwrap();
    assert!((y[0] - (s * 2.0 * PI * c(0.0, 1.0)).exp()).norm() < 1e-9);
    assert!(stats.accepted > 0 && stats.min_step > 0.0);
}

#[test]
fn segment_stops_are_path_parameters() {
    let sol = transport_segment(|_, y| vec![y[0]], c(0.0, 0.0), c(0.0, PI), &[c(1.0, 0.0)], Tolerances::default(), &[0.5])
        .unwrap();
    assert!((sol.stops[0][0] - c(0.0, 1.0)).norm() < 1e-10);
    assert!((sol.y_end[0] + 1.0).norm() < 1e-10);
}

#[test]
fn scalar_frobenius_series_is_exponential() {
    // θy = (s + x)y has y = x^s e^x.
    let s = c(0.4, -0.1);
    let a = [scalar(s), scalar(c(1.0, 0.0)), scalar(c(0.0, 0.0))];
    let ser = FrobeniusSeries::new(&a, s, DVector::from_element(1, c(1.0, 0.0)), 30).unwrap();
    assert_eq!(ser.order(), 30);
    let mut fact = 1.0;
    for (j, y) in ser.coeffs.iter().enumerate() {
        if j > 0 {
            fact *= j as f64;
        }
        assert!((y[0] * fact - 1.0).norm() < 1e-13, "j={j}");
    }
    let x = c(0.2, 0.1);
    let lx = x.ln();
    let want = (s * lx).exp() * x.exp();
    assert!((ser.eval(x, lx)[0] - want).norm() < 1e-14);
    let theta = ser.eval_theta(x, lx, 1)[0];
    assert!((theta - (s + x) * want).norm() < 1e-14);
    assert!(ser.validated_radius() <= 0.5);
}

#[test]
fn constant_residue_series_is_pure_power() {
    let a0 = DMatrix::from_row_slice(2, 2, &[c(0.5, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(-0.5, 0.0)]);
    let lead = DVector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0)]);
    let ser = FrobeniusSeries::new(std::slice::from_ref(&a0), c(0.5, 0.0), lead, 5).unwrap();
    for y in &ser.coeffs[1..] {
        assert!(y.norm() == 0.0);
    }
    assert_eq!(ser.validated_radius(), 0.5);
    let bad = DVector::from_vec(vec![c(0.0, 0.0), c(1.0, 0.0)]);
    assert!(FrobeniusSeries::new(&[a0], c(0.5, 0.0), bad, 5).is_err());
}

#[test]
fn resonance_is_detected() {
    let exps = [c(0.0, 0.0), c(2.0, 0.0), c(0.3, 0.0)];
    assert!(matches!(check_nonresonant(&exps, "0", 1e-9), Err(Error::Resonant { point: "0" })));
    assert!(check_nonresonant(&[c(0.0, 0.0), c(0.5, 0.0), c(1.7, 0.1)], "0", 1e-9).is_ok());
    // A resonant recurrence hits a singular solve.
    let a = [scalar(c(0.0, 0.0)), scalar(c(1.0, 0.0))];
    let a2 = [
        DMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]),
        DMatrix::from_element(2, 2, c(1.0, 0.0)),
    ];
    assert!(FrobeniusSeries::new(&a, c(0.0, 0.0), DVector::from_element(1, c(1.0, 0.0)), 3).is_ok());
    let lead = DVector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0)]);
    assert!(matches!(FrobeniusSeries::new(&a2, c(0.0, 0.0), lead, 3), Err(Error::Resonant { .. })));
}

#[test]
fn companion_matrix_reproduces_scalar_equation() {
    // θ³f + p₂θ²f + p₁θf + p₀f = 0 with f = x^s: s³ + p₂s² + p₁s + p₀ = 0.
    let roots = [c(0.1, 0.2), c(-0.7, 0.0), c(1.3, -0.4)];
    let p2 = -(roots[0] + roots[1] + roots[2]);
    let p1 = roots[0] * roots[1] + roots[1] * roots[2] + roots[0] * roots[2];
    let p0 = -(roots[0] * roots[1] * roots[2]);
    let m = companion(p2, p1, p0);
    for s in roots {
        let v = DVector::from_vec(vec![c(1.0, 0.0), s, s * s]);
        assert!((&m * &v - &v * s).norm() < 1e-14);
    }
}

#[test]
fn fornberg_weights_match_tabulated_stencils() {
    let nodes: Vec<f64> = (-4..=4).map(|k| k as f64).collect();
    let wts = fd_weights(&nodes, 2);
    let d1 = [1.0 / 280.0, -4.0 / 105.0, 1.0 / 5.0, -4.0 / 5.0, 0.0, 4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0];
    let d2 = [
        -1.0 / 560.0,
        8.0 / 315.0,
        -1.0 / 5.0,
        8.0 / 5.0,
        -205.0 / 72.0,
        8.0 / 5.0,
        -1.0 / 5.0,
        8.0 / 315.0,
        -1.0 / 560.0,
    ];
    for i in 0..9 {
        assert!((wts[i][0] - (i == 4) as u8 as f64).abs() < 1e-14);
        assert!((wts[i][1] - d1[i]).abs() < 1e-13, "d1 node {i}");
        assert!((wts[i][2] - d2[i]).abs() < 1e-13, "d2 node {i}");
    }
}

proptest! {
    #[test]
    fn fornberg_is_exact_on_polynomials(h in 0.01f64..0.5, frac in -0.5f64..0.5, p in prop::collection::vec(-2.0f64..2.0, 6)) {
        let nodes: Vec<f64> = (-3..=3).map(|k| h * (frac + k as f64)).collect();
        let wts = fd_weights(&nodes, 3);
        let f = |x: f64| p.iter().rev().fold(0.0, |acc, c| acc * x + c);
        for (m, want) in [(0, p[0]), (1, p[1]), (2, 2.0 * p[2]), (3, 6.0 * p[3])] {
            let got: f64 = nodes.iter().zip(&wts).map(|(x, w)| w[m] * f(*x)).sum();
            prop_assert!((got - want).abs() < 1e-10 * (1.0 + want.abs()) / h.powi(m as i32));
        }
    }

    #[test]
    fn linear_ode_flow_is_linear(a in -1.0f64..1.0, b in -1.0f64..1.0, y0 in -2.0f64..2.0, y1 in -2.0f64..2.0) {
        let f = |t: f64, y: &[C64]| vec![y[0] * c(a, b * t)];
        let tol = Tolerances { rtol: 1e-12, atol: 1e-15 };
        let s0 = integrate(f, 0.0, 1.0, &[c(y0, 0.0)], tol, &[]).unwrap().y_end[0];
        let s1 = integrate(f, 0.0, 1.0, &[c(0.0, y1)], tol, &[]).unwrap().y_end[0];
        let s01 = integrate(f, 0.0, 1.0, &[c(y0, y1)], tol, &[]).unwrap().y_end[0];
        let exact = (c(a, 0.0) + c(0.0, b / 2.0)).exp() * c(y0, y1);
        prop_assert!((s01 - (s0 + s1)).norm() < 1e-9 * (1.0 + exact.norm()));
        prop_assert!((s01 - exact).norm() < 1e-9 * (1.0 + exact.norm()));
    }
}
