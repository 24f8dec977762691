//! Free-fermion engine against the dense oracle: many-body spectra from the
//! canonical form, and autocorrelators against the exact eigenbasis trace.

mod common;

use common::*;
use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use bszm_core::Window;
use bszm_core::gaussian_dynamics::{ModeEvolution, string_autocorrelator};
use bszm_core::models::{ChainSpec, build_quadratic, build_spin_hamiltonian};
use bszm_core::operator_algebra::{MajoranaString, boundary_spin_string};

/// A(t) = tr(s(t) s)/2^L from the dense eigenbasis of the Hamiltonian.
fn dense_autocorr(h: &DMatrix<C64>, s: &DMatrix<C64>, times: &[f64]) -> Vec<f64> {
    let eig = h.clone().symmetric_eigen();
    let u = &eig.eigenvectors;
    let w = u.adjoint() * s * u;
    let n = h.nrows();
    times
        .iter()
        .map(|&t| {
            let mut acc = C64::new(0.0, 0.0);
            for m in 0..n {
                for nn in 0..n {
                    let phase =
                        C64::new(0.0, (eig.eigenvalues[m] - eig.eigenvalues[nn]) * t).exp();
                    acc += phase * w[(m, nn)] * w[(nn, m)];
                }
            }
            acc /= C64::new(n as f64, 0.0);
            assert!(acc.im.abs() < 1e-9, "trace autocorrelator not real");
            acc.re
        })
        .collect()
}

#[test]
fn free_fermion_spectrum_matches_dense_spin_spectrum() {
    for (n_left, n_right) in [(0usize, 4usize), (2, 3), (4, 4)] {
        let spec = ChainSpec::tfim(n_left, n_right, 0.6, 1.0, 0.35, 0.45);
        let q = build_quadratic(&spec).unwrap();
        let evo = ModeEvolution::new(&q.a);
        let l = spec.window().len();
        // many-body energies are all sign combinations Σ ± ω_i / 2
        let mut energies = vec![0.0f64];
        for &w in evo.omegas() {
            let mut next = Vec::with_capacity(2 * energies.len());
            for &e in &energies {
                next.push(e + 0.5 * w);
                next.push(e - 0.5 * w);
            }
            energies = next;
        }
        energies.sort_by(f64::total_cmp);
        let dense = dense_eigenvalues(&dense_pauli_sum(&build_spin_hamiltonian(&spec).unwrap()));
        assert_eq!(energies.len(), 1 << l);
        for (a, b) in energies.iter().zip(&dense) {
            assert!((a - b).abs() < 1e-10, "spectrum mismatch {a} vs {b}");
        }
    }
}

#[test]
fn autocorrelator_exhaustive_l4_vs_dense_trace() {
    let spec = ChainSpec::tfim(2, 2, 0.7, 1.0, 0.45, 0.3);
    let window = spec.window();
    let q = build_quadratic(&spec).unwrap();
    let dense_h = dense_majorana_sum(
        &bszm_core::models::build_majorana_hamiltonian(&spec).unwrap(),
        false,
    );
    let times = [0.0, 0.3, 1.1, 2.7];
    let n_modes = window.n_modes();
    for mask in 1u32..(1 << n_modes) {
        let modes: Vec<usize> = (0..n_modes).filter(|&m| mask >> m & 1 == 1).collect();
        let s = MajoranaString::hermitian(&window, &modes);
        let series = string_autocorrelator(&q, &s, &times).unwrap();
        let dense_s = dense_majorana_string(&window, &s, false);
        let herm_defect = max_abs_diff(&dense_s.adjoint(), &dense_s);
        assert!(herm_defect < 1e-12, "oracle string not Hermitian");
        let expect = dense_autocorr(&dense_h, &dense_s, &times);
        for (got, want) in series.values.iter().zip(&expect) {
            assert!(
                (got - want).abs() < 1e-10,
                "A(t) mismatch for modes {modes:?}: {got} vs {want}"
            );
        }
    }
}

#[test]
fn boundary_spin_autocorrelator_l8_vs_dense_trace() {
    let spec = ChainSpec::tfim(3, 5, 0.55, 1.0, 0.25, 0.4);
    let window = spec.window();
    let q = build_quadratic(&spec).unwrap();
    let s = boundary_spin_string(&window);
    let times = [0.0, 0.5, 1.5, 4.0, 9.0];
    let series = string_autocorrelator(&q, &s, &times).unwrap();
    let dense_h = dense_pauli_sum(&build_spin_hamiltonian(&spec).unwrap());
    let z0 = dense_site_op(8, window.site_to_bit(0).unwrap(), 'Z');
    let expect = dense_autocorr(&dense_h, &z0, &times);
    for (got, want) in series.values.iter().zip(&expect) {
        assert!((got - want).abs() < 1e-10, "{got} vs {want}");
    }
}

#[test]
fn edge_mode_plateau_matches_free_normalization() {
    // J1 = 0, right chain ferromagnetic: plateau of the a_0 autocorrelator
    // approaches 1 - (h2/J2)^2.
    let spec = ChainSpec::tfim(0, 64, 0.0, 1.0, 0.0, 0.3);
    let q = build_quadratic(&spec).unwrap();
    let window = spec.window();
    let s = MajoranaString::hermitian(&window, &[window.mode_a(0).unwrap()]);
    let grid = bszm_core::gaussian_dynamics::log_time_grid(1.0, 120.0, 160);
    let series = string_autocorrelator(&q, &s, &grid).unwrap();
    let plateau = bszm_core::gaussian_dynamics::plateau_value(&series, 0.5).unwrap();
    let expect = 1.0 - 0.3f64.powi(2);
    assert!(
        (plateau - expect).abs() < 5e-3,
        "plateau {plateau} vs N² {expect}"
    );
}

#[test]
fn long_time_orthogonality_large_chain() {
    let spec = ChainSpec::tfim(100, 100, 0.5, 1.0, 0.1, 0.1);
    let q = build_quadratic(&spec).unwrap();
    let evo = ModeEvolution::new(&q.a);
    assert!(evo.basis_defect() < 1e-11);
    let r = evo.rotation(1e3);
    let n = 400;
    let defect = (r.transpose() * &r - DMatrix::<f64>::identity(n, n))
        .iter()
        .fold(0.0f64, |acc, x| acc.max(x.abs()));
    assert!(defect < 1e-12, "orthogonality defect {defect}");
}

#[test]
fn mixed_parity_window_still_exact() {
    // odd strings (single modes) short-circuit to one matrix element
    let spec = ChainSpec::tfim(1, 3, 0.4, 1.0, 0.3, 0.5);
    let window = spec.window();
    let q = build_quadratic(&spec).unwrap();
    let s = MajoranaString::hermitian(&window, &[window.mode_b(1).unwrap()]);
    let times = [0.0, 0.9, 3.3];
    let series = string_autocorrelator(&q, &s, &times).unwrap();
    let dense_h = dense_majorana_sum(
        &bszm_core::models::build_majorana_hamiltonian(&spec).unwrap(),
        false,
    );
    let ds = dense_majorana_string(&window, &s, false);
    let expect = dense_autocorr(&dense_h, &ds, &times);
    for (got, want) in series.values.iter().zip(&expect) {
        assert!((got - want).abs() < 1e-10);
    }
}

#[test]
fn window_check_rejects_non_involution() {
    let window = Window::new(0, 2);
    let spec = ChainSpec::tfim(0, 2, 0.0, 1.0, 0.0, 0.4);
    let q = build_quadratic(&spec).unwrap();
    let mut s = MajoranaString::hermitian(&window, &[0, 1]);
    s.phase = bszm_core::operator_algebra::Phase::ONE; // i a0 b0 needs phase i
    assert!(string_autocorrelator(&q, &s, &[0.0]).is_err());
}
