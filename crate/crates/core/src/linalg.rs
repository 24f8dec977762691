//! Small shared linear-algebra helpers.

use nalgebra::{DMatrix, linalg::Schur};
use num_complex::Complex64 as C64;

/// Complex eigenvalues of a small real matrix with a bounded Schur
/// iteration. nalgebra's unbounded iteration can stall on symmetric
/// matrices with zero diagonal; symmetric inputs take the symmetric path
/// and stubborn nonsymmetric ones are retried under escalating tiny
/// perturbations.
pub fn complex_eigenvalues_bounded(m: &DMatrix<f64>) -> Vec<C64> {
    let n = m.nrows();
    if n == 0 {
        return Vec::new();
    }
    let scale = m.amax().max(1e-300);
    let sym_defect = (0..n)
        .flat_map(|i| (0..i).map(move |j| (i, j)))
        .map(|(i, j)| (m[(i, j)] - m[(j, i)]).abs())
        .fold(0.0f64, f64::max);
    if sym_defect == 0.0 {
        return m
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .map(|&x| C64::new(x, 0.0))
            .collect();
    }
    for attempt in 0..5u32 {
        let mut trial = m.clone();
        if attempt > 0 {
            let eps = scale * 1e-13 * 10f64.powi(attempt as i32 - 1);
            for i in 0..n {
                for j in 0..n {
                    // deterministic, index-dependent dither
                    let s = ((i * 31 + j * 17 + attempt as usize * 7) % 13) as f64 - 6.0;
                    trial[(i, j)] += eps * s / 6.0;
                }
            }
        }
        if let Some(schur) = Schur::try_new(trial, 1e-13, 50_000) {
            return schur.complex_eigenvalues().iter().copied().collect();
        }
    }
    panic!("Schur iteration failed to converge for a {n}×{n} matrix");
}

/// Spectral radius estimate of a real matrix; exact up to the bounded
/// eigenvalue computation above.
pub fn spectral_radius(m: &DMatrix<f64>) -> f64 {
    complex_eigenvalues_bounded(m)
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn handles_zero_diagonal_symmetric() {
        let t =
            DMatrix::from_row_slice(3, 3, &[0.0, -1.0, 0.0, -1.0, 0.0, -1.0, 0.0, -1.0, 0.0]);
        let mut eigs: Vec<f64> = complex_eigenvalues_bounded(&t).iter().map(|z| z.re).collect();
        eigs.sort_by(f64::total_cmp);
        let s = 2.0f64.sqrt();
        for (got, want) in eigs.iter().zip([-s, 0.0, s]) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn nonsymmetric_rotation_block() {
        let m = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, -1.0, 0.0]);
        let eigs = complex_eigenvalues_bounded(&m);
        assert!(eigs.iter().all(|z| (z.norm() - 1.0).abs() < 1e-12));
        assert!((spectral_radius(&m) - 1.0).abs() < 1e-12);
    }
}
