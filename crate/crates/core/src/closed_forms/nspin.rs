//! N-boundary-spin machinery: the tridiagonal Toeplitz matrix T, its
//! one-column perturbation Γ, the block recurrence matrix M, and the
//! fixed-point determination of the seed vector b0 from the requirement
//! that no growing eigendirection of M is populated.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

use crate::linalg::{complex_eigenvalues_bounded, spectral_radius};
use crate::models::ChainSpec;
use crate::{Error, Result};

/// α, β, γ and the matrices built from a coupling set and a b0 guess.
#[derive(Clone, Debug)]
pub struct NSpinMachinery {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub t_matrix: DMatrix<f64>,
    pub f_matrix: DMatrix<f64>,
    pub m_matrix: DMatrix<f64>,
    pub b0_vector: DVector<f64>,
    /// (λ, 1/λ) pairs of the 2N×2N block matrix M.
    pub eigen_pairs: Vec<(C64, C64)>,
}

fn couplings(spec: &ChainSpec) -> Result<(f64, f64, f64)> {
    if spec.h2 == 0.0 || spec.j2 == 0.0 {
        return Err(Error::InvalidArgument(
            "N-spin machinery needs h2 ≠ 0 and J2 ≠ 0".into(),
        ));
    }
    let alpha = (spec.j2 * spec.j2 - spec.j1 * spec.j1 + spec.h2 * spec.h2
        - spec.h1 * spec.h1)
        / (spec.h2 * spec.j2);
    let beta = -(spec.h1 * spec.j1) / (spec.h2 * spec.j2);
    let gamma = spec.j1 / spec.j2;
    Ok((alpha, beta, gamma))
}

/// Build T (tridiagonal Toeplitz), Γ (last column γ·b0), F = T + Γ and
/// M = [[0, I], [-I, F]]; M's spectrum comes in reciprocal pairs.
pub fn nspin_build(spec: &ChainSpec, n: usize, b0: &DVector<f64>) -> Result<NSpinMachinery> {
    assert!(n >= 1 && b0.len() == n);
    let (alpha, beta, gamma) = couplings(spec)?;
    let mut t = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        t[(i, i)] = alpha;
        if i + 1 < n {
            t[(i, i + 1)] = beta;
            t[(i + 1, i)] = beta;
        }
    }
    let mut f = t.clone();
    for i in 0..n {
        f[(i, n - 1)] += gamma * b0[i];
    }
    let mut m = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        m[(i, n + i)] = 1.0;
        m[(n + i, i)] = -1.0;
        for j in 0..n {
            m[(n + i, n + j)] = f[(i, j)];
        }
    }
    let eigen_pairs = complex_eigenvalues_bounded(&f)
        .iter()
        .map(|&fi| lambda_pair(fi))
        .collect();
    Ok(NSpinMachinery {
        alpha,
        beta,
        gamma,
        t_matrix: t,
        f_matrix: f,
        m_matrix: m,
        b0_vector: b0.clone(),
        eigen_pairs,
    })
}

/// λ and 1/λ from f = λ + 1/λ, the larger-modulus root first.
fn lambda_pair(f: C64) -> (C64, C64) {
    let disc = (f * f - C64::new(4.0, 0.0)).sqrt();
    let lp = (f + disc) / 2.0;
    let lm = (f - disc) / 2.0;
    if lp.norm() >= lm.norm() { (lp, lm) } else { (lm, lp) }
}

impl NSpinMachinery {
    /// Worst |λ_i · λ_j - 1| over best reciprocal matches of M's directly
    /// computed spectrum; small means the pairing property holds.
    pub fn reciprocal_pairing_defect(&self) -> f64 {
        let eigs = complex_eigenvalues_bounded(&self.m_matrix);
        let mut worst: f64 = 0.0;
        for &l in &eigs {
            let best = eigs
                .iter()
                .map(|&m| (l * m - C64::new(1.0, 0.0)).norm())
                .fold(f64::INFINITY, f64::min);
            worst = worst.max(best);
        }
        worst
    }

    /// Eigenvalues of the unperturbed Toeplitz matrix:
    /// t_n = α + 2|β| cos(π n/(N+1)).
    pub fn toeplitz_eigenvalues(&self) -> Vec<f64> {
        let n = self.t_matrix.nrows();
        (1..=n)
            .map(|k| {
                self.alpha
                    + 2.0 * self.beta.abs()
                        * (std::f64::consts::PI * k as f64 / (n as f64 + 1.0)).cos()
            })
            .collect()
    }

    /// B_{-1,0}: the last entry of b0, the simplest nontrivial coefficient.
    pub fn b_m1_0(&self) -> f64 {
        self.b0_vector[self.b0_vector.len() - 1]
    }
}

/// Result of the damped fixed-point iteration for b0.
#[derive(Clone, Debug)]
pub struct NSpinSolution {
    pub b0: DVector<f64>,
    pub converged: bool,
    pub iterations: usize,
    pub residual: f64,
    pub machinery: NSpinMachinery,
}

/// Solve for b0. Requiring 𝔟0 = (b0; F b0 - γ e_N) to lie in the span of
/// M's decaying eigenvectors (u_i; λ_i u_i), |λ_i| < 1, collapses (expand,
/// match the two block rows, use f_i - λ_i = 1/λ_i) to the closed form
///
/// ```text
/// b0 = γ · X e_N,   X + X^{-1} = F(b0),   spectrum(X) inside the unit disc
/// ```
///
/// X is the decaying branch of the matrix quadratic, evaluated by the
/// continued fraction X ← (F - X)^{-1}, which needs no eigenvectors and
/// tolerates defective F. The joint (X, b0) iteration is damped on b0;
/// stalling (spectral radius of X reaching 1) is the resonance signature
/// and is reported as `converged = false`.
pub fn nspin_solve_b0(
    spec: &ChainSpec,
    n: usize,
    max_iter: usize,
    tol: f64,
) -> Result<NSpinSolution> {
    nspin_solve_b0_damped(spec, n, max_iter, tol, 0.5)
}

pub fn nspin_solve_b0_damped(
    spec: &ChainSpec,
    n: usize,
    max_iter: usize,
    tol: f64,
    damping: f64,
) -> Result<NSpinSolution> {
    let (_, _, gamma) = couplings(spec)?;
    let mut b0 = DVector::<f64>::zeros(n);
    if gamma == 0.0 {
        let machinery = nspin_build(spec, n, &b0)?;
        return Ok(NSpinSolution {
            b0,
            converged: true,
            iterations: 0,
            residual: 0.0,
            machinery,
        });
    }
    let mut x = DMatrix::<f64>::zeros(n, n);
    let mut residual = f64::INFINITY;
    for iter in 1..=max_iter {
        let mach = nspin_build(spec, n, &b0)?;
        let Some(x_next) = (&mach.f_matrix - &x).try_inverse() else {
            // singular step: nudge the fraction and continue
            x *= 0.5;
            continue;
        };
        let b_next = x_next.column(n - 1) * gamma;
        residual = (&x_next - &x)
            .iter()
            .fold(0.0f64, |acc, v| acc.max(v.abs()))
            .max((&b_next - &b0).norm());
        x = x_next;
        b0 = &b0 + (b_next - &b0) * damping;
        if residual < tol {
            let radius = spectral_radius(&x);
            let machinery = nspin_build(spec, n, &b0)?;
            return Ok(NSpinSolution {
                b0: b0.clone(),
                converged: radius < 1.0,
                iterations: iter,
                residual,
                machinery,
            });
        }
    }
    let machinery = nspin_build(spec, n, &b0)?;
    Ok(NSpinSolution {
        b0,
        converged: false,
        iterations: max_iter,
        residual,
        machinery,
    })
}
