//! Canonical form of real antisymmetric matrices and the orthogonal mode
//! propagator built from it.
//!
//! `A = Q T Q^T` by Householder similarity (T antisymmetric tridiagonal),
//! then the even/odd shuffle turns T into `[[0, B], [-B^T, 0]]` with B
//! bidiagonal; an SVD of B yields the rotation planes. One factorization
//! serves every time point: `exp(A t)` is a block rotation in the fixed
//! plane basis.

use nalgebra::DMatrix;

/// Spectral factorization of exp(A t) for real antisymmetric A.
///
/// `basis` columns come in pairs (p_i, q_i) with `A p_i = -ω_i q_i`,
/// `A q_i = ω_i p_i`; the propagator rotates each plane by ω_i t.
pub struct ModeEvolution {
    basis: DMatrix<f64>,
    basis_t: DMatrix<f64>,
    omegas: Vec<f64>,
}

/// Householder reduction to antisymmetric tridiagonal form.
/// Returns (q, e) with `A = Q T Q^T`, `e[i] = T[i][i+1]`.
fn tridiagonalize(a: &DMatrix<f64>) -> (DMatrix<f64>, Vec<f64>) {
    let n = a.nrows();
    let mut a = a.clone();
    let mut q = DMatrix::<f64>::identity(n, n);
    for k in 0..n.saturating_sub(2) {
        let x = a.view((k + 1, k), (n - k - 1, 1)).into_owned();
        let norm = x.norm();
        if norm == 0.0 {
            continue;
        }
        let mut v = DMatrix::<f64>::zeros(n, 1);
        let alpha = if x[(0, 0)] >= 0.0 { -norm } else { norm };
        for i in 0..n - k - 1 {
            v[(k + 1 + i, 0)] = x[(i, 0)];
        }
        v[(k + 1, 0)] -= alpha;
        let vv = v.norm_squared();
        if vv == 0.0 {
            continue;
        }
        let tau = 2.0 / vv;
        // A <- P A P with P = I - tau v v^T reduces to a rank-2 antisymmetric
        // update because v^T A v = 0: A += tau (v u^T - u v^T), u = A v.
        let u = &a * &v;
        let vut = &v * u.transpose();
        a += (&vut - vut.transpose()) * tau;
        // Q <- Q P
        let qv = &q * &v;
        q -= qv * v.transpose() * tau;
    }
    let e = (0..n - 1).map(|i| a[(i, i + 1)]).collect();
    (q, e)
}

impl ModeEvolution {
    pub fn new(a: &DMatrix<f64>) -> ModeEvolution {
        let n = a.nrows();
        assert_eq!(n % 2, 0, "Majorana mode count must be even");
        let (q, e) = tridiagonalize(a);
        let m = n / 2;
        // Even/odd shuffle: T = [[0, B], [-B^T, 0]] with B bidiagonal.
        let mut b = DMatrix::<f64>::zeros(m, m);
        for p in 0..m {
            b[(p, p)] = e[2 * p];
            if p > 0 {
                b[(p, p - 1)] = -e[2 * p - 1];
            }
        }
        let svd = b.svd(true, true);
        let u = svd.u.expect("svd requested u");
        let vt = svd.v_t.expect("svd requested v_t");
        let mut basis = DMatrix::<f64>::zeros(n, n);
        let mut omegas = Vec::with_capacity(m);
        for i in 0..m {
            omegas.push(svd.singular_values[i]);
            for p in 0..m {
                // p_i lives on even T-slots, q_i on odd ones.
                basis[(2 * p, 2 * i)] = u[(p, i)];
                basis[(2 * p + 1, 2 * i + 1)] = vt[(i, p)];
            }
        }
        let basis = q * basis;
        let basis_t = basis.transpose();
        ModeEvolution {
            basis,
            basis_t,
            omegas,
        }
    }

    pub fn n_modes(&self) -> usize {
        self.basis.nrows()
    }

    /// Rotation-plane frequencies ω_i (the single-particle energies are ω_i/2
    /// in the convention of `models`).
    pub fn omegas(&self) -> &[f64] {
        &self.omegas
    }

    /// Orthogonality defect of the factorization basis.
    pub fn basis_defect(&self) -> f64 {
        let n = self.n_modes();
        let g = &self.basis_t * &self.basis - DMatrix::<f64>::identity(n, n);
        g.iter().fold(0.0f64, |acc, x| acc.max(x.abs()))
    }

    /// Selected rows of R(t) = exp(A t).
    pub fn rows(&self, t: f64, modes: &[usize]) -> DMatrix<f64> {
        let n = self.n_modes();
        let k = modes.len();
        let mut w = DMatrix::<f64>::zeros(k, n);
        for (r, &mode) in modes.iter().enumerate() {
            for i in 0..n / 2 {
                let (c, s) = ((self.omegas[i] * t).cos(), (self.omegas[i] * t).sin());
                let bp = self.basis[(mode, 2 * i)];
                let bq = self.basis[(mode, 2 * i + 1)];
                // right-multiplication by the block rotation [[c, s], [-s, c]]
                w[(r, 2 * i)] = c * bp - s * bq;
                w[(r, 2 * i + 1)] = s * bp + c * bq;
            }
        }
        w * &self.basis_t
    }

    /// Full R(t).
    pub fn rotation(&self, t: f64) -> DMatrix<f64> {
        let all: Vec<usize> = (0..self.n_modes()).collect();
        self.rows(t, &all)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn random_antisym(n: usize, seed: u64) -> DMatrix<f64> {
        let mut state = seed;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        };
        let mut a = DMatrix::<f64>::zeros(n, n);
        for i in 0..n {
            for j in 0..i {
                let v = next();
                a[(i, j)] = v;
                a[(j, i)] = -v;
            }
        }
        a
    }

    #[test]
    fn tridiagonal_similarity_reconstructs() {
        let a = random_antisym(12, 3);
        let (q, e) = tridiagonalize(&a);
        let n = 12;
        let mut t = DMatrix::<f64>::zeros(n, n);
        for i in 0..n - 1 {
            t[(i, i + 1)] = e[i];
            t[(i + 1, i)] = -e[i];
        }
        let back = &q * t * q.transpose();
        assert!((back - &a).norm() < 1e-12);
        let ortho = q.transpose() * &q - DMatrix::<f64>::identity(n, n);
        assert!(ortho.norm() < 1e-12);
    }

    #[test]
    fn plane_relations_hold() {
        let a = random_antisym(10, 5);
        let evo = ModeEvolution::new(&a);
        for i in 0..5 {
            let p = evo.basis.column(2 * i);
            let q = evo.basis.column(2 * i + 1);
            let w = evo.omegas[i];
            assert!((&a * p + q * w).norm() < 1e-10);
            assert!((&a * q - p * w).norm() < 1e-10);
        }
    }

    #[test]
    fn rotation_is_orthogonal_group() {
        let a = random_antisym(16, 7);
        let evo = ModeEvolution::new(&a);
        let r0 = evo.rotation(0.0);
        assert!((&r0 - DMatrix::<f64>::identity(16, 16)).norm() < 1e-12);
        let (r1, r2, r3) = (evo.rotation(0.7), evo.rotation(1.3), evo.rotation(2.0));
        assert!((&r1 * r1.transpose() - DMatrix::<f64>::identity(16, 16)).norm() < 1e-11);
        assert!((r1 * r2 - r3).norm() < 1e-10, "group property failed");
    }

    #[test]
    fn generator_matches() {
        // dR/dt at 0 equals A (finite difference).
        let a = random_antisym(8, 11);
        let evo = ModeEvolution::new(&a);
        let dt = 1e-6;
        let deriv = (evo.rotation(dt) - evo.rotation(-dt)) / (2.0 * dt);
        assert!((deriv - &a).norm() < 1e-7);
    }
}
