//! Dense-matrix oracle: builds explicit 2^L × 2^L matrices for strings and
//! operator sums straight from their definitions (Kronecker products and
//! dense matmuls only), independent of the sparse algebra under test.

#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use bszm_core::Window;
use bszm_core::operator_algebra::{
    MajoranaString, MajoranaSum, OperatorSum, PauliString, PauliSum, Phase, Word,
};

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn pauli_2x2(axis: char) -> DMatrix<C64> {
    let z = c(0.0, 0.0);
    let o = c(1.0, 0.0);
    match axis {
        'I' => DMatrix::from_row_slice(2, 2, &[o, z, z, o]),
        'X' => DMatrix::from_row_slice(2, 2, &[z, o, o, z]),
        'Y' => DMatrix::from_row_slice(2, 2, &[z, c(0.0, -1.0), c(0.0, 1.0), z]),
        'Z' => DMatrix::from_row_slice(2, 2, &[o, z, z, c(-1.0, 0.0)]),
        _ => panic!("bad axis"),
    }
}

/// σ^axis on one site of an L-site chain (site given as bit index 0..L).
pub fn dense_site_op(l: usize, bit: usize, axis: char) -> DMatrix<C64> {
    let mut m = DMatrix::identity(1, 1);
    for b in 0..l {
        let f = if b == bit { pauli_2x2(axis) } else { pauli_2x2('I') };
        m = m.kronecker(&f);
    }
    m
}

pub fn dense_identity(l: usize) -> DMatrix<C64> {
    DMatrix::identity(1 << l, 1 << l)
}

/// Dense matrix of a Pauli string (phase · Π X^x Z^z in canonical order).
pub fn dense_pauli_string(window: &Window, s: &PauliString) -> DMatrix<C64> {
    let l = window.len();
    let mut m = dense_identity(l);
    for bit in 0..l {
        if s.word.x.get(bit) {
            m = m * dense_site_op(l, bit, 'X');
        }
        if s.word.z.get(bit) {
            m = m * dense_site_op(l, bit, 'Z');
        }
    }
    m * s.phase.as_complex()
}

/// Dense a_j / b_j from the definitional left-edge formulas:
/// a_j = (Π_{k<j} σ^x) σ^z_j, b_j = i (Π_{k≤j} σ^x) σ^z_j.
pub fn dense_majorana_mode_left(window: &Window, mode: usize) -> DMatrix<C64> {
    let l = window.len();
    let bit = mode / 2;
    let is_b = mode % 2 == 1;
    let mut m = dense_identity(l);
    let upto = if is_b { bit + 1 } else { bit };
    for k in 0..upto {
        m = m * dense_site_op(l, k, 'X');
    }
    m = m * dense_site_op(l, bit, 'Z');
    if is_b {
        m = m * c(0.0, 1.0);
    }
    m
}

/// Dense a_j / b_j for the center-wrapped string: anchored at site 0,
/// wrapping through the right edge for j < 0.
pub fn dense_majorana_mode_center(window: &Window, mode: usize) -> DMatrix<C64> {
    let l = window.len();
    let bit = mode / 2;
    let is_b = mode % 2 == 1;
    let site = window.bit_to_site(bit);
    let zero_bit = window.site_to_bit(0).unwrap();
    let mut m = dense_identity(l);
    if site >= 0 {
        let upto = if is_b { bit + 1 } else { bit };
        for k in zero_bit..upto {
            m = m * dense_site_op(l, k, 'X');
        }
    } else {
        let upto = if is_b { bit + 1 } else { bit };
        for k in 0..upto {
            m = m * dense_site_op(l, k, 'X');
        }
        for k in zero_bit..l {
            m = m * dense_site_op(l, k, 'X');
        }
    }
    m = m * dense_site_op(l, bit, 'Z');
    if is_b {
        m = m * c(0.0, 1.0);
    }
    m
}

pub fn dense_majorana_string(
    window: &Window,
    s: &MajoranaString,
    center: bool,
) -> DMatrix<C64> {
    let l = window.len();
    let mut m = dense_identity(l);
    for mode in s.word.modes.iter_ones() {
        let f = if center {
            dense_majorana_mode_center(window, mode)
        } else {
            dense_majorana_mode_left(window, mode)
        };
        m = m * f;
    }
    m * s.phase.as_complex()
}

pub fn dense_pauli_sum(sum: &PauliSum) -> DMatrix<C64> {
    let window = *sum.window();
    let l = window.len();
    let mut m = DMatrix::zeros(1 << l, 1 << l);
    for (word, coeff) in sum.terms() {
        let s = PauliString {
            word: word.clone(),
            phase: Phase::from_ipow(word.herm_ipow() as i64),
        };
        m += dense_pauli_string(&window, &s) * c(coeff, 0.0);
    }
    if sum.is_antihermitian_flagged() {
        m *= c(0.0, 1.0);
    }
    m
}

pub fn dense_majorana_sum(sum: &MajoranaSum, center: bool) -> DMatrix<C64> {
    let window = *sum.window();
    let l = window.len();
    let mut m = DMatrix::zeros(1 << l, 1 << l);
    for (word, coeff) in sum.terms() {
        let s = MajoranaString {
            word: word.clone(),
            phase: Phase::from_ipow(word.herm_ipow() as i64),
        };
        m += dense_majorana_string(&window, &s, center) * c(coeff, 0.0);
    }
    if sum.is_antihermitian_flagged() {
        m *= c(0.0, 1.0);
    }
    m
}

pub fn max_abs_diff(a: &DMatrix<C64>, b: &DMatrix<C64>) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Infinite-temperature trace inner product tr(A†B)/2^L of dense matrices.
pub fn dense_hs_inner(a: &DMatrix<C64>, b: &DMatrix<C64>) -> C64 {
    let n = a.nrows();
    (a.adjoint() * b).trace() / c(n as f64, 0.0)
}

/// Sorted real eigenvalues of a Hermitian dense matrix.
pub fn dense_eigenvalues(h: &DMatrix<C64>) -> Vec<f64> {
    let herm_defect = max_abs_diff(&h.adjoint(), h);
    assert!(herm_defect < 1e-10, "matrix not Hermitian: {herm_defect}");
    let mut ev: Vec<f64> = h
        .clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Deterministic splitmix-style stream for reproducible "random" test data.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> TestRng {
        TestRng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn coeff(&mut self) -> f64 {
        2.0 * self.uniform() - 1.0
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// Random Pauli sum with `n_terms` Hermitian canonical strings.
pub fn random_pauli_sum(window: &Window, n_terms: usize, rng: &mut TestRng) -> PauliSum {
    use bszm_core::operator_algebra::PauliWord;
    let mut sum = OperatorSum::zero(*window);
    for _ in 0..n_terms {
        let mut word = PauliWord::new(window);
        for bit in 0..window.len() {
            match rng.below(4) {
                1 => word.x.set(bit, true),
                2 => word.z.set(bit, true),
                3 => {
                    word.x.set(bit, true);
                    word.z.set(bit, true);
                }
                _ => {}
            }
        }
        sum.add_word(word, rng.coeff());
    }
    sum
}

pub fn random_majorana_sum(window: &Window, n_terms: usize, rng: &mut TestRng) -> MajoranaSum {
    use bszm_core::operator_algebra::MajoranaWord;
    let mut sum = OperatorSum::zero(*window);
    for _ in 0..n_terms {
        let mut word = MajoranaWord::new(window);
        for mode in 0..window.n_modes() {
            if rng.below(2) == 1 {
                word.modes.set(mode, true);
            }
        }
        if word.mode_count() % 2 != 0 {
            // keep parity even so sums stay physical operators
            word.modes.toggle(rng.below(window.n_modes()));
        }
        if !word.is_identity() {
            sum.add_word(word, rng.coeff());
        }
    }
    sum
}
