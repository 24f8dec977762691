//! Closed-form results: the free-fermion boundary mode and its
//! normalization, localization conditions, the single-spin and N-spin
//! boundary solutions, Narayana-number structure, and the term-counting
//! bound.

mod counting;
mod nspin;
pub mod toy;

pub use counting::{partition_count_bound, partition_numbers};
pub use nspin::{NSpinMachinery, NSpinSolution, nspin_build, nspin_solve_b0, nspin_solve_b0_damped};
pub use toy::{ToySolution, toy_b0, toy_convergence_bounds, toy_n2};

use crate::models::ChainSpec;
use crate::operator_algebra::{MajoranaSum, MajoranaWord, Site, Window};
use crate::{Error, Result};

/// The free-fermion boundary mode: coefficient tails on the `a_j` modes
/// and the closed normalization.
#[derive(Clone, Debug)]
pub struct FbiSzm {
    /// (site, coefficient on a_site); site 0 carries 1.
    pub coefficients: Vec<(Site, f64)>,
    /// N² = (1-(J1/h1)²)(1-(h2/J2)²)/(1-(J1 h2/J2 h1)²)
    pub norm_sq: f64,
}

/// Ψ = N (a_0 + Σ_j (J1/h1)^j a_{-j} + (h2/J2)^j a_j), truncated at j_max.
pub fn fbi_szm(spec: &ChainSpec, j_max: usize) -> Result<FbiSzm> {
    let left_ratio = if spec.j1 == 0.0 { 0.0 } else { spec.j1 / spec.h1 };
    let right_ratio = spec.h2 / spec.j2;
    if !left_ratio.is_finite() || left_ratio.abs() >= 1.0 {
        return Err(Error::OutOfConvergenceRegion(format!(
            "|J1/h1| = {} not < 1 (left chain must be trivial)",
            left_ratio.abs()
        )));
    }
    if right_ratio.abs() >= 1.0 {
        return Err(Error::OutOfConvergenceRegion(format!(
            "|h2/J2| = {} not < 1 (right chain must be topological)",
            right_ratio.abs()
        )));
    }
    let mut coefficients = vec![(0, 1.0)];
    for j in 1..=j_max as Site {
        if left_ratio != 0.0 {
            coefficients.push((-j, left_ratio.powi(j)));
        }
        coefficients.push((j, right_ratio.powi(j)));
    }
    coefficients.sort_by_key(|&(s, _)| s);
    let cross = left_ratio * right_ratio; // = J1 h2/(J2 h1) when J1 ≠ 0
    let norm_sq =
        (1.0 - left_ratio * left_ratio) * (1.0 - right_ratio * right_ratio)
            / (1.0 - cross * cross);
    Ok(FbiSzm {
        coefficients,
        norm_sq,
    })
}

impl FbiSzm {
    /// The truncated mode as a Majorana operator sum on `window` (sites
    /// outside the window are dropped).
    pub fn to_majorana_sum(&self, window: &Window) -> MajoranaSum {
        let mut sum = MajoranaSum::zero(*window);
        for &(site, c) in &self.coefficients {
            if let Some(mode) = window.mode_a(site) {
                sum.add_word(MajoranaWord::from_modes(window, &[mode]), c);
            }
        }
        sum
    }
}

/// Slack in the N → ∞ localization conditions.
#[derive(Clone, Copy, Debug)]
pub struct LocalizationMargins {
    /// |α + 2β| - 2
    pub plus: f64,
    /// |α - 2β| - 2
    pub minus: f64,
    /// 1 - |h2/J2|
    pub field_ratio: f64,
}

/// |(J2²-J1²+h2²-h1²) ± 2 h1 J1| > 2 h2 J2 and |h2/J2| < 1.
pub fn localization_condition(spec: &ChainSpec) -> (bool, LocalizationMargins) {
    let alpha = (spec.j2 * spec.j2 - spec.j1 * spec.j1 + spec.h2 * spec.h2
        - spec.h1 * spec.h1)
        / (spec.h2 * spec.j2);
    let beta = -(spec.h1 * spec.j1) / (spec.h2 * spec.j2);
    let margins = LocalizationMargins {
        plus: (alpha + 2.0 * beta).abs() - 2.0,
        minus: (alpha - 2.0 * beta).abs() - 2.0,
        field_ratio: 1.0 - (spec.h2 / spec.j2).abs(),
    };
    let ok = margins.plus > 0.0 && margins.minus > 0.0 && margins.field_ratio > 0.0;
    (ok, margins)
}

/// Coupling window (J2 - 2 h2, J2 + 2 h2) where the single-particle bands
/// of the decoupled chains overlap (ferro-ferro regime, h1 = h2).
pub fn band_overlap_window(spec: &ChainSpec) -> (f64, f64) {
    (spec.j2 - 2.0 * spec.h2, spec.j2 + 2.0 * spec.h2)
}

/// Narayana number N(n, k) = C(n,k) C(n,k-1)/n for 1 ≤ k ≤ n.
pub fn narayana(n: u32, k: u32) -> Result<u128> {
    if n < 1 || k < 1 || k > n {
        return Err(Error::InvalidArgument(format!(
            "narayana needs 1 ≤ k ≤ n, got n={n} k={k}"
        )));
    }
    Ok(binomial(n, k) * binomial(n, k - 1) / n as u128)
}

fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// The double series for the N → ∞ coefficient B_{-1,0}: a termwise
/// (Hadamard) product of two Narayana generating functions,
///
/// ```text
/// B_{-1,0} = (J1 h2/Δ_{J²}) (1 + (J2² h1²/Δ_{J²}) Σ_{n≥1} Σ_{j,k=0}^{n-1}
///            J1^{2(n-j-1)} J2^{2j} h1^{2(n-k-1)} h2^{2k} / Δ_{J²}^{2n}
///            · N(n,k+1) N(n,j+1))
/// ```
///
/// truncated at `n_max`.
pub fn narayana_hadamard_series(spec: &ChainSpec, n_max: u32) -> Result<f64> {
    let dj2 = spec.j1 * spec.j1 - spec.j2 * spec.j2;
    if dj2 == 0.0 {
        return Err(Error::OutOfConvergenceRegion("Δ_{J²} = 0".into()));
    }
    let (j12, j2sq) = (spec.j1 * spec.j1, spec.j2 * spec.j2);
    let (h1sq, h2sq) = (spec.h1 * spec.h1, spec.h2 * spec.h2);
    let mut series = 0.0;
    for n in 1..=n_max {
        let mut shell = 0.0;
        for j in 0..n {
            for k in 0..n {
                let weight = (narayana(n, k + 1)? * narayana(n, j + 1)?) as f64;
                shell += j1_pow(j12, n - j - 1)
                    * j1_pow(j2sq, j)
                    * j1_pow(h1sq, n - k - 1)
                    * j1_pow(h2sq, k)
                    * weight;
            }
        }
        series += shell / dj2.powi(2 * n as i32);
    }
    Ok(spec.j1 * spec.h2 / dj2 * (1.0 + j2sq * h1sq / dj2 * series))
}

fn j1_pow(base: f64, exp: u32) -> f64 {
    base.powi(exp as i32)
}

/// One detected family of interaction-induced poles.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct PoleFamily {
    pub p: u32,
    pub q: u32,
    /// order p + q - 1 at which the pole first appears
    pub order: u32,
    /// J1/J2 ratio of the pole location
    pub ratio: f64,
}

/// All pole families with odd coprime (p, q) appearing at order
/// p + q - 1 ≤ n_max, at J2 = ±(p/q)^{±1} J1; both ratio orientations.
pub fn interacting_pole_ladder(n_max: u32) -> Vec<PoleFamily> {
    let gcd = |mut a: u32, mut b: u32| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let mut out = Vec::new();
    for p in (1..=n_max + 1).step_by(2) {
        for q in (1..=p).step_by(2) {
            if p + q - 1 > n_max || gcd(p, q) != 1 {
                continue;
            }
            let order = p + q - 1;
            out.push(PoleFamily {
                p,
                q,
                order,
                ratio: p as f64 / q as f64,
            });
            if p != q {
                out.push(PoleFamily {
                    p,
                    q,
                    order,
                    ratio: q as f64 / p as f64,
                });
            }
        }
    }
    out.sort_by(|a, b| {
        (a.order, a.p)
            .cmp(&(b.order, b.p))
            .then(a.ratio.total_cmp(&b.ratio))
    });
    out
}
