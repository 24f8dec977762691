//! Free-fermion engine: orthogonal mode propagators, Pfaffians, and
//! infinite-temperature autocorrelators of Majorana strings (hence of
//! σ^z_0 through its Jordan-Wigner image).

mod antisym;
mod pfaffian;

pub use antisym::ModeEvolution;
pub use pfaffian::pfaffian;

use nalgebra::DMatrix;

use crate::models::QuadraticHamiltonian;
use crate::operator_algebra::MajoranaString;
use crate::{Error, Result};

/// Heisenberg mode rotation R(t): c_j(t) = Σ_k R_{jk} c_k.
#[derive(Clone, Debug)]
pub struct OrthogonalPropagator {
    pub r_matrix: DMatrix<f64>,
    pub time: f64,
}

impl OrthogonalPropagator {
    pub fn orthogonality_defect(&self) -> f64 {
        let n = self.r_matrix.nrows();
        let g = self.r_matrix.transpose() * &self.r_matrix - DMatrix::<f64>::identity(n, n);
        g.iter().fold(0.0f64, |acc, x| acc.max(x.abs()))
    }
}

/// R(t) = exp(A t) for the quadratic Hamiltonian's antisymmetric matrix.
/// For whole time series prefer [`ModeEvolution`], which factorizes once.
pub fn propagator(h: &QuadraticHamiltonian, t: f64) -> OrthogonalPropagator {
    let evo = ModeEvolution::new(&h.a);
    OrthogonalPropagator {
        r_matrix: evo.rotation(t),
        time: t,
    }
}

/// Sampled real time series, times strictly increasing.
#[derive(Clone, Debug, PartialEq)]
pub struct TimeSeries {
    pub times: Vec<f64>,
    pub values: Vec<f64>,
}

impl TimeSeries {
    pub fn new(times: Vec<f64>, values: Vec<f64>) -> TimeSeries {
        assert_eq!(times.len(), values.len());
        debug_assert!(times.windows(2).all(|w| w[0] < w[1]), "times must increase");
        TimeSeries { times, values }
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// CSV with header `t,autocorr`; shortest round-trip float formatting.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,autocorr\n");
        for (t, v) in self.times.iter().zip(&self.values) {
            out.push_str(&format!("{t},{v}\n"));
        }
        out
    }
}

/// Infinite-temperature autocorrelator A(t) = tr(s(t) s)/2^L of a Hermitian
/// involutory Majorana string, by Wick contraction: rotate the string's
/// modes with R(t), form the 2k × 2k antisymmetric contraction matrix of
/// rotated+static mode vectors (pairwise contractions are Euclidean dots),
/// and take its Pfaffian with the string's phase bookkeeping.
pub fn string_autocorrelator(
    h: &QuadraticHamiltonian,
    s: &MajoranaString,
    times: &[f64],
) -> Result<TimeSeries> {
    let evo = ModeEvolution::new(&h.a);
    string_autocorrelator_with(&evo, s, times)
}

/// Same as [`string_autocorrelator`] reusing an existing factorization.
pub fn string_autocorrelator_with(
    evo: &ModeEvolution,
    s: &MajoranaString,
    times: &[f64],
) -> Result<TimeSeries> {
    // Hermitian involution: phase = ± i^{k(k-1)/2}.
    let k = s.word.mode_count();
    let herm = (k * (k.saturating_sub(1)) / 2) % 4;
    if (s.phase.ipow() as usize).abs_diff(herm) % 2 != 0 {
        return Err(Error::NotInvolution);
    }
    let modes: Vec<usize> = s.word.modes.iter_ones().collect();
    // (i^p)² of the two phase factors in tr(s(t) s)
    let phase_sq = if s.phase.ipow() % 2 == 1 { -1.0 } else { 1.0 };
    let mut values = Vec::with_capacity(times.len());
    for &t in times {
        if k == 0 {
            values.push(1.0);
            continue;
        }
        let rows = evo.rows(t, &modes);
        if k == 1 {
            values.push(rows[(0, modes[0])]);
            continue;
        }
        let mut m = DMatrix::<f64>::zeros(2 * k, 2 * k);
        for a in 0..k {
            for b in 0..k {
                if a < b {
                    // rotated · rotated
                    let d = rows.row(a).dot(&rows.row(b));
                    m[(a, b)] = d;
                    m[(b, a)] = -d;
                }
                // rotated · static unit vector
                let d = rows[(a, modes[b])];
                m[(a, k + b)] = d;
                m[(k + b, a)] = -d;
                // static · static contractions of distinct modes vanish
            }
        }
        let v = phase_sq * pfaffian(&m)?;
        debug_assert!(v.abs() <= 1.0 + 1e-9, "|A(t)| = {} > 1", v.abs());
        values.push(v);
    }
    Ok(TimeSeries::new(times.to_vec(), values))
}

/// Time-weighted average of the final `window_fraction` of the series span.
pub fn plateau_value(series: &TimeSeries, window_fraction: f64) -> Result<f64> {
    if series.len() < 2 {
        return Err(Error::EmptyInput("plateau needs at least two samples".into()));
    }
    let t_end = *series.times.last().unwrap();
    let t_start = series.times[0];
    let t_lo = t_end - window_fraction * (t_end - t_start);
    let mut area = 0.0;
    let mut span = 0.0;
    for i in 0..series.len() - 1 {
        let (t0, t1) = (series.times[i], series.times[i + 1]);
        if t1 <= t_lo {
            continue;
        }
        let a = t0.max(t_lo);
        // linear interpolation at the clipped left edge
        let v0 = if t0 < t_lo {
            let f = (t_lo - t0) / (t1 - t0);
            series.values[i] * (1.0 - f) + series.values[i + 1] * f
        } else {
            series.values[i]
        };
        area += 0.5 * (v0 + series.values[i + 1]) * (t1 - a);
        span += t1 - a;
    }
    if span <= 0.0 {
        return Err(Error::EmptyInput("empty plateau window".into()));
    }
    Ok(area / span)
}

/// Width of the parameter interval where `values/reference` exits
/// [low, high]. A curve that never exits has zero width; a curve still
/// outside the band at either end does not bracket the resonance.
pub fn resonance_width(
    params: &[f64],
    values: &[f64],
    reference: f64,
    low: f64,
    high: f64,
) -> Result<f64> {
    if params.len() != values.len() || params.len() < 2 {
        return Err(Error::EmptyInput("width needs a sampled curve".into()));
    }
    let inside: Vec<bool> = values
        .iter()
        .map(|v| {
            let r = v / reference;
            r >= low && r <= high
        })
        .collect();
    if inside.iter().all(|&b| b) {
        return Ok(0.0);
    }
    if !inside[0] || !inside[inside.len() - 1] {
        return Err(Error::NoCrossing(
            "curve does not bracket the resonance".into(),
        ));
    }
    let crossing = |i: usize| -> f64 {
        // crossing of the first violated boundary between sample i and i+1
        let (v0, v1) = (values[i] / reference, values[i + 1] / reference);
        let target = if v1 < low || v0 < low { low } else { high };
        let f = (target - v0) / (v1 - v0);
        params[i] + f.clamp(0.0, 1.0) * (params[i + 1] - params[i])
    };
    let first_exit = (0..inside.len() - 1)
        .find(|&i| inside[i] && !inside[i + 1])
        .map(crossing)
        .unwrap();
    let last_entry = (0..inside.len() - 1)
        .rev()
        .find(|&i| !inside[i] && inside[i + 1])
        .map(crossing)
        .unwrap();
    Ok(last_entry - first_exit)
}

/// Logarithmic time grid from `t_min` to `t_max` with `n` points.
pub fn log_time_grid(t_min: f64, t_max: f64, n: usize) -> Vec<f64> {
    assert!(t_min > 0.0 && t_max > t_min && n >= 2);
    let (a, b) = (t_min.ln(), t_max.ln());
    (0..n)
        .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

/// Ballistic revival bound 2L/v with v = max over chains of 2·min(J, h);
/// plateau windows must end before the first revival.
pub fn ballistic_time(l: usize, couplings: &[(f64, f64)]) -> f64 {
    let v = couplings
        .iter()
        .map(|&(j, h)| 2.0 * j.abs().min(h.abs()))
        .fold(0.0f64, f64::max)
        .max(1e-12);
    2.0 * l as f64 / v
}

/// Default plateau-extraction grid: logarithmic up to
/// t_max = min(1e6, ballistic bound).
pub fn default_time_grid(l: usize, couplings: &[(f64, f64)], n: usize) -> Vec<f64> {
    let t_max = ballistic_time(l, couplings).min(1e6);
    log_time_grid(0.1, t_max, n)
}
