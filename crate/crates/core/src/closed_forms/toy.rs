//! Exact solution of the single-boundary-spin model (one spin at site -1
//! coupled to a semi-infinite ferromagnetic chain): the quadratic-branch
//! coefficient B0, the tail coefficients B_m and A_{n,m}, and the closed
//! normalization.

use crate::{Error, Result};

/// B0 branch solution. `Δ_{h²} = h1²-h2²`, `Δ_{J²} = J1²-J2²`;
/// `B0 = (J1/h2)(Δ_{h²}+Δ_{J²} ± √disc)/(2Δ_{J²})` with the negative branch
/// when `Δ_{h²}+Δ_{J²} > 0` (continuity fixes the branch at zero), which
/// selects the `(J1/J2)λ^{-1}` root of the tail recurrence.
pub fn toy_b0(j1: f64, j2: f64, h1: f64, h2: f64) -> Result<f64> {
    Ok(j1 / j2 * lambda_inv(j1, j2, h1, h2)?)
}

/// λ^{-1} = (J2/J1) B0, the geometric tail ratio; finite for J1 → 0.
fn lambda_inv(j1: f64, j2: f64, h1: f64, h2: f64) -> Result<f64> {
    if h2 == 0.0 {
        return Ok(0.0);
    }
    let dj2 = j1 * j1 - j2 * j2;
    let dh2 = h1 * h1 - h2 * h2;
    let disc = ((h1 - h2).powi(2) + dj2) * ((h1 + h2).powi(2) + dj2);
    if disc < 0.0 {
        return Err(Error::OutOfConvergenceRegion(format!(
            "negative discriminant {disc:.3e}: no real B0 (resonance region)"
        )));
    }
    let s = dh2 + dj2;
    if dj2 == 0.0 {
        if s == 0.0 {
            return Err(Error::OutOfConvergenceRegion(
                "degenerate couplings: Δ_{J²} = Δ_{h²} + Δ_{J²} = 0".into(),
            ));
        }
        return Ok(-j2 * h2 / s);
    }
    let root = if s >= 0.0 { -disc.sqrt() } else { disc.sqrt() };
    Ok(j2 / h2 * (s + root) / (2.0 * dj2))
}

/// Full coefficient evaluators for the single-boundary-spin SZM.
#[derive(Clone, Debug)]
pub struct ToySolution {
    pub j1: f64,
    pub j2: f64,
    pub h1: f64,
    pub h2: f64,
    pub b0: f64,
    pub lambda_inv: f64,
    pub alpha: f64,
    pub gamma: f64,
    pub delta_j2: f64,
    pub delta_h2: f64,
    pub negative_branch: bool,
}

impl ToySolution {
    pub fn new(j1: f64, j2: f64, h1: f64, h2: f64) -> Result<ToySolution> {
        if j1 == 0.0 || j2 == 0.0 {
            return Err(Error::InvalidArgument(
                "toy solution needs J1 ≠ 0 and J2 ≠ 0".into(),
            ));
        }
        let delta_j2 = j1 * j1 - j2 * j2;
        let delta_h2 = h1 * h1 - h2 * h2;
        let lam = lambda_inv(j1, j2, h1, h2)?;
        let b0 = j1 / j2 * lam;
        let denom = h2 * j1 - b0 * j2 * j2;
        if denom == 0.0 {
            return Err(Error::OutOfConvergenceRegion("γ pole".into()));
        }
        Ok(ToySolution {
            j1,
            j2,
            h1,
            h2,
            b0,
            lambda_inv: lam,
            alpha: (j2 * j2 - j1 * j1 + h2 * h2 - h1 * h1 + h2 * j1 * b0) / (h2 * j2),
            gamma: 1.0 / denom,
            delta_j2,
            delta_h2,
            negative_branch: delta_h2 + delta_j2 >= 0.0,
        })
    }

    /// True when |λ^{-1}| < 1 and |h2/J2| < 1 (tails decay).
    pub fn localized(&self) -> bool {
        self.lambda_inv.abs() < 1.0 && (self.h2 / self.j2).abs() < 1.0
    }

    /// B_m = (J2/J1)^m B0^{m+1} for m ≥ 0; B_{-1} = 1.
    pub fn b_coeff(&self, m: i64) -> f64 {
        match m {
            -1 => 1.0,
            m if m >= 0 => self.lambda_inv.powi(m as i32) * self.b0,
            _ => 0.0,
        }
    }

    /// A_{n,m} for -1 ≤ n < m, the two printed branches.
    pub fn a_coeff(&self, n: i64, m: i64) -> f64 {
        assert!(n >= -1 && m > n, "A_{{n,m}} needs -1 <= n < m");
        let (j1, j2, h2) = (self.j1, self.j2, self.h2);
        let hr = h2 / j2;
        if n == -1 {
            self.gamma
                * ((h2 * j1 + self.b0 * self.delta_j2) * hr.powi(m as i32)
                    - self.b0 * j1 * j1 * self.lambda_inv.powi(m as i32))
        } else {
            let k = (m - n - 1) as i32;
            self.gamma
                * (self.h1 * self.b0 / j2)
                * (h2 * self.b0 / j1).powi(n as i32)
                * (h2 * j1 * hr.powi(k) - self.b0 * j2 * j2 * self.lambda_inv.powi(k))
        }
    }

    /// N3^{-2}: the inverse squared normalization, i.e. the closed
    /// evaluation of (Σ_l B_l²)(Σ_{j<k} A_{j,k}²). With the B0 constraint
    /// eliminating h1, the geometric sums collapse to
    ///
    /// ```text
    ///          (J1²(1+B0²) - J2²B0²)² (J1 J2² - B0 h2 (J2²-J1²))
    /// N3^-2 = ---------------------------------------------------
    ///              (J1² - J2²B0²)² (J1 - B0 h2) (J2² - h2²)
    /// ```
    ///
    /// which agrees with the truncated double sum to machine precision and
    /// with the main-text h1 = 0 normalization in that limit.
    pub fn norm3_inv_sq(&self) -> f64 {
        let (b0, j1, j2, h2) = (self.b0, self.j1, self.j2, self.h2);
        let (j1s, j2s, b0s) = (j1 * j1, j2 * j2, b0 * b0);
        let num = (j1s * (1.0 + b0s) - j2s * b0s).powi(2)
            * (j1 * j2s - b0 * h2 * (j2s - j1s));
        let den = (j1s - j2s * b0s).powi(2) * (j1 - b0 * h2) * (j2s - h2 * h2);
        num / den
    }

    /// Brute-force N3^{-2} = (Σ B_l²)(Σ_{j<k} A_{j,k}²), truncated; test
    /// oracle for the rational form.
    pub fn norm3_inv_sq_truncated(&self, cutoff: i64) -> f64 {
        let sum_b: f64 = (-1..=cutoff).map(|m| self.b_coeff(m).powi(2)).sum();
        let mut sum_a = 0.0;
        for j in -1..=cutoff {
            for k in j + 1..=cutoff {
                sum_a += self.a_coeff(j, k).powi(2);
            }
        }
        sum_b * sum_a
    }
}

/// Roots of the N3^{-2} denominator bounding the convergence region in J1
/// at fixed (h1, h2, J2): returns (J1_low, J1_high).
pub fn toy_convergence_bounds(h1: f64, h2: f64, j2: f64) -> Result<(f64, f64)> {
    let lo_arg = j2 * (h1 * h1 - (h2 - j2).powi(2)) / (h2 - j2);
    let hi_arg = j2 * (-h1 * h1 + (h2 + j2).powi(2)) / (h2 + j2);
    if lo_arg < 0.0 || hi_arg < 0.0 {
        return Err(Error::OutOfConvergenceRegion(
            "no real convergence boundary for these couplings".into(),
        ));
    }
    Ok((lo_arg.sqrt(), hi_arg.sqrt()))
}

/// Main-text normalization amplitude for the h1 = 0 toy chain:
/// `N2 = (1 - w²)/√(1 - h2²/(J2²-J1²))` with `w = h2 J2/(J2²-J1²)`.
pub fn toy_n2(j1: f64, j2: f64, h2: f64) -> Result<f64> {
    let d = j2 * j2 - j1 * j1;
    let w = h2 * j2 / d;
    if w.abs() >= 1.0 || h2 * h2 >= d {
        return Err(Error::OutOfConvergenceRegion(format!(
            "h1=0 normalization diverges: w = {w:.4}"
        )));
    }
    Ok((1.0 - w * w) / (1.0 - h2 * h2 / d).sqrt())
}
