//! Order-by-order construction of the boundary strong zero mode: solve
//! [H0, Ψ^{(n)}] = -[V, Ψ^{(n-1)}] on the sparse string basis, detecting
//! resonances as right-hand-side weight on (near-)singular directions of
//! ad_{H0}.
//!
//! Both unperturbed pieces used here are sums of mutually commuting
//! strings, so ad_{H0} is block diagonal over the orbits of the strings
//! under multiplication by anticommuting H0 terms. Each block is solved by
//! a dense SVD least-squares in the minimum-norm (zero-kernel) gauge.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::models::{ChainSpec, Variant, build_spin_hamiltonian, build_xxz};
use crate::operator_algebra::{
    PauliString, PauliSum, PauliWord, Window, Word, anticommutator, commutator, hs_inner,
};
use crate::{Error, Result};

/// Which part of the Hamiltonian is kept unperturbed on the left chain.
///
/// The right chain always keeps its Ising bonds (the mode lives on the
/// right ferromagnet). A paramagnetic left chain keeps its transverse
/// fields (perturb in J1 and h2, the scheme behind the printed first and
/// second orders); a ferromagnetic left chain keeps its Ising bonds
/// including the boundary bond (perturb in h1 and h2, the regime of the
/// exact boundary solutions). XXZ always keeps all Ising parts.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum SplitScheme {
    FieldLeft,
    IsingLeft,
}

impl SplitScheme {
    pub fn for_spec(spec: &ChainSpec) -> SplitScheme {
        if spec.variant == Variant::Xxz || spec.j1.abs() > spec.h1.abs() {
            SplitScheme::IsingLeft
        } else {
            SplitScheme::FieldLeft
        }
    }
}

/// Split H into (H0, V) with [H0, σ^z_0] = 0 and H0 + V = H exactly.
pub fn split_hamiltonian(spec: &ChainSpec, scheme: SplitScheme) -> Result<(PauliSum, PauliSum)> {
    let h = match spec.variant {
        Variant::Xxz => build_xxz(spec)?,
        _ => build_spin_hamiltonian(spec)?,
    };
    let window = spec.window();
    let mut h0 = PauliSum::zero(window);
    for (word, c) in h.terms() {
        let z_only = word.x.is_zero() && !word.z.is_zero();
        let keep = match (spec.variant, scheme) {
            (Variant::Xxz, _) => z_only,
            (_, SplitScheme::IsingLeft) => z_only,
            (_, SplitScheme::FieldLeft) => {
                let (lo, hi) = word.support(&window).unwrap_or((0, 0));
                let x_field = word.z.is_zero() && lo == hi;
                (x_field && lo < 0) || (z_only && lo >= 0)
            }
        };
        if keep {
            h0.add_word(word.clone(), c);
        }
    }
    let mut v = h.clone();
    v.add_assign(&h0.scaled(-1.0));
    Ok((h0, v))
}

/// Coupling values at which something happened; serialized into reports.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Couplings {
    pub j1: f64,
    pub j2: f64,
    pub h1: f64,
    pub h2: f64,
    pub k: f64,
}

impl From<&ChainSpec> for Couplings {
    fn from(s: &ChainSpec) -> Couplings {
        Couplings {
            j1: s.j1,
            j2: s.j2,
            h1: s.h1,
            h2: s.h2,
            k: s.k,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ResonanceReport {
    pub location: Couplings,
    pub order_detected: usize,
    /// display form of the strings that would diverge
    pub kernel_strings: Vec<String>,
    pub smallest_singular_value: f64,
}

/// The perturbative expansion: orders[n] = Ψ^{(n)}, order 0 is σ^z_0.
#[derive(Clone, Debug)]
pub struct SzmExpansion {
    pub window: Window,
    pub scheme: SplitScheme,
    pub orders: Vec<PauliSum>,
    pub resonances: Vec<ResonanceReport>,
    pub truncation_order: usize,
    pub support_radius: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct SolverOptions {
    /// ad_{H0} singular values below this (energy units) count as kernel
    pub resonance_tol: f64,
    /// relative residual allowed for an accepted order
    pub residual_tol: f64,
    /// relative right-hand-side weight for a direction to count as needed
    pub rhs_overlap_tol: f64,
    /// safety cap on the orbit-closure string count
    pub max_strings: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            resonance_tol: 1e-8,
            residual_tol: 1e-10,
            rhs_overlap_tol: 1e-7,
            max_strings: 1 << 16,
        }
    }
}

/// Diagnostics of one order's linear solve.
#[derive(Clone, Debug)]
pub struct OrderDiagnostics {
    /// smallest singular value among directions the rhs actually needs
    pub needed_sigma_min: f64,
    /// relative residual of the least-squares solve
    pub residual_rel: f64,
    /// strings carrying a near-singular needed direction, if any
    pub obstruction_strings: Vec<String>,
}

/// Minimum-norm solution X of [H0, X] = -rhs on the orbit closure of the
/// rhs strings, with resonance diagnostics.
pub fn solve_commutator_equation(
    h0: &PauliSum,
    rhs: &PauliSum,
    options: &SolverOptions,
) -> Result<(PauliSum, OrderDiagnostics)> {
    let window = *h0.window();
    let h0_terms: Vec<(PauliWord, f64)> = h0.terms().map(|(w, c)| (w.clone(), c)).collect();

    // Orbit closure of the rhs strings under multiplication by
    // anticommuting H0 terms. The set of anticommuting terms is constant
    // on each orbit (H0 terms commute pairwise), so orbits are the blocks
    // of ad_{H0}.
    let mut index: BTreeMap<PauliWord, usize> = BTreeMap::new();
    let mut strings: Vec<PauliWord> = Vec::new();
    let mut queue: Vec<usize> = Vec::new();
    for (w, _) in rhs.terms() {
        if !index.contains_key(w) {
            index.insert(w.clone(), strings.len());
            strings.push(w.clone());
            queue.push(strings.len() - 1);
        }
    }
    while let Some(i) = queue.pop() {
        let s = strings[i].clone();
        for (t, _) in &h0_terms {
            if t.commutes(&s) {
                continue;
            }
            let (w, _) = t.mul(&s);
            if !index.contains_key(&w) {
                index.insert(w.clone(), strings.len());
                strings.push(w.clone());
                queue.push(strings.len() - 1);
                if strings.len() > options.max_strings {
                    return Err(Error::SupportOverflow {
                        site: window.highest_site(),
                    });
                }
            }
        }
    }

    // connected components of the orbit graph
    let mut component_of = vec![usize::MAX; strings.len()];
    let mut n_components = 0usize;
    for start in 0..strings.len() {
        if component_of[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        component_of[start] = n_components;
        while let Some(i) = stack.pop() {
            for (t, _) in &h0_terms {
                if t.commutes(&strings[i]) {
                    continue;
                }
                let (w, _) = t.mul(&strings[i]);
                let j = index[&w];
                if component_of[j] == usize::MAX {
                    component_of[j] = n_components;
                    stack.push(j);
                }
            }
        }
        n_components += 1;
    }
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); n_components];
    for (i, &c) in component_of.iter().enumerate() {
        members[c].push(i);
    }

    let rhs_norm = rhs.hs_norm().max(1e-300);
    let mut solution = PauliSum::zero(window);
    let mut residual_sq = 0.0;
    let mut needed_sigma_min = f64::INFINITY;
    let mut obstruction_strings = Vec::new();

    for group in &members {
        let dim = group.len();
        let local: BTreeMap<usize, usize> =
            group.iter().enumerate().map(|(l, &g)| (g, l)).collect();
        let mut b = DVector::<f64>::zeros(dim);
        let mut any = false;
        for (l, &g) in group.iter().enumerate() {
            b[l] = rhs.coefficient(&strings[g]);
            any |= b[l] != 0.0;
        }
        if !any {
            continue;
        }
        let mut k = DMatrix::<f64>::zeros(dim, dim);
        for (col, &gj) in group.iter().enumerate() {
            let sj = &strings[gj];
            for (t, c) in &h0_terms {
                if t.commutes(sj) {
                    continue;
                }
                let (w, tpow) = t.mul(sj);
                // [c·Herm(t), Herm(s)] = i · 2c·(-1)^{(m-1)/2} Herm(ts)
                let m = (t.herm_ipow() as i64 + sj.herm_ipow() as i64 + tpow as i64
                    - w.herm_ipow() as i64)
                    .rem_euclid(4);
                debug_assert_eq!(m % 2, 1);
                let sign = if (m - 1).rem_euclid(4) >= 2 { -1.0 } else { 1.0 };
                k[(local[&index[&w]], col)] += 2.0 * c * sign;
            }
        }
        let svd = k.clone().svd(true, true);
        let u = svd.u.as_ref().unwrap();
        let vt = svd.v_t.as_ref().unwrap();
        let proj = u.transpose() * &b;
        let mut x = DVector::<f64>::zeros(dim);
        for r in 0..dim {
            let sigma = svd.singular_values[r];
            if proj[r].abs() > options.rhs_overlap_tol * rhs_norm {
                needed_sigma_min = needed_sigma_min.min(sigma);
                if sigma <= options.resonance_tol {
                    for (l, &gj) in group.iter().enumerate() {
                        if vt[(r, l)].abs() > 0.3 {
                            let mut s = String::new();
                            strings[gj].fmt_word(&window, &mut s);
                            obstruction_strings.push(s);
                        }
                    }
                }
            }
            if sigma > options.resonance_tol {
                let factor = -proj[r] / sigma;
                for l in 0..dim {
                    x[l] += factor * vt[(r, l)];
                }
            }
        }
        residual_sq += (&k * &x + &b).norm_squared();
        for (l, &g) in group.iter().enumerate() {
            if x[l] != 0.0 {
                solution.add_word(strings[g].clone(), x[l]);
            }
        }
    }

    Ok((
        solution,
        OrderDiagnostics {
            needed_sigma_min,
            residual_rel: residual_sq.sqrt() / rhs_norm,
            obstruction_strings,
        },
    ))
}

/// One order of the expansion: Ψ^{(n)} from Ψ^{(n-1)}.
pub fn solve_order(
    h0: &PauliSum,
    v: &PauliSum,
    prev: &PauliSum,
    order: usize,
    options: &SolverOptions,
) -> Result<PauliSum> {
    let rhs = commutator(v, prev);
    if rhs.is_zero() {
        return Ok(PauliSum::zero(*h0.window()));
    }
    let (solution, diag) = solve_commutator_equation(h0, &rhs, options)?;
    if diag.residual_rel > options.residual_tol {
        return Err(Error::ResonanceDetected {
            order,
            sigma: diag.needed_sigma_min,
        });
    }
    Ok(solution)
}

/// Sites farther than n_max + 2 from the boundary cannot influence the
/// expansion (hop counting plus the one-site orbit margin), so the
/// working window is the chain truncated there.
fn truncated_spec(spec: &ChainSpec, n_max: usize) -> ChainSpec {
    let cap = n_max + 2;
    let mut s = spec.clone();
    s.n_left = s.n_left.min(cap);
    s.n_right = s.n_right.min(cap + 1);
    s
}

/// Assemble the expansion through `n_max`, truncating at the last healthy
/// order when a resonance obstructs the solve.
pub fn build_szm(spec: &ChainSpec, n_max: usize, options: &SolverOptions) -> Result<SzmExpansion> {
    build_szm_with_scheme(spec, n_max, SplitScheme::for_spec(spec), options)
}

pub fn build_szm_with_scheme(
    spec: &ChainSpec,
    n_max: usize,
    scheme: SplitScheme,
    options: &SolverOptions,
) -> Result<SzmExpansion> {
    let spec = truncated_spec(spec, n_max);
    let window = spec.window();
    let (h0, v) = split_hamiltonian(&spec, scheme)?;
    let mut zero = PauliSum::zero(window);
    zero.add_string(&PauliString::sigma(&window, 0, 'Z'), 1.0);
    debug_assert!(commutator(&h0, &zero).is_zero(), "H0 must conserve σ^z_0");

    let mut expansion = SzmExpansion {
        window,
        scheme,
        orders: vec![zero],
        resonances: Vec::new(),
        truncation_order: 0,
        support_radius: 0,
    };
    for n in 1..=n_max {
        let rhs = commutator(&v, &expansion.orders[n - 1]);
        if rhs.is_zero() {
            break;
        }
        let (solution, diag) = solve_commutator_equation(&h0, &rhs, options)?;
        if diag.residual_rel > options.residual_tol {
            expansion.resonances.push(ResonanceReport {
                location: Couplings::from(&spec),
                order_detected: n,
                kernel_strings: diag.obstruction_strings,
                smallest_singular_value: diag.needed_sigma_min,
            });
            break;
        }
        expansion.truncation_order = n;
        expansion.support_radius = expansion.support_radius.max(solution.support_radius());
        expansion.orders.push(solution);
    }
    Ok(expansion)
}

impl SzmExpansion {
    /// N² = 1/Σ c²: the squared σ^z_0 weight of the normalized mode.
    pub fn predicted_overlap(&self) -> f64 {
        let total: f64 = self
            .orders
            .iter()
            .map(|o| o.terms().map(|(_, c)| c * c).sum::<f64>())
            .sum();
        1.0 / total
    }

    /// Sum of all orders (the truncated mode itself).
    pub fn total(&self) -> PauliSum {
        let mut acc = PauliSum::zero(self.window);
        for o in &self.orders {
            acc.add_assign(o);
        }
        acc
    }

    /// ‖[H, Ψ_trunc]‖/‖Ψ_trunc‖ for any Hamiltonian on the same window.
    pub fn commutator_residual(&self, h: &PauliSum) -> f64 {
        let total = self.total();
        commutator(h, &total).hs_norm() / total.hs_norm()
    }

    /// Text dump: `# order n` headers followed by the operator sum lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (n, o) in self.orders.iter().enumerate() {
            out.push_str(&format!("# order {n}\n"));
            out.push_str(&o.to_text());
        }
        out
    }

    /// Re-gauge kernel components so that Ψ² = 1 order by order (the
    /// paper's printed second order uses this convention). Each added
    /// string is verified to commute with H0 so the residual identity
    /// survives the re-gauge.
    pub fn apply_unitarity_gauge(&mut self, h0: &PauliSum) -> Result<()> {
        let window = self.window;
        let z0 = {
            let mut s = PauliSum::zero(window);
            s.add_string(&PauliString::sigma(&window, 0, 'Z'), 1.0);
            s
        };
        let z0_word = PauliWord::single(&window, 0, 'Z');
        for n in 1..self.orders.len() {
            // order-n piece of Ψ² from the already-fixed lower orders
            let mut deficit = PauliSum::zero(window);
            for a in 1..n {
                let b = n - a;
                if a < b {
                    deficit.add_assign(&anticommutator(&self.orders[a], &self.orders[b]));
                } else if a == b {
                    deficit
                        .add_assign(&anticommutator(&self.orders[a], &self.orders[b]).scaled(0.5));
                }
            }
            // required: {σ^z_0, Ψ^{(n)}} = -deficit
            let mut r = anticommutator(&z0, &self.orders[n]);
            r.add_assign(&deficit);
            r.prune(1e-14);
            if r.is_zero() {
                continue;
            }
            let mut kappa = PauliSum::zero(window);
            for (t, c) in r.terms() {
                if !t.commutes(&z0_word) {
                    return Err(Error::InvalidArgument(
                        "unitarity deficit has a σ^z_0-anticommuting term".into(),
                    ));
                }
                let (w, tpow) = z0_word.mul(t);
                let m = (z0_word.herm_ipow() as i64 + t.herm_ipow() as i64 + tpow as i64
                    - w.herm_ipow() as i64)
                    .rem_euclid(4);
                debug_assert_eq!(m % 2, 0);
                let sign = if m >= 2 { -1.0 } else { 1.0 };
                // {σ^z_0, c_w (σ^z_0 t)} = 2 c_w σ^z_0·(σ^z_0 t) ⇒ κ_w = -c_t/2
                kappa.add_word(w, -0.5 * c * sign);
            }
            let kappa_comm = commutator(h0, &kappa).hs_norm();
            if kappa_comm > 1e-9 * kappa.hs_norm().max(1e-300) {
                return Err(Error::InvalidArgument(format!(
                    "unitarity gauge correction leaves ker(ad_H0) at order {n} \
                     (‖[H0,κ]‖ = {kappa_comm:.3e})"
                )));
            }
            self.orders[n].add_assign(&kappa);
        }
        Ok(())
    }

    /// hs_inner of each order with σ^z_0 (gauge bookkeeping).
    pub fn z0_components(&self) -> Vec<f64> {
        let window = self.window;
        let mut z0 = PauliSum::zero(window);
        z0.add_string(&PauliString::sigma(&window, 0, 'Z'), 1.0);
        self.orders.iter().map(|o| hs_inner(&z0, o)).collect()
    }
}

/// Which coupling a sweep varies.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, serde::Deserialize)]
pub enum SweepAxis {
    J1,
    H1,
    H2,
    K,
}

impl SweepAxis {
    pub fn apply(&self, spec: &ChainSpec, value: f64) -> ChainSpec {
        let mut s = spec.clone();
        match self {
            SweepAxis::J1 => s.j1 = value,
            SweepAxis::H1 => s.h1 = value,
            SweepAxis::H2 => s.h2 = value,
            SweepAxis::K => s.k = value,
        }
        s
    }
}

/// One grid point of a pole scan.
#[derive(Clone, Debug, Serialize)]
pub struct PoleScanPoint {
    pub value: f64,
    /// min over orders of the needed smallest singular value
    pub needed_sigma_min: f64,
    /// order at which that minimum occurred
    pub order: usize,
    pub resonant: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PoleScan {
    pub axis: SweepAxis,
    pub points: Vec<PoleScanPoint>,
    pub reports: Vec<ResonanceReport>,
}

/// Scan a coupling axis, recording the needed-singular-value landscape and
/// clustering dips below `scan_tol` into resonance reports.
pub fn pole_scan(
    spec: &ChainSpec,
    axis: SweepAxis,
    grid: &[f64],
    n_max: usize,
    scan_tol: f64,
    options: &SolverOptions,
) -> Result<PoleScan> {
    if grid.is_empty() {
        return Err(Error::EmptyInput("pole scan needs a grid".into()));
    }
    let evaluate = |&value: &f64| -> Result<PoleScanPoint> {
        let point_spec = axis.apply(spec, value);
        let scheme = SplitScheme::for_spec(&point_spec);
        let spec_t = truncated_spec(&point_spec, n_max);
        let (h0, v) = split_hamiltonian(&spec_t, scheme)?;
        let window = spec_t.window();
        let mut prev = PauliSum::zero(window);
        prev.add_string(&PauliString::sigma(&window, 0, 'Z'), 1.0);
        let mut sigma_min = f64::INFINITY;
        let mut at_order = 0;
        for n in 1..=n_max {
            let rhs = commutator(&v, &prev);
            if rhs.is_zero() {
                break;
            }
            let (solution, diag) = solve_commutator_equation(&h0, &rhs, options)?;
            if diag.needed_sigma_min < sigma_min {
                sigma_min = diag.needed_sigma_min;
                at_order = n;
            }
            if diag.residual_rel > options.residual_tol {
                break;
            }
            prev = solution;
        }
        Ok(PoleScanPoint {
            value,
            needed_sigma_min: sigma_min,
            order: at_order,
            resonant: sigma_min < scan_tol,
        })
    };

    #[cfg(feature = "parallel")]
    let evaluated: Result<Vec<PoleScanPoint>> = {
        use rayon::prelude::*;
        grid.par_iter().map(evaluate).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let evaluated: Result<Vec<PoleScanPoint>> = grid.iter().map(evaluate).collect();

    let mut points = evaluated?;
    points.sort_by(|a, b| a.value.total_cmp(&b.value));

    // cluster contiguous resonant points; report each cluster's argmin
    let mut reports = Vec::new();
    let mut i = 0;
    while i < points.len() {
        if !points[i].resonant {
            i += 1;
            continue;
        }
        let mut j = i;
        while j + 1 < points.len() && points[j + 1].resonant {
            j += 1;
        }
        let best = (i..=j)
            .min_by(|&a, &b| {
                points[a]
                    .needed_sigma_min
                    .total_cmp(&points[b].needed_sigma_min)
            })
            .unwrap();
        let loc_spec = axis.apply(spec, points[best].value);
        reports.push(ResonanceReport {
            location: Couplings::from(&loc_spec),
            order_detected: points[best].order,
            kernel_strings: Vec::new(),
            smallest_singular_value: points[best].needed_sigma_min,
        });
        i = j + 1;
    }
    Ok(PoleScan {
        axis,
        points,
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn options() -> SolverOptions {
        SolverOptions::default()
    }

    #[test]
    fn split_partitions_exactly() {
        let spec = ChainSpec::tfim(3, 4, 0.4, 1.0, 0.7, 0.25);
        for scheme in [SplitScheme::FieldLeft, SplitScheme::IsingLeft] {
            let (h0, v) = split_hamiltonian(&spec, scheme).unwrap();
            let mut total = h0.clone();
            total.add_assign(&v);
            assert_eq!(total, build_spin_hamiltonian(&spec).unwrap());
            let window = spec.window();
            let mut z0 = PauliSum::zero(window);
            z0.add_string(&PauliString::sigma(&window, 0, 'Z'), 1.0);
            assert!(commutator(&h0, &z0).is_zero());
        }
    }

    #[test]
    fn field_left_term_count() {
        // V at K = 0 holds the J1 bonds and the h2 fields:
        // n_left bonds + n_right fields.
        let spec = ChainSpec::tfim(3, 4, 0.4, 1.0, 0.7, 0.25);
        let (_, v) = split_hamiltonian(&spec, SplitScheme::FieldLeft).unwrap();
        assert_eq!(v.len(), spec.n_left + spec.n_right);
    }

    #[test]
    fn first_order_matches_printed_coefficient() {
        // Ψ^(1) = (h2/J2) σ^x_0 σ^z_1, a single term.
        let spec = ChainSpec::tfim(2, 4, 0.3, 1.1, 0.45, 0.27);
        let exp = build_szm_with_scheme(&spec, 1, SplitScheme::FieldLeft, &options()).unwrap();
        assert_eq!(exp.orders.len(), 2);
        let o1 = &exp.orders[1];
        assert_eq!(o1.len(), 1);
        let window = exp.window;
        let (xz, _) =
            PauliWord::single(&window, 0, 'X').mul(&PauliWord::single(&window, 1, 'Z'));
        assert!((o1.coefficient(&xz) - spec.h2 / spec.j2).abs() < 1e-13);
    }

    #[test]
    fn already_conserved_stops_immediately() {
        // J1 = h2 = 0: σ^z_0 commutes with H; the expansion is order 0 only.
        let spec = ChainSpec::tfim(2, 3, 0.0, 1.0, 0.4, 0.0);
        let exp = build_szm(&spec, 5, &options()).unwrap();
        assert_eq!(exp.orders.len(), 1);
        assert!(exp.resonances.is_empty());
    }

    #[test]
    fn residual_identity_holds_per_order() {
        let spec = ChainSpec::tfim(3, 5, 0.35, 1.0, 0.55, 0.2);
        let scheme = SplitScheme::FieldLeft;
        let exp = build_szm_with_scheme(&spec, 5, scheme, &options()).unwrap();
        let spec_t = super::truncated_spec(&spec, 5);
        let (h0, v) = split_hamiltonian(&spec_t, scheme).unwrap();
        for n in 1..exp.orders.len() {
            let mut should_vanish = commutator(&h0, &exp.orders[n]);
            let drive = commutator(&v, &exp.orders[n - 1]);
            should_vanish.add_assign(&drive);
            let rel = should_vanish.hs_norm() / drive.hs_norm();
            assert!(rel < 1e-10, "residual identity failed at order {n}: {rel}");
        }
    }

    #[test]
    fn orders_are_hermitian_and_local() {
        let spec = ChainSpec::tfim(3, 5, 0.35, 1.0, 0.55, 0.2);
        let exp = build_szm(&spec, 4, &options()).unwrap();
        for (n, o) in exp.orders.iter().enumerate() {
            assert!(!o.is_antihermitian_flagged());
            assert!(
                o.support_radius() <= n + 1,
                "order {n} reaches {} sites",
                o.support_radius()
            );
        }
    }

    #[test]
    fn min_norm_gauge_has_zero_z0_component() {
        let spec = ChainSpec::tfim(2, 4, 0.3, 1.0, 0.5, 0.25);
        let exp = build_szm(&spec, 4, &options()).unwrap();
        for (n, c) in exp.z0_components().iter().enumerate().skip(1) {
            assert!(c.abs() < 1e-12, "order {n} has σ^z_0 weight {c}");
        }
    }

    #[test]
    fn ferro_para_pole_detected_at_h1_equals_j2() {
        let spec = ChainSpec::tfim(3, 4, 0.2, 1.0, 0.5, 0.15);
        let grid: Vec<f64> = (0..=40).map(|i| 0.5 + 0.025 * i as f64).collect();
        let scan = pole_scan(&spec, SweepAxis::H1, &grid, 3, 0.05, &options()).unwrap();
        assert_eq!(scan.reports.len(), 1, "expected exactly one pole family");
        assert!(
            (scan.reports[0].location.h1 - 1.0).abs() < 0.026,
            "pole at h1 = {}",
            scan.reports[0].location.h1
        );
    }
}
