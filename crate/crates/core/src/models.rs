//! Hamiltonian builders: two transverse-field Ising chains coupled
//! end-to-end (optionally with XX interactions), the coupled XXZ chains,
//! and the free-fermion forms of the quadratic models.
//!
//! Single-particle convention, fixed here and used everywhere downstream:
//! `H = (i/4) Σ_{jk} A_{jk} c_j c_k` with `A` real antisymmetric, so
//! Heisenberg evolution is `c(t) = exp(A t) c(0)`. A lone transverse field
//! h on one site gives the 2×2 block `A = [[0, -2h], [2h, 0]]`, i.e. an
//! excitation energy 2h; an Ising coupling J contributes `A_{b_j, a_{j+1}}
//! = -2J`.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::operator_algebra::{
    JwConvention, MajoranaString, MajoranaSum, MajoranaWord, PauliString, PauliSum, PauliWord,
    Phase, Site, Window, Word, jordan_wigner_inverse,
};
use crate::{Error, Result};

/// Which model family a [`ChainSpec`] describes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "TFIM")]
    Tfim,
    #[serde(rename = "TFIM_XX")]
    TfimXx,
    #[serde(rename = "XXZ")]
    Xxz,
    #[serde(rename = "FERMION")]
    Fermion,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Variant::Tfim => "TFIM",
            Variant::TfimXx => "TFIM_XX",
            Variant::Xxz => "XXZ",
            Variant::Fermion => "FERMION",
        };
        write!(f, "{s}")
    }
}

/// Couplings and geometry of the coupled-chain system; the single source of
/// truth for every builder. Site 0 is the first site of the right chain and
/// the `J1` bond `(-1, 0)` couples the chains.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainSpec {
    pub n_left: usize,
    pub n_right: usize,
    #[serde(rename = "J1")]
    pub j1: f64,
    #[serde(rename = "J2")]
    pub j2: f64,
    pub h1: f64,
    pub h2: f64,
    #[serde(rename = "K", default)]
    pub k: f64,
    pub variant: Variant,
}

impl ChainSpec {
    /// Plain TFIM spec with K = 0.
    pub fn tfim(n_left: usize, n_right: usize, j1: f64, j2: f64, h1: f64, h2: f64) -> ChainSpec {
        ChainSpec {
            n_left,
            n_right,
            j1,
            j2,
            h1,
            h2,
            k: 0.0,
            variant: Variant::Tfim,
        }
    }

    pub fn window(&self) -> Window {
        Window::new(self.n_left, self.n_right)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_right == 0 {
            return Err(Error::InvalidArgument("n_right must be >= 1".into()));
        }
        if self.k != 0.0 && self.variant != Variant::TfimXx {
            return Err(Error::InvalidArgument(format!(
                "K = {} requires variant TFIM_XX",
                self.k
            )));
        }
        Ok(())
    }

    fn expect_variant(&self, allowed: &[Variant], op: &str) -> Result<()> {
        if allowed.contains(&self.variant) {
            Ok(())
        } else {
            Err(Error::VariantMismatch {
                expected: format!("{op}: one of {allowed:?}"),
                found: self.variant.to_string(),
            })
        }
    }
}

/// Real antisymmetric single-particle matrix of a quadratic Majorana
/// Hamiltonian, `H = (i/4) Σ A_{jk} c_j c_k`.
#[derive(Clone, Debug)]
pub struct QuadraticHamiltonian {
    pub window: Window,
    pub a: DMatrix<f64>,
}

impl QuadraticHamiltonian {
    pub fn n_modes(&self) -> usize {
        self.a.nrows()
    }

    pub fn antisymmetry_defect(&self) -> f64 {
        let n = self.a.nrows();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..=i {
                worst = worst.max((self.a[(i, j)] + self.a[(j, i)]).abs());
            }
        }
        worst
    }
}

fn zz(window: &Window, j: Site) -> PauliWord {
    let (w, _) = PauliWord::single(window, j, 'Z').mul(&PauliWord::single(window, j + 1, 'Z'));
    w
}

fn xx(window: &Window, j: Site) -> PauliWord {
    let (w, _) = PauliWord::single(window, j, 'X').mul(&PauliWord::single(window, j + 1, 'X'));
    w
}

fn yy(window: &Window, j: Site) -> PauliWord {
    let (w, _) = PauliWord::single(window, j, 'Y').mul(&PauliWord::single(window, j + 1, 'Y'));
    w
}

/// The coupled-chain spin Hamiltonian: Ising bonds (`J1` on the left chain
/// and the boundary bond, `J2` on the right), transverse fields (`h1`, `h2`)
/// and, for `TFIM_XX`, XX bonds `-K σ^x_j σ^x_{j+1}` on every bond.
pub fn build_spin_hamiltonian(spec: &ChainSpec) -> Result<PauliSum> {
    spec.expect_variant(&[Variant::Tfim, Variant::TfimXx], "build_spin_hamiltonian")?;
    spec.validate()?;
    let window = spec.window();
    let mut h = PauliSum::zero(window);
    for j in window.lowest_site()..=-1 {
        h.add_word(zz(&window, j), -spec.j1);
    }
    for j in 0..window.highest_site() {
        h.add_word(zz(&window, j), -spec.j2);
    }
    for j in window.lowest_site()..=-1 {
        h.add_word(PauliWord::single(&window, j, 'X'), -spec.h1);
    }
    for j in 0..=window.highest_site() {
        h.add_word(PauliWord::single(&window, j, 'X'), -spec.h2);
    }
    if spec.k != 0.0 {
        for j in window.lowest_site()..window.highest_site() {
            h.add_word(xx(&window, j), -spec.k);
        }
    }
    Ok(h)
}

/// Same model in the Majorana string algebra (the Jordan-Wigner image of
/// [`build_spin_hamiltonian`] under the left-edge convention):
/// `-iJ Σ b_j a_{j+1} - ih Σ a_j b_j`.
pub fn build_majorana_hamiltonian(spec: &ChainSpec) -> Result<MajoranaSum> {
    if spec.k != 0.0 {
        return Err(Error::NotQuadratic {
            what: "build_majorana_hamiltonian",
            k: spec.k,
        });
    }
    spec.expect_variant(
        &[Variant::Tfim, Variant::Fermion],
        "build_majorana_hamiltonian",
    )?;
    spec.validate()?;
    let window = spec.window();
    let mut h = MajoranaSum::zero(window);
    let field = |site: Site| {
        MajoranaWord::from_modes(
            &window,
            &[window.mode_a(site).unwrap(), window.mode_b(site).unwrap()],
        )
    };
    let bond = |site: Site| {
        MajoranaWord::from_modes(
            &window,
            &[window.mode_b(site).unwrap(), window.mode_a(site + 1).unwrap()],
        )
    };
    for j in window.lowest_site()..=-1 {
        h.add_word(bond(j), -spec.j1);
    }
    for j in 0..window.highest_site() {
        h.add_word(bond(j), -spec.j2);
    }
    for j in window.lowest_site()..=-1 {
        h.add_word(field(j), -spec.h1);
    }
    for j in 0..=window.highest_site() {
        h.add_word(field(j), -spec.h2);
    }
    Ok(h)
}

/// Single-particle matrix of the quadratic model. Requires K = 0.
pub fn build_quadratic(spec: &ChainSpec) -> Result<QuadraticHamiltonian> {
    if spec.k != 0.0 {
        return Err(Error::NotQuadratic {
            what: "build_quadratic",
            k: spec.k,
        });
    }
    spec.expect_variant(&[Variant::Tfim, Variant::Fermion], "build_quadratic")?;
    spec.validate()?;
    let window = spec.window();
    let n = window.n_modes();
    let mut a = DMatrix::<f64>::zeros(n, n);
    let mut put = |r: usize, c: usize, v: f64| {
        a[(r, c)] += v;
        a[(c, r)] -= v;
    };
    for j in window.lowest_site()..=window.highest_site() {
        let h = if j < 0 { spec.h1 } else { spec.h2 };
        put(window.mode_a(j).unwrap(), window.mode_b(j).unwrap(), -2.0 * h);
    }
    for j in window.lowest_site()..window.highest_site() {
        let jc = if j < 0 { spec.j1 } else { spec.j2 };
        put(
            window.mode_b(j).unwrap(),
            window.mode_a(j + 1).unwrap(),
            -2.0 * jc,
        );
    }
    Ok(QuadraticHamiltonian { window, a })
}

/// Coupled XXZ chains: `-Σ [J σ^z σ^z + h (σ^x σ^x + σ^y σ^y)]` with
/// (J1, h1) on the left bonds including the boundary bond and (J2, h2) on
/// the right. Conserves total σ^z magnetization exactly.
pub fn build_xxz(spec: &ChainSpec) -> Result<PauliSum> {
    spec.expect_variant(&[Variant::Xxz], "build_xxz")?;
    spec.validate()?;
    let window = spec.window();
    let mut h = PauliSum::zero(window);
    for j in window.lowest_site()..window.highest_site() {
        let (jc, hc) = if j < 0 {
            (spec.j1, spec.h1)
        } else {
            (spec.j2, spec.h2)
        };
        h.add_word(zz(&window, j), -jc);
        h.add_word(xx(&window, j), -hc);
        h.add_word(yy(&window, j), -hc);
    }
    Ok(h)
}

/// The spin Hamiltonian under the center-wrapped Jordan-Wigner string:
/// identical to [`build_spin_hamiltonian`] except that the boundary bond is
/// dressed by the global spin flip, `-J1 (Π_k σ^x_k) σ^z_{-1} σ^z_0`.
pub fn build_wrapped_spin_hamiltonian(spec: &ChainSpec) -> Result<PauliSum> {
    spec.expect_variant(&[Variant::Tfim], "build_wrapped_spin_hamiltonian")?;
    spec.validate()?;
    let window = spec.window();
    let mut h = PauliSum::zero(window);
    for j in window.lowest_site()..=-2 {
        h.add_word(zz(&window, j), -spec.j1);
    }
    for j in 0..window.highest_site() {
        h.add_word(zz(&window, j), -spec.j2);
    }
    for j in window.lowest_site()..=-1 {
        h.add_word(PauliWord::single(&window, j, 'X'), -spec.h1);
    }
    for j in 0..=window.highest_site() {
        h.add_word(PauliWord::single(&window, j, 'X'), -spec.h2);
    }
    if spec.n_left > 0 && spec.j1 != 0.0 {
        // The boundary bond dressed by the global flip. With the string
        // definitions fixed in `operator_algebra::jw`, the fermionic bond
        // -iJ1 b_{-1} a_0 maps back to +J1 (Π σ^x) σ^z_{-1} σ^z_0: the
        // dressing flips the bond's sign along with making it nonlocal.
        let mut word = zz(&window, -1);
        for j in window.sites() {
            let (w, _) = word.mul(&PauliWord::single(&window, j, 'X'));
            word = w;
        }
        h.add_string(&PauliString { word, phase: Phase::ONE }, spec.j1);
    }
    Ok(h)
}

/// Reference consistency route: the wrapped Hamiltonian is the
/// center-convention spin image of the Majorana Hamiltonian.
pub fn wrapped_via_jw(spec: &ChainSpec) -> Result<PauliSum> {
    let maj = build_majorana_hamiltonian(spec)?;
    Ok(jordan_wigner_inverse(&maj, JwConvention::CenterWrapped))
}

/// The Majorana string `a_0 + tails` is evaluated against this Hermitian
/// boundary string; convenience re-export for dynamics call sites.
pub fn boundary_a0(window: &Window) -> MajoranaString {
    MajoranaString::hermitian(window, &[window.mode_a(0).unwrap()])
}
