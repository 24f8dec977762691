//! Exact sparse algebra of Pauli strings and Majorana strings on a 1D
//! lattice with signed site indices.
//!
//! Site `0` is the boundary site: a chain with `n_left` sites to the left
//! and `n_right` to the right occupies sites `-n_left ..= n_right - 1`.
//! Phases are exact elements of Z4; coefficients are `f64`.

mod jw;
mod majorana;
mod mask;
mod pauli;
mod phase;
mod sum;

pub use jw::{JwConvention, boundary_spin_string, jordan_wigner, jordan_wigner_inverse};
pub use majorana::{MajoranaString, MajoranaWord, majorana_multiply};
pub use mask::Mask;
pub use pauli::{PauliString, PauliWord, pauli_multiply};
pub use phase::Phase;
pub use sum::{MajoranaSum, OperatorSum, PauliSum, anticommutator, commutator, hs_inner};

use serde::{Deserialize, Serialize};

/// Signed lattice coordinate; the boundary spin lives at site 0.
pub type Site = i32;

/// Finite window of sites `-n_left ..= n_right - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Window {
    pub n_left: usize,
    pub n_right: usize,
}

impl Window {
    pub fn new(n_left: usize, n_right: usize) -> Window {
        Window { n_left, n_right }
    }

    /// Total number of sites.
    pub fn len(&self) -> usize {
        self.n_left + self.n_right
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of Majorana modes (two per site).
    pub fn n_modes(&self) -> usize {
        2 * self.len()
    }

    pub fn lowest_site(&self) -> Site {
        -(self.n_left as Site)
    }

    pub fn highest_site(&self) -> Site {
        self.n_right as Site - 1
    }

    pub fn contains(&self, site: Site) -> bool {
        site >= self.lowest_site() && site <= self.highest_site()
    }

    pub fn site_to_bit(&self, site: Site) -> Option<usize> {
        if self.contains(site) {
            Some((site + self.n_left as Site) as usize)
        } else {
            None
        }
    }

    pub fn bit_to_site(&self, bit: usize) -> Site {
        bit as Site - self.n_left as Site
    }

    /// Mode index of `a_j` (even) in the fixed global ordering a_j < b_j.
    pub fn mode_a(&self, site: Site) -> Option<usize> {
        self.site_to_bit(site).map(|b| 2 * b)
    }

    /// Mode index of `b_j` (odd).
    pub fn mode_b(&self, site: Site) -> Option<usize> {
        self.site_to_bit(site).map(|b| 2 * b + 1)
    }

    /// (site, is_b) of a mode index.
    pub fn mode_to_site(&self, mode: usize) -> (Site, bool) {
        (self.bit_to_site(mode / 2), mode % 2 == 1)
    }

    pub fn sites(&self) -> impl Iterator<Item = Site> {
        self.lowest_site()..=self.highest_site()
    }
}

/// Common behaviour of the phase-free part of a string operator.
///
/// A bare word `W` is turned into the unique Hermitian canonical string
/// `i^{herm_ipow} W`; operator sums store coefficients against these
/// Hermitian representatives so stored phases are always +1.
pub trait Word: Clone + Eq + Ord + std::hash::Hash + std::fmt::Debug {
    fn identity(window: &Window) -> Self;
    fn is_identity(&self) -> bool;

    /// Power of i that makes the bare word Hermitian.
    fn herm_ipow(&self) -> u8;

    /// Bare-word product: `W_a · W_b = i^t · W_c`; returns `(W_c, t)`.
    fn mul(&self, other: &Self) -> (Self, u8);

    fn commutes(&self, other: &Self) -> bool;

    /// Inclusive site range touched by the word, if non-identity.
    fn support(&self, window: &Window) -> Option<(Site, Site)>;

    fn fmt_word(&self, window: &Window, out: &mut String);
    fn parse_word(window: &Window, text: &str) -> Result<Self, crate::Error>;
}
