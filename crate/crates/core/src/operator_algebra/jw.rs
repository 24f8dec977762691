//! Jordan-Wigner maps between spin and Majorana string algebras.
//!
//! Convention (the one used throughout this crate):
//!
//! ```text
//! a_j = (Π_{k<j} σ^x_k) σ^z_j,      b_j = i (Π_{k≤j} σ^x_k) σ^z_j
//! ```
//!
//! with the string starting at the left window edge (`LeftEdge`) or at site
//! 0 and wrapping through the right edge (`CenterWrapped`). Consequences of
//! the sign choice, all verified against dense matrices in the tests:
//!
//! ```text
//! σ^x_j           = i a_j b_j
//! σ^z_j σ^z_{j+1} = i b_j a_{j+1}
//! σ^z_0           = i^N (Π_{j=-N}^{-1} a_j b_j) a_0     (LeftEdge, N left sites)
//! σ^z_0           = a_0                                  (CenterWrapped)
//! ```

use super::majorana::majorana_multiply;
use super::pauli::pauli_multiply;
use super::{
    MajoranaString, MajoranaSum, MajoranaWord, PauliString, PauliSum, Phase, Site,
    Window, Word,
};

/// Where the Jordan-Wigner string is anchored.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum JwConvention {
    /// String runs from the left window edge; `a_0` maps to a nonlocal spin
    /// operator dressed by the left chain.
    LeftEdge,
    /// String starts at site 0 and wraps around through +∞ back to -∞;
    /// `a_0` maps exactly to `σ^z_0`, at the cost of one nonlocal
    /// Hamiltonian term.
    CenterWrapped,
}

fn x_image(window: &Window, site: Site) -> MajoranaString {
    MajoranaString {
        word: MajoranaWord::from_modes(
            window,
            &[window.mode_a(site).unwrap(), window.mode_b(site).unwrap()],
        ),
        phase: Phase::I,
    }
}

fn a_only(window: &Window, site: Site) -> MajoranaString {
    MajoranaString {
        word: MajoranaWord::from_modes(window, &[window.mode_a(site).unwrap()]),
        phase: Phase::ONE,
    }
}

/// Per-site images of Z under the given convention, indexed by site bit.
fn z_images(window: &Window, conv: JwConvention) -> Vec<MajoranaString> {
    let mut images = Vec::with_capacity(window.len());
    match conv {
        JwConvention::LeftEdge => {
            let mut prefix = MajoranaString::identity(window);
            for site in window.sites() {
                images.push(majorana_multiply(&prefix, &a_only(window, site)));
                prefix = majorana_multiply(&prefix, &x_image(window, site));
            }
        }
        JwConvention::CenterWrapped => {
            let mut right_flip = MajoranaString::identity(window);
            for site in 0..=window.highest_site() {
                right_flip = majorana_multiply(&right_flip, &x_image(window, site));
            }
            let mut prefix = MajoranaString::identity(window);
            for site in window.sites() {
                if site < 0 {
                    let s = majorana_multiply(&prefix, &right_flip);
                    images.push(majorana_multiply(&s, &a_only(window, site)));
                    prefix = majorana_multiply(&prefix, &x_image(window, site));
                } else {
                    break;
                }
            }
            let mut prefix = MajoranaString::identity(window);
            for site in 0..=window.highest_site() {
                images.push(majorana_multiply(&prefix, &a_only(window, site)));
                prefix = majorana_multiply(&prefix, &x_image(window, site));
            }
        }
    }
    images
}

/// Map a spin operator sum into the Majorana algebra.
pub fn jordan_wigner(spin: &PauliSum, conv: JwConvention) -> MajoranaSum {
    let window = *spin.window();
    let z_imgs = z_images(&window, conv);
    let mut out = MajoranaSum::zero(window);
    for (word, coeff) in spin.terms() {
        let mut img = MajoranaString::identity(&window);
        for bit in 0..window.len() {
            let site = window.bit_to_site(bit);
            if word.x.get(bit) {
                img = majorana_multiply(&img, &x_image(&window, site));
            }
            if word.z.get(bit) {
                img = majorana_multiply(&img, &z_imgs[bit]);
            }
        }
        // coeff · HermRep(word) = coeff · i^{y} · WORD  →  image with phase i^y.
        img.phase = img.phase * Phase::from_ipow(word.herm_ipow() as i64);
        out.add_string(&img, coeff);
    }
    out.set_flag_ipow(spin.flag_ipow());
    out
}

/// Per-site Pauli images of a_j / b_j under the given convention.
fn mode_images(window: &Window, conv: JwConvention) -> Vec<PauliString> {
    let mut images = Vec::with_capacity(window.n_modes());
    let x_at = |site: Site| PauliString::sigma(window, site, 'X');
    match conv {
        JwConvention::LeftEdge => {
            let mut prefix = PauliString::identity(window);
            for site in window.sites() {
                let z = PauliString::sigma(window, site, 'Z');
                let a = pauli_multiply(&prefix, &z);
                prefix = pauli_multiply(&prefix, &x_at(site));
                let mut b = pauli_multiply(&prefix, &z);
                b.phase = b.phase * Phase::I;
                images.push(a);
                images.push(b);
            }
        }
        JwConvention::CenterWrapped => {
            let mut right_flip = PauliString::identity(window);
            for site in 0..=window.highest_site() {
                right_flip = pauli_multiply(&right_flip, &x_at(site));
            }
            let mut left = Vec::new();
            let mut prefix = PauliString::identity(window);
            for site in window.lowest_site()..0 {
                let z = PauliString::sigma(window, site, 'Z');
                let a = pauli_multiply(&pauli_multiply(&prefix, &right_flip), &z);
                prefix = pauli_multiply(&prefix, &x_at(site));
                let mut b = pauli_multiply(&pauli_multiply(&prefix, &right_flip), &z);
                b.phase = b.phase * Phase::I;
                left.push(a);
                left.push(b);
            }
            images.extend(left);
            let mut prefix = PauliString::identity(window);
            for site in 0..=window.highest_site() {
                let z = PauliString::sigma(window, site, 'Z');
                let a = pauli_multiply(&prefix, &z);
                prefix = pauli_multiply(&prefix, &x_at(site));
                let mut b = pauli_multiply(&prefix, &z);
                b.phase = b.phase * Phase::I;
                images.push(a);
                images.push(b);
            }
        }
    }
    images
}

/// Map a Majorana operator sum back into the spin algebra. Exact inverse of
/// [`jordan_wigner`] with the same convention.
pub fn jordan_wigner_inverse(fermion: &MajoranaSum, conv: JwConvention) -> PauliSum {
    let window = *fermion.window();
    let imgs = mode_images(&window, conv);
    let mut out = PauliSum::zero(window);
    for (word, coeff) in fermion.terms() {
        let mut img = PauliString::identity(&window);
        for mode in word.modes.iter_ones() {
            img = pauli_multiply(&img, &imgs[mode]);
        }
        img.phase = img.phase * Phase::from_ipow(word.herm_ipow() as i64);
        out.add_string(&img, coeff);
    }
    out.set_flag_ipow(fermion.flag_ipow());
    out
}

/// The Jordan-Wigner image of the boundary spin σ^z_0 under `LeftEdge`:
/// `i^N (Π_{j<0} a_j b_j) a_0`, the string whose autocorrelator the
/// free-fermion engine evaluates.
pub fn boundary_spin_string(window: &Window) -> MajoranaString {
    let mut s = MajoranaString::identity(window);
    for site in window.lowest_site()..0 {
        s = majorana_multiply(&s, &x_image(window, site));
    }
    majorana_multiply(&s, &a_only(window, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator_algebra::PauliWord;

    #[test]
    fn sigma_z0_image_left() {
        // σ^z_0 = i^N (Π a_j b_j) a_0
        let window = Window::new(2, 2);
        let mut spin = PauliSum::zero(window);
        spin.add_string(&PauliString::sigma(&window, 0, 'Z'), 1.0);
        let f = jordan_wigner(&spin, JwConvention::LeftEdge);
        assert_eq!(f.len(), 1);
        let (word, c) = f.terms().next().unwrap();
        let modes: Vec<usize> = word.modes.iter_ones().collect();
        assert_eq!(modes, vec![0, 1, 2, 3, 4]); // a-2 b-2 a-1 b-1 a0
        // i^N·word relative to Hermitian rep: herm_ipow(k=5) = 10 mod 4 = 2,
        // operator = i^2·(i^2 word)·(-1)... coefficient must be ±1; the dense
        // oracle test pins the overall sign; here just require unit weight.
        assert_eq!(c.abs(), 1.0);
    }

    #[test]
    fn sigma_z0_is_a0_center() {
        let window = Window::new(3, 2);
        let mut spin = PauliSum::zero(window);
        spin.add_string(&PauliString::sigma(&window, 0, 'Z'), 1.0);
        let f = jordan_wigner(&spin, JwConvention::CenterWrapped);
        assert_eq!(f.len(), 1);
        let (word, c) = f.terms().next().unwrap();
        let modes: Vec<usize> = word.modes.iter_ones().collect();
        assert_eq!(modes, vec![window.mode_a(0).unwrap()]);
        assert_eq!(c, 1.0);
    }

    #[test]
    fn round_trip_both_conventions() {
        let window = Window::new(2, 3);
        let mut spin = PauliSum::zero(window);
        spin.add_string(&PauliString::sigma(&window, -2, 'Y'), 0.25);
        spin.add_string(&PauliString::sigma(&window, 1, 'X'), -1.5);
        let (zz, _) =
            PauliWord::single(&window, -1, 'Z').mul(&PauliWord::single(&window, 0, 'Z'));
        spin.add_word(zz, 0.75);
        for conv in [JwConvention::LeftEdge, JwConvention::CenterWrapped] {
            let back = jordan_wigner_inverse(&jordan_wigner(&spin, conv), conv);
            assert_eq!(back, spin);
        }
    }

    #[test]
    fn boundary_string_matches_map() {
        let window = Window::new(3, 4);
        let mut spin = PauliSum::zero(window);
        spin.add_string(&PauliString::sigma(&window, 0, 'Z'), 1.0);
        let via_map = jordan_wigner(&spin, JwConvention::LeftEdge);
        let s = boundary_spin_string(&window);
        let mut direct = MajoranaSum::zero(window);
        direct.add_string(&s, 1.0);
        assert_eq!(via_map, direct);
    }
}
