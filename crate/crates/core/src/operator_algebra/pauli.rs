use std::fmt;

use super::{Mask, Phase, Site, Window, Word};
use crate::Error;

/// Phase-free Pauli word `X^x Z^z`, factors ordered by site with X before Z
/// on each site. A Y on site j is the overlap of the x and z bits there.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PauliWord {
    pub x: Mask,
    pub z: Mask,
}

impl PauliWord {
    pub fn new(window: &Window) -> PauliWord {
        PauliWord {
            x: Mask::zeros(window.len()),
            z: Mask::zeros(window.len()),
        }
    }

    pub fn single(window: &Window, site: Site, axis: char) -> PauliWord {
        let mut w = PauliWord::new(window);
        let bit = window
            .site_to_bit(site)
            .unwrap_or_else(|| panic!("site {site} outside window"));
        match axis {
            'X' | 'x' => w.x.set(bit, true),
            'Z' | 'z' => w.z.set(bit, true),
            'Y' | 'y' => {
                w.x.set(bit, true);
                w.z.set(bit, true);
            }
            _ => panic!("unknown Pauli axis {axis}"),
        }
        w
    }

    /// Number of Y sites (x and z overlap).
    pub fn y_count(&self) -> usize {
        self.x.and_count(&self.z)
    }
}

impl Word for PauliWord {
    fn identity(window: &Window) -> Self {
        PauliWord::new(window)
    }

    fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    fn herm_ipow(&self) -> u8 {
        (self.y_count() % 4) as u8
    }

    fn mul(&self, other: &Self) -> (Self, u8) {
        // Reordering Z^{z_a} past X^{x_b} gives (-1)^{|z_a ∧ x_b|}.
        let t = (2 * (self.z.and_count(&other.x) % 2)) as u8;
        (
            PauliWord {
                x: self.x.xor(&other.x),
                z: self.z.xor(&other.z),
            },
            t,
        )
    }

    fn commutes(&self, other: &Self) -> bool {
        (self.z.and_count(&other.x) + self.x.and_count(&other.z)) % 2 == 0
    }

    fn support(&self, window: &Window) -> Option<(Site, Site)> {
        let m = self.x.or(&self.z);
        let lo = m.first_one()?;
        let hi = m.last_one()?;
        Some((window.bit_to_site(lo), window.bit_to_site(hi)))
    }

    fn fmt_word(&self, window: &Window, out: &mut String) {
        use fmt::Write;
        if self.is_identity() {
            out.push('1');
            return;
        }
        let mut first = true;
        for bit in 0..window.len() {
            let (xb, zb) = (self.x.get(bit), self.z.get(bit));
            if !xb && !zb {
                continue;
            }
            if !first {
                out.push(' ');
            }
            first = false;
            let axis = match (xb, zb) {
                (true, false) => 'X',
                (false, true) => 'Z',
                _ => 'Y',
            };
            write!(out, "{}{}", axis, window.bit_to_site(bit)).unwrap();
        }
    }

    fn parse_word(window: &Window, text: &str) -> Result<Self, Error> {
        let mut w = PauliWord::new(window);
        for tok in text.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let axis = tok.chars().next().ok_or_else(|| Error::Parse(tok.into()))?;
            let site: Site = tok[1..].parse().map_err(|_| Error::Parse(tok.into()))?;
            let bit = window
                .site_to_bit(site)
                .ok_or(Error::SupportOverflow { site })?;
            match axis {
                'X' => w.x.toggle(bit),
                'Z' => w.z.toggle(bit),
                'Y' => {
                    w.x.toggle(bit);
                    w.z.toggle(bit);
                }
                _ => return Err(Error::Parse(tok.into())),
            }
        }
        Ok(w)
    }
}

/// A Pauli word with an explicit exact phase: `phase · X^x Z^z`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PauliString {
    pub word: PauliWord,
    pub phase: Phase,
}

impl PauliString {
    pub fn identity(window: &Window) -> PauliString {
        PauliString {
            word: PauliWord::new(window),
            phase: Phase::ONE,
        }
    }

    /// The Hermitian single-site operator σ^axis_site.
    pub fn sigma(window: &Window, site: Site, axis: char) -> PauliString {
        let word = PauliWord::single(window, site, axis);
        let phase = Phase::from_ipow(word.herm_ipow() as i64);
        PauliString { word, phase }
    }

    pub fn is_hermitian(&self) -> bool {
        // (phase · W)† = conj(phase) (-1)^{y} W
        (self.phase.conj() * Phase::from_ipow(2 * self.word.y_count() as i64)) == self.phase
    }
}

/// Canonical product with exact phase bookkeeping. Associative; squares of
/// Hermitian strings are the identity with phase +1.
pub fn pauli_multiply(p: &PauliString, q: &PauliString) -> PauliString {
    let (word, t) = p.word.mul(&q.word);
    PauliString {
        word,
        phase: p.phase * q.phase * Phase::from_ipow(t as i64),
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·[x={:?} z={:?}]", self.phase, self.word.x, self.word.z)
    }
}
