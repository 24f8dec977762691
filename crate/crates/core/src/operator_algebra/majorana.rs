use std::fmt;

use super::{Mask, Phase, Site, Window, Word};
use crate::Error;

/// Phase-free Majorana monomial: the product of the flagged modes in
/// ascending global mode order (mode 2j is a_j, mode 2j+1 is b_j).
/// Repeated modes collapse through c² = 1, so a set suffices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MajoranaWord {
    pub modes: Mask,
}

impl MajoranaWord {
    pub fn new(window: &Window) -> MajoranaWord {
        MajoranaWord {
            modes: Mask::zeros(window.n_modes()),
        }
    }

    pub fn from_modes(window: &Window, modes: &[usize]) -> MajoranaWord {
        let mut w = MajoranaWord::new(window);
        for &m in modes {
            assert!(!w.modes.get(m), "repeated mode {m}");
            w.modes.set(m, true);
        }
        w
    }

    pub fn mode_count(&self) -> usize {
        self.modes.count_ones()
    }
}

impl Word for MajoranaWord {
    fn identity(window: &Window) -> Self {
        MajoranaWord::new(window)
    }

    fn is_identity(&self) -> bool {
        self.modes.is_zero()
    }

    fn herm_ipow(&self) -> u8 {
        // Reversing k modes costs (-1)^{k(k-1)/2}; i^{k(k-1)/2} restores Hermiticity.
        let k = self.mode_count() as u64;
        ((k * (k.saturating_sub(1)) / 2) % 4) as u8
    }

    fn mul(&self, other: &Self) -> (Self, u8) {
        // Move each mode of `other` left past the modes of `self` above it.
        let mut inversions = 0usize;
        for m in other.modes.iter_ones() {
            inversions += self.modes.count_above(m);
        }
        (
            MajoranaWord {
                modes: self.modes.xor(&other.modes),
            },
            (2 * (inversions % 2)) as u8,
        )
    }

    fn commutes(&self, other: &Self) -> bool {
        let ka = self.mode_count();
        let kb = other.mode_count();
        let shared = self.modes.and_count(&other.modes);
        (ka * kb + shared) % 2 == 0
    }

    fn support(&self, window: &Window) -> Option<(Site, Site)> {
        let lo = self.modes.first_one()?;
        let hi = self.modes.last_one()?;
        Some((window.mode_to_site(lo).0, window.mode_to_site(hi).0))
    }

    fn fmt_word(&self, window: &Window, out: &mut String) {
        use fmt::Write;
        if self.is_identity() {
            out.push('1');
            return;
        }
        let mut first = true;
        for m in self.modes.iter_ones() {
            if !first {
                out.push(' ');
            }
            first = false;
            let (site, is_b) = window.mode_to_site(m);
            write!(out, "{}{}", if is_b { 'b' } else { 'a' }, site).unwrap();
        }
    }

    fn parse_word(window: &Window, text: &str) -> Result<Self, Error> {
        let mut w = MajoranaWord::new(window);
        for tok in text.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let kind = tok.chars().next().ok_or_else(|| Error::Parse(tok.into()))?;
            let site: Site = tok[1..].parse().map_err(|_| Error::Parse(tok.into()))?;
            let mode = match kind {
                'a' => window.mode_a(site),
                'b' => window.mode_b(site),
                _ => return Err(Error::Parse(tok.into())),
            }
            .ok_or(Error::SupportOverflow { site })?;
            w.modes.toggle(mode);
        }
        Ok(w)
    }
}

/// A Majorana monomial with an explicit exact phase.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MajoranaString {
    pub word: MajoranaWord,
    pub phase: Phase,
}

impl MajoranaString {
    pub fn identity(window: &Window) -> MajoranaString {
        MajoranaString {
            word: MajoranaWord::new(window),
            phase: Phase::ONE,
        }
    }

    /// Hermitian canonical string on the given modes.
    pub fn hermitian(window: &Window, modes: &[usize]) -> MajoranaString {
        let word = MajoranaWord::from_modes(window, modes);
        let phase = Phase::from_ipow(word.herm_ipow() as i64);
        MajoranaString { word, phase }
    }

    pub fn is_hermitian(&self) -> bool {
        let k = self.word.mode_count() as i64;
        (self.phase.conj() * Phase::from_ipow(2 * (k * (k - 1) / 2))) == self.phase
    }
}

pub fn majorana_multiply(p: &MajoranaString, q: &MajoranaString) -> MajoranaString {
    let (word, t) = p.word.mul(&q.word);
    MajoranaString {
        word,
        phase: p.phase * q.phase * Phase::from_ipow(t as i64),
    }
}

impl fmt::Display for MajoranaString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·{:?}", self.phase, self.word.modes)
    }
}
