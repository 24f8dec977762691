use smallvec::SmallVec;

/// Fixed-width bitset used for Pauli site masks and Majorana mode masks.
///
/// Word count is fixed at construction; every mask participating in one
/// algebra shares the same width (the lattice window decides it). Four
/// inline words cover 256 bits, enough for the chain sizes used here
/// without heap traffic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mask {
    words: SmallVec<[u64; 4]>,
}

impl Mask {
    pub fn zeros(n_bits: usize) -> Mask {
        let n_words = n_bits.div_ceil(64).max(1);
        Mask {
            words: SmallVec::from_elem(0, n_words),
        }
    }

    pub fn n_words(&self) -> usize {
        self.words.len()
    }

    pub fn get(&self, bit: usize) -> bool {
        self.words[bit / 64] >> (bit % 64) & 1 == 1
    }

    pub fn set(&mut self, bit: usize, value: bool) {
        let w = &mut self.words[bit / 64];
        if value {
            *w |= 1 << (bit % 64);
        } else {
            *w &= !(1 << (bit % 64));
        }
    }

    pub fn toggle(&mut self, bit: usize) {
        self.words[bit / 64] ^= 1 << (bit % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor(&self, other: &Mask) -> Mask {
        debug_assert_eq!(self.words.len(), other.words.len());
        Mask {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    pub fn or(&self, other: &Mask) -> Mask {
        debug_assert_eq!(self.words.len(), other.words.len());
        Mask {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    /// popcount(self AND other)
    pub fn and_count(&self, other: &Mask) -> usize {
        debug_assert_eq!(self.words.len(), other.words.len());
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Number of set bits strictly above `bit`.
    pub fn count_above(&self, bit: usize) -> usize {
        let wi = bit / 64;
        let within = if bit % 64 == 63 {
            0
        } else {
            (self.words[wi] & !((1u64 << ((bit % 64) + 1)) - 1)).count_ones() as usize
        };
        within
            + self.words[wi + 1..]
                .iter()
                .map(|w| w.count_ones() as usize)
                .sum::<usize>()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rem = w;
            std::iter::from_fn(move || {
                if rem == 0 {
                    None
                } else {
                    let b = rem.trailing_zeros() as usize;
                    rem &= rem - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.iter_ones().next()
    }

    pub fn last_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(wi, &w)| wi * 64 + 63 - w.leading_zeros() as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_toggle() {
        let mut m = Mask::zeros(130);
        m.set(0, true);
        m.set(129, true);
        m.toggle(64);
        assert!(m.get(0) && m.get(64) && m.get(129));
        assert_eq!(m.count_ones(), 3);
        assert_eq!(m.iter_ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(m.last_one(), Some(129));
    }

    #[test]
    fn count_above_crosses_words() {
        let mut m = Mask::zeros(130);
        for b in [3, 63, 64, 100, 128] {
            m.set(b, true);
        }
        assert_eq!(m.count_above(3), 4);
        assert_eq!(m.count_above(63), 3);
        assert_eq!(m.count_above(64), 2);
        assert_eq!(m.count_above(128), 0);
    }
}
