use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;

/// Exact element of {+1, +i, -1, -i}, stored as the power of i.
///
/// All string-algebra phases are elements of Z4 and are tracked exactly;
/// only coefficients are floating point.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    /// i^k for any integer k.
    pub fn from_ipow(k: i64) -> Phase {
        Phase(k.rem_euclid(4) as u8)
    }

    pub fn ipow(self) -> u8 {
        self.0
    }

    pub fn conj(self) -> Phase {
        Phase((4 - self.0) % 4)
    }

    pub fn is_real(self) -> bool {
        self.0 % 2 == 0
    }

    /// Real part sign for real phases, the i-stripped sign for imaginary ones.
    pub fn sign(self) -> f64 {
        if self.0 < 2 {
            1.0
        } else {
            -1.0
        }
    }

    pub fn as_complex(self) -> Complex64 {
        match self.0 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }
}

impl Mul for Phase {
    type Output = Phase;
    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "+1"),
            1 => write!(f, "+i"),
            2 => write!(f, "-1"),
            _ => write!(f, "-i"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_law() {
        assert_eq!(Phase::I * Phase::I, Phase::MINUS_ONE);
        assert_eq!(Phase::MINUS_I * Phase::I, Phase::ONE);
        assert_eq!(Phase::from_ipow(-1), Phase::MINUS_I);
        assert_eq!(Phase::from_ipow(7), Phase::MINUS_I);
    }

    #[test]
    fn conjugation() {
        assert_eq!(Phase::I.conj(), Phase::MINUS_I);
        assert_eq!(Phase::ONE.conj(), Phase::ONE);
        assert_eq!(Phase::MINUS_ONE.conj(), Phase::MINUS_ONE);
    }
}
