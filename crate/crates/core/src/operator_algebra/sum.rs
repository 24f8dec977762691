use std::collections::BTreeMap;

use super::{MajoranaString, MajoranaWord, PauliString, PauliWord, Window, Word};
use crate::Error;

/// Sparse real-linear combination of canonical Hermitian strings, with an
/// overall exact factor of `i^{ipow}` (`ipow = 0`: Hermitian, `ipow = 1`:
/// anti-Hermitian, stored as i × Hermitian sum).
///
/// Stored words carry no phase: each maps to the Hermitian canonical string
/// `i^{herm_ipow(w)} · w`, and signs live in the coefficients. Terms with
/// exactly zero coefficient are dropped on insertion.
#[derive(Clone, PartialEq, Debug)]
pub struct OperatorSum<W: Word> {
    window: Window,
    ipow: u8,
    terms: BTreeMap<W, f64>,
}

pub type PauliSum = OperatorSum<PauliWord>;
pub type MajoranaSum = OperatorSum<MajoranaWord>;

impl<W: Word> OperatorSum<W> {
    pub fn zero(window: Window) -> Self {
        OperatorSum {
            window,
            ipow: 0,
            terms: BTreeMap::new(),
        }
    }

    pub fn zero_antihermitian(window: Window) -> Self {
        OperatorSum {
            window,
            ipow: 1,
            terms: BTreeMap::new(),
        }
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    /// True when the stored operator is i × (Hermitian sum).
    pub fn is_antihermitian_flagged(&self) -> bool {
        self.ipow == 1
    }

    pub(crate) fn flag_ipow(&self) -> u8 {
        self.ipow
    }

    pub(crate) fn set_flag_ipow(&mut self, ipow: u8) {
        self.ipow = ipow % 2;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&W, f64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coefficient(&self, word: &W) -> f64 {
        self.terms.get(word).copied().unwrap_or(0.0)
    }

    pub fn add_word(&mut self, word: W, coeff: f64) {
        if coeff == 0.0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0.0 {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn scaled(&self, factor: f64) -> Self {
        let mut out = self.clone();
        if factor == 0.0 {
            out.terms.clear();
        } else {
            for c in out.terms.values_mut() {
                *c *= factor;
            }
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.window, other.window, "window mismatch");
        if other.is_empty() {
            return;
        }
        if self.is_empty() {
            self.ipow = other.ipow;
        }
        assert_eq!(self.ipow, other.ipow, "hermiticity flag mismatch");
        for (w, c) in other.terms() {
            self.add_word(w.clone(), c);
        }
    }

    /// Drop terms with |coefficient| <= eps.
    pub fn prune(&mut self, eps: f64) {
        self.terms.retain(|_, c| c.abs() > eps);
    }

    /// Hilbert-Schmidt norm sqrt(tr(O†O)/2^L): canonical strings are orthonormal.
    pub fn hs_norm(&self) -> f64 {
        self.terms.values().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// Largest |site| over the support of all terms.
    pub fn support_radius(&self) -> usize {
        self.terms
            .keys()
            .filter_map(|w| w.support(&self.window))
            .map(|(lo, hi)| (lo.unsigned_abs() as usize).max(hi.unsigned_abs() as usize))
            .max()
            .unwrap_or(0)
    }

    /// One term per line: `<coeff> <word>`, 17 significant digits.
    /// Anti-Hermitian sums are prefixed by a `# factor i` line.
    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        if self.ipow == 1 {
            out.push_str("# factor i\n");
        }
        for (w, c) in self.terms() {
            write!(out, "{:.16e} ", c).unwrap();
            w.fmt_word(&self.window, &mut out);
            out.push('\n');
        }
        out
    }

    pub fn from_text(window: Window, text: &str) -> Result<Self, Error> {
        let mut sum = OperatorSum::zero(window);
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if line.starts_with('#') {
                if line.contains("factor i") {
                    sum.ipow = 1;
                }
                continue;
            }
            let (coeff, word) = line.split_once(' ').ok_or_else(|| Error::Parse(line.into()))?;
            let coeff: f64 = coeff.parse().map_err(|_| Error::Parse(line.into()))?;
            let word = W::parse_word(&window, word)?;
            sum.add_word(word, coeff);
        }
        Ok(sum)
    }
}

impl PauliSum {
    /// Insert `coeff · string` (with its explicit phase). The phase must be
    /// compatible with the sum's hermiticity flag.
    pub fn add_string(&mut self, s: &PauliString, coeff: f64) {
        let rel = s.phase.ipow() as i64 - s.word.herm_ipow() as i64;
        add_string_impl(&mut self.ipow, &mut self.terms, s.word.clone(), rel, coeff);
    }

    pub fn from_terms(window: Window, terms: &[(PauliString, f64)]) -> PauliSum {
        let mut sum = PauliSum::zero(window);
        for (s, c) in terms {
            sum.add_string(s, *c);
        }
        sum
    }
}

impl MajoranaSum {
    pub fn add_string(&mut self, s: &MajoranaString, coeff: f64) {
        let rel = s.phase.ipow() as i64 - s.word.herm_ipow() as i64;
        add_string_impl(&mut self.ipow, &mut self.terms, s.word.clone(), rel, coeff);
    }

    pub fn from_terms(window: Window, terms: &[(MajoranaString, f64)]) -> MajoranaSum {
        let mut sum = MajoranaSum::zero(window);
        for (s, c) in terms {
            sum.add_string(s, *c);
        }
        sum
    }
}

fn add_string_impl<W: Word>(
    ipow: &mut u8,
    terms: &mut BTreeMap<W, f64>,
    word: W,
    rel_ipow: i64,
    coeff: f64,
) {
    if coeff == 0.0 {
        return;
    }
    let rel = rel_ipow.rem_euclid(4) as u8;
    if terms.is_empty() {
        *ipow = rel % 2;
    }
    assert_eq!(
        rel % 2,
        *ipow,
        "string phase incompatible with sum hermiticity flag"
    );
    let signed = if rel == *ipow { coeff } else { -coeff };
    use std::collections::btree_map::Entry;
    match terms.entry(word) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += signed;
            if *e.get() == 0.0 {
                e.remove();
            }
        }
        Entry::Vacant(v) => {
            v.insert(signed);
        }
    }
}

/// tr(A†B)/2^L restricted to the real part; sums with different
/// hermiticity flags are orthogonal.
pub fn hs_inner<W: Word>(a: &OperatorSum<W>, b: &OperatorSum<W>) -> f64 {
    assert_eq!(a.window, b.window, "window mismatch");
    if a.ipow != b.ipow && !a.is_empty() && !b.is_empty() {
        return 0.0;
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    small
        .terms()
        .map(|(w, c)| c * large.coefficient(w))
        .sum()
}

/// Commutator [A, B] with exact phase bookkeeping. Hermitian inputs give an
/// anti-Hermitian output stored as i × (Hermitian sum). Bilinear and
/// antisymmetric by construction.
pub fn commutator<W: Word>(a: &OperatorSum<W>, b: &OperatorSum<W>) -> OperatorSum<W> {
    pair_product(a, b, false)
}

/// Anticommutator {A, B}; Hermitian inputs give a Hermitian output.
pub fn anticommutator<W: Word>(a: &OperatorSum<W>, b: &OperatorSum<W>) -> OperatorSum<W> {
    pair_product(a, b, true)
}

fn pair_product<W: Word>(
    a: &OperatorSum<W>,
    b: &OperatorSum<W>,
    symmetric: bool,
) -> OperatorSum<W> {
    assert_eq!(a.window, b.window, "window mismatch");
    // [H_a, H_b] = 2 H_a H_b on anticommuting pairs, {H_a, H_b} = 2 H_a H_b
    // on commuting ones; products of Hermitian strings are i^m · Hermitian
    // with m odd in the first case and even in the second.
    let extra = if symmetric { 0 } else { 1 };
    let total_ipow = a.ipow + b.ipow + extra;
    let out_ipow = total_ipow % 2;
    let global_sign = if total_ipow % 4 >= 2 { -1.0 } else { 1.0 };

    let mut terms: BTreeMap<W, f64> = BTreeMap::new();
    for (wa, ca) in a.terms() {
        for (wb, cb) in b.terms() {
            if wa.commutes(wb) != symmetric {
                continue;
            }
            let (w, t) = wa.mul(wb);
            let m = (wa.herm_ipow() as i64 + wb.herm_ipow() as i64 + t as i64
                - w.herm_ipow() as i64)
                .rem_euclid(4) as u8;
            debug_assert_eq!(m % 2, extra, "phase parity broke");
            // i^m = i^{extra} · (-1)^{(m - extra)/2}
            let sign = if (m - extra) % 4 >= 2 { -1.0 } else { 1.0 };
            let c = 2.0 * ca * cb * sign * global_sign;
            if c != 0.0 {
                let entry = terms.entry(w).or_insert(0.0);
                *entry += c;
            }
        }
    }
    terms.retain(|_, c| *c != 0.0);
    OperatorSum {
        window: a.window,
        ipow: out_ipow,
        terms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator_algebra::PauliString;

    fn w() -> Window {
        Window::new(1, 2)
    }

    #[test]
    fn commutator_antisymmetry() {
        let window = w();
        let mut a = PauliSum::zero(window);
        a.add_string(&PauliString::sigma(&window, 0, 'X'), 0.7);
        a.add_string(&PauliString::sigma(&window, 1, 'Z'), -0.3);
        let c = commutator(&a, &a);
        assert!(c.is_zero());
    }

    #[test]
    fn single_site_commutator() {
        // [σ^x_0, σ^z_0] = -2i σ^y_0
        let window = w();
        let mut x = PauliSum::zero(window);
        x.add_string(&PauliString::sigma(&window, 0, 'X'), 1.0);
        let mut z = PauliSum::zero(window);
        z.add_string(&PauliString::sigma(&window, 0, 'Z'), 1.0);
        let c = commutator(&x, &z);
        assert!(c.is_antihermitian_flagged());
        let y = PauliString::sigma(&window, 0, 'Y');
        // stored as i × (coeff · Y0): -2i σ^y means coeff = -2
        assert_eq!(c.coefficient(&y.word), -2.0);
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn hs_orthonormality() {
        let window = w();
        let mut a = PauliSum::zero(window);
        a.add_string(&PauliString::sigma(&window, 0, 'Z'), 1.0);
        let mut b = PauliSum::zero(window);
        let (xz, _) =
            PauliWord::single(&window, 0, 'X').mul(&PauliWord::single(&window, 1, 'Z'));
        b.add_word(xz, 1.0);
        assert_eq!(hs_inner(&a, &a), 1.0);
        assert_eq!(hs_inner(&a, &b), 0.0);
    }

    #[test]
    fn text_round_trip() {
        let window = w();
        let mut a = PauliSum::zero(window);
        a.add_string(&PauliString::sigma(&window, -1, 'Y'), 0.1234567890123456789);
        a.add_string(&PauliString::sigma(&window, 1, 'X'), -2.0 / 3.0);
        let text = a.to_text();
        let back = PauliSum::from_text(window, &text).unwrap();
        assert_eq!(a, back);
    }
}
