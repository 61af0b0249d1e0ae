use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The preset algebras.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgId {
    /// Quantised coordinate ring of SL(2): generators `a, b, c, d`.
    Qsl2,
    /// Standard Podles sphere: generators `y-1, y0, y1`.
    Podles,
    /// Laurent polynomials `k[z, z^-1]`: generators `z, zinv`.
    Laurent,
    /// `k[y] # Z/2`: generators `x, y` with `x^2 = 1`, `xy = -yx`.
    SmashZ2,
}

impl AlgId {
    pub const ALL: [AlgId; 4] = [AlgId::Qsl2, AlgId::Podles, AlgId::Laurent, AlgId::SmashZ2];

    /// Generator names, in letter order.
    pub fn generators(self) -> &'static [&'static str] {
        match self {
            AlgId::Qsl2 => &["a", "b", "c", "d"],
            AlgId::Podles => &["y-1", "y0", "y1"],
            AlgId::Laurent => &["z", "zinv"],
            AlgId::SmashZ2 => &["x", "y"],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgId::Qsl2 => "qsl2",
            AlgId::Podles => "podles",
            AlgId::Laurent => "laurent",
            AlgId::SmashZ2 => "smash",
        }
    }
}

impl fmt::Display for AlgId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "qsl2" | "a" | "slq2" => Ok(AlgId::Qsl2),
            "podles" | "b" => Ok(AlgId::Podles),
            "laurent" | "c" => Ok(AlgId::Laurent),
            "smash" | "smash_z2" | "smash-z2" => Ok(AlgId::SmashZ2),
            _ => Err(Error::UnknownAlgebra(s.to_string())),
        }
    }
}

// Letters.
pub const A: u8 = 0;
pub const B: u8 = 1;
pub const C: u8 = 2;
pub const D: u8 = 3;
pub const YM: u8 = 0;
pub const Y0: u8 = 1;
pub const YP: u8 = 2;
pub const Z: u8 = 0;
pub const ZI: u8 = 1;
pub const X: u8 = 0;
pub const Y: u8 = 1;

/// A normal-ordered basis monomial, stored by its exponents:
///
/// * `Qsl2`: `f_{lmn}` = `a^l b^m c^n` (`l >= 0`) or `d^-l b^m c^n` (`l < 0`)
/// * `Podles`: `e_{ij}` = `y0^i y1^j` (`j >= 0`) or `y0^i y-1^-j` (`j < 0`)
/// * `Laurent`: `z^k`
/// * `SmashZ2`: `x^e y^m`, `e` in `{0, 1}`
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    alg: AlgId,
    e: [i32; 3],
}

impl Monomial {
    pub fn one(alg: AlgId) -> Self {
        Monomial { alg, e: [0; 3] }
    }

    pub fn qsl2(l: i32, m: i32, n: i32) -> Self {
        assert!(m >= 0 && n >= 0, "f_lmn needs m, n >= 0");
        Monomial { alg: AlgId::Qsl2, e: [l, m, n] }
    }

    pub fn podles(i: i32, j: i32) -> Self {
        assert!(i >= 0, "e_ij needs i >= 0");
        Monomial { alg: AlgId::Podles, e: [i, j, 0] }
    }

    pub fn laurent(k: i32) -> Self {
        Monomial { alg: AlgId::Laurent, e: [k, 0, 0] }
    }

    pub fn smash(e: i32, m: i32) -> Self {
        assert!((0..=1).contains(&e) && m >= 0);
        Monomial { alg: AlgId::SmashZ2, e: [e, m, 0] }
    }

    pub fn alg(&self) -> AlgId {
        self.alg
    }

    pub fn exponents(&self) -> [i32; 3] {
        self.e
    }

    pub fn is_one(&self) -> bool {
        self.e == [0; 3]
    }

    /// Word length, the filtration degree.
    pub fn len(&self) -> usize {
        let [x, y, z] = self.e;
        match self.alg {
            AlgId::Qsl2 => (x.unsigned_abs() + y as u32 + z as u32) as usize,
            AlgId::Podles => (x as u32 + y.unsigned_abs()) as usize,
            AlgId::Laurent => x.unsigned_abs() as usize,
            AlgId::SmashZ2 => (x + y) as usize,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.is_one()
    }

    /// The normal word, letter by letter.
    pub fn word(&self) -> Vec<u8> {
        let [x, y, z] = self.e;
        let rep = |w: &mut Vec<u8>, letter: u8, k: i32| w.extend(std::iter::repeat_n(letter, k as usize));
        let mut w = Vec::with_capacity(self.len());
        match self.alg {
            AlgId::Qsl2 => {
                if x >= 0 {
                    rep(&mut w, A, x);
                } else {
                    rep(&mut w, D, -x);
                }
                rep(&mut w, B, y);
                rep(&mut w, C, z);
            }
            AlgId::Podles => {
                rep(&mut w, Y0, x);
                if y >= 0 {
                    rep(&mut w, YP, y);
                } else {
                    rep(&mut w, YM, -y);
                }
            }
            AlgId::Laurent => {
                if x >= 0 {
                    rep(&mut w, Z, x);
                } else {
                    rep(&mut w, ZI, -x);
                }
            }
            AlgId::SmashZ2 => {
                rep(&mut w, X, x);
                rep(&mut w, Y, y);
            }
        }
        w
    }

    /// Reads a word that is already in normal form. Returns `None` otherwise.
    pub fn from_normal_word(alg: AlgId, word: &[u8]) -> Option<Self> {
        let m = Self::parse_word(alg, word)?;
        (m.word() == word).then_some(m)
    }

    fn parse_word(alg: AlgId, word: &[u8]) -> Option<Self> {
        let count = |l: u8| word.iter().filter(|&&x| x == l).count() as i32;
        Some(match alg {
            AlgId::Qsl2 => {
                let (a, d) = (count(A), count(D));
                if a > 0 && d > 0 {
                    return None;
                }
                Monomial::qsl2(a - d, count(B), count(C))
            }
            AlgId::Podles => {
                let (m, p) = (count(YM), count(YP));
                if m > 0 && p > 0 {
                    return None;
                }
                Monomial::podles(count(Y0), p - m)
            }
            AlgId::Laurent => {
                let (z, zi) = (count(Z), count(ZI));
                if z > 0 && zi > 0 {
                    return None;
                }
                Monomial::laurent(z - zi)
            }
            AlgId::SmashZ2 => {
                let x = count(X);
                if x > 1 {
                    return None;
                }
                Monomial::smash(x, count(Y))
            }
        })
    }

    /// `(i, j)` for a Podles monomial `e_{ij}`.
    pub fn podles_indices(&self) -> (i32, i32) {
        debug_assert_eq!(self.alg, AlgId::Podles);
        (self.e[0], self.e[1])
    }

    /// `(l, m, n)` for a quantum SL(2) monomial `f_{lmn}`.
    pub fn qsl2_indices(&self) -> (i32, i32, i32) {
        debug_assert_eq!(self.alg, AlgId::Qsl2);
        (self.e[0], self.e[1], self.e[2])
    }

    pub fn laurent_exponent(&self) -> i32 {
        debug_assert_eq!(self.alg, AlgId::Laurent);
        self.e[0]
    }

    fn sort_key(&self) -> (usize, [i32; 3]) {
        let [x, y, z] = self.e;
        match self.alg {
            AlgId::Laurent => (0, [x, 0, 0]),
            AlgId::Podles => (self.len(), [y, x, 0]),
            AlgId::Qsl2 => (self.len(), [x, y, z]),
            AlgId::SmashZ2 => (self.len(), [x, y, 0]),
        }
    }
}

/// Deterministic order: by algebra, then word length, then exponents
/// (Laurent monomials purely by exponent).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.alg.cmp(&other.alg).then_with(|| self.sort_key().cmp(&other.sort_key()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        if self.alg == AlgId::Laurent {
            return match self.e[0] {
                1 => f.write_str("z"),
                k => write!(f, "z^{k}"),
            };
        }
        let names = self.alg.generators();
        let word = self.word();
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < word.len() {
            let mut k = i;
            while k < word.len() && word[k] == word[i] {
                k += 1;
            }
            let name = names[word[i] as usize];
            parts.push(if k - i == 1 { name.to_string() } else { format!("{name}^{}", k - i) });
            i = k;
        }
        f.write_str(&parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_round_trip() {
        for m in [
            Monomial::qsl2(-2, 1, 3),
            Monomial::qsl2(3, 0, 1),
            Monomial::podles(2, -3),
            Monomial::podles(0, 4),
            Monomial::laurent(-3),
            Monomial::smash(1, 2),
        ] {
            assert_eq!(Monomial::from_normal_word(m.alg(), &m.word()), Some(m));
            assert_eq!(m.word().len(), m.len());
        }
    }

    #[test]
    fn non_normal_words_are_rejected() {
        assert_eq!(Monomial::from_normal_word(AlgId::Qsl2, &[B, A]), None);
        assert_eq!(Monomial::from_normal_word(AlgId::Qsl2, &[A, D]), None);
        assert_eq!(Monomial::from_normal_word(AlgId::Podles, &[YP, Y0]), None);
        assert_eq!(Monomial::from_normal_word(AlgId::SmashZ2, &[X, X]), None);
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::podles(2, 1).to_string(), "y0^2*y1");
        assert_eq!(Monomial::podles(0, -2).to_string(), "y-1^2");
        assert_eq!(Monomial::qsl2(-1, 1, 0).to_string(), "d*b");
        assert_eq!(Monomial::laurent(-2).to_string(), "z^-2");
        assert_eq!(Monomial::one(AlgId::Qsl2).to_string(), "1");
    }
}
