use super::{AlgId, Monomial};

/// All normal monomials of word length `<= n`, in [`Monomial`] order.
pub fn filtration_basis(alg: AlgId, n: usize) -> Vec<Monomial> {
    let n = n as i32;
    let mut out = Vec::new();
    match alg {
        AlgId::Qsl2 => {
            for l in -n..=n {
                for m in 0..=n - l.abs() {
                    for k in 0..=n - l.abs() - m {
                        out.push(Monomial::qsl2(l, m, k));
                    }
                }
            }
        }
        AlgId::Podles => {
            for j in -n..=n {
                for i in 0..=n - j.abs() {
                    out.push(Monomial::podles(i, j));
                }
            }
        }
        AlgId::Laurent => out.extend((-n..=n).map(Monomial::laurent)),
        AlgId::SmashZ2 => {
            for e in 0..=1.min(n) {
                for m in 0..=n - e {
                    out.push(Monomial::smash(e, m));
                }
            }
        }
    }
    out.sort();
    out
}

/// Normal monomials of word length exactly `n`.
pub fn graded_piece(alg: AlgId, n: usize) -> Vec<Monomial> {
    filtration_basis(alg, n).into_iter().filter(|m| m.len() == n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn podles_small_levels() {
        let names: Vec<String> = filtration_basis(AlgId::Podles, 1).iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["1", "y-1", "y0", "y1"]);
        assert_eq!(filtration_basis(AlgId::Podles, 2).len(), 9);
    }

    #[test]
    fn laurent_is_ordered_by_exponent() {
        let names: Vec<String> = filtration_basis(AlgId::Laurent, 2).iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["z^-2", "z^-1", "1", "z", "z^2"]);
    }

    #[test]
    fn counts() {
        for n in 0..8usize {
            let pairs = (0..=n as i32)
                .flat_map(|i| (-(n as i32)..=n as i32).map(move |j| (i, j)))
                .filter(|(i, j)| (i + j.abs()) as usize <= n)
                .count();
            assert_eq!(filtration_basis(AlgId::Podles, n).len(), pairs);
            assert_eq!(filtration_basis(AlgId::SmashZ2, n).len(), 2 * n + 1);
        }
        // (l, m, n) with |l| + m + n <= 2
        assert_eq!(filtration_basis(AlgId::Qsl2, 2).len(), 1 + 4 + 9);
    }
}
