//! Sparse exact linear algebra: incremental row echelon forms, ranks,
//! kernels and canonical remainders.
//!
//! Columns are plain indices; the pivot of a row is its *largest* column
//! index, so callers encode pivot priority by how they number columns.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ncalg::{Monomial, NCPoly};
use crate::scalar::Field;

pub type SparseVec<F> = BTreeMap<usize, F>;

fn axpy<F: Field>(v: &mut SparseVec<F>, row: &SparseVec<F>, c: &F) {
    for (k, a) in row {
        let t = a.clone() * c;
        match v.entry(*k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !t.is_zero() {
                    e.insert(t);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + &t;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }
}

/// Rows in echelon form, keyed by pivot column; each row is normalised so
/// its pivot entry is one.
#[derive(Debug, Clone)]
pub struct Echelon<F> {
    rows: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseVec<F>)> {
        self.rows.iter().map(|(k, r)| (*k, r))
    }

    /// Reduces the leading entries of `v` until its pivot is new (or `v`
    /// vanishes).
    fn reduce_top(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        while let Some((&c, a)) = v.last_key_value() {
            match self.rows.get(&c) {
                Some(row) => {
                    let factor = -a.clone();
                    axpy(&mut v, row, &factor);
                }
                None => break,
            }
        }
        v
    }

    /// Adds `v` to the row space. Returns its new pivot column, or `None`
    /// if `v` was already in the span.
    pub fn insert(&mut self, v: SparseVec<F>) -> Option<usize> {
        let v = self.reduce_top(v);
        let (&c, a) = v.last_key_value()?;
        let inv = a.try_inv().expect("nonzero pivot");
        let v: SparseVec<F> = v.iter().map(|(k, x)| (*k, x.clone() * &inv)).collect();
        self.rows.insert(c, v);
        Some(c)
    }

    /// Canonical representative of `v` modulo the row space: no pivot
    /// column appears in the result.
    pub fn remainder(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut v = v.clone();
        let mut cursor = v.last_key_value().map(|(k, _)| *k);
        while let Some(c) = cursor {
            if let (Some(a), Some(row)) = (v.get(&c), self.rows.get(&c)) {
                let factor = -a.clone();
                axpy(&mut v, row, &factor);
            }
            cursor = v.range(..c).next_back().map(|(k, _)| *k);
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce_top(v.clone()).is_empty()
    }
}

/// Rank of a family of vectors.
pub fn rank<F: Field>(vectors: impl IntoIterator<Item = SparseVec<F>>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Basis of the kernel of the map sending the `k`-th domain basis vector to
/// `images[k]`, as coefficient vectors over the domain.
pub fn kernel<F: Field>(images: &[SparseVec<F>]) -> Vec<SparseVec<F>> {
    let t = images.len();
    let mut e = Echelon::new();
    for (k, img) in images.iter().enumerate() {
        let mut row: SparseVec<F> = img.iter().map(|(c, x)| (c + t, x.clone())).collect();
        row.insert(k, F::one());
        e.insert(row);
    }
    e.rows()
        .filter(|(p, _)| *p < t)
        .map(|(_, r)| r.clone())
        .collect()
}

/// Determinant of a square matrix given by rows.
pub fn determinant<F: Field>(mut m: Vec<Vec<F>>) -> F {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let mut det = F::one();
    for col in 0..n {
        let Some(p) = (col..n).filter(|&r| !m[r][col].is_zero()).min_by_key(|&r| m[r][col].cost()) else {
            return F::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        let inv = pivot.try_inv().expect("nonzero pivot");
        det = det * &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() * &inv;
            for c in col..n {
                let t = m[col][c].clone() * &factor;
                m[r][c] = m[r][c].clone() - t;
            }
        }
    }
    det
}

/// A basis element of a (possibly direct-sum) truncated module: the
/// summand index and a monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisElem {
    pub block: u8,
    pub mono: Monomial,
}

impl BasisElem {
    pub fn new(block: u8, mono: Monomial) -> Self {
        BasisElem { block, mono }
    }
}

impl fmt::Display for BasisElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.block == 0 {
            write!(f, "{}", self.mono)
        } else {
            write!(f, "{}[{}]", self.mono, self.block)
        }
    }
}

/// Matrix of a linear map between filtration-truncated pieces, stored by
/// sparse columns: column `j` is the image of `domain[j]` in `codomain`
/// coordinates.
#[derive(Debug, Clone)]
pub struct TruncatedMap<F> {
    pub domain: Vec<BasisElem>,
    pub codomain: Vec<BasisElem>,
    pub columns: Vec<SparseVec<F>>,
    pub levels: (usize, usize),
}

impl<F: Field> TruncatedMap<F> {
    /// Builds the matrix of `f`; every image must lie in the span of
    /// `codomain`.
    pub fn build(
        domain: Vec<BasisElem>,
        codomain: Vec<BasisElem>,
        levels: (usize, usize),
        mut f: impl FnMut(&BasisElem) -> Vec<(BasisElem, F)>,
    ) -> Result<Self> {
        let index: BTreeMap<BasisElem, usize> = codomain.iter().enumerate().map(|(k, b)| (*b, k)).collect();
        let mut columns = Vec::with_capacity(domain.len());
        for d in &domain {
            let mut col = SparseVec::new();
            for (b, c) in f(d) {
                if c.is_zero() {
                    continue;
                }
                let k = *index.get(&b).ok_or_else(|| {
                    Error::Internal(format!("image of {d} has {b} outside the codomain at level {}", levels.1))
                })?;
                axpy(&mut col, &SparseVec::from([(k, c)]), &F::one());
            }
            columns.push(col);
        }
        Ok(TruncatedMap { domain, codomain, columns, levels })
    }

    pub fn rank(&self) -> usize {
        rank(self.columns.iter().cloned())
    }

    pub fn entry(&self, row: usize, col: usize) -> F {
        self.columns[col].get(&row).cloned().unwrap_or_else(F::zero)
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        (0..self.codomain.len()).map(|r| (0..self.domain.len()).map(|c| self.entry(r, c)).collect()).collect()
    }

    /// Rank of the composition with the coordinate projection onto the
    /// codomain entries selected by `keep`.
    pub fn projected_rank(&self, keep: impl Fn(&BasisElem) -> bool) -> usize {
        let kept: Vec<bool> = self.codomain.iter().map(keep).collect();
        rank(self.columns.iter().map(|c| c.iter().filter(|(k, _)| kept[**k]).map(|(k, v)| (*k, v.clone())).collect()))
    }
}

/// Coordinates of a polynomial in a given block, as pairs for
/// [`TruncatedMap::build`].
pub fn coords<F: Field>(block: u8, p: &NCPoly<F>) -> Vec<(BasisElem, F)> {
    p.terms().map(|(m, c)| (BasisElem::new(block, *m), c.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn v(entries: &[(usize, i64)]) -> SparseVec<BigRational> {
        entries.iter().map(|(k, x)| (*k, r(*x))).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let imgs = vec![v(&[(0, 1), (1, 2)]), v(&[(0, 2), (1, 4)]), v(&[(2, 1)])];
        assert_eq!(rank(imgs.clone()), 2);
        let k = kernel(&imgs);
        assert_eq!(k.len(), 1);
        // 2 * e0 - e1 maps to zero
        let kv = &k[0];
        assert_eq!(kv.get(&0).cloned().unwrap() * r(-1), kv.get(&1).cloned().unwrap() * r(2));
        assert!(kv.get(&2).is_none());
    }

    #[test]
    fn determinant_small() {
        let m = vec![vec![r(2), r(1), r(0)], vec![r(1), r(3), r(1)], vec![r(0), r(1), r(4)]];
        // 2*(12-1) - 1*(4-0) = 18
        assert_eq!(determinant(m), r(18));
        assert_eq!(determinant(vec![vec![r(1), r(2)], vec![r(2), r(4)]]), r(0));
        assert_eq!(determinant(vec![vec![r(0), r(1)], vec![r(1), r(0)]]), r(-1));
    }

    #[test]
    fn remainder_is_canonical() {
        let mut e = Echelon::new();
        e.insert(v(&[(0, 1), (2, 1)]));
        e.insert(v(&[(1, 1), (2, 3)]));
        let a = e.remainder(&v(&[(2, 1)]));
        let b = e.remainder(&v(&[(0, -1)]));
        assert_eq!(a, b);
        assert!(e.contains(&v(&[(0, 1), (2, 1)])));
        assert!(!e.contains(&v(&[(2, 1)])));
    }
}
