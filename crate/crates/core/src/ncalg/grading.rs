use std::collections::BTreeMap;

use super::{AlgId, Monomial, NCPoly};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// An integer degree on each generator, extended additively to words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    pub name: &'static str,
    pub alg: AlgId,
    pub degrees: Vec<i32>,
}

impl Grading {
    /// `deg y_i = i` on the Podles sphere.
    pub fn podles_degree() -> Self {
        Grading { name: "podles-degree", alg: AlgId::Podles, degrees: vec![-1, 0, 1] }
    }

    /// `deg f_{lmn} = l`: `a` counts `+1`, `d` counts `-1`.
    pub fn qsl2_degree() -> Self {
        Grading { name: "qsl2-degree", alg: AlgId::Qsl2, degrees: vec![1, 0, 0, -1] }
    }

    /// Left coaction weight `l + m - n` of `f_{lmn}`.
    pub fn qsl2_weight() -> Self {
        Grading { name: "qsl2-weight", alg: AlgId::Qsl2, degrees: vec![1, 1, -1, -1] }
    }

    /// Right coaction weight: `(id ⊗ π)Δ(f) = f ⊗ z^k`.
    pub fn qsl2_right_weight() -> Self {
        Grading { name: "qsl2-right-weight", alg: AlgId::Qsl2, degrees: vec![1, -1, 1, -1] }
    }

    pub fn laurent_degree() -> Self {
        Grading { name: "laurent-degree", alg: AlgId::Laurent, degrees: vec![1, -1] }
    }

    pub fn degree(&self, m: &Monomial) -> i32 {
        debug_assert_eq!(m.alg(), self.alg);
        m.word().iter().map(|&l| self.degrees[l as usize]).sum()
    }

    /// Splits `p` into homogeneous components.
    pub fn decompose<F: Field>(&self, p: &NCPoly<F>) -> Result<BTreeMap<i32, NCPoly<F>>> {
        if p.alg() != self.alg {
            return Err(Error::AlgebraMismatch { left: p.alg(), right: self.alg });
        }
        let mut out: BTreeMap<i32, NCPoly<F>> = BTreeMap::new();
        for (m, c) in p.terms() {
            out.entry(self.degree(m)).or_insert_with(|| NCPoly::zero(self.alg)).add_term(*m, c.clone());
        }
        if out.is_empty() {
            out.insert(0, NCPoly::zero(self.alg));
        }
        Ok(out)
    }

    /// The degree of `p` if it is homogeneous and nonzero.
    pub fn homogeneous_degree<F: Field>(&self, p: &NCPoly<F>) -> Option<i32> {
        let mut degs = p.monomials().map(|m| self.degree(m));
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }
}

/// Components of `p` under `grading`.
pub fn grade_decompose<F: Field>(p: &NCPoly<F>, grading: &Grading) -> Result<BTreeMap<i32, NCPoly<F>>> {
    grading.decompose(p)
}
