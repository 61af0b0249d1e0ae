use serde::Serialize;

use crate::context::Context;
use crate::error::Result;
use crate::hochschild::{omega_monomials, BimoduleDesc};
use crate::hopf::{antipode_pow, left_coaction, Tensor};
use crate::linalg::{rank, SparseVec};
use crate::ncalg::{AlgId, Monomial, NCPoly};
use crate::scalar::Field;

/// `ω_{n,m} ⊂ A_{S^{2m}}`, truncated at word length `level`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OmegaModule {
    pub n: i32,
    pub m: i32,
    pub level: usize,
}

impl OmegaModule {
    pub fn new(n: i32, m: i32, level: usize) -> Self {
        OmegaModule { n, m, level }
    }

    pub fn desc(&self) -> BimoduleDesc {
        BimoduleDesc::omega(self.n, self.m)
    }

    pub fn basis(&self) -> Vec<Monomial> {
        omega_basis(self.n, self.m, self.level)
    }

    /// `x ◁ y = x S^{2m}(y)`.
    pub fn act_right<F: Field>(&self, ctx: &Context<F>, x: &NCPoly<F>, y: &NCPoly<F>) -> Result<NCPoly<F>> {
        Ok(x.mul(ctx, &antipode_pow(ctx, y, 2 * self.m)?))
    }
}

/// Whether `(π ⊗ id)Δ(x) = z^n ⊗ x`. The twist `m` does not constrain
/// membership; it is accepted for symmetry with the module's name.
pub fn omega_membership<F: Field>(ctx: &Context<F>, x: &NCPoly<F>, n: i32, _m: i32) -> Result<bool> {
    if x.alg() != AlgId::Qsl2 {
        return Ok(false);
    }
    let z = NCPoly::monomial(Monomial::laurent(n));
    Ok(left_coaction(ctx, x)? == Tensor::pair(&z, x))
}

/// Monomials `f_{lm'n'}` with `l + m' - n' = n` and length `<= level`.
pub fn omega_basis(n: i32, _m: i32, level: usize) -> Vec<Monomial> {
    omega_monomials(n, level)
}

/// One instance of the composition law `ω_{n,m} ⊗_B ω_{i,j} → ω_{n+i,m+j}`,
/// `x ⊗ y ↦ x S^{2m}(y)`, over basis pairs with `|x| + |y| <= level`.
#[derive(Debug, Clone, Serialize)]
pub struct FridgeCell {
    pub left: (i32, i32),
    pub right: (i32, i32),
    pub level: usize,
    pub products: usize,
    /// Products outside `ω_{n+i,m+j}`.
    pub membership_failures: Vec<String>,
    /// Dimension of the target truncated at `level`.
    pub target_dim: usize,
    /// Dimension spanned by the products.
    pub spanned: usize,
    pub spanning_defect: usize,
}

impl FridgeCell {
    pub fn pass(&self) -> bool {
        self.membership_failures.is_empty()
    }
}

pub fn omega_product_check<F: Field>(
    ctx: &Context<F>,
    (n, m): (i32, i32),
    (i, j): (i32, i32),
    level: usize,
) -> Result<FridgeCell> {
    let left = OmegaModule::new(n, m, level);
    let right = omega_basis(i, j, level);
    let target = omega_basis(n + i, m + j, level);
    let index = |f: &Monomial| target.iter().position(|t| t == f);
    let mut membership_failures = Vec::new();
    let mut vectors: Vec<SparseVec<F>> = Vec::new();
    for x in left.basis() {
        for y in right.iter().filter(|y| x.len() + y.len() <= level) {
            let p = left.act_right(ctx, &NCPoly::monomial(x), &NCPoly::monomial(*y))?;
            if !omega_membership(ctx, &p, n + i, m + j)? {
                membership_failures.push(format!("{x} ◁ {y} = {p}"));
                continue;
            }
            let mut v = SparseVec::new();
            for (f, c) in p.terms() {
                match index(f) {
                    Some(k) => {
                        v.insert(k, c.clone());
                    }
                    None => membership_failures.push(format!("{x} ◁ {y} leaves the truncation")),
                }
            }
            vectors.push(v);
        }
    }
    let products = vectors.len();
    let spanned = rank(vectors);
    Ok(FridgeCell {
        left: (n, m),
        right: (i, j),
        level,
        products,
        membership_failures,
        target_dim: target.len(),
        spanned,
        spanning_defect: target.len() - spanned,
    })
}

/// All pairs `(n,m), (i,j) ∈ {-1,0,1} × {0,1}`.
pub fn fridge_grid<F: Field>(ctx: &Context<F>, level: usize) -> Result<Vec<FridgeCell>> {
    let labels: Vec<(i32, i32)> = (-1..=1).flat_map(|n| (0..=1).map(move |m| (n, m))).collect();
    let pairs: Vec<((i32, i32), (i32, i32))> =
        labels.iter().flat_map(|l| labels.iter().map(move |r| (*l, *r))).collect();
    let results: Vec<Result<FridgeCell>> = std::thread::scope(|s| {
        let handles: Vec<_> =
            pairs.iter().map(|&(l, r)| s.spawn(move || omega_product_check(ctx, l, r, level))).collect();
        handles.into_iter().map(|h| h.join().expect("fridge worker panicked")).collect()
    });
    results.into_iter().collect()
}
