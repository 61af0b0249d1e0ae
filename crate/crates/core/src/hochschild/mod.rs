//! Hochschild cochains of the Podles sphere with coefficients in
//! `B`, `B ⊗ A`, `A_{S^{2m}}` and `ω_{n,m}`: the standard coboundary `b`,
//! the coboundary `d` computing `Ext_B(k, ad(M))`, the isomorphism `ξ`
//! intertwining them, the action of characters on cochains, twisted
//! centres `H^0(B, ω_{i,j})` and the automorphism `σ`.

mod center;
mod character;
mod checks;
mod cochain;
mod module;

pub use center::{
    h0_cell, h0_expected, h0_min_level, h0_table, h0_twisted_center, sigma_check, sigma_in_qsl2, sigma_map, H0Cell,
    SigmaReport,
};
pub use character::{character_action, CharacterFunctional, PodlesCharacter};
pub use checks::{
    character_action_law_check, character_commutes_check, random_cochain, random_element, random_podles,
    square_zero_check, xi_conjugation_check, xi_inverse_check, IdentityReport,
};
pub use cochain::{hochschild_b, twisted_d, xi, Cochain, Hochschild, Legs, XiDirection};
pub use module::{omega_monomials, BimoduleDesc, Carrier};

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;
    use std::sync::Arc;

    use super::*;
    use crate::context::Context;
    use crate::hopf::Tensor;
    use crate::ncalg::{filtration_basis, parse_poly, AlgId, Monomial, NCPoly};
    use crate::scalar::{parse_scalar, RatFunc};

    fn hs() -> Arc<Hochschild<RatFunc>> {
        Hochschild::new(Context::symbolic())
    }

    fn pod(hs: &Hochschild<RatFunc>, s: &str) -> NCPoly<RatFunc> {
        parse_poly(hs.ctx(), AlgId::Podles, s).unwrap()
    }

    fn sl(hs: &Hochschild<RatFunc>, s: &str) -> NCPoly<RatFunc> {
        parse_poly(hs.ctx(), AlgId::Qsl2, s).unwrap()
    }

    fn mono(hs: &Hochschild<RatFunc>, s: &str) -> Monomial {
        *pod(hs, s).as_single_term().unwrap().0
    }

    #[test]
    fn coboundary_of_constants_in_b() {
        let hs = hs();
        let y0 = pod(&hs, "y0");
        let phi = Cochain::constant(BimoduleDesc::b(), Tensor::pure(&[&y0])).unwrap();
        let v = hochschild_b(&hs, &phi).eval(&[mono(&hs, "y1")]).unwrap();
        let want = pod(&hs, "y0*y1").scale(&parse_scalar("q^-2 - 1").unwrap());
        assert_eq!(v.to_poly(), want);

        let one = Cochain::constant(BimoduleDesc::b(), Tensor::pure(&[&pod(&hs, "1")])).unwrap();
        for m in filtration_basis(AlgId::Podles, 2) {
            assert!(hochschild_b(&hs, &one).eval(&[m]).unwrap().is_zero());
        }
    }

    #[test]
    fn twisted_coboundary_of_unit() {
        let hs = hs();
        let ctx = hs.ctx();
        // on A itself ad(x)1 = x_(1) S(x_(2)) = ε(x)
        let one = Tensor::pure(&[&NCPoly::one(AlgId::Qsl2)]);
        let phi = Cochain::constant(BimoduleDesc::twisted(0), one).unwrap();
        for m in filtration_basis(AlgId::Podles, 2) {
            assert!(twisted_d(&hs, &phi).unwrap().eval(&[m]).unwrap().is_zero(), "{m}");
        }
        // on B ⊗ A the legs stay apart; only their product vanishes
        let unit = Tensor::one(&[AlgId::Podles, AlgId::Qsl2]);
        let phi = Cochain::constant(BimoduleDesc::ba(), unit).unwrap();
        let v = twisted_d(&hs, &phi).unwrap().eval(&[mono(&hs, "y0")]).unwrap();
        assert!(!v.is_zero());
        let mut prod = NCPoly::zero(AlgId::Qsl2);
        for (k, c) in v.terms() {
            let l = crate::ncalg::embed_podles(ctx, &NCPoly::monomial(k[0])).unwrap();
            prod.add_scaled(&l.mul(ctx, &NCPoly::monomial(k[1])), c);
        }
        assert!(prod.is_zero());
    }

    #[test]
    fn xi_in_low_degree() {
        let hs = hs();
        let unit = Tensor::one(&[AlgId::Podles, AlgId::Qsl2]);
        let c = Cochain::constant(BimoduleDesc::ba(), unit.clone()).unwrap();
        assert_eq!(xi(&hs, &c, XiDirection::Forward).unwrap().eval(&[]).unwrap(), unit);

        let y0 = mono(&hs, "y0");
        let phi = Cochain::from_table(BimoduleDesc::ba(), 1, 1, BTreeMap::from([(vec![y0], unit)])).unwrap();
        // Δ(y0) has first leg y0 exactly in y0 ⊗ (q bc + da)
        let got = xi(&hs, &phi, XiDirection::Forward).unwrap().eval(&[y0]).unwrap();
        let want = Tensor::pair(&pod(&hs, "1"), &sl(&hs, "1 + q*b*c + q^-1*b*c"));
        assert_eq!(got, want);
        assert!(xi(&hs, &phi, XiDirection::Forward).unwrap().eval(&[mono(&hs, "y0^2")]).is_err());
        assert!(xi(&hs, &Cochain::constant(BimoduleDesc::b(), Tensor::pure(&[&pod(&hs, "1")])).unwrap(), XiDirection::Forward).is_err());
    }

    #[test]
    fn randomized_identities() {
        let hs = hs();
        for rep in [
            xi_conjugation_check(&hs, 9, 7, 3).unwrap(),
            xi_inverse_check(&hs, 6, 7, 3).unwrap(),
            square_zero_check(&hs, 4, 7, 3).unwrap(),
            character_commutes_check(&hs, 6, 7, 3).unwrap(),
            character_action_law_check(&hs, 6, 7, 3).unwrap(),
        ] {
            assert!(rep.pass(), "{rep:?}");
            assert!(rep.nontrivial > 0, "{rep:?}");
        }
    }

    #[test]
    fn counit_character_acts_trivially() {
        let hs = hs();
        let v = Tensor::pair(&pod(&hs, "y0"), &sl(&hs, "1"));
        let phi = Cochain::constant(BimoduleDesc::ba(), v.clone()).unwrap();
        let x = CharacterFunctional::new(parse_scalar("3").unwrap()).unwrap();
        // y0 = bc has right weight 0, so every X_t fixes y0 ⊗ 1
        assert_eq!(character_action(&hs, &x, &phi).unwrap().eval(&[]).unwrap(), v);
        assert_eq!(character_action(&hs, &CharacterFunctional::counit(), &phi).unwrap().eval(&[]).unwrap(), v);
    }

    #[test]
    fn twisted_centre_examples() {
        let ctx = Context::<RatFunc>::symbolic();
        let sol = |i, j| h0_twisted_center(&ctx, i, j, h0_min_level(i, j)).unwrap();
        assert_eq!(sol(0, 0), vec![NCPoly::one(AlgId::Qsl2)]);
        assert_eq!(sol(0, 1), vec![parse_poly(&ctx, AlgId::Qsl2, "b*c").unwrap()]);
        assert!(sol(1, 1).is_empty());
        assert_eq!(sol(2, 1), vec![parse_poly(&ctx, AlgId::Qsl2, "b^2").unwrap()]);
        assert!(h0_twisted_center(&ctx, 2, 1, 5).is_err());
        for i in -4..=4 {
            let c = h0_cell(&ctx, i, 0, None).unwrap();
            assert_eq!(c.dim, usize::from(i == 0));
            assert!(c.matches && c.in_a0);
        }
    }

    #[test]
    fn y0_commutation_weight() {
        // y0 f = q^{-2l} f y0 for f = f_{lmn}
        let ctx = Context::<RatFunc>::symbolic();
        let y0 = parse_poly(&ctx, AlgId::Qsl2, "b*c").unwrap();
        for f in filtration_basis(AlgId::Qsl2, 4) {
            let (l, _, _) = f.qsl2_indices();
            let fp = NCPoly::monomial(f);
            assert_eq!(y0.mul(&ctx, &fp), fp.mul(&ctx, &y0).scale(&ctx.qp(-2 * l as i64)), "{f}");
        }
    }

    #[test]
    fn sigma_examples() {
        let ctx = Context::<RatFunc>::symbolic();
        let chi = PodlesCharacter::counit();
        let p = |s| parse_poly(&ctx, AlgId::Podles, s).unwrap();
        assert_eq!(sigma_map(&ctx, &p("y1"), &chi).unwrap(), p("q^-2*y1"));
        assert_eq!(sigma_map(&ctx, &p("y0"), &chi).unwrap(), p("y0"));
        assert_eq!(sigma_map(&ctx, &p("y-1"), &chi).unwrap(), p("q^2*y-1"));
        assert_eq!(sigma_map(&ctx, &p("y0*y1"), &chi).unwrap(), p("q^-2*y0*y1"));
        assert!(sigma_check(&ctx, 4).unwrap().pass());
    }
}
