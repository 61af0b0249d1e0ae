//! The bimodules `ω_{n,m}`, their composition law, functionals and
//! convolution, the projection `β` onto the sphere, the functional `γ` and
//! the left inverse of `σ`.

mod functional;
mod omega;
mod projection;

pub use functional::{convolution, Functional};
pub use omega::{fridge_grid, omega_basis, omega_membership, omega_product_check, FridgeCell, OmegaModule};
pub use projection::{
    antipode_square_check, beta_check, beta_projection, gamma_functional, sigma_inverse, sigma_inverse_check,
    transes_check, untwisted_slice, AntipodeSquareReport, BetaReport, SigmaInverseReport, TransesReport,
};

#[cfg(test)]
mod tests {
    use std::collections::{BTreeMap, BTreeSet};

    use num_traits::Zero;

    use super::*;
    use crate::context::Context;
    use crate::hochschild::{CharacterFunctional, PodlesCharacter};
    use crate::ncalg::{filtration_basis, parse_poly, AlgId, Monomial, NCPoly};
    use crate::scalar::{parse_scalar, RatFunc};

    fn ctx() -> Context<RatFunc> {
        Context::symbolic()
    }

    fn sl(ctx: &Context<RatFunc>, s: &str) -> NCPoly<RatFunc> {
        parse_poly(ctx, AlgId::Qsl2, s).unwrap()
    }

    fn pod(ctx: &Context<RatFunc>, s: &str) -> NCPoly<RatFunc> {
        parse_poly(ctx, AlgId::Podles, s).unwrap()
    }

    #[test]
    fn membership_examples() {
        let ctx = ctx();
        assert!(omega_membership(&ctx, &sl(&ctx, "b"), 1, 0).unwrap());
        assert!(omega_membership(&ctx, &sl(&ctx, "b"), 1, 3).unwrap());
        assert!(omega_membership(&ctx, &sl(&ctx, "b*c"), 0, 1).unwrap());
        assert!(!omega_membership(&ctx, &sl(&ctx, "b"), 0, 0).unwrap());
        assert!(!omega_membership(&ctx, &sl(&ctx, "a + c"), 1, 0).unwrap());
    }

    #[test]
    fn basis_examples_and_counts() {
        let ctx = ctx();
        let set = |v: Vec<Monomial>| v.into_iter().collect::<BTreeSet<_>>();
        let want: BTreeSet<Monomial> = ["1", "b*c", "a*c", "d*b"]
            .iter()
            .map(|s| *sl(&ctx, s).as_single_term().unwrap().0)
            .collect();
        assert_eq!(set(omega_basis(0, 0, 2)), want);
        assert_eq!(set(omega_basis(1, 0, 1)), set(vec![Monomial::qsl2(1, 0, 0), Monomial::qsl2(0, 1, 0)]));
        assert!(omega_basis(5, 0, 1).is_empty());
        for n in -3..=3 {
            for level in 0..=5usize {
                let basis = omega_basis(n, 0, level);
                for f in &basis {
                    assert!(omega_membership(&ctx, &NCPoly::monomial(*f), n, 0).unwrap());
                }
                // index triples (l, m, k) with l + m - k = n and |l| + m + k <= level
                let lv = level as i32;
                let count = (-lv..=lv)
                    .flat_map(|l| (0..=lv).flat_map(move |m| (0..=lv).map(move |k| (l, m, k))))
                    .filter(|&(l, m, k)| l + m - k == n && l.abs() + m + k <= lv)
                    .count();
                assert_eq!(basis.len(), count, "n = {n}, level = {level}");
            }
        }
    }

    #[test]
    fn composition_law_grid() {
        let ctx = ctx();
        let grid = fridge_grid(&ctx, 4).unwrap();
        assert_eq!(grid.len(), 36);
        for c in &grid {
            assert!(c.pass(), "{c:?}");
            assert_eq!(c.spanning_defect, 0, "{c:?}");
        }
    }

    #[test]
    fn convolution_laws() {
        let ctx = ctx();
        let s = parse_scalar("2").unwrap();
        let t = parse_scalar("q + 1").unwrap();
        let xs = Functional::character(&CharacterFunctional::new(s.clone()).unwrap());
        let xt = Functional::character(&CharacterFunctional::new(t.clone()).unwrap());
        let xst = Functional::character(&CharacterFunctional::new(s * &t).unwrap());
        let prod = convolution(&xs, &xt).unwrap();
        let eps = Functional::counit(AlgId::Qsl2).unwrap();
        let table: BTreeMap<Monomial, RatFunc> = filtration_basis(AlgId::Qsl2, 2)
            .into_iter()
            .enumerate()
            .map(|(k, m)| (m, parse_scalar(&format!("{k} - q")).unwrap()))
            .collect();
        let phi = Functional::table(AlgId::Qsl2, table).unwrap();
        let left_unit = convolution(&eps, &phi).unwrap();
        let right_unit = convolution(&phi, &eps).unwrap();
        let assoc_l = convolution(&convolution(&phi, &xt).unwrap(), &phi).unwrap();
        let assoc_r = convolution(&phi, &convolution(&xt, &phi).unwrap()).unwrap();
        for m in filtration_basis(AlgId::Qsl2, 3) {
            assert_eq!(prod.eval_monomial(&ctx, &m).unwrap(), xst.eval_monomial(&ctx, &m).unwrap(), "{m}");
            assert_eq!(left_unit.eval_monomial(&ctx, &m).unwrap(), phi.eval_monomial(&ctx, &m).unwrap());
            assert_eq!(right_unit.eval_monomial(&ctx, &m).unwrap(), phi.eval_monomial(&ctx, &m).unwrap());
            assert_eq!(assoc_l.eval_monomial(&ctx, &m).unwrap(), assoc_r.eval_monomial(&ctx, &m).unwrap());
        }
        assert!(convolution(&phi, &Functional::counit(AlgId::Podles).unwrap()).is_err());
    }

    #[test]
    fn beta_examples() {
        let ctx = ctx();
        assert!(beta_projection(&ctx, &sl(&ctx, "a")).unwrap().is_zero());
        assert_eq!(beta_projection(&ctx, &sl(&ctx, "b*c")).unwrap(), pod(&ctx, "y0"));
        assert_eq!(beta_projection(&ctx, &sl(&ctx, "1")).unwrap(), pod(&ctx, "1"));
        let rep = beta_check(&ctx, 4, 20, 3).unwrap();
        assert!(rep.pass(), "{rep:?}");
    }

    #[test]
    fn gamma_and_transes() {
        let ctx = ctx();
        let chi = PodlesCharacter::counit();
        let gamma = gamma_functional(&chi);
        assert_eq!(gamma.apply(&ctx, &sl(&ctx, "1")).unwrap(), parse_scalar("1").unwrap());
        let prod = convolution(&Functional::podles_character(&chi), &gamma).unwrap();
        assert!(prod.apply(&ctx, &pod(&ctx, "y0")).unwrap().is_zero());
        assert!(prod.apply(&ctx, &pod(&ctx, "y0*y1")).unwrap().is_zero());
        assert!(transes_check(&ctx, &chi, 4).unwrap().pass());
        let z = RatFunc::from_int(0);
        let chi = PodlesCharacter::new(&ctx, [parse_scalar("3*q").unwrap(), z.clone(), z]).unwrap();
        let rep = transes_check(&ctx, &chi, 4).unwrap();
        assert!(rep.pass(), "{rep:?}");
    }

    #[test]
    fn sigma_inverse_examples() {
        let ctx = ctx();
        let gamma = gamma_functional(&PodlesCharacter::counit());
        let y1 = sl(&ctx, "b*d");
        assert_eq!(sigma_inverse(&ctx, &y1.scale(&ctx.qp(-2)), &gamma).unwrap(), y1);
        assert_eq!(sigma_inverse(&ctx, &sl(&ctx, "1"), &gamma).unwrap(), sl(&ctx, "1"));
        let rep = sigma_inverse_check(&ctx, 4).unwrap();
        assert!(rep.pass(), "{rep:?}");
        assert!(antipode_square_check(&ctx, 4).unwrap().pass());
    }

    #[test]
    fn untwisted_slice_is_trivial_off_zero() {
        let ctx = ctx();
        for c in untwisted_slice(&ctx, 4).unwrap() {
            assert_eq!(c.dim, usize::from(c.i == 0));
            assert!(c.matches);
        }
    }
}
