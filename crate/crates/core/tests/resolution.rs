use proptest::prelude::*;
use qsphere::hochschild::h0_twisted_center;
use qsphere::koszul::{z_minus, zeta_matrix, NuReducer};
use qsphere::ncalg::{filtration_basis, AlgId, Grading, NCPoly};
use qsphere::{RatFunc, SymbolicContext};

#[test]
fn residue_classes_are_independent_and_spanning() {
    let ctx = SymbolicContext::symbolic();
    let red = NuReducer::new(&ctx, 10);
    assert!(red.dependent_representatives().is_empty());
    assert!(red.unreduced_monomials().is_empty());
}

#[test]
fn zeta_maps_v_j_into_v_j_plus_one() {
    let ctx = SymbolicContext::symbolic();
    for j in 0..=8 {
        let r = zeta_matrix(&ctx, j).unwrap();
        assert!(r.full_column_rank, "j = {j}");
    }
}

#[test]
fn untwisted_centre_is_the_constants() {
    let ctx = SymbolicContext::symbolic();
    for level in [2, 4, 6] {
        let sol = h0_twisted_center(&ctx, 0, 0, level).unwrap();
        assert_eq!(sol, vec![NCPoly::one(AlgId::Qsl2)], "level {level}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mixed_degree_times_z_minus_is_not_homogeneous(
        picks in prop::collection::vec((0usize..1000, 1i64..=3), 2..5)
    ) {
        let ctx = SymbolicContext::symbolic();
        let basis = filtration_basis(AlgId::Podles, 6);
        let mut a = NCPoly::<RatFunc>::zero(AlgId::Podles);
        for (k, c) in picks {
            a.add_term(basis[k % basis.len()], RatFunc::from_int(c));
        }
        let g = Grading::podles_degree();
        prop_assume!(!a.is_zero() && g.homogeneous_degree(&a).is_none());
        prop_assert_eq!(g.homogeneous_degree(&a.mul(&ctx, &z_minus(&ctx))), None);
    }
}
