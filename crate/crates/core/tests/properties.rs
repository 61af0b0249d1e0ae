use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qsphere::duality::{beta_projection, convolution, omega_basis, omega_membership, Functional};
use qsphere::hochschild::{
    character_action_law_check, character_commutes_check, square_zero_check, Hochschild,
};
use qsphere::hopf::{antipode, coproduct, coproduct_monomial, counit, counit_monomial, project_pi, Tensor};
use qsphere::ncalg::{embed_podles, filtration_basis, normal_form, AlgId, Grading, Monomial, NCPoly, Strategy as Redex};
use qsphere::scalar::{specialize, Poly};
use qsphere::{BigRational, Context, Field, RatFunc};

fn ctx() -> &'static Context<RatFunc> {
    static CTX: OnceLock<Context<RatFunc>> = OnceLock::new();
    CTX.get_or_init(Context::symbolic)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    let coeffs = || prop::collection::vec(-4i64..=4, 1..4);
    (coeffs(), coeffs()).prop_filter_map("zero denominator", |(n, d)| {
        RatFunc::new(Poly::from_i64s(&n), Poly::from_i64s(&d)).ok()
    })
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn admissible_q() -> impl Strategy<Value = BigRational> {
    prop::sample::select(vec![(2, 1), (3, 2), (-1, 3), (5, 1), (-7, 4)])
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn preset() -> impl Strategy<Value = AlgId> {
    prop::sample::select(AlgId::ALL.to_vec())
}

fn hopf_preset() -> impl Strategy<Value = AlgId> {
    prop::sample::select(vec![AlgId::Qsl2, AlgId::Laurent, AlgId::SmashZ2])
}

/// Words with small Laurent coefficients `k q^e`.
fn words(alg: AlgId, max_len: usize, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<u8>, (i64, i64))>> {
    let n = alg.generators().len() as u8;
    prop::collection::vec(
        (prop::collection::vec(0..n, 0..=max_len), (-3i64..=3, -2i64..=2)),
        1..=max_terms,
    )
}

fn lift<F: Field>(ctx: &Context<F>, ws: &[(Vec<u8>, (i64, i64))]) -> Vec<(Vec<u8>, F)> {
    ws.iter().map(|(w, (k, e))| (w.clone(), F::from_i64(*k) * ctx.qp(*e))).collect()
}

fn poly(alg: AlgId, ws: &[(Vec<u8>, (i64, i64))]) -> NCPoly<RatFunc> {
    normal_form(ctx(), alg, lift(ctx(), ws), Redex::Leftmost).unwrap()
}

fn element(alg: AlgId, max_len: usize) -> impl Strategy<Value = NCPoly<RatFunc>> {
    words(alg, max_len, 3).prop_map(move |ws| poly(alg, &ws))
}

fn hopf_element(max_len: usize) -> impl Strategy<Value = NCPoly<RatFunc>> {
    hopf_preset().prop_flat_map(move |alg| element(alg, max_len))
}

fn same_alg_triple(max_len: usize) -> impl Strategy<Value = [NCPoly<RatFunc>; 3]> {
    preset().prop_flat_map(move |alg| [element(alg, max_len), element(alg, max_len), element(alg, max_len)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + a.clone() * &c);
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        if !a.is_zero() {
            prop_assert_eq!(a.try_inv().unwrap() * &a, RatFunc::one());
        }
    }

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
    }

    #[test]
    fn specialize_is_a_ring_homomorphism(a in ratfunc(), b in ratfunc(), q0 in admissible_q()) {
        // skip the rare pole at q0
        if let (Ok(sa), Ok(sb)) = (specialize(&a, &q0), specialize(&b, &q0)) {
            prop_assert_eq!(specialize(&(a.clone() * &b), &q0).unwrap(), &sa * &sb);
            prop_assert_eq!(specialize(&(a.clone() + &b), &q0).unwrap(), sa + sb);
        }
    }

    #[test]
    fn rewriting_is_confluent(alg in preset(), ws in words_any(8)) {
        let ws: Vec<_> = ws.into_iter().map(|(w, c)| (w.into_iter().map(|l| l % alg.generators().len() as u8).collect(), c)).collect();
        let l = normal_form(ctx(), alg, lift(ctx(), &ws), Redex::Leftmost).unwrap();
        let r = normal_form(ctx(), alg, lift(ctx(), &ws), Redex::Rightmost).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn multiplication_is_associative([p, r, s] in same_alg_triple(3)) {
        let left = p.mul(ctx(), &r).mul(ctx(), &s);
        let right = p.mul(ctx(), &r.mul(ctx(), &s));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes([p, r, s] in same_alg_triple(3)) {
        prop_assert_eq!(p.mul(ctx(), &r.add(&s)), p.mul(ctx(), &r).add(&p.mul(ctx(), &s)));
    }

    #[test]
    fn specialisation_commutes_with_normal_form(alg in preset(), ws in words_any(6), q0 in admissible_q()) {
        let ws: Vec<_> = ws.into_iter().map(|(w, c)| (w.into_iter().map(|l| l % alg.generators().len() as u8).collect(), c)).collect();
        let spec = Context::specialized(q0.clone()).unwrap();
        let symbolic = poly(alg, &ws).map_coeffs(|c| specialize(c, &q0)).unwrap();
        let direct = normal_form(&spec, alg, lift(&spec, &ws), Redex::Leftmost).unwrap();
        prop_assert_eq!(symbolic, direct);
    }
}

fn words_any(max_len: usize) -> impl Strategy<Value = Vec<(Vec<u8>, (i64, i64))>> {
    prop::collection::vec((prop::collection::vec(0u8..12, 0..=max_len), (-3i64..=3, -2i64..=2)), 1..=3)
}

fn qsl2_monomial() -> impl Strategy<Value = Monomial> {
    (-3i32..=3, 0i32..=3, 0i32..=3).prop_map(|(l, m, n)| Monomial::qsl2(l, m, n))
}

fn podles_monomial() -> impl Strategy<Value = Monomial> {
    (0i32..=3, -3i32..=3).prop_map(|(i, j)| Monomial::podles(i, j))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qsl2_gradings_are_additive(x in qsl2_monomial(), y in qsl2_monomial()) {
        let prod = NCPoly::<RatFunc>::monomial(x).mul(ctx(), &NCPoly::monomial(y));
        for g in [Grading::qsl2_degree(), Grading::qsl2_weight(), Grading::qsl2_right_weight()] {
            prop_assert_eq!(g.homogeneous_degree(&prod), Some(g.degree(&x) + g.degree(&y)));
        }
    }

    #[test]
    fn podles_grading_is_additive(x in podles_monomial(), y in podles_monomial()) {
        let g = Grading::podles_degree();
        let prod = NCPoly::<RatFunc>::monomial(x).mul(ctx(), &NCPoly::monomial(y));
        prop_assert_eq!(g.homogeneous_degree(&prod), Some(g.degree(&x) + g.degree(&y)));
    }

    #[test]
    fn coproduct_is_coassociative(p in hopf_element(4)) {
        let alg = p.alg();
        let d = coproduct(ctx(), &p).unwrap();
        let left = d.expand_leg(0, &[alg, alg], |m| coproduct_monomial(ctx(), m));
        let right = d.expand_leg(1, &[alg, alg], |m| coproduct_monomial(ctx(), m));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn counit_laws(p in hopf_element(4)) {
        let d = coproduct(ctx(), &p).unwrap();
        prop_assert_eq!(d.contract_leg(0, counit_monomial::<RatFunc>).to_poly(), p.clone());
        prop_assert_eq!(d.contract_leg(1, counit_monomial::<RatFunc>).to_poly(), p);
    }

    #[test]
    fn antipode_laws(p in hopf_element(4)) {
        let alg = p.alg();
        let d = coproduct(ctx(), &p).unwrap();
        let s = |m: &Monomial| antipode(ctx(), &NCPoly::monomial(*m), 1).unwrap();
        let unit = NCPoly::scalar(alg, counit(&p));
        prop_assert_eq!(d.map_leg(0, alg, s).multiply_out(ctx()), unit.clone());
        prop_assert_eq!(d.map_leg(1, alg, s).multiply_out(ctx()), unit);
    }

    #[test]
    fn antipode_powers_compose(p in hopf_element(3)) {
        let s2 = antipode(ctx(), &antipode(ctx(), &p, 1).unwrap(), 1).unwrap();
        prop_assert_eq!(s2.clone(), antipode(ctx(), &p, 2).unwrap());
        prop_assert_eq!(antipode(ctx(), &s2, -2).unwrap(), p);
    }

    #[test]
    fn pi_is_a_coalgebra_map(p in element(AlgId::Qsl2, 4)) {
        let pi = |m: &Monomial| project_pi(&NCPoly::<RatFunc>::monomial(*m)).unwrap();
        let lhs = coproduct(ctx(), &p).unwrap().map_leg(0, AlgId::Laurent, pi).map_leg(1, AlgId::Laurent, pi);
        let rhs = coproduct(ctx(), &project_pi(&p).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pi_is_multiplicative(p in element(AlgId::Qsl2, 3), r in element(AlgId::Qsl2, 3)) {
        let lhs = project_pi(&p.mul(ctx(), &r)).unwrap();
        let rhs = project_pi(&p).unwrap().mul(ctx(), &project_pi(&r).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn embedding_is_multiplicative(b in element(AlgId::Podles, 3), c in element(AlgId::Podles, 3)) {
        let lhs = embed_podles(ctx(), &b.mul(ctx(), &c)).unwrap();
        let rhs = embed_podles(ctx(), &b).unwrap().mul(ctx(), &embed_podles(ctx(), &c).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

fn functional() -> impl Strategy<Value = Functional<RatFunc>> {
    let basis = filtration_basis(AlgId::Qsl2, 2);
    prop::collection::vec((prop::sample::select(basis), -3i64..=3, -1i64..=1), 0..5).prop_map(|vals| {
        let table: BTreeMap<Monomial, RatFunc> =
            vals.into_iter().map(|(m, k, e)| (m, RatFunc::from_int(k) * RatFunc::q_pow(e))).collect();
        Functional::table(AlgId::Qsl2, table).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn convolution_is_associative(f in functional(), g in functional(), h in functional()) {
        let left = convolution(&convolution(&f, &g).unwrap(), &h).unwrap();
        let right = convolution(&f, &convolution(&g, &h).unwrap()).unwrap();
        for m in filtration_basis(AlgId::Qsl2, 3) {
            prop_assert_eq!(left.eval_monomial(ctx(), &m).unwrap(), right.eval_monomial(ctx(), &m).unwrap(), "{}", m);
        }
    }

    #[test]
    fn counit_is_the_convolution_unit(f in functional()) {
        let e = Functional::counit(AlgId::Qsl2).unwrap();
        let fe = convolution(&f, &e).unwrap();
        let ef = convolution(&e, &f).unwrap();
        for m in filtration_basis(AlgId::Qsl2, 3) {
            let want = f.eval_monomial(ctx(), &m).unwrap();
            prop_assert_eq!(fe.eval_monomial(ctx(), &m).unwrap(), want.clone());
            prop_assert_eq!(ef.eval_monomial(ctx(), &m).unwrap(), want);
        }
    }

    #[test]
    fn beta_is_an_idempotent_right_linear_projection(x in element(AlgId::Qsl2, 3), b in element(AlgId::Podles, 2)) {
        let bx = beta_projection(ctx(), &x).unwrap();
        prop_assert_eq!(beta_projection(ctx(), &embed_podles(ctx(), &bx).unwrap()).unwrap(), bx.clone());
        let xb = x.mul(ctx(), &embed_podles(ctx(), &b).unwrap());
        prop_assert_eq!(beta_projection(ctx(), &xb).unwrap(), bx.mul(ctx(), &b));
    }

    #[test]
    fn omega_basis_elements_are_members(n in -3i32..=3, m in 0i32..=1, level in 0usize..=4) {
        for f in omega_basis(n, m, level) {
            prop_assert!(omega_membership(ctx(), &NCPoly::monomial(f), n, m).unwrap(), "{}", f);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn coboundaries_square_to_zero(seed in any::<u64>()) {
        let hs = Hochschild::new(ctx().clone());
        let r = square_zero_check(&hs, 3, seed, 3).unwrap();
        prop_assert!(r.pass(), "{:?}", r.failures);
    }

    #[test]
    fn characters_act_and_commute_with_b(seed in any::<u64>()) {
        let hs = Hochschild::new(ctx().clone());
        let law = character_action_law_check(&hs, 3, seed, 3).unwrap();
        prop_assert!(law.pass(), "{:?}", law.failures);
        let commute = character_commutes_check(&hs, 2, seed, 3).unwrap();
        prop_assert!(commute.pass(), "{:?}", commute.failures);
    }
}

#[test]
fn tensor_counit_contracts_to_scalars() {
    let p = NCPoly::<RatFunc>::generator(AlgId::Qsl2, 0);
    let t = Tensor::pair(&p, &p);
    assert_eq!(t.contract_leg(0, counit_monomial::<RatFunc>).contract_leg(0, counit_monomial::<RatFunc>).to_scalar(), RatFunc::one());
}
