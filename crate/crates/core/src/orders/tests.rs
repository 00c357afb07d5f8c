use std::sync::{Arc, OnceLock};

use num::BigInt;

use crate::exactfield::{quad_int_ring_is_maximal, same_ideal, FieldTower, QuadElem, Rat, Tower, TowerElems};
use crate::hopfcore::{verify_hopf_axioms, Status, VerifyOptions};
use crate::nikshych::{build_h, characters_h};

use super::*;

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

fn pi_tower3() -> Tower {
    static TOWER: OnceLock<Tower> = OnceLock::new();
    TOWER.get_or_init(|| FieldTower::with_pi(3).unwrap()).clone()
}

fn kc3() -> Arc<HopfData> {
    static KC3: OnceLock<Arc<HopfData>> = OnceLock::new();
    KC3.get_or_init(|| group_algebra_cp(&pi_tower3()).unwrap()).clone()
}

/// Verified H_3 over the π-tower, built once.
fn h3() -> Arc<HopfData> {
    static H3: OnceLock<Arc<HopfData>> = OnceLock::new();
    H3.get_or_init(|| {
        let h = build_h(&pi_tower3()).unwrap();
        let report = verify_hopf_axioms(&h, &VerifyOptions::default());
        assert!(report.all_passed());
        Arc::new(h)
    })
    .clone()
}

fn alpha_zeta_minus_one(tw: &Tower) -> IdealSpec {
    IdealSpec::principal(QuadElem::from_cyc(&tw.zeta_p().unwrap() - &tw.one_cyc())).unwrap()
}

fn alpha_pi(tw: &Tower) -> IdealSpec {
    IdealSpec::principal(tw.gen_t().unwrap()).unwrap()
}

fn alpha_one(tw: &Tower) -> IdealSpec {
    IdealSpec::principal(tw.one()).unwrap()
}

#[test]
fn group_algebra_basics() {
    let h = kc3();
    assert!(h.is_verified());
    // Δ(σ) = σ⊗σ, S(σ) = σ^{p−1}, ε(σ^i) = 1
    let sigma = h.basis_elem(1);
    assert_eq!(h.comultiply(&sigma), crate::hopfcore::TensorElem::product(&sigma, &sigma));
    assert_eq!(h.antipode_of(&sigma), h.basis_elem(2));
    for i in 0..3 {
        assert!(h.counit_of(&h.basis_elem(i)).is_one());
    }
}

#[test]
fn larson_minimal_case_is_group_ring() {
    let tw = pi_tower3();
    let h = kc3();
    let x = larson_order(&h, &alpha_zeta_minus_one(&tw)).unwrap();
    // basis is {(σ−1)^i}; the lattice equals the span of {σ^i}
    let trivial =
        OrderLattice::from_free_basis(h.clone(), (0..3).map(|i| h.basis_elem(i)).collect()).unwrap();
    assert!(order_contains_order(&x, &trivial).unwrap());
    assert!(order_contains_order(&trivial, &x).unwrap());
    let report = verify_hopf_order(&x).unwrap();
    assert!(report.all_passed(), "{report:?}");
}

#[test]
fn larson_rejects_non_containing_ideal() {
    let tw = pi_tower3();
    let h = kc3();
    let two = IdealSpec::principal(tw.scalar_from_int(2)).unwrap();
    assert!(matches!(larson_order(&h, &two), Err(OrderError::ContainmentViolation)));
}

#[test]
fn larson_orders_verify_for_all_alphas() {
    let tw = pi_tower3();
    let h = kc3();
    for alpha in [alpha_zeta_minus_one(&tw), alpha_one(&tw), alpha_pi(&tw)] {
        let x = larson_order(&h, &alpha).unwrap();
        let report = verify_hopf_order(&x).unwrap();
        assert!(report.all_passed(), "{report:?}");
    }
}

#[test]
fn augmented_group_ring_fails_coproduct() {
    // the span of {σ^i} ∪ {(1/p)Σσ^i}, free basis {λ, σ, σ²}: closed
    // under multiplication but not under comultiplication
    let tw = pi_tower3();
    let h = kc3();
    let third = tw.scalar_from_rat(rat(1, 3));
    let mut lambda = HopfElem::zero();
    for i in 0..3 {
        lambda.add_term(i, &third);
    }
    let x = OrderLattice::from_free_basis(h.clone(), vec![lambda, h.basis_elem(1), h.basis_elem(2)]).unwrap();
    let report = verify_hopf_order(&x).unwrap();
    assert!(!report.all_passed());
    for c in report.checks.iter() {
        if c.check_id.starts_with("order/03-multiplication") {
            assert_eq!(c.status, Status::Pass, "{report:?}");
        }
        if c.check_id.starts_with("order/04-comultiplication") {
            assert_eq!(c.status, Status::Fail);
            assert!(c.witness.is_some());
        }
    }
}

#[test]
fn integrals_of_larson_orders() {
    let tw = pi_tower3();
    let h = kc3();
    let zeta1 = QuadElem::from_cyc(&tw.zeta_p().unwrap() - &tw.one_cyc());
    // H((ζ−1)): ε(Λ) = ((ζ−1)^{p−1}) = (p) up to unit
    let x = larson_order(&h, &alpha_zeta_minus_one(&tw)).unwrap();
    verify_hopf_order(&x).unwrap();
    let ix = integrals(&x).unwrap();
    assert!(same_ideal(&ix.eps_image, &zeta1.pow(2).unwrap()));
    assert!(same_ideal(&ix.eps_image, &tw.scalar_from_int(3)));
    // the generator is an honest integral: σ·Λ = Λ
    let sigma = h.basis_elem(1);
    assert_eq!(h.multiply(&sigma, &ix.generator), ix.generator);
    // H((π)): ε(Λ) = (π^{p−1}) = (√p) up to unit
    let xpi = larson_order(&h, &alpha_pi(&tw)).unwrap();
    verify_hopf_order(&xpi).unwrap();
    let ipi = integrals(&xpi).unwrap();
    let sqrt_p = QuadElem::from_cyc(tw.sqrt_p().unwrap());
    assert!(same_ideal(&ipi.eps_image, &sqrt_p));
    // H((1)): ε(Λ) = (1)
    let xone = larson_order(&h, &alpha_one(&tw)).unwrap();
    verify_hopf_order(&xone).unwrap();
    let ione = integrals(&xone).unwrap();
    assert!(same_ideal(&ione.eps_image, &tw.one()));
}

#[test]
fn larson_product_for_all_alphas() {
    let tw = pi_tower3();
    let h = kc3();
    for alpha in [alpha_zeta_minus_one(&tw), alpha_one(&tw), alpha_pi(&tw)] {
        let x = larson_order(&h, &alpha).unwrap();
        verify_hopf_order(&x).unwrap();
        let (ok, e1, e2) = larson_product_check(&x).unwrap();
        assert!(ok, "product was ({})·({})", e1, e2);
    }
}

#[test]
fn dual_is_involutive_and_contains_characters() {
    let tw = pi_tower3();
    let h = kc3();
    let x = larson_order(&h, &alpha_pi(&tw)).unwrap();
    verify_hopf_order(&x).unwrap();
    let dual = dual_order(&x).unwrap();
    let report = verify_hopf_order(&dual).unwrap();
    assert!(report.all_passed(), "{report:?}");
    let double = dual_order(&dual).unwrap();
    assert_eq!(double.basis(), x.basis());
    // characters σ ↦ ζ^k of KC_p lie in the dual of every H(I)
    for alpha in [alpha_zeta_minus_one(&tw), alpha_one(&tw), alpha_pi(&tw)] {
        let x = larson_order(&h, &alpha).unwrap();
        verify_hopf_order(&x).unwrap();
        let dual = dual_order(&x).unwrap();
        for k in 0..3i64 {
            let mut chi = HopfElem::zero();
            for i in 0..3i64 {
                chi.add_term(i as u32, &QuadElem::from_cyc(tw.zeta_p_pow(k * i).unwrap()));
            }
            assert!(dual.contains(&chi).unwrap(), "character {k}");
        }
    }
}

#[test]
fn dual_order_matches_z_lattice_dual() {
    let tw = pi_tower3();
    let h = kc3();
    let x = larson_order(&h, &alpha_pi(&tw)).unwrap();
    verify_hopf_order(&x).unwrap();
    let ring = ring_basis(&tw).unwrap();
    assert!(dual_order_lattice_crosscheck(&x, &ring).unwrap());
}

#[test]
fn larson_monotonicity() {
    let tw = pi_tower3();
    let h = kc3();
    let minimal = larson_order(&h, &alpha_zeta_minus_one(&tw)).unwrap();
    let middle = larson_order(&h, &alpha_pi(&tw)).unwrap();
    let maximal = larson_order(&h, &alpha_one(&tw)).unwrap();
    assert!(order_contains_order(&middle, &minimal).unwrap());
    assert!(order_contains_order(&maximal, &middle).unwrap());
    assert!(!order_contains_order(&minimal, &middle).unwrap());
    assert!(!order_contains_order(&middle, &maximal).unwrap());
}

#[test]
fn ideal_condition_instances() {
    let tw = pi_tower3();
    assert!(check_ideal_condition(&tw, &alpha_pi(&tw)).unwrap());
    assert!(!check_ideal_condition(&tw, &alpha_zeta_minus_one(&tw)).unwrap());
    assert!(!check_ideal_condition(&tw, &alpha_one(&tw)).unwrap());
}

#[test]
fn geometric_series_instances() {
    let tw = pi_tower3();
    let h = kc3();
    let xpi = larson_order(&h, &alpha_pi(&tw)).unwrap();
    verify_hopf_order(&xpi).unwrap();
    // z = σ, e = 1: (1/√p) Σ σ^i ∈ H((π))
    let sigma = h.basis_elem(1);
    let s = geometric_series_member(&xpi, &sigma, h.unit()).unwrap();
    let inv_sqrt_p = QuadElem::from_cyc(tw.sqrt_p().unwrap().inv().unwrap());
    let mut expect = HopfElem::zero();
    for i in 0..3 {
        expect.add_term(i, &inv_sqrt_p);
    }
    assert_eq!(s, expect);
    // z = e: the sum collapses to √p·e
    let sqrt_p = QuadElem::from_cyc(tw.sqrt_p().unwrap());
    let se = geometric_series_member(&xpi, h.unit(), h.unit()).unwrap();
    assert_eq!(se, h.unit().scaled(&sqrt_p));
    // in H((ζ−1)) the hypothesis π⁻¹(σ−1) ∈ X fails
    let xmin = larson_order(&h, &alpha_zeta_minus_one(&tw)).unwrap();
    verify_hopf_order(&xmin).unwrap();
    assert!(matches!(
        geometric_series_member(&xmin, &sigma, h.unit()),
        Err(OrderError::PreconditionViolated(_))
    ));
}

#[test]
fn nikshych_order_p3_full_suite() {
    let h = h3();
    let y = nikshych_order(&h).unwrap();
    assert_eq!(y.rank(), 36);
    let report = verify_hopf_order(&y).unwrap();
    assert!(report.all_passed(), "{report:?}");

    // forced elements, including T(e1) and all cocharacters
    for (name, el) in forced_elements(&h).unwrap() {
        assert!(y.contains(&el).unwrap(), "forced element {name} missing");
    }

    // the integral module: generated by (1/p)(1+g)Σ u_a^i u_b^j with
    // ε-image (2p), and the Larson product is (dim) = (36)
    let iy = integrals(&y).unwrap();
    let tw = h.tower();
    assert!(same_ideal(&iy.eps_image, &tw.scalar_from_int(6)));
    let closed = unique::closed_form_integral(&h);
    // both generate the same rank-one module over the integer ring
    let ratio = {
        let (idx, c) = iy.generator.terms().next().unwrap();
        let c2 = closed.coeff(*idx).unwrap();
        c2 / c
    };
    assert!(crate::exactfield::is_unit(&ratio));
    assert_eq!(iy.generator.scaled(&ratio), closed);
    let (ok, e1, e2) = larson_product_check(&y).unwrap();
    assert!(ok);
    assert!(same_ideal(&(&e1 * &e2), &tw.scalar_from_int(36)));

    // characters lie in the dual order
    let dual = dual_order(&y).unwrap();
    for chi in characters_h(tw).unwrap() {
        assert!(dual.contains(chi.as_elem()).unwrap());
    }

    // geometric series from the order's own generators: z = u_a, e = e_0
    let mono = crate::nikshych::Monomials::new(3);
    let ua = h.basis_elem(mono.enc(crate::nikshych::Sector::A0, 1, 0));
    let e0 = h.basis_elem(mono.enc(crate::nikshych::Sector::A0, 0, 0));
    geometric_series_member(&y, &ua, &e0).unwrap();
}

#[test]
fn nikshych_order_intersection_with_group_part() {
    let h = h3();
    let y = nikshych_order(&h).unwrap();
    verify_hopf_order(&y).unwrap();
    let ring = ring_basis(h.tower()).unwrap();
    let (z_lat, lambda, exact) = intersection_with_group_part(&y, &ring).unwrap();
    assert!(exact, "integral module of Y ∩ K<h> is not exactly O·λ");
    assert!(z_lat.rank() > 0);
    // λ itself lies in Y
    assert!(y.contains(&lambda).unwrap());
}

#[test]
fn ring_basis_matches_integrality_test() {
    // Z[ζ][π] is not integrally closed at p = 3: the closure contains a
    // genuine half-integral element, and the ring basis must reproduce
    // the characteristic-polynomial integrality test exactly
    let tw = pi_tower3();
    assert!(!quad_int_ring_is_maximal(&tw).unwrap());
    let ring = ring_basis(&tw).unwrap();
    for el in ring.elems() {
        assert!(el.is_integral());
    }
    // some ring basis element has half-integer coordinates
    assert!(ring
        .elems()
        .iter()
        .any(|el| !tw.flatten(el).iter().all(Rat::is_integer)));
    // consistency samples: ring membership == char-poly integrality
    let samples = [
        tw.one(),
        tw.gen_t().unwrap(),
        tw.scalar_from_rat(rat(1, 2)),
        (&tw.one() + &tw.gen_t().unwrap()).scale(&rat(1, 2)),
        QuadElem::from_cyc(tw.zeta()).scale(&rat(1, 2)),
        (&QuadElem::from_cyc(tw.zeta_pow(2)) + &tw.gen_t().unwrap().mul_cyc(&tw.zeta_pow(1)))
            .scale(&rat(1, 2)),
        tw.gen_t().unwrap().scale(&rat(1, 2)),
    ];
    for x in &samples {
        assert_eq!(ring.contains(x), x.is_integral(), "mismatch at {x}");
    }
    // the p = 5 core tower as well
    let tw5 = FieldTower::with_pi(5).unwrap();
    let ring5 = ring_basis(&tw5).unwrap();
    for el in ring5.elems() {
        assert!(el.is_integral());
    }
}

#[test]
fn integrals_require_verification() {
    let tw = pi_tower3();
    let h = kc3();
    let x = larson_order(&h, &alpha_pi(&tw)).unwrap();
    assert!(matches!(integrals(&x), Err(OrderError::OrderNotVerified)));
}
