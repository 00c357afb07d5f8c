use crate::exactfield::{FieldTower, QuadElem, Tower, TowerElems};

use super::*;

/// Group algebra of a cyclic group of order n with group-like basis.
fn cyclic_group_algebra(tower: &Tower, n: u32) -> HopfData {
    let labels: Vec<String> = (0..n).map(|i| format!("s^{i}")).collect();
    let one = tower.one();
    let mut mult = Vec::with_capacity((n * n) as usize);
    for i in 0..n {
        for j in 0..n {
            mult.push(HopfElem::single((i + j) % n, one.clone()));
        }
    }
    let comult = (0..n).map(|i| TensorElem::single(i, i, one.clone())).collect();
    let counit = (0..n).map(|_| one.clone()).collect();
    let antipode = (0..n).map(|i| HopfElem::single((n - i) % n, one.clone())).collect();
    HopfData::new(
        tower.clone(),
        labels,
        HopfElem::single(0, one.clone()),
        mult,
        comult,
        counit,
        antipode,
    )
}

fn tower12() -> Tower {
    FieldTower::with_prime(12, 3).unwrap()
}

#[test]
fn group_algebra_passes_all_axioms() {
    let h = cyclic_group_algebra(&tower12(), 5);
    let report = verify_hopf_axioms(&h, &VerifyOptions::default());
    assert!(report.all_passed(), "{report:?}");
    assert!(h.is_verified());
}

#[test]
fn broken_table_fails_with_witness() {
    let tw = tower12();
    let mut h = cyclic_group_algebra(&tw, 3);
    // corrupt one antipode entry: S(s^1) := s^1
    h.antipode[1] = HopfElem::single(1, tw.one());
    let report = verify_hopf_axioms(&h, &VerifyOptions::default());
    assert!(!report.all_passed());
    assert!(!h.is_verified());
    let failing: Vec<_> = report.failures().collect();
    assert!(failing.iter().any(|c| c.check_id.starts_with("07-antipode")));
    assert!(failing.iter().all(|c| c.witness.is_some()));
}

#[test]
fn sharded_verification_covers_the_suite() {
    let h = cyclic_group_algebra(&tower12(), 6);
    let a = verify_hopf_axioms(&h, &VerifyOptions { first_index_range: Some(0..3), ..Default::default() });
    assert!(a.all_passed());
    assert!(!h.is_verified(), "a partial shard must not mark data verified");
    let b = verify_hopf_axioms(&h, &VerifyOptions { first_index_range: Some(3..6), ..Default::default() });
    assert!(b.all_passed());
    let full = verify_hopf_axioms(&h, &VerifyOptions::default());
    assert!(full.all_passed());
    assert!(h.is_verified());
}

#[test]
fn dual_of_group_algebra_is_functions() {
    let h = cyclic_group_algebra(&tower12(), 5);
    let d = dual_hopf(&h);
    // dual basis elements are orthogonal idempotents (pointwise products)
    for i in 0..5u32 {
        for j in 0..5u32 {
            let prod = d.mult_entry(i, j);
            if i == j {
                assert_eq!(*prod, d.basis_elem(i));
            } else {
                assert!(prod.is_zero());
            }
        }
    }
    let report = verify_hopf_axioms(&d, &VerifyOptions::default());
    assert!(report.all_passed());
}

#[test]
fn double_dual_restores_tables() {
    let h = cyclic_group_algebra(&tower12(), 4);
    let dd = dual_hopf(&dual_hopf(&h));
    assert_eq!(tables_diff(&h, &dd), None);
}

#[test]
fn convolve_with_counit_is_identity() {
    let tw = tower12();
    let h = cyclic_group_algebra(&tw, 5);
    let eps = Character::from_elem({
        let mut e = HopfElem::zero();
        for i in 0..5u32 {
            e.add_term(i, h.counit_entry(i));
        }
        e
    });
    let x = h.basis_elem(2).add(&h.basis_elem(4).scaled(&tw.scalar_from_int(3)));
    assert_eq!(h.convolve(&eps, &x, Side::Left), x);
    assert_eq!(h.convolve(&eps, &x, Side::Right), x);
}

#[test]
fn convolve_with_group_character() {
    // character s ↦ ζ on KC_p picks up ζ on the group-like s
    let tw = FieldTower::with_prime(12, 3).unwrap();
    let h = cyclic_group_algebra(&tw, 3);
    let zeta3 = tw.zeta_p().unwrap();
    let chi = Character::from_elem({
        let mut e = HopfElem::zero();
        for i in 0..3u32 {
            e.add_term(i, &QuadElem::from_cyc(zeta3.pow(i as i64).unwrap()));
        }
        e
    });
    let s = h.basis_elem(1);
    assert_eq!(h.convolve(&chi, &s, Side::Left), s.scaled(&QuadElem::from_cyc(zeta3.clone())));
    // multiplicativity on group-likes: χ(s^i s^j) = χ(s^i)χ(s^j)
    for i in 0..3u32 {
        for j in 0..3u32 {
            let lhs = chi.eval(&tw, h.mult_entry(i, j));
            let rhs = chi.eval(&tw, &h.basis_elem(i)) * chi.eval(&tw, &h.basis_elem(j));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn tensor_multiply_basics() {
    let tw = tower12();
    let h = cyclic_group_algebra(&tw, 5);
    let one = TensorElem::product(h.unit(), h.unit());
    let s = TensorElem::single(2, 3, tw.one());
    assert_eq!(h.tensor_multiply(&one, &s, false), s);
    // (x⊗1)(1⊗y) = x⊗y
    let x1 = TensorElem::product(&h.basis_elem(1), h.unit());
    let y1 = TensorElem::product(h.unit(), &h.basis_elem(2));
    assert_eq!(h.tensor_multiply(&x1, &y1, false), TensorElem::single(1, 2, tw.one()));
    // opposite flag reverses the second factor: (1⊗a)(1⊗b) = 1⊗(ba)
    let a = TensorElem::product(h.unit(), &h.basis_elem(1));
    let b = TensorElem::product(h.unit(), &h.basis_elem(3));
    assert_eq!(h.tensor_multiply(&a, &b, true), TensorElem::single(0, 4, tw.one()));
}

#[test]
fn antipode_properties_per_instance() {
    let h = cyclic_group_algebra(&tower12(), 7);
    // S(1) = 1, ε∘S = ε, S² = id on every basis element
    assert_eq!(h.antipode_of(h.unit()), *h.unit());
    for i in 0..7u32 {
        let s = h.antipode_entry(i);
        assert_eq!(h.counit_of(s), *h.counit_entry(i));
        assert_eq!(h.antipode_of(s), h.basis_elem(i));
    }
}

#[test]
fn text_export_roundtrip_is_byte_identical() {
    let tw = FieldTower::with_pi(3).unwrap();
    let h = cyclic_group_algebra(&tw, 3);
    let s1 = export_string(&h);
    let h2 = import_string(&s1).unwrap();
    let s2 = export_string(&h2);
    assert_eq!(s1, s2);
    assert_eq!(tables_diff(&h, &h2), None);
    let report = verify_hopf_axioms(&h2, &VerifyOptions::default());
    assert!(report.all_passed());
}

#[test]
fn import_rejects_garbage() {
    assert!(matches!(import_string("nonsense"), Err(HopfError::BadFormat(_))));
    assert!(matches!(import_string("hopfdata v1\ntower m=12 p=3 radicand=-\ndim 1\nbogus 0 0\nend\n"), Err(HopfError::BadFormat(_))));
    // missing end marker
    assert!(matches!(import_string("hopfdata v1\ntower m=12 p=3 radicand=-\ndim 1\n"), Err(HopfError::BadFormat(_))));
}

#[test]
fn change_basis_roundtrip() {
    let tw = tower12();
    let h = cyclic_group_algebra(&tw, 3);
    // new basis: n_0 = s^0, n_1 = s^0 + s^1, n_2 = s^2
    let one = tw.one();
    let fwd = vec![
        HopfElem::single(0, one.clone()),
        h.basis_elem(0).add(&h.basis_elem(1)),
        HopfElem::single(2, one.clone()),
    ];
    let mut inv1 = HopfElem::single(1, one.clone());
    inv1.add_term(0, &-&one);
    let inv = vec![HopfElem::single(0, one.clone()), inv1, HopfElem::single(2, one.clone())];
    let labels = vec!["n0".into(), "n1".into(), "n2".into()];
    let g = change_basis(&h, labels, &fwd, &inv);
    let report = verify_hopf_axioms(&g, &VerifyOptions::default());
    assert!(report.all_passed(), "{report:?}");
    // transported tables describe the same algebra: n_1·n_1 = s^0 + 2s^1 + s^2
    let sq = g.multiply(&g.basis_elem(1), &g.basis_elem(1));
    // in new coordinates: s^0 + 2s^1 + s^2 = 2(n_1 - n_0) + n_0 + n_2 ... = 2n_1 - n_0 + n_2
    let mut expect = HopfElem::zero();
    expect.add_term(1, &tw.scalar_from_int(2));
    expect.add_term(0, &tw.scalar_from_int(-1));
    expect.add_term(2, &one);
    assert_eq!(sq, expect);
}

#[test]
fn hopf_map_identity_verifies() {
    let h = cyclic_group_algebra(&tower12(), 4);
    let images: Vec<HopfElem> = (0..4u32).map(|i| h.basis_elem(i)).collect();
    let map = HopfMap::new(&h, &h, images);
    assert!(map.is_identity());
    assert!(map.is_bijective());
    let report = map.verify_hopf_iso("identity");
    assert!(report.all_passed(), "{report:?}");
}
