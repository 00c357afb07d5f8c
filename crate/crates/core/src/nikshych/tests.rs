use num::BigInt;

use crate::exactfield::{FieldTower, QuadElem, Rat, Tower, TowerElems};
use crate::hopfcore::{verify_hopf_axioms, HopfElem, Side, TensorElem, VerifyOptions};

use super::dual_tables::{DualKind, DualMono};
use super::*;

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

fn t3() -> Tower {
    FieldTower::for_prime(3).unwrap()
}

fn zeta3_pow(tw: &Tower, k: i64) -> QuadElem {
    QuadElem::from_cyc(tw.zeta_p_pow(k).unwrap())
}

#[test]
fn a_relations_and_axioms() {
    let tw = t3();
    let a = build_a(&tw).unwrap();
    let mono = Monomials::new(3);
    let va = a.basis_elem(mono.enc(Sector::A1, 1, 0));
    let vb = a.basis_elem(mono.enc(Sector::A1, 0, 1));
    // v_a v_b = ζ v_b v_a
    let lhs = a.multiply(&va, &vb);
    let rhs = a.multiply(&vb, &va).scaled(&zeta3_pow(&tw, 1));
    assert_eq!(lhs, rhs);
    // e_0 e_1 = 0
    let e0 = a.basis_elem(mono.enc(Sector::A0, 0, 0));
    let e1 = a.basis_elem(mono.enc(Sector::A1, 0, 0));
    assert!(a.multiply(&e0, &e1).is_zero());
    // S(v_b) = v_b, ε(v_a) = 0
    assert_eq!(a.antipode_of(&vb), vb);
    assert!(a.counit_of(&va).is_zero());
    // Δ(u_a) = u_a⊗u_a + v_a⊗v_a and Δ(v_b) = u_b⊗v_b + v_b⊗u_b^{−1}
    let dua = a.comult_entry(mono.enc(Sector::A0, 1, 0));
    let mut expect = TensorElem::zero();
    expect.add_term(mono.enc(Sector::A0, 1, 0), mono.enc(Sector::A0, 1, 0), &tw.one());
    expect.add_term(mono.enc(Sector::A1, 1, 0), mono.enc(Sector::A1, 1, 0), &tw.one());
    assert_eq!(*dua, expect);
    let dvb = a.comult_entry(mono.enc(Sector::A1, 0, 1));
    let mut expect = TensorElem::zero();
    expect.add_term(mono.enc(Sector::A0, 0, 1), mono.enc(Sector::A1, 0, 1), &tw.one());
    expect.add_term(mono.enc(Sector::A1, 0, 1), mono.enc(Sector::A0, 0, 2), &tw.one());
    assert_eq!(*dvb, expect);
    let report = verify_hopf_axioms(&a, &VerifyOptions::default());
    assert!(report.all_passed(), "{report:?}");
}

#[test]
fn omega_coefficients() {
    let tw = t3();
    let om = omega(&tw).unwrap();
    let mono = Monomials::new(3);
    // coefficient of u_a ⊗ u_b in the A0⊗A0 part: ζ^{−1}/9 = ζ²/9
    let c = om.coeff(mono.enc(Sector::A0, 1, 0), mono.enc(Sector::A0, 0, 1)).unwrap();
    assert_eq!(*c, zeta3_pow(&tw, -1).scale(&rat(1, 9)));
    // coefficient of v_a^k v_b^l ⊗ v_a^{−l} v_b^k: 1/p
    let c = om.coeff(mono.enc(Sector::A1, 1, 2), mono.enc(Sector::A1, -2, 1)).unwrap();
    assert_eq!(*c, tw.scalar_from_rat(rat(1, 3)));
    // term count: p⁴ + 3p²
    assert_eq!(om.len(), 81 + 27);
}

#[test]
fn omega_counit_leg_is_unit() {
    // (ε⊗id)(Ω) = 1_A, computed by direct summation
    let tw = t3();
    let om = omega(&tw).unwrap();
    let mono = Monomials::new(3);
    let mut folded = HopfElem::zero();
    for (&(s, t), c) in om.terms() {
        if mono.counit_is_one(mono.decode(s)) {
            folded.add_term(t, c);
        }
    }
    let mut unit = HopfElem::zero();
    unit.add_term(mono.enc(Sector::A0, 0, 0), &tw.one());
    unit.add_term(mono.enc(Sector::A1, 0, 0), &tw.one());
    assert_eq!(folded, unit);
}

#[test]
fn omega_is_invertible() {
    // Ω⁻¹ = (ĝ⊗ĝ)(Ω), both products give 1⊗1
    let tw = t3();
    let h = build_h(&tw).unwrap();
    let om = omega(&tw).unwrap();
    let mono = Monomials::new(3);
    let mut twisted = TensorElem::zero();
    for (&(s, t), c) in om.terms() {
        let gs = mono.encode(mono.g_twist(mono.decode(s)));
        let gt = mono.encode(mono.g_twist(mono.decode(t)));
        twisted.add_term(gs, gt, c);
    }
    let one_one = TensorElem::product(h.unit(), h.unit());
    assert_eq!(h.tensor_multiply(&twisted, &om, false), one_one);
    assert_eq!(h.tensor_multiply(&om, &twisted, false), one_one);
}

#[test]
fn h3_relations() {
    let tw = t3();
    let h = build_h(&tw).unwrap();
    let g = g_elem(&h);
    // g² = 1
    assert_eq!(h.multiply(&g, &g), *h.unit());
    // g u_a g = u_b
    let mono = Monomials::new(3);
    let ua = h.basis_elem(mono.enc(Sector::A0, 1, 0));
    let ub = h.basis_elem(mono.enc(Sector::A0, 0, 1));
    assert_eq!(h.multiply(&h.multiply(&g, &ua), &g), ub);
    // S(g) = g
    assert_eq!(h.antipode_of(&g), g);
}

#[test]
fn h3_passes_all_axioms() {
    let tw = t3();
    let h = build_h(&tw).unwrap();
    let report = verify_hopf_axioms(&h, &VerifyOptions::default());
    assert!(report.all_passed(), "{report:?}");
    assert!(h.is_verified());
}

#[test]
fn omega_mutations_break_axioms() {
    let tw = t3();
    for part in OmegaPart::ALL {
        let h = build_h_with_mutation(&tw, Some(part)).unwrap();
        let report = verify_hopf_axioms(&h, &VerifyOptions::default());
        assert!(!report.all_passed(), "mutation {part:?} went undetected");
        assert!(report.failures().all(|c| c.witness.is_some()));
        // the mutation only corrupts Δ(g·…): every failure must be on the
        // comultiplication side, while the algebra axioms stay intact
        for c in report.failures() {
            assert!(
                c.check_id.starts_with("03-")
                    || c.check_id.starts_with("04-")
                    || c.check_id.starts_with("06-")
                    || c.check_id.starts_with("07-"),
                "unexpected failing family for {part:?}: {}",
                c.check_id
            );
        }
    }
}

#[test]
fn dual_tables_match_transposed_dual() {
    let tw = t3();
    let h = build_h(&tw).unwrap();
    let report = dual_coincidence(&h).unwrap();
    assert!(report.all_passed(), "{report:?}");
}

#[test]
fn dual_table_spot_checks() {
    let tw = t3();
    let paper = build_h_dual_tables(&tw).unwrap();
    let dm = DualMono::new(3);
    // t_ij t_kl = δ_{i,k} δ_{j,−l} s_ij
    let t12 = paper.basis_elem(dm.enc(DualKind::T, 1, 2));
    let t11 = paper.basis_elem(dm.enc(DualKind::T, 1, 1));
    assert_eq!(paper.multiply(&t12, &t11), paper.basis_elem(dm.enc(DualKind::S, 1, 2)));
    assert!(paper.multiply(&t12, &t12).is_zero());
    // S(t_ij) = ζ^{−ij} t_{−i,j}
    let s = paper.antipode_of(&t12);
    assert_eq!(s, paper.basis_elem(dm.enc(DualKind::T, -1, 2)).scaled(&zeta3_pow(&tw, -2)));
    // (γ_ij B)(g v_a^k v_b^l) = √p ζ^{jk} δ_{l,j−i}: evaluate the image of
    // gamB[i,j] under the basis identification as a functional on H
    let (fwd, _) = paper_dual_images(&tw).unwrap();
    let mono = Monomials::new(3);
    let sqrt_p = QuadElem::from_cyc(tw.sqrt_p().unwrap());
    for i in 0..3i64 {
        for j in 0..3i64 {
            let functional =
                crate::hopfcore::Character::from_elem(fwd[dm.enc(DualKind::GamB, i, j) as usize].clone());
            for k in 0..3i64 {
                for l in 0..3i64 {
                    let val = functional
                        .coeff(mono.enc(Sector::GA1, k, l))
                        .cloned()
                        .unwrap_or_else(|| tw.zero());
                    let expect = if l == (j - i).rem_euclid(3) {
                        &sqrt_p * &zeta3_pow(&tw, j * k)
                    } else {
                        tw.zero()
                    };
                    assert_eq!(val, expect, "gamB[{i},{j}] at g v_a^{k} v_b^{l}");
                }
            }
        }
    }
}

#[test]
fn characters_and_irreps_agree() {
    let tw = t3();
    let h = build_h(&tw).unwrap();
    let irreps = irreps_h(&h).unwrap();
    let chars = characters_h(&tw).unwrap();
    let p = 3usize;
    assert_eq!(irreps.len(), 2 * p + p * (p - 1) / 2 + 2);
    assert_eq!(chars.len(), irreps.len());
    // Σ dim² = 4p²
    let sum: usize = irreps.iter().map(|r| r.dimension * r.dimension).sum();
    assert_eq!(sum, 4 * p * p);
    for (irrep, chi) in irreps.iter().zip(&chars) {
        let fails = irrep.verify_algebra_map(&h);
        assert!(fails.is_empty(), "{fails:?}");
        assert_eq!(irrep.trace_character(&tw), *chi, "trace mismatch for {}", irrep.name);
        // χ(1) = dim
        assert_eq!(chi.eval(&tw, h.unit()), tw.scalar_from_int(irrep.dimension as i64));
    }
    // V_i^-: g acts as −1
    let mono = Monomials::new(3);
    let v0m = &irreps[1];
    assert_eq!(v0m.name, "V0-");
    let g_mat_ge0 = &v0m.matrices[mono.enc(Sector::GA0, 0, 0) as usize];
    assert_eq!(*g_mat_ge0.get(0, 0), tw.scalar_from_int(-1));
    // M^+: v_b maps m_r to m_{r+1}
    let mplus = irreps.iter().find(|r| r.name == "M+").unwrap();
    let vb_mat = &mplus.matrices[mono.enc(Sector::A1, 0, 1) as usize];
    for r in 0..3 {
        assert!(vb_mat.get((r + 1) % 3, r).is_one());
    }
    // W[0,1]: trace of u_a is ζ⁰ + ζ¹ (diagonal of the displayed matrix)
    let w01 = irreps.iter().find(|r| r.name == "W[0,1]").unwrap();
    let ua_mat = &w01.matrices[mono.enc(Sector::A0, 1, 0) as usize];
    assert_eq!(ua_mat.trace(), &zeta3_pow(&tw, 0) + &zeta3_pow(&tw, 1));
}

#[test]
fn cocharacter_identities() {
    let tw = t3();
    let h = build_h(&tw).unwrap();
    let cochars = cocharacters_h(&tw).unwrap();
    let by_name = |n: &str| -> &HopfElem {
        &cochars.iter().find(|(name, _)| name == n).unwrap().1
    };
    // ψ_{L_0^+} = e_0 + e_1 = 1
    assert_eq!(*by_name("L0+"), *h.unit());
    // ψ_{N^+} − ψ_{N^-} = (2/√p) Σ_i g v_a^i
    let mono = Monomials::new(3);
    let diff = by_name("N+").sub(by_name("N-"));
    let two_over_sqrt_p =
        QuadElem::from_cyc(tw.sqrt_p().unwrap().inv().unwrap().scale(&rat(2, 1)));
    let mut expect = HopfElem::zero();
    for i in 0..3 {
        expect.add_term(mono.enc(Sector::GA1, i, 0), &two_over_sqrt_p);
    }
    assert_eq!(diff, expect);
    // ε(ψ_{P_ij}) = 2 and more generally ε(cochar) = dimension
    for (name, e) in &cochars {
        let dim: i64 = match name.chars().next().unwrap() {
            'L' => 1,
            'P' => 2,
            'N' => 3,
            _ => unreachable!(),
        };
        assert_eq!(h.counit_of(e), tw.scalar_from_int(dim), "{name}");
    }
}

#[test]
fn self_duality_is_a_hopf_isomorphism() {
    let tw = t3();
    let h = build_h(&tw).unwrap();
    let paper = build_h_dual_tables(&tw).unwrap();
    let psi = self_duality_map(&h, &paper).unwrap();
    let report = psi.verify_hopf_iso("self-duality");
    assert!(report.all_passed(), "{report:?}");
    // ḡ² = 1 in the dual
    let g_bar = super::self_dual::g_bar_elem(&paper).unwrap();
    assert_eq!(paper.multiply(&g_bar, &g_bar), *paper.unit());
    // Ψ(e_0) = ε_A = Σ s_kl and Ψ(e_1) = γ_00
    let mono = Monomials::new(3);
    let dm = DualMono::new(3);
    let psi_e0 = &psi.images[mono.enc(Sector::A0, 0, 0) as usize];
    let mut eps_a = HopfElem::zero();
    for k in 0..3 {
        for l in 0..3 {
            eps_a.add_term(dm.enc(DualKind::S, k, l), &tw.one());
        }
    }
    assert_eq!(*psi_e0, eps_a);
    let psi_e1 = &psi.images[mono.enc(Sector::A1, 0, 0) as usize];
    assert_eq!(*psi_e1, paper.basis_elem(dm.enc(DualKind::Gam, 0, 0)));
}

#[test]
fn automorphism_group_has_order_4p() {
    let tw = t3();
    let h = build_h(&tw).unwrap();
    let autos = hopf_automorphisms(&h).unwrap();
    assert_eq!(autos.len(), 12);
    assert_eq!(autos.iter().filter(|m| m.is_identity()).count(), 1);
    for auto in &autos {
        let report = auto.verify_hopf_iso("auto");
        assert!(report.all_passed(), "{report:?}");
    }
    // ν² = id
    let mono = Monomials::new(3);
    let nu = super::autos::nu_images(&h, &mono);
    let nu_sq: Vec<HopfElem> = nu.iter().map(|im| h.apply_linear(&nu, im)).collect();
    let id: Vec<HopfElem> = (0..h.dim() as u32).map(|i| h.basis_elem(i)).collect();
    assert_eq!(nu_sq, id);
}

#[test]
fn map_t_closed_form_and_examples() {
    let tw = t3();
    let h = build_h(&tw).unwrap();
    let mono = Monomials::new(3);
    let inv_sqrt_p = QuadElem::from_cyc(tw.sqrt_p().unwrap().inv().unwrap());
    // T(e_1) = (1/√p) Σ_k g u_a^k u_b^{−k}
    let e1 = h.basis_elem(mono.enc(Sector::A1, 0, 0));
    let te1 = map_t(&h, &e1).unwrap();
    let mut expect = HopfElem::zero();
    for k in 0..3i64 {
        expect.add_term(mono.enc(Sector::GA0, k, -k), &inv_sqrt_p);
    }
    assert_eq!(te1, expect);
    // T(v_a) = (1/√p) Σ_k g u_a^k u_b^{1−k}
    let va = h.basis_elem(mono.enc(Sector::A1, 1, 0));
    let tva = map_t(&h, &va).unwrap();
    let mut expect = HopfElem::zero();
    for k in 0..3i64 {
        expect.add_term(mono.enc(Sector::GA0, k, 1 - k), &inv_sqrt_p);
    }
    assert_eq!(tva, expect);
    // T((1/√p) Σ_i v_b^i) = g e_0
    let mut x = HopfElem::zero();
    for i in 0..3i64 {
        x.add_term(mono.enc(Sector::A1, 0, i), &inv_sqrt_p);
    }
    let tx = map_t(&h, &x).unwrap();
    assert_eq!(tx, h.basis_elem(mono.enc(Sector::GA0, 0, 0)));
    // A0 input is rejected
    let ua = h.basis_elem(mono.enc(Sector::A0, 1, 0));
    assert!(matches!(map_t(&h, &ua), Err(NikshychError::InputNotInA1)));
}

#[test]
fn convolve_functional_on_one_leg() {
    // (Γ₂ ⊗ id)Δ(Γ₁) = g e₁ for Γ₁ = (1/p) Σ g u_a^i u_b^j and the
    // functional Γ₂ supported on g e₁ with value p
    let tw = t3();
    let h = build_h(&tw).unwrap();
    let mono = Monomials::new(3);
    let inv_p = tw.scalar_from_rat(rat(1, 3));
    let mut gamma1 = HopfElem::zero();
    for i in 0..3 {
        for j in 0..3 {
            gamma1.add_term(mono.enc(Sector::GA0, i, j), &inv_p);
        }
    }
    let gamma2 = crate::hopfcore::Character::from_elem(HopfElem::single(
        mono.enc(Sector::GA1, 0, 0),
        tw.scalar_from_int(3),
    ));
    let result = h.convolve(&gamma2, &gamma1, Side::Left);
    assert_eq!(result, h.basis_elem(mono.enc(Sector::GA1, 0, 0)));
}
