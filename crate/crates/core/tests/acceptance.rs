//! The acceptance suite: one test per criterion, each printing a PASS
//! line with its timing (run with `--nocapture` to see them). All
//! arithmetic is exact; every comparison below is zero-tolerance.
//!
//! The expensive p = 5 campaigns share lazily-built verified instances.
//! Criterion 10's full invariant-lattice computation is gated behind
//! RUN_FULL_INVARIANT=1; without it the witness sub-suite still runs and
//! the lattice check is reported as skipped.

use std::sync::{Arc, OnceLock};
use std::time::Instant;

use hopfkit::descent::{
    bundled_denominator, bundled_w, check_descent_condition, descent_witnesses, invariant_order,
    sigma_prime, DescentParams, SignConvention,
};
use hopfkit::exactfield::{
    is_unit, same_ideal, FieldTower, QuadElem, Tower, TowerElems,
};
use hopfkit::hopfcore::{verify_hopf_axioms, HopfData, HopfElem, VerifyOptions};
use hopfkit::nikshych::{
    build_h, build_h_dual_tables, build_h_with_mutation, characters_h, cocharacters_h,
    dual_coincidence, dual_index, g_elem, hopf_automorphisms, irreps_h, self_duality_map,
    DualKind, Monomials, OmegaPart, Sector,
};
use hopfkit::orders::{
    check_ideal_condition, closed_form_integral, dual_order, forced_elements,
    geometric_series_member, group_algebra_cp, integrals, intersection_with_group_part,
    larson_order, larson_product_check, nikshych_order, ring_basis, verify_hopf_order, IdealSpec,
    OrderLattice,
};

fn pass_line(criterion: &str, started: Instant) {
    println!("ACCEPTANCE {criterion}: PASS ({:.2?})", started.elapsed());
}

fn tower_pi(p: u32) -> Tower {
    FieldTower::with_pi(p).unwrap()
}

/// Verified H_p over the π-tower, built once per prime.
fn verified_h(p: u32) -> Arc<HopfData> {
    static H3: OnceLock<Arc<HopfData>> = OnceLock::new();
    static H5: OnceLock<Arc<HopfData>> = OnceLock::new();
    let cell = match p {
        3 => &H3,
        5 => &H5,
        _ => panic!("unsupported prime"),
    };
    cell.get_or_init(|| {
        let h = Arc::new(build_h(&tower_pi(p)).unwrap());
        let started = Instant::now();
        let report = verify_hopf_axioms(&h, &VerifyOptions::default());
        assert!(report.all_passed(), "{report:?}");
        println!("  [shared] axiom suite for p = {p}: {:.2?}", started.elapsed());
        h
    })
    .clone()
}

#[test]
fn criterion_01_axiom_suite_and_mutations() {
    let started = Instant::now();
    for p in [3u32, 5] {
        let t0 = Instant::now();
        let h = verified_h(p);
        assert!(h.is_verified());
        println!("  axioms p={p} (dim {}): {:.2?}", h.dim(), t0.elapsed());
    }
    // every single mutation of the four twist summands is caught, with a
    // witness, at p = 3
    for part in OmegaPart::ALL {
        let h = build_h_with_mutation(&tower_pi(3), Some(part)).unwrap();
        let report = verify_hopf_axioms(&h, &VerifyOptions::default());
        assert!(!report.all_passed(), "{part:?} undetected");
        assert!(report.failures().all(|c| c.witness.is_some()));
    }
    pass_line("1 axiom-suite-and-mutations", started);
}

#[test]
fn criterion_02_dual_coincidence() {
    let started = Instant::now();
    for p in [3u32, 5] {
        let h = verified_h(p);
        let report = dual_coincidence(&h).unwrap();
        assert!(report.all_passed(), "p = {p}: {report:?}");
    }
    pass_line("2 dual-coincidence", started);
}

#[test]
fn criterion_03_representation_bookkeeping() {
    let started = Instant::now();
    for p in [3u32, 5] {
        let h = verified_h(p);
        let tower = h.tower();
        let irreps = irreps_h(&h).unwrap();
        let chars = characters_h(tower).unwrap();
        assert_eq!(irreps.len(), (2 * p + p * (p - 1) / 2 + 2) as usize);
        let dim_sq: usize = irreps.iter().map(|r| r.dimension * r.dimension).sum();
        assert_eq!(dim_sq, (4 * p * p) as usize);
        for (irrep, chi) in irreps.iter().zip(&chars) {
            assert!(irrep.verify_algebra_map(&h).is_empty(), "{} is not an algebra map", irrep.name);
            assert_eq!(irrep.trace_character(tower), *chi, "{}", irrep.name);
        }
    }
    pass_line("3 representation-bookkeeping", started);
}

#[test]
fn criterion_04_self_duality() {
    let started = Instant::now();
    for p in [3u32, 5] {
        let h = verified_h(p);
        let tower = h.tower();
        let paper = build_h_dual_tables(tower).unwrap();
        let psi = self_duality_map(&h, &paper).unwrap();
        let report = psi.verify_hopf_iso("iso");
        assert!(report.all_passed(), "p = {p}: {report:?}");
        // ḡ² = 1
        let g_bar = psi.apply(&g_elem(&h));
        assert_eq!(paper.multiply(&g_bar, &g_bar), *paper.unit());
        // Ψ(e₁) = γ₀₀
        let mono = Monomials::new(p);
        let e1_image = &psi.images[mono.enc(Sector::A1, 0, 0) as usize];
        assert_eq!(*e1_image, paper.basis_elem(dual_index(p, DualKind::Gam, 0, 0)));
    }
    pass_line("4 self-duality", started);
}

#[test]
fn criterion_05_automorphism_group() {
    let started = Instant::now();
    let h = verified_h(3);
    let autos = hopf_automorphisms(&h).unwrap();
    assert_eq!(autos.len(), 12);
    for auto in &autos {
        assert!(auto.verify_hopf_iso("a").all_passed());
    }
    pass_line("5 automorphisms", started);
}

fn larson_alphas(tw: &Tower) -> Vec<(&'static str, QuadElem)> {
    vec![
        ("zeta-1", QuadElem::from_cyc(&tw.zeta_p().unwrap() - &tw.one_cyc())),
        ("one", tw.one()),
        ("pi", tw.gen_t().unwrap()),
    ]
}

#[test]
fn criterion_06_larson_orders() {
    let started = Instant::now();
    for p in [3u32, 5, 7] {
        let tw = tower_pi(p);
        let kc = group_algebra_cp(&tw).unwrap();
        for (name, alpha) in larson_alphas(&tw) {
            let spec = IdealSpec::principal(alpha.clone()).unwrap();
            let x = larson_order(&kc, &spec).unwrap();
            let report = verify_hopf_order(&x).unwrap();
            assert!(report.all_passed(), "p={p} alpha={name}: {report:?}");
            // ε(Λ) = (α^{p−1}) up to unit
            let ix = integrals(&x).unwrap();
            assert!(
                same_ideal(&ix.eps_image, &alpha.pow(p as i64 - 1).unwrap()),
                "p={p} alpha={name}: eps = {}",
                ix.eps_image
            );
            // product of the ε-ideals is (p)
            let (ok, e1, e2) = larson_product_check(&x).unwrap();
            assert!(ok, "p={p} alpha={name}: ({e1})·({e2})");
            assert!(same_ideal(&(&e1 * &e2), &tw.scalar_from_int(p as i64)));
            // the dual is involutive
            let dual = dual_order(&x).unwrap();
            verify_hopf_order(&dual).unwrap();
            let double = dual_order(&dual).unwrap();
            assert_eq!(double.basis(), x.basis());
        }
        // the geometric-series instance: (1/√p) Σ σ^i ∈ H((π)) together
        // with π⁻¹(σ−1) ∈ H((π))
        let xpi = larson_order(&kc, &IdealSpec::principal(tw.gen_t().unwrap()).unwrap()).unwrap();
        verify_hopf_order(&xpi).unwrap();
        let sigma = kc.basis_elem(1);
        let member = geometric_series_member(&xpi, &sigma, kc.unit()).unwrap();
        assert!(xpi.contains(&member).unwrap());
        let pi_inv_gen = sigma.sub(kc.unit()).scaled(&tw.gen_t().unwrap().inv().unwrap());
        assert!(xpi.contains(&pi_inv_gen).unwrap());
    }
    pass_line("6 larson-orders", started);
}

fn verified_y(p: u32) -> (Arc<HopfData>, &'static OrderLattice) {
    static Y3: OnceLock<(Arc<HopfData>, OrderLattice)> = OnceLock::new();
    static Y5: OnceLock<(Arc<HopfData>, OrderLattice)> = OnceLock::new();
    let cell = match p {
        3 => &Y3,
        5 => &Y5,
        _ => panic!("unsupported prime"),
    };
    let entry = cell.get_or_init(|| {
        let h = verified_h(p);
        let y = nikshych_order(&h).unwrap();
        let started = Instant::now();
        let report = verify_hopf_order(&y).unwrap();
        assert!(report.all_passed(), "p = {p}: {report:?}");
        println!("  [shared] order suite for p = {p}: {:.2?}", started.elapsed());
        (h, y)
    });
    (entry.0.clone(), &entry.1)
}

#[test]
fn criterion_07_canonical_order() {
    let started = Instant::now();
    for p in [3u32, 5] {
        let t0 = Instant::now();
        let (h, y) = verified_y(p);
        let tower = h.tower();
        // Λ_Y: generator matches (1/p)(1+g)Σ u_a^i u_b^j up to a unit and
        // ε(Λ_Y) = (2p)
        let iy = integrals(y).unwrap();
        assert!(same_ideal(&iy.eps_image, &tower.scalar_from_int(2 * p as i64)));
        let closed = closed_form_integral(&h);
        let (idx, c) = iy.generator.terms().next().unwrap();
        let ratio = closed.coeff(*idx).unwrap() / c;
        assert!(is_unit(&ratio));
        assert_eq!(iy.generator.scaled(&ratio), closed);
        // Larson product = (4p²)
        let (ok, e1, e2) = larson_product_check(y).unwrap();
        assert!(ok);
        assert!(same_ideal(&(&e1 * &e2), &tower.scalar_from_int(4 * (p * p) as i64)));
        // characters in the dual order, cocharacters in Y
        let dual = dual_order(y).unwrap();
        for chi in characters_h(tower).unwrap() {
            assert!(dual.contains(chi.as_elem()).unwrap());
        }
        for (name, psi) in cocharacters_h(tower).unwrap() {
            assert!(y.contains(&psi).unwrap(), "cocharacter {name}");
        }
        // the forced-element suite (e₀, e₁, g·e₁, g·e₀, u_a, v_a, the
        // normalized power sums, T(e₁))
        for (name, el) in forced_elements(&h).unwrap() {
            assert!(y.contains(&el).unwrap(), "forced element {name}");
        }
        println!("  order campaign p={p}: {:.2?}", t0.elapsed());
    }
    pass_line("7 canonical-order", started);
}

#[test]
fn criterion_07b_integral_module_of_intersection() {
    // the supporting invariant behind the uniqueness argument: the
    // integrals of Y ∩ K⟨h⟩ are exactly O·(1/√p)Σh^i
    let started = Instant::now();
    for p in [3u32, 5] {
        let (h, y) = verified_y(p);
        let ring = ring_basis(h.tower()).unwrap();
        let (z_lat, lambda, exact) = intersection_with_group_part(y, &ring).unwrap();
        assert!(z_lat.rank() > 0);
        assert!(y.contains(&lambda).unwrap());
        assert!(exact, "p = {p}");
    }
    pass_line("7b intersection-integrals", started);
}

#[test]
fn criterion_08_ideal_condition() {
    let started = Instant::now();
    for p in [3u32, 5, 7] {
        let tw = tower_pi(p);
        let pi = IdealSpec::principal(tw.gen_t().unwrap()).unwrap();
        let zeta1 =
            IdealSpec::principal(QuadElem::from_cyc(&tw.zeta_p().unwrap() - &tw.one_cyc())).unwrap();
        assert!(check_ideal_condition(&tw, &pi).unwrap(), "p = {p}: (π)^(2(p−1)) = (p)");
        assert!(!check_ideal_condition(&tw, &zeta1).unwrap(), "p = {p}: (ζ−1) must fail");
        assert!(!check_ideal_condition(&tw, &IdealSpec::principal(tw.one()).unwrap()).unwrap());
    }
    pass_line("8 ideal-condition", started);
}

#[test]
fn criterion_09_descent_example() {
    let started = Instant::now();
    let base = FieldTower::with_prime(28, 7).unwrap();
    let denom = bundled_denominator(&base).unwrap();
    let w = bundled_w(&base).unwrap();
    // w·E = 1 exactly
    assert!((&w * &denom).is_one());
    assert!(is_unit(&QuadElem::from_cyc(w.clone())));
    // the integrality condition holds (d = 1) under at least one sign
    // convention
    let params = DescentParams::new(28, 7, w, base.one_cyc(), SignConvention::Either);
    let out = check_descent_condition(&params).unwrap();
    assert!(out.holds(SignConvention::Either));
    assert!(out.example, "the bundled data satisfies t² = w(1−ζ_p)");
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 10, "criterion 9 exceeded 10 seconds: {elapsed:?}");
    pass_line("9 descent-example", started);
}

#[test]
fn criterion_10_invariant_order() {
    let started = Instant::now();
    let base = FieldTower::with_prime(28, 7).unwrap();
    let w = bundled_w(&base).unwrap();
    let r = &w * &(&base.one_cyc() - &base.zeta_p().unwrap());
    let tower = FieldTower::extend(&base, &r).unwrap();
    let h = Arc::new(build_h(&tower).unwrap());
    // construction verified by the full suite at p ∈ {3, 5}; the O(dim³)
    // suite at p = 7 is far outside the budget here
    h.assume_verified();
    let y = nikshych_order(&h).unwrap();
    let sp = sigma_prime(&h).unwrap();
    assert!(sp.verify(&h).unwrap().all_passed());
    // the witness sub-suite must pass unconditionally
    let report = descent_witnesses(&y, &sp, &base.one_cyc()).unwrap();
    assert!(report.all_passed(), "{report:?}");
    // the full lattice computation is opt-in
    if std::env::var("RUN_FULL_INVARIANT").is_ok() {
        let ring = ring_basis(&tower).unwrap();
        let result = invariant_order(&y, &sp, &ring).unwrap();
        assert_eq!(result.fixed_rank, h.dim() * ring.degree() / 2);
        assert!(result.span_equals_order);
        pass_line("10 invariant-order (full)", started);
    } else {
        println!("ACCEPTANCE 10 invariant-order: witness sub-suite PASS; full lattice check SKIPPED (set RUN_FULL_INVARIANT=1)");
        pass_line("10 invariant-order (witness sub-suite)", started);
    }
}
