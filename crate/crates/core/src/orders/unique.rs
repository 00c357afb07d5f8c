//! The canonical order Y of the 4p²-dimensional algebra: generated by
//! e₀, e₁, g and π⁻¹(u_θ − e₀), π⁻¹(v_θ − e₁); free over the integer ring
//! on the 4p² elements
//!
//! e₀, e₁, g·e₀, g·e₁,
//! π^{−(i+j)} x_b^i x_a^j, π^{−(i+j)} g x_b^i x_a^j,
//! π^{−(i+j)} y_b^i y_a^j, π^{−(i+j)} g y_b^i y_a^j,   (i,j) ≠ (0,0),
//!
//! with x_θ = u_θ − e₀ and y_θ = v_θ − e₁.

use std::sync::Arc;

use crate::exactfield::{is_unit, QuadElem, Rat, TowerElems};
use crate::exactlinalg::{IntLattice, QMatrix};
use crate::hopfcore::{HopfData, HopfElem};
use crate::nikshych::{map_t, Monomials, Sector};

use super::{OrderError, OrderLattice};

/// Builds the free basis of Y over the tower's integer ring. The tower
/// must carry a radicand r with (r) = (ζ_p − 1), i.e. r/(ζ_p − 1) a unit,
/// so that π = t satisfies (π)² = (ζ_p − 1).
pub fn nikshych_order(ambient: &Arc<HopfData>) -> Result<OrderLattice, OrderError> {
    let tower = ambient.tower();
    let p = tower
        .prime()
        .ok_or_else(|| OrderError::PreconditionViolated("tower has no distinguished prime".into()))?
        as i64;
    let pi = tower.gen_t().map_err(|_| {
        OrderError::PreconditionViolated("the order needs the quadratic generator π".into())
    })?;
    let zeta1 = QuadElem::from_cyc(&tower.zeta_p()? - &tower.one_cyc());
    if !is_unit(&(&(&pi * &pi) / &zeta1)) {
        return Err(OrderError::PreconditionViolated(
            "radicand does not generate the ideal (ζ_p − 1)".into(),
        ));
    }
    let mono = Monomials::new(p as u32);
    let one = tower.one();
    let e0 = ambient.basis_elem(mono.enc(Sector::A0, 0, 0));
    let e1 = ambient.basis_elem(mono.enc(Sector::A1, 0, 0));
    let g = crate::nikshych::g_elem(ambient);
    let ge0 = ambient.multiply(&g, &e0);
    let ge1 = ambient.multiply(&g, &e1);
    let xa = ambient.basis_elem(mono.enc(Sector::A0, 1, 0)).sub(&e0);
    let xb = ambient.basis_elem(mono.enc(Sector::A0, 0, 1)).sub(&e0);
    let ya = ambient.basis_elem(mono.enc(Sector::A1, 1, 0)).sub(&e1);
    let yb = ambient.basis_elem(mono.enc(Sector::A1, 0, 1)).sub(&e1);

    // powers 0..p−1 of each building block
    let powers = |x: &HopfElem, unit: &HopfElem| -> Vec<HopfElem> {
        let mut v = vec![unit.clone()];
        for k in 1..p {
            let next = ambient.multiply(&v[(k - 1) as usize], x);
            v.push(next);
        }
        v
    };
    let xa_pow = powers(&xa, &e0);
    let xb_pow = powers(&xb, &e0);
    let ya_pow = powers(&ya, &e1);
    let yb_pow = powers(&yb, &e1);
    let pi_inv = pi.inv()?;
    let mut pi_neg = vec![one.clone()];
    for k in 1..=2 * (p - 1) {
        let next = &pi_neg[(k - 1) as usize] * &pi_inv;
        pi_neg.push(next);
    }

    let mut basis = vec![e0.clone(), e1.clone(), ge0, ge1];
    let mut push_block = |b_pow: &[HopfElem], a_pow: &[HopfElem], with_g: bool| {
        for i in 0..p {
            for j in 0..p {
                if i == 0 && j == 0 {
                    continue;
                }
                let m = ambient.multiply(&b_pow[i as usize], &a_pow[j as usize]);
                let m = if with_g { ambient.multiply(&g, &m) } else { m };
                basis.push(m.scaled(&pi_neg[(i + j) as usize]));
            }
        }
    };
    push_block(&xb_pow, &xa_pow, false);
    push_block(&xb_pow, &xa_pow, true);
    push_block(&yb_pow, &ya_pow, false);
    push_block(&yb_pow, &ya_pow, true);
    OrderLattice::from_free_basis(ambient.clone(), basis)
}

/// The elements every order of the full algebra must contain, each as a
/// (name, element) pair: e₀, e₁, g·e₁, g·e₀, u_a, v_a, (1/√p)Σu_a^i,
/// (1/√p)Σv_a^i, (1/√p)Σ(u_a^i+v_a^i), T(e₁), and every cocharacter.
pub fn forced_elements(ambient: &HopfData) -> Result<Vec<(String, HopfElem)>, OrderError> {
    let tower = ambient.tower();
    let p = tower
        .prime()
        .ok_or_else(|| OrderError::PreconditionViolated("tower has no distinguished prime".into()))?
        as i64;
    let mono = Monomials::new(p as u32);
    let inv_sqrt_p = QuadElem::from_cyc(
        tower
            .sqrt_p()
            .map_err(|e| OrderError::Field(e))?
            .inv()?,
    );
    let e0 = ambient.basis_elem(mono.enc(Sector::A0, 0, 0));
    let e1 = ambient.basis_elem(mono.enc(Sector::A1, 0, 0));
    let g = crate::nikshych::g_elem(ambient);
    let mut out: Vec<(String, HopfElem)> = vec![
        ("e0".into(), e0.clone()),
        ("e1".into(), e1.clone()),
        ("g*e1".into(), ambient.multiply(&g, &e1)),
        ("g*e0".into(), ambient.multiply(&g, &e0)),
        ("ua".into(), ambient.basis_elem(mono.enc(Sector::A0, 1, 0))),
        ("va".into(), ambient.basis_elem(mono.enc(Sector::A1, 1, 0))),
    ];
    let mut sum_ua = HopfElem::zero();
    let mut sum_va = HopfElem::zero();
    let mut sum_both = HopfElem::zero();
    for i in 0..p {
        sum_ua.add_term(mono.enc(Sector::A0, i, 0), &inv_sqrt_p);
        sum_va.add_term(mono.enc(Sector::A1, i, 0), &inv_sqrt_p);
        sum_both.add_term(mono.enc(Sector::A0, i, 0), &inv_sqrt_p);
        sum_both.add_term(mono.enc(Sector::A1, i, 0), &inv_sqrt_p);
    }
    out.push(("sum(ua^i)/sqrt(p)".into(), sum_ua));
    out.push(("sum(va^i)/sqrt(p)".into(), sum_va));
    out.push(("sum(ua^i+va^i)/sqrt(p)".into(), sum_both));
    let te1 = map_t(ambient, &e1).map_err(|e| OrderError::PreconditionViolated(e.to_string()))?;
    out.push(("T(e1)".into(), te1));
    for (name, psi) in crate::nikshych::cocharacters_h(tower)
        .map_err(|e| OrderError::PreconditionViolated(e.to_string()))?
    {
        out.push((format!("cochar:{name}"), psi));
    }
    Ok(out)
}

/// The intersection Z = Y ∩ K⟨h⟩ for the group-like h = u_a + v_a,
/// computed as a Z-lattice in ring coordinates, together with the check
/// that the integrals of Z are exactly the O-multiples of (1/√p) Σ h^i.
/// Returns (the intersection lattice, λ, whether the integral module is
/// exactly O·λ).
pub fn intersection_with_group_part(
    y: &OrderLattice,
    ring: &super::RingBasis,
) -> Result<(IntLattice, HopfElem, bool), OrderError> {
    let ambient = y.ambient();
    let tower = ambient.tower();
    let p = tower
        .prime()
        .ok_or_else(|| OrderError::PreconditionViolated("tower has no distinguished prime".into()))?
        as i64;
    let mono = Monomials::new(p as u32);
    let e = ring.degree();
    // h^i = u_a^i + v_a^i
    let h_pows: Vec<HopfElem> = (0..p)
        .map(|i| {
            let mut x = HopfElem::zero();
            x.add_term(mono.enc(Sector::A0, i, 0), &tower.one());
            x.add_term(mono.enc(Sector::A1, i, 0), &tower.one());
            x
        })
        .collect();
    // ring coordinates of c ↦ coords_Y(Σ c_i h^i): stack, for each
    // (i, θ_a), the ring-flattened Y-coordinates of θ_a·h^i
    let n_cols = p as usize * e;
    let n_rows = y.rank() * e;
    let mut rows = vec![vec![Rat::from(num::BigInt::from(0)); n_cols]; n_rows];
    for (i, hp) in h_pows.iter().enumerate() {
        for (a, theta) in ring.elems().iter().enumerate() {
            let coords = y.coords(&hp.scaled(theta))?;
            for (k, c) in coords.iter().enumerate() {
                let flat = ring.flatten(c);
                for (cc, val) in flat.iter().enumerate() {
                    rows[k * e + cc][i * e + a] = val.clone();
                }
            }
        }
    }
    let a_mat = QMatrix::from_rows(rows);
    let z_lat = IntLattice::integral_preimage(&a_mat)?;
    // λ = (1/√p) Σ h^i
    let inv_sqrt_p = QuadElem::from_cyc(tower.sqrt_p()?.inv()?);
    let mut lambda = HopfElem::zero();
    for hp in &h_pows {
        lambda.add_scaled(hp, &inv_sqrt_p);
    }
    // λ in the (h^i ⊗ ring) coordinates of Z's ambient space
    let mut lambda_coords = vec![Rat::from(num::BigInt::from(0)); n_cols];
    let flat_c = ring.flatten(&inv_sqrt_p);
    for i in 0..p as usize {
        lambda_coords[i * e..(i + 1) * e].clone_from_slice(&flat_c);
    }
    if !z_lat.contains(&lambda_coords) {
        return Ok((z_lat, lambda, false));
    }
    // the integrals of Z are {c : c·λ ∈ Y}·λ; this ideal is exactly O iff
    // the lattice {ring coords of c : c·λ ∈ Y} equals Z^e
    let coords_lambda = y.coords(&lambda)?;
    let mut rows = vec![vec![Rat::from(num::BigInt::from(0)); e]; y.rank() * e];
    for (k, v) in coords_lambda.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        for (a, theta) in ring.elems().iter().enumerate() {
            let flat = ring.flatten(&(theta * v));
            for (cc, val) in flat.iter().enumerate() {
                rows[k * e + cc][a] = val.clone();
            }
        }
    }
    let j_lat = IntLattice::integral_preimage(&QMatrix::from_rows(rows))?;
    let exact = j_lat == IntLattice::standard(e);
    Ok((z_lat, lambda, exact))
}

/// The integral of Y in closed form, for cross-checking `integrals`:
/// (1/p)(1 + g) Σ_{i,j} u_a^i u_b^j.
pub fn closed_form_integral(ambient: &HopfData) -> HopfElem {
    let tower = ambient.tower();
    let p = tower.prime().expect("prime required") as i64;
    let mono = Monomials::new(p as u32);
    let inv_p = tower.scalar_from_rat(Rat::new(1.into(), p.into()));
    let mut sum = HopfElem::zero();
    for i in 0..p {
        for j in 0..p {
            sum.add_term(mono.enc(Sector::A0, i, j), &inv_p);
        }
    }
    let g = crate::nikshych::g_elem(ambient);
    sum.add(&ambient.multiply(&g, &sum))
}

