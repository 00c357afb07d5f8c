//! The Hopf automorphism group of H, of order 4p: generated by ν
//! (identity on A, g ↦ g(e₀−e₁)), the inversion automorphism extended by
//! g ↦ g, and conjugation by the group-like u_a + v_a.

use crate::exactfield::TowerElems;
use crate::hopfcore::{HopfData, HopfElem, HopfMap};

use super::{require_prime, Monomials, NikshychError, Sector};

fn identity_images(h: &HopfData) -> Vec<HopfElem> {
    (0..h.dim() as u32).map(|i| h.basis_elem(i)).collect()
}

/// ν: fixes A pointwise, negates the g·A₁ sector (g ↦ g(e₀−e₁)).
pub(super) fn nu_images(h: &HopfData, mono: &Monomials) -> Vec<HopfElem> {
    (0..h.dim() as u32)
        .map(|idx| {
            let l = mono.decode(idx);
            let b = h.basis_elem(idx);
            if l.sector == Sector::GA1 {
                b.neg()
            } else {
                b
            }
        })
        .collect()
}

/// Inversion on all four generators, g fixed.
fn inversion_images(h: &HopfData, mono: &Monomials) -> Vec<HopfElem> {
    (0..h.dim() as u32)
        .map(|idx| {
            let l = mono.decode(idx);
            let (i, j) = (l.i as i64, l.j as i64);
            h.basis_elem(mono.enc(l.sector, -i, -j))
        })
        .collect()
}

/// Conjugation by the group-like w = u_a + v_a.
fn conjugation_images(h: &HopfData, mono: &Monomials) -> Vec<HopfElem> {
    let one = h.tower().one();
    let p = mono.p() as i64;
    let mut w = HopfElem::zero();
    w.add_term(mono.enc(Sector::A0, 1, 0), &one);
    w.add_term(mono.enc(Sector::A1, 1, 0), &one);
    let mut winv = HopfElem::zero();
    winv.add_term(mono.enc(Sector::A0, p - 1, 0), &one);
    winv.add_term(mono.enc(Sector::A1, p - 1, 0), &one);
    (0..h.dim() as u32)
        .map(|idx| h.multiply(&h.multiply(&w, &h.basis_elem(idx)), &winv))
        .collect()
}

/// Generates the full automorphism group by closing the generator set
/// under composition. Every element is returned as a `HopfMap`; callers
/// verify each with [`HopfMap::verify_hopf_iso`].
pub fn hopf_automorphisms(h: &HopfData) -> Result<Vec<HopfMap<'_>>, NikshychError> {
    let p = require_prime(h.tower())?;
    let mono = Monomials::new(p);
    let gens = vec![nu_images(h, &mono), inversion_images(h, &mono), conjugation_images(h, &mono)];
    let mut found: Vec<Vec<HopfElem>> = vec![identity_images(h)];
    let mut frontier: Vec<Vec<HopfElem>> = vec![identity_images(h)];
    let bound = 16 * p as usize;
    while let Some(cur) = frontier.pop() {
        for g in &gens {
            // compose: (g ∘ cur)(b_i) = g(cur(b_i))
            let composed: Vec<HopfElem> =
                cur.iter().map(|im| h.apply_linear(g, im)).collect();
            if !found.contains(&composed) {
                found.push(composed.clone());
                frontier.push(composed);
            }
        }
        assert!(found.len() <= bound, "automorphism closure exceeded the expected bound");
    }
    found.sort_by(|a, b| {
        let ka: Vec<String> = a.iter().map(|e| format!("{e:?}")).collect();
        let kb: Vec<String> = b.iter().map(|e| format!("{e:?}")).collect();
        ka.cmp(&kb)
    });
    Ok(found.into_iter().map(|images| HopfMap::new(h, h, images)).collect())
}
