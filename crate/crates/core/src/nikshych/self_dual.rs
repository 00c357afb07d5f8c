//! The self-duality of H: the multiplicative extension of
//!
//! ū_a = Σ ζ^{(k+l)d} s_kl,  ū_b = Σ ζ^{(k−l)d} s_kl,
//! v̄_a = γ_dd,  v̄_b = γ_{−d,d},  ḡ = B + Σ ζ^{dkl} t_kl,
//!
//! with d = (p+1)/2, is a Hopf isomorphism from H onto the dual.

use crate::exactfield::{QuadElem, TowerElems};
use crate::hopfcore::{HopfData, HopfElem, HopfMap};

use super::dual_tables::{DualKind, DualMono};
use super::{require_prime, Monomials, NikshychError};

/// Builds Ψ: H → H* as a linear map given by basis images into the
/// s/t/γ/γB presentation `paper` of the dual. Monomials map to products
/// of the displayed generators; zero exponents use the p-th power, which
/// lands on the correct sector unit (ε_A resp. ε_{gA}).
pub fn self_duality_map<'a>(h: &'a HopfData, paper: &'a HopfData) -> Result<HopfMap<'a>, NikshychError> {
    let tower = h.tower();
    let p = require_prime(tower)? as i64;
    let d = (p + 1) / 2;
    let mono = Monomials::new(p as u32);
    let dm = DualMono::new(p as u32);
    let one = tower.one();

    let mut ua_bar = HopfElem::zero();
    let mut ub_bar = HopfElem::zero();
    for k in 0..p {
        for l in 0..p {
            ua_bar.add_term(dm.enc(DualKind::S, k, l), &QuadElem::from_cyc(tower.zeta_p_pow((k + l) * d)?));
            ub_bar.add_term(dm.enc(DualKind::S, k, l), &QuadElem::from_cyc(tower.zeta_p_pow((k - l) * d)?));
        }
    }
    let va_bar = HopfElem::single(dm.enc(DualKind::Gam, d, d), one.clone());
    let vb_bar = HopfElem::single(dm.enc(DualKind::Gam, -d, d), one.clone());
    let mut g_bar = HopfElem::single(dm.enc(DualKind::GamB, 0, 0), one.clone());
    for k in 0..p {
        for l in 0..p {
            g_bar.add_term(dm.enc(DualKind::T, k, l), &QuadElem::from_cyc(tower.zeta_p_pow(d * k * l)?));
        }
    }

    // powers 1..=p of each generator; the p-th power is the sector unit
    let powers = |x: &HopfElem| -> Vec<HopfElem> {
        let mut v = Vec::with_capacity(p as usize + 1);
        v.push(x.clone());
        for _ in 1..p {
            let next = paper.multiply(v.last().unwrap(), x);
            v.push(next);
        }
        v
    };
    let ua_pow = powers(&ua_bar);
    let ub_pow = powers(&ub_bar);
    let va_pow = powers(&va_bar);
    let vb_pow = powers(&vb_bar);
    let at = |pows: &[HopfElem], e: i64| -> HopfElem {
        let e = if e == 0 { p } else { e };
        pows[(e - 1) as usize].clone()
    };

    let dim = h.dim();
    let mut images = vec![HopfElem::zero(); dim];
    for idx in 0..dim as u32 {
        let l = mono.decode(idx);
        let (i, j) = (l.i as i64, l.j as i64);
        let a_part = if l.sector.twisted() {
            paper.multiply(&at(&va_pow, i), &at(&vb_pow, j))
        } else {
            paper.multiply(&at(&ua_pow, i), &at(&ub_pow, j))
        };
        images[idx as usize] = if l.sector.has_g() {
            paper.multiply(&g_bar, &a_part)
        } else {
            a_part
        };
    }
    Ok(HopfMap::new(h, paper, images))
}

/// The element ḡ (for direct checks like ḡ² = 1).
#[cfg_attr(not(test), allow(dead_code))]
pub(super) fn g_bar_elem(paper: &HopfData) -> Result<HopfElem, NikshychError> {
    let tower = paper.tower();
    let p = require_prime(tower)? as i64;
    let d = (p + 1) / 2;
    let dm = DualMono::new(p as u32);
    let mut g_bar = HopfElem::single(dm.enc(DualKind::GamB, 0, 0), tower.one());
    for k in 0..p {
        for l in 0..p {
            g_bar.add_term(dm.enc(DualKind::T, k, l), &QuadElem::from_cyc(tower.zeta_p_pow(d * k * l)?));
        }
    }
    Ok(g_bar)
}
