//! Irreducible representations, characters and cocharacters of H.
//!
//! There are 2p one-dimensional representations V_i^± (A₁ acts as 0,
//! u_a^k u_b^l by ζ^{(k+l)i}, g by ±1), p(p−1)/2 two-dimensional ones
//! W_ij indexed by i < j (g swaps the two weight lines), and two
//! p-dimensional ones M^± living on the twisted sector.

use crate::exactfield::{QuadElem, Rat, Tower, TowerElems};
use crate::exactlinalg::FieldMatrix;
use crate::hopfcore::{Character, HopfData, HopfElem};

use super::dual_tables::{paper_dual_images, DualKind, DualMono};
use super::{require_prime, Monomials, NikshychError, Sector};

/// An irreducible representation by explicit matrices over the tower,
/// one matrix per basis label.
pub struct Irrep {
    pub name: String,
    pub dimension: usize,
    pub matrices: Vec<FieldMatrix>,
}

impl Irrep {
    /// Checks ρ(b_i)ρ(b_j) = ρ(b_i·b_j) on all basis pairs and ρ(1) = id.
    pub fn verify_algebra_map(&self, h: &HopfData) -> Vec<String> {
        let tower = h.tower();
        let dim = h.dim() as u32;
        let mut fails = Vec::new();
        let mut rho_one = FieldMatrix::zero(tower, self.dimension, self.dimension);
        for (&i, c) in h.unit().terms() {
            for r in 0..self.dimension {
                for s in 0..self.dimension {
                    let v = rho_one.get(r, s) + &(c * self.matrices[i as usize].get(r, s));
                    rho_one.set(r, s, v);
                }
            }
        }
        let identity = FieldMatrix::identity(tower, self.dimension);
        if matrices_differ(&rho_one, &identity) {
            fails.push(format!("{}: rho(1) != id", self.name));
        }
        for i in 0..dim {
            for j in 0..dim {
                let prod = self.matrices[i as usize].mul_mat(&self.matrices[j as usize]);
                let mut expect = FieldMatrix::zero(tower, self.dimension, self.dimension);
                for (&k, c) in h.mult_entry(i, j).terms() {
                    for r in 0..self.dimension {
                        for s in 0..self.dimension {
                            let v = expect.get(r, s) + &(c * self.matrices[k as usize].get(r, s));
                            expect.set(r, s, v);
                        }
                    }
                }
                if matrices_differ(&prod, &expect) {
                    fails.push(format!("{}: rho({})rho({}) != rho({}·{})", self.name, h.label(i), h.label(j), h.label(i), h.label(j)));
                    if fails.len() > 4 {
                        return fails;
                    }
                }
            }
        }
        fails
    }

    /// The trace functional of the representation.
    pub fn trace_character(&self, tower: &Tower) -> Character {
        let mut e = HopfElem::zero();
        for (i, m) in self.matrices.iter().enumerate() {
            e.add_term(i as u32, &m.trace());
        }
        let _ = tower;
        Character::from_elem(e)
    }
}

fn matrices_differ(a: &FieldMatrix, b: &FieldMatrix) -> bool {
    if a.nrows() != b.nrows() || a.ncols() != b.ncols() {
        return true;
    }
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            if a.get(i, j) != b.get(i, j) {
                return true;
            }
        }
    }
    false
}

/// All irreducible representations, ordered V_0^+, V_0^−, …, V_{p−1}^−,
/// W_{ij} (i < j lexicographic), M^+, M^−.
pub fn irreps_h(h: &HopfData) -> Result<Vec<Irrep>, NikshychError> {
    let tower = h.tower();
    let p = require_prime(tower)? as i64;
    let mono = Monomials::new(p as u32);
    let dim = h.dim();
    let mut out = Vec::new();

    // V_i^±
    for i in 0..p {
        for sign in [1i64, -1] {
            let mut matrices = Vec::with_capacity(dim);
            for idx in 0..dim as u32 {
                let l = mono.decode(idx);
                let mut m = FieldMatrix::zero(tower, 1, 1);
                if !l.sector.twisted() {
                    let mut c = QuadElem::from_cyc(tower.zeta_p_pow((l.i as i64 + l.j as i64) * i)?);
                    if l.sector.has_g() && sign < 0 {
                        c = -c;
                    }
                    m.set(0, 0, c);
                }
                matrices.push(m);
            }
            out.push(Irrep {
                name: format!("V{}{}", i, if sign > 0 { "+" } else { "-" }),
                dimension: 1,
                matrices,
            });
        }
    }

    // W_ij, i < j: u_a^k u_b^l ↦ diag(ζ^{ik+jl}, ζ^{il+jk}), g ↦ swap
    for i in 0..p {
        for j in i + 1..p {
            let mut matrices = Vec::with_capacity(dim);
            for idx in 0..dim as u32 {
                let l = mono.decode(idx);
                let (k, lw) = (l.i as i64, l.j as i64);
                let mut m = FieldMatrix::zero(tower, 2, 2);
                if !l.sector.twisted() {
                    let a = QuadElem::from_cyc(tower.zeta_p_pow(i * k + j * lw)?);
                    let b = QuadElem::from_cyc(tower.zeta_p_pow(i * lw + j * k)?);
                    if l.sector.has_g() {
                        m.set(0, 1, b);
                        m.set(1, 0, a);
                    } else {
                        m.set(0, 0, a);
                        m.set(1, 1, b);
                    }
                }
                matrices.push(m);
            }
            out.push(Irrep { name: format!("W[{i},{j}]"), dimension: 2, matrices });
        }
    }

    // M^±: v_a m_r = ζ^r m_r, v_b m_r = m_{r+1}, g ↦ ±id
    let pd = p as usize;
    for sign in [1i64, -1] {
        let mut matrices = Vec::with_capacity(dim);
        for idx in 0..dim as u32 {
            let l = mono.decode(idx);
            let (k, lw) = (l.i as i64, l.j as i64);
            let mut m = FieldMatrix::zero(tower, pd, pd);
            if l.sector.twisted() {
                // (v_a^k v_b^l) m_r = ζ^{k(r+l)} m_{r+l}
                for r in 0..p {
                    let mut c = QuadElem::from_cyc(tower.zeta_p_pow(k * (r + lw))?);
                    if l.sector.has_g() && sign < 0 {
                        c = -c;
                    }
                    m.set(((r + lw).rem_euclid(p)) as usize, r as usize, c);
                }
            }
            matrices.push(m);
        }
        out.push(Irrep { name: format!("M{}", if sign > 0 { "+" } else { "-" }), dimension: pd, matrices });
    }

    Ok(out)
}

/// The characters of the irreducibles, in the same order as [`irreps_h`],
/// assembled from the closed formulas on the s/t/γ/γB basis
///
/// χ_{V_i^±} = ±γ_ii + Σ ζ^{(k+l)i} s_kl,
/// χ_{W_ij} = Σ (ζ^{ik+jl} + ζ^{il+jk}) s_kl,
/// χ_{M^±} = p·t_00 ± (1/√p) Σ_i γ_ii B,
///
/// and then rewritten as functionals on the monomial basis of H.
pub fn characters_h(tower: &Tower) -> Result<Vec<Character>, NikshychError> {
    let p = require_prime(tower)? as i64;
    let d = DualMono::new(p as u32);
    let (fwd, _) = paper_dual_images(tower)?;
    let one = tower.one();
    let expand = |paper_elem: &HopfElem| -> Character {
        let mut acc = HopfElem::zero();
        for (&i, c) in paper_elem.terms() {
            acc.add_scaled(&fwd[i as usize], c);
        }
        Character::from_elem(acc)
    };
    let mut out = Vec::new();
    for i in 0..p {
        for sign in [1i64, -1] {
            let mut e = HopfElem::zero();
            let g = if sign > 0 { one.clone() } else { -&one };
            e.add_term(d.enc(DualKind::Gam, i, i), &g);
            for k in 0..p {
                for l in 0..p {
                    e.add_term(d.enc(DualKind::S, k, l), &QuadElem::from_cyc(tower.zeta_p_pow((k + l) * i)?));
                }
            }
            out.push(expand(&e));
        }
    }
    for i in 0..p {
        for j in i + 1..p {
            let mut e = HopfElem::zero();
            for k in 0..p {
                for l in 0..p {
                    let c = &tower.zeta_p_pow(i * k + j * l)? + &tower.zeta_p_pow(i * l + j * k)?;
                    e.add_term(d.enc(DualKind::S, k, l), &QuadElem::from_cyc(c));
                }
            }
            out.push(expand(&e));
        }
    }
    let inv_sqrt_p = QuadElem::from_cyc(tower.sqrt_p()?.inv()?);
    for sign in [1i64, -1] {
        let mut e = HopfElem::zero();
        e.add_term(d.enc(DualKind::T, 0, 0), &tower.scalar_from_int(p));
        let c = if sign > 0 { inv_sqrt_p.clone() } else { -&inv_sqrt_p };
        for i in 0..p {
            e.add_term(d.enc(DualKind::GamB, i, i), &c);
        }
        out.push(expand(&e));
    }
    Ok(out)
}

/// The cocharacters (characters of the dual) as elements of H, with
/// names: ψ_{L_i^±} = u_a^i ± v_a^i, ψ_{P_ij} = u_a^i u_b^j + u_a^i u_b^{−j}
/// (0 ≤ i < p, 1 ≤ j ≤ (p−1)/2), ψ_{N^±} = (1/p) Σ g u_a^i u_b^j ±
/// (1/√p) Σ g v_a^i.
pub fn cocharacters_h(tower: &Tower) -> Result<Vec<(String, HopfElem)>, NikshychError> {
    let p = require_prime(tower)? as i64;
    let mono = Monomials::new(p as u32);
    let one = tower.one();
    let mut out = Vec::new();
    for i in 0..p {
        for sign in [1i64, -1] {
            let mut e = HopfElem::zero();
            e.add_term(mono.enc(Sector::A0, i, 0), &one);
            e.add_term(mono.enc(Sector::A1, i, 0), &if sign > 0 { one.clone() } else { -&one });
            out.push((format!("L{}{}", i, if sign > 0 { "+" } else { "-" }), e));
        }
    }
    for i in 0..p {
        for j in 1..=(p - 1) / 2 {
            let mut e = HopfElem::zero();
            e.add_term(mono.enc(Sector::A0, i, j), &one);
            e.add_term(mono.enc(Sector::A0, i, -j), &one);
            out.push((format!("P[{i},{j}]"), e));
        }
    }
    let inv_p = QuadElem::from_cyc(tower.one_cyc().scale(&Rat::new(1.into(), p.into())));
    let inv_sqrt_p = QuadElem::from_cyc(tower.sqrt_p()?.inv()?);
    for sign in [1i64, -1] {
        let mut e = HopfElem::zero();
        for i in 0..p {
            for j in 0..p {
                e.add_term(mono.enc(Sector::GA0, i, j), &inv_p);
            }
        }
        let c = if sign > 0 { inv_sqrt_p.clone() } else { -&inv_sqrt_p };
        for i in 0..p {
            e.add_term(mono.enc(Sector::GA1, i, 0), &c);
        }
        out.push((format!("N{}", if sign > 0 { "+" } else { "-" }), e));
    }
    Ok(out)
}
