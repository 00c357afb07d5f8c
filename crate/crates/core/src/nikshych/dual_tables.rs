//! The dual Hopf algebra of H on its convenient basis
//! {s_ij} ∪ {t_ij} ∪ {γ_ij} ∪ {γ_ij B}, built from the explicit closed
//! tables, together with the identification against the transpose-dual of
//! the monomial basis. Here s/t/α/β denote the dual basis of the four
//! monomial sectors, γ_ij = Σ ζ^{ik+jl} α_kl is the dual basis of the
//! g-translated idempotents, and B = √p Σ_k β_k0 satisfies B² = γ_00.

use crate::exactfield::{QuadElem, Rat, Tower, TowerElems};
use crate::hopfcore::{change_basis, dual_hopf, tables_diff, Check, HopfData, HopfElem, Report, TensorElem};

use super::{require_prime, Monomials, NikshychError, Sector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualKind {
    S = 0,
    T = 1,
    Gam = 2,
    GamB = 3,
}

impl DualKind {
    fn from_index(k: u32) -> DualKind {
        match k {
            0 => DualKind::S,
            1 => DualKind::T,
            2 => DualKind::Gam,
            3 => DualKind::GamB,
            _ => panic!("bad dual kind {k}"),
        }
    }
}

/// Basis label of the dual: one of s[i,j], t[i,j], gam[i,j], gamB[i,j].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualLabel {
    pub kind: DualKind,
    pub i: u32,
    pub j: u32,
}

impl DualLabel {
    pub fn name(&self) -> String {
        let k = match self.kind {
            DualKind::S => "s",
            DualKind::T => "t",
            DualKind::Gam => "gam",
            DualKind::GamB => "gamB",
        };
        format!("{k}[{},{}]", self.i, self.j)
    }
}

pub(super) struct DualMono {
    p: u32,
}

impl DualMono {
    pub(super) fn new(p: u32) -> Self {
        DualMono { p }
    }

    pub(super) fn enc(&self, kind: DualKind, i: i64, j: i64) -> u32 {
        let p = self.p as i64;
        (kind as u32) * self.p * self.p
            + (i.rem_euclid(p) as u32) * self.p
            + j.rem_euclid(p) as u32
    }

    pub(super) fn decode(&self, idx: u32) -> DualLabel {
        let pp = self.p * self.p;
        DualLabel { kind: DualKind::from_index(idx / pp), i: (idx % pp) / self.p, j: idx % self.p }
    }
}

/// Index of a dual basis label in [`build_h_dual_tables`]' ordering.
pub fn dual_index(p: u32, kind: DualKind, i: i64, j: i64) -> u32 {
    DualMono::new(p).enc(kind, i, j)
}

/// The dual Hopf algebra on the s/t/γ/γB basis, from the closed tables:
///
/// * s_ij s_kl = δδ s_ij, s_ij t_kl = δδ t_kl, t_kl s_ij = δ_{ik}δ_{j,−l} t_kl,
///   t_ij t_kl = δ_{ik}δ_{j,−l} s_ij, γ_ij γ_kl = ζ^{il−jk} γ_{i+k,j+l},
///   with B central in the γ block and B² = γ_00.
/// * the comultiplication, counit and antipode tables listed below.
pub fn build_h_dual_tables(tower: &Tower) -> Result<HopfData, NikshychError> {
    let p = require_prime(tower)? as i64;
    let d = DualMono::new(p as u32);
    let dim = (4 * p * p) as usize;
    let one = tower.one();
    let inv_p2 = QuadElem::from_cyc(tower.one_cyc().scale(&Rat::new(1.into(), (p * p).into())));

    let mut labels = Vec::with_capacity(dim);
    for k in [DualKind::S, DualKind::T, DualKind::Gam, DualKind::GamB] {
        for i in 0..p as u32 {
            for j in 0..p as u32 {
                labels.push(DualLabel { kind: k, i, j }.name());
            }
        }
    }

    // unit: ε_H = Σ s_kl + γ_00
    let mut unit = HopfElem::zero();
    for k in 0..p {
        for l in 0..p {
            unit.add_term(d.enc(DualKind::S, k, l), &one);
        }
    }
    unit.add_term(d.enc(DualKind::Gam, 0, 0), &one);

    let mut mult = vec![HopfElem::zero(); dim * dim];
    for a in 0..dim as u32 {
        let la = d.decode(a);
        for b in 0..dim as u32 {
            let lb = d.decode(b);
            let (i1, j1) = (la.i as i64, la.j as i64);
            let (i2, j2) = (lb.i as i64, lb.j as i64);
            let entry = match (la.kind, lb.kind) {
                (DualKind::S, DualKind::S) if i1 == i2 && j1 == j2 => {
                    Some((DualKind::S, i1, j1, 0))
                }
                (DualKind::S, DualKind::T) if i1 == i2 && j1 == j2 => {
                    Some((DualKind::T, i1, j1, 0))
                }
                (DualKind::T, DualKind::S) if i1 == i2 && j2 == (-j1).rem_euclid(p) => {
                    Some((DualKind::T, i1, j1, 0))
                }
                (DualKind::T, DualKind::T) if i1 == i2 && j2 == (-j1).rem_euclid(p) => {
                    Some((DualKind::S, i1, j1, 0))
                }
                (DualKind::Gam, DualKind::Gam) => Some((DualKind::Gam, i1 + i2, j1 + j2, i1 * j2 - j1 * i2)),
                (DualKind::Gam, DualKind::GamB) => Some((DualKind::GamB, i1 + i2, j1 + j2, i1 * j2 - j1 * i2)),
                (DualKind::GamB, DualKind::Gam) => Some((DualKind::GamB, i1 + i2, j1 + j2, i1 * j2 - j1 * i2)),
                (DualKind::GamB, DualKind::GamB) => Some((DualKind::Gam, i1 + i2, j1 + j2, i1 * j2 - j1 * i2)),
                _ => None,
            };
            if let Some((kind, i, j, zexp)) = entry {
                let c = if zexp.rem_euclid(p) == 0 {
                    one.clone()
                } else {
                    QuadElem::from_cyc(tower.zeta_p_pow(zexp)?)
                };
                mult[a as usize * dim + b as usize] = HopfElem::single(d.enc(kind, i, j), c);
            }
        }
    }

    // Δ(s_ij) = Σ s_kl ⊗ s_{i−k,j−l} + (1/p²) ζ^{−(il+jk)} γ_kl ⊗ γ_lk
    // Δ(t_ij) = Σ ζ^{l(k−i)} t_kl ⊗ t_{i−k,j−l} + (1/p²) ζ^{−il} γ_kl B ⊗ γ_{l−j,k} B
    // Δ(γ_ij) = Σ ζ^{li+kj} s_kl ⊗ γ_ij + ζ^{ki+lj} γ_ij ⊗ s_kl
    // Δ(γ_ij B) = Σ ζ^{kj} t_kl ⊗ γ_{i,j−l} B + ζ^{k(i+l)} γ_{i+l,j} B ⊗ t_kl
    let mut comult = Vec::with_capacity(dim);
    for a in 0..dim as u32 {
        let la = d.decode(a);
        let (i, j) = (la.i as i64, la.j as i64);
        let mut t = TensorElem::zero();
        for k in 0..p {
            for l in 0..p {
                match la.kind {
                    DualKind::S => {
                        t.add_term(d.enc(DualKind::S, k, l), d.enc(DualKind::S, i - k, j - l), &one);
                        let c = QuadElem::from_cyc(tower.zeta_p_pow(-(i * l + j * k))?) * &inv_p2;
                        t.add_term(d.enc(DualKind::Gam, k, l), d.enc(DualKind::Gam, l, k), &c);
                    }
                    DualKind::T => {
                        let c = QuadElem::from_cyc(tower.zeta_p_pow(l * (k - i))?);
                        t.add_term(d.enc(DualKind::T, k, l), d.enc(DualKind::T, i - k, j - l), &c);
                        let c = QuadElem::from_cyc(tower.zeta_p_pow(-i * l)?) * &inv_p2;
                        t.add_term(d.enc(DualKind::GamB, k, l), d.enc(DualKind::GamB, l - j, k), &c);
                    }
                    DualKind::Gam => {
                        let c = QuadElem::from_cyc(tower.zeta_p_pow(l * i + k * j)?);
                        t.add_term(d.enc(DualKind::S, k, l), d.enc(DualKind::Gam, i, j), &c);
                        let c = QuadElem::from_cyc(tower.zeta_p_pow(k * i + l * j)?);
                        t.add_term(d.enc(DualKind::Gam, i, j), d.enc(DualKind::S, k, l), &c);
                    }
                    DualKind::GamB => {
                        let c = QuadElem::from_cyc(tower.zeta_p_pow(k * j)?);
                        t.add_term(d.enc(DualKind::T, k, l), d.enc(DualKind::GamB, i, j - l), &c);
                        let c = QuadElem::from_cyc(tower.zeta_p_pow(k * (i + l))?);
                        t.add_term(d.enc(DualKind::GamB, i + l, j), d.enc(DualKind::T, k, l), &c);
                    }
                }
            }
        }
        comult.push(t);
    }

    // ε(s_ij) = ε(t_ij) = δ_{i0}δ_{j0}; ε(γ_ij) = ε(γ_ij B) = 0
    let counit = (0..dim as u32)
        .map(|a| {
            let la = d.decode(a);
            let is_one = matches!(la.kind, DualKind::S | DualKind::T) && la.i == 0 && la.j == 0;
            if is_one {
                one.clone()
            } else {
                tower.zero()
            }
        })
        .collect();

    // S(s_ij) = s_{−i,−j}; S(t_ij) = ζ^{−ij} t_{−i,j};
    // S(γ_ij) = γ_{−j,−i}; S(γ_ij B) = γ_{−j,−i} B
    let mut antipode = Vec::with_capacity(dim);
    for a in 0..dim as u32 {
        let la = d.decode(a);
        let (i, j) = (la.i as i64, la.j as i64);
        let (kind, ni, nj, zexp) = match la.kind {
            DualKind::S => (DualKind::S, -i, -j, 0),
            DualKind::T => (DualKind::T, -i, j, -i * j),
            DualKind::Gam => (DualKind::Gam, -j, -i, 0),
            DualKind::GamB => (DualKind::GamB, -j, -i, 0),
        };
        let c = if zexp.rem_euclid(p) == 0 { one.clone() } else { QuadElem::from_cyc(tower.zeta_p_pow(zexp)?) };
        antipode.push(HopfElem::single(d.enc(kind, ni, nj), c));
    }

    Ok(HopfData::new(tower.clone(), labels, unit, mult, comult, counit, antipode))
}

/// The basis identification with the transpose-dual of H's monomial
/// basis {s_ij} ∪ {t_ij} ∪ {α_ij} ∪ {β_ij}:
///
/// γ_ij = Σ_{k,l} ζ^{ik+jl} α_kl,     γ_ij B = √p Σ_k ζ^{jk} β_{k,j−i},
/// α_kl = (1/p²) Σ_{i,j} ζ^{−(ik+jl)} γ_ij,
/// β_ij = (1/(p√p)) Σ_k ζ^{−ki} γ_{k−j,k} B.
///
/// Returns (fwd, inv): images of the s/t/γ/γB basis in dual-monomial
/// coordinates and of the dual-monomial basis in s/t/γ/γB coordinates.
pub fn paper_dual_images(tower: &Tower) -> Result<(Vec<HopfElem>, Vec<HopfElem>), NikshychError> {
    let p = require_prime(tower)? as i64;
    let mono = Monomials::new(p as u32);
    let d = DualMono::new(p as u32);
    let dim = (4 * p * p) as usize;
    let one = tower.one();
    let sqrt_p = QuadElem::from_cyc(tower.sqrt_p()?);
    let inv_p2 = QuadElem::from_cyc(tower.one_cyc().scale(&Rat::new(1.into(), (p * p).into())));
    let inv_p_sqrt_p = QuadElem::from_cyc((&tower.sqrt_p()? * &tower.cyc_from_int(p)).inv()?);

    let mut fwd = vec![HopfElem::zero(); dim];
    for a in 0..dim as u32 {
        let la = d.decode(a);
        let (i, j) = (la.i as i64, la.j as i64);
        let img = &mut fwd[a as usize];
        match la.kind {
            DualKind::S => img.add_term(mono.enc(Sector::A0, i, j), &one),
            DualKind::T => img.add_term(mono.enc(Sector::A1, i, j), &one),
            DualKind::Gam => {
                for k in 0..p {
                    for l in 0..p {
                        let c = QuadElem::from_cyc(tower.zeta_p_pow(i * k + j * l)?);
                        img.add_term(mono.enc(Sector::GA0, k, l), &c);
                    }
                }
            }
            DualKind::GamB => {
                for k in 0..p {
                    let c = QuadElem::from_cyc(tower.zeta_p_pow(j * k)?) * &sqrt_p;
                    img.add_term(mono.enc(Sector::GA1, k, j - i), &c);
                }
            }
        }
    }

    let mut inv = vec![HopfElem::zero(); dim];
    for a in 0..dim as u32 {
        let la = mono.decode(a);
        let (i, j) = (la.i as i64, la.j as i64);
        let img = &mut inv[a as usize];
        match la.sector {
            Sector::A0 => img.add_term(d.enc(DualKind::S, i, j), &one),
            Sector::A1 => img.add_term(d.enc(DualKind::T, i, j), &one),
            Sector::GA0 => {
                // here (i, j) plays the role of (k, l) in the display
                for r in 0..p {
                    for s in 0..p {
                        let c = QuadElem::from_cyc(tower.zeta_p_pow(-(r * i + s * j))?) * &inv_p2;
                        img.add_term(d.enc(DualKind::Gam, r, s), &c);
                    }
                }
            }
            Sector::GA1 => {
                for k in 0..p {
                    let c = QuadElem::from_cyc(tower.zeta_p_pow(-k * i)?) * &inv_p_sqrt_p;
                    img.add_term(d.enc(DualKind::GamB, k - j, k), &c);
                }
            }
        }
    }
    Ok((fwd, inv))
}

/// Transports the transpose-dual of `h` onto the s/t/γ/γB basis and
/// compares every structure table against [`build_h_dual_tables`].
pub fn dual_coincidence(h: &HopfData) -> Result<Report, NikshychError> {
    let tower = h.tower();
    let paper = build_h_dual_tables(tower)?;
    let computed = dual_hopf(h);
    let (fwd, inv) = paper_dual_images(tower)?;
    let transported = change_basis(&computed, paper.labels().to_vec(), &fwd, &inv);
    let mut report = Report::new();
    match tables_diff(&transported, &paper) {
        None => report.push(Check::pass("dual-coincidence/tables")),
        Some(diff) => report.push(Check::fail("dual-coincidence/tables", diff)),
    }
    Ok(report.finalize())
}
