//! The 4p²-dimensional self-dual Hopf algebra family H_p: as an algebra
//! the crossed product (K(C_p×C_p) ⊕ K^c(C_p×C_p)) ∗ KC₂, where c is the
//! 2-cocycle (a^i b^j, a^k b^l) ↦ ζ^{−jk}. The group part A₀ is generated
//! by u_a, u_b, the twisted part A₁ by v_a, v_b with v_a v_b = ζ v_b v_a,
//! and the order-two element g swaps u_a ↔ u_b and fixes v_a, v_b. The
//! comultiplication of g is (g⊗g)Ω for the explicit invertible Ω ∈ A⊗A
//! assembled in [`omega`].

mod autos;
mod dual_tables;
mod reps;
mod self_dual;

use thiserror::Error;

use crate::exactfield::{FieldError, QuadElem, Rat, Tower, TowerElems};
use crate::hopfcore::{Character, HopfData, HopfElem, Side, TensorElem};

pub use autos::hopf_automorphisms;
pub use dual_tables::{
    build_h_dual_tables, dual_coincidence, dual_index, paper_dual_images, DualKind, DualLabel,
};
pub use reps::{characters_h, cocharacters_h, irreps_h, Irrep};
pub use self_dual::self_duality_map;

#[derive(Debug, Error)]
pub enum NikshychError {
    #[error("field error: {0}")]
    Field(#[from] FieldError),
    #[error("tower has no distinguished odd prime")]
    MissingPrime,
    #[error("element is not supported on the twisted sector")]
    InputNotInA1,
}

/// The four sectors of H = A₀ ⊕ A₁ ⊕ gA₀ ⊕ gA₁.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sector {
    A0 = 0,
    A1 = 1,
    GA0 = 2,
    GA1 = 3,
}

impl Sector {
    pub fn from_index(s: u32) -> Sector {
        match s {
            0 => Sector::A0,
            1 => Sector::A1,
            2 => Sector::GA0,
            3 => Sector::GA1,
            _ => panic!("bad sector index {s}"),
        }
    }

    pub fn has_g(self) -> bool {
        matches!(self, Sector::GA0 | Sector::GA1)
    }

    pub fn twisted(self) -> bool {
        matches!(self, Sector::A1 | Sector::GA1)
    }
}

/// Basis label u_a^i u_b^j / v_a^i v_b^j / g·(…): a sector and exponents
/// 0 ≤ i, j < p. There are 4p² labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NikshychLabel {
    pub sector: Sector,
    pub i: u32,
    pub j: u32,
}

impl NikshychLabel {
    pub fn name(&self) -> String {
        let (ga, gb) = if self.sector.twisted() { ("va", "vb") } else { ("ua", "ub") };
        let body = format!("{ga}^{}*{gb}^{}", self.i, self.j);
        if self.sector.has_g() {
            format!("g*{body}")
        } else {
            body
        }
    }
}

/// Exponent-level monomial arithmetic shared by the A and H builders.
#[derive(Debug, Clone, Copy)]
pub struct Monomials {
    p: u32,
}

impl Monomials {
    pub fn new(p: u32) -> Self {
        Monomials { p }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn encode(&self, l: NikshychLabel) -> u32 {
        (l.sector as u32) * self.p * self.p + l.i * self.p + l.j
    }

    pub fn decode(&self, idx: u32) -> NikshychLabel {
        let pp = self.p * self.p;
        NikshychLabel {
            sector: Sector::from_index(idx / pp),
            i: (idx % pp) / self.p,
            j: idx % self.p,
        }
    }

    pub fn enc(&self, sector: Sector, i: i64, j: i64) -> u32 {
        self.encode(NikshychLabel {
            sector,
            i: i.rem_euclid(self.p as i64) as u32,
            j: j.rem_euclid(self.p as i64) as u32,
        })
    }

    /// Conjugation by g: swaps the exponents on A₀, fixes A₁.
    pub fn g_twist(&self, l: NikshychLabel) -> NikshychLabel {
        if l.sector.twisted() {
            l
        } else {
            NikshychLabel { sector: l.sector, i: l.j, j: l.i }
        }
    }

    /// Product of two basis monomials: `None` when it vanishes (mixed
    /// A₀/A₁ sectors), otherwise the resulting label and the power of ζ_p
    /// it carries.
    pub fn product(&self, x: NikshychLabel, y: NikshychLabel) -> Option<(NikshychLabel, i64)> {
        let p = self.p as i64;
        // g^{e1} x1 · g^{e2} x2 = g^{e1+e2} · ĝ^{e2}(x1) · x2
        let x1 = if y.sector.has_g() { self.g_twist(x) } else { x };
        if x1.sector.twisted() != y.sector.twisted() {
            return None;
        }
        let g_out = x.sector.has_g() ^ y.sector.has_g();
        let (i1, j1) = (x1.i as i64, x1.j as i64);
        let (i2, j2) = (y.i as i64, y.j as i64);
        let (i, j) = (i1 + i2, j1 + j2);
        // v_b^{j1} v_a^{i2} = ζ^{−j1·i2} v_a^{i2} v_b^{j1}
        let zexp = if x1.sector.twisted() { (-j1 * i2).rem_euclid(p) } else { 0 };
        let sector = match (g_out, x1.sector.twisted()) {
            (false, false) => Sector::A0,
            (false, true) => Sector::A1,
            (true, false) => Sector::GA0,
            (true, true) => Sector::GA1,
        };
        Some((self.decode(self.enc(sector, i, j)), zexp))
    }

    /// Antipode on basis monomials, as (label, power of ζ_p).
    pub fn antipode(&self, l: NikshychLabel) -> (NikshychLabel, i64) {
        let p = self.p as i64;
        let (i, j) = (l.i as i64, l.j as i64);
        match l.sector {
            Sector::A0 => (self.decode(self.enc(Sector::A0, -i, -j)), 0),
            // S(v_a^i v_b^j) = ζ^{ij} v_a^{−i} v_b^{j}
            Sector::A1 => (self.decode(self.enc(Sector::A1, -i, j)), (i * j).rem_euclid(p)),
            // S(g u_a^i u_b^j) = g u_a^{−j} u_b^{−i}
            Sector::GA0 => (self.decode(self.enc(Sector::GA0, -j, -i)), 0),
            Sector::GA1 => (self.decode(self.enc(Sector::GA1, -i, j)), (i * j).rem_euclid(p)),
        }
    }

    pub fn counit_is_one(&self, l: NikshychLabel) -> bool {
        !l.sector.twisted()
    }
}

/// The four summands of Ω, for targeted mutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaPart {
    A0A0,
    A0A1,
    A1A0,
    A1A1,
}

impl OmegaPart {
    pub const ALL: [OmegaPart; 4] = [OmegaPart::A0A0, OmegaPart::A0A1, OmegaPart::A1A0, OmegaPart::A1A1];

    pub fn parse(s: &str) -> Option<OmegaPart> {
        match s {
            "omega-a0a0" => Some(OmegaPart::A0A0),
            "omega-a0a1" => Some(OmegaPart::A0A1),
            "omega-a1a0" => Some(OmegaPart::A1A0),
            "omega-a1a1" => Some(OmegaPart::A1A1),
            _ => None,
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            OmegaPart::A0A0 => "omega-a0a0",
            OmegaPart::A0A1 => "omega-a0a1",
            OmegaPart::A1A0 => "omega-a1a0",
            OmegaPart::A1A1 => "omega-a1a1",
        }
    }
}

pub(crate) fn require_prime(tower: &Tower) -> Result<u32, NikshychError> {
    tower.prime().ok_or(NikshychError::MissingPrime)
}

/// The twist Ω ∈ A⊗A, keyed by H basis indices. Its four summands:
///
/// ```text
///   (1/p²) Σ ζ^{kj−il} u_a^i u_b^j ⊗ u_a^k u_b^l
/// + (1/p)  Σ ζ^{−(k+l)k} u_a^k u_b^l ⊗ v_a^{k+l} v_b^{k+l}
/// + (1/p)  Σ ζ^{k(k+l)} v_a^{k+l} v_b^{−(k+l)} ⊗ u_a^k u_b^l
/// + (1/p)  Σ v_a^k v_b^l ⊗ v_a^{−l} v_b^k
/// ```
///
/// `mutate` scales the terms of the selected summand by ζ_p, which breaks
/// the cocycle-type identity behind the coassociativity of Δ(g).
pub fn omega_with_mutation(tower: &Tower, mutate: Option<OmegaPart>) -> Result<TensorElem, NikshychError> {
    let p = require_prime(tower)? as i64;
    let mono = Monomials::new(p as u32);
    let inv_p = Rat::new(1.into(), p.into());
    let inv_p2 = &inv_p * &inv_p;
    let bump = |part: OmegaPart| -> i64 { i64::from(mutate == Some(part)) };
    let mut omega = TensorElem::zero();
    // A0 ⊗ A0
    for i in 0..p {
        for j in 0..p {
            for k in 0..p {
                for l in 0..p {
                    let c = tower.zeta_p_pow(k * j - i * l + bump(OmegaPart::A0A0))?.scale(&inv_p2);
                    omega.add_term(mono.enc(Sector::A0, i, j), mono.enc(Sector::A0, k, l), &QuadElem::from_cyc(c));
                }
            }
        }
    }
    // A0 ⊗ A1
    for k in 0..p {
        for l in 0..p {
            let c = tower.zeta_p_pow(-(k + l) * k + bump(OmegaPart::A0A1))?.scale(&inv_p);
            omega.add_term(
                mono.enc(Sector::A0, k, l),
                mono.enc(Sector::A1, k + l, k + l),
                &QuadElem::from_cyc(c),
            );
        }
    }
    // A1 ⊗ A0
    for k in 0..p {
        for l in 0..p {
            let c = tower.zeta_p_pow(k * (k + l) + bump(OmegaPart::A1A0))?.scale(&inv_p);
            omega.add_term(
                mono.enc(Sector::A1, k + l, -(k + l)),
                mono.enc(Sector::A0, k, l),
                &QuadElem::from_cyc(c),
            );
        }
    }
    // A1 ⊗ A1
    for k in 0..p {
        for l in 0..p {
            let c = tower.zeta_p_pow(bump(OmegaPart::A1A1))?.scale(&inv_p);
            omega.add_term(mono.enc(Sector::A1, k, l), mono.enc(Sector::A1, -l, k), &QuadElem::from_cyc(c));
        }
    }
    Ok(omega)
}

/// The twist Ω (no mutation).
pub fn omega(tower: &Tower) -> Result<TensorElem, NikshychError> {
    omega_with_mutation(tower, None)
}

/// Componentwise tensor product where both sides are supported on
/// monomial labels; used during construction, before a `HopfData` exists.
fn tensor_mul_monomials(tower: &Tower, mono: &Monomials, s: &TensorElem, u: &TensorElem) -> TensorElem {
    let mut acc = TensorElem::zero();
    for (&(a1, b1), c1) in s.terms() {
        let (la1, lb1) = (mono.decode(a1), mono.decode(b1));
        for (&(a2, b2), c2) in u.terms() {
            let Some((ra, za)) = mono.product(la1, mono.decode(a2)) else { continue };
            let Some((rb, zb)) = mono.product(lb1, mono.decode(b2)) else { continue };
            let mut c = c1 * c2;
            let zexp = za + zb;
            if zexp % (mono.p as i64) != 0 {
                c = &c * &QuadElem::from_cyc(tower.zeta_p_pow(zexp).expect("prime checked"));
            }
            acc.add_term(mono.encode(ra), mono.encode(rb), &c);
        }
    }
    acc
}

/// Comultiplication of an A-sector monomial:
/// Δ(u_a^i u_b^j) = u_a^i u_b^j ⊗ u_a^i u_b^j + v_a^i v_b^j ⊗ v_a^i v_b^{−j},
/// Δ(v_a^i v_b^j) = u_a^i u_b^j ⊗ v_a^i v_b^j + v_a^i v_b^j ⊗ u_a^i u_b^{−j}.
fn comult_a_monomial(tower: &Tower, mono: &Monomials, l: NikshychLabel) -> TensorElem {
    let one = tower.one();
    let (i, j) = (l.i as i64, l.j as i64);
    let mut t = TensorElem::zero();
    match l.sector {
        Sector::A0 => {
            t.add_term(mono.enc(Sector::A0, i, j), mono.enc(Sector::A0, i, j), &one);
            t.add_term(mono.enc(Sector::A1, i, j), mono.enc(Sector::A1, i, -j), &one);
        }
        Sector::A1 => {
            t.add_term(mono.enc(Sector::A0, i, j), mono.enc(Sector::A1, i, j), &one);
            t.add_term(mono.enc(Sector::A1, i, j), mono.enc(Sector::A0, i, -j), &one);
        }
        _ => panic!("comult_a_monomial expects an A-sector label"),
    }
    t
}

fn build_tables(
    tower: &Tower,
    mono: &Monomials,
    sectors: &[Sector],
    omega: Option<&TensorElem>,
) -> Result<HopfData, NikshychError> {
    let p = mono.p as i64;
    let pp = (mono.p * mono.p) as usize;
    let dim = sectors.len() * pp;
    let one = tower.one();

    let mut labels = Vec::with_capacity(dim);
    for &s in sectors {
        for i in 0..mono.p {
            for j in 0..mono.p {
                labels.push(NikshychLabel { sector: s, i, j }.name());
            }
        }
    }

    let mut unit = HopfElem::zero();
    unit.add_term(mono.enc(Sector::A0, 0, 0), &one);
    unit.add_term(mono.enc(Sector::A1, 0, 0), &one);

    let mut mult = vec![HopfElem::zero(); dim * dim];
    for a in 0..dim as u32 {
        let la = mono.decode(a);
        for b in 0..dim as u32 {
            let lb = mono.decode(b);
            if let Some((lr, zexp)) = mono.product(la, lb) {
                let c = if zexp % p == 0 { one.clone() } else { QuadElem::from_cyc(tower.zeta_p_pow(zexp)?) };
                mult[a as usize * dim + b as usize] = HopfElem::single(mono.encode(lr), c);
            }
        }
    }

    let mut comult = Vec::with_capacity(dim);
    for idx in 0..dim as u32 {
        let l = mono.decode(idx);
        if !l.sector.has_g() {
            comult.push(comult_a_monomial(tower, mono, l));
        } else {
            // Δ(g·x) = (g⊗g)·Ω·Δ_A(x); multiplying by g⊗g on the left just
            // moves both legs into the g sectors, since the legs lie in A.
            let omega = omega.expect("g sector requires omega");
            let x = NikshychLabel {
                sector: if l.sector.twisted() { Sector::A1 } else { Sector::A0 },
                i: l.i,
                j: l.j,
            };
            let da = comult_a_monomial(tower, mono, x);
            let prod = tensor_mul_monomials(tower, mono, omega, &da);
            let mut shifted = TensorElem::zero();
            for (&(s, t), c) in prod.terms() {
                let ls = mono.decode(s);
                let lt = mono.decode(t);
                let gs = NikshychLabel {
                    sector: if ls.sector.twisted() { Sector::GA1 } else { Sector::GA0 },
                    ..ls
                };
                let gt = NikshychLabel {
                    sector: if lt.sector.twisted() { Sector::GA1 } else { Sector::GA0 },
                    ..lt
                };
                shifted.add_term(mono.encode(gs), mono.encode(gt), c);
            }
            comult.push(shifted);
        }
    }

    let counit = (0..dim as u32)
        .map(|idx| if mono.counit_is_one(mono.decode(idx)) { one.clone() } else { tower.zero() })
        .collect();

    let mut antipode = Vec::with_capacity(dim);
    for idx in 0..dim as u32 {
        let (l, zexp) = mono.antipode(mono.decode(idx));
        let c = if zexp % p == 0 { one.clone() } else { QuadElem::from_cyc(tower.zeta_p_pow(zexp)?) };
        antipode.push(HopfElem::single(mono.encode(l), c));
    }

    Ok(HopfData::new(tower.clone(), labels, unit, mult, comult, counit, antipode))
}

/// The 2p²-dimensional Hopf algebra A = A₀ ⊕ A₁ (the index-two Hopf
/// subalgebra of H).
pub fn build_a(tower: &Tower) -> Result<HopfData, NikshychError> {
    let p = require_prime(tower)?;
    let mono = Monomials::new(p);
    build_tables(tower, &mono, &[Sector::A0, Sector::A1], None)
}

/// The full 4p²-dimensional Hopf algebra, with Δ(g) = (g⊗g)Ω and S(g) = g.
pub fn build_h(tower: &Tower) -> Result<HopfData, NikshychError> {
    build_h_with_mutation(tower, None)
}

/// `build_h` with an optional mutation of one Ω summand, used to show the
/// axiom suite catches a corrupted twist.
pub fn build_h_with_mutation(tower: &Tower, mutate: Option<OmegaPart>) -> Result<HopfData, NikshychError> {
    let p = require_prime(tower)?;
    let mono = Monomials::new(p);
    let omega = omega_with_mutation(tower, mutate)?;
    build_tables(tower, &mono, &[Sector::A0, Sector::A1, Sector::GA0, Sector::GA1], Some(&omega))
}

/// The functional B on H: B(g v_a^k v_b^l) = √p·δ_{l,0}, zero elsewhere.
pub fn b_functional(h: &HopfData) -> Result<Character, NikshychError> {
    let p = require_prime(h.tower())?;
    let mono = Monomials::new(p);
    let sqrt_p = QuadElem::from_cyc(h.tower().sqrt_p()?);
    let mut e = HopfElem::zero();
    for k in 0..p as i64 {
        e.add_term(mono.enc(Sector::GA1, k, 0), &sqrt_p);
    }
    Ok(Character::from_elem(e))
}

/// The element g = g·e₀ + g·e₁.
pub fn g_elem(h: &HopfData) -> HopfElem {
    let p = h.tower().prime().expect("prime required");
    let mono = Monomials::new(p);
    let mut g = HopfElem::zero();
    g.add_term(mono.enc(Sector::GA0, 0, 0), &h.tower().one());
    g.add_term(mono.enc(Sector::GA1, 0, 0), &h.tower().one());
    g
}

/// The map T from the twisted sector to gA₀, defined as
/// x ↦ (B ⊗ id)Δ(g·x) and equal in closed form to
/// v_a^i v_b^j ↦ (1/√p) Σ_k ζ^{jk} g u_a^k u_b^{i−k}.
/// Both routes are computed and must agree exactly.
pub fn map_t(h: &HopfData, x: &HopfElem) -> Result<HopfElem, NikshychError> {
    let p = require_prime(h.tower())? as i64;
    let mono = Monomials::new(p as u32);
    for (&idx, _) in x.terms() {
        if mono.decode(idx).sector != Sector::A1 {
            return Err(NikshychError::InputNotInA1);
        }
    }
    // definitional route
    let b = b_functional(h)?;
    let gx = h.multiply(&g_elem(h), x);
    let definitional = h.convolve(&b, &gx, Side::Left);
    // closed form
    let inv_sqrt_p = QuadElem::from_cyc(h.tower().sqrt_p()?.inv()?);
    let mut closed = HopfElem::zero();
    for (&idx, c) in x.terms() {
        let l = mono.decode(idx);
        let (i, j) = (l.i as i64, l.j as i64);
        for k in 0..p {
            let z = QuadElem::from_cyc(h.tower().zeta_p_pow(j * k)?);
            closed.add_term(mono.enc(Sector::GA0, k, i - k), &(&(c * &inv_sqrt_p) * &z));
        }
    }
    assert_eq!(definitional, closed, "closed form and definitional computation of T disagree");
    Ok(closed)
}

#[cfg(test)]
mod tests;
