//! Dual Hopf algebras, basis changes, and linear Hopf map verification.

use crate::exactfield::{QuadElem, TowerElems};
use crate::exactlinalg::FieldMatrix;

use super::{Check, HopfData, HopfElem, Report, TensorElem};

/// The dual Hopf algebra on the dual basis: tables are transposed, so the
/// multiplication of the dual reads off the comultiplication of `h` and
/// vice versa. Applying it twice restores the original tables on the nose.
pub fn dual_hopf(h: &HopfData) -> HopfData {
    let dim = h.dim();
    let tower = h.tower().clone();
    let labels: Vec<String> = h.labels().iter().map(|l| format!("{l}^")).collect();

    // (f_i f_j)(b_k) = <f_i ⊗ f_j, Δ(b_k)>
    let mut mult = vec![HopfElem::zero(); dim * dim];
    for k in 0..dim as u32 {
        for (&(i, j), c) in h.comult_entry(k).terms() {
            mult[i as usize * dim + j as usize].add_term(k, c);
        }
    }

    // Δ*(f_k) = Σ_{i,j} <f_k, b_i b_j> f_i ⊗ f_j
    let mut comult = vec![TensorElem::zero(); dim];
    for i in 0..dim as u32 {
        for j in 0..dim as u32 {
            for (&k, c) in h.mult_entry(i, j).terms() {
                comult[k as usize].add_term(i, j, c);
            }
        }
    }

    // unit of the dual is ε; counit of the dual is evaluation at 1.
    let mut unit = HopfElem::zero();
    for i in 0..dim as u32 {
        unit.add_term(i, h.counit_entry(i));
    }
    let counit: Vec<QuadElem> = (0..dim as u32)
        .map(|i| h.unit().coeff(i).cloned().unwrap_or_else(|| tower.zero()))
        .collect();

    // S*(f_i) = f_i ∘ S
    let mut antipode = vec![HopfElem::zero(); dim];
    for j in 0..dim as u32 {
        for (&i, c) in h.antipode_entry(j).terms() {
            antipode[i as usize].add_term(j, c);
        }
    }

    let out = HopfData::new(tower, labels, unit, mult, comult, counit, antipode);
    if h.is_verified() {
        out.set_verified();
    }
    out
}

/// Rewrites `h` on a new basis. `fwd[i]` is the i-th new basis vector in
/// the old coordinates; `inv[j]` is the j-th old basis vector in the new
/// coordinates. The pair is checked to be mutually inverse.
pub fn change_basis(h: &HopfData, new_labels: Vec<String>, fwd: &[HopfElem], inv: &[HopfElem]) -> HopfData {
    let dim = h.dim();
    assert_eq!(fwd.len(), dim);
    assert_eq!(inv.len(), dim);
    let to_new = |x: &HopfElem| -> HopfElem { h.apply_linear(inv, x) };
    for (i, f) in fwd.iter().enumerate() {
        assert_eq!(
            to_new(f),
            HopfElem::single(i as u32, h.tower().one()),
            "fwd/inv are not mutually inverse at index {i}"
        );
    }
    let mut mult = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            mult.push(to_new(&h.multiply(&fwd[i], &fwd[j])));
        }
    }
    let comult: Vec<TensorElem> = (0..dim)
        .map(|i| h.apply_linear_tensor(inv, &h.comultiply(&fwd[i])))
        .collect();
    let counit: Vec<QuadElem> = (0..dim).map(|i| h.counit_of(&fwd[i])).collect();
    let antipode: Vec<HopfElem> = (0..dim).map(|i| to_new(&h.antipode_of(&fwd[i]))).collect();
    let unit = to_new(h.unit());
    let out = HopfData::new(h.tower().clone(), new_labels, unit, mult, comult, counit, antipode);
    if h.is_verified() {
        out.set_verified();
    }
    out
}

/// A linear map between Hopf algebras given by basis images, with exact
/// verification of the Hopf isomorphism conditions.
pub struct HopfMap<'a> {
    pub src: &'a HopfData,
    pub dst: &'a HopfData,
    pub images: Vec<HopfElem>,
}

impl<'a> HopfMap<'a> {
    pub fn new(src: &'a HopfData, dst: &'a HopfData, images: Vec<HopfElem>) -> Self {
        assert_eq!(images.len(), src.dim());
        assert_eq!(src.dim(), dst.dim());
        HopfMap { src, dst, images }
    }

    pub fn apply(&self, x: &HopfElem) -> HopfElem {
        self.src.apply_linear(&self.images, x)
    }

    pub fn apply_tensor(&self, t: &TensorElem) -> TensorElem {
        self.src.apply_linear_tensor(&self.images, t)
    }

    /// Composition self ∘ other (apply `other` first).
    pub fn compose(&self, other: &HopfMap<'a>) -> HopfMap<'a> {
        let images = other.images.iter().map(|im| self.apply(im)).collect();
        HopfMap { src: other.src, dst: self.dst, images }
    }

    pub fn equals(&self, other: &HopfMap<'_>) -> bool {
        self.images == other.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, im)| *im == HopfElem::single(i as u32, self.src.tower().one()))
    }

    pub fn is_bijective(&self) -> bool {
        let dim = self.src.dim();
        let tower = self.src.tower();
        let mut m = FieldMatrix::zero(tower, dim, dim);
        for (j, im) in self.images.iter().enumerate() {
            for (&i, c) in im.terms() {
                m.set(i as usize, j, c.clone());
            }
        }
        m.rank() == dim
    }

    /// Full Hopf isomorphism check: unit, multiplicativity on all basis
    /// pairs, comultiplicativity, counit, antipode compatibility, and
    /// bijectivity. Check ids are prefixed with `tag`.
    pub fn verify_hopf_iso(&self, tag: &str) -> Report {
        let mut report = Report::new();
        let dim = self.src.dim() as u32;
        let mut fails = Vec::new();
        if self.apply(self.src.unit()) != *self.dst.unit() {
            fails.push("psi(1) != 1".to_string());
        }
        report.push(ok_or(format!("{tag}/01-unit"), fails));

        let mut fails = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let lhs = self.apply(self.src.mult_entry(i, j));
                let rhs = self.dst.multiply(&self.images[i as usize], &self.images[j as usize]);
                if lhs != rhs {
                    fails.push(format!("psi({}*{}) != psi({})psi({})", self.src.label(i), self.src.label(j), self.src.label(i), self.src.label(j)));
                    if fails.len() >= 4 {
                        break;
                    }
                }
            }
            if fails.len() >= 4 {
                break;
            }
        }
        report.push(ok_or(format!("{tag}/02-algebra-map"), fails));

        let mut fails = Vec::new();
        for i in 0..dim {
            let lhs = self.apply_tensor(self.src.comult_entry(i));
            let rhs = self.dst.comultiply(&self.images[i as usize]);
            if lhs != rhs {
                fails.push(format!("(psi(x)psi)Delta({}) != Delta'(psi({}))", self.src.label(i), self.src.label(i)));
            }
        }
        report.push(ok_or(format!("{tag}/03-coalgebra-map"), fails));

        let mut fails = Vec::new();
        for i in 0..dim {
            if self.dst.counit_of(&self.images[i as usize]) != *self.src.counit_entry(i) {
                fails.push(format!("eps'(psi({})) != eps({})", self.src.label(i), self.src.label(i)));
            }
        }
        report.push(ok_or(format!("{tag}/04-counit"), fails));

        let mut fails = Vec::new();
        for i in 0..dim {
            let lhs = self.apply(self.src.antipode_entry(i));
            let rhs = self.dst.antipode_of(&self.images[i as usize]);
            if lhs != rhs {
                fails.push(format!("psi(S({})) != S'(psi({}))", self.src.label(i), self.src.label(i)));
            }
        }
        report.push(ok_or(format!("{tag}/05-antipode"), fails));

        report.push(if self.is_bijective() {
            Check::pass(format!("{tag}/06-bijective"))
        } else {
            Check::fail(format!("{tag}/06-bijective"), "image matrix is singular")
        });
        report.finalize()
    }
}

fn ok_or(id: String, fails: Vec<String>) -> Check {
    if fails.is_empty() {
        Check::pass(id)
    } else {
        Check::fail(id, fails.join(" | "))
    }
}
