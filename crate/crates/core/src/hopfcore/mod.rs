//! Finite-dimensional Hopf algebras given by sparse structure constants,
//! with exact evaluation and a zero-tolerance axiom verification suite.

mod dual;
mod elem;
pub mod report;
mod textio;
mod verify;

use std::sync::atomic::{AtomicBool, Ordering};

use thiserror::Error;

use crate::exactfield::{FieldError, QuadElem, Tower, TowerElems};
use crate::exactlinalg::LinalgError;

pub use dual::{change_basis, dual_hopf, HopfMap};
pub use elem::{Character, HopfElem, TensorElem};
pub use report::{Check, Report, Status};
pub use textio::{export_string, import_string};
pub use verify::{verify_hopf_axioms, VerifyOptions};

#[derive(Debug, Error)]
pub enum HopfError {
    #[error("field error: {0}")]
    Field(#[from] FieldError),
    #[error("linear algebra error: {0}")]
    Linalg(#[from] LinalgError),
    #[error("malformed data: {0}")]
    BadFormat(String),
    #[error("hopf data is not verified")]
    NotVerified,
}

/// Which tensor leg a functional is applied to in [`HopfData::convolve`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A finite-dimensional Hopf algebra presented by structure constants:
/// basis labels, unit, and total multiplication/comultiplication/counit/
/// antipode tables. Immutable after construction; the `verified` flag is
/// set only by a full pass of [`verify_hopf_axioms`].
pub struct HopfData {
    tower: Tower,
    labels: Vec<String>,
    unit: HopfElem,
    /// mult[i * dim + j] = b_i · b_j
    mult: Vec<HopfElem>,
    comult: Vec<TensorElem>,
    counit: Vec<QuadElem>,
    antipode: Vec<HopfElem>,
    verified: AtomicBool,
}

impl HopfData {
    pub fn new(
        tower: Tower,
        labels: Vec<String>,
        unit: HopfElem,
        mult: Vec<HopfElem>,
        comult: Vec<TensorElem>,
        counit: Vec<QuadElem>,
        antipode: Vec<HopfElem>,
    ) -> Self {
        let dim = labels.len();
        assert_eq!(mult.len(), dim * dim, "multiplication table must be total");
        assert_eq!(comult.len(), dim, "comultiplication table must be total");
        assert_eq!(counit.len(), dim, "counit table must be total");
        assert_eq!(antipode.len(), dim, "antipode table must be total");
        assert!(
            labels.iter().all(|l| !l.chars().any(char::is_whitespace)),
            "labels must not contain whitespace"
        );
        HopfData { tower, labels, unit, mult, comult, counit, antipode, verified: AtomicBool::new(false) }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: u32) -> &str {
        &self.labels[i as usize]
    }

    pub fn unit(&self) -> &HopfElem {
        &self.unit
    }

    pub fn is_verified(&self) -> bool {
        self.verified.load(Ordering::Relaxed)
    }

    pub(crate) fn set_verified(&self) {
        self.verified.store(true, Ordering::Relaxed);
    }

    /// Marks the tables as verified without running the axiom suite. For
    /// instances whose construction path is covered by the suite at
    /// smaller parameters but are too large for the full O(dim³) run;
    /// use deliberately.
    pub fn assume_verified(&self) {
        self.set_verified();
    }

    pub fn basis_elem(&self, i: u32) -> HopfElem {
        HopfElem::single(i, self.tower.one())
    }

    pub fn mult_entry(&self, i: u32, j: u32) -> &HopfElem {
        &self.mult[i as usize * self.dim() + j as usize]
    }

    pub fn comult_entry(&self, i: u32) -> &TensorElem {
        &self.comult[i as usize]
    }

    pub fn counit_entry(&self, i: u32) -> &QuadElem {
        &self.counit[i as usize]
    }

    pub fn antipode_entry(&self, i: u32) -> &HopfElem {
        &self.antipode[i as usize]
    }

    /// Bilinear extension of the multiplication table.
    pub fn multiply(&self, x: &HopfElem, y: &HopfElem) -> HopfElem {
        let mut acc = HopfElem::zero();
        for (&s, cs) in x.terms() {
            for (&t, ct) in y.terms() {
                let entry = self.mult_entry(s, t);
                if entry.is_zero() {
                    continue;
                }
                let c = cs * ct;
                acc.add_scaled(entry, &c);
            }
        }
        acc
    }

    /// Linear extension of the comultiplication table.
    pub fn comultiply(&self, x: &HopfElem) -> TensorElem {
        let mut acc = TensorElem::zero();
        for (&s, cs) in x.terms() {
            acc.add_scaled(self.comult_entry(s), cs);
        }
        acc
    }

    pub fn counit_of(&self, x: &HopfElem) -> QuadElem {
        let mut acc = self.tower.zero();
        for (&s, cs) in x.terms() {
            let e = self.counit_entry(s);
            if !e.is_zero() {
                acc = &acc + &(cs * e);
            }
        }
        acc
    }

    pub fn antipode_of(&self, x: &HopfElem) -> HopfElem {
        let mut acc = HopfElem::zero();
        for (&s, cs) in x.terms() {
            acc.add_scaled(self.antipode_entry(s), cs);
        }
        acc
    }

    /// Componentwise product in H⊗H; with `second_factor_opposite` the
    /// second legs are multiplied in reverse order (product in H⊗H^op).
    /// Accumulates densely: the quadratic number of term pairs dominates
    /// the axiom suite.
    pub fn tensor_multiply(&self, s: &TensorElem, u: &TensorElem, second_factor_opposite: bool) -> TensorElem {
        let dim = self.dim();
        let mut acc: Vec<Option<QuadElem>> = vec![None; dim * dim];
        let mut touched: Vec<usize> = Vec::new();
        for (&(a1, b1), c1) in s.terms() {
            for (&(a2, b2), c2) in u.terms() {
                let first = self.mult_entry(a1, a2);
                if first.is_zero() {
                    continue;
                }
                let second = if second_factor_opposite {
                    self.mult_entry(b2, b1)
                } else {
                    self.mult_entry(b1, b2)
                };
                if second.is_zero() {
                    continue;
                }
                let c = c1 * c2;
                for (&r1, w1) in first.terms() {
                    let cw1 = if w1.is_one() { c.clone() } else { &c * w1 };
                    for (&r2, w2) in second.terms() {
                        let contrib = if w2.is_one() { cw1.clone() } else { &cw1 * w2 };
                        let idx = r1 as usize * dim + r2 as usize;
                        match &mut acc[idx] {
                            Some(v) => v.add_assign_elem(&contrib),
                            slot @ None => {
                                *slot = Some(contrib);
                                touched.push(idx);
                            }
                        }
                    }
                }
            }
        }
        touched.sort_unstable();
        let mut out = TensorElem::zero();
        for idx in touched {
            if let Some(v) = acc[idx].take() {
                if !v.is_zero() {
                    out.add_term((idx / dim) as u32, (idx % dim) as u32, &v);
                }
            }
        }
        out
    }

    /// Applies a functional to one tensor leg of Δ(x).
    pub fn convolve(&self, f: &Character, x: &HopfElem, side: Side) -> HopfElem {
        let delta = self.comultiply(x);
        let mut acc = HopfElem::zero();
        for (&(s, t), c) in delta.terms() {
            let (probe, keep) = match side {
                Side::Left => (s, t),
                Side::Right => (t, s),
            };
            if let Some(fs) = f.coeff(probe) {
                acc.add_term(keep, &(c * fs));
            }
        }
        acc
    }

    /// Image of an element under a linear map given by basis images.
    pub fn apply_linear(&self, images: &[HopfElem], x: &HopfElem) -> HopfElem {
        let mut acc = HopfElem::zero();
        for (&s, cs) in x.terms() {
            acc.add_scaled(&images[s as usize], cs);
        }
        acc
    }

    /// Both tensor legs through a linear map.
    pub fn apply_linear_tensor(&self, images: &[HopfElem], t: &TensorElem) -> TensorElem {
        let mut acc = TensorElem::zero();
        for (&(a, b), c) in t.terms() {
            for (&ia, ca) in images[a as usize].terms() {
                let cca = c * ca;
                for (&ib, cb) in images[b as usize].terms() {
                    acc.add_term(ia, ib, &(&cca * cb));
                }
            }
        }
        acc
    }

    pub fn elem_to_vec(&self, x: &HopfElem) -> Vec<QuadElem> {
        let mut v = vec![self.tower.zero(); self.dim()];
        for (&s, c) in x.terms() {
            v[s as usize] = c.clone();
        }
        v
    }

    pub fn vec_to_elem(&self, v: &[QuadElem]) -> HopfElem {
        let mut acc = HopfElem::zero();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                acc.add_term(i as u32, c);
            }
        }
        acc
    }

    /// Pretty-prints an element as `(scalar)*label` terms.
    pub fn format_elem(&self, x: &HopfElem) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (&s, c) in x.terms() {
            parts.push(format!("({})*{}", c, self.label(s)));
        }
        parts.join(" + ")
    }

    pub fn format_tensor(&self, t: &TensorElem) -> String {
        if t.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (&(a, b), c) in t.terms() {
            parts.push(format!("({})*{}(x){}", c, self.label(a), self.label(b)));
        }
        parts.join(" + ")
    }
}

impl std::fmt::Debug for HopfData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HopfData")
            .field("dim", &self.dim())
            .field("m", &self.tower.modulus())
            .field("verified", &self.is_verified())
            .finish()
    }
}

/// Entrywise comparison of all structure tables (labels ignored).
/// Returns a description of the first difference, or None when equal.
pub fn tables_diff(a: &HopfData, b: &HopfData) -> Option<String> {
    if a.dim() != b.dim() {
        return Some(format!("dimension mismatch: {} vs {}", a.dim(), b.dim()));
    }
    let dim = a.dim() as u32;
    if a.unit != b.unit {
        return Some("units differ".to_string());
    }
    for i in 0..dim {
        for j in 0..dim {
            if a.mult_entry(i, j) != b.mult_entry(i, j) {
                return Some(format!(
                    "mult({}, {}): {} vs {}",
                    a.label(i),
                    a.label(j),
                    a.format_elem(a.mult_entry(i, j)),
                    b.format_elem(b.mult_entry(i, j))
                ));
            }
        }
    }
    for i in 0..dim {
        if a.comult_entry(i) != b.comult_entry(i) {
            return Some(format!("comult({}) differs", a.label(i)));
        }
        if a.counit_entry(i) != b.counit_entry(i) {
            return Some(format!("counit({}) differs", a.label(i)));
        }
        if a.antipode_entry(i) != b.antipode_entry(i) {
            return Some(format!("antipode({}) differs", a.label(i)));
        }
    }
    None
}

#[cfg(test)]
mod tests;
