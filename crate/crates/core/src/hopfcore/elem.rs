//! Sparse elements of H, H⊗H, and H*.

use std::collections::BTreeMap;

use crate::exactfield::{QuadElem, Tower, TowerElems};

/// Sparse linear combination of basis labels. No explicit zeros are stored,
/// so equality is map equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HopfElem {
    terms: BTreeMap<u32, QuadElem>,
}

impl HopfElem {
    pub fn zero() -> Self {
        HopfElem { terms: BTreeMap::new() }
    }

    pub fn single(i: u32, c: QuadElem) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(i, c);
        }
        HopfElem { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u32, &QuadElem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32) -> Option<&QuadElem> {
        self.terms.get(&i)
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().copied()
    }

    pub fn add_term(&mut self, i: u32, c: &QuadElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(i) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &HopfElem, c: &QuadElem) {
        if c.is_zero() {
            return;
        }
        if c.is_one() {
            for (&i, v) in &other.terms {
                self.add_term(i, v);
            }
        } else {
            for (&i, v) in &other.terms {
                self.add_term(i, &(c * v));
            }
        }
    }

    pub fn add(&self, other: &HopfElem) -> HopfElem {
        let mut out = self.clone();
        for (&i, v) in &other.terms {
            out.add_term(i, v);
        }
        out
    }

    pub fn sub(&self, other: &HopfElem) -> HopfElem {
        let mut out = self.clone();
        for (&i, v) in &other.terms {
            out.add_term(i, &-v);
        }
        out
    }

    pub fn neg(&self) -> HopfElem {
        HopfElem { terms: self.terms.iter().map(|(&i, v)| (i, -v)).collect() }
    }

    pub fn scaled(&self, c: &QuadElem) -> HopfElem {
        let mut out = HopfElem::zero();
        out.add_scaled(self, c);
        out
    }

    /// Applies a scalar map to every coefficient (used for semilinear maps).
    pub fn map_scalars(&self, f: impl Fn(&QuadElem) -> QuadElem) -> HopfElem {
        let mut out = HopfElem::zero();
        for (&i, v) in &self.terms {
            out.add_term(i, &f(v));
        }
        out
    }
}

impl std::fmt::Debug for HopfElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(i, c)| format!("({c})*b{i}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Sparse element of H⊗H.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorElem {
    terms: BTreeMap<(u32, u32), QuadElem>,
}

impl TensorElem {
    pub fn zero() -> Self {
        TensorElem { terms: BTreeMap::new() }
    }

    pub fn single(i: u32, j: u32, c: QuadElem) -> Self {
        let mut t = TensorElem::zero();
        t.add_term(i, j, &c);
        t
    }

    /// x ⊗ y for sparse elements.
    pub fn product(x: &HopfElem, y: &HopfElem) -> Self {
        let mut t = TensorElem::zero();
        for (&i, a) in x.terms() {
            for (&j, b) in y.terms() {
                t.add_term(i, j, &(a * b));
            }
        }
        t
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &QuadElem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Option<&QuadElem> {
        self.terms.get(&(i, j))
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: &QuadElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((i, j)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElem, c: &QuadElem) {
        if c.is_zero() {
            return;
        }
        if c.is_one() {
            for (&(i, j), v) in &other.terms {
                self.add_term(i, j, v);
            }
        } else {
            for (&(i, j), v) in &other.terms {
                self.add_term(i, j, &(c * v));
            }
        }
    }

    pub fn sub(&self, other: &TensorElem) -> TensorElem {
        let mut out = self.clone();
        for (&(i, j), v) in &other.terms {
            out.add_term(i, j, &-v);
        }
        out
    }

    pub fn scaled(&self, c: &QuadElem) -> TensorElem {
        let mut out = TensorElem::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn swap_legs(&self) -> TensorElem {
        let mut out = TensorElem::zero();
        for (&(i, j), v) in &self.terms {
            out.add_term(j, i, v);
        }
        out
    }

    pub fn map_scalars(&self, f: impl Fn(&QuadElem) -> QuadElem) -> TensorElem {
        let mut out = TensorElem::zero();
        for (&(i, j), v) in &self.terms {
            out.add_term(i, j, &f(v));
        }
        out
    }
}

impl std::fmt::Debug for TensorElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|((i, j), c)| format!("({c})*b{i}(x)b{j}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// A linear functional on a `HopfData`, stored sparsely against the dual
/// basis. Coordinates coincide with those of an element of the dual Hopf
/// algebra.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Character {
    coeffs: HopfElem,
}

impl Character {
    pub fn from_elem(coeffs: HopfElem) -> Self {
        Character { coeffs }
    }

    pub fn as_elem(&self) -> &HopfElem {
        &self.coeffs
    }

    pub fn into_elem(self) -> HopfElem {
        self.coeffs
    }

    pub fn coeff(&self, i: u32) -> Option<&QuadElem> {
        self.coeffs.coeff(i)
    }

    /// Bilinear pairing with an element.
    pub fn eval(&self, tower: &Tower, x: &HopfElem) -> QuadElem {
        let mut acc = tower.zero();
        for (&i, c) in x.terms() {
            if let Some(f) = self.coeffs.coeff(i) {
                acc = &acc + &(c * f);
            }
        }
        acc
    }
}
