//! Elements a + b·t of the quadratic extension, t² = r.

use std::ops::{Add, Div, Mul, Neg, Sub};

use super::cyclo::forward_binop;
use super::{CycElem, FieldError, Rat, Tower, TowerElems};

/// a + b·t with a, b in the base cyclotomic field. When the tower carries
/// no radicand, b must stay zero; arithmetic never needs r in that case.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadElem {
    a: CycElem,
    b: CycElem,
}

impl QuadElem {
    pub fn new(a: CycElem, b: CycElem) -> Self {
        assert!(a.tower().same_base(b.tower()), "mismatched parts");
        QuadElem { a, b }
    }

    pub fn from_cyc(a: CycElem) -> Self {
        let b = a.tower().zero_cyc();
        QuadElem { a, b }
    }

    pub fn tower(&self) -> &Tower {
        self.a.tower()
    }

    /// Base-field part.
    pub fn base(&self) -> &CycElem {
        &self.a
    }

    /// Coefficient of t.
    pub fn t_coeff(&self) -> &CycElem {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn as_cyc(&self) -> Option<&CycElem> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn as_rational(&self) -> Option<Rat> {
        self.as_cyc().and_then(CycElem::as_rational)
    }

    fn radicand(&self) -> CycElem {
        self.tower()
            .radicand_elem()
            .expect("operation requires a quadratic radicand")
    }

    /// In-place addition.
    pub fn add_assign_elem(&mut self, other: &Self) {
        self.a.add_assign_elem(&other.a);
        self.b.add_assign_elem(&other.b);
    }

    /// Galois conjugation γ: a + b·t ↦ a − b·t.
    pub fn galois_conjugate(&self) -> Self {
        QuadElem { a: self.a.clone(), b: -&self.b }
    }

    /// Trace to the base field: 2a.
    pub fn trace(&self) -> CycElem {
        &self.a + &self.a
    }

    /// Norm to the base field: a² − b²·r.
    pub fn norm(&self) -> CycElem {
        if self.b.is_zero() {
            return &self.a * &self.a;
        }
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * &self.radicand())
    }

    /// Integral over Z[ζ_m]: for b = 0 a coordinate check, otherwise both
    /// coefficients of the monic characteristic polynomial
    /// x² − 2a·x + (a² − b²r) must be integral.
    pub fn is_integral(&self) -> bool {
        if self.b.is_zero() {
            return self.a.is_integral();
        }
        self.trace().is_integral() && self.norm().is_integral()
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.b.is_zero() {
            return Ok(QuadElem { a: self.a.inv()?, b: self.b.clone() });
        }
        let n = self.norm();
        if n.is_zero() {
            // r is a square in the base field; a + bt is a zero divisor.
            return Err(FieldError::NotInvertible);
        }
        let ninv = n.inv()?;
        Ok(QuadElem { a: &self.a * &ninv, b: -&(&self.b * &ninv) })
    }

    pub fn pow(&self, k: i64) -> Result<Self, FieldError> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut result = self.tower().one();
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        QuadElem { a: self.a.scale(c), b: self.b.scale(c) }
    }

    pub fn mul_cyc(&self, c: &CycElem) -> Self {
        QuadElem { a: &self.a * c, b: &self.b * c }
    }
}

impl From<CycElem> for QuadElem {
    fn from(a: CycElem) -> Self {
        QuadElem::from_cyc(a)
    }
}

forward_binop!(
    Add,
    add,
    |x: &QuadElem, y: &QuadElem| QuadElem { a: &x.a + &y.a, b: &x.b + &y.b },
    QuadElem
);

forward_binop!(
    Sub,
    sub,
    |x: &QuadElem, y: &QuadElem| QuadElem { a: &x.a - &y.a, b: &x.b - &y.b },
    QuadElem
);

forward_binop!(
    Mul,
    mul,
    |x: &QuadElem, y: &QuadElem| {
        // (a + bt)(c + dt) = (ac + bd·r) + (ad + bc)t
        let ac = &x.a * &y.a;
        if x.b.is_zero() && y.b.is_zero() {
            return QuadElem { b: x.a.tower().zero_cyc(), a: ac };
        }
        let bd = &x.b * &y.b;
        let a = if bd.is_zero() { ac } else { &ac + &(&bd * &x.radicand()) };
        let b = &(&x.a * &y.b) + &(&x.b * &y.a);
        QuadElem { a, b }
    },
    QuadElem
);

forward_binop!(
    Div,
    div,
    |x: &QuadElem, y: &QuadElem| { x * &y.inv().expect("division by a non-invertible element") },
    QuadElem
);

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem { a: -&self.a, b: -&self.b }
    }
}
impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        -&self
    }
}

impl std::fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QuadElem({})", self)
    }
}

impl std::fmt::Display for QuadElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&super::literal::print_scalar(self))
    }
}
