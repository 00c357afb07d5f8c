//! The base cyclotomic field: Φ_m, reduction, and `CycElem` arithmetic.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::{FieldError, Int, Rat, Tower};

/// Computes the m-th cyclotomic polynomial (monic, integer coefficients,
/// ascending order) by exact division: Φ_d = (x^d − 1) / Π_{e|d, e<d} Φ_e,
/// for the divisors d of m in ascending order.
pub(super) fn cyclotomic_poly(m: u32) -> Vec<Int> {
    assert!(m >= 1);
    let mut known: Vec<(u32, Vec<Int>)> = Vec::new();
    for d in 1..=m {
        if m % d != 0 {
            continue;
        }
        // x^d - 1
        let mut phi_d = vec![Int::zero(); d as usize + 1];
        phi_d[0] = -Int::one();
        phi_d[d as usize] = Int::one();
        for (e, phi_e) in &known {
            if d % e == 0 {
                phi_d = int_poly_div_exact(&phi_d, phi_e);
            }
        }
        known.push((d, phi_d));
    }
    known.pop().unwrap().1
}

/// Exact division of integer polynomials; the divisor is monic and the
/// remainder is known to be zero for cyclotomic factors.
fn int_poly_div_exact(num: &[Int], den: &[Int]) -> Vec<Int> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let mut quot = vec![Int::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&c * d);
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

/// An element of Q(ζ_m), reduced in the power basis {ζ_m^i : 0 ≤ i < φ(m)}.
#[derive(Clone)]
pub struct CycElem {
    tower: Tower,
    coeffs: Vec<Rat>,
}

impl CycElem {
    pub(super) fn from_reduced(tower: Tower, coeffs: Vec<Rat>) -> Self {
        debug_assert_eq!(coeffs.len(), tower.phi);
        CycElem { tower, coeffs }
    }

    /// Reduces an arbitrary coefficient list modulo Φ_m by long division
    /// from the top degree down (Φ_m is monic).
    pub(super) fn reduce(tower: Tower, coeffs: &[Rat]) -> Self {
        let phi = tower.phi;
        let mut work = coeffs.to_vec();
        if work.len() < phi {
            work.resize(phi, Rat::zero());
        }
        let mut i = work.len();
        while i > phi {
            i -= 1;
            let c = std::mem::replace(&mut work[i], Rat::zero());
            if c.is_zero() {
                continue;
            }
            // x^i = x^(i-φ) · (−c_0 − c_1 x − ... − c_{φ−1} x^{φ−1})
            for (j, w) in tower.min_poly[..phi].iter().enumerate() {
                if !w.is_zero() {
                    let idx = i - phi + j;
                    work[idx] = &work[idx] - &(&c * w);
                }
            }
        }
        work.truncate(phi);
        CycElem { tower, coeffs: work }
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// All power-basis coordinates are integers. Valid as an integrality
    /// test because Z[ζ_m] is the full ring of integers of Q(ζ_m).
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rat::is_integer)
    }

    /// Returns the rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_compat(&self, other: &Self) {
        assert!(
            self.tower.same_base(&other.tower),
            "cyclotomic elements from different conductors: {} vs {}",
            self.tower.m,
            other.tower.m
        );
    }

    /// In-place addition, avoiding reallocation of the coefficient vector.
    pub fn add_assign_elem(&mut self, other: &Self) {
        self.check_compat(other);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return CycElem::from_reduced(self.tower.clone(), vec![Rat::zero(); self.tower.phi]);
        }
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        CycElem::from_reduced(self.tower.clone(), coeffs)
    }

    pub fn mul_elem(&self, other: &Self) -> Self {
        self.check_compat(other);
        let phi = self.tower.phi;
        let mut acc = vec![Rat::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc[i + j] = &acc[i + j] + &(a * b);
            }
        }
        CycElem::reduce(self.tower.clone(), &acc)
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        // Extended Euclid in Q[x] against the irreducible Φ_m.
        let modulus: Vec<Rat> = self
            .tower
            .min_poly
            .iter()
            .map(|c| Rat::from_integer(c.clone()))
            .collect();
        let inv = poly_modular_inverse(&self.coeffs, &modulus).ok_or(FieldError::NotInvertible)?;
        Ok(CycElem::reduce(self.tower.clone(), &inv))
    }

    pub fn pow(&self, k: i64) -> Result<Self, FieldError> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut result = {
            let mut coeffs = vec![Rat::zero(); self.tower.phi];
            coeffs[0] = Rat::one();
            CycElem::from_reduced(self.tower.clone(), coeffs)
        };
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_elem(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_elem(&base);
            }
        }
        Ok(result)
    }

    /// Largest absolute value among numerators/denominators, for
    /// diagnostics on coefficient growth.
    pub fn height(&self) -> Int {
        let mut h = Int::zero();
        for c in &self.coeffs {
            let n = c.numer().abs();
            let d = c.denom().abs();
            if n > h {
                h = n;
            }
            if d > h {
                h = d;
            }
        }
        h
    }
}

impl PartialEq for CycElem {
    fn eq(&self, other: &Self) -> bool {
        self.tower.same_base(&other.tower) && self.coeffs == other.coeffs
    }
}
impl Eq for CycElem {}

impl std::fmt::Debug for CycElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CycElem({})", self)
    }
}

impl std::fmt::Display for CycElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&super::literal::print_cyc(self))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:expr, $t:ty) => {
        impl $trait<&$t> for &$t {
            type Output = $t;
            fn $method(self, rhs: &$t) -> $t {
                let f: fn(&$t, &$t) -> $t = $imp;
                f(self, rhs)
            }
        }
        impl $trait<$t> for $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&$t> for $t {
            type Output = $t;
            fn $method(self, rhs: &$t) -> $t {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<$t> for &$t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                $trait::$method(self, &rhs)
            }
        }
    };
}
pub(super) use forward_binop;

forward_binop!(
    Add,
    add,
    |a: &CycElem, b: &CycElem| {
        a.check_compat(b);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        CycElem::from_reduced(a.tower.clone(), coeffs)
    },
    CycElem
);

forward_binop!(
    Sub,
    sub,
    |a: &CycElem, b: &CycElem| {
        a.check_compat(b);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        CycElem::from_reduced(a.tower.clone(), coeffs)
    },
    CycElem
);

forward_binop!(Mul, mul, |a: &CycElem, b: &CycElem| a.mul_elem(b), CycElem);

forward_binop!(
    Div,
    div,
    |a: &CycElem, b: &CycElem| { a.mul_elem(&b.inv().expect("division by a non-invertible element")) },
    CycElem
);

impl Neg for &CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        CycElem::from_reduced(self.tower.clone(), coeffs)
    }
}
impl Neg for CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        -&self
    }
}

// ---- dense rational polynomial helpers (for the inverse only) ----

fn poly_trim(p: &mut Vec<Rat>) {
    while p.len() > 1 && p.last().map(Zero::is_zero).unwrap_or(false) {
        p.pop();
    }
}

fn poly_is_zero(p: &[Rat]) -> bool {
    p.iter().all(Zero::is_zero)
}

fn poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut rem = num.to_vec();
    poly_trim(&mut rem);
    let mut den = den.to_vec();
    poly_trim(&mut den);
    assert!(!poly_is_zero(&den));
    let dd = den.len() - 1;
    if dd == 0 {
        let q: Vec<Rat> = rem.iter().map(|c| c / &den[0]).collect();
        return (q, vec![Rat::zero()]);
    }
    if rem.len() <= dd {
        return (vec![Rat::zero()], rem);
    }
    let mut quot = vec![Rat::zero(); rem.len() - dd];
    for k in (0..rem.len() - dd).rev() {
        let c = &rem[k + dd] / &den[dd];
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&c * d);
            }
        }
        quot[k] = c;
    }
    poly_trim(&mut rem);
    (quot, rem)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] = out[i].clone() + x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] = out[i].clone() - y;
    }
    poly_trim(&mut out);
    out
}

/// Inverse of `a` modulo the irreducible `modulus` via the extended
/// Euclidean algorithm. Maintains s_i·a ≡ r_i (mod modulus).
fn poly_modular_inverse(a: &[Rat], modulus: &[Rat]) -> Option<Vec<Rat>> {
    let mut r0 = modulus.to_vec();
    let mut r1 = a.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    let mut s0 = vec![Rat::zero()];
    let mut s1 = vec![Rat::one()];
    while !poly_is_zero(&r1) {
        let (q, r2) = poly_divmod(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if r0.len() != 1 || r0[0].is_zero() {
        return None;
    }
    let c = r0[0].clone();
    Some(s0.iter().map(|x| x / &c).collect())
}
