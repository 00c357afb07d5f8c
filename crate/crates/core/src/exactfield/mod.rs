//! Exact arithmetic in the tower Q ⊂ Q(ζ_m) ⊂ Q(ζ_m)(t), t² = r.
//!
//! Elements of the base cyclotomic field are kept reduced in the power
//! basis {ζ_m^i : 0 ≤ i < φ(m)}, with arbitrary-precision rational
//! coordinates. Since Z[ζ_m] is the full ring of integers of Q(ζ_m),
//! integrality of a [`CycElem`] is a coordinate check; integrality of a
//! [`QuadElem`] a + b·t is decided by its characteristic polynomial
//! x² − 2a·x + (a² − b²r), which is exact for quadratic extensions.

mod cyclo;
mod literal;
mod quad;

use std::sync::Arc;

use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

pub use cyclo::CycElem;
pub use literal::{parse_cyc, parse_scalar};
pub use quad::QuadElem;

/// Arbitrary-precision rational scalar.
pub type Rat = BigRational;
/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Shared handle to a [`FieldTower`].
pub type Tower = Arc<FieldTower>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("unsupported tower: {0}")]
    UnsupportedTower(String),
    #[error("tower has no quadratic radicand")]
    MissingRadicand,
    #[error("incompatible towers (conductor or radicand mismatch)")]
    IncompatibleTowers,
    #[error("parse error: {0}")]
    Parse(String),
}

/// The scalar context: conductor m of the base cyclotomic field, an
/// optional odd prime p | m singled out for ζ_p and √p, and an optional
/// radicand r defining the quadratic extension t² = r.
pub struct FieldTower {
    m: u32,
    p: Option<u32>,
    phi: usize,
    /// Monic minimal polynomial Φ_m of ζ_m, coefficients ascending.
    min_poly: Vec<Int>,
    /// Coordinates of the radicand r in the power basis, if present.
    radicand: Option<Vec<Rat>>,
}

impl std::fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldTower")
            .field("m", &self.m)
            .field("p", &self.p)
            .field("radicand", &self.radicand.is_some())
            .finish()
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldTower {
    fn build(m: u32, p: Option<u32>, radicand: Option<Vec<Rat>>) -> Result<Tower, FieldError> {
        if m == 0 {
            return Err(FieldError::UnsupportedTower("conductor must be >= 1".into()));
        }
        if let Some(p) = p {
            if !is_prime(p) || p == 2 {
                return Err(FieldError::UnsupportedTower(format!("p = {p} is not an odd prime")));
            }
            if m % p != 0 {
                return Err(FieldError::UnsupportedTower(format!("p = {p} does not divide m = {m}")));
            }
        }
        let min_poly = cyclo::cyclotomic_poly(m);
        let phi = min_poly.len() - 1;
        if let Some(r) = &radicand {
            if r.len() != phi || r.iter().all(Zero::is_zero) {
                return Err(FieldError::UnsupportedTower("radicand must be a nonzero element".into()));
            }
        }
        Ok(Arc::new(FieldTower { m, p, phi, min_poly, radicand }))
    }

    /// Base cyclotomic field Q(ζ_m) with no distinguished prime.
    pub fn cyclotomic(m: u32) -> Result<Tower, FieldError> {
        Self::build(m, None, None)
    }

    /// Q(ζ_m) with a distinguished odd prime p | m.
    pub fn with_prime(m: u32, p: u32) -> Result<Tower, FieldError> {
        Self::build(m, Some(p), None)
    }

    /// The standard tower for a given odd prime: m = lcm(4, p), so that
    /// both ω and √p are available.
    pub fn for_prime(p: u32) -> Result<Tower, FieldError> {
        Self::build(4 * p, Some(p), None)
    }

    /// Extends `base` by t with t² = r. The radicand is read in `base`'s
    /// power basis.
    pub fn extend(base: &Tower, r: &CycElem) -> Result<Tower, FieldError> {
        if r.tower().m != base.m {
            return Err(FieldError::IncompatibleTowers);
        }
        Self::build(base.m, base.p, Some(r.coeffs().to_vec()))
    }

    /// The tower Q(ζ_{4p})(π) with π² = ζ_p − 1.
    pub fn with_pi(p: u32) -> Result<Tower, FieldError> {
        let base = Self::for_prime(p)?;
        let r = base.zeta_p()? - base.one_cyc();
        Self::extend(&base, &r)
    }

    pub fn modulus(&self) -> u32 {
        self.m
    }

    pub fn prime(&self) -> Option<u32> {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    /// Degree of the tower over Q: φ(m), doubled when a radicand is present.
    pub fn absolute_degree(&self) -> usize {
        if self.radicand.is_some() {
            2 * self.phi
        } else {
            self.phi
        }
    }

    pub fn has_radicand(&self) -> bool {
        self.radicand.is_some()
    }

    pub fn min_poly(&self) -> &[Int] {
        &self.min_poly
    }

    pub fn same_base(&self, other: &FieldTower) -> bool {
        self.m == other.m
    }

    pub fn same_tower(&self, other: &FieldTower) -> bool {
        self.m == other.m && self.radicand == other.radicand
    }
}

/// Element constructors. All take `&Tower` so the produced elements share
/// the context handle.
pub trait TowerElems {
    fn zero_cyc(&self) -> CycElem;
    fn one_cyc(&self) -> CycElem;
    fn cyc_from_rat(&self, c: Rat) -> CycElem;
    fn cyc_from_int(&self, n: i64) -> CycElem;
    /// Reduces an arbitrary coefficient list (power i ↦ coefficient)
    /// modulo Φ_m into the power basis.
    fn reduce(&self, coeffs: &[Rat]) -> CycElem;
    /// Re-tags an element of the same base field with this tower's handle
    /// (e.g. moving base-field data into a quadratic extension).
    fn lift(&self, x: &CycElem) -> CycElem;
    /// ζ_m.
    fn zeta(&self) -> CycElem;
    /// ζ_m^k for any integer k.
    fn zeta_pow(&self, k: i64) -> CycElem;
    /// ζ_p = ζ_m^{m/p}.
    fn zeta_p(&self) -> Result<CycElem, FieldError>;
    /// ζ_p^k for any integer k.
    fn zeta_p_pow(&self, k: i64) -> Result<CycElem, FieldError>;
    /// ω = ζ_m^{m/4}; requires 4 | m.
    fn omega(&self) -> Result<CycElem, FieldError>;
    /// A square root of p built from the quadratic Gauss sum, corrected
    /// by ω when p ≡ 3 (mod 4). Requires 4 | m and p | m.
    fn sqrt_p(&self) -> Result<CycElem, FieldError>;
    /// The quadratic generator t.
    fn gen_t(&self) -> Result<QuadElem, FieldError>;
    /// The radicand r with t² = r.
    fn radicand_elem(&self) -> Result<CycElem, FieldError>;
    fn zero(&self) -> QuadElem;
    fn one(&self) -> QuadElem;
    fn scalar_from_int(&self, n: i64) -> QuadElem;
    fn scalar_from_rat(&self, c: Rat) -> QuadElem;
    /// The Z-basis {ζ^a t^b} of the tower's integer ring O = Z[ζ_m][t],
    /// in flattening order.
    fn int_basis(&self) -> Vec<QuadElem>;
    /// Coordinates of a scalar against the Q-basis {ζ^a t^b}: first the
    /// base-field part, then (when a radicand is present) the t-part.
    fn flatten(&self, x: &QuadElem) -> Vec<Rat>;
    fn unflatten(&self, v: &[Rat]) -> QuadElem;
}

impl TowerElems for Tower {
    fn zero_cyc(&self) -> CycElem {
        CycElem::from_reduced(self.clone(), vec![Rat::zero(); self.phi])
    }

    fn one_cyc(&self) -> CycElem {
        self.cyc_from_rat(Rat::one())
    }

    fn cyc_from_rat(&self, c: Rat) -> CycElem {
        let mut coeffs = vec![Rat::zero(); self.phi];
        coeffs[0] = c;
        CycElem::from_reduced(self.clone(), coeffs)
    }

    fn cyc_from_int(&self, n: i64) -> CycElem {
        self.cyc_from_rat(Rat::from_integer(Int::from(n)))
    }

    fn reduce(&self, coeffs: &[Rat]) -> CycElem {
        CycElem::reduce(self.clone(), coeffs)
    }

    fn lift(&self, x: &CycElem) -> CycElem {
        assert_eq!(x.tower().modulus(), self.m, "lift requires the same conductor");
        CycElem::from_reduced(self.clone(), x.coeffs().to_vec())
    }

    fn zeta(&self) -> CycElem {
        self.zeta_pow(1)
    }

    fn zeta_pow(&self, k: i64) -> CycElem {
        let m = self.m as i64;
        let k = k.rem_euclid(m) as usize;
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = Rat::one();
        CycElem::reduce(self.clone(), &coeffs)
    }

    fn zeta_p(&self) -> Result<CycElem, FieldError> {
        self.zeta_p_pow(1)
    }

    fn zeta_p_pow(&self, k: i64) -> Result<CycElem, FieldError> {
        let p = self.p.ok_or_else(|| FieldError::UnsupportedTower("no distinguished prime".into()))?;
        Ok(self.zeta_pow((self.m / p) as i64 * k.rem_euclid(p as i64)))
    }

    fn omega(&self) -> Result<CycElem, FieldError> {
        if self.m % 4 != 0 {
            return Err(FieldError::UnsupportedTower("omega needs 4 | m".into()));
        }
        Ok(self.zeta_pow((self.m / 4) as i64))
    }

    fn sqrt_p(&self) -> Result<CycElem, FieldError> {
        let p = self.p.ok_or_else(|| FieldError::UnsupportedTower("no distinguished prime".into()))?;
        if self.m % 4 != 0 {
            return Err(FieldError::UnsupportedTower("sqrt(p) needs 4 | m".into()));
        }
        // Quadratic Gauss sum g = Σ_k ζ_p^{k²}; g² = p when p ≡ 1 (mod 4)
        // and g² = −p when p ≡ 3 (mod 4), where −1 = ω².
        let mut g = self.zero_cyc();
        for k in 0..p as i64 {
            g = &g + &self.zeta_p_pow(k * k)?;
        }
        if p % 4 == 1 {
            Ok(g)
        } else {
            Ok(-&(&self.omega()? * &g))
        }
    }

    fn gen_t(&self) -> Result<QuadElem, FieldError> {
        if self.radicand.is_none() {
            return Err(FieldError::MissingRadicand);
        }
        Ok(QuadElem::new(self.zero_cyc(), self.one_cyc()))
    }

    fn radicand_elem(&self) -> Result<CycElem, FieldError> {
        match &self.radicand {
            Some(r) => Ok(CycElem::from_reduced(self.clone(), r.clone())),
            None => Err(FieldError::MissingRadicand),
        }
    }

    fn zero(&self) -> QuadElem {
        QuadElem::from_cyc(self.zero_cyc())
    }

    fn one(&self) -> QuadElem {
        QuadElem::from_cyc(self.one_cyc())
    }

    fn scalar_from_int(&self, n: i64) -> QuadElem {
        QuadElem::from_cyc(self.cyc_from_int(n))
    }

    fn scalar_from_rat(&self, c: Rat) -> QuadElem {
        QuadElem::from_cyc(self.cyc_from_rat(c))
    }

    fn int_basis(&self) -> Vec<QuadElem> {
        let mut out = Vec::with_capacity(self.absolute_degree());
        for a in 0..self.phi {
            out.push(QuadElem::from_cyc(self.zeta_pow(a as i64)));
        }
        if self.radicand.is_some() {
            for a in 0..self.phi {
                out.push(QuadElem::new(self.zero_cyc(), self.zeta_pow(a as i64)));
            }
        }
        out
    }

    fn flatten(&self, x: &QuadElem) -> Vec<Rat> {
        let mut v: Vec<Rat> = x.base().coeffs().to_vec();
        if self.radicand.is_some() {
            v.extend(x.t_coeff().coeffs().iter().cloned());
        } else {
            assert!(x.t_coeff().is_zero(), "t-part on a tower without radicand");
        }
        v
    }

    fn unflatten(&self, v: &[Rat]) -> QuadElem {
        assert_eq!(v.len(), self.absolute_degree());
        let a = CycElem::from_reduced(self.clone(), v[..self.phi].to_vec());
        let b = if self.radicand.is_some() {
            CycElem::from_reduced(self.clone(), v[self.phi..].to_vec())
        } else {
            self.zero_cyc()
        };
        QuadElem::new(a, b)
    }
}

/// Z-module generators of the integral closure of Z[ζ_m] in the quadratic
/// extension: the basis {ζ^a t^b} together with every element ½(c + d·t)
/// integral by the characteristic-polynomial criterion. Any such element
/// has c, d integral with d odd; the condition only depends on c, d
/// modulo 2, and for a fixed d at most one residue c can work (the
/// difference of two witnesses would be a half-integer of the base
/// field), so the search over residue representatives is exhaustive and
/// the output is small. Requires an integral radicand.
pub fn integral_closure_generators(tower: &Tower) -> Result<Vec<QuadElem>, FieldError> {
    let mut gens = tower.int_basis();
    if tower.radicand.is_none() {
        return Ok(gens);
    }
    let r = tower.radicand_elem()?;
    if !r.is_integral() {
        return Err(FieldError::UnsupportedTower("radicand must be integral".into()));
    }
    let phi = tower.degree();
    assert!(phi <= 20, "residue search is exponential in the degree");
    let total = 1usize << phi;
    let mask_elem = |mask: usize| -> CycElem {
        let coeffs: Vec<Rat> = (0..phi)
            .map(|i| if mask >> i & 1 == 1 { Rat::one() } else { Rat::zero() })
            .collect();
        CycElem::from_reduced(tower.clone(), coeffs)
    };
    let half = Rat::new(Int::from(1), Int::from(2));
    let quarter = &half * &half;
    let squares: Vec<CycElem> = (0..total)
        .map(|m| {
            let c = mask_elem(m);
            &c * &c
        })
        .collect();
    for dmask in 1..total {
        let d2r = &squares[dmask] * &r;
        for cmask in 0..total {
            if (&squares[cmask] - &d2r).scale(&quarter).is_integral() {
                let w = QuadElem::new(
                    mask_elem(cmask).scale(&half),
                    mask_elem(dmask).scale(&half),
                );
                debug_assert!(w.is_integral());
                gens.push(w);
                break;
            }
        }
    }
    Ok(gens)
}

/// Whether Z[ζ_m][t] is already the full integral closure.
pub fn quad_int_ring_is_maximal(tower: &Tower) -> Result<bool, FieldError> {
    Ok(integral_closure_generators(tower)?.len() == tower.absolute_degree())
}

/// `true` iff u is a unit of the integer ring: u and u⁻¹ both integral.
pub fn is_unit(u: &QuadElem) -> bool {
    if u.is_zero() {
        return false;
    }
    match u.inv() {
        Ok(inv) => u.is_integral() && inv.is_integral(),
        Err(_) => false,
    }
}

/// `true` iff (a) = (b) as principal fractional ideals, i.e. a/b is a unit.
pub fn same_ideal(a: &QuadElem, b: &QuadElem) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    is_unit(&(a / b))
}
