//! Hopf orders over the tower's ring of integers: free-basis order
//! lattices, the order verification suite, integrals, dual orders, and
//! the arithmetic conditions attached to them.
//!
//! Integrality of coefficients is decided by the characteristic
//! polynomial criterion of the scalar tower, i.e. membership in the
//! integral closure of Z[ζ_m] in the tower field.

mod larson;
mod unique;

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use thiserror::Error;

use crate::exactfield::{
    integral_closure_generators, is_unit, same_ideal, FieldError, QuadElem, Rat, Tower, TowerElems,
};
use crate::exactlinalg::{FieldMatrix, IntLattice, LinalgError, LuFactors, QMatrix};
use crate::hopfcore::{Check, HopfData, HopfElem, HopfError, Report, TensorElem};

pub use larson::{group_algebra_cp, larson_order};
pub use unique::{closed_form_integral, forced_elements, intersection_with_group_part, nikshych_order};

/// A Z-basis of the coefficient ring O (the integral closure of Z[ζ_m]
/// in the tower field), with the change of coordinates that makes
/// integrality a Z-condition: x ∈ O ⟺ `flatten(x)` is an integer vector.
pub struct RingBasis {
    tower: Tower,
    elems: Vec<QuadElem>,
    to_ring: QMatrix,
}

pub fn ring_basis(tower: &Tower) -> Result<RingBasis, OrderError> {
    let gens = integral_closure_generators(tower)?;
    let e = tower.absolute_degree();
    let rows: Vec<Vec<Rat>> = gens.iter().map(|g| tower.flatten(g)).collect();
    let lat = IntLattice::from_rational_rows(e, &rows);
    if lat.rank() != e {
        return Err(OrderError::PreconditionViolated("integer ring basis is not of full rank".into()));
    }
    let elems: Vec<QuadElem> = lat.rational_basis().iter().map(|r| tower.unflatten(r)).collect();
    let mut cols = QMatrix::zero(e, e);
    for (j, el) in elems.iter().enumerate() {
        for (i, v) in tower.flatten(el).iter().enumerate() {
            cols.set(i, j, v.clone());
        }
    }
    let to_ring = cols.inverse()?;
    Ok(RingBasis { tower: tower.clone(), elems, to_ring })
}

impl RingBasis {
    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn elems(&self) -> &[QuadElem] {
        &self.elems
    }

    pub fn degree(&self) -> usize {
        self.elems.len()
    }

    /// Ring coordinates of a scalar.
    pub fn flatten(&self, x: &QuadElem) -> Vec<Rat> {
        let v = self.tower.flatten(x);
        (0..self.degree())
            .map(|i| {
                let mut acc = Rat::from(num::BigInt::from(0));
                for (j, c) in v.iter().enumerate() {
                    let t = self.to_ring.get(i, j);
                    if !num::Zero::is_zero(t) && !num::Zero::is_zero(c) {
                        acc = &acc + &(t * c);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn unflatten(&self, v: &[Rat]) -> QuadElem {
        assert_eq!(v.len(), self.degree());
        let mut acc = self.tower.zero();
        for (c, el) in v.iter().zip(&self.elems) {
            if !num::Zero::is_zero(c) {
                acc = &acc + &el.scale(c);
            }
        }
        acc
    }

    /// Agrees with the characteristic-polynomial integrality test.
    pub fn contains(&self, x: &QuadElem) -> bool {
        self.flatten(x).iter().all(Rat::is_integer)
    }
}

#[derive(Debug, Error)]
pub enum OrderError {
    #[error("field error: {0}")]
    Field(#[from] FieldError),
    #[error("linear algebra error: {0}")]
    Linalg(#[from] LinalgError),
    #[error("hopf error: {0}")]
    Hopf(#[from] HopfError),
    #[error("ambient Hopf data is not verified")]
    AmbientNotVerified,
    #[error("order has not passed verify_hopf_order")]
    OrderNotVerified,
    #[error("containment violated: ζ_p − 1 does not lie in the ideal")]
    ContainmentViolation,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("not principal: {0}")]
    NonPrincipal(String),
}

/// A principal (fractional) ideal (α), optionally inverted: J = (α)⁻¹.
#[derive(Debug, Clone)]
pub struct IdealSpec {
    generator: QuadElem,
    inverted: bool,
}

impl IdealSpec {
    pub fn principal(generator: QuadElem) -> Result<Self, OrderError> {
        if generator.is_zero() {
            return Err(OrderError::PreconditionViolated("zero ideal generator".into()));
        }
        Ok(IdealSpec { generator, inverted: false })
    }

    pub fn inverse_of(generator: QuadElem) -> Result<Self, OrderError> {
        if generator.is_zero() {
            return Err(OrderError::PreconditionViolated("zero ideal generator".into()));
        }
        Ok(IdealSpec { generator, inverted: true })
    }

    /// The effective generator (α or α⁻¹).
    pub fn generator(&self) -> Result<QuadElem, OrderError> {
        if self.inverted {
            Ok(self.generator.inv()?)
        } else {
            Ok(self.generator.clone())
        }
    }
}

/// An order of a Hopf algebra, stored as a free module over the tower's
/// integer ring with an explicit basis (the main representation; flattened
/// Z-lattices are derived on demand).
pub struct OrderLattice {
    ambient: Arc<HopfData>,
    basis: Vec<HopfElem>,
    lu: OnceLock<LuFactors>,
    verified: OnceLock<bool>,
}

impl OrderLattice {
    pub fn from_free_basis(ambient: Arc<HopfData>, basis: Vec<HopfElem>) -> Result<Self, OrderError> {
        if basis.len() != ambient.dim() {
            return Err(OrderError::PreconditionViolated(format!(
                "free basis has {} elements, ambient dimension is {}",
                basis.len(),
                ambient.dim()
            )));
        }
        Ok(OrderLattice { ambient, basis, lu: OnceLock::new(), verified: OnceLock::new() })
    }

    pub fn ambient(&self) -> &Arc<HopfData> {
        &self.ambient
    }

    pub fn basis(&self) -> &[HopfElem] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_verified(&self) -> bool {
        *self.verified.get().unwrap_or(&false)
    }

    fn basis_matrix(&self) -> FieldMatrix {
        let dim = self.ambient.dim();
        let mut m = FieldMatrix::zero(self.ambient.tower(), dim, dim);
        for (col, b) in self.basis.iter().enumerate() {
            for (&row, c) in b.terms() {
                m.set(row as usize, col, c.clone());
            }
        }
        m
    }

    /// LU factors of the basis matrix; the order spans H over the field
    /// iff this succeeds.
    pub fn lu(&self) -> Result<&LuFactors, OrderError> {
        if let Some(lu) = self.lu.get() {
            return Ok(lu);
        }
        let lu = self.basis_matrix().lu()?;
        Ok(self.lu.get_or_init(|| lu))
    }

    /// Coordinates of an element in the free basis.
    pub fn coords(&self, x: &HopfElem) -> Result<Vec<QuadElem>, OrderError> {
        Ok(self.lu()?.solve(&self.ambient.elem_to_vec(x)))
    }

    /// Membership: all free-basis coordinates integral.
    pub fn contains(&self, x: &HopfElem) -> Result<bool, OrderError> {
        Ok(self.coords(x)?.iter().all(QuadElem::is_integral))
    }

    /// Coordinates of a tensor in the basis⊗basis expansion.
    pub fn tensor_coords(&self, t: &TensorElem) -> Result<TensorElem, OrderError> {
        let lu = self.lu()?;
        let dim = self.ambient.dim();
        let tower = self.ambient.tower();
        // first leg: group by second index
        let mut cols: BTreeMap<u32, Vec<QuadElem>> = BTreeMap::new();
        for (&(s, t2), c) in t.terms() {
            cols.entry(t2).or_insert_with(|| vec![tower.zero(); dim])[s as usize] = c.clone();
        }
        let mut mid = TensorElem::zero();
        for (t2, col) in cols {
            let w = lu.solve(&col);
            for (k, c) in w.iter().enumerate() {
                if !c.is_zero() {
                    mid.add_term(k as u32, t2, c);
                }
            }
        }
        // second leg: group by (already converted) first index
        let mut rows: BTreeMap<u32, Vec<QuadElem>> = BTreeMap::new();
        for (&(k, t2), c) in mid.terms() {
            rows.entry(k).or_insert_with(|| vec![tower.zero(); dim])[t2 as usize] = c.clone();
        }
        let mut out = TensorElem::zero();
        for (k, row) in rows {
            let w = lu.solve(&row);
            for (l, c) in w.iter().enumerate() {
                if !c.is_zero() {
                    out.add_term(k, l as u32, c);
                }
            }
        }
        Ok(out)
    }

    pub fn contains_tensor(&self, t: &TensorElem) -> Result<bool, OrderError> {
        Ok(self.tensor_coords(t)?.terms().all(|(_, c)| c.is_integral()))
    }

    /// Basis listing in the ambient pretty-print grammar.
    pub fn export_text(&self) -> String {
        let mut out = String::new();
        for (i, b) in self.basis.iter().enumerate() {
            out.push_str(&format!("basis {i} {}\n", self.ambient.format_elem(b)));
        }
        out
    }

    /// The order as a Z-lattice in ring-flattened ambient coordinates:
    /// the Z-span of θ·b_i over the integer-ring basis θ of `ring`.
    pub fn flatten_z_lattice(&self, ring: &RingBasis) -> IntLattice {
        let e = ring.degree();
        let dim = self.ambient.dim();
        let mut rows = Vec::with_capacity(dim * e);
        for b in &self.basis {
            for theta in ring.elems() {
                let scaled = b.scaled(theta);
                rows.push(flatten_elem(&self.ambient, ring, &scaled));
            }
        }
        IntLattice::from_rational_rows(dim * e, &rows)
    }
}

/// Ring-flattened coordinates of an element: ambient coordinates, each
/// expanded in ring coordinates, so integrality is entrywise.
pub fn flatten_elem(h: &HopfData, ring: &RingBasis, x: &HopfElem) -> Vec<Rat> {
    let e = ring.degree();
    let mut v = vec![Rat::from(num::BigInt::from(0)); h.dim() * e];
    for (&s, c) in x.terms() {
        let flat = ring.flatten(c);
        v[s as usize * e..(s as usize + 1) * e].clone_from_slice(&flat);
    }
    v
}

pub fn unflatten_elem(h: &HopfData, ring: &RingBasis, v: &[Rat]) -> HopfElem {
    let e = ring.degree();
    assert_eq!(v.len(), h.dim() * e);
    let mut out = HopfElem::zero();
    for s in 0..h.dim() {
        let c = ring.unflatten(&v[s * e..(s + 1) * e]);
        out.add_term(s as u32, &c);
    }
    out
}

/// The full Hopf-order verification suite: spanning, 1 ∈ X, closure of
/// multiplication, Δ(X) ⊆ X⊗X, ε(X) integral, S(X) ⊆ X. All checks are
/// exact; failures carry element witnesses.
pub fn verify_hopf_order(x: &OrderLattice) -> Result<Report, OrderError> {
    let h = x.ambient();
    if !h.is_verified() {
        return Err(OrderError::AmbientNotVerified);
    }
    let mut report = Report::new();
    let dim = h.dim() as u32;

    report.push(match x.lu() {
        Ok(_) => Check::pass("order/01-spans"),
        Err(_) => Check::fail("order/01-spans", "basis does not span the ambient algebra"),
    });
    if x.lu().is_err() {
        return Ok(report.finalize());
    }

    report.push(if x.contains(h.unit())? {
        Check::pass("order/02-contains-one")
    } else {
        Check::fail("order/02-contains-one", h.format_elem(h.unit()))
    });

    let mult_failures: Vec<String> = (0..dim)
        .into_par_iter()
        .map(|i| {
            let mut fails = Vec::new();
            for j in 0..dim {
                let prod = h.multiply(&x.basis[i as usize], &x.basis[j as usize]);
                if !x.contains(&prod).unwrap() {
                    fails.push(format!("b{i}·b{j} = {}", h.format_elem(&prod)));
                    if fails.len() >= 3 {
                        break;
                    }
                }
            }
            fails
        })
        .flatten()
        .collect();
    report.push(aggregate("order/03-multiplication-closed", dim as usize * dim as usize, mult_failures));

    let comult_failures: Vec<String> = (0..dim)
        .into_par_iter()
        .map(|i| {
            let delta = h.comultiply(&x.basis[i as usize]);
            if !x.contains_tensor(&delta).unwrap() {
                vec![format!("Delta(b{i}) has a non-integral tensor coordinate")]
            } else {
                Vec::new()
            }
        })
        .flatten()
        .collect();
    report.push(aggregate("order/04-comultiplication-closed", dim as usize, comult_failures));

    let mut counit_failures = Vec::new();
    for i in 0..dim {
        let e = h.counit_of(&x.basis[i as usize]);
        if !e.is_integral() {
            counit_failures.push(format!("eps(b{i}) = {e}"));
        }
    }
    report.push(aggregate("order/05-counit-integral", dim as usize, counit_failures));

    let antipode_failures: Vec<String> = (0..dim)
        .into_par_iter()
        .map(|i| {
            let s = h.antipode_of(&x.basis[i as usize]);
            if !x.contains(&s).unwrap() {
                vec![format!("S(b{i}) = {}", h.format_elem(&s))]
            } else {
                Vec::new()
            }
        })
        .flatten()
        .collect();
    report.push(aggregate("order/06-antipode-closed", dim as usize, antipode_failures));

    let report = report.finalize();
    if report.all_passed() {
        let _ = x.verified.set(true);
    }
    Ok(report)
}

fn aggregate(id: &str, total: usize, failures: Vec<String>) -> Check {
    if failures.is_empty() {
        Check::pass(format!("{id} ({total} checks)"))
    } else {
        let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
        Check::fail(format!("{id} ({total} checks)"), format!("{} failures, first: {}", failures.len(), shown.join(" | ")))
    }
}

/// The module of left integrals of an order: the one-dimensional integral
/// space of the ambient algebra intersected with the order, returned as a
/// principal module with its ε-image.
pub struct IntegralModule {
    pub generator: HopfElem,
    pub eps_image: QuadElem,
}

/// Solves x·λ = ε(x)·λ over the ambient field (one-dimensional for the
/// semisimple instances here), then finds the principal generator of
/// {c : c·λ ∈ X}.
pub fn integrals(x: &OrderLattice) -> Result<IntegralModule, OrderError> {
    if !x.is_verified() {
        return Err(OrderError::OrderNotVerified);
    }
    let h = x.ambient();
    let lambda = ambient_integral(h)?;
    let coords = x.coords(&lambda)?;
    let gen_scale = principal_bound(&coords)?;
    let generator = lambda.scaled(&gen_scale);
    // sanity: it is an integral and lies in the order
    debug_assert!(x.contains(&generator)?);
    let eps_image = h.counit_of(&generator);
    Ok(IntegralModule { generator, eps_image })
}

/// A generator of the (one-dimensional) space of left integrals of the
/// ambient Hopf algebra, normalized so its first nonzero coordinate is 1.
pub fn ambient_integral(h: &HopfData) -> Result<HopfElem, OrderError> {
    let tower = h.tower();
    let dim = h.dim();
    // kernel of the stacked conditions (L_b − ε(b))λ = 0, refined one
    // basis element at a time
    let mut space: Vec<HopfElem> = (0..dim as u32).map(|i| h.basis_elem(i)).collect();
    for i in 0..dim as u32 {
        if space.is_empty() {
            break;
        }
        let b = h.basis_elem(i);
        let eps = h.counit_entry(i).clone();
        // images (b·v − ε(b)v) for current spanning set v
        let images: Vec<HopfElem> = space
            .iter()
            .map(|v| h.multiply(&b, v).sub(&v.scaled(&eps)))
            .collect();
        // kernel of the coefficient matrix of `images`
        let k = space.len();
        let mut m = FieldMatrix::zero(tower, dim, k);
        for (col, im) in images.iter().enumerate() {
            for (&row, c) in im.terms() {
                m.set(row as usize, col, c.clone());
            }
        }
        let kernel = field_kernel(&m);
        space = kernel
            .iter()
            .map(|coeffs| {
                let mut acc = HopfElem::zero();
                for (v, c) in space.iter().zip(coeffs) {
                    acc.add_scaled(v, c);
                }
                acc
            })
            .collect();
    }
    if space.len() != 1 {
        return Err(OrderError::NonPrincipal(format!(
            "integral space has dimension {}, expected 1",
            space.len()
        )));
    }
    let lambda = space.pop().unwrap();
    // normalize: first coordinate in the support becomes 1
    let (_, c0) = lambda.terms().next().expect("integral is nonzero");
    Ok(lambda.scaled(&c0.inv()?))
}

/// Kernel basis of a field matrix (columns of the kernel as coefficient
/// vectors).
fn field_kernel(m: &FieldMatrix) -> Vec<Vec<QuadElem>> {
    let tower = m.tower().clone();
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut a = m.clone();
    let mut pivots: Vec<Option<usize>> = vec![None; cols];
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        for j in 0..cols {
            let x = a.get(rank, j).clone();
            let y = a.get(pr, j).clone();
            a.set(rank, j, y);
            a.set(pr, j, x);
        }
        let pinv = a.get(rank, col).inv().expect("pivot nonzero");
        for j in 0..cols {
            let v = a.get(rank, j) * &pinv;
            a.set(rank, j, v);
        }
        for r in 0..rows {
            if r == rank || a.get(r, col).is_zero() {
                continue;
            }
            let f = a.get(r, col).clone();
            for j in 0..cols {
                let v = a.get(rank, j);
                if !v.is_zero() {
                    let w = a.get(r, j) - &(&f * v);
                    a.set(r, j, w);
                }
            }
        }
        pivots[col] = Some(rank);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    let mut kernel = Vec::new();
    for free in 0..cols {
        if pivots[free].is_some() {
            continue;
        }
        let mut v = vec![tower.zero(); cols];
        v[free] = tower.one();
        for (col, piv) in pivots.iter().enumerate() {
            if let Some(r) = piv {
                v[col] = -a.get(*r, free);
            }
        }
        kernel.push(v);
    }
    kernel
}

/// Find j with v_j ≠ 0 and v_k / v_j integral for all k; returns 1/v_j.
/// This is the principal generator of {c : c·v integral}, when one exists.
fn principal_bound(coords: &[QuadElem]) -> Result<QuadElem, OrderError> {
    let nonzero: Vec<&QuadElem> = coords.iter().filter(|c| !c.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(OrderError::NonPrincipal("zero coordinate vector".into()));
    }
    for cand in &nonzero {
        let inv = cand.inv()?;
        if nonzero.iter().all(|c| (*c * &inv).is_integral()) {
            return Ok(inv);
        }
    }
    Err(OrderError::NonPrincipal("no coordinate divides all others".into()))
}

/// The dual order X* = {φ : φ(X) ⊆ O} of a free order: free over O with
/// the dual basis, expressed on the transpose-dual of the ambient.
pub fn dual_order(x: &OrderLattice) -> Result<OrderLattice, OrderError> {
    if !x.is_verified() {
        return Err(OrderError::OrderNotVerified);
    }
    let h = x.ambient();
    let dim = h.dim();
    let dual_ambient = Arc::new(crate::hopfcore::dual_hopf(h));
    let lu = x.lu()?;
    // rows of M⁻¹ are the dual basis vectors
    let tower = h.tower();
    let mut inv_cols: Vec<Vec<QuadElem>> = Vec::with_capacity(dim);
    for j in 0..dim {
        let mut e = vec![tower.zero(); dim];
        e[j] = tower.one();
        inv_cols.push(lu.solve(&e));
    }
    let mut dual_basis = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut f = HopfElem::zero();
        for (j, col) in inv_cols.iter().enumerate() {
            f.add_term(j as u32, &col[i]);
        }
        dual_basis.push(f);
    }
    OrderLattice::from_free_basis(dual_ambient, dual_basis)
}

/// ε(Λ_X)·ε(Λ_{X*}) must equal (dim H) as principal ideals. Verifies the
/// dual order first so its integrals are defined. Returns the two ε-image
/// generators along with the verdict.
pub fn larson_product_check(x: &OrderLattice) -> Result<(bool, QuadElem, QuadElem), OrderError> {
    let ix = integrals(x)?;
    let dual = dual_order(x)?;
    let dual_report = verify_hopf_order(&dual)?;
    if !dual_report.all_passed() {
        return Err(OrderError::PreconditionViolated(
            "dual order failed verification".into(),
        ));
    }
    let idual = integrals(&dual)?;
    let product = &ix.eps_image * &idual.eps_image;
    let dim = x.ambient().tower().scalar_from_int(x.ambient().dim() as i64);
    Ok((same_ideal(&product, &dim), ix.eps_image, idual.eps_image))
}

/// The condition for an order of the full algebra to exist:
/// (α)^{2(p−1)} = (p), i.e. α^{2(p−1)}/p is a unit.
pub fn check_ideal_condition(tower: &Tower, alpha: &IdealSpec) -> Result<bool, OrderError> {
    let p = tower
        .prime()
        .ok_or_else(|| OrderError::PreconditionViolated("tower has no distinguished prime".into()))?
        as i64;
    let a = alpha.generator()?;
    let val = &a.pow(2 * (p - 1))? / &tower.scalar_from_int(p);
    Ok(is_unit(&val))
}

/// Given z, e ∈ X with ze = ez = z and π⁻¹(z − e) ∈ X, the geometric sum
/// (1/√p) Σ_{i<p} z^i (with z⁰ = e) lies in X; computes it and asserts
/// the membership.
pub fn geometric_series_member(
    x: &OrderLattice,
    z: &HopfElem,
    e: &HopfElem,
) -> Result<HopfElem, OrderError> {
    let h = x.ambient();
    let tower = h.tower();
    let p = tower
        .prime()
        .ok_or_else(|| OrderError::PreconditionViolated("tower has no distinguished prime".into()))?;
    if h.multiply(z, e) != *z || h.multiply(e, z) != *z {
        return Err(OrderError::PreconditionViolated("ze = ez = z fails".into()));
    }
    let pi = tower.gen_t()?;
    let scaled = z.sub(e).scaled(&pi.inv()?);
    if !x.contains(&scaled)? {
        return Err(OrderError::PreconditionViolated("π⁻¹(z − e) is not in the order".into()));
    }
    let inv_sqrt_p = QuadElem::from_cyc(tower.sqrt_p()?.inv()?);
    let mut sum = e.clone();
    let mut power = e.clone();
    for _ in 1..p {
        power = h.multiply(&power, z);
        sum = sum.add(&power);
    }
    let result = sum.scaled(&inv_sqrt_p);
    if !x.contains(&result)? {
        return Err(OrderError::PreconditionViolated(
            "geometric series is not a member; hypothesis violated".into(),
        ));
    }
    Ok(result)
}

/// Monotonicity helper: every basis vector of `inner` lies in `outer`.
pub fn order_contains_order(outer: &OrderLattice, inner: &OrderLattice) -> Result<bool, OrderError> {
    for b in inner.basis() {
        if !outer.contains(b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Cross-check of the free-basis dual against the dual computed purely
/// as a Z-lattice: a functional φ = Σ y_{(s,a)} θ_a e_s^* lies in X* iff
/// every ring coordinate of every φ(b_i) is an integer, which is an
/// integral-preimage lattice in the flattened coordinates. Intended for
/// small ambients.
pub fn dual_order_lattice_crosscheck(x: &OrderLattice, ring: &RingBasis) -> Result<bool, OrderError> {
    let h = x.ambient();
    let e = ring.degree();
    let dim = h.dim();
    let n = dim * e;
    let mut rows = vec![vec![Rat::from(num::BigInt::from(0)); n]; n];
    for (i, b) in x.basis().iter().enumerate() {
        for (&s, bs) in b.terms() {
            for (a, theta) in ring.elems().iter().enumerate() {
                let prod = ring.flatten(&(theta * bs));
                for (c, val) in prod.iter().enumerate() {
                    let cell = &mut rows[i * e + c][s as usize * e + a];
                    *cell = &*cell + val;
                }
            }
        }
    }
    let pre = IntLattice::integral_preimage(&QMatrix::from_rows(rows))?;
    let dual = dual_order(x)?;
    Ok(pre == dual.flatten_z_lattice(ring))
}

#[cfg(test)]
mod tests;
