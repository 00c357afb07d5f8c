//! Quadratic Galois descent: the semilinear involution σ′ on H over the
//! tower L = K(t), the integrality condition for the descended order, the
//! invariant lattice Y^Γ, and the bundled p = 7, n = 28 instance.

mod data;

use num::Zero;
use thiserror::Error;

use crate::exactfield::{is_unit, CycElem, FieldError, QuadElem, Rat, TowerElems};
use crate::exactlinalg::{fixed_sublattice, IntLattice, LinalgError};
use crate::hopfcore::{Check, HopfData, HopfElem, HopfError, Report, TensorElem};
use crate::nikshych::{Monomials, NikshychError, Sector};
use crate::orders::{flatten_elem, OrderError, OrderLattice, RingBasis};

pub use data::{bundled_denominator, bundled_denominator_literal, bundled_w};

#[derive(Debug, Error)]
pub enum DescentError {
    #[error("field error: {0}")]
    Field(#[from] FieldError),
    #[error("hopf error: {0}")]
    Hopf(#[from] HopfError),
    #[error("order error: {0}")]
    Order(#[from] OrderError),
    #[error("linear algebra error: {0}")]
    Linalg(#[from] LinalgError),
    #[error("nikshych error: {0}")]
    Nikshych(#[from] NikshychError),
    #[error("w is not a unit of the integer ring")]
    NotAUnit,
    #[error("descent condition failed: {0}")]
    ConditionFailed(String),
}

/// Which square the quadratic generator satisfies: t² = w(ζ_p − 1)
/// (`Theorem`), t² = w(1 − ζ_p) (`Example`), or accept either.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConvention {
    Theorem,
    Example,
    Either,
}

impl SignConvention {
    pub fn parse(s: &str) -> Option<SignConvention> {
        match s {
            "paper-theorem" => Some(SignConvention::Theorem),
            "paper-example" => Some(SignConvention::Example),
            "either" => Some(SignConvention::Either),
            _ => None,
        }
    }
}

/// Parameters of a descent instance over Q(ζ_n): an invertible w and an
/// integral d with ½(d + t) integral, under a fixed sign convention.
#[derive(Clone)]
pub struct DescentParams {
    pub n: u32,
    pub p: u32,
    pub w: CycElem,
    pub d: CycElem,
    pub convention: SignConvention,
}

impl DescentParams {
    pub fn new(n: u32, p: u32, w: CycElem, d: CycElem, convention: SignConvention) -> Self {
        DescentParams { n, p, w, d, convention }
    }

    /// The radicand w·(ζ_p − 1) or w·(1 − ζ_p) for a concrete convention.
    pub fn radicand(&self, convention: SignConvention) -> Result<CycElem, DescentError> {
        let tower = self.w.tower();
        let zeta_p = tower.zeta_p()?;
        let factor = match convention {
            SignConvention::Theorem => &zeta_p - &tower.one_cyc(),
            SignConvention::Example => &tower.one_cyc() - &zeta_p,
            SignConvention::Either => {
                return Err(DescentError::ConditionFailed(
                    "a concrete sign convention is required for the radicand".into(),
                ))
            }
        };
        Ok(&self.w * &factor)
    }
}

/// Outcome of the integrality condition under both conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionOutcome {
    pub theorem: bool,
    pub example: bool,
}

impl ConditionOutcome {
    pub fn holds(&self, convention: SignConvention) -> bool {
        match convention {
            SignConvention::Theorem => self.theorem,
            SignConvention::Example => self.example,
            SignConvention::Either => self.theorem || self.example,
        }
    }
}

/// The integrality condition: w invertible in the integer ring, d
/// integral, and (d² − r)/4 integral for r = w(ζ_p−1) resp. w(1−ζ_p) —
/// exactly the characteristic-polynomial integrality of ½(d + t).
pub fn check_descent_condition(params: &DescentParams) -> Result<ConditionOutcome, DescentError> {
    let w = QuadElem::from_cyc(params.w.clone());
    if !is_unit(&w) {
        return Err(DescentError::NotAUnit);
    }
    if !params.d.is_integral() {
        return Ok(ConditionOutcome { theorem: false, example: false });
    }
    let quarter = Rat::new(1.into(), 4.into());
    let d2 = &params.d * &params.d;
    let check = |r: CycElem| -> bool { (&d2 - &r).scale(&quarter).is_integral() };
    Ok(ConditionOutcome {
        theorem: check(params.radicand(SignConvention::Theorem)?),
        example: check(params.radicand(SignConvention::Example)?),
    })
}

/// A γ-semilinear map on H⊗L: x ↦ Σ γ(coeff)·image. The linear part is
/// given by basis images with coefficients in the base field.
pub struct SemilinearMap {
    images: Vec<HopfElem>,
}

impl SemilinearMap {
    pub fn images(&self) -> &[HopfElem] {
        &self.images
    }

    pub fn apply(&self, h: &HopfData, x: &HopfElem) -> HopfElem {
        let twisted = x.map_scalars(|c| c.galois_conjugate());
        h.apply_linear(&self.images, &twisted)
    }

    pub fn apply_tensor(&self, h: &HopfData, t: &TensorElem) -> TensorElem {
        let twisted = t.map_scalars(|c| c.galois_conjugate());
        h.apply_linear_tensor(&self.images, &twisted)
    }

    /// The four Hopf γ-automorphism axioms, checked exactly on all basis
    /// elements/pairs, plus semilinearity samples and involutivity.
    pub fn verify(&self, h: &HopfData) -> Result<Report, DescentError> {
        let tower = h.tower();
        let dim = h.dim() as u32;
        let mut report = Report::new();

        // (1) γ-semilinearity on t-scaled basis elements
        let t = tower.gen_t()?;
        let mut fails = Vec::new();
        for i in 0..dim {
            let x = h.basis_elem(i).scaled(&t);
            let lhs = self.apply(h, &x);
            let rhs = self.apply(h, &h.basis_elem(i)).scaled(&t.galois_conjugate());
            if lhs != rhs {
                fails.push(format!("semilinearity at t·{}", h.label(i)));
            }
        }
        report.push(ok_or("semilinear/01-gamma-scalars", fails));

        // (2) compatibility with multiplication, comultiplication, antipode
        let mut fails = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let lhs = self.apply(h, h.mult_entry(i, j));
                let rhs = h.multiply(&self.images[i as usize], &self.images[j as usize]);
                if lhs != rhs {
                    fails.push(format!("f({}·{}) != f({})f({})", h.label(i), h.label(j), h.label(i), h.label(j)));
                }
            }
        }
        report.push(ok_or("semilinear/02-multiplication", fails));

        let mut fails = Vec::new();
        for i in 0..dim {
            let lhs = self.apply_tensor(h, h.comult_entry(i));
            let rhs = h.comultiply(&self.images[i as usize]);
            if lhs != rhs {
                fails.push(format!("comultiplication at {}", h.label(i)));
            }
        }
        report.push(ok_or("semilinear/03-comultiplication", fails));

        let mut fails = Vec::new();
        for i in 0..dim {
            let lhs = self.apply(h, h.antipode_entry(i));
            let rhs = h.antipode_of(&self.images[i as usize]);
            if lhs != rhs {
                fails.push(format!("antipode at {}", h.label(i)));
            }
        }
        report.push(ok_or("semilinear/04-antipode", fails));

        // (3) f(1) = 1
        let mut fails = Vec::new();
        if self.apply(h, h.unit()) != *h.unit() {
            fails.push("f(1) != 1".to_string());
        }
        report.push(ok_or("semilinear/05-unit", fails));

        // (4) ε∘f = γ∘ε
        let mut fails = Vec::new();
        for i in 0..dim {
            let lhs = h.counit_of(&self.images[i as usize]);
            let rhs = h.counit_entry(i).galois_conjugate();
            if lhs != rhs {
                fails.push(format!("counit at {}", h.label(i)));
            }
        }
        report.push(ok_or("semilinear/06-counit", fails));

        // involutive, including on a t-coefficient sample
        let mut fails = Vec::new();
        for i in 0..dim {
            let x = h.basis_elem(i);
            if self.apply(h, &self.apply(h, &x)) != x {
                fails.push(format!("f² != id at {}", h.label(i)));
            }
        }
        let sample = h.basis_elem(0).scaled(&t);
        if self.apply(h, &self.apply(h, &sample)) != sample {
            fails.push("f² != id on a t-scaled sample".to_string());
        }
        report.push(ok_or("semilinear/07-involutive", fails));

        Ok(report.finalize())
    }
}

fn ok_or(id: &str, fails: Vec<String>) -> Check {
    if fails.is_empty() {
        Check::pass(id)
    } else {
        Check::fail(id, fails.into_iter().take(4).collect::<Vec<_>>().join(" | "))
    }
}

/// σ′ = σ ⊗ γ: the Hopf automorphism σ (inversion on all four generators,
/// g fixed) combined with the Galois conjugation of L/K. Requires a tower
/// with a radicand.
pub fn sigma_prime(h: &HopfData) -> Result<SemilinearMap, DescentError> {
    let tower = h.tower();
    if !tower.has_radicand() {
        return Err(DescentError::Field(FieldError::MissingRadicand));
    }
    let p = tower
        .prime()
        .ok_or(DescentError::Nikshych(NikshychError::MissingPrime))?;
    let mono = Monomials::new(p);
    let images = (0..h.dim() as u32)
        .map(|idx| {
            let l = mono.decode(idx);
            h.basis_elem(mono.enc(l.sector, -(l.i as i64), -(l.j as i64)))
        })
        .collect();
    Ok(SemilinearMap { images })
}

/// The proof witnesses for the descended generator:
/// q = −x̃_a²u_a⁻¹ is invariant, σ′(x̃_a) = x̃_a + t·q, and
/// z = x̃_a + ½(d+t)q is an invariant member of Y recovering x̃_a.
pub fn descent_witnesses(
    y: &OrderLattice,
    sp: &SemilinearMap,
    d: &CycElem,
) -> Result<Report, DescentError> {
    let h = y.ambient();
    let tower = h.tower();
    let p = tower
        .prime()
        .ok_or(DescentError::Nikshych(NikshychError::MissingPrime))? as i64;
    let mono = Monomials::new(p as u32);
    let t = tower.gen_t()?;
    let mut report = Report::new();

    let e0 = h.basis_elem(mono.enc(Sector::A0, 0, 0));
    let ua = h.basis_elem(mono.enc(Sector::A0, 1, 0));
    let ua_inv = h.basis_elem(mono.enc(Sector::A0, -1, 0));
    let xa_tilde = ua.sub(&e0).scaled(&t.inv()?);
    // q = −x̃_a²·u_a⁻¹ = (1/t²)(2e₀ − u_a − u_a⁻¹)
    let q = h
        .multiply(&h.multiply(&xa_tilde, &xa_tilde), &ua_inv)
        .neg();
    let q_closed = e0
        .scaled(&tower.scalar_from_int(2))
        .sub(&ua)
        .sub(&ua_inv)
        .scaled(&(&t * &t).inv()?);
    report.push(if q == q_closed {
        Check::pass("witness/01-q-closed-form")
    } else {
        Check::fail("witness/01-q-closed-form", h.format_elem(&q.sub(&q_closed)))
    });

    report.push(match y.contains(&xa_tilde)? {
        true => Check::pass("witness/02-xa-tilde-in-order"),
        false => Check::fail("witness/02-xa-tilde-in-order", h.format_elem(&xa_tilde)),
    });

    // σ′(x̃_a) = x̃_a + t·q
    let lhs = sp.apply(h, &xa_tilde);
    let rhs = xa_tilde.add(&q.scaled(&t));
    report.push(if lhs == rhs {
        Check::pass("witness/03-sigma-xa-identity")
    } else {
        Check::fail("witness/03-sigma-xa-identity", h.format_elem(&lhs.sub(&rhs)))
    });

    // q invariant and in Y
    report.push(match (y.contains(&q)?, sp.apply(h, &q) == q) {
        (true, true) => Check::pass("witness/04-q-invariant-member"),
        (m, inv) => Check::fail(
            "witness/04-q-invariant-member",
            format!("member: {m}, invariant: {inv}"),
        ),
    });

    // z = x̃_a + ½(d+t)q invariant and in Y; x̃_a = z − ½(d+t)q
    let half = Rat::new(1.into(), 2.into());
    let half_dt = (&QuadElem::from_cyc(tower.lift(d)) + &t).scale(&half);
    let z = xa_tilde.add(&q.scaled(&half_dt));
    report.push(match (y.contains(&z)?, sp.apply(h, &z) == z) {
        (true, true) => Check::pass("witness/05-z-invariant-member"),
        (m, inv) => Check::fail(
            "witness/05-z-invariant-member",
            format!("member: {m}, invariant: {inv}"),
        ),
    });
    let recovered = z.sub(&q.scaled(&half_dt));
    report.push(if recovered == xa_tilde {
        Check::pass("witness/06-xa-recovered")
    } else {
        Check::fail("witness/06-xa-recovered", h.format_elem(&recovered.sub(&xa_tilde)))
    });

    Ok(report.finalize())
}

/// Result of the invariant-lattice computation.
pub struct InvariantOrderResult {
    /// Rank of Y^Γ as a Z-lattice (in ring coordinates of Y).
    pub fixed_rank: usize,
    /// Whether the Z[ζ_n]-span of Y^Γ equals Y.
    pub span_equals_order: bool,
}

/// Computes the invariant lattice Y^Γ of σ′ and checks that its
/// Z[ζ_n]-span recovers all of Y (surjectivity of
/// Y^Γ ⊗_{Z[ζ_n]} O → Y). Works in Y's own ring coordinates, where the
/// order is the standard lattice; the involution decomposes into blocks
/// over the connected components of its support, and the fixed sublattice
/// is assembled component by component.
pub fn invariant_order(
    y: &OrderLattice,
    sp: &SemilinearMap,
    ring: &RingBasis,
) -> Result<InvariantOrderResult, DescentError> {
    let h = y.ambient();
    let tower = h.tower();
    let e = ring.degree();
    let dim = h.dim();
    let n = dim * e;

    // sparse columns of T: image of θ_a·b_i under σ′, in ring coordinates
    // of the Y basis
    let mut cols: Vec<Vec<(usize, num::BigInt)>> = Vec::with_capacity(n);
    for b in y.basis() {
        let image = sp.apply(h, b);
        let coords = y.coords(&image)?;
        for theta in ring.elems() {
            let gamma_theta = theta.galois_conjugate();
            let mut col = Vec::new();
            for (k, c) in coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let flat = ring.flatten(&(c * &gamma_theta));
                for (cc, val) in flat.iter().enumerate() {
                    if !val.is_zero() {
                        if !val.is_integer() {
                            return Err(DescentError::ConditionFailed(
                                "σ′ does not stabilize the order lattice".into(),
                            ));
                        }
                        col.push((k * e + cc, val.to_integer()));
                    }
                }
            }
            cols.push(col);
        }
    }

    // connected components of the support graph; the scalar action mixes
    // all ring coordinates of one ambient slot, so each slot's e-block is
    // merged up front
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let union = |parent: &mut Vec<usize>, i: usize, j: usize| {
        let (a, b) = (find(parent, i), find(parent, j));
        if a != b {
            parent[a] = b;
        }
    };
    for slot in 0..dim {
        for cc in 1..e {
            union(&mut parent, slot * e, slot * e + cc);
        }
    }
    for (j, col) in cols.iter().enumerate() {
        for (i, _) in col {
            union(&mut parent, *i, j);
        }
    }
    let mut comp_members: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let root = find(&mut parent, i);
        comp_members.entry(root).or_default().push(i);
    }

    // the multiplication-by-ζ_n block on each ambient slot, in ring
    // coordinates (integer since ζ·O ⊆ O)
    let zeta = QuadElem::from_cyc(tower.zeta());
    let mut zeta_block = vec![vec![num::BigInt::from(0); e]; e];
    for (b, theta) in ring.elems().iter().enumerate() {
        let flat = ring.flatten(&(theta * &zeta));
        for (a, val) in flat.iter().enumerate() {
            assert!(val.is_integer(), "ζ must stabilize the ring basis");
            zeta_block[a][b] = val.to_integer();
        }
    }
    let phi_n = tower.degree();

    let mut fixed_rank = 0usize;
    let mut span_equals_order = true;
    for members in comp_members.values() {
        let size = members.len();
        let pos: std::collections::HashMap<usize, usize> =
            members.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        // dense T on the component
        let mut t_mat = vec![vec![num::BigInt::from(0); size]; size];
        for (local_j, &j) in members.iter().enumerate() {
            for (i, v) in &cols[j] {
                t_mat[pos[i]][local_j] = v.clone();
            }
        }
        let lat = IntLattice::standard(size);
        let fixed = fixed_sublattice(&lat, &t_mat)?;
        fixed_rank += fixed.rank();
        if !span_equals_order {
            continue;
        }
        // Z[ζ_n]-span of the fixed vectors: close under multiplication by
        // ζ_n; the scalar action preserves each ambient slot, so it maps
        // the component into itself.
        let mut gens: Vec<Vec<num::BigInt>> = fixed.basis().to_vec();
        debug_assert!(num::One::is_one(fixed.denominator()));
        let apply_zeta = |v: &[num::BigInt]| -> Vec<num::BigInt> {
            let mut out = vec![num::BigInt::from(0); size];
            for (local, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let global = members[local];
                let (slot, a) = (global / e, global % e);
                for cc in 0..e {
                    if !zeta_block[cc][a].is_zero() {
                        let target = slot * e + cc;
                        let lt = pos[&target];
                        out[lt] = &out[lt] + &(&zeta_block[cc][a] * x);
                    }
                }
            }
            out
        };
        let mut current: Vec<Vec<num::BigInt>> = gens.clone();
        for _ in 1..phi_n {
            current = current.iter().map(|v| apply_zeta(v)).collect();
            gens.extend(current.iter().cloned());
        }
        let span = IntLattice::hnf(size, &gens);
        if span != IntLattice::standard(size) {
            span_equals_order = false;
        }
    }
    Ok(InvariantOrderResult { fixed_rank, span_equals_order })
}

/// Sanity for flattening compatibility, used by tests: the element's ring
/// flattening round-trips.
pub fn flatten_roundtrip(h: &HopfData, ring: &RingBasis, x: &HopfElem) -> bool {
    let v = flatten_elem(h, ring, x);
    crate::orders::unflatten_elem(h, ring, &v) == *x
}

#[cfg(test)]
mod tests;
