//! Exact computer algebra for finite-dimensional Hopf algebras given by
//! structure constants, and for their orders over rings of integers of
//! cyclotomic fields and quadratic extensions thereof.
//!
//! Everything is computed with arbitrary-precision rational arithmetic;
//! there is no floating point and no tolerance anywhere. The main pieces:
//!
//! * [`exactfield`] — the scalar tower Q ⊂ Q(ζ_m) ⊂ Q(ζ_m)(t), t² = r,
//!   with integrality tests, Gauss-sum square roots and element literals.
//! * [`exactlinalg`] — exact linear algebra: field-valued LU solves,
//!   Hermite normal form, lattice membership, duals, fixed sublattices.
//! * [`hopfcore`] — structure-constant Hopf algebras, the axiom
//!   verification suite, duals, convolution and text import/export.
//! * [`nikshych`] — the 4p²-dimensional self-dual Hopf algebra family
//!   built from a twisted group algebra and a C₂ crossed product, with
//!   its dual tables, characters, representations and automorphisms.
//! * [`orders`] — Hopf orders: the Larson orders of KC_p, the canonical
//!   order of the Nikshych algebra, integrals, dual orders.
//! * [`descent`] — semilinear involutions, the quadratic descent
//!   integrality condition, and invariant orders of forms.

pub mod descent;
pub mod exactfield;
pub mod exactlinalg;
pub mod hopfcore;
pub mod nikshych;
pub mod orders;
