//! The group algebra KC_p and its orders H(I) = ⊕ I^i(ζ−1)^{−i}(σ−1)^i
//! for principal ideals I = (α) containing ζ − 1.

use std::sync::Arc;

use crate::exactfield::{Tower, TowerElems};
use crate::hopfcore::{verify_hopf_axioms, HopfData, HopfElem, TensorElem, VerifyOptions};

use super::{IdealSpec, OrderError, OrderLattice};

/// The group algebra of C_p over the tower, on the group-like basis
/// σ^0, …, σ^{p−1}; verified before being returned.
pub fn group_algebra_cp(tower: &Tower) -> Result<Arc<HopfData>, OrderError> {
    let p = tower
        .prime()
        .ok_or_else(|| OrderError::PreconditionViolated("tower has no distinguished prime".into()))?;
    let one = tower.one();
    let labels: Vec<String> = (0..p).map(|i| format!("sigma^{i}")).collect();
    let mut mult = Vec::with_capacity((p * p) as usize);
    for i in 0..p {
        for j in 0..p {
            mult.push(HopfElem::single((i + j) % p, one.clone()));
        }
    }
    let comult = (0..p).map(|i| TensorElem::single(i, i, one.clone())).collect();
    let counit = (0..p).map(|_| one.clone()).collect();
    let antipode = (0..p).map(|i| HopfElem::single((p - i) % p, one.clone())).collect();
    let h = HopfData::new(
        tower.clone(),
        labels,
        HopfElem::single(0, one.clone()),
        mult,
        comult,
        counit,
        antipode,
    );
    let report = verify_hopf_axioms(&h, &VerifyOptions::default());
    assert!(report.all_passed(), "group algebra failed the axiom suite: {report:?}");
    Ok(Arc::new(h))
}

/// The order H((α)) of KC_p with free basis {(α/(ζ−1))^i (σ−1)^i}.
/// Requires (ζ−1)/α integral (the containment ζ − 1 ∈ (α)).
pub fn larson_order(ambient: &Arc<HopfData>, alpha: &IdealSpec) -> Result<OrderLattice, OrderError> {
    let tower = ambient.tower();
    let p = tower
        .prime()
        .ok_or_else(|| OrderError::PreconditionViolated("tower has no distinguished prime".into()))?;
    let a = alpha.generator()?;
    let zeta1 = crate::exactfield::QuadElem::from_cyc(&tower.zeta_p()? - &tower.one_cyc());
    if !(&zeta1 / &a).is_integral() {
        return Err(OrderError::ContainmentViolation);
    }
    // x = (α/(ζ−1))(σ − 1)
    let scale = &a / &zeta1;
    let sigma_minus_one = ambient.basis_elem(1).sub(&ambient.basis_elem(0));
    let x = sigma_minus_one.scaled(&scale);
    let mut basis = Vec::with_capacity(p as usize);
    let mut cur = ambient.basis_elem(0);
    basis.push(cur.clone());
    for _ in 1..p {
        cur = ambient.multiply(&cur, &x);
        basis.push(cur.clone());
    }
    OrderLattice::from_free_basis(ambient.clone(), basis)
}
