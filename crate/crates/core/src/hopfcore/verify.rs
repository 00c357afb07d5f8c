//! The Hopf axiom verification suite: exact checks of all unit, counit,
//! (co)associativity, bialgebra and antipode identities on basis elements.

use std::collections::BTreeMap;
use std::ops::Range;

use rayon::prelude::*;

use crate::exactfield::QuadElem;

use super::{Check, HopfData, HopfElem, Report, TensorElem};

/// Options for the axiom suite. `first_index_range` restricts the outer
/// basis index of every identity family, which makes the suite shardable
/// and restartable; only a full-range pass marks the data as verified.
#[derive(Clone)]
pub struct VerifyOptions {
    pub first_index_range: Option<Range<u32>>,
    /// Witnesses reported per identity family.
    pub max_witnesses: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { first_index_range: None, max_witnesses: 4 }
    }
}

fn truncate(s: String, limit: usize) -> String {
    if s.len() <= limit {
        s
    } else {
        format!("{}…", &s[..s.char_indices().take_while(|(i, _)| *i < limit).last().map(|(i, c)| i + c.len_utf8()).unwrap_or(0)])
    }
}

struct Family {
    id: &'static str,
    failures: Vec<String>,
    total: usize,
}

impl Family {
    fn into_check(self, max_witnesses: usize) -> Check {
        if self.failures.is_empty() {
            Check::pass(format!("{} ({} identities)", self.id, self.total))
        } else {
            let shown: Vec<&String> = self.failures.iter().take(max_witnesses).collect();
            Check::fail(
                format!("{} ({} identities)", self.id, self.total),
                format!(
                    "{} failures, first: {}",
                    self.failures.len(),
                    shown.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(" | ")
                ),
            )
        }
    }
}

/// Checks every Hopf axiom identity over the basis, exactly. On a full
/// all-pass run the data is flagged as verified.
pub fn verify_hopf_axioms(h: &HopfData, opts: &VerifyOptions) -> Report {
    let dim = h.dim() as u32;
    let range = opts.first_index_range.clone().unwrap_or(0..dim);
    let full = range == (0..dim);
    let basis: Vec<HopfElem> = (0..dim).map(|i| h.basis_elem(i)).collect();
    let mut report = Report::new();

    // 01: unit laws
    let mut fam = Family { id: "01-unit-laws", failures: Vec::new(), total: 0 };
    let results: Vec<Vec<String>> = range
        .clone()
        .into_par_iter()
        .map(|i| {
            let mut fails = Vec::new();
            if h.multiply(h.unit(), &basis[i as usize]) != basis[i as usize] {
                fails.push(format!("1*{} != {}", h.label(i), h.label(i)));
            }
            if h.multiply(&basis[i as usize], h.unit()) != basis[i as usize] {
                fails.push(format!("{}*1 != {}", h.label(i), h.label(i)));
            }
            fails
        })
        .collect();
    fam.total = 2 * range.len();
    fam.failures = results.into_iter().flatten().collect();
    report.push(fam.into_check(opts.max_witnesses));

    // 02: associativity on all basis triples
    let mut fam = Family { id: "02-associativity", failures: Vec::new(), total: 0 };
    let results: Vec<Vec<String>> = range
        .clone()
        .into_par_iter()
        .map(|i| {
            let mut fails = Vec::new();
            for j in 0..dim {
                let ij = h.mult_entry(i, j);
                for k in 0..dim {
                    let lhs = h.multiply(ij, &basis[k as usize]);
                    let rhs = h.multiply(&basis[i as usize], h.mult_entry(j, k));
                    if lhs != rhs {
                        fails.push(format!(
                            "assoc({},{},{}): diff = {}",
                            h.label(i),
                            h.label(j),
                            h.label(k),
                            truncate(h.format_elem(&lhs.sub(&rhs)), 160)
                        ));
                    }
                }
            }
            fails
        })
        .collect();
    fam.total = range.len() * (dim as usize) * (dim as usize);
    fam.failures = results.into_iter().flatten().collect();
    report.push(fam.into_check(opts.max_witnesses));

    // 03: counit laws (ε⊗id)Δ = id = (id⊗ε)Δ
    let mut fam = Family { id: "03-counit-laws", failures: Vec::new(), total: 0 };
    let results: Vec<Vec<String>> = range
        .clone()
        .into_par_iter()
        .map(|i| {
            let mut fails = Vec::new();
            let delta = h.comult_entry(i);
            let mut left = HopfElem::zero();
            let mut right = HopfElem::zero();
            for (&(s, t), c) in delta.terms() {
                let es = h.counit_entry(s);
                if !es.is_zero() {
                    left.add_term(t, &(c * es));
                }
                let et = h.counit_entry(t);
                if !et.is_zero() {
                    right.add_term(s, &(c * et));
                }
            }
            if left != basis[i as usize] {
                fails.push(format!("(eps(x)id)Delta({}) != {}", h.label(i), h.label(i)));
            }
            if right != basis[i as usize] {
                fails.push(format!("(id(x)eps)Delta({}) != {}", h.label(i), h.label(i)));
            }
            fails
        })
        .collect();
    fam.total = 2 * range.len();
    fam.failures = results.into_iter().flatten().collect();
    report.push(fam.into_check(opts.max_witnesses));

    // 04: coassociativity
    let mut fam = Family { id: "04-coassociativity", failures: Vec::new(), total: 0 };
    let results: Vec<Vec<String>> = range
        .clone()
        .into_par_iter()
        .map(|i| {
            let delta = h.comult_entry(i);
            let mut lhs: BTreeMap<(u32, u32, u32), QuadElem> = BTreeMap::new();
            let mut rhs: BTreeMap<(u32, u32, u32), QuadElem> = BTreeMap::new();
            for (&(s, t), c) in delta.terms() {
                for (&(a, b), d) in h.comult_entry(s).terms() {
                    add3(&mut lhs, (a, b, t), &(c * d));
                }
                for (&(a, b), d) in h.comult_entry(t).terms() {
                    add3(&mut rhs, (s, a, b), &(c * d));
                }
            }
            if lhs != rhs {
                let key = lhs
                    .iter()
                    .find(|(k, v)| rhs.get(k) != Some(v))
                    .map(|(k, _)| *k)
                    .or_else(|| rhs.keys().find(|k| !lhs.contains_key(k)).copied());
                vec![format!(
                    "coassoc({}) differs at {:?}",
                    h.label(i),
                    key.map(|(a, b, c)| format!("{}(x){}(x){}", h.label(a), h.label(b), h.label(c)))
                )]
            } else {
                Vec::new()
            }
        })
        .collect();
    fam.total = range.len();
    fam.failures = results.into_iter().flatten().collect();
    report.push(fam.into_check(opts.max_witnesses));

    // 05: counit is an algebra map
    let mut fam = Family { id: "05-counit-algebra-map", failures: Vec::new(), total: 0 };
    let mut fails: Vec<String> = range
        .clone()
        .into_par_iter()
        .map(|i| {
            let mut fails = Vec::new();
            for j in 0..dim {
                let lhs = h.counit_of(h.mult_entry(i, j));
                let rhs = h.counit_entry(i) * h.counit_entry(j);
                if lhs != rhs {
                    fails.push(format!("eps({}*{}): {} != {}", h.label(i), h.label(j), lhs, rhs));
                }
            }
            fails
        })
        .flatten()
        .collect();
    if full && !h.counit_of(h.unit()).is_one() {
        fails.push("eps(1) != 1".to_string());
    }
    fam.total = range.len() * dim as usize + usize::from(full);
    fam.failures = fails;
    report.push(fam.into_check(opts.max_witnesses));

    // 06: comultiplication is an algebra map
    let mut fam = Family { id: "06-comult-algebra-map", failures: Vec::new(), total: 0 };
    let mut fails: Vec<String> = range
        .clone()
        .into_par_iter()
        .map(|i| {
            let mut fails = Vec::new();
            let di = h.comult_entry(i);
            for j in 0..dim {
                let lhs = h.comultiply(h.mult_entry(i, j));
                let rhs = h.tensor_multiply(di, h.comult_entry(j), false);
                if lhs != rhs {
                    fails.push(format!(
                        "Delta({}*{}) != Delta({})Delta({}), diff = {}",
                        h.label(i),
                        h.label(j),
                        h.label(i),
                        h.label(j),
                        truncate(h.format_tensor(&lhs.sub(&rhs)), 160)
                    ));
                }
            }
            fails
        })
        .flatten()
        .collect();
    if full {
        let one_one = TensorElem::product(h.unit(), h.unit());
        if h.comultiply(h.unit()) != one_one {
            fails.push("Delta(1) != 1(x)1".to_string());
        }
    }
    fam.total = range.len() * dim as usize + usize::from(full);
    fam.failures = fails;
    report.push(fam.into_check(opts.max_witnesses));

    // 07: antipode convolution identities
    let mut fam = Family { id: "07-antipode-convolution", failures: Vec::new(), total: 0 };
    let results: Vec<Vec<String>> = range
        .clone()
        .into_par_iter()
        .map(|i| {
            let mut fails = Vec::new();
            let delta = h.comult_entry(i);
            let mut left = HopfElem::zero();
            let mut right = HopfElem::zero();
            for (&(s, t), c) in delta.terms() {
                left.add_scaled(&h.multiply(h.antipode_entry(s), &basis[t as usize]), c);
                right.add_scaled(&h.multiply(&basis[s as usize], h.antipode_entry(t)), c);
            }
            let target = h.unit().scaled(h.counit_entry(i));
            if left != target {
                fails.push(format!(
                    "m(S(x)id)Delta({}) != eps({})*1, got {}",
                    h.label(i),
                    h.label(i),
                    truncate(h.format_elem(&left), 120)
                ));
            }
            if right != target {
                fails.push(format!(
                    "m(id(x)S)Delta({}) != eps({})*1, got {}",
                    h.label(i),
                    h.label(i),
                    truncate(h.format_elem(&right), 120)
                ));
            }
            fails
        })
        .collect();
    fam.total = 2 * range.len();
    fam.failures = results.into_iter().flatten().collect();
    report.push(fam.into_check(opts.max_witnesses));

    let report = report.finalize();
    if full && report.all_passed() {
        h.set_verified();
    }
    report
}

fn add3(map: &mut BTreeMap<(u32, u32, u32), QuadElem>, key: (u32, u32, u32), c: &QuadElem) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
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
