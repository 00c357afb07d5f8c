//! Structured text import/export of `HopfData`. Canonical ordering makes
//! the export reproducible byte-for-byte.
//!
//! Format (one record per line, whitespace-separated):
//!
//! ```text
//! hopfdata v1
//! tower m=<m> p=<p|-> radicand=<literal|->
//! dim <n>
//! label <i> <name>
//! unit <i> <scalar>
//! counit <i> <scalar>
//! mult <i> <j> <k> <scalar>
//! comult <i> <j> <k> <scalar>
//! antipode <i> <j> <scalar>
//! end
//! ```
//!
//! Scalars use the element literal grammar and contain no whitespace.

use std::fmt::Write as _;

use crate::exactfield::{parse_cyc, parse_scalar, FieldTower, QuadElem, TowerElems};

use super::{HopfData, HopfElem, HopfError, TensorElem};

pub fn export_string(h: &HopfData) -> String {
    let mut out = String::new();
    let tw = h.tower();
    out.push_str("hopfdata v1\n");
    let p = tw.prime().map(|p| p.to_string()).unwrap_or_else(|| "-".into());
    let rad = tw
        .radicand_elem()
        .map(|r| r.to_string())
        .unwrap_or_else(|_| "-".into());
    writeln!(out, "tower m={} p={} radicand={}", tw.modulus(), p, rad).unwrap();
    writeln!(out, "dim {}", h.dim()).unwrap();
    for (i, l) in h.labels().iter().enumerate() {
        writeln!(out, "label {i} {l}").unwrap();
    }
    for (&i, c) in h.unit().terms() {
        writeln!(out, "unit {i} {c}").unwrap();
    }
    for i in 0..h.dim() as u32 {
        let c = h.counit_entry(i);
        if !c.is_zero() {
            writeln!(out, "counit {i} {c}").unwrap();
        }
    }
    for i in 0..h.dim() as u32 {
        for j in 0..h.dim() as u32 {
            for (&k, c) in h.mult_entry(i, j).terms() {
                writeln!(out, "mult {i} {j} {k} {c}").unwrap();
            }
        }
    }
    for i in 0..h.dim() as u32 {
        for (&(j, k), c) in h.comult_entry(i).terms() {
            writeln!(out, "comult {i} {j} {k} {c}").unwrap();
        }
    }
    for i in 0..h.dim() as u32 {
        for (&j, c) in h.antipode_entry(i).terms() {
            writeln!(out, "antipode {i} {j} {c}").unwrap();
        }
    }
    out.push_str("end\n");
    out
}

pub fn import_string(s: &str) -> Result<HopfData, HopfError> {
    let mut lines = s.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| bad("empty input"))?;
    if header.trim() != "hopfdata v1" {
        return Err(bad(&format!("unknown header `{header}`")));
    }
    let tower_line = lines.next().ok_or_else(|| bad("missing tower line"))?;
    let parts: Vec<&str> = tower_line.split_whitespace().collect();
    if parts.len() != 4 || parts[0] != "tower" {
        return Err(bad("malformed tower line"));
    }
    let m: u32 = field_val(parts[1], "m")?.parse().map_err(|_| bad("bad m"))?;
    let p_str = field_val(parts[2], "p")?;
    let rad_str = field_val(parts[3], "radicand")?;
    let base = if p_str == "-" {
        FieldTower::cyclotomic(m)
    } else {
        FieldTower::with_prime(m, p_str.parse().map_err(|_| bad("bad p"))?)
    }
    .map_err(HopfError::Field)?;
    let tower = if rad_str == "-" {
        base
    } else {
        let r = parse_cyc(&base, rad_str).map_err(HopfError::Field)?;
        FieldTower::extend(&base, &r).map_err(HopfError::Field)?
    };

    let dim_line = lines.next().ok_or_else(|| bad("missing dim line"))?;
    let dim_parts: Vec<&str> = dim_line.split_whitespace().collect();
    if dim_parts.len() != 2 || dim_parts[0] != "dim" {
        return Err(bad("malformed dim line"));
    }
    let dim: usize = dim_parts[1].parse().map_err(|_| bad("bad dim"))?;

    let mut labels = vec![String::new(); dim];
    let mut unit = HopfElem::zero();
    let mut counit = vec![tower.zero(); dim];
    let mut mult = vec![HopfElem::zero(); dim * dim];
    let mut comult = vec![TensorElem::zero(); dim];
    let mut antipode = vec![HopfElem::zero(); dim];
    let mut seen_end = false;

    let idx = |s: &str| -> Result<usize, HopfError> {
        let i: usize = s.parse().map_err(|_| bad(&format!("bad index `{s}`")))?;
        if i >= dim {
            return Err(bad(&format!("index {i} out of range")));
        }
        Ok(i)
    };
    let scalar = |s: &str| -> Result<QuadElem, HopfError> {
        parse_scalar(&tower, s).map_err(HopfError::Field)
    };

    for line in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        match parts[0] {
            "end" => {
                seen_end = true;
                break;
            }
            "label" if parts.len() == 3 => {
                labels[idx(parts[1])?] = parts[2].to_string();
            }
            "unit" if parts.len() == 3 => {
                unit.add_term(idx(parts[1])? as u32, &scalar(parts[2])?);
            }
            "counit" if parts.len() == 3 => {
                counit[idx(parts[1])?] = scalar(parts[2])?;
            }
            "mult" if parts.len() == 5 => {
                let (i, j, k) = (idx(parts[1])?, idx(parts[2])?, idx(parts[3])?);
                mult[i * dim + j].add_term(k as u32, &scalar(parts[4])?);
            }
            "comult" if parts.len() == 5 => {
                let (i, j, k) = (idx(parts[1])?, idx(parts[2])?, idx(parts[3])?);
                comult[i].add_term(j as u32, k as u32, &scalar(parts[4])?);
            }
            "antipode" if parts.len() == 4 => {
                let (i, j) = (idx(parts[1])?, idx(parts[2])?);
                antipode[i].add_term(j as u32, &scalar(parts[3])?);
            }
            other => return Err(bad(&format!("unexpected record `{other}`"))),
        }
    }
    if !seen_end {
        return Err(bad("missing end marker"));
    }
    Ok(HopfData::new(tower, labels, unit, mult, comult, counit, antipode))
}

fn field_val<'a>(part: &'a str, key: &str) -> Result<&'a str, HopfError> {
    part.strip_prefix(key)
        .and_then(|s| s.strip_prefix('='))
        .ok_or_else(|| bad(&format!("expected `{key}=...`, found `{part}`")))
}

fn bad(msg: &str) -> HopfError {
    HopfError::BadFormat(msg.to_string())
}
