//! Integer lattices in Hermite normal form.

use num::{Integer, One, Signed, Zero};

use crate::exactfield::{Int, Rat};

use super::{LinalgError, QMatrix};

/// A lattice (1/denominator)·Z-span(basis) ⊂ Q^ambient_rank, with the
/// basis rows kept in row-style Hermite normal form: pivots positive,
/// entries above a pivot reduced into [0, pivot). The pair (denominator,
/// basis) is normalized so the form is canonical.
#[derive(Clone, PartialEq, Eq)]
pub struct IntLattice {
    ambient_rank: usize,
    denominator: Int,
    basis: Vec<Vec<Int>>,
}

impl std::fmt::Debug for IntLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntLattice rank {} / ambient {} denom {}", self.rank(), self.ambient_rank, self.denominator)?;
        for row in &self.basis {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// In-place row HNF. Returns the rank; rows beyond it are zero.
fn hnf_in_place(rows: &mut Vec<Vec<Int>>, ncols: usize) -> usize {
    let mut r = 0usize;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        loop {
            // pick the row at/below r with the smallest nonzero |entry|
            let mut best: Option<usize> = None;
            for i in r..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(i),
                    Some(b) => {
                        if rows[i][col].abs() < rows[b][col].abs() {
                            best = Some(i);
                        }
                    }
                }
            }
            let Some(b) = best else { break };
            rows.swap(r, b);
            // reduce every other row at/below r against row r
            let mut live = false;
            for i in r + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[r][col]);
                if !q.is_zero() {
                    for j in 0..ncols {
                        let delta = &q * &rows[r][j];
                        rows[i][j] = &rows[i][j] - &delta;
                    }
                }
                if !rows[i][col].is_zero() {
                    live = true;
                }
            }
            if !live {
                break;
            }
        }
        if rows[r][col].is_zero() {
            continue;
        }
        if rows[r][col].is_negative() {
            for j in 0..ncols {
                rows[r][j] = -rows[r][j].clone();
            }
        }
        // reduce the rows above into [0, pivot)
        for i in 0..r {
            if rows[i][col].is_zero() {
                continue;
            }
            let q = rows[i][col].div_floor(&rows[r][col]);
            if !q.is_zero() {
                for j in 0..ncols {
                    let delta = &q * &rows[r][j];
                    rows[i][j] = &rows[i][j] - &delta;
                }
            }
        }
        r += 1;
    }
    r
}

/// HNF with a unimodular transform: returns (H, U) with U·A = H; the rows
/// of U opposite zero rows of H form a basis of the left kernel of A.
pub(super) fn hnf_with_transform(a: &[Vec<Int>], ncols: usize) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let n = a.len();
    // work on [A | I] with I tracked as extra columns
    let mut rows: Vec<Vec<Int>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), ncols);
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Int::one() } else { Int::zero() }));
            r
        })
        .collect();
    // run HNF on the first ncols columns only (pivot search restricted),
    // carrying the transform columns along
    let total = ncols + n;
    let mut r = 0usize;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(i),
                    Some(b) => {
                        if rows[i][col].abs() < rows[b][col].abs() {
                            best = Some(i);
                        }
                    }
                }
            }
            let Some(b) = best else { break };
            rows.swap(r, b);
            let mut live = false;
            for i in r + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[r][col]);
                if !q.is_zero() {
                    for j in 0..total {
                        let delta = &q * &rows[r][j];
                        rows[i][j] = &rows[i][j] - &delta;
                    }
                }
                if !rows[i][col].is_zero() {
                    live = true;
                }
            }
            if !live {
                break;
            }
        }
        if rows[r][col].is_zero() {
            continue;
        }
        if rows[r][col].is_negative() {
            for j in 0..total {
                rows[r][j] = -rows[r][j].clone();
            }
        }
        for i in 0..r {
            if rows[i][col].is_zero() {
                continue;
            }
            let q = rows[i][col].div_floor(&rows[r][col]);
            if !q.is_zero() {
                for j in 0..total {
                    let delta = &q * &rows[r][j];
                    rows[i][j] = &rows[i][j] - &delta;
                }
            }
        }
        r += 1;
    }
    let mut h = Vec::with_capacity(n);
    let mut u = Vec::with_capacity(n);
    for row in rows {
        h.push(row[..ncols].to_vec());
        u.push(row[ncols..].to_vec());
    }
    (h, u)
}

impl IntLattice {
    /// Canonical HNF lattice spanned by integer generators.
    pub fn hnf(ambient_rank: usize, generators: &[Vec<Int>]) -> Self {
        let mut rows: Vec<Vec<Int>> = generators
            .iter()
            .inspect(|g| assert_eq!(g.len(), ambient_rank, "generator length mismatch"))
            .filter(|g| !g.iter().all(Zero::is_zero))
            .cloned()
            .collect();
        let rank = hnf_in_place(&mut rows, ambient_rank);
        rows.truncate(rank);
        IntLattice { ambient_rank, denominator: Int::one(), basis: rows }.normalized()
    }

    /// Lattice spanned by rational row vectors.
    pub fn from_rational_rows(ambient_rank: usize, rows: &[Vec<Rat>]) -> Self {
        let mut den = Int::one();
        for row in rows {
            assert_eq!(row.len(), ambient_rank, "generator length mismatch");
            for c in row {
                den = den.lcm(c.denom());
            }
        }
        let int_rows: Vec<Vec<Int>> = rows
            .iter()
            .map(|row| row.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect())
            .collect();
        let mut lat = IntLattice::hnf(ambient_rank, &int_rows);
        lat.denominator = &lat.denominator * &den;
        lat.normalized()
    }

    pub fn zero(ambient_rank: usize) -> Self {
        IntLattice { ambient_rank, denominator: Int::one(), basis: Vec::new() }
    }

    /// The standard lattice Z^n.
    pub fn standard(n: usize) -> Self {
        let basis = (0..n)
            .map(|i| {
                let mut row = vec![Int::zero(); n];
                row[i] = Int::one();
                row
            })
            .collect();
        IntLattice { ambient_rank: n, denominator: Int::one(), basis }
    }

    fn normalized(mut self) -> Self {
        // divide out gcd(denominator, all entries)
        let mut g = self.denominator.clone();
        for row in &self.basis {
            for c in row {
                g = g.gcd(c);
                if g.is_one() {
                    return self;
                }
            }
        }
        if !g.is_one() && !g.is_zero() {
            for row in &mut self.basis {
                for c in row.iter_mut() {
                    *c = &*c / &g;
                }
            }
            self.denominator = &self.denominator / &g;
        }
        self
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn denominator(&self) -> &Int {
        &self.denominator
    }

    pub fn basis(&self) -> &[Vec<Int>] {
        &self.basis
    }

    /// Basis rows as rational vectors (denominator applied).
    pub fn rational_basis(&self) -> Vec<Vec<Rat>> {
        self.basis
            .iter()
            .map(|row| row.iter().map(|c| Rat::new(c.clone(), self.denominator.clone())).collect())
            .collect()
    }

    /// Membership by deterministic back-substitution against the HNF rows.
    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient_rank, "vector length mismatch");
        // w = denominator · v must be an integer combination of the basis
        let mut w: Vec<Rat> = v.iter().map(|c| c * Rat::from_integer(self.denominator.clone())).collect();
        for row in &self.basis {
            let pivot = row.iter().position(|c| !c.is_zero()).expect("no zero rows in HNF basis");
            if w[pivot].is_zero() {
                continue;
            }
            let q = &w[pivot] / Rat::from_integer(row[pivot].clone());
            if !q.is_integer() {
                return false;
            }
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    w[j] = &w[j] - &(&q * &Rat::from_integer(c.clone()));
                }
            }
        }
        w.iter().all(Zero::is_zero)
    }

    pub fn contains_lattice(&self, other: &IntLattice) -> bool {
        other.rational_basis().iter().all(|row| self.contains(row))
    }

    /// The dual {y : ⟨x, y⟩ ∈ Z for all x ∈ L} under the bilinear pairing
    /// ⟨x, y⟩ = xᵀ·P·y. Requires L of full rank and P nondegenerate.
    pub fn dual(&self, pairing: &QMatrix) -> Result<IntLattice, LinalgError> {
        let n = self.ambient_rank;
        if self.rank() != n {
            return Err(LinalgError::NotFullRank);
        }
        if pairing.rows() != n || pairing.cols() != n {
            return Err(LinalgError::DimensionMismatch("pairing must be n x n".into()));
        }
        // condition: (1/d)·B·P·y ∈ Z^n, so the dual is spanned by the
        // columns of (B·P/d)^{-1}
        let bp = QMatrix::from_rows(self.rational_basis()).mul(pairing);
        let inv = bp.inverse()?;
        let cols: Vec<Vec<Rat>> = (0..n).map(|j| (0..n).map(|i| inv.get(i, j).clone()).collect()).collect();
        Ok(IntLattice::from_rational_rows(n, &cols))
    }

    /// The lattice {y ∈ Q^n : A·y ∈ Z^rows} for a matrix A of full column
    /// rank, i.e. the dual of the row span of A under the standard pairing.
    pub fn integral_preimage(a: &QMatrix) -> Result<IntLattice, LinalgError> {
        let n = a.cols();
        let rows = IntLattice::from_rational_rows(n, a.rows_vec());
        if rows.rank() != n {
            return Err(LinalgError::NotFullRank);
        }
        rows.dual(&QMatrix::identity(n))
    }

    /// Intersection of two lattices of the same ambient rank, computed via
    /// duality: (L ∩ M)* = L* + M* under the standard pairing.
    pub fn intersect(&self, other: &IntLattice) -> Result<IntLattice, LinalgError> {
        let n = self.ambient_rank;
        if other.ambient_rank != n {
            return Err(LinalgError::DimensionMismatch("ambient rank mismatch".into()));
        }
        let id = QMatrix::identity(n);
        let da = self.dual(&id)?;
        let db = other.dual(&id)?;
        let mut rows = da.rational_basis();
        rows.extend(db.rational_basis());
        IntLattice::from_rational_rows(n, &rows).dual(&id)
    }
}

/// The fixed sublattice {x ∈ L : T·x = x} of an involution T that maps L
/// into itself, as a canonical HNF lattice.
pub fn fixed_sublattice(lat: &IntLattice, t: &[Vec<Int>]) -> Result<IntLattice, LinalgError> {
    let n = lat.ambient_rank();
    if t.len() != n || t.iter().any(|row| row.len() != n) {
        return Err(LinalgError::DimensionMismatch("T must be n x n".into()));
    }
    // image of a (row) basis vector b under T: (T bᵀ)ᵀ = b · Tᵀ
    let apply = |b: &[Int]| -> Vec<Int> {
        (0..n)
            .map(|i| (0..n).map(|k| &t[i][k] * &b[k]).fold(Int::zero(), |acc, x| acc + x))
            .collect()
    };
    let den = Rat::from_integer(lat.denominator().clone());
    for b in lat.basis() {
        let tb = apply(b);
        let tb_rat: Vec<Rat> = tb.iter().map(|c| Rat::from_integer(c.clone()) / &den).collect();
        if !lat.contains(&tb_rat) {
            return Err(LinalgError::NotStable);
        }
        if apply(&tb) != *b {
            return Err(LinalgError::NotStable);
        }
    }
    // x = (1/d)·cᵀB fixed  ⟺  c ∈ left kernel of B·(Tᵀ − I)
    let k = lat.rank();
    let m: Vec<Vec<Int>> = lat
        .basis()
        .iter()
        .map(|b| {
            let tb = apply(b);
            (0..n).map(|j| &tb[j] - &b[j]).collect()
        })
        .collect();
    let (h, u) = hnf_with_transform(&m, n);
    let mut fixed_rows: Vec<Vec<Rat>> = Vec::new();
    for (hrow, urow) in h.iter().zip(&u) {
        if hrow.iter().all(Zero::is_zero) {
            // c = urow; fixed vector = (1/d)·Σ c_i b_i
            let mut v = vec![Rat::zero(); n];
            for (ci, b) in urow.iter().zip(lat.basis()) {
                if ci.is_zero() {
                    continue;
                }
                for (j, bj) in b.iter().enumerate() {
                    v[j] = &v[j] + &Rat::from_integer(ci * bj);
                }
            }
            for c in v.iter_mut() {
                *c = &*c / &den;
            }
            fixed_rows.push(v);
        }
    }
    let _ = k;
    Ok(IntLattice::from_rational_rows(n, &fixed_rows))
}
