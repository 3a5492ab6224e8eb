//! Exact sparse linear algebra: rank, kernels and quotient bases.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Sparse vector: sorted column indices with nonzero values.
pub type SparseVec<S> = Vec<(usize, S)>;

pub fn sparse_from_pairs<S: Scalar>(pairs: impl IntoIterator<Item = (usize, S)>) -> SparseVec<S> {
    let mut map: BTreeMap<usize, S> = BTreeMap::new();
    for (k, c) in pairs {
        let slot = map.entry(k).or_insert_with(S::zero);
        *slot = slot.clone() + c;
    }
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// `a - c * b`.
fn axpy<S: Scalar>(a: &[(usize, S)], c: &S, b: &[(usize, S)]) -> SparseVec<S> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(c.clone() * b[j].1.clone())));
            j += 1;
        } else {
            let v = a[i].1.clone() - c.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn normalize<S: Scalar>(mut v: SparseVec<S>) -> SparseVec<S> {
    let lead = v[0].1.clone();
    if !lead.is_one() {
        let inv = S::one() / lead;
        for (_, c) in v.iter_mut() {
            *c = c.clone() * inv.clone();
        }
    }
    v
}

/// Incremental row echelon form keyed by leading column.
#[derive(Debug, Clone)]
pub struct Echelon<S> {
    pivots: BTreeMap<usize, SparseVec<S>>,
}

impl<S: Scalar> Default for Echelon<S> {
    fn default() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }
}

impl<S: Scalar> Echelon<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `v` against the pivots; the result has no pivot leading column.
    pub fn reduce(&self, mut v: SparseVec<S>) -> SparseVec<S> {
        let mut start = 0;
        loop {
            let Some(pos) = v[start..].iter().position(|(k, _)| self.pivots.contains_key(k)) else {
                return v;
            };
            let pos = start + pos;
            let (col, c) = v[pos].clone();
            v = axpy(&v, &c, &self.pivots[&col]);
            start = pos;
            if start >= v.len() {
                return v;
            }
        }
    }

    /// Adds a row; returns true if it increased the rank.
    pub fn insert(&mut self, v: SparseVec<S>) -> bool {
        if v.is_empty() {
            return false;
        }
        let mut v = v;
        while let Some(p) = v.first().and_then(|(k, _)| self.pivots.get(k)) {
            let c = v[0].1.clone();
            v = axpy(&v, &c, p);
        }
        if v.is_empty() {
            return false;
        }
        let v = normalize(v);
        self.pivots.insert(v[0].0, v);
        true
    }

    /// Reduced row echelon rows keyed by pivot column.
    pub fn into_rref(self) -> BTreeMap<usize, SparseVec<S>> {
        let mut pivots = self.pivots;
        let cols: Vec<usize> = pivots.keys().copied().collect();
        for &col in cols.iter().rev() {
            let row = pivots[&col].clone();
            for &other in cols.iter().filter(|&&c| c < col) {
                let r = &pivots[&other];
                if let Ok(idx) = r.binary_search_by_key(&col, |(k, _)| *k) {
                    let c = r[idx].1.clone();
                    let updated = axpy(r, &c, &row);
                    pivots.insert(other, updated);
                }
            }
        }
        pivots
    }
}

/// Rank of the span of `rows`.
pub fn rank<S: Scalar>(rows: impl IntoIterator<Item = SparseVec<S>>) -> usize {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

/// Basis of `{ c : sum_r c_r * rows[r] = 0 }`, i.e. the left kernel of the row matrix.
pub fn left_kernel<S: Scalar>(rows: &[SparseVec<S>], ncols: usize) -> Vec<SparseVec<S>> {
    // Columns of the transpose are the rows; solve M^T c = 0.
    let mut transposed: Vec<Vec<(usize, S)>> = vec![Vec::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row {
            transposed[*c].push((r, v.clone()));
        }
    }
    kernel(&transposed, rows.len())
}

/// Basis of `{ x : rows * x = 0 }` with `x` of length `nvars`.
pub fn kernel<S: Scalar>(rows: &[SparseVec<S>], nvars: usize) -> Vec<SparseVec<S>> {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r.clone());
    }
    let rref = ech.into_rref();
    let mut out = Vec::new();
    for free in (0..nvars).filter(|c| !rref.contains_key(c)) {
        let mut v = vec![(free, S::one())];
        for (&pc, row) in &rref {
            if let Ok(idx) = row.binary_search_by_key(&free, |(k, _)| *k) {
                v.push((pc, -row[idx].1.clone()));
            }
        }
        v.sort_by_key(|(k, _)| *k);
        out.push(v);
    }
    out
}

/// Vectors among `candidates` extending a basis of span(`base`) to a basis of
/// span(`base` + `candidates`); a basis of the quotient.
pub fn quotient_basis<S: Scalar>(base: &[SparseVec<S>], candidates: &[SparseVec<S>]) -> Vec<usize> {
    let mut ech = Echelon::new();
    for b in base {
        ech.insert(b.clone());
    }
    candidates
        .iter()
        .enumerate()
        .filter_map(|(i, v)| ech.insert(v.clone()).then_some(i))
        .collect()
}

/// Dense determinant-free invertibility test for a square matrix.
pub fn is_invertible<S: Scalar>(m: &[Vec<S>]) -> bool {
    let n = m.len();
    let rows = m.iter().map(|r| {
        r.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
    });
    rank(rows) == n
}
