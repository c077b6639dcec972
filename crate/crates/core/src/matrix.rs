//! Exact linear algebra over the rationals.
//!
//! The cohomology systems are large and very sparse (one constraint row per
//! basis triple, a handful of entries each), so the elimination kernel works
//! on sorted sparse rows. Dense wrappers cover the small cases. The reduced
//! row-echelon form of a matrix is unique, which is what makes cocycle
//! representative bases reproducible across runs.

use num_traits::{One, Zero};

use crate::rational::Rat;

/// Sorted-by-column sparse row; no zero coefficients stored.
pub type SparseRow = Vec<(usize, Rat)>;

/// Unique reduced row-echelon form: one row per pivot, sorted by pivot column.
#[derive(Debug, Clone)]
pub struct Rref {
    pub cols: usize,
    pub pivot_cols: Vec<usize>,
    pub rows: Vec<SparseRow>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }
}

/// `r -= c * p`, merging sorted sparse rows.
fn row_axpy(r: &SparseRow, c: &Rat, p: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        match (r.get(i), p.get(j)) {
            (Some((ci, vi)), Some((cj, vj))) if ci == cj => {
                let v = vi - c * vj;
                if !v.is_zero() {
                    out.push((*ci, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ci, vi)), Some((cj, _))) if ci < cj => {
                out.push((*ci, vi.clone()));
                i += 1;
            }
            (Some(_), Some((cj, vj))) => {
                out.push((*cj, -(c * vj)));
                j += 1;
            }
            (Some((ci, vi)), None) => {
                out.push((*ci, vi.clone()));
                i += 1;
            }
            (None, Some((cj, vj))) => {
                out.push((*cj, -(c * vj)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn row_scale(r: &mut SparseRow, c: &Rat) {
    for (_, v) in r.iter_mut() {
        *v = &*v * c;
    }
}

/// Incremental row-echelon builder. Rows are absorbed one at a time; the
/// finished result is the canonical RREF regardless of insertion order.
pub struct RrefBuilder {
    cols: usize,
    pivot_of: Vec<Option<usize>>,
    rows: Vec<SparseRow>,
    pivot_cols: Vec<usize>,
}

impl RrefBuilder {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            pivot_of: vec![None; cols],
            rows: Vec::new(),
            pivot_cols: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    /// Clears every entry of `row` that sits on an existing pivot column.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        loop {
            let hit = row
                .iter()
                .find_map(|(c, v)| self.pivot_of[*c].map(|ri| (ri, v.clone())));
            match hit {
                Some((ri, coeff)) => row = row_axpy(&row, &coeff, &self.rows[ri]),
                None => break,
            }
        }
        row
    }

    /// Absorbs a row. Returns the reduced, leading-1-normalized residual when
    /// the row was independent of the span so far, `None` when dependent.
    pub fn insert(&mut self, row: SparseRow) -> Option<SparseRow> {
        let mut row = self.reduce(row);
        if row.is_empty() {
            return None;
        }
        let lead = row[0].0;
        let inv = Rat::one() / row[0].1.clone();
        row_scale(&mut row, &inv);
        // back-substitute the new pivot column out of earlier pivot rows
        let new_index = self.rows.len();
        for ri in 0..self.rows.len() {
            if let Some(v) = self.rows[ri]
                .iter()
                .find(|(c, _)| *c == lead)
                .map(|(_, v)| v.clone())
            {
                self.rows[ri] = row_axpy(&self.rows[ri], &v, &row);
            }
        }
        self.pivot_of[lead] = Some(new_index);
        self.pivot_cols.push(lead);
        self.rows.push(row.clone());
        Some(row)
    }

    pub fn finish(self) -> Rref {
        // canonical order: ascending pivot column
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivot_cols[i]);
        let rows = order.iter().map(|&i| self.rows[i].clone()).collect();
        let mut pivot_cols = self.pivot_cols;
        pivot_cols.sort_unstable();
        Rref {
            cols: self.cols,
            pivot_cols,
            rows,
        }
    }
}

/// Reduced row-echelon form of a sparse row collection.
pub fn rref_sparse(input: impl IntoIterator<Item = SparseRow>, cols: usize) -> Rref {
    let mut b = RrefBuilder::new(cols);
    for row in input {
        b.insert(row);
    }
    b.finish()
}

/// Kernel basis from free-column back-substitution, one vector per free
/// column in ascending column order.
pub fn nullspace_sparse(r: &Rref) -> Vec<SparseRow> {
    let is_pivot = {
        let mut v = vec![false; r.cols];
        for &c in &r.pivot_cols {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..r.cols {
        if is_pivot[free] {
            continue;
        }
        let mut vec: SparseRow = Vec::new();
        for (row, &pc) in r.rows.iter().zip(&r.pivot_cols) {
            if let Some((_, v)) = row.iter().find(|(c, _)| *c == free) {
                vec.push((pc, -v.clone()));
            }
        }
        vec.push((free, Rat::one()));
        vec.sort_by_key(|(c, _)| *c);
        basis.push(vec);
    }
    basis
}

pub fn dense_to_sparse(row: &[Rat]) -> SparseRow {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (c, v.clone()))
        .collect()
}

pub fn sparse_to_dense(row: &SparseRow, cols: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); cols];
    for (c, v) in row {
        out[*c] = v.clone();
    }
    out
}

/// Dense reduced row-echelon form: (reduced matrix, rank, pivot columns).
/// The reduced matrix keeps the input shape, pivot rows first.
pub fn rref(m: &[Vec<Rat>]) -> (Vec<Vec<Rat>>, usize, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let r = rref_sparse(m.iter().map(|row| dense_to_sparse(row)), cols);
    let rank = r.rank();
    let mut out: Vec<Vec<Rat>> = r.rows.iter().map(|row| sparse_to_dense(row, cols)).collect();
    out.resize(rows, vec![Rat::zero(); cols]);
    (out, rank, r.pivot_cols)
}

/// Dense kernel basis.
pub fn nullspace_basis(m: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let r = rref_sparse(m.iter().map(|row| dense_to_sparse(row)), cols);
    nullspace_sparse(&r)
        .iter()
        .map(|v| sparse_to_dense(v, cols))
        .collect()
}

/// Inverse of a square dense matrix, `None` if singular.
pub fn invert(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let aug: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "invert expects a square matrix");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let r = rref_sparse(aug.iter().map(|row| dense_to_sparse(row)), 2 * n);
    if r.pivot_cols != (0..n).collect::<Vec<_>>() {
        return None;
    }
    Some(
        r.rows
            .iter()
            .map(|row| {
                let dense = sparse_to_dense(row, 2 * n);
                dense[n..].to_vec()
            })
            .collect(),
    )
}

/// Signature (positive, negative, zero inertia) of a symmetric rational
/// matrix by congruence diagonalization.
pub fn symmetric_signature(m: &[Vec<Rat>]) -> (usize, usize, usize) {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
    let mut live: Vec<usize> = (0..n).collect();
    while let Some(&first) = live.first() {
        // find a nonzero diagonal pivot, fixing a zero diagonal with a
        // nonzero off-diagonal entry by a row+column addition first
        let pivot = live.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let off = live
                    .iter()
                    .flat_map(|&i| live.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i < j && !a[i][j].is_zero());
                match off {
                    None => {
                        zero += live.len();
                        break;
                    }
                    Some((i, j)) => {
                        for k in 0..n {
                            let v = a[j][k].clone();
                            a[i][k] = &a[i][k] + &v;
                        }
                        for k in 0..n {
                            let v = a[k][j].clone();
                            a[k][i] = &a[k][i] + &v;
                        }
                        i
                    }
                }
            }
        };
        let d = a[p][p].clone();
        if d.numer().sign() == num_bigint::Sign::Plus {
            pos += 1;
        } else {
            neg += 1;
        }
        let others: Vec<usize> = live.iter().copied().filter(|&i| i != p).collect();
        for &i in &others {
            if a[i][p].is_zero() {
                continue;
            }
            let f = &a[i][p] / &d;
            for k in 0..n {
                let v = &f * &a[p][k];
                a[i][k] = &a[i][k] - &v;
            }
            for k in 0..n {
                let v = &f * &a[k][p];
                a[k][i] = &a[k][i] - &v;
            }
        }
        live = others;
        let _ = first;
    }
    (pos, neg, zero)
}

/// Rank of a dense matrix.
pub fn rank(m: &[Vec<Rat>]) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    rref_sparse(m.iter().map(|row| dense_to_sparse(row)), cols).rank()
}
