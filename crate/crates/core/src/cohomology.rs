//! Second Lie-algebra cohomology with trivial coefficients, and the central
//! extensions it classifies.
//!
//! A 2-cochain is an antisymmetric bilinear form stored on ordered pairs
//! `a < b`. Cocycles are the forms closed under the cyclic condition
//! `w([x,y],z) + w([y,z],x) + w([z,x],y) = 0` (exactly the Jacobi closure of
//! the extended bracket); coboundaries are the forms `f([x,y])` coming from
//! generator translations `X_a -> X_a + I_a` and classify the trivial
//! extensions. Representatives of H^2 are chosen by deterministic pivot
//! completion of the coboundary basis inside the cocycle basis, leading
//! entry normalized to 1.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{AlgebraElement, LieAlgebra, SparseVec};
use crate::error::CoreError;
use crate::matrix::{dense_to_sparse, nullspace_sparse, rref_sparse, sparse_to_dense, RrefBuilder, SparseRow};
use crate::rational::Rat;

/// Number of ordered pairs a < b in dimension `d`.
pub fn num_pairs(d: usize) -> usize {
    d * (d - 1) / 2
}

/// Flat index of the ordered pair `(a, b)`, `a < b`, in lex order.
pub fn pair_index(a: usize, b: usize, d: usize) -> usize {
    debug_assert!(a < b && b < d);
    a * d - a * (a + 1) / 2 + (b - a - 1)
}

/// Inverse of [`pair_index`].
pub fn pair_from_index(mut p: usize, d: usize) -> (usize, usize) {
    for a in 0..d {
        let row = d - a - 1;
        if p < row {
            return (a, a + 1 + p);
        }
        p -= row;
    }
    panic!("pair index out of range");
}

/// Antisymmetric bilinear form on a `d`-dimensional algebra, stored on
/// ordered pairs `a < b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCochain {
    pub algebra_dim: usize,
    pub entries: Vec<Rat>,
}

impl TwoCochain {
    pub fn zero(d: usize) -> Self {
        Self {
            algebra_dim: d,
            entries: vec![Rat::zero(); num_pairs(d)],
        }
    }

    pub fn from_pairs(d: usize, pairs: &[(usize, usize, Rat)]) -> Self {
        let mut c = Self::zero(d);
        for (a, b, v) in pairs {
            let (lo, hi, flip) = if a < b { (*a, *b, false) } else { (*b, *a, true) };
            let v = if flip { -v } else { v.clone() };
            c.entries[pair_index(lo, hi, d)] = v;
        }
        c
    }

    /// `w(X_a, X_b)` for any index order; zero on the diagonal.
    pub fn eval(&self, a: usize, b: usize) -> Rat {
        if a == b {
            return Rat::zero();
        }
        let (lo, hi, flip) = if a < b { (a, b, false) } else { (b, a, true) };
        let v = self.entries[pair_index(lo, hi, self.algebra_dim)].clone();
        if flip {
            -v
        } else {
            v
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|v| v.is_zero())
    }

    /// Scales so the first nonzero entry is 1; no-op on the zero cochain.
    pub fn normalized(&self) -> Self {
        match self.entries.iter().find(|v| !v.is_zero()) {
            None => self.clone(),
            Some(lead) => {
                let inv = Rat::one() / lead.clone();
                Self {
                    algebra_dim: self.algebra_dim,
                    entries: self.entries.iter().map(|v| v * &inv).collect(),
                }
            }
        }
    }

    /// Sparse (pair, value) view, used by reports.
    pub fn nonzero_pairs(&self) -> Vec<(usize, usize, Rat)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(p, v)| {
                let (a, b) = pair_from_index(p, self.algebra_dim);
                (a, b, v.clone())
            })
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct CohomologyResult {
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_h2: usize,
    pub cocycle_basis: Vec<TwoCochain>,
    pub coboundary_basis: Vec<TwoCochain>,
    pub representatives: Vec<TwoCochain>,
}

#[derive(Debug, Clone)]
pub struct CentralExtension {
    pub base: LieAlgebra,
    pub cochains: Vec<TwoCochain>,
    pub extended: LieAlgebra,
    /// False when the supplied cochains are dependent modulo coboundaries;
    /// the extension is still constructed, just not maximal/nontrivial.
    pub independent_mod_coboundaries: bool,
    /// Nonempty exactly when some supplied cochain is not a cocycle; lists
    /// the offending Jacobi triples of the extended table.
    pub jacobi_failures: Vec<((usize, usize, usize), AlgebraElement)>,
}

fn require_jacobi(l: &LieAlgebra) -> Result<(), CoreError> {
    let failures = l.jacobi_residual();
    if let Some(((a, b, c), _)) = failures.first() {
        return Err(CoreError::JacobiViolation {
            name: l.name.clone(),
            failures: failures.len(),
            a: *a,
            b: *b,
            c: *c,
        });
    }
    Ok(())
}

/// The cocycle constraint row for one triple `a < b < c`:
/// coefficients of `w([X_a,X_b],X_c) + w([X_b,X_c],X_a) + w([X_c,X_a],X_b)`
/// over the pair coordinates.
fn cocycle_row(l: &LieAlgebra, a: usize, b: usize, c: usize) -> SparseRow {
    let d = l.dim;
    let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
    let mut add = |bracket: SparseVec, other: usize| {
        for (e, coeff) in bracket {
            if e == other {
                continue;
            }
            let (lo, hi, flip) = if e < other {
                (e, other, false)
            } else {
                (other, e, true)
            };
            let signed = if flip { -&coeff } else { coeff };
            let slot = acc.entry(pair_index(lo, hi, d)).or_insert_with(Rat::zero);
            *slot = &*slot + &signed;
        }
    };
    add(l.bracket_basis(a, b), c);
    add(l.bracket_basis(b, c), a);
    add(l.bracket_basis(c, a), b);
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

fn cocycle_rows(l: &LieAlgebra) -> impl Iterator<Item = SparseRow> + '_ {
    let d = l.dim;
    (0..d).flat_map(move |a| {
        ((a + 1)..d).flat_map(move |b| ((b + 1)..d).map(move |c| cocycle_row(l, a, b, c)))
    })
}

/// Exact basis of Z^2(L): one linear constraint per basis triple, kernel by
/// free-column back-substitution. Refuses algebras that fail Jacobi.
pub fn cocycle_space(l: &LieAlgebra) -> Result<Vec<TwoCochain>, CoreError> {
    require_jacobi(l)?;
    let cols = num_pairs(l.dim);
    let r = rref_sparse(cocycle_rows(l), cols);
    Ok(nullspace_sparse(&r)
        .iter()
        .map(|v| TwoCochain {
            algebra_dim: l.dim,
            entries: sparse_to_dense(v, cols),
        })
        .collect())
}

/// Sparse rows spanning B^2(L): the image of the dual under `f -> f([.,.])`.
fn coboundary_rows(l: &LieAlgebra) -> Vec<SparseRow> {
    let d = l.dim;
    (0..d)
        .map(|k| {
            let mut row: SparseRow = Vec::new();
            for ((a, b), v) in &l.brackets {
                if let Some((_, coeff)) = v.iter().find(|(i, _)| *i == k) {
                    row.push((pair_index(*a, *b, d), coeff.clone()));
                }
            }
            row.sort_by_key(|(c, _)| *c);
            row
        })
        .collect()
}

/// Exact basis of B^2(L) as the canonical RREF of the dual-image rows.
pub fn coboundary_space(l: &LieAlgebra) -> Vec<TwoCochain> {
    let cols = num_pairs(l.dim);
    let r = rref_sparse(coboundary_rows(l), cols);
    r.rows
        .iter()
        .map(|row| TwoCochain {
            algebra_dim: l.dim,
            entries: sparse_to_dense(row, cols),
        })
        .collect()
}

/// The coboundary of a linear functional `f`, `w_f(x, y) = f([x, y])`.
pub fn coboundary_of(l: &LieAlgebra, f: &[Rat]) -> TwoCochain {
    let d = l.dim;
    let mut c = TwoCochain::zero(d);
    for ((a, b), v) in &l.brackets {
        let mut s = Rat::zero();
        for (i, coeff) in v {
            s += &f[*i] * coeff;
        }
        c.entries[pair_index(*a, *b, d)] = s;
    }
    c
}

/// Z^2, B^2, dim H^2 and deterministic representatives.
pub fn second_cohomology(l: &LieAlgebra) -> Result<CohomologyResult, CoreError> {
    let cols = num_pairs(l.dim);
    let cocycle_basis = cocycle_space(l)?;
    let coboundary_basis = coboundary_space(l);

    // pivot completion: seed with B^2, absorb Z^2 vectors in order, keep the
    // residual of each one that raises the rank
    let mut builder = RrefBuilder::new(cols);
    for b in &coboundary_basis {
        builder.insert(dense_to_sparse(&b.entries));
    }
    let mut representatives = Vec::new();
    for z in &cocycle_basis {
        if let Some(residual) = builder.insert(dense_to_sparse(&z.entries)) {
            representatives.push(
                TwoCochain {
                    algebra_dim: l.dim,
                    entries: sparse_to_dense(&residual, cols),
                }
                .normalized(),
            );
        }
    }

    let dim_cocycles = cocycle_basis.len();
    let dim_coboundaries = coboundary_basis.len();
    Ok(CohomologyResult {
        dim_cocycles,
        dim_coboundaries,
        dim_h2: dim_cocycles - dim_coboundaries,
        cocycle_basis,
        coboundary_basis,
        representatives,
    })
}

/// True iff `[x, X_b] = 0` for every basis element.
pub fn is_central(l: &LieAlgebra, x: &AlgebraElement) -> Result<bool, CoreError> {
    for b in 0..l.dim {
        let e = AlgebraElement::basis(b, l.dim);
        if !l.bracket(x, &e)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Adjoins one central generator per cochain:
/// `[X_a, X_b] = c X_c + sum_m w_m(X_a, X_b) I_m`, `[X_a, I_m] = [I_m, I_k] = 0`.
/// Non-cocycle input is not rejected; the result carries its Jacobi failures
/// so the offending triples can be inspected.
pub fn central_extension(
    l: &LieAlgebra,
    cochains: &[TwoCochain],
) -> Result<CentralExtension, CoreError> {
    for c in cochains {
        if c.algebra_dim != l.dim {
            return Err(CoreError::DimensionMismatch {
                expected: num_pairs(l.dim),
                got: c.entries.len(),
            });
        }
    }
    let d = l.dim;
    let m = cochains.len();

    let mut basis_names = l.basis_names.clone();
    for i in 1..=m {
        basis_names.push(format!("I{i}"));
    }
    let mut brackets: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
    for a in 0..d {
        for b in (a + 1)..d {
            let mut v = l.bracket_basis(a, b);
            for (i, c) in cochains.iter().enumerate() {
                let w = c.eval(a, b);
                if !w.is_zero() {
                    v.push((d + i, w));
                }
            }
            if !v.is_empty() {
                brackets.insert((a, b), v);
            }
        }
    }
    let extended = LieAlgebra::new(format!("{}^", l.name), basis_names, brackets)?;

    // independence modulo B^2: ranks with and without the cochains
    let cols = num_pairs(d);
    let mut builder = RrefBuilder::new(cols);
    for row in coboundary_rows(l) {
        builder.insert(row);
    }
    let base_rank = builder.rank();
    for c in cochains {
        builder.insert(dense_to_sparse(&c.entries));
    }
    let independent = builder.rank() == base_rank + m;

    let jacobi_failures = extended.jacobi_residual();
    Ok(CentralExtension {
        base: l.clone(),
        cochains: cochains.to_vec(),
        extended,
        independent_mod_coboundaries: independent,
        jacobi_failures,
    })
}
