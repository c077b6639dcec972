//! Finite-dimensional Lie algebras as exact-rational structure constants.
//!
//! Only ordered pairs `a < b` are stored; the reversed bracket is derived
//! from antisymmetry, never stored, so the table cannot hold inconsistent
//! duplicates. `[X_a, X_a] = 0` is implicit.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::CoreError;
use crate::matrix::{invert, rank};
use crate::rational::Rat;

/// Sparse coefficient vector over the basis: sorted `(index, coeff)` pairs.
pub type SparseVec = Vec<(usize, Rat)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    pub name: String,
    pub dim: usize,
    pub basis_names: Vec<String>,
    /// `[X_a, X_b] = sum coeff * X_c` for stored pairs `a < b` only.
    pub brackets: BTreeMap<(usize, usize), SparseVec>,
    /// Declared facts with citations (semisimplicity, pi_1, ...); never computed.
    pub metadata: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    pub coeffs: Vec<Rat>,
}

impl AlgebraElement {
    pub fn zero(dim: usize) -> Self {
        Self {
            coeffs: vec![Rat::zero(); dim],
        }
    }

    pub fn basis(i: usize, dim: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coeffs[i] = Rat::from_integer(1.into());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add_scaled(&mut self, other: &SparseVec, scale: &Rat) {
        for (i, c) in other {
            self.coeffs[*i] = &self.coeffs[*i] + scale * c;
        }
    }
}

impl LieAlgebra {
    /// Builds an algebra and validates indices. Jacobi is not checked here;
    /// call [`LieAlgebra::jacobi_residual`] for that.
    pub fn new(
        name: impl Into<String>,
        basis_names: Vec<String>,
        brackets: BTreeMap<(usize, usize), SparseVec>,
    ) -> Result<Self, CoreError> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(CoreError::InvalidParameter("empty basis".into()));
        }
        {
            let mut sorted = basis_names.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != dim {
                return Err(CoreError::InvalidParameter(
                    "duplicate basis names".into(),
                ));
            }
        }
        let mut clean: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        for ((a, b), vec) in brackets {
            if a >= b || b >= dim {
                return Err(CoreError::InvalidParameter(format!(
                    "bracket pair ({a},{b}) out of range for dim {dim} (need a < b < dim)"
                )));
            }
            let mut v: SparseVec = vec.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            v.sort_by_key(|(i, _)| *i);
            for (i, _) in &v {
                if *i >= dim {
                    return Err(CoreError::InvalidParameter(format!(
                        "bracket ({a},{b}) references basis index {i} >= dim {dim}"
                    )));
                }
            }
            if !v.is_empty() {
                clean.insert((a, b), v);
            }
        }
        Ok(Self {
            name: name.into(),
            dim,
            basis_names,
            brackets: clean,
            metadata: BTreeMap::new(),
        })
    }

    pub fn with_metadata(mut self, key: &str, value: &str) -> Self {
        self.metadata.insert(key.to_string(), value.to_string());
        self
    }

    /// `[X_a, X_b]` as a sparse vector, for any index order.
    pub fn bracket_basis(&self, a: usize, b: usize) -> SparseVec {
        if a == b {
            return Vec::new();
        }
        let (lo, hi, flip) = if a < b { (a, b, false) } else { (b, a, true) };
        match self.brackets.get(&(lo, hi)) {
            None => Vec::new(),
            Some(v) if !flip => v.clone(),
            Some(v) => v.iter().map(|(i, c)| (*i, -c)).collect(),
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
    ) -> Result<AlgebraElement, CoreError> {
        for e in [x, y] {
            if e.coeffs.len() != self.dim {
                return Err(CoreError::DimensionMismatch {
                    expected: self.dim,
                    got: e.coeffs.len(),
                });
            }
        }
        let mut out = AlgebraElement::zero(self.dim);
        for ((a, b), v) in &self.brackets {
            // [x, y] picks up (x_a y_b - x_b y_a) [X_a, X_b]
            let s = &x.coeffs[*a] * &y.coeffs[*b] - &x.coeffs[*b] * &y.coeffs[*a];
            if !s.is_zero() {
                out.add_scaled(v, &s);
            }
        }
        Ok(out)
    }

    /// Every basis triple `a < b < c` whose cyclic Jacobi sum is nonzero,
    /// with the offending residual. Empty means the table is a Lie algebra.
    pub fn jacobi_residual(&self) -> Vec<((usize, usize, usize), AlgebraElement)> {
        let mut failures = Vec::new();
        for a in 0..self.dim {
            for b in (a + 1)..self.dim {
                let ab = self.bracket_basis(a, b);
                for c in (b + 1)..self.dim {
                    let mut sum = AlgebraElement::zero(self.dim);
                    for (i, coeff) in &ab {
                        sum.add_scaled(&self.bracket_basis(*i, c), coeff);
                    }
                    for (i, coeff) in &self.bracket_basis(b, c) {
                        sum.add_scaled(&self.bracket_basis(*i, a), coeff);
                    }
                    for (i, coeff) in &self.bracket_basis(c, a) {
                        sum.add_scaled(&self.bracket_basis(*i, b), coeff);
                    }
                    if !sum.is_zero() {
                        failures.push(((a, b, c), sum));
                    }
                }
            }
        }
        failures
    }

    pub fn is_jacobi(&self) -> bool {
        self.jacobi_residual().is_empty()
    }

    /// Rewrites the algebra in the basis `Y_i = sum_j T[i][j] X_j`.
    /// `T` must be invertible.
    pub fn change_basis(&self, t: &[Vec<Rat>]) -> Result<LieAlgebra, CoreError> {
        if t.len() != self.dim || t.iter().any(|r| r.len() != self.dim) {
            return Err(CoreError::DimensionMismatch {
                expected: self.dim,
                got: t.len(),
            });
        }
        // coefficients w of v over the new basis solve T^t w = v
        let t_t: Vec<Vec<Rat>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| t[j][i].clone()).collect())
            .collect();
        let inv = invert(&t_t).ok_or_else(|| {
            CoreError::InvalidParameter("basis-change matrix is singular".into())
        })?;
        let mut brackets = BTreeMap::new();
        for i in 0..self.dim {
            let yi = AlgebraElement {
                coeffs: t[i].clone(),
            };
            for j in (i + 1)..self.dim {
                let yj = AlgebraElement {
                    coeffs: t[j].clone(),
                };
                let v = self.bracket(&yi, &yj)?;
                let mut w: SparseVec = Vec::new();
                for k in 0..self.dim {
                    let mut s = Rat::zero();
                    for (l, vl) in v.coeffs.iter().enumerate() {
                        if !vl.is_zero() {
                            s += &inv[k][l] * vl;
                        }
                    }
                    if !s.is_zero() {
                        w.push((k, s));
                    }
                }
                if !w.is_empty() {
                    brackets.insert((i, j), w);
                }
            }
        }
        LieAlgebra::new(
            format!("{}'", self.name),
            (0..self.dim).map(|i| format!("Y{}", i + 1)).collect(),
            brackets,
        )
    }

    /// True when the bracket tables agree entry-for-entry (names ignored).
    pub fn same_table(&self, other: &LieAlgebra) -> bool {
        self.dim == other.dim && self.brackets == other.brackets
    }
}

/// Random-looking invertible check helper used by tests and the catalog.
pub fn is_invertible(t: &[Vec<Rat>]) -> bool {
    !t.is_empty() && rank(t) == t.len()
}
