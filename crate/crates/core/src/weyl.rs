//! Exact symbolic Weyl algebra: the enveloping algebra of the
//! Weyl-Heisenberg generators `Z_1..Z_2n` with a formal central `I` and the
//! relation `Z_a Z_b - Z_b Z_a = zeta_{ab} I`.
//!
//! Polynomials are kept in normal order (ascending generator index); every
//! transposition of adjacent generators emits a `zeta * I` correction.
//! Keeping `I` as a commuting formal variable rather than a number is what
//! lets the symplectic structure constants be derived exactly, "up to a
//! central factor", by dividing a single power of `I` back out.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::SparseVec;
use crate::error::CoreError;
use crate::rational::{rat, Rat};

pub const DEFAULT_DEGREE_CAP: usize = 8;

/// Normal-ordered monomial `Z_1^{e_1} ... Z_{2n}^{e_{2n}} I^{i_power}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylMonomial {
    pub exponents: Vec<u32>,
    pub i_power: u32,
}

impl WeylMonomial {
    pub fn unit(n: usize) -> Self {
        Self {
            exponents: vec![0; 2 * n],
            i_power: 0,
        }
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylPolynomial {
    pub n: usize,
    pub terms: BTreeMap<WeylMonomial, Rat>,
}

impl WeylPolynomial {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rat) -> Self {
        let mut p = Self::zero(n);
        p.add_term(WeylMonomial::unit(n), c);
        p
    }

    /// The generator `Z_k` (0-based).
    pub fn generator(n: usize, k: usize) -> Self {
        assert!(k < 2 * n);
        let mut m = WeylMonomial::unit(n);
        m.exponents[k] = 1;
        let mut p = Self::zero(n);
        p.add_term(m, Rat::one());
        p
    }

    /// The central generator `I`.
    pub fn central(n: usize) -> Self {
        let mut m = WeylMonomial::unit(n);
        m.i_power = 1;
        let mut p = Self::zero(n);
        p.add_term(m, Rat::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: WeylMonomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rat::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            // look the key up again to drop it; entry was consumed above
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiplies every term by `I`.
    pub fn times_central(&self) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| {
                    let mut m = m.clone();
                    m.i_power += 1;
                    (m, v.clone())
                })
                .collect(),
        }
    }
}

/// The Weyl algebra over `heisenberg(n)`, with a degree cap bounding memory.
#[derive(Debug, Clone)]
pub struct WeylAlgebra {
    pub n: usize,
    pub degree_cap: usize,
}

impl WeylAlgebra {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }

    pub fn with_degree_cap(n: usize, degree_cap: usize) -> Self {
        Self { n, degree_cap }
    }

    /// `zeta_{ab}` for 0-based indices: the block form [[0, 1_n], [-1_n, 0]].
    pub fn zeta(&self, a: usize, b: usize) -> i64 {
        if b == a + self.n {
            1
        } else if a == b + self.n {
            -1
        } else {
            0
        }
    }

    /// `mono * Z_k`, reordered: moving `Z_k` left past each `Z_j^m` with
    /// `j > k` uses `Z_j^m Z_k = Z_k Z_j^m + m zeta_{jk} I Z_j^{m-1}`.
    fn mono_times_gen(&self, mono: &WeylMonomial, k: usize) -> WeylPolynomial {
        let j = match (k + 1..2 * self.n).rev().find(|&j| mono.exponents[j] > 0) {
            None => {
                let mut m = mono.clone();
                m.exponents[k] += 1;
                let mut p = WeylPolynomial::zero(self.n);
                p.add_term(m, Rat::one());
                return p;
            }
            Some(j) => j,
        };
        let m_j = mono.exponents[j];
        let mut rest = mono.clone();
        rest.exponents[j] = 0;

        // (rest Z_j^m) Z_k = (rest Z_k) Z_j^m + m zeta_{jk} I rest Z_j^{m-1}
        let mut out = WeylPolynomial::zero(self.n);
        let swapped = self.mono_times_gen(&rest, k);
        for (m, c) in &swapped.terms {
            let mut m = m.clone();
            m.exponents[j] += m_j;
            out.add_term(m, c.clone());
        }
        let z = self.zeta(j, k);
        if z != 0 {
            let mut m = rest;
            m.exponents[j] = m_j - 1;
            m.i_power += 1;
            out.add_term(m, rat(z * m_j as i64));
        }
        out
    }

    /// Product of normal-ordered polynomials, in normal order.
    pub fn mul(
        &self,
        p: &WeylPolynomial,
        q: &WeylPolynomial,
    ) -> Result<WeylPolynomial, CoreError> {
        let deg = p.degree() + q.degree();
        if deg > self.degree_cap {
            return Err(CoreError::DegreeCap {
                got: deg,
                cap: self.degree_cap,
            });
        }
        let mut out = WeylPolynomial::zero(self.n);
        for (m1, c1) in &p.terms {
            for (m2, c2) in &q.terms {
                let mut partial = WeylPolynomial::zero(self.n);
                partial.add_term(m1.clone(), c1 * c2);
                for k in 0..2 * self.n {
                    for _ in 0..m2.exponents[k] {
                        let mut next = WeylPolynomial::zero(self.n);
                        for (m, c) in &partial.terms {
                            let prod = self.mono_times_gen(m, k);
                            for (pm, pc) in &prod.terms {
                                next.add_term(pm.clone(), pc * c);
                            }
                        }
                        partial = next;
                    }
                }
                for (m, c) in partial.terms {
                    let mut m = m;
                    m.i_power += m2.i_power;
                    out.add_term(m, c);
                }
            }
        }
        Ok(out)
    }

    /// Normal-orders a formal left-to-right product of generators
    /// (0-based indices into `Z_1..Z_2n`).
    pub fn normal_order(&self, word: &[usize]) -> Result<WeylPolynomial, CoreError> {
        if word.len() > self.degree_cap {
            return Err(CoreError::DegreeCap {
                got: word.len(),
                cap: self.degree_cap,
            });
        }
        let mut p = WeylPolynomial::constant(self.n, Rat::one());
        for &k in word {
            assert!(k < 2 * self.n, "generator index out of range");
            p = self.mul(&p, &WeylPolynomial::generator(self.n, k))?;
        }
        Ok(p)
    }

    /// `normal_order(pq - qp)`, exact.
    pub fn commutator(
        &self,
        p: &WeylPolynomial,
        q: &WeylPolynomial,
    ) -> Result<WeylPolynomial, CoreError> {
        Ok(self.mul(p, q)?.sub(&self.mul(q, p)?))
    }

    /// The symmetrized quadratic generator
    /// `W_{ab} = (Z_a Z_b + Z_b Z_a) / 2` (0-based indices).
    ///
    /// This is the unique quadratic form compatible with the target relation
    /// `[W_{ab}, Z_k] = I (zeta_{ak} Z_b + zeta_{bk} Z_a)`; see
    /// `derive_sp_constants` which validates it exhaustively.
    pub fn quadratic_generator(&self, a: usize, b: usize) -> WeylPolynomial {
        let half = Rat::new(1.into(), 2.into());
        self.normal_order(&[a, b])
            .unwrap()
            .add(&self.normal_order(&[b, a]).unwrap())
            .scale(&half)
    }
}

/// Basis index of the unordered pair `a <= b` over `0..2n`, lex order.
pub fn sym_index(a: usize, b: usize, two_n: usize) -> usize {
    debug_assert!(a <= b && b < two_n);
    a * two_n - (a * a - a) / 2 - a + b
}

/// All unordered pairs `a <= b` over `0..2n`, in basis order.
pub fn sym_pairs(two_n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for a in 0..two_n {
        for b in a..two_n {
            v.push((a, b));
        }
    }
    v
}

/// Structure constants for sp(2n) over the `W_{ab}` basis, derived from the
/// Weyl-algebra commutators.
#[derive(Debug, Clone)]
pub struct SpConstants {
    pub n: usize,
    /// Basis pairs in `sym_pairs` order.
    pub basis: Vec<(usize, usize)>,
    /// `[W_i, W_j] = sum coeff * W_k` for `i < j` in basis order.
    pub brackets: BTreeMap<(usize, usize), SparseVec>,
}

/// Computes every `[W_{ab}, W_{ce}]`, checks it has the form
/// `I * (linear combination of W)`, divides the `I` out and returns the
/// rational constants. Any other shape is reported as an error with the
/// offending polynomial.
pub fn derive_sp_constants(n: usize) -> Result<SpConstants, CoreError> {
    if n == 0 {
        return Err(CoreError::InvalidParameter("n must be >= 1".into()));
    }
    let alg = WeylAlgebra::new(n);
    let two_n = 2 * n;
    let basis = sym_pairs(two_n);
    let w: Vec<WeylPolynomial> = basis
        .iter()
        .map(|&(a, b)| alg.quadratic_generator(a, b))
        .collect();

    let mut brackets = BTreeMap::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let comm = alg.commutator(&w[i], &w[j])?;
            // read the coefficient of I * Z_a Z_b for each basis pair; the
            // quadratic parts of the W's are exactly those monomials
            let mut coeffs: SparseVec = Vec::new();
            for (k, &(a, b)) in basis.iter().enumerate() {
                let mut m = WeylMonomial::unit(n);
                m.exponents[a] += 1;
                m.exponents[b] += 1;
                m.i_power = 1;
                if let Some(c) = comm.terms.get(&m) {
                    coeffs.push((k, c.clone()));
                }
            }
            // verify [W_i, W_j] == I * sum coeffs_k W_k as polynomials
            let mut expect = WeylPolynomial::zero(n);
            for (k, c) in &coeffs {
                expect = expect.add(&w[*k].times_central().scale(c));
            }
            if expect != comm {
                return Err(CoreError::NotCentralLinear {
                    detail: format!(
                        "[W{:?}, W{:?}] = {:?} is not I-linear in the quadratic basis",
                        basis[i], basis[j], comm
                    ),
                });
            }
            if !coeffs.is_empty() {
                brackets.insert((i, j), coeffs);
            }
        }
    }
    Ok(SpConstants { n, basis, brackets })
}

/// The expected right-hand side of `[W_{ab}, Z_k]`, namely
/// `I (zeta_{ak} Z_b + zeta_{bk} Z_a)`.
pub fn expected_wz(alg: &WeylAlgebra, a: usize, b: usize, k: usize) -> WeylPolynomial {
    let n = alg.n;
    let mut p = WeylPolynomial::zero(n);
    let zak = alg.zeta(a, k);
    if zak != 0 {
        p = p.add(&WeylPolynomial::generator(n, b).scale(&rat(zak)));
    }
    let zbk = alg.zeta(b, k);
    if zbk != 0 {
        p = p.add(&WeylPolynomial::generator(n, a).scale(&rat(zbk)));
    }
    p.times_central()
}

/// The standard four-term sp(2n) bracket
/// `zeta_{ak} W_{be} + zeta_{ae} W_{bk} + zeta_{bk} W_{ae} + zeta_{be} W_{ak}`
/// as a sparse vector over the `sym_pairs` basis. This is the oracle's
/// expected closed form; `derive_sp_constants` must reproduce it.
pub fn four_term_bracket(
    alg: &WeylAlgebra,
    (a, b): (usize, usize),
    (k, e): (usize, usize),
) -> SparseVec {
    let two_n = 2 * alg.n;
    let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
    let mut add = |z: i64, p: usize, q: usize| {
        if z != 0 {
            let (lo, hi) = if p <= q { (p, q) } else { (q, p) };
            let slot = acc.entry(sym_index(lo, hi, two_n)).or_insert_with(Rat::zero);
            *slot = &*slot + rat(z);
        }
    };
    add(alg.zeta(a, k), b, e);
    add(alg.zeta(a, e), b, k);
    add(alg.zeta(b, k), a, e);
    add(alg.zeta(b, e), a, k);
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}
