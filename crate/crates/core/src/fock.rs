//! Truncated Fock-space realization of the Heisenberg and quadratic
//! symplectic generators, with interior-projected residual checks.
//!
//! The commutation relations hold on an infinite-dimensional space;
//! truncation at occupation `N` per mode breaks them only near the top
//! levels (`[a, a^t]` truncated is `1 - (N+1)|N><N|`). Verification
//! therefore projects onto the interior (every mode occupation at most
//! `N - margin`) where the relations are exact up to float roundoff, and
//! separately pins the known corner defect, which grows linearly in `N`.

use ndarray::Array2;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::CoreError;
use crate::rational::Rat;
use crate::weyl::{four_term_bracket, sym_pairs, WeylAlgebra};

#[derive(Debug, Clone, Copy)]
pub struct FockConfig {
    /// Number of modes n (the realization carries 2n generators).
    pub modes: usize,
    /// Truncation N: occupations 0..=N per mode.
    pub levels: usize,
    /// The Schur scalar for the central generator, nonzero real.
    pub lambda: f64,
}

impl FockConfig {
    pub fn validate(&self) -> Result<(), CoreError> {
        if self.modes < 1 {
            return Err(CoreError::InvalidParameter("modes must be >= 1".into()));
        }
        if self.levels < 2 {
            return Err(CoreError::InvalidParameter("levels must be >= 2".into()));
        }
        if self.lambda == 0.0 || !self.lambda.is_finite() {
            return Err(CoreError::InvalidParameter(
                "lambda must be a nonzero finite real".into(),
            ));
        }
        Ok(())
    }

    /// Hilbert-space dimension (N+1)^n.
    pub fn dim(&self) -> usize {
        (self.levels + 1).pow(self.modes as u32)
    }
}

#[derive(Debug, Clone)]
pub struct TruncatedOperator {
    pub matrix: Array2<Complex64>,
    /// Total ladder degree of the defining expression (1 for Z, 2 for W).
    pub degree: usize,
}

impl TruncatedOperator {
    pub fn max_hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        let n = self.matrix.nrows();
        for i in 0..n {
            for j in 0..n {
                let d = (self.matrix[[i, j]] - self.matrix[[j, i]].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }
}

fn zeros(dim: usize) -> Array2<Complex64> {
    Array2::from_elem((dim, dim), Complex64::ZERO)
}

fn identity(dim: usize) -> Array2<Complex64> {
    let mut m = zeros(dim);
    for i in 0..dim {
        m[[i, i]] = Complex64::ONE;
    }
    m
}

/// Single-mode lowering operator: a|k> = sqrt(k)|k-1>.
fn ladder(levels: usize) -> Array2<Complex64> {
    let dim = levels + 1;
    let mut a = zeros(dim);
    for k in 1..dim {
        a[[k - 1, k]] = Complex64::new((k as f64).sqrt(), 0.0);
    }
    a
}

fn dagger(m: &Array2<Complex64>) -> Array2<Complex64> {
    m.t().mapv(|z| z.conj())
}

fn kron(a: &Array2<Complex64>, b: &Array2<Complex64>) -> Array2<Complex64> {
    let (ra, ca) = a.dim();
    let (rb, cb) = b.dim();
    let mut out = Array2::from_elem((ra * rb, ca * cb), Complex64::ZERO);
    for i in 0..ra {
        for j in 0..ca {
            let v = a[[i, j]];
            if v == Complex64::ZERO {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    out[[i * rb + k, j * cb + l]] = v * b[[k, l]];
                }
            }
        }
    }
    out
}

/// Identity-padded tensor product with mode 0 slowest-varying (leftmost).
fn embed(op: &Array2<Complex64>, mode: usize, modes: usize, levels: usize) -> Array2<Complex64> {
    let single = levels + 1;
    let mut out = if mode == 0 {
        op.clone()
    } else {
        identity(single.pow(mode as u32))
    };
    if mode != 0 {
        out = kron(&out, op);
    }
    for _ in (mode + 1)..modes {
        out = kron(&out, &identity(single));
    }
    out
}

pub fn commutator(a: &Array2<Complex64>, b: &Array2<Complex64>) -> Array2<Complex64> {
    a.dot(b) - b.dot(a)
}

/// The 2n Hermitian generators: quadratures from the truncated ladder
/// operators, scaled by sqrt(|lambda|). For lambda < 0 the Q/P roles are
/// swapped (equivalently zeta -> -zeta), so `[Z_a, Z_b] = i lambda zeta_ab`
/// holds on the interior for either sign.
pub fn build_z(config: &FockConfig) -> Result<Vec<TruncatedOperator>, CoreError> {
    config.validate()?;
    let n = config.modes;
    let s = config.lambda.abs().sqrt();
    let a = ladder(config.levels);
    let ad = dagger(&a);
    let inv_sqrt2 = Complex64::new(s / 2f64.sqrt(), 0.0);
    let q1 = (&a + &ad).mapv(|z| z * inv_sqrt2);
    let p1 = (&ad - &a).mapv(|z| z * inv_sqrt2 * Complex64::i());
    let mut qs = Vec::with_capacity(n);
    let mut ps = Vec::with_capacity(n);
    for mode in 0..n {
        qs.push(embed(&q1, mode, n, config.levels));
        ps.push(embed(&p1, mode, n, config.levels));
    }
    let (first, second) = if config.lambda > 0.0 { (qs, ps) } else { (ps, qs) };
    Ok(first
        .into_iter()
        .chain(second)
        .map(|matrix| TruncatedOperator { matrix, degree: 1 })
        .collect())
}

/// The n(2n+1) quadratic generators `W_ab = (Z_a Z_b + Z_b Z_a) / 2`,
/// keyed by the pair `a <= b` (0-based), matching the symbolic oracle.
pub fn build_w(
    config: &FockConfig,
    z: &[TruncatedOperator],
) -> Result<Vec<((usize, usize), TruncatedOperator)>, CoreError> {
    config.validate()?;
    let two_n = 2 * config.modes;
    if z.len() != two_n {
        return Err(CoreError::DimensionMismatch {
            expected: two_n,
            got: z.len(),
        });
    }
    let half = Complex64::new(0.5, 0.0);
    Ok(sym_pairs(two_n)
        .into_iter()
        .map(|(a, b)| {
            let m = (z[a].matrix.dot(&z[b].matrix) + z[b].matrix.dot(&z[a].matrix))
                .mapv(|v| v * half);
            ((a, b), TruncatedOperator { matrix: m, degree: 2 })
        })
        .collect())
}

/// Interior projector mask: product states with every mode occupation
/// <= levels - margin.
fn interior_mask(config: &FockConfig, margin: usize) -> Vec<bool> {
    let single = config.levels + 1;
    let cutoff = config.levels - margin;
    (0..config.dim())
        .map(|mut idx| {
            for _ in 0..config.modes {
                if idx % single > cutoff {
                    return false;
                }
                idx /= single;
            }
            true
        })
        .collect()
}

/// Max-norm of `P (lhs - rhs) P` over the margin-`margin` interior.
pub fn residual(
    config: &FockConfig,
    lhs: &Array2<Complex64>,
    rhs: &Array2<Complex64>,
    margin: usize,
) -> Result<f64, CoreError> {
    config.validate()?;
    if margin >= config.levels {
        return Err(CoreError::EmptyInterior {
            margin,
            levels: config.levels,
        });
    }
    let mask = interior_mask(config, margin);
    let mut worst = 0.0f64;
    for i in 0..config.dim() {
        if !mask[i] {
            continue;
        }
        for j in 0..config.dim() {
            if !mask[j] {
                continue;
            }
            worst = worst.max((lhs[[i, j]] - rhs[[i, j]]).norm());
        }
    }
    Ok(worst)
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityResidual {
    pub identity: String,
    pub margin: usize,
    pub residual: f64,
    pub tolerance: f64,
    pub ok: bool,
}

/// `[Z_a, Z_b] - i lambda zeta_ab` over all pairs, margin-2 interior.
pub fn heisenberg_check(
    config: &FockConfig,
    z: &[TruncatedOperator],
    margin: usize,
    tolerance: f64,
) -> Result<Vec<IdentityResidual>, CoreError> {
    let alg = WeylAlgebra::new(config.modes);
    let dim = config.dim();
    let mut out = Vec::new();
    for a in 0..2 * config.modes {
        for b in (a + 1)..2 * config.modes {
            let lhs = commutator(&z[a].matrix, &z[b].matrix);
            let c = Complex64::i() * config.lambda * alg.zeta(a, b) as f64;
            let rhs = identity(dim).mapv(|v| v * c);
            let r = residual(config, &lhs, &rhs, margin)?;
            out.push(IdentityResidual {
                identity: format!("[Z{},Z{}] = i*lambda*zeta", a + 1, b + 1),
                margin,
                residual: r,
                tolerance,
                ok: r <= tolerance,
            });
        }
    }
    Ok(out)
}

/// The known truncation defect for one mode: `<N|[Z_1, Z_{n+1}]|N> = -i lambda N`
/// on the top occupation of that mode (all other modes in the ground state).
pub fn corner_defect(config: &FockConfig, z: &[TruncatedOperator], mode: usize) -> Complex64 {
    let single = config.levels + 1;
    // index of |0,...,N_mode,...,0> with mode 0 slowest-varying
    let pos = config.modes - 1 - mode;
    let idx = config.levels * single.pow(pos as u32);
    let c = commutator(&z[mode].matrix, &z[mode + config.modes].matrix);
    c[[idx, idx]]
}

pub fn expected_corner_defect(config: &FockConfig) -> Complex64 {
    Complex64::i() * (-(config.lambda * config.levels as f64))
}

/// `[W_ab, Z_k] - i lambda (zeta_ak Z_b + zeta_bk Z_a)` over all indices.
pub fn wz_check(
    config: &FockConfig,
    z: &[TruncatedOperator],
    w: &[((usize, usize), TruncatedOperator)],
    margin: usize,
    tolerance: f64,
) -> Result<Vec<IdentityResidual>, CoreError> {
    let alg = WeylAlgebra::new(config.modes);
    let dim = config.dim();
    let il = Complex64::i() * config.lambda;
    let mut out = Vec::new();
    for ((a, b), w_op) in w {
        for k in 0..2 * config.modes {
            let lhs = commutator(&w_op.matrix, &z[k].matrix);
            let mut rhs = zeros(dim);
            let zak = alg.zeta(*a, k);
            if zak != 0 {
                rhs = rhs + z[*b].matrix.mapv(|v| v * il * zak as f64);
            }
            let zbk = alg.zeta(*b, k);
            if zbk != 0 {
                rhs = rhs + z[*a].matrix.mapv(|v| v * il * zbk as f64);
            }
            let r = residual(config, &lhs, &rhs, margin)?;
            out.push(IdentityResidual {
                identity: format!("[W{}_{},Z{}]", a + 1, b + 1, k + 1),
                margin,
                residual: r,
                tolerance,
                ok: r <= tolerance,
            });
        }
    }
    Ok(out)
}

/// `[W_ab, W_ce] - i lambda * (oracle four-term combination)` over all pairs.
pub fn ww_check(
    config: &FockConfig,
    w: &[((usize, usize), TruncatedOperator)],
    margin: usize,
    tolerance: f64,
) -> Result<Vec<IdentityResidual>, CoreError> {
    let alg = WeylAlgebra::new(config.modes);
    let dim = config.dim();
    let il = Complex64::i() * config.lambda;
    let mut out = Vec::new();
    for i in 0..w.len() {
        for j in (i + 1)..w.len() {
            let lhs = commutator(&w[i].1.matrix, &w[j].1.matrix);
            let expected = four_term_bracket(&alg, w[i].0, w[j].0);
            let mut rhs = zeros(dim);
            for (k, coeff) in &expected {
                rhs = rhs + w[*k].1.matrix.mapv(|v| v * il * rat_to_f64(coeff));
            }
            let r = residual(config, &lhs, &rhs, margin)?;
            out.push(IdentityResidual {
                identity: format!(
                    "[W{}_{},W{}_{}]",
                    w[i].0 .0 + 1,
                    w[i].0 .1 + 1,
                    w[j].0 .0 + 1,
                    w[j].0 .1 + 1
                ),
                margin,
                residual: r,
                tolerance,
                ok: r <= tolerance,
            });
        }
    }
    Ok(out)
}

fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().expect("structure constant fits in f64")
}

#[derive(Debug, Clone, Serialize)]
pub struct RescaleReport {
    pub lambda: f64,
    /// Entrywise check of Z(lambda) = sqrt(lambda) Z(1); only meaningful
    /// for lambda > 0 (the square root must be real).
    pub sqrt_scaling_checked: bool,
    pub max_entry_diff: Option<f64>,
    /// Worst interior Heisenberg residual against i*lambda*zeta.
    pub commutator_residual: f64,
    pub ok: bool,
}

/// Verifies that the lambda dependence is a pure sqrt(lambda) scaling of the
/// generators (lambda > 0) and that the scaled commutator target holds.
pub fn rescale_check(config: &FockConfig) -> Result<RescaleReport, CoreError> {
    config.validate()?;
    let z = build_z(config)?;
    let heis = heisenberg_check(config, &z, 2, 1e-12)?;
    let commutator_residual = heis.iter().fold(0.0f64, |m, r| m.max(r.residual));

    let (sqrt_checked, max_entry_diff) = if config.lambda > 0.0 {
        let unit = FockConfig {
            lambda: 1.0,
            ..*config
        };
        let z1 = build_z(&unit)?;
        let s = config.lambda.sqrt();
        let mut worst = 0.0f64;
        for (za, zb) in z.iter().zip(&z1) {
            let diff = &za.matrix - &zb.matrix.mapv(|v| v * s);
            for v in diff.iter() {
                worst = worst.max(v.norm());
            }
        }
        (true, Some(worst))
    } else {
        (false, None)
    };

    let ok = commutator_residual <= 1e-12
        && max_entry_diff.map_or(config.lambda < 0.0, |d| d <= 1e-13);
    Ok(RescaleReport {
        lambda: config.lambda,
        sqrt_scaling_checked: sqrt_checked,
        max_entry_diff,
        commutator_residual,
        ok,
    })
}
