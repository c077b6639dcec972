//! Parameterized constructors for the algebra families the toolkit works
//! with: abelian translations, Weyl-Heisenberg, symplectic sp(2n), Lorentz
//! so(1,n), the inhomogeneous (semidirect) variants and the centrally
//! extended hsp(2n).
//!
//! Declared metadata (semisimplicity, known H^2 dimensions, pi_1) is carried
//! with citations and is never computed here; the golden tests check the
//! declared H^2 values against the engine. The sp(2n) structure constants
//! are generated from the Weyl-algebra oracle rather than hand-typed.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{LieAlgebra, SparseVec};
use crate::error::CoreError;
use crate::rational::{rat, Rat};
use crate::weyl::{derive_sp_constants, sym_index, sym_pairs, WeylAlgebra};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Abelian,
    Heisenberg,
    Sp,
    Lorentz,
    InhomogeneousLorentz,
    InhomogeneousSymplectic,
    Hsp,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Abelian => "abelian",
            Family::Heisenberg => "heisenberg",
            Family::Sp => "sp",
            Family::Lorentz => "lorentz",
            Family::InhomogeneousLorentz => "inhomogeneous_lorentz",
            Family::InhomogeneousSymplectic => "inhomogeneous_symplectic",
            Family::Hsp => "hsp",
        }
    }
}

/// Declared facts with citations; never computed.
#[derive(Debug, Clone, Default)]
pub struct Declared {
    pub semisimple: Option<bool>,
    pub h2_dim: Option<usize>,
    pub h2_citation: Option<&'static str>,
    pub pi1: Option<&'static str>,
    pub pi1_citation: Option<&'static str>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub family: Family,
    pub params: Vec<usize>,
    pub algebra: LieAlgebra,
    pub declared: Declared,
}

pub const FAMILIES: &[&str] = &[
    "abelian",
    "heisenberg",
    "sp",
    "lorentz",
    "inhomogeneous_lorentz",
    "inhomogeneous_symplectic",
    "hsp",
];

fn positive(n: usize, what: &str) -> Result<(), CoreError> {
    if n == 0 {
        return Err(CoreError::InvalidParameter(format!("{what} must be >= 1")));
    }
    Ok(())
}

fn even(two_n: usize, what: &str) -> Result<usize, CoreError> {
    if two_n < 2 || two_n % 2 != 0 {
        return Err(CoreError::InvalidParameter(format!(
            "{what} must be even and >= 2, got {two_n}"
        )));
    }
    Ok(two_n / 2)
}

/// n commuting generators A_1..A_n.
pub fn abelian(n: usize) -> Result<CatalogEntry, CoreError> {
    positive(n, "n")?;
    let algebra = LieAlgebra::new(
        format!("abelian({n})"),
        (1..=n).map(|i| format!("A{i}")).collect(),
        BTreeMap::new(),
    )?
    .with_metadata("pi1", "e")
    .with_metadata("semisimple", "false");
    Ok(CatalogEntry {
        family: Family::Abelian,
        params: vec![n],
        algebra,
        declared: Declared {
            semisimple: Some(false),
            h2_dim: Some(n * (n - 1) / 2),
            h2_citation: Some("H2(A(n)) ~ A(n(n-1)/2)"),
            pi1: Some("e"),
            pi1_citation: Some("A(n) is simply connected"),
            ..Default::default()
        },
    })
}

/// Weyl-Heisenberg h(n): Z_1..Z_2n and central I with [Z_a, Z_b] = zeta_ab I.
pub fn heisenberg(n: usize) -> Result<CatalogEntry, CoreError> {
    positive(n, "n")?;
    let two_n = 2 * n;
    let alg = WeylAlgebra::new(n);
    let mut names: Vec<String> = (1..=two_n).map(|i| format!("Z{i}")).collect();
    names.push("I".into());
    let mut brackets: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
    for a in 0..two_n {
        for b in (a + 1)..two_n {
            let z = alg.zeta(a, b);
            if z != 0 {
                brackets.insert((a, b), vec![(two_n, rat(z))]);
            }
        }
    }
    let algebra = LieAlgebra::new(format!("heisenberg({n})"), names, brackets)?
        .with_metadata("semisimple", "false");
    Ok(CatalogEntry {
        family: Family::Heisenberg,
        params: vec![n],
        algebra,
        declared: Declared {
            semisimple: Some(false),
            // engine-derived golden, only frozen for n = 1
            h2_dim: if n == 1 { Some(2) } else { None },
            h2_citation: if n == 1 {
                Some("derived: dim Z2 = 3, dim B2 = 1")
            } else {
                None
            },
            pi1: Some("e"),
            pi1_citation: Some("H(n) is simply connected"),
        },
    })
}

fn w_names(two_n: usize) -> Vec<String> {
    sym_pairs(two_n)
        .iter()
        .map(|&(a, b)| format!("W{}_{}", a + 1, b + 1))
        .collect()
}

/// sp(2n) over the quadratic basis W_{ab}, a <= b; structure constants are
/// derived from the Weyl-algebra oracle, not hand-typed.
pub fn sp(two_n: usize) -> Result<CatalogEntry, CoreError> {
    let n = even(two_n, "sp parameter")?;
    let constants = derive_sp_constants(n)?;
    let algebra = LieAlgebra::new(
        format!("sp({two_n})"),
        w_names(two_n),
        constants.brackets.clone(),
    )?
    .with_metadata("semisimple", "true")
    .with_metadata("pi1", "Z");
    Ok(CatalogEntry {
        family: Family::Sp,
        params: vec![two_n],
        algebra,
        declared: Declared {
            semisimple: Some(true),
            h2_dim: Some(0),
            h2_citation: Some("Whitehead: semisimple algebras have trivial H2"),
            pi1: Some("Z"),
            pi1_citation: Some("pi1(Sp(2n)) = Z"),
        },
    })
}

fn eta(mu: usize) -> i64 {
    if mu == 0 {
        1
    } else {
        -1
    }
}

/// Adds `coeff * M_{mu,sigma}` to a sparse vector over the pair basis,
/// folding in antisymmetry of the M indices.
fn add_m(acc: &mut BTreeMap<usize, Rat>, mu: usize, sigma: usize, coeff: i64, np1: usize) {
    if mu == sigma || coeff == 0 {
        return;
    }
    let (lo, hi, sign) = if mu < sigma {
        (mu, sigma, 1)
    } else {
        (sigma, mu, -1)
    };
    let idx = crate::cohomology::pair_index(lo, hi, np1);
    let slot = acc.entry(idx).or_insert_with(Rat::zero);
    *slot = &*slot + rat(coeff * sign);
}

/// so(1,n): generators M_{mu,nu}, mu < nu over indices 0..n, metric
/// diag(1,-1,...,-1).
pub fn lorentz(n: usize) -> Result<CatalogEntry, CoreError> {
    positive(n, "n")?;
    let np1 = n + 1;
    let pairs: Vec<(usize, usize)> = (0..np1)
        .flat_map(|mu| ((mu + 1)..np1).map(move |nu| (mu, nu)))
        .collect();
    let names: Vec<String> = pairs.iter().map(|&(m, v)| format!("M{m}_{v}")).collect();
    let mut brackets: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
    for (i, &(mu, nu)) in pairs.iter().enumerate() {
        for (j, &(rho, sigma)) in pairs.iter().enumerate().skip(i + 1) {
            let mut acc = BTreeMap::new();
            // [M_{mu nu}, M_{rho sigma}] =
            //   eta_{nu rho} M_{mu sigma} - eta_{mu rho} M_{nu sigma}
            // - eta_{nu sigma} M_{mu rho} + eta_{mu sigma} M_{nu rho}
            if nu == rho {
                add_m(&mut acc, mu, sigma, eta(nu), np1);
            }
            if mu == rho {
                add_m(&mut acc, nu, sigma, -eta(mu), np1);
            }
            if nu == sigma {
                add_m(&mut acc, mu, rho, -eta(nu), np1);
            }
            if mu == sigma {
                add_m(&mut acc, nu, rho, eta(mu), np1);
            }
            let v: SparseVec = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !v.is_empty() {
                brackets.insert((i, j), v);
            }
        }
    }
    let semisimple = n >= 2;
    let algebra = LieAlgebra::new(format!("lorentz(1,{n})"), names, brackets)?
        .with_metadata("semisimple", if semisimple { "true" } else { "false" })
        .with_metadata("pi1", "Z_2");
    Ok(CatalogEntry {
        family: Family::Lorentz,
        params: vec![1, n],
        algebra,
        declared: Declared {
            semisimple: Some(semisimple),
            h2_dim: if semisimple { Some(0) } else { None },
            h2_citation: if semisimple {
                Some("Whitehead: semisimple algebras have trivial H2")
            } else {
                None
            },
            pi1: Some("Z_2"),
            pi1_citation: Some("pi1(L(1,n)) = Z_2"),
        },
    })
}

/// so(1,n) + translations P_0..P_n with [M_{mu nu}, P_rho] =
/// eta_{nu rho} P_mu - eta_{mu rho} P_nu.
pub fn inhomogeneous_lorentz(n: usize) -> Result<CatalogEntry, CoreError> {
    positive(n, "n")?;
    let base = lorentz(n)?;
    let np1 = n + 1;
    let m_dim = base.algebra.dim;
    let pairs: Vec<(usize, usize)> = (0..np1)
        .flat_map(|mu| ((mu + 1)..np1).map(move |nu| (mu, nu)))
        .collect();
    let mut names = base.algebra.basis_names.clone();
    names.extend((0..np1).map(|mu| format!("P{mu}")));
    let mut brackets = base.algebra.brackets.clone();
    for (i, &(mu, nu)) in pairs.iter().enumerate() {
        for rho in 0..np1 {
            let mut v: SparseVec = Vec::new();
            if nu == rho {
                v.push((m_dim + mu, rat(eta(nu))));
            }
            if mu == rho {
                v.push((m_dim + nu, rat(-eta(mu))));
            }
            v.sort_by_key(|(k, _)| *k);
            if !v.is_empty() {
                brackets.insert((i, m_dim + rho), v);
            }
        }
    }
    let algebra = LieAlgebra::new(format!("inhomogeneous_lorentz(1,{n})"), names, brackets)?
        .with_metadata("semisimple", "false")
        .with_metadata("pi1", "Z_2");
    Ok(CatalogEntry {
        family: Family::InhomogeneousLorentz,
        params: vec![1, n],
        algebra,
        declared: Declared {
            semisimple: Some(false),
            h2_dim: Some(0),
            h2_citation: Some("H2(IL(1,n)) is trivial"),
            pi1: Some("Z_2"),
            pi1_citation: Some("pi1(IL(1,n)) = Z_2"),
        },
    })
}

/// isp(2n) = sp(2n) semidirect the 2n translations Z_1..Z_2n:
/// [W_{ab}, Z_k] = zeta_{ak} Z_b + zeta_{bk} Z_a, [Z, Z] = 0.
pub fn inhomogeneous_symplectic(two_n: usize) -> Result<CatalogEntry, CoreError> {
    let n = even(two_n, "isp parameter")?;
    let sp_entry = sp(two_n)?;
    let alg = WeylAlgebra::new(n);
    let w_dim = sp_entry.algebra.dim;
    let mut names = sp_entry.algebra.basis_names.clone();
    names.extend((1..=two_n).map(|i| format!("Z{i}")));
    let mut brackets = sp_entry.algebra.brackets.clone();
    for (i, &(a, b)) in sym_pairs(two_n).iter().enumerate() {
        for k in 0..two_n {
            let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
            let zak = alg.zeta(a, k);
            if zak != 0 {
                let slot = acc.entry(w_dim + b).or_insert_with(Rat::zero);
                *slot = &*slot + rat(zak);
            }
            let zbk = alg.zeta(b, k);
            if zbk != 0 {
                let slot = acc.entry(w_dim + a).or_insert_with(Rat::zero);
                *slot = &*slot + rat(zbk);
            }
            let v: SparseVec = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !v.is_empty() {
                brackets.insert((i, w_dim + k), v);
            }
        }
    }
    let algebra = LieAlgebra::new(format!("inhomogeneous_symplectic({two_n})"), names, brackets)?
        .with_metadata("semisimple", "false")
        .with_metadata("pi1", "Z");
    Ok(CatalogEntry {
        family: Family::InhomogeneousSymplectic,
        params: vec![two_n],
        algebra,
        declared: Declared {
            semisimple: Some(false),
            h2_dim: Some(1),
            h2_citation: Some("H2(ISp(2n)) ~ A(1)"),
            pi1: Some("Z"),
            pi1_citation: Some("pi1(ISp(2n)) = Z"),
        },
    })
}

/// hsp(2n) = sp(2n) semidirect h(n): the isp table plus
/// [Z_a, Z_b] = zeta_ab I with I central.
pub fn hsp(two_n: usize) -> Result<CatalogEntry, CoreError> {
    let n = even(two_n, "hsp parameter")?;
    let isp = inhomogeneous_symplectic(two_n)?;
    let alg = WeylAlgebra::new(n);
    let w_dim = isp.algebra.dim - two_n;
    let mut names = isp.algebra.basis_names.clone();
    names.push("I".into());
    let central = names.len() - 1;
    let mut brackets = isp.algebra.brackets.clone();
    for a in 0..two_n {
        for b in (a + 1)..two_n {
            let z = alg.zeta(a, b);
            if z != 0 {
                brackets.insert((w_dim + a, w_dim + b), vec![(central, rat(z))]);
            }
        }
    }
    let algebra = LieAlgebra::new(format!("hsp({two_n})"), names, brackets)?
        .with_metadata("semisimple", "false")
        .with_metadata("pi1", "Z");
    Ok(CatalogEntry {
        family: Family::Hsp,
        params: vec![two_n],
        algebra,
        declared: Declared {
            semisimple: Some(false),
            // engine-derived golden; hsp(2n) is already maximally extended
            h2_dim: if two_n == 2 { Some(0) } else { None },
            h2_citation: if two_n == 2 {
                Some("derived golden: the engine computes 0")
            } else {
                None
            },
            pi1: Some("Z"),
            pi1_citation: Some("pi1(HSp(2n)) = pi1(Sp(2n)) = Z"),
        },
    })
}

/// Constructor lookup for the CLI: `param` is the family's own parameter
/// (n, or the Lorentz spatial dimension); symplectic families take n and
/// build the 2n-parameter entry.
pub fn by_name(family: &str, param: usize) -> Result<CatalogEntry, CoreError> {
    match family {
        "abelian" => abelian(param),
        "heisenberg" => heisenberg(param),
        "sp" => sp(2 * param),
        "lorentz" => lorentz(param),
        "inhomogeneous_lorentz" | "ilorentz" | "il" => inhomogeneous_lorentz(param),
        "inhomogeneous_symplectic" | "isp" => inhomogeneous_symplectic(2 * param),
        "hsp" => hsp(2 * param),
        other => Err(CoreError::InvalidParameter(format!(
            "unknown catalog family {other:?} (expected one of {FAMILIES:?})"
        ))),
    }
}

/// The symplectic-form index used throughout: sym-pair position of W_{ab}.
pub fn w_index(a: usize, b: usize, two_n: usize) -> usize {
    sym_index(a, b, two_n)
}
