//! `lieh2` — second Lie-algebra cohomology and central extensions from
//! structure constants, with symbolic and numeric verification of the
//! quadratic symplectic realization.
//!
//! Every subcommand prints a JSON report on stdout (except the explicit
//! `.lie` emitters) and keeps diagnostics on stderr. Exit codes:
//! 0 success, 1 mathematical failure, 2 input error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lieh2_core::algebra::AlgebraElement;
use lieh2_core::catalog;
use lieh2_core::cohomology::{self, second_cohomology};
use lieh2_core::dsl::{parse_algebra, print_algebra, AlgebraDocument};
use lieh2_core::fock::{self, FockConfig};
use lieh2_core::report::{self, Report, ReportResults};
use lieh2_core::weyl::{self, WeylAlgebra, WeylPolynomial};
use lieh2_core::{CoreError, LieAlgebra};

const EXIT_MATH: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "lieh2", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, clap::Args)]
struct AlgebraSource {
    /// Path to a `.lie` or `.json` algebra definition.
    #[arg(long, conflicts_with_all = ["catalog", "n"])]
    input: Option<String>,
    /// Catalog family (abelian, heisenberg, sp, lorentz,
    /// inhomogeneous_lorentz, inhomogeneous_symplectic, hsp).
    #[arg(long, requires = "n")]
    catalog: Option<String>,
    /// Family parameter n.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitFormat {
    Lie,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CochainChoice {
    /// Extend by every H^2 representative.
    FullH2,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the Jacobi identity of an algebra.
    Check {
        #[command(flatten)]
        source: AlgebraSource,
    },
    /// Compute Z^2, B^2, dim H^2 and representative cocycles.
    H2 {
        #[command(flatten)]
        source: AlgebraSource,
    },
    /// Construct the central extension by the H^2 representatives and print
    /// it as a `.lie` document.
    Extend {
        #[command(flatten)]
        source: AlgebraSource,
        #[arg(long, value_enum, default_value = "full-h2")]
        cochains: CochainChoice,
        /// Print the JSON report instead of the `.lie` document.
        #[arg(long)]
        json: bool,
    },
    /// Build a catalog entry; `--emit` serializes it instead of reporting.
    Catalog {
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        emit: Option<EmitFormat>,
    },
    /// Derive the sp(2n) structure constants from the Weyl-algebra oracle
    /// and print the verification verdict.
    Oracle {
        #[arg(long)]
        n: usize,
    },
    /// Truncated Fock-space residual checks.
    Fock {
        #[arg(long, default_value_t = 1)]
        modes: usize,
        #[arg(long, default_value_t = 10)]
        levels: usize,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        lambda: f64,
        /// Comma list: heisenberg, wz, ww, rescale.
        #[arg(long, default_value = "heisenberg,wz,ww,rescale")]
        checks: String,
        /// Use this interior margin for every check.
        #[arg(long)]
        margin_override: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command_echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match run(cli.command, command_echo) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("lieh2: {e}");
            ExitCode::from(match e {
                CoreError::JacobiViolation { .. } => EXIT_MATH,
                _ => EXIT_INPUT,
            })
        }
    }
}

fn load_source(source: &AlgebraSource) -> Result<(LieAlgebra, String), CoreError> {
    match (&source.input, &source.catalog, source.n) {
        (Some(path), None, None) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CoreError::InvalidParameter(format!("cannot read {path}: {e}"))
            })?;
            let doc = if text.trim_start().starts_with('{') {
                serde_json::from_str::<AlgebraDocument>(&text).map_err(|e| {
                    CoreError::InvalidParameter(format!("invalid JSON algebra document: {e}"))
                })?
            } else {
                parse_algebra(&text)?
            };
            Ok((doc.to_algebra()?, report::fingerprint(text.as_bytes())))
        }
        (None, Some(family), Some(n)) => {
            let entry = catalog::by_name(family, n)?;
            let canonical = print_algebra(&AlgebraDocument::from_algebra(&entry.algebra));
            Ok((entry.algebra, report::fingerprint(canonical.as_bytes())))
        }
        _ => Err(CoreError::InvalidParameter(
            "provide either --input FILE or --catalog FAMILY --n K".into(),
        )),
    }
}

fn emit(report: &Report) {
    println!(
        "{}",
        serde_json::to_string_pretty(report).expect("report serializes")
    );
}

fn base_report(command: String, fingerprint: Option<String>) -> Report {
    Report {
        toolkit_version: lieh2_core::VERSION.to_string(),
        command,
        input_fingerprint: fingerprint,
        exit_status: 0,
        results: ReportResults::default(),
    }
}

fn run(cmd: Command, echo: String) -> Result<ExitCode, CoreError> {
    match cmd {
        Command::Check { source } => {
            let (l, fp) = load_source(&source)?;
            let failures = l.jacobi_residual();
            let ok = failures.is_empty();
            let mut rep = base_report(echo, Some(fp));
            rep.exit_status = if ok { 0 } else { EXIT_MATH as i32 };
            rep.results.jacobi = Some(report::JacobiReport {
                algebra: l.name.clone(),
                dim: l.dim,
                jacobi_ok: ok,
                failing_triples: report::failing_triples(&l, &failures),
            });
            emit(&rep);
            Ok(ExitCode::from(if ok { 0 } else { EXIT_MATH }))
        }
        Command::H2 { source } => {
            let (l, fp) = load_source(&source)?;
            let mut rep = base_report(echo, Some(fp));
            match second_cohomology(&l) {
                Ok(h) => {
                    rep.results.h2 = Some(report::h2_report(&l, &h));
                    emit(&rep);
                    Ok(ExitCode::SUCCESS)
                }
                Err(CoreError::JacobiViolation { .. }) => {
                    let failures = l.jacobi_residual();
                    rep.exit_status = EXIT_MATH as i32;
                    rep.results.jacobi = Some(report::JacobiReport {
                        algebra: l.name.clone(),
                        dim: l.dim,
                        jacobi_ok: false,
                        failing_triples: report::failing_triples(&l, &failures),
                    });
                    emit(&rep);
                    eprintln!("lieh2: input algebra fails the Jacobi identity");
                    Ok(ExitCode::from(EXIT_MATH))
                }
                Err(e) => Err(e),
            }
        }
        Command::Extend {
            source,
            cochains: CochainChoice::FullH2,
            json,
        } => {
            let (l, fp) = load_source(&source)?;
            let h = second_cohomology(&l)?;
            let ext = cohomology::central_extension(&l, &h.representatives)?;
            let central_ok = (l.dim..ext.extended.dim).try_fold(true, |acc, i| {
                let e = AlgebraElement::basis(i, ext.extended.dim);
                cohomology::is_central(&ext.extended, &e).map(|c| acc && c)
            })?;
            let ok = ext.jacobi_failures.is_empty() && central_ok;
            if json {
                let mut rep = base_report(echo, Some(fp));
                rep.exit_status = if ok { 0 } else { EXIT_MATH as i32 };
                rep.results.h2 = Some(report::h2_report(&l, &h));
                rep.results.extension = Some(report::extension_report(&ext, central_ok));
                emit(&rep);
            } else {
                print!(
                    "{}",
                    print_algebra(&AlgebraDocument::from_algebra(&ext.extended))
                );
            }
            Ok(ExitCode::from(if ok { 0 } else { EXIT_MATH }))
        }
        Command::Catalog { family, n, emit: fmt } => {
            let entry = catalog::by_name(&family, n)?;
            let doc = AlgebraDocument::from_algebra(&entry.algebra);
            match fmt {
                Some(EmitFormat::Lie) => print!("{}", print_algebra(&doc)),
                Some(EmitFormat::Json) => println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("document serializes")
                ),
                None => {
                    let canonical = print_algebra(&doc);
                    let failures = entry.algebra.jacobi_residual();
                    let mut rep =
                        base_report(echo, Some(report::fingerprint(canonical.as_bytes())));
                    rep.results.jacobi = Some(report::JacobiReport {
                        algebra: entry.algebra.name.clone(),
                        dim: entry.algebra.dim,
                        jacobi_ok: failures.is_empty(),
                        failing_triples: report::failing_triples(&entry.algebra, &failures),
                    });
                    rep.results.algebra = Some(doc);
                    emit(&rep);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { n } => {
            if n == 0 {
                return Err(CoreError::InvalidParameter("--n must be >= 1".into()));
            }
            let constants = weyl::derive_sp_constants(n)?;
            let alg = WeylAlgebra::new(n);
            let mut wz_ok = true;
            for &(a, b) in &constants.basis {
                let w = alg.quadratic_generator(a, b);
                for k in 0..2 * n {
                    let got = alg.commutator(&w, &WeylPolynomial::generator(n, k))?;
                    if got != weyl::expected_wz(&alg, a, b, k) {
                        wz_ok = false;
                    }
                }
            }
            let name = |&(a, b): &(usize, usize)| format!("W{}_{}", a + 1, b + 1);
            let mut rep = base_report(echo, None);
            rep.results.oracle = Some(report::OracleReport {
                n,
                basis: constants.basis.iter().map(name).collect(),
                brackets: constants
                    .brackets
                    .iter()
                    .map(|((i, j), v)| report::OracleBracket {
                        left: name(&constants.basis[*i]),
                        right: name(&constants.basis[*j]),
                        terms: v
                            .iter()
                            .map(|(k, c)| {
                                (name(&constants.basis[*k]), lieh2_core::rational::format_rat(c))
                            })
                            .collect(),
                    })
                    .collect(),
                wz_law_verified: wz_ok,
                all_commutators_central_linear: true,
            });
            rep.exit_status = if wz_ok { 0 } else { EXIT_MATH as i32 };
            emit(&rep);
            Ok(ExitCode::from(if wz_ok { 0 } else { EXIT_MATH }))
        }
        Command::Fock {
            modes,
            levels,
            lambda,
            checks,
            margin_override,
        } => {
            let config = FockConfig {
                modes,
                levels,
                lambda,
            };
            config.validate()?;
            let selected: Vec<&str> = checks.split(',').map(|s| s.trim()).collect();
            for c in &selected {
                if !["heisenberg", "wz", "ww", "rescale"].contains(c) {
                    return Err(CoreError::InvalidParameter(format!(
                        "unknown check {c:?} (expected heisenberg, wz, ww, rescale)"
                    )));
                }
            }
            let z = fock::build_z(&config)?;
            let w = fock::build_w(&config, &z)?;
            let mut all = Vec::new();
            let m = |d: usize| margin_override.unwrap_or(d);
            if selected.contains(&"heisenberg") {
                all.extend(fock::heisenberg_check(&config, &z, m(2), 1e-12)?);
            }
            if selected.contains(&"wz") {
                all.extend(fock::wz_check(&config, &z, &w, m(3), 1e-10)?);
            }
            if selected.contains(&"ww") {
                all.extend(fock::ww_check(&config, &w, m(4), 1e-9)?);
            }
            let rescale = if selected.contains(&"rescale") {
                Some(fock::rescale_check(&config)?)
            } else {
                None
            };
            let corner = if modes == 1 && selected.contains(&"heisenberg") {
                let got = fock::corner_defect(&config, &z, 0);
                let expect = fock::expected_corner_defect(&config);
                Some(report::CornerDefect {
                    expected_imag: expect.im,
                    observed_imag: got.im,
                    observed_real: got.re,
                    ok: (got - expect).norm() <= 1e-10,
                })
            } else {
                None
            };
            let herm = z
                .iter()
                .map(|op| op.max_hermiticity_defect())
                .fold(0.0f64, f64::max);
            let all_ok = all.iter().all(|r| r.ok)
                && rescale.as_ref().map_or(true, |r| r.ok)
                && corner.as_ref().map_or(true, |c| c.ok)
                && herm <= 1e-12;
            let mut rep = base_report(echo, None);
            rep.exit_status = if all_ok { 0 } else { EXIT_MATH as i32 };
            rep.results.fock = Some(report::FockReport {
                modes,
                levels,
                lambda,
                hilbert_dim: config.dim(),
                negative_lambda_quadrature_swap: lambda < 0.0,
                checks: all,
                corner_defect: corner,
                rescale,
                max_hermiticity_defect: herm,
                all_ok,
            });
            emit(&rep);
            Ok(ExitCode::from(if all_ok { 0 } else { EXIT_MATH }))
        }
    }
}
