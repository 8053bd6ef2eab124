//! frobex command line: load/verify/classify/report for extended Frobenius
//! algebras, integral Hopf algebras and realized monoidal functors.
//!
//! Output is deterministic byte-for-byte for identical inputs; JSON is the
//! interchange format and tables are derived views. No floating point
//! appears anywhere.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use frobex_core::acceptance::run_acceptance;
use frobex_core::catalog::{
    self, family_conductor, family_lattice, family_structures, family_witnesses, group_algebra,
    nilpotent_algebra, taft_algebra, unit_frobenius, GroupTable,
};
use frobex_core::extended::{check_extended, classify_extended, default_budget, CandidateLattice};
use frobex_core::frobenius::{check_frobenius, check_separable, FrobAlgebra};
use frobex_core::functors::{
    check_extended_functor, check_frobenius_functor, check_separable_functor, ObjectSample,
    RealizedFunctor,
};
use frobex_core::hopf::{check_hopf, check_integral_composites, group_hopf};
use frobex_core::io;
use frobex_core::report::CheckReport;
use frobex_core::scalars::{CycField, CycScalar};

#[derive(Parser)]
#[command(name = "frobex", version, about = "exact extended-Frobenius algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct CommonOpts {
    /// Output format.
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the axioms of an algebra, extended structure, or Hopf algebra
    /// JSON file (auto-detected by its fields).
    Verify {
        input: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Classify the extended structures of a built-in family.
    Classify {
        /// Family name: k, complex-over-real, kC2..kC6, klein-four,
        /// nilpotent, taft2, matrix.
        #[arg(long)]
        family: String,
        /// Family parameter (nilpotent and matrix families).
        #[arg(long)]
        param: Option<usize>,
        /// Candidate lattice: a family name or a JSON file with
        /// {"description": ..., "scalars": [...]}.
        #[arg(long)]
        lattice: Option<String>,
        /// Conductor override for the scalar field.
        #[arg(long)]
        field_conductor: Option<u64>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Dump a catalog family (algebra plus extended structures) as JSON.
    Catalog {
        family: String,
        #[arg(long)]
        param: Option<usize>,
        #[arg(long)]
        field_conductor: Option<u64>,
    },
    /// Check a realized functor built from an extended algebra JSON file.
    FunctorCheck {
        /// tensor or biproduct.
        #[arg(long)]
        kind: String,
        /// Extended algebra JSON providing the carrier.
        #[arg(long)]
        algebra: PathBuf,
        /// Object dimensions, comma separated.
        #[arg(long, default_value = "1,2,3")]
        dims: String,
        /// Seed for the sampled naturality morphisms (echoed in the report).
        #[arg(long, default_value = "0")]
        seed: u64,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Verify an integral Hopf algebra JSON file.
    HopfCheck {
        input: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Run the acceptance suite; exit 0 only if every criterion passes.
    Acceptance {
        #[arg(long, default_value = "0")]
        seed: u64,
    },
    /// Regenerate golden files into a directory.
    Goldens {
        #[arg(long, default_value = "goldens")]
        dir: PathBuf,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Verify { input, common } => verify(&input, common.format),
        Command::Classify {
            family,
            param,
            lattice,
            field_conductor,
            common,
        } => classify(&family, param, lattice.as_deref(), field_conductor, common.format),
        Command::Catalog {
            family,
            param,
            field_conductor,
        } => dump_catalog(&family, param, field_conductor),
        Command::FunctorCheck {
            kind,
            algebra,
            dims,
            seed,
            common,
        } => functor_check(&kind, &algebra, &dims, seed, common.format),
        Command::HopfCheck { input, common } => hopf_check(&input, common.format),
        Command::Acceptance { seed } => acceptance(seed),
        Command::Goldens { dir } => goldens(&dir),
    }
}

fn print_report(report: &CheckReport, format: Format) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report)?),
        Format::Table => print!("{}", report.render_table()),
    }
    Ok(())
}

fn verify(input: &Path, format: Format) -> Result<i32> {
    let text = std::fs::read_to_string(input)
        .with_context(|| format!("reading {}", input.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", input.display()))?;
    let report = if value.get("S").is_some() {
        let j: io::HopfJson = serde_json::from_value(value)?;
        let h = io::hopf_from_json(&j)?;
        let mut rep = check_hopf(&h)?;
        rep.merge(check_integral_composites(&h)?);
        rep
    } else if value.get("phi").is_some() {
        let j: io::ExtendedJson = serde_json::from_value(value)?;
        let e = io::ext_from_json(&j)?;
        let mut rep = check_frobenius(&e.frob)?;
        rep.merge(check_extended(&e)?);
        rep
    } else {
        let j: io::AlgebraJson = serde_json::from_value(value)?;
        let fa = io::frob_from_json(&j)?;
        let mut rep = check_frobenius(&fa)?;
        rep.push(
            "separable",
            true,
            Some(format!("m Delta = id: {}", check_separable(&fa)?)),
        );
        rep
    };
    print_report(&report, format)?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn family_frobenius(
    family: &str,
    param: Option<usize>,
    field: &Arc<CycField>,
) -> Result<FrobAlgebra> {
    Ok(match family {
        "k" => unit_frobenius(field)?,
        "complex-over-real" => catalog::complex_over_real_frobenius(field)?,
        "kC2" => group_algebra(&GroupTable::cyclic(2)?, field)?,
        "kC3" => group_algebra(&GroupTable::cyclic(3)?, field)?,
        "kC4" => group_algebra(&GroupTable::cyclic(4)?, field)?,
        "kC5" => group_algebra(&GroupTable::cyclic(5)?, field)?,
        "kC6" => group_algebra(&GroupTable::cyclic(6)?, field)?,
        "klein-four" => group_algebra(&GroupTable::klein_four()?, field)?,
        "taft2" => taft_algebra(2, 1, field)?,
        "nilpotent" => nilpotent_algebra(
            param.ok_or_else(|| anyhow!("nilpotent family needs --param"))?,
            field,
        )?,
        "matrix" => {
            catalog::matrix_algebra(
                param.ok_or_else(|| anyhow!("matrix family needs --param"))?,
                field,
            )?
            .frob
        }
        other => bail!("unknown family '{other}'"),
    })
}

#[derive(serde::Deserialize)]
struct LatticeFile {
    description: String,
    scalars: Vec<String>,
}

fn resolve_lattice(
    spec: Option<&str>,
    family: &str,
    param: Option<usize>,
    field: &Arc<CycField>,
) -> Result<CandidateLattice> {
    match spec {
        None => Ok(family_lattice(family, param, field)?),
        Some(name) if family_lattice(name, param, field).is_ok() => {
            Ok(family_lattice(name, param, field)?)
        }
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading lattice file {path}"))?;
            let lf: LatticeFile = serde_json::from_str(&text)?;
            let scalars = lf
                .scalars
                .iter()
                .map(|s| CycScalar::parse_poly(field, s))
                .collect::<frobex_core::Result<Vec<_>>>()?;
            Ok(CandidateLattice::new(lf.description, scalars))
        }
    }
}

fn classify(
    family: &str,
    param: Option<usize>,
    lattice: Option<&str>,
    field_conductor: Option<u64>,
    format: Format,
) -> Result<i32> {
    let cond = match field_conductor {
        Some(n) => n,
        None => family_conductor(family, param)?,
    };
    let field = CycField::new(cond)?;
    let fa = family_frobenius(family, param, &field)?;
    let lat = resolve_lattice(lattice, family, param, &field)?;
    let witnesses = family_witnesses(family, &field)?;
    let c = classify_extended(&fa, &lat, &witnesses, default_budget())?;
    let j = io::classification_to_json(&c);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&j)?),
        Format::Table => {
            println!(
                "family {family} over Q(zeta_{cond}), lattice '{}' ({} scalars)",
                lat.description,
                lat.len()
            );
            println!(
                "{} extended structures, {} isomorphism classes, {} unresolved pairs",
                c.structures.len(),
                c.classes.len(),
                c.unresolved.len()
            );
            for (i, s) in c.structures.iter().enumerate() {
                let phi_desc = if s.phi.is_identity() {
                    "phi = id".to_string()
                } else {
                    format!("phi = {:?}", s.phi.to_row_strings())
                };
                let tail = if s.free_directions.is_empty() {
                    String::new()
                } else {
                    format!(
                        " + span{{{}}}",
                        s.free_directions
                            .iter()
                            .map(|d| format!("[{}]", d.to_strings().join(", ")))
                            .collect::<Vec<_>>()
                            .join(", ")
                    )
                };
                println!(
                    "  [{i}] {phi_desc}, theta = [{}]{tail}",
                    s.theta.to_strings().join(", ")
                );
            }
            for (k, class) in c.classes.iter().enumerate() {
                println!("  class {k}: {class:?}");
            }
        }
    }
    Ok(0)
}

fn dump_catalog(family: &str, param: Option<usize>, field_conductor: Option<u64>) -> Result<i32> {
    let cond = match field_conductor {
        Some(n) => n,
        None => family_conductor(family, param)?,
    };
    let field = CycField::new(cond)?;
    let fa = family_frobenius(family, param, &field)?;
    let structures = family_structures(family, &field)?;
    let out = serde_json::json!({
        "algebra": io::frob_to_json(&fa),
        "extensions": structures
            .map(|list| list.iter().map(io::ext_to_json).collect::<Vec<_>>()),
    });
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(0)
}

fn functor_check(kind: &str, algebra: &Path, dims: &str, seed: u64, format: Format) -> Result<i32> {
    let text = std::fs::read_to_string(algebra)
        .with_context(|| format!("reading {}", algebra.display()))?;
    let j: io::ExtendedJson = serde_json::from_str(&text)?;
    let carrier = io::ext_from_json(&j)?;
    let pre = check_extended(&carrier)?;
    if !pre.passed() {
        print_report(&pre, format)?;
        return Ok(1);
    }
    let fr = match kind {
        "tensor" => RealizedFunctor::TensorWith(carrier.clone()),
        "biproduct" => RealizedFunctor::BiproductWith(carrier.clone()),
        other => bail!("unknown functor kind '{other}'"),
    };
    let dims: Vec<usize> = dims
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| anyhow!("bad dims '{dims}'")))
        .collect::<Result<_>>()?;
    let sample = ObjectSample::generate(carrier.field(), &dims, 5, seed);
    let mut report = check_frobenius_functor(&fr, &sample)?;
    report.merge(check_extended_functor(&fr, &sample)?);
    report.push(
        "separable",
        true,
        Some(format!(
            "F2 . F_2 = id on the sample: {} (seed {seed})",
            check_separable_functor(&fr, &sample)?
        )),
    );
    print_report(&report, format)?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn hopf_check(input: &Path, format: Format) -> Result<i32> {
    let text = std::fs::read_to_string(input)
        .with_context(|| format!("reading {}", input.display()))?;
    let j: io::HopfJson = serde_json::from_str(&text)?;
    let h = io::hopf_from_json(&j)?;
    let mut rep = check_hopf(&h)?;
    rep.merge(check_integral_composites(&h)?);
    print_report(&rep, format)?;
    Ok(if rep.passed() { 0 } else { 1 })
}

fn acceptance(seed: u64) -> Result<i32> {
    let outcomes = run_acceptance(seed);
    let mut all_ok = true;
    for o in &outcomes {
        // stdout stays byte-deterministic; timings go to stderr
        println!("{}", o.line_deterministic());
        eprintln!("{}", o.line());
        if !o.passed {
            all_ok = false;
        }
    }
    println!(
        "{} of {} criteria passed (seed {seed})",
        outcomes.iter().filter(|o| o.passed).count(),
        outcomes.len()
    );
    Ok(if all_ok { 0 } else { 1 })
}

fn goldens(dir: &Path) -> Result<i32> {
    std::fs::create_dir_all(dir)?;
    let write = |name: &str, text: String| -> Result<()> {
        let path = dir.join(name);
        std::fs::write(&path, text)?;
        println!("wrote {}", path.display());
        Ok(())
    };

    for (family, param) in [("k", None), ("complex-over-real", None), ("kC2", None)] {
        let cond = family_conductor(family, param)?;
        let field = CycField::new(cond)?;
        let fa = family_frobenius(family, param, &field)?;
        let lat = family_lattice(family, param, &field)?;
        let witnesses = family_witnesses(family, &field)?;
        let c = classify_extended(&fa, &lat, &witnesses, default_budget())?;
        let j = io::classification_to_json(&c);
        write(
            &format!("classify_{family}.json"),
            serde_json::to_string_pretty(&j)? + "\n",
        )?;
    }
    for family in ["kC2", "klein-four", "taft2"] {
        let cond = family_conductor(family, None)?;
        let field = CycField::new(cond)?;
        let fa = family_frobenius(family, None, &field)?;
        write(
            &format!("algebra_{family}.json"),
            serde_json::to_string_pretty(&io::frob_to_json(&fa))? + "\n",
        )?;
    }
    let field = CycField::new(1)?;
    let h = group_hopf(&GroupTable::cyclic(2)?, &field)?;
    write(
        "hopf_C2.json",
        serde_json::to_string_pretty(&io::hopf_to_json(&h))? + "\n",
    )?;
    let field = CycField::new(8)?;
    let e = family_structures("kC2", &field)?.unwrap().remove(0);
    write(
        "extended_kC2_0.json",
        serde_json::to_string_pretty(&io::ext_to_json(&e))? + "\n",
    )?;
    Ok(0)
}
