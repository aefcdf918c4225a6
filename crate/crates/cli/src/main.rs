//! Command line front end: load algebra files, run identity checks, print
//! power towers, twist untwisted algebras, export the catalog, and fuzz.
//!
//! Exit codes: 0 when every requested check holds, 1 when some check failed
//! (a counterexample is printed), 2 on usage or load errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::exit;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;

use homalg::constructions::{catalog, is_algebra_endomorphism, random_hom_leibniz, yau_twist};
use homalg::format::{self, Loaded};
use homalg::powers::{self, DEFAULT_POWER_BOUND};
use homalg::suite::{run_check, IDENTITY_CHECK_NAMES};
use homalg::{check_hom_akivis_identity, to_hom_akivis};
use homalg::{CheckReport, Element, HomAlgebra, Witness};

#[derive(Parser)]
#[command(
    name = "homalg",
    version,
    about = "Exact identity checking for finite-dimensional Hom-algebras over the rationals"
)]
struct Cli {
    /// Emit machine-readable JSON reports on stdout
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run named identity checks on an algebra file
    Check {
        file: PathBuf,
        /// Identity to check (repeatable); unknown names list the valid ones
        #[arg(long = "identity", value_name = "NAME")]
        identities: Vec<String>,
        /// Check every identity (the default when none is named)
        #[arg(long)]
        all: bool,
        /// Fail instead of warning when the twist is not multiplicative
        #[arg(long)]
        strict: bool,
    },
    /// Print the Hom-power tower of a concrete element
    Powers {
        file: PathBuf,
        /// Coordinates of the base element, e.g. "0,1" or "1,0,-2/3"
        #[arg(long)]
        element: String,
        /// Use the left tower a^n = alpha^(n-2)(a) a^(n-1) instead of the
        /// right tower x^n = x^(n-1) alpha^(n-2)(x)
        #[arg(long)]
        left: bool,
        #[arg(long = "max-n", default_value_t = DEFAULT_POWER_BOUND)]
        max_n: usize,
        #[arg(long)]
        strict: bool,
    },
    /// Symbolic power-associativity verdicts for a generic element
    PowerAssoc {
        file: PathBuf,
        #[arg(long = "max-n", default_value_t = DEFAULT_POWER_BOUND)]
        max_n: usize,
        #[arg(long)]
        strict: bool,
    },
    /// Twist an untwisted algebra along a multiplicative endomorphism
    Twist {
        file: PathBuf,
        /// Matrix file: one row per line, whitespace-separated rationals
        #[arg(long = "map")]
        map: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// List the built-in catalog, optionally exporting it to files
    Catalog {
        /// Write every entry as `<name>.alg` into this directory
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Generate and self-check seeded random Hom-Leibniz algebras
    Fuzz {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

#[derive(Serialize)]
struct WitnessJson {
    kind: &'static str,
    data: serde_json::Value,
}

#[derive(Serialize)]
struct ReportJson {
    identity: String,
    holds: bool,
    witness: Option<WitnessJson>,
    residual: Option<Vec<String>>,
}

fn coord_strings(e: &Element) -> Vec<String> {
    e.coords().iter().map(|c| c.to_string()).collect()
}

fn report_json(r: &CheckReport) -> ReportJson {
    let witness = r.witness.as_ref().map(|w| match w {
        Witness::Basis(ix) => WitnessJson {
            kind: "basis",
            data: serde_json::json!(ix),
        },
        Witness::Point(p) => WitnessJson {
            kind: "point",
            data: serde_json::json!(coord_strings(p)),
        },
    });
    ReportJson {
        identity: r.identity.clone(),
        holds: r.holds,
        witness,
        residual: r.residual.as_ref().map(coord_strings),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports always serialize")
    );
}

fn emit_reports(reports: &[CheckReport], json: bool) -> u8 {
    if json {
        print_json(&reports.iter().map(report_json).collect::<Vec<_>>());
    } else {
        for r in reports {
            println!("{r}");
        }
    }
    u8::from(reports.iter().any(|r| !r.holds))
}

fn load(file: &Path, strict: bool) -> Result<Loaded> {
    let loaded = format::load_path(file, strict)?;
    if !loaded.multiplicative.holds {
        eprintln!(
            "warning: {}: twist is not multiplicative ({}); verdicts refer to the raw data",
            file.display(),
            loaded.multiplicative
        );
    }
    Ok(loaded)
}

fn run_named_checks(loaded: &Loaded, names: &[&str]) -> Vec<CheckReport> {
    names
        .iter()
        .map(|&name| match name {
            // prefer the ternary tensor stored in the file, when present
            "hom-akivis" => match &loaded.akivis {
                Some(k) => check_hom_akivis_identity(k),
                None => check_hom_akivis_identity(&to_hom_akivis(&loaded.algebra)),
            },
            _ => run_check(&loaded.algebra, name).expect("names validated before running"),
        })
        .collect()
}

fn cmd_check(
    file: PathBuf,
    identities: Vec<String>,
    _all: bool,
    strict: bool,
    json: bool,
) -> Result<u8> {
    for name in &identities {
        if !IDENTITY_CHECK_NAMES.contains(&name.as_str()) {
            bail!(
                "unknown identity `{name}`; valid names: {}",
                IDENTITY_CHECK_NAMES.join(", ")
            );
        }
    }
    let loaded = load(&file, strict)?;
    let names: Vec<&str> = if identities.is_empty() {
        IDENTITY_CHECK_NAMES.to_vec()
    } else {
        identities.iter().map(String::as_str).collect()
    };
    let reports = run_named_checks(&loaded, &names);
    Ok(emit_reports(&reports, json))
}

#[derive(Serialize)]
struct PowerJson {
    n: usize,
    coords: Vec<String>,
}

fn cmd_powers(
    file: PathBuf,
    element: String,
    left: bool,
    max_n: usize,
    strict: bool,
    json: bool,
) -> Result<u8> {
    if max_n < 1 {
        bail!("--max-n must be at least 1");
    }
    let loaded = load(&file, strict)?;
    let a = &loaded.algebra;
    let x = Element::parse_csv(&element)?;
    if x.dim() != a.dim() {
        bail!(
            "element has {} coordinates but the algebra has dimension {}",
            x.dim(),
            a.dim()
        );
    }
    let label = if left { "a" } else { "x" };
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let p = if left {
            powers::left_hom_power(a, &x, n)?
        } else {
            powers::right_hom_power(a, &x, n)?
        };
        rows.push((n, p));
    }
    if json {
        print_json(
            &rows
                .iter()
                .map(|(n, p)| PowerJson {
                    n: *n,
                    coords: coord_strings(p),
                })
                .collect::<Vec<_>>(),
        );
    } else {
        let kind = if left { "left" } else { "right" };
        println!("{kind} Hom-powers of {label} = {x}");
        for (n, p) in &rows {
            println!("{label}^{n} = {p}");
        }
    }
    Ok(0)
}

fn cmd_power_assoc(file: PathBuf, max_n: usize, strict: bool, json: bool) -> Result<u8> {
    if max_n < 3 {
        bail!("--max-n must be at least 3");
    }
    let loaded = load(&file, strict)?;
    let a = &loaded.algebra;
    let mut reports = Vec::new();
    for n in 2..=max_n {
        reports.push(powers::check_nth_hom_power_associative(a, n)?);
    }
    reports.push(powers::check_hom_power_associative(a));
    reports.push(powers::check_third_power_criterion(a));
    reports.push(powers::check_right_powers_vanish(a, max_n)?);
    reports.push(powers::check_left_powers_annihilate(a, max_n)?);
    if a.is_twist_identity() {
        reports.push(powers::check_left_powers_annihilate_untwisted(a, max_n));
        reports.push(powers::check_power_associative(a));
    }
    Ok(emit_reports(&reports, json))
}

fn cmd_twist(file: PathBuf, map: PathBuf, out: PathBuf, json: bool) -> Result<u8> {
    let loaded = load(&file, true)?;
    let a = &loaded.algebra;
    if !a.is_twist_identity() {
        bail!(
            "{}: twisting starts from an untwisted algebra (twist must be the identity)",
            file.display()
        );
    }
    let text = fs::read_to_string(&map)
        .with_context(|| format!("failed to read matrix file `{}`", map.display()))?;
    let m = format::parse_matrix_text(&text, &map.display().to_string())?;
    if m.dim() != a.dim() {
        bail!(
            "matrix is {}x{} but the algebra has dimension {}",
            m.dim(),
            m.dim(),
            a.dim()
        );
    }
    let endo = is_algebra_endomorphism(a, &m)?;
    if !endo.holds {
        if json {
            print_json(&vec![report_json(&endo)]);
        } else {
            println!("{endo}");
        }
        return Ok(1);
    }
    let twisted = yau_twist(a, &m)?;
    fs::write(
        &out,
        format::to_canonical_json(&format::algebra_to_file(&twisted)),
    )
    .with_context(|| format!("failed to write `{}`", out.display()))?;
    let verdict = homalg::identities::check_left_hom_leibniz(&twisted);
    if json {
        print_json(&vec![report_json(&endo), report_json(&verdict)]);
    } else {
        println!("wrote {}", out.display());
        println!("{endo}");
        println!("{verdict}");
    }
    Ok(0)
}

fn cmd_catalog(export: Option<PathBuf>, json: bool) -> Result<u8> {
    let entries = catalog();
    if let Some(dir) = &export {
        fs::create_dir_all(dir).with_context(|| format!("failed to create `{}`", dir.display()))?;
        let mut listing = Vec::new();
        for entry in &entries {
            let path = dir.join(format!("{}.alg", entry.name));
            fs::write(
                &path,
                format::to_canonical_json(&format::algebra_to_file(&entry.algebra)),
            )
            .with_context(|| format!("failed to write `{}`", path.display()))?;
            if json {
                listing.push(serde_json::json!({
                    "name": entry.name,
                    "dim": entry.algebra.dim(),
                    "file": path.display().to_string(),
                }));
            } else {
                println!("wrote {}", path.display());
            }
        }
        if json {
            print_json(&listing);
        }
        return Ok(0);
    }
    if json {
        print_json(
            &entries
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "name": e.name,
                        "dim": e.algebra.dim(),
                        "provenance": e.provenance,
                    })
                })
                .collect::<Vec<_>>(),
        );
    } else {
        for e in &entries {
            println!("{:12} dim {}  {}", e.name, e.algebra.dim(), e.provenance);
        }
    }
    Ok(0)
}

fn cmd_fuzz(seed: u64, dim: usize, count: usize, json: bool) -> Result<u8> {
    let mut failed = false;
    let mut out = Vec::new();
    for k in 0..count {
        let s = seed + k as u64;
        let a: HomAlgebra = random_hom_leibniz(s, dim)?;
        let reports = [
            a.check_multiplicative(),
            homalg::identities::check_left_hom_leibniz(&a),
        ];
        failed |= reports.iter().any(|r| !r.holds);
        if json {
            out.push(serde_json::json!({
                "seed": s,
                "dim": dim,
                "checks": reports.iter().map(report_json).collect::<Vec<_>>(),
            }));
        } else {
            let verdicts = reports
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            println!("seed {s}: dim {dim}, {verdicts}");
        }
    }
    if json {
        print_json(&out);
    }
    Ok(u8::from(failed))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Check {
            file,
            identities,
            all,
            strict,
        } => cmd_check(file, identities, all, strict, cli.json),
        Command::Powers {
            file,
            element,
            left,
            max_n,
            strict,
        } => cmd_powers(file, element, left, max_n, strict, cli.json),
        Command::PowerAssoc {
            file,
            max_n,
            strict,
        } => cmd_power_assoc(file, max_n, strict, cli.json),
        Command::Twist { file, map, out } => cmd_twist(file, map, out, cli.json),
        Command::Catalog { export } => cmd_catalog(export, cli.json),
        Command::Fuzz { seed, dim, count } => cmd_fuzz(seed, dim, count, cli.json),
    }
}

fn main() {
    // die quietly when a downstream pipe closes, like other line-oriented tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => exit(code.into()),
        Err(e) => {
            eprintln!("error: {e:#}");
            exit(2);
        }
    }
}
