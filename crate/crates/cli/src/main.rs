use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use quatrelax::catalog::{
    check_catalog_delta_identities, generate_catalog, m99_candidates, run_sweep, splitter_check, verify_structure_theorem,
    SweepOptions,
};
use quatrelax::constructions::{named, parse_path_spec, run_path_sequence, whirl};
use quatrelax::minors::{fragility_report, u24_family, u25_u35_family, Target};
use quatrelax::relaxation::{build_reduced_representation, omega_corner_search, representable_gf4, Witness};
use quatrelax::scanner;
use quatrelax::{Error, Gf4Matrix, Matroid};

const EXIT_NOT_REPRESENTABLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_VERIFICATION: u8 = 3;

#[derive(Parser)]
#[command(name = "quatrelax", version, about = "Circuit-hyperplane relaxations of GF(4)-representable matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan an interior matrix for forbidden templates.
    Scan { matrix: PathBuf },
    /// Build M from an interior matrix, relax X and compare all three verdicts.
    Relax { matrix: PathBuf },
    /// Print a reduced GF(4) representation of a matroid, or "none".
    Represent { matroid: PathBuf },
    /// Per-element deletability and contractibility for a target family.
    Fragility {
        matroid: PathBuf,
        /// Comma-separated targets: u24, u25, u35 or any named matroid.
        #[arg(long, default_value = "u25,u35")]
        targets: String,
    },
    /// Print a named matroid, or the result of a path-sequence spec file.
    Construct { source: String },
    /// Generate the catalog of fragile quaternary matroids.
    Catalog(CatalogArgs),
    /// Sweep interiors of one shape and compare the scanner with both oracles.
    Sweep(SweepArgs),
    /// Verification campaigns.
    Verify {
        #[command(subcommand)]
        campaign: Campaign,
    },
}

#[derive(Args)]
struct CatalogArgs {
    #[arg(long, default_value_t = 9)]
    max_elements: usize,
    /// Write entries here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Also report splitter checks for the rank-4 9-element entries.
    #[arg(long)]
    splitters: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    rows: usize,
    #[arg(long)]
    cols: usize,
    /// Sample this many random interiors instead of all of them.
    #[arg(long)]
    sample: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Print one record line per interior.
    #[arg(long)]
    records: bool,
    /// Match 3-connected relaxations against the structure theorem.
    #[arg(long)]
    structure: bool,
    /// Check the entrywise relations between A and every A'.
    #[arg(long)]
    lemmas: bool,
}

#[derive(Subcommand)]
enum Campaign {
    /// Match every 3-connected representable relaxation to a structure outcome.
    Structure {
        #[arg(long, default_value_t = 8)]
        max_elements: usize,
    },
    /// Entrywise relations between A and A' over a full sweep.
    Lemmas {
        #[arg(long, default_value_t = 2)]
        rows: usize,
        #[arg(long, default_value_t = 2)]
        cols: usize,
    },
    /// Δ-Y identities on every coindependent segment of the catalog.
    Delta {
        #[arg(long, default_value_t = 9)]
        max_elements: usize,
    },
    /// Splitter candidates among the rank-4 9-element catalog entries.
    Splitters,
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

/// Matrix text with `#` comment lines removed.
fn read_matrix(path: &Path) -> anyhow::Result<Gf4Matrix> {
    let text: String = read(path)?.lines().filter(|l| !l.trim_start().starts_with('#')).map(|l| format!("{l}\n")).collect();
    let a = Gf4Matrix::parse(&text).with_context(|| format!("cannot parse {}", path.display()))?;
    if a.rows() == 0 {
        bail!("{} holds an empty matrix", path.display());
    }
    Ok(a)
}

fn read_matroid(path: &Path) -> anyhow::Result<Matroid> {
    Matroid::from_text(&read(path)?).with_context(|| format!("cannot parse {}", path.display()))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn scan(path: &Path) -> anyhow::Result<u8> {
    let a = read_matrix(path)?;
    Ok(match scanner::scan(&a) {
        Some(m) => {
            println!("NOT-REPRESENTABLE {m}");
            EXIT_NOT_REPRESENTABLE
        }
        None => {
            println!("REPRESENTABLE");
            0
        }
    })
}

fn relax(path: &Path) -> anyhow::Result<u8> {
    let a = read_matrix(path)?;
    let (m, rr) = build_reduced_representation(&a)?;
    let relaxed = rr.relaxed();
    println!("M: {} elements, rank {}, {} bases", m.size(), m.rank(), m.num_bases());
    println!("labels: {}", m.labels().join(" "));
    println!("X = {}", m.format_set(rr.x));
    println!("M': {} bases", relaxed.num_bases());
    if relaxed.rank() >= 2 && relaxed.is_isomorphic(&whirl(relaxed.rank())?) {
        println!("M' is the rank-{} whirl", relaxed.rank());
    }
    let scan = scanner::verdict(&rr);
    match &scan.witness {
        Witness::Match(hit) => println!("scanner: NOT-REPRESENTABLE {hit}"),
        _ => println!("scanner: REPRESENTABLE"),
    }
    let omega = omega_corner_search(&rr);
    match &omega.witness {
        Witness::Matrix(c) => println!("omega: REPRESENTABLE {}", c.compact()),
        _ => println!("omega: NOT-REPRESENTABLE"),
    }
    let generic = representable_gf4(&relaxed)?;
    match &generic {
        Some(d) => println!("generic: REPRESENTABLE {}", d.compact()),
        None => println!("generic: NOT-REPRESENTABLE"),
    }
    if scan.representable != omega.representable || omega.representable != generic.is_some() {
        println!("verdicts disagree");
        return Ok(EXIT_VERIFICATION);
    }
    Ok(if scan.representable { 0 } else { EXIT_NOT_REPRESENTABLE })
}

fn represent(path: &Path) -> anyhow::Result<u8> {
    let m = read_matroid(path)?;
    match representable_gf4(&m)? {
        Some(d) => {
            println!("rows {}", d.row_labels().unwrap_or_default().join(" "));
            println!("cols {}", d.col_labels().unwrap_or_default().join(" "));
            print!("{}", d.format());
        }
        None => println!("none"),
    }
    Ok(0)
}

fn parse_targets(spec: &str) -> anyhow::Result<Vec<Target>> {
    let mut out = Vec::new();
    for name in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match name.to_ascii_lowercase().as_str() {
            "u24" => out.extend(u24_family()),
            "u25" => out.push(u25_u35_family().remove(0)),
            "u35" => out.push(u25_u35_family().remove(1)),
            _ => out.push(Target::new(named(name)?)),
        }
    }
    if out.is_empty() {
        bail!("no targets given");
    }
    Ok(out)
}

fn fragility(path: &Path, targets: &str) -> anyhow::Result<u8> {
    let m = read_matroid(path)?;
    let targets = parse_targets(targets)?;
    let r = fragility_report(&m, &targets);
    let width = m.labels().iter().map(String::len).max().unwrap_or(1);
    println!("{:width$}  deletable  contractible", "element");
    for e in 0..m.size() {
        println!("{:width$}  {:9}  {}", m.label(e), yes_no(r.deletable[e]), yes_no(r.contractible[e]));
    }
    println!("has minor: {}", yes_no(r.has_minor));
    println!("fragile: {}", yes_no(r.is_fragile));
    Ok(0)
}

fn construct(source: &str) -> anyhow::Result<u8> {
    let m = if Path::new(source).is_file() {
        let steps = parse_path_spec(&read(Path::new(source))?)?;
        run_path_sequence(&steps)?.matroid
    } else {
        named(source)?
    };
    print!("{}", m.to_text());
    Ok(0)
}

fn catalog(args: &CatalogArgs) -> anyhow::Result<u8> {
    let c = generate_catalog(args.max_elements)?;
    match &args.output {
        Some(path) => fs::write(path, c.to_text()).with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{}", c.to_text()),
    }
    for n in 5..=args.max_elements {
        eprintln!("{n} elements: {}", c.of_size(n).count());
    }
    if args.splitters {
        for e in c.of_size(9).filter(|e| e.matroid.rank() == 4) {
            eprintln!("splitter {} {}", e.key, yes_no(splitter_check(e)?));
        }
    }
    Ok(0)
}

fn sweep(args: &SweepArgs) -> anyhow::Result<u8> {
    let options = SweepOptions {
        structure: args.structure,
        lemmas: args.lemmas,
        keep_lines: args.records,
        sample: args.sample.map(|n| (n, args.seed)),
        structure_bound: None,
    };
    let s = run_sweep(args.rows, args.cols, &options)?;
    for line in &s.lines {
        println!("{line}");
    }
    println!("agreement {}/{}", s.agreement, s.total);
    println!("representable relaxations {}", s.representable);
    println!("distinct relaxations {}", s.distinct_relaxations);
    println!("path width 3 failures {}", s.pw3_failures.len());
    println!("fragility checked {} failures {}", s.fragility_checked, s.fragility_failures.len());
    if args.structure {
        println!("structure checked {} unmatched {}", s.structure.checked, s.structure.unmatched.len());
    }
    if args.lemmas {
        println!("lemma pairs {} failures {}", s.lemmas.pairs, s.lemmas.failures.len());
    }
    if s.passed() {
        return Ok(0);
    }
    println!("disagreements {} (unexplained by the U01 template: {})", s.disagreements.len(), s.unexplained.len());
    for line in s.disagreements.iter().take(10) {
        println!("  {line}");
    }
    Ok(EXIT_VERIFICATION)
}

fn verify(campaign: &Campaign) -> anyhow::Result<u8> {
    let passed = match campaign {
        Campaign::Structure { max_elements } => {
            let r = verify_structure_theorem(*max_elements)?;
            for (outcome, count) in &r.first_match {
                println!("{outcome}: {count}");
            }
            println!("checked {} multiple {} unmatched {}", r.checked, r.multiple, r.unmatched.len());
            for a in r.unmatched.iter().take(10) {
                println!("  unmatched A={a}");
            }
            r.passed()
        }
        Campaign::Lemmas { rows, cols } => {
            let options = SweepOptions { lemmas: true, ..SweepOptions::default() };
            let r = run_sweep(*rows, *cols, &options)?.lemmas;
            println!(
                "pairs {} zero-pattern {} no-omega-plus-one {} equality-transfer {} diagonal {} failures {}",
                r.pairs,
                r.zero_pattern,
                r.no_omega_plus_one,
                r.equality_transfer,
                r.diagonal,
                r.failures.len()
            );
            for f in r.failures.iter().take(10) {
                println!("  {f}");
            }
            r.passed()
        }
        Campaign::Delta { max_elements } => {
            let c = generate_catalog(*max_elements)?;
            let r = check_catalog_delta_identities(&c, *max_elements)?;
            println!("checked {} failures {}", r.checked, r.failures.len());
            for f in r.failures.iter().take(10) {
                println!("  {f}");
            }
            r.failures.is_empty()
        }
        Campaign::Splitters => {
            let c = generate_catalog(9)?;
            let found = m99_candidates(&c)?;
            for e in &found {
                println!("candidate {} {}", e.key, e.representation.compact());
            }
            println!("candidates {}", found.len());
            !found.is_empty()
        }
    };
    Ok(if passed { 0 } else { EXIT_VERIFICATION })
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    match &cli.command {
        Command::Scan { matrix } => scan(matrix),
        Command::Relax { matrix } => relax(matrix),
        Command::Represent { matroid } => represent(matroid),
        Command::Fragility { matroid, targets } => fragility(matroid, targets),
        Command::Construct { source } => construct(source),
        Command::Catalog(args) => catalog(args),
        Command::Sweep(args) => sweep(args),
        Command::Verify { campaign } => verify(campaign),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            let verification = err.chain().any(|c| matches!(c.downcast_ref::<Error>(), Some(Error::Verification(_))));
            ExitCode::from(if verification { EXIT_VERIFICATION } else { EXIT_USAGE })
        }
    }
}
