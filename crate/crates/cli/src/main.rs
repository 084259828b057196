use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use symres_geometry::group::parse_generators;
use symres_geometry::model::AmbientModel;
use symres_geometry::report::{self, golden_diff, Report, Section};
use symres_geometry::smoothness::CertificateTree;
use symres_geometry::stability::{TypeTable, KAPPA};

const DEFAULT_DATA_DIR: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data");
const CERTIFICATE_FILE: &str = "certificate.json";
const TABLE_FILE: &str = "table2.json";

#[derive(Parser, Debug)]
#[command(name = "symres", version, about = "Exact checks for a symplectic quotient of C^4 by a group of order 32")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Character of the torus linearization, five comma-separated integers.
    #[arg(long, global = true, value_parser = parse_character, default_value = "2,2,2,2,2")]
    character: [i64; 5],
    /// Sweep one representative per cyclic orbit of faces.
    #[arg(long, global = true)]
    cyclic: bool,
    /// Print the structured report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the structured report to this file.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Compare every section with `<dir>/<section>.json`.
    #[arg(long, global = true)]
    golden_dir: Option<PathBuf>,
    /// Write every section's data to `<dir>/<section>.json`.
    #[arg(long, global = true)]
    write_golden: Option<PathBuf>,
    /// Seed of the rank probe.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Sample points per face in the rank probe.
    #[arg(long, global = true, default_value_t = 40)]
    trials: usize,
    /// Largest degree of the invariant monomial comparison.
    #[arg(long, global = true, default_value_t = 4)]
    degree_bound: u32,
    /// Directory holding the certificate and type table.
    #[arg(long, global = true, env = "SYMRES_DATA_DIR", default_value = DEFAULT_DATA_DIR)]
    data_dir: PathBuf,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// Order, classes and identities of the reflection group.
    GroupFacts {
        /// JSON list of square matrices with `[re, im]` entries replacing the reflections.
        #[arg(long)]
        generators: Option<String>,
    },
    /// Signs of the reflections on the quadratic eigenforms.
    EigenTable,
    /// Vanishing and homogeneity of the ideal generators.
    IdealCheck,
    /// Faces of the orthant whose torus meets the variety.
    Ifaces,
    /// Semistable and stable orbits for a character.
    Stability,
    /// Replays the Jacobian-minor certificate.
    Smoothness,
    /// Chamber decompositions of the movable and effective cones.
    Chambers,
    /// Monomial valuations and invariant monomials.
    Valuations,
    /// Section sets of the resolved A_1 singularity.
    ToricDemo,
    /// Fixed-point combinatorics of the quaternion and Kummer actions.
    Kummer,
    /// Every section in turn.
    All,
}

fn parse_character(s: &str) -> Result<[i64; 5], String> {
    let v: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()?;
    v.try_into().map_err(|v: Vec<i64>| format!("expected 5 entries, got {}", v.len()))
}

/// Failures that are the caller's fault rather than a failed check.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn read_data(dir: &Path, name: &str) -> Result<String> {
    let path = dir.join(name);
    if !path.is_file() {
        return Err(usage(format!("missing data file {}", path.display())));
    }
    fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))
}

fn table(cli: &Cli) -> Result<TypeTable> {
    if cli.data_dir.join(TABLE_FILE).is_file() {
        Ok(TypeTable::parse(&read_data(&cli.data_dir, TABLE_FILE)?)?)
    } else {
        Ok(TypeTable::builtin())
    }
}

fn sections(cli: &Cli) -> Result<Vec<Section>> {
    let model = AmbientModel::standard();
    let mut out = Vec::new();
    let all = matches!(cli.command, Command::All);
    let wants = |c: &Command| all || std::mem::discriminant(c) == std::mem::discriminant(&cli.command);
    if let Command::GroupFacts { generators: Some(text) } = &cli.command {
        let gens = parse_generators(text).map_err(|e| usage(e.to_string()))?;
        out.push(report::group_section(Some(&gens))?);
    } else if wants(&Command::GroupFacts { generators: None }) {
        out.push(report::group_section(None)?);
    }
    if wants(&Command::EigenTable) {
        out.push(report::eigen_section()?);
    }
    if wants(&Command::IdealCheck) {
        out.push(report::ideal_section(&model));
    }
    if wants(&Command::Ifaces) {
        out.push(report::ifaces_section(&model, cli.cyclic));
    }
    if wants(&Command::Stability) {
        out.push(report::stability_section(&model, &table(cli)?, cli.character, cli.cyclic)?);
    }
    if wants(&Command::Smoothness) {
        let tree = CertificateTree::parse(&read_data(&cli.data_dir, CERTIFICATE_FILE)?)?;
        let table = TypeTable::parse(&read_data(&cli.data_dir, TABLE_FILE)?)?;
        if cli.character != KAPPA {
            return Err(usage("the certificate covers the character 2,2,2,2,2 only"));
        }
        out.push(report::smoothness_section(&model, &tree, &table, cli.trials, cli.seed)?);
    }
    if wants(&Command::Chambers) {
        out.push(report::chambers_section()?);
    }
    if wants(&Command::Valuations) {
        out.push(report::valuations_section(cli.degree_bound)?);
    }
    if wants(&Command::ToricDemo) {
        out.push(report::toric_section()?);
    }
    if wants(&Command::Kummer) {
        out.push(report::kummer_section()?);
    }
    Ok(out)
}

/// Returns whether every section matches its golden file.
fn compare_golden(dir: &Path, report: &Report) -> Result<bool> {
    let mut ok = true;
    for s in &report.sections {
        let path = dir.join(format!("{}.json", s.name));
        if !path.is_file() {
            return Err(usage(format!("missing golden file {}", path.display())));
        }
        let golden: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path)?)
            .with_context(|| format!("parsing {}", path.display()))?;
        let diff = golden_diff(s, &golden);
        if !diff.is_empty() {
            eprintln!("{}: differs from golden in {}", s.name, diff.join(", "));
            ok = false;
        }
    }
    Ok(ok)
}

fn run(cli: &Cli) -> Result<bool> {
    if let Ok(n) = std::env::var("SYMRES_THREADS") {
        let n: usize = n.parse().map_err(|_| usage(format!("SYMRES_THREADS={n:?} is not a count")))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let report = Report::new(sections(cli)?);
    let json = serde_json::to_string_pretty(&report)?;
    if cli.json {
        println!("{json}");
    } else {
        for s in &report.sections {
            println!("== {} {}", s.name, if s.passed { "PASS" } else { "FAIL" });
            for l in &s.lines {
                println!("  {l}");
            }
        }
    }
    if let Some(path) = &cli.output {
        fs::write(path, &json).with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(dir) = &cli.write_golden {
        fs::create_dir_all(dir)?;
        for s in &report.sections {
            fs::write(dir.join(format!("{}.json", s.name)), serde_json::to_string_pretty(&s.data)? + "\n")?;
        }
    }
    let golden_ok = match &cli.golden_dir {
        Some(dir) => compare_golden(dir, &report)?,
        None => true,
    };
    if report.sections.is_empty() {
        bail!("no sections ran");
    }
    Ok(report.passed() && golden_ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
