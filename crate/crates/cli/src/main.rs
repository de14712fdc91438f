use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qsdl_core::alt::{self, primitive_markdown, PRIMITIVE_HEADERS};
use qsdl_core::data::{DataSource, ATLAS, KNOWN_DESIGNS, ALT_MAXIMALS, MONSTER, PRODUCT_SOCLES, SIMPLE_GROUPS};
use qsdl_core::design::{base_block_search_capped, flag_orbit, DEFAULT_SUBSET_CAP};
use qsdl_core::literature::load_known_designs;
use qsdl_core::reduction;
use qsdl_core::report::{markdown_table, tsv_table};
use qsdl_core::sieve::{enumerate_for_v, SearchBox};
use qsdl_core::sporadic::{self, monster_check, sporadic_markdown, sporadic_tsv};
use qsdl_core::{intersection_numbers, pair_coverage, parse_generators, Candidate, Design, Error, Group};

#[derive(Debug, Parser)]
#[command(name = "qsdl", version, about = "Parameter sieves, case eliminations and design verification for flag-transitive quasi-symmetric 2-designs")]
struct Cli {
    /// Directory holding the data files (overrides the compiled-in copies).
    #[arg(long = "seed-data", env = "QSDL_DATA", global = true, value_name = "DIR")]
    seed_data: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Markdown, global = true)]
    format: Format,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Markdown,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List admissible parameter tuples for each point count.
    Sieve {
        /// Point count or range `a..b` (inclusive).
        #[arg(long)]
        v: String,
        /// Range of the nonzero intersection number.
        #[arg(long, default_value = "2..10")]
        y: String,
    },
    /// Eliminate a non-almost-simple primitive type.
    Reduce {
        #[arg(value_enum)]
        case: ReduceCase,
        #[arg(long, default_value_t = 10)]
        y_max: u64,
    },
    /// Alternating socle: primitive, imprimitive and intransitive stabilizers.
    Alt {
        #[arg(long, default_value_t = 10)]
        y_max: u64,
    },
    /// Sporadic socle screen and the Monster check.
    Sporadic {
        #[arg(long, default_value_t = 10)]
        y_max: u64,
    },
    /// Check a design file against a group.
    Verify {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        design: PathBuf,
    },
    /// Find every orbit of k-subsets that is a quasi-symmetric 2-design.
    Search {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 10)]
        y_max: usize,
        /// Largest number of k-subsets to sweep.
        #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
        cap: u128,
        /// Directory for the design files.
        #[arg(long, default_value = ".")]
        dir: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReduceCase {
    Twisted,
    Diagonal,
    Product,
}

/// Failure with its exit code.
#[derive(Debug)]
enum Failure {
    Verification(String),
    Usage(String),
    Data(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Data(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Usage(m) | Failure::Data(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::CapExceeded { .. } => Failure::Usage(e.to_string()),
            Error::Design(_) => Failure::Verification(e.to_string()),
            Error::Parse { .. } | Error::Load { .. } | Error::Data { .. } => Failure::Data(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<u64>, Failure> {
    let bad = || Failure::Usage(format!("invalid range {s:?}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn table(format: Format, headers: &[&str], rows: &[Vec<String>]) -> String {
    match format {
        Format::Tsv => tsv_table(headers, rows),
        Format::Markdown => markdown_table(headers, rows),
    }
}

fn check_y_max(y_max: u64) -> Outcome {
    if !(2..=10).contains(&y_max) {
        return Err(Failure::Usage(format!("--y-max must lie in 2..=10, got {y_max}")));
    }
    Ok(())
}

/// Reads a file by path, falling back to the data source for bare names.
fn read_input(src: &DataSource, path: &Path) -> std::result::Result<String, Failure> {
    if path.exists() {
        return Ok(fs::read_to_string(path)?);
    }
    let name = path.to_string_lossy();
    if path.components().count() == 1 {
        if let Ok(text) = src.read(&name) {
            return Ok(text);
        }
    }
    Err(Failure::Data(format!("cannot read {name}")))
}

fn cmd_sieve(out: &mut dyn Write, format: Format, v: &str, y: &str) -> Outcome {
    let vs = parse_range(v)?;
    let ys = parse_range(y)?;
    if *vs.start() < 5 {
        return Err(Failure::Usage(format!("v must be at least 5, got {}", vs.start())));
    }
    if *ys.start() < 2 {
        return Err(Failure::Usage(format!("y must be at least 2, got {}", ys.start())));
    }
    let headers: Vec<&str> = Candidate::TSV_HEADER.split('\t').collect();
    match format {
        Format::Tsv => writeln!(out, "{}", Candidate::TSV_HEADER)?,
        Format::Markdown => write!(out, "{}", markdown_table(&headers, &[]))?,
    }
    for v in vs {
        for c in enumerate_for_v(&SearchBox::new(v, ys.clone()))? {
            let row = c.tsv_row();
            match format {
                Format::Tsv => writeln!(out, "{row}")?,
                Format::Markdown => writeln!(out, "| {} |", row.replace('\t', " | "))?,
            }
        }
    }
    Ok(())
}

fn cmd_reduce(out: &mut dyn Write, format: Format, src: &DataSource, case: ReduceCase, y_max: u64) -> Outcome {
    check_y_max(y_max)?;
    match case {
        ReduceCase::Twisted => write!(out, "{}", reduction::twisted_report(y_max)?)?,
        ReduceCase::Diagonal => {
            let catalog = reduction::load_simple_groups(&src.read(SIMPLE_GROUPS)?)?;
            let feasible = reduction::diagonal_feasible(y_max, &catalog)?;
            for m in 2..=reduction::diagonal_m_max(y_max) {
                let names: Vec<&str> = feasible.iter().filter(|(_, fm)| *fm == m).map(|(t, _)| t.name()).collect();
                writeln!(out, "m={m}: {}", if names.is_empty() { "none".to_string() } else { names.join(", ") })?;
            }
            writeln!(out)?;
            write!(out, "{}", reduction::diagonal_report(y_max, &catalog)?)?;
        }
        ReduceCase::Product => {
            let catalog = reduction::load_simple_groups(&src.read(SIMPLE_GROUPS)?)?;
            let socles = reduction::load_product_socles(&src.read(PRODUCT_SOCLES)?)?;
            let rows = reduction::product_action_rows(y_max, &socles)?;
            write!(out, "{}", table(format, &reduction::PRODUCT_HEADERS, &reduction::product_table_rows(&rows)))?;
            writeln!(out)?;
            write!(out, "{}", reduction::product_report(y_max, &socles, &catalog)?)?;
            writeln!(out)?;
            write!(out, "{}", reduction::product_action_high_m(y_max, 1_000_000)?)?;
        }
    }
    Ok(())
}

fn cmd_alt(out: &mut dyn Write, format: Format, src: &DataSource, y_max: u64) -> Outcome {
    check_y_max(y_max)?;
    let catalog = alt::load_alt_maximals(&src.read(ALT_MAXIMALS)?)?;
    let known = load_known_designs(&src.read(KNOWN_DESIGNS)?)?;
    let s = alt::alt_summary(&catalog, &known, y_max)?;
    match format {
        Format::Markdown => write!(out, "{}", primitive_markdown(&s.primitive.rows))?,
        Format::Tsv => {
            let rows: Vec<Vec<String>> = s
                .primitive
                .rows
                .iter()
                .map(|r| {
                    let d: Vec<String> = r.divisors.iter().map(u64::to_string).collect();
                    vec![r.v.to_string(), r.n.to_string(), d.join(","), r.g_kind.to_string(), r.h_name.clone()]
                })
                .collect();
            write!(out, "{}", tsv_table(&PRIMITIVE_HEADERS, &rows))?;
        }
    }
    for rep in [&s.n6, &s.primitive.report, &s.imprimitive, &s.intransitive] {
        writeln!(out)?;
        write!(out, "{rep}")?;
    }
    Ok(())
}

fn cmd_sporadic(out: &mut dyn Write, format: Format, src: &DataSource, y_max: u64) -> Outcome {
    check_y_max(y_max)?;
    let records = sporadic::load_atlas(&src.read(ATLAS)?)?;
    let known = load_known_designs(&src.read(KNOWN_DESIGNS)?)?;
    let monster = sporadic::load_monster(&src.read(MONSTER)?)?;
    let an = sporadic::sporadic_analysis(&records, &known, y_max)?;
    match format {
        Format::Markdown => write!(out, "{}", sporadic_markdown(&an.rows))?,
        Format::Tsv => write!(out, "{}", sporadic_tsv(&an.rows))?,
    }
    writeln!(out)?;
    write!(out, "{}", an.report)?;
    writeln!(out)?;
    writeln!(out, "## Monster candidates")?;
    for v in monster_check(&monster.candidates, &monster.order) {
        let verdict = if v.excluded { "excluded: |Aut(N)|^3 < |M|" } else { "not excluded" };
        writeln!(out, "{} |Aut(N)|={}: {verdict}", v.name, v.aut_order)?;
    }
    Ok(())
}

fn describe(g: &Group, d: &Design) -> std::result::Result<String, Failure> {
    let cov = pair_coverage(d);
    let Some(lambda) = cov.lambda else {
        let ((p, q), c, l) = cov.violation.expect("violation recorded");
        return Err(Failure::Verification(format!(
            "not a 2-design: points {} and {} lie in {c} blocks, points 1 and 2 in {l}",
            p + 1,
            q + 1
        )));
    };
    let profile = intersection_numbers(d)?;
    let r = d.r().map_or("-".to_string(), |r| r.to_string());
    let flags = flag_orbit(g, d)?;
    let transitive = flags == d.b() * d.k();
    let mut s = String::new();
    s.push_str(&format!("is-2-design: true\n(v,b,r,k,lambda): ({},{},{},{},{})\n", d.v(), d.b(), r, d.k(), lambda));
    s.push_str(&format!("intersection numbers: {profile}\nflag orbit: {flags} of {}\n", d.b() * d.k()));
    s.push_str(&format!("2-({},{},{}), {profile}, flag-transitive: {transitive}\n", d.v(), d.k(), lambda));
    Ok(s)
}

fn cmd_verify(out: &mut dyn Write, src: &DataSource, group: &Path, design: &Path) -> Outcome {
    let g = parse_generators(&read_input(src, group)?)?;
    let d = Design::parse(&read_input(src, design)?)?;
    if g.degree() != d.v() {
        return Err(Failure::Verification(format!("group degree {} differs from v={}", g.degree(), d.v())));
    }
    let text = describe(&g, &d)?;
    write!(out, "{text}")?;
    if flag_orbit(&g, &d)? != d.b() * d.k() {
        return Err(Failure::Verification("the group is not flag-transitive".into()));
    }
    Ok(())
}

fn cmd_search(out: &mut dyn Write, src: &DataSource, group: &Path, k: usize, y_max: usize, cap: u128, dir: &Path) -> Outcome {
    let g = parse_generators(&read_input(src, group)?)?;
    let found = base_block_search_capped(&g, k, y_max, cap)?;
    let stem = group.file_stem().map_or("design".into(), |s| s.to_string_lossy().into_owned());
    fs::create_dir_all(dir)?;
    writeln!(out, "{} design(s)", found.len())?;
    for (i, d) in found.iter().enumerate() {
        let path = dir.join(format!("{stem}-k{k}-{}.blk", i + 1));
        fs::write(&path, d.to_file_string())?;
        let lambda = pair_coverage(d).lambda.expect("search returns 2-designs");
        let profile = intersection_numbers(d)?;
        writeln!(out, "2-({},{},{}), b={}, {profile}: {}", d.v(), d.k(), lambda, d.b(), path.display())?;
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let src = match &cli.seed_data {
        Some(dir) if !dir.is_dir() => return Err(Failure::Data(format!("data directory {} not found", dir.display()))),
        Some(dir) => DataSource::dir(dir),
        None => DataSource::embedded(),
    };
    let mut buf: Vec<u8> = Vec::new();
    let result = match &cli.command {
        Command::Sieve { v, y } => cmd_sieve(&mut buf, cli.format, v, y),
        Command::Reduce { case, y_max } => cmd_reduce(&mut buf, cli.format, &src, *case, *y_max),
        Command::Alt { y_max } => cmd_alt(&mut buf, cli.format, &src, *y_max),
        Command::Sporadic { y_max } => cmd_sporadic(&mut buf, cli.format, &src, *y_max),
        Command::Verify { group, design } => cmd_verify(&mut buf, &src, group, design),
        Command::Search { group, k, y_max, cap, dir } => cmd_search(&mut buf, &src, group, *k, *y_max, *cap, dir),
    };
    match &cli.out {
        Some(path) => fs::write(path, &buf)?,
        None => io::stdout().write_all(&buf)?,
    }
    result
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
