//! Command-line front end. Every command writes to the given streams and
//! returns a process exit code: 0 success, 1 invalid input, 2 internal
//! inconsistency.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::chartab::{character_table, CharacterTable, ChartabError};
use crate::covers::{
    prym_profile, Base, CoverDatum, CoverError, CoverFile, CoverFileError, LocalConvention,
};
use crate::detector::{self, report_from_profile, DetectorError, PWReport};
use crate::groups::{catalog, FiniteGroup, DEFAULT_MAX_COSETS};
use crate::oracle::{self, OracleError};
use crate::search::{self, Equivalence, SearchError, SearchTask, TupleFilter};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UpTo {
    Inn,
    Aut,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Ccw,
    Cw,
}

impl From<ConventionArg> for LocalConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Ccw => LocalConvention::Counterclockwise,
            ConventionArg::Cw => LocalConvention::Clockwise,
        }
    }
}

/// Settings shared by all commands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Config {
    pub max_cosets: usize,
    pub max_group_order: usize,
    pub format: Format,
    /// `None` certifies exactly when `|G| <= 64`.
    pub certify: Option<bool>,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_cosets: DEFAULT_MAX_COSETS,
            max_group_order: crate::chartab::MAX_TABLE_ORDER,
            format: Format::Json,
            certify: None,
            seed: 0,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), String> {
        if self.max_cosets == 0 || self.max_group_order == 0 {
            return Err("limits must be positive".into());
        }
        Ok(())
    }

    fn certify_for(&self, order: usize) -> bool {
        self.certify.unwrap_or(order <= search::DEFAULT_CERTIFY_ORDER)
    }
}

#[derive(Debug, Parser)]
#[command(name = "pwscope", version, about = "Finite-orbit detector for Galois covers of punctured surfaces")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_COSETS)]
    pub max_cosets: usize,
    #[arg(long, global = true, default_value_t = crate::chartab::MAX_TABLE_ORDER)]
    pub max_group_order: usize,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Force oracle certification on.
    #[arg(long, global = true, conflicts_with = "no_certify")]
    pub certify: bool,
    /// Turn oracle certification off.
    #[arg(long, global = true)]
    pub no_certify: bool,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Local monodromy convention.
    #[arg(long, global = true, value_enum, default_value = "ccw")]
    pub convention: ConventionArg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a group's order, character table, indicators and Galois orbits.
    Group { spec: String },
    /// Cover files.
    Cover {
        #[command(subcommand)]
        action: CoverAction,
    },
    /// Homology oracle.
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
    /// Enumerate covers of a base and analyze each.
    Search(SearchArgs),
    /// Analyze seeded random covers of a base.
    Sample(SampleArgs),
}

#[derive(Debug, Subcommand)]
pub enum CoverAction {
    Analyze(CoverArgs),
}

#[derive(Debug, Subcommand)]
pub enum OracleAction {
    Certify(CoverArgs),
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    pub file: PathBuf,
    /// Complete an omitted final puncture word from the surface relation.
    #[arg(long)]
    pub complete_last: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub group: String,
    /// Base as `G,N`.
    #[arg(long, value_parser = parse_base)]
    pub base: Base,
    #[arg(long, value_enum, default_value = "aut")]
    pub up_to: UpTo,
    #[arg(long)]
    pub only_qualifying: bool,
    /// Keep only tuples whose puncture images all have order |G|.
    #[arg(long)]
    pub totally_ramified: bool,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long, value_parser = parse_base)]
    pub base: Base,
    #[arg(long, default_value_t = 10)]
    pub count: usize,
}

pub fn parse_base(s: &str) -> Result<Base, String> {
    let (g, n) = s
        .split_once(',')
        .ok_or_else(|| format!("expected G,N, got `{s}`"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok(Base {
        genus: num(g)?,
        punctures: num(n)?,
    })
}

/// Parses arguments and dispatches; never exits the process.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let g = &cli.global;
    let config = Config {
        max_cosets: g.max_cosets,
        max_group_order: g.max_group_order,
        format: g.format.unwrap_or(match cli.command {
            Command::Group { .. } => Format::Text,
            _ => Format::Json,
        }),
        certify: match (g.certify, g.no_certify) {
            (true, _) => Some(true),
            (_, true) => Some(false),
            _ => None,
        },
        seed: g.seed,
    };
    if let Err(m) = config.validate() {
        let _ = writeln!(err, "error: {m}");
        return EXIT_INPUT;
    }
    let convention = g.convention.into();
    let result = match &cli.command {
        Command::Group { spec } => cmd_group(spec, &config, out),
        Command::Cover {
            action: CoverAction::Analyze(a),
        } => cmd_cover(a, &config, convention, out, err),
        Command::Oracle {
            action: OracleAction::Certify(a),
        } => cmd_certify(a, &config, convention, out),
        Command::Search(a) => cmd_search(a, &config, convention, out, err),
        Command::Sample(a) => cmd_sample(a, &config, convention, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(m: impl ToString) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: m.to_string(),
        }
    }

    fn internal(m: impl ToString) -> Self {
        Failure {
            code: EXIT_INTERNAL,
            message: m.to_string(),
        }
    }
}

impl From<ChartabError> for Failure {
    fn from(e: ChartabError) -> Self {
        match e {
            ChartabError::Inconsistent(_) => Failure::internal(e),
            _ => Failure::input(e),
        }
    }
}

impl From<CoverError> for Failure {
    fn from(e: CoverError) -> Self {
        match e {
            CoverError::NonIntegral { .. } => Failure::internal(e),
            _ => Failure::input(e),
        }
    }
}

impl From<CoverFileError> for Failure {
    fn from(e: CoverFileError) -> Self {
        match e {
            CoverFileError::Cover(c) => c.into(),
            _ => Failure::input(e),
        }
    }
}

impl From<DetectorError> for Failure {
    fn from(e: DetectorError) -> Self {
        match e {
            DetectorError::Cover(c) => c.into(),
            DetectorError::Invariant(_) => Failure::internal(e),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::internal(e)
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        if e.is_internal() {
            Failure::internal(e)
        } else {
            Failure::input(e)
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::internal(format!("write failed: {e}")))
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn load_group(spec: &str, config: &Config) -> Result<Arc<FiniteGroup>, Failure> {
    let g = catalog(spec, config.max_cosets).map_err(Failure::input)?;
    if g.order() > config.max_group_order {
        return Err(Failure::input(format!(
            "group of order {} exceeds --max-group-order {}",
            g.order(),
            config.max_group_order
        )));
    }
    Ok(Arc::new(g))
}

pub fn cmd_group(spec: &str, config: &Config, out: &mut dyn Write) -> Result<i32, Failure> {
    let g = load_group(spec, config)?;
    let t = character_table(g)?;
    let text = match config.format {
        Format::Json => json(&t.export()),
        Format::Tsv => table_tsv(&t),
        Format::Text => table_text(&t),
    };
    write_out(out, &text)?;
    Ok(EXIT_OK)
}

fn table_text(t: &CharacterTable) -> String {
    use std::fmt::Write as _;
    let g = t.group();
    let c = t.classes();
    let mut s = String::new();
    let _ = writeln!(s, "group {}", g.name());
    let _ = writeln!(s, "order {}", g.order());
    let _ = writeln!(s, "classes {}", c.len());
    let _ = writeln!(s, "class sizes {:?}", c.sizes());
    let _ = writeln!(
        s,
        "element orders {:?}",
        (0..c.len()).map(|k| c.element_order(k)).collect::<Vec<_>>()
    );
    for i in 0..t.len() {
        let row: Vec<String> = t.character(i).iter().map(|v| v.to_string()).collect();
        let _ = writeln!(
            s,
            "chi{i:<3} deg {:<3} fs {:>2}  [{}]",
            t.degree(i),
            t.frobenius_schur(i),
            row.join(", ")
        );
    }
    let _ = writeln!(s, "galois orbits {:?}", t.galois_orbits());
    s
}

fn table_tsv(t: &CharacterTable) -> String {
    let mut s = String::from("irrep\tdegree\tfs\torbit\tvalues\n");
    for i in 0..t.len() {
        let row: Vec<String> = t.character(i).iter().map(|v| v.to_string()).collect();
        s.push_str(&format!(
            "{i}\t{}\t{}\t{}\t{}\n",
            t.degree(i),
            t.frobenius_schur(i),
            t.orbit_of(i),
            row.join(" ")
        ));
    }
    s
}

fn load_cover(a: &CoverArgs, config: &Config) -> Result<(CoverFile, CoverDatum), Failure> {
    let text = std::fs::read_to_string(&a.file)
        .map_err(|e| Failure::input(format!("{}: {e}", a.file.display())))?;
    let f = CoverFile::from_json(&text)?;
    let g = load_group(&f.group, config)?;
    let d = f.resolve(g, a.complete_last)?;
    Ok((f, d))
}

fn emit_reports(
    reports: &[PWReport],
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let text = match format {
        Format::Json => json(&reports),
        Format::Tsv => {
            let mut s = format!("{}\n", detector::TSV_HEADER);
            for r in reports {
                s.push_str(&detector::tsv_row(r));
                s.push('\n');
            }
            s
        }
        Format::Text => reports.iter().map(detector::render_text).collect::<Vec<_>>().join("\n"),
    };
    write_out(out, &text)
}

pub fn cmd_cover(
    a: &CoverArgs,
    config: &Config,
    convention: LocalConvention,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let (_, d) = load_cover(a, config)?;
    let t = character_table(d.group().clone())?;
    let profile = prym_profile(&d, &t, convention)?;
    let report = report_from_profile(&d, &t, &profile)?;
    if config.certify_for(d.group().order()) {
        let rec = oracle::certify(&d, &t, &profile)?;
        let _ = writeln!(err, "oracle: {} ({})", rec.status, rec.cover_hash);
    }
    match config.format {
        Format::Json => write_out(out, &json(&report))?,
        _ => emit_reports(std::slice::from_ref(&report), config.format, out)?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_certify(
    a: &CoverArgs,
    config: &Config,
    convention: LocalConvention,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let (_, d) = load_cover(a, config)?;
    let t = character_table(d.group().clone())?;
    let profile = prym_profile(&d, &t, convention)?;
    let rec = oracle::certify(&d, &t, &profile)?;
    write_out(out, &json(&rec))?;
    Ok(EXIT_OK)
}

pub fn cmd_search(
    a: &SearchArgs,
    config: &Config,
    convention: LocalConvention,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    load_group(&a.group, config)?;
    let mut task = SearchTask::new(a.group.clone(), a.base);
    task.equivalence = match a.up_to {
        UpTo::Inn => Equivalence::Inner,
        UpTo::Aut => Equivalence::Automorphism,
    };
    task.only_qualifying = a.only_qualifying;
    task.filter = TupleFilter {
        totally_ramified: a.totally_ramified,
    };
    task.certify = config.certify;
    task.convention = convention;
    task.max_cosets = config.max_cosets;
    let outcome = search::run(&task)?;
    emit_reports(&outcome.reports, config.format, out)?;
    let summary = format!(
        "{} covers enumerated, {} qualifying, {} certified, {} reported",
        outcome.enumerated,
        outcome.qualifying,
        outcome.certified,
        outcome.reports.len()
    );
    if config.format == Format::Text {
        write_out(out, &format!("{summary}\n"))?;
    } else {
        let _ = writeln!(err, "{summary}");
    }
    Ok(EXIT_OK)
}

pub fn cmd_sample(
    a: &SampleArgs,
    config: &Config,
    convention: LocalConvention,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let g = load_group(&a.group, config)?;
    let Base { genus, punctures } = a.base;
    if 2 * genus + punctures <= 2 {
        return Err(CoverError::NotHyperbolic { genus, punctures }.into());
    }
    let t = character_table(g.clone())?;
    let covers = search::random_covers(&g, a.base, a.count, config.seed, 200 * a.count.max(1));
    let mut reports = Vec::with_capacity(covers.len());
    let mut certified = 0;
    for d in &covers {
        let profile = prym_profile(d, &t, convention)?;
        reports.push(report_from_profile(d, &t, &profile)?);
        if config.certify_for(g.order()) {
            oracle::certify(d, &t, &profile)?;
            certified += 1;
        }
    }
    emit_reports(&reports, config.format, out)?;
    let _ = writeln!(err, "{} covers sampled, {certified} certified", reports.len());
    Ok(EXIT_OK)
}
