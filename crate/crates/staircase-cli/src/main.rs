use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use staircase_cli::formats::{self, SearchRow};
use staircase_cli::{exponent_limit, run_selftest, CliError};
use staircase_core::{choose_parameters, FamilyParams, Headline, MuReport, StaircaseIdeal};

#[derive(Parser)]
#[command(
    name = "staircase",
    version,
    about = "Exact arithmetic on bivariate monomial ideals: powers, generator counts, socles, and parametric families"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Output format; csv applies to table, verify, and search.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Write data output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Suppress the version banner on plain output.
    #[arg(long, global = true)]
    no_banner: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the component ideals of a parametric family and their sum.
    Construct {
        #[command(flatten)]
        params: ParamsArgs,
    },
    /// Compute I^k for an ideal file or a family sum.
    Power {
        #[command(flatten)]
        src: SourceArgs,
        /// The power k.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        kmax: u64,
    },
    /// Minimal generator count of an ideal file or family power.
    Mu {
        #[command(flatten)]
        src: SourceArgs,
        /// The power k when parameters are given.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        kmax: u64,
    },
    /// Socle monomials and Cohen-Macaulay type of a finite-colength ideal.
    Socle {
        #[command(flatten)]
        src: SourceArgs,
        /// The power k when parameters are given.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        kmax: u64,
    },
    /// Per-power table: computed vs predicted counts, structure, type.
    Table {
        #[command(flatten)]
        params: ParamsArgs,
        /// Largest power to tabulate.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        kmax: u64,
    },
    /// End-to-end check that counts decrease strictly to (n+1)^2 and then
    /// follow (n+2)k+1.
    Verify {
        #[command(flatten)]
        params: ParamsArgs,
        /// Largest power to check (default n + 3; must be at least n).
        #[arg(long)]
        kmax: Option<u64>,
    },
    /// Sweep a parameter grid; one row per valid tuple with its sign
    /// pattern and count sequence.
    Search {
        #[command(flatten)]
        grid: SearchArgs,
    },
    /// Cross-check the fast operations against the brute-force oracle on
    /// 1000 seeded instances.
    Selftest {
        /// Base seed for instance generation.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Clone, Default)]
struct ParamsArgs {
    /// Component count m; must match the number of --p values.
    #[arg(long)]
    m: Option<usize>,
    /// p_1..p_m, comma separated.
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    p: Option<Vec<u64>>,
    /// a_2..a_m, comma separated (omit for m = 1).
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    a: Option<Vec<u64>>,
    /// JSON parameter file: {"m": int, "p": [int,..], "a": [int,..]}.
    #[arg(long, value_name = "FILE")]
    params: Option<PathBuf>,
    /// Synthesize parameters whose counts decrease strictly through power N.
    #[arg(long, value_name = "N")]
    choose_n: Option<usize>,
}

impl ParamsArgs {
    fn given(&self) -> bool {
        self.m.is_some()
            || self.p.is_some()
            || self.a.is_some()
            || self.params.is_some()
            || self.choose_n.is_some()
    }

    fn resolve(&self) -> Result<FamilyParams, CliError> {
        let inline = self.m.is_some() || self.p.is_some() || self.a.is_some();
        let sources = usize::from(inline)
            + usize::from(self.params.is_some())
            + usize::from(self.choose_n.is_some());
        if sources == 0 {
            return Err(CliError::Usage(
                "no parameter source: use --p/--a (with optional --m), --params FILE, or --choose-n N"
                    .into(),
            ));
        }
        if sources > 1 {
            return Err(CliError::Usage(
                "give exactly one parameter source: inline --p/--a, --params FILE, or --choose-n N"
                    .into(),
            ));
        }
        if let Some(path) = &self.params {
            return formats::parse_params(&read_input(path)?);
        }
        if let Some(n) = self.choose_n {
            return choose_parameters(n).map_err(CliError::from);
        }
        let p = self
            .p
            .clone()
            .ok_or_else(|| CliError::Usage("inline parameters need --p".into()))?;
        if let Some(m) = self.m {
            if m != p.len() {
                return Err(CliError::Invalid(format!(
                    "--m {m} does not match the {} values given with --p",
                    p.len()
                )));
            }
        }
        FamilyParams::new(p, self.a.clone().unwrap_or_default()).map_err(CliError::from)
    }
}

#[derive(Args, Clone)]
struct SourceArgs {
    /// Ideal JSON file ("-" reads stdin). Mutually exclusive with parameters.
    #[arg(long, value_name = "FILE")]
    ideal: Option<PathBuf>,
    #[command(flatten)]
    params: ParamsArgs,
}

impl SourceArgs {
    /// The ideal raised to `k`, from a file or a built family sum.
    fn resolve(&self, k: u64, limit: u64) -> Result<StaircaseIdeal, CliError> {
        let base = match &self.ideal {
            Some(path) => {
                if self.params.given() {
                    return Err(CliError::Usage(
                        "--ideal cannot be combined with family parameters".into(),
                    ));
                }
                let loaded = formats::parse_ideal(&read_input(path)?)?;
                if loaded.canonicalized {
                    eprintln!("note: input ideal was not canonical; canonicalized on load");
                }
                loaded.ideal
            }
            None => self.params.resolve()?.build_within(limit)?.ideal,
        };
        base.power_within(k, limit).map_err(CliError::from)
    }
}

#[derive(Args, Clone)]
struct SearchArgs {
    /// Component counts to sweep: inclusive "LO..HI" or a single value.
    #[arg(long, value_name = "RANGE", value_parser = parse_range)]
    m_range: (u64, u64),
    /// Inclusive candidate range "LO..HI" for every a_i.
    #[arg(long, value_name = "RANGE", value_parser = parse_range, conflicts_with = "a_values")]
    a_range: Option<(u64, u64)>,
    /// Explicit candidate set for every a_i, comma separated.
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    a_values: Option<Vec<u64>>,
    /// Largest power to compute per tuple (at least 2).
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    kmax: u64,
}

fn parse_range(text: &str) -> Result<(u64, u64), String> {
    let parse_one = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| format!("invalid integer {s:?} in range"))
    };
    match text.split_once("..") {
        Some((lo, hi)) => {
            let (lo, hi) = (parse_one(lo)?, parse_one(hi)?);
            if lo > hi {
                return Err(format!("empty range {text:?}"));
            }
            Ok((lo, hi))
        }
        None => {
            let v = parse_one(text)?;
            Ok((v, v))
        }
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Invalid(format!("cannot read stdin: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))
}

struct Emitter {
    format: Format,
    out: Option<PathBuf>,
    banner: bool,
}

impl Emitter {
    fn emit(&self, payload: &str) -> Result<(), CliError> {
        let mut text = String::new();
        if self.format == Format::Plain && self.banner {
            text.push_str(concat!("# staircase ", env!("CARGO_PKG_VERSION"), "\n"));
        }
        text.push_str(payload);
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &self.out {
            Some(path) => fs::write(path, text)
                .map_err(|e| CliError::Invalid(format!("cannot write {}: {e}", path.display()))),
            None => io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Invalid(format!("cannot write stdout: {e}"))),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return ExitCode::from(if ok { 0 } else { 1 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let limit = exponent_limit()?;
    let emitter = Emitter {
        format: cli.format,
        out: cli.out.clone(),
        banner: !cli.no_banner,
    };
    match cli.command {
        Cmd::Construct { params } => cmd_construct(&params, &emitter, limit),
        Cmd::Power { src, kmax } => cmd_power(&src, kmax, &emitter, limit),
        Cmd::Mu { src, kmax } => cmd_mu(&src, kmax, &emitter, limit),
        Cmd::Socle { src, kmax } => cmd_socle(&src, kmax, &emitter, limit),
        Cmd::Table { params, kmax } => cmd_table(&params, kmax, &emitter, limit),
        Cmd::Verify { params, kmax } => cmd_verify(&params, kmax, &emitter, limit),
        Cmd::Search { grid } => cmd_search(&grid, &emitter, limit),
        Cmd::Selftest { seed } => cmd_selftest(seed, &emitter, limit),
    }
}

fn no_csv(command: &str) -> CliError {
    CliError::Usage(format!("{command} has no csv output; use plain or json"))
}

fn cmd_construct(args: &ParamsArgs, emitter: &Emitter, limit: u64) -> Result<(), CliError> {
    let params = args.resolve()?;
    let family = params.build_within(limit)?;
    let mus: Vec<u64> = family.components.iter().map(|c| c.mu()).collect();
    let degrees = family
        .components
        .iter()
        .map(|c| c.degree())
        .collect::<Result<Vec<u64>, _>>()?;
    let total_mu = family.ideal.mu();
    let total_degree = family.ideal.degree()?;
    match emitter.format {
        Format::Plain => {
            let mut text = String::new();
            for (i, c) in family.components.iter().enumerate() {
                let _ = writeln!(text, "I_{} = {}", i + 1, formats::ideal_to_json_string(c));
            }
            let _ = writeln!(text, "I = {}", formats::ideal_to_json_string(&family.ideal));
            let _ = writeln!(
                text,
                "summary: m={} component_mu={mus:?} component_degree={degrees:?} mu={total_mu} degree={total_degree}",
                params.m()
            );
            emitter.emit(&text)
        }
        Format::Json => {
            let value = json!({
                "components": family.components.iter().map(formats::ideal_to_json).collect::<Vec<_>>(),
                "component_mu": mus,
                "component_degree": degrees,
                "sum": formats::ideal_to_json(&family.ideal),
                "mu": total_mu,
                "degree": total_degree,
            });
            emitter.emit(&value.to_string())
        }
        Format::Csv => Err(no_csv("construct")),
    }
}

fn cmd_power(src: &SourceArgs, kmax: u64, emitter: &Emitter, limit: u64) -> Result<(), CliError> {
    let power = src.resolve(kmax, limit)?;
    match emitter.format {
        Format::Plain => {
            let degree = power
                .degree()
                .map(|d| d.to_string())
                .unwrap_or_else(|_| "-".into());
            emitter.emit(&format!(
                "I^{kmax} = {}\nmu = {}\ndegree = {degree}",
                formats::ideal_to_json_string(&power),
                power.mu()
            ))
        }
        Format::Json => emitter.emit(&formats::ideal_to_json_string(&power)),
        Format::Csv => Err(no_csv("power")),
    }
}

fn cmd_mu(src: &SourceArgs, kmax: u64, emitter: &Emitter, limit: u64) -> Result<(), CliError> {
    let ideal = src.resolve(kmax, limit)?;
    match emitter.format {
        Format::Plain => emitter.emit(&format!("mu = {}", ideal.mu())),
        Format::Json => emitter.emit(&json!({ "mu": ideal.mu() }).to_string()),
        Format::Csv => Err(no_csv("mu")),
    }
}

fn cmd_socle(src: &SourceArgs, kmax: u64, emitter: &Emitter, limit: u64) -> Result<(), CliError> {
    let ideal = src.resolve(kmax, limit)?;
    let socle = ideal
        .socle_monomials()
        .map_err(|e| CliError::Invalid(e.to_string()))?;
    let cm_type = socle.len() as u64;
    let mu = ideal.mu();
    let identity_ok = cm_type + 1 == mu;
    let socle_json = serde_json::Value::Array(socle.iter().map(|s| json!([s.a, s.b])).collect());
    match emitter.format {
        Format::Plain => emitter.emit(&format!(
            "socle = {socle_json}\ncm_type = {cm_type}\nmu = {mu}\nidentity cm_type = mu - 1: {}",
            if identity_ok { "ok" } else { "FAILED" }
        ))?,
        Format::Json => emitter.emit(
            &json!({
                "socle": socle_json,
                "cm_type": cm_type,
                "mu": mu,
                "identity_ok": identity_ok,
            })
            .to_string(),
        )?,
        Format::Csv => return Err(no_csv("socle")),
    }
    if !identity_ok {
        return Err(CliError::Mismatch(format!(
            "socle count {cm_type} does not equal mu - 1 = {}",
            mu - 1
        )));
    }
    Ok(())
}

fn render_reports_plain(reports: &[MuReport]) -> String {
    let mut text = String::from("k     mu_computed  mu_predicted  structure_ok  cm_type  degree\n");
    for r in reports {
        let _ = writeln!(
            text,
            "{:<5} {:<12} {:<13} {:<13} {:<8} {}",
            r.k, r.mu_computed, r.mu_predicted, r.structure_ok, r.cm_type, r.degree
        );
    }
    text
}

fn first_inconsistent(reports: &[MuReport]) -> Option<&MuReport> {
    reports.iter().find(|r| !r.consistent())
}

fn cmd_table(args: &ParamsArgs, kmax: u64, emitter: &Emitter, limit: u64) -> Result<(), CliError> {
    let params = args.resolve()?;
    let reports = params.mu_table_within(kmax, limit)?;
    match emitter.format {
        Format::Plain => {
            let mut text = render_reports_plain(&reports);
            match first_inconsistent(&reports) {
                None => text.push_str("table: all rows consistent\n"),
                Some(r) => {
                    let _ = writeln!(text, "table: INCONSISTENT at k = {}", r.k);
                }
            }
            emitter.emit(&text)?;
        }
        Format::Json => emitter.emit(&formats::reports_to_json(&reports).to_string())?,
        Format::Csv => emitter.emit(&formats::reports_to_csv(&reports)?)?,
    }
    if let Some(r) = first_inconsistent(&reports) {
        return Err(CliError::Mismatch(format!(
            "computed and predicted values disagree at k = {} (mu {} vs {}, structure_ok {})",
            r.k, r.mu_computed, r.mu_predicted, r.structure_ok
        )));
    }
    Ok(())
}

fn cmd_verify(
    args: &ParamsArgs,
    kmax: Option<u64>,
    emitter: &Emitter,
    limit: u64,
) -> Result<(), CliError> {
    let params = args.resolve()?;
    let n = params.m() as u64;
    let kmax = kmax.unwrap_or(n + 3);
    if kmax < n {
        return Err(CliError::Usage(format!(
            "--kmax {kmax} is below n = {n}; the check needs the full decreasing run"
        )));
    }
    let headline = Headline::for_params_within(params, kmax, limit)?;
    let holds = headline.holds();
    match emitter.format {
        Format::Plain => {
            let mut text = format!(
                "n = {}\nparams = {}\n",
                headline.n,
                formats::params_to_json(&headline.params)
            );
            text.push_str(&render_reports_plain(&headline.reports));
            let _ = writeln!(
                text,
                "headline: strict decrease to (n+1)^2 then (n+2)k+1: {}",
                if holds { "ok" } else { "FAILED" }
            );
            emitter.emit(&text)?;
        }
        Format::Json => emitter.emit(
            &json!({
                "n": headline.n,
                "params": formats::params_to_json(&headline.params),
                "reports": formats::reports_to_json(&headline.reports),
                "holds": holds,
            })
            .to_string(),
        )?,
        Format::Csv => emitter.emit(&formats::reports_to_csv(&headline.reports)?)?,
    }
    if !holds {
        return Err(CliError::Mismatch(
            "verification failed: see the emitted reports".into(),
        ));
    }
    Ok(())
}

fn cmd_search(grid: &SearchArgs, emitter: &Emitter, limit: u64) -> Result<(), CliError> {
    let values: Vec<u64> = match (grid.a_range, &grid.a_values) {
        (Some((lo, hi)), None) => (lo..=hi).collect(),
        (None, Some(list)) => {
            let mut v = list.clone();
            v.sort_unstable();
            v.dedup();
            v
        }
        (None, None) => {
            return Err(CliError::Usage(
                "search needs --a-range LO..HI or --a-values LIST".into(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };
    let (m_lo, m_hi) = grid.m_range;
    if m_lo == 0 {
        return Err(CliError::Usage("--m-range must start at 1 or above".into()));
    }
    let mut rows: Vec<SearchRow> = Vec::new();
    let mut skipped = 0usize;
    for m in m_lo..=m_hi {
        let arity = (m - 1) as usize;
        if arity > 0 && values.is_empty() {
            continue;
        }
        let mut idx = vec![0usize; arity];
        'tuples: loop {
            let a: Vec<u64> = idx.iter().map(|&i| values[i]).collect();
            match FamilyParams::from_a_values(a.clone()) {
                Ok(params) => {
                    let signs: String = params
                        .sign_sequence_within(grid.kmax, limit)?
                        .iter()
                        .map(|s| s.to_string())
                        .collect();
                    let family = params.build_within(limit)?;
                    let mut mu = Vec::with_capacity(grid.kmax as usize);
                    let mut power = family.ideal.clone();
                    for k in 1..=grid.kmax {
                        mu.push(power.mu());
                        if k < grid.kmax {
                            power = power.product_within(&family.ideal, limit)?;
                        }
                    }
                    rows.push(SearchRow { params, signs, mu });
                }
                Err(staircase_core::Error::InvalidParams(reason)) => {
                    skipped += 1;
                    eprintln!("skip: m={m} a={a:?}: {reason}");
                }
                Err(e) => return Err(CliError::from(e)),
            }
            // Lexicographic successor, most significant index first.
            let mut pos = arity;
            while pos > 0 {
                idx[pos - 1] += 1;
                if idx[pos - 1] < values.len() {
                    continue 'tuples;
                }
                idx[pos - 1] = 0;
                pos -= 1;
            }
            break;
        }
    }
    if rows.is_empty() {
        return Err(CliError::Usage("no valid tuples in the grid".into()));
    }
    if skipped > 0 {
        eprintln!("note: skipped {skipped} invalid tuples");
    }
    match emitter.format {
        Format::Plain => {
            let mut text = String::new();
            for row in &rows {
                let _ = writeln!(
                    text,
                    "m={} p={:?} a={:?} signs={} mu={:?}",
                    row.params.m(),
                    row.params.p(),
                    row.params.a(),
                    row.signs,
                    row.mu
                );
            }
            emitter.emit(&text)
        }
        Format::Json => emitter.emit(&formats::search_rows_to_json(&rows).to_string()),
        Format::Csv => emitter.emit(&formats::search_rows_to_csv(&rows)?),
    }
}

fn cmd_selftest(seed: u64, emitter: &Emitter, limit: u64) -> Result<(), CliError> {
    const CASES: u64 = 1000;
    let summary = run_selftest(seed, CASES, limit)?;
    match emitter.format {
        Format::Plain => emitter.emit(&format!(
            "selftest: {} cases agree with the brute-force oracle (seed {})",
            summary.cases, summary.seed
        )),
        Format::Json => emitter
            .emit(&json!({ "cases": summary.cases, "seed": summary.seed, "ok": true }).to_string()),
        Format::Csv => Err(no_csv("selftest")),
    }
}
