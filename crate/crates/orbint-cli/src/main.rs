// SPDX-License-Identifier: Apache-2.0 OR MIT

//! `orbint`: rigorous interval orbits of 1-D recursive maps.
//!
//! Exit codes: 0 success, 1 reproduction mismatch, 2 usage error,
//! 3 enclosure soundness fault (empty intersection).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use orbint::orbit::{iterate_float_compare, iterate_intersected, iterate_single, run_case};
use orbint::report;
use orbint::{CarryMode, EnclosureMode, OrbitError, Precision, RunConfig, RunMode};
use orbint_cli::config::FileConfig;
use orbint_cli::reproduce;

#[derive(Parser)]
#[command(
    name = "orbint",
    version,
    about = "Validated interval orbits of 1-D recursive maps",
    long_about = "Iterates a user-supplied map expression over the variables x and r in \
                  outward-rounded interval arithmetic, optionally intersecting several \
                  algebraically equivalent forms per step, and scans the orbit for \
                  period-p fixed point candidates."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Iterate an interval orbit and print it
    Orbit(OrbitArgs),
    /// Compare the single-extension and intersected methods on one case
    Fixedpoint(FixedpointArgs),
    /// Iterate extensions in plain floating point and report divergence
    Diverge(DivergeArgs),
    /// Re-run the reference experiments and verify the published values
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PrecisionArg {
    /// 6 significant digits
    Short,
    /// 17 significant digits, round-trip exact
    Full,
}

impl From<PrecisionArg> for Precision {
    fn from(p: PrecisionArg) -> Precision {
        match p {
            PrecisionArg::Short => Precision::Short,
            PrecisionArg::Full => Precision::Full,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Single,
    Intersect,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CarryArg {
    /// every extension starts each step from the shared intersected interval
    Shared,
    /// each extension keeps its own orbit; intersect for reporting only
    Independent,
}

#[derive(Args)]
struct CommonArgs {
    /// Growth parameter r (decimal string)
    #[arg(long)]
    r: Option<String>,
    /// Initial condition x0 (decimal string)
    #[arg(long)]
    x0: Option<String>,
    /// Extension expression over x and r; repeat the flag for several forms
    #[arg(long = "ext")]
    ext: Vec<String>,
    /// key=value configuration file mirroring these flags
    #[arg(long)]
    config: Option<PathBuf>,
    /// Initial enclosure modes, e.g. `x0=outward,r=thin`
    /// (modes: outward, pair, thin)
    #[arg(long)]
    enclose: Option<String>,
    /// Output format
    #[arg(long)]
    out: Option<OutFormat>,
    /// Numeric display precision for widths
    #[arg(long)]
    precision: Option<PrecisionArg>,
}

#[derive(Args)]
struct OrbitArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Number of iterations (the orbit has n+1 rows, row 0 is the initial
    /// enclosure)
    #[arg(long)]
    n: Option<usize>,
    /// single: iterate the first extension; intersect: all of them
    #[arg(long)]
    mode: Option<ModeArg>,
    /// Carry topology of intersected runs
    #[arg(long)]
    carry: Option<CarryArg>,
}

#[derive(Args)]
struct FixedpointArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Comma-separated candidate periods, scanned in ascending order
    #[arg(long)]
    periods: Option<String>,
    /// Consecutive detections required before reporting
    #[arg(long)]
    persistence: Option<usize>,
    /// Iteration budget
    #[arg(long = "max-n")]
    max_n: Option<usize>,
    /// Carry topology of the intersected run
    #[arg(long)]
    carry: Option<CarryArg>,
}

#[derive(Args)]
struct DivergeArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Number of rows (row 1 is the initial condition)
    #[arg(long)]
    n: Option<usize>,
    /// First row to print
    #[arg(long)]
    from: Option<usize>,
    /// Last row to print
    #[arg(long)]
    to: Option<usize>,
    /// Divergence threshold on the largest pairwise difference
    #[arg(long)]
    threshold: Option<f64>,
}

#[derive(Args)]
struct ReproduceArgs {
    /// Initial enclosure override, e.g. `x0=thin` (sensitivity check; the
    /// reference runs use x0=outward)
    #[arg(long)]
    enclose: Option<String>,
}

enum CliError {
    Usage(String),
    Soundness(String),
}

/// Write to stdout, ignoring a closed pipe (e.g. piping into `head`).
fn emit(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(text.as_bytes());
}

impl From<OrbitError> for CliError {
    fn from(e: OrbitError) -> Self {
        match e {
            OrbitError::EmptyIntersection { .. } => CliError::Soundness(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Orbit(args) => cmd_orbit(args),
        Command::Fixedpoint(args) => cmd_fixedpoint(args),
        Command::Diverge(args) => cmd_diverge(args),
        Command::Reproduce(args) => cmd_reproduce(args),
    };
    match outcome {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Soundness(msg)) => {
            eprintln!("soundness fault: {msg}");
            ExitCode::from(3)
        }
    }
}

/// Flags merged over the config file, with defaults applied last.
struct Resolved {
    cfg: RunConfig,
    out: OutFormat,
    precision: Precision,
    file: FileConfig,
}

fn resolve_common(common: &CommonArgs) -> Result<Resolved, CliError> {
    let file = match &common.config {
        Some(path) => FileConfig::load(path).map_err(CliError::Usage)?,
        None => FileConfig::default(),
    };
    let pick = |flag: &Option<String>, key: &str| -> Option<String> {
        flag.clone().or_else(|| file.get(key).map(str::to_owned))
    };
    let r = pick(&common.r, "r").ok_or(CliError::Usage("missing --r".into()))?;
    let x0 = pick(&common.x0, "x0").ok_or(CliError::Usage("missing --x0".into()))?;
    let extensions = if common.ext.is_empty() {
        file.extensions().to_vec()
    } else {
        common.ext.clone()
    };
    if extensions.is_empty() {
        return Err(CliError::Usage("missing --ext".into()));
    }
    let mut cfg = RunConfig::new(&r, &x0, extensions);
    if let Some(spec) = pick(&common.enclose, "enclose") {
        let (x0_mode, r_mode) = parse_enclose(&spec).map_err(CliError::Usage)?;
        if let Some(m) = x0_mode {
            cfg.x0_mode = m;
        }
        if let Some(m) = r_mode {
            cfg.r_mode = m;
        }
    }
    let out = match (common.out, file.get("out")) {
        (Some(flag), _) => flag,
        (None, Some(v)) => parse_value::<OutFormat>(v, "out")?,
        (None, None) => OutFormat::Table,
    };
    let precision = match (common.precision, file.get("precision")) {
        (Some(flag), _) => flag,
        (None, Some(v)) => parse_value::<PrecisionArg>(v, "precision")?,
        (None, None) => PrecisionArg::Short,
    };
    Ok(Resolved {
        cfg,
        out,
        precision: precision.into(),
        file,
    })
}

fn parse_value<T: ValueEnum + Copy>(text: &str, key: &str) -> Result<T, CliError> {
    T::from_str(text, true).map_err(|_| CliError::Usage(format!("invalid {key} value {text:?}")))
}

fn parse_enclose(spec: &str) -> Result<(Option<EnclosureMode>, Option<EnclosureMode>), String> {
    let mut x0 = None;
    let mut r = None;
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let Some((key, value)) = part.split_once('=') else {
            return Err(format!("expected var=mode in --enclose, got {part:?}"));
        };
        let mode: EnclosureMode = value.trim().parse()?;
        match key.trim() {
            "x0" => x0 = Some(mode),
            "r" => r = Some(mode),
            other => return Err(format!("unknown --enclose variable {other:?}")),
        }
    }
    Ok((x0, r))
}

fn config_usize(file: &FileConfig, key: &str) -> Result<Option<usize>, CliError> {
    match file.get(key) {
        None => Ok(None),
        Some(v) => v
            .parse()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("invalid {key} value {v:?}"))),
    }
}

fn cmd_orbit(args: OrbitArgs) -> Result<ExitCode, CliError> {
    let mut resolved = resolve_common(&args.common)?;
    let n = match args.n.or(config_usize(&resolved.file, "n")?) {
        Some(n) => n,
        None => return Err(CliError::Usage("missing --n".into())),
    };
    resolved.cfg.max_iterations = n;
    let mode = match (args.mode, resolved.file.get("mode")) {
        (Some(m), _) => m,
        (None, Some(v)) => parse_value::<ModeArg>(v, "mode")?,
        (None, None) => {
            if resolved.cfg.extensions.len() >= 2 {
                ModeArg::Intersect
            } else {
                ModeArg::Single
            }
        }
    };
    if let Some(carry) = args.carry {
        resolved.cfg.carry = match carry {
            CarryArg::Shared => CarryMode::Shared,
            CarryArg::Independent => CarryMode::Independent,
        };
    }
    let orbit = match mode {
        ModeArg::Single => {
            resolved.cfg.mode = RunMode::Single;
            let es = resolved.cfg.parsed_extensions().map_err(CliError::from)?;
            iterate_single(&es[0], &resolved.cfg)?
        }
        ModeArg::Intersect => {
            resolved.cfg.mode = RunMode::Intersect;
            let es = resolved.cfg.parsed_extensions().map_err(CliError::from)?;
            iterate_intersected(&es, &resolved.cfg)?
        }
    };
    match resolved.out {
        OutFormat::Csv => emit(&report::orbit_csv(&orbit, resolved.precision)),
        OutFormat::Table => emit(&report::orbit_table(&orbit, resolved.precision)),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_fixedpoint(args: FixedpointArgs) -> Result<ExitCode, CliError> {
    let mut resolved = resolve_common(&args.common)?;
    if let Some(n) = args.max_n.or(config_usize(&resolved.file, "max-n")?) {
        resolved.cfg.max_iterations = n;
    }
    if let Some(k) = args
        .persistence
        .or(config_usize(&resolved.file, "persistence")?)
    {
        resolved.cfg.persistence = k;
    }
    let periods_spec = args
        .periods
        .or_else(|| resolved.file.get("periods").map(str::to_owned));
    if let Some(spec) = periods_spec {
        let parsed: Result<Vec<u32>, _> = spec.split(',').map(|p| p.trim().parse()).collect();
        resolved.cfg.period_candidates =
            parsed.map_err(|_| CliError::Usage(format!("invalid --periods list {spec:?}")))?;
    }
    if let Some(carry) = args.carry {
        resolved.cfg.carry = match carry {
            CarryArg::Shared => CarryMode::Shared,
            CarryArg::Independent => CarryMode::Independent,
        };
    }
    if resolved.cfg.extensions.len() < 2 {
        return Err(CliError::Usage(
            "fixedpoint compares methods and needs at least two --ext forms".into(),
        ));
    }
    let case = run_case(&resolved.cfg)?;
    match resolved.out {
        OutFormat::Csv => emit(&report::case_csv(&case, resolved.precision)),
        OutFormat::Table => {
            let mut text = report::case_summary(&case, resolved.precision);
            for (label, outcome) in [("single", &case.single), ("intersected", &case.intersected)] {
                match &outcome.detection {
                    Some(d) => {
                        text.push_str(&format!(
                            "{label}: {}\n{label}: {}\n",
                            report::fixed_point_summary(d, resolved.precision),
                            report::fixed_point_block(d)
                        ));
                    }
                    None => text.push_str(&format!(
                        "{label}: no fixed point candidate within {} iterations; final width {:.5e}\n",
                        case.config.max_iterations, outcome.final_width
                    )),
                }
            }
            emit(&text);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_diverge(args: DivergeArgs) -> Result<ExitCode, CliError> {
    let mut resolved = resolve_common(&args.common)?;
    let n = match args.n.or(config_usize(&resolved.file, "n")?) {
        Some(n) => n,
        None => return Err(CliError::Usage("missing --n".into())),
    };
    if resolved.cfg.extensions.len() < 2 {
        return Err(CliError::Usage(
            "diverge needs at least two --ext forms".into(),
        ));
    }
    resolved.cfg.mode = RunMode::FloatCompare;
    resolved.cfg.max_iterations = n;
    if let Some(t) = args.threshold {
        resolved.cfg.divergence_threshold = t;
    } else if let Some(v) = resolved.file.get("threshold") {
        resolved.cfg.divergence_threshold = v
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid threshold value {v:?}")))?;
    }
    let from = args
        .from
        .or(config_usize(&resolved.file, "from")?)
        .unwrap_or(1);
    let to = args.to.or(config_usize(&resolved.file, "to")?).unwrap_or(n);
    let es = resolved.cfg.parsed_extensions().map_err(CliError::from)?;
    let rec = iterate_float_compare(&es, &resolved.cfg)?;
    emit(&report::float_compare_csv(&rec, from, to));
    match rec.first_divergence {
        Some(row) => eprintln!("first divergence (threshold {}): row {row}", rec.threshold),
        None => eprintln!(
            "no divergence above threshold {} within {n} rows",
            rec.threshold
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_reproduce(args: ReproduceArgs) -> Result<ExitCode, CliError> {
    let mut x0_mode = EnclosureMode::Outward;
    if let Some(spec) = &args.enclose {
        let (x0_override, _) = parse_enclose(spec).map_err(CliError::Usage)?;
        if let Some(m) = x0_override {
            x0_mode = m;
        }
    }
    let rep = reproduce::run(x0_mode)?;
    let mut text = String::new();
    for v in &rep.verdicts {
        text.push_str(&format!(
            "{:<52} got {:>12}  reference {:>16}  {}\n",
            v.label,
            v.got,
            v.reference,
            if v.pass { "PASS" } else { "FAIL" }
        ));
    }
    for note in &rep.notes {
        text.push_str(&format!("note: {note}\n"));
    }
    let failures = rep.failures();
    text.push_str(&format!(
        "{} of {} checks passed ({failures} failed)\n",
        rep.verdicts.len() - failures,
        rep.verdicts.len()
    ));
    if failures > 0 {
        text.push_str(
            "reference runs use enclosure x0=outward; see the notes above for the \
             known irreproducible rows of the published width table\n",
        );
    }
    emit(&text);
    if rep.all_pass() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
