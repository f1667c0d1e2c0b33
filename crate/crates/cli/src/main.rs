mod commands;
mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use affinekit::exact::Rat;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use report::Report;

#[derive(Debug, Parser, Serialize)]
#[command(name = "affinekit", version, about = "Exact experiments with affine Lie algebras and their weight modules")]
#[command(args_override_self = true)]
struct Cli {
    /// JSON run configuration: `command` plus the flags of that command as keys.
    #[arg(long, global = true)]
    #[serde(skip)]
    config: Option<PathBuf>,
    /// Seed for every sampled suite.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Report format; tables default to CSV only for `prop42`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    #[serde(skip)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
}

/// Degree window `a:b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Window {
    pub min: i64,
    pub max: i64,
}

fn parse_window(s: &str) -> Result<Window, String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("window `{s}` is not of the form a:b"))?;
    let min: i64 = a.trim().parse().map_err(|_| format!("bad window bound `{a}`"))?;
    let max: i64 = b.trim().parse().map_err(|_| format!("bad window bound `{b}`"))?;
    if min > max {
        return Err(format!("empty window {min}:{max}"));
    }
    Ok(Window { min, max })
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.parse::<Rat>().map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Dimensions of graded pieces and a sampled Jacobi/invariance check.
    AlgebraInfo(AlgebraArgs),
    /// Roots with δ-coefficient in a window.
    Roots(RootsArgs),
    /// Parabolic set of a flag: axioms, trichotomy tag and its stability.
    ParabolicClassify(FlagArgs),
    /// Cone `Φ_P` of a standard parabolic set and the certificate for δ.
    ConeCertificate(ConeArgs),
    /// Weight multiplicities of a loop module.
    LoopMult(LoopArgs),
    /// Weight multiplicities of an imaginary Verma module.
    ImvermaMult(ImvermaArgs),
    /// The matrix of the imaginary Verma pairing at weight (λ, 0) − nδ.
    Prop42(Prop42Args),
    /// Twisted localization of a dense loop module: multiplicities before and after.
    LocalizeDemo(LocalizeArgs),
    /// Shadow (finite or injective type) of every real root on a window.
    Shadow(ShadowArgs),
    /// The parabolic set `P_M` built from the shadow.
    PmBuild(ShadowArgs),
    /// Exact identity suites.
    Identities(IdentityArgs),
    /// Growth of weight multiplicities of dense loop modules across windows.
    ProbeBounded(BoundedArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::AlgebraInfo(_) => "algebra-info",
            Command::Roots(_) => "roots",
            Command::ParabolicClassify(_) => "parabolic-classify",
            Command::ConeCertificate(_) => "cone-certificate",
            Command::LoopMult(_) => "loop-mult",
            Command::ImvermaMult(_) => "imverma-mult",
            Command::Prop42(_) => "prop42",
            Command::LocalizeDemo(_) => "localize-demo",
            Command::Shadow(_) => "shadow",
            Command::PmBuild(_) => "pm-build",
            Command::Identities(_) => "identities",
            Command::ProbeBounded(_) => "probe-bounded",
        }
    }
}

#[derive(Debug, Args, Serialize)]
pub struct AlgebraArgs {
    /// `A1x1`, `A2x1`, `A3x1`, `C2x1`, `A2x2`, …
    #[arg(long, default_value = "A1x1")]
    pub algebra: String,
    #[arg(long, default_value_t = 50)]
    pub samples: usize,
    /// Grades sampled for the Jacobi check, `|m| ≤ grade`.
    #[arg(long, default_value_t = 4)]
    pub grade: i64,
}

#[derive(Debug, Args, Serialize)]
pub struct RootsArgs {
    #[arg(long, default_value = "A1x1")]
    pub algebra: String,
    #[arg(long, default_value = "-2:2", value_parser = parse_window, allow_hyphen_values = true)]
    pub window: Window,
}

#[derive(Debug, Args, Serialize)]
pub struct FlagArgs {
    #[arg(long, default_value = "A1x1")]
    pub algebra: String,
    /// Comma-separated covector: finite coordinates, then the δ-coordinate.
    #[arg(long, value_parser = parse_rat, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub phi1: Vec<Rat>,
    #[arg(long, value_parser = parse_rat, value_delimiter = ',', allow_hyphen_values = true)]
    pub phi2: Option<Vec<Rat>>,
    #[arg(long, default_value = "-3:3", value_parser = parse_window, allow_hyphen_values = true)]
    pub window: Window,
}

#[derive(Debug, Args, Serialize)]
pub struct ConeArgs {
    #[command(flatten)]
    pub flag: FlagArgs,
    /// Random lattice vectors `ν` tested for `N_𝔊·ν ∈ Q_P`.
    #[arg(long, default_value_t = 50)]
    pub samples: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct LoopArgs {
    /// Dimensions of finite-dimensional sl₂ factors (highest weights).
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub dims: Vec<usize>,
    /// One nonzero scalar per factor, the dense factor first when present.
    #[arg(long, value_parser = parse_rat, value_delimiter = ',', allow_hyphen_values = true, default_value = "1")]
    pub scalars: Vec<Rat>,
    /// Dense factor `b,c` placed first.
    #[arg(long, value_parser = parse_rat, value_delimiter = ',', allow_hyphen_values = true)]
    pub dense: Option<Vec<Rat>>,
    /// Dense labels `j ∈ [−jw, jw]`.
    #[arg(long, default_value_t = 3)]
    pub jw: i64,
    /// Grades `s ∈ [−window, window]`.
    #[arg(long, default_value_t = 2)]
    pub window: i64,
    /// Sampled (generator, vector) pairs for the bracket check.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct ImvermaArgs {
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true, default_value = "1")]
    pub lambda: Rat,
    #[arg(long, default_value_t = 2)]
    pub depth: i64,
    #[arg(long, default_value_t = 2)]
    pub length: u32,
    #[arg(long, default_value_t = 2)]
    pub modes: i64,
}

#[derive(Debug, Args, Serialize)]
pub struct Prop42Args {
    #[arg(long, default_value_t = 6)]
    pub n: i64,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true, default_value = "1")]
    pub lambda: Rat,
    /// Pair against `v_l = e_l f_{l−n} v` instead of `e_{−l} f_{l−n} v`.
    #[arg(long)]
    pub literal: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct LocalizeArgs {
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true, default_value = "1/3")]
    pub b: Rat,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true, default_value = "1/2")]
    pub c: Rat,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true, default_value = "1/2")]
    pub x: Rat,
    #[arg(long, default_value_t = 3)]
    pub jw: i64,
    #[arg(long, default_value_t = 1)]
    pub window: i64,
    /// Tensor with the natural representation.
    #[arg(long)]
    pub natural: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleKind {
    /// Loop module of finite-dimensional sl₂ factors.
    Fd,
    /// Loop module of a dense sl₂ module.
    Dense,
    /// Standard Verma module of sl₂-hat.
    Verma,
}

#[derive(Debug, Args, Serialize)]
pub struct ShadowArgs {
    #[arg(long, value_enum, default_value = "fd")]
    pub module: ModuleKind,
    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub dims: Vec<usize>,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true, default_value = "1/3")]
    pub b: Rat,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true, default_value = "1/2")]
    pub c: Rat,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true, default_value = "2")]
    pub lambda: Rat,
    /// Root window.
    #[arg(long, default_value = "-1:1", value_parser = parse_window, allow_hyphen_values = true)]
    pub window: Window,
    /// Steps walked along each ray; loop modules are materialized wide enough for them.
    #[arg(long, default_value_t = 6)]
    pub steps: usize,
    /// Height truncation of the Verma module.
    #[arg(long, default_value_t = 6)]
    pub depth: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Multinomial,
    Composition,
    IntegerCollapse,
    PowerLaw,
    Conjugation,
    Lemmas,
    All,
}

#[derive(Debug, Args, Serialize)]
pub struct IdentityArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    /// Multinomial suite: `N ≤ max`, `K ≤ max + 1`, `k ≤ 3`.
    #[arg(long, default_value_t = 4)]
    pub max: u32,
    /// Lemma suites: random rational pairs `(x, y)`.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct BoundedArgs {
    /// Number of dense factors (1 or 2); one dense factor is tensored with the natural module.
    #[arg(long, default_value_t = 1)]
    pub factors: usize,
    #[arg(long, value_delimiter = ',', default_value = "3,6,9")]
    pub windows: Vec<i64>,
}

/// `argv` for a JSON configuration: global keys first, then the command and its flags.
fn config_argv(path: &PathBuf) -> Result<(Vec<String>, Vec<String>), String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| "configuration must be a JSON object".to_string())?;
    let command = obj
        .get("command")
        .and_then(|c| c.as_str())
        .ok_or_else(|| "configuration needs a string `command`".to_string())?;
    let render = |v: &serde_json::Value| -> Result<Option<String>, String> {
        Ok(match v {
            serde_json::Value::String(s) => Some(s.clone()),
            serde_json::Value::Number(n) => Some(n.to_string()),
            serde_json::Value::Bool(true) => None,
            serde_json::Value::Array(xs) => Some(
                xs.iter()
                    .map(|x| match x {
                        serde_json::Value::String(s) => Ok(s.clone()),
                        serde_json::Value::Number(n) => Ok(n.to_string()),
                        _ => Err(format!("unsupported list element {x}")),
                    })
                    .collect::<Result<Vec<_>, _>>()?
                    .join(","),
            ),
            _ => return Err(format!("unsupported configuration value {v}")),
        })
    };
    let mut global = Vec::new();
    let mut local = Vec::new();
    for (k, v) in obj {
        if k == "command" || v == &serde_json::Value::Bool(false) {
            continue;
        }
        let flag = format!("--{}", k.replace('_', "-"));
        let target = if ["seed", "format", "output"].contains(&k.as_str()) {
            &mut global
        } else {
            &mut local
        };
        target.push(flag);
        if let Some(s) = render(v)? {
            target.push(s);
        }
    }
    local.insert(0, command.to_string());
    Ok((global, local))
}

fn parse() -> Result<Cli, ExitCode> {
    let handle = |e: clap::Error| {
        let code = if e.use_stderr() { 1 } else { 0 };
        let _ = e.print();
        ExitCode::from(code)
    };
    let args: Vec<String> = std::env::args().collect();
    let cli = Cli::try_parse_from(&args).map_err(handle)?;
    let Some(path) = &cli.config else {
        return Ok(cli);
    };
    if cli.command.is_some() {
        eprintln!("error: --config supplies the command; do not pass a subcommand as well");
        return Err(ExitCode::from(1));
    }
    let (file_globals, file_command) = config_argv(path).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(1)
    })?;
    // Command-line globals come after the file's, so they win.
    let mut argv = vec![args[0].clone()];
    let mut rest = args[1..].iter();
    let mut cli_globals = Vec::new();
    while let Some(a) = rest.next() {
        if a == "--config" {
            rest.next();
        } else if !a.starts_with("--config=") {
            cli_globals.push(a.clone());
        }
    }
    argv.extend(file_globals);
    argv.extend(cli_globals);
    argv.extend(file_command);
    Cli::try_parse_from(&argv).map_err(handle)
}

fn threads() -> Result<usize, String> {
    match std::env::var("AFFINEKIT_THREADS") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(format!("AFFINEKIT_THREADS must be a positive integer, got `{s}`")),
        },
        Err(_) => Ok(0),
    }
}

fn main() -> ExitCode {
    let cli = match parse() {
        Ok(c) => c,
        Err(code) => return code,
    };
    let Some(command) = &cli.command else {
        eprintln!("error: no subcommand given (see --help)");
        return ExitCode::from(1);
    };
    let threads = match threads() {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let echo = serde_json::to_value(&cli).expect("configuration serializes");
    let mut report = Report::new(command.name(), echo);
    if let Err(e) = pool.install(|| commands::run(command, cli.seed, &mut report)) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    let format = cli.format.unwrap_or(match command {
        Command::Prop42(_) => Format::Csv,
        _ => Format::Json,
    });
    let mut buf = Vec::new();
    let written = match format {
        Format::Json => report.write_json(&mut buf).map_err(|e| e.to_string()),
        Format::Csv => report.write_csv(&mut buf),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    let out = match &cli.output {
        Some(p) => fs::write(p, &buf).map_err(|e| format!("{}: {e}", p.display())),
        None => std::io::stdout().write_all(&buf).map_err(|e| e.to_string()),
    };
    if let Err(e) = out {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if report.has_failure() {
        for r in report.records.iter().filter(|r| r.status == report::Status::Fail) {
            eprintln!("fail: {} (expected {}, got {})", r.name, r.expected, r.actual);
        }
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}
