//! `scc-range` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 infeasible construction, 4 a constructed witness failed its own
//! re-evaluation.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::choice::ChoiceSet;
use crate::codec;
use crate::constructions::{
    construct_approval, construct_borda, construct_copeland, construct_maximin, construct_pareto,
    construct_plurality, construct_top_cycle,
};
use crate::error::Error;
use crate::oracle::{min_gauge, range_report, verify_claims, Mode, RangeOptions};
use crate::profile::Profile;
use crate::rules::{evaluate, scores, IndexVector, Rule};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_SELF_CHECK: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "scc-range", version, about = "Ranges of social choice correspondences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a rule on a profile file.
    Eval(EvalArgs),
    /// Build a witness profile for a target set or size.
    Construct(ConstructArgs),
    /// Enumerate the range of a rule.
    Range(RangeArgs),
    /// Run the theorem checklist.
    Verify(VerifyArgs),
    /// Smallest approval gauge reaching a target set.
    MinGauge(MinGaugeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long, value_parser = parse_rule)]
    rule: Rule,
    /// Profile file, or `-` for standard input.
    #[arg(long)]
    profile: String,
    /// Approval ballot sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    ballots: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Target {
    /// Target set, comma separated ids.
    #[arg(long, value_delimiter = ',')]
    set: Option<Vec<usize>>,
    /// Target size.
    #[arg(long)]
    size: Option<usize>,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(long, value_parser = parse_rule)]
    rule: Rule,
    #[arg(short = 'm')]
    m: usize,
    #[arg(short = 'n')]
    n: usize,
    #[command(flatten)]
    target: Target,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct RangeArgs {
    #[arg(long, value_parser = parse_rule)]
    rule: Rule,
    #[arg(short = 'm')]
    m: usize,
    #[arg(short = 'n')]
    n: usize,
    #[arg(long, value_parser = parse_mode, default_value = "anonymous")]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    override_guards: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = crate::oracle::DEFAULT_M_MAX)]
    m_max: usize,
    #[arg(long, default_value_t = crate::oracle::DEFAULT_N_MAX)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct MinGaugeArgs {
    #[arg(short = 'm')]
    m: usize,
    #[arg(short = 'n')]
    n: usize,
    #[command(flatten)]
    target: Target,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    override_guards: bool,
}

fn parse_rule(s: &str) -> Result<Rule, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Lib(Error),
    Io(String),
    SelfCheck(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn execute<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Eval(a) => run_eval(a, stdin, out),
        Command::Construct(a) => run_construct(a, out),
        Command::Range(a) => run_range(a, out),
        Command::Verify(a) => run_verify(a, out),
        Command::MinGauge(a) => run_min_gauge(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Infeasible(_) => EXIT_INFEASIBLE,
                Error::CheckFailed(_) => EXIT_SELF_CHECK,
                _ => EXIT_USAGE,
            }
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::SelfCheck(msg)) => {
            let _ = writeln!(err, "error: self-check failed: {msg}");
            EXIT_SELF_CHECK
        }
    }
}

fn ids_json(s: ChoiceSet) -> serde_json::Value {
    json!(s.ids())
}

fn run_eval(a: EvalArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = if a.profile == "-" {
        let mut buf = String::new();
        stdin.read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(&a.profile).map_err(|e| Failure::Io(format!("--profile {}: {e}", a.profile)))?
    };
    let u = codec::parse(&text)?;
    let ballots = match a.ballots {
        Some(b) => Some(IndexVector::new(b, u.m())?),
        None => None,
    };
    let choice = evaluate(a.rule, &u, ballots.as_ref())?;
    let sv = scores(a.rule, &u, ballots.as_ref())?;
    match a.format {
        Format::Text => {
            writeln!(out, "rule: {}", a.rule)?;
            writeln!(out, "choice: {choice}")?;
            if let Some(sv) = &sv {
                let v: Vec<String> = sv.values().iter().map(i64::to_string).collect();
                writeln!(out, "scores: {}", v.join(" "))?;
            }
        }
        Format::Json => {
            let j = json!({
                "rule": a.rule,
                "m": u.m(),
                "n": u.n(),
                "choice": ids_json(choice),
                "scores": sv.map(|s| s.values().to_vec()),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&j).expect("json"))?;
        }
    }
    Ok(EXIT_OK)
}

enum Wanted {
    Set(ChoiceSet),
    Size(usize),
}

fn wanted(target: &Target, m: usize) -> Result<Wanted, Error> {
    match (&target.set, target.size) {
        (Some(ids), _) => Ok(Wanted::Set(ChoiceSet::try_from_ids(ids, m)?)),
        (None, Some(k)) if k >= 1 && k <= m => Ok(Wanted::Size(k)),
        (None, Some(k)) => Err(Error::InvalidParameters(format!("--size {k} is outside [1, {m}]"))),
        (None, None) => Err(Error::InvalidParameters("one of --set or --size is required".into())),
    }
}

/// Relabels `u` so that `chosen` maps onto `target` (same size), keeping
/// both complements in ascending order.
fn move_choice(u: &Profile, chosen: ChoiceSet, target: ChoiceSet) -> Result<Profile, Error> {
    let m = u.m();
    let mut perm = vec![0; m];
    for (x, y) in chosen.iter().zip(target.iter()) {
        perm[x] = y;
    }
    for (x, y) in chosen.complement(m).iter().zip(target.complement(m).iter()) {
        perm[x] = y;
    }
    u.relabel_alternatives(&perm)
}

fn run_construct(a: ConstructArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if a.m > crate::choice::MAX_ALTERNATIVES {
        return Err(Error::TooManyAlternatives {
            m: a.m,
            max: crate::choice::MAX_ALTERNATIVES,
        }
        .into());
    }
    let want = wanted(&a.target, a.m)?;
    let as_set = |w: &Wanted| match *w {
        Wanted::Set(s) => s,
        Wanted::Size(k) => ChoiceSet::prefix(k),
    };
    let (m, n) = (a.m, a.n);
    let mut ballots = None;
    let u = match a.rule {
        Rule::Tops => {
            return Err(Error::InvalidParameters("no witness builder for rule tops".into()).into())
        }
        Rule::Pareto => construct_pareto(m, n, as_set(&want))?,
        Rule::Borda => construct_borda(m, n, as_set(&want))?,
        Rule::Plurality => construct_plurality(m, n, as_set(&want))?,
        Rule::TopCycle => construct_top_cycle(m, n, as_set(&want))?,
        Rule::Approval => {
            let (u, b) = construct_approval(m, n, as_set(&want))?;
            ballots = Some(b);
            u
        }
        Rule::Maximin | Rule::Copeland => {
            let k = match want {
                Wanted::Set(s) => s.len(),
                Wanted::Size(k) => k,
            };
            let u = if a.rule == Rule::Maximin {
                construct_maximin(m, n, k)?
            } else {
                construct_copeland(m, n, k)?
            };
            match want {
                Wanted::Set(s) => {
                    let chosen = evaluate(a.rule, &u, None)?;
                    if chosen.len() != s.len() {
                        return Err(Failure::SelfCheck(format!("builder chose {chosen}, wanted size {}", s.len())));
                    }
                    move_choice(&u, chosen, s)?
                }
                Wanted::Size(_) => u,
            }
        }
    };

    let choice = evaluate(a.rule, &u, ballots.as_ref())?;
    let ok = match want {
        Wanted::Set(s) => choice == s,
        Wanted::Size(k) => match a.rule {
            Rule::Maximin | Rule::Copeland => choice.len() == k,
            _ => choice == ChoiceSet::prefix(k),
        },
    };
    if !ok {
        return Err(Failure::SelfCheck(format!("witness evaluates to {choice}")));
    }

    match a.format {
        Format::Text => {
            out.write_all(codec::emit(&u).as_bytes())?;
            if let Some(b) = &ballots {
                writeln!(out, "ballots: {b}")?;
            }
            writeln!(out, "choice: {choice}")?;
        }
        Format::Json => {
            let j = json!({
                "rule": a.rule,
                "m": m,
                "n": n,
                "choice": ids_json(choice),
                "profile": codec::emit(&u),
                "ballots": ballots.as_ref().map(|b| b.values().to_vec()),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&j).expect("json"))?;
        }
    }
    Ok(EXIT_OK)
}

fn run_range(a: RangeArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let opts = RangeOptions {
        override_guards: a.override_guards,
    };
    let report = range_report(a.rule, a.m, a.n, a.mode, opts)?;
    match a.format {
        Format::Text => out.write_all(report.to_text().as_bytes())?,
        Format::Json => writeln!(out, "{}", report.to_json())?,
    }
    Ok(EXIT_OK)
}

fn run_verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let report = verify_claims(a.m_max, a.n_max);
    match a.format {
        Format::Text => out.write_all(report.to_text().as_bytes())?,
        Format::Json => writeln!(out, "{}", report.to_json())?,
    }
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn run_min_gauge(a: MinGaugeArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let s = match wanted(&a.target, a.m)? {
        Wanted::Set(s) => s,
        Wanted::Size(k) => ChoiceSet::prefix(k),
    };
    let g = min_gauge(a.m, a.n, s, a.override_guards)?;
    match a.format {
        Format::Text => writeln!(out, "min gauge for {s} at m={} n={}: {g}", a.m, a.n)?,
        Format::Json => {
            let j = json!({ "m": a.m, "n": a.n, "set": ids_json(s), "min_gauge": g });
            writeln!(out, "{}", serde_json::to_string_pretty(&j).expect("json"))?;
        }
    }
    Ok(EXIT_OK)
}
