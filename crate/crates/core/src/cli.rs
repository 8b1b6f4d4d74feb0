//! Command-line front end: `count`, `verify`, `asymptotics`, `generate`, `gt`.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use crate::asymptotics::{self, Model};
use crate::counting::{b_sequence, e_sequence, t_sequence, SequenceExport, TMode};
use crate::kmsw::{kmsw_forward, transversal_to_walk, walk_to_transversal};
use crate::permutations::{omega_counts, plane_permutations, plane_posets};
use crate::walks::TandemWalk;
use crate::verify::{bipolar_with_edges, posets_with_edges, run_suite, t_walks_with_se, Suite};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Weight {
    Symbolic,
    Value(BigRational),
}

/// `3`, `1/2` or `0.25`; negative values are rejected.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let bad = || format!("`{s}` is not a rational number");
    let q = if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        BigRational::new(digits, BigInt::from(10u8).pow(frac.len() as u32))
    } else {
        s.parse::<BigRational>().map_err(|_| bad())?
    };
    if q.is_negative() {
        return Err(format!("v must be nonnegative, got {s}"));
    }
    Ok(q)
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    if s == "symbolic" {
        Ok(Weight::Symbolic)
    } else {
        parse_rational(s).map(Weight::Value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Class {
    /// Plane permutations of size n.
    PlanePerm,
    /// Plane bipolar posets with n + 2 vertices, in generating-tree order.
    PlanePoset,
    /// Plane bipolar orientations with n edges.
    Bipolar,
    /// Plane bipolar posets with n edges.
    Poset,
    /// Transversal structures with n inner vertices.
    Transversal,
}

#[derive(Debug, Parser)]
#[command(name = "planewalks", version, about = "Plane bipolar orientations, transversal structures and quadrant tandem walks")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a counting sequence.
    Count {
        #[arg(long)]
        model: Model,
        #[arg(long)]
        n: usize,
        /// A nonnegative rational, or `symbolic` (transversal only).
        #[arg(long, value_parser = parse_weight)]
        v: Option<Weight>,
    },
    /// Run an exhaustive cross-check; exits 1 on the first counterexample.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        max: usize,
    },
    /// Print the asymptotic constants of a model.
    Asymptotics {
        #[arg(long)]
        model: Model,
        #[arg(long, value_parser = parse_rational)]
        v: Option<BigRational>,
    },
    /// Print every object of a class and size, one per line.
    Generate {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long)]
        size: usize,
    },
    /// Print the label counts of the generating tree, level by level.
    Gt {
        #[arg(long)]
        levels: usize,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
    Runtime(String),
}

type Out<'a> = &'a mut dyn Write;

fn io(e: std::io::Error) -> Failure {
    Failure::Runtime(e.to_string())
}

fn json_pretty<T: Serialize>(out: Out, value: &T) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string_pretty(value).map_err(|e| Failure::Runtime(e.to_string()))?).map_err(io)
}

fn count(out: Out, format: Format, model: Model, n: usize, v: Option<Weight>) -> Result<(), Failure> {
    let (terms, v_shown) = match (model, v) {
        (Model::Transversal, v) => {
            let v = v.unwrap_or(Weight::Symbolic);
            let (mode, shown) = match v {
                Weight::Symbolic => (TMode::Symbolic, "symbolic".to_string()),
                Weight::Value(q) => {
                    let s = q.to_string();
                    (TMode::Evaluated(q), s)
                }
            };
            let terms = t_sequence(n, &mode).map_err(|e| Failure::Usage(e.to_string()))?.to_strings();
            (terms, Some(shown))
        }
        (_, Some(_)) => return Err(Failure::Usage(format!("--v only applies to the transversal model, not {model}"))),
        (Model::PosetsEdges, None) => (e_sequence(n).iter().map(|x| x.to_string()).collect(), None),
        (Model::PosetsVertices, None) => (b_sequence(n).iter().map(|x| x.to_string()).collect(), None),
    };
    let symbolic = v_shown.as_deref() == Some("symbolic");
    let export = SequenceExport::new(model.name(), v_shown, terms);
    match format {
        Format::Text if symbolic => {
            for (k, t) in export.terms.iter().enumerate() {
                writeln!(out, "{}: {}", k + 1, t).map_err(io)?;
            }
            Ok(())
        }
        Format::Text => writeln!(out, "{}", export.terms.join(" ")).map_err(io),
        Format::Json => json_pretty(out, &export),
        Format::Csv => write!(out, "{}", export.to_csv()).map_err(io),
    }
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    suite: Suite,
    max: usize,
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    cases: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<&'a crate::verify::Counterexample>,
}

fn verify(out: Out, format: Format, suite: Suite, max: usize) -> Result<(), Failure> {
    match run_suite(suite, max) {
        Ok(r) => match format {
            Format::Json => json_pretty(out, &VerifyJson { suite, max, ok: true, cases: Some(r.cases), counterexample: None }),
            Format::Csv => write!(out, "suite,max,cases,ok\n{suite},{max},{},true\n", r.cases).map_err(io),
            Format::Text => writeln!(out, "{suite} up to {max}: {} cases, no mismatch", r.cases).map_err(io),
        },
        Err(c) => {
            match format {
                Format::Json => json_pretty(out, &VerifyJson { suite, max, ok: false, cases: None, counterexample: Some(&c) })?,
                _ => writeln!(out, "counterexample: {}", serde_json::to_string(&c).expect("serializes")).map_err(io)?,
            }
            Err(Failure::Verification(c.to_string()))
        }
    }
}

/// Rounds to 12 decimals so that exact values print as such.
fn show(x: f64) -> String {
    let r = (x * 1e12).round() / 1e12;
    format!("{r}")
}

fn asymptotics_cmd(out: Out, format: Format, model: Model, v: Option<BigRational>) -> Result<(), Failure> {
    if model != Model::Transversal && v.is_some() {
        return Err(Failure::Usage(format!("--v only applies to the transversal model, not {model}")));
    }
    if model == Model::Transversal && v.is_none() {
        return Err(Failure::Usage("the transversal model needs --v".into()));
    }
    let r = asymptotics::report(model, v.as_ref()).map_err(|e| Failure::Runtime(e.to_string()))?;
    let rows = [
        ("z0", show(r.z0)),
        ("gamma", show(r.gamma)),
        ("xi", show(r.xi)),
        ("alpha", show(r.alpha)),
        ("central_charge", show(r.central_charge)),
        ("xi_polynomial", r.xi_polynomial.to_string()),
        ("dfinite_obstruction", r.dfinite_obstruction.to_string()),
    ];
    match format {
        Format::Json => writeln!(out, "{}", r.to_json()).map_err(io),
        Format::Csv => {
            writeln!(out, "key,value\nmodel,{model}").map_err(io)?;
            if let Some(v) = &r.v {
                writeln!(out, "v,{v}").map_err(io)?;
            }
            for (k, val) in rows {
                writeln!(out, "{k},{val}").map_err(io)?;
            }
            Ok(())
        }
        Format::Text => {
            writeln!(out, "model = {model}").map_err(io)?;
            if let Some(v) = &r.v {
                writeln!(out, "v = {v}").map_err(io)?;
            }
            for (k, val) in rows {
                writeln!(out, "{k} = {val}").map_err(io)?;
            }
            Ok(())
        }
    }
}

fn emit(out: Out, format: Format, k: usize, text: &str, json: &dyn erased::Json) -> Result<(), Failure> {
    match format {
        Format::Text => writeln!(out, "{text}").map_err(io),
        Format::Csv => {
            if k == 0 {
                writeln!(out, "index,object").map_err(io)?;
            }
            writeln!(out, "{k},\"{text}\"").map_err(io)
        }
        Format::Json => writeln!(out, "{}", json.to_json_line()).map_err(io),
    }
}

mod erased {
    pub trait Json {
        fn to_json_line(&self) -> String;
    }

    impl<T: serde::Serialize> Json for T {
        fn to_json_line(&self) -> String {
            serde_json::to_string(self).expect("serializes")
        }
    }
}

fn walk_text(w: &TandemWalk) -> String {
    format!("({},{}) {}", w.start.0, w.start.1, w)
}

/// Text form is the encoding walk for maps and the one-line notation for
/// permutations; JSON lines carry the full map.
fn generate(out: Out, format: Format, class: Class, size: usize) -> Result<(), Failure> {
    match class {
        Class::PlanePerm => {
            for (k, p) in plane_permutations(size).iter().enumerate() {
                emit(out, format, k, &p.to_string(), &p.values())?;
            }
        }
        Class::PlanePoset | Class::Bipolar | Class::Poset => {
            let maps = match class {
                Class::PlanePoset => plane_posets(size),
                Class::Bipolar => bipolar_with_edges(size),
                _ => posets_with_edges(size),
            };
            for (k, m) in maps.iter().enumerate() {
                emit(out, format, k, &walk_text(&kmsw_forward(m)), &m.canonical().to_json())?;
            }
        }
        Class::Transversal => {
            for (k, w) in t_walks_with_se(size).iter().enumerate() {
                let x = walk_to_transversal(w).map_err(|e| Failure::Runtime(e.to_string()))?;
                debug_assert_eq!(transversal_to_walk(&x).as_ref(), Ok(w));
                emit(out, format, k, &walk_text(w), &x.canonical().to_json())?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct LabelCount {
    h: usize,
    k: usize,
    count: String,
}

#[derive(Serialize)]
struct LevelJson {
    level: usize,
    total: String,
    labels: Vec<LabelCount>,
}

fn gt(out: Out, format: Format, levels: usize) -> Result<(), Failure> {
    let omega = omega_counts(levels);
    match format {
        Format::Csv => write!(out, "{}", omega.to_csv()).map_err(io),
        Format::Json => {
            let rows: Vec<LevelJson> = omega
                .levels
                .iter()
                .zip(omega.totals())
                .enumerate()
                .map(|(n, (level, total))| LevelJson {
                    level: n + 1,
                    total: total.to_string(),
                    labels: level.iter().map(|(l, c)| LabelCount { h: l.h, k: l.k, count: c.to_string() }).collect(),
                })
                .collect();
            json_pretty(out, &rows)
        }
        Format::Text => {
            for (n, (level, total)) in omega.levels.iter().zip(omega.totals()).enumerate() {
                let labels: Vec<String> = level.iter().map(|(l, c)| format!("{l}x{c}")).collect();
                writeln!(out, "level {}: total {}: {}", n + 1, total, labels.join(" ")).map_err(io)?;
            }
            Ok(())
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code: 0 on success, 1 on a verification failure or runtime error,
/// 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let format = cli.format;
    let result = match cli.command {
        Command::Count { model, n, v } => count(out, format, model, n, v),
        Command::Verify { suite, max } => verify(out, format, suite, max),
        Command::Asymptotics { model, v } => asymptotics_cmd(out, format, model, v),
        Command::Generate { class, size } => generate(out, format, class, size),
        Command::Gt { levels } => gt(out, format, levels),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Verification(m)) => {
            let _ = writeln!(err, "verification failed: {m}");
            1
        }
        Err(Failure::Runtime(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &str) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("planewalks").chain(args.split_whitespace()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn count_examples() {
        assert_eq!(run_str("count --model transversal --n 9 --v 0"), (0, "1 2 6 24 116 642 3938 26194 186042\n".into()));
        assert_eq!(run_str("count --model posets-vertices --n 6").1, "1 2 6 23 104 530\n");
        let (code, sym) = run_str("count --model transversal --n 5 --v symbolic");
        assert_eq!(code, 0);
        assert!(sym.ends_with("4: 24 + 1*v\n5: 116 + 12*v\n"));
        let (_, half) = run_str("count --model transversal --n 4 --v 0.5 --format json");
        assert!(half.contains("\"v\": \"1/2\"") && half.contains("\"49/2\""));
        assert!(run_str("count --model posets-edges --n 4 --format csv").1.starts_with("n,term\n1,1\n"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str("count --model transversal --n 4 --v -1").0, 2);
        assert_eq!(run_str("count --model posets --n 4").0, 2);
        assert_eq!(run_str("count --model posets-edges --n 4 --v 1").0, 2);
        assert_eq!(run_str("asymptotics --model transversal").0, 2);
        assert_eq!(run_str("verify --suite nope --max 3").0, 2);
        assert_eq!(run_str("frobnicate").0, 2);
    }

    #[test]
    fn verify_and_asymptotics() {
        let (code, text) = run_str("verify --suite plane-perm --max 5");
        assert_eq!(code, 0, "{text}");
        let (code, text) = run_str("asymptotics --model transversal --v 0");
        assert_eq!(code, 0);
        assert!(text.contains("gamma = 13.5\n") && text.contains("xi = 0.875\n"), "{text}");
        assert!(text.contains("dfinite_obstruction = true"));
    }

    #[test]
    fn generate_and_gt() {
        let (_, perms) = run_str("generate --class plane-perm --size 3");
        assert_eq!(perms.lines().count(), 6);
        let (_, t) = run_str("generate --class transversal --size 3 --format json");
        assert_eq!(t.lines().count(), 6);
        let (_, b) = run_str("generate --class bipolar --size 3");
        assert_eq!(b.lines().count(), 6);
        let (_, levels) = run_str("gt --levels 3");
        assert_eq!(levels, "level 1: total 1: (1,1)x1\nlevel 2: total 2: (1,2)x1 (2,1)x1\nlevel 3: total 6: (1,2)x1 (1,3)x1 (2,2)x2 (3,1)x2\n");
    }

    #[test]
    fn deterministic_output() {
        for args in ["gt --levels 6 --format json", "generate --class poset --size 5", "asymptotics --model posets-edges --format csv"] {
            assert_eq!(run_str(args), run_str(args));
        }
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("0.25"), Ok(BigRational::new(1.into(), 4.into())));
        assert_eq!(parse_rational("3/6"), Ok(BigRational::new(1.into(), 2.into())));
        assert!(parse_rational("1.").is_err());
        assert!(parse_rational("x").is_err());
    }
}
