//! The `matroid-ears` command line: argument parsing, the matroid input format and JSON
//! reports.
//!
//! Reports are JSON objects with sorted keys in which every integer is written as a
//! decimal string, so values past 2^53 survive any JSON consumer. Polynomials are arrays
//! of coefficients indexed by degree.
//!
//! Exit status: 0 on success, 1 when a verification or predicate fails, 2 for usage and
//! input errors, 3 when an enumeration cap is exceeded.

use std::io::Read;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Deserializer};
use serde_json::{json, Map, Value};

use crate::analysis::{evaluate, real_root_count, scan_uniform, Check, Predicate};
use crate::chow::{augmented_chow_hilbert, chow_hilbert, verify_thm51, verify_thm52};
use crate::complex::{h_from_f, Manifold};
use crate::complexes::{augmented_bergman_complex, bergman_complex, independence_complex};
use crate::ear::{build_ced, verify_ced};
use crate::enumeration::{
    f_augmented_via_prop23, f_bergman_uniform, h_augmented_via_prop24, h_bergman_uniform_descents,
    h_independence,
};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matroid::{Matroid, ReprKind};
use crate::poly::Polynomial;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFICATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAP: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "matroid-ears",
    version,
    about = "Augmented Bergman complexes, ear decompositions and Chow series of matroids"
)]
pub struct Cli {
    /// Cap on enumerated faces (default 100000000, or MATROID_EARS_MAX_FACES).
    #[arg(long, global = true)]
    pub max_faces: Option<usize>,
    /// Cap on enumerated flats (default 5000000, or MATROID_EARS_MAX_FLATS).
    #[arg(long, global = true)]
    pub max_flats: Option<usize>,
    /// Cap on bases for ear decompositions (default 200, or MATROID_EARS_MAX_BASES).
    #[arg(long, global = true)]
    pub max_bases: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// f- and h-polynomials of a matroid complex.
    Complex {
        #[arg(long, value_enum)]
        kind: Kind,
        #[command(flatten)]
        input: MatroidInput,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
    },
    /// Build and verify the convex ear decomposition of the augmented Bergman complex.
    Ced {
        #[command(flatten)]
        input: MatroidInput,
    },
    /// Hilbert–Poincaré series of the Chow ring.
    Chow {
        #[command(flatten)]
        input: MatroidInput,
        #[arg(long)]
        augmented: bool,
    },
    /// Check the reversed h-polynomial identities for uniform matroids over ranges.
    VerifyIdentities {
        #[arg(long, value_parser = ["5.1", "5.2"])]
        thm: String,
        /// Rank range, `a..b` (inclusive) or a single value.
        #[arg(long, value_parser = parse_range)]
        d: RangeInclusive<usize>,
        /// Size range, `a..b` (inclusive) or a single value.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
    },
    /// Evaluate predicates on a given polynomial or on one computed from a matroid.
    Check {
        /// Comma-separated coefficients, constant term first.
        #[arg(long, conflicts_with_all = ["matroid", "uniform"])]
        poly: Option<String>,
        #[command(flatten)]
        input: OptionalMatroidInput,
        #[arg(long, value_enum, default_value = "augmented")]
        kind: Kind,
        #[arg(long, value_enum, default_value = "h")]
        of: Of,
        #[arg(long = "predicate", value_enum, required = true)]
        predicates: Vec<CheckName>,
        /// Order for ultra log-concavity (defaults to the degree).
        #[arg(long)]
        order: Option<usize>,
        /// Degree `d` for top-heaviness and the ratio chain.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Evaluate predicates on f(Δ) and h(Δ) of U(d,n) over ranges and report failures.
    Scan {
        #[arg(long, value_parser = parse_range)]
        d: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long = "predicate", required = true, value_parser = parse_predicate)]
        predicates: Vec<Predicate>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct MatroidInput {
    /// JSON matroid document; `-` reads standard input.
    #[arg(long)]
    pub matroid: Option<PathBuf>,
    /// Uniform matroid as `D,N`.
    #[arg(long, value_parser = parse_uniform)]
    pub uniform: Option<(usize, usize)>,
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
pub struct OptionalMatroidInput {
    #[arg(long)]
    pub matroid: Option<PathBuf>,
    #[arg(long, value_parser = parse_uniform)]
    pub uniform: Option<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Independence,
    Bergman,
    Augmented,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Formulas for uniform matroids, face enumeration otherwise.
    Auto,
    Enumerate,
    Formula,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Of {
    F,
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    Unimodal,
    LogConcave,
    NoInternalZeros,
    UltraLogConcave,
    RealRooted,
    TopHeavy,
    #[value(name = "2cm-chain")]
    TwoCmChain,
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("{t:?} is not a count"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

fn parse_uniform(s: &str) -> std::result::Result<(usize, usize), String> {
    let (d, n) = s.split_once(',').ok_or("expected D,N")?;
    let d = d
        .trim()
        .parse()
        .map_err(|_| format!("{d:?} is not a count"))?;
    let n = n
        .trim()
        .parse()
        .map_err(|_| format!("{n:?} is not a count"))?;
    Ok((d, n))
}

fn parse_predicate(s: &str) -> std::result::Result<Predicate, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A count given as a JSON number or a decimal string.
fn count<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<usize, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Number(usize),
        Text(String),
    }
    match Raw::deserialize(d)? {
        Raw::Number(n) => Ok(n),
        Raw::Text(s) => s
            .parse()
            .map_err(|_| serde::de::Error::custom(format!("{s:?} is not a count"))),
    }
}

fn counts<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<usize>>, D::Error> {
    #[derive(Deserialize)]
    struct C(#[serde(deserialize_with = "count")] usize);
    let raw: Vec<Vec<C>> = Vec::deserialize(d)?;
    Ok(raw
        .into_iter()
        .map(|b| b.into_iter().map(|C(e)| e).collect())
        .collect())
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum MatroidDocument {
    Uniform {
        #[serde(deserialize_with = "count")]
        rank: usize,
        #[serde(deserialize_with = "count")]
        n: usize,
    },
    Bases {
        #[serde(deserialize_with = "count")]
        n: usize,
        #[serde(deserialize_with = "counts")]
        bases: Vec<Vec<usize>>,
    },
}

/// Parses `{"type":"uniform","rank":d,"n":n}` or `{"type":"bases","n":n,"bases":[[...],...]}`.
/// Counts may be JSON numbers or decimal strings.
pub fn parse_matroid(document: &str) -> Result<Matroid> {
    let doc: MatroidDocument = serde_json::from_str(document)
        .map_err(|e| Error::Parse(format!("matroid document: {e}")))?;
    match doc {
        MatroidDocument::Uniform { rank, n } => Matroid::uniform(rank, n),
        MatroidDocument::Bases { n, bases } => Matroid::from_bases(n, bases),
    }
}

/// The input document describing `m`; explicit matroids list their bases.
pub fn matroid_document(m: &Matroid, limits: &Limits) -> Result<Value> {
    Ok(match m.repr_kind() {
        ReprKind::Uniform => json!({"type": "uniform", "rank": s(m.rank()), "n": s(m.n())}),
        ReprKind::ExplicitBases => {
            let bases: Vec<Vec<String>> = m
                .bases(limits)?
                .iter()
                .map(|b| b.iter().map(|&e| s(e)).collect())
                .collect();
            json!({"type": "bases", "n": s(m.n()), "bases": bases})
        }
    })
}

fn s(n: impl ToString) -> String {
    n.to_string()
}

fn poly_json(p: &Polynomial) -> Value {
    json!(p.to_decimal_strings())
}

fn read_matroid(
    path: Option<&PathBuf>,
    uniform: Option<(usize, usize)>,
) -> Result<Option<Matroid>> {
    if let Some((d, n)) = uniform {
        return Matroid::uniform(d, n).map(Some);
    }
    let Some(path) = path else {
        return Ok(None);
    };
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path)?
    };
    parse_matroid(&text).map(Some)
}

/// f and h of one of the three complexes of `m`, with the number of facets when the
/// complex was enumerated.
fn complex_polys(
    m: &Matroid,
    kind: Kind,
    method: Method,
    limits: &Limits,
) -> Result<(Polynomial, Polynomial, Option<usize>, &'static str)> {
    let formula = match method {
        Method::Auto => m.is_uniform(),
        Method::Enumerate => false,
        Method::Formula => true,
    };
    if formula {
        let (f, h) = match kind {
            Kind::Independence => {
                let h = h_independence(m, limits)?;
                let f = if m.is_uniform() {
                    Polynomial::new(
                        (0..=m.rank())
                            .map(|k| crate::combinatorics::binomial(m.n() as u64, k as u64))
                            .collect(),
                    )
                } else {
                    Polynomial::new(m.independent_set_counts(limits)?)
                };
                (f, h)
            }
            Kind::Bergman if m.is_uniform() => {
                if m.rank() == 0 {
                    return Err(Error::InvalidArgument(
                        "the Bergman complex of a rank-0 matroid is not defined".into(),
                    ));
                }
                (
                    f_bergman_uniform(m.rank(), m.n())?,
                    h_bergman_uniform_descents(m.rank(), m.n())?,
                )
            }
            Kind::Bergman => {
                let f = bergman_complex(m, limits)?.f_polynomial(limits)?;
                let h = h_from_f(&f, m.rank().saturating_sub(1))?;
                (f, h)
            }
            Kind::Augmented => (
                f_augmented_via_prop23(m, limits)?,
                h_augmented_via_prop24(m, limits)?,
            ),
        };
        return Ok((f, h, None, "formula"));
    }
    let complex = match kind {
        Kind::Independence => independence_complex(m, limits)?,
        Kind::Bergman => bergman_complex(m, limits)?,
        Kind::Augmented => augmented_bergman_complex(m, limits)?,
    };
    Ok((
        complex.f_polynomial(limits)?,
        complex.h_polynomial(limits)?,
        Some(complex.facet_count()),
        "enumerate",
    ))
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Independence => "independence",
        Kind::Bergman => "bergman",
        Kind::Augmented => "augmented",
    }
}

/// Facet-size bound of the complex, the natural `d` for the h-vector inequalities.
fn complex_degree(m: &Matroid, kind: Kind) -> usize {
    match kind {
        Kind::Bergman => m.rank().saturating_sub(1),
        _ => m.rank(),
    }
}

/// A finished command: the JSON report and whether every verification passed.
#[derive(Debug)]
pub struct Outcome {
    pub report: Value,
    pub ok: bool,
}

pub fn limits_for(cli: &Cli) -> Result<Limits> {
    let mut limits = Limits::from_env()?;
    if let Some(v) = cli.max_faces {
        limits.max_faces = v;
    }
    if let Some(v) = cli.max_flats {
        limits.max_flats = v;
    }
    if let Some(v) = cli.max_bases {
        limits.max_bases = v;
    }
    Ok(limits)
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let limits = limits_for(cli)?;
    let required = |input: &MatroidInput| -> Result<Matroid> {
        read_matroid(input.matroid.as_ref(), input.uniform)?.ok_or_else(|| {
            Error::InvalidArgument("one of --matroid or --uniform is required".into())
        })
    };
    match &cli.command {
        Command::Complex {
            kind,
            input,
            method,
        } => {
            let m = required(input)?;
            let (f, h, facets, used) = complex_polys(&m, *kind, *method, &limits)?;
            let mut report = Map::new();
            report.insert("kind".into(), json!(kind_name(*kind)));
            report.insert("matroid".into(), matroid_document(&m, &limits)?);
            report.insert("method".into(), json!(used));
            report.insert("f".into(), poly_json(&f));
            report.insert("h".into(), poly_json(&h));
            if let Some(count) = facets {
                report.insert("facets".into(), json!(s(count)));
            }
            Ok(Outcome {
                report: Value::Object(report),
                ok: true,
            })
        }
        Command::Ced { input } => {
            let m = required(input)?;
            let ced = build_ced(&m, &limits)?;
            let check = verify_ced(&ced.complex, &ced.ears, &limits)?;
            let ears: Vec<Value> = ced
                .ears
                .iter()
                .zip(&check.ears)
                .map(|(ear, c)| {
                    let mut e = Map::new();
                    e.insert("index".into(), json!(s(ear.index)));
                    e.insert(
                        "basis".into(),
                        json!(ear.basis.iter().map(|&x| s(x)).collect::<Vec<_>>()),
                    );
                    e.insert("nbc".into(), json!(ear.nbc));
                    e.insert("facets".into(), json!(s(ear.complex.facet_count())));
                    e.insert(
                        "kind".into(),
                        json!(if ear.kind == Manifold::Sphere {
                            "sphere"
                        } else {
                            "ball"
                        }),
                    );
                    e.insert("manifold_ok".into(), json!(c.manifold_ok));
                    e.insert("proper_subcomplex_ok".into(), json!(c.proper_subcomplex_ok));
                    e.insert("boundary_ok".into(), json!(c.boundary_ok));
                    e.insert("glued_matches_gamma".into(), json!(ear.glued_matches_gamma));
                    e.insert(
                        "gamma_order".into(),
                        match &ear.gamma_order {
                            None => Value::Null,
                            Some(Ok(_)) => json!("shelling"),
                            Some(Err(why)) => json!(why),
                        },
                    );
                    e.insert("failures".into(), json!(c.failures));
                    Value::Object(e)
                })
                .collect();
            let report = json!({
                "matroid": matroid_document(&m, &limits)?,
                "ear_count": s(ced.ears.len()),
                "facets": s(ced.complex.facet_count()),
                "union_ok": check.union_ok,
                "passed": check.passed(),
                "ears": ears,
            });
            Ok(Outcome {
                report,
                ok: check.passed(),
            })
        }
        Command::Chow { input, augmented } => {
            let m = required(input)?;
            let series = if *augmented {
                augmented_chow_hilbert(&m, &limits)?
            } else {
                chow_hilbert(&m, &limits)?
            };
            let report = json!({
                "matroid": matroid_document(&m, &limits)?,
                "augmented": augmented,
                "series": poly_json(&series.polynomial),
                "palindromic": series.is_palindromic(),
            });
            Ok(Outcome { report, ok: true })
        }
        Command::VerifyIdentities { thm, d, n } => {
            let mut checked = 0usize;
            let mut failures = Vec::new();
            for dd in d.clone() {
                for nn in n.clone().filter(|&nn| nn >= dd) {
                    let result = if thm == "5.1" {
                        if dd == 0 {
                            continue;
                        }
                        verify_thm51(dd, nn)?
                    } else {
                        verify_thm52(dd, nn)?
                    };
                    checked += 1;
                    if !result.holds {
                        failures.push(json!({"d": s(dd), "n": s(nn), "lhs": poly_json(&result.lhs), "rhs": poly_json(&result.rhs)}));
                    }
                }
            }
            let ok = failures.is_empty();
            let report =
                json!({"thm": thm, "checked": s(checked), "passed": ok, "failures": failures});
            Ok(Outcome { report, ok })
        }
        Command::Check {
            poly,
            input,
            kind,
            of,
            predicates,
            order,
            degree,
        } => {
            let (p, natural_degree, source) = match poly {
                Some(text) => {
                    let items: Vec<&str> = text
                        .split(',')
                        .map(str::trim)
                        .filter(|t| !t.is_empty())
                        .collect();
                    let p = Polynomial::from_decimal_strings(&items)?;
                    let deg = p.degree().unwrap_or(0);
                    (p, deg, Value::Null)
                }
                None => {
                    let m =
                        read_matroid(input.matroid.as_ref(), input.uniform)?.ok_or_else(|| {
                            Error::InvalidArgument(
                                "one of --poly, --matroid or --uniform is required".into(),
                            )
                        })?;
                    let (f, h, _, _) = complex_polys(&m, *kind, Method::Auto, &limits)?;
                    let p = if *of == Of::F { f } else { h };
                    let source = json!({"matroid": matroid_document(&m, &limits)?, "kind": kind_name(*kind), "of": if *of == Of::F { "f" } else { "h" }});
                    (p, complex_degree(&m, *kind), source)
                }
            };
            let degree = degree.unwrap_or(natural_degree);
            let mut results = Vec::new();
            let mut ok = true;
            for &name in predicates {
                let check = match name {
                    CheckName::Unimodal => Check::Unimodal,
                    CheckName::LogConcave => Check::LogConcave,
                    CheckName::NoInternalZeros => Check::NoInternalZeros,
                    CheckName::UltraLogConcave => Check::UltraLogConcave {
                        order: order.unwrap_or(p.degree().unwrap_or(0)),
                    },
                    CheckName::RealRooted => Check::RealRooted,
                    CheckName::TopHeavy => Check::TopHeavy { degree },
                    CheckName::TwoCmChain => Check::TwoCmChain { degree },
                };
                let verdict = evaluate(&p, check)?;
                ok &= !verdict.fails();
                let mut r = Map::new();
                r.insert(
                    "predicate".into(),
                    json!(name.to_possible_value().expect("named").get_name()),
                );
                r.insert("verdict".into(), json!(verdict.label()));
                if let Some(detail) = verdict.detail() {
                    r.insert("detail".into(), json!(detail));
                }
                if name == CheckName::RealRooted {
                    r.insert("distinct_real_roots".into(), json!(s(real_root_count(&p))));
                }
                results.push(Value::Object(r));
            }
            let report = json!({"polynomial": poly_json(&p), "source": source, "results": results});
            Ok(Outcome { report, ok })
        }
        Command::Scan { d, n, predicates } => {
            let rows = scan_uniform(d.clone(), n.clone(), predicates)?;
            let failures: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "d": s(r.d),
                        "n": s(r.n),
                        "predicate": r.predicate.to_string(),
                        "verdict": r.verdict.label(),
                        "detail": r.verdict.detail(),
                        "polynomial": poly_json(&r.polynomial),
                    })
                })
                .collect();
            let report = json!({
                "d": [s(d.start()), s(d.end())],
                "n": [s(n.start()), s(n.end())],
                "predicates": predicates.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "failures": failures,
            });
            // A scan is a search: finding failures is its output, not an error.
            Ok(Outcome { report, ok: true })
        }
    }
}

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::ElementOutOfRange { .. }
        | Error::InvalidMatroid(_)
        | Error::BasisExchange { .. }
        | Error::NotAFlat(_)
        | Error::NotABasis(_)
        | Error::DegreeExceeds { .. }
        | Error::NegativeCoefficient(_)
        | Error::OrderTooSmall { .. }
        | Error::IndexOutOfRange { .. }
        | Error::InvalidArgument(_)
        | Error::Parse(_)
        | Error::Json(_)
        | Error::Io(_) => EXIT_USAGE,
        _ => EXIT_VERIFICATION,
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&outcome.report).expect("serializable")
            );
            ExitCode::from(if outcome.ok {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            })
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
