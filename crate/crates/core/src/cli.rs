//! Command dispatch for the `cyclord` binary.
//!
//! Exit codes: `0` success or the property holds, `1` the property fails or
//! a precondition of the computation does not hold, `2` usage, parse or
//! resource-cap errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::correspondence::{
    chain_from_co, co_from_chain, group_iso, mv_iso, pco_iso, round_trip, unit_vector,
    DEFAULT_ISO_CAP,
};
use crate::error::Error;
use crate::io::{load_structure, parse_structure, serialize_structure, Structure};
use crate::model_check::{co_predicates, eq_invariants, pseudo_classify, Bounds, Subject};
use crate::mv::DEFAULT_MAX_WIDTH;
use crate::pco::{canonical_mv, check_ac_class, good_seq_formulas, is_lco, LatticeQuotientPco, Unwound, DEFAULT_FORMULA_CAP};

pub const MAX_SIZE_ENV: &str = "CYCLORD_MAX_SIZE";

#[derive(Parser, Debug)]
#[command(name = "cyclord", version, about = "MV-algebras and cyclically ordered groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a structure file from a generator.
    Make(MakeArgs),
    /// Run an axiom, class or predicate suite on a structure.
    Check(CheckArgs),
    /// Apply a translation between structures.
    Convert(ConvertArgs),
    /// Search for an isomorphism between two structures.
    Iso(IsoArgs),
    /// Print the invariant vector of a structure.
    Report(ReportArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("gen").required(true).args(["gamma", "cyclic", "wound", "product"])))]
struct MakeArgs {
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    gamma: Option<Vec<i64>>,
    #[arg(long)]
    cyclic: Option<usize>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    wound: Option<Vec<i64>>,
    #[arg(long, num_args = 1..)]
    product: Option<Vec<PathBuf>>,
    /// mv, pco or co; defaults to the generator's natural kind.
    #[arg(long)]
    kind: Option<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("suite").required(true).args([
    "mv_axioms", "pco_axioms", "ac_class", "predicates", "lco", "formulas", "round_trip", "classify",
])))]
struct CheckArgs {
    #[arg(long)]
    mv_axioms: bool,
    #[arg(long)]
    pco_axioms: bool,
    #[arg(long)]
    ac_class: bool,
    #[arg(long)]
    predicates: bool,
    #[arg(long)]
    lco: bool,
    /// Evaluate the good-sequence formula families of length N.
    #[arg(long, value_name = "N")]
    formulas: Option<usize>,
    #[arg(long)]
    round_trip: bool,
    #[arg(long)]
    classify: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_WIDTH)]
    max_width: usize,
    file: PathBuf,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("map").required(true).args([
    "co_from_chain", "chain_from_co", "canonical_mv", "wound_round", "unwound",
])))]
struct ConvertArgs {
    #[arg(long)]
    co_from_chain: bool,
    #[arg(long)]
    chain_from_co: bool,
    #[arg(long)]
    canonical_mv: bool,
    #[arg(long)]
    wound_round: bool,
    #[arg(long)]
    unwound: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_WIDTH)]
    max_width: usize,
    file: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct IsoArgs {
    first: PathBuf,
    second: PathBuf,
    /// Compare underlying groups only.
    #[arg(long)]
    group: bool,
    #[arg(long)]
    max_size: Option<usize>,
}

#[derive(Args, Debug)]
struct ReportArgs {
    file: PathBuf,
    #[arg(long, default_value_t = crate::model_check::DEFAULT_Q_MAX)]
    q_max: u64,
    #[arg(long, default_value_t = crate::model_check::DEFAULT_P_MAX)]
    p_max: u64,
    #[arg(long)]
    classify: bool,
}

/// Failure of a command with its exit code.
struct Failure {
    code: i32,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Schema { .. } | Error::Io(_) | Error::SizeCap { .. } => 2,
            _ => 1,
        };
        Failure { code, msg: e.to_string() }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Make(a) => make(a, out),
        Command::Check(a) => check(a, out),
        Command::Convert(a) => convert(a, out),
        Command::Iso(a) => iso(a, out),
        Command::Report(a) => report(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, v: &T) -> std::result::Result<(), Failure> {
    let text = serde_json::to_string_pretty(v).map_err(|e| usage(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| usage(e.to_string()))
}

fn write_structure(s: &Structure, output: Option<&Path>, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let text = serialize_structure(s);
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| usage(e.to_string())),
    }
}

fn make(a: MakeArgs, out: &mut dyn Write) -> Outcome {
    let (natural, key, value) = if let Some(u) = a.gamma {
        ("mv", "gamma", json!(u))
    } else if let Some(n) = a.cyclic {
        ("co", "cyclic", json!(n))
    } else if let Some(u) = a.wound {
        ("pco", "wound", json!(u))
    } else {
        let files = a.product.unwrap_or_default();
        let first = files.first().ok_or_else(|| usage("--product needs files"))?;
        let kind = load_structure(first)?.kind().name();
        let refs: Vec<Value> = files
            .iter()
            .map(|f| std::path::absolute(f).map(|p| json!(p.to_string_lossy())))
            .collect::<std::io::Result<_>>()
            .map_err(|e| usage(e.to_string()))?;
        (kind, "product", Value::Array(refs))
    };
    let kind = a.kind.as_deref().unwrap_or(natural);
    let doc = json!({ "kind": kind, key: value });
    let s = parse_structure(doc.to_string().as_bytes())?;
    write_structure(&s, a.output.as_deref(), out)?;
    Ok(0)
}

fn holds(b: bool) -> i32 {
    if b {
        0
    } else {
        1
    }
}

fn finite_pco_of(s: &Structure) -> std::result::Result<crate::pco::FinitePco, Failure> {
    s.finite_pco()?
        .ok_or_else(|| usage(format!("expected a finite p.c.o. group, found kind {}", s.kind().name())))
}

fn check(a: CheckArgs, out: &mut dyn Write) -> Outcome {
    let s = load_structure(&a.file)?;
    let wrong = |want: &str| usage(format!("this check needs kind {want}, found {}", s.kind().name()));
    if a.mv_axioms {
        let Structure::Mv(m) = &s else { return Err(wrong("mv")) };
        let r = m.check_axioms();
        emit_json(out, &r.verdicts)?;
        return Ok(holds(r.holds()));
    }
    if a.pco_axioms {
        let c = finite_pco_of(&s)?;
        let r = c.check_axioms();
        emit_json(out, &json!({ "verdicts": r.verdicts, "linear": r.linear, "is_co": r.is_co() }))?;
        return Ok(holds(r.holds()));
    }
    if a.ac_class {
        let r = match &s {
            Structure::Wound(w) => check_ac_class(w),
            Structure::Mv(_) => return Err(wrong("pco or co")),
            _ => check_ac_class(&finite_pco_of(&s)?),
        };
        emit_json(out, &r)?;
        return Ok(holds(r.holds()));
    }
    if a.predicates {
        match &s {
            Structure::Mv(m) => {
                emit_json(out, &json!({ "shape": m.shape_classify().ok(), "algebra": m.algebra_predicates() }))?;
            }
            _ => emit_json(out, &co_predicates(&finite_pco_of(&s)?)?)?,
        }
        return Ok(0);
    }
    if a.lco {
        let b = match &s {
            Structure::Wound(w) => is_lco(w),
            Structure::Mv(_) => return Err(wrong("pco or co")),
            _ => is_lco(&finite_pco_of(&s)?),
        };
        emit_json(out, &json!({ "lco": b }))?;
        return Ok(holds(b));
    }
    if let Some(n) = a.formulas {
        let b = match &s {
            Structure::Wound(w) => good_seq_formulas(w, n, DEFAULT_FORMULA_CAP)?,
            Structure::Mv(_) => return Err(wrong("pco or co")),
            _ => good_seq_formulas(&finite_pco_of(&s)?, n, DEFAULT_FORMULA_CAP)?,
        };
        emit_json(out, &json!({ "length": n, "holds": b }))?;
        return Ok(holds(b));
    }
    let Structure::Mv(m) = &s else { return Err(wrong("mv")) };
    if a.round_trip {
        let r = round_trip(m, iso_cap(None)?)?;
        emit_json(out, &r)?;
        return Ok(holds(r.holds()));
    }
    let r = pseudo_classify(m, a.max_width)?;
    emit_json(out, &r)?;
    Ok(holds(r.chain.satisfied || r.product.satisfied))
}

fn convert(a: ConvertArgs, out: &mut dyn Write) -> Outcome {
    let s = load_structure(&a.file)?;
    let wrong = |want: &str| usage(format!("this conversion needs kind {want}, found {}", s.kind().name()));
    let result = if a.co_from_chain {
        let Structure::Mv(m) = &s else { return Err(wrong("mv")) };
        Structure::Co(co_from_chain(m)?)
    } else if a.chain_from_co {
        Structure::Mv(chain_from_co(&finite_pco_of(&s)?)?)
    } else if a.canonical_mv {
        match &s {
            Structure::Wound(w) => Structure::Mv(canonical_mv(w)?.0),
            Structure::Mv(_) => return Err(wrong("pco or co")),
            _ => Structure::Mv(canonical_mv(&finite_pco_of(&s)?)?.0),
        }
    } else if a.wound_round {
        let Structure::Mv(m) = &s else { return Err(wrong("mv")) };
        Structure::Wound(LatticeQuotientPco::wound_round(&unit_vector(m, a.max_width)?)?)
    } else {
        let c = finite_pco_of(&s)?;
        let uw = Unwound::new(&c)?;
        let n = c.size();
        let carry: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| uw.carries(x, y)).collect()).collect();
        let u = uw.unit();
        let doc = json!({ "unit": [u.n, u.c], "size": n, "carry": carry });
        let text = format!("{doc}\n");
        match a.output.as_deref() {
            Some(p) => std::fs::write(p, text).map_err(|e| usage(e.to_string()))?,
            None => out.write_all(text.as_bytes()).map_err(|e| usage(e.to_string()))?,
        }
        return Ok(0);
    };
    write_structure(&result, a.output.as_deref(), out)?;
    Ok(0)
}

/// The iso cap: the flag, else `CYCLORD_MAX_SIZE`, else the default.
fn iso_cap(flag: Option<usize>) -> std::result::Result<usize, Failure> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(MAX_SIZE_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{MAX_SIZE_ENV} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_ISO_CAP),
    }
}

fn iso(a: IsoArgs, out: &mut dyn Write) -> Outcome {
    let cap = iso_cap(a.max_size)?;
    let s = load_structure(&a.first)?;
    let t = load_structure(&a.second)?;
    let witness = match (&s, &t) {
        (Structure::Mv(x), Structure::Mv(y)) => mv_iso(x, y, cap)?,
        (Structure::Mv(_), _) | (_, Structure::Mv(_)) => {
            return Err(usage("cannot compare an MV-algebra with a p.c.o. group"))
        }
        _ => {
            let (x, y) = (finite_pco_of(&s)?, finite_pco_of(&t)?);
            if a.group {
                group_iso(&x, &y, cap)?
            } else {
                pco_iso(&x, &y, cap)?
            }
        }
    };
    emit_json(out, &json!({ "isomorphic": witness.is_some(), "witness": witness }))?;
    Ok(holds(witness.is_some()))
}

fn report(a: ReportArgs, out: &mut dyn Write) -> Outcome {
    let s = load_structure(&a.file)?;
    let bounds = Bounds { q_max: a.q_max, p_max: a.p_max };
    let v = match &s {
        Structure::Mv(m) => {
            let inv = eq_invariants(Subject::Mv(m), bounds)?;
            if a.classify {
                json!({ "invariants": inv, "classification": pseudo_classify(m, DEFAULT_MAX_WIDTH)? })
            } else {
                json!({ "invariants": inv })
            }
        }
        _ => json!({ "invariants": eq_invariants(Subject::Pco(&finite_pco_of(&s)?), bounds)? }),
    };
    emit_json(out, &v)?;
    Ok(0)
}
