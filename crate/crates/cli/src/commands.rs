use std::fs;

use rug::Rational;
use serde::Deserialize;
use serde_json::{json, Value};
use supergroup::conjecture::{
    character_expansion_check, lr_sweep, theorem_c_checks, verify_conjecture, ConjectureParams,
};
use supergroup::error::Error;
use supergroup::integrals::{bk_closed_form, ls_closed_form, SuperEigenvalues};
use supergroup::precision::Precision;
use supergroup::rng::Sampler;
use supergroup::selftest::{brute_force_comparison, run_selftest};

use crate::args::{Command, InputArgs};

/// Largest `|p| + |q|` accepted by `lr-check`.
pub const LR_BOX_CAP: usize = 10;

#[derive(Debug)]
pub enum Failure {
    /// Bad flags, unreadable or malformed input.
    Usage(String),
    /// A series or determinant could not be evaluated reliably.
    Numerical(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Numerical(_) => 3,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "input error: {m}"),
            Failure::Numerical(m) => write!(f, "numerical failure: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TruncationCapExceeded { .. } | Error::DegenerateArguments { .. } => Failure::Numerical(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

pub struct Outcome {
    pub pass: bool,
    pub arguments: Value,
    pub result: Value,
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn read_input<T: for<'de> Deserialize<'de>>(args: &InputArgs) -> Result<T, Failure> {
    let text = match (&args.input, &args.json) {
        (Some(path), _) => {
            fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?
        }
        (None, Some(inline)) => inline.clone(),
        (None, None) => return Err(Failure::Usage("give --input FILE or --json TEXT".into())),
    };
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("malformed input: {e}")))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BkInput {
    lambda: SuperEigenvalues,
    mu: SuperEigenvalues,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RationalSet {
    bosonic: Vec<String>,
    fermionic: Vec<String>,
}

fn parse_rationals(values: &[String]) -> Result<Vec<Rational>, Failure> {
    values
        .iter()
        .map(|s| s.trim().parse::<Rational>().map_err(|e| Failure::Usage(format!("bad rational {s:?}: {e}"))))
        .collect()
}

pub fn execute(command: &Command, prec: &Precision, seed: u64) -> Result<Outcome, Failure> {
    match command {
        Command::LsEval(input) => {
            let ev: SuperEigenvalues = read_input(input)?;
            let r = ls_closed_form(&ev, prec)?;
            Ok(Outcome { pass: true, arguments: to_value(&ev), result: to_value(&r) })
        }
        Command::BkEval(input) => {
            let inp: BkInput = read_input(input)?;
            let r = bk_closed_form(&inp.lambda, &inp.mu, prec)?;
            Ok(Outcome {
                pass: true,
                arguments: json!({ "lambda": to_value(&inp.lambda), "mu": to_value(&inp.mu) }),
                result: to_value(&r),
            })
        }
        &Command::ConjectureVerify { n, m, samples, radius, depth, max_n } => {
            let ms: Vec<usize> = match m {
                Some(m) => vec![m],
                None => (1..=n).collect(),
            };
            let mut reports = Vec::new();
            for m in ms {
                let params = ConjectureParams { n, m, samples, radius, seed, truncation_depth: depth, max_n };
                reports.push(verify_conjecture(&params, prec)?);
            }
            Ok(Outcome {
                pass: reports.iter().all(|r| r.pass),
                arguments: json!({ "N": n, "m": m, "samples": samples, "radius": radius, "depth": depth, "max_n": max_n }),
                result: to_value(&reports),
            })
        }
        &Command::LrCheck { m, n, max_boxes } => {
            if max_boxes > LR_BOX_CAP {
                return Err(Failure::Usage(format!("--max-boxes must be at most {LR_BOX_CAP}")));
            }
            let checks = lr_sweep(m, n, max_boxes)?;
            Ok(Outcome {
                pass: checks.iter().all(|c| c.holds),
                arguments: json!({ "m": m, "n": n, "max_boxes": max_boxes }),
                result: json!({ "pairs": checks.len(), "checks": to_value(&checks) }),
            })
        }
        Command::StrninxiCheck { m, n, max_boxes, input } => {
            let (m, n, max_boxes) = (*m, *n, *max_boxes);
            if m > 2 || n > 2 || m + n == 0 || max_boxes > 6 {
                return Err(Failure::Usage("need m, n <= 2 (not both zero) and --max-boxes <= 6".into()));
            }
            let (bos, ferm) = if input.input.is_some() || input.json.is_some() {
                let set: RationalSet = read_input(input)?;
                (parse_rationals(&set.bosonic)?, parse_rationals(&set.fermionic)?)
            } else {
                let mut s = Sampler::new(seed, 0);
                let draw = |s: &mut Sampler, k: usize| (0..k).map(|_| s.nonzero_rational(1, 32)).collect::<Vec<_>>();
                let bos = draw(&mut s, m);
                (bos, draw(&mut s, n))
            };
            if bos.len() != m || ferm.len() != n {
                return Err(Failure::Usage(format!("expected {m} bosonic and {n} fermionic values")));
            }
            let checks = character_expansion_check(&bos, &ferm, max_boxes)?;
            let show = |v: &[Rational]| v.iter().map(Rational::to_string).collect::<Vec<_>>();
            Ok(Outcome {
                pass: checks.iter().all(|c| c.holds),
                arguments: json!({ "m": m, "n": n, "max_boxes": max_boxes, "bosonic": show(&bos), "fermionic": show(&ferm) }),
                result: to_value(&checks),
            })
        }
        &Command::BruteForceVerify { m, n, samples } => {
            if !matches!((m, n), (1, 1) | (2, 1)) {
                return Err(Failure::Usage("brute-force integration supports (1|1) and (2|1)".into()));
            }
            let r = brute_force_comparison(m, n, samples, seed, prec)?;
            Ok(Outcome {
                pass: r.pass,
                arguments: json!({ "m": m, "n": n, "samples": samples }),
                result: to_value(&r),
            })
        }
        &Command::TheoremsCheck { n } => {
            let ns: Vec<usize> = n.map_or_else(|| (1..=6).collect(), |n| vec![n]);
            let reports = ns.into_iter().map(|n| theorem_c_checks(n, seed)).collect::<Result<Vec<_>, _>>()?;
            Ok(Outcome {
                pass: reports.iter().all(|r| r.pass()),
                arguments: json!({ "N": n }),
                result: to_value(&reports),
            })
        }
        Command::Selftest => {
            let report = run_selftest(seed, prec)?;
            for c in &report.criteria {
                eprintln!("{:>3}  {:<4}  {:<32} {}", c.id, if c.pass { "pass" } else { "FAIL" }, c.name, c.detail);
            }
            Ok(Outcome { pass: report.pass, arguments: json!({}), result: to_value(&report) })
        }
    }
}
