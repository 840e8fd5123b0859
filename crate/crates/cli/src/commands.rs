//! One function per subcommand: parse a parameter map, evaluate, describe.

use irrmeasure::linforms::{arch_evaluate, padic_evaluate, ArchLinForm, BuHeight, Height, PadicLinForm};
use irrmeasure::measures::{best_bound_padic, best_bound_real, BestReport};
use irrmeasure::numerics::PosRational;
use irrmeasure::padic::hensel_nth_root;
use irrmeasure::report::{failed_names, BoundReport, TheoremId};
use irrmeasure::thue_mahler::{check_thm41, tm_search, TMInstance};
use irrmeasure::verify::{cf_expand, max_exponent, measure_exponents_padic, measure_exponents_real, ExponentSample};
use irrmeasure::Error;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::params::{self as pm, Params};
use crate::render::{self, table, upper};
use crate::{Command, Failure, Outcome, Settings, Status};

type Res = Result<Outcome, Failure>;

fn usage(message: String) -> Failure {
    Failure {
        kind: "invalid-input",
        message,
        status: Status::Usage,
    }
}

trait OrUsage<T> {
    fn usage(self) -> Result<T, Failure>;
}

impl<T> OrUsage<T> for Result<T, String> {
    fn usage(self) -> Result<T, Failure> {
        self.map_err(usage)
    }
}

pub(crate) fn execute(cmd: &Command, p: &Params, s: &Settings) -> Res {
    match cmd {
        Command::MeasureReal(_) => measure_real(p, s),
        Command::MeasurePadic(_) => measure_padic(p, s),
        Command::Hensel(_) => hensel(p),
        Command::LinformArch(_) => linform_arch(p, s),
        Command::LinformPadic(_) => linform_padic(p, s),
        Command::CfVerify(_) => cf_verify(p, s),
        Command::PadicVerify(_) => padic_verify(p, s),
        Command::TmCheck(_) => tm_check(p, s),
        Command::TmSearch(_) => tm_run(p, s),
    }
}

/// An applicable row with a numeric bound, other than Liouville's.
fn is_theorem_bound(r: &BoundReport) -> bool {
    r.applicable && r.bound.is_some() && r.theorem != TheoremId::Liouville
}

/// The smallest applicable theorem bound, Liouville's excluded.
fn best_theorem(best: &BestReport) -> Option<&BoundReport> {
    best.reports
        .iter()
        .filter(|r| is_theorem_bound(r))
        .min_by(|x, y| x.bound.as_ref().unwrap().hi().cmp(y.bound.as_ref().unwrap().hi()))
}

fn best_outcome(best: BestReport, ledger: bool) -> Outcome {
    let status = if best.reports.iter().any(is_theorem_bound) {
        Status::Ok
    } else {
        Status::Inapplicable
    };
    let result = json!({
        "degree": best.degree.to_string(),
        "reports": best.reports.iter().map(|r| render::report(r, ledger)).collect::<Vec<_>>(),
        "best_theorem": best.best_theorem.map(|t| t.as_str()),
        "best": render::opt_interval(best.best.as_ref()),
    });
    let mut text = render::report_rows(&best.reports, ledger);
    text.push_str(&format!(
        "best: {} ({}), degree {}\n",
        best.best.as_ref().map(upper).unwrap_or_else(|| "-".into()),
        best.best_theorem.map(|t| t.as_str()).unwrap_or("none"),
        best.degree
    ));
    Outcome { result, table: text, status }
}

fn measure_real(p: &Params, s: &Settings) -> Res {
    let (a, b, n) = (pm::uint(p, "a").usage()?, pm::uint(p, "b").usage()?, pm::uint(p, "n").usage()?);
    Ok(best_outcome(best_bound_real(&a, &b, &n, s.precision)?, s.ledger))
}

fn measure_padic(p: &Params, s: &Settings) -> Res {
    let (a, b) = (pm::uint(p, "a").usage()?, pm::uint(p, "b").usage()?);
    let (prime, n) = (pm::small(p, "p").usage()?, pm::uint(p, "n").usage()?);
    Ok(best_outcome(best_bound_padic(&a, &b, prime, &n, s.precision)?, s.ledger))
}

fn hensel(p: &Params) -> Res {
    let (a, b) = (pm::int(p, "a").usage()?, pm::int(p, "b").usage()?);
    let (prime, n) = (pm::small(p, "p").usage()?, pm::small(p, "n").usage()?);
    let k = u32::try_from(pm::small(p, "k").usage()?).map_err(|_| usage("--k is too large".into()))?;
    match hensel_nth_root(&a, &b, prime, n, k) {
        Ok(r) => {
            let result = json!({
                "applicable": true,
                "p": prime.to_string(),
                "k": k.to_string(),
                "residue": r.residue.to_string(),
                "modulus": r.modulus().to_string(),
            });
            let text = table(&[
                vec!["residue".into(), r.residue.to_string()],
                vec!["modulus".into(), format!("{prime}^{k}")],
            ]);
            Ok(Outcome {
                result,
                table: text,
                status: Status::Ok,
            })
        }
        Err(Error::Inapplicable(why)) => Ok(Outcome {
            result: json!({"applicable": false, "failed_conditions": [why]}),
            table: format!("inapplicable: {why}\n"),
            status: Status::Inapplicable,
        }),
        Err(e) => Err(e.into()),
    }
}

fn height(s: Option<&str>, default: Height) -> Result<Height, Failure> {
    match s {
        None => Ok(default),
        Some("e") => Ok(Height::Euler),
        Some(t) => t.parse::<PosRational>().map(Height::Value).map_err(|e| usage(e.to_string())),
    }
}

fn bu_height(s: Option<&str>) -> Result<BuHeight, Failure> {
    match s {
        None => Ok(BuHeight::Minimal),
        Some(t) => t.parse::<PosRational>().map(BuHeight::Value).map_err(|e| usage(e.to_string())),
    }
}

fn linform_arch(p: &Params, s: &Settings) -> Res {
    let g = |k: &str| pm::uint(p, k).usage();
    let (a1, a2, b1, b2, u, v) = (g("a1")?, g("a2")?, g("b1")?, g("b2")?, g("u")?, g("v")?);
    let ha = height(pm::opt_raw(p, "height_a"), Height::minimal(&a1))?;
    let hb = height(pm::opt_raw(p, "height_b"), Height::minimal(&b1))?;
    let form = ArchLinForm::new(a1, a2, b1, b2, u, v, ha, hb)?;
    let r = arch_evaluate(&form, s.precision)?;
    let mut result = serde_json::to_value(&r).expect("reports serialize");
    result["failed_conditions"] = json!(failed_names(&r.conditions));
    if !s.ledger {
        result.as_object_mut().expect("object").remove("conditions");
    }
    let mut rows = vec![vec!["applicable".to_string(), r.applicable.to_string()]];
    if let Some(d) = &r.derived {
        rows.push(vec!["E".into(), format!("{}", d.e)]);
    }
    for (name, b) in [("bound_51 (lower)", &r.bound_51), ("bound_52 (lower)", &r.bound_52)] {
        rows.push(vec![name.into(), b.as_ref().map(render::lower).unwrap_or_else(|| "-".into())]);
    }
    rows.push(vec!["stronger".into(), r.stronger.unwrap_or("-").into()]);
    let failed = failed_names(&r.conditions);
    if !failed.is_empty() {
        rows.push(vec!["failed".into(), failed.join("; ")]);
    }
    if s.ledger {
        rows.extend(render::condition_rows(&r.conditions));
    }
    Ok(Outcome {
        result,
        table: table(&rows),
        status: if r.applicable { Status::Ok } else { Status::Inapplicable },
    })
}

fn linform_padic(p: &Params, s: &Settings) -> Res {
    let g = |k: &str| pm::int(p, k).usage();
    let (x1, y1, x2, y2) = (g("x1")?, g("y1")?, g("x2")?, g("y2")?);
    let b = pm::uint(p, "b").usage()?;
    let prime = pm::small(p, "p").usage()?;
    let e = pm::rational(p, "e").usage()?;
    let a1 = bu_height(pm::opt_raw(p, "height_1"))?;
    let a2 = bu_height(pm::opt_raw(p, "height_2"))?;
    let form = PadicLinForm::new(x1, y1, x2, y2, b, prime, e, a1, a2)?;
    let r = padic_evaluate(&form, s.precision)?;
    let mut result = serde_json::to_value(&r).expect("reports serialize");
    result["failed_conditions"] = json!(failed_names(&r.conditions));
    if !s.ledger {
        result.as_object_mut().expect("object").remove("conditions");
    }
    let mut rows = vec![
        vec!["applicable".to_string(), r.applicable.to_string()],
        vec!["bound (upper)".into(), r.bound.as_ref().map(upper).unwrap_or_else(|| "-".into())],
    ];
    if let Some(d) = &r.derived {
        rows.push(vec!["max branch".into(), d.branch.into()]);
    }
    let failed = failed_names(&r.conditions);
    if !failed.is_empty() {
        rows.push(vec!["failed".into(), failed.join("; ")]);
    }
    if s.ledger {
        rows.extend(render::condition_rows(&r.conditions));
    }
    Ok(Outcome {
        result,
        table: table(&rows),
        status: if r.applicable { Status::Ok } else { Status::Inapplicable },
    })
}

fn sample_json(x: &ExponentSample) -> Value {
    let mut v = json!({
        "x": x.x.to_string(),
        "y": x.y.to_string(),
        "exponent": render::interval(&x.exponent),
    });
    if let Some(val) = x.valuation {
        v["valuation"] = json!(val.to_string());
    }
    v
}

/// Compares the largest sample with the best applicable theorem bound.
fn exponent_check(samples: &[ExponentSample], best: &BestReport) -> (Value, Vec<Vec<String>>) {
    let top = max_exponent(samples);
    let thm = best_theorem(best);
    let below = match (top, thm) {
        (Some(t), Some(r)) => Some(t.exponent.hi() < r.bound.as_ref().expect("has bound").hi()),
        _ => None,
    };
    let value = json!({
        "max": top.map(sample_json),
        "theorem": thm.map(|r| r.theorem.as_str()),
        "theorem_bound": render::opt_interval(thm.and_then(|r| r.bound.as_ref())),
        "below_bound": below,
    });
    let mut rows = Vec::new();
    if let Some(t) = top {
        rows.push(vec![
            "max exponent".into(),
            format!("{} at {}/{}", upper(&t.exponent), t.x, t.y),
        ]);
    }
    if let Some(r) = thm {
        rows.push(vec![
            format!("{} bound", r.theorem),
            upper(r.bound.as_ref().expect("has bound")),
        ]);
    }
    if let Some(b) = below {
        rows.push(vec!["max below bound".into(), b.to_string()]);
    }
    (value, rows)
}

fn cf_verify(p: &Params, s: &Settings) -> Res {
    let (a, b) = (pm::uint(p, "a").usage()?, pm::uint(p, "b").usage()?);
    let n = u32::try_from(pm::small(p, "n").usage()?).map_err(|_| usage("--n is too large".into()))?;
    let count = pm::small_or(p, "count", 20).usage()? as usize;
    let cf = cf_expand(&a, &b, n, count)?;
    let complete = cf.certified_count == count;
    let mut result = json!({
        "quotients": cf.quotients.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
        "requested": count.to_string(),
        "certified_count": cf.certified_count.to_string(),
    });
    let mut rows = vec![vec![
        "quotients".to_string(),
        format!("[{}]", cf.quotients.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ")),
    ]];
    if complete {
        let samples = measure_exponents_real(&a, &b, n, count, s.precision)?;
        let best = best_bound_real(&a, &b, &BigUint::from(n), s.precision)?;
        let (check, extra) = exponent_check(&samples, &best);
        result["samples"] = samples.iter().map(sample_json).collect();
        result["check"] = check;
        rows.extend(extra);
    } else {
        rows.push(vec!["certified".into(), format!("{} of {count}", cf.certified_count)]);
    }
    Ok(Outcome {
        result,
        table: table(&rows),
        status: if complete { Status::Ok } else { Status::Indeterminate },
    })
}

fn padic_verify(p: &Params, s: &Settings) -> Res {
    let (a, b) = (pm::uint(p, "a").usage()?, pm::uint(p, "b").usage()?);
    let (prime, n) = (pm::small(p, "p").usage()?, pm::small(p, "n").usage()?);
    let h = pm::small(p, "max_height").usage()?;
    let samples = measure_exponents_padic(&a, &b, prime, n, h, s.precision)?;
    let best = best_bound_padic(&a, &b, prime, &BigUint::from(n), s.precision)?;
    let (check, mut rows) = exponent_check(&samples, &best);
    rows.insert(0, vec!["samples".into(), samples.len().to_string()]);
    let result = json!({
        "samples": samples.iter().map(sample_json).collect::<Vec<_>>(),
        "check": check,
    });
    Ok(Outcome {
        result,
        table: table(&rows),
        status: Status::Ok,
    })
}

fn instance(p: &Params, need_x: bool) -> Result<TMInstance, Failure> {
    let b = pm::uint(p, "b").usage()?;
    let c = pm::uint(p, "c").usage()?;
    let d: BigInt = pm::int(p, "d").usage()?;
    let n = pm::small(p, "n").usage()?;
    let primes = pm::list(p, "primes").usage()?;
    let eta = pm::rational(p, "eta").usage()?;
    let limit_x = if need_x {
        pm::small(p, "limit_x").usage()?
    } else {
        pm::small_or(p, "limit_x", 1).usage()?
    };
    let limit_z = pm::opt_small(p, "limit_z").usage()?;
    Ok(TMInstance::new(b, c, d, n, primes, eta, limit_x, limit_z)?)
}

fn tm_check(p: &Params, _s: &Settings) -> Res {
    let inst = instance(p, false)?;
    let conds = check_thm41(&inst)?;
    let failed = failed_names(&conds);
    let result = json!({
        "applicable": failed.is_empty(),
        "failed_conditions": failed,
        "conditions": render::conditions(&conds),
    });
    let mut rows = vec![vec!["condition".to_string(), "status".to_string(), "detail".to_string()]];
    rows.extend(render::condition_rows(&conds));
    Ok(Outcome {
        result,
        table: table(&rows),
        status: if failed.is_empty() { Status::Ok } else { Status::Inapplicable },
    })
}

fn tm_run(p: &Params, s: &Settings) -> Res {
    let inst = instance(p, true)?;
    let conds = check_thm41(&inst)?;
    let found = tm_search(&inst)?;
    let small = found
        .solutions
        .iter()
        .chain(&found.degenerate)
        .all(|x| (&x.x * &x.y).abs() <= BigInt::one());
    let sol = |v: &[irrmeasure::thue_mahler::TMSolution]| -> Value {
        v.iter()
            .map(|x| {
                json!({
                    "x": x.x.to_string(),
                    "y": x.y.to_string(),
                    "z": x.z.iter().map(|z| z.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect()
    };
    let mut result = json!({
        "solutions": sol(&found.solutions),
        "degenerate": sol(&found.degenerate),
        "all_xy_at_most_1": small,
        "hypotheses_hold": failed_names(&conds).is_empty(),
        "failed_conditions": failed_names(&conds),
    });
    if s.ledger {
        result["conditions"] = render::conditions(&conds);
    }
    let mut rows = vec![vec!["x".to_string(), "y".to_string(), "z".to_string(), "kind".to_string()]];
    for (list, kind) in [(&found.solutions, "solution"), (&found.degenerate, "degenerate")] {
        for x in list.iter() {
            let z = x.z.iter().map(|z| z.to_string()).collect::<Vec<_>>().join(",");
            rows.push(vec![x.x.to_string(), x.y.to_string(), format!("[{z}]"), kind.to_string()]);
        }
    }
    let mut text = table(&rows);
    text.push_str(&format!("all |xy| <= 1: {small}\n"));
    if s.ledger {
        text.push_str(&table(&render::condition_rows(&conds)));
    }
    Ok(Outcome {
        result,
        table: text,
        status: Status::Ok,
    })
}

