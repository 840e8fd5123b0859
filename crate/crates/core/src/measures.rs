//! Effective irrationality-measure bounds for `(a/b)^(1/n)`, real and p-adic.
//!
//! Hypotheses with an integer form are decided in integers. Bounds are intervals
//! whose `hi` endpoint is the certified value.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::arith::{exact_root, power_exponent, vp_uint};
use crate::error::{invalid, Result};
use crate::numerics::{
    compare_powers, eta_bm, eta_padic, eta_real, int, ln_interval, over_eta, BoundedReal, EtaValue, PosRational,
};
use crate::padic::check_prime;
use crate::report::{BoundReport, Condition, TheoremId};

fn ratio(a: &BigUint, b: &BigUint) -> Result<PosRational> {
    PosRational::new(a.clone(), b.clone())
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn dec(tenths: i64) -> BigRational {
    BigRational::new(BigInt::from(tenths), BigInt::from(10))
}

fn ln_big(n: &BigUint, prec: u32) -> BoundedReal {
    ln_interval(&int(n), prec)
}

/// Degree of the real root `(a/b)^(1/n)` over the rationals.
///
/// For positive `q = t^K` with `K` maximal, `X^n - q` has the real root `t^(K/n)`
/// of degree `n / gcd(K, n)` (irreducibility of `X^m - t` for positive `t` that is
/// not a perfect power).
pub fn real_root_degree(a: &BigUint, b: &BigUint, n: &BigUint) -> Result<BigUint> {
    if n.is_zero() {
        return Err(invalid("n must be positive"));
    }
    let q = ratio(a, b)?;
    Ok(match power_exponent(&q) {
        None => BigUint::one(),
        Some(k) => n / big(k).gcd(n),
    })
}

/// Whether `X^n - a/b` is irreducible over the rationals.
///
/// The classical criterion asks that `a/b` is no `l`-th power for a prime `l | n`,
/// and that `a/b` is not of the form `-4 t^4` when `4 | n`; the second clause is
/// void for positive `a/b`.
pub fn degree_check(a: &BigUint, b: &BigUint, n: &BigUint) -> Result<bool> {
    Ok(real_root_degree(a, b, n)? == *n)
}

/// Whether the p-adic root `ζ ≡ 1 (mod p)` of `b X^n - a` is rational.
pub fn padic_root_rational(a: &BigUint, b: &BigUint, p: u64, n: &BigUint) -> Result<bool> {
    let q = ratio(a, b)?;
    let root = |m: &BigUint| match u32::try_from(n) {
        Ok(k) if k > 0 => exact_root(m, k),
        // an integer above 1 has fewer bits than such an n
        _ => m.is_one().then(BigUint::one),
    };
    let (Some(x), Some(y)) = (root(q.num()), root(q.den())) else {
        return Ok(false);
    };
    let (x, y) = (BigInt::from(x), BigInt::from(y));
    let pp = BigInt::from(p);
    let one_mod_p = |x: &BigInt| (x - &y).mod_floor(&pp).is_zero();
    Ok(one_mod_p(&x) || (n.is_even() && one_mod_p(&-x.clone())))
}

/// Liouville's bound: a degree-`n` algebraic number has effective measure at most `n`.
pub fn liouville(n: &BigUint) -> Result<BoundReport> {
    if *n < big(2) {
        return Err(invalid("Liouville's bound needs degree >= 2"));
    }
    Ok(BoundReport::assemble(
        TheoremId::Liouville,
        vec![Condition::check("degree >= 2", true)],
        None,
        Some(BoundedReal::from_biguint(n)),
        n.clone(),
    ))
}

fn liouville_row(degree: &BigUint) -> BoundReport {
    let irrational = *degree >= big(2);
    let conds = vec![Condition::check("root irrational", irrational)];
    let bound = irrational.then(|| BoundedReal::from_biguint(degree));
    BoundReport::assemble(TheoremId::Liouville, conds, None, bound, degree.clone())
}

/// The classical bound `2/η + 6 (n^5 log n / log b)^(1/3)` with `η = 1 - log|a-b| / log b`.
pub fn bound_bm(a: &BigUint, b: &BigUint, n: &BigUint, prec: u32) -> Result<BoundReport> {
    let degree = real_root_degree(a, b, n)?;
    let b_ok = *b >= big(2);
    let n3 = *n >= big(3);
    let mut conds = vec![
        Condition::check("b >= 2", b_ok),
        Condition::check("n >= 3", n3),
        Condition::check("root has degree n", degree == *n),
    ];
    let eta = if b_ok && a != b { Some(eta_bm(a, b, prec)?) } else { None };
    // n > 2/η  <=>  b^(n-2) > |a-b|^n, which also forces η > 0
    let n_large = match (&eta, n3) {
        (Some(_), true) => {
            let d = if a > b { a - b } else { b - a };
            compare_powers(&int(b), &(n - 2u32), &int(&d), n)? == Ordering::Greater
        }
        _ => false,
    };
    conds.push(Condition::check("n > 2/eta", n_large));
    if b_ok && *n >= big(2) {
        // b > n^(216 n^2)
        let e = n * n * 216u32;
        let wide = compare_powers(&int(b), &BigUint::one(), &int(n), &e)? == Ordering::Greater;
        conds.push(Condition::info("b > n^(216 n^2)", wide));
    }
    let applicable = !conds.iter().any(Condition::failed);
    let bound = match (&eta, applicable) {
        (Some(eta), true) => {
            let w = prec + 32;
            let two_over = over_eta(&BigRational::from_integer(2.into()), eta, w)?;
            let n5 = BoundedReal::from_biguint(&Pow::pow(n, 5u32));
            let x = n5.mul(&ln_big(n, w), w).div(&ln_big(b, w), w)?;
            let root = x.nth_root(3, w)?;
            Some(two_over.add(&BoundedReal::from_u64(6).mul(&root, w), prec))
        }
        _ => None,
    };
    Ok(BoundReport::assemble(TheoremId::Bm, conds, eta, bound, degree))
}

fn window_thm21(a: &BigUint, b: &BigUint, n: &BigUint, degree: &BigUint) -> Vec<Condition> {
    vec![
        Condition::check("n >= 3", *n >= big(3)),
        Condition::check("16 < b", *b > big(16)),
        Condition::check("b < a", b < a),
        Condition::check("a < 6b/5", big(5) * a < big(6) * b),
        Condition::check("root irrational", *degree >= big(2)),
    ]
}

/// `35.1/η · max{log 2n / (η log a), 10}^2` with `a - b = a^(1-η)`, for `16 < b < a < 6b/5`.
pub fn bound_thm21(a: &BigUint, b: &BigUint, n: &BigUint, prec: u32) -> Result<BoundReport> {
    let degree = real_root_degree(a, b, n)?;
    let conds = window_thm21(a, b, n, &degree);
    let applicable = !conds.iter().any(Condition::failed);
    if !applicable {
        let eta = if a > b && !b.is_zero() { Some(eta_real(a, b, prec)?) } else { None };
        return Ok(BoundReport::assemble(TheoremId::Thm21, conds, eta, None, degree));
    }
    let eta = eta_real(a, b, prec)?;
    // the max picks 10 iff log 2n <= 10 η log a = 10 log(a/(a-b)), i.e. 2n (a-b)^10 <= a^10
    let arg = &eta.exact_arg;
    let floor_branch = compare_powers(&int(&(n * 2u32)), &BigUint::one(), arg, &big(10))? != Ordering::Greater;
    let (bound, note) = if floor_branch {
        (over_eta(&BigRational::from_integer(3510.into()), &eta, prec)?, "max branch: 10")
    } else {
        let w = prec + 32;
        let l2n = ln_big(&(n * 2u32), w);
        let larg = ln_interval(arg, w);
        let v = BoundedReal::from_big_rational(&dec(351), w)
            .mul(&ln_big(a, w), w)
            .mul(&l2n.square(w), w)
            .div(&larg.cube(w), prec)?;
        (v, "max branch: log 2n / (eta log a)")
    };
    Ok(BoundReport::assemble(TheoremId::Thm21, conds, Some(eta), Some(bound), degree).with_note(note))
}

/// The special case `η = 1/2` of the real theorem: 7020 for `30 < b < a < b + √a`, `a^5 >= 2n`.
pub fn check_cor22(a: &BigUint, b: &BigUint, n: &BigUint, prec: u32) -> Result<BoundReport> {
    let degree = real_root_degree(a, b, n)?;
    let close = a > b && {
        let d = a - b;
        &d * &d < *a
    };
    let conds = vec![
        Condition::check("n >= 3", *n >= big(3)),
        Condition::check("30 < b", *b > big(30)),
        Condition::check("b < a", b < a),
        Condition::check("a < b + sqrt(a)", close),
        Condition::check("a^5 >= 2n", Pow::pow(a, 5u32) >= n * 2u32),
        Condition::check("root irrational", degree >= big(2)),
    ];
    let applicable = !conds.iter().any(Condition::failed);
    let eta = if a > b && !b.is_zero() { Some(eta_real(a, b, prec)?) } else { None };
    let bound = applicable.then(|| BoundedReal::from_u64(7020));
    if applicable {
        let t = bound_thm21(a, b, n, prec)?;
        debug_assert!(t.applicable);
        debug_assert!(t.bound.as_ref().is_some_and(|x| x.hi() <= &crate::numerics::Dyadic::from_int(7020)));
    }
    Ok(BoundReport::assemble(TheoremId::Cor22, conds, eta, bound, degree))
}

/// `21180/η · max{log(2n / log a) / (η log a) + 1, 372}`, same window as the real theorem.
pub fn bound_53(a: &BigUint, b: &BigUint, n: &BigUint, prec: u32) -> Result<BoundReport> {
    let degree = real_root_degree(a, b, n)?;
    let conds = window_thm21(a, b, n, &degree);
    let applicable = !conds.iter().any(Condition::failed);
    if !applicable {
        let eta = if a > b && !b.is_zero() { Some(eta_real(a, b, prec)?) } else { None };
        return Ok(BoundReport::assemble(TheoremId::Eq53, conds, eta, None, degree));
    }
    let eta = eta_real(a, b, prec)?;
    let w = prec + 32;
    let la = ln_big(a, w);
    let larg = eta.scaled_log(w);
    let term = ln_big(&(n * 2u32), w)
        .sub(&la.ln(w)?, w)
        .div(&larg, w)?
        .add(&BoundedReal::one(), w);
    let floor = BoundedReal::from_u64(372);
    let note = match term.compare(&floor) {
        Some(Ordering::Greater) => "max branch: log term",
        Some(_) => "max branch: 372",
        None if term.certainly_le(&floor) == Some(true) => "max branch: 372",
        None => "max branch: undecided",
    };
    let m = term.max(&floor);
    let bound = over_eta(&BigRational::from_integer(21180.into()), &eta, w)?.mul(&m, prec);
    let t21 = bound_thm21(a, b, n, prec)?;
    let cmp = match t21.bound.as_ref().map(|t| t.hi().cmp(bound.hi())) {
        Some(Ordering::Less) => "; T2.1 is smaller",
        Some(Ordering::Greater) => "; Eq5.3 is smaller",
        _ => "",
    };
    Ok(BoundReport::assemble(TheoremId::Eq53, conds, Some(eta), Some(bound), degree).with_note(format!("{note}{cmp}")))
}

/// Data shared by the p-adic evaluators.
struct PadicSetup {
    conds: Vec<Condition>,
    e: u64,
    eta: Option<EtaValue>,
}

fn padic_setup(a: &BigUint, b: &BigUint, p: u64, n: &BigUint, prec: u32) -> Result<PadicSetup> {
    check_prime(p)?;
    if a.is_zero() || b.is_zero() {
        return Err(invalid("a and b must be positive"));
    }
    let pp = big(p);
    let order_ok = b < a;
    let divides = order_ok && ((a - b) % &pp).is_zero();
    let coprime = !(a * b % &pp).is_zero();
    let e = if divides { vp_uint(&(a - b), p) } else { 0 };
    let p_e_ok = divides && compare_powers(&PosRational::from_u64s(p, 1), &big(e), &PosRational::from_u64s(4, 1), &BigUint::one())? != Ordering::Less;
    let rational = padic_root_rational(a, b, p, n)?;
    let conds = vec![
        Condition::check("1 <= b < a", order_ok),
        Condition::check("p divides a - b", divides),
        Condition::check("p does not divide ab", coprime),
        Condition::check("p does not divide n", !(n % p).is_zero()),
        Condition::check("n >= 3", *n >= big(3)),
        Condition::check("a^eta >= 4 (p^E >= 4)", p_e_ok),
        Condition::check("root irrational", !(divides && coprime && rational)),
    ];
    let eta = if divides { Some(eta_padic(a, p, e, prec)?) } else { None };
    Ok(PadicSetup { conds, e, eta })
}

/// `53.8/η · max{log 2n / (η log a), 4}^2` (strict) with `a^η = |a-b|_p^(-1) = p^E`.
pub fn bound_thm31(a: &BigUint, b: &BigUint, p: u64, n: &BigUint, prec: u32) -> Result<BoundReport> {
    let s = padic_setup(a, b, p, n, prec)?;
    let applicable = !s.conds.iter().any(Condition::failed);
    if !applicable {
        return Ok(BoundReport::assemble(TheoremId::Thm31, s.conds, s.eta, None, n.clone()).strict());
    }
    let eta = s.eta.expect("defined when p | a - b");
    // the max picks 4 iff log 2n <= 4 E log p, i.e. 2n <= p^(4E)
    let floor_branch =
        compare_powers(&int(&(n * 2u32)), &BigUint::one(), &PosRational::from_u64s(p, 1), &big(4 * s.e))? != Ordering::Greater;
    let (bound, note) = if floor_branch {
        (over_eta(&dec(8608), &eta, prec)?, "max branch: 4")
    } else {
        let w = prec + 32;
        let elp = BoundedReal::from_u64(s.e).mul(&ln_interval(&PosRational::from_u64s(p, 1), w), w);
        let v = BoundedReal::from_big_rational(&dec(538), w)
            .mul(&ln_big(a, w), w)
            .mul(&ln_big(&(n * 2u32), w).square(w), w)
            .div(&elp.cube(w), prec)?;
        (v, "max branch: log 2n / (eta log a)")
    };
    Ok(BoundReport::assemble(TheoremId::Thm31, s.conds, Some(eta), Some(bound), n.clone()).strict().with_note(note))
}

/// `861/η` under the p-adic theorem's hypotheses and `a^(4η) >= 2n`, i.e. `p^(4E) >= 2n`.
pub fn bound_61(a: &BigUint, b: &BigUint, p: u64, n: &BigUint, prec: u32) -> Result<BoundReport> {
    let mut s = padic_setup(a, b, p, n, prec)?;
    let big_enough = s.e > 0
        && compare_powers(&PosRational::from_u64s(p, 1), &big(4 * s.e), &int(&(n * 2u32)), &BigUint::one())? != Ordering::Less;
    s.conds.push(Condition::check("p^(4E) >= 2n", big_enough));
    let applicable = !s.conds.iter().any(Condition::failed);
    let bound = match (&s.eta, applicable) {
        (Some(eta), true) => Some(over_eta(&BigRational::from_integer(861.into()), eta, prec)?),
        _ => None,
    };
    Ok(BoundReport::assemble(TheoremId::Eq61, s.conds, s.eta, bound, n.clone()))
}

/// The case `b = 1`, `a = 1 + c p^k`, `1 <= c < p^k`: `μ_eff < 1722` when `p^(4k) > 2n`, `p ∤ n`.
///
/// Derived from the `861/η` bound (then `η > 1/2`). When `p^k < 4` the premise forces
/// `n <= 40` and the conclusion follows from Liouville's bound instead.
pub fn check_cor32(p: u64, c: &BigUint, k: u32, n: &BigUint, prec: u32) -> Result<BoundReport> {
    check_prime(p)?;
    let pk = Pow::pow(big(p), k);
    let a = BigUint::one() + c * &pk;
    let conds = vec![
        Condition::check("k >= 1", k >= 1),
        Condition::check("1 <= c < p^k", !c.is_zero() && *c < pk),
        Condition::check("p^(4k) > 2n", Pow::pow(&pk, 4u32) > n * 2u32),
        Condition::check("p does not divide n", !(n % p).is_zero()),
        Condition::check("n >= 1", !n.is_zero()),
    ];
    let applicable = !conds.iter().any(Condition::failed);
    let one = BigUint::one();
    let eta_a = if k >= 1 && !c.is_zero() {
        Some(eta_padic(&a, p, vp_uint(&(&a - &one), p), prec)?)
    } else {
        None
    };
    let mut report = BoundReport::assemble(
        TheoremId::Cor32,
        conds,
        eta_a,
        applicable.then(|| BoundedReal::from_u64(1722)),
        n.clone(),
    )
    .strict();
    if applicable {
        let via = if pk >= big(4) && *n >= big(3) {
            let r = bound_61(&a, &one, p, n, prec)?;
            debug_assert!(r.applicable);
            "via 861/eta with eta > 1/2"
        } else {
            "via Liouville (n < 1722)"
        };
        report = report.with_note(via);
    }
    Ok(report)
}

/// Rows for the bounds whose constants are not given numerically.
pub fn unspecified_rows(n: &BigUint, padic: bool) -> Vec<BoundReport> {
    let ids: &[TheoremId] = if padic {
        &[TheoremId::Eq31]
    } else {
        &[TheoremId::Eq12, TheoremId::Eq13]
    };
    ids.iter()
        .map(|&id| {
            BoundReport::assemble(
                id,
                vec![Condition::unchecked("explicit constant", "constant unspecified in source")],
                None,
                None,
                n.clone(),
            )
            .with_note("constant unspecified in source")
        })
        .collect()
}

/// All evaluated theorems for one input and the best certified bound among them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BestReport {
    pub reports: Vec<BoundReport>,
    pub best_theorem: Option<TheoremId>,
    pub best: Option<BoundedReal>,
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub degree: BigUint,
}

fn select_best(reports: Vec<BoundReport>, liouville: BigUint) -> BestReport {
    let lv = (liouville >= big(2)).then(|| BoundedReal::from_biguint(&liouville));
    let mut best: Option<(TheoremId, BoundedReal)> = lv.clone().map(|b| (TheoremId::Liouville, b));
    for r in &reports {
        if r.theorem == TheoremId::Liouville {
            continue;
        }
        let Some(bound) = r.bound.as_ref().filter(|_| r.applicable) else {
            continue;
        };
        // ties and overlaps go to the exact integer Liouville bound, then to the earlier row
        let better = match &best {
            None => true,
            Some((_, cur)) => bound.hi() < cur.hi(),
        };
        if better {
            best = Some((r.theorem, bound.clone()));
        }
    }
    BestReport {
        reports,
        best_theorem: best.as_ref().map(|(t, _)| *t),
        best: best.map(|(_, b)| b),
        degree: liouville,
    }
}

/// Real case: the classical theorem, the closeness theorem, its corollary, the
/// alternative bound, Liouville, and the rows without explicit constants.
pub fn best_bound_real(a: &BigUint, b: &BigUint, n: &BigUint, prec: u32) -> Result<BestReport> {
    let degree = real_root_degree(a, b, n)?;
    let mut reports = vec![
        bound_bm(a, b, n, prec)?,
        bound_thm21(a, b, n, prec)?,
        check_cor22(a, b, n, prec)?,
        bound_53(a, b, n, prec)?,
        liouville_row(&degree),
    ];
    reports.extend(unspecified_rows(&degree, false));
    Ok(select_best(reports, degree))
}

/// p-adic case. The root lies in a field of degree at most `n`, so `n` serves as
/// the Liouville baseline.
pub fn best_bound_padic(a: &BigUint, b: &BigUint, p: u64, n: &BigUint, prec: u32) -> Result<BestReport> {
    let t31 = bound_thm31(a, b, p, n, prec)?;
    let e61 = bound_61(a, b, p, n, prec)?;
    let rational = t31.conditions.iter().any(|c| c.name == "root irrational" && c.failed());
    let lv = if rational { BigUint::one() } else { n.clone() };
    let mut reports = vec![t31, e61];
    let c32 = (b.is_one() && a > b).then(|| {
        let d = a - b;
        let k = vp_uint(&d, p);
        let pk = Pow::pow(big(p), k as u32);
        (d / &pk, k)
    });
    if let Some((c, k)) = c32 {
        if k >= 1 {
            reports.push(check_cor32(p, &c, k as u32, n, prec)?);
        }
    }
    reports.push(liouville_row(&lv));
    reports.extend(unspecified_rows(&lv, true));
    Ok(select_best(reports, lv))
}
