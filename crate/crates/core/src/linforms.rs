//! Lower bounds for linear forms in two logarithms: the Archimedean estimates
//! (`bound_51` with constant 8550 and `bound_52` with constant 35.1)
//! and the p-adic estimate with constant 53.8, each with its hypotheses checked.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{rational_perfect_power, vp_uint};
use crate::error::{invalid, Error, Result};
use crate::numerics::{
    compare_powers_u64, int, ln_interval, log_ratio, refine, resolved, BoundedReal, PosRational,
};
use crate::padic::check_prime;
use crate::report::{failed_names, Condition};

/// Whether two positive rationals are multiplicatively independent.
///
/// `r1^i = r2^j` for some `(i, j) != (0, 0)` exactly when one of them is 1 or both
/// are powers of the same primitive base, which the perfect-power decomposition
/// finds without factoring.
pub fn mult_independent(r1: &PosRational, r2: &PosRational) -> bool {
    match (rational_perfect_power(r1), rational_perfect_power(r2)) {
        (Some((g, _)), Some((h, _))) => g != h,
        _ => false,
    }
}

/// Signed version: `x1/y1` and `x2/y2` are independent iff their absolute values are
/// (an even power removes any sign).
pub fn mult_independent_signed(x1: &BigInt, y1: &BigInt, x2: &BigInt, y2: &BigInt) -> Result<bool> {
    let abs = |x: &BigInt, y: &BigInt| PosRational::new(x.magnitude().clone(), y.magnitude().clone());
    Ok(mult_independent(&abs(x1, y1)?, &abs(x2, y2)?))
}

/// A height parameter `A >= max{a1, e}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Height {
    /// `A = e`, so `log A = 1`.
    Euler,
    Value(PosRational),
}

impl Height {
    /// The smallest legal choice for numerator `a1`.
    pub fn minimal(a1: &BigUint) -> Self {
        if *a1 >= BigUint::from(3u32) {
            Height::Value(int(a1))
        } else {
            Height::Euler
        }
    }

    pub fn ln(&self, prec: u32) -> BoundedReal {
        match self {
            Height::Euler => BoundedReal::one(),
            Height::Value(q) => ln_interval(q, prec),
        }
    }

    /// `log self / log q` for `q > 1`.
    fn log_ratio(&self, q: &PosRational, prec: u32) -> BoundedReal {
        match self {
            Height::Euler => {
                let w = prec + 16;
                BoundedReal::one().div(&ln_interval(q, w), prec).expect("q > 1")
            }
            Height::Value(h) => log_ratio(h, q, prec),
        }
    }

    fn admissible(&self, a1: &BigUint) -> Result<bool> {
        match self {
            Height::Euler => Ok(*a1 <= BigUint::from(2u32)),
            Height::Value(h) => {
                if *h < int(a1) {
                    return Ok(false);
                }
                // h >= e, h rational: decided by ln h against 1
                refine(64, "height >= e", |prec| {
                    resolved(ln_interval(h, prec).certainly_le(&BoundedReal::one()).map(|le| !le), "height >= e")
                })
            }
        }
    }
}

impl std::fmt::Display for Height {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Height::Euler => f.write_str("e"),
            Height::Value(q) => write!(f, "{q}"),
        }
    }
}

/// `|v log(a1/a2) - u log(b1/b2)|` together with the heights `A`, `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArchLinForm {
    pub a1: BigUint,
    pub a2: BigUint,
    pub b1: BigUint,
    pub b2: BigUint,
    pub u: BigUint,
    pub v: BigUint,
    pub a: Height,
    pub b: Height,
}

impl ArchLinForm {
    #[allow(clippy::too_many_arguments)]
    pub fn new(a1: BigUint, a2: BigUint, b1: BigUint, b2: BigUint, u: BigUint, v: BigUint, a: Height, b: Height) -> Result<Self> {
        if [&a1, &a2, &b1, &b2, &u, &v].iter().any(|x| x.is_zero()) {
            return Err(invalid("a1, a2, b1, b2, u, v must be positive"));
        }
        if a1 <= a2 || b1 <= b2 {
            return Err(invalid("need a1/a2 > 1 and b1/b2 > 1"));
        }
        let f = Self { a1, a2, b1, b2, u, v, a, b };
        if !f.a.admissible(&f.a1)? {
            return Err(invalid("need A >= max{a1, e}"));
        }
        if !f.b.admissible(&f.b1)? {
            return Err(invalid("need B >= max{b1, e}"));
        }
        Ok(f)
    }

    /// Same form with the minimal legal heights.
    pub fn with_minimal_heights(a1: BigUint, a2: BigUint, b1: BigUint, b2: BigUint, u: BigUint, v: BigUint) -> Result<Self> {
        let (a, b) = (Height::minimal(&a1), Height::minimal(&b1));
        Self::new(a1, a2, b1, b2, u, v, a, b)
    }

    fn alpha(&self) -> PosRational {
        PosRational::new(self.a1.clone(), self.a2.clone()).expect("positive")
    }

    fn beta(&self) -> PosRational {
        PosRational::new(self.b1.clone(), self.b2.clone()).expect("positive")
    }
}

/// `E = 1 + min{log A / log(a1/a2), log B / log(b1/b2)}`.
pub fn arch_e(f: &ArchLinForm, prec: u32) -> BoundedReal {
    let w = prec + 16;
    let ra = f.a.log_ratio(&f.alpha(), w);
    let rb = f.b.log_ratio(&f.beta(), w);
    BoundedReal::one().add(&ra.min(&rb), prec)
}

/// Which argument of a `max` is the larger one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// The term depending on `U'`.
    Formula,
    /// The constant floor (`600 + 150 log E`, resp. `10 log E`).
    Floor,
    /// Not separated at this precision; the enclosure covers both.
    Undecided,
}

fn branch(formula: &BoundedReal, floor: &BoundedReal) -> Branch {
    match formula.compare(floor) {
        Some(Ordering::Greater) => Branch::Formula,
        Some(_) => Branch::Floor,
        None if formula.certainly_le(floor) == Some(true) => Branch::Floor,
        None => Branch::Undecided,
    }
}

/// The auxiliary quantities of the Archimedean estimates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArchDerived {
    pub e: BoundedReal,
    pub log_e: BoundedReal,
    pub log_a: BoundedReal,
    pub log_b: BoundedReal,
    pub log_u_prime: BoundedReal,
    pub log_u1: BoundedReal,
    pub log_u2: BoundedReal,
    pub u1_branch: Branch,
    pub u2_branch: Branch,
}

pub fn arch_derived(f: &ArchLinForm, prec: u32) -> Result<ArchDerived> {
    let w = prec + 32;
    let e = arch_e(f, w);
    let log_e = e.ln(w)?;
    let log_a = f.a.ln(w);
    let log_b = f.b.ln(w);
    let u = BoundedReal::from_biguint(&f.u);
    let v = BoundedReal::from_biguint(&f.v);
    let u_prime = u.div(&log_a, w)?.add(&v.div(&log_b, w)?, w);
    let log_u_prime = u_prime.ln(w)?;

    let c = |n: u64| BoundedReal::from_u64(n);
    let u1_formula = log_u_prime.add(&log_e, w);
    let u1_floor = c(600).add(&c(150).mul(&log_e, w), w);
    let point47 = BoundedReal::from_ratio(&BigInt::from(47), &BigInt::from(100), w);
    let u2_formula = log_u_prime.add(&log_e.ln(w)?, w).add(&point47, w);
    let u2_floor = c(10).mul(&log_e, w);

    let round = |x: &BoundedReal| x.add(&BoundedReal::zero(), prec);
    Ok(ArchDerived {
        u1_branch: branch(&u1_formula, &u1_floor),
        u2_branch: branch(&u2_formula, &u2_floor),
        log_u1: round(&u1_formula.max(&u1_floor)),
        log_u2: round(&u2_formula.max(&u2_floor)),
        e: round(&e),
        log_e: round(&log_e),
        log_a: round(&log_a),
        log_b: round(&log_b),
        log_u_prime: round(&log_u_prime),
    })
}

/// Every hypothesis of the Archimedean estimates, decided exactly or by refinement.
pub fn arch_conditions(f: &ArchLinForm, prec: u32) -> Result<Vec<Condition>> {
    let independent = mult_independent(&f.alpha(), &f.beta());
    let e_ge_15 = refine(prec, "E >= 15", |p| {
        resolved(BoundedReal::from_u64(15).certainly_le(&arch_e(f, p)), "E >= 15")
    })?;
    // E <= H^(3/2)  <=>  log E <= 1.5 log H
    let e_le = |h: &Height, what: &str| {
        refine(prec, what, |p| {
            let w = p + 16;
            let le = arch_e(f, w).ln(w)?;
            let rhs = BoundedReal::from_ratio(&BigInt::from(3), &BigInt::from(2), w).mul(&h.ln(w), w);
            resolved(le.certainly_le(&rhs), what)
        })
    };
    Ok(vec![
        Condition::check("multiplicatively independent", independent),
        Condition::check("E >= 15", e_ge_15),
        Condition::check("E <= A^(3/2)", e_le(&f.a, "E <= A^(3/2)")?),
        Condition::check("E <= B^(3/2)", e_le(&f.b, "E <= B^(3/2)")?),
    ])
}

fn inapplicable_arch(conds: &[Condition]) -> Result<()> {
    let failed = failed_names(conds);
    if failed.is_empty() {
        return Ok(());
    }
    if failed.iter().any(|n| n == "multiplicatively independent") {
        return Err(Error::Inapplicable("dependence".into()));
    }
    Err(Error::Inapplicable("E-range".into()))
}

fn arch_value_51(d: &ArchDerived, prec: u32) -> Result<BoundedReal> {
    let w = prec + 32;
    let num = BoundedReal::from_u64(8550)
        .mul(&d.log_a, w)
        .mul(&d.log_b, w)
        .mul(&d.log_u1, w)
        .mul(&BoundedReal::from_u64(4).add(&d.log_e, w), w);
    Ok(num.div(&d.log_e.cube(w), prec)?.neg())
}

fn arch_value_52(d: &ArchDerived, prec: u32) -> Result<BoundedReal> {
    let w = prec + 32;
    let num = BoundedReal::from_ratio(&BigInt::from(351), &BigInt::from(10), w)
        .mul(&d.log_a, w)
        .mul(&d.log_b, w)
        .mul(&d.log_u2.square(w), w);
    Ok(num.div(&d.log_e.cube(w), prec)?.neg())
}

/// Lower bound `-8550 log A log B log U1 (4 + log E) / (log E)^3` for `log |Λ|`.
///
/// The certified lower bound is the `lo` endpoint of the returned enclosure.
pub fn arch_bound_51(f: &ArchLinForm, prec: u32) -> Result<BoundedReal> {
    inapplicable_arch(&arch_conditions(f, prec)?)?;
    arch_value_51(&arch_derived(f, prec)?, prec)
}

/// Lower bound `-35.1 log A log B (log U2)^2 / (log E)^3` for `log |Λ|`; `lo` is certified.
pub fn arch_bound_52(f: &ArchLinForm, prec: u32) -> Result<BoundedReal> {
    inapplicable_arch(&arch_conditions(f, prec)?)?;
    arch_value_52(&arch_derived(f, prec)?, prec)
}

/// Both Archimedean estimates with their hypothesis ledger.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArchReport {
    pub applicable: bool,
    pub conditions: Vec<Condition>,
    pub derived: Option<ArchDerived>,
    pub bound_51: Option<BoundedReal>,
    pub bound_52: Option<BoundedReal>,
    /// `"bound_51"` or `"bound_52"`: the larger (stronger) certified lower bound, if decided.
    pub stronger: Option<&'static str>,
}

pub fn arch_evaluate(f: &ArchLinForm, prec: u32) -> Result<ArchReport> {
    let conditions = arch_conditions(f, prec)?;
    let derived = arch_derived(f, prec)?;
    let applicable = !conditions.iter().any(Condition::failed);
    let (b51, b52) = if applicable {
        (Some(arch_value_51(&derived, prec)?), Some(arch_value_52(&derived, prec)?))
    } else {
        (None, None)
    };
    let stronger = match (&b51, &b52) {
        (Some(x), Some(y)) => match x.compare(y) {
            Some(Ordering::Greater) => Some("bound_51"),
            Some(Ordering::Less) => Some("bound_52"),
            _ => None,
        },
        _ => None,
    };
    Ok(ArchReport {
        applicable,
        conditions,
        derived: Some(derived),
        bound_51: b51,
        bound_52: b52,
        stronger,
    })
}

/// The proof-level choice `E = 1 + 2.36 a^η = 1 + 2.36 a/(a - b)` (exact rational).
pub fn proof_e(a: &BigUint, b: &BigUint) -> Result<BigRational> {
    if a <= b {
        return Err(invalid("need a > b"));
    }
    let a_eta = BigRational::new(BigInt::from(a.clone()), BigInt::from(a - b));
    Ok(BigRational::one() + BigRational::new(236.into(), 100.into()) * a_eta)
}

/// `A_i` for the p-adic estimate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuHeight {
    /// `log A_i = max{log|x_i|, log|y_i|, E log p}`.
    Minimal,
    /// An explicit `A_i`, which must satisfy that inequality.
    Value(PosRational),
}

/// `Λ = (x1/y1)^b - x2/y2` at a prime `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicLinForm {
    pub x1: BigInt,
    pub y1: BigInt,
    pub x2: BigInt,
    pub y2: BigInt,
    pub b: BigUint,
    pub p: u64,
    /// Lower bound for `v_p(x1/y1 - 1)`.
    pub e: PosRational,
    pub a1: BuHeight,
    pub a2: BuHeight,
}

impl PadicLinForm {
    #[allow(clippy::too_many_arguments)]
    pub fn new(x1: BigInt, y1: BigInt, x2: BigInt, y2: BigInt, b: BigUint, p: u64, e: PosRational, a1: BuHeight, a2: BuHeight) -> Result<Self> {
        check_prime(p)?;
        if [&x1, &y1, &x2, &y2].iter().any(|x| x.is_zero()) || b.is_zero() {
            return Err(invalid("x_i, y_i must be nonzero and b positive"));
        }
        let f = Self { x1, y1, x2, y2, b, p, e, a1, a2 };
        for (h, x, y) in [(&f.a1, &f.x1, &f.y1), (&f.a2, &f.x2, &f.y2)] {
            if let BuHeight::Value(q) = h {
                if !f.height_admissible(q, x, y)? {
                    return Err(invalid(format!("A = {q} is below max{{|x|, |y|, p^E}}")));
                }
            }
        }
        Ok(f)
    }

    fn height_admissible(&self, q: &PosRational, x: &BigInt, y: &BigInt) -> Result<bool> {
        let one = PosRational::one();
        if *q <= one || *q < int(x.magnitude()) || *q < int(y.magnitude()) {
            return Ok(false);
        }
        // q >= p^E  <=>  q^den >= p^num
        let den = u64::try_from(self.e.den()).map_err(|_| invalid("E denominator too large"))?;
        let num = u64::try_from(self.e.num()).map_err(|_| invalid("E numerator too large"))?;
        Ok(compare_powers_u64(q, den, &PosRational::from_u64s(self.p, 1), num)? != Ordering::Less)
    }

    fn log_height(&self, which: usize, prec: u32) -> BoundedReal {
        let (h, x, y) = if which == 1 {
            (&self.a1, &self.x1, &self.y1)
        } else {
            (&self.a2, &self.x2, &self.y2)
        };
        match h {
            BuHeight::Value(q) => ln_interval(q, prec),
            BuHeight::Minimal => {
                let lx = ln_interval(&int(x.magnitude()), prec);
                let ly = ln_interval(&int(y.magnitude()), prec);
                let ep = BoundedReal::from_rational(&self.e, prec)
                    .mul(&ln_interval(&PosRational::from_u64s(self.p, 1), prec), prec);
                lx.max(&ly).max(&ep)
            }
        }
    }
}

/// `v_p(x/y - 1)`, `None` when `x = y`.
fn vp_minus_one(x: &BigInt, y: &BigInt, p: u64) -> Option<i64> {
    let d = x - y;
    if d.is_zero() {
        return None;
    }
    Some(vp_uint(d.magnitude(), p) as i64 - vp_uint(y.magnitude(), p) as i64)
}

/// `v >= num/den`, with `None` standing for an infinite valuation.
fn val_ge(v: Option<i64>, q: &PosRational) -> bool {
    match v {
        None => true,
        Some(v) if v <= 0 => false,
        Some(v) => BigUint::from(v as u64) * q.den() >= *q.num(),
    }
}

pub fn padic_conditions(f: &PadicLinForm) -> Result<Vec<Condition>> {
    let p = f.p;
    let independent = mult_independent_signed(&f.x1, &f.y1, &f.x2, &f.y2)?;
    let v1 = vp_minus_one(&f.x1, &f.y1, p);
    let e_big = f.e.num() * BigUint::from(p - 1) > *f.e.den();
    let p_two_ok = p != 2 || val_ge(vp_minus_one(&f.x2, &f.y2, p), &PosRational::from_u64s(2, 1));
    Ok(vec![
        Condition::check("multiplicatively independent", independent),
        Condition::check("v_p(x1/y1 - 1) >= E", val_ge(v1, &f.e)),
        Condition::check("E > 1/(p-1)", e_big),
        Condition::check("p does not divide b", !(&f.b % BigUint::from(p)).is_zero()),
        Condition::check("p odd or v_2(x2/y2 - 1) >= 2", p_two_ok),
    ])
}

/// The quantities entering the p-adic estimate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BuDerived {
    pub log_a1: BoundedReal,
    pub log_a2: BoundedReal,
    pub b_prime: BoundedReal,
    pub max_term: BoundedReal,
    pub branch: &'static str,
}

pub fn padic_derived(f: &PadicLinForm, prec: u32) -> Result<BuDerived> {
    let w = prec + 32;
    let la1 = f.log_height(1, w);
    let la2 = f.log_height(2, w);
    let b = BoundedReal::from_biguint(&f.b);
    let b_prime = b.div(&la2, w)?.add(&BoundedReal::one().div(&la1, w)?, w);
    let e = BoundedReal::from_rational(&f.e, w);
    let lp = ln_interval(&PosRational::from_u64s(f.p, 1), w);
    let elp = e.mul(&lp, w);
    let t1 = b_prime
        .ln(w)?
        .add(&elp.ln(w)?, w)
        .add(&BoundedReal::from_ratio(&BigInt::from(2), &BigInt::from(5), w), w);
    let t2 = BoundedReal::from_u64(4).mul(&elp, w);
    let t3 = BoundedReal::from_u64(5);
    let max_term = t1.max(&t2).max(&t3);
    let branch = if t1.compare(&t2.max(&t3)) == Some(Ordering::Greater) {
        "log b'"
    } else if t2.compare(&t1.max(&t3)) == Some(Ordering::Greater) {
        "4 E log p"
    } else if t3.compare(&t1.max(&t2)) == Some(Ordering::Greater) {
        "5"
    } else {
        "undecided"
    };
    let round = |x: &BoundedReal| x.add(&BoundedReal::zero(), prec);
    Ok(BuDerived {
        log_a1: round(&la1),
        log_a2: round(&la2),
        b_prime: round(&b_prime),
        max_term: round(&max_term),
        branch,
    })
}

fn padic_value(f: &PadicLinForm, d: &BuDerived, prec: u32) -> Result<BoundedReal> {
    let w = prec + 32;
    let e = BoundedReal::from_rational(&f.e, w);
    let lp = ln_interval(&PosRational::from_u64s(f.p, 1), w);
    let num = BoundedReal::from_ratio(&BigInt::from(538), &BigInt::from(10), w)
        .mul(&d.max_term.square(w), w)
        .mul(&d.log_a1, w)
        .mul(&d.log_a2, w);
    let den = e.cube(w).mul(&lp.square(w).square(w), w);
    num.div(&den, prec)
}

/// Upper bound for `v_p((x1/y1)^b - x2/y2)`; the `hi` endpoint is certified.
pub fn padic_bound_bu(f: &PadicLinForm, prec: u32) -> Result<BoundedReal> {
    let conds = padic_conditions(f)?;
    let failed = failed_names(&conds);
    if let Some(first) = failed.first() {
        let tag = match first.as_str() {
            "multiplicatively independent" => "dependence",
            "p odd or v_2(x2/y2 - 1) >= 2" => "p=2 condition",
            "p does not divide b" => "p divides b",
            _ => "E too small",
        };
        return Err(Error::Inapplicable(tag.into()));
    }
    padic_value(f, &padic_derived(f, prec)?, prec)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BuReport {
    pub applicable: bool,
    pub conditions: Vec<Condition>,
    pub derived: Option<BuDerived>,
    pub bound: Option<BoundedReal>,
}

pub fn padic_evaluate(f: &PadicLinForm, prec: u32) -> Result<BuReport> {
    let conditions = padic_conditions(f)?;
    let applicable = !conditions.iter().any(Condition::failed);
    let derived = padic_derived(f, prec)?;
    let bound = if applicable {
        Some(padic_value(f, &derived, prec)?)
    } else {
        None
    };
    Ok(BuReport {
        applicable,
        conditions,
        derived: Some(derived),
        bound,
    })
}
