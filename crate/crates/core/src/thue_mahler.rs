//! The families `(b + c) x^n - b y^n = d p_1^z_1 ... p_s^z_s`: hypothesis ledger,
//! exhaustive search in a box, and the factorization behind the reduction to
//! linear forms.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::vp_uint;
use crate::error::{invalid, Error, Result};
use crate::numerics::{compare_powers_u64, int, PosRational};
use crate::padic::{check_prime, Valuation};
use crate::report::Condition;

/// Largest `|N|` (in bits) the search is willing to form.
pub const MAX_VALUE_BITS: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TMInstance {
    pub b: BigUint,
    pub c: BigUint,
    pub d: BigInt,
    pub n: u64,
    pub primes: Vec<u64>,
    pub eta: PosRational,
    /// Search box `|x|, |y| <= limit_x`.
    pub limit_x: u64,
    /// Cap on each `z_j`; `None` means the automatic ceiling `log|N| / log p_j`.
    pub limit_z: Option<u64>,
}

impl TMInstance {
    /// Checks well-formedness only; the theorem's hypotheses are reported by [`check_thm41`].
    #[allow(clippy::too_many_arguments)]
    pub fn new(b: BigUint, c: BigUint, d: BigInt, n: u64, primes: Vec<u64>, eta: PosRational, limit_x: u64, limit_z: Option<u64>) -> Result<Self> {
        if b < BigUint::from(2u32) || c.is_zero() {
            return Err(invalid("need b >= 2 and c >= 1"));
        }
        if d.is_zero() {
            return Err(invalid("d must be nonzero"));
        }
        if n < 3 {
            return Err(invalid("need n >= 3"));
        }
        if primes.is_empty() {
            return Err(invalid("at least one prime is required"));
        }
        for (i, &p) in primes.iter().enumerate() {
            check_prime(p)?;
            if primes[..i].contains(&p) {
                return Err(invalid("primes must be distinct"));
            }
        }
        if limit_x == 0 {
            return Err(invalid("search limit X must be positive"));
        }
        Ok(Self { b, c, d, n, primes, eta, limit_x, limit_z })
    }

    /// `N = (b + c) x^n - b y^n`.
    pub fn form(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let b = BigInt::from(self.b.clone());
        let bc = &b + BigInt::from(self.c.clone());
        let n = self.n as u32;
        bc * Pow::pow(x, n) - b * Pow::pow(y, n)
    }
}

fn u64_of(x: &BigUint, what: &str) -> Result<u64> {
    u64::try_from(x).map_err(|_| invalid(format!("{what} too large")))
}

/// Every hypothesis of the family theorem, decided exactly.
///
/// The threshold `n >= κ (s/η) (log(s/η))^2` is reported as unchecked: `κ` is not
/// given numerically. For one prime, the explicit variant `n >= 10000/η` is
/// reported for information.
pub fn check_thm41(inst: &TMInstance) -> Result<Vec<Condition>> {
    let s = inst.primes.len() as u64;
    let (num, den) = (u64_of(inst.eta.num(), "eta numerator")?, u64_of(inst.eta.den(), "eta denominator")?);
    let mut conds = vec![Condition::check(
        "eta in (0, 1/(s+1))",
        BigUint::from(num) * (s + 1) < BigUint::from(den),
    )];
    // log c / log b < 1 - η  <=>  c^den < b^(den - num)
    let c_small = den > num && compare_powers_u64(&int(&inst.c), den, &int(&inst.b), den - num)?.is_lt();
    conds.push(Condition::check("log c / log b < 1 - eta", c_small));
    let bc = &inst.b + &inst.c;
    for &p in &inst.primes {
        // log |c|_p^-1 / log(b + c) > η  <=>  p^(v den) > (b + c)^num
        let v = vp_uint(&inst.c, p);
        let ok = v > 0 && compare_powers_u64(&PosRational::from_u64s(p, 1), v * den, &int(&bc), num)?.is_gt();
        conds.push(Condition::check(format!("log |c|_{p}^-1 / log(b+c) > eta"), ok));
    }
    let mut m = BigUint::one();
    for &p in &inst.primes {
        m *= BigUint::from(p) * BigUint::from(p - 1);
    }
    conds.push(Condition::check(
        "gcd(n, p_1...p_s (p_1-1)...(p_s-1)) = 1",
        BigUint::from(inst.n).gcd(&m).is_one(),
    ));
    conds.push(Condition::check("|d| <= b", *inst.d.magnitude() <= inst.b));
    conds.push(Condition::unchecked(
        "n >= kappa (s/eta) (log(s/eta))^2",
        "kappa unspecified in source",
    ));
    if s == 1 {
        conds.push(Condition::info(
            "n >= 10000/eta (single-prime variant)",
            BigUint::from(inst.n) * num >= BigUint::from(10_000u32) * den,
        ));
    }
    Ok(conds)
}

/// `N = residual * ∏ p_j^z_j` with the residual prime to every `p_j` (and carrying the sign).
pub fn strip_primes(n: &BigInt, primes: &[u64]) -> Result<(BigInt, Vec<u64>)> {
    if n.is_zero() {
        return Err(invalid("cannot strip primes from zero"));
    }
    let mut r = n.clone();
    let mut z = Vec::with_capacity(primes.len());
    for &p in primes {
        let pb = BigInt::from(p);
        let mut k = 0;
        loop {
            let (q, rem) = r.div_rem(&pb);
            if !rem.is_zero() {
                break;
            }
            r = q;
            k += 1;
        }
        z.push(k);
    }
    Ok((r, z))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TMSolution {
    #[serde(serialize_with = "ser_display")]
    pub x: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub y: BigInt,
    pub z: Vec<u64>,
}

fn ser_display<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

impl TMSolution {
    /// Exact re-evaluation of the equation and the coprimality condition.
    pub fn verify(&self, inst: &TMInstance) -> bool {
        if !self.x.gcd(&self.y).is_one() || self.z.len() != inst.primes.len() {
            return false;
        }
        let mut rhs = inst.d.clone();
        for (&p, &z) in inst.primes.iter().zip(&self.z) {
            rhs *= Pow::pow(BigInt::from(p), z as u32);
        }
        inst.form(&self.x, &self.y) == rhs
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TMSearchResult {
    /// Solutions with `xy != 0`.
    pub solutions: Vec<TMSolution>,
    /// Solutions with `xy = 0`.
    pub degenerate: Vec<TMSolution>,
}

/// The `z` with `N = d ∏ p_j^z_j`, if any.
fn exponents_over_d(big_n: &BigInt, inst: &TMInstance) -> Option<Vec<u64>> {
    let (quot, rem) = big_n.div_rem(&inst.d);
    if !rem.is_zero() {
        return None;
    }
    let (res, z) = strip_primes(&quot, &inst.primes).ok()?;
    res.is_one().then_some(z)
}

/// All coprime `(x, y)` with `|x|, |y| <= X` solving the equation, sorted by `(x, y)`.
///
/// Rows of `x` run in parallel over a shared table of `n`-th powers; each
/// accepted solution is re-verified exactly.
pub fn tm_search(inst: &TMInstance) -> Result<TMSearchResult> {
    let xmax = inst.limit_x as i64;
    let bits = inst.n.saturating_mul(64 - (inst.limit_x.leading_zeros() as u64)) + (&inst.b + &inst.c).bits() + 1;
    if bits > MAX_VALUE_BITS {
        return Err(Error::SizeCap(format!(
            "|N| at (x, y) = ({xmax}, {xmax}) needs about {bits} bits"
        )));
    }
    let n = inst.n as u32;
    let powers: Vec<BigInt> = (-xmax..=xmax).map(|t| Pow::pow(BigInt::from(t), n)).collect();
    let pw = |t: i64| &powers[(t + xmax) as usize];
    let b = BigInt::from(inst.b.clone());
    let bc = &b + BigInt::from(inst.c.clone());
    let rows: Vec<Vec<TMSolution>> = (-xmax..=xmax)
        .into_par_iter()
        .map(|x| {
            let mut out = Vec::new();
            let bx = &bc * pw(x);
            for y in -xmax..=xmax {
                if x.gcd(&y) != 1 {
                    continue;
                }
                let big_n = &bx - &b * pw(y);
                if big_n.is_zero() {
                    continue;
                }
                let Some(z) = exponents_over_d(&big_n, inst) else {
                    continue;
                };
                if let Some(cap) = inst.limit_z {
                    if z.iter().any(|&zj| zj > cap) {
                        continue;
                    }
                }
                out.push(TMSolution {
                    x: x.into(),
                    y: y.into(),
                    z,
                });
            }
            out
        })
        .collect();
    let mut result = TMSearchResult::default();
    for s in rows.into_iter().flatten() {
        assert!(s.verify(inst), "search produced an invalid solution");
        if s.x.is_zero() || s.y.is_zero() {
            result.degenerate.push(s);
        } else {
            result.solutions.push(s);
        }
    }
    Ok(result)
}

/// The factors of `|N|` at `(x, y)` used when bounding solutions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Eq71Record {
    #[serde(serialize_with = "ser_display")]
    pub value: BigInt,
    pub valuations: Vec<Valuation>,
    /// `|N|_{p_j}` for each prime.
    #[serde(serialize_with = "ser_rationals")]
    pub padic_abs: Vec<PosRational>,
    /// `b |y|^n |((b+c)/b) (x/y)^n - 1|`, equal to `|N|`.
    #[serde(serialize_with = "ser_rational")]
    pub archimedean: BigRational,
    #[serde(serialize_with = "ser_display")]
    pub residual: BigInt,
    /// `|N| ∏ |N|_{p_j}`, equal to `|residual|`.
    #[serde(serialize_with = "ser_rational")]
    pub product: BigRational,
    pub identity_holds: bool,
    pub is_solution: bool,
}

fn ser_rational<S: serde::Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

fn ser_rationals<S: serde::Serializer>(v: &[PosRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

pub fn eq71_decompose(inst: &TMInstance, x: &BigInt, y: &BigInt) -> Result<Eq71Record> {
    if y.is_zero() {
        return Err(invalid("y must be nonzero"));
    }
    let value = inst.form(x, y);
    if value.is_zero() {
        return Err(invalid("N = 0 at this pair"));
    }
    let (residual, z) = strip_primes(&value, &inst.primes)?;
    let valuations: Vec<Valuation> = inst
        .primes
        .iter()
        .zip(&z)
        .map(|(&p, &v)| Valuation { v: v as i64, p })
        .collect();
    let padic_abs: Vec<PosRational> = valuations.iter().map(Valuation::abs_value).collect();
    let n = inst.n as u32;
    let b = BigRational::from_integer(inst.b.clone().into());
    let bc = &b + BigRational::from_integer(inst.c.clone().into());
    let t = BigRational::new(x.clone(), y.clone());
    let archimedean = &b * BigRational::from_integer(Pow::pow(y.abs(), n)) * (&bc / &b * Pow::pow(&t, n) - BigRational::one()).abs();
    let abs_n = BigRational::from_integer(value.abs());
    let mut product = abs_n.clone();
    for a in &padic_abs {
        product *= BigRational::new(a.num().clone().into(), a.den().clone().into());
    }
    let identity_holds = archimedean == abs_n && product == BigRational::from_integer(residual.abs());
    let is_solution = x.gcd(y).is_one() && exponents_over_d(&value, inst).is_some();
    Ok(Eq71Record {
        value,
        valuations,
        padic_abs,
        archimedean,
        residual,
        product,
        identity_holds,
        is_solution,
    })
}
