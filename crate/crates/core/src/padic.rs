//! p-adic valuations and the Hensel root `ζ ≡ 1 (mod p)` of `b X^n - a`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{is_prime_u64, vp_uint};
use crate::error::{invalid, Error, Result};
use crate::numerics::PosRational;

/// `v_p(x)`, so that `|x|_p = p^(-v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Valuation {
    pub v: i64,
    pub p: u64,
}

impl Valuation {
    /// `|x|_p` as an exact rational.
    pub fn abs_value(&self) -> PosRational {
        let pv = num_traits::Pow::pow(BigUint::from(self.p), self.v.unsigned_abs());
        let pv = PosRational::new(pv, BigUint::one()).expect("positive");
        if self.v >= 0 {
            pv.recip()
        } else {
            pv
        }
    }
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        Err(invalid(format!("{p} is not prime")))
    }
}

pub fn vp_int(m: &BigInt, p: u64) -> Result<Valuation> {
    check_prime(p)?;
    if m.is_zero() {
        return Err(invalid("valuation of zero is infinite"));
    }
    Ok(Valuation {
        v: vp_uint(m.magnitude(), p) as i64,
        p,
    })
}

pub fn vp_rat(q: &BigRational, p: u64) -> Result<Valuation> {
    let num = vp_int(q.numer(), p)?;
    let den = vp_int(q.denom(), p)?;
    Ok(Valuation {
        v: num.v - den.v,
        p,
    })
}

/// A residue modulo `p^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PAdicApprox {
    pub p: u64,
    pub k: u32,
    #[serde(serialize_with = "ser_display")]
    pub residue: BigUint,
}

fn ser_display<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

impl PAdicApprox {
    pub fn modulus(&self) -> BigUint {
        pow_u(self.p, self.k)
    }

    /// The same number known to fewer digits.
    pub fn truncate(&self, k: u32) -> Self {
        assert!(k <= self.k, "cannot truncate to a higher precision");
        Self {
            p: self.p,
            k,
            residue: &self.residue % pow_u(self.p, k),
        }
    }
}

pub(crate) fn pow_u(p: u64, k: u32) -> BigUint {
    num_traits::Pow::pow(BigUint::from(p), k)
}

/// Canonical representative of `x mod m` in `[0, m)`.
pub(crate) fn reduce(x: &BigInt, m: &BigUint) -> BigUint {
    let m = BigInt::from(m.clone());
    x.mod_floor(&m).to_biguint().expect("non-negative")
}

/// Inverse of `x` modulo `m`, if it exists.
pub(crate) fn inverse_mod(x: &BigInt, m: &BigUint) -> Option<BigUint> {
    let mi = BigInt::from(m.clone());
    let e = x.mod_floor(&mi).extended_gcd(&mi);
    e.gcd.is_one().then(|| reduce(&e.x, m))
}

fn divides(p: u64, x: &BigInt) -> bool {
    (x % BigInt::from(p)).is_zero()
}

/// The standing hypotheses for the root `ζ` of `b X^n - a` with `|ζ - 1|_p < 1`.
pub(crate) fn root_hypotheses(a: &BigInt, b: &BigInt, p: u64, n: u64) -> Vec<(&'static str, bool)> {
    vec![
        ("p does not divide a", !divides(p, a)),
        ("p does not divide b", !divides(p, b)),
        ("p divides a - b", divides(p, &(a - b))),
        ("p does not divide n", n % p != 0),
    ]
}

/// The residue `r mod p^k` with `b r^n ≡ a` and `r ≡ 1 (mod p)`.
///
/// Newton's iteration from `r = 1`, doubling the number of correct digits per step.
/// `f'(r) = n b r^(n-1)` is a unit because `p` divides none of `n`, `b`, `r`.
pub fn hensel_nth_root(a: &BigInt, b: &BigInt, p: u64, n: u64, k: u32) -> Result<PAdicApprox> {
    check_prime(p)?;
    if n < 3 {
        return Err(invalid("hensel_nth_root needs n >= 3"));
    }
    if k == 0 {
        return Err(invalid("precision k must be at least 1"));
    }
    if let Some((name, _)) = root_hypotheses(a, b, p, n).into_iter().find(|(_, ok)| !ok) {
        return Err(Error::Inapplicable(name.to_string()));
    }
    let nn = BigUint::from(n);
    let n1 = BigUint::from(n - 1);
    let mut r = BigUint::one();
    let mut known = 1u32;
    while known < k {
        known = (known * 2).min(k);
        let m = pow_u(p, known);
        let rb = BigInt::from(r.clone());
        let f = b * BigInt::from(r.modpow(&nn, &m)) - a;
        let df = b * BigInt::from(&nn * r.modpow(&n1, &m));
        let inv = inverse_mod(&df, &m).expect("derivative is a p-adic unit");
        r = reduce(&(rb - f * BigInt::from(inv)), &m);
    }
    Ok(PAdicApprox {
        p,
        k,
        residue: r % pow_u(p, k),
    })
}

/// `v_p` of a nonzero integer given as a difference of powers, found from residues
/// modulo growing powers of `p` (the exact difference may be huge).
fn vp_pow_diff(x: &BigInt, y: &BigInt, n: u64, p: u64, start: u32) -> Result<u64> {
    let nn = BigUint::from(n);
    let mut l = start.max(4);
    loop {
        let m = pow_u(p, l);
        let xr = reduce(x, &m).modpow(&nn, &m);
        let yr = reduce(y, &m).modpow(&nn, &m);
        let d = reduce(&(BigInt::from(xr) - BigInt::from(yr)), &m);
        if !d.is_zero() {
            return Ok(vp_uint(&d, p));
        }
        if l > 1 << 20 {
            return Err(Error::SizeCap("valuation of x^n - y^n".into()));
        }
        l *= 2;
    }
}

/// `(v_p(x/y - 1), v_p((x/y)^n - 1))`, each computed directly.
pub fn vp_power_pair(x: &BigInt, y: &BigInt, n: u64, p: u64) -> Result<(Valuation, Valuation)> {
    check_prime(p)?;
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    if !x.gcd(y).is_one() {
        return Err(invalid("x and y must be coprime"));
    }
    if n % p == 0 {
        return Err(Error::Inapplicable("p does not divide n".into()));
    }
    let diff = x - y;
    if diff.is_zero() {
        return Err(invalid("x/y = 1 has infinite valuation"));
    }
    if !divides(p, &diff) {
        return Err(Error::Inapplicable("p divides x - y".into()));
    }
    // p | x - y with gcd(x, y) = 1 keeps y a p-adic unit, so both denominators drop out
    let v1 = vp_uint(diff.magnitude(), p);
    let v2 = vp_pow_diff(x, y, n, p, v1 as u32 + 2)?;
    Ok((Valuation { v: v1 as i64, p }, Valuation { v: v2 as i64, p }))
}

/// `v_p(ζ - x/y)` for the Hensel root `ζ` of `b X^n - a`, through the norm identity
/// `b ∏ (x/y - ζ_i) = b (x/y)^n - a`: the conjugates `ζ ω` with `ω ≠ 1` stay at
/// distance 1 from `x/y`, so only `v_p(b x^n - a y^n)` remains.
///
/// Needs `x/y ≡ 1 (mod p)`; used to cross-check the residue computation.
pub fn root_distance_by_norm(a: &BigInt, b: &BigInt, p: u64, n: u64, x: &BigInt, y: &BigInt) -> Result<u64> {
    check_prime(p)?;
    if let Some((name, _)) = root_hypotheses(a, b, p, n).into_iter().find(|(_, ok)| !ok) {
        return Err(Error::Inapplicable(name.to_string()));
    }
    if y.is_zero() || divides(p, y) || !divides(p, &(x - y)) {
        return Err(invalid("x/y must be congruent to 1 modulo p"));
    }
    let nn = BigUint::from(n);
    let mut l = 8u32;
    loop {
        let m = pow_u(p, l);
        let xn = BigInt::from(reduce(x, &m).modpow(&nn, &m));
        let yn = BigInt::from(reduce(y, &m).modpow(&nn, &m));
        let d = reduce(&(b * xn - a * yn), &m);
        if !d.is_zero() {
            return Ok(vp_uint(&d, p));
        }
        if l > 1 << 20 {
            return Err(Error::SizeCap("norm valuation".into()));
        }
        l *= 2;
    }
}

/// `v_p(ζ - x/y)` read off a residue of `ζ`; `None` when the residue agrees with
/// `x/y` to all `k` known digits (the distance is then at least `k`).
pub fn root_distance_by_residue(root: &PAdicApprox, x: &BigInt, y: &BigInt) -> Option<u64> {
    let m = root.modulus();
    let yinv = inverse_mod(y, &m)?;
    let q = reduce(&(x * BigInt::from(yinv)), &m);
    let d = reduce(&(BigInt::from(root.residue.clone()) - BigInt::from(q)), &m);
    (!d.is_zero()).then(|| vp_uint(&d, root.p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn valuations() {
        assert_eq!(vp_int(&i(18), 3).unwrap().v, 2);
        assert_eq!(vp_int(&i(1325), 5).unwrap().v, 2);
        assert_eq!(vp_int(&i(7), 2).unwrap().v, 0);
        assert!(vp_int(&i(0), 2).is_err());
        assert!(vp_int(&i(9), 4).is_err());
        let q = |a: i64, b: i64| BigRational::new(i(a), i(b));
        assert_eq!(vp_rat(&q(7, 8), 2).unwrap().v, -3);
        assert_eq!(vp_rat(&q(18, 5), 3).unwrap().v, 2);
        assert_eq!(vp_rat(&q(1325, 27), 5).unwrap().v, 2);
        assert_eq!(Valuation { v: 2, p: 3 }.abs_value(), PosRational::from_u64s(1, 9));
    }

    #[test]
    fn hensel_small_cases() {
        let r = hensel_nth_root(&i(6), &i(1), 5, 3, 2).unwrap();
        assert_eq!(r.residue, BigUint::from(11u32));
        let r = hensel_nth_root(&i(8), &i(1), 7, 4, 1).unwrap();
        assert_eq!(r.residue, BigUint::one());
        let r = hensel_nth_root(&i(10), &i(3), 7, 5, 3).unwrap();
        let m = BigUint::from(343u32);
        let lhs = (BigUint::from(3u32) * r.residue.modpow(&BigUint::from(5u32), &m)) % &m;
        assert_eq!(lhs, BigUint::from(10u32));
        assert_eq!(&r.residue % 7u32, BigUint::one());
    }

    #[test]
    fn hensel_names_failed_hypothesis() {
        let e = hensel_nth_root(&i(10), &i(1), 3, 9, 2).unwrap_err();
        assert_eq!(e, Error::Inapplicable("p does not divide n".into()));
        let e = hensel_nth_root(&i(7), &i(1), 5, 3, 2).unwrap_err();
        assert_eq!(e, Error::Inapplicable("p divides a - b".into()));
    }

    #[test]
    fn power_pair_examples() {
        let (a, b) = vp_power_pair(&i(6), &i(1), 3, 5).unwrap();
        assert_eq!((a.v, b.v), (1, 1));
        let (a, b) = vp_power_pair(&i(26), &i(1), 4, 5).unwrap();
        assert_eq!((a.v, b.v), (2, 2));
        let (a, b) = vp_power_pair(&i(11), &i(1), 7, 5).unwrap();
        assert_eq!((a.v, b.v), (1, 1));
        let (a, b) = vp_power_pair(&i(-3), &i(5), 3, 2).unwrap();
        assert_eq!((a.v, b.v), (3, 3));
        assert!(vp_power_pair(&i(6), &i(1), 5, 5).is_err());
        assert!(vp_power_pair(&i(7), &i(1), 3, 5).is_err());
    }

    #[test]
    fn distance_routes_agree() {
        let (a, b) = (i(6), i(1));
        let root = hensel_nth_root(&a, &b, 5, 3, 30).unwrap();
        for (x, y) in [(11, 1), (1, 1), (6, 1), (16, 11), (-4, 1)] {
            let by_norm = root_distance_by_norm(&a, &b, 5, 3, &i(x), &i(y)).unwrap();
            let by_res = root_distance_by_residue(&root, &i(x), &i(y)).unwrap();
            assert_eq!(by_norm, by_res, "x/y = {x}/{y}");
        }
        assert!(root_distance_by_norm(&a, &b, 5, 3, &i(11), &i(1)).unwrap() >= 2);
    }
}
