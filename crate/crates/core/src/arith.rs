//! Integer helpers: primality, perfect powers, valuations.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::numerics::PosRational;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the witness set is exact for every 64-bit input.
pub fn is_prime_u64(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &w in &WITNESSES {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes `<= limit`, by a plain sieve.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut sieve = vec![true; limit + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= limit {
        if sieve[i] {
            let mut j = i * i;
            while j <= limit {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &p)| p.then_some(i as u64))
        .collect()
}

/// Exact `k`-th root if `m` is a perfect `k`-th power.
pub fn exact_root(m: &BigUint, k: u32) -> Option<BigUint> {
    let r = m.nth_root(k);
    (Pow::pow(&r, k) == *m).then_some(r)
}

/// Writes `m >= 2` as `base^exp` with `exp` maximal, so `base` is not a perfect power.
pub fn perfect_power(m: &BigUint) -> (BigUint, u64) {
    assert!(*m >= BigUint::from(2u32), "perfect_power needs m >= 2");
    let mut base = m.clone();
    let mut exp = 1u64;
    for l in primes_up_to(m.bits()) {
        if base.bits() < l {
            break;
        }
        while let Some(r) = exact_root(&base, l as u32) {
            if r <= BigUint::one() {
                break;
            }
            base = r;
            exp *= l;
        }
    }
    (base, exp)
}

/// Writes a positive rational `q != 1` as `base^exp` with `base > 1` not a perfect
/// power and `exp` a nonzero integer. Returns `None` for `q = 1`.
pub fn rational_perfect_power(q: &PosRational) -> Option<(PosRational, i64)> {
    if q.is_one() {
        return None;
    }
    let one = BigUint::one();
    let (gn, kn) = if *q.num() > one {
        perfect_power(q.num())
    } else {
        (one.clone(), 0)
    };
    let (gd, kd) = if *q.den() > one {
        perfect_power(q.den())
    } else {
        (one.clone(), 0)
    };
    let k = kn.gcd(&kd);
    let num = Pow::pow(&gn, (kn / k) as u32);
    let den = Pow::pow(&gd, (kd / k) as u32);
    let base = PosRational::new(num, den).expect("nonzero parts");
    if base > PosRational::one() {
        Some((base, k as i64))
    } else {
        Some((base.recip(), -(k as i64)))
    }
}

/// Largest `K` such that the positive rational `q` is a `K`-th power; `None` for `q = 1`
/// (which is a `K`-th power for every `K`).
pub fn power_exponent(q: &PosRational) -> Option<u64> {
    rational_perfect_power(q).map(|(_, k)| k.unsigned_abs())
}

/// `p`-adic valuation of a nonzero natural number.
pub fn vp_uint(m: &BigUint, p: u64) -> u64 {
    debug_assert!(!m.is_zero());
    let p = BigUint::from(p);
    let mut m = m.clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// `p`-adic valuation of a nonzero integer.
pub fn vp_bigint(m: &BigInt, p: u64) -> u64 {
    vp_uint(m.magnitude(), p)
}

pub fn big_pow(base: &BigUint, exp: u64) -> BigUint {
    Pow::pow(base, BigUint::from(exp))
}
