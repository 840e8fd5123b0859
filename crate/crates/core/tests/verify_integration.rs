//! Continued fractions and empirical exponents against independent references.

mod common;

use common::{assert_encloses, dy, u};
use irrmeasure::measures::{bound_thm21, bound_thm31};
use irrmeasure::numerics::BoundedReal;
use irrmeasure::padic::vp_power_pair;
use irrmeasure::verify::{cf_expand, max_exponent, measure_exponents_padic, measure_exponents_real, real_root};
use num_bigint::BigInt;

#[test]
fn real_roots() {
    assert_eq!(real_root(&u(8), &u(1), 3, 128).unwrap(), BoundedReal::from_u64(2));
    let r = real_root(&u(101), &u(100), 3, 256).unwrap();
    assert_encloses(&r, "1.00332228354208919926314821197439699367706986688504735806488892251111", 66, 70);
    let s = real_root(&u(2), &u(1), 2, 200).unwrap();
    assert!(s.width() <= irrmeasure::numerics::Dyadic::half_pow(200));
    assert_encloses(&s, "1.414213562373095048801688724209698078569671875376948073176679737990732", 60, 60);
}

#[test]
fn cube_root_quotients() {
    let cf = cf_expand(&u(2), &u(1), 3, 7).unwrap();
    let q: Vec<u64> = cf.quotients.iter().map(|x| u64::try_from(x).unwrap()).collect();
    assert_eq!(q, [1, 3, 1, 5, 1, 1, 4]);
    let cf = cf_expand(&u(101), &u(100), 3, 10).unwrap();
    let q: Vec<u64> = cf.quotients.iter().map(|x| u64::try_from(x).unwrap()).collect();
    assert_eq!(q, [1, 300, 1, 451, 4, 21, 3, 1, 1, 150]);
    assert!(cf_expand(&u(4), &u(1), 2, 3).is_err());
}

#[test]
fn real_exponents_stay_below_closeness_bound() {
    let samples = measure_exponents_real(&u(101), &u(100), 3, 50, 128).unwrap();
    assert_eq!(samples.len(), 49);
    // convergents are best approximations: |ζ - p/q| < 1/q^2
    assert!(samples.iter().all(|s| s.exponent.lo() >= &dy(2)));
    let top = max_exponent(&samples).unwrap();
    assert_eq!((top.x.clone(), top.y.clone()), (BigInt::from(302), BigInt::from(301)));
    assert_encloses(&top.exponent, "3.071334016216364297931327463706478220884", 38, 30);
    let t21 = bound_thm21(&u(101), &u(100), &u(3), 128).unwrap();
    assert!(top.exponent.hi() < t21.bound.unwrap().hi());
}

#[test]
fn cube_root_of_two_exponents() {
    let samples = measure_exponents_real(&u(2), &u(1), 3, 20, 128).unwrap();
    assert_eq!(samples.len(), 19);
    // the small convergent 5/4 is unusually good; all later ones stay in [2, 3)
    let top = max_exponent(&samples).unwrap();
    assert_eq!((top.x.clone(), top.y.clone()), (BigInt::from(5), BigInt::from(4)));
    assert_encloses(&top.exponent, "3.3276457414", 10, 30);
    assert!(samples[2..].iter().all(|s| s.exponent.hi() < &dy(3) && s.exponent.lo() >= &dy(2)));
    let last = samples.last().unwrap();
    assert_eq!(last.y, BigInt::from(1_070_524_477u64));
    assert_encloses(&last.exponent, "2.05363822139", 11, 30);
}

#[test]
fn padic_scan() {
    let samples = measure_exponents_padic(&u(6), &u(1), 5, 3, 20, 128).unwrap();
    let eleven = samples.iter().find(|s| s.x == BigInt::from(11) && s.y == BigInt::from(1)).unwrap();
    assert!(eleven.valuation.unwrap() >= 2);
    let mut sorted = samples.clone();
    sorted.sort_by(|s, t| (&s.x, &s.y).cmp(&(&t.x, &t.y)));
    assert_eq!(sorted, samples);
    // v_p(ζ - x/y) >= 1 and agrees with v_p(x/y - 1) when that is below E = 1
    for s in &samples {
        let v = s.valuation.unwrap();
        assert!(v >= 1);
        let (v1, v2) = vp_power_pair(&s.x, &s.y, 3, 5).unwrap();
        assert_eq!(v1.v, v2.v);
    }
    // a = 26: ζ ≡ 1 (mod 25), and every sample sits below the strict T3.1 bound
    let samples = measure_exponents_padic(&u(26), &u(1), 5, 3, 30, 128).unwrap();
    let bound = bound_thm31(&u(26), &u(1), 5, &u(3), 128).unwrap().bound.unwrap();
    assert!(samples.iter().all(|s| s.exponent.hi() < bound.hi()));
}
