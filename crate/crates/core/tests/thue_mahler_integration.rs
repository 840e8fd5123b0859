//! Family hypotheses, desk-scale search and the factor decomposition.

mod common;

use common::{i, q, u};
use irrmeasure::report::{failed_names, Status};
use irrmeasure::thue_mahler::{check_thm41, eq71_decompose, strip_primes, tm_search, TMInstance};
use irrmeasure::Error;
use num_bigint::BigInt;
use num_rational::BigRational;

fn family(d: i64, n: u64, primes: Vec<u64>, eta: (u64, u64), x: u64) -> TMInstance {
    TMInstance::new(u(1000), u(9), i(d), n, primes, q(eta.0, eta.1), x, None).unwrap()
}

#[test]
fn hypothesis_ledger() {
    let c = check_thm41(&family(1, 25, vec![3], (3, 10), 10)).unwrap();
    assert!(failed_names(&c).is_empty());
    assert!(c.iter().any(|c| c.status == Status::Unchecked));
    // 9^10 = 3486784401 > 1009^3 = 1027243729, just barely
    assert!(c.iter().any(|c| c.name.starts_with("log |c|_3^-1") && c.status == Status::Pass));
    let c = check_thm41(&family(1, 25, vec![3], (1, 2), 10)).unwrap();
    assert_eq!(failed_names(&c)[0], "eta in (0, 1/(s+1))");
    let c = check_thm41(&family(1, 9, vec![3], (3, 10), 10)).unwrap();
    assert_eq!(failed_names(&c), vec!["gcd(n, p_1...p_s (p_1-1)...(p_s-1)) = 1".to_string()]);
    // η = 1/3 is too large for 9 > 1009^η
    let c = check_thm41(&family(1, 25, vec![3], (1, 3), 10)).unwrap();
    assert_eq!(failed_names(&c), vec!["log |c|_3^-1 / log(b+c) > eta".to_string()]);
}

#[test]
fn malformed_instances_rejected() {
    assert!(TMInstance::new(u(1), u(9), i(1), 25, vec![3], q(1, 4), 5, None).is_err());
    assert!(TMInstance::new(u(1000), u(9), i(0), 25, vec![3], q(1, 4), 5, None).is_err());
    assert!(TMInstance::new(u(1000), u(9), i(1), 25, vec![3, 3], q(1, 4), 5, None).is_err());
    assert!(TMInstance::new(u(1000), u(9), i(1), 25, vec![4], q(1, 4), 5, None).is_err());
}

#[test]
fn strip_examples() {
    assert_eq!(strip_primes(&i(360), &[2, 3]).unwrap(), (i(5), vec![3, 2]));
    assert_eq!(strip_primes(&i(-7), &[2]).unwrap(), (i(-7), vec![0]));
    assert_eq!(strip_primes(&i(3_486_784_401), &[3]).unwrap(), (i(1), vec![20]));
    assert!(strip_primes(&i(0), &[2]).is_err());
}

#[test]
fn pinned_family_search() {
    let r = tm_search(&family(1, 25, vec![3], (3, 10), 50)).unwrap();
    assert!(r.degenerate.is_empty());
    assert_eq!(r.solutions.len(), 1);
    let s = &r.solutions[0];
    assert_eq!((s.x.clone(), s.y.clone(), s.z.clone()), (i(1), i(1), vec![2]));
    // d = -1 with odd n: x = y = -1 gives -9 = -3^2
    let r = tm_search(&family(-1, 25, vec![3], (3, 10), 20)).unwrap();
    let found: Vec<(BigInt, BigInt, Vec<u64>)> = r.solutions.iter().map(|s| (s.x.clone(), s.y.clone(), s.z.clone())).collect();
    assert_eq!(found, vec![(i(-1), i(-1), vec![2])]);
    // d = 9 absorbs the whole of c: z = 0
    let r = tm_search(&family(9, 25, vec![3], (3, 10), 20)).unwrap();
    let found: Vec<(BigInt, BigInt, Vec<u64>)> = r.solutions.iter().map(|s| (s.x.clone(), s.y.clone(), s.z.clone())).collect();
    assert_eq!(found, vec![(i(1), i(1), vec![0])]);
}

#[test]
fn search_respects_exponent_cap() {
    let capped = TMInstance::new(u(1000), u(9), i(1), 25, vec![3], q(3, 10), 5, Some(1)).unwrap();
    assert!(tm_search(&capped).unwrap().solutions.is_empty());
}

#[test]
fn oversized_search_is_refused() {
    let huge = TMInstance::new(u(1000), u(9), i(1), 200_000, vec![3], q(3, 10), 100, None).unwrap();
    assert!(matches!(tm_search(&huge), Err(Error::SizeCap(_))));
}

#[test]
fn decomposition() {
    let inst = family(1, 5, vec![3], (3, 10), 10);
    let r = eq71_decompose(&inst, &i(1), &i(1)).unwrap();
    assert_eq!(r.value, i(9));
    assert_eq!(r.padic_abs[0], q(1, 9));
    assert_eq!(r.product, BigRational::from_integer(i(1)));
    assert!(r.identity_holds && r.is_solution);

    // 1009·2^5 - 1000·3^5 = -210712 = -(2^3 · 26339), prime to 3
    let r = eq71_decompose(&inst, &i(2), &i(3)).unwrap();
    assert_eq!(r.value, i(-210_712));
    assert_eq!(r.valuations[0].v, 0);
    assert_eq!(r.archimedean, BigRational::from_integer(i(210_712)));
    assert_eq!(r.residual, i(-210_712));
    assert!(r.identity_holds && !r.is_solution);

    assert!(eq71_decompose(&inst, &i(1), &i(0)).is_err());
}
