//! Measure bounds against independent high-precision values and pinned examples.

mod common;

use common::{assert_encloses, dy, ten_pow, u};
use irrmeasure::measures::{
    best_bound_padic, best_bound_real, bound_53, bound_61, bound_bm, bound_thm21, bound_thm31, check_cor22,
    check_cor32, degree_check, liouville, real_root_degree,
};
use irrmeasure::numerics::{eta_real, BoundedReal};
use irrmeasure::report::TheoremId;

const PREC: u32 = 256;

#[test]
fn padic_bounds_match_reference() {
    let r = bound_thm31(&u(26), &u(1), 5, &u(3), PREC).unwrap();
    assert!(r.applicable && r.strict);
    assert_eq!(r.note.as_deref(), Some("max branch: 4"));
    assert_encloses(r.bound.as_ref().unwrap(), "871.2885033531005865106536529377882300872763357605705116264401100971558", 60, 60);
    let r = bound_61(&u(26), &u(1), 5, &u(3), PREC).unwrap();
    assert_encloses(r.bound.as_ref().unwrap(), "871.4909402730246340446942323181176418507724501508494545891785952528476", 60, 60);
}

#[test]
fn classical_bound_matches_reference() {
    let r = bound_bm(&u(109), &u(100), &u(5), PREC).unwrap();
    assert!(r.applicable);
    assert_encloses(r.bound.as_ref().unwrap(), "65.61392243513606408901146290631537536843078653981148048921953360621979", 60, 60);
    // b = 100 is far below n^(216 n^2); reported, not blocking
    let wide = r.conditions.iter().find(|c| c.name == "b > n^(216 n^2)").unwrap();
    assert_eq!(wide.detail.as_deref(), Some("does not hold"));
}

#[test]
fn closeness_bound_log_branch_matches_reference() {
    let r = bound_thm21(&u(100), &u(90), &u(1_000_000_000_000), PREC).unwrap();
    assert_eq!(r.note.as_deref(), Some("max branch: log 2n / (eta log a)"));
    assert_encloses(r.bound.as_ref().unwrap(), "10622.33679458659536660694656838396275181961799552555258995783639939129", 60, 55);
}

#[test]
fn alternative_bound_both_branches() {
    let r = bound_53(&u(100), &u(90), &u(100), PREC).unwrap();
    assert!(r.note.as_deref().unwrap().starts_with("max branch: 372"));
    assert_eq!(r.bound.unwrap(), BoundedReal::from_u64(15_757_920));
    let r = bound_53(&u(100), &u(90), &ten_pow(400), PREC).unwrap();
    let note = r.note.as_deref().unwrap();
    assert!(note.starts_with("max branch: log term"), "{note}");
    assert!(note.ends_with("T2.1 is smaller"), "{note}");
    assert_encloses(r.bound.as_ref().unwrap(), "16971016.54342669073838724890324260683379774808900045038801654891780144", 60, 50);
}

#[test]
fn eta_of_pinned_pair() {
    // 1 - log 9 / log 1009
    let eta = eta_real(&u(1009), &u(1000), PREC).unwrap();
    assert_encloses(&eta.value, "0.6823311975597501414699164963248154654980467713680457267740922899232277", 60, 60);
}

#[test]
fn closeness_theorem_examples() {
    let r = bound_thm21(&u(100), &u(90), &u(100), PREC).unwrap();
    assert_eq!(r.bound.unwrap(), BoundedReal::from_u64(7020));
    assert_eq!(r.note.as_deref(), Some("max branch: 10"));
    let r = bound_thm21(&u(20), &u(10), &u(5), PREC).unwrap();
    assert!(!r.applicable);
    assert!(r.failed_conditions().contains(&"a < 6b/5".to_string()));
    // 289/256 = (17/16)^2: the fourth root has degree 2, the square root is rational
    let r = bound_thm21(&u(289), &u(256), &u(4), PREC).unwrap();
    assert_eq!(real_root_degree(&u(289), &u(256), &u(4)).unwrap(), u(2));
    assert!(r.applicable);
    let r = bound_thm21(&u(289), &u(256), &u(2), PREC).unwrap();
    assert_eq!(r.failed_conditions(), vec!["n >= 3".to_string(), "root irrational".to_string()]);
}

#[test]
fn corollary_examples() {
    let r = check_cor22(&u(100), &u(91), &u(1_000_000_000), PREC).unwrap();
    assert!(r.applicable);
    assert_eq!(r.bound.unwrap(), BoundedReal::from_u64(7020));
    let r = check_cor22(&u(100), &u(91), &u(100_000_000_000), PREC).unwrap();
    assert_eq!(r.failed_conditions(), vec!["a^5 >= 2n".to_string()]);

    let r = check_cor32(5, &u(1), 1, &u(7), PREC).unwrap();
    assert!(r.applicable && r.strict);
    assert_eq!(r.note.as_deref(), Some("via 861/eta with eta > 1/2"));
    let r = check_cor32(3, &u(1), 1, &u(7), PREC).unwrap();
    assert_eq!(r.note.as_deref(), Some("via Liouville (n < 1722)"));
    let r = check_cor32(5, &u(5), 1, &u(7), PREC).unwrap();
    assert_eq!(r.failed_conditions(), vec!["1 <= c < p^k".to_string()]);
    let r = check_cor32(5, &u(1), 1, &u(313), PREC).unwrap();
    assert_eq!(r.failed_conditions(), vec!["p^(4k) > 2n".to_string()]);
}

#[test]
fn degrees_and_liouville() {
    assert!(degree_check(&u(2), &u(1), &u(3)).unwrap());
    assert!(!degree_check(&u(27), &u(8), &u(3)).unwrap());
    assert_eq!(real_root_degree(&u(8), &u(1), &u(6)).unwrap(), u(2));
    let l = liouville(&u(7)).unwrap();
    assert_eq!(l.bound, Some(BoundedReal::from_u64(7)));
    assert!(liouville(&u(1)).is_err());
}

#[test]
fn best_bound_selection() {
    let r = best_bound_real(&u(100), &u(90), &u(1_000_000), PREC).unwrap();
    assert_eq!(r.best_theorem, Some(TheoremId::Thm21));
    assert_eq!(r.best, Some(BoundedReal::from_u64(7020)));
    let r = best_bound_real(&u(101), &u(100), &u(3), PREC).unwrap();
    assert_eq!(r.best_theorem, Some(TheoremId::Liouville));
    let r = best_bound_padic(&u(626), &u(1), 5, &u(100_001), PREC).unwrap();
    assert_eq!(r.best_theorem, Some(TheoremId::Thm31));
    assert!(r.best.unwrap().hi() < &dy(1722));
    // every report carries the Liouville baseline
    assert!(r.reports.iter().all(|x| x.liouville == u(100_001)));
}
