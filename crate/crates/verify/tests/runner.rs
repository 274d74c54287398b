use idxsum_core::arith::{carmichael_lambda, divisors};
use idxsum_verify::{default_registry, run_suite, SuiteConfig, VerificationTask, VerifyError};

fn run(tasks: Vec<VerificationTask>, jobs: usize) -> idxsum_verify::VerificationReport {
    run_suite(&SuiteConfig { tasks, jobs }, &default_registry()).unwrap()
}

#[test]
fn registry_has_every_theorem() {
    let ids = default_registry().ids();
    assert_eq!(ids.len(), idxsum_core::TheoremId::ALL.len());
}

#[test]
fn unknown_theorem_is_an_error() {
    let err = run_suite(
        &SuiteConfig {
            tasks: vec![VerificationTask::new("T9.9", 1, 10)],
            jobs: 1,
        },
        &default_registry(),
    )
    .unwrap_err();
    assert_eq!(err, VerifyError::UnknownTheorem("T9.9".into()));
}

#[test]
fn zero_lower_bound_is_rejected() {
    let err = run_suite(
        &SuiteConfig {
            tasks: vec![VerificationTask::new("T1.5", 0, 10)],
            jobs: 1,
        },
        &default_registry(),
    )
    .unwrap_err();
    assert!(matches!(err, VerifyError::InvalidRange(0, 10)));
}

#[test]
fn ids_resolve_case_insensitively() {
    let r = run(vec![VerificationTask::new("gausscai", 1, 50)], 1);
    assert_eq!(r.per_theorem[0].theorem_id, "GaussCai");
}

#[test]
fn empty_range_passes_with_no_cases() {
    let r = run(vec![VerificationTask::new("T1.5", 10, 9)], 1);
    assert!(r.passed());
    assert_eq!(r.total_cases(), 0);
}

#[test]
fn product_check_covers_every_divisor_of_lambda() {
    let r = run(vec![VerificationTask::new("T1.5", 1, 100)], 2);
    let expected: u64 = (1..=100u64)
        .map(|m| divisors(carmichael_lambda(m)).len() as u64)
        .sum();
    let t = r.theorem("T1.5").unwrap();
    assert_eq!(t.cases + t.skips, expected);
    assert!(t.passed());
}

#[test]
fn prime_power_check_on_eight() {
    let r = run(vec![VerificationTask::new("T1.7", 8, 8)], 1);
    let t = r.theorem("T1.7").unwrap();
    // lambda(8) = 2, so delta in {1, 2}.
    assert_eq!(t.cases, 2);
    assert!(t.passed());
}

#[test]
fn general_sum_notes_even_moduli_outside_scope() {
    let r = run(vec![VerificationTask::new("T1.9", 12, 12)], 1);
    let t = r.theorem("T1.9").unwrap();
    assert!(t.skips > 0);
    let note = t
        .scope_notes
        .iter()
        .find(|n| n.delta == 2 && n.asserted_modulus == 4)
        .expect("m = 12, delta = 2 disagrees at p = 2");
    assert_eq!((note.formula, note.oracle), (1, 3));
}

#[test]
fn report_is_independent_of_worker_count() {
    let tasks = |seed| {
        ["T1.5", "T1.6", "T1.9", "L2.2", "L2.4", "L2.5", "CountClass"]
            .iter()
            .map(|id| VerificationTask::new(*id, 1, 300).with_seed(seed))
            .collect::<Vec<_>>()
    };
    let a = run(tasks(7), 1).without_timing();
    let b = run(tasks(7), 4).without_timing();
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn json_round_trips() {
    let r = run(vec![VerificationTask::new("T1.9", 1, 80)], 1);
    let back: idxsum_verify::VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
}

#[test]
fn uniform_suite_uses_one_range() {
    let c = SuiteConfig::uniform(&["T1.5", "L2.3"], 40, 1);
    assert!(c.tasks.iter().all(|t| (t.lo, t.hi) == (1, 40)));
}
