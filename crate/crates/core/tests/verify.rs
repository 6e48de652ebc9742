mod common;

use std::path::Path;

use common::*;
use simdim::resolving::SearchConfig;
use simdim::verify::*;
use simdim::{Error, Graph, GraphFamily};

fn bundled() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("suites/desk.suite")
}

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

#[test]
fn bundled_suite_passes() {
    let suite = load_suite(&bundled()).unwrap();
    assert!(suite.scenarios.len() >= 40);
    let reports = run_suite(&suite, true);
    for r in &reports {
        assert!(!r.outcome.is_failure(), "{r}");
    }
    let ids: Vec<&str> = reports.iter().map(|r| r.id.as_str()).collect();
    let declared: Vec<&str> = suite.scenarios.iter().map(|s| s.id.as_str()).collect();
    assert_eq!(ids, declared);
    assert!(reports.iter().any(|r| r.outcome == Outcome::Inapplicable));
}

#[test]
fn sequential_run_matches_parallel() {
    let suite = load_suite(&bundled()).unwrap();
    let a = run_suite(&suite, true);
    let b = run_suite(&suite, false);
    for (x, y) in a.iter().zip(&b) {
        assert_eq!((x.outcome, &x.computed, &x.witness), (y.outcome, &y.computed, &y.witness), "{}", x.id);
    }
}

#[test]
fn falsified_expectation_fails() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("suites");
    let suite =
        parse_suite("load three_graphs.graphs as trio\nscenario wrong REMARK_BOUNDS h=@trio expect=6\n", &dir).unwrap();
    let reports = run_suite(&suite, true);
    assert_eq!(reports[0].outcome, Outcome::Fail);
    assert!(!all_passed(&reports));
    assert!(reports[0].to_string().starts_with("FAIL wrong"));
}

#[test]
fn empty_suite_passes_vacuously() {
    let suite = parse_suite("# nothing\n\n", Path::new(".")).unwrap();
    assert!(suite.scenarios.is_empty());
    assert!(all_passed(&run_suite(&suite, true)));
}

#[test]
fn parse_errors_report_lines() {
    let err = parse_suite("\nscenario a ADIM_FORMULA n=5\nscenario a ADIM_FORMULA n=6\n", Path::new(".")).unwrap_err();
    assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    let err = parse_suite("scenario x NOT_A_CLAIM\n", Path::new(".")).unwrap_err();
    assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
    let err = parse_suite("load missing.graphs\n", Path::new("/nonexistent")).unwrap_err();
    assert!(matches!(err, Error::Io { .. }), "{err}");
}

#[test]
fn wrong_case_is_inapplicable() {
    let g = GraphFamily::singleton(Graph::path(2).unwrap());
    let h = GraphFamily::singleton(Graph::complete(3).unwrap());
    let err = check_f_case(&g, &h, FCase::Zero, &cfg()).unwrap_err();
    let r = VerificationReport::from_error(Claim::FZero, &err);
    assert_eq!(r.outcome, Outcome::Inapplicable);
    assert!(!r.outcome.is_failure());
}

#[test]
fn direct_checks() {
    let p3 = GraphFamily::singleton(Graph::path(3).unwrap());
    let r = check_p5c5(&Graph::path(3).unwrap(), &cfg()).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.computed, "7");
    let r = check_sd_corona(&p3, &GraphFamily::singleton(Graph::cycle(4).unwrap()), &cfg()).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.computed, "6");
    let r = check_mod5(8, &cfg()).unwrap();
    assert_eq!(r.computed, "P8:no,C8:no,C8:3-gap");
    let r = check_adim_formula(9, &cfg()).unwrap();
    assert_eq!(r.expected, "P9:4,C9:4");
    assert!(r.passed());
}

#[test]
fn claim_names_round_trip() {
    for c in Claim::ALL {
        assert_eq!(c.name().parse::<Claim>().unwrap(), c);
    }
}

#[test]
fn perm_family_given_f_certifies_members() {
    let c8 = Graph::cycle(8).unwrap();
    let mut members = vec![c8.clone()];
    members.extend(c8_members());
    let fam = GraphFamily::new(members).unwrap();
    let f = simdim::families::Permutation::from_image(vec![0, 5, 2, 7, 1, 3, 6, 4]).unwrap();
    let r = check_perm_family(&c8, &set(8, &[0, 2, 6]), &fam, Some(&f), &cfg()).unwrap();
    assert!(r.passed(), "{r}");
    assert!(r.notes.iter().any(|n| n.contains("H1,H2,H3,H4")), "{:?}", r.notes);
}
