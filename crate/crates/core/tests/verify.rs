use qonsager::cli::parse;
use qonsager::presentations::PresentationId;
use qonsager::quotient::build;
use qonsager::verify::{factor_span_rank, run_suite, CheckName, CheckStatus, Verifier, VerifyError};

#[test]
fn pbw_dims_at_two() {
    let reports = run_suite(&["check_pbw_dims"], Some(2)).unwrap();
    assert_eq!(reports.len(), 1);
    let r = &reports[0];
    assert_eq!(r.status, CheckStatus::Pass);
    assert_eq!(r.degree, 2);
    assert!(r.witnesses.is_empty());
    assert!(r.details.iter().any(|d| d.contains("[1, 3, 8]")), "{:?}", r.details);
}

#[test]
fn unknown_and_empty() {
    assert!(matches!(run_suite(&["check_nope"], None), Err(VerifyError::UnknownCheck(s)) if s == "check_nope"));
    assert!(run_suite(&[], None).unwrap().is_empty());
}

#[test]
fn names_parse_with_or_without_prefix() {
    for c in CheckName::ALL {
        assert_eq!(c.name().parse::<CheckName>().unwrap(), c);
        assert_eq!(c.name()["check_".len()..].parse::<CheckName>().unwrap(), c);
        assert_eq!(c.name().to_uppercase().parse::<CheckName>().unwrap(), c);
    }
}

#[test]
fn suite_passes_at_six() {
    let v = Verifier::new();
    let reports = v.run_suite(&CheckName::ALL, Some(6));
    assert_eq!(reports.len(), CheckName::ALL.len());
    for (r, c) in reports.iter().zip(CheckName::ALL) {
        assert_eq!(r.check, c.name(), "reports keep input order");
        assert!(r.passed(), "{}: {:?} {:?}", r.check, r.status, r.details);
        assert_eq!(r.degree, 6);
    }
}

#[test]
fn mutation_is_detected() {
    let v = Verifier::new().mutate(true);
    let reports = v.run_suite(&CheckName::ALL, Some(6));
    for (r, c) in reports.iter().zip(CheckName::ALL) {
        if c.has_identities() {
            assert_eq!(r.status, CheckStatus::Fail, "{}", r.check);
            assert!(!r.witnesses.is_empty(), "{}", r.check);
            assert!(r.witnesses.iter().all(|w| !w.normal_form.is_zero()), "{}", r.check);
        } else {
            assert!(r.passed(), "{}", r.check);
        }
    }
}

/// A witness expression, re-parsed and reduced, gives the recorded normal form.
#[test]
fn witnesses_reproduce() {
    let v = Verifier::new().mutate(true);
    let r = v.run(CheckName::Newrels1, Some(4));
    assert!(!r.witnesses.is_empty());
    for w in r.witnesses.iter().take(3) {
        let p = w.presentation;
        let x = parse(&w.expression.to_string(), p.alphabet()).unwrap();
        assert_eq!(x, w.expression);
        let tq = build(p, 4, 0).unwrap();
        assert_eq!(tq.normal_form(&x).unwrap(), w.normal_form);
    }
}

#[test]
fn factor_span_small_degree() {
    let tq = build(PresentationId::EssCompact, 2, 0).unwrap();
    assert_eq!(factor_span_rank(&tq, 2, false).unwrap(), 7);
    assert_eq!(factor_span_rank(&tq, 2, true).unwrap(), 8);
    let tq = build(PresentationId::AltFull, 2, 0).unwrap();
    assert_eq!(factor_span_rank(&tq, 2, false).unwrap(), 7);
    assert_eq!(factor_span_rank(&tq, 2, true).unwrap(), 8);
}

#[test]
fn json_shape() {
    let reports = run_suite(&["central_G1"], Some(4)).unwrap();
    let j = reports[0].to_json();
    let obj = j.as_object().unwrap();
    let keys: Vec<&str> = obj.keys().map(|s| s.as_str()).collect();
    assert_eq!(keys, ["D", "H", "check", "details", "millis", "presentation", "status", "witnesses"]);
    assert_eq!(obj["status"], "pass");
    assert_eq!(obj["check"], "check_central_G1");
    assert_eq!(obj["D"], 4);
}

#[test]
fn fixed_headroom_is_reported() {
    let v = Verifier::new().headroom(Some(1));
    let r = v.run(CheckName::Newrels1, Some(4));
    assert!(r.passed());
    assert_eq!(r.headroom, 1);
}
