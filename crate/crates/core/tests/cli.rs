use proptest::prelude::*;

use qonsager::cli::{parse, run, ParseError};
use qonsager::elements::{b_element, essential_w, BKind};
use qonsager::freealg::{q_commutator, Alphabet, Generator, NcPoly, Word};
use qonsager::ring::{IntPoly, RationalFunction};

fn gen(a: Alphabet, g: Generator) -> NcPoly {
    NcPoly::gen(a, g)
}

#[test]
fn parse_examples() {
    let a = Alphabet::Alt;
    let x = parse("W[1]*W[0] - q^2*G[3]", a).unwrap();
    let want = gen(a, Generator::w(1)) * gen(a, Generator::w(0))
        - gen(a, Generator::g(3)).scale(&RationalFunction::q_pow(2));
    assert_eq!(x, want);
    let o = Alphabet::Oq;
    assert_eq!(
        parse("[W[0], W[1]]_q", o).unwrap(),
        q_commutator(&gen(o, Generator::w(0)), &gen(o, Generator::w(1))).unwrap()
    );
    assert_eq!(parse("[W[0], W[1]]", o).unwrap(), parse("W[0]*W[1] - W[1]*W[0]", o).unwrap());
    assert_eq!(
        parse("[W[0], W[1]]_q-1", o).unwrap(),
        parse("q^-1*W[0]*W[1] - q*W[1]*W[0]", o).unwrap()
    );
    assert!(parse("W[0]*W[0] - W[0]^2", o).unwrap().is_zero());
    assert_eq!(parse("(q - q^-1)/(q^2 - q^-2)", o).unwrap(), parse("1/(q + q^-1)", o).unwrap());
    assert_eq!(parse("W[-1]", Alphabet::Ess).unwrap(), essential_w(-1));
    assert_eq!(parse("B[a0,2]", Alphabet::Ess).unwrap(), b_element(BKind::Alpha0, 2));
    assert_eq!(parse("z[2]*z[1]", Alphabet::Z).unwrap(), NcPoly::word(
        Alphabet::Z,
        Word::from_slice(&[Generator::z(2), Generator::z(1)]),
    ));
    assert!(parse("Gt[0]", a).unwrap().as_scalar().is_some());
}

#[test]
fn parse_errors() {
    assert!(matches!(parse("W[", Alphabet::Alt), Err(ParseError::Syntax { pos: 2, .. })));
    assert!(matches!(parse("W[2]", Alphabet::Oq), Err(ParseError::IndexOutOfRange { .. })));
    assert!(matches!(parse("X[1]", Alphabet::Alt), Err(ParseError::Syntax { pos: 0, .. })));
    assert!(matches!(parse("G[1]", Alphabet::Oq), Err(ParseError::UnknownGenerator { .. })));
    assert!(matches!(parse("W[0]/W[1]", Alphabet::Alt), Err(ParseError::NotScalar { .. })));
    assert!(parse("W[0] +", Alphabet::Alt).is_err());
    assert!(parse("1/(q - q)", Alphabet::Alt).is_err());
}

fn coeff() -> impl Strategy<Value = RationalFunction> {
    let poly = prop::collection::vec(-3i64..=3, 1..3).prop_map(|v| IntPoly::from_i64s(&v));
    (-3i32..=3, poly.clone(), poly).prop_map(|(s, n, m)| {
        let m = if m.is_zero() { IntPoly::one() } else { m };
        RationalFunction::from_parts(s, n, m)
    })
}

fn alt_poly() -> impl Strategy<Value = NcPoly> {
    let gens = [Generator::w(0), Generator::w(1), Generator::w(-2), Generator::w(3), Generator::g(1), Generator::gt(2)];
    prop::collection::vec((prop::collection::vec(0..gens.len(), 0..4), coeff()), 0..4).prop_map(move |ts| {
        NcPoly::from_terms(
            Alphabet::Alt,
            ts.into_iter().map(|(ix, c)| (Word::from_slice(&ix.iter().map(|&i| gens[i]).collect::<Vec<_>>()), c)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn render_parse_round_trip(x in alt_poly()) {
        let s = x.to_string();
        let y = parse(&s, Alphabet::Alt).unwrap();
        prop_assert_eq!(&y, &x, "rendered as {}", s);
        prop_assert_eq!(y.to_string(), s);
    }
}

fn run_args(args: &[&str]) -> qonsager::cli::Outcome {
    run(std::iter::once("oqcalc").chain(args.iter().copied()))
}

#[test]
fn normalize_command() {
    let o = run_args(&["normalize", "W[1]*W[0]"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.trim(), "W[0]*W[1] + ((-q)/(q^2 + 1))*Gt[1] + ((q)/(q^2 + 1))*G[1]");
    let o = run_args(&["--format", "json", "normalize", "W[0]*W[1]", "-p", "OQ_DG"]);
    assert_eq!(o.code, 0);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["normal_form"], "W[0]*W[1]");
    assert_eq!(v["presentation"], "OQ_DG");
}

#[test]
fn equal_command() {
    let o = run_args(&["equal", "(q + q^-1)*W[1]*W[0]", "(q + q^-1)*W[0]*W[1] - Gt[1] + G[1]"]);
    assert_eq!(o.code, 0, "{}{}", o.stdout, o.stderr);
    assert!(o.stdout.starts_with("equal"));
    let o = run_args(&["equal", "W[1]*W[0]", "W[0]*W[1] + (G[1]-Gt[1])/(q+q^-1)", "-p", "ALT_FULL", "-d", "4"]);
    assert_eq!(o.code, 0, "{}{}", o.stdout, o.stderr);
    assert!(o.stdout.starts_with("equal"));
    let o = run_args(&["equal", "W[0]*W[1]", "W[1]*W[0]"]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.starts_with("not equal"));
}

#[test]
fn dims_command() {
    let o = run_args(&["dims", "-d", "4"]);
    assert_eq!((o.code, o.stdout.trim()), (0, "1 3 8 18 38"));
    let o = run_args(&["dims", "-p", "POLY_Z", "-d", "5"]);
    assert_eq!(o.stdout.trim(), "1 2 4 7 12 19");
    let o = run_args(&["dims", "-p", "OQ_DG", "-d", "4"]);
    assert_eq!(o.stdout.trim(), "1 3 7 15 29");
}

#[test]
fn element_command() {
    let o = run_args(&["element", "W[-1]"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.trim(), essential_w(-1).to_string());
}

#[test]
fn error_exit_codes() {
    let o = run_args(&["normalize", "W["]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("position 2"), "{}", o.stderr);
    let o = run_args(&["normalize", "W[5]", "-p", "OQ_DG"]);
    assert_eq!(o.code, 2);
    let o = run_args(&["verify", "--checks", "nope"]);
    assert_eq!(o.code, 2);
    let o = run_args(&["normalize", "W[0]", "-p", "NOPE"]);
    assert_eq!(o.code, 2);
}

#[test]
fn verify_command_codes() {
    let o = run_args(&["verify", "--checks", "newrels1,central_G1", "-d", "4"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    let o = run_args(&["verify", "--checks", "newrels1", "-d", "4", "--mutate"]);
    assert_eq!(o.code, 1);
}

#[test]
fn verify_all_at_six_is_all_pass_json() {
    let o = run_args(&["--format", "json", "verify", "-d", "6"]);
    assert_eq!(o.code, 0);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    let arr = v.as_array().unwrap();
    assert!(arr.len() >= 15);
    assert!(arr.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn json_output_is_byte_deterministic() {
    let args = ["--format", "json", "verify", "--checks", "pbw_dims,newrels1,morphisms", "-d", "4", "--no-timings"];
    let a = run_args(&args);
    let b = run_args(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 3);
    assert!(arr.iter().all(|r| r["millis"] == 0 && r["status"] == "pass"));
}
