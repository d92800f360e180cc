//! One PASS/FAIL line per acceptance criterion. Exits nonzero on any failure.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use qonsager::elements::{partitions, NamedMorphism};
use qonsager::freealg::{enumerate_words_by_degree, Alphabet, DegreeScheme, NcPoly, Word};
use qonsager::presentations::PresentationId;
use qonsager::quotient::{QuotientCache, RankBuilder, TruncatedQuotient};
use qonsager::ring::{IntPoly, RationalFunction};
use qonsager::verify::{CheckName, CheckStatus, Verifier};

const D: u32 = 8;

/// Cumulative coefficients of `prod_{d>=1} (1 - x^d)^-2`.
fn series_oracle(bound: u32) -> Vec<usize> {
    let n = bound as usize + 1;
    let mut s = vec![0usize; n];
    s[0] = 1;
    for d in 1..n {
        for _ in 0..2 {
            for i in d..n {
                s[i] += s[i - d];
            }
        }
    }
    let mut acc = 0;
    s.into_iter()
        .map(|x| {
            acc += x;
            acc
        })
        .collect()
}

struct Outcome {
    ok: bool,
    summary: String,
}

fn pass(summary: String) -> Outcome {
    Outcome { ok: true, summary }
}

fn fail(summary: String) -> Outcome {
    Outcome { ok: false, summary }
}

fn pbw_table(cache: &QuotientCache) -> Outcome {
    let alt = match cache.certified(PresentationId::AltFull, D) {
        Ok(q) => q,
        Err(e) => return fail(format!("ALT_FULL build failed: {e}")),
    };
    let oracle = series_oracle(D);
    let listed = [1, 3, 8, 18, 38, 74, 139, 249, 434];
    if oracle != listed {
        return fail(format!("series oracle {oracle:?} disagrees with listed values"));
    }
    if alt.dims() == oracle.as_slice() {
        pass(format!("dims(ALT_FULL, 0..={D}) = {:?}", alt.dims()))
    } else {
        fail(format!("dims {:?}, expected {oracle:?}", alt.dims()))
    }
}

fn compact_equivalence(cache: &QuotientCache) -> Outcome {
    let (ess, alt) = match (
        cache.certified(PresentationId::EssCompact, D),
        cache.certified(PresentationId::AltFull, D),
    ) {
        (Ok(e), Ok(a)) => (e, a),
        (Err(e), _) | (_, Err(e)) => return fail(format!("build failed: {e}")),
    };
    if ess.dims() != alt.dims() {
        return fail(format!("dims(ESS_COMPACT) {:?} != dims(ALT_FULL) {:?}", ess.dims(), alt.dims()));
    }
    let ranks = match natural_ranks(&ess, &alt) {
        Ok(r) => r,
        Err(e) => return fail(format!("rank computation failed: {e}")),
    };
    if ranks.as_slice() == alt.dims() {
        pass(format!("dims equal; natural-image ranks {ranks:?}"))
    } else {
        fail(format!("natural-image ranks {ranks:?}, dims {:?}", alt.dims()))
    }
}

/// Running rank of the images of the essential standard words, level by level.
fn natural_ranks(ess: &TruncatedQuotient, alt: &TruncatedQuotient) -> Result<Vec<usize>, Box<dyn std::error::Error>> {
    let mut rb = RankBuilder::new(alt);
    let mut out = Vec::new();
    let mut done = 0;
    for lvl in 0..=D {
        let words = ess.standard_words(lvl);
        for w in &words[done..] {
            let img = NamedMorphism::Natural.apply(&NcPoly::word(Alphabet::Ess, (*w).clone()))?;
            rb.push(&img)?;
        }
        done = words.len();
        out.push(rb.rank());
    }
    Ok(out)
}

fn tensor_factorization(cache: &QuotientCache) -> Outcome {
    let (alt, oq) = match (
        cache.certified(PresentationId::AltFull, D),
        cache.certified(PresentationId::OqDg, D),
    ) {
        (Ok(a), Ok(o)) => (a, o),
        (Err(e), _) | (_, Err(e)) => return fail(format!("build failed: {e}")),
    };
    let od = oq.dims();
    if od[..6] != [1, 3, 7, 15, 29, 53] {
        return fail(format!("dims(OQ_DG) = {od:?}"));
    }
    let sums: Vec<usize> = (0..=D)
        .map(|d| (0..=d / 2).map(|k| od[(d - 2 * k) as usize] * partitions(k).len()).sum())
        .collect();
    if sums.as_slice() == alt.dims() {
        pass(format!("dims(OQ_DG) = {od:?}; convolution matches ALT_FULL"))
    } else {
        fail(format!("convolution {sums:?} vs ALT_FULL {:?}", alt.dims()))
    }
}

const SUITE: [CheckName; 15] = [
    CheckName::Newrels1,
    CheckName::QdgInO,
    CheckName::AltExpressions,
    CheckName::Newrels,
    CheckName::NaturalWelldef,
    CheckName::Mingen,
    CheckName::FactorRecursion,
    CheckName::SortedSpanning,
    CheckName::Morphisms,
    CheckName::CentralG1,
    CheckName::GwcomWind,
    CheckName::Nnot,
    CheckName::Wwalt,
    CheckName::DamianiIndependence,
    CheckName::SigmaVariants,
];

fn identity_suite(cache: &Arc<QuotientCache>) -> Outcome {
    let start = Instant::now();
    let reports = Verifier::with_cache(cache.clone()).run_suite(&SUITE, None);
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{}={}", r.check, r.status))
        .collect();
    if !failed.is_empty() {
        return fail(format!("failing checks: {}", failed.join(", ")));
    }
    let plain = start.elapsed();
    let mutated = Verifier::with_cache(cache.clone()).mutate(true).run_suite(&SUITE, None);
    let mut undetected = Vec::new();
    for (r, c) in mutated.iter().zip(SUITE) {
        if !c.has_identities() {
            continue;
        }
        let caught = r.status == CheckStatus::Fail
            && !r.witnesses.is_empty()
            && r.witnesses.iter().all(|w| !w.normal_form.is_zero());
        if !caught {
            undetected.push(r.check.clone());
        }
    }
    let total = start.elapsed();
    if !undetected.is_empty() {
        return fail(format!("mutation not detected by: {}", undetected.join(", ")));
    }
    let mutating = SUITE.iter().filter(|c| c.has_identities()).count();
    pass(format!(
        "{} checks pass at default bounds in {:.1}s; {mutating} identity checks fail under mutation ({:.1}s total)",
        SUITE.len(),
        plain.as_secs_f64(),
        total.as_secs_f64()
    ))
}

fn random_coeff(rng: &mut StdRng) -> RationalFunction {
    let c: i64 = rng.gen_range(-3..=3);
    let c = if c == 0 { 1 } else { c };
    &RationalFunction::from_int(c) * &RationalFunction::q_pow(rng.gen_range(-2..=2))
}

fn random_element(rng: &mut StdRng, levels: &[Vec<Word>], max_degree: u32) -> NcPoly {
    let mut x = NcPoly::zero(Alphabet::Alt);
    for _ in 0..rng.gen_range(1..=4) {
        let d = rng.gen_range(0..=max_degree) as usize;
        let w = &levels[d][rng.gen_range(0..levels[d].len())];
        x.add_term(w.clone(), &random_coeff(rng));
    }
    x
}

fn normal_form_contract(cache: &QuotientCache) -> Outcome {
    let bound = 6;
    let tq = match cache.certified(PresentationId::AltFull, bound) {
        Ok(q) => q,
        Err(e) => return fail(format!("build failed: {e}")),
    };
    let levels = enumerate_words_by_degree(Alphabet::Alt, DegreeScheme::AltDeg, bound).expect("finite levels");
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    let nf = |x: &NcPoly| tq.normal_form(x).expect("degree within bound");
    for i in 0..200 {
        let x = random_element(&mut rng, &levels, bound);
        let y = random_element(&mut rng, &levels, bound);
        let nx = nf(&x);
        if nf(&nx) != nx {
            return fail(format!("case {i}: normal form not idempotent on {x}"));
        }
        let c = random_coeff(&mut rng);
        if nf(&(x.scale(&c) + &y)) != nx.scale(&c) + nf(&y) {
            return fail(format!("case {i}: normal form not linear on {x}, {y}"));
        }
        let da = rng.gen_range(0..=bound);
        let a = random_element(&mut rng, &levels, da);
        let b = random_element(&mut rng, &levels, bound - da);
        if nf(&(&a * &b)) != nf(&(&nf(&a) * &b)) {
            return fail(format!("case {i}: nf(ab) != nf(nf(a) b) for a = {a}, b = {b}"));
        }
    }
    pass("200 random elements: idempotent, linear, multiplicative".to_string())
}

fn random_ratfunc(rng: &mut StdRng) -> RationalFunction {
    let poly = |rng: &mut StdRng| {
        let len = rng.gen_range(1..=3);
        let cs: Vec<i64> = (0..len).map(|_| rng.gen_range(-4..=4)).collect();
        IntPoly::from_i64s(&cs)
    };
    let n = poly(rng);
    let mut m = poly(rng);
    if m.is_zero() {
        m = IntPoly::one();
    }
    RationalFunction::from_parts(rng.gen_range(-3..=3), n, m)
}

fn coefficient_kernel() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    let cases = 10_000;
    for i in 0..cases {
        let (a, b, c) = (random_ratfunc(&mut rng), random_ratfunc(&mut rng), random_ratfunc(&mut rng));
        let ok = &(&a + &b) + &c == &a + &(&b + &c)
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &a + &b == &b + &a
            && &a * &b == &b * &a
            && (&a - &a).is_zero()
            && (a.is_zero() || (&a * &a.recip().expect("nonzero")).is_one());
        if !ok {
            return fail(format!("case {i}: field axiom violated for {a}, {b}, {c}"));
        }
        for r in [&a + &b, &a * &c, &b - &c] {
            if r.canonicalize() != r || r.canonicalize().canonicalize() != r.canonicalize() {
                return fail(format!("case {i}: canonicalization not idempotent on {r}"));
            }
        }
    }
    pass(format!("{cases} random triples satisfy the field axioms; canonical forms stable"))
}

fn main() -> ExitCode {
    let cache = Arc::new(QuotientCache::new());
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("pbw_dimension_table", Box::new({
            let c = cache.clone();
            move || pbw_table(&c)
        })),
        ("compact_presentation_equivalence", Box::new({
            let c = cache.clone();
            move || compact_equivalence(&c)
        })),
        ("tensor_factorization", Box::new({
            let c = cache.clone();
            move || tensor_factorization(&c)
        })),
        ("identity_suite", Box::new({
            let c = cache.clone();
            move || identity_suite(&c)
        })),
        ("normal_form_contract", Box::new({
            let c = cache.clone();
            move || normal_form_contract(&c)
        })),
        ("coefficient_kernel", Box::new(coefficient_kernel)),
    ];
    let mut all_ok = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        all_ok &= out.ok;
        println!(
            "{} {} {name}: {} [{:.1}s]",
            if out.ok { "PASS" } else { "FAIL" },
            i + 1,
            out.summary,
            start.elapsed().as_secs_f64()
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
