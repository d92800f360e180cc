use crate::elements::{
    b_delta, b_delta_element_in, b_element_degree, b_element_in, essential_g, essential_w, ess_gt, partitions,
    pbw_count, w_closed_form, w_closed_form_degree, BDeltaFormula, BKind, ClosedFormVariant,
    NamedMorphism,
};
use crate::freealg::{
    cmp_words, commutator, q_commutator, Alphabet, DegreeScheme, Generator, NcPoly, Word,
};
use crate::presentations::{alt_g, alt_gt, instantiate, qdg_relation, PresentationId};
use crate::quotient::{QuotientError, RankBuilder, TruncatedQuotient};
use crate::ring::consts;

use super::{CheckName, Ctx};

type R = Result<(), QuotientError>;

pub(crate) fn dispatch(ctx: &mut Ctx, check: CheckName, d: u32) -> R {
    match check {
        CheckName::PbwDims => pbw_dims(ctx, d),
        CheckName::Newrels1 => newrels1(ctx, d),
        CheckName::QdgInO => qdg_in_o(ctx, d),
        CheckName::AltExpressions => alt_expressions(ctx, d),
        CheckName::Newrels => newrels(ctx, d),
        CheckName::NaturalWelldef => natural_welldef(ctx, d),
        CheckName::DimsMatch => dims_match(ctx, d),
        CheckName::Mingen => mingen(ctx, d),
        CheckName::FactorRecursion => factor_recursion(ctx, d),
        CheckName::SortedSpanning => sorted_spanning(ctx, d),
        CheckName::TensorDim => tensor_dim(ctx, d),
        CheckName::Morphisms => morphisms(ctx, d),
        CheckName::CentralG1 => central_g1(ctx, d),
        CheckName::GwcomWind => gwcom_wind(ctx, d),
        CheckName::Nnot => nnot(ctx, d),
        CheckName::Wwalt => wwalt(ctx, d),
        CheckName::DamianiIndependence => damiani(ctx, d),
        CheckName::SigmaVariants => sigma_variants(ctx, d),
        CheckName::BdeltaConsistency => bdelta_consistency(ctx, d),
    }
}

fn br(a: &NcPoly, b: &NcPoly) -> NcPoly {
    commutator(a, b).expect("same alphabet")
}

fn qbr(a: &NcPoly, b: &NcPoly) -> NcPoly {
    q_commutator(a, b).expect("same alphabet")
}

fn aw(n: i64) -> NcPoly {
    NcPoly::gen(Alphabet::Alt, Generator::w(n))
}

fn ew(g: Generator) -> NcPoly {
    NcPoly::gen(Alphabet::Ess, g)
}

fn natural(x: &NcPoly) -> NcPoly {
    NamedMorphism::Natural.apply(x).expect("essential letters exist in the alternating alphabet")
}

/// Degree of `W[n]` under the alternating grading.
fn w_degree(n: i64) -> u32 {
    if n <= 0 {
        (2 * -n + 1) as u32
    } else {
        (2 * n - 1) as u32
    }
}

/// Largest standard word of degree `<= d`; witnesses an excess dimension.
fn top_standard(q: &TruncatedQuotient, d: u32) -> Option<NcPoly> {
    q.standard_words(d).last().map(|w| NcPoly::word(q.alphabet(), (*w).clone()))
}

fn compare_dims(ctx: &mut Ctx, q: &TruncatedQuotient, want: &[usize], label: &str) {
    for (lvl, (&got, &exp)) in q.dims().iter().zip(want).enumerate() {
        let w = if got > exp { top_standard(q, lvl as u32) } else { None };
        ctx.expect_count(q, format!("{label} at degree {lvl}"), got, exp, w);
    }
}

/// Non-decreasing index sequences with total degree `<= bound`, grouped by
/// total degree ascending.
fn multisets(degs: &[u32], bound: u32) -> Vec<(u32, Vec<usize>)> {
    fn go(degs: &[u32], start: usize, rem: u32, cur: &mut Vec<usize>, total: u32, out: &mut Vec<(u32, Vec<usize>)>) {
        out.push((total, cur.clone()));
        for i in start..degs.len() {
            if degs[i] <= rem {
                cur.push(i);
                go(degs, i, rem - degs[i], cur, total + degs[i], out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(degs, 0, bound, &mut Vec::new(), 0, &mut out);
    out.sort_by_key(|(t, _)| *t);
    out
}

fn pbw_dims(ctx: &mut Ctx, d: u32) -> R {
    let q = ctx.quotient(PresentationId::AltFull, d)?;
    let want: Vec<usize> = (0..=d).map(|m| pbw_count(DegreeScheme::AltDeg, m) as usize).collect();
    compare_dims(ctx, &q, &want, "dims(ALT_FULL)");
    ctx.note(format!("dims {:?}", q.dims()));

    // Ordered monomials G < W- < W+ < Gt, non-decreasing.
    let mut gens = DegreeScheme::AltDeg.generators_up_to(Alphabet::Alt, d)?;
    gens.sort();
    let degs: Vec<u32> = gens.iter().map(|g| DegreeScheme::AltDeg.gen_degree(*g)).collect();
    let monos = multisets(&degs, d);
    let mut rb = RankBuilder::new(&q);
    let mut it = monos.iter().peekable();
    for lvl in 0..=d {
        while let Some((t, idx)) = it.peek() {
            if *t > lvl {
                break;
            }
            let w = Word::from_slice(&idx.iter().map(|&i| gens[i]).collect::<Vec<_>>());
            rb.push(&NcPoly::word(Alphabet::Alt, w))?;
            it.next();
        }
        ctx.expect_count(&q, format!("rank of ordered monomials of degree <= {lvl}"), rb.rank(), q.dims()[lvl as usize], None);
    }
    Ok(())
}

fn newrels1(ctx: &mut Ctx, d: u32) -> R {
    let q = ctx.quotient(PresentationId::AltFull, d)?;
    if d < 3 {
        ctx.note("no instance of degree <= D");
        return Ok(());
    }
    let (w0, w1, g1) = (aw(0), aw(1), alt_gt(1));
    let inner = qbr(&w0, &w1);
    ctx.expect_zero(&q, "[W0,Gt1] - [W0,[W0,W1]_q]", br(&w0, &g1) - br(&w0, &inner))?;
    ctx.expect_zero(&q, "[Gt1,W1] - [[W0,W1]_q,W1]", br(&g1, &w1) - br(&inner, &w1))
}

fn qdg_in_o(ctx: &mut Ctx, d: u32) -> R {
    let q = ctx.quotient(PresentationId::AltFull, d)?;
    if d < 4 {
        ctx.note("no instance of degree <= D");
        return Ok(());
    }
    ctx.expect_zero(&q, "q-Dolan/Grady relation in W0", qdg_relation(&aw(0), &aw(1)))?;
    ctx.expect_zero(&q, "q-Dolan/Grady relation in W1", qdg_relation(&aw(1), &aw(0)))
}

fn alt_expressions(ctx: &mut Ctx, d: u32) -> R {
    let q = ctx.quotient(PresentationId::AltFull, d)?;
    let n_max = d as i64;
    for n in -n_max..=n_max + 1 {
        if w_degree(n) > d {
            continue;
        }
        ctx.expect_zero(&q, format!("W[{n}] - natural(essential W[{n}])"), aw(n) - natural(&essential_w(n)))?;
    }
    for k in 1..=d / 2 {
        ctx.expect_zero(&q, format!("G[{k}] - natural(essential G[{k}])"), alt_g(k) - natural(&essential_g(k)))?;
    }
    Ok(())
}

fn newrels(ctx: &mut Ctx, d: u32) -> R {
    let q = ctx.quotient(PresentationId::AltFull, d)?;
    let inv_c = consts::inv(&consts::qdg());
    let (w0, w1) = (ew(Generator::W0), ew(Generator::W1));
    let mut k = 1;
    while 2 * k + 3 <= d {
        let (gk, gk1) = (ess_gt(k), ess_gt(k + 1));
        let r3 = br(&gk1, &w0) - br(&w0, &qbr(&w0, &qbr(&w1, &gk))).scale(&inv_c);
        let r4 = br(&w1, &gk1) - br(&qbr(&qbr(&gk, &w0), &w1), &w1).scale(&inv_c);
        ctx.expect_zero(&q, format!("[Gt{},W0] identity (k={k})", k + 1), natural(&r3))?;
        ctx.expect_zero(&q, format!("[W1,Gt{}] identity (k={k})", k + 1), natural(&r4))?;
        k += 1;
    }
    Ok(())
}

fn natural_welldef(ctx: &mut Ctx, d: u32) -> R {
    let q = ctx.quotient(PresentationId::AltFull, d)?;
    let rels = instantiate(PresentationId::EssCompact, d);
    ctx.note(format!("{} compact relation instances", rels.len()));
    for r in rels {
        ctx.expect_zero(&q, format!("natural({})", r.label()), natural(&r.poly))?;
    }
    Ok(())
}

fn dims_match(ctx: &mut Ctx, d: u32) -> R {
    let ess = ctx.quotient(PresentationId::EssCompact, d)?;
    let alt = ctx.quotient(PresentationId::AltFull, d)?;
    compare_dims(ctx, &ess, alt.dims(), "dims(ESS_COMPACT) vs dims(ALT_FULL)");
    // The images of an essential basis stay independent at every level.
    let basis = ess.standard_words(d);
    let mut rb = RankBuilder::new(&alt);
    let mut i = 0;
    for lvl in 0..=d {
        let end = ess.standard_words(lvl).len();
        while i < end {
            let img = natural(&NcPoly::word(Alphabet::Ess, basis[i].clone()));
            rb.push(&img)?;
            i += 1;
        }
        ctx.expect_count(&alt, format!("rank of natural images at degree {lvl}"), rb.rank(), alt.dims()[lvl as usize], None);
    }
    ctx.note(format!("dims {:?}", ess.dims()));
    Ok(())
}

fn mingen(ctx: &mut Ctx, d: u32) -> R {
    let red = ctx.quotient(PresentationId::AltReduced, d)?;
    let full = ctx.quotient(PresentationId::AltFull, d)?;
    compare_dims(ctx, &red, full.dims(), "dims(ALT_REDUCED) vs dims(ALT_FULL)");
    let rels = instantiate(PresentationId::AltFull, d);
    ctx.note(format!("{} full relation instances", rels.len()));
    for r in rels {
        ctx.expect_zero(&red, r.label(), r.poly)?;
    }
    Ok(())
}

/// Rank of `O_{d-1} + E_d + sum_k O_k O_{d-k}` inside the degree-`<= d`
/// component, where `E_d` is spanned by the G-letter of degree `d` (even `d`)
/// and omitted when `include_e` is false. Stops once the rank reaches the
/// dimension.
pub fn factor_span_rank(q: &TruncatedQuotient, d: u32, include_e: bool) -> Result<usize, QuotientError> {
    assert!(d >= 1 && d <= q.bound());
    let a = q.alphabet();
    let scheme = q.scheme();
    let target = q.dims()[d as usize];
    let mut rb = RankBuilder::new(q);
    let lower = q.standard_words(d - 1);
    for w in &lower {
        rb.push(&NcPoly::word(a, (*w).clone()))?;
    }
    if include_e && d % 2 == 0 {
        let g = if a == Alphabet::EssSigma { Generator::g(d / 2) } else { Generator::gt(d / 2) };
        rb.push(&NcPoly::gen(a, g))?;
    }
    let mut by_degree: Vec<Vec<&Word>> = vec![Vec::new(); d as usize];
    for w in lower.iter().filter(|w| !w.is_empty()) {
        by_degree[scheme.word_degree(w) as usize].push(w);
    }
    for k in 1..d {
        for u in &by_degree[k as usize] {
            for v in &by_degree[(d - k) as usize] {
                if rb.rank() == target {
                    return Ok(rb.rank());
                }
                rb.push(&NcPoly::word(a, u.concat(v)))?;
            }
        }
    }
    Ok(rb.rank())
}

fn factor_recursion(ctx: &mut Ctx, d: u32) -> R {
    for p in [PresentationId::AltFull, PresentationId::EssCompact] {
        let q = ctx.quotient(p, d)?;
        for lvl in 2..=d {
            let r = factor_span_rank(&q, lvl, true)?;
            let w = if r < q.dims()[lvl as usize] { top_standard(&q, lvl) } else { None };
            ctx.expect_count(&q, format!("{p} factor span at degree {lvl}"), r, q.dims()[lvl as usize], w);
        }
    }
    Ok(())
}

/// Words of degree `<= bound` whose degree-one letters form a prefix,
/// ascending in the canonical order.
pub fn sorted_shape_words(alphabet: Alphabet, bound: u32) -> Vec<Word> {
    let scheme = DegreeScheme::EssDeg;
    let g_letter = |k| if alphabet == Alphabet::EssSigma { Generator::g(k) } else { Generator::gt(k) };
    let mut prefixes: Vec<Vec<Generator>> = vec![Vec::new()];
    let mut frontier = prefixes.clone();
    for _ in 0..bound {
        let mut next = Vec::new();
        for p in &frontier {
            for g in [Generator::W0, Generator::W1] {
                let mut q = p.clone();
                q.push(g);
                next.push(q);
            }
        }
        prefixes.extend(next.iter().cloned());
        frontier = next;
    }
    let mut suffixes: Vec<(u32, Vec<Generator>)> = vec![(0, Vec::new())];
    let mut i = 0;
    while i < suffixes.len() {
        let (deg, s) = suffixes[i].clone();
        for k in 1..=(bound - deg) / 2 {
            let mut t = s.clone();
            t.push(g_letter(k));
            suffixes.push((deg + 2 * k, t));
        }
        i += 1;
    }
    let mut out = Vec::new();
    for p in &prefixes {
        for (deg, s) in &suffixes {
            if p.len() as u32 + deg <= bound {
                let mut w = p.clone();
                w.extend_from_slice(s);
                out.push(Word::from_slice(&w));
            }
        }
    }
    out.sort_by(|a, b| cmp_words(a, b, scheme));
    out
}

fn sorted_spanning(ctx: &mut Ctx, d: u32) -> R {
    let q = ctx.quotient(PresentationId::EssCompact, d)?;
    let shapes = sorted_shape_words(Alphabet::Ess, d);
    let scheme = q.scheme();
    let mut rb = RankBuilder::new(&q);
    let mut it = shapes.iter().peekable();
    for lvl in 0..=d {
        let target = q.dims()[lvl as usize];
        while let Some(w) = it.peek() {
            if scheme.word_degree(w) > lvl {
                break;
            }
            if rb.rank() < target {
                rb.push(&NcPoly::word(Alphabet::Ess, (*w).clone()))?;
            }
            it.next();
        }
        let wit = if rb.rank() < target { top_standard(&q, lvl) } else { None };
        ctx.expect_count(&q, format!("rank of sorted shapes at degree {lvl}"), rb.rank(), target, wit);
    }
    ctx.note(format!("{} sorted-shape words", shapes.len()));
    Ok(())
}

fn tensor_dim(ctx: &mut Ctx, d: u32) -> R {
    let alt = ctx.quotient(PresentationId::AltFull, d)?;
    let oq = ctx.quotient(PresentationId::OqDg, d)?;
    let mut sums = Vec::new();
    for lvl in 0..=d {
        let s: usize = (0..=lvl / 2).map(|k| oq.dims()[(lvl - 2 * k) as usize] * partitions(k).len()).sum();
        sums.push(s);
    }
    compare_dims(ctx, &alt, &sums, "dims(ALT_FULL) vs sum of dims(OQ_DG) * p(k)");
    ctx.note(format!("OQ_DG dims {:?}", oq.dims()));
    ctx.note(format!("ALT_FULL dims {:?}", alt.dims()));
    Ok(())
}

fn morphisms(ctx: &mut Ctx, d: u32) -> R {
    let alt = ctx.quotient(PresentationId::AltFull, d)?;
    let oq = ctx.quotient(PresentationId::OqDg, d)?;
    let alt_maps = [NamedMorphism::SigmaAlt, NamedMorphism::DaggerAlt, NamedMorphism::TauAlt];
    let oq_maps = [NamedMorphism::SigmaOq, NamedMorphism::DaggerOq, NamedMorphism::TauOq];
    let rels = instantiate(PresentationId::AltFull, d);
    for m in alt_maps {
        for r in &rels {
            let img = m.apply(&r.poly)?;
            ctx.expect_zero(&alt, format!("{m}({})", r.label()), img)?;
        }
    }
    for m in oq_maps {
        for r in instantiate(PresentationId::OqDg, d) {
            let img = m.apply(&r.poly)?;
            ctx.expect_zero(&oq, format!("{m}({})", r.label()), img)?;
        }
    }
    // Diagram chase through the inclusion on W0, W1.
    let iota = NamedMorphism::Iota;
    for (mo, ma) in oq_maps.iter().zip(&alt_maps) {
        for g in [Generator::W0, Generator::W1] {
            let x = NcPoly::gen(Alphabet::Oq, g);
            let lhs = iota.apply(&mo.apply(&x)?)?;
            let rhs = ma.apply(&iota.apply(&x)?)?;
            ctx.expect_zero(&alt, format!("iota.{mo} - {ma}.iota on {g}"), lhs - rhs)?;
        }
    }
    // Involutions and the composite.
    let (s, dg, t) = (NamedMorphism::SigmaAlt, NamedMorphism::DaggerAlt, NamedMorphism::TauAlt);
    for g in DegreeScheme::AltDeg.generators_up_to(Alphabet::Alt, d)? {
        let x = NcPoly::gen(Alphabet::Alt, g);
        for m in alt_maps {
            ctx.expect_zero(&alt, format!("{m}^2 on {g}"), m.apply(&m.apply(&x)?)? - &x)?;
        }
        ctx.expect_zero(&alt, format!("tau - sigma.dagger on {g}"), t.apply(&x)? - s.apply(&dg.apply(&x)?)?)?;
        ctx.expect_zero(&alt, format!("sigma.dagger - dagger.sigma on {g}"), s.apply(&dg.apply(&x)?)? - dg.apply(&s.apply(&x)?)?)?;
    }
    ctx.note(format!("{} relation instances under 3 maps", rels.len()));
    Ok(())
}

fn central_g1(ctx: &mut Ctx, d: u32) -> R {
    let q = ctx.quotient(PresentationId::AltFull, d)?;
    if d < 2 {
        return Ok(());
    }
    let z = natural(&(ess_gt(1) + b_delta().scale(&consts::q(1))));
    for g in DegreeScheme::AltDeg.generators_up_to(Alphabet::Alt, d - 2)? {
        let x = NcPoly::gen(Alphabet::Alt, g);
        ctx.expect_zero(&q, format!("[Gt1 + q B_delta, {g}]"), br(&z, &x))?;
    }
    Ok(())
}

fn gwcom_wind(ctx: &mut Ctx, d: u32) -> R {
    let q = ctx.quotient(PresentationId::AltFull, d)?;
    let bd = natural(&b_delta());
    let (w0, w1) = (aw(0), aw(1));
    let qq = consts::q_minus_qinv();
    let q2 = consts::q(2);
    let inv_c = consts::inv(&consts::qdg());
    let mut k = 0u32;
    while 2 * k + 3 <= d {
        let ki = k as i64;
        let g = alt_gt(k + 1);
        let lhs = qbr(&g, &w0);
        let rhs = (&w0 * &g).scale(&qq) - br(&bd, &aw(-ki)).scale(&q2);
        ctx.expect_zero(&q, format!("[Gt{},W0]_q identity (k={k})", k + 1), lhs - rhs)?;
        let lhs = qbr(&w1, &g);
        let rhs = (&w1 * &g).scale(&qq) + br(&bd, &aw(ki + 1));
        ctx.expect_zero(&q, format!("[W1,Gt{}]_q identity (k={k})", k + 1), lhs - rhs)?;
        k += 1;
    }
    let mut n = 1i64;
    while 2 * n as u32 + 1 <= d {
        let g = alt_gt(n as u32);
        let rhs1 = aw(n) - (&w0 * &g).scale(&(&qq * &inv_c)) + br(&bd, &aw(1 - n)).scale(&(&q2 * &inv_c));
        ctx.expect_zero(&q, format!("W[-{n}] induction identity"), aw(-n) - rhs1)?;
        let rhs2 = aw(1 - n) - (&w1 * &g).scale(&(&qq * &inv_c)) - br(&bd, &aw(n)).scale(&inv_c);
        ctx.expect_zero(&q, format!("W[{}] induction identity", n + 1), aw(n + 1) - rhs2)?;
        n += 1;
    }
    Ok(())
}

fn oq_b(kind: BKind, n: i64) -> NcPoly {
    b_element_in(Alphabet::Oq, kind, n)
}

fn nnot(ctx: &mut Ctx, d: u32) -> R {
    let q = ctx.quotient(PresentationId::OqDg, d)?;
    let bd = b_delta_element_in(Alphabet::Oq, 1, BDeltaFormula::ViaAlpha1);
    let c = consts::q(1) * consts::inv(&consts::b_const());
    let range = d as i64;
    let mut ran = Vec::new();
    for n in -range..=range {
        let deg = (2 + b_element_degree(n)).max(b_element_degree(n + 1)).max(b_element_degree(n - 1));
        if deg > d {
            continue;
        }
        ran.push(n);
        let x0 = br(&bd, &oq_b(BKind::Alpha0, n)).scale(&c) - oq_b(BKind::Alpha0, n + 1) + oq_b(BKind::Alpha0, n - 1);
        ctx.expect_zero(&q, format!("alpha0 shift identity (n={n})"), x0)?;
        let x1 = br(&bd, &oq_b(BKind::Alpha1, n)).scale(&c) - oq_b(BKind::Alpha1, n - 1) + oq_b(BKind::Alpha1, n + 1);
        ctx.expect_zero(&q, format!("alpha1 shift identity (n={n})"), x1)?;
    }
    ctx.note(format!("n in {ran:?}"));
    Ok(())
}

fn wwalt(ctx: &mut Ctx, d: u32) -> R {
    let ess = ctx.quotient(PresentationId::EssCompact, d)?;
    let sig = ctx.quotient(PresentationId::EssCompactSigma, d)?;
    let mut n = 0;
    while w_closed_form_degree(n) <= d {
        for v in ClosedFormVariant::ALL {
            let q = if v.is_sigma() { &sig } else { &ess };
            let x = w_closed_form(n, v) - v.target(n);
            ctx.expect_zero(q, format!("{v} (n={n}) vs W[{}]", v.target_index(n)), x)?;
        }
        n += 1;
    }
    Ok(())
}

/// Root vectors in a convex order: alpha0 ascending, imaginary ascending,
/// alpha1 descending.
fn damiani_generators(d: u32) -> Vec<(String, u32, NcPoly)> {
    let mut out = Vec::new();
    let real_max = (d.saturating_sub(1) / 2) as i64;
    for n in 0..=real_max {
        if d >= 1 {
            out.push((format!("B[a0,{n}]"), b_element_degree(n), oq_b(BKind::Alpha0, n)));
        }
    }
    for n in 1..=d / 2 {
        out.push((format!("Bd[{n}]"), 2 * n, b_delta_element_in(Alphabet::Oq, n, BDeltaFormula::ViaAlpha1)));
    }
    for n in (0..=real_max).rev() {
        if d >= 1 {
            out.push((format!("B[a1,{n}]"), b_element_degree(n), oq_b(BKind::Alpha1, n)));
        }
    }
    out
}

fn damiani(ctx: &mut Ctx, d: u32) -> R {
    let q = ctx.quotient(PresentationId::OqDg, d)?;
    let gens = damiani_generators(d);
    let degs: Vec<u32> = gens.iter().map(|g| g.1).collect();
    let monos = multisets(&degs, d);
    let mut rb = RankBuilder::new(&q);
    let mut it = monos.iter().peekable();
    let mut count = 0;
    for lvl in 0..=d {
        while let Some((t, idx)) = it.peek() {
            if *t > lvl {
                break;
            }
            let mut x = NcPoly::one(Alphabet::Oq);
            for &i in idx {
                x = &x * &gens[i].2;
            }
            count += 1;
            if !rb.push(&x)? && !ctx.failed {
                let label: Vec<&str> = idx.iter().map(|&i| gens[i].0.as_str()).collect();
                ctx.expect_count(&q, format!("monomial {} is dependent", label.join("*")), 0, 1, Some(x));
            }
            it.next();
        }
        ctx.expect_count(&q, format!("ordered monomials of degree <= {lvl}"), count, q.dims()[lvl as usize], None);
        ctx.expect_count(&q, format!("rank at degree {lvl}"), rb.rank(), count, None);
    }
    debug_assert_eq!(count as u64, pbw_count(DegreeScheme::LenDeg, d));
    ctx.note(format!("{count} monomials in {} root vectors", gens.len()));
    Ok(())
}

fn sigma_variants(ctx: &mut Ctx, d: u32) -> R {
    let alt = ctx.quotient(PresentationId::AltFull, d)?;
    let sig = ctx.quotient(PresentationId::EssCompactSigma, d)?;
    compare_dims(ctx, &sig, alt.dims(), "dims(ESS_COMPACT_SIGMA) vs dims(ALT_FULL)");
    let m = NamedMorphism::NaturalSigma;
    for r in instantiate(PresentationId::EssCompactSigma, d) {
        ctx.expect_zero(&alt, format!("{m}({})", r.label()), m.apply(&r.poly)?)?;
    }
    Ok(())
}

fn bdelta_consistency(ctx: &mut Ctx, d: u32) -> R {
    let q = ctx.quotient(PresentationId::OqDg, d)?;
    let tau = NamedMorphism::TauOq;
    for n in 1..=d / 2 {
        let a = b_delta_element_in(Alphabet::Oq, n, BDeltaFormula::ViaAlpha1);
        let b = b_delta_element_in(Alphabet::Oq, n, BDeltaFormula::ViaAlpha0);
        ctx.expect_zero(&q, format!("Bd[{n}] formulas agree"), &a - &b)?;
        ctx.expect_zero(&q, format!("tau fixes Bd[{n}]"), tau.apply(&a)? - &a)?;
    }
    let mut n = 0i64;
    while b_element_degree(n) <= d {
        let x = tau.apply(&oq_b(BKind::Alpha0, n))? - oq_b(BKind::Alpha1, n);
        ctx.expect_zero(&q, format!("tau(B[a0,{n}]) = B[a1,{n}]"), x)?;
        n += 1;
    }
    Ok(())
}
