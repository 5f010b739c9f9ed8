//! One PASS/FAIL line per acceptance criterion. Every comparison is exact
//! (tolerance 0); the only pinned tolerances are the wall-clock budgets.

mod common;

use std::time::{Duration, Instant};

use knotobs::concordance::{
    ag_lower_bound, as_lower_bound, deltan_report, evaluate_hom, expr_upsilon, independence_certificate,
    jump_bound_theorem, Entry, Functional, FunctionalChoice, KnotAtom, KnotExpr, Value, Verdict,
};
use knotobs::rational::{fmt_exact, int, rat, Rational};
use knotobs::render::render_certificate;
use knotobs::seifert::{signature_at, torus_signature, CirclePoint, SeifertMatrix};
use knotobs::upsilon::{psi, torus_upsilon};
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};

const TORUS_SIGNATURE_BUDGET: Duration = Duration::from_secs(1);
const DELTA_SUITE_BUDGET: Duration = Duration::from_secs(60);
const PROPERTY_CASES: u32 = 100;
const CROSS_PATH_SAMPLES: usize = 10;
const SEED: u64 = 0x6b6e_6f74;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn expr(s: &str) -> KnotExpr {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn exact(f: &Functional, k: &KnotExpr) -> Result<Rational, String> {
    match evaluate_hom(f, k).map_err(|e| e.to_string())? {
        Value::Exact(q) => Ok(q),
        other => Err(format!("{f} is not exact: {other}")),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn torus_signature_3_7() -> Outcome {
    let start = Instant::now();
    let s = torus_signature(3, 7, &rat(1, 2)).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure(s == -8, || format!("got {s}"))?;
    ensure(took < TORUS_SIGNATURE_BUDGET, || format!("took {took:?}"))?;
    Ok(format!("sigma(T(3,7)) = {s} in {took:?}"))
}

fn tau_matches_initial_slope() -> Outcome {
    let k = expr("T(3,7)");
    let neg_tau = exact(&Functional::NegTau, &k)?;
    let slope = torus_upsilon(3, 7).map_err(|e| e.to_string())?.initial_slope();
    ensure(neg_tau == int(-6) && slope == neg_tau, || format!("-tau = {neg_tau}, slope = {slope}"))?;
    Ok(format!("tau = 6, Upsilon'(0) = {slope}"))
}

fn figure_two() -> Outcome {
    let k = expr("T(3,7) - T(4,5)");
    let u = expr_upsilon(&k).map_err(|e| e.to_string())?;
    let p = psi(&int(0), &rat(2, 3), &u).map_err(|e| e.to_string())?;
    let bound = ag_lower_bound(&k).map_err(|e| e.to_string())?;
    ensure(p.abs() == int(1), || format!("psi[0,2/3] = {p}"))?;
    // the genus is an integer, so the rational bound 1/2 already forces genus >= 1
    ensure(bound.ceiling >= 1.into(), || format!("ag bound {} rounds up to {}", fmt_exact(&bound.value), bound.ceiling))?;
    Ok(format!(
        "Upsilon = {u}; psi[0,2/3] = {}; ag >= {} so ag >= {}",
        fmt_exact(&p),
        fmt_exact(&bound.value),
        bound.ceiling
    ))
}

fn figure_three() -> Outcome {
    let j = expr("T(3,7) - T(2,11)");
    let upsilon = exact(&Functional::LittleUpsilon, &j)?;
    let neg_tau = exact(&Functional::NegTau, &j)?;
    let gap = (&upsilon - &neg_tau).abs();
    let bound = as_lower_bound(&j).map_err(|e| e.to_string())?;
    ensure(gap == int(2), || format!("|upsilon - (-tau)| = {gap}"))?;
    ensure(bound.value >= int(2), || format!("as bound {}", fmt_exact(&bound.value)))?;
    Ok(format!("upsilon = {upsilon}, -tau = {neg_tau}, as >= {}", fmt_exact(&bound.value)))
}

fn delta_family() -> Outcome {
    let start = Instant::now();
    for n in 1..=50 {
        let r = deltan_report(n).map_err(|e| format!("n = {n}: {e}"))?;
        let fail = |what: &str| format!("n = {n}: {what}");
        ensure(r.value_at_one == int(1), || fail("value at 1"))?;
        ensure(r.irreducible, || fail("reducible"))?;
        ensure(r.negative_real_roots() == 2, || fail("negative real roots"))?;
        ensure(r.circle_pairs == 1, || fail("unit circle pairs"))?;
        ensure(r.roundtrip, || fail("Seifert realization"))?;
        ensure(r.jump.abs() == 2, || fail("jump"))?;
    }
    let took = start.elapsed();
    ensure(took < DELTA_SUITE_BUDGET, || format!("took {took:?}"))?;
    Ok(format!("n = 1..50 all hold, {took:?}"))
}

fn scaled_jump_theorem() -> Outcome {
    let k = KnotExpr::from_terms([(6, KnotAtom::delta(1).unwrap())]);
    let b = jump_bound_theorem(&k, 1, 3).map_err(|e| e.to_string())?;
    ensure(b == int(3), || format!("bound {b}"))?;
    Ok(format!("g4(6*K[1]) >= {b}"))
}

fn torus_family_independent() -> Outcome {
    let knots: Vec<KnotExpr> = (3..=10).map(|p| expr(&format!("T({p},{})", p + 1))).collect();
    let cert = independence_certificate(&knots, &FunctionalChoice::Auto).map_err(|e| e.to_string())?;
    ensure(cert.verdict == Verdict::Independent, || render_certificate(&cert))?;
    ensure(cert.verify(), || "certificate does not verify".into())?;
    for (i, row) in cert.matrix.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            let zero = matches!(e, Entry::Exact(q) if q.is_zero());
            ensure(if j > i { zero } else { j < i || !zero }, || format!("entry ({i},{j}) = {e}"))?;
        }
    }
    Ok(format!("{} x {} lower triangular, diagonal nonzero", cert.matrix.len(), cert.functionals.len()))
}

fn declared_family_independent() -> Outcome {
    let knots: Vec<KnotExpr> = (2..=6).map(|n| expr(&format!("D(tslice{n})"))).collect();
    let cert = independence_certificate(&knots, &FunctionalChoice::Auto).map_err(|e| e.to_string())?;
    ensure(cert.verdict == Verdict::Independent, || render_certificate(&cert))?;
    ensure(cert.uses_declared, || "not marked as declared-data dependent".into())?;
    ensure(render_certificate(&cert).contains("warning: relies on declared"), || "watermark missing".into())?;
    Ok("independent from declared sign data, watermarked".into())
}

fn property_suites() -> Outcome {
    let results = common::acceptance_suites(PROPERTY_CASES);
    let failed: Vec<String> =
        results.iter().filter_map(|(name, r)| r.as_ref().err().map(|e| format!("{name}: {e}"))).collect();
    ensure(failed.is_empty(), || failed.join("; "))?;
    Ok(format!("{} suites x {PROPERTY_CASES} cases", results.len()))
}

fn cross_path_oracle() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(SEED);
    for q in (3..=21).step_by(2) {
        let u = torus_upsilon(2, q).map_err(|e| e.to_string())?;
        let v = SeifertMatrix::torus_two(q as usize).map_err(|e| e.to_string())?;
        let sigma = signature_at(&v, &CirclePoint::MinusOne).map_err(|e| e.to_string())?;
        let half = rat(sigma, 2);
        for _ in 0..CROSS_PATH_SAMPLES {
            let den: i64 = rng.gen_range(1..=1000);
            let t = rat(rng.gen_range(1..=den), den);
            let over_t = u.over_t(&t).map_err(|e| e.to_string())?;
            ensure(over_t == half, || format!("T(2,{q}) at t = {t}: {over_t} vs {half}"))?;
        }
    }
    Ok(format!("T(2,q), q = 3..21 odd, {CROSS_PATH_SAMPLES} points each"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("torus signature of T(3,7)", torus_signature_3_7),
        ("tau agrees with the staircase slope", tau_matches_initial_slope),
        ("Upsilon/t of T(3,7) - T(4,5)", figure_two),
        ("upsilon against -tau on T(3,7) - T(2,11)", figure_three),
        ("K[n] suite for n = 1..50", delta_family),
        ("jump bound on 6*K[1]", scaled_jump_theorem),
        ("independence of T(p,p+1), p = 3..10", torus_family_independent),
        ("independence of declared tslice family", declared_family_independent),
        ("randomized property suites", property_suites),
        ("Upsilon/t against sigma/2 on T(2,q)", cross_path_oracle),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
