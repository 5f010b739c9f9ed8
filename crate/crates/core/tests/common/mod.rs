//! Generators, oracles and property checks shared by the property tests and
//! the acceptance target.

#![allow(dead_code)]

use knotobs::concordance::{expr_upsilon, KnotAtom, KnotExpr};
use knotobs::poly::{count_roots_in, delta_n, IntLaurentPoly, SturmChain};
use knotobs::rational::{int, rat, Rational};
use knotobs::seifert::{
    alexander, circle_roots, jump_at, murasugi_alternating_test, signature_at, signature_profile, torus_jump_list,
    torus_signature, CirclePoint, GaussRational, SeifertError, SeifertMatrix,
};
use knotobs::upsilon::{torus_alexander, Semigroup};
use num_traits::ToPrimitive;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub type Check = Result<(), TestCaseError>;

// ---------- generators ----------

pub fn coprime_pair() -> impl Strategy<Value = (i64, i64)> {
    (2i64..7, 3i64..14).prop_filter_map("coprime torus parameters", |(p, q)| {
        let (p, q) = if p < q { (p, q) } else { (q, p) };
        (p >= 2 && p != q && num_integer::gcd(p, q) == 1).then_some((p, q))
    })
}

pub fn torus_expr() -> impl Strategy<Value = KnotExpr> {
    prop::collection::vec((-3i64..=3, coprime_pair()), 0..4).prop_map(|terms| {
        KnotExpr::from_terms(terms.into_iter().map(|(c, (p, q))| (c, KnotAtom::torus(p, q).unwrap())))
    })
}

pub fn any_expr() -> impl Strategy<Value = KnotExpr> {
    let atom = prop_oneof![
        coprime_pair().prop_map(|(p, q)| KnotAtom::torus(p, q).unwrap()),
        (1i64..4).prop_map(|n| KnotAtom::delta(n).unwrap()),
        prop::sample::select(vec!["whitehead0", "whitehead2", "tslice3", "tslice17"])
            .prop_map(|n| KnotAtom::declared(n).unwrap()),
    ];
    prop::collection::vec((-5i64..=5, atom), 0..5).prop_map(KnotExpr::from_terms)
}

pub fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..400, 1i64..200).prop_map(|(n, d)| rat(n, d))
}

pub fn t_in_domain() -> impl Strategy<Value = Rational> {
    (0i64..=240).prop_map(|k| rat(k, 120))
}

/// A Seifert matrix `Pᵀ (H + W) P`: `H` the standard hooks, `W` symmetric,
/// `P` a product of elementary shears. The pairing `V - Vᵀ` stays unimodular.
pub fn seifert_matrix() -> impl Strategy<Value = SeifertMatrix> {
    (1usize..=2).prop_flat_map(|g| {
        let n = 2 * g;
        (
            prop::collection::vec(-2i64..=2, n * (n + 1) / 2),
            prop::collection::vec((0..n, 0..n, -1i64..=1), 0..4),
        )
            .prop_map(move |(sym, shears)| {
                let mut v = vec![vec![0i64; n]; n];
                let mut k = 0;
                for i in 0..n {
                    for j in i..n {
                        v[i][j] += sym[k];
                        if i != j {
                            v[j][i] += sym[k];
                        }
                        k += 1;
                    }
                }
                for i in 0..g {
                    v[2 * i][2 * i + 1] += 1;
                }
                for (a, b, c) in shears {
                    if a == b || c == 0 {
                        continue;
                    }
                    // column a += c * column b, then row a += c * row b
                    for row in v.iter_mut() {
                        row[a] += c * row[b];
                    }
                    let rb = v[b].clone();
                    for (x, y) in v[a].iter_mut().zip(rb) {
                        *x += c * y;
                    }
                }
                SeifertMatrix::new(v).expect("congruent to a Seifert matrix")
            })
    })
}

pub fn hermitian() -> impl Strategy<Value = Vec<Vec<GaussRational>>> {
    (1usize..=5).prop_flat_map(|n| {
        (prop::collection::vec(-2i64..=2, n), prop::collection::vec((-2i64..=2, -2i64..=2), n * n)).prop_map(
            move |(diag, off)| {
                let mut m = vec![vec![GaussRational::default(); n]; n];
                for i in 0..n {
                    m[i][i] = GaussRational::real(int(diag[i]));
                    for j in i + 1..n {
                        let (re, im) = off[i * n + j];
                        m[i][j] = GaussRational::new(int(re), int(im));
                        m[j][i] = m[i][j].conj();
                    }
                }
                m
            },
        )
    })
}

pub fn distinct_rationals() -> impl Strategy<Value = std::collections::BTreeSet<Rational>> {
    prop::collection::btree_set((-30i64..30, 1i64..6).prop_map(|(n, d)| rat(n, d)), 0..6)
}

pub fn quarter_grid_point() -> impl Strategy<Value = Rational> {
    (-40i64..40).prop_map(|k| rat(k, 4))
}

pub fn small_poly() -> impl Strategy<Value = IntLaurentPoly> {
    prop::collection::vec(-9i64..=9, 2..8)
        .prop_map(|c| IntLaurentPoly::from_coeffs(0, &c))
        .prop_filter("non-constant", |p| p.max_exp().unwrap_or(0) >= 1)
}

// ---------- oracles ----------

/// `Υ(t) = max_m { -2·#(S ∩ [0, m)) - t(g - m) }` over the semigroup `S`.
pub fn semigroup_upsilon(p: i64, q: i64, t: &Rational) -> Rational {
    let s = Semigroup::new(p, q).unwrap();
    let g = (p - 1) * (q - 1) / 2;
    (0..=2 * g)
        .map(|m| {
            let below = (0..m).filter(|&k| s.contains(k)).count() as i64;
            int(-2 * below) - t * int(g - m)
        })
        .max()
        .unwrap()
}

/// `σ(ω(s))`, or `None` at a root of the Alexander polynomial.
pub fn sig(v: &SeifertMatrix, s: &Rational) -> Option<i64> {
    match signature_at(v, &CirclePoint::param(s.clone()).unwrap()) {
        Ok(x) => Some(x),
        Err(SeifertError::AtAlexanderRoot) => None,
        Err(e) => panic!("unexpected error {e}"),
    }
}

/// Characteristic polynomial by Faddeev–LeVerrier, highest degree first.
pub fn char_poly(a: &[Vec<GaussRational>]) -> Vec<Rational> {
    let n = a.len();
    let zero = GaussRational::default();
    let mul = |x: &[Vec<GaussRational>], y: &[Vec<GaussRational>]| -> Vec<Vec<GaussRational>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(zero.clone(), |acc, k| &acc + &(&x[i][k] * &y[k][j]))).collect())
            .collect()
    };
    let mut coeffs = vec![int(1)];
    let mut m = vec![vec![zero.clone(); n]; n];
    for k in 1..=n {
        let c_prev = GaussRational::real(coeffs[k - 1].clone());
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = &row[i] + &c_prev;
        }
        let am = mul(a, &m);
        let tr = (0..n).fold(zero.clone(), |acc, i| &acc + &am[i][i]);
        assert!(tr.im == int(0), "Hermitian trace is real");
        coeffs.push(-tr.re / int(k as i64));
        m = am;
    }
    coeffs
}

pub fn sign_variations(c: &[Rational]) -> i64 {
    let signs: Vec<bool> = c.iter().filter(|x| **x != int(0)).map(|x| *x > int(0)).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count() as i64
}

fn f64_of(q: &Rational) -> f64 {
    q.to_f64().unwrap()
}

// ---------- checks ----------

pub fn upsilon_symmetric(k: KnotExpr, t: Rational) -> Check {
    let u = expr_upsilon(&k).unwrap();
    prop_assert_eq!(u.eval(&t).unwrap(), u.eval(&(int(2) - &t)).unwrap());
    Ok(())
}

pub fn upsilon_additive(a: KnotExpr, b: KnotExpr, t: Rational) -> Check {
    let ua = expr_upsilon(&a).unwrap();
    let ub = expr_upsilon(&b).unwrap();
    let sum = expr_upsilon(&a.add(&b)).unwrap();
    prop_assert_eq!(&sum, &ua.add(&ub));
    prop_assert_eq!(sum.eval(&t).unwrap(), ua.eval(&t).unwrap() + ub.eval(&t).unwrap());
    Ok(())
}

pub fn upsilon_mirror(k: KnotExpr) -> Check {
    prop_assert_eq!(expr_upsilon(&k.neg()).unwrap(), expr_upsilon(&k).unwrap().neg());
    Ok(())
}

pub fn signature_even_and_conjugation_symmetric(v: SeifertMatrix, s: Rational) -> Check {
    if let Some(x) = sig(&v, &s) {
        prop_assert_eq!(x % 2, 0);
        prop_assert!(x.abs() <= v.size() as i64);
        prop_assert_eq!(sig(&v, &-s.clone()), Some(x));
    }
    Ok(())
}

pub fn signature_mirror(v: SeifertMatrix, s: Rational) -> Check {
    if let Some(x) = sig(&v, &s) {
        prop_assert_eq!(sig(&v.concordance_inverse(), &s), Some(-x));
    }
    Ok(())
}

pub fn signature_locally_constant(v: SeifertMatrix, s: Rational) -> Check {
    let (roots, values) = signature_profile(&v).unwrap();
    let x = CirclePoint::param(s.clone()).unwrap().reduced_coordinate();
    // x = 2 cos θ decreases along the upper arc
    prop_assume!(roots.iter().all(|r| !r.interval.contains(&x)));
    let arc = roots.iter().filter(|r| r.interval.lo > x).count();
    prop_assert_eq!(sig(&v, &s), Some(values[arc]));
    Ok(())
}

pub fn jumps_sum_to_signature(v: SeifertMatrix) -> Check {
    let total: i64 = circle_roots(&alexander(&v)).unwrap().iter().map(|r| jump_at(&v, r).unwrap()).sum();
    prop_assert_eq!(signature_at(&v, &CirclePoint::MinusOne).unwrap(), total);
    Ok(())
}

/// Compares the lattice count at the exact midpoint of the arc containing
/// `ω(s)` with the matrix signature at `ω(s)`.
pub fn lattice_matches_matrix(h: usize, s: Rational) -> Check {
    let q = 2 * h + 1;
    let v = SeifertMatrix::torus_two(q).unwrap();
    let lambda = f64_of(&s).atan() / std::f64::consts::PI;
    let mut cuts: Vec<Rational> = vec![int(0)];
    cuts.extend(torus_jump_list(2, q as i64).unwrap().into_iter().map(|(l, _)| l));
    cuts.push(rat(1, 2));
    let arc = cuts.windows(2).position(|w| f64_of(&w[0]) + 1e-9 < lambda && lambda < f64_of(&w[1]) - 1e-9);
    prop_assume!(arc.is_some());
    let i = arc.unwrap();
    let mid = (&cuts[i] + &cuts[i + 1]) / int(2);
    prop_assert_eq!(sig(&v, &s), Some(torus_signature(2, q as i64, &mid).unwrap()));
    Ok(())
}

pub fn alternating_test_accepts_two_strand(h: i64) -> Check {
    let q = 2 * h + 1;
    prop_assert!(murasugi_alternating_test(&torus_alexander(2, q).unwrap()).is_compatible());
    let from_matrix = alexander(&SeifertMatrix::torus_two(q as usize).unwrap());
    prop_assert!(murasugi_alternating_test(&from_matrix).is_compatible());
    Ok(())
}

pub fn alternating_test_rejects_delta(n: i64) -> Check {
    prop_assert!(!murasugi_alternating_test(&delta_n(n).unwrap()).is_compatible());
    Ok(())
}

/// `∏ (d x - n) · (x² + c)` has exactly the chosen real roots.
pub fn sturm_matches_constructed_roots(
    roots: std::collections::BTreeSet<Rational>,
    c: i64,
    a: Rational,
    width: Rational,
) -> Check {
    let mut p = IntLaurentPoly::from_coeffs(0, &[c, 0, 1]);
    for r in &roots {
        let factor = IntLaurentPoly::from_terms([(0, -r.numer().clone()), (1, r.denom().clone())]);
        p = &p * &factor;
    }
    let b = &a + &width;
    let expected = roots.iter().filter(|r| **r >= a && **r <= b).count();
    prop_assert_eq!(count_roots_in(&p, &a, &b).unwrap(), expected);
    prop_assert_eq!(SturmChain::new(&p.to_ordinary()).count_all(), roots.len());
    Ok(())
}

/// A sign change across a grid cell forces a root inside it, and a cell
/// with no roots has no sign change.
pub fn sturm_agrees_with_sign_changes(p: IntLaurentPoly) -> Check {
    let dense = p.to_ordinary();
    let grid: Vec<Rational> = (-40..=40).map(|k| rat(k, 4)).collect();
    for w in grid.windows(2) {
        let (fa, fb) = (dense.eval(&w[0]), dense.eval(&w[1]));
        let n = count_roots_in(&p, &w[0], &w[1]).unwrap();
        let sign_change = fa != int(0) && fb != int(0) && (fa > int(0)) != (fb > int(0));
        if sign_change || fb == int(0) || fa == int(0) {
            prop_assert!(n >= 1);
        }
        if n == 0 {
            prop_assert!(!sign_change);
        }
    }
    Ok(())
}

// ---------- deterministic runs for the acceptance target ----------

fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn run<S: Strategy>(cases: u32, strategy: S, check: impl Fn(S::Value) -> Check) -> Result<(), String> {
    runner(cases).run(&strategy, check).map_err(|e| e.to_string())
}

/// Every randomized suite of the acceptance list, each with `cases` cases.
pub fn acceptance_suites(cases: u32) -> Vec<(&'static str, Result<(), String>)> {
    vec![
        ("Upsilon symmetry", run(cases, (torus_expr(), t_in_domain()), |(k, t)| upsilon_symmetric(k, t))),
        (
            "Upsilon additivity",
            run(cases, (torus_expr(), torus_expr(), t_in_domain()), |(a, b, t)| upsilon_additive(a, b, t)),
        ),
        ("Upsilon mirror", run(cases, torus_expr(), upsilon_mirror)),
        (
            "signature evenness and conjugation symmetry",
            run(cases, (seifert_matrix(), positive_rational()), |(v, s)| {
                signature_even_and_conjugation_symmetric(v, s)
            }),
        ),
        (
            "signature mirror antisymmetry",
            run(cases, (seifert_matrix(), positive_rational()), |(v, s)| signature_mirror(v, s)),
        ),
        (
            "signature constant on root-free arcs",
            run(cases, (seifert_matrix(), positive_rational()), |(v, s)| signature_locally_constant(v, s)),
        ),
        ("jump sum equals signature at -1", run(cases, seifert_matrix(), jumps_sum_to_signature)),
        (
            "lattice count vs matrix on T(2,q)",
            run(cases, (1usize..11, positive_rational()), |(h, s)| lattice_matches_matrix(h, s)),
        ),
        ("alternating test accepts T(2,q)", run(cases, 1i64..40, alternating_test_accepts_two_strand)),
        ("alternating test rejects K[n]", run(cases, 1i64..=50, alternating_test_rejects_delta)),
        (
            "Sturm counts vs constructed roots",
            run(cases, (distinct_rationals(), 1i64..5, quarter_grid_point(), (1i64..60).prop_map(|k| rat(k, 4))), |(r, c, a, w)| {
                sturm_matches_constructed_roots(r, c, a, w)
            }),
        ),
        ("Sturm counts vs sign changes", run(cases, small_poly(), sturm_agrees_with_sign_changes)),
    ]
}
