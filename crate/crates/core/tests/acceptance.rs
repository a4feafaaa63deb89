//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::*;
use hvs_core::algebra::{LaurentPoly, RatMatrix, RatPoly, Real};
use hvs_core::classify::{connected_sum, transform_mirror, transform_reverse, HNumbers, Sign};
use hvs_core::invariants::{tower_matches_jordan, tristram_levine_direct, tristram_levine_from_h, Zeta};
use hvs_core::pipeline::LinkAnalysis;
use hvs_core::seifert::SeifertMatrix;
use hvs_core::skein::{check_semicontinuity, check_signature_skein, Hypothesis, SemicontinuityVerdict, SkeinAnalysis, SkeinTriple};
use num_rational::BigRational;

type Outcome = Result<String, String>;

const PRECISION: usize = 256;
const DELTA_MU4: [i64; 9] = [1, -4, 10, -16, 19, -16, 10, -4, 1];

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

fn analyse(s: &SeifertMatrix) -> Result<LinkAnalysis, String> {
    LinkAnalysis::run(s, PRECISION).map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Total number of H-numbers, to rule out extra blocks.
fn block_count(h: &HNumbers) -> usize {
    h.p.values().sum::<usize>() + h.q.values().sum::<usize>()
}

fn criterion_1() -> Outcome {
    let a = analyse(&seifert(&TREFOIL))?;
    ensure(a.h.p(&mu(1), 1, Sign::Minus) == 1, || "p¹ at e^{-iπ/3} (−1) is not 1".into())?;
    ensure(a.h.p(&mu(0), 1, Sign::Plus) == 1, || "p¹ at e^{iπ/3} (+1) is not 1".into())?;
    ensure(block_count(&a.h) == 2, || format!("extra blocks: {:?}", a.h.p))?;
    let mut sp = a.spectrum.rational_sp();
    sp.sort();
    ensure(sp == vec![(q(5, 6), 1), (q(7, 6), 1)] && a.spectrum.len() == 2, || format!("Sp = {:?}", sp))?;
    ensure(a.tower.polys[0].poly() == &RatPoly::from_ints(&[1, -1, 1]), || format!("Δ₀ = {}", a.tower.polys[0].poly()))?;
    ensure(a.nakanishi == 1, || format!("n_Q = {}", a.nakanishi))?;
    Ok("p¹ table, Sp = {5/6, 7/6}, Δ₀ = t²−t+1, n_Q = 1".into())
}

fn criterion_2() -> Outcome {
    let s = seifert(&EIGHT_TWENTY);
    let a = analyse(&s)?;
    ensure(a.h.p(&mu(0), 2, Sign::Plus) == 1 && a.h.p(&mu(1), 2, Sign::Plus) == 1, || format!("{:?}", a.h.p))?;
    ensure(block_count(&a.h) == 2, || format!("extra blocks: {:?}", a.h.p))?;
    let mut samples = 0;
    for b in [7i64, 12, 30, 60] {
        for k in 1..b {
            let z = Zeta::root_of_unity(k, b).map_err(|e| e.to_string())?;
            let at_eigenvalue = k * 6 == b || k * 6 == 5 * b;
            let expect = if at_eigenvalue { 1 } else { 0 };
            let d = tristram_levine_direct(&s, &z, PRECISION).map_err(|e| e.to_string())?;
            let t = tristram_levine_from_h(&a.h, &z).map_err(|e| e.to_string())?;
            ensure(d.sigma == expect && t.sigma == expect, || format!("σ({}) = {} / {}, expected {}", z, d.sigma, t.sigma, expect))?;
            samples += 1;
        }
    }
    Ok(format!("p² at e^{{±iπ/3}} (+1) = 1; σ = 0 off the eigenvalues and +1 at both ({} samples)", samples))
}

fn criterion_3() -> Outcome {
    let tables: Vec<HNumbers> = [-3i64, -2, -1, 1, 2, 3].iter().map(|&n| h_numbers(&seifert(&[[n]]))).collect();
    for (h, n) in tables.iter().zip([-3i64, -2, -1, 1, 2, 3]) {
        let u = if n > 0 { Sign::Minus } else { Sign::Plus };
        ensure(h.p(&one(), 1, u) == 1 && block_count(h) == 1, || format!("n = {}: {:?}", n, h.p))?;
    }
    ensure(tables[0] == tables[1] && tables[1] == tables[2], || "negative twists differ".into())?;
    ensure(tables[3] == tables[4] && tables[4] == tables[5], || "positive twists differ".into())?;
    Ok("W¹₁(−1) for n > 0, W¹₁(+1) for n < 0, independent of |n|".into())
}

fn criterion_4() -> Outcome {
    let from_h = |s: &[[i64; 8]; 8], h: &[[i64; 8]; 8]| -> Result<LinkAnalysis, String> {
        let v = mat(s).transpose().inverse().ok_or("singular Seifert matrix")?;
        LinkAnalysis::from_monodromy(&mat(h), &v, PRECISION).map_err(|e| e.to_string())
    };
    let l1 = from_h(&TEN_99, &H1)?;
    for i in 0..2 {
        for u in Sign::both() {
            ensure(l1.h.p(&mu(i), 2, u) == 1, || format!("10_99: {:?}", l1.h.p))?;
        }
    }
    ensure(block_count(&l1.h) == 4, || format!("10_99: {:?}", l1.h.p))?;
    let l2 = from_h(&TWELVE_N106, &H2)?;
    ensure(l2.h.p(&mu(0), 4, Sign::Minus) == 1 && l2.h.p(&mu(1), 4, Sign::Minus) == 1 && block_count(&l2.h) == 2, || {
        format!("12n106: {:?}", l2.h.p)
    })?;
    let pattern = |s: SeifertMatrix, on_mu: Sign| -> Result<LinkAnalysis, String> {
        let a = analyse(&s)?;
        for k in [1, 3] {
            ensure(a.h.p(&mu(0), k, on_mu) == 1 && a.h.p(&mu(1), k, on_mu.flip()) == 1, || format!("{:?}", a.h.p))?;
        }
        ensure(block_count(&a.h) == 4, || format!("{:?}", a.h.p))?;
        Ok(a)
    };
    let l3 = pattern(chiral(&TWELVE_N508_TABLE), Sign::Minus)?;
    let l4 = pattern(chiral(&TWELVE_N604_TABLE), Sign::Plus)?;
    let l5 = pattern(chiral(&TWELVE_N666_TABLE), Sign::Minus)?;
    let expect = LaurentPoly::normalize(&RatPoly::from_ints(&DELTA_MU4));
    let seifert_l1 = analyse(&seifert(&TEN_99))?;
    let seifert_l2 = analyse(&seifert(&TWELVE_N106))?;
    for (name, a) in [("10_99", &l1), ("12n106", &l2), ("10_99 (S)", &seifert_l1), ("12n106 (S)", &seifert_l2), ("12n508", &l3), ("12n604", &l4), ("12n666", &l5)] {
        ensure(a.tower.polys[0].poly() == expect.poly(), || format!("{}: Δ₀ = {}", name, a.tower.polys[0].poly()))?;
    }
    ensure(seifert_l1.h == l1.h && seifert_l2.h == l2.h, || "monodromy and Seifert routes differ".into())?;
    Ok("10_99 and 12n106 from h₁, h₂; 12n508/604/666 patterns; Δ₀ for all five".into())
}

fn zetas() -> Vec<Zeta> {
    let exact = [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (1, 5), (2, 5), (1, 6), (5, 6), (1, 8), (3, 8), (1, 12)];
    let approx = [0.07, 0.13, 0.27, 0.41, 0.49, 0.61, 0.777, 0.93];
    exact
        .iter()
        .map(|&(a, b)| Zeta::root_of_unity(a, b).expect("nonzero denominator"))
        .chain(approx.iter().map(|&x| Zeta::from_turn(Real::Approx(astro_float::BigFloat::from_f64(x, PRECISION)))))
        .collect()
}

struct Random {
    matrices: Vec<RatMatrix>,
    analyses: Vec<LinkAnalysis>,
}

fn criterion_5(r: &Random) -> Outcome {
    let zs = zetas();
    let mut failures = Vec::new();
    for (m, a) in r.matrices.iter().zip(&r.analyses) {
        let s = a.seifert.as_ref().expect("Seifert mode");
        for z in &zs {
            let d = tristram_levine_direct(s, z, PRECISION);
            let t = tristram_levine_from_h(&a.h, z);
            match (d, t) {
                (Ok(d), Ok(t)) if (d.sigma, d.nullity) == (t.sigma, t.nullity) => {}
                (d, t) => failures.push(format!("{:?} at {}: {:?} vs {:?}", m.to_rows(), z, d, t)),
            }
        }
        let v = tower_matches_jordan(&a.tower, &a.jordan);
        if !v.is_empty() {
            failures.push(format!("{:?}: {}", m.to_rows(), v.join("; ")));
        }
    }
    let total = r.matrices.len() * zs.len();
    ensure(failures.is_empty(), || format!("{} mismatches, first: {}", failures.len(), failures[0]))?;
    Ok(format!("{} matrices × {} ζ = {} signature comparisons, towers match I(n)", r.matrices.len(), zs.len(), total))
}

fn criterion_6(r: &Random) -> Outcome {
    let n = r.matrices.len();
    for (i, a) in r.analyses.iter().enumerate() {
        let s = a.seifert.as_ref().expect("Seifert mode");
        let v = a.h.symmetry_violations();
        ensure(v.is_empty(), || format!("(a) {:?}: {}", s.matrix().to_rows(), v.join("; ")))?;
        let mirror = analyse(&s.mirror())?;
        ensure(mirror.h == transform_mirror(&a.h), || format!("(d) mirror of {:?}", s.matrix().to_rows()))?;
        let reverse = analyse(&s.reverse())?;
        ensure(reverse.h == transform_reverse(&a.h), || format!("(c) reverse of {:?}", s.matrix().to_rows()))?;
        // partner keeping the sum within 12×12
        let j = (1..n).map(|k| (i + k) % n).find(|&j| r.analyses[j].hvs.dim() + s.dim() <= 12).unwrap_or(i);
        let other = r.analyses[j].seifert.as_ref().expect("Seifert mode");
        let sum = analyse(&s.connected_sum(other))?;
        ensure(sum.h == connected_sum(&a.h, &r.analyses[j].h), || {
            format!("(b) {:?} # {:?}", s.matrix().to_rows(), other.matrix().to_rows())
        })?;
    }
    Ok(format!("symmetry, connected sum, reversal and mirror on {} matrices", n))
}

fn criterion_7() -> Outcome {
    let zs: Vec<Zeta> = [(1, 2), (1, 3), (1, 4), (1, 6), (2, 5), (3, 8)]
        .iter()
        .map(|&(a, b)| Zeta::root_of_unity(a, b).expect("nonzero denominator"))
        .collect();
    let (mut checks, mut at_one, mut knots, mut nonbinding) = (0, 0, 0, 0);
    for m in random_matrices(100, 2..=7, 3, 2024) {
        let plus = SeifertMatrix::new(m).map_err(|e| e.to_string())?;
        let t = SkeinTriple::from_plus(&plus).map_err(|e| e.to_string())?;
        let a = SkeinAnalysis::new(&t).map_err(|e| e.to_string())?;
        at_one += a.tables.iter().filter(|t| t.at_one() && !t.is_trivial()).count();
        knots += usize::from(a.both_knots());
        let mut all = a.check_all();
        all.extend(check_signature_skein(&t, &zs, PRECISION).map_err(|e| e.to_string())?);
        all.extend(a.check_tower_against_jordan(PRECISION).map_err(|e| e.to_string())?);
        for v in &all {
            ensure(!v.is_violation(), || format!("{} at {} (index {}): {} on {:?}", v.rule, v.at, v.index, v.detail, plus.matrix().to_rows()))?;
            nonbinding += usize::from(!v.binding && !v.holds);
        }
        checks += all.len();
    }
    ensure(at_one > 0, || "no triple exercised λ = 1".into())?;
    Ok(format!(
        "100 triples, {} checks, {} with nontrivial λ = 1 tables, {} knot pairs, {} non-binding P_N failures at λ = 1",
        checks, at_one, knots, nonbinding
    ))
}

fn criterion_8() -> Outcome {
    let l1 = analyse(&seifert(&TREFOIL))?;
    let l2 = analyse(&seifert(&[[-1, 0], [-1, 0]]))?;
    for k in 1..=10 {
        let x = Real::Exact(q(k, 11));
        let r = check_semicontinuity(&l1, &l2, Hypothesis::A, &x);
        ensure(matches!(r.verdict, SemicontinuityVerdict::Holds { .. }) && r.count_identity == Some(true), || {
            format!("x = {}/11: {:?}", k, r.verdict)
        })?;
    }
    for (a, b) in [(1, 6), (5, 6)] {
        let x = Real::Exact(q(a, b));
        let r = check_semicontinuity(&l1, &l2, Hypothesis::A, &x);
        ensure(matches!(r.verdict, SemicontinuityVerdict::Refused { .. }), || format!("x = {}/{}: {:?}", a, b, r.verdict))?;
    }
    Ok("holds at x = k/11, k = 1..10; refused at x = 1/6, 5/6".into())
}

fn criterion_9(r: &Random) -> Outcome {
    let mut fixtures = vec![
        seifert(&TREFOIL),
        seifert(&FIGURE_EIGHT),
        seifert(&EIGHT_TWENTY),
        seifert(&TEN_99),
        seifert(&TWELVE_N106),
        chiral(&TWELVE_N508_TABLE),
        chiral(&TWELVE_N604_TABLE),
        chiral(&TWELVE_N666_TABLE),
    ];
    for n in [-2, -1, 1, 2] {
        fixtures.push(seifert(&[[n]]));
    }
    for (p, qq) in [(2, 3), (2, 5), (3, 4), (2, 4), (3, 3)] {
        fixtures.push(SeifertMatrix::torus(p, qq).map_err(|e| e.to_string())?);
    }
    let fixed: Vec<LinkAnalysis> = fixtures.iter().map(analyse).collect::<Result<_, _>>()?;
    for a in fixed.iter().chain(&r.analyses) {
        ensure(a.spectrum.len() == a.alexander_degree(), || {
            format!("#ESp = {} but deg Δ_m0 = {} for {:?}", a.spectrum.len(), a.alexander_degree(), a.seifert.as_ref().map(|s| s.matrix().to_rows()))
        })?;
    }
    Ok(format!("{} fixtures and {} random matrices", fixed.len(), r.analyses.len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let matrices = random_matrices(200, 2..=8, 3, 7);
    let random = matrices
        .iter()
        .map(|m| analyse(&SeifertMatrix::new(m.clone()).map_err(|e| e.to_string())?))
        .collect::<Result<Vec<_>, _>>()
        .map(|analyses| Random { matrices: matrices.clone(), analyses });
    let with_random = |f: fn(&Random) -> Outcome| -> Outcome {
        match &random {
            Ok(r) => f(r),
            Err(e) => Err(format!("random corpus failed: {}", e)),
        }
    };
    let corpus = start.elapsed();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("trefoil fixture", Box::new(criterion_1)),
        ("8_20 fixture", Box::new(criterion_2)),
        ("twist links", Box::new(criterion_3)),
        ("knots with Δ = (t−μ)⁴(t−μ̄)⁴", Box::new(criterion_4)),
        ("route equivalence", Box::new(|| with_random(criterion_5))),
        ("symmetry suite", Box::new(|| with_random(criterion_6))),
        ("skein suite", Box::new(criterion_7)),
        ("semicontinuity", Box::new(criterion_8)),
        ("#ESp = deg Δ_m0", Box::new(|| with_random(criterion_9))),
    ];
    println!("random corpus analysed in {:.1?}", corpus);
    let results: Vec<(usize, &str, Outcome, std::time::Duration)> = criteria
        .iter()
        .enumerate()
        .map(|(i, (name, f))| {
            let t = Instant::now();
            let r = f();
            (i + 1, *name, r, t.elapsed())
        })
        .collect();
    let mut failed = 0;
    for (n, name, r, t) in &results {
        match r {
            Ok(detail) => println!("PASS criterion {}: {}: {} [{:.1?}]", n, name, detail, t),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {}: {} [{:.1?}]", n, name, detail, t);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed in {:.1?}", results.len() - failed, results.len(), start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
