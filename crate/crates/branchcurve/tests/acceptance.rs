//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. The quintic run is long and therefore gated behind `--ignored`
//! (run `cargo test -- --include-ignored` to exercise it).

use std::sync::OnceLock;
use std::time::Instant;

use branchcurve::focal::{
    contact_order, evaluation_rank_at, focal_form, focal_form_symbolic, foci,
    planar_family, quadric_surface, quadric_tangent_family, restrict_surface_symbolic,
    ruled_cubic_asymptotic_family, ruled_cubic_surface, star_family, Foci, FocusStructure,
};
use branchcurve::invariants::{
    branch_degree, clifford_h_bound, cusp_count, hilbert_bound, moduli_bounds_canonical,
    node_count, nonspeciality, ram_genus, special_h0_bound, InvariantSet,
};
use branchcurve::pipeline::{run_verify, seeded_random_smooth_surface, RunConfig};
use branchcurve::report::{Report, Verdict};
use branchcurve_algebra::domain::Rationals;
use branchcurve_algebra::Ring;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const QUADRIC: &str = "x3^2+x0*x1+x2^2\n";
const CUBIC: &str = "x0^3+x1^3+x2^3+x3^3\n";
const QUARTIC: &str = "x0^4+x1^4+x2^4+x3^4\n";
const QUINTIC: &str = "x0^5+x1^5+x2^5+x3^5\n";
const RANDOM_CUBIC_SEED: u64 = 20260809;

fn cfg(primes: u32) -> RunConfig {
    RunConfig {
        primes,
        seed: 42,
        retry_budget: 8,
        stretch: false,
        time_budget: None,
    }
}

fn cubic_report() -> &'static Report {
    static R: OnceLock<Report> = OnceLock::new();
    R.get_or_init(|| run_verify(CUBIC, "fermat-cubic", &cfg(2)))
}

fn random_cubic_report() -> &'static Report {
    static R: OnceLock<Report> = OnceLock::new();
    R.get_or_init(|| {
        let f = seeded_random_smooth_surface(3, RANDOM_CUBIC_SEED);
        let text = f.format(&["x0", "x1", "x2", "x3"]);
        run_verify(&text, "seeded-random-cubic", &cfg(2))
    })
}

fn quartic_report() -> &'static Report {
    static R: OnceLock<Report> = OnceLock::new();
    R.get_or_init(|| run_verify(QUARTIC, "fermat-quartic", &cfg(2)))
}

fn assert_counts(report: &Report, deg_b: u32, cusps: u64, nodes: u64, label: &str) {
    assert_eq!(report.verdict, Verdict::Pass, "{label}: verdict {:?}", report.verdict);
    for run in &report.runs {
        assert!(run.accepted, "{label}: prime {} not accepted", run.prime);
        assert_eq!(run.deg_b, Some(deg_b), "{label}: wrong branch degree");
        let census = run.census.as_ref().expect("census present");
        assert_eq!(census.cusps, cusps, "{label}: cusp count");
        assert_eq!(census.nodes, nodes, "{label}: node count");
        assert_eq!(census.other, 0, "{label}: non-node/cusp points");
        let checks = run.checks.as_ref().expect("checks present");
        assert!(checks.branch_reduced && checks.deg_b_matches && checks.counts_match_formulas);
    }
}

#[test]
fn acceptance_1_quadric_end_to_end() {
    let start = Instant::now();
    let report = run_verify(QUADRIC, "quadric", &cfg(2));
    assert_counts(&report, 2, 0, 0, "quadric");
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "quadric run took {elapsed:?}, budget is 1 s"
    );
    println!(
        "criterion 1: PASS - quadric: deg B = 2, no singular points, {} primes, {:.2?}",
        report.runs.len(),
        elapsed
    );
}

#[test]
fn acceptance_2_cubics_end_to_end() {
    let start = Instant::now();
    let fermat = cubic_report();
    assert_counts(fermat, 6, 6, 0, "fermat cubic");
    let random = random_cubic_report();
    assert_counts(random, 6, 6, 0, "random smooth cubic");
    for report in [fermat, random] {
        for run in &report.runs {
            assert!(run.prime >= 1 << 30 && run.prime < 1 << 31);
            assert!(
                run.checks.as_ref().unwrap().absolutely_irreducible,
                "branch curve must be absolutely irreducible"
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 4.0 * 30.0,
        "cubic acceptance took {elapsed:?}, budget 30 s per prime"
    );
    println!(
        "criterion 2: PASS - two cubics, 2 primes each: deg B = 6, 6 cusps, 0 nodes, absolutely irreducible ({:.2?})",
        elapsed
    );
}

#[test]
fn acceptance_3_quartic_end_to_end() {
    let start = Instant::now();
    let report = quartic_report();
    assert_counts(report, 12, 24, 12, "fermat quartic");
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 2.0 * 600.0,
        "quartic took {elapsed:?}, budget 10 min per prime"
    );
    println!(
        "criterion 3: PASS - quartic: deg B = 12, 24 cusps, 12 nodes ({:.2?})",
        elapsed
    );
}

#[test]
#[ignore = "stretch run (quintic); enable with --include-ignored"]
fn acceptance_4_quintic_stretch() {
    let mut config = cfg(1);
    config.stretch = true;
    config.time_budget = Some(std::time::Duration::from_secs(1800));
    let report = run_verify(QUINTIC, "fermat-quintic", &config);
    match report.verdict {
        Verdict::Pass => {
            assert_counts(&report, 20, 60, 60, "fermat quintic");
            println!("criterion 4: PASS - quintic: deg B = 20, 60 cusps, 60 nodes");
        }
        Verdict::ResourceAbort => {
            // Allowed by the criterion: an abort is never a wrong count.
            assert!(report.runs.iter().all(|r| r.census.is_none()));
            println!("criterion 4: PASS - quintic aborted on the resource budget (no counts reported)");
        }
        other => panic!("quintic verdict {:?}", other),
    }
}

#[test]
fn acceptance_5_multiplicity_equals_branching_weight() {
    let mut checked = 0;
    for report in [cubic_report(), random_cubic_report(), quartic_report()] {
        for run in &report.runs {
            assert!(run.checks.as_ref().unwrap().multiplicity_equals_branching_weight);
            for pt in &run.census.as_ref().unwrap().points {
                assert_eq!(
                    pt.multiplicity, pt.branching_weight,
                    "local multiplicity must equal the branching weight"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
    println!(
        "criterion 5: PASS - multiplicity = branching weight at {checked} singular orbits (exact)"
    );
}

#[test]
fn acceptance_6_profile_correspondence() {
    let mut cusps = 0;
    let mut nodes = 0;
    for report in [cubic_report(), random_cubic_report(), quartic_report()] {
        for run in &report.runs {
            assert!(run.checks.as_ref().unwrap().profile_correspondence);
            for pt in &run.census.as_ref().unwrap().points {
                match pt.classification.as_str() {
                    "cusp" => {
                        assert_eq!(pt.profile[0], 3);
                        assert!(pt.profile[1..].iter().all(|n| *n == 1));
                        cusps += 1;
                    }
                    "node" => {
                        assert_eq!(&pt.profile[..2], &[2, 2]);
                        assert!(pt.profile[2..].iter().all(|n| *n == 1));
                        nodes += 1;
                    }
                    other => panic!("unexpected classification {other}"),
                }
            }
        }
    }
    assert!(cusps > 0 && nodes > 0);
    println!(
        "criterion 6: PASS - every cusp has profile (3,1,...), every node (2,2,1,...) ({cusps} cusp orbits, {nodes} node orbits)"
    );
}

fn qr(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[test]
fn acceptance_7_focal_suite() {
    // (i) non-filling detection: lines confined to a plane have an
    // identically vanishing focal form and evaluation rank < 4.
    let planar = planar_family();
    assert!(focal_form_symbolic(&planar).unwrap().is_zero());
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    assert!(evaluation_rank_at(&planar, &mut rng).unwrap() < 4);
    assert!(matches!(
        foci(&planar, &(qr(1), qr(2))),
        Err(branchcurve::GeometryError::NotFilling)
    ));

    // (ii) quadric tangent family: the contact point (s,t) = (1,0) is a
    // root of the focal form, as a symbolic identity and at 20 random
    // parameter points.
    let quadric_fam = quadric_tangent_family();
    let sym = focal_form_symbolic(&quadric_fam).unwrap();
    assert!(!sym.is_zero());
    let at_contact = sym.partial_evaluate(&[(2, qr(1)), (3, qr(0))]);
    assert!(at_contact.is_zero(), "F(u, v, 1, 0) must vanish identically");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let z = (qr(rng.gen_range(1..50)), qr(rng.gen_range(1..50)));
        let form = focal_form(&quadric_fam, &z).unwrap();
        let val = form.evaluate(&Rationals, &qr(1), &qr(0));
        assert!(Rationals.is_zero(&val), "contact point must be a focus at {z:?}");
    }

    // (iii) ruled cubic asymptotic family: restriction exactly 4 u^2 v t^3,
    // focal form exactly (unit) t^2, both as symbolic identities.
    let cubic_fam = ruled_cubic_asymptotic_family();
    let restricted = restrict_surface_symbolic(&ruled_cubic_surface(), &cubic_fam).unwrap();
    let expect = branchcurve_algebra::multipoly::MultiPoly::from_terms(
        Rationals,
        3,
        vec![(vec![2, 1, 3], Rationals.from_i64(4))],
    );
    assert_eq!(restricted, expect, "restriction must be exactly 4 u^2 v t^3");
    assert_eq!(contact_order(&ruled_cubic_surface(), &cubic_fam, &(qr(1), qr(1))).unwrap(), 2);
    let sym3 = focal_form_symbolic(&cubic_fam).unwrap();
    assert!(!sym3.is_zero());
    for (mono, _) in sym3.terms() {
        assert_eq!(mono.0[2], 0, "no s-dependence");
        assert_eq!(mono.0[3], 2, "pure t^2");
    }
    let form = focal_form(&cubic_fam, &(qr(1), qr(1))).unwrap();
    assert_eq!(form.structure, FocusStructure::DoubleRoot);
    match foci(&cubic_fam, &(qr(1), qr(1))).unwrap() {
        Foci::Points(pts) => {
            assert_eq!(pts.len(), 1);
            assert_eq!(pts[0].multiplicity, 2, "double focus at the contact point");
        }
        _ => panic!("double root expected"),
    }

    // (iv) focal form degree is 2 on filling families: tangency to the
    // quadric along the generic direction gives two distinct foci and
    // contact order 1 (filling tangent families never exceed order 2).
    for fam in [&quadric_fam, &cubic_fam] {
        assert_eq!(evaluation_rank_at(fam, &mut rng).unwrap(), 4);
    }
    let generic = focal_form(&quadric_fam, &(qr(3), qr(11))).unwrap();
    assert_eq!(generic.structure, FocusStructure::TwoDistinctRoots);
    assert_eq!(contact_order(&quadric_surface(), &quadric_fam, &(qr(3), qr(11))).unwrap(), 1);

    println!(
        "criterion 7 (ii)-(iv): PASS - contact-point focus (symbolic + 20 samples), \
         t^3 restriction with t^2 focal form, degree-2 focal forms on filling families; \
         non-filling detection exercised on the planar family"
    );
}

#[test]
fn acceptance_7i_star_family_focal_form_vanishes() {
    // Criterion 7(i) as stated: the star of lines through a fixed point
    // should have identically zero focal form. The computed focal form of
    // the star family is (unit) * t^2 with a double focus at the
    // fundamental point, and the star fills P^3 (evaluation rank 4), which
    // matches the degree-(r-k) statement for filling families; an
    // identically vanishing form characterizes non-filling families
    // instead. See notes/decisions.md for the analysis. The assertion below
    // follows the criterion verbatim and is expected to fail.
    let star = star_family();
    let sym = focal_form_symbolic(&star).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let rank = evaluation_rank_at(&star, &mut rng).unwrap();
    println!(
        "criterion 7 (i): computed star-family focal form is {} (evaluation rank {rank})",
        if sym.is_zero() { "identically zero" } else { "a nonzero multiple of t^2" },
    );
    assert!(
        sym.is_zero(),
        "criterion 7(i) asserts the star family's focal form vanishes identically; \
         the computed form is a unit times t^2 (double focus at the fundamental point) \
         and the family fills P^3 with evaluation rank {rank}, consistent with the \
         filling-family degree statement; the criterion contradicts it"
    );
    println!("criterion 7 (i): PASS");
}

#[test]
fn acceptance_8_invariants_suite() {
    // Veronese surface in P^5.
    let mut veronese = InvariantSet::new(4, 0, 9, 1);
    veronese.r = Some(5);
    veronese.h = Some(0);
    veronese.h_s = Some(0);
    let (bound, eligible) = hilbert_bound(&veronese).unwrap();
    assert_eq!(bound, 27);
    assert!(eligible, "h(S) = 0 makes the bound an equality");
    assert!(nonspeciality(&veronese));

    // All tabulated evaluations.
    let quadric = InvariantSet::new(2, 0, 8, 1);
    let cubic = InvariantSet::new(3, 1, 3, 1);
    let quartic = InvariantSet::new(4, 3, 0, 2);
    let quintic = InvariantSet::new(5, 6, 5, 5);
    assert_eq!(branch_degree(&quadric), 2);
    assert_eq!(branch_degree(&cubic), 6);
    assert_eq!(branch_degree(&InvariantSet::new(5, 6, 0, 0)), 20);
    assert_eq!(cusp_count(&cubic), 6);
    assert_eq!(cusp_count(&quartic), 24);
    assert_eq!(cusp_count(&quadric), 0);
    assert_eq!(cusp_count(&quintic), 60);
    assert_eq!(ram_genus(&cubic), 4);
    assert_eq!(ram_genus(&quartic), 19);
    assert_eq!(ram_genus(&quadric), 0);
    assert_eq!(ram_genus(&quintic), 51);
    assert_eq!(node_count(&cubic).unwrap(), 0);
    assert_eq!(node_count(&quartic).unwrap(), 12);
    assert_eq!(node_count(&quintic).unwrap(), 60);
    let mut quadric_p3 = quadric.clone();
    quadric_p3.r = Some(3);
    quadric_p3.h = Some(0);
    assert_eq!(hilbert_bound(&quadric_p3).unwrap().0, 9);
    assert!(nonspeciality(&quadric));
    assert!(!nonspeciality(&InvariantSet::new(1, 0, 9, 1)));

    // Exact rational bounds.
    let half = |n: i64| BigRational::new(BigInt::from(n), BigInt::from(2));
    assert_eq!(clifford_h_bound(&InvariantSet::new(7, 3, 7, 2)), half(1));
    assert_eq!(clifford_h_bound(&cubic), half(-11));
    assert_eq!(clifford_h_bound(&InvariantSet::new(4, 3, 8, 1)), half(25));
    let mut sp = InvariantSet::new(1, 1, 0, 0);
    sp.r = Some(3);
    assert_eq!(special_h0_bound(&sp).unwrap(), qr(6));
    let mut sp5 = InvariantSet::new(4, 0, 9, 1);
    sp5.r = Some(5);
    assert_eq!(special_h0_bound(&sp5).unwrap(), qr(23));
    assert_eq!(moduli_bounds_canonical(9, 3, 0, 0).0, 49);
    assert_eq!(moduli_bounds_canonical(9, 3, 0, 2).1, 11);
    assert_eq!(moduli_bounds_canonical(0, 0, 0, 3).2, 34);

    println!(
        "criterion 8: PASS - Veronese bound 27 (equality-eligible), all tabulated formula \
         values reproduced, half-integer bounds exact"
    );
}

#[test]
fn acceptance_9_kernel_property_smoke() {
    // The full suites (500 resultant instances, 500 factorization round
    // trips with exhaustive root scans, 100 solver-vs-scan instances) run
    // in this same workspace invocation as the branchcurve-algebra
    // `kernel_properties` test target. This smoke re-runs a slice of each
    // through the public APIs.
    use branchcurve_algebra::domain::{ExtensionField, FiniteField, PrimeField};
    use branchcurve_algebra::factor::{factor_univariate, is_irreducible};
    use branchcurve_algebra::multipoly::MultiPoly;
    use branchcurve_algebra::resultant::{resultant, resultant_sylvester};
    use branchcurve_algebra::solve::solve_bivariate;
    use branchcurve_algebra::unipoly::UniPoly;

    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE);
    let f = PrimeField::new(10007).unwrap();
    let rand_poly = |rng: &mut ChaCha8Rng| loop {
        let t: Vec<(Vec<u32>, u64)> = (0..4)
            .map(|_| {
                (
                    vec![rng.gen_range(0..=3u32), rng.gen_range(0..=3u32)],
                    rng.gen_range(0..10007u64),
                )
            })
            .collect();
        let p = MultiPoly::from_terms(f, 2, t);
        if p.degree_in(0) > 0 {
            return p;
        }
    };
    for _ in 0..60 {
        let a = rand_poly(&mut rng);
        let b = rand_poly(&mut rng);
        let h = rand_poly(&mut rng);
        let lhs = resultant(&a.mul(&b), &h, 0).unwrap();
        let rhs = resultant(&a, &h, 0).unwrap().mul(&resultant(&b, &h, 0).unwrap());
        assert_eq!(lhs, rhs);
        assert_eq!(resultant_sylvester(&a, &h, 0).unwrap(), resultant(&a, &h, 0).unwrap());
    }
    for i in 0..60 {
        let p = [3u64, 5, 7, 11, 13][i % 5];
        let field = PrimeField::new(p).unwrap();
        let deg = rng.gen_range(1..=6);
        let mut coeffs: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..p)).collect();
        coeffs.push(rng.gen_range(1..p));
        let u = UniPoly::new(field, coeffs);
        let fact = factor_univariate(&u, &mut rng).unwrap();
        assert_eq!(fact.product(), u);
        assert!(fact.factors.iter().all(|(g, _)| is_irreducible(g)));
    }
    let mut solved = 0;
    while solved < 10 {
        let p = [5u64, 7][solved % 2];
        let field = PrimeField::new(p).unwrap();
        let rand_small = |rng: &mut ChaCha8Rng| {
            let t: Vec<(Vec<u32>, u64)> = (0..4)
                .map(|_| {
                    (
                        vec![rng.gen_range(0..=2u32), rng.gen_range(0..=2u32)],
                        rng.gen_range(0..p),
                    )
                })
                .collect();
            MultiPoly::from_terms(field, 2, t)
        };
        let a = rand_small(&mut rng);
        let b = rand_small(&mut rng);
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let sol = match solve_bivariate(&a, &b, 0, 1, &mut rng) {
            Ok(s) => s,
            Err(_) => continue,
        };
        // Rational-point count must match a full scan of GF(p)^2.
        let expected: u64 = sol
            .points
            .iter()
            .filter(|pt| pt.residue_degree == 1)
            .map(|_| 1u64)
            .sum();
        let ext = ExtensionField::new(field, vec![0, 1]).unwrap();
        let mut got = 0;
        for i in 0..p {
            for j in 0..p {
                let x = ext.element_at(i);
                let y = ext.element_at(j);
                let al = a.map_domain(ext.clone(), |c| ext.from_base(*c));
                let bl = b.map_domain(ext.clone(), |c| ext.from_base(*c));
                if ext.is_zero(&al.evaluate(&[x.clone(), y.clone()]))
                    && ext.is_zero(&bl.evaluate(&[x, y]))
                {
                    got += 1;
                }
            }
        }
        assert_eq!(got, expected);
        solved += 1;
    }
    println!(
        "criterion 9: PASS - kernel smoke here (60+60+10); full 500/500/100 suites run as \
         branchcurve-algebra::kernel_properties in the same workspace test invocation"
    );
}

#[test]
fn acceptance_10_determinism() {
    let a = run_verify(CUBIC, "fermat-cubic", &cfg(2)).to_json();
    let b = run_verify(CUBIC, "fermat-cubic", &cfg(2)).to_json();
    assert_eq!(a, b, "identical seed and config must give byte-identical reports");
    let mut other = cfg(2);
    other.seed = 43;
    let c = run_verify(CUBIC, "fermat-cubic", &other).to_json();
    assert_ne!(a, c, "different seeds must pick different primes/frames");
    println!("criterion 10: PASS - byte-identical JSON for identical (input, seed, primes)");
}
