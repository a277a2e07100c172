//! Bulk randomized property suites for the elimination kernel:
//! resultant multiplicativity and specialization, factorization round
//! trips cross-checked by exhaustive root search, and bivariate solving
//! cross-checked by exhaustive point scans over small fields.

use branchcurve_algebra::domain::{ExtensionField, FiniteField, PrimeField, Ring};
use branchcurve_algebra::factor::{factor_univariate, find_irreducible, is_irreducible};
use branchcurve_algebra::multipoly::MultiPoly;
use branchcurve_algebra::resultant::{resultant, resultant_sylvester, resultant_unipoly};
use branchcurve_algebra::solve::solve_bivariate;
use branchcurve_algebra::unipoly::UniPoly;
use branchcurve_algebra::AlgebraError;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_poly(
    f: PrimeField,
    rng: &mut ChaCha8Rng,
    nvars: usize,
    maxdeg: u32,
    terms: usize,
) -> MultiPoly<PrimeField> {
    loop {
        let t: Vec<(Vec<u32>, u64)> = (0..terms)
            .map(|_| {
                (
                    (0..nvars).map(|_| rng.gen_range(0..=maxdeg)).collect(),
                    rng.gen_range(0..f.modulus()),
                )
            })
            .collect();
        let p = MultiPoly::from_terms(f, nvars, t);
        if p.degree_in(0) > 0 {
            return p;
        }
    }
}

#[test]
fn resultant_multiplicativity_and_specialization_500() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA11CE);
    let primes = [10007u64, 65537, 1_000_003];
    let mut done = 0;
    let mut idx = 0;
    while done < 500 {
        let f = PrimeField::new(primes[idx % primes.len()]).unwrap();
        idx += 1;
        let a = random_poly(f, &mut rng, 2, 3, 4);
        let b = random_poly(f, &mut rng, 2, 3, 4);
        let h = random_poly(f, &mut rng, 2, 3, 4);

        // Multiplicativity in the first argument.
        let lhs = resultant(&a.mul(&b), &h, 0).unwrap();
        let rhs = resultant(&a, &h, 0)
            .unwrap()
            .mul(&resultant(&b, &h, 0).unwrap());
        assert_eq!(lhs, rhs, "multiplicativity failed (instance {idx})");

        // Interpolated path agrees with the Sylvester determinant.
        let det = resultant_sylvester(&a, &h, 0).unwrap();
        let int = resultant(&a, &h, 0).unwrap();
        assert_eq!(det, int, "paths disagree (instance {idx})");

        // Specialization at a random point with surviving leading terms.
        let y0 = rng.gen_range(0..f.modulus());
        let assign = [(1usize, y0)];
        let lca = a.coeffs_wrt(0).pop().unwrap().partial_evaluate(&assign);
        let lch = h.coeffs_wrt(0).pop().unwrap().partial_evaluate(&assign);
        if !lca.is_zero() && !lch.is_zero() {
            let asp = a.partial_evaluate(&assign).to_unipoly(0).unwrap();
            let hsp = h.partial_evaluate(&assign).to_unipoly(0).unwrap();
            let scalar = resultant_unipoly(&asp, &hsp);
            assert_eq!(
                int.partial_evaluate(&assign).constant_value(),
                Some(scalar),
                "specialization failed (instance {idx})"
            );
        }
        done += 1;
    }
}

#[test]
fn factorization_round_trip_500() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xFAC7);
    let primes = [3u64, 5, 7, 11, 13];
    for i in 0..500 {
        let p = primes[i % primes.len()];
        let field = PrimeField::new(p).unwrap();
        let deg = rng.gen_range(1..=8);
        let mut coeffs: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..p)).collect();
        coeffs.push(rng.gen_range(1..p));
        let f = UniPoly::new(field, coeffs);

        let fact = factor_univariate(&f, &mut rng).unwrap();
        assert_eq!(fact.product(), f, "round trip failed (instance {i}, p={p})");
        for (g, _) in &fact.factors {
            assert!(is_irreducible(g), "non-irreducible factor (instance {i})");
            assert_eq!(g.lead(), 1, "factor not monic (instance {i})");
        }
        // Exhaustive root scan with multiplicities via repeated division.
        let mut expected_roots: Vec<(u64, u32)> = Vec::new();
        for r in 0..p {
            if field.is_zero(&f.evaluate(&r)) {
                let lin = UniPoly::new(field, vec![field.neg(&r), 1]);
                let mut mult = 0;
                let mut cur = f.clone();
                loop {
                    let (q, rem) = cur.quot_rem(&lin);
                    if !rem.is_zero() {
                        break;
                    }
                    mult += 1;
                    cur = q;
                    if cur.is_zero() {
                        break;
                    }
                }
                expected_roots.push((r, mult));
            }
        }
        let got: Vec<(u64, u32)> = fact
            .factors
            .iter()
            .filter(|(g, _)| g.deg() == 1)
            .map(|(g, m)| (field.neg(&g.coeffs[0]), *m))
            .collect();
        let mut got = got;
        got.sort();
        assert_eq!(got, expected_roots, "roots mismatch (instance {i}, p={p})");
    }
}

/// Count common zeros of p and q in GF(p^k)^2 by brute-force scan.
fn scan_count(
    p: &MultiPoly<PrimeField>,
    q: &MultiPoly<PrimeField>,
    ext: &ExtensionField,
) -> u64 {
    let order = ext.order().try_into().unwrap_or(u64::MAX);
    let pl = p.map_domain(ext.clone(), |c| ext.from_base(*c));
    let ql = q.map_domain(ext.clone(), |c| ext.from_base(*c));
    let mut count = 0;
    for i in 0..order {
        let x = ext.element_at(i);
        let pu = pl
            .partial_evaluate(&[(0, x.clone())])
            .to_unipoly(1)
            .unwrap();
        let qu = ql
            .partial_evaluate(&[(0, x.clone())])
            .to_unipoly(1)
            .unwrap();
        for j in 0..order {
            let y = ext.element_at(j);
            if ext.is_zero(&pu.evaluate(&y)) && ext.is_zero(&qu.evaluate(&y)) {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn solve_bivariate_orbit_counts_vs_scan_100() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5017e ^ 0x1234);
    let primes = [5u64, 7, 11, 13];
    let mut done = 0;
    let mut tries = 0;
    while done < 100 {
        tries += 1;
        assert!(tries < 1000, "too many degenerate random instances");
        let p = primes[done % primes.len()];
        let field = PrimeField::new(p).unwrap();
        let a = random_poly(field, &mut rng, 2, 2, 4);
        let b = random_poly(field, &mut rng, 2, 2, 4);
        let sol = match solve_bivariate(&a, &b, 0, 1, &mut rng) {
            Ok(s) => s,
            Err(AlgebraError::PositiveDimensionalIntersection) => continue,
            Err(AlgebraError::RetryBudgetExhausted(_)) => continue,
            Err(e) => panic!("unexpected error: {e}"),
        };
        for k in 1..=3usize {
            // Solutions rational over GF(p^k): orbits of degree dividing k.
            let expected: u64 = sol
                .points
                .iter()
                .filter(|pt| k as u32 % pt.residue_degree == 0)
                .map(|pt| pt.residue_degree as u64)
                .sum();
            let ext = if k == 1 {
                ExtensionField::new(field, find_irreducible(&field, 1, &mut rng).coeffs)
                    .unwrap()
            } else {
                ExtensionField::new(field, find_irreducible(&field, k, &mut rng).coeffs)
                    .unwrap()
            };
            let got = scan_count(&a, &b, &ext);
            assert_eq!(
                got, expected,
                "orbit count mismatch (instance {done}, p={p}, k={k})"
            );
        }
        done += 1;
    }
}
