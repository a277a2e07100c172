//! Zero-dimensional bivariate system solving over prime fields.
//!
//! Strategy: a random invertible shear `x -> x + t y` makes both inputs
//! monic in `y` up to a scalar (top-form condition), the resultant
//! `R(x) = Res_y` then enumerates the x-coordinates of all solutions.
//! Each irreducible factor of `R` cuts out a residue field; the fiber gcd
//! over that field locates the y-coordinate. Solutions are reported once per
//! Galois orbit, with exact coordinates in an explicit extension field.
//!
//! Shears are retried until every fiber carries a single geometric point
//! (separated position); tiny fields, where separation may be impossible,
//! fall back to fiber factorization with tower flattening, and intersection
//! multiplicities are then recovered by a separating resultant over a larger
//! extension.

use rand::Rng;

use crate::domain::{ExtensionField, FiniteField, PrimeField, Ring};
use crate::factor::{factor_univariate, make_extension, FieldEmbedding};
use crate::multipoly::MultiPoly;
use crate::resultant::resultant;
use crate::unipoly::UniPoly;
use crate::AlgebraError;

/// A Galois orbit of common zeros, represented by one point with exact
/// coordinates in its residue field.
#[derive(Clone, Debug)]
pub struct AlgebraicPoint {
    /// Residue field of the point (degree 1 for rational points).
    pub field: ExtensionField,
    pub x: Vec<u64>,
    pub y: Vec<u64>,
    /// Orbit size over the prime field.
    pub residue_degree: u32,
    /// Intersection multiplicity of the two curves at the point.
    pub multiplicity: u32,
}

#[derive(Clone, Debug)]
pub struct BivariateSolution {
    pub points: Vec<AlgebraicPoint>,
    /// Degree of the sheared eliminant.
    pub resultant_degree: u32,
    /// Whether a fully separating shear was found (always true over large
    /// fields).
    pub separated: bool,
}

impl BivariateSolution {
    /// Bezout bookkeeping: orbit sizes times multiplicities.
    pub fn total_with_multiplicity(&self) -> u32 {
        self.points
            .iter()
            .map(|p| p.residue_degree * p.multiplicity)
            .sum()
    }
}

fn top_form_value(p: &MultiPoly<PrimeField>, vx: usize, vy: usize, t: u64) -> u64 {
    let d = p.total_degree().unwrap_or(0);
    let top = p.homogeneous_part(d);
    top.partial_evaluate(&[(vx, t), (vy, 1)])
        .constant_value()
        .expect("top form fully evaluated")
}

/// Specialize `vx` to an extension-field value; result is univariate in `vy`.
fn specialize_x(
    p: &MultiPoly<PrimeField>,
    vx: usize,
    vy: usize,
    ext: &ExtensionField,
    xval: &[u64],
) -> UniPoly<ExtensionField> {
    let xval = xval.to_vec();
    let mut acc = UniPoly::zero(ext.clone());
    for c in p.coeffs_wrt(vx).iter().rev() {
        let cu = c.to_unipoly(vy).expect("only vy left");
        let lifted = UniPoly::new(
            ext.clone(),
            cu.coeffs.iter().map(|a| ext.from_base(*a)).collect(),
        );
        acc = acc.scale(&xval).add(&lifted);
    }
    acc
}

fn lift_to_ext(p: &MultiPoly<PrimeField>, ext: &ExtensionField) -> MultiPoly<ExtensionField> {
    p.map_domain(ext.clone(), |c| ext.from_base(*c))
}

/// Order of `x - root` in `r`.
fn root_order(r: &UniPoly<ExtensionField>, root: &[u64]) -> u32 {
    let ext = r.domain.clone();
    let lin = UniPoly::new(ext.clone(), vec![ext.neg(&root.to_vec()), ext.one()]);
    let mut ord = 0;
    let mut cur = r.clone();
    loop {
        let (q, rem) = cur.quot_rem(&lin);
        if !rem.is_zero() {
            return ord;
        }
        ord += 1;
        cur = q;
        if cur.is_zero() {
            return ord;
        }
    }
}

/// Intersection multiplicity of `p` and `q` at a point over `start_field`,
/// computed as the order of the point's x-coordinate in a separating
/// eliminant over a large enough extension. Only needed on tiny fields.
fn intersection_multiplicity<R: Rng + ?Sized>(
    p: &MultiPoly<PrimeField>,
    q: &MultiPoly<PrimeField>,
    vx: usize,
    vy: usize,
    start_field: &ExtensionField,
    px: &[u64],
    py: &[u64],
    rng: &mut R,
) -> Result<u32, AlgebraError> {
    let base = start_field.base_field();
    let k = start_field.degree();
    for level in 1..=4usize {
        let n = k * level;
        let (big, emb) = if n == k {
            (start_field.clone(), FieldEmbedding::identity(start_field))
        } else {
            let big = make_extension(base, n, rng);
            let emb = FieldEmbedding::new(start_field, &big, rng)?;
            (big, emb)
        };
        let a = emb.map(px);
        let b = emb.map(py);
        let pl = lift_to_ext(p, &big);
        let ql = lift_to_ext(q, &big);
        'shears: for _ in 0..24 {
            let t = big.sample(rng);
            // Shear x -> x + t y over the big field.
            let repl = MultiPoly::variable(big.clone(), p.nvars, vx)
                .add(&MultiPoly::variable(big.clone(), p.nvars, vy).scale(&t));
            // Top-form conditions for clean specialization (checked on the
            // unsheared lifts).
            let dtop = |f: &MultiPoly<ExtensionField>| {
                let d = f.total_degree().unwrap_or(0);
                f.homogeneous_part(d)
                    .partial_evaluate(&[(vx, t.clone()), (vy, big.one())])
                    .constant_value()
                    .unwrap()
            };
            if big.is_zero(&dtop(&pl)) || big.is_zero(&dtop(&ql)) {
                continue;
            }
            let ps = pl.substitute(vx, &repl);
            let qs = ql.substitute(vx, &repl);
            // The sheared x-coordinate of the point (a, b) is a - t b.
            let x0 = big.sub(&a, &big.mul(&t, &b));
            // This point must be alone in its fiber.
            let pf = eval_x_ext(&ps, vx, vy, &x0);
            let qf = eval_x_ext(&qs, vx, vy, &x0);
            let g = pf.gcd(&qf);
            let fact = factor_univariate(&g, rng)?;
            if fact.factors.len() != 1 || fact.factors[0].0.deg() != 1 {
                continue 'shears;
            }
            let root = big.neg(&fact.factors[0].0.coeffs[0]);
            if root != b {
                continue 'shears;
            }
            let r = resultant(&ps, &qs, vy)?.to_unipoly(vx).expect("univariate");
            return Ok(root_order(&r, &x0));
        }
    }
    Err(AlgebraError::RetryBudgetExhausted(
        "no separating shear for intersection multiplicity".into(),
    ))
}

/// Specialize `vx` in an extension-coefficient polynomial.
fn eval_x_ext(
    p: &MultiPoly<ExtensionField>,
    vx: usize,
    vy: usize,
    xval: &[u64],
) -> UniPoly<ExtensionField> {
    let ext = p.domain.clone();
    let xval = xval.to_vec();
    let mut acc = UniPoly::zero(ext.clone());
    for c in p.coeffs_wrt(vx).iter().rev() {
        let cu = c.to_unipoly(vy).expect("only vy left");
        acc = acc.scale(&xval).add(&cu);
    }
    acc
}

/// All common zeros of two bivariate polynomials over `GF(p)`, one
/// representative per Galois orbit. `vx`, `vy` name the two active
/// variables; all other variables must be absent.
pub fn solve_bivariate<R: Rng + ?Sized>(
    p: &MultiPoly<PrimeField>,
    q: &MultiPoly<PrimeField>,
    vx: usize,
    vy: usize,
    rng: &mut R,
) -> Result<BivariateSolution, AlgebraError> {
    p.check_compatible(q)?;
    if p.is_zero() || q.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    for v in 0..p.nvars {
        if v != vx && v != vy {
            assert!(
                p.degree_in(v) == 0 && q.degree_in(v) == 0,
                "inputs must be bivariate in the named variables"
            );
        }
    }
    let field = p.domain.clone();
    // Positive dimensionality (a common factor) is detected inside the
    // shear loop: once both top forms are nonzero the inputs are monic in y
    // up to units, and the eliminant vanishes exactly when they share a
    // factor.

    // Shear search. First pass insists on full separation; if the budget is
    // exhausted (possible only over tiny fields) the best valid shear is
    // reused with per-fiber factorization.
    let mut valid_shear: Option<u64> = None;
    let budget = 24;
    for attempt in 0..budget {
        let t = if attempt == 0 { 0 } else { field.sample(rng) };
        if field.is_zero(&top_form_value(p, vx, vy, t))
            || field.is_zero(&top_form_value(q, vx, vy, t))
        {
            continue;
        }
        if valid_shear.is_none() {
            valid_shear = Some(t);
        }
        match solve_with_shear(p, q, vx, vy, t, true, rng)? {
            Some(sol) => return Ok(sol),
            None => continue,
        }
    }
    let Some(t) = valid_shear else {
        return Err(AlgebraError::RetryBudgetExhausted(
            "no shear keeps both top forms nonzero".into(),
        ));
    };
    let sol = solve_with_shear(p, q, vx, vy, t, false, rng)?
        .expect("non-strict solve always returns");
    Ok(sol)
}

fn solve_with_shear<R: Rng + ?Sized>(
    p: &MultiPoly<PrimeField>,
    q: &MultiPoly<PrimeField>,
    vx: usize,
    vy: usize,
    t: u64,
    require_separated: bool,
    rng: &mut R,
) -> Result<Option<BivariateSolution>, AlgebraError> {
    let field = p.domain.clone();
    let nvars = p.nvars;
    let repl = MultiPoly::variable(field, nvars, vx)
        .add(&MultiPoly::variable(field, nvars, vy).scale(&t));
    let ps = p.substitute(vx, &repl);
    let qs = q.substitute(vx, &repl);
    let r = resultant(&ps, &qs, vy)?;
    let ru = r.to_unipoly(vx).expect("eliminant is univariate");
    if ru.is_zero() {
        // Under a monic shear the eliminant vanishes exactly when the
        // inputs share a factor of positive degree.
        return Err(AlgebraError::PositiveDimensionalIntersection);
    }
    let rdeg = ru.deg() as u32;
    let fact = factor_univariate(&ru, rng)?;

    let mut points: Vec<AlgebraicPoint> = Vec::new();
    let mut separated = true;
    for (m, e) in &fact.factors {
        let ext = ExtensionField::new(field, m.coeffs.clone())?;
        let xi = ext.generator();
        let pf = specialize_x(&ps, vx, vy, &ext, &xi);
        let qf = specialize_x(&qs, vx, vy, &ext, &xi);
        let gy = pf.gcd(&qf);
        assert!(gy.deg() >= 1, "root of the eliminant has an empty fiber");
        let yfact = factor_univariate(&gy, rng)?;
        let fiber_separated = yfact.factors.len() == 1 && yfact.factors[0].0.deg() == 1;
        if !fiber_separated {
            if require_separated {
                return Ok(None);
            }
            separated = false;
        }
        for (h, _) in &yfact.factors {
            if h.deg() == 1 {
                let eta = ext.neg(&h.coeffs[0]);
                // Un-shear: original x = sheared x + t * y.
                let x = ext.add(&xi, &ext.mul(&ext.from_base(t), &eta));
                let mult = if fiber_separated {
                    *e
                } else {
                    intersection_multiplicity(p, q, vx, vy, &ext, &x, &eta, rng)?
                };
                points.push(AlgebraicPoint {
                    field: ext.clone(),
                    x,
                    y: eta,
                    residue_degree: ext.degree() as u32,
                    multiplicity: mult,
                });
            } else {
                // The y-coordinate generates a proper extension of the
                // fiber field: flatten the tower into one extension.
                let n = ext.degree() * h.deg();
                let big = make_extension(field, n, rng);
                let emb = FieldEmbedding::new(&ext, &big, rng)?;
                let hh = UniPoly::new(
                    big.clone(),
                    h.coeffs.iter().map(|c| emb.map(c)).collect(),
                );
                let mut roots: Vec<Vec<u64>> =
                    crate::factor::roots_with_multiplicity(&hh, rng)?
                        .into_iter()
                        .map(|(r, _)| r)
                        .collect();
                roots.sort();
                let eta = roots.into_iter().next().expect("splits over big field");
                let xi_big = emb.map(&xi);
                let x = big.add(&xi_big, &big.mul(&big.from_base(t), &eta));
                let mult = intersection_multiplicity(p, q, vx, vy, &big, &x, &eta, rng)?;
                points.push(AlgebraicPoint {
                    field: big.clone(),
                    x,
                    y: eta,
                    residue_degree: n as u32,
                    multiplicity: mult,
                });
            }
        }
    }
    // Exactness check: every reported point annihilates both inputs.
    for pt in &points {
        let pl = lift_to_ext(p, &pt.field);
        let ql = lift_to_ext(q, &pt.field);
        let mut coords = vec![pt.field.zero(); nvars];
        coords[vx] = pt.x.clone();
        coords[vy] = pt.y.clone();
        assert!(
            pt.field.is_zero(&pl.evaluate(&coords)),
            "reported point fails to annihilate p"
        );
        assert!(
            pt.field.is_zero(&ql.evaluate(&coords)),
            "reported point fails to annihilate q"
        );
    }
    points.sort_by(|a, b| {
        a.residue_degree
            .cmp(&b.residue_degree)
            .then_with(|| a.field.modulus_coeffs().cmp(b.field.modulus_coeffs()))
            .then_with(|| a.x.cmp(&b.x))
            .then_with(|| a.y.cmp(&b.y))
    });
    Ok(Some(BivariateSolution {
        points,
        resultant_degree: rdeg,
        separated,
    }))
}

/// Common zeros of a system: solve the first two polynomials, keep points
/// annihilating the rest.
pub fn solve_system<R: Rng + ?Sized>(
    polys: &[MultiPoly<PrimeField>],
    vx: usize,
    vy: usize,
    rng: &mut R,
) -> Result<Vec<AlgebraicPoint>, AlgebraError> {
    assert!(polys.len() >= 2);
    let sol = solve_bivariate(&polys[0], &polys[1], vx, vy, rng)?;
    let mut out = Vec::new();
    'points: for pt in sol.points {
        for extra in &polys[2..] {
            let lifted = lift_to_ext(extra, &pt.field);
            let mut coords = vec![pt.field.zero(); polys[0].nvars];
            coords[vx] = pt.x.clone();
            coords[vy] = pt.y.clone();
            if !pt.field.is_zero(&lifted.evaluate(&coords)) {
                continue 'points;
            }
        }
        out.push(pt);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn axes_intersect_at_origin() {
        let f = fp(10007);
        let x = MultiPoly::variable(f, 2, 0);
        let y = MultiPoly::variable(f, 2, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let sol = solve_bivariate(&x, &y, 0, 1, &mut rng).unwrap();
        assert_eq!(sol.points.len(), 1);
        let pt = &sol.points[0];
        assert_eq!(pt.residue_degree, 1);
        assert_eq!(pt.multiplicity, 1);
        assert!(pt.field.is_zero(&pt.x) && pt.field.is_zero(&pt.y));
    }

    #[test]
    fn conjugate_orbit_over_f7() {
        // x^2 + 1 = 0, y = 0 over GF(7): one orbit of size 2.
        let f = fp(7);
        let x = MultiPoly::variable(f, 2, 0);
        let y = MultiPoly::variable(f, 2, 1);
        let p = x.mul(&x).add(&MultiPoly::one(f, 2));
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let sol = solve_bivariate(&p, &y, 0, 1, &mut rng).unwrap();
        assert_eq!(sol.points.len(), 1);
        assert_eq!(sol.points[0].residue_degree, 2);
        // Brute scan: no solution in GF(7)^2, two in GF(49)^2.
        let mut count7 = 0;
        for a in 0..7u64 {
            for b in 0..7u64 {
                if (a * a + 1) % 7 == 0 && b == 0 {
                    count7 += 1;
                }
            }
        }
        assert_eq!(count7, 0);
        let f49 = ExtensionField::new(f, vec![1, 0, 1]).unwrap();
        let mut count49 = 0;
        for i in 0..49u64 {
            for j in 0..49u64 {
                let a = f49.element_at(i);
                let b = f49.element_at(j);
                let va = f49.add(&f49.mul(&a, &a), &f49.one());
                if f49.is_zero(&va) && f49.is_zero(&b) {
                    count49 += 1;
                }
            }
        }
        assert_eq!(count49, 2);
    }

    #[test]
    fn equal_inputs_are_positive_dimensional() {
        let f = fp(101);
        let x = MultiPoly::variable(f, 2, 0);
        let y = MultiPoly::variable(f, 2, 1);
        let p = x.mul(&y).add(&x);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert!(matches!(
            solve_bivariate(&p, &p, 0, 1, &mut rng),
            Err(AlgebraError::PositiveDimensionalIntersection)
        ));
    }

    #[test]
    fn full_grid_over_f3() {
        // x^3 - x and y^3 - y vanish on all of GF(3)^2: nine rational
        // points, all transverse; no shear over GF(3) separates them.
        let f = fp(3);
        let x = MultiPoly::variable(f, 2, 0);
        let y = MultiPoly::variable(f, 2, 1);
        let p = x.pow(3).sub(&x);
        let q = y.pow(3).sub(&y);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let sol = solve_bivariate(&p, &q, 0, 1, &mut rng).unwrap();
        assert!(!sol.separated);
        assert_eq!(sol.points.len(), 9);
        assert!(sol
            .points
            .iter()
            .all(|pt| pt.residue_degree == 1 && pt.multiplicity == 1));
        assert_eq!(sol.total_with_multiplicity(), sol.resultant_degree);
    }

    #[test]
    fn tangential_intersection_multiplicity() {
        // y^2 = x^3 against y = 0: intersection multiplicity 3 at origin.
        let f = fp(10007);
        let x = MultiPoly::variable(f, 2, 0);
        let y = MultiPoly::variable(f, 2, 1);
        let p = y.mul(&y).sub(&x.pow(3));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let sol = solve_bivariate(&p, &y, 0, 1, &mut rng).unwrap();
        assert_eq!(sol.points.len(), 1);
        assert_eq!(sol.points[0].multiplicity, 3);
        assert_eq!(sol.points[0].residue_degree, 1);
    }

    #[test]
    fn bezout_bookkeeping_random() {
        use rand::Rng;
        let f = fp(1009);
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let mut tested = 0;
        while tested < 15 {
            let rand_poly = |rng: &mut ChaCha8Rng| {
                let terms: Vec<(Vec<u32>, u64)> = (0..5)
                    .map(|_| {
                        (
                            vec![rng.gen_range(0..=2u32), rng.gen_range(0..=2u32)],
                            rng.gen_range(0..1009u64),
                        )
                    })
                    .collect();
                MultiPoly::from_terms(f, 2, terms)
            };
            let p = rand_poly(&mut rng);
            let q = rand_poly(&mut rng);
            if p.is_zero() || q.is_zero() {
                continue;
            }
            match solve_bivariate(&p, &q, 0, 1, &mut rng) {
                Ok(sol) => {
                    assert_eq!(sol.total_with_multiplicity(), sol.resultant_degree);
                    tested += 1;
                }
                Err(AlgebraError::PositiveDimensionalIntersection) => continue,
                Err(e) => panic!("unexpected error {e}"),
            }
        }
    }
}
