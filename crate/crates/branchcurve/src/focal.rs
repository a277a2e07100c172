//! Focal loci of two-parameter families of lines in P^3.
//!
//! A family is given either by a dual pair (two plane equations depending
//! on parameters u, v) or by a parametric pair (two spanning points). The
//! focal form on the line at `z = (u, v)` is the 2x2 determinant
//! `det [[a_u . x, a_v . x], [b_u . x, b_v . x]]` restricted to the line
//! `x = s P(z) + t Q(z)`: a binary quadratic in (s, t). It vanishes
//! identically exactly on non-filling families; on filling families it cuts
//! the two foci of the line.
//!
//! Everything here is formal polynomial arithmetic: derivatives are exact,
//! and the symbolic variants keep (u, v) as variables so identities can be
//! asserted as polynomial equalities.

use branchcurve_algebra::domain::{Field, Rationals, Ring};
use branchcurve_algebra::linalg::Matrix;
use branchcurve_algebra::multipoly::MultiPoly;
use branchcurve_algebra::RationalPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::Rng;

use crate::GeometryError;

/// Two-parameter family of lines in P^3. Component polynomials live in the
/// two parameter variables (u, v).
#[derive(Clone, Debug)]
pub enum LineFamily<F: Field> {
    /// Lines cut out by `a(z) . x = b(z) . x = 0`.
    DualPair {
        a: [MultiPoly<F>; 4],
        b: [MultiPoly<F>; 4],
    },
    /// Lines spanned by the points `P(z)` and `Q(z)`; `P(z)` is the marked
    /// point (the contact point for tangent families).
    ParametricPair {
        p: [MultiPoly<F>; 4],
        q: [MultiPoly<F>; 4],
    },
}

/// Root structure of the focal binary quadratic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FocusStructure {
    IdenticallyZero,
    DoubleRoot,
    TwoDistinctRoots,
}

/// The focal form on one line: coefficients of s^2, s t, t^2.
#[derive(Clone, Debug)]
pub struct FocalForm<F: Field> {
    pub z: (F::Elem, F::Elem),
    pub coeffs: [F::Elem; 3],
    pub structure: FocusStructure,
}

impl<F: Field> FocalForm<F> {
    pub fn evaluate(&self, domain: &F, s: &F::Elem, t: &F::Elem) -> F::Elem {
        let ss = domain.mul(&self.coeffs[0], &domain.mul(s, s));
        let st = domain.mul(&self.coeffs[1], &domain.mul(s, t));
        let tt = domain.mul(&self.coeffs[2], &domain.mul(t, t));
        domain.add(&domain.add(&ss, &st), &tt)
    }
}

fn det3<F: Field>(m: [[&MultiPoly<F>; 3]; 3]) -> MultiPoly<F> {
    let a = m[0][0].mul(&m[1][1].mul(m[2][2]).sub(&m[1][2].mul(m[2][1])));
    let b = m[0][1].mul(&m[1][0].mul(m[2][2]).sub(&m[1][2].mul(m[2][0])));
    let c = m[0][2].mul(&m[1][0].mul(m[2][1]).sub(&m[1][1].mul(m[2][0])));
    a.sub(&b).add(&c)
}

/// Generalized cross product in 4 coordinates: the vector `w` with
/// `w . x = det[a; b; c; x]`, orthogonal to a, b and c by construction.
fn cross4<F: Field>(
    a: &[MultiPoly<F>; 4],
    b: &[MultiPoly<F>; 4],
    c: &[MultiPoly<F>; 4],
) -> [MultiPoly<F>; 4] {
    let minor = |col: usize| {
        let idx: Vec<usize> = (0..4).filter(|j| *j != col).collect();
        det3([
            [&a[idx[0]], &a[idx[1]], &a[idx[2]]],
            [&b[idx[0]], &b[idx[1]], &b[idx[2]]],
            [&c[idx[0]], &c[idx[1]], &c[idx[2]]],
        ])
    };
    let mut out: Vec<MultiPoly<F>> = Vec::with_capacity(4);
    for i in 0..4 {
        let m = minor(i);
        // Cofactor sign for the last row of a 4x4 determinant: (-1)^(3+i).
        out.push(if (3 + i) % 2 == 1 { m.neg() } else { m });
    }
    out.try_into().expect("four components")
}

fn basis_vector<F: Field>(domain: &F, nvars: usize, j: usize) -> [MultiPoly<F>; 4] {
    let mut out: Vec<MultiPoly<F>> = (0..4)
        .map(|_| MultiPoly::zero(domain.clone(), nvars))
        .collect();
    out[j] = MultiPoly::one(domain.clone(), nvars);
    out.try_into().expect("four components")
}

/// Two generically independent vectors from the annihilator of a rank-2
/// pair, as formal polynomials. Fails when the input pair is degenerate.
fn annihilator_pair<F: Field>(
    v: &[MultiPoly<F>; 4],
    w: &[MultiPoly<F>; 4],
) -> Result<([MultiPoly<F>; 4], [MultiPoly<F>; 4]), GeometryError> {
    let domain = v[0].domain.clone();
    let nvars = v[0].nvars;
    let candidates: Vec<[MultiPoly<F>; 4]> = (0..4)
        .map(|j| cross4(v, w, &basis_vector(&domain, nvars, j)))
        .collect();
    let nonzero: Vec<&[MultiPoly<F>; 4]> = candidates
        .iter()
        .filter(|c| c.iter().any(|p| !p.is_zero()))
        .collect();
    for (i, first) in nonzero.iter().enumerate() {
        for second in nonzero.iter().skip(i + 1) {
            // Generic independence: some symbolic 2x2 minor is nonzero.
            let independent = (0..4).any(|r| {
                (r + 1..4).any(|c| {
                    let m = first[r].mul(&second[c]).sub(&first[c].mul(&second[r]));
                    !m.is_zero()
                })
            });
            if independent {
                return Ok(((*first).clone(), (*second).clone()));
            }
        }
    }
    Err(GeometryError::DegenerateLine)
}

impl<F: Field> LineFamily<F> {
    fn nvars(&self) -> usize {
        match self {
            LineFamily::DualPair { a, .. } => a[0].nvars,
            LineFamily::ParametricPair { p, .. } => p[0].nvars,
        }
    }

    /// Formal dual pair (plane equations), computing it for parametric
    /// input via the annihilator.
    pub fn dual_pair(&self) -> Result<([MultiPoly<F>; 4], [MultiPoly<F>; 4]), GeometryError> {
        match self {
            LineFamily::DualPair { a, b } => Ok((a.clone(), b.clone())),
            LineFamily::ParametricPair { p, q } => annihilator_pair(p, q),
        }
    }

    /// Formal parametric pair (spanning points).
    pub fn parametric_pair(
        &self,
    ) -> Result<([MultiPoly<F>; 4], [MultiPoly<F>; 4]), GeometryError> {
        match self {
            LineFamily::ParametricPair { p, q } => Ok((p.clone(), q.clone())),
            LineFamily::DualPair { a, b } => annihilator_pair(a, b),
        }
    }

    /// Spanning points of the line at a specific parameter value: the
    /// formal parametric pair evaluated at z. Using the same pair as the
    /// symbolic focal form keeps (s : t) parameters consistent.
    pub fn parametric_at(
        &self,
        z: &(F::Elem, F::Elem),
    ) -> Result<([F::Elem; 4], [F::Elem; 4]), GeometryError> {
        let (p, q) = self.parametric_pair()?;
        let domain = p[0].domain.clone();
        let eval = |v: &[MultiPoly<F>; 4]| -> [F::Elem; 4] {
            let vals: Vec<F::Elem> = v
                .iter()
                .map(|c| c.evaluate(&[z.0.clone(), z.1.clone()]))
                .collect();
            vals.try_into().expect("four")
        };
        let pv = eval(&p);
        let qv = eval(&q);
        let mut m = Matrix::zero(domain, 2, 4);
        for j in 0..4 {
            m.set(0, j, pv[j].clone());
            m.set(1, j, qv[j].clone());
        }
        if m.rank() != 2 {
            return Err(GeometryError::DegenerateLine);
        }
        Ok((pv, qv))
    }
}

/// The symbolic focal form: a polynomial in (u, v, s, t), vanishing on the
/// focal scheme. Variables are ordered u, v, s, t.
pub fn focal_form_symbolic<F: Field>(
    family: &LineFamily<F>,
) -> Result<MultiPoly<F>, GeometryError> {
    let nv = family.nvars();
    assert_eq!(nv, 2, "family components are polynomials in (u, v)");
    let (a, b) = family.dual_pair()?;
    let (p, q) = family.parametric_pair()?;
    focal_form_symbolic_with(&a, &b, &p, &q)
}

/// The symbolic focal form for an explicit dual pair and an explicit line
/// parametrization. Exposed so invariance under dual-basis changes can be
/// checked while holding the (s, t) parametrization fixed.
pub fn focal_form_symbolic_with<F: Field>(
    a: &[MultiPoly<F>; 4],
    b: &[MultiPoly<F>; 4],
    p: &[MultiPoly<F>; 4],
    q: &[MultiPoly<F>; 4],
) -> Result<MultiPoly<F>, GeometryError> {
    let ext = |v: &[MultiPoly<F>; 4]| -> Vec<MultiPoly<F>> {
        v.iter().map(|c| c.extend_vars(2)).collect()
    };
    let a4 = ext(a);
    let b4 = ext(b);
    let p4 = ext(p);
    let q4 = ext(q);
    let domain = a4[0].domain.clone();
    let s = MultiPoly::variable(domain.clone(), 4, 2);
    let t = MultiPoly::variable(domain.clone(), 4, 3);
    // x = s P + t Q on the line.
    let x: Vec<MultiPoly<F>> = (0..4)
        .map(|i| s.mul(&p4[i]).add(&t.mul(&q4[i])))
        .collect();
    // Sanity: the line satisfies both plane equations identically.
    let dot = |w: &[MultiPoly<F>], y: &[MultiPoly<F>]| -> MultiPoly<F> {
        let mut acc = MultiPoly::zero(domain.clone(), 4);
        for i in 0..4 {
            acc = acc.add(&w[i].mul(&y[i]));
        }
        acc
    };
    debug_assert!(dot(&a4, &x).is_zero());
    debug_assert!(dot(&b4, &x).is_zero());
    let deriv = |w: &[MultiPoly<F>], var: usize| -> Vec<MultiPoly<F>> {
        w.iter().map(|c| c.partial_derivative(var)).collect()
    };
    let au = deriv(&a4, 0);
    let av = deriv(&a4, 1);
    let bu = deriv(&b4, 0);
    let bv = deriv(&b4, 1);
    let e11 = dot(&au, &x);
    let e12 = dot(&av, &x);
    let e21 = dot(&bu, &x);
    let e22 = dot(&bv, &x);
    Ok(e11.mul(&e22).sub(&e12.mul(&e21)))
}

/// The focal form on the line at a specific parameter point.
pub fn focal_form<F: Field>(
    family: &LineFamily<F>,
    z: &(F::Elem, F::Elem),
) -> Result<FocalForm<F>, GeometryError> {
    // Degeneracy check at z.
    family.parametric_at(z)?;
    let symbolic = focal_form_symbolic(family)?;
    let domain = match family {
        LineFamily::DualPair { a, .. } => a[0].domain.clone(),
        LineFamily::ParametricPair { p, .. } => p[0].domain.clone(),
    };
    let at_z = symbolic.partial_evaluate(&[(0, z.0.clone()), (1, z.1.clone())]);
    let c20 = at_z.coeff_of(&[0, 0, 2, 0]);
    let c11 = at_z.coeff_of(&[0, 0, 1, 1]);
    let c02 = at_z.coeff_of(&[0, 0, 0, 2]);
    let all_zero =
        domain.is_zero(&c20) && domain.is_zero(&c11) && domain.is_zero(&c02);
    let structure = if all_zero {
        FocusStructure::IdenticallyZero
    } else {
        let disc = domain.sub(
            &domain.mul(&c11, &c11),
            &domain.mul(&domain.from_i64(4), &domain.mul(&c20, &c02)),
        );
        if domain.is_zero(&disc) {
            FocusStructure::DoubleRoot
        } else {
            FocusStructure::TwoDistinctRoots
        }
    };
    Ok(FocalForm {
        z: z.clone(),
        coeffs: [c20, c11, c02],
        structure,
    })
}

/// A focus on a line: projective parameter on the line, coordinates of the
/// point when the parameter is rational, and its multiplicity.
#[derive(Clone, Debug)]
pub struct Focus {
    /// (s : t) parameter of the focus, when rational over the base field.
    pub param: Option<(BigRational, BigRational)>,
    /// Point s P(z) + t Q(z), when the parameter is rational.
    pub point: Option<[BigRational; 4]>,
    pub multiplicity: u32,
}

/// Result of the foci computation over the rationals.
#[derive(Clone, Debug)]
pub enum Foci {
    /// Rational or double foci, with coordinates.
    Points(Vec<Focus>),
    /// Two conjugate foci: minimal quadratic c20 s^2 + c11 s t + c02 t^2
    /// irreducible over Q.
    ConjugatePair { coeffs: [BigRational; 3] },
}

fn bigint_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    let num = bigint_sqrt(q.numer())?;
    let den = bigint_sqrt(q.denom())?;
    Some(BigRational::new(num, den))
}

/// Foci of the family line at `z`, over the rationals.
pub fn foci(
    family: &LineFamily<Rationals>,
    z: &(BigRational, BigRational),
) -> Result<Foci, GeometryError> {
    let form = focal_form(family, z)?;
    if form.structure == FocusStructure::IdenticallyZero {
        return Err(GeometryError::NotFilling);
    }
    let (pv, qv) = family.parametric_at(z)?;
    let point_at = |s: &BigRational, t: &BigRational| -> [BigRational; 4] {
        let mut out = [
            BigRational::from_integer(0.into()),
            BigRational::from_integer(0.into()),
            BigRational::from_integer(0.into()),
            BigRational::from_integer(0.into()),
        ];
        for i in 0..4 {
            out[i] = s * &pv[i] + t * &qv[i];
        }
        out
    };
    let [c20, c11, c02] = form.coeffs.clone();
    let two = BigRational::from_integer(2.into());
    let four = BigRational::from_integer(4.into());
    let zero = BigRational::from_integer(0.into());
    let one = BigRational::from_integer(1.into());
    if c20 == zero {
        // t | F: the focus (1 : 0), plus the residual root of c11 s + c02 t.
        if c11 == zero {
            // F = c02 t^2: double focus at (1 : 0).
            let p = point_at(&one, &zero);
            return Ok(Foci::Points(vec![Focus {
                param: Some((one, zero)),
                point: Some(p),
                multiplicity: 2,
            }]));
        }
        let s2 = -&c02;
        let t2 = c11.clone();
        let p1 = point_at(&one, &zero);
        let p2 = point_at(&s2, &t2);
        return Ok(Foci::Points(vec![
            Focus {
                param: Some((one.clone(), zero)),
                point: Some(p1),
                multiplicity: 1,
            },
            Focus {
                param: Some((s2, t2)),
                point: Some(p2),
                multiplicity: 1,
            },
        ]));
    }
    let disc = &c11 * &c11 - &four * &c20 * &c02;
    if disc == zero {
        let s = -&c11;
        let t = &two * &c20;
        let p = point_at(&s, &t);
        return Ok(Foci::Points(vec![Focus {
            param: Some((s, t)),
            point: Some(p),
            multiplicity: 2,
        }]));
    }
    match rational_sqrt(&disc) {
        Some(root) => {
            let t = &two * &c20;
            let s1 = -&c11 + &root;
            let s2 = -&c11 - &root;
            let p1 = point_at(&s1, &t);
            let p2 = point_at(&s2, &t);
            Ok(Foci::Points(vec![
                Focus {
                    param: Some((s1, t.clone())),
                    point: Some(p1),
                    multiplicity: 1,
                },
                Focus {
                    param: Some((s2, t)),
                    point: Some(p2),
                    multiplicity: 1,
                },
            ]))
        }
        None => Ok(Foci::ConjugatePair {
            coeffs: [c20, c11, c02],
        }),
    }
}

/// Compose a 4-variable polynomial with four substitution polynomials.
pub fn compose_surface<F: Field>(
    f: &MultiPoly<F>,
    subs: &[MultiPoly<F>; 4],
) -> MultiPoly<F> {
    let domain = subs[0].domain.clone();
    let nvars = subs[0].nvars;
    let mut powers: Vec<Vec<MultiPoly<F>>> = subs
        .iter()
        .map(|s| vec![MultiPoly::one(domain.clone(), nvars), s.clone()])
        .collect();
    let mut acc = MultiPoly::zero(domain.clone(), nvars);
    for (mono, coef) in f.terms() {
        let mut term = MultiPoly::constant(domain.clone(), nvars, coef.clone());
        for (i, &e) in mono.0.iter().enumerate() {
            while powers[i].len() <= e as usize {
                let next = powers[i].last().unwrap().mul(&subs[i]);
                powers[i].push(next);
            }
            if e > 0 {
                term = term.mul(&powers[i][e as usize]);
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// Restriction of a surface equation to the family lines, symbolically:
/// result lives in (u, v, t) with the line parametrized as `P + t Q`.
pub fn restrict_surface_symbolic<F: Field>(
    f: &MultiPoly<F>,
    family: &LineFamily<F>,
) -> Result<MultiPoly<F>, GeometryError> {
    assert_eq!(f.nvars, 4);
    let (p, q) = family.parametric_pair()?;
    let domain = p[0].domain.clone();
    // Variables (u, v, t).
    let t = MultiPoly::variable(domain.clone(), 3, 2);
    let subs: Vec<MultiPoly<F>> = (0..4)
        .map(|i| {
            let pi = p[i].extend_vars(1);
            let qi = q[i].extend_vars(1);
            pi.add(&t.mul(&qi))
        })
        .collect();
    let subs: [MultiPoly<F>; 4] = subs.try_into().expect("four");
    Ok(compose_surface(f, &subs))
}

/// Contact order of the family line with a surface at the marked point
/// `P(z)`: (order in t of f(P + t Q)) - 1.
pub fn contact_order<F: Field>(
    f: &MultiPoly<F>,
    family: &LineFamily<F>,
    z: &(F::Elem, F::Elem),
) -> Result<u32, GeometryError> {
    let restricted = restrict_surface_symbolic(f, family)?;
    let at_z = restricted.partial_evaluate(&[(0, z.0.clone()), (1, z.1.clone())]);
    let u = at_z.to_unipoly(2).expect("univariate in t");
    if u.is_zero() {
        return Err(GeometryError::LineInSurface);
    }
    let domain = u.domain.clone();
    let ord = u
        .coeffs
        .iter()
        .position(|c| !domain.is_zero(c))
        .expect("nonzero") as u32;
    if ord == 0 {
        return Err(GeometryError::Input(
            "marked point does not lie on the surface".into(),
        ));
    }
    Ok(ord - 1)
}

/// Rank of the evaluation map (s, t, u, v) -> s P(u,v) + t Q(u,v) at a
/// sampled point; rank 4 certifies the filling property.
pub fn evaluation_rank_at<F: Field, R: Rng + ?Sized>(
    family: &LineFamily<F>,
    rng: &mut R,
) -> Result<usize, GeometryError> {
    let (p, q) = family.parametric_pair()?;
    let domain = p[0].domain.clone();
    let sample = |rng: &mut R| domain.from_i64(rng.gen_range(2..1000));
    let (u, v, s, t) = (sample(rng), sample(rng), sample(rng), sample(rng));
    let zpt = [u.clone(), v.clone()];
    let eval = |w: &[MultiPoly<F>; 4]| -> Vec<F::Elem> {
        w.iter().map(|c| c.evaluate(&zpt)).collect()
    };
    let pv = eval(&p);
    let qv = eval(&q);
    let pu: Vec<F::Elem> = p
        .iter()
        .map(|c| c.partial_derivative(0).evaluate(&zpt))
        .collect();
    let pvv: Vec<F::Elem> = p
        .iter()
        .map(|c| c.partial_derivative(1).evaluate(&zpt))
        .collect();
    let qu: Vec<F::Elem> = q
        .iter()
        .map(|c| c.partial_derivative(0).evaluate(&zpt))
        .collect();
    let qvv: Vec<F::Elem> = q
        .iter()
        .map(|c| c.partial_derivative(1).evaluate(&zpt))
        .collect();
    let mut m = Matrix::zero(domain.clone(), 4, 4);
    for i in 0..4 {
        m.set(i, 0, pv[i].clone());
        m.set(i, 1, qv[i].clone());
        let du = domain.add(&domain.mul(&s, &pu[i]), &domain.mul(&t, &qu[i]));
        let dv = domain.add(&domain.mul(&s, &pvv[i]), &domain.mul(&t, &qvv[i]));
        m.set(i, 2, du);
        m.set(i, 3, dv);
    }
    Ok(m.rank())
}

// ---------------------------------------------------------------------------
// Reference families
// ---------------------------------------------------------------------------

fn qpoly(terms: Vec<(Vec<u32>, i64)>) -> RationalPoly {
    let t = terms
        .into_iter()
        .map(|(e, c)| (e, Rationals.from_i64(c)))
        .collect();
    MultiPoly::from_terms(Rationals, 2, t)
}

/// Tangent family of the smooth quadric x0 x3 = x1 x2 along the
/// parametrization [1 : u : v : uv], direction p_u + p_v.
pub fn quadric_tangent_family() -> LineFamily<Rationals> {
    let p = [
        qpoly(vec![(vec![0, 0], 1)]),
        qpoly(vec![(vec![1, 0], 1)]),
        qpoly(vec![(vec![0, 1], 1)]),
        qpoly(vec![(vec![1, 1], 1)]),
    ];
    let q = [
        qpoly(vec![]),
        qpoly(vec![(vec![0, 0], 1)]),
        qpoly(vec![(vec![0, 0], 1)]),
        qpoly(vec![(vec![1, 0], 1), (vec![0, 1], 1)]),
    ];
    LineFamily::ParametricPair { p, q }
}

/// The quadric x0 x3 - x1 x2.
pub fn quadric_surface() -> RationalPoly {
    let x = |i: usize| MultiPoly::<Rationals>::variable(Rationals, 4, i);
    x(0).mul(&x(3)).sub(&x(1).mul(&x(2)))
}

/// Asymptotic tangent family of the ruled cubic x0^2 x3 = x1^2 x2 along
/// [1 : u : v : u^2 v], direction 2u P_u - v P_v (contact order 2).
pub fn ruled_cubic_asymptotic_family() -> LineFamily<Rationals> {
    let p = [
        qpoly(vec![(vec![0, 0], 1)]),
        qpoly(vec![(vec![1, 0], 1)]),
        qpoly(vec![(vec![0, 1], 1)]),
        qpoly(vec![(vec![2, 1], 1)]),
    ];
    // 2u P_u - v P_v = (0, 2u, -v, 3 u^2 v).
    let q = [
        qpoly(vec![]),
        qpoly(vec![(vec![1, 0], 2)]),
        qpoly(vec![(vec![0, 1], -1)]),
        qpoly(vec![(vec![2, 1], 3)]),
    ];
    LineFamily::ParametricPair { p, q }
}

/// The ruled cubic x0^2 x3 - x1^2 x2.
pub fn ruled_cubic_surface() -> RationalPoly {
    let x = |i: usize| MultiPoly::<Rationals>::variable(Rationals, 4, i);
    x(0).pow(2).mul(&x(3)).sub(&x(1).pow(2).mul(&x(2)))
}

/// The star of lines through [1:0:0:0]: dual pair (0, u, -1, 0), (0, v, 0, -1).
pub fn star_family() -> LineFamily<Rationals> {
    let a = [
        qpoly(vec![]),
        qpoly(vec![(vec![1, 0], 1)]),
        qpoly(vec![(vec![0, 0], -1)]),
        qpoly(vec![]),
    ];
    let b = [
        qpoly(vec![]),
        qpoly(vec![(vec![0, 1], 1)]),
        qpoly(vec![]),
        qpoly(vec![(vec![0, 0], -1)]),
    ];
    LineFamily::DualPair { a, b }
}

/// A genuinely non-filling family: all lines inside the plane x3 = 0,
/// spanned by [1:0:u:0] and [0:1:v:0].
pub fn planar_family() -> LineFamily<Rationals> {
    let p = [
        qpoly(vec![(vec![0, 0], 1)]),
        qpoly(vec![]),
        qpoly(vec![(vec![1, 0], 1)]),
        qpoly(vec![]),
    ];
    let q = [
        qpoly(vec![]),
        qpoly(vec![(vec![0, 0], 1)]),
        qpoly(vec![(vec![0, 1], 1)]),
        qpoly(vec![]),
    ];
    LineFamily::ParametricPair { p, q }
}

/// A two-parameter family with contact order 3 against x0^3 x3 = x1^4:
/// lines through [1:0:v:0] with direction [0:1:u:0]; necessarily
/// non-filling (all lines lie in x3 = 0).
pub fn contact_three_family() -> LineFamily<Rationals> {
    let p = [
        qpoly(vec![(vec![0, 0], 1)]),
        qpoly(vec![]),
        qpoly(vec![(vec![0, 1], 1)]),
        qpoly(vec![]),
    ];
    let q = [
        qpoly(vec![]),
        qpoly(vec![(vec![0, 0], 1)]),
        qpoly(vec![(vec![1, 0], 1)]),
        qpoly(vec![]),
    ];
    LineFamily::ParametricPair { p, q }
}

/// The quartic x0^3 x3 - x1^4 used with [`contact_three_family`].
pub fn contact_three_surface() -> RationalPoly {
    let x = |i: usize| MultiPoly::<Rationals>::variable(Rationals, 4, i);
    x(0).pow(3).mul(&x(3)).sub(&x(1).pow(4))
}
