//! Singular points of the plane branch curve and their classification.
//!
//! A singular point is a node when its tangent cone has two distinct roots,
//! a cusp when the cone is a perfect square whose line does not divide the
//! cubic jet (contact order exactly 3); everything else is reported as
//! `Other` and treated upstream as a genericity failure.

use branchcurve_algebra::domain::{ExtensionField, FiniteField, PrimeField, Ring};
use branchcurve_algebra::linalg::Matrix;
use branchcurve_algebra::solve::solve_system;
use branchcurve_algebra::unipoly::UniPoly;
use branchcurve_algebra::{AlgebraError, PrimePoly, TowerPoly};
use rand::Rng;

use crate::GeometryError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Node,
    Cusp,
    Other(String),
}

impl Classification {
    pub fn label(&self) -> &str {
        match self {
            Classification::Node => "node",
            Classification::Cusp => "cusp",
            Classification::Other(_) => "other",
        }
    }
}

/// A Galois orbit of singular points of the branch curve.
#[derive(Clone, Debug)]
pub struct SingularPoint {
    pub field: ExtensionField,
    /// Affine coordinates in the sheared chart used for the local analysis.
    pub chart_point: (Vec<u64>, Vec<u64>),
    /// Homogeneous coordinates in the original plane (before the census
    /// shear), usable directly with the moved surface equation.
    pub plane_point: [Vec<u64>; 3],
    pub residue_degree: u32,
    /// Local multiplicity of the branch curve at the point.
    pub multiplicity: u32,
    /// Coefficients (c20, c11, c02) of the tangent cone when m = 2.
    pub tangent_cone: Option<[Vec<u64>; 3]>,
    pub classification: Classification,
}

/// Census of the singular locus, counted over all Galois conjugates.
#[derive(Clone, Debug)]
pub struct SingularityCensus {
    pub points: Vec<SingularPoint>,
    pub node_count: u64,
    pub cusp_count: u64,
    pub other_count: u64,
    /// The coordinate shear applied before chart analysis.
    pub shear: Matrix<PrimeField>,
}

impl SingularityCensus {
    pub fn total_points(&self) -> u64 {
        self.node_count + self.cusp_count + self.other_count
    }

    pub fn all_nodes_and_cusps(&self) -> bool {
        self.other_count == 0
    }
}

/// Classify a plane-curve singularity from its local expansion at the
/// origin. `local` is the translated affine curve (2 variables) over the
/// point's residue field; it must vanish at the origin.
pub fn classify_local(local: &TowerPoly) -> (u32, Option<[Vec<u64>; 3]>, Classification) {
    let field = local.domain.clone();
    let m = local.min_total_degree().unwrap_or(0);
    assert!(m >= 1, "local expansion must vanish at the origin");
    if m == 1 {
        return (1, None, Classification::Other("smooth point".into()));
    }
    if m > 2 {
        return (
            m,
            None,
            Classification::Other(format!("multiplicity {m}")),
        );
    }
    let cone = local.homogeneous_part(2);
    let c20 = cone.coeff_of(&[2, 0]);
    let c11 = cone.coeff_of(&[1, 1]);
    let c02 = cone.coeff_of(&[0, 2]);
    let tangent = Some([c20.clone(), c11.clone(), c02.clone()]);
    // Discriminant of the binary quadratic.
    let disc = field.sub(
        &field.mul(&c11, &c11),
        &field.mul(&field.from_i64(4), &field.mul(&c20, &c02)),
    );
    if !field.is_zero(&disc) {
        return (2, tangent, Classification::Node);
    }
    // Double root direction (u : v) of the cone.
    let root = if !field.is_zero(&c20) {
        // c20 u^2 + c11 u v + c02 v^2 = c20 (u + c11/(2 c20) v)^2.
        let two_c20 = field.mul(&field.from_i64(2), &c20);
        (field.neg(&c11), two_c20)
    } else {
        // c20 = 0 and disc = 0 force c11 = 0: cone = c02 v^2, root (1, 0).
        (field.one(), field.zero())
    };
    let jet3 = local.homogeneous_part(3);
    let value = jet3.evaluate(&[root.0.clone(), root.1.clone()]);
    if field.is_zero(&value) {
        (
            2,
            tangent,
            Classification::Other("tangent line meets the curve with order > 3".into()),
        )
    } else {
        (2, tangent, Classification::Cusp)
    }
}

fn lift_plane_point(
    field: &ExtensionField,
    shear: &Matrix<PrimeField>,
    a: &[u64],
    b: &[u64],
) -> [Vec<u64>; 3] {
    // Sheared chart point [a : b : 1] mapped back through the shear.
    let v = [a.to_vec(), b.to_vec(), field.from_base(1)];
    let mut out = [field.zero(), field.zero(), field.zero()];
    for (i, slot) in out.iter_mut().enumerate() {
        let mut acc = field.zero();
        for j in 0..3 {
            let c = field.from_base(*shear.at(i, j));
            acc = field.add(&acc, &field.mul(&c, &v[j]));
        }
        *slot = acc;
    }
    out
}

/// Do the restricted forms (to the line x2 = 0) have a common projective
/// zero? Used to verify that a shear moved every singular point into the
/// affine chart.
fn binary_forms_have_common_zero<R: Rng + ?Sized>(
    forms: &[PrimePoly],
    rng: &mut R,
) -> bool {
    let fp = forms[0].domain;
    let restricted: Vec<PrimePoly> = forms
        .iter()
        .map(|f| f.partial_evaluate(&[(2, 0u64)]))
        .collect();
    if restricted.iter().all(|f| f.is_zero()) {
        return true;
    }
    // gcd of the dehomogenizations plus the point at infinity [1:0].
    let mut g: Option<UniPoly<PrimeField>> = None;
    for f in &restricted {
        if f.is_zero() {
            continue;
        }
        let u = f.partial_evaluate(&[(1, 1u64)]).to_unipoly(0).expect("binary form");
        g = Some(match g {
            None => u,
            Some(prev) => prev.gcd(&u),
        });
    }
    let g = g.expect("some nonzero restriction");
    if !g.is_constant() {
        let _ = rng;
        return true;
    }
    // The dehomogenized gcd misses only the point [1:0].
    restricted
        .iter()
        .all(|f| fp.is_zero(&f.evaluate(&[1, 0, 0])))
}

/// Find and classify all singular points of a reduced plane curve given as
/// a homogeneous form in 3 variables. A seeded shear first moves the
/// singular locus into the affine chart; the multi-chart route
/// [`census_by_charts`] is kept as a cross-check.
pub fn census<R: Rng + ?Sized>(
    curve: &PrimePoly,
    rng: &mut R,
) -> Result<SingularityCensus, GeometryError> {
    assert_eq!(curve.nvars, 3);
    let fp = curve.domain;
    'shears: for attempt in 0..12 {
        let m = if attempt == 0 {
            Matrix::identity(fp, 3)
        } else {
            let data: Vec<u64> = (0..9).map(|_| fp.sample(rng)).collect();
            let m = Matrix::new(fp, 3, 3, data);
            if fp.is_zero(&m.det()) {
                continue;
            }
            m
        };
        let sheared = curve.linear_substitute(&m).expect("invertible");
        // Degree must survive dehomogenization.
        if fp.is_zero(&sheared.evaluate(&[0, 0, 1])) {
            continue;
        }
        // No singular point may remain on the line at infinity.
        let grads: Vec<PrimePoly> = (0..3).map(|i| sheared.partial_derivative(i)).collect();
        let mut inf_system = vec![sheared.clone()];
        inf_system.extend(grads.iter().cloned());
        if binary_forms_have_common_zero(&inf_system, rng) {
            continue;
        }
        let affine = sheared.dehomogenize(2);
        let px = affine.partial_derivative(0);
        let py = affine.partial_derivative(1);
        if px.is_zero() || py.is_zero() {
            continue;
        }
        let grad2_aff = grads[2].dehomogenize(2);
        let system = vec![px, py, affine.clone(), grad2_aff];
        let solved = match solve_system(&system, 0, 1, rng) {
            Ok(points) => points,
            Err(AlgebraError::PositiveDimensionalIntersection) => {
                continue 'shears;
            }
            Err(e) => return Err(GeometryError::Algebra(e)),
        };
        let mut points = Vec::new();
        let mut node_count = 0u64;
        let mut cusp_count = 0u64;
        let mut other_count = 0u64;
        for pt in solved {
            let lifted = affine.map_domain(pt.field.clone(), |c| pt.field.from_base(*c));
            let local = lifted.shift(0, &pt.x).shift(1, &pt.y);
            let (mult, tangent_cone, classification) = classify_local(&local);
            match classification {
                Classification::Node => node_count += pt.residue_degree as u64,
                Classification::Cusp => cusp_count += pt.residue_degree as u64,
                Classification::Other(_) => other_count += pt.residue_degree as u64,
            }
            let plane_point = lift_plane_point(&pt.field, &m, &pt.x, &pt.y);
            points.push(SingularPoint {
                field: pt.field,
                chart_point: (pt.x, pt.y),
                plane_point,
                residue_degree: pt.residue_degree,
                multiplicity: mult,
                tangent_cone,
                classification,
            });
        }
        return Ok(SingularityCensus {
            points,
            node_count,
            cusp_count,
            other_count,
            shear: m,
        });
    }
    Err(GeometryError::RetryBudgetExhausted(
        "no shear moved the singular locus into the affine chart".into(),
    ))
}

/// Multi-chart census without a shear: affine chart x2 = 1, then the
/// stratum x2 = 0 with x1 = 1, then the point [1:0:0]. Cross-check path.
pub fn census_by_charts<R: Rng + ?Sized>(
    curve: &PrimePoly,
    rng: &mut R,
) -> Result<Vec<(Classification, u32)>, GeometryError> {
    assert_eq!(curve.nvars, 3);
    let fp = curve.domain;
    let mut out: Vec<(Classification, u32)> = Vec::new();
    let grads: Vec<PrimePoly> = (0..3).map(|i| curve.partial_derivative(i)).collect();

    // Chart x2 = 1.
    let affine = curve.dehomogenize(2);
    let px = affine.partial_derivative(0);
    let py = affine.partial_derivative(1);
    if !px.is_zero() && !py.is_zero() {
        let system = vec![px, py, affine.clone(), grads[2].dehomogenize(2)];
        for pt in solve_system(&system, 0, 1, rng).map_err(GeometryError::Algebra)? {
            let lifted = affine.map_domain(pt.field.clone(), |c| pt.field.from_base(*c));
            let local = lifted.shift(0, &pt.x).shift(1, &pt.y);
            let (_, _, classification) = classify_local(&local);
            out.push((classification, pt.residue_degree));
        }
    }

    // Stratum x2 = 0, x1 = 1: singular points are common roots of the
    // restricted gradient system.
    let mut g: Option<UniPoly<PrimeField>> = None;
    let mut restricted_all = vec![curve.clone()];
    restricted_all.extend(grads.iter().cloned());
    for f in &restricted_all {
        let r = f.partial_evaluate(&[(2, 0u64), (1, 1u64)]);
        if r.is_zero() {
            continue;
        }
        let u = r.to_unipoly(0).expect("univariate");
        g = Some(match g {
            None => u,
            Some(prev) => prev.gcd(&u),
        });
    }
    if let Some(g) = g {
        if !g.is_constant() {
            let fact =
                branchcurve_algebra::factor::factor_univariate(&g, rng).map_err(GeometryError::Algebra)?;
            for (h, _) in fact.factors {
                let ext = ExtensionField::new(fp, h.coeffs.clone()).expect("monic");
                let root = ext.generator();
                // Classify in the chart x1 = 1 with affine coords (x0, x2).
                let aff1 = curve.dehomogenize(1);
                let lifted = aff1.map_domain(ext.clone(), |c| ext.from_base(*c));
                let local = lifted.shift(0, &root).shift(1, &ext.zero());
                let (_, _, classification) = classify_local(&local);
                out.push((classification, ext.degree() as u32));
            }
        }
    }

    // The point [1:0:0].
    if grads.iter().all(|gr| fp.is_zero(&gr.evaluate(&[1, 0, 0])))
        && fp.is_zero(&curve.evaluate(&[1, 0, 0]))
    {
        let aff0 = curve.dehomogenize(0);
        let ext = ExtensionField::new(fp, vec![0, 1]).expect("degree 1");
        let lifted = aff0.map_domain(ext.clone(), |c| ext.from_base(*c));
        let (_, _, classification) = classify_local(&lifted);
        out.push((classification, 1));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use branchcurve_algebra::multipoly::MultiPoly;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fp() -> PrimeField {
        PrimeField::new(1_000_000_007).unwrap()
    }

    fn local_curve(terms: Vec<(Vec<u32>, i64)>) -> TowerPoly {
        let field = ExtensionField::new(fp(), vec![0, 1]).unwrap();
        let converted: Vec<(Vec<u32>, Vec<u64>)> = terms
            .into_iter()
            .map(|(e, c)| (e, field.from_i64(c)))
            .collect();
        MultiPoly::from_terms(field, 2, converted)
    }

    #[test]
    fn classify_node_cusp_tacnode() {
        // y^2 - x^2 - x^3: node.
        let node = local_curve(vec![(vec![0, 2], 1), (vec![2, 0], -1), (vec![3, 0], -1)]);
        assert_eq!(classify_local(&node).2, Classification::Node);
        // y^2 - x^3: cusp.
        let cusp = local_curve(vec![(vec![0, 2], 1), (vec![3, 0], -1)]);
        assert_eq!(classify_local(&cusp).2, Classification::Cusp);
        // y^2 - x^4: tacnode, classified as Other.
        let tac = local_curve(vec![(vec![0, 2], 1), (vec![4, 0], -1)]);
        assert!(matches!(classify_local(&tac).2, Classification::Other(_)));
        // Conjugate tangents (x^2 + y^2 over a field where -1 is a
        // nonsquare would still be a node: distinct roots in the closure).
        let iso = local_curve(vec![(vec![0, 2], 1), (vec![2, 0], 1), (vec![3, 0], 1)]);
        assert_eq!(classify_local(&iso).2, Classification::Node);
    }

    #[test]
    fn smooth_conic_has_empty_census() {
        let f = fp();
        let x = MultiPoly::<PrimeField>::variable(f, 3, 0);
        let y = MultiPoly::variable(f, 3, 1);
        let z = MultiPoly::variable(f, 3, 2);
        let conic = x.mul(&y).add(&z.pow(2));
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let c = census(&conic, &mut rng).unwrap();
        assert_eq!(c.total_points(), 0);
    }

    #[test]
    fn coordinate_triangle_has_three_nodes() {
        let f = fp();
        let x = MultiPoly::<PrimeField>::variable(f, 3, 0);
        let y = MultiPoly::variable(f, 3, 1);
        let z = MultiPoly::variable(f, 3, 2);
        let triangle = x.mul(&y).mul(&z);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let c = census(&triangle, &mut rng).unwrap();
        assert_eq!(c.total_points(), 3);
        assert_eq!(c.node_count, 3);
        assert_eq!(c.cusp_count, 0);
        // Every reported point really is a point of the curve with zero
        // gradient.
        for pt in &c.points {
            let lifted = triangle.map_domain(pt.field.clone(), |v| pt.field.from_base(*v));
            assert!(pt
                .field
                .is_zero(&lifted.evaluate(pt.plane_point.as_slice())));
        }
        // The chart-by-chart route agrees.
        let charts = census_by_charts(&triangle, &mut rng).unwrap();
        assert_eq!(charts.len(), 3);
        assert!(charts.iter().all(|(c, _)| *c == Classification::Node));
    }

    #[test]
    fn cuspidal_cubic_census() {
        // zy^2 = x^3: one cusp at [0:0:1]; also an inflection-free smooth
        // structure elsewhere. Projectively Sing = {[0:0:1]}.
        let f = fp();
        let x = MultiPoly::<PrimeField>::variable(f, 3, 0);
        let y = MultiPoly::variable(f, 3, 1);
        let z = MultiPoly::variable(f, 3, 2);
        let cubic = z.mul(&y.pow(2)).sub(&x.pow(3));
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let c = census(&cubic, &mut rng).unwrap();
        assert_eq!(c.total_points(), 1);
        assert_eq!(c.cusp_count, 1);
    }
}
