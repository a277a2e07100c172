//! Branch curve of the projection from a frame's center: moved equation,
//! discriminant, reduced branch extraction, ramification smoothness, and
//! line intersection profiles.

use branchcurve_algebra::domain::{ExtensionField, Field, FiniteField, PrimeField, Ring};
use branchcurve_algebra::factor::factor_univariate;
use branchcurve_algebra::linalg::Matrix;
use branchcurve_algebra::resultant::resultant;
use branchcurve_algebra::unipoly::UniPoly;
use branchcurve_algebra::resultant::{discriminant, gcd_multivariate, squarefree_part};
use branchcurve_algebra::PrimePoly;
use rand::Rng;

use crate::surface::{ProjectionFrame, SurfaceModel};
use crate::variety::{projective_zero_witness, ProjectiveWitness};
use crate::GeometryError;

/// The projection data for one frame: the surface equation in normalized
/// coordinates (center [0:0:0:1], image plane x3 = 0, monic in x3), the raw
/// discriminant, and the extracted reduced branch curve.
#[derive(Clone, Debug)]
pub struct BranchComputation {
    pub frame: ProjectionFrame,
    /// Surface equation after the frame substitution, monic in x3.
    pub f_moved: PrimePoly,
    /// Raw x3-discriminant, a form of degree d(d-1) in (x0, x1, x2).
    pub disc: PrimePoly,
    /// The doubled image of the double curve, when the surface declares one.
    pub gamma_image: Option<PrimePoly>,
    /// Reduced branch curve, lex-normalized (3 variables).
    pub branch: PrimePoly,
    pub branch_reduced: bool,
    pub deg_branch: u32,
}

/// Trivial content with respect to `var` for a bivariate polynomial in
/// variables (0, 1): no factor free of `var`.
fn bivariate_content_trivial(aff: &PrimePoly, var: usize) -> bool {
    let other = 1 - var;
    let mut g: Option<UniPoly<PrimeField>> = None;
    for c in aff.coeffs_wrt(var) {
        if c.is_zero() {
            continue;
        }
        let u = c.to_unipoly(other).expect("bivariate");
        g = Some(match g {
            None => u,
            Some(prev) => prev.gcd(&u),
        });
        if g.as_ref().map(|g| g.is_constant()).unwrap_or(false) {
            return true;
        }
    }
    g.map(|g| g.is_constant()).unwrap_or(false)
}

/// Certified squarefreeness of a nonzero form in 3 variables over a large
/// prime field. A generic coordinate change makes the affine chart faithful
/// and every factor dependent on both affine variables (certified via
/// trivial contents); then squarefreeness is equivalent to a nonvanishing
/// resultant with the derivative, computed by fast interpolation.
fn form_is_squarefree<R: Rng + ?Sized>(
    form: &PrimePoly,
    rng: &mut R,
) -> Result<bool, GeometryError> {
    let fp = form.domain;
    for attempt in 0..12 {
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
        let sheared = form.linear_substitute(&m).expect("invertible");
        if fp.is_zero(&sheared.evaluate(&[0, 0, 1])) {
            continue;
        }
        let aff = sheared.dehomogenize(2);
        if aff.degree_in(0) == 0 || aff.degree_in(1) == 0 {
            continue;
        }
        if !bivariate_content_trivial(&aff, 0) || !bivariate_content_trivial(&aff, 1) {
            // A factor free of one variable: inconclusive under this shear.
            continue;
        }
        let dx = aff.partial_derivative(0);
        let r = resultant(&aff, &dx, 0).map_err(GeometryError::Algebra)?;
        return Ok(!r.is_zero());
    }
    Err(GeometryError::RetryBudgetExhausted(
        "no shear certified the squarefreeness test".into(),
    ))
}

/// Compute the branch curve of the projection given by `frame`.
pub fn branch_curve<R: Rng + ?Sized>(
    surface: &SurfaceModel,
    f_mod_p: &PrimePoly,
    frame: &ProjectionFrame,
    rng: &mut R,
) -> Result<BranchComputation, GeometryError> {
    let fp = f_mod_p.domain;
    let moved = f_mod_p
        .linear_substitute(&frame.matrix)
        .map_err(GeometryError::Algebra)?;
    // Leading x3-coefficient equals f(center); normalize to monic.
    let lead = moved.coeff_of(&[0, 0, 0, surface.d]);
    if fp.is_zero(&lead) {
        return Err(GeometryError::CenterOnSurface);
    }
    let f_moved = moved.scale(&fp.inv(&lead).expect("nonzero"));
    let disc4 = discriminant(&f_moved, 3).map_err(GeometryError::Algebra)?;
    if disc4.is_zero() {
        return Err(GeometryError::NonReducedBranch(
            "discriminant vanishes identically".into(),
        ));
    }
    let disc = disc4.drop_var(3);
    let d = surface.d as i64;
    debug_assert_eq!(disc.homogeneous_degree(), Some((d * (d - 1)) as u32));

    let disc_normalized = disc.normalize_lex();
    if surface.deg_gamma == 0 {
        if !form_is_squarefree(&disc, rng)? {
            return Err(GeometryError::NonReducedBranch(
                "discriminant of a declared-smooth surface is not squarefree".into(),
            ));
        }
        let deg_branch = disc.total_degree().unwrap_or(0);
        return Ok(BranchComputation {
            frame: frame.clone(),
            f_moved,
            disc: disc_normalized.clone(),
            gamma_image: None,
            branch: disc_normalized,
            branch_reduced: true,
            deg_branch,
        });
    }
    let sf = squarefree_part(&disc);
    // Declared double curve: the discriminant is B times the square of the
    // image of the double curve. Remove the multiple part.
    let extra = disc_normalized
        .exact_div(&sf)
        .expect("squarefree part divides");
    let branch = sf
        .exact_div(&gcd_multivariate(&sf, &extra))
        .expect("gcd divides")
        .normalize_lex();
    let gamma_image = disc_normalized
        .exact_div(&branch)
        .expect("branch divides disc");
    let deg_branch = branch.total_degree().unwrap_or(0);
    let gamma_deg_doubled = (d * (d - 1)) as u32 - deg_branch;
    if gamma_deg_doubled != 2 * surface.deg_gamma as u32 {
        return Err(GeometryError::NonReducedBranch(format!(
            "residual discriminant degree {} does not match twice the declared \
             double-curve degree {}",
            gamma_deg_doubled, surface.deg_gamma
        )));
    }
    Ok(BranchComputation {
        frame: frame.clone(),
        f_moved,
        disc: disc_normalized,
        gamma_image: Some(gamma_image),
        branch,
        branch_reduced: true,
        deg_branch,
    })
}

/// Scheme-smoothness screen for the ramification curve
/// `V(f_moved, df_moved/dx3)`: searches for points where the Jacobian of
/// the pair drops rank.
pub fn ramification_smooth_check<R: Rng + ?Sized>(
    f_moved: &PrimePoly,
    rng: &mut R,
) -> Option<ProjectiveWitness> {
    let g = f_moved.partial_derivative(3);
    let grads_f: Vec<PrimePoly> = (0..4).map(|i| f_moved.partial_derivative(i)).collect();
    let grads_g: Vec<PrimePoly> = (0..4).map(|i| g.partial_derivative(i)).collect();
    let mut system = vec![f_moved.clone(), g];
    for i in 0..4 {
        for j in i + 1..4 {
            let minor = grads_f[i]
                .mul(&grads_g[j])
                .sub(&grads_f[j].mul(&grads_g[i]));
            system.push(minor);
        }
    }
    projective_zero_witness(&system, rng)
}

/// Intersection profile of the line through the center and a plane point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineProfile {
    /// One entry per Galois orbit of intersection points:
    /// `(multiplicity n_i, orbit size)`.
    pub orbits: Vec<(u32, u32)>,
    /// Branching weight: sum of (n_i - 1) over geometric points.
    pub branching_weight: u32,
    /// Asymptotic weight: sum of max(n_i - 2, 0).
    pub asymptotic_weight: u32,
}

impl LineProfile {
    /// The multiset n_1 >= n_2 >= ... expanded over geometric points.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (n, size) in &self.orbits {
            for _ in 0..*size {
                out.push(*n);
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

/// Restrict the monic moved surface equation to the line joining the
/// center [0:0:0:1] with the plane point `y`, and factor it. Works over any
/// extension of the base prime field (the equation is lifted).
pub fn line_profile<R: Rng + ?Sized>(
    f_moved: &PrimePoly,
    field: &ExtensionField,
    y: &[Vec<u64>; 3],
    rng: &mut R,
) -> Result<LineProfile, GeometryError> {
    let lifted = f_moved.map_domain(field.clone(), |c| field.from_base(*c));
    let restricted = lifted
        .partial_evaluate(&[(0, y[0].clone()), (1, y[1].clone()), (2, y[2].clone())])
        .to_unipoly(3)
        .expect("only x3 left");
    if restricted.is_zero() {
        return Err(GeometryError::LineInSurface);
    }
    let d: u32 = f_moved.degree_in(3);
    assert_eq!(
        restricted.deg() as u32,
        d,
        "restriction of a monic equation keeps full degree"
    );
    let fact = factor_univariate(&restricted, rng).map_err(GeometryError::Algebra)?;
    let mut orbits: Vec<(u32, u32)> = fact
        .factors
        .iter()
        .map(|(g, m)| (*m, g.deg() as u32))
        .collect();
    orbits.sort_unstable_by(|a, b| b.cmp(a));
    let total: u32 = orbits.iter().map(|(n, s)| n * s).sum();
    assert_eq!(total, d, "profile must sum to the surface degree");
    let branching_weight = orbits.iter().map(|(n, s)| (n - 1) * s).sum();
    let asymptotic_weight = orbits.iter().map(|(n, s)| n.saturating_sub(2) * s).sum();
    Ok(LineProfile {
        orbits,
        branching_weight,
        asymptotic_weight,
    })
}

/// Profile at a prime-field point given with integer coordinates.
pub fn line_profile_rational<R: Rng + ?Sized>(
    f_moved: &PrimePoly,
    y: [u64; 3],
    rng: &mut R,
) -> Result<LineProfile, GeometryError> {
    let fp = f_moved.domain;
    let field = ExtensionField::new(fp, vec![0, 1]).expect("degree-1 modulus");
    let coords = [
        field.from_base(y[0]),
        field.from_base(y[1]),
        field.from_base(y[2]),
    ];
    line_profile(f_moved, &field, &coords, rng)
}
