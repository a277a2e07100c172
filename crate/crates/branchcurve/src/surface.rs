//! Surfaces in P^3: exact model, classical invariants of smooth surfaces,
//! smoothness screening over a prime field, and seeded projection frames.

use branchcurve_algebra::domain::{FiniteField, PrimeField, Rationals, Ring};
use branchcurve_algebra::linalg::Matrix;
use branchcurve_algebra::multipoly::MultiPoly;
use branchcurve_algebra::{PrimePoly, RationalPoly};
use rand::Rng;

use crate::invariants::InvariantSet;
use crate::variety::{projective_zero_witness, ProjectiveWitness};
use crate::GeometryError;

/// A surface in P^3 given by one exact homogeneous equation, together with
/// the numeric invariants of its smooth model.
#[derive(Clone, Debug)]
pub struct SurfaceModel {
    pub f: RationalPoly,
    pub d: u32,
    /// The input claims a smooth surface (no double curve declared).
    pub smooth_claimed: bool,
    /// Degree of the double curve (0 when smooth is claimed).
    pub deg_gamma: i64,
    pub invariants: InvariantSet,
}

/// User-supplied invariant overrides for surfaces with a double curve.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UserInvariants {
    pub g: Option<i64>,
    pub ksq: Option<i64>,
    pub chi: Option<i64>,
    pub deg_gamma: Option<i64>,
}

impl UserInvariants {
    pub fn is_empty(&self) -> bool {
        *self == UserInvariants::default()
    }
}

/// Classical invariants of a smooth surface of degree d in P^3:
/// `g = (d-1)(d-2)/2`, `K^2 = d(d-4)^2`, `chi = 1 + (d-1)(d-2)(d-3)/6`.
pub fn smooth_invariants(d: i64) -> (i64, i64, i64) {
    assert!(d >= 1);
    let g = (d - 1) * (d - 2) / 2;
    let ksq = d * (d - 4) * (d - 4);
    let chi = 1 + (d - 1) * (d - 2) * (d - 3) / 6;
    (g, ksq, chi)
}

/// Sectional genus of a surface with a double curve of degree `deg_gamma`:
/// a general plane section is a degree-d curve with `deg_gamma` nodes.
pub fn sectional_genus_with_double_curve(d: i64, deg_gamma: i64) -> Result<i64, GeometryError> {
    let smooth = (d - 1) * (d - 2) / 2;
    if smooth < deg_gamma {
        return Err(GeometryError::NegativeGenus);
    }
    Ok(smooth - deg_gamma)
}

impl SurfaceModel {
    pub fn new(f: RationalPoly, user: UserInvariants) -> Result<Self, GeometryError> {
        if f.is_zero() {
            return Err(GeometryError::Input("zero surface equation".into()));
        }
        assert_eq!(f.nvars, 4, "surface equations live in 4 variables");
        let Some(d) = f.homogeneous_degree() else {
            return Err(GeometryError::NonHomogeneousInput);
        };
        if d < 2 {
            return Err(GeometryError::Input(format!(
                "surface degree must be at least 2, got {d}"
            )));
        }
        let smooth_claimed = user.is_empty();
        let deg_gamma = user.deg_gamma.unwrap_or(0);
        let (g_smooth, ksq_smooth, chi_smooth) = smooth_invariants(d as i64);
        let g = match (user.g, user.deg_gamma) {
            (Some(g), _) => {
                if let Some(dg) = user.deg_gamma {
                    let derived = sectional_genus_with_double_curve(d as i64, dg)?;
                    if derived != g {
                        return Err(GeometryError::InconsistentInvariants(format!(
                            "declared g={g} but deg_gamma={dg} gives g={derived}"
                        )));
                    }
                }
                g
            }
            (None, Some(dg)) => sectional_genus_with_double_curve(d as i64, dg)?,
            (None, None) => g_smooth,
        };
        if g < 0 {
            return Err(GeometryError::NegativeGenus);
        }
        let ksq = user.ksq.unwrap_or(ksq_smooth);
        let chi = user.chi.unwrap_or(chi_smooth);
        if !smooth_claimed && (user.ksq.is_none() || user.chi.is_none()) {
            return Err(GeometryError::InconsistentInvariants(
                "surfaces with a double curve need explicit ksq and chi of the smooth model"
                    .into(),
            ));
        }
        Ok(SurfaceModel {
            f,
            d,
            smooth_claimed,
            deg_gamma,
            invariants: InvariantSet::new(d as i64, g, ksq, chi),
        })
    }

    /// Reduce the surface equation modulo p; the degree must survive.
    pub fn reduce_mod(&self, fp: PrimeField) -> Result<PrimePoly, GeometryError> {
        let mut terms = Vec::with_capacity(self.f.terms().len());
        for (mono, coef) in self.f.terms() {
            let c = fp
                .reduce_rational(coef)
                .map_err(|_| GeometryError::BadPrime(fp.modulus()))?;
            terms.push((mono.0.clone(), c));
        }
        let reduced = MultiPoly::from_terms(fp, 4, terms);
        if reduced.homogeneous_degree() != Some(self.d) {
            return Err(GeometryError::BadPrime(fp.modulus()));
        }
        Ok(reduced)
    }
}

/// Outcome of the finite-field smoothness screen.
#[derive(Clone, Debug)]
pub enum SmoothnessVerdict {
    /// The gradient system has no projective zero mod p: consistent with a
    /// smooth surface.
    SmoothConsistent,
    /// A singular point mod p, with exact coordinates.
    Witness(ProjectiveWitness),
}

impl SmoothnessVerdict {
    pub fn is_smooth_consistent(&self) -> bool {
        matches!(self, SmoothnessVerdict::SmoothConsistent)
    }
}

/// Decide emptiness of `V(f, df/dx0, ..., df/dx3)` over `GF(p)`.
pub fn check_smoothness<R: Rng + ?Sized>(
    f: &PrimePoly,
    rng: &mut R,
) -> SmoothnessVerdict {
    let mut system = vec![f.clone()];
    for i in 0..4 {
        system.push(f.partial_derivative(i));
    }
    match projective_zero_witness(&system, rng) {
        Some(w) => SmoothnessVerdict::Witness(w),
        None => SmoothnessVerdict::SmoothConsistent,
    }
}

/// A projection frame: invertible change of coordinates carrying the
/// projection to the standard one with center [0:0:0:1] and image plane
/// x3 = 0. The center is the image of e3.
#[derive(Clone, Debug)]
pub struct ProjectionFrame {
    pub matrix: Matrix<PrimeField>,
    pub center: [u64; 4],
}

impl ProjectionFrame {
    pub fn from_matrix(f_mod_p: &PrimePoly, matrix: Matrix<PrimeField>) -> Result<Self, GeometryError> {
        let fp = f_mod_p.domain;
        if fp.is_zero(&matrix.det()) {
            return Err(GeometryError::Algebra(
                branchcurve_algebra::AlgebraError::SingularMatrix,
            ));
        }
        let center = [
            *matrix.at(0, 3),
            *matrix.at(1, 3),
            *matrix.at(2, 3),
            *matrix.at(3, 3),
        ];
        if fp.is_zero(&f_mod_p.evaluate(&center)) {
            return Err(GeometryError::CenterOnSurface);
        }
        Ok(ProjectionFrame { matrix, center })
    }

    pub fn identity(f_mod_p: &PrimePoly) -> Result<Self, GeometryError> {
        Self::from_matrix(f_mod_p, Matrix::identity(f_mod_p.domain, 4))
    }
}

/// Seeded random frame whose center avoids the surface.
pub fn random_frame<R: Rng + ?Sized>(
    f_mod_p: &PrimePoly,
    rng: &mut R,
) -> Result<ProjectionFrame, GeometryError> {
    let fp = f_mod_p.domain;
    for _ in 0..64 {
        let data: Vec<u64> = (0..16).map(|_| fp.sample(rng)).collect();
        let m = Matrix::new(fp, 4, 4, data);
        if fp.is_zero(&m.det()) {
            continue;
        }
        match ProjectionFrame::from_matrix(f_mod_p, m) {
            Ok(frame) => return Ok(frame),
            Err(GeometryError::CenterOnSurface) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(GeometryError::RetryBudgetExhausted(
        "no invertible frame with center off the surface".into(),
    ))
}

/// Fermat surface of degree d: sum of d-th powers.
pub fn fermat_surface(d: u32) -> RationalPoly {
    let mut acc = MultiPoly::zero(Rationals, 4);
    for i in 0..4 {
        acc = acc.add(&MultiPoly::variable(Rationals, 4, i).pow(d));
    }
    acc
}
