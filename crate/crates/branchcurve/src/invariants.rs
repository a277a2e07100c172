//! Closed-form numerology for branch curves of generic plane projections:
//! branch degree, cusp and node counts, the ramification-curve genus, and
//! the dimension bounds for embedded surfaces.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::GeometryError;

/// Numeric invariants of an embedded surface. `d` is the degree, `g` the
/// sectional (geometric) genus, `ksq` the canonical self-intersection and
/// `chi` the holomorphic Euler characteristic of the smooth model; `r` is
/// the ambient dimension and `h`, `h_s` optional cohomological corrections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSet {
    pub d: i64,
    pub g: i64,
    pub ksq: i64,
    pub chi: i64,
    pub r: Option<i64>,
    pub h: Option<i64>,
    pub h_s: Option<i64>,
}

impl InvariantSet {
    pub fn new(d: i64, g: i64, ksq: i64, chi: i64) -> Self {
        InvariantSet {
            d,
            g,
            ksq,
            chi,
            r: None,
            h: None,
            h_s: None,
        }
    }
}

/// Expected counts for the branch curve of a generic projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub deg_b: i64,
    pub kappa: i64,
    pub pa_r: i64,
    pub nodes: i64,
}

/// deg B = 2(d + g - 1).
pub fn branch_degree(inv: &InvariantSet) -> i64 {
    2 * (inv.d + inv.g - 1)
}

/// Number of cusps: 3(d + K^2 - 4 chi + 6(g-1)).
pub fn cusp_count(inv: &InvariantSet) -> i64 {
    3 * (inv.d + inv.ksq - 4 * inv.chi + 6 * (inv.g - 1))
}

/// Arithmetic genus of the ramification curve: 9(g-1) + K^2 + 1.
pub fn ram_genus(inv: &InvariantSet) -> i64 {
    9 * (inv.g - 1) + inv.ksq + 1
}

/// Node count from the genus bookkeeping of the (birational) image:
/// (degB-1)(degB-2)/2 - pa(R) - kappa.
pub fn node_count(inv: &InvariantSet) -> Result<i64, GeometryError> {
    let deg_b = branch_degree(inv);
    let nodes = (deg_b - 1) * (deg_b - 2) / 2 - ram_genus(inv) - cusp_count(inv);
    if nodes < 0 {
        return Err(GeometryError::InconsistentInvariants(format!(
            "negative node count {nodes} for d={}, g={}, K^2={}, chi={}",
            inv.d, inv.g, inv.ksq, inv.chi
        )));
    }
    Ok(nodes)
}

pub fn count_report(inv: &InvariantSet) -> Result<CountReport, GeometryError> {
    Ok(CountReport {
        deg_b: branch_degree(inv),
        kappa: cusp_count(inv),
        pa_r: ram_genus(inv),
        nodes: node_count(inv)?,
    })
}

/// Upper bound for h^0 of the normal bundle:
/// (r-2)(r+1) + 3d - 3(g-1) - 2 K^2 + 12 chi + h.
/// The bound is an equality when the hyperplane speciality vanishes; the
/// returned flag reports that eligibility (known only when `h_s` is given).
pub fn hilbert_bound(inv: &InvariantSet) -> Result<(i64, bool), GeometryError> {
    let r = inv
        .r
        .ok_or_else(|| GeometryError::InconsistentInvariants("missing ambient r".into()))?;
    if r < 3 {
        return Err(GeometryError::InconsistentInvariants(format!(
            "ambient dimension r={r} < 3"
        )));
    }
    let h = inv.h.unwrap_or(0);
    let value =
        (r - 2) * (r + 1) + 3 * inv.d - 3 * (inv.g - 1) - 2 * inv.ksq + 12 * inv.chi + h;
    let eligible = inv.h_s == Some(0);
    Ok((value, eligible))
}

/// Nonspeciality criterion: d - K^2 - 4(g-1) + 4 chi > 0 (strict).
pub fn nonspeciality(inv: &InvariantSet) -> bool {
    inv.d - inv.ksq - 4 * (inv.g - 1) + 4 * inv.chi > 0
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Clifford-type bound for the speciality correction:
/// (3/2)(K^2 - d) + 6(g - 1 - chi) + 1/2, exact rational.
pub fn clifford_h_bound(inv: &InvariantSet) -> BigRational {
    rat(3 * (inv.ksq - inv.d), 2) + rat(6 * (inv.g - 1 - inv.chi), 1) + rat(1, 2)
}

/// Bound in the special regime:
/// (r^2 - r - 1) + (3d - K^2 - 1)/2 + 3(g-1) + 6 chi, exact rational.
pub fn special_h0_bound(inv: &InvariantSet) -> Result<BigRational, GeometryError> {
    let r = inv
        .r
        .ok_or_else(|| GeometryError::InconsistentInvariants("missing ambient r".into()))?;
    Ok(rat(r * r - r - 1, 1)
        + rat(3 * inv.d - inv.ksq - 1, 2)
        + rat(3 * (inv.g - 1), 1)
        + rat(6 * inv.chi, 1))
}

/// Moduli bounds for canonically embedded surfaces:
/// `(special, nonspecial, castelnuovo)` =
/// (4K^2 + 3chi - 3q + 4, 12chi - 3 pg - 1 - 2K^2, 3 pg - 12 q + 25).
pub fn moduli_bounds_canonical(ksq: i64, chi: i64, q: i64, pg: i64) -> (i64, i64, i64) {
    (
        4 * ksq + 3 * chi - 3 * q + 4,
        12 * chi - 3 * pg - 1 - 2 * ksq,
        3 * pg - 12 * q + 25,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn smooth(d: i64, g: i64, ksq: i64, chi: i64) -> InvariantSet {
        InvariantSet::new(d, g, ksq, chi)
    }

    #[test]
    fn branch_degrees() {
        assert_eq!(branch_degree(&smooth(2, 0, 8, 1)), 2);
        assert_eq!(branch_degree(&smooth(3, 1, 3, 1)), 6);
        assert_eq!(branch_degree(&smooth(5, 6, 5, 5)), 20);
    }

    #[test]
    fn cusp_counts() {
        assert_eq!(cusp_count(&smooth(3, 1, 3, 1)), 6);
        assert_eq!(cusp_count(&smooth(4, 3, 0, 2)), 24);
        assert_eq!(cusp_count(&smooth(2, 0, 8, 1)), 0);
        assert_eq!(cusp_count(&smooth(5, 6, 5, 5)), 60);
    }

    #[test]
    fn ramification_genus() {
        assert_eq!(ram_genus(&smooth(3, 1, 3, 1)), 4);
        assert_eq!(ram_genus(&smooth(4, 3, 0, 2)), 19);
        assert_eq!(ram_genus(&smooth(2, 0, 8, 1)), 0);
    }

    #[test]
    fn node_counts() {
        // cubic: 10 - 4 - 6 = 0; quartic: 55 - 19 - 24 = 12;
        // quintic: 171 - 51 - 60 = 60.
        assert_eq!(node_count(&smooth(3, 1, 3, 1)).unwrap(), 0);
        assert_eq!(node_count(&smooth(4, 3, 0, 2)).unwrap(), 12);
        assert_eq!(node_count(&smooth(5, 6, 5, 5)).unwrap(), 60);
        // Infeasible bookkeeping must error rather than go negative.
        assert!(node_count(&smooth(3, 1, 100, 1)).is_err());
    }

    #[test]
    fn hilbert_bound_veronese_is_27() {
        // Veronese surface in P^5: the bound must equal the orbit dimension
        // dim PGL(6) - dim PGL(3) = 35 - 8 = 27 and be equality-eligible.
        let mut inv = smooth(4, 0, 9, 1);
        inv.r = Some(5);
        inv.h = Some(0);
        inv.h_s = Some(0);
        let (value, eligible) = hilbert_bound(&inv).unwrap();
        assert_eq!(value, 35 - 8);
        assert!(eligible);
        // Linearity in h.
        inv.h = Some(1);
        assert_eq!(hilbert_bound(&inv).unwrap().0, 28);
    }

    #[test]
    fn hilbert_bound_quadric() {
        let mut inv = smooth(2, 0, 8, 1);
        inv.r = Some(3);
        inv.h = Some(0);
        let (value, _) = hilbert_bound(&inv).unwrap();
        assert_eq!(value, 4 + 6 + 3 - 16 + 12);
        assert_eq!(value, 9);
    }

    #[test]
    fn nonspeciality_cases() {
        assert!(nonspeciality(&smooth(4, 0, 9, 1))); // 3 > 0
        assert!(!nonspeciality(&smooth(1, 0, 9, 1))); // boundary 0 is special
        assert!(nonspeciality(&smooth(2, 0, 8, 1))); // 2 > 0
    }

    #[test]
    fn clifford_bounds() {
        // d = K^2 and g - 1 = chi collapse to 1/2.
        assert_eq!(clifford_h_bound(&smooth(7, 3, 7, 2)), rat(1, 2));
        // cubic data: -11/2.
        assert_eq!(clifford_h_bound(&smooth(3, 1, 3, 1)), rat(-11, 2));
        // (d=4, K^2=8, g=3, chi=1): 6 + 6 + 1/2.
        assert_eq!(clifford_h_bound(&smooth(4, 3, 8, 1)), rat(25, 2));
    }

    #[test]
    fn special_regime_bound() {
        let mut inv = smooth(1, 1, 0, 0);
        inv.r = Some(3);
        assert_eq!(special_h0_bound(&inv).unwrap(), rat(6, 1));
        let mut v = smooth(4, 0, 9, 1);
        v.r = Some(5);
        assert_eq!(special_h0_bound(&v).unwrap(), rat(23, 1));
        //

        // Increasing r by one adds 2r to the r^2 - r - 1 part.
        let mut v2 = v.clone();
        v2.r = Some(6);
        assert_eq!(
            special_h0_bound(&v2).unwrap() - special_h0_bound(&v).unwrap(),
            rat(10, 1)
        );
    }

    #[test]
    fn moduli_bounds() {
        assert_eq!(moduli_bounds_canonical(9, 3, 0, 0).0, 49);
        assert_eq!(moduli_bounds_canonical(9, 3, 0, 2).1, 11);
        assert_eq!(moduli_bounds_canonical(0, 0, 0, 3).2, 34);
    }
}
