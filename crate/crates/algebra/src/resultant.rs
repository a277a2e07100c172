//! Resultants, discriminants, multivariate gcd, squarefree parts.
//!
//! Two routes to the resultant are kept deliberately:
//! - interpolation: specialize all but the main variable at enough points,
//!   run the sign-exact Euclidean scalar resultant, interpolate back
//!   (finite fields with enough elements; this is the fast production path);
//! - `resultant_sylvester`: fraction-free Bareiss elimination on the
//!   Sylvester matrix over any exact domain (reference path, also the
//!   fallback for small fields and the rationals).
//! The two are cross-checked against each other in the property suites.

use crate::domain::{Field, FiniteField, Ring};
use crate::multipoly::MultiPoly;
use crate::unipoly::UniPoly;
use crate::AlgebraError;

/// A polynomial viewed as univariate in `main_var` with polynomial
/// coefficients (same ambient variable count, `main_var` absent).
#[derive(Clone, Debug)]
pub struct UnivariateView<F: Ring> {
    pub main_var: usize,
    /// Entry `i` is the coefficient of `main_var^i`.
    pub coeffs: Vec<MultiPoly<F>>,
}

impl<F: Field> UnivariateView<F> {
    pub fn new(p: &MultiPoly<F>, main_var: usize) -> Self {
        UnivariateView {
            main_var,
            coeffs: p.coeffs_wrt(main_var),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> &MultiPoly<F> {
        self.coeffs.last().expect("nonempty view")
    }

    pub fn reassemble(&self, domain: F, nvars: usize) -> MultiPoly<F> {
        MultiPoly::assemble_wrt(domain, nvars, self.main_var, &self.coeffs)
    }
}

/// Sign-exact resultant of dense univariates over a field, by the Euclidean
/// remainder recursion.
pub fn resultant_unipoly<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>) -> F::Elem {
    let d = a.domain.clone();
    if a.is_zero() || b.is_zero() {
        return d.zero();
    }
    let m = a.deg();
    let n = b.deg();
    if n == 0 {
        return d.pow(&b.lead(), m as u64);
    }
    if m == 0 {
        return d.pow(&a.lead(), n as u64);
    }
    if m < n {
        let r = resultant_unipoly(b, a);
        return if (m * n) % 2 == 1 { d.neg(&r) } else { r };
    }
    let r = a.rem(b);
    if r.is_zero() {
        return d.zero();
    }
    let rd = r.deg();
    // res(A,B) = (-1)^(mn) lc(B)^(m - deg R) res(B, R).
    let mut acc = d.mul(&d.pow(&b.lead(), (m - rd) as u64), &resultant_unipoly(b, &r));
    if (m * n) % 2 == 1 {
        acc = d.neg(&acc);
    }
    acc
}

/// Fraction-free (Bareiss) determinant of a square matrix of polynomials.
fn bareiss_det<F: Field>(mut m: Vec<Vec<MultiPoly<F>>>) -> MultiPoly<F> {
    let n = m.len();
    let domain = m[0][0].domain.clone();
    let nvars = m[0][0].nvars;
    if n == 0 {
        return MultiPoly::one(domain, nvars);
    }
    let mut sign_neg = false;
    let mut prev = MultiPoly::one(domain.clone(), nvars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|i| !m[*i][k].is_zero()) else {
                return MultiPoly::zero(domain, nvars);
            };
            m.swap(k, swap);
            sign_neg = !sign_neg;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t1 = m[i][j].mul(&m[k][k]);
                let t2 = m[i][k].mul(&m[k][j]);
                let num = t1.sub(&t2);
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = MultiPoly::zero(domain.clone(), nvars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_neg {
        det.neg()
    } else {
        det
    }
}

/// Resultant with respect to `var` via the Sylvester determinant
/// (fraction-free). Works over any exact field; reference path.
pub fn resultant_sylvester<F: Field>(
    p: &MultiPoly<F>,
    q: &MultiPoly<F>,
    var: usize,
) -> Result<MultiPoly<F>, AlgebraError> {
    p.check_compatible(q)?;
    if p.is_zero() || q.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    let domain = p.domain.clone();
    let nvars = p.nvars;
    let pv = UnivariateView::new(p, var);
    let qv = UnivariateView::new(q, var);
    let m = pv.degree();
    let n = qv.degree();
    if m == 0 {
        return Ok(p.pow(n as u32));
    }
    if n == 0 {
        return Ok(q.pow(m as u32));
    }
    let zero = MultiPoly::zero(domain.clone(), nvars);
    let size = m + n;
    let mut mat = vec![vec![zero; size]; size];
    for row in 0..n {
        for (i, c) in pv.coeffs.iter().enumerate() {
            mat[row][row + m - i] = c.clone();
        }
    }
    for row in 0..m {
        for (i, c) in qv.coeffs.iter().enumerate() {
            mat[n + row][row + n - i] = c.clone();
        }
    }
    Ok(bareiss_det(mat))
}

/// Newton interpolation with polynomial values and scalar nodes.
fn interpolate_poly_values<F: Field>(
    domain: &F,
    nvars: usize,
    var: usize,
    points: &[(F::Elem, MultiPoly<F>)],
) -> MultiPoly<F> {
    let n = points.len();
    let mut dd: Vec<MultiPoly<F>> = points.iter().map(|(_, v)| v.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = dd[i].sub(&dd[i - 1]);
            let den = domain.sub(&points[i].0, &points[i - level].0);
            let den_inv = domain.inv(&den).expect("distinct nodes");
            dd[i] = num.scale(&den_inv);
        }
    }
    // Horner expansion of the Newton form.
    let mut acc = MultiPoly::zero(domain.clone(), nvars);
    for i in (0..n).rev() {
        let lin = MultiPoly::variable(domain.clone(), nvars, var).sub(&MultiPoly::constant(
            domain.clone(),
            nvars,
            points[i].0.clone(),
        ));
        acc = acc.mul(&lin).add(&dd[i]);
    }
    acc
}

fn active_vars<F: Field>(p: &MultiPoly<F>, q: &MultiPoly<F>, skip: usize) -> Vec<usize> {
    (0..p.nvars)
        .filter(|v| *v != skip && (p.degree_in(*v) > 0 || q.degree_in(*v) > 0))
        .collect()
}

/// Resultant with respect to `var` over a finite field: interpolation in the
/// remaining variables with the Sylvester path as a small-field fallback.
pub fn resultant<F: FiniteField>(
    p: &MultiPoly<F>,
    q: &MultiPoly<F>,
    var: usize,
) -> Result<MultiPoly<F>, AlgebraError> {
    p.check_compatible(q)?;
    if p.is_zero() || q.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    let domain = p.domain.clone();
    let nvars = p.nvars;
    let m = p.degree_in(var) as usize;
    let n = q.degree_in(var) as usize;
    if m == 0 {
        return Ok(p.pow(n as u32));
    }
    if n == 0 {
        return Ok(q.pow(m as u32));
    }
    let others = active_vars(p, q, var);
    if others.is_empty() {
        let a = p.to_unipoly(var).expect("univariate");
        let b = q.to_unipoly(var).expect("univariate");
        let r = resultant_unipoly(&a, &b);
        return Ok(MultiPoly::constant(domain, nvars, r));
    }
    // Eliminate the last auxiliary variable by interpolation.
    let v = *others.last().unwrap();
    let lcp = p.coeffs_wrt(var).pop().unwrap();
    let lcq = q.coeffs_wrt(var).pop().unwrap();
    let bound = n * p.degree_in(v) as usize + m * q.degree_in(v) as usize;
    let skip_budget = (lcp.degree_in(v) + lcq.degree_in(v)) as usize;
    let needed = bound + 1;
    let enough = match u64::try_from(needed + skip_budget) {
        Ok(k) => domain.order() > k.into(),
        Err(_) => false,
    };
    if !enough {
        return resultant_sylvester(p, q, var);
    }
    let mut samples: Vec<(F::Elem, MultiPoly<F>)> = Vec::with_capacity(needed);
    let mut idx = 0u64;
    while samples.len() < needed {
        let c = domain.element_at(idx);
        idx += 1;
        let assignment = [(v, c.clone())];
        if lcp.partial_evaluate(&assignment).is_zero()
            || lcq.partial_evaluate(&assignment).is_zero()
        {
            continue;
        }
        let ps = p.partial_evaluate(&assignment);
        let qs = q.partial_evaluate(&assignment);
        let r = resultant(&ps, &qs, var)?;
        samples.push((c, r));
    }
    Ok(interpolate_poly_values(&domain, nvars, v, &samples))
}

/// Discriminant with respect to `var` with the classical sign:
/// `disc = (-1)^(n(n-1)/2) res(p, dp/dvar) / lc(p)`.
pub fn discriminant<F: FiniteField>(
    p: &MultiPoly<F>,
    var: usize,
) -> Result<MultiPoly<F>, AlgebraError> {
    let n = p.degree_in(var) as usize;
    if n < 2 {
        return Err(AlgebraError::ZeroInput);
    }
    let lc = p.coeffs_wrt(var).pop().unwrap();
    if lc.is_zero() {
        return Err(AlgebraError::ZeroLeadingCoefficient);
    }
    let dp = p.partial_derivative(var);
    let res = resultant(p, &dp, var)?;
    let quot = res.exact_div(&lc).expect("lc divides res(p, p')");
    Ok(if (n * (n - 1) / 2) % 2 == 1 {
        quot.neg()
    } else {
        quot
    })
}

/// Sylvester-path discriminant for any exact field (reference/cross-check).
pub fn discriminant_sylvester<F: Field>(
    p: &MultiPoly<F>,
    var: usize,
) -> Result<MultiPoly<F>, AlgebraError> {
    let n = p.degree_in(var) as usize;
    if n < 2 {
        return Err(AlgebraError::ZeroInput);
    }
    let lc = p.coeffs_wrt(var).pop().unwrap();
    if lc.is_zero() {
        return Err(AlgebraError::ZeroLeadingCoefficient);
    }
    let dp = p.partial_derivative(var);
    let res = resultant_sylvester(p, &dp, var)?;
    let quot = res.exact_div(&lc).expect("lc divides res(p, p')");
    Ok(if (n * (n - 1) / 2) % 2 == 1 {
        quot.neg()
    } else {
        quot
    })
}

// ---------------------------------------------------------------------------
// Multivariate gcd (primitive PRS) and squarefree parts
// ---------------------------------------------------------------------------

/// Pseudo-remainder of `a` by `b` with respect to `var`:
/// `lc(b)^(da-db+1) a = q b + r`.
fn pseudo_rem<F: Field>(a: &MultiPoly<F>, b: &MultiPoly<F>, var: usize) -> MultiPoly<F> {
    let domain = a.domain.clone();
    let nvars = a.nvars;
    let db = b.degree_in(var) as usize;
    let bv = b.coeffs_wrt(var);
    let lcb = bv.last().unwrap().clone();
    let mut r = a.clone();
    let mut steps = a.degree_in(var) as i64 - db as i64 + 1;
    while !r.is_zero() && r.degree_in(var) as usize >= db {
        let rv = r.coeffs_wrt(var);
        let dr = rv.len() - 1;
        let lcr = rv.last().unwrap().clone();
        // r <- lc(b) * r - lc(r) * var^(dr-db) * b
        let mut shift_exp = vec![0u32; nvars];
        shift_exp[var] = (dr - db) as u32;
        let shift = MultiPoly::monomial(domain.clone(), nvars, shift_exp, domain.one());
        r = r.mul(&lcb).sub(&b.mul(&lcr).mul(&shift));
        steps -= 1;
    }
    // Pad remaining multiplications so the exponent is exactly da-db+1.
    while steps > 0 {
        r = r.mul(&lcb);
        steps -= 1;
    }
    r
}

/// Content of `p` with respect to `var`: gcd of its coefficients.
fn content_wrt<F: Field>(p: &MultiPoly<F>, var: usize) -> MultiPoly<F> {
    let mut acc = MultiPoly::zero(p.domain.clone(), p.nvars);
    for c in p.coeffs_wrt(var) {
        if c.is_zero() {
            continue;
        }
        acc = gcd_multivariate(&acc, &c);
        if acc.is_constant() {
            break;
        }
    }
    acc
}

/// Monic-normalized multivariate gcd via content/primitive-part recursion
/// with a primitive PRS.
pub fn gcd_multivariate<F: Field>(a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
    let domain = a.domain.clone();
    let nvars = a.nvars;
    if a.is_zero() {
        return b.normalize_lex();
    }
    if b.is_zero() {
        return a.normalize_lex();
    }
    let active: Vec<usize> = (0..nvars)
        .filter(|v| a.degree_in(*v) > 0 || b.degree_in(*v) > 0)
        .collect();
    if active.is_empty() {
        return MultiPoly::one(domain, nvars);
    }
    let var = *active.last().unwrap();
    if active.len() == 1 {
        let ua = a.to_unipoly(var).expect("univariate");
        let ub = b.to_unipoly(var).expect("univariate");
        return MultiPoly::from_unipoly(&ua.gcd(&ub), nvars, var);
    }
    if a.degree_in(var) == 0 {
        // gcd(a, b) = gcd(a, content_var(b))
        return gcd_multivariate(a, &content_wrt(b, var));
    }
    if b.degree_in(var) == 0 {
        return gcd_multivariate(&content_wrt(a, var), b);
    }
    let ca = content_wrt(a, var);
    let cb = content_wrt(b, var);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let cg = gcd_multivariate(&ca, &cb);
    let (mut big, mut small) = if pa.degree_in(var) >= pb.degree_in(var) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    let gcd_pp = loop {
        let r = pseudo_rem(&big, &small, var);
        if r.is_zero() {
            let c = content_wrt(&small, var);
            break small.exact_div(&c).expect("content divides");
        }
        if r.degree_in(var) == 0 {
            break MultiPoly::one(domain.clone(), nvars);
        }
        let c = content_wrt(&r, var);
        big = small;
        small = r.exact_div(&c).expect("content divides");
    };
    cg.mul(&gcd_pp).normalize_lex()
}

/// Squarefree part `p / gcd(p, all partial derivatives)`, normalized.
/// Valid in characteristic zero or characteristic larger than the degree.
pub fn squarefree_part<F: Field>(p: &MultiPoly<F>) -> MultiPoly<F> {
    if p.is_zero() || p.is_constant() {
        return p.normalize_lex();
    }
    let mut g = p.clone();
    for v in 0..p.nvars {
        if p.degree_in(v) == 0 {
            continue;
        }
        g = gcd_multivariate(&g, &p.partial_derivative(v));
        if g.is_constant() {
            break;
        }
    }
    p.exact_div(&g).expect("gcd divides").normalize_lex()
}

/// `true` when `p` is squarefree (characteristic 0 or > deg).
pub fn is_squarefree<F: Field>(p: &MultiPoly<F>) -> bool {
    let mut g = p.clone();
    for v in 0..p.nvars {
        if p.degree_in(v) == 0 {
            continue;
        }
        g = gcd_multivariate(&g, &p.partial_derivative(v));
        if g.is_constant() {
            return true;
        }
    }
    g.is_constant()
}
