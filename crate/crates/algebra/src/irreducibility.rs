//! Absolute irreducibility of plane curves over prime fields.
//!
//! For a squarefree bivariate `f`, the solution space of the adjoint PDE
//! `d/dx (g/f) = d/dy (h/f)` with the degree caps
//! `deg_x g <= m, deg_y g <= n-1, deg_x h <= m-1, deg_y h <= n`
//! has dimension equal to the number of absolutely irreducible factors of
//! `f` (valid when the characteristic exceeds `(2m-1) n`). Each factor
//! `f_i` contributes the solution `((f/f_i) df_i/dy, (f/f_i) df_i/dx)`,
//! and these span. Counting factors over the algebraic closure therefore
//! reduces to a nullspace dimension over `GF(p)` itself.

use rand::Rng;

use crate::domain::{FiniteField, PrimeField, Ring};
use crate::linalg::Matrix;
use crate::multipoly::MultiPoly;
use crate::resultant::is_squarefree;
use crate::AlgebraError;

/// Number of absolutely irreducible factors (over the algebraic closure) of
/// a squarefree bivariate polynomial.
pub fn absolute_factor_count<R: Rng + ?Sized>(
    f: &MultiPoly<PrimeField>,
    vx: usize,
    vy: usize,
    rng: &mut R,
) -> Result<u32, AlgebraError> {
    let field = f.domain.clone();
    let nvars = f.nvars;
    for v in 0..nvars {
        if v != vx && v != vy {
            assert!(f.degree_in(v) == 0, "input must be bivariate");
        }
    }
    if f.is_constant() {
        return Err(AlgebraError::ZeroInput);
    }
    assert!(is_squarefree(f), "absolute factor count needs squarefree input");

    // A generic full 2x2 substitution makes every factor depend on both
    // variables (the count is invariant under invertible substitutions).
    let f = loop {
        let (a, b, c, d) = (
            field.sample(rng),
            field.sample(rng),
            field.sample(rng),
            field.sample(rng),
        );
        if a == 0 || b == 0 || c == 0 || d == 0 {
            continue;
        }
        if field.is_zero(&field.sub(&field.mul(&a, &d), &field.mul(&b, &c))) {
            continue;
        }
        let mut mat = Matrix::identity(field, nvars);
        mat.set(vx, vx, a);
        mat.set(vx, vy, b);
        mat.set(vy, vx, c);
        mat.set(vy, vy, d);
        let g = f.linear_substitute(&mat).expect("invertible");
        if g.degree_in(vx) >= 1 && g.degree_in(vy) >= 1 {
            break g;
        }
    };

    let m = f.degree_in(vx) as usize;
    let n = f.degree_in(vy) as usize;
    let char_bound = ((2 * m).saturating_sub(1)) as u64 * n as u64;
    if field.modulus() <= char_bound {
        return Err(AlgebraError::RetryBudgetExhausted(format!(
            "characteristic {} too small for the PDE criterion (needs > {})",
            field.modulus(),
            char_bound
        )));
    }

    let fx = f.partial_derivative(vx);
    let fy = f.partial_derivative(vy);

    // Unknowns: coefficients of g (deg_x <= m, deg_y <= n-1) then of h
    // (deg_x <= m-1, deg_y <= n).
    let g_cols = (m + 1) * n;
    let h_cols = m * (n + 1);
    let cols = g_cols + h_cols;
    // Equation rows: coefficients of E = g_x f - g f_x - h_y f + h f_y,
    // of degree <= (2m-1, 2n-1).
    let rows = (2 * m) * (2 * n);
    let mut data = vec![0u64; rows * cols];
    let row_of = |ex: u32, ey: u32| -> Option<usize> {
        let (ex, ey) = (ex as usize, ey as usize);
        if ex < 2 * m && ey < 2 * n {
            Some(ex * (2 * n) + ey)
        } else {
            None
        }
    };
    let scatter = |col: usize, poly: &MultiPoly<PrimeField>, data: &mut Vec<u64>| {
        for (mono, coef) in poly.terms() {
            let r = row_of(mono.0[vx], mono.0[vy]).expect("degree bound respected");
            let idx = r * cols + col;
            data[idx] = field.add(&data[idx], coef);
        }
    };
    let mut col = 0;
    for a in 0..=m {
        for b in 0..n {
            let mut exps = vec![0u32; nvars];
            exps[vx] = a as u32;
            exps[vy] = b as u32;
            let mu = MultiPoly::monomial(field, nvars, exps, field.one());
            let contrib = mu.partial_derivative(vx).mul(&f).sub(&mu.mul(&fx));
            scatter(col, &contrib, &mut data);
            col += 1;
        }
    }
    for a in 0..m {
        for b in 0..=n {
            let mut exps = vec![0u32; nvars];
            exps[vx] = a as u32;
            exps[vy] = b as u32;
            let mu = MultiPoly::monomial(field, nvars, exps, field.one());
            let contrib = mu.mul(&fy).sub(&mu.partial_derivative(vy).mul(&f));
            scatter(col, &contrib, &mut data);
            col += 1;
        }
    }
    let mat = Matrix::new(field, rows, cols, data);
    let rank = mat.rank();
    Ok((cols - rank) as u32)
}

/// `true` when the squarefree bivariate `f` stays irreducible over every
/// finite extension of its field.
pub fn is_absolutely_irreducible<R: Rng + ?Sized>(
    f: &MultiPoly<PrimeField>,
    vx: usize,
    vy: usize,
    rng: &mut R,
) -> Result<bool, AlgebraError> {
    Ok(absolute_factor_count(f, vx, vy, rng)? == 1)
}
