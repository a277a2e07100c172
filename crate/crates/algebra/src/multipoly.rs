//! Sparse multivariate polynomials over an exact coefficient domain.
//!
//! Terms are kept sorted in descending graded reverse lexicographic order
//! with no zero coefficients, so structural equality is polynomial equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::domain::{Field, Ring};
use crate::linalg::Matrix;
use crate::unipoly::UniPoly;
use crate::AlgebraError;

/// Exponent vector; compared in graded reverse lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let da = self.total_degree();
        let db = other.total_degree();
        if da != db {
            return da.cmp(&db);
        }
        // Reverse lexicographic tie-break: the monomial with the smaller
        // exponent on the last differing variable is the larger one.
        for i in (0..self.0.len()).rev() {
            if self.0[i] != other.0[i] {
                return other.0[i].cmp(&self.0[i]);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<F: Ring> {
    pub domain: F,
    pub nvars: usize,
    /// Descending grevlex order, no zero coefficients.
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(domain: F, nvars: usize) -> Self {
        MultiPoly {
            domain,
            nvars,
            terms: vec![],
        }
    }

    pub fn constant(domain: F, nvars: usize, c: F::Elem) -> Self {
        if domain.is_zero(&c) {
            return Self::zero(domain, nvars);
        }
        MultiPoly {
            domain,
            nvars,
            terms: vec![(Monomial(vec![0; nvars]), c)],
        }
    }

    pub fn one(domain: F, nvars: usize) -> Self {
        let c = domain.one();
        Self::constant(domain, nvars, c)
    }

    pub fn variable(domain: F, nvars: usize, var: usize) -> Self {
        assert!(var < nvars);
        let mut e = vec![0; nvars];
        e[var] = 1;
        let c = domain.one();
        MultiPoly {
            domain,
            nvars,
            terms: vec![(Monomial(e), c)],
        }
    }

    pub fn monomial(domain: F, nvars: usize, exps: Vec<u32>, c: F::Elem) -> Self {
        assert_eq!(exps.len(), nvars);
        if domain.is_zero(&c) {
            return Self::zero(domain, nvars);
        }
        MultiPoly {
            domain,
            nvars,
            terms: vec![(Monomial(exps), c)],
        }
    }

    pub fn from_terms(domain: F, nvars: usize, terms: Vec<(Vec<u32>, F::Elem)>) -> Self {
        let mut map: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            let m = Monomial(e);
            match map.remove(&m) {
                Some(prev) => {
                    let s = domain.add(&prev, &c);
                    map.insert(m, s);
                }
                None => {
                    map.insert(m, c);
                }
            }
        }
        Self::from_map(domain, nvars, map)
    }

    fn from_map(domain: F, nvars: usize, map: BTreeMap<Monomial, F::Elem>) -> Self {
        let terms: Vec<(Monomial, F::Elem)> = map
            .into_iter()
            .rev()
            .filter(|(_, c)| !domain.is_zero(c))
            .collect();
        MultiPoly {
            domain,
            nvars,
            terms,
        }
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms[0].0.total_degree() == 0)
    }

    pub fn constant_value(&self) -> Option<F::Elem> {
        if self.is_zero() {
            Some(self.domain.zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.0[var]).max().unwrap_or(0)
    }

    /// `Some(d)` if every term has total degree `d` (zero counts as any
    /// degree and reports `Some(0)`).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        match self.terms.first() {
            None => Some(0),
            Some((m0, _)) => {
                let d = m0.total_degree();
                if self.terms.iter().all(|(m, _)| m.total_degree() == d) {
                    Some(d)
                } else {
                    None
                }
            }
        }
    }

    /// Terms of total degree exactly `k`.
    pub fn homogeneous_part(&self, k: u32) -> Self {
        MultiPoly {
            domain: self.domain.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == k)
                .cloned()
                .collect(),
        }
    }

    /// Smallest total degree among terms.
    pub fn min_total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).min()
    }

    /// Leading (grevlex-largest) term.
    pub fn leading(&self) -> Option<(&Monomial, &F::Elem)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// Coefficient of the lexicographically largest monomial; used for the
    /// reproducible scalar normalization of reported polynomials.
    pub fn lex_leading_coeff(&self) -> Option<F::Elem> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| {
                for i in 0..a.0.len() {
                    if a.0[i] != b.0[i] {
                        return a.0[i].cmp(&b.0[i]);
                    }
                }
                Ordering::Equal
            })
            .map(|(_, c)| c.clone())
    }

    pub fn coeff_of(&self, exps: &[u32]) -> F::Elem {
        let m = Monomial(exps.to_vec());
        self.terms
            .iter()
            .find(|(t, _)| *t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.domain.zero())
    }

    fn assert_compatible(&self, other: &Self) {
        assert!(
            self.domain == other.domain && self.nvars == other.nvars,
            "domain/nvars mismatch: {} vars over {} vs {} vars over {}",
            self.nvars,
            self.domain.name(),
            other.nvars,
            other.domain.name()
        );
    }

    pub fn check_compatible(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.domain != other.domain || self.nvars != other.nvars {
            Err(AlgebraError::DomainMismatch {
                left: format!("{} vars over {}", self.nvars, self.domain.name()),
                right: format!("{} vars over {}", other.nvars, other.domain.name()),
            })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let d = &self.domain;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let s = d.add(&self.terms[i].1, &other.terms[j].1);
                    if !d.is_zero(&s) {
                        out.push((self.terms[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        MultiPoly {
            domain: d.clone(),
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        Ok(self.add(other))
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            domain: self.domain.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.domain.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let d = &self.domain;
        if d.is_zero(c) {
            return Self::zero(d.clone(), self.nvars);
        }
        MultiPoly {
            domain: d.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), d.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, exps: &Monomial, c: &F::Elem) -> Self {
        let d = &self.domain;
        if d.is_zero(c) {
            return Self::zero(d.clone(), self.nvars);
        }
        MultiPoly {
            domain: d.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(exps), d.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let d = &self.domain;
        if self.is_zero() || other.is_zero() {
            return Self::zero(d.clone(), self.nvars);
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut map: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (ms, cs) in &small.terms {
            for (ml, cl) in &large.terms {
                let m = ms.mul(ml);
                let t = d.mul(cs, cl);
                match map.get_mut(&m) {
                    Some(v) => {
                        *v = d.add(v, &t);
                    }
                    None => {
                        map.insert(m, t);
                    }
                }
            }
        }
        Self::from_map(d.clone(), self.nvars, map)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        Ok(self.mul(other))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.domain.clone(), self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Formal partial derivative.
    pub fn partial_derivative(&self, var: usize) -> Self {
        assert!(var < self.nvars);
        let d = &self.domain;
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let factor = d.from_i64(e as i64);
            let coef = d.mul(c, &factor);
            if d.is_zero(&coef) {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            terms.push((exps, coef));
        }
        Self::from_terms(d.clone(), self.nvars, terms)
    }

    /// Exact quotient; `None` if `other` does not divide `self`.
    /// The domain is a field, so this is division in an integral domain of
    /// polynomials: cancel leading terms until the remainder vanishes.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        self.assert_compatible(other);
        let d = &self.domain;
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(d.clone(), self.nvars));
        }
        let (lm, lc) = other.leading().unwrap();
        let lm = lm.clone();
        let lc_inv = d.inv(lc)?;
        let mut rem = self.clone();
        let mut quot_terms: Vec<(Vec<u32>, F::Elem)> = Vec::new();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().unwrap();
            if !lm.divides(rm) {
                return None;
            }
            let qm = rm.div(&lm);
            let qc = d.mul(rc, &lc_inv);
            let piece = other.mul_monomial(&qm, &qc);
            rem = rem.sub(&piece);
            quot_terms.push((qm.0, qc));
        }
        Some(Self::from_terms(d.clone(), self.nvars, quot_terms))
    }

    /// Compose with the linear change of variables `x -> M x`.
    pub fn linear_substitute(&self, m: &Matrix<F>) -> Result<Self, AlgebraError> {
        if m.rows != self.nvars || m.cols != self.nvars {
            return Err(AlgebraError::DomainMismatch {
                left: format!("{} variables", self.nvars),
                right: format!("{}x{} matrix", m.rows, m.cols),
            });
        }
        if m.domain != self.domain {
            return Err(AlgebraError::DomainMismatch {
                left: self.domain.name(),
                right: m.domain.name(),
            });
        }
        if self.domain.is_zero(&m.det()) {
            return Err(AlgebraError::SingularMatrix);
        }
        let d = self.domain.clone();
        // Linear forms L_i = sum_j M[i][j] x_j, with powers memoized.
        let forms: Vec<MultiPoly<F>> = (0..self.nvars)
            .map(|i| {
                let terms: Vec<(Vec<u32>, F::Elem)> = (0..self.nvars)
                    .map(|j| {
                        let mut e = vec![0; self.nvars];
                        e[j] = 1;
                        (e, m.at(i, j).clone())
                    })
                    .collect();
                Self::from_terms(d.clone(), self.nvars, terms)
            })
            .collect();
        let mut powers: Vec<Vec<MultiPoly<F>>> = (0..self.nvars)
            .map(|i| vec![Self::one(d.clone(), self.nvars), forms[i].clone()])
            .collect();
        let mut acc = Self::zero(d.clone(), self.nvars);
        for (mono, c) in &self.terms {
            let mut term = Self::constant(d.clone(), self.nvars, c.clone());
            for (i, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&forms[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e as usize]);
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Substitute a polynomial for one variable.
    pub fn substitute(&self, var: usize, replacement: &Self) -> Self {
        self.assert_compatible(replacement);
        assert!(var < self.nvars);
        let d = self.domain.clone();
        let mut powers: Vec<MultiPoly<F>> =
            vec![Self::one(d.clone(), self.nvars), replacement.clone()];
        let mut acc = Self::zero(d.clone(), self.nvars);
        for (mono, c) in &self.terms {
            let e = mono.0[var] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(replacement);
                powers.push(next);
            }
            let mut base_exps = mono.0.clone();
            base_exps[var] = 0;
            let base = Self::monomial(d.clone(), self.nvars, base_exps, c.clone());
            acc = acc.add(&base.mul(&powers[e]));
        }
        acc
    }

    /// Substitute `x_var -> x_var + c`.
    pub fn shift(&self, var: usize, c: &F::Elem) -> Self {
        let d = self.domain.clone();
        let repl = Self::variable(d.clone(), self.nvars, var)
            .add(&Self::constant(d, self.nvars, c.clone()));
        self.substitute(var, &repl)
    }

    /// Substitute constants for some variables; the result keeps `nvars`.
    pub fn partial_evaluate(&self, assignment: &[(usize, F::Elem)]) -> Self {
        let d = &self.domain;
        let mut terms: Vec<(Vec<u32>, F::Elem)> = Vec::with_capacity(self.terms.len());
        for (mono, c) in &self.terms {
            let mut coef = c.clone();
            let mut exps = mono.0.clone();
            for (var, value) in assignment {
                let e = exps[*var];
                if e > 0 {
                    coef = d.mul(&coef, &d.pow(value, e as u64));
                    exps[*var] = 0;
                }
            }
            terms.push((exps, coef));
        }
        Self::from_terms(d.clone(), self.nvars, terms)
    }

    /// Full evaluation at a point.
    pub fn evaluate(&self, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.nvars);
        let d = &self.domain;
        let mut acc = d.zero();
        for (mono, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in mono.0.iter().enumerate() {
                if e > 0 {
                    t = d.mul(&t, &d.pow(&point[i], e as u64));
                }
            }
            acc = d.add(&acc, &t);
        }
        acc
    }

    /// Map coefficients into another domain through `f`.
    pub fn map_domain<G: Field>(
        &self,
        target: G,
        f: impl Fn(&F::Elem) -> G::Elem,
    ) -> MultiPoly<G> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.0.clone(), f(c)))
            .collect();
        MultiPoly::from_terms(target, self.nvars, terms)
    }

    /// Remove a variable that no longer occurs.
    pub fn drop_var(&self, var: usize) -> Self {
        assert!(self.degree_in(var) == 0, "variable {} still occurs", var);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.remove(var);
                (e, c.clone())
            })
            .collect();
        Self::from_terms(self.domain.clone(), self.nvars - 1, terms)
    }

    /// Append fresh variables at the end.
    pub fn extend_vars(&self, extra: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.extend(std::iter::repeat(0).take(extra));
                (e, c.clone())
            })
            .collect();
        Self::from_terms(self.domain.clone(), self.nvars + extra, terms)
    }

    /// Set `var = 1` and drop it: the standard affine chart of a
    /// homogeneous polynomial.
    pub fn dehomogenize(&self, var: usize) -> Self {
        let one = self.domain.one();
        self.partial_evaluate(&[(var, one)]).drop_var(var)
    }

    /// View as a univariate polynomial in `var`; entry `i` is the
    /// coefficient of `var^i`, a polynomial in the remaining variables (with
    /// the same `nvars`, exponent of `var` zero).
    pub fn coeffs_wrt(&self, var: usize) -> Vec<MultiPoly<F>> {
        let deg = self.degree_in(var) as usize;
        let mut out =
            vec![Self::zero(self.domain.clone(), self.nvars); deg + 1];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut exps = m.0.clone();
            exps[var] = 0;
            let term = Self::monomial(self.domain.clone(), self.nvars, exps, c.clone());
            out[e] = out[e].add(&term);
        }
        out
    }

    /// Inverse of [`coeffs_wrt`].
    pub fn assemble_wrt(
        domain: F,
        nvars: usize,
        var: usize,
        coeffs: &[MultiPoly<F>],
    ) -> Self {
        let mut acc = Self::zero(domain.clone(), nvars);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; nvars];
            e[var] = i as u32;
            let xi = Self::monomial(domain.clone(), nvars, e, domain.one());
            acc = acc.add(&c.mul(&xi));
        }
        acc
    }

    /// Convert to a dense univariate polynomial; requires every other
    /// variable to be absent.
    pub fn to_unipoly(&self, var: usize) -> Result<UniPoly<F>, AlgebraError> {
        for (m, _) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if i != var && e > 0 {
                    return Err(AlgebraError::NotUnivariate);
                }
            }
        }
        let deg = self.degree_in(var) as usize;
        let mut coeffs = vec![self.domain.zero(); deg + 1];
        for (m, c) in &self.terms {
            coeffs[m.0[var] as usize] = c.clone();
        }
        Ok(UniPoly::new(self.domain.clone(), coeffs))
    }

    pub fn from_unipoly(p: &UniPoly<F>, nvars: usize, var: usize) -> Self {
        let terms = p
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut e = vec![0; nvars];
                e[var] = i as u32;
                (e, c.clone())
            })
            .collect();
        Self::from_terms(p.domain.clone(), nvars, terms)
    }

    /// Scalar normalization: leading coefficient (in plain lexicographic
    /// order) becomes 1. Reported polynomials are normalized this way so runs
    /// are reproducible.
    pub fn normalize_lex(&self) -> Self {
        match self.lex_leading_coeff() {
            None => self.clone(),
            Some(c) => {
                let ci = self.domain.inv(&c).expect("nonzero leading coefficient");
                self.scale(&ci)
            }
        }
    }

    pub fn format(&self, vars: &[&str]) -> String {
        assert_eq!(vars.len(), self.nvars);
        if self.is_zero() {
            return "0".into();
        }
        let d = &self.domain;
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let mut factors = Vec::new();
            let cs = d.format(c);
            if !d.is_one(c) || m.total_degree() == 0 {
                factors.push(cs);
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(vars[i].to_string()),
                    _ => factors.push(format!("{}^{}", vars[i], e)),
                }
            }
            parts.push(factors.join("*"));
        }
        parts.join(" + ")
    }
}
