//! Dense univariate polynomials over a field, low-degree coefficient first.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::domain::{Field, Ring};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly<F: Ring> {
    pub domain: F,
    /// Ascending coefficients, no trailing zeros.
    pub coeffs: Vec<F::Elem>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(domain: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().map_or(false, |c| domain.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { domain, coeffs }
    }

    pub fn zero(domain: F) -> Self {
        UniPoly {
            domain,
            coeffs: vec![],
        }
    }

    pub fn constant(domain: F, c: F::Elem) -> Self {
        Self::new(domain, vec![c])
    }

    pub fn one(domain: F) -> Self {
        let c = domain.one();
        Self::constant(domain, c)
    }

    /// The monomial `x`.
    pub fn x(domain: F) -> Self {
        let coeffs = vec![domain.zero(), domain.one()];
        UniPoly { domain, coeffs }
    }

    /// `c * x^k`.
    pub fn monomial(domain: F, c: F::Elem, k: usize) -> Self {
        if domain.is_zero(&c) {
            return Self::zero(domain);
        }
        let mut coeffs = vec![domain.zero(); k + 1];
        coeffs[k] = c;
        UniPoly { domain, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> F::Elem {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| self.domain.zero())
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.domain.zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.domain.add(&self.coeff(i), &other.coeff(i)));
        }
        Self::new(self.domain.clone(), out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.domain.sub(&self.coeff(i), &other.coeff(i)));
        }
        Self::new(self.domain.clone(), out)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            domain: self.domain.clone(),
            coeffs: self.coeffs.iter().map(|c| self.domain.neg(c)).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.domain.is_zero(c) {
            return Self::zero(self.domain.clone());
        }
        UniPoly {
            domain: self.domain.clone(),
            coeffs: self.coeffs.iter().map(|a| self.domain.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.domain.clone());
        }
        let d = &self.domain;
        let mut out = vec![d.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if d.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = d.mul(a, b);
                out[i + j] = d.add(&out[i + j], &t);
            }
        }
        Self::new(d.clone(), out)
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.domain.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly {
            domain: self.domain.clone(),
            coeffs,
        }
    }

    /// Euclidean division; divisor must be nonzero.
    pub fn quot_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let d = &self.domain;
        let db = divisor.deg();
        if self.is_zero() || self.deg() < db {
            return (Self::zero(d.clone()), self.clone());
        }
        let lead_inv = d.inv(&divisor.lead()).expect("unit leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![d.zero(); self.deg() - db + 1];
        for i in (0..quot.len()).rev() {
            let top = rem[i + db].clone();
            if d.is_zero(&top) {
                continue;
            }
            let c = d.mul(&top, &lead_inv);
            quot[i] = c.clone();
            for (j, bc) in divisor.coeffs.iter().enumerate() {
                let t = d.mul(&c, bc);
                rem[i + j] = d.sub(&rem[i + j], &t);
            }
        }
        (Self::new(d.clone(), quot), Self::new(d.clone(), rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.quot_rem(divisor).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let li = self.domain.inv(&self.lead()).expect("unit lead");
        self.scale(&li)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.domain.clone());
        }
        let d = &self.domain;
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| d.mul(&d.from_i64(i as i64), c))
            .collect();
        Self::new(d.clone(), out)
    }

    pub fn evaluate(&self, x: &F::Elem) -> F::Elem {
        let d = &self.domain;
        let mut acc = d.zero();
        for c in self.coeffs.iter().rev() {
            acc = d.mul(&acc, x);
            acc = d.add(&acc, c);
        }
        acc
    }

    /// Composition `self(g)`.
    pub fn compose(&self, g: &Self) -> Self {
        let d = self.domain.clone();
        let mut acc = Self::zero(d.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g);
            acc = acc.add(&Self::constant(d.clone(), c.clone()));
        }
        acc
    }

    /// `self^e mod m` with a big-integer exponent.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let d = self.domain.clone();
        let mut result = Self::one(d);
        if e.is_zero() {
            return result.rem(m);
        }
        let mut base = self.rem(m);
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = result.mul(&result).rem(m);
            if e.bit(i) {
                result = result.mul(&base).rem(m);
            }
        }
        // The loop above squares before multiplying, so the base is folded in
        // from the most significant bit; `base` kept for clarity.
        let _ = &mut base;
        result
    }

    /// Format with variable name `var`.
    pub fn format(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let d = &self.domain;
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if d.is_zero(c) {
                continue;
            }
            let cs = d.format(c);
            let term = match i {
                0 => cs,
                1 => {
                    if d.is_one(c) {
                        var.to_string()
                    } else {
                        format!("{}*{}", cs, var)
                    }
                }
                _ => {
                    if d.is_one(c) {
                        format!("{}^{}", var, i)
                    } else {
                        format!("{}*{}^{}", cs, var, i)
                    }
                }
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}
