//! Univariate factorization over finite fields: squarefree decomposition,
//! distinct-degree splitting, then equal-degree splitting (Cantor–Zassenhaus
//! for odd characteristic). Also: Rabin irreducibility testing, root
//! extraction, random irreducible moduli, and embeddings between extension
//! fields of the same prime field.

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use crate::domain::{ExtensionField, Field, FiniteField, PrimeField, Ring};
use crate::unipoly::UniPoly;
use crate::AlgebraError;

/// Complete factorization `unit * prod factors[i]^mult[i]` with monic
/// irreducible, pairwise distinct factors.
#[derive(Clone, Debug, PartialEq)]
pub struct FactoredUnivariate<F: Field> {
    pub domain: F,
    pub unit: F::Elem,
    pub factors: Vec<(UniPoly<F>, u32)>,
}

impl<F: Field> FactoredUnivariate<F> {
    pub fn product(&self) -> UniPoly<F> {
        let mut acc = UniPoly::constant(self.domain.clone(), self.unit.clone());
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }

    /// One entry per irreducible factor: `(degree, multiplicity)`.
    pub fn degree_profile(&self) -> Vec<(u32, u32)> {
        self.factors
            .iter()
            .map(|(f, m)| (f.deg() as u32, *m))
            .collect()
    }
}

fn pow_elem_big<F: FiniteField>(field: &F, a: &F::Elem, e: &BigUint) -> F::Elem {
    let mut acc = field.one();
    for i in (0..e.bits()).rev() {
        acc = field.mul(&acc, &acc);
        if e.bit(i) {
            acc = field.mul(&acc, a);
        }
    }
    acc
}

/// Monic squarefree decomposition, valid in characteristic p (handles p-th
/// powers via Frobenius roots).
fn squarefree_decomposition<F: FiniteField>(f: &UniPoly<F>) -> Vec<(UniPoly<F>, u32)> {
    let field = f.domain.clone();
    let p = field.characteristic();
    let mut out: Vec<(UniPoly<F>, u32)> = Vec::new();
    let f = f.monic();
    if f.deg() == 0 {
        return out;
    }
    let deriv = f.derivative();
    let mut c = f.gcd(&deriv);
    let mut w = f.quot_rem(&c).0;
    let mut i = 1u32;
    while w.deg() > 0 {
        let y = w.gcd(&c);
        let fac = w.quot_rem(&y).0;
        if fac.deg() > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.quot_rem(&w).0;
        i += 1;
    }
    if c.deg() > 0 {
        // c = g(x^p); take the p-th root and recurse.
        let m = field.extension_degree();
        let root_exp = BigUint::from(p).pow(m.saturating_sub(1));
        let mut root_coeffs = Vec::new();
        for (e, coef) in c.coeffs.iter().enumerate() {
            if field.is_zero(coef) {
                continue;
            }
            assert!(e % p as usize == 0, "gcd structure violated");
            while root_coeffs.len() < e / p as usize {
                root_coeffs.push(field.zero());
            }
            root_coeffs.push(pow_elem_big(&field, coef, &root_exp));
        }
        let g = UniPoly::new(field, root_coeffs);
        for (h, mult) in squarefree_decomposition(&g) {
            merge_factor(&mut out, h, mult * p as u32);
        }
    }
    out
}

fn merge_factor<F: Field>(out: &mut Vec<(UniPoly<F>, u32)>, f: UniPoly<F>, mult: u32) {
    for (g, m) in out.iter_mut() {
        if *g == f {
            *m += mult;
            return;
        }
    }
    out.push((f, mult));
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// returns `(product of all irreducible factors of degree d, d)` pairs.
fn distinct_degree<F: FiniteField>(f: &UniPoly<F>) -> Vec<(UniPoly<F>, usize)> {
    let field = f.domain.clone();
    let q = field.order();
    let x = UniPoly::x(field.clone());
    let mut out = Vec::new();
    let mut g = f.clone();
    let mut h = x.rem(&g);
    let mut d = 0usize;
    while g.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&q, &g);
        let diff = h.sub(&x);
        let factor = g.gcd(&diff);
        if factor.deg() > 0 {
            out.push((factor.clone(), d));
            g = g.quot_rem(&factor).0;
            h = h.rem(&g);
        }
    }
    if g.deg() > 0 {
        out.push((g.clone(), g.deg()));
    }
    out
}

/// Equal-degree splitting (Cantor–Zassenhaus, odd order) of a monic
/// squarefree product of irreducibles all of degree `d`.
fn equal_degree<F: FiniteField, R: Rng + ?Sized>(
    f: &UniPoly<F>,
    d: usize,
    rng: &mut R,
) -> Vec<UniPoly<F>> {
    let field = f.domain.clone();
    if f.deg() == d {
        return vec![f.monic()];
    }
    let q = field.order();
    let exponent = (q.pow(d as u32) - BigUint::one()) >> 1;
    let one = UniPoly::one(field.clone());
    for _attempt in 0..512 {
        let a = UniPoly::new(
            field.clone(),
            (0..f.deg()).map(|_| field.sample(rng)).collect(),
        );
        if a.is_constant() {
            continue;
        }
        let g = a.gcd(f);
        let split = if g.deg() > 0 && g.deg() < f.deg() {
            Some(g)
        } else {
            let b = a.pow_mod(&exponent, f);
            let cand = b.sub(&one).gcd(f);
            if cand.deg() > 0 && cand.deg() < f.deg() {
                Some(cand)
            } else {
                None
            }
        };
        if let Some(g) = split {
            let h = f.quot_rem(&g).0;
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
    }
    panic!("equal-degree splitting failed to converge; input likely violates preconditions");
}

/// Factor a nonzero univariate polynomial over a finite field of odd
/// characteristic. Factors are sorted canonically (degree, then coefficient
/// sequence) so results are reproducible for a fixed seed.
pub fn factor_univariate<F: FiniteField, R: Rng + ?Sized>(
    f: &UniPoly<F>,
    rng: &mut R,
) -> Result<FactoredUnivariate<F>, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    let field = f.domain.clone();
    let unit = f.lead();
    let mut factors: Vec<(UniPoly<F>, u32)> = Vec::new();
    for (g, mult) in squarefree_decomposition(f) {
        for (h, d) in distinct_degree(&g) {
            for irr in equal_degree(&h, d, rng) {
                merge_factor(&mut factors, irr, mult);
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.deg()
            .cmp(&b.deg())
            .then_with(|| a.coeffs.cmp(&b.coeffs))
    });
    Ok(FactoredUnivariate {
        domain: field,
        unit,
        factors,
    })
}

/// Roots in the base field with multiplicities, sorted.
pub fn roots_with_multiplicity<F: FiniteField, R: Rng + ?Sized>(
    f: &UniPoly<F>,
    rng: &mut R,
) -> Result<Vec<(F::Elem, u32)>, AlgebraError> {
    let field = f.domain.clone();
    let fact = factor_univariate(f, rng)?;
    let mut out = Vec::new();
    for (g, m) in fact.factors {
        if g.deg() == 1 {
            // monic x + c: root is -c.
            out.push((field.neg(&g.coeffs[0]), m));
        }
    }
    out.sort();
    Ok(out)
}

/// Rabin's irreducibility test; deterministic.
pub fn is_irreducible<F: FiniteField>(f: &UniPoly<F>) -> bool {
    let field = f.domain.clone();
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let q = field.order();
    let x = UniPoly::x(field.clone());
    // x^(q^n) must reduce to x mod f.
    let mut h = x.rem(f);
    for _ in 0..n {
        h = h.pow_mod(&q, f);
    }
    if h != x.rem(f) {
        return false;
    }
    // For each prime divisor l of n: gcd(x^(q^(n/l)) - x, f) must be 1.
    let mut rem = n;
    let mut prime_divisors = Vec::new();
    let mut cand = 2;
    while cand * cand <= rem {
        if rem % cand == 0 {
            prime_divisors.push(cand);
            while rem % cand == 0 {
                rem /= cand;
            }
        }
        cand += 1;
    }
    if rem > 1 {
        prime_divisors.push(rem);
    }
    for l in prime_divisors {
        let steps = n / l;
        let mut h = x.rem(f);
        for _ in 0..steps {
            h = h.pow_mod(&q, f);
        }
        let g = h.sub(&x).gcd(f);
        if g.deg() > 0 {
            return false;
        }
    }
    true
}

/// Seeded search for a monic irreducible of degree `k`.
pub fn find_irreducible<F: FiniteField, R: Rng + ?Sized>(
    field: &F,
    k: usize,
    rng: &mut R,
) -> UniPoly<F> {
    assert!(k >= 1);
    loop {
        let mut coeffs: Vec<F::Elem> = (0..k).map(|_| field.sample(rng)).collect();
        coeffs.push(field.one());
        let f = UniPoly::new(field.clone(), coeffs);
        if f.deg() == k && is_irreducible(&f) {
            return f;
        }
    }
}

/// Construct `GF(p^k)` with a seeded irreducible modulus.
pub fn make_extension<R: Rng + ?Sized>(
    base: PrimeField,
    k: usize,
    rng: &mut R,
) -> ExtensionField {
    let modulus = find_irreducible(&base, k, rng);
    ExtensionField::new(base, modulus.coeffs).expect("valid modulus")
}

/// Embedding `GF(p^a) -> GF(p^b)` with `a | b`, determined by the canonical
/// (smallest) image of the source generator.
#[derive(Clone, Debug)]
pub struct FieldEmbedding {
    pub source: ExtensionField,
    pub target: ExtensionField,
    gen_image: Vec<u64>,
}

impl FieldEmbedding {
    pub fn new<R: Rng + ?Sized>(
        source: &ExtensionField,
        target: &ExtensionField,
        rng: &mut R,
    ) -> Result<Self, AlgebraError> {
        if source.characteristic() != target.characteristic()
            || target.degree() % source.degree() != 0
        {
            return Err(AlgebraError::DomainMismatch {
                left: source.name(),
                right: target.name(),
            });
        }
        // The source modulus splits completely over the target.
        let lifted = UniPoly::new(
            target.clone(),
            source
                .modulus_coeffs()
                .iter()
                .map(|c| target.from_base(*c))
                .collect(),
        );
        let mut roots: Vec<Vec<u64>> = roots_with_multiplicity(&lifted, rng)?
            .into_iter()
            .map(|(r, _)| r)
            .collect();
        roots.sort();
        let gen_image =
            roots
                .into_iter()
                .next()
                .ok_or(AlgebraError::RetryBudgetExhausted(
                    "modulus has no root in target field".into(),
                ))?;
        Ok(FieldEmbedding {
            source: source.clone(),
            target: target.clone(),
            gen_image,
        })
    }

    /// Identity embedding when source and target coincide.
    pub fn identity(field: &ExtensionField) -> Self {
        FieldEmbedding {
            source: field.clone(),
            target: field.clone(),
            gen_image: field.generator(),
        }
    }

    pub fn map(&self, a: &[u64]) -> Vec<u64> {
        // Horner in the generator image.
        let t = &self.target;
        let mut acc = t.zero();
        for c in a.iter().rev() {
            acc = t.mul(&acc, &self.gen_image);
            acc = t.add(&acc, &t.from_base(*c));
        }
        acc
    }
}
