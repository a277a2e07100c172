//! Exact coefficient domains: arbitrary-precision rationals, prime fields
//! `GF(p)` for odd primes, and extension fields `GF(p^k)` presented as
//! `GF(p)[T]` modulo a monic irreducible.
//!
//! A domain is a value (it may carry a runtime modulus); elements are plain
//! data. All arithmetic is exact; no floating point anywhere.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use std::fmt;

use crate::AlgebraError;

/// Commutative ring with identity, given as a runtime value.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + Eq + Ord + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Canonical image of an integer.
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Canonical image of a big integer.
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// Short human-readable name, e.g. `GF(101)`.
    fn name(&self) -> String;
    /// Render an element for reports and debugging.
    fn format(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// Ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// Finite field of order `p^k`.
pub trait FiniteField: Field {
    fn characteristic(&self) -> u64;
    /// Extension degree over the prime field.
    fn extension_degree(&self) -> u32;
    fn order(&self) -> BigUint {
        BigUint::from(self.characteristic()).pow(self.extension_degree())
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// Element with index `i` in the canonical enumeration (base-p digits).
    /// Intended for exhaustive scans of small fields.
    fn element_at(&self, i: u64) -> Self::Elem;
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// The field of arbitrary-precision rational numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn name(&self) -> String {
        "QQ".into()
    }
    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
}

// ---------------------------------------------------------------------------
// Prime fields
// ---------------------------------------------------------------------------

/// `GF(p)` for an odd prime `p < 2^62`, elements canonically in `0..p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if p < 3 || p % 2 == 0 || !is_prime_u64(p) {
            return Err(AlgebraError::NotAnOddPrime(p));
        }
        if p >= 1 << 62 {
            return Err(AlgebraError::NotAnOddPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    /// Reduce a rational with denominator coprime to `p`.
    pub fn reduce_rational(&self, q: &BigRational) -> Result<u64, AlgebraError> {
        let den = self.from_bigint(q.denom());
        if den == 0 {
            return Err(AlgebraError::BadReduction(self.p));
        }
        let num = self.from_bigint(q.numer());
        Ok(self.mul(&num, &self.inv(&den).expect("nonzero")))
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        let (sign, digits) = n.to_u64_digits();
        let mut acc: u64 = 0;
        let base = (((1u128 << 64) % self.p as u128) % self.p as u128) as u64;
        for d in digits.iter().rev() {
            acc = self.mul(&acc, &base);
            acc = self.add(&acc, &(*d % self.p));
        }
        if sign == num_bigint::Sign::Minus {
            acc = self.neg(&acc);
        }
        acc
    }
    fn name(&self) -> String {
        format!("GF({})", self.p)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            // Fermat: a^(p-2) mod p.
            Some(self.pow(a, self.p - 2))
        }
    }
}

impl FiniteField for PrimeField {
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn extension_degree(&self) -> u32 {
        1
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn element_at(&self, i: u64) -> u64 {
        i % self.p
    }
}

// ---------------------------------------------------------------------------
// Extension fields
// ---------------------------------------------------------------------------

/// `GF(p^k) = GF(p)[T] / (m(T))` with `m` monic irreducible of degree `k`.
/// Elements are coefficient vectors of length exactly `k` (low degree first).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtensionField {
    base: PrimeField,
    /// Monic modulus, length `k + 1`, constant term first.
    modulus: Vec<u64>,
}

impl ExtensionField {
    /// The caller asserts irreducibility of `modulus`; validated only for
    /// monicity and degree. Use [`crate::factor::find_irreducible`] to build
    /// moduli with the irreducibility certificate.
    pub fn new(base: PrimeField, modulus: Vec<u64>) -> Result<Self, AlgebraError> {
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(AlgebraError::BadModulus);
        }
        if modulus.iter().any(|c| *c >= base.modulus()) {
            return Err(AlgebraError::BadModulus);
        }
        Ok(ExtensionField { base, modulus })
    }

    pub fn base_field(&self) -> PrimeField {
        self.base
    }

    pub fn modulus_coeffs(&self) -> &[u64] {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Constant embedding of the prime field.
    pub fn from_base(&self, a: u64) -> Vec<u64> {
        let mut v = vec![0; self.degree()];
        v[0] = a % self.base.modulus();
        v
    }

    /// The class of `T`, a generator of the field over `GF(p)` as a ring.
    pub fn generator(&self) -> Vec<u64> {
        let k = self.degree();
        let mut v = vec![0; k];
        if k == 1 {
            // T ≡ -m[0]
            v[0] = self.base.neg(&self.modulus[0]);
        } else {
            v[1] = 1;
        }
        v
    }

    /// Extract the base-field value of a constant element.
    pub fn to_base(&self, a: &[u64]) -> Option<u64> {
        if a[1..].iter().all(|c| *c == 0) {
            Some(a[0])
        } else {
            None
        }
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        let k = self.degree();
        let f = &self.base;
        // Modulus is monic: repeatedly cancel the top coefficient.
        while v.len() > k {
            let top = v.pop().unwrap();
            if top != 0 {
                let shift = v.len() - k;
                for i in 0..k {
                    let t = f.mul(&top, &self.modulus[i]);
                    v[shift + i] = f.sub(&v[shift + i], &t);
                }
            }
        }
        v.resize(k, 0);
        v
    }
}

impl Ring for ExtensionField {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.degree()]
    }
    fn one(&self) -> Vec<u64> {
        self.from_base(1)
    }
    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|c| *c == 0)
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter()
            .zip(b.iter())
            .map(|(x, y)| self.base.add(x, y))
            .collect()
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter()
            .zip(b.iter())
            .map(|(x, y)| self.base.sub(x, y))
            .collect()
    }
    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let k = self.degree();
        if k == 1 {
            return vec![self.base.mul(&a[0], &b[0])];
        }
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if *y == 0 {
                    continue;
                }
                let t = self.base.mul(x, y);
                prod[i + j] = self.base.add(&prod[i + j], &t);
            }
        }
        self.reduce(prod)
    }
    fn from_i64(&self, n: i64) -> Vec<u64> {
        self.from_base(self.base.from_i64(n))
    }
    fn from_bigint(&self, n: &BigInt) -> Vec<u64> {
        self.from_base(self.base.from_bigint(n))
    }
    fn name(&self) -> String {
        if self.degree() == 1 {
            format!("GF({})", self.base.modulus())
        } else {
            format!("GF({}^{})", self.base.modulus(), self.degree())
        }
    }
    fn format(&self, a: &Vec<u64>) -> String {
        let mut parts = Vec::new();
        for (i, c) in a.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            match i {
                0 => parts.push(c.to_string()),
                1 => parts.push(if *c == 1 {
                    "T".into()
                } else {
                    format!("{}*T", c)
                }),
                _ => parts.push(if *c == 1 {
                    format!("T^{}", i)
                } else {
                    format!("{}*T^{}", c, i)
                }),
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

impl Field for ExtensionField {
    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            return None;
        }
        // Extended Euclid in GF(p)[T] against the modulus.
        let inv = fp_poly::xgcd_inverse(&self.base, a, &self.modulus)?;
        Some(self.reduce(inv))
    }
}

impl FiniteField for ExtensionField {
    fn characteristic(&self) -> u64 {
        self.base.modulus()
    }
    fn extension_degree(&self) -> u32 {
        self.degree() as u32
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u64> {
        (0..self.degree())
            .map(|_| rng.gen_range(0..self.base.modulus()))
            .collect()
    }
    fn element_at(&self, mut i: u64) -> Vec<u64> {
        let p = self.base.modulus();
        let mut v = vec![0; self.degree()];
        for c in v.iter_mut() {
            *c = i % p;
            i /= p;
        }
        v
    }
}

/// Raw dense polynomial arithmetic over `GF(p)` on bare coefficient vectors,
/// used to bootstrap extension-field inversion.
mod fp_poly {
    use super::{Field, PrimeField, Ring};

    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    /// Returns `u` with `u * a ≡ gcd(a, m) (mod m)`; `None` unless the gcd is
    /// a unit.
    pub fn xgcd_inverse(f: &PrimeField, a: &[u64], m: &[u64]) -> Option<Vec<u64>> {
        let mut r0: Vec<u64> = m.to_vec();
        let mut r1: Vec<u64> = a.to_vec();
        trim(&mut r0);
        trim(&mut r1);
        let mut s0: Vec<u64> = vec![];
        let mut s1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            // Long division r0 = q*r1 + r.
            let (q, r) = divmod(f, r0.clone(), &r1);
            let qs1 = mul(f, &q, &s1);
            let new_s = sub(f, &s0, &qs1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = new_s;
        }
        // r0 = gcd; must be a nonzero constant.
        if r0.len() != 1 {
            return None;
        }
        let c = f.inv(&r0[0])?;
        Some(s0.iter().map(|x| f.mul(x, &c)).collect())
    }

    fn divmod(f: &PrimeField, mut a: Vec<u64>, b: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let db = b.len() - 1;
        if a.len() <= db {
            return (vec![], a);
        }
        let lead_inv = f.inv(b.last().unwrap()).expect("nonzero lead");
        let mut q = vec![0u64; a.len() - db];
        while a.len() > db {
            let coef = f.mul(a.last().unwrap(), &lead_inv);
            let shift = a.len() - 1 - db;
            q[shift] = coef;
            if coef != 0 {
                for i in 0..=db {
                    let t = f.mul(&coef, &b[i]);
                    a[shift + i] = f.sub(&a[shift + i], &t);
                }
            }
            a.pop();
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        (q, a)
    }

    fn mul(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let t = f.mul(x, y);
                out[i + j] = f.add(&out[i + j], &t);
            }
        }
        let mut out = out;
        trim(&mut out);
        out
    }

    fn sub(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            out[i] = f.sub(&x, &y);
        }
        trim(&mut out);
        out
    }
}

// ---------------------------------------------------------------------------
// Primality and prime sampling
// ---------------------------------------------------------------------------

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for u64 (the 12 smallest prime bases suffice
/// for the full 64-bit range).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'base: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// Deterministic-from-rng odd prime in `[2^30, 2^31)`. Large enough that a
/// random reduction of desk-scale data is good with overwhelming probability.
pub fn sample_prime<R: Rng + ?Sized>(rng: &mut R) -> u64 {
    loop {
        let candidate = rng.gen_range(1u64 << 30..1u64 << 31) | 1;
        if is_prime_u64(candidate) {
            return candidate;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_field_basics() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.mul(&5, &3), 1);
        assert_eq!(f7.add(&5, &4), 2);
        assert_eq!(f7.inv(&3), Some(5));
        assert_eq!(f7.inv(&0), None);
        assert_eq!(f7.from_i64(-1), 6);
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(2).is_err());
    }

    #[test]
    fn bigint_reduction() {
        let f = PrimeField::new(1_000_000_007).unwrap();
        let n = BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        let expect = (BigInt::from(123456789012345678901234567890u128)
            % BigInt::from(1_000_000_007u64))
        .to_string()
        .parse::<u64>()
        .unwrap();
        assert_eq!(f.from_bigint(&n), expect);
        assert_eq!(f.from_bigint(&-n.clone()), f.neg(&expect));
    }

    #[test]
    fn extension_field_arithmetic() {
        // GF(49) = GF(7)[T]/(T^2 + 1).
        let f7 = PrimeField::new(7).unwrap();
        let f49 = ExtensionField::new(f7, vec![1, 0, 1]).unwrap();
        let t = f49.generator();
        // T^2 = -1 = 6.
        assert_eq!(f49.mul(&t, &t), f49.from_base(6));
        // (T + 1)(T - 1) = T^2 - 1 = -2 = 5.
        let a = vec![1, 1];
        let b = vec![6, 1];
        assert_eq!(f49.mul(&a, &b), f49.from_base(5));
        // Inverses.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let x = f49.sample(&mut rng);
            if f49.is_zero(&x) {
                continue;
            }
            let xi = f49.inv(&x).unwrap();
            assert_eq!(f49.mul(&x, &xi), f49.one());
        }
    }

    #[test]
    fn extension_degree_one() {
        // GF(7) presented as GF(7)[T]/(T - 3): generator is 3.
        let f7 = PrimeField::new(7).unwrap();
        let e = ExtensionField::new(f7, vec![4, 1]).unwrap();
        assert_eq!(e.generator(), vec![3]);
        assert_eq!(e.mul(&vec![3], &vec![5]), vec![1]);
        assert_eq!(e.inv(&vec![3]), Some(vec![5]));
    }

    #[test]
    fn element_enumeration() {
        let f5 = PrimeField::new(5).unwrap();
        let f25 = ExtensionField::new(f5, vec![2, 0, 1]).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for i in 0..25 {
            seen.insert(f25.element_at(i));
        }
        assert_eq!(seen.len(), 25);
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(1_000_000_007));
        assert!(is_prime_u64((1 << 31) - 1));
        assert!(!is_prime_u64(1_000_000_007u64 * 3));
        assert!(!is_prime_u64(25326001)); // strong pseudoprime to bases 2,3,5
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = sample_prime(&mut rng);
        assert!(p >= 1 << 30 && p < 1 << 31 && is_prime_u64(p));
        let mut rng2 = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(sample_prime(&mut rng2), p);
    }
}
