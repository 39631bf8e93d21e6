//! The cyclotomic field Q(ζ60).
//!
//! Elements are stored as an integer vector over the power basis 1, ζ, …, ζ^15
//! together with one positive common denominator. Products are reduced with
//! Φ60(x) = x^16 + x^14 − x^10 − x^8 − x^6 + x^2 + 1.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rational_sqrt, Field, FieldError, QuadraticElement, Rational};

pub const DEGREE: usize = 16;

/// The units of Z/60, i.e. the exponents k of the automorphisms ζ ↦ ζ^k.
pub const GALOIS_EXPONENTS: [u32; 16] = [1, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 49, 53, 59];

/// Discriminants of the seven quadratic subfields of Q(ζ60).
pub const QUADRATIC_SUBFIELDS: [i64; 7] = [-1, -3, 5, 3, -5, -15, 15];

// A chain 1 < H1 < H2 < H3 < (Z/60)* of subgroups, each of index 2 in the next.
// TOWER_TAU[j] lies in H_{j+1} but not in H_j.
const TOWER: [&[u32]; 4] = [
    &[1],
    &[1, 59],
    &[1, 11, 49, 59],
    &[1, 11, 19, 29, 31, 41, 49, 59],
];
const TOWER_TAU: [u32; 4] = [59, 11, 31, 7];

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraicNumber {
    num: [BigInt; DEGREE],
    den: BigInt,
}

/// Result of [`AlgebraicNumber::embed_subfield`].
#[derive(Debug, Clone, PartialEq)]
pub enum Embedded {
    Rational(Rational),
    Quadratic(QuadraticElement),
}

fn zero_array() -> [BigInt; DEGREE] {
    core::array::from_fn(|_| BigInt::zero())
}

/// Reduces a dense integer polynomial (lowest degree first) modulo Φ60.
fn reduce(mut p: Vec<BigInt>) -> [BigInt; DEGREE] {
    for k in (DEGREE..p.len()).rev() {
        let c = core::mem::take(&mut p[k]);
        if c.is_zero() {
            continue;
        }
        // x^16 = −x^14 + x^10 + x^8 + x^6 − x^2 − 1
        let b = k - DEGREE;
        p[b + 14] -= &c;
        p[b + 10] += &c;
        p[b + 8] += &c;
        p[b + 6] += &c;
        p[b + 2] -= &c;
        p[b] -= c;
    }
    p.truncate(DEGREE);
    p.resize(DEGREE, BigInt::zero());
    let mut out = zero_array();
    for (o, v) in out.iter_mut().zip(p) {
        *o = v;
    }
    out
}

/// ζ^m reduced to the power basis, for 0 ≤ m < 60.
fn zeta_table() -> &'static [[i64; DEGREE]; 60] {
    static TABLE: [[i64; DEGREE]; 60] = build_zeta_table();
    &TABLE
}

const fn build_zeta_table() -> [[i64; DEGREE]; 60] {
    let mut t = [[0i64; DEGREE]; 60];
    let mut cur = [0i64; DEGREE];
    cur[0] = 1;
    let mut m = 0;
    while m < 60 {
        t[m] = cur;
        // multiply by ζ
        let top = cur[DEGREE - 1];
        let mut next = [0i64; DEGREE];
        let mut j = DEGREE - 1;
        while j > 0 {
            next[j] = cur[j - 1];
            j -= 1;
        }
        next[14] -= top;
        next[10] += top;
        next[8] += top;
        next[6] += top;
        next[2] -= top;
        next[0] -= top;
        cur = next;
        m += 1;
    }
    t
}

impl AlgebraicNumber {
    fn from_parts(num: [BigInt; DEGREE], den: BigInt) -> Self {
        let mut x = AlgebraicNumber { num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -core::mem::take(&mut self.den);
            for c in self.num.iter_mut() {
                *c = -core::mem::take(c);
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in self.num.iter() {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    /// Element with the given rational coordinates in the power basis.
    pub fn from_coeffs(coeffs: &[Rational]) -> Self {
        assert!(coeffs.len() <= DEGREE, "at most 16 coordinates");
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let mut num = zero_array();
        for (n, c) in num.iter_mut().zip(coeffs) {
            *n = c.numer() * (&den / c.denom());
        }
        Self::from_parts(num, den)
    }

    /// Element Σ cⱼ ζ^j for an integer vector of any length (reduced mod Φ60).
    pub fn from_int_poly(coeffs: &[BigInt]) -> Self {
        let mut v: Vec<BigInt> = coeffs.to_vec();
        if v.len() < DEGREE {
            v.resize(DEGREE, BigInt::zero());
        }
        Self::from_parts(reduce(v), BigInt::one())
    }

    /// Rational coordinates in the power basis 1, ζ, …, ζ^15.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    /// Integer numerator vector and common denominator.
    pub fn parts(&self) -> (&[BigInt; DEGREE], &BigInt) {
        (&self.num, &self.den)
    }

    /// The element scaled by its denominator, so that its coordinates are
    /// integers, and that denominator.
    pub fn clear_denominator(&self) -> (AlgebraicNumber, BigInt) {
        (
            AlgebraicNumber {
                num: self.num.clone(),
                den: BigInt::one(),
            },
            self.den.clone(),
        )
    }

    /// ζ^m for any integer m.
    pub fn zeta_pow(m: i64) -> Self {
        let m = m.rem_euclid(60) as usize;
        let row = &zeta_table()[m];
        let num = core::array::from_fn(|j| BigInt::from(row[j]));
        AlgebraicNumber {
            num,
            den: BigInt::one(),
        }
    }

    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    /// i = ζ^15.
    pub fn i() -> Self {
        Self::zeta_pow(15)
    }

    /// ε = ζ^12, a primitive fifth root of unity.
    pub fn epsilon() -> Self {
        Self::zeta_pow(12)
    }

    /// ε3 = ζ^40, the primitive cube root of unity with negative imaginary part.
    pub fn epsilon3() -> Self {
        Self::zeta_pow(40)
    }

    /// ω = ζ^12 + ζ^48 = (−1 + √5)/2.
    pub fn omega() -> Self {
        Self::zeta_pow(12) + Self::zeta_pow(48)
    }

    /// Principal square root of one of the seven subfield discriminants.
    /// Positive radicands get the positive real root, negative ones i·√|D|.
    pub fn sqrt_discriminant(d: i64) -> Option<Self> {
        let two = Self::from_i64(2);
        let sqrt5 = Self::one() + two.clone() * Self::omega();
        let sqrt3 = Self::zeta_pow(5) + Self::zeta_pow(55);
        let i = Self::i();
        Some(match d {
            -1 => i,
            -3 => two * Self::zeta_pow(20) + Self::one(),
            5 => sqrt5,
            3 => sqrt3,
            -5 => i * sqrt5,
            15 => sqrt3 * sqrt5,
            -15 => i * sqrt3 * sqrt5,
            _ => return None,
        })
    }

    /// The automorphism ζ ↦ ζ^k, for k coprime to 60.
    pub fn galois(&self, k: u32) -> Self {
        assert!(k.gcd(&60) == 1, "exponent must be a unit mod 60");
        let table = zeta_table();
        let mut out = zero_array();
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &table[(j * k as usize) % 60];
            for (o, r) in out.iter_mut().zip(row.iter()) {
                if *r != 0 {
                    *o += c * *r;
                }
            }
        }
        Self::from_parts(out, self.den.clone())
    }

    /// Complex conjugation under any embedding.
    pub fn conj(&self) -> Self {
        self.galois(59)
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Rational {
        let mut acc = Self::one();
        for k in GALOIS_EXPONENTS {
            acc *= &self.galois(k);
        }
        acc.to_rational().expect("norm is rational")
    }

    fn is_fixed_by(&self, ks: &[u32]) -> bool {
        ks.iter().all(|&k| k == 1 || self.galois(k) == *self)
    }

    /// Exact square root inside Q(ζ60), if one exists. Of the two roots the
    /// one returned is deterministic but otherwise unspecified.
    pub fn sqrt(&self) -> Option<Self> {
        sqrt_level(self, 0)
    }

    /// Identifies the smallest subfield that contains `self` when that
    /// subfield is Q or quadratic.
    pub fn embed_subfield(&self) -> Result<Embedded, FieldError> {
        if let Some(q) = self.to_rational() {
            return Ok(Embedded::Rational(q));
        }
        let mut orbit: Vec<Self> = vec![self.clone()];
        for k in GALOIS_EXPONENTS {
            let c = self.galois(k);
            if !orbit.contains(&c) {
                orbit.push(c);
                if orbit.len() > 2 {
                    return Err(FieldError::NotInQuadraticSubfield);
                }
            }
        }
        let other = &orbit[1];
        let half = Self::from_rational(&Rational::new(1.into(), 2.into()));
        let a = ((self.clone() + other) * &half)
            .to_rational()
            .ok_or(FieldError::NotInQuadraticSubfield)?;
        let delta = (self.clone() - other) * &half;
        for d in QUADRATIC_SUBFIELDS {
            let root = Self::sqrt_discriminant(d).expect("listed discriminant");
            let r = delta.checked_div(&root).expect("nonzero root");
            if let Some(b) = r.to_rational() {
                return Ok(Embedded::Quadratic(QuadraticElement::from_squarefree(
                    a,
                    b,
                    BigInt::from(d),
                )));
            }
        }
        Err(FieldError::NotInQuadraticSubfield)
    }

    /// Sign of the imaginary part under ζ ↦ exp(2πi/60), when that imaginary
    /// part lies in a quadratic subfield. `None` otherwise.
    pub fn imaginary_sign(&self) -> Option<core::cmp::Ordering> {
        let two_i = Self::from_i64(2) * Self::i();
        let im = (self.clone() - self.conj()).checked_div(&two_i)?;
        match im.embed_subfield().ok()? {
            Embedded::Rational(q) => Some(q.cmp(&Rational::zero())),
            Embedded::Quadratic(e) => e.real_sign(),
        }
    }
}

/// Square root of `a`, which is assumed fixed by the subgroup `TOWER[j]`.
fn sqrt_level(a: &AlgebraicNumber, j: usize) -> Option<AlgebraicNumber> {
    if a.is_zero() {
        return Some(AlgebraicNumber::zero());
    }
    if j == TOWER.len() {
        let q = a.to_rational()?;
        return rational_sqrt(&q).map(|r| AlgebraicNumber::from_rational(&r));
    }
    debug_assert!(a.is_fixed_by(TOWER[j]));
    let tau = TOWER_TAU[j];
    let ta = a.galois(tau);
    // If β² = a then N = β·τβ is a square root of a·τa one level down and
    // t = β + τβ satisfies t² = a + τa + 2N.
    if let Some(s0) = sqrt_level(&(a.clone() * &ta), j + 1) {
        let tr = a.clone() + &ta;
        for s in [s0.clone(), -s0] {
            let t2 = tr.clone() + s.clone() + &s;
            if t2.is_zero() {
                continue;
            }
            if let Some(t) = sqrt_level(&t2, j + 1) {
                let b = (a.clone() + &s).checked_div(&t)?;
                if b.clone() * &b == *a {
                    return Some(b);
                }
            }
        }
    }
    // Remaining case: τβ = −β, which forces τa = a. Multiply by a τ-odd
    // element c to land one level down.
    if ta != *a {
        return None;
    }
    let c = anti_invariant(j);
    let g = sqrt_level(&(a.clone() * &c * &c), j + 1)?;
    let b = g.checked_div(&c)?;
    if b.clone() * &b == *a {
        Some(b)
    } else {
        None
    }
}

/// A nonzero element fixed by `TOWER[j]` and negated by `TOWER_TAU[j]`.
fn anti_invariant(j: usize) -> AlgebraicNumber {
    let tau = TOWER_TAU[j];
    for m in 1..60i64 {
        let mut z = AlgebraicNumber::zero();
        for &h in TOWER[j] {
            z += &AlgebraicNumber::zeta_pow(m * h as i64);
        }
        let c = z.clone() - z.galois(tau);
        if !c.is_zero() {
            return c;
        }
    }
    unreachable!("every step of the tower has an odd element")
}

impl Zero for AlgebraicNumber {
    fn zero() -> Self {
        AlgebraicNumber {
            num: zero_array(),
            den: BigInt::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }
}

impl One for AlgebraicNumber {
    fn one() -> Self {
        let mut num = zero_array();
        num[0] = BigInt::one();
        AlgebraicNumber {
            num,
            den: BigInt::one(),
        }
    }
}

impl Field for AlgebraicNumber {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.to_rational() {
            return Some(Self::from_rational(&q.recip()));
        }
        Some(inverse_mod_phi(self))
    }

    fn from_rational(q: &Rational) -> Self {
        let mut num = zero_array();
        num[0] = q.numer().clone();
        AlgebraicNumber {
            num,
            den: q.denom().clone(),
        }
    }

    fn to_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(|c| c.is_zero()) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn mul_int(&self, n: &BigInt) -> Self {
        let num = core::array::from_fn(|j| &self.num[j] * n);
        Self::from_parts(num, self.den.clone())
    }
}

// Extended Euclid over Q on dense coefficient vectors.
fn inverse_mod_phi(a: &AlgebraicNumber) -> AlgebraicNumber {
    let phi: Vec<Rational> = [1i64, 0, 1, 0, 0, 0, -1, 0, -1, 0, -1, 0, 0, 0, 1, 0, 1]
        .iter()
        .map(|&c| Rational::from_integer(c.into()))
        .collect();
    let mut r0 = phi;
    let mut r1 = trim(a.coeffs());
    let mut s0: Vec<Rational> = Vec::new();
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while r1.len() > 1 {
        let (q, r) = divrem(&r0, &r1);
        let s2 = trim(sub(&s0, &mul(&q, &s1)));
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s2);
    }
    let c = r1[0].recip();
    let coeffs: Vec<Rational> = s1.iter().map(|v| v * &c).collect();
    // deg s1 < 16 always holds here.
    AlgebraicNumber::from_coeffs(&coeffs)
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(k).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect()
}

fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].recip();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] * &lead;
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
        r = trim(r);
    }
    (q, r)
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if !self.den.is_one() {
            write!(f, "(")?;
        }
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match j {
                0 => write!(f, "{}", a)?,
                _ if a.is_one() => write!(f, "z^{}", j)?,
                _ => write!(f, "{}*z^{}", a, j)?,
            }
        }
        if !self.den.is_one() {
            write!(f, ")/{}", self.den)?;
        }
        Ok(())
    }
}

fn add_impl(a: &AlgebraicNumber, b: &AlgebraicNumber, negate_b: bool) -> AlgebraicNumber {
    if a.den == b.den {
        let num = core::array::from_fn(|j| {
            if negate_b {
                &a.num[j] - &b.num[j]
            } else {
                &a.num[j] + &b.num[j]
            }
        });
        return AlgebraicNumber::from_parts(num, a.den.clone());
    }
    let l = a.den.lcm(&b.den);
    let fa = &l / &a.den;
    let fb = &l / &b.den;
    let num = core::array::from_fn(|j| {
        let x = &a.num[j] * &fa;
        let y = &b.num[j] * &fb;
        if negate_b {
            x - y
        } else {
            x + y
        }
    });
    AlgebraicNumber::from_parts(num, l)
}

fn mul_impl(a: &AlgebraicNumber, b: &AlgebraicNumber) -> AlgebraicNumber {
    let mut p = vec![BigInt::zero(); 2 * DEGREE - 1];
    for (i, x) in a.num.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.num.iter().enumerate() {
            if !y.is_zero() {
                p[i + j] += x * y;
            }
        }
    }
    AlgebraicNumber::from_parts(reduce(p), &a.den * &b.den)
}

impl Neg for AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(mut self) -> AlgebraicNumber {
        for c in self.num.iter_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Neg for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a, 'b> $tr<&'b AlgebraicNumber> for &'a AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $m(self, rhs: &'b AlgebraicNumber) -> AlgebraicNumber {
                $body(self, rhs)
            }
        }
        impl<'b> $tr<&'b AlgebraicNumber> for AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $m(self, rhs: &'b AlgebraicNumber) -> AlgebraicNumber {
                $body(&self, rhs)
            }
        }
        impl $tr<AlgebraicNumber> for AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $m(self, rhs: AlgebraicNumber) -> AlgebraicNumber {
                $body(&self, &rhs)
            }
        }
        impl<'a> $tr<AlgebraicNumber> for &'a AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $m(self, rhs: AlgebraicNumber) -> AlgebraicNumber {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, false));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, true));
forward_binop!(Mul, mul, mul_impl);

impl<'a> AddAssign<&'a AlgebraicNumber> for AlgebraicNumber {
    fn add_assign(&mut self, rhs: &'a AlgebraicNumber) {
        *self = add_impl(self, rhs, false);
    }
}

impl<'a> SubAssign<&'a AlgebraicNumber> for AlgebraicNumber {
    fn sub_assign(&mut self, rhs: &'a AlgebraicNumber) {
        *self = add_impl(self, rhs, true);
    }
}

impl<'a> MulAssign<&'a AlgebraicNumber> for AlgebraicNumber {
    fn mul_assign(&mut self, rhs: &'a AlgebraicNumber) {
        *self = mul_impl(self, rhs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;
    use core::cmp::Ordering;
    use proptest::prelude::*;

    type K = AlgebraicNumber;

    fn z(m: i64) -> K {
        K::zeta_pow(m)
    }

    // Independent oracle: multiply exponents mod 60 and reduce x^m by the
    // recurrence of the cyclotomic polynomial, using plain i128 arithmetic.
    fn oracle_reduce(m: usize) -> [i128; 16] {
        let mut v = vec![0i128; m + 1];
        v[m] = 1;
        for k in (16..=m).rev() {
            let c = v[k];
            v[k] = 0;
            let b = k - 16;
            v[b + 14] -= c;
            v[b + 10] += c;
            v[b + 8] += c;
            v[b + 6] += c;
            v[b + 2] -= c;
            v[b] -= c;
        }
        core::array::from_fn(|j| v.get(j).copied().unwrap_or(0))
    }

    #[test]
    fn zeta_powers_match_oracle() {
        for m in 0..60usize {
            let got = z(m as i64);
            let want = oracle_reduce(m);
            for j in 0..16 {
                assert_eq!(got.num[j], BigInt::from(want[j]), "zeta^{m}, slot {j}");
            }
        }
        // ζ^60 = 1 by reduction of x^60 through the recurrence as well
        let w = oracle_reduce(60);
        assert_eq!(w[0], 1);
        assert!(w[1..].iter().all(|&c| c == 0));
    }

    #[test]
    fn cyclotomic_relation_holds() {
        let zeta = z(1);
        let p16 = zeta.pow(16);
        let lower = zeta.pow(14) - zeta.pow(10) - zeta.pow(8) - zeta.pow(6) + zeta.pow(2) + K::one();
        assert_eq!(p16, -lower);
    }

    #[test]
    fn basic_identities() {
        assert_eq!(z(15) * z(15), -K::one());
        assert_eq!(z(1) * z(59), K::one());
        let w = K::omega();
        assert!((w.clone() * &w + &w - K::one()).is_zero());
        let e = K::epsilon();
        assert!(e.pow(5).is_one());
        for k in 1..5 {
            assert!(!e.pow(k).is_one());
        }
        assert!(K::epsilon3().pow(3).is_one());
        assert!(!K::epsilon3().is_one());
    }

    #[test]
    fn epsilon3_has_negative_imaginary_part() {
        assert_eq!(K::epsilon3().imaginary_sign(), Some(Ordering::Less));
        assert_eq!(z(20).imaginary_sign(), Some(Ordering::Greater));
        assert_eq!(K::i().imaginary_sign(), Some(Ordering::Greater));
        assert_eq!(K::omega().imaginary_sign(), Some(Ordering::Equal));
    }

    #[test]
    fn subfield_roots_square_correctly() {
        for d in QUADRATIC_SUBFIELDS {
            let r = K::sqrt_discriminant(d).unwrap();
            assert_eq!(r.clone() * &r, K::from_i64(d), "D = {d}");
        }
    }

    #[test]
    fn embed_examples() {
        assert_eq!(
            K::from_rational(&rat(7, 2)).embed_subfield().unwrap(),
            Embedded::Rational(rat(7, 2))
        );
        match K::omega().embed_subfield().unwrap() {
            Embedded::Quadratic(q) => {
                assert_eq!(q.a(), &rat(-1, 2));
                assert_eq!(q.b(), &rat(1, 2));
                assert_eq!(q.d(), &BigInt::from(5));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(z(1).embed_subfield(), Err(FieldError::NotInQuadraticSubfield));
        // i·√3 = √−3
        match (K::i() * K::sqrt_discriminant(3).unwrap()).embed_subfield().unwrap() {
            Embedded::Quadratic(q) => {
                assert_eq!(q.d(), &BigInt::from(-3));
                assert_eq!(q.b(), &rat(1, 1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn sqrt_in_tower() {
        for x in [z(1), z(7), K::omega(), K::from_i64(-1), K::from_i64(5), K::from_i64(-15)] {
            let sq = x.clone() * &x;
            let r = sq.sqrt().expect("square must have a root");
            assert!(r == x || r == -x.clone());
        }
    }

    #[test]
    fn non_squares_have_no_root() {
        assert!(K::from_i64(7).sqrt().is_none());
        // √2 would need ζ8
        assert!(K::from_i64(2).sqrt().is_none());
        assert!(z(1).sqrt().is_none());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(alloc::format!("{}", z(15) - K::from_i64(2)), "-2 + z^15");
        assert_eq!(alloc::format!("{}", K::from_rational(&rat(3, 2)) * z(3)), "(3*z^3)/2");
        assert_eq!(alloc::format!("{}", K::zero()), "0");
    }

    fn arb_element() -> impl Strategy<Value = K> {
        proptest::collection::vec((-20i64..20, 1i64..6), 16).prop_map(|v| {
            let c: Vec<Rational> = v.into_iter().map(|(p, q)| rat(p, q)).collect();
            K::from_coeffs(&c)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn field_axioms(a in arb_element(), b in arb_element(), c in arb_element()) {
            prop_assert_eq!((a.clone() * &b) * &c, a.clone() * (b.clone() * &c));
            prop_assert_eq!(a.clone() * (b.clone() + &c), a.clone() * &b + a.clone() * &c);
            prop_assert_eq!(a.clone() + &b, b.clone() + &a);
            if !a.is_zero() {
                prop_assert!((a.inv().unwrap() * &a).is_one());
            }
        }

        #[test]
        fn galois_is_a_ring_map(a in arb_element(), b in arb_element(), k in 0usize..16) {
            let k = GALOIS_EXPONENTS[k];
            prop_assert_eq!((a.clone() * &b).galois(k), a.galois(k) * b.galois(k));
            prop_assert_eq!((a.clone() + &b).galois(k), a.galois(k) + b.galois(k));
        }

        #[test]
        fn rationals_embed_to_themselves(p in -1000i64..1000, q in 1i64..1000) {
            let r = rat(p, q);
            prop_assert_eq!(K::from_rational(&r).embed_subfield().unwrap(), Embedded::Rational(r));
        }

        #[test]
        fn sqrt_of_square(a in arb_element()) {
            let s = a.clone() * &a;
            let r = s.sqrt().unwrap();
            prop_assert_eq!(r.clone() * &r, s);
        }

        #[test]
        fn norm_is_multiplicative(a in arb_element(), b in arb_element()) {
            prop_assert_eq!((a.clone() * &b).norm(), a.norm() * b.norm());
        }
    }
}
