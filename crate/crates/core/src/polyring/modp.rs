//! Squarefreeness certificates by reduction modulo word-sized primes.
//!
//! If f mod p keeps its degree and is coprime to its derivative mod p, then
//! disc(f) is a unit mod p and f is squarefree over the original field.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::exactfield::{GaussianRational, Rational};

use super::Poly;

/// The largest primes p ≡ 1 (mod 4) below 2^62.
const PRIMES: [u64; 3] = [
    4611686018427387817,
    4611686018427387761,
    4611686018427387737,
];

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> Option<u64> {
    (a != 0).then(|| powmod(a, p - 2, p))
}

fn int_mod(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("reduced")
}

fn rat_mod(q: &Rational, p: u64) -> Option<u64> {
    let d = int_mod(q.denom(), p);
    Some(mulmod(int_mod(q.numer(), p), invmod(d, p)?, p))
}

/// A square root of −1 mod p for p ≡ 1 (mod 4).
fn sqrt_minus_one(p: u64) -> u64 {
    let e = (p - 1) / 4;
    for a in 2u64.. {
        let s = powmod(a, e, p);
        if mulmod(s, s, p) == p - 1 {
            return s;
        }
    }
    unreachable!()
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let li = invmod(b[db], p).expect("trimmed");
    while a.len() > db {
        let c = mulmod(*a.last().expect("nonempty"), li, p);
        let off = a.len() - 1 - db;
        for (j, bj) in b.iter().enumerate() {
            let t = mulmod(c, *bj, p);
            a[off + j] = (a[off + j] + p - t) % p;
        }
        trim(&mut a);
    }
    a
}

fn gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(a, &b, p);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

/// True when the reduction certifies squarefreeness. False is inconclusive:
/// p may divide a denominator or the leading coefficient, or be unlucky.
fn certify(c: Option<Vec<u64>>, deg: usize, p: u64) -> bool {
    let Some(c) = c else { return false };
    if c.len() != deg + 1 || c[deg] == 0 {
        return false;
    }
    let d: Vec<u64> = (1..c.len()).map(|k| mulmod(c[k], k as u64 % p, p)).collect();
    gcd_degree(c, d, p) == 0
}

pub fn is_squarefree_rational(f: &Poly<Rational>) -> bool {
    let Some(n) = f.degree() else { return false };
    for &p in &PRIMES {
        let c: Option<Vec<u64>> = f.coeffs().iter().map(|q| rat_mod(q, p)).collect();
        if certify(c, n, p) {
            return true;
        }
    }
    f.is_squarefree()
}

pub fn is_squarefree_gaussian(f: &Poly<GaussianRational>) -> bool {
    let Some(n) = f.degree() else { return false };
    for &p in &PRIMES {
        let s = sqrt_minus_one(p);
        let c: Option<Vec<u64>> = f
            .coeffs()
            .iter()
            .map(|z| {
                let re = rat_mod(&z.re, p)?;
                let im = rat_mod(&z.im, p)?;
                Some((re + mulmod(im, s, p)) % p)
            })
            .collect();
        if certify(c, n, p) {
            return true;
        }
    }
    f.is_squarefree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Field;

    #[test]
    fn primes_are_one_mod_four() {
        for &p in &PRIMES {
            assert_eq!(p % 4, 1);
            assert_eq!(powmod(3, p - 1, p), 1);
            let s = sqrt_minus_one(p);
            assert_eq!(mulmod(s, s, p), p - 1);
        }
    }

    #[test]
    fn detects_squares() {
        let f = Poly::<Rational>::from_i64s(&[-1, 0, 1]);
        assert!(is_squarefree_rational(&f));
        let g = &f * &f;
        assert!(!is_squarefree_rational(&g));
        // x² + 1 = (x − i)(x + i) is squarefree over Q(i); (x − i)² is not
        let i = GaussianRational::i();
        let l = Poly::new(alloc::vec![-i.clone(), GaussianRational::from_i64(1)]);
        assert!(is_squarefree_gaussian(&(&l * &Poly::new(alloc::vec![i, GaussianRational::from_i64(1)]))));
        assert!(!is_squarefree_gaussian(&(&l * &l)));
    }
}
