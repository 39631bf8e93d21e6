//! Squarefree parts of large integers.
//!
//! Trial division removes small primes, Miller-Rabin separates primes from
//! composites and Pollard-Brent splits what is left. When the rho budget runs
//! out on a composite cofactor the result is still a valid "D up to squares"
//! candidate but it is flagged as uncertified.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_BOUND: u32 = 1 << 16;
pub const DEFAULT_RHO_BUDGET: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreePart {
    /// Squarefree integer with the sign of the input.
    pub value: BigInt,
    /// False when some cofactor could not be split within the rho budget.
    pub certified: bool,
}

/// Integer square root of a nonnegative integer if it is a perfect square.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

pub fn is_square(n: &BigInt) -> bool {
    exact_isqrt(n).is_some()
}

fn small_primes(bound: u32) -> Vec<u32> {
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if sieve[i] {
            out.push(i as u32);
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

/// Miller-Rabin with the first 24 prime bases. Deterministic below 3.3e24 and
/// overwhelmingly reliable above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    const BASES: [u32; 24] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    ];
    for p in BASES {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'outer: for a in BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
/// composite `n`, or `None` when `budget` iterations did not find one.
pub fn pollard_brent(n: &BigUint, budget: u64) -> Option<BigUint> {
    let bits = n.bits();
    if bits <= 127 {
        brent_fixed::<2>(n, budget)
    } else if bits <= 255 {
        brent_fixed::<4>(n, budget)
    } else {
        brent_big(n, budget)
    }
}

const BATCH: u64 = 128;

/// Montgomery arithmetic modulo an odd n < 2^(64L − 1).
struct Mont<const L: usize> {
    n: [u64; L],
    ninv: u64,
}

impl<const L: usize> Mont<L> {
    fn new(n: &BigUint) -> Self {
        let digits = n.to_u64_digits();
        let mut limbs = [0u64; L];
        limbs[..digits.len()].copy_from_slice(&digits);
        let mut inv: u64 = 1;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(limbs[0].wrapping_mul(inv)));
        }
        Mont {
            n: limbs,
            ninv: inv.wrapping_neg(),
        }
    }

    fn geq_n(&self, a: &[u64; L]) -> bool {
        for j in (0..L).rev() {
            if a[j] != self.n[j] {
                return a[j] > self.n[j];
            }
        }
        true
    }

    fn sub_n(&self, a: &mut [u64; L]) {
        let mut borrow = 0u64;
        for j in 0..L {
            let (d1, b1) = a[j].overflowing_sub(self.n[j]);
            let (d2, b2) = d1.overflowing_sub(borrow);
            a[j] = d2;
            borrow = (b1 || b2) as u64;
        }
    }

    /// a·b·2^(−64L) mod n (CIOS).
    fn mul(&self, a: &[u64; L], b: &[u64; L]) -> [u64; L] {
        let mut t = [0u64; 6];
        for &bi in b.iter() {
            let mut c: u128 = 0;
            for j in 0..L {
                let s = t[j] as u128 + a[j] as u128 * bi as u128 + c;
                t[j] = s as u64;
                c = s >> 64;
            }
            let s = t[L] as u128 + c;
            t[L] = s as u64;
            t[L + 1] = (s >> 64) as u64;
            let m = t[0].wrapping_mul(self.ninv);
            let s = t[0] as u128 + m as u128 * self.n[0] as u128;
            let mut c = s >> 64;
            for j in 1..L {
                let s = t[j] as u128 + m as u128 * self.n[j] as u128 + c;
                t[j - 1] = s as u64;
                c = s >> 64;
            }
            let s = t[L] as u128 + c;
            t[L - 1] = s as u64;
            t[L] = t[L + 1] + (s >> 64) as u64;
            t[L + 1] = 0;
        }
        let mut out = [0u64; L];
        out.copy_from_slice(&t[..L]);
        if t[L] != 0 || self.geq_n(&out) {
            self.sub_n(&mut out);
        }
        out
    }

    fn add_small(&self, a: &[u64; L], c: u64) -> [u64; L] {
        let mut out = *a;
        let mut carry = c;
        for limb in out.iter_mut() {
            let (v, o) = limb.overflowing_add(carry);
            *limb = v;
            carry = o as u64;
            if carry == 0 {
                break;
            }
        }
        if self.geq_n(&out) {
            self.sub_n(&mut out);
        }
        out
    }

    fn abs_diff(a: &[u64; L], b: &[u64; L]) -> [u64; L] {
        let (hi, lo) = if Self::less(a, b) { (b, a) } else { (a, b) };
        let mut out = [0u64; L];
        let mut borrow = 0u64;
        for j in 0..L {
            let (d1, b1) = hi[j].overflowing_sub(lo[j]);
            let (d2, b2) = d1.overflowing_sub(borrow);
            out[j] = d2;
            borrow = (b1 || b2) as u64;
        }
        out
    }

    fn less(a: &[u64; L], b: &[u64; L]) -> bool {
        for j in (0..L).rev() {
            if a[j] != b[j] {
                return a[j] < b[j];
            }
        }
        false
    }

    fn to_big(a: &[u64; L]) -> BigUint {
        let mut v = BigUint::zero();
        for &d in a.iter().rev() {
            v = (v << 64usize) + BigUint::from(d);
        }
        v
    }
}

fn brent_fixed<const L: usize>(n: &BigUint, budget: u64) -> Option<BigUint> {
    let mt = Mont::<L>::new(n);
    let f = |v: &[u64; L], c: u64| mt.add_small(&mt.mul(v, v), c);
    for c in 1u64..6 {
        let mut y = [0u64; L];
        y[0] = 2;
        let mut one = [0u64; L];
        one[0] = 1;
        let mut q = one;
        let mut r: u64 = 1;
        let mut spent: u64 = 0;
        let mut x;
        let mut ys;
        let mut g;
        loop {
            x = y;
            for _ in 0..r {
                y = f(&y, c);
            }
            let mut k = 0;
            loop {
                ys = y;
                let m = BATCH.min(r - k);
                for _ in 0..m {
                    y = f(&y, c);
                    q = mt.mul(&q, &Mont::<L>::abs_diff(&x, &y));
                }
                spent += m;
                g = Mont::<L>::to_big(&q).gcd(n);
                k += m;
                if k >= r || !g.is_one() {
                    break;
                }
            }
            r *= 2;
            if !g.is_one() || spent > budget {
                break;
            }
        }
        if g == *n {
            loop {
                ys = f(&ys, c);
                g = Mont::<L>::to_big(&Mont::<L>::abs_diff(&x, &ys)).gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && g != *n {
            return Some(g);
        }
        if spent > budget {
            return None;
        }
    }
    None
}

fn brent_big(n: &BigUint, budget: u64) -> Option<BigUint> {
    for c in 1u32..6 {
        let c = BigUint::from(c);
        let f = |v: &BigUint| (v * v + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut spent: u64 = 0;
        let mut x;
        let mut ys;
        let mut g;
        loop {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            loop {
                ys = y.clone();
                let m = BATCH.min(r - k);
                for _ in 0..m {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                spent += m;
                g = q.gcd(n);
                k += m;
                if k >= r || !g.is_one() {
                    break;
                }
            }
            r *= 2;
            if !g.is_one() || spent > budget {
                break;
            }
        }
        if g == *n {
            // Backtrack one step at a time from the last saved state.
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && g != *n {
            return Some(g);
        }
        if spent > budget {
            return None;
        }
    }
    None
}

/// Squarefree part with the default rho budget.
pub fn squarefree_part(n: &BigInt) -> SquarefreePart {
    squarefree_part_with_budget(n, DEFAULT_RHO_BUDGET)
}

/// Squarefree part of a nonzero integer, keeping its sign. Zero maps to zero.
pub fn squarefree_part_with_budget(n: &BigInt, budget: u64) -> SquarefreePart {
    if n.is_zero() {
        return SquarefreePart {
            value: BigInt::zero(),
            certified: true,
        };
    }
    let mut m = n.magnitude().clone();
    let mut value = BigUint::one();
    for p in small_primes(TRIAL_BOUND) {
        let pb = BigUint::from(p);
        let mut e = 0u32;
        while (&m % &pb).is_zero() {
            m /= &pb;
            e += 1;
        }
        if e % 2 == 1 {
            value *= &pb;
        }
        if m.is_one() {
            break;
        }
    }
    let mut certified = true;
    let bound = BigUint::from(TRIAL_BOUND);
    let bound_sq = &bound * &bound;
    let bound_cube = &bound_sq * &bound;

    // Prime factors of the cofactor (with multiplicity) plus stubborn pieces.
    let mut primes: Vec<BigUint> = Vec::new();
    let mut stubborn: Vec<BigUint> = Vec::new();
    let mut stack = vec![m];
    while let Some(c) = stack.pop() {
        if c.is_one() {
            continue;
        }
        if c < bound_sq || is_probable_prime(&c) {
            primes.push(c);
            continue;
        }
        let r = c.sqrt();
        if &r * &r == c {
            stack.push(r.clone());
            stack.push(r);
            continue;
        }
        match pollard_brent(&c, budget) {
            Some(f) => {
                let g = &c / &f;
                stack.push(f);
                stack.push(g);
            }
            None => {
                // No factor below 2^16 and not a square: a composite below
                // 2^48 is a product of two distinct primes.
                if c >= bound_cube {
                    certified = false;
                }
                stubborn.push(c);
            }
        }
    }
    // Stubborn pieces may still share factors with each other or with the
    // primes found; refine by gcds so that square factors cancel.
    let mut pieces = primes;
    pieces.extend(stubborn);
    let pieces = coprime_base(pieces);
    for (b, e) in pieces {
        if e % 2 == 1 {
            value *= b;
        }
    }
    let value = BigInt::from_biguint(n.sign(), value);
    SquarefreePart { value, certified }
}

/// Rewrites a multiset of integers > 1 as a product of pairwise coprime bases
/// with exponents.
fn coprime_base(items: Vec<BigUint>) -> Vec<(BigUint, u32)> {
    let mut base: Vec<(BigUint, u32)> = Vec::new();
    let mut queue = items;
    while let Some(x) = queue.pop() {
        if x.is_one() {
            continue;
        }
        let mut placed = false;
        for idx in 0..base.len() {
            let g = base[idx].0.gcd(&x);
            if g.is_one() {
                continue;
            }
            if g == base[idx].0 && g == x {
                base[idx].1 += 1;
            } else {
                // Split both into g and cofactors and start over for them.
                let (b, e) = base.swap_remove(idx);
                let bq = &b / &g;
                let xq = &x / &g;
                for _ in 0..e {
                    queue.push(g.clone());
                    queue.push(bq.clone());
                }
                queue.push(g);
                queue.push(xq);
            }
            placed = true;
            break;
        }
        if !placed {
            base.push((x, 1));
        }
    }
    base
}

/// The small prime factorisation helper used in tests and diagnostics.
pub fn trial_divide_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Convenience for tests: squarefree part of a machine integer.
pub fn squarefree_i64(n: i64) -> i64 {
    squarefree_part(&BigInt::from(n)).value.to_i64().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn oracle(n: i64) -> i64 {
        if n == 0 {
            return 0;
        }
        let mut v = 1;
        for (p, e) in trial_divide_u64(n.unsigned_abs()) {
            if e % 2 == 1 {
                v *= p as i64;
            }
        }
        v * n.signum()
    }

    #[test]
    fn known_values() {
        assert_eq!(squarefree_i64(12), 3);
        assert_eq!(squarefree_i64(-50), -2);
        assert_eq!(squarefree_i64(1), 1);
        assert_eq!(squarefree_i64(-1), -1);
        assert_eq!(squarefree_i64(49), 1);
    }

    #[test]
    fn large_semiprime_is_split() {
        let p: BigUint = "46872705340663".parse().unwrap();
        let q: BigUint = "201412063969429".parse().unwrap();
        let n = &p * &q;
        let f = pollard_brent(&n, DEFAULT_RHO_BUDGET).expect("rho should split this");
        assert!(f == p || f == q);
    }

    #[test]
    fn wide_semiprime_is_split() {
        let p: BigUint = "14604051816919".parse().unwrap();
        let q: BigUint = "1044778939143922020140618039".parse().unwrap();
        let n = &p * &q;
        assert!(n.bits() > 127);
        let f = pollard_brent(&n, DEFAULT_RHO_BUDGET).expect("rho should split this");
        assert!(f == p || f == q);
    }

    #[test]
    fn montgomery_matches_bigint() {
        let n: BigUint = "340282366920938463463374607431768211297".parse().unwrap();
        let mt = Mont::<4>::new(&n);
        let r = BigUint::one() << 256usize;
        let rinv = r.modinv(&n).unwrap();
        let a: BigUint = "123456789012345678901234567890123456".parse().unwrap();
        let b: BigUint = "98765432109876543210987654321".parse().unwrap();
        let mut al = [0u64; 4];
        let ad = a.to_u64_digits();
        al[..ad.len()].copy_from_slice(&ad);
        let mut bl = [0u64; 4];
        let bd = b.to_u64_digits();
        bl[..bd.len()].copy_from_slice(&bd);
        let got = Mont::<4>::to_big(&mt.mul(&al, &bl));
        assert_eq!(got, a * b * rinv % &n);
    }

    #[test]
    fn square_times_prime() {
        let p: BigInt = "1000000007".parse().unwrap();
        let q: BigInt = "998244353".parse().unwrap();
        let n = &p * &p * &q * BigInt::from(-12);
        let sf = squarefree_part(&n);
        assert!(sf.certified);
        assert_eq!(sf.value, -(q * BigInt::from(3)));
    }

    #[test]
    fn primality() {
        assert!(is_probable_prime(&BigUint::from(1_000_000_007u64)));
        assert!(!is_probable_prime(&BigUint::from(561u32)));
        let m61 = (BigUint::one() << 61usize) - 1u32;
        assert!(is_probable_prime(&m61));
        assert!(!is_probable_prime(&(&m61 * &m61)));
    }

    #[test]
    fn coprime_base_cancels_shared_pieces() {
        let a = BigUint::from(6u32);
        let b = BigUint::from(10u32);
        let mut got = coprime_base(vec![a, b]);
        got.sort();
        let want = vec![
            (BigUint::from(2u32), 2),
            (BigUint::from(3u32), 1),
            (BigUint::from(5u32), 1),
        ];
        assert_eq!(got, want);
    }

    proptest! {
        #[test]
        fn matches_trial_division(n in -2_000_000i64..2_000_000) {
            prop_assert_eq!(squarefree_i64(n), oracle(n));
        }

        #[test]
        fn square_factors_are_invisible(a in 1i64..5000, s in 1i64..3000) {
            prop_assert_eq!(squarefree_i64(a * s * s), squarefree_i64(a));
        }
    }
}
