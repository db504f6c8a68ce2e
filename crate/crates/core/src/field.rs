//! Arithmetic in GF(q) for a prime q, plus the small number-theoretic
//! solvers the constructions need.
//!
//! Elements are plain `u32` least non-negative residues. The modulus is capped
//! at 2^20 so every product fits comfortably in a `u64`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported modulus.
pub const MAX_MODULUS: u32 = 1 << 20;

/// Element of a prime field, stored as its least non-negative residue.
pub type Elem = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    q: u32,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        if q > MAX_MODULUS as u64 {
            return Err(Error::ModulusTooLarge(q));
        }
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(PrimeField { q: q as u32 })
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn is_odd(&self) -> bool {
        self.q != 2
    }

    /// Reduces an arbitrary unsigned integer.
    #[inline]
    pub fn reduce(&self, x: u64) -> Elem {
        (x % self.q as u64) as Elem
    }

    /// Reduces a signed integer into `[0, q)`.
    #[inline]
    pub fn from_i64(&self, x: i64) -> Elem {
        x.rem_euclid(self.q as i64) as Elem
    }

    /// Checks that `x` already lies in `[0, q)`.
    pub fn check(&self, x: u64) -> Result<Elem> {
        if x < self.q as u64 {
            Ok(x as Elem)
        } else {
            Err(Error::EntryOutOfRange {
                value: x,
                q: self.q,
            })
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        ((a as u64 * b as u64) % self.q as u64) as Elem
    }

    pub fn pow(&self, base: Elem, mut exp: u64) -> Elem {
        let q = self.q as u64;
        let mut b = base as u64 % q;
        let mut acc = 1 % q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % q;
            }
            b = b * b % q;
            exp >>= 1;
        }
        acc as Elem
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a % self.q == 0 {
            None
        } else {
            Some(self.pow(a, self.q as u64 - 2))
        }
    }

    /// `-1` as a field element.
    #[inline]
    pub fn minus_one(&self) -> Elem {
        self.q - 1
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q
    }

    fn require_odd(&self) -> Result<()> {
        if self.is_odd() {
            Ok(())
        } else {
            Err(Error::EvenCharacteristic(self.q))
        }
    }

    /// `(q - 1) / 2`, the scalar of the weight-4 transvection.
    pub fn theta(&self) -> Result<Elem> {
        self.require_odd()?;
        Ok((self.q - 1) / 2)
    }

    /// Smallest `a` with `a^2 = -1`; exists iff `q = 1 (mod 4)`.
    pub fn sqrt_minus_one(&self) -> Result<Elem> {
        if self.q % 4 != 1 {
            return Err(Error::NoSquareRootOfMinusOne(self.q));
        }
        let target = self.minus_one();
        (1..self.q)
            .find(|&a| self.mul(a, a) == target)
            .ok_or(Error::NoSquareRootOfMinusOne(self.q))
    }

    /// Lexicographically smallest `(a, b)` with `a != 0` and `a^2 + b^2 = -1`.
    pub fn two_squares_minus_one(&self) -> Result<(Elem, Elem)> {
        self.require_odd()?;
        let q = self.q as u64;
        // index each square back to one of its roots
        let mut root_of = vec![u32::MAX; self.q as usize];
        for b in (0..self.q).rev() {
            root_of[self.mul(b, b) as usize] = b;
        }
        for a in 1..self.q {
            let rest = (2 * q - 1 - self.mul(a, a) as u64) % q;
            let b = root_of[rest as usize];
            if b != u32::MAX {
                return Ok((a, b));
            }
        }
        unreachable!("every odd prime field has a solution of a^2 + b^2 = -1")
    }

    /// Non-trivial `(a, b, c, d)` with `a^2 + b^2 + c^2 + d^2 = 0`, taken as
    /// `(alpha, beta, 1, 0)` from [`Self::two_squares_minus_one`].
    pub fn four_squares_zero(&self) -> Result<(Elem, Elem, Elem, Elem)> {
        let (a, b) = self.two_squares_minus_one()?;
        Ok((a, b, 1, 0))
    }

    /// Legendre symbol by Euler's criterion.
    pub fn legendre_symbol(&self, x: Elem) -> Result<i8> {
        self.require_odd()?;
        let x = x % self.q;
        if x == 0 {
            return Ok(0);
        }
        Ok(if self.pow(x, (self.q as u64 - 1) / 2) == 1 {
            1
        } else {
            -1
        })
    }

    /// Dot product of two equal-length vectors.
    pub fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        debug_assert_eq!(a.len(), b.len());
        let q = self.q as u64;
        let mut acc: u64 = 0;
        for (&x, &y) in a.iter().zip(b) {
            acc += x as u64 * y as u64;
            // q < 2^20 so 2^23 products fit before reducing
            if acc >= 1 << 62 {
                acc %= q;
            }
        }
        (acc % q) as Elem
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    fn odd_primes_below(limit: u64) -> impl Iterator<Item = u64> {
        (3..limit).filter(|&n| is_prime(n))
    }

    #[test]
    fn rejects_composites_and_huge() {
        assert!(matches!(PrimeField::new(1), Err(Error::NotPrime(1))));
        assert!(matches!(PrimeField::new(9), Err(Error::NotPrime(9))));
        assert!(matches!(
            PrimeField::new((1 << 20) + 7),
            Err(Error::ModulusTooLarge(_))
        ));
        assert_eq!(gf(2).q(), 2);
        assert_eq!(gf(1_048_573).q(), 1_048_573);
    }

    #[test]
    fn theta_examples() {
        assert_eq!(gf(3).theta().unwrap(), 1);
        assert_eq!(gf(5).theta().unwrap(), 2);
        assert_eq!(gf(13).theta().unwrap(), 6);
        assert!(matches!(gf(2).theta(), Err(Error::EvenCharacteristic(2))));
    }

    #[test]
    fn sqrt_minus_one_examples() {
        assert_eq!(gf(5).sqrt_minus_one().unwrap(), 2);
        assert_eq!(gf(13).sqrt_minus_one().unwrap(), 5);
        assert_eq!(gf(17).sqrt_minus_one().unwrap(), 4);
        assert!(matches!(
            gf(7).sqrt_minus_one(),
            Err(Error::NoSquareRootOfMinusOne(7))
        ));
        assert!(gf(3).sqrt_minus_one().is_err());
    }

    #[test]
    fn two_squares_examples() {
        assert_eq!(gf(3).two_squares_minus_one().unwrap(), (1, 1));
        assert_eq!(gf(7).two_squares_minus_one().unwrap(), (2, 3));
        assert_eq!(gf(11).two_squares_minus_one().unwrap(), (1, 3));
        assert_eq!(gf(5).two_squares_minus_one().unwrap(), (2, 0));
    }

    #[test]
    fn four_squares_examples() {
        assert_eq!(gf(7).four_squares_zero().unwrap(), (2, 3, 1, 0));
        assert_eq!(gf(3).four_squares_zero().unwrap(), (1, 1, 1, 0));
        assert_eq!(gf(5).four_squares_zero().unwrap(), (2, 0, 1, 0));
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(gf(5).legendre_symbol(4).unwrap(), 1);
        assert_eq!(gf(3).legendre_symbol(2).unwrap(), -1);
        assert_eq!(gf(7).legendre_symbol(0).unwrap(), 0);
    }

    #[test]
    fn inverses_up_to_101() {
        for q in (2..=101).filter(|&n| is_prime(n)) {
            let f = gf(q);
            assert_eq!(f.inv(0), None);
            for x in 1..f.q() {
                assert_eq!(f.mul(x, f.inv(x).unwrap()), 1, "q={q} x={x}");
            }
        }
    }

    #[test]
    fn sqrt_minus_one_up_to_10k() {
        for q in odd_primes_below(10_000).filter(|q| q % 4 == 1) {
            let f = gf(q);
            let a = f.sqrt_minus_one().unwrap();
            assert_eq!(f.add(f.mul(a, a), 1), 0, "q={q}");
        }
    }

    #[test]
    fn two_squares_up_to_10k() {
        for q in odd_primes_below(10_000) {
            let f = gf(q);
            let (a, b) = f.two_squares_minus_one().unwrap();
            assert_ne!(a, 0);
            assert_eq!(f.add(f.add(f.mul(a, a), f.mul(b, b)), 1), 0, "q={q}");
        }
    }

    #[test]
    fn squares_have_symbol_one() {
        for q in odd_primes_below(200) {
            let f = gf(q);
            for x in 1..f.q() {
                assert_eq!(f.legendre_symbol(f.mul(x, x)).unwrap(), 1);
            }
        }
    }

    #[test]
    fn signed_reduction() {
        let f = gf(7);
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.from_i64(-15), 6);
        assert_eq!(f.neg(0), 0);
        assert_eq!(f.sub(2, 5), 4);
        assert_eq!(f.dot(&[1, 2, 3], &[4, 5, 6]), 32 % 7);
    }
}
