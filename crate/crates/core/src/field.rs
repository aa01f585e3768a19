//! Arithmetic in the prime field used for exact character computations.

use num_integer::Integer;

use crate::error::{Error, Result};

/// Primes are searched up to this bound.
const PRIME_SEARCH_BOUND: u64 = 1 << 31;

/// The field `F_p` together with a fixed primitive `exponent`-th root of unity.
///
/// All character values of groups whose exponent divides `exponent` live here.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldContext {
    pub p: u64,
    pub exponent: usize,
    pub theta: u64,
}

impl FieldContext {
    /// Smallest prime `p ≡ 1 (mod exponent)` with `p > 2·group_order`.
    pub fn for_group(exponent: usize, group_order: usize) -> Result<Self> {
        let e = exponent.max(1) as u64;
        let lower = 2 * group_order as u64;
        let mut p = e + 1;
        // also keep p > 2 so that 2 is invertible
        while p <= lower.max(2) || !is_prime(p) {
            p += e;
            if p > PRIME_SEARCH_BOUND {
                return Err(Error::NoSuitablePrime {
                    exponent,
                    lower: lower as usize,
                });
            }
        }
        let theta = primitive_root_of_unity(p, e);
        Ok(FieldContext {
            p,
            exponent: e as usize,
            theta,
        })
    }

    /// Whether this context can hold the characters of a group of the given exponent.
    pub fn supports(&self, exponent: usize, group_order: usize) -> bool {
        self.exponent.is_multiple_of(exponent.max(1)) && self.p > 2 * group_order as u64
    }

    /// A primitive `e`-th root of unity compatible with `theta`.
    pub fn root_of_unity(&self, e: usize) -> u64 {
        assert!(
            self.exponent.is_multiple_of(e.max(1)),
            "order must divide the context exponent"
        );
        self.pow(self.theta, (self.exponent / e.max(1)) as u64)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p - 2)
    }

    /// Embeds a signed integer.
    pub fn from_int(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    /// Symmetric lift into `(-p/2, p/2]`.
    pub fn lift(&self, a: u64) -> i64 {
        let a = a % self.p;
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest-base element of exact multiplicative order `e` in `F_p`.
fn primitive_root_of_unity(p: u64, e: u64) -> u64 {
    let ctx = FieldContext {
        p,
        exponent: 1,
        theta: 1,
    };
    let factors = prime_factors(e);
    let cofactor = (p - 1) / e;
    for x in 2..p {
        let t = ctx.pow(x, cofactor);
        if factors.iter().all(|&q| ctx.pow(t, e / q) != 1) {
            return t;
        }
    }
    1
}

/// `lcm` of a sequence, `1` for empty input.
pub fn lcm_all(values: impl IntoIterator<Item = usize>) -> usize {
    values.into_iter().fold(1, |a, b| a.lcm(&b.max(1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_choice() {
        let ctx = FieldContext::for_group(6, 6).unwrap();
        assert_eq!(ctx.p % 6, 1);
        assert!(ctx.p > 12);
        assert!(is_prime(ctx.p));
        assert_eq!(ctx.pow(ctx.theta, 6), 1);
        assert_ne!(ctx.pow(ctx.theta, 3), 1);
        assert_ne!(ctx.pow(ctx.theta, 2), 1);
    }

    #[test]
    fn trivial_exponent() {
        let ctx = FieldContext::for_group(1, 1).unwrap();
        assert!(ctx.p > 2);
        assert_eq!(ctx.theta, 1);
    }

    #[test]
    fn lift_is_symmetric() {
        let ctx = FieldContext::for_group(4, 8).unwrap();
        assert_eq!(ctx.lift(ctx.from_int(-3)), -3);
        assert_eq!(ctx.lift(ctx.from_int(7)), 7);
        assert_eq!(ctx.mul(ctx.inv(5), 5), 1);
    }

    #[test]
    fn compatible_roots() {
        let ctx = FieldContext::for_group(12, 24).unwrap();
        let z4 = ctx.root_of_unity(4);
        assert_eq!(ctx.pow(z4, 4), 1);
        assert_eq!(ctx.pow(z4, 2), ctx.p - 1);
        assert_eq!(ctx.root_of_unity(12), ctx.theta);
    }
}
