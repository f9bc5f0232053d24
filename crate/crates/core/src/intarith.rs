//! Checked integer utilities: trial-division factorization, primality,
//! modular exponentiation and inverses, Legendre symbols, and square roots
//! of 3 modulo a prime.
//!
//! Everything here is exact. Entry points validate that operands stay
//! within [`MAX_OPERAND`] so that any product of two operands fits in
//! `i128` with a wide margin and trial division terminates quickly.

use crate::{Error, Result};

/// Largest absolute value accepted as an operand by the fallible entry
/// points across the crate (3·10¹²). Products of two such operands fit in
/// `i128` comfortably, and trial division up to `isqrt(MAX_OPERAND)`
/// (about 1.7·10⁶) stays fast.
pub const MAX_OPERAND: i64 = 3_000_000_000_000;

/// Ensures `x` is within the supported operand range.
pub fn check_operand(x: i64) -> Result<i64> {
    if x.abs() > MAX_OPERAND {
        Err(Error::Overflow)
    } else {
        Ok(x)
    }
}

/// Narrows an `i128` intermediate back to `i64`, failing loudly on overflow.
pub fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

/// Integer square root of a nonnegative number (floor of the real root).
pub fn isqrt(n: i64) -> Result<i64> {
    if n < 0 {
        return Err(Error::Domain(format!("isqrt of negative number {n}")));
    }
    Ok(n.isqrt())
}

/// Whether `n` is a perfect square.
pub fn is_perfect_square(n: i64) -> bool {
    if n < 0 {
        return false;
    }
    let r = n.isqrt();
    r * r == n
}

/// `a·b mod m` for `m ≥ 1`, computed without overflow; result in `[0, m)`.
pub fn mul_mod(a: i64, b: i64, m: i64) -> i64 {
    ((a as i128 * b as i128).rem_euclid(m as i128)) as i64
}

/// A factorization of a positive integer into primes with multiplicity,
/// sorted by prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// The factored number.
    pub n: i64,
    /// `(prime, exponent)` pairs in increasing prime order.
    pub factors: Vec<(i64, u32)>,
}

impl Factorization {
    /// Product of the distinct prime factors (1 for n = 1).
    pub fn radical(&self) -> i64 {
        self.factors.iter().map(|&(p, _)| p).product()
    }

    /// Exponent of `p` in `n`; zero when `p` does not divide `n`.
    pub fn exponent_of(&self, p: i64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }
}

/// Factorizes `n ≥ 1` by trial division over 2, 3, and 6k ± 1.
pub fn factorize(n: i64) -> Result<Factorization> {
    check_operand(n)?;
    if n < 1 {
        return Err(Error::Domain(format!(
            "factorization requires a positive integer, got {n}"
        )));
    }
    let mut factors = Vec::new();
    let mut m = n;
    let mut push = |p: i64, m: &mut i64| {
        let mut e = 0u32;
        while *m % p == 0 {
            *m /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut m);
    push(3, &mut m);
    let mut p = 5;
    while p * p <= m {
        push(p, &mut m);
        push(p + 2, &mut m);
        p += 6;
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(Factorization { n, factors })
}

/// Primality by trial division. Intended for operands within
/// [`MAX_OPERAND`]; larger inputs are still answered correctly but slowly.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut p = 5;
    while p * p <= n {
        if n % p == 0 || n % (p + 2) == 0 {
            return false;
        }
        p += 6;
    }
    true
}

/// `base^exp mod m` for `m ≥ 1`; result in `[0, m)`.
pub fn pow_mod(base: i64, exp: u64, m: i64) -> Result<i64> {
    if m < 1 {
        return Err(Error::Domain(format!("modulus must be positive, got {m}")));
    }
    check_operand(m)?;
    let m128 = m as u128;
    let mut b = base.rem_euclid(m) as u128;
    let mut e = exp;
    let mut acc = 1 % m128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        e >>= 1;
    }
    Ok(acc as i64)
}

/// Inverse of `a` modulo `m ≥ 2`, in `[0, m)`; errors unless gcd(a, m) = 1.
pub fn inv_mod(a: i64, m: i64) -> Result<i64> {
    if m < 2 {
        return Err(Error::Domain(format!("modulus must be at least 2, got {m}")));
    }
    check_operand(m)?;
    let (mut r0, mut r1) = (m as i128, a.rem_euclid(m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return Err(Error::Domain(format!("{a} has no inverse modulo {m}")));
    }
    narrow(s0.rem_euclid(m as i128))
}

/// Legendre symbol `(a | p)` for an odd prime `p`: 0, 1, or −1.
pub fn legendre(a: i64, p: i64) -> Result<i8> {
    if p < 3 || p % 2 == 0 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let r = pow_mod(a, ((p - 1) / 2) as u64, p)?;
    Ok(if r == 0 {
        0
    } else if r == 1 {
        1
    } else {
        -1
    })
}

/// Both square roots of 3 modulo an odd prime `p`, returned as
/// `(r, p − r)` with `r < p − r`. Errors with [`Error::NotResidue`] when 3
/// is not a quadratic residue mod `p` (this includes `p = 3`).
pub fn sqrt3_mod(p: i64) -> Result<(i64, i64)> {
    if legendre(3, p)? != 1 {
        return Err(Error::NotResidue(p));
    }
    let r = if p % 4 == 3 {
        pow_mod(3, ((p + 1) / 4) as u64, p)?
    } else {
        tonelli_shanks(3, p)?
    };
    debug_assert_eq!(mul_mod(r, r, p), 3 % p);
    Ok((r.min(p - r), r.max(p - r)))
}

/// Tonelli–Shanks square root of the residue `n` modulo `p ≡ 1 (mod 4)`.
fn tonelli_shanks(n: i64, p: i64) -> Result<i64> {
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..)
        .find(|&z| legendre(z, p) == Ok(-1))
        .expect("every odd prime has a quadratic non-residue below it");
    let mut m = s;
    let mut c = pow_mod(z, q as u64, p)?;
    let mut t = pow_mod(n, q as u64, p)?;
    let mut r = pow_mod(n, ((q + 1) / 2) as u64, p)?;
    while t != 1 {
        let mut i = 0u32;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1u64 << (m - i - 1), p)?;
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Ok(r)
}
