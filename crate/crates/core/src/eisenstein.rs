//! Exact arithmetic in ℤ[ω], the ring of Eisenstein integers, where
//! ω² + ω + 1 = 0.
//!
//! An element is stored as `a + bω`. The multiplicative norm is
//! `N(a + bω) = a² − ab + b²`, which is also the quadratic form whose
//! representations this module computes. The ring is Euclidean under the
//! norm, so gcds exist; its units are ±1, ±ω, ±ω², and every nonzero
//! element has a unique *canonical associate* in the sextant `a > b ≥ 0`.
//!
//! Primes of ℤ[ω] come in three kinds: the ramified prime of norm 3
//! ([`LAMBDA`]); the rational primes 2 and q ≡ −1 (mod 6), which stay
//! prime (norm q²); and conjugate pairs of norm p for each rational prime
//! p ≡ 1 (mod 6). [`factor`] splits any nonzero element into those kinds.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::intarith;
use crate::{Error, Result};

/// An Eisenstein integer `a + bω` with ω a primitive cube root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Eisenstein {
    /// Coefficient of 1.
    pub a: i64,
    /// Coefficient of ω.
    pub b: i64,
}

/// Zero.
pub const ZERO: Eisenstein = Eisenstein { a: 0, b: 0 };
/// One.
pub const ONE: Eisenstein = Eisenstein { a: 1, b: 0 };
/// ω itself.
pub const OMEGA: Eisenstein = Eisenstein { a: 0, b: 1 };
/// The ramified prime of norm 3, as its canonical associate 2 + ω
/// (an associate of 1 + 2ω).
pub const LAMBDA: Eisenstein = Eisenstein { a: 2, b: 1 };
/// The six units ±1, ±ω, ±ω² (ω² = −1 − ω).
pub const UNITS: [Eisenstein; 6] = [
    Eisenstein { a: 1, b: 0 },
    Eisenstein { a: 0, b: 1 },
    Eisenstein { a: -1, b: -1 },
    Eisenstein { a: -1, b: 0 },
    Eisenstein { a: 0, b: -1 },
    Eisenstein { a: 1, b: 1 },
];

impl Eisenstein {
    pub const fn new(a: i64, b: i64) -> Self {
        Eisenstein { a, b }
    }

    /// Embeds a rational integer as `n + 0ω`.
    pub const fn from_int(n: i64) -> Self {
        Eisenstein { a: n, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self == ZERO
    }

    /// Whether this element is one of the six units.
    pub fn is_unit(self) -> bool {
        self.norm128() == 1
    }

    /// The norm `a² − ab + b²`, checked against the supported range.
    pub fn norm(self) -> Result<i64> {
        intarith::narrow(self.norm128())
    }

    /// The norm as a wide integer; never overflows for in-range operands.
    pub fn norm128(self) -> i128 {
        let (a, b) = (self.a as i128, self.b as i128);
        a * a - a * b + b * b
    }

    /// Complex conjugate: `a + bω ↦ (a − b) − bω`.
    pub fn conj(self) -> Self {
        Eisenstein::new(self.a - self.b, -self.b)
    }

    /// Multiplication by ω: `(a, b) ↦ (−b, a − b)`.
    pub fn mul_omega(self) -> Self {
        Eisenstein::new(-self.b, self.a - self.b)
    }

    /// The canonical associate and the unit that produces it.
    ///
    /// Among the six associates `u·z` of a nonzero `z`, exactly one lies in
    /// the sextant `a > b ≥ 0` (the complex sector of arguments in
    /// [0°, 60°)); that associate is returned together with its `u`, so
    /// `canonical = u · z`. Zero maps to itself with unit 1.
    pub fn canonical_associate(self) -> (Eisenstein, Eisenstein) {
        if self.is_zero() {
            return (ZERO, ONE);
        }
        let mut found = None;
        for u in UNITS {
            let w = u * self;
            if w.a > w.b && w.b >= 0 {
                debug_assert!(found.is_none(), "canonical sextant must be unique");
                found = Some((w, u));
            }
        }
        found.expect("one of the six associates lies in the canonical sextant")
    }
}

impl Add for Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: Eisenstein) -> Eisenstein {
        Eisenstein::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: Eisenstein) -> Eisenstein {
        Eisenstein::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein::new(-self.a, -self.b)
    }
}

impl Mul for Eisenstein {
    type Output = Eisenstein;
    /// `(a + bω)(c + dω) = (ac − bd) + (ad + bc − bd)ω`, using ω² = −1 − ω.
    fn mul(self, rhs: Eisenstein) -> Eisenstein {
        let (a, b, c, d) = (self.a, self.b, rhs.a, rhs.b);
        Eisenstein::new(a * c - b * d, a * d + b * c - b * d)
    }
}

impl Mul<i64> for Eisenstein {
    type Output = Eisenstein;
    fn mul(self, k: i64) -> Eisenstein {
        Eisenstein::new(self.a * k, self.b * k)
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn omega_term(b: i64) -> String {
            match b {
                1 => "ω".to_string(),
                -1 => "-ω".to_string(),
                b => format!("{b}ω"),
            }
        }
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{}", omega_term(b)),
            (a, b) if b > 0 => write!(f, "{a} + {}", omega_term(b)),
            (a, b) => write!(f, "{a} - {}", omega_term(-b)),
        }
    }
}

/// `z1 · conj(z2)` with wide coefficients, the numerator of the exact
/// quotient `z1 / z2`.
fn mul_conj_wide(z1: Eisenstein, z2: Eisenstein) -> (i128, i128) {
    let (a, b) = (z1.a as i128, z1.b as i128);
    let (c, d) = (z2.a as i128, z2.b as i128);
    (a * c - a * d + b * d, b * c - a * d)
}

/// Exact division: `Some(z1 / z2)` when `z2` divides `z1`, else `None`.
pub fn try_div(z1: Eisenstein, z2: Eisenstein) -> Result<Option<Eisenstein>> {
    if z2.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let n = z2.norm128();
    let (x, y) = mul_conj_wide(z1, z2);
    if x % n == 0 && y % n == 0 {
        Ok(Some(Eisenstein::new(
            intarith::narrow(x / n)?,
            intarith::narrow(y / n)?,
        )))
    } else {
        Ok(None)
    }
}

/// Euclidean division: returns `(q, r)` with `z1 = q·z2 + r` and
/// `norm(r) ≤ ¾·norm(z2) < norm(z2)`.
pub fn div_rem(z1: Eisenstein, z2: Eisenstein) -> Result<(Eisenstein, Eisenstein)> {
    if z2.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let n = z2.norm128();
    let (x, y) = mul_conj_wide(z1, z2);
    // Round each rational coordinate of z1/z2 to the nearest integer.
    let round_div = |num: i128| (2 * num + n).div_euclid(2 * n);
    let q = Eisenstein::new(
        intarith::narrow(round_div(x))?,
        intarith::narrow(round_div(y))?,
    );
    let prod = q * z2;
    let r = Eisenstein::new(
        intarith::narrow(z1.a as i128 - prod.a as i128)?,
        intarith::narrow(z1.b as i128 - prod.b as i128)?,
    );
    debug_assert!(4 * r.norm128() <= 3 * n);
    Ok((q, r))
}

/// Greatest common divisor, normalized to the canonical associate.
///
/// Errors when both inputs are zero; `gcd(z, 0)` is the canonical
/// associate of `z`.
pub fn gcd(z1: Eisenstein, z2: Eisenstein) -> Result<Eisenstein> {
    if z1.is_zero() && z2.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let (mut x, mut y) = (z1, z2);
    while !y.is_zero() {
        let (_, r) = div_rem(x, y)?;
        (x, y) = (y, r);
    }
    Ok(x.canonical_associate().0)
}

/// A factorization `z = unit · ∏ primeᵉ` over ℤ[ω].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// One of the six units.
    pub unit: Eisenstein,
    /// Canonical-associate primes with exponents, sorted by
    /// (norm, a, b). Inert rational primes appear as themselves, `(p, 0)`.
    pub factors: Vec<(Eisenstein, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn product(&self) -> Eisenstein {
        let mut acc = self.unit;
        for &(p, e) in &self.factors {
            for _ in 0..e {
                acc = acc * p;
            }
        }
        acc
    }
}

/// Factors a nonzero Eisenstein integer into canonical primes.
///
/// The rational norm is factored first; each rational prime is then
/// resolved into its ℤ[ω] kind: 3 contributes powers of [`LAMBDA`], the
/// inert primes 2 and q ≡ −1 (mod 6) contribute themselves with half
/// their norm exponent, and each split prime p ≡ 1 (mod 6) is divided out
/// by trial against the two conjugate canonical primes of norm p.
pub fn factor(z: Eisenstein) -> Result<Factorization> {
    if z.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let nf = intarith::factorize(z.norm()?)?;
    let mut rem = z;
    let mut factors: Vec<(Eisenstein, u32)> = Vec::new();
    let divide_exact = |rem: &mut Eisenstein, p: Eisenstein, times: u32| -> Result<()> {
        for _ in 0..times {
            *rem = try_div(*rem, p)?.expect("prime exponent determined by the norm");
        }
        Ok(())
    };
    for &(p, e) in &nf.factors {
        if p == 3 {
            divide_exact(&mut rem, LAMBDA, e)?;
            factors.push((LAMBDA, e));
        } else if p % 6 == 1 {
            let rep = represent_norm(p)?.expect("primes ≡ 1 (mod 6) split in Z[ω]");
            let pi = rep.canonical_associate().0;
            let pi_bar = pi.conj().canonical_associate().0;
            let mut k = 0;
            while k < e {
                match try_div(rem, pi)? {
                    Some(q) => {
                        rem = q;
                        k += 1;
                    }
                    None => break,
                }
            }
            divide_exact(&mut rem, pi_bar, e - k)?;
            if k > 0 {
                factors.push((pi, k));
            }
            if e > k {
                factors.push((pi_bar, e - k));
            }
        } else {
            // 2 and primes ≡ −1 (mod 6) are inert: the norm exponent is even.
            divide_exact(&mut rem, Eisenstein::from_int(p), e / 2)?;
            factors.push((Eisenstein::from_int(p), e / 2));
        }
    }
    debug_assert!(rem.is_unit());
    factors.sort_by_key(|&(p, _)| (p.norm128(), p.a, p.b));
    Ok(Factorization { unit: rem, factors })
}

/// Finds a representation `M = a² − ab + b²`, or `None` when the form does
/// not represent `M` (equivalently, when some prime factor 2 or ≡ −1
/// (mod 6) occurs to an odd exponent).
///
/// Among all representations with `a ≥ 1, b ≥ 0` the one minimizing
/// `(a² + b², a, b)` is returned — the shortest such vector, with a
/// lexicographic tie-break. Zero maps to `(0, 0)`.
pub fn represent_norm(m: i64) -> Result<Option<Eisenstein>> {
    intarith::check_operand(m)?;
    if m < 0 {
        return Err(Error::Domain(format!(
            "the norm form only represents nonnegative integers, got {m}"
        )));
    }
    if m == 0 {
        return Ok(Some(ZERO));
    }
    // a² − ab + b² = M ⟺ (2b − a)² + 3a² = 4M: scan a, solve for b.
    let mut best: Option<((i64, i64, i64), Eisenstein)> = None;
    let mut a = 1;
    while 3 * a * a <= 4 * m {
        let rest = 4 * m - 3 * a * a;
        let s = rest.isqrt();
        if s * s == rest && (a + s) % 2 == 0 {
            for b in [(a + s) / 2, (a - s) / 2] {
                if b < 0 {
                    continue;
                }
                let z = Eisenstein::new(a, b);
                debug_assert_eq!(z.norm128(), m as i128);
                let key = (a * a + b * b, a, b);
                if best.as_ref().is_none_or(|(k, _)| key < *k) {
                    best = Some((key, z));
                }
            }
        }
        a += 1;
    }
    Ok(best.map(|(_, z)| z))
}

/// The norm-preserving shift `(a, b) ↦ (b − a, b)`; when `a` and `b` are
/// both odd it produces a representation with even first coordinate.
pub fn parity_shift(z: Eisenstein) -> Eisenstein {
    Eisenstein::new(z.b - z.a, z.b)
}
