//! Primitive two-square decompositions, the ℤ[i] side of the sieve.
//!
//! Only one question is asked of the Gaussian integers here: given `M`,
//! list every way to write `M = B² + C²` with `0 < B ≤ C` and
//! `gcd(B, C) = 1`. The answer is assembled multiplicatively — factor `M`
//! over ℤ, lift each split rational prime `p ≡ 1 (mod 4)` to a Gaussian
//! prime `π`, and recombine — rather than by scanning up to `√M`.

use crate::intarith;
use crate::{Error, Result};

/// A Gaussian integer used transiently during recombination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct G {
    re: i64,
    im: i64,
}

impl G {
    fn mul(self, rhs: G) -> G {
        G {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }

    fn conj(self) -> G {
        G {
            re: self.re,
            im: -self.im,
        }
    }

    fn pow(self, e: u32) -> G {
        let mut acc = G { re: 1, im: 0 };
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// A Gaussian prime above the rational prime `p ≡ 1 (mod 4)`, found by
/// scanning `x ≤ √(p/2)` for `p − x²` a perfect square.
fn gaussian_prime_above(p: i64) -> G {
    let mut x = 1;
    while 2 * x * x <= p {
        let rest = p - x * x;
        let y = rest.isqrt();
        if y * y == rest {
            return G { re: x, im: y };
        }
        x += 1;
    }
    unreachable!("every prime ≡ 1 (mod 4) is a sum of two squares")
}

/// All primitive decompositions `m = B² + C²` with `0 < B ≤ C` and
/// `gcd(B, C) = 1`, sorted lexicographically.
///
/// The list is empty exactly when `4 | m`, when some prime ≡ 3 (mod 4)
/// divides `m`, or when `m = 1` (whose only decomposition has a zero
/// part).
pub fn two_square_decompositions(m: i64) -> Result<Vec<(i64, i64)>> {
    intarith::check_operand(m)?;
    if m < 1 {
        return Err(Error::Domain(format!(
            "two-square decomposition requires a positive integer, got {m}"
        )));
    }
    let f = intarith::factorize(m)?;
    if f.exponent_of(2) >= 2 {
        return Ok(vec![]);
    }
    let mut split: Vec<(i64, u32)> = Vec::new();
    for &(p, e) in &f.factors {
        if p == 2 {
            continue;
        }
        if p % 4 == 3 {
            return Ok(vec![]);
        }
        split.push((p, e));
    }
    // For a primitive representation each split prime contributes either
    // π^e or π̄^e wholesale: mixing conjugates introduces a rational factor
    // and breaks gcd(B, C) = 1. The factor of 2, when present, contributes
    // the ramified 1 + i.
    let prime_powers: Vec<(G, G)> = split
        .iter()
        .map(|&(p, e)| {
            let pi = gaussian_prime_above(p);
            (pi.pow(e), pi.conj().pow(e))
        })
        .collect();
    let base = if f.exponent_of(2) == 1 {
        G { re: 1, im: 1 }
    } else {
        G { re: 1, im: 0 }
    };
    let mut reps = std::collections::BTreeSet::new();
    for mask in 0u32..1 << prime_powers.len() {
        let mut z = base;
        for (i, &(pe, pe_conj)) in prime_powers.iter().enumerate() {
            z = z.mul(if mask >> i & 1 == 0 { pe } else { pe_conj });
        }
        let (b, c) = (z.re.abs().min(z.im.abs()), z.re.abs().max(z.im.abs()));
        if b > 0 {
            debug_assert_eq!(b * b + c * c, m);
            debug_assert_eq!(num_integer::gcd(b, c), 1);
            reps.insert((b, c));
        }
    }
    Ok(reps.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_decompositions() {
        assert_eq!(
            two_square_decompositions(1586).unwrap(),
            vec![(19, 35), (25, 31)]
        );
        assert_eq!(two_square_decompositions(2).unwrap(), vec![(1, 1)]);
        assert_eq!(two_square_decompositions(242).unwrap(), vec![]);
        assert_eq!(two_square_decompositions(25).unwrap(), vec![(3, 4)]);
        assert_eq!(two_square_decompositions(65).unwrap(), vec![(1, 8), (4, 7)]);
    }

    #[test]
    fn empties() {
        // 4 | m.
        assert_eq!(two_square_decompositions(4).unwrap(), vec![]);
        assert_eq!(two_square_decompositions(100).unwrap(), vec![]);
        // A prime ≡ 3 (mod 4) divides m.
        assert_eq!(two_square_decompositions(21).unwrap(), vec![]);
        // The only decomposition of 1 has a zero part.
        assert_eq!(two_square_decompositions(1).unwrap(), vec![]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(two_square_decompositions(0).is_err());
        assert!(two_square_decompositions(-9).is_err());
        assert_eq!(
            two_square_decompositions(intarith::MAX_OPERAND + 1),
            Err(Error::Overflow)
        );
    }

    /// Brute-force double loop, the oracle for the recombination path.
    fn brute(m: i64) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        let mut b = 1;
        while 2 * b * b <= m {
            let rest = m - b * b;
            let c = rest.isqrt();
            if c * c == rest && num_integer::gcd(b, c) == 1 {
                out.push((b, c));
            }
            b += 1;
        }
        out
    }

    #[test]
    fn matches_brute_force() {
        for m in 1..=3000 {
            assert_eq!(
                two_square_decompositions(m).unwrap(),
                brute(m),
                "mismatch at m = {m}"
            );
        }
        // A few larger spot checks across the branch structure.
        for m in [99_990, 99_998, 100_000, 64_090, 81_770] {
            assert_eq!(two_square_decompositions(m).unwrap(), brute(m));
        }
    }

    #[test]
    fn emptiness_matches_factorization_criterion() {
        for m in 2..=3000 {
            let f = intarith::factorize(m).unwrap();
            let criterion_empty =
                f.exponent_of(2) >= 2 || f.factors.iter().any(|&(p, _)| p % 4 == 3);
            let actual_empty = two_square_decompositions(m).unwrap().is_empty();
            assert_eq!(criterion_empty, actual_empty, "criterion mismatch at m = {m}");
        }
    }
}
