//! Exact quaternion arithmetic over the rationals.
//!
//! The sandwich map v ↦ q v q̄ is how a quad acts on 3-space: it rotates and
//! scales pure vectors, and every lattice triangle and tetrahedron in
//! [`crate::geometry`] is its image. Components are `Ratio<i64>` so the
//! half-integer family multipliers and the 1/3-denominator tetrahedron apex
//! stay exact; nothing in this module rounds.

use num_rational::Ratio;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational scalar used throughout the quaternion layer.
pub type Rational = Ratio<i64>;

fn rat(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// A quaternion w + xi + yj + zk with rational components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { w, x, y, z }
    }

    /// Quaternion with integer components.
    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(rat(w), rat(x), rat(y), rat(z))
    }

    pub fn one() -> Self {
        Quaternion::from_ints(1, 0, 0, 0)
    }

    /// q̄ = w − xi − yj − zk.
    pub fn conjugate(self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    /// N(q) = w² + x² + y² + z². Multiplicative, and q q̄ = N(q).
    pub fn norm(self) -> Rational {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn is_pure(self) -> bool {
        self.w == rat(0)
    }

    /// The i, j, k components, dropping the scalar part.
    pub fn vector_part(self) -> PureVector {
        PureVector::new(self.x, self.y, self.z)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w + rhs.w,
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
        )
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w - rhs.w,
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
        )
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// Hamilton product (ij = k, jk = i, ki = j; anticommutative on i, j, k).
impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, r: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * r.w - self.x * r.x - self.y * r.y - self.z * r.z,
            self.w * r.x + self.x * r.w + self.y * r.z - self.z * r.y,
            self.w * r.y - self.x * r.z + self.y * r.w + self.z * r.x,
            self.w * r.z + self.x * r.y - self.y * r.x + self.z * r.w,
        )
    }
}

impl Mul<Rational> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: Rational) -> Quaternion {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.w, self.x, self.y, self.z)
    }
}

/// A quaternion with zero scalar part: xi + yj + zk, i.e. a point of 3-space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PureVector {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl PureVector {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        PureVector { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        PureVector::new(rat(x), rat(y), rat(z))
    }

    /// The vector i + j + k whose image under conjugation is the raw
    /// solution triple of the forward parametrization.
    pub fn ijk() -> Self {
        PureVector::from_ints(1, 1, 1)
    }

    pub fn as_quaternion(self) -> Quaternion {
        Quaternion::new(rat(0), self.x, self.y, self.z)
    }

    /// Whether all three components are integers.
    pub fn is_integral(self) -> bool {
        self.x.is_integer() && self.y.is_integer() && self.z.is_integer()
    }

    /// Integer coordinates, when [`Self::is_integral`] holds.
    pub fn integer_coords(self) -> Option<[i64; 3]> {
        if self.is_integral() {
            Some([self.x.to_integer(), self.y.to_integer(), self.z.to_integer()])
        } else {
            None
        }
    }
}

impl Add for PureVector {
    type Output = PureVector;
    fn add(self, rhs: PureVector) -> PureVector {
        PureVector::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for PureVector {
    type Output = PureVector;
    fn sub(self, rhs: PureVector) -> PureVector {
        PureVector::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for PureVector {
    type Output = PureVector;
    fn neg(self) -> PureVector {
        PureVector::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<Rational> for PureVector {
    type Output = PureVector;
    fn mul(self, s: Rational) -> PureVector {
        PureVector::new(self.x * s, self.y * s, self.z * s)
    }
}

/// The sandwich q v q̄. The result is always pure (asserted), and its norm
/// is N(q)² times the norm of `v`.
pub fn conjugate_vector(q: Quaternion, v: PureVector) -> PureVector {
    let s = q * v.as_quaternion() * q.conjugate();
    assert!(s.is_pure(), "sandwich of a pure vector must be pure");
    s.vector_part()
}

/// The multiplier m − n/2 + (n/2)(i + j + k) that maps a minimal triangle
/// to the (m, n) member of its family. Its norm is m² − mn + n².
pub fn family_multiplier(m: i64, n: i64) -> Quaternion {
    let half_n = Rational::new(n, 2);
    Quaternion::new(rat(m) - half_n, half_n, half_n, half_n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn basis() -> (Quaternion, Quaternion, Quaternion, Quaternion) {
        (
            Quaternion::one(),
            Quaternion::from_ints(0, 1, 0, 0),
            Quaternion::from_ints(0, 0, 1, 0),
            Quaternion::from_ints(0, 0, 0, 1),
        )
    }

    #[test]
    fn hamilton_table() {
        let (one, i, j, k) = basis();
        assert_eq!(i * j, k);
        assert_eq!(j * k, i);
        assert_eq!(k * i, j);
        assert_eq!(j * i, -k);
        assert_eq!(i * i, -one);
        assert_eq!(j * j, -one);
        assert_eq!(k * k, -one);
    }

    #[test]
    fn conjugate_and_norm() {
        let q = Quaternion::from_ints(1, -1, 0, -1);
        assert_eq!(q.norm(), rat(3));
        assert_eq!(q * q.conjugate(), Quaternion::from_ints(3, 0, 0, 0));
        let p = Quaternion::from_ints(2, 2, 1, 0);
        assert_eq!((p * q).norm(), p.norm() * q.norm());
    }

    #[test]
    fn conjugate_vector_examples() {
        let v = PureVector::ijk();
        assert_eq!(conjugate_vector(Quaternion::one(), v), v);
        assert_eq!(
            conjugate_vector(Quaternion::from_ints(1, -1, 0, -1), v),
            PureVector::from_ints(5, -1, 1)
        );
        // i(i+j+k)(−i) = i − j − k
        assert_eq!(
            conjugate_vector(Quaternion::from_ints(0, 1, 0, 0), v),
            PureVector::from_ints(1, -1, -1)
        );
    }

    #[test]
    fn family_multiplier_examples() {
        assert_eq!(family_multiplier(1, 0), Quaternion::one());
        let half = Rational::new(1, 2);
        assert_eq!(
            family_multiplier(1, 1),
            Quaternion::new(half, half, half, half)
        );
        assert_eq!(family_multiplier(1, 1).norm(), rat(1));
        assert_eq!(
            family_multiplier(2, 1),
            Quaternion::new(Rational::new(3, 2), half, half, half)
        );
        assert_eq!(family_multiplier(2, 1).norm(), rat(3));
    }

    #[test]
    fn multiplier_commutes_with_ijk() {
        let v = PureVector::ijk().as_quaternion();
        for m in -4..=4 {
            for n in -4..=4 {
                let mult = family_multiplier(m, n);
                assert_eq!(mult * v, v * mult, "m={m} n={n}");
            }
        }
    }

    fn random_quaternion(rng: &mut ChaCha8Rng, bound: i64) -> Quaternion {
        Quaternion::from_ints(
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
        )
    }

    #[test]
    fn norm_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6e6f726d);
        for _ in 0..10_000 {
            let a = random_quaternion(&mut rng, 100);
            let b = random_quaternion(&mut rng, 100);
            assert_eq!((a * b).norm(), a.norm() * b.norm());
        }
    }

    #[test]
    fn sandwich_is_linear_and_pure() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6c696e);
        for _ in 0..1_000 {
            let q = random_quaternion(&mut rng, 50);
            let v = random_quaternion(&mut rng, 50).vector_part();
            let w = random_quaternion(&mut rng, 50).vector_part();
            let s = rat(rng.gen_range(-9..=9));
            let left = conjugate_vector(q, v * s + w);
            let right = conjugate_vector(q, v) * s + conjugate_vector(q, w);
            assert_eq!(left, right);
        }
    }

    #[test]
    fn scaling_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x7363616c);
        let v = PureVector::ijk();
        for _ in 0..1_000 {
            let q = random_quaternion(&mut rng, 50);
            let (m, n) = loop {
                let m = rng.gen_range(-10..=10);
                let n = rng.gen_range(-10..=10);
                if (m, n) != (0, 0) {
                    break (m, n);
                }
            };
            let scaled = conjugate_vector(q * family_multiplier(m, n), v);
            let factor = rat(m * m - m * n + n * n);
            assert_eq!(scaled, conjugate_vector(q, v) * factor);
        }
    }
}
