//! Equilateral lattice triangles and regular lattice tetrahedra built
//! from a quad by the quaternion sandwich map.
//!
//! For a nonzero quad q with norm N, the images of the two generator
//! vectors i − j and i − k under v ↦ q v q̄ span an equilateral triangle
//! {0, P, Q} with squared side 2N², lying in the plane whose normal is
//! the forward image of q. The image of −j − k always provides a lattice
//! apex completing a regular tetrahedron; the image of (4i + j + k)/3 is
//! a second apex candidate that is only sometimes a lattice point.

use crate::intarith::{check_operand, narrow};
use crate::param::{forward, Quad};
use crate::quaternion::{conjugate_vector, PureVector, Rational};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A point of ℤ³.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(pub [i64; 3]);

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl LatticePoint {
    /// Squared Euclidean length, exactly.
    pub fn norm_squared(&self) -> i128 {
        self.0.iter().map(|&v| i128::from(v) * i128::from(v)).sum()
    }

    pub fn cross(&self, other: &LatticePoint) -> [i128; 3] {
        let a = self.0.map(i128::from);
        let b = other.0.map(i128::from);
        [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    }
}

/// An equilateral lattice triangle {0, P, Q} with its exact squared side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeTriangle {
    #[serde(rename = "P")]
    pub p: LatticePoint,
    #[serde(rename = "Q")]
    pub q: LatticePoint,
    #[serde(rename = "sideSquared")]
    pub side_squared: i64,
}

/// A regular lattice tetrahedron {0, P, Q, R} with its squared side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeTetrahedron {
    #[serde(rename = "P")]
    pub p: LatticePoint,
    #[serde(rename = "Q")]
    pub q: LatticePoint,
    #[serde(rename = "R")]
    pub r: LatticePoint,
    #[serde(rename = "sideSquared")]
    pub side_squared: i64,
}

/// Output of [`tetrahedron`]: the guaranteed tetrahedron plus the status
/// of the second apex candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TetrahedronResult {
    pub tetra: LatticeTetrahedron,
    /// The second apex when it is a lattice point.
    pub alt_apex: Option<LatticePoint>,
    /// The second apex candidate with exact rational coordinates,
    /// whether or not it is integral.
    pub alt_apex_candidate: [Rational; 3],
}

fn integral_image(q: &Quad, v: PureVector) -> LatticePoint {
    let img = conjugate_vector(q.as_quaternion(), v);
    LatticePoint(
        img.integer_coords()
            .expect("the sandwich of an integer vector by an integer quad is integral"),
    )
}

/// The equilateral lattice triangle spanned by a nonzero quad, with
/// squared side 2N(q)².
pub fn triangle(q: &Quad) -> Result<LatticeTriangle> {
    if q.is_zero() {
        return Err(Error::Domain("the zero quad spans no triangle".into()));
    }
    let n = q.norm()?;
    let side_squared = narrow(2 * i128::from(n) * i128::from(n))?;
    check_operand(side_squared)?;
    Ok(LatticeTriangle {
        p: integral_image(q, PureVector::from_ints(1, -1, 0)),
        q: integral_image(q, PureVector::from_ints(1, 0, -1)),
        side_squared,
    })
}

/// The regular lattice tetrahedron over the triangle of `q`, plus the
/// second apex candidate (integral only for some quads).
pub fn tetrahedron(q: &Quad) -> Result<TetrahedronResult> {
    let tri = triangle(q)?;
    let r = integral_image(q, PureVector::from_ints(0, -1, -1));
    let third = Rational::new(1, 3);
    let cand = conjugate_vector(
        q.as_quaternion(),
        PureVector::new(Rational::new(4, 3), third, third),
    );
    Ok(TetrahedronResult {
        tetra: LatticeTetrahedron {
            p: tri.p,
            q: tri.q,
            r,
            side_squared: tri.side_squared,
        },
        alt_apex: cand.integer_coords().map(LatticePoint),
        alt_apex_candidate: [cand.x, cand.y, cand.z],
    })
}

/// Maps a triangle to another one in the same plane: P′ = mP − nQ,
/// Q′ = nP + (m − n)Q, scaling the squared side by m² − mn + n².
pub fn triangle_family(t: &LatticeTriangle, m: i64, n: i64) -> Result<LatticeTriangle> {
    if (m, n) == (0, 0) {
        return Err(Error::Domain(
            "the (0, 0) multiplier collapses the triangle to a point".into(),
        ));
    }
    check_operand(m)?;
    check_operand(n)?;
    let [m128, n128] = [i128::from(m), i128::from(n)];
    let mut p = [0i64; 3];
    let mut q = [0i64; 3];
    for i in 0..3 {
        p[i] = narrow(m128 * i128::from(t.p.0[i]) - n128 * i128::from(t.q.0[i]))?;
        q[i] = narrow(n128 * i128::from(t.p.0[i]) + (m128 - n128) * i128::from(t.q.0[i]))?;
    }
    let factor = m128 * m128 - m128 * n128 + n128 * n128;
    Ok(LatticeTriangle {
        p: LatticePoint(p),
        q: LatticePoint(q),
        side_squared: narrow(i128::from(t.side_squared) * factor)?,
    })
}

/// The six multiplier pairs of norm one, applied in a fixed order:
/// (1,0) is the identity and (−1,0) the point reflection.
pub fn basic_rotations(t: &LatticeTriangle) -> Result<[LatticeTriangle; 6]> {
    let pairs = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)];
    let mut out = [*t; 6];
    for (slot, (m, n)) in out.iter_mut().zip(pairs) {
        *slot = triangle_family(t, m, n)?;
    }
    Ok(out)
}

/// The triangle's plane normal P × Q is an exact integer multiple of the
/// raw forward image of the quad — exposed for diagnostics.
pub fn normal_alignment(q: &Quad) -> Result<([i128; 3], [i64; 3])> {
    let tri = triangle(q)?;
    let (raw, _) = forward(q)?;
    Ok((tri.p.cross(&tri.q), [raw.a, raw.b, raw.c]))
}
