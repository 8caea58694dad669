//! Rational rays in three dimensions and exact points of the rational unit
//! sphere.
//!
//! A rational ray is stored as its canonical integer representative: a
//! coprime triple whose first nonzero coordinate is positive. Two nonzero
//! integer vectors span the same ray iff they canonicalize to the same
//! [`PrimitiveVec3`], so rays can be hashed and deduplicated directly.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numerics::{gcd, perfect_square_root, Int, Rat};

/// Canonical coprime integer representative of a rational ray.
///
/// Ordering is lexicographic on `(x, y, z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitiveVec3 {
    x: Int,
    y: Int,
    z: Int,
}

impl PrimitiveVec3 {
    /// Canonicalizes an arbitrary nonzero triple.
    pub fn new(x: impl Into<Int>, y: impl Into<Int>, z: impl Into<Int>) -> Result<Self> {
        canonicalize(x.into(), y.into(), z.into())
    }

    /// Builds the ray without dividing out a common factor. The caller
    /// guarantees coprimality; only the sign is normalized.
    pub(crate) fn from_coprime(x: Int, y: Int, z: Int) -> (Self, bool) {
        let flip = first_nonzero_is_negative(&x, &y, &z);
        let v = if flip {
            PrimitiveVec3 {
                x: -x,
                y: -y,
                z: -z,
            }
        } else {
            PrimitiveVec3 { x, y, z }
        };
        debug_assert!(!first_nonzero_is_negative(&v.x, &v.y, &v.z));
        (v, flip)
    }

    pub fn x(&self) -> &Int {
        &self.x
    }

    pub fn y(&self) -> &Int {
        &self.y
    }

    pub fn z(&self) -> &Int {
        &self.z
    }

    pub fn coords(&self) -> [&Int; 3] {
        [&self.x, &self.y, &self.z]
    }

    /// Coordinates as machine integers, when they fit.
    pub fn to_i64(&self) -> Option<[i64; 3]> {
        Some([self.x.to_i64()?, self.y.to_i64()?, self.z.to_i64()?])
    }

    /// Largest absolute coordinate.
    pub fn height(&self) -> Int {
        self.coords()
            .into_iter()
            .map(|c| c.abs())
            .max()
            .expect("three coordinates")
    }

    pub fn squared_length(&self) -> Int {
        &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    /// The same ray with the opposite orientation. Not canonical.
    pub fn negated_coords(&self) -> [Int; 3] {
        [-&self.x, -&self.y, -&self.z]
    }
}

impl fmt::Display for PrimitiveVec3 {
    /// Ray text format: `x y z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.x, self.y, self.z)
    }
}

fn first_nonzero_is_negative(x: &Int, y: &Int, z: &Int) -> bool {
    [x, y, z]
        .into_iter()
        .find(|c| !c.is_zero())
        .is_some_and(|c| c.is_negative())
}

/// Divides out the gcd and applies the sign rule (first nonzero coordinate
/// positive).
pub fn canonicalize(x: Int, y: Int, z: Int) -> Result<PrimitiveVec3> {
    let g = gcd(&gcd(&x, &y), &z);
    if g.is_zero() {
        return Err(Error::NotARay);
    }
    let (v, _) = if g.is_one() {
        PrimitiveVec3::from_coprime(x, y, z)
    } else {
        PrimitiveVec3::from_coprime(x / &g, y / &g, z / &g)
    };
    Ok(v)
}

/// `Some(n)` with `x² + y² + z² = n²` when the ray meets the rational unit
/// sphere.
pub fn pythagorean_norm(v: &PrimitiveVec3) -> Option<Int> {
    perfect_square_root(&v.squared_length()).expect("sum of squares is nonnegative")
}

pub fn dot(u: &PrimitiveVec3, v: &PrimitiveVec3) -> Int {
    &u.x * &v.x + &u.y * &v.y + &u.z * &v.z
}

pub(crate) fn cross_raw(u: &PrimitiveVec3, v: &PrimitiveVec3) -> [Int; 3] {
    [
        &u.y * &v.z - &u.z * &v.y,
        &u.z * &v.x - &u.x * &v.z,
        &u.x * &v.y - &u.y * &v.x,
    ]
}

/// Canonical ray orthogonal to both inputs.
pub fn cross(u: &PrimitiveVec3, v: &PrimitiveVec3) -> Result<PrimitiveVec3> {
    let [x, y, z] = cross_raw(u, v);
    canonicalize(x, y, z).map_err(|_| Error::Collinear)
}

/// Exact point of S² ∩ Q³, stored as a canonical ray plus its integer norm.
///
/// Represents `(x/n, y/n, z/n)` for the canonical orientation of the ray.
/// Exactly one coordinate of the ray is odd.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpherePoint {
    ray: PrimitiveVec3,
    norm: Int,
}

impl SpherePoint {
    pub fn new(ray: PrimitiveVec3) -> Result<Self> {
        let norm = pythagorean_norm(&ray).ok_or(Error::NotOnSphere)?;
        Ok(SpherePoint { ray, norm })
    }

    /// Trusts the norm after an exact check; used where the norm is already
    /// known from construction.
    pub(crate) fn with_norm(ray: PrimitiveVec3, norm: Int) -> Result<Self> {
        if norm.is_positive() && ray.squared_length() == &norm * &norm {
            Ok(SpherePoint { ray, norm })
        } else {
            Err(Error::NotOnSphere)
        }
    }

    pub fn ray(&self) -> &PrimitiveVec3 {
        &self.ray
    }

    pub fn norm(&self) -> &Int {
        &self.norm
    }

    pub fn unit_coordinates(&self) -> [Rat; 3] {
        self.ray
            .coords()
            .map(|c| Rat::new(c.clone(), self.norm.clone()))
    }
}

impl fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/{}", self.ray, self.norm)
    }
}

/// Rational point `(a, b, c)` with `a² + b² + c² = 1` to the point of its ray.
pub fn sphere_point_from_rational(a: &Rat, b: &Rat, c: &Rat) -> Result<SpherePoint> {
    let squared = a * a + b * b + c * c;
    if !squared.is_one() {
        return Err(Error::NotOnSphere);
    }
    let common = a.denom().lcm(b.denom()).lcm(c.denom());
    let scale = |r: &Rat| r.numer() * (&common / r.denom());
    let ray = canonicalize(scale(a), scale(b), scale(c))?;
    SpherePoint::new(ray)
}

/// A sphere point with orientation: `-ray/norm` when `antipodal` is set.
///
/// Canonical rays identify antipodes; orbits and angular gaps need the
/// actual direction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedPoint {
    point: SpherePoint,
    antipodal: bool,
}

impl OrientedPoint {
    pub fn new(point: SpherePoint, antipodal: bool) -> Self {
        OrientedPoint { point, antipodal }
    }

    /// Oriented point from integer coordinates `(x, y, z)/norm` with the
    /// orientation as given.
    pub fn from_coords(x: impl Into<Int>, y: impl Into<Int>, z: impl Into<Int>) -> Result<Self> {
        let (x, y, z) = (x.into(), y.into(), z.into());
        let antipodal = first_nonzero_is_negative(&x, &y, &z);
        let point = SpherePoint::new(canonicalize(x, y, z)?)?;
        Ok(OrientedPoint { point, antipodal })
    }

    pub fn point(&self) -> &SpherePoint {
        &self.point
    }

    pub fn into_point(self) -> SpherePoint {
        self.point
    }

    pub fn is_antipodal(&self) -> bool {
        self.antipodal
    }

    /// Integer numerators of the oriented point; the denominator is the norm.
    pub fn signed_coords(&self) -> [Int; 3] {
        if self.antipodal {
            self.point.ray.negated_coords()
        } else {
            self.point.ray.coords().map(Int::clone)
        }
    }

    pub fn unit_coordinates(&self) -> [Rat; 3] {
        self.signed_coords()
            .map(|c| Rat::new(c, self.point.norm.clone()))
    }

    /// Nearest floating point approximation of each coordinate. Works for
    /// numerators and norms far beyond the `f64` range.
    pub fn to_f64(&self) -> [f64; 3] {
        self.signed_coords().map(|c| {
            num_rational::Ratio::new_raw(c, self.point.norm.clone())
                .to_f64()
                .expect("ratio of integers converts to f64")
        })
    }
}

impl From<SpherePoint> for OrientedPoint {
    fn from(point: SpherePoint) -> Self {
        OrientedPoint::new(point, false)
    }
}

/// Parses the ray text format: one `x y z` triple per line separated by
/// single spaces, `#` comment lines and blank lines ignored. Rays are
/// canonicalized and duplicates collapse, keeping first-seen order.
pub fn parse_rays(text: &str) -> Result<Vec<PrimitiveVec3>> {
    let mut seen = std::collections::HashSet::new();
    let mut rays = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let trimmed = line.trim_end_matches('\r');
        if trimmed.trim().is_empty() || trimmed.trim_start().starts_with('#') {
            continue;
        }
        let ray = parse_triple(trimmed.split(' ').collect::<Vec<_>>().as_slice())
            .map_err(|msg| Error::parse(lineno, msg))?;
        if seen.insert(ray.clone()) {
            rays.push(ray);
        }
    }
    Ok(rays)
}

pub(crate) fn parse_triple(tokens: &[&str]) -> std::result::Result<PrimitiveVec3, String> {
    if tokens.len() != 3 {
        return Err(format!(
            "expected three integers separated by single spaces, found {} fields",
            tokens.len()
        ));
    }
    let mut coords = Vec::with_capacity(3);
    for tok in tokens {
        let v: Int = tok
            .parse()
            .map_err(|_| format!("not an integer: {tok:?}"))?;
        coords.push(v);
    }
    let z = coords.pop().unwrap();
    let y = coords.pop().unwrap();
    let x = coords.pop().unwrap();
    canonicalize(x, y, z).map_err(|e| e.to_string())
}

/// Writes rays in the ray text format, one per line.
pub fn format_rays<'a>(rays: impl IntoIterator<Item = &'a PrimitiveVec3>) -> String {
    let mut out = String::new();
    for r in rays {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}
