//! Enumeration of rational sphere rays, orbits under exact rational
//! rotations, and closure of ray sets under the cross product.

use std::collections::{BTreeSet, HashSet};
use std::f64::consts::PI;

use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numerics::{gcd, gcd_with_small, Int, Rat};
use crate::rays::{cross_raw, pythagorean_norm, OrientedPoint, PrimitiveVec3, SpherePoint};

/// All canonical rays meeting the rational unit sphere with norm at most
/// `max_norm`, sorted lexicographically.
///
/// Brute force: every point of the cube `|x|, |y|, |z| <= max_norm` is tested
/// with an exact square check (symmetry reduces the scan to the nonnegative
/// octant).
pub fn enumerate_sphere_rays(max_norm: u64) -> Result<Vec<SpherePoint>> {
    if max_norm == 0 {
        return Err(Error::InvalidArgument("max_norm must be at least 1".into()));
    }
    let limit = u128::from(max_norm) * u128::from(max_norm);
    let mut rays = BTreeSet::new();
    for x in 0..=max_norm {
        let xx = u128::from(x) * u128::from(x);
        for y in 0..=max_norm {
            let xy = xx + u128::from(y) * u128::from(y);
            if xy > limit {
                break;
            }
            for z in 0..=max_norm {
                let sq = xy + u128::from(z) * u128::from(z);
                if sq > limit {
                    break;
                }
                if sq == 0 {
                    continue;
                }
                let n = sq.sqrt();
                if n * n != sq || x.gcd(&y).gcd(&z) != 1 {
                    continue;
                }
                for (sx, sy, sz) in SIGNS {
                    let ray = PrimitiveVec3::new(sx * x as i128, sy * y as i128, sz * z as i128)
                        .expect("nonzero");
                    rays.insert(ray);
                }
            }
        }
    }
    rays.into_iter()
        .map(SpherePoint::new)
        .collect::<Result<Vec<_>>>()
}

const SIGNS: [(i128, i128, i128); 8] = [
    (1, 1, 1),
    (1, 1, -1),
    (1, -1, 1),
    (1, -1, -1),
    (-1, 1, 1),
    (-1, 1, -1),
    (-1, -1, 1),
    (-1, -1, -1),
];

/// Rational 3×3 rotation: `mᵀm = I` and `det m = 1`, both checked exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactRotation {
    m: [[Rat; 3]; 3],
    // m = scaled / denom with integer entries
    scaled: [[Int; 3]; 3],
    denom: Int,
}

impl ExactRotation {
    pub fn new(m: [[Rat; 3]; 3]) -> Result<Self> {
        for i in 0..3 {
            for j in 0..3 {
                let entry: Rat = (0..3).map(|k| &m[k][i] * &m[k][j]).sum();
                let want = if i == j { Rat::one() } else { Rat::zero() };
                if entry != want {
                    return Err(Error::NotRotation(format!(
                        "column product ({i},{j}) is {entry}"
                    )));
                }
            }
        }
        let det = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
        if !det.is_one() {
            return Err(Error::NotRotation(format!("determinant is {det}")));
        }
        let denom = m
            .iter()
            .flatten()
            .fold(Int::one(), |acc, r| acc.lcm(r.denom()));
        let scaled = m
            .clone()
            .map(|row| row.map(|r| r.numer() * (&denom / r.denom())));
        Ok(ExactRotation { m, scaled, denom })
    }

    pub fn identity() -> Self {
        let one = Rat::one;
        let zero = Rat::zero;
        ExactRotation::new([
            [one(), zero(), zero()],
            [zero(), one(), zero()],
            [zero(), zero(), one()],
        ])
        .expect("identity is a rotation")
    }

    pub fn matrix(&self) -> &[[Rat; 3]; 3] {
        &self.m
    }

    /// Least common denominator of the entries.
    pub fn denominator(&self) -> &Int {
        &self.denom
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &ExactRotation) -> ExactRotation {
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..3).map(|k| &self.m[i][k] * &other.m[k][j]).sum())
        });
        ExactRotation::new(m).expect("product of rotations is a rotation")
    }

    pub fn apply_rat(&self, v: &[Rat; 3]) -> [Rat; 3] {
        std::array::from_fn(|i| (0..3).map(|k| &self.m[i][k] * &v[k]).sum())
    }

    /// Exact image of an oriented sphere point.
    ///
    /// With `m = A/d` and `AᵀA = d²I`, any common factor of `A·v` divides
    /// `d²`, so the reduction only needs remainders by the short `d²`.
    pub fn apply(&self, p: &OrientedPoint) -> OrientedPoint {
        let v = p.signed_coords();
        let w: [Int; 3] = std::array::from_fn(|i| (0..3).map(|k| &self.scaled[i][k] * &v[k]).sum());
        let d2 = &self.denom * &self.denom;
        let g = w.iter().fold(d2.clone(), |g, c| {
            if g.is_one() {
                g
            } else {
                gcd_with_small(c, &g)
            }
        });
        let norm = &self.denom * p.point().norm();
        let (w, norm) = if g.is_one() {
            (w, norm)
        } else {
            (w.map(|c| c / &g), norm / &g)
        };
        let [x, y, z] = w;
        let (ray, flipped) = PrimitiveVec3::from_coprime(x, y, z);
        let point = SpherePoint::with_norm(ray, norm)
            .expect("rational rotation maps the rational sphere to itself");
        OrientedPoint::new(point, flipped)
    }
}

/// Rotation about the z-axis with `cos = c`, `sin = s`:
/// `[[c, s, 0], [-s, c, 0], [0, 0, 1]]`.
pub fn rotation_z(c: Rat, s: Rat) -> Result<ExactRotation> {
    if &c * &c + &s * &s != Rat::one() {
        return Err(Error::NotRotation(format!("{c}^2 + {s}^2 != 1")));
    }
    let zero = Rat::zero;
    ExactRotation::new([
        [c.clone(), s.clone(), zero()],
        [-s, c, zero()],
        [zero(), zero(), Rat::one()],
    ])
}

/// The rotation with `sin = 3/5`, `cos = 4/5`, an irrational multiple of π.
pub fn generator_f() -> ExactRotation {
    rotation_z(Rat::new(4.into(), 5.into()), Rat::new(3.into(), 5.into())).expect("3-4-5 rotation")
}

/// Square of [`generator_f`]: `cos = 7/25`, `sin = 24/25`. Preserves the
/// sphere colors of equator points.
pub fn generator_f2() -> ExactRotation {
    rotation_z(
        Rat::new(7.into(), 25.into()),
        Rat::new(24.into(), 25.into()),
    )
    .expect("7-24-25 rotation")
}

/// `[start, rot·start, rot²·start, …]`, `k` points in total.
pub fn orbit(rot: &ExactRotation, start: &OrientedPoint, k: usize) -> Vec<OrientedPoint> {
    let mut points = Vec::with_capacity(k);
    if k == 0 {
        return points;
    }
    points.push(start.clone());
    while points.len() < k {
        let next = rot.apply(points.last().expect("nonempty"));
        points.push(next);
    }
    points
}

/// Largest angular gap between circularly adjacent equator points, in
/// radians. Angles are computed in floating point from the exact
/// coordinates.
pub fn equator_gap(points: &[OrientedPoint]) -> Result<f64> {
    if points.len() < 2 {
        return Err(Error::InvalidArgument(
            "equator gap needs at least two points".into(),
        ));
    }
    let mut angles = Vec::with_capacity(points.len());
    for p in points {
        if !p.point().ray().z().is_zero() {
            return Err(Error::NotOnEquator);
        }
        let [x, y, _] = p.to_f64();
        angles.push(y.atan2(x));
    }
    angles.sort_by(f64::total_cmp);
    let wrap = angles[0] + 2.0 * PI - angles[angles.len() - 1];
    Ok(angles.windows(2).map(|w| w[1] - w[0]).fold(wrap, f64::max))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureStop {
    /// A full round added nothing.
    FixedPoint,
    RoundLimit,
    SizeLimit,
}

impl ClosureStop {
    pub fn name(self) -> &'static str {
        match self {
            ClosureStop::FixedPoint => "fixed-point",
            ClosureStop::RoundLimit => "round-limit",
            ClosureStop::SizeLimit => "size-limit",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    /// Every ray reached, seeds included, in lexicographic order.
    pub generated: BTreeSet<PrimitiveVec3>,
    /// Rounds started (the last one may be cut short by the size limit).
    pub rounds: usize,
    pub pythagorean_count: usize,
    pub non_pythagorean_count: usize,
    pub stop: ClosureStop,
}

pub const DEFAULT_CLOSURE_ROUNDS: usize = 6;
pub const DEFAULT_CLOSURE_SIZE: usize = 100_000;

/// Closes a ray set under cross products of non-collinear pairs.
///
/// Each round crosses every pair of the rays known at the start of the
/// round. Rays are ordered by height (largest absolute coordinate), then
/// lexicographically; pairs are visited in order of their larger member so
/// short rays combine first. The run stops at a fixed point, after
/// `max_rounds` rounds, or as soon as `max_size` rays are known.
pub fn cross_closure(
    seeds: &[PrimitiveVec3],
    max_rounds: usize,
    max_size: usize,
) -> Result<ClosureReport> {
    let mut known: HashSet<PrimitiveVec3> = seeds.iter().cloned().collect();
    if known.len() < 2 {
        return Err(Error::InvalidArgument(
            "closure needs at least two distinct seed rays".into(),
        ));
    }
    if max_size < known.len() {
        return Err(Error::InvalidArgument(format!(
            "max_size {max_size} is below the seed count {}",
            known.len()
        )));
    }
    let mut rounds = 0;
    let stop = loop {
        if known.len() >= max_size {
            break ClosureStop::SizeLimit;
        }
        if rounds == max_rounds {
            break ClosureStop::RoundLimit;
        }
        rounds += 1;
        let mut current: Vec<(Int, PrimitiveVec3)> =
            known.iter().map(|r| (r.height(), r.clone())).collect();
        current.sort();
        let before = known.len();
        let mut full = false;
        'pairs: for j in 1..current.len() {
            for i in 0..j {
                let [x, y, z] = cross_raw(&current[i].1, &current[j].1);
                let g = gcd(&gcd(&x, &y), &z);
                if g.is_zero() {
                    continue;
                }
                let (ray, _) = PrimitiveVec3::from_coprime(x / &g, y / &g, z / &g);
                if known.insert(ray) && known.len() >= max_size {
                    full = true;
                    break 'pairs;
                }
            }
        }
        if full {
            break ClosureStop::SizeLimit;
        }
        if known.len() == before {
            break ClosureStop::FixedPoint;
        }
    };
    let pythagorean_count = known
        .iter()
        .filter(|r| pythagorean_norm(r).is_some())
        .count();
    let non_pythagorean_count = known.len() - pythagorean_count;
    Ok(ClosureReport {
        generated: known.into_iter().collect(),
        rounds,
        pythagorean_count,
        non_pythagorean_count,
        stop,
    })
}

/// Whether `|n| = base^j` for some `j >= 0`.
pub fn is_power_of(n: &Int, base: u32) -> bool {
    let base = Int::from(base);
    let mut n = n.abs();
    if n.is_zero() {
        return false;
    }
    while !n.is_one() {
        let (q, r) = n.div_rem(&base);
        if !r.is_zero() {
            return false;
        }
        n = q;
    }
    true
}
