//! Colorings of rational rays, of the rational unit sphere, and of the real
//! unit sphere.
//!
//! * [`mod_p_color`]: reduce a coprime integer vector mod a prime `p` and
//!   take its point of the projective space over `Z_p`.
//! * [`parity_class`]: the `p = 2`, `n = 3` case, labelled `OEE` … `OOO`.
//! * [`sphere_color`]: the three-coloring of S² ∩ Q³ by the odd coordinate.
//! * [`hales_straus_color`]: a three-coloring of all rational rays that
//!   merges parity classes and agrees with [`sphere_color`] on the sphere.
//! * [`reduced_two_color`]: the 0/1 valuation obtained by merging two of the
//!   three sphere colors.
//! * [`real_sphere_4color`]: the octant coloring of the real sphere.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numerics::{gcd, is_odd, Int};
use crate::rays::{PrimitiveVec3, SpherePoint};

/// A point of the projective space over `Z_p`: residues normalized so the
/// first nonzero residue is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectiveColor {
    p: u32,
    rep: Vec<u32>,
}

impl ProjectiveColor {
    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn residues(&self) -> &[u32] {
        &self.rep
    }

    /// The parity label for `p = 2` in three dimensions.
    pub fn parity_class(&self) -> Option<ParityClass> {
        match (self.p, self.rep.as_slice()) {
            (2, [x, y, z]) => ParityClass::from_bits(*x == 1, *y == 1, *z == 1),
            _ => None,
        }
    }
}

impl fmt::Display for ProjectiveColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, r) in self.rep.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d: &u32| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn inverse_mod(a: u32, p: u32) -> u32 {
    // p is prime and a is nonzero mod p, so a^(p-2) is the inverse.
    let (mut base, mut exp, mut acc) = (u64::from(a), p - 2, 1u64);
    let m = u64::from(p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u32
}

/// Color of the ray spanned by coprime integer coordinates, taken in the
/// projective space over `Z_p`.
pub fn mod_p_color(coords: &[Int], p: u32) -> Result<ProjectiveColor> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if coords.is_empty() {
        return Err(Error::InvalidArgument("empty coordinate list".into()));
    }
    let g = coords.iter().fold(Int::zero(), |g, c| gcd(&g, c));
    if !g.is_one() {
        let shown: Vec<String> = coords.iter().map(Int::to_string).collect();
        return Err(Error::NotCoprime(shown.join(" ")));
    }
    let modulus = Int::from(p);
    let residues: Vec<u32> = coords
        .iter()
        .map(|c| c.mod_floor(&modulus).to_u32().expect("residue below p"))
        .collect();
    let lead = *residues
        .iter()
        .find(|&&r| r != 0)
        .expect("coprime coordinates cannot all vanish mod p");
    let inv = u64::from(inverse_mod(lead, p));
    let rep = residues
        .into_iter()
        .map(|r| (u64::from(r) * inv % u64::from(p)) as u32)
        .collect();
    Ok(ProjectiveColor { p, rep })
}

/// Number of points of the projective space of dimension `n - 1` over `Z_p`,
/// i.e. `p^(n-1) + … + p + 1`.
pub fn color_count(p: u32, n: u32) -> Result<Int> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::InvalidArgument(
            "dimension must be at least 1".into(),
        ));
    }
    let p = Int::from(p);
    Ok((num_traits::pow(p.clone(), n as usize) - 1) / (p - 1))
}

/// Even/odd pattern of a coprime triple, indexed `#1` … `#7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParityClass {
    Oee,
    Eoe,
    Eeo,
    Ooe,
    Eoo,
    Oeo,
    Ooo,
}

impl ParityClass {
    pub const ALL: [ParityClass; 7] = [
        ParityClass::Oee,
        ParityClass::Eoe,
        ParityClass::Eeo,
        ParityClass::Ooe,
        ParityClass::Eoo,
        ParityClass::Oeo,
        ParityClass::Ooo,
    ];

    fn from_bits(x: bool, y: bool, z: bool) -> Option<Self> {
        use ParityClass::*;
        Some(match (x, y, z) {
            (true, false, false) => Oee,
            (false, true, false) => Eoe,
            (false, false, true) => Eeo,
            (true, true, false) => Ooe,
            (false, true, true) => Eoo,
            (true, false, true) => Oeo,
            (true, true, true) => Ooo,
            (false, false, false) => return None,
        })
    }

    /// Color index 1..=7.
    pub fn index(self) -> u8 {
        self as u8 + 1
    }

    pub fn label(self) -> &'static str {
        match self {
            ParityClass::Oee => "OEE",
            ParityClass::Eoe => "EOE",
            ParityClass::Eeo => "EEO",
            ParityClass::Ooe => "OOE",
            ParityClass::Eoo => "EOO",
            ParityClass::Oeo => "OEO",
            ParityClass::Ooo => "OOO",
        }
    }

    /// Which coordinates are odd, as `(x, y, z)`.
    pub fn odd_pattern(self) -> [bool; 3] {
        let l = self.label().as_bytes();
        [l[0] == b'O', l[1] == b'O', l[2] == b'O']
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub fn parity_class(v: &PrimitiveVec3) -> ParityClass {
    let [x, y, z] = v.coords();
    ParityClass::from_bits(is_odd(x), is_odd(y), is_odd(z))
        .expect("a coprime triple has an odd coordinate")
}

/// One of the three colors of the rational sphere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SphereColor {
    One,
    Two,
    Three,
}

impl SphereColor {
    pub const ALL: [SphereColor; 3] = [SphereColor::One, SphereColor::Two, SphereColor::Three];

    pub fn index(self) -> u8 {
        self as u8 + 1
    }

    fn of_axis(axis: Axis) -> Self {
        match axis {
            Axis::X => SphereColor::One,
            Axis::Y => SphereColor::Two,
            Axis::Z => SphereColor::Three,
        }
    }
}

impl fmt::Display for SphereColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.index())
    }
}

/// Color of a rational sphere point: `#1`, `#2` or `#3` as the odd
/// coordinate is `x`, `y` or `z`.
pub fn sphere_color(pt: &SpherePoint) -> SphereColor {
    let class = parity_class(pt.ray());
    match class {
        ParityClass::Oee => SphereColor::One,
        ParityClass::Eoe => SphereColor::Two,
        ParityClass::Eeo => SphereColor::Three,
        other => unreachable!("sphere ray {} has parity {other}", pt.ray()),
    }
}

/// Three-coloring of every rational ray: `#1` stays, `#4` merges into `#2`,
/// and `#5`, `#6`, `#7` merge into `#3`.
pub fn hales_straus_color(v: &PrimitiveVec3) -> SphereColor {
    match parity_class(v) {
        ParityClass::Oee => SphereColor::One,
        ParityClass::Eoe | ParityClass::Ooe => SphereColor::Two,
        ParityClass::Eeo | ParityClass::Eoo | ParityClass::Oeo | ParityClass::Ooo => {
            SphereColor::Three
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        })
    }
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" | "X" => Ok(Axis::X),
            "y" | "Y" => Ok(Axis::Y),
            "z" | "Z" => Ok(Axis::Z),
            _ => Err(Error::InvalidArgument(format!("unknown axis {s:?}"))),
        }
    }
}

/// Reduced two-coloring: `true` when the coordinate on `axis` is odd. Every
/// orthogonal tripod of sphere rays has exactly one `true` leg.
pub fn reduced_two_color(pt: &SpherePoint, axis: Axis) -> bool {
    sphere_color(pt) == SphereColor::of_axis(axis)
}

/// Colors of the four-coloring of the real unit sphere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RealColor {
    Red,
    White,
    Green,
    Blue,
}

impl RealColor {
    pub fn name(self) -> &'static str {
        match self {
            RealColor::Red => "red",
            RealColor::White => "white",
            RealColor::Green => "green",
            RealColor::Blue => "blue",
        }
    }
}

impl fmt::Display for RealColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Maps `phi` into `(-π, π]`. Values already in range are returned
/// unchanged, so `atan2` output is never rounded.
fn reduce_azimuth(phi: f64) -> f64 {
    if phi > -PI && phi <= PI {
        return phi;
    }
    let r = phi.rem_euclid(2.0 * PI);
    if r > PI {
        r - 2.0 * PI
    } else {
        r
    }
}

/// Azimuth of the antipode, in `(-π, π]` when `phi` is.
fn opposite_azimuth(phi: f64) -> f64 {
    if phi > 0.0 {
        phi - PI
    } else {
        phi + PI
    }
}

/// Octant four-coloring of the real unit sphere in spherical coordinates:
/// `theta` is the polar angle from the z-axis, `phi` the azimuth from the
/// x-axis.
///
/// The poles are red. In the upper hemisphere (including the equator where
/// the octant ranges reach it) the quadrants `[0, π/2)`, `[π/2, π]`,
/// `(π, 3π/2)` and `[-π/2, 0)` of `phi` are green, red, white and blue.
/// Every remaining point takes the color of its antipode.
pub fn real_sphere_4color(theta: f64, phi: f64) -> Result<RealColor> {
    if !theta.is_finite() || !phi.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "non-finite angle: theta={theta}, phi={phi}"
        )));
    }
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::InvalidArgument(format!(
            "theta={theta} outside [0, pi]"
        )));
    }
    Ok(octant_color(theta, phi))
}

fn octant_color(theta: f64, phi: f64) -> RealColor {
    if theta == 0.0 || theta == PI {
        return RealColor::Red;
    }
    let phi = reduce_azimuth(phi);
    if theta > FRAC_PI_2 {
        // PI - theta is exact for theta in (π/2, π)
        return octant_color(PI - theta, opposite_azimuth(phi));
    }
    // the quadrants [0, π/2), [π/2, π], (π, 3π/2) and [-π/2, 0) of the
    // octant rules, with (π, 3π/2) written as (-π, -π/2)
    let upper = theta < FRAC_PI_2;
    if (0.0..FRAC_PI_2).contains(&phi) {
        RealColor::Green
    } else if (-FRAC_PI_2..0.0).contains(&phi) {
        RealColor::Blue
    } else if upper && phi >= FRAC_PI_2 {
        RealColor::Red
    } else if upper {
        RealColor::White
    } else if opposite_azimuth(phi) < 0.0 {
        // equator point outside the green and blue ranges: use the antipode
        RealColor::Blue
    } else {
        RealColor::Green
    }
}

/// Spherical angles `(theta, phi)` of a nonzero real vector.
pub fn spherical_angles(v: [f64; 3]) -> (f64, f64) {
    let r = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    let theta = (v[2] / r).clamp(-1.0, 1.0).acos();
    let phi = v[1].atan2(v[0]);
    (theta, phi)
}

/// [`real_sphere_4color`] of the direction of `v`.
///
/// Classified from coordinate signs rather than angles, so vectors a few ulps
/// off an axis keep their side of the boundary.
pub fn real_color_of_vector(v: [f64; 3]) -> Result<RealColor> {
    if v.iter().any(|c| !c.is_finite()) || v.iter().all(|&c| c == 0.0) {
        return Err(Error::InvalidArgument(format!(
            "direction must be finite and nonzero, got {v:?}"
        )));
    }
    let [x, y, z] = v;
    if z < 0.0 {
        return real_color_of_vector([-x, -y, -z]);
    }
    if x == 0.0 && y == 0.0 {
        return Ok(RealColor::Red);
    }
    if x > 0.0 && y >= 0.0 {
        Ok(RealColor::Green)
    } else if x >= 0.0 && y < 0.0 {
        Ok(RealColor::Blue)
    } else if z == 0.0 {
        real_color_of_vector([-x, -y, 0.0])
    } else if y > 0.0 || (x < 0.0 && y == 0.0) {
        Ok(RealColor::Red)
    } else {
        Ok(RealColor::White)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn v(x: i64, y: i64, z: i64) -> PrimitiveVec3 {
        PrimitiveVec3::new(x, y, z).unwrap()
    }

    fn sp(x: i64, y: i64, z: i64) -> SpherePoint {
        SpherePoint::new(v(x, y, z)).unwrap()
    }

    fn ints(c: &[i64]) -> Vec<Int> {
        c.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn mod_p_examples() {
        let c = mod_p_color(&ints(&[1, 1, 0]), 2).unwrap();
        assert_eq!(c.residues(), &[1, 1, 0]);
        assert_eq!(c.parity_class(), Some(ParityClass::Ooe));
        assert_eq!(c.parity_class().unwrap().index(), 4);

        let c = mod_p_color(&ints(&[1, 0, 0]), 2).unwrap();
        assert_eq!(c.parity_class(), Some(ParityClass::Oee));
        assert_eq!(c.parity_class().unwrap().index(), 1);
    }

    #[test]
    fn mod_p_matches_scalar_sweep() {
        // (2,3,6) mod 5 is (2,3,1); find the multiple whose first entry is 1
        let raw = [2u32, 3, 1];
        let scaled = (1..5u32)
            .map(|k| raw.map(|r| r * k % 5))
            .find(|s| s[0] == 1)
            .unwrap();
        assert_eq!(scaled, [1, 4, 3]);
        let c = mod_p_color(&ints(&[2, 3, 6]), 5).unwrap();
        assert_eq!(c.residues(), &scaled);
        assert_eq!(c.to_string(), "(1,4,3)");
    }

    #[test]
    fn mod_p_rejects_bad_input() {
        assert_eq!(
            mod_p_color(&ints(&[2, 4, 6]), 3),
            Err(Error::NotCoprime("2 4 6".into()))
        );
        assert_eq!(mod_p_color(&ints(&[1, 0, 0]), 4), Err(Error::NotPrime(4)));
        assert!(mod_p_color(&[], 2).is_err());
    }

    #[test]
    fn antipodes_share_mod_p_color() {
        for p in [2, 3, 5, 7, 11] {
            for c in [[1i64, 2, 3], [5, -7, 9], [0, 1, -4]] {
                let neg = c.map(|x| -x);
                assert_eq!(
                    mod_p_color(&ints(&c), p).unwrap(),
                    mod_p_color(&ints(&neg), p).unwrap()
                );
            }
        }
    }

    #[test]
    fn color_count_examples() {
        assert_eq!(color_count(2, 3).unwrap(), Int::from(7));
        assert_eq!(color_count(3, 3).unwrap(), Int::from(13));
        assert_eq!(color_count(2, 1).unwrap(), Int::from(1));
        assert_eq!(color_count(5, 4).unwrap(), Int::from(156));
        assert!(color_count(6, 3).is_err());
    }

    #[test]
    fn mod_p_is_surjective_on_small_triples() {
        for p in [2u32, 3, 5, 7] {
            let b = p as i64;
            let mut seen = HashSet::new();
            for x in -b..=b {
                for y in -b..=b {
                    for z in -b..=b {
                        if let Ok(r) = PrimitiveVec3::new(x, y, z) {
                            let c: Vec<Int> = r.coords().into_iter().cloned().collect();
                            seen.insert(mod_p_color(&c, p).unwrap());
                        }
                    }
                }
            }
            assert_eq!(Int::from(seen.len()), color_count(p, 3).unwrap(), "p={p}");
        }
    }

    #[test]
    fn parity_class_examples() {
        assert_eq!(parity_class(&v(1, 1, 1)), ParityClass::Ooo);
        assert_eq!(parity_class(&v(1, 1, 1)).index(), 7);
        assert_eq!(parity_class(&v(3, 4, 0)), ParityClass::Oee);
        assert_eq!(parity_class(&v(0, 1, 0)), ParityClass::Eoe);
        let labels: Vec<_> = ParityClass::ALL
            .iter()
            .map(|c| (c.label(), c.index()))
            .collect();
        assert_eq!(
            labels,
            [
                ("OEE", 1),
                ("EOE", 2),
                ("EEO", 3),
                ("OOE", 4),
                ("EOO", 5),
                ("OEO", 6),
                ("OOO", 7)
            ]
        );
    }

    #[test]
    fn parity_class_agrees_with_mod_2_color() {
        for x in -4i64..=4 {
            for y in -4i64..=4 {
                for z in -4i64..=4 {
                    if let Ok(r) = PrimitiveVec3::new(x, y, z) {
                        let c: Vec<Int> = r.coords().into_iter().cloned().collect();
                        let m = mod_p_color(&c, 2).unwrap();
                        assert_eq!(m.parity_class(), Some(parity_class(&r)));
                    }
                }
            }
        }
    }

    #[test]
    fn sphere_color_examples() {
        assert_eq!(sphere_color(&sp(3, 4, 0)), SphereColor::One);
        assert_eq!(sphere_color(&sp(-4, 3, 0)), SphereColor::Two);
        assert_eq!(sphere_color(&sp(0, 0, 1)), SphereColor::Three);
        assert_eq!(SphereColor::Two.to_string(), "#2");
    }

    #[test]
    fn hales_straus_examples() {
        assert_eq!(hales_straus_color(&v(1, 1, 0)), SphereColor::Two);
        assert_eq!(hales_straus_color(&v(1, 1, 1)), SphereColor::Three);
        assert_eq!(hales_straus_color(&v(3, 4, 0)), SphereColor::One);
    }

    #[test]
    fn reduced_two_color_examples() {
        assert!(reduced_two_color(&sp(0, 0, 1), Axis::Z));
        assert!(!reduced_two_color(&sp(3, 4, 0), Axis::Z));
        assert!(reduced_two_color(&sp(3, 4, 0), Axis::X));
        assert!(!reduced_two_color(&sp(-4, 3, 0), Axis::X));
        assert!(reduced_two_color(&sp(-4, 3, 0), Axis::Y));
    }

    #[test]
    fn axis_parses() {
        assert_eq!("z".parse::<Axis>().unwrap(), Axis::Z);
        assert!("w".parse::<Axis>().is_err());
    }

    #[test]
    fn coplanar_rays_use_two_hales_straus_colors() {
        let pairs = [
            ([1i64, 0, 0], [0i64, 1, 0]),
            ([1, 1, 0], [0, 1, 1]),
            ([1, 2, 3], [3, -1, 2]),
            ([2, 3, 6], [1, 1, 1]),
            ([5, 0, -3], [4, 7, 1]),
        ];
        for (a, b) in pairs {
            let u = v(a[0], a[1], a[2]);
            let w = v(b[0], b[1], b[2]);
            for s in -5i64..=5 {
                for t in -5i64..=5 {
                    let Ok(c) = PrimitiveVec3::new(
                        s * a[0] + t * b[0],
                        s * a[1] + t * b[1],
                        s * a[2] + t * b[2],
                    ) else {
                        continue;
                    };
                    let colors: HashSet<_> =
                        [&u, &w, &c].into_iter().map(hales_straus_color).collect();
                    assert!(colors.len() <= 2, "{u} {w} {c}");
                }
            }
        }
    }

    #[test]
    fn real_color_axes() {
        assert_eq!(
            real_sphere_4color(FRAC_PI_2, 0.0).unwrap(),
            RealColor::Green
        );
        assert_eq!(
            real_sphere_4color(FRAC_PI_2, FRAC_PI_2).unwrap(),
            RealColor::Blue
        );
        assert_eq!(real_sphere_4color(0.0, 0.0).unwrap(), RealColor::Red);
        assert_eq!(real_sphere_4color(PI, 1.0).unwrap(), RealColor::Red);
        // negative axes inherit from their antipodes
        assert_eq!(real_sphere_4color(FRAC_PI_2, PI).unwrap(), RealColor::Green);
        assert_eq!(
            real_sphere_4color(FRAC_PI_2, -FRAC_PI_2).unwrap(),
            RealColor::Blue
        );
    }

    #[test]
    fn real_color_octants() {
        let q = PI / 4.0;
        assert_eq!(real_sphere_4color(q, q).unwrap(), RealColor::Green);
        assert_eq!(real_sphere_4color(q, 3.0 * q).unwrap(), RealColor::Red);
        assert_eq!(real_sphere_4color(q, 5.0 * q).unwrap(), RealColor::White);
        assert_eq!(real_sphere_4color(q, -q).unwrap(), RealColor::Blue);
        assert_eq!(real_sphere_4color(3.0 * q, q).unwrap(), RealColor::White);
        // phi outside the normalization range wraps
        assert_eq!(
            real_sphere_4color(q, q + 4.0 * PI).unwrap(),
            RealColor::Green
        );
        assert_eq!(real_sphere_4color(q, -7.0 * q).unwrap(), RealColor::Green);
    }

    #[test]
    fn real_color_rejects_bad_angles() {
        assert!(real_sphere_4color(f64::NAN, 0.0).is_err());
        assert!(real_sphere_4color(0.5, f64::INFINITY).is_err());
        assert!(real_sphere_4color(-0.1, 0.0).is_err());
        assert!(real_sphere_4color(4.0, 0.0).is_err());
    }

    #[test]
    fn azimuth_reduction_range() {
        for phi in [
            -10.0,
            -PI,
            -FRAC_PI_2,
            0.0,
            PI,
            3.0 * FRAC_PI_2,
            100.0,
            -1e-18,
        ] {
            let r = reduce_azimuth(phi);
            assert!(r > -PI && r <= PI, "{phi} -> {r}");
            let turns = (phi - r) / (2.0 * PI);
            assert!((turns - turns.round()).abs() < 1e-12, "{phi} -> {r}");
        }
        assert_eq!(reduce_azimuth(-FRAC_PI_2 - 1e-15), -FRAC_PI_2 - 1e-15);
    }

    #[test]
    fn vector_and_angle_classifications_agree() {
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
        };
        for _ in 0..20_000 {
            let v = [next(), next(), next()];
            let (theta, phi) = spherical_angles(v);
            assert_eq!(
                real_color_of_vector(v).unwrap(),
                real_sphere_4color(theta, phi).unwrap(),
                "{v:?}"
            );
        }
        for v in [
            [1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [-1.0, 0.0, 0.0],
            [0.0, -1.0, 0.0],
            [0.0, 0.0, -2.0],
            [1.0, 1.0, 0.0],
            [-1.0, 1.0, 1.0],
            [-1.0, 0.0, 1.0],
            [0.0, 1.0, 1.0],
        ] {
            let (theta, phi) = spherical_angles(v);
            assert_eq!(
                real_color_of_vector(v).unwrap(),
                real_sphere_4color(theta, phi).unwrap(),
                "{v:?}"
            );
        }
        assert!(real_color_of_vector([0.0; 3]).is_err());
        assert!(real_color_of_vector([f64::NAN, 1.0, 0.0]).is_err());
    }

    #[test]
    fn equator_points_next_to_the_negative_y_axis() {
        // just clockwise of -y: antipode just below +y, so green
        assert_eq!(
            real_color_of_vector([-1e-16, -1.0, 0.0]).unwrap(),
            RealColor::Green
        );
        assert_eq!(
            real_color_of_vector([1e-16, -1.0, 0.0]).unwrap(),
            RealColor::Blue
        );
        assert_eq!(
            real_color_of_vector([0.0, -1.0, 0.0]).unwrap(),
            RealColor::Blue
        );
    }

    #[test]
    fn vector_colors() {
        assert_eq!(
            real_color_of_vector([1.0, 0.0, 0.0]).unwrap(),
            RealColor::Green
        );
        assert_eq!(
            real_color_of_vector([0.0, 1.0, 0.0]).unwrap(),
            RealColor::Blue
        );
        assert_eq!(
            real_color_of_vector([0.0, 0.0, -2.0]).unwrap(),
            RealColor::Red
        );
        assert_eq!(
            real_color_of_vector([-1.0, -1.0, -1.0]).unwrap(),
            RealColor::Green
        );
    }
}
