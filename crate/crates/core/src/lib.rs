//! Exact colorings of rational rays and of the rational unit sphere.
//!
//! The crate works with rays through the origin spanned by integer vectors,
//! always in exact arithmetic:
//!
//! - [`numerics`]: unbounded integers, reduced fractions, square tests.
//! - [`rays`]: canonical coprime representatives, sphere points, dot and
//!   cross products, the ray text format.
//! - [`coloring`]: projective colorings mod `p`, the seven parity classes,
//!   the three-coloring of the rational sphere and its reductions, and the
//!   octant four-coloring of the real sphere.
//! - [`enumeration`]: exhaustive lists of sphere rays, orbits under exact
//!   rational rotations, and cross-product closures.
//! - [`ks_graph`]: orthogonality graphs with a valuation solver and a
//!   chromatic solver.
//!
//! ```
//! use ratsphere::coloring::{sphere_color, SphereColor};
//! use ratsphere::rays::{PrimitiveVec3, SpherePoint};
//!
//! let p = SpherePoint::new(PrimitiveVec3::new(-4, 3, 0)?)?;
//! assert_eq!(p.norm(), &5.into());
//! assert_eq!(sphere_color(&p), SphereColor::Two);
//! # Ok::<(), ratsphere::Error>(())
//! ```

pub mod coloring;
pub mod enumeration;
mod error;
pub mod ks_graph;
pub mod numerics;
pub mod rays;

pub use error::{Error, Result};
