//! Exact-arithmetic engine for variation of torus GIT quotients on projective
//! space.
//!
//! A torus `(C*)^n` acting on `P(V)` through an integer weight configuration
//! is pure combinatorics: a point of projective space is known to the torus
//! only through its state set (the support among the weights), and the
//! Hilbert–Mumford function is the signed distance from the normalized
//! linearization point to the state polytope. Everything downstream —
//! semistability, the G-ample cone, its wall-and-chamber-and-cell structure,
//! the Kirwan/Hesselink stratification of the unstable locus, and the flip
//! data attached to crossing a wall — reduces to exact rational convex
//! geometry, which is what this crate implements. No floating point is used
//! anywhere; distances are carried as `(sign, squared magnitude)` pairs so
//! that every classification is an exact rational decision.
//!
//! Module map:
//!
//! - [`exactgeom`]: the rational convex-geometry kernel (LP feasibility,
//!   closest point on a polytope, signed distances, hyperplane-arrangement
//!   face enumeration with exact witness points);
//! - [`gitcore`]: state sets, μ and M, stability classification, the G-ample
//!   cone, walls/chambers/cells, GIT-equivalence signatures and the
//!   stratification of unstable points;
//! - [`vgit`]: wall crossings — relevant chamber pairs across a cell and the
//!   weighted-projective flip data with its dimension identity;
//! - [`pointconfig`]: weighted point configurations on `P^n`, the
//!   hypersimplex wall system, and the Gelfand–MacPherson cross-check against
//!   the torus engine on Plücker weights.

pub mod exactgeom;
pub mod gitcore;
pub mod pointconfig;
pub mod vgit;

mod error;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
