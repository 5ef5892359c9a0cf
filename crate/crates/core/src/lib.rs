//! Exact-arithmetic toolkit for the extremal rays of the cone of ternary
//! cubics that are nonnegative on the closed octant.
//!
//! The crate constructs the three named families of extremal cubics,
//! re-derives each as the one-dimensional kernel of its interpolation and
//! derivative constraint system, certifies nonnegativity on the octant by
//! exact decomposition identities and certified sign analysis of rational
//! curve parametrizations, classifies cubic singularities, counts boundary
//! zeros with their infinitely near structure, and verifies that the square
//! substitution `f(x,y,z) -> f(x^2,y^2,z^2)` sends extremal cubics to
//! extremal sextics (and the appendix quartic/quintic to extremal octics
//! and decics).
//!
//! Everything is exact: rationals everywhere, radical towers where zeros
//! have square-root coordinates. No floating point.

pub mod appendix;
pub mod certify;
pub mod classify;
pub mod error;
pub mod families;
pub mod geometry;
pub mod io;
pub mod lift;
pub mod linsys;
pub mod poly;
pub mod scalar;
pub mod test_support;
pub mod unipoly;

pub use error::Error;
pub use poly::{BinaryForm, Exp, Form, ProjPoint, Var};
pub use scalar::{Rat, Tower, TowerElem};
