//! Newton-polygon invariants of plane-curve singularities.
//!
//! Everything is exact: germs are sparse bivariate polynomials over
//! arbitrary-precision rationals, lattice geometry is integer arithmetic,
//! and Milnor numbers come from fraction-free linear algebra.
//!
//! The crate is organized around five questions about a germ `f` with
//! `f(0,0) = 0`:
//!
//! - [`newton`] — what does the Newton polygon of `f` look like, is it
//!   convenient, and what is the lattice bound `nu(f) = 2S - a - b + 1`?
//! - [`nondegen`] — is `f` Newton non-degenerate, how many branches does it
//!   have, and is it irreducible?
//! - [`oracle`] — what is the Milnor number of `f`, computed independently
//!   of all the polygon combinatorics?
//! - [`jump`] — what is the smallest nonzero drop of the Milnor number over
//!   non-degenerate deformations of `f`, and which monomial realizes it?
//! - [`conjectures`] — for `f = x^p - y^q`, what value should the true jump
//!   take, and does the prescribed deformation family actually realize it?
//!
//! Input syntax for germs and one-parameter families lives in [`poly`]
//! (variables `x`, `y`, optional parameter `s`, rational literals, `+ - * ^`
//! and parentheses, with juxtaposition as product).

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;

pub mod conjectures;
mod error;
pub mod jump;
pub mod newton;
pub mod nondegen;
pub mod oracle;
pub mod poly;

pub use error::{Error, Result};
pub use jump::{FamilyJump, JumpReport, SlopeDecomposition};
pub use newton::NewtonPolygon;
pub use nondegen::DegeneracyReport;
pub use oracle::{milnor, MilnorResult, MilnorStatus};
pub use poly::{parse, Exponent, GermPolynomial, ParamPolynomial};
