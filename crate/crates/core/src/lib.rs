//! Exact computations for irreducible plane curve singularities.
//!
//! * [`poly`]: sparse bivariate polynomials over `Q` and their parser.
//! * [`local`]: colengths at the origin, Milnor and Tjurina numbers,
//!   intersection multiplicities, tangent cones and strict transforms.
//! * [`saito`]: Saito bases of logarithmic 1-forms, cofactors, indices and
//!   the blow-up formula for `mu - tau`.
//! * [`topology`]: characteristic exponents, resolution chains, the minimal
//!   Tjurina number of a topological class and the Dimca-Greuel bound.

pub mod linalg;
pub mod local;
pub mod poly;
pub mod saito;
pub mod topology;

pub use poly::{parse_poly, Poly, Rational, UniPoly, Valuation};
