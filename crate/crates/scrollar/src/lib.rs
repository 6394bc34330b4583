//! Scrollar invariants of degree-`d` covers of the projective line.
//!
//! Exact polytope membership and vertex enumeration for the invariant
//! regions, explicit algebra constructions on Hirzebruch surfaces with
//! independent verification (associativity, discriminant valuations, étale
//! fibers), obstruction certificates, and density evaluation.
//!
//! Everything is exact: rationals are [`Rational`], finite fields are prime
//! fields [`CoeffField::PrimeField`]. There is no floating point in the
//! library.

pub mod construct;
pub mod density;
pub mod error;
pub mod exactmath;
pub mod polytopes;
pub mod quartic;
pub mod rng;
pub mod woodalg;

pub use construct::{BuildOptions, ConstructionSpec, CoverReport, Verdict};
pub use density::{Convention, SplitBundle};
pub use error::{Error, Result};
pub use exactmath::{BivarHomog, CoeffField, MultiPoly, Rational, Scalar, Valuation};
pub use polytopes::{ObstructionCertificate, RationalPolytope, ScrollarProfile};
pub use quartic::{Quintuple, QuintupleClass};
pub use woodalg::{HirzebruchForm, StructureTable};
