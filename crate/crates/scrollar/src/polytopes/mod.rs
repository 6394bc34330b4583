//! Invariant regions as exact H-representations, lattice enumeration, and
//! obstruction certificates.

mod certificate;
mod profile;
mod region;

pub use certificate::{imprimitivity_certificate, CertificateKind, DerivationStep, ObstructionCertificate};
pub use profile::{
    accept_all, concave_realizable, is_concave, lattice_points, nondecreasing_compositions,
    square_condition, ConcaveWitness, ScrollarProfile,
};
pub use region::{
    fin_points, polytope_p, polytope_q2_q3, polytope_q4, polytope_q4prime, LinearInequality,
    RationalPolytope, Relation,
};
