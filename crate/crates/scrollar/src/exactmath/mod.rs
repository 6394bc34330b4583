//! Exact arithmetic: rationals, prime fields, univariate and bivariate
//! polynomials, sparse integer polynomials, resultants, discriminants and
//! lower convex hulls.

mod bivar;
mod disc;
mod field;
mod hull;
pub mod linalg;
mod multipoly;
mod poly;
mod ring;
pub mod serde_rational;

pub use bivar::{BivarHomog, Valuation};
pub use disc::{
    binary_to_upoly, boundary_discriminant_sides, discriminant_binary, discriminant_form, middle_square_exponents, universal_discriminant,
    universal_vars, MAX_UNIVERSAL_DEGREE,
};
pub use field::{
    abs_rat, dist2, floor_i64, is_integral, is_prime, parse_rational, rat, rat_int,
    rational_to_string, CoeffField, Rational, Scalar, DEFAULT_PRIME,
};
pub use hull::lower_convex_hull;
pub use multipoly::{MultiPoly, MAX_VARS};
pub use poly::{resultant, UPoly};
pub use ring::{bareiss_det, signed, Ring};

/// `t`-adic valuation of a univariate polynomial in `t`.
pub fn t_valuation_upoly<R: Ring>(p: &UPoly<R>) -> Valuation {
    match p.valuation() {
        Some(n) => Valuation::Finite(n),
        None => Valuation::Infinite,
    }
}
