use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::hirzebruch::{wood_table, HirzebruchForm};
use super::table::StructureTable;
use crate::error::{precondition, Error, Result};
use crate::exactmath::{BivarHomog, CoeffField, Rational, Ring, Scalar};

/// Basis change `x_i -> t^{-c_i} x_i`: constants become
/// `g_{ijk} t^{c_k - c_i - c_j}`, which stays polynomial iff
/// `v_t(g_{ijk}) >= c_i + c_j - c_k`.
pub fn rescale(t: &StructureTable<BivarHomog>, c: &[i64]) -> Result<StructureTable<BivarHomog>> {
    let field = t.field();
    rescale_at(t, &BivarHomog::linear(field.zero(), field.one()), c)
}

/// [`rescale`] along an arbitrary linear form `ell` in place of `t`.
pub fn rescale_at(
    t: &StructureTable<BivarHomog>,
    ell: &BivarHomog,
    c: &[i64],
) -> Result<StructureTable<BivarHomog>> {
    let d = t.rank();
    if c.len() != d {
        return Err(Error::Arity { expected: d, got: c.len() });
    }
    if c[0] != 0 {
        return precondition("rescaling must fix x_0 (c_0 = 0)");
    }
    if ell.degree() != 1 || ell.is_zero() {
        return precondition("rescaling needs a nonzero linear form");
    }
    let is_t = ell.coeff(0).is_zero();
    let mut constants = BTreeMap::new();
    for (&(i, j, k), g) in t.stored() {
        let shift = c[i] + c[j] - c[k];
        let new = if shift >= 0 {
            let divided = if is_t {
                g.div_t_pow(shift as usize)
            } else {
                div_pow(g, ell, shift as usize)
            };
            divided.ok_or_else(|| {
                let have = if is_t {
                    g.t_valuation().finite().expect("stored constants are nonzero")
                } else {
                    g.multiplicity(ell).expect("stored constants are nonzero")
                };
                Error::Closure { i, j, k, deficit: shift - have as i64 }
            })?
        } else {
            g.mul(&ell.pow((-shift) as u32))
        };
        constants.insert((i, j, k), new);
    }
    let degrees = t.degrees().iter().zip(c).map(|(e, ci)| e - ci).collect();
    StructureTable::new(degrees, t.one().clone(), constants)
}

fn div_pow(g: &BivarHomog, ell: &BivarHomog, n: usize) -> Option<BivarHomog> {
    let mut cur = g.clone();
    for _ in 0..n {
        cur = cur.div_exact(ell)?;
    }
    Some(cur)
}

/// Determinant of the trace form, a form of degree `2 sum e_i`.
pub fn algebra_discriminant(t: &StructureTable<BivarHomog>) -> BivarHomog {
    t.trace_discriminant()
}

const MAX_CACHED_DEGREE: usize = 16;

/// The constant `u_d` with `algebra_discriminant(wood_table(F)) =
/// u_d * Disc(F)`, fixed once per degree from the split form
/// `x (x - y) (x - 2y) ... (x - (d-1) y)` over the rationals.
pub fn discriminant_unit(d: usize) -> Result<Rational> {
    static CACHE: [OnceLock<Rational>; MAX_CACHED_DEGREE + 1] = [const { OnceLock::new() }; MAX_CACHED_DEGREE + 1];
    if !(2..=MAX_CACHED_DEGREE).contains(&d) {
        return Err(Error::DegreeOutOfRange { got: d, min: 2, max: MAX_CACHED_DEGREE });
    }
    Ok(CACHE[d].get_or_init(|| split_form_unit(d)).clone())
}

fn split_form_unit(d: usize) -> Rational {
    let field = CoeffField::Rationals;
    // Coefficients of prod_{r=0}^{d-1} (x - r y), as constants (a = k = 0).
    let mut poly = vec![field.one()];
    for r in 0..d as i64 {
        let mut next = vec![field.zero(); poly.len() + 1];
        for (m, c) in poly.iter().enumerate() {
            next[m] = next[m].add(c);
            next[m + 1] = next[m + 1].sub(&c.mul(&field.from_int(r)));
        }
        poly = next;
    }
    let f: Vec<BivarHomog> = poly.into_iter().map(BivarHomog::constant).collect();
    let form = HirzebruchForm::new(0, 0, f).expect("split form is valid");
    let alg = algebra_discriminant(&wood_table(&form));
    let disc = form.discriminant();
    let ratio = alg.coeff(0).div_exact(disc.coeff(0)).expect("split form is separable");
    match ratio {
        Scalar::Q(r) => r,
        Scalar::Fp { .. } => unreachable!("computed over the rationals"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat_int;

    #[test]
    fn units_are_one() {
        for d in 2..=6 {
            assert_eq!(discriminant_unit(d).unwrap(), rat_int(1), "d={d}");
        }
    }
}
