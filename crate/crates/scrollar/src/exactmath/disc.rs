use super::bivar::BivarHomog;
use super::field::Scalar;
use super::multipoly::MultiPoly;
use super::poly::{resultant, UPoly};
use super::ring::{signed, Ring};
use crate::error::{Error, Result};

/// Largest degree for which the universal discriminant is expanded.
pub const MAX_UNIVERSAL_DEGREE: usize = 6;

/// Discriminant of the binary form `sum f_i x^(d-i) y^i`, `d = len - 1 >= 2`.
///
/// Normalized as `(-1)^(d(d-1)/2) Res(f(x,1), f'(x,1)) / f_0`, so that
/// `d = 2` gives `f1^2 - 4 f0 f2`. When `f_0 = 0` the value is continued
/// through `Disc(0, f_1, ..., f_d) = f_1^2 Disc(f_1, ..., f_d)`, which is the
/// identity `Disc(y g) = Disc(g) Res(y, g)^2` written out.
pub fn discriminant_binary<R: Ring>(coeffs: &[R]) -> Result<R> {
    if coeffs.len() < 3 {
        return Err(Error::DegreeOutOfRange {
            got: coeffs.len().saturating_sub(1),
            min: 2,
            max: usize::MAX,
        });
    }
    let anchor = &coeffs[0];
    if let Some(bad) = coeffs.iter().find(|c| !c.same_domain(anchor)) {
        return Err(Error::FieldMismatch(anchor.domain_label(), bad.domain_label()));
    }
    Ok(disc_unchecked(coeffs))
}

fn disc_unchecked<R: Ring>(coeffs: &[R]) -> R {
    let d = coeffs.len() - 1;
    if d <= 1 {
        return coeffs[0].one_like();
    }
    if coeffs[0].is_zero() {
        let f1 = &coeffs[1];
        return f1.mul(f1).mul(&disc_unchecked(&coeffs[1..]));
    }
    let f = binary_to_upoly(coeffs);
    let res = resultant(&f, &f.derivative()).expect("coefficients share one domain");
    let q = res
        .div_exact(&coeffs[0])
        .expect("leading coefficient divides Res(f, f')");
    signed(q, (d * (d - 1) / 2) % 2 == 1)
}

/// Discriminant of a binary form whose coefficients are forms in `(s, t)`
/// with `deg f_i` affine in `i`. The result is a form of degree
/// `2 sum_{i=1}^{d-1} deg f_i`, recovered by interpolating scalar
/// discriminants along `s = 1`; falls back to symbolic elimination when the
/// field is too small for that.
pub fn discriminant_form(f: &[BivarHomog]) -> Result<BivarHomog> {
    if f.len() < 3 {
        return Err(Error::DegreeOutOfRange { got: f.len().saturating_sub(1), min: 2, max: usize::MAX });
    }
    let field = f[0].field();
    if let Some(bad) = f.iter().find(|g| g.field() != field) {
        return Err(Error::FieldMismatch(field.to_string(), bad.field().to_string()));
    }
    let d = f.len() - 1;
    let step = f[1].degree() as i64 - f[0].degree() as i64;
    let affine = f.iter().enumerate().all(|(i, g)| g.degree() as i64 == f[0].degree() as i64 + i as i64 * step);
    let total: usize = 2 * f[1..d].iter().map(BivarHomog::degree).sum::<usize>();
    let enough_points = field.size().map_or(true, |q| q > total as u64 + 1);
    if !affine || !enough_points {
        return discriminant_binary(f);
    }
    let one = field.one();
    let xs: Vec<Scalar> = (0..=total as i64).map(|x| field.from_int(x)).collect();
    let ys: Vec<Scalar> = xs
        .iter()
        .map(|x| {
            let vals: Vec<Scalar> = f.iter().map(|g| g.eval(&one, x)).collect();
            disc_unchecked(&vals)
        })
        .collect();
    Ok(BivarHomog::from_coeffs(interpolate(&xs, ys)))
}

/// Coefficients (constant term first) of the polynomial through
/// `(xs[i], ys[i])`, by divided differences.
fn interpolate(xs: &[Scalar], mut dd: Vec<Scalar>) -> Vec<Scalar> {
    let n = xs.len();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = dd[i].sub(&dd[i - 1]);
            let den = xs[i].sub(&xs[i - level]);
            dd[i] = num.div_exact(&den).expect("nodes are distinct");
        }
    }
    // Horner on the Newton form.
    let zero = xs[0].zero_like();
    let mut poly = vec![zero.clone(); n];
    for i in (0..n).rev() {
        // poly <- poly * (x - xs[i]) + dd[i]
        let mut next = vec![zero.clone(); n];
        for m in 0..n {
            if poly[m].is_zero() {
                continue;
            }
            if m + 1 < n {
                next[m + 1] = next[m + 1].add(&poly[m]);
            }
            next[m] = next[m].sub(&poly[m].mul(&xs[i]));
        }
        next[0] = next[0].add(&dd[i]);
        poly = next;
    }
    poly
}

/// `f(x, 1)` as a univariate polynomial of declared degree `d`.
pub fn binary_to_upoly<R: Ring>(coeffs: &[R]) -> UPoly<R> {
    UPoly::new(coeffs.iter().rev().cloned().collect())
}

/// Variable names `F0, ..., Fd` of the universal binary `d`-ic form.
pub fn universal_vars(d: usize) -> Vec<String> {
    (0..=d).map(|i| format!("F{i}")).collect()
}

/// Full expansion of `Disc(F)` for `F = F_0 x^d + ... + F_d y^d` over
/// `ZZ[F_0..F_d]`, computed as a resultant with exact division by `F_0`.
pub fn universal_discriminant(d: usize) -> Result<MultiPoly> {
    if !(2..=MAX_UNIVERSAL_DEGREE).contains(&d) {
        return Err(Error::DegreeOutOfRange {
            got: d,
            min: 2,
            max: MAX_UNIVERSAL_DEGREE,
        });
    }
    let names = universal_vars(d);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let gens = MultiPoly::gens(&refs)?;
    discriminant_binary(&gens)
}

/// Both sides of `Disc(0, F_1, ..., F_{d-1}, 0) = Disc(F_1, ..., F_{d-1})
/// F_1^2 F_{d-1}^2` in `ZZ[F_0..F_d]`, with the discriminant of a linear
/// form taken as 1. Supported for `3 <= d <= 6`.
pub fn boundary_discriminant_sides(d: usize) -> Result<(MultiPoly, MultiPoly)> {
    if !(3..=MAX_UNIVERSAL_DEGREE).contains(&d) {
        return Err(Error::DegreeOutOfRange { got: d, min: 3, max: MAX_UNIVERSAL_DEGREE });
    }
    let lhs = universal_discriminant(d)?.at_zero(0).at_zero(d);
    let names = universal_vars(d);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let gens = MultiPoly::gens(&refs)?;
    let inner = if d == 3 {
        gens[0].one_like()
    } else {
        // G_m = F_{m+1}.
        let map: Vec<usize> = (1..d).collect();
        universal_discriminant(d - 2)?.rename(&refs, &map)?
    };
    let rhs = inner.mul(&gens[1].pow(2)).mul(&gens[d - 1].pow(2));
    Ok((lhs, rhs))
}

/// Exponent vector of `F_1^2 ... F_(d-1)^2` in `ZZ[F_0..F_d]`.
pub fn middle_square_exponents(d: usize) -> Vec<u32> {
    (0..=d).map(|i| if i == 0 || i == d { 0 } else { 2 }).collect()
}
