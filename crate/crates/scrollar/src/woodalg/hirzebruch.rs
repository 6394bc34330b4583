use std::collections::BTreeMap;

use rand::Rng;

use super::table::StructureTable;
use crate::error::{precondition, Error, Result};
use crate::exactmath::{
    discriminant_form, universal_vars, BivarHomog, CoeffField, MultiPoly, Ring,
};

/// `f = f_0 x^d + f_1 x^(d-1) y + ... + f_d y^d` on the Hirzebruch surface
/// `F_a`, in class `dD + kF`, with `deg f_i = k + i a`.
#[derive(Clone, Debug, PartialEq)]
pub struct HirzebruchForm {
    pub d: usize,
    pub a: i64,
    pub k: i64,
    f: Vec<BivarHomog>,
}

impl HirzebruchForm {
    pub fn new(a: i64, k: i64, f: Vec<BivarHomog>) -> Result<Self> {
        if f.len() < 3 {
            return Err(Error::DegreeOutOfRange { got: f.len().saturating_sub(1), min: 2, max: usize::MAX });
        }
        if a < 0 || k < 0 {
            return precondition("Hirzebruch parameter a and twist k must be nonnegative");
        }
        let d = f.len() - 1;
        let field = f[0].field();
        for (i, fi) in f.iter().enumerate() {
            if fi.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), fi.field().to_string()));
            }
            let want = k + i as i64 * a;
            if fi.degree() as i64 != want {
                return precondition(format!("deg f_{i} = {} but k + i a = {want}", fi.degree()));
            }
        }
        if f.iter().all(Ring::is_zero) {
            return precondition("all coefficients of the form vanish");
        }
        Ok(Self { d, a, k, f })
    }

    /// Uniform coefficients; `divisible[i]` copies of `t` are forced into
    /// `f_i` when given.
    pub fn random<R: Rng + ?Sized>(
        d: usize,
        a: i64,
        k: i64,
        field: CoeffField,
        t_divisible: Option<&[usize]>,
        rng: &mut R,
    ) -> Result<Self> {
        let mut f = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let deg = (k + i as i64 * a).max(0) as usize;
            let m = t_divisible.map_or(0, |v| v[i]);
            if m > deg {
                return precondition(format!("t^{m} cannot divide f_{i} of degree {deg}"));
            }
            let g = BivarHomog::random(field, deg - m, rng);
            f.push(g.mul_t_pow(m));
        }
        Self::new(a, k, f)
    }

    pub fn coeffs(&self) -> &[BivarHomog] {
        &self.f
    }

    pub fn field(&self) -> CoeffField {
        self.f[0].field()
    }

    /// `e_i = k + i a` for `i >= 1`, `e_0 = 0`.
    pub fn degrees(&self) -> Vec<i64> {
        let mut e = vec![0];
        e.extend((1..self.d).map(|i| self.k + i as i64 * self.a));
        e
    }

    pub fn discriminant(&self) -> BivarHomog {
        discriminant_form(&self.f).expect("one field, degree at least 2")
    }
}

/// Structure constants of the algebra of the binary form with coefficients
/// `f_0..f_d` (indices outside `0..=d` read as zero), for `1 <= i <= j`.
///
/// The four nonzero cases are mutually exclusive: `k <= i` and `k > j`
/// cannot both hold, the `k = 0` case is disjoint from the two `k >= 1`
/// ranges, and the unit row is handled by the table itself.
pub fn wood_constants<C: Ring>(f: &[C]) -> BTreeMap<(usize, usize, usize), C> {
    let d = f.len() - 1;
    let get = |m: i64| -> C {
        if (0..=d as i64).contains(&m) {
            f[m as usize].clone()
        } else {
            f[0].zero_like()
        }
    };
    let mut out = BTreeMap::new();
    for i in 1..d {
        for j in i..d {
            for k in 0..d {
                let (ii, jj, kk) = (i as i64, j as i64, k as i64);
                let c = if k >= 1 && (ii + jj - d as i64).max(1) <= kk && k <= i {
                    get(ii + jj - kk).neg()
                } else if j < k {
                    get(ii + jj - kk)
                } else if k == 0 && i + j >= d {
                    get(ii + jj - d as i64).mul(&f[d]).neg()
                } else {
                    continue;
                };
                if !c.is_zero() {
                    out.insert((i, j, k), c);
                }
            }
        }
    }
    out
}

/// Algebra of the curve `f = 0` on `F_a`, with `x_i` of degree `k + i a`.
pub fn wood_table(form: &HirzebruchForm) -> StructureTable<BivarHomog> {
    let one = BivarHomog::constant(form.field().one());
    StructureTable::new(form.degrees(), one, wood_constants(form.coeffs()))
        .expect("indices produced in range")
}

/// Table over `Z[F0..Fd]` with the coefficients as indeterminates; degrees
/// are recorded as `e_i = i`.
pub fn universal_wood_table(d: usize) -> Result<StructureTable<MultiPoly>> {
    if d < 2 {
        return Err(Error::DegreeOutOfRange { got: d, min: 2, max: usize::MAX });
    }
    let names = universal_vars(d);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let gens = MultiPoly::gens(&refs)?;
    let one = gens[0].one_like();
    StructureTable::new((0..d as i64).collect(), one, wood_constants(&gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::woodalg::check_associativity;

    #[test]
    fn quadratic_case_split() {
        let t = universal_wood_table(2).unwrap();
        let g = MultiPoly::gens(&["F0", "F1", "F2"]).unwrap();
        assert_eq!(t.constant(1, 1, 1), g[1].neg());
        assert_eq!(t.constant(1, 1, 0), g[0].mul(&g[2]).neg());
        assert_eq!(t.constant(0, 1, 1), g[0].one_like());
    }

    #[test]
    fn universal_tables_associative() {
        for d in 2..=5 {
            assert!(check_associativity(&universal_wood_table(d).unwrap()).associative, "d={d}");
        }
    }
}
