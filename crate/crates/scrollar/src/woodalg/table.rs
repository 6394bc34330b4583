use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::exactmath::{bareiss_det, BivarHomog, CoeffField, Ring, Scalar};

/// Multiplication table of a rank-`d` commutative unital algebra with basis
/// `x_0 = 1, x_1, ..., x_{d-1}`, where `x_i` has degree `degrees[i]`.
///
/// Only `1 <= i <= j` is stored; the unit row is implicit and absent
/// entries are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureTable<C> {
    degrees: Vec<i64>,
    one: C,
    constants: BTreeMap<(usize, usize, usize), C>,
}

impl<C: Ring> StructureTable<C> {
    pub fn new(degrees: Vec<i64>, one: C, constants: BTreeMap<(usize, usize, usize), C>) -> Result<Self> {
        let d = degrees.len();
        if d == 0 || degrees[0] != 0 {
            return precondition("degree vector must start with e_0 = 0");
        }
        for &(i, j, k) in constants.keys() {
            if !(1 <= i && i <= j && j < d && k < d) {
                return precondition(format!("constant index ({i},{j},{k}) outside 1 <= i <= j < {d}, k < {d}"));
            }
        }
        let constants = constants.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Self { degrees, one, constants })
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn one(&self) -> &C {
        &self.one
    }

    /// Nonzero stored constants with `1 <= i <= j`.
    pub fn stored(&self) -> impl Iterator<Item = (&(usize, usize, usize), &C)> {
        self.constants.iter()
    }

    /// Coefficient of `x_k` in `x_i x_j`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> C {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        if i == 0 {
            return if j == k { self.one.clone() } else { self.one.zero_like() };
        }
        self.constants
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(|| self.one.zero_like())
    }

    /// Copy with one stored constant replaced.
    pub fn with_constant(&self, i: usize, j: usize, k: usize, c: C) -> Result<Self> {
        let mut constants = self.constants.clone();
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        constants.insert((i, j, k), c);
        Self::new(self.degrees.clone(), self.one.clone(), constants)
    }

    pub fn map<D: Ring>(&self, one: D, f: impl Fn(&C) -> D) -> StructureTable<D> {
        StructureTable {
            degrees: self.degrees.clone(),
            one,
            constants: self
                .constants
                .iter()
                .map(|(k, c)| (*k, f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// `x_i * v` for a coordinate vector `v`.
    fn mul_basis(&self, i: usize, v: &[C]) -> Vec<C> {
        let d = self.rank();
        let mut out = vec![self.one.zero_like(); d];
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (k, slot) in out.iter_mut().enumerate() {
                let c = self.constant(i, j, k);
                if !c.is_zero() {
                    *slot = slot.add(&c.mul(vj));
                }
            }
        }
        out
    }

    /// `x_i x_j` as a coordinate vector.
    pub fn product(&self, i: usize, j: usize) -> Vec<C> {
        (0..self.rank()).map(|k| self.constant(i, j, k)).collect()
    }

    /// `Tr(x_k)`, the trace of multiplication by `x_k`.
    pub fn trace_of_basis(&self, k: usize) -> C {
        (0..self.rank()).fold(self.one.zero_like(), |acc, m| acc.add(&self.constant(k, m, m)))
    }

    /// Matrix `Tr(x_i x_j)`.
    pub fn trace_form(&self) -> Vec<Vec<C>> {
        let d = self.rank();
        let traces: Vec<C> = (0..d).map(|k| self.trace_of_basis(k)).collect();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        (0..d).fold(self.one.zero_like(), |acc, k| {
                            let c = self.constant(i, j, k);
                            if c.is_zero() {
                                acc
                            } else {
                                acc.add(&c.mul(&traces[k]))
                            }
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// Determinant of the trace form.
    pub fn trace_discriminant(&self) -> C {
        bareiss_det(&self.trace_form())
    }

    /// Indices `{0..r-1}` for which the span of `x_0..x_{r-1}` is closed
    /// under multiplication, checked on the actual constants.
    pub fn is_subalgebra_span(&self, indices: &[usize]) -> bool {
        if !indices.contains(&0) {
            return false;
        }
        let inside = |k: usize| indices.contains(&k);
        indices.iter().all(|&i| {
            indices
                .iter()
                .all(|&j| (0..self.rank()).all(|k| inside(k) || self.constant(i, j, k).is_zero()))
        })
    }
}

impl<C: Ring + Send + Sync> StructureTable<C> {
    /// First triple `(i, j, l)` in lexicographic order with
    /// `(x_i x_j) x_l != x_i (x_j x_l)`.
    pub fn first_associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let d = self.rank();
        let n = d * d * d;
        (0..n).into_par_iter().find_first(|&idx| {
            let (i, j, l) = (idx / (d * d), idx / d % d, idx % d);
            if i == 0 || j == 0 || l == 0 {
                return false;
            }
            let left = self.mul_basis(l, &self.product(i, j));
            let right = self.mul_basis(i, &self.product(j, l));
            left.iter().zip(&right).any(|(a, b)| !a.sub(b).is_zero())
        })
        .map(|idx| (idx / (d * d), idx / d % d, idx % d))
    }
}

/// Outcome of [`check_associativity`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssociativityCheck {
    pub associative: bool,
    pub witness: Option<(usize, usize, usize)>,
}

pub fn check_associativity<C: Ring + Send + Sync>(t: &StructureTable<C>) -> AssociativityCheck {
    let witness = t.first_associativity_failure();
    AssociativityCheck { associative: witness.is_none(), witness }
}

impl StructureTable<BivarHomog> {
    pub fn field(&self) -> CoeffField {
        self.one.field()
    }

    /// Every stored constant has degree `e_i + e_j - e_k >= 0`.
    pub fn check_degrees(&self) -> Result<()> {
        for (&(i, j, k), c) in &self.constants {
            let want = self.degrees[i] + self.degrees[j] - self.degrees[k];
            if want < 0 || c.degree() as i64 != want {
                return Err(Error::Internal(format!(
                    "constant ({i},{j},{k}) has degree {} but e_i + e_j - e_k = {want}",
                    c.degree()
                )));
            }
        }
        Ok(())
    }
}

/// Specialization of a table at a point of the line.
#[derive(Clone, Debug, PartialEq)]
pub struct FiberAlgebra {
    pub table: StructureTable<Scalar>,
}

impl FiberAlgebra {
    pub fn dimension(&self) -> usize {
        self.table.rank()
    }

    /// Nondegenerate trace form, i.e. a product of separable field
    /// extensions.
    pub fn is_etale(&self) -> bool {
        !self.table.trace_discriminant().is_zero()
    }
}

pub fn fiber_at(t: &StructureTable<BivarHomog>, point: (&Scalar, &Scalar)) -> Result<FiberAlgebra> {
    let (s0, t0) = point;
    if s0.is_zero() && t0.is_zero() {
        return precondition("(0,0) is not a point of the line");
    }
    let field = t.field();
    if s0.field() != field || t0.field() != field {
        return Err(Error::FieldMismatch(field.to_string(), s0.field().to_string()));
    }
    Ok(FiberAlgebra { table: t.map(field.one(), |c| c.eval(s0, t0)) })
}

pub fn is_etale(a: &FiberAlgebra) -> bool {
    a.is_etale()
}

/// A unital subalgebra spanned by a basis prefix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefixSubalgebra {
    pub rank: usize,
    /// Degrees `e_1..e_{r-1}` of the prefix.
    pub sub_profile: Vec<i64>,
    /// `sum e_i - (r - 1)`.
    pub sub_genus: i64,
}

/// Proper prefixes `{0..r-1}`, `2 <= r < d`, that are closed under
/// multiplication.
pub fn detect_subalgebra_prefix<C: Ring>(t: &StructureTable<C>) -> Vec<PrefixSubalgebra> {
    (2..t.rank())
        .filter(|&r| t.is_subalgebra_span(&(0..r).collect::<Vec<_>>()))
        .map(|r| {
            let sub_profile = t.degrees()[1..r].to_vec();
            let sub_genus = sub_profile.iter().sum::<i64>() - (r as i64 - 1);
            PrefixSubalgebra { rank: r, sub_profile, sub_genus }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{MultiPoly, Ring};

    /// `Z[x]/(x^2 - a)` over `Z[a]`.
    fn quadratic() -> StructureTable<MultiPoly> {
        let a = MultiPoly::var(&["a"], 0).unwrap();
        let mut cs = BTreeMap::new();
        cs.insert((1, 1, 0), a.clone());
        StructureTable::new(vec![0, 1], a.one_like(), cs).unwrap()
    }

    #[test]
    fn quadratic_trace_discriminant() {
        let t = quadratic();
        let a = MultiPoly::var(&["a"], 0).unwrap();
        assert_eq!(t.trace_discriminant(), a.from_int_like(4).mul(&a));
        assert!(check_associativity(&t).associative);
        assert!(detect_subalgebra_prefix(&t).is_empty());
    }

    #[test]
    fn rejects_bad_index() {
        let one = MultiPoly::zero(&["a"]).unwrap().one_like();
        let mut cs = BTreeMap::new();
        cs.insert((2, 1, 0), one.clone());
        assert!(StructureTable::new(vec![0, 1, 2], one, cs).is_err());
    }
}
