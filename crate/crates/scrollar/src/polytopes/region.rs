use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::linalg::{nullspace, rank, solve_unique};
use crate::exactmath::{rat_int, serde_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// `a . x <= b`
    Le,
    /// `a . x = b`
    Eq,
}

/// One defining condition `a . x (<= | =) b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearInequality {
    #[serde(with = "serde_rational::vec")]
    pub coeffs: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub constant: Rational,
    pub relation: Relation,
}

impl LinearInequality {
    pub fn le(coeffs: Vec<Rational>, constant: Rational) -> Self {
        Self { coeffs, constant, relation: Relation::Le }
    }

    pub fn eq(coeffs: Vec<Rational>, constant: Rational) -> Self {
        Self { coeffs, constant, relation: Relation::Eq }
    }

    /// Sparse integer form: `sum c x[i] <= b`.
    pub fn le_terms(n: usize, terms: &[(usize, i64)], constant: i64) -> Self {
        Self::le(dense(n, terms), rat_int(constant))
    }

    pub fn eq_terms(n: usize, terms: &[(usize, i64)], constant: i64) -> Self {
        Self::eq(dense(n, terms), rat_int(constant))
    }

    pub fn lhs(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    pub fn holds(&self, x: &[Rational]) -> bool {
        let v = self.lhs(x);
        match self.relation {
            Relation::Le => v <= self.constant,
            Relation::Eq => v == self.constant,
        }
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        self.lhs(x) == self.constant
    }

    fn augmented(&self) -> Vec<Rational> {
        let mut row = self.coeffs.clone();
        row.push(self.constant.clone());
        row
    }
}

fn dense(n: usize, terms: &[(usize, i64)]) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    for &(i, c) in terms {
        v[i] += rat_int(c);
    }
    v
}

/// Polyhedron given by linear conditions, with an optional vertex cache.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalPolytope {
    pub name: String,
    pub dim: usize,
    pub constraints: Vec<LinearInequality>,
    #[serde(with = "serde_rational::opt_vecvec", default)]
    pub vertices: Option<Vec<Vec<Rational>>>,
}

impl RationalPolytope {
    pub fn new(name: impl Into<String>, dim: usize, constraints: Vec<LinearInequality>) -> Result<Self> {
        if let Some(c) = constraints.iter().find(|c| c.coeffs.len() != dim) {
            return Err(Error::Arity { expected: dim, got: c.coeffs.len() });
        }
        Ok(Self { name: name.into(), dim, constraints, vertices: None })
    }

    pub fn contains(&self, x: &[Rational]) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::Arity { expected: self.dim, got: x.len() });
        }
        Ok(self.constraints.iter().all(|c| c.holds(x)))
    }

    /// Same polytope with the vertex list filled in.
    pub fn with_vertices(mut self) -> Result<Self> {
        let v = self.compute_vertices()?;
        self.vertices = Some(v);
        Ok(self)
    }

    /// Exact vertex set, deduplicated and lexicographically sorted.
    pub fn vertices(&self) -> Result<Vec<Vec<Rational>>> {
        match &self.vertices {
            Some(v) => Ok(v.clone()),
            None => self.compute_vertices(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::Arity { expected: self.dim, got: other.dim });
        }
        let mut cs = self.constraints.clone();
        cs.extend(other.constraints.iter().cloned());
        Self::new(format!("{} & {}", self.name, other.name), self.dim, cs)
    }

    /// Containment of bounded polytopes, checked on vertices.
    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        for v in self.vertices()? {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_set(&self, other: &Self) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    /// Constraints holding with equality at `x`.
    pub fn tight_at(&self, x: &[Rational]) -> Vec<&LinearInequality> {
        self.constraints.iter().filter(|c| c.is_tight(x)).collect()
    }

    fn split(&self) -> (Vec<&LinearInequality>, Vec<&LinearInequality>) {
        self.constraints.iter().partition(|c| c.relation == Relation::Eq)
    }

    /// Facet-subset rank search: every vertex is the unique solution of the
    /// equalities plus `n - rank(eq)` tight inequalities.
    fn compute_vertices(&self) -> Result<Vec<Vec<Rational>>> {
        let n = self.dim;
        let (eqs, ineqs) = self.split();
        let eq_rows: Vec<Vec<Rational>> = eqs.iter().map(|c| c.coeffs.clone()).collect();
        self.reject_unbounded(&eq_rows, &ineqs)?;

        let need = n - rank(&eq_rows);
        let eq_aug: Vec<Vec<Rational>> = eqs.iter().map(|c| c.augmented()).collect();
        let mut found = Vec::new();
        for_each_combination(ineqs.len(), need, |subset| {
            let mut rows = eq_aug.clone();
            rows.extend(subset.iter().map(|&i| ineqs[i].augmented()));
            if let Some(x) = solve_unique(&rows, n) {
                if self.constraints.iter().all(|c| c.holds(&x)) {
                    found.push(x);
                }
            }
        });
        found.sort();
        found.dedup();
        Ok(found)
    }

    fn reject_unbounded(&self, eq_rows: &[Vec<Rational>], ineqs: &[&LinearInequality]) -> Result<()> {
        let n = self.dim;
        let mut all = eq_rows.to_vec();
        all.extend(ineqs.iter().map(|c| c.coeffs.clone()));
        if !nullspace(&all, n).is_empty() {
            return Err(Error::Unbounded);
        }
        // A pointed recession cone is nonzero iff it has an extreme ray, cut
        // out by n - rank(eq) - 1 tight homogeneous inequalities.
        let need = n - rank(eq_rows);
        if need == 0 {
            return Ok(());
        }
        let mut unbounded = false;
        for_each_combination(ineqs.len(), need - 1, |subset| {
            if unbounded {
                return;
            }
            let mut rows = eq_rows.to_vec();
            rows.extend(subset.iter().map(|&i| ineqs[i].coeffs.clone()));
            let ns = nullspace(&rows, n);
            if ns.len() != 1 {
                return;
            }
            for sign in [Rational::one(), -Rational::one()] {
                let y: Vec<Rational> = ns[0].iter().map(|v| v * &sign).collect();
                if ineqs.iter().all(|c| !c.lhs(&y).is_positive()) {
                    unbounded = true;
                }
            }
        });
        if unbounded {
            Err(Error::Unbounded)
        } else {
            Ok(())
        }
    }
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(pos) = (0..k).rev().find(|&p| idx[p] != p + n - k) else {
            return;
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// `P_d`: sum one, `0 <= x_1 <= ... <= x_{d-1}`, `x_{i+j} <= x_i + x_j`.
pub fn polytope_p(d: usize) -> Result<RationalPolytope> {
    if d < 2 {
        return Err(Error::DegreeOutOfRange { got: d, min: 2, max: usize::MAX });
    }
    let n = d - 1;
    let mut cs = sorted_block(n, 0, n);
    for i in 1..=n {
        for j in i..=n {
            if i + j <= n {
                cs.push(subadditive(n, i, j));
            }
        }
    }
    RationalPolytope::new(format!("P{d}"), n, cs)
}

/// Sum-one plus `0 <= x_1 <= ... <= x_n` on coordinates `offset..offset+n`.
fn sorted_block(dim: usize, offset: usize, n: usize) -> Vec<LinearInequality> {
    let all: Vec<(usize, i64)> = (0..n).map(|i| (offset + i, 1)).collect();
    let mut cs = vec![LinearInequality::eq_terms(dim, &all, 1)];
    cs.push(LinearInequality::le_terms(dim, &[(offset, -1)], 0));
    for i in 0..n - 1 {
        cs.push(LinearInequality::le_terms(dim, &[(offset + i, 1), (offset + i + 1, -1)], 0));
    }
    cs
}

/// `x_{i+j} <= x_i + x_j` with 1-based invariant indices.
fn subadditive(n: usize, i: usize, j: usize) -> LinearInequality {
    LinearInequality::le_terms(n, &[(i + j - 1, 1), (i - 1, -1), (j - 1, -1)], 0)
}

/// Quartic region without the `f_2 <= e_1 + e_3` cut, coordinates
/// `(e_1, e_2, e_3; f_1, f_2)`.
pub fn polytope_q4prime() -> RationalPolytope {
    let mut cs = sorted_block(5, 0, 3);
    let f_sum = LinearInequality::eq_terms(5, &[(3, 1), (4, 1)], 1);
    cs.push(f_sum);
    cs.push(LinearInequality::le_terms(5, &[(3, 1), (4, -1)], 0));
    cs.push(LinearInequality::le_terms(5, &[(3, 1), (0, -2)], 0));
    cs.push(LinearInequality::le_terms(5, &[(4, 1), (1, -2)], 0));
    RationalPolytope::new("Q4prime", 5, cs).expect("arity is fixed")
}

pub fn polytope_q4() -> RationalPolytope {
    let mut p = polytope_q4prime();
    p.name = "Q4".into();
    p.constraints
        .push(LinearInequality::le_terms(5, &[(4, 1), (0, -1), (2, -1)], 0));
    p
}

/// The two sextic candidate regions `(Q2, Q3)`; their intersection is `P_6`.
pub fn polytope_q2_q3() -> (RationalPolytope, RationalPolytope) {
    let n = 5;
    let shared = [subadditive(n, 1, 4), subadditive(n, 2, 3)];
    let mut q2 = sorted_block(n, 0, n);
    q2.push(subadditive(n, 1, 2));
    q2.push(subadditive(n, 2, 2));
    q2.extend(shared.iter().cloned());
    let mut q3 = sorted_block(n, 0, n);
    q3.push(subadditive(n, 1, 1));
    q3.push(subadditive(n, 1, 3));
    q3.extend(shared.iter().cloned());
    (
        RationalPolytope::new("Q2", n, q2).expect("arity is fixed"),
        RationalPolytope::new("Q3", n, q3).expect("arity is fixed"),
    )
}

/// `(0, ..., 0, 1/(d-k), ..., 1/(d-k))` with `k - 1` zeros, one per proper
/// divisor `1 < k < d`.
pub fn fin_points(d: usize) -> Vec<Vec<Rational>> {
    (2..d)
        .filter(|k| d % k == 0)
        .map(|k| {
            let w = Rational::new(1.into(), ((d - k) as i64).into());
            let mut v = vec![Rational::zero(); k - 1];
            v.extend(std::iter::repeat(w).take(d - k));
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn pts(rows: &[&[(i64, i64)]]) -> Vec<Vec<Rational>> {
        let mut v: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&(a, b)| rat(a, b)).collect())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn simplex_vertices() {
        let n = 3;
        let mut cs = vec![LinearInequality::eq_terms(n, &[(0, 1), (1, 1), (2, 1)], 1)];
        for i in 0..n {
            cs.push(LinearInequality::le_terms(n, &[(i, -1)], 0));
        }
        let p = RationalPolytope::new("simplex", n, cs).unwrap();
        let expect = pts(&[&[(1, 1), (0, 1), (0, 1)], &[(0, 1), (1, 1), (0, 1)], &[(0, 1), (0, 1), (1, 1)]]);
        assert_eq!(p.vertices().unwrap(), expect);
    }

    #[test]
    fn halfline_is_unbounded() {
        let p = RationalPolytope::new("ray", 2, vec![
            LinearInequality::le_terms(2, &[(0, -1)], 0),
            LinearInequality::eq_terms(2, &[(1, 1)], 0),
        ])
        .unwrap();
        assert_eq!(p.vertices(), Err(Error::Unbounded));
        let strip = RationalPolytope::new("strip", 2, vec![
            LinearInequality::le_terms(2, &[(0, -1)], 0),
            LinearInequality::le_terms(2, &[(0, 1)], 1),
        ])
        .unwrap();
        assert_eq!(strip.vertices(), Err(Error::Unbounded));
    }

    #[test]
    fn p2_is_a_point() {
        assert_eq!(polytope_p(2).unwrap().vertices().unwrap(), vec![vec![rat(1, 1)]]);
        assert!(polytope_p(1).is_err());
    }

    #[test]
    fn combinations_enumerate_all() {
        let mut n = 0;
        for_each_combination(6, 3, |_| n += 1);
        assert_eq!(n, 20);
        let mut z = 0;
        for_each_combination(4, 0, |s| {
            assert!(s.is_empty());
            z += 1
        });
        assert_eq!(z, 1);
    }

    #[test]
    fn arity_checked() {
        let p = polytope_p(4).unwrap();
        assert!(matches!(p.contains(&[rat(1, 1)]), Err(Error::Arity { expected: 3, got: 1 })));
    }
}
