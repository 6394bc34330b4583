use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::region::{RationalPolytope, Relation};
use crate::error::{precondition, Error, Result};
use crate::exactmath::Rational;

/// Degree `d` and the invariant vector `(e_1, ..., e_{d-1})`.
///
/// The raw order is kept (constructions can produce unsorted vectors);
/// polytope tests use [`ScrollarProfile::sorted_view`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScrollarProfile {
    pub d: usize,
    pub e: Vec<i64>,
    pub sorted: bool,
}

impl ScrollarProfile {
    pub fn new(e: Vec<i64>) -> Result<Self> {
        let d = e.len() + 1;
        if d < 2 {
            return Err(Error::DegreeOutOfRange { got: d, min: 2, max: usize::MAX });
        }
        if e.iter().any(|&x| x < 0) {
            return precondition("invariants must be nonnegative");
        }
        let sorted = e.windows(2).all(|w| w[0] <= w[1]);
        Ok(Self { d, e, sorted })
    }

    pub fn sorted_view(&self) -> Vec<i64> {
        let mut v = self.e.clone();
        v.sort_unstable();
        v
    }

    /// Sorted view with `e_0 = 0` prepended.
    pub fn with_zero(&self) -> Vec<i64> {
        let mut v = vec![0];
        v.extend(self.sorted_view());
        v
    }

    /// `d + g - 1`.
    pub fn level(&self) -> i64 {
        self.e.iter().sum()
    }

    pub fn genus(&self) -> i64 {
        self.level() - (self.d as i64 - 1)
    }

    /// All `e_i >= 1`, i.e. `h^0(O_C) = 1`.
    pub fn is_positive(&self) -> bool {
        self.e.iter().all(|&x| x >= 1)
    }

    /// Sorted view divided by the level.
    pub fn scaled(&self) -> Vec<Rational> {
        let l = self.level();
        self.sorted_view()
            .into_iter()
            .map(|x| Rational::new(x.into(), l.into()))
            .collect()
    }

    pub fn in_polytope(&self, p: &RationalPolytope) -> Result<bool> {
        if self.level() == 0 {
            return Ok(false);
        }
        p.contains(&self.scaled())
    }
}

impl std::fmt::Display for ScrollarProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.e.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `e_i + e_{d-1-i} >= e_{d-1}` for `0 <= i <= d-1`, with `e_0 = 0`.
pub fn square_condition(p: &ScrollarProfile) -> bool {
    let e = p.with_zero();
    let top = e[p.d - 1];
    (0..p.d).all(|i| e[i] + e[p.d - 1 - i] >= top)
}

/// A concave arrangement of a profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConcaveWitness {
    /// The reordered values.
    pub arrangement: Vec<i64>,
    /// `arrangement[i] = sorted_view[permutation[i]]`.
    pub permutation: Vec<usize>,
}

/// `(0, x_1, ..., x_n, 0)` has nonincreasing successive differences.
pub fn is_concave(x: &[i64]) -> bool {
    let mut padded = Vec::with_capacity(x.len() + 2);
    padded.push(0);
    padded.extend_from_slice(x);
    padded.push(0);
    let diffs: Vec<i64> = padded.windows(2).map(|w| w[1] - w[0]).collect();
    diffs.windows(2).all(|w| w[1] <= w[0])
}

/// Searches the `2^(d-2)` unimodal arrangements of the profile for a
/// concave one. Bit `b` of the mask sends the `b`-th smallest value to the
/// descending side; the largest value sits at the peak.
pub fn concave_realizable(p: &ScrollarProfile) -> Option<ConcaveWitness> {
    let sorted = p.sorted_view();
    let n = sorted.len();
    if n == 0 {
        return None;
    }
    for mask in 0u64..(1u64 << (n - 1)) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for b in 0..n - 1 {
            if mask >> b & 1 == 1 {
                right.push(b);
            } else {
                left.push(b);
            }
        }
        let mut perm = left;
        perm.push(n - 1);
        perm.extend(right.into_iter().rev());
        let arrangement: Vec<i64> = perm.iter().map(|&i| sorted[i]).collect();
        if is_concave(&arrangement) {
            return Some(ConcaveWitness { arrangement, permutation: perm });
        }
    }
    None
}

/// Constraint with denominators cleared: `sum a_i e_i (<=|=) b * level`.
struct ScaledConstraint {
    coeffs: Vec<i128>,
    constant: i128,
    relation: Relation,
    /// Largest coordinate index with a nonzero coefficient.
    last: usize,
}

impl ScaledConstraint {
    fn from_polytope(p: &RationalPolytope) -> Result<Vec<Self>> {
        p.constraints
            .iter()
            .map(|c| {
                let lcm = c
                    .coeffs
                    .iter()
                    .chain(std::iter::once(&c.constant))
                    .fold(num_bigint::BigInt::from(1), |acc, r| acc.lcm(r.denom()));
                let conv = |r: &Rational| {
                    (r * Rational::from_integer(lcm.clone()))
                        .to_integer()
                        .to_i128()
                        .ok_or_else(|| Error::Precondition("constraint coefficients too large".into()))
                };
                let coeffs = c.coeffs.iter().map(conv).collect::<Result<Vec<_>>>()?;
                let last = coeffs.iter().rposition(|x| *x != 0).unwrap_or(0);
                Ok(Self { constant: conv(&c.constant)?, coeffs, relation: c.relation, last })
            })
            .collect()
    }

    fn holds(&self, e: &[i64], level: i128) -> bool {
        let lhs: i128 = self.coeffs.iter().zip(e).map(|(a, &x)| a * x as i128).sum();
        let rhs = self.constant * level;
        match self.relation {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
        }
    }
}

/// Positive nondecreasing integer vectors of length `d-1` summing to
/// `d + g - 1` whose scaling lies in `p`, in lexicographic order.
pub fn lattice_points(d: usize, g: i64, p: &RationalPolytope) -> Result<Vec<ScrollarProfile>> {
    if d < 2 {
        return Err(Error::DegreeOutOfRange { got: d, min: 2, max: usize::MAX });
    }
    if p.dim != d - 1 {
        return Err(Error::Arity { expected: d - 1, got: p.dim });
    }
    if g < 0 {
        return precondition("genus must be nonnegative");
    }
    let cs = ScaledConstraint::from_polytope(p)?;
    let filter = |e: &[i64], level: i64| {
        let m = e.len();
        cs.iter()
            .filter(|c| c.last < m && !(c.relation == Relation::Eq && m < d - 1))
            .all(|c| c.holds(e, level as i128))
    };
    Ok(nondecreasing_compositions(d, d as i64 + g - 1, &[], &filter))
}

/// Positive nondecreasing compositions of `level` into `d - 1` parts that
/// start with `prefix`. `keep(partial, level)` prunes partial vectors and
/// must be monotone (rejecting a prefix rejects all its extensions).
pub fn nondecreasing_compositions<F>(d: usize, level: i64, prefix: &[i64], keep: &F) -> Vec<ScrollarProfile>
where
    F: Fn(&[i64], i64) -> bool + Sync,
{
    let n = d - 1;
    if prefix.len() > n || prefix.windows(2).any(|w| w[0] > w[1]) || prefix.first().is_some_and(|&x| x < 1) {
        return Vec::new();
    }
    let used: i64 = prefix.iter().sum();
    if !prefix.is_empty() && !keep(prefix, level) {
        return Vec::new();
    }
    if prefix.len() == n {
        return if used == level {
            vec![ScrollarProfile::new(prefix.to_vec()).expect("positive")]
        } else {
            Vec::new()
        };
    }
    let lo = prefix.last().copied().unwrap_or(1);
    let remaining = (n - prefix.len()) as i64;
    let hi = (level - used) / remaining;
    if hi < lo {
        return Vec::new();
    }
    let branch = |x: i64| {
        let mut e = prefix.to_vec();
        e.push(x);
        let mut out = Vec::new();
        descend(&mut e, n, level, keep, &mut out);
        out
    };
    if prefix.is_empty() {
        (lo..=hi).into_par_iter().map(branch).collect::<Vec<_>>().concat()
    } else {
        (lo..=hi).flat_map(branch).collect()
    }
}

fn descend<F>(e: &mut Vec<i64>, n: usize, level: i64, keep: &F, out: &mut Vec<ScrollarProfile>)
where
    F: Fn(&[i64], i64) -> bool,
{
    if !keep(e, level) {
        return;
    }
    let used: i64 = e.iter().sum();
    if e.len() == n {
        if used == level {
            out.push(ScrollarProfile::new(e.clone()).expect("positive"));
        }
        return;
    }
    let lo = *e.last().expect("nonempty");
    let remaining = (n - e.len()) as i64;
    if remaining == 1 {
        let x = level - used;
        if x >= lo {
            e.push(x);
            descend(e, n, level, keep, out);
            e.pop();
        }
        return;
    }
    let hi = (level - used) / remaining;
    for x in lo..=hi {
        e.push(x);
        descend(e, n, level, keep, out);
        e.pop();
    }
}

/// `true` for every candidate; enumerates the whole sorted region.
pub fn accept_all(_: &[i64], _: i64) -> bool {
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_and_level() {
        let p = ScrollarProfile::new(vec![3, 1, 2]).unwrap();
        assert_eq!(p.d, 4);
        assert_eq!(p.genus(), 3);
        assert!(!p.sorted);
        assert_eq!(p.with_zero(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn concavity() {
        assert!(is_concave(&[2, 3, 4]));
        assert!(!is_concave(&[1, 1, 2]));
        assert!(is_concave(&[1, 1, 1]));
    }

    #[test]
    fn unfiltered_enumeration_counts_partitions() {
        // Partitions of 10 into exactly 3 positive parts: 8.
        let all = nondecreasing_compositions(4, 10, &[], &accept_all);
        assert_eq!(all.len(), 8);
        let pre = nondecreasing_compositions(4, 10, &[2], &accept_all);
        assert_eq!(pre.len(), 3);
    }
}
