//! Line-bundle bookkeeping on the projective line, stratum dimensions of
//! trigonal and tetragonal Hurwitz spaces, and the geometric density
//! functions built from them.

mod grid;

pub use grid::{emit_density_grid, DensityGrid};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::exactmath::{dist2, rat, rat_int, serde_rational, Rational};
use crate::polytopes::{polytope_q4, polytope_q4prime};
use crate::quartic::{classify_quintuple, Quintuple, QuintupleClass};

/// `O(a_1) + ... + O(a_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitBundle {
    pub degrees: Vec<i64>,
}

impl SplitBundle {
    pub fn new(degrees: Vec<i64>) -> Self {
        SplitBundle { degrees }
    }
}

pub fn h0(n: i64) -> i64 {
    (n + 1).max(0)
}

/// `dim Hom(E, F) = sum h0(f_j - e_i)`.
pub fn hom_dim(e: &SplitBundle, f: &SplitBundle) -> i64 {
    e.degrees
        .iter()
        .flat_map(|a| f.degrees.iter().map(move |b| h0(b - a)))
        .sum()
}

pub fn end_dim(e: &SplitBundle) -> i64 {
    hom_dim(e, e)
}

/// `h0(Sym^3 E ⊗ det E^vee) - dim End E` for `E = O(e_1) + O(e_2)`.
pub fn dim_trigonal(e1: i64, e2: i64) -> Result<i64> {
    if !(1 <= e1 && e1 <= e2 && e2 <= 2 * e1) {
        return precondition(format!("need 1 <= e1 <= e2 <= 2 e1, got ({e1},{e2})"));
    }
    let twist = e1 + e2;
    let sym3: i64 = (0..=3).map(|j| h0((3 - j) * e1 + j * e2 - twist)).sum();
    Ok(sym3 - end_dim(&SplitBundle::new(vec![e1, e2])))
}

/// `h0(Sym^2 E ⊗ F^vee) - dim End E - dim End F + 1`.
pub fn dim_quartic(e: [i64; 3], f: [i64; 2]) -> Result<i64> {
    if e.iter().sum::<i64>() != f.iter().sum::<i64>() {
        return precondition(format!("sum of e = {e:?} differs from sum of f = {f:?}"));
    }
    let mut sym2 = 0;
    for i in 0..3 {
        for j in i..3 {
            for fk in f {
                sym2 += h0(e[i] + e[j] - fk);
            }
        }
    }
    Ok(sym2 - end_dim(&SplitBundle::new(e.to_vec())) - end_dim(&SplitBundle::new(f.to_vec())) + 1)
}

/// Normalization of `dim H_{d,g}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// `2g + 2d - 2`, the count for covers with a fixed target.
    #[default]
    FixedBase,
    /// `2g + 2d - 5`, modulo automorphisms of the target.
    ModuloAut,
}

impl Convention {
    pub fn hurwitz_dim(self, d: usize, g: i64) -> i64 {
        let d = d as i64;
        match self {
            Convention::FixedBase => 2 * g + 2 * d - 2,
            Convention::ModuloAut => 2 * g + 2 * d - 5,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Convention::FixedBase => "fixed-base",
            Convention::ModuloAut => "modulo-aut",
        }
    }
}

/// Trigonal density on the segment from `(1/3, 2/3)` to `(1/2, 1/2)`:
/// `1 - (x_2 - x_1) / 2` there, zero elsewhere (including off the line
/// `x_1 + x_2 = 1`).
pub fn rho3(x: &[Rational; 2]) -> Rational {
    let on_line = &x[0] + &x[1] == Rational::one();
    let on_segment = rat(1, 3) <= x[0] && x[0] <= rat(1, 2);
    if on_line && on_segment {
        Rational::one() - (&x[1] - &x[0]) / rat_int(2)
    } else {
        Rational::zero()
    }
}

/// Three evaluations of the quartic refined density at
/// `(e_1, e_2, e_3; f_1, f_2)`, all zero off the support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rho4 {
    /// `1 - 1/2 sum_{i <= j, k} max(0, f_k - e_i - e_j)`.
    #[serde(with = "serde_rational")]
    pub printed: Rational,
    /// `lim dim_quartic(n x) / (2 n)` over the lattice multiples of `x`.
    #[serde(with = "serde_rational")]
    pub limit: Rational,
    /// Closed form of that limit.
    #[serde(with = "serde_rational")]
    pub derived_closed: Rational,
    pub in_support: bool,
}

/// Support: the primitive region, plus the fin `f_1 = 2 e_1` of the
/// larger region.
pub fn rho4_support(x: &[Rational; 5]) -> Result<bool> {
    if polytope_q4().contains(x)? {
        return Ok(true);
    }
    Ok(x[3] == rat_int(2) * &x[0] && polytope_q4prime().contains(x)?)
}

fn excess_sum(x: &[Rational; 5]) -> Rational {
    let mut s = Rational::zero();
    for i in 0..3 {
        for j in i..3 {
            for k in 3..5 {
                let v = &x[k] - &x[i] - &x[j];
                if v.is_positive() {
                    s += v;
                }
            }
        }
    }
    s
}

pub fn rho4_printed_raw(x: &[Rational; 5]) -> Rational {
    Rational::one() - excess_sum(x) / rat_int(2)
}

pub fn rho4_derived_raw(x: &[Rational; 5]) -> Rational {
    let mut spread = Rational::zero();
    for i in 0..3 {
        for j in i + 1..3 {
            spread += (&x[j] - &x[i]).abs();
        }
    }
    spread += (&x[4] - &x[3]).abs();
    Rational::one() - (spread - excess_sum(x)) / rat_int(2)
}

/// Exact slope of `n -> dim_quartic(n y)` for the primitive integer
/// multiple `y` of `x`, divided by `2 (e_1 + e_2 + e_3)`. The dimension is
/// affine in `n` on multiples, so two samples determine it.
pub fn rho4_limit_raw(x: &[Rational; 5]) -> Result<Rational> {
    let y = integer_multiple(x)?;
    let level: i64 = y[..3].iter().sum();
    if level <= 0 {
        return precondition("coordinates must have positive sum");
    }
    let at = |n: i64| dim_quartic([n * y[0], n * y[1], n * y[2]], [n * y[3], n * y[4]]);
    let slope = at(2)? - at(1)?;
    Ok(rat(slope, 2 * level))
}

/// Smallest positive integer vector proportional to `x`.
fn integer_multiple(x: &[Rational]) -> Result<Vec<i64>> {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    let l = x.iter().fold(num_bigint::BigInt::one(), |acc, r| acc.lcm(r.denom()));
    x.iter()
        .map(|r| {
            (r * Rational::from_integer(l.clone()))
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::Precondition("coordinates too large".into()))
        })
        .collect()
}

pub fn rho4_ref(x: &[Rational; 5]) -> Result<Rho4> {
    let one = Rational::one();
    if &x[0] + &x[1] + &x[2] != one || &x[3] + &x[4] != one {
        return precondition("both coordinate blocks must sum to one");
    }
    let in_support = rho4_support(x)?;
    if !in_support {
        let z = Rational::zero();
        return Ok(Rho4 { printed: z.clone(), limit: z.clone(), derived_closed: z, in_support });
    }
    Ok(Rho4 {
        printed: rho4_printed_raw(x),
        limit: rho4_limit_raw(x)?,
        derived_closed: rho4_derived_raw(x),
        in_support,
    })
}

/// Closed Euclidean ball.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ball {
    #[serde(with = "serde_rational::vec")]
    pub center: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub radius: Rational,
}

impl Ball {
    pub fn contains(&self, x: &[Rational]) -> bool {
        dist2(&self.center, x) <= &self.radius * &self.radius
    }
}

/// Largest stratum dimension among profiles scaled into `ball`, divided by
/// `dim H_{d,g}`; an empty union counts as dimension `-1`.
///
/// For `d = 3` the ball lives in `(e_1, e_2)`; for `d = 4` in
/// `(e_1, e_2, e_3; f_1, f_2)` and every realizable `f` is considered.
pub fn pi_geo(d: usize, ball: &Ball, g: i64, convention: Convention) -> Result<Rational> {
    if g < 1 {
        return precondition("genus must be positive");
    }
    let best = match d {
        3 => {
            if ball.center.len() != 2 {
                return Err(Error::Arity { expected: 2, got: ball.center.len() });
            }
            let n = g + 2;
            (1..=n / 2)
                .filter_map(|e1| {
                    let e2 = n - e1;
                    let x = [rat(e1, n), rat(e2, n)];
                    (e2 <= 2 * e1 && ball.contains(&x)).then(|| dim_trigonal(e1, e2))
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .max()
        }
        4 => {
            if ball.center.len() != 5 {
                return Err(Error::Arity { expected: 5, got: ball.center.len() });
            }
            max_quartic_dim(ball, g + 3)?
        }
        _ => return Err(Error::DegreeOutOfRange { got: d, min: 3, max: 4 }),
    };
    Ok(rat(best.unwrap_or(-1), convention.hurwitz_dim(d, g)))
}

fn max_quartic_dim(ball: &Ball, n: i64) -> Result<Option<i64>> {
    use rayon::prelude::*;
    let best = (1..=n / 3)
        .into_par_iter()
        .map(|e1| -> Result<Option<i64>> {
            let mut best: Option<i64> = None;
            for e2 in e1..=(n - e1) / 2 {
                let e3 = n - e1 - e2;
                for f1 in 0..=n / 2 {
                    let q = Quintuple::new([e1, e2, e3], [f1, n - f1])?;
                    if classify_quintuple(&q) == QuintupleClass::Infeasible || !ball.contains(&q.scaled()) {
                        continue;
                    }
                    let dim = dim_quartic(q.e, q.f)?;
                    best = Some(best.map_or(dim, |b| b.max(dim)));
                }
            }
            Ok(best)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(best.into_iter().flatten().max())
}
