//! Degree four: quintuples `(e_1, e_2, e_3; f_1, f_2)` of a tetragonal cover
//! (the second pair splits the bundle of conics through the fibers),
//! their classification, a feasible choice of `f`, the resolvent cubic of a
//! special pencil, and diagnostics for the imprimitive fin.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::exactmath::{rat, MultiPoly, Rational, Ring};
use crate::polytopes::{lattice_points, polytope_p, polytope_q4, polytope_q4prime, ScrollarProfile};

mod resolvent;

pub use resolvent::{resolvent_det, ResolventCubic, RESOLVENT_VARS};

/// Invariants of a tetragonal cover and its conic bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quintuple {
    pub e: [i64; 3],
    pub f: [i64; 2],
}

impl Quintuple {
    /// Requires `0 <= e_1 <= e_2 <= e_3`, `f_1 <= f_2`, and
    /// `e_1 + e_2 + e_3 = f_1 + f_2`.
    pub fn new(e: [i64; 3], f: [i64; 2]) -> Result<Self> {
        if e[0] < 0 || e[0] > e[1] || e[1] > e[2] {
            return precondition(format!("e = {e:?} must be nonnegative and nondecreasing"));
        }
        if f[0] > f[1] {
            return precondition(format!("f = {f:?} must be nondecreasing"));
        }
        if e.iter().sum::<i64>() != f.iter().sum::<i64>() {
            return precondition(format!("sum of e = {e:?} differs from sum of f = {f:?}"));
        }
        Ok(Quintuple { e, f })
    }

    /// `g + 3`.
    pub fn level(&self) -> i64 {
        self.e.iter().sum()
    }

    pub fn genus(&self) -> i64 {
        self.level() - 3
    }

    /// The point divided by `g + 3`.
    pub fn scaled(&self) -> Vec<Rational> {
        let n = self.level();
        self.e.iter().chain(&self.f).map(|&x| rat(x, n)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuintupleClass {
    PrimitiveFeasible,
    /// Only covers factoring through a double cover (the fin `f_1 = 2 e_1`).
    ImprimitiveOnly,
    Infeasible,
}

pub fn classify_quintuple(q: &Quintuple) -> QuintupleClass {
    let [e1, e2, e3] = q.e;
    let [f1, f2] = q.f;
    let beyond_cut = f2 > e1 + e3;
    if e1 < 1 || f1 > 2 * e1 || f2 > 2 * e2 || (beyond_cut && f1 != 2 * e1) {
        QuintupleClass::Infeasible
    } else if beyond_cut {
        QuintupleClass::ImprimitiveOnly
    } else {
        QuintupleClass::PrimitiveFeasible
    }
}

/// `f_1 = min(2 e_1, floor((e_1 + e_2 + e_3) / 2))`, `f_2 = g + 3 - f_1`.
pub fn feasible_quintuple(e: [i64; 3]) -> Result<Quintuple> {
    if e.iter().any(|&x| x < 1) {
        return precondition("invariants must be positive");
    }
    let mut sorted = e;
    sorted.sort_unstable();
    let profile = ScrollarProfile::new(sorted.to_vec())?;
    if !profile.in_polytope(&polytope_p(4)?)? {
        return precondition(format!("{profile} is outside the degree-4 polytope"));
    }
    let n: i64 = sorted.iter().sum();
    let f1 = (2 * sorted[0]).min(n.div_euclid(2));
    Quintuple::new(sorted, [f1, n - f1])
}

/// Every lattice point `e` of the degree-4 polytope at level `n`, paired
/// with [`feasible_quintuple`] and its class.
pub fn sweep_level(n: i64) -> Result<Vec<(Quintuple, QuintupleClass)>> {
    let p = polytope_p(4)?;
    let points = lattice_points(4, n - 3, &p)?;
    points
        .par_iter()
        .filter(|pt| pt.is_positive())
        .map(|pt| {
            let q = feasible_quintuple([pt.e[0], pt.e[1], pt.e[2]])?;
            Ok((q, classify_quintuple(&q)))
        })
        .collect()
}

/// Scaled point lies in the region without the `f_2 <= e_1 + e_3` cut, or
/// in the fin slice `f_1 = 2 e_1`.
pub fn in_q4prime(q: &Quintuple) -> Result<bool> {
    polytope_q4prime().contains(&q.scaled())
}

pub fn in_q4(q: &Quintuple) -> Result<bool> {
    polytope_q4().contains(&q.scaled())
}

/// Genus of the quadratic subcover on the fin and the line it lies on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinDiagnostics {
    pub h: i64,
    #[serde(with = "crate::exactmath::serde_rational")]
    pub scaled_h: Rational,
    /// `h / (g + 3) = e_1 / (g + 3) - 1 / (g + 3)`.
    pub on_line: bool,
}

pub fn fin_diagnostics(e: [i64; 3], g: i64) -> Result<FinDiagnostics> {
    let [e1, e2, _] = e;
    if e1 < 1 || e[0] > e[1] || e[1] > e[2] {
        return precondition(format!("e = {e:?} must be positive and nondecreasing"));
    }
    if e2 <= 2 * e1 {
        return precondition(format!("e = {e:?} is not in the fin (needs e_2 > 2 e_1)"));
    }
    let n = g + 3;
    if e.iter().sum::<i64>() != n {
        return Err(Error::Precondition(format!("sum of {e:?} is not g + 3 = {n}")));
    }
    let h = e1 - 1;
    let scaled_h = rat(h, n);
    let on_line = scaled_h == rat(e1, n) - rat(1, n);
    Ok(FinDiagnostics { h, scaled_h, on_line })
}

/// Degrees of the conic coefficients `a^k_{ij}`: `e_i + e_j - f_k`, with
/// negative degrees forcing the coefficient to vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConicCoefficientLayout {
    pub degrees: [[[i64; 3]; 3]; 2],
    pub forced_zero: [[[bool; 3]; 3]; 2],
    /// The second conic has no monomial involving `x_1`.
    pub hyperelliptic_shape: bool,
}

pub fn conic_layout(e: [i64; 3], f: [i64; 2]) -> ConicCoefficientLayout {
    let mut degrees = [[[0; 3]; 3]; 2];
    let mut forced_zero = [[[false; 3]; 3]; 2];
    for k in 0..2 {
        for i in 0..3 {
            for j in 0..3 {
                degrees[k][i][j] = e[i] + e[j] - f[k];
                forced_zero[k][i][j] = degrees[k][i][j] < 0;
            }
        }
    }
    let hyperelliptic_shape = forced_zero[1][0].iter().all(|&z| z);
    ConicCoefficientLayout { degrees, forced_zero, hyperelliptic_shape }
}

/// `t^2 x^3 s^{2 sum e - 2 - 3 f_1} + y^3 s^{2 sum e - 3 f_2}`, negated.
pub(crate) fn resolvent_closed_form(q: &Quintuple) -> Result<MultiPoly> {
    let n = q.level();
    let sx = 2 * n - 2 - 3 * q.f[0];
    let sy = 2 * n - 3 * q.f[1];
    if sx < 0 || sy < 0 {
        return precondition("closed form has a negative power of s");
    }
    let p = MultiPoly::from_terms(
        &RESOLVENT_VARS,
        &[(vec![sx as u32, 2, 3, 0], 1), (vec![sy as u32, 0, 0, 3], 1)],
    )?;
    Ok(p.neg())
}
