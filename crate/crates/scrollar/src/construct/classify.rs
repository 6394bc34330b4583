use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::polytopes::{
    concave_realizable, imprimitivity_certificate, polytope_p, ConcaveWitness, ObstructionCertificate,
    ScrollarProfile,
};

/// Trigonal curves with invariants `(e_1, e_2)` lie in the class `3D + kF`
/// on `F_{e_2 - e_1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum TrigonalClass {
    Exists { k: i64, genus: i64 },
    /// `e_2 > 2 e_1`.
    Nonexistent,
}

pub fn trigonal_class(e1: i64, e2: i64) -> Result<TrigonalClass> {
    if !(1 <= e1 && e1 <= e2) {
        return precondition(format!("need 1 <= e1 <= e2, got ({e1},{e2})"));
    }
    let k = 2 * e1 - e2;
    Ok(if k >= 0 {
        TrigonalClass::Exists { k, genus: e1 + e2 - 2 }
    } else {
        TrigonalClass::Nonexistent
    })
}

/// `(1, ..., 1, 2, ..., 2)` with `d - 1 - g` ones and `g` twos.
pub fn balanced_profile(d: usize, g: i64) -> Result<ScrollarProfile> {
    if d < 2 {
        return Err(Error::DegreeOutOfRange { got: d, min: 2, max: usize::MAX });
    }
    if g < 0 || 2 * g > d as i64 - 1 {
        return precondition(format!("genus {g} outside 0..=(d-1)/2 for d = {d}"));
    }
    let ones = d - 1 - g as usize;
    let mut e = vec![1; ones];
    e.extend(std::iter::repeat(2).take(g as usize));
    ScrollarProfile::new(e)
}

/// Generization order: equal sums, and every ascending prefix sum of
/// `general` is at least the one of `special`.
pub fn generizes(special: &ScrollarProfile, general: &ScrollarProfile) -> bool {
    if special.d != general.d || special.level() != general.level() {
        return false;
    }
    let (a, b) = (special.sorted_view(), general.sorted_view());
    let mut sa = 0;
    let mut sb = 0;
    a.iter().zip(&b).all(|(x, y)| {
        sa += x;
        sb += y;
        sb >= sa
    })
}

/// A realizable profile together with a generization of it that is
/// obstructed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerizationWitness {
    pub d: usize,
    pub scale: i64,
    pub realized: ScrollarProfile,
    pub realization: ConcaveWitness,
    pub generization: ScrollarProfile,
    pub certificate: Option<ObstructionCertificate>,
    /// The generization fails the subadditivity inequalities.
    pub outside_polytope: bool,
    pub dominates: bool,
}

/// Scale used by [`generization_gap_witness`]: 5 for `d >= 5`, 2 for `d = 4`.
pub fn default_gap_scale(d: usize) -> i64 {
    if d == 4 {
        2
    } else {
        5
    }
}

pub fn generization_gap_witness(d: usize) -> Result<GenerizationWitness> {
    generization_gap_witness_with(d, default_gap_scale(d))
}

/// For `d >= 5`: `e = (a, 2a, ..., (d-1)a)` and
/// `e' = (a, 2a+1, 3a+2, 4a-3, 5a, ...)`. For `d = 4`: `(a, 2a, 3a)` and
/// `(a, 2a+1, 3a-1)`.
pub fn generization_gap_witness_with(d: usize, a: i64) -> Result<GenerizationWitness> {
    if d < 4 {
        return Err(Error::DegreeOutOfRange { got: d, min: 4, max: usize::MAX });
    }
    let min_scale = if d == 4 { 2 } else { 5 };
    if a < min_scale {
        return precondition(format!("scale {a} below {min_scale}"));
    }
    let e: Vec<i64> = (1..d as i64).map(|i| i * a).collect();
    let mut e2 = e.clone();
    if d == 4 {
        e2[1] += 1;
        e2[2] -= 1;
    } else {
        e2[1] += 1;
        e2[2] += 2;
        e2[3] -= 3;
    }
    let realized = ScrollarProfile::new(e)?;
    let generization = ScrollarProfile::new(e2)?;
    let realization = concave_realizable(&realized)
        .ok_or_else(|| Error::Internal(format!("{realized} is not concave-realizable")))?;
    let outside_polytope = !generization.in_polytope(&polytope_p(d)?)?;
    Ok(GenerizationWitness {
        d,
        scale: a,
        certificate: imprimitivity_certificate(&generization),
        dominates: generizes(&realized, &generization),
        realized,
        realization,
        generization,
        outside_polytope,
    })
}

/// Intervals of invariant sums covered by the profiles
/// `(a, 2a, ..., (d-2)a, e_{d-1})` with `(d-2)a + 5 <= e_{d-1} <= (d-1)a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub d: usize,
    pub a_max: i64,
    /// `(a, f(a), g(a))`.
    pub intervals: Vec<(i64, i64, i64)>,
    /// Smallest `a >= 5` from which consecutive intervals overlap or touch.
    pub a0: i64,
    /// Positive integers up to `g(a_max)` outside every interval.
    pub complement: Vec<i64>,
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Lower end `C(d-1,2) a + (d-2) a + 5`.
pub fn coverage_lower(d: usize, a: i64) -> i64 {
    let d = d as i64;
    binom2(d - 1) * a + (d - 2) * a + 5
}

/// Upper end `C(d-1,2) a + (d-1) a`.
pub fn coverage_upper(d: usize, a: i64) -> i64 {
    let d = d as i64;
    binom2(d - 1) * a + (d - 1) * a
}

pub fn coverage_intervals(d: usize, a_max: i64) -> Result<CoverageReport> {
    if d < 5 {
        return Err(Error::DegreeOutOfRange { got: d, min: 5, max: usize::MAX });
    }
    if a_max < 5 {
        return precondition("a_max must be at least 5");
    }
    let intervals: Vec<(i64, i64, i64)> =
        (5..=a_max).map(|a| (a, coverage_lower(d, a), coverage_upper(d, a))).collect();
    // f(a+1) - g(a) - 1 decreases by one per step, so the first hit is final.
    let a0 = (5..)
        .find(|&a| coverage_lower(d, a + 1) <= coverage_upper(d, a) + 1)
        .expect("gap shrinks linearly");
    let top = coverage_upper(d, a_max);
    let complement = (1..=top)
        .filter(|n| !intervals.iter().any(|&(_, lo, hi)| lo <= *n && *n <= hi))
        .collect();
    Ok(CoverageReport { d, a_max, intervals, a0, complement })
}

/// The profile `(a, 2a, ..., (d-2)a, n - C(d-1,2) a)` with invariant sum `n`.
pub fn coverage_witness(d: usize, a: i64, n: i64) -> Result<ScrollarProfile> {
    if d < 5 {
        return Err(Error::DegreeOutOfRange { got: d, min: 5, max: usize::MAX });
    }
    if !(coverage_lower(d, a) <= n && n <= coverage_upper(d, a)) {
        return precondition(format!("{n} outside the interval for a = {a}"));
    }
    let mut e: Vec<i64> = (1..=d as i64 - 2).map(|i| i * a).collect();
    e.push(n - binom2(d as i64 - 1) * a);
    ScrollarProfile::new(e)
}
