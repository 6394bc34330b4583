use serde::{Deserialize, Serialize};

use super::profile::ScrollarProfile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    /// Any cover with this profile factors through a proper subcover.
    ForcedImprimitivity,
    /// No cover of an irreducible curve has this profile.
    Nonexistence,
}

/// One checkable claim about the sorted profile `(e_0 = 0, e_1, ...)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum DerivationStep {
    /// `2 e_i < e_{i+1}`: products of `x_0..x_i` have no room beyond index
    /// `i`, so the prefix spans a subalgebra of rank `i + 1`.
    PrefixGap { i: usize },
    /// `e_i + e_j < e_{j+1}`: the rank-`(i+1)` subalgebra maps the first
    /// `j + 1` basis elements into themselves.
    ModuleGap { i: usize, j: usize },
    /// `divisor` does not divide `of`.
    Indivisible { divisor: usize, of: usize },
    /// `divisor` divides `of`.
    Divisible { divisor: usize, of: usize },
    /// `e_{i+j} > e_i + e_j`: outside the primitive region.
    SubadditivityFails { i: usize, j: usize },
}

impl DerivationStep {
    pub fn holds(&self, e: &[i64]) -> bool {
        let get = |k: usize| e.get(k).copied();
        match *self {
            Self::PrefixGap { i } => matches!((get(i), get(i + 1)), (Some(a), Some(b)) if 2 * a < b),
            Self::ModuleGap { i, j } => {
                matches!((get(i), get(j), get(j + 1)), (Some(a), Some(b), Some(c)) if a + b < c)
            }
            Self::Indivisible { divisor, of } => divisor > 0 && of % divisor != 0,
            Self::Divisible { divisor, of } => divisor > 0 && of % divisor == 0,
            Self::SubadditivityFails { i, j } => {
                matches!((get(i), get(j), get(i + j)), (Some(a), Some(b), Some(c)) if c > a + b)
            }
        }
    }

    pub fn explain(&self, e: &[i64]) -> String {
        match *self {
            Self::PrefixGap { i } => format!(
                "2*e_{i} = {} < e_{} = {}: span(x_0..x_{i}) is a rank-{} subalgebra",
                2 * e[i],
                i + 1,
                e[i + 1],
                i + 1
            ),
            Self::ModuleGap { i, j } => format!(
                "e_{i} + e_{j} = {} < e_{} = {}: span(x_0..x_{j}) is a module of rank {} over it",
                e[i] + e[j],
                j + 1,
                e[j + 1],
                j + 1
            ),
            Self::Indivisible { divisor, of } => format!("{divisor} does not divide {of}"),
            Self::Divisible { divisor, of } => format!("{divisor} divides {of}"),
            Self::SubadditivityFails { i, j } => format!(
                "e_{} = {} > e_{i} + e_{j} = {}",
                i + j,
                e[i + j],
                e[i] + e[j]
            ),
        }
    }
}

/// Obstruction derived from degree-forced vanishing of structure constants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionCertificate {
    pub kind: CertificateKind,
    pub i: usize,
    pub j: Option<usize>,
    /// The violated divisibility or inequality, in words.
    pub violated: String,
    pub derivation: Vec<DerivationStep>,
}

impl ObstructionCertificate {
    /// Re-checks every step against the profile.
    pub fn replay(&self, p: &ScrollarProfile) -> bool {
        let e = p.with_zero();
        !self.derivation.is_empty() && self.derivation.iter().all(|s| s.holds(&e))
    }

    pub fn chain(&self, p: &ScrollarProfile) -> Vec<String> {
        let e = p.with_zero();
        self.derivation.iter().map(|s| s.explain(&e)).collect()
    }
}

/// Sound, incomplete search for profiles that force a subcover or cannot
/// occur at all.
///
/// A gap `2 e_i < e_{i+1}` makes `x_0..x_i` a subalgebra (a subfield of
/// degree `i + 1`), which needs `i + 1 | d`. Any further gap
/// `e_i + e_j < e_{j+1}` with `j > i` makes `x_0..x_j` a vector space over
/// it, which needs `i + 1 | j + 1`. Every `j` is tried, not only the last
/// one. Without a contradiction the first gap yields forced imprimitivity;
/// failing that, a violated subadditivity inequality does.
pub fn imprimitivity_certificate(p: &ScrollarProfile) -> Option<ObstructionCertificate> {
    let e = p.with_zero();
    let d = p.d;
    let mut forced: Option<usize> = None;
    for i in 1..d.saturating_sub(1) {
        let gap = DerivationStep::PrefixGap { i };
        if !gap.holds(&e) {
            continue;
        }
        if d % (i + 1) != 0 {
            return Some(ObstructionCertificate {
                kind: CertificateKind::Nonexistence,
                i,
                j: None,
                violated: format!("subfield degree {} must divide {d}", i + 1),
                derivation: vec![gap, DerivationStep::Indivisible { divisor: i + 1, of: d }],
            });
        }
        for j in i + 1..d - 1 {
            let module = DerivationStep::ModuleGap { i, j };
            if module.holds(&e) && (j + 1) % (i + 1) != 0 {
                return Some(ObstructionCertificate {
                    kind: CertificateKind::Nonexistence,
                    i,
                    j: Some(j),
                    violated: format!("module rank {} must be a multiple of {}", j + 1, i + 1),
                    derivation: vec![
                        gap,
                        module,
                        DerivationStep::Indivisible { divisor: i + 1, of: j + 1 },
                    ],
                });
            }
        }
        forced.get_or_insert(i);
    }
    if let Some(i) = forced {
        return Some(ObstructionCertificate {
            kind: CertificateKind::ForcedImprimitivity,
            i,
            j: None,
            violated: format!("e_{} > 2 e_{i}", i + 1),
            derivation: vec![
                DerivationStep::PrefixGap { i },
                DerivationStep::Divisible { divisor: i + 1, of: d },
            ],
        });
    }
    for i in 1..d {
        for j in i..d {
            if i + j > d - 1 {
                break;
            }
            let step = DerivationStep::SubadditivityFails { i, j };
            if step.holds(&e) {
                return Some(ObstructionCertificate {
                    kind: CertificateKind::ForcedImprimitivity,
                    i,
                    j: Some(j),
                    violated: format!("e_{} <= e_{i} + e_{j}", i + j),
                    derivation: vec![step],
                });
            }
        }
    }
    None
}
