use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactmath::{serde_rational, BivarHomog, CoeffField, Rational, DEFAULT_PRIME};
use crate::polytopes::ScrollarProfile;
use crate::rng::DEFAULT_SEED;
use crate::woodalg::{PrefixSubalgebra, StructureTable, TableDocument};

/// Outcome of one verification step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotChecked,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    /// Every rescaled structure constant stayed polynomial.
    pub closure: Verdict,
    pub associativity: Verdict,
    /// Étale fibers over every modified point.
    pub etale: Verdict,
    /// `h^0(O_C) = 1`, i.e. all invariants positive.
    pub h0: Verdict,
}

/// How étaleness over a point was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EtaleMethod {
    /// Trace form of the fiber of the rescaled table.
    Fiber,
    /// Discriminant valuation after the `l`-fold substitution `s -> s^l, t -> t^l`.
    PowerSubstitution { l: u64 },
}

/// Per-point data of a Newton-polygon construction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointCheck {
    /// `(alpha, beta)` of the linear form `alpha s + beta t`.
    #[serde(with = "serde_rational::vec")]
    pub linear_form: Vec<Rational>,
    pub row: Vec<i64>,
    #[serde(with = "serde_rational::vec")]
    pub hull: Vec<Rational>,
    pub shifts: Vec<i64>,
    /// Multiplicity of the linear form in `Disc(F)`; `None` if the
    /// discriminant vanishes identically.
    pub disc_valuation: Option<u64>,
    /// `2 * sum_{i=1}^{d-1} b_i`.
    #[serde(with = "serde_rational")]
    pub expected_disc_valuation: Rational,
    pub etale: Verdict,
    pub method: EtaleMethod,
}

/// One cyclic factor of a compositum and whether its span is closed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpan {
    pub order: usize,
    pub branch_degree: usize,
    /// Basis indices of `1, z, ..., z^{p-1}`.
    pub indices: Vec<usize>,
    pub sub_profile: Vec<i64>,
    pub is_subalgebra: bool,
}

/// Result of a construction pipeline.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverReport {
    pub spec: ConstructionSpec,
    pub field: CoeffField,
    pub seed: u64,
    /// Number of draws used, counting the accepted one.
    pub attempts: u32,
    pub profile: ScrollarProfile,
    pub genus: i64,
    pub verdicts: Verdicts,
    /// Degree of the discriminant of the constructed algebra, `2 sum e_i`.
    pub disc_degree: i64,
    pub points: Vec<PointCheck>,
    /// `deg f_i - sum_j b^j_i` without floors, when it differs in kind from
    /// the integer profile.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_vec")]
    pub non_floored_profile: Option<Vec<Rational>>,
    pub subalgebras: Vec<PrefixSubalgebra>,
    pub factor_spans: Vec<FactorSpan>,
    pub notes: Vec<String>,
    pub table: TableDocument,
}

impl CoverReport {
    pub fn structure_table(&self) -> Result<StructureTable<BivarHomog>> {
        self.table.to_table()
    }

    pub fn all_pass(&self) -> bool {
        let v = self.verdicts;
        [v.closure, v.associativity, v.h0].iter().all(|x| x.is_pass()) && v.etale != Verdict::Fail
    }
}

mod opt_vec {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::exactmath::{parse_rational, rational_to_string, Rational};

    pub fn serialize<S: Serializer>(v: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref()
            .map(|xs| xs.iter().map(rational_to_string).collect::<Vec<_>>())
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Rational>>, D::Error> {
        let raw: Option<Vec<String>> = Option::deserialize(d)?;
        raw.map(|xs| {
            xs.iter()
                .map(|x| parse_rational(x).map_err(serde::de::Error::custom))
                .collect()
        })
        .transpose()
    }
}

/// A cyclic cover `z^p = f` with `deg f = r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicFactor {
    pub order: usize,
    pub branch_degree: usize,
}

/// Input of a construction pipeline.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "kebab-case")]
pub enum ConstructionSpec {
    Concave {
        e: Vec<i64>,
    },
    General {
        a_vec: Vec<i64>,
        k: i64,
        a: i64,
    },
    Multipoint {
        a_matrix: Vec<Vec<i64>>,
        /// Rows `[alpha, beta]` for `alpha s + beta t`.
        #[serde(with = "serde_rational::vecvec")]
        linear_forms: Vec<Vec<Rational>>,
        k: i64,
        a: i64,
    },
    CyclicCompositum {
        factors: Vec<CyclicFactor>,
    },
}

/// Sampling parameters shared by every pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildOptions {
    pub field: CoeffField,
    pub seed: u64,
    /// Maximum number of draws.
    pub retries: u32,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            field: CoeffField::PrimeField(DEFAULT_PRIME),
            seed: DEFAULT_SEED,
            retries: 5,
        }
    }
}

impl BuildOptions {
    pub fn with_seed(seed: u64) -> Self {
        BuildOptions { seed, ..Self::default() }
    }
}

/// Run the pipeline named by `spec`.
pub fn build(spec: &ConstructionSpec, opts: &BuildOptions) -> Result<CoverReport> {
    use super::{compositum, pipelines};
    match spec {
        ConstructionSpec::Concave { e } => pipelines::build_concave(e, opts),
        ConstructionSpec::General { a_vec, k, a } => pipelines::build_general(a_vec, *k, *a, opts),
        ConstructionSpec::Multipoint { a_matrix, linear_forms, k, a } => {
            let forms = linear_forms
                .iter()
                .map(|row| pipelines::linear_form(opts.field, row))
                .collect::<Result<Vec<_>>>()?;
            pipelines::build_multipoint(a_matrix, &forms, *k, *a, opts)
        }
        ConstructionSpec::CyclicCompositum { factors } => compositum::build_cyclic_compositum(factors, opts),
    }
}
