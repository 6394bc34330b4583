use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::table::StructureTable;
use crate::error::{Error, Result};
use crate::exactmath::{is_prime, parse_rational, rational_to_string, BivarHomog, CoeffField, Scalar};

/// One stored constant: coefficients of `s^{n-m} t^m` for `m = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantRecord {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeffs: Vec<String>,
}

/// Exchange form of a table of forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub degrees: Vec<i64>,
    pub field: CoeffField,
    pub constants: Vec<ConstantRecord>,
}

impl From<&StructureTable<BivarHomog>> for TableDocument {
    fn from(t: &StructureTable<BivarHomog>) -> Self {
        TableDocument {
            degrees: t.degrees().to_vec(),
            field: t.field(),
            constants: t
                .stored()
                .map(|(&(i, j, k), c)| ConstantRecord {
                    i,
                    j,
                    k,
                    coeffs: c.coeffs().iter().map(|x| rational_to_string(&x.to_rational())).collect(),
                })
                .collect(),
        }
    }
}

impl TableDocument {
    pub fn to_table(&self) -> Result<StructureTable<BivarHomog>> {
        if let CoeffField::PrimeField(p) = self.field {
            if !is_prime(p) {
                return Err(Error::InvalidModulus { modulus: p, reason: "not prime".into() });
            }
        }
        let mut constants = BTreeMap::new();
        for rec in &self.constants {
            if rec.coeffs.is_empty() {
                return Err(Error::Precondition(format!("constant ({},{},{}) has no coefficients", rec.i, rec.j, rec.k)));
            }
            let coeffs = rec
                .coeffs
                .iter()
                .map(|s| self.field.from_rational(&parse_rational(s)?))
                .collect::<Result<Vec<Scalar>>>()?;
            constants.insert((rec.i, rec.j, rec.k), BivarHomog::from_coeffs(coeffs));
        }
        let t = StructureTable::new(self.degrees.clone(), BivarHomog::constant(self.field.one()), constants)?;
        t.check_degrees().map_err(|e| Error::Precondition(e.to_string()))?;
        Ok(t)
    }
}
