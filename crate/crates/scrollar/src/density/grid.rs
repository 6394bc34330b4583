use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{dim_quartic, dim_trigonal, rho3, rho4_ref, Convention};
use crate::error::{precondition, Error, Result};
use crate::exactmath::{rat, rational_to_string, Rational};
use crate::quartic::{classify_quintuple, Quintuple, QuintupleClass};

/// Density values on a barycentric grid, in row order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityGrid {
    pub d: usize,
    pub resolution: i64,
    pub convention: Convention,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl DensityGrid {
    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Grid with denominator `resolution`. Besides the density variants each
/// row carries `lattice_ratio`: the stratum dimension at the integer point
/// (level `resolution`) over `dim H_{d,g}` in the chosen convention, `-1`
/// for an empty stratum.
///
/// `d = 3`: points `(i/R, 1 - i/R)` with `i/R <= 1/2`.
/// `d = 4`: sorted `e` and `f_1 <= f_2`, each block summing to one.
pub fn emit_density_grid(d: usize, resolution: i64, convention: Convention) -> Result<DensityGrid> {
    if resolution < 2 {
        return precondition("resolution must be at least 2");
    }
    let r = resolution;
    let s = |x: &Rational| rational_to_string(x);
    let (header, rows): (Vec<&str>, Vec<Vec<String>>) = match d {
        3 => {
            let g = r - 2;
            let rows = (0..=r / 2)
                .map(|i| {
                    let x = [rat(i, r), rat(r - i, r)];
                    let (e1, e2) = (i, r - i);
                    let dim = if e1 >= 1 && e2 <= 2 * e1 { dim_trigonal(e1, e2)? } else { -1 };
                    Ok(vec![
                        s(&x[0]),
                        s(&x[1]),
                        s(&rho3(&x)),
                        lattice_ratio(dim, 3, g, convention),
                        convention.tag().to_string(),
                    ])
                })
                .collect::<Result<Vec<_>>>()?;
            (vec!["x1", "x2", "rho", "lattice_ratio", "convention"], rows)
        }
        4 => {
            let g = r - 3;
            let mut points = Vec::new();
            for e1 in 0..=r / 3 {
                for e2 in e1..=(r - e1) / 2 {
                    for f1 in 0..=r / 2 {
                        points.push(([e1, e2, r - e1 - e2], [f1, r - f1]));
                    }
                }
            }
            let rows = points
                .par_iter()
                .map(|&(e, f)| {
                    let x = [rat(e[0], r), rat(e[1], r), rat(e[2], r), rat(f[0], r), rat(f[1], r)];
                    let v = rho4_ref(&x)?;
                    let q = Quintuple::new(e, f)?;
                    let dim = if classify_quintuple(&q) == QuintupleClass::Infeasible {
                        -1
                    } else {
                        dim_quartic(e, f)?
                    };
                    let mut row: Vec<String> = x.iter().map(s).collect();
                    row.extend([
                        s(&v.printed),
                        s(&v.limit),
                        s(&v.derived_closed),
                        lattice_ratio(dim, 4, g, convention),
                        convention.tag().to_string(),
                    ]);
                    Ok(row)
                })
                .collect::<Result<Vec<_>>>()?;
            (
                vec!["e1", "e2", "e3", "f1", "f2", "printed", "limit", "derived_closed", "lattice_ratio", "convention"],
                rows,
            )
        }
        _ => return Err(Error::DegreeOutOfRange { got: d, min: 3, max: 4 }),
    };
    Ok(DensityGrid {
        d,
        resolution,
        convention,
        header: header.into_iter().map(String::from).collect(),
        rows,
    })
}

fn lattice_ratio(dim: i64, d: usize, g: i64, convention: Convention) -> String {
    let denom = convention.hurwitz_dim(d, g);
    if denom <= 0 {
        return "nan".into();
    }
    rational_to_string(&rat(dim, denom))
}
