use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use scrollar::density::dim_trigonal;
use scrollar::exactmath::serde_rational;
use scrollar::polytopes::{lattice_points, polytope_p, polytope_q4, polytope_q4prime, LinearInequality};
use scrollar::rng::seeded;
use scrollar::{RationalPolytope, Rational};
use serde::Serialize;

use super::FigureArgs;
use crate::config::Config;
use crate::error::{usage, CliResult};
use crate::output::{versioned_json, RunManifest, Writer};

/// Sorted simplex with `x_3 <= x_1 + x_2`.
fn square_triangle() -> CliResult<RationalPolytope> {
    let cs = vec![
        LinearInequality::eq_terms(3, &[(0, 1), (1, 1), (2, 1)], 1),
        LinearInequality::le_terms(3, &[(0, -1)], 0),
        LinearInequality::le_terms(3, &[(0, 1), (1, -1)], 0),
        LinearInequality::le_terms(3, &[(1, 1), (2, -1)], 0),
        LinearInequality::le_terms(3, &[(2, 1), (0, -1), (1, -1)], 0),
    ];
    Ok(RationalPolytope::new("P4prime", 3, cs)?)
}

#[derive(Serialize)]
struct FinLine {
    h: i64,
    #[serde(with = "serde_rational")]
    e1: Rational,
    #[serde(with = "serde_rational::vec")]
    from: Vec<Rational>,
    #[serde(with = "serde_rational::vec")]
    to: Vec<Rational>,
}

#[derive(Serialize)]
struct ScatterPoint {
    g: i64,
    e: [i64; 2],
    dim: i64,
    count: usize,
}

pub fn figures(a: &FigureArgs, config: &Config, args: Vec<String>) -> CliResult<RunManifest> {
    let mut manifest = RunManifest::new("figures", args, config);
    let value = match a.which.as_str() {
        "triangle" => {
            let p4 = polytope_p(4)?.with_vertices()?;
            let tri = square_triangle()?.with_vertices()?;
            manifest.verdict("p4_vertices", p4.vertices.as_ref().map_or(0, Vec::len));
            manifest.verdict("p4prime_vertices", tri.vertices.as_ref().map_or(0, Vec::len));
            serde_json::json!({ "P4": p4, "P4prime": tri })
        }
        "q3d" => {
            let q = polytope_q4().with_vertices()?;
            let qp = polytope_q4prime().with_vertices()?;
            manifest.verdict("q4_vertices", q.vertices.as_ref().map_or(0, Vec::len));
            manifest.verdict("q4prime_vertices", qp.vertices.as_ref().map_or(0, Vec::len));
            serde_json::json!({ "Q4": q, "Q4prime": qp })
        }
        "fin-lines" => {
            if a.genus < 0 {
                return usage("genus must be nonnegative");
            }
            let lines = fin_lines(a.genus);
            manifest.verdict("lines", lines.len());
            serde_json::to_value(lines)?
        }
        "cubic-scatter" => {
            let pts = cubic_scatter(a.samples, a.base, config.seed)?;
            manifest.verdict("profiles", pts.len());
            serde_json::to_value(pts)?
        }
        other => return usage(format!("unknown figure {other:?} (triangle, q3d, fin-lines, cubic-scatter)")),
    };
    let mut w = Writer::new(&config.out_dir)?;
    let path = w.write_json(&format!("figure-{}.json", a.which), &value)?;
    if a.which != "cubic-scatter" {
        print!("{}", versioned_json(&value)?);
    }
    println!("wrote {}", path.display());
    w.finish(manifest)
}

/// For `h = 0, 1, ...`, `ē_1 = (h+1)/(g+3)` and the segment of normalized
/// quartic points with that `ē_1` and `f̄_1 = 2 ē_1`, kept while nonempty.
fn fin_lines(g: i64) -> Vec<FinLine> {
    let one = Rational::from_integer(1.into());
    let two = Rational::from_integer(2.into());
    let fifth = Rational::new(1.into(), 5.into());
    (0..=(g + 3) / 4)
        .filter_map(|h| {
            let e1 = Rational::new((h + 1).into(), (g + 3).into());
            if e1 > fifth {
                return None;
            }
            let f1 = &two * &e1;
            let from = vec![e1.clone(), f1.clone(), &one - &e1 * Rational::from_integer(3.into())];
            let half = (&one - &e1) / &two;
            let to = vec![e1.clone(), half.clone(), half];
            Some(FinLine { h, e1, from, to })
        })
        .collect()
}

/// Simulated trigonal profiles: for each genus in a fixed window, draw
/// profiles with weight `base^(dim - max dim)`.
fn cubic_scatter(samples: usize, base: u32, seed: u64) -> CliResult<Vec<ScatterPoint>> {
    if base < 2 {
        return usage("weight base must be at least 2");
    }
    let p3 = polytope_p(3)?;
    let mut rng = seeded(seed);
    let mut out = Vec::new();
    for g in (10..=60).step_by(10) {
        let profiles = lattice_points(3, g, &p3)?;
        let dims = profiles
            .iter()
            .map(|p| dim_trigonal(p.e[0], p.e[1]))
            .collect::<Result<Vec<_>, _>>()?;
        let top = *dims.iter().max().expect("P3 has lattice points for g >= 10");
        let weights: Vec<f64> = dims.iter().map(|&d| f64::from(base).powi((d - top) as i32)).collect();
        let dist = WeightedIndex::new(&weights).expect("weights are positive");
        let mut counts = vec![0usize; profiles.len()];
        for _ in 0..samples {
            counts[dist.sample(&mut rng)] += 1;
        }
        for ((p, d), count) in profiles.iter().zip(dims).zip(counts) {
            out.push(ScatterPoint { g, e: [p.e[0], p.e[1]], dim: d, count });
        }
    }
    Ok(out)
}
