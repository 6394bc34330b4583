use scrollar::exactmath::rational_to_string;
use scrollar::polytopes::{polytope_p, polytope_q2_q3, polytope_q4, polytope_q4prime};
use scrollar::RationalPolytope;

use super::PolytopeArgs;
use crate::config::Config;
use crate::error::{usage, CliResult};
use crate::output::{versioned_json, RunManifest, Writer};

fn select(d: usize, which: &str) -> CliResult<RationalPolytope> {
    let p = match (which, d) {
        ("P", _) => polytope_p(d)?,
        ("Q" | "Q4", 4) => polytope_q4(),
        ("Q4prime" | "Qprime", 4) => polytope_q4prime(),
        ("Q2", 6) => polytope_q2_q3().0,
        ("Q3", 6) => polytope_q2_q3().1,
        ("Q" | "Q4" | "Q4prime" | "Qprime", _) => return usage(format!("{which} is defined only for d = 4")),
        ("Q2" | "Q3", _) => return usage(format!("{which} is defined only for d = 6")),
        _ => return usage(format!("unknown region {which:?} (P, Q, Q4prime, Q2, Q3)")),
    };
    Ok(p)
}

pub fn polytope(a: &PolytopeArgs, config: &Config, args: Vec<String>) -> CliResult<RunManifest> {
    let mut p = select(a.d, &a.which)?;
    let mut manifest = RunManifest::new("polytope", args, config);
    manifest.verdict("constraints", p.constraints.len());
    if a.vertices || a.json {
        p = p.with_vertices()?;
        let verts = p.vertices.as_ref().expect("just computed");
        manifest.verdict("vertices", verts.len());
        if a.vertices {
            for v in verts {
                let parts: Vec<String> = v.iter().map(rational_to_string).collect();
                println!("({})", parts.join(", "));
            }
        }
    }
    let mut w = Writer::new(&config.out_dir)?;
    let name = format!("polytope-{}-d{}.json", p.name, a.d);
    w.write_json(&name, &p)?;
    if a.json {
        print!("{}", versioned_json(&p)?);
    }
    w.finish(manifest)
}
