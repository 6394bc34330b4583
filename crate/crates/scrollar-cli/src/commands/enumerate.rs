use scrollar::polytopes::{
    accept_all, concave_realizable, imprimitivity_certificate, nondecreasing_compositions, polytope_p,
    square_condition, CertificateKind,
};
use scrollar::{RationalPolytope, ScrollarProfile};

use super::EnumerateArgs;
use crate::config::Config;
use crate::error::{usage, CliResult};
use crate::output::{RunManifest, Writer};

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

/// `in_p, concave, certificate, fin` cells for one profile.
fn classify_row(p: &ScrollarProfile, region: &RationalPolytope) -> CliResult<[String; 4]> {
    let in_p = p.in_polytope(region)?;
    let concave = concave_realizable(p).map_or("-".to_string(), |w| join(&w.arrangement));
    let certificate = match imprimitivity_certificate(p) {
        Some(c) if c.kind == CertificateKind::Nonexistence => "nonexistent".to_string(),
        Some(_) => "imprimitive".to_string(),
        None => "-".to_string(),
    };
    // First gap 2 e_i < e_{i+1} that a subcover of degree i + 1 can absorb.
    let e = p.with_zero();
    let fin = (1..p.d - 1)
        .find(|&i| 2 * e[i] < e[i + 1] && p.d % (i + 1) == 0)
        .map_or("-".to_string(), |i| format!("degree-{} subcover", i + 1));
    Ok([in_p.to_string(), concave, certificate, fin])
}

/// Positive nondecreasing profiles of level `d + g - 1` satisfying the
/// square condition, in lexicographic order.
pub fn enumerate(a: &EnumerateArgs, config: &Config, args: Vec<String>) -> CliResult<RunManifest> {
    if a.d < 2 {
        return usage("degree must be at least 2");
    }
    if a.g < 0 {
        return usage("genus must be nonnegative");
    }
    let profiles: Vec<ScrollarProfile> = nondecreasing_compositions(a.d, a.d as i64 + a.g - 1, &[], &accept_all)
        .into_iter()
        .filter(square_condition)
        .collect();
    let region = polytope_p(a.d)?;
    let mut csv = String::from(if a.classify { "profile,genus,in_p,concave,certificate,fin\n" } else { "profile,genus\n" });
    let mut inside = 0;
    for p in &profiles {
        csv.push_str(&format!("{},{}", join(&p.e), p.genus()));
        if a.classify {
            let row = classify_row(p, &region)?;
            if row[0] == "true" {
                inside += 1;
            }
            csv.push(',');
            csv.push_str(&row.join(","));
        }
        csv.push('\n');
    }
    print!("{csv}");
    let mut manifest = RunManifest::new("enumerate", args, config);
    manifest.verdict("rows", profiles.len());
    if a.classify {
        manifest.verdict("in_p", inside);
    }
    let mut w = Writer::new(&config.out_dir)?;
    w.write(&format!("enumerate-d{}-g{}.csv", a.d, a.g), csv.as_bytes())?;
    w.finish(manifest)
}
