use scrollar::construct::{build, ConstructionSpec};

use super::ConstructArgs;
use crate::config::Config;
use crate::error::{CliError, CliResult};
use crate::output::{RunManifest, Writer};

pub fn construct(a: &ConstructArgs, config: &Config, args: Vec<String>) -> CliResult<RunManifest> {
    let text = std::fs::read_to_string(&a.spec)
        .map_err(|source| CliError::Io { path: a.spec.display().to_string(), source })?;
    let mut value: serde_json::Value = serde_json::from_str(&text)?;
    if let Some(obj) = value.as_object_mut() {
        obj.remove("schema_version");
    }
    let spec: ConstructionSpec = serde_json::from_value(value)?;
    let report = build(&spec, &config.build_options())?;

    let mut manifest = RunManifest::new("construct", args, config);
    let v = report.verdicts;
    manifest.verdict("closure", serde_json::to_value(v.closure)?.as_str().unwrap_or_default());
    manifest.verdict("associativity", serde_json::to_value(v.associativity)?.as_str().unwrap_or_default());
    manifest.verdict("etale", serde_json::to_value(v.etale)?.as_str().unwrap_or_default());
    manifest.verdict("h0", serde_json::to_value(v.h0)?.as_str().unwrap_or_default());
    manifest.verdict("profile", join(&report.profile.e));
    manifest.verdict("genus", report.genus);
    manifest.verdict("attempts", report.attempts);

    let stem = a.spec.file_stem().and_then(|s| s.to_str()).unwrap_or("spec");
    let mut w = Writer::new(&config.out_dir)?;
    let path = w.write_json(&format!("{stem}-report.json"), &report)?;
    println!("profile {} genus {} -> {}", join(&report.profile.e), report.genus, path.display());
    let manifest = w.finish(manifest)?;
    if report.all_pass() {
        Ok(manifest)
    } else {
        Err(CliError::Verdict(format!("{:?}", report.verdicts)))
    }
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}
