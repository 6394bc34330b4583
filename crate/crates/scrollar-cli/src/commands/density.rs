use scrollar::density::emit_density_grid;

use super::DensityArgs;
use crate::config::Config;
use crate::error::{usage, CliResult};
use crate::output::{RunManifest, Writer};

pub fn density(a: &DensityArgs, config: &Config, args: Vec<String>) -> CliResult<RunManifest> {
    match a.d {
        3 | 4 => {}
        5 => return usage("d = 5: classification unresolved, no refined density is available"),
        d => return usage(format!("densities exist for d = 3 and d = 4 only, not d = {d}")),
    }
    let grid = emit_density_grid(a.d, a.grid, config.convention)?;
    let csv = grid.to_csv();
    print!("{csv}");
    let mut manifest = RunManifest::new("density", args, config);
    manifest.verdict("rows", grid.rows.len());
    manifest.verdict("convention", config.convention.tag());
    let mut w = Writer::new(&config.out_dir)?;
    w.write(&format!("density-d{}-r{}-{}.csv", a.d, a.grid, config.convention.tag()), csv.as_bytes())?;
    w.finish(manifest)
}
