use std::path::PathBuf;

use clap::Args;

mod construct;
mod density;
mod enumerate;
mod figures;
mod polytope;

pub use construct::construct;
pub use density::density;
pub use enumerate::enumerate;
pub use figures::figures;
pub use polytope::polytope;

#[derive(Debug, Args)]
pub struct PolytopeArgs {
    pub d: usize,
    /// P, Q (alias Q4), Q4prime, Q2 or Q3.
    pub which: String,
    /// Compute and print the vertex set.
    #[arg(long)]
    pub vertices: bool,
    /// Print the JSON document to stdout as well.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    pub d: usize,
    pub g: i64,
    /// Add region, concavity, certificate and fin columns.
    #[arg(long)]
    pub classify: bool,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// JSON construction spec.
    pub spec: PathBuf,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    pub d: usize,
    /// Grid resolution.
    #[arg(long, default_value_t = 12)]
    pub grid: i64,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    /// triangle, q3d, fin-lines or cubic-scatter.
    pub which: String,
    /// Genus for fin-lines.
    #[arg(long, default_value_t = 33)]
    pub genus: i64,
    /// Number of simulated points for cubic-scatter.
    #[arg(long, default_value_t = 2000)]
    pub samples: usize,
    /// Weight base for cubic-scatter: profiles are drawn with probability
    /// proportional to base^dim.
    #[arg(long, default_value_t = 2)]
    pub base: u32,
}

pub fn parse_convention(s: &str) -> Result<scrollar::Convention, String> {
    match s {
        "fixed-base" => Ok(scrollar::Convention::FixedBase),
        "modulo-aut" => Ok(scrollar::Convention::ModuloAut),
        other => Err(format!("unknown convention {other:?} (expected fixed-base or modulo-aut)")),
    }
}
