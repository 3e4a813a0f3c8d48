//! Command-line surface and dispatch.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use vogel_core::cycles::{cycle_degree, multiplicity_at, Cycle};
use vogel_core::intersect::{
    bullet, bullet_direct_linear, bullet_epsilon, polar_self_intersection_oracle, ruled_join, sv, sv_mass_check,
    BulletReport, LinearSystem,
};
use vogel_core::kernel::{parse_point, ProjPoint, Seed};

use crate::cycfile::{parse_forms, print_cycle, read_cycle};
use crate::error::{CliError, CliResult};
use crate::report::{
    bullet_json, bullet_text, cycle_json, degree_json, epsilon_json, polar_json, sv_json, to_canonical_json,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "vogel", version, about = "Exact intersection products of projective cycles")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct Sampling {
    /// Master seed, decimal or 0x-prefixed hex.
    #[arg(long, value_parser = parse_seed, default_value = "0x5EED")]
    pub seed: Seed,
    /// Independent runs used to separate fixed from moving parts.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(2..))]
    pub runs: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree of a cycle, per dimension and in total.
    Degree { file: PathBuf },
    /// Multiplicity of a cycle at a point.
    Mult {
        file: PathBuf,
        #[arg(long, value_parser = parse_proj_point)]
        point: ProjPoint,
    },
    /// Ruled join of several cycles.
    Join {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// One Stückrad–Vogel run against the linear forms of a system file.
    Sv {
        file: PathBuf,
        #[arg(long)]
        system: PathBuf,
        #[arg(long, value_parser = parse_seed, default_value = "0x5EED")]
        seed: Seed,
    },
    /// Intersection product of two or more cycles.
    Bullet {
        #[arg(required = true, num_args = 2..)]
        files: Vec<PathBuf>,
        /// Run the procedure in the ambient space with the first input's linear forms.
        #[arg(long)]
        direct_linear: bool,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Local intersection numbers at a point.
    Epsilon {
        #[arg(required = true, num_args = 2..)]
        files: Vec<PathBuf>,
        #[arg(long, value_parser = parse_proj_point)]
        point: ProjPoint,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Compares the product degree with the product of the input degrees.
    BezoutCheck {
        #[arg(required = true, num_args = 2..)]
        files: Vec<PathBuf>,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Meets a plane curve with a generic polar and splits the mass at the given points.
    PolarOracle {
        file: PathBuf,
        #[arg(long = "point", value_parser = parse_proj_point)]
        points: Vec<ProjPoint>,
        #[arg(long, value_parser = parse_seed, default_value = "0x5EED")]
        seed: Seed,
    },
}

pub fn parse_seed(s: &str) -> Result<Seed, String> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map(Seed).map_err(|_| format!("invalid seed {:?}", s))
}

fn parse_proj_point(s: &str) -> Result<ProjPoint, String> {
    parse_point(s).map_err(|e| e.to_string())
}

fn read_all(files: &[PathBuf]) -> CliResult<Vec<Cycle>> {
    files.iter().map(|p| read_cycle(p)).collect()
}

fn read_text(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn product(cycles: &[Cycle], direct_linear: bool, s: &Sampling) -> CliResult<BulletReport> {
    let runs = s.runs as usize;
    if direct_linear {
        let [a, c] = cycles else {
            return Err(CliError::Usage("--direct-linear takes exactly two inputs".into()));
        };
        Ok(bullet_direct_linear(a, c, s.seed, runs)?)
    } else {
        Ok(bullet(cycles, s.seed, runs)?)
    }
}

fn render(format: Format, json: String, text: impl FnOnce() -> CliResult<String>) -> CliResult<String> {
    match format {
        Format::Json => Ok(json + "\n"),
        Format::Text => text(),
    }
}

/// Executes a parsed command line and returns what goes to stdout.
pub fn run(cli: &Cli) -> CliResult<String> {
    let fmt = cli.format;
    match &cli.command {
        Command::Degree { file } => {
            let c = read_cycle(file)?;
            let t = cycle_degree(&c);
            render(fmt, to_canonical_json(&degree_json(&c, &t)), || {
                let mut out: String = t.by_dim.iter().map(|(d, v)| format!("dim {}: degree {}\n", d, v)).collect();
                out.push_str(&format!("total {}\n", t.total));
                Ok(out)
            })
        }
        Command::Mult { file, point } => {
            let c = read_cycle(file)?;
            let m = multiplicity_at(&c, point)?;
            let json = serde_json::json!({ "multiplicity": m, "point": point.to_string() });
            render(fmt, to_canonical_json(&json), || Ok(format!("multiplicity at {}: {}\n", point, m)))
        }
        Command::Join { files } => {
            let j = ruled_join(&read_all(files)?)?;
            render(fmt, to_canonical_json(&cycle_json(&j)), || Ok(print_cycle(&j)))
        }
        Command::Sv { file, system, seed } => {
            let c = read_cycle(file)?;
            let forms = parse_forms(&read_text(system)?, c.ambient())?;
            let sys = LinearSystem::new(c.ambient() + 1, forms)?;
            let out = sv(&c, &sys, *seed)?;
            let audit = sv_mass_check(&out, &c, sys.forms().len())?;
            let json = sv_json(c.ambient(), &out, audit.input_degree, audit.deficit);
            render(fmt, to_canonical_json(&json), || {
                let mut s = String::new();
                for (k, v) in out.inside.iter().enumerate() {
                    let deg: u64 = v.iter().map(|c| c.degree()).sum();
                    s.push_str(&format!("v{}: {} chunk(s), degree {}\n", k, v.len(), deg));
                }
                s.push_str(&format!(
                    "input {}, inside {}, residual {}, deficit {}\n",
                    audit.input_degree,
                    audit.inside_degree,
                    out.residual_degree(),
                    audit.deficit
                ));
                Ok(s)
            })
        }
        Command::Bullet { files, direct_linear, sampling } => {
            let r = product(&read_all(files)?, *direct_linear, sampling)?;
            render(fmt, to_canonical_json(&bullet_json(&r)?), || bullet_text(&r))
        }
        Command::Epsilon { files, point, sampling } => {
            let cycles = read_all(files)?;
            let (r, t) = bullet_epsilon(&cycles, point, sampling.seed, sampling.runs as usize)?;
            render(fmt, to_canonical_json(&epsilon_json(&r, &t)?), || {
                let mut s = bullet_text(&r)?;
                s.push_str(&format!("epsilon at {}: {:?}\n", t.point, t.values));
                Ok(s)
            })
        }
        Command::BezoutCheck { files, sampling } => {
            let cycles = read_all(files)?;
            let r = product(&cycles, false, sampling)?;
            let holds = r.rho < 0 || r.fulton_degree == r.bezout_product;
            let json = serde_json::json!({
                "bezout_product": r.bezout_product,
                "fulton_degree": r.fulton_degree,
                "holds": holds,
                "residual_degree": r.residual_degree,
                "rho": r.rho,
            });
            render(fmt, to_canonical_json(&json), || {
                Ok(format!(
                    "fulton {} vs bezout {} (rho {}, residual {}): {}\n",
                    r.fulton_degree,
                    r.bezout_product,
                    r.rho,
                    r.residual_degree,
                    if holds { "ok" } else { "MISMATCH" }
                ))
            })
        }
        Command::PolarOracle { file, points, seed } => {
            let c = read_cycle(file)?;
            let f = match c.chunks() {
                [ch] if ch.ideal().gens().len() == 1 && ch.coefficient() == 1 => ch.ideal().gens()[0].clone(),
                _ => return Err(CliError::Usage("polar-oracle expects a single reduced plane curve".into())),
            };
            let p = polar_self_intersection_oracle(&f, points, *seed)?;
            render(fmt, to_canonical_json(&polar_json(c.ambient(), &p)), || {
                let mut s = format!("total {}\n", p.total);
                for (x, m) in &p.at_points {
                    s.push_str(&format!("at {}: {}\n", x, m));
                }
                s.push_str(&format!("moving {}\n", p.moving));
                Ok(s)
            })
        }
    }
}
