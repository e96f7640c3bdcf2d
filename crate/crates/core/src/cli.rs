//! Command-line front end.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{build_certificate, CertifyConfig};
use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::family::{family_braid_index, family_pd, FamilySpec};
use crate::homfly::{homfly_with, mfw_bound, HomflyConfig, Strategy, DEFAULT_CAP};
use crate::lattice::{parse_lattice_link, LatticeLink, OrientationAssignment};
use crate::projection::project_seeded;
use crate::render;
use crate::seifert::{make_coherent, smooth};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
    Svg,
}

#[derive(Debug, Parser)]
#[command(name = "ropebound", version, about = "Lattice ropelength lower bounds")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// One bit per component, 1 reverses it; component 0 must stay 0.
    #[arg(long, global = true)]
    pub orientation: Option<String>,

    /// Largest crossing count the HOMFLY-PT engine will accept.
    #[arg(long, global = true, env = "ROPEBOUND_CAP", default_value_t = DEFAULT_CAP as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Perturbs the straight-chord layout of cord diagrams.
    #[arg(long, global = true, env = "ROPEBOUND_SEED", default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Evaluate orientations and columns on the thread pool.
    #[arg(long, global = true)]
    pub parallel: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a lattice link file.
    Validate { input: PathBuf },
    /// Regular projection: PD code and the cord diagram of each multi-cord column.
    Project { input: PathBuf },
    /// Number of Seifert circles of a PD file.
    Seifert { input: PathBuf },
    /// HOMFLY-PT polynomial of a PD file.
    Homfly { input: PathBuf },
    /// Full lower-bound certificate for a lattice link file.
    Bounds { input: PathBuf },
    /// PD code of a family member and its braid index.
    Family {
        /// torus2, twist or pretzel, or a full spec such as `pretzel(1,1,2)`.
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// SVG of a lattice link, a PD file, or (with --rewriting) the coherence
    /// rewriting of every column of a lattice link.
    Render {
        input: PathBuf,
        #[arg(long)]
        rewriting: bool,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })
}

fn read_lattice(path: &Path) -> Result<LatticeLink> {
    parse_lattice_link(&read(path)?)
}

fn read_pd(path: &Path) -> Result<PlanarDiagram> {
    PlanarDiagram::from_pd(&read(path)?)
}

fn orientation(cfg: &RunConfig, components: usize) -> Result<OrientationAssignment> {
    match &cfg.orientation {
        None => Ok(OrientationAssignment::forward(components)),
        Some(bits) => {
            let o = OrientationAssignment::parse(bits)?;
            if o.len() != components {
                return Err(Error::InvalidParameter(format!(
                    "orientation has {} bits but the input has {components} components",
                    o.len()
                )));
            }
            Ok(o)
        }
    }
}

fn homfly_config(cfg: &RunConfig) -> HomflyConfig {
    HomflyConfig { cap: cfg.cap as usize, parallel: cfg.parallel, strategy: Strategy::FirstArc }
}

fn structured<T: Serialize>(v: &T) -> Result<String> {
    toml::to_string(v).map_err(|e| Error::Internal(format!("serialization: {e}")))
}

#[derive(Serialize)]
struct ValidateReport {
    valid: bool,
    length: usize,
    components: usize,
    x_steps: usize,
    y_steps: usize,
    z_steps: usize,
}

#[derive(Serialize)]
struct ProjectReport {
    orientation: String,
    crossings: usize,
    pd: String,
    cord_diagrams: Vec<String>,
}

#[derive(Serialize)]
struct HomflyReport {
    homfly: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    b0: Option<i32>,
}

#[derive(Serialize)]
struct FamilyReport {
    family: String,
    pd: String,
    braid_index_formula: usize,
}

/// What a successful run produced, and whether a certificate check failed.
pub struct Outcome {
    pub output: String,
    pub check_failure: Option<String>,
}

impl From<String> for Outcome {
    fn from(output: String) -> Self {
        Outcome { output, check_failure: None }
    }
}

fn family_spec(name: &str, n: Option<usize>, k: Option<usize>, m: Option<usize>) -> Result<FamilySpec> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Error::InvalidParameter(format!("family {name} needs --{flag}")))
    };
    match name {
        "torus2" => Ok(FamilySpec::Torus2 { n: need(n, "n")? }),
        "twist" => Ok(FamilySpec::Twist { n: need(n, "n")? }),
        "pretzel" => Ok(FamilySpec::Pretzel { k: need(k, "k")?, m: need(m, "m")?, n: need(n, "n")? }),
        other => other.parse(),
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let fmt = cfg.format;
    let svg_only = |what: &str| Error::InvalidParameter(format!("{what} has no svg output; use render"));
    match &cfg.command {
        Command::Validate { input } => {
            let link = read_lattice(input)?;
            link.validate().into_result()?;
            let c = link.step_counts();
            let rep = ValidateReport {
                valid: true,
                length: link.length(),
                components: link.num_components(),
                x_steps: c.x_steps,
                y_steps: c.y_steps,
                z_steps: c.z_steps,
            };
            Ok(match fmt {
                Format::Text => format!(
                    "valid  L={}  components={}  steps={}/{}/{}\n",
                    rep.length, rep.components, rep.x_steps, rep.y_steps, rep.z_steps
                ),
                Format::Structured => structured(&rep)?,
                Format::Svg => return Err(svg_only("validate")),
            }
            .into())
        }
        Command::Project { input } => {
            let link = read_lattice(input)?;
            let o = orientation(cfg, link.num_components())?;
            let p = project_seeded(&link, &o, cfg.seed)?;
            let rep = ProjectReport {
                orientation: o.to_string(),
                crossings: p.diagram.num_crossings(),
                pd: p.diagram.to_pd(),
                cord_diagrams: p.cord_diagrams.iter().map(|cd| cd.to_text()).collect(),
            };
            Ok(match fmt {
                Format::Text => {
                    let mut s = format!("{}\n", rep.pd);
                    for cd in &rep.cord_diagrams {
                        s.push('\n');
                        s.push_str(cd);
                    }
                    s
                }
                Format::Structured => structured(&rep)?,
                Format::Svg => return Err(svg_only("project")),
            }
            .into())
        }
        Command::Seifert { input } => {
            let d = read_pd(input)?;
            let o = orientation(cfg, d.num_components())?;
            let s = smooth(&d.with_reversed(o.flags())).closed;
            Ok(match fmt {
                Format::Text => format!("{s}\n"),
                Format::Structured => format!("seifert_circles = {s}\n"),
                Format::Svg => return Err(svg_only("seifert")),
            }
            .into())
        }
        Command::Homfly { input } => {
            let d = read_pd(input)?;
            let o = orientation(cfg, d.num_components())?;
            let p = homfly_with(&d.with_reversed(o.flags()), &homfly_config(cfg))?;
            Ok(match fmt {
                Format::Text => format!("{p}\n"),
                Format::Structured => structured(&HomflyReport { homfly: p.to_string(), b0: mfw_bound(&p).ok() })?,
                Format::Svg => return Err(svg_only("homfly")),
            }
            .into())
        }
        Command::Bounds { input } => {
            let link = read_lattice(input)?;
            let cert = build_certificate(&link, &CertifyConfig { homfly: homfly_config(cfg) })?;
            let output = match fmt {
                Format::Text => format!("{}\n", cert.summary()),
                Format::Structured => cert.to_toml()?,
                Format::Svg => return Err(svg_only("bounds")),
            };
            let failed: Vec<String> = cert.failed().iter().map(|c| c.name.clone()).collect();
            let check_failure = (!failed.is_empty()).then(|| format!("certificate checks failed: {}", failed.join(", ")));
            Ok(Outcome { output, check_failure })
        }
        Command::Family { name, n, k, m } => {
            let f = family_spec(name, *n, *k, *m)?;
            let d = family_pd(&f, cfg.cap as usize)?;
            let rep = FamilyReport { family: f.to_string(), pd: d.to_pd(), braid_index_formula: family_braid_index(&f)? };
            Ok(match fmt {
                Format::Text => format!("{}\nbraid_index_formula={}\n", rep.pd, rep.braid_index_formula),
                Format::Structured => structured(&rep)?,
                Format::Svg => render::render_diagram(&d),
            }
            .into())
        }
        Command::Render { input, rewriting } => {
            let text = read(input)?;
            let is_pd = text.trim_start().starts_with("PD");
            if is_pd {
                if *rewriting {
                    return Err(Error::InvalidParameter("--rewriting needs a lattice link file".into()));
                }
                return Ok(render::render_diagram(&PlanarDiagram::from_pd(&text)?).into());
            }
            let link = parse_lattice_link(&text)?;
            if !*rewriting {
                link.validate().into_result()?;
                return Ok(render::render_lattice(&link).into());
            }
            let o = orientation(cfg, link.num_components())?;
            let p = project_seeded(&link, &o, cfg.seed)?;
            let after = p
                .cord_diagrams
                .iter()
                .map(|cd| make_coherent(cd).map(|r| r.realization))
                .collect::<Result<Vec<_>>>()?;
            let labels: Vec<String> =
                p.cord_diagrams.iter().map(|cd| format!("({}, {})", cd.column.cx, cd.column.cy)).collect();
            Ok(render::render_rewriting(&p.realizations, &after, &labels).into())
        }
    }
}

/// Exit status: 0 on success, 1 for bad input, 3 for a failed internal check.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_internal() {
        3
    } else {
        1
    }
}

pub fn main_with(cfg: RunConfig) -> i32 {
    let out = cfg.out.clone();
    match run(&cfg) {
        Ok(outcome) => {
            let written = match &out {
                Some(path) => std::fs::write(path, &outcome.output),
                None => {
                    print!("{}", outcome.output);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {}: {e}", out.unwrap_or_default().display());
                return 1;
            }
            match outcome.check_failure {
                Some(msg) => {
                    eprintln!("error: {msg}");
                    3
                }
                None => 0,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
