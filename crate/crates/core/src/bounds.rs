//! Certificates for the lattice-step and ropelength lower bounds.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homfly::{absolute_mfw, homfly_with, mfw_bound, HomflyConfig, LaurentPoly2};
use crate::lattice::{choose_projection_axis, LatticeLink, OrientationAssignment};
use crate::projection::{project, Projection};
use crate::seifert::{make_coherent, rewrite_diagram, smooth, CoherentResult};

pub use crate::family::{family_braid_index, family_pd, FamilySpec};

/// `B/14`, a strict lower bound on ropelength.
pub fn ropelength_lower(b: i64) -> Result<Ratio<i64>> {
    if b < 1 {
        return Err(Error::InvalidParameter(format!("braid bound must be at least 1, got {b}")));
    }
    Ok(Ratio::new(b, 14))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepTable {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnEntry {
    pub cx: i64,
    pub cy: i64,
    pub cords: usize,
    pub closed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CordTable {
    pub total: usize,
    pub columns: Vec<ColumnEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertTable {
    pub naive: usize,
    pub rewritten: usize,
    pub crossings_naive: usize,
    pub crossings_rewritten: usize,
    /// Components meeting no multi-cord column.
    pub free_loops: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationRow {
    pub orientation: String,
    pub poly: String,
    pub e: i32,
    #[serde(rename = "E")]
    pub big_e: i32,
    pub b0: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomflyTable {
    pub naive: String,
    pub rewritten: String,
    pub rows: Vec<OrientationRow>,
    pub b0_max: i32,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub lhs: String,
    pub relation: String,
    pub rhs: String,
    pub pass: bool,
    pub vacuous: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derived {
    pub min_steps_at_least: i64,
    pub ropelength_greater_than: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsCertificate {
    pub length: usize,
    pub components: usize,
    pub relabel: String,
    pub orientation: String,
    pub steps: StepTable,
    pub cords: CordTable,
    pub seifert: SeifertTable,
    pub homfly: HomflyTable,
    pub checks: Vec<Check>,
    pub derived: Derived,
}

fn int_check(name: &str, lhs: i64, rel: &str, rhs: i64, vacuous: bool) -> Check {
    let pass = match rel {
        "<" => lhs < rhs,
        "<=" => lhs <= rhs,
        _ => lhs == rhs,
    };
    Check { name: name.into(), lhs: lhs.to_string(), relation: rel.into(), rhs: rhs.to_string(), pass, vacuous }
}

fn poly_check(name: &str, lhs: &str, rhs: &str) -> Check {
    Check { name: name.into(), lhs: lhs.into(), relation: "==".into(), rhs: rhs.into(), pass: lhs == rhs, vacuous: false }
}

/// The recorded checks, recomputed from the certificate's raw fields.
fn expected_checks(c: &BoundsCertificate) -> Vec<Check> {
    let sum_n = c.cords.total as i64;
    let horizontal = (c.steps.x + c.steps.y) as i64;
    let l = c.length as i64;
    let s = c.seifert.rewritten as i64;
    let vac = sum_n == 0;
    let witness_poly = c.homfly.rows.iter().find(|r| r.orientation == c.homfly.witness).map(|r| r.poly.as_str());
    vec![
        int_check("cords_le_horizontal_steps", sum_n, "<=", horizontal, vac),
        int_check("horizontal_steps_le_two_thirds_length", 3 * horizontal, "<=", 2 * l, false),
        int_check(
            "seifert_lt_three_halves_cords",
            2 * (s - c.seifert.free_loops as i64),
            "<",
            3 * sum_n,
            vac,
        ),
        int_check("seifert_lt_length", s, "<", l, false),
        int_check("b0_le_seifert", c.homfly.b0_max as i64, "<=", s, false),
        poly_check("homfly_rewrite_invariant", &c.homfly.rewritten, &c.homfly.naive),
        poly_check("homfly_witness_row", &c.homfly.rewritten, witness_poly.unwrap_or("missing")),
    ]
}

impl BoundsCertificate {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass || c.vacuous)
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !(c.pass || c.vacuous)).collect()
    }

    pub fn b0(&self) -> i32 {
        self.homfly.b0_max
    }

    /// Re-derive every check and bound from the recorded raw inputs.
    /// Returns the list of discrepancies; empty means the certificate is
    /// self-consistent.
    pub fn recheck(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.steps.x + self.steps.y + self.steps.z != self.length {
            out.push("step counts do not sum to the length".into());
        }
        if self.cords.columns.iter().map(|c| c.cords).sum::<usize>() != self.cords.total {
            out.push("per-column cord counts do not sum to the total".into());
        }
        for c in &self.cords.columns {
            if c.cords < 2 || c.closed + 1 > c.cords {
                out.push(format!("column ({}, {}) violates 2 <= n and k <= n - 1", c.cx, c.cy));
            }
        }
        let mut best = i32::MIN;
        for r in &self.homfly.rows {
            match LaurentPoly2::parse(&r.poly).and_then(|p| Ok((p.a_span()?, mfw_bound(&p)?))) {
                Ok(((e, big_e), b0)) => {
                    if (e, big_e, b0) != (r.e, r.big_e, r.b0) {
                        out.push(format!("row {} does not match its polynomial", r.orientation));
                    }
                    best = best.max(b0);
                }
                Err(e) => out.push(format!("row {}: {e}", r.orientation)),
            }
        }
        if best != self.homfly.b0_max {
            out.push("B0 is not the maximum over the rows".into());
        }
        if self.checks != expected_checks(self) {
            out.push("recorded checks differ from their recomputation".into());
        }
        let derived = derive(self.homfly.b0_max as i64);
        match derived {
            Ok(d) if d == self.derived => {}
            _ => out.push("derived bounds differ from their recomputation".into()),
        }
        out
    }

    /// `B0=…  s(K')=…  L=…  L(K) > p/q`
    pub fn summary(&self) -> String {
        format!(
            "B0={}  s(K')={}  L={}  L(K) > {}",
            self.homfly.b0_max, self.seifert.rewritten, self.length, self.derived.ropelength_greater_than
        )
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Internal(format!("certificate serialization: {e}")))
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::syntax(1, 1, e.to_string()))
    }
}

impl fmt::Display for BoundsCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary())
    }
}

fn derive(b0: i64) -> Result<Derived> {
    let r = ropelength_lower(b0)?;
    Ok(Derived { min_steps_at_least: b0 + 1, ropelength_greater_than: format!("{}/{}", r.numer(), r.denom()) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CertifyConfig {
    pub homfly: HomflyConfig,
}

/// Everything the pipeline computed for one orientation of a relabeled link.
#[derive(Debug, Clone)]
pub struct Rewritten {
    pub projection: Projection,
    pub coherent: Vec<CoherentResult>,
    pub diagram: crate::diagram::PlanarDiagram,
}

pub fn rewrite(link: &LatticeLink, orientation: &OrientationAssignment, parallel: bool) -> Result<Rewritten> {
    let projection = project(link, orientation)?;
    let coherent: Vec<CoherentResult> = if parallel {
        use rayon::prelude::*;
        projection.cord_diagrams.par_iter().map(make_coherent).collect::<Result<_>>()?
    } else {
        projection.cord_diagrams.iter().map(make_coherent).collect::<Result<_>>()?
    };
    let diagram = rewrite_diagram(&projection, &coherent)?;
    Ok(Rewritten { projection, coherent, diagram })
}

/// Run the whole pipeline and record every inequality, passing or not.
pub fn build_certificate(link: &LatticeLink, cfg: &CertifyConfig) -> Result<BoundsCertificate> {
    link.validate().into_result()?;
    let relabel = choose_projection_axis(&link.step_counts());
    let link = relabel.apply(link);
    let counts = link.step_counts();
    let c = link.num_components();

    let forward = rewrite(&link, &OrientationAssignment::forward(c), cfg.homfly.parallel)?;
    let mfw = absolute_mfw(&forward.diagram, &cfg.homfly)?;
    // witness flags are indexed by diagram component; bring them back to the
    // lattice and keep component 0 forward (total reversal changes nothing)
    let map = &forward.projection.component_map;
    let mut flags: Vec<bool> = (0..c).map(|i| mfw.witness.is_reversed(map[i])).collect();
    if flags[0] {
        flags.iter_mut().for_each(|f| *f = !*f);
    }
    let orientation = OrientationAssignment::new(flags)?;
    let w = rewrite(&link, &orientation, cfg.homfly.parallel)?;

    let naive_poly = homfly_with(&w.projection.diagram, &cfg.homfly)?;
    let rewritten_poly = homfly_with(&w.diagram, &cfg.homfly)?;
    let in_multi: Vec<bool> = {
        let mut v = vec![false; c];
        for cd in &w.projection.cord_diagrams {
            for cord in &cd.cords {
                if let Some(visit) = cord.visit {
                    v[visit.component] = true;
                }
            }
        }
        v
    };
    let columns = w
        .projection
        .cord_diagrams
        .iter()
        .zip(&w.coherent)
        .map(|(cd, r)| ColumnEntry { cx: cd.column.cx, cy: cd.column.cy, cords: cd.len(), closed: r.closed })
        .collect();
    let witness_key = mfw.witness.to_string();
    let mut cert = BoundsCertificate {
        length: link.length(),
        components: c,
        relabel: relabel.to_string(),
        orientation: orientation.to_string(),
        steps: StepTable { x: counts.x_steps, y: counts.y_steps, z: counts.z_steps },
        cords: CordTable { total: w.projection.total_cords(), columns },
        seifert: SeifertTable {
            naive: smooth(&w.projection.diagram).closed,
            rewritten: smooth(&w.diagram).closed,
            crossings_naive: w.projection.diagram.num_crossings(),
            crossings_rewritten: w.diagram.num_crossings(),
            free_loops: in_multi.iter().filter(|m| !**m).count(),
        },
        homfly: HomflyTable {
            naive: naive_poly.to_string(),
            rewritten: rewritten_poly.to_string(),
            rows: mfw
                .rows
                .iter()
                .map(|(o, r)| OrientationRow {
                    orientation: o.to_string(),
                    poly: r.poly.to_string(),
                    e: r.e,
                    big_e: r.big_e,
                    b0: r.b0,
                })
                .collect(),
            b0_max: mfw.b0_max,
            witness: witness_key,
        },
        checks: vec![],
        derived: derive(mfw.b0_max as i64)?,
    };
    cert.checks = expected_checks(&cert);
    Ok(cert)
}

/// As [`build_certificate`], but any failed check is a hard error.
pub fn certify(link: &LatticeLink, cfg: &CertifyConfig) -> Result<BoundsCertificate> {
    let cert = build_certificate(link, cfg)?;
    let failed: Vec<String> = cert.failed().iter().map(|c| c.name.clone()).collect();
    if !failed.is_empty() {
        return Err(Error::Internal(format!("certificate checks failed: {}", failed.join(", "))));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::parse_lattice_link;

    #[test]
    fn ropelength_fractions() {
        assert_eq!(ropelength_lower(2).unwrap(), Ratio::new(1, 7));
        assert_eq!(ropelength_lower(15).unwrap(), Ratio::new(15, 14));
        assert!(ropelength_lower(0).is_err());
        for b in 1..40 {
            assert!(ropelength_lower(b).unwrap() < ropelength_lower(b + 1).unwrap());
        }
    }

    #[test]
    fn split_unlink_certificate() {
        let l = parse_lattice_link("0 0 0\n1 0 0\n1 1 0\n0 1 0\n\n3 0 0\n4 0 0\n4 1 0\n3 1 0\n").unwrap();
        let c = certify(&l, &CertifyConfig::default()).unwrap();
        assert_eq!(c.b0(), 2);
        assert_eq!(c.cords.total, 0);
        assert_eq!(c.seifert.rewritten, 2);
        assert!(c.checks.iter().any(|k| k.vacuous));
        assert!(c.recheck().is_empty());
        let back = BoundsCertificate::from_toml(&c.to_toml().unwrap()).unwrap();
        assert_eq!(back, c);
        assert_eq!(c.summary(), "B0=2  s(K')=2  L=8  L(K) > 1/7");
    }

    #[test]
    fn tampering_is_detected() {
        let l = parse_lattice_link("0 0 0\n1 0 0\n1 1 0\n0 1 0\n").unwrap();
        let mut c = certify(&l, &CertifyConfig::default()).unwrap();
        assert!(c.recheck().is_empty());
        c.seifert.rewritten = 9;
        assert!(!c.recheck().is_empty());
    }
}
