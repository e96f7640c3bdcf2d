//! Cubic-lattice link embeddings: parsing, validation, step counting and the
//! choice of projection axis.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        LatticePoint { x, y, z }
    }

    pub fn coord(&self, axis: Axis) -> i64 {
        match axis {
            Axis::X => self.x,
            Axis::Y => self.y,
            Axis::Z => self.z,
        }
    }

    /// The axis along which `self` and `other` differ by one unit, if they
    /// are lattice neighbours.
    pub fn step_axis(&self, other: &LatticePoint) -> Option<Axis> {
        let d = [other.x - self.x, other.y - self.y, other.z - self.z];
        let nonzero: Vec<usize> = (0..3).filter(|&i| d[i] != 0).collect();
        match nonzero.as_slice() {
            [i] if d[*i].abs() == 1 => Some(Axis::ALL[*i]),
            _ => None,
        }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];
}

/// One closed polygon. The closing edge from the last vertex back to the
/// first is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeComponent {
    pub vertices: Vec<LatticePoint>,
}

impl LatticeComponent {
    pub fn new(vertices: Vec<LatticePoint>) -> Self {
        LatticeComponent { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Directed steps `(from, to)` in traversal order, closing edge included.
    pub fn steps(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// The same polygon traversed backwards, keeping vertex 0 first.
    pub fn reversed(&self) -> Self {
        let mut v = self.vertices.clone();
        if v.len() > 1 {
            v[1..].reverse();
        }
        LatticeComponent { vertices: v }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeLink {
    pub components: Vec<LatticeComponent>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepCounts {
    pub x_steps: usize,
    pub y_steps: usize,
    pub z_steps: usize,
}

impl StepCounts {
    pub fn total(&self) -> usize {
        self.x_steps + self.y_steps + self.z_steps
    }

    pub fn get(&self, axis: Axis) -> usize {
        match axis {
            Axis::X => self.x_steps,
            Axis::Y => self.y_steps,
            Axis::Z => self.z_steps,
        }
    }

    /// Counts seen through a relabeling.
    pub fn relabeled(&self, r: &AxisRelabel) -> StepCounts {
        StepCounts {
            x_steps: self.get(r.source(Axis::X)),
            y_steps: self.get(r.source(Axis::Y)),
            z_steps: self.get(r.source(Axis::Z)),
        }
    }
}

/// A coordinate permutation. `new[i] = old[perm[i]]`, i.e. `perm` names the
/// original axis that ends up in each new slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisRelabel {
    pub perm: [Axis; 3],
}

impl AxisRelabel {
    pub const IDENTITY: AxisRelabel = AxisRelabel {
        perm: [Axis::X, Axis::Y, Axis::Z],
    };

    pub fn source(&self, new_axis: Axis) -> Axis {
        self.perm[new_axis as usize]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn apply_point(&self, p: &LatticePoint) -> LatticePoint {
        LatticePoint::new(
            p.coord(self.perm[0]),
            p.coord(self.perm[1]),
            p.coord(self.perm[2]),
        )
    }

    pub fn apply(&self, link: &LatticeLink) -> LatticeLink {
        LatticeLink {
            components: link
                .components
                .iter()
                .map(|c| LatticeComponent::new(c.vertices.iter().map(|p| self.apply_point(p)).collect()))
                .collect(),
        }
    }
}

impl fmt::Display for AxisRelabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |a: Axis| match a {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        };
        write!(f, "{}{}{}", name(self.perm[0]), name(self.perm[1]), name(self.perm[2]))
    }
}

/// Pick the axis with the most steps as the new z. Ties prefer the original
/// z, then y, then x. The relabeling is a cyclic permutation of the axes, so
/// it is a rotation and never mirrors the link.
pub fn choose_projection_axis(counts: &StepCounts) -> AxisRelabel {
    let best = [Axis::Z, Axis::Y, Axis::X]
        .into_iter()
        .fold(Axis::Z, |best, a| if counts.get(a) > counts.get(best) { a } else { best });
    match best {
        Axis::Z => AxisRelabel::IDENTITY,
        Axis::Y => AxisRelabel {
            perm: [Axis::Z, Axis::X, Axis::Y],
        },
        Axis::X => AxisRelabel {
            perm: [Axis::Y, Axis::Z, Axis::X],
        },
    }
}

/// Direction flag per component; component 0 is always forward.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrientationAssignment {
    reversed: Vec<bool>,
}

impl OrientationAssignment {
    pub fn forward(components: usize) -> Self {
        OrientationAssignment {
            reversed: vec![false; components],
        }
    }

    pub fn new(reversed: Vec<bool>) -> Result<Self> {
        if reversed.first().copied().unwrap_or(false) {
            return Err(Error::InvalidParameter(
                "component 0 must keep its orientation".into(),
            ));
        }
        Ok(OrientationAssignment { reversed })
    }

    /// Parse a bit string such as `0110`.
    pub fn parse(bits: &str) -> Result<Self> {
        let reversed = bits
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidParameter(format!(
                    "orientation flag must be 0 or 1, got {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(reversed)
    }

    /// All 2^(c-1) assignments in binary counting order.
    pub fn enumerate(components: usize) -> Vec<Self> {
        if components == 0 {
            return vec![OrientationAssignment { reversed: vec![] }];
        }
        (0..1usize << (components - 1))
            .map(|mask| OrientationAssignment {
                reversed: (0..components)
                    .map(|i| i > 0 && (mask >> (i - 1)) & 1 == 1)
                    .collect(),
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.reversed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reversed.is_empty()
    }

    pub fn is_reversed(&self, component: usize) -> bool {
        self.reversed.get(component).copied().unwrap_or(false)
    }

    pub fn flags(&self) -> &[bool] {
        &self.reversed
    }
}

impl fmt::Display for OrientationAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &r in &self.reversed {
            f.write_str(if r { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    TooShort { component: usize, len: usize },
    NonUnitStep { component: usize, index: usize, from: LatticePoint, to: LatticePoint },
    RepeatedVertex { component: usize, index: usize, point: LatticePoint, first: (usize, usize) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooShort { component, len } => {
                write!(f, "component {component}: length {len} is shorter than 4")
            }
            Violation::NonUnitStep { component, index, from, to } => write!(
                f,
                "component {component}, step {index}: {from} -> {to} is not a unit lattice step"
            ),
            Violation::RepeatedVertex { component, index, point, first } => write!(
                f,
                "component {component}, vertex {index}: {point} repeats vertex {} of component {} (self-intersection)",
                first.1, first.0
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidLattice(
                self.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "),
            ))
        }
    }
}

impl LatticeLink {
    pub fn new(components: Vec<LatticeComponent>) -> Self {
        LatticeLink { components }
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    /// Total number of steps, L(K_c).
    pub fn length(&self) -> usize {
        self.components.iter().map(|c| c.len()).sum()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let mut seen: HashMap<LatticePoint, (usize, usize)> = HashMap::new();
        for (ci, comp) in self.components.iter().enumerate() {
            if comp.len() < 4 {
                violations.push(Violation::TooShort { component: ci, len: comp.len() });
            }
            for (i, p) in comp.vertices.iter().enumerate() {
                if let Some(&first) = seen.get(p) {
                    violations.push(Violation::RepeatedVertex { component: ci, index: i, point: *p, first });
                } else {
                    seen.insert(*p, (ci, i));
                }
            }
            if comp.len() >= 2 {
                for (i, (a, b)) in comp.steps().enumerate() {
                    if a.step_axis(&b).is_none() {
                        violations.push(Violation::NonUnitStep { component: ci, index: i, from: a, to: b });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn step_counts(&self) -> StepCounts {
        let mut c = StepCounts { x_steps: 0, y_steps: 0, z_steps: 0 };
        for comp in &self.components {
            for (a, b) in comp.steps() {
                match a.step_axis(&b) {
                    Some(Axis::X) => c.x_steps += 1,
                    Some(Axis::Y) => c.y_steps += 1,
                    Some(Axis::Z) => c.z_steps += 1,
                    None => {}
                }
            }
        }
        c
    }

    pub fn oriented(&self, orientation: &OrientationAssignment) -> LatticeLink {
        LatticeLink {
            components: self
                .components
                .iter()
                .enumerate()
                .map(|(i, c)| if orientation.is_reversed(i) { c.reversed() } else { c.clone() })
                .collect(),
        }
    }

    /// Serialize to the lattice text format: one `x y z` line per vertex and
    /// a blank line between components.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, comp) in self.components.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            for p in &comp.vertices {
                out.push_str(&format!("{} {} {}\n", p.x, p.y, p.z));
            }
        }
        out
    }
}

/// Parse the lattice text format. Comment lines start with `#`; blank lines
/// separate components. The result is not validated.
pub fn parse_lattice_link(text: &str) -> Result<LatticeLink> {
    let mut components = Vec::new();
    let mut current: Vec<LatticePoint> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        if raw.starts_with('#') {
            continue;
        }
        if raw.trim().is_empty() {
            if !current.is_empty() {
                components.push(LatticeComponent::new(std::mem::take(&mut current)));
            }
            continue;
        }
        let fields: Vec<&str> = raw.split(' ').collect();
        if fields.len() != 3 {
            return Err(Error::syntax(
                line,
                1,
                format!("expected `x y z` separated by single spaces, found {} field(s)", fields.len()),
            ));
        }
        let mut coords = [0i64; 3];
        let mut col = 1;
        for (k, f) in fields.iter().enumerate() {
            coords[k] = f
                .parse::<i64>()
                .map_err(|_| Error::syntax(line, col, format!("not an integer coordinate: {f:?}")))?;
            col += f.len() + 1;
        }
        current.push(LatticePoint::new(coords[0], coords[1], coords[2]));
    }
    if !current.is_empty() {
        components.push(LatticeComponent::new(current));
    }
    Ok(LatticeLink { components })
}
