//! Tilted projection of a lattice link onto the xy-plane.
//!
//! Strands sharing a projected lattice edge are spread into parallel offsets
//! ordered by height (x-edges: higher z toward +y; y-edges: higher z toward
//! +x), so crossings can only happen inside the unit squares around lattice
//! columns. Each maximal visit of a strand to a square is a cord.

use std::collections::BTreeMap;

use crate::cord::{Column, Cord, CordDiagram, EndKind, Endpoint, Side, Slab, SquarePoint, Visit};
use crate::diagram::{Crossing, PlanarDiagram, Sign};
use crate::error::{Error, Result};
use crate::geometry::cross;
use crate::lattice::{Axis, LatticeLink, LatticePoint, OrientationAssignment};
use crate::seifert::{find_crossings, straight_realization, CordRealization};

#[derive(Debug, Clone)]
pub struct Projection {
    pub diagram: PlanarDiagram,
    /// Multi-cord columns, sorted by column.
    pub cord_diagrams: Vec<CordDiagram>,
    pub realizations: Vec<CordRealization>,
    /// Column hosting each crossing of `diagram`.
    pub crossing_columns: Vec<Column>,
    /// For each lattice component, its index among the diagram's components.
    pub component_map: Vec<usize>,
    pub components: usize,
}

impl Projection {
    /// `Σ nⱼ` over the multi-cord columns.
    pub fn total_cords(&self) -> usize {
        self.cord_diagrams.iter().map(|c| c.len()).sum()
    }
}

fn entry_side(from: &LatticePoint, to: &LatticePoint) -> Side {
    match (to.x - from.x, to.y - from.y) {
        (1, 0) => Side::W,
        (-1, 0) => Side::E,
        (0, 1) => Side::S,
        _ => Side::N,
    }
}

fn exit_side(from: &LatticePoint, to: &LatticePoint) -> Side {
    match (to.x - from.x, to.y - from.y) {
        (1, 0) => Side::E,
        (-1, 0) => Side::W,
        (0, 1) => Side::N,
        _ => Side::S,
    }
}

/// Cords of every component in traversal order.
fn component_cords(link: &LatticeLink) -> Vec<Vec<(Column, Cord)>> {
    link.components
        .iter()
        .enumerate()
        .map(|(ci, comp)| {
            let v = &comp.vertices;
            let m = v.len();
            let horizontal = |i: usize| v[i].step_axis(&v[(i + 1) % m]) != Some(Axis::Z);
            let Some(i0) = (0..m).find(|&i| horizontal(i)) else {
                return vec![];
            };
            let mut out = Vec::new();
            let mut run_start = (i0 + 1) % m;
            let (mut lo, mut hi) = (v[run_start].z, v[run_start].z);
            for k in 1..=m {
                let j = (i0 + k) % m;
                lo = lo.min(v[j].z);
                hi = hi.max(v[j].z);
                if !horizontal(j) {
                    continue;
                }
                let prev = (run_start + m - 1) % m;
                let next = (j + 1) % m;
                let cord = Cord {
                    slab: Slab::new(lo, hi),
                    visit: Some(Visit { component: ci, index: out.len() }),
                    entry: Some(SquarePoint { side: entry_side(&v[prev], &v[run_start]), z: v[run_start].z, rank: 0 }),
                    exit: Some(SquarePoint { side: exit_side(&v[j], &v[next]), z: v[j].z, rank: 0 }),
                };
                out.push((Column { cx: v[j].x, cy: v[j].y }, cord));
                run_start = next;
                lo = v[next].z;
                hi = v[next].z;
            }
            out
        })
        .collect()
}

/// Cords of one column, in traversal order of the components.
pub fn column_cords(link: &LatticeLink, column: Column) -> Vec<Cord> {
    component_cords(link)
        .into_iter()
        .flatten()
        .filter(|(c, _)| *c == column)
        .map(|(_, cord)| cord)
        .collect()
}

/// Counterclockwise position key of a boundary point: E bottom to top, N right
/// to left, W top to bottom, S left to right.
fn ccw_key(p: &SquarePoint) -> (u8, i64) {
    match p.side {
        Side::E => (0, p.z),
        Side::N => (1, -p.z),
        Side::W => (2, -p.z),
        Side::S => (3, p.z),
    }
}

fn build_cord_diagram(column: Column, mut cords: Vec<Cord>) -> Result<CordDiagram> {
    cords.sort_by_key(|c| c.slab);
    let mut pts: Vec<((u8, i64), Endpoint)> = Vec::new();
    for (i, c) in cords.iter().enumerate() {
        let (en, ex) = (c.entry.expect("lattice cord"), c.exit.expect("lattice cord"));
        pts.push((ccw_key(&en), Endpoint { cord: i, kind: EndKind::Start }));
        pts.push((ccw_key(&ex), Endpoint { cord: i, kind: EndKind::End }));
    }
    pts.sort_by_key(|p| p.0);
    for w in pts.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(Error::Internal(format!("two strands share a boundary point of column {column}")));
        }
    }
    // offset ranks along each side
    for side in 0..4u8 {
        let mut on_side: Vec<(i64, usize, bool)> = Vec::new();
        for (i, c) in cords.iter().enumerate() {
            for (p, is_entry) in [(c.entry.unwrap(), true), (c.exit.unwrap(), false)] {
                if ccw_key(&p).0 == side {
                    on_side.push((p.z, i, is_entry));
                }
            }
        }
        on_side.sort_unstable();
        for (rank, &(_, i, is_entry)) in on_side.iter().enumerate() {
            let p = if is_entry { cords[i].entry.as_mut() } else { cords[i].exit.as_mut() };
            p.unwrap().rank = rank;
        }
    }
    CordDiagram::new(column, cords, pts.into_iter().map(|p| p.1).collect())
}

/// Project an oriented lattice link whose projection axis is already `z`.
pub fn project(link: &LatticeLink, orientation: &OrientationAssignment) -> Result<Projection> {
    project_seeded(link, orientation, 0)
}

/// As [`project`], with `seed` offsetting the jitter of the straight-chord
/// routing inside each column.
pub fn project_seeded(link: &LatticeLink, orientation: &OrientationAssignment, seed: u64) -> Result<Projection> {
    link.validate().into_result()?;
    if orientation.len() != link.num_components() {
        return Err(Error::InvalidParameter(format!(
            "orientation has {} entries for {} components",
            orientation.len(),
            link.num_components()
        )));
    }
    let oriented = link.oriented(orientation);
    let mut by_column: BTreeMap<Column, Vec<Cord>> = BTreeMap::new();
    for (col, cord) in component_cords(&oriented).into_iter().flatten() {
        by_column.entry(col).or_default().push(cord);
    }
    let mut cord_diagrams = Vec::new();
    for (col, cords) in by_column {
        if cords.len() >= 2 {
            cord_diagrams.push(build_cord_diagram(col, cords)?);
        }
    }
    let counts = oriented.step_counts();
    let total: usize = cord_diagrams.iter().map(|c| c.len()).sum();
    if total > counts.x_steps + counts.y_steps {
        return Err(Error::Internal(format!("{total} cords exceed {} horizontal steps", counts.x_steps + counts.y_steps)));
    }
    let realizations = cord_diagrams
        .iter()
        .map(|cd| crate::seifert::straight_realization_seeded(cd, seed))
        .collect::<Result<Vec<_>>>()?;
    let (diagram, crossing_columns, component_map) =
        assemble(link.num_components(), &cord_diagrams, &realizations)?;
    Ok(Projection {
        diagram,
        cord_diagrams,
        realizations,
        crossing_columns,
        component_map,
        components: link.num_components(),
    })
}

struct Event {
    visit: Visit,
    seg: usize,
    t: crate::geometry::Q,
    crossing: usize,
    over: bool,
}

/// Assemble the global diagram from per-column realizations. Returns the
/// diagram, the column of each crossing, and the lattice-to-diagram component
/// map.
pub fn assemble(
    components: usize,
    cord_diagrams: &[CordDiagram],
    realizations: &[CordRealization],
) -> Result<(PlanarDiagram, Vec<Column>, Vec<usize>)> {
    let mut events: Vec<Event> = Vec::new();
    // per crossing: (over direction, under direction)
    let mut dirs: Vec<((i128, i128), (i128, i128))> = Vec::new();
    let mut columns = Vec::new();
    for (cd, r) in cord_diagrams.iter().zip(realizations) {
        if r.cords.len() != cd.len() || r.ends != cd.endpoint_positions() {
            return Err(Error::Internal(format!("realization does not match cord diagram at {}", cd.column)));
        }
        for x in find_crossings(&r.cords)? {
            let (ca, cb) = (x.a.0, x.b.0);
            if ca == cb {
                return Err(Error::Internal("cord crosses itself".into()));
            }
            let (sa, sb) = (cd.cords[ca].slab, cd.cords[cb].slab);
            let a_over = if sa.dominates(&sb) {
                true
            } else if sb.dominates(&sa) {
                false
            } else {
                return Err(Error::Internal("crossing cords with overlapping slabs".into()));
            };
            let id = dirs.len();
            let dir = |c: usize, s: usize| {
                let p = &r.cords[c];
                ((p[s + 1].x - p[s].x) as i128, (p[s + 1].y - p[s].y) as i128)
            };
            let (da, db) = (dir(ca, x.a.1), dir(cb, x.b.1));
            dirs.push(if a_over { (da, db) } else { (db, da) });
            columns.push(cd.column);
            for (c, seg, t, over) in [(ca, x.a.1, x.a.2, a_over), (cb, x.b.1, x.b.2, !a_over)] {
                let visit = cd.cords[c].visit.ok_or_else(|| Error::Internal("cord without visit".into()))?;
                events.push(Event { visit, seg, t, crossing: id, over });
            }
        }
    }
    let mut err = None;
    events.sort_by(|l, r| {
        l.visit.cmp(&r.visit).then(l.seg.cmp(&r.seg)).then_with(|| {
            l.t.try_cmp(&r.t).unwrap_or_else(|e| {
                err = Some(e);
                std::cmp::Ordering::Equal
            })
        })
    });
    if let Some(e) = err {
        return Err(e);
    }
    let n = dirs.len();
    // (under_in, under_out, over_in, over_out)
    let mut ends = vec![[0u32; 4]; n];
    let mut next_label = 1u32;
    let mut loops = 0;
    let mut component_map = vec![0; components];
    let mut with_crossings = Vec::new();
    let mut start = 0;
    for comp in 0..components {
        let end = start + events[start..].iter().take_while(|e| e.visit.component == comp).count();
        let evs = &events[start..end];
        if evs.is_empty() {
            loops += 1;
        } else {
            with_crossings.push(comp);
            let k = evs.len();
            for (i, e) in evs.iter().enumerate() {
                let arc_in = next_label + ((i + k - 1) % k) as u32;
                let arc_out = next_label + i as u32;
                let slot = if e.over { 2 } else { 0 };
                ends[e.crossing][slot] = arc_in;
                ends[e.crossing][slot + 1] = arc_out;
            }
            next_label += k as u32;
        }
        start = end;
    }
    let mut loop_idx = with_crossings.len();
    for (comp, slot) in component_map.iter_mut().enumerate() {
        *slot = match with_crossings.iter().position(|&c| c == comp) {
            Some(p) => p,
            None => {
                loop_idx += 1;
                loop_idx - 1
            }
        };
    }
    let crossings = (0..n)
        .map(|i| {
            let [ui, uo, oi, oo] = ends[i];
            let (da, db) = dirs[i];
            let c = cross(da, db);
            let sign = Sign::from_cross(c).ok_or_else(|| Error::Internal("parallel strands at a crossing".into()))?;
            let second = if sign == Sign::Pos { oo } else { oi };
            let fourth = if sign == Sign::Pos { oi } else { oo };
            Ok(Crossing::new([ui, second, uo, fourth], sign))
        })
        .collect::<Result<Vec<_>>>()?;
    let diagram = PlanarDiagram::new(crossings, loops)
        .map_err(|e| Error::Internal(format!("assembled diagram is invalid: {e}")))?;
    Ok((diagram, columns, component_map))
}

/// PD text of a diagram.
pub fn pd_code(d: &PlanarDiagram) -> String {
    d.to_pd()
}

/// Straight-chord realizations of a projection's cord diagrams.
pub fn straight_realizations(cds: &[CordDiagram]) -> Result<Vec<CordRealization>> {
    cds.iter().map(straight_realization).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::parse_lattice_link;

    fn link(text: &str) -> LatticeLink {
        parse_lattice_link(text).unwrap()
    }

    #[test]
    fn flat_square_has_no_crossings() {
        let l = link("0 0 0\n1 0 0\n1 1 0\n0 1 0\n");
        let p = project(&l, &OrientationAssignment::forward(1)).unwrap();
        assert_eq!(p.diagram.num_crossings(), 0);
        assert_eq!(p.diagram.num_components(), 1);
        assert!(p.cord_diagrams.is_empty());
    }

    #[test]
    fn stacked_squares_are_split() {
        let l = link("0 0 0\n1 0 0\n1 1 0\n0 1 0\n\n0 0 1\n1 0 1\n1 1 1\n0 1 1\n");
        let p = project(&l, &OrientationAssignment::forward(2)).unwrap();
        // The offset copies overlap and cross twice, the upper square on top
        // both times, so the diagram is still a split unlink.
        assert_eq!(p.diagram.num_crossings(), 2);
        assert_eq!(p.diagram.num_components(), 2);
        assert_eq!(p.cord_diagrams.len(), 4);
        let h = crate::homfly::homfly(&p.diagram).unwrap();
        assert_eq!(h, crate::homfly::LaurentPoly2::delta());
    }

    #[test]
    fn cords_of_a_column() {
        // passes straight through (1,0) at height 3
        let l = link("0 0 3\n1 0 3\n2 0 3\n2 1 3\n1 1 3\n0 1 3\n");
        let cs = column_cords(&l, Column { cx: 1, cy: 0 });
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].slab, Slab::new(3, 3));
        assert_eq!(cs[0].entry.unwrap().side, Side::W);
        assert_eq!(cs[0].exit.unwrap().side, Side::E);
        // climbs two z-steps inside (1,0)
        let l = link("0 0 2\n1 0 2\n1 0 3\n1 0 4\n2 0 4\n2 1 4\n2 1 3\n2 1 2\n1 1 2\n0 1 2\n");
        let cs = column_cords(&l, Column { cx: 1, cy: 0 });
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].slab, Slab::new(2, 4));
    }

    #[test]
    fn two_visits_give_two_cords() {
        let l = link(
            "0 0 0\n1 0 0\n2 0 0\n2 0 1\n2 0 2\n2 0 3\n2 0 4\n2 0 5\n1 0 5\n0 0 5\n0 0 4\n0 0 3\n0 0 2\n0 0 1\n",
        );
        let cs = column_cords(&l, Column { cx: 1, cy: 0 });
        assert_eq!(cs.len(), 2);
        assert!(cs[0].slab.disjoint(&cs[1].slab));
    }

    #[test]
    fn hopf_link_from_lattice() {
        // two linked squares
        let l = link(
            "0 0 0\n1 0 0\n2 0 0\n2 1 0\n2 2 0\n1 2 0\n0 2 0\n0 1 0\n\n1 1 -1\n1 1 0\n1 1 1\n1 2 1\n1 3 1\n1 3 0\n1 3 -1\n1 2 -1\n",
        );
        assert!(l.validate().is_valid());
        let p = project(&l, &OrientationAssignment::forward(2)).unwrap();
        assert_eq!(p.diagram.num_components(), 2);
        assert_eq!(p.diagram.num_crossings() % 2, 0);
        let h = crate::homfly::homfly(&p.diagram).unwrap();
        let hopf = crate::homfly::homfly(&crate::diagram::braid_closure(2, &[1, 1]).unwrap()).unwrap();
        let hopf_m = crate::homfly::homfly(&crate::diagram::braid_closure(2, &[-1, -1]).unwrap()).unwrap();
        assert!(h == hopf || h == hopf_m, "{h}");
    }
}
