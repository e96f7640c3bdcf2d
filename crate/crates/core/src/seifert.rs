//! Seifert smoothing of planar diagrams and of concrete cord realizations,
//! coherence testing, and the inductive coherent rerouting of a cord diagram.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::cord::{classify_overlap, companion_arc, ArcOnCircle, CircleOrientation, CordDiagram, Overlap, Slab};
use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::geometry::{intersect, winding_number, Edge, Hit, Pt, QPt, Seg, Q};

/// Radius of the boundary polygon used for realizations.
pub const RADIUS: f64 = 16384.0;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SeifertResult {
    pub closed: usize,
    /// For cord realizations: `(start boundary index, end boundary index)` of
    /// every partial circle, sorted by start. Empty for closed diagrams.
    pub matching: Vec<(usize, usize)>,
}

/// Number of Seifert circles `s(D)`.
pub fn smooth(d: &PlanarDiagram) -> SeifertResult {
    let mut next: BTreeMap<u32, u32> = BTreeMap::new();
    for c in d.crossings() {
        next.insert(c.under_in(), c.over_out());
        next.insert(c.over_in(), c.under_out());
    }
    let mut seen = BTreeSet::new();
    let mut circles = d.loops();
    for &a in next.keys() {
        if seen.contains(&a) {
            continue;
        }
        circles += 1;
        let mut cur = a;
        while seen.insert(cur) {
            cur = next[&cur];
        }
    }
    SeifertResult { closed: circles, matching: vec![] }
}

/// A concrete routing of the cords of a cord diagram inside a convex polygon
/// standing in for `C`. Boundary endpoint `k` sits at polygon vertex
/// `endpoint_vertex[k]`; polygon vertices run counterclockwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CordRealization {
    pub polygon: Vec<Pt>,
    pub endpoint_vertex: Vec<usize>,
    /// Per cord: boundary index of its start and end.
    pub ends: Vec<(usize, usize)>,
    pub slabs: Vec<Slab>,
    pub cords: Vec<Vec<Pt>>,
}

/// A crossing between two polyline segments: `(polyline, segment, parameter)`
/// on each side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyCrossing {
    pub a: (usize, usize, Q),
    pub b: (usize, usize, Q),
    pub point: QPt,
}

/// All crossings among a family of polylines, rejecting non-generic contact.
pub fn find_crossings(polys: &[Vec<Pt>]) -> Result<Vec<PolyCrossing>> {
    let mut segs: Vec<(usize, usize, Seg)> = Vec::new();
    for (p, poly) in polys.iter().enumerate() {
        for (s, w) in poly.windows(2).enumerate() {
            if w[0] == w[1] {
                return Err(Error::NonGeneric("zero-length segment".into()));
            }
            segs.push((p, s, Seg::new(w[0], w[1])));
        }
    }
    let mut out = Vec::new();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            let (pi, si, a) = segs[i];
            let (pj, sj, b) = segs[j];
            let adjacent = pi == pj && (si + 1 == sj || sj + 1 == si);
            match intersect(&a, &b)? {
                Hit::Miss => {}
                Hit::Touch if adjacent => {
                    // Consecutive segments share a vertex; anything more is a fold.
                    if crate::geometry::orient(a.a, a.b, b.b) == 0 && a.a != b.b {
                        let back = (a.b.x - a.a.x) * (b.b.x - b.a.x) + (a.b.y - a.a.y) * (b.b.y - b.a.y);
                        if back < 0 {
                            return Err(Error::NonGeneric("polyline folds back on itself".into()));
                        }
                    }
                }
                Hit::Touch => return Err(Error::NonGeneric("segments touch without crossing".into())),
                Hit::Proper { t, u } => {
                    out.push(PolyCrossing { a: (pi, si, t), b: (pj, sj, u), point: a.at(t)? });
                }
            }
        }
    }
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            if out[i].point == out[j].point {
                return Err(Error::NonGeneric("triple point".into()));
            }
        }
    }
    Ok(out)
}

/// Smoothed curve arrangement of a set of polylines.
#[derive(Debug, Clone)]
pub struct Smoothed {
    /// Open curves as `(first polyline, last polyline, edges)`.
    pub partials: Vec<(usize, usize, Vec<Edge>)>,
    pub closed: Vec<Vec<Edge>>,
}

fn piece_edges(poly: &[Pt], from: (usize, Q), to: (usize, Q)) -> Vec<Edge> {
    let seg = |s: usize| Seg::new(poly[s], poly[s + 1]);
    let mut out = Vec::new();
    if from.0 == to.0 {
        if from.1 != to.1 {
            out.push(Edge { seg: seg(from.0), t0: from.1, t1: to.1 });
        }
        return out;
    }
    if from.1 != Q::int(1) {
        out.push(Edge { seg: seg(from.0), t0: from.1, t1: Q::int(1) });
    }
    for s in from.0 + 1..to.0 {
        out.push(Edge::full(seg(s)));
    }
    if to.1 != Q::int(0) {
        out.push(Edge { seg: seg(to.0), t0: Q::int(0), t1: to.1 });
    }
    out
}

/// Replace every crossing by its orientation-respecting smoothing and follow
/// the resulting curves.
pub fn smooth_polylines(polys: &[Vec<Pt>]) -> Result<Smoothed> {
    let xs = find_crossings(polys)?;
    // cuts[p] = sorted (segment, parameter, crossing, side)
    let mut cuts: Vec<Vec<(usize, Q, usize, bool)>> = vec![Vec::new(); polys.len()];
    for (i, x) in xs.iter().enumerate() {
        cuts[x.a.0].push((x.a.1, x.a.2, i, true));
        cuts[x.b.0].push((x.b.1, x.b.2, i, false));
    }
    for c in cuts.iter_mut() {
        let mut err = None;
        c.sort_by(|l, r| {
            l.0.cmp(&r.0).then_with(|| {
                l.1.try_cmp(&r.1).unwrap_or_else(|e| {
                    err = Some(e);
                    Ordering::Equal
                })
            })
        });
        if let Some(e) = err {
            return Err(e);
        }
    }
    // position of each crossing's cut on each side
    let mut cut_pos = vec![[0usize; 2]; xs.len()];
    for c in &cuts {
        for (r, &(_, _, x, side)) in c.iter().enumerate() {
            cut_pos[x][if side { 0 } else { 1 }] = r;
        }
    }
    // piece (p, r) ends at cut r, or at the polyline end when r == cuts[p].len()
    let mut next: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    for (i, x) in xs.iter().enumerate() {
        let (pa, pb) = (x.a.0, x.b.0);
        let (ra, rb) = (cut_pos[i][0], cut_pos[i][1]);
        next.insert((pa, ra), (pb, rb + 1));
        next.insert((pb, rb), (pa, ra + 1));
    }
    let bounds = |p: usize, r: usize| -> ((usize, Q), (usize, Q)) {
        let c = &cuts[p];
        let start = if r == 0 { (0, Q::int(0)) } else { (c[r - 1].0, c[r - 1].1) };
        let end = if r == c.len() { (polys[p].len() - 2, Q::int(1)) } else { (c[r].0, c[r].1) };
        (start, end)
    };
    let mut visited: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut partials = Vec::new();
    for p in 0..polys.len() {
        let mut cur = (p, 0);
        let mut edges = Vec::new();
        loop {
            if !visited.insert(cur) {
                return Err(Error::Internal("smoothing revisited a piece".into()));
            }
            let (s, e) = bounds(cur.0, cur.1);
            edges.extend(piece_edges(&polys[cur.0], s, e));
            match next.get(&cur) {
                Some(&n) => cur = n,
                None => break,
            }
        }
        partials.push((p, cur.0, edges));
    }
    let mut closed = Vec::new();
    for p in 0..polys.len() {
        for r in 0..=cuts[p].len() {
            if visited.contains(&(p, r)) {
                continue;
            }
            let mut cur = (p, r);
            let mut edges = Vec::new();
            while visited.insert(cur) {
                let (s, e) = bounds(cur.0, cur.1);
                edges.extend(piece_edges(&polys[cur.0], s, e));
                cur = *next
                    .get(&cur)
                    .ok_or_else(|| Error::Internal("open piece left after partials".into()))?;
            }
            closed.push(edges);
        }
    }
    Ok(Smoothed { partials, closed })
}

/// Geometric smoothing of a realization: closed count and the start→end
/// matching of the partial circles.
pub fn smooth_cord_realization(r: &CordRealization) -> Result<SeifertResult> {
    let sm = smooth_polylines(&r.cords)?;
    let mut matching: Vec<(usize, usize)> = sm.partials.iter().map(|(a, b, _)| (r.ends[*a].0, r.ends[*b].1)).collect();
    matching.sort_unstable();
    if matching.len() != r.cords.len() {
        return Err(Error::Internal("partial circle count differs from cord count".into()));
    }
    Ok(SeifertResult { closed: sm.closed.len(), matching })
}

/// Turn direction at `b`; crossing points carry unrelated denominators, so
/// this one predicate works in arbitrary precision.
fn orient3(a: &QPt, b: &QPt, c: &QPt) -> i128 {
    let big = |q: Q| BigRational::new(BigInt::from(q.num()), BigInt::from(q.den()));
    let (ax, ay, bx, by, cx, cy) = (big(a.x), big(a.y), big(b.x), big(b.y), big(c.x), big(c.y));
    let v = (&bx - &ax) * (&cy - &ay) - (&by - &ay) * (&cx - &ax);
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// +1 for a counterclockwise simple closed chain, −1 for clockwise, read off
/// the turn at its lowest-leftmost vertex.
fn chain_orientation(edges: &[Edge]) -> Result<i128> {
    let pts: Vec<QPt> = edges.iter().map(|e| e.start()).collect::<Result<_>>()?;
    let mut best = 0;
    for i in 1..pts.len() {
        let ord = pts[i].x.try_cmp(&pts[best].x)?.then(pts[i].y.try_cmp(&pts[best].y)?);
        if ord == Ordering::Less {
            best = i;
        }
    }
    let n = pts.len();
    let mut k = 1;
    loop {
        let prev = &pts[(best + n - k) % n];
        let next = &pts[(best + k) % n];
        let o = orient3(prev, &pts[best], next);
        if o != 0 || k >= n / 2 {
            return Ok(o);
        }
        k += 1;
    }
}

impl CordRealization {
    fn boundary_path(&self, from: usize, to: usize, increasing: bool) -> Vec<Edge> {
        let m = self.polygon.len();
        let (mut i, target) = (self.endpoint_vertex[from], self.endpoint_vertex[to]);
        let mut out = Vec::new();
        while i != target {
            let j = if increasing { (i + 1) % m } else { (i + m - 1) % m };
            out.push(Edge::full(Seg::new(self.polygon[i], self.polygon[j])));
            i = j;
        }
        out
    }

    fn modulus(&self) -> usize {
        self.endpoint_vertex.len()
    }
}

/// Coherence test for one orientation of `C`; returns the first violation found.
pub fn coherence_violation(r: &CordRealization, orientation: CircleOrientation) -> Result<Option<String>> {
    let sm = smooth_polylines(&r.cords)?;
    let want = match orientation {
        CircleOrientation::Clockwise => -1,
        CircleOrientation::Counterclockwise => 1,
    };
    for (i, z) in sm.closed.iter().enumerate() {
        if chain_orientation(z)? != want {
            return Ok(Some(format!("closed circle {i} is not co-oriented with C")));
        }
    }
    let sample = |edges: &[Edge]| -> Result<QPt> { edges[0].sample() };
    for i in 0..sm.closed.len() {
        for j in i + 1..sm.closed.len() {
            let a_in_b = winding_number(&sm.closed[j], &sample(&sm.closed[i])?)? != 0;
            let b_in_a = winding_number(&sm.closed[i], &sample(&sm.closed[j])?)? != 0;
            if !a_in_b && !b_in_a {
                return Ok(Some(format!("closed circles {i} and {j} are not nested")));
            }
        }
    }
    let m = r.modulus();
    let mut domains = Vec::new();
    let mut comps = Vec::new();
    for (a, b, edges) in &sm.partials {
        let (s, e) = (r.ends[*a].0, r.ends[*b].1);
        let comp = companion_arc(s, e, m, orientation)?;
        let mut dom = edges.clone();
        dom.extend(r.boundary_path(e, s, !comp.increasing));
        domains.push(dom);
        comps.push(comp);
    }
    for (i, dom) in domains.iter().enumerate() {
        for (j, z) in sm.closed.iter().enumerate() {
            if winding_number(dom, &sample(z)?)? != 0 {
                return Ok(Some(format!("domain of partial circle {i} contains closed circle {j}")));
            }
        }
    }
    // Smoothed curves never cross, so one sample decides whether a whole
    // partial circle lies in another's domain.
    let samples: Vec<QPt> = sm.partials.iter().map(|p| sample(&p.2)).collect::<Result<_>>()?;
    for i in 0..domains.len() {
        for j in 0..domains.len() {
            if i == j {
                continue;
            }
            let inside = winding_number(&domains[i], &samples[j])? != 0;
            let rel = classify_overlap(&comps[i], &comps[j])?;
            let ok = match rel {
                Overlap::Disjoint => !inside,
                Overlap::Nested if comps[j].is_within(&comps[i]) => inside,
                Overlap::Nested => !inside,
                Overlap::SingleArc | Overlap::TwoArcs => false,
            };
            if !ok {
                return Ok(Some(format!("domains of partial circles {i} and {j} are neither disjoint nor nested")));
            }
        }
    }
    Ok(None)
}

/// The orientation of `C` (clockwise tried first) under which the
/// realization is coherent, if any.
pub fn coherent_orientation(r: &CordRealization) -> Result<Option<CircleOrientation>> {
    for o in [CircleOrientation::Clockwise, CircleOrientation::Counterclockwise] {
        if coherence_violation(r, o)?.is_none() {
            return Ok(Some(o));
        }
    }
    Ok(None)
}

pub fn is_coherent(r: &CordRealization) -> Result<bool> {
    Ok(coherent_orientation(r)?.is_some())
}

/// Angular layout of `C`: endpoint angles plus two interior directions per
/// gap between consecutive endpoints.
struct Layout {
    endpoint_angles: Vec<f64>,
}

impl Layout {
    fn new(points: usize, seed: u64) -> Self {
        let step = 2.0 * PI / points as f64;
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let endpoint_angles = (0..points)
            .map(|k| {
                let jitter = if seed == 0 {
                    0.0
                } else {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((state >> 33) as f64 / (1u64 << 31) as f64 - 0.5) * 0.5
                };
                (k as f64 + 0.1 + jitter) * step
            })
            .collect();
        Layout { endpoint_angles }
    }

    fn gap_angle(&self, g: usize, h: usize) -> f64 {
        let n = self.endpoint_angles.len();
        let a = self.endpoint_angles[g];
        let b = if g + 1 == n { self.endpoint_angles[0] + 2.0 * PI } else { self.endpoint_angles[g + 1] };
        a + (b - a) * (h as f64 + 1.0) / 3.0
    }

    fn point(angle: f64, rho: f64) -> Pt {
        Pt::new((RADIUS * rho * angle.cos()).round() as i64, (RADIUS * rho * angle.sin()).round() as i64)
    }

    fn polygon(&self) -> (Vec<Pt>, Vec<usize>) {
        let mut poly = Vec::new();
        let mut idx = Vec::new();
        for g in 0..self.endpoint_angles.len() {
            idx.push(poly.len());
            poly.push(Self::point(self.endpoint_angles[g], 1.0));
            poly.push(Self::point(self.gap_angle(g, 0), 1.0));
            poly.push(Self::point(self.gap_angle(g, 1), 1.0));
        }
        (poly, idx)
    }
}

fn empty_realization(cd: &CordDiagram) -> CordRealization {
    CordRealization {
        polygon: vec![],
        endpoint_vertex: vec![],
        ends: vec![],
        slabs: cd.cords.iter().map(|c| c.slab).collect(),
        cords: vec![],
    }
}

/// Straight chords between the endpoints, with the endpoint angles jittered
/// until the arrangement is generic.
pub fn straight_realization(cd: &CordDiagram) -> Result<CordRealization> {
    straight_realization_seeded(cd, 0)
}

/// As [`straight_realization`], starting the jitter sequence at `seed`.
pub fn straight_realization_seeded(cd: &CordDiagram, seed: u64) -> Result<CordRealization> {
    if cd.is_empty() {
        return Ok(empty_realization(cd));
    }
    let ends = cd.endpoint_positions();
    for attempt in 0..64u64 {
        let layout = Layout::new(cd.boundary.len(), seed.wrapping_add(attempt));
        let (polygon, endpoint_vertex) = layout.polygon();
        let cords: Vec<Vec<Pt>> =
            ends.iter().map(|&(s, e)| vec![polygon[endpoint_vertex[s]], polygon[endpoint_vertex[e]]]).collect();
        match find_crossings(&cords) {
            Ok(_) => {
                return Ok(CordRealization {
                    polygon,
                    endpoint_vertex,
                    ends,
                    slabs: cd.cords.iter().map(|c| c.slab).collect(),
                    cords,
                })
            }
            Err(Error::NonGeneric(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::NonGeneric("no generic straight-chord layout found".into()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherentResult {
    pub realization: CordRealization,
    pub closed: usize,
    pub matching: Vec<(usize, usize)>,
    /// Parent of each partial circle (indexed like `matching`) in the nesting
    /// of their domains.
    pub forest: Vec<Option<usize>>,
    /// Per inserted cord, whether its companion met some existing partial
    /// companion in two disjoint arcs.
    pub two_arc_insertions: Vec<bool>,
    pub orientation: CircleOrientation,
}

/// Track radius of the `t`-th inserted cord out of `n`; later cords lie
/// outside earlier ones.
fn track_radius(t: usize, n: usize) -> f64 {
    0.3 + 0.55 * (t as f64 + 1.0) / (n as f64 + 1.0)
}

/// Route a cord from boundary index `s` clockwise to `e` along the track at
/// radius `rho`.
fn track_route(layout: &Layout, polygon: &[Pt], vertex: &[usize], s: usize, e: usize, rho: f64) -> Vec<Pt> {
    let m = layout.endpoint_angles.len();
    let mut path = vec![polygon[vertex[s]]];
    let mut g = (s + m - 1) % m;
    loop {
        path.push(Layout::point(layout.gap_angle(g, 1), rho));
        path.push(Layout::point(layout.gap_angle(g, 0), rho));
        if g == e {
            break;
        }
        g = (g + m - 1) % m;
    }
    path.push(polygon[vertex[e]]);
    path
}

/// Reroute the cords one at a time in ascending slab order so that the
/// Seifert diagram stays coherent for the clockwise orientation of `C`.
pub fn make_coherent(cd: &CordDiagram) -> Result<CoherentResult> {
    let n = cd.len();
    if n == 0 {
        return Ok(CoherentResult {
            realization: empty_realization(cd),
            closed: 0,
            matching: vec![],
            forest: vec![],
            two_arc_insertions: vec![],
            orientation: CircleOrientation::Clockwise,
        });
    }
    let layout = Layout::new(cd.boundary.len(), 0);
    let (polygon, endpoint_vertex) = layout.polygon();
    let ends = cd.endpoint_positions();
    let m = cd.boundary.len();
    let cw = CircleOrientation::Clockwise;
    let mut cords: Vec<Vec<Pt>> = Vec::with_capacity(n);
    let mut closed = 0;
    let mut flags = Vec::with_capacity(n);
    for (t, &(s, e)) in ends.iter().enumerate() {
        let new_comp = companion_arc(s, e, m, cw)?;
        let mut two_arc = false;
        if t > 0 {
            let prefix = smooth_polylines(&cords)?;
            for (a, b, _) in &prefix.partials {
                let comp = companion_arc(ends[*a].0, ends[*b].1, m, cw)?;
                if classify_overlap(&new_comp, &comp)? == Overlap::TwoArcs {
                    two_arc = true;
                }
            }
        }
        cords.push(track_route(&layout, &polygon, &endpoint_vertex, s, e, track_radius(t, n)));
        let now = smooth_polylines(&cords)?;
        let expected = closed + usize::from(two_arc);
        if now.closed.len() != expected {
            return Err(Error::Internal(format!(
                "inserting cord {t} gave {} closed circles, expected {expected}",
                now.closed.len()
            )));
        }
        closed = expected;
        flags.push(two_arc);
    }
    let realization = CordRealization {
        polygon,
        endpoint_vertex,
        ends,
        slabs: cd.cords.iter().map(|c| c.slab).collect(),
        cords,
    };
    let res = smooth_cord_realization(&realization)?;
    if res.closed + 1 > n {
        return Err(Error::Internal(format!("{} closed circles from {n} cords", res.closed)));
    }
    if let Some(v) = coherence_violation(&realization, cw)? {
        return Err(Error::Internal(format!("rerouted cord diagram is not coherent: {v}")));
    }
    let comps: Vec<ArcOnCircle> =
        res.matching.iter().map(|&(s, e)| companion_arc(s, e, m, cw)).collect::<Result<_>>()?;
    let forest = nesting_forest(&comps);
    Ok(CoherentResult {
        realization,
        closed: res.closed,
        matching: res.matching,
        forest,
        two_arc_insertions: flags,
        orientation: cw,
    })
}

/// Splice each column's coherent routing into the projection, giving the
/// rewritten diagram `K′`. Over/under is again decided by slab height.
pub fn rewrite_diagram(p: &crate::projection::Projection, coherent: &[CoherentResult]) -> Result<PlanarDiagram> {
    if coherent.len() != p.cord_diagrams.len() {
        return Err(Error::Internal(format!(
            "{} coherent results for {} cord diagrams",
            coherent.len(),
            p.cord_diagrams.len()
        )));
    }
    let mut realizations = Vec::with_capacity(coherent.len());
    for (cd, c) in p.cord_diagrams.iter().zip(coherent) {
        if c.realization.ends != cd.endpoint_positions() || c.realization.slabs.len() != cd.len() {
            return Err(Error::Internal(format!("endpoint order mismatch at column {}", cd.column)));
        }
        realizations.push(c.realization.clone());
    }
    if p.cord_diagrams.is_empty() {
        return Ok(p.diagram.clone());
    }
    Ok(crate::projection::assemble(p.components, &p.cord_diagrams, &realizations)?.0)
}

/// Innermost strictly containing companion for each companion.
fn nesting_forest(comps: &[ArcOnCircle]) -> Vec<Option<usize>> {
    let span = |c: &ArcOnCircle| {
        let (lo, hi) = if c.increasing { (c.from, c.to) } else { (c.to, c.from) };
        (hi + c.modulus - lo) % c.modulus
    };
    (0..comps.len())
        .map(|i| {
            (0..comps.len())
                .filter(|&j| j != i && comps[i].is_within(&comps[j]))
                .min_by_key(|&j| span(&comps[j]))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::braid_closure;

    fn cd(text: &str) -> CordDiagram {
        CordDiagram::parse(text).unwrap()
    }

    #[test]
    fn seifert_counts_of_small_diagrams() {
        assert_eq!(smooth(&PlanarDiagram::unknot()).closed, 1);
        assert_eq!(smooth(&braid_closure(2, &[1, 1, 1, 1]).unwrap()).closed, 2);
        assert_eq!(smooth(&braid_closure(2, &[1, 1, 1]).unwrap()).closed, 2);
        let d = braid_closure(3, &[1, -2, 1, -2]).unwrap();
        assert_eq!(smooth(&d).closed, smooth(&d.reversed_all()).closed);
    }

    #[test]
    fn single_cord_is_coherent() {
        let c = cd("cord 0 slab 0 0\nboundary 0s 0e\n");
        let r = make_coherent(&c).unwrap();
        assert_eq!(r.closed, 0);
        assert_eq!(r.matching.len(), 1);
        assert!(is_coherent(&straight_realization(&c).unwrap()).unwrap());
    }

    #[test]
    fn straight_chords_crossing_once() {
        // interleaved endpoints: the chords cross once and swap partners
        let c = cd("cord 0 slab 0 0\ncord 1 slab 1 1\nboundary 0s 1s 0e 1e\n");
        let r = straight_realization(&c).unwrap();
        let s = smooth_cord_realization(&r).unwrap();
        assert_eq!(s.closed, 0);
        assert_eq!(s.matching, vec![(0, 3), (1, 2)]);
        let c = cd("cord 0 slab 0 0\ncord 1 slab 1 1\nboundary 0s 0e 1s 1e\n");
        let s = smooth_cord_realization(&straight_realization(&c).unwrap()).unwrap();
        assert_eq!((s.closed, s.matching), (0, vec![(0, 1), (2, 3)]));
    }

    #[test]
    fn disjoint_companions_give_no_circle() {
        let c = cd("cord 0 slab 0 0\ncord 1 slab 1 1\nboundary 0e 0s 1e 1s\n");
        let r = make_coherent(&c).unwrap();
        assert_eq!(r.closed, 0);
        assert_eq!(r.two_arc_insertions, vec![false, false]);
    }

    #[test]
    fn two_arc_overlap_adds_one_circle() {
        // Both companions run clockwise almost all the way round.
        let c = cd("cord 0 slab 0 0\ncord 1 slab 1 1\nboundary 0s 0e 1s 1e\n");
        let r = make_coherent(&c).unwrap();
        assert_eq!(r.two_arc_insertions, vec![false, true]);
        assert_eq!(r.closed, 1);
        assert_eq!(r.matching.len(), 2);
        assert!(is_coherent(&r.realization).unwrap());
    }

    #[test]
    fn nesting_forest_links_inner_to_outer() {
        let comps = [
            ArcOnCircle { from: 5, to: 0, modulus: 6, increasing: false },
            ArcOnCircle { from: 3, to: 2, modulus: 6, increasing: false },
        ];
        assert_eq!(nesting_forest(&comps), vec![None, Some(0)]);
    }
}
