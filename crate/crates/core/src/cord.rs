//! Special cord diagrams: oriented cords with endpoints on a boundary circle
//! `C`, each lifted into its own height slab.
//!
//! Boundary endpoints are indexed counterclockwise `0..2n`. Arcs of `C` are
//! described by their two endpoint indices and a traversal direction.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Column {
    pub cx: i64,
    pub cy: i64,
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.cx, self.cy)
    }
}

/// Closed integer height interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slab {
    pub lo: i64,
    pub hi: i64,
}

impl Slab {
    pub fn new(a: i64, b: i64) -> Self {
        Slab { lo: a.min(b), hi: a.max(b) }
    }

    pub fn disjoint(&self, o: &Slab) -> bool {
        self.hi < o.lo || o.hi < self.lo
    }

    /// Strictly above `o` (both endpoints).
    pub fn dominates(&self, o: &Slab) -> bool {
        self.lo > o.hi
    }
}

/// Side of a column's unit square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    E,
    N,
    W,
    S,
}

/// Where a cord meets the square boundary: the side, the height of the
/// horizontal step crossing it, and the rank of that height among all strands
/// sharing the same projected lattice edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SquarePoint {
    pub side: Side,
    pub z: i64,
    pub rank: usize,
}

/// Which pass of which lattice component a cord is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Visit {
    pub component: usize,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cord {
    pub slab: Slab,
    pub visit: Option<Visit>,
    pub entry: Option<SquarePoint>,
    pub exit: Option<SquarePoint>,
}

impl Cord {
    pub fn abstract_cord(slab: Slab) -> Self {
        Cord { slab, visit: None, entry: None, exit: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EndKind {
    Start,
    End,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Endpoint {
    pub cord: usize,
    pub kind: EndKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CordDiagram {
    pub column: Column,
    /// Ascending by slab.
    pub cords: Vec<Cord>,
    /// Counterclockwise cyclic order of the 2n endpoints.
    pub boundary: Vec<Endpoint>,
}

impl CordDiagram {
    /// Build and check: one start and one end per cord, pairwise disjoint
    /// slabs, cords sorted by slab.
    pub fn new(column: Column, cords: Vec<Cord>, boundary: Vec<Endpoint>) -> Result<Self> {
        let n = cords.len();
        if boundary.len() != 2 * n {
            return Err(Error::Degenerate(format!(
                "{n} cords need {} boundary endpoints, found {}",
                2 * n,
                boundary.len()
            )));
        }
        let mut seen = vec![[false; 2]; n];
        for e in &boundary {
            if e.cord >= n {
                return Err(Error::Degenerate(format!("endpoint names unknown cord {}", e.cord)));
            }
            let k = match e.kind {
                EndKind::Start => 0,
                EndKind::End => 1,
            };
            if seen[e.cord][k] {
                return Err(Error::Degenerate(format!(
                    "endpoint collision on C: cord {} has two {:?} endpoints",
                    e.cord, e.kind
                )));
            }
            seen[e.cord][k] = true;
        }
        for w in cords.windows(2) {
            if !w[0].slab.disjoint(&w[1].slab) || w[0].slab.lo > w[1].slab.lo {
                return Err(Error::Degenerate("slabs must be disjoint and ascending".into()));
            }
        }
        Ok(CordDiagram { column, cords, boundary })
    }

    pub fn len(&self) -> usize {
        self.cords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cords.is_empty()
    }

    /// Boundary index of a cord's start and end.
    pub fn endpoint_positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(usize::MAX, usize::MAX); self.cords.len()];
        for (i, e) in self.boundary.iter().enumerate() {
            match e.kind {
                EndKind::Start => pos[e.cord].0 = i,
                EndKind::End => pos[e.cord].1 = i,
            }
        }
        pos
    }

    /// Text form:
    /// ```text
    /// column 0 0
    /// cord 0 slab 0 0
    /// cord 1 slab 2 4
    /// boundary 0s 1s 0e 1e
    /// ```
    pub fn to_text(&self) -> String {
        let mut out = format!("column {} {}\n", self.column.cx, self.column.cy);
        for (i, c) in self.cords.iter().enumerate() {
            out.push_str(&format!("cord {i} slab {} {}\n", c.slab.lo, c.slab.hi));
        }
        let b: Vec<String> = self
            .boundary
            .iter()
            .map(|e| format!("{}{}", e.cord, if e.kind == EndKind::Start { 's' } else { 'e' }))
            .collect();
        out.push_str(&format!("boundary {}\n", b.join(" ")));
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut column = Column { cx: 0, cy: 0 };
        let mut cords: Vec<(usize, Slab)> = Vec::new();
        let mut boundary = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = ln + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let f: Vec<&str> = t.split_whitespace().collect();
            let int = |s: &str| -> Result<i64> {
                s.parse().map_err(|_| Error::syntax(line, 1, format!("not an integer: {s:?}")))
            };
            match f[0] {
                "column" if f.len() == 3 => column = Column { cx: int(f[1])?, cy: int(f[2])? },
                "cord" if f.len() == 5 && f[2] == "slab" => {
                    cords.push((int(f[1])? as usize, Slab::new(int(f[3])?, int(f[4])?)))
                }
                "boundary" => {
                    for tok in &f[1..] {
                        let (num, kind) = tok.split_at(tok.len() - 1);
                        let kind = match kind {
                            "s" => EndKind::Start,
                            "e" => EndKind::End,
                            _ => return Err(Error::syntax(line, 1, format!("bad endpoint {tok:?}"))),
                        };
                        boundary.push(Endpoint { cord: int(num)? as usize, kind });
                    }
                }
                _ => return Err(Error::syntax(line, 1, format!("unrecognized line {t:?}"))),
            }
        }
        cords.sort_by_key(|c| c.0);
        if cords.iter().enumerate().any(|(i, c)| c.0 != i) {
            return Err(Error::syntax(1, 1, "cords must be numbered 0..n"));
        }
        CordDiagram::new(column, cords.into_iter().map(|c| Cord::abstract_cord(c.1)).collect(), boundary)
    }
}

/// Orientation of the boundary circle `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CircleOrientation {
    Clockwise,
    Counterclockwise,
}

/// An arc of a circle carrying `modulus` marked points, running from `from`
/// to `to` with increasing or decreasing index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArcOnCircle {
    pub from: usize,
    pub to: usize,
    pub modulus: usize,
    pub increasing: bool,
}

/// How two arcs of the same circle intersect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Overlap {
    Disjoint,
    Nested,
    SingleArc,
    TwoArcs,
}

impl ArcOnCircle {
    /// The arc as an increasing-index interval `[lo, hi]` (cyclic).
    fn as_increasing(&self) -> (usize, usize) {
        if self.increasing {
            (self.from, self.to)
        } else {
            (self.to, self.from)
        }
    }

    /// Whether marked point `p` lies strictly inside the arc.
    pub fn contains_strictly(&self, p: usize) -> bool {
        let (lo, hi) = self.as_increasing();
        let m = self.modulus;
        let span = (hi + m - lo) % m;
        let off = (p + m - lo) % m;
        off > 0 && off < span
    }

    /// Arc containment `self ⊆ other`.
    pub fn is_within(&self, other: &ArcOnCircle) -> bool {
        let (lo, hi) = self.as_increasing();
        let (olo, ohi) = other.as_increasing();
        let m = self.modulus;
        let ospan = (ohi + m - olo) % m;
        let a = (lo + m - olo) % m;
        let b = (hi + m - olo) % m;
        a <= ospan && b <= ospan && a <= b
    }
}

/// The arc of `C` from the cord's start to its end that runs parallel to the
/// cord under the chosen orientation of `C`. Boundary indices increase
/// counterclockwise.
pub fn companion_arc(start: usize, end: usize, modulus: usize, orientation: CircleOrientation) -> Result<ArcOnCircle> {
    if start == end {
        return Err(Error::Degenerate("cord with coincident endpoints".into()));
    }
    Ok(ArcOnCircle {
        from: start,
        to: end,
        modulus,
        increasing: orientation == CircleOrientation::Counterclockwise,
    })
}

pub fn classify_overlap(a: &ArcOnCircle, b: &ArcOnCircle) -> Result<Overlap> {
    let ends = [a.from, a.to, b.from, b.to];
    for i in 0..4 {
        for j in i + 1..4 {
            if ends[i] == ends[j] {
                return Err(Error::NonGeneric("arcs share an endpoint".into()));
            }
        }
    }
    if a.modulus != b.modulus {
        return Err(Error::Degenerate("arcs on different circles".into()));
    }
    let (blo, bhi) = b.as_increasing();
    let (alo, ahi) = a.as_increasing();
    let b_lo_in = a.contains_strictly(blo);
    let b_hi_in = a.contains_strictly(bhi);
    Ok(match (b_lo_in, b_hi_in) {
        (true, true) => {
            if b.is_within(a) {
                Overlap::Nested
            } else {
                Overlap::TwoArcs
            }
        }
        (true, false) | (false, true) => Overlap::SingleArc,
        (false, false) => {
            if b.contains_strictly(alo) && b.contains_strictly(ahi) {
                Overlap::Nested
            } else {
                Overlap::Disjoint
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Clock positions 0..12 with clockwise = increasing hour.
    fn cw(from: usize, to: usize) -> ArcOnCircle {
        ArcOnCircle { from: from % 12, to: to % 12, modulus: 12, increasing: true }
    }

    #[test]
    fn companion_follows_orientation() {
        // Boundary indices run counterclockwise, so clockwise is decreasing.
        let a = companion_arc(3, 0, 12, CircleOrientation::Clockwise).unwrap();
        assert!(!a.increasing);
        assert!(a.contains_strictly(2) && a.contains_strictly(1));
        assert!(!a.contains_strictly(4));
        let b = companion_arc(0, 3, 12, CircleOrientation::Clockwise).unwrap();
        assert!(b.contains_strictly(6) && !b.contains_strictly(2));
        assert!(companion_arc(5, 5, 12, CircleOrientation::Clockwise).is_err());
    }

    #[test]
    fn overlap_cases_on_the_clock() {
        assert_eq!(classify_overlap(&cw(12, 3), &cw(6, 9)).unwrap(), Overlap::Disjoint);
        assert_eq!(classify_overlap(&cw(12, 6), &cw(1, 3)).unwrap(), Overlap::Nested);
        assert_eq!(classify_overlap(&cw(1, 3), &cw(12, 6)).unwrap(), Overlap::Nested);
        assert_eq!(classify_overlap(&cw(12, 6), &cw(3, 9)).unwrap(), Overlap::SingleArc);
        assert_eq!(classify_overlap(&cw(12, 9), &cw(6, 3)).unwrap(), Overlap::TwoArcs);
        assert!(classify_overlap(&cw(12, 3), &cw(3, 6)).is_err());
    }

    #[test]
    fn cord_text_round_trip() {
        let text = "column 3 -1\ncord 0 slab 0 0\ncord 1 slab 2 4\nboundary 0s 1s 0e 1e\n";
        let cd = CordDiagram::parse(text).unwrap();
        assert_eq!(cd.len(), 2);
        assert_eq!(cd.to_text(), text);
        assert_eq!(cd.endpoint_positions(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn rejects_overlapping_slabs_and_collisions() {
        assert!(CordDiagram::parse("cord 0 slab 0 2\ncord 1 slab 2 4\nboundary 0s 1s 0e 1e\n").is_err());
        assert!(CordDiagram::parse("cord 0 slab 0 0\ncord 1 slab 2 4\nboundary 0s 0s 1e 1e\n").is_err());
    }
}
