//! Exact planar predicates on integer points.
//!
//! Polyline vertices are integers (|coord| well below 2^20), so orientation
//! tests fit comfortably in `i128`. Intersection parameters and sample
//! points are rationals over `i128`; every operation is checked and an
//! overflow surfaces as [`Error::Overflow`] instead of a wrong answer.

use std::cmp::Ordering;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pt {
    pub x: i64,
    pub y: i64,
}

impl Pt {
    pub const fn new(x: i64, y: i64) -> Self {
        Pt { x, y }
    }

    fn sub(self, o: Pt) -> (i128, i128) {
        (self.x as i128 - o.x as i128, self.y as i128 - o.y as i128)
    }
}

/// A rational number with positive denominator, always reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Q {
    n: i128,
    d: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn ck(v: Option<i128>) -> Result<i128> {
    v.ok_or(Error::Overflow)
}

impl Q {
    pub fn new(n: i128, d: i128) -> Result<Self> {
        if d == 0 {
            return Err(Error::Degenerate("zero denominator".into()));
        }
        let g = gcd(n, d).max(1);
        let (mut n, mut d) = (n / g, d / g);
        if d < 0 {
            n = ck(n.checked_neg())?;
            d = ck(d.checked_neg())?;
        }
        Ok(Q { n, d })
    }

    pub fn int(n: i128) -> Self {
        Q { n, d: 1 }
    }

    pub fn num(&self) -> i128 {
        self.n
    }

    pub fn den(&self) -> i128 {
        self.d
    }

    pub fn add(self, o: Q) -> Result<Q> {
        let n = ck(ck(self.n.checked_mul(o.d))?.checked_add(ck(o.n.checked_mul(self.d))?))?;
        Q::new(n, ck(self.d.checked_mul(o.d))?)
    }

    pub fn sub(self, o: Q) -> Result<Q> {
        self.add(Q { n: -o.n, d: o.d })
    }

    pub fn mul(self, o: Q) -> Result<Q> {
        Q::new(ck(self.n.checked_mul(o.n))?, ck(self.d.checked_mul(o.d))?)
    }

    pub fn mul_int(self, k: i128) -> Result<Q> {
        Q::new(ck(self.n.checked_mul(k))?, self.d)
    }

    pub fn try_cmp(&self, o: &Q) -> Result<Ordering> {
        let l = ck(self.n.checked_mul(o.d))?;
        let r = ck(o.n.checked_mul(self.d))?;
        Ok(l.cmp(&r))
    }

    pub fn signum(&self) -> i128 {
        self.n.signum()
    }

    fn floor(&self) -> i128 {
        self.n.div_euclid(self.d)
    }

    pub fn to_f64(&self) -> f64 {
        self.n as f64 / self.d as f64
    }
}

impl std::fmt::Display for Q {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.d == 1 {
            write!(f, "{}", self.n)
        } else {
            write!(f, "{}/{}", self.n, self.d)
        }
    }
}

/// The rational with the smallest denominator strictly between `lo` and `hi`.
pub fn simplest_between(lo: Q, hi: Q) -> Result<Q> {
    if lo.try_cmp(&hi)? != Ordering::Less {
        return Err(Error::Degenerate("empty interval".into()));
    }
    // Continued-fraction descent on (lo, hi).
    let fl = lo.floor();
    let candidate = Q::int(fl + 1);
    if candidate.try_cmp(&hi)? == Ordering::Less {
        return Ok(candidate);
    }
    // lo and hi share the integer part fl; recurse on the reciprocals of the
    // fractional parts (order flips).
    let lo_frac = lo.sub(Q::int(fl))?;
    let hi_frac = hi.sub(Q::int(fl))?;
    let inner = if lo_frac.n == 0 {
        // (0, hi_frac): need 1/x with x > 1/hi_frac
        let inv_hi = Q::new(hi_frac.d, hi_frac.n)?;
        Q::int(inv_hi.floor() + 1)
    } else {
        let inv_lo = Q::new(lo_frac.d, lo_frac.n)?;
        let inv_hi = Q::new(hi_frac.d, hi_frac.n)?;
        simplest_between(inv_hi, inv_lo)?
    };
    Q::int(fl).add(Q::new(inner.d, inner.n)?)
}

/// Sign of the cross product (b - a) x (c - a).
pub fn orient(a: Pt, b: Pt, c: Pt) -> i128 {
    let (bx, by) = b.sub(a);
    let (cx, cy) = c.sub(a);
    (bx * cy - by * cx).signum()
}

pub fn cross(u: (i128, i128), v: (i128, i128)) -> i128 {
    u.0 * v.1 - u.1 * v.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Seg {
    pub a: Pt,
    pub b: Pt,
}

impl Seg {
    pub const fn new(a: Pt, b: Pt) -> Self {
        Seg { a, b }
    }

    pub fn dir(&self) -> (i128, i128) {
        self.b.sub(self.a)
    }

    /// The point at parameter `t` along the segment.
    pub fn at(&self, t: Q) -> Result<QPt> {
        let (dx, dy) = self.dir();
        Ok(QPt {
            x: Q::int(self.a.x as i128).add(t.mul_int(dx)?)?,
            y: Q::int(self.a.y as i128).add(t.mul_int(dy)?)?,
        })
    }
}

/// How two closed segments meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hit {
    Miss,
    /// Transversal crossing in the relative interiors; parameters on each.
    Proper { t: Q, u: Q },
    /// Touching at an endpoint, or collinear overlap.
    Touch,
}

fn on_segment(s: &Seg, p: Pt) -> bool {
    orient(s.a, s.b, p) == 0
        && p.x >= s.a.x.min(s.b.x)
        && p.x <= s.a.x.max(s.b.x)
        && p.y >= s.a.y.min(s.b.y)
        && p.y <= s.a.y.max(s.b.y)
}

pub fn intersect(s1: &Seg, s2: &Seg) -> Result<Hit> {
    // Bounding boxes first.
    if s1.a.x.max(s1.b.x) < s2.a.x.min(s2.b.x)
        || s2.a.x.max(s2.b.x) < s1.a.x.min(s1.b.x)
        || s1.a.y.max(s1.b.y) < s2.a.y.min(s2.b.y)
        || s2.a.y.max(s2.b.y) < s1.a.y.min(s1.b.y)
    {
        return Ok(Hit::Miss);
    }
    let o1 = orient(s1.a, s1.b, s2.a);
    let o2 = orient(s1.a, s1.b, s2.b);
    let o3 = orient(s2.a, s2.b, s1.a);
    let o4 = orient(s2.a, s2.b, s1.b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        let d1 = s1.dir();
        let d2 = s2.dir();
        let den = cross(d1, d2);
        let w = s2.a.sub(s1.a);
        let t = Q::new(cross(w, d2), den)?;
        let u = Q::new(cross(w, d1), den)?;
        return Ok(Hit::Proper { t, u });
    }
    if on_segment(s1, s2.a) || on_segment(s1, s2.b) || on_segment(s2, s1.a) || on_segment(s2, s1.b) {
        return Ok(Hit::Touch);
    }
    Ok(Hit::Miss)
}

/// A point with rational coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QPt {
    pub x: Q,
    pub y: Q,
}

impl QPt {
    pub fn from_pt(p: Pt) -> Self {
        QPt {
            x: Q::int(p.x as i128),
            y: Q::int(p.y as i128),
        }
    }
}

/// Sign of (b - a) x (q - a) for integer a, b and rational q.
pub fn orient_q(a: Pt, b: Pt, q: &QPt) -> Result<i128> {
    let (dx, dy) = b.sub(a);
    let qx = q.x.sub(Q::int(a.x as i128))?;
    let qy = q.y.sub(Q::int(a.y as i128))?;
    let l = qy.mul_int(dx)?;
    let r = qx.mul_int(dy)?;
    Ok(l.sub(r)?.signum())
}

/// A directed portion of an integer segment, from parameter `t0` to `t1`
/// (either order). Smoothed curves and domain boundaries are built from these.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub seg: Seg,
    pub t0: Q,
    pub t1: Q,
}

impl Edge {
    pub fn full(seg: Seg) -> Self {
        Edge {
            seg,
            t0: Q::int(0),
            t1: Q::int(1),
        }
    }

    pub fn reversed(&self) -> Self {
        Edge {
            seg: self.seg,
            t0: self.t1,
            t1: self.t0,
        }
    }

    pub fn start(&self) -> Result<QPt> {
        self.seg.at(self.t0)
    }

    pub fn end(&self) -> Result<QPt> {
        self.seg.at(self.t1)
    }

    /// A point strictly inside the edge with small denominators.
    pub fn sample(&self) -> Result<QPt> {
        let (lo, hi) = match self.t0.try_cmp(&self.t1)? {
            Ordering::Less => (self.t0, self.t1),
            Ordering::Greater => (self.t1, self.t0),
            Ordering::Equal => return Err(Error::Degenerate("zero-length edge".into())),
        };
        self.seg.at(simplest_between(lo, hi)?)
    }
}

/// Winding number of a closed chain of edges around `q`. `q` must not lie on
/// any edge.
pub fn winding_number(edges: &[Edge], q: &QPt) -> Result<i64> {
    let mut w = 0i64;
    for e in edges {
        let u = e.start()?;
        let v = e.end()?;
        // orientation of q relative to the directed edge u -> v
        let forward = e.t0.try_cmp(&e.t1)? == Ordering::Less;
        let side = {
            let s = orient_q(e.seg.a, e.seg.b, q)?;
            if forward {
                s
            } else {
                -s
            }
        };
        let uy_le = u.y.try_cmp(&q.y)? != Ordering::Greater;
        let vy_gt = v.y.try_cmp(&q.y)? == Ordering::Greater;
        let vy_le = !vy_gt;
        let uy_gt = !uy_le;
        if uy_le && vy_gt && side > 0 {
            w += 1;
        } else if uy_gt && vy_le && side < 0 {
            w -= 1;
        }
    }
    Ok(w)
}

/// Twice the signed area of a closed chain of edges (positive when
/// counterclockwise), as a rational.
pub fn signed_area2(edges: &[Edge]) -> Result<Q> {
    let mut acc = Q::int(0);
    for e in edges {
        let u = e.start()?;
        let v = e.end()?;
        acc = acc.add(u.x.mul(v.y)?.sub(v.x.mul(u.y)?)?)?;
    }
    Ok(acc)
}
