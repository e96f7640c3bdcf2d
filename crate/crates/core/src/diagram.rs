//! Oriented link diagrams in PD form.
//!
//! A crossing stores its four incident arc labels counterclockwise starting
//! from the incoming under-strand, plus its sign. With that convention the
//! under-strand runs from position 0 to position 2 and the over-strand runs
//! from position 3 to 1 on a positive crossing, from 1 to 3 on a negative one.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_cross(c: i128) -> Option<Sign> {
        match c.signum() {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub arcs: [u32; 4],
    pub sign: Sign,
}

impl Crossing {
    pub fn new(arcs: [u32; 4], sign: Sign) -> Self {
        Crossing { arcs, sign }
    }

    pub fn under_in(&self) -> u32 {
        self.arcs[0]
    }

    pub fn under_out(&self) -> u32 {
        self.arcs[2]
    }

    pub fn over_in_pos(&self) -> usize {
        match self.sign {
            Sign::Pos => 3,
            Sign::Neg => 1,
        }
    }

    pub fn over_out_pos(&self) -> usize {
        match self.sign {
            Sign::Pos => 1,
            Sign::Neg => 3,
        }
    }

    pub fn over_in(&self) -> u32 {
        self.arcs[self.over_in_pos()]
    }

    pub fn over_out(&self) -> u32 {
        self.arcs[self.over_out_pos()]
    }

    pub fn is_in_pos(&self, pos: usize) -> bool {
        pos == 0 || pos == self.over_in_pos()
    }

    /// Exchange over and under strands; the sign flips.
    pub fn switched(&self) -> Crossing {
        let [i, j, k, l] = self.arcs;
        match self.sign {
            Sign::Pos => Crossing::new([l, i, j, k], Sign::Neg),
            Sign::Neg => Crossing::new([j, k, l, i], Sign::Pos),
        }
    }

    /// The two strand passes as (incoming, outgoing) label pairs: under first.
    pub fn passes(&self) -> [(u32, u32); 2] {
        [(self.under_in(), self.under_out()), (self.over_in(), self.over_out())]
    }
}

/// A strand pass through a crossing that is being deleted: `incoming`
/// continues as `outgoing` once the crossing is gone.
#[derive(Debug, Clone, Copy)]
pub struct Continuation {
    pub incoming: u32,
    pub outgoing: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    loops: usize,
}

impl PlanarDiagram {
    /// Build and check a diagram: every arc label must occur exactly twice,
    /// once entering and once leaving a crossing.
    pub fn new(crossings: Vec<Crossing>, loops: usize) -> Result<Self> {
        let d = PlanarDiagram { crossings, loops };
        d.check()?;
        Ok(d)
    }

    pub(crate) fn new_unchecked(crossings: Vec<Crossing>, loops: usize) -> Self {
        PlanarDiagram { crossings, loops }
    }

    pub fn unknot() -> Self {
        PlanarDiagram { crossings: vec![], loops: 1 }
    }

    pub fn unlink(components: usize) -> Self {
        PlanarDiagram { crossings: vec![], loops: components }
    }

    fn check(&self) -> Result<()> {
        let mut heads: HashMap<u32, usize> = HashMap::new();
        let mut tails: HashMap<u32, usize> = HashMap::new();
        for c in &self.crossings {
            for (p, &a) in c.arcs.iter().enumerate() {
                if a == 0 {
                    return Err(Error::InvalidDiagram("arc labels must be positive".into()));
                }
                let m = if c.is_in_pos(p) { &mut heads } else { &mut tails };
                *m.entry(a).or_default() += 1;
            }
        }
        for (&a, &n) in heads.iter().chain(tails.iter()) {
            if n != 1 || !heads.contains_key(&a) || !tails.contains_key(&a) {
                return Err(Error::InvalidDiagram(format!(
                    "arc {a} must enter exactly one crossing and leave exactly one crossing"
                )));
            }
        }
        let faces = self.faces();
        let pieces = self.connected_pieces();
        let v = self.crossings.len();
        if !self.crossings.is_empty() && faces.len() != v + 2 * pieces {
            return Err(Error::InvalidDiagram(format!(
                "diagram is not planar: {} faces for {v} crossings in {pieces} piece(s)",
                faces.len()
            )));
        }
        Ok(())
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    /// Crossing-free closed components.
    pub fn loops(&self) -> usize {
        self.loops
    }

    pub fn writhe(&self) -> i32 {
        self.crossings.iter().map(|c| c.sign.as_i32()).sum()
    }

    pub fn arcs(&self) -> BTreeSet<u32> {
        self.crossings.iter().flat_map(|c| c.arcs).collect()
    }

    /// For every arc, the crossing it enters and the position there.
    pub fn heads(&self) -> HashMap<u32, (usize, usize)> {
        let mut m = HashMap::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            m.insert(c.arcs[0], (ci, 0));
            m.insert(c.over_in(), (ci, c.over_in_pos()));
        }
        m
    }

    /// Arc following `arc` along the orientation.
    pub fn successors(&self) -> HashMap<u32, u32> {
        let mut m = HashMap::new();
        for c in &self.crossings {
            for (i, o) in c.passes() {
                m.insert(i, o);
            }
        }
        m
    }

    /// Components with crossings, each as its arcs in traversal order starting
    /// from its smallest label; components are ordered by that label.
    pub fn arc_components(&self) -> Vec<Vec<u32>> {
        let succ = self.successors();
        let mut seen = BTreeSet::new();
        let mut comps = Vec::new();
        for a in self.arcs() {
            if seen.contains(&a) {
                continue;
            }
            let mut comp = vec![a];
            seen.insert(a);
            let mut cur = succ[&a];
            while cur != a {
                seen.insert(cur);
                comp.push(cur);
                cur = succ[&cur];
            }
            comps.push(comp);
        }
        comps
    }

    /// Components: those with crossings first, then the crossing-free loops.
    pub fn num_components(&self) -> usize {
        self.arc_components().len() + self.loops
    }

    pub fn component_of_arc(&self) -> HashMap<u32, usize> {
        let mut m = HashMap::new();
        for (i, comp) in self.arc_components().into_iter().enumerate() {
            for a in comp {
                m.insert(a, i);
            }
        }
        m
    }

    /// Reverse the listed components (indices as in [`Self::num_components`]).
    pub fn with_reversed(&self, reversed: &[bool]) -> PlanarDiagram {
        let comp = self.component_of_arc();
        let rev = |a: u32| reversed.get(comp[&a]).copied().unwrap_or(false);
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let under_rev = rev(c.under_in());
                let over_rev = rev(c.over_in());
                let [i, j, k, l] = c.arcs;
                let arcs = if under_rev { [k, l, i, j] } else { [i, j, k, l] };
                let sign = if under_rev != over_rev { c.sign.flip() } else { c.sign };
                Crossing::new(arcs, sign)
            })
            .collect();
        PlanarDiagram::new_unchecked(crossings, self.loops)
    }

    pub fn reversed_all(&self) -> PlanarDiagram {
        self.with_reversed(&vec![true; self.num_components()])
    }

    pub fn mirror(&self) -> PlanarDiagram {
        let crossings = self.crossings.iter().map(|c| c.switched()).collect();
        PlanarDiagram::new_unchecked(crossings, self.loops)
    }

    pub fn with_switched(&self, idx: usize) -> PlanarDiagram {
        let mut d = self.clone();
        d.crossings[idx] = d.crossings[idx].switched();
        d
    }

    /// Delete crossings, rejoining each strand pass as given. Strands that
    /// close up without meeting a remaining crossing become loops.
    pub fn splice(&self, removed: &[(usize, [Continuation; 2])]) -> PlanarDiagram {
        let removed_idx: BTreeSet<usize> = removed.iter().map(|r| r.0).collect();
        let mut cont: HashMap<u32, u32> = HashMap::new();
        for (_, passes) in removed {
            for p in passes {
                cont.insert(p.incoming, p.outgoing);
            }
        }
        let heads = self.heads();
        let kept: Vec<(usize, Crossing)> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed_idx.contains(i))
            .map(|(i, c)| (i, *c))
            .collect();

        // Every arc leaving a kept crossing runs until it enters a kept one.
        let mut rename: HashMap<u32, u32> = HashMap::new();
        let mut touched: BTreeSet<u32> = BTreeSet::new();
        for (_, c) in &kept {
            for (p, &start) in c.arcs.iter().enumerate() {
                if c.is_in_pos(p) {
                    continue;
                }
                let mut cur = start;
                touched.insert(cur);
                while removed_idx.contains(&heads[&cur].0) {
                    cur = cont[&cur];
                    touched.insert(cur);
                }
                rename.insert(cur, start);
            }
        }
        let mut crossings = Vec::with_capacity(kept.len());
        for (_, c) in kept {
            let mut arcs = c.arcs;
            for (p, a) in arcs.iter_mut().enumerate() {
                if c.is_in_pos(p) {
                    *a = rename[a];
                }
            }
            crossings.push(Crossing::new(arcs, c.sign));
        }
        // Remaining cycles live entirely inside the removed crossings.
        let mut loops = self.loops;
        let mut seen = touched;
        let mut keys: Vec<u32> = cont.keys().copied().collect();
        keys.sort_unstable();
        for a in keys {
            if seen.contains(&a) {
                continue;
            }
            loops += 1;
            let mut cur = a;
            while seen.insert(cur) {
                cur = cont[&cur];
            }
        }
        PlanarDiagram::new_unchecked(crossings, loops)
    }

    /// Oriented (Seifert) smoothing of one crossing.
    pub fn with_smoothed(&self, idx: usize) -> PlanarDiagram {
        let c = self.crossings[idx];
        self.splice(&[(
            idx,
            [
                Continuation { incoming: c.under_in(), outgoing: c.over_out() },
                Continuation { incoming: c.over_in(), outgoing: c.under_out() },
            ],
        )])
    }

    /// Drop a crossing entirely, letting both strands run straight through.
    pub fn with_removed_passes(&self, idxs: &[usize]) -> PlanarDiagram {
        let removed: Vec<(usize, [Continuation; 2])> = idxs
            .iter()
            .map(|&i| {
                let [(ui, uo), (oi, oo)] = self.crossings[i].passes();
                (
                    i,
                    [
                        Continuation { incoming: ui, outgoing: uo },
                        Continuation { incoming: oi, outgoing: oo },
                    ],
                )
            })
            .collect();
        self.splice(&removed)
    }

    /// Whether every component alternates over and under along its length.
    pub fn is_alternating(&self) -> bool {
        let heads = self.heads();
        self.arc_components().iter().all(|comp| {
            let over: Vec<bool> = comp.iter().map(|a| heads[a].1 != 0).collect();
            (0..over.len()).all(|i| over[i] != over[(i + 1) % over.len()])
        })
    }

    /// Faces of the underlying 4-valent plane graph, as cyclic lists of darts
    /// `(crossing, position)`. Crossing-free loops are not included.
    pub fn faces(&self) -> Vec<Vec<(usize, usize)>> {
        let mut ends: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            for (p, &a) in c.arcs.iter().enumerate() {
                ends.entry(a).or_default().push((ci, p));
            }
        }
        let other_end = |d: (usize, usize)| -> (usize, usize) {
            let a = self.crossings[d.0].arcs[d.1];
            let e = &ends[&a];
            if e[0] == d {
                e[1]
            } else {
                e[0]
            }
        };
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut faces = Vec::new();
        for ci in 0..self.crossings.len() {
            for p in 0..4 {
                if seen.contains(&(ci, p)) {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = (ci, p);
                while seen.insert(d) {
                    face.push(d);
                    let (y, q) = other_end(d);
                    d = (y, (q + 1) % 4);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Connected pieces of the crossing graph (loops excluded).
    pub fn connected_pieces(&self) -> usize {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let nx = p[c];
                p[c] = r;
                c = nx;
            }
            r
        }
        let mut first: HashMap<u32, usize> = HashMap::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            for &a in &c.arcs {
                if let Some(&o) = first.get(&a) {
                    let (ra, rb) = (find(&mut parent, ci), find(&mut parent, o));
                    parent[ra] = rb;
                } else {
                    first.insert(a, ci);
                }
            }
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }

    /// Relabel arcs 1..=2n following each component from its smallest label.
    pub fn normalized(&self) -> PlanarDiagram {
        let mut map: HashMap<u32, u32> = HashMap::new();
        let mut next = 1;
        for comp in self.arc_components() {
            for a in comp {
                map.insert(a, next);
                next += 1;
            }
        }
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing::new(c.arcs.map(|a| map[&a]), c.sign))
            .collect();
        PlanarDiagram::new_unchecked(crossings, self.loops)
    }

    /// PD text: `PD[X[a,b,c,d], ...]; signs=+-...; loops=k`. The signs
    /// annotation is omitted when there are no crossings.
    pub fn to_pd(&self) -> String {
        let body: Vec<String> = self
            .crossings
            .iter()
            .map(|c| format!("X[{},{},{},{}]", c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3]))
            .collect();
        let mut out = format!("PD[{}]", body.join(", "));
        if !self.crossings.is_empty() {
            let signs: String = self
                .crossings
                .iter()
                .map(|c| if c.sign == Sign::Pos { '+' } else { '-' })
                .collect();
            out.push_str(&format!("; signs={signs}"));
        }
        out.push_str(&format!("; loops={}", self.loops));
        out
    }

    /// Parse PD text. Without a `signs=` annotation, signs follow the usual
    /// convention that arc labels increase along each component.
    pub fn from_pd(text: &str) -> Result<PlanarDiagram> {
        let text = text.trim();
        let mut parts = text.split(';');
        let head = parts.next().unwrap_or("").trim();
        let mut signs: Option<Vec<Sign>> = None;
        let mut loops = 0usize;
        for ann in parts {
            let ann = ann.trim();
            if ann.is_empty() {
                continue;
            }
            let (k, v) = ann
                .split_once('=')
                .ok_or_else(|| Error::syntax(1, 1, format!("bad annotation {ann:?}")))?;
            match k.trim() {
                "signs" => {
                    signs = Some(
                        v.trim()
                            .chars()
                            .map(|c| match c {
                                '+' => Ok(Sign::Pos),
                                '-' => Ok(Sign::Neg),
                                _ => Err(Error::syntax(1, 1, format!("bad sign {c:?}"))),
                            })
                            .collect::<Result<_>>()?,
                    )
                }
                "loops" => {
                    loops = v
                        .trim()
                        .parse()
                        .map_err(|_| Error::syntax(1, 1, format!("bad loop count {v:?}")))?
                }
                other => return Err(Error::syntax(1, 1, format!("unknown annotation {other:?}"))),
            }
        }
        let inner = head
            .strip_prefix("PD[")
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::syntax(1, 1, "expected PD[...]"))?;
        let mut tuples: Vec<[u32; 4]> = Vec::new();
        let mut rest = inner.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix("X[")
                .ok_or_else(|| Error::syntax(1, 1, format!("expected X[ at {rest:?}")))?;
            let end = body.find(']').ok_or_else(|| Error::syntax(1, 1, "unterminated X["))?;
            let nums: Vec<u32> = body[..end]
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::syntax(1, 1, format!("bad arc label {s:?}")))
                })
                .collect::<Result<_>>()?;
            if nums.len() != 4 {
                return Err(Error::syntax(1, 1, "each X[] needs four labels"));
            }
            tuples.push([nums[0], nums[1], nums[2], nums[3]]);
            rest = body[end + 1..].trim_start();
            rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
        }
        let signs = match signs {
            Some(s) if s.len() == tuples.len() => s,
            Some(_) => return Err(Error::syntax(1, 1, "signs annotation length mismatch")),
            None => tuples.iter().map(infer_sign).collect(),
        };
        let crossings = tuples.into_iter().zip(signs).map(|(t, s)| Crossing::new(t, s)).collect();
        if loops == 0 && text.starts_with("PD[]") && !text.contains("loops=") {
            loops = 1;
        }
        PlanarDiagram::new(crossings, loops)
    }
}

/// Positive when the over-strand runs from position 3 to position 1, read off
/// from consecutive labels.
fn infer_sign(t: &[u32; 4]) -> Sign {
    let (j, l) = (t[1] as i64, t[3] as i64);
    if j - l == 1 || l - j > 1 {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd())
    }
}

/// Ports of a builder crossing, counterclockwise: SW, SE, NE, NW. A strand
/// entering at port `p` leaves at `p + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Port {
    SW = 0,
    SE = 1,
    NE = 2,
    NW = 3,
}

impl Port {
    const ALL: [Port; 4] = [Port::SW, Port::SE, Port::NE, Port::NW];

    fn from_index(i: usize) -> Port {
        Self::ALL[i % 4]
    }

    fn vector(self) -> (i128, i128) {
        match self {
            Port::SW => (-1, -1),
            Port::SE => (1, -1),
            Port::NE => (1, 1),
            Port::NW => (-1, 1),
        }
    }
}

/// Which diagonal of a builder crossing passes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Over {
    /// The SW-NE strand is on top.
    Rising,
    /// The SE-NW strand is on top.
    Falling,
}

/// Assemble an unoriented plane diagram from crossings with compass ports,
/// then orient it by traversal.
#[derive(Debug, Clone, Default)]
pub struct DiagramBuilder {
    over: Vec<Over>,
    wires: BTreeMap<(usize, Port), (usize, Port)>,
}

impl DiagramBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn crossing(&mut self, over: Over) -> usize {
        self.over.push(over);
        self.over.len() - 1
    }

    pub fn connect(&mut self, a: (usize, Port), b: (usize, Port)) -> &mut Self {
        self.wires.insert(a, b);
        self.wires.insert(b, a);
        self
    }

    /// Orient every component: each starts at the lowest unvisited
    /// (crossing, port) pair taken as an incoming port.
    pub fn build(&self) -> Result<PlanarDiagram> {
        let n = self.over.len();
        for c in 0..n {
            for p in Port::ALL {
                if !self.wires.contains_key(&(c, p)) {
                    return Err(Error::InvalidDiagram(format!("port {p:?} of crossing {c} is unconnected")));
                }
            }
        }
        let mut label_at: HashMap<(usize, Port), u32> = HashMap::new();
        let mut incoming: HashMap<(usize, Port), bool> = HashMap::new();
        let mut next = 1u32;
        for c in 0..n {
            for p in Port::ALL {
                if incoming.contains_key(&(c, p)) {
                    continue;
                }
                // enter at (c, p)
                let start = (c, p);
                let mut cur_in = start;
                loop {
                    incoming.insert(cur_in, true);
                    let out = (cur_in.0, Port::from_index(cur_in.1 as usize + 2));
                    incoming.insert(out, false);
                    label_at.insert(out, next);
                    let nxt = self.wires[&out];
                    label_at.insert(nxt, next);
                    next += 1;
                    if nxt == start {
                        break;
                    }
                    if incoming.contains_key(&nxt) {
                        return Err(Error::InvalidDiagram("inconsistent wiring".into()));
                    }
                    cur_in = nxt;
                }
            }
        }
        let mut crossings = Vec::with_capacity(n);
        for c in 0..n {
            let rising_over = self.over[c] == Over::Rising;
            // under diagonal is the other one
            let under_ports = if rising_over { [Port::SE, Port::NW] } else { [Port::SW, Port::NE] };
            let over_ports = if rising_over { [Port::SW, Port::NE] } else { [Port::SE, Port::NW] };
            let u_in = if incoming[&(c, under_ports[0])] { under_ports[0] } else { under_ports[1] };
            let o_in = if incoming[&(c, over_ports[0])] { over_ports[0] } else { over_ports[1] };
            let u_out = Port::from_index(u_in as usize + 2);
            let o_out = Port::from_index(o_in as usize + 2);
            let arcs = [0, 1, 2, 3].map(|k| label_at[&(c, Port::from_index(u_in as usize + k))]);
            let dir = |p: Port, q: Port| {
                let (a, b) = (p.vector(), q.vector());
                (b.0 - a.0, b.1 - a.1)
            };
            let sign = Sign::from_cross(crate::geometry::cross(dir(o_in, o_out), dir(u_in, u_out)))
                .expect("diagonals are transverse");
            crossings.push(Crossing::new(arcs, sign));
        }
        PlanarDiagram::new(crossings, 0)
    }
}

/// Closure of a braid word. Generator `i` (1-based) is σ_i when positive and
/// σ_i^{-1} when negative; strands run upward.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<PlanarDiagram> {
    if strands == 0 {
        return Err(Error::InvalidParameter("a braid needs at least one strand".into()));
    }
    for &g in word {
        if g == 0 || g.unsigned_abs() as usize >= strands {
            return Err(Error::InvalidParameter(format!("generator {g} out of range for {strands} strands")));
        }
    }
    let mut b = DiagramBuilder::new();
    // top[k] = the port currently at position k at the top of the braid
    let mut top: Vec<Option<(usize, Port)>> = vec![None; strands];
    let mut bottom: Vec<Option<(usize, Port)>> = vec![None; strands];
    let mut straight = vec![true; strands];
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        let c = b.crossing(if g > 0 { Over::Rising } else { Over::Falling });
        for (k, port_in) in [(i, Port::SW), (i + 1, Port::SE)] {
            match top[k] {
                Some(t) => {
                    b.connect(t, (c, port_in));
                }
                None => bottom[k] = Some((c, port_in)),
            }
            straight[k] = false;
        }
        top[i] = Some((c, Port::NW));
        top[i + 1] = Some((c, Port::NE));
    }
    let mut free_loops = 0;
    for k in 0..strands {
        match (top[k], bottom[k]) {
            (Some(t), Some(bt)) => {
                b.connect(t, bt);
            }
            _ => free_loops += 1,
        }
    }
    let d = b.build()?;
    Ok(PlanarDiagram::new_unchecked(d.crossings, free_loops))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn trefoil() -> PlanarDiagram {
        braid_closure(2, &[1, 1, 1]).unwrap()
    }

    #[test]
    fn unknot_pd() {
        assert_eq!(PlanarDiagram::unknot().to_pd(), "PD[]; loops=1");
        let d = PlanarDiagram::from_pd("PD[]; loops=1").unwrap();
        assert_eq!(d.num_components(), 1);
        assert_eq!(PlanarDiagram::from_pd("PD[]").unwrap().loops(), 1);
    }

    #[test]
    fn trefoil_structure() {
        let d = trefoil();
        assert_eq!(d.num_crossings(), 3);
        assert_eq!(d.num_components(), 1);
        assert_eq!(d.writhe(), 3);
        let mut count: HashMap<u32, usize> = HashMap::new();
        for c in d.crossings() {
            for a in c.arcs {
                *count.entry(a).or_default() += 1;
            }
        }
        assert_eq!(count.len(), 6);
        assert!(count.values().all(|&n| n == 2));
        assert_eq!(d.faces().len(), 5);
    }

    #[test]
    fn pd_round_trip_is_bit_identical() {
        let d = braid_closure(3, &[1, -2, 1, -2]).unwrap();
        let text = d.to_pd();
        let back = PlanarDiagram::from_pd(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.to_pd(), text);
    }

    #[test]
    fn parse_knot_theory_convention() {
        // Without a sign annotation the over-strand runs from the smaller to
        // the next label, so this trefoil is the positive one and its mirror
        // image reads back negative.
        let d = PlanarDiagram::from_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]").unwrap();
        assert_eq!(d.num_components(), 1);
        assert_eq!(d.writhe(), 3);
        let m = PlanarDiagram::from_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]").unwrap();
        assert_eq!(m.writhe(), -3);
    }

    #[test]
    fn hopf_link_components() {
        let d = braid_closure(2, &[1, 1]).unwrap();
        assert_eq!(d.num_components(), 2);
        assert_eq!(d.writhe(), 2);
        let r = d.with_reversed(&[false, true]);
        assert_eq!(r.writhe(), -2);
        assert_eq!(r.num_components(), 2);
        assert_eq!(d.reversed_all().writhe(), 2);
    }

    #[test]
    fn smoothing_and_switching() {
        let d = trefoil();
        let s = d.with_smoothed(0);
        assert_eq!(s.num_crossings(), 2);
        assert_eq!(s.num_components(), 2);
        let w = d.with_switched(0);
        assert_eq!(w.writhe(), 1);
        assert_eq!(w.with_switched(0), d);
        // removing every crossing of a one-crossing diagram leaves loops
        let kink = braid_closure(2, &[1]).unwrap();
        assert_eq!(kink.num_components(), 1);
        assert_eq!(kink.with_smoothed(0).loops(), 2);
        assert_eq!(kink.with_removed_passes(&[0]).loops(), 1);
    }

    #[test]
    fn non_planar_rejected() {
        // Both arcs enter and leave once, but the single face makes this a
        // torus diagram.
        let r = PlanarDiagram::from_pd("PD[X[1,2,1,2]]; signs=+; loops=0");
        assert!(r.is_err());
    }

    #[test]
    fn braid_with_free_strand() {
        let d = braid_closure(3, &[1]).unwrap();
        assert_eq!(d.num_components(), 2);
        assert_eq!(d.loops(), 1);
    }
}
