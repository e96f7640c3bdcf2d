//! HOMFLY-PT polynomial by skein-tree recursion, and the Morton–Franks–Williams
//! braid index bound.
//!
//! Convention: `a·H(D₊) − a⁻¹·H(D₋) = z·H(D₀)`, unknot ↦ 1. A kinked unknot
//! smoothed at its kink gives the 2-unlink, and both switches are unknots, so
//! `(a − a⁻¹) = z·H(unlink₂)`. Hence each extra split component multiplies
//! by `δ = (a − a⁻¹)z⁻¹`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::diagram::{Crossing, PlanarDiagram, Sign};
use crate::error::{Error, Result};
use crate::lattice::OrientationAssignment;

pub const DEFAULT_CAP: usize = 24;

/// Integer Laurent polynomial in `z` and `a`; keys are `(z exponent, a exponent)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: i64, z: i32, a: i32) -> Self {
        let mut p = Self::zero();
        p.add_term((z, a), BigInt::from(coeff));
        p
    }

    /// `δ = (a − a⁻¹)z⁻¹`.
    pub fn delta() -> Self {
        Self::monomial(1, -1, 1).add(&Self::monomial(-1, -1, -1))
    }

    fn add_term(&mut self, k: (i32, i32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, z: i32, a: i32) -> BigInt {
        self.terms.get(&(z, a)).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for ((z1, a1), c1) in &self.terms {
            for ((z2, a2), c2) in &o.terms {
                r.add_term((z1 + z2, a1 + a2), c1 * c2);
            }
        }
        r
    }

    /// Multiply by `coeff · z^dz · a^da`.
    pub fn scale(&self, coeff: i64, dz: i32, da: i32) -> Self {
        let c = BigInt::from(coeff);
        let mut r = Self::zero();
        for ((z, a), v) in &self.terms {
            r.add_term((z + dz, a + da), v * &c);
        }
        r
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut r = Self::one();
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// Lowest and highest power of `a`.
    pub fn a_span(&self) -> Result<(i32, i32)> {
        let lo = self.terms.keys().map(|k| k.1).min().ok_or(Error::ZeroPolynomial)?;
        let hi = self.terms.keys().map(|k| k.1).max().ok_or(Error::ZeroPolynomial)?;
        Ok((lo, hi))
    }

    /// Parse the serialized form produced by `Display`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let mut p = Self::zero();
        if t == "0" {
            return Ok(p);
        }
        for (i, term) in t.split(" + ").enumerate() {
            let bad = || Error::syntax(1, i + 1, format!("bad term {term:?}"));
            let mut parts = term.split(' ');
            let c: BigInt = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let (mut z, mut a) = (0, 0);
            for f in parts {
                let (var, exp) = f.split_once('^').ok_or_else(bad)?;
                let e: i32 = exp.parse().map_err(|_| bad())?;
                match var {
                    "z" => z = e,
                    "a" => a = e,
                    _ => return Err(bad()),
                }
            }
            if c.is_zero() || p.terms.contains_key(&(z, a)) {
                return Err(bad());
            }
            p.add_term((z, a), c);
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly2 {
    /// Terms sorted by `(z, a)` as `coeff z^i a^j`, zero exponents omitted,
    /// joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((z, a), c)| {
                let mut s = c.to_string();
                if *z != 0 {
                    s.push_str(&format!(" z^{z}"));
                }
                if *a != 0 {
                    s.push_str(&format!(" a^{a}"));
                }
                s
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// How the skein tree picks basepoints for the descending test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    /// Components by smallest label, each started at its smallest label.
    #[default]
    FirstArc,
    /// Components in reverse order, each started at its largest label.
    LastArc,
    /// Per component, the start arc giving the fewest switches.
    Greedy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomflyConfig {
    pub cap: usize,
    pub parallel: bool,
    pub strategy: Strategy,
}

impl Default for HomflyConfig {
    fn default() -> Self {
        HomflyConfig { cap: DEFAULT_CAP, parallel: false, strategy: Strategy::FirstArc }
    }
}

pub fn homfly(d: &PlanarDiagram) -> Result<LaurentPoly2> {
    homfly_with(d, &HomflyConfig::default())
}

pub fn homfly_with(d: &PlanarDiagram, cfg: &HomflyConfig) -> Result<LaurentPoly2> {
    if cfg.cap == 0 {
        return Err(Error::InvalidParameter("crossing cap must be at least 1".into()));
    }
    if d.num_crossings() > cfg.cap {
        return Err(Error::CapExceeded { crossings: d.num_crossings(), cap: cfg.cap });
    }
    let engine = Engine { cfg: *cfg, memo: Mutex::new(HashMap::new()) };
    Ok(engine.eval(d))
}

struct Engine {
    cfg: HomflyConfig,
    memo: Mutex<HashMap<Key, LaurentPoly2>>,
}

type Key = (Vec<Crossing>, usize);

impl Engine {
    fn eval(&self, d: &PlanarDiagram) -> LaurentPoly2 {
        let d = simplify(d);
        let pieces = split_pieces(&d);
        if pieces.len() > 1 {
            // H(D₁ ⊔ D₂) = δ·H(D₁)·H(D₂)
            let delta = LaurentPoly2::delta();
            let mut r = delta.pow(pieces.len() - 1 + d.loops());
            for p in &pieces {
                r = r.mul(&self.eval(p));
            }
            return r;
        }
        if d.num_crossings() == 0 {
            return LaurentPoly2::delta().pow(d.loops().saturating_sub(1));
        }
        let key = canonical_key(&d);
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = self.eval_connected(&d);
        self.memo.lock().unwrap().insert(key, v.clone());
        v
    }

    /// Switch the non-descending crossings one by one; every switch spawns a
    /// smoothed diagram with one crossing fewer.
    fn eval_connected(&self, d: &PlanarDiagram) -> LaurentPoly2 {
        let bad = bad_crossings(d, self.cfg.strategy);
        let mut cur = d.clone();
        // H(cur_before) = α·H(cur_after) + β·H(smoothed)
        let mut jobs: Vec<(LaurentPoly2, PlanarDiagram)> = Vec::new();
        let mut coef = LaurentPoly2::one();
        for &x in &bad {
            let (alpha, beta) = match cur.crossings()[x].sign {
                Sign::Pos => (LaurentPoly2::monomial(1, 0, -2), LaurentPoly2::monomial(1, 1, -1)),
                Sign::Neg => (LaurentPoly2::monomial(1, 0, 2), LaurentPoly2::monomial(-1, 1, 1)),
            };
            jobs.push((coef.mul(&beta), cur.with_smoothed(x)));
            coef = coef.mul(&alpha);
            cur = cur.with_switched(x);
        }
        let base = LaurentPoly2::delta().pow(cur.num_components() - 1);
        let mut total = coef.mul(&base);
        let values: Vec<LaurentPoly2> = if self.cfg.parallel {
            use rayon::prelude::*;
            jobs.par_iter().map(|(_, s)| self.eval(s)).collect()
        } else {
            jobs.iter().map(|(_, s)| self.eval(s)).collect()
        };
        for ((c, _), v) in jobs.iter().zip(values) {
            total = total.add(&c.mul(&v));
        }
        total
    }
}

/// Crossings met first as an under-pass when traversing the components in
/// the strategy's order from its basepoints.
fn bad_crossings(d: &PlanarDiagram, strategy: Strategy) -> Vec<usize> {
    let comps = d.arc_components();
    let heads = d.heads();
    let order: Vec<Vec<u32>> = match strategy {
        Strategy::FirstArc => comps,
        Strategy::LastArc => comps
            .into_iter()
            .rev()
            .map(|mut c| {
                let (i, _) = c.iter().enumerate().max_by_key(|(_, a)| **a).unwrap();
                c.rotate_left(i);
                c
            })
            .collect(),
        Strategy::Greedy => {
            let mut seen = vec![false; d.num_crossings()];
            let mut out = Vec::new();
            for c in comps {
                let mut best: Option<(usize, usize)> = None;
                for s in 0..c.len() {
                    let mut sn = seen.clone();
                    let nbad = walk(&c, s, &heads, &mut sn, &mut Vec::new());
                    if best.is_none_or(|b| nbad < b.0) {
                        best = Some((nbad, s));
                    }
                }
                let s = best.map(|b| b.1).unwrap_or(0);
                walk(&c, s, &heads, &mut seen, &mut Vec::new());
                let mut r = c.clone();
                r.rotate_left(s);
                out.push(r);
            }
            out
        }
    };
    let mut seen = vec![false; d.num_crossings()];
    let mut bad = Vec::new();
    for c in &order {
        walk(c, 0, &heads, &mut seen, &mut bad);
    }
    bad
}

fn walk(
    comp: &[u32],
    start: usize,
    heads: &HashMap<u32, (usize, usize)>,
    seen: &mut [bool],
    bad: &mut Vec<usize>,
) -> usize {
    let mut n = 0;
    for i in 0..comp.len() {
        let a = comp[(start + i) % comp.len()];
        let (ci, pos) = heads[&a];
        if !seen[ci] {
            seen[ci] = true;
            if pos == 0 {
                bad.push(ci);
                n += 1;
            }
        }
    }
    n
}

/// Remove monogon kinks and same-parity bigons until none remain.
fn simplify(d: &PlanarDiagram) -> PlanarDiagram {
    let mut cur = d.clone();
    'outer: loop {
        for (i, c) in cur.crossings().iter().enumerate() {
            if (0..4).any(|p| c.arcs[p] == c.arcs[(p + 1) % 4]) {
                cur = cur.with_removed_passes(&[i]);
                continue 'outer;
            }
        }
        for face in cur.faces() {
            if face.len() != 2 {
                continue;
            }
            let (c1, p1) = face[0];
            let (c2, _) = face[1];
            if c1 == c2 {
                continue;
            }
            let arc = cur.crossings()[c1].arcs[p1];
            let q = cur.crossings()[c2].arcs.iter().position(|&x| x == arc);
            if let Some(q) = q {
                if p1 % 2 == q % 2 {
                    cur = cur.with_removed_passes(&[c1, c2]);
                    continue 'outer;
                }
            }
        }
        return cur;
    }
}

/// Connected pieces as separate diagrams; loops stay with the parent.
fn split_pieces(d: &PlanarDiagram) -> Vec<PlanarDiagram> {
    let n = d.num_crossings();
    if n == 0 {
        return vec![];
    }
    let mut comp = vec![usize::MAX; n];
    let mut ends: HashMap<u32, Vec<usize>> = HashMap::new();
    for (i, c) in d.crossings().iter().enumerate() {
        for &a in &c.arcs {
            ends.entry(a).or_default().push(i);
        }
    }
    let mut k = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = k;
        while let Some(x) = stack.pop() {
            for a in d.crossings()[x].arcs {
                for &y in &ends[&a] {
                    if comp[y] == usize::MAX {
                        comp[y] = k;
                        stack.push(y);
                    }
                }
            }
        }
        k += 1;
    }
    if k == 1 {
        return vec![PlanarDiagram::new_unchecked(d.crossings().to_vec(), 0)];
    }
    (0..k)
        .map(|j| {
            let cs = d.crossings().iter().zip(&comp).filter(|(_, &c)| c == j).map(|(x, _)| *x).collect();
            PlanarDiagram::new_unchecked(cs, 0)
        })
        .collect()
}

/// Memo key. Knots: relabel from every starting arc and keep the smallest
/// encoding. Links: traversal relabeling from each component's smallest arc.
fn canonical_key(d: &PlanarDiagram) -> Key {
    let comps = d.arc_components();
    let encode = |order: &[u32]| -> Vec<Crossing> {
        let mut map = HashMap::with_capacity(order.len());
        for (i, &a) in order.iter().enumerate() {
            map.insert(a, i as u32 + 1);
        }
        let mut cs: Vec<Crossing> = d
            .crossings()
            .iter()
            .map(|c| Crossing::new(c.arcs.map(|a| map[&a]), c.sign))
            .collect();
        cs.sort_unstable();
        cs
    };
    if comps.len() == 1 {
        let c = &comps[0];
        let mut best: Option<Vec<Crossing>> = None;
        let mut rot = c.clone();
        for _ in 0..c.len() {
            let e = encode(&rot);
            if best.as_ref().is_none_or(|b| e < *b) {
                best = Some(e);
            }
            rot.rotate_left(1);
        }
        (best.unwrap_or_default(), d.loops())
    } else {
        let order: Vec<u32> = comps.concat();
        (encode(&order), d.loops())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomflyResult {
    pub poly: LaurentPoly2,
    pub e: i32,
    pub big_e: i32,
    pub b0: i32,
}

/// `b₀ = (E − e)/2 + 1`; an odd span is reported, never rounded.
pub fn mfw_bound(p: &LaurentPoly2) -> Result<i32> {
    let (e, big_e) = p.a_span()?;
    let span = big_e - e;
    if span % 2 != 0 {
        return Err(Error::OddSpan { span });
    }
    Ok(span / 2 + 1)
}

pub fn homfly_result(p: LaurentPoly2) -> Result<HomflyResult> {
    let (e, big_e) = p.a_span()?;
    let b0 = mfw_bound(&p)?;
    Ok(HomflyResult { poly: p, e, big_e, b0 })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbsoluteMfwResult {
    pub rows: Vec<(OrientationAssignment, HomflyResult)>,
    pub b0_max: i32,
    pub witness: OrientationAssignment,
}

/// MFW bound under every orientation with component 0 kept forward.
pub fn absolute_mfw(d: &PlanarDiagram, cfg: &HomflyConfig) -> Result<AbsoluteMfwResult> {
    let c = d.num_components();
    if c == 0 {
        return Err(Error::Degenerate("diagram has no components".into()));
    }
    let evals = |o: &OrientationAssignment| -> Result<(OrientationAssignment, HomflyResult)> {
        let dd = d.with_reversed(o.flags());
        Ok((o.clone(), homfly_result(homfly_with(&dd, cfg)?)?))
    };
    let orients = OrientationAssignment::enumerate(c);
    let rows: Vec<(OrientationAssignment, HomflyResult)> = if cfg.parallel {
        use rayon::prelude::*;
        orients.par_iter().map(evals).collect::<Result<_>>()?
    } else {
        orients.iter().map(evals).collect::<Result<_>>()?
    };
    let (mut best, mut witness) = (i32::MIN, rows[0].0.clone());
    for (o, r) in &rows {
        if r.b0 > best {
            best = r.b0;
            witness = o.clone();
        }
    }
    Ok(AbsoluteMfwResult { rows, b0_max: best, witness })
}

/// Exact `a·H(D₊) − a⁻¹·H(D₋) − z·H(D₀)` at crossing `x`.
pub fn skein_residual(d: &PlanarDiagram, x: usize, cfg: &HomflyConfig) -> Result<LaurentPoly2> {
    let (dp, dm) = match d.crossings()[x].sign {
        Sign::Pos => (d.clone(), d.with_switched(x)),
        Sign::Neg => (d.with_switched(x), d.clone()),
    };
    let d0 = d.with_smoothed(x);
    let hp = homfly_with(&dp, cfg)?;
    let hm = homfly_with(&dm, cfg)?;
    let h0 = homfly_with(&d0, cfg)?;
    Ok(hp.scale(1, 0, 1).sub(&hm.scale(1, 0, -1)).sub(&h0.scale(1, 1, 0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::braid_closure;

    #[test]
    fn ring_basics() {
        let p = LaurentPoly2::parse("2 z^-1 a^3 + -1 a^-2").unwrap();
        assert!(p.add(&p.neg()).is_zero());
        assert_eq!(LaurentPoly2::one().mul(&p), p);
        let d2 = LaurentPoly2::delta().pow(2);
        assert_eq!(d2.to_string(), "1 z^-2 a^-2 + -2 z^-2 + 1 z^-2 a^2");
    }

    #[test]
    fn serialization_round_trip() {
        for s in ["0", "1", "-1 z^-1 a^-1 + 1 z^-1 a^1", "-1 a^-4 + 2 a^-2 + 1 z^2 a^-2"] {
            assert_eq!(LaurentPoly2::parse(s).unwrap().to_string(), s);
        }
        assert!(LaurentPoly2::parse("1 q^2").is_err());
    }

    #[test]
    fn unknot_and_unlink() {
        assert_eq!(homfly(&PlanarDiagram::unknot()).unwrap(), LaurentPoly2::one());
        assert_eq!(homfly(&PlanarDiagram::unlink(2)).unwrap(), LaurentPoly2::delta());
        let kink = braid_closure(2, &[1]).unwrap();
        assert_eq!(homfly(&kink).unwrap(), LaurentPoly2::one());
        let two = braid_closure(2, &[1, -1]).unwrap();
        assert_eq!(homfly(&two).unwrap(), LaurentPoly2::delta());
    }

    #[test]
    fn trefoil_value() {
        // Hand expansion at one crossing: H = a⁻²·H(unknot) + a⁻¹z·H(Hopf⁺),
        // H(Hopf⁺) = a⁻²δ + a⁻¹z.
        let t = braid_closure(2, &[1, 1, 1]).unwrap();
        let h = homfly(&t).unwrap();
        assert_eq!(h.to_string(), "-1 a^-4 + 2 a^-2 + 1 z^2 a^-2");
        assert_eq!(h.a_span().unwrap(), (-4, -2));
        assert_eq!(mfw_bound(&h).unwrap(), 2);
        assert_eq!(homfly(&t.mirror()).unwrap().to_string(), "2 a^2 + -1 a^4 + 1 z^2 a^2");
    }

    #[test]
    fn strategies_and_parallel_agree() {
        let d = braid_closure(3, &[1, -2, 1, -2, 1, 2]).unwrap();
        let base = homfly(&d).unwrap();
        for strategy in [Strategy::FirstArc, Strategy::LastArc, Strategy::Greedy] {
            for parallel in [false, true] {
                let cfg = HomflyConfig { cap: 24, parallel, strategy };
                assert_eq!(homfly_with(&d, &cfg).unwrap(), base);
            }
        }
    }

    #[test]
    fn cap_and_odd_span() {
        let d = braid_closure(2, &[1, 1, 1]).unwrap();
        let cfg = HomflyConfig { cap: 2, ..Default::default() };
        assert_eq!(homfly_with(&d, &cfg), Err(Error::CapExceeded { crossings: 3, cap: 2 }));
        assert_eq!(mfw_bound(&LaurentPoly2::monomial(1, 0, 1)), Ok(1));
        assert_eq!(mfw_bound(&LaurentPoly2::parse("1 a^-1 + 1").unwrap()), Err(Error::OddSpan { span: 1 }));
        assert_eq!(mfw_bound(&LaurentPoly2::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn hopf_orientations() {
        let d = braid_closure(2, &[1, 1, 1, 1]).unwrap();
        let r = absolute_mfw(&d, &HomflyConfig::default()).unwrap();
        let b: Vec<i32> = r.rows.iter().map(|x| x.1.b0).collect();
        assert_eq!(b, vec![2, 3]);
        assert_eq!(r.b0_max, 3);
        assert_eq!(r.witness.to_string(), "01");
    }

    #[test]
    fn skein_residual_vanishes() {
        let d = braid_closure(3, &[1, 1, -2, 1, -2]).unwrap();
        for x in 0..d.num_crossings() {
            assert!(skein_residual(&d, x, &HomflyConfig::default()).unwrap().is_zero());
        }
    }
}
