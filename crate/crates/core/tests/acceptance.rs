//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion.

use std::fmt::Write as _;

use num_rational::Ratio;
use rand::Rng;
use rayon::prelude::*;

use ropebound_core::bounds::{certify, ropelength_lower, BoundsCertificate, CertifyConfig};
use ropebound_core::diagram::{braid_closure, PlanarDiagram, Sign};
use ropebound_core::family::{family_pd, FamilySpec};
use ropebound_core::homfly::{absolute_mfw, homfly_with, mfw_bound, HomflyConfig, LaurentPoly2};
use ropebound_core::lattice::{parse_lattice_link, LatticeLink};
use ropebound_core::random::{random_braid_diagram, random_cord_diagram, rng};
use ropebound_core::seifert::{is_coherent, make_coherent, smooth, smooth_cord_realization};

/// Oriented diagrams seen along the way, checked against b0 <= s at the end.
#[derive(Default)]
struct Chain {
    checked: usize,
    violations: Vec<String>,
}

impl Chain {
    fn note(&mut self, what: &str, d: &PlanarDiagram, h: &LaurentPoly2) {
        let Ok(b0) = mfw_bound(h) else { return };
        self.checked += 1;
        let s = smooth(d).closed as i32;
        if b0 > s {
            self.violations.push(format!("{what}: b0={b0} > s={s}"));
        }
    }
}

struct Run {
    results: Vec<(bool, String)>,
    transcript: String,
    chain: Chain,
}

fn cfg(parallel: bool) -> HomflyConfig {
    HomflyConfig { parallel, ..HomflyConfig::default() }
}

fn crit1(run: &mut Run, parallel: bool) -> (bool, String) {
    let c = cfg(parallel);
    let unknot = homfly_with(&PlanarDiagram::unknot(), &c).unwrap();
    let unlink = homfly_with(&PlanarDiagram::unlink(2), &c).unwrap();
    // (a - a^-1) z^-1 written out by hand
    let delta = LaurentPoly2::monomial(1, -1, 1).sub(&LaurentPoly2::monomial(1, -1, -1));
    let _ = writeln!(run.transcript, "unknot {unknot}\nunlink {unlink}");
    // a kinked unknot exercises the reduction path too
    let kinked = braid_closure(2, &[1]).unwrap();
    let hk = homfly_with(&kinked, &c).unwrap();
    run.chain.note("kinked unknot", &kinked, &hk);
    let ok = unknot == LaurentPoly2::one() && unlink == delta && hk == LaurentPoly2::one();
    (ok, format!("unknot = {unknot}, 2-unlink = {unlink}"))
}

fn crit2(run: &mut Run, parallel: bool) -> (bool, String) {
    let c = cfg(parallel);
    let mut r = rng(0x5e1);
    let mut bad = 0;
    for i in 0..200 {
        let d = random_braid_diagram(&mut r, 4, 8).unwrap();
        let x = r.gen_range(0..d.num_crossings());
        let (dp, dm) = match d.crossings()[x].sign {
            Sign::Pos => (d.clone(), d.with_switched(x)),
            Sign::Neg => (d.with_switched(x), d.clone()),
        };
        let d0 = d.with_smoothed(x);
        let (hp, hm, h0) =
            (homfly_with(&dp, &c).unwrap(), homfly_with(&dm, &c).unwrap(), homfly_with(&d0, &c).unwrap());
        let a = LaurentPoly2::monomial(1, 0, 1);
        let a_inv = LaurentPoly2::monomial(1, 0, -1);
        let z = LaurentPoly2::monomial(1, 1, 0);
        let residual = a.mul(&hp).sub(&a_inv.mul(&hm)).sub(&z.mul(&h0));
        if !residual.is_zero() {
            bad += 1;
        }
        run.chain.note(&format!("skein #{i} D+"), &dp, &hp);
        run.chain.note(&format!("skein #{i} D-"), &dm, &hm);
        run.chain.note(&format!("skein #{i} D0"), &d0, &h0);
        let _ = writeln!(run.transcript, "skein {i} {hp} | {hm} | {h0}");
    }
    (bad == 0, format!("200 diagrams, {bad} nonzero residuals"))
}

fn rows_note(run: &mut Run, name: &str, d: &PlanarDiagram, parallel: bool) -> Vec<i32> {
    let m = absolute_mfw(d, &cfg(parallel)).unwrap();
    let mut b = Vec::new();
    for (o, row) in &m.rows {
        let od = d.with_reversed(o.flags());
        run.chain.note(&format!("{name} [{o}]"), &od, &row.poly);
        let _ = writeln!(run.transcript, "{name} {o} {} b0={}", row.poly, row.b0);
        b.push(row.b0);
    }
    b
}

fn crit3(run: &mut Run, parallel: bool) -> (bool, String) {
    let mut ok = true;
    let mut lines = Vec::new();
    for n in 1..=4usize {
        let d = family_pd(&FamilySpec::Torus2 { n }, 24).unwrap();
        let mut rows = rows_note(run, &format!("torus2({n})"), &d, parallel);
        rows.sort();
        let b0 = *rows.iter().max().unwrap();
        let want_rows = if n == 1 { vec![2, 2] } else { vec![2, n as i32 + 1] };
        let bound = ropelength_lower(b0 as i64).unwrap();
        let cr = 2 * n as i64;
        ok &= rows == want_rows && b0 == n as i32 + 1 && bound > Ratio::new(cr, 28);
        lines.push(format!("n={n} b0={rows:?} B0={b0} {}/{} > {cr}/28", bound.numer(), bound.denom()));
    }
    (ok, lines.join("; "))
}

fn crit4(run: &mut Run, parallel: bool) -> (bool, String) {
    let mut ok = true;
    let mut twist = Vec::new();
    for n in 4..=8usize {
        let d = family_pd(&FamilySpec::Twist { n }, 24).unwrap();
        let b0 = *rows_note(run, &format!("twist({n})"), &d, parallel).iter().max().unwrap();
        let want = if n % 2 == 1 { (n + 1) / 2 } else { n / 2 + 1 } as i32;
        ok &= b0 == want;
        twist.push(format!("{n}:{b0}"));
    }
    let mut triples = 0;
    let mut misses = Vec::new();
    for k in 0..=5usize {
        for m in 0..=5usize {
            for n in 0..=5usize {
                if (2 * k + 1) + (2 * m + 1) + (2 * n + 1) > 13 {
                    continue;
                }
                triples += 1;
                let d = family_pd(&FamilySpec::Pretzel { k, m, n }, 24).unwrap();
                let b0 = *rows_note(run, &format!("pretzel({k},{m},{n})"), &d, parallel).iter().max().unwrap();
                if b0 != (2 + k + m + n) as i32 {
                    misses.push(format!("({k},{m},{n})->{b0}"));
                }
            }
        }
    }
    ok &= misses.is_empty();
    (ok, format!("twist B0 [{}]; {triples} pretzel triples, mismatches {misses:?}", twist.join(" ")))
}

fn crit5(run: &mut Run, parallel: bool) -> (bool, String) {
    let mut r = rng(0x1e44a);
    let cds: Vec<_> = (0..1000)
        .map(|_| {
            let n = r.gen_range(0..=8);
            random_cord_diagram(&mut r, n)
        })
        .collect();
    let check = |cd: &ropebound_core::cord::CordDiagram| -> std::result::Result<String, String> {
        let n = cd.len();
        let res = make_coherent(cd).map_err(|e| e.to_string())?;
        if !is_coherent(&res.realization).map_err(|e| e.to_string())? {
            return Err("not coherent".into());
        }
        let oracle = smooth_cord_realization(&res.realization).map_err(|e| e.to_string())?;
        if oracle.matching.len() != n {
            return Err(format!("{} partial circles for {n} cords", oracle.matching.len()));
        }
        if oracle.closed != res.closed || (n > 0 && res.closed > n - 1) || (n == 0 && res.closed != 0) {
            return Err(format!("closed {} for {n} cords", oracle.closed));
        }
        Ok(format!("{n} {} {:?}", res.closed, res.matching))
    };
    let out: Vec<_> = if parallel { cds.par_iter().map(check).collect() } else { cds.iter().map(check).collect() };
    let mut failures = 0;
    let mut worst = 0usize;
    for (cd, o) in cds.iter().zip(&out) {
        match o {
            Ok(s) => {
                let _ = writeln!(run.transcript, "cords {s}");
                worst = worst.max(cd.len());
            }
            Err(e) => {
                failures += 1;
                let _ = writeln!(run.transcript, "cords FAIL {e}");
            }
        }
    }
    (failures == 0, format!("1000 cord diagrams up to {worst} cords, {failures} failures"))
}

/// Right-handed (2, k) torus link from the skein relation alone:
/// H(k) = a^-2 H(k-2) + a^-1 z H(k-1), H(0) = delta, H(1) = 1.
fn torus2_oracle(k: usize) -> LaurentPoly2 {
    let mut prev = LaurentPoly2::monomial(1, -1, 1).sub(&LaurentPoly2::monomial(1, -1, -1));
    let mut cur = LaurentPoly2::one();
    for _ in 1..k {
        let next = prev.scale(1, 0, -2).add(&cur.scale(1, 1, -1));
        prev = cur;
        cur = next;
    }
    cur
}

fn fixture(name: &str) -> LatticeLink {
    let path = format!("{}/fixtures/{name}.lat", env!("CARGO_MANIFEST_DIR"));
    parse_lattice_link(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn crit6(run: &mut Run, parallel: bool) -> (bool, String) {
    let figure8 = LaurentPoly2::parse("1 a^-2 + -1 + 1 a^2 + -1 z^2").unwrap();
    let cases = [
        ("trefoil24", 24usize, Some(2), torus2_oracle(3)),
        ("figure8_30", 30, Some(3), figure8),
        ("knot51_34", 34, None, torus2_oracle(5)),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, l, want_b0, frozen) in cases {
        let link = fixture(name);
        let cert: BoundsCertificate = match certify(&link, &CertifyConfig { homfly: cfg(parallel) }) {
            Ok(c) => c,
            Err(e) => {
                ok = false;
                parts.push(format!("{name}: {e}"));
                continue;
            }
        };
        let frozen = frozen.to_string();
        let good = cert.length == l
            && cert.all_pass()
            && cert.recheck().is_empty()
            && want_b0.is_none_or(|b| cert.b0() == b)
            && cert.derived.min_steps_at_least >= 3
            && ropelength_lower(cert.b0() as i64).unwrap() >= Ratio::new(1, 7)
            && cert.homfly.rewritten == cert.homfly.naive
            && cert.homfly.rewritten == frozen;
        ok &= good;
        for row in &cert.homfly.rows {
            run.chain.checked += 1;
            if row.b0 as usize > cert.seifert.rewritten {
                run.chain.violations.push(format!("{name} [{}]", row.orientation));
            }
        }
        run.chain.checked += 1;
        let naive_b0 = mfw_bound(&LaurentPoly2::parse(&cert.homfly.naive).unwrap()).unwrap();
        if naive_b0 as usize > cert.seifert.naive {
            run.chain.violations.push(format!("{name} naive projection"));
        }
        let _ = writeln!(run.transcript, "{}", cert.to_toml().unwrap());
        parts.push(format!("{name}: {}", cert.summary()));
    }
    (ok, parts.join("; "))
}

type Criterion = fn(&mut Run, bool) -> (bool, String);

fn run_all(parallel: bool) -> Run {
    let mut run = Run { results: Vec::new(), transcript: String::new(), chain: Chain::default() };
    let crits: [Criterion; 6] = [crit1, crit2, crit3, crit4, crit5, crit6];
    for c in crits {
        let r = c(&mut run, parallel);
        run.results.push(r);
    }
    run
}

/// Writes straight to the process stdout so the lines show up even when the
/// harness captures test output.
fn report(line: String) {
    use std::io::Write as _;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}

#[test]
fn acceptance() {
    let seq = run_all(false);
    let par = run_all(true);
    let mut all = true;
    for (i, (ok, detail)) in seq.results.iter().enumerate() {
        let ok = *ok && par.results[i].0;
        all &= ok;
        report(format!("criterion {}: {}  {detail}", i + 1, if ok { "PASS" } else { "FAIL" }));
    }
    let checked = seq.chain.checked + par.chain.checked;
    let mut violations = seq.chain.violations.clone();
    violations.extend(par.chain.violations.iter().cloned());
    let ok7 = violations.is_empty() && checked > 0;
    all &= ok7;
    report(format!(
        "criterion 7: {}  {checked} oriented diagrams, {} violations {:?}",
        if ok7 { "PASS" } else { "FAIL" },
        violations.len(),
        violations.iter().take(5).collect::<Vec<_>>()
    ));
    let ok8 = seq.transcript == par.transcript;
    all &= ok8;
    report(format!(
        "criterion 8: {}  transcripts of {} bytes {}",
        if ok8 { "PASS" } else { "FAIL" },
        seq.transcript.len(),
        if ok8 { "identical" } else { "differ" }
    ));
    assert!(all, "acceptance criteria failed");
}
