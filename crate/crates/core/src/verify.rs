//! Property suites: algebra and AZ grading laws, table reproduction, Lagrangians, pairing,
//! index identities, determinant and reordering checks.

use crate::azgrading::{grade_algebra_element, grade_zelement, grade_zgen, GradedValue};
use crate::circle::{all_chords, PointedMatchedCircle, ReebChord};
use crate::diagram::{glue, reorder_parity, CircleOrdering, Convention, Curve, Diagram, Point, Side};
use crate::error::Result;
use crate::index::{
    az_multiplication_domain, embedded_index, embedded_index_rational, iota, iota_reversed, iota_set,
    AzComplex, ChordTerm, CornerPoint, Domain, Region, RegionComplex,
};
use crate::io::{data_dir, load_ainf, load_diagram, load_type_d};
use crate::lagrangian::{
    absolute_grading, canonical_lagrangian, format_tuple, format_vector, h1_prefix, is_embeddable, l_prefix,
    validate_hz,
};
use crate::modules::{box_tensor, pairing_grading_check};
use crate::perm::one_line;
use crate::strands::{a_matched_z, enumerate_zgens, ZElement, ZGen};
use crate::Rational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;

/// Violations kept per suite; the count is always exact.
pub const MAX_REPORTED: usize = 20;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub checks: u64,
    pub failures: u64,
    pub violations: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.into(),
            checks: 0,
            failures: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.failures += 1;
        if self.violations.len() < MAX_REPORTED {
            self.violations.push(what);
        }
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.checks += other.checks;
        self.failures += other.failures;
        for v in other.violations {
            if self.violations.len() < MAX_REPORTED {
                self.violations.push(v);
            }
        }
    }

    fn expect<T: PartialEq + fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        let ok = got == want;
        self.check(ok, || format!("{label}: got {got:?}, expected {want:?}"));
    }

    fn result<T>(&mut self, label: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.fail(format!("{label}: {e}"));
                None
            }
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        write!(
            f,
            "{:<12} {verdict}  {} checks, {} violations",
            self.name, self.checks, self.failures
        )?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub exhaustive: bool,
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            exhaustive: false,
            samples: 100_000,
            seed: 0,
        }
    }
}

const CHUNK: usize = 1000;

/// Runs `f` on `samples` seeded draws, split into independently seeded chunks.
fn sampled<F>(name: &str, samples: usize, seed: u64, f: F) -> SuiteReport
where
    F: Fn(&mut ChaCha8Rng, &mut SuiteReport) + Sync,
{
    let chunks = samples.div_ceil(CHUNK);
    let parts: Vec<SuiteReport> = (0..chunks)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            let mut rep = SuiteReport::new(name);
            for _ in 0..CHUNK.min(samples - k * CHUNK) {
                f(&mut rng, &mut rep);
            }
            rep
        })
        .collect();
    let mut out = SuiteReport::new(name);
    for p in parts {
        out.absorb(p);
    }
    out
}

fn merge(name: &str, parts: Vec<SuiteReport>) -> SuiteReport {
    let mut out = SuiteReport::new(name);
    for p in parts {
        out.absorb(p);
    }
    out
}

fn show(e: &ZElement) -> String {
    e.to_string()
}

fn pair_laws(c: &PointedMatchedCircle, a: &ZGen, b: &ZGen, rep: &mut SuiteReport) {
    let ab = a.multiply(b, c);
    if !ab.is_zero() {
        let want = grade_zgen(c, a) + grade_zgen(c, b);
        match grade_zelement(c, &ab) {
            Ok(m) => rep.check(m == want, || format!("m({a}·{b}) = {m}, expected {want}")),
            Err(e) => rep.fail(format!("{a}·{b}: {e}")),
        }
    }
    let lhs = ab.differential(c);
    let rhs = a
        .differential(c)
        .multiply(&ZElement::from_gen(b.clone()), c)
        .add(&ZElement::from_gen(a.clone()).multiply(&b.differential(c), c));
    rep.check(lhs == rhs, || {
        format!(
            "Leibniz fails on {a}, {b}: ∂(ab) = {}, ∂a·b + a·∂b = {}",
            show(&lhs),
            show(&rhs)
        )
    });
}

fn single_laws(c: &PointedMatchedCircle, a: &ZGen, rep: &mut SuiteReport) {
    let d = a.differential(c);
    rep.check(d.differential(c).is_zero(), || format!("∂² {a} ≠ 0"));
    if !d.is_zero() {
        let want = grade_zgen(c, a) + GradedValue::ONE;
        match grade_zelement(c, &d) {
            Ok(m) => rep.check(m == want, || format!("m(∂{a}) = {m}, expected {want}")),
            Err(e) => rep.fail(format!("∂{a}: {e}")),
        }
    }
}

fn triple_law(c: &PointedMatchedCircle, a: &ZGen, b: &ZGen, x: &ZGen, rep: &mut SuiteReport) {
    let l = a.multiply(b, c).multiply(&ZElement::from_gen(x.clone()), c);
    let r = ZElement::from_gen(a.clone()).multiply(&b.multiply(x, c), c);
    rep.check(l == r, || {
        format!("({a}·{b})·{x} = {} but {a}·({b}·{x}) = {}", show(&l), show(&r))
    });
}

/// `d^2 = 0`, Leibniz, associativity and the grading laws on `A(Z)`, and homogeneity of
/// every `I(s) a(rho)`.
pub fn algebra_laws(c: &PointedMatchedCircle, cfg: &VerifyConfig) -> SuiteReport {
    let gens = enumerate_zgens(c);
    let mut rep = SuiteReport::new("algebra");
    for a in &gens {
        single_laws(c, a, &mut rep);
    }
    for set in chord_sets(c.n(), 3) {
        let Ok(a) = a_matched_z(&set, c) else { continue };
        let mut parts: std::collections::BTreeMap<u64, ZElement> = Default::default();
        for g in a.terms() {
            parts
                .entry(g.left_idempotent(c))
                .or_insert_with(ZElement::zero)
                .toggle(g.clone());
        }
        for (s, part) in parts {
            let r = grade_zelement(c, &part);
            rep.check(r.is_ok(), || format!("I{s:b} a({set:?}) is not homogeneous"));
        }
    }
    if cfg.exhaustive {
        let parts: Vec<SuiteReport> = gens
            .par_iter()
            .map(|a| {
                let mut r = SuiteReport::new("algebra");
                for b in &gens {
                    pair_laws(c, a, b, &mut r);
                    for x in &gens {
                        triple_law(c, a, b, x, &mut r);
                    }
                }
                r
            })
            .collect();
        rep.absorb(merge("algebra", parts));
    } else {
        let by_left = crate::strands::zgens_by_left(c, &gens);
        let composable = |rng: &mut ChaCha8Rng, a: &ZGen| -> ZGen {
            let right = a.right_idempotent(c);
            by_left
                .get(&right)
                .and_then(|v| v.choose(rng).cloned())
                .unwrap_or_else(|| gens.choose(rng).unwrap().clone())
        };
        rep.absorb(sampled("algebra", cfg.samples, cfg.seed, |rng, r| {
            let a = gens.choose(rng).unwrap();
            let b = if rng.gen_bool(0.5) {
                composable(rng, a)
            } else {
                gens.choose(rng).unwrap().clone()
            };
            pair_laws(c, a, &b, r);
        }));
        rep.absorb(sampled("algebra", cfg.samples, cfg.seed ^ 0x5eed, |rng, r| {
            let a = gens.choose(rng).unwrap();
            let b = composable(rng, a);
            let x = composable(rng, &b);
            triple_law(c, a, &b, &x, r);
        }));
    }
    rep
}

fn az_pair(c: &PointedMatchedCircle, a: &ZGen, x: &ZGen, rep: &mut SuiteReport) {
    let ma = grade_zgen(c, a);
    let mx = grade_zgen(c, x);
    for (label, prod) in [("left", a.multiply(x, c)), ("right", x.multiply(a, c))] {
        if prod.is_zero() {
            continue;
        }
        let want = ma + mx;
        match grade_algebra_element(c, &prod.expand(c)) {
            Ok(m) => rep.check(m == want, || {
                format!("{label} action {a}, {x}: {m}, expected {want}")
            }),
            Err(e) => rep.fail(format!("{label} action {a}, {x}: {e}")),
        }
    }
}

fn az_single(c: &PointedMatchedCircle, x: &ZGen, rep: &mut SuiteReport) {
    let mx = grade_zgen(c, x);
    match grade_algebra_element(c, &x.expand(c)) {
        Ok(m) => rep.check(m == mx, || {
            format!("sections of {x} disagree with its representative")
        }),
        Err(e) => rep.fail(format!("{x}: {e}")),
    }
    let d = x.differential(c);
    if !d.is_zero() {
        match grade_algebra_element(c, &d.expand(c)) {
            Ok(m) => rep.check(m == mx + GradedValue::ONE, || format!("m(∂{x}) = {m}")),
            Err(e) => rep.fail(format!("∂{x}: {e}")),
        }
    }
}

/// Left action, right action and differential laws for the sign of AZ generators, computed
/// on every intersection-point set of every product rather than on one representative.
pub fn az_laws(c: &PointedMatchedCircle, cfg: &VerifyConfig) -> SuiteReport {
    let gens = enumerate_zgens(c);
    let mut rep = SuiteReport::new("az");
    for x in &gens {
        az_single(c, x, &mut rep);
    }
    if cfg.exhaustive {
        let parts: Vec<SuiteReport> = gens
            .par_iter()
            .map(|a| {
                let mut r = SuiteReport::new("az");
                for x in &gens {
                    az_pair(c, a, x, &mut r);
                }
                r
            })
            .collect();
        rep.absorb(merge("az", parts));
    } else {
        let by_left = crate::strands::zgens_by_left(c, &gens);
        rep.absorb(sampled("az", cfg.samples, cfg.seed ^ 0xa2, |rng, r| {
            let a = gens.choose(rng).unwrap();
            let x = by_left
                .get(&a.right_idempotent(c))
                .and_then(|v| v.choose(rng))
                .unwrap_or(a);
            az_pair(c, a, x, r);
        }));
    }
    rep
}

fn chord_sets(n: usize, max: usize) -> Vec<Vec<ReebChord>> {
    fn go(
        chords: &[ReebChord],
        from: usize,
        max: usize,
        cur: &mut Vec<ReebChord>,
        out: &mut Vec<Vec<ReebChord>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max {
            return;
        }
        for i in from..chords.len() {
            let ch = chords[i];
            if cur.iter().any(|o| o.start == ch.start || o.end == ch.end) {
                continue;
            }
            cur.push(ch);
            go(chords, i + 1, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&all_chords(n), 0, max, &mut Vec::new(), &mut out);
    out
}

/// Sign tables of the bundled diagrams and of their gluing.
pub fn tables() -> SuiteReport {
    let mut rep = SuiteReport::new("tables");
    let dir = data_dir();
    let Some(fig) = rep.result("figure2", load_diagram(&dir.join("figure2.json"))) else {
        return rep;
    };
    if let Some(rows) = rep.result("figure2 grading", fig.grade_all()) {
        let names: Vec<&str> = rows.iter().map(|r| r.name.as_str()).collect();
        rep.expect("figure2 names", names, vec!["x", "y", "z", "w"]);
        let occ: Vec<Vec<usize>> = rows.iter().map(|r| r.occupancy.clone()).collect();
        rep.expect("o(g)", occ, vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]);
        let so: Vec<String> = rows
            .iter()
            .map(|r| r.sigma_o.as_ref().map_or(String::new(), |s| one_line(s)))
            .collect();
        rep.expect(
            "sigma_o",
            so,
            ["(1 3 2 4)", "(1 4 2 3)", "(2 3 1 4)", "(2 4 1 3)"]
                .map(String::from)
                .to_vec(),
        );
        let sx: Vec<String> = rows.iter().map(|r| one_line(&r.sigma_x)).collect();
        rep.expect(
            "sigma_x",
            sx,
            ["(1 3 4 2)", "(1 4 3 2)", "(2 3 4 1)", "(2 4 3 1)"]
                .map(String::from)
                .to_vec(),
        );
        rep.expect(
            "sign sigma_o",
            rows.iter().map(|r| r.sign_sigma_o).collect::<Vec<_>>(),
            vec![-1, 1, 1, -1],
        );
        rep.expect(
            "sign sigma_x",
            rows.iter().map(|r| r.sign_sigma_x).collect::<Vec<_>>(),
            vec![1, -1, -1, 1],
        );
        let local: Vec<i8> = rows.iter().map(|r| r.local.iter().product()).collect();
        rep.expect("local products", local, vec![-1, 1, 1, -1]);
        rep.expect(
            "figure2 s",
            rows.iter().map(|r| r.s).collect::<Vec<_>>(),
            vec![1, -1, -1, 1],
        );
    }
    let Some(hz) = rep.result("hz", load_diagram(&dir.join("hz_antipodal.json"))) else {
        return rep;
    };
    if let Some(rows) = rep.result("hz grading", hz.grade_all()) {
        let got: Vec<(&str, i8)> = rows.iter().map(|r| (r.name.as_str(), r.s)).collect();
        rep.expect("hz s", got, vec![("a", -1), ("b", -1), ("c", -1), ("d", 1)]);
    }
    if let Some(g) = rep.result("glue", glue(&hz, &fig)) {
        let got: Vec<(String, i8)> = g
            .closed_generators
            .iter()
            .map(|x| {
                let r = g.closed.grade(x);
                (r.name, r.s)
            })
            .collect();
        rep.expect(
            "glued s",
            got,
            vec![("a⊠w".into(), -1), ("b⊠y".into(), 1), ("d⊠y".into(), -1)],
        );
    }
    rep
}

pub const H1_PREFIX: [&str; 21] = [
    "0", "-e4", "e4", "-e3", "e3", "-e2", "e2", "-e1", "e1", "-e3-e4", "-e3+e4", "e3-e4", "e3+e4", "-e2-e4",
    "-e2+e4", "e2-e4", "e2+e4", "-e2-e3", "-e2+e3", "e2-e3", "e2+e3",
];

/// `l_Z` of the antipodal genus-2 circle, the ordered prefixes and the `H_Z` diagrams.
pub fn lagrangian_suite(norm_cap: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("lagrangian");
    let c = PointedMatchedCircle::antipodal(2);
    let form = c.intersection_form();
    if let Some(l) = rep.result("search", canonical_lagrangian(&c, norm_cap)) {
        rep.expect("l_Z", format_tuple(&l.tuple), "(-e4, -e2+e3)".to_string());
        rep.expect("embeddable", is_embeddable(&l.tuple, &form).ok(), Some(true));
        let doubled: Vec<Vec<i64>> = l
            .tuple
            .iter()
            .map(|v| v.iter().map(|x| 2 * x).collect())
            .collect();
        rep.expect(
            "2 l_Z embeddable",
            is_embeddable(&doubled, &form).ok(),
            Some(false),
        );
    }
    let h1: Vec<String> = h1_prefix(4, 21).iter().map(|v| format_vector(v)).collect();
    rep.expect("H1 prefix", h1, H1_PREFIX.map(String::from).to_vec());
    let lp: Vec<String> = l_prefix(&form, 2).iter().map(|t| format_tuple(t)).collect();
    rep.expect(
        "L prefix",
        lp,
        vec!["(-e4, -e2+e3)".to_string(), "(-e4, e2-e3)".to_string()],
    );
    for c in [
        PointedMatchedCircle::split(1),
        PointedMatchedCircle::split(2),
        PointedMatchedCircle::split(3),
    ] {
        if let Some(l) = rep.result("search", canonical_lagrangian(&c, norm_cap)) {
            let f = c.intersection_form();
            rep.expect("split embeddable", is_embeddable(&l.tuple, &f).ok(), Some(true));
        }
    }
    for f in [
        "hz_antipodal.json",
        "hz_antipodal_alt.json",
        "hz_split1.json",
        "hz_split2.json",
    ] {
        if let Some(d) = rep.result(f, load_diagram(&data_dir().join(f))) {
            if let Some(r) = rep.result(f, validate_hz(&d, norm_cap)) {
                rep.check(r.pass(), || format!("{f} does not realize l_Z"));
            }
        }
    }
    rep
}

/// The glued example, the absolute shift and the module pairing.
pub fn pairing_suite(norm_cap: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("pairing");
    let dir = data_dir();
    let (Some(fig), Some(hz)) = (
        rep.result("figure2", load_diagram(&dir.join("figure2.json"))),
        rep.result("hz", load_diagram(&dir.join("hz_antipodal.json"))),
    ) else {
        return rep;
    };
    if let Some(g) = rep.result("absolute", absolute_grading(&fig, &hz, norm_cap)) {
        rep.expect("chi before", g.chi_before, -1);
        rep.expect("chi after", g.chi_after, 1);
        rep.expect("h1 order", g.det.abs(), 1);
        let abs: Vec<u8> = g.rows.iter().map(|r| r.absolute.m).collect();
        rep.expect("absolute m", abs, vec![1, 0, 0, 1]);
    }
    let (Some(d), Some(m)) = (
        rep.result("type D", load_type_d(&dir.join("figure2_typed.json"))),
        rep.result("A-infinity", load_ainf(&dir.join("hz_ainf.json"))),
    ) else {
        return rep;
    };
    rep.check(d.validate().is_valid(), || {
        "type D structure fails validation".into()
    });
    rep.check(m.validate().is_valid(), || {
        "A-infinity module fails validation".into()
    });
    if let Some(cx) = rep.result("box", box_tensor(&m, &d)) {
        rep.check(cx.d_squared_zero(), || "∂² ≠ 0 on the box tensor product".into());
        let v = cx.grading_violations();
        rep.check(v.is_empty(), || v.join("; "));
    }
    if let Some(g) = rep.result("glue", glue(&hz, &fig)) {
        if let Some(p) = rep.result("pair", pairing_grading_check(&m, &d, &g.closed)) {
            rep.check(p.offset.is_some(), || "pairing offset is not constant".into());
        }
    }
    rep
}

/// All matchings of `4 genus` points giving a pointed matched circle.
pub fn all_circles(genus: usize) -> Vec<PointedMatchedCircle> {
    fn go(
        free: &mut Vec<usize>,
        cur: &mut Vec<(usize, usize)>,
        genus: usize,
        out: &mut Vec<PointedMatchedCircle>,
    ) {
        if free.is_empty() {
            if let Ok(c) = PointedMatchedCircle::new(genus, cur) {
                out.push(c);
            }
            return;
        }
        let a = free.remove(0);
        for i in 0..free.len() {
            let b = free.remove(i);
            cur.push((a, b));
            go(free, cur, genus, out);
            cur.pop();
            free.insert(i, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    go(&mut (1..=4 * genus).collect(), &mut Vec::new(), genus, &mut out);
    out
}

fn sequences(chords: &[ReebChord], l: usize) -> Vec<Vec<ReebChord>> {
    let mut out: Vec<Vec<ReebChord>> = vec![Vec::new()];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|s| {
                chords.iter().map(move |&c| {
                    let mut t = s.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    out
}

fn synthetic_d_side(rng: &mut ChaCha8Rng, chords: &ChordTerm) -> (RegionComplex, Domain) {
    let regions = rng.gen_range(1..=4);
    let mut rc = RegionComplex::default();
    for i in 0..regions {
        rc.regions.push(Region {
            name: format!("R{i}"),
            euler: Rational::new(rng.gen_range(-4..=4), 4),
        });
    }
    let mut d = Domain::zero(regions);
    for m in d.multiplicities.iter_mut() {
        *m = rng.gen_range(0..=3);
    }
    for (label, k) in [("x", rng.gen_range(1..=3)), ("y", rng.gen_range(1..=3))] {
        for j in 0..k {
            let corners = [(); 4].map(|_| rng.gen_bool(0.5).then(|| rng.gen_range(0..regions)));
            rc.points.push(CornerPoint {
                name: format!("{label}{j}"),
                corners,
            });
            let idx = rc.points.len() - 1;
            if label == "x" {
                d.x.push(idx)
            } else {
                d.y.push(idx)
            }
        }
    }
    let frac = embedded_index_rational(&rc, &d, chords).fract();
    rc.regions.push(Region {
        name: "filler".into(),
        euler: -frac + Rational::from_integer(rng.gen_range(-2..=2)),
    });
    d.multiplicities.push(1);
    (rc, d)
}

/// The AZ index, the reversal identity for `iota` and additivity under gluing.
pub fn index_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("index");
    let circles: Vec<PointedMatchedCircle> = (1..=2).flat_map(all_circles).collect();
    let parts: Vec<SuiteReport> = circles
        .par_iter()
        .map(|c| {
            let mut r = SuiteReport::new("index");
            let az = AzComplex::new(c);
            let sets = chord_sets(c.n(), 3);
            for s in 0..1u64 << c.arcs() {
                let s = s << 1;
                for rho in &sets {
                    if let Ok(d) = az_multiplication_domain(c, &az, s, rho) {
                        let ind = embedded_index(&az.complex, &d, &ChordTerm::Sets(vec![rho.clone()]));
                        r.check(ind == Ok(1), || format!("{c}: ind(I{s:b} a{rho:?}) = {ind:?}"));
                    }
                }
            }
            r
        })
        .collect();
    rep.absorb(merge("index", parts));
    for n in [4usize, 8] {
        let chords = all_chords(n);
        for l in 1..=3 {
            for seq in sequences(&chords, l) {
                let want = Rational::from_integer(-(l as i64)) - iota(&seq);
                let got = iota_reversed(&seq, n);
                rep.check(got == want, || {
                    format!("iota reversal fails on {seq:?}: {got} vs {want}")
                });
            }
        }
    }
    rep.absorb(sampled(
        "index",
        1000.max(cfg.samples / 100),
        cfg.seed ^ 0x1d,
        |rng, r| {
            let c = circles.choose(rng).unwrap();
            let az = AzComplex::new(c);
            let sets = chord_sets(c.n(), 3);
            let (set, dom, seq) = loop {
                let set = sets.choose(rng).unwrap();
                let s = rng.gen_range(0..1u64 << c.arcs()) << 1;
                if let (Ok(d), Some(seq)) = (
                    az_multiplication_domain(c, &az, s, set),
                    compatible_order(set, c.n()),
                ) {
                    break (set.clone(), d, seq);
                }
            };
            let ind_a = embedded_index(&az.complex, &dom, &ChordTerm::Sets(vec![set.clone()]));
            let d_chords = ChordTerm::Sequence(seq.clone());
            let (rc_d, dom_d) = synthetic_d_side(rng, &d_chords);
            let ind_d = embedded_index(&rc_d, &dom_d, &d_chords);
            let (rc, _, np) = az.complex.disjoint_union(&rc_d);
            let glued = Domain {
                multiplicities: [dom.multiplicities.clone(), dom_d.multiplicities.clone()].concat(),
                x: dom
                    .x
                    .iter()
                    .copied()
                    .chain(dom_d.x.iter().map(|p| p + np))
                    .collect(),
                y: dom
                    .y
                    .iter()
                    .copied()
                    .chain(dom_d.y.iter().map(|p| p + np))
                    .collect(),
            };
            let ind = embedded_index(&rc, &glued, &ChordTerm::Provincial);
            match (ind_a, ind_d, ind) {
                (Ok(a), Ok(d), Ok(g)) => r.check(g == a + d - 1, || {
                    format!("additivity fails for {set:?} / {seq:?}: {g} vs {a} + {d} - 1")
                }),
                other => r.fail(format!("non-integral index in additivity check: {other:?}")),
            }
        },
    ));
    rep
}

/// An ordering of the reversed chords of `set` with `iota(set) = -l - iota(seq)`.
fn compatible_order(set: &[ReebChord], n: usize) -> Option<Vec<ReebChord>> {
    let l = set.len() as i64;
    let target = Rational::from_integer(-l) - iota_set(set);
    let mut idx: Vec<usize> = (0..set.len()).collect();
    loop {
        let seq: Vec<ReebChord> = idx.iter().map(|&i| set[i].reverse(n)).collect();
        if iota(&seq) == target {
            return Some(seq);
        }
        if !next_permutation(&mut idx) {
            return None;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// A closed diagram of genus `g` with at most `max_points` points on each pair of circles.
pub fn random_closed_diagram(rng: &mut ChaCha8Rng, g: usize, max_points: usize) -> Diagram {
    let mut points = Vec::new();
    for i in 0..g {
        for j in 0..g {
            let k = rng.gen_range(0..=max_points);
            for _ in 0..k {
                points.push(Point {
                    id: format!("p{}", points.len()),
                    alpha: Curve::Circle(i),
                    beta: Curve::Circle(j),
                    sign: if rng.gen_bool(0.5) { 1 } else { -1 },
                });
            }
        }
    }
    Diagram {
        genus: g,
        boundary: None,
        convention: Convention::Closed,
        side: Side::Alpha,
        alpha_circles: (1..=g).map(|i| format!("alpha{i}")).collect(),
        beta_circles: (1..=g).map(|i| format!("beta{i}")).collect(),
        points,
        generator_names: Vec::new(),
    }
}

/// `sum_x s(x) = det` on seeded random closed diagrams.
pub fn determinant_suite(count: usize, seed: u64) -> SuiteReport {
    let parts: Vec<SuiteReport> = (0..count)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(0xde7 + k as u64);
            let g = rng.gen_range(1..=4);
            let max_points = if g == 4 { 3 } else { 6 };
            let d = random_closed_diagram(&mut rng, g, max_points);
            let mut r = SuiteReport::new("determinant");
            if let (Some(rows), Some(m)) = (
                r.result("grading", d.grade_all()),
                r.result("matrix", d.intersection_matrix()),
            ) {
                let sum: i64 = rows.iter().map(|x| x.s as i64).sum();
                let det = m.det();
                r.check(sum == det, || {
                    format!("diagram {k} (genus {g}): sum s = {sum}, det = {det}")
                });
            }
            r
        })
        .collect();
    merge("determinant", parts)
}

fn random_ordering(rng: &mut ChaCha8Rng, ord: &CircleOrdering) -> CircleOrdering {
    let side = |rng: &mut ChaCha8Rng, v: &[(String, bool)]| {
        let mut v = v.to_vec();
        v.shuffle(rng);
        for e in v.iter_mut() {
            e.1 = rng.gen_bool(0.5);
        }
        v
    };
    CircleOrdering {
        alpha: side(rng, &ord.alpha),
        beta: side(rng, &ord.beta),
    }
}

/// Every sign changes by the predicted parity under random reorderings and reorientations.
pub fn reordering_suite(count: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("reordering");
    let dir = data_dir();
    let mut diagrams = Vec::new();
    for f in [
        "figure2.json",
        "hz_antipodal.json",
        "hz_antipodal_alt.json",
        "hz_split2.json",
    ] {
        if let Some(d) = rep.result(f, load_diagram(&dir.join(f))) {
            diagrams.push((f.to_string(), d));
        }
    }
    if let (Some(a), Some(d)) = (
        diagrams.iter().find(|d| d.0 == "hz_antipodal.json"),
        diagrams.iter().find(|d| d.0 == "figure2.json"),
    ) {
        if let Some(g) = rep.result("glue", glue(&a.1, &d.1)) {
            diagrams.push(("glued".into(), g.closed));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(0x0de7);
    let mut rng2 = ChaCha8Rng::seed_from_u64(seed);
    rng2.set_stream(0x0de8);
    for _ in 0..count {
        let (name, d) = diagrams.choose(&mut rng).unwrap();
        let old = d.ordering();
        let new = random_ordering(&mut rng2, &old);
        let (Some(parity), Some(e)) = (
            rep.result("parity", reorder_parity(&old, &new)),
            rep.result("reorder", d.reordered(&new)),
        ) else {
            continue;
        };
        let (Some(before), Some(after)) = (
            rep.result("grade", d.grade_all()),
            rep.result("grade", e.grade_all()),
        ) else {
            continue;
        };
        for (x, y) in before.iter().zip(&after) {
            rep.check(x.name == y.name && y.s == parity * x.s, || {
                format!(
                    "{name}: {} has sign {} after {new:?}, predicted {}",
                    x.name,
                    y.s,
                    parity * x.s
                )
            });
        }
    }
    rep
}

/// Two realizations of `H_Z` give identical absolute gradings on `figure2.json`.
pub fn hz_independence(norm_cap: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("hz-choice");
    let dir = data_dir();
    let loaded: Vec<Option<Diagram>> = ["figure2.json", "hz_antipodal.json", "hz_antipodal_alt.json"]
        .iter()
        .map(|f| rep.result(f, load_diagram(&dir.join(f))))
        .collect();
    let [Some(fig), Some(h1), Some(h2)] = <[Option<Diagram>; 3]>::try_from(loaded).unwrap() else {
        return rep;
    };
    rep.check(h1.points.len() != h2.points.len(), || {
        "the two H_Z realizations coincide".into()
    });
    if let (Some(a), Some(b)) = (
        rep.result("absolute", absolute_grading(&fig, &h1, norm_cap)),
        rep.result("absolute", absolute_grading(&fig, &h2, norm_cap)),
    ) {
        let ra: Vec<(String, u8)> = a.rows.iter().map(|r| (r.name.clone(), r.absolute.m)).collect();
        let rb: Vec<(String, u8)> = b.rows.iter().map(|r| (r.name.clone(), r.absolute.m)).collect();
        rep.expect("absolute gradings", ra, rb);
    }
    rep
}

pub const SUITES: [&str; 10] = [
    "algebra",
    "az",
    "tables",
    "lagrangian",
    "pairing",
    "index",
    "determinant",
    "reordering",
    "hz-choice",
    "all",
];

/// Runs one named suite, or every suite for `all`. Circle-dependent suites use `circles`.
pub fn run_suite(
    name: &str,
    circles: &[PointedMatchedCircle],
    cfg: &VerifyConfig,
) -> Option<Vec<SuiteReport>> {
    const CAP: u64 = 1000;
    let laws = |f: fn(&PointedMatchedCircle, &VerifyConfig) -> SuiteReport, label: &str| {
        merge(label, circles.iter().map(|c| f(c, cfg)).collect())
    };
    Some(match name {
        "algebra" => vec![laws(algebra_laws, "algebra")],
        "az" => vec![laws(az_laws, "az")],
        "tables" => vec![tables()],
        "lagrangian" => vec![lagrangian_suite(CAP)],
        "pairing" => vec![pairing_suite(CAP)],
        "index" => vec![index_suite(cfg)],
        "determinant" => vec![determinant_suite(50, cfg.seed)],
        "reordering" => vec![reordering_suite(1000, cfg.seed)],
        "hz-choice" => vec![hz_independence(CAP)],
        "all" => SUITES[..9]
            .iter()
            .flat_map(|s| run_suite(s, circles, cfg).unwrap())
            .collect(),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::chord_linking;

    #[test]
    fn genus_one_exhaustive() {
        let c = PointedMatchedCircle::split(1);
        let cfg = VerifyConfig {
            exhaustive: true,
            ..Default::default()
        };
        let a = algebra_laws(&c, &cfg);
        assert!(a.passed(), "{a}");
        assert!(a.checks > 100);
        let z = az_laws(&c, &cfg);
        assert!(z.passed(), "{z}");
    }

    #[test]
    fn circle_census() {
        assert_eq!(all_circles(1).len(), 1);
        assert!(all_circles(2).contains(&PointedMatchedCircle::antipodal(2)));
        assert!(all_circles(2).contains(&PointedMatchedCircle::split(2)));
    }

    #[test]
    fn reversal_needs_an_order() {
        let set = [ReebChord::new(1, 3), ReebChord::new(2, 4)];
        let seq = compatible_order(&set, 4).unwrap();
        assert_eq!(iota_set(&set), Rational::from_integer(-2) - iota(&seq));
        assert!(chord_linking(seq[0], seq[1]) >= Rational::from_integer(0));
    }

    #[test]
    fn bad_laws_are_reported() {
        let mut r = SuiteReport::new("x");
        for _ in 0..(MAX_REPORTED + 5) {
            r.check(false, || "bad".into());
        }
        assert_eq!(r.failures as usize, MAX_REPORTED + 5);
        assert_eq!(r.violations.len(), MAX_REPORTED);
        assert!(!r.passed());
    }
}
