//! Type D structures and A-infinity modules over `A(Z)`, and their box tensor product.

use crate::azgrading::{grade_zgen, GradedValue};
use crate::circle::{PointedMatchedCircle, ReebChord};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::strands::{enumerate_zgens, zgens_by_left, ZGen};
use std::collections::{BTreeMap, BTreeSet, HashMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModGen {
    pub name: String,
    /// Arc bitmask of the idempotent.
    pub idempotent: u64,
    pub grading: Option<GradedValue>,
}

fn toggle<T: Ord>(set: &mut BTreeSet<T>, t: T) {
    if !set.remove(&t) {
        set.insert(t);
    }
}

fn index_of(gens: &[ModGen], name: &str) -> Result<usize> {
    gens.iter()
        .position(|g| g.name == name)
        .ok_or_else(|| Error::Schema(format!("unknown generator {name}")))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeDStructure {
    pub circle: PointedMatchedCircle,
    pub gens: Vec<ModGen>,
    pub delta: Vec<BTreeSet<(ZGen, usize)>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleReport {
    pub violations: Vec<String>,
}

impl ModuleReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl TypeDStructure {
    pub fn new(circle: PointedMatchedCircle, gens: Vec<ModGen>) -> Self {
        let delta = vec![BTreeSet::new(); gens.len()];
        TypeDStructure { circle, gens, delta }
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        index_of(&self.gens, name)
    }

    /// Adds `a ⊗ to` to `delta(from)` (over F2).
    pub fn add_delta(&mut self, from: usize, a: ZGen, to: usize) -> Result<()> {
        let c = &self.circle;
        if a.left_idempotent(c) != self.gens[from].idempotent
            || a.right_idempotent(c) != self.gens[to].idempotent
        {
            return Err(Error::Structural(format!(
                "{a} does not sit between the idempotents of {} and {}",
                self.gens[from].name, self.gens[to].name
            )));
        }
        toggle(&mut self.delta[from], (a, to));
        Ok(())
    }

    /// Adds `I_D(from) a(rho) ⊗ to`.
    pub fn add_delta_chords(&mut self, from: usize, rho: &[ReebChord], to: usize) -> Result<()> {
        let a = ZGen::from_chords(&self.circle, self.gens[from].idempotent, rho)?.ok_or_else(|| {
            Error::Structural(format!(
                "I({}) a(rho) vanishes for generator {}",
                self.gens[from].idempotent, self.gens[from].name
            ))
        })?;
        self.add_delta(from, a, to)
    }

    /// `delta_k(x)` as a set of `(a_1, .., a_k, y)`.
    pub fn delta_k(&self, x: usize, k: usize) -> BTreeSet<(Vec<ZGen>, usize)> {
        let mut cur: BTreeSet<(Vec<ZGen>, usize)> = BTreeSet::new();
        cur.insert((Vec::new(), x));
        for _ in 0..k {
            let mut next = BTreeSet::new();
            for (seq, y) in &cur {
                for (a, z) in &self.delta[*y] {
                    let mut s = seq.clone();
                    s.push(a.clone());
                    toggle(&mut next, (s, *z));
                }
            }
            cur = next;
        }
        cur
    }

    /// Least `n` with `delta_n = 0`, searching up to `max_depth`.
    pub fn nilpotency(&self, max_depth: usize) -> Result<usize> {
        let mut frontier: Vec<BTreeSet<(Vec<ZGen>, usize)>> =
            (0..self.gens.len()).map(|x| self.delta_k(x, 0)).collect();
        for n in 1..=max_depth {
            for f in frontier.iter_mut() {
                let mut next = BTreeSet::new();
                for (seq, y) in f.iter() {
                    for (a, z) in &self.delta[*y] {
                        let mut s = seq.clone();
                        s.push(a.clone());
                        toggle(&mut next, (s, *z));
                    }
                }
                *f = next;
            }
            if frontier.iter().all(|f| f.is_empty()) {
                return Ok(n);
            }
        }
        Err(Error::Unbounded(format!("delta_{max_depth} is still nonzero")))
    }

    pub fn validate(&self) -> ModuleReport {
        let c = &self.circle;
        let mut report = ModuleReport::default();
        for (x, gx) in self.gens.iter().enumerate() {
            let mut eq: BTreeSet<(ZGen, usize)> = BTreeSet::new();
            for (a, y) in &self.delta[x] {
                if a.left_idempotent(c) != gx.idempotent || a.right_idempotent(c) != self.gens[*y].idempotent
                {
                    report.violations.push(format!(
                        "delta({}) term {a} ⊗ {} breaks idempotents",
                        gx.name, self.gens[*y].name
                    ));
                }
                if let (Some(mx), Some(my)) = (gx.grading, self.gens[*y].grading) {
                    if mx != grade_zgen(c, a) + my + GradedValue::ONE {
                        report.violations.push(format!(
                            "delta({}) term {a} ⊗ {} has the wrong grading",
                            gx.name, self.gens[*y].name
                        ));
                    }
                }
                for d in a.differential(c).terms() {
                    toggle(&mut eq, (d.clone(), *y));
                }
                for (b, z) in &self.delta[*y] {
                    for p in a.multiply(b, c).terms() {
                        toggle(&mut eq, (p.clone(), *z));
                    }
                }
            }
            for (a, y) in eq {
                report.violations.push(format!(
                    "structure equation fails at {}: leftover {a} ⊗ {}",
                    gx.name, self.gens[y].name
                ));
            }
        }
        report
    }
}

type OpKey = (usize, Vec<ZGen>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfModule {
    pub circle: PointedMatchedCircle,
    pub gens: Vec<ModGen>,
    pub ops: BTreeMap<OpKey, BTreeSet<usize>>,
    pub bounded: bool,
}

impl AInfModule {
    pub fn new(circle: PointedMatchedCircle, gens: Vec<ModGen>, bounded: bool) -> Self {
        AInfModule {
            circle,
            gens,
            ops: BTreeMap::new(),
            bounded,
        }
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        index_of(&self.gens, name)
    }

    /// Largest `i` with a nonzero `m_i`; unit actions count as `m_2`.
    pub fn max_arity(&self) -> usize {
        self.ops
            .keys()
            .map(|(_, a)| a.len() + 1)
            .max()
            .unwrap_or(0)
            .max(2)
    }

    /// Adds `to` to `m(from, inputs)` (over F2).
    pub fn add_op(&mut self, from: usize, inputs: Vec<ZGen>, to: usize) -> Result<()> {
        let c = &self.circle;
        let mut idem = self.gens[from].idempotent;
        for a in &inputs {
            if a.is_idempotent() {
                return Err(Error::Structural(format!(
                    "m({}, ..) lists the idempotent {a}; units act implicitly",
                    self.gens[from].name
                )));
            }
            if a.left_idempotent(c) != idem {
                return Err(Error::Structural(format!(
                    "input {a} does not follow idempotent {idem:b}"
                )));
            }
            idem = a.right_idempotent(c);
        }
        if idem != self.gens[to].idempotent {
            return Err(Error::Structural(format!(
                "output {} has the wrong idempotent",
                self.gens[to].name
            )));
        }
        let entry = self.ops.entry((from, inputs)).or_default();
        toggle(entry, to);
        Ok(())
    }

    pub fn add_op_chords(&mut self, from: usize, inputs: &[Vec<ReebChord>], to: usize) -> Result<()> {
        let mut idem = self.gens[from].idempotent;
        let mut zs = Vec::new();
        for rho in inputs {
            let a = ZGen::from_chords(&self.circle, idem, rho)?
                .ok_or_else(|| Error::Structural("an input algebra element vanishes".into()))?;
            idem = a.right_idempotent(&self.circle);
            zs.push(a);
        }
        self.add_op(from, zs, to)
    }

    /// `m_{n+1}(x, a_1, .., a_n)`, with strict unitality.
    pub fn m(&self, x: usize, inputs: &[ZGen]) -> BTreeSet<usize> {
        if inputs.len() == 1 && inputs[0].is_idempotent() {
            let mut out = BTreeSet::new();
            if inputs[0].horizontal() == self.gens[x].idempotent {
                out.insert(x);
            }
            return out;
        }
        if inputs.iter().any(ZGen::is_idempotent) {
            return BTreeSet::new();
        }
        self.ops.get(&(x, inputs.to_vec())).cloned().unwrap_or_default()
    }

    fn relation(&self, x: usize, a: &[ZGen]) -> BTreeSet<usize> {
        let c = &self.circle;
        let mut out = BTreeSet::new();
        for j in 0..=a.len() {
            for y in self.m(x, &a[..j]) {
                for z in self.m(y, &a[j..]) {
                    toggle(&mut out, z);
                }
            }
        }
        for i in 0..a.len() {
            for d in a[i].differential(c).terms() {
                let mut b = a.to_vec();
                b[i] = d.clone();
                for z in self.m(x, &b) {
                    toggle(&mut out, z);
                }
            }
        }
        for i in 0..a.len().saturating_sub(1) {
            for p in a[i].multiply(&a[i + 1], c).terms() {
                let mut b = a[..i].to_vec();
                b.push(p.clone());
                b.extend_from_slice(&a[i + 2..]);
                for z in self.m(x, &b) {
                    toggle(&mut out, z);
                }
            }
        }
        out
    }

    /// Input tuples on which some term of an A-infinity relation is nonzero.
    fn relation_candidates(&self) -> BTreeSet<OpKey> {
        let c = &self.circle;
        let all = enumerate_zgens(c);
        let by_left = zgens_by_left(c, &all);
        let mut d_pre: HashMap<&ZGen, Vec<ZGen>> = HashMap::new();
        let mut mul_pre: HashMap<&ZGen, Vec<(ZGen, ZGen)>> = HashMap::new();
        let keys: Vec<&OpKey> = self.ops.keys().collect();
        for (_, inputs) in &keys {
            for t in inputs {
                if d_pre.contains_key(t) {
                    continue;
                }
                let (l, r) = (t.left_idempotent(c), t.right_idempotent(c));
                let same: Vec<&ZGen> = by_left
                    .get(&l)
                    .map(|v| v.iter().filter(|a| a.right_idempotent(c) == r).collect())
                    .unwrap_or_default();
                d_pre.insert(
                    t,
                    same.iter()
                        .filter(|a| a.differential(c).terms().any(|u| u == t))
                        .map(|a| (*a).clone())
                        .collect(),
                );
                let mut facts = Vec::new();
                for a in by_left
                    .get(&l)
                    .into_iter()
                    .flatten()
                    .filter(|a| !a.is_idempotent())
                {
                    for b in by_left
                        .get(&a.right_idempotent(c))
                        .into_iter()
                        .flatten()
                        .filter(|b| !b.is_idempotent() && b.right_idempotent(c) == r)
                    {
                        if a.multiply(b, c).terms().any(|u| u == t) {
                            facts.push((a.clone(), b.clone()));
                        }
                    }
                }
                mul_pre.insert(t, facts);
            }
        }
        let mut out = BTreeSet::new();
        for ((x, inputs), ys) in &self.ops {
            out.insert((*x, inputs.clone()));
            for y in ys {
                for (_, more) in self.ops.keys().filter(|(s, _)| s == y) {
                    let mut joined = inputs.clone();
                    joined.extend_from_slice(more);
                    out.insert((*x, joined));
                }
            }
            for i in 0..inputs.len() {
                for a in &d_pre[&inputs[i]] {
                    let mut b = inputs.clone();
                    b[i] = a.clone();
                    out.insert((*x, b));
                }
                for (a, b2) in &mul_pre[&inputs[i]] {
                    let mut b = inputs[..i].to_vec();
                    b.push(a.clone());
                    b.push(b2.clone());
                    b.extend_from_slice(&inputs[i + 1..]);
                    out.insert((*x, b));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> ModuleReport {
        let c = &self.circle;
        let mut report = ModuleReport::default();
        for ((x, inputs), ys) in &self.ops {
            for y in ys {
                if let (Some(mx), Some(my)) = (self.gens[*x].grading, self.gens[*y].grading) {
                    let arity = GradedValue::from_m(inputs.len() as i64 + 1);
                    let expected = inputs.iter().fold(mx + arity, |m, a| m + grade_zgen(c, a));
                    if my != expected {
                        report.violations.push(format!(
                            "m_{}({}, ..) -> {} has the wrong grading",
                            inputs.len() + 1,
                            self.gens[*x].name,
                            self.gens[*y].name
                        ));
                    }
                }
            }
        }
        for (x, inputs) in self.relation_candidates() {
            let leftover = self.relation(x, &inputs);
            if !leftover.is_empty() {
                let names: Vec<String> = inputs.iter().map(|a| a.to_string()).collect();
                report.violations.push(format!(
                    "A-infinity relation fails at ({}; {}): leftover {}",
                    self.gens[x].name,
                    names.join(", "),
                    leftover
                        .iter()
                        .map(|&z| self.gens[z].name.clone())
                        .collect::<Vec<_>>()
                        .join(" + ")
                ));
            }
        }
        report
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedComplex {
    pub names: Vec<String>,
    pub gens: Vec<(usize, usize)>,
    pub grading: Vec<Option<GradedValue>>,
    pub differential: Vec<BTreeSet<usize>>,
}

impl PairedComplex {
    pub fn d_squared_zero(&self) -> bool {
        (0..self.gens.len()).all(|z| {
            let mut acc = BTreeSet::new();
            for &y in &self.differential[z] {
                for &w in &self.differential[y] {
                    toggle(&mut acc, w);
                }
            }
            acc.is_empty()
        })
    }

    pub fn grading_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (z, targets) in self.differential.iter().enumerate() {
            for &y in targets {
                if let (Some(mz), Some(my)) = (self.grading[z], self.grading[y]) {
                    if my != mz + GradedValue::ONE {
                        out.push(format!(
                            "∂ {} ∋ {} does not drop the grading",
                            self.names[z], self.names[y]
                        ));
                    }
                }
            }
        }
        out
    }

    /// `sum (-1)^m` over generators, when all are graded.
    pub fn euler_characteristic(&self) -> Option<i64> {
        self.grading.iter().map(|g| g.map(|m| m.sign() as i64)).sum()
    }
}

/// Depth used to decide that an unbounded A-infinity module meets a nilpotent `delta`.
pub const DELTA_DEPTH: usize = 64;

pub fn box_tensor(m: &AInfModule, d: &TypeDStructure) -> Result<PairedComplex> {
    if m.circle != d.circle {
        return Err(Error::Gluing(
            "the module and the structure live over different algebras".into(),
        ));
    }
    let depth = if m.bounded {
        m.max_arity() - 1
    } else {
        d.nilpotency(DELTA_DEPTH)
            .map_err(|_| Error::Unbounded("neither the module nor the type D structure is bounded".into()))?
    };
    let mut gens = Vec::new();
    let mut names = Vec::new();
    let mut grading = Vec::new();
    for (i, x) in m.gens.iter().enumerate() {
        for (j, y) in d.gens.iter().enumerate() {
            if x.idempotent == y.idempotent {
                gens.push((i, j));
                names.push(format!("{}⊠{}", x.name, y.name));
                grading.push(match (x.grading, y.grading) {
                    (Some(a), Some(b)) => Some(a + b),
                    _ => None,
                });
            }
        }
    }
    let index: HashMap<(usize, usize), usize> = gens.iter().enumerate().map(|(k, &g)| (g, k)).collect();
    let mut differential = vec![BTreeSet::new(); gens.len()];
    for (z, &(x, y)) in gens.iter().enumerate() {
        for k in 0..=depth {
            for (seq, y2) in d.delta_k(y, k) {
                for x2 in m.m(x, &seq) {
                    if let Some(&t) = index.get(&(x2, y2)) {
                        toggle(&mut differential[z], t);
                    }
                }
            }
        }
    }
    Ok(PairedComplex {
        names,
        gens,
        grading,
        differential,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingRow {
    pub name: String,
    pub algebraic: GradedValue,
    pub diagrammatic: GradedValue,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingReport {
    pub rows: Vec<PairingRow>,
    /// `diagrammatic - algebraic`, when it is the same on every generator.
    pub offset: Option<GradedValue>,
}

/// Compares module gradings on `M ⊠ D` with closed-diagram gradings on the glued diagram.
pub fn pairing_grading_check(m: &AInfModule, d: &TypeDStructure, glued: &Diagram) -> Result<PairingReport> {
    let complex = box_tensor(m, d)?;
    let closed = glued.grade_all()?;
    let by_name: HashMap<&str, GradedValue> = closed.iter().map(|r| (r.name.as_str(), r.m)).collect();
    if closed.len() != complex.names.len() {
        return Err(Error::Gluing(format!(
            "generator mismatch: {} paired, {} in the glued diagram",
            complex.names.len(),
            closed.len()
        )));
    }
    let mut rows = Vec::new();
    for (name, g) in complex.names.iter().zip(&complex.grading) {
        let dg = *by_name.get(name.as_str()).ok_or_else(|| {
            Error::Gluing(format!("generator mismatch: {name} is not in the glued diagram"))
        })?;
        let ag = g.ok_or_else(|| Error::Inapplicable(format!("{name} is ungraded")))?;
        rows.push(PairingRow {
            name: name.clone(),
            algebraic: ag,
            diagrammatic: dg,
        });
    }
    let offsets: BTreeSet<GradedValue> = rows.iter().map(|r| r.diagrammatic + r.algebraic).collect();
    let offset = (offsets.len() <= 1).then(|| offsets.into_iter().next().unwrap_or(GradedValue::ZERO));
    Ok(PairingReport { rows, offset })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strands::mask_of;

    fn gen(name: &str, idem: &[usize], m: u8) -> ModGen {
        ModGen {
            name: name.into(),
            idempotent: mask_of(idem.iter().copied()),
            grading: Some(GradedValue { m }),
        }
    }

    #[test]
    fn zero_delta_is_valid() {
        let c = PointedMatchedCircle::split(1);
        let d = TypeDStructure::new(c, vec![gen("x", &[1], 0)]);
        assert!(d.validate().is_valid());
        assert_eq!(d.delta_k(0, 0).len(), 1);
        assert!(d.delta_k(0, 1).is_empty());
        assert_eq!(d.nilpotency(4), Ok(1));
    }

    #[test]
    fn two_generator_structure() {
        let c = PointedMatchedCircle::split(1);
        let rho = [ReebChord::new(1, 2)];
        let a = ZGen::from_chords(&c, mask_of([1]), &rho).unwrap().unwrap();
        let ma = grade_zgen(&c, &a);
        let mut good = TypeDStructure::new(c.clone(), vec![gen("x", &[1], 0), gen("y", &[2], 0)]);
        good.gens[1].grading = Some(GradedValue::ONE + ma);
        good.add_delta_chords(0, &rho, 1).unwrap();
        assert!(good.validate().is_valid());
        let mut bad = good.clone();
        bad.gens[1].grading = Some(ma);
        assert!(!bad.validate().is_valid());
        assert_eq!(good.delta_k(0, 1).len(), 1);
    }

    #[test]
    fn cycle_breaks_structure_equation() {
        let c = PointedMatchedCircle::split(1);
        let mut d = TypeDStructure::new(c.clone(), vec![gen("x", &[1], 0), gen("y", &[2], 1)]);
        d.gens[0].grading = None;
        d.gens[1].grading = None;
        d.add_delta_chords(0, &[ReebChord::new(1, 2)], 1).unwrap();
        d.add_delta_chords(1, &[ReebChord::new(2, 3)], 0).unwrap();
        assert!(!d.validate().is_valid());
        assert!(d.nilpotency(8).is_err());
    }

    #[test]
    fn unit_action_only() {
        let c = PointedMatchedCircle::split(1);
        let m = AInfModule::new(c.clone(), vec![gen("a", &[1], 0)], true);
        let d = TypeDStructure::new(c, vec![gen("x", &[1], 0), gen("y", &[2], 0)]);
        let p = box_tensor(&m, &d).unwrap();
        assert_eq!(p.names, ["a⊠x"]);
        assert!(p.differential.iter().all(|s| s.is_empty()));
        assert!(m.validate().is_valid());
    }

    #[test]
    fn both_unbounded() {
        let c = PointedMatchedCircle::split(1);
        let m = AInfModule::new(c.clone(), vec![gen("a", &[1], 0)], false);
        let mut d = TypeDStructure::new(c, vec![gen("x", &[1], 0), gen("y", &[2], 0)]);
        d.add_delta_chords(0, &[ReebChord::new(1, 2)], 1).unwrap();
        d.add_delta_chords(1, &[ReebChord::new(2, 3)], 0).unwrap();
        assert!(matches!(box_tensor(&m, &d), Err(Error::Unbounded(_))));
    }
}
