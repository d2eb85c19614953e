//! The strands algebra `A(n)` over F2 and the matched subalgebra `A(Z)`.
//!
//! Subsets of positions and of arcs are bitmasks with bit `p` standing for `p` (1-based).

use crate::circle::{PointedMatchedCircle, ReebChord};
use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub fn mask_of(items: impl IntoIterator<Item = usize>) -> u64 {
    items.into_iter().fold(0, |m, i| m | 1 << i)
}

pub fn mask_items(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn fmt_set(mask: u64) -> String {
    let items: Vec<String> = mask_items(mask).iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// A partial permutation `(S, T, phi)` stored as strands `(i, phi(i))` sorted by `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrandsGenerator {
    n: usize,
    strands: Vec<(usize, usize)>,
}

impl StrandsGenerator {
    pub fn new(n: usize, mut strands: Vec<(usize, usize)>) -> Result<Self> {
        strands.sort();
        let mut starts = 0u64;
        let mut ends = 0u64;
        for &(s, e) in &strands {
            if s == 0 || e > n || e < s {
                return Err(Error::Structural(format!(
                    "strand {s}->{e} is not upward-veering in 1..={n}"
                )));
            }
            if starts >> s & 1 == 1 || ends >> e & 1 == 1 {
                return Err(Error::Structural(format!(
                    "strand {s}->{e} repeats a start or an end"
                )));
            }
            starts |= 1 << s;
            ends |= 1 << e;
        }
        Ok(StrandsGenerator { n, strands })
    }

    fn from_sorted(n: usize, strands: Vec<(usize, usize)>) -> Self {
        StrandsGenerator { n, strands }
    }

    pub fn identity(n: usize, positions: u64) -> Self {
        let strands = mask_items(positions).into_iter().map(|p| (p, p)).collect();
        StrandsGenerator { n, strands }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn strands(&self) -> &[(usize, usize)] {
        &self.strands
    }

    pub fn strand_count(&self) -> usize {
        self.strands.len()
    }

    pub fn sources(&self) -> u64 {
        mask_of(self.strands.iter().map(|s| s.0))
    }

    pub fn targets(&self) -> u64 {
        mask_of(self.strands.iter().map(|s| s.1))
    }

    pub fn is_idempotent(&self) -> bool {
        self.strands.iter().all(|&(s, e)| s == e)
    }

    pub fn inv(&self) -> usize {
        let mut count = 0;
        for (i, a) in self.strands.iter().enumerate() {
            for b in &self.strands[i + 1..] {
                if b.1 < a.1 {
                    count += 1;
                }
            }
        }
        count
    }

    /// `self * other`, or `None` when the product vanishes.
    pub fn multiply(&self, other: &Self) -> Option<Self> {
        if self.n != other.n || self.targets() != other.sources() {
            return None;
        }
        let strands = self
            .strands
            .iter()
            .map(|&(s, t)| {
                let &(_, u) = other
                    .strands
                    .iter()
                    .find(|b| b.0 == t)
                    .expect("target is a source");
                (s, u)
            })
            .collect();
        let product = Self::from_sorted(self.n, strands);
        (product.inv() == self.inv() + other.inv()).then_some(product)
    }

    pub fn differential(&self) -> Vec<Self> {
        let inv = self.inv();
        let mut out = Vec::new();
        for i in 0..self.strands.len() {
            for j in i + 1..self.strands.len() {
                if self.strands[i].1 > self.strands[j].1 {
                    let mut strands = self.strands.clone();
                    let (ei, ej) = (strands[i].1, strands[j].1);
                    strands[i].1 = ej;
                    strands[j].1 = ei;
                    let g = Self::from_sorted(self.n, strands);
                    if g.inv() + 1 == inv {
                        out.push(g);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for StrandsGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.strands.iter().map(|(s, e)| format!("{s}→{e}")).collect();
        write!(f, "[{}]", body.join(" "))
    }
}

/// An F2 sum of strands generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeSet<StrandsGenerator>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement {
            n,
            terms: BTreeSet::new(),
        }
    }

    pub fn from_gen(g: StrandsGenerator) -> Self {
        let mut a = Self::zero(g.n);
        a.toggle(g);
        a
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = StrandsGenerator>) -> Self {
        let mut a = Self::zero(n);
        for g in terms {
            a.toggle(g);
        }
        a
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn toggle(&mut self, g: StrandsGenerator) {
        if !self.terms.remove(&g) {
            self.terms.insert(g);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &StrandsGenerator> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for g in &other.terms {
            out.toggle(g.clone());
        }
        Ok(out)
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut out = Self::zero(self.n);
        for a in &self.terms {
            for b in &other.terms {
                if let Some(p) = a.multiply(b) {
                    out.toggle(p);
                }
            }
        }
        Ok(out)
    }

    pub fn differential(&self) -> Self {
        let mut out = Self::zero(self.n);
        for g in &self.terms {
            for h in g.differential() {
                out.toggle(h);
            }
        }
        out
    }

    /// Terms with exactly `i` strands.
    pub fn with_strands(&self, i: usize) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|g| g.strand_count() == i)
                .cloned()
                .collect(),
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let body: Vec<String> = self.terms.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", body.join(" + "))
    }
}

fn chord_masks(rho: &[ReebChord]) -> Result<(u64, u64)> {
    let mut starts = 0u64;
    let mut ends = 0u64;
    for r in rho {
        if starts >> r.start & 1 == 1 {
            return Err(Error::ChordCollision(format!("two chords start at {}", r.start)));
        }
        if ends >> r.end & 1 == 1 {
            return Err(Error::ChordCollision(format!("two chords end at {}", r.end)));
        }
        starts |= 1 << r.start;
        ends |= 1 << r.end;
    }
    Ok((starts, ends))
}

fn subsets(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some((cur.wrapping_sub(mask)) & mask)
        };
        Some(cur)
    })
}

/// `a0(rho)`: the chords of `rho` with every consistent set of horizontal strands.
pub fn a0(rho: &[ReebChord], c: &PointedMatchedCircle) -> Result<AlgebraElement> {
    for &r in rho {
        c.check_chord(r)?;
    }
    let (starts, ends) = chord_masks(rho)?;
    let all = mask_of(1..=c.n());
    let free = all & !(starts | ends);
    let mut out = AlgebraElement::zero(c.n());
    for h in subsets(free) {
        let mut strands: Vec<_> = rho.iter().map(|r| (r.start, r.end)).collect();
        strands.extend(mask_items(h).into_iter().map(|p| (p, p)));
        out.toggle(StrandsGenerator::new(c.n(), strands)?);
    }
    Ok(out)
}

fn matched_on(c: &PointedMatchedCircle, positions: u64) -> bool {
    c.arcs_of_mask(positions).count_ones() == positions.count_ones()
}

/// `a(rho) = I a0(rho) I`, as an element of `A(n)`.
pub fn a_matched(rho: &[ReebChord], c: &PointedMatchedCircle) -> Result<AlgebraElement> {
    let a = a0(rho, c)?;
    Ok(AlgebraElement::from_terms(
        c.n(),
        a.terms()
            .filter(|g| matched_on(c, g.sources()) && matched_on(c, g.targets()))
            .cloned(),
    ))
}

/// `I(s)` for a set `s` of arcs: the sum of `I(S)` over sections `S` of `s`.
pub fn idempotent(s: u64, c: &PointedMatchedCircle) -> AlgebraElement {
    let arcs = mask_items(s);
    let mut out = AlgebraElement::zero(c.n());
    for choice in 0..1u64 << arcs.len() {
        let mut positions = 0u64;
        for (t, &arc) in arcs.iter().enumerate() {
            let (lo, hi) = c.pairs()[arc - 1];
            positions |= 1 << if choice >> t & 1 == 0 { lo } else { hi };
        }
        out.toggle(StrandsGenerator::identity(c.n(), positions));
    }
    out
}

/// Basis element of `A(Z)`: moving chords together with a set of horizontal arcs.
///
/// It stands for the sum over all sections of the horizontal arcs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZGen {
    moving: Vec<ReebChord>,
    horizontal: u64,
}

impl ZGen {
    pub fn new(c: &PointedMatchedCircle, mut moving: Vec<ReebChord>, horizontal: u64) -> Result<Self> {
        for &r in &moving {
            c.check_chord(r)?;
        }
        let (starts, ends) = chord_masks(&moving)?;
        let sa = c.arcs_of_mask(starts);
        let ea = c.arcs_of_mask(ends);
        if sa.count_ones() != starts.count_ones() || ea.count_ones() != ends.count_ones() {
            return Err(Error::Structural("moving strands occupy an arc twice".into()));
        }
        if horizontal & (sa | ea) != 0 || horizontal & !mask_of(1..=c.arcs()) != 0 {
            return Err(Error::Structural(format!(
                "horizontal arcs {} collide with the moving strands",
                fmt_set(horizontal)
            )));
        }
        moving.sort();
        Ok(ZGen { moving, horizontal })
    }

    pub fn idempotent(s: u64) -> Self {
        ZGen {
            moving: Vec::new(),
            horizontal: s,
        }
    }

    /// The basis element of `I(left) a(rho)`; `None` when it vanishes.
    pub fn from_chords(c: &PointedMatchedCircle, left: u64, rho: &[ReebChord]) -> Result<Option<Self>> {
        let (starts, _) = chord_masks(rho)?;
        let sa = c.arcs_of_mask(starts);
        if sa & !left != 0 || sa.count_ones() != starts.count_ones() {
            return Ok(None);
        }
        match Self::new(c, rho.to_vec(), left & !sa) {
            Ok(g) => Ok(Some(g)),
            Err(Error::Structural(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    pub fn moving(&self) -> &[ReebChord] {
        &self.moving
    }

    pub fn horizontal(&self) -> u64 {
        self.horizontal
    }

    pub fn is_idempotent(&self) -> bool {
        self.moving.is_empty()
    }

    pub fn strand_count(&self) -> usize {
        self.moving.len() + self.horizontal.count_ones() as usize
    }

    pub fn left_idempotent(&self, c: &PointedMatchedCircle) -> u64 {
        c.arcs_of_mask(mask_of(self.moving.iter().map(|r| r.start))) | self.horizontal
    }

    pub fn right_idempotent(&self, c: &PointedMatchedCircle) -> u64 {
        c.arcs_of_mask(mask_of(self.moving.iter().map(|r| r.end))) | self.horizontal
    }

    pub fn expand(&self, c: &PointedMatchedCircle) -> AlgebraElement {
        let h = idempotent(self.horizontal, c);
        AlgebraElement::from_terms(
            c.n(),
            h.terms().map(|g| {
                let mut strands: Vec<_> = self.moving.iter().map(|r| (r.start, r.end)).collect();
                strands.extend_from_slice(g.strands());
                StrandsGenerator::new(c.n(), strands).expect("disjoint by construction")
            }),
        )
    }

    /// The basis element whose expansion contains `g`, when `g` lies in `A(Z)`.
    pub fn from_strands(g: &StrandsGenerator, c: &PointedMatchedCircle) -> Option<Self> {
        if !matched_on(c, g.sources()) || !matched_on(c, g.targets()) {
            return None;
        }
        let moving = g
            .strands()
            .iter()
            .filter(|s| s.0 != s.1)
            .map(|&(s, e)| ReebChord::new(s, e))
            .collect();
        let horizontal = c.arcs_of_mask(mask_of(g.strands().iter().filter(|s| s.0 == s.1).map(|s| s.0)));
        Some(ZGen { moving, horizontal })
    }

    /// One representative strands diagram: horizontals on the lower endpoints.
    pub fn representative(&self, c: &PointedMatchedCircle) -> StrandsGenerator {
        let mut strands: Vec<_> = self.moving.iter().map(|r| (r.start, r.end)).collect();
        for arc in mask_items(self.horizontal) {
            let p = c.pairs()[arc - 1].0;
            strands.push((p, p));
        }
        StrandsGenerator::new(c.n(), strands).expect("valid basis element")
    }

    pub fn multiply(&self, other: &Self, c: &PointedMatchedCircle) -> ZElement {
        if self.right_idempotent(c) != other.left_idempotent(c) {
            return ZElement::zero();
        }
        let product = self
            .expand(c)
            .multiply(&other.expand(c))
            .expect("same ambient size");
        ZElement::collect(&product, c)
    }

    pub fn differential(&self, c: &PointedMatchedCircle) -> ZElement {
        ZElement::collect(&self.expand(c).differential(), c)
    }
}

impl fmt::Display for ZGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moving.is_empty() {
            return write!(f, "I{}", fmt_set(self.horizontal));
        }
        let body: Vec<String> = self.moving.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", body.join(""))?;
        if self.horizontal != 0 {
            write!(f, "·I{}", fmt_set(self.horizontal))?;
        }
        Ok(())
    }
}

/// An F2 sum of basis elements of `A(Z)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZElement {
    terms: BTreeSet<ZGen>,
}

impl ZElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_gen(g: ZGen) -> Self {
        let mut e = Self::zero();
        e.terms.insert(g);
        e
    }

    /// Regroups an element of `A(n)` lying in `A(Z)` into basis elements.
    pub fn collect(a: &AlgebraElement, c: &PointedMatchedCircle) -> Self {
        let terms = a
            .terms()
            .map(|g| ZGen::from_strands(g, c).expect("element lies in A(Z)"))
            .collect();
        ZElement { terms }
    }

    pub fn toggle(&mut self, g: ZGen) {
        if !self.terms.remove(&g) {
            self.terms.insert(g);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for g in &other.terms {
            out.toggle(g.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &ZGen> {
        self.terms.iter()
    }

    pub fn multiply(&self, other: &Self, c: &PointedMatchedCircle) -> Self {
        let mut out = Self::zero();
        for a in &self.terms {
            for b in &other.terms {
                out = out.add(&a.multiply(b, c));
            }
        }
        out
    }

    pub fn differential(&self, c: &PointedMatchedCircle) -> Self {
        let mut out = Self::zero();
        for a in &self.terms {
            out = out.add(&a.differential(c));
        }
        out
    }

    pub fn expand(&self, c: &PointedMatchedCircle) -> AlgebraElement {
        let mut out = AlgebraElement::zero(c.n());
        for g in &self.terms {
            for t in g.expand(c).terms() {
                out.toggle(t.clone());
            }
        }
        out
    }
}

impl fmt::Display for ZElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let body: Vec<String> = self.terms.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", body.join(" + "))
    }
}

/// `a(rho)` as basis elements of `A(Z)`.
pub fn a_matched_z(rho: &[ReebChord], c: &PointedMatchedCircle) -> Result<ZElement> {
    for &r in rho {
        c.check_chord(r)?;
    }
    let (starts, ends) = chord_masks(rho)?;
    let sa = c.arcs_of_mask(starts);
    let ea = c.arcs_of_mask(ends);
    let mut out = ZElement::zero();
    if sa.count_ones() != starts.count_ones() || ea.count_ones() != ends.count_ones() {
        return Ok(out);
    }
    let free = mask_of(1..=c.arcs()) & !(sa | ea);
    for h in subsets(free) {
        out.toggle(ZGen::new(c, rho.to_vec(), h)?);
    }
    Ok(out)
}

fn moving_sets(
    c: &PointedMatchedCircle,
    p: usize,
    used_start_arcs: u64,
    used_end_arcs: u64,
    used_ends: u64,
    cur: &mut Vec<ReebChord>,
    out: &mut Vec<(Vec<ReebChord>, u64)>,
) {
    if p > c.n() {
        out.push((cur.clone(), used_start_arcs | used_end_arcs));
        return;
    }
    moving_sets(c, p + 1, used_start_arcs, used_end_arcs, used_ends, cur, out);
    let a = c.arc(p);
    if used_start_arcs >> a & 1 == 1 {
        return;
    }
    for q in p + 1..=c.n() {
        let b = c.arc(q);
        if used_ends >> q & 1 == 1 || used_end_arcs >> b & 1 == 1 {
            continue;
        }
        cur.push(ReebChord::new(p, q));
        moving_sets(
            c,
            p + 1,
            used_start_arcs | 1 << a,
            used_end_arcs | 1 << b,
            used_ends | 1 << q,
            cur,
            out,
        );
        cur.pop();
    }
}

/// Every basis element of `A(Z)`, all strand counts, in canonical order.
pub fn enumerate_zgens(c: &PointedMatchedCircle) -> Vec<ZGen> {
    let mut sets = Vec::new();
    moving_sets(c, 1, 0, 0, 0, &mut Vec::new(), &mut sets);
    let all = mask_of(1..=c.arcs());
    let mut out = Vec::new();
    for (moving, used) in sets {
        for h in subsets(all & !used) {
            out.push(ZGen {
                moving: moving.clone(),
                horizontal: h,
            });
        }
    }
    out.sort();
    out
}

/// Basis elements grouped by their left idempotent.
pub fn zgens_by_left(c: &PointedMatchedCircle, gens: &[ZGen]) -> BTreeMap<u64, Vec<ZGen>> {
    let mut map: BTreeMap<u64, Vec<ZGen>> = BTreeMap::new();
    for g in gens {
        map.entry(g.left_idempotent(c)).or_default().push(g.clone());
    }
    map
}

/// Every strands generator of `A(n)`.
pub fn enumerate_strands(n: usize) -> Vec<StrandsGenerator> {
    fn go(n: usize, p: usize, ends: u64, cur: &mut Vec<(usize, usize)>, out: &mut Vec<StrandsGenerator>) {
        if p > n {
            out.push(StrandsGenerator::from_sorted(n, cur.clone()));
            return;
        }
        go(n, p + 1, ends, cur, out);
        for q in p..=n {
            if ends >> q & 1 == 0 {
                cur.push((p, q));
                go(n, p + 1, ends | 1 << q, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, 1, 0, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, s: &[(usize, usize)]) -> StrandsGenerator {
        StrandsGenerator::new(n, s.to_vec()).unwrap()
    }

    #[test]
    fn products() {
        let a = g(4, &[(1, 1), (2, 3)]);
        let b = g(4, &[(1, 1), (3, 4)]);
        assert_eq!(a.multiply(&b), Some(g(4, &[(1, 1), (2, 4)])));
        let i = StrandsGenerator::identity(4, mask_of([1, 2]));
        assert_eq!(i.multiply(&i), Some(i.clone()));
        let j = StrandsGenerator::identity(4, mask_of([1, 3]));
        assert_eq!(i.multiply(&j), None);
    }

    #[test]
    fn single_resolution() {
        let x = g(4, &[(1, 4), (2, 3)]);
        assert_eq!(x.differential(), vec![g(4, &[(1, 3), (2, 4)])]);
        assert!(StrandsGenerator::identity(4, 6).differential().is_empty());
    }

    #[test]
    fn d_squared_small() {
        for n in 1..=4 {
            for x in enumerate_strands(n) {
                let a = AlgebraElement::from_gen(x);
                assert!(a.differential().differential().is_zero());
            }
        }
    }

    #[test]
    fn a0_completions() {
        let c = PointedMatchedCircle::split(1);
        let a = a0(&[ReebChord::new(1, 3)], &c).unwrap();
        assert_eq!(a.len(), 4);
        let clash = a0(&[ReebChord::new(1, 3), ReebChord::new(1, 2)], &c);
        assert!(matches!(clash, Err(Error::ChordCollision(_))));
    }

    #[test]
    fn sections() {
        let c = PointedMatchedCircle::split(1);
        let i = idempotent(mask_of([1]), &c);
        let expected = AlgebraElement::from_terms(
            4,
            [
                StrandsGenerator::identity(4, mask_of([1])),
                StrandsGenerator::identity(4, mask_of([3])),
            ],
        );
        assert_eq!(i, expected);
    }

    #[test]
    fn antipodal_idempotent_action() {
        let c = PointedMatchedCircle::antipodal(2);
        let a = a_matched(&[ReebChord::new(1, 5)], &c).unwrap();
        let left = idempotent(mask_of([1, 2]), &c).multiply(&a).unwrap();
        assert!(!left.is_zero());
        let none = idempotent(mask_of([2, 3]), &c).multiply(&a).unwrap();
        assert!(none.is_zero());
    }

    #[test]
    fn zgen_expansion_roundtrip() {
        let c = PointedMatchedCircle::split(1);
        let gens = enumerate_zgens(&c);
        let mut total = AlgebraElement::zero(4);
        for z in &gens {
            for t in z.expand(&c).terms() {
                assert_eq!(ZGen::from_strands(t, &c).as_ref(), Some(z));
                total.toggle(t.clone());
            }
        }
        let direct = enumerate_strands(4)
            .into_iter()
            .filter(|t| ZGen::from_strands(t, &c).is_some())
            .count();
        assert_eq!(total.len(), direct);
    }

    #[test]
    fn matched_z_agrees() {
        let c = PointedMatchedCircle::antipodal(2);
        let rho = [ReebChord::new(1, 3), ReebChord::new(2, 6)];
        let z = a_matched_z(&rho, &c).unwrap();
        assert_eq!(z.expand(&c), a_matched(&rho, &c).unwrap());
    }
}
