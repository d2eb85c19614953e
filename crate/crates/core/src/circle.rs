//! Pointed matched circles, Reeb chords, the intersection form and chord linking.

use crate::error::{Error, Result};
use crate::{IntMatrix, Rational};
use std::fmt;

/// A pointed matched circle of genus `k`, with positions `1..=4k` read from the basepoint.
///
/// Arcs are numbered `1..=2k` by their lower endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointedMatchedCircle {
    genus: usize,
    pairs: Vec<(usize, usize)>,
    arc_of: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReebChord {
    pub start: usize,
    pub end: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleReport {
    pub fibers_ok: bool,
    pub surgery_circles: usize,
    /// Normalized arcs as `(lower, upper)` positions, arc `i` at index `i - 1`.
    pub arcs: Vec<(usize, usize)>,
}

impl CircleReport {
    pub fn is_valid(&self) -> bool {
        self.fibers_ok && self.surgery_circles == 1
    }
}

fn normalize(genus: usize, matching: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    if genus == 0 {
        return Err(Error::Structural("genus must be positive".into()));
    }
    let n = 4 * genus;
    if matching.len() != 2 * genus {
        return Err(Error::Structural(format!(
            "expected {} matched pairs, found {}",
            2 * genus,
            matching.len()
        )));
    }
    let mut seen = vec![false; n + 1];
    let mut pairs = Vec::with_capacity(matching.len());
    for &(a, b) in matching {
        for p in [a, b] {
            if p == 0 || p > n {
                return Err(Error::Structural(format!("position {p} outside 1..={n}")));
            }
            if seen[p] {
                return Err(Error::Structural(format!("position {p} matched twice")));
            }
            seen[p] = true;
        }
        if a == b {
            return Err(Error::Structural(format!("pair ({a},{b}) is degenerate")));
        }
        pairs.push((a.min(b), a.max(b)));
    }
    pairs.sort();
    Ok(pairs)
}

/// Number of circles after oriented surgery on all matched pairs.
///
/// Each position `p` splits into half-points `p-` and `p+`; the circle joins `p+` to
/// `(p+1)-` cyclically and surgery on `{p, q}` joins `p-` to `q+` and `p+` to `q-`.
fn surgery_circles(n: usize, pairs: &[(usize, usize)]) -> usize {
    let minus = |p: usize| 2 * (p - 1);
    let plus = |p: usize| 2 * (p - 1) + 1;
    let mut along = vec![0; 2 * n];
    let mut across = vec![0; 2 * n];
    for p in 1..=n {
        let q = if p == n { 1 } else { p + 1 };
        along[plus(p)] = minus(q);
        along[minus(q)] = plus(p);
    }
    for &(a, b) in pairs {
        across[minus(a)] = plus(b);
        across[plus(b)] = minus(a);
        across[plus(a)] = minus(b);
        across[minus(b)] = plus(a);
    }
    let mut visited = vec![false; 2 * n];
    let mut count = 0;
    for start in 0..2 * n {
        if visited[start] {
            continue;
        }
        count += 1;
        let mut v = start;
        loop {
            visited[v] = true;
            let w = along[v];
            visited[w] = true;
            v = across[w];
            if v == start {
                break;
            }
        }
    }
    count
}

pub fn validate_circle(genus: usize, matching: &[(usize, usize)]) -> Result<CircleReport> {
    let pairs = normalize(genus, matching)?;
    let circles = surgery_circles(4 * genus, &pairs);
    Ok(CircleReport {
        fibers_ok: true,
        surgery_circles: circles,
        arcs: pairs,
    })
}

impl PointedMatchedCircle {
    pub fn new(genus: usize, matching: &[(usize, usize)]) -> Result<Self> {
        let report = validate_circle(genus, matching)?;
        if report.surgery_circles != 1 {
            return Err(Error::InvalidCircle(report.surgery_circles));
        }
        let n = 4 * genus;
        let mut arc_of = vec![0; n + 1];
        for (i, &(a, b)) in report.arcs.iter().enumerate() {
            arc_of[a] = i + 1;
            arc_of[b] = i + 1;
        }
        Ok(PointedMatchedCircle {
            genus,
            pairs: report.arcs,
            arc_of,
        })
    }

    /// Pairs `(i, i + 2k)`.
    pub fn antipodal(genus: usize) -> Self {
        let m: Vec<_> = (1..=2 * genus).map(|i| (i, i + 2 * genus)).collect();
        Self::new(genus, &m).expect("antipodal circle is valid")
    }

    /// Genus-1 summands `(4i+1, 4i+3), (4i+2, 4i+4)`.
    pub fn split(genus: usize) -> Self {
        let m: Vec<_> = (0..genus)
            .flat_map(|i| [(4 * i + 1, 4 * i + 3), (4 * i + 2, 4 * i + 4)])
            .collect();
        Self::new(genus, &m).expect("split circle is valid")
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn n(&self) -> usize {
        4 * self.genus
    }

    pub fn arcs(&self) -> usize {
        2 * self.genus
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// The arc (1-based) containing position `p`.
    pub fn arc(&self, p: usize) -> usize {
        self.arc_of[p]
    }

    pub fn partner(&self, p: usize) -> usize {
        let (a, b) = self.pairs[self.arc(p) - 1];
        if a == p {
            b
        } else {
            a
        }
    }

    pub fn is_lower(&self, p: usize) -> bool {
        self.pairs[self.arc(p) - 1].0 == p
    }

    /// Bitmask of the arcs hit by the positions in `mask`.
    pub fn arcs_of_mask(&self, mask: u64) -> u64 {
        let mut out = 0;
        for p in 1..=self.n() {
            if mask >> p & 1 == 1 {
                out |= 1 << self.arc(p);
            }
        }
        out
    }

    pub fn intersection_form(&self) -> IntMatrix {
        let m = self.arcs();
        let mut j = IntMatrix::zeros(m, m);
        for i in 0..m {
            for k in i + 1..m {
                let (_, b) = self.pairs[i];
                let (c, d) = self.pairs[k];
                if c < b && b < d {
                    j[(i, k)] = 1;
                    j[(k, i)] = -1;
                }
            }
        }
        j
    }

    pub fn reverse(&self) -> Self {
        let n = self.n();
        let m: Vec<_> = self.pairs.iter().map(|&(a, b)| (n + 1 - b, n + 1 - a)).collect();
        Self::new(self.genus, &m).expect("reversal preserves validity")
    }

    pub fn check_chord(&self, r: ReebChord) -> Result<()> {
        if r.start >= r.end || r.start == 0 || r.end > self.n() {
            return Err(Error::Structural(format!(
                "chord {r} is not a Reeb chord on 1..={}",
                self.n()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for PointedMatchedCircle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "[{}]", body.join(" "))
    }
}

impl ReebChord {
    pub fn new(start: usize, end: usize) -> Self {
        ReebChord { start, end }
    }

    pub fn reverse(self, n: usize) -> Self {
        ReebChord {
            start: n + 1 - self.end,
            end: n + 1 - self.start,
        }
    }

    fn mult(self, p: usize) -> Rational {
        if p == self.start || p == self.end {
            Rational::new(1, 2)
        } else if self.start < p && p < self.end {
            Rational::from_integer(1)
        } else {
            Rational::from_integer(0)
        }
    }
}

impl fmt::Display for ReebChord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.start, self.end)
    }
}

/// `L(r1, r2) = mult_{r2}(r1.end) - mult_{r2}(r1.start)`.
pub fn chord_linking(r1: ReebChord, r2: ReebChord) -> Rational {
    r2.mult(r1.end) - r2.mult(r1.start)
}

/// All Reeb chords on `1..=n`.
pub fn all_chords(n: usize) -> Vec<ReebChord> {
    let mut out = Vec::new();
    for s in 1..=n {
        for e in s + 1..=n {
            out.push(ReebChord::new(s, e));
        }
    }
    out
}
