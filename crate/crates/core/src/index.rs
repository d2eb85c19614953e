//! Domains, Euler and point measures, `iota` of chord sequences and the embedded index.

use crate::azgrading::grade_zelement;
use crate::circle::{chord_linking, PointedMatchedCircle, ReebChord};
use crate::error::{Error, Result};
use crate::modules::TypeDStructure;
use crate::strands::{a_matched_z, mask_items, ZElement, ZGen};
use crate::Rational;
use num_traits::Signed;
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub name: String,
    pub euler: Rational,
}

/// An intersection point with its four corners; `None` marks a corner outside every region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerPoint {
    pub name: String,
    pub corners: [Option<usize>; 4],
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RegionComplex {
    pub regions: Vec<Region>,
    pub points: Vec<CornerPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domain {
    pub multiplicities: Vec<i64>,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

/// Chord data attached to a domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChordTerm {
    Provincial,
    /// A sequence of one-chord sets.
    Sequence(Vec<ReebChord>),
    /// A sequence of chord sets.
    Sets(Vec<Vec<ReebChord>>),
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n)
}

impl RegionComplex {
    pub fn point(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p.name == name)
    }

    pub fn region(&self, name: &str) -> Option<usize> {
        self.regions.iter().position(|p| p.name == name)
    }

    pub fn euler_measure(&self, b: &[i64]) -> Rational {
        self.regions.iter().zip(b).map(|(reg, &m)| reg.euler * r(m)).sum()
    }

    pub fn point_measure(&self, b: &[i64], pts: &[usize]) -> Rational {
        pts.iter()
            .flat_map(|&p| self.points[p].corners.iter())
            .map(|c| c.map_or(r(0), |i| Rational::new(b[i], 4)))
            .sum()
    }

    /// Disjoint union; indices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Self) -> (Self, usize, usize) {
        let (nr, np) = (self.regions.len(), self.points.len());
        let mut out = self.clone();
        out.regions.extend(other.regions.iter().cloned());
        out.points.extend(other.points.iter().map(|p| CornerPoint {
            name: p.name.clone(),
            corners: p.corners.map(|c| c.map(|i| i + nr)),
        }));
        (out, nr, np)
    }
}

impl Domain {
    pub fn zero(regions: usize) -> Self {
        Domain {
            multiplicities: vec![0; regions],
            x: Vec::new(),
            y: Vec::new(),
        }
    }
}

pub fn iota(seq: &[ReebChord]) -> Rational {
    let l = seq.len() as i64;
    let mut out = Rational::new(-l, 2);
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            out += chord_linking(seq[i], seq[j]);
        }
    }
    out
}

pub fn iota_set(set: &[ReebChord]) -> Rational {
    let l = set.len() as i64;
    let mut out = Rational::new(-l, 2);
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            out -= chord_linking(set[i], set[j]).abs();
        }
    }
    out
}

/// `iota` of the reversed chords `-rho_i`, read on the reversed circle with `n` positions.
pub fn iota_reversed(seq: &[ReebChord], n: usize) -> Rational {
    let rev: Vec<ReebChord> = seq.iter().map(|c| c.reverse(n)).collect();
    iota(&rev)
}

fn iota_sets(sets: &[Vec<ReebChord>]) -> Rational {
    let mut out: Rational = sets.iter().map(|s| iota_set(s)).sum();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            for &a in &sets[i] {
                for &b in &sets[j] {
                    out += chord_linking(a, b);
                }
            }
        }
    }
    out
}

/// `e + n_x + n_y + |rho| + iota(rho)`, which must be an integer.
pub fn embedded_index_rational(rc: &RegionComplex, d: &Domain, chords: &ChordTerm) -> Rational {
    let b = &d.multiplicities;
    let base = rc.euler_measure(b) + rc.point_measure(b, &d.x) + rc.point_measure(b, &d.y);
    base + match chords {
        ChordTerm::Provincial => r(0),
        ChordTerm::Sequence(seq) => r(seq.len() as i64) + iota(seq),
        ChordTerm::Sets(sets) => r(sets.len() as i64) + iota_sets(sets),
    }
}

pub fn embedded_index(rc: &RegionComplex, d: &Domain, chords: &ChordTerm) -> Result<i64> {
    let v = embedded_index_rational(rc, d, chords);
    if !v.is_integer() {
        return Err(Error::NonIntegralIndex(format!("{v}")));
    }
    Ok(v.to_integer())
}

/// The combinatorial AZ diagram: cells `C(i, j)`, `0 <= i <= j <= n`, and points `(p, q)`,
/// `p <= q`, with `p` the alpha coordinate and `q` the beta coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AzComplex {
    pub n: usize,
    pub complex: RegionComplex,
    cells: HashMap<(usize, usize), usize>,
    points: HashMap<(usize, usize), usize>,
}

impl AzComplex {
    pub fn new(c: &PointedMatchedCircle) -> Self {
        let n = c.n();
        let mut complex = RegionComplex::default();
        let mut cells = HashMap::new();
        for i in 0..=n {
            for j in i..=n {
                cells.insert((i, j), complex.regions.len());
                complex.regions.push(Region {
                    name: format!("C{i},{j}"),
                    euler: if i == j { Rational::new(1, 4) } else { r(0) },
                });
            }
        }
        let mut points = HashMap::new();
        for p in 1..=n {
            for q in p..=n {
                let cell = |i: usize, j: usize| (i <= j).then(|| cells[&(i, j)]);
                points.insert((p, q), complex.points.len());
                complex.points.push(CornerPoint {
                    name: format!("({p},{q})"),
                    corners: [cell(p - 1, q - 1), cell(p, q - 1), cell(p - 1, q), cell(p, q)],
                });
            }
        }
        AzComplex {
            n,
            complex,
            cells,
            points,
        }
    }

    pub fn cell(&self, i: usize, j: usize) -> usize {
        self.cells[&(i, j)]
    }

    pub fn point(&self, p: usize, q: usize) -> usize {
        self.points[&(p, q)]
    }
}

/// Domain of the multiplication of `I(s)` by `a(rho)`: one half-strip per chord.
pub fn az_multiplication_domain(
    c: &PointedMatchedCircle,
    az: &AzComplex,
    s: u64,
    rho: &[ReebChord],
) -> Result<Domain> {
    if rho.is_empty() {
        return Err(Error::NoDomain("multiplication by an idempotent".into()));
    }
    let g = ZGen::from_chords(c, s, rho)?
        .ok_or_else(|| Error::NoDomain(format!("I({:?}) a(rho) = 0", mask_items(s))))?;
    let mut d = Domain::zero(az.complex.regions.len());
    for ch in rho {
        for i in ch.start..ch.end {
            for j in ch.end..=az.n {
                d.multiplicities[az.cell(i, j)] += 1;
            }
        }
        d.x.push(az.point(ch.end, ch.end));
        d.y.push(az.point(ch.start, ch.end));
    }
    for arc in mask_items(g.horizontal()) {
        let p = c.pairs()[arc - 1].0;
        d.x.push(az.point(p, p));
        d.y.push(az.point(p, p));
    }
    Ok(d)
}

/// `m(x) = m(a(-rho)) + m(y) + n` for a class from `x` to `y` of index `n`.
///
/// Chords are given on the boundary of the diagram and reversed onto the algebra circle of `d`.
pub fn grading_shift_check(
    d: &TypeDStructure,
    x: usize,
    y: usize,
    rho_seq: &[ReebChord],
    n: i64,
) -> Result<bool> {
    let c = &d.circle;
    let (mx, my) = match (d.gens[x].grading, d.gens[y].grading) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::Inapplicable("ungraded generator".into())),
    };
    let shift = crate::azgrading::GradedValue::from_m(n);
    if rho_seq.is_empty() {
        return Ok(mx == my + shift);
    }
    let mut a = ZElement::from_gen(ZGen::idempotent(d.gens[x].idempotent));
    for ch in rho_seq {
        a = a.multiply(&a_matched_z(&[ch.reverse(c.n())], c)?, c);
    }
    if a.is_zero() {
        return Err(Error::Inapplicable("a(-rho) vanishes".into()));
    }
    let ma = grade_zelement(c, &a)?;
    Ok(mx == ma + my + shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strands::mask_of;

    #[test]
    fn iota_small() {
        assert_eq!(iota(&[ReebChord::new(1, 2)]), Rational::new(-1, 2));
        assert_eq!(iota(&[ReebChord::new(1, 2), ReebChord::new(3, 4)]), r(-1));
    }

    #[test]
    fn bigon() {
        let rc = RegionComplex {
            regions: vec![Region {
                name: "B".into(),
                euler: Rational::new(1, 2),
            }],
            points: vec![
                CornerPoint {
                    name: "x".into(),
                    corners: [Some(0), None, None, None],
                },
                CornerPoint {
                    name: "y".into(),
                    corners: [Some(0), None, None, None],
                },
            ],
        };
        let d = Domain {
            multiplicities: vec![1],
            x: vec![0],
            y: vec![1],
        };
        assert_eq!(embedded_index(&rc, &d, &ChordTerm::Provincial), Ok(1));
        let zero = Domain::zero(1);
        assert_eq!(rc.euler_measure(&zero.multiplicities), r(0));
        let half = Domain {
            multiplicities: vec![1],
            x: vec![0],
            y: vec![],
        };
        assert!(embedded_index(&rc, &half, &ChordTerm::Provincial).is_err());
    }

    #[test]
    fn genus_one_half_strip() {
        let c = PointedMatchedCircle::split(1);
        let az = AzComplex::new(&c);
        let rho = [ReebChord::new(1, 3)];
        let d = az_multiplication_domain(&c, &az, mask_of([1]), &rho).unwrap();
        let b = &d.multiplicities;
        assert_eq!(az.complex.point_measure(b, &d.x[..1]), Rational::new(1, 4));
        assert_eq!(
            embedded_index(&az.complex, &d, &ChordTerm::Sets(vec![rho.to_vec()])),
            Ok(1)
        );
        assert!(matches!(
            az_multiplication_domain(&c, &az, mask_of([2]), &rho),
            Err(Error::NoDomain(_))
        ));
    }

    #[test]
    fn interleaved_pair() {
        let c = PointedMatchedCircle::antipodal(2);
        let az = AzComplex::new(&c);
        let rho = [ReebChord::new(1, 3), ReebChord::new(2, 4)];
        let d = az_multiplication_domain(&c, &az, mask_of([1, 2]), &rho).unwrap();
        let b = &d.multiplicities;
        assert_eq!(az.complex.point_measure(b, &d.y), Rational::new(3, 2));
        assert_eq!(
            embedded_index(&az.complex, &d, &ChordTerm::Sets(vec![rho.to_vec()])),
            Ok(1)
        );
    }
}
