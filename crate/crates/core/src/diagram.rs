//! Bordered and closed Heegaard diagrams as incidence data, their generators and signs.

use crate::azgrading::GradedValue;
use crate::circle::PointedMatchedCircle;
use crate::error::{Error, Result};
use crate::perm;
use crate::strands::mask_items;
use crate::IntMatrix;
use std::collections::{BTreeMap, BTreeSet, HashMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    TypeD,
    TypeA,
    Closed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Alpha,
    Beta,
}

/// A curve of one colour: an arc `1..=2k` or a circle (index into the circle list).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Curve {
    Arc(usize),
    Circle(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub id: String,
    pub alpha: Curve,
    pub beta: Curve,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub genus: usize,
    pub boundary: Option<PointedMatchedCircle>,
    pub convention: Convention,
    pub side: Side,
    pub alpha_circles: Vec<String>,
    pub beta_circles: Vec<String>,
    pub points: Vec<Point>,
    /// Optional names for generators, each given by its set of point ids.
    pub generator_names: Vec<(String, Vec<String>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: Option<String>,
    /// Point indices, ordered along the alpha curves.
    pub points: Vec<usize>,
    /// Occupied arcs, as a bitmask.
    pub occupancy: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradeRow {
    pub name: String,
    pub points: Vec<String>,
    pub occupancy: Vec<usize>,
    pub sigma_o: Option<Vec<usize>>,
    pub sigma_x: Vec<usize>,
    pub sign_sigma_o: i8,
    pub sign_sigma_x: i8,
    pub local: Vec<i8>,
    pub s: i8,
    pub m: GradedValue,
}

/// Order and orientation of circles, by name; `false` reverses a circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleOrdering {
    pub alpha: Vec<(String, bool)>,
    pub beta: Vec<(String, bool)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetReport {
    pub det: i64,
    pub canonical: bool,
    pub h1_order: u64,
    pub chi: i64,
    pub consistent: bool,
}

impl Diagram {
    pub fn arc_count(&self) -> usize {
        self.boundary.as_ref().map_or(0, |c| c.arcs())
    }

    pub fn is_closed(&self) -> bool {
        self.convention == Convention::Closed
    }

    pub fn validate(&self) -> Result<()> {
        let closed = self.convention == Convention::Closed;
        if closed != self.boundary.is_none() {
            return Err(Error::Structural(
                "closed convention goes with a missing boundary and vice versa".into(),
            ));
        }
        let k = self.boundary.as_ref().map_or(0, |c| c.genus());
        if self.genus < k {
            return Err(Error::Structural(format!(
                "genus {} is smaller than the boundary genus {k}",
                self.genus
            )));
        }
        let (na, nb) = match (closed, self.side) {
            (true, _) => (self.genus, self.genus),
            (false, Side::Alpha) => (self.genus - k, self.genus),
            (false, Side::Beta) => (self.genus, self.genus - k),
        };
        if self.alpha_circles.len() != na || self.beta_circles.len() != nb {
            return Err(Error::Structural(format!(
                "expected {na} alpha and {nb} beta circles, found {} and {}",
                self.alpha_circles.len(),
                self.beta_circles.len()
            )));
        }
        for names in [&self.alpha_circles, &self.beta_circles] {
            let set: BTreeSet<_> = names.iter().collect();
            if set.len() != names.len() {
                return Err(Error::Structural("repeated circle name".into()));
            }
        }
        let mut ids = BTreeSet::new();
        for p in &self.points {
            if !ids.insert(&p.id) {
                return Err(Error::Structural(format!("repeated point id {}", p.id)));
            }
            if p.sign != 1 && p.sign != -1 {
                return Err(Error::Structural(format!("point {} has sign {}", p.id, p.sign)));
            }
            let arcs_ok = |side: Side| !closed && self.side == side;
            for (curve, side, count) in [(p.alpha, Side::Alpha, na), (p.beta, Side::Beta, nb)] {
                let ok = match curve {
                    Curve::Arc(i) => arcs_ok(side) && i >= 1 && i <= 2 * k,
                    Curve::Circle(j) => j < count,
                };
                if !ok {
                    return Err(Error::Structural(format!(
                        "point {} lies on an unknown curve {curve:?}",
                        p.id
                    )));
                }
            }
        }
        for (name, ids) in &self.generator_names {
            for id in ids {
                if !self.points.iter().any(|p| &p.id == id) {
                    return Err(Error::Structural(format!(
                        "generator {name} refers to unknown point {id}"
                    )));
                }
            }
        }
        Ok(())
    }

    fn alpha_rank(&self, c: Curve) -> usize {
        let k2 = self.arc_count();
        match (self.convention, c) {
            (Convention::TypeD, Curve::Arc(i)) => i - 1,
            (Convention::TypeD, Curve::Circle(j)) => k2 + j,
            (_, Curve::Circle(j)) => j,
            (_, Curve::Arc(i)) => self.alpha_circles.len() + i - 1,
        }
    }

    fn beta_rank(&self, c: Curve) -> usize {
        let k2 = self.arc_count();
        match (self.convention, c) {
            (Convention::TypeA, Curve::Arc(i)) => i - 1,
            (Convention::TypeA, Curve::Circle(j)) => k2 + j,
            (_, Curve::Circle(j)) => j,
            (_, Curve::Arc(i)) => self.beta_circles.len() + i - 1,
        }
    }

    fn bordered_curve(&self, p: &Point) -> Curve {
        match self.side {
            Side::Alpha => p.alpha,
            Side::Beta => p.beta,
        }
    }

    pub fn enumerate_generators(&self) -> Result<Vec<Generator>> {
        self.validate()?;
        let k2 = self.arc_count();
        let by_alpha_primary = self.side == Side::Beta && !self.is_closed();
        let (primary_count, other_circles) = if by_alpha_primary {
            (self.alpha_circles.len(), self.beta_circles.len())
        } else {
            (self.beta_circles.len(), self.alpha_circles.len())
        };
        let key = |c: Curve| match c {
            Curve::Arc(i) => i - 1,
            Curve::Circle(j) => k2 + j,
        };
        let mut on: Vec<Vec<(usize, usize)>> = vec![Vec::new(); primary_count];
        for (idx, p) in self.points.iter().enumerate() {
            let (prim, other) = if by_alpha_primary {
                (p.alpha, p.beta)
            } else {
                (p.beta, p.alpha)
            };
            if let Curve::Circle(j) = prim {
                on[j].push((idx, key(other)));
            }
        }
        let circle_mask: u128 = ((1u128 << other_circles) - 1) << k2;
        let mut found = Vec::new();
        let mut cur = Vec::with_capacity(primary_count);
        fn go(
            on: &[Vec<(usize, usize)>],
            j: usize,
            used: u128,
            circle_mask: u128,
            cur: &mut Vec<usize>,
            found: &mut Vec<Vec<usize>>,
        ) {
            if j == on.len() {
                if used & circle_mask == circle_mask {
                    found.push(cur.clone());
                }
                return;
            }
            for &(idx, other) in &on[j] {
                if used >> other & 1 == 0 {
                    cur.push(idx);
                    go(on, j + 1, used | 1 << other, circle_mask, cur, found);
                    cur.pop();
                }
            }
        }
        go(&on, 0, 0, circle_mask, &mut cur, &mut found);

        let mut gens: Vec<Generator> = found
            .into_iter()
            .map(|mut pts| {
                pts.sort_by_key(|&i| self.alpha_rank(self.points[i].alpha));
                let occupancy = pts
                    .iter()
                    .fold(0u64, |m, &i| match self.bordered_curve(&self.points[i]) {
                        Curve::Arc(a) => m | 1 << a,
                        Curve::Circle(_) => m,
                    });
                Generator {
                    name: None,
                    points: pts,
                    occupancy,
                }
            })
            .collect();
        gens.sort_by(|a, b| a.points.cmp(&b.points));

        let index: HashMap<&str, usize> = self
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.id.as_str(), i))
            .collect();
        let mut named = Vec::new();
        for (name, ids) in &self.generator_names {
            let want: BTreeSet<usize> = ids.iter().map(|id| index[id.as_str()]).collect();
            let pos = gens
                .iter()
                .position(|g| g.points.iter().copied().collect::<BTreeSet<_>>() == want)
                .ok_or_else(|| Error::Schema(format!("named generator {name} is not a generator")))?;
            let mut g = gens.remove(pos);
            g.name = Some(name.clone());
            named.push(g);
        }
        named.extend(gens);
        Ok(named)
    }

    pub fn generator_label(&self, x: &Generator) -> String {
        match &x.name {
            Some(n) => n.clone(),
            None => {
                let ids: Vec<&str> = x.points.iter().map(|&i| self.points[i].id.as_str()).collect();
                format!("({})", ids.join(","))
            }
        }
    }

    /// Sign of `x` under the diagram's own convention.
    pub fn grade(&self, x: &Generator) -> GradeRow {
        let pairs: Vec<(usize, usize)> = x
            .points
            .iter()
            .map(|&i| {
                let p = &self.points[i];
                (self.alpha_rank(p.alpha), self.beta_rank(p.beta))
            })
            .collect();
        let sigma_x = perm::rank_permutation(&pairs);
        let sign_sigma_x = perm::sign(&sigma_x);
        let local: Vec<i8> = x.points.iter().map(|&i| self.points[i].sign).collect();
        let occupancy = mask_items(x.occupancy);
        let sigma_o =
            (self.convention == Convention::TypeD).then(|| sigma_of_subset(x.occupancy, self.arc_count()));
        let sign_sigma_o = sigma_o.as_deref().map_or(1, perm::sign);
        let s = sign_sigma_o * sign_sigma_x * local.iter().product::<i8>();
        GradeRow {
            name: self.generator_label(x),
            points: x.points.iter().map(|&i| self.points[i].id.clone()).collect(),
            occupancy,
            sigma_o,
            sigma_x,
            sign_sigma_o,
            sign_sigma_x,
            local,
            s,
            m: GradedValue::from_sign(s as i64),
        }
    }

    fn grade_as(&self, x: &Generator, conv: Convention) -> Result<GradeRow> {
        if self.convention != conv {
            return Err(Error::Convention(format!(
                "diagram is tagged {:?}, not {conv:?}",
                self.convention
            )));
        }
        Ok(self.grade(x))
    }

    pub fn grade_type_d(&self, x: &Generator) -> Result<GradeRow> {
        self.grade_as(x, Convention::TypeD)
    }

    pub fn grade_type_a(&self, x: &Generator) -> Result<GradeRow> {
        self.grade_as(x, Convention::TypeA)
    }

    pub fn grade_closed(&self, x: &Generator) -> Result<GradeRow> {
        self.grade_as(x, Convention::Closed)
    }

    pub fn grade_all(&self) -> Result<Vec<GradeRow>> {
        Ok(self
            .enumerate_generators()?
            .iter()
            .map(|x| self.grade(x))
            .collect())
    }

    pub fn with_convention(&self, convention: Convention) -> Result<Diagram> {
        if self.is_closed() || convention == Convention::Closed {
            return Err(Error::Convention(
                "only bordered diagrams can be re-tagged".into(),
            ));
        }
        Ok(Diagram {
            convention,
            ..self.clone()
        })
    }

    pub fn ordering(&self) -> CircleOrdering {
        CircleOrdering {
            alpha: self.alpha_circles.iter().map(|n| (n.clone(), true)).collect(),
            beta: self.beta_circles.iter().map(|n| (n.clone(), true)).collect(),
        }
    }

    /// The same diagram with circles reordered and reoriented as in `ord`.
    pub fn reordered(&self, ord: &CircleOrdering) -> Result<Diagram> {
        let alpha = reindex(&self.alpha_circles, &ord.alpha)?;
        let beta = reindex(&self.beta_circles, &ord.beta)?;
        let mut out = self.clone();
        out.alpha_circles = ord.alpha.iter().map(|(n, _)| n.clone()).collect();
        out.beta_circles = ord.beta.iter().map(|(n, _)| n.clone()).collect();
        for p in &mut out.points {
            if let Curve::Circle(j) = p.alpha {
                let (to, keep) = alpha[j];
                p.alpha = Curve::Circle(to);
                if !keep {
                    p.sign = -p.sign;
                }
            }
            if let Curve::Circle(j) = p.beta {
                let (to, keep) = beta[j];
                p.beta = Curve::Circle(to);
                if !keep {
                    p.sign = -p.sign;
                }
            }
        }
        Ok(out)
    }

    pub fn intersection_matrix(&self) -> Result<IntMatrix> {
        if !self.is_closed() {
            return Err(Error::Convention(
                "intersection matrix needs a closed diagram".into(),
            ));
        }
        self.validate()?;
        let g = self.genus;
        let mut m = IntMatrix::zeros(g, g);
        for p in &self.points {
            if let (Curve::Circle(i), Curve::Circle(j)) = (p.alpha, p.beta) {
                m[(i, j)] += p.sign as i64;
            }
        }
        Ok(m)
    }

    pub fn det_criterion(&self) -> Result<DetReport> {
        let det = self.intersection_matrix()?.det();
        if det == 0 {
            return Err(Error::NotRationalHomologySphere);
        }
        let chi: i64 = self.grade_all()?.iter().map(|r| r.s as i64).sum();
        Ok(DetReport {
            det,
            canonical: det > 0,
            h1_order: det.unsigned_abs(),
            chi,
            consistent: chi == det,
        })
    }
}

/// One-line images of `sigma_s`: `(1..|s|)` onto the arcs of `s`, the rest onto the complement.
pub fn sigma_of_subset(s: u64, arcs: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (1..=arcs).filter(|a| s >> a & 1 == 1).map(|a| a - 1).collect();
    out.extend((1..=arcs).filter(|a| s >> a & 1 == 0).map(|a| a - 1));
    out
}

fn reindex(names: &[String], ord: &[(String, bool)]) -> Result<Vec<(usize, bool)>> {
    let mut out = vec![(usize::MAX, true); names.len()];
    if ord.len() != names.len() {
        return Err(Error::OrderingMismatch(format!(
            "{} circles against {}",
            ord.len(),
            names.len()
        )));
    }
    for (to, (name, keep)) in ord.iter().enumerate() {
        let from = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::OrderingMismatch(format!("unknown circle {name}")))?;
        if out[from].0 != usize::MAX {
            return Err(Error::OrderingMismatch(format!("circle {name} listed twice")));
        }
        out[from] = (to, *keep);
    }
    Ok(out)
}

fn side_parity(old: &[(String, bool)], new: &[(String, bool)]) -> Result<i8> {
    let names: Vec<String> = old.iter().map(|(n, _)| n.clone()).collect();
    let map = reindex(&names, new)?;
    let permutation: Vec<usize> = map.iter().map(|m| m.0).collect();
    let flips = old.iter().zip(&map).filter(|((_, o), (_, n))| o != n).count();
    Ok(perm::sign(&permutation) * if flips % 2 == 0 { 1 } else { -1 })
}

/// `sign(sigma_alpha) sign(sigma_beta) (-1)^(n_alpha + n_beta)` between two orderings.
pub fn reorder_parity(old: &CircleOrdering, new: &CircleOrdering) -> Result<i8> {
    Ok(side_parity(&old.alpha, &new.alpha)? * side_parity(&old.beta, &new.beta)?)
}

/// Result of gluing a type A diagram to a type D diagram along their common boundary.
#[derive(Clone, Debug)]
pub struct Glued {
    pub closed: Diagram,
    /// `(a, d, closed)` indices into the generator lists of the three diagrams.
    pub pairs: Vec<(usize, usize, usize)>,
    pub a_generators: Vec<Generator>,
    pub d_generators: Vec<Generator>,
    pub closed_generators: Vec<Generator>,
}

fn merged_names(a: &[String], d: &[String]) -> (Vec<String>, Vec<String>) {
    let clash = a.iter().any(|n| d.contains(n));
    let tag = |pre: &str, v: &[String]| -> Vec<String> {
        v.iter()
            .map(|n| if clash { format!("{pre}.{n}") } else { n.clone() })
            .collect()
    };
    (tag("A", a), tag("D", d))
}

/// Glues an alpha-bordered type A diagram to an alpha-bordered type D diagram.
///
/// Arc `i` of one side is welded to arc `i` of the other. The closed diagram orders alpha
/// circles as A-circles, welded arcs, D-circles and beta circles as A's then D's.
pub fn glue(a: &Diagram, d: &Diagram) -> Result<Glued> {
    a.validate()?;
    d.validate()?;
    if a.convention != Convention::TypeA || d.convention != Convention::TypeD {
        return Err(Error::Convention(
            "gluing pairs a type A diagram with a type D diagram".into(),
        ));
    }
    if a.side != Side::Alpha || d.side != Side::Alpha {
        return Err(Error::Inapplicable(
            "gluing is implemented for alpha-bordered diagrams".into(),
        ));
    }
    let (ca, cd) = (a.boundary.as_ref().unwrap(), d.boundary.as_ref().unwrap());
    if ca != cd {
        return Err(Error::Gluing(format!("boundaries differ: {ca} and {cd}")));
    }
    let k2 = ca.arcs();
    let (aa, da) = merged_names(&a.alpha_circles, &d.alpha_circles);
    let (ab, db) = merged_names(&a.beta_circles, &d.beta_circles);
    let a_ids: Vec<String> = a.points.iter().map(|p| p.id.clone()).collect();
    let d_ids: Vec<String> = d.points.iter().map(|p| p.id.clone()).collect();
    let (pa, pd) = merged_names(&a_ids, &d_ids);

    let mut alpha_circles = aa;
    alpha_circles.extend((1..=k2).map(|i| format!("~arc{i}")));
    alpha_circles.extend(da);
    let mut beta_circles = ab;
    beta_circles.extend(db);

    let na = a.alpha_circles.len();
    let nb = a.beta_circles.len();
    let shift_alpha = |c: Curve, d_side: bool| match c {
        Curve::Arc(i) => Curve::Circle(na + i - 1),
        Curve::Circle(j) if d_side => Curve::Circle(na + k2 + j),
        Curve::Circle(j) => Curve::Circle(j),
    };
    let shift_beta = |c: Curve, d_side: bool| match c {
        Curve::Circle(j) if d_side => Curve::Circle(nb + j),
        other => other,
    };
    let mut points = Vec::new();
    for (p, id) in a.points.iter().zip(pa) {
        points.push(Point {
            id,
            alpha: shift_alpha(p.alpha, false),
            beta: shift_beta(p.beta, false),
            sign: p.sign,
        });
    }
    for (p, id) in d.points.iter().zip(pd) {
        points.push(Point {
            id,
            alpha: shift_alpha(p.alpha, true),
            beta: shift_beta(p.beta, true),
            sign: p.sign,
        });
    }

    let a_gens = a.enumerate_generators()?;
    let d_gens = d.enumerate_generators()?;
    let full = (1..=k2).fold(0u64, |m, i| m | 1 << i);
    let offset = a.points.len();
    let mut algebraic = Vec::new();
    let mut generator_names = Vec::new();
    for (i, x) in a_gens.iter().enumerate() {
        for (j, y) in d_gens.iter().enumerate() {
            if x.occupancy & y.occupancy == 0 && x.occupancy | y.occupancy == full {
                let set: BTreeSet<usize> = x
                    .points
                    .iter()
                    .copied()
                    .chain(y.points.iter().map(|&q| q + offset))
                    .collect();
                algebraic.push((i, j, set.clone()));
                let name = format!("{}⊠{}", a.generator_label(x), d.generator_label(y));
                let ids = set.iter().map(|&q| points[q].id.clone()).collect();
                generator_names.push((name, ids));
            }
        }
    }
    let closed = Diagram {
        genus: a.genus + d.genus,
        boundary: None,
        convention: Convention::Closed,
        side: Side::Alpha,
        alpha_circles,
        beta_circles,
        points,
        generator_names,
    };
    let closed_gens = closed.enumerate_generators()?;
    if closed_gens.len() != algebraic.len() {
        return Err(Error::Gluing(format!(
            "generator mismatch: {} glued generators against {} paired ones",
            closed_gens.len(),
            algebraic.len()
        )));
    }
    let by_set: BTreeMap<BTreeSet<usize>, usize> = closed_gens
        .iter()
        .enumerate()
        .map(|(i, g)| (g.points.iter().copied().collect(), i))
        .collect();
    let pairs = algebraic
        .into_iter()
        .map(|(i, j, set)| {
            by_set
                .get(&set)
                .map(|&z| (i, j, z))
                .ok_or_else(|| Error::Gluing("generator mismatch".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Glued {
        closed,
        pairs,
        a_generators: a_gens,
        d_generators: d_gens,
        closed_generators: closed_gens,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(id: &str, alpha: Curve, beta: Curve, sign: i8) -> Point {
        Point {
            id: id.into(),
            alpha,
            beta,
            sign,
        }
    }

    fn closed(genus: usize, points: Vec<Point>) -> Diagram {
        Diagram {
            genus,
            boundary: None,
            convention: Convention::Closed,
            side: Side::Alpha,
            alpha_circles: (0..genus).map(|i| format!("a{i}")).collect(),
            beta_circles: (0..genus).map(|i| format!("b{i}")).collect(),
            points,
            generator_names: vec![],
        }
    }

    #[test]
    fn sphere_and_lens() {
        let s3 = closed(1, vec![pt("x", Curve::Circle(0), Curve::Circle(0), 1)]);
        let r = s3.det_criterion().unwrap();
        assert_eq!((r.det, r.canonical, r.chi), (1, true, 1));
        let lens = closed(
            1,
            (0..5)
                .map(|i| pt(&format!("x{i}"), Curve::Circle(0), Curve::Circle(0), 1))
                .collect(),
        );
        let r = lens.det_criterion().unwrap();
        assert_eq!((r.det, r.h1_order, r.chi), (5, 5, 5));
    }

    #[test]
    fn zero_det_rejected() {
        let d = closed(
            1,
            vec![
                pt("x", Curve::Circle(0), Curve::Circle(0), 1),
                pt("y", Curve::Circle(0), Curve::Circle(0), -1),
            ],
        );
        assert_eq!(d.det_criterion(), Err(Error::NotRationalHomologySphere));
    }

    #[test]
    fn lonely_beta_circle() {
        let d = closed(
            2,
            vec![
                pt("x", Curve::Circle(0), Curve::Circle(0), 1),
                pt("y", Curve::Circle(1), Curve::Circle(0), 1),
            ],
        );
        assert!(d.enumerate_generators().unwrap().is_empty());
    }

    #[test]
    fn parity_of_swaps_and_flips() {
        let d = closed(
            2,
            vec![
                pt("x", Curve::Circle(0), Curve::Circle(0), 1),
                pt("y", Curve::Circle(1), Curve::Circle(1), 1),
                pt("u", Curve::Circle(0), Curve::Circle(1), -1),
                pt("v", Curve::Circle(1), Curve::Circle(0), 1),
            ],
        );
        let old = d.ordering();
        assert_eq!(reorder_parity(&old, &old).unwrap(), 1);
        let mut swap = old.clone();
        swap.beta.swap(0, 1);
        assert_eq!(reorder_parity(&old, &swap).unwrap(), -1);
        let mut flip = old.clone();
        flip.alpha[1].1 = false;
        assert_eq!(reorder_parity(&old, &flip).unwrap(), -1);
        for new in [swap, flip] {
            let e = d.reordered(&new).unwrap();
            let before = d.grade_all().unwrap();
            let after = e.grade_all().unwrap();
            for (b, a) in before.iter().zip(&after) {
                assert_eq!(b.points, a.points);
                assert_eq!(a.s, -b.s);
            }
        }
        let mut bad = old.clone();
        bad.alpha[0].0 = "nope".into();
        assert!(matches!(
            reorder_parity(&old, &bad),
            Err(Error::OrderingMismatch(_))
        ));
    }

    #[test]
    fn sigma_subset_images() {
        assert_eq!(sigma_of_subset(0b1010, 4), vec![0, 2, 1, 3]);
        assert_eq!(perm::sign(&sigma_of_subset(0b1010, 4)), -1);
    }
}
