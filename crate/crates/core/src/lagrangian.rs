//! The order `<*` on `H_1(F(Z))`, Lagrangian tuples, the canonical Lagrangian `l_Z`, and
//! the absolute grading obtained by gluing an `H_Z` diagram.

use crate::azgrading::GradedValue;
use crate::circle::PointedMatchedCircle;
use crate::diagram::{glue, Convention, Curve, Diagram, Side};
use crate::error::{Error, Result};
use crate::linalg::{content, pairing, Matrix};
use crate::IntMatrix;
use rayon::prelude::*;
use std::cmp::Ordering;

pub type Vector = Vec<i64>;

fn norm2(v: &[i64]) -> i64 {
    v.iter().map(|x| x * x).sum()
}

/// Sort key of `<*`: squared length, then the absolute values, then the signed entries.
pub fn vector_key(v: &[i64]) -> (i64, Vec<i64>, Vec<i64>) {
    (norm2(v), v.iter().map(|x| x.abs()).collect(), v.to_vec())
}

pub fn compare_vectors(v: &[i64], w: &[i64]) -> Result<Ordering> {
    if v.len() != w.len() {
        return Err(Error::Dimension(v.len(), w.len()));
    }
    Ok(vector_key(v).cmp(&vector_key(w)))
}

pub fn compare_tuples(l: &[Vector], m: &[Vector]) -> Result<Ordering> {
    if l.len() != m.len() {
        return Err(Error::Dimension(l.len(), m.len()));
    }
    for (v, w) in l.iter().zip(m) {
        match compare_vectors(v, w)? {
            Ordering::Equal => continue,
            other => return Ok(other),
        }
    }
    Ok(Ordering::Equal)
}

/// All vectors of squared length `r` in `Z^dim`, in `<*` order.
pub fn shell(dim: usize, r: i64) -> Vec<Vector> {
    fn go(dim: usize, left: i64, cur: &mut Vector, out: &mut Vec<Vector>) {
        if cur.len() == dim {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut x = 0;
        while x * x <= left {
            for s in if x == 0 { vec![0] } else { vec![x, -x] } {
                cur.push(s);
                go(dim, left - x * x, cur, out);
                cur.pop();
            }
            x += 1;
        }
    }
    let mut out = Vec::new();
    go(dim, r, &mut Vec::with_capacity(dim), &mut out);
    out.sort_by_key(|v| vector_key(v));
    out
}

/// The first `count` vectors of `Z^dim` under `<*`.
pub fn h1_prefix(dim: usize, count: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    let mut r = 0;
    while out.len() < count {
        out.extend(shell(dim, r));
        r += 1;
    }
    out.truncate(count);
    out
}

pub fn format_vector(v: &[i64]) -> String {
    let mut s = String::new();
    for (i, &x) in v.iter().enumerate() {
        if x == 0 {
            continue;
        }
        if x < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if x.abs() != 1 {
            s.push_str(&x.abs().to_string());
        }
        s.push_str(&format!("e{}", i + 1));
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

pub fn format_tuple(l: &[Vector]) -> String {
    let body: Vec<String> = l.iter().map(|v| format_vector(v)).collect();
    format!("({})", body.join(", "))
}

fn isotropic(l: &[Vector], form: &IntMatrix) -> bool {
    l.iter()
        .enumerate()
        .all(|(i, a)| l[i + 1..].iter().all(|b| pairing(form, a, b) == 0))
}

fn rank(l: &[Vector]) -> usize {
    if l.is_empty() {
        0
    } else {
        Matrix::from_rows(l).rank()
    }
}

/// `l` is a basis of a direct summand of `Z^dim`.
pub fn is_summand(l: &[Vector]) -> bool {
    if l.is_empty() {
        return true;
    }
    let s = Matrix::from_rows(l).smith();
    s.rank() == l.len() && s.is_unimodular_divisors()
}

pub fn is_lagrangian(l: &[Vector], form: &IntMatrix) -> bool {
    2 * l.len() == form.rows()
        && l.iter().all(|v| v.len() == form.rows())
        && isotropic(l, form)
        && rank(l) == l.len()
}

pub fn is_embeddable(l: &[Vector], form: &IntMatrix) -> Result<bool> {
    if !is_lagrangian(l, form) {
        return Err(Error::NotLagrangian(format_tuple(l)));
    }
    Ok(is_summand(l))
}

/// Squared length of a primitive vector extending the isotropic summand `p`.
///
/// Builds `f` dual to `p`, makes it isotropic, and projects the standard basis onto the
/// symplectic complement of `p` and `f`.
fn witness_bound(p: &[Vector], form: &IntMatrix) -> i64 {
    let dim = form.rows();
    let j = p.len();
    if j == 0 {
        return 1;
    }
    let a = Matrix::from_rows(p).mul(form);
    let s = a.smith();
    let mut f: Vec<Vector> = (0..j)
        .map(|b| {
            let y: Vec<i64> = (0..dim).map(|i| if i < j { s.left[(i, b)] } else { 0 }).collect();
            (0..dim)
                .map(|r| (0..dim).map(|c| s.right[(r, c)] * y[c]).sum())
                .collect()
        })
        .collect();
    for b in 0..j {
        for a_idx in 0..b {
            let c = pairing(form, &f[a_idx], &f[b]);
            for t in 0..dim {
                f[b][t] += c * p[a_idx][t];
            }
        }
    }
    let mut best: Option<i64> = None;
    for i in 0..dim {
        let mut v = vec![0; dim];
        v[i] = 1;
        let mut w = v.clone();
        for b in 0..j {
            let fv = pairing(form, &f[b], &v);
            let pv = pairing(form, &p[b], &v);
            for t in 0..dim {
                w[t] += fv * p[b][t] - pv * f[b][t];
            }
        }
        let g = content(&w);
        if g != 0 {
            let w: Vector = w.iter().map(|x| x / g).collect();
            let n = norm2(&w);
            best = Some(best.map_or(n, |b| b.min(n)));
        }
    }
    best.expect("complement of a proper isotropic summand is nonzero")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangianSearch {
    pub tuple: Vec<Vector>,
    /// Witness bound on the squared length used at each step.
    pub bounds: Vec<i64>,
}

pub fn canonical_lagrangian(c: &PointedMatchedCircle, norm_cap: u64) -> Result<LagrangianSearch> {
    canonical_lagrangian_for_form(&c.intersection_form(), norm_cap)
}

fn first_in_shell<F>(shell: &[Vector], accept: F) -> Option<Vector>
where
    F: Fn(&Vector) -> bool + Sync,
{
    shell.par_iter().position_first(&accept).map(|i| shell[i].clone())
}

pub fn canonical_lagrangian_for_form(form: &IntMatrix, norm_cap: u64) -> Result<LagrangianSearch> {
    let dim = form.rows();
    if !dim.is_multiple_of(2) || !form.is_skew() || form.det().abs() != 1 {
        return Err(Error::Structural("the form is not unimodular symplectic".into()));
    }
    let k = dim / 2;
    let mut tuple: Vec<Vector> = Vec::new();
    let mut bounds = Vec::new();
    for _ in 0..k {
        let bound = witness_bound(&tuple, form);
        if bound as u64 > norm_cap {
            return Err(Error::NormCap {
                cap: norm_cap,
                required: bound as u64,
            });
        }
        bounds.push(bound);
        let mut found = None;
        for r in 1..=bound {
            let candidates = shell(dim, r);
            found = first_in_shell(&candidates, |v| {
                tuple.iter().all(|p| pairing(form, p, v) == 0) && {
                    let mut ext = tuple.clone();
                    ext.push(v.clone());
                    is_summand(&ext)
                }
            });
            if found.is_some() {
                break;
            }
        }
        let v = found.ok_or_else(|| Error::Structural("witness bound not attained".into()))?;
        tuple.push(v);
    }
    Ok(LagrangianSearch { tuple, bounds })
}

/// The first `count` elements of the set of Lagrangian tuples under `<*_lex`.
///
/// All of them share the least isotropic independent `(k-1)`-prefix, so only the last
/// coordinate is enumerated.
pub fn l_prefix(form: &IntMatrix, count: usize) -> Vec<Vec<Vector>> {
    let dim = form.rows();
    let k = dim / 2;
    let ok = |prefix: &[Vector], v: &Vector| {
        prefix.iter().all(|p| pairing(form, p, v) == 0) && {
            let mut ext = prefix.to_vec();
            ext.push(v.clone());
            rank(&ext) == ext.len()
        }
    };
    let mut prefix: Vec<Vector> = Vec::new();
    while prefix.len() + 1 < k {
        let mut r = 1;
        loop {
            if let Some(v) = shell(dim, r).into_iter().find(|v| ok(&prefix, v)) {
                prefix.push(v);
                break;
            }
            r += 1;
        }
    }
    let mut out = Vec::new();
    let mut r = 1;
    while out.len() < count {
        for v in shell(dim, r) {
            if ok(&prefix, &v) && out.len() < count {
                let mut t = prefix.clone();
                t.push(v);
                out.push(t);
            }
        }
        r += 1;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HzCurve {
    pub name: String,
    pub expected: Vector,
    pub actual: Vector,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HzReport {
    pub lagrangian: Vec<Vector>,
    pub curves: Vec<HzCurve>,
}

impl HzReport {
    pub fn pass(&self) -> bool {
        self.curves.iter().all(|c| c.pass)
    }
}

/// Checks that the beta circles of `d` realize `l_Z` through their pairing with the arcs.
pub fn validate_hz(d: &Diagram, norm_cap: u64) -> Result<HzReport> {
    d.validate()?;
    let c = d
        .boundary
        .as_ref()
        .ok_or_else(|| Error::Structural("H_Z must be bordered".into()))?;
    let k = c.genus();
    if d.convention != Convention::TypeA || d.side != Side::Alpha {
        return Err(Error::Structural(
            "H_Z must be an alpha-bordered type A diagram".into(),
        ));
    }
    if !d.alpha_circles.is_empty() || d.beta_circles.len() != k || d.genus != k {
        return Err(Error::Structural(format!(
            "H_Z needs genus {k}, no alpha circles and {k} beta circles"
        )));
    }
    let form = c.intersection_form();
    let l = canonical_lagrangian_for_form(&form, norm_cap)?.tuple;
    let curves = d
        .beta_circles
        .iter()
        .enumerate()
        .map(|(i, name)| {
            let expected: Vector = (0..2 * k)
                .map(|j| (0..2 * k).map(|a| l[i][a] * form[(a, j)]).sum())
                .collect();
            let mut actual = vec![0; 2 * k];
            for p in &d.points {
                if let (Curve::Arc(a), Curve::Circle(b)) = (p.alpha, p.beta) {
                    if b == i {
                        actual[a - 1] += p.sign as i64;
                    }
                }
            }
            HzCurve {
                name: name.clone(),
                pass: expected == actual,
                expected,
                actual,
            }
        })
        .collect();
    Ok(HzReport {
        lagrangian: l,
        curves,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbsoluteRow {
    pub name: String,
    pub relative: GradedValue,
    pub absolute: GradedValue,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbsoluteGrading {
    pub rows: Vec<AbsoluteRow>,
    pub glued: Vec<AbsoluteRow>,
    pub det: i64,
    pub chi_before: i64,
    pub chi_after: i64,
    pub shifted: bool,
}

/// Absolute grading of a type D diagram, fixed by gluing a validated `H_Z`.
pub fn absolute_grading(d: &Diagram, hz: &Diagram, norm_cap: u64) -> Result<AbsoluteGrading> {
    if d.convention != Convention::TypeD {
        return Err(Error::Convention(
            "absolute grading needs a type D diagram".into(),
        ));
    }
    let report = validate_hz(hz, norm_cap)?;
    if let Some(bad) = report.curves.iter().find(|c| !c.pass) {
        return Err(Error::NotLagrangian(format!(
            "{} pairs with the arcs as {:?}, expected {:?}",
            bad.name, bad.actual, bad.expected
        )));
    }
    let g = glue(hz, d)?;
    let det = g.closed.intersection_matrix()?.det();
    let chi: i64 = g
        .pairs
        .iter()
        .map(|&(i, j, _)| (hz.grade(&g.a_generators[i]).s * d.grade(&g.d_generators[j]).s) as i64)
        .sum();
    if chi == 0 {
        return Err(Error::NotRationalHomologySphere);
    }
    let shifted = chi < 0;
    let shift = GradedValue::from_m(shifted as i64);
    let rows = g
        .d_generators
        .iter()
        .map(|x| {
            let r = d.grade(x);
            AbsoluteRow {
                name: r.name,
                relative: r.m,
                absolute: r.m + shift,
            }
        })
        .collect();
    let glued = g
        .closed_generators
        .iter()
        .map(|x| {
            let r = g.closed.grade(x);
            AbsoluteRow {
                name: r.name,
                relative: r.m,
                absolute: r.m + shift,
            }
        })
        .collect();
    Ok(AbsoluteGrading {
        rows,
        glued,
        det,
        chi_before: chi,
        chi_after: chi.abs(),
        shifted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(dim: usize, i: usize, s: i64) -> Vector {
        let mut v = vec![0; dim];
        v[i - 1] = s;
        v
    }

    #[test]
    fn formatting() {
        assert_eq!(format_vector(&[0, 0, 0, 0]), "0");
        assert_eq!(format_vector(&[0, 0, 0, -1]), "-e4");
        assert_eq!(format_vector(&[0, -1, 1, 0]), "-e2+e3");
        assert_eq!(format_vector(&[2, -3]), "2e1-3e2");
    }

    #[test]
    fn prefix_starts_like_the_list() {
        let got: Vec<String> = h1_prefix(4, 5).iter().map(|v| format_vector(v)).collect();
        assert_eq!(got, ["0", "-e4", "e4", "-e3", "e3"]);
    }

    #[test]
    fn split_genus_one() {
        let c = PointedMatchedCircle::split(1);
        let l = canonical_lagrangian(&c, 100).unwrap().tuple;
        assert_eq!(l, vec![e(2, 2, -1)]);
    }

    #[test]
    fn doubled_is_not_embeddable() {
        let form = PointedMatchedCircle::antipodal(2).intersection_form();
        let l = vec![e(4, 4, -1), vec![0, -1, 1, 0]];
        assert!(is_embeddable(&l, &form).unwrap());
        let doubled: Vec<Vector> = l.iter().map(|v| v.iter().map(|x| 2 * x).collect()).collect();
        assert!(!is_embeddable(&doubled, &form).unwrap());
        let same = vec![l[0].clone(), l[0].clone()];
        assert!(!is_lagrangian(&same, &form));
        assert!(is_embeddable(&same, &form).is_err());
    }

    #[test]
    fn cap_reports_requirement() {
        let c = PointedMatchedCircle::antipodal(2);
        match canonical_lagrangian(&c, 1) {
            Err(Error::NormCap { cap: 1, required }) => assert!(required > 1),
            other => panic!("unexpected {other:?}"),
        }
    }
}
