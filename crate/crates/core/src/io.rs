//! JSON file formats for circles, diagrams, modules and domains.

use crate::azgrading::GradedValue;
use crate::circle::{PointedMatchedCircle, ReebChord};
use crate::diagram::{Convention, Curve, Diagram, Point, Side};
use crate::error::{Error, Result};
use crate::index::{
    az_multiplication_domain, AzComplex, ChordTerm, CornerPoint, Domain, Region, RegionComplex,
};
use crate::modules::{AInfModule, ModGen, TypeDStructure};
use crate::strands::mask_of;
use crate::Rational;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircleFile {
    pub genus: usize,
    pub matching: Vec<[usize; 2]>,
}

impl CircleFile {
    pub fn build(&self) -> Result<PointedMatchedCircle> {
        let m: Vec<_> = self.matching.iter().map(|p| (p[0], p[1])).collect();
        PointedMatchedCircle::new(self.genus, &m)
    }

    pub fn from_circle(c: &PointedMatchedCircle) -> Self {
        CircleFile {
            genus: c.genus(),
            matching: c.pairs().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CircleRef {
    Inline(CircleFile),
    Path(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CurveRef {
    Arc(usize),
    Circle(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointFile {
    pub id: String,
    pub alpha: CurveRef,
    pub beta: CurveRef,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedGenerator {
    pub name: String,
    pub points: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ConventionTag {
    TypeD,
    TypeA,
    Closed,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideTag {
    #[default]
    Alpha,
    Beta,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramFile {
    pub genus: usize,
    /// A circle file path, an inline circle, or the string `closed`.
    pub boundary: CircleRef,
    pub convention: ConventionTag,
    #[serde(default)]
    pub side: SideTag,
    pub alpha_circles: Vec<String>,
    pub beta_circles: Vec<String>,
    pub points: Vec<PointFile>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generator_names: Vec<NamedGenerator>,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Schema(format!("{}: {e}", path.display())))
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Schema(format!("{what}: {e}")))
}

pub fn parse_circle(text: &str) -> Result<PointedMatchedCircle> {
    parse::<CircleFile>(text, "circle")?.build()
}

pub fn load_circle(path: &Path) -> Result<PointedMatchedCircle> {
    parse::<CircleFile>(&read(path)?, &path.display().to_string())?.build()
}

fn resolve_circle(r: &CircleRef, base: &Path) -> Result<Option<PointedMatchedCircle>> {
    match r {
        CircleRef::Inline(c) => c.build().map(Some),
        CircleRef::Path(p) if p == "closed" => Ok(None),
        CircleRef::Path(p) => load_circle(&base.join(p)).map(Some),
    }
}

fn resolve_curve(r: &CurveRef, names: &[String], id: &str, colour: &str) -> Result<Curve> {
    match r {
        CurveRef::Arc(i) => Ok(Curve::Arc(*i)),
        CurveRef::Circle(n) => names
            .iter()
            .position(|m| m == n)
            .map(Curve::Circle)
            .ok_or_else(|| Error::Schema(format!("points[{id}].{colour}: unknown circle {n}"))),
    }
}

impl DiagramFile {
    pub fn build(&self, base: &Path) -> Result<Diagram> {
        let boundary = resolve_circle(&self.boundary, base)?;
        let convention = match self.convention {
            ConventionTag::TypeD => Convention::TypeD,
            ConventionTag::TypeA => Convention::TypeA,
            ConventionTag::Closed => Convention::Closed,
        };
        let side = match self.side {
            SideTag::Alpha => Side::Alpha,
            SideTag::Beta => Side::Beta,
        };
        let points = self
            .points
            .iter()
            .map(|p| {
                Ok(Point {
                    id: p.id.clone(),
                    alpha: resolve_curve(&p.alpha, &self.alpha_circles, &p.id, "alpha")?,
                    beta: resolve_curve(&p.beta, &self.beta_circles, &p.id, "beta")?,
                    sign: p.sign,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let d = Diagram {
            genus: self.genus,
            boundary,
            convention,
            side,
            alpha_circles: self.alpha_circles.clone(),
            beta_circles: self.beta_circles.clone(),
            points,
            generator_names: self
                .generator_names
                .iter()
                .map(|g| (g.name.clone(), g.points.clone()))
                .collect(),
        };
        d.validate()?;
        Ok(d)
    }

    pub fn from_diagram(d: &Diagram) -> Self {
        let curve = |c: Curve, names: &[String]| match c {
            Curve::Arc(i) => CurveRef::Arc(i),
            Curve::Circle(j) => CurveRef::Circle(names[j].clone()),
        };
        DiagramFile {
            genus: d.genus,
            boundary: match &d.boundary {
                Some(c) => CircleRef::Inline(CircleFile::from_circle(c)),
                None => CircleRef::Path("closed".into()),
            },
            convention: match d.convention {
                Convention::TypeD => ConventionTag::TypeD,
                Convention::TypeA => ConventionTag::TypeA,
                Convention::Closed => ConventionTag::Closed,
            },
            side: match d.side {
                Side::Alpha => SideTag::Alpha,
                Side::Beta => SideTag::Beta,
            },
            alpha_circles: d.alpha_circles.clone(),
            beta_circles: d.beta_circles.clone(),
            points: d
                .points
                .iter()
                .map(|p| PointFile {
                    id: p.id.clone(),
                    alpha: curve(p.alpha, &d.alpha_circles),
                    beta: curve(p.beta, &d.beta_circles),
                    sign: p.sign,
                })
                .collect(),
            generator_names: d
                .generator_names
                .iter()
                .map(|(name, points)| NamedGenerator {
                    name: name.clone(),
                    points: points.clone(),
                })
                .collect(),
        }
    }
}

fn base_of(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

pub fn parse_diagram(text: &str, base: &Path) -> Result<Diagram> {
    parse::<DiagramFile>(text, "diagram")?.build(base)
}

pub fn load_diagram(path: &Path) -> Result<Diagram> {
    parse::<DiagramFile>(&read(path)?, &path.display().to_string())?.build(&base_of(path))
}

pub fn diagram_to_json(d: &Diagram) -> String {
    serde_json::to_string_pretty(&DiagramFile::from_diagram(d)).expect("serializable")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModGenFile {
    pub id: String,
    pub idempotent: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeltaTermFile {
    pub from: String,
    pub to: String,
    pub chords: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpTermFile {
    pub from: String,
    pub inputs: Vec<Vec<[usize; 2]>>,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase", deny_unknown_fields)]
pub enum ModuleFile {
    TypeD {
        circle: CircleRef,
        generators: Vec<ModGenFile>,
        #[serde(default)]
        delta: Vec<DeltaTermFile>,
    },
    AInfinity {
        circle: CircleRef,
        generators: Vec<ModGenFile>,
        bounded: bool,
        #[serde(default)]
        m_ops: Vec<OpTermFile>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Module {
    TypeD(TypeDStructure),
    AInfinity(AInfModule),
}

fn chords(raw: &[[usize; 2]]) -> Vec<ReebChord> {
    raw.iter().map(|c| ReebChord::new(c[0], c[1])).collect()
}

fn mod_gens(raw: &[ModGenFile], c: &PointedMatchedCircle) -> Result<Vec<ModGen>> {
    raw.iter()
        .enumerate()
        .map(|(i, g)| {
            if let Some(&a) = g.idempotent.iter().find(|&&a| a == 0 || a > c.arcs()) {
                return Err(Error::Schema(format!("generators[{i}].idempotent: no arc {a}")));
            }
            if g.grading.is_some_and(|m| m > 1) {
                return Err(Error::Schema(format!("generators[{i}].grading must be 0 or 1")));
            }
            Ok(ModGen {
                name: g.id.clone(),
                idempotent: mask_of(g.idempotent.iter().copied()),
                grading: g.grading.map(|m| GradedValue { m }),
            })
        })
        .collect()
}

impl ModuleFile {
    pub fn build(&self, base: &Path) -> Result<Module> {
        match self {
            ModuleFile::TypeD {
                circle,
                generators,
                delta,
            } => {
                let c = resolve_circle(circle, base)?
                    .ok_or_else(|| Error::Schema("circle: a module needs a boundary".into()))?;
                let gens = mod_gens(generators, &c)?;
                let mut d = TypeDStructure::new(c, gens);
                for (i, t) in delta.iter().enumerate() {
                    let from = d.index_of(&t.from)?;
                    let to = d.index_of(&t.to)?;
                    d.add_delta_chords(from, &chords(&t.chords), to)
                        .map_err(|e| Error::Schema(format!("delta[{i}]: {e}")))?;
                }
                Ok(Module::TypeD(d))
            }
            ModuleFile::AInfinity {
                circle,
                generators,
                bounded,
                m_ops,
            } => {
                let c = resolve_circle(circle, base)?
                    .ok_or_else(|| Error::Schema("circle: a module needs a boundary".into()))?;
                let gens = mod_gens(generators, &c)?;
                let mut m = AInfModule::new(c, gens, *bounded);
                for (i, t) in m_ops.iter().enumerate() {
                    let from = m.index_of(&t.from)?;
                    let to = m.index_of(&t.to)?;
                    let inputs: Vec<Vec<ReebChord>> = t.inputs.iter().map(|r| chords(r)).collect();
                    m.add_op_chords(from, &inputs, to)
                        .map_err(|e| Error::Schema(format!("m_ops[{i}]: {e}")))?;
                }
                Ok(Module::AInfinity(m))
            }
        }
    }
}

pub fn load_module(path: &Path) -> Result<Module> {
    parse::<ModuleFile>(&read(path)?, &path.display().to_string())?.build(&base_of(path))
}

pub fn load_type_d(path: &Path) -> Result<TypeDStructure> {
    match load_module(path)? {
        Module::TypeD(d) => Ok(d),
        Module::AInfinity(_) => Err(Error::Schema(format!("{}: expected kind typeD", path.display()))),
    }
}

pub fn load_ainf(path: &Path) -> Result<AInfModule> {
    match load_module(path)? {
        Module::AInfinity(m) => Ok(m),
        Module::TypeD(_) => Err(Error::Schema(format!(
            "{}: expected kind aInfinity",
            path.display()
        ))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EulerValue {
    Int(i64),
    /// `"p/q"` or `"p"`.
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionFile {
    pub name: String,
    pub euler: EulerValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CornerPointFile {
    pub name: String,
    pub corners: [Option<String>; 4],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum ChordsFile {
    Sequence(Vec<[usize; 2]>),
    Sets(Vec<Vec<[usize; 2]>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase", deny_unknown_fields)]
pub enum DomainFile {
    Explicit {
        regions: Vec<RegionFile>,
        points: Vec<CornerPointFile>,
        multiplicities: BTreeMap<String, i64>,
        x: Vec<String>,
        y: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        chords: Option<ChordsFile>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        circle: Option<CircleRef>,
    },
    /// The multiplication domain of `I(s) a(rho)` in the AZ diagram of `circle`.
    Az {
        circle: CircleRef,
        idempotent: Vec<usize>,
        chords: Vec<[usize; 2]>,
    },
}

/// A domain in a region complex, with the chords it meets at the boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoadedDomain {
    pub complex: RegionComplex,
    pub domain: Domain,
    pub chords: ChordTerm,
}

fn parse_euler(v: &EulerValue, i: usize) -> Result<Rational> {
    let bad = || Error::Schema(format!("regions[{i}].euler: expected an integer or p/q"));
    match v {
        EulerValue::Int(n) => Ok(Rational::from_integer(*n)),
        EulerValue::Text(t) => match t.split_once('/') {
            Some((p, q)) => {
                let (p, q): (i64, i64) = (
                    p.trim().parse().map_err(|_| bad())?,
                    q.trim().parse().map_err(|_| bad())?,
                );
                if q == 0 {
                    return Err(bad());
                }
                Ok(Rational::new(p, q))
            }
            None => t.trim().parse().map(Rational::from_integer).map_err(|_| bad()),
        },
    }
}

fn check_chords(c: Option<&PointedMatchedCircle>, rho: &[ReebChord], field: &str) -> Result<()> {
    for &r in rho {
        if r.start == 0 || r.start >= r.end {
            return Err(Error::Schema(format!("{field}: {r} is not a chord")));
        }
        if let Some(c) = c {
            c.check_chord(r)
                .map_err(|e| Error::Schema(format!("{field}: {e}")))?;
        }
    }
    Ok(())
}

impl DomainFile {
    pub fn build(&self, base: &Path) -> Result<LoadedDomain> {
        match self {
            DomainFile::Explicit {
                regions,
                points,
                multiplicities,
                x,
                y,
                chords: ch,
                circle,
            } => {
                let circle = match circle {
                    Some(r) => resolve_circle(r, base)?,
                    None => None,
                };
                let mut complex = RegionComplex::default();
                for (i, r) in regions.iter().enumerate() {
                    complex.regions.push(Region {
                        name: r.name.clone(),
                        euler: parse_euler(&r.euler, i)?,
                    });
                }
                for (i, p) in points.iter().enumerate() {
                    let mut corners = [None; 4];
                    for (k, c) in p.corners.iter().enumerate() {
                        if let Some(name) = c {
                            corners[k] = Some(complex.region(name).ok_or_else(|| {
                                Error::Schema(format!("points[{i}].corners[{k}]: unknown region {name}"))
                            })?);
                        }
                    }
                    complex.points.push(CornerPoint {
                        name: p.name.clone(),
                        corners,
                    });
                }
                let mut domain = Domain::zero(complex.regions.len());
                for (name, &m) in multiplicities {
                    let i = complex
                        .region(name)
                        .ok_or_else(|| Error::Schema(format!("multiplicities: unknown region {name}")))?;
                    domain.multiplicities[i] = m;
                }
                let lookup = |names: &[String], field: &str| -> Result<Vec<usize>> {
                    names
                        .iter()
                        .map(|n| {
                            complex
                                .point(n)
                                .ok_or_else(|| Error::Schema(format!("{field}: unknown point {n}")))
                        })
                        .collect()
                };
                domain.x = lookup(x, "x")?;
                domain.y = lookup(y, "y")?;
                let chords = match ch {
                    None => ChordTerm::Provincial,
                    Some(ChordsFile::Sequence(s)) => {
                        let s = chords(s);
                        check_chords(circle.as_ref(), &s, "chords.sequence")?;
                        ChordTerm::Sequence(s)
                    }
                    Some(ChordsFile::Sets(sets)) => {
                        let sets: Vec<Vec<ReebChord>> = sets.iter().map(|s| chords(s)).collect();
                        for s in &sets {
                            check_chords(circle.as_ref(), s, "chords.sets")?;
                        }
                        ChordTerm::Sets(sets)
                    }
                };
                Ok(LoadedDomain {
                    complex,
                    domain,
                    chords,
                })
            }
            DomainFile::Az {
                circle,
                idempotent,
                chords: ch,
            } => {
                let c = resolve_circle(circle, base)?
                    .ok_or_else(|| Error::Schema("circle: an AZ domain needs a boundary".into()))?;
                if let Some(&a) = idempotent.iter().find(|&&a| a == 0 || a > c.arcs()) {
                    return Err(Error::Schema(format!("idempotent: no arc {a}")));
                }
                let rho = chords(ch);
                check_chords(Some(&c), &rho, "chords")?;
                let az = AzComplex::new(&c);
                let domain = az_multiplication_domain(&c, &az, mask_of(idempotent.iter().copied()), &rho)?;
                Ok(LoadedDomain {
                    complex: az.complex,
                    domain,
                    chords: ChordTerm::Sets(vec![rho]),
                })
            }
        }
    }
}

pub fn load_domain(path: &Path) -> Result<LoadedDomain> {
    parse::<DomainFile>(&read(path)?, &path.display().to_string())?.build(&base_of(path))
}

/// Directory of the bundled data files.
pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}
