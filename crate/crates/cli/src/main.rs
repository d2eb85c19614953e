use anyhow::{anyhow, bail, Context, Result};
use bfz2::azgrading::grade_zgen;
use bfz2::circle::validate_circle;
use bfz2::diagram::glue;
use bfz2::index::{embedded_index, embedded_index_rational, ChordTerm};
use bfz2::io::{
    load_ainf, load_circle, load_diagram, load_domain, load_module, load_type_d, CircleFile, Module,
};
use bfz2::lagrangian::{
    absolute_grading, canonical_lagrangian, format_tuple, format_vector, h1_prefix, l_prefix,
};
use bfz2::modules::{box_tensor, pairing_grading_check, ModuleReport};
use bfz2::perm::one_line;
use bfz2::strands::{enumerate_zgens, mask_items};
use bfz2::verify::{all_circles, run_suite, VerifyConfig, SUITES};
use bfz2::PointedMatchedCircle;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const THREADS_VAR: &str = "BFZ2_THREADS";

#[derive(Parser)]
#[command(
    name = "bfz2",
    version,
    about = "Z/2 gradings for bordered Heegaard Floer data"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check a matching and count the circles after surgery.
    ValidateCircle { circle: PathBuf },
    /// Basis of A(Z), optionally restricted to one strand count.
    AlgebraTable {
        circle: PathBuf,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Basis of A(Z) with the AZ grading.
    GradeAlgebra { circle: PathBuf },
    /// Generator table of a diagram: o(g), the permutations, signs and s(g).
    GradeDiagram { diagram: PathBuf },
    /// The canonical Lagrangian l_Z and the ordered prefixes.
    CanonicalLagrangian {
        circle: PathBuf,
        #[arg(long, default_value_t = 1000)]
        norm_cap: u64,
        #[arg(long, default_value_t = 21)]
        prefix: usize,
        #[arg(long, default_value_t = 2)]
        tuples: usize,
    },
    /// Absolute grading of a type D diagram through a diagram realizing l_Z.
    AbsoluteGrade {
        diagram: PathBuf,
        #[arg(long)]
        hz: PathBuf,
        #[arg(long, default_value_t = 1000)]
        norm_cap: u64,
    },
    /// Structure equation, A-infinity relations and grading rules of a module file.
    ValidateModule { module: PathBuf },
    /// The box tensor product of an A-infinity module and a type D structure.
    Box { module: PathBuf, structure: PathBuf },
    /// Compare box tensor gradings with the glued diagram.
    Pair {
        module: PathBuf,
        structure: PathBuf,
        a_diagram: PathBuf,
        d_diagram: PathBuf,
    },
    /// Embedded index of a domain.
    Index { domain: PathBuf },
    /// Run property suites.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        circle: Option<PathBuf>,
        /// Restrict to the law suites (algebra, az).
        #[arg(long)]
        laws: bool,
        #[arg(long, default_value_t = 2)]
        genus: usize,
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Output of one command: text lines, a JSON value, and whether it passed.
struct Out {
    text: String,
    json: Value,
    ok: bool,
}

impl Out {
    fn ok(text: String, json: Value) -> Self {
        Out { text, json, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(n) = std::env::var(THREADS_VAR) {
        match n.parse::<usize>() {
            Ok(n) => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            Err(_) => {
                eprintln!("error: {THREADS_VAR} must be a thread count, got {n:?}");
                return ExitCode::from(2);
            }
        }
    }
    match run(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json")),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            match cli.format {
                Format::Text => eprintln!("error: {e:#}"),
                Format::Json => println!("{}", json!({ "error": format!("{e:#}") })),
            }
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<Out> {
    match cmd {
        Command::ValidateCircle { circle } => validate_circle_cmd(&circle),
        Command::AlgebraTable { circle, strands } => algebra_table(&circle, strands, false),
        Command::GradeAlgebra { circle } => algebra_table(&circle, None, true),
        Command::GradeDiagram { diagram } => grade_diagram(&diagram),
        Command::CanonicalLagrangian {
            circle,
            norm_cap,
            prefix,
            tuples,
        } => lagrangian(&circle, norm_cap, prefix, tuples),
        Command::AbsoluteGrade {
            diagram,
            hz,
            norm_cap,
        } => absolute(&diagram, &hz, norm_cap),
        Command::ValidateModule { module } => validate_module(&module),
        Command::Box { module, structure } => box_cmd(&module, &structure),
        Command::Pair {
            module,
            structure,
            a_diagram,
            d_diagram,
        } => pair(&module, &structure, &a_diagram, &d_diagram),
        Command::Index { domain } => index(&domain),
        Command::Verify {
            suite,
            circle,
            laws,
            genus,
            exhaustive,
            samples,
            seed,
        } => verify(&suite, circle.as_deref(), laws, genus, exhaustive, samples, seed),
    }
}

fn validate_circle_cmd(path: &Path) -> Result<Out> {
    let text = std::fs::read_to_string(path).with_context(|| path.display().to_string())?;
    let file: CircleFile =
        serde_json::from_str(&text).with_context(|| format!("{}: circle", path.display()))?;
    let m: Vec<_> = file.matching.iter().map(|p| (p[0], p[1])).collect();
    let report = validate_circle(file.genus, &m)?;
    let ok = report.surgery_circles == 1;
    let text = format!(
        "genus {}\nsurgery circles {}\n{}\n",
        file.genus,
        report.surgery_circles,
        if ok {
            "valid"
        } else {
            "invalid: surgery does not give one circle"
        }
    );
    Ok(Out {
        text,
        json: json!({ "genus": file.genus, "surgery_circles": report.surgery_circles, "valid": ok }),
        ok,
    })
}

fn algebra_table(path: &Path, strands: Option<usize>, graded: bool) -> Result<Out> {
    let c = load_circle(path)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for g in enumerate_zgens(&c) {
        if strands.is_some_and(|k| g.strand_count() != k) {
            continue;
        }
        let left = mask_items(g.left_idempotent(&c));
        let right = mask_items(g.right_idempotent(&c));
        let m = grade_zgen(&c, &g);
        if graded {
            text += &format!("{g}\t{left:?} -> {right:?}\tm = {m}\n");
        } else {
            text += &format!("{g}\t{left:?} -> {right:?}\n");
        }
        rows.push(json!({
            "generator": g.to_string(),
            "strands": g.strand_count(),
            "left": left,
            "right": right,
            "m": m.m,
        }));
    }
    text += &format!("{} generators\n", rows.len());
    Ok(Out::ok(text, json!({ "circle": c.to_string(), "basis": rows })))
}

fn grade_diagram(path: &Path) -> Result<Out> {
    let d = load_diagram(path)?;
    let rows = d.grade_all()?;
    let mut text = String::from("gen\to(g)\tsigma_o(g)\tsigma_g\tsign(sigma_o)\tsign(sigma_g)\tlocal\ts\n");
    let mut out = Vec::new();
    for r in &rows {
        let so = r.sigma_o.as_ref().map_or("-".to_string(), |s| one_line(s));
        let local: i8 = r.local.iter().product();
        text += &format!(
            "{}\t{:?}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.name,
            r.occupancy,
            so,
            one_line(&r.sigma_x),
            r.sign_sigma_o,
            r.sign_sigma_x,
            local,
            r.s
        );
        out.push(json!({
            "name": r.name,
            "points": r.points,
            "occupancy": r.occupancy,
            "sigma_o": r.sigma_o.as_ref().map(|s| one_line(s)),
            "sigma_x": one_line(&r.sigma_x),
            "sign_sigma_o": r.sign_sigma_o,
            "sign_sigma_x": r.sign_sigma_x,
            "local": r.local,
            "s": r.s,
            "m": r.m.m,
        }));
    }
    let mut doc = json!({ "generators": out });
    if d.is_closed() {
        match d.det_criterion() {
            Ok(det) => {
                text += &format!("det {}  chi {}  |H1| {}\n", det.det, det.chi, det.h1_order);
                doc["det"] = json!(det.det);
                doc["chi"] = json!(det.chi);
            }
            Err(e) => text += &format!("{e}\n"),
        }
    }
    Ok(Out::ok(text, doc))
}

fn lagrangian(path: &Path, cap: u64, prefix: usize, tuples: usize) -> Result<Out> {
    let c = load_circle(path)?;
    let l = canonical_lagrangian(&c, cap)?;
    let h1: Vec<String> = h1_prefix(2 * c.genus(), prefix)
        .iter()
        .map(|v| format_vector(v))
        .collect();
    let lp: Vec<String> = l_prefix(&c.intersection_form(), tuples)
        .iter()
        .map(|t| format_tuple(t))
        .collect();
    let text = format!(
        "l_Z = {}\nH1 prefix: {}\nL prefix: {}\n",
        format_tuple(&l.tuple),
        h1.join(", "),
        lp.join(", ")
    );
    Ok(Out::ok(
        text,
        json!({ "l_z": l.tuple, "formatted": format_tuple(&l.tuple), "h1_prefix": h1, "l_prefix": lp }),
    ))
}

fn absolute(path: &Path, hz: &Path, cap: u64) -> Result<Out> {
    let d = load_diagram(path)?;
    let h = load_diagram(hz)?;
    let g = absolute_grading(&d, &h, cap)?;
    let mut text = String::from("gen\trelative\tabsolute\n");
    for r in &g.rows {
        text += &format!("{}\t{}\t{}\n", r.name, r.relative, r.absolute);
    }
    text += &format!(
        "glued chi {} -> {} (det {}){}\n",
        g.chi_before,
        g.chi_after,
        g.det,
        if g.shifted { ", shifted by 1" } else { "" }
    );
    let rows: Vec<Value> = g
        .rows
        .iter()
        .map(|r| json!({ "name": r.name, "relative": r.relative.m, "absolute": r.absolute.m }))
        .collect();
    Ok(Out::ok(
        text,
        json!({ "rows": rows, "chi_before": g.chi_before, "chi_after": g.chi_after, "det": g.det, "shifted": g.shifted }),
    ))
}

fn module_report(report: &ModuleReport) -> Out {
    let mut text = String::new();
    for v in &report.violations {
        text += &format!("violation: {v}\n");
    }
    text += if report.is_valid() { "valid\n" } else { "invalid\n" };
    Out {
        text,
        json: json!({ "valid": report.is_valid(), "violations": report.violations }),
        ok: report.is_valid(),
    }
}

fn validate_module(path: &Path) -> Result<Out> {
    Ok(match load_module(path)? {
        Module::TypeD(d) => {
            let mut out = module_report(&d.validate());
            if let Ok(n) = d.nilpotency(bfz2::modules::DELTA_DEPTH) {
                out.text = format!("type D, {} generators, delta^{n} = 0\n{}", d.gens.len(), out.text);
            }
            out
        }
        Module::AInfinity(m) => {
            let mut out = module_report(&m.validate());
            out.text = format!(
                "A-infinity, {} generators, {}\n{}",
                m.gens.len(),
                if m.bounded { "bounded" } else { "unbounded" },
                out.text
            );
            out
        }
    })
}

fn box_cmd(module: &Path, structure: &Path) -> Result<Out> {
    let m = load_ainf(module)?;
    let d = load_type_d(structure)?;
    let cx = box_tensor(&m, &d)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for (k, name) in cx.names.iter().enumerate() {
        let targets: Vec<&str> = cx.differential[k].iter().map(|&t| cx.names[t].as_str()).collect();
        let m = cx.grading[k].map_or("-".to_string(), |g| g.to_string());
        text += &format!(
            "{name}\tm = {m}\t∂ = {}\n",
            if targets.is_empty() {
                "0".to_string()
            } else {
                targets.join(" + ")
            }
        );
        rows.push(json!({ "name": name, "m": cx.grading[k].map(|g| g.m), "differential": targets }));
    }
    let d2 = cx.d_squared_zero();
    let violations = cx.grading_violations();
    text += &format!("∂² = 0: {d2}\n");
    for v in &violations {
        text += &format!("violation: {v}\n");
    }
    if let Some(chi) = cx.euler_characteristic() {
        text += &format!("chi = {chi}\n");
    }
    Ok(Out {
        text,
        json: json!({ "generators": rows, "d_squared_zero": d2, "violations": violations, "chi": cx.euler_characteristic() }),
        ok: d2 && violations.is_empty(),
    })
}

fn pair(module: &Path, structure: &Path, a: &Path, d: &Path) -> Result<Out> {
    let m = load_ainf(module)?;
    let s = load_type_d(structure)?;
    let g = glue(&load_diagram(a)?, &load_diagram(d)?)?;
    let report = pairing_grading_check(&m, &s, &g.closed)?;
    let mut text = String::from("gen\talgebraic\tdiagram\n");
    for r in &report.rows {
        text += &format!("{}\t{}\t{}\n", r.name, r.algebraic, r.diagrammatic);
    }
    text += &match report.offset {
        Some(o) => format!("constant offset {o}\n"),
        None => "offset is not constant\n".to_string(),
    };
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|r| json!({ "name": r.name, "algebraic": r.algebraic.m, "diagram": r.diagrammatic.m }))
        .collect();
    Ok(Out {
        text,
        json: json!({ "rows": rows, "offset": report.offset.map(|o| o.m) }),
        ok: report.offset.is_some(),
    })
}

fn index(path: &Path) -> Result<Out> {
    let ld = load_domain(path)?;
    let b = &ld.domain.multiplicities;
    let e = ld.complex.euler_measure(b);
    let nx = ld.complex.point_measure(b, &ld.domain.x);
    let ny = ld.complex.point_measure(b, &ld.domain.y);
    let raw = embedded_index_rational(&ld.complex, &ld.domain, &ld.chords);
    let chords = match &ld.chords {
        ChordTerm::Provincial => "none".to_string(),
        ChordTerm::Sequence(s) => s.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "),
        ChordTerm::Sets(s) => s
            .iter()
            .map(|set| {
                format!(
                    "{{{}}}",
                    set.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
                )
            })
            .collect::<Vec<_>>()
            .join(" "),
    };
    let ind = embedded_index(&ld.complex, &ld.domain, &ld.chords)?;
    let text = format!("e = {e}\nn_x = {nx}\nn_y = {ny}\nchords: {chords}\nind = {ind}\n");
    Ok(Out::ok(
        text,
        json!({ "euler": e.to_string(), "n_x": nx.to_string(), "n_y": ny.to_string(), "index": ind, "raw": raw.to_string() }),
    ))
}

fn verify(
    suite: &str,
    circle: Option<&Path>,
    laws: bool,
    genus: usize,
    exhaustive: bool,
    samples: usize,
    seed: u64,
) -> Result<Out> {
    if !SUITES.contains(&suite) {
        bail!("unknown suite {suite}; expected one of {}", SUITES.join(", "));
    }
    if laws && !matches!(suite, "algebra" | "az") {
        bail!("--laws takes the suite algebra or az");
    }
    let circles: Vec<PointedMatchedCircle> = match circle {
        Some(p) => vec![load_circle(p)?],
        None if genus == 0 => bail!("--genus must be positive"),
        None if genus == 1 => all_circles(1),
        None => vec![
            PointedMatchedCircle::antipodal(genus),
            PointedMatchedCircle::split(genus),
        ],
    };
    let cfg = VerifyConfig {
        exhaustive,
        samples,
        seed,
    };
    let reports = run_suite(suite, &circles, &cfg).ok_or_else(|| anyhow!("unknown suite {suite}"))?;
    let ok = reports.iter().all(|r| r.passed());
    let mut text = format!("seed {seed}\n");
    for r in &reports {
        text += &format!("{r}\n");
    }
    text += if ok { "all suites pass\n" } else { "FAILED\n" };
    Ok(Out {
        text,
        json: json!({ "seed": seed, "passed": ok, "suites": reports }),
        ok,
    })
}
