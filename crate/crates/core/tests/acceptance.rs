//! One line per acceptance criterion; exits nonzero if any fails. All comparisons are exact.

use bfz2::diagram::glue;
use bfz2::io::{data_dir, load_diagram};
use bfz2::lagrangian::{
    absolute_grading, canonical_lagrangian, format_tuple, format_vector, h1_prefix, l_prefix,
};
use bfz2::perm::one_line;
use bfz2::verify::{
    algebra_laws, all_circles, az_laws, determinant_suite, hz_independence, index_suite, reordering_suite,
    SuiteReport, VerifyConfig, H1_PREFIX,
};
use bfz2::PointedMatchedCircle;
use std::time::{Duration, Instant};

const SEED: u64 = 0;
const CAP: u64 = 1000;

type Criterion = (&'static str, Duration, Box<dyn Fn() -> Line>);

struct Line {
    ok: bool,
    detail: String,
}

fn line(ok: bool, detail: impl Into<String>) -> Line {
    Line {
        ok,
        detail: detail.into(),
    }
}

fn from_suites(reports: &[SuiteReport]) -> Line {
    let checks: u64 = reports.iter().map(|r| r.checks).sum();
    let failures: u64 = reports.iter().map(|r| r.failures).sum();
    let mut detail = format!("{checks} checks, {failures} violations");
    if let Some(v) = reports.iter().flat_map(|r| r.violations.first()).next() {
        detail += &format!("; first: {v}");
    }
    line(failures == 0, detail)
}

fn figure2() -> Line {
    let d = load_diagram(&data_dir().join("figure2.json")).unwrap();
    let rows = d.grade_all().unwrap();
    let got: Vec<(String, Vec<usize>, i8, i8, i8, i8)> = rows
        .iter()
        .map(|r| {
            (
                r.name.clone(),
                r.occupancy.clone(),
                r.sign_sigma_o,
                r.sign_sigma_x,
                r.local.iter().product(),
                r.s,
            )
        })
        .collect();
    let want = vec![
        ("x".to_string(), vec![1, 3], -1, 1, -1, 1),
        ("y".to_string(), vec![1, 4], 1, -1, 1, -1),
        ("z".to_string(), vec![2, 3], 1, -1, 1, -1),
        ("w".to_string(), vec![2, 4], -1, 1, -1, 1),
    ];
    let so: Vec<String> = rows
        .iter()
        .map(|r| one_line(r.sigma_o.as_ref().unwrap()))
        .collect();
    let ok = got == want && so == ["(1 3 2 4)", "(1 4 2 3)", "(2 3 1 4)", "(2 4 1 3)"];
    let s: Vec<i8> = rows.iter().map(|r| r.s).collect();
    line(ok, format!("s = {s:?}"))
}

fn hz() -> Line {
    let d = load_diagram(&data_dir().join("hz_antipodal.json")).unwrap();
    let rows = d.grade_all().unwrap();
    let got: Vec<(&str, i8)> = rows.iter().map(|r| (r.name.as_str(), r.s)).collect();
    line(
        got == [("a", -1), ("b", -1), ("c", -1), ("d", 1)],
        format!("{got:?}"),
    )
}

fn pairing() -> Line {
    let a = load_diagram(&data_dir().join("hz_antipodal.json")).unwrap();
    let d = load_diagram(&data_dir().join("figure2.json")).unwrap();
    let g = glue(&a, &d).unwrap();
    let signs: Vec<(String, i8)> = g
        .closed_generators
        .iter()
        .map(|x| {
            let r = g.closed.grade(x);
            (r.name, r.s)
        })
        .collect();
    let abs = absolute_grading(&d, &a, CAP).unwrap();
    let want = [
        ("a⊠w".to_string(), -1),
        ("b⊠y".to_string(), 1),
        ("d⊠y".to_string(), -1),
    ];
    let ok = signs == want && abs.chi_before == -1 && abs.chi_after == 1 && abs.det.abs() == 1;
    line(
        ok,
        format!("{signs:?}, chi {} -> {}", abs.chi_before, abs.chi_after),
    )
}

fn lagrangian() -> Line {
    let c = PointedMatchedCircle::antipodal(2);
    let l = canonical_lagrangian(&c, CAP).unwrap();
    let h1: Vec<String> = h1_prefix(4, 21).iter().map(|v| format_vector(v)).collect();
    let lp: Vec<String> = l_prefix(&c.intersection_form(), 2)
        .iter()
        .map(|t| format_tuple(t))
        .collect();
    let ok = format_tuple(&l.tuple) == "(-e4, -e2+e3)"
        && h1 == H1_PREFIX
        && lp == ["(-e4, -e2+e3)", "(-e4, e2-e3)"];
    line(ok, format!("l_Z = {}", format_tuple(&l.tuple)))
}

fn laws(f: fn(&PointedMatchedCircle, &VerifyConfig) -> SuiteReport) -> Line {
    let exhaustive = VerifyConfig {
        exhaustive: true,
        samples: 0,
        seed: SEED,
    };
    let sampled = VerifyConfig {
        exhaustive: false,
        samples: 100_000,
        seed: SEED,
    };
    let mut reports: Vec<SuiteReport> = all_circles(1).iter().map(|c| f(c, &exhaustive)).collect();
    for c in [PointedMatchedCircle::antipodal(2), PointedMatchedCircle::split(2)] {
        reports.push(f(&c, &sampled));
    }
    from_suites(&reports)
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("figure2 table", Duration::from_secs(1), Box::new(figure2)),
        ("H_Z table", Duration::from_secs(1), Box::new(hz)),
        ("pairing example", Duration::from_secs(5), Box::new(pairing)),
        (
            "canonical Lagrangian",
            Duration::from_secs(5),
            Box::new(lagrangian),
        ),
        (
            "algebra laws",
            Duration::from_secs(120),
            Box::new(|| laws(algebra_laws)),
        ),
        (
            "AZ grading laws",
            Duration::from_secs(120),
            Box::new(|| laws(az_laws)),
        ),
        (
            "index identities",
            Duration::from_secs(120),
            Box::new(|| {
                from_suites(&[index_suite(&VerifyConfig {
                    exhaustive: true,
                    samples: 100_000,
                    seed: SEED,
                })])
            }),
        ),
        (
            "signed count = det",
            Duration::from_secs(60),
            Box::new(|| from_suites(&[determinant_suite(50, SEED)])),
        ),
        (
            "reordering parity",
            Duration::from_secs(60),
            Box::new(|| from_suites(&[reordering_suite(1000, SEED)])),
        ),
        (
            "H_Z independence",
            Duration::from_secs(5),
            Box::new(|| from_suites(&[hz_independence(CAP)])),
        ),
    ];
    let mut failed = 0;
    for (k, (name, budget, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let l = f();
        let took = t.elapsed();
        let ok = l.ok && took <= *budget;
        if !ok {
            failed += 1;
        }
        let verdict = if ok { "PASS" } else { "FAIL" };
        let slow = if took > *budget { " (over budget)" } else { "" };
        println!(
            "criterion {:>2}  {verdict}  {name}: {}  [{:.2?}{slow}]",
            k + 1,
            l.detail,
            took
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
