use bfz2::diagram::{glue, reorder_parity, Convention};
use bfz2::io::{data_dir, diagram_to_json, load_diagram, parse_diagram};
use bfz2::perm::one_line;

#[test]
fn figure2_table() {
    let d = load_diagram(&data_dir().join("figure2.json")).unwrap();
    let rows = d.grade_all().unwrap();
    let names: Vec<_> = rows.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(names, ["x", "y", "z", "w"]);
    let so: Vec<_> = rows
        .iter()
        .map(|r| one_line(r.sigma_o.as_ref().unwrap()))
        .collect();
    assert_eq!(so, ["(1 3 2 4)", "(1 4 2 3)", "(2 3 1 4)", "(2 4 1 3)"]);
    let sx: Vec<_> = rows.iter().map(|r| one_line(&r.sigma_x)).collect();
    assert_eq!(sx, ["(1 3 4 2)", "(1 4 3 2)", "(2 3 4 1)", "(2 4 3 1)"]);
    let sso: Vec<_> = rows.iter().map(|r| r.sign_sigma_o).collect();
    assert_eq!(sso, [-1, 1, 1, -1]);
    let ssx: Vec<_> = rows.iter().map(|r| r.sign_sigma_x).collect();
    assert_eq!(ssx, [1, -1, -1, 1]);
    let local: Vec<_> = rows.iter().map(|r| r.local.clone()).collect();
    assert_eq!(
        local,
        [
            vec![1, 1, -1, 1],
            vec![1, 1, 1, 1],
            vec![1, 1, -1, -1],
            vec![1, 1, 1, -1]
        ]
    );
    let s: Vec<_> = rows.iter().map(|r| r.s).collect();
    assert_eq!(s, [1, -1, -1, 1]);
}

#[test]
fn hz_table() {
    let d = load_diagram(&data_dir().join("hz_antipodal.json")).unwrap();
    let rows = d.grade_all().unwrap();
    let names: Vec<_> = rows.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(names, ["a", "b", "c", "d"]);
    let s: Vec<_> = rows.iter().map(|r| r.s).collect();
    assert_eq!(s, [-1, -1, -1, 1]);
    assert_eq!(one_line(&rows[3].sigma_x), "(2 1)");
    assert!(d.grade_type_d(&d.enumerate_generators().unwrap()[0]).is_err());
}

#[test]
fn glued_example() {
    let a = load_diagram(&data_dir().join("hz_antipodal.json")).unwrap();
    let d = load_diagram(&data_dir().join("figure2.json")).unwrap();
    let g = glue(&a, &d).unwrap();
    let rows: Vec<_> = g.closed_generators.iter().map(|x| g.closed.grade(x)).collect();
    let pairs: Vec<_> = rows.iter().map(|r| (r.name.as_str(), r.s)).collect();
    assert_eq!(pairs, [("a⊠w", -1), ("b⊠y", 1), ("d⊠y", -1)]);
    let det = g.closed.det_criterion().unwrap();
    assert_eq!((det.det, det.chi, det.canonical), (-1, -1, false));
    let k = 2;
    for &(i, j, z) in &g.pairs {
        let sa = a.grade(&g.a_generators[i]).s;
        let sd = d.grade(&g.d_generators[j]).s;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        assert_eq!(g.closed.grade(&g.closed_generators[z]).s, sign * sa * sd);
    }
}

#[test]
fn alpha_circle_flip_flips_all() {
    let d = load_diagram(&data_dir().join("figure2.json")).unwrap();
    let old = d.ordering();
    let mut new = old.clone();
    new.alpha[1].1 = false;
    assert_eq!(reorder_parity(&old, &new).unwrap(), -1);
    let e = d.reordered(&new).unwrap();
    for (a, b) in d.grade_all().unwrap().iter().zip(e.grade_all().unwrap()) {
        assert_eq!(a.s, -b.s);
    }
}

#[test]
fn type_a_and_d_differ_by_idempotent_sign() {
    let d = load_diagram(&data_dir().join("figure2.json")).unwrap();
    let a = d.with_convention(Convention::TypeA).unwrap();
    let k = 2;
    let g = 4;
    let fixed = if (k * (g - k)) % 2 == 0 { 1 } else { -1 };
    for (rd, ra) in d.grade_all().unwrap().iter().zip(a.grade_all().unwrap()) {
        assert_eq!(rd.s, fixed * rd.sign_sigma_o * ra.s);
    }
}

#[test]
fn diagram_json_roundtrip() {
    let d = load_diagram(&data_dir().join("figure2.json")).unwrap();
    let text = diagram_to_json(&d);
    assert_eq!(parse_diagram(&text, &data_dir()).unwrap(), d);
}
