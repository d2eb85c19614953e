use bfz2::io::{data_dir, load_diagram};
use bfz2::lagrangian::*;
use bfz2::PointedMatchedCircle;

#[test]
fn antipodal_search_and_prefixes() {
    let c = PointedMatchedCircle::antipodal(2);
    let l = canonical_lagrangian(&c, 1000).unwrap();
    assert_eq!(format_tuple(&l.tuple), "(-e4, -e2+e3)");
    let h1: Vec<String> = h1_prefix(4, 21).iter().map(|v| format_vector(v)).collect();
    assert_eq!(
        h1,
        [
            "0", "-e4", "e4", "-e3", "e3", "-e2", "e2", "-e1", "e1", "-e3-e4", "-e3+e4", "e3-e4", "e3+e4",
            "-e2-e4", "-e2+e4", "e2-e4", "e2+e4", "-e2-e3", "-e2+e3", "e2-e3", "e2+e3"
        ]
    );
    let lp: Vec<String> = l_prefix(&c.intersection_form(), 2)
        .iter()
        .map(|t| format_tuple(t))
        .collect();
    assert_eq!(lp, ["(-e4, -e2+e3)", "(-e4, e2-e3)"]);
}

#[test]
fn sign_of_form_is_irrelevant() {
    for c in [
        PointedMatchedCircle::antipodal(2),
        PointedMatchedCircle::split(2),
        PointedMatchedCircle::split(3),
    ] {
        let form = c.intersection_form();
        let neg = bfz2::IntMatrix::from_rows(
            &form
                .to_rows()
                .iter()
                .map(|r| r.iter().map(|x| -x).collect())
                .collect::<Vec<_>>(),
        );
        assert_eq!(
            canonical_lagrangian_for_form(&form, 1000).unwrap().tuple,
            canonical_lagrangian_for_form(&neg, 1000).unwrap().tuple
        );
    }
}

#[test]
fn hz_diagrams_validate() {
    for f in [
        "hz_antipodal.json",
        "hz_antipodal_alt.json",
        "hz_split1.json",
        "hz_split2.json",
    ] {
        let d = load_diagram(&data_dir().join(f)).unwrap();
        let r = validate_hz(&d, 1000).unwrap();
        assert!(r.pass(), "{f}: {r:?}");
    }
    let mut d = load_diagram(&data_dir().join("hz_antipodal.json")).unwrap();
    let flip = d.ordering();
    let mut new = flip.clone();
    new.beta[0].1 = false;
    d = d.reordered(&new).unwrap();
    let r = validate_hz(&d, 1000).unwrap();
    assert!(!r.curves[0].pass && r.curves[1].pass);
    let fig = load_diagram(&data_dir().join("figure2.json")).unwrap();
    assert!(validate_hz(&fig, 1000).is_err());
}

#[test]
fn absolute_figure2() {
    let d = load_diagram(&data_dir().join("figure2.json")).unwrap();
    let hz = load_diagram(&data_dir().join("hz_antipodal.json")).unwrap();
    let g = absolute_grading(&d, &hz, 1000).unwrap();
    assert_eq!(g.chi_before, -1);
    assert_eq!(g.chi_after, 1);
    assert!(g.shifted);
    let rel: Vec<u8> = g.rows.iter().map(|r| r.relative.m).collect();
    let abs: Vec<u8> = g.rows.iter().map(|r| r.absolute.m).collect();
    assert_eq!(rel, [0, 1, 1, 0]);
    assert_eq!(abs, [1, 0, 0, 1]);
    let glued: Vec<(String, u8, u8)> = g
        .glued
        .iter()
        .map(|r| (r.name.clone(), r.relative.m, r.absolute.m))
        .collect();
    assert_eq!(
        glued,
        [
            ("a⊠w".to_string(), 1, 0),
            ("b⊠y".to_string(), 0, 1),
            ("d⊠y".to_string(), 1, 0)
        ]
    );
    let alt = load_diagram(&data_dir().join("hz_antipodal_alt.json")).unwrap();
    let h = absolute_grading(&d, &alt, 1000).unwrap();
    assert_eq!(g.rows, h.rows);
}
