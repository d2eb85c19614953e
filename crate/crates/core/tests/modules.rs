use bfz2::diagram::glue;
use bfz2::index::grading_shift_check;
use bfz2::io::{data_dir, load_ainf, load_diagram, load_module, load_type_d, Module};
use bfz2::modules::box_tensor;
use bfz2::ReebChord;
use std::io::Write;

#[test]
fn bundled_modules_validate() {
    let d = load_type_d(&data_dir().join("figure2_typed.json")).unwrap();
    assert!(d.validate().is_valid());
    assert_eq!(d.nilpotency(8), Ok(2));
    let m = load_ainf(&data_dir().join("hz_ainf.json")).unwrap();
    assert!(m.validate().is_valid());
    assert!(matches!(
        load_module(&data_dir().join("hz_ainf.json")),
        Ok(Module::AInfinity(_))
    ));
}

#[test]
fn box_complex() {
    let d = load_type_d(&data_dir().join("figure2_typed.json")).unwrap();
    let m = load_ainf(&data_dir().join("hz_ainf.json")).unwrap();
    let cx = box_tensor(&m, &d).unwrap();
    assert_eq!(cx.names, ["a⊠w", "b⊠y", "d⊠y"]);
    assert!(cx.d_squared_zero());
    assert!(cx.grading_violations().is_empty());
    assert_eq!(cx.differential[2].iter().copied().collect::<Vec<_>>(), [1]);
    let ms: Vec<u8> = cx.grading.iter().map(|g| g.unwrap().m).collect();
    assert_eq!(ms, [1, 0, 1]);
    assert_eq!(cx.euler_characteristic(), Some(-1));
}

#[test]
fn pairing_matches_glued_diagram() {
    let d = load_type_d(&data_dir().join("figure2_typed.json")).unwrap();
    let m = load_ainf(&data_dir().join("hz_ainf.json")).unwrap();
    let hz = load_diagram(&data_dir().join("hz_antipodal.json")).unwrap();
    let fig = load_diagram(&data_dir().join("figure2.json")).unwrap();
    let glued = glue(&hz, &fig).unwrap();
    let report = bfz2::modules::pairing_grading_check(&m, &d, &glued.closed).unwrap();
    assert_eq!(report.rows.len(), 3);
    assert!(report.offset.is_some());
}

#[test]
fn shift_along_delta() {
    let d = load_type_d(&data_dir().join("figure2_typed.json")).unwrap();
    let z = d.index_of("z").unwrap();
    let x = d.index_of("x").unwrap();
    assert_eq!(
        grading_shift_check(&d, z, x, &[ReebChord::new(7, 8)], 1),
        Ok(true)
    );
    assert_eq!(
        grading_shift_check(&d, z, x, &[ReebChord::new(7, 8)], 0),
        Ok(false)
    );
    assert_eq!(grading_shift_check(&d, z, z, &[], 0), Ok(true));
}

#[test]
fn malformed_module_is_rejected() {
    let circle = data_dir().join("antipodal.json");
    let write = |name: &str, body: String| {
        let p = std::env::temp_dir().join(format!("bfz2_{}_{name}.json", std::process::id()));
        std::fs::File::create(&p)
            .unwrap()
            .write_all(body.as_bytes())
            .unwrap();
        p
    };
    let good = write(
        "good",
        format!(
            r#"{{"kind": "typeD", "circle": {:?}, "generators": [{{"id": "x", "idempotent": [1, 2]}}], "delta": []}}"#,
            circle
        ),
    );
    assert!(load_module(&good).is_ok());
    let bad = write(
        "bad",
        format!(
            r#"{{"kind": "typeD", "circle": {:?}, "generators": [{{"id": "x", "idempotent": [9]}}], "delta": []}}"#,
            circle
        ),
    );
    assert!(load_module(&bad).is_err());
    let typo = write(
        "typo",
        format!(
            r#"{{"kind": "typeD", "circle": {:?}, "generators": [], "delta": [], "extra": 1}}"#,
            circle
        ),
    );
    assert!(load_module(&typo).is_err());
    for p in [good, bad, typo] {
        std::fs::remove_file(p).unwrap();
    }
}
