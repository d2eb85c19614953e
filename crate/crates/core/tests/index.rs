use bfz2::circle::all_chords;
use bfz2::index::*;
use bfz2::io::{data_dir, load_domain, load_type_d};
use bfz2::strands::mask_of;
use bfz2::{Error, PointedMatchedCircle, Rational, ReebChord};

#[test]
fn bundled_domains() {
    for (f, nx, ny) in [
        ("bigon.json", Rational::new(1, 4), Rational::new(1, 4)),
        ("az_interleaved.json", Rational::new(1, 2), Rational::new(3, 2)),
        ("boundary_strip.json", Rational::new(1, 4), Rational::new(1, 4)),
    ] {
        let d = load_domain(&data_dir().join(f)).unwrap();
        let b = &d.domain.multiplicities;
        assert_eq!(d.complex.point_measure(b, &d.domain.x), nx, "{f}");
        assert_eq!(d.complex.point_measure(b, &d.domain.y), ny, "{f}");
        assert_eq!(embedded_index(&d.complex, &d.domain, &d.chords), Ok(1), "{f}");
    }
}

#[test]
fn reversal_identity_genus_one() {
    let chords = all_chords(4);
    for a in &chords {
        for b in &chords {
            let seq = [*a, *b];
            assert_eq!(iota_reversed(&seq, 4), Rational::from_integer(-2) - iota(&seq));
        }
    }
}

#[test]
fn az_index_is_one_on_every_product() {
    let c = PointedMatchedCircle::antipodal(2);
    let az = AzComplex::new(&c);
    let mut seen = 0;
    for s in 0..16u64 {
        for a in all_chords(8) {
            for b in all_chords(8) {
                if a.start >= b.start || a.end == b.end {
                    continue;
                }
                let rho = [a, b];
                if let Ok(d) = az_multiplication_domain(&c, &az, s << 1, &rho) {
                    seen += 1;
                    assert_eq!(
                        embedded_index(&az.complex, &d, &ChordTerm::Sets(vec![rho.to_vec()])),
                        Ok(1)
                    );
                }
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn idempotent_has_no_domain() {
    let c = PointedMatchedCircle::split(1);
    let az = AzComplex::new(&c);
    assert!(matches!(
        az_multiplication_domain(&c, &az, mask_of([1]), &[]),
        Err(Error::NoDomain(_))
    ));
}

#[test]
fn shift_is_checked_against_the_module() {
    let d = load_type_d(&data_dir().join("figure2_typed.json")).unwrap();
    let (z, x, w) = (
        d.index_of("z").unwrap(),
        d.index_of("x").unwrap(),
        d.index_of("w").unwrap(),
    );
    assert_eq!(
        grading_shift_check(&d, z, x, &[ReebChord::new(7, 8)], 1),
        Ok(true)
    );
    assert_eq!(grading_shift_check(&d, x, w, &[], 2), Ok(true));
    assert_eq!(grading_shift_check(&d, x, w, &[], 1), Ok(false));
}
