use std::path::Path;

use proptest::prelude::*;
use realizability::format::{normalize, DcoFile, FormatError};
use realizability_core::dco::catalog;

fn data(name: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name);
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn shipped_files_round_trip_byte_for_byte() {
    for (name, d) in catalog::shipped() {
        let src = data(&format!("{name}.dco"));
        let f = DcoFile::parse(&src).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(f.dco, d, "{name}");
        assert_eq!(f.to_text(), src, "{name}");
    }
}

#[test]
fn const_zero_file_is_the_two_point_example() {
    let f = DcoFile::parse(&data("const-zero.dco")).unwrap();
    assert_eq!(f.dco.atoms(), ["0", "1"]);
    assert_eq!(f.dco.member_count(), 2);
    assert_eq!(f.dco.graph(1), &vec![Some(0), Some(0)]);
}

#[test]
fn round_trip_modulo_whitespace_and_comments() {
    let src = data("const-zero-objects.dco");
    let f = DcoFile::parse(&src).unwrap();
    assert_eq!(f.to_text(), normalize(&src));
    let messy =
        "  carrier   0 1 # atoms\n\nmember id 0->0   1->1\nmember c0 0->0 1->0\n\tidentity id\n";
    assert_eq!(DcoFile::parse(messy).unwrap().to_text(), normalize(messy));
}

#[test]
fn non_functional_member_is_rejected() {
    let err = DcoFile::parse("carrier 0 1\nmember f 0->0 0->1\nmember id 0->0 1->1\nidentity id\n")
        .unwrap_err();
    match err {
        FormatError::NonFunctional {
            line,
            member,
            input,
            first,
            second,
            ..
        } => {
            assert_eq!((line, member.as_str(), input.as_str()), (2, "f", "0"));
            assert_eq!((first.as_str(), second.as_str()), ("0", "1"));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn unknown_atom_is_named() {
    let err = DcoFile::parse("carrier 0 1\nmember id 0->0 1->1 2->2\nidentity id\n").unwrap_err();
    assert!(
        matches!(&err, FormatError::UnknownAtom { line: 2, atom, .. } if atom == "2"),
        "{err:?}"
    );
    assert!(err.to_string().contains("`2`"));
}

#[test]
fn missing_identity_declaration() {
    let err = DcoFile::parse("carrier 0 1\nmember id 0->0 1->1\n").unwrap_err();
    assert_eq!(err, FormatError::MissingIdentity);
}

#[test]
fn syntax_errors_carry_positions() {
    let err = DcoFile::parse("carrier 0\nmember id 0=>0\n").unwrap_err();
    assert!(
        matches!(
            err,
            FormatError::Syntax {
                line: 2,
                column: 11,
                ..
            }
        ),
        "{err:?}"
    );
    let err = DcoFile::parse("member id 0->0\n").unwrap_err();
    assert!(
        matches!(
            err,
            FormatError::Syntax {
                line: 1,
                column: 1,
                ..
            }
        ),
        "{err:?}"
    );
    let err = DcoFile::parse("carrier 0\nmember id 0->0\nidentity id\nbogus\n").unwrap_err();
    assert!(
        matches!(err, FormatError::Syntax { line: 4, .. }),
        "{err:?}"
    );
}

#[test]
fn objects_and_morphisms() {
    let f = DcoFile::parse(&data("const-zero-objects.dco")).unwrap();
    let x = f.pasm_object("X").unwrap();
    assert_eq!(x.pred, vec![0, 1]);
    let m = f.morphisms.iter().find(|m| m.name == "collapse").unwrap();
    assert_eq!(m.map, vec![0, 0]);
    assert_eq!(m.realizer, Some(1));
    assert_eq!(f.pred("mixed").unwrap().atoms, vec![0, 1]);
}

proptest! {
    // Generated family members serialize and parse back to themselves.
    #[test]
    fn generated_dcos_round_trip(k in 0usize..50) {
        let family = catalog::generated_family();
        let d = family[k % family.len()].clone();
        let f = DcoFile::from_dco(d.clone());
        let text = f.to_text();
        let back = DcoFile::parse(&text).unwrap();
        prop_assert_eq!(&back.dco, &d);
        prop_assert_eq!(back.to_text(), text);
    }
}
