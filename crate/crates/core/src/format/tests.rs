use super::*;
use crate::hopf::{kac_paljutkin, named_group, taft, verify_axioms, Axiom, NamedGroup};

#[test]
fn round_trip_preserves_everything() {
    for e in catalog() {
        let text = write_hopf(&e.hopf);
        let back = parse_hopf(&text).unwrap();
        assert_eq!(back, e.hopf, "{}", e.stem);
        assert_eq!(write_hopf(&back), text);
    }
}

#[test]
fn scalars_use_the_short_form_when_rational() {
    let text = write_hopf(&named_group(NamedGroup::Cyclic(2), 4));
    assert!(text.contains("\"unit\": [\"1\",\"0\"]"), "{text}");
    let kp = write_hopf(&kac_paljutkin());
    assert!(kp.contains("\"1/2\""));
    // taft(3) needs ζ_3 = [0, 1]
    let t = write_hopf(&taft(3));
    assert!(t.contains("[\"0\",\"1\"]") || t.contains("[\"-1\",\"-1\"]"));
}

#[test]
fn one_vector_per_line() {
    let text = write_hopf(&named_group(NamedGroup::Cyclic(3), 1));
    let mult_lines = text.lines().filter(|l| l.trim_start().starts_with("[\"")).count();
    // 9 products, 3·3 comultiplication rows, 3 antipode rows
    assert_eq!(mult_lines, 9 + 9 + 3);
}

#[test]
fn accepts_coordinate_arrays_and_unicode_minus() {
    let h = named_group(NamedGroup::Cyclic(2), 1);
    let text = write_hopf(&h).replace("\"unit\": [\"1\",\"0\"]", "\"unit\": [[\"1\"],\"0\"]");
    assert_eq!(parse_hopf(&text).unwrap(), h);
    let mut z2 = write_hopf(&h);
    z2 = z2.replacen("\"counit\": [\"1\",\"1\"]", "\"counit\": [\"1\",\"\u{2212}1\"]", 1);
    let bad = parse_hopf(&z2).unwrap();
    assert_eq!(bad.counit_basis(1), &Cyclo::from_int(1, -1));
    assert!(!verify_axioms(&bad).all_pass());
}

#[test]
fn empty_input_is_a_syntax_error() {
    assert!(matches!(parse_hopf(""), Err(FormatError::Syntax { line: 1, .. })));
}

#[test]
fn syntax_errors_carry_the_line() {
    let text = write_hopf(&named_group(NamedGroup::Cyclic(2), 1));
    let broken = text.replacen("\"dim\": 2", "\"dim\": two", 1);
    match parse_hopf(&broken) {
        Err(FormatError::Syntax { line, .. }) => assert_eq!(line, 3),
        other => panic!("{other:?}"),
    }
}

#[test]
fn shape_errors_name_the_key() {
    let text = write_hopf(&named_group(NamedGroup::Cyclic(2), 1));
    let short = text.replacen("\"counit\": [\"1\",\"1\"]", "\"counit\": [\"1\"]", 1);
    assert_eq!(
        parse_hopf(&short),
        Err(FormatError::Field {
            key: "counit".into(),
            message: "expected 2 entries, found 1".into()
        })
    );
    let wrong_field = write_hopf(&named_group(NamedGroup::Cyclic(2), 4)).replacen("[\"1\",\"0\"]", "[\"1\",\"0\",\"0\"]", 1);
    assert!(matches!(parse_hopf(&wrong_field), Err(FormatError::Field { key, .. }) if key.starts_with("mult[0][0]")));
    let nonsense = text.replacen("\"1\"", "\"x\"", 1);
    assert!(matches!(parse_hopf(&nonsense), Err(FormatError::Field { .. })));
    let unknown = text.replacen("{\n", "{\n  \"extra\": 1,\n", 1);
    assert!(matches!(parse_hopf(&unknown), Err(FormatError::Syntax { .. })));
}

#[test]
fn corrupted_antipode_fails_verification() {
    let h = named_group(NamedGroup::Q8, 4);
    let text = write_hopf(&h);
    let start = text.find("\"antipode\"").unwrap();
    // S(1) = 1 becomes S(1) = 2·1
    let row = text[start..].find("[\"1\"").unwrap() + start;
    let mut broken = text.clone();
    broken.replace_range(row..row + 4, "[\"2\"");
    let parsed = parse_hopf(&broken).unwrap();
    let report = verify_axioms(&parsed);
    assert!(!report.all_pass());
    assert_eq!(report.first_failure().unwrap().axiom, Axiom::Antipode);
}

#[test]
fn sub_files() {
    let d4 = named_group(NamedGroup::D4, 1);
    let sub = parse_sub(&write_sub_indices(&D4_ROTATIONS), &d4).unwrap();
    assert_eq!(sub.dim(), 4);
    let vectors = parse_sub("{\"vectors\": [[\"1\",\"0\",\"1\",\"0\",\"0\",\"0\",\"0\",\"0\"], [\"1\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\"]]}", &d4).unwrap();
    assert_eq!(vectors.dim(), 2);
    assert!(matches!(parse_sub("{\"indices\": [0, 4, 9]}", &d4), Err(FormatError::Field { .. })));
    assert!(matches!(parse_sub("{\"indices\": [1]}", &d4), Err(FormatError::Sub(_))));
    assert!(matches!(parse_sub("{}", &d4), Err(FormatError::Field { .. })));
}
