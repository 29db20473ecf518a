use std::collections::BTreeSet;

use gmr_cli::spec::{build_system, codes, parse_spec, parse_value, to_value, BuildError};
use gmr_cli::{run_bytes, Command, Flags, Format};
use gmr_core::{GMRing, Limits};

fn parse_err(text: &str) -> gmr_cli::Diagnostic {
    parse_spec(text).expect_err("spec should be rejected")
}

const Z4: &str = r#"{"version": 1, "construction": {"kind": "tables", "labels": ["1"],
  "components": {"1,1": [4]},
  "products": {"1,1,1": [[[0],[0],[0],[0]],[[0],[1],[2],[3]],[[0],[2],[0],[2]],[[0],[3],[2],[1]]]}}}"#;

#[test]
fn minimal_tables_spec() {
    let doc = parse_spec(Z4).unwrap();
    let s = build_system(&doc, &Limits::default()).unwrap();
    assert_eq!(GMRing::assemble(s, &Limits::default()).unwrap().order(), 4);
}

#[test]
fn matrix_hom_with_zero_block() {
    let doc = parse_spec(
        r#"{"version": 1, "construction": {"kind": "matrix_hom", "objects": [["1",1],["2",1]],
            "modulus": 2, "zero_blocks": [["2","1"]]}}"#,
    )
    .unwrap();
    let s = build_system(&doc, &Limits::default()).unwrap();
    assert_eq!(s.total_order(), Some(8));
}

#[test]
fn undeclared_vertex_names_edge() {
    let d = parse_err(
        r#"{"version": 1, "construction": {"kind": "path_algebra", "vertices": ["1","2"],
            "edges": [["1","2"],["2","9"]], "modulus": 2, "truncation": 1}}"#,
    );
    assert_eq!(d.code, codes::LABEL);
    assert_eq!(d.path, "$.construction.edges[1]");
    assert!(d.message.contains("edge 1"));
}

#[test]
fn diagnostics_have_distinct_codes() {
    let cases = [
        ("not json", codes::SYNTAX, "$"),
        (r#"{"version": 3, "construction": {}}"#, codes::VERSION, "$.version"),
        (r#"{"version": 1, "construction": {"kind": "sheaf"}}"#, codes::UNKNOWN_KIND, "$.construction.kind"),
        (r#"{"version": 1, "construction": {"kind": "matrix_hom", "objects": [["1",1]]}}"#, codes::FIELD, "$.construction.modulus"),
        (
            r#"{"version": 1, "construction": {"kind": "tables", "labels": ["1"], "components": {"1,1": [2]},
               "products": {"1,1,1": [[[0],[0]],[[0],"x"]]}}}"#,
            codes::COORDINATES,
            "$.construction.products.1,1,1[1][1]",
        ),
        (
            r#"{"version": 1, "construction": {"kind": "matrix_hom", "objects": [["1",1]], "modulus": 2},
               "named_ideals": {"b": ["1,1(1)"]}}"#,
            codes::COORDINATES,
            "$.named_ideals.b[0]",
        ),
        (r#"{"version": 1, "construction": {"kind": "tables", "labels": ["1","1"], "components": {}}}"#, codes::LABEL, "$.construction.labels[1]"),
        (r#"{"version": 1, "construction": {"kind": "tables", "labels": ["1"], "components": {}}, "extra": 1}"#, codes::FIELD, "$.extra"),
    ];
    let mut seen = BTreeSet::new();
    for (text, code, path) in cases {
        let d = parse_err(text);
        assert_eq!((d.code, d.path.as_str()), (code, path), "{text}");
        seen.insert(d.code);
    }
    assert_eq!(seen.len(), 6);
}

#[test]
fn constructor_rejections_are_diagnostics() {
    let doc = parse_spec(
        r#"{"version": 1, "construction": {"kind": "matrix_hom", "objects": [["1",1],["2",1]],
            "modulus": 2, "zero_blocks": [["1","1"]]}}"#,
    )
    .unwrap();
    match build_system(&doc, &Limits::default()) {
        Err(BuildError::Diagnostic(d)) => assert_eq!(d.code, codes::CONSTRUCTION),
        other => panic!("unexpected {other:?}"),
    }
    let doc = parse_spec(
        r#"{"version": 1, "construction": {"kind": "tables", "labels": ["1"], "components": {"1,1": [2]},
            "products": {"1,1,1": [[[0],[0]],[[0],[5]]]}}}"#,
    )
    .unwrap();
    match build_system(&doc, &Limits::default()) {
        Err(BuildError::Diagnostic(d)) => {
            assert_eq!(d.code, codes::COORDINATES);
            assert_eq!(d.path, "$.construction.products.1,1,1[1][1]");
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn caps_are_read_and_flags_win() {
    let text = r#"{"version": 1, "construction": {"kind": "matrix_hom", "objects": [["1",1],["2",1]], "modulus": 3},
                   "caps": {"max_lattice": 4}}"#;
    let cmd = Command::Radical(gmr_cli::MethodChoice::All);
    let r = run_bytes("caps.json", text.as_bytes(), &cmd, &Flags::default());
    assert_eq!(r.exit, 3);
    let flags = Flags {
        max_lattice: Some(256),
        ..Flags::default()
    };
    assert_eq!(run_bytes("caps.json", text.as_bytes(), &cmd, &flags).exit, 0);
}

#[test]
fn corpus_round_trips_through_echo() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let mut n = 0;
    for e in std::fs::read_dir(dir).unwrap() {
        let p = e.unwrap().path();
        let text = std::fs::read_to_string(&p).unwrap();
        let doc = parse_spec(&text).unwrap();
        let report = run_bytes("x.json", text.as_bytes(), &Command::Check, &Flags::default());
        let echo = report.input.unwrap().spec.unwrap();
        assert_eq!(echo, to_value(&doc));
        assert_eq!(parse_value(&echo).unwrap(), doc, "{}", p.display());
        n += 1;
    }
    assert!(n >= 10);
}

#[test]
fn report_emission_is_stable() {
    let cmd = Command::Verify(gmr_cli::Suite::All);
    let a = run_bytes("z4.json", Z4.as_bytes(), &cmd, &Flags::default());
    let b = run_bytes("z4.json", Z4.as_bytes(), &cmd, &Flags::default());
    assert_eq!(a.emit(Format::Json), b.emit(Format::Json));
    assert_eq!(a.emit(Format::Text), b.emit(Format::Text));
    let json: serde_json::Value = serde_json::from_str(&a.emit(Format::Json)).unwrap();
    let members = &json["sections"][1]["rows"][0][2];
    assert_eq!(members, "{0; 1,1:(2)}");
}
