use supergrade::assembly::{build_model_la, model_la_data};
use supergrade::coordalg::Builtin;
use supergrade::document::{load_document, save_document, Document};
use supergrade::{Error, Rational};

type Doc = Document<Rational>;

#[test]
fn round_trips() {
    for b in ["dual_numbers", "grassmann:2", "matrix_super:1,1"] {
        let a = b.parse::<Builtin>().unwrap().build::<Rational>().unwrap();
        let docs = [
            Doc::Assoc(a.clone()),
            Doc::Lie(build_model_la(&a, 1, 0).unwrap().algebra),
            Doc::Coordinates(model_la_data(&a, 1, 0).unwrap()),
        ];
        for d in docs {
            let text = d.to_json();
            let back = Doc::from_json(&text).unwrap();
            assert_eq!(back.kind(), d.kind());
            assert_eq!(back.to_json(), text);
        }
    }
}

#[test]
fn files() {
    let a = "grassmann:2".parse::<Builtin>().unwrap().build::<Rational>().unwrap();
    let path = std::env::temp_dir().join(format!("supergrade-doc-{}.json", std::process::id()));
    let d = Doc::Assoc(a);
    save_document(&d, &path).unwrap();
    let back: Doc = load_document(&path).unwrap();
    assert_eq!(back.to_json(), d.to_json());
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn malformed_documents() {
    assert!(Doc::from_json("{").is_err());
    assert!(Doc::from_json(r#"{"dim": 1, "parity": [0], "table": [], "extra": 1}"#).is_err());
    let bad = Doc::from_json(r#"{"dim": 1, "parity": [0], "table": [[0, 0, 0, "x"]]}"#);
    assert!(bad.is_err());
    let r = Doc::from_json(r#"{"dim": 2, "parity": [0, 1], "table": [[1, 1, 1, "1"]]}"#);
    assert!(matches!(r, Err(Error::ParityViolation { .. })));
}
