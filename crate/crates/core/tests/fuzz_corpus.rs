//! Replays the checked-in fuzz corpus through the same checks the fuzz targets make.

use std::fs;
use std::path::PathBuf;

use secat::model_io::{parse, parse_element, parse_reference, serialize_file, Resolver};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            (path.display().to_string(), fs::read_to_string(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn model_seeds() {
    let mut accepted = 0;
    for (_, text) in seeds("parse_model") {
        accepted += usize::from(parse(&text).is_ok());
    }
    assert!(accepted >= 3);
}

#[test]
fn roundtrip_seeds() {
    for (path, text) in seeds("roundtrip") {
        let Ok(file) = parse(&text) else { continue };
        let printed = serialize_file(&file);
        let again = parse(&printed).unwrap_or_else(|d| panic!("{path}: {d}\n{printed}"));
        assert_eq!(printed, serialize_file(&again), "{path}");
    }
}

#[test]
fn reference_seeds() {
    for (path, text) in seeds("parse_reference") {
        if let Ok(r) = parse_reference(&text) {
            assert_eq!(parse_reference(&r.to_string()).unwrap().to_string(), r.to_string(), "{path}");
            let _ = Resolver::new(None).algebra(&r);
        }
    }
}

#[test]
fn element_seeds() {
    let f = parse("algebra A { gen x:2; gen y:3; gen z:1; rel x^4; d y = x^2; }").unwrap();
    for (_, text) in seeds("parse_element") {
        let _ = parse_element(&f.algebras[0].algebra, &text);
    }
}
