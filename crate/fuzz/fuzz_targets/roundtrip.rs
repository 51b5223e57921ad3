#![no_main]

use libfuzzer_sys::fuzz_target;
use secat::model_io::{parse, serialize_file};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(file) = parse(text) else { return };
    let printed = serialize_file(&file);
    let again = parse(&printed).unwrap_or_else(|d| panic!("serialized output does not parse: {d}\n{printed}"));
    assert_eq!(printed, serialize_file(&again));
    for (a, b) in file.algebras.iter().zip(&again.algebras) {
        assert_eq!(a.name, b.name);
        assert_eq!(a.algebra.generators().len(), b.algebra.generators().len());
    }
    for (m, n) in file.morphisms.iter().zip(&again.morphisms) {
        assert_eq!(m.morphism.images().len(), n.morphism.images().len());
    }
});
