#![no_main]

use libfuzzer_sys::fuzz_target;
use secat::model_io::{parse_reference, Resolver};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_reference(text) {
        // Display is canonical: reparsing it gives the same tree up to columns.
        let again = parse_reference(&r.to_string()).expect("canonical form parses");
        assert_eq!(again.to_string(), r.to_string());
        // Keep resolution cheap: only small references are built.
        if text.len() < 24 {
            let resolver = Resolver::new(None);
            let _ = resolver.algebra(&r);
        }
    }
});
