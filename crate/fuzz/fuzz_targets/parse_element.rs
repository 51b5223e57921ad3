#![no_main]

use std::sync::OnceLock;

use libfuzzer_sys::fuzz_target;
use secat::gca::Cdga;
use secat::model_io::{parse, parse_element};

fn ambient() -> &'static Cdga {
    static A: OnceLock<Cdga> = OnceLock::new();
    A.get_or_init(|| {
        let f = parse("algebra A { gen x:2; gen y:3; gen z:1; rel x^4; d y = x^2; }").unwrap();
        (*f.algebras[0].algebra).clone()
    })
}

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = parse_element(ambient(), text);
    }
});
