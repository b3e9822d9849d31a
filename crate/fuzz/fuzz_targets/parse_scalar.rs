#![no_main]

use libfuzzer_sys::fuzz_target;
use orw_core::scalar::{format_rational, parse_rational};
use orw_core::superalg::HalfInt;

fuzz_target!(|s: &str| {
    if let Ok(q) = parse_rational(s) {
        assert_eq!(parse_rational(&format_rational(&q)).ok(), Some(q));
    }
    if let Ok(h) = HalfInt::parse(s) {
        assert_eq!(HalfInt::parse(&h.to_string()).ok(), Some(h));
    }
});
