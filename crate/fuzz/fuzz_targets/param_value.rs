#![no_main]

use libfuzzer_sys::fuzz_target;
use orw_core::weightmod::ParamValue;

fuzz_target!(|s: &str| {
    if let Ok(v) = ParamValue::parse(s) {
        assert_eq!(ParamValue::parse(&v.to_string()).ok(), Some(v));
    }
});
