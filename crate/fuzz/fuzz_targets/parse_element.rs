#![no_main]

use libfuzzer_sys::fuzz_target;
use orw_core::driver::parse_element;
use orw_core::pbw::element_equal;
use orw_core::superalg::named;

fuzz_target!(|s: &str| {
    if s.len() > 256 {
        return;
    }
    for name in ["vir", "ns", "sw22"] {
        let alg = named(name);
        if let Ok(e) = parse_element(&alg, s) {
            let again = parse_element(&alg, &e.format(&alg)).expect("formatted element reparses");
            assert!(element_equal(&alg, &e, &again).unwrap_or(true));
        }
    }
});
