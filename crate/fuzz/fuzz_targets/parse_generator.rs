#![no_main]

use libfuzzer_sys::fuzz_target;
use orw_core::scalar::int;
use orw_core::superalg::{named, orw};

fuzz_target!(|s: &str| {
    for alg in [named("bms3"), orw(int(-1), 0)] {
        if let Ok(g) = alg.parse_generator(s) {
            let text = alg.format_generator(g);
            assert_eq!(alg.parse_generator(&text).ok(), Some(g));
        }
    }
});
