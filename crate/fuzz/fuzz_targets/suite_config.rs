#![no_main]

use libfuzzer_sys::fuzz_target;
use orw_core::driver::SuiteConfig;

fuzz_target!(|s: &str| {
    if s.len() > 4096 {
        return;
    }
    if let Ok(cfg) = SuiteConfig::from_str_auto(s) {
        let _ = cfg.modules();
        let _ = cfg.algebras();
        if let Some(table) = &cfg.custom {
            table.resolve().expect("validated table resolves");
        }
    }
});
