#![no_main]

use harmonic_cert::parse::parse_n_list;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(ns) = parse_n_list(s) {
        assert!(!ns.is_empty());
        assert!(ns.iter().all(|n| n.get() >= 1));
    }
});
