#![no_main]

use harmonic_cert::parse::parse_rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(q) = parse_rational(s) {
        // the printed form may exceed the length cap; when it parses it must agree
        if let Ok(back) = parse_rational(&q.to_string()) {
            assert_eq!(back, q);
        }
    }
});
