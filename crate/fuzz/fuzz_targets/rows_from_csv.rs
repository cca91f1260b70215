#![no_main]

use harmonic_cert::report::{rows_from_csv, rows_to_csv};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(rows) = rows_from_csv(s) {
        let again = rows_from_csv(&rows_to_csv(&rows).unwrap()).unwrap();
        assert_eq!(rows, again);
    }
});
