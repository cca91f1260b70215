#![no_main]

use harmonic_cert::CertificationReport;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(report) = CertificationReport::from_json(s) {
        let again = CertificationReport::from_json(&report.to_json().unwrap()).unwrap();
        assert_eq!(report.rows, again.rows);
        assert_eq!(report.aggregate, again.aggregate);
    }
});
