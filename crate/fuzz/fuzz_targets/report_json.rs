#![no_main]
use libfuzzer_sys::fuzz_target;

use hallcpi::report::parse_report;

fuzz_target!(|data: &str| {
    if let Ok(report) = parse_report(data) {
        let again = parse_report(&report.to_json()).expect("emitted reports parse");
        assert_eq!(again, report);
    }
});
