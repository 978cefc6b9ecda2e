#![no_main]
use libfuzzer_sys::fuzz_target;

use hallcpi::hall::PiSet;

fuzz_target!(|data: &str| {
    if let Ok(pi) = PiSet::parse(data) {
        assert!(pi.primes().count() > 0);
        assert_eq!(PiSet::parse(&pi.to_string()).expect("display parses"), pi);
    }
});
