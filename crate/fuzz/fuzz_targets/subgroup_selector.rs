#![no_main]
use libfuzzer_sys::fuzz_target;

use hallcpi::selector::Selector;

fuzz_target!(|data: &str| {
    if let Ok(sel) = data.parse::<Selector>() {
        let shown = sel.to_string();
        assert_eq!(shown.parse::<Selector>().expect("display parses"), sel);
    }
});
