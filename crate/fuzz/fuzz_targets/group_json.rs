#![no_main]
use libfuzzer_sys::fuzz_target;

use hallcpi::io::{parse_group_file, GroupFile};

fuzz_target!(|data: &str| {
    if let Ok((file, g)) = parse_group_file(data) {
        assert_eq!(g.degree(), file.degree);
        let again = GroupFile::from_group(&file.name, &g).to_json();
        let (back, _) = parse_group_file(&again).expect("emitted group files parse");
        assert_eq!(back, file);
    }
});
