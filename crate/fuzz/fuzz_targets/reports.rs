#![no_main]

use libfuzzer_sys::fuzz_target;
use uncover::harness::{parse_reports, to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_reports(s) {
        let _ = to_json(&r);
    }
});
