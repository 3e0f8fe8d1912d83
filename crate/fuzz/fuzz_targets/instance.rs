#![no_main]

use libfuzzer_sys::fuzz_target;
use uncover::instances::{load_instance, save_instance};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(inst) = load_instance(s) {
        assert_eq!(load_instance(&save_instance(&inst)).unwrap(), inst);
    }
});
