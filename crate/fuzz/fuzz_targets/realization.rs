#![no_main]

use libfuzzer_sys::fuzz_target;
use uncover::instances::{gen_fig1, load_realization, save_realization};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let (inst, _) = gen_fig1();
    if let Ok(real) = load_realization(&inst, s) {
        assert_eq!(load_realization(&inst, &save_realization(&real)).unwrap(), real);
    }
});
