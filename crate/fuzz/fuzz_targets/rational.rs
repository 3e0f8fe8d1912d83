#![no_main]

use libfuzzer_sys::fuzz_target;
use uncover::Rational;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(x) = s.parse::<Rational>() {
        assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
    }
});
