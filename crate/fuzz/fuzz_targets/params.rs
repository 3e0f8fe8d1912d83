#![no_main]

use libfuzzer_sys::fuzz_target;
use uncover::instances::{parse_json, GeneratorParams};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_json::<GeneratorParams>(s) {
        // Keep generated instances small enough for the fuzzer's time budget.
        let small = match &p {
            GeneratorParams::Thm21 { n, .. } | GeneratorParams::Thm22 { n, .. } => *n <= 64,
            GeneratorParams::RandomMinSet(q) => q.n <= 64 && q.m <= 64,
            GeneratorParams::RandomDisjoint(q) => q.n <= 64,
            GeneratorParams::RandomMinCover(q) => q.n <= 64 && q.m <= 64,
            GeneratorParams::SetCoverReduction { source, .. } => source.universe <= 64 && source.sets.len() <= 64,
            GeneratorParams::Fig1 => true,
        };
        if small {
            let _ = p.generate();
        }
    }
});
