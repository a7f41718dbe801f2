#![no_main]

use libfuzzer_sys::fuzz_target;
use numtower::json::from_json_str;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = from_json_str(s);
    }
});
