#![no_main]

use libfuzzer_sys::fuzz_target;

use cographgen::graph6;

fuzz_target!(|data: &[u8]| {
    let Ok(graph) = graph6::decode(data) else {
        return;
    };
    // Decoding is strict (canonical size word, exact length, clean padding),
    // so accepted bytes re-encode to themselves.
    let text = graph6::encode(&graph).expect("decoded graphs fit the format");
    assert_eq!(text.as_bytes(), data);
});
