#![no_main]

use libfuzzer_sys::fuzz_target;

use cographgen::Cotree;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(tree) = Cotree::parse(text) else {
        return;
    };
    // The grammar is strict, so accepted text is already in serialized form
    // and must round trip byte for byte.
    let canon = tree.serialize();
    assert_eq!(canon, text);
    let reparsed = Cotree::parse(&canon).expect("own output must parse");
    assert_eq!(reparsed.serialize(), canon);
    assert!(tree.node_count() <= 2 * tree.leaves() - 1);
});
