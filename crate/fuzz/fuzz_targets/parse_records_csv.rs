#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        // parsed records must re-emit and re-parse identically
        if let Ok(records) = cqdds::harness::io::records_from_csv(text) {
            let emitted = cqdds::harness::io::records_to_csv(&records);
            let reparsed = cqdds::harness::io::records_from_csv(&emitted).unwrap();
            assert_eq!(records.len(), reparsed.len());
            for (a, b) in records.iter().zip(&reparsed) {
                assert_eq!(a.best_cost.to_bits(), b.best_cost.to_bits());
                assert_eq!(a.best_position, b.best_position);
            }
        }
    }
});
