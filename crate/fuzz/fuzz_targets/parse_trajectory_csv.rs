#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(points) = cqdds::harness::io::trajectory_from_csv(text) {
            let emitted = cqdds::harness::io::trajectory_to_csv(&points);
            assert_eq!(
                cqdds::harness::io::trajectory_from_csv(&emitted).unwrap(),
                points
            );
        }
    }
});
