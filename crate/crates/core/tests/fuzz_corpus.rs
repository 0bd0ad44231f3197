//! Replays the checked-in fuzz corpus through the fuzz target bodies.

use std::fs;
use std::path::Path;

#[allow(dead_code)]
#[path = "../../../fuzz/harness.rs"]
mod harness;

fn replay(target: &str, run: fn(&[u8])) {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut seeds = 0;
    for entry in fs::read_dir(&dir).unwrap_or_else(|e| panic!("{}: {e}", dir.display())) {
        let path = entry.unwrap().path();
        run(&fs::read(&path).unwrap());
        seeds += 1;
    }
    assert!(seeds > 0, "no seeds for {target}");
}

#[test]
fn document_json_seeds() {
    replay("document_json", harness::document_json);
}

#[test]
fn multisegment_label_seeds() {
    replay("multisegment_label", harness::multisegment_label);
}

#[test]
fn partition_spec_seeds() {
    replay("partition_spec", harness::partition_spec);
}

#[test]
fn apply_ops_seeds() {
    replay("apply_ops", harness::apply_ops);
}

#[test]
fn arbitrary_bytes_do_not_panic() {
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let seed = br#"{"kind":"ms","rank":3,"segments":[[1,2,1],[2,3,2]]}"#;
    for _ in 0..2000 {
        let len = (next() % 48) as usize;
        let tail: Vec<u8> = (0..len).map(|_| next() as u8).collect();
        for run in [harness::document_json, harness::multisegment_label, harness::partition_spec] {
            run(&tail);
        }
        let mut input = seed.to_vec();
        input.push(b'\n');
        input.extend(&tail);
        harness::apply_ops(&input);
    }
}
