//! The fan-file interface: load the shipped JSON fans, validate them,
//! and run a quick verdict on each. The same files drive the `toric`
//! CLI subcommand.
//!
//! Run with: cargo run --example fan_files

use antiample::toric::bx_dual_ample;
use antiample::Fan;
use std::fs;
use std::path::PathBuf;

fn main() {
    let fan_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fans");
    let mut names: Vec<_> = fs::read_dir(&fan_dir)
        .expect("fans directory exists")
        .map(|entry| entry.unwrap().path())
        .collect();
    names.sort();

    for path in names {
        let text = fs::read_to_string(&path).unwrap();
        let fan: Fan = serde_json::from_str(&text).unwrap();
        let violations = fan.violations();
        let file = path.file_name().unwrap().to_string_lossy().into_owned();
        if violations.is_empty() {
            let verdict = bx_dual_ample(&fan, 2).unwrap();
            println!(
                "{file:<24} dim {} with {} rays: valid, dual cokernel at p=2 is {}",
                fan.dim,
                fan.num_rays(),
                verdict.value
            );
        } else {
            println!("{file:<24} INVALID:");
            for violation in violations {
                println!("    - {violation}");
            }
        }
    }
}
