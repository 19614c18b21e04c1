//! Twist decompositions of F_* O(d) on projective space and the exact
//! thresholds where the pushforward turns nef and ample.
//!
//! Run with: cargo run --example pushforward_thresholds

use antiample::projective::{fstar_decompose_pn, threshold_scan};

fn main() {
    // The decomposition drifts upward with d; its minimum twist decides
    // nef (>= 0) and ample (>= 1).
    let (n, p) = (2u64, 3u64);
    println!("F_* O(d) on P^{n} at p = {p}:");
    for d in 0..=8 {
        let decomposition = fstar_decompose_pn(n, p, d).unwrap();
        let twists: Vec<String> = decomposition
            .summands
            .iter()
            .map(|(m, mult)| format!("O({m})^{mult}"))
            .collect();
        println!(
            "  d = {d}: {:<34} {}",
            twists.join(" + "),
            decomposition.positivity()
        );
    }

    // Scanned thresholds versus the closed forms n(p-1) for nefness and
    // (n+1)(p-1) + 1 for ampleness.
    println!("\nthresholds (scan over d in -2..=40):");
    println!("  {:>2} {:>2} {:>9} {:>7} {:>11} {:>9}", "n", "p", "first nef", "n(p-1)", "first ample", "bound+1");
    for n in 1..=3u64 {
        for p in [2u64, 3, 5, 7] {
            if p <= n {
                continue;
            }
            let scan = threshold_scan(n, p, -2, 40).unwrap();
            println!(
                "  {n:>2} {p:>2} {:>9} {:>7} {:>11} {:>9}",
                scan.min_nef_d,
                n * (p - 1),
                scan.min_ample_d,
                (n + 1) * (p - 1) + 1
            );
        }
    }
}
