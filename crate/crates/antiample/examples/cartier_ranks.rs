//! Rank tables of the Cartier complex: closed forms Z^i, exact forms
//! B^i, and the pushforward F_* Omega^i that contains them both.
//!
//! Run with: cargo run --example cartier_ranks

use antiample::cartier::{cartier_rank_table, verify_cartier_consistency};

fn main() {
    for (n, p) in [(1u64, 2u64), (2, 3), (3, 2), (4, 5)] {
        let table = cartier_rank_table(n, p).unwrap();
        println!("n = {n}, p = {p}  (consistent: {})", verify_cartier_consistency(&table));
        println!("  {:>3} {:>12} {:>12} {:>12}", "i", "F*Omega^i", "Z^i", "B^i");
        for (i, row) in table.rows.iter().enumerate() {
            println!(
                "  {i:>3} {:>12} {:>12} {:>12}",
                row.pushforward_forms.to_string(),
                row.closed_forms.to_string(),
                row.exact_forms.to_string()
            );
        }
        println!(
            "  Frobenius cokernel rank p^n - 1 = {}\n",
            table.frobenius_cokernel_rank()
        );
    }
}
