//! Residue-class decompositions of F_* O(D) on smooth complete toric
//! varieties: every pushforward of a line bundle splits into p^dim line
//! bundles, computed here with exact floor arithmetic.
//!
//! Run with: cargo run --example frobenius_pushforward

use antiample::toric::{frobenius_cokernel, frobenius_pushforward};
use antiample::{Fan, ToricDivisor};

fn show(fan: &Fan, name: &str, divisor: &ToricDivisor, p: u64) {
    let decomposition = frobenius_pushforward(fan, divisor, p).unwrap();
    println!("F_* O(D) on {name} at p = {p}, D = {divisor}:");
    for (summand, mult) in decomposition.iter() {
        println!(
            "  {mult} x O(divisor {summand})   coefficient sum {}",
            summand.coefficient_sum()
        );
    }
    println!("  {} summands in total\n", decomposition.total_multiplicity());
}

fn main() {
    let p2 = Fan::projective_space(2);
    show(&p2, "P^2", &ToricDivisor::zero(3), 2);
    show(&p2, "P^2", &ToricDivisor::new(vec![3, 0, 0]), 2);

    let f1 = Fan::hirzebruch(1);
    show(&f1, "the Hirzebruch surface F_1", &ToricDivisor::zero(4), 3);

    // The cokernel drops the single trivial summand of F_* O.
    let cokernel = frobenius_cokernel(&p2, 3).unwrap();
    println!("Frobenius cokernel of P^2 at p = 3:");
    for (summand, mult) in cokernel.iter() {
        println!("  {mult} x O(divisor {summand})");
    }
    println!("  rank {} = p^2 - 1", cokernel.total_multiplicity());
}
