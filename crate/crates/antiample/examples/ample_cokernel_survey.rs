//! Survey of dual-cokernel ampleness across a zoo of smooth complete
//! toric surfaces and threefolds: projective spaces say yes, everything
//! with larger Picard rank says no, with an explicit blocking summand.
//!
//! Run with: cargo run --example ample_cokernel_survey

use antiample::toric::{bx_ample, bx_dual_ample};
use antiample::{Ampleness, Fan};

fn main() {
    let zoo: Vec<(&str, Fan)> = vec![
        ("P^1", Fan::projective_space(1)),
        ("P^2", Fan::projective_space(2)),
        ("P^3", Fan::projective_space(3)),
        ("P^1 x P^1", Fan::p1_cross_p1()),
        ("Hirzebruch F_1", Fan::hirzebruch(1)),
        ("Hirzebruch F_2", Fan::hirzebruch(2)),
        ("Hirzebruch F_3", Fan::hirzebruch(3)),
        ("Blowup of P^2 at a point", Fan::blowup_p2_at_point()),
    ];

    println!("{:<26} {:>3}  {:<10} witness", "variety", "p", "B_X^v ample");
    for (name, fan) in &zoo {
        for p in [2u64, 3, 5] {
            let verdict = bx_dual_ample(fan, p).unwrap();
            let witness = match &verdict.witness {
                Some(w) => format!("summand {} is dual-{}", w.summand, w.verdict.value),
                None => String::from("-"),
            };
            println!("{name:<26} {p:>3}  {:<10} {witness}", verdict.value.to_string());
        }
    }

    // The cokernel itself is never ample on a toric variety: its
    // decomposition always contains a non-ample summand.
    println!("\nis the cokernel itself ever ample here?");
    for (name, fan) in &zoo {
        let verdict = bx_ample(fan, 2).unwrap();
        assert_eq!(verdict.value, Ampleness::NotAmple);
        println!("  {name}: {}", verdict.value);
    }
}
