//! Dimensions and bases of truncated symmetric powers, and the graded
//! ranks of the filtration on I/I^[p] they assemble into.
//!
//! Run with: cargo run --example truncated_powers

use antiample::trunc_sym::{enumerate_basis, filtration_ranks, trunc_dim, TruncParams};

fn main() {
    // The dimension profile of T^l for a rank-3 space at p = 3: a
    // symmetric hump that starts at 1, ends at 1 (the top power is the
    // (p-1)-st power of the determinant), and sums to p^c = 27.
    let (c, p) = (3u64, 3u64);
    println!("dim T^l of a rank-{c} space in characteristic {p}:");
    let top = c * (p - 1);
    for l in 0..=top {
        let params = TruncParams::new(c, p, l).unwrap();
        println!("  l = {l:>2}: {}", trunc_dim(&params));
    }

    // The monomial basis in a small case, in lexicographic order.
    let params = TruncParams::new(2, 3, 3).unwrap();
    println!("\nbasis of T^3 for rank 2 at p = 3:");
    for vector in enumerate_basis(&params) {
        println!("  exponents {:?}", vector.0);
    }

    // A codimension-2 center inside a threefold at p = 2: the graded
    // ranks of the ideal filtration of I/I^[p], its total rank
    // p^c - 1, and the rank p^n - p^(n-c) of the pushforward.
    let table = filtration_ranks(2, 2, Some(3)).unwrap();
    println!("\nfiltration on I/I^[p], codimension 2 in a threefold, p = 2:");
    for (i, rank) in table.graded_ranks.iter().enumerate() {
        println!("  graded piece {i} = T^{}: rank {rank}", i + 1);
    }
    println!("  total rank: {}", table.total_rank);
    println!("  pushforward rank: {}", table.pushforward_rank.unwrap());
}
