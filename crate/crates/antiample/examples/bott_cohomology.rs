//! Cohomology of twisted differential forms on projective space, the
//! regularity certificate for Omega^k, and the positivity ranges for
//! exterior powers of tangent bundles that follow.
//!
//! Run with: cargo run --example bott_cohomology

use antiample::bott::{
    bott_dim, cm_regular, wedge_t_range_hypersurface, wedge_t_range_index, BottQuery,
};

fn main() {
    // h^i(P^3, Omega^1(j)): nonzero only for sections at j > 1, the
    // lone middle class at j = 0, and top cohomology at j < -2.
    let n = 3u64;
    println!("h^i(P^{n}, Omega^1(j)):");
    print!("  j\\i ");
    for i in 0..=n {
        print!("{i:>6}");
    }
    println!();
    for j in -6..=4i64 {
        print!("  {j:>3} ");
        for i in 0..=n {
            let dim = bott_dim(&BottQuery::new(n, 1, j, i).unwrap());
            print!("{:>6}", dim.to_string());
        }
        println!();
    }

    // The certificate behind global generation of Omega^k(k+1).
    let cert = cm_regular(4, 2).unwrap();
    println!("\nOmega^2 on P^4 is 3-regular: {}", cert.regular);
    for check in &cert.checks {
        println!("  h^{}(Omega^2({})) = {}", check.i, check.twist, check.dim);
    }

    // Positivity ranges for wedge^i T_X on hypersurfaces: ampleness
    // kicks in at i = d, nefness one step earlier.
    println!("\nwedge^i T_X on a degree-d hypersurface in P^n:");
    for (n, d) in [(4u64, 2u64), (3, 3), (5, 1), (5, 3)] {
        let r = wedge_t_range_hypersurface(n, d);
        let fmt = |lo: i64, hi: i64| {
            if lo > hi { "empty".to_string() } else { format!("[{lo}, {hi}]") }
        };
        println!(
            "  n = {n}, d = {d}: ample for i in {:<8} nef for i in {}",
            fmt(r.ample_lo, r.ample_hi),
            fmt(r.nef_lo, r.nef_hi)
        );
    }

    // The same ranges through the Fano index: a hypersurface of degree
    // d in P^n has index a = n + 1 - d, and the two parametrizations
    // agree.
    let by_degree = wedge_t_range_hypersurface(4, 2);
    let by_index = wedge_t_range_index(3, 3);
    assert_eq!(by_degree, by_index);
    println!("\ndegree and index parametrizations agree on the quadric threefold");
}
