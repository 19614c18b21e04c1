//! The obstruction rules at work: curves and linear subspaces of small
//! anticanonical degree, complete-intersection verdicts, and the Fano
//! threefold classification, each with its derivation trace.
//!
//! Run with: cargo run --example obstruction_verdicts

use antiample::obstruction::{
    ci_line_exists, ci_verdict, curve_obstruction, fano3_verdict, subspace_obstruction,
    CompleteIntersectionInput, CurveWitness, FanoThreefoldKind, SubspaceWitness,
};
use antiample::Verdict;

fn show(title: &str, verdict: &Verdict) {
    println!("{title}: {}", verdict.value);
    for step in &verdict.trace {
        println!("    [{}] {}", step.rule, step.detail);
    }
}

fn main() {
    println!("-- curve witnesses --");
    for degree in [1i64, 2, 3] {
        let verdict = curve_obstruction(&CurveWitness { anticanonical_degree: degree });
        show(&format!("rational curve with -K.C = {degree}"), &verdict);
    }

    println!("\n-- subspace witnesses --");
    for (r, degree) in [(2u64, 3i64), (2, 4)] {
        let verdict = subspace_obstruction(&SubspaceWitness { r, degree });
        show(&format!("linear P^{r} of anticanonical degree {degree}"), &verdict);
    }

    println!("\n-- complete intersections --");
    let cases = [
        ("cubic surface in P^3", 3u64, vec![3u64], 5u64),
        ("cubic threefold in P^4", 4, vec![3], 5),
        ("quadric threefold, p = 3", 4, vec![2], 3),
        ("quadric threefold, p = 2", 4, vec![2], 2),
        ("intersection of two quadrics in P^6", 6, vec![2, 2], 3),
        ("quintic threefold in P^4", 4, vec![5], 2),
    ];
    for (name, n, degrees, p) in cases {
        let input = CompleteIntersectionInput::new(n, degrees.clone(), p).unwrap();
        let line = ci_line_exists(n, &degrees);
        show(name, &ci_verdict(&input));
        println!(
            "    lines: Grassmannian dim {} vs incidence codim {} -> {}",
            line.grassmannian_dim,
            line.incidence_codim,
            if line.exists { "lines exist" } else { "no line guaranteed" }
        );
    }

    println!("\n-- Fano threefold classification --");
    for (kind, p) in [
        (FanoThreefoldKind::P3, 2u64),
        (FanoThreefoldKind::Quadric, 3),
        (FanoThreefoldKind::Quadric, 2),
        (FanoThreefoldKind::Other, 5),
    ] {
        show(&format!("{kind:?} at p = {p}"), &fano3_verdict(kind, p, None));
    }

    // A curve witness overrides whatever the classification would say.
    let witness = CurveWitness { anticanonical_degree: 1 };
    show(
        "Other with a supplied -K.C = 1 curve",
        &fano3_verdict(FanoThreefoldKind::Other, 7, Some(&witness)),
    );
}
