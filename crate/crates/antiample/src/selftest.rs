//! The oracle suite: every gate the build must pass, runnable at any
//! time via the `selftest` CLI subcommand or the acceptance test target.
//!
//! Each check pits a fast implementation against an independent route:
//! brute-force enumeration for truncated-power dimensions, direct
//! monomial counts for Cartier ranks, the monomial-counting projective
//! decomposition against the toric residue algorithm, an
//! Euler-characteristic recursion and Serre-duality symmetry against the
//! closed cohomology formulas, and pinned classification verdicts. The
//! oracles here deliberately re-derive their answers from scratch; they
//! share no code path with the implementations they audit.

use crate::bott::{bott_dim, cm_regular, BottQuery};
use crate::cartier::{cartier_rank_table, verify_cartier_consistency};
use crate::combinatorics::{big_pow, binomial, binomial_poly};
use crate::obstruction::{
    ci_verdict, fano3_verdict, CompleteIntersectionInput, FanoThreefoldKind,
};
use crate::projective::{fstar_decompose_pn, threshold_scan};
use crate::toric::{bx_dual_ample, frobenius_pushforward, Fan, ToricDivisor};
use crate::trunc_sym::{enumerate_basis, trunc_dim, TruncParams};
use crate::verdict::{Ampleness, Positivity};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;
use std::time::Instant;

/// Result of one acceptance check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub criterion: u8,
    pub name: &'static str,
    pub passed: bool,
    pub cases: u64,
    /// First few mismatches, empty on success.
    pub failures: Vec<String>,
    pub millis: u128,
}

impl CheckOutcome {
    fn finish(
        criterion: u8,
        name: &'static str,
        started: Instant,
        cases: u64,
        mut failures: Vec<String>,
    ) -> Self {
        let passed = failures.is_empty();
        failures.truncate(8);
        CheckOutcome { criterion, name, passed, cases, failures, millis: started.elapsed().as_millis() }
    }
}

/// Iterate over the box {0..bound}^parts, calling `visit` on each point.
fn walk_box(parts: usize, bound: u64, mut visit: impl FnMut(&[u64])) {
    let mut point = vec![0u64; parts];
    loop {
        visit(&point);
        let mut k = 0;
        while k < parts {
            point[k] += 1;
            if point[k] <= bound {
                break;
            }
            point[k] = 0;
            k += 1;
        }
        if k == parts {
            break;
        }
    }
}

/// Criterion 1: truncated-power dimensions against brute enumeration,
/// the box-count identity, and the one-dimensional top power.
pub fn trunc_box_identity() -> CheckOutcome {
    let started = Instant::now();
    let mut cases = 0;
    let mut failures = Vec::new();
    for c in 1..=4u64 {
        for p in [2u64, 3, 5] {
            let top = c * (p - 1);
            // Independent census of the whole box, sliced by coordinate sum.
            let mut by_sum: BTreeMap<u64, u64> = BTreeMap::new();
            walk_box(c as usize, p - 1, |point| {
                *by_sum.entry(point.iter().sum()).or_default() += 1;
            });
            let mut total = BigUint::zero();
            for l in 0..=top + 1 {
                cases += 1;
                let params = TruncParams::new(c, p, l).unwrap();
                let dim = trunc_dim(&params);
                let counted = by_sum.get(&l).copied().unwrap_or(0);
                if dim != BigUint::from(counted) {
                    failures.push(format!("dim mismatch at c={c} p={p} l={l}: {dim} vs {counted}"));
                }
                if BigUint::from(enumerate_basis(&params).len()) != dim {
                    failures.push(format!("basis length mismatch at c={c} p={p} l={l}"));
                }
                total += dim;
            }
            if total != big_pow(p, c) {
                failures.push(format!("box count failed at c={c} p={p}: {total}"));
            }
            let top_dim = trunc_dim(&TruncParams::new(c, p, top).unwrap());
            if top_dim != BigUint::from(1u32) {
                failures.push(format!("top power not a line at c={c} p={p}: {top_dim}"));
            }
        }
    }
    CheckOutcome::finish(1, "truncated-power box identity", started, cases, failures)
}

/// Criterion 2: Cartier rank tables satisfy the recursion and the
/// cokernel rank matches the independent monomial count.
pub fn cartier_rank_grid() -> CheckOutcome {
    let started = Instant::now();
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 1..=5u64 {
        for p in [2u64, 3, 5, 7] {
            cases += 1;
            let table = cartier_rank_table(n, p).unwrap();
            if !verify_cartier_consistency(&table) {
                failures.push(format!("inconsistent table at n={n} p={p}"));
            }
            // Monomial oracle: nonzero exponent vectors in [0, p-1]^n.
            let mut count = 0u64;
            walk_box(n as usize, p - 1, |point| {
                if point.iter().any(|&a| a != 0) {
                    count += 1;
                }
            });
            if table.frobenius_cokernel_rank() != &BigUint::from(count) {
                failures.push(format!(
                    "cokernel rank at n={n} p={p}: {} vs monomial count {count}",
                    table.frobenius_cokernel_rank()
                ));
            }
        }
    }
    CheckOutcome::finish(2, "Cartier rank recursion and cokernel rank", started, cases, failures)
}

/// Twist of a summand divisor on the standard P^n fan, verified up to
/// linear equivalence rather than read off blindly.
fn pn_twist(fan: &Fan, divisor: &ToricDivisor) -> Result<i64, String> {
    let twist = divisor.coefficient_sum();
    let mut representative = ToricDivisor::zero(fan.num_rays());
    representative.coeffs[0] = twist;
    match fan.linearly_equivalent(divisor, &representative) {
        Ok(true) => Ok(twist),
        Ok(false) => Err(format!("summand {divisor} is not equivalent to twist {twist}")),
        Err(e) => Err(e.to_string()),
    }
}

/// Criterion 3: the toric residue decomposition of F_* O on the
/// standard P^n fan matches the monomial-count decomposition.
pub fn toric_projective_agreement() -> CheckOutcome {
    let started = Instant::now();
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 1..=3u64 {
        let fan = Fan::projective_space(n as usize);
        for p in [2u64, 3, 5] {
            cases += 1;
            let zero = ToricDivisor::zero(fan.num_rays());
            let toric_side = frobenius_pushforward(&fan, &zero, p).unwrap();
            let mut toric_twists: BTreeMap<i64, BigUint> = BTreeMap::new();
            for (summand, mult) in toric_side.iter() {
                match pn_twist(&fan, summand) {
                    Ok(twist) => {
                        *toric_twists.entry(twist).or_default() += BigUint::from(mult);
                    }
                    Err(e) => failures.push(format!("n={n} p={p}: {e}")),
                }
            }
            let projective_side = fstar_decompose_pn(n, p, 0).unwrap();
            if toric_twists != projective_side.summands {
                failures.push(format!(
                    "twist multisets differ at n={n} p={p}: {toric_twists:?} vs {:?}",
                    projective_side.summands
                ));
            }
        }
    }
    CheckOutcome::finish(3, "toric vs projective decomposition of F_*O", started, cases, failures)
}

/// Criterion 4: dual-cokernel ampleness verdicts across the fan zoo.
pub fn toric_cokernel_verdicts() -> CheckOutcome {
    let started = Instant::now();
    let mut cases = 0;
    let mut failures = Vec::new();
    let ample_fans: Vec<(&str, Fan)> = vec![
        ("P1", Fan::projective_space(1)),
        ("P2", Fan::projective_space(2)),
        ("P3", Fan::projective_space(3)),
    ];
    for (name, fan) in &ample_fans {
        for p in [2u64, 3, 5] {
            cases += 1;
            let verdict = bx_dual_ample(fan, p).unwrap();
            if verdict.value != Ampleness::Ample {
                failures.push(format!("{name} at p={p}: expected Ample, got {}", verdict.value));
            }
        }
    }
    let not_ample_fans: Vec<(&str, Fan)> = vec![
        ("P1xP1", Fan::p1_cross_p1()),
        ("Hirzebruch-1", Fan::hirzebruch(1)),
        ("Hirzebruch-2", Fan::hirzebruch(2)),
        ("Blowup-P2", Fan::blowup_p2_at_point()),
    ];
    for (name, fan) in &not_ample_fans {
        for p in [2u64, 3] {
            cases += 1;
            let verdict = bx_dual_ample(fan, p).unwrap();
            if verdict.value != Ampleness::NotAmple {
                failures.push(format!(
                    "{name} at p={p}: expected NotAmple, got {}",
                    verdict.value
                ));
            }
            if verdict.value == Ampleness::NotAmple && verdict.witness.is_none() {
                failures.push(format!("{name} at p={p}: NotAmple verdict lacks a witness"));
            }
        }
    }
    CheckOutcome::finish(4, "dual-cokernel verdicts on the fan zoo", started, cases, failures)
}

/// Criterion 5: nef thresholds of F_* O(d) on P^n equal n(p-1) when
/// p > n, and no ample verdict at or below (n+1)(p-1).
pub fn pushforward_thresholds() -> CheckOutcome {
    let started = Instant::now();
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 1..=3u64 {
        for p in [2u64, 3, 5, 7] {
            if p <= n {
                continue;
            }
            cases += 1;
            let ample_bound = (n as i64 + 1) * (p as i64 - 1);
            let scan = match threshold_scan(n, p, -2, ample_bound + p as i64 + 2) {
                Ok(scan) => scan,
                Err(e) => {
                    failures.push(format!("scan failed at n={n} p={p}: {e}"));
                    continue;
                }
            };
            let expected_nef = n as i64 * (p as i64 - 1);
            if scan.min_nef_d != expected_nef {
                failures.push(format!(
                    "nef threshold at n={n} p={p}: {} vs expected {expected_nef}",
                    scan.min_nef_d
                ));
            }
            if scan.min_ample_d <= ample_bound {
                failures.push(format!(
                    "ample verdict too early at n={n} p={p}: d={} <= {ample_bound}",
                    scan.min_ample_d
                ));
            }
            // Sweep the forbidden region explicitly.
            for d in -2..=ample_bound {
                cases += 1;
                let positivity = fstar_decompose_pn(n, p, d).unwrap().positivity();
                if positivity == Positivity::Ample {
                    failures.push(format!("ample at n={n} p={p} d={d} <= {ample_bound}"));
                }
            }
        }
    }
    CheckOutcome::finish(5, "pushforward nef/ample thresholds", started, cases, failures)
}

/// chi(Omega^k(t)) by the Euler-sequence recursion; independent of the
/// closed cohomology formulas.
fn chi_recursion(n: u64, k: u64, t: i64) -> BigInt {
    if k == 0 {
        return binomial_poly(t, n);
    }
    BigInt::from(binomial(n as i64 + 1, k as i64)) * binomial_poly(t - k as i64, n)
        - chi_recursion(n, k - 1, t)
}

/// Criterion 6: closed cohomology formulas pass the recursion oracle,
/// Serre-duality symmetry, and the regularity grid.
pub fn bott_oracle_gate() -> CheckOutcome {
    let started = Instant::now();
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 1..=5u64 {
        for k in 0..=n {
            for t in -12..=12i64 {
                cases += 1;
                let mut alternating = BigInt::zero();
                for i in 0..=n {
                    let dim = BigInt::from(bott_dim(&BottQuery::new(n, k, t, i).unwrap()));
                    if i % 2 == 0 {
                        alternating += dim;
                    } else {
                        alternating -= dim;
                    }
                }
                let expected = chi_recursion(n, k, t);
                if alternating != expected {
                    failures.push(format!(
                        "chi mismatch at n={n} k={k} t={t}: {alternating} vs {expected}"
                    ));
                }
                for i in 0..=n {
                    let here = bott_dim(&BottQuery::new(n, k, t, i).unwrap());
                    let dual = bott_dim(&BottQuery::new(n, n - k, -t, n - i).unwrap());
                    if here != dual {
                        failures.push(format!("duality mismatch at n={n} k={k} t={t} i={i}"));
                    }
                }
            }
        }
    }
    for n in 1..=6u64 {
        for k in 0..=n {
            cases += 1;
            let cert = cm_regular(n, k).unwrap();
            if !cert.regular {
                failures.push(format!("regularity failed at n={n} k={k}"));
            }
        }
    }
    CheckOutcome::finish(6, "cohomology oracle gate and regularity", started, cases, failures)
}

/// Criterion 7: the pinned obstruction verdicts.
pub fn obstruction_statements() -> CheckOutcome {
    let started = Instant::now();
    let mut failures = Vec::new();
    let ci_cases: Vec<(&str, u64, Vec<u64>, u64, Ampleness)> = vec![
        ("cubic surface in P^3", 3, vec![3], 5, Ampleness::NotAmple),
        ("cubic threefold in P^4", 4, vec![3], 5, Ampleness::NotAmple),
        ("quadric threefold at p=3", 4, vec![2], 3, Ampleness::Ample),
    ];
    for (name, n, degrees, p, expected) in &ci_cases {
        let input = CompleteIntersectionInput::new(*n, degrees.clone(), *p).unwrap();
        let verdict = ci_verdict(&input);
        if verdict.value != *expected {
            failures.push(format!("{name}: expected {expected}, got {}", verdict.value));
        }
        if verdict.value == Ampleness::NotAmple && verdict.trace.is_empty() {
            failures.push(format!("{name}: NotAmple without a trace"));
        }
    }
    let fano_cases: Vec<(&str, FanoThreefoldKind, u64, Ampleness)> = vec![
        ("quadric threefold p=2", FanoThreefoldKind::Quadric, 2, Ampleness::Unknown),
        ("quadric threefold p=3", FanoThreefoldKind::Quadric, 3, Ampleness::Ample),
        ("P^3", FanoThreefoldKind::P3, 2, Ampleness::Ample),
        ("other Fano threefold", FanoThreefoldKind::Other, 5, Ampleness::NotAmple),
    ];
    for (name, kind, p, expected) in &fano_cases {
        let verdict = fano3_verdict(*kind, *p, None);
        if verdict.value != *expected {
            failures.push(format!("{name}: expected {expected}, got {}", verdict.value));
        }
    }
    let cases = (ci_cases.len() + fano_cases.len()) as u64;
    CheckOutcome::finish(7, "pinned obstruction verdicts", started, cases, failures)
}

/// Criterion 8: negating the twists of F_* O(d) gives the twists of
/// F_* O((n+1)(p-1) - d).
pub fn duality_twist_multisets() -> CheckOutcome {
    let started = Instant::now();
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 1..=3u64 {
        for p in [2u64, 3, 5] {
            for d in -5..=15i64 {
                cases += 1;
                let here = fstar_decompose_pn(n, p, d).unwrap();
                let dual_d = (n as i64 + 1) * (p as i64 - 1) - d;
                let there = fstar_decompose_pn(n, p, dual_d).unwrap();
                let negated: BTreeMap<i64, BigUint> =
                    here.summands.iter().map(|(&m, mult)| (-m, mult.clone())).collect();
                if negated != there.summands {
                    failures.push(format!("duality failed at n={n} p={p} d={d}"));
                }
            }
        }
    }
    CheckOutcome::finish(8, "duality of twist multisets", started, cases, failures)
}

/// Run the whole suite in criterion order.
pub fn run_all() -> Vec<CheckOutcome> {
    vec![
        trunc_box_identity(),
        cartier_rank_grid(),
        toric_projective_agreement(),
        toric_cokernel_verdicts(),
        pushforward_thresholds(),
        bott_oracle_gate(),
        obstruction_statements(),
        duality_twist_multisets(),
    ]
}
