//! Growth-rate reports: certified interval for gamma, the dominant-pole
//! constant, and the Ismail-Li bound.
//!
//! Run with: `cargo run --example asymptotics`

use num::{BigInt, BigRational};
use parabolic_avoid::asympt::{growth_estimate, tail_ratio};

fn main() {
    let tol = BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000u64));
    println!("  l m      gamma          c    il_bound   f(40)/f(39)");
    for (l, m) in [(1, 1), (1, 3), (2, 2), (2, 3), (3, 3)] {
        let est = growth_estimate(l, m, &tol).unwrap();
        let ratio = tail_ratio(l, m, 40).unwrap();
        println!(
            "  {l} {m}  {:>9.6}  {:>9.6}  {:>9.6}  {:>12.6}",
            est.gamma, est.c, est.il_bound, ratio
        );
    }

    let est = growth_estimate(2, 2, &tol).unwrap();
    println!(
        "\ncertified interval for gamma(2,2): [{}, {}]",
        est.gamma_interval.0, est.gamma_interval.1
    );
}
