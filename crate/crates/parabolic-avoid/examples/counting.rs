//! Count avoiders of coset patterns three independent ways: brute force,
//! generating-function coefficients, and the linear recurrence.
//!
//! Run with: `cargo run --example counting`

use parabolic_avoid::counting::f_fast;
use parabolic_avoid::gf::{gf_coefficients, main_theorem_gf};
use parabolic_avoid::perm::{enumerate_avoiders, parabolic_coset, AvoidanceClass};

fn main() {
    let (l, m) = (2, 2);
    let gf = main_theorem_gf(l, m).unwrap();
    println!("generating function for (l, m) = ({l}, {m}):");
    println!("  ({}) / ({})", gf.numerator, gf.denominator);
    let series = gf_coefficients(&gf, 8).unwrap();

    println!("\n  n  brute-force  gf-coefficient  recurrence");
    for n in 0..=8usize {
        let cls = AvoidanceClass::new(l, m, 0).unwrap();
        let coset = parabolic_coset(&cls).unwrap();
        let brute = enumerate_avoiders(n, &coset, Default::default());
        let coeff = series.coeff(n);
        let fast = f_fast(l, m, n).unwrap();
        println!("  {n}  {brute:>11}  {coeff:>14}  {fast:>10}");
    }

    // Far beyond brute-force reach the recurrence is still instant.
    let big = f_fast(3, 3, 200).unwrap();
    println!("\nf_{{3,3}}(200) = {big}");
}
