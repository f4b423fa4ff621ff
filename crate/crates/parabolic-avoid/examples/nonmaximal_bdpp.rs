//! The algebraic generating function for the nonmaximal parabolic
//! subgroup P_{1,1,k-2}, compared against brute force. The published
//! formula's low-order coefficients differ from the avoidance counts, so
//! the first index of agreement is reported per k.
//!
//! Run with: `cargo run --example nonmaximal_bdpp`

use parabolic_avoid::gf::bdpp_first_agreement;

fn main() {
    for k in [3usize, 4, 5] {
        let cmp = bdpp_first_agreement(k, 9).unwrap();
        println!("k = {k}:");
        println!(
            "  formula     {}",
            cmp.formula
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        );
        println!(
            "  brute force {}",
            cmp.brute_force
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        );
        match cmp.first_agreement {
            Some(i) => println!("  agreement from n = {i}\n"),
            None => println!("  no agreement within range\n"),
        }
    }
}
