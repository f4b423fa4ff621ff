//! Materialize a coset of a maximal parabolic subgroup and stream the
//! permutations avoiding it.
//!
//! Run with: `cargo run --example enumeration`

use parabolic_avoid::perm::{avoiders, parabolic_coset, AvoidanceClass};

fn main() {
    let cls = AvoidanceClass::new(1, 2, 1).unwrap();
    let coset = parabolic_coset(&cls).unwrap();

    println!(
        "coset sigma^{} P_{{{},{}}} in S_{}:",
        cls.a(),
        cls.l(),
        cls.m(),
        cls.k()
    );
    for tau in coset.iter() {
        println!("  {tau}");
    }

    for n in 3..=4usize {
        let avs = avoiders(n, &coset);
        println!("\n{} avoiders in S_{n} (lexicographic):", avs.len());
        for pi in avs {
            println!("  {pi}");
        }
    }
}
