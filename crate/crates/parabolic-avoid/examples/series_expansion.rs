//! Expand the rational generating function and export the coefficient
//! sequence as an OEIS-style b-file.
//!
//! Run with: `cargo run --example series_expansion`

use parabolic_avoid::gf::{gf_coefficients, main_theorem_gf, main_theorem_gf_alt};
use parabolic_avoid::output::format_bfile;

fn main() {
    let (l, m) = (2, 3);
    let gf = main_theorem_gf(l, m).unwrap();
    let series = gf_coefficients(&gf, 12).unwrap();
    let values = series.as_integers().unwrap();

    println!("b-file for the (l, m) = ({l}, {m}) avoidance sequence:");
    print!("{}", format_bfile(0, &values));

    // The two published forms of the generating function expand
    // identically.
    let alt = gf_coefficients(&main_theorem_gf_alt(l, m).unwrap(), 12).unwrap();
    assert_eq!(series, alt);
    println!("\nboth published forms agree through order 12");
}
