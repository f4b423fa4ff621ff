//! Run the identity verification sweeps and summarize the reports.
//!
//! Run with: `cargo run --example verification`

use parabolic_avoid::verify;

fn main() {
    let sweeps = [
        ("main_theorem", verify::suite_main_theorem(4, 7)),
        ("a_independence", verify::suite_a_independence(4, 7)),
        ("lemma22", verify::suite_lemma22(4, 7)),
        ("theorem23", verify::suite_theorem23(4, 7)),
        ("lemma24", verify::suite_lemma24(4, 7)),
        ("theorem25", verify::suite_theorem25(4, 7)),
        ("lemma26", verify::suite_lemma26(6)),
        ("rook_laguerre", verify::suite_rook_laguerre(6)),
        ("bdpp", verify::suite_bdpp(7)),
    ];
    for (name, report) in sweeps {
        let report = report.unwrap();
        println!(
            "{name:<15} {:>5} cases  {:>3} failures  {}",
            report.total,
            report.failures,
            if report.passed { "ok" } else { "FAILED" }
        );
        for note in &report.notes {
            println!("                note: {note}");
        }
        for cx in report.counterexamples().take(3) {
            println!("                counterexample: {cx:?}");
        }
    }
}
