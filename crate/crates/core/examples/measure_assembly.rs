//! Assemble the measure report and evaluate its volume-power factor.

use simplicial_measure::constraints::{delta_zero_ledger, select_kept};
use simplicial_measure::fixtures;
use simplicial_measure::geometry::SquaredLengthMap;
use simplicial_measure::measure::{
    assemble_measure_report, evaluate_volume_factor, LocalMeasureSpec,
};

fn main() {
    let complex = fixtures::boundary_of_5_simplex();
    let kept = select_kept(&complex);
    let ledger = delta_zero_ledger(&complex);
    let report =
        assemble_measure_report(&complex, &kept, &ledger, LocalMeasureSpec::default()).unwrap();

    println!("closed fixture measure:");
    println!("  local measure  = {}", report.local_measure);
    println!("  regularization = {}", report.regularization);
    println!(
        "  exponent sums by dimension: 3-faces {}, triangles {}, edges {}",
        report.exponent_sum(3),
        report.exponent_sum(2),
        report.exponent_sum(1)
    );
    println!("  kept deltas    = {}", report.kept_deltas.len());

    // The factor in the log domain at unit squared lengths: sixty unit
    // tetrahedra to the +1, sixty unit triangles to the -1, edges drop out.
    let unit = SquaredLengthMap::uniform(&complex, 1.0);
    let value = evaluate_volume_factor(&report, &unit).unwrap();
    println!("\nlog volume factor at unit lengths = {value:.12}");
    let expected = 60.0 * (2.0f64.sqrt() / 12.0).ln() - 60.0 * (3.0f64.sqrt() / 4.0).ln();
    println!("closed form                       = {expected:.12}");

    // Scaling all squared lengths by lambda shifts the log factor by
    // 45 ln(lambda): the factor scales like a power of the overall scale.
    for lambda in [0.5, 2.0] {
        let scaled = evaluate_volume_factor(&report, &unit.scaled(lambda)).unwrap();
        println!(
            "lambda = {lambda}: shift = {:.12} (45 ln lambda = {:.12})",
            scaled - value,
            45.0 * lambda.ln()
        );
    }

    // An open complex keeps only the jump factor of its interior face and
    // records the boundary in the notes.
    let pair = fixtures::glued_pair();
    let kept = select_kept(&pair);
    let ledger = delta_zero_ledger(&pair);
    let report =
        assemble_measure_report(&pair, &kept, &ledger, LocalMeasureSpec::default()).unwrap();
    println!("\nglued pair:");
    for (simplex, exponent) in &report.volume_exponents {
        println!("  volume exponent {simplex}: {exponent:+}");
    }
    println!("  kept deltas = {}", report.kept_deltas.len());
    for note in &report.notes {
        println!("  note: {note}");
    }
}
