//! Continuity constraints between per-simplex edge lengths: exact rank,
//! spanning-forest selection, and the delta-of-zero exponents.

use simplicial_measure::constraints::{
    constraint_rank, delta_zero_ledger, enumerate_constraints, select_kept, ConstraintMatrix,
};
use simplicial_measure::fixtures;

fn main() {
    let complex = fixtures::boundary_of_5_simplex();
    let constraints = enumerate_constraints(&complex);
    let matrix = ConstraintMatrix::from_constraints(&complex, &constraints).unwrap();

    // Six constraints per interior 3-face, one variable per (simplex, edge)
    // incidence. Half the constraints are redundant here.
    println!("boundary of the 5-simplex:");
    println!("  extended variables = {}", matrix.variables.len());
    println!("  constraints        = {}", constraints.len());
    println!("  exact rank         = {}", constraint_rank(&matrix));
    println!("  kernel dimension   = {} (= number of edges)", matrix.kernel_dimension());

    // The kept set is one spanning forest per edge-star graph; everything
    // off the forests is implied by cycles.
    let kept = select_kept(&complex);
    println!("  kept = {}, redundant = {}", kept.kept.len(), kept.redundant.len());
    let forest = kept.forests.values().next().unwrap();
    println!(
        "  forest of edge {}: {} of {} faces kept",
        forest.edge,
        forest.kept_faces.len(),
        forest.nodes * (forest.nodes - 1) / 2
    );

    // Redundant deltas square to deltas-of-zero; regularized, they become
    // volume powers. On a closed complex the pattern is uniform.
    let ledger = delta_zero_ledger(&complex);
    println!("\ndelta-of-zero ledger:");
    println!(
        "  3-faces: {} entries, exponent +4",
        ledger.three_face_exponents.len()
    );
    println!(
        "  triangles: {} entries, exponent -3",
        ledger.triangle_exponents.len()
    );
    println!(
        "  edges: {} entries, exponent +2 (excess 1 each)",
        ledger.edge_exponents.len()
    );

    // Open complexes have no closed triangle stars and no redundancy at
    // all: every constraint is kept.
    let chain = fixtures::chain(4).unwrap();
    let kept = select_kept(&chain);
    println!(
        "\nchain of 4: {} constraints, all kept = {}",
        kept.kept.len() + kept.redundant.len(),
        kept.redundant.is_empty()
    );
}
