//! Volumes, dihedral angles, deficits, and the curvature action from
//! squared edge lengths alone.

use std::f64::consts::PI;

use simplicial_measure::fixtures;
use simplicial_measure::geometry::{
    curvature_action, deficit_angle, hyperdihedral_angle, simplex_volume, ActionParams,
    SquaredLengthMap,
};

fn main() {
    let complex = fixtures::boundary_of_5_simplex();
    let lengths = SquaredLengthMap::uniform(&complex, 1.0);

    // Regular unit 4-simplex: volume sqrt(5)/96, hyperdihedral angle
    // arccos(1/4) at each triangle.
    let simplex = complex.four_simplices().first().unwrap();
    let triangle = simplex.faces(2).into_iter().next().unwrap();
    println!("unit regular 4-simplex {simplex}:");
    println!(
        "  volume          = {:.12}  (sqrt(5)/96 = {:.12})",
        simplex_volume(simplex, &lengths).unwrap(),
        5.0f64.sqrt() / 96.0
    );
    println!(
        "  dihedral at {} = {:.12}  (arccos(1/4) = {:.12})",
        triangle,
        hyperdihedral_angle(simplex, &triangle, &lengths).unwrap(),
        0.25f64.acos()
    );

    // Every triangle of the closed fixture has a 3-cycle star, so its
    // deficit is 2 pi minus three equal angles.
    let deficit = deficit_angle(&complex, &triangle, &lengths).unwrap();
    println!(
        "  deficit         = {:.12}  (2pi - 3 arccos(1/4) = {:.12})",
        deficit,
        2.0 * PI - 3.0 * 0.25f64.acos()
    );

    // Global action with coefficient 1: 20 triangles, each of area
    // sqrt(3)/4, carrying the same deficit.
    let params = ActionParams::new(1.0)
        .and_then(|p| p.with_coefficient(1.0))
        .unwrap();
    let action = curvature_action(&complex, &lengths, &params).unwrap();
    let expected = 20.0 * (3.0f64.sqrt() / 4.0) * (2.0 * PI - 3.0 * 0.25f64.acos());
    println!("\ncurvature action  = {action:.12}");
    println!("closed form       = {expected:.12}");

    // The subdivided flat 4-simplex has interior triangles but no
    // curvature: all deficits vanish.
    let (flat, flat_lengths) = fixtures::flat_subdivision();
    let max_deficit = flat
        .faces(2)
        .filter_map(|t| deficit_angle(&flat, t, &flat_lengths).ok())
        .fold(0.0f64, |acc, d| acc.max(d.abs()));
    println!("\nflat subdivision: max |deficit| = {max_deficit:.3e}");
}
