//! Build complexes, walk their face lattices, and validate structure.

use simplicial_measure::complex::SimplicialComplex;
use simplicial_measure::fixtures;

fn main() {
    // Two 4-simplices glued along the 3-face {1,2,3,4}.
    let pair = SimplicialComplex::build(&[[0, 1, 2, 3, 4], [1, 2, 3, 4, 5]]).unwrap();
    println!("glued pair:");
    for dim in 0..=4 {
        println!("  {}-faces: {}", dim, pair.face_count(dim));
    }
    println!(
        "  interior 3-faces: {}",
        pair.interior_three_faces().count()
    );
    println!("  boundary 3-faces: {}", pair.boundary_three_faces().count());

    // Stars and edge graphs on the closed fixture: every triangle star is a
    // 3-cycle and every edge-star graph is the complete graph on 4 nodes.
    let closed = fixtures::boundary_of_5_simplex();
    let triangle = closed.faces(2).next().unwrap();
    let star = closed.triangle_star(triangle).unwrap();
    println!("\nboundary-of-5-simplex:");
    println!(
        "  star of {}: {} simplices, closed = {}",
        triangle,
        star.len(),
        star.closed
    );
    let edge = closed.faces(1).next().unwrap();
    let graph = closed.edge_star_graph(edge).unwrap();
    println!(
        "  edge graph of {}: {} nodes, {} arcs, cycle rank {}",
        edge,
        graph.nodes.len(),
        graph.arcs.len(),
        graph.cycle_rank()
    );

    let report = closed.validate();
    println!(
        "  valid = {}, closed = {}, violations = {}",
        report.is_valid(),
        report.is_closed(),
        report.violations.len()
    );

    // A deliberately broken complex: three simplices sharing one 3-face.
    let overfull = fixtures::overfull_fan();
    let report = overfull.validate();
    println!("\noverfull fan: valid = {}", report.is_valid());
    for violation in report.violations.iter().take(3) {
        println!("  {violation}");
    }
}
