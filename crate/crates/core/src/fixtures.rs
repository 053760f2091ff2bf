//! Reference complexes used by tests, examples, and the `gen` subcommand.

use std::collections::BTreeMap;

use crate::complex::{ComplexError, Simplex, SimplicialComplex};
use crate::geometry::SquaredLengthMap;

/// The boundary of a 5-simplex on vertices 0..=5: six 4-simplices, each
/// omitting one vertex. Closed, with every triangle star a 3-cycle.
pub fn boundary_of_5_simplex() -> SimplicialComplex {
    let tuples: Vec<[u32; 5]> = (0u32..6)
        .map(|omit| {
            let mut t = [0u32; 5];
            for (slot, v) in t.iter_mut().zip((0u32..6).filter(|&v| v != omit)) {
                *slot = v;
            }
            t
        })
        .collect();
    SimplicialComplex::build(&tuples).expect("boundary of 5-simplex is well formed")
}

/// Two 4-simplices {0..4} and {1..5} glued along the 3-face {1,2,3,4}.
pub fn glued_pair() -> SimplicialComplex {
    SimplicialComplex::build(&[[0, 1, 2, 3, 4], [1, 2, 3, 4, 5]])
        .expect("glued pair is well formed")
}

/// A linear chain of k 4-simplices: simplex i spans vertices i..=i+4, glued
/// to its neighbor along a 3-face. Every interior-face constraint is
/// independent (each edge-star graph is a forest).
pub fn chain(k: usize) -> Result<SimplicialComplex, ComplexError> {
    if k == 0 {
        return Err(ComplexError::EmptyComplex);
    }
    let tuples: Vec<[u32; 5]> = (0..k as u32)
        .map(|i| [i, i + 1, i + 2, i + 3, i + 4])
        .collect();
    SimplicialComplex::build(&tuples)
}

/// A single 4-simplex subdivided by one interior point: the flat complex on
/// vertices {0..=4, 5=p} where p sits inside {0,1,2,3,4}, together with the
/// exact squared lengths of the flat embedding
///
///   v0 = origin, v_i = e_i (i = 1..4), p = (0.2, 0.2, 0.2, 0.2).
///
/// Every interior triangle has zero deficit angle at these lengths.
pub fn flat_subdivision() -> (SimplicialComplex, SquaredLengthMap) {
    // Five 4-simplices: p replaces each vertex of {0,1,2,3,4} in turn.
    let tuples: Vec<[u32; 5]> = (0u32..5)
        .map(|omit| {
            let mut t = [0u32; 5];
            for (slot, v) in t.iter_mut().zip((0u32..5).filter(|&v| v != omit)) {
                *slot = v;
            }
            t[4] = 5;
            t
        })
        .collect();
    let complex = SimplicialComplex::build(&tuples).expect("subdivision is well formed");

    let coords = |v: u32| -> [f64; 4] {
        match v {
            0 => [0.0; 4],
            1 => [1.0, 0.0, 0.0, 0.0],
            2 => [0.0, 1.0, 0.0, 0.0],
            3 => [0.0, 0.0, 1.0, 0.0],
            4 => [0.0, 0.0, 0.0, 1.0],
            _ => [0.2; 4],
        }
    };
    let mut lengths = BTreeMap::new();
    for edge in complex.faces(1) {
        let [a, b] = [edge.vertices()[0].0, edge.vertices()[1].0];
        let (pa, pb) = (coords(a), coords(b));
        let d2: f64 = pa.iter().zip(&pb).map(|(x, y)| (x - y) * (x - y)).sum();
        lengths.insert(edge.clone(), d2);
    }
    let map = SquaredLengthMap::from_entries(lengths).expect("flat lengths are positive");
    (complex, map)
}

/// Unit-length squared-length assignment for every edge of a complex.
pub fn unit_lengths(complex: &SimplicialComplex) -> SquaredLengthMap {
    SquaredLengthMap::uniform(complex, 1.0)
}

/// A non-pseudomanifold complex: three 4-simplices sharing a 3-face.
pub fn overfull_fan() -> SimplicialComplex {
    SimplicialComplex::build(&[[0, 1, 2, 3, 4], [0, 1, 2, 3, 5], [0, 1, 2, 3, 6]])
        .expect("lattice itself builds fine")
}

/// The 4-simplex with squared lengths ℓ²(0,i) = 1, ℓ²(i,j) = 2: the corner
/// simplex of the unit hypercube (vertex 0 at the origin, others at e_i).
pub fn right_corner_simplex() -> (Simplex, SquaredLengthMap) {
    let simplex = Simplex::new(0u32..5).unwrap();
    let mut lengths = BTreeMap::new();
    for edge in simplex.edges() {
        let [a, b] = [edge.vertices()[0].0, edge.vertices()[1].0];
        let sq = if a == 0 || b == 0 { 1.0 } else { 2.0 };
        lengths.insert(edge, sq);
    }
    (
        simplex,
        SquaredLengthMap::from_entries(lengths).unwrap(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_counts() {
        for k in 1..=5 {
            let complex = chain(k).unwrap();
            assert_eq!(complex.face_count(4), k);
            assert_eq!(complex.face_count(0), k + 4);
            assert_eq!(complex.face_count(1), 4 * k + 6);
            assert_eq!(complex.interior_three_faces().count(), k - 1);
        }
        assert!(chain(0).is_err());
    }

    #[test]
    fn flat_subdivision_counts() {
        let (complex, lengths) = flat_subdivision();
        assert_eq!(complex.face_count(4), 5);
        assert_eq!(complex.face_count(0), 6);
        // All 3-faces of the original simplex stay boundary; the five cones
        // over its 2-faces are interior.
        assert_eq!(complex.boundary_three_faces().count(), 5);
        assert_eq!(complex.interior_three_faces().count(), 10);
        assert!(complex.validate().is_valid());
        // Interior edges {i,p} carry the embedding distances.
        let p_edge = Simplex::new([0u32, 5]).unwrap();
        assert!((lengths.get(&p_edge).unwrap() - 0.16).abs() < 1e-15);
        let p_edge = Simplex::new([1u32, 5]).unwrap();
        assert!((lengths.get(&p_edge).unwrap() - 0.76).abs() < 1e-15);
    }
}
