//! Simplicial complexes of 4-simplices: the face lattice plus the incidence,
//! star, and link queries that the geometry and constraint machinery runs on.
//!
//! Faces are stored canonically sorted and identified by their vertex set; no
//! orientation is tracked. A complex is immutable after [`SimplicialComplex::build`]
//! and safe to query concurrently.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use itertools::{Either, Itertools};
use thiserror::Error;

/// Label of a vertex within a complex.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Errors from building simplices and complexes or querying the lattice.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ComplexError {
    #[error("a simplex needs at least one vertex")]
    EmptySimplex,
    #[error("vertex {vertex} repeated in simplex")]
    RepeatedVertex { vertex: VertexId },
    #[error("simplex {simplex} has dimension {dim}, expected {expected}")]
    WrongDimension {
        simplex: Simplex,
        dim: usize,
        expected: usize,
    },
    #[error("dimension above 4 is not supported")]
    DimensionTooHigh,
    #[error("complex has no 4-simplices")]
    EmptyComplex,
    #[error("duplicate 4-simplex {simplex}")]
    DuplicateFourSimplex { simplex: Simplex },
    #[error("{simplex} is not a face of the complex")]
    MissingFace { simplex: Simplex },
    #[error("star of {triangle} is not a single fan or cycle")]
    StarNotFan { triangle: Simplex },
}

/// A simplex identified by its strictly increasing vertex tuple.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Simplex {
    vertices: Vec<VertexId>,
}

impl Simplex {
    /// Builds a simplex from vertices in any order. Vertices must be distinct
    /// and at most 5 (top dimension 4).
    pub fn new<I, V>(vertices: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let mut vs: Vec<VertexId> = vertices.into_iter().map(Into::into).collect();
        if vs.is_empty() {
            return Err(ComplexError::EmptySimplex);
        }
        vs.sort_unstable();
        for pair in vs.windows(2) {
            if pair[0] == pair[1] {
                return Err(ComplexError::RepeatedVertex { vertex: pair[0] });
            }
        }
        if vs.len() > 5 {
            return Err(ComplexError::DimensionTooHigh);
        }
        Ok(Simplex { vertices: vs })
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// True when `other`'s vertex set is contained in this simplex's.
    pub fn contains(&self, other: &Simplex) -> bool {
        other.vertices.iter().all(|v| self.vertices.binary_search(v).is_ok())
    }

    /// All faces of the given dimension, in lexicographic order.
    pub fn faces(&self, dim: usize) -> Vec<Simplex> {
        if dim > self.dim() {
            return Vec::new();
        }
        self.vertices
            .iter()
            .copied()
            .combinations(dim + 1)
            .map(|vs| Simplex { vertices: vs })
            .collect()
    }

    /// The C(d+1, 2) edges of this simplex, in lexicographic order.
    pub fn edges(&self) -> Vec<Simplex> {
        self.faces(1)
    }

    /// The common face of two simplices, if any vertices are shared.
    pub fn intersection(&self, other: &Simplex) -> Option<Simplex> {
        let shared: Vec<VertexId> = self
            .vertices
            .iter()
            .copied()
            .filter(|v| other.vertices.binary_search(v).is_ok())
            .collect();
        if shared.is_empty() {
            None
        } else {
            Some(Simplex { vertices: shared })
        }
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.vertices {
            if !first {
                write!(f, "-")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// The star of a triangle: the 4-simplices around it, ordered into a fan or a
/// cycle, together with the shared 3-faces connecting consecutive ones.
///
/// For a closed star of length n there are n shared faces (the last one wraps
/// around); an open fan of length n has n − 1.
#[derive(Clone, PartialEq, Debug)]
pub struct TriangleStar {
    pub triangle: Simplex,
    pub simplices: Vec<Simplex>,
    pub shared_faces: Vec<Simplex>,
    pub closed: bool,
}

impl TriangleStar {
    /// Number of 4-simplices meeting at the triangle.
    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }
}

/// An arc of an [`EdgeStarGraph`]: an interior 3-face joining two 4-simplices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeStarArc {
    pub face: Simplex,
    /// Indices into [`EdgeStarGraph::nodes`].
    pub endpoints: (usize, usize),
}

/// The graph living on the star of an edge: nodes are the 4-simplices
/// containing the edge, arcs are the interior 3-faces containing it. Its
/// cycle rank counts the redundant continuity constraints for this edge.
#[derive(Clone, PartialEq, Debug)]
pub struct EdgeStarGraph {
    pub edge: Simplex,
    pub nodes: Vec<Simplex>,
    pub arcs: Vec<EdgeStarArc>,
    /// Boundary 3-faces containing the edge (one cofacet; carry no jump).
    pub dangling: Vec<Simplex>,
    /// 3-faces with three or more cofacets (non-pseudomanifold input).
    pub irregular: Vec<Simplex>,
    pub components: usize,
}

impl EdgeStarGraph {
    /// Independent cycles: #arcs − #nodes + #components.
    pub fn cycle_rank(&self) -> usize {
        self.arcs.len() + self.components - self.nodes.len()
    }
}

/// Structural findings from [`SimplicialComplex::validate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    ThreeFaceTooManyCofacets { face: Simplex, cofacets: usize },
    TriangleStarNotFan { triangle: Simplex },
    EdgeStarDisconnected { edge: Simplex, components: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ThreeFaceTooManyCofacets { face, cofacets } => {
                write!(f, "3-face {face} has {cofacets} cofacets")
            }
            Violation::TriangleStarNotFan { triangle } => {
                write!(f, "star of triangle {triangle} is not a single fan or cycle")
            }
            Violation::EdgeStarDisconnected { edge, components } => {
                write!(f, "edge-star graph of {edge} has {components} components")
            }
        }
    }
}

/// Result of the structural checks on a complex.
#[derive(Clone, PartialEq, Debug)]
pub struct ValidationReport {
    pub four_simplices: usize,
    /// Face counts for dimensions 0..=4.
    pub face_counts: [usize; 5],
    pub boundary_three_faces: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// A closed complex has no boundary 3-faces.
    pub fn is_closed(&self) -> bool {
        self.boundary_three_faces == 0
    }
}

/// The face lattice of a set of 4-simplices.
#[derive(Clone, PartialEq, Debug)]
pub struct SimplicialComplex {
    four_simplices: Vec<Simplex>,
    /// For dimensions 0..=3: face → the (d+1)-faces containing it, sorted.
    cofacets: [BTreeMap<Simplex, Vec<Simplex>>; 4],
    fingerprint: u64,
}

impl SimplicialComplex {
    /// Builds the full face lattice from 5-tuples of vertex labels.
    ///
    /// Non-pseudomanifold inputs (a 3-face with three or more cofacets) are
    /// accepted here and only reported by [`validate`](Self::validate), so
    /// fixtures for negative tests can be constructed.
    pub fn build(four_simplex_vertex_tuples: &[[u32; 5]]) -> Result<Self, ComplexError> {
        let simplices: Vec<Simplex> = four_simplex_vertex_tuples
            .iter()
            .map(|t| Simplex::new(t.iter().copied()))
            .collect::<Result<_, _>>()?;
        Self::from_simplices(simplices)
    }

    /// Builds the lattice from already-constructed 4-simplices.
    pub fn from_simplices(four_simplices: Vec<Simplex>) -> Result<Self, ComplexError> {
        if four_simplices.is_empty() {
            return Err(ComplexError::EmptyComplex);
        }
        let mut seen = BTreeSet::new();
        for s in &four_simplices {
            if s.dim() != 4 {
                return Err(ComplexError::WrongDimension {
                    simplex: s.clone(),
                    dim: s.dim(),
                    expected: 4,
                });
            }
            if !seen.insert(s.clone()) {
                return Err(ComplexError::DuplicateFourSimplex { simplex: s.clone() });
            }
        }

        let mut cofacets: [BTreeMap<Simplex, Vec<Simplex>>; 4] = Default::default();
        let mut upper: Vec<Simplex> = four_simplices.clone();
        for d in (0..4).rev() {
            let mut level: BTreeMap<Simplex, Vec<Simplex>> = BTreeMap::new();
            for parent in &upper {
                for face in parent.faces(d) {
                    level.entry(face).or_default().push(parent.clone());
                }
            }
            for cof in level.values_mut() {
                cof.sort();
                cof.dedup();
            }
            upper = level.keys().cloned().collect();
            cofacets[d] = level;
        }

        let mut hasher = DefaultHasher::new();
        seen.hash(&mut hasher);
        let fingerprint = hasher.finish();

        Ok(SimplicialComplex {
            four_simplices,
            cofacets,
            fingerprint,
        })
    }

    /// The 4-simplices in construction order.
    pub fn four_simplices(&self) -> &[Simplex] {
        &self.four_simplices
    }

    /// Position of a 4-simplex in construction order.
    pub fn four_simplex_index(&self, simplex: &Simplex) -> Option<usize> {
        self.four_simplices.iter().position(|s| s == simplex)
    }

    /// Content hash; derived products carry it so mismatched inputs can be
    /// rejected when reassembled.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn face_count(&self, dim: usize) -> usize {
        match dim {
            4 => self.four_simplices.len(),
            d if d < 4 => self.cofacets[d].len(),
            _ => 0,
        }
    }

    /// All faces of one dimension, sorted (dimension 4 in construction order).
    /// Dimensions above 4 yield nothing.
    pub fn faces(&self, dim: usize) -> impl Iterator<Item = &Simplex> + '_ {
        let keys = |d: usize| self.cofacets[d].keys();
        match dim {
            4 => Either::Left(self.four_simplices.iter()),
            d if d < 4 => Either::Right(keys(d).take(usize::MAX)),
            _ => Either::Right(keys(0).take(0)),
        }
    }

    pub fn contains_face(&self, simplex: &Simplex) -> bool {
        match simplex.dim() {
            4 => self.four_simplices.contains(simplex),
            d => self.cofacets[d].contains_key(simplex),
        }
    }

    /// The (d+1)-faces containing a face of dimension d < 4.
    pub fn cofacets(&self, face: &Simplex) -> Option<&[Simplex]> {
        let d = face.dim();
        if d >= 4 {
            return None;
        }
        self.cofacets[d].get(face).map(Vec::as_slice)
    }

    /// The 4-simplices containing a face, sorted.
    pub fn top_simplices_containing(&self, face: &Simplex) -> Vec<&Simplex> {
        if face.dim() == 4 {
            return self.four_simplices.iter().filter(|s| *s == face).collect();
        }
        self.four_simplices.iter().filter(|s| s.contains(face)).collect()
    }

    /// Interior 3-faces (exactly two cofacets) with their two cofacet
    /// 4-simplices, sorted by face.
    pub fn interior_three_faces(&self) -> impl Iterator<Item = (&Simplex, &Simplex, &Simplex)> + '_ {
        self.cofacets[3].iter().filter_map(|(face, cof)| {
            if cof.len() == 2 {
                Some((face, &cof[0], &cof[1]))
            } else {
                None
            }
        })
    }

    /// Boundary 3-faces (exactly one cofacet), sorted.
    pub fn boundary_three_faces(&self) -> impl Iterator<Item = &Simplex> + '_ {
        self.cofacets[3]
            .iter()
            .filter(|(_, cof)| cof.len() == 1)
            .map(|(face, _)| face)
    }

    /// Orders the 4-simplices around a triangle into a fan or a cycle.
    ///
    /// Fails with [`ComplexError::StarNotFan`] when the star branches or is
    /// disconnected (non-pseudomanifold input).
    pub fn triangle_star(&self, triangle: &Simplex) -> Result<TriangleStar, ComplexError> {
        if triangle.dim() != 2 || !self.contains_face(triangle) {
            return Err(ComplexError::MissingFace {
                simplex: triangle.clone(),
            });
        }

        // Nodes and adjacency from the 3-faces around the triangle.
        let mut nodes: BTreeSet<Simplex> = BTreeSet::new();
        let tets = self.cofacets(triangle).unwrap_or(&[]);
        for tet in tets {
            for top in self.cofacets(tet).unwrap_or(&[]) {
                nodes.insert(top.clone());
            }
        }
        let nodes: Vec<Simplex> = nodes.into_iter().collect();
        let index: BTreeMap<&Simplex, usize> = nodes.iter().enumerate().map(|(i, s)| (s, i)).collect();

        let mut adjacency: Vec<Vec<(usize, Simplex)>> = vec![Vec::new(); nodes.len()];
        for tet in tets {
            let cof = self.cofacets(tet).unwrap_or(&[]);
            match cof.len() {
                0 | 1 => {}
                2 => {
                    let a = index[&cof[0]];
                    let b = index[&cof[1]];
                    adjacency[a].push((b, tet.clone()));
                    adjacency[b].push((a, tet.clone()));
                }
                _ => {
                    return Err(ComplexError::StarNotFan {
                        triangle: triangle.clone(),
                    })
                }
            }
        }
        for adj in &mut adjacency {
            adj.sort_by(|x, y| nodes[x.0].cmp(&nodes[y.0]));
            if adj.len() > 2 {
                return Err(ComplexError::StarNotFan {
                    triangle: triangle.clone(),
                });
            }
        }

        // Walk the fan. Open stars start at the lexicographically smallest
        // endpoint, closed ones at the smallest node.
        let endpoints: Vec<usize> = (0..nodes.len()).filter(|&i| adjacency[i].len() < 2).collect();
        let closed = endpoints.is_empty();
        let start = if closed { 0 } else { endpoints[0] };

        let mut order = vec![start];
        let mut shared = Vec::new();
        let mut prev: Option<usize> = None;
        let mut current = start;
        loop {
            let next = adjacency[current]
                .iter()
                .find(|(n, _)| Some(*n) != prev || adjacency[current].len() == 1)
                .cloned();
            let Some((next, face)) = next else { break };
            if next == start {
                // Cycle complete only after visiting every node.
                if order.len() == nodes.len() && closed {
                    shared.push(face);
                }
                break;
            }
            if order.contains(&next) {
                break;
            }
            shared.push(face);
            order.push(next);
            prev = Some(current);
            current = next;
        }

        if order.len() != nodes.len() {
            return Err(ComplexError::StarNotFan {
                triangle: triangle.clone(),
            });
        }

        Ok(TriangleStar {
            triangle: triangle.clone(),
            simplices: order.into_iter().map(|i| nodes[i].clone()).collect(),
            shared_faces: shared,
            closed,
        })
    }

    /// Builds the node/arc graph on the star of an edge.
    pub fn edge_star_graph(&self, edge: &Simplex) -> Result<EdgeStarGraph, ComplexError> {
        if edge.dim() != 1 || !self.contains_face(edge) {
            return Err(ComplexError::MissingFace {
                simplex: edge.clone(),
            });
        }

        let mut node_set: BTreeSet<Simplex> = BTreeSet::new();
        let mut tets: BTreeSet<Simplex> = BTreeSet::new();
        for tri in self.cofacets(edge).unwrap_or(&[]) {
            for tet in self.cofacets(tri).unwrap_or(&[]) {
                tets.insert(tet.clone());
                for top in self.cofacets(tet).unwrap_or(&[]) {
                    node_set.insert(top.clone());
                }
            }
        }
        let nodes: Vec<Simplex> = node_set.into_iter().collect();
        let index: BTreeMap<&Simplex, usize> = nodes.iter().enumerate().map(|(i, s)| (s, i)).collect();

        let mut arcs = Vec::new();
        let mut dangling = Vec::new();
        let mut irregular = Vec::new();
        for tet in &tets {
            let cof = self.cofacets(tet).unwrap_or(&[]);
            match cof.len() {
                1 => dangling.push(tet.clone()),
                2 => arcs.push(EdgeStarArc {
                    face: tet.clone(),
                    endpoints: (index[&cof[0]], index[&cof[1]]),
                }),
                _ => irregular.push(tet.clone()),
            }
        }

        // Connected components by breadth-first search.
        let mut seen = vec![false; nodes.len()];
        let mut components = 0;
        for root in 0..nodes.len() {
            if seen[root] {
                continue;
            }
            components += 1;
            let mut queue = VecDeque::from([root]);
            seen[root] = true;
            while let Some(i) = queue.pop_front() {
                for arc in &arcs {
                    let (a, b) = arc.endpoints;
                    let other = if a == i {
                        b
                    } else if b == i {
                        a
                    } else {
                        continue;
                    };
                    if !seen[other] {
                        seen[other] = true;
                        queue.push_back(other);
                    }
                }
            }
        }

        Ok(EdgeStarGraph {
            edge: edge.clone(),
            nodes,
            arcs,
            dangling,
            irregular,
            components,
        })
    }

    /// Structural checks: every 3-face has at most two cofacets, every
    /// triangle star is a single fan or cycle, every edge-star graph is
    /// connected. Findings are reported, not raised.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let mut boundary = 0;
        for (face, cof) in &self.cofacets[3] {
            match cof.len() {
                1 => boundary += 1,
                2 => {}
                n => violations.push(Violation::ThreeFaceTooManyCofacets {
                    face: face.clone(),
                    cofacets: n,
                }),
            }
        }
        for triangle in self.faces(2) {
            if self.triangle_star(triangle).is_err() {
                violations.push(Violation::TriangleStarNotFan {
                    triangle: triangle.clone(),
                });
            }
        }
        for edge in self.faces(1) {
            if let Ok(graph) = self.edge_star_graph(edge) {
                if graph.components > 1 {
                    violations.push(Violation::EdgeStarDisconnected {
                        edge: edge.clone(),
                        components: graph.components,
                    });
                }
            }
        }

        ValidationReport {
            four_simplices: self.four_simplices.len(),
            face_counts: [
                self.face_count(0),
                self.face_count(1),
                self.face_count(2),
                self.face_count(3),
                self.face_count(4),
            ],
            boundary_three_faces: boundary,
            violations,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn simplex(vs: &[u32]) -> Simplex {
        Simplex::new(vs.iter().copied()).unwrap()
    }

    #[test]
    fn boundary_of_5_simplex_face_counts() {
        let complex = fixtures::boundary_of_5_simplex();
        // Counts are C(6, d+1).
        assert_eq!(
            (0..5).map(|d| complex.face_count(d)).collect::<Vec<_>>(),
            vec![6, 15, 20, 15, 6]
        );
    }

    #[test]
    fn glued_pair_shares_one_three_face() {
        let complex = fixtures::glued_pair();
        let interior: Vec<_> = complex.interior_three_faces().collect();
        assert_eq!(interior.len(), 1);
        assert_eq!(*interior[0].0, simplex(&[1, 2, 3, 4]));
    }

    #[test]
    fn single_simplex_is_all_boundary() {
        let complex = SimplicialComplex::build(&[[0, 1, 2, 3, 4]]).unwrap();
        assert_eq!(complex.face_count(3), 5);
        assert_eq!(complex.boundary_three_faces().count(), 5);
        assert_eq!(complex.interior_three_faces().count(), 0);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(
            SimplicialComplex::build(&[]),
            Err(ComplexError::EmptyComplex)
        ));
        assert!(matches!(
            SimplicialComplex::build(&[[0, 1, 2, 3, 3]]),
            Err(ComplexError::RepeatedVertex { .. })
        ));
        assert!(matches!(
            SimplicialComplex::build(&[[0, 1, 2, 3, 4], [4, 3, 2, 1, 0]]),
            Err(ComplexError::DuplicateFourSimplex { .. })
        ));
    }

    #[test]
    fn triangle_star_on_boundary5_is_3_cycle() {
        let complex = fixtures::boundary_of_5_simplex();
        for triangle in complex.faces(2) {
            let star = complex.triangle_star(triangle).unwrap();
            assert!(star.closed);
            assert_eq!(star.len(), 3);
            assert_eq!(star.shared_faces.len(), 3);
            // Consecutive simplices share exactly the recorded 3-face.
            for k in 0..3 {
                let a = &star.simplices[k];
                let b = &star.simplices[(k + 1) % 3];
                let shared = a.intersection(b).unwrap();
                assert_eq!(shared, star.shared_faces[k]);
                assert!(shared.contains(triangle));
            }
        }
    }

    #[test]
    fn triangle_star_on_glued_pair_is_open_fan() {
        let complex = fixtures::glued_pair();
        let star = complex.triangle_star(&simplex(&[1, 2, 3])).unwrap();
        assert!(!star.closed);
        assert_eq!(star.len(), 2);
        assert_eq!(star.shared_faces.len(), 1);
    }

    #[test]
    fn triangle_star_on_single_simplex_is_length_1() {
        let complex = SimplicialComplex::build(&[[0, 1, 2, 3, 4]]).unwrap();
        let star = complex.triangle_star(&simplex(&[0, 1, 2])).unwrap();
        assert!(!star.closed);
        assert_eq!(star.len(), 1);
        assert!(star.shared_faces.is_empty());
    }

    #[test]
    fn edge_star_graph_counts() {
        let complex = fixtures::boundary_of_5_simplex();
        for edge in complex.faces(1) {
            let graph = complex.edge_star_graph(edge).unwrap();
            assert_eq!(graph.nodes.len(), 4);
            assert_eq!(graph.arcs.len(), 6);
            assert_eq!(graph.components, 1);
            assert_eq!(graph.cycle_rank(), 3);
        }

        let complex = fixtures::glued_pair();
        let graph = complex.edge_star_graph(&simplex(&[1, 2])).unwrap();
        assert_eq!(graph.nodes.len(), 2);
        assert_eq!(graph.arcs.len(), 1);
        assert_eq!(graph.cycle_rank(), 0);

        let complex = SimplicialComplex::build(&[[0, 1, 2, 3, 4]]).unwrap();
        let graph = complex.edge_star_graph(&simplex(&[0, 1])).unwrap();
        assert_eq!(graph.nodes.len(), 1);
        assert!(graph.arcs.is_empty());
    }

    #[test]
    fn edge_cycle_rank_matches_triangle_count_on_closed_complex() {
        // Euler-characteristic identity for 2-sphere edge links:
        // cycle rank = (#triangles ⊃ edge) − 1.
        let complex = fixtures::boundary_of_5_simplex();
        for edge in complex.faces(1) {
            let graph = complex.edge_star_graph(edge).unwrap();
            let triangles = complex.cofacets(edge).unwrap().len();
            assert_eq!(graph.cycle_rank(), triangles - 1);
        }
    }

    #[test]
    fn arc_totals_count_interior_faces_six_times() {
        for complex in [
            fixtures::boundary_of_5_simplex(),
            fixtures::glued_pair(),
            fixtures::chain(4).unwrap(),
        ] {
            let total: usize = complex
                .faces(1)
                .map(|e| complex.edge_star_graph(e).unwrap().arcs.len())
                .sum();
            assert_eq!(total, 6 * complex.interior_three_faces().count());
        }
    }

    #[test]
    fn validate_flags_overfull_face() {
        // Three 4-simplices all sharing the 3-face {0,1,2,3}.
        let complex =
            SimplicialComplex::build(&[[0, 1, 2, 3, 4], [0, 1, 2, 3, 5], [0, 1, 2, 3, 6]]).unwrap();
        let report = complex.validate();
        assert!(!report.is_valid());
        assert!(report.violations.iter().any(|v| matches!(
            v,
            Violation::ThreeFaceTooManyCofacets { cofacets: 3, .. }
        )));
    }

    #[test]
    fn validate_fixture_complexes() {
        let report = fixtures::boundary_of_5_simplex().validate();
        assert!(report.is_valid());
        assert!(report.is_closed());

        let report = fixtures::glued_pair().validate();
        assert!(report.is_valid());
        assert_eq!(report.boundary_three_faces, 8);
    }

    #[test]
    fn relabeling_preserves_structure() {
        let complex = fixtures::boundary_of_5_simplex();
        // Relabel i → (3i + 1) mod 7, injective on 0..6.
        let relabeled: Vec<[u32; 5]> = complex
            .four_simplices()
            .iter()
            .map(|s| {
                let mut t = [0u32; 5];
                for (slot, v) in t.iter_mut().zip(s.vertices()) {
                    *slot = (3 * v.0 + 1) % 7;
                }
                t
            })
            .collect();
        let other = SimplicialComplex::build(&relabeled).unwrap();
        for d in 0..5 {
            assert_eq!(complex.face_count(d), other.face_count(d));
        }
        let ranks = |c: &SimplicialComplex| {
            let mut r: Vec<usize> = c
                .faces(1)
                .map(|e| c.edge_star_graph(e).unwrap().cycle_rank())
                .collect();
            r.sort_unstable();
            r
        };
        assert_eq!(ranks(&complex), ranks(&other));
        let star_lengths = |c: &SimplicialComplex| {
            let mut r: Vec<usize> = c
                .faces(2)
                .map(|t| c.triangle_star(t).unwrap().len())
                .collect();
            r.sort_unstable();
            r
        };
        assert_eq!(star_lengths(&complex), star_lengths(&other));
    }
}
