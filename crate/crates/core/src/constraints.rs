//! Edge-length continuity constraints across interior 3-faces.
//!
//! When every 4-simplex carries its own squared edge lengths, each interior
//! 3-face σ³ imposes six conditions: the two cofacet 4-simplices must agree
//! on every edge of σ³. The constraint system is linear in the extended
//! variables (one squared length per (4-simplex, edge) incidence) and block
//! diagonal per global edge, each block the signed arc-node incidence matrix
//! of that edge's star graph. Its rank therefore counts spanning-forest arcs,
//! and a kept set of independent constraints is a spanning forest per edge;
//! the remaining constraints are redundant, one per independent cycle.
//!
//! Squaring out redundant delta functions produces delta-of-zero factors.
//! The bookkeeping (which face volumes they attach to and with what power)
//! lives in [`DeltaZeroLedger`].

use std::collections::BTreeMap;
use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::complex::{Simplex, SimplicialComplex};
use crate::geometry::PerSimplexLengths;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ConstraintError {
    #[error("3-face {face} is not an interior face of the complex")]
    NotInterior { face: Simplex },
    #[error("edge {edge} is not an edge of face {face}")]
    EdgeNotInFace { edge: Simplex, face: Simplex },
    #[error("constraint references 4-simplex {simplex} missing from the complex")]
    UnknownSimplex { simplex: Simplex },
}

/// One continuity condition: the two 4-simplices meeting at `face` must
/// assign the same squared length to `edge`. The delta argument is
/// ℓ²(positive, edge) − ℓ²(negative, edge), with `positive` the
/// lexicographically smaller cofacet.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Constraint {
    pub face: Simplex,
    pub edge: Simplex,
    pub positive: Simplex,
    pub negative: Simplex,
}

impl Constraint {
    /// The delta argument under a per-simplex length assignment; `None` when
    /// either side lacks a value.
    pub fn argument(&self, lengths: &PerSimplexLengths) -> Option<f64> {
        let a = lengths.get(&self.positive, &self.edge)?;
        let b = lengths.get(&self.negative, &self.edge)?;
        Some(a - b)
    }
}

/// All continuity constraints of a complex: six per interior 3-face, sorted
/// by (face, edge).
pub fn enumerate_constraints(complex: &SimplicialComplex) -> Vec<Constraint> {
    let mut out = Vec::new();
    for (face, first, second) in complex.interior_three_faces() {
        for edge in face.edges() {
            out.push(Constraint {
                face: face.clone(),
                edge,
                positive: first.clone(),
                negative: second.clone(),
            });
        }
    }
    out
}

/// One extended configuration variable: the squared length `edge` carries
/// inside `simplex`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ExtendedVariable {
    pub simplex: Simplex,
    pub edge: Simplex,
}

/// Sparse ±1 matrix of the constraint system over the extended variables.
#[derive(Clone, PartialEq, Debug)]
pub struct ConstraintMatrix {
    pub variables: Vec<ExtendedVariable>,
    pub constraints: Vec<Constraint>,
    /// Per constraint: (variable index, +1) and (variable index, −1).
    pub rows: Vec<[(usize, i8); 2]>,
}

impl ConstraintMatrix {
    /// Lays out all (4-simplex, edge) variables in sorted order and encodes
    /// each constraint as a ±1 row.
    pub fn from_constraints(
        complex: &SimplicialComplex,
        constraints: &[Constraint],
    ) -> Result<Self, ConstraintError> {
        let mut variables = Vec::new();
        for simplex in complex.four_simplices() {
            for edge in simplex.edges() {
                variables.push(ExtendedVariable {
                    simplex: simplex.clone(),
                    edge,
                });
            }
        }
        variables.sort();
        let index: BTreeMap<&ExtendedVariable, usize> =
            variables.iter().enumerate().map(|(i, v)| (v, i)).collect();

        let mut rows = Vec::with_capacity(constraints.len());
        for c in constraints {
            let interior = complex
                .cofacets(&c.face)
                .map(|cof| cof.len() == 2)
                .unwrap_or(false);
            if !interior {
                return Err(ConstraintError::NotInterior {
                    face: c.face.clone(),
                });
            }
            if !c.face.contains(&c.edge) {
                return Err(ConstraintError::EdgeNotInFace {
                    edge: c.edge.clone(),
                    face: c.face.clone(),
                });
            }
            let mut pair = [(0usize, 0i8); 2];
            for (slot, (simplex, sign)) in pair
                .iter_mut()
                .zip([(&c.positive, 1i8), (&c.negative, -1i8)])
            {
                let var = ExtendedVariable {
                    simplex: simplex.clone(),
                    edge: c.edge.clone(),
                };
                let i = index
                    .get(&var)
                    .ok_or_else(|| ConstraintError::UnknownSimplex {
                        simplex: simplex.clone(),
                    })?;
                *slot = (*i, sign);
            }
            rows.push(pair);
        }
        Ok(ConstraintMatrix {
            variables,
            constraints: constraints.to_vec(),
            rows,
        })
    }

    pub fn dense(&self) -> Vec<Vec<i128>> {
        let mut m = vec![vec![0i128; self.variables.len()]; self.rows.len()];
        for (row, pair) in m.iter_mut().zip(&self.rows) {
            for &(col, sign) in pair {
                row[col] = i128::from(sign);
            }
        }
        m
    }

    /// Kernel dimension #variables − rank.
    pub fn kernel_dimension(&self) -> usize {
        self.variables.len() - constraint_rank(self)
    }
}

/// Exact rank over the integers by fraction-free (Bareiss) elimination.
///
/// The matrix is a direct sum of signed graph incidence blocks, so it is
/// totally unimodular and all intermediate minors stay in {−1, 0, 1}; i128
/// arithmetic cannot overflow here and is checked anyway.
pub fn constraint_rank(matrix: &ConstraintMatrix) -> usize {
    bareiss_rank(matrix.dense())
}

fn bareiss_rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let a = m[r][c].checked_mul(m[i][j]).expect("minor overflow");
                let b = m[i][c].checked_mul(m[r][j]).expect("minor overflow");
                m[i][j] = (a - b) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        rank += 1;
        r += 1;
    }
    rank
}

/// The spanning forest of kept arcs for one edge's star graph.
#[derive(Clone, PartialEq, Debug)]
pub struct EdgeForest {
    pub edge: Simplex,
    /// Interior 3-faces whose constraint block is kept, in selection order.
    pub kept_faces: Vec<Simplex>,
    pub nodes: usize,
    pub components: usize,
}

/// Partition of the constraints into an independent kept set and the
/// redundant remainder.
#[derive(Clone, PartialEq, Debug)]
pub struct KeptSet {
    pub kept: Vec<Constraint>,
    pub redundant: Vec<Constraint>,
    pub forests: BTreeMap<Simplex, EdgeForest>,
    complex_fingerprint: u64,
}

impl KeptSet {
    pub fn complex_fingerprint(&self) -> u64 {
        self.complex_fingerprint
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Chooses the lexicographically earliest spanning forest of each edge's
/// star graph (arcs considered in 3-face order); constraints on forest arcs
/// are kept, the rest are redundant.
///
/// The kept count equals the rank of the full constraint matrix, so
/// squaring out the kept deltas leaves no residual dependence.
pub fn select_kept(complex: &SimplicialComplex) -> KeptSet {
    let constraints = enumerate_constraints(complex);
    let mut kept_faces_per_edge: BTreeMap<Simplex, EdgeForest> = BTreeMap::new();

    for edge in complex.faces(1) {
        let graph = complex
            .edge_star_graph(edge)
            .expect("edge from the lattice");
        let mut uf = UnionFind::new(graph.nodes.len());
        let mut kept_faces = Vec::new();
        // Arcs arrive sorted by face, making the forest the lexicographic
        // minimum.
        for arc in &graph.arcs {
            if uf.union(arc.endpoints.0, arc.endpoints.1) {
                kept_faces.push(arc.face.clone());
            }
        }
        kept_faces_per_edge.insert(
            edge.clone(),
            EdgeForest {
                edge: edge.clone(),
                kept_faces,
                nodes: graph.nodes.len(),
                components: graph.components,
            },
        );
    }

    let mut kept = Vec::new();
    let mut redundant = Vec::new();
    for c in constraints {
        let forest = &kept_faces_per_edge[&c.edge];
        if forest.kept_faces.contains(&c.face) {
            kept.push(c);
        } else {
            redundant.push(c);
        }
    }
    KeptSet {
        kept,
        redundant,
        forests: kept_faces_per_edge,
        complex_fingerprint: complex.fingerprint(),
    }
}

/// Exponent bookkeeping for the delta-of-zero factors of the measure.
///
/// Each interior 3-face contributes the sixth-power jump normalization,
/// regularized to volume exponent +4. Each triangle with a closed star
/// contributes one 3-dimensional delta at zero, exponent −3 on its area.
/// Each edge contributes +2·excess on its length, where
/// excess = (#closed-star triangles containing the edge) − (cycle rank of
/// its star graph) counts the edge deltas not absorbed by redundancies.
#[derive(Clone, PartialEq, Debug)]
pub struct DeltaZeroLedger {
    pub three_face_exponents: BTreeMap<Simplex, i64>,
    pub triangle_exponents: BTreeMap<Simplex, i64>,
    /// Only edges with positive excess appear here.
    pub edge_exponents: BTreeMap<Simplex, i64>,
    /// Excess of every edge (≥ 0 on validated complexes).
    pub edge_excess: BTreeMap<Simplex, i64>,
    /// Triangles whose star is not a single fan (flagged, not counted).
    pub non_fan_triangles: usize,
    complex_fingerprint: u64,
}

impl DeltaZeroLedger {
    pub fn complex_fingerprint(&self) -> u64 {
        self.complex_fingerprint
    }

    /// All nonzero volume exponents in one map.
    pub fn total_exponents(&self) -> BTreeMap<Simplex, i64> {
        let mut out = BTreeMap::new();
        for source in [
            &self.three_face_exponents,
            &self.triangle_exponents,
            &self.edge_exponents,
        ] {
            for (s, &e) in source {
                if e != 0 {
                    *out.entry(s.clone()).or_insert(0) += e;
                }
            }
        }
        out
    }
}

/// Builds the delta-of-zero ledger of a complex.
pub fn delta_zero_ledger(complex: &SimplicialComplex) -> DeltaZeroLedger {
    let mut three_face_exponents = BTreeMap::new();
    for (face, _, _) in complex.interior_three_faces() {
        three_face_exponents.insert(face.clone(), 4);
    }

    let mut closed_triangles: BTreeMap<Simplex, bool> = BTreeMap::new();
    let mut non_fan = 0usize;
    for triangle in complex.faces(2) {
        match complex.triangle_star(triangle) {
            Ok(star) => {
                closed_triangles.insert(triangle.clone(), star.closed);
            }
            Err(_) => {
                non_fan += 1;
                closed_triangles.insert(triangle.clone(), false);
            }
        }
    }
    let triangle_exponents: BTreeMap<Simplex, i64> = closed_triangles
        .iter()
        .filter(|(_, &closed)| closed)
        .map(|(t, _)| (t.clone(), -3))
        .collect();

    let mut edge_exponents = BTreeMap::new();
    let mut edge_excess = BTreeMap::new();
    for edge in complex.faces(1) {
        let graph = complex
            .edge_star_graph(edge)
            .expect("edge from the lattice");
        let closed_count = complex
            .cofacets(edge)
            .unwrap_or(&[])
            .iter()
            .filter(|t| closed_triangles.get(*t).copied().unwrap_or(false))
            .count() as i64;
        let excess = closed_count - graph.cycle_rank() as i64;
        edge_excess.insert(edge.clone(), excess);
        if excess > 0 {
            edge_exponents.insert(edge.clone(), 2 * excess);
        }
    }

    DeltaZeroLedger {
        three_face_exponents,
        triangle_exponents,
        edge_exponents,
        edge_excess,
        non_fan_triangles: non_fan,
        complex_fingerprint: complex.fingerprint(),
    }
}

/// Content hash of a kept set, for cross-checking assembled reports.
pub fn kept_set_fingerprint(kept: &KeptSet) -> u64 {
    let mut hasher = DefaultHasher::new();
    for c in &kept.kept {
        c.face.vertices().hash(&mut hasher);
        c.edge.vertices().hash(&mut hasher);
    }
    hasher.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::geometry::SquaredLengthMap;

    fn simplex(vs: &[u32]) -> Simplex {
        Simplex::new(vs.iter().copied()).unwrap()
    }

    /// Floating-point rank oracle: Gaussian elimination with partial
    /// pivoting, tolerance 1e-9.
    fn float_rank(matrix: &ConstraintMatrix) -> usize {
        let mut m: Vec<Vec<f64>> = matrix
            .dense()
            .into_iter()
            .map(|row| row.into_iter().map(|v| v as f64).collect())
            .collect();
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        let mut r = 0;
        for c in 0..cols {
            if r >= rows {
                break;
            }
            let p = (r..rows).max_by(|&a, &b| {
                m[a][c].abs().partial_cmp(&m[b][c].abs()).unwrap()
            });
            let Some(p) = p else { break };
            if m[p][c].abs() < 1e-9 {
                continue;
            }
            m.swap(r, p);
            for i in (r + 1)..rows {
                let f = m[i][c] / m[r][c];
                for j in c..cols {
                    m[i][j] -= f * m[r][j];
                }
            }
            rank += 1;
            r += 1;
        }
        rank
    }

    #[test]
    fn boundary5_constraint_counts_and_rank() {
        let complex = fixtures::boundary_of_5_simplex();
        let constraints = enumerate_constraints(&complex);
        assert_eq!(constraints.len(), 90);
        let matrix = ConstraintMatrix::from_constraints(&complex, &constraints).unwrap();
        assert_eq!(matrix.variables.len(), 60);
        assert_eq!(constraint_rank(&matrix), 45);
        assert_eq!(matrix.kernel_dimension(), 15);
        assert_eq!(float_rank(&matrix), 45);
    }

    #[test]
    fn rank_is_order_independent() {
        let complex = fixtures::boundary_of_5_simplex();
        let mut constraints = enumerate_constraints(&complex);
        constraints.reverse();
        let matrix = ConstraintMatrix::from_constraints(&complex, &constraints).unwrap();
        assert_eq!(constraint_rank(&matrix), 45);
        // Interleave from the two halves.
        let forward = enumerate_constraints(&complex);
        let shuffled: Vec<Constraint> = forward[45..]
            .iter()
            .zip(&forward[..45])
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect();
        let matrix = ConstraintMatrix::from_constraints(&complex, &shuffled).unwrap();
        assert_eq!(constraint_rank(&matrix), 45);
    }

    #[test]
    fn kernel_dimension_counts_global_edges() {
        // With every edge-star graph connected, one global value per edge
        // spans the kernel: #variables − rank = #edges.
        for complex in [
            fixtures::boundary_of_5_simplex(),
            fixtures::glued_pair(),
            fixtures::chain(2).unwrap(),
            fixtures::chain(3).unwrap(),
            fixtures::chain(5).unwrap(),
        ] {
            let constraints = enumerate_constraints(&complex);
            let matrix = ConstraintMatrix::from_constraints(&complex, &constraints).unwrap();
            assert_eq!(
                matrix.kernel_dimension(),
                complex.face_count(1),
                "complex with {} simplices",
                complex.face_count(4)
            );
            assert_eq!(constraint_rank(&matrix), float_rank(&matrix));
        }
    }

    #[test]
    fn glued_pair_constraints_all_independent() {
        let complex = fixtures::glued_pair();
        let constraints = enumerate_constraints(&complex);
        assert_eq!(constraints.len(), 6);
        let matrix = ConstraintMatrix::from_constraints(&complex, &constraints).unwrap();
        assert_eq!(constraint_rank(&matrix), 6);
        let kept = select_kept(&complex);
        assert_eq!(kept.kept.len(), 6);
        assert!(kept.redundant.is_empty());
    }

    #[test]
    fn chain_constraints_all_independent() {
        for k in 2..=5 {
            let complex = fixtures::chain(k).unwrap();
            let constraints = enumerate_constraints(&complex);
            assert_eq!(constraints.len(), 6 * (k - 1));
            let matrix = ConstraintMatrix::from_constraints(&complex, &constraints).unwrap();
            assert_eq!(constraint_rank(&matrix), 6 * (k - 1));
            let kept = select_kept(&complex);
            assert_eq!(kept.kept.len(), 6 * (k - 1));
            assert!(kept.redundant.is_empty());
        }
    }

    #[test]
    fn boundary5_kept_selection() {
        let complex = fixtures::boundary_of_5_simplex();
        let kept = select_kept(&complex);
        assert_eq!(kept.kept.len(), 45);
        assert_eq!(kept.redundant.len(), 45);
        // Three kept constraints per edge: a spanning tree of K4.
        for forest in kept.forests.values() {
            assert_eq!(forest.nodes, 4);
            assert_eq!(forest.components, 1);
            assert_eq!(forest.kept_faces.len(), 3);
        }
        // The kept count matches the matrix rank.
        let matrix =
            ConstraintMatrix::from_constraints(&complex, &enumerate_constraints(&complex)).unwrap();
        assert_eq!(kept.kept.len(), constraint_rank(&matrix));

        // Kept rows alone form a full-rank system.
        let kept_matrix = ConstraintMatrix::from_constraints(&complex, &kept.kept).unwrap();
        assert_eq!(constraint_rank(&kept_matrix), kept.kept.len());
    }

    #[test]
    fn kept_selection_is_lexicographic_minimum() {
        let complex = fixtures::boundary_of_5_simplex();
        let kept = select_kept(&complex);
        // For each edge, replacing any kept face by a lexicographically
        // smaller unused face would not be a forest; minimal check: the
        // selection equals greedy Kruskal over sorted faces, so faces come
        // out sorted per edge.
        for forest in kept.forests.values() {
            let mut sorted = forest.kept_faces.clone();
            sorted.sort();
            assert_eq!(forest.kept_faces, sorted);
        }
    }

    #[test]
    fn kept_arguments_vanish_on_conforming_lengths() {
        let complex = fixtures::boundary_of_5_simplex();
        let global = SquaredLengthMap::uniform(&complex, 1.3);
        let per = PerSimplexLengths::conformed(&complex, &global).unwrap();
        let kept = select_kept(&complex);
        for c in kept.kept.iter().chain(&kept.redundant) {
            let arg = c.argument(&per).unwrap();
            assert!(arg.abs() < 1e-15, "argument {arg} for face {}", c.face);
        }
    }

    #[test]
    fn constraint_arguments_see_violations() {
        let complex = fixtures::glued_pair();
        let global = SquaredLengthMap::uniform(&complex, 1.0);
        let mut per = PerSimplexLengths::conformed(&complex, &global).unwrap();
        per.set(simplex(&[0, 1, 2, 3, 4]), simplex(&[1, 2]), 1.25)
            .unwrap();
        let constraints = enumerate_constraints(&complex);
        let violated: Vec<&Constraint> = constraints
            .iter()
            .filter(|c| c.argument(&per).unwrap().abs() > 1e-12)
            .collect();
        assert_eq!(violated.len(), 1);
        assert_eq!(violated[0].edge, simplex(&[1, 2]));
        assert!((violated[0].argument(&per).unwrap().abs() - 0.25).abs() < 1e-12);
    }

    #[test]
    fn ledger_boundary5_pattern() {
        let complex = fixtures::boundary_of_5_simplex();
        let ledger = delta_zero_ledger(&complex);
        assert_eq!(ledger.three_face_exponents.len(), 15);
        assert!(ledger.three_face_exponents.values().all(|&e| e == 4));
        assert_eq!(ledger.triangle_exponents.len(), 20);
        assert!(ledger.triangle_exponents.values().all(|&e| e == -3));
        assert_eq!(ledger.edge_exponents.len(), 15);
        assert!(ledger.edge_exponents.values().all(|&e| e == 2));
        // Four closed triangles around each edge, cycle rank three.
        assert!(ledger.edge_excess.values().all(|&x| x == 1));
        assert_eq!(ledger.non_fan_triangles, 0);
    }

    #[test]
    fn ledger_open_complexes_have_no_closed_star_factors() {
        for complex in [fixtures::glued_pair(), fixtures::chain(3).unwrap()] {
            let ledger = delta_zero_ledger(&complex);
            assert!(ledger.triangle_exponents.is_empty());
            assert!(ledger.edge_exponents.is_empty());
            assert!(ledger.edge_excess.values().all(|&x| x == 0));
            assert_eq!(
                ledger.three_face_exponents.len(),
                complex.interior_three_faces().count()
            );
        }
    }

    #[test]
    fn ledger_flat_subdivision_pattern() {
        let (complex, _) = fixtures::flat_subdivision();
        let ledger = delta_zero_ledger(&complex);
        assert_eq!(ledger.three_face_exponents.len(), 10);
        // Ten interior triangles {p, v_i, v_j} with closed 3-cycles.
        assert_eq!(ledger.triangle_exponents.len(), 10);
        // The five spokes {p, v_i} have excess 1; original edges excess 0.
        assert_eq!(ledger.edge_exponents.len(), 5);
        for (edge, &exp) in &ledger.edge_exponents {
            assert_eq!(exp, 2);
            assert!(edge.vertices().iter().any(|v| v.0 == 5), "edge {edge}");
        }
        assert!(ledger.edge_excess.values().all(|&x| x >= 0));
    }

    #[test]
    fn matrix_validation_rejects_foreign_rows() {
        let complex = fixtures::glued_pair();
        let mut constraints = enumerate_constraints(&complex);
        constraints[0].face = simplex(&[0, 1, 2, 3]);
        assert!(matches!(
            ConstraintMatrix::from_constraints(&complex, &constraints),
            Err(ConstraintError::NotInterior { .. })
        ));

        let mut constraints = enumerate_constraints(&complex);
        constraints[0].edge = simplex(&[0, 5]);
        assert!(matches!(
            ConstraintMatrix::from_constraints(&complex, &constraints),
            Err(ConstraintError::EdgeNotInFace { .. })
        ));
    }
}
