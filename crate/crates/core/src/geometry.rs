//! Piecewise-flat geometry from squared edge lengths: Gram matrices, volumes,
//! hyperdihedral angles, deficit angles, and the curvature action.
//!
//! Two length assignments are supported. A `SquaredLengthMap` gives one value
//! per edge of the complex. A `PerSimplexLengths` assignment lets each
//! 4-simplex carry its own squared lengths, so an edge may disagree between
//! neighbors; the continuity constraints of the measure machinery are exactly
//! the conditions removing that disagreement.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use nalgebra::DMatrix;
use thiserror::Error;

use crate::complex::{ComplexError, Simplex, SimplicialComplex};

/// Below this absolute Gram/Cayley-Menger determinant a simplex is treated as
/// degenerate (zero volume); below its negative the lengths have no Euclidean
/// realization and geometry calls fail.
pub const DEGENERACY_TOLERANCE: f64 = 1e-12;

/// Errors from length assignments and derived geometric quantities.
#[derive(Clone, PartialEq, Debug, Error)]
pub enum GeometryError {
    #[error("no squared length for edge {edge}")]
    MissingLength { edge: Simplex },
    #[error("squared length {value} for edge {edge} must be positive and finite")]
    NonPositiveLength { edge: Simplex, value: f64 },
    #[error("lengths of {simplex} have no Euclidean realization (Gram determinant {det:.3e})")]
    Signature { simplex: Simplex, det: f64 },
    #[error("triangle {triangle} is degenerate at these lengths")]
    DegenerateTriangle { triangle: Simplex },
    #[error("bounding 3-face {face} is degenerate at these lengths")]
    DegenerateBoundingFace { face: Simplex },
    #[error("star of {triangle} is open; deficit angle needs a closed star")]
    OpenStar { triangle: Simplex },
    #[error("{face} is not a face of {of}")]
    NotAFace { face: Simplex, of: Simplex },
    #[error("{simplex} has the wrong dimension, expected {expected}")]
    WrongDimension { simplex: Simplex, expected: usize },
    #[error("parameter {name} = {value} out of range")]
    InvalidParameter { name: &'static str, value: f64 },
    #[error(transparent)]
    Structure(#[from] ComplexError),
}

/// Source of squared edge lengths for geometry on one simplex.
pub trait EdgeLengths {
    fn squared_length(&self, edge: &Simplex) -> Option<f64>;
}

/// One squared length per edge of a complex (a single-valued, conforming
/// assignment). Values are positive and finite.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct SquaredLengthMap {
    values: BTreeMap<Simplex, f64>,
}

impl SquaredLengthMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: BTreeMap<Simplex, f64>) -> Result<Self, GeometryError> {
        let mut map = Self::new();
        for (edge, value) in entries {
            map.insert(edge, value)?;
        }
        Ok(map)
    }

    /// The same squared length on every edge of `complex`.
    pub fn uniform(complex: &SimplicialComplex, value: f64) -> Self {
        let values = complex
            .faces(1)
            .map(|e| (e.clone(), value))
            .collect::<BTreeMap<_, _>>();
        assert!(
            value.is_finite() && value > 0.0,
            "uniform squared length must be positive"
        );
        SquaredLengthMap { values }
    }

    pub fn insert(&mut self, edge: Simplex, value: f64) -> Result<(), GeometryError> {
        if edge.dim() != 1 {
            return Err(GeometryError::WrongDimension {
                simplex: edge,
                expected: 1,
            });
        }
        if !value.is_finite() || value <= 0.0 {
            return Err(GeometryError::NonPositiveLength { edge, value });
        }
        self.values.insert(edge, value);
        Ok(())
    }

    pub fn get(&self, edge: &Simplex) -> Option<f64> {
        self.values.get(edge).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Simplex, f64)> + '_ {
        self.values.iter().map(|(e, v)| (e, *v))
    }

    /// Edges of `complex` with no assigned length.
    pub fn missing_edges(&self, complex: &SimplicialComplex) -> Vec<Simplex> {
        complex
            .faces(1)
            .filter(|e| !self.values.contains_key(e))
            .cloned()
            .collect()
    }

    pub fn covers(&self, complex: &SimplicialComplex) -> bool {
        self.missing_edges(complex).is_empty()
    }

    /// Every squared length multiplied by `factor` (> 0).
    pub fn scaled(&self, factor: f64) -> Self {
        assert!(factor.is_finite() && factor > 0.0);
        SquaredLengthMap {
            values: self.values.iter().map(|(e, v)| (e.clone(), v * factor)).collect(),
        }
    }
}

impl EdgeLengths for SquaredLengthMap {
    fn squared_length(&self, edge: &Simplex) -> Option<f64> {
        self.get(edge)
    }
}

/// Squared edge lengths assigned independently inside each 4-simplex, the
/// extended configuration space on which the continuity constraints act.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct PerSimplexLengths {
    values: BTreeMap<(Simplex, Simplex), f64>,
}

impl PerSimplexLengths {
    /// The conforming assignment: every 4-simplex inherits the global value
    /// on each of its edges.
    pub fn conformed(
        complex: &SimplicialComplex,
        global: &SquaredLengthMap,
    ) -> Result<Self, GeometryError> {
        let mut values = BTreeMap::new();
        for simplex in complex.four_simplices() {
            for edge in simplex.edges() {
                let v = global
                    .get(&edge)
                    .ok_or(GeometryError::MissingLength { edge: edge.clone() })?;
                values.insert((simplex.clone(), edge), v);
            }
        }
        Ok(PerSimplexLengths { values })
    }

    pub fn uniform(complex: &SimplicialComplex, value: f64) -> Self {
        Self::conformed(complex, &SquaredLengthMap::uniform(complex, value))
            .expect("uniform map covers the complex")
    }

    pub fn get(&self, simplex: &Simplex, edge: &Simplex) -> Option<f64> {
        self.values.get(&(simplex.clone(), edge.clone())).copied()
    }

    pub fn set(
        &mut self,
        simplex: Simplex,
        edge: Simplex,
        value: f64,
    ) -> Result<(), GeometryError> {
        if simplex.dim() != 4 {
            return Err(GeometryError::WrongDimension {
                simplex,
                expected: 4,
            });
        }
        if edge.dim() != 1 {
            return Err(GeometryError::WrongDimension {
                simplex: edge,
                expected: 1,
            });
        }
        if !simplex.contains(&edge) {
            return Err(GeometryError::NotAFace {
                face: edge,
                of: simplex,
            });
        }
        if !value.is_finite() || value <= 0.0 {
            return Err(GeometryError::NonPositiveLength { edge, value });
        }
        self.values.insert((simplex, edge), value);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Simplex, &Simplex, f64)> + '_ {
        self.values.iter().map(|((s, e), v)| (s, e, *v))
    }

    /// Length lookup restricted to one 4-simplex.
    pub fn view<'a>(&'a self, simplex: &'a Simplex) -> PerSimplexView<'a> {
        PerSimplexView {
            lengths: self,
            simplex,
        }
    }
}

/// [`EdgeLengths`] view of one 4-simplex within a [`PerSimplexLengths`].
#[derive(Clone, Copy, Debug)]
pub struct PerSimplexView<'a> {
    lengths: &'a PerSimplexLengths,
    simplex: &'a Simplex,
}

impl EdgeLengths for PerSimplexView<'_> {
    fn squared_length(&self, edge: &Simplex) -> Option<f64> {
        self.lengths.get(self.simplex, edge)
    }
}

fn required_length(lengths: &impl EdgeLengths, edge: &Simplex) -> Result<f64, GeometryError> {
    lengths
        .squared_length(edge)
        .ok_or_else(|| GeometryError::MissingLength { edge: edge.clone() })
}

fn pair_length(
    lengths: &impl EdgeLengths,
    a: crate::complex::VertexId,
    b: crate::complex::VertexId,
) -> Result<f64, GeometryError> {
    let edge = Simplex::new([a, b]).expect("two distinct vertices");
    required_length(lengths, &edge)
}

/// Gram matrix of the edge vectors from the first vertex:
/// G_ij = (ℓ²(v0,vi) + ℓ²(v0,vj) − ℓ²(vi,vj)) / 2 for i, j = 1..d.
pub fn gram_matrix(
    simplex: &Simplex,
    lengths: &impl EdgeLengths,
) -> Result<DMatrix<f64>, GeometryError> {
    let vs = simplex.vertices();
    let d = simplex.dim();
    let mut g = DMatrix::zeros(d, d);
    for i in 1..=d {
        for j in i..=d {
            let l0i = pair_length(lengths, vs[0], vs[i])?;
            let value = if i == j {
                l0i
            } else {
                let l0j = pair_length(lengths, vs[0], vs[j])?;
                let lij = pair_length(lengths, vs[i], vs[j])?;
                0.5 * (l0i + l0j - lij)
            };
            g[(i - 1, j - 1)] = value;
            g[(j - 1, i - 1)] = value;
        }
    }
    Ok(g)
}

/// Bordered distance matrix of a d-simplex: (d+2)×(d+2), first row and column
/// all ones (zero corner), remaining entries the squared distances.
pub fn cayley_menger_matrix(
    simplex: &Simplex,
    lengths: &impl EdgeLengths,
) -> Result<DMatrix<f64>, GeometryError> {
    let vs = simplex.vertices();
    let n = vs.len();
    let mut cm = DMatrix::zeros(n + 1, n + 1);
    for i in 0..n {
        cm[(0, i + 1)] = 1.0;
        cm[(i + 1, 0)] = 1.0;
        for j in (i + 1)..n {
            let l = pair_length(lengths, vs[i], vs[j])?;
            cm[(i + 1, j + 1)] = l;
            cm[(j + 1, i + 1)] = l;
        }
    }
    Ok(cm)
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Euclidean volume of a simplex from its squared edge lengths, via the Gram
/// determinant: V = sqrt(det G) / d!.
///
/// A determinant within [`DEGENERACY_TOLERANCE`] of zero gives volume 0; a
/// determinant below the negative tolerance means the lengths are not
/// realizable and is an error.
pub fn simplex_volume(
    simplex: &Simplex,
    lengths: &impl EdgeLengths,
) -> Result<f64, GeometryError> {
    let d = simplex.dim();
    if d == 0 {
        return Ok(1.0);
    }
    let det = gram_matrix(simplex, lengths)?.determinant();
    if det < -DEGENERACY_TOLERANCE {
        return Err(GeometryError::Signature {
            simplex: simplex.clone(),
            det,
        });
    }
    Ok(det.max(0.0).sqrt() / factorial(d))
}

fn cofactor(m: &DMatrix<f64>, row: usize, col: usize) -> f64 {
    let minor = m.clone().remove_row(row).remove_column(col);
    let sign = if (row + col) % 2 == 0 { 1.0 } else { -1.0 };
    sign * minor.determinant()
}

/// Interior angle of a 4-simplex at one of its triangles: the hyperdihedral
/// angle between the two 3-faces sharing the triangle, in (0, π).
///
/// Computed from cofactors of the bordered distance matrix: with l, m the
/// positions of the two vertices outside the triangle,
/// cos α = −C_lm / sqrt(C_ll · C_mm).
pub fn hyperdihedral_angle(
    four_simplex: &Simplex,
    triangle: &Simplex,
    lengths: &impl EdgeLengths,
) -> Result<f64, GeometryError> {
    if four_simplex.dim() != 4 {
        return Err(GeometryError::WrongDimension {
            simplex: four_simplex.clone(),
            expected: 4,
        });
    }
    if triangle.dim() != 2 {
        return Err(GeometryError::WrongDimension {
            simplex: triangle.clone(),
            expected: 2,
        });
    }
    if !four_simplex.contains(triangle) {
        return Err(GeometryError::NotAFace {
            face: triangle.clone(),
            of: four_simplex.clone(),
        });
    }
    if simplex_volume(triangle, lengths)? <= 0.0 {
        return Err(GeometryError::DegenerateTriangle {
            triangle: triangle.clone(),
        });
    }

    let outside: Vec<usize> = four_simplex
        .vertices()
        .iter()
        .enumerate()
        .filter(|(_, v)| !triangle.vertices().contains(v))
        .map(|(i, _)| i)
        .collect();
    let (l, m) = (outside[0], outside[1]);

    let cm = cayley_menger_matrix(four_simplex, lengths)?;
    let c_ll = cofactor(&cm, l + 1, l + 1);
    let c_mm = cofactor(&cm, m + 1, m + 1);
    let c_lm = cofactor(&cm, l + 1, m + 1);
    // C_ll is the bordered determinant of the 3-face omitting vertex l; it
    // must be positive for a realizable, nondegenerate 3-face.
    for (c, skip) in [(c_ll, l), (c_mm, m)] {
        if c <= DEGENERACY_TOLERANCE {
            let face_vertices: Vec<_> = four_simplex
                .vertices()
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, v)| *v)
                .collect();
            return Err(GeometryError::DegenerateBoundingFace {
                face: Simplex::new(face_vertices).expect("four vertices"),
            });
        }
    }

    let cos = (-c_lm / (c_ll * c_mm).sqrt()).clamp(-1.0, 1.0);
    Ok(cos.acos())
}

/// Everything the curvature term needs at one triangle: its area, the
/// hyperdihedral angles of the 4-simplices around it (in star order), and
/// the deficit angle 2π − Σα when the star closes up.
#[derive(Clone, PartialEq, Debug)]
pub struct AngleData {
    pub triangle: Simplex,
    pub area: f64,
    pub closed: bool,
    pub angles: Vec<(Simplex, f64)>,
    pub deficit: Option<f64>,
}

impl AngleData {
    pub fn star_size(&self) -> usize {
        self.angles.len()
    }
}

/// Computes [`AngleData`] for a triangle with a single-valued length map.
pub fn triangle_angle_data(
    complex: &SimplicialComplex,
    triangle: &Simplex,
    lengths: &SquaredLengthMap,
) -> Result<AngleData, GeometryError> {
    let star = complex.triangle_star(triangle)?;
    let mut angles = Vec::with_capacity(star.len());
    for simplex in &star.simplices {
        let alpha = hyperdihedral_angle(simplex, triangle, lengths)?;
        angles.push((simplex.clone(), alpha));
    }
    let sum: f64 = angles.iter().map(|(_, a)| a).sum();
    Ok(AngleData {
        triangle: triangle.clone(),
        area: simplex_volume(triangle, lengths)?,
        closed: star.closed,
        angles,
        deficit: star.closed.then_some(2.0 * PI - sum),
    })
}

/// Deficit angle 2π − Σα at a triangle with a closed star.
pub fn deficit_angle(
    complex: &SimplicialComplex,
    triangle: &Simplex,
    lengths: &SquaredLengthMap,
) -> Result<f64, GeometryError> {
    triangle_angle_data(complex, triangle, lengths)?
        .deficit
        .ok_or_else(|| GeometryError::OpenStar {
            triangle: triangle.clone(),
        })
}

/// Coupling for the curvature action: Σ (deficit · area) · coefficient.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct ActionParams {
    pub newton_constant: f64,
    pub coefficient: f64,
}

impl ActionParams {
    /// Standard coefficient 1 / (8πG).
    pub fn new(newton_constant: f64) -> Result<Self, GeometryError> {
        if !newton_constant.is_finite() || newton_constant <= 0.0 {
            return Err(GeometryError::InvalidParameter {
                name: "newton_constant",
                value: newton_constant,
            });
        }
        Ok(ActionParams {
            newton_constant,
            coefficient: 1.0 / (8.0 * PI * newton_constant),
        })
    }

    /// Same Newton constant, explicit overall coefficient.
    pub fn with_coefficient(mut self, coefficient: f64) -> Result<Self, GeometryError> {
        if !coefficient.is_finite() {
            return Err(GeometryError::InvalidParameter {
                name: "coefficient",
                value: coefficient,
            });
        }
        self.coefficient = coefficient;
        Ok(self)
    }
}

/// Curvature action on a single-valued length assignment:
/// coefficient · Σ_closed triangles (2π − Σα) · A. Open-star triangles carry
/// no deficit and are skipped.
pub fn curvature_action(
    complex: &SimplicialComplex,
    lengths: &SquaredLengthMap,
    params: &ActionParams,
) -> Result<f64, GeometryError> {
    let mut total = 0.0;
    for triangle in complex.faces(2) {
        let data = triangle_angle_data(complex, triangle, lengths)?;
        if let Some(deficit) = data.deficit {
            total += deficit * data.area;
        }
    }
    Ok(params.coefficient * total)
}

/// Curvature action in per-simplex split form:
/// coefficient · Σ_σ⁴ Σ_{σ² ⊂ σ⁴, closed star} (2π/n − α_σ⁴) · A_σ⁴,
/// where n is the star size and both α and A use the lengths of σ⁴ itself.
///
/// On a conforming assignment this telescopes to [`curvature_action`].
pub fn curvature_action_split(
    complex: &SimplicialComplex,
    lengths: &PerSimplexLengths,
    params: &ActionParams,
) -> Result<f64, GeometryError> {
    let mut star_sizes: BTreeMap<Simplex, Option<usize>> = BTreeMap::new();
    for triangle in complex.faces(2) {
        let star = complex.triangle_star(triangle)?;
        star_sizes.insert(triangle.clone(), star.closed.then_some(star.len()));
    }

    let mut total = 0.0;
    for simplex in complex.four_simplices() {
        let view = lengths.view(simplex);
        for triangle in simplex.faces(2) {
            let Some(Some(n)) = star_sizes.get(&triangle).copied() else {
                continue;
            };
            let alpha = hyperdihedral_angle(simplex, &triangle, &view)?;
            let area = simplex_volume(&triangle, &view)?;
            total += (2.0 * PI / n as f64 - alpha) * area;
        }
    }
    Ok(params.coefficient * total)
}
