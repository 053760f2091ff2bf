//! Assembly of the measure data: volume-power exponents, the kept delta
//! list, and a declared per-4-simplex local measure.
//!
//! The module is purely structural. It merges the delta-of-zero ledger and
//! the kept-set selection into one report and evaluates the volume-power
//! factor in the log domain; the oscillating action weight lives in
//! `geometry` and is combined only at the command-line layer.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::complex::{Simplex, SimplicialComplex};
use crate::constraints::{Constraint, DeltaZeroLedger, KeptSet};
use crate::geometry::{simplex_volume, GeometryError, SquaredLengthMap};

/// Volumes at or below this threshold count as divergent when they carry a
/// nonzero exponent.
const VOLUME_FLOOR: f64 = 1e-12;

#[derive(Clone, PartialEq, Debug, Error)]
pub enum MeasureError {
    #[error("kept set and ledger come from different complexes ({left:#x} vs {right:#x})")]
    ComplexMismatch { left: u64, right: u64 },
    #[error("volume factor diverges: {simplex} has volume {volume:.3e} with exponent {exponent}")]
    DivergentFactor {
        simplex: Simplex,
        volume: f64,
        exponent: i64,
    },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Declared form of the local measure dμ(σ⁴).
///
/// The construction fixes only that the local measure factorizes over
/// 4-simplices; the concrete choice is external input. The default product
/// of squared-length differentials is the simplest factorized option and is
/// not canonical.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub enum LocalMeasureSpec {
    /// ∏ dℓ² over the ten edges of each 4-simplex (non-canonical default).
    #[default]
    EdgeLengthSquareProduct,
    /// Any other factorized per-4-simplex choice, carried as a label.
    Custom { label: String },
}

impl fmt::Display for LocalMeasureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalMeasureSpec::EdgeLengthSquareProduct => {
                write!(f, "product of edge dl^2 per 4-simplex (non-canonical default)")
            }
            LocalMeasureSpec::Custom { label } => write!(f, "{label}"),
        }
    }
}

/// Convention for trading delta-of-zero factors for volume powers: a
/// d-dimensional delta at zero becomes V^{-(d+1)} on the supporting face.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum RegularizationTag {
    #[default]
    VolumePower,
}

impl RegularizationTag {
    /// Exponent assigned to a d-face, d in 1..=3.
    pub fn exponent(self, dim: usize) -> Option<i64> {
        match self {
            RegularizationTag::VolumePower => {
                (1..=3).contains(&dim).then(|| -(dim as i64 + 1))
            }
        }
    }
}

impl fmt::Display for RegularizationTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegularizationTag::VolumePower => write!(f, "volume-power"),
        }
    }
}

/// The assembled measure: symbolic volume exponents, the kept (primed)
/// delta list, the declared local measure, and structural notes.
#[derive(Clone, PartialEq, Debug)]
pub struct MeasureReport {
    /// Merged nonzero exponents: interior 3-faces +4, closed-star triangles
    /// −3, edges +2·excess.
    pub volume_exponents: BTreeMap<Simplex, i64>,
    pub kept_deltas: Vec<Constraint>,
    pub local_measure: LocalMeasureSpec,
    pub regularization: RegularizationTag,
    /// Deviations from the closed-pseudomanifold pattern, one line each.
    pub notes: Vec<String>,
    complex_fingerprint: u64,
}

impl MeasureReport {
    pub fn complex_fingerprint(&self) -> u64 {
        self.complex_fingerprint
    }

    /// Sum of exponents over faces of one dimension.
    pub fn exponent_sum(&self, dim: usize) -> i64 {
        self.volume_exponents
            .iter()
            .filter(|(s, _)| s.dim() == dim)
            .map(|(_, &e)| e)
            .sum()
    }
}

/// Merges a kept set and a delta-of-zero ledger into a measure report.
///
/// Both inputs must have been built from `complex`; fingerprints are
/// compared to reject mixed inputs.
pub fn assemble_measure_report(
    complex: &SimplicialComplex,
    kept: &KeptSet,
    ledger: &DeltaZeroLedger,
    local: LocalMeasureSpec,
) -> Result<MeasureReport, MeasureError> {
    for fp in [kept.complex_fingerprint(), ledger.complex_fingerprint()] {
        if fp != complex.fingerprint() {
            return Err(MeasureError::ComplexMismatch {
                left: complex.fingerprint(),
                right: fp,
            });
        }
    }

    let mut notes = Vec::new();
    let report = complex.validate();
    if report.boundary_three_faces > 0 {
        notes.push(format!(
            "{} boundary 3-faces carry no jump factor",
            report.boundary_three_faces
        ));
    }
    let open_triangles = complex.face_count(2) - ledger.triangle_exponents.len();
    if open_triangles > 0 {
        notes.push(format!(
            "{open_triangles} triangles with open stars carry no curvature delta"
        ));
    }
    if ledger.non_fan_triangles > 0 {
        notes.push(format!(
            "{} triangle stars are not single fans; their deltas are uncounted",
            ledger.non_fan_triangles
        ));
    }

    Ok(MeasureReport {
        volume_exponents: ledger.total_exponents(),
        kept_deltas: kept.kept.clone(),
        local_measure: local,
        regularization: RegularizationTag::VolumePower,
        notes,
        complex_fingerprint: complex.fingerprint(),
    })
}

/// Log magnitude of the volume-power factor: Σ exponent(σ) · ln V(σ).
///
/// Fails with [`MeasureError::DivergentFactor`] when a face with nonzero
/// exponent has (numerically) zero volume; faces outside the exponent map
/// are never evaluated, so degeneracies there are irrelevant.
pub fn evaluate_volume_factor(
    report: &MeasureReport,
    lengths: &SquaredLengthMap,
) -> Result<f64, MeasureError> {
    let mut log_factor = 0.0;
    for (simplex, &exponent) in &report.volume_exponents {
        if exponent == 0 {
            continue;
        }
        let volume = simplex_volume(simplex, lengths)?;
        if volume <= VOLUME_FLOOR {
            return Err(MeasureError::DivergentFactor {
                simplex: simplex.clone(),
                volume,
                exponent,
            });
        }
        log_factor += exponent as f64 * volume.ln();
    }
    Ok(log_factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::{delta_zero_ledger, select_kept};
    use crate::fixtures;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn simplex(vs: &[u32]) -> Simplex {
        Simplex::new(vs.iter().copied()).unwrap()
    }

    fn report_for(complex: &SimplicialComplex) -> MeasureReport {
        let kept = select_kept(complex);
        let ledger = delta_zero_ledger(complex);
        assemble_measure_report(complex, &kept, &ledger, LocalMeasureSpec::default()).unwrap()
    }

    #[test]
    fn regularization_exponents() {
        let tag = RegularizationTag::VolumePower;
        assert_eq!(tag.exponent(3), Some(-4));
        assert_eq!(tag.exponent(2), Some(-3));
        assert_eq!(tag.exponent(1), Some(-2));
        assert_eq!(tag.exponent(0), None);
        assert_eq!(tag.exponent(4), None);
    }

    #[test]
    fn boundary5_report_pattern() {
        let complex = fixtures::boundary_of_5_simplex();
        let report = report_for(&complex);
        let by_dim = |d: usize| {
            report
                .volume_exponents
                .iter()
                .filter(|(s, _)| s.dim() == d)
                .count()
        };
        assert_eq!(by_dim(3), 15);
        assert_eq!(by_dim(2), 20);
        assert_eq!(by_dim(1), 15);
        assert_eq!(report.exponent_sum(3), 60);
        assert_eq!(report.exponent_sum(2), -60);
        assert_eq!(report.exponent_sum(1), 30);
        assert_eq!(report.kept_deltas.len(), 45);
        assert!(report.notes.is_empty());
    }

    #[test]
    fn boundary5_unit_length_value() {
        let complex = fixtures::boundary_of_5_simplex();
        let report = report_for(&complex);
        let lengths = SquaredLengthMap::uniform(&complex, 1.0);
        let value = evaluate_volume_factor(&report, &lengths).unwrap();
        // Unit tetrahedron and unit triangle volumes; edge factors are ln 1.
        let expected = 60.0 * (2.0_f64.sqrt() / 12.0).ln() - 60.0 * (3.0_f64.sqrt() / 4.0).ln();
        assert!((value - expected).abs() < 1e-10, "value {value} vs {expected}");
    }

    #[test]
    fn volume_factor_scaling_law() {
        let complex = fixtures::boundary_of_5_simplex();
        let report = report_for(&complex);
        let base = SquaredLengthMap::uniform(&complex, 1.0);
        let reference = evaluate_volume_factor(&report, &base).unwrap();
        // Scaling all squared lengths by lambda scales V_d by lambda^{d/2};
        // the log factor shifts by (60*3/2 - 60*1 + 30*1/2) ln lambda.
        let coefficient = 45.0;
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..8 {
            let lambda: f64 = rng.random_range(0.5..2.0);
            let scaled = evaluate_volume_factor(&report, &base.scaled(lambda)).unwrap();
            let shift = scaled - reference;
            assert!(
                (shift - coefficient * lambda.ln()).abs() < 1e-10,
                "lambda {lambda}: shift {shift}"
            );
        }
    }

    #[test]
    fn glued_pair_report() {
        let complex = fixtures::glued_pair();
        let report = report_for(&complex);
        assert_eq!(report.volume_exponents.len(), 1);
        assert_eq!(
            report.volume_exponents.get(&simplex(&[1, 2, 3, 4])),
            Some(&4)
        );
        assert_eq!(report.kept_deltas.len(), 6);
        assert!(!report.notes.is_empty());
        // Imposing the kept deltas leaves one value per global edge.
        let variables = 2 * 10;
        assert_eq!(variables - report.kept_deltas.len(), complex.face_count(1));

        let lengths = SquaredLengthMap::uniform(&complex, 1.0);
        let value = evaluate_volume_factor(&report, &lengths).unwrap();
        let expected = 4.0 * (2.0_f64.sqrt() / 12.0).ln();
        assert!((value - expected).abs() < 1e-12);
    }

    #[test]
    fn single_simplex_report_is_empty() {
        let complex = SimplicialComplex::build(&[[0, 1, 2, 3, 4]]).unwrap();
        let report = report_for(&complex);
        assert!(report.volume_exponents.is_empty());
        assert!(report.kept_deltas.is_empty());
        assert_eq!(report.local_measure, LocalMeasureSpec::EdgeLengthSquareProduct);
        let lengths = SquaredLengthMap::uniform(&complex, 1.0);
        assert_eq!(evaluate_volume_factor(&report, &lengths).unwrap(), 0.0);
    }

    #[test]
    fn mixed_inputs_are_rejected() {
        let a = fixtures::glued_pair();
        let b = fixtures::boundary_of_5_simplex();
        let kept = select_kept(&a);
        let ledger = delta_zero_ledger(&b);
        let err = assemble_measure_report(&b, &kept, &ledger, LocalMeasureSpec::default())
            .unwrap_err();
        assert!(matches!(err, MeasureError::ComplexMismatch { .. }));
    }

    #[test]
    fn degenerate_counted_face_diverges() {
        let complex = fixtures::glued_pair();
        let report = report_for(&complex);
        // Vertices 1..4 at the corners of a unit square: a genuinely planar
        // tetrahedron, so the interior face volume vanishes exactly.
        let mut lengths = SquaredLengthMap::uniform(&complex, 1.0);
        lengths.insert(simplex(&[1, 4]), 2.0).unwrap();
        lengths.insert(simplex(&[2, 3]), 2.0).unwrap();
        let err = evaluate_volume_factor(&report, &lengths).unwrap_err();
        match err {
            MeasureError::DivergentFactor { simplex, exponent, .. } => {
                assert_eq!(simplex, Simplex::new([1u32, 2, 3, 4]).unwrap());
                assert_eq!(exponent, 4);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn degeneracy_outside_exponent_map_is_ignored() {
        let complex = fixtures::glued_pair();
        let report = report_for(&complex);
        // Flatten boundary triangles through edge {0, 1}; the only counted
        // face is the interior {1, 2, 3, 4}, which stays regular.
        let mut lengths = SquaredLengthMap::uniform(&complex, 1.0);
        lengths.insert(simplex(&[0, 1]), 4.0).unwrap();
        let value = evaluate_volume_factor(&report, &lengths).unwrap();
        let expected = 4.0 * (2.0_f64.sqrt() / 12.0).ln();
        assert!((value - expected).abs() < 1e-12);
    }
}
