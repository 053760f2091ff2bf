//! Self-contained numerical verification suites.
//!
//! Each suite bundles the identities its modules are built on and checks
//! them at fixed tolerances: supermetric determinant algebra, the
//! delta-function limits of oscillatory integrals, exact constraint ranks
//! on the bundled fixtures, measure-gluing consistency, and flatness of the
//! subdivided 4-simplex. Suites return one [`CheckResult`] per check so
//! callers can render pass/fail lines with the numbers that produced them.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::constraints::{
    constraint_rank, delta_zero_ledger, enumerate_constraints, select_kept, ConstraintMatrix,
};
use crate::fixtures;
use crate::geometry::{
    curvature_action, triangle_angle_data, ActionParams, SquaredLengthMap,
};
use crate::oscillatory::{
    fresnel_1d, fresnel_nd, glue_consistency_check, GaussianProbe, MassField, ProductProbe,
};
use crate::supermetric::{det_and_inertia, dewitt_supermetric, full_contraction, Metric3};

/// One named check: measured value against a bound.
#[derive(Clone, PartialEq, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub value: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckResult {
    fn bound(name: &'static str, value: f64, tolerance: f64) -> Self {
        CheckResult {
            name,
            value,
            tolerance,
            passed: value.is_finite() && value <= tolerance,
        }
    }

    /// For checks of the form value ≥ threshold (orders, counts).
    fn at_least(name: &'static str, value: f64, threshold: f64) -> Self {
        CheckResult {
            name,
            value,
            tolerance: threshold,
            passed: value.is_finite() && value >= threshold,
        }
    }
}

/// Results of one suite run.
#[derive(Clone, PartialEq, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    /// Supermetric determinant identity and spectrum.
    DetM,
    /// Delta-function limits of Fresnel integrals.
    Fresnel,
    /// Exact constraint ranks and ledger patterns on fixtures.
    Rank,
    /// Measure-gluing consistency at a jump.
    Glue,
    /// Zero deficits on the flat subdivided 4-simplex.
    Flatness,
}

impl Suite {
    pub fn all() -> [Suite; 5] {
        [
            Suite::DetM,
            Suite::Fresnel,
            Suite::Rank,
            Suite::Glue,
            Suite::Flatness,
        ]
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::DetM => "detm",
            Suite::Fresnel => "fresnel",
            Suite::Rank => "rank",
            Suite::Glue => "glue",
            Suite::Flatness => "flatness",
        };
        write!(f, "{name}")
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "detm" => Ok(Suite::DetM),
            "fresnel" => Ok(Suite::Fresnel),
            "rank" => Ok(Suite::Rank),
            "glue" => Ok(Suite::Glue),
            "flatness" => Ok(Suite::Flatness),
            other => Err(format!(
                "unknown suite {other:?} (expected detm, fresnel, rank, glue, flatness)"
            )),
        }
    }
}

/// Runs one suite. `tolerance` overrides the primary bound of the suite
/// (the first check); secondary structural checks keep their own bounds.
pub fn run_suite(suite: Suite, tolerance: Option<f64>) -> SuiteReport {
    let checks = match suite {
        Suite::DetM => detm_checks(tolerance.unwrap_or(1e-9)),
        Suite::Fresnel => fresnel_checks(tolerance.unwrap_or(0.01)),
        Suite::Rank => rank_checks(),
        Suite::Glue => glue_checks(tolerance.unwrap_or(1e-5)),
        Suite::Flatness => flatness_checks(tolerance.unwrap_or(1e-9)),
    };
    SuiteReport { suite, checks }
}

/// Random symmetric metric with |det| in [0.1, 10], either sign.
fn random_metric(rng: &mut ChaCha8Rng) -> Metric3 {
    loop {
        let c: [f64; 6] = std::array::from_fn(|_| rng.random_range(-1.5..1.5));
        let g = Metric3::from_components(c);
        let det = g.det().abs();
        if (0.1..=10.0).contains(&det) {
            return g;
        }
    }
}

fn detm_checks(tolerance: f64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(20240615);
    let mut max_rel = 0.0f64;
    let mut max_contraction = 0.0f64;
    let mut positive_dets = 0usize;
    for _ in 0..1000 {
        let g = random_metric(&mut rng);
        if g.det() > 0.0 {
            positive_dets += 1;
        }
        let m = dewitt_supermetric(&g).expect("regular metric");
        let predicted = -0.25 / g.det().powi(4);
        let rel = (m.determinant() - predicted).abs() / predicted.abs();
        max_rel = max_rel.max(rel);
        max_contraction = max_contraction.max((full_contraction(&m, &g) + 6.0).abs());
    }

    let identity = dewitt_supermetric(&Metric3::identity()).expect("identity");
    let (det_i, negatives) = det_and_inertia(&identity);
    let mut eigenvalues: Vec<f64> = identity
        .matrix()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    eigenvalues.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let expected = [-2.0, 0.5, 0.5, 0.5, 1.0, 1.0];
    let eig_dev = eigenvalues
        .iter()
        .zip(expected)
        .map(|(e, x)| (e - x).abs())
        .fold(0.0f64, f64::max);

    vec![
        CheckResult::bound("determinant-identity-max-relative-deviation", max_rel, tolerance),
        CheckResult::at_least(
            "both-determinant-signs-sampled",
            positive_dets.min(1000 - positive_dets) as f64,
            1.0,
        ),
        CheckResult::bound("identity-determinant-offset", (det_i + 0.25).abs(), 1e-12),
        CheckResult::bound("identity-negative-count-offset", (negatives as f64) - 1.0, 0.0),
        CheckResult::bound("identity-eigenvalue-deviation", eig_dev, 1e-10),
        CheckResult::bound("trace-contraction-offset", max_contraction, 1e-9),
    ]
}

fn fresnel_checks(tolerance: f64) -> Vec<CheckResult> {
    let probe = GaussianProbe::standard();
    let sweep: Vec<f64> = [1e-2, 1e-3, 1e-4]
        .iter()
        .map(|&eps| fresnel_1d(eps, &probe).expect("valid eps").relative_error)
        .collect();
    // relative error ~ eps^p; fit p from the endpoints of the sweep, two
    // decades apart.
    let order = (sweep[0] / sweep[2]).ln() / 1e2f64.ln();

    let diag = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![1.0, -1.0]));
    let nd2 = fresnel_nd(&diag, 1e-3, &ProductProbe::isotropic(2, 1.0).unwrap())
        .expect("2-d probe");
    let one = DMatrix::from_element(1, 1, 1.0);
    let nd1 = fresnel_nd(&one, 1e-3, &ProductProbe::isotropic(1, 1.0).unwrap())
        .expect("1-d probe");

    vec![
        CheckResult::bound("probe-1d-relative-error", sweep[1], tolerance),
        CheckResult::at_least("probe-1d-convergence-order", order, 0.9),
        CheckResult::bound(
            "signature-1-1-magnitude-error",
            (nd2.numeric.norm() / nd2.predicted.norm() - 1.0).abs(),
            0.02,
        ),
        CheckResult::bound("signature-1-1-phase-error", nd2.phase_error().abs(), 0.05),
        CheckResult::bound(
            "dimension-1-magnitude-error",
            (nd1.numeric.norm() / nd1.predicted.norm() - 1.0).abs(),
            0.02,
        ),
        CheckResult::bound("dimension-1-phase-error", nd1.phase_error().abs(), 0.05),
    ]
}

fn rank_checks() -> Vec<CheckResult> {
    let mut checks = Vec::new();

    let complex = fixtures::boundary_of_5_simplex();
    let constraints = enumerate_constraints(&complex);
    let matrix = ConstraintMatrix::from_constraints(&complex, &constraints)
        .expect("fixture constraints");
    let kept = select_kept(&complex);
    let kept_matrix =
        ConstraintMatrix::from_constraints(&complex, &kept.kept).expect("kept subset");
    checks.push(CheckResult::bound(
        "closed-fixture-variable-count-offset",
        (matrix.variables.len() as f64) - 60.0,
        0.0,
    ));
    checks.push(CheckResult::bound(
        "closed-fixture-constraint-count-offset",
        (constraints.len() as f64) - 90.0,
        0.0,
    ));
    checks.push(CheckResult::bound(
        "closed-fixture-rank-offset",
        (constraint_rank(&matrix) as f64) - 45.0,
        0.0,
    ));
    checks.push(CheckResult::bound(
        "closed-fixture-kept-rank-offset",
        (constraint_rank(&kept_matrix) as f64) - (kept.kept.len() as f64),
        0.0,
    ));
    let forest_deviation = kept
        .forests
        .values()
        .map(|f| (f.kept_faces.len() as f64 - 3.0).abs())
        .fold(0.0f64, f64::max);
    checks.push(CheckResult::bound(
        "closed-fixture-kept-per-edge-offset",
        forest_deviation,
        0.0,
    ));
    let ledger = delta_zero_ledger(&complex);
    let pattern_ok = ledger.three_face_exponents.len() == 15
        && ledger.three_face_exponents.values().all(|&e| e == 4)
        && ledger.triangle_exponents.len() == 20
        && ledger.triangle_exponents.values().all(|&e| e == -3)
        && ledger.edge_exponents.len() == 15
        && ledger.edge_exponents.values().all(|&e| e == 2);
    checks.push(CheckResult::bound(
        "closed-fixture-ledger-pattern-mismatches",
        if pattern_ok { 0.0 } else { 1.0 },
        0.0,
    ));

    // Kernel identity on every bundled complex: variables − rank = edges.
    let mut kernel_deviation = 0.0f64;
    let mut complexes: Vec<SimplicialComplex> =
        vec![fixtures::boundary_of_5_simplex(), fixtures::glued_pair()];
    for k in 2..=5 {
        complexes.push(fixtures::chain(k).expect("chain fixture"));
    }
    for complex in &complexes {
        let constraints = enumerate_constraints(complex);
        let matrix =
            ConstraintMatrix::from_constraints(complex, &constraints).expect("fixture");
        let kernel = matrix.kernel_dimension() as f64;
        kernel_deviation = kernel_deviation.max((kernel - complex.face_count(1) as f64).abs());
    }
    checks.push(CheckResult::bound(
        "kernel-equals-edge-count-deviation",
        kernel_deviation,
        0.0,
    ));
    checks
}

fn glue_checks(tolerance: f64) -> Vec<CheckResult> {
    // The probe regulator is much wider than the oscillation scale, and the
    // mass fields vary with position.
    let eps = 1e-12;
    let width = 1e-3;

    let mass1 = MassField::varying(1, |x| {
        DMatrix::from_element(1, 1, 2.0 + 0.5 * (3.0 * x[0]).sin())
    });
    let dev1 = glue_consistency_check(&mass1, &[0.4], eps, width).expect("1-d glue");

    let mass2 = MassField::varying(2, |x| {
        let off = 0.1 * x[1];
        DMatrix::from_row_slice(
            2,
            2,
            &[
                2.0 + 0.3 * x[0].sin(),
                off,
                off,
                -1.0 - 0.2 * x[0].cos(),
            ],
        )
    });
    let dev2 = glue_consistency_check(&mass2, &[0.4, -0.3], eps, width).expect("2-d glue");

    vec![
        CheckResult::bound("varying-mass-1d-deviation", dev1, tolerance),
        CheckResult::bound("varying-mass-2d-mixed-signature-deviation", dev2, tolerance),
    ]
}

fn flatness_checks(tolerance: f64) -> Vec<CheckResult> {
    let (complex, lengths) = fixtures::flat_subdivision();
    let mut max_deficit = 0.0f64;
    let mut closed = 0usize;
    for triangle in complex.faces(2) {
        let data = triangle_angle_data(&complex, triangle, &lengths).expect("flat fixture");
        if let Some(deficit) = data.deficit {
            closed += 1;
            max_deficit = max_deficit.max(deficit.abs());
        }
    }
    let params = ActionParams::new(1.0)
        .and_then(|p| p.with_coefficient(1.0))
        .expect("unit coefficient");
    let action = curvature_action(&complex, &lengths, &params).expect("flat fixture");

    // Curved cross-check: the closed fixture at unit lengths has deficit
    // 2π − 3 arccos(1/4) on all 20 triangles.
    let closed_complex = fixtures::boundary_of_5_simplex();
    let unit = SquaredLengthMap::uniform(&closed_complex, 1.0);
    let expected_action =
        20.0 * (3.0f64.sqrt() / 4.0) * (2.0 * PI - 3.0 * 0.25f64.acos());
    let curved = curvature_action(&closed_complex, &unit, &params).expect("closed fixture");

    vec![
        CheckResult::bound("flat-subdivision-max-deficit", max_deficit, tolerance),
        CheckResult::bound("flat-subdivision-action-magnitude", action.abs(), 10.0 * tolerance),
        CheckResult::at_least("flat-subdivision-closed-triangles", closed as f64, 10.0),
        CheckResult::bound(
            "closed-fixture-action-offset",
            (curved - expected_action).abs(),
            1e-10,
        ),
    ]
}
