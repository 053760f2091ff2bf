//! The supermetric on symmetric 3×3 metric perturbations and its thin-layer
//! average across a discontinuity surface.
//!
//! For an invertible 3-metric g the DeWitt-like form is
//!
//!   M^(ab)(cd) = (g^ac g^bd + g^ad g^bc)/2 − g^ab g^cd,
//!
//! stored as a 6×6 matrix over the independent components in the order
//! (11, 22, 33, 12, 13, 23). In this convention det M = −(det g)^−4 / 4
//! exactly, and M has exactly one negative eigenvalue when g is positive
//! definite.
//!
//! A jump of the induced metric across a 3-face, smoothed over a layer of
//! coordinate thickness Δxⁿ by a monotone profile f (f(−1/2) = 0,
//! f(1/2) = 1), is governed by the layer average
//!
//!   M̃ = ∫ sqrt(−det g(τ) / g_nn(τ)) · M(g(τ)) · f'(τ)² dτ,
//!   g(τ) = g₁ + f(τ) (g₂ − g₁),
//!
//! with the normal-normal component g_nn switching sides at τ = 0. The
//! quadratic form (Δg, M̃ Δg) scaled by the layer coefficient gives the
//! action carried by the discontinuity, and the same ingredients define the
//! small oscillation scale ε that drives the delta-function limit.

use std::cell::RefCell;
use std::f64::consts::PI;
use std::ops::{Add, Mul, Sub};

use nalgebra::{Matrix3, Matrix6, Vector6};
use thiserror::Error;

use crate::quad;

/// Component order of the 6-dimensional representation of symmetric 3×3
/// matrices: diagonal entries first, then the upper triangle row by row.
pub const PAIR_ORDER: [(usize, usize); 6] = [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)];

/// Relative tolerance for symmetry checks and singularity cutoffs.
const SYMMETRY_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, PartialEq, Debug, Error)]
pub enum SupermetricError {
    #[error("matrix is not symmetric (max asymmetry {max_asymmetry:.3e})")]
    NotSymmetric { max_asymmetry: f64 },
    #[error("metric is singular (determinant {det:.3e})")]
    SingularMetric { det: f64 },
    #[error("parameter {name} = {value} out of range")]
    InvalidParameter { name: &'static str, value: f64 },
    #[error("metric data inconsistent with face type (det {det:.3e}, g_nn {normal:.3e})")]
    FaceSignature { det: f64, normal: f64 },
    #[error("metric path crosses a signature change at τ = {tau:.6} (−det g/g_nn = {value:.3e})")]
    SignatureCrossed { tau: f64, value: f64 },
    #[error("metric degenerates along the layer path at τ = {tau:.6}")]
    DegenerateAlongPath { tau: f64 },
    #[error("layer quadrature did not stabilize (resolution difference {difference:.3e})")]
    QuadratureAccuracy { difference: f64 },
}

/// A symmetric 3×3 matrix: an induced 3-metric or a perturbation of one.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Metric3 {
    m: Matrix3<f64>,
}

impl Metric3 {
    /// Accepts a matrix symmetric to within 1e-12 (relative) and stores its
    /// symmetrization.
    pub fn from_matrix(m: Matrix3<f64>) -> Result<Self, SupermetricError> {
        let scale = m.amax().max(1.0);
        let asym = (m - m.transpose()).amax();
        if asym > SYMMETRY_TOLERANCE * scale {
            return Err(SupermetricError::NotSymmetric {
                max_asymmetry: asym,
            });
        }
        Ok(Metric3 {
            m: (m + m.transpose()) * 0.5,
        })
    }

    /// Builds from the six independent components in [`PAIR_ORDER`].
    pub fn from_components(c: [f64; 6]) -> Self {
        let mut m = Matrix3::zeros();
        for (&(a, b), &v) in PAIR_ORDER.iter().zip(&c) {
            m[(a, b)] = v;
            m[(b, a)] = v;
        }
        Metric3 { m }
    }

    pub fn identity() -> Self {
        Metric3 {
            m: Matrix3::identity(),
        }
    }

    pub fn diagonal(a: f64, b: f64, c: f64) -> Self {
        Metric3 {
            m: Matrix3::from_diagonal(&nalgebra::Vector3::new(a, b, c)),
        }
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.m
    }

    pub fn components(&self) -> [f64; 6] {
        let mut c = [0.0; 6];
        for (slot, &(a, b)) in c.iter_mut().zip(&PAIR_ORDER) {
            *slot = self.m[(a, b)];
        }
        c
    }

    pub fn det(&self) -> f64 {
        self.m.determinant()
    }
}

impl Add for Metric3 {
    type Output = Metric3;
    fn add(self, rhs: Metric3) -> Metric3 {
        Metric3 { m: self.m + rhs.m }
    }
}

impl Sub for Metric3 {
    type Output = Metric3;
    fn sub(self, rhs: Metric3) -> Metric3 {
        Metric3 { m: self.m - rhs.m }
    }
}

impl Mul<f64> for Metric3 {
    type Output = Metric3;
    fn mul(self, rhs: f64) -> Metric3 {
        Metric3 { m: self.m * rhs }
    }
}

/// A symmetric quadratic form on the 6-dimensional space of metric
/// components, indexed by [`PAIR_ORDER`].
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct SuperMetric {
    m: Matrix6<f64>,
}

impl SuperMetric {
    pub fn from_matrix(m: Matrix6<f64>) -> Result<Self, SupermetricError> {
        let scale = m.amax().max(1.0);
        let asym = (m - m.transpose()).amax();
        if asym > SYMMETRY_TOLERANCE * scale {
            return Err(SupermetricError::NotSymmetric {
                max_asymmetry: asym,
            });
        }
        Ok(SuperMetric {
            m: (m + m.transpose()) * 0.5,
        })
    }

    pub fn matrix(&self) -> &Matrix6<f64> {
        &self.m
    }

    pub fn determinant(&self) -> f64 {
        self.m.determinant()
    }

    pub fn entry(&self, row: usize, col: usize) -> f64 {
        self.m[(row, col)]
    }
}

/// The DeWitt-like supermetric of an invertible 3-metric.
pub fn dewitt_supermetric(g: &Metric3) -> Result<SuperMetric, SupermetricError> {
    let det = g.det();
    if !det.is_finite() || det.abs() <= SYMMETRY_TOLERANCE {
        return Err(SupermetricError::SingularMetric { det });
    }
    let inv = g
        .matrix()
        .try_inverse()
        .ok_or(SupermetricError::SingularMetric { det })?;
    let mut m = Matrix6::zeros();
    for (row, &(a, b)) in PAIR_ORDER.iter().enumerate() {
        for (col, &(c, d)) in PAIR_ORDER.iter().enumerate() {
            m[(row, col)] =
                0.5 * (inv[(a, c)] * inv[(b, d)] + inv[(a, d)] * inv[(b, c)]) - inv[(a, b)] * inv[(c, d)];
        }
    }
    SuperMetric::from_matrix(m)
}

/// Determinant and number of negative eigenvalues of a supermetric.
///
/// For M built by [`dewitt_supermetric`], det = −(det g)^−4 / 4 for every
/// invertible g, and the negative count is 1 when g is positive definite.
pub fn det_and_inertia(m: &SuperMetric) -> (f64, usize) {
    let eigen = m.m.symmetric_eigen();
    let negatives = eigen.eigenvalues.iter().filter(|&&l| l < 0.0).count();
    (m.m.determinant(), negatives)
}

/// The quadratic form v(δ)ᵀ M v(δ) with v(δ) the plain component 6-vector of
/// a symmetric perturbation δ.
///
/// This is the form that appears in the oscillatory exponent when the six
/// independent components are the integration variables; no multiplicity
/// weights are applied to the off-diagonal entries. For the all-indices
/// tensor contraction use [`full_contraction`].
pub fn quadratic_form(m: &SuperMetric, delta: &Metric3) -> f64 {
    let v = Vector6::from_row_slice(&delta.components());
    (v.transpose() * m.m * v)[(0, 0)]
}

/// The tensor contraction δ_ab M^(ab)(cd) δ_cd over all index pairs, i.e.
/// with off-diagonal components counted twice on each side. For any
/// invertible g, full_contraction(M(g), g) = −6.
pub fn full_contraction(m: &SuperMetric, delta: &Metric3) -> f64 {
    let mut v = delta.components();
    for slot in v.iter_mut().skip(3) {
        *slot *= 2.0;
    }
    let v = Vector6::from_row_slice(&v);
    (v.transpose() * m.m * v)[(0, 0)]
}

/// Interpolation shape of the metric across the layer, rising from 0 at
/// τ = −1/2 to 1 at τ = 1/2.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Profile {
    /// f(τ) = τ + 1/2. Slope energy ∫ f'² = 1, the minimum possible.
    Linear,
    /// f(τ) = 1/2 + (3/2)τ − 2τ³, with vanishing slope at the layer edges.
    /// Slope energy 6/5.
    Smoothstep,
}

impl Profile {
    pub fn value(self, tau: f64) -> f64 {
        let t = tau.clamp(-0.5, 0.5);
        match self {
            Profile::Linear => t + 0.5,
            Profile::Smoothstep => 0.5 + 1.5 * t - 2.0 * t * t * t,
        }
    }

    pub fn slope(self, tau: f64) -> f64 {
        if !(-0.5..=0.5).contains(&tau) {
            return 0.0;
        }
        match self {
            Profile::Linear => 1.0,
            Profile::Smoothstep => 1.5 - 6.0 * tau * tau,
        }
    }

    /// Both shipped profiles satisfy f(τ) + f(−τ) = 1.
    pub fn is_symmetric(self) -> bool {
        true
    }
}

/// Slope energy ∫ f'(τ)² dτ over the layer.
///
/// By Cauchy-Schwarz this is at least (∫ f')² = 1 for any profile rising by
/// one unit, with equality only for [`Profile::Linear`].
pub fn profile_integral(profile: Profile) -> f64 {
    slope_energy(|tau| profile.slope(tau))
}

/// Slope energy of an arbitrary slope function over τ ∈ [−1/2, 1/2].
pub fn slope_energy(slope: impl Fn(f64) -> f64) -> f64 {
    quad::integrate(|tau| slope(tau) * slope(tau), -0.5, 0.5, 16, 8)
}

/// Shape of the normal-component switch across the layer.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum StepProfile {
    /// Side 1 for τ < 0, side 2 for τ ≥ 0.
    #[default]
    Heaviside,
}

impl StepProfile {
    pub fn side_two(self, tau: f64) -> bool {
        match self {
            StepProfile::Heaviside => tau >= 0.0,
        }
    }
}

/// Causal character of the 3-face the jump lives on, fixing the signs of the
/// induced determinant and the normal-normal metric component.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FaceType {
    /// det g♭ > 0, g_nn < 0.
    Spacelike,
    /// det g♭ < 0, g_nn > 0.
    Timelike,
}

impl FaceType {
    fn check(self, det: f64, normal: f64) -> Result<(), SupermetricError> {
        let ok = match self {
            FaceType::Spacelike => det > 0.0 && normal < 0.0,
            FaceType::Timelike => det < 0.0 && normal > 0.0,
        };
        if ok {
            Ok(())
        } else {
            Err(SupermetricError::FaceSignature { det, normal })
        }
    }
}

/// Geometry of a smoothed metric jump: the interpolation profile, the layer
/// thickness and transverse coordinate volume, and the normal-normal metric
/// component on each side.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct JumpProfile {
    pub shape: Profile,
    pub step: StepProfile,
    pub face_type: FaceType,
    /// Coordinate thickness Δxⁿ of the layer in the normal direction.
    pub normal_thickness: f64,
    /// Coordinate 3-volume Δ³x of the face patch.
    pub transverse_volume: f64,
    /// g_nn on side 1 and side 2.
    pub normal_components: (f64, f64),
}

impl JumpProfile {
    pub fn new(
        shape: Profile,
        face_type: FaceType,
        normal_thickness: f64,
        transverse_volume: f64,
        normal_components: (f64, f64),
    ) -> Result<Self, SupermetricError> {
        for (name, value) in [
            ("normal_thickness", normal_thickness),
            ("transverse_volume", transverse_volume),
        ] {
            if !value.is_finite() || value <= 0.0 {
                return Err(SupermetricError::InvalidParameter { name, value });
            }
        }
        let (n1, n2) = normal_components;
        for value in [n1, n2] {
            if !value.is_finite() || value == 0.0 {
                return Err(SupermetricError::InvalidParameter {
                    name: "normal_components",
                    value,
                });
            }
        }
        let sign_ok = match face_type {
            FaceType::Spacelike => n1 < 0.0 && n2 < 0.0,
            FaceType::Timelike => n1 > 0.0 && n2 > 0.0,
        };
        if !sign_ok {
            return Err(SupermetricError::FaceSignature {
                det: f64::NAN,
                normal: n1,
            });
        }
        Ok(JumpProfile {
            shape,
            step: StepProfile::Heaviside,
            face_type,
            normal_thickness,
            transverse_volume,
            normal_components,
        })
    }

    fn normal_at(&self, tau: f64) -> f64 {
        if self.step.side_two(tau) {
            self.normal_components.1
        } else {
            self.normal_components.0
        }
    }
}

fn layer_integrand(
    g1: &Metric3,
    delta: &Metric3,
    profile: &JumpProfile,
    tau: f64,
) -> Result<[f64; 36], SupermetricError> {
    let g = *g1 + *delta * profile.shape.value(tau);
    let ratio = -g.det() / profile.normal_at(tau);
    if !(ratio > SYMMETRY_TOLERANCE) {
        return Err(SupermetricError::SignatureCrossed { tau, value: ratio });
    }
    let m = dewitt_supermetric(&g).map_err(|_| SupermetricError::DegenerateAlongPath { tau })?;
    let weight = ratio.sqrt() * profile.shape.slope(tau).powi(2);
    let mut out = [0.0; 36];
    for (k, slot) in out.iter_mut().enumerate() {
        *slot = m.entry(k / 6, k % 6) * weight;
    }
    Ok(out)
}

fn layer_pass(
    g1: &Metric3,
    delta: &Metric3,
    profile: &JumpProfile,
    panels: usize,
) -> Result<Matrix6<f64>, SupermetricError> {
    let failure: RefCell<Option<SupermetricError>> = RefCell::new(None);
    let f = |tau: f64| -> Vec<f64> {
        if failure.borrow().is_some() {
            return vec![0.0; 36];
        }
        match layer_integrand(g1, delta, profile, tau) {
            Ok(vals) => vals.to_vec(),
            Err(e) => {
                *failure.borrow_mut() = Some(e);
                vec![0.0; 36]
            }
        }
    };
    // The normal component switches sides at τ = 0; integrate each half on
    // its own panels so the rule never straddles the discontinuity.
    let mut total = quad::integrate_vector(&f, 36, -0.5, 0.0, 16, panels);
    let right = quad::integrate_vector(&f, 36, 0.0, 0.5, 16, panels);
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    for (t, r) in total.iter_mut().zip(right) {
        *t += r;
    }
    Ok(Matrix6::from_fn(|r, c| total[r * 6 + c]))
}

/// The layer-averaged supermetric
/// M̃ = ∫ sqrt(−det g(τ)/g_nn(τ)) M(g(τ)) f'(τ)² dτ along the straight path
/// g(τ) = g₁ + f(τ)(g₂ − g₁).
///
/// The result is checked by recomputing at doubled quadrature resolution;
/// disagreement beyond 1e-10 (relative to the largest entry) is an error.
pub fn layer_supermetric(
    g1: &Metric3,
    g2: &Metric3,
    profile: &JumpProfile,
) -> Result<SuperMetric, SupermetricError> {
    for g in [g1, g2] {
        profile.face_type.check(g.det(), profile.normal_components.0)?;
    }
    let delta = *g2 - *g1;
    let coarse = layer_pass(g1, &delta, profile, 8)?;
    let fine = layer_pass(g1, &delta, profile, 16)?;
    let scale = fine.amax().max(1.0);
    let difference = (fine - coarse).amax();
    if difference > 1e-10 * scale {
        return Err(SupermetricError::QuadratureAccuracy { difference });
    }
    SuperMetric::from_matrix(fine)
}

/// Ingredients and value of the small oscillation scale of a smoothed jump.
///
/// The stored `epsilon` keeps the sign produced by the defining expression,
/// which is negative when all geometric ingredients are positive; the
/// magnitude is what plays the role of the small parameter in the
/// delta-function limits.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct EpsilonParams {
    pub epsilon: f64,
    pub newton_constant: f64,
    pub det_induced: f64,
    pub mean_inverse_root_normal: f64,
    pub profile_energy: f64,
    pub transverse_volume: f64,
    pub normal_thickness: f64,
}

impl EpsilonParams {
    /// |ε|, the oscillation scale itself.
    pub fn magnitude(&self) -> f64 {
        self.epsilon.abs()
    }
}

/// The oscillation scale of the layer:
///
///   1/ε = −(Δ³x sqrt|det g♭₁| / (64 π G Δxⁿ))
///         · (|g_nn1|^−1/2 + |g_nn2|^−1/2)/2 · ∫ f'² dτ.
///
/// For both face types the branch factors from sqrt(−det g♭) and g_nn^−1/2
/// combine to a real positive magnitude, leaving the overall sign negative;
/// ε vanishes linearly with the layer thickness Δxⁿ.
pub fn epsilon_parameter(
    g1: &Metric3,
    profile: &JumpProfile,
    newton_constant: f64,
) -> Result<EpsilonParams, SupermetricError> {
    if !newton_constant.is_finite() || newton_constant <= 0.0 {
        return Err(SupermetricError::InvalidParameter {
            name: "newton_constant",
            value: newton_constant,
        });
    }
    let det = g1.det();
    profile.face_type.check(det, profile.normal_components.0)?;

    let (n1, n2) = profile.normal_components;
    let mean = 0.5 * (n1.abs().powf(-0.5) + n2.abs().powf(-0.5));
    let energy = profile_integral(profile.shape);
    let inv_eps = -(profile.transverse_volume * det.abs().sqrt() * mean * energy)
        / (64.0 * PI * newton_constant * profile.normal_thickness);
    Ok(EpsilonParams {
        epsilon: 1.0 / inv_eps,
        newton_constant,
        det_induced: det,
        mean_inverse_root_normal: mean,
        profile_energy: energy,
        transverse_volume: profile.transverse_volume,
        normal_thickness: profile.normal_thickness,
    })
}

/// Coordinate 3-volume Δ³x of a face patch whose metric 3-volume is `volume`
/// under the induced metric `g1`: Δ³x = 3! · volume / sqrt|det g♭|.
pub fn transverse_volume_from_face_volume(
    volume: f64,
    g1: &Metric3,
) -> Result<f64, SupermetricError> {
    if !volume.is_finite() || volume <= 0.0 {
        return Err(SupermetricError::InvalidParameter {
            name: "volume",
            value: volume,
        });
    }
    let det = g1.det();
    if det.abs() <= SYMMETRY_TOLERANCE {
        return Err(SupermetricError::SingularMetric { det });
    }
    Ok(6.0 * volume / det.abs().sqrt())
}

/// Action carried by the smoothed discontinuity:
///
///   S = −(Δ³x / (64 π G Δxⁿ)) · v(Δg)ᵀ M̃ v(Δg).
///
/// As Δg → 0 with a side-symmetric profile this approaches
/// (Δg M(g₁) Δg) / ε with the signed ε of [`epsilon_parameter`].
pub fn singular_action(
    til_m: &SuperMetric,
    delta: &Metric3,
    profile: &JumpProfile,
    newton_constant: f64,
) -> Result<f64, SupermetricError> {
    if !newton_constant.is_finite() || newton_constant <= 0.0 {
        return Err(SupermetricError::InvalidParameter {
            name: "newton_constant",
            value: newton_constant,
        });
    }
    let coefficient = -profile.transverse_volume
        / (64.0 * PI * newton_constant * profile.normal_thickness);
    Ok(coefficient * quadratic_form(til_m, delta))
}
