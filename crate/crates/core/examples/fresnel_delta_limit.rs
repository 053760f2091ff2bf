//! Oscillatory integrals turning into delta functions: the 1-D limit, the
//! mixed-signature 2-D limit, and the 6-D supermetric prefactor.

use nalgebra::{DMatrix, DVector};
use simplicial_measure::oscillatory::{
    fresnel_1d, fresnel_1d_quadrature, fresnel_nd, stationary_phase_prefactor, GaussianProbe,
    ProductProbe, QuadraticConvention,
};
use simplicial_measure::supermetric::{det_and_inertia, dewitt_supermetric, Metric3};

fn main() {
    // Integral of exp(i x^2 / eps) against a unit Gaussian probe: the
    // prediction sqrt(pi eps) e^{i pi/4} phi(0) becomes exact as eps -> 0,
    // with first-order convergence.
    let probe = GaussianProbe::standard();
    println!("eps        relative error   phase error");
    for eps in [1e-2, 1e-3, 1e-4] {
        let r = fresnel_1d(eps, &probe).unwrap();
        println!(
            "{eps:.0e}     {:.6e}     {:+.3e}",
            r.relative_error,
            r.phase_error()
        );
    }

    // The closed form agrees with direct quadrature at moderate eps.
    let eps = 2e-2;
    let closed = fresnel_1d(eps, &probe).unwrap().numeric;
    let quadrature = fresnel_1d_quadrature(eps, &probe).unwrap();
    println!("\nclosed form vs quadrature at eps = {eps}:");
    println!("  {closed:.9}  vs  {quadrature:.9}");

    // Signature (+,-): each negative eigenvalue rotates the phase by -pi/2,
    // so diag(1,-1) has a real positive prefactor.
    let m = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, -1.0]));
    let probe2 = ProductProbe::isotropic(2, 1.0).unwrap();
    let r = fresnel_nd(&m, 1e-3, &probe2).unwrap();
    println!("\ndiag(1,-1) at eps = 1e-3:");
    println!("  numeric   = {:.9}", r.numeric);
    println!("  predicted = {:.9}", r.predicted);

    // The 6-D case of the metric-space supermetric: |det M| = (det g)^-4/4
    // turns the half-convention prefactor into 2 (pi eps)^3 (det g)^2.
    let g = Metric3::diagonal(1.3, 0.9, 1.1);
    let m6 = dewitt_supermetric(&g).unwrap();
    let (det, negatives) = det_and_inertia(&m6);
    let eps = 1e-3;
    let prefactor =
        stationary_phase_prefactor(6, eps, det, negatives, QuadraticConvention::Plain).unwrap();
    let pi_eps = std::f64::consts::PI * eps;
    println!("\nsupermetric prefactor at eps = {eps}:");
    println!("  magnitude = {:.12e}", prefactor.norm());
    println!(
        "  2(pi eps)^3 (det g)^2 = {:.12e}",
        2.0 * pi_eps.powi(3) * g.det().powi(2)
    );
    println!("  phase = {:.6} rad", prefactor.arg());
}
