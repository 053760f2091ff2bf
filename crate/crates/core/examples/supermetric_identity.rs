//! The 6x6 metric-space supermetric and its determinant identity.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simplicial_measure::supermetric::{
    det_and_inertia, dewitt_supermetric, full_contraction, Metric3,
};

fn main() {
    // At the identity metric the supermetric has the closed-form spectrum
    // {-2, 1, 1, 1/2, 1/2, 1/2}; the single negative eigenvalue is the
    // conformal direction.
    let identity = Metric3::identity();
    let m = dewitt_supermetric(&identity).unwrap();
    let (det, negatives) = det_and_inertia(&m);
    println!("supermetric at g = I:");
    println!("  det = {det:.15}  (exact: -1/4)");
    println!("  negative eigenvalues = {negatives}");
    let mut eigen: Vec<f64> = m.matrix().symmetric_eigen().eigenvalues.iter().copied().collect();
    eigen.sort_by(|a, b| a.partial_cmp(b).unwrap());
    println!("  spectrum = {eigen:.6?}");

    // det M(g) = -(det g)^{-4}/4 for every invertible g, either sign.
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let g = Metric3::from_components(std::array::from_fn(|_| rng.random_range(-1.5..1.5)));
        if g.det().abs() < 0.1 {
            continue;
        }
        let m = dewitt_supermetric(&g).unwrap();
        let predicted = -0.25 / g.det().powi(4);
        worst = worst.max((m.determinant() - predicted).abs() / predicted.abs());
    }
    println!("\nrandom metrics: max relative deviation from -(det g)^-4/4 = {worst:.3e}");

    // Contracting the supermetric with its own metric over all index pairs
    // gives -6 identically.
    let g = Metric3::diagonal(2.0, 0.5, 3.0);
    let m = dewitt_supermetric(&g).unwrap();
    println!("full contraction with g itself = {:.12}", full_contraction(&m, &g));
}
