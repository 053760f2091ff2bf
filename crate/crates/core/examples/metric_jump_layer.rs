//! A metric discontinuity smoothed over a thin layer: the layer-averaged
//! supermetric, the emergent small parameter, and the singular action.

use simplicial_measure::supermetric::{
    dewitt_supermetric, epsilon_parameter, layer_supermetric, quadratic_form, singular_action,
    FaceType, JumpProfile, Metric3, Profile,
};

fn main() {
    // Induced metric jumps from I to diag(1 + d, 1, 1) across a spacelike
    // face (g_nn = -1 on both sides), interpolated linearly in the layer.
    let delta = 0.5;
    let g1 = Metric3::identity();
    let g2 = Metric3::diagonal(1.0 + delta, 1.0, 1.0);
    let profile = JumpProfile::new(
        Profile::Linear,
        FaceType::Spacelike,
        0.1, // layer thickness in the normal coordinate
        1.0, // transverse coordinate 3-volume
        (-1.0, -1.0),
    )
    .unwrap();

    let layered = layer_supermetric(&g1, &g2, &profile).unwrap();
    println!("layer supermetric entries vs closed forms (d = {delta}):");
    let root = (1.0 + delta).sqrt();
    let rows = [
        ("(11)(22)", layered.entry(0, 1), -2.0 * (root - 1.0) / delta),
        (
            "(22)(33)",
            layered.entry(1, 2),
            -(2.0 / (3.0 * delta)) * ((1.0 + delta) * root - 1.0),
        ),
        ("(12)(12)", layered.entry(3, 3), (root - 1.0) / delta),
    ];
    for (name, numeric, exact) in rows {
        println!("  {name}: {numeric:.12}  vs  {exact:.12}");
    }

    // The layer integral defines the small parameter of the oscillatory
    // exponent; it is negative here because the face ingredients are all
    // positive.
    let eps = epsilon_parameter(&g1, &profile, 1.0).unwrap();
    println!("\nepsilon = {:.6e} (magnitude {:.6e})", eps.epsilon, eps.magnitude());

    // As the jump shrinks, the exact layer action approaches the quadratic
    // form of the flat supermetric divided by epsilon.
    println!("\njump size   S_layer / (dg M(g1) dg / eps)");
    let flat = dewitt_supermetric(&g1).unwrap();
    for t in [1e-1, 1e-2, 1e-3] {
        let g2 = Metric3::diagonal(1.0 + t, 1.0 - 0.5 * t, 1.0);
        let step = g2 - g1;
        let layered = layer_supermetric(&g1, &g2, &profile).unwrap();
        let action = singular_action(&layered, &step, &profile, 1.0).unwrap();
        let reference = quadratic_form(&flat, &step) / eps.epsilon;
        println!("  {t:.0e}      {:.9}", action / reference);
    }
}
