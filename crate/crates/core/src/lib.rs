//! Simplicial complexes, curvature actions, and the assembly of a
//! path-measure from rapidly varying metrics.
//!
//! The crate computes, on explicit triangulations by 4-simplices with
//! squared edge lengths as the only geometric data:
//!
//! - face lattices, stars, and validation of gluing structure ([`complex`]);
//! - volumes, hyperdihedral angles, deficit angles, and the curvature
//!   action in global and per-simplex split form ([`geometry`]);
//! - the 6x6 metric-space supermetric, its determinant identity, and the
//!   layer average across a smoothed metric jump ([`supermetric`]);
//! - delta-function limits of oscillatory integrals: 1-D and N-D Fresnel
//!   factors, stationary-phase prefactors, a toy jump trajectory, and the
//!   measure-gluing consistency check ([`oscillatory`]);
//! - edge-length continuity constraints, their exact integer rank, the
//!   spanning-forest kept set, and delta-of-zero exponent bookkeeping
//!   ([`constraints`]);
//! - the assembled measure report and its volume-power factor
//!   ([`measure`]).
//!
//! Supporting modules: bundled [`fixtures`], plain-text [`io`] formats,
//! deterministic [`report`] documents, Gauss-Legendre [`quad`]rature,
//! numerical [`verify`] suites, and the [`cli`] backing the `simmeasure`
//! binary.
//!
//! ## Examples
//!
//! One runnable example per capability, in suggested reading order:
//!
//! - **`complex_queries`** - build complexes, walk faces, stars, edge
//!   graphs, validate
//! - **`volumes_and_action`** - volumes, dihedral angles, deficits, the
//!   curvature action
//! - **`supermetric_identity`** - the supermetric and its determinant
//!   identity
//! - **`metric_jump_layer`** - layer-averaged supermetric and the emergent
//!   small parameter
//! - **`fresnel_delta_limit`** - oscillatory integrals turning into delta
//!   functions
//! - **`toy_trajectory_gluing`** - the singular/regular action split and
//!   measure gluing
//! - **`constraint_elimination`** - exact rank and spanning-forest
//!   redundancy elimination
//! - **`measure_assembly`** - the final measure report and volume factor
//!
//! ```bash
//! cargo run -p simplicial-measure --example complex_queries
//! cargo run -p simplicial-measure --example measure_assembly
//! ```
//!
//! ## Command line
//!
//! The `simmeasure` binary exposes the same pipeline on plain-text complex
//! files with deterministic key-value reports:
//!
//! ```bash
//! simmeasure gen boundary5 --out b5.cf
//! simmeasure validate --complex b5.cf
//! simmeasure constraints --complex b5.cf
//! simmeasure measure --complex b5.cf
//! simmeasure verify --suite all
//! ```

pub mod cli;
pub mod complex;
pub mod constraints;
pub mod fixtures;
pub mod geometry;
pub mod io;
pub mod measure;
pub mod oscillatory;
pub mod quad;
pub mod report;
pub mod supermetric;
pub mod verify;
