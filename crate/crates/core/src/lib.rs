//! Construction, verification, bounding and benchmarking of k-radius
//! sequences and their t-subset and packing generalizations.
//!
//! A sequence over the alphabet `{0, …, n-1}` is a *k-radius sequence* if
//! every pair of distinct symbols occurs within distance `k` somewhere in
//! the sequence. The t-subset generalization asks that every t-subset of
//! symbols appears inside some window of `k+1` consecutive positions; the
//! packing variant asks that no t-subset appears in more than one such
//! position.
//!
//! Modules:
//!
//! * [`sequence`] — the sequence data model and text file format
//! * [`verify`] — coverage and packing verification predicates
//! * [`bounds`] — lower bounds, exact known values, asymptotic targets
//! * [`hypergraph`] — the block hypergraph: uniformity, degree, codegrees
//! * [`construct`] — greedy / nibble / exact / packing constructors
//! * [`cachesim`] — FIFO and pinned-batch cache strategy simulation
//!
//! With the `parallel` feature (on by default) the brute-force
//! enumerations and candidate-scoring loops run on rayon; every kernel
//! also has an always-compiled sequential twin (`*_seq`) that produces
//! bit-identical results, so the feature only changes wall time.

pub mod bounds;
pub mod cachesim;
pub mod combin;
pub mod construct;
pub mod error;
pub mod hypergraph;
pub mod sequence;
pub mod verify;

pub use error::{Error, Result};
pub use sequence::{RadiusSpec, Sequence};
pub use verify::{verify_packing, verify_radius, CoverageReport};
