//! Extended persistent homology for filtrations of graded subgroups of a chain
//! complex over a prime field, with front-ends for path homology of weighted
//! digraphs and embedded homology of hypergraphs.
//!
//! The pipeline: a front-end ([`digraph`], [`hypergraph`]) produces an
//! [`extended::ExtendedInput`]; [`extended::extended_barcode`] reduces the
//! boundary matrices of its extended filtration ([`persistence`]);
//! [`diagram`] maps the barcode to critical values and compares diagrams.
//! [`oracle`] recomputes every rank by dense elimination for verification.

pub mod cli;
pub mod diagram;
pub mod digraph;
pub mod extended;
pub mod frontend;
pub mod graded;
pub mod hypergraph;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod persistence;
pub mod random;
pub mod stability;

pub use diagram::{bottleneck, diagrams, DiagramPoint, ExtendedDiagram};
pub use digraph::{build_pph_input, WeightedDigraph};
pub use extended::{extended_barcode, ExtendedBarcode, ExtendedInput, ExtendedReading, IntervalKind};
pub use graded::{FilteredGradedSubgroup, GradedSubgroup, ValidationError};
pub use hypergraph::{build_hyper_input, FilteredHypergraph};
pub use linalg::PrimeField;
pub use persistence::{persistent_homology, Barcode, Interval};
