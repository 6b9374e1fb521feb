//! Directional distance measures between discretised fuzzy sets.
//!
//! The signed interval kernel keeps the direction of the larger endpoint
//! difference, so distances built on it say which set lies further right and
//! by how much. Module map:
//!
//! * [`fuzzy`]: fuzzy sets, α-cuts, normalisation, the text set format.
//! * [`metrics`]: interval kernels and the α-cut measures built on them,
//!   including the non-normal and non-convex extensions.
//! * [`ingest`]: MovieLens 100k parsing and rating-histogram fuzzification.
//! * [`cli`]: the `fuzzdist` command-line tool.

pub mod cli;
pub mod fuzzy;
pub mod ingest;
pub mod metrics;
pub mod samples;

pub use fuzzy::{AlphaCutSet, AlphaGrid, FuzzyError, FuzzySet, Interval, MembershipPoint};
pub use ingest::{Dataset, FuzzifyMode, IngestError, RatingHistogram, RatingRecord};
pub use metrics::{CutResolution, DistanceReport, Measure, MeasureParams, MetricError};
