//! Totally nonnegative matrices, planar networks and immanants.

mod identities;
mod matrix;
mod network;

pub use identities::*;
pub use matrix::{immanant, parse_csv, power_immanant, to_csv, Matrix, MAX_ORDER};
pub use network::{Edge, EnumerationLimits, Path, PathCatalog, PathFamily, PlanarNetwork, Skeleton, MAX_NETWORK_VERTICES};
