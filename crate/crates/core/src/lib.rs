pub mod error;
pub mod partition;
pub mod scalar;

pub use error::{Error, Result};
pub use partition::{Composition, DescentSet, Partition};
pub use scalar::{Rational, Scalar};
pub mod linalg;
pub mod symfunc;
pub use symfunc::{Basis, QSymFunc, SymFunc};
pub mod group_algebra;
pub mod perm;
pub mod trace;
pub mod graph;
pub mod poset;
pub mod tableaux;
pub mod chromatic;
pub mod cli;
pub mod report;
pub mod tnn;
pub mod verify;
