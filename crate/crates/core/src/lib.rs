//! Exact computations around rectangular Kronecker coefficients.
//!
//! - [`partition`]: partitions, rectangles and triples.
//! - [`symfun`]: characters of the symmetric group and power-sum symmetric functions.
//! - [`coefficients`]: Kronecker, Littlewood–Richardson and plethysm oracles.
//! - [`hooks`]: closed forms for hook and two-row/two-column coefficients.
//! - [`positivity`]: positivity certificates and their builders.
//! - [`gct`]: shape filters and the no-go verdict procedure.
//! - [`cli`]: the `kronforge` command line.

pub mod error;
pub mod gct;
pub mod hooks;
pub mod partition;
pub mod cli;
pub mod coefficients;
pub mod positivity;
pub mod symfun;

pub use error::{Error, Result};
pub use partition::{KroneckerTriple, Partition, RectangleShape};
