//! Exact analysis of transversal gates on stabilizer codes.
//!
//! The crate covers Pauli and Clifford algebra on bit-packed symplectic
//! vectors, stabilizer groups with their logical frames and distances,
//! minimal-support subcodes, classical and CSS constructions (Reed-Muller
//! in particular), exact transversal-gate verification, and a dense
//! state-vector oracle used to cross-check the exact paths on small codes.

pub mod angle;
pub mod bits;
pub mod catalog;
pub mod classical;
pub mod clifford;
pub mod consistency;
pub mod distance;
pub mod error;
pub mod gate;
pub mod io;
pub mod oracle;
pub mod pauli;
pub mod report;
pub mod stabilizer;
pub mod subcode;
pub mod table1;
pub mod transversal;

pub use error::{Error, Result};
pub use pauli::{Letter, PauliOperator, Support};
pub use stabilizer::{CodeParameters, LogicalFrame, StabilizerGroup};
