//! Exact and numerical verification for the family of K3 surfaces obtained
//! as 4-fold covers of five-nodal plane quartics: the quartic family and its
//! nodes, elliptic fibrations and Kodaira fibers, curve maps and the
//! splitting of the Jacobian fibration, lattice invariants, and the modular
//! groups acting on the period domain.

pub mod covers;
pub mod curves;
pub mod error;
pub mod fibration;
pub mod fields;
pub mod lattices;
pub mod moduli;
pub mod numeric;
pub mod quartic;
pub mod report;
pub mod suite;

pub use error::{CoreError, Result};
pub use report::VerificationReport;
