//! Path-algebra arithmetic: quivers, paths, potentials, cyclic derivatives,
//! relation ideals with membership certificates, and the Euler form.

pub mod chi;
pub mod ideal;
pub mod parse;
pub mod poly;
pub mod potential;
pub mod quiver;
pub mod rep;

pub use chi::{block_dims, chi_form, fixed_point_parity, BlockDims, DimVector};
pub use ideal::{ideal_membership, CertTerm, Certificate, IdealReducer, MembershipError};
pub use poly::{NCPoly, Path, PolyError};
pub use potential::{canonical_rotation, cyclic_derivative, relations_from_potential, Potential, PotentialError, Relation, RelationSet};
pub use quiver::{Arrow, Quiver, QuiverError, QuiverJson, Vertex};
pub use rep::{numeric_relation_residual, Rep, RepError};
