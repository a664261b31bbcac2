//! Exact computations with group rings of finite groups: coefficient
//! rings, finite groups given by Cayley tables, group-ring arithmetic and
//! unit inversion, and the decision procedures for hypercentral unit
//! groups and hyperbolicity of unit groups.

pub mod analysis;
pub mod coeff;
pub mod groupring;
pub mod groups;

pub use analysis::AnalysisError;
pub use coeff::{CoeffError, CoeffRing, FieldDescriptor, FunctionField, GaloisField, Integers};
pub use groupring::{GroupRingElement, GroupRingError};
pub use groups::{FiniteGroup, GroupError, StructuredGroup, Subgroup};
