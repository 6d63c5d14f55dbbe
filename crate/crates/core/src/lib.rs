//! Degree-constrained bipartite augmentation with matroid and supermodular
//! demand constraints.
//!
//! Subsets are `u32` bitmasks over small grounds. Every checker evaluates its
//! inequality family exhaustively and returns a concrete certificate on
//! failure; constructors return graphs that can be re-validated with
//! [`validate`].

pub mod acceptance;
pub mod bigraph;
pub mod cover;
pub mod error;
pub mod feasibility;
pub mod fuzz;
pub mod gen;
pub mod io;
pub mod mask;
pub mod matroid;
pub mod partition;
pub mod setfun;
pub mod validate;

pub use bigraph::{Bigraph, DegreeSpec, Edge, Grounds};
pub use error::{Error, Result};
pub use feasibility::{Condition, Degrees, Instance, Verdict, ViolationCert};
pub use mask::Mask;
pub use matroid::Matroid;
pub use setfun::SetFunctionTable;
