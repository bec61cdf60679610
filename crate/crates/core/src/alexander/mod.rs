//! Fox calculus over `ℤ[H₁]`, depth of torsion characters, and pointwise
//! characteristic varieties.

mod depth;
mod fox;
mod laurent;

pub use depth::{
    character_length, charvar, depth, depth_table, restriction_report, DepthEntry,
    RestrictionReport, RestrictionRow,
};
pub use fox::{fox_jacobian, FoxJacobian};
pub use laurent::LaurentElement;
