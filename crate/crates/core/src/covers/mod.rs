//! Permutation monodromy of orbifold covers, cover classification, and
//! Reidemeister–Schreier subgroup presentations.

mod analyze;
mod perm;
mod rs;
mod saturation;

pub use analyze::{
    analyze_cover, analyze_fiber_data, euler_orb, CoverFlags, CoverReport, FiberData, FiberPoint,
    FiberReport, UpstairsPoint,
};
pub use perm::{validate_rep, PermRep, Permutation, Validation};
pub use rs::{reidemeister_schreier, DEFAULT_COSET_LIMIT};
pub use saturation::{is_suborbifold, saturation_check, MeridianOrders};
