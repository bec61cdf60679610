//! Exact arithmetic in cyclotomic fields `ℚ(ζ_N)` and rings `ℤ[ζ_N]`.

mod elem;
mod level;
mod rank;

pub use elem::Cyclo;
pub use level::{
    cyclotomic_level, cyclotomic_polynomial, level_bound, set_level_bound, CyclotomicLevel,
    DEFAULT_LEVEL_BOUND,
};
pub use rank::{rank_over_cyclotomic, rank_over_cyclotomic_integers};
