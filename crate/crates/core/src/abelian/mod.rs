//! Integer Smith normal form, abelianization, and characters of finite
//! abelian quotients.

mod character;
mod matrix;
mod snf;
mod structure;

pub use character::{
    characters, lcm_of, pull_back, Character, CharacterIter, GeneratorCharacter, QuotientMap,
};
pub use matrix::Matrix;
pub use snf::{cokernel_invariants, smith_diagonal, smith_normal_form, CokernelInvariants, Smith};
pub use structure::{abelian_invariants, h1, AbelianInvariants, AbelianStructure};
