use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator index {index} out of range for {count} generators")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("abelian group is infinite (free rank {0})")]
    InfiniteGroup(usize),
    #[error("relator {relator} does not map to the identity of the quotient")]
    NotHomomorphism { relator: usize },
    #[error("the quotient map is not surjective")]
    NotSurjective,
    #[error("depth is not defined at the trivial character")]
    TrivialCharacter,
    #[error("mixed cyclotomic levels {0} and {1}")]
    MixedLevels(u64, u64),
    #[error("cyclotomic level {level} exceeds the bound {bound}")]
    LevelTooLarge { level: u64, bound: u64 },
    #[error("expected {expected} entries, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("the permutation action is not transitive")]
    NotTransitive,
    #[error("{degree} cosets exceed the coset limit {limit}")]
    CosetLimit { degree: usize, limit: usize },
    #[error("generator matching mismatch: {0}")]
    GeneratorMatching(String),
    #[error("index {index} does not divide {lcm}, the lcm of the other indices")]
    NotUniformizing { index: u64, lcm: u64 },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// An internal double-entry check failed.
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for violations of an operation's preconditions, as opposed to
    /// malformed input or internal inconsistencies.
    pub fn is_precondition(&self) -> bool {
        !matches!(
            self,
            Error::Inconsistent(_)
                | Error::InvalidInput(_)
                | Error::Parse(_)
                | Error::UnknownFixture(_)
        )
    }
}
