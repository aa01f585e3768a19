use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator {generator} is not a permutation of 1..{degree}: bad image at position {position}")]
    InvalidPermutation {
        generator: usize,
        position: usize,
        degree: usize,
    },

    #[error("group closure exceeds the size cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("element index {0} is out of range")]
    ElementOutOfRange(usize),

    #[error("the given element set is not a subgroup")]
    NotSubgroup,

    #[error("class functions live on different groups")]
    GroupMismatch,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("expected a subgroup of index 2, got index {0}")]
    IndexNotTwo(usize),

    #[error("character is not invariant under the overgroup")]
    NotInvariant,

    #[error(
        "class function is not a character: irreducible {index} has multiplicity {multiplicity}"
    )]
    NotACharacter { index: usize, multiplicity: i64 },

    #[error("no prime p = 1 (mod {exponent}) with p > {lower} below the search bound")]
    NoSuitablePrime { exponent: usize, lower: usize },

    #[error("the O(2) assignment is not a homomorphism: inconsistent image for element {element}")]
    InconsistentAction { element: usize },

    #[error("expected {expected} O(2) images, one per generator, got {got}")]
    GeneratorCountMismatch { expected: usize, got: usize },

    #[error("the point mu only exists for dihedral images")]
    NoMuPoint,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A computed object violated a structural theorem the pipeline relies on.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
