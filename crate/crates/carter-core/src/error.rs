use core::fmt;

/// Errors shared across the whole crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two permutations (or a permutation and a group) act on different
    /// numbers of points.
    MixedDegree { expected: usize, found: usize },
    /// An image array is not a bijection.
    MalformedPermutation,
    /// An element is not a member of the group it was passed with.
    NotAMember,
    /// A claimed subgroup has a generator outside its parent.
    NotASubgroup,
    /// A subgroup that must be normal is not.
    NotNormal,
    /// The group exceeds the configured enumeration limit.
    GroupTooLarge { order: u64, limit: u64 },
    /// Element-action realization requested for a section with nontrivial
    /// center.
    NontrivialCenter,
    /// The subgroup is not a minimal normal subgroup of its parent.
    NotMinimalNormal,
    /// Decomposition into non-abelian simple factors was requested for an
    /// abelian (more generally soluble) subgroup.
    AbelianFactor,
    /// A subgroup required to be Carter is not.
    NotCarter,
    /// The designated element is not a nontrivial central element.
    NotCentral,
    /// A centralizer required to satisfy condition (*) does not.
    StarFails,
    /// The group does not permute the simple factors transitively.
    NotTransitive,
    /// C_G(B) is nontrivial, so the wreath embedding is not faithful.
    CentralizerNotTrivial,
    /// Only one simple factor: there is no block system to build.
    NoBlockSystem,
    /// No block system yields a cyclic quotient of prime order.
    NoPrimeBlockAction,
    /// A catalog query named a family outside the table.
    UnknownFamily,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MixedDegree { expected, found } => {
                write!(f, "mixed degrees: expected {expected}, found {found}")
            }
            Error::MalformedPermutation => write!(f, "image array is not a bijection"),
            Error::NotAMember => write!(f, "permutation is not a member of the group"),
            Error::NotASubgroup => write!(f, "generators are not contained in the parent group"),
            Error::NotNormal => write!(f, "subgroup is not normal"),
            Error::GroupTooLarge { order, limit } => {
                write!(f, "group of order {order} exceeds limit {limit}")
            }
            Error::NontrivialCenter => write!(f, "section has nontrivial center"),
            Error::NotMinimalNormal => write!(f, "subgroup is not a minimal normal subgroup"),
            Error::AbelianFactor => write!(f, "abelian subgroup has no non-abelian simple factors"),
            Error::NotCarter => write!(f, "subgroup is not a Carter subgroup"),
            Error::NotCentral => write!(f, "element is not a nontrivial central element"),
            Error::StarFails => write!(f, "centralizer does not satisfy condition (*)"),
            Error::NotTransitive => write!(f, "group does not permute the simple factors transitively"),
            Error::CentralizerNotTrivial => write!(f, "centralizer of the socle factor product is nontrivial"),
            Error::NoBlockSystem => write!(f, "single simple factor: no block system"),
            Error::NoPrimeBlockAction => write!(f, "no block system with cyclic prime quotient"),
            Error::UnknownFamily => write!(f, "family is not listed in the catalog"),
        }
    }
}

impl core::error::Error for Error {}
