use thiserror::Error;

/// Errors produced by the surface, arc, intersection, construction and
/// search machinery.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("letter '{0}' does not appear exactly once in each direction")]
    UnpairedLetter(char),
    #[error("letter '{0}' appears twice in the same direction; gluing is not orientable")]
    NonOrientable(char),
    #[error("gluing with {pairs} side pair(s) has Euler characteristic {chi}; need chi < 0")]
    EulerTooLarge { pairs: usize, chi: i64 },
    #[error("invalid character '{0}' in gluing word")]
    BadCharacter(char),
    #[error("more than 26 side pairs requested")]
    AlphabetExhausted,
    #[error("malformed itinerary: {0}")]
    MalformedItinerary(String),
    #[error("arcs live on different surfaces: '{0}' vs '{1}'")]
    SurfaceMismatch(String, String),
    #[error("indistinguishable strands: distinct occurrences with identical itineraries in both directions")]
    IndistinguishableStrands,
    #[error("lift enumeration did not stabilise at radius {radius}; count is a lower bound: {lower_bound}")]
    NotStabilized { radius: usize, lower_bound: u64 },
    #[error("degenerate system: {0}")]
    DegenerateSystem(String),
    #[error("{divisor} does not divide {value}")]
    DivisibilityError { divisor: u64, value: u64 },
    #[error("time budget of {0:?} exceeded")]
    BudgetExceeded(std::time::Duration),
    #[error("point count {0} exceeds the exhaustive search bound {1}")]
    TooLarge(usize, usize),
    #[error("chord family is not pairwise intersecting: {0:?} and {1:?} are disjoint")]
    NotPairwiseIntersecting((usize, usize), (usize, usize)),
    #[error("inessential arc rejected: {0}")]
    InessentialArc(String),
    #[error("non-simple arc rejected (self-intersection {count}): {arc}")]
    NonSimpleArc { arc: String, count: u64 },
    #[error("invalid cusp id {0}; surface has {1} puncture(s)")]
    InvalidCusp(usize, usize),
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
