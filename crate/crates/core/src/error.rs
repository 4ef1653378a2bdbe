use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported tower index {0}; expected 1, 2 or 4")]
    UnsupportedTowerIndex(u32),
    #[error("zero denominator in rational function")]
    ZeroDenominator,
    #[error("rational functions live on different curves")]
    RelationMismatch,
    #[error("Golay construction failed validation: {0}")]
    GolayValidation(String),
    #[error("{what}: expected {expected}, found {found}")]
    CountMismatch {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("vector is not in the Leech lattice: {0}")]
    NotInLattice(String),
    #[error("pairing out of range: {0}")]
    PairingOutOfRange(String),
    #[error("partition not found: {0}")]
    PartitionNotFound(String),
    #[error("degree violation: {0}")]
    DegreeViolation(String),
    #[error("point is not on the curve: {0}")]
    PointOffCurve(String),
    #[error("curves share a common component")]
    CommonComponent,
    #[error("intersection point is not isolated along either ruling")]
    NotIsolated,
    #[error("zero pair (0, 0) does not define a divisor")]
    ZeroPair,
    #[error("singular linear system: {0}")]
    SingularSystem(String),
    #[error("identity failed: {0}")]
    IdentityFailure(String),
    #[error("both differentials vanish; tangent direction undefined")]
    InseparablePair,
    #[error("fixture parse error: {0}")]
    Fixture(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}

pub type Result<T> = std::result::Result<T, Error>;
