use thiserror::Error;

/// Library-wide error type.
///
/// Every mathematical refusal carries enough context to explain *why* the
/// requested object cannot exist, not just that construction failed. The
/// [`Error::reason`] slug is the stable machine-readable identifier used by
/// the CLI; the `Display` text is for humans and may change.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("circle mismatch: {0}")]
    CircleMismatch(String),

    #[error("base mismatch: maps have bases m={0} and m={1}")]
    BaseMismatch(u32, u32),

    #[error("not a group element: source circle S_{0} differs from target circle S_{1}")]
    NotGroupElement(String, String),

    #[error("point {0} lies outside the map domain")]
    OutOfDomain(String),

    #[error("intervals are not PL_m-equivalent: {0}")]
    NotEquivalent(String),

    #[error("circle circumferences are not congruent mod m-1: {0}")]
    CongruenceFails(String),

    #[error("no finite order found within the iteration cap {0}")]
    OrderNotFound(u32),

    #[error("map does not have order {0}: {1}")]
    WrongOrder(u32, String),

    #[error("rotation number {0} differs from the expected {1}")]
    RotationMismatch(String, String),

    #[error("T_{{{r},{m}}} has no element of order {q}: gcd(m-1, q) = {d} does not divide r")]
    NoTorsion { r: u32, m: u32, q: u32, d: u32 },

    #[error("a = {0} is not admissible: {1}")]
    NotAdmissible(String, String),

    #[error("p = {0} and q = {1} are not coprime")]
    NotCoprime(u32, u32),

    #[error("residue {0} mod {1} is not realizable for this (r, m, q)")]
    ResidueNotRealizable(u32, u32),

    #[error("elements are not conjugate: {0}")]
    DescriptorMismatch(String),
}

impl Error {
    /// Stable machine-readable identifier for each refusal, exposed verbatim
    /// in CLI JSON output.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse-error",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::InvalidMap(_) => "invalid-map",
            Error::DomainMismatch(_) => "domain-mismatch",
            Error::CircleMismatch(_) => "circle-mismatch",
            Error::BaseMismatch(_, _) => "base-mismatch",
            Error::NotGroupElement(_, _) => "not-a-group-element",
            Error::OutOfDomain(_) => "out-of-domain",
            Error::NotEquivalent(_) => "not-equivalent",
            Error::CongruenceFails(_) => "congruence-fails",
            Error::OrderNotFound(_) => "order-not-found",
            Error::WrongOrder(_, _) => "wrong-order",
            Error::RotationMismatch(_, _) => "rotation-mismatch",
            Error::NoTorsion { .. } => "no-torsion-element",
            Error::NotAdmissible(_, _) => "not-admissible",
            Error::NotCoprime(_, _) => "not-coprime",
            Error::ResidueNotRealizable(_, _) => "residue-not-realizable",
            Error::DescriptorMismatch(_) => "descriptor-mismatch",
        }
    }

    /// True for errors caused by ill-formed *input* (syntax, bad flags, map
    /// documents that violate the geometric well-formedness rules), as
    /// opposed to mathematically well-posed requests that must be refused.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse(_) | Error::InvalidArgument(_) | Error::InvalidMap(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
